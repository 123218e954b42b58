//! Truncated formal power series in `q` with polynomial coefficients.
//!
//! A `QSeries` of order `N` carries exact coefficients for `q^0..q^N` and all
//! arithmetic is performed mod `q^{N+1}`. Coefficients are `Poly` values in a
//! single formal variable (`t` for the hook-content identities, `z` for the
//! bivariate rank series); the two never meet in one series. Mixing
//! truncation orders is an error, not an implicit re-truncation.

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{gen_binom, Poly};
use crate::rational::{rat, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term is not an invertible rational constant")]
    NonUnitConstantTerm,
    #[error("factor q-power must be at least 1")]
    ZeroQPower,
    #[error("infinite product needs a positive q-power in the base")]
    NonconvergentPochhammer,
    #[error("coefficient degree {degree} exceeds the cap {cap}")]
    ZDegreeCapExceeded { degree: usize, cap: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<Poly>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            order,
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// `c · q^m` (zero once `m` exceeds the order).
    pub fn monomial(order: usize, m: usize, c: Poly) -> Self {
        let mut s = QSeries::zero(order);
        if m <= order {
            s.coeffs[m] = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Poly) -> Self {
        QSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `q^n`.
    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    fn check_order(&self, other: &QSeries) -> Result<(), SeriesError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        self.check_order(other)?;
        Ok(QSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(Poly::neg).collect(),
        }
    }

    pub fn mul(&self, other: &QSeries) -> Result<QSeries, SeriesError> {
        self.check_order(other)?;
        let mut out = vec![Poly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Ok(QSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// Multiplicative inverse mod `q^{N+1}`; the constant term must be an
    /// invertible rational constant.
    pub fn inv(&self) -> Result<QSeries, SeriesError> {
        let c0 = self.coeffs[0]
            .as_constant()
            .ok_or(SeriesError::NonUnitConstantTerm)?;
        if c0.is_zero() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        let inv0 = Poly::constant(rat(1) / c0);
        let mut out = vec![Poly::zero(); self.order + 1];
        out[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&out[n - k]));
            }
            out[n] = acc.neg().mul(&inv0);
        }
        Ok(QSeries {
            order: self.order,
            coeffs: out,
        })
    }

    pub fn scale_poly(&self, p: &Poly) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    /// Multiplies by `q^m`, truncating at the order.
    pub fn shifted(&self, m: usize) -> QSeries {
        let mut out = vec![Poly::zero(); self.order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + m > self.order {
                break;
            }
            out[n + m] = c.clone();
        }
        QSeries {
            order: self.order,
            coeffs: out,
        }
    }

    /// Specializes the coefficient variable to an exact point.
    pub fn eval_coeffs(&self, x: &Rational) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.eval(x)).collect()
    }

    /// Largest coefficient degree present (0 for constant or zero series).
    pub fn max_coeff_degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|c| c.deg())
            .max()
            .unwrap_or(0)
    }

    /// JSON form: one entry per nonzero coefficient, ascending in `q`.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| serde_json::json!({"q": n, "coeff": c.to_json()}))
            .collect();
        serde_json::json!(entries)
    }
}

/// `(1 - q^m)^E` (or `(1 + q^m)^E` when `plus`) for a polynomial exponent,
/// expanded by the generalized binomial series.
pub fn eta_pow(m: usize, exponent: &Poly, plus: bool, order: usize) -> Result<QSeries, SeriesError> {
    if m == 0 {
        return Err(SeriesError::ZeroQPower);
    }
    let mut s = QSeries::zero(order);
    let mut k = 0;
    while m * k <= order {
        let mut c = gen_binom(exponent, k);
        if !plus && k % 2 == 1 {
            c = c.neg();
        }
        s.coeffs[m * k] = c;
        k += 1;
    }
    Ok(s)
}

/// One factor family of an eta-style product: `(1 ∓ q^{a j + b})^E` over all
/// `j ≥ 1`.
#[derive(Clone, Debug)]
pub struct EtaFactorSpec {
    pub step: usize,
    pub offset: i64,
    pub exponent: Poly,
    pub plus: bool,
}

impl EtaFactorSpec {
    /// `(1 - q^{a j + b})^E`; requires `a ≥ 1` and `a + b ≥ 1`.
    pub fn new(step: usize, offset: i64, exponent: Poly) -> Result<Self, SeriesError> {
        Self::with_sign(step, offset, exponent, false)
    }

    pub fn with_sign(
        step: usize,
        offset: i64,
        exponent: Poly,
        plus: bool,
    ) -> Result<Self, SeriesError> {
        if step == 0 || step as i64 + offset < 1 {
            return Err(SeriesError::ZeroQPower);
        }
        Ok(EtaFactorSpec {
            step,
            offset,
            exponent,
            plus,
        })
    }
}

/// Product over `j ≥ 1` of all factor families, truncated: the factor at `j`
/// enters iff its q-power `a j + b` is at most the order (later factors are
/// 1 mod `q^{N+1}`).
pub fn eta_product(factors: &[EtaFactorSpec], order: usize) -> Result<QSeries, SeriesError> {
    let mut acc = QSeries::one(order);
    for f in factors {
        let mut j = 1i64;
        loop {
            let m = f.step as i64 * j + f.offset;
            if m > order as i64 {
                break;
            }
            debug_assert!(m >= 1);
            acc = acc.mul(&eta_pow(m as usize, &f.exponent, f.plus, order)?)?;
            j += 1;
        }
    }
    Ok(acc)
}

/// Base of a q-Pochhammer symbol: `1`, the formal coefficient variable, or a
/// rational constant, each times a power of `q`.
#[derive(Clone, Debug)]
pub enum PochBase {
    One,
    Z,
    Scalar(Rational),
}

impl PochBase {
    fn as_poly(&self) -> Poly {
        match self {
            PochBase::One => Poly::one(),
            PochBase::Z => Poly::var(),
            PochBase::Scalar(c) => Poly::constant(c.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum PochKind {
    Finite(usize),
    Infinite,
}

/// `(a; q^step)_kind` with `a = ±base·q^qpow`: the product
/// `∏_i (1 - a q^{step·i})`, `negated` meaning `a` carries a minus sign.
/// Infinite products require `qpow ≥ 1` so that all but finitely many
/// factors are 1 mod `q^{N+1}`.
pub fn pochhammer(
    base: PochBase,
    negated: bool,
    qpow: usize,
    step: usize,
    kind: PochKind,
    order: usize,
) -> Result<QSeries, SeriesError> {
    let base_poly = if negated {
        base.as_poly().neg()
    } else {
        base.as_poly()
    };
    let mut acc = QSeries::one(order);
    let mut i = 0usize;
    loop {
        let power = qpow + step * i;
        match kind {
            PochKind::Finite(n) => {
                if i >= n {
                    break;
                }
            }
            PochKind::Infinite => {
                if qpow == 0 || step == 0 {
                    return Err(SeriesError::NonconvergentPochhammer);
                }
                if power > order {
                    break;
                }
            }
        }
        // factor 1 - base·q^power
        let factor = QSeries::one(order)
            .sub(&QSeries::monomial(order, power, base_poly.clone()))?;
        acc = acc.mul(&factor)?;
        i += 1;
    }
    Ok(acc)
}
