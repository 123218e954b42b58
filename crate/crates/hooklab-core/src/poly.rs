//! Dense univariate polynomials over `Rational`.
//!
//! One polynomial type serves both formal variables in play (`t` in the
//! hook-content identities, `z` in the bivariate rank series); a value never
//! mixes the two. Coefficients are stored by ascending exponent with no
//! trailing zeros, so the zero polynomial is the empty vector and equality
//! is plain structural equality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![rat(0), rat(1)])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn constant_i64(c: i64) -> Self {
        Poly::constant(rat(c))
    }

    /// Builds from ascending-exponent coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![rat(0); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// True when the polynomial is a constant (degree ≤ 0).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(rat(0)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at an exact point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rational {
        self.eval(&rat(x))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Exponent → coefficient map with exponents as decimal-string keys and
    /// coefficients in `num/den` form; only nonzero entries appear.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = BTreeMap::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                map.insert(k.to_string(), format_rational(c));
            }
        }
        serde_json::json!(map)
    }

    /// Human-readable text with a caller-chosen variable name.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign_negative = c.numer().is_negative();
            if out.is_empty() {
                if sign_negative {
                    out.push('-');
                }
            } else {
                out.push_str(if sign_negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let coeff_txt = format_rational(&mag);
            match k {
                0 => out.push_str(&coeff_txt),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&coeff_txt);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("t"))
    }
}

/// Generalized binomial coefficient `binom(E, k)` for a polynomial upper
/// argument: the falling-factorial product `E(E-1)...(E-k+1) / k!`.
pub fn gen_binom(upper: &Poly, k: usize) -> Poly {
    let mut num = Poly::one();
    for i in 0..k {
        num = num.mul(&upper.sub(&Poly::constant_i64(i as i64)));
    }
    let mut fact = BigInt::one();
    for i in 2..=k {
        fact *= BigInt::from(i);
    }
    num.scale(&Rational::new(BigInt::one(), fact))
}

/// Integer binomial coefficient by the Pascal recursion; test oracle for
/// `gen_binom` specializations.
pub fn binom_pascal(m: usize, k: usize) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for _ in 0..m {
        let mut next = vec![BigInt::one()];
        for i in 1..row.len() {
            next.push(&row[i - 1] + &row[i]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row[k].clone()
}
