//! Per-cell kernels and partition sums.
//!
//! A kernel assigns each cell `u` a factor `(t + β(u))/γ(u)` (or `β(u)/γ(u)`
//! in the t-free case), where `β` is one of the cell statistics and `γ` is a
//! positive hook power. The partition sum over `λ ⊢ n` of the product of
//! these factors is an exact polynomial in `t`. Per partition, numerator and
//! denominator accumulate separately and reduce once at the end.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cells::{Cell, CellView};
use crate::partition::{all_partitions, Partition};
use crate::poly::Poly;
use crate::rational::{rat, Rational};
use crate::series::QSeries;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NumeratorStat {
    Csp,
    Co,
    Content,
    Hook,
    Csp2,
    Co2,
    Content2,
    Hook2,
    Csp2Minus1,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DenominatorStat {
    Hook,
    Hook2,
}

/// Per-cell factor `(t + numerator)/denominator`, or `numerator/denominator`
/// without the `t` term.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct KernelSpec {
    pub with_t: bool,
    pub numerator: NumeratorStat,
    pub denominator: DenominatorStat,
}

impl KernelSpec {
    pub const T_PLUS_CSP_OVER_H: KernelSpec = KernelSpec::with_t(NumeratorStat::Csp, DenominatorStat::Hook);
    pub const T_PLUS_CO_OVER_H: KernelSpec = KernelSpec::with_t(NumeratorStat::Co, DenominatorStat::Hook);
    pub const T_PLUS_CSP2_OVER_H2: KernelSpec =
        KernelSpec::with_t(NumeratorStat::Csp2, DenominatorStat::Hook2);
    pub const T_PLUS_CO2_OVER_H2: KernelSpec =
        KernelSpec::with_t(NumeratorStat::Co2, DenominatorStat::Hook2);
    pub const T_PLUS_C2_OVER_H2: KernelSpec =
        KernelSpec::with_t(NumeratorStat::Content2, DenominatorStat::Hook2);
    pub const T_PLUS_H2_OVER_H2: KernelSpec =
        KernelSpec::with_t(NumeratorStat::Hook2, DenominatorStat::Hook2);
    pub const CSP_OVER_H: KernelSpec = KernelSpec::t_free(NumeratorStat::Csp, DenominatorStat::Hook);
    pub const CO_OVER_H: KernelSpec = KernelSpec::t_free(NumeratorStat::Co, DenominatorStat::Hook);
    pub const CSP2_OVER_H2: KernelSpec =
        KernelSpec::t_free(NumeratorStat::Csp2, DenominatorStat::Hook2);
    pub const CO2_OVER_H2: KernelSpec =
        KernelSpec::t_free(NumeratorStat::Co2, DenominatorStat::Hook2);
    pub const CSP2_MINUS1_OVER_H2: KernelSpec =
        KernelSpec::t_free(NumeratorStat::Csp2Minus1, DenominatorStat::Hook2);

    pub const fn with_t(numerator: NumeratorStat, denominator: DenominatorStat) -> Self {
        KernelSpec {
            with_t: true,
            numerator,
            denominator,
        }
    }

    pub const fn t_free(numerator: NumeratorStat, denominator: DenominatorStat) -> Self {
        KernelSpec {
            with_t: false,
            numerator,
            denominator,
        }
    }
}

fn numerator_value(view: &CellView, c: Cell, stat: NumeratorStat) -> i64 {
    match stat {
        NumeratorStat::Csp => view.symplectic_content(c).unwrap(),
        NumeratorStat::Co => view.orthogonal_content(c).unwrap(),
        NumeratorStat::Content => view.content(c).unwrap(),
        NumeratorStat::Hook => view.hook(c).unwrap() as i64,
        NumeratorStat::Csp2 => {
            let v = view.symplectic_content(c).unwrap();
            v * v
        }
        NumeratorStat::Co2 => {
            let v = view.orthogonal_content(c).unwrap();
            v * v
        }
        NumeratorStat::Content2 => {
            let v = view.content(c).unwrap();
            v * v
        }
        NumeratorStat::Hook2 => {
            let v = view.hook(c).unwrap() as i64;
            v * v
        }
        NumeratorStat::Csp2Minus1 => {
            let v = view.symplectic_content(c).unwrap();
            v * v - 1
        }
    }
}

fn denominator_value(view: &CellView, c: Cell, stat: DenominatorStat) -> i64 {
    let h = view.hook(c).unwrap() as i64;
    match stat {
        DenominatorStat::Hook => h,
        DenominatorStat::Hook2 => h * h,
    }
}

// Running integer product that spills into a BigInt only on i128 overflow.
struct IntProduct {
    small: i128,
    big: BigInt,
}

impl IntProduct {
    fn new() -> Self {
        IntProduct {
            small: 1,
            big: BigInt::one(),
        }
    }

    fn mul(&mut self, v: i64) {
        match self.small.checked_mul(v as i128) {
            Some(s) => self.small = s,
            None => {
                self.big *= BigInt::from(self.small);
                self.small = v as i128;
            }
        }
    }

    fn finish(self) -> BigInt {
        self.big * BigInt::from(self.small)
    }
}

/// Product of the kernel over the cells of one partition, as an exact
/// polynomial in `t` (a constant for t-free kernels).
pub fn kernel_product(lambda: &Partition, kernel: &KernelSpec) -> Poly {
    let view = CellView::new(lambda);
    let mut den = IntProduct::new();
    if kernel.with_t {
        // numerator = ∏ (t + β), built coefficient-wise over integers
        let mut num: Vec<BigInt> = vec![BigInt::one()];
        for (i, j) in lambda.cells() {
            let c = Cell::new(i, j);
            let beta = BigInt::from(numerator_value(&view, c, kernel.numerator));
            den.mul(denominator_value(&view, c, kernel.denominator));
            num.push(BigInt::zero());
            for k in (0..num.len() - 1).rev() {
                let shifted = num[k].clone();
                num[k] = &num[k] * &beta;
                num[k + 1] += shifted;
            }
        }
        let d = den.finish();
        Poly::from_coeffs(
            num.into_iter()
                .map(|c| Rational::new(c, d.clone()))
                .collect(),
        )
    } else {
        let mut num = IntProduct::new();
        for (i, j) in lambda.cells() {
            let c = Cell::new(i, j);
            let beta = numerator_value(&view, c, kernel.numerator);
            if beta == 0 {
                return Poly::zero();
            }
            num.mul(beta);
            den.mul(denominator_value(&view, c, kernel.denominator));
        }
        Poly::constant(Rational::new(num.finish(), den.finish()))
    }
}

/// Kernel product with `t` specialized to an integer before multiplying;
/// exact and much cheaper than evaluating the symbolic polynomial.
pub fn kernel_product_at(lambda: &Partition, kernel: &KernelSpec, t: i64) -> Rational {
    let view = CellView::new(lambda);
    let mut num = IntProduct::new();
    let mut den = IntProduct::new();
    for (i, j) in lambda.cells() {
        let c = Cell::new(i, j);
        let mut beta = numerator_value(&view, c, kernel.numerator);
        if kernel.with_t {
            beta += t;
        }
        if beta == 0 {
            return rat(0);
        }
        num.mul(beta);
        den.mul(denominator_value(&view, c, kernel.denominator));
    }
    Rational::new(num.finish(), den.finish())
}

/// `Σ_{λ⊢n} ∏_{u∈λ} kernel(u)`; the empty sum convention gives 1 at `n = 0`.
pub fn partition_sum(n: usize, kernel: &KernelSpec) -> Poly {
    let mut acc = Poly::zero();
    for lambda in all_partitions(n) {
        acc = acc.add(&kernel_product(&lambda, kernel));
    }
    acc
}

/// `partition_sum` with `t` specialized to an integer.
pub fn partition_sum_at(n: usize, kernel: &KernelSpec, t: i64) -> Rational {
    let mut acc = rat(0);
    for lambda in all_partitions(n) {
        acc += kernel_product_at(&lambda, kernel, t);
    }
    acc
}

/// The q-series whose coefficient of `q^n` is `partition_sum(n, kernel)`.
/// Coefficients are independent, so they are computed in parallel; exact
/// addition makes the result schedule-independent.
pub fn lhs_series(kernel: &KernelSpec, order: usize) -> QSeries {
    let coeffs: Vec<Poly> = (0..=order)
        .into_par_iter()
        .map(|n| partition_sum(n, kernel))
        .collect();
    QSeries::from_fn(order, |n| coeffs[n].clone())
}

/// `lhs_series` with `t` specialized to an integer.
pub fn lhs_series_at(kernel: &KernelSpec, t: i64, order: usize) -> QSeries {
    let coeffs: Vec<Rational> = (0..=order)
        .into_par_iter()
        .map(|n| partition_sum_at(n, kernel, t))
        .collect();
    QSeries::from_fn(order, |n| Poly::constant(coeffs[n].clone()))
}
