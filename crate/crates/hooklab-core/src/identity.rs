//! Named identities: partition-sum sides, product sides, and
//! coefficient-by-coefficient verification.
//!
//! A builtin identity is a list of two or more series builders that must
//! agree to the requested order. Verification compares every member against
//! the first and reports the lowest failing q-order with both coefficients
//! and their difference.

use std::time::Instant;

use thiserror::Error;

use crate::dsl::{self, CompiledIdentity};
use crate::families::{self, FamilySpec};
use crate::kernel::{self, KernelSpec};
use crate::poly::{gen_binom, Poly};
use crate::series::{eta_product, EtaFactorSpec, QSeries, SeriesError};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("order {0} is too small; need at least 1")]
    OrderTooSmall(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Dsl(#[from] dsl::DslError),
}

/// Lowest q-order where two sides disagree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FirstFailure {
    pub q_order: usize,
    pub lhs: Poly,
    pub rhs: Poly,
    pub delta: Poly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub order: usize,
    pub passed: bool,
    pub first_failure: Option<FirstFailure>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    /// Compares every member against the first.
    pub fn from_members(identity: &str, members: &[QSeries], started: Instant) -> Self {
        let order = members.first().map_or(0, QSeries::order);
        let first_failure = compare_members(members);
        VerificationReport {
            identity: identity.to_string(),
            order,
            passed: first_failure.is_none(),
            first_failure,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }

    /// Schema: identity, order, status, first_failure, elapsed_ms. The
    /// timing field is zeroed unless explicitly requested so that reports
    /// are byte-identical across runs.
    pub fn to_json(&self, with_timing: bool) -> serde_json::Value {
        let first_failure = match &self.first_failure {
            None => serde_json::Value::Null,
            Some(f) => serde_json::json!({
                "q_order": f.q_order,
                "lhs": f.lhs.to_json(),
                "rhs": f.rhs.to_json(),
                "delta": f.delta.to_json(),
            }),
        };
        serde_json::json!({
            "identity": self.identity,
            "order": self.order,
            "status": self.status(),
            "first_failure": first_failure,
            "elapsed_ms": if with_timing { self.elapsed_ms } else { 0 },
        })
    }

    pub fn to_text(&self, with_timing: bool) -> String {
        let mut out = format!(
            "identity: {}\norder: {}\nstatus: {}\n",
            self.identity,
            self.order,
            self.status()
        );
        if let Some(f) = &self.first_failure {
            out.push_str(&format!(
                "first failure at q^{}\n  lhs:   {}\n  rhs:   {}\n  delta: {}\n",
                f.q_order, f.lhs, f.rhs, f.delta
            ));
        }
        if with_timing {
            out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        }
        out
    }
}

fn compare_members(members: &[QSeries]) -> Option<FirstFailure> {
    let base = members.first()?;
    let mut best: Option<FirstFailure> = None;
    for other in &members[1..] {
        debug_assert_eq!(base.order(), other.order());
        for n in 0..=base.order() {
            if best.as_ref().is_some_and(|b| b.q_order <= n) {
                break;
            }
            if base.coeff(n) != other.coeff(n) {
                best = Some(FirstFailure {
                    q_order: n,
                    lhs: base.coeff(n).clone(),
                    rhs: other.coeff(n).clone(),
                    delta: base.coeff(n).sub(other.coeff(n)),
                });
                break;
            }
        }
    }
    best
}

/// The named identities of the verification suite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Builtin {
    NekrasovOkounkov,
    Stanley,
    Conj62a,
    Conj62b,
    Conj63a,
    Thm63b,
    Thm62c,
    Cor63c,
    Thm214,
    OvercubicT2,
    EulerSyp0,
}

impl Builtin {
    pub const ALL: [Builtin; 11] = [
        Builtin::NekrasovOkounkov,
        Builtin::Stanley,
        Builtin::Conj62a,
        Builtin::Conj62b,
        Builtin::Conj63a,
        Builtin::Thm63b,
        Builtin::Thm62c,
        Builtin::Cor63c,
        Builtin::Thm214,
        Builtin::OvercubicT2,
        Builtin::EulerSyp0,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::NekrasovOkounkov => "nekrasov_okounkov",
            Builtin::Stanley => "stanley",
            Builtin::Conj62a => "conj_6_2a",
            Builtin::Conj62b => "conj_6_2b",
            Builtin::Conj63a => "conj_6_3a",
            Builtin::Thm63b => "thm_6_3b",
            Builtin::Thm62c => "thm_6_2c",
            Builtin::Cor63c => "cor_6_3c",
            Builtin::Thm214 => "thm_2_14",
            Builtin::OvercubicT2 => "overcubic_t2",
            Builtin::EulerSyp0 => "euler_syp0",
        }
    }

    pub fn parse(s: &str) -> Option<Builtin> {
        Builtin::ALL.iter().copied().find(|b| b.name() == s)
    }

    /// Identities whose coefficients are genuine polynomials in `t`.
    pub fn is_symbolic(&self) -> bool {
        matches!(
            self,
            Builtin::NekrasovOkounkov
                | Builtin::Stanley
                | Builtin::Conj62a
                | Builtin::Conj62b
                | Builtin::Conj63a
        )
    }

    pub fn default_order(&self) -> usize {
        if self.is_symbolic() {
            30
        } else {
            60
        }
    }

    /// DSL source where the identity is expressible in the single-variable
    /// grammar; the per-n signed, specialized, and enumerative identities
    /// stay builtin-only.
    pub fn dsl_text(&self) -> Option<&'static str> {
        match self {
            Builtin::NekrasovOkounkov => {
                Some("psum{(t+h^2)/h^2} == prodj((1-q^(1*j)))^(-1*t-1)")
            }
            Builtin::Stanley => Some("psum{(t+c^2)/h^2} == (1-q^(1))^(-1*t)"),
            Builtin::Conj62a => Some(
                "psum{(t+csp)/h} == prodj( (1-q^(8*j))^(binom(t+1,2)) \
                 * (1-q^(8*j-2))^(1-binom(t+1,2)) \
                 * (1-q^(4*j-1))^(t) * (1-q^(4*j-3))^(-1*t) \
                 * (1-q^(8*j-4))^(binom(t,2)-1) * (1-q^(8*j-6))^(1-binom(t,2)) )",
            ),
            Builtin::Conj62b => Some(
                "psum{(t+co)/h} == prodj( (1-q^(8*j))^(binom(t,2)) \
                 * (1-q^(8*j-6))^(1-binom(t,2)) \
                 * (1-q^(4*j-1))^(t) * (1-q^(4*j-3))^(-1*t) \
                 * (1-q^(8*j-4))^(binom(t+1,2)-1) * (1-q^(8*j-2))^(1-binom(t+1,2)) )",
            ),
            Builtin::Conj63a => {
                Some("psum{(t+csp^2)/h^2} == prodj( (1-q^(4*j-2))^(-1) * (1-q^(1*j))^(-1*t) )")
            }
            Builtin::Thm63b => Some("psum{csp^2/h^2} == prodj((1-q^(4*j-2)))^(-1)"),
            Builtin::Thm62c => Some("psum{csp/h} == prodj((1+q^(4*j-2)))^(-1)"),
            Builtin::Thm214 => Some("psum{(csp^2-1)/h^2} == prodj((1-q^(1*j)) / (1-q^(4*j-2)))"),
            Builtin::Cor63c | Builtin::OvercubicT2 | Builtin::EulerSyp0 => None,
        }
    }
}

fn t_poly() -> Poly {
    Poly::var()
}

fn minus_one() -> Poly {
    Poly::constant_i64(-1)
}

// prod_j 1/(1 - q^{4j-2})
fn inv_4jm2(order: usize) -> Result<QSeries, SeriesError> {
    eta_product(&[EtaFactorSpec::new(4, -2, minus_one())?], order)
}

fn conj_6_2a_rhs(order: usize) -> Result<QSeries, SeriesError> {
    let b_t1 = gen_binom(&t_poly().add(&Poly::one()), 2); // binom(t+1,2)
    let b_t = gen_binom(&t_poly(), 2); // binom(t,2)
    let one = Poly::one();
    eta_product(
        &[
            EtaFactorSpec::new(8, 0, b_t1.clone())?,
            EtaFactorSpec::new(8, -2, one.sub(&b_t1))?,
            EtaFactorSpec::new(4, -1, t_poly())?,
            EtaFactorSpec::new(4, -3, t_poly().neg())?,
            EtaFactorSpec::new(8, -4, b_t.sub(&one))?,
            EtaFactorSpec::new(8, -6, one.sub(&b_t))?,
        ],
        order,
    )
}

fn conj_6_2b_rhs(order: usize) -> Result<QSeries, SeriesError> {
    let b_t1 = gen_binom(&t_poly().add(&Poly::one()), 2);
    let b_t = gen_binom(&t_poly(), 2);
    let one = Poly::one();
    eta_product(
        &[
            EtaFactorSpec::new(8, 0, b_t.clone())?,
            EtaFactorSpec::new(8, -6, one.sub(&b_t))?,
            EtaFactorSpec::new(4, -1, t_poly())?,
            EtaFactorSpec::new(4, -3, t_poly().neg())?,
            EtaFactorSpec::new(8, -4, b_t1.sub(&one))?,
            EtaFactorSpec::new(8, -2, one.sub(&b_t1))?,
        ],
        order,
    )
}

// sum over n of (-q)^{n(n+1)/2}
fn alternating_triangular(order: usize) -> QSeries {
    QSeries::from_fn(order, |k| {
        let mut n = 0usize;
        while n * (n + 1) / 2 < k {
            n += 1;
        }
        if n * (n + 1) / 2 == k {
            Poly::constant_i64(if k % 2 == 0 { 1 } else { -1 })
        } else {
            Poly::zero()
        }
    })
}

// counting series q^n -> |{λ ⊢ n in family}|
fn family_count_series(family: FamilySpec, order: usize) -> QSeries {
    QSeries::from_fn(order, |n| {
        Poly::constant_i64(families::family_count(n, family) as i64)
    })
}

/// Every member series of a builtin at the given order; verification checks
/// that all of them agree.
pub fn builtin_members(b: Builtin, order: usize) -> Result<Vec<QSeries>, EngineError> {
    if order < 1 {
        return Err(EngineError::OrderTooSmall(order));
    }
    let members = match b {
        Builtin::NekrasovOkounkov => vec![
            kernel::lhs_series(&KernelSpec::T_PLUS_H2_OVER_H2, order),
            eta_product(
                &[EtaFactorSpec::new(1, 0, t_poly().add(&Poly::one()).neg())?],
                order,
            )?,
        ],
        Builtin::Stanley => vec![
            kernel::lhs_series(&KernelSpec::T_PLUS_C2_OVER_H2, order),
            crate::series::eta_pow(1, &t_poly().neg(), false, order)?,
        ],
        Builtin::Conj62a => vec![
            kernel::lhs_series(&KernelSpec::T_PLUS_CSP_OVER_H, order),
            conj_6_2a_rhs(order)?,
        ],
        Builtin::Conj62b => vec![
            kernel::lhs_series(&KernelSpec::T_PLUS_CO_OVER_H, order),
            conj_6_2b_rhs(order)?,
        ],
        Builtin::Conj63a => vec![
            kernel::lhs_series(&KernelSpec::T_PLUS_CSP2_OVER_H2, order),
            eta_product(
                &[
                    EtaFactorSpec::new(4, -2, minus_one())?,
                    EtaFactorSpec::new(1, 0, t_poly().neg())?,
                ],
                order,
            )?,
            kernel::lhs_series(&KernelSpec::T_PLUS_CO2_OVER_H2, order),
        ],
        Builtin::Thm63b => vec![
            kernel::lhs_series(&KernelSpec::CSP2_OVER_H2, order),
            inv_4jm2(order)?,
            kernel::lhs_series(&KernelSpec::CO2_OVER_H2, order),
        ],
        Builtin::Thm62c => vec![
            kernel::lhs_series(&KernelSpec::CSP_OVER_H, order),
            eta_product(
                &[EtaFactorSpec::with_sign(4, -2, minus_one(), true)?],
                order,
            )?,
            kernel::lhs_series(&KernelSpec::CO_OVER_H, order),
        ],
        Builtin::Cor63c => {
            // per-n sign (-1)^{binom(n,2)} against the t-free sum
            let unsigned = kernel::lhs_series(&KernelSpec::CSP2_OVER_H2, order);
            let signed = QSeries::from_fn(order, |n| {
                let c = unsigned.coeff(n).clone();
                if (n * n.saturating_sub(1) / 2) % 2 == 1 {
                    c.neg()
                } else {
                    c
                }
            });
            vec![signed, kernel::lhs_series(&KernelSpec::CSP_OVER_H, order)]
        }
        Builtin::Thm214 => vec![
            kernel::lhs_series(&KernelSpec::CSP2_MINUS1_OVER_H2, order),
            eta_product(
                &[
                    EtaFactorSpec::new(1, 0, Poly::one())?,
                    EtaFactorSpec::new(4, -2, minus_one())?,
                ],
                order,
            )?,
            alternating_triangular(order),
        ],
        Builtin::OvercubicT2 => vec![
            kernel::lhs_series_at(&KernelSpec::T_PLUS_CSP2_OVER_H2, 2, order),
            eta_product(
                &[
                    EtaFactorSpec::new(4, -2, minus_one())?,
                    EtaFactorSpec::new(1, 0, Poly::constant_i64(-2))?,
                ],
                order,
            )?,
            eta_product(
                &[
                    EtaFactorSpec::with_sign(2, 0, Poly::one(), true)?,
                    EtaFactorSpec::new(1, 0, Poly::constant_i64(-2))?,
                ],
                order,
            )?,
        ],
        Builtin::EulerSyp0 => vec![
            family_count_series(FamilySpec::Syp0, order),
            family_count_series(FamilySpec::DistinctEven, order),
            family_count_series(FamilySpec::PartsTwoMod4, order),
        ],
    };
    Ok(members)
}

/// The product/second side of a builtin on its own.
pub fn rhs_series(b: Builtin, order: usize) -> Result<QSeries, EngineError> {
    Ok(builtin_members(b, order)?.swap_remove(1))
}

/// Verifies a builtin identity coefficient-by-coefficient to the order.
pub fn verify_builtin(b: Builtin, order: usize) -> Result<VerificationReport, EngineError> {
    let started = Instant::now();
    let members = builtin_members(b, order)?;
    Ok(VerificationReport::from_members(b.name(), &members, started))
}

/// Verifies a compiled DSL identity.
pub fn verify_compiled(
    name: &str,
    identity: &CompiledIdentity,
    order: usize,
) -> Result<VerificationReport, EngineError> {
    if order < 1 {
        return Err(EngineError::OrderTooSmall(order));
    }
    let started = Instant::now();
    let lhs = identity.lhs_series(order)?;
    let rhs = identity.rhs_series(order)?;
    Ok(VerificationReport::from_members(name, &[lhs, rhs], started))
}
