//! Semantic validation and evaluation of parsed identities.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{DslError, Expr, IdentityAst, Lin, PolyExpr};
use crate::kernel;
use crate::poly::{gen_binom, Poly};
use crate::rational::Rational;
use crate::series::{eta_pow, QSeries, SeriesError};

/// A validated identity whose sides can be expanded at any order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompiledIdentity {
    ast: IdentityAst,
}

impl CompiledIdentity {
    pub fn ast(&self) -> &IdentityAst {
        &self.ast
    }

    pub fn lhs_series(&self, order: usize) -> Result<QSeries, SeriesError> {
        eval(&self.ast.lhs, None, order)
    }

    pub fn rhs_series(&self, order: usize) -> Result<QSeries, SeriesError> {
        eval(&self.ast.rhs, None, order)
    }
}

pub fn compile(ast: IdentityAst) -> Result<CompiledIdentity, DslError> {
    validate(&ast.lhs, false)?;
    validate(&ast.rhs, false)?;
    Ok(CompiledIdentity { ast })
}

pub fn compile_poly(e: &PolyExpr) -> Poly {
    match e {
        PolyExpr::Int(n) => Poly::constant(Rational::from_integer(n.clone())),
        PolyExpr::T => Poly::var(),
        PolyExpr::Neg(x) => compile_poly(x).neg(),
        PolyExpr::Add(a, b) => compile_poly(a).add(&compile_poly(b)),
        PolyExpr::Sub(a, b) => compile_poly(a).sub(&compile_poly(b)),
        PolyExpr::Mul(a, b) => compile_poly(a).mul(&compile_poly(b)),
        PolyExpr::Binom(u, k) => gen_binom(&compile_poly(u), *k),
    }
}

fn validate(e: &Expr, in_prodj: bool) -> Result<(), DslError> {
    match e {
        Expr::Int(_) => {
            if in_prodj {
                return Err(DslError::Semantic(
                    "integer literal under prodj; only eta factors repeat over j".into(),
                ));
            }
            Ok(())
        }
        Expr::QPow(lin) => {
            if in_prodj {
                return Err(DslError::Semantic(
                    "bare q-power under prodj does not converge".into(),
                ));
            }
            if !lin.a.is_zero() {
                return Err(DslError::Semantic("`j` outside prodj".into()));
            }
            if lin.b.is_negative() {
                return Err(DslError::Semantic(format!(
                    "negative q-power q^({})",
                    lin.b
                )));
            }
            Ok(())
        }
        Expr::Eta { lin, .. } => {
            if in_prodj {
                if lin.a.is_zero() {
                    return Err(DslError::Semantic(
                        "prodj factor must depend on j".into(),
                    ));
                }
                if &lin.a + &lin.b < BigInt::from(1) {
                    return Err(DslError::Semantic(format!(
                        "factor q-power {}*j{:+} is below 1 at j = 1",
                        lin.a, lin.b
                    )));
                }
            } else {
                if !lin.a.is_zero() {
                    return Err(DslError::Semantic("`j` outside prodj".into()));
                }
                if lin.b < BigInt::from(1) {
                    return Err(DslError::Semantic(format!(
                        "q^{} factor; eta factors need a q-power of at least 1",
                        lin.b
                    )));
                }
            }
            Ok(())
        }
        Expr::Pow(base, pexpr) => {
            validate(base, in_prodj)?;
            // polynomial exponents distribute onto eta factors; anything
            // else only supports small integer exponents
            if is_eta_composite(base) {
                return Ok(());
            }
            let p = compile_poly(pexpr);
            match p.as_constant() {
                Some(c) if c.denom() == &BigInt::from(1) => {
                    if c.numer().abs() > BigInt::from(100_000) {
                        return Err(DslError::Semantic(format!(
                            "integer exponent {} is out of range",
                            c.numer()
                        )));
                    }
                    Ok(())
                }
                _ => Err(DslError::Semantic(
                    "a polynomial exponent requires an eta-factor base".into(),
                )),
            }
        }
        Expr::Mul(a, b) | Expr::Div(a, b) => {
            validate(a, in_prodj)?;
            validate(b, in_prodj)
        }
        Expr::ProdJ(inner) => {
            if in_prodj {
                return Err(DslError::Semantic("nested prodj".into()));
            }
            validate(inner, true)
        }
        Expr::PSum(_) => {
            if in_prodj {
                return Err(DslError::Semantic("partition sum under prodj".into()));
            }
            Ok(())
        }
    }
}

// Exponents distribute across these down to the eta leaves; a literal 1 is
// inert under any exponent.
fn is_eta_composite(e: &Expr) -> bool {
    match e {
        Expr::Eta { .. } => true,
        Expr::Int(n) => *n == BigInt::from(1),
        Expr::Mul(a, b) | Expr::Div(a, b) => is_eta_composite(a) && is_eta_composite(b),
        Expr::Pow(base, _) => is_eta_composite(base),
        Expr::ProdJ(inner) => is_eta_composite(inner),
        _ => false,
    }
}

// q-power of a linear form at a concrete j (None outside prodj).
fn power_at(lin: &Lin, j: Option<u64>) -> BigInt {
    match j {
        Some(j) => &lin.a * BigInt::from(j) + &lin.b,
        None => lin.b.clone(),
    }
}

fn eval(e: &Expr, j: Option<u64>, order: usize) -> Result<QSeries, SeriesError> {
    eval_pow(e, &Poly::one(), j, order)
}

// Evaluates `e^outer`; the exponent is pushed through products, quotients,
// powers, and prodj onto the eta factors, which expand by the generalized
// binomial series. Remaining bases take integer exponents only.
fn eval_pow(e: &Expr, outer: &Poly, j: Option<u64>, order: usize) -> Result<QSeries, SeriesError> {
    match e {
        Expr::Eta { plus, lin } => eval_eta(lin, outer, *plus, j, order),
        Expr::Pow(base, pexpr) => {
            let inner = compile_poly(pexpr);
            eval_pow(base, &outer.mul(&inner), j, order)
        }
        Expr::Mul(a, b) => eval_pow(a, outer, j, order)?.mul(&eval_pow(b, outer, j, order)?),
        Expr::Div(a, b) => {
            eval_pow(a, outer, j, order)?.mul(&eval_pow(b, &outer.neg(), j, order)?)
        }
        Expr::ProdJ(inner) => {
            let mut lins = Vec::new();
            collect_eta_lins(inner, &mut lins);
            debug_assert!(!lins.is_empty(), "validated prodj has eta leaves");
            let mut acc = QSeries::one(order);
            let mut jj = 1u64;
            loop {
                let min_power = lins
                    .iter()
                    .map(|lin| power_at(lin, Some(jj)))
                    .min()
                    .expect("nonempty");
                if min_power > BigInt::from(order) {
                    break;
                }
                acc = acc.mul(&eval_pow(inner, outer, Some(jj), order)?)?;
                jj += 1;
            }
            Ok(acc)
        }
        // integer-exponent bases
        base => {
            if matches!(base, Expr::Int(n) if *n == BigInt::from(1)) {
                return Ok(QSeries::one(order));
            }
            let series = match base {
                Expr::Int(n) => QSeries::monomial(
                    order,
                    0,
                    Poly::constant(Rational::from_integer(n.clone())),
                ),
                Expr::QPow(lin) => {
                    let m = power_at(lin, j);
                    match m.to_usize() {
                        Some(m) if m <= order => QSeries::monomial(order, m, Poly::one()),
                        _ => QSeries::zero(order),
                    }
                }
                Expr::PSum(spec) => kernel::lhs_series(spec, order),
                _ => unreachable!("handled above"),
            };
            let c = outer
                .as_constant()
                .expect("validated integer exponent")
                .numer()
                .to_i64()
                .expect("validated exponent range");
            if c == 1 {
                return Ok(series);
            }
            let factor = if c < 0 { series.inv()? } else { series };
            let mut acc = QSeries::one(order);
            for _ in 0..c.unsigned_abs() {
                acc = acc.mul(&factor)?;
            }
            Ok(acc)
        }
    }
}

fn eval_eta(
    lin: &Lin,
    exponent: &Poly,
    plus: bool,
    j: Option<u64>,
    order: usize,
) -> Result<QSeries, SeriesError> {
    let m = power_at(lin, j);
    match m.to_usize() {
        // factors beyond the truncation are 1 mod q^{N+1}
        Some(m) if m <= order => eta_pow(m, exponent, plus, order),
        _ => Ok(QSeries::one(order)),
    }
}

fn collect_eta_lins(e: &Expr, out: &mut Vec<Lin>) {
    match e {
        Expr::Eta { lin, .. } => out.push(lin.clone()),
        Expr::Pow(base, _) => collect_eta_lins(base, out),
        Expr::Mul(a, b) | Expr::Div(a, b) => {
            collect_eta_lins(a, out);
            collect_eta_lins(b, out);
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::super::{compile, parse};
    use super::*;
    use crate::series::{eta_product, EtaFactorSpec};

    fn expand(text: &str, order: usize) -> (QSeries, QSeries) {
        let c = compile(parse(text).unwrap()).unwrap();
        (
            c.lhs_series(order).unwrap(),
            c.rhs_series(order).unwrap(),
        )
    }

    #[test]
    fn q0_factor_is_a_semantic_error() {
        let err = compile(parse("(1-q^(0)) == 1").unwrap()).unwrap_err();
        assert!(matches!(err, DslError::Semantic(_)), "{err:?}");
        let err = compile(parse("prodj((1-q^(0*j))) == 1").unwrap()).unwrap_err();
        assert!(matches!(err, DslError::Semantic(_)), "{err:?}");
        let err = compile(parse("prodj((1-q^(2*j-2))) == 1").unwrap()).unwrap_err();
        assert!(matches!(err, DslError::Semantic(_)), "{err:?}");
    }

    #[test]
    fn j_outside_prodj_is_rejected() {
        for text in ["q^(2*j) == 1", "(1-q^(2*j)) == 1"] {
            let err = compile(parse(text).unwrap()).unwrap_err();
            assert!(matches!(err, DslError::Semantic(_)), "{text}: {err:?}");
        }
    }

    #[test]
    fn psum_under_prodj_is_rejected() {
        let err = compile(parse("prodj(psum{csp/h}) == 1").unwrap()).unwrap_err();
        assert!(matches!(err, DslError::Semantic(_)), "{err:?}");
    }

    #[test]
    fn polynomial_exponent_needs_eta_base() {
        let err = compile(parse("q^(2)^(t) == 1").unwrap()).unwrap_err();
        assert!(matches!(err, DslError::Semantic(_)), "{err:?}");
        // constant reducible exponents are fine
        assert!(compile(parse("q^(2)^(2) == q^(4)").unwrap()).is_ok());
    }

    #[test]
    fn simple_expansions() {
        let (lhs, rhs) = expand("q^(2)^(2) == q^(4)", 6);
        assert_eq!(lhs, rhs);

        // geometric series both ways
        let (lhs, rhs) = expand("(1-q^(1))^(-1) == 1 / (1-q^(1))", 10);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn prodj_expansion_matches_eta_product() {
        let c = compile(parse("prodj((1-q^(4*j-2)))^(-1) == 1").unwrap()).unwrap();
        let got = c.lhs_series(12).unwrap();
        let want = eta_product(
            &[EtaFactorSpec::new(4, -2, Poly::constant_i64(-1)).unwrap()],
            12,
        )
        .unwrap();
        assert_eq!(got, want);

        // the same factor written with the exponent inside the product
        let c2 = compile(parse("prodj((1-q^(4*j-2))^(-1)) == 1").unwrap()).unwrap();
        assert_eq!(c2.lhs_series(12).unwrap(), want);
    }

    #[test]
    fn compile_is_deterministic() {
        let c = compile(parse("prodj((1-q^(1*j))/(1-q^(4*j-2))) == 1").unwrap()).unwrap();
        assert_eq!(c.lhs_series(20).unwrap(), c.lhs_series(20).unwrap());
    }
}
