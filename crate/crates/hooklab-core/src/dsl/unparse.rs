//! Canonical text for parsed identities; the output reparses to an equal
//! AST.

use num_traits::Zero;

use super::parser::stat_name;
use super::{Expr, IdentityAst, Lin, PolyExpr};
use crate::kernel::KernelSpec;

pub fn unparse(ast: &IdentityAst) -> String {
    format!("{} == {}", expr_text(&ast.lhs), expr_text(&ast.rhs))
}

fn expr_text(e: &Expr) -> String {
    match e {
        Expr::Mul(a, b) => format!("{} * {}", expr_text(a), operand_text(b)),
        Expr::Div(a, b) => format!("{} / {}", expr_text(a), operand_text(b)),
        _ => operand_text(e),
    }
}

// right operands and power bases need grouping when composite
fn operand_text(e: &Expr) -> String {
    match e {
        Expr::Mul(_, _) | Expr::Div(_, _) => format!("({})", expr_text(e)),
        Expr::Int(n) => n.to_string(),
        Expr::QPow(lin) => qpow_text(lin),
        Expr::Eta { plus, lin } => {
            format!("(1{}{})", if *plus { "+" } else { "-" }, qpow_text(lin))
        }
        Expr::Pow(base, p) => format!("{}^({})", operand_text(base), poly_text(p)),
        Expr::ProdJ(inner) => format!("prodj({})", expr_text(inner)),
        Expr::PSum(k) => format!("psum{{{}}}", kernel_text(k)),
    }
}

fn qpow_text(lin: &Lin) -> String {
    if lin.a.is_zero() {
        format!("q^({})", lin.b)
    } else if lin.b.is_zero() {
        format!("q^({}*j)", lin.a)
    } else {
        format!("q^({}*j{:+})", lin.a, lin.b)
    }
}

fn kernel_text(k: &KernelSpec) -> String {
    let num = stat_name(k.numerator);
    let den = match k.denominator {
        crate::kernel::DenominatorStat::Hook => "h",
        crate::kernel::DenominatorStat::Hook2 => "h^2",
    };
    if k.with_t {
        format!("(t+{num})/{den}")
    } else {
        format!("{num}/{den}")
    }
}

fn poly_text(e: &PolyExpr) -> String {
    match e {
        PolyExpr::Add(a, b) => format!("{}+{}", poly_text(a), mul_text(b)),
        PolyExpr::Sub(a, b) => format!("{}-{}", poly_text(a), mul_text(b)),
        _ => mul_text(e),
    }
}

fn mul_text(e: &PolyExpr) -> String {
    match e {
        PolyExpr::Mul(a, b) => format!("{}*{}", mul_text(a), factor_text(b)),
        _ => factor_text(e),
    }
}

fn factor_text(e: &PolyExpr) -> String {
    match e {
        PolyExpr::Neg(x) => format!("-{}", factor_text(x)),
        PolyExpr::Int(n) => n.to_string(),
        PolyExpr::T => "t".into(),
        PolyExpr::Binom(u, k) => format!("binom({},{k})", poly_text(u)),
        PolyExpr::Add(_, _) | PolyExpr::Sub(_, _) | PolyExpr::Mul(_, _) => {
            format!("({})", poly_text(e))
        }
    }
}
