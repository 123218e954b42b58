//! Textual language for eta-quotient identities.
//!
//! Grammar (whitespace-insensitive, `#` starts a line comment):
//!
//! ```text
//! identity  = expr "==" expr ;
//! expr      = term { ("*" | "/") term } ;
//! term      = atom [ "^" "(" polyT ")" ] ;
//! atom      = "prodj" "(" expr ")"                 product over j ≥ 1
//!           | "(" "1" "-" qpow ")" | "(" "1" "+" qpow ")"
//!           | qpow | integer
//!           | "psum" "{" kernel "}"
//!           | "(" expr ")" ;
//! qpow      = "q" "^" "(" lin ")" ;   lin = int "*" "j" [("+"|"-") int] | int ;
//! polyT     = polynomial in t with + - *, integers, binom(polyT, int) ;
//! kernel    = "(" "t" "+" stat ")" "/" stat | stat "/" stat ;
//! stat      = "csp" | "co" | "c" | "h" | "csp^2" | "co^2" | "c^2" | "h^2"
//!           | "(csp^2-1)" ;
//! ```
//!
//! Parsing yields an `IdentityAst`; compiling checks the semantic rules
//! (factors stay above `q^1`, `j` only under `prodj`, kernels only outside
//! products, hook-power denominators) and produces series builders that can
//! be evaluated at any truncation order. The bivariate rank identities are
//! not expressible here by design; they stay builtins.

mod compile;
mod lexer;
mod parser;
mod unparse;

use num_bigint::BigInt;
use thiserror::Error;

use crate::kernel::KernelSpec;

pub use compile::CompiledIdentity;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DslError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("semantic error: {0}")]
    Semantic(String),
}

/// Exponent expression over `t`, kept as a tree so that identities print
/// back the way they were written.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyExpr {
    Int(BigInt),
    T,
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Binom(Box<PolyExpr>, usize),
}

/// Linear form `a*j + b` in the product index (`a = 0` for literals).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lin {
    pub a: BigInt,
    pub b: BigInt,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    QPow(Lin),
    /// `(1 - q^lin)`, or `(1 + q^lin)` when `plus`.
    Eta { plus: bool, lin: Lin },
    Pow(Box<Expr>, PolyExpr),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    ProdJ(Box<Expr>),
    PSum(KernelSpec),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityAst {
    pub lhs: Expr,
    pub rhs: Expr,
}

/// Parses one identity; `#` comments and whitespace are ignored.
pub fn parse(text: &str) -> Result<IdentityAst, DslError> {
    let tokens = lexer::lex(text)?;
    parser::parse_identity(&tokens)
}

/// Semantic validation plus series builders.
pub fn compile(ast: IdentityAst) -> Result<CompiledIdentity, DslError> {
    compile::compile(ast)
}

/// Canonical text that reparses to an equal AST.
pub fn unparse(ast: &IdentityAst) -> String {
    unparse::unparse(ast)
}

/// Whether the identity involves the formal variable `t` (symbolic
/// coefficients rather than rational constants).
pub fn uses_t(ast: &IdentityAst) -> bool {
    expr_uses_t(&ast.lhs) || expr_uses_t(&ast.rhs)
}

fn expr_uses_t(e: &Expr) -> bool {
    match e {
        Expr::Pow(base, p) => expr_uses_t(base) || poly_uses_t(p),
        Expr::Mul(a, b) | Expr::Div(a, b) => expr_uses_t(a) || expr_uses_t(b),
        Expr::ProdJ(inner) => expr_uses_t(inner),
        Expr::PSum(k) => k.with_t,
        Expr::Int(_) | Expr::QPow(_) | Expr::Eta { .. } => false,
    }
}

fn poly_uses_t(p: &PolyExpr) -> bool {
    match p {
        PolyExpr::T => true,
        PolyExpr::Int(_) => false,
        PolyExpr::Neg(x) => poly_uses_t(x),
        PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) | PolyExpr::Mul(a, b) => {
            poly_uses_t(a) || poly_uses_t(b)
        }
        PolyExpr::Binom(u, _) => poly_uses_t(u),
    }
}
