//! Recursive-descent parser producing `IdentityAst`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::lexer::{Tok, Token};
use super::{DslError, Expr, IdentityAst, Lin, PolyExpr};
use crate::kernel::{DenominatorStat, KernelSpec, NumeratorStat};

pub fn parse_identity(tokens: &[Token]) -> Result<IdentityAst, DslError> {
    let mut p = Parser { tokens, pos: 0 };
    let lhs = p.expr()?;
    p.expect(&Tok::EqEq)?;
    let rhs = p.expr()?;
    if let Some(tok) = p.peek(0) {
        return Err(p.err_here(format!(
            "expected end of input, found {}",
            tok.describe()
        )));
    }
    Ok(IdentityAst { lhs, rhs })
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self, k: usize) -> Option<&'a Tok> {
        self.tokens.get(self.pos + k).map(|t| &t.tok)
    }

    fn pos_of(&self, k: usize) -> (usize, usize) {
        match self.tokens.get(self.pos + k) {
            Some(t) => (t.line, t.col),
            None => self
                .tokens
                .last()
                .map_or((1, 1), |t| (t.line, t.col + 1)),
        }
    }

    fn err_here(&self, msg: String) -> DslError {
        let (line, col) = self.pos_of(0);
        DslError::Syntax { line, col, msg }
    }

    fn next(&mut self, what: &str) -> Result<&'a Tok, DslError> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(&t.tok)
            }
            None => Err(self.err_here(format!("expected {what}, found end of input"))),
        }
    }

    fn expect(&mut self, want: &Tok) -> Result<(), DslError> {
        match self.peek(0) {
            Some(t) if t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(self.err_here(format!(
                "expected {}, found {}",
                want.describe(),
                t.describe()
            ))),
            None => Err(self.err_here(format!(
                "expected {}, found end of input",
                want.describe()
            ))),
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<(), DslError> {
        self.expect(&Tok::Ident(name.to_string()))
    }

    fn int(&mut self) -> Result<BigInt, DslError> {
        match self.peek(0) {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            Some(t) => Err(self.err_here(format!("expected an integer, found {}", t.describe()))),
            None => Err(self.err_here("expected an integer, found end of input".into())),
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.term()?;
        loop {
            match self.peek(0) {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Div(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let base = self.atom()?;
        if self.peek(0) == Some(&Tok::Caret) {
            self.pos += 1;
            self.expect(&Tok::LParen)?;
            let e = self.poly_expr()?;
            self.expect(&Tok::RParen)?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        match self.peek(0) {
            Some(Tok::Ident(name)) => match name.as_str() {
                "prodj" => {
                    self.pos += 1;
                    self.expect(&Tok::LParen)?;
                    let inner = self.expr()?;
                    self.expect(&Tok::RParen)?;
                    Ok(Expr::ProdJ(Box::new(inner)))
                }
                "psum" => {
                    self.pos += 1;
                    self.expect(&Tok::LBrace)?;
                    let kernel = self.kernel()?;
                    self.expect(&Tok::RBrace)?;
                    Ok(Expr::PSum(kernel))
                }
                "q" => Ok(Expr::QPow(self.qpow()?)),
                other => Err(self.err_here(format!("unexpected `{other}`"))),
            },
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::LParen) => {
                let is_eta = matches!(self.peek(1), Some(Tok::Int(n)) if *n == BigInt::from(1))
                    && matches!(self.peek(2), Some(Tok::Plus) | Some(Tok::Minus))
                    && self.peek(3) == Some(&Tok::Ident("q".into()));
                if is_eta {
                    self.pos += 2; // past "(" and "1"
                    let plus = self.next("sign")? == &Tok::Plus;
                    let lin = self.qpow()?;
                    self.expect(&Tok::RParen)?;
                    Ok(Expr::Eta { plus, lin })
                } else {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect(&Tok::RParen)?;
                    Ok(inner)
                }
            }
            Some(t) => Err(self.err_here(format!("expected an atom, found {}", t.describe()))),
            None => Err(self.err_here("expected an atom, found end of input".into())),
        }
    }

    // q "^" "(" lin ")"
    fn qpow(&mut self) -> Result<Lin, DslError> {
        self.expect_ident("q")?;
        self.expect(&Tok::Caret)?;
        self.expect(&Tok::LParen)?;
        let lin = self.lin()?;
        self.expect(&Tok::RParen)?;
        Ok(lin)
    }

    // int "*" "j" [sign int] | int
    fn lin(&mut self) -> Result<Lin, DslError> {
        let first = self.int()?;
        if self.peek(0) != Some(&Tok::Star) {
            return Ok(Lin {
                a: BigInt::zero(),
                b: first,
            });
        }
        self.pos += 1;
        self.expect_ident("j")?;
        let b = match self.peek(0) {
            Some(Tok::Plus) => {
                self.pos += 1;
                self.int()?
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.int()?
            }
            _ => BigInt::zero(),
        };
        Ok(Lin { a: first, b })
    }

    fn kernel(&mut self) -> Result<KernelSpec, DslError> {
        let with_t =
            self.peek(0) == Some(&Tok::LParen) && self.peek(1) == Some(&Tok::Ident("t".into()));
        let numerator = if with_t {
            self.pos += 2; // past "(" and "t"
            self.expect(&Tok::Plus)?;
            let stat = self.stat()?;
            self.expect(&Tok::RParen)?;
            stat
        } else {
            self.stat()?
        };
        self.expect(&Tok::Slash)?;
        let den_pos = self.pos_of(0);
        let den = self.stat()?;
        let denominator = match den {
            NumeratorStat::Hook => DenominatorStat::Hook,
            NumeratorStat::Hook2 => DenominatorStat::Hook2,
            other => {
                return Err(DslError::Semantic(format!(
                    "kernel denominator must be h or h^2, got {} at {}:{}",
                    stat_name(other),
                    den_pos.0,
                    den_pos.1
                )))
            }
        };
        Ok(KernelSpec {
            with_t,
            numerator,
            denominator,
        })
    }

    // csp | co | c | h, optionally squared, or the literal (csp^2-1)
    fn stat(&mut self) -> Result<NumeratorStat, DslError> {
        if self.peek(0) == Some(&Tok::LParen) {
            self.pos += 1;
            self.expect_ident("csp")?;
            self.expect(&Tok::Caret)?;
            self.expect_two()?;
            self.expect(&Tok::Minus)?;
            let one = self.int()?;
            if one != BigInt::from(1) {
                return Err(self.err_here("expected `1` in (csp^2-1)".into()));
            }
            self.expect(&Tok::RParen)?;
            return Ok(NumeratorStat::Csp2Minus1);
        }
        let base = match self.next("a cell statistic")? {
            Tok::Ident(name) => name.clone(),
            t => {
                return Err(self.err_here(format!(
                    "expected a cell statistic, found {}",
                    t.describe()
                )))
            }
        };
        let squared = if self.peek(0) == Some(&Tok::Caret) {
            self.pos += 1;
            self.expect_two()?;
            true
        } else {
            false
        };
        match (base.as_str(), squared) {
            ("csp", false) => Ok(NumeratorStat::Csp),
            ("csp", true) => Ok(NumeratorStat::Csp2),
            ("co", false) => Ok(NumeratorStat::Co),
            ("co", true) => Ok(NumeratorStat::Co2),
            ("c", false) => Ok(NumeratorStat::Content),
            ("c", true) => Ok(NumeratorStat::Content2),
            ("h", false) => Ok(NumeratorStat::Hook),
            ("h", true) => Ok(NumeratorStat::Hook2),
            _ => Err(self.err_here(format!("unknown cell statistic `{base}`"))),
        }
    }

    fn expect_two(&mut self) -> Result<(), DslError> {
        let n = self.int()?;
        if n == BigInt::from(2) {
            Ok(())
        } else {
            Err(self.err_here("only squared statistics are supported".into()))
        }
    }

    // polyT = pterm { (+|-) pterm }
    fn poly_expr(&mut self) -> Result<PolyExpr, DslError> {
        let mut acc = self.poly_term()?;
        loop {
            match self.peek(0) {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.poly_term()?;
                    acc = PolyExpr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.poly_term()?;
                    acc = PolyExpr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn poly_term(&mut self) -> Result<PolyExpr, DslError> {
        let mut acc = self.poly_factor()?;
        while self.peek(0) == Some(&Tok::Star) {
            self.pos += 1;
            let rhs = self.poly_factor()?;
            acc = PolyExpr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn poly_factor(&mut self) -> Result<PolyExpr, DslError> {
        if self.peek(0) == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(PolyExpr::Neg(Box::new(self.poly_factor()?)));
        }
        self.poly_atom()
    }

    fn poly_atom(&mut self) -> Result<PolyExpr, DslError> {
        match self.peek(0) {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(PolyExpr::Int(n))
            }
            Some(Tok::Ident(name)) if name == "t" => {
                self.pos += 1;
                Ok(PolyExpr::T)
            }
            Some(Tok::Ident(name)) if name == "binom" => {
                self.pos += 1;
                self.expect(&Tok::LParen)?;
                let upper = self.poly_expr()?;
                self.expect(&Tok::Comma)?;
                let k_pos = self.pos_of(0);
                let k = self.int()?;
                let k = usize::try_from(k.clone()).map_err(|_| DslError::Syntax {
                    line: k_pos.0,
                    col: k_pos.1,
                    msg: format!("binom lower argument {k} out of range"),
                })?;
                self.expect(&Tok::RParen)?;
                Ok(PolyExpr::Binom(Box::new(upper), k))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.poly_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some(t) => Err(self.err_here(format!(
                "expected a t-polynomial, found {}",
                t.describe()
            ))),
            None => Err(self.err_here("expected a t-polynomial, found end of input".into())),
        }
    }
}

pub fn stat_name(stat: NumeratorStat) -> &'static str {
    match stat {
        NumeratorStat::Csp => "csp",
        NumeratorStat::Co => "co",
        NumeratorStat::Content => "c",
        NumeratorStat::Hook => "h",
        NumeratorStat::Csp2 => "csp^2",
        NumeratorStat::Co2 => "co^2",
        NumeratorStat::Content2 => "c^2",
        NumeratorStat::Hook2 => "h^2",
        NumeratorStat::Csp2Minus1 => "(csp^2-1)",
    }
}
