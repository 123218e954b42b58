//! Tokenizer for the identity language.

use num_bigint::BigInt;

use super::DslError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Star,
    Slash,
    Caret,
    Plus,
    Minus,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    EqEq,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Comma => "`,`".into(),
            Tok::EqEq => "`==`".into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Cursor {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }
}

pub fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut cur = Cursor {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
    };
    let mut tokens = Vec::new();
    while let Some(c) = cur.peek() {
        let (line, col) = (cur.line, cur.col);
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                cur.bump();
            }
            '#' => {
                while cur.peek().is_some_and(|c| c != '\n') {
                    cur.bump();
                }
            }
            '0'..='9' => {
                let mut digits = String::new();
                while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                    digits.push(cur.bump().unwrap());
                }
                let n = digits.parse::<BigInt>().expect("digits parse");
                tokens.push(Token {
                    tok: Tok::Int(n),
                    line,
                    col,
                });
            }
            'a'..='z' => {
                let mut ident = String::new();
                while cur.peek().is_some_and(|c| c.is_ascii_lowercase()) {
                    ident.push(cur.bump().unwrap());
                }
                tokens.push(Token {
                    tok: Tok::Ident(ident),
                    line,
                    col,
                });
            }
            '=' => {
                cur.bump();
                if cur.peek() == Some('=') {
                    cur.bump();
                    tokens.push(Token {
                        tok: Tok::EqEq,
                        line,
                        col,
                    });
                } else {
                    return Err(DslError::Syntax {
                        line,
                        col,
                        msg: "single `=`; identities use `==`".into(),
                    });
                }
            }
            _ => {
                let tok = match c {
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    ',' => Tok::Comma,
                    other => {
                        return Err(DslError::Syntax {
                            line,
                            col,
                            msg: format!("unexpected character `{other}`"),
                        })
                    }
                };
                cur.bump();
                tokens.push(Token { tok, line, col });
            }
        }
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_one_based() {
        let toks = lex("q^^2").unwrap();
        let cols: Vec<usize> = toks.iter().map(|t| t.col).collect();
        assert_eq!(cols, vec![1, 2, 3, 4]);
        assert!(toks.iter().all(|t| t.line == 1));
    }

    #[test]
    fn comments_and_lines() {
        let toks = lex("ab # rest\n 12").unwrap();
        assert_eq!(toks.len(), 2);
        assert_eq!(toks[1].tok, Tok::Int(BigInt::from(12)));
        assert_eq!((toks[1].line, toks[1].col), (2, 2));
    }

    #[test]
    fn big_integers_lex() {
        let toks = lex("123456789012345678901234567890").unwrap();
        assert_eq!(
            toks[0].tok,
            Tok::Int("123456789012345678901234567890".parse().unwrap())
        );
    }

    #[test]
    fn bad_characters_error() {
        assert!(lex("q ~ 2").is_err());
        assert!(lex("a = b").is_err());
    }
}
