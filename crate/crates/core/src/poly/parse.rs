//! Text front-end for polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (('*' factor) | ('/' factor))*
//! factor := '-' factor | atom ['^' INT]
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//!
//! Divisors must evaluate to nonzero constants. Positions in errors are byte
//! offsets into the input.

use num_bigint::BigInt;

use super::field::Coeff;
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::PolyError;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or(c);
                return Err(PolyError::Syntax {
                    pos: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    at: usize,
    /// Variables and rational coefficients; mapped into the target field at the end.
    shadow: Ring,
    target: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> usize {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, message: &str) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.pos(),
            message: message.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let divisor = self.factor()?;
                    let value = match divisor.terms() {
                        [] => {
                            return Err(PolyError::Syntax {
                                pos,
                                message: "division by zero".to_string(),
                            })
                        }
                        [(m, c)] if m.is_one() => c.clone(),
                        _ => {
                            return Err(PolyError::Syntax {
                                pos,
                                message: "divisor must be a constant".to_string(),
                            })
                        }
                    };
                    if self.target.field().convert(&value.recip()).is_none() {
                        return Err(PolyError::NotRepresentable {
                            pos,
                            value: value.to_string(),
                            characteristic: self.target.field().characteristic(),
                        });
                    }
                    acc = acc.scale(&value.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let exponent = match self.bump().0 {
            Tok::Int(n) => n,
            _ => {
                return Err(PolyError::Syntax {
                    pos,
                    message: "expected an integer exponent".to_string(),
                })
            }
        };
        let exponent = u32::try_from(&exponent)
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| PolyError::Syntax {
                pos,
                message: format!("exponent must be at most {MAX_EXPONENT}"),
            })?;
        let mut result = Polynomial::one(&self.shadow);
        for _ in 0..exponent {
            result = &result * &base;
        }
        Ok(result)
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let pos = self.pos();
        match self.bump().0 {
            Tok::Int(n) => Ok(Polynomial::constant(&self.shadow, Coeff::from_integer(n))),
            Tok::Ident(name) => match self.shadow.variable_index(&name) {
                Some(i) => Ok(Polynomial::variable(&self.shadow, i)),
                None => Err(PolyError::UnknownIdentifier { name, pos }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(PolyError::Syntax {
                pos,
                message: "unexpected end of input".to_string(),
            }),
            tok => Err(PolyError::Syntax {
                pos,
                message: format!("unexpected token {}", describe(&tok)),
            }),
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parses `text` into a normalized polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        at: 0,
        shadow: ring.rational_shadow(),
        target: ring,
    };
    let poly = parser.expr()?;
    if *parser.peek() != Tok::End {
        return parser.syntax(&format!("unexpected token {}", describe(parser.peek())));
    }
    // every divisor was checked to be a unit modulo the characteristic, so
    // the remaining denominators are too
    Ok(poly.convert_field(ring).expect("denominators checked during parsing"))
}

impl Polynomial {
    /// Shorthand for [`parse_polynomial`].
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
        parse_polynomial(text, ring)
    }
}
