//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := var | int ('/' int)? | '(' expr ')'
//! ```
//!
//! Positions in errors are 0-based byte offsets into the input.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::field::FieldElem;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
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
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
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

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, at) = self.bump();
        match tok {
            Tok::Int(n) => {
                let e = n.to_u32().ok_or_else(|| Error::BadExponent {
                    position: at,
                    message: format!("exponent {n} is too large"),
                })?;
                Ok(base.pow(e))
            }
            Tok::Minus => Err(Error::BadExponent {
                position: at,
                message: "negative exponent".into(),
            }),
            _ => Err(Error::BadExponent {
                position: at,
                message: "exponent must be a nonnegative integer literal".into(),
            }),
        }
    }

    fn base(&mut self) -> Result<Poly> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(Poly::var(self.ring, i)),
                None => Err(Error::UnknownVariable { name, position: at }),
            },
            Tok::Int(n) => {
                let field = self.ring.field();
                let c: FieldElem = if *self.peek() == Tok::Slash {
                    self.bump();
                    let (den, dat) = self.bump();
                    let Tok::Int(d) = den else {
                        return Err(Error::Syntax {
                            position: dat,
                            message: "expected integer denominator".into(),
                        });
                    };
                    if d.is_zero() {
                        return Err(Error::Syntax {
                            position: dat,
                            message: "division by zero".into(),
                        });
                    }
                    field.from_fraction(&n, &d).map_err(|e| Error::Syntax {
                        position: dat,
                        message: e.to_string(),
                    })?
                } else {
                    field.from_bigint(&n)
                };
                Ok(Poly::constant(self.ring, c))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(Error::Syntax {
                position: at,
                message: "unexpected end of input".into(),
            }),
            other => Err(Error::Syntax {
                position: at,
                message: format!("unexpected token {other:?}"),
            }),
        }
    }
}

/// Parse an expression over `ring` into canonical form.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Poly> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, toks, pos: 0 };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.syntax("unexpected trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldSpec, Monomial, MonomialOrder};

    fn qq() -> Arc<PolyRing> {
        PolyRing::parse_vars(FieldSpec::Rationals, "x y", MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn quintic_generator() {
        let r = qq();
        let f = parse_poly("x^4+y^4", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeff(&Monomial::new(vec![4, 0])), r.field().one());
        assert_eq!(f.coeff(&Monomial::new(vec![0, 4])), r.field().one());
    }

    #[test]
    fn zero_literal() {
        assert!(parse_poly("0", &qq()).unwrap().is_zero());
        assert!(parse_poly("x - x", &qq()).unwrap().is_zero());
    }

    #[test]
    fn quintic_expansion_matches_hand_expansion() {
        let r = qq();
        let f = parse_poly("x*y*(x-y)*(x+y)*(x-2*y)", &r).unwrap();
        let hand = parse_poly("x^4*y - 2*x^3*y^2 - x^2*y^3 + 2*x*y^4", &r).unwrap();
        assert_eq!(f, hand);
        assert_eq!(f.len(), 4);
        // re-check numerically at a handful of rational points
        let k = r.field();
        for (a, b) in [(1, 2), (-3, 5), (7, -1), (2, 9), (-4, -6)] {
            let p = [k.from_i64(a), k.from_i64(b)];
            let direct = k.from_i64(a * b * (a - b) * (a + b) * (a - 2 * b));
            assert_eq!(f.eval(&p), direct);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let r = qq();
        assert_eq!(
            parse_poly("x + z", &r),
            Err(Error::UnknownVariable {
                name: "z".into(),
                position: 4
            })
        );
        assert!(matches!(
            parse_poly("x^-1", &r),
            Err(Error::BadExponent { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("x^y", &r),
            Err(Error::BadExponent { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("(x + y", &r),
            Err(Error::Syntax { position: 6, .. })
        ));
        assert!(matches!(
            parse_poly("x $ y", &r),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("x y", &r),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("", &r),
            Err(Error::Syntax { position: 0, .. })
        ));
    }

    #[test]
    fn leading_minus_and_rationals() {
        let r = qq();
        let f = parse_poly("-x + 1/2*y", &r).unwrap();
        assert_eq!(f.render(), "-x + 1/2*y");
        assert_eq!(
            parse_poly("(-x)^2", &r).unwrap(),
            parse_poly("x^2", &r).unwrap()
        );
    }
}
