//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant, one-token lookahead, no implicit
//! multiplication):
//!
//! ```text
//! expr     := ('+' | '-')? term (('+' | '-') term)* ;
//! term     := factor ('*' factor)* ;
//! factor   := base ('^' nat)? ;
//! base     := rational | 'z' | 'y' | '(' expr ')' ;
//! rational := '-'? nat ('/' nat)? ;
//! nat      := [0-9]+ ;
//! ```
//!
//! The optional leading sign on an expression lets canonical forms like
//! `-z` parse directly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::bipoly::BiPoly;
use crate::poly::Poly;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the problem starts.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parse an expression in z and y.
pub fn parse_bipoly(text: &str) -> Result<BiPoly, ParseError> {
    Parser::new(text, true)?.parse_full()
}

/// Parse an expression in z only; `y` is rejected as a disallowed variable.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let b = Parser::new(text, false)?.parse_full()?;
    Ok(b.coeff_y(0))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    VarZ,
    VarY,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    input_len: usize,
    allow_y: bool,
}

impl Parser {
    fn new(text: &str, allow_y: bool) -> Result<Self, ParseError> {
        let mut tokens = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\n' | '\r' => {
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits = &text[start..i];
                    let n = digits.parse::<BigInt>().map_err(|_| ParseError {
                        position: start,
                        message: format!("invalid number {:?}", digits),
                    })?;
                    tokens.push((Token::Num(n), start));
                }
                'z' => {
                    tokens.push((Token::VarZ, i));
                    i += 1;
                }
                'y' => {
                    tokens.push((Token::VarY, i));
                    i += 1;
                }
                '+' => {
                    tokens.push((Token::Plus, i));
                    i += 1;
                }
                '-' => {
                    tokens.push((Token::Minus, i));
                    i += 1;
                }
                '*' => {
                    tokens.push((Token::Star, i));
                    i += 1;
                }
                '/' => {
                    tokens.push((Token::Slash, i));
                    i += 1;
                }
                '^' => {
                    tokens.push((Token::Caret, i));
                    i += 1;
                }
                '(' => {
                    tokens.push((Token::LParen, i));
                    i += 1;
                }
                ')' => {
                    tokens.push((Token::RParen, i));
                    i += 1;
                }
                other => {
                    return Err(ParseError {
                        position: i,
                        message: format!("unexpected character {:?}", other),
                    });
                }
            }
        }
        Ok(Parser {
            tokens,
            pos: 0,
            input_len: text.len(),
            allow_y,
        })
    }

    fn parse_full(mut self) -> Result<BiPoly, ParseError> {
        let value = self.parse_expr()?;
        if let Some((_, at)) = self.tokens.get(self.pos) {
            return Err(ParseError {
                position: *at,
                message: "trailing input after expression".to_owned(),
            });
        }
        Ok(value)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, at)| *at)
            .unwrap_or(self.input_len)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut negate_first = false;
        match self.peek() {
            Some(Token::Plus) => {
                self.advance();
            }
            Some(Token::Minus) => {
                // Leading sign only when not attached to a number literal;
                // a number consumes its own sign in parse_base.
                if !matches!(
                    self.tokens.get(self.pos + 1).map(|(t, _)| t),
                    Some(Token::Num(_))
                ) {
                    self.advance();
                    negate_first = true;
                }
            }
            _ => {}
        }
        let mut acc = self.parse_term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    let t = self.parse_term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.advance();
                    let t = self.parse_term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.parse_factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.advance();
            let f = self.parse_factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.parse_base()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.advance();
            let at = self.here();
            match self.advance() {
                Some(Token::Num(n)) => {
                    let e = n.to_usize().ok_or_else(|| ParseError {
                        position: at,
                        message: "exponent too large".to_owned(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(ParseError {
                        position: at,
                        message: "exponent must be a natural number".to_owned(),
                    });
                }
            }
        }
        Ok(base)
    }

    fn parse_base(&mut self) -> Result<BiPoly, ParseError> {
        let at = self.here();
        match self.advance() {
            Some(Token::Num(n)) => self.finish_rational(n, at),
            Some(Token::Minus) => {
                let at2 = self.here();
                match self.advance() {
                    Some(Token::Num(n)) => self.finish_rational(-n, at2),
                    _ => Err(ParseError {
                        position: at2,
                        message: "expected a number after '-'".to_owned(),
                    }),
                }
            }
            Some(Token::VarZ) => Ok(BiPoly::from_poly(Poly::var())),
            Some(Token::VarY) => {
                if self.allow_y {
                    Ok(BiPoly::var_y())
                } else {
                    Err(ParseError {
                        position: at,
                        message: "variable 'y' is not allowed here".to_owned(),
                    })
                }
            }
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                let at2 = self.here();
                match self.advance() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(ParseError {
                        position: at2,
                        message: "expected ')'".to_owned(),
                    }),
                }
            }
            _ => Err(ParseError {
                position: at,
                message: "expected a number, variable, or '('".to_owned(),
            }),
        }
    }

    fn finish_rational(&mut self, numer: BigInt, at: usize) -> Result<BiPoly, ParseError> {
        let mut denom = BigInt::from(1);
        if matches!(self.peek(), Some(Token::Slash)) {
            self.advance();
            let at2 = self.here();
            match self.advance() {
                Some(Token::Num(d)) => {
                    if d.is_zero() {
                        return Err(ParseError {
                            position: at2,
                            message: "zero denominator".to_owned(),
                        });
                    }
                    denom = d;
                }
                _ => {
                    return Err(ParseError {
                        position: at2,
                        message: "expected a natural number after '/'".to_owned(),
                    });
                }
            }
        }
        let _ = at;
        Ok(BiPoly::from_poly(Poly::constant(Rat::new(numer, denom))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn p(ints: &[i64]) -> Poly {
        Poly::new(ints.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn parses_spec_examples() {
        let b = parse_bipoly("y^2 - (1+z)").unwrap();
        assert_eq!(b, BiPoly::new(vec![p(&[-1, -1]), Poly::zero(), p(&[1])]));

        let q = parse_poly("3/2*z^2 - z").unwrap();
        assert_eq!(
            q,
            Poly::new(vec![rat_int(0), rat_int(-1), Rat::new(3.into(), 2.into())])
        );

        let e = parse_bipoly("y^-1").unwrap_err();
        assert!(e.message.contains("natural"));
    }

    #[test]
    fn leading_sign_and_signed_numbers() {
        assert_eq!(parse_poly("-z").unwrap(), p(&[0, -1]));
        assert_eq!(parse_poly("-z + 1").unwrap(), p(&[1, -1]));
        assert_eq!(parse_poly("2*-3").unwrap(), p(&[-6]));
        assert_eq!(parse_poly("1 - -2").unwrap(), p(&[3]));
        assert_eq!(parse_bipoly("-(y - z)").unwrap(), parse_bipoly("z - y").unwrap());
    }

    #[test]
    fn rejects_bad_syntax() {
        assert!(parse_poly("2z").is_err(), "implicit multiplication");
        assert!(parse_poly("z/2").is_err(), "division of variables");
        assert!(parse_poly("1/2/3").is_err());
        assert!(parse_poly("(1+z").is_err());
        assert!(parse_poly("x").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("1/0").is_err());
        let e = parse_poly("y + z").unwrap_err();
        assert_eq!(e.position, 0);
        assert!(e.message.contains("not allowed"));
    }

    #[test]
    fn exponent_applies_to_base() {
        assert_eq!(parse_poly("(1+z)^2").unwrap(), p(&[1, 2, 1]));
        assert_eq!(parse_poly("2^3").unwrap(), p(&[8]));
        assert_eq!(parse_poly("z^0").unwrap(), p(&[1]));
    }
}
