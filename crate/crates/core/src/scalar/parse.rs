//! Recursive-descent parser for scalar expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ['^' uint]
//! atom   := rational | ident | '(' expr ')'
//! rational := digits ['/' digits]
//! ```
//!
//! `-a^2` parses as `-(a^2)`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Monomial, Params, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Parses `text` into the canonical scalar over `params`.
pub fn parse_scalar(text: &str, params: &Params) -> Result<Scalar, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        params,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error(ParseErrorKind::UnexpectedChar(parser.src[parser.pos] as char)));
    }
    Ok(value.with_params(params).expect("parser stays in context"))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    params: &'a Params,
}

impl Parser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(b'-') => return Err(self.error(ParseErrorKind::NegativeExponent)),
                Some(c) if c.is_ascii_digit() => {}
                Some(_) => return Err(self.error(ParseErrorKind::Expected("exponent"))),
                None => return Err(self.error(ParseErrorKind::UnexpectedEnd)),
            }
            let start = self.pos;
            let digits = self.digits();
            let exponent: u32 = digits.parse().map_err(|_| ParseError {
                position: start,
                kind: ParseErrorKind::ExponentTooLarge,
            })?;
            return Ok(base.pow(exponent));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(_) => Err(self.error(ParseErrorKind::Expected("`)`"))),
                    None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let numer: BigInt = self.digits().parse().expect("digits");
                // no whitespace allowed inside a rational literal
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    if !matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
                        return Err(self.error(ParseErrorKind::Expected("denominator")));
                    }
                    let at = self.pos;
                    let denom: BigInt = self.digits().parse().expect("digits");
                    if denom.is_zero() {
                        return Err(ParseError {
                            position: at,
                            kind: ParseErrorKind::ZeroDenominator,
                        });
                    }
                    Ok(Scalar::constant(Rational::new(numer, denom)))
                } else {
                    Ok(Scalar::constant(Rational::from_integer(numer)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match self.params.index_of(&name) {
                    Some(i) => Ok(Scalar::from_terms(
                        self.params,
                        [(Monomial::var(i), Rational::from_integer(1.into()))],
                    )),
                    None => Err(ParseError {
                        position: start,
                        kind: ParseErrorKind::UnknownIdentifier(name),
                    }),
                }
            }
            Some(c) => Err(self.error(ParseErrorKind::UnexpectedChar(c as char))),
        }
    }
}
