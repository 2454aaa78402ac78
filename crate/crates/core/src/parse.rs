//! Text syntax for polynomials: sums of terms `c*x^a*y^b*...`.
//!
//! Accepted grammar (whitespace insensitive):
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor ('*' factor)*
//! factor := coeff | var ('^' uint)?
//! coeff  := uint ('/' uint)?
//! ```
//! Variable names come from the ring; unknown names are reported with their
//! position.

use crate::field::Field;
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::{Error, Result};

pub fn parse_poly<F: Field>(ring: &PolyRing<F>, input: &str) -> Result<Poly<F>> {
    Parser {
        ring,
        chars: input.char_indices().collect(),
        pos: 0,
        input,
    }
    .parse()
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    chars: Vec<(usize, char)>,
    pos: usize,
    input: &'a str,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err(&self, msg: impl Into<String>) -> Error {
        let pos = self
            .chars
            .get(self.pos)
            .map(|(b, _)| *b)
            .unwrap_or(self.input.len());
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse(&mut self) -> Result<Poly<F>> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty polynomial"));
        }
        let mut acc = self.ring.zero_poly();
        let mut sign_neg = false;
        match self.peek() {
            Some('-') => {
                sign_neg = true;
                self.bump();
            }
            Some('+') => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let term = self.parse_term()?;
            acc = if sign_neg {
                self.ring.sub(&acc, &term)
            } else {
                self.ring.add(&acc, &term)
            };
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    sign_neg = false;
                    self.bump();
                }
                Some('-') => {
                    sign_neg = true;
                    self.bump();
                }
                Some(c) => return Err(self.err(format!("expected '+' or '-', found {c:?}"))),
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Poly<F>> {
        let mut term = self.ring.one_poly();
        loop {
            self.skip_ws();
            let factor = self.parse_factor()?;
            term = self.ring.mul(&term, &factor);
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
            } else {
                break;
            }
        }
        Ok(term)
    }

    fn parse_factor(&mut self) -> Result<Poly<F>> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint()? as i64;
                self.skip_ws();
                if self.peek() == Some('/') {
                    self.bump();
                    self.skip_ws();
                    let den = self.parse_uint()? as i64;
                    let c = self
                        .ring
                        .field
                        .from_ratio(num, den)
                        .map_err(|e| self.err(e.to_string()))?;
                    Ok(self.ring.constant(c))
                } else {
                    Ok(self.ring.int_poly(num))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.parse_name();
                let idx = self
                    .ring
                    .vars()
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.err(format!("unknown variable {name:?}")))?;
                self.skip_ws();
                let exp = if self.peek() == Some('^') {
                    self.bump();
                    self.skip_ws();
                    self.parse_uint()?
                } else {
                    1
                };
                Ok(self.ring.pow(&self.ring.var_poly(idx), exp as u32))
            }
            Some(c) => Err(self.err(format!("unexpected character {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn parse_name(&mut self) -> String {
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            s.push(self.bump().unwrap());
        }
        s
    }

    fn parse_uint(&mut self) -> Result<u64> {
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        if s.is_empty() {
            return Err(self.err("expected a number"));
        }
        s.parse::<u64>().map_err(|_| self.err("number too large"))
    }
}
