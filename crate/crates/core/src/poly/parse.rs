//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```

use super::MultiPoly;
use crate::error::{Error, Result};

const MAX_EXPONENT: u64 = 1_000_000;
const ALL_NAMES: [&str; 12] = [
    "x", "y", "z", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9",
];

/// Conventional variable names for `n` variables: `x, y, z` up to three, else `x1..xn`.
pub fn variable_names(n: usize) -> Vec<&'static str> {
    match n {
        0..=3 => ALL_NAMES[..n].to_vec(),
        _ => ALL_NAMES[3..3 + n.min(9)].to_vec(),
    }
}

/// Parses `expr` as a polynomial in `vars`, with coefficients reduced mod `modulus`.
pub fn parse(expr: &str, vars: &[&str], modulus: u64) -> Result<MultiPoly> {
    let mut parser = Parser {
        src: expr.as_bytes(),
        pos: 0,
        vars,
        m: modulus,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses a polynomial in `x` and `y`.
pub fn parse_bivariate(expr: &str, modulus: u64) -> Result<MultiPoly> {
    parse(expr, &["x", "y"], modulus)
}

/// Parses a polynomial in `z`.
pub fn parse_univariate(expr: &str, modulus: u64) -> Result<MultiPoly> {
    parse(expr, &["z"], modulus)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
    m: u64,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
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

    fn constant(&self, c: u64) -> MultiPoly {
        MultiPoly::constant(self.vars.len(), c, self.m)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' {
                acc.add(&rhs, self.m)
            } else {
                acc.sub(&rhs, self.m)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = acc.mul(&rhs, self.m);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(inner.scale(self.m - 1, self.m));
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        if self.peek() == Some(b'-') {
            return self.negative_power(base);
        }
        let start = self.pos;
        let e = self.integer(None)?;
        if e > MAX_EXPONENT as u128 {
            self.pos = start;
            return Err(self.error("exponent too large"));
        }
        Ok(base.pow(e as u64, self.m))
    }

    /// `v^-k` for a bare monomial `v` with coefficient 1.
    fn negative_power(&mut self, base: MultiPoly) -> Result<MultiPoly> {
        let start = self.pos;
        self.pos += 1;
        self.skip_ws();
        let e = self.integer(None)?;
        let terms = base.terms();
        if terms.len() != 1 || terms[0].1 != 1 {
            self.pos = start;
            return Err(self.error("negative exponents apply only to monomials"));
        }
        if e > MAX_EXPONENT as u128 {
            self.pos = start;
            return Err(self.error("exponent too large"));
        }
        let exp = terms[0].0.iter().map(|&v| -v * e as i32).collect();
        Ok(MultiPoly::from_terms(base.nvars, [(exp, 1)], self.m))
    }

    /// Reads decimal digits; reduces mod `modulus` when one is given.
    fn integer(&mut self, modulus: Option<u64>) -> Result<u128> {
        let start = self.pos;
        let mut v: u128 = 0;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            v = v * 10 + (b - b'0') as u128;
            v = match modulus {
                Some(m) => v % m as u128,
                None => v.min(u64::MAX as u128),
            };
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let Some(b) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        if b.is_ascii_digit() {
            let v = self.integer(Some(self.m))?;
            return Ok(self.constant(v as u64));
        }
        if b == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(self.error("expected `)`"));
            }
            self.pos += 1;
            return Ok(inner);
        }
        if b.is_ascii_alphabetic() {
            let start = self.pos;
            while self
                .src
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return match self.vars.iter().position(|v| *v == name) {
                Some(k) => Ok(MultiPoly::var(self.vars.len(), k, self.m)),
                None => Err(Error::UnknownVariable {
                    name: name.to_string(),
                    offset: start,
                }),
            };
        }
        Err(self.error("expected a number, variable or `(`"))
    }
}

impl MultiPoly {
    /// Convenience: a polynomial with explicit coefficients, from text.
    pub fn parse_in(expr: &str, nvars: usize, modulus: u64) -> Result<Self> {
        parse(expr, &variable_names(nvars), modulus)
    }
}
