//! Plain-text polynomial format.
//!
//! Terms are written like `-3/2*x1^2*z1`, joined by `+` or `-`; the zero
//! polynomial prints as `0`. Whitespace is ignored.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Coeff, Polynomial};
use crate::space::{Var, VarSpace};

fn write_monomial(f: &mut fmt::Formatter<'_>, space: VarSpace, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", space.var(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = t.coeff.abs();
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.space(), &t.mono)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse { pos: self.pos, msg: msg.into() })
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

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn number(&mut self) -> Result<Coeff> {
        let num: BigInt = self.digits()?.parse().expect("digits");
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den: BigInt = self.digits()?.parse().expect("digits");
            if den.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn variable(&mut self, space: VarSpace) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let kind = self.src[self.pos];
        self.pos += 1;
        let idx: usize = match self.digits()?.parse() {
            Ok(i) => i,
            Err(_) => {
                self.pos = start;
                return self.err("variable index too large");
            }
        };
        let var = match kind {
            b't' => Var::T(idx),
            b'x' => Var::X(idx),
            b'y' => Var::Y(idx),
            b'z' => Var::Z(idx),
            _ => unreachable!(),
        };
        space.index(var).map_err(|_| AlgebraError::Parse {
            pos: start,
            msg: format!("variable {var} does not exist in {space}"),
        })
    }

    /// One factor of a term: a number or a variable with optional power.
    fn factor(&mut self, space: VarSpace, c: &mut Coeff, exps: &mut [u16]) -> Result<()> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                *c *= self.number()?;
            }
            Some(b't' | b'x' | b'y' | b'z') => {
                let v = self.variable(space)?;
                let mut e: u16 = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e = match self.digits()?.parse() {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent too large"),
                    };
                }
                exps[v] = match exps[v].checked_add(e) {
                    Some(v) => v,
                    None => return self.err("exponent overflow"),
                };
            }
            Some(ch) => return self.err(format!("unexpected character '{}'", ch as char)),
            None => return self.err("unexpected end of input"),
        }
        Ok(())
    }

    fn term(&mut self, space: VarSpace) -> Result<(Coeff, Monomial)> {
        let mut c = Coeff::one();
        let mut exps = vec![0u16; space.nvars()];
        self.factor(space, &mut c, &mut exps)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(space, &mut c, &mut exps)?;
        }
        Ok((c, Monomial::from_exponents(exps)))
    }
}

/// Parses a polynomial in `space`.
pub fn parse(src: &str, space: VarSpace, order: MonomialOrder) -> Result<Polynomial> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut neg = false;
        match p.peek() {
            None if first => return p.err("empty input"),
            None => break,
            Some(b'+') if !first => p.pos += 1,
            Some(b'-') => {
                p.pos += 1;
                neg = true;
            }
            Some(_) if first => {}
            Some(ch) => return p.err(format!("expected '+' or '-', found '{}'", ch as char)),
        }
        first = false;
        let (c, m) = p.term(space)?;
        terms.push((if neg { -c } else { c }, m));
    }
    Ok(Polynomial::from_terms(space, order, terms))
}

impl Polynomial {
    pub fn parse(src: &str, space: VarSpace, order: MonomialOrder) -> Result<Polynomial> {
        parse(src, space, order)
    }
}
