//! Parser for rational-function expressions.
//!
//! Grammar (whitespace ignored, juxtaposition multiplies):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*
//! unary   := ('+' | '-') unary | power
//! power   := primary ('^' exponent)?
//! exponent:= '-'? digits | '(' '-'? digits ')'
//! primary := digits | VAR | 'i' | 'sqrt' '(' '-'? digits ')' | '(' expr ')'
//! ```
//!
//! `VAR` is the caller's variable name (`z` or `x`); `i` is accepted only
//! when requested and means `sqrt(-1)`. All irrational literals must lie in
//! one quadratic field.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::quadext::QuadExt;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Parsing options.
#[derive(Clone, Copy, Debug)]
pub struct Grammar<'a> {
    pub var: &'a str,
    pub allow_i: bool,
}

impl Default for Grammar<'_> {
    fn default() -> Self {
        Grammar {
            var: "z",
            allow_i: false,
        }
    }
}

pub fn parse_ratfunc(src: &str, grammar: Grammar<'_>) -> Result<RatFunc<QuadExt>> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        grammar,
        tag: None,
    };
    p.skip_ws();
    if p.pos == p.chars.len() {
        return Err(Error::parse(1, "empty expression"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(v)
}

/// Parse and require rational coefficients.
pub fn parse_rational(src: &str, var: &str) -> Result<RatFunc<BigRational>> {
    let f = parse_ratfunc(
        src,
        Grammar {
            var,
            allow_i: false,
        },
    )?;
    to_rational(&f).ok_or_else(|| Error::domain("expression has irrational coefficients"))
}

/// Coefficients as rationals, if they all are.
pub fn to_rational(f: &RatFunc<QuadExt>) -> Option<RatFunc<BigRational>> {
    let ok = f
        .numer()
        .coeffs()
        .iter()
        .chain(f.denom().coeffs())
        .all(QuadExt::is_rational);
    ok.then(|| f.map_field(|c| c.re().clone()))
}

pub fn lift(f: &RatFunc<BigRational>) -> RatFunc<QuadExt> {
    f.map_field(|c| QuadExt::rational(c.clone()))
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    grammar: Grammar<'a>,
    tag: Option<i64>,
}

type F = RatFunc<QuadExt>;

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos + 1, msg)
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::parse(pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<F> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<F> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some('/') => {
                    let at = self.pos;
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc
                        .checked_div(&rhs)
                        .map_err(|_| self.err_at(at, "division by zero"))?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<F> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<F> {
        let base = self.primary()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
        }
        let e = self.signed_int()?;
        if paren {
            self.expect(')')?;
        }
        let e: i32 = e
            .try_into()
            .map_err(|_| self.err_at(at, "exponent out of range"))?;
        base.powi(e)
            .map_err(|_| self.err_at(at, "negative power of zero"))
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let n = self.digits()?;
        Ok(if neg { -n } else { n })
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn scalar(&mut self, at: usize, x: QuadExt) -> Result<F> {
        if !x.is_rational() {
            match self.tag {
                Some(t) if t != x.tag() => {
                    return Err(self.err_at(at, "mixed quadratic fields"));
                }
                _ => self.tag = Some(x.tag()),
            }
        }
        Ok(RatFunc::constant(x))
    }

    fn primary(&mut self) -> Result<F> {
        let at = match self.peek() {
            None => return Err(self.err("unexpected end of input")),
            Some(_) => self.pos,
        };
        let c = self.chars[at];
        if c == '(' {
            self.pos += 1;
            let v = self.expr()?;
            self.expect(')')?;
            return Ok(v);
        }
        if c.is_ascii_digit() {
            let n = self.digits()?;
            return Ok(RatFunc::constant(QuadExt::rational(
                BigRational::from_integer(n),
            )));
        }
        if c.is_alphabetic() {
            let mut end = at;
            while self.chars.get(end).is_some_and(|c| c.is_alphabetic()) {
                end += 1;
            }
            let word: String = self.chars[at..end].iter().collect();
            self.pos = end;
            if word == self.grammar.var {
                return Ok(RatFunc::var());
            }
            if word == "i" && self.grammar.allow_i {
                return self.scalar(at, QuadExt::sqrt(-1).unwrap());
            }
            if word == "sqrt" {
                self.expect('(')?;
                let arg_at = self.pos;
                let n = self.signed_int()?;
                self.expect(')')?;
                let n: i64 = n
                    .try_into()
                    .map_err(|_| self.err_at(arg_at, "sqrt argument out of range"))?;
                let x = QuadExt::sqrt(n).map_err(|e| self.err_at(arg_at, e.to_string()))?;
                return self.scalar(at, x);
            }
            return Err(self.err_at(at, format!("unknown identifier '{word}'")));
        }
        Err(self.err_at(at, "unexpected character"))
    }
}
