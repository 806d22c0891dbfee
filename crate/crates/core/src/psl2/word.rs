//! Words in the generators `S`, `T` of PSL₂(ℤ) and `A = T²`, `B = ST²S⁻¹`
//! of Γ(2).

use std::fmt;

use super::matrix::{MatSL2, PSL2Elem};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    S,
    T,
    A,
    B,
}

impl Gen {
    pub fn matrix(self) -> MatSL2 {
        match self {
            Gen::S => MatSL2::s(),
            Gen::T => MatSL2::t(),
            Gen::A => MatSL2::gen_a(),
            Gen::B => MatSL2::gen_b(),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Gen::S => 'S',
            Gen::T => 'T',
            Gen::A => 'A',
            Gen::B => 'B',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Gen(Gen),
    Group(Word),
}

/// A product of powered factors, evaluated left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word {
    pub factors: Vec<(Factor, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Word made of plain generator powers.
    pub fn from_letters(letters: &[(Gen, i64)]) -> Self {
        Word {
            factors: letters.iter().map(|&(g, e)| (Factor::Gen(g), e)).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Generator powers with groups expanded, adjacent equal generators
    /// merged and zero powers dropped.
    pub fn letters(&self) -> Vec<(Gen, i64)> {
        let mut expanded: Vec<(Gen, i64)> = Vec::new();
        for (f, e) in &self.factors {
            match f {
                Factor::Gen(g) => expanded.push((*g, *e)),
                Factor::Group(w) => {
                    let inner = w.letters();
                    let (part, times) = if *e < 0 {
                        (invert_letters(&inner), e.unsigned_abs())
                    } else {
                        (inner, *e as u64)
                    };
                    for _ in 0..times {
                        expanded.extend(part.iter().copied());
                    }
                }
            }
        }
        let mut out = Vec::new();
        for l in expanded {
            push_reduced(&mut out, l);
        }
        out
    }

    pub fn eval_matrix(&self) -> MatSL2 {
        self.factors.iter().fold(MatSL2::identity(), |acc, (f, e)| {
            let m = match f {
                Factor::Gen(g) => g.matrix(),
                Factor::Group(w) => w.eval_matrix(),
            };
            &acc * &m.pow(*e)
        })
    }

    /// Parse text such as `(TS)T^4(TS)^-1`, `ST^2S^-1` or `B^-1A^-1`.
    /// `I` or an empty string is the identity.
    pub fn parse(src: &str) -> Result<Word> {
        let chars: Vec<char> = src.chars().collect();
        let mut pos = 0;
        let w = parse_seq(&chars, &mut pos)?;
        skip_ws(&chars, &mut pos);
        if pos < chars.len() {
            return Err(Error::parse(pos + 1, "unexpected character"));
        }
        Ok(w)
    }
}

/// `word_eval`: the product as an element of PSL₂(ℤ).
pub fn word_eval(w: &Word) -> PSL2Elem {
    PSL2Elem::new(w.eval_matrix())
}

pub(crate) fn invert_letters(w: &[(Gen, i64)]) -> Vec<(Gen, i64)> {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

pub(crate) fn push_reduced(out: &mut Vec<(Gen, i64)>, (g, e): (Gen, i64)) {
    if e == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == g {
            last.1 += e;
            if last.1 == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push((g, e));
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while chars
        .get(*pos)
        .is_some_and(|c| c.is_whitespace() || *c == '*' || *c == '.')
    {
        *pos += 1;
    }
}

fn parse_seq(chars: &[char], pos: &mut usize) -> Result<Word> {
    let mut w = Word::empty();
    loop {
        skip_ws(chars, pos);
        let Some(&c) = chars.get(*pos) else {
            return Ok(w);
        };
        let factor = match c {
            'S' => Factor::Gen(Gen::S),
            'T' => Factor::Gen(Gen::T),
            'A' => Factor::Gen(Gen::A),
            'B' => Factor::Gen(Gen::B),
            'I' | '1' => {
                *pos += 1;
                continue;
            }
            '(' => {
                *pos += 1;
                let inner = parse_seq(chars, pos)?;
                skip_ws(chars, pos);
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::parse(*pos + 1, "expected ')'"));
                }
                Factor::Group(inner)
            }
            ')' => return Ok(w),
            _ => return Err(Error::parse(*pos + 1, format!("unexpected '{c}'"))),
        };
        *pos += 1;
        let mut e = 1i64;
        if chars.get(*pos) == Some(&'^') {
            *pos += 1;
            let paren = chars.get(*pos) == Some(&'(');
            if paren {
                *pos += 1;
            }
            let start = *pos;
            if chars.get(*pos) == Some(&'-') {
                *pos += 1;
            }
            while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let s: String = chars[start..*pos].iter().collect();
            e = s
                .parse()
                .map_err(|_| Error::parse(start + 1, "expected integer exponent"))?;
            if paren {
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::parse(*pos + 1, "expected ')'"));
                }
                *pos += 1;
            }
        }
        w.factors.push((factor, e));
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("I");
        }
        for (fac, e) in &self.factors {
            match fac {
                Factor::Gen(g) => write!(f, "{}", g.letter())?,
                Factor::Group(w) => write!(f, "({w})")?,
            }
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str) -> PSL2Elem {
        word_eval(&Word::parse(s).unwrap())
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(eval("TS"), PSL2Elem::new(MatSL2::from_i64(1, -1, 1, 0)));
        assert_eq!(
            eval("(TS)T^4(TS)^-1"),
            PSL2Elem::new(MatSL2::from_i64(-3, 4, -4, 5))
        );
        assert!(eval("SS").is_identity());
        assert!(eval("(ST)^3").is_identity());
        assert_eq!(eval("ST^2S^-1"), eval("B"));
        assert_eq!(eval("T^2"), eval("A"));
        assert!(eval("").is_identity());
    }

    #[test]
    fn printing_round_trips() {
        for s in ["(TS)T^4(TS)^-1", "B^-1A^-1B^-1A^-1", "S", "I", "(AB^2)^-3T"] {
            let w = Word::parse(s).unwrap();
            assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        }
        assert_eq!(
            Word::parse("(TS)^-1").unwrap().letters(),
            vec![(Gen::S, -1), (Gen::T, -1)]
        );
        assert_eq!(Word::parse("AA^-1B").unwrap().letters(), vec![(Gen::B, 1)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Word::parse("TX"),
            Err(Error::Parse { column: 2, .. })
        ));
        assert!(matches!(
            Word::parse("(TS"),
            Err(Error::Parse { column: 4, .. })
        ));
        assert!(Word::parse("T^").is_err());
    }
}
