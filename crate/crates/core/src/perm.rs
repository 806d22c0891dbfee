//! Permutations of `{1..n}`, stored 0-based.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n).collect(),
        }
    }

    /// From 0-based images; rejects non-bijections.
    pub fn from_images(img: Vec<usize>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &i in &img {
            if i >= n || seen[i] {
                return Err(Error::domain("image list is not a permutation"));
            }
            seen[i] = true;
        }
        Ok(Perm { img })
    }

    /// From 1-based cycles on `{1..n}`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::domain(format!("point {x} outside 1..{n}")));
                }
                if used[x - 1] {
                    return Err(Error::domain(format!("point {x} repeated")));
                }
                used[x - 1] = true;
                img[x - 1] = cyc[(k + 1) % cyc.len()] - 1;
            }
        }
        Ok(Perm { img })
    }

    /// Parse cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    /// The degree is the largest point mentioned unless `n` is given.
    pub fn parse(src: &str, n: Option<usize>) -> Result<Self> {
        let chars: Vec<char> = src.chars().collect();
        let mut cycles = Vec::new();
        let mut pos = 0;
        let skip = |pos: &mut usize| {
            while chars
                .get(*pos)
                .is_some_and(|c| c.is_whitespace() || *c == ',')
            {
                *pos += 1;
            }
        };
        skip(&mut pos);
        while pos < chars.len() {
            if chars[pos] != '(' {
                return Err(Error::parse(pos + 1, "expected '('"));
            }
            pos += 1;
            let mut cyc = Vec::new();
            loop {
                skip(&mut pos);
                match chars.get(pos) {
                    None => return Err(Error::parse(pos + 1, "unclosed cycle")),
                    Some(')') => {
                        pos += 1;
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let start = pos;
                        while chars.get(pos).is_some_and(|c| c.is_ascii_digit()) {
                            pos += 1;
                        }
                        let s: String = chars[start..pos].iter().collect();
                        let x: usize = s
                            .parse()
                            .map_err(|_| Error::parse(start + 1, "point out of range"))?;
                        if x == 0 {
                            return Err(Error::parse(start + 1, "points are numbered from 1"));
                        }
                        cyc.push(x);
                    }
                    Some(_) => return Err(Error::parse(pos + 1, "unexpected character")),
                }
            }
            cycles.push(cyc);
            skip(&mut pos);
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = match n {
            Some(n) if n < max => {
                return Err(Error::domain(format!("point {max} exceeds degree {n}")))
            }
            Some(n) => n,
            None => max.max(1),
        };
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    /// Apply `self`, then `next`.
    pub fn then(&self, next: &Perm) -> Perm {
        assert_eq!(self.degree(), next.degree(), "degree mismatch");
        Perm {
            img: self.img.iter().map(|&i| next.img[i]).collect(),
        }
    }

    /// Function composition `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &Perm) -> Perm {
        inner.then(self)
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            img[j] = i;
        }
        Perm { img }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Perm::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// All cycles including fixed points, 0-based, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.img[i];
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn fixed_points(&self) -> usize {
        self.img
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .count()
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Conjugate by a relabeling `r`: point `r(i)` goes where `i` went.
    pub fn relabel(&self, r: &Perm) -> Perm {
        r.inverse().then(self).then(r)
    }
}

/// Whether the group generated by `gens` acts transitively.
pub fn is_transitive(gens: &[Perm]) -> bool {
    let Some(n) = gens.first().map(Perm::degree) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = n > 0;
    let mut count = usize::from(n > 0);
    while let Some(i) = stack.pop() {
        for g in gens {
            for j in [g.apply(i), g.inverse().apply(i)] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
    }
    count == n
}

impl fmt::Display for Perm {
    /// Nontrivial cycles, 1-based; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse("(1 2 3)(4 5)", None).unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse("()", Some(3)).unwrap(), Perm::identity(3));
        assert_eq!(Perm::parse("(1,3)", Some(4)).unwrap().to_string(), "(1 3)");
        assert!(matches!(
            Perm::parse("(1 2", None),
            Err(Error::Parse { column: 5, .. })
        ));
        assert!(matches!(
            Perm::parse("(1 x)", None),
            Err(Error::Parse { column: 4, .. })
        ));
        assert!(Perm::parse("(1 2)(2 3)", None).is_err());
        assert!(Perm::parse("(1 7)", Some(3)).is_err());
    }

    #[test]
    fn composition_order() {
        let a = Perm::parse("(1 2)", Some(3)).unwrap();
        let b = Perm::parse("(2 3)", Some(3)).unwrap();
        // 1 -> 2 under a, then 2 -> 3 under b
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(b.compose(&a), a.then(&b));
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.then(&b).pow(3), Perm::identity(3));
        assert_eq!(a.then(&b).pow(-1), a.then(&b).inverse());
    }

    #[test]
    fn transitivity() {
        let a = Perm::parse("(1 2 3)", Some(6)).unwrap();
        let b = Perm::parse("(2 3 4 5 6)", Some(6)).unwrap();
        assert!(is_transitive(&[a.clone(), b]));
        assert!(!is_transitive(&[a]));
    }

    #[test]
    fn relabel_preserves_cycle_type() {
        let p = Perm::parse("(1 2 3)(4 5)", None).unwrap();
        let r = Perm::parse("(1 5 2)", Some(5)).unwrap();
        let q = p.relabel(&r);
        assert_eq!(q.cycle_type(), p.cycle_type());
        assert_eq!(q.apply(r.apply(0)), r.apply(p.apply(0)));
    }
}
