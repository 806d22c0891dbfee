//! Finite-index subgroups of PSL₂(ℤ) described by a small spec.

use std::fmt;

use super::gamma2::gamma2_word_decompose;
use super::matrix::{MatSL2, PSL2Elem};
use super::word::{Gen, Word};
use crate::error::{Error, Result};
use crate::perm::{is_transitive, Perm};

/// Homomorphism from the free group Γ̄(2) = ⟨A, B⟩ onto a transitive
/// permutation group, given by the images of `A = T²` and `B = ST²S⁻¹`.
///
/// Words map by function composition: `φ(gh) = φ(g) ∘ φ(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelHom {
    sigma_a: Perm,
    sigma_b: Perm,
}

impl KernelHom {
    pub fn new(sigma_a: Perm, sigma_b: Perm) -> Result<Self> {
        if sigma_a.degree() != sigma_b.degree() {
            return Err(Error::domain("images act on different point sets"));
        }
        if !is_transitive(&[sigma_a.clone(), sigma_b.clone()]) {
            return Err(Error::domain("images do not generate a transitive group"));
        }
        Ok(KernelHom { sigma_a, sigma_b })
    }

    pub fn sigma_a(&self) -> &Perm {
        &self.sigma_a
    }

    pub fn sigma_b(&self) -> &Perm {
        &self.sigma_b
    }

    pub fn degree(&self) -> usize {
        self.sigma_a.degree()
    }

    /// Image of a word in `A`, `B`.
    pub fn eval_letters(&self, letters: &[(Gen, i64)]) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for &(g, e) in letters {
            let p = match g {
                Gen::A => self.sigma_a.pow(e),
                Gen::B => self.sigma_b.pow(e),
                _ => unreachable!("free words use only A and B"),
            };
            acc = p.then(&acc);
        }
        acc
    }

    /// Image of an element of Γ̄(2); `None` outside Γ̄(2).
    pub fn image(&self, g: &PSL2Elem) -> Option<Perm> {
        let w = gamma2_word_decompose(g).ok()?;
        Some(self.eval_letters(&w.letters()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// Γ(N).
    Principal(u64),
    /// Γ₀(N).
    GammaZero(u64),
    /// Kernel of a homomorphism Γ̄(2) → S_k.
    Kernel(KernelHom),
    /// Γ(N) extended by one extra element.
    Join { n: u64, word: Word },
}

impl SubgroupSpec {
    pub fn principal(n: u64) -> Result<Self> {
        check_level(n)?;
        Ok(SubgroupSpec::Principal(n))
    }

    pub fn gamma0(n: u64) -> Result<Self> {
        check_level(n)?;
        Ok(SubgroupSpec::GammaZero(n))
    }

    pub fn kernel(sigma_a: Perm, sigma_b: Perm) -> Result<Self> {
        Ok(SubgroupSpec::Kernel(KernelHom::new(sigma_a, sigma_b)?))
    }

    pub fn join(n: u64, word: Word) -> Result<Self> {
        check_level(n)?;
        Ok(SubgroupSpec::Join { n, word })
    }

    /// Parse `gamma:N`, `gamma0:N`, `kernel:sigmaA=<cycles>;sigmaB=<cycles>`
    /// or `join:gamma:N;word=<word>`.
    pub fn parse(src: &str) -> Result<Self> {
        let src = src.trim();
        let level = |s: &str, col: usize| -> Result<u64> {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(col, format!("bad level '{s}'")))
        };
        if let Some(rest) = src.strip_prefix("gamma0:") {
            return Self::gamma0(level(rest, 8)?);
        }
        if let Some(rest) = src.strip_prefix("gamma:") {
            return Self::principal(level(rest, 7)?);
        }
        if let Some(rest) = src.strip_prefix("kernel:") {
            let (a, b) = rest
                .split_once(';')
                .ok_or_else(|| Error::parse(8, "expected sigmaA=...;sigmaB=..."))?;
            let a = a
                .trim()
                .strip_prefix("sigmaA=")
                .ok_or_else(|| Error::parse(8, "expected sigmaA="))?;
            let b_col = 8 + rest.find(';').unwrap() + 1;
            let b = b
                .trim()
                .strip_prefix("sigmaB=")
                .ok_or_else(|| Error::parse(b_col + 1, "expected sigmaB="))?;
            let pa = Perm::parse(a, None)?;
            let pb = Perm::parse(b, None)?;
            let n = pa.degree().max(pb.degree());
            return Self::kernel(Perm::parse(a, Some(n))?, Perm::parse(b, Some(n))?);
        }
        if let Some(rest) = src.strip_prefix("join:gamma:") {
            let (n, w) = rest
                .split_once(';')
                .ok_or_else(|| Error::parse(12, "expected ;word=..."))?;
            let w = w
                .trim()
                .strip_prefix("word=")
                .ok_or_else(|| Error::parse(12 + n.len() + 1, "expected word="))?;
            return Self::join(level(n, 12)?, Word::parse(w)?);
        }
        Err(Error::parse(1, format!("unknown subgroup spec '{src}'")))
    }

    /// Whether the subgroup lies in Γ̄(2).
    pub fn in_gamma2(&self) -> bool {
        match self {
            SubgroupSpec::Principal(n) => n % 2 == 0,
            SubgroupSpec::GammaZero(_) => false,
            SubgroupSpec::Kernel(_) => true,
            SubgroupSpec::Join { n, word } => n % 2 == 0 && word.eval_matrix().in_gamma2(),
        }
    }

    /// Exact membership test.
    pub fn is_member(&self, g: &PSL2Elem) -> bool {
        let m = g.matrix();
        match self {
            SubgroupSpec::Principal(n) => congruent_pm_identity(m, *n),
            SubgroupSpec::GammaZero(n) => m.residues(*n)[2] == 0,
            SubgroupSpec::Kernel(h) => h.image(g).is_some_and(|p| p.is_identity()),
            SubgroupSpec::Join { n, word } => {
                let gen = word.eval_matrix();
                join_powers(&gen, *n)
                    .iter()
                    .any(|p| congruent_pm_identity(&(&p.inverse() * m), *n))
            }
        }
    }
}

fn check_level(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("level must be at least 1"));
    }
    Ok(())
}

pub(crate) fn congruent_pm_identity(m: &MatSL2, n: u64) -> bool {
    let r = m.residues(n);
    let minus = (n - 1) % n.max(1);
    r == [1 % n, 0, 0, 1 % n] || r == [minus, 0, 0, minus]
}

/// Powers `γ^k` for `k` in one period of `γ` modulo `±Γ(N)`.
pub(crate) fn join_powers(gen: &MatSL2, n: u64) -> Vec<MatSL2> {
    let mut out = vec![MatSL2::identity()];
    let mut p = gen.clone();
    while !congruent_pm_identity(&p, n) {
        out.push(p.clone());
        p = &p * gen;
    }
    out
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSpec::Principal(n) => write!(f, "gamma:{n}"),
            SubgroupSpec::GammaZero(n) => write!(f, "gamma0:{n}"),
            SubgroupSpec::Kernel(h) => {
                write!(f, "kernel:sigmaA={};sigmaB={}", h.sigma_a, h.sigma_b)
            }
            SubgroupSpec::Join { n, word } => write!(f, "join:gamma:{n};word={word}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psl2::word::word_eval;

    fn a6() -> SubgroupSpec {
        SubgroupSpec::parse("kernel:sigmaA=(1 2 3);sigmaB=(2 3 4 5 6)").unwrap()
    }

    #[test]
    fn membership_examples() {
        let t = PSL2Elem::new(MatSL2::t());
        assert!(SubgroupSpec::gamma0(11).unwrap().is_member(&t));
        let m = PSL2Elem::new(MatSL2::from_i64(1, 3, 3, 10));
        assert!(SubgroupSpec::principal(3).unwrap().is_member(&m));
        assert!(!a6().is_member(&PSL2Elem::new(MatSL2::gen_a())));
        assert!(!a6().is_member(&t));
        let a3 = PSL2Elem::new(MatSL2::gen_a().pow(3));
        assert!(a6().is_member(&a3));
        assert!(SubgroupSpec::principal(1).unwrap().is_member(&t));
    }

    #[test]
    fn homomorphism_convention() {
        // (TS)T^2(TS)^-1 = B^-1 A^-1 maps to (23456)^-1 ∘ (123)^-1 = (1 2)(3 6 5 4)
        let h = match a6() {
            SubgroupSpec::Kernel(h) => h,
            _ => unreachable!(),
        };
        let g = word_eval(&Word::parse("(TS)T^2(TS)^-1").unwrap());
        assert_eq!(h.image(&g).unwrap().to_string(), "(1 2)(3 6 5 4)");
    }

    #[test]
    fn join_membership() {
        let spec = SubgroupSpec::parse("join:gamma:6;word=T^3").unwrap();
        assert!(spec.is_member(&PSL2Elem::new(MatSL2::t().pow(3))));
        assert!(!spec.is_member(&PSL2Elem::new(MatSL2::t())));
        assert!(spec.is_member(&PSL2Elem::new(MatSL2::from_i64(1, 3, 6, 19))));
    }

    #[test]
    fn parsing() {
        assert_eq!(
            SubgroupSpec::parse("gamma0:11").unwrap(),
            SubgroupSpec::GammaZero(11)
        );
        assert_eq!(a6().to_string(), "kernel:sigmaA=(1 2 3);sigmaB=(2 3 4 5 6)");
        assert!(SubgroupSpec::parse("gamma:0").is_err());
        assert!(SubgroupSpec::parse("gamma:x").is_err());
        assert!(SubgroupSpec::parse("kernel:sigmaA=(1 2);sigmaB=(3 4)").is_err());
        assert!(SubgroupSpec::parse("delta:3").is_err());
        let j = SubgroupSpec::parse("join:gamma:6;word=T^3").unwrap();
        assert_eq!(SubgroupSpec::parse(&j.to_string()).unwrap(), j);
    }
}
