//! Right-coset enumeration for subgroups of Γ̄(1) or Γ̄(2).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::matrix::{MatSL2, PSL2Elem};
use super::subgroup::{join_powers, SubgroupSpec};
use super::word::{push_reduced, Gen, Word};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Largest index the enumerator will build.
pub const MAX_INDEX: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// Γ̄(1) with generators `S`, `T`.
    Gamma1,
    /// Γ̄(2) with generators `A = T²`, `B = ST²S⁻¹`.
    Gamma2,
}

impl Ambient {
    pub fn generators(self) -> [Gen; 2] {
        match self {
            Ambient::Gamma1 => [Gen::S, Gen::T],
            Ambient::Gamma2 => [Gen::A, Gen::B],
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Gamma1 => "gamma1",
            Ambient::Gamma2 => "gamma2",
        })
    }
}

/// Right cosets `Γ·rᵢ` (0-based `i`, coset 0 is `Γ` itself) with the
/// permutation `σ_g : i ↦ j` where `rᵢ·g ∈ Γ·rⱼ`.
#[derive(Clone, Debug)]
pub struct CosetTable {
    ambient: Ambient,
    spec: SubgroupSpec,
    gens: [Perm; 2],
    reps: Vec<Vec<Gen>>,
    rep_mats: Vec<MatSL2>,
    lookup: HashMap<Vec<i64>, usize>,
}

/// Mod-2 classes of Γ̄(1)/Γ̄(2): `I, S, T, ST, TS, STS`.
fn gamma2_transversal() -> [MatSL2; 6] {
    let (s, t) = (MatSL2::s(), MatSL2::t());
    [
        MatSL2::identity(),
        s.clone(),
        t.clone(),
        &s * &t,
        &t * &s,
        &(&s * &t) * &s,
    ]
}

fn units(n: u64) -> Vec<u64> {
    (1..n.max(2))
        .filter(|&u| num_integer::gcd(u, n) == 1)
        .collect()
}

/// Key identifying the right coset of `g`, or `None` when `g` is not in
/// the ambient group.
fn coset_key(spec: &SubgroupSpec, ambient: Ambient, g: &MatSL2) -> Option<Vec<i64>> {
    if ambient == Ambient::Gamma2 && !g.in_gamma2() {
        return None;
    }
    let signed_min = |m: &MatSL2, n: u64| {
        let r = m.residues(n);
        let s = m.neg().residues(n);
        r.min(s).iter().map(|&x| x as i64).collect::<Vec<_>>()
    };
    Some(match spec {
        SubgroupSpec::Principal(n) => signed_min(g, *n),
        SubgroupSpec::GammaZero(n) => {
            let r = g.residues(*n);
            units(*n)
                .into_iter()
                .map(|u| [(u * r[2] % n) as i64, (u * r[3] % n) as i64])
                .min()
                .unwrap()
                .to_vec()
        }
        SubgroupSpec::Join { n, word } => join_powers(&word.eval_matrix(), *n)
            .iter()
            .map(|p| signed_min(&(p * g), *n))
            .min()
            .unwrap(),
        SubgroupSpec::Kernel(h) => {
            let (tag, h_part) = if g.in_gamma2() {
                (0, g.clone())
            } else {
                gamma2_transversal()
                    .iter()
                    .enumerate()
                    .map(|(k, t)| (k, g * &t.inverse()))
                    .find(|(_, m)| m.in_gamma2())
                    .expect("transversal covers SL2(Z/2)")
            };
            let img = h.image(&PSL2Elem::new(h_part)).expect("element of Γ(2)");
            std::iter::once(tag as i64)
                .chain(img.images().iter().map(|&i| i as i64))
                .collect()
        }
    })
}

/// Enumerate the right cosets of `spec` in `ambient` by breadth-first
/// search; representative words are shortlex minimal.
pub fn coset_table(spec: &SubgroupSpec, ambient: Ambient) -> Result<CosetTable> {
    if ambient == Ambient::Gamma2 && !spec.in_gamma2() {
        return Err(Error::domain(format!("{spec} is not contained in Γ(2)")));
    }
    let gens = ambient.generators();
    let gen_mats = gens.map(Gen::matrix);
    let mut lookup = HashMap::new();
    let mut reps: Vec<Vec<Gen>> = vec![Vec::new()];
    let mut rep_mats = vec![MatSL2::identity()];
    lookup.insert(coset_key(spec, ambient, &rep_mats[0]).unwrap(), 0usize);
    let mut images: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (k, gm) in gen_mats.iter().enumerate() {
            let m = &rep_mats[i] * gm;
            let key = coset_key(spec, ambient, &m).expect("product stays in ambient");
            let j = match lookup.get(&key) {
                Some(&j) => j,
                None => {
                    let j = reps.len();
                    if j >= MAX_INDEX {
                        return Err(Error::Resource(format!(
                            "index of {spec} exceeds {MAX_INDEX}"
                        )));
                    }
                    let mut w = reps[i].clone();
                    w.push(gens[k]);
                    reps.push(w);
                    rep_mats.push(m);
                    lookup.insert(key, j);
                    queue.push_back(j);
                    j
                }
            };
            if images[k].len() <= i {
                images[k].resize(i + 1, usize::MAX);
            }
            images[k][i] = j;
        }
    }
    let gens = images.map(|img| Perm::from_images(img).expect("generator acts bijectively"));
    Ok(CosetTable {
        ambient,
        spec: spec.clone(),
        gens,
        reps,
        rep_mats,
        lookup,
    })
}

impl CosetTable {
    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn spec(&self) -> &SubgroupSpec {
        &self.spec
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// Action of the first generator (`S` or `A`).
    pub fn sigma_first(&self) -> &Perm {
        &self.gens[0]
    }

    /// Action of the second generator (`T` or `B`).
    pub fn sigma_second(&self) -> &Perm {
        &self.gens[1]
    }

    fn expect(&self, ambient: Ambient) {
        assert_eq!(self.ambient, ambient, "generator not in the ambient group");
    }

    pub fn sigma_s(&self) -> &Perm {
        self.expect(Ambient::Gamma1);
        &self.gens[0]
    }

    pub fn sigma_t(&self) -> &Perm {
        self.expect(Ambient::Gamma1);
        &self.gens[1]
    }

    /// Right action of `ST`: `S` first, then `T`.
    pub fn sigma_st(&self) -> Perm {
        self.sigma_s().then(self.sigma_t())
    }

    pub fn sigma_a(&self) -> &Perm {
        self.expect(Ambient::Gamma2);
        &self.gens[0]
    }

    pub fn sigma_b(&self) -> &Perm {
        self.expect(Ambient::Gamma2);
        &self.gens[1]
    }

    /// Representative word of coset `i`.
    pub fn rep_word(&self, i: usize) -> Word {
        let mut letters = Vec::new();
        for &g in &self.reps[i] {
            push_reduced(&mut letters, (g, 1));
        }
        Word::from_letters(&letters)
    }

    pub fn rep_matrix(&self, i: usize) -> &MatSL2 {
        &self.rep_mats[i]
    }

    /// Coset containing `g`, `None` when `g` is outside the ambient group.
    pub fn locate(&self, g: &MatSL2) -> Option<usize> {
        let key = coset_key(&self.spec, self.ambient, g)?;
        self.lookup.get(&key).copied()
    }
}

/// Closed-form index families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexFamily {
    /// `[Γ̄(1) : Γ̄(N)]`.
    Principal,
    /// `[Γ̄(1) : Γ̄₀(N)]`.
    GammaZero,
    /// `[Γ̄(2) : Γ̄(2N)]`.
    Gamma2N,
}

impl IndexFamily {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(IndexFamily::Principal),
            "gamma0" => Ok(IndexFamily::GammaZero),
            "gamma2n" => Ok(IndexFamily::Gamma2N),
            _ => Err(Error::domain(format!("unsupported index family '{s}'"))),
        }
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `μ_N = [Γ̄(1) : Γ̄(N)]`: 1, 6, then `N³/2 · ∏(1 − 1/p²)`.
fn mu(n: u64) -> u64 {
    match n {
        1 => 1,
        2 => 6,
        _ => {
            let (num, den) = prime_divisors(n)
                .iter()
                .fold((n * n * n, 2u64), |(a, b), &p| (a * (p * p - 1), b * p * p));
            num / den
        }
    }
}

/// Index predicted by the closed forms.
pub fn index_formula(family: IndexFamily, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("level must be at least 1"));
    }
    Ok(match family {
        IndexFamily::Principal => mu(n),
        IndexFamily::GammaZero => {
            let (num, den) = prime_divisors(n)
                .iter()
                .fold((n, 1u64), |(a, b), &p| (a * (p + 1), b * p));
            num / den
        }
        IndexFamily::Gamma2N => match n {
            1 => 1,
            2 => 4,
            _ if n % 2 == 1 => mu(n),
            _ => 4 * mu(n) / 3,
        },
    })
}
