//! Γ₀(N)-orbits of the points `γⱼᵗ·τ/N` for `τ ∈ {i, ρ}`.
//!
//! Points are exact elements of ℚ(i) or ℚ(√−3). Two points are compared by
//! reducing both into the standard fundamental domain of Γ̄(1); equal
//! reductions `z` give the full set of Γ̄(1)-elements carrying one point to
//! the other through the finite stabilizer of `z`, and each is tested for
//! membership in Γ₀(N).

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::coset::{index_formula, IndexFamily};
use super::matrix::MatSL2;
use crate::arith::{rat, QuadExt};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// `i`, fixed by `S`.
    I,
    /// `ρ = e^{πi/3} = (1 + √−3)/2`, fixed by `TS`.
    Rho,
}

impl Base {
    pub fn value(self) -> QuadExt {
        match self {
            Base::I => QuadExt::sqrt(-1).unwrap(),
            Base::Rho => QuadExt::new(-3, rat(1, 2), rat(1, 2)).unwrap(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "i" => Ok(Base::I),
            "rho" | "ρ" => Ok(Base::Rho),
            _ => Err(Error::domain(format!("unknown base point '{s}'"))),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::I => "i",
            Base::Rho => "rho",
        })
    }
}

/// The point `M·base` for a rational matrix `M = [[a, b], [c, d]]` with
/// positive determinant.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitPoint {
    pub base: Base,
    pub m: [BigRational; 4],
}

impl OrbitPoint {
    pub fn new(base: Base, m: [BigRational; 4]) -> Result<Self> {
        let det = &m[0] * &m[3] - &m[1] * &m[2];
        if !det.is_positive() {
            return Err(Error::domain("matrix must have positive determinant"));
        }
        Ok(OrbitPoint { base, m })
    }

    /// `γᵗ·τ/N`.
    pub fn scaled(base: Base, gamma: &MatSL2, n: u64) -> Self {
        let q = |x: &BigInt| BigRational::from_integer(x.clone());
        let nn = BigRational::from_integer(n.into());
        // diag(1, N)·γᵗ
        let m = [
            q(&gamma.a),
            q(&gamma.c),
            q(&gamma.b) * &nn,
            q(&gamma.d) * &nn,
        ];
        OrbitPoint { base, m }
    }

    /// Exact coordinate in the upper half-plane.
    pub fn value(&self) -> QuadExt {
        let t = self.base.value();
        let c = |x: &BigRational| QuadExt::rational(x.clone());
        let num = t.clone() * c(&self.m[0]) + c(&self.m[1]);
        let den = t * c(&self.m[2]) + c(&self.m[3]);
        num * den.inverse().expect("point lies in the upper half-plane")
    }
}

impl fmt::Display for OrbitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn tag_of(base: Base) -> BigRational {
    match base {
        Base::I => rat(1, 1),
        Base::Rho => rat(3, 1),
    }
}

/// Reduce `z` (with `Im z > 0`) into `{−1/2 ≤ Re z < 1/2, |z| > 1} ∪
/// {|z| = 1, Re z ≤ 0}`; returns `(g, g·z)`.
fn reduce(z: &QuadExt, base: Base) -> (MatSL2, QuadExt) {
    let scale = tag_of(base);
    let norm2 = |w: &QuadExt| w.re() * w.re() + &scale * w.im() * w.im();
    let half = rat(1, 2);
    let mut g = MatSL2::identity();
    let mut w = z.clone();
    loop {
        // translate Re into [−1/2, 1/2)
        let k = (w.re() + &half).floor().to_integer();
        if !k.is_zero() {
            let kk = QuadExt::rational(BigRational::from_integer(k.clone()));
            w = w - kk;
            let kk = k.to_i64().expect("shift fits");
            g = &MatSL2::t().pow(-kk) * &g;
        }
        let n2 = norm2(&w);
        let one = BigRational::one();
        if n2 < one || (n2 == one && w.re().is_positive()) {
            w = -(w.inverse().expect("nonzero"));
            g = &MatSL2::s() * &g;
            continue;
        }
        return (g, w);
    }
}

/// Elements of PSL₂(ℤ) fixing a reduced point.
fn stabilizer(z: &QuadExt) -> Vec<MatSL2> {
    let i = QuadExt::sqrt(-1).unwrap();
    let omega = QuadExt::new(-3, rat(-1, 2), rat(1, 2)).unwrap();
    let mut out = vec![MatSL2::identity()];
    if *z == i {
        out.push(MatSL2::s());
    } else if *z == omega {
        let st = &MatSL2::s() * &MatSL2::t();
        out.push(st.clone());
        out.push(&st * &st);
    }
    out
}

fn in_gamma0(m: &MatSL2, n: u64) -> bool {
    m.residues(n)[2] == 0
}

/// One Γ₀(N)-orbit: indices into the point list and an elliptic flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub members: Vec<usize>,
    pub elliptic: bool,
}

#[derive(Clone, Debug)]
pub struct OrbitPartition {
    pub n: u64,
    pub base: Base,
    pub reps: Vec<MatSL2>,
    pub points: Vec<OrbitPoint>,
    pub orbits: Vec<Orbit>,
}

/// Left-coset representatives `γⱼ` of Γ₀(N) in Γ(1): breadth-first over
/// words in `S`, `T` (pruned on PSL₂(ℤ/N)), keeping a word when its
/// first column `(a : c)` in ℙ¹(ℤ/N) is new.
pub fn gamma0_left_transversal(n: u64) -> Vec<MatSL2> {
    let target = index_formula(IndexFamily::GammaZero, n).expect("level ≥ 1") as usize;
    let mut seen_elems = HashSet::new();
    let mut seen_cols = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([MatSL2::identity()]);
    let key = |m: &MatSL2| {
        let r = m.residues(n);
        r.min(m.neg().residues(n))
    };
    seen_elems.insert(key(&MatSL2::identity()));
    while let Some(m) = queue.pop_front() {
        if seen_cols.insert(column_class(&m, n)) {
            out.push(m.clone());
            if out.len() == target {
                break;
            }
        }
        for g in [MatSL2::s(), MatSL2::t()] {
            let next = &m * &g;
            if seen_elems.insert(key(&next)) {
                queue.push_back(next);
            }
        }
    }
    out
}

fn column_class(m: &MatSL2, n: u64) -> [u64; 2] {
    let r = m.residues(n);
    (1..n.max(2))
        .filter(|&u| num_integer::gcd(u, n) == 1)
        .map(|u| [u * r[0] % n, u * r[2] % n])
        .min()
        .unwrap()
}

/// `scaled_orbit_partition` with the default transversal.
pub fn scaled_orbit_partition(n: u64, base: Base) -> Result<OrbitPartition> {
    if n < 2 {
        return Err(Error::precondition("level must be at least 2"));
    }
    partition(n, base, gamma0_left_transversal(n))
}

/// Same, with caller-supplied left-coset representatives (checked).
pub fn scaled_orbit_partition_with_reps(
    n: u64,
    base: Base,
    reps: &[MatSL2],
) -> Result<OrbitPartition> {
    if n < 2 {
        return Err(Error::precondition("level must be at least 2"));
    }
    let target = index_formula(IndexFamily::GammaZero, n)? as usize;
    let classes: HashSet<_> = reps.iter().map(|m| column_class(m, n)).collect();
    if reps.len() != target || classes.len() != target {
        return Err(Error::precondition(format!(
            "representatives do not form a left transversal of Γ0({n})"
        )));
    }
    partition(n, base, reps.to_vec())
}

fn partition(n: u64, base: Base, reps: Vec<MatSL2>) -> Result<OrbitPartition> {
    let points: Vec<OrbitPoint> = reps
        .iter()
        .map(|g| OrbitPoint::scaled(base, g, n))
        .collect();
    let reduced: Vec<(MatSL2, QuadExt)> = points.iter().map(|p| reduce(&p.value(), base)).collect();
    let equivalent = |i: usize, j: usize| {
        let (gi, zi) = &reduced[i];
        let (gj, zj) = &reduced[j];
        zi == zj
            && stabilizer(zi)
                .iter()
                .any(|s| in_gamma0(&(&(&gj.inverse() * s) * gi), n))
    };
    let mut orbit_of: Vec<Option<usize>> = vec![None; points.len()];
    let mut orbits: Vec<Orbit> = Vec::new();
    for i in 0..points.len() {
        if orbit_of[i].is_some() {
            continue;
        }
        let k = orbits.len();
        let mut members = Vec::new();
        for j in i..points.len() {
            if orbit_of[j].is_none() && equivalent(i, j) {
                orbit_of[j] = Some(k);
                members.push(j);
            }
        }
        let (g, z) = &reduced[i];
        let elliptic = stabilizer(z)
            .iter()
            .skip(1)
            .any(|s| in_gamma0(&(&(&g.inverse() * s) * g), n));
        orbits.push(Orbit { members, elliptic });
    }
    Ok(OrbitPartition {
        n,
        base,
        reps,
        points,
        orbits,
    })
}
