//! Cusps, their widths and their orbits under a subgroup.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coset::{coset_table, Ambient, CosetTable};
use super::matrix::{MatSL2, PSL2Elem};
use super::subgroup::SubgroupSpec;
use crate::error::{Error, Result};

/// `p/q` in lowest terms with `q ≥ 0`; infinity is `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cusp {
    p: BigInt,
    q: BigInt,
}

impl Cusp {
    pub fn new(p: BigInt, q: BigInt) -> Result<Self> {
        if p.is_zero() && q.is_zero() {
            return Err(Error::domain("0/0 is not a cusp"));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(Cusp { p, q })
    }

    pub fn from_i64(p: i64, q: i64) -> Result<Self> {
        Self::new(p.into(), q.into())
    }

    pub fn infinity() -> Self {
        Cusp {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    /// Parse `inf`, an integer, or `p/q`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Self::infinity());
        }
        let bad = || Error::parse(1, format!("bad cusp '{s}'"));
        match s.split_once('/') {
            Some((p, q)) => Self::new(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?),
            None => Self::new(s.parse().map_err(|_| bad())?, BigInt::one()),
        }
    }

    /// A matrix `γ = [[p, r], [q, s]]` of determinant one with `γ(∞) = p/q`.
    pub fn matrix(&self) -> MatSL2 {
        // p·x + q·y = 1, so s = x and r = −y
        let e = self.p.extended_gcd(&self.q);
        let (x, y) = if e.gcd.is_negative() {
            (-e.x, -e.y)
        } else {
            (e.x, e.y)
        };
        MatSL2::new(self.p.clone(), -y, self.q.clone(), x).expect("unimodular completion")
    }

    /// The cusp `γ(∞) = a/c`.
    pub fn of_matrix(g: &MatSL2) -> Self {
        Self::new(g.a.clone(), g.c.clone()).expect("columns of SL2 are primitive")
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            f.write_str("inf")
        } else if self.q.is_one() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// Least `k ≥ 1` with `γ T^k γ⁻¹` in the subgroup, `γ(∞) = c`.
pub fn cusp_width(spec: &SubgroupSpec, c: &Cusp) -> u64 {
    let g = c.matrix();
    let gi = g.inverse();
    let conj = |k: i64| PSL2Elem::new(&(&g * &MatSL2::t().pow(k)) * &gi);
    let bound = match spec {
        SubgroupSpec::Principal(n) | SubgroupSpec::GammaZero(n) => *n,
        SubgroupSpec::Join { n, .. } => *n,
        SubgroupSpec::Kernel(h) => {
            2 * h
                .image(&conj(2))
                .expect("conjugate of T^2 lies in Γ(2)")
                .order()
        }
    };
    (1..=bound)
        .find(|&k| spec.is_member(&conj(k as i64)))
        .expect("some power of T is conjugated into the subgroup")
}

/// Class of a cusp under Γ(2): 0 for `[∞]` (odd/even), 1 for `[0]`
/// (even/odd), 2 for `[1]` (odd/odd).
pub fn gamma2_cusp_class(c: &Cusp) -> usize {
    match (c.p.is_odd(), c.q.is_odd()) {
        (true, false) => 0,
        (false, true) => 1,
        _ => 2,
    }
}

/// Index of the σ_T-cycle containing each coset of an ambient-Γ(1) table.
fn t_cycle_ids(table: &CosetTable) -> Vec<usize> {
    let mut ids = vec![0; table.index()];
    for (k, cyc) in table.sigma_t().cycles().iter().enumerate() {
        for &i in cyc {
            ids[i] = k;
        }
    }
    ids
}

/// Cusp classes of a subgroup read off an ambient-Γ(1) table: one entry per
/// σ_T-cycle, represented by the cusp of the cycle's first coset, with its
/// width (the cycle length).
pub fn cusp_classes(table: &CosetTable) -> Result<Vec<(Cusp, usize)>> {
    if table.ambient() != Ambient::Gamma1 {
        return Err(Error::domain("cusp classes need a table over Γ(1)"));
    }
    Ok(table
        .sigma_t()
        .cycles()
        .iter()
        .map(|cyc| (Cusp::of_matrix(table.rep_matrix(cyc[0])), cyc.len()))
        .collect())
}

/// Partition `cusps` into orbits of the subgroup, in order of first
/// appearance, using an ambient-Γ(1) coset table.
pub fn cusp_orbits_with_table(table: &CosetTable, cusps: &[Cusp]) -> Result<Vec<Vec<Cusp>>> {
    if table.ambient() != Ambient::Gamma1 {
        return Err(Error::domain("cusp classification needs a table over Γ(1)"));
    }
    let ids = t_cycle_ids(table);
    let mut classes: Vec<(usize, Vec<Cusp>)> = Vec::new();
    for c in cusps {
        let i = table
            .locate(&c.matrix())
            .expect("Γ(1) contains every matrix");
        let id = ids[i];
        match classes.iter_mut().find(|(k, _)| *k == id) {
            Some((_, v)) => v.push(c.clone()),
            None => classes.push((id, vec![c.clone()])),
        }
    }
    Ok(classes.into_iter().map(|(_, v)| v).collect())
}

/// `cusp_orbit_classify`.
pub fn cusp_orbit_classify(spec: &SubgroupSpec, cusps: &[Cusp]) -> Result<Vec<Vec<Cusp>>> {
    let table = coset_table(spec, Ambient::Gamma1)?;
    cusp_orbits_with_table(&table, cusps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Cusp {
        Cusp::parse(s).unwrap()
    }

    #[test]
    fn normalization_and_matrix() {
        assert_eq!(Cusp::from_i64(2, -4).unwrap().to_string(), "-1/2");
        assert_eq!(Cusp::from_i64(-3, 0).unwrap(), Cusp::infinity());
        assert!(Cusp::from_i64(0, 0).is_err());
        for s in ["inf", "0", "-1/2", "5/7", "3"] {
            let cu = c(s);
            assert_eq!(Cusp::of_matrix(&cu.matrix()), cu);
            assert_eq!(cu.to_string(), s);
        }
    }

    #[test]
    fn widths() {
        assert_eq!(cusp_width(&SubgroupSpec::GammaZero(2), &c("0")), 2);
        assert_eq!(cusp_width(&SubgroupSpec::GammaZero(11), &c("0")), 11);
        assert_eq!(cusp_width(&SubgroupSpec::GammaZero(11), &c("inf")), 1);
        assert_eq!(cusp_width(&SubgroupSpec::Principal(5), &c("inf")), 5);
        assert_eq!(cusp_width(&SubgroupSpec::Principal(1), &c("1/3")), 1);
        let a6 = SubgroupSpec::parse("kernel:sigmaA=(1 2 3);sigmaB=(2 3 4 5 6)").unwrap();
        assert_eq!(cusp_width(&a6, &c("inf")), 6);
    }

    #[test]
    fn orbit_examples() {
        let g2 = SubgroupSpec::Principal(2);
        let cusps: Vec<Cusp> = ["0", "2/3", "1/3", "1", "1/2", "inf"]
            .iter()
            .map(|s| c(s))
            .collect();
        let orbits = cusp_orbit_classify(&g2, &cusps).unwrap();
        assert_eq!(orbits.len(), 3);
        assert_eq!(orbits[0], vec![c("0"), c("2/3")]);
        assert_eq!(orbits[1], vec![c("1/3"), c("1")]);
        assert_eq!(orbits[2], vec![c("1/2"), c("inf")]);
        for o in &orbits {
            assert!(o
                .iter()
                .all(|x| gamma2_cusp_class(x) == gamma2_cusp_class(&o[0])));
        }

        let g03 = cusp_orbit_classify(&SubgroupSpec::GammaZero(3), &[c("0"), c("inf")]).unwrap();
        assert_eq!(g03.len(), 2);
        let g1 =
            cusp_orbit_classify(&SubgroupSpec::Principal(1), &[c("0"), c("1"), c("inf")]).unwrap();
        assert_eq!(g1.len(), 1);
    }

    #[test]
    fn classes_of_gamma0_2() {
        let t = coset_table(&SubgroupSpec::GammaZero(2), Ambient::Gamma1).unwrap();
        let cl = cusp_classes(&t).unwrap();
        assert_eq!(cl, vec![(c("inf"), 1), (c("0"), 2)]);
    }
}
