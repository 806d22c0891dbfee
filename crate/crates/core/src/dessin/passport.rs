//! Passports and monodromy triples of dessins built from coset tables.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{is_transitive, Perm};
use crate::psl2::{Ambient, CosetTable};

/// Permutations `σ₀, σ₁, σ∞` of the edges with `σ₀ σ₁ σ∞ = 1`, products
/// read left to right (apply `σ₀` first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyTriple {
    pub sigma0: Perm,
    pub sigma1: Perm,
    pub sigma_inf: Perm,
}

impl MonodromyTriple {
    pub fn new(sigma0: Perm, sigma1: Perm, sigma_inf: Perm) -> Result<Self> {
        let m = sigma0.degree();
        if sigma1.degree() != m || sigma_inf.degree() != m {
            return Err(Error::domain("permutations of different degrees"));
        }
        if !sigma0.then(&sigma1).then(&sigma_inf).is_identity() {
            return Err(Error::domain("product of the triple is not the identity"));
        }
        if !is_transitive(&[sigma0.clone(), sigma_inf.clone()]) {
            return Err(Error::domain("triple does not act transitively"));
        }
        Ok(MonodromyTriple {
            sigma0,
            sigma1,
            sigma_inf,
        })
    }

    /// Complete a pair by `σ₁ = (σ∞ σ₀)⁻¹`.
    pub fn from_pair(sigma0: Perm, sigma_inf: Perm) -> Result<Self> {
        let sigma1 = sigma_inf.then(&sigma0).inverse();
        Self::new(sigma0, sigma1, sigma_inf)
    }

    pub fn degree(&self) -> usize {
        self.sigma0.degree()
    }

    /// The same dessin with edges renamed by `r`.
    pub fn relabel(&self, r: &Perm) -> Self {
        MonodromyTriple {
            sigma0: self.sigma0.relabel(r),
            sigma1: self.sigma1.relabel(r),
            sigma_inf: self.sigma_inf.relabel(r),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DessinPassport {
    pub degree: usize,
    pub genus: usize,
    pub black: Vec<usize>,
    pub white: Vec<usize>,
    pub faces: Vec<usize>,
    /// Elliptic counts, present for dessins of subgroups of Γ̄(1).
    pub nu2: Option<usize>,
    pub nu3: Option<usize>,
    pub nu_inf: usize,
}

/// Genus from `2 − 2g = c_b + c_w + c_f − m`.
pub fn euler_genus(m: usize, black: usize, white: usize, faces: usize) -> Result<usize> {
    let twice = 2 + m as i64 - (black + white + faces) as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::domain(
            "cycle counts do not describe a closed surface",
        ));
    }
    Ok((twice / 2) as usize)
}

impl DessinPassport {
    pub fn from_triple(t: &MonodromyTriple) -> Result<Self> {
        let black = t.sigma0.cycle_type();
        let white = t.sigma1.cycle_type();
        let faces = t.sigma_inf.cycle_type();
        let genus = euler_genus(t.degree(), black.len(), white.len(), faces.len())?;
        Ok(DessinPassport {
            degree: t.degree(),
            genus,
            nu_inf: faces.len(),
            black,
            white,
            faces,
            nu2: None,
            nu3: None,
        })
    }

    /// Whether each partition has equal parts.
    pub fn is_uniform(&self) -> bool {
        [&self.black, &self.white, &self.faces]
            .iter()
            .all(|p| p.windows(2).all(|w| w[0] == w[1]))
    }

    /// Same three partitions (degree and genus follow from them).
    pub fn same_partitions(&self, other: &DessinPassport) -> bool {
        self.black == other.black && self.white == other.white && self.faces == other.faces
    }
}

fn fmt_parts(p: &[usize]) -> String {
    let v: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("[{}]", v.join(","))
}

impl fmt::Display for DessinPassport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={}; g={}; black={}; white={}; faces={}",
            self.degree,
            self.genus,
            fmt_parts(&self.black),
            fmt_parts(&self.white),
            fmt_parts(&self.faces)
        )
    }
}

/// Triple of a subgroup of Γ̄(1): `σ₀ = σ_{ST}⁻¹`, `σ₁ = σ_S`, `σ∞ = σ_T`.
pub fn triple_from_construction1(t: &CosetTable) -> Result<MonodromyTriple> {
    if t.ambient() != Ambient::Gamma1 {
        return Err(Error::domain("construction 1 needs a table over Γ(1)"));
    }
    MonodromyTriple::new(
        t.sigma_st().inverse(),
        t.sigma_s().clone(),
        t.sigma_t().clone(),
    )
}

/// Passport of `j/1728` on the modular curve of a subgroup of Γ̄(1).
///
/// Black vertices are σ_{ST}-cycles, white vertices σ_S-cycles and faces
/// σ_T-cycles (whose lengths are the cusp widths). The Euler genus is
/// checked against `1 + m/12 − ν₂/4 − ν₃/3 − ν∞/2`.
pub fn passport_from_construction1(t: &CosetTable) -> Result<DessinPassport> {
    let triple = triple_from_construction1(t)?;
    let mut p = DessinPassport::from_triple(&triple)?;
    let nu2 = t.sigma_s().fixed_points();
    let nu3 = t.sigma_st().fixed_points();
    let m = p.degree as i64;
    let twelve_g = 12 + m - 3 * nu2 as i64 - 4 * nu3 as i64 - 6 * p.nu_inf as i64;
    if twelve_g != 12 * p.genus as i64 {
        return Err(Error::precondition(format!(
            "Euler genus {} disagrees with the elliptic-point formula ({twelve_g}/12)",
            p.genus
        )));
    }
    p.nu2 = Some(nu2);
    p.nu3 = Some(nu3);
    Ok(p)
}

/// Triple of a subgroup of Γ̄(2): `σ∞ = σ_A`, `σ₀ = σ_B` and
/// `σ₁ = (σ∞ σ₀)⁻¹`, the action of `B⁻¹A⁻¹`.
pub fn triple_from_construction2(t: &CosetTable) -> Result<MonodromyTriple> {
    if t.ambient() != Ambient::Gamma2 {
        return Err(Error::domain("construction 2 needs a table over Γ(2)"));
    }
    MonodromyTriple::from_pair(t.sigma_b().clone(), t.sigma_a().clone())
}

/// Passport and triple of the degree-`[Γ̄(2):Γ̄]` Belyi map on the modular
/// curve; for uniform dessins the genus is checked against
/// `1 + (m/2)(1 − 1/k₀ − 1/k₁ − 1/k∞)`.
pub fn passport_from_construction2(t: &CosetTable) -> Result<(DessinPassport, MonodromyTriple)> {
    let triple = triple_from_construction2(t)?;
    let p = DessinPassport::from_triple(&triple)?;
    if p.is_uniform() {
        let (k0, k1, ki) = (p.black[0] as i64, p.white[0] as i64, p.faces[0] as i64);
        let m = p.degree as i64;
        // 2·k0·k1·ki·(g − 1) = m·(k0·k1·ki − k1·ki − k0·ki − k0·k1)
        let lhs = 2 * k0 * k1 * ki * (p.genus as i64 - 1);
        let rhs = m * (k0 * k1 * ki - k1 * ki - k0 * ki - k0 * k1);
        if lhs != rhs {
            return Err(Error::precondition(
                "Euler genus disagrees with the uniform-dessin formula",
            ));
        }
    }
    Ok((p, triple))
}

/// Which vertex an edge-side touches while walking around a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Black,
    White,
}

/// Boundary walks of all faces: from edge `e`, turn at its black vertex
/// (`σ₀`), then at the white vertex (`σ₁`). One walk per σ∞-cycle, listing
/// the edge-sides met in order.
pub fn face_boundaries(t: &MonodromyTriple) -> Vec<Vec<(usize, Side)>> {
    let step = t.sigma0.then(&t.sigma1);
    let mut seen = vec![false; t.degree()];
    let mut out = Vec::new();
    for start in 0..t.degree() {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut e = start;
        loop {
            seen[e] = true;
            walk.push((e, Side::Black));
            let e1 = t.sigma0.apply(e);
            walk.push((e1, Side::White));
            e = t.sigma1.apply(e1);
            if e == start {
                break;
            }
        }
        debug_assert_eq!(step.apply(walk[walk.len() - 2].0), start);
        out.push(walk);
    }
    out
}
