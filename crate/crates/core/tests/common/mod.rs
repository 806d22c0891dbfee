#![allow(dead_code)]

use num_complex::Complex64;

/// `1/z² + Σ' (1/(z−w)² − 1/w²)` over lattice points `w = m + nτ` with
/// `|w| ≤ radius`; the disk is symmetric under `w ↦ −w`, which cancels the
/// conditionally convergent part.
pub fn direct_wp(tau: Complex64, z: Complex64, radius: f64) -> Complex64 {
    let mut sum = 1.0 / (z * z);
    let n_max = (radius / tau.im).ceil() as i64 + 1;
    for n in -n_max..=n_max {
        let base = tau * n as f64;
        let m_lo = (-radius - base.re).floor() as i64 - 1;
        let m_hi = (radius - base.re).ceil() as i64 + 1;
        for m in m_lo..=m_hi {
            if m == 0 && n == 0 {
                continue;
            }
            let w = base + m as f64;
            if w.norm() > radius {
                continue;
            }
            let d = z - w;
            sum += 1.0 / (d * d) - 1.0 / (w * w);
        }
    }
    sum
}

fn symmetric_terms(half: &[(u32, u32, &str)]) -> dessins_core::arith::BivarPoly {
    let mut terms = Vec::new();
    for &(i, j, c) in half {
        let c: num_bigint::BigInt = c.parse().unwrap();
        terms.push(((i, j), c.clone()));
        if i != j {
            terms.push(((j, i), c));
        }
    }
    dessins_core::arith::BivarPoly::from_terms(terms)
}

/// The level-2 modular polynomial as printed, one entry per symmetric pair
/// of monomials `X^i Y^j`.
pub fn printed_phi2() -> dessins_core::arith::BivarPoly {
    symmetric_terms(&[
        (3, 0, "1"),
        (2, 2, "-1"),
        (2, 1, "1488"),
        (2, 0, "-162000"),
        (1, 1, "40773375"),
        (1, 0, "8748000000"),
        (0, 0, "-157464000000000"),
    ])
}

/// The level-3 modular polynomial as printed.
pub fn printed_phi3() -> dessins_core::arith::BivarPoly {
    symmetric_terms(&[
        (4, 0, "1"),
        (3, 3, "-1"),
        (3, 2, "2232"),
        (3, 1, "-1069956"),
        (3, 0, "36864000"),
        (2, 2, "2587918086"),
        (2, 1, "8900222976000"),
        (2, 0, "452984832000000"),
        (1, 1, "-770845966336000000"),
        (1, 0, "1855425871872000000000"),
    ])
}

/// Integer polynomial from ascending coefficients.
pub fn int_poly(c: &[i64]) -> dessins_core::arith::Poly<num_rational::BigRational> {
    dessins_core::arith::Poly::new(c.iter().map(|&a| dessins_core::arith::rat(a, 1)).collect())
}
