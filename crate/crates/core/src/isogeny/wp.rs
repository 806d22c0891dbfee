//! Weierstrass ℘ by exponential q-series, and the identities that the
//! hexagonal and square self-isogenies induce.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Closest a point may come to the lattice before it counts as a pole.
pub const POLE_RADIUS: f64 = 1e-6;
/// Sample points closer than this to a pole of either side are skipped.
pub const SAMPLE_MARGIN: f64 = 1e-2;
pub const DEFAULT_EPS: f64 = 1e-12;
pub const DEFAULT_TOL: f64 = 1e-6;
const MAX_TERMS: usize = 100_000;

/// The lattice `ℤω₁ + ℤω₂` with a series truncation threshold.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WpLattice {
    w1: Complex64,
    w2: Complex64,
    eps: f64,
}

impl WpLattice {
    pub fn new(w1: Complex64, w2: Complex64, eps: f64) -> Result<Self> {
        if w1 == Complex64::new(0.0, 0.0) || (w2 / w1).im <= 0.0 {
            return Err(Error::domain("periods must satisfy Im(w2/w1) > 0"));
        }
        if !(eps > 0.0 && eps <= 1e-8) {
            return Err(Error::domain("truncation threshold must lie in (0, 1e-8]"));
        }
        Ok(WpLattice { w1, w2, eps })
    }

    /// `ℤ + ℤi`.
    pub fn square() -> Self {
        Self::new(Complex64::new(1.0, 0.0), Complex64::i(), DEFAULT_EPS).unwrap()
    }

    /// `ℤ + ℤω` with `ω = e^{2πi/3}`.
    pub fn hexagonal() -> Self {
        Self::new(Complex64::new(1.0, 0.0), omega(), DEFAULT_EPS).unwrap()
    }

    pub fn periods(&self) -> (Complex64, Complex64) {
        (self.w1, self.w2)
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    fn tau(&self) -> Complex64 {
        self.w2 / self.w1
    }

    /// `z/ω₁` moved by lattice vectors into `|Re| ≤ 1/2`, `|Im| ≤ Im(τ)/2`
    /// (up to the shear of the cell).
    fn reduce(&self, z: Complex64) -> Complex64 {
        let tau = self.tau();
        let mut x = z / self.w1;
        x -= tau * (x.im / tau.im).round();
        x -= Complex64::new(x.re.round(), 0.0);
        x
    }

    /// Distance from `z` to the nearest lattice point.
    pub fn lattice_distance(&self, z: Complex64) -> f64 {
        let x = self.reduce(z);
        let tau = self.tau();
        let mut best = f64::INFINITY;
        for m in -1..=1 {
            for n in -1..=1 {
                let p = Complex64::new(m as f64, 0.0) + tau * n as f64;
                best = best.min((x - p).norm());
            }
        }
        best * self.w1.norm()
    }
}

pub fn omega() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI / 3.0)
}

/// `℘(z)` for the lattice; a pole error within [`POLE_RADIUS`] of the lattice.
pub fn wp_eval(lat: &WpLattice, z: Complex64) -> Result<Complex64> {
    if lat.lattice_distance(z) <= POLE_RADIUS {
        return Err(Error::Pole(format!("{z} lies on the lattice")));
    }
    let x = lat.reduce(z);
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    let u = (two_pi_i * x).exp();
    let q = (two_pi_i * lat.tau()).exp();
    let one = Complex64::new(1.0, 0.0);
    let term = |w: Complex64| w / ((one - w) * (one - w));
    let mut sum = Complex64::new(1.0 / 12.0, 0.0) + term(u);
    let mut qn = one;
    for _ in 0..MAX_TERMS {
        qn *= q;
        let t = term(qn * u) + term(qn / u) - term(qn) * 2.0;
        sum += t;
        if t.norm() < lat.eps && qn.norm() < lat.eps {
            break;
        }
    }
    Ok((two_pi_i / lat.w1).powi(2) * sum)
}

/// Which half-periods play the roles of `1/2` and `ω/2` in the hexagonal
/// identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfPeriods {
    /// `(1/2, ω/2)` as displayed.
    Standard,
    /// `(ω/2, 1/2)`.
    Swapped,
}

impl fmt::Display for HalfPeriods {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HalfPeriods::Standard => "(1/2,w/2)",
            HalfPeriods::Swapped => "(w/2,1/2)",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WpIdentity {
    Hexagonal,
    Square,
}

impl WpIdentity {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "hexagonal" => Ok(WpIdentity::Hexagonal),
            "square" => Ok(WpIdentity::Square),
            _ => Err(Error::domain(format!(
                "unknown identity '{s}', expected hexagonal or square"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WpReport {
    pub max_error: f64,
    pub checked: usize,
    pub skipped: usize,
    pub passed: bool,
    /// For the hexagonal identity, the half-period assignment that passed
    /// (or the better one when neither did).
    pub assignment: Option<HalfPeriods>,
}

/// Generic sample points used when the caller supplies none.
pub fn default_samples() -> Vec<Complex64> {
    vec![
        Complex64::new(0.23, 0.11),
        Complex64::new(0.31, 0.27),
        Complex64::new(0.41, 0.13),
    ]
}

/// `(lhs − rhs, denominator)` at one sample, or `None` near a pole.
type Residual = Option<(Complex64, Complex64)>;

fn square_residual(
    lat: &WpLattice,
    z: Complex64,
    coeff: Complex64,
    e: Complex64,
) -> Result<Residual> {
    let mult = Complex64::new(1.0, 2.0);
    if lat.lattice_distance(z) < SAMPLE_MARGIN || lat.lattice_distance(mult * z) < SAMPLE_MARGIN {
        return Ok(None);
    }
    let p = wp_eval(lat, z)?;
    let e2 = e * e;
    let num = p * (p * p - mult * e2).powi(2);
    let den = (p * p * 5.0 - Complex64::new(1.0, -2.0) * e2).powi(2);
    let lhs = wp_eval(lat, mult * z)?;
    Ok(Some((lhs - coeff * num / den, den)))
}

fn hexagonal_residual(lat: &WpLattice, z: Complex64, halves: HalfPeriods) -> Result<Residual> {
    let w = omega();
    let mult = Complex64::new(1.0, 0.0) + w * 2.0;
    if lat.lattice_distance(z) < SAMPLE_MARGIN || lat.lattice_distance(mult * z) < SAMPLE_MARGIN {
        return Ok(None);
    }
    let (h1, h2) = match halves {
        HalfPeriods::Standard => (Complex64::new(0.5, 0.0), w / 2.0),
        HalfPeriods::Swapped => (w / 2.0, Complex64::new(0.5, 0.0)),
    };
    let (p1, p2) = (wp_eval(lat, h1)?, wp_eval(lat, h2)?);
    let c = (p2 - p1) / (w - 1.0);
    let shifted = |v: Complex64| v - p1 + c;
    let pz = shifted(wp_eval(lat, z)?);
    let lhs = shifted(wp_eval(lat, mult * z)?);
    let den = pz * pz * 3.0;
    let rhs = (c.powi(3) * 4.0 - pz.powi(3)) / den;
    Ok(Some((lhs - rhs, den)))
}

fn collect(
    samples: &[Complex64],
    mut residual: impl FnMut(Complex64) -> Result<Residual>,
) -> Result<(f64, usize, usize)> {
    let (mut max_error, mut checked, mut skipped) = (0.0f64, 0, 0);
    for &z in samples {
        match residual(z)? {
            Some((r, den)) if den.norm() >= SAMPLE_MARGIN => {
                max_error = max_error.max(r.norm());
                checked += 1;
            }
            _ => skipped += 1,
        }
    }
    Ok((max_error, checked, skipped))
}

/// Square identity with an arbitrary leading coefficient in place of
/// `(−1+2i)²`.
pub fn verify_square_identity_with(
    coeff: Complex64,
    samples: &[Complex64],
    tol: f64,
) -> Result<WpReport> {
    let lat = WpLattice::square();
    let e = wp_eval(&lat, Complex64::new(0.0, 0.5))?;
    let (max_error, checked, skipped) = collect(samples, |z| square_residual(&lat, z, coeff, e))?;
    Ok(WpReport {
        max_error,
        checked,
        skipped,
        passed: checked > 0 && max_error <= tol,
        assignment: None,
    })
}

/// Evaluate both sides at every usable sample and compare with `tol`.
pub fn verify_wp_identity(which: WpIdentity, samples: &[Complex64], tol: f64) -> Result<WpReport> {
    match which {
        WpIdentity::Square => {
            verify_square_identity_with(Complex64::new(-1.0, 2.0).powi(2), samples, tol)
        }
        WpIdentity::Hexagonal => {
            let lat = WpLattice::hexagonal();
            let mut best: Option<WpReport> = None;
            for halves in [HalfPeriods::Standard, HalfPeriods::Swapped] {
                let (max_error, checked, skipped) =
                    collect(samples, |z| hexagonal_residual(&lat, z, halves))?;
                let report = WpReport {
                    max_error,
                    checked,
                    skipped,
                    passed: checked > 0 && max_error <= tol,
                    assignment: Some(halves),
                };
                if report.passed {
                    return Ok(report);
                }
                if best.as_ref().is_none_or(|b| report.max_error < b.max_error) {
                    best = Some(report);
                }
            }
            Ok(best.expect("two assignments tried"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn even_and_periodic() {
        for lat in [WpLattice::square(), WpLattice::hexagonal()] {
            let tol = 10.0 * lat.eps();
            for z in [c(0.23, 0.11), c(-0.4, 0.3), c(0.1, -0.45)] {
                let p = wp_eval(&lat, z).unwrap();
                let (w1, w2) = lat.periods();
                for other in [-z, z + w1, z + w2, z - w1 - w2] {
                    let d = (p - wp_eval(&lat, other).unwrap()).norm();
                    assert!(d <= tol, "{z} vs {other}: {d:e}");
                }
            }
        }
    }

    #[test]
    fn pole_at_lattice_points() {
        let lat = WpLattice::square();
        assert!(matches!(wp_eval(&lat, c(1.0, 1.0)), Err(Error::Pole(_))));
        assert!(WpLattice::new(c(1.0, 0.0), c(0.0, -1.0), 1e-12).is_err());
        assert!(WpLattice::new(c(1.0, 0.0), c(0.0, 1.0), 1e-3).is_err());
    }

    #[test]
    fn half_period_values_of_square_lattice() {
        let lat = WpLattice::square();
        let e1 = wp_eval(&lat, c(0.5, 0.0)).unwrap();
        let e2 = wp_eval(&lat, c(0.0, 0.5)).unwrap();
        let e3 = wp_eval(&lat, c(0.5, 0.5)).unwrap();
        assert!((e1 + e2).norm() < 1e-9);
        assert!(e3.norm() < 1e-9);
        assert!(e1.im.abs() < 1e-9 && e1.re > 0.0);
    }

    #[test]
    fn identities() {
        let s = verify_wp_identity(WpIdentity::Square, &default_samples(), DEFAULT_TOL).unwrap();
        assert!(s.passed, "{s:?}");
        assert_eq!(s.checked, 3);
        let h = verify_wp_identity(WpIdentity::Hexagonal, &default_samples(), DEFAULT_TOL).unwrap();
        assert!(h.passed, "{h:?}");
        assert_eq!(h.assignment, Some(HalfPeriods::Standard));
        let bad =
            verify_square_identity_with(c(-1.0, 2.0), &default_samples(), DEFAULT_TOL).unwrap();
        assert!(!bad.passed && bad.max_error > 1e3 * DEFAULT_TOL);
    }

    #[test]
    fn samples_near_poles_are_skipped() {
        let r = verify_wp_identity(
            WpIdentity::Square,
            &[c(0.0, 0.0), c(0.23, 0.11)],
            DEFAULT_TOL,
        )
        .unwrap();
        assert_eq!((r.checked, r.skipped), (1, 1));
    }
}
