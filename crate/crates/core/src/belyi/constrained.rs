//! The level-three identity in `t` that holds whenever `α² + 4αβ + β² = 0`:
//!
//! ```text
//! k·t(t+σ³)³ − (t − σ³/8)³ = k·(t−α³)²(t−β³)²,   σ = α+β,  k = 1/(8σ³)
//! ```

use crate::arith::{rat, Poly, QuadExt, Ring};

/// `512·t(t+σ³)³ − c·σ³(8t−σ³)³ − 512·(t−α³)²(t−β³)²`, which is the
/// identity with `k = 1/(cσ³)` multiplied through by `512·cσ³`.
fn residual<R: Ring>(alpha: &R, beta: &R, c: i64) -> Poly<R> {
    let sigma = alpha.clone() + beta.clone();
    let s3 = sigma.pow_u(3);
    let t = Poly::<R>::var();
    let k = |n: i64| Poly::constant(R::from_i64(n));
    let lin = |a: R, b: R| Poly::new(vec![b, a]);
    let lhs = k(512) * t.clone() * lin(R::one(), s3.clone()).pow(3);
    let middle = Poly::constant(R::from_i64(c) * s3.clone()) * lin(R::from_i64(8), -s3).pow(3);
    let rhs = k(512) * lin(R::one(), -alpha.pow_u(3)).pow(2) * lin(R::one(), -beta.pow_u(3)).pow(2);
    lhs - middle - rhs
}

fn sqrt3(a: i64, b: i64) -> QuadExt {
    QuadExt::new(3, rat(a, 1), rat(b, 1)).expect("3 is squarefree")
}

/// The identity at `α = 1+√3, β = 1−√3` with `k = 1/(cσ³)`.
pub fn constrained_identity_concrete(c: i64) -> bool {
    residual(&sqrt3(1, 1), &sqrt3(1, -1), c).is_zero()
}

/// The identity at `α = s, β = s(−2+√3)` as a polynomial in `s` and `t`.
pub fn constrained_identity_parametric(c: i64) -> bool {
    let s = Poly::<QuadExt>::var();
    let beta = s.scale(&sqrt3(-2, 1));
    residual(&s, &beta, c).is_zero()
}

/// Both forms with the stated constant `k = 1/(8σ³)`.
pub fn constrained_identity_check() -> bool {
    constrained_identity_concrete(8) && constrained_identity_parametric(8)
}
