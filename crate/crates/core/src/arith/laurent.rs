//! Reduction of palindromic Laurent polynomials to polynomials in `y = z + 1/z`.

use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Finds `q` with `q(z + 1/z) = Σ coeffs[k]·z^(low + k)`.
///
/// The input must be invariant under `z ↦ 1/z`.
pub fn palindromic_reduce<R: Ring>(low: i64, coeffs: &[R]) -> Result<Poly<R>> {
    let Some(first) = coeffs.iter().position(|c| !c.is_zero()) else {
        return Ok(Poly::zero());
    };
    let last = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
    let lo = low + first as i64;
    let hi = low + last as i64;
    let c = &coeffs[first..=last];
    if lo != -hi || (0..c.len()).any(|k| c[k] != c[c.len() - 1 - k]) {
        return Err(Error::precondition(
            "Laurent polynomial is not invariant under z -> 1/z",
        ));
    }
    let n = hi as usize;
    // work[e + n] holds the coefficient of z^e
    let mut work = c.to_vec();
    let mut q = vec![R::zero(); n + 1];
    let binom = binomial_rows::<R>(n);
    for k in (0..=n).rev() {
        let ck = work[k + n].clone();
        if ck.is_zero() {
            continue;
        }
        if k == 0 {
            q[0] = ck;
            break;
        }
        // (z + 1/z)^k = Σ_j C(k, j) z^(k - 2j)
        for (j, b) in binom[k].iter().enumerate() {
            let e = n + k - 2 * j;
            work[e] = work[e].clone() - ck.clone() * b.clone();
        }
        q[k] = ck;
    }
    Ok(Poly::new(q))
}

/// Inverse of [`palindromic_reduce`]: expands `q(z + 1/z)` as
/// `(lowest exponent, coefficients)`.
pub fn palindromic_expand<R: Ring>(q: &Poly<R>) -> (i64, Vec<R>) {
    let Some(n) = q.degree() else {
        return (0, Vec::new());
    };
    let binom = binomial_rows::<R>(n);
    let mut out = vec![R::zero(); 2 * n + 1];
    for (k, ck) in q.coeffs().iter().enumerate() {
        for (j, b) in binom[k].iter().enumerate() {
            let e = n + k - 2 * j;
            out[e] = out[e].clone() + ck.clone() * b.clone();
        }
    }
    (-(n as i64), out)
}

fn binomial_rows<R: Ring>(n: usize) -> Vec<Vec<R>> {
    let mut rows: Vec<Vec<R>> = vec![vec![R::one()]];
    for k in 1..=n {
        let prev = &rows[k - 1];
        let mut row = vec![R::one(); k + 1];
        for j in 1..k {
            row[j] = prev[j - 1].clone() + prev[j].clone();
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            palindromic_reduce(-1, &ints(&[1, 0, 1])).unwrap(),
            Poly::from_ints(&[0, 1])
        );
        assert_eq!(
            palindromic_reduce(-3, &ints(&[1, 0, 0, 0, 0, 0, 1])).unwrap(),
            Poly::from_ints(&[0, -3, 0, 1])
        );
        let p = palindromic_reduce(-2, &ints(&[4096, 3136, 1536, 3136, 4096])).unwrap();
        assert_eq!(p, Poly::from_ints(&[-6656, 3136, 4096]));
        // leading and trailing zeros are trimmed
        assert_eq!(
            palindromic_reduce(-2, &ints(&[0, 1, 0, 1, 0])).unwrap(),
            Poly::from_ints(&[0, 1])
        );
    }

    #[test]
    fn rejects_asymmetric_input() {
        assert!(matches!(
            palindromic_reduce(-1, &ints(&[1, 0, 2])),
            Err(Error::Precondition(_))
        ));
        assert!(palindromic_reduce(0, &ints(&[1, 1])).is_err());
    }

    #[test]
    fn round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(0..8);
            let q: Poly<BigInt> = Poly::new(
                (0..=n)
                    .map(|_| BigInt::from(rng.gen_range(-50..=50)))
                    .collect(),
            );
            let (low, coeffs) = palindromic_expand(&q);
            assert_eq!(palindromic_reduce(low, &coeffs).unwrap(), q);
        }
    }
}
