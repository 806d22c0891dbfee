//! Rewriting elements of Γ̄(2) as reduced words in its free generators
//! `A = T²` and `B = ST²S⁻¹`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::{MatSL2, PSL2Elem};
use super::word::{push_reduced, Gen, Word};
use crate::error::{Error, Result};

/// Reduced word `w` in `A^±1`, `B^±1` with `word_eval(w) = g`.
///
/// Ping-pong reduction: left multiplication by `A^k` adds `2kc` to `a`,
/// by `B^k` subtracts `2ka` from `c`; alternately shrinking the larger of
/// `|a|`, `|c|` ends at `c = 0`, i.e. at `±A^n`.
pub fn gamma2_word_decompose(g: &PSL2Elem) -> Result<Word> {
    let m = g.matrix();
    if !m.in_gamma2() {
        return Err(Error::domain(format!("{m} is not in Γ(2)")));
    }
    let MatSL2 {
        mut a,
        mut b,
        mut c,
        mut d,
    } = m.clone();
    // invariant: g = prefix · [[a, b], [c, d]]
    let mut prefix: Vec<(Gen, i64)> = Vec::new();
    while !c.is_zero() {
        if a.abs() > c.abs() {
            let k = nearest_quotient(&a, &(&c * 2));
            a -= &k * &c * 2;
            b -= &k * &d * 2;
            push_reduced(&mut prefix, (Gen::A, exp(&k)));
        } else {
            let k = nearest_quotient(&c, &(&a * 2));
            c -= &k * &a * 2;
            d -= &k * &b * 2;
            push_reduced(&mut prefix, (Gen::B, -exp(&k)));
        }
    }
    // remaining matrix is ±[[1, 2n], [0, 1]]
    let n = (&b * &a).div_floor(&BigInt::from(2));
    push_reduced(&mut prefix, (Gen::A, exp(&n)));
    Ok(Word::from_letters(&prefix))
}

/// `k` minimizing `|x − k·m|` (ties towards the floor).
fn nearest_quotient(x: &BigInt, m: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = x.div_mod_floor(m);
    // r lies between 0 and m, so the other candidate is always q + 1
    if (&r * &two).abs() > m.abs() {
        q + 1
    } else {
        q
    }
}

fn exp(k: &BigInt) -> i64 {
    k.to_i64().expect("exponent fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psl2::word::word_eval;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dec(a: i64, b: i64, c: i64, d: i64) -> String {
        gamma2_word_decompose(&PSL2Elem::new(MatSL2::from_i64(a, b, c, d)))
            .unwrap()
            .to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(dec(1, 2, 0, 1), "A");
        assert_eq!(dec(1, 0, -2, 1), "B");
        assert_eq!(dec(-3, 4, -4, 5), "B^-1A^-1B^-1A^-1");
        assert_eq!(dec(1, 0, 0, 1), "I");
        assert_eq!(dec(-1, 0, 0, -1), "I");
        assert!(gamma2_word_decompose(&PSL2Elem::new(MatSL2::t())).is_err());
    }

    #[test]
    fn round_trip_random_reduced_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let len = rng.gen_range(0..=12);
            let mut letters: Vec<(Gen, i64)> = Vec::new();
            while letters.len() < len {
                let g = if rng.gen_bool(0.5) { Gen::A } else { Gen::B };
                let e = *[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap();
                if letters.last().is_some_and(|l| l.0 == g) {
                    continue;
                }
                letters.push((g, e));
            }
            let w = Word::from_letters(&letters);
            let back = gamma2_word_decompose(&word_eval(&w)).unwrap();
            assert_eq!(back.letters(), letters, "{w}");
        }
    }
}
