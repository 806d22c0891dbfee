//! Resultants by the subresultant polynomial remainder sequence.

use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Resultant of `p` and `q` with respect to their variable.
///
/// The sign follows the Sylvester-matrix convention, so that
/// `Res(z − X, z − Y) = X − Y`. A nonzero constant argument `c` gives
/// `c^deg(other)`.
pub fn resultant<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<R> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::domain("resultant of a zero polynomial"));
    };
    if dp == 0 && dq == 0 {
        return Err(Error::domain("resultant of two constants"));
    }
    if dq == 0 {
        return Ok(q.lc().unwrap().pow_u(dp as u32));
    }
    if dp == 0 {
        return Ok(p.lc().unwrap().pow_u(dq as u32));
    }

    let (mut a, mut b) = (p.clone(), q.clone());
    let mut negate = false;
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        negate = dp % 2 == 1 && dq % 2 == 1;
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (da, db) = (a.deg0(), b.deg0());
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(R::zero());
        }
        a = b;
        let divisor = g.clone() * h.pow_u(delta);
        b = Poly::new(
            r.coeffs()
                .iter()
                .map(|c| {
                    c.div_exact(&divisor)
                        .expect("subresultant division is exact")
                })
                .collect(),
        );
        g = a.lc().unwrap().clone();
        if delta > 0 {
            h = g
                .pow_u(delta)
                .div_exact(&h.pow_u(delta - 1))
                .expect("subresultant division is exact");
        }
        if b.deg0() == 0 {
            break;
        }
    }
    let da = a.deg0() as u32;
    let res = b
        .lc()
        .unwrap()
        .pow_u(da)
        .div_exact(&h.pow_u(da - 1))
        .expect("subresultant division is exact");
    Ok(if negate { -res } else { res })
}
