//! Integer matrices of determinant one and their images in PSL₂(ℤ).

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `[[a, b], [c, d]]` with `ad − bc = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatSL2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl MatSL2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::domain(format!(
                "[[{a},{b}],[{c},{d}]] does not have determinant 1"
            )));
        }
        Ok(MatSL2 { a, b, c, d })
    }

    /// Panics unless the determinant is 1.
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into()).expect("determinant must be 1")
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    /// `z ↦ −1/z`.
    pub fn s() -> Self {
        Self::from_i64(0, -1, 1, 0)
    }

    /// `z ↦ z + 1`.
    pub fn t() -> Self {
        Self::from_i64(1, 1, 0, 1)
    }

    /// `T²`.
    pub fn gen_a() -> Self {
        Self::from_i64(1, 2, 0, 1)
    }

    /// `S T² S⁻¹`.
    pub fn gen_b() -> Self {
        Self::from_i64(1, 0, -2, 1)
    }

    pub fn inverse(&self) -> Self {
        MatSL2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        MatSL2 {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Entries reduced into `[0, n)`, row by row.
    pub fn residues(&self, n: u64) -> [u64; 4] {
        let m = BigInt::from(n);
        let r = |x: &BigInt| {
            let v = x.mod_floor(&m);
            u64::try_from(&v).expect("residue fits")
        };
        [r(&self.a), r(&self.b), r(&self.c), r(&self.d)]
    }

    /// Membership in Γ(2): diagonal odd, off-diagonal even.
    pub fn in_gamma2(&self) -> bool {
        self.b.is_even() && self.c.is_even()
    }

    /// Parse `[[a,b],[c,d]]`, whitespace allowed.
    pub fn parse(src: &str) -> Result<Self> {
        let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| Error::parse(1, "expected [[a,b],[c,d]]"))?;
        let rows: Vec<&str> = inner.split("],[").collect();
        if rows.len() != 2 {
            return Err(Error::parse(1, "expected two rows"));
        }
        let mut v = Vec::with_capacity(4);
        for row in rows {
            for x in row.split(',') {
                let n: BigInt = x
                    .parse()
                    .map_err(|_| Error::parse(1, format!("bad matrix entry '{x}'")))?;
                v.push(n);
            }
        }
        if v.len() != 4 {
            return Err(Error::parse(1, "expected four entries"));
        }
        let mut it = v.into_iter();
        let (a, b, c, d) = (
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        );
        Self::new(a, b, c, d)
    }
}

impl Mul for &MatSL2 {
    type Output = MatSL2;
    fn mul(self, r: &MatSL2) -> MatSL2 {
        MatSL2 {
            a: &self.a * &r.a + &self.b * &r.c,
            b: &self.a * &r.b + &self.b * &r.d,
            c: &self.c * &r.a + &self.d * &r.c,
            d: &self.c * &r.b + &self.d * &r.d,
        }
    }
}

impl Mul for MatSL2 {
    type Output = MatSL2;
    fn mul(self, r: MatSL2) -> MatSL2 {
        &self * &r
    }
}

impl fmt::Display for MatSL2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Element of PSL₂(ℤ), stored as the representative with `c > 0`, or
/// `c = 0` and `a > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PSL2Elem(MatSL2);

impl PSL2Elem {
    pub fn new(m: MatSL2) -> Self {
        let flip = m.c.is_negative() || (m.c.is_zero() && m.a.is_negative());
        PSL2Elem(if flip { m.neg() } else { m })
    }

    pub fn identity() -> Self {
        PSL2Elem(MatSL2::identity())
    }

    pub fn matrix(&self) -> &MatSL2 {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0 == MatSL2::identity()
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.0.inverse())
    }
}

impl Mul for &PSL2Elem {
    type Output = PSL2Elem;
    fn mul(self, r: &PSL2Elem) -> PSL2Elem {
        PSL2Elem::new(&self.0 * &r.0)
    }
}

impl From<MatSL2> for PSL2Elem {
    fn from(m: MatSL2) -> Self {
        PSL2Elem::new(m)
    }
}

impl fmt::Display for PSL2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
