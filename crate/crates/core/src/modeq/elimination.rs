//! Modular polynomials by resultant elimination, and the palindromic
//! route through `y = z + 1/z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{palindromic_reduce, resultant, to_rational, BivarPoly, Poly, RatFunc};
use crate::belyi::catalog_map;
use crate::error::{Error, Result};

type QFunc = RatFunc<BigRational>;

/// A primitive integer polynomial `Φ(X, Y)` relating `scale·f` and `scale·g`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModularPolynomial {
    pub poly: BivarPoly,
    pub level: Option<u32>,
    /// Positive integer content divided out of the raw resultant.
    pub content: BigInt,
    /// Whether the raw resultant was negated by the sign rule.
    pub sign_flipped: bool,
    pub symmetric: bool,
}

/// Divide out the content, then make the coefficient of the highest pure
/// power of `X` positive (the first graded-lex term when there is none).
/// Returns `(normalized, content, flipped)`.
pub fn normalize(p: &BivarPoly) -> (BivarPoly, BigInt, bool) {
    let content = p.content();
    if p.is_zero() {
        return (p.clone(), content, false);
    }
    let q = p.div_scalar(&content);
    let top_x = q
        .degree_x()
        .and_then(|dx| (0..=dx).rev().map(|i| q.coeff(i, 0)).find(|c| !c.is_zero()));
    let lead = top_x.unwrap_or_else(|| q.terms()[0].1.clone());
    if lead.is_negative() {
        (-q, content, true)
    } else {
        (q, content, false)
    }
}

/// Integer numerator and denominator of `f`, sharing no content.
fn integer_parts(f: &QFunc) -> (Poly<BigInt>, Poly<BigInt>) {
    let (n, d) = f.integral_parts();
    let to_int = |p: &Poly<BigRational>| p.map(|c| c.to_integer());
    (to_int(&n), to_int(&d))
}

/// `Res_z(scale·N_f − X·D_f, scale·N_g − Y·D_g)`, content- and sign-normalized.
pub fn modular_polynomial(f: &QFunc, g: &QFunc, scale: &BigInt) -> Result<ModularPolynomial> {
    if f.is_constant() || g.is_constant() {
        return Err(Error::precondition("modular polynomial of a constant map"));
    }
    if scale.is_zero() {
        return Err(Error::domain("scale must be nonzero"));
    }
    let (nf, df) = integer_parts(f);
    let (ng, dg) = integer_parts(g);
    let len = |a: &Poly<BigInt>, b: &Poly<BigInt>| a.coeffs().len().max(b.coeffs().len());
    // coefficients live in Z[X][Y]: outer variable Y, inner X
    let a: Poly<Poly<Poly<BigInt>>> = Poly::new(
        (0..len(&nf, &df))
            .map(|k| Poly::constant(Poly::new(vec![scale * nf.coeff(k), -df.coeff(k)])))
            .collect(),
    );
    let b: Poly<Poly<Poly<BigInt>>> = Poly::new(
        (0..len(&ng, &dg))
            .map(|k| {
                Poly::new(vec![
                    Poly::constant(scale * ng.coeff(k)),
                    Poly::constant(-dg.coeff(k)),
                ])
            })
            .collect(),
    );
    let raw = BivarPoly::from_nested(&resultant(&a, &b)?);
    if raw.is_zero() {
        return Err(Error::Degenerate("resultant vanishes identically".into()));
    }
    let (poly, content, sign_flipped) = normalize(&raw);
    let symmetric = poly.is_symmetric();
    Ok(ModularPolynomial {
        poly,
        level: None,
        content,
        sign_flipped,
        symmetric,
    })
}

/// The built-in pair `(j(z)/1728, j(Nz)/1728)` on `X₀(N)` for `N ∈ {2, 3}`.
pub fn level_pair(level: u32) -> Result<(QFunc, QFunc)> {
    let names = match level {
        2 => ("gamma0_2", "gamma0_2_level"),
        3 => ("gamma0_3", "gamma0_3_level"),
        _ => {
            return Err(Error::domain(format!(
                "no built-in pair for level {level}; levels 2 and 3 are available"
            )))
        }
    };
    let get = |n: &str| {
        to_rational(&catalog_map(n).expect("registered map").map()).expect("rational map")
    };
    Ok((get(names.0), get(names.1)))
}

/// Modular polynomial of the built-in pair at the given level, scale 1728.
pub fn modular_polynomial_for_level(level: u32) -> Result<ModularPolynomial> {
    let (f, g) = level_pair(level)?;
    let mut m = modular_polynomial(&f, &g, &BigInt::from(1728))?;
    m.level = Some(level);
    Ok(m)
}

/// `(az + b)/(cz + d)`.
pub fn mobius(m: [BigRational; 4]) -> Result<QFunc> {
    let [a, b, c, d] = m;
    if (&a * &d - &b * &c).is_zero() {
        return Err(Error::domain("singular Mobius matrix"));
    }
    RatFunc::new(Poly::new(vec![b, a]), Poly::new(vec![d, c]))
}

/// `g = f∘M` and `f = g∘M`.
pub fn involution_check(f: &QFunc, g: &QFunc, m: [BigRational; 4]) -> Result<bool> {
    let m = mobius(m)?;
    Ok(f.compose(&m)? == *g && g.compose(&m)? == *f)
}

/// Output of [`symmetric_route_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricRoute {
    /// `scale·(f + g)` as a polynomial in `y = z + 1/z` after the shift.
    pub p: Poly<BigRational>,
    /// `scale²·f·g` in the same way.
    pub q: Poly<BigRational>,
    /// `Res_y(p − U, q − V)` with `U = X + Y`, `V = XY`, normalized.
    pub relation: BivarPoly,
    /// Whether `relation` is a rational multiple of the direct resultant.
    pub matches: bool,
}

/// Laurent coefficients of `r` when its denominator is a monomial.
fn laurent(r: &QFunc) -> Result<(i64, Vec<BigRational>)> {
    let den = r.denom();
    let k = den.deg0();
    if den.coeffs()[..k].iter().any(|c| !c.is_zero()) {
        return Err(Error::precondition(
            "shifted pair is not a Laurent polynomial in z",
        ));
    }
    let c = den.coeff(k);
    Ok((
        -(k as i64),
        r.numer().coeffs().iter().map(|a| a / &c).collect(),
    ))
}

/// `(l, l·p)` with `l` the least common denominator of `p`.
fn integer_scaled(p: &Poly<BigRational>) -> (BigInt, Poly<BigInt>) {
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let lq = BigRational::from_integer(l.clone());
    (l, p.map(|c| (c * &lq).to_integer()))
}

/// Cross-check of the direct resultant via the involution-symmetric route.
pub fn symmetric_route_check(
    f: &QFunc,
    g: &QFunc,
    shift: &BigRational,
    scale: &BigInt,
) -> Result<SymmetricRoute> {
    let s = RatFunc::new(
        Poly::new(vec![shift.clone(), BigRational::from_integer(1.into())]),
        Poly::constant(BigRational::from_integer(1.into())),
    )?;
    let k = BigRational::from_integer(scale.clone());
    let fs = f.compose(&s)?.scale(&k);
    let gs = g.compose(&s)?.scale(&k);
    let (lo, c) = laurent(&(fs.clone() + gs.clone()))?;
    let p = palindromic_reduce(lo, &c)?;
    let (lo, c) = laurent(&(fs * gs))?;
    let q = palindromic_reduce(lo, &c)?;
    if p.is_constant() || q.is_constant() {
        return Err(Error::precondition("symmetric functions are constant in y"));
    }
    let (dp, pi) = integer_scaled(&p);
    let (dq, qi) = integer_scaled(&q);
    // l·(p − U) = pi − l·U, with coefficients in Z[U][V]
    let minus_u = |p: &Poly<BigInt>, d: &BigInt| -> Poly<Poly<Poly<BigInt>>> {
        Poly::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let lin = if i == 0 { -d } else { BigInt::zero() };
                    Poly::constant(Poly::new(vec![c.clone(), lin]))
                })
                .collect(),
        )
    };
    let minus_v = |p: &Poly<BigInt>, d: &BigInt| -> Poly<Poly<Poly<BigInt>>> {
        Poly::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let lin = if i == 0 { -d } else { BigInt::zero() };
                    Poly::new(vec![Poly::constant(c.clone()), Poly::constant(lin)])
                })
                .collect(),
        )
    };
    let uv = BivarPoly::from_nested(&resultant(&minus_u(&pi, &dp), &minus_v(&qi, &dq))?);
    let sum = BivarPoly::x() + BivarPoly::y();
    let prod = BivarPoly::x() * BivarPoly::y();
    let relation = normalize(&uv.substitute(&sum, &prod)).0;
    let direct = modular_polynomial(f, g, scale)?.poly;
    let matches = !relation.is_zero() && proportional(&relation, &direct);
    Ok(SymmetricRoute {
        p,
        q,
        relation,
        matches,
    })
}

/// Whether `a = c·b` for a nonzero rational `c`.
pub fn proportional(a: &BivarPoly, b: &BivarPoly) -> bool {
    let Some(((i, j), bc)) = b.terms().first().map(|(k, c)| (*k, (*c).clone())) else {
        return a.is_zero();
    };
    let ac = a.coeff(i, j);
    !ac.is_zero() && a.scale(&bc) == b.scale(&ac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_rational, rat};

    fn q(s: &str) -> QFunc {
        parse_rational(s, "z").unwrap()
    }

    #[test]
    fn identity_pair_gives_diagonal() {
        let m = modular_polynomial(&q("z"), &q("z"), &BigInt::from(1)).unwrap();
        assert_eq!(m.poly.to_text(), "X-Y");
        assert!(!m.symmetric);
    }

    #[test]
    fn degree_two_pair() {
        let m = modular_polynomial(&q("z^2"), &q("z+1"), &BigInt::from(1)).unwrap();
        // X = z², Y = z + 1  ⇒  X − (Y − 1)² = 0
        assert_eq!(m.poly.to_text(), "-Y^2+X+2*Y-1");
    }

    #[test]
    fn constant_and_singular_inputs() {
        let c = RatFunc::constant(rat(2, 1));
        assert!(matches!(
            modular_polynomial(&c, &q("z"), &BigInt::from(1)),
            Err(Error::Precondition(_))
        ));
        let sing = [rat(1, 1), rat(2, 1), rat(2, 1), rat(4, 1)];
        assert!(matches!(
            involution_check(&q("z"), &q("z"), sing),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn symmetric_route_rejects_non_palindromic() {
        let r = symmetric_route_check(&q("z"), &q("z"), &rat(0, 1), &BigInt::from(1728));
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
