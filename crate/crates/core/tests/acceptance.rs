//! End-to-end acceptance suite: one line per criterion, nonzero exit on any
//! failure.

mod common;

use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use common::{int_poly, printed_phi2, printed_phi3};
use dessins_core::arith::{palindromic_expand, palindromic_reduce, rat, resultant, Poly, QuadExt};
use dessins_core::belyi::{
    catalog_map, constrained_identity_concrete, constrained_identity_parametric, is_belyi,
    minus_one, parse_catalog_expr, verify_identity, RatMap, CATALOG, HEXAGONAL_FACTOR,
    LEVEL_TWO_COORDINATE_CHANGE, LEVEL_TWO_QUOTIENT,
};
use dessins_core::dessin::{
    diagnostics, passport_from_construction1, passport_from_construction2, DessinPassport,
    MonodromyTriple,
};
use dessins_core::isogeny::{
    default_samples, hexagonal3, square5, verify_isogeny, verify_wp_identity, wp_eval, WpIdentity,
    WpLattice, DEFAULT_TOL,
};
use dessins_core::modeq::{
    jvalue_table, level_pair, modular_polynomial_for_level, parse_constant, symmetric_route_check,
};
use dessins_core::perm::Perm;
use dessins_core::psl2::{
    coset_table, gamma2_word_decompose, index_formula, scaled_orbit_partition, word_eval, Ambient,
    Base, CosetTable, Gen, IndexFamily, SubgroupSpec, Word,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20240101;
const RANDOM_CASES: usize = 60;

fn table(spec: &str, ambient: Ambient) -> CosetTable {
    coset_table(&SubgroupSpec::parse(spec).unwrap(), ambient).unwrap()
}

fn passport1(spec: &str) -> DessinPassport {
    passport_from_construction1(&table(spec, Ambient::Gamma1)).unwrap()
}

fn passport2(spec: &str) -> (DessinPassport, MonodromyTriple) {
    passport_from_construction2(&table(spec, Ambient::Gamma2)).unwrap()
}

fn construction1_specs() -> Vec<String> {
    (2..=8)
        .map(|n| format!("gamma:{n}"))
        .chain([2, 3, 6, 11].map(|n| format!("gamma0:{n}")))
        .collect()
}

fn index_and_cosets() {
    for n in 2..=8 {
        let idx = table(&format!("gamma:{n}"), Ambient::Gamma1).index() as u64;
        assert_eq!(
            idx,
            index_formula(IndexFamily::Principal, n).unwrap(),
            "gamma:{n}"
        );
    }
    for n in [2, 3, 6, 11] {
        let idx = table(&format!("gamma0:{n}"), Ambient::Gamma1).index() as u64;
        assert_eq!(
            idx,
            index_formula(IndexFamily::GammaZero, n).unwrap(),
            "gamma0:{n}"
        );
    }
    let mu: Vec<usize> = [2, 3, 6]
        .iter()
        .map(|n| table(&format!("gamma:{n}"), Ambient::Gamma1).index())
        .collect();
    assert_eq!(mu, [6, 12, 72]);
    let idx: Vec<usize> = [2, 3, 6, 11]
        .iter()
        .map(|n| table(&format!("gamma0:{n}"), Ambient::Gamma1).index())
        .collect();
    assert_eq!(idx, [3, 4, 12, 12]);
}

fn construction1_passports() {
    let p = passport1("gamma:2");
    assert_eq!((p.degree, p.genus), (6, 0));
    assert_eq!(
        (p.black, p.white, p.faces),
        (vec![3, 3], vec![2, 2, 2], vec![2, 2, 2])
    );

    let p = passport1("gamma0:2");
    assert_eq!((p.nu2, p.faces), (Some(1), vec![2, 1]));
    let p = passport1("gamma0:3");
    assert_eq!((p.nu3, p.faces), (Some(1), vec![3, 1]));

    let p = passport1("gamma0:6");
    assert_eq!((p.nu2, p.nu3, p.degree), (Some(0), Some(0), 12));
    assert_eq!((p.black, p.white), (vec![3; 4], vec![2; 6]));

    let p = passport1("gamma0:11");
    assert_eq!((p.genus, p.faces), (1, vec![11, 1]));
}

fn construction2_passports() {
    let (p, _) = passport2("gamma:4");
    assert_eq!((p.degree, p.genus), (4, 0));
    assert!([&p.black, &p.white, &p.faces]
        .iter()
        .all(|v| v.iter().all(|&k| k == 2)));

    let (p, _) = passport2("gamma:8");
    assert_eq!((p.degree, p.genus), (32, 5));
    assert!([&p.black, &p.white, &p.faces]
        .iter()
        .all(|v| v.iter().all(|&k| k == 4)));

    let (p, t) = passport2("kernel:sigmaA=(1 2 3);sigmaB=(2 3 4 5 6)");
    assert_eq!((p.degree, p.genus), (360, 40));
    assert_eq!(
        (p.black, p.white, p.faces),
        (vec![5; 72], vec![4; 90], vec![3; 120])
    );
    let d = diagnostics(&t).unwrap();
    assert_eq!(d.monodromy_group_order, 360);
    assert!(d.center_trivial && d.regular);
}

fn genus_cross_checks() {
    for spec in construction1_specs() {
        let p = passport1(&spec);
        let q = |n: usize, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let formula = rat(1, 1) + q(p.degree, 12)
            - q(p.nu2.unwrap(), 4)
            - q(p.nu3.unwrap(), 3)
            - q(p.nu_inf, 2);
        assert_eq!(formula, q(p.genus, 1), "{spec}");
    }
    for n in 2..=5i64 {
        let (p, _) = passport2(&format!("gamma:{}", 2 * n));
        let m = p.degree as i64;
        // 1 + (m/2)(1 − 3/N)
        let formula = rat(1, 1) + rat(m, 2) * (rat(1, 1) - rat(3, n));
        assert_eq!(formula, rat(p.genus as i64, 1), "gamma:{}", 2 * n);
    }
}

fn map(name: &str) -> RatMap {
    catalog_map(name).unwrap().map()
}

fn belyi_identities() {
    for m in CATALOG {
        assert!(is_belyi(&m.map()).unwrap(), "{}", m.name);
        if let Some(g) = m.minus_one_map() {
            assert!(
                verify_identity(&minus_one(&m.map()), &g).unwrap(),
                "{}",
                m.name
            );
        }
    }
    let h = parse_catalog_expr(HEXAGONAL_FACTOR, "x");
    let f3x = parse_catalog_expr(&catalog_map("gamma3").unwrap().expr.replace('z', "x"), "x");
    assert!(verify_identity(&f3x.compose(&h).unwrap(), &map("gamma6_t3")).unwrap());

    let change = parse_catalog_expr(LEVEL_TWO_COORDINATE_CHANGE, "z");
    let inner = change.compose(&map("gamma4")).unwrap();
    let f4j = map("gamma4_j");
    assert!(verify_identity(&map("gamma2").compose(&inner).unwrap(), &f4j).unwrap());
    assert_eq!(f4j.degree(), 24);

    let quotient = parse_catalog_expr(LEVEL_TWO_QUOTIENT, "z");
    assert!(verify_identity(&map("gamma0_2").compose(&quotient).unwrap(), &map("gamma2")).unwrap());
    let cube = parse_catalog_expr("z^3", "z");
    assert!(verify_identity(&map("gamma0_3").compose(&cube).unwrap(), &map("gamma3")).unwrap());
}

fn constrained_identity() {
    assert!(constrained_identity_concrete(8));
    assert!(constrained_identity_parametric(8));
    assert!(!constrained_identity_concrete(9));
    assert!(!constrained_identity_parametric(9));
}

fn isogenies() {
    for (p, d) in [(hexagonal3(), 3), (square5(), 5)] {
        for m in [p.map.clone(), p.map.negate_g()] {
            let c = verify_isogeny(&p.curve, &p.curve, &m).unwrap();
            assert!(c.holds && c.degree == d, "{}", p.name);
        }
    }
}

fn wp_identities() {
    for which in [WpIdentity::Hexagonal, WpIdentity::Square] {
        let r = verify_wp_identity(which, &default_samples(), DEFAULT_TOL).unwrap();
        assert!(r.passed && r.checked >= 3, "{which:?}: {}", r.max_error);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for lat in [WpLattice::square(), WpLattice::hexagonal()] {
        let (w1, w2) = lat.periods();
        for _ in 0..10 {
            let z = w1 * rng.gen_range(0.05..0.95) + w2 * rng.gen_range(0.05..0.95);
            let v = wp_eval(&lat, z).unwrap();
            let oracle = common::direct_wp(w2, z, 200.0);
            assert!((v - oracle).norm() < 1e-6, "{z}");
            let tol = 10.0 * lat.eps();
            assert!(
                (v - wp_eval(&lat, -z).unwrap()).norm() <= tol,
                "even at {z}"
            );
            assert!(
                (v - wp_eval(&lat, z + w1).unwrap()).norm() <= tol,
                "w1 at {z}"
            );
            assert!(
                (v - wp_eval(&lat, z + w2).unwrap()).norm() <= tol,
                "w2 at {z}"
            );
        }
    }
}

fn modular_equations() {
    let k = rat(1728, 1);
    let intermediates = [
        (
            int_poly(&[-6656, 3136, 4096]),
            int_poly(&[20123648, 14204928, 3342336, 262144]),
        ),
        (
            int_poly(&[-50976, -51732, 26244, 19683]),
            int_poly(&[803894544, 666644256, 161400600, 15588936, 531441]),
        ),
    ];
    for ((level, printed), (p, q)) in [(2, printed_phi2()), (3, printed_phi3())]
        .into_iter()
        .zip(intermediates)
    {
        let phi = modular_polynomial_for_level(level).unwrap().poly;
        assert_eq!(phi, printed, "level {level}");
        assert_eq!(phi.swap(), phi);
        let (f, g) = level_pair(level).unwrap();
        assert!(phi.eval_ratfunc(&f.scale(&k), &g.scale(&k)).is_zero());
        let route = symmetric_route_check(&f, &g, &rat(1, 1), &BigInt::from(1728)).unwrap();
        assert_eq!((route.p, route.q), (p, q), "level {level}");
        assert!(route.matches);
    }
}

fn special_values() {
    let expected = [
        (2, vec!["54000", "287496", "8000", "1728"]),
        (
            3,
            vec![
                "-12288000",
                "76771008+44330496*sqrt(3)",
                "76771008-44330496*sqrt(3)",
                "54000",
                "0",
            ],
        ),
    ];
    for (level, values) in expected {
        let rows = jvalue_table(level).unwrap();
        assert_eq!(rows.len(), values.len());
        for (row, v) in rows.iter().zip(values) {
            assert_eq!(row.value, parse_constant(v).unwrap(), "{}", row.label);
            assert!(row.factored_matches, "{}", row.label);
        }
    }
}

fn orbit_shape(n: u64, base: Base) -> Vec<(usize, bool)> {
    let p = scaled_orbit_partition(n, base).unwrap();
    let mut s: Vec<_> = p
        .orbits
        .iter()
        .map(|o| (o.members.len(), o.elliptic))
        .collect();
    s.sort();
    s
}

fn scaled_orbits() {
    // one black vertex of degree three; white vertices of degrees one and two
    assert_eq!(orbit_shape(2, Base::Rho), vec![(3, false)]);
    assert_eq!(orbit_shape(2, Base::I), vec![(1, true), (2, false)]);
    // black vertices of degrees one and three; two white vertices of degree two
    assert_eq!(orbit_shape(3, Base::Rho), vec![(1, true), (3, false)]);
    assert_eq!(orbit_shape(3, Base::I), vec![(2, false), (2, false)]);
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly<BigRational> {
    let n = rng.gen_range(1..=5);
    let mut c: Vec<BigRational> = (0..n).map(|_| rat(rng.gen_range(-9..=9), 1)).collect();
    c.push(rat(rng.gen_range(1..=9), 1));
    Poly::new(c)
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

fn property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_CASES {
        let (p, r, q) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        let lhs = resultant(&(p.clone() * r.clone()), &q).unwrap();
        assert_eq!(lhs, resultant(&p, &q).unwrap() * resultant(&r, &q).unwrap());
    }
    for _ in 0..RANDOM_CASES {
        let n = rng.gen_range(0..8);
        let q: Poly<BigInt> = Poly::new(
            (0..=n)
                .map(|_| BigInt::from(rng.gen_range(-50..=50)))
                .collect(),
        );
        let (low, coeffs) = palindromic_expand(&q);
        assert_eq!(palindromic_reduce(low, &coeffs).unwrap(), q);
    }
    for _ in 0..RANDOM_CASES {
        let d = *[-3i64, -1, 2, 3, 5, -7].choose(&mut rng).unwrap();
        let mut elem = || {
            let mut r = || rat(rng.gen_range(-20..=20), rng.gen_range(1..=6));
            QuadExt::new(d, r(), r()).unwrap()
        };
        let (x, y) = (elem(), elem());
        assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
    }
    for _ in 0..RANDOM_CASES {
        let len = rng.gen_range(0..=12);
        let mut letters: Vec<(Gen, i64)> = Vec::new();
        while letters.len() < len {
            let g = if rng.gen_bool(0.5) { Gen::A } else { Gen::B };
            let e = *[-2i64, -1, 1, 2].choose(&mut rng).unwrap();
            if letters.last().is_some_and(|l| l.0 == g) {
                continue;
            }
            letters.push((g, e));
        }
        let w = Word::from_letters(&letters);
        let back = gamma2_word_decompose(&word_eval(&w)).unwrap();
        assert_eq!(back.letters(), letters);
    }
    let specs = construction1_specs();
    for i in 0..RANDOM_CASES {
        let t = dessins_core::dessin::triple_from_construction1(&table(
            &specs[i % specs.len()],
            Ambient::Gamma1,
        ))
        .unwrap();
        let r = random_perm(&mut rng, t.degree());
        let moved = t.relabel(&r);
        assert_eq!(
            DessinPassport::from_triple(&moved).unwrap(),
            DessinPassport::from_triple(&t).unwrap()
        );
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 12] = [
        ("index and coset agreement", index_and_cosets),
        ("construction-1 passports", construction1_passports),
        ("construction-2 passports", construction2_passports),
        ("genus cross-checks", genus_cross_checks),
        ("Belyi identity suite", belyi_identities),
        ("constrained identity", constrained_identity),
        ("isogeny suite", isogenies),
        ("Weierstrass p identities", wp_identities),
        ("modular equations", modular_equations),
        ("special values", special_values),
        ("scaled-orbit decomposition", scaled_orbits),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = panic::catch_unwind(run).is_ok();
        let status = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2}: {status} {name} ({:.2?})",
            i + 1,
            start.elapsed()
        );
        failed += usize::from(!ok);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
