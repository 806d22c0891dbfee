use dessins_core::arith::{lift, parse_rational, rat, Poly, QuadExt, RatFunc};
use dessins_core::belyi::{
    catalog_map, constrained_identity_check, is_belyi, minus_one, parse_catalog_expr,
    passport_of_map, ram_profile, verify_identity, RatMap, CATALOG, HEXAGONAL_FACTOR,
    LEVEL_TWO_COORDINATE_CHANGE, LEVEL_TWO_QUOTIENT,
};
use dessins_core::dessin::{passport_from_construction1, passport_from_construction2};
use dessins_core::psl2::{coset_table, Ambient, SubgroupSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn map(name: &str) -> RatMap {
    catalog_map(name).unwrap().map()
}

fn compose(outer: &RatMap, inner: &RatMap) -> RatMap {
    outer.compose(inner).unwrap()
}

fn power(var: &str, k: u32) -> RatMap {
    parse_catalog_expr(&format!("{var}^{k}"), var)
}

#[test]
fn every_catalog_map_is_belyi_with_consistent_profile() {
    for m in CATALOG {
        let f = m.map();
        let p = ram_profile(&f).unwrap();
        for part in [&p.over0, &p.over1, &p.over_inf] {
            assert_eq!(part.iter().sum::<usize>(), p.degree, "{}", m.name);
        }
        assert!(is_belyi(&f).unwrap(), "{}", m.name);
    }
}

#[test]
fn displayed_minus_one_forms_hold() {
    for m in CATALOG {
        if let Some(g) = m.minus_one_map() {
            assert!(
                verify_identity(&minus_one(&m.map()), &g).unwrap(),
                "{}",
                m.name
            );
        }
    }
}

#[test]
fn passports_match_coset_actions() {
    for m in CATALOG {
        let spec = SubgroupSpec::parse(m.subgroup).unwrap();
        let group = if m.construction == 1 {
            passport_from_construction1(&coset_table(&spec, Ambient::Gamma1).unwrap()).unwrap()
        } else {
            passport_from_construction2(&coset_table(&spec, Ambient::Gamma2).unwrap())
                .unwrap()
                .0
        };
        let ours = passport_of_map(&m.map()).unwrap();
        assert!(
            ours.same_partitions(&group),
            "{}: {} vs {}",
            m.name,
            ours,
            group
        );
        assert_eq!(group.genus, 0, "{}", m.name);
    }
}

#[test]
fn level_two_quotient_and_level_three_quotient() {
    let q = parse_catalog_expr(LEVEL_TWO_QUOTIENT, "z");
    assert!(verify_identity(&compose(&map("gamma0_2"), &q), &map("gamma2")).unwrap());
    let cube = power("z", 3);
    assert!(verify_identity(&compose(&map("gamma0_3"), &cube), &map("gamma3")).unwrap());
}

#[test]
fn level_six_tower() {
    let h = parse_catalog_expr(HEXAGONAL_FACTOR, "x");
    let f3x = parse_catalog_expr(&catalog_map("gamma3").unwrap().expr.replace('z', "x"), "x");
    let composite = compose(&f3x, &h);
    assert!(verify_identity(&composite, &map("gamma6_t3")).unwrap());
    assert_eq!(composite.degree(), 12 * 3);
    let f06 = parse_catalog_expr(
        &catalog_map("gamma0_6").unwrap().expr.replace('z', "x"),
        "x",
    );
    assert!(verify_identity(&compose(&f06, &power("x", 3)), &map("gamma6_t3")).unwrap());
    assert!(!is_belyi(&h).unwrap());
    let hp = ram_profile(&h).unwrap();
    assert_eq!(hp.over_inf, vec![2, 1]);
}

#[test]
fn level_four_tower() {
    let m = parse_catalog_expr(LEVEL_TWO_COORDINATE_CHANGE, "z");
    let f4 = map("gamma4");
    let composite = compose(&map("gamma2"), &compose(&m, &f4));
    assert!(verify_identity(&composite, &map("gamma4_j")).unwrap());
    assert_eq!(composite.degree(), 4 * 6);
    assert!(is_belyi(&composite).unwrap());
}

#[test]
fn belyi_closed_under_tower_composition() {
    let towers = [
        (map("gamma0_6"), power("z", 3)),
        (map("gamma0_3"), power("z", 3)),
        (map("gamma2"), map("gamma4")),
        (power("z", 2), map("gamma4")),
    ];
    for (outer, inner) in towers {
        assert!(is_belyi(&inner).unwrap());
        let c = compose(&outer, &inner);
        assert_eq!(c.degree(), outer.degree() * inner.degree());
        assert!(is_belyi(&c).unwrap());
    }
}

fn random_mobius(rng: &mut ChaCha8Rng) -> RatFunc<num_rational::BigRational> {
    loop {
        let [a, b, c, d]: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-5..=5));
        if a * d - b * c != 0 && c != 0 {
            let num = Poly::new(vec![rat(b, 1), rat(a, 1)]);
            let den = Poly::new(vec![rat(d, 1), rat(c, 1)]);
            return RatFunc::new(num, den).unwrap();
        }
    }
}

#[test]
fn profiles_invariant_under_mobius_precomposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for m in CATALOG {
        let f = m.map();
        let base = ram_profile(&f).unwrap();
        for _ in 0..3 {
            let mob = lift(&random_mobius(&mut rng));
            assert_eq!(ram_profile(&compose(&f, &mob)).unwrap(), base, "{}", m.name);
        }
    }
}

#[test]
fn involution_swaps_level_pairs() {
    let inv = parse_catalog_expr("z/(z-1)", "z");
    for (f, g) in [
        ("gamma0_2", "gamma0_2_level"),
        ("gamma0_3", "gamma0_3_level"),
    ] {
        assert!(verify_identity(&compose(&map(f), &inv), &map(g)).unwrap());
        assert!(verify_identity(&compose(&map(g), &inv), &map(f)).unwrap());
    }
}

#[test]
fn constrained_identity() {
    assert!(constrained_identity_check());
}

#[test]
fn rational_parse_agrees_with_catalog() {
    let f = parse_rational("(3*z^2+1)^3/(9*z^2-1)^2", "z").unwrap();
    assert_eq!(lift(&f), map("gamma2"));
    assert!(map("gamma2")
        .numer()
        .coeffs()
        .iter()
        .all(QuadExt::is_rational));
}
