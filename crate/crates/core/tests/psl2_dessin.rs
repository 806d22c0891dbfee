use dessins_core::dessin::{
    diagnostics, export_dot, passport_from_construction1, passport_from_construction2,
    triple_from_construction1,
};
use dessins_core::psl2::{
    coset_table, cusp_classes, index_formula, Ambient, CosetTable, IndexFamily, PSL2Elem,
    SubgroupSpec,
};

fn table(spec: &str, ambient: Ambient) -> CosetTable {
    coset_table(&SubgroupSpec::parse(spec).unwrap(), ambient).unwrap()
}

#[test]
fn indices_match_closed_forms_up_to_twelve() {
    for n in 2..=12u64 {
        let g = table(&format!("gamma:{n}"), Ambient::Gamma1);
        assert_eq!(
            g.index() as u64,
            index_formula(IndexFamily::Principal, n).unwrap(),
            "{n}"
        );
        let g0 = table(&format!("gamma0:{n}"), Ambient::Gamma1);
        assert_eq!(
            g0.index() as u64,
            index_formula(IndexFamily::GammaZero, n).unwrap(),
            "{n}"
        );
    }
    for n in 1..=6u64 {
        let t = table(&format!("gamma:{}", 2 * n), Ambient::Gamma2);
        assert_eq!(
            t.index() as u64,
            index_formula(IndexFamily::Gamma2N, n).unwrap(),
            "{n}"
        );
    }
}

#[test]
fn construction_one_genus_and_cusps_up_to_twelve() {
    for n in 2..=12u64 {
        for spec in [format!("gamma:{n}"), format!("gamma0:{n}")] {
            let t = table(&spec, Ambient::Gamma1);
            // the footnote formula is checked inside; failure is an error
            let p = passport_from_construction1(&t).unwrap();
            assert_eq!(p.faces.iter().sum::<usize>(), p.degree, "{spec}");
            let cusps = cusp_classes(&t).unwrap();
            assert_eq!(cusps.len(), p.nu_inf, "{spec}");
            let mut widths: Vec<usize> = cusps.iter().map(|c| c.1).collect();
            widths.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(widths, p.faces, "{spec}");
        }
    }
}

#[test]
fn principal_level_genus() {
    // 1 + (N − 6)·μ_N/(12N)
    for n in 2..=10i64 {
        let p =
            passport_from_construction1(&table(&format!("gamma:{n}"), Ambient::Gamma1)).unwrap();
        let mu = p.degree as i64;
        assert_eq!(12 * n * (p.genus as i64 - 1), (n - 6) * mu, "{n}");
        assert!(p.is_uniform());
    }
}

#[test]
fn level_six_join_equals_intersection() {
    let join = SubgroupSpec::parse("join:gamma:6;word=T^3").unwrap();
    let gamma3 = SubgroupSpec::principal(3).unwrap();
    let reps = table("gamma:6", Ambient::Gamma1);
    let mut members = 0;
    for i in 0..reps.index() {
        let g = PSL2Elem::new(reps.rep_matrix(i).clone());
        let in_intersection = g.matrix().residues(2)[2] == 0 && gamma3.is_member(&g);
        assert_eq!(join.is_member(&g), in_intersection, "{}", g.matrix());
        members += usize::from(in_intersection);
    }
    assert_eq!(reps.index() / members, 36);
    let t = table("join:gamma:6;word=T^3", Ambient::Gamma1);
    assert_eq!(t.index(), 36);
    let p = passport_from_construction1(&t).unwrap();
    assert_eq!((p.genus, p.nu2, p.nu3), (0, Some(0), Some(0)));
}

#[test]
fn regular_dessins_have_trivial_stabilizers() {
    for n in [2u64, 3, 4, 5] {
        let t = triple_from_construction1(&table(&format!("gamma:{n}"), Ambient::Gamma1)).unwrap();
        let d = diagnostics(&t).unwrap();
        assert!(d.regular && d.transitive && d.uniform, "{n}");
        assert_eq!(d.monodromy_group_order as usize, t.degree());
    }
    let t = triple_from_construction1(&table("gamma0:11", Ambient::Gamma1)).unwrap();
    let d = diagnostics(&t).unwrap();
    assert!(!d.regular);
    assert_eq!(d.monodromy_group_order, 660);
}

#[test]
fn construction_two_principal_levels() {
    for (n, m, g) in [(2u64, 4usize, 0usize), (3, 12, 1), (4, 32, 5), (5, 60, 13)] {
        let (p, _) =
            passport_from_construction2(&table(&format!("gamma:{}", 2 * n), Ambient::Gamma2))
                .unwrap();
        assert_eq!((p.degree, p.genus), (m, g), "{n}");
        assert!(p.black.iter().chain(&p.white).all(|&k| k as u64 == n));
    }
}

#[test]
fn dot_export_is_deterministic() {
    let t = triple_from_construction1(&table("gamma0:6", Ambient::Gamma1)).unwrap();
    let a = export_dot(&t);
    assert_eq!(a, export_dot(&t));
    assert_eq!(a.matches(" -- ").count(), 12);
}
