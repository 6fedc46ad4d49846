use std::collections::BTreeSet;

use edcheck_core::group::{
    abelian_subgroup_census, central_quotient, find_elementary_abelian_2, named, AbelianType,
    MatrixGroup, Subgroup,
};
use edcheck_core::FiniteField;

fn f11() -> FiniteField {
    FiniteField::prime(11).unwrap()
}

/// Every subset of at most `r` involutions, tested for generating (Z/2)^r.
fn brute_force_e2_exists(g: &MatrixGroup, r: usize) -> bool {
    let inv: Vec<usize> = (1..g.order()).filter(|&x| g.mul(x, x) == 0).collect();
    fn rec(g: &MatrixGroup, inv: &[usize], start: usize, chosen: &mut Vec<usize>, r: usize) -> bool {
        if chosen.len() == r {
            let h = Subgroup::generated_by(g, chosen);
            let abelian = chosen.iter().all(|&a| chosen.iter().all(|&b| g.commute(a, b)));
            return abelian && h.order() == 1 << r;
        }
        (start..inv.len()).any(|k| {
            chosen.push(inv[k]);
            let found = rec(g, inv, k + 1, chosen, r);
            chosen.pop();
            found
        })
    }
    rec(g, &inv, 0, &mut Vec::new(), r)
}

#[test]
fn sp4_and_psp4_orders() {
    let sp4 = named::sp4_f3().unwrap();
    assert_eq!(sp4.order(), 51840);
    let psp4 = central_quotient(&sp4, named::SP4_CAP).unwrap();
    assert_eq!(psp4.order(), 25920);

    let e = find_elementary_abelian_2(&psp4, 4).expect("(Z/2)^4 in PSp4(F3)");
    assert_eq!(e.basis.len(), 4);
    assert_eq!(e.subgroup.order(), 16);
    for &a in &e.basis {
        assert_eq!(psp4.element_order(a), 2);
        for &b in &e.basis {
            assert!(psp4.commute(a, b));
        }
    }
}

#[test]
fn psl2_11_elementary_abelian_search_matches_brute_force() {
    let g = named::psl2(f11()).unwrap();
    for r in 0..=3 {
        let found = find_elementary_abelian_2(&g, r).is_some();
        assert_eq!(found, brute_force_e2_exists(&g, r), "rank {r}");
        assert_eq!(found, r <= 2);
    }
    let sl2_3 = named::sl2(FiniteField::prime(3).unwrap()).unwrap();
    assert!(find_elementary_abelian_2(&sl2_3, 2).is_none());
    assert!(!brute_force_e2_exists(&sl2_3, 2));
}

#[test]
fn psl2_11_census() {
    let g = named::psl2(f11()).unwrap();
    let census = abelian_subgroup_census(&g);
    let types: BTreeSet<String> = census.iter().map(|c| c.isomorphism_type.to_string()).collect();
    let expected: BTreeSet<String> = ["C5", "C6", "C11", "C2^2"].iter().map(|s| s.to_string()).collect();
    assert_eq!(types, expected);
    for c in &census {
        let t = &c.isomorphism_type;
        assert!(t.is_cyclic() || *t == AbelianType::new(vec![2, 2]));
    }
    // element counts: every nonidentity element lies in some maximal abelian subgroup
    let mut covered = BTreeSet::new();
    for c in &census {
        for x in 0..g.order() {
            covered.extend(c.representative.conjugate_by(&g, x).members());
        }
    }
    assert_eq!(covered.len(), g.order());
}

#[test]
fn sl2_8_census_contains_unipotent_type() {
    let g = named::sl2(FiniteField::f8()).unwrap();
    let census = abelian_subgroup_census(&g);
    let types: BTreeSet<String> = census.iter().map(|c| c.isomorphism_type.to_string()).collect();
    assert!(types.contains("C2^3"));
    assert!(types.contains("C7") && types.contains("C9"));
}

#[test]
fn closure_is_deterministic() {
    let a = named::sl2(f11()).unwrap();
    let b = MatrixGroup::closure(&named::sl2_generators(f11()), 2000).unwrap();
    assert_eq!(a.elements(), b.elements());
}
