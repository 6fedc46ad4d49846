use std::sync::Arc;

use edcheck_core::group::{abelian_subgroup_census, central_quotient, find_elementary_abelian_2, named, unipotent_subgroup_sl2};
use edcheck_core::linalg::restrict_form;
use edcheck_core::models::{principal_series_sl2_8, weil_sl2};
use edcheck_core::obstruction::{
    cited_constants, decompose, ed_bounds, hypersurface_fixed_point, max_invariant_isotropic, ogr_fixed_point_exists,
    projective_fixed_locus, ry_obstruction, ActionSpace, ComponentVerdict, EdFacts, ObstructionError, PairClass,
    ProjectiveRepFact, Provenance, RyScenario,
};
use edcheck_core::rep::{invariant_cubics, restrict_decompose, CubicForm};
use edcheck_core::{CycField, FiniteField, Subgroup, Subspace};
use proptest::prelude::*;

#[path = "support/oracle.rs"]
mod oracle;

use oracle::{cyclic_group, diagonal_rep, gram, witness_is_valid};

#[test]
fn small_instances_agree_with_brute_force() {
    assert_eq!(oracle::check_instances(), Ok(oracle::instances().len()));
}

#[test]
fn z4_with_i_and_minus_i_uses_a_whole_eigenline() {
    let c4 = cyclic_group(5, 2);
    let f = CycField::new(4);
    let rep = diagonal_rep(&c4, &f, &[vec![1, 3]]);
    let form = gram(&f, &[&[0, 1], &[1, 0]]);
    let dec = restrict_decompose(&rep, &Subgroup::whole(&c4)).unwrap();
    let cert = max_invariant_isotropic(&dec, &form).unwrap();
    assert_eq!(cert.max_dim, 1);
    assert!(matches!(cert.classes[..], [PairClass::InversePair { dim: 1, .. }]));
    let lines = [Subspace::span(&f, 2, &[vec![f.one(), f.zero()]]), Subspace::span(&f, 2, &[vec![f.zero(), f.one()]])];
    assert!(lines.contains(&cert.witness));
    let label = &cert.witness_vectors[0].0;
    assert_eq!(dec.component(label).unwrap().subspace, cert.witness);
}

#[test]
fn sum_of_squares_witness_uses_the_extended_field() {
    let g = cyclic_group(3, 1);
    let f = CycField::new(1);
    let rep = diagonal_rep(&g, &f, &[vec![0, 0]]);
    let dec = restrict_decompose(&rep, &Subgroup::whole(&g)).unwrap();
    let cert = max_invariant_isotropic(&dec, &gram(&f, &[&[1, 0], &[0, 1]])).unwrap();
    assert_eq!(cert.field().conductor(), 4);
    assert_eq!(cert.max_dim, 1);
}

#[test]
fn inconsistent_forms_are_rejected() {
    let c3 = cyclic_group(7, 2);
    let f = CycField::new(3);
    let rep = diagonal_rep(&c3, &f, &[vec![0, 1]]);
    let dec = restrict_decompose(&rep, &Subgroup::whole(&c3)).unwrap();
    assert!(matches!(
        max_invariant_isotropic(&dec, &gram(&f, &[&[1, 1], &[1, 1]])),
        Err(ObstructionError::NonzeroPairingBlock(..))
    ));
    let rep = diagonal_rep(&c3, &f, &[vec![0, 0, 1]]);
    let dec = restrict_decompose(&rep, &Subgroup::whole(&c3)).unwrap();
    assert!(matches!(
        max_invariant_isotropic(&dec, &gram(&f, &[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]])),
        Err(ObstructionError::DegenerateComponent(_))
    ));
}

#[test]
fn principal_series_has_no_fixed_isotropic_4_plane() {
    let g = Arc::new(named::sl2(FiniteField::f8()).unwrap());
    let u = principal_series_sl2_8(&g, 1).unwrap().rep;
    let n = unipotent_subgroup_sl2(&g).unwrap();

    let v = ogr_fixed_point_exists(&u, &n, 4).unwrap();
    assert!(!v.exists);
    assert!(v.fixed_point().is_none());
    let cert = &v.certificate;
    assert_eq!(cert.max_dim, 1);
    assert_eq!(cert.zero_blocks_checked, 28);
    assert_eq!(cert.classes.len(), 8);
    assert_eq!(cert.classes[0], PairClass::SelfInverse { label: vec![0, 0, 0], dim: 2 });
    assert!(cert.classes[1..].iter().all(|c| matches!(c, PairClass::SelfInverse { dim: 1, .. })));
    assert_eq!(cert.field().conductor(), 7);
    assert!(witness_is_valid(&u, &n, &cert.witness, &v.form.gram));
    let trivial = v.decomposition.component(&[0, 0, 0]).unwrap();
    assert_eq!(restrict_form(&v.form.gram, &trivial.subspace).unwrap().rank(), 2);

    let mut last = true;
    for k in 0..=9 {
        let exists = ogr_fixed_point_exists(&u, &n, k).unwrap().exists;
        assert!(last || !exists, "monotone in k");
        last = exists;
        assert_eq!(exists, k <= 1);
    }
    let line = ogr_fixed_point_exists(&u, &n, 1).unwrap();
    assert_eq!(line.fixed_point().unwrap().dim(), 1);

    let report = ry_obstruction(&RyScenario {
        group_name: "SL2(F8)".into(),
        action: ActionSpace::IsotropicGrassmannian { rep: &u, k: 4 },
        subgroups: vec![("N".into(), n.clone()), ("trivial".into(), Subgroup::trivial(&g))],
    })
    .unwrap();
    assert!(report.obstructed);
    assert_eq!(report.obstructing_subgroup().unwrap().name, "N");
    assert_eq!(report.verdicts[0].isomorphism_type, "C2^3");
    assert!(report.verdicts[1].fixed_point);
    let whole = ogr_fixed_point_exists(&u, &Subgroup::trivial(&g), 4).unwrap();
    assert_eq!(whole.certificate.max_dim, 4);
    assert!(witness_is_valid(&u, &Subgroup::trivial(&g), &whole.certificate.witness, &whole.form.gram));
    assert!((1..=4).contains(&whole.certificate.witness.dim()));
    assert!(report.conclusion.contains("hence none on any invariant subvariety"));

    let e3 = find_elementary_abelian_2(&g, 3).unwrap();
    assert!(find_elementary_abelian_2(&g, 4).is_none());
    let facts = EdFacts {
        group_name: "SL2(F8)".into(),
        elementary_abelian: vec![&e3],
        projective_reps: vec![ProjectiveRepFact {
            description: "U".into(),
            dim: 9,
            projective_kernel_order: u.projective_kernel().order(),
        }],
        obstruction: Some((4, &report, "classification of the remaining cases".into())),
        cited_upper: vec![(6, "cited".into())],
        ..Default::default()
    };
    let ledger = ed_bounds(&facts).unwrap();
    assert_eq!(ledger.interval, (4, Some(6)));
    assert_eq!(ledger.binding_lower().unwrap().provenance, Provenance::ComputedObstructionCitedClassification);
    assert_eq!(ledger.binding_lower().unwrap().provenance.as_str(), "computed obstruction + cited classification");
    assert_eq!(ledger.upper.len(), 2);
    assert_eq!(ledger.conclusion(), "ed in [4, 6]");

    let unobstructed = ry_obstruction(&RyScenario {
        group_name: "SL2(F8)".into(),
        action: ActionSpace::Projective(&u),
        subgroups: vec![("trivial".into(), Subgroup::trivial(&g))],
    })
    .unwrap();
    assert!(!unobstructed.obstructed);
    let bad = EdFacts {
        obstruction: Some((4, &unobstructed, String::new())),
        ..Default::default()
    };
    assert!(matches!(ed_bounds(&bad), Err(ObstructionError::InvalidFact(_))));
}

#[test]
fn klein_cubic_fixed_points() {
    let f11 = FiniteField::prime(11).unwrap();
    let g11 = Arc::new(named::sl2(f11).unwrap());
    let w = weil_sl2(&g11).unwrap();
    let psl = Arc::new(central_quotient(&g11, named::SL2_CAP).unwrap());
    let v5 = w.odd.descend(&psl, named::SL2_CAP).unwrap();
    let cubic = invariant_cubics(&v5).unwrap().basis.remove(0);

    let sylow = find_elementary_abelian_2(&psl, 2).unwrap().subgroup;
    let locus = projective_fixed_locus(&v5, &sylow).unwrap();
    let mut dims = locus.projective_dims();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(dims, vec![1, 0, 0, 0]);
    let report = hypersurface_fixed_point(&v5, &sylow, &cubic).unwrap();
    assert_eq!(report.fixed_point_on_hypersurface(), Some(true));

    let census = abelian_subgroup_census(&psl);
    let mut subgroups = Vec::new();
    for class in &census {
        let report = hypersurface_fixed_point(&v5, &class.representative, &cubic).unwrap();
        assert_eq!(report.fixed_point_on_hypersurface(), Some(true), "{}", class.isomorphism_type);
        subgroups.push((class.isomorphism_type.to_string(), class.representative.clone()));
    }
    let ry = ry_obstruction(&RyScenario {
        group_name: "PSL2(F11)".into(),
        action: ActionSpace::Hypersurface { rep: &v5, cubic: &cubic },
        subgroups,
    })
    .unwrap();
    assert!(!ry.obstructed);
    assert_eq!(ry.conclusion, "no obstruction from listed subgroups");

    let c11 = census.iter().find(|c| c.isomorphism_type.order() == 11).unwrap();
    assert_eq!(decompose(&v5, &c11.representative).unwrap().field().conductor(), 11);
    let c5 = census.iter().find(|c| c.isomorphism_type.order() == 5).unwrap();
    assert_eq!(decompose(&v5, &c5.representative).unwrap().field().conductor(), 55);

    let mut tampered = cubic.coeffs().to_vec();
    tampered[0] = &tampered[0] + &v5.field().one();
    let tampered = CubicForm::new(5, tampered);
    assert_eq!(
        hypersurface_fixed_point(&v5, &sylow, &tampered).unwrap_err(),
        ObstructionError::CubicNotInvariant
    );

    let e2 = find_elementary_abelian_2(&psl, 2).unwrap();
    let facts = EdFacts {
        group_name: "PSL2(F11)".into(),
        elementary_abelian: vec![&e2],
        projective_reps: vec![ProjectiveRepFact {
            description: "odd Weil part".into(),
            dim: 5,
            projective_kernel_order: v5.projective_kernel().order(),
        }],
        cited_lower: vec![(3, "cited".into())],
        ..Default::default()
    };
    let ledger = ed_bounds(&facts).unwrap();
    assert_eq!(ledger.interval, (3, Some(4)));
    assert_eq!(ledger.binding_upper().unwrap().provenance, Provenance::ComputedProjectiveRep);
}

#[test]
fn point_components_off_the_cubic() {
    let c3 = cyclic_group(7, 2);
    let f = CycField::new(3);
    let rep = diagonal_rep(&c3, &f, &[vec![0, 1, 2]]);
    let a = Subgroup::whole(&c3);
    let monomials = edcheck_core::rep::cubic_monomials(3);
    let cube = |sel: &[[usize; 3]]| {
        CubicForm::new(3, monomials.iter().map(|m| f.int(sel.contains(m) as i64)).collect())
    };

    let x0 = hypersurface_fixed_point(&rep, &a, &cube(&[[0, 0, 0]])).unwrap();
    let verdicts = x0.verdicts.clone().unwrap();
    assert!(matches!(&verdicts[0], ComponentVerdict::PointOff { value, .. } if value.is_one()));
    assert!(matches!(&verdicts[1], ComponentVerdict::PointOn { .. }));
    assert_eq!(x0.fixed_point_on_hypersurface(), Some(true));
    assert_eq!(x0.point_witness().unwrap(), &[f.zero(), f.one(), f.zero()]);

    let fermat = cube(&[[0, 0, 0], [1, 1, 1], [2, 2, 2]]);
    let report = hypersurface_fixed_point(&rep, &a, &fermat).unwrap();
    assert_eq!(report.fixed_point_on_hypersurface(), Some(false));
    let ry = ry_obstruction(&RyScenario {
        group_name: "C3".into(),
        action: ActionSpace::Hypersurface { rep: &rep, cubic: &fermat },
        subgroups: vec![("trivial".into(), Subgroup::trivial(&c3)), ("C3".into(), a.clone())],
    })
    .unwrap();
    assert!(ry.obstructed);
    assert_eq!(ry.obstructing_subgroup().unwrap().name, "C3");

    let trivial = projective_fixed_locus(&rep, &Subgroup::trivial(&c3)).unwrap();
    assert_eq!(trivial.projective_dims(), vec![2]);
    let ry = ry_obstruction(&RyScenario {
        group_name: "C3".into(),
        action: ActionSpace::Projective(&rep),
        subgroups: vec![("trivial".into(), Subgroup::trivial(&c3))],
    })
    .unwrap();
    assert!(!ry.obstructed);
}

#[test]
fn cited_constants_table() {
    let c: Vec<(&str, u32)> = cited_constants().iter().map(|c| (c.group, c.ed)).collect();
    assert_eq!(c, vec![("A5", 2), ("A6", 3), ("A7", 4), ("PSL2(F7)", 2)]);
}

/// Self-inverse blocks `Lᵀ·D·L` with `D = diag(±1)` and `L` upper
/// unitriangular, inverse pairs joined by an invertible block.
fn random_instance() -> impl Strategy<Value = (u32, Vec<i64>, Vec<Vec<i64>>, usize)> {
    (prop::sample::select(vec![2u32, 3, 4, 6]), 1usize..=3)
        .prop_flat_map(|(m, k)| {
            (
                Just(m),
                prop::collection::vec(0..m as i64, k),
                prop::collection::vec(-2i64..=2, 36),
                prop::collection::vec(prop::bool::ANY, 6),
            )
        })
        .prop_map(|(m, base, entries, signs)| {
            let mut exps = Vec::new();
            for &e in &base {
                exps.push(e);
                if 2 * e % m as i64 != 0 {
                    exps.push(m as i64 - e);
                }
            }
            exps.truncate(6);
            let d = exps.len();
            let mut g = vec![vec![0i64; d]; d];
            let mut expected = 0;
            let mut seen = vec![false; m as usize];
            for &e in &exps {
                let cls: Vec<usize> = (0..d).filter(|&i| exps[i] == e).collect();
                let dual: Vec<usize> = (0..d).filter(|&i| (exps[i] + e) % m as i64 == 0).collect();
                if seen[e as usize] {
                    continue;
                }
                seen[e as usize] = true;
                if 2 * e % m as i64 == 0 {
                    expected += cls.len() / 2;
                    let k = cls.len();
                    for a in 0..k {
                        for b in 0..k {
                            let mut s = 0;
                            for t in 0..=a.min(b) {
                                let la = if t == a { 1 } else { entries[t * 6 + a] };
                                let lb = if t == b { 1 } else { entries[t * 6 + b] };
                                s += la * lb * if signs[cls[t]] { 1 } else { -1 };
                            }
                            g[cls[a]][cls[b]] = s;
                        }
                    }
                } else if !dual.is_empty() {
                    let k = cls.len().min(dual.len());
                    seen[((m as i64 - e) % m as i64) as usize] = true;
                    expected += k;
                    for a in 0..k {
                        g[cls[a]][dual[a]] = 1;
                        g[dual[a]][cls[a]] = 1;
                    }
                }
            }
            (m, exps, g, expected)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isotropy_certificates_are_sound((m, exps, g, expected) in random_instance()) {
        let d = exps.len();
        let group = cyclic_group(13, [1, 12, 3, 5, 0, 4][m as usize - 1]);
        prop_assume!(group.order() == m as usize);
        let field = CycField::new(if m == 2 { 4 } else { m });
        let scale = field.conductor() as i64 / m as i64;
        let rep = diagonal_rep(&group, &field, &[exps.iter().map(|e| e * scale).collect()]);
        let rows: Vec<&[i64]> = g.iter().map(|r| r.as_slice()).collect();
        let form = gram(&field, &rows);
        prop_assume!(form.is_nondegenerate());
        let a = Subgroup::whole(&group);
        let dec = restrict_decompose(&rep, &a).unwrap();
        let cert = max_invariant_isotropic(&dec, &form).unwrap();
        prop_assert_eq!(cert.max_dim, expected);
        prop_assert!(cert.witness_is_maximal());
        prop_assert!(cert.max_dim <= d / 2);
        prop_assert!(witness_is_valid(&rep, &a, &cert.witness, &form.gram));
        for k in 0..=cert.max_dim {
            let s = cert.isotropic_subspace(k).unwrap();
            prop_assert_eq!(s.dim(), k);
            prop_assert!(witness_is_valid(&rep, &a, &s, &form.gram));
        }
        prop_assert!(cert.isotropic_subspace(cert.max_dim + 1).is_none());
        let comps = dec.components();
        for x in comps {
            for y in comps {
                if x.dim > 0 && y.dim > 0 && dec.dual_label(&x.label) != y.label {
                    let block = x.subspace.basis().mul(&form.gram).mul(&y.subspace.basis().transpose());
                    prop_assert!(block.is_zero());
                }
            }
        }
    }
}
