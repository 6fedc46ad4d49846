use std::sync::Arc;

use edcheck_core::group::{central_quotient, find_elementary_abelian_2, named, unipotent_subgroup_sl2};
use edcheck_core::models::{principal_series_sl2_8, weil_sl2, weil_sp4_f3};
use edcheck_core::rep::{
    fs_indicator, inner_product, invariant_cubics, invariant_symmetric_form, restrict_decompose,
};
use edcheck_core::{FiniteField, FqMat, Rat};

#[test]
fn weil_sl2_small_primes() {
    let g3 = Arc::new(named::sl2(FiniteField::prime(3).unwrap()).unwrap());
    let w3 = weil_sl2(&g3).unwrap();
    assert_eq!((w3.even.dim(), w3.odd.dim()), (2, 1));

    let f11 = FiniteField::prime(11).unwrap();
    let g11 = Arc::new(named::sl2(f11).unwrap());
    let w = weil_sl2(&g11).unwrap();
    assert_eq!((w.even.dim(), w.odd.dim()), (6, 5));
    assert_eq!(w.full.certificate().pairs, 1320);
    assert_eq!(w.central_scalar, w.full.field().int(-1));
    for op in w.full.generator_images() {
        assert_eq!(op.mul(&w.parity), w.parity.mul(&op));
    }
    let minus_one = g11.index_of(&FqMat::scalar(f11, 2, 10)).unwrap();
    assert!(w.odd.op(minus_one).is_identity());
    assert_eq!(w.odd.character().degree(), &w.odd.field().int(5));
    assert_eq!(w.odd.spot_check(200, 7), 0);

    let psl = Arc::new(central_quotient(&g11, named::SL2_CAP).unwrap());
    let v5 = w.odd.descend(&psl, named::SL2_CAP).unwrap();
    assert_eq!(v5.certificate().pairs, 660);
    assert_eq!(v5.kernel().order(), 1);
    assert_eq!(fs_indicator(&v5.character()).unwrap(), 0);
    assert!(invariant_symmetric_form(&v5).unwrap().is_none());
    assert!(w.even.descend(&psl, named::SL2_CAP).is_err());

    let cubics = invariant_cubics(&v5).unwrap();
    assert_eq!(cubics.basis.len(), 1);
    assert_eq!(cubics.character_multiplicity, 1);

    let sylow = find_elementary_abelian_2(&psl, 2).unwrap().subgroup;
    let dec = restrict_decompose(&v5, &sylow).unwrap();
    let mut dims = dec.dims();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(dims, vec![2, 1, 1, 1]);
    assert!(dec.projector_algebra_holds());
    let restricted = v5.character().restrict(&sylow).unwrap();
    for c in dec.components() {
        let m = inner_product(&restricted, &dec.character_of(c)).unwrap();
        assert_eq!(m, Rat::int(c.dim as i64));
    }
}

#[test]
fn principal_series_of_sl2_8() {
    let g = Arc::new(named::sl2(FiniteField::f8()).unwrap());
    let ps = principal_series_sl2_8(&g, 1).unwrap();
    let rep = &ps.rep;
    assert_eq!(rep.dim(), 9);
    let chi = rep.character();
    assert_eq!(inner_product(&chi, &chi).unwrap(), Rat::ONE);
    let n = unipotent_subgroup_sl2(&g).unwrap();
    for x in n.members().filter(|&x| x != 0) {
        assert!(chi.value(x).unwrap().is_one());
    }
    assert_eq!(fs_indicator(&chi).unwrap(), 1);
    let form = invariant_symmetric_form(rep).unwrap().unwrap();
    assert!(form.is_nondegenerate());
    assert_eq!(form.space_dim, 1);
    assert!(form.attempt > 0);
    assert_eq!(rep.spot_check(200, 11), 0);

    let dec = restrict_decompose(rep, &n).unwrap();
    assert_eq!(dec.components()[0].label, vec![0, 0, 0]);
    assert_eq!(dec.dims(), vec![2, 1, 1, 1, 1, 1, 1, 1]);
    assert!(dec.projector_algebra_holds());

    let values = |m: u32| principal_series_sl2_8(&g, m).unwrap().rep.character().values().to_vec();
    let v: Vec<_> = (1..=6).map(values).collect();
    // lambda and its inverse induce isomorphic representations
    for m in 1..=3 {
        assert_eq!(v[m - 1], v[6 - m]);
    }
    // the Frobenius orbit {1, 2, 4} is related by twisting with entrywise squaring
    let f = FiniteField::f8();
    let frob: Vec<usize> = g
        .elements()
        .iter()
        .map(|e| {
            let sq = FqMat::new(f, 2, 2, e.data().iter().map(|&x| f.mul(x, x)).collect());
            g.index_of(&sq).unwrap()
        })
        .collect();
    for (a, b) in [(1usize, 2usize), (2, 4), (4, 1)] {
        for (x, &fx) in frob.iter().enumerate() {
            assert_eq!(v[b - 1][x], v[a - 1][fx]);
        }
        assert_ne!(v[a - 1], v[b - 1]);
    }
    assert!(principal_series_sl2_8(&g, 0).is_err());
}

#[test]
fn weil_sp4_f3_split() {
    let g = Arc::new(named::sp4_f3().unwrap());
    let w = weil_sp4_f3(&g).unwrap();
    assert_eq!(w.full.certificate().pairs, 51840);
    assert_eq!((w.even.dim(), w.odd.dim()), (5, 4));
    assert!(w.central_scalar.is_one());
    let f3 = FiniteField::prime(3).unwrap();
    let minus_one = g.index_of(&FqMat::scalar(f3, 4, 2)).unwrap();
    assert!(w.even.op(minus_one).is_identity());
    assert!(w.odd.op(minus_one).neg().is_identity());
    assert_eq!(w.even.projective_kernel().order(), 2);
    assert_eq!(w.odd.projective_kernel().order(), 2);

    let psp = Arc::new(central_quotient(&g, named::SP4_CAP).unwrap());
    let wplus = w.even.descend(&psp, named::SP4_CAP).unwrap();
    assert_eq!(wplus.kernel().order(), 1);
    assert_eq!(wplus.projective_kernel().order(), 1);

    let mut bad = w.full.generator_images();
    bad[3] = bad[3].scale(&w.full.field().zeta_pow(1));
    assert!(edcheck_core::rep::graph_verify(&g, &bad, named::SP4_CAP).is_err());
}
