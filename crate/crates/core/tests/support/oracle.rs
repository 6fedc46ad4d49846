//! Small isotropy instances and a brute-force oracle for
//! `max_invariant_isotropic`, shared by the core tests and the acceptance
//! harness.
#![allow(dead_code)]

use std::sync::Arc;

use edcheck_core::linalg::{bilinear, restrict_form};
use edcheck_core::obstruction::max_invariant_isotropic;
use edcheck_core::rep::{graph_verify, restrict_decompose, GramForm};
use edcheck_core::{CycField, CycMat, CycNum, FiniteField, FqMat, MatrixGroup, Representation, Subgroup, Subspace};

pub fn cyclic_group(p: u32, g: i64) -> Arc<MatrixGroup> {
    let f = FiniteField::prime(p).unwrap();
    Arc::new(MatrixGroup::closure(&[FqMat::from_ints(f, &[&[g]])], 100).unwrap())
}

pub fn klein_four() -> Arc<MatrixGroup> {
    let f = FiniteField::prime(3).unwrap();
    let a = FqMat::from_ints(f, &[&[2, 0], &[0, 1]]);
    let b = FqMat::from_ints(f, &[&[1, 0], &[0, 2]]);
    Arc::new(MatrixGroup::closure(&[a, b], 100).unwrap())
}

/// Representation of `group` whose `s`-th generator acts by
/// `diag(ζ_n^{exps[s][i]})`.
pub fn diagonal_rep(group: &Arc<MatrixGroup>, field: &Arc<CycField>, exps: &[Vec<i64>]) -> Representation {
    let images: Vec<CycMat> = exps
        .iter()
        .map(|e| {
            let mut m = CycMat::zeros(field, e.len(), e.len());
            for (i, &k) in e.iter().enumerate() {
                m.set(i, i, &field.zeta_pow(k));
            }
            m
        })
        .collect();
    graph_verify(group, &images, 100).unwrap()
}

pub fn gram(field: &Arc<CycField>, rows: &[&[i64]]) -> GramForm {
    let n = rows.len();
    let gram = CycMat::from_fn(field, n, n, |i, j| field.int(rows[i][j]));
    let rank = gram.rank();
    GramForm {
        gram,
        rank,
        space_dim: 1,
        attempt: 0,
    }
}

pub fn witness_is_valid(rep: &Representation, a: &Subgroup, cert_witness: &Subspace, gram: &CycMat) -> bool {
    let f = cert_witness.field();
    let g = gram.embed(f).unwrap();
    a.members().all(|x| cert_witness.is_invariant_under(&rep.op(x).embed(f).unwrap()))
        && restrict_form(&g, cert_witness).unwrap().is_zero()
}

/// All subspaces of `Q(ζ_m)^d` in reduced echelon form whose free entries lie in `values`.
pub fn echelon_subspaces(d: usize, values: &[CycNum]) -> Vec<Vec<Vec<CycNum>>> {
    let zero = values[0].field().zero();
    let one = values[0].field().one();
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        let pivots: Vec<usize> = (0..d).filter(|&c| mask & (1 << c) != 0).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..d).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = values.len().pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows: Vec<Vec<CycNum>> = pivots
                .iter()
                .map(|&p| (0..d).map(|c| if c == p { one.clone() } else { zero.clone() }).collect())
                .collect();
            for &(r, c) in &free {
                rows[r][c] = values[code % values.len()].clone();
                code /= values.len();
            }
            out.push(rows);
        }
    }
    out
}

/// Brute force: the largest totally isotropic subspace of the form
/// `⊕ W_λ` with `W_λ` inside the eigenspace `λ`, where each `W_λ` has an
/// echelon basis (relative to the eigenspace basis) with entries in
/// `{0, ±1, ±i}`.
pub fn oracle_max_isotropic(gram: &CycMat, eigenspaces: &[Vec<Vec<CycNum>>]) -> usize {
    let f = CycField::new(edcheck_core::arith::lcm_u32(gram.field().conductor(), 4));
    let g = gram.embed(&f).unwrap();
    let values = vec![f.zero(), f.one(), f.int(-1), f.zeta_pow(1), f.zeta_pow(3)];
    let spaces: Vec<Vec<Vec<CycNum>>> = eigenspaces
        .iter()
        .map(|basis| basis.iter().map(|v| v.iter().map(|c| c.embed(&f).unwrap()).collect()).collect())
        .collect();
    let choices: Vec<Vec<Vec<Vec<CycNum>>>> = spaces
        .iter()
        .map(|basis| {
            echelon_subspaces(basis.len(), &values)
                .into_iter()
                .map(|rows| {
                    rows.iter()
                        .map(|coef| {
                            (0..g.rows())
                                .map(|k| {
                                    coef.iter()
                                        .zip(basis)
                                        .fold(f.zero(), |acc, (c, b)| &acc + &(c * &b[k]))
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut best = 0;
    let mut idx = vec![0usize; choices.len()];
    loop {
        let vectors: Vec<&Vec<CycNum>> = idx.iter().zip(&choices).flat_map(|(&i, c)| c[i].iter()).collect();
        if vectors.len() > best
            && vectors
                .iter()
                .enumerate()
                .all(|(i, u)| vectors[i..].iter().all(|v| bilinear(&g, u, v).is_zero()))
        {
            best = vectors.len();
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return best;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub struct Instance {
    pub group: Arc<MatrixGroup>,
    pub field: Arc<CycField>,
    pub exps: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    expected: usize,
}

pub fn standard_eigenspaces(field: &Arc<CycField>, exps: &[Vec<i64>]) -> Vec<Vec<Vec<CycNum>>> {
    let d = exps[0].len();
    let mut keys: Vec<Vec<i64>> = (0..d).map(|i| exps.iter().map(|e| e[i]).collect()).collect();
    keys.sort();
    keys.dedup();
    keys.iter()
        .map(|key| {
            (0..d)
                .filter(|&i| exps.iter().map(|e| e[i]).collect::<Vec<_>>() == *key)
                .map(|i| (0..d).map(|k| if k == i { field.one() } else { field.zero() }).collect())
                .collect()
        })
        .collect()
}

pub fn instances() -> Vec<Instance> {
    let trivial = cyclic_group(3, 1);
    let c4 = cyclic_group(5, 2);
    let c3 = cyclic_group(7, 2);
    let v4 = klein_four();
    vec![
        Instance {
            group: trivial.clone(),
            field: CycField::new(1),
            exps: vec![vec![0, 0]],
            gram: vec![vec![0, 1], vec![1, 0]],
            expected: 1,
        },
        Instance {
            group: trivial,
            field: CycField::new(1),
            exps: vec![vec![0, 0]],
            gram: vec![vec![1, 0], vec![0, 1]],
            expected: 1,
        },
        Instance {
            group: c4.clone(),
            field: CycField::new(4),
            exps: vec![vec![1, 3]],
            gram: vec![vec![0, 1], vec![1, 0]],
            expected: 1,
        },
        Instance {
            group: c4,
            field: CycField::new(4),
            exps: vec![vec![0, 1, 0, 3, 2]],
            gram: vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 0, 0, 2, 0],
                vec![0, 0, -1, 0, 0],
                vec![0, 2, 0, 0, 0],
                vec![0, 0, 0, 0, 3],
            ],
            expected: 2,
        },
        Instance {
            group: c3,
            field: CycField::new(3),
            exps: vec![vec![0, 1, 1, 2, 2]],
            gram: vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, 1],
                vec![0, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 0],
            ],
            expected: 2,
        },
        Instance {
            group: v4,
            field: CycField::new(4),
            exps: vec![vec![0, 0, 0, 2, 2, 2], vec![0, 0, 0, 0, 0, 2]],
            gram: vec![
                vec![1, 1, 0, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 1],
            ],
            expected: 2,
        },
    ]
}


/// Runs every instance through `max_invariant_isotropic` and the brute-force
/// oracle; returns the number of instances that agree.
pub fn check_instances() -> Result<usize, String> {
    let all = instances();
    for (n, inst) in all.iter().enumerate() {
        let rep = diagonal_rep(&inst.group, &inst.field, &inst.exps);
        let rows: Vec<&[i64]> = inst.gram.iter().map(|r| r.as_slice()).collect();
        let form = gram(&inst.field, &rows);
        if !form.is_nondegenerate() {
            return Err(format!("instance {n}: degenerate form"));
        }
        for op in rep.generator_images() {
            if op.transpose().mul(&form.gram).mul(&op) != form.gram {
                return Err(format!("instance {n}: form is not invariant"));
            }
        }
        let a = Subgroup::whole(&inst.group);
        let dec = restrict_decompose(&rep, &a).map_err(|e| e.to_string())?;
        let cert = max_invariant_isotropic(&dec, &form).map_err(|e| e.to_string())?;
        let oracle = oracle_max_isotropic(&form.gram, &standard_eigenspaces(&inst.field, &inst.exps));
        if cert.max_dim != inst.expected || oracle != cert.max_dim {
            return Err(format!(
                "instance {n}: expected {}, certificate {}, oracle {oracle}",
                inst.expected, cert.max_dim
            ));
        }
        if !cert.witness_is_maximal() || !witness_is_valid(&rep, &a, &cert.witness, &form.gram) {
            return Err(format!("instance {n}: invalid witness"));
        }
    }
    Ok(all.len())
}
