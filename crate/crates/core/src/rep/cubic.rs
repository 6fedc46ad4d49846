use alloc::collections::{btree_map, BTreeMap};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::character::trivial_multiplicity;
use super::{RepError, Representation};
use crate::arith::{CycField, CycNum, Rat};
use crate::linalg::{CycMat, Subspace};

/// Degree-3 monomials `x_i·x_j·x_k` with `i ≤ j ≤ k`, in lexicographic order.
pub fn cubic_monomials(vars: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..vars {
        for j in i..vars {
            for k in j..vars {
                out.push([i, j, k]);
            }
        }
    }
    out
}

fn quadratic_monomials(vars: usize) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    for i in 0..vars {
        for j in i..vars {
            out.push([i, j]);
        }
    }
    out
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut m = [a, b, c];
    m.sort_unstable();
    m
}

/// A homogeneous cubic polynomial over Q(ζ_n), in the basis [`cubic_monomials`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicForm {
    vars: usize,
    coeffs: Vec<CycNum>,
}

impl CubicForm {
    pub fn new(vars: usize, coeffs: Vec<CycNum>) -> CubicForm {
        assert_eq!(coeffs.len(), cubic_monomials(vars).len(), "one coefficient per monomial");
        CubicForm { vars, coeffs }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.coeffs[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn evaluate(&self, x: &[CycNum]) -> CycNum {
        assert_eq!(x.len(), self.vars, "one value per variable");
        let field = x[0].field();
        let mut acc = field.zero();
        for (m, c) in cubic_monomials(self.vars).iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let c = c.embed(field).expect("point field contains the coefficients");
            acc = &acc + &(&(&c * &x[m[0]]) * &(&x[m[1]] * &x[m[2]]));
        }
        acc
    }

    /// `y ↦ f(M·y)` for a `vars × k` matrix `M`.
    pub fn substitute(&self, m: &CycMat) -> CubicForm {
        assert_eq!(m.rows(), self.vars, "substitution matrix has one row per variable");
        let s = sym3_operator(m);
        let c = CycMat::from_fn(s.field(), self.coeffs.len(), 1, |i, _| {
            self.coeffs[i].embed(s.field()).expect("substitution field contains the coefficients")
        });
        CubicForm::new(m.cols(), s.mul(&c).col(0))
    }

    /// The form restricted to a subspace, in the coordinates of its echelon basis.
    pub fn restrict_to(&self, s: &Subspace) -> CubicForm {
        self.substitute(&s.basis().transpose())
    }

    /// Scaled so the first nonzero coefficient is 1.
    pub fn normalized(&self) -> CubicForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().expect("nonzero");
                CubicForm::new(self.vars, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Whether `f(ρx) = c·f(x)` for some scalar `c`.
    pub fn is_semi_invariant(&self, op: &CycMat) -> bool {
        let g = self.substitute(op);
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            None => true,
            Some(i) => {
                let ratio = &g.coeffs[i] * &self.coeffs[i].inv().expect("nonzero");
                self.coeffs.iter().zip(&g.coeffs).all(|(a, b)| &(a * &ratio) == b)
            }
        }
    }

    /// Text form such as `x0^2*x1 + (1 + 2*z)*x2^3`.
    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for (m, c) in cubic_monomials(self.vars).iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for &v in m {
                *counts.entry(v).or_default() += 1;
            }
            let mono: Vec<String> = counts
                .iter()
                .map(|(&v, &e)| if e == 1 { alloc::format!("x{v}") } else { alloc::format!("x{v}^{e}") })
                .collect();
            let mono = mono.join("*");
            let coeff = match c.as_rational() {
                Some(r) if r.is_one() => String::new(),
                Some(r) => alloc::format!("{r}*"),
                None => alloc::format!("({c})*"),
            };
            terms.push(alloc::format!("{coeff}{mono}"));
        }
        if terms.is_empty() {
            String::from("0")
        } else {
            terms.join(" + ")
        }
    }
}

/// Matrix of `f ↦ f∘M` on cubic forms, for `M` of size `d × k`: column `m`
/// holds the coefficients (over monomials in `k` variables) of the monomial
/// `m` (in `d` variables) evaluated at `M·y`.
pub fn sym3_operator(m: &CycMat) -> CycMat {
    sym3_integral(m).unwrap_or_else(|| sym3_generic(m))
}

fn sym3_generic(m: &CycMat) -> CycMat {
    let field = m.field();
    let (d, k) = (m.rows(), m.cols());
    let in_mons = cubic_monomials(d);
    let out_mons = cubic_monomials(k);
    let out_index: BTreeMap<[usize; 3], usize> = out_mons.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let quads = quadratic_monomials(k);
    let mut s = CycMat::zeros(field, out_mons.len(), in_mons.len());
    let mut quad_cache: BTreeMap<(usize, usize), Vec<CycNum>> = BTreeMap::new();
    for (col, mono) in in_mons.iter().enumerate() {
        let (i, j, l) = (mono[0], mono[1], mono[2]);
        let q = quad_cache.entry((i, j)).or_insert_with(|| {
            let mut q: Vec<CycNum> = quads.iter().map(|_| field.zero()).collect();
            for a in 0..k {
                for b in 0..k {
                    if m.entry_is_zero(i, a) || m.entry_is_zero(j, b) {
                        continue;
                    }
                    let idx = quads.iter().position(|x| *x == [a.min(b), a.max(b)]).expect("quadratic monomial");
                    q[idx] = &q[idx] + &(&m.get(i, a) * &m.get(j, b));
                }
            }
            q
        });
        let mut out: Vec<CycNum> = out_mons.iter().map(|_| field.zero()).collect();
        for (qi, qm) in quads.iter().enumerate() {
            if q[qi].is_zero() {
                continue;
            }
            for c in 0..k {
                if m.entry_is_zero(l, c) {
                    continue;
                }
                let idx = out_index[&sorted3(qm[0], qm[1], c)];
                out[idx] = &out[idx] + &(&q[qi] * &m.get(l, c));
            }
        }
        for (row, v) in out.iter().enumerate() {
            if !v.is_zero() {
                s.set(row, col, v);
            }
        }
    }
    s
}

fn sym3_integral(m: &CycMat) -> Option<CycMat> {
    let field = m.field();
    let phi = field.degree();
    let (d, k) = (m.rows(), m.cols());
    let (nums, den) = m.integral_form()?;
    let den3 = (den as i128).checked_pow(3)?;
    let entry = |i: usize, a: usize| -> Vec<i128> {
        let start = (i * k + a) * phi;
        nums[start..start + phi].iter().map(|&x| x as i128).collect()
    };
    let lin: Vec<Vec<Vec<i128>>> = (0..d).map(|i| (0..k).map(|a| entry(i, a)).collect()).collect();
    let nz = |v: &[i128]| v.iter().any(|&x| x != 0);
    let in_mons = cubic_monomials(d);
    let out_mons = cubic_monomials(k);
    let out_index: BTreeMap<[usize; 3], usize> = out_mons.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let quads = quadratic_monomials(k);
    let quad_index: BTreeMap<[usize; 2], usize> = quads.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut prod = alloc::vec![0i128; phi];
    let mut quad_cache: BTreeMap<(usize, usize), Vec<Vec<i128>>> = BTreeMap::new();
    let mut s = CycMat::zeros(field, out_mons.len(), in_mons.len());
    for (col, mono) in in_mons.iter().enumerate() {
        let (i, j, l) = (mono[0], mono[1], mono[2]);
        if let btree_map::Entry::Vacant(vacant) = quad_cache.entry((i, j)) {
            let mut q = alloc::vec![alloc::vec![0i128; phi]; quads.len()];
            for a in 0..k {
                for b in 0..k {
                    if !nz(&lin[i][a]) || !nz(&lin[j][b]) {
                        continue;
                    }
                    field.mul_i128(&lin[i][a], &lin[j][b], &mut prod)?;
                    let slot = &mut q[quad_index[&[a.min(b), a.max(b)]]];
                    for (x, y) in slot.iter_mut().zip(&prod) {
                        *x = x.checked_add(*y)?;
                    }
                }
            }
            vacant.insert(q);
        }
        let q = &quad_cache[&(i, j)];
        let mut out = alloc::vec![alloc::vec![0i128; phi]; out_mons.len()];
        for (qi, qm) in quads.iter().enumerate() {
            if !nz(&q[qi]) {
                continue;
            }
            for c in 0..k {
                if !nz(&lin[l][c]) {
                    continue;
                }
                field.mul_i128(&q[qi], &lin[l][c], &mut prod)?;
                let slot = &mut out[out_index[&sorted3(qm[0], qm[1], c)]];
                for (x, y) in slot.iter_mut().zip(&prod) {
                    *x = x.checked_add(*y)?;
                }
            }
        }
        for (row, v) in out.iter().enumerate() {
            if nz(v) {
                let coeffs = v.iter().map(|&x| Rat::from_i128(x, den3)).collect();
                s.set(row, col, &field.from_coords(coeffs));
            }
        }
    }
    Some(s)
}

/// Invariant cubic forms of a representation.
#[derive(Clone, Debug)]
pub struct InvariantCubics {
    /// Echelon basis of the invariant subspace of cubic forms.
    pub basis: Vec<CubicForm>,
    /// ⟨Sym³χ, 1⟩ from the character.
    pub character_multiplicity: usize,
}

/// Invariant cubics `f(ρ(g)x) = f(x)`, as the image of the Reynolds average
/// of the substitution operators, cross-checked against ⟨Sym³χ, 1⟩.
pub fn invariant_cubics(rep: &Representation) -> Result<InvariantCubics, RepError> {
    let d = rep.dim();
    if d > 6 {
        return Err(RepError::TooManyVariables(d));
    }
    let character_multiplicity = trivial_multiplicity(&rep.character().sym3())?;
    let size = cubic_monomials(d).len();
    let mut sum = CycMat::zeros(rep.field(), size, size);
    let one = rep.field().one();
    for g in 0..rep.group().order() {
        sum.add_scaled(&one, &sym3_operator(rep.op(g)));
    }
    let reynolds = sum.scale_rat(&Rat::new(1, rep.group().order() as i64));
    let image = Subspace::column_space(&reynolds);
    if image.dim() != character_multiplicity {
        return Err(RepError::MultiplicityMismatch {
            character: character_multiplicity,
            reynolds: image.dim(),
        });
    }
    let basis: Vec<CubicForm> = image.vectors().into_iter().map(|v| CubicForm::new(d, v)).collect();
    for f in &basis {
        for op in rep.generator_images() {
            if f.substitute(&op) != *f {
                return Err(RepError::NotInvariant);
            }
        }
    }
    Ok(InvariantCubics {
        basis,
        character_multiplicity,
    })
}
