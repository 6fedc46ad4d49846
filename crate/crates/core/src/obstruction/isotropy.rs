use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{decompose, ObstructionError};
use crate::arith::{lcm_u32, CycField, CycNum};
use crate::group::Subgroup;
use crate::linalg::{bilinear, restrict_form, CycMat, Subspace};
use crate::rep::{invariant_symmetric_form, GramForm, IsotypicDecomposition, Representation};

/// A class of characters under `λ ↦ λ⁻¹`, with the dimension of each member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairClass {
    SelfInverse { label: Vec<u64>, dim: usize },
    InversePair { label: Vec<u64>, inverse: Vec<u64>, dim: usize },
}

impl PairClass {
    /// Largest invariant isotropic subspace supported on this class.
    pub fn contribution(&self) -> usize {
        match self {
            PairClass::SelfInverse { dim, .. } => dim / 2,
            PairClass::InversePair { dim, .. } => *dim,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IsotropyCertificate {
    pub classes: Vec<PairClass>,
    /// Number of Gram blocks `(C_α, C_β)` with `αβ ≠ 1` checked to be zero.
    pub zero_blocks_checked: usize,
    pub max_dim: usize,
    /// Eigenvectors spanning the witness, each tagged with its character.
    pub witness_vectors: Vec<(Vec<u64>, Vec<CycNum>)>,
    /// An invariant totally isotropic subspace; of dimension `max_dim`
    /// unless [`IsotropyCertificate::witness_is_maximal`] is false.
    pub witness: Subspace,
}

impl IsotropyCertificate {
    pub fn field(&self) -> &Arc<CycField> {
        self.witness.field()
    }

    /// Whether the witness attains `max_dim`. It can fall short only when an
    /// isotropic vector needs a square root outside `Q(ζ_lcm(n,4))`.
    pub fn witness_is_maximal(&self) -> bool {
        self.witness.dim() == self.max_dim
    }

    /// An invariant isotropic subspace of dimension `k`, spanned by the first
    /// `k` witness eigenvectors.
    pub fn isotropic_subspace(&self, k: usize) -> Option<Subspace> {
        if k > self.witness_vectors.len() {
            return None;
        }
        let vectors: Vec<Vec<CycNum>> = self.witness_vectors[..k].iter().map(|(_, v)| v.clone()).collect();
        Some(Subspace::span(self.field(), self.witness.ambient_dim(), &vectors))
    }
}

/// Square root inside the field of `x`, of the form `ζ^j·s` with `s` rational.
fn sqrt_in_field(x: &CycNum) -> Option<CycNum> {
    let field = x.field();
    if x.is_zero() {
        return Some(field.zero());
    }
    let n = field.conductor() as i64;
    for j in 0..n.max(1) {
        let y = x * &field.zeta_pow(-2 * j);
        if let Some(s) = y.as_rational().and_then(|r| r.sqrt_exact()) {
            return Some(&field.zeta_pow(j) * &field.rational(s));
        }
    }
    None
}

fn axpy(a: &CycNum, x: &[CycNum], y: &[CycNum]) -> Vec<CycNum> {
    y.iter().zip(x).map(|(yi, xi)| yi + &(a * xi)).collect()
}

fn is_zero_vec(v: &[CycNum]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// An isotropic vector in the span of `space`.
///
/// Tries, in order: a spanning vector that is already isotropic, completion
/// of squares, and 2-planes spanned by pairs of candidate vectors whose
/// discriminant `B(x,y)² - B(x,x)·B(y,y)` has a square root in the field.
fn isotropic_vector(gram: &CycMat, space: &[Vec<CycNum>]) -> Option<Vec<CycNum>> {
    if let Some(u) = space.iter().find(|u| bilinear(gram, u, u).is_zero()) {
        return Some(u.clone());
    }
    let mut ortho: Vec<(Vec<CycNum>, CycNum)> = Vec::new();
    for u in space {
        let mut w = u.clone();
        for (o, d) in &ortho {
            let c = -(&bilinear(gram, &w, o) * &d.inv().expect("anisotropic"));
            w = axpy(&c, o, &w);
        }
        if is_zero_vec(&w) {
            continue;
        }
        let d = bilinear(gram, &w, &w);
        if d.is_zero() {
            return Some(w);
        }
        ortho.push((w, d));
    }
    let one = gram.field().one();
    let mut pool: Vec<Vec<CycNum>> = ortho.iter().map(|(o, _)| o.clone()).collect();
    pool.extend(space.iter().cloned());
    for i in 0..space.len() {
        for j in i + 1..space.len() {
            pool.push(axpy(&one, &space[j], &space[i]));
            pool.push(axpy(&-&one, &space[j], &space[i]));
        }
    }
    let norms: Vec<CycNum> = pool.iter().map(|x| bilinear(gram, x, x)).collect();
    for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            let (x, y) = (&pool[i], &pool[j]);
            let bxy = bilinear(gram, x, y);
            let disc = &(&bxy * &bxy) - &(&norms[i] * &norms[j]);
            if disc.is_zero() {
                continue;
            }
            if let Some(r) = sqrt_in_field(&disc) {
                let t = &(&r - &bxy) * &norms[j].inv().expect("anisotropic");
                let v = axpy(&t, y, x);
                if !is_zero_vec(&v) {
                    debug_assert!(bilinear(gram, &v, &v).is_zero());
                    return Some(v);
                }
            }
        }
    }
    None
}

/// Pairwise orthogonal isotropic vectors in the span of the `m` vectors
/// `space`, on which `gram` is non-degenerate: `⌊m/2⌋` of them unless an
/// isotropic vector cannot be found in the field.
fn maximal_isotropic(gram: &CycMat, space: &[Vec<CycNum>]) -> Vec<Vec<CycNum>> {
    let mut space = space.to_vec();
    let mut out = Vec::new();
    while space.len() >= 2 {
        let Some(v) = isotropic_vector(gram, &space) else {
            break;
        };
        let w = space
            .iter()
            .find(|u| !bilinear(gram, &v, u).is_zero())
            .expect("non-degenerate")
            .clone();
        let h_inv = bilinear(gram, &v, &w).inv().expect("nonzero");
        let c = bilinear(gram, &w, &w);
        let mut rest = Vec::new();
        for u in &space {
            let b = &bilinear(gram, u, &v) * &h_inv;
            let a = &(&bilinear(gram, u, &w) - &(&b * &c)) * &h_inv;
            let u = axpy(&-&b, &w, &axpy(&-&a, &v, u));
            rest.push(u);
        }
        space = Subspace::span(gram.field(), gram.rows(), &rest).vectors();
        out.push(v);
    }
    out
}

fn embed_vecs(vs: &[Vec<CycNum>], field: &Arc<CycField>) -> Vec<Vec<CycNum>> {
    vs.iter()
        .map(|v| v.iter().map(|c| c.embed(field).expect("field extension")).collect())
        .collect()
}

fn witness_over(
    field: &Arc<CycField>,
    gram: &CycMat,
    dec: &IsotypicDecomposition,
    classes: &[PairClass],
) -> Vec<(Vec<u64>, Vec<CycNum>)> {
    let gram = gram.embed(field).expect("field extension");
    let mut out = Vec::new();
    for class in classes {
        match class {
            PairClass::InversePair { label, .. } => {
                let c = dec.component(label).expect("listed component");
                for v in embed_vecs(&c.subspace.vectors(), field) {
                    out.push((label.clone(), v));
                }
            }
            PairClass::SelfInverse { label, .. } => {
                let c = dec.component(label).expect("listed component");
                let basis = embed_vecs(&c.subspace.vectors(), field);
                for v in maximal_isotropic(&gram, &basis) {
                    out.push((label.clone(), v));
                }
            }
        }
    }
    out
}

/// Largest `A`-invariant totally isotropic subspace for an invariant
/// non-degenerate symmetric form, with an explicit witness.
///
/// Checks that `gram(C_α, C_β) = 0` whenever `αβ ≠ 1`, that the form is
/// non-degenerate on every self-inverse component and on every inverse pair,
/// and that the witness is isotropic and a sum of eigenvectors. Witnesses in a
/// self-inverse component may need a square root; the field is extended to
/// `lcm(n, 4)` when one is missing. The maximum itself is the dimension over
/// C and does not depend on the witness search.
pub fn max_invariant_isotropic(
    dec: &IsotypicDecomposition,
    form: &GramForm,
) -> Result<IsotropyCertificate, ObstructionError> {
    let field = dec.field();
    let comps = dec.components();
    let d = comps.first().map_or(0, |c| c.subspace.ambient_dim());
    if form.gram.rows() != d {
        return Err(ObstructionError::DimensionMismatch);
    }
    let gram = form.gram.embed(field).map_err(|_| ObstructionError::DimensionMismatch)?;

    let mut zero_blocks_checked = 0;
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i..] {
            if a.dim == 0 || b.dim == 0 || dec.dual_label(&a.label) == b.label {
                continue;
            }
            let block = a.subspace.basis().mul(&gram).mul(&b.subspace.basis().transpose());
            if !block.is_zero() {
                return Err(ObstructionError::NonzeroPairingBlock(a.label.clone(), b.label.clone()));
            }
            zero_blocks_checked += 1;
        }
    }

    let mut classes = Vec::new();
    for c in comps {
        let dual = dec.dual_label(&c.label);
        if dual == c.label {
            if c.dim == 0 {
                continue;
            }
            if restrict_form(&gram, &c.subspace).expect("dimensions agree").rank() != c.dim {
                return Err(ObstructionError::DegenerateComponent(c.label.clone()));
            }
            classes.push(PairClass::SelfInverse {
                label: c.label.clone(),
                dim: c.dim,
            });
        } else if c.label < dual {
            let other = dec.component(&dual).expect("dual character is listed");
            if c.dim == 0 && other.dim == 0 {
                continue;
            }
            let block = c.subspace.basis().mul(&gram).mul(&other.subspace.basis().transpose());
            if c.dim != other.dim || block.rank() != c.dim {
                return Err(ObstructionError::DegeneratePairing(c.label.clone()));
            }
            classes.push(PairClass::InversePair {
                label: c.label.clone(),
                inverse: dual,
                dim: c.dim,
            });
        }
    }
    let max_dim = classes.iter().map(PairClass::contribution).sum();

    let mut witness_vectors = witness_over(field, &gram, dec, &classes);
    let mut wfield = Arc::clone(field);
    let extended = CycField::new(lcm_u32(field.conductor(), 4));
    if witness_vectors.len() < max_dim && extended.conductor() != field.conductor() {
        let w = witness_over(&extended, &gram, dec, &classes);
        if w.len() > witness_vectors.len() {
            witness_vectors = w;
            wfield = extended;
        }
    }

    let vectors: Vec<Vec<CycNum>> = witness_vectors.iter().map(|(_, v)| v.clone()).collect();
    let witness = Subspace::span(&wfield, d, &vectors);
    let wgram = gram.embed(&wfield).expect("field extension");
    let valid = witness.dim() == witness_vectors.len()
        && restrict_form(&wgram, &witness).expect("dimensions agree").is_zero()
        && witness_vectors.iter().all(|(label, v)| {
            let p = dec.component(label).expect("listed").projector.embed(&wfield).expect("field extension");
            p.mul_vec(v) == *v
        });
    if !valid {
        return Err(ObstructionError::WitnessInvalid);
    }
    Ok(IsotropyCertificate {
        classes,
        zero_blocks_checked,
        max_dim,
        witness_vectors,
        witness,
    })
}

/// Answer to "does `A` fix a point of the Grassmannian of isotropic
/// `k`-planes?", with the certificate it was read from.
#[derive(Clone, Debug)]
pub struct OgrVerdict {
    pub k: usize,
    pub exists: bool,
    pub form: GramForm,
    pub decomposition: IsotypicDecomposition,
    pub certificate: IsotropyCertificate,
}

impl OgrVerdict {
    /// An invariant isotropic `k`-subspace when one exists.
    pub fn fixed_point(&self) -> Option<Subspace> {
        self.certificate.isotropic_subspace(self.k)
    }
}

/// A fixed point of `a` on the isotropic Grassmannian `G_iso(k, V)` is an
/// `a`-invariant totally isotropic `k`-subspace, so it exists iff
/// `max_invariant_isotropic ≥ k`.
pub fn ogr_fixed_point_exists(rep: &Representation, a: &Subgroup, k: usize) -> Result<OgrVerdict, ObstructionError> {
    let form = invariant_symmetric_form(rep)?.ok_or(ObstructionError::NoInvariantForm)?;
    if !form.is_nondegenerate() {
        return Err(ObstructionError::DegenerateForm);
    }
    let decomposition = decompose(rep, a)?;
    let certificate = max_invariant_isotropic(&decomposition, &form)?;
    Ok(OgrVerdict {
        k,
        exists: k <= certificate.max_dim,
        form,
        decomposition,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    #[test]
    fn square_roots_up_to_roots_of_unity() {
        let f = CycField::new(3);
        let x = &f.zeta_pow(1) * &f.int(4);
        let s = sqrt_in_field(&x).unwrap();
        assert_eq!(&s * &s, x);
        assert!(sqrt_in_field(&f.int(2)).is_none());
        assert!(sqrt_in_field(&f.int(-1)).is_none());
        assert_eq!(sqrt_in_field(&f.int(-3)).map(|s| &s * &s), None);
        let i = sqrt_in_field(&CycField::new(12).int(-1)).unwrap();
        assert_eq!(&i * &i, CycField::new(12).int(-1));
        let q = CycField::new(4).rational(Rat::new(-9, 4));
        let s = sqrt_in_field(&q).unwrap();
        assert_eq!(&s * &s, q);
    }

    #[test]
    fn sum_of_squares_needs_i() {
        let f = CycField::new(1);
        let gram = CycMat::identity(&f, 2);
        let space = alloc::vec![alloc::vec![f.one(), f.zero()], alloc::vec![f.zero(), f.one()]];
        assert!(maximal_isotropic(&gram, &space).is_empty());
        let g = CycField::new(4);
        let out = maximal_isotropic(&gram.embed(&g).unwrap(), &embed_vecs(&space, &g));
        assert_eq!(out.len(), 1);
        assert!(bilinear(&gram.embed(&g).unwrap(), &out[0], &out[0]).is_zero());
    }
}
