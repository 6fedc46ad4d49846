use std::path::Path;
use std::sync::{Arc, OnceLock};

use anyhow::{bail, Context as _, Result};
use edcheck_core::group::{abelian_subgroup_census, named, unipotent_subgroup_sl2, AbelianClass, Normalization};
use edcheck_core::models::{principal_series_sl2_8, weil_sl2, weil_sp4_f3, WeilSplit};
use edcheck_core::obstruction::{ry_obstruction, ActionSpace, ObstructionReport, RyScenario};
use edcheck_core::rep::{invariant_cubics, invariant_symmetric_form, GramForm, InvariantCubics};
use edcheck_core::{FiniteField, FqMat, MatrixGroup, Representation};

use crate::cache::{self, GroupCache};

fn get_or_try<T>(cell: &OnceLock<T>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = init()?;
    Ok(cell.get_or_init(|| v))
}

/// Every object the scenarios share, computed at most once.
#[derive(Default)]
pub struct Context {
    cache: Option<GroupCache>,
    sl2_8: OnceLock<Arc<MatrixGroup>>,
    sp4: OnceLock<Arc<MatrixGroup>>,
    psp4: OnceLock<Arc<MatrixGroup>>,
    sl2_11: OnceLock<Arc<MatrixGroup>>,
    psl2_11: OnceLock<Arc<MatrixGroup>>,
    sp4_weil: OnceLock<WeilSplit>,
    w_plus: OnceLock<Representation>,
    sl2_11_weil: OnceLock<WeilSplit>,
    v5: OnceLock<Representation>,
    u: OnceLock<Representation>,
    u_form: OnceLock<GramForm>,
    cubics: OnceLock<InvariantCubics>,
    census: OnceLock<Vec<AbelianClass>>,
    sl28_obstruction: OnceLock<ObstructionReport>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn with_cache(dir: &Path) -> Result<Context> {
        Ok(Context {
            cache: Some(GroupCache::open(dir)?),
            ..Context::default()
        })
    }

    fn closure(&self, gens: &[FqMat], norm: Normalization, cap: usize) -> Result<Arc<MatrixGroup>> {
        Ok(Arc::new(cache::closure(self.cache.as_ref(), gens, norm, cap)?))
    }

    /// The quotient by `{±I}`, after checking that this is the whole scalar subgroup.
    fn central_quotient(&self, g: &MatrixGroup, cap: usize) -> Result<Arc<MatrixGroup>> {
        let scalars = g.scalar_elements();
        let minus_one = g.field().neg(1);
        if scalars.len() != 2 || g.element(scalars[1]).scalar_value() != Some(minus_one) {
            bail!("scalar subgroup of {} is not {{I, -I}}", g.field());
        }
        self.closure(g.generators(), Normalization::ModSign, cap)
    }

    pub fn sl2_8(&self) -> Result<&Arc<MatrixGroup>> {
        get_or_try(&self.sl2_8, || {
            self.closure(&named::sl2_generators(FiniteField::f8()), Normalization::Matrix, named::SL2_CAP)
        })
    }

    pub fn sp4(&self) -> Result<&Arc<MatrixGroup>> {
        get_or_try(&self.sp4, || {
            self.closure(&named::sp4_f3_generators(), Normalization::Matrix, named::SP4_CAP)
        })
    }

    pub fn psp4(&self) -> Result<&Arc<MatrixGroup>> {
        get_or_try(&self.psp4, || self.central_quotient(self.sp4()?, named::SP4_CAP))
    }

    pub fn sl2_11(&self) -> Result<&Arc<MatrixGroup>> {
        get_or_try(&self.sl2_11, || {
            let f = FiniteField::prime(11).context("F11")?;
            self.closure(&named::sl2_generators(f), Normalization::Matrix, named::SL2_CAP)
        })
    }

    pub fn psl2_11(&self) -> Result<&Arc<MatrixGroup>> {
        get_or_try(&self.psl2_11, || self.central_quotient(self.sl2_11()?, named::SL2_CAP))
    }

    pub fn sp4_weil(&self) -> Result<&WeilSplit> {
        get_or_try(&self.sp4_weil, || Ok(weil_sp4_f3(self.sp4()?)?))
    }

    /// W⁺ as a representation of PSp₄(F₃).
    pub fn w_plus(&self) -> Result<&Representation> {
        get_or_try(&self.w_plus, || {
            Ok(self.sp4_weil()?.even.descend(self.psp4()?, named::SP4_CAP)?)
        })
    }

    pub fn sl2_11_weil(&self) -> Result<&WeilSplit> {
        get_or_try(&self.sl2_11_weil, || Ok(weil_sl2(self.sl2_11()?)?))
    }

    /// The odd Weil part as a representation of PSL₂(F₁₁).
    pub fn v5(&self) -> Result<&Representation> {
        get_or_try(&self.v5, || {
            Ok(self.sl2_11_weil()?.odd.descend(self.psl2_11()?, named::SL2_CAP)?)
        })
    }

    /// The principal series U of SL₂(F₈) induced from the character `t ↦ ζ₇` of the torus.
    pub fn u(&self) -> Result<&Representation> {
        get_or_try(&self.u, || Ok(principal_series_sl2_8(self.sl2_8()?, 1)?.rep))
    }

    pub fn u_form(&self) -> Result<&GramForm> {
        get_or_try(&self.u_form, || {
            invariant_symmetric_form(self.u()?)?.context("U carries no invariant symmetric form")
        })
    }

    pub fn cubics(&self) -> Result<&InvariantCubics> {
        get_or_try(&self.cubics, || Ok(invariant_cubics(self.v5()?)?))
    }

    pub fn census(&self) -> Result<&Vec<AbelianClass>> {
        get_or_try(&self.census, || Ok(abelian_subgroup_census(self.psl2_11()?)))
    }

    /// The fixed-point criterion for N acting on isotropic 4-planes of U.
    pub fn sl28_obstruction(&self) -> Result<&ObstructionReport> {
        get_or_try(&self.sl28_obstruction, || {
            let n = unipotent_subgroup_sl2(self.sl2_8()?)?;
            Ok(ry_obstruction(&RyScenario {
                group_name: "SL2(F8)".into(),
                action: ActionSpace::IsotropicGrassmannian { rep: self.u()?, k: 4 },
                subgroups: vec![("N".into(), n)],
            })?)
        })
    }
}
