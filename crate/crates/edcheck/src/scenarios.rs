//! Named verification scenarios.
//!
//! Each runner recomputes its objects from a shared [`Context`] and turns them
//! into checks of the form (label, expected, computed, claim).

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{Context as _, Result};
use edcheck_core::group::{find_elementary_abelian_2, unipotent_subgroup_sl2, MatrixGroup};
use edcheck_core::linalg::restrict_form;
use edcheck_core::obstruction::{
    cited_constants, decompose, ed_bounds, hypersurface_fixed_point, ogr_fixed_point_exists, projective_fixed_locus,
    ry_obstruction, ActionSpace, EdFacts, ProjectiveRepFact, RyScenario,
};
use edcheck_core::rep::{fs_indicator, inner_product};
use edcheck_core::{CycMat, FqMat, Subgroup};

use crate::context::Context;
use crate::report::{Check, ScenarioReport, Status, Timing, Witness};

pub struct Scenario {
    pub name: &'static str,
    pub description: &'static str,
    pub claim: &'static str,
    runner: fn(&Context) -> Result<Outcome>,
}

#[derive(Default)]
struct Outcome {
    checks: Vec<Check>,
    witnesses: Vec<Witness>,
}

impl Outcome {
    fn check(&mut self, label: &str, expected: impl ToString, computed: impl ToString, claim: &str) {
        self.checks.push(Check {
            label: label.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            citation: claim.to_string(),
        });
    }

    fn witness(&mut self, label: &str, value: impl ToString) {
        self.witnesses.push(Witness {
            label: label.to_string(),
            value: value.to_string(),
        });
    }
}

pub const SCENARIOS: &[Scenario] = &[
    Scenario {
        name: "psp4-weil",
        description: "Weil representation of Sp4(F3), its even and odd parts, and W+ over PSp4(F3)",
        claim: "dim W+ = 5, dim W- = 4; -I acts trivially on W+ and as -Id on W-; W+ is a faithful representation of PSp4(F3)",
        runner: psp4_weil,
    },
    Scenario {
        name: "psp4-ed",
        description: "(Z/2)^4 inside PSp4(F3) and the resulting essential dimension",
        claim: "PSp4(F3) contains (Z/2)^4, so ed(PSp4(F3)) = 4",
        runner: psp4_ed,
    },
    Scenario {
        name: "sl28-principal-series",
        description: "the 9-dimensional principal series U of SL2(F8) and its invariant quadratic form",
        claim: "U is irreducible, chi_U(n) = 1 on N minus {1}, and carries a non-degenerate invariant quadratic form unique up to scalar",
        runner: sl28_principal_series,
    },
    Scenario {
        name: "sl28-ogr-obstruction",
        description: "N = unipotent radical of SL2(F8) acting on isotropic 4-planes of U",
        claim: "N has no fixed point on G_iso(4, U), so the action is not linearizable",
        runner: sl28_ogr_obstruction,
    },
    Scenario {
        name: "psl211-weil",
        description: "odd Weil part of SL2(F11), re-certified over PSL2(F11)",
        claim: "the odd Weil part of SL2(F11) factors through PSL2(F11) and has dimension 5",
        runner: psl211_weil,
    },
    Scenario {
        name: "psl211-klein-fixed-points",
        description: "the invariant cubic of the 5-dimensional representation and fixed points of abelian subgroups on it",
        claim: "a 2-Sylow subgroup of PSL2(F11) fixes a point of the Klein cubic; every abelian subgroup does, so the fixed-point criterion gives no obstruction",
        runner: psl211_klein_fixed_points,
    },
    Scenario {
        name: "psl211-census",
        description: "conjugacy classes of maximal abelian subgroups of PSL2(F11)",
        claim: "the abelian subgroups of PSL2(F11) are cyclic except the 2-Sylow subgroups, which are (Z/2)^2",
        runner: psl211_census,
    },
    Scenario {
        name: "ed-ledger",
        description: "essential-dimension bounds with their provenance",
        claim: "ed(PSp4(F3)) = 4; 4 <= ed(SL2(F8)) <= 6; ed(PSL2(F11)) is 3 or 4",
        runner: ed_ledger,
    },
];

pub const ALL: &str = "all";

pub fn find(name: &str) -> Option<&'static Scenario> {
    SCENARIOS.iter().find(|s| s.name == name)
}

pub fn names() -> Vec<&'static str> {
    SCENARIOS.iter().map(|s| s.name).chain([ALL]).collect()
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

impl Scenario {
    pub fn run(&self, ctx: &Context) -> ScenarioReport {
        let start = Instant::now();
        match (self.runner)(ctx) {
            Ok(o) => ScenarioReport::from_checks(self.name, o.checks, o.witnesses, elapsed_ms(start)),
            Err(e) => ScenarioReport::errored(self.name, format!("{e:#}"), elapsed_ms(start)),
        }
    }
}

/// Runs every scenario in order and merges the reports; labels are prefixed
/// with the scenario name.
pub fn run_all(ctx: &Context) -> ScenarioReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut witnesses = Vec::new();
    let mut errors = Vec::new();
    for s in SCENARIOS {
        let r = s.run(ctx);
        log::info!("{}: {} ({} ms)", s.name, r.status, r.timing.elapsed_ms);
        if let Some(e) = r.error {
            errors.push(format!("{}: {e}", s.name));
        }
        checks.extend(r.checks.into_iter().map(|mut c| {
            c.label = format!("{}: {}", s.name, c.label);
            c
        }));
        witnesses.extend(r.witnesses.into_iter().map(|mut w| {
            w.label = format!("{}: {}", s.name, w.label);
            w
        }));
    }
    let mut report = ScenarioReport::from_checks(ALL, checks, witnesses, elapsed_ms(start));
    if !errors.is_empty() {
        report.status = Status::Error;
        report.error = Some(errors.join("; "));
    }
    report.timing = Timing {
        elapsed_ms: elapsed_ms(start),
    };
    report
}

/// Runs `name`, or `None` when no such scenario exists.
pub fn run(name: &str, ctx: &Context) -> Option<ScenarioReport> {
    if name == ALL {
        return Some(run_all(ctx));
    }
    find(name).map(|s| s.run(ctx))
}

fn action_of(op: &CycMat) -> &'static str {
    if op.is_identity() {
        "identity"
    } else if op.neg().is_identity() {
        "-Id"
    } else {
        "other"
    }
}

fn render_fq(m: &FqMat) -> String {
    let f = m.field();
    let rows: Vec<String> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| f.render(m.get(i, j))).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

/// Members of a subgroup of scalar matrices, written as `I` and `-I`.
fn describe_scalars(g: &MatrixGroup, h: &Subgroup) -> String {
    let minus_one = g.field().neg(1);
    let names: Vec<String> = h
        .members()
        .map(|x| {
            let e = g.element(x);
            match e.scalar_value() {
                Some(1) => "I".to_string(),
                Some(c) if c == minus_one => "-I".to_string(),
                _ => render_fq(e),
            }
        })
        .collect();
    format!("{{{}}}", names.join(", "))
}

fn found(x: bool) -> &'static str {
    if x {
        "found"
    } else {
        "none"
    }
}

fn yes(x: bool) -> &'static str {
    if x {
        "yes"
    } else {
        "no"
    }
}

const SPOT_PAIRS: usize = 200;
const SPOT_SEED: u64 = 1;

fn psp4_weil(ctx: &Context) -> Result<Outcome> {
    let mut o = Outcome::default();
    let sp4 = ctx.sp4()?;
    let psp4 = ctx.psp4()?;
    let w = ctx.sp4_weil()?;
    let wplus = ctx.w_plus()?;
    let f3 = sp4.field();
    let minus_one = sp4
        .index_of(&FqMat::scalar(f3, 4, f3.neg(1)))
        .context("-I is not in Sp4(F3)")?;

    o.check("order of Sp4(F3)", 51840, sp4.order(), "|Sp4(F3)| = 51840");
    o.check("order of PSp4(F3)", 25920, psp4.order(), "|PSp4(F3)| = 25920");
    o.check(
        "graph-closure pairs certifying the Weil representation",
        51840,
        w.full.certificate().pairs,
        "the Weil representation is a homomorphism on all of Sp4(F3)",
    );
    o.check("dim W+", 5, w.even.dim(), "dim W+ = 5");
    o.check("dim W-", 4, w.odd.dim(), "dim W- = 4");
    o.check("action of -I on W+", "identity", action_of(w.even.op(minus_one)), "-I acts trivially on W+");
    o.check("action of -I on W-", "-Id", action_of(w.odd.op(minus_one)), "-I acts as -Id on W-");
    o.check(
        "graph-closure pairs certifying W+ over PSp4(F3)",
        25920,
        wplus.certificate().pairs,
        "W+ is a representation of PSp4(F3)",
    );
    o.check(
        "kernel order of PSp4(F3) on W+",
        1,
        wplus.kernel().order(),
        "W+ is a faithful representation of PSp4(F3)",
    );
    o.check(
        "random product spot-check failures (200 pairs, W)",
        0,
        w.full.spot_check(SPOT_PAIRS, SPOT_SEED),
        "the Weil representation is a homomorphism on all of Sp4(F3)",
    );
    o.witness("Fourier normalization", &w.normalization);
    o.witness("Fourier scalar", w.fourier_scalar.render());
    o.witness("scalar c with rho(-I) = c * parity", w.central_scalar.render());
    Ok(o)
}

fn psp4_ed(ctx: &Context) -> Result<Outcome> {
    let mut o = Outcome::default();
    let sp4 = ctx.sp4()?;
    let psp4 = ctx.psp4()?;
    let w = ctx.sp4_weil()?;
    let wplus = ctx.w_plus()?;
    let e4 = find_elementary_abelian_2(psp4, 4);
    o.check("(Z/2)^4 in PSp4(F3)", "found", found(e4.is_some()), "PSp4(F3) contains (Z/2)^4");
    if let Some(e) = &e4 {
        o.check("witness generators", 4, e.basis.len(), "PSp4(F3) contains (Z/2)^4");
        o.check("witness subgroup order", 16, e.subgroup.order(), "PSp4(F3) contains (Z/2)^4");
        let involutions = e.basis.iter().all(|&a| psp4.element_order(a) == 2);
        let commuting = e.basis.iter().all(|&a| e.basis.iter().all(|&b| psp4.commute(a, b)));
        o.check(
            "witness generators are commuting involutions",
            "yes",
            yes(involutions && commuting),
            "PSp4(F3) contains (Z/2)^4",
        );
        for (k, &a) in e.basis.iter().enumerate() {
            o.witness(&format!("(Z/2)^4 generator {}", k + 1), render_fq(psp4.element(a)));
        }
    }
    o.check(
        "projective kernel of W+ over Sp4(F3)",
        "{I, -I}",
        describe_scalars(sp4, &w.even.projective_kernel()),
        "W+ is a faithful representation of PSp4(F3)",
    );
    o.check(
        "projective kernel order of W+ over PSp4(F3)",
        1,
        wplus.projective_kernel().order(),
        "W+ is a faithful representation of PSp4(F3)",
    );
    let report = psp4_bounds(ctx)?;
    o.check("essential dimension of PSp4(F3)", "ed = 4", report.conclusion(), "ed(PSp4(F3)) = 4");
    for b in report.lower.iter().chain(&report.upper) {
        o.witness(&format!("bound {} ({})", b.value, b.provenance.as_str()), &b.detail);
    }
    Ok(o)
}

fn psp4_bounds(ctx: &Context) -> Result<edcheck_core::obstruction::EdBoundReport> {
    let psp4 = ctx.psp4()?;
    let wplus = ctx.w_plus()?;
    let e4 = find_elementary_abelian_2(psp4, 4).context("no (Z/2)^4 in PSp4(F3)")?;
    let facts = EdFacts {
        group_name: "PSp4(F3)".into(),
        elementary_abelian: vec![&e4],
        projective_reps: vec![ProjectiveRepFact {
            description: "W+".into(),
            dim: wplus.dim(),
            projective_kernel_order: wplus.projective_kernel().order(),
        }],
        ..Default::default()
    };
    Ok(ed_bounds(&facts)?)
}

fn sl28_principal_series(ctx: &Context) -> Result<Outcome> {
    let mut o = Outcome::default();
    let g = ctx.sl2_8()?;
    let u = ctx.u()?;
    let chi = u.character();
    let n = unipotent_subgroup_sl2(g)?;
    o.check("order of SL2(F8)", 504, g.order(), "|SL2(F8)| = 504");
    o.check("dim U", 9, u.dim(), "U is 9-dimensional");
    o.check(
        "graph-closure pairs certifying U",
        504,
        u.certificate().pairs,
        "U is a representation of SL2(F8)",
    );
    o.check("<chi_U, chi_U>", 1, inner_product(&chi, &chi)?, "U is irreducible");
    let values: Vec<String> = n
        .members()
        .filter(|&x| x != g.identity())
        .map(|x| chi.value(x).map(|v| v.to_string()).unwrap_or_default())
        .collect();
    o.check(
        "chi_U on the 7 nontrivial elements of N",
        ["1"; 7].join(" "),
        values.join(" "),
        "chi_U(n) = 1 for n in N, n != 1",
    );
    let fs = fs_indicator(&chi)?;
    o.check(
        "Frobenius-Schur indicator",
        "+1",
        format!("{fs:+}"),
        "U carries a non-degenerate invariant quadratic form",
    );
    let form = ctx.u_form()?;
    o.check(
        "invariant symmetric form is non-degenerate",
        "yes",
        yes(form.is_nondegenerate()),
        "U carries a non-degenerate invariant quadratic form",
    );
    o.check(
        "dimension of the space of invariant symmetric forms",
        1,
        form.space_dim,
        "the invariant quadratic form is unique up to a scalar",
    );
    let invariant = u.generator_images().iter().all(|r| r.transpose().mul(&form.gram).mul(r) == form.gram);
    o.check(
        "form is invariant under the generators",
        "yes",
        yes(invariant),
        "U carries a non-degenerate invariant quadratic form",
    );
    o.check(
        "random product spot-check failures (200 pairs, U)",
        0,
        u.spot_check(SPOT_PAIRS, SPOT_SEED),
        "U is a representation of SL2(F8)",
    );
    o.witness("field of definition", format!("Q(zeta_{})", u.field().conductor()));
    o.witness("invariant Gram matrix", form.gram.render());
    Ok(o)
}

fn sl28_ogr_obstruction(ctx: &Context) -> Result<Outcome> {
    let mut o = Outcome::default();
    let g = ctx.sl2_8()?;
    let u = ctx.u()?;
    let n = unipotent_subgroup_sl2(g)?;
    let verdict = ogr_fixed_point_exists(u, &n, 4)?;
    let dec = &verdict.decomposition;
    let cert = &verdict.certificate;

    o.check("order of N", 8, n.order(), "N is isomorphic to (Z/2)^3");
    let trivial_label = vec![0u64; dec.structure().orders().len()];
    let trivial_dim = dec.component(&trivial_label).map_or(0, |c| c.dim);
    let mut nontrivial: BTreeMap<usize, usize> = BTreeMap::new();
    for c in dec.components().iter().filter(|c| c.label != trivial_label) {
        *nontrivial.entry(c.dim).or_default() += 1;
    }
    let nontrivial: Vec<String> = nontrivial.iter().map(|(d, k)| format!("{d} x{k}")).collect();
    o.check(
        "restriction multiplicities over N",
        "trivial: 2; nontrivial: 1 x7",
        format!("trivial: {trivial_dim}; nontrivial: {}", nontrivial.join(", ")),
        "U restricted to N is the regular representation plus the trivial one",
    );
    o.check(
        "Gram blocks between distinct components verified zero",
        28,
        cert.zero_blocks_checked,
        "components for distinct characters are orthogonal",
    );
    let mut nondegenerate = 0;
    for c in dec.components() {
        if restrict_form(&verdict.form.gram, &c.subspace)?.rank() == c.dim {
            nondegenerate += 1;
        }
    }
    o.check(
        "components with non-degenerate restricted form",
        format!("{} of {}", dec.components().len(), dec.components().len()),
        format!("{nondegenerate} of {}", dec.components().len()),
        "the form restricted to each component must be non-degenerate",
    );
    o.check(
        "projector algebra identities",
        "yes",
        yes(dec.projector_algebra_holds()),
        "U restricted to N is the regular representation plus the trivial one",
    );
    o.check(
        "max dimension of an N-invariant isotropic subspace",
        1,
        cert.max_dim,
        "an N-invariant subspace of dimension >= 2 is never isotropic",
    );
    o.check(
        "N-fixed point on G_iso(4, U)",
        "none",
        found(verdict.exists),
        "N has no fixed point on G_iso(4, U)",
    );
    let report = ctx.sl28_obstruction()?;
    o.check(
        "abelian fixed-point criterion",
        "obstructed",
        if report.obstructed { "obstructed" } else { "not obstructed" },
        "the SL2(F8)-action on any invariant subvariety of G_iso(4, U) is not linearizable",
    );
    o.check(
        "obstructing subgroup",
        "N (C2^3)",
        report
            .obstructing_subgroup()
            .map_or("none".to_string(), |v| format!("{} ({})", v.name, v.isomorphism_type)),
        "N has no fixed point on G_iso(4, U)",
    );
    if let Some((_, v)) = cert.witness_vectors.first() {
        let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        o.witness(
            "invariant isotropic line",
            format!("[{}], z = zeta_{}", coords.join(", "), cert.field().conductor()),
        );
    }
    o.witness("conclusion", &report.conclusion);
    Ok(o)
}

fn psl211_weil(ctx: &Context) -> Result<Outcome> {
    let mut o = Outcome::default();
    let sl2 = ctx.sl2_11()?;
    let psl2 = ctx.psl2_11()?;
    let w = ctx.sl2_11_weil()?;
    let v5 = ctx.v5()?;
    let f = sl2.field();
    let minus_one = sl2
        .index_of(&FqMat::scalar(f, 2, f.neg(1)))
        .context("-I is not in SL2(F11)")?;
    o.check("order of SL2(F11)", 1320, sl2.order(), "|SL2(F11)| = 1320");
    o.check("order of PSL2(F11)", 660, psl2.order(), "|PSL2(F11)| = 660");
    o.check(
        "graph-closure pairs certifying the Weil representation",
        1320,
        w.full.certificate().pairs,
        "the Weil representation is a homomorphism on all of SL2(F11)",
    );
    o.check("dim of the odd Weil part", 5, w.odd.dim(), "the odd Weil part has dimension 5");
    o.check("dim of the even Weil part", 6, w.even.dim(), "the even Weil part has dimension 6");
    o.check(
        "action of -I on the odd part",
        "identity",
        action_of(w.odd.op(minus_one)),
        "the odd Weil part factors through PSL2(F11)",
    );
    o.check(
        "graph-closure pairs certifying the odd part over PSL2(F11)",
        660,
        v5.certificate().pairs,
        "the odd Weil part factors through PSL2(F11)",
    );
    o.check(
        "kernel order of PSL2(F11) on the odd part",
        1,
        v5.kernel().order(),
        "the odd Weil part is a faithful representation of PSL2(F11)",
    );
    o.check(
        "random product spot-check failures (200 pairs, odd part)",
        0,
        v5.spot_check(SPOT_PAIRS, SPOT_SEED),
        "the odd Weil part factors through PSL2(F11)",
    );
    o.witness("Fourier normalization", &w.normalization);
    o.witness("Fourier scalar", w.fourier_scalar.render());
    o.witness("field of definition", format!("Q(zeta_{})", v5.field().conductor()));
    Ok(o)
}

fn psl211_census(ctx: &Context) -> Result<Outcome> {
    let mut o = Outcome::default();
    let g = ctx.psl2_11()?;
    let census = ctx.census()?;
    let mut types: Vec<String> = Vec::new();
    for c in census {
        let t = c.isomorphism_type.to_string();
        if !types.contains(&t) {
            types.push(t);
        }
    }
    const CLAIM: &str = "the abelian subgroups of PSL2(F11) are cyclic except the 2-Sylow subgroups, which are (Z/2)^2";
    o.check("order of PSL2(F11)", 660, g.order(), "|PSL2(F11)| = 660 = 2^2 * 3 * 5 * 11");
    o.check("maximal abelian subgroup types", "C2^2, C5, C6, C11", types.join(", "), CLAIM);
    let non_cyclic: Vec<String> = census
        .iter()
        .filter(|c| !c.isomorphism_type.is_cyclic())
        .map(|c| c.isomorphism_type.to_string())
        .collect();
    o.check("non-cyclic maximal abelian types", "C2^2", non_cyclic.join(", "), CLAIM);
    let sylow_order = census
        .iter()
        .filter(|c| c.isomorphism_type.order() % 2 == 0 && !c.isomorphism_type.is_cyclic())
        .map(|c| c.representative.order())
        .max()
        .unwrap_or(0);
    o.check("order of the non-cyclic class (a 2-Sylow subgroup)", 4, sylow_order, CLAIM);
    o.check("(Z/2)^2 in PSL2(F11)", "found", found(find_elementary_abelian_2(g, 2).is_some()), CLAIM);
    o.check("(Z/2)^3 in PSL2(F11)", "none", found(find_elementary_abelian_2(g, 3).is_some()), CLAIM);
    for c in census {
        o.witness(
            &format!("class {}", c.isomorphism_type),
            format!("{} conjugates of order {}", c.class_size, c.representative.order()),
        );
    }
    Ok(o)
}

fn psl211_klein_fixed_points(ctx: &Context) -> Result<Outcome> {
    let mut o = Outcome::default();
    let g = ctx.psl2_11()?;
    let v5 = ctx.v5()?;
    let cubics = ctx.cubics()?;
    o.check(
        "dimension of the space of invariant cubics (Reynolds)",
        1,
        cubics.basis.len(),
        "the Klein cubic is the unique invariant cubic",
    );
    o.check(
        "<Sym^3 chi, 1>",
        1,
        cubics.character_multiplicity,
        "the Klein cubic is the unique invariant cubic",
    );
    let cubic = cubics.basis.first().context("no invariant cubic")?;
    let sylow = find_elementary_abelian_2(g, 2).context("no 2-Sylow (Z/2)^2")?.subgroup;
    let locus = projective_fixed_locus(v5, &sylow)?;
    let mut dims = locus.projective_dims();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    let dims: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    o.check(
        "fixed components of a 2-Sylow subgroup on P^4 (dimensions)",
        "1, 0, 0, 0",
        dims.join(", "),
        "a 2-Sylow subgroup of PSL2(F11) has a fixed point on the Klein cubic",
    );
    let sylow_report = hypersurface_fixed_point(v5, &sylow, cubic)?;
    o.check(
        "2-Sylow fixed point on the invariant cubic",
        "found",
        found(sylow_report.fixed_point_on_hypersurface() == Some(true)),
        "a 2-Sylow subgroup of PSL2(F11) has a fixed point on the Klein cubic",
    );
    let census = ctx.census()?;
    let subgroups: Vec<(String, Subgroup)> = census
        .iter()
        .map(|c| (c.isomorphism_type.to_string(), c.representative.clone()))
        .collect();
    let report = ry_obstruction(&RyScenario {
        group_name: "PSL2(F11)".into(),
        action: ActionSpace::Hypersurface { rep: v5, cubic },
        subgroups,
    })?;
    let with_point = report.verdicts.iter().filter(|v| v.fixed_point).count();
    o.check(
        "maximal abelian classes with a fixed point on the cubic",
        format!("{} of {}", census.len(), census.len()),
        format!("{with_point} of {}", census.len()),
        "every abelian subgroup of PSL2(F11) fixes a point of the Klein cubic",
    );
    o.check(
        "abelian fixed-point criterion",
        "not obstructed",
        if report.obstructed { "obstructed" } else { "not obstructed" },
        "the fixed-point criterion does not apply to PSL2(F11)",
    );
    o.witness("invariant cubic", cubic.normalized().render());
    for c in census {
        o.witness(
            &format!("decomposition field for {}", c.isomorphism_type),
            format!("Q(zeta_{})", decompose(v5, &c.representative)?.field().conductor()),
        );
    }
    for v in &report.verdicts {
        o.witness(&format!("{} fixed point", v.name), &v.witness);
    }
    o.witness("conclusion", &report.conclusion);
    Ok(o)
}

fn ed_ledger(ctx: &Context) -> Result<Outcome> {
    let mut o = Outcome::default();

    let psp4 = psp4_bounds(ctx)?;
    o.check("ed(PSp4(F3))", "ed = 4", psp4.conclusion(), "ed(PSp4(F3)) = 4");

    let sl2_8 = ctx.sl2_8()?;
    let u = ctx.u()?;
    let e3 = find_elementary_abelian_2(sl2_8, 3).context("no (Z/2)^3 in SL2(F8)")?;
    let report = ctx.sl28_obstruction()?;
    let sl28 = ed_bounds(&EdFacts {
        group_name: "SL2(F8)".into(),
        elementary_abelian: vec![&e3],
        projective_reps: vec![ProjectiveRepFact {
            description: "U".into(),
            dim: u.dim(),
            projective_kernel_order: u.projective_kernel().order(),
        }],
        obstruction: Some((
            4,
            report,
            "the only rationally connected threefolds with a faithful SL2(F8)-action are the invariant linear sections of G_iso(4, U)".into(),
        )),
        cited_upper: vec![(6, "SL2(F8) has a 7-dimensional representation".into())],
        ..Default::default()
    })?;
    o.check("ed(SL2(F8))", "ed in [4, 6]", sl28.conclusion(), "4 <= ed(SL2(F8)) <= 6");
    o.check(
        "provenance of the SL2(F8) lower bound",
        "computed obstruction + cited classification",
        sl28.binding_lower().map_or("none", |b| b.provenance.as_str()),
        "ed(SL2(F8)) >= 4",
    );
    o.check(
        "provenance of the SL2(F8) upper bound",
        "cited",
        sl28.binding_upper().map_or("none", |b| b.provenance.as_str()),
        "ed(SL2(F8)) <= 6",
    );

    let psl = ctx.psl2_11()?;
    let v5 = ctx.v5()?;
    let e2 = find_elementary_abelian_2(psl, 2).context("no (Z/2)^2 in PSL2(F11)")?;
    let psl211 = ed_bounds(&EdFacts {
        group_name: "PSL2(F11)".into(),
        elementary_abelian: vec![&e2],
        projective_reps: vec![ProjectiveRepFact {
            description: "odd Weil part".into(),
            dim: v5.dim(),
            projective_kernel_order: v5.projective_kernel().order(),
        }],
        cited_lower: vec![(
            3,
            "the only simple groups of essential dimension at most 2 are A5 and PSL2(F7)".into(),
        )],
        ..Default::default()
    })?;
    o.check("ed(PSL2(F11))", "ed in [3, 4]", psl211.conclusion(), "ed(PSL2(F11)) is 3 or 4");
    o.check(
        "provenance of the PSL2(F11) upper bound",
        "computed-projective-rep",
        psl211.binding_upper().map_or("none", |b| b.provenance.as_str()),
        "the 5-dimensional representation gives ed(PSL2(F11)) <= 4",
    );

    let constants: Vec<String> = cited_constants().iter().map(|c| format!("{}: {}", c.group, c.ed)).collect();
    o.check(
        "cited essential dimensions",
        "A5: 2, A6: 3, A7: 4, PSL2(F7): 2",
        constants.join(", "),
        "ed(A5) = 2, ed(A6) = 3, ed(A7) = 4, ed(PSL2(F7)) = 2",
    );

    for (name, r) in [("PSp4(F3)", &psp4), ("SL2(F8)", &sl28), ("PSL2(F11)", &psl211)] {
        for b in r.lower.iter() {
            o.witness(&format!("{name} lower bound {} ({})", b.value, b.provenance.as_str()), &b.detail);
        }
        for b in r.upper.iter() {
            o.witness(&format!("{name} upper bound {} ({})", b.value, b.provenance.as_str()), &b.detail);
        }
    }
    Ok(o)
}
