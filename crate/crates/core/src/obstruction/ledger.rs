use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{ObstructionError, ObstructionReport};
use crate::group::ElementaryAbelian2;

/// Where a bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `ed((Z/2)^r) = r` applied to an explicit subgroup.
    ComputedSubgroup,
    /// `dim V - 1` for a representation with trivial projective kernel.
    ComputedProjectiveRep,
    /// A computed fixed-point obstruction combined with a cited classification.
    ComputedObstructionCitedClassification,
    Cited,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::ComputedSubgroup => "computed-subgroup",
            Provenance::ComputedProjectiveRep => "computed-projective-rep",
            Provenance::ComputedObstructionCitedClassification => "computed obstruction + cited classification",
            Provenance::Cited => "cited",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: u32,
    pub provenance: Provenance,
    pub detail: String,
}

/// A representation of the acting group together with its verified
/// projective kernel.
#[derive(Clone, Debug)]
pub struct ProjectiveRepFact {
    pub description: String,
    pub dim: usize,
    pub projective_kernel_order: usize,
}

#[derive(Clone, Debug, Default)]
pub struct EdFacts<'a> {
    pub group_name: String,
    pub elementary_abelian: Vec<&'a ElementaryAbelian2>,
    pub projective_reps: Vec<ProjectiveRepFact>,
    /// A lower bound that needs both the listed obstruction and a cited
    /// classification.
    pub obstruction: Option<(u32, &'a ObstructionReport, String)>,
    pub cited_lower: Vec<(u32, String)>,
    pub cited_upper: Vec<(u32, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdBoundReport {
    pub group_name: String,
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    /// `[max lower, min upper]`; the upper end is `None` when no upper bound is known.
    pub interval: (u32, Option<u32>),
}

impl EdBoundReport {
    pub fn conclusion(&self) -> String {
        match self.interval {
            (lo, Some(hi)) if lo == hi => format!("ed = {lo}"),
            (lo, Some(hi)) => format!("ed in [{lo}, {hi}]"),
            (lo, None) => format!("ed >= {lo}"),
        }
    }

    /// The bound attaining the interval's lower end.
    pub fn binding_lower(&self) -> Option<&Bound> {
        self.lower.iter().find(|b| b.value == self.interval.0)
    }

    pub fn binding_upper(&self) -> Option<&Bound> {
        self.upper.iter().find(|b| Some(b.value) == self.interval.1)
    }
}

/// Merges the facts into an interval for the essential dimension.
///
/// Computed facts are admitted only with their witnesses: an elementary
/// abelian subgroup must come with a basis of the right size, a
/// representation only bounds from above when its projective kernel is
/// trivial, and an obstruction only counts when its report is obstructed.
pub fn ed_bounds(facts: &EdFacts<'_>) -> Result<EdBoundReport, ObstructionError> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for e in &facts.elementary_abelian {
        let r = e.basis.len();
        if e.subgroup.order() != 1 << r {
            return Err(ObstructionError::InvalidFact(format!(
                "(Z/2)^{r} witness has order {}",
                e.subgroup.order()
            )));
        }
        lower.push(Bound {
            value: r as u32,
            provenance: Provenance::ComputedSubgroup,
            detail: format!("(Z/2)^{r} generated by elements {:?}", e.basis),
        });
    }
    for rep in &facts.projective_reps {
        if rep.projective_kernel_order != 1 || rep.dim == 0 {
            continue;
        }
        upper.push(Bound {
            value: rep.dim as u32 - 1,
            provenance: Provenance::ComputedProjectiveRep,
            detail: format!("{} of dimension {} with trivial projective kernel", rep.description, rep.dim),
        });
    }
    if let Some((value, report, classification)) = &facts.obstruction {
        if !report.obstructed {
            return Err(ObstructionError::InvalidFact(String::from(
                "obstruction fact without an obstructing subgroup",
            )));
        }
        lower.push(Bound {
            value: *value,
            provenance: Provenance::ComputedObstructionCitedClassification,
            detail: format!("{}; {}", report.conclusion, classification),
        });
    }
    for (value, note) in &facts.cited_lower {
        lower.push(Bound {
            value: *value,
            provenance: Provenance::Cited,
            detail: note.clone(),
        });
    }
    for (value, note) in &facts.cited_upper {
        upper.push(Bound {
            value: *value,
            provenance: Provenance::Cited,
            detail: note.clone(),
        });
    }
    let lo = lower.iter().map(|b| b.value).max().unwrap_or(0);
    let hi = upper.iter().map(|b| b.value).min();
    if let Some(hi) = hi {
        if lo > hi {
            return Err(ObstructionError::InconsistentBounds { lower: lo, upper: hi });
        }
    }
    Ok(EdBoundReport {
        group_name: facts.group_name.clone(),
        lower,
        upper,
        interval: (lo, hi),
    })
}

/// An essential dimension taken from the literature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CitedConstant {
    pub group: &'static str,
    pub ed: u32,
}

/// Known essential dimensions of small simple groups used for comparison.
pub fn cited_constants() -> [CitedConstant; 4] {
    [
        CitedConstant { group: "A5", ed: 2 },
        CitedConstant { group: "A6", ed: 3 },
        CitedConstant { group: "A7", ed: 4 },
        CitedConstant { group: "PSL2(F7)", ed: 2 },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inconsistent_bounds_are_rejected() {
        let facts = EdFacts {
            group_name: String::from("G"),
            cited_lower: alloc::vec![(5, String::from("cited"))],
            cited_upper: alloc::vec![(4, String::from("cited"))],
            ..Default::default()
        };
        assert_eq!(
            ed_bounds(&facts).unwrap_err(),
            ObstructionError::InconsistentBounds { lower: 5, upper: 4 }
        );
    }

    #[test]
    fn faithless_representations_give_no_upper_bound() {
        let facts = EdFacts {
            group_name: String::from("G"),
            projective_reps: alloc::vec![ProjectiveRepFact {
                description: String::from("V"),
                dim: 5,
                projective_kernel_order: 2,
            }],
            ..Default::default()
        };
        let r = ed_bounds(&facts).unwrap();
        assert_eq!(r.interval, (0, None));
        assert_eq!(r.conclusion(), "ed >= 0");
    }
}
