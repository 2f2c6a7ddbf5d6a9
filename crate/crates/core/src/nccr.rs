//! Verdicts on steady and splitting NCCRs of toric singularities, decided from
//! class group combinatorics.
//!
//! A splitting module `M = M_1 ⊕ … ⊕ M_n` is recorded by the classes
//! `[M_i] ∈ Cl(R)`.  It is steady exactly when those classes form a subgroup,
//! and a toric `R` has a steady splitting NCCR exactly when `Cl(R)` is finite.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::abgroup::{FinAbGroup, GroupElement};
use crate::error::{DecisionError, GroupError};
use crate::toric::{
    cl_is_finite, class_group, is_simplicial, quotient_presentation, ray_determinant, ClassGroup, ConeData,
    QuotientPresentation,
};

/// The classes of the summands of a splitting module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSet {
    ambient: FinAbGroup,
    classes: BTreeSet<GroupElement>,
}

impl ClassSet {
    pub fn new(ambient: FinAbGroup, classes: impl IntoIterator<Item = GroupElement>) -> Result<Self, GroupError> {
        let classes: BTreeSet<GroupElement> = classes.into_iter().collect();
        if classes.is_empty() {
            return Err(GroupError::EmptyClassSet);
        }
        for c in &classes {
            ambient.check(c)?;
        }
        Ok(ClassSet { ambient, classes })
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    pub fn classes(&self) -> &BTreeSet<GroupElement> {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Smallest subgroup containing the classes.  Needs a finite ambient group.
    pub fn closure(&self) -> Result<BTreeSet<GroupElement>, GroupError> {
        self.ambient.subgroup_generated(&self.classes)
    }
}

/// Whether the classes form a subgroup, i.e. the splitting module is steady.
///
/// In an infinite group, a class with nonzero free part has infinite order,
/// so no finite set containing it is a subgroup.  Sets of torsion classes are
/// decided inside the torsion subgroup.
pub fn is_steady_class_set(set: &ClassSet) -> Result<bool, DecisionError> {
    let g = &set.ambient;
    if g.is_finite() {
        return Ok(g.is_subgroup(&set.classes)?);
    }
    if set.classes.iter().any(|c| c.free.iter().any(|x| x != &BigInt::from(0))) {
        return Ok(false);
    }
    let torsion = FinAbGroup::new(0, g.torsion().to_vec())?;
    let restricted: Vec<GroupElement> = set
        .classes
        .iter()
        .map(|c| GroupElement::new(Vec::new(), c.torsion.clone()))
        .collect();
    Ok(torsion.is_subgroup(&restricted)?)
}

/// Whether the classes generate the whole (finite) ambient group.
pub fn generates_class_group(set: &ClassSet) -> Result<bool, DecisionError> {
    Ok(set.ambient.is_generated_by(&set.classes)?)
}

/// The ring-theoretic conditions tied together by the finiteness of `Cl(R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// `R = S^G` for a finite small abelian `G ⊂ GL(d, k)`.
    AbelianQuotient,
    /// `R = S_0` for a strongly `G`-graded complete regular local `S`.
    StronglyGraded,
    /// A unique basic module gives a splitting NCCR.
    UniqueBasicSplitting,
    SteadySplittingNccr,
    SteadySplittingNcr,
    /// `⊕_{X ∈ G} X` gives an NCCR for some finite subgroup `G ⊆ Cl(R)`.
    SubgroupSumNccr,
    SubgroupSumNcr,
    /// `Cl(R)` is finite and `⊕_{X ∈ Cl(R)} X` gives an NCCR.
    ClassGroupSumNccr,
    ClassGroupSumNcr,
}

impl Condition {
    pub const ALL: [Condition; 9] = [
        Condition::AbelianQuotient,
        Condition::StronglyGraded,
        Condition::UniqueBasicSplitting,
        Condition::SteadySplittingNccr,
        Condition::SteadySplittingNcr,
        Condition::SubgroupSumNccr,
        Condition::SubgroupSumNcr,
        Condition::ClassGroupSumNccr,
        Condition::ClassGroupSumNcr,
    ];

    /// Stable identifier used in machine-readable reports.
    pub fn key(self) -> &'static str {
        match self {
            Condition::AbelianQuotient => "abelian_quotient",
            Condition::StronglyGraded => "strongly_graded",
            Condition::UniqueBasicSplitting => "unique_basic_splitting_nccr",
            Condition::SteadySplittingNccr => "steady_splitting_nccr",
            Condition::SteadySplittingNcr => "steady_splitting_ncr",
            Condition::SubgroupSumNccr => "subgroup_sum_nccr",
            Condition::SubgroupSumNcr => "subgroup_sum_ncr",
            Condition::ClassGroupSumNccr => "class_group_sum_nccr",
            Condition::ClassGroupSumNcr => "class_group_sum_ncr",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Condition::AbelianQuotient => "abelian quotient singularity S^G",
            Condition::StronglyGraded => "degree-zero part of a strongly graded regular ring",
            Condition::UniqueBasicSplitting => "unique basic splitting NCCR module",
            Condition::SteadySplittingNccr => "steady splitting NCCR exists",
            Condition::SteadySplittingNcr => "steady splitting NCR exists",
            Condition::SubgroupSumNccr => "NCCR from the sum over a finite subgroup of Cl",
            Condition::SubgroupSumNcr => "NCR from the sum over a finite subgroup of Cl",
            Condition::ClassGroupSumNccr => "Cl finite, NCCR from the sum over Cl",
            Condition::ClassGroupSumNcr => "Cl finite, NCR from the sum over Cl",
        }
    }

    /// Conditions outside computational reach: strongly graded rings and
    /// NCRs, i.e. finite global dimension of `End_R(M)`.
    pub fn is_entailed_only(self) -> bool {
        matches!(self, Condition::StronglyGraded | Condition::SteadySplittingNcr)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Decided by the named computation.
    Certified(String),
    /// Follows from the equivalence with the certified conditions.
    Entailed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub condition: Condition,
    pub holds: bool,
    pub provenance: Provenance,
}

impl ConditionVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self.provenance, Provenance::Certified(_))
    }
}

/// Witness for a YES verdict: the module `⊕_{X ∈ Cl(R)} X` and `R = S^G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub classes: ClassSet,
    pub quotient: QuotientPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionReport {
    /// Whether `R` has a steady splitting NCCR.
    pub verdict: bool,
    pub conditions: Vec<ConditionVerdict>,
    pub class_group: ClassGroup,
    pub simplicial: bool,
    /// `|det|` of the ray matrix when the cone is simplicial.
    pub determinant: Option<BigInt>,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl DecisionReport {
    pub fn get(&self, condition: Condition) -> Option<&ConditionVerdict> {
        self.conditions.iter().find(|c| c.condition == condition)
    }
}

pub const SPLITTING_NOTE: &str = "splitting NCCR may exist while steady does not";

/// Decides every computable condition along its own route and checks that the
/// answers agree.
pub fn steady_splitting_decision_toric(cone: &ConeData) -> Result<DecisionReport, DecisionError> {
    let cl = class_group(cone);
    let simplicial = is_simplicial(cone);
    let finite = cl_is_finite(cone)?;
    let determinant = ray_determinant(cone);
    let free_rank = cl.group.free_rank();
    let invariants = if cl.group.torsion().is_empty() {
        "none".to_string()
    } else {
        cl.group.torsion().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    };

    let mut conditions = Vec::new();
    let mut push = |condition, holds, how: String| {
        conditions.push(ConditionVerdict {
            condition,
            holds,
            provenance: Provenance::Certified(how),
        })
    };
    let d = cone.dim();
    let n = cone.num_rays();
    let mut notes = Vec::new();

    let witness = if finite {
        let quotient = quotient_presentation(cone)?;
        let classes = ClassSet::new(cl.group.clone(), cl.group.enumerate()?)?;
        let steady = is_steady_class_set(&classes)?;
        let generates = generates_class_group(&classes)?;
        if !steady || !generates {
            return Err(DecisionError::Internal(format!(
                "the full class group {} failed the subgroup (={steady}) or generation (={generates}) test",
                cl.group
            )));
        }
        if quotient.group != cl.group {
            return Err(DecisionError::Internal(format!(
                "quotient group {} differs from the class group {}",
                quotient.group, cl.group
            )));
        }
        push(
            Condition::AbelianQuotient,
            quotient.is_faithful(),
            format!(
                "certified by simpliciality n=d={d} and a faithful diagonal action of {}",
                if quotient.group.is_trivial() { "the trivial group".to_string() } else { quotient.group.to_string() }
            ),
        );
        push(
            Condition::UniqueBasicSplitting,
            true,
            format!("certified by SNF invariant factors ({invariants}) with free rank 0"),
        );
        push(
            Condition::SteadySplittingNccr,
            steady,
            format!("certified by a subgroup check on all {} classes of Cl(R)", classes.len()),
        );
        let size_matches = determinant.as_ref() == Some(&BigInt::from(classes.len()));
        for c in [Condition::SubgroupSumNccr, Condition::SubgroupSumNcr] {
            push(
                c,
                size_matches,
                format!("certified by |G| = |det(rays)| = {}", classes.len()),
            );
        }
        for c in [Condition::ClassGroupSumNccr, Condition::ClassGroupSumNcr] {
            push(c, finite && generates, format!("certified by finiteness of Cl(R) = {}", cl.group));
        }
        Some(Witness { classes, quotient })
    } else {
        push(
            Condition::AbelianQuotient,
            simplicial,
            format!("certified by simpliciality: n={n} rays in dimension d={d}"),
        );
        let certificate = format!("certified by SNF: Cl(R) = {} has free rank {free_rank}", cl.group);
        for c in [
            Condition::UniqueBasicSplitting,
            Condition::SteadySplittingNccr,
            Condition::ClassGroupSumNccr,
            Condition::ClassGroupSumNcr,
        ] {
            push(c, false, certificate.clone());
        }
        for c in [Condition::SubgroupSumNccr, Condition::SubgroupSumNcr] {
            push(
                c,
                determinant.is_some(),
                "certified by the ray determinant, which is undefined for a non-simplicial cone".to_string(),
            );
        }
        notes.push(SPLITTING_NOTE.to_string());
        None
    };

    if let Some(c) = conditions.iter().find(|c| c.holds != finite) {
        return Err(DecisionError::Internal(format!(
            "condition {} is {} while Cl(R) = {} is {}",
            c.condition,
            c.holds,
            cl.group,
            if finite { "finite" } else { "infinite" }
        )));
    }
    conditions.sort_by_key(|c| c.condition);

    Ok(DecisionReport {
        verdict: finite,
        conditions,
        class_group: cl,
        simplicial,
        determinant,
        witness,
        notes,
    })
}

/// The decision together with the conditions that are only entailed by the
/// equivalence, in a fixed order.
pub fn condition_report(cone: &ConeData) -> Result<DecisionReport, DecisionError> {
    let mut report = steady_splitting_decision_toric(cone)?;
    for condition in Condition::ALL.into_iter().filter(|c| c.is_entailed_only()) {
        report.conditions.push(ConditionVerdict {
            condition,
            holds: report.verdict,
            provenance: Provenance::Entailed,
        });
    }
    report.conditions.sort_by_key(|c| c.condition);
    report
        .notes
        .push("strongly graded rings and NCRs are not computed; those conditions are entailed by the equivalence, not independently certified".into());
    Ok(report)
}
