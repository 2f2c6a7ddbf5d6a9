//! Steadiness of the splitting NCCR attached to a dimer model.

use super::{all_faces_hexagonal, is_consistent, polygon_to_cone, toric_polygon, ConsistencyVerdict, DimerModel, MatchingLimits};
use crate::error::DecisionError;
use crate::polygon::LatticePolygon;
use crate::toric::{cl_is_finite, class_group, quotient_presentation, ClassGroup, ConeData, QuotientPresentation};

pub const STEADY_STATEMENT: &str = "abelian SL(3) quotient";
pub const SPLITTING_ONLY_STATEMENT: &str = "splitting NCCR exists, steady does not";
pub const INCONSISTENT_STATEMENT: &str = "model is not consistent, so it yields no NCCR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimerReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub consistency: ConsistencyVerdict,
    pub hexagonal: bool,
    /// Consistent with all faces hexagonal.
    pub steady: bool,
    pub polygon: LatticePolygon,
    pub cone: ConeData,
    pub class_group: ClassGroup,
    /// Present exactly when the model is steady.
    pub quotient: Option<QuotientPresentation>,
    pub statement: &'static str,
    pub notes: Vec<String>,
}

impl DimerReport {
    pub fn consistent(&self) -> bool {
        self.consistency.consistent
    }
}

/// Decides whether the dimer model gives a steady splitting NCCR, and
/// cross-checks the answer against the cone over its characteristic polygon.
pub fn steady_decision_dimer(model: &DimerModel, limits: MatchingLimits) -> Result<DimerReport, DecisionError> {
    let consistency = is_consistent(model);
    let hexagonal = all_faces_hexagonal(model);
    let consistent = consistency.consistent;
    let steady = consistent && hexagonal;

    let polygon = toric_polygon(model, limits)?;
    let cone = polygon_to_cone(&polygon)?;
    let cl = class_group(&cone);
    let finite = cl_is_finite(&cone)?;
    let mut notes = vec!["hexagonal means every face has exactly six sides; this is the combinatorial test used for the homotopy class of a regular hexagonal model".to_string()];

    if consistent {
        let twice_area = polygon.twice_area();
        if twice_area != model.num_faces() as i64 {
            return Err(DecisionError::Internal(format!(
                "consistent model has {} faces but its polygon has normalized area {twice_area}",
                model.num_faces()
            )));
        }
        if finite != steady {
            return Err(DecisionError::Internal(format!(
                "dimer verdict (steady: {steady}) disagrees with the polygon cone (class group {} is {})",
                cl.group,
                if finite { "finite" } else { "infinite" }
            )));
        }
    }

    let (quotient, statement) = if steady {
        let q = quotient_presentation(&cone)?;
        if !q.is_special() || q.dim() != 3 {
            return Err(DecisionError::Internal(
                "quotient presentation of a hexagonal model is not a 3-dimensional SL action".into(),
            ));
        }
        (Some(q), STEADY_STATEMENT)
    } else if consistent {
        notes.push(crate::nccr::SPLITTING_NOTE.to_string());
        (None, SPLITTING_ONLY_STATEMENT)
    } else {
        notes.push(format!(
            "the polygon cone has class group {}; other dimer models may realize it consistently",
            cl.group
        ));
        (None, INCONSISTENT_STATEMENT)
    };

    Ok(DimerReport {
        vertices: model.num_vertices(),
        edges: model.num_edges(),
        faces: model.num_faces(),
        consistency,
        hexagonal,
        steady,
        polygon,
        cone,
        class_group: cl,
        quotient,
        statement,
        notes,
    })
}
