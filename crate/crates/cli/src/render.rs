use std::fmt::Write;

use nccr_core::nccr::{DecisionReport, Provenance};
use nccr_core::{FinAbGroup, GroupElement, LatticePolygon};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(crate) fn group_name(g: &FinAbGroup) -> String {
    if g.is_trivial() {
        "trivial".to_string()
    } else {
        g.to_string()
    }
}

pub(crate) fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub(crate) fn vector(v: &[BigInt]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

pub(crate) fn elements_json(items: &[GroupElement]) -> Value {
    Value::from(items.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub(crate) fn group_json(g: &FinAbGroup) -> Value {
    json!({
        "notation": g.to_string(),
        "free_rank": g.free_rank(),
        "invariant_factors": g.torsion().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub(crate) fn polygon_json(p: &LatticePolygon) -> Value {
    json!({
        "points": p.points().iter().map(|(q, m)| json!([q[0], q[1], m])).collect::<Vec<_>>(),
        "hull": p.hull(),
        "description": p.describe(),
        "twice_area": p.twice_area(),
        "interior_points": p.interior_count(),
        "boundary_points": p.boundary_count(),
    })
}

/// Plain point list: `x y multiplicity` per lattice point, then the hull.
pub(crate) fn polygon_export(p: &LatticePolygon) -> String {
    let mut out = String::from("# lattice points: x y multiplicity\n");
    for (q, m) in p.points() {
        let _ = writeln!(out, "{} {} {m}", q[0], q[1]);
    }
    out.push_str("# hull vertices, counterclockwise\n");
    for q in p.hull() {
        let _ = writeln!(out, "{} {}", q[0], q[1]);
    }
    out
}

fn provenance_text(p: &Provenance) -> &str {
    match p {
        Provenance::Certified(how) => how,
        Provenance::Entailed => "entailed by the equivalence, not independently certified",
    }
}

pub(crate) fn verdict_word(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

pub(crate) fn decision_text(out: &mut String, r: &DecisionReport) {
    let _ = writeln!(out, "steady splitting NCCR: {}", verdict_word(r.verdict));
    if let Some(w) = &r.witness {
        let _ = writeln!(
            out,
            "witness: sum over all {} classes of Cl(R), a subgroup generating Cl(R)",
            w.classes.len()
        );
    } else {
        let _ = writeln!(out, "certificate: Cl(R) has free rank {}", r.class_group.group.free_rank());
    }
    out.push_str("conditions:\n");
    for c in &r.conditions {
        let _ = writeln!(
            out,
            "  {}: {}  [{}]",
            c.condition.description(),
            yes_no(c.holds),
            provenance_text(&c.provenance)
        );
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
}

pub(crate) fn decision_json(r: &DecisionReport) -> Value {
    json!({
        "steady_splitting_nccr": r.verdict,
        "conditions": r.conditions.iter().map(|c| json!({
            "key": c.condition.key(),
            "description": c.condition.description(),
            "holds": c.holds,
            "certified": c.is_certified(),
            "provenance": provenance_text(&c.provenance),
        })).collect::<Vec<_>>(),
        "witness": r.witness.as_ref().map(|w| json!({
            "classes": elements_json(&w.classes.classes().iter().cloned().collect::<Vec<_>>()),
            "quotient_group": group_json(&w.quotient.group),
            "weights": elements_json(&w.quotient.weights),
        })),
        "free_rank_certificate": (!r.verdict).then(|| r.class_group.group.free_rank()),
        "notes": r.notes,
    })
}
