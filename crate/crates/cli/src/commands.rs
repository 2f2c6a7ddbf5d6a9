use std::fmt::Write;
use std::path::Path;

use nccr_core::dimer::{
    all_faces_hexagonal, dual_quiver, generate_hexagonal_dimer, is_consistent, mckay_quiver, quiver_isomorphic,
    steady_decision_dimer, MatchingLimits,
};
use nccr_core::nccr::{condition_report, generates_class_group, is_steady_class_set, steady_splitting_decision_toric};
use nccr_core::toric::{class_group, is_gorenstein, is_simplicial, quotient_presentation};
use nccr_core::{ClassSet, ConeData, DimerError, DimerModel, FinAbGroup, GroupElement, GroupError};
use serde_json::{json, Value};

use crate::render::{
    decision_json, decision_text, elements_json, group_json, group_name, list, polygon_export, polygon_json, vector,
    verdict_word, yes_no,
};
use crate::{read_input, write_output, CliError, DimerArgs, GenerateArgs, GroupArgs, Report, SteadyArgs};

const SCHEMA: u32 = 1;

fn parse_group(s: &str) -> Result<FinAbGroup, CliError> {
    Ok(s.parse::<FinAbGroup>()?)
}

fn parse_action(args: &GroupArgs) -> Result<(FinAbGroup, Vec<GroupElement>), CliError> {
    let group = parse_group(&args.group)?;
    let weights = group.parse_element_list(&args.weights)?;
    Ok((group, weights))
}

pub fn cmd_toric(input: &Path) -> Result<Report, CliError> {
    let cone = ConeData::from_json(&read_input(input)?)?;
    let cl = class_group(&cone);
    let simplicial = is_simplicial(&cone);
    let gorenstein = is_gorenstein(&cone);
    let quotient = if simplicial { Some(quotient_presentation(&cone)?) } else { None };
    let reflections = match &quotient {
        Some(q) => q.pseudo_reflections()?,
        None => Vec::new(),
    };
    let decision = condition_report(&cone)?;
    let rays: Vec<String> = cone.rays().iter().map(|r| vector(r)).collect();

    let mut text = String::new();
    let _ = writeln!(text, "cone: dimension {}, {} rays: {}", cone.dim(), cone.num_rays(), rays.join(", "));
    let _ = writeln!(text, "simplicial: {}", yes_no(simplicial));
    match &gorenstein {
        Some(m) => {
            let _ = writeln!(text, "gorenstein: yes, m = {}", vector(m));
        }
        None => text.push_str("gorenstein: no\n"),
    }
    let _ = writeln!(text, "Cl = {}", cl.group);
    let _ = writeln!(
        text,
        "invariant factors: {}; free rank: {}",
        if cl.group.torsion().is_empty() { "none".to_string() } else { list(cl.group.torsion()) },
        cl.group.free_rank()
    );
    let _ = writeln!(text, "ray classes: {}", list(&cl.ray_classes));
    if let Some(q) = &quotient {
        let _ = writeln!(text, "quotient group: {}", group_name(&q.group));
        let _ = writeln!(text, "weights: {}", list(&q.weights));
        let _ = writeln!(text, "special: {}", yes_no(q.is_special()));
        if !reflections.is_empty() {
            let _ = writeln!(text, "warning: pseudo-reflections present: {}", list(&reflections));
        }
    }
    decision_text(&mut text, &decision);

    let json = json!({
        "schema": SCHEMA,
        "command": "toric",
        "dim": cone.dim(),
        "rays": rays,
        "simplicial": simplicial,
        "gorenstein": gorenstein.map(|m| vector(&m)),
        "class_group": group_json(&cl.group),
        "ray_classes": elements_json(&cl.ray_classes),
        "quotient": quotient.as_ref().map(|q| json!({
            "group": group_json(&q.group),
            "weights": elements_json(&q.weights),
            "special": q.is_special(),
            "pseudo_reflections": elements_json(&reflections),
        })),
        "decision": decision_json(&decision),
    });
    Ok(Report { text, json })
}

pub fn cmd_dimer(args: &DimerArgs) -> Result<Report, CliError> {
    let model = DimerModel::from_json(&read_input(&args.input)?)?;
    let mut limits = MatchingLimits::default();
    if let Some(n) = args.max_matchings {
        limits.max_matchings = usize::try_from(n).unwrap_or(usize::MAX);
    }
    let r = steady_decision_dimer(&model, limits)?;
    let toric = steady_splitting_decision_toric(&r.cone)?;
    if r.consistent() && toric.verdict != r.steady {
        return Err(CliError::Internal(format!(
            "dimer verdict (steady: {}) disagrees with the cone verdict ({})",
            r.steady, toric.verdict
        )));
    }
    if let Some(path) = &args.emit_dot {
        write_output(path, &dual_quiver(&model).quiver.to_dot("dual"))?;
    }
    if let Some(path) = &args.emit_polygon {
        write_output(path, &polygon_export(&r.polygon))?;
    }

    let classes: Vec<String> = r.consistency.zigzags.iter().map(|z| format!("({},{})", z.class[0], z.class[1])).collect();
    let hull: Vec<String> = r.polygon.hull().iter().map(|p| format!("({},{})", p[0], p[1])).collect();
    let rays: Vec<String> = r.cone.rays().iter().map(|v| vector(v)).collect();
    let mut text = String::new();
    let _ = writeln!(text, "vertices: {}; edges: {}; faces: {}", r.vertices, r.edges, r.faces);
    if r.steady {
        let group = r.quotient.as_ref().map(|q| group_name(&q.group)).unwrap_or_default();
        let _ = writeln!(text, "consistent: yes; hexagonal: yes; steady: yes; group: {group}");
    } else {
        let _ = writeln!(
            text,
            "consistent: {}; hexagonal: {}; steady: no; polygon hull: {}; Cl = {}",
            yes_no(r.consistent()),
            yes_no(r.hexagonal),
            r.polygon.describe(),
            r.class_group.group
        );
    }
    if let Some(f) = &r.consistency.failure {
        let _ = writeln!(text, "consistency certificate: {f}");
    }
    let _ = writeln!(text, "zigzag paths: {}; classes: {}", classes.len(), classes.join(", "));
    let points: Vec<String> = r
        .polygon
        .points()
        .iter()
        .map(|(p, m)| format!("({},{})x{m}", p[0], p[1]))
        .collect();
    let _ = writeln!(text, "polygon points: {}", points.join(", "));
    let _ = writeln!(
        text,
        "polygon: {}; hull {}; twice area {}",
        r.polygon.describe(),
        hull.join(", "),
        r.polygon.twice_area()
    );
    let _ = writeln!(text, "cone rays: {}", rays.join(", "));
    let _ = writeln!(text, "Cl = {}", r.class_group.group);
    if let Some(q) = &r.quotient {
        let _ = writeln!(text, "quotient group: {}; weights: {}", group_name(&q.group), list(&q.weights));
    }
    let _ = writeln!(text, "cone decision: steady splitting NCCR {}", verdict_word(toric.verdict));
    let _ = writeln!(text, "statement: {}", r.statement);
    let mut notes = r.notes.clone();
    for n in &toric.notes {
        if !notes.contains(n) {
            notes.push(n.clone());
        }
    }
    for n in &notes {
        let _ = writeln!(text, "note: {n}");
    }

    let json = json!({
        "schema": SCHEMA,
        "command": "dimer",
        "vertices": r.vertices,
        "edges": r.edges,
        "faces": r.faces,
        "consistent": r.consistent(),
        "consistency_certificate": r.consistency.failure.as_ref().map(ToString::to_string),
        "zigzag_classes": r.consistency.zigzags.iter().map(|z| z.class).collect::<Vec<_>>(),
        "hexagonal": r.hexagonal,
        "steady": r.steady,
        "polygon": polygon_json(&r.polygon),
        "cone_rays": rays,
        "class_group": group_json(&r.class_group.group),
        "quotient": r.quotient.as_ref().map(|q| json!({
            "group": group_json(&q.group),
            "weights": elements_json(&q.weights),
        })),
        "decision": decision_json(&toric),
        "statement": r.statement,
        "notes": notes,
    });
    Ok(Report { text, json })
}

/// `Some(iso)` when the quivers are small enough to compare.
fn quivers_match(model: &DimerModel, group: &FinAbGroup, weights: &[GroupElement]) -> Result<Option<bool>, CliError> {
    let mckay = mckay_quiver(group, weights)?;
    match quiver_isomorphic(&dual_quiver(model).quiver, &mckay) {
        Ok(b) => Ok(Some(b)),
        Err(DimerError::QuiverTooLarge { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<Report, CliError> {
    let (group, weights) = parse_action(&args.action)?;
    let model = generate_hexagonal_dimer(&group, &weights)?;
    let consistent = is_consistent(&model).consistent;
    let hexagonal = all_faces_hexagonal(&model);
    let iso = quivers_match(&model, &group, &weights)?;
    if !consistent || !hexagonal || iso == Some(false) {
        return Err(CliError::Internal(format!(
            "generated model fails its checks (consistent: {consistent}, hexagonal: {hexagonal}, quiver match: {iso:?})"
        )));
    }
    write_output(&args.output, &model.to_json())?;
    if let Some(path) = &args.action.emit_dot {
        write_output(path, &dual_quiver(&model).quiver.to_dot("dual"))?;
    }

    let iso_text = match iso {
        Some(b) => yes_no(b).to_string(),
        None => "not checked (quiver too large)".to_string(),
    };
    let mut text = String::new();
    let _ = writeln!(text, "wrote {}", args.output.display());
    let _ = writeln!(
        text,
        "vertices: {}; edges: {}; faces: {}",
        model.num_vertices(),
        model.num_edges(),
        model.num_faces()
    );
    let _ = writeln!(text, "consistent: {}; hexagonal: {}", yes_no(consistent), yes_no(hexagonal));
    let _ = writeln!(text, "dual quiver ≅ McKay quiver: {iso_text}");

    let json = json!({
        "schema": SCHEMA,
        "command": "generate",
        "group": group_json(&group),
        "weights": elements_json(&weights),
        "output": args.output.display().to_string(),
        "vertices": model.num_vertices(),
        "edges": model.num_edges(),
        "faces": model.num_faces(),
        "consistent": consistent,
        "hexagonal": hexagonal,
        "quiver_isomorphic": iso,
    });
    Ok(Report { text, json })
}

pub fn cmd_mckay(args: &GroupArgs) -> Result<Report, CliError> {
    let (group, weights) = parse_action(args)?;
    let q = mckay_quiver(&group, &weights)?;
    let dot = q.to_dot("mckay");
    let text = match &args.emit_dot {
        Some(path) => {
            write_output(path, &dot)?;
            format!(
                "wrote {}\nvertices: {}; arrows: {}\n",
                path.display(),
                q.num_vertices(),
                q.num_arrows()
            )
        }
        None => dot.clone(),
    };
    let arrows: Vec<Value> = q
        .arrows
        .iter()
        .zip(&q.arrow_labels)
        .map(|(a, l)| json!([a.tail, a.head, l]))
        .collect();
    let json = json!({
        "schema": SCHEMA,
        "command": "mckay",
        "group": group_json(&group),
        "weights": elements_json(&weights),
        "vertices": q.vertex_labels,
        "arrows": arrows,
        "dot": dot,
    });
    Ok(Report { text, json })
}

pub fn cmd_steady(args: &SteadyArgs) -> Result<Report, CliError> {
    let group = parse_group(&args.group)?;
    let classes = group.parse_element_list(&args.classes)?;
    let set = ClassSet::new(group.clone(), classes).map_err(|e| match e {
        GroupError::EmptyClassSet => CliError::Input(format!("{e}; a module M must satisfy 0 ≠ M")),
        e => e.into(),
    })?;
    let steady = is_steady_class_set(&set)?;
    let (generates, closure) = if group.is_finite() {
        let closure: Vec<GroupElement> = set.closure()?.into_iter().collect();
        (Some(generates_class_group(&set)?), Some(closure))
    } else {
        (None, None)
    };

    let generates_text = match generates {
        Some(b) => yes_no(b),
        None => "undecided (Cl is infinite)",
    };
    let mut text = String::new();
    match (&closure, steady) {
        (Some(c), false) => {
            let elems: Vec<String> = c.iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "steady: no; closure = {{{}}}; generates Cl: {generates_text}", elems.join(","));
        }
        _ => {
            let _ = writeln!(text, "steady: {}; generates Cl: {generates_text}", yes_no(steady));
        }
    }
    let _ = writeln!(text, "Cl = {}; classes: {}", group, set.len());

    let json = json!({
        "schema": SCHEMA,
        "command": "steady",
        "group": group_json(&group),
        "classes": elements_json(&set.classes().iter().cloned().collect::<Vec<_>>()),
        "steady": steady,
        "generates": generates,
        "closure": closure.map(|c| elements_json(&c)),
    });
    Ok(Report { text, json })
}
