//! Perfect matchings and the toric polygon of a dimer model.

use super::{DimerModel, Vec2};
use crate::error::DimerError;
use crate::polygon::LatticePolygon;
use crate::toric::ConeData;
use crate::dimer::Color;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchingLimits {
    pub max_edges: usize,
    pub max_matchings: usize,
}

impl Default for MatchingLimits {
    fn default() -> Self {
        MatchingLimits {
            max_edges: 64,
            max_matchings: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectMatching {
    /// Edge indices, ascending.
    pub edges: Vec<usize>,
    /// Homology class of `M - M0`, with `M0` the first matching found.
    pub height: Vec2,
}

pub fn perfect_matchings(model: &DimerModel) -> Result<Vec<PerfectMatching>, DimerError> {
    perfect_matchings_bounded(model, MatchingLimits::default())
}

/// All perfect matchings, found by backtracking over the white vertices in
/// index order and their edges in index order.
pub fn perfect_matchings_bounded(
    model: &DimerModel,
    limits: MatchingLimits,
) -> Result<Vec<PerfectMatching>, DimerError> {
    if model.num_edges() > limits.max_edges {
        return Err(DimerError::TooManyEdges {
            edges: model.num_edges(),
            bound: limits.max_edges,
        });
    }
    let whites: Vec<usize> = (0..model.num_vertices())
        .filter(|&v| model.vertices()[v].color == Color::White)
        .collect();
    let blacks = model.num_vertices() - whites.len();
    if blacks != whites.len() {
        return Err(DimerError::NoPerfectMatching);
    }
    let mut options: Vec<Vec<usize>> = whites.iter().map(|&w| model.rotation(w).to_vec()).collect();
    for o in &mut options {
        o.sort_unstable();
    }
    let mut search = Search {
        model,
        options: &options,
        used_black: vec![false; model.num_vertices()],
        chosen: Vec::with_capacity(whites.len()),
        found: Vec::new(),
        limit: limits.max_matchings,
    };
    search.run(0)?;
    let found = search.found;
    let Some(first) = found.first() else {
        return Err(DimerError::NoPerfectMatching);
    };
    let base = class_sum(model, first);
    Ok(found
        .iter()
        .map(|m| {
            let c = class_sum(model, m);
            let mut edges = m.clone();
            edges.sort_unstable();
            PerfectMatching {
                edges,
                height: [c[0] - base[0], c[1] - base[1]],
            }
        })
        .collect())
}

struct Search<'a> {
    model: &'a DimerModel,
    options: &'a [Vec<usize>],
    used_black: Vec<bool>,
    chosen: Vec<usize>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

impl Search<'_> {
    fn run(&mut self, i: usize) -> Result<(), DimerError> {
        if i == self.options.len() {
            if self.found.len() == self.limit {
                return Err(DimerError::TooManyMatchings { bound: self.limit });
            }
            self.found.push(self.chosen.clone());
            return Ok(());
        }
        for &e in &self.options[i] {
            let b = self.model.edges()[e].black;
            if self.used_black[b] {
                continue;
            }
            self.used_black[b] = true;
            self.chosen.push(e);
            self.run(i + 1)?;
            self.chosen.pop();
            self.used_black[b] = false;
        }
        Ok(())
    }
}

fn class_sum(model: &DimerModel, edges: &[usize]) -> Vec2 {
    edges.iter().fold([0, 0], |acc, &e| {
        let s = model.edges()[e].shift;
        [acc[0] + s[0], acc[1] + s[1]]
    })
}

/// Height classes of all perfect matchings, with multiplicities.
pub fn toric_polygon(model: &DimerModel, limits: MatchingLimits) -> Result<LatticePolygon, DimerError> {
    let matchings = perfect_matchings_bounded(model, limits)?;
    Ok(LatticePolygon::from_points(matchings.iter().map(|m| m.height)))
}

/// The cone over the polygon at height one: rays `(v, 1)` for the hull
/// vertices `v`.
pub fn polygon_to_cone(polygon: &LatticePolygon) -> Result<ConeData, DimerError> {
    if !polygon.is_two_dimensional() {
        return Err(DimerError::DegeneratePolygon);
    }
    Ok(polygon.cone()?)
}
