//! Dual quivers with potential, McKay quivers, and quiver isomorphism.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use super::{Color, Dart, DimerModel};
use crate::abgroup::{FinAbGroup, GroupElement};
use crate::error::DimerError;

/// Largest vertex count accepted by [`quiver_isomorphic`].
pub const QUIVER_ISO_BOUND: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_labels: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub arrow_labels: Vec<String>,
}

impl Quiver {
    pub fn num_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    /// `m[i][j]` = number of arrows `i → j`.
    pub fn multiplicities(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.tail][a.head] += 1;
        }
        m
    }

    /// Graphviz rendering; arrows are listed by (tail, head, index) so the
    /// output only depends on the quiver.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n");
        for (i, label) in self.vertex_labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", escape(label));
        }
        let mut order: Vec<usize> = (0..self.arrows.len()).collect();
        order.sort_by_key(|&k| (self.arrows[k], k));
        for k in order {
            let a = self.arrows[k];
            let _ = writeln!(
                out,
                "  {} -> {} [label=\"{}\"];",
                a.tail,
                a.head,
                escape(&self.arrow_labels[k])
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Dual quiver of a dimer model.  Arrow `k` crosses edge `k` with the white
/// endpoint on its left; vertex `f` is face `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverWithPotential {
    pub quiver: Quiver,
    /// Edge id crossed by each arrow.
    pub arrow_edges: Vec<u32>,
    /// Cycles around white vertices (counterclockwise), entering with sign +.
    pub positive: Vec<Vec<usize>>,
    /// Cycles around black vertices (clockwise), entering with sign −.
    pub negative: Vec<Vec<usize>>,
}

impl QuiverWithPotential {
    /// Each arrow appears exactly once in a positive and once in a negative
    /// term, and consecutive arrows of every term compose.
    pub fn is_well_formed(&self) -> bool {
        let n = self.quiver.num_arrows();
        let composes = |cycle: &Vec<usize>| {
            (0..cycle.len()).all(|i| {
                let a = self.quiver.arrows[cycle[i]];
                let b = self.quiver.arrows[cycle[(i + 1) % cycle.len()]];
                a.head == b.tail
            })
        };
        let covers_once = |terms: &Vec<Vec<usize>>| {
            let mut seen = vec![0usize; n];
            for t in terms {
                for &a in t {
                    seen[a] += 1;
                }
            }
            seen.iter().all(|&c| c == 1)
        };
        self.positive.iter().all(composes)
            && self.negative.iter().all(composes)
            && covers_once(&self.positive)
            && covers_once(&self.negative)
    }
}

pub fn dual_quiver(model: &DimerModel) -> QuiverWithPotential {
    let arrows: Vec<Arrow> = (0..model.num_edges())
        .map(|k| Arrow {
            tail: model.face_of(Dart {
                edge: k,
                from_black: true,
            }),
            head: model.face_of(Dart {
                edge: k,
                from_black: false,
            }),
        })
        .collect();
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for (v, vertex) in model.vertices().iter().enumerate() {
        let mut cycle: Vec<usize> = model.rotation(v).to_vec();
        if vertex.color == Color::Black {
            cycle.reverse();
        }
        let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).expect("degree >= 2");
        cycle.rotate_left(start);
        match vertex.color {
            Color::White => positive.push(cycle),
            Color::Black => negative.push(cycle),
        }
    }
    positive.sort();
    negative.sort();
    let edge_ids: Vec<u32> = model.edges().iter().map(|e| e.id).collect();
    QuiverWithPotential {
        quiver: Quiver {
            vertex_labels: (0..model.num_faces()).map(|f| format!("F{f}")).collect(),
            arrows,
            arrow_labels: edge_ids.iter().map(|id| format!("e{id}")).collect(),
        },
        arrow_edges: edge_ids,
        positive,
        negative,
    }
}

/// McKay quiver of the diagonal representation of `G` with the given three
/// weights: vertices are the elements of `G`, with an arrow `g → g + w_j`
/// for each weight.
pub fn mckay_quiver(group: &FinAbGroup, weights: &[GroupElement]) -> Result<Quiver, DimerError> {
    if weights.len() != 3 {
        return Err(DimerError::WeightCount(weights.len()));
    }
    for w in weights {
        group.check(w)?;
    }
    let sum = group.sum(weights)?;
    if !sum.is_zero() {
        return Err(DimerError::WeightSum { sum: sum.to_string() });
    }
    if !group.is_generated_by(weights)? {
        return Err(DimerError::NotFaithful);
    }
    let elements = group.enumerate()?;
    let index: BTreeMap<&GroupElement, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut arrows = Vec::new();
    let mut arrow_labels = Vec::new();
    for (i, g) in elements.iter().enumerate() {
        for (j, w) in weights.iter().enumerate() {
            let h = group.add(g, w)?;
            arrows.push(Arrow { tail: i, head: index[&h] });
            arrow_labels.push(format!("x{}", j + 1));
        }
    }
    Ok(Quiver {
        vertex_labels: elements.iter().map(ToString::to_string).collect(),
        arrows,
        arrow_labels,
    })
}

/// Whether the two quivers are isomorphic as directed multigraphs.
pub fn quiver_isomorphic(a: &Quiver, b: &Quiver) -> Result<bool, DimerError> {
    for q in [a, b] {
        if q.num_vertices() > QUIVER_ISO_BOUND {
            return Err(DimerError::QuiverTooLarge {
                vertices: q.num_vertices(),
                bound: QUIVER_ISO_BOUND,
            });
        }
    }
    if a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows() {
        return Ok(false);
    }
    let n = a.num_vertices();
    if n == 0 {
        return Ok(true);
    }
    let (ma, mb) = (a.multiplicities(), b.multiplicities());
    let (ca, cb) = refine_colors(&ma, &mb);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(false);
    }
    let order = search_order(&ma);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(0, &order, &ma, &mb, &ca, &cb, &mut image, &mut used))
}

/// Joint colour refinement of two multiplicity matrices.  Colours are
/// comparable across the two quivers.
fn refine_colors(ma: &[Vec<usize>], mb: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let n = ma.len();
    let mut ca = vec![0usize; n];
    let mut cb = vec![0usize; n];
    loop {
        let signature = |m: &[Vec<usize>], c: &[usize], v: usize| {
            let mut out: Vec<(usize, usize)> = (0..n).filter(|&u| m[v][u] > 0).map(|u| (c[u], m[v][u])).collect();
            let mut inc: Vec<(usize, usize)> = (0..n).filter(|&u| m[u][v] > 0).map(|u| (c[u], m[u][v])).collect();
            out.sort_unstable();
            inc.sort_unstable();
            (c[v], m[v][v], out, inc)
        };
        let sa: Vec<_> = (0..n).map(|v| signature(ma, &ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| signature(mb, &cb, v)).collect();
        let mut palette: Vec<_> = sa.iter().chain(&sb).cloned().collect();
        palette.sort();
        palette.dedup();
        let colour = |s| palette.binary_search(s).expect("present");
        let na: Vec<usize> = sa.iter().map(colour).collect();
        let nb: Vec<usize> = sb.iter().map(colour).collect();
        let classes = |c: &[usize]| {
            let mut v = c.to_vec();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        let stable = classes(&na) == classes(&ca) && classes(&nb) == classes(&cb);
        ca = na;
        cb = nb;
        if stable {
            return (ca, cb);
        }
    }
}

/// Breadth-first order over the underlying undirected graph so that every
/// vertex after the first of its component has an already placed neighbour.
fn search_order(m: &[Vec<usize>]) -> Vec<usize> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in 0..n {
                if !seen[u] && (m[v][u] > 0 || m[u][v] > 0) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    ma: &[Vec<usize>],
    mb: &[Vec<usize>],
    ca: &[usize],
    cb: &[usize],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..mb.len() {
        if used[w] || ca[v] != cb[w] || ma[v][v] != mb[w][w] {
            continue;
        }
        let fits = order[..depth].iter().all(|&u| {
            let x = image[u];
            ma[v][u] == mb[w][x] && ma[u][v] == mb[x][w]
        });
        if !fits {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(depth + 1, order, ma, mb, ca, cb, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimer::fixtures::*;

    #[test]
    fn one_hexagon_dual_quiver() {
        let q = dual_quiver(&one_hexagon());
        assert_eq!(q.quiver.num_vertices(), 1);
        assert_eq!(q.quiver.num_arrows(), 3);
        assert!(q.quiver.arrows.iter().all(|a| a.tail == 0 && a.head == 0));
        assert_eq!(q.positive, vec![vec![0, 1, 2]]);
        assert_eq!(q.negative, vec![vec![0, 2, 1]]);
        assert!(q.is_well_formed());
    }

    #[test]
    fn conifold_dual_quiver() {
        let q = dual_quiver(&conifold());
        let m = q.quiver.multiplicities();
        assert_eq!(m, vec![vec![0, 2], vec![2, 0]]);
        assert!(q.is_well_formed());
    }

    #[test]
    fn mckay_of_cyclic_group() {
        let g = FinAbGroup::cyclic(3);
        let w: Vec<GroupElement> = [1, 1, 1].iter().map(|&x| GroupElement::torsion_from(&[x])).collect();
        let q = mckay_quiver(&g, &w).unwrap();
        assert_eq!(q.num_arrows(), 9);
        assert_eq!(q.multiplicities(), vec![vec![0, 3, 0], vec![0, 0, 3], vec![3, 0, 0]]);
        let bad: Vec<GroupElement> = [1, 1, 0].iter().map(|&x| GroupElement::torsion_from(&[x])).collect();
        assert!(matches!(mckay_quiver(&g, &bad), Err(DimerError::WeightSum { .. })));
        let g2 = FinAbGroup::cyclic(2);
        let zero: Vec<GroupElement> = (0..3).map(|_| GroupElement::torsion_from(&[0])).collect();
        assert_eq!(mckay_quiver(&g2, &zero), Err(DimerError::NotFaithful));
    }

    #[test]
    fn isomorphism_search() {
        let g = FinAbGroup::cyclic(7);
        let el = |xs: [i64; 3]| xs.iter().map(|&x| GroupElement::torsion_from(&[x])).collect::<Vec<_>>();
        let a = mckay_quiver(&g, &el([1, 2, 4])).unwrap();
        let b = mckay_quiver(&g, &el([3, 6, 5])).unwrap();
        let c = mckay_quiver(&g, &el([1, 1, 5])).unwrap();
        assert!(quiver_isomorphic(&a, &b).unwrap());
        assert!(!quiver_isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn dot_is_stable() {
        let q = dual_quiver(&conifold());
        let dot = q.quiver.to_dot("Q");
        assert_eq!(dot, dual_quiver(&conifold()).quiver.to_dot("Q"));
        assert!(dot.starts_with("digraph Q {\n  0 [label=\"F0\"];"));
        assert_eq!(dot.matches("->").count(), 4);
    }
}
