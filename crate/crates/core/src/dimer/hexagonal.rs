//! Hexagonal dimer models and their construction from abelian group data.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{from_periodic_embedding, Color, DimerModel, EdgeSpec, EmbeddedVertex, Vec2};
use crate::abgroup::{FinAbGroup, GroupElement};
use crate::error::{DimerError, GroupError};
use crate::intlat::{hnf, kernel_basis, Matrix};

pub fn all_faces_hexagonal(model: &DimerModel) -> bool {
    model.faces().iter().all(|f| f.sides() == 6)
}

/// The honeycomb on the torus `R^2 / ker φ`, where `φ: Z^2 → G` sends the
/// standard basis to the first two weights.
///
/// Faces of the honeycomb are the points of the triangular lattice `Z^2`.
/// The white vertex `p` is the triangle `{p, p+e1, p+e1+e2}` and the black
/// vertex `p` the triangle `{p, p+e2, p+e1+e2}`.
pub fn generate_hexagonal_dimer(group: &FinAbGroup, weights: &[GroupElement]) -> Result<DimerModel, DimerError> {
    if weights.len() != 3 {
        return Err(DimerError::WeightCount(weights.len()));
    }
    if !group.is_finite() {
        return Err(GroupError::Infinite {
            free_rank: group.free_rank(),
        }
        .into());
    }
    for w in weights {
        group.check(w)?;
    }
    let sum = group.sum(weights)?;
    if !sum.is_zero() {
        return Err(DimerError::WeightSum { sum: sum.to_string() });
    }
    let order = group.order().expect("finite");
    let image = group.subgroup_generated(&weights[..2])?;
    if BigInt::from(image.len()) != order {
        return Err(DimerError::NotSurjective {
            image: image.len().to_string(),
            order: order.to_string(),
        });
    }

    let period = kernel_lattice(group, weights);
    let (a, b, d) = (period[0][0], period[0][1], period[1][1]);
    // points 0 <= x < a, 0 <= y < d represent Z^2 / ker φ
    let reps: Vec<Vec2> = (0..a).flat_map(|x| (0..d).map(move |y| [x, y])).collect();
    let n = reps.len() as u32;
    let index_of = |p: Vec2| (p[0] * d + p[1]) as u32;
    // splits p into its representative and period coordinates
    let reduce = |p: Vec2| {
        let k = p[0].div_euclid(a);
        let y = p[1] - k * b;
        let m = y.div_euclid(d);
        ([p[0] - k * a, y - m * d], [k, m])
    };

    let mut vertices = Vec::with_capacity(2 * reps.len());
    for (i, p) in reps.iter().enumerate() {
        vertices.push(EmbeddedVertex {
            id: i as u32,
            color: Color::White,
            position: [3 * p[0] + 2, 3 * p[1] + 1],
        });
    }
    for (i, p) in reps.iter().enumerate() {
        vertices.push(EmbeddedVertex {
            id: n + i as u32,
            color: Color::Black,
            position: [3 * p[0] + 1, 3 * p[1] + 2],
        });
    }
    let mut edges = Vec::with_capacity(3 * reps.len());
    for (i, p) in reps.iter().enumerate() {
        // black neighbours across the sides {p, p+e1}, {p+e1, p+e1+e2}, {p, p+e1+e2}
        for (j, q) in [[p[0], p[1] - 1], [p[0] + 1, p[1]], *p].into_iter().enumerate() {
            let (rep, t) = reduce(q);
            edges.push(EdgeSpec {
                id: 3 * i as u32 + j as u32,
                black: n + index_of(rep),
                white: i as u32,
                shift: [-t[0], -t[1]],
            });
        }
    }
    from_periodic_embedding(&vertices, &edges, [[3 * a, 3 * b], [0, 3 * d]])
}

/// Hermite basis `[(a, b), (0, d)]` of `ker φ`, with `a, d > 0`.
fn kernel_lattice(group: &FinAbGroup, weights: &[GroupElement]) -> [Vec2; 2] {
    let r = group.torsion().len();
    // columns: w1, w2, then the relations d_i e_i
    let mut rows = vec![vec![BigInt::zero(); 2 + r]; r];
    for (i, row) in rows.iter_mut().enumerate() {
        row[0] = weights[0].torsion[i].clone();
        row[1] = weights[1].torsion[i].clone();
        row[2 + i] = group.torsion()[i].clone();
    }
    let m = Matrix::from_rows(rows, 2 + r).expect("rectangular");
    let kernel = kernel_basis(&m);
    let projected: Vec<Vec<BigInt>> = (0..kernel.cols())
        .map(|j| vec![kernel[(0, j)].clone(), kernel[(1, j)].clone()])
        .collect();
    let (h, _) = hnf(&Matrix::from_rows(projected, 2).expect("rectangular"));
    let entry = |i, j| h[(i, j)].to_i64().expect("period lattice fits i64");
    [[entry(0, 0), entry(0, 1)], [0, entry(1, 1)]]
}
