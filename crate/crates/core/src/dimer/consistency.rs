//! Zigzag paths and the zigzag criterion for consistency.
//!
//! Lifts of zigzag paths to the universal cover are tracked exactly: a lifted
//! edge is an edge together with the deck translation of its black endpoint,
//! and a position along a lift is an index into the bi-infinite dart
//! sequence.  Shared edges of two lifts are solved for in closed form, so no
//! search window over translates is needed.

use std::collections::BTreeMap;
use std::fmt;

use super::{Dart, DimerModel, Vec2};
use crate::dimer::Color;
use crate::intlat::{hnf, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagPath {
    pub darts: Vec<Dart>,
    /// Homology class on the torus.
    pub class: Vec2,
}

impl ZigzagPath {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// The class turned by the intersection form, `(c_y, -c_x)`.  For a
    /// consistent model these are the primitive outward edge normals of the
    /// matching polygon, one per lattice segment of the boundary.
    pub fn normal(&self) -> Vec2 {
        [self.class[1], -self.class[0]]
    }
}

/// Zigzag paths: at a white vertex turn to the clockwise neighbour of the
/// incoming edge, at a black vertex to the counterclockwise one.  Every dart
/// lies on exactly one path; paths are listed by their smallest dart.
pub fn zigzag_paths(model: &DimerModel) -> Vec<ZigzagPath> {
    let ndarts = 2 * model.num_edges();
    let mut seen = vec![false; ndarts];
    let mut out = Vec::new();
    for start in 0..ndarts {
        if seen[start] {
            continue;
        }
        let first = Dart {
            edge: start / 2,
            from_black: start % 2 == 0,
        };
        let mut darts = Vec::new();
        let mut class = [0, 0];
        let mut d = first;
        loop {
            seen[d.index()] = true;
            darts.push(d);
            let s = model.dart_shift(d);
            class = [class[0] + s[0], class[1] + s[1]];
            let v = model.head(d);
            let ccw = model.vertices()[v].color == Color::Black;
            d = model.continue_along(d, model.rotate(v, d.edge, ccw));
            if d == first {
                break;
            }
        }
        out.push(ZigzagPath { darts, class });
    }
    out
}

/// Compares the intersection numbers of zigzag paths read off from the
/// rotation system with those of their classes.  Where two zigzags share an
/// edge they cross, positively for the one running black to white.  Returns
/// the sign relating the two (1 when the rotations are counterclockwise in
/// the period basis), or `None` when all classes are parallel.
pub(crate) fn orientation_sign(model: &DimerModel) -> Result<Option<i64>, (usize, usize)> {
    let zigzags = zigzag_paths(model);
    let mut owner = vec![0usize; 2 * model.num_edges()];
    for (i, z) in zigzags.iter().enumerate() {
        for d in &z.darts {
            owner[d.index()] = i;
        }
    }
    let n = zigzags.len();
    let mut meet = vec![vec![0i64; n]; n];
    for e in 0..model.num_edges() {
        let (zb, zw) = (owner[2 * e], owner[2 * e + 1]);
        meet[zb][zw] += 1;
        meet[zw][zb] -= 1;
    }
    let mut sign = None;
    for i in 0..n {
        for j in i + 1..n {
            let cr = cross(zigzags[i].class, zigzags[j].class);
            let s = if meet[i][j] == cr {
                1
            } else if meet[i][j] == -cr {
                -1
            } else {
                return Err((i, j));
            };
            if cr != 0 {
                match sign {
                    None => sign = Some(s),
                    Some(t) if t != s => return Err((i, j)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(sign)
}

/// Why a model fails the zigzag criterion.  Zigzags are indices into
/// [`zigzag_paths`]; edges are edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConsistencyFailure {
    /// A zigzag path with zero homology class.
    TrivialZigzag { zigzag: usize },
    /// A lift of a zigzag path runs through the same edge twice.
    SelfIntersection { zigzag: usize, edge: u32 },
    /// Lifts of two zigzags (possibly two lifts of one zigzag) both run from
    /// the first edge to the second.
    SameDirection { first: usize, second: usize, edges: [u32; 2] },
}

impl fmt::Display for ConsistencyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConsistencyFailure::TrivialZigzag { zigzag } => {
                write!(f, "zigzag {zigzag} is homologically trivial")
            }
            ConsistencyFailure::SelfIntersection { zigzag, edge } => {
                write!(f, "a lift of zigzag {zigzag} meets itself at edge {edge}")
            }
            ConsistencyFailure::SameDirection { first, second, edges } => write!(
                f,
                "lifts of zigzags {first} and {second} both run from edge {} to edge {}",
                edges[0], edges[1]
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyVerdict {
    pub consistent: bool,
    pub zigzags: Vec<ZigzagPath>,
    /// First violation found, if any.
    pub failure: Option<ConsistencyFailure>,
}

/// Lifted edges `(edge index, black translate)` along one period of a zigzag
/// starting at the zero translate.
fn lifted_edges(model: &DimerModel, z: &ZigzagPath) -> Vec<(usize, Vec2)> {
    let mut t = [0i64, 0];
    z.darts
        .iter()
        .map(|&d| {
            let s = model.edges()[d.edge].shift;
            if d.from_black {
                let tau = t;
                t = [t[0] + s[0], t[1] + s[1]];
                (d.edge, tau)
            } else {
                let tau = [t[0] - s[0], t[1] - s[1]];
                t = tau;
                (d.edge, tau)
            }
        })
        .collect()
}

fn cross(a: Vec2, b: Vec2) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

fn in_span(v: Vec2, c: Vec2) -> bool {
    if cross(v, c) != 0 {
        return false;
    }
    let (num, den) = if c[0] != 0 { (v[0], c[0]) } else { (v[1], c[1]) };
    num % den == 0
}

/// Reduces vectors modulo a full-rank sublattice of `Z^2`.
struct CosetReducer {
    // rows (a, b) and (0, d) of the Hermite normal form
    a: i64,
    b: i64,
    d: i64,
}

impl CosetReducer {
    fn new(c: Vec2, c2: Vec2) -> Self {
        let (h, _) = hnf(&Matrix::<i64>::from_i64(&[&c[..], &c2[..]]));
        CosetReducer {
            a: h[(0, 0)],
            b: h[(0, 1)],
            d: h[(1, 1)],
        }
    }

    fn reduce(&self, v: Vec2) -> Vec2 {
        let k = v[0].div_euclid(self.a);
        let y = v[1] - k * self.b;
        [v[0] - k * self.a, y.rem_euclid(self.d)]
    }
}

/// Checks the zigzag criterion: no homologically trivial zigzag, no lift
/// meeting itself, and no two lifts running through two common edges in the
/// same order.
pub fn is_consistent(model: &DimerModel) -> ConsistencyVerdict {
    let zigzags = zigzag_paths(model);
    let failure = find_failure(model, &zigzags);
    ConsistencyVerdict {
        consistent: failure.is_none(),
        zigzags,
        failure,
    }
}

/// A common edge of the lifts `z~` and `w~ + u`, with its positions along both.
#[derive(Clone, Copy, Debug)]
struct Meeting {
    edge: u32,
    pos_z: i64,
    pos_w: i64,
}

fn same_order(a: &Meeting, b: &Meeting) -> bool {
    (a.pos_z - b.pos_z) * (a.pos_w - b.pos_w) > 0
}

fn find_failure(model: &DimerModel, zigzags: &[ZigzagPath]) -> Option<ConsistencyFailure> {
    if let Some(i) = zigzags.iter().position(|z| z.class == [0, 0]) {
        return Some(ConsistencyFailure::TrivialZigzag { zigzag: i });
    }
    let lifts: Vec<Vec<(usize, Vec2)>> = zigzags.iter().map(|z| lifted_edges(model, z)).collect();
    let edge_id = |e: usize| model.edges()[e].id;

    // one zigzag: an edge used twice is met either by the same lift or by a
    // parallel translate, which then meets it infinitely often in one order
    for (i, lift) in lifts.iter().enumerate() {
        let c = zigzags[i].class;
        for k in 0..lift.len() {
            for l in k + 1..lift.len() {
                if lift[k].0 != lift[l].0 {
                    continue;
                }
                let e = edge_id(lift[k].0);
                return Some(if in_span(sub(lift[l].1, lift[k].1), c) {
                    ConsistencyFailure::SelfIntersection { zigzag: i, edge: e }
                } else {
                    ConsistencyFailure::SameDirection {
                        first: i,
                        second: i,
                        edges: [e, e],
                    }
                });
            }
        }
    }

    for i in 0..lifts.len() {
        for j in i + 1..lifts.len() {
            let (c, c2) = (zigzags[i].class, zigzags[j].class);
            let (lz, lw) = (lifts[i].len() as i64, lifts[j].len() as i64);
            let common: Vec<(usize, usize)> = (0..lifts[i].len())
                .flat_map(|k| (0..lifts[j].len()).map(move |l| (k, l)))
                .filter(|&(k, l)| lifts[i][k].0 == lifts[j][l].0)
                .collect();
            if common.is_empty() {
                continue;
            }
            let found = if cross(c, c2) != 0 {
                independent_pair(&lifts[i], &lifts[j], c, c2, lz, lw, &common, edge_id)
            } else {
                parallel_pair(&lifts[i], &lifts[j], c, c2, lz, lw, &common, edge_id)
            };
            if let Some(edges) = found {
                return Some(ConsistencyFailure::SameDirection {
                    first: i,
                    second: j,
                    edges,
                });
            }
        }
    }
    None
}

type Lift = [(usize, Vec2)];

/// Lifts `z~` and `w~ + u` meet at `(k, l, m, m')` when
/// `tau_k + m c = tau'_l + u + m' c'`.  For independent classes `u` fixes the
/// coset of `tau_k - tau'_l` modulo `Zc + Zc'` and then `(m, m')` uniquely.
#[allow(clippy::too_many_arguments)]
fn independent_pair(
    z: &Lift,
    w: &Lift,
    c: Vec2,
    c2: Vec2,
    lz: i64,
    lw: i64,
    common: &[(usize, usize)],
    edge_id: impl Fn(usize) -> u32,
) -> Option<[u32; 2]> {
    let reducer = CosetReducer::new(c, c2);
    let det = -cross(c, c2);
    let mut cosets: BTreeMap<Vec2, Vec<Meeting>> = BTreeMap::new();
    for &(k, l) in common {
        let delta = sub(z[k].1, w[l].1);
        let u = reducer.reduce(delta);
        // m c - m' c' = u - delta
        let r = sub(u, delta);
        let m = cross(r, [-c2[0], -c2[1]]) / det;
        let m2 = cross(c, r) / det;
        debug_assert_eq!([m * c[0] - m2 * c2[0], m * c[1] - m2 * c2[1]], r);
        cosets.entry(u).or_default().push(Meeting {
            edge: edge_id(z[k].0),
            pos_z: k as i64 + m * lz,
            pos_w: l as i64 + m2 * lw,
        });
    }
    for meetings in cosets.values() {
        for (x, a) in meetings.iter().enumerate() {
            for b in &meetings[x + 1..] {
                if same_order(a, b) {
                    let (first, second) = if a.pos_z < b.pos_z { (a, b) } else { (b, a) };
                    return Some([first.edge, second.edge]);
                }
            }
        }
    }
    None
}

/// Parallel classes `c = g p`, `c' = g' p` with `p` primitive.  Meetings of a
/// fixed pair of lifts come in families translated by a common period; along
/// such a family the positions move by `(a_z, a_w)` per step.
#[allow(clippy::too_many_arguments)]
fn parallel_pair(
    z: &Lift,
    w: &Lift,
    c: Vec2,
    c2: Vec2,
    lz: i64,
    lw: i64,
    common: &[(usize, usize)],
    edge_id: impl Fn(usize) -> u32,
) -> Option<[u32; 2]> {
    use num_integer::Integer;

    let content = c[0].gcd(&c[1]);
    let p = [c[0] / content, c[1] / content];
    let gamma = content;
    let gamma2 = if p[0] != 0 { c2[0] / p[0] } else { c2[1] / p[1] };
    let ext = p[0].extended_gcd(&p[1]);
    // q completes p to a basis with det(p, q) = 1
    let q = [-ext.y, ext.x];
    let g_ext = gamma.extended_gcd(&gamma2);
    let g = g_ext.gcd;
    let (mut az, mut aw) = (lz * gamma2 / g, lw * gamma / g);

    let mut families: BTreeMap<(i64, i64), Vec<Meeting>> = BTreeMap::new();
    for &(k, l) in common {
        let delta = sub(z[k].1, w[l].1);
        let alpha = cross(delta, q);
        let beta = cross(p, delta);
        let rho = alpha.rem_euclid(g) - alpha;
        // m gamma - m' gamma' = rho
        let m = g_ext.x * (rho / g);
        let m2 = -g_ext.y * (rho / g);
        families.entry((alpha.rem_euclid(g), beta)).or_default().push(Meeting {
            edge: edge_id(z[k].0),
            pos_z: k as i64 + m * lz,
            pos_w: l as i64 + m2 * lw,
        });
    }
    if az * aw > 0 {
        // same direction: a meeting and its translate are met in one order
        let e = families.values().next().expect("common edge")[0].edge;
        return Some([e, e]);
    }
    if az < 0 {
        az = -az;
        aw = -aw;
    }
    for meetings in families.values() {
        for a in meetings {
            for b in meetings {
                // first translate of b lying after a along z; later ones lie
                // further back along w
                let t = Integer::div_floor(&(a.pos_z - b.pos_z), &az) + 1;
                if b.pos_w + t * aw > a.pos_w {
                    return Some([a.edge, b.edge]);
                }
            }
        }
    }
    None
}
