//! Dimer models on the two-torus.
//!
//! A model is a bipartite graph given in a fundamental domain: every edge
//! carries the deck translation (`shift`, in the basis of the period lattice)
//! from the copy of its black endpoint to the copy of its white endpoint, and
//! every vertex carries the counterclockwise cyclic order of its edges.  Faces
//! are recovered by face tracing on that rotation system.

mod consistency;
mod hexagonal;
mod matching;
mod quiver;
mod steady;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DimerError;

pub use consistency::{is_consistent, zigzag_paths, ConsistencyFailure, ConsistencyVerdict, ZigzagPath};
pub use hexagonal::{all_faces_hexagonal, generate_hexagonal_dimer};
pub use matching::{perfect_matchings, perfect_matchings_bounded, polygon_to_cone, toric_polygon, MatchingLimits, PerfectMatching};
pub use quiver::{dual_quiver, mckay_quiver, quiver_isomorphic, Arrow, Quiver, QuiverWithPotential, QUIVER_ISO_BOUND};
pub use steady::{steady_decision_dimer, DimerReport};

/// Homology classes, translations and lattice points in the plane.
pub type Vec2 = [i64; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSpec {
    pub id: u32,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub id: u32,
    pub black: u32,
    pub white: u32,
    pub shift: Vec2,
}

/// Unvalidated model as it appears in a dimer file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimerData {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
    /// Vertex id (as a string key) to incident edge ids in counterclockwise order.
    pub rotations: BTreeMap<String, Vec<u32>>,
}

impl DimerData {
    pub fn from_json(text: &str) -> Result<Self, DimerError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            DimerError::Parse(format!(
                "line {}, column {}, field `{}`: {}",
                inner.line(),
                inner.column(),
                path,
                inner
            ))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// A directed traversal of an edge.  `from_black` darts run black → white.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub from_black: bool,
}

impl Dart {
    fn index(self) -> usize {
        2 * self.edge + usize::from(!self.from_black)
    }

    fn from_index(i: usize) -> Self {
        Dart {
            edge: i / 2,
            from_black: i.is_multiple_of(2),
        }
    }

    pub fn reversed(self) -> Self {
        Dart {
            edge: self.edge,
            from_black: !self.from_black,
        }
    }
}

/// A face as the cyclic sequence of darts with the face on their left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    /// Number of edge-sides.
    pub fn sides(&self) -> usize {
        self.darts.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: u32,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: u32,
    /// Index (not id) of the black endpoint.
    pub black: usize,
    /// Index (not id) of the white endpoint.
    pub white: usize,
    pub shift: Vec2,
}

/// A validated dimer model with its traced faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimerModel {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    /// Per vertex index, incident edge indices in counterclockwise order.
    rotations: Vec<Vec<usize>>,
    /// Per vertex index, position of each incident edge in `rotations`.
    rotation_pos: Vec<HashMap<usize, usize>>,
    faces: Vec<Face>,
    dart_face: Vec<usize>,
}

impl DimerModel {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn rotation(&self, vertex: usize) -> &[usize] {
        &self.rotations[vertex]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Face with `dart` on its boundary (the face to the left of the dart).
    pub fn face_of(&self, dart: Dart) -> usize {
        self.dart_face[dart.index()]
    }

    pub fn tail(&self, dart: Dart) -> usize {
        let e = &self.edges[dart.edge];
        if dart.from_black {
            e.black
        } else {
            e.white
        }
    }

    pub fn head(&self, dart: Dart) -> usize {
        self.tail(dart.reversed())
    }

    /// Translation picked up when walking along `dart`.
    pub fn dart_shift(&self, dart: Dart) -> Vec2 {
        let s = self.edges[dart.edge].shift;
        if dart.from_black {
            s
        } else {
            [-s[0], -s[1]]
        }
    }

    /// Neighbour of `edge` around `vertex`: the next one counterclockwise, or
    /// clockwise when `ccw` is false.
    pub fn rotate(&self, vertex: usize, edge: usize, ccw: bool) -> usize {
        let rot = &self.rotations[vertex];
        let pos = self.rotation_pos[vertex][&edge];
        let n = rot.len();
        if ccw {
            rot[(pos + 1) % n]
        } else {
            rot[(pos + n - 1) % n]
        }
    }

    /// Leaves the head of `dart` along `edge`.
    fn continue_along(&self, dart: Dart, edge: usize) -> Dart {
        let v = self.head(dart);
        Dart {
            edge,
            from_black: self.vertices[v].color == Color::Black,
        }
    }

    /// Next dart on the boundary of the face to the left of `dart`: at the
    /// head, turn to the clockwise neighbour of the incoming edge.
    pub fn next_in_face(&self, dart: Dart) -> Dart {
        let v = self.head(dart);
        self.continue_along(dart, self.rotate(v, dart.edge, false))
    }

    pub fn vertex_index(&self, id: u32) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_index(&self, id: u32) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Back to the file representation.
    pub fn to_data(&self) -> DimerData {
        DimerData {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexSpec {
                    id: v.id,
                    color: v.color,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    id: e.id,
                    black: self.vertices[e.black].id,
                    white: self.vertices[e.white].id,
                    shift: e.shift,
                })
                .collect(),
            rotations: self
                .vertices
                .iter()
                .enumerate()
                .map(|(i, v)| (v.id.to_string(), self.rotations[i].iter().map(|&e| self.edges[e].id).collect()))
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DimerError> {
        validate_dimer(&DimerData::from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        self.to_data().to_json()
    }
}

/// Checks bipartiteness, the rotation system, connectivity, minimum degree,
/// the torus Euler characteristic, closure of every face in the universal
/// cover, that the edge shifts generate the whole period lattice, and that
/// the rotations are counterclockwise with respect to it.
pub fn validate_dimer(raw: &DimerData) -> Result<DimerModel, DimerError> {
    if raw.vertices.is_empty() || raw.edges.is_empty() {
        return Err(DimerError::Empty);
    }
    let mut index_of: HashMap<u32, usize> = HashMap::new();
    for (i, v) in raw.vertices.iter().enumerate() {
        if index_of.insert(v.id, i).is_some() {
            return Err(DimerError::DuplicateVertex(v.id));
        }
    }
    let mut edge_index_of: HashMap<u32, usize> = HashMap::new();
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (k, e) in raw.edges.iter().enumerate() {
        if edge_index_of.insert(e.id, k).is_some() {
            return Err(DimerError::DuplicateEdge(e.id));
        }
        let lookup = |vid: u32| {
            index_of
                .get(&vid)
                .copied()
                .ok_or(DimerError::UnknownVertex { edge: e.id, vertex: vid })
        };
        let (b, w) = (lookup(e.black)?, lookup(e.white)?);
        if raw.vertices[b].color != Color::Black {
            return Err(DimerError::NotBipartite {
                edge: e.id,
                reason: format!("`black` endpoint {} is white", e.black),
            });
        }
        if raw.vertices[w].color != Color::White {
            return Err(DimerError::NotBipartite {
                edge: e.id,
                reason: format!("`white` endpoint {} is black", e.white),
            });
        }
        edges.push(Edge {
            id: e.id,
            black: b,
            white: w,
            shift: e.shift,
        });
    }
    let vertices: Vec<Vertex> = raw
        .vertices
        .iter()
        .map(|v| Vertex {
            id: v.id,
            color: v.color,
        })
        .collect();

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (k, e) in edges.iter().enumerate() {
        incident[e.black].push(k);
        incident[e.white].push(k);
    }
    for key in raw.rotations.keys() {
        let known = key.parse::<u32>().ok().filter(|id| index_of.contains_key(id));
        if known.is_none() {
            return Err(DimerError::Rotation {
                vertex: key.parse().unwrap_or(u32::MAX),
                reason: format!("rotation given for unknown vertex {key:?}"),
            });
        }
    }
    let mut rotations = Vec::with_capacity(vertices.len());
    let mut rotation_pos = Vec::with_capacity(vertices.len());
    for (i, v) in vertices.iter().enumerate() {
        let ids = raw.rotations.get(&v.id.to_string()).ok_or_else(|| DimerError::Rotation {
            vertex: v.id,
            reason: "no rotation given".into(),
        })?;
        let mut rot = Vec::with_capacity(ids.len());
        let mut pos = HashMap::new();
        for (p, eid) in ids.iter().enumerate() {
            let k = *edge_index_of.get(eid).ok_or_else(|| DimerError::Rotation {
                vertex: v.id,
                reason: format!("unknown edge {eid}"),
            })?;
            if !incident[i].contains(&k) {
                return Err(DimerError::Rotation {
                    vertex: v.id,
                    reason: format!("edge {eid} is not incident"),
                });
            }
            if pos.insert(k, p).is_some() {
                return Err(DimerError::Rotation {
                    vertex: v.id,
                    reason: format!("edge {eid} listed twice"),
                });
            }
            rot.push(k);
        }
        if rot.len() != incident[i].len() {
            return Err(DimerError::Rotation {
                vertex: v.id,
                reason: format!("lists {} of {} incident edges", rot.len(), incident[i].len()),
            });
        }
        if rot.len() < 2 {
            return Err(DimerError::LowDegree {
                vertex: v.id,
                degree: rot.len(),
            });
        }
        rotations.push(rot);
        rotation_pos.push(pos);
    }

    // connectivity, and a translation potential on a spanning tree
    let mut potential: Vec<Option<Vec2>> = vec![None; vertices.len()];
    potential[0] = Some([0, 0]);
    let mut queue = VecDeque::from([0usize]);
    let mut tree_edge = vec![false; edges.len()];
    while let Some(v) = queue.pop_front() {
        let pv = potential[v].expect("visited");
        for &k in &incident[v] {
            let e = &edges[k];
            let (other, delta) = if e.black == v {
                (e.white, e.shift)
            } else {
                (e.black, [-e.shift[0], -e.shift[1]])
            };
            if potential[other].is_none() {
                potential[other] = Some([pv[0] + delta[0], pv[1] + delta[1]]);
                tree_edge[k] = true;
                queue.push_back(other);
            }
        }
    }
    if let Some(i) = potential.iter().position(Option::is_none) {
        return Err(DimerError::Disconnected(vertices[i].id));
    }

    let mut model = DimerModel {
        vertices,
        edges,
        rotations,
        rotation_pos,
        faces: Vec::new(),
        dart_face: Vec::new(),
    };
    trace_faces(&mut model);

    let chi = model.euler_characteristic();
    if chi != 0 {
        return Err(DimerError::Euler {
            vertices: model.num_vertices(),
            edges: model.num_edges(),
            faces: model.num_faces(),
            chi,
        });
    }
    for (f, face) in model.faces.iter().enumerate() {
        let t = face.darts.iter().fold([0, 0], |acc, &d| {
            let s = model.dart_shift(d);
            [acc[0] + s[0], acc[1] + s[1]]
        });
        if t != [0, 0] {
            return Err(DimerError::OpenFace { face: f, translation: t });
        }
    }

    // cycle classes of the non-tree edges must generate Z^2
    let classes: Vec<Vec2> = model
        .edges
        .iter()
        .enumerate()
        .filter(|(k, _)| !tree_edge[*k])
        .map(|(_, e)| {
            let pb = potential[e.black].expect("connected");
            let pw = potential[e.white].expect("connected");
            [pb[0] + e.shift[0] - pw[0], pb[1] + e.shift[1] - pw[1]]
        })
        .collect();
    let index = lattice_index(&classes);
    if index != 1 {
        return Err(DimerError::PeriodLattice { index });
    }
    match consistency::orientation_sign(&model) {
        Ok(Some(1)) | Ok(None) => Ok(model),
        Ok(Some(_)) => Err(DimerError::Orientation(
            "rotations are clockwise with respect to the period basis".into(),
        )),
        Err((i, j)) => Err(DimerError::Orientation(format!(
            "zigzag paths {i} and {j} meet in a way no torus embedding allows"
        ))),
    }
}

/// Index of the lattice spanned by `vs` in `Z^2` (0 when not of full rank):
/// the gcd of all 2×2 minors.
fn lattice_index(vs: &[Vec2]) -> i64 {
    let mut g: i64 = 0;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let m = vs[i][0] * vs[j][1] - vs[i][1] * vs[j][0];
            g = num_integer::gcd(g, m);
        }
    }
    g
}

fn trace_faces(model: &mut DimerModel) {
    let ndarts = 2 * model.edges.len();
    let mut dart_face = vec![usize::MAX; ndarts];
    let mut faces = Vec::new();
    for start in 0..ndarts {
        if dart_face[start] != usize::MAX {
            continue;
        }
        let f = faces.len();
        let mut darts = Vec::new();
        let mut d = Dart::from_index(start);
        loop {
            dart_face[d.index()] = f;
            darts.push(d);
            d = model.next_in_face(d);
            if d.index() == start {
                break;
            }
        }
        faces.push(Face { darts });
    }
    model.faces = faces;
    model.dart_face = dart_face;
}

/// A vertex placed in the plane, used to derive rotations from a drawing.
#[derive(Clone, Debug)]
pub struct EmbeddedVertex {
    pub id: u32,
    pub color: Color,
    pub position: Vec2,
}

/// Builds a model from a periodic straight-line drawing: vertices in one
/// fundamental domain, the period lattice basis, and edges with their shifts.
/// Rotations are read off from the edge directions.
pub fn from_periodic_embedding(
    vertices: &[EmbeddedVertex],
    edges: &[EdgeSpec],
    period: [Vec2; 2],
) -> Result<DimerModel, DimerError> {
    let pos: HashMap<u32, Vec2> = vertices.iter().map(|v| (v.id, v.position)).collect();
    let mut around: BTreeMap<u32, Vec<(Vec2, u32)>> = vertices.iter().map(|v| (v.id, Vec::new())).collect();
    for e in edges {
        let (Some(pb), Some(pw)) = (pos.get(&e.black), pos.get(&e.white)) else {
            return Err(DimerError::UnknownVertex {
                edge: e.id,
                vertex: if pos.contains_key(&e.black) { e.white } else { e.black },
            });
        };
        let offset = [
            e.shift[0] * period[0][0] + e.shift[1] * period[1][0],
            e.shift[0] * period[0][1] + e.shift[1] * period[1][1],
        ];
        let dir = [pw[0] + offset[0] - pb[0], pw[1] + offset[1] - pb[1]];
        around.get_mut(&e.black).expect("known").push((dir, e.id));
        around.get_mut(&e.white).expect("known").push(([-dir[0], -dir[1]], e.id));
    }
    let mut rotations = BTreeMap::new();
    for (vid, mut dirs) in around {
        dirs.sort_by(|a, b| angle_cmp(a.0, b.0));
        if let Some(w) = dirs.windows(2).find(|w| angle_cmp(w[0].0, w[1].0) == std::cmp::Ordering::Equal) {
            return Err(DimerError::Rotation {
                vertex: vid,
                reason: format!("edges {} and {} leave in the same direction", w[0].1, w[1].1),
            });
        }
        rotations.insert(vid.to_string(), dirs.into_iter().map(|(_, id)| id).collect());
    }
    validate_dimer(&DimerData {
        vertices: vertices
            .iter()
            .map(|v| VertexSpec {
                id: v.id,
                color: v.color,
            })
            .collect(),
        edges: edges.to_vec(),
        rotations,
    })
}

/// Exact counterclockwise angle order of nonzero integer directions, starting
/// from the positive x-axis.
fn angle_cmp(a: Vec2, b: Vec2) -> std::cmp::Ordering {
    let half = |v: Vec2| if v[1] > 0 || (v[1] == 0 && v[0] > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128;
        0.cmp(&cross)
    })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn data(edges: &[(u32, u32, u32, Vec2)], rotations: &[(u32, &[u32])], colors: &[(u32, Color)]) -> DimerData {
        DimerData {
            vertices: colors.iter().map(|&(id, color)| VertexSpec { id, color }).collect(),
            edges: edges
                .iter()
                .map(|&(id, black, white, shift)| EdgeSpec { id, black, white, shift })
                .collect(),
            rotations: rotations.iter().map(|(v, r)| (v.to_string(), r.to_vec())).collect(),
        }
    }

    /// One black and one white vertex joined by three edges.
    pub fn one_hexagon_data() -> DimerData {
        // black at the origin, white at (-1/3, -1/3): the three white copies
        // sit at angles 225°, 333° and 117° seen from the black vertex
        data(
            &[(0, 0, 1, [0, 0]), (1, 0, 1, [1, 0]), (2, 0, 1, [0, 1])],
            &[(0, &[2, 0, 1]), (1, &[0, 1, 2])],
            &[(0, Color::Black), (1, Color::White)],
        )
    }

    pub fn one_hexagon() -> DimerModel {
        validate_dimer(&one_hexagon_data()).unwrap()
    }

    /// One black and one white vertex joined by four edges.
    pub fn conifold_data() -> DimerData {
        // white copies at the four diagonal neighbours of the black vertex
        data(
            &[(0, 0, 1, [0, 0]), (1, 0, 1, [1, 0]), (2, 0, 1, [0, 1]), (3, 0, 1, [1, 1])],
            &[(0, &[3, 2, 0, 1]), (1, &[0, 1, 3, 2])],
            &[(0, Color::Black), (1, Color::White)],
        )
    }

    pub fn conifold() -> DimerModel {
        validate_dimer(&conifold_data()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn one_hexagon_faces() {
        let m = one_hexagon();
        assert_eq!((m.num_vertices(), m.num_edges(), m.num_faces()), (2, 3, 1));
        assert_eq!(m.faces()[0].sides(), 6);
    }

    #[test]
    fn conifold_faces() {
        let m = conifold();
        assert_eq!(m.num_faces(), 2);
        assert!(m.faces().iter().all(|f| f.sides() == 4));
    }

    #[test]
    fn embedding_reproduces_hand_rotations() {
        let verts = [
            EmbeddedVertex {
                id: 0,
                color: Color::Black,
                position: [0, 0],
            },
            EmbeddedVertex {
                id: 1,
                color: Color::White,
                position: [-1, -1],
            },
        ];
        let hex = one_hexagon_data();
        let m = from_periodic_embedding(&verts, &hex.edges, [[3, 0], [0, 3]]).unwrap();
        assert_eq!(m, one_hexagon());
        let con = conifold_data();
        let m = from_periodic_embedding(&verts, &con.edges, [[2, 0], [0, 2]]).unwrap();
        assert_eq!(m, conifold());
    }

    #[test]
    fn broken_rotation_is_an_euler_error() {
        let mut raw = one_hexagon_data();
        raw.rotations.insert("1".into(), vec![0, 2, 1]);
        assert!(matches!(validate_dimer(&raw), Err(DimerError::Euler { chi: 2, .. })));
    }

    #[test]
    fn broken_shift_is_rejected() {
        let mut raw = one_hexagon_data();
        raw.edges[1].shift = [2, 0];
        assert_eq!(validate_dimer(&raw), Err(DimerError::PeriodLattice { index: 2 }));
        raw.edges[1].shift = [0, 1];
        assert_eq!(validate_dimer(&raw), Err(DimerError::PeriodLattice { index: 0 }));
    }

    #[test]
    fn mirrored_rotations_are_rejected() {
        let mut raw = one_hexagon_data();
        raw.rotations.insert("0".into(), vec![1, 0, 2]);
        raw.rotations.insert("1".into(), vec![2, 1, 0]);
        assert!(matches!(validate_dimer(&raw), Err(DimerError::Orientation(_))));
    }

    #[test]
    fn structural_errors() {
        let mut raw = one_hexagon_data();
        raw.edges[0].black = 1;
        raw.edges[0].white = 0;
        assert!(matches!(validate_dimer(&raw), Err(DimerError::NotBipartite { edge: 0, .. })));

        let mut raw = one_hexagon_data();
        raw.rotations.insert("0".into(), vec![0, 1]);
        assert!(matches!(validate_dimer(&raw), Err(DimerError::Rotation { vertex: 0, .. })));

        let mut raw = one_hexagon_data();
        raw.rotations.insert("7".into(), vec![0]);
        assert!(matches!(validate_dimer(&raw), Err(DimerError::Rotation { .. })));

        let mut raw = one_hexagon_data();
        raw.vertices.push(VertexSpec {
            id: 2,
            color: Color::Black,
        });
        raw.vertices.push(VertexSpec {
            id: 3,
            color: Color::White,
        });
        raw.edges.push(EdgeSpec {
            id: 3,
            black: 2,
            white: 3,
            shift: [0, 0],
        });
        raw.edges.push(EdgeSpec {
            id: 4,
            black: 2,
            white: 3,
            shift: [1, 0],
        });
        raw.rotations.insert("2".into(), vec![3, 4]);
        raw.rotations.insert("3".into(), vec![4, 3]);
        assert_eq!(validate_dimer(&raw), Err(DimerError::Disconnected(2)));

        let mut raw = one_hexagon_data();
        raw.vertices[0].id = 1;
        assert_eq!(validate_dimer(&raw), Err(DimerError::DuplicateVertex(1)));
    }

    #[test]
    fn json_round_trip_and_errors() {
        let m = one_hexagon();
        let again = DimerModel::from_json(&m.to_json()).unwrap();
        assert_eq!(again, m);
        let err = DimerData::from_json("{\"vertices\": [{\"id\": 0, \"color\": \"red\"}], \"edges\": [], \"rotations\": {}}")
            .unwrap_err();
        let DimerError::Parse(msg) = err else { panic!() };
        assert!(msg.contains("vertices[0].color"), "{msg}");
    }

    #[test]
    fn angle_order() {
        let mut dirs = vec![[0, -1], [1, 0], [-1, 0], [1, 1], [0, 1], [-1, -1]];
        dirs.sort_by(|a, b| angle_cmp(*a, *b));
        assert_eq!(dirs, vec![[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]);
    }
}
