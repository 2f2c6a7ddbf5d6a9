use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("matrix {rows}x{cols} needs {} entries, got {found}", rows * cols)]
    EntryCount { rows: usize, cols: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },
    #[error("shape mismatch: {left:?} against {right:?}")]
    Shape { left: (usize, usize), right: (usize, usize) },
    #[error("matrix {rows}x{cols} is not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unimodular")]
    NotUnimodular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("element shape does not match the group: expected {expected_free} free and {expected_torsion} torsion coordinates, got {found_free} and {found_torsion}")]
    ShapeMismatch {
        expected_free: usize,
        expected_torsion: usize,
        found_free: usize,
        found_torsion: usize,
    },
    #[error("torsion residue {value} is not reduced modulo {modulus}")]
    Unreduced { value: String, modulus: String },
    #[error("operation needs a finite group, this one has free rank {free_rank}")]
    Infinite { free_rank: usize },
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: String, bound: u64 },
    #[error("empty class set: a module is a nonzero sum of summands")]
    EmptyClassSet,
    #[error("invalid invariant factors: {0}")]
    InvalidInvariants(String),
    #[error("cannot parse group notation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("ray {index} has {found} coordinates, expected {dim}")]
    WrongLength { index: usize, dim: usize, found: usize },
    #[error("ray {index} is zero")]
    ZeroRay { index: usize },
    #[error("ray {index} is not primitive (gcd of entries is {gcd})")]
    NonPrimitive { index: usize, gcd: String },
    #[error("ray {index} duplicates ray {first}")]
    Duplicate { index: usize, first: usize },
    #[error("rays span a space of dimension {rank}, expected {dim}")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("cone contains a line (a nonnegative combination of the rays vanishes)")]
    NotStronglyConvex,
    #[error("ray {index} is not extreme: it lies in the cone of the other rays")]
    NotExtreme { index: usize },
    #[error("cone has {rays} rays in dimension {dim}; a simplicial cone is required")]
    NotSimplicial { rays: usize, dim: usize },
    #[error("weights are not jointly faithful: nonzero element {element} pairs trivially with every weight")]
    NotFaithful { element: String },
    #[error("expected {expected} weights, got {found}")]
    WeightCount { expected: usize, found: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cannot parse cone file: {0}")]
    Parse(String),
    #[error("internal fault: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimerError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(u32),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(u32),
    #[error("edge {edge} refers to unknown vertex {vertex}")]
    UnknownVertex { edge: u32, vertex: u32 },
    #[error("edge {edge} is not bipartite: {reason}")]
    NotBipartite { edge: u32, reason: String },
    #[error("rotation of vertex {vertex} is inconsistent with its incident edges: {reason}")]
    Rotation { vertex: u32, reason: String },
    #[error("vertex {vertex} has degree {degree}; at least 2 is required")]
    LowDegree { vertex: u32, degree: usize },
    #[error("graph is disconnected (vertex {0} is unreachable)")]
    Disconnected(u32),
    #[error("Euler characteristic V - E + F = {vertices} - {edges} + {faces} = {chi}, expected 0 for the torus")]
    Euler { vertices: usize, edges: usize, faces: usize, chi: i64 },
    #[error("face {face} does not close up on the universal cover (boundary translation {translation:?})")]
    OpenFace { face: usize, translation: [i64; 2] },
    #[error("edge shifts generate a sublattice of index {index} in Z^2; the fundamental domain is not a single torus period")]
    PeriodLattice { index: i64 },
    #[error("rotation system does not match the orientation of the period lattice: {0}")]
    Orientation(String),
    #[error("model is empty")]
    Empty,
    #[error("model has no perfect matching")]
    NoPerfectMatching,
    #[error("model has {edges} edges, above the matching enumeration bound {bound}")]
    TooManyEdges { edges: usize, bound: usize },
    #[error("more than {bound} perfect matchings")]
    TooManyMatchings { bound: usize },
    #[error("degenerate polygon: hull is not two-dimensional")]
    DegeneratePolygon,
    #[error("quiver has {vertices} vertices, above the isomorphism bound {bound}")]
    QuiverTooLarge { vertices: usize, bound: usize },
    #[error("need exactly 3 weights, got {0}")]
    WeightCount(usize),
    #[error("weights do not generate the group, so the representation is not faithful")]
    NotFaithful,
    #[error("weights sum to {sum}, not zero (SL(3) condition)")]
    WeightSum { sum: String },
    #[error("labeling map Z^2 -> G given by the first two weights is not surjective (image has order {image} in a group of order {order})")]
    NotSurjective { image: String, order: String },
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cannot parse dimer file: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("class set is undecided at this layer: {0}")]
    Undecided(String),
    #[error("internal fault: {0}")]
    Internal(String),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Dimer(#[from] DimerError),
}
