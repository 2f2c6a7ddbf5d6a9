//! Lattice polygons: convex hulls of finite multisets of points in `Z^2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::ConeError;
use crate::toric::{cones_equivalent, validate_cone, ConeData};

pub type Point = [i64; 2];

/// A multiset of lattice points with its convex hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon {
    points: BTreeMap<Point, usize>,
    hull: Vec<Point>,
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    (a[0] - o[0]) as i128 * (b[1] - o[1]) as i128 - (a[1] - o[1]) as i128 * (b[0] - o[0]) as i128
}

impl LatticePolygon {
    pub fn from_points(points: impl IntoIterator<Item = Point>) -> Self {
        let mut counts = BTreeMap::new();
        for p in points {
            *counts.entry(p).or_insert(0) += 1;
        }
        let hull = convex_hull(&counts.keys().copied().collect::<Vec<_>>());
        LatticePolygon { points: counts, hull }
    }

    /// Distinct points with their multiplicities, in lexicographic order.
    pub fn points(&self) -> &BTreeMap<Point, usize> {
        &self.points
    }

    /// Strictly convex hull vertices, counterclockwise, starting from the
    /// lexicographically least one.
    pub fn hull(&self) -> &[Point] {
        &self.hull
    }

    pub fn is_two_dimensional(&self) -> bool {
        self.hull.len() >= 3
    }

    pub fn twice_area(&self) -> i64 {
        let n = self.hull.len();
        if n < 3 {
            return 0;
        }
        (0..n)
            .map(|i| {
                let (a, b) = (self.hull[i], self.hull[(i + 1) % n]);
                a[0] * b[1] - a[1] * b[0]
            })
            .sum()
    }

    /// Lattice points on the boundary of the hull.
    pub fn boundary_count(&self) -> i64 {
        let n = self.hull.len();
        let step = |i: usize| {
            let (a, b) = (self.hull[i], self.hull[(i + 1) % n]);
            num_integer::gcd(b[0] - a[0], b[1] - a[1])
        };
        match n {
            0 | 1 => n as i64,
            2 => step(0) + 1,
            _ => (0..n).map(step).sum(),
        }
    }

    /// Lattice points strictly inside the hull (Pick's formula).
    pub fn interior_count(&self) -> i64 {
        if !self.is_two_dimensional() {
            return 0;
        }
        (self.twice_area() - self.boundary_count() + 2) / 2
    }

    /// Primitive outward normals of the hull edges, each repeated by the
    /// lattice length of its edge, counterclockwise.
    pub fn edge_normals(&self) -> Vec<Point> {
        let n = self.hull.len();
        if n < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for i in 0..n {
            let (a, b) = (self.hull[i], self.hull[(i + 1) % n]);
            let d = [b[0] - a[0], b[1] - a[1]];
            let g = num_integer::gcd(d[0], d[1]);
            for _ in 0..g {
                out.push([d[1] / g, -d[0] / g]);
            }
        }
        out
    }

    /// Cone over the polygon placed at height one.
    pub fn cone(&self) -> Result<ConeData, ConeError> {
        let rays = self
            .hull
            .iter()
            .map(|p| vec![BigInt::from(p[0]), BigInt::from(p[1]), BigInt::from(1)])
            .collect();
        validate_cone(rays, 3)
    }

    /// Equality of hulls up to translation and `GL(2, Z)`.
    pub fn lattice_equivalent(&self, other: &LatticePolygon) -> bool {
        if self.hull.len() != other.hull.len() || self.twice_area() != other.twice_area() {
            return false;
        }
        if !self.is_two_dimensional() {
            return self.boundary_count() == other.boundary_count();
        }
        match (self.cone(), other.cone()) {
            (Ok(a), Ok(b)) => cones_equivalent(&a, &b),
            _ => false,
        }
    }

    /// Short description of the hull's shape.
    pub fn describe(&self) -> String {
        let named: [(&str, &[Point]); 4] = [
            ("unit triangle", &[[0, 0], [1, 0], [0, 1]]),
            ("unit square", &[[0, 0], [1, 0], [1, 1], [0, 1]]),
            ("2×2 square", &[[0, 0], [2, 0], [2, 2], [0, 2]]),
            ("unit hexagon", &[[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]]),
        ];
        for (name, pts) in named {
            if self.lattice_equivalent(&LatticePolygon::from_points(pts.iter().copied())) {
                return name.to_string();
            }
        }
        let kind = match self.hull.len() {
            0 => return "empty".into(),
            1 => return "point".into(),
            2 => return format!("segment of lattice length {}", self.boundary_count() - 1),
            3 => "triangle".to_string(),
            4 => "quadrilateral".to_string(),
            5 => "pentagon".to_string(),
            6 => "hexagon".to_string(),
            k => format!("{k}-gon"),
        };
        let a = self.twice_area();
        let area = if a % 2 == 0 { format!("{}", a / 2) } else { format!("{a}/2") };
        format!("{kind} of area {area}")
    }
}

/// Andrew's monotone chain without collinear points.
fn convex_hull(sorted: &[Point]) -> Vec<Point> {
    if sorted.len() <= 2 {
        return sorted.to_vec();
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in sorted {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in sorted.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}
