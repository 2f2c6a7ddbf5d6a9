//! Affine toric data: cone validation, divisor class groups, simpliciality and
//! Gorenstein tests, and the passage between simplicial cones and diagonal
//! abelian quotient presentations `R = S^G`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::abgroup::{FinAbGroup, GroupElement};
use crate::error::ConeError;
use crate::intlat::{self, gcd_all, Matrix};
use crate::polyhedral::nonnegative_solution_exists;

/// A validated strongly convex, full-dimensional rational cone given by its
/// primitive extreme rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeData {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
}

impl ConeData {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    /// `n × d` matrix whose rows are the rays.  Read as a map `M → Z^n`,
    /// `m ↦ (⟨m, v_i⟩)_i`, it is the pairing matrix of the cone.
    pub fn ray_matrix(&self) -> Matrix<BigInt> {
        Matrix::from_rows(self.rays.clone(), self.dim).expect("validated rays share the dimension")
    }

    pub fn from_json(text: &str) -> Result<Self, ConeError> {
        let file: ConeFile = parse_json(text)?;
        let rays = file
            .rays
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        validate_cone(rays, file.dim)
    }

    pub fn to_json(&self) -> String {
        let file = ConeFile {
            dim: self.dim,
            rays: self
                .rays
                .iter()
                .map(|r| r.iter().map(|x| x.to_i64().expect("ray coordinate fits i64")).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }
}

/// On-disk cone format: `{"dim": d, "rays": [[…], …]}`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, ConeError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        ConeError::Parse(format!(
            "line {}, column {}, field `{}`: {}",
            inner.line(),
            inner.column(),
            path,
            inner
        ))
    })
}

/// Checks every cone invariant and returns the validated cone.
///
/// Extremality and strong convexity are decided by exact rational
/// Fourier–Motzkin feasibility.
pub fn validate_cone(rays: Vec<Vec<BigInt>>, dim: usize) -> Result<ConeData, ConeError> {
    if dim < 2 {
        return Err(ConeError::DimensionTooSmall(dim));
    }
    for (index, r) in rays.iter().enumerate() {
        if r.len() != dim {
            return Err(ConeError::WrongLength {
                index,
                dim,
                found: r.len(),
            });
        }
        let g = gcd_all(r);
        if g.is_zero() {
            return Err(ConeError::ZeroRay { index });
        }
        if !g.is_one() {
            return Err(ConeError::NonPrimitive {
                index,
                gcd: g.to_string(),
            });
        }
        if let Some(first) = rays[..index].iter().position(|q| q == r) {
            return Err(ConeError::Duplicate { index, first });
        }
    }
    let m = Matrix::from_rows(rays.clone(), dim).expect("lengths checked");
    let rank = m.rank();
    if rank != dim {
        return Err(ConeError::NotFullDimensional { rank, dim });
    }

    // a line exists iff some λ >= 0 with Σλ = 1 has Σ λ_i v_i = 0
    let mut eq: Vec<Vec<BigInt>> = (0..dim).map(|j| rays.iter().map(|r| r[j].clone()).collect()).collect();
    eq.push(vec![BigInt::one(); rays.len()]);
    let mut rhs = vec![BigInt::zero(); dim];
    rhs.push(BigInt::one());
    if nonnegative_solution_exists(&eq, &rhs) {
        return Err(ConeError::NotStronglyConvex);
    }

    for index in 0..rays.len() {
        let others: Vec<&Vec<BigInt>> = rays.iter().enumerate().filter(|(i, _)| *i != index).map(|(_, r)| r).collect();
        if others.is_empty() {
            continue;
        }
        let eq: Vec<Vec<BigInt>> = (0..dim).map(|j| others.iter().map(|r| r[j].clone()).collect()).collect();
        if nonnegative_solution_exists(&eq, &rays[index]) {
            return Err(ConeError::NotExtreme { index });
        }
    }
    Ok(ConeData { dim, rays })
}

/// Convenience wrapper over [`validate_cone`] for machine-integer rays.
pub fn cone_from_i64(rays: &[&[i64]], dim: usize) -> Result<ConeData, ConeError> {
    validate_cone(
        rays.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        dim,
    )
}

/// `Cl(R)` together with the class of every torus-invariant prime divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    pub group: FinAbGroup,
    pub ray_classes: Vec<GroupElement>,
}

impl ClassGroup {
    /// Whether the ray classes generate the group.  Only decidable here for
    /// finite groups; `None` otherwise.
    pub fn rays_generate(&self) -> Option<bool> {
        self.group
            .is_finite()
            .then(|| self.group.is_generated_by(&self.ray_classes).unwrap_or(false))
    }
}

/// Class group as the cokernel of the pairing matrix `M → Z^n`.
pub fn class_group(cone: &ConeData) -> ClassGroup {
    let (group, ray_classes) = FinAbGroup::cokernel(&cone.ray_matrix());
    ClassGroup { group, ray_classes }
}

pub fn is_simplicial(cone: &ConeData) -> bool {
    cone.num_rays() == cone.dim
}

/// Finiteness of the class group, cross-checked against simpliciality.  The
/// two computations disagreeing is reported as an internal fault.
pub fn cl_is_finite(cone: &ConeData) -> Result<bool, ConeError> {
    let cl = class_group(cone);
    let finite = cl.group.is_finite();
    if finite != is_simplicial(cone) {
        return Err(ConeError::Internal(format!(
            "class group {} has free rank {} but the cone has {} rays in dimension {}",
            cl.group,
            cl.group.free_rank(),
            cone.num_rays(),
            cone.dim
        )));
    }
    if cl.group.free_rank() != cone.num_rays() - cone.dim {
        return Err(ConeError::Internal(format!(
            "class group free rank {} differs from n - d = {}",
            cl.group.free_rank(),
            cone.num_rays() - cone.dim
        )));
    }
    Ok(finite)
}

/// The integral `m` with `⟨m, v_i⟩ = 1` for every ray, if one exists.
pub fn is_gorenstein(cone: &ConeData) -> Option<Vec<BigInt>> {
    let ones = vec![BigInt::one(); cone.num_rays()];
    let sol = intlat::solve_rational(&cone.ray_matrix(), &ones).expect("shapes agree")?;
    // full column rank, so the rational solution is unique
    sol.iter()
        .all(|x| x.is_integer())
        .then(|| sol.into_iter().map(|x| x.to_integer()).collect())
}

/// A finite abelian group acting diagonally on `k[[x_1, …, x_d]]`.
///
/// Characters are stored as elements of `group` itself, read through the
/// pairing [`FinAbGroup::pairing`]: weight `w_i` is the character by which
/// the group scales `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub group: FinAbGroup,
    pub weights: Vec<GroupElement>,
}

impl QuotientPresentation {
    pub fn new(group: FinAbGroup, weights: Vec<GroupElement>) -> Result<Self, ConeError> {
        if !group.is_finite() {
            return Err(crate::error::GroupError::Infinite {
                free_rank: group.free_rank(),
            }
            .into());
        }
        for w in &weights {
            group.check(w)?;
        }
        Ok(QuotientPresentation { group, weights })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Sum of the weights is zero (the action lies in SL).
    pub fn is_special(&self) -> bool {
        self.group.sum(&self.weights).map(|s| s.is_zero()).unwrap_or(false)
    }

    /// The weights generate the character group, i.e. only the identity pairs
    /// trivially with all of them.
    pub fn is_faithful(&self) -> bool {
        self.group.is_generated_by(&self.weights).unwrap_or(false)
    }

    /// A nonzero element that pairs trivially with every weight, if any.
    pub fn kernel_witness(&self) -> Result<Option<GroupElement>, ConeError> {
        Ok(self.group.enumerate()?.into_iter().find(|g| {
            !g.is_zero()
                && self
                    .weights
                    .iter()
                    .all(|w| self.group.pairing(g, w).map(|v| v.is_zero()).unwrap_or(false))
        }))
    }

    /// Nonidentity elements acting as pseudo-reflections: they pair trivially
    /// with all but at most one weight.
    pub fn pseudo_reflections(&self) -> Result<Vec<GroupElement>, ConeError> {
        let d = self.weights.len();
        let mut out = Vec::new();
        for g in self.group.enumerate()? {
            if g.is_zero() {
                continue;
            }
            let mut fixed = 0;
            for w in &self.weights {
                if self.group.pairing(&g, w)?.is_zero() {
                    fixed += 1;
                }
            }
            if fixed + 1 >= d {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Same action up to an automorphism of the group and a permutation of the
    /// coordinates.  See [`weights_equivalent`].
    pub fn equivalent(&self, other: &QuotientPresentation) -> bool {
        self.group == other.group && weights_equivalent(&self.group, &self.weights, &other.weights)
    }
}

/// `G = Z^d / (lattice of the rays)` with the characters of the coordinate
/// functions, for a simplicial cone.
pub fn quotient_presentation(cone: &ConeData) -> Result<QuotientPresentation, ConeError> {
    if !is_simplicial(cone) {
        return Err(ConeError::NotSimplicial {
            rays: cone.num_rays(),
            dim: cone.dim,
        });
    }
    let d = cone.dim;
    // columns are the rays
    let a = cone.ray_matrix().transpose();
    let smith = intlat::snf(&a);
    let torsion_idx: Vec<usize> = (0..smith.rank())
        .filter(|&i| !smith.invariant_factors[i].is_one())
        .collect();
    let group = FinAbGroup::new(
        0,
        torsion_idx.iter().map(|&i| smith.invariant_factors[i].clone()).collect(),
    )?;
    let u_inv = intlat::inverse_unimodular(&smith.u).map_err(|e| ConeError::Internal(e.to_string()))?;
    // rows of a^{-1} form the dual basis: ⟨m_i, v_j⟩ = δ_ij
    let dual = intlat::inverse_rational(&a)
        .map_err(|e| ConeError::Internal(e.to_string()))?
        .ok_or_else(|| ConeError::Internal("simplicial ray matrix is singular".into()))?;
    let lifts: Vec<Vec<BigInt>> = torsion_idx.iter().map(|&i| u_inv.column(i)).collect();

    let mut weights = Vec::with_capacity(d);
    for m in &dual {
        let values: Vec<BigRational> = lifts
            .iter()
            .map(|n| {
                m.iter()
                    .zip(n)
                    .fold(BigRational::zero(), |acc, (mi, ni)| acc + mi * BigRational::from_integer(ni.clone()))
            })
            .collect();
        weights.push(group.character_from_values(&values)?);
    }
    Ok(QuotientPresentation { group, weights })
}

/// A simplicial cone whose quotient presentation is `(group, weights)` up to
/// automorphism and coordinate permutation.
///
/// The lattice is the overlattice `N = Z^d + Σ_g Z·(χ_1(g), …, χ_d(g))`; the
/// rays are the standard basis vectors written in a Hermite basis of `N`.
pub fn group_to_cone(group: &FinAbGroup, weights: &[GroupElement]) -> Result<ConeData, ConeError> {
    let d = weights.len();
    if d < 2 {
        return Err(ConeError::DimensionTooSmall(d));
    }
    let pres = QuotientPresentation::new(group.clone(), weights.to_vec())?;
    if !pres.is_faithful() {
        let witness = pres.kernel_witness()?.map(|g| g.to_string()).unwrap_or_else(|| "?".into());
        return Err(ConeError::NotFaithful { element: witness });
    }
    let exponent = group.exponent().expect("finite");
    let mut gens: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut v = vec![BigInt::zero(); d];
            v[i] = exponent.clone();
            v
        })
        .collect();
    for k in 0..group.torsion().len() {
        let g = group.torsion_generator(k);
        let mut v = Vec::with_capacity(d);
        for w in weights {
            let value = group.pairing(&g, w)? * BigRational::from_integer(exponent.clone());
            v.push(value.to_integer());
        }
        gens.push(v);
    }
    let (h, _) = intlat::hnf(&Matrix::from_rows(gens, d).expect("rectangular"));
    let basis = Matrix::from_rows((0..d).map(|i| h.row(i).to_vec()).collect(), d).expect("square");
    let inv = intlat::inverse_rational(&basis)
        .map_err(|e| ConeError::Internal(e.to_string()))?
        .ok_or_else(|| ConeError::Internal("overlattice basis is singular".into()))?;
    let scale = BigRational::from_integer(exponent);
    let mut rays = Vec::with_capacity(d);
    for row in inv {
        // (exponent · e_i) · basis^{-1}
        let coords: Vec<BigRational> = row.into_iter().map(|x| x * scale.clone()).collect();
        if coords.iter().any(|x| !x.is_integer()) {
            return Err(ConeError::Internal("overlattice does not contain Z^d".into()));
        }
        let ints: Vec<BigInt> = coords.into_iter().map(|x| x.to_integer()).collect();
        let g = gcd_all(&ints);
        rays.push(ints.into_iter().map(|x| x / g.clone()).collect());
    }
    validate_cone(rays, d)
}

/// Whether the weight tuples `a` and `b` on the same group agree up to a
/// group automorphism and a permutation of coordinates.
///
/// For a fixed pairing of coordinates the assignment `a_i ↦ b_i` extends to an
/// isomorphism `⟨a⟩ → ⟨b⟩` exactly when the subgroup of `G × G` generated by the
/// pairs `(a_i, b_i)` is the graph of a bijection, i.e. has the same order as
/// both `⟨a⟩` and `⟨b⟩`.
pub fn weights_equivalent(group: &FinAbGroup, a: &[GroupElement], b: &[GroupElement]) -> bool {
    if a.len() != b.len() || !group.is_finite() {
        return false;
    }
    let (Ok(ha), Ok(hb)) = (group.subgroup_generated(a), group.subgroup_generated(b)) else {
        return false;
    };
    if ha.len() != hb.len() {
        return false;
    }
    let target = ha.len();
    permutations(b.len()).into_iter().any(|perm| {
        let pairs: Vec<(GroupElement, GroupElement)> =
            a.iter().cloned().zip(perm.iter().map(|&j| b[j].clone())).collect();
        graph_order(group, &pairs, target) == Some(target)
    })
}

/// Order of the subgroup of `G × G` generated by `pairs`, or `None` once it
/// exceeds `cap`.
fn graph_order(group: &FinAbGroup, pairs: &[(GroupElement, GroupElement)], cap: usize) -> Option<usize> {
    let add = |x: &(GroupElement, GroupElement), y: &(GroupElement, GroupElement)| {
        (
            group.add(&x.0, &y.0).expect("same group"),
            group.add(&x.1, &y.1).expect("same group"),
        )
    };
    let mut closure: HashSet<(GroupElement, GroupElement)> = HashSet::from([(group.zero(), group.zero())]);
    for g in pairs {
        if closure.contains(g) {
            continue;
        }
        let base: Vec<_> = closure.iter().cloned().collect();
        let mut shift = g.clone();
        while !closure.contains(&shift) {
            for h in &base {
                closure.insert(add(h, &shift));
            }
            if closure.len() > cap {
                return None;
            }
            shift = add(&shift, g);
        }
    }
    Some(closure.len())
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Whether some `T ∈ GL(d, Z)` maps the ray set of `a` onto the ray set of `b`.
///
/// Exact: fixes `d` independent rays of `a`, tries every injective assignment
/// of them to rays of `b`, and tests the induced rational map for
/// integrality, unimodularity and agreement on the remaining rays.
pub fn cones_equivalent(a: &ConeData, b: &ConeData) -> bool {
    if a.dim != b.dim || a.num_rays() != b.num_rays() {
        return false;
    }
    let d = a.dim;
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..a.num_rays() {
        chosen.push(i);
        let m = Matrix::from_rows(chosen.iter().map(|&k| a.rays[k].clone()).collect(), d).expect("rect");
        if m.rank() < chosen.len() {
            chosen.pop();
        }
        if chosen.len() == d {
            break;
        }
    }
    let base = Matrix::from_rows(chosen.iter().map(|&k| a.rays[k].clone()).collect(), d).expect("square");
    let Ok(Some(base_inv)) = intlat::inverse_rational(&base) else {
        return false;
    };
    let target: BTreeSet<&Vec<BigInt>> = b.rays.iter().collect();
    let mut found = false;
    injections(d, b.num_rays(), &mut |images| {
        if found {
            return;
        }
        // T = base^{-1} · (images as rows)
        let mut t = Matrix::<BigInt>::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let v = (0..d).fold(BigRational::zero(), |acc, k| {
                    acc + base_inv[i][k].clone() * BigRational::from_integer(b.rays[images[k]][j].clone())
                });
                if !v.is_integer() {
                    return;
                }
                t[(i, j)] = v.to_integer();
            }
        }
        if !t.is_unimodular() {
            return;
        }
        let mapped: BTreeSet<Vec<BigInt>> = a
            .rays
            .iter()
            .map(|r| t.transpose().apply(r).expect("dims agree"))
            .collect();
        if mapped.iter().collect::<BTreeSet<_>>() == target {
            found = true;
        }
    });
    found
}

fn injections(k: usize, n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, n: usize, cur: &mut Vec<usize>, used: &mut [bool], f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, n, cur, used, f);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(k, n, &mut Vec::new(), &mut vec![false; n], f)
}

/// |det| of the ray matrix of a simplicial cone.
pub fn ray_determinant(cone: &ConeData) -> Option<BigInt> {
    is_simplicial(cone).then(|| cone.ray_matrix().det().expect("square").abs())
}
