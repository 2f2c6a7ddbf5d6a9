//! Finitely generated abelian groups `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` in invariant
//! factor form, with element arithmetic and subgroup closure for the finite
//! case.
//!
//! Elements are plain data: they carry no reference to their group, so every
//! operation takes the group explicitly and checks the element shape.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::GroupError;
use crate::intlat::{self, Matrix};

/// Default cap on the number of elements any enumeration may produce.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// `Z^free_rank ⊕ Z/torsion[0] ⊕ …` with `torsion[i] | torsion[i+1]`, all `≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

/// An element, stored as free coordinates followed by reduced torsion residues.
/// The derived ordering is lexicographic on `(free, torsion)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl GroupElement {
    pub fn new(free: Vec<BigInt>, torsion: Vec<BigInt>) -> Self {
        GroupElement { free, torsion }
    }

    /// Element of a purely torsion group from machine residues.
    pub fn torsion_from(residues: &[i64]) -> Self {
        GroupElement {
            free: Vec::new(),
            torsion: residues.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }

    /// All coordinates, free part first.
    pub fn coordinates(&self) -> impl Iterator<Item = &BigInt> {
        self.free.iter().chain(&self.torsion)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coordinates().map(ToString::to_string).collect();
        match coords.len() {
            0 => write!(f, "0"),
            1 => write!(f, "{}", coords[0]),
            _ => write!(f, "({})", coords.join(",")),
        }
    }
}

impl FinAbGroup {
    /// Validated constructor; `torsion` must already be a divisibility chain
    /// of integers `≥ 2`.  Use [`FinAbGroup::iso_invariants`] for arbitrary
    /// factor lists.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self, GroupError> {
        let two = BigInt::from(2);
        if let Some(d) = torsion.iter().find(|d| **d < two) {
            return Err(GroupError::InvalidInvariants(format!("factor {d} is below 2")));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(GroupError::InvalidInvariants(format!("{} does not divide {}", w[0], w[1])));
        }
        Ok(FinAbGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        FinAbGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::iso_invariants(0, &[BigInt::from(n)]).expect("positive order")
    }

    /// Canonical invariant-factor form of `Z^free_rank ⊕ ⊕ Z/factors[i]`.
    /// Factors equal to one are dropped; the rest are rearranged into a
    /// divisibility chain through the Smith form of the diagonal presentation.
    pub fn iso_invariants(free_rank: usize, factors: &[BigInt]) -> Result<Self, GroupError> {
        if let Some(d) = factors.iter().find(|d| !d.is_positive()) {
            return Err(GroupError::InvalidInvariants(format!("factor {d} is not positive")));
        }
        let n = factors.len();
        let mut diag = Matrix::<BigInt>::zeros(n, n);
        for (i, d) in factors.iter().enumerate() {
            diag[(i, i)] = d.clone();
        }
        let torsion = intlat::snf(&diag)
            .invariant_factors
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        Ok(FinAbGroup { free_rank, torsion })
    }

    /// Group presented as `Z^rows / (column lattice of a)`, together with the
    /// class of each standard basis vector.
    pub fn cokernel(a: &Matrix<BigInt>) -> (Self, Vec<GroupElement>) {
        let c = intlat::cokernel(a);
        let group = FinAbGroup {
            free_rank: c.free_rank,
            torsion: c.torsion,
        };
        let images = c
            .images
            .into_iter()
            .map(|(free, torsion)| GroupElement { free, torsion })
            .collect();
        (group, images)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of a finite group, `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// Exponent (largest invariant factor) of a finite group.
    pub fn exponent(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.last().cloned().unwrap_or_else(BigInt::one))
    }

    fn require_finite(&self) -> Result<(), GroupError> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(GroupError::Infinite {
                free_rank: self.free_rank,
            })
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            free: vec![BigInt::zero(); self.free_rank],
            torsion: vec![BigInt::zero(); self.torsion.len()],
        }
    }

    /// Element with the given coordinates, torsion residues reduced.
    pub fn element(&self, free: Vec<BigInt>, torsion: Vec<BigInt>) -> Result<GroupElement, GroupError> {
        self.check_shape(&free, &torsion)?;
        let torsion = torsion
            .into_iter()
            .zip(&self.torsion)
            .map(|(x, d)| x.mod_floor(d))
            .collect();
        Ok(GroupElement { free, torsion })
    }

    /// Element from a flat coordinate list (free coordinates first).
    pub fn element_from_coords(&self, coords: &[BigInt]) -> Result<GroupElement, GroupError> {
        let r = self.free_rank.min(coords.len());
        self.element(coords[..r].to_vec(), coords[r..].to_vec())
    }

    /// The `i`-th torsion generator (unit vector in residue coordinates).
    pub fn torsion_generator(&self, i: usize) -> GroupElement {
        let mut e = self.zero();
        e.torsion[i] = BigInt::one();
        e
    }

    fn check_shape(&self, free: &[BigInt], torsion: &[BigInt]) -> Result<(), GroupError> {
        if free.len() != self.free_rank || torsion.len() != self.torsion.len() {
            return Err(GroupError::ShapeMismatch {
                expected_free: self.free_rank,
                expected_torsion: self.torsion.len(),
                found_free: free.len(),
                found_torsion: torsion.len(),
            });
        }
        Ok(())
    }

    /// Checks that `e` is an element of this group in reduced form.
    pub fn check(&self, e: &GroupElement) -> Result<(), GroupError> {
        self.check_shape(&e.free, &e.torsion)?;
        for (x, d) in e.torsion.iter().zip(&self.torsion) {
            if x.is_negative() || x >= d {
                return Err(GroupError::Unreduced {
                    value: x.to_string(),
                    modulus: d.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.check(e).is_ok()
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&b.torsion)
                .zip(&self.torsion)
                .map(|((x, y), d)| (x + y).mod_floor(d))
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        Ok(self.scale_unchecked(a, &BigInt::from(-1)))
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    pub fn scale(&self, a: &GroupElement, k: &BigInt) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        Ok(self.scale_unchecked(a, k))
    }

    fn scale_unchecked(&self, a: &GroupElement, k: &BigInt) -> GroupElement {
        GroupElement {
            free: a.free.iter().map(|x| x * k).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.torsion)
                .map(|(x, d)| (x * k).mod_floor(d))
                .collect(),
        }
    }

    /// Sum of a list of elements.
    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a GroupElement>) -> Result<GroupElement, GroupError> {
        items.into_iter().try_fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Order of an element; `None` for elements of infinite order.
    pub fn element_order(&self, a: &GroupElement) -> Result<Option<BigInt>, GroupError> {
        self.check(a)?;
        if a.free.iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        Ok(Some(a.torsion.iter().zip(&self.torsion).fold(BigInt::one(), |acc, (x, d)| {
            let ord = d / x.gcd(d);
            acc.lcm(&ord)
        })))
    }

    /// Every element of a finite group, in lexicographic order.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>, GroupError> {
        self.enumerate_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn enumerate_bounded(&self, bound: u64) -> Result<Vec<GroupElement>, GroupError> {
        self.require_finite()?;
        let order = self.order().expect("finite");
        if order > BigInt::from(bound) {
            return Err(GroupError::TooLarge {
                order: order.to_string(),
                bound,
            });
        }
        let moduli: Vec<u64> = self.torsion.iter().map(|d| d.to_u64().expect("bounded")).collect();
        let mut out = Vec::with_capacity(order.to_usize().expect("bounded"));
        let mut digits = vec![0u64; moduli.len()];
        loop {
            out.push(GroupElement {
                free: Vec::new(),
                torsion: digits.iter().map(|&x| BigInt::from(x)).collect(),
            });
            // odometer, last coordinate fastest
            let mut i = moduli.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < moduli[i] {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated<'a>(
        &self,
        gens: impl IntoIterator<Item = &'a GroupElement>,
    ) -> Result<BTreeSet<GroupElement>, GroupError> {
        self.subgroup_generated_bounded(gens, DEFAULT_ENUMERATION_BOUND)
    }

    pub fn subgroup_generated_bounded<'a>(
        &self,
        gens: impl IntoIterator<Item = &'a GroupElement>,
        bound: u64,
    ) -> Result<BTreeSet<GroupElement>, GroupError> {
        self.require_finite()?;
        let mut closure = BTreeSet::from([self.zero()]);
        for g in gens {
            self.check(g)?;
            if closure.contains(g) {
                continue;
            }
            // adjoin the cosets H + g, H + 2g, … until kg falls back into H
            let base: Vec<GroupElement> = closure.iter().cloned().collect();
            let mut shift = g.clone();
            while !closure.contains(&shift) {
                for h in &base {
                    closure.insert(self.add_unchecked(h, &shift));
                }
                if closure.len() as u64 > bound {
                    return Err(GroupError::TooLarge {
                        order: format!("more than {}", closure.len() - 1),
                        bound,
                    });
                }
                shift = self.add_unchecked(&shift, g);
            }
        }
        Ok(closure)
    }

    /// Whether the nonempty set `m` is a subgroup.
    pub fn is_subgroup<'a>(&self, m: impl IntoIterator<Item = &'a GroupElement>) -> Result<bool, GroupError> {
        let set: BTreeSet<&GroupElement> = m.into_iter().collect();
        if set.is_empty() {
            return Err(GroupError::EmptyClassSet);
        }
        self.require_finite()?;
        for x in &set {
            self.check(x)?;
        }
        if !set.contains(&self.zero()) {
            return Ok(false);
        }
        for a in &set {
            for b in &set {
                if !set.contains(&self.add_unchecked(a, &self.scale_unchecked(b, &BigInt::from(-1)))) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether `gens` generate the whole (finite) group.
    pub fn is_generated_by<'a>(&self, gens: impl IntoIterator<Item = &'a GroupElement>) -> Result<bool, GroupError> {
        let order = self.order().ok_or(GroupError::Infinite {
            free_rank: self.free_rank,
        })?;
        let h = self.subgroup_generated(gens)?;
        Ok(BigInt::from(h.len()) == order)
    }

    /// Pairing `G × G → Q/Z`, `⟨a, χ⟩ = Σ aᵢ χᵢ / dᵢ mod 1`, which identifies a
    /// finite group with its character group.  The result lies in `[0, 1)`.
    pub fn pairing(&self, a: &GroupElement, chi: &GroupElement) -> Result<BigRational, GroupError> {
        self.require_finite()?;
        self.check(a)?;
        self.check(chi)?;
        let total = a
            .torsion
            .iter()
            .zip(&chi.torsion)
            .zip(&self.torsion)
            .fold(BigRational::zero(), |acc, ((x, y), d)| {
                acc + BigRational::new(x * y, d.clone())
            });
        Ok(frac(&total))
    }

    /// Character in residue coordinates whose value on the `i`-th torsion
    /// generator is `values[i]` (each a multiple of `1/dᵢ`, read mod 1).
    pub fn character_from_values(&self, values: &[BigRational]) -> Result<GroupElement, GroupError> {
        if values.len() != self.torsion.len() {
            return Err(GroupError::ShapeMismatch {
                expected_free: 0,
                expected_torsion: self.torsion.len(),
                found_free: 0,
                found_torsion: values.len(),
            });
        }
        let mut coords = Vec::with_capacity(values.len());
        for (v, d) in values.iter().zip(&self.torsion) {
            let scaled = v * BigRational::from_integer(d.clone());
            if !scaled.is_integer() {
                return Err(GroupError::InvalidInvariants(format!(
                    "character value {v} is not a multiple of 1/{d}"
                )));
            }
            coords.push(scaled.to_integer());
        }
        self.element(Vec::new(), coords)
    }

    /// Parses an element written as comma-separated coordinates, optionally
    /// wrapped in parentheses (`3`, `(1,0)`, `1,0`).
    pub fn parse_element(&self, s: &str) -> Result<GroupElement, GroupError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        // the trivial group's only element, written `0` or `()`
        if self.free_rank + self.torsion.len() == 0 && matches!(t.trim(), "" | "0") {
            return Ok(self.zero());
        }
        let coords = t
            .split(',')
            .map(|p| {
                p.trim().parse::<BigInt>().map_err(|e| GroupError::Parse {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let expected = self.free_rank + self.torsion.len();
        if coords.len() != expected {
            return Err(GroupError::Parse {
                input: s.to_string(),
                reason: format!("expected {expected} coordinates, got {}", coords.len()),
            });
        }
        self.element_from_coords(&coords)
    }

    /// Parses a list of elements.  Tuples may be parenthesised
    /// (`(0,0),(1,0)`) or separated by `;` (`0,0;1,0`); in a group with at most
    /// one coordinate a plain comma list (`0,2,4`) is also accepted.
    pub fn parse_element_list(&self, s: &str) -> Result<Vec<GroupElement>, GroupError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Vec::new());
        }
        let pieces: Vec<String> = if s.contains('(') {
            let mut out = Vec::new();
            let mut rest = s;
            while let Some(open) = rest.find('(') {
                let close = rest[open..].find(')').ok_or_else(|| GroupError::Parse {
                    input: s.to_string(),
                    reason: "unbalanced parenthesis".into(),
                })? + open;
                out.push(rest[open + 1..close].to_string());
                rest = &rest[close + 1..];
            }
            out
        } else if s.contains(';') || self.free_rank + self.torsion.len() > 1 {
            s.split(';').map(str::to_string).collect()
        } else {
            s.split(',').map(str::to_string).collect()
        };
        pieces.iter().map(|p| self.parse_element(p)).collect()
    }
}

/// Fractional part in `[0, 1)`.
pub(crate) fn frac(x: &BigRational) -> BigRational {
    x - BigRational::from_integer(x.floor().to_integer())
}

impl fmt::Display for FinAbGroup {
    /// `Z^r + Z/d1 + Z/d2 …`; the trivial group is written `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl FromStr for FinAbGroup {
    type Err = GroupError;

    /// Accepts the display notation (`Z^2 + Z/2 + Z/4`, `Z`, `0`) as well as a
    /// bare comma list of torsion factors (`14`, `2,2`).  The result is always
    /// canonicalised.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err("empty input"));
        }
        if t == "0" || t == "trivial" {
            return Ok(FinAbGroup::trivial());
        }
        let mut free_rank = 0usize;
        let mut factors = Vec::new();
        if !t.contains('Z') {
            for p in t.split(',') {
                factors.push(p.trim().parse::<BigInt>().map_err(|e| err(&e.to_string()))?);
            }
        } else {
            for part in t.split('+') {
                let p: String = part.chars().filter(|c| !c.is_whitespace()).collect();
                if p == "Z" {
                    free_rank += 1;
                } else if let Some(r) = p.strip_prefix("Z^") {
                    free_rank += r.parse::<usize>().map_err(|e| err(&e.to_string()))?;
                } else if let Some(d) = p.strip_prefix("Z/") {
                    factors.push(d.parse::<BigInt>().map_err(|e| err(&e.to_string()))?);
                } else {
                    return Err(err(&format!("unrecognised summand {part:?}")));
                }
            }
        }
        FinAbGroup::iso_invariants(free_rank, &factors).map_err(|e| err(&e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(factors: &[i64]) -> FinAbGroup {
        FinAbGroup::iso_invariants(0, &factors.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()).unwrap()
    }

    fn el(r: &[i64]) -> GroupElement {
        GroupElement::torsion_from(r)
    }

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn addition() {
        let z4 = g(&[4]);
        assert_eq!(z4.add(&el(&[3]), &el(&[2])).unwrap(), el(&[1]));

        let zz2 = FinAbGroup::new(1, big(&[2])).unwrap();
        let a = GroupElement::new(big(&[1]), big(&[1]));
        let b = GroupElement::new(big(&[-1]), big(&[1]));
        assert!(zz2.add(&a, &b).unwrap().is_zero());
        assert!(zz2.add(&a, &zz2.neg(&a).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn shape_is_validated() {
        let z4 = g(&[4]);
        assert!(matches!(z4.add(&el(&[1, 0]), &el(&[1])), Err(GroupError::ShapeMismatch { .. })));
        assert!(matches!(z4.add(&el(&[4]), &el(&[1])), Err(GroupError::Unreduced { .. })));
    }

    #[test]
    fn enumeration() {
        assert_eq!(FinAbGroup::trivial().enumerate().unwrap(), vec![GroupElement::default_for_trivial()]);
        assert_eq!(g(&[2, 2]).enumerate().unwrap().len(), 4);
        let z14 = g(&[14]).enumerate().unwrap();
        assert_eq!(z14, (0..14).map(|i| el(&[i])).collect::<Vec<_>>());
        assert!(matches!(
            FinAbGroup::new(1, vec![]).unwrap().enumerate(),
            Err(GroupError::Infinite { .. })
        ));
        assert!(matches!(g(&[1000]).enumerate_bounded(999), Err(GroupError::TooLarge { .. })));
    }

    #[test]
    fn generated_subgroups() {
        let z6 = g(&[6]);
        let h = z6.subgroup_generated([&el(&[2])]).unwrap();
        assert_eq!(h, [0, 2, 4].iter().map(|&i| el(&[i])).collect());

        let z4 = g(&[4]);
        assert_eq!(z4.subgroup_generated([]).unwrap(), BTreeSet::from([el(&[0])]));

        let v4 = g(&[2, 2]);
        assert_eq!(v4.subgroup_generated([&el(&[1, 0]), &el(&[0, 1])]).unwrap().len(), 4);
    }

    #[test]
    fn subgroup_test() {
        let z4 = g(&[4]);
        assert!(z4.is_subgroup(&[el(&[0]), el(&[2])]).unwrap());
        assert!(!z4.is_subgroup(&[el(&[0]), el(&[1]), el(&[2])]).unwrap());
        assert!(g(&[6]).is_subgroup(&[el(&[0]), el(&[2]), el(&[4])]).unwrap());
        assert_eq!(z4.is_subgroup(&[]), Err(GroupError::EmptyClassSet));
    }

    #[test]
    fn canonical_invariants() {
        assert_eq!(g(&[2, 3]), g(&[6]));
        assert_eq!(g(&[2, 2]).torsion(), &big(&[2, 2])[..]);
        assert_eq!(g(&[4, 6]).torsion(), &big(&[2, 12])[..]);
        assert_eq!(g(&[1, 1]), FinAbGroup::trivial());
        assert!(FinAbGroup::iso_invariants(0, &big(&[0])).is_err());
        assert!(FinAbGroup::new(0, big(&[4, 6])).is_err());
    }

    #[test]
    fn notation_round_trip() {
        let grp = FinAbGroup::new(1, big(&[2, 2])).unwrap();
        assert_eq!(grp.to_string(), "Z + Z/2 + Z/2");
        assert_eq!("Z + Z/2 + Z/2".parse::<FinAbGroup>().unwrap(), grp);
        assert_eq!("Z^3".parse::<FinAbGroup>().unwrap().free_rank(), 3);
        assert_eq!("2,2".parse::<FinAbGroup>().unwrap(), g(&[2, 2]));
        assert_eq!("Z/2 + Z/3".parse::<FinAbGroup>().unwrap(), g(&[6]));
        assert_eq!("0".parse::<FinAbGroup>().unwrap(), FinAbGroup::trivial());
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
        assert!("Q/2".parse::<FinAbGroup>().is_err());
    }

    #[test]
    fn element_lists() {
        let v4 = g(&[2, 2]);
        let xs = v4.parse_element_list("(0,0),(1,0)").unwrap();
        assert_eq!(xs, vec![el(&[0, 0]), el(&[1, 0])]);
        assert_eq!(v4.parse_element_list("0,0;1,1").unwrap().len(), 2);
        assert_eq!(g(&[4]).parse_element_list("0,1,2").unwrap().len(), 3);
        assert_eq!(g(&[4]).parse_element("7").unwrap(), el(&[3]));
        assert!(v4.parse_element("1").is_err());
    }

    #[test]
    fn pairing_identifies_characters() {
        let z14 = g(&[14]);
        let v = z14.pairing(&el(&[1]), &el(&[5])).unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(5), BigInt::from(14)));
        let chi = z14.character_from_values(&[v]).unwrap();
        assert_eq!(chi, el(&[5]));
    }

    #[test]
    fn element_orders() {
        let grp = g(&[2, 12]);
        assert_eq!(grp.element_order(&el(&[1, 3])).unwrap(), Some(BigInt::from(4)));
        assert_eq!(grp.element_order(&el(&[0, 0])).unwrap(), Some(BigInt::from(1)));
    }

    impl GroupElement {
        fn default_for_trivial() -> Self {
            GroupElement::new(Vec::new(), Vec::new())
        }
    }
}
