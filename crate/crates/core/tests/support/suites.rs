//! Randomized and exhaustive property suites.  Each suite returns `Err` with
//! the first counterexample.

use std::collections::BTreeSet;
use std::path::Path;

use nccr_core::dimer::{
    all_faces_hexagonal, dual_quiver, generate_hexagonal_dimer, is_consistent, mckay_quiver, polygon_to_cone,
    quiver_isomorphic, steady_decision_dimer, toric_polygon, zigzag_paths, MatchingLimits, ZigzagPath,
};
use nccr_core::intlat::{snf, Matrix};
use nccr_core::nccr::{generates_class_group, is_steady_class_set, steady_splitting_decision_toric, ClassSet};
use nccr_core::toric::{
    cl_is_finite, class_group, group_to_cone, is_gorenstein, is_simplicial, quotient_presentation, validate_cone,
};
use nccr_core::{ConeData, ConeError, DimerModel, FinAbGroup, GroupElement};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        max_global_rejects: 1_000_000,
        failure_persistence: None,
        ..Config::default()
    })
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k × k` minors.
fn minors_gcd(a: &[Vec<i64>], k: usize) -> i128 {
    let (m, n) = (a.len(), a[0].len());
    let mut g = 0;
    for rows in subsets(m, k) {
        for cols in subsets(n, k) {
            let sub: Vec<Vec<i128>> = rows.iter().map(|&r| cols.iter().map(|&c| a[r][c] as i128).collect()).collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

/// Rank by fraction-free elimination.
fn rank(a: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let (f, g) = (m[i][c], m[r][c]);
            let pivot = m[r].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot) {
                *x = *x * g - p * f;
            }
            let h = m[i].iter().fold(0, |acc, &x| gcd(acc, x));
            if h > 1 {
                m[i].iter_mut().for_each(|x| *x /= h);
            }
        }
        r += 1;
    }
    r
}

fn to_big(a: &[Vec<i64>]) -> Matrix<BigInt> {
    let rows: Vec<&[i64]> = a.iter().map(Vec::as_slice).collect();
    Matrix::from_i64(&rows)
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x as i128)) as i64;
    if g <= 1 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

fn cone_of(rays: &[Vec<i64>]) -> Result<ConeData, ConeError> {
    let d = rays[0].len();
    validate_cone(rays.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), d)
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(m, n)| prop::collection::vec(prop::collection::vec(-9i64..=9, n), m))
}

/// `U·A·V = D`, unimodular transforms, the divisibility chain, and the
/// products of invariant factors against gcds of minors.
pub fn snf_suite(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&small_matrix(), |a| {
            let big = to_big(&a);
            let s = snf(&big);
            prop_assert_eq!(s.u.mul(&big).unwrap().mul(&s.v).unwrap(), s.d.clone());
            prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
            for i in 0..s.d.rows() {
                for j in 0..s.d.cols() {
                    let expected = if i == j && i < s.rank() {
                        s.invariant_factors[i].clone()
                    } else {
                        BigInt::from(0)
                    };
                    prop_assert_eq!(&s.d[(i, j)], &expected);
                }
            }
            for w in s.invariant_factors.windows(2) {
                prop_assert!(w[0] > BigInt::from(0) && (&w[1] % &w[0]) == BigInt::from(0));
            }
            let mut product = BigInt::from(1);
            for k in 1..=a.len().min(a[0].len()) {
                let expected = minors_gcd(&a, k);
                let got = if k <= s.rank() {
                    product *= &s.invariant_factors[k - 1];
                    product.clone()
                } else {
                    BigInt::from(0)
                };
                prop_assert_eq!(got, BigInt::from(expected), "k = {}", k);
            }
            let small = snf(&to_big(&a).convert::<i64>());
            let narrow: Vec<BigInt> = small.invariant_factors.iter().map(|&x| BigInt::from(x)).collect();
            prop_assert_eq!(narrow, s.invariant_factors);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Invariant factors of every abelian group of order at most 16.
const SMALL_GROUPS: &[&[u64]] = &[
    &[],
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[7],
    &[8],
    &[9],
    &[10],
    &[11],
    &[12],
    &[13],
    &[14],
    &[15],
    &[16],
    &[2, 2],
    &[2, 4],
    &[2, 6],
    &[3, 3],
    &[2, 8],
    &[4, 4],
    &[2, 2, 2],
    &[2, 2, 4],
    &[2, 2, 2, 2],
];

fn residues(moduli: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..m).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Closure of `s` under pairwise differences.
fn difference_closure(moduli: &[u64], s: &BTreeSet<Vec<u64>>) -> BTreeSet<Vec<u64>> {
    let mut closure = s.clone();
    loop {
        let mut next = closure.clone();
        for a in &closure {
            for b in &closure {
                next.insert(a.iter().zip(b).zip(moduli).map(|((x, y), m)| (x + m - y) % m).collect());
            }
        }
        if next.len() == closure.len() {
            return closure;
        }
        closure = next;
    }
}

fn check_subset(moduli: &[u64], elements: &[Vec<u64>], mask: u64) -> Result<(), String> {
    let chosen: BTreeSet<Vec<u64>> = elements
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e.clone())
        .collect();
    let group = FinAbGroup::new(0, moduli.iter().map(|&m| BigInt::from(m)).collect()).map_err(|e| e.to_string())?;
    let as_element = |e: &Vec<u64>| GroupElement::torsion_from(&e.iter().map(|&x| x as i64).collect::<Vec<_>>());
    let set = ClassSet::new(group, chosen.iter().map(as_element)).map_err(|e| e.to_string())?;
    let expected = difference_closure(moduli, &chosen) == chosen;
    let got = is_steady_class_set(&set).map_err(|e| e.to_string())?;
    if got != expected {
        return Err(format!("{moduli:?} {chosen:?}: subgroup test says {got}"));
    }
    let mut with_zero = chosen.clone();
    with_zero.insert(vec![0; moduli.len()]);
    let generated: BTreeSet<GroupElement> = difference_closure(moduli, &with_zero).iter().map(as_element).collect();
    if set.closure().map_err(|e| e.to_string())? != generated {
        return Err(format!("{moduli:?} {chosen:?}: generated subgroup differs"));
    }
    let generates = generates_class_group(&set).map_err(|e| e.to_string())?;
    if generates != (generated.len() == elements.len()) {
        return Err(format!("{moduli:?} {chosen:?}: generation test says {generates}"));
    }
    Ok(())
}

/// The subgroup test against brute-force difference closure: random subsets
/// of every group of order at most 16, and all subsets of groups of order at
/// most 8.
pub fn subgroup_suite(cases: u32) -> Result<(), String> {
    for moduli in SMALL_GROUPS {
        let elements = residues(moduli);
        if elements.len() <= 8 {
            for mask in 1..1u64 << elements.len() {
                check_subset(moduli, &elements, mask)?;
            }
        }
    }
    let strategy = (0..SMALL_GROUPS.len()).prop_flat_map(|g| {
        let order: u64 = SMALL_GROUPS[g].iter().product();
        (Just(g), 1u64..1 << order)
    });
    runner(cases)
        .run(&strategy, |(g, mask)| {
            let moduli = SMALL_GROUPS[g];
            check_subset(moduli, &residues(moduli), mask).map_err(TestCaseError::fail)
        })
        .map_err(|e| e.to_string())
}

/// Random rays in the upper half space; non-extreme rays are discarded.
fn random_cone() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2usize..=4)
        .prop_flat_map(|d| {
            let ray = (prop::collection::vec(-3i64..=3, d - 1), 1i64..=3).prop_map(|(mut v, h)| {
                v.push(h);
                primitive(v)
            });
            prop::collection::vec(ray, d..=6)
        })
        .prop_map(|rays| {
            let mut seen = BTreeSet::new();
            rays.into_iter().filter(|r| seen.insert(r.clone())).collect()
        })
}

fn prune(mut rays: Vec<Vec<i64>>) -> Option<ConeData> {
    loop {
        match cone_of(&rays) {
            Ok(c) => return Some(c),
            Err(ConeError::NotExtreme { index }) => {
                rays.remove(index);
            }
            Err(_) => return None,
        }
    }
}

/// Finiteness of the class group against simpliciality, with the free rank
/// checked against `n - rank`.
pub fn finiteness_suite(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&random_cone(), |rays| {
            let cone = prune(rays);
            prop_assume!(cone.is_some());
            let cone = cone.unwrap();
            let rows: Vec<Vec<i64>> = cone
                .rays()
                .iter()
                .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
                .collect();
            let n = rows.len();
            let r = rank(&rows);
            prop_assert_eq!(r, cone.dim());
            prop_assert_eq!(cl_is_finite(&cone).unwrap(), n == r);
            prop_assert_eq!(is_simplicial(&cone), n == r);
            prop_assert_eq!(class_group(&cone).group.free_rank(), n - r);
            let report = steady_splitting_decision_toric(&cone).unwrap();
            prop_assert_eq!(report.verdict, n == r);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn simplicial_rays() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2usize..=4).prop_flat_map(|d| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, d).prop_map(primitive), d)
    })
}

/// Class group against the quotient group on simplicial cones with
/// `|det| ≤ 100`; invariant factors against gcds of minors; the NCCR witness
/// against `|det|`; and the round trip through `group_to_cone`.
pub fn simplicial_suite(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&simplicial_rays(), |rays| {
            let rows: Vec<Vec<i128>> = rays.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
            let det = det(&rows).abs();
            prop_assume!(det != 0 && det <= 100);
            let cone = cone_of(&rays).unwrap();
            let cl = class_group(&cone).group;
            let q = quotient_presentation(&cone).unwrap();
            prop_assert_eq!(&cl, &q.group);
            prop_assert_eq!(cl.order().unwrap(), BigInt::from(det));
            let d = rays.len();
            let mut factors = Vec::new();
            for k in 1..=d {
                let f = minors_gcd(&rays, k) / minors_gcd(&rays, k - 1);
                if f != 1 {
                    factors.push(BigInt::from(f));
                }
            }
            prop_assert_eq!(cl.torsion(), &factors[..]);
            prop_assert_eq!(q.is_special(), is_gorenstein(&cone).is_some());

            let report = steady_splitting_decision_toric(&cone).unwrap();
            prop_assert!(report.verdict);
            let w = report.witness.unwrap();
            prop_assert_eq!(BigInt::from(w.classes.len()), BigInt::from(det));
            prop_assert!(is_steady_class_set(&w.classes).unwrap());
            prop_assert!(generates_class_group(&w.classes).unwrap());

            let back = quotient_presentation(&group_to_cone(&q.group, &q.weights).unwrap()).unwrap();
            prop_assert!(back.equivalent(&q), "{:?} vs {:?}", back, q);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Zigzag classes sum to zero and their normals are the polygon's primitive
/// edge normals, on every consistent dimer file in `dir`.
pub fn zigzag_fixture_suite(dir: &Path) -> Result<usize, String> {
    let mut checked = 0;
    let mut names: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    names.sort();
    for path in names {
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let Ok(model) = DimerModel::from_json(&text) else { continue };
        if !is_consistent(&model).consistent {
            continue;
        }
        let zs = zigzag_paths(&model);
        let sum = zs.iter().fold([0, 0], |a, z| [a[0] + z.class[0], a[1] + z.class[1]]);
        if sum != [0, 0] {
            return Err(format!("{}: zigzag classes sum to {sum:?}", path.display()));
        }
        let mut normals: Vec<[i64; 2]> = zs.iter().map(ZigzagPath::normal).collect();
        let mut edges = toric_polygon(&model, MatchingLimits::default())
            .map_err(|e| e.to_string())?
            .edge_normals();
        normals.sort_unstable();
        edges.sort_unstable();
        if normals != edges {
            return Err(format!("{}: zigzag normals {normals:?} vs polygon {edges:?}", path.display()));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Groups of order at most 20 that are generated by two elements.
const TWO_GENERATED: &[&[u64]] = &[&[2, 2], &[2, 4], &[2, 6], &[3, 3], &[2, 8], &[4, 4], &[2, 10]];

/// Every valid weight triple `(a, b, -a-b)` with `⟨a, b⟩ = G`, for cyclic
/// groups of order at most 20 and the two-generated non-cyclic ones.
/// The generated model must be consistent, hexagonal, have `|G|` faces and
/// a dual quiver isomorphic to the McKay quiver; for `|G| ≤ max_decide` the
/// dimer verdict is also compared with the verdict on the polygon cone.
pub fn hexagonal_suite(max_decide: u64) -> Result<usize, String> {
    let mut groups: Vec<Vec<u64>> = (1..=20u64).map(|n| if n == 1 { vec![] } else { vec![n] }).collect();
    for g in TWO_GENERATED {
        if !groups.iter().any(|h| h == g) {
            groups.push(g.to_vec());
        }
    }
    let mut checked = 0;
    for moduli in groups {
        let group = FinAbGroup::new(0, moduli.iter().map(|&m| BigInt::from(m)).collect()).map_err(|e| e.to_string())?;
        let order: u64 = moduli.iter().product();
        let elements = residues(&moduli);
        for a in &elements {
            for b in &elements {
                let c: Vec<u64> = a.iter().zip(b).zip(&moduli).map(|((x, y), m)| (2 * m - x - y) % m).collect();
                let span: BTreeSet<Vec<u64>> = difference_closure(&moduli, &BTreeSet::from([vec![0; moduli.len()], a.clone(), b.clone()]));
                if span.len() as u64 != order {
                    continue;
                }
                let weights: Vec<GroupElement> = [a, b, &c]
                    .iter()
                    .map(|e| GroupElement::torsion_from(&e.iter().map(|&x| x as i64).collect::<Vec<_>>()))
                    .collect();
                let label = format!("{moduli:?} weights {a:?} {b:?} {c:?}");
                let model = generate_hexagonal_dimer(&group, &weights).map_err(|e| format!("{label}: {e}"))?;
                if model.num_faces() as u64 != order {
                    return Err(format!("{label}: {} faces", model.num_faces()));
                }
                if !is_consistent(&model).consistent || !all_faces_hexagonal(&model) {
                    return Err(format!("{label}: not consistent and hexagonal"));
                }
                let mckay = mckay_quiver(&group, &weights).map_err(|e| format!("{label}: {e}"))?;
                if !quiver_isomorphic(&dual_quiver(&model).quiver, &mckay).map_err(|e| e.to_string())? {
                    return Err(format!("{label}: dual quiver is not the McKay quiver"));
                }
                if order <= max_decide {
                    let r = steady_decision_dimer(&model, MatchingLimits::default()).map_err(|e| format!("{label}: {e}"))?;
                    let cone = polygon_to_cone(&r.polygon).map_err(|e| e.to_string())?;
                    let toric = steady_splitting_decision_toric(&cone).map_err(|e| e.to_string())?;
                    if !r.steady || !toric.verdict {
                        return Err(format!("{label}: dimer verdict {} vs cone verdict {}", r.steady, toric.verdict));
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}
