//! The zigzag criterion against a direct search over translated lifts.

use std::collections::{BTreeMap, HashMap};

use nccr_core::dimer::{
    is_consistent, toric_polygon, validate_dimer, zigzag_paths, Color, DimerData, DimerModel, EdgeSpec,
    MatchingLimits, VertexSpec, ZigzagPath,
};
use proptest::prelude::*;

const TRANSLATES: i64 = 3;
const PERIODS: i64 = 4;

/// Lifted edges `(edge, black translate)` of a zigzag, by position, for
/// `PERIODS` periods on either side of the base copy.
fn lift(m: &DimerModel, z: &ZigzagPath, offset: [i64; 2]) -> Vec<(i64, (usize, [i64; 2]))> {
    let len = z.len() as i64;
    let mut base = Vec::new();
    let mut t = [0i64, 0];
    for d in &z.darts {
        let s = m.edges()[d.edge].shift;
        if d.from_black {
            base.push((d.edge, t));
            t = [t[0] + s[0], t[1] + s[1]];
        } else {
            t = [t[0] - s[0], t[1] - s[1]];
            base.push((d.edge, t));
        }
    }
    let mut out = Vec::new();
    for period in -PERIODS..=PERIODS {
        for (k, &(e, tau)) in base.iter().enumerate() {
            let shifted = [
                tau[0] + period * z.class[0] + offset[0],
                tau[1] + period * z.class[1] + offset[1],
            ];
            out.push((k as i64 + period * len, (e, shifted)));
        }
    }
    out
}

/// Translating a lift by a multiple of its class gives the same lift.
fn same_lift(u: [i64; 2], c: [i64; 2]) -> bool {
    (1 - 2 * PERIODS..2 * PERIODS).any(|k| [k * c[0], k * c[1]] == u)
}

fn brute_force_consistent(m: &DimerModel) -> bool {
    let zs = zigzag_paths(m);
    if zs.iter().any(|z| z.class == [0, 0]) {
        return false;
    }
    for (i, z) in zs.iter().enumerate() {
        let lz = lift(m, z, [0, 0]);
        let mut at: HashMap<(usize, [i64; 2]), Vec<i64>> = HashMap::new();
        for &(p, key) in &lz {
            at.entry(key).or_default().push(p);
        }
        if at.values().any(|v| v.len() > 1) {
            return false;
        }
        for (j, w) in zs.iter().enumerate().skip(i) {
            for ux in -TRANSLATES..=TRANSLATES {
                for uy in -TRANSLATES..=TRANSLATES {
                    if i == j && same_lift([ux, uy], z.class) {
                        continue;
                    }
                    let meetings: Vec<(i64, i64)> = lift(m, w, [ux, uy])
                        .into_iter()
                        .filter_map(|(pw, key)| at.get(&key).map(|pz| (pz[0], pw)))
                        .collect();
                    for a in &meetings {
                        for b in &meetings {
                            if (a.0 - b.0) * (a.1 - b.1) > 0 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

fn random_model() -> impl Strategy<Value = DimerData> {
    (1u32..=3)
        .prop_flat_map(|nb| {
            let edge = (0..nb, 0..nb, -1i64..=1, -1i64..=1);
            (Just(nb), prop::collection::vec(edge, (2 * nb as usize)..=(2 * nb as usize + 3)))
        })
        .prop_flat_map(|(nb, raw)| {
            let edges: Vec<EdgeSpec> = raw
                .iter()
                .enumerate()
                .map(|(id, &(b, w, x, y))| EdgeSpec {
                    id: id as u32,
                    black: b,
                    white: nb + w,
                    shift: [x, y],
                })
                .collect();
            let rotations: Vec<_> = (0..2 * nb)
                .map(|v| {
                    let incident: Vec<u32> =
                        edges.iter().filter(|e| e.black == v || e.white == v).map(|e| e.id).collect();
                    Just(incident).prop_shuffle()
                })
                .collect();
            (Just(nb), Just(edges), rotations)
        })
        .prop_map(|(nb, edges, rotations)| DimerData {
            vertices: (0..2 * nb)
                .map(|id| VertexSpec {
                    id,
                    color: if id < nb { Color::Black } else { Color::White },
                })
                .collect(),
            edges,
            rotations: rotations
                .into_iter()
                .enumerate()
                .map(|(v, r)| (v.to_string(), r))
                .collect::<BTreeMap<_, _>>(),
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 600, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn zigzag_criterion_matches_search(data in random_model()) {
        let model = validate_dimer(&data);
        prop_assume!(model.is_ok());
        let model = model.unwrap();
        let verdict = is_consistent(&model);
        prop_assert_eq!(verdict.consistent, brute_force_consistent(&model), "{:?}", verdict.failure);
        if verdict.consistent {
            let polygon = toric_polygon(&model, MatchingLimits::default()).unwrap();
            prop_assert_eq!(polygon.twice_area(), model.num_faces() as i64);
            let mut normals: Vec<[i64; 2]> = verdict.zigzags.iter().map(ZigzagPath::normal).collect();
            let mut edges = polygon.edge_normals();
            normals.sort_unstable();
            edges.sort_unstable();
            prop_assert_eq!(normals, edges);
        }
    }
}
