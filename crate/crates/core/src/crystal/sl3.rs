//! The two explicit crystal structures on FFLV points of `sl_3`, built from
//! monochromatic path families and their translates.
//!
//! Coordinates are `(x_{1,1}, x_{1,2}, x_{2,2})`. A path is a start point and
//! a list of steps; a family is a set of base paths together with all their
//! translates by multiples of one vector, and only edges with both endpoints
//! in the polytope are kept.

use crate::crystal::graph::CrystalGraph;
use crate::error::Result;
use crate::fflv::fflv_points;
use crate::polytope::{LatticePoint, PointSet};
use crate::roots::{Rank, Weight};

type Vec3 = [i64; 3];

const E1: Vec3 = [1, 0, 0];
const E2: Vec3 = [0, 0, 1];
/// `-e_2 + e_{12}`
const E2_TO_E12: Vec3 = [0, 1, -1];
/// `-e_1 + e_{12}`
const E1_TO_E12: Vec3 = [-1, 1, 0];

struct Family {
    color: usize,
    bases: Vec<(Vec3, Vec<Vec3>)>,
    shift: Vec3,
}

fn steps(parts: &[(Vec3, i64)]) -> Vec<Vec3> {
    parts
        .iter()
        .flat_map(|&(v, times)| std::iter::repeat_n(v, times.max(0) as usize))
        .collect()
}

fn add(p: Vec3, v: Vec3, t: i64) -> Vec3 {
    [p[0] + t * v[0], p[1] + t * v[1], p[2] + t * v[2]]
}

fn sl3_weight(a: i64, b: i64) -> Result<Weight> {
    Weight::new(Rank::new(2)?, vec![a, b])
}

fn realise(a: i64, b: i64, families: &[Family]) -> Result<CrystalGraph> {
    let lambda = sl3_weight(a, b)?;
    let points = fflv_points(&lambda)?;
    let mut g = CrystalGraph::new(lambda, points.clone());
    let reach = a + b + 1;
    for fam in families {
        for (start, path) in &fam.bases {
            for t in 0..=reach {
                let mut cur = add(*start, fam.shift, t);
                for &step in path {
                    let next = add(cur, step, 1);
                    let (s, n) = (LatticePoint(cur.to_vec()), LatticePoint(next.to_vec()));
                    if points.contains(&s) && points.contains(&n) {
                        g.add_edge(s, fam.color, n)?;
                    }
                    cur = next;
                }
            }
        }
    }
    Ok(g)
}

/// Crystal for the ordering `w_1 > w_2`.
pub fn sl3_bgt(a: i64, b: i64) -> Result<CrystalGraph> {
    let reach = a + b + 1;
    let sky = Family {
        color: 1,
        bases: (0..=b)
            .map(|mu| ([0, 0, mu], steps(&[(E1, a), (E2_TO_E12, mu)])))
            .collect(),
        shift: [-1, 1, 0],
    };
    let mut ground_bases: Vec<(Vec3, Vec<Vec3>)> = (0..=a)
        .map(|mu| ([mu, 0, 0], steps(&[(E1_TO_E12, mu), (E2, reach)])))
        .collect();
    ground_bases.extend((1..=b).map(|j| ([a, j, 0], steps(&[(E1_TO_E12, a), (E2, reach)]))));
    let ground = Family {
        color: 2,
        bases: ground_bases,
        shift: [1, 0, 1],
    };
    realise(a, b, &[sky, ground])
}

/// Crystal for the ordering `w_2 > w_1`.
pub fn sl3_blt(a: i64, b: i64) -> Result<CrystalGraph> {
    let mut first: Vec<(Vec3, Vec<Vec3>)> = (0..=b)
        .map(|mu| ([0, 0, mu], steps(&[(E2_TO_E12, mu), (E1, a)])))
        .collect();
    first.extend((1..=a + b).map(|j| ([0, j, b], steps(&[(E2_TO_E12, b), (E1, a)]))));
    let first = Family {
        color: 1,
        bases: first,
        shift: [1, 0, 1],
    };
    let wall = Family {
        color: 2,
        bases: (0..=a)
            .map(|mu| ([mu, 0, 0], steps(&[(E2, b), (E1_TO_E12, mu)])))
            .collect(),
        shift: [0, 1, -1],
    };
    realise(a, b, &[first, wall])
}

/// FFLV points with `x_{1,1} = x_{2,2}`.
pub fn critical_points(a: i64, b: i64) -> Result<PointSet> {
    let points = fflv_points(&sl3_weight(a, b)?)?;
    Ok(points.filter(|p| p.0[0] == p.0[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::axioms::check_local_axioms;
    use crate::crystal::iso::check_oracle_iso;
    use std::collections::BTreeSet;

    fn edge_list(g: &CrystalGraph, color: usize) -> BTreeSet<(String, String)> {
        let code = |p: &LatticePoint| p.0.iter().map(|c| c.to_string()).collect::<String>();
        g.edges_of_color(color)
            .map(|e| (code(&e.source), code(&e.target)))
            .collect()
    }

    fn pairs(list: &[(&str, &str)]) -> BTreeSet<(String, String)> {
        list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn adjoint_edge_lists() {
        let gt = sl3_bgt(1, 1).unwrap();
        assert_eq!(
            edge_list(&gt, 1),
            pairs(&[("000", "100"), ("001", "101"), ("101", "110"), ("011", "020")])
        );
        assert_eq!(
            edge_list(&gt, 2),
            pairs(&[("000", "001"), ("100", "010"), ("010", "011"), ("110", "020")])
        );
        let lt = sl3_blt(1, 1).unwrap();
        assert_eq!(
            edge_list(&lt, 1),
            pairs(&[("000", "100"), ("001", "010"), ("010", "110"), ("011", "020")])
        );
        assert_eq!(
            edge_list(&lt, 2),
            pairs(&[("000", "001"), ("100", "101"), ("101", "011"), ("110", "020")])
        );
    }

    #[test]
    fn large_case_paths() {
        let gt = sl3_bgt(3, 4).unwrap();
        let path = [[0, 0, 1], [1, 0, 1], [2, 0, 1], [3, 0, 1], [3, 1, 0]];
        for w in path.windows(2) {
            assert!(gt
                .edges
                .iter()
                .any(|e| e.color == 1 && e.source.0 == w[0] && e.target.0 == w[1]));
        }
        let lt = sl3_blt(3, 4).unwrap();
        let tail = [[3, 0, 4], [2, 1, 4], [1, 2, 4], [0, 3, 4]];
        for w in tail.windows(2) {
            assert!(lt
                .edges
                .iter()
                .any(|e| e.color == 2 && e.source.0 == w[0] && e.target.0 == w[1]));
        }
    }

    #[test]
    fn both_families_are_crystals() {
        for a in 1..=3 {
            for b in 1..=3 {
                for g in [sl3_bgt(a, b).unwrap(), sl3_blt(a, b).unwrap()] {
                    let ic = g.indexed().unwrap();
                    assert_eq!(ic.sources(), vec![0]);
                    let sinks: Vec<usize> = (0..ic.len())
                        .filter(|&v| (1..=ic.n).all(|c| ic.f(c, v).is_none()))
                        .collect();
                    assert_eq!(sinks.len(), 1);
                    // lowest weight: the content vector reversed
                    let mut lowest = ic.weights[0].clone();
                    lowest.reverse();
                    assert_eq!(ic.weights[sinks[0]], lowest);
                    assert!(g.weight_violations().unwrap().is_empty());
                    let axioms = check_local_axioms(&g);
                    assert!(axioms.passed(), "({a},{b}) {:?}", axioms.violations.first());
                    let iso = check_oracle_iso(&g);
                    assert!(iso.isomorphic, "({a},{b}) {:?}", iso.mismatch);
                }
                assert_eq!(sl3_bgt(a, b).unwrap().vertices, sl3_blt(a, b).unwrap().vertices);
                assert_ne!(sl3_bgt(a, b).unwrap().edges, sl3_blt(a, b).unwrap().edges);
            }
        }
    }

    #[test]
    fn critical_point_counts() {
        for a in 0..=4 {
            for b in 0..=4 {
                assert_eq!(critical_points(a, b).unwrap().len() as i64, (a + 1) * (b + 1));
            }
        }
        let c = critical_points(1, 1).unwrap();
        let got: Vec<Vec<i64>> = c.iter().map(|p| p.0.clone()).collect();
        assert_eq!(got, vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 2, 0], vec![1, 0, 1]]);
    }
}
