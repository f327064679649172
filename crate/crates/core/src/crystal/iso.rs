//! Isomorphism with the word crystal by simultaneous breadth-first traversal
//! from the two highest-weight vertices.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::crystal::graph::{CrystalGraph, IndexedCrystal};
use crate::crystal::oracle::word_oracle;
use crate::polytope::LatticePoint;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub isomorphic: bool,
    pub matched: usize,
    pub mismatch: Option<String>,
}

impl IsoReport {
    fn fail(matched: usize, msg: String) -> Self {
        IsoReport {
            isomorphic: false,
            matched,
            mismatch: Some(msg),
        }
    }
}

/// Compares `graph`, traversed from the origin, with the word crystal of its weight.
pub fn check_oracle_iso(graph: &CrystalGraph) -> IsoReport {
    let ic = match graph.indexed() {
        Ok(ic) => ic,
        Err(err) => return IsoReport::fail(0, err.to_string()),
    };
    let Some(source) = graph.vertices.index_of(&LatticePoint::zero(graph.vertices.dim())) else {
        return IsoReport::fail(0, "origin is not a vertex".into());
    };
    let oracle = word_oracle(&graph.lambda).indexed();
    match_from(&ic, source, &oracle, 0)
}

/// Pairs `left_root` with `right_root` and extends along lowering edges.
pub fn match_from(left: &IndexedCrystal, left_root: usize, right: &IndexedCrystal, right_root: usize) -> IsoReport {
    if left.n != right.n {
        return IsoReport::fail(0, format!("ranks differ: {} vs {}", left.n, right.n));
    }
    let mut to_right = vec![None; left.len()];
    let mut to_left = vec![None; right.len()];
    to_right[left_root] = Some(right_root);
    to_left[right_root] = Some(left_root);
    let mut matched = 1;
    let mut queue = VecDeque::from([(left_root, right_root)]);
    while let Some((l, r)) = queue.pop_front() {
        for a in 1..=left.n {
            match (left.f(a, l), right.f(a, r)) {
                (None, None) => {}
                (Some(_), None) | (None, Some(_)) => {
                    return IsoReport::fail(
                        matched,
                        format!(
                            "color {a} edge at {} exists on one side only (oracle {})",
                            left.labels[l], right.labels[r]
                        ),
                    );
                }
                (Some(lt), Some(rt)) => match (to_right[lt], to_left[rt]) {
                    (None, None) => {
                        to_right[lt] = Some(rt);
                        to_left[rt] = Some(lt);
                        matched += 1;
                        queue.push_back((lt, rt));
                    }
                    (Some(x), Some(y)) if x == rt && y == lt => {}
                    _ => {
                        return IsoReport::fail(
                            matched,
                            format!(
                                "color {a} edge from {} reaches {} which pairs inconsistently with oracle {}",
                                left.labels[l], left.labels[lt], right.labels[rt]
                            ),
                        );
                    }
                },
            }
        }
    }
    if matched != left.len() || matched != right.len() {
        return IsoReport::fail(
            matched,
            format!(
                "traversal covered {matched} vertices; graph has {}, oracle has {}",
                left.len(),
                right.len()
            ),
        );
    }
    IsoReport {
        isomorphic: true,
        matched,
        mismatch: None,
    }
}
