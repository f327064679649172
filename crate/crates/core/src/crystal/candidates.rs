//! Candidate lowering moves `f_{a,k}` on FFLV lattice points.
//!
//! For `a < k` the move is `-d_{a+1,j} + d_{a,j}` for some `k <= j <= n`, for
//! `a > k` it is `-d_{i,a-1} + d_{i,a}` for some `1 <= i <= k`, and for `a = k`
//! it is `+d_{k,k}`. Which `j` (resp. `i`) the Lusztig crystal uses is not
//! determined here, so every index whose move stays in the polytope is kept.

use serde::{Deserialize, Serialize};

use crate::crystal::graph::CrystalGraph;
use crate::error::{Error, Result};
use crate::fflv::fflv_points;
use crate::polytope::{LatticePoint, PointSet};
use crate::roots::{Rank, Root, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CandidateEdge {
    pub source: LatticePoint,
    pub color: usize,
    pub k: usize,
    /// The free index `j` (for `a < k`) or `i` (for `a > k`); `None` when `a = k`.
    pub index: Option<usize>,
    pub target: LatticePoint,
}

fn shifted(rank: Rank, x: &LatticePoint, minus: Option<Root>, plus: Root) -> Option<LatticePoint> {
    let mut y = x.0.clone();
    if let Some(r) = minus {
        let c = r.index(rank);
        if y[c] == 0 {
            return None;
        }
        y[c] -= 1;
    }
    y[plus.index(rank)] += 1;
    Some(LatticePoint(y))
}

/// All moves at `x` for one color, in order of `k`, then index.
pub fn candidates_for_color(points: &PointSet, rank: Rank, x: &LatticePoint, a: usize) -> Vec<CandidateEdge> {
    let n = rank.n();
    let mut out = Vec::new();
    let mut push = |k: usize, index: Option<usize>, y: Option<LatticePoint>| {
        if let Some(y) = y.filter(|y| points.contains(y)) {
            out.push(CandidateEdge {
                source: x.clone(),
                color: a,
                k,
                index,
                target: y,
            });
        }
    };
    for k in 1..=n {
        if a < k {
            for j in k..=n {
                let y = shifted(rank, x, Some(Root { i: a + 1, j }), Root { i: a, j });
                push(k, Some(j), y);
            }
        } else if a > k {
            for i in 1..=k {
                let y = shifted(rank, x, Some(Root { i, j: a - 1 }), Root { i, j: a });
                push(k, Some(i), y);
            }
        } else {
            push(k, None, shifted(rank, x, None, Root::simple(k)));
        }
    }
    out
}

pub fn candidate_edges(lambda: &Weight, x: &LatticePoint) -> Result<Vec<CandidateEdge>> {
    let points = fflv_points(lambda)?;
    candidate_edges_in(&points, lambda, x)
}

pub fn candidate_edges_in(points: &PointSet, lambda: &Weight, x: &LatticePoint) -> Result<Vec<CandidateEdge>> {
    if !points.contains(x) {
        return Err(Error::OutsidePolytope(x.0.clone()));
    }
    let rank = lambda.rank();
    Ok((1..=rank.n())
        .flat_map(|a| candidates_for_color(points, rank, x, a))
        .collect())
}

/// All candidates at all vertices.
pub fn all_candidates(lambda: &Weight) -> Result<(PointSet, Vec<CandidateEdge>)> {
    let points = fflv_points(lambda)?;
    let mut out = Vec::new();
    for x in points.iter() {
        out.extend(candidate_edges_in(&points, lambda, x)?);
    }
    Ok((points, out))
}

/// The graph of all candidate moves; a vertex may carry several edges of one color.
pub fn pb_graph(lambda: &Weight) -> Result<CrystalGraph> {
    let (points, cands) = all_candidates(lambda)?;
    let mut g = CrystalGraph::new(lambda.clone(), points);
    for c in cands {
        g.add_edge(c.source, c.color, c.target)?;
    }
    Ok(g)
}

/// Only the moves of one fixed `k`.
pub fn fixed_k_graph(lambda: &Weight, k: usize) -> Result<CrystalGraph> {
    let (points, cands) = all_candidates(lambda)?;
    let mut g = CrystalGraph::new(lambda.clone(), points);
    for c in cands.into_iter().filter(|c| c.k == k) {
        g.add_edge(c.source, c.color, c.target)?;
    }
    Ok(g)
}
