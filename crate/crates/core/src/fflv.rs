//! FFLV polytopes: Dyck paths, their inequality description, explicit
//! lattice points of fundamental weights, and the Weyl dimension.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{Enumeration, HPolytope, LatticePoint, PointSet};
use crate::roots::{Rank, Root, Weight};

/// A monotone path `alpha_{i,i} = g_0, g_1, ..., g_t = alpha_{j,j}` where each
/// step raises either the start or the end of the root by one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyckPath {
    pub start: usize,
    pub end: usize,
    pub roots: Vec<Root>,
}

impl DyckPath {
    /// 0/1 indicator vector in the canonical frame.
    pub fn indicator(&self, rank: Rank) -> Vec<i64> {
        let mut v = vec![0; rank.num_roots()];
        for r in &self.roots {
            v[r.index(rank)] = 1;
        }
        v
    }
}

/// All Dyck paths of rank `n`, grouped by `(start, end)` in lexicographic order.
pub fn dyck_paths(rank: Rank) -> Vec<DyckPath> {
    let n = rank.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let mut cur = vec![Root::simple(i)];
            extend_paths(j, &mut cur, &mut out);
        }
    }
    out
}

fn extend_paths(end: usize, cur: &mut Vec<Root>, out: &mut Vec<DyckPath>) {
    let last = *cur.last().expect("path is nonempty");
    if last.i == end && last.j == end {
        out.push(DyckPath {
            start: cur[0].i,
            end,
            roots: cur.clone(),
        });
        return;
    }
    // move the start up (staying a root) or the end up (staying <= end)
    if last.i < last.j {
        cur.push(Root {
            i: last.i + 1,
            j: last.j,
        });
        extend_paths(end, cur, out);
        cur.pop();
    }
    if last.j < end {
        cur.push(Root {
            i: last.i,
            j: last.j + 1,
        });
        extend_paths(end, cur, out);
        cur.pop();
    }
}

pub fn fflv_hrep(lambda: &Weight) -> HPolytope {
    let rank = lambda.rank();
    let mut p = HPolytope::new(rank.num_roots(), true);
    for path in dyck_paths(rank) {
        p.push_row(path.indicator(rank), lambda.partial_sum(path.start, path.end))
            .expect("indicator has the right length");
    }
    p
}

/// Lattice points of the FFLV polytope. The box `sum(lambda)` is always large
/// enough because every root lies on a path from its start to its end.
pub fn fflv_points(lambda: &Weight) -> Result<PointSet> {
    let Enumeration { points, .. } = fflv_hrep(lambda).lattice_points(lambda.sum())?;
    Ok(points)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalPoint {
    pub subset: Vec<usize>,
    pub point: LatticePoint,
}

/// The point attached to a `k`-subset `j_1 < ... < j_k` of `[n+1]`: with
/// `s = #{j_r <= k}` and `p_1 < ... < p_{k-s}` the complement of the `j`s in
/// `[k]`, it is 1 at `alpha_{p_r, j_{k-r+1} - 1}` and 0 elsewhere.
pub fn fundamental_point(rank: Rank, subset: &[usize]) -> Result<LatticePoint> {
    let k = subset.len();
    if k == 0 || k > rank.n() {
        return Err(Error::IndexOutOfRange { k, n: rank.n() });
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset[0] == 0 || subset[k - 1] > rank.m() {
        return Err(Error::Parse(format!("not a {k}-subset of [{}]: {subset:?}", rank.m())));
    }
    let missing: Vec<usize> = (1..=k).filter(|p| !subset.contains(p)).collect();
    let mut x = vec![0; rank.num_roots()];
    for (r, &p) in missing.iter().enumerate() {
        let j = subset[k - 1 - r];
        x[Root::new(rank, p, j - 1)?.index(rank)] = 1;
    }
    Ok(LatticePoint(x))
}

/// One point per `k`-subset of `[n+1]`, subsets in lexicographic order.
pub fn fundamental_points(rank: Rank, k: usize) -> Result<Vec<FundamentalPoint>> {
    if k == 0 || k > rank.n() {
        return Err(Error::IndexOutOfRange { k, n: rank.n() });
    }
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (1..=k).collect();
    let m = rank.m();
    loop {
        out.push(FundamentalPoint {
            point: fundamental_point(rank, &subset)?,
            subset: subset.clone(),
        });
        // next combination
        let mut r = k;
        while r > 0 && subset[r - 1] == m - k + r {
            r -= 1;
        }
        if r == 0 {
            return Ok(out);
        }
        subset[r - 1] += 1;
        for q in r..k {
            subset[q] = subset[q - 1] + 1;
        }
    }
}

/// Dimension of the irreducible representation with highest weight `lambda`.
pub fn weyl_dim(lambda: &Weight) -> Result<u128> {
    let mu = lambda.content();
    let m = mu.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..m {
        for j in i + 1..m {
            let mut a = (mu[i] - mu[j] + (j - i) as i64) as u128;
            let mut b = (j - i) as u128;
            let g = a.gcd(&b);
            a /= g;
            b /= g;
            let g = a.gcd(&den);
            let (a, den_r) = (a / g, den / g);
            let g = num.gcd(&b);
            let (num_r, b) = (num / g, b / g);
            num = num_r.checked_mul(a).ok_or(Error::Overflow("computing a dimension"))?;
            den = den_r.checked_mul(b).ok_or(Error::Overflow("computing a dimension"))?;
        }
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}
