//! Rhombic tilings of the `2m`-gon built from reduced words, and the
//! inequality description of Lusztig polytopes read off from dual Reineke
//! crossings.
//!
//! The tiling is purely combinatorial. A border is a sequence of edge ids
//! read from the bottom vertex `v0` to the top vertex `v1`; it starts as the
//! left boundary with labels `1..m` and every tile swaps two adjacent labels
//! `s < t` into `t, s`, so the final border reads `m..1`. Boundary edges are
//! numbered `b_1..b_{2m}` clockwise from `v0`: `b_1..b_m` is the left boundary
//! and `b_{m+i}` is the right-boundary edge labelled `i`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{HPolytope, PointSet};
use crate::roots::{ik_word, root_enumeration, Rank, ReducedWord, Root, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub label: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tile {
    pub id: usize,
    /// Edge labels `a < b`.
    pub labels: (usize, usize),
    /// The two consumed border edges, labels `(a, b)` in border order.
    pub lower: [usize; 2],
    /// The two new border edges, labels `(b, a)` in border order.
    pub upper: [usize; 2],
    /// Position of `lower[0]` in the border the tile was glued onto.
    pub position: usize,
    pub root: Root,
}

impl Tile {
    pub fn edges(&self) -> [usize; 4] {
        [self.lower[0], self.lower[1], self.upper[0], self.upper[1]]
    }

    pub fn has_label(&self, t: usize) -> bool {
        self.labels.0 == t || self.labels.1 == t
    }

    /// The label other than `t`.
    pub fn other_label(&self, t: usize) -> usize {
        if self.labels.0 == t {
            self.labels.1
        } else {
            self.labels.0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub m: usize,
    pub word: ReducedWord,
    pub tiles: Vec<Tile>,
    pub edges: Vec<Edge>,
    pub left_boundary: Vec<usize>,
    /// Right boundary edges in boundary order, i.e. labels `1..m`.
    pub right_boundary: Vec<usize>,
    /// Every intermediate border, `borders[0]` the left boundary.
    pub borders: Vec<Vec<usize>>,
    /// Tiles incident to each edge.
    incidence: Vec<Vec<usize>>,
}

pub fn build_tiling(word: &ReducedWord) -> Result<Tiling> {
    let rank = word.rank();
    let m = rank.m();
    let mut edges: Vec<Edge> = (0..m).map(|i| Edge { id: i, label: i + 1 }).collect();
    let mut border: Vec<usize> = (0..m).collect();
    let left_boundary = border.clone();
    let mut borders = vec![border.clone()];
    let mut tiles = Vec::with_capacity(rank.num_roots());

    for (step, root) in root_enumeration(word).roots().iter().enumerate() {
        let (s, t) = root.labels();
        let p = border
            .iter()
            .position(|&e| edges[e].label == s)
            .ok_or_else(|| Error::MalformedTiling(format!("label {s} missing from border")))?;
        if p + 1 >= border.len() || edges[border[p + 1]].label != t {
            return Err(Error::NonAdjacentLabels { step: step + 1, s, t });
        }
        let new_t = edges.len();
        edges.push(Edge { id: new_t, label: t });
        let new_s = edges.len();
        edges.push(Edge { id: new_s, label: s });
        tiles.push(Tile {
            id: step,
            labels: (s, t),
            lower: [border[p], border[p + 1]],
            upper: [new_t, new_s],
            position: p,
            root: *root,
        });
        border[p] = new_t;
        border[p + 1] = new_s;
        borders.push(border.clone());
    }

    let right_boundary: Vec<usize> = border.iter().rev().copied().collect();
    let mut incidence = vec![Vec::new(); edges.len()];
    for tile in &tiles {
        for e in tile.edges() {
            incidence[e].push(tile.id);
        }
    }
    let tiling = Tiling {
        m,
        word: word.clone(),
        tiles,
        edges,
        left_boundary,
        right_boundary,
        borders,
        incidence,
    };
    tiling.validate()?;
    Ok(tiling)
}

/// Tiles of one strip, ordered from the left boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strip {
    pub label: usize,
    pub tiles: Vec<usize>,
}

/// Layer of every tile (1-based, indexed by tile id) for one peeling start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelOrder {
    pub s: usize,
    pub layers: Vec<usize>,
}

impl PeelOrder {
    pub fn num_layers(&self) -> usize {
        self.layers.iter().copied().max().unwrap_or(0)
    }

    pub fn layer(&self, tile: usize) -> usize {
        self.layers[tile]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DualCrossing {
    pub s: usize,
    pub tiles: Vec<usize>,
    /// Labels of the edges shared by consecutive tiles.
    pub steps: Vec<usize>,
    pub strip_sequence: Vec<usize>,
}

impl Tiling {
    pub fn rank(&self) -> Rank {
        self.word.rank()
    }

    pub fn tile(&self, id: usize) -> &Tile {
        &self.tiles[id]
    }

    pub fn label(&self, edge: usize) -> usize {
        self.edges[edge].label
    }

    /// The tile with labels `{a, b}`.
    pub fn tile_with_labels(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.tiles.iter().position(|t| t.labels == key)
    }

    /// Boundary edge `b_i`, `i` taken modulo `2m` in `1..=2m`.
    pub fn boundary_edge(&self, i: usize) -> usize {
        let i = (i - 1) % (2 * self.m) + 1;
        if i <= self.m {
            self.left_boundary[i - 1]
        } else {
            self.right_boundary[i - self.m - 1]
        }
    }

    fn shared_edge(&self, a: usize, b: usize) -> Option<usize> {
        let eb = self.tiles[b].edges();
        self.tiles[a].edges().into_iter().find(|e| eb.contains(e))
    }

    fn neighbours(&self, tile: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.tiles[tile].edges().into_iter().flat_map(move |e| {
            self.incidence[e]
                .iter()
                .filter(move |&&t| t != tile)
                .map(move |&t| (t, e))
        })
    }

    pub fn validate(&self) -> Result<()> {
        let rank = self.rank();
        if self.tiles.len() != rank.num_roots() {
            return Err(Error::MalformedTiling(format!(
                "{} tiles, expected {}",
                self.tiles.len(),
                rank.num_roots()
            )));
        }
        let pairs: BTreeSet<(usize, usize)> = self.tiles.iter().map(|t| t.labels).collect();
        let all: BTreeSet<(usize, usize)> = (1..=self.m)
            .flat_map(|a| (a + 1..=self.m).map(move |b| (a, b)))
            .collect();
        if pairs != all {
            return Err(Error::MalformedTiling("tile label pairs are not all pairs".into()));
        }
        for (k, border) in self.borders.iter().enumerate() {
            let labels: BTreeSet<usize> = border.iter().map(|&e| self.label(e)).collect();
            if border.len() != self.m || labels.len() != self.m {
                return Err(Error::MalformedTiling(format!(
                    "border {k} does not carry each label once"
                )));
            }
            if k > 0 {
                let changed = border.iter().zip(&self.borders[k - 1]).filter(|(a, b)| a != b).count();
                if changed != 2 {
                    return Err(Error::MalformedTiling(format!(
                        "border {k} differs from its predecessor in {changed} edges"
                    )));
                }
            }
        }
        for tile in &self.tiles {
            let [l0, l1] = tile.lower.map(|e| self.label(e));
            let [u0, u1] = tile.upper.map(|e| self.label(e));
            if (l0, l1) != tile.labels || (u1, u0) != tile.labels {
                return Err(Error::MalformedTiling(format!(
                    "tile {} has inconsistent edge labels",
                    tile.id
                )));
            }
        }
        let right: Vec<usize> = self.right_boundary.iter().map(|&e| self.label(e)).collect();
        if right != (1..=self.m).collect::<Vec<_>>() {
            return Err(Error::MalformedTiling("right boundary is not labelled 1..m".into()));
        }
        Ok(())
    }

    pub fn strip(&self, t: usize) -> Result<Strip> {
        if t == 0 || t > self.m {
            return Err(Error::IndexOutOfRange { k: t, n: self.m });
        }
        // gluing order follows the chain of t-labelled edges
        let tiles: Vec<usize> = self
            .tiles
            .iter()
            .filter(|tile| tile.has_label(t))
            .map(|tile| tile.id)
            .collect();
        if tiles.len() != self.m - 1 {
            return Err(Error::MalformedTiling(format!("strip {t} has {} tiles", tiles.len())));
        }
        let first_has_boundary = self.tiles[tiles[0]]
            .edges()
            .iter()
            .any(|&e| self.label(e) == t && self.left_boundary.contains(&e));
        if !first_has_boundary {
            return Err(Error::MalformedTiling(format!(
                "strip {t} does not start on the left boundary"
            )));
        }
        for w in tiles.windows(2) {
            match self.shared_edge(w[0], w[1]) {
                Some(e) if self.label(e) == t => {}
                _ => {
                    return Err(Error::MalformedTiling(format!(
                        "strip {t} breaks between tiles {} and {}",
                        w[0], w[1]
                    )))
                }
            }
        }
        Ok(Strip { label: t, tiles })
    }

    pub fn strips(&self) -> Result<Vec<Strip>> {
        (1..=self.m).map(|t| self.strip(t)).collect()
    }

    /// Peeling from the border `b_{m+s+1}, ..., b_{2m+s}`.
    pub fn peel_order(&self, s: usize) -> Result<PeelOrder> {
        if s == 0 || s > 2 * self.m {
            return Err(Error::IndexOutOfRange { k: s, n: 2 * self.m });
        }
        let mut in_border = vec![false; self.edges.len()];
        for i in self.m + s + 1..=2 * self.m + s {
            in_border[self.boundary_edge(i)] = true;
        }
        let mut layers = vec![0usize; self.tiles.len()];
        let mut remaining = self.tiles.len();
        let mut layer = 0;
        while remaining > 0 {
            layer += 1;
            let ready: Vec<usize> = self
                .tiles
                .iter()
                .filter(|t| layers[t.id] == 0)
                .filter(|t| t.edges().iter().filter(|&&e| in_border[e]).count() == 2)
                .map(|t| t.id)
                .collect();
            if ready.is_empty() {
                return Err(Error::PeelStall { s, remaining });
            }
            for &id in &ready {
                layers[id] = layer;
                for e in self.tiles[id].edges() {
                    in_border[e] = !in_border[e];
                }
            }
            remaining -= ready.len();
        }
        Ok(PeelOrder { s, layers })
    }

    /// All `(m+s)`-ascending neighbour sequences from the last tile of strip
    /// `s` to the last tile of strip `s+1`.
    pub fn dual_crossings(&self, s: usize) -> Result<Vec<DualCrossing>> {
        let n = self.m - 1;
        if s == 0 || s > n {
            return Err(Error::IndexOutOfRange { k: s, n });
        }
        let order = self.peel_order(self.m + s)?;
        let start = *self.strip(s)?.tiles.last().expect("strip is nonempty");
        let end = *self.strip(s + 1)?.tiles.last().expect("strip is nonempty");
        let mut out = Vec::new();
        let mut path = vec![start];
        let mut steps = Vec::new();
        self.extend_crossing(s, end, &order, &mut path, &mut steps, &mut out);
        out.sort();
        Ok(out)
    }

    fn extend_crossing(
        &self,
        s: usize,
        end: usize,
        order: &PeelOrder,
        path: &mut Vec<usize>,
        steps: &mut Vec<usize>,
        out: &mut Vec<DualCrossing>,
    ) {
        let cur = *path.last().expect("path is nonempty");
        if cur == end {
            out.push(DualCrossing {
                s,
                tiles: path.clone(),
                steps: steps.clone(),
                strip_sequence: strip_sequence(s, steps),
            });
            return;
        }
        let next: Vec<(usize, usize)> = self
            .neighbours(cur)
            .filter(|&(t, _)| order.layer(t) > order.layer(cur))
            .collect();
        for (t, e) in next {
            path.push(t);
            steps.push(self.label(e));
            self.extend_crossing(s, end, order, path, steps, out);
            steps.pop();
            path.pop();
        }
    }

    /// Whether an interior tile whose two neighbours in the crossing lie in
    /// the same strip `a` crosses the other strip `b` in the allowed
    /// direction: `a > b` when `b <= s`, `a < b` when `b > s`.
    pub fn is_reineke(&self, crossing: &DualCrossing) -> bool {
        let s = crossing.s;
        crossing.steps.windows(2).enumerate().all(|(i, w)| {
            if w[0] != w[1] {
                return true;
            }
            let a = w[0];
            let b = self.tiles[crossing.tiles[i + 1]].other_label(a);
            if b <= s {
                a > b
            } else {
                a < b
            }
        })
    }

    pub fn reineke_filter(&self, crossings: Vec<DualCrossing>) -> Vec<DualCrossing> {
        crossings.into_iter().filter(|c| self.is_reineke(c)).collect()
    }

    /// Coefficients of the crossing functional in the canonical root frame.
    pub fn crossing_functional(&self, crossing: &DualCrossing) -> Vec<i64> {
        let s = crossing.s;
        let rank = self.rank();
        let turning: BTreeSet<(usize, usize)> = crossing
            .strip_sequence
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        let mut coeffs = vec![0i64; rank.num_roots()];
        for &id in &crossing.tiles {
            let tile = &self.tiles[id];
            let (a, b) = tile.labels;
            let c = if a <= s && s < b {
                1
            } else if turning.contains(&tile.labels) {
                0
            } else {
                -1
            };
            coeffs[tile.root.index(rank)] = c;
        }
        coeffs
    }
}

/// `(s, l_1, ..., l_{p-1}, s+1)` with consecutive repeats merged.
fn strip_sequence(s: usize, steps: &[usize]) -> Vec<usize> {
    let mut seq = vec![s];
    for &l in steps.iter().chain(std::iter::once(&(s + 1))) {
        if seq.last() != Some(&l) {
            seq.push(l);
        }
    }
    seq
}

/// Inequality description of the Lusztig polytope: one row per dual Reineke
/// `s`-crossing with right-hand side `lambda_s`, for `s = 1..n`.
pub fn lusztig_hrep(word: &ReducedWord, lambda: &Weight) -> Result<HPolytope> {
    let tiling = build_tiling(word)?;
    lusztig_hrep_from(&tiling, lambda)
}

pub fn lusztig_hrep_from(tiling: &Tiling, lambda: &Weight) -> Result<HPolytope> {
    let rank = tiling.rank();
    if lambda.rank() != rank {
        return Err(Error::WeightLength {
            got: lambda.coeffs().len(),
            n: rank.n(),
        });
    }
    let mut p = HPolytope::new(rank.num_roots(), true);
    for s in 1..=rank.n() {
        for c in tiling.reineke_filter(tiling.dual_crossings(s)?) {
            p.push_row(tiling.crossing_functional(&c), lambda.coeff(s))?;
        }
    }
    p.normalize();
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LusztigPoints {
    pub points: PointSet,
    pub box_bound: i64,
    /// The final box produced the Weyl dimension and no bound warning.
    pub settled: bool,
}

const MAX_ESCALATIONS: usize = 4;

/// Lattice points of the Lusztig polytope, starting from the box `sum(lambda)`
/// and doubling it while the count disagrees with the Weyl dimension or a
/// point touches the box on an uncapped coordinate.
pub fn lusztig_points(word: &ReducedWord, lambda: &Weight) -> Result<LusztigPoints> {
    let hrep = lusztig_hrep(word, lambda)?;
    lusztig_points_of(&hrep, lambda)
}

pub fn lusztig_points_of(hrep: &HPolytope, lambda: &Weight) -> Result<LusztigPoints> {
    let expected = crate::fflv::weyl_dim(lambda)?;
    let mut box_bound = lambda.sum().max(1);
    let mut last = None;
    for _ in 0..=MAX_ESCALATIONS {
        let e = hrep.lattice_points(box_bound)?;
        if e.points.len() as u128 == expected && e.warnings.is_empty() {
            return Ok(LusztigPoints {
                points: e.points,
                box_bound,
                settled: true,
            });
        }
        last = Some(e.points);
        box_bound *= 2;
    }
    Ok(LusztigPoints {
        points: last.expect("loop runs at least once"),
        box_bound: box_bound / 2,
        settled: false,
    })
}

/// Lattice points of the Lusztig polytope for the word `i^k` and `r w_k`
/// vanish outside the rectangle `{alpha_{i,j} : i <= k <= j}`, and hence at
/// every position of the root enumeration past `k(n-k+1)`.
pub fn check_rectangle_support(rank: Rank, k: usize, r: i64) -> Result<bool> {
    let word = ik_word(rank, k)?;
    let lambda = Weight::fundamental(rank, k, r)?;
    let pts = lusztig_points(&word, &lambda)?;
    if !pts.settled {
        return Ok(false);
    }
    let outside: Vec<usize> = crate::roots::positive_roots(rank)
        .into_iter()
        .filter(|root| !root.contains(k))
        .map(|root| root.index(rank))
        .collect();
    let enumeration = root_enumeration(&word);
    let rectangle = k * (rank.n() - k + 1);
    let late: Vec<usize> = enumeration.roots()[rectangle..]
        .iter()
        .map(|root| root.index(rank))
        .collect();
    Ok(pts
        .points
        .iter()
        .all(|p| outside.iter().chain(&late).all(|&c| p.0[c] == 0)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombCheck {
    pub crossings: usize,
    pub outside_comb: usize,
    pub removed_by_filter: usize,
}

/// For the word `i^k` and `s = k`: how many dual crossings leave the union of
/// strips `k` and `k+1`, and how many the Reineke filter removes.
pub fn check_comb(rank: Rank, k: usize) -> Result<CombCheck> {
    let tiling = build_tiling(&ik_word(rank, k)?)?;
    let mut comb: BTreeSet<usize> = tiling.strip(k)?.tiles.into_iter().collect();
    comb.extend(tiling.strip(k + 1)?.tiles);
    let crossings = tiling.dual_crossings(k)?;
    let total = crossings.len();
    let outside_comb = crossings
        .iter()
        .filter(|c| c.tiles.iter().any(|t| !comb.contains(t)))
        .count();
    let kept = tiling.reineke_filter(crossings).len();
    Ok(CombCheck {
        crossings: total,
        outside_comb,
        removed_by_filter: total - kept,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileSummary {
    pub id: usize,
    pub labels: [usize; 2],
    pub root: Root,
    /// Peel layer for each start `s = 1..2m`.
    pub layers: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingSummary {
    pub m: usize,
    pub word: Vec<usize>,
    pub tiles: Vec<TileSummary>,
    /// Tile ids of strip `t` at index `t - 1`.
    pub strips: Vec<Vec<usize>>,
}

impl Tiling {
    pub fn summary(&self) -> Result<TilingSummary> {
        let orders: Vec<PeelOrder> = (1..=2 * self.m).map(|s| self.peel_order(s)).collect::<Result<_>>()?;
        let tiles = self
            .tiles
            .iter()
            .map(|t| TileSummary {
                id: t.id,
                labels: [t.labels.0, t.labels.1],
                root: t.root,
                layers: orders.iter().map(|o| o.layer(t.id)).collect(),
            })
            .collect();
        let strips = self.strips()?.into_iter().map(|s| s.tiles).collect();
        Ok(TilingSummary {
            m: self.m,
            word: self.word.letters().to_vec(),
            tiles,
            strips,
        })
    }

    /// Planar picture with label `t` drawn in direction
    /// `(-cos(pi (t - 1/2) / m), sin(pi (t - 1/2) / m))`.
    pub fn to_svg(&self) -> String {
        const UNIT: f64 = 40.0;
        let m = self.m as f64;
        let dir = |t: usize| {
            let a = std::f64::consts::PI * (t as f64 - 0.5) / m;
            (-a.cos() * UNIT, a.sin() * UNIT)
        };
        let corner = |border: &[usize], upto: usize| {
            border[..upto].iter().fold((0.0, 0.0), |(x, y), &e| {
                let (dx, dy) = dir(self.label(e));
                (x + dx, y + dy)
            })
        };
        let mut polys = Vec::new();
        for (k, tile) in self.tiles.iter().enumerate() {
            let p0 = corner(&self.borders[k], tile.position);
            let (ax, ay) = dir(tile.labels.0);
            let (bx, by) = dir(tile.labels.1);
            polys.push((
                tile,
                [
                    p0,
                    (p0.0 + ax, p0.1 + ay),
                    (p0.0 + ax + bx, p0.1 + ay + by),
                    (p0.0 + bx, p0.1 + by),
                ],
            ));
        }
        let height: f64 = (1..=self.m).map(|t| dir(t).1).sum();
        let half_width: f64 = (1..=self.m).map(|t| dir(t).0.abs()).sum::<f64>() / 2.0 + UNIT;
        let pad = 20.0;
        let (w, h) = (2.0 * half_width + 2.0 * pad, height + 2.0 * pad);
        let tx = |x: f64| x + half_width + pad;
        let ty = |y: f64| height - y + pad;

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#
        );
        for (tile, pts) in &polys {
            let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", tx(x), ty(y))).collect();
            let _ = writeln!(
                out,
                r#"  <polygon points="{}" fill="none" stroke="black"/>"#,
                coords.join(" ")
            );
            let cx = pts.iter().map(|p| p.0).sum::<f64>() / 4.0;
            let cy = pts.iter().map(|p| p.1).sum::<f64>() / 4.0;
            let _ = writeln!(
                out,
                r#"  <text x="{:.2}" y="{:.2}" font-size="9" text-anchor="middle">[{},{}]</text>"#,
                tx(cx),
                ty(cy),
                tile.labels.0,
                tile.labels.1
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflv::weyl_dim;
    use crate::roots::{all_reduced_words, lexmax_word, lexmin_word};

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn word(n: usize, letters: &[usize]) -> ReducedWord {
        ReducedWord::new(rank(n), letters.to_vec()).unwrap()
    }

    fn labels(t: &Tiling) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = t.tiles.iter().map(|t| t.labels).collect();
        v.sort();
        v
    }

    #[test]
    fn standard_and_antistandard_tilings() {
        let all = vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        let min = build_tiling(&lexmin_word(rank(3))).unwrap();
        let max = build_tiling(&lexmax_word(rank(3))).unwrap();
        assert_eq!(labels(&min), all);
        assert_eq!(labels(&max), all);
        assert_ne!(min.tiles, max.tiles);
        let s1: Vec<(usize, usize)> = min
            .strip(1)
            .unwrap()
            .tiles
            .iter()
            .map(|&t| min.tile(t).labels)
            .collect();
        assert_eq!(s1, vec![(1, 2), (1, 3), (1, 4)]);
    }

    #[test]
    fn standard_tiling_adjacency() {
        // [2,3] is the central tile of the standard picture
        let min = build_tiling(&lexmin_word(rank(3))).unwrap();
        let id = |a, b| min.tile_with_labels(a, b).unwrap();
        let nb = |t| {
            let mut v: Vec<(usize, usize)> = min.neighbours(t).map(|(u, _)| min.tile(u).labels).collect();
            v.sort();
            v
        };
        assert_eq!(nb(id(1, 2)), vec![(1, 3), (2, 3)]);
        assert_eq!(nb(id(1, 4)), vec![(1, 3), (2, 4)]);
        assert_eq!(nb(id(2, 3)), vec![(1, 2), (1, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn every_word_builds() {
        for n in 1..=4 {
            for w in all_reduced_words(rank(n)) {
                let t = build_tiling(&w).unwrap();
                for strip in t.strips().unwrap() {
                    assert_eq!(strip.tiles.len(), n);
                }
                for s in 1..=2 * t.m {
                    let order = t.peel_order(s).unwrap();
                    assert!(order.layers.iter().all(|&l| l >= 1));
                }
            }
        }
    }

    #[test]
    fn strips_meet_in_their_common_tile() {
        let t = build_tiling(&ik_word(rank(4), 2).unwrap()).unwrap();
        for a in 1..=5 {
            for b in a + 1..=5 {
                let sa: BTreeSet<usize> = t.strip(a).unwrap().tiles.into_iter().collect();
                let sb: BTreeSet<usize> = t.strip(b).unwrap().tiles.into_iter().collect();
                let common: Vec<usize> = sa.intersection(&sb).copied().collect();
                assert_eq!(common, vec![t.tile_with_labels(a, b).unwrap()]);
            }
        }
    }

    #[test]
    fn non_reduced_input_is_rejected() {
        assert!(ReducedWord::new(rank(2), vec![1, 1, 2]).is_err());
    }

    #[test]
    fn hexagon_peeling() {
        let t = build_tiling(&word(2, &[1, 2, 1])).unwrap();
        let id = |a, b| t.tile_with_labels(a, b).unwrap();
        let order = t.peel_order(4).unwrap();
        assert_eq!(order.layer(id(1, 3)), 1);
        assert_eq!(order.layer(id(1, 2)), 2);
        assert_eq!(order.layer(id(2, 3)), 3);
        // starting from the right boundary only the tile touching it twice peels first
        let right = t.peel_order(2 * t.m).unwrap();
        let first: Vec<usize> = (0..3).filter(|&i| right.layer(i) == 1).collect();
        assert_eq!(first.len(), 1);
        let edges = t.tile(first[0]).edges();
        assert_eq!(edges.iter().filter(|e| t.right_boundary.contains(e)).count(), 2);
    }

    #[test]
    fn hexagon_crossings_and_rows() {
        let t = build_tiling(&word(2, &[1, 2, 1])).unwrap();
        let id = |a, b| t.tile_with_labels(a, b).unwrap();
        let c1 = t.dual_crossings(1).unwrap();
        let seqs: Vec<Vec<usize>> = c1.iter().map(|c| c.strip_sequence.clone()).collect();
        assert_eq!(c1.len(), 2);
        assert!(c1.iter().any(|c| c.tiles == vec![id(1, 3), id(1, 2), id(2, 3)]));
        assert!(seqs.contains(&vec![1, 2]));
        assert!(seqs.contains(&vec![1, 3, 2]));
        let rows: BTreeSet<Vec<i64>> = c1.iter().map(|c| t.crossing_functional(c)).collect();
        // coordinates (x11, x12, x22)
        assert_eq!(rows, [vec![1, 1, -1], vec![0, 1, 0]].into_iter().collect());
        let c2 = t.dual_crossings(2).unwrap();
        assert_eq!(c2.len(), 1);
        assert_eq!(t.crossing_functional(&c2[0]), vec![0, 0, 1]);
    }

    #[test]
    fn comb_is_always_found() {
        for n in 1..=4 {
            for w in all_reduced_words(rank(n)).into_iter().take(200) {
                let t = build_tiling(&w).unwrap();
                for s in 1..=n {
                    let cs = t.dual_crossings(s).unwrap();
                    let comb: Vec<&DualCrossing> = cs.iter().filter(|c| c.strip_sequence == [s, s + 1]).collect();
                    assert_eq!(comb.len(), 1, "word {w} s={s}");
                    assert!(t.is_reineke(comb[0]));
                    let row = t.crossing_functional(comb[0]);
                    for &tile in &comb[0].tiles {
                        let (a, b) = t.tile(tile).labels;
                        let expected = if a <= s && s < b { 1 } else { -1 };
                        assert_eq!(row[t.tile(tile).root.index(t.rank())], expected);
                    }
                    for c in &cs {
                        assert!(t.crossing_functional(c).iter().all(|v| (-1..=1).contains(v)));
                    }
                }
            }
        }
    }

    #[test]
    fn dual_comb_of_ik_is_ascending() {
        for n in 1..=5 {
            for k in 1..=n {
                let t = build_tiling(&ik_word(rank(n), k).unwrap()).unwrap();
                let order = t.peel_order(t.m + k).unwrap();
                let mut sk = t.strip(k).unwrap().tiles;
                sk.reverse();
                let turn = t.tile_with_labels(k, k + 1).unwrap();
                let cut = sk.iter().position(|&x| x == turn).unwrap();
                let sk1 = t.strip(k + 1).unwrap().tiles;
                let from = sk1.iter().position(|&x| x == turn).unwrap();
                let comb: Vec<usize> = sk[..=cut].iter().chain(&sk1[from + 1..]).copied().collect();
                for w in comb.windows(2) {
                    assert!(order.layer(w[0]) < order.layer(w[1]), "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn lusztig_examples() {
        let w = ik_word(rank(2), 1).unwrap();
        let pts = lusztig_points(&w, &Weight::new(rank(2), vec![1, 0]).unwrap()).unwrap();
        assert!(pts.settled);
        assert_eq!(
            pts.points.points().iter().map(|p| p.0.clone()).collect::<Vec<_>>(),
            vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 0, 0]]
        );
        let w = ik_word(rank(3), 2).unwrap();
        let pts = lusztig_points(&w, &Weight::new(rank(3), vec![0, 1, 0]).unwrap()).unwrap();
        assert_eq!(pts.points.len(), 6);
        for w in all_reduced_words(rank(3)) {
            let pts = lusztig_points(&w, &Weight::zero(rank(3))).unwrap();
            assert_eq!(pts.points.len(), 1);
        }
    }

    #[test]
    fn lusztig_counts_are_weyl_dimensions() {
        for n in 2..=3 {
            for w in all_reduced_words(rank(n)) {
                for lambda in Weight::all_up_to(rank(n), 2) {
                    let pts = lusztig_points(&w, &lambda).unwrap();
                    assert!(pts.settled, "word {w} lambda {lambda}");
                    assert_eq!(pts.points.len() as u128, weyl_dim(&lambda).unwrap());
                }
            }
        }
    }

    #[test]
    fn rectangle_support_and_comb() {
        for n in 1..=4 {
            for k in 1..=n {
                for r in 0..=2 {
                    assert!(check_rectangle_support(rank(n), k, r).unwrap(), "n={n} k={k} r={r}");
                }
                let b = check_comb(rank(n), k).unwrap();
                assert_eq!(b.removed_by_filter, 0, "n={n} k={k}");
                assert!(b.crossings >= 1);
            }
        }
    }

    #[test]
    fn crossings_can_leave_the_comb() {
        // the crossings through the rectangle corner [1,4] use a tile outside strips 2 and 3
        let b = check_comb(rank(3), 2).unwrap();
        assert_eq!((b.crossings, b.outside_comb), (5, 4));
        assert_eq!(check_comb(rank(3), 1).unwrap().outside_comb, 0);
    }

    #[test]
    fn summary_and_svg() {
        let t = build_tiling(&lexmin_word(rank(3))).unwrap();
        let s = t.summary().unwrap();
        assert_eq!(s.tiles.len(), 6);
        assert!(s.tiles.iter().all(|t| t.layers.len() == 8));
        assert_eq!(s.strips.len(), 4);
        let svg = t.to_svg();
        assert_eq!(svg.matches("<polygon").count(), 6);
        assert!(svg.contains("[1,4]"));
    }

    mod props {
        use super::*;
        use crate::roots::random_reduced_word;
        use proptest::prelude::*;
        use rand::rngs::StdRng;
        use rand::SeedableRng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn random_words_give_valid_tilings(seed in any::<u64>(), n in 4usize..6) {
                let mut rng = StdRng::seed_from_u64(seed);
                let w = random_reduced_word(rank(n), &mut rng);
                let t = build_tiling(&w).unwrap();
                prop_assert!(t.validate().is_ok());
                for s in 1..=2 * t.m {
                    prop_assert!(t.peel_order(s).is_ok());
                }
            }
        }
    }
}
