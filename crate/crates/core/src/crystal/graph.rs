use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{LatticePoint, PointSet};
use crate::roots::{weight_of_point, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrystalEdge {
    pub source: LatticePoint,
    pub color: usize,
    pub target: LatticePoint,
}

/// A colored directed graph on lattice points. Edges of color `a` model the
/// lowering operator `f_a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub n: usize,
    pub lambda: Weight,
    pub vertices: PointSet,
    pub edges: BTreeSet<CrystalEdge>,
}

impl CrystalGraph {
    pub fn new(lambda: Weight, vertices: PointSet) -> Self {
        CrystalGraph {
            n: lambda.rank().n(),
            lambda,
            vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, source: LatticePoint, color: usize, target: LatticePoint) -> Result<bool> {
        if color == 0 || color > self.n {
            return Err(Error::IndexOutOfRange { k: color, n: self.n });
        }
        for p in [&source, &target] {
            if !self.vertices.contains(p) {
                return Err(Error::OutsidePolytope(p.0.clone()));
            }
        }
        Ok(self.edges.insert(CrystalEdge { source, color, target }))
    }

    pub fn remove_edge(&mut self, edge: &CrystalEdge) -> bool {
        self.edges.remove(edge)
    }

    pub fn edges_of_color(&self, color: usize) -> impl Iterator<Item = &CrystalEdge> {
        self.edges.iter().filter(move |e| e.color == color)
    }

    /// Edges whose endpoints do not differ in content by `e_a - e_{a+1}`.
    pub fn weight_violations(&self) -> Result<Vec<CrystalEdge>> {
        let mut bad = Vec::new();
        for e in &self.edges {
            let ws = weight_of_point(&self.lambda, &e.source.0)?;
            let wt = weight_of_point(&self.lambda, &e.target.0)?;
            let a = e.color;
            let ok = (0..ws.len()).all(|i| {
                let shift = if i + 1 == a {
                    -1
                } else if i == a {
                    1
                } else {
                    0
                };
                wt[i] == ws[i] + shift
            });
            if !ok {
                bad.push(e.clone());
            }
        }
        Ok(bad)
    }

    /// Successor/predecessor tables; fails when a vertex has two edges of
    /// one color leaving or entering it.
    pub fn indexed(&self) -> Result<IndexedCrystal> {
        let size = self.vertices.len();
        let mut f = vec![vec![None; size]; self.n];
        let mut e = vec![vec![None; size]; self.n];
        for edge in &self.edges {
            let s = self
                .vertices
                .index_of(&edge.source)
                .ok_or_else(|| Error::OutsidePolytope(edge.source.0.clone()))?;
            let t = self
                .vertices
                .index_of(&edge.target)
                .ok_or_else(|| Error::OutsidePolytope(edge.target.0.clone()))?;
            let c = edge.color - 1;
            if f[c][s].replace(t).is_some() {
                return Err(self.multiple(&edge.source, edge.color));
            }
            if e[c][t].replace(s).is_some() {
                return Err(self.multiple(&edge.target, edge.color));
            }
        }
        let weights = self
            .vertices
            .iter()
            .map(|p| weight_of_point(&self.lambda, &p.0))
            .collect::<Result<Vec<_>>>()?;
        let labels = self.vertices.iter().map(|p| p.to_string()).collect();
        Ok(IndexedCrystal {
            n: self.n,
            weights,
            labels,
            f,
            e,
        })
    }

    fn multiple(&self, vertex: &LatticePoint, color: usize) -> Error {
        let out = self
            .edges
            .iter()
            .filter(|e| e.color == color && &e.source == vertex)
            .count();
        let inc = self
            .edges
            .iter()
            .filter(|e| e.color == color && &e.target == vertex)
            .count();
        Error::MultipleEdges {
            vertex: vertex.0.clone(),
            color,
            count: out.max(inc),
        }
    }
}

/// A crystal-like graph on vertices `0..len` with partial maps per color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedCrystal {
    pub n: usize,
    /// Content vector of each vertex, length `n + 1`.
    pub weights: Vec<Vec<i64>>,
    pub labels: Vec<String>,
    /// `f[a-1][v]`: target of the color-`a` edge leaving `v`.
    pub f: Vec<Vec<Option<usize>>>,
    /// `e[a-1][v]`: source of the color-`a` edge entering `v`.
    pub e: Vec<Vec<Option<usize>>>,
}

impl IndexedCrystal {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn f(&self, a: usize, v: usize) -> Option<usize> {
        self.f[a - 1][v]
    }

    pub fn e(&self, a: usize, v: usize) -> Option<usize> {
        self.e[a - 1][v]
    }

    /// Vertices without incoming edges of any color.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| (1..=self.n).all(|a| self.e(a, v).is_none()))
            .collect()
    }
}
