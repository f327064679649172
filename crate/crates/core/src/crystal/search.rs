//! Choosing at most one candidate move per vertex and color so that the
//! result is a crystal.
//!
//! Greedy mode ranks the words `i^k` by a permutation `sigma`
//! (`w_{sigma(1)} > ... > w_{sigma(n)}`) and picks the best-ranked move at
//! each vertex, then validates the result. Exhaustive mode enumerates every
//! selection isomorphic to the word crystal: it grows a bijection from word
//! crystal vertices to FFLV points along the oracle's edges, each of which
//! must be realised by a candidate move.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::crystal::axioms::check_local_axioms;
use crate::crystal::candidates::{all_candidates, CandidateEdge};
use crate::crystal::graph::{CrystalGraph, IndexedCrystal};
use crate::crystal::iso::check_oracle_iso;
use crate::crystal::oracle::word_oracle;
use crate::error::{Error, Result};
use crate::polytope::PointSet;
use crate::roots::Weight;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Greedy,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub graph: CrystalGraph,
    pub isomorphic: bool,
    pub axioms_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub mode: SearchMode,
    pub lambda: Weight,
    pub sigma: Vec<usize>,
    pub outcomes: Vec<SearchOutcome>,
    pub nodes: u64,
    pub incomplete: bool,
}

impl SearchReport {
    pub fn valid_count(&self) -> usize {
        self.outcomes.iter().filter(|o| o.isomorphic && o.axioms_pass).count()
    }
}

fn check_sigma(n: usize, sigma: &[usize]) -> Result<()> {
    let set: BTreeSet<usize> = sigma.iter().copied().collect();
    if sigma.len() != n || set != (1..=n).collect() {
        return Err(Error::InvalidPermutation(sigma.to_vec()));
    }
    Ok(())
}

fn outcome(graph: CrystalGraph) -> SearchOutcome {
    let isomorphic = check_oracle_iso(&graph).isomorphic;
    let axioms_pass = check_local_axioms(&graph).passed();
    SearchOutcome {
        graph,
        isomorphic,
        axioms_pass,
    }
}

pub fn conjecture_search(lambda: &Weight, sigma: &[usize], mode: SearchMode, budget: u64) -> Result<SearchReport> {
    check_sigma(lambda.rank().n(), sigma)?;
    let (outcomes, nodes, incomplete) = match mode {
        SearchMode::Greedy => (vec![outcome(greedy(lambda, sigma)?)], 0, false),
        SearchMode::Exhaustive => {
            let found = exhaustive(lambda, budget)?;
            let outcomes = found.graphs.into_iter().map(outcome).collect();
            (outcomes, found.nodes, found.incomplete)
        }
    };
    Ok(SearchReport {
        mode,
        lambda: lambda.clone(),
        sigma: sigma.to_vec(),
        outcomes,
        nodes,
        incomplete,
    })
}

/// Best-ranked `k` first, then the smallest free index. Targets already
/// chosen by another vertex for the same color are skipped.
pub fn greedy(lambda: &Weight, sigma: &[usize]) -> Result<CrystalGraph> {
    let n = lambda.rank().n();
    check_sigma(n, sigma)?;
    let rank_of = |k: usize| sigma.iter().position(|&s| s == k).expect("sigma is a permutation");
    let (points, cands) = all_candidates(lambda)?;
    let mut by_vertex: BTreeMap<(usize, usize), Vec<&CandidateEdge>> = BTreeMap::new();
    for c in &cands {
        let v = points.index_of(&c.source).expect("candidate source is a vertex");
        by_vertex.entry((v, c.color)).or_default().push(c);
    }
    for list in by_vertex.values_mut() {
        list.sort_by_key(|c| (rank_of(c.k), c.index));
    }

    let mut g = CrystalGraph::new(lambda.clone(), points.clone());
    let mut taken: HashSet<(usize, usize)> = HashSet::new();
    for v in traversal_order(&points, &by_vertex) {
        for a in 1..=n {
            let Some(list) = by_vertex.get(&(v, a)) else { continue };
            let choice = list.iter().find(|c| {
                let t = points.index_of(&c.target).expect("candidate target is a vertex");
                !taken.contains(&(t, a))
            });
            if let Some(c) = choice {
                taken.insert((points.index_of(&c.target).expect("target is a vertex"), a));
                g.add_edge(c.source.clone(), a, c.target.clone())?;
            }
        }
    }
    Ok(g)
}

/// Breadth-first from the origin along candidate moves, then any leftovers.
fn traversal_order(points: &PointSet, by_vertex: &BTreeMap<(usize, usize), Vec<&CandidateEdge>>) -> Vec<usize> {
    let mut seen = vec![false; points.len()];
    let mut order = Vec::with_capacity(points.len());
    let mut queue = VecDeque::new();
    if !points.is_empty() {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for ((_, _), list) in by_vertex.range((v, 0)..(v + 1, 0)) {
            for c in list {
                let t = points.index_of(&c.target).expect("candidate target is a vertex");
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
    }
    order.extend((0..points.len()).filter(|&v| !seen[v]));
    order
}

pub struct ExhaustiveResult {
    pub graphs: Vec<CrystalGraph>,
    pub nodes: u64,
    pub incomplete: bool,
}

struct Search<'a> {
    oracle: &'a IndexedCrystal,
    order: Vec<usize>,
    /// First edge reaching each oracle vertex: (parent, color).
    parent: Vec<Option<(usize, usize)>>,
    /// `moves[a-1][v]`: candidate targets of color `a` at FFLV vertex `v`.
    moves: Vec<Vec<Vec<usize>>>,
    assign: Vec<Option<usize>>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
    incomplete: bool,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn has_move(&self, a: usize, from: usize, to: usize) -> bool {
        self.moves[a - 1][from].contains(&to)
    }

    fn consistent(&self, w: usize, x: usize) -> bool {
        for a in 1..=self.oracle.n {
            if let Some(u) = self.oracle.f(a, w) {
                if let Some(y) = self.assign[u] {
                    if !self.has_move(a, x, y) {
                        return false;
                    }
                }
            }
            if let Some(u) = self.oracle.e(a, w) {
                if let Some(y) = self.assign[u] {
                    if !self.has_move(a, y, x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, pos: usize) {
        if self.incomplete {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.incomplete = true;
            return;
        }
        if pos == self.order.len() {
            self.found
                .push(self.assign.iter().map(|x| x.expect("all assigned")).collect());
            return;
        }
        let w = self.order[pos];
        let (p, a) = self.parent[w].expect("non-root vertices have a parent");
        let from = self.assign[p].expect("parent assigned first");
        let options = self.moves[a - 1][from].clone();
        for x in options {
            if self.used[x] || !self.consistent(w, x) {
                continue;
            }
            self.assign[w] = Some(x);
            self.used[x] = true;
            self.run(pos + 1);
            self.used[x] = false;
            self.assign[w] = None;
        }
    }
}

/// Every selection of candidate moves forming a graph isomorphic to the
/// word crystal, up to `budget` search nodes.
pub fn exhaustive(lambda: &Weight, budget: u64) -> Result<ExhaustiveResult> {
    exhaustive_with(lambda, budget, |_| true)
}

/// As [`exhaustive`], using only the candidate moves accepted by `allow`.
pub fn exhaustive_with<F>(lambda: &Weight, budget: u64, allow: F) -> Result<ExhaustiveResult>
where
    F: Fn(&CandidateEdge) -> bool,
{
    let n = lambda.rank().n();
    let (points, cands) = all_candidates(lambda)?;
    let oracle = word_oracle(lambda).indexed();
    if oracle.len() != points.len() {
        return Ok(ExhaustiveResult {
            graphs: Vec::new(),
            nodes: 0,
            incomplete: false,
        });
    }
    let mut moves = vec![vec![Vec::new(); points.len()]; n];
    for c in cands.iter().filter(|c| allow(c)) {
        let s = points.index_of(&c.source).expect("source is a vertex");
        let t = points.index_of(&c.target).expect("target is a vertex");
        let list = &mut moves[c.color - 1][s];
        if !list.contains(&t) {
            list.push(t);
        }
    }

    // oracle vertices are stored in breadth-first order from the highest word
    let mut parent = vec![None; oracle.len()];
    let mut seen = vec![false; oracle.len()];
    seen[0] = true;
    let mut order = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for a in 1..=n {
            if let Some(t) = oracle.f(a, v) {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((v, a));
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }
    }

    let origin = points
        .index_of(&crate::polytope::LatticePoint::zero(points.dim()))
        .ok_or(Error::EmptyPointSet)?;
    let mut assign = vec![None; oracle.len()];
    assign[0] = Some(origin);
    let mut used = vec![false; points.len()];
    used[origin] = true;
    let mut search = Search {
        oracle: &oracle,
        order,
        parent,
        moves,
        assign,
        used,
        nodes: 0,
        budget,
        incomplete: false,
        found: Vec::new(),
    };
    search.run(0);

    let mut seen_edges = BTreeSet::new();
    let mut graphs = Vec::new();
    for bijection in &search.found {
        let mut g = CrystalGraph::new(lambda.clone(), points.clone());
        for (w, &x) in bijection.iter().enumerate() {
            for a in 1..=n {
                if let Some(u) = oracle.f(a, w) {
                    g.add_edge(points.points()[x].clone(), a, points.points()[bijection[u]].clone())?;
                }
            }
        }
        if seen_edges.insert(g.edges.clone()) {
            graphs.push(g);
        }
    }
    graphs.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(ExhaustiveResult {
        graphs,
        nodes: search.nodes,
        incomplete: search.incomplete,
    })
}

/// Crystal structures that use only moves of the word `k^*`, with the
/// number found. For multiples of the `k`-th fundamental weight this is
/// expected to be exactly one.
pub fn fixed_k_crystals(lambda: &Weight, k: usize, budget: u64) -> Result<ExhaustiveResult> {
    let n = lambda.rank().n();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    exhaustive_with(lambda, budget, |c| c.k == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::sl3::{sl3_bgt, sl3_blt};
    use crate::roots::Rank;

    fn weight(c: &[i64]) -> Weight {
        Weight::new(Rank::new(c.len()).unwrap(), c.to_vec()).unwrap()
    }

    #[test]
    fn rank_one_has_one_graph() {
        for r in 0..=4 {
            let report = conjecture_search(&weight(&[r]), &[1], SearchMode::Exhaustive, DEFAULT_BUDGET).unwrap();
            assert_eq!(report.outcomes.len(), 1);
            assert_eq!(report.valid_count(), 1);
            let greedy = conjecture_search(&weight(&[r]), &[1], SearchMode::Greedy, DEFAULT_BUDGET).unwrap();
            assert_eq!(greedy.outcomes[0].graph, report.outcomes[0].graph);
        }
    }

    #[test]
    fn adjoint_search_finds_both_constructions() {
        let report = conjecture_search(&weight(&[1, 1]), &[1, 2], SearchMode::Exhaustive, DEFAULT_BUDGET).unwrap();
        assert!(!report.incomplete);
        assert_eq!(report.valid_count(), report.outcomes.len());
        let graphs: Vec<&CrystalGraph> = report.outcomes.iter().map(|o| &o.graph).collect();
        assert!(graphs.contains(&&sl3_bgt(1, 1).unwrap()));
        assert!(graphs.contains(&&sl3_blt(1, 1).unwrap()));
    }

    #[test]
    fn bad_permutation_is_rejected() {
        assert!(conjecture_search(&weight(&[1, 1]), &[1, 1], SearchMode::Greedy, 10).is_err());
    }

    #[test]
    fn tiny_budget_marks_incomplete() {
        let report = conjecture_search(&weight(&[1, 1]), &[2, 1], SearchMode::Exhaustive, 3).unwrap();
        assert!(report.incomplete);
    }
}
