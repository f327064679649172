//! Crystal graphs on FFLV lattice points.

pub mod axioms;
pub mod candidates;
pub mod export;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod search;
pub mod sl3;

pub use axioms::{check_local_axioms, AxiomReport, Violation};
pub use candidates::{candidate_edges, fixed_k_graph, pb_graph, CandidateEdge};
pub use graph::{CrystalEdge, CrystalGraph, IndexedCrystal};
pub use iso::{check_oracle_iso, IsoReport};
pub use oracle::{word_oracle, WordCrystal};
pub use search::{conjecture_search, fixed_k_crystals, SearchMode, SearchReport};
pub use sl3::{critical_points, sl3_bgt, sl3_blt};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::LatticePoint;
    use crate::roots::{Rank, Weight};
    use std::collections::BTreeSet;

    fn weight(c: &[i64]) -> Weight {
        Weight::new(Rank::new(c.len()).unwrap(), c.to_vec()).unwrap()
    }

    fn code(p: &LatticePoint) -> String {
        p.0.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn candidates_at_a_vertex() {
        let lambda = weight(&[1, 1]);
        let c = candidate_edges(&lambda, &LatticePoint(vec![0, 0, 1])).unwrap();
        let red: BTreeSet<(usize, String)> = c
            .iter()
            .filter(|c| c.color == 1)
            .map(|c| (c.k, code(&c.target)))
            .collect();
        assert_eq!(
            red,
            [(1, "101".to_string()), (2, "010".to_string())].into_iter().collect()
        );
        let zero = candidate_edges(&lambda, &LatticePoint(vec![0, 0, 0])).unwrap();
        assert!(zero.iter().all(|c| c.k == c.color && c.index.is_none()));
        assert!(candidate_edges(&lambda, &LatticePoint(vec![2, 0, 0])).is_err());
    }

    #[test]
    fn adjoint_pb_graph() {
        let g = pb_graph(&weight(&[1, 1])).unwrap();
        assert_eq!(g.vertices.len(), 8);
        let edges = |color| -> BTreeSet<(String, String)> {
            g.edges_of_color(color)
                .map(|e| (code(&e.source), code(&e.target)))
                .collect()
        };
        let expect = |l: &[(&str, &str)]| -> BTreeSet<(String, String)> {
            l.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
        };
        assert_eq!(
            edges(1),
            expect(&[
                ("000", "100"),
                ("001", "101"),
                ("001", "010"),
                ("010", "110"),
                ("101", "110"),
                ("011", "020")
            ])
        );
        assert_eq!(
            edges(2),
            expect(&[
                ("000", "001"),
                ("100", "101"),
                ("100", "010"),
                ("010", "011"),
                ("101", "011"),
                ("110", "020")
            ])
        );
        assert!(g.weight_violations().unwrap().is_empty());
        let trivial = pb_graph(&weight(&[0, 0])).unwrap();
        assert_eq!((trivial.vertices.len(), trivial.edges.len()), (1, 0));
    }

    #[test]
    fn pb_vertices_are_fflv_points() {
        for n in 1..=3 {
            for w in Weight::all_up_to(Rank::new(n).unwrap(), 2) {
                let g = pb_graph(&w).unwrap();
                assert_eq!(g.vertices, crate::fflv::fflv_points(&w).unwrap());
                assert!(g.weight_violations().unwrap().is_empty());
            }
        }
    }

    #[test]
    fn deleting_an_edge_breaks_the_axioms() {
        let mut g = sl3_bgt(1, 1).unwrap();
        let edge = g.edges_of_color(1).next().unwrap().clone();
        g.remove_edge(&edge);
        let report = check_local_axioms(&g);
        assert!(!report.passed());
        assert!(!report.violations[0].vertex.is_empty());
        assert!(!check_oracle_iso(&g).isomorphic);
    }

    #[test]
    fn swapping_edges_breaks_isomorphism() {
        let mut g = sl3_bgt(1, 1).unwrap();
        // 001 -> 101 and 011 -> 020 become 001 -> 020 and 011 -> 101
        let p = |v: [i64; 3]| LatticePoint(v.to_vec());
        for (s, t) in [([0, 0, 1], [1, 0, 1]), ([0, 1, 1], [0, 2, 0])] {
            assert!(g.remove_edge(&CrystalEdge {
                source: p(s),
                color: 1,
                target: p(t)
            }));
        }
        g.add_edge(p([0, 0, 1]), 1, p([0, 2, 0])).unwrap();
        g.add_edge(p([0, 1, 1]), 1, p([1, 0, 1])).unwrap();
        assert!(!check_oracle_iso(&g).isomorphic);
    }

    #[test]
    fn dot_and_json() {
        let g = sl3_bgt(1, 1).unwrap();
        let dot = export::to_dot(&g);
        assert_eq!(dot.lines().filter(|l| l.ends_with(';') && !l.contains("->")).count(), 8);
        assert_eq!(dot.matches("->").count(), 8);
        assert!(dot.contains("color=red") && dot.contains("color=blue"));
        assert_eq!(export::color_name(4), "red");
        let json = export::to_json(&g).unwrap();
        let back: CrystalGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn fixed_k_moves_for_fundamental_multiples() {
        for n in 1..=3 {
            for k in 1..=n {
                for r in 1..=3 {
                    let w = Weight::fundamental(Rank::new(n).unwrap(), k, r).unwrap();
                    let found = fixed_k_crystals(&w, k, search::DEFAULT_BUDGET).unwrap();
                    assert!(!found.incomplete);
                    assert_eq!(found.graphs.len(), 1, "n={n} k={k} r={r}");
                    let g = &found.graphs[0];
                    assert!(check_local_axioms(g).passed());
                    assert!(check_oracle_iso(g).isomorphic);
                    if r == 1 {
                        // one move per vertex and color, so no choice is needed
                        assert_eq!(&fixed_k_graph(&w, k).unwrap(), g);
                    }
                }
            }
        }
    }
}
