//! Local checks for crystal graphs of type `A_n`.
//!
//! Besides partial bijectivity and acyclicity of every color, the checks are:
//! string lengths match the weight (`phi_a - eps_a = mu_a - mu_{a+1}`),
//! distant colors commute without disturbing each other's strings, and
//! adjacent colors satisfy the Stembridge relations for both raising and
//! lowering operators.

use serde::{Deserialize, Serialize};

use crate::crystal::graph::{CrystalGraph, IndexedCrystal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub vertex: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub vertices: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

const MAX_VIOLATIONS: usize = 64;

pub fn check_local_axioms(graph: &CrystalGraph) -> AxiomReport {
    match graph.indexed() {
        Ok(ic) => check_indexed(&ic),
        Err(err) => AxiomReport {
            vertices: graph.vertices.len(),
            violations: vec![Violation {
                axiom: "partial bijectivity".into(),
                vertex: match &err {
                    crate::Error::MultipleEdges { vertex, .. } => format!("{vertex:?}"),
                    _ => String::new(),
                },
                detail: err.to_string(),
            }],
        },
    }
}

struct Strings {
    eps: Vec<Vec<usize>>,
    phi: Vec<Vec<usize>>,
}

/// String lengths, or the vertices lying on a monochromatic cycle.
fn strings(ic: &IndexedCrystal) -> Result<Strings, (usize, usize)> {
    let size = ic.len();
    let mut eps = vec![vec![0; size]; ic.n];
    let mut phi = vec![vec![0; size]; ic.n];
    for a in 1..=ic.n {
        let mut seen = vec![false; size];
        for top in (0..size).filter(|&v| ic.e(a, v).is_none()) {
            let mut chain = vec![top];
            while let Some(next) = ic.f(a, *chain.last().expect("chain is nonempty")) {
                chain.push(next);
            }
            let len = chain.len();
            for (d, &v) in chain.iter().enumerate() {
                seen[v] = true;
                eps[a - 1][v] = d;
                phi[a - 1][v] = len - 1 - d;
            }
        }
        if let Some(v) = (0..size).find(|&v| !seen[v]) {
            return Err((a, v));
        }
    }
    Ok(Strings { eps, phi })
}

fn iterate(ic: &IndexedCrystal, raise: bool, ops: &[usize], v: usize) -> Option<usize> {
    ops.iter()
        .try_fold(v, |x, &a| if raise { ic.e(a, x) } else { ic.f(a, x) })
}

pub fn check_indexed(ic: &IndexedCrystal) -> AxiomReport {
    let mut report = AxiomReport {
        vertices: ic.len(),
        violations: Vec::new(),
    };
    let mut flag = |axiom: &str, v: usize, detail: String| {
        if report.violations.len() < MAX_VIOLATIONS {
            report.violations.push(Violation {
                axiom: axiom.into(),
                vertex: ic.labels[v].clone(),
                detail,
            });
        }
    };

    let st = match strings(ic) {
        Ok(st) => st,
        Err((a, v)) => {
            flag("acyclicity", v, format!("color {a} cycle"));
            return report;
        }
    };
    let eps = |a: usize, v: usize| st.eps[a - 1][v] as i64;
    let phi = |a: usize, v: usize| st.phi[a - 1][v] as i64;

    for v in 0..ic.len() {
        let mu = &ic.weights[v];
        for a in 1..=ic.n {
            let pairing = mu[a - 1] - mu[a];
            if phi(a, v) - eps(a, v) != pairing {
                flag(
                    "weight",
                    v,
                    format!(
                        "color {a}: phi - eps = {} but weight pairing is {pairing}",
                        phi(a, v) - eps(a, v)
                    ),
                );
            }
            if let Some(t) = ic.f(a, v) {
                let ok = (0..mu.len()).all(|i| {
                    let shift = if i + 1 == a {
                        -1
                    } else if i == a {
                        1
                    } else {
                        0
                    };
                    ic.weights[t][i] == mu[i] + shift
                });
                if !ok {
                    flag(
                        "weight",
                        v,
                        format!("color {a} edge does not lower the weight by alpha_{a}"),
                    );
                }
            }
        }

        for a in 1..=ic.n {
            for b in 1..=ic.n {
                if a == b {
                    continue;
                }
                if a.abs_diff(b) >= 2 {
                    for raise in [false, true] {
                        let name = if raise { "e" } else { "f" };
                        let x = iterate(ic, raise, &[a], v);
                        if let Some(x) = x {
                            if eps(b, x) != eps(b, v) || phi(b, x) != phi(b, v) {
                                flag("distant colors", v, format!("{name}_{a} changes the {b}-string"));
                            }
                        }
                        if a < b && iterate(ic, raise, &[b, a], v) != iterate(ic, raise, &[a, b], v) {
                            flag("distant colors", v, format!("{name}_{a} and {name}_{b} do not commute"));
                        }
                    }
                    continue;
                }
                check_adjacent(ic, &eps, &phi, v, a, b, &mut flag);
            }
        }
    }
    report
}

/// Stembridge relations for adjacent colors `a`, `b` at `v`, for raising
/// operators and, dually, lowering operators.
fn check_adjacent(
    ic: &IndexedCrystal,
    eps: &dyn Fn(usize, usize) -> i64,
    phi: &dyn Fn(usize, usize) -> i64,
    v: usize,
    a: usize,
    b: usize,
    flag: &mut dyn FnMut(&str, usize, String),
) {
    for raise in [true, false] {
        let name = if raise { "e" } else { "f" };
        // the string statistic that grows by one along the operator's direction
        let (grow, shrink) = if raise { (eps, phi) } else { (phi, eps) };
        let delta = |op: usize, stat: usize| -> Option<(i64, i64)> {
            iterate(ic, raise, &[op], v).map(|x| (grow(stat, x) - grow(stat, v), shrink(stat, x) - shrink(stat, v)))
        };
        let Some(dab) = delta(a, b) else { continue };
        if dab != (1, 0) && dab != (0, -1) {
            flag(
                "adjacent colors",
                v,
                format!("{name}_{a} changes the {b}-string by {dab:?}"),
            );
            continue;
        }
        if a > b {
            continue;
        }
        let Some(dba) = delta(b, a) else { continue };
        if dba != (1, 0) && dba != (0, -1) {
            continue;
        }
        if dab.0 == 0 && dba.0 == 0 {
            if iterate(ic, raise, &[b, a], v) != iterate(ic, raise, &[a, b], v)
                || iterate(ic, raise, &[a, b], v).is_none()
            {
                flag(
                    "adjacent colors",
                    v,
                    format!("{name}_{a}{name}_{b} != {name}_{b}{name}_{a}"),
                );
            }
        } else if dab.0 == 1 && dba.0 == 1 {
            let left = iterate(ic, raise, &[a, b, b, a], v);
            let right = iterate(ic, raise, &[b, a, a, b], v);
            if left != right || left.is_none() {
                flag(
                    "adjacent colors",
                    v,
                    format!("{name}_{a}{name}_{b}^2{name}_{a} != {name}_{b}{name}_{a}^2{name}_{b}"),
                );
            }
        }
    }
}
