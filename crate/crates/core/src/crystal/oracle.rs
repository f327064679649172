//! The highest-weight crystal realised on words over `1..=n+1` with the
//! signature rule.

use std::collections::{HashMap, VecDeque};

use crate::crystal::graph::IndexedCrystal;
use crate::roots::Weight;

/// `lambda_k` copies of `1 2 ... k` for `k = n` down to `1`.
pub fn highest_word(lambda: &Weight) -> Vec<u8> {
    let n = lambda.rank().n();
    let mut w = Vec::new();
    for k in (1..=n).rev() {
        for _ in 0..lambda.coeff(k) {
            w.extend(1..=k as u8);
        }
    }
    w
}

/// Positions of the uncancelled `-` and `+` letters for color `a`, after
/// repeatedly removing adjacent `+ -` pairs. Letter `a` reads `+`, `a+1` reads `-`.
fn reduced_signature(word: &[u8], a: u8) -> (Vec<usize>, Vec<usize>) {
    let mut minus = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (pos, &l) in word.iter().enumerate() {
        if l == a {
            plus.push(pos);
        } else if l == a + 1 && plus.pop().is_none() {
            minus.push(pos);
        }
    }
    (minus, plus)
}

pub fn lower(word: &[u8], a: u8) -> Option<Vec<u8>> {
    let (_, plus) = reduced_signature(word, a);
    plus.first().map(|&p| {
        let mut w = word.to_vec();
        w[p] = a + 1;
        w
    })
}

pub fn raise(word: &[u8], a: u8) -> Option<Vec<u8>> {
    let (minus, _) = reduced_signature(word, a);
    minus.last().map(|&p| {
        let mut w = word.to_vec();
        w[p] = a;
        w
    })
}

/// Connected component of the highest word, vertices in BFS order.
#[derive(Clone, Debug)]
pub struct WordCrystal {
    pub n: usize,
    pub lambda: Weight,
    pub words: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

pub fn word_oracle(lambda: &Weight) -> WordCrystal {
    let n = lambda.rank().n();
    let top = highest_word(lambda);
    let mut words = vec![top.clone()];
    let mut index = HashMap::from([(top, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for a in 1..=n as u8 {
            let cur = words[v].clone();
            for next in [lower(&cur, a), raise(&cur, a)].into_iter().flatten() {
                if !index.contains_key(&next) {
                    index.insert(next.clone(), words.len());
                    queue.push_back(words.len());
                    words.push(next);
                }
            }
        }
    }
    WordCrystal {
        n,
        lambda: lambda.clone(),
        words,
        index,
    }
}

impl WordCrystal {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn indexed(&self) -> IndexedCrystal {
        let m = self.n + 1;
        let size = self.len();
        let mut f = vec![vec![None; size]; self.n];
        let mut e = vec![vec![None; size]; self.n];
        for (v, w) in self.words.iter().enumerate() {
            for a in 1..=self.n {
                if let Some(t) = lower(w, a as u8) {
                    let t = self.index[&t];
                    f[a - 1][v] = Some(t);
                    e[a - 1][t] = Some(v);
                }
            }
        }
        let weights = self
            .words
            .iter()
            .map(|w| {
                let mut c = vec![0i64; m];
                for &l in w {
                    c[l as usize - 1] += 1;
                }
                c
            })
            .collect();
        let labels = self
            .words
            .iter()
            .map(|w| w.iter().map(|l| l.to_string()).collect::<String>())
            .collect();
        IndexedCrystal {
            n: self.n,
            weights,
            labels,
            f,
            e,
        }
    }
}
