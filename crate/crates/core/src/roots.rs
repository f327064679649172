//! Type `A_n` bookkeeping: positive roots, reduced words of the longest
//! permutation, the root enumerations they induce, dominant weights, and the
//! two lexicographic orderings on exponent vectors.
//!
//! All indices are 1-based to match the usual notation `alpha_{i,j}`; the
//! canonical coordinate frame on the positive roots is lexicographic in
//! `(i, j)`.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The rank `n` of `sl_{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    /// Number of wires, `n + 1`.
    #[inline]
    pub fn m(self) -> usize {
        self.0 + 1
    }

    /// Number of positive roots, `n(n+1)/2`.
    #[inline]
    pub fn num_roots(self) -> usize {
        self.0 * (self.0 + 1) / 2
    }
}

/// The positive root `alpha_{i,j} = alpha_i + ... + alpha_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(rank: Rank, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j || j > rank.n() {
            return Err(Error::InvalidRoot { i, j, n: rank.n() });
        }
        Ok(Root { i, j })
    }

    pub fn simple(i: usize) -> Self {
        Root { i, j: i }
    }

    pub fn height(self) -> usize {
        self.j - self.i + 1
    }

    /// Whether the simple root `alpha_k` occurs in this root.
    pub fn contains(self, k: usize) -> bool {
        self.i <= k && k <= self.j
    }

    /// Position of the root in the canonical (lexicographic) frame.
    pub fn index(self, rank: Rank) -> usize {
        let n = rank.n();
        // rows i' < i contribute n - i' + 1 roots each
        let before: usize = (1..self.i).map(|r| n - r + 1).sum();
        before + (self.j - self.i)
    }

    /// The root `alpha_{s,t-1}` attached to a pair of wire labels `s < t`.
    pub fn from_labels(s: usize, t: usize) -> Self {
        debug_assert!(s < t);
        Root { i: s, j: t - 1 }
    }

    /// Wire labels `(i, j + 1)`.
    pub fn labels(self) -> (usize, usize) {
        (self.i, self.j + 1)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{},{}", self.i, self.j)
    }
}

/// All positive roots in canonical order.
pub fn positive_roots(rank: Rank) -> Vec<Root> {
    let n = rank.n();
    let mut out = Vec::with_capacity(rank.num_roots());
    for i in 1..=n {
        for j in i..=n {
            out.push(Root { i, j });
        }
    }
    out
}

/// Lowering a permutation in one-line notation by `s_i` on the right.
/// Returns `false` when the length does not increase.
fn apply_ascent(perm: &mut [usize], i: usize) -> bool {
    let ascent = perm[i - 1] < perm[i];
    perm.swap(i - 1, i);
    ascent
}

/// True iff `letters` is a reduced word for the longest permutation of `[n+1]`.
pub fn is_reduced(rank: Rank, letters: &[usize]) -> bool {
    let n = rank.n();
    if letters.len() != rank.num_roots() {
        return false;
    }
    let mut perm: Vec<usize> = (1..=rank.m()).collect();
    for &l in letters {
        if l == 0 || l > n || !apply_ascent(&mut perm, l) {
            return false;
        }
    }
    true
}

/// A reduced decomposition of `w_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedWord {
    rank: Rank,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(rank: Rank, letters: Vec<usize>) -> Result<Self> {
        if let Some(&l) = letters.iter().find(|&&l| l == 0 || l > rank.n()) {
            return Err(Error::LetterOutOfRange { letter: l, n: rank.n() });
        }
        if !is_reduced(rank, &letters) {
            return Err(Error::NotReduced {
                word: letters,
                n: rank.n(),
            });
        }
        Ok(ReducedWord { rank, letters })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// `(1, 2,1, 3,2,1, ..., n,...,1)`.
pub fn lexmin_word(rank: Rank) -> ReducedWord {
    let letters = (1..=rank.n()).flat_map(|r| (1..=r).rev()).collect();
    ReducedWord { rank, letters }
}

/// `(n, n-1,n, n-2,n-1,n, ..., 1,...,n)`.
pub fn lexmax_word(rank: Rank) -> ReducedWord {
    let n = rank.n();
    let letters = (1..=n).flat_map(|r| (n + 1 - r)..=n).collect();
    ReducedWord { rank, letters }
}

/// The word `i^k`: the rectangle factor `(s_k..s_1)(s_{k+1}..s_2)...(s_n..s_{n-k+1})`,
/// followed by `(s_n..s_{n-k+2})(s_n..s_{n-k+3})...s_n` and
/// `(s_1..s_{n-k})(s_1..s_{n-k-1})...s_1`.
pub fn ik_word(rank: Rank, k: usize) -> Result<ReducedWord> {
    let n = rank.n();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    let mut letters = Vec::with_capacity(rank.num_roots());
    for block in 0..=(n - k) {
        letters.extend(((block + 1)..=(k + block)).rev());
    }
    for len in (1..k).rev() {
        letters.extend(((n + 1 - len)..=n).rev());
    }
    for len in (1..=(n - k)).rev() {
        letters.extend(1..=len);
    }
    ReducedWord::new(rank, letters)
}

/// Every reduced word of `w_0`, in lexicographic order.
pub fn all_reduced_words(rank: Rank) -> Vec<ReducedWord> {
    fn go(rank: Rank, perm: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<ReducedWord>) {
        if prefix.len() == rank.num_roots() {
            out.push(ReducedWord {
                rank,
                letters: prefix.clone(),
            });
            return;
        }
        for i in 1..=rank.n() {
            if perm[i - 1] < perm[i] {
                perm.swap(i - 1, i);
                prefix.push(i);
                go(rank, perm, prefix, out);
                prefix.pop();
                perm.swap(i - 1, i);
            }
        }
    }
    let mut perm: Vec<usize> = (1..=rank.m()).collect();
    let mut out = Vec::new();
    go(rank, &mut perm, &mut Vec::new(), &mut out);
    out
}

/// A reduced word obtained by a uniformly random choice among the ascents
/// at each step. Not uniform over `R(w_0)`.
pub fn random_reduced_word<R: Rng + ?Sized>(rank: Rank, rng: &mut R) -> ReducedWord {
    let mut perm: Vec<usize> = (1..=rank.m()).collect();
    let mut letters = Vec::with_capacity(rank.num_roots());
    loop {
        let ascents: Vec<usize> = (1..=rank.n()).filter(|&i| perm[i - 1] < perm[i]).collect();
        if ascents.is_empty() {
            break;
        }
        let i = ascents[rng.gen_range(0..ascents.len())];
        perm.swap(i - 1, i);
        letters.push(i);
    }
    ReducedWord { rank, letters }
}

/// `beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})` for each position of a word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootEnumeration(Vec<Root>);

impl RootEnumeration {
    pub fn roots(&self) -> &[Root] {
        &self.0
    }

    /// `position[c]` is the index in the enumeration of the root at canonical index `c`.
    pub fn positions(&self, rank: Rank) -> Vec<usize> {
        let mut pos = vec![0; rank.num_roots()];
        for (p, r) in self.0.iter().enumerate() {
            pos[r.index(rank)] = p;
        }
        pos
    }
}

pub fn root_enumeration(word: &ReducedWord) -> RootEnumeration {
    let rank = word.rank;
    let mut perm: Vec<usize> = (1..=rank.m()).collect();
    let mut roots = Vec::with_capacity(rank.num_roots());
    for &l in &word.letters {
        let (a, b) = (perm[l - 1], perm[l]);
        // reducedness guarantees a < b
        roots.push(Root::from_labels(a, b));
        perm.swap(l - 1, l);
    }
    RootEnumeration(roots)
}

fn check_len(a: &[i64], b: &[i64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(())
}

/// Opposite lexicographic ordering: `Greater` means `a >_oplex b`, i.e. at the
/// first differing coordinate from the left `a` has the smaller entry.
pub fn cmp_oplex(a: &[i64], b: &[i64]) -> Result<Ordering> {
    check_len(a, b)?;
    Ok(a.iter()
        .zip(b)
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| y.cmp(x)))
}

/// Right opposite lexicographic ordering: as [`cmp_oplex`] but scanning from the right.
pub fn cmp_roplex(a: &[i64], b: &[i64]) -> Result<Ordering> {
    check_len(a, b)?;
    Ok(a.iter()
        .zip(b)
        .rev()
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| y.cmp(x)))
}

/// A dominant integral weight `lambda_1 w_1 + ... + lambda_n w_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(rank: Rank, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != rank.n() {
            return Err(Error::WeightLength {
                got: coeffs.len(),
                n: rank.n(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c < 0) {
            return Err(Error::NegativeWeight(c));
        }
        Ok(Weight(coeffs))
    }

    /// Pads missing trailing coefficients with zeros.
    pub fn padded(rank: Rank, mut coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() > rank.n() {
            return Err(Error::WeightLength {
                got: coeffs.len(),
                n: rank.n(),
            });
        }
        coeffs.resize(rank.n(), 0);
        Weight::new(rank, coeffs)
    }

    pub fn zero(rank: Rank) -> Self {
        Weight(vec![0; rank.n()])
    }

    /// `r * w_k`.
    pub fn fundamental(rank: Rank, k: usize, r: i64) -> Result<Self> {
        if k == 0 || k > rank.n() {
            return Err(Error::IndexOutOfRange { k, n: rank.n() });
        }
        let mut c = vec![0; rank.n()];
        c[k - 1] = r;
        Weight::new(rank, c)
    }

    pub fn rank(&self) -> Rank {
        Rank(self.0.len())
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// `lambda_k` with 1-based `k`.
    pub fn coeff(&self, k: usize) -> i64 {
        self.0[k - 1]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `lambda_i + ... + lambda_j`.
    pub fn partial_sum(&self, i: usize, j: usize) -> i64 {
        self.0[i - 1..j].iter().sum()
    }

    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|&c| c >= 1)
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        check_len(&self.0, &other.0)?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Content vector `mu` in `Z^{n+1}`: `mu_i = lambda_i + ... + lambda_n`, `mu_{n+1} = 0`.
    pub fn content(&self) -> Vec<i64> {
        let n = self.0.len();
        let mut mu = vec![0; n + 1];
        for i in (0..n).rev() {
            mu[i] = mu[i + 1] + self.0[i];
        }
        mu
    }

    /// All dominant weights of the given rank with coefficient sum at most `max_sum`.
    pub fn all_up_to(rank: Rank, max_sum: i64) -> Vec<Weight> {
        fn go(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if cur.len() == n {
                out.push(Weight(cur.clone()));
                return;
            }
            for c in 0..=left {
                cur.push(c);
                go(n, left - c, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rank.n(), max_sum, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Content vector of `lambda - sum x_{i,j} alpha_{i,j}`, using `alpha_{i,j} = e_i - e_{j+1}`.
pub fn weight_of_point(lambda: &Weight, x: &[i64]) -> Result<Vec<i64>> {
    let rank = lambda.rank();
    if x.len() != rank.num_roots() {
        return Err(Error::DimensionMismatch {
            expected: rank.num_roots(),
            got: x.len(),
        });
    }
    let mut mu = lambda.content();
    for (root, &c) in positive_roots(rank).iter().zip(x) {
        mu[root.i - 1] -= c;
        mu[root.j] += c;
    }
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn positive_roots_small_ranks() {
        let r2 = positive_roots(rank(2));
        assert_eq!(r2, vec![Root::simple(1), Root { i: 1, j: 2 }, Root::simple(2)]);
        assert_eq!(positive_roots(rank(1)), vec![Root::simple(1)]);
        assert_eq!(positive_roots(rank(5)).len(), 15);
        for (idx, r) in positive_roots(rank(5)).into_iter().enumerate() {
            assert_eq!(r.index(rank(5)), idx);
        }
    }

    #[test]
    fn rank_zero_rejected() {
        assert!(Rank::new(0).is_err());
    }

    #[test]
    fn reducedness() {
        assert!(is_reduced(rank(2), &[1, 2, 1]));
        assert!(!is_reduced(rank(2), &[1, 1, 2]));
        assert!(!is_reduced(rank(2), &[1, 2]));
        assert!(!is_reduced(rank(2), &[1, 3, 1]));
        assert!(ReducedWord::new(rank(2), vec![1, 1, 2]).is_err());
    }

    #[test]
    fn special_words() {
        assert_eq!(lexmin_word(rank(3)).letters(), &[1, 2, 1, 3, 2, 1]);
        assert_eq!(lexmax_word(rank(3)).letters(), &[3, 2, 3, 1, 2, 3]);
        assert_eq!(lexmin_word(rank(1)).letters(), &[1]);
        assert!(is_reduced(rank(4), lexmin_word(rank(4)).letters()));
        assert!(is_reduced(rank(4), lexmax_word(rank(4)).letters()));
    }

    #[test]
    fn ik_words_rank_three() {
        assert_eq!(ik_word(rank(3), 1).unwrap().letters(), &[1, 2, 3, 1, 2, 1]);
        assert_eq!(ik_word(rank(3), 2).unwrap().letters(), &[2, 1, 3, 2, 3, 1]);
        assert_eq!(ik_word(rank(3), 3).unwrap().letters(), &[3, 2, 1, 3, 2, 3]);
        assert_eq!(ik_word(rank(2), 2).unwrap().letters(), &[2, 1, 2]);
        assert!(ik_word(rank(3), 0).is_err());
        assert!(ik_word(rank(3), 4).is_err());
    }

    #[test]
    fn ik_words_are_reduced_up_to_rank_six() {
        for n in 1..=6 {
            for k in 1..=n {
                let w = ik_word(rank(n), k).unwrap();
                assert_eq!(w.letters().len(), rank(n).num_roots());
                assert!(is_reduced(rank(n), w.letters()));
            }
        }
    }

    #[test]
    fn enumeration_of_lexmin() {
        let e = root_enumeration(&lexmin_word(rank(2)));
        assert_eq!(e.roots(), &[Root::simple(1), Root { i: 1, j: 2 }, Root::simple(2)]);
    }

    #[test]
    fn enumeration_of_ik_prefix() {
        let e = root_enumeration(&ik_word(rank(3), 2).unwrap());
        assert_eq!(
            &e.roots()[..4],
            &[
                Root { i: 2, j: 2 },
                Root { i: 1, j: 2 },
                Root { i: 2, j: 3 },
                Root { i: 1, j: 3 }
            ]
        );
    }

    #[test]
    fn ik_enumeration_splits_into_rectangle_and_rest() {
        for n in 1..=6 {
            let r = rank(n);
            for k in 1..=n {
                let e = root_enumeration(&ik_word(r, k).unwrap());
                let rect = k * (n - k + 1);
                // rectangle in the order a_{k,k}, a_{k-1,k}, ..., a_{1,k}, a_{k,k+1}, ...
                let expected: Vec<Root> = (k..=n)
                    .flat_map(|j| (1..=k).rev().map(move |i| Root { i, j }))
                    .collect();
                assert_eq!(&e.roots()[..rect], expected.as_slice());
                assert!(e.roots()[rect..].iter().all(|root| !root.contains(k)));
                // the first k entries share the second index and have decreasing first index
                for s in 0..k {
                    for t in (s + 1)..k {
                        let (p, q) = (e.roots()[s], e.roots()[t]);
                        assert!(p.j > q.j || (p.j == q.j && q.i < p.i));
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_bijective_for_all_words() {
        for n in 1..=4 {
            let r = rank(n);
            let all = positive_roots(r);
            for w in all_reduced_words(r) {
                let mut e = root_enumeration(&w).roots().to_vec();
                e.sort();
                assert_eq!(e, all);
            }
        }
    }

    #[test]
    fn reduced_word_counts() {
        assert_eq!(all_reduced_words(rank(2)).len(), 2);
        assert_eq!(all_reduced_words(rank(3)).len(), 16);
        assert_eq!(all_reduced_words(rank(4)).len(), 768);
    }

    #[test]
    fn orderings() {
        // rightmost difference: a_3 = 0 < b_3 = 1, so a >_roplex b
        assert_eq!(cmp_roplex(&[0, 1, 0], &[0, 0, 1]).unwrap(), Ordering::Greater);
        assert_eq!(cmp_oplex(&[0, 1, 0], &[0, 0, 1]).unwrap(), Ordering::Less);
        assert_eq!(cmp_oplex(&[1, 2, 3], &[1, 2, 3]).unwrap(), Ordering::Equal);
        assert_eq!(cmp_roplex(&[1, 2, 3], &[1, 2, 3]).unwrap(), Ordering::Equal);
        // b_1 < a_1, so b >_oplex a
        assert_eq!(cmp_oplex(&[0, 0, 0], &[1, 0, 0]).unwrap(), Ordering::Greater);
        assert!(cmp_oplex(&[0], &[0, 1]).is_err());
    }

    #[test]
    fn weights() {
        let r = rank(2);
        let l = Weight::new(r, vec![1, 1]).unwrap();
        assert_eq!(l.content(), vec![2, 1, 0]);
        assert_eq!(weight_of_point(&l, &[0, 0, 0]).unwrap(), vec![2, 1, 0]);
        assert_eq!(weight_of_point(&l, &[1, 0, 0]).unwrap(), vec![1, 2, 0]);
        assert_eq!(weight_of_point(&l, &[0, 1, 0]).unwrap(), vec![1, 1, 1]);
        assert!(Weight::new(r, vec![1, -1]).is_err());
        assert!(Weight::new(r, vec![1]).is_err());
        assert_eq!(Weight::padded(r, vec![3]).unwrap().coeffs(), &[3, 0]);
        assert_eq!(Weight::all_up_to(r, 2).len(), 6);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn vec_pair() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<i64>)> {
            (1usize..6).prop_flat_map(|len| {
                (
                    prop::collection::vec(-2i64..3, len),
                    prop::collection::vec(-2i64..3, len),
                    prop::collection::vec(-2i64..3, len),
                )
            })
        }

        proptest! {
            #[test]
            fn orderings_are_total_orders((a, b, c) in vec_pair()) {
                for cmp in [cmp_oplex, cmp_roplex] {
                    let ab = cmp(&a, &b).unwrap();
                    prop_assert_eq!(ab, cmp(&b, &a).unwrap().reverse());
                    prop_assert_eq!(ab == Ordering::Equal, a == b);
                    let bc = cmp(&b, &c).unwrap();
                    if ab == Ordering::Greater && bc == Ordering::Greater {
                        prop_assert_eq!(cmp(&a, &c).unwrap(), Ordering::Greater);
                    }
                }
            }

            #[test]
            fn random_words_are_reduced(n in 1usize..7, seed in any::<u64>()) {
                use rand::SeedableRng;
                let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
                let r = Rank::new(n).unwrap();
                let w = random_reduced_word(r, &mut rng);
                prop_assert!(is_reduced(r, w.letters()));
            }
        }
    }
}
