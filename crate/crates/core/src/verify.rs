//! End-to-end checks of the polytope identities, each producing a
//! [`VerificationReport`] with a concrete witness on failure, plus sweeps
//! over a declarative matrix of cases.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fflv::{fflv_hrep, fflv_points, fundamental_points, weyl_dim};
use crate::polytope::{sumset, LatticePoint, PointSet};
use crate::roots::{all_reduced_words, ik_word, positive_roots, root_enumeration, Rank, Root, Weight};
use crate::tiling::{build_tiling, lusztig_points};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Main,
    Fundamental,
    WordCounts,
    Dyck,
    Rectangle,
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Claim::Main => "main",
            Claim::Fundamental => "fundamental",
            Claim::WordCounts => "word-counts",
            Claim::Dyck => "dyck",
            Claim::Rectangle => "rectangle",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A lattice point on one side of an expected equality but not the other.
    Point {
        reason: String,
        point: LatticePoint,
    },
    /// A point together with the inequality it violates.
    Inequality {
        reason: String,
        point: LatticePoint,
        coeffs: Vec<i64>,
        rhs: i64,
    },
    /// A reduced word whose polytope has the wrong number of points.
    Word {
        reason: String,
        word: Vec<usize>,
        expected: u128,
        got: u128,
    },
    /// A set of roots, used for Dyck-path supports.
    Support {
        reason: String,
        roots: Vec<(usize, usize)>,
    },
    Note {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub params: Params,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default)]
    pub counts: BTreeMap<String, u128>,
    /// Wall-clock time, only filled in on request so that reports stay
    /// byte-identical across runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl VerificationReport {
    fn new(claim: Claim, params: Params) -> Self {
        VerificationReport {
            claim,
            params,
            status: Status::Pass,
            witness: None,
            counts: BTreeMap::new(),
            elapsed_us: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn fail(mut self, witness: Witness) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    fn count(&mut self, key: &str, value: impl Into<u128>) {
        self.counts.insert(key.to_string(), value.into());
    }

    /// Case key used to order sweep results.
    pub fn key(&self) -> (Claim, Params) {
        (self.claim, self.params.clone())
    }

    /// One line: status, claim and parameters, and the first witness.
    pub fn summary_line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let mut line = format!("{status} {} n={}", self.claim, self.params.n);
        if let Some(l) = &self.params.lambda {
            line += &format!(" lambda={}", join(l));
        }
        if let Some(k) = self.params.k {
            line += &format!(" k={k}");
        }
        if let Some(r) = self.params.r {
            line += &format!(" r={r}");
        }
        if let Some(us) = self.elapsed_us {
            line += &format!(" [{us} us]");
        }
        if let Some(w) = &self.witness {
            line += &format!(" witness: {}", describe(w));
        }
        line
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn describe(w: &Witness) -> String {
    match w {
        Witness::Point { reason, point } => format!("{reason} {point}"),
        Witness::Inequality {
            reason,
            point,
            coeffs,
            rhs,
        } => {
            format!("{reason} {point} violates ({}) <= {rhs}", join(coeffs))
        }
        Witness::Word {
            reason,
            word,
            expected,
            got,
        } => {
            format!("{reason} ({}) expected {expected} got {got}", join(word))
        }
        Witness::Support { reason, roots } => {
            let r: Vec<String> = roots.iter().map(|(i, j)| format!("a{i}{j}")).collect();
            format!("{reason} {{{}}}", r.join(","))
        }
        Witness::Note { reason } => reason.clone(),
    }
}

/// Runs `f` and records its wall-clock time in the report.
pub fn timed<F: FnOnce() -> Result<VerificationReport>>(f: F) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = f()?;
    report.elapsed_us = Some(start.elapsed().as_micros() as u64);
    Ok(report)
}

fn first_difference(left: &PointSet, right: &PointSet, reason: &str) -> Option<Witness> {
    left.difference(right).next().map(|p| Witness::Point {
        reason: reason.to_string(),
        point: p.clone(),
    })
}

/// Lattice points of the Lusztig polytope of `i^k` at `lambda`, or a witness
/// when the enumeration did not settle on the Weyl dimension.
fn ik_points(rank: Rank, k: usize, lambda: &Weight) -> Result<std::result::Result<PointSet, Witness>> {
    let lp = lusztig_points(&ik_word(rank, k)?, lambda)?;
    if lp.settled {
        Ok(Ok(lp.points))
    } else {
        Ok(Err(Witness::Note {
            reason: format!(
                "Lusztig enumeration for k={k} found {} points up to box {}, not the Weyl dimension",
                lp.points.len(),
                lp.box_bound
            ),
        }))
    }
}

/// The FFLV polytope of `r w_k` and the Lusztig polytope of `i^k` at the same
/// weight have the same lattice points; for `r = 1` these are the explicit
/// fundamental points.
pub fn verify_fundamental(rank: Rank, k: usize, r: i64) -> Result<VerificationReport> {
    let lambda = Weight::fundamental(rank, k, r)?;
    let mut report = VerificationReport::new(
        Claim::Fundamental,
        Params {
            n: rank.n(),
            k: Some(k),
            r: Some(r),
            ..Params::default()
        },
    );
    let fflv = fflv_points(&lambda)?;
    report.count("fflv", fflv.len() as u128);
    let lusztig = match ik_points(rank, k, &lambda)? {
        Ok(p) => p,
        Err(w) => return Ok(report.fail(w)),
    };
    report.count("lusztig", lusztig.len() as u128);
    if let Some(w) = first_difference(&fflv, &lusztig, "FFLV point missing from Lusztig polytope:")
        .or_else(|| first_difference(&lusztig, &fflv, "Lusztig point missing from FFLV polytope:"))
    {
        return Ok(report.fail(w));
    }
    if r == 1 {
        let explicit = PointSet::from_points(
            rank.num_roots(),
            fundamental_points(rank, k)?.into_iter().map(|f| f.point),
        )?;
        report.count("fundamental", explicit.len() as u128);
        if let Some(w) = first_difference(&fflv, &explicit, "lattice point not among fundamental points:")
            .or_else(|| first_difference(&explicit, &fflv, "fundamental point not a lattice point:"))
        {
            return Ok(report.fail(w));
        }
    }
    Ok(report)
}

/// Summands of the Minkowski decomposition of `FFLV(lambda)`: the Lusztig
/// points of `i^k` at `lambda_k w_k` for every `k` with `lambda_k > 0`.
pub fn main_summands(lambda: &Weight) -> Result<std::result::Result<Vec<PointSet>, Witness>> {
    let rank = lambda.rank();
    let mut out = Vec::new();
    for k in 1..=rank.n() {
        let c = lambda.coeff(k);
        if c == 0 {
            continue;
        }
        match ik_points(rank, k, &Weight::fundamental(rank, k, c)?)? {
            Ok(p) => out.push(p),
            Err(w) => return Ok(Err(w)),
        }
    }
    Ok(Ok(out))
}

/// `FFLV(lambda)` equals the Minkowski sum of the Lusztig polytopes of the
/// words `i^k` at `lambda_k w_k`, checked on lattice points.
pub fn verify_main(lambda: &Weight) -> Result<VerificationReport> {
    match main_summands(lambda)? {
        Ok(summands) => verify_main_with(lambda, &summands),
        Err(w) => Ok(VerificationReport::new(Claim::Main, main_params(lambda)).fail(w)),
    }
}

fn main_params(lambda: &Weight) -> Params {
    Params {
        n: lambda.rank().n(),
        lambda: Some(lambda.coeffs().to_vec()),
        ..Params::default()
    }
}

/// As [`verify_main`] with the summands supplied by the caller.
pub fn verify_main_with(lambda: &Weight, summands: &[PointSet]) -> Result<VerificationReport> {
    let rank = lambda.rank();
    let mut report = VerificationReport::new(Claim::Main, main_params(lambda));
    let mut sum = PointSet::singleton(LatticePoint::zero(rank.num_roots()));
    for (i, s) in summands.iter().enumerate() {
        report.count(&format!("summand_{}", i + 1), s.len() as u128);
        sum = sumset(&sum, s)?;
    }
    report.count("sumset", sum.len() as u128);
    let fflv = fflv_points(lambda)?;
    report.count("fflv", fflv.len() as u128);
    report.count("weyl_dim", weyl_dim(lambda)?);

    // every summed point satisfies the FFLV inequalities
    let hrep = fflv_hrep(lambda);
    for p in sum.iter() {
        if let Some(row) = hrep.violated_row(p)? {
            return Ok(report.fail(Witness::Inequality {
                reason: "sum point outside FFLV polytope:".into(),
                point: p.clone(),
                coeffs: row.a.clone(),
                rhs: row.b,
            }));
        }
        if p.0.iter().any(|&c| c < 0) {
            return Ok(report.fail(Witness::Point {
                reason: "sum point with a negative coordinate:".into(),
                point: p.clone(),
            }));
        }
    }
    // every FFLV point is a sum
    if let Some(w) = first_difference(&fflv, &sum, "FFLV point not a sum:") {
        return Ok(report.fail(w));
    }
    if sum != fflv {
        return Ok(report.fail(Witness::Note {
            reason: "sumset and FFLV points differ".into(),
        }));
    }
    Ok(report)
}

/// Lusztig lattice counts equal the Weyl dimension for every reduced word.
pub fn verify_word_counts(lambda: &Weight) -> Result<VerificationReport> {
    let rank = lambda.rank();
    if rank.n() > 3 {
        return Err(Error::Config(format!(
            "reduced-word sweep is limited to n <= 3, got n={}",
            rank.n()
        )));
    }
    let mut report = VerificationReport::new(
        Claim::WordCounts,
        Params {
            n: rank.n(),
            lambda: Some(lambda.coeffs().to_vec()),
            ..Params::default()
        },
    );
    let expected = weyl_dim(lambda)?;
    report.count("weyl_dim", expected);
    let words = all_reduced_words(rank);
    report.count("words", words.len() as u128);
    for word in &words {
        let lp = lusztig_points(word, lambda)?;
        let got = lp.points.len() as u128;
        if got != expected || !lp.settled {
            return Ok(report.fail(Witness::Word {
                reason: "Lusztig count differs from Weyl dimension for".into(),
                word: word.letters().to_vec(),
                expected,
                got,
            }));
        }
    }
    Ok(report)
}

fn is_step(a: Root, b: Root) -> bool {
    (b.i == a.i + 1 && b.j == a.j) || (b.i == a.i && b.j == a.j + 1)
}

fn support_roots(s: &BTreeSet<Root>) -> Vec<(usize, usize)> {
    s.iter().map(|r| (r.i, r.j)).collect()
}

/// Saturated Dyck paths from `alpha_{1,k}` to `alpha_{k,n}` inside the
/// rectangle `{alpha_{i,j} : i <= k <= j}`.
pub fn rectangle_paths(rank: Rank, k: usize) -> Vec<BTreeSet<Root>> {
    fn walk(cur: Root, k: usize, n: usize, acc: &mut Vec<Root>, out: &mut Vec<BTreeSet<Root>>) {
        acc.push(cur);
        if cur.i == k && cur.j == n {
            out.push(acc.iter().copied().collect());
        } else {
            if cur.i < k {
                walk(Root { i: cur.i + 1, j: cur.j }, k, n, acc, out);
            }
            if cur.j < n {
                walk(Root { i: cur.i, j: cur.j + 1 }, k, n, acc, out);
            }
        }
        acc.pop();
    }
    let mut out = Vec::new();
    walk(Root { i: 1, j: k }, k, rank.n(), &mut Vec::new(), &mut out);
    out
}

/// With the coordinates outside the rectangle set to zero, the crossing rows of
/// `i^k` become 0/1 indicators of Dyck path segments: rows for `s != k`
/// vanish, every `s = k` row is a contiguous Dyck segment, and the maximal
/// supports are exactly the saturated paths from `alpha_{1,k}` to
/// `alpha_{k,n}`.
pub fn verify_dyck_correspondence(rank: Rank, k: usize) -> Result<VerificationReport> {
    let word = ik_word(rank, k)?;
    let mut report = VerificationReport::new(
        Claim::Dyck,
        Params {
            n: rank.n(),
            k: Some(k),
            word: Some(word.letters().to_vec()),
            ..Params::default()
        },
    );
    let tiling = build_tiling(&word)?;
    let roots = positive_roots(rank);
    let mut supports: BTreeSet<BTreeSet<Root>> = BTreeSet::new();
    let mut rows = 0u128;
    for s in 1..=rank.n() {
        for c in tiling.reineke_filter(tiling.dual_crossings(s)?) {
            rows += 1;
            let f = tiling.crossing_functional(&c);
            let mut support = BTreeSet::new();
            for (root, &v) in roots.iter().zip(&f) {
                if !root.contains(k) || v == 0 {
                    continue;
                }
                if v != 1 || s != k {
                    return Ok(report.fail(Witness::Note {
                        reason: format!("row for s={s} has coefficient {v} at a{}{}", root.i, root.j),
                    }));
                }
                support.insert(*root);
            }
            if s != k {
                continue;
            }
            // order along the path: i + j increases by one per step
            let mut chain: Vec<Root> = support.iter().copied().collect();
            chain.sort_by_key(|r| (r.i + r.j, r.i));
            if chain.is_empty() || chain.windows(2).any(|w| !is_step(w[0], w[1])) {
                return Ok(report.fail(Witness::Support {
                    reason: "row support is not a Dyck segment:".into(),
                    roots: support_roots(&support),
                }));
            }
            supports.insert(support);
        }
    }
    let maximal: BTreeSet<BTreeSet<Root>> = supports
        .iter()
        .filter(|s| !supports.iter().any(|t| t != *s && s.is_subset(t)))
        .cloned()
        .collect();
    let paths: BTreeSet<BTreeSet<Root>> = rectangle_paths(rank, k).into_iter().collect();
    report.count("rows", rows);
    report.count("supports", supports.len() as u128);
    report.count("maximal_supports", maximal.len() as u128);
    report.count("saturated_paths", paths.len() as u128);
    if let Some(s) = maximal.difference(&paths).next() {
        return Ok(report.fail(Witness::Support {
            reason: "maximal row support is not a saturated path:".into(),
            roots: support_roots(s),
        }));
    }
    if let Some(s) = paths.difference(&maximal).next() {
        return Ok(report.fail(Witness::Support {
            reason: "saturated path is not a row support:".into(),
            roots: support_roots(s),
        }));
    }
    Ok(report)
}

/// Lattice points of the Lusztig polytope of `i^k` at `r w_k` vanish outside
/// the rectangle and past position `k(n-k+1)` of the root enumeration.
pub fn verify_rectangle_support(rank: Rank, k: usize, r: i64) -> Result<VerificationReport> {
    let lambda = Weight::fundamental(rank, k, r)?;
    let mut report = VerificationReport::new(
        Claim::Rectangle,
        Params {
            n: rank.n(),
            k: Some(k),
            r: Some(r),
            ..Params::default()
        },
    );
    let points = match ik_points(rank, k, &lambda)? {
        Ok(p) => p,
        Err(w) => return Ok(report.fail(w)),
    };
    report.count("points", points.len() as u128);
    let word = ik_word(rank, k)?;
    let late: BTreeSet<usize> = root_enumeration(&word).roots()[k * (rank.n() - k + 1)..]
        .iter()
        .map(|root| root.index(rank))
        .collect();
    let zero: BTreeSet<usize> = positive_roots(rank)
        .into_iter()
        .filter(|root| !root.contains(k))
        .map(|root| root.index(rank))
        .chain(late)
        .collect();
    if let Some(p) = points.iter().find(|p| zero.iter().any(|&c| p.0[c] != 0)) {
        return Ok(report.fail(Witness::Point {
            reason: "nonzero coordinate outside the rectangle:".into(),
            point: p.clone(),
        }));
    }
    Ok(report)
}

/// One entry of a sweep file. Missing `k` means every `k`; `max_sum` and
/// `max_r` expand to every weight or multiple up to that bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseSpec {
    pub claim: Claim,
    pub n: usize,
    #[serde(default)]
    pub lambda: Option<Vec<i64>>,
    #[serde(default)]
    pub max_sum: Option<i64>,
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default)]
    pub r: Option<i64>,
    #[serde(default)]
    pub max_r: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub timing: bool,
    #[serde(rename = "case", default)]
    pub cases: Vec<CaseSpec>,
}

impl SweepConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

/// A single check to run.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Case {
    Main(Weight),
    Fundamental(Rank, usize, i64),
    WordCounts(Weight),
    Dyck(Rank, usize),
    Rectangle(Rank, usize, i64),
}

impl Case {
    pub fn run(&self) -> Result<VerificationReport> {
        match self {
            Case::Main(l) => verify_main(l),
            Case::Fundamental(rank, k, r) => verify_fundamental(*rank, *k, *r),
            Case::WordCounts(l) => verify_word_counts(l),
            Case::Dyck(rank, k) => verify_dyck_correspondence(*rank, *k),
            Case::Rectangle(rank, k, r) => verify_rectangle_support(*rank, *k, *r),
        }
    }
}

impl CaseSpec {
    pub fn expand(&self) -> Result<Vec<Case>> {
        let rank = Rank::new(self.n)?;
        let weights = || -> Result<Vec<Weight>> {
            match (&self.lambda, self.max_sum) {
                (Some(l), None) => Ok(vec![Weight::padded(rank, l.clone())?]),
                (None, Some(s)) => Ok(Weight::all_up_to(rank, s)),
                _ => Err(Error::Config(format!(
                    "{} case needs exactly one of lambda and max_sum",
                    self.claim
                ))),
            }
        };
        let ks = || -> Result<Vec<usize>> {
            match self.k {
                Some(k) if k == 0 || k > self.n => Err(Error::IndexOutOfRange { k, n: self.n }),
                Some(k) => Ok(vec![k]),
                None => Ok((1..=self.n).collect()),
            }
        };
        let rs = || -> Result<Vec<i64>> {
            match (self.r, self.max_r) {
                (Some(_), Some(_)) => Err(Error::Config("give at most one of r and max_r".into())),
                (Some(r), None) if r >= 1 => Ok(vec![r]),
                (None, Some(m)) if m >= 1 => Ok((1..=m).collect()),
                (None, None) => Ok(vec![1]),
                _ => Err(Error::Config("r must be at least 1".into())),
            }
        };
        let mut out = Vec::new();
        match self.claim {
            Claim::Main => out.extend(weights()?.into_iter().map(Case::Main)),
            Claim::WordCounts => out.extend(weights()?.into_iter().map(Case::WordCounts)),
            Claim::Dyck => out.extend(ks()?.into_iter().map(|k| Case::Dyck(rank, k))),
            Claim::Fundamental | Claim::Rectangle => {
                for k in ks()? {
                    for r in rs()? {
                        out.push(if self.claim == Claim::Fundamental {
                            Case::Fundamental(rank, k, r)
                        } else {
                            Case::Rectangle(rank, k, r)
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Runs the cases in parallel. Reports come back sorted by claim and
/// parameters, with duplicate cases removed.
pub fn run_cases(cases: &[Case], timing: bool) -> Result<Vec<VerificationReport>> {
    let mut cases = cases.to_vec();
    cases.sort();
    cases.dedup();
    let mut reports = cases
        .par_iter()
        .map(|c| if timing { timed(|| c.run()) } else { c.run() })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.key());
    Ok(reports)
}

pub fn run_sweep(config: &SweepConfig) -> Result<Vec<VerificationReport>> {
    let mut cases = Vec::new();
    for spec in &config.cases {
        cases.extend(spec.expand()?);
    }
    run_cases(&cases, config.timing)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn weight(c: &[i64]) -> Weight {
        Weight::new(rank(c.len()), c.to_vec()).unwrap()
    }

    #[test]
    fn fundamental_examples() {
        let r = verify_fundamental(rank(2), 1, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.counts["fflv"], 3);
        let r = verify_fundamental(rank(3), 2, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.counts["fundamental"], 6);
        let r = verify_fundamental(rank(3), 2, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.counts["lusztig"], 20);
    }

    #[test]
    fn main_examples() {
        let r = verify_main(&weight(&[1, 1])).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.counts["fflv"], 8);
        assert!(verify_main(&weight(&[3, 0])).unwrap().passed());
        let r = verify_main(&weight(&[1, 1, 1])).unwrap();
        assert!(r.passed());
        assert_eq!(r.counts["fflv"], 64);
        assert!(verify_main(&weight(&[0, 0])).unwrap().passed());
    }

    #[test]
    fn corrupted_summand_fails_with_witness() {
        let lambda = weight(&[1, 1]);
        let mut summands = main_summands(&lambda).unwrap().unwrap();
        summands[0].insert(LatticePoint(vec![2, 0, 0])).unwrap();
        let r = verify_main_with(&lambda, &summands).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(matches!(r.witness, Some(Witness::Inequality { .. })));
        // dropping a point loses a sum instead
        let mut summands = main_summands(&lambda).unwrap().unwrap();
        summands[1] = summands[1].filter(|p| p.0.iter().all(|&c| c == 0));
        let r = verify_main_with(&lambda, &summands).unwrap();
        assert!(matches!(r.witness, Some(Witness::Point { .. })));
    }

    #[test]
    fn word_count_examples() {
        let r = verify_word_counts(&weight(&[1, 1])).unwrap();
        assert!(r.passed());
        assert_eq!((r.counts["words"], r.counts["weyl_dim"]), (2, 8));
        let r = verify_word_counts(&weight(&[0, 1, 0])).unwrap();
        assert!(r.passed());
        assert_eq!((r.counts["words"], r.counts["weyl_dim"]), (16, 6));
        assert!(verify_word_counts(&weight(&[0, 0, 0])).unwrap().passed());
        assert!(verify_word_counts(&weight(&[1, 0, 0, 0])).is_err());
    }

    #[test]
    fn dyck_examples() {
        for n in 1..=4 {
            for k in 1..=n {
                let r = verify_dyck_correspondence(rank(n), k).unwrap();
                assert!(r.passed(), "{}", r.summary_line());
            }
        }
        let r = verify_dyck_correspondence(rank(2), 1).unwrap();
        assert_eq!(r.counts["saturated_paths"], 1);
        assert_eq!(r.counts["supports"], 2);
        assert_eq!(rectangle_paths(rank(4), 2).len(), 3);
    }

    #[test]
    fn rectangle_support_cases() {
        for n in 1..=3 {
            for k in 1..=n {
                for r in 1..=2 {
                    assert!(verify_rectangle_support(rank(n), k, r).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn sweep_parses_and_orders() {
        let text = r#"
            [[case]]
            claim = "main"
            n = 2
            max_sum = 2

            [[case]]
            claim = "fundamental"
            n = 2
            max_r = 2

            [[case]]
            claim = "main"
            n = 2
            lambda = [1]
        "#;
        let config = SweepConfig::from_toml(text).unwrap();
        let reports = run_sweep(&config).unwrap();
        // 6 weights (one repeated) and 4 fundamental cases
        assert_eq!(reports.len(), 10);
        assert!(reports.iter().all(|r| r.passed() && r.elapsed_us.is_none()));
        let keys: Vec<_> = reports.iter().map(|r| r.key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(run_sweep(&config).unwrap(), reports);
        assert!(SweepConfig::from_toml("[[case]]\nclaim = \"main\"\nn = 2\n")
            .unwrap()
            .cases[0]
            .expand()
            .is_err());
        assert!(SweepConfig::from_toml("[[case]]\nclaim = \"nope\"\nn = 2\n").is_err());
    }

    #[test]
    fn report_json_round_trip() {
        let r = verify_main(&weight(&[1, 0])).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("elapsed_us"));
        assert_eq!(serde_json::from_str::<VerificationReport>(&json).unwrap(), r);
    }

    mod fuzz {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn spurious_summand_points(a in 0i64..3, b in 0i64..3, coords in prop::collection::vec(0i64..6, 3), which in 0usize..2) {
                prop_assume!(a + b > 0);
                let lambda = weight(&[a, b]);
                let mut summands = main_summands(&lambda).unwrap().unwrap();
                let which = which % summands.len();
                let p = LatticePoint(coords);
                prop_assume!(!summands[which].contains(&p));
                summands[which].insert(p.clone()).unwrap();
                let r = verify_main_with(&lambda, &summands).unwrap();
                let mut sum = PointSet::singleton(LatticePoint::zero(3));
                for s in &summands {
                    sum = sumset(&sum, s).unwrap();
                }
                prop_assert_eq!(r.passed(), sum == fflv_points(&lambda).unwrap());
                prop_assert_eq!(r.passed(), r.witness.is_none());
                if p.0.iter().any(|&c| c > a + b) {
                    prop_assert!(!r.passed());
                }
            }
        }
    }
}
