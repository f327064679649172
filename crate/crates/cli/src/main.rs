use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fflv_core::crystal::{
    self, check_local_axioms, check_oracle_iso, conjecture_search, export, fixed_k_crystals, pb_graph, sl3_bgt,
    sl3_blt, word_oracle, CrystalGraph, SearchMode,
};
use fflv_core::fflv::{fflv_hrep, fflv_points};
use fflv_core::polytope::{HPolytope, PointSet};
use fflv_core::roots::{
    ik_word, lexmax_word, lexmin_word, positive_roots, root_enumeration, Rank, ReducedWord, Root, Weight,
};
use fflv_core::tiling::{build_tiling, lusztig_hrep, lusztig_points_of};
use fflv_core::verify::{self, Case, SweepConfig};

#[derive(Parser)]
#[command(
    name = "fflv",
    version,
    about = "FFLV and Lusztig polytopes, rhombic tilings and crystals of type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots.
    Roots {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Print a reduced word and optionally its root enumeration.
    Word(WordArgs),
    /// Lattice points or inequalities of the FFLV polytope.
    Fflv {
        #[command(flatten)]
        weight: WeightArgs,
        /// Print the inequalities instead of the points.
        #[arg(long)]
        hrep: bool,
        /// Enumeration box; defaults to the sum of lambda.
        #[arg(long = "box")]
        box_bound: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Rhombic tilings.
    #[command(subcommand)]
    Tiling(TilingCommand),
    /// Lattice points or inequalities of a Lusztig polytope.
    Lusztig {
        #[command(flatten)]
        weight: WeightArgs,
        /// lexmin, lexmax, ik:K, or a comma-separated word.
        #[arg(long, default_value = "lexmin")]
        word: String,
        #[arg(long)]
        hrep: bool,
        /// Fixed enumeration box; by default it grows until the count settles.
        #[arg(long = "box")]
        box_bound: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// Crystal graphs on FFLV points.
    #[command(subcommand)]
    Crystal(CrystalCommand),
    /// Check the polytope identities; exits 1 if any check fails.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Search for crystal structures built from candidate moves.
    Conjecture {
        #[command(flatten)]
        weight: WeightArgs,
        /// Ranking of the words k^*, best first; defaults to 1,2,..,n.
        #[arg(long, value_delimiter = ',')]
        sigma: Vec<usize>,
        #[arg(long, value_enum, default_value = "greedy")]
        mode: Mode,
        #[arg(long, default_value_t = crystal::search::DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Greedy,
    Exhaustive,
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long)]
    n: usize,
    /// Coefficients lambda_1,..,lambda_n; missing trailing entries are 0.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    lambda: Vec<i64>,
}

impl WeightArgs {
    fn weight(&self) -> Result<Weight> {
        if self.lambda.len() > self.n {
            bail!("lambda has {} entries but n = {}", self.lambda.len(), self.n);
        }
        Ok(Weight::padded(Rank::new(self.n)?, self.lambda.clone())?)
    }
}

#[derive(Args)]
#[group(id = "choice", required = true, multiple = false, args = ["ik", "lexmin", "lexmax", "word"])]
struct WordArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    ik: Option<usize>,
    #[arg(long)]
    lexmin: bool,
    #[arg(long)]
    lexmax: bool,
    /// lexmin, lexmax, ik:K, or a comma-separated word.
    #[arg(long)]
    word: Option<String>,
    /// Also print the induced enumeration of positive roots.
    #[arg(long)]
    roots: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand)]
enum TilingCommand {
    /// Tiles, strips and peel layers; SVG picture with --format svg.
    Show {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "lexmin")]
        word: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum CrystalCommand {
    /// One of the two explicit sl3 crystals.
    Sl3 {
        /// Ordering w_1 > w_2.
        #[arg(long, conflicts_with = "lt", required_unless_present = "lt")]
        gt: bool,
        /// Ordering w_2 > w_1.
        #[arg(long)]
        lt: bool,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Every candidate move on the FFLV points.
    Pb {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        out: Output,
    },
    /// The crystal of the given weight on words.
    Oracle {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        out: Output,
    },
    /// The crystal built only from moves of the word k^*.
    FixedK {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Check a crystal graph stored as JSON; exits 1 if it is not a crystal.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct VerifyOutput {
    /// Record wall-clock time per case.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// FFLV(lambda) as a Minkowski sum of Lusztig polytopes.
    Main {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        out: VerifyOutput,
    },
    /// FFLV and Lusztig points agree at multiples of a fundamental weight.
    Fundamental {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[command(flatten)]
        out: VerifyOutput,
    },
    /// Lusztig counts equal the Weyl dimension for every reduced word (n <= 3).
    WordCounts {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        out: VerifyOutput,
    },
    /// Crossing rows of i^k on the rectangle match Dyck paths.
    Dyck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: VerifyOutput,
    },
    /// Lusztig points of i^k vanish outside the rectangle.
    Rectangle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[command(flatten)]
        out: VerifyOutput,
    },
    /// Run every case listed in a TOML file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        out: VerifyOutput,
    },
}

/// A failed check, as opposed to a usage or input error.
struct Failed;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn only(out: &Output, allowed: &[Format]) -> Result<()> {
    if !allowed.contains(&out.format) {
        let names: Vec<String> = allowed
            .iter()
            .filter_map(|f| f.to_possible_value())
            .map(|v| v.get_name().to_string())
            .collect();
        bail!("this command supports --format {}", names.join("|"));
    }
    Ok(())
}

fn parse_word(rank: Rank, spec: &str) -> Result<ReducedWord> {
    Ok(match spec {
        "lexmin" => lexmin_word(rank),
        "lexmax" => lexmax_word(rank),
        s if s.starts_with("ik:") => {
            let k = s[3..].parse().with_context(|| format!("bad word spec {s:?}"))?;
            ik_word(rank, k)?
        }
        s => {
            let letters = s
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .with_context(|| format!("bad word spec {s:?}"))?;
            ReducedWord::new(rank, letters)?
        }
    })
}

fn tuple<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn root_name(r: &Root) -> String {
    format!("alpha_{{{},{}}}", r.i, r.j)
}

fn points_text(points: &PointSet) -> String {
    points.iter().map(|p| format!("{p}\n")).collect()
}

fn hrep_text(p: &HPolytope, rank: Rank) -> String {
    let roots = positive_roots(rank);
    let mut s = String::new();
    for row in &p.rows {
        let mut terms = Vec::new();
        for (root, &c) in roots.iter().zip(&row.a) {
            let x = format!("x_{{{},{}}}", root.i, root.j);
            match c {
                0 => {}
                1 => terms.push(x),
                -1 => terms.push(format!("-{x}")),
                c => terms.push(format!("{c}{x}")),
            }
        }
        let lhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        };
        s += &format!("{lhs} <= {}\n", row.b);
    }
    s
}

fn polytope_output(out: &Output, rank: Rank, hrep: Option<&HPolytope>, points: Option<&PointSet>) -> Result<()> {
    only(out, &[Format::Text, Format::Json])?;
    let text = match (out.format, hrep, points) {
        (Format::Json, Some(h), _) => json(h)?,
        (Format::Json, None, Some(p)) => json(p)?,
        (_, Some(h), _) => hrep_text(h, rank),
        (_, None, Some(p)) => points_text(p),
        _ => unreachable!("either an H-description or points"),
    };
    emit(out, &text)
}

fn graph_output(out: &Output, g: &CrystalGraph) -> Result<()> {
    only(out, &[Format::Text, Format::Json, Format::Dot])?;
    let text = match out.format {
        Format::Json => export::to_json(g)? + "\n",
        Format::Dot => export::to_dot(g),
        _ => g
            .edges
            .iter()
            .map(|e| format!("{} -{}-> {}\n", e.source, e.color, e.target))
            .collect(),
    };
    emit(out, &text)
}

fn run(command: Command) -> Result<Option<Failed>> {
    match command {
        Command::Roots { n, out } => {
            only(&out, &[Format::Text, Format::Json])?;
            let roots = positive_roots(Rank::new(n)?);
            let text = match out.format {
                Format::Json => json(&roots)?,
                _ => roots.iter().map(|r| root_name(r) + "\n").collect(),
            };
            emit(&out, &text)?;
        }
        Command::Word(args) => word(args)?,
        Command::Fflv {
            weight,
            hrep,
            box_bound,
            out,
        } => {
            let lambda = weight.weight()?;
            let h = fflv_hrep(&lambda);
            if hrep {
                polytope_output(&out, lambda.rank(), Some(&h), None)?;
            } else {
                let points = match box_bound {
                    Some(b) => h.lattice_points(b)?.points,
                    None => fflv_points(&lambda)?,
                };
                polytope_output(&out, lambda.rank(), None, Some(&points))?;
            }
        }
        Command::Tiling(TilingCommand::Show { n, word, out }) => {
            only(&out, &[Format::Text, Format::Json, Format::Svg])?;
            let tiling = build_tiling(&parse_word(Rank::new(n)?, &word)?)?;
            let summary = tiling.summary()?;
            let text = match out.format {
                Format::Json => json(&summary)?,
                Format::Svg => tiling.to_svg(),
                _ => {
                    let mut s = format!("word {}\n", tuple(&summary.word));
                    for t in &summary.tiles {
                        s += &format!(
                            "tile {} labels [{},{}] root {} layers {}\n",
                            t.id,
                            t.labels[0],
                            t.labels[1],
                            root_name(&t.root),
                            tuple(&t.layers)
                        );
                    }
                    for (i, strip) in summary.strips.iter().enumerate() {
                        s += &format!("strip {} tiles {}\n", i + 1, tuple(strip));
                    }
                    s
                }
            };
            emit(&out, &text)?;
        }
        Command::Lusztig {
            weight,
            word,
            hrep,
            box_bound,
            out,
        } => {
            let lambda = weight.weight()?;
            let w = parse_word(lambda.rank(), &word)?;
            let h = lusztig_hrep(&w, &lambda)?;
            if hrep {
                polytope_output(&out, lambda.rank(), Some(&h), None)?;
            } else {
                let points = match box_bound {
                    Some(b) => h.lattice_points(b)?.points,
                    None => {
                        let lp = lusztig_points_of(&h, &lambda)?;
                        if !lp.settled {
                            eprintln!("warning: point count did not settle up to box {}", lp.box_bound);
                        }
                        lp.points
                    }
                };
                polytope_output(&out, lambda.rank(), None, Some(&points))?;
            }
        }
        Command::Crystal(c) => return crystal_command(c),
        Command::Verify(v) => return verify_command(v),
        Command::Conjecture {
            weight,
            sigma,
            mode,
            budget,
            out,
        } => {
            only(&out, &[Format::Text, Format::Json, Format::Dot])?;
            let lambda = weight.weight()?;
            let sigma = if sigma.is_empty() {
                (1..=weight.n).collect()
            } else {
                sigma
            };
            let mode = match mode {
                Mode::Greedy => SearchMode::Greedy,
                Mode::Exhaustive => SearchMode::Exhaustive,
            };
            let report = conjecture_search(&lambda, &sigma, mode, budget)?;
            let text = match out.format {
                Format::Json => json(&report)?,
                Format::Dot => report
                    .outcomes
                    .iter()
                    .filter(|o| o.isomorphic && o.axioms_pass)
                    .map(|o| export::to_dot(&o.graph))
                    .collect(),
                _ => {
                    let mut s = format!(
                        "lambda {} sigma {} graphs {} valid {}",
                        tuple(lambda.coeffs()),
                        tuple(&sigma),
                        report.outcomes.len(),
                        report.valid_count()
                    );
                    if report.incomplete {
                        s += " (budget exhausted)";
                    }
                    s += "\n";
                    for (i, o) in report.outcomes.iter().enumerate() {
                        s += &format!(
                            "graph {}: edges {} isomorphic {} axioms {}\n",
                            i + 1,
                            o.graph.edges.len(),
                            o.isomorphic,
                            o.axioms_pass
                        );
                    }
                    s
                }
            };
            emit(&out, &text)?;
        }
    }
    Ok(None)
}

fn word(args: WordArgs) -> Result<()> {
    only(&args.out, &[Format::Text, Format::Json])?;
    let rank = Rank::new(args.n)?;
    let w = match (&args.ik, &args.word) {
        (Some(k), _) => ik_word(rank, *k)?,
        (_, Some(spec)) => parse_word(rank, spec)?,
        _ if args.lexmax => lexmax_word(rank),
        _ => lexmin_word(rank),
    };
    let enumeration = root_enumeration(&w);
    let text = match args.out.format {
        Format::Json => {
            #[derive(Serialize)]
            struct WordOut<'a> {
                word: &'a [usize],
                #[serde(skip_serializing_if = "Option::is_none")]
                roots: Option<&'a [Root]>,
            }
            json(&WordOut {
                word: w.letters(),
                roots: args.roots.then_some(enumeration.roots()),
            })?
        }
        _ => {
            let mut s = tuple(w.letters()) + "\n";
            if args.roots {
                for (i, r) in enumeration.roots().iter().enumerate() {
                    s += &format!("beta_{} = {}\n", i + 1, root_name(r));
                }
            }
            s
        }
    };
    emit(&args.out, &text)
}

fn crystal_command(c: CrystalCommand) -> Result<Option<Failed>> {
    match c {
        CrystalCommand::Sl3 { gt, a, b, out, .. } => {
            let g = if gt { sl3_bgt(a, b)? } else { sl3_blt(a, b)? };
            graph_output(&out, &g)?;
        }
        CrystalCommand::Pb { weight, out } => graph_output(&out, &pb_graph(&weight.weight()?)?)?,
        CrystalCommand::Oracle { weight, out } => {
            only(&out, &[Format::Text, Format::Dot])?;
            let ic = word_oracle(&weight.weight()?).indexed();
            let text = match out.format {
                Format::Dot => export::indexed_to_dot(&ic),
                _ => {
                    let mut s = String::new();
                    for a in 1..=ic.n {
                        for v in 0..ic.len() {
                            if let Some(t) = ic.f(a, v) {
                                s += &format!("{} -{a}-> {}\n", ic.labels[v], ic.labels[t]);
                            }
                        }
                    }
                    s
                }
            };
            emit(&out, &text)?;
        }
        CrystalCommand::FixedK { weight, k, out } => {
            let found = fixed_k_crystals(&weight.weight()?, k, crystal::search::DEFAULT_BUDGET)?;
            match found.graphs.as_slice() {
                [g] => graph_output(&out, g)?,
                gs => {
                    eprintln!("found {} crystals using only moves of {k}^*", gs.len());
                    return Ok(Some(Failed));
                }
            }
        }
        CrystalCommand::Check { input, out } => {
            only(&out, &[Format::Text, Format::Json])?;
            let text = std::fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let g: CrystalGraph = serde_json::from_str(&text).context("parsing crystal graph")?;
            let axioms = check_local_axioms(&g);
            let iso = check_oracle_iso(&g);
            let ok = axioms.passed() && iso.isomorphic;
            let text = match out.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct CheckOut<'a> {
                        axioms: &'a crystal::AxiomReport,
                        iso: &'a crystal::IsoReport,
                    }
                    json(&CheckOut {
                        axioms: &axioms,
                        iso: &iso,
                    })?
                }
                _ => {
                    let mut s = format!(
                        "local axioms: {}\nisomorphic to the word crystal: {}\n",
                        if axioms.passed() { "pass" } else { "fail" },
                        iso.isomorphic
                    );
                    for v in axioms.violations.iter().take(10) {
                        s += &format!("  {} at {}: {}\n", v.axiom, v.vertex, v.detail);
                    }
                    if let Some(m) = &iso.mismatch {
                        s += &format!("  {m}\n");
                    }
                    s
                }
            };
            emit(&out, &text)?;
            if !ok {
                return Ok(Some(Failed));
            }
        }
    }
    Ok(None)
}

fn verify_command(v: VerifyCommand) -> Result<Option<Failed>> {
    let (cases, out) = match v {
        VerifyCommand::Main { weight, out } => (vec![Case::Main(weight.weight()?)], out),
        VerifyCommand::Fundamental { n, k, r, out } => (vec![Case::Fundamental(Rank::new(n)?, k, r)], out),
        VerifyCommand::WordCounts { weight, out } => (vec![Case::WordCounts(weight.weight()?)], out),
        VerifyCommand::Dyck { n, k, out } => (vec![Case::Dyck(Rank::new(n)?, k)], out),
        VerifyCommand::Rectangle { n, k, r, out } => (vec![Case::Rectangle(Rank::new(n)?, k, r)], out),
        VerifyCommand::Sweep { config, mut out } => {
            let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let cfg = SweepConfig::from_toml(&text)?;
            out.timing |= cfg.timing;
            let mut cases = Vec::new();
            for spec in &cfg.cases {
                cases.extend(spec.expand()?);
            }
            (cases, out)
        }
    };
    only(&out.out, &[Format::Text, Format::Json])?;
    let reports = verify::run_cases(&cases, out.timing)?;
    let mut summary: String = reports.iter().map(|r| r.summary_line() + "\n").collect();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    summary += &format!("{} checks, {} failed\n", reports.len(), failed);
    if out.out.format == Format::Json {
        emit(&out.out, &json(&reports)?)?;
        eprint!("{summary}");
    } else {
        emit(&out.out, &summary)?;
    }
    Ok((failed > 0).then_some(Failed))
}
