//! The `flewsat` command line: argument parsing, dispatch and `key: value`
//! reporting.

use crate::algebra::format::{parse_algebra, parse_lattice, write_algebra};
use crate::algebra::{Assignment, FiniteAlgebra, Law};
use crate::decision::{self, ScanOptions, Verdict};
use crate::forms::{self, CfForm, CvTerm};
use crate::term::{parse, Term};
use crate::zoo::{self, KomoriChain, LexPair, Rational};
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

/// Environment variable read when `--budget` is absent.
pub const BUDGET_ENV: &str = "FLEWSAT_BUDGET";

/// Seed used by randomized verbs when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 0;

/// Output of one invocation: `key: value` lines, or a raw document for
/// verbs that emit a file, plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<(String, String)>,
    pub raw: Option<String>,
    pub exit: i32,
}

impl Report {
    fn new() -> Self {
        Report {
            lines: Vec::new(),
            raw: None,
            exit: 0,
        }
    }

    fn push(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.lines.push((key.to_string(), value.to_string()));
        self
    }

    fn error(msg: impl fmt::Display) -> Self {
        let mut r = Report::new();
        // keep the report to a single line; drop usage hints
        let msg = msg.to_string();
        let text: Vec<&str> = msg
            .lines()
            .map(str::trim)
            .take_while(|l| !l.starts_with("Usage:"))
            .filter(|l| !l.is_empty())
            .collect();
        r.push("error", text.join(" "));
        r.exit = 2;
        r
    }

    fn raw(text: String) -> Self {
        Report {
            lines: Vec::new(),
            raw: Some(text),
            exit: 0,
        }
    }

    /// The value of the first line with `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(raw) = &self.raw {
            return f.write_str(raw);
        }
        for (k, v) in &self.lines {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

#[derive(Parser, Debug)]
#[command(name = "flewsat", version, about = "Decide SAT, SATPOS and TAUT over FLew-algebras")]
struct Cli {
    /// Maximum number of assignments per scan (also FLEWSAT_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build or check algebra files.
    Alg {
        #[command(subcommand)]
        cmd: AlgCmd,
    },
    /// Is TERM sent to 1 by every assignment?
    Taut { alg: PathBuf, term: String },
    /// Is TERM sent to 1 by some assignment?
    Sat { alg: PathBuf, term: String },
    /// Is TERM sent above 0 by some assignment?
    Satpos { alg: PathBuf, term: String },
    /// Report identities and the homomorphism onto 2.
    Classify {
        alg: Option<PathBuf>,
        /// An infinite family instead of a file, e.g. `--family komori 2`.
        #[arg(long, num_args = 2, value_names = ["FAMILY", "N"], conflicts_with = "alg")]
        family: Option<Vec<String>>,
    },
    /// The three conditions for classical satisfiability of a chain.
    ChainTest { alg: PathBuf },
    /// Print the double-negation translation of TERM.
    Glivenko { term: String },
    /// Search the standard MV-algebra up to a denominator bound.
    Mvsat {
        term: String,
        #[arg(long)]
        max_den: u32,
    },
    /// Print the disjunctive form of a (*, \/)-term.
    Df { term: String },
    /// Classical satisfiability of a (*, \/)-term.
    Cvsat { term: String },
    /// Read a DIMACS CNF file as a clause form.
    Dimacs {
        file: PathBuf,
        #[arg(long)]
        emit_term: bool,
    },
    /// Hardness reductions.
    Reduce {
        #[command(subcommand)]
        cmd: ReduceCmd,
    },
    /// Maximum of a (*, \/)-term over the standard MV-algebra.
    Maxcv { term: String },
    /// Check SAT, SATPOS and classical SAT agree on random (*, \/)-terms.
    Selfcheck {
        alg: PathBuf,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Subcommand, Debug)]
enum AlgCmd {
    /// Emit an algebra in the flewalg 1 format.
    Make {
        #[command(subcommand)]
        kind: MakeCmd,
    },
    /// Check every FLew law on a table file.
    Validate { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum MakeCmd {
    Bool2,
    Lukasiewicz { k: usize },
    Godel { k: usize },
    Product { f1: PathBuf, f2: PathBuf },
    Heyting { latticefile: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ReduceCmd {
    /// (alpha /\ phi1) \/ phi2 with variables renamed apart.
    Dp {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        phi1: String,
        #[arg(long)]
        phi2: String,
    },
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> Report
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Report::raw(e.to_string()),
                _ => Report::error(e.to_string().trim_start_matches("error: ")),
            };
        }
    };
    match dispatch(cli) {
        Ok(r) => r,
        Err(msg) => Report::error(msg),
    }
}

type Outcome = Result<Report, String>;

fn scan_options(cli_budget: Option<u64>) -> Result<ScanOptions, String> {
    let budget = match cli_budget {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| format!("{BUDGET_ENV} must be a nonnegative integer, got {v:?}"))?,
            Err(_) => decision::DEFAULT_BUDGET,
        },
    };
    Ok(ScanOptions { budget })
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_algebra(path: &Path) -> Result<FiniteAlgebra, String> {
    let tables = parse_algebra(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    tables
        .into_algebra()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn term(text: &str) -> Result<Term, String> {
    parse(text).map_err(|e| format!("term: {e}"))
}

fn cv_term(text: &str) -> Result<CvTerm, String> {
    forms::recognize_cv(&term(text)?).ok_or_else(|| forms::FormsError::NotCv.to_string())
}

fn cf_form(text: &str) -> Result<CfForm, String> {
    CfForm::from_term(&term(text)?).ok_or_else(|| format!("{text:?} is not a product of clauses"))
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn witness_text(w: &Assignment, alg: &FiniteAlgebra) -> String {
    if w.is_empty() {
        "(no variables)".to_string()
    } else {
        w.display(alg).to_string()
    }
}

fn rational_assignment(w: &BTreeMap<u32, Rational>) -> String {
    if w.is_empty() {
        return "(no variables)".to_string();
    }
    w.iter()
        .map(|(v, q)| format!("x{v}={q}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn verdict_report(v: &Verdict, alg: &FiniteAlgebra, witness_key: &str) -> Report {
    let mut r = Report::new();
    r.push("holds", flag(v.holds));
    if let Some(w) = &v.witness {
        r.push(witness_key, witness_text(w, alg));
    }
    r.exit = if v.holds { 0 } else { 1 };
    r
}

fn dispatch(cli: Cli) -> Outcome {
    let opts = scan_options(cli.budget)?;
    let err = |e: decision::DecisionError| e.to_string();
    match cli.cmd {
        Cmd::Alg { cmd } => alg(cmd),
        Cmd::Taut { alg, term: t } => {
            let a = load_algebra(&alg)?;
            let v = decision::taut(&a, &term(&t)?, &opts).map_err(err)?;
            Ok(verdict_report(&v, &a, "counterexample"))
        }
        Cmd::Sat { alg, term: t } => {
            let a = load_algebra(&alg)?;
            let v = decision::sat(&a, &term(&t)?, &opts).map_err(err)?;
            Ok(verdict_report(&v, &a, "witness"))
        }
        Cmd::Satpos { alg, term: t } => {
            let a = load_algebra(&alg)?;
            let v = decision::satpos(&a, &term(&t)?, &opts).map_err(err)?;
            Ok(verdict_report(&v, &a, "witness"))
        }
        Cmd::Classify { alg, family } => match (alg, family) {
            (Some(path), None) => Ok(classify_file(&load_algebra(&path)?)),
            (None, Some(f)) => classify_family(&f[0], &f[1]),
            _ => Err("classify needs ALGFILE or --family NAME N".into()),
        },
        Cmd::ChainTest { alg } => {
            let a = load_algebra(&alg)?;
            let c = decision::chain_criterion(&a, &opts).map_err(err)?;
            let mut r = Report::new();
            r.push("condition-2", flag(c.condition2()))
                .push("condition-3", flag(c.condition3()))
                .push("condition-4", flag(c.condition4()))
                .push("agree", flag(c.agree()));
            if let Some(x) = c.witness_term_solution {
                r.push("witness", format!("x1={}", a.name(x)));
            }
            r.push("fixed-point", c.fixed_point.map_or("none".into(), |x| a.name(x).to_string()));
            if let Some((x, y)) = c.closure_failure {
                r.push("closure-failure", format!("({},{})", a.name(x), a.name(y)));
            }
            r.exit = if c.agree() { 0 } else { 1 };
            Ok(r)
        }
        Cmd::Glivenko { term: t } => {
            let mut r = Report::new();
            r.push("term", decision::glivenko(&term(&t)?));
            Ok(r)
        }
        Cmd::Mvsat { term: t, max_den } => {
            let found = decision::bounded_mv_sat(&term(&t)?, max_den, &opts).map_err(err)?;
            let mut r = Report::new();
            match found {
                Some(w) => {
                    r.push("holds", "true").push("witness", rational_assignment(&w));
                }
                None => {
                    r.push("holds", "unknown").push("searched-max-den", max_den);
                    r.exit = 1;
                }
            }
            Ok(r)
        }
        Cmd::Df { term: t } => {
            let df = forms::cv_to_df(&cv_term(&t)?, forms::DEFAULT_MONOMIAL_BUDGET)
                .map_err(|e| e.to_string())?;
            let mut r = Report::new();
            r.push("monomials", df.0.len()).push("df", &df);
            Ok(r)
        }
        Cmd::Cvsat { term: t } => {
            let v = forms::classical_sat_cv(&cv_term(&t)?, forms::DEFAULT_MONOMIAL_BUDGET)
                .map_err(|e| e.to_string())?;
            Ok(verdict_report(&v, &zoo::bool2(), "witness"))
        }
        Cmd::Dimacs { file, emit_term } => {
            let cf = forms::dimacs_import(&read(&file)?).map_err(|e| format!("{}: {e}", file.display()))?;
            let v = forms::classical_sat_cv(&cf.to_cv(), forms::DEFAULT_MONOMIAL_BUDGET)
                .map_err(|e| e.to_string())?;
            let mut r = Report::new();
            r.push("clauses", cf.0.len()).push("variables", cf.variables().len());
            let verdict = verdict_report(&v, &zoo::bool2(), "witness");
            r.lines.extend(verdict.lines);
            r.exit = verdict.exit;
            if emit_term {
                r.push("term", cf.to_term());
            }
            Ok(r)
        }
        Cmd::Reduce {
            cmd: ReduceCmd::Dp { alpha, phi1, phi2 },
        } => {
            let d = forms::dp_reduce(&term(&alpha)?, &cf_form(&phi1)?, &cf_form(&phi2)?);
            let mut r = Report::new();
            r.push("term", &d.term);
            for (part, old, new) in d.renaming {
                r.push("rename", format!("{part} x{old} -> x{new}"));
            }
            Ok(r)
        }
        Cmd::Maxcv { term: t } => {
            let m = forms::vertex_max(&cv_term(&t)?).map_err(|e| e.to_string())?;
            let mut r = Report::new();
            r.push("max", &m.value).push("vertex", rational_assignment(&m.vertex));
            Ok(r)
        }
        Cmd::Selfcheck { alg, count } => {
            let a = load_algebra(&alg)?;
            selfcheck(&a, count, cli.seed.unwrap_or(DEFAULT_SEED), &opts)
        }
    }
}

fn alg(cmd: AlgCmd) -> Outcome {
    match cmd {
        AlgCmd::Make { kind } => {
            let a = match kind {
                MakeCmd::Bool2 => zoo::bool2(),
                MakeCmd::Lukasiewicz { k } => zoo::lukasiewicz_chain(k).map_err(|e| e.to_string())?,
                MakeCmd::Godel { k } => zoo::godel_chain(k).map_err(|e| e.to_string())?,
                MakeCmd::Product { f1, f2 } => load_algebra(&f1)?.product(&load_algebra(&f2)?),
                MakeCmd::Heyting { latticefile } => {
                    let l = parse_lattice(&read(&latticefile)?)
                        .map_err(|e| format!("{}: {e}", latticefile.display()))?;
                    zoo::heyting_from_lattice(&l).map_err(|e| e.to_string())?
                }
            };
            Ok(Report::raw(write_algebra(a.tables())))
        }
        AlgCmd::Validate { file } => {
            let tables = parse_algebra(&read(&file)?).map_err(|e| format!("{}: {e}", file.display()))?;
            let report = tables.validate();
            let mut r = Report::new();
            for law in Law::ALL {
                match report.violation(law) {
                    None => r.push(law.key(), "pass"),
                    Some(v) => {
                        let names: Vec<&str> = v.witness.iter().map(|&x| tables.name(x)).collect();
                        r.push(law.key(), format!("fail at ({})", names.join(",")))
                    }
                };
            }
            r.push("trivial", flag(report.trivial))
                .push("valid", flag(report.passed()));
            r.exit = if report.passed() { 0 } else { 1 };
            Ok(r)
        }
    }
}

fn classify_file(a: &FiniteAlgebra) -> Report {
    let c = decision::classify(a);
    let mut r = Report::new();
    r.push("wcon", flag(c.wcon))
        .push("involutive", flag(c.involutive))
        .push("semilinear", flag(c.semilinear))
        .push("chain", flag(c.chain))
        .push("nontrivial", flag(c.nontrivial));
    if !c.nontrivial {
        r.push("hom-onto-2", "degenerate");
        return r;
    }
    match decision::hom_onto_bool(a) {
        Some(h) => {
            let ones: Vec<&str> = h.one_block.iter().map(|&x| a.name(x)).collect();
            r.push("hom-onto-2", "true").push("one-block", ones.join(" "));
        }
        None => {
            r.push("hom-onto-2", "false");
        }
    }
    r
}

fn classify_family(name: &str, n: &str) -> Outcome {
    if name != "komori" {
        return Err(format!("unknown family {name:?}; known: komori"));
    }
    let n: i64 = n.parse().map_err(|_| format!("bad family parameter {n:?}"))?;
    let k = KomoriChain::new(n).map_err(|e| e.to_string())?;
    let report = decision::komori_chain_criterion(n).map_err(|e| e.to_string())?;
    // the infinitesimal (0,1) is its own obstruction to x /\ ~x = 0
    let eps = LexPair::new(0, 1);
    let wcon = k.meet(&eps, &k.neg(&eps).unwrap()).unwrap() == k.zero();
    let mut r = Report::new();
    r.push("family", "komori")
        .push("n", n)
        .push("wcon", flag(wcon))
        .push("involutive", "true")
        .push("semilinear", "true")
        .push("chain", "true")
        .push("nontrivial", "true")
        .push(
            "fixed-point",
            report.fixed_point.as_ref().map_or("none".into(), |x| x.to_string()),
        );
    if let Some((x, y)) = &report.closure_failure {
        r.push("closure-failure", format!("({x},{y})"));
    }
    r.push("classical-sat", flag(report.classical()));
    Ok(r)
}

fn selfcheck(a: &FiniteAlgebra, count: usize, seed: u64, opts: &ScanOptions) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for _ in 0..count {
        let t = forms::random_cv_term(&mut rng, 4, 10);
        let term = t.to_term();
        let s = decision::sat(a, &term, opts).map_err(|e| e.to_string())?.holds;
        let p = decision::satpos(a, &term, opts).map_err(|e| e.to_string())?.holds;
        let c = forms::classical_sat_cv(&t, forms::DEFAULT_MONOMIAL_BUDGET)
            .map_err(|e| e.to_string())?
            .holds;
        if a.is_nontrivial() && !(s == p && p == c) {
            mismatches.push(term);
        }
    }
    let mut r = Report::new();
    r.push("seed", seed)
        .push("checked", count)
        .push("mismatches", mismatches.len());
    if let Some(t) = mismatches.first() {
        r.push("first-mismatch", t);
    }
    r.exit = if mismatches.is_empty() { 0 } else { 1 };
    Ok(r)
}
