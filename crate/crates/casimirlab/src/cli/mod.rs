//! Command-line surface: argument parsing, command dispatch and output.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

pub mod report;
pub mod suites;

use crate::casimir::{AlgebraId, Family};
use crate::decomp::{self, Decomposition};
use crate::error::Error;
use crate::exact::int;
use crate::fixtures::FixtureStore;
use crate::label::{self, IrrepLabel};
use crate::{matrixoracle, qdim, vogel};
use clap::{Args, Parser, Subcommand};
use report::{params, Cell, Comparison, Format, Recorder, Table, VerifyReport};
use std::ffi::OsString;
use std::path::PathBuf;
use suites::{Suite, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "casimirlab", version, about = "Exact Casimir, dimension and decomposition data for simple Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of an irrep (--label or --weight), or of Y_k through the universal formula (--universal --n k).
    Dim,
    /// Casimir eigenvalue (raw and normalized to the adjoint), or the universal c₂(Y_n) with --universal.
    Casimir,
    /// ad^⊗k (--k), label ⊗ ad (--label, sl only), or Y_n ⊗ ad (--n).
    Decompose,
    /// □⊗Y_n, or □⊗Y_n′ with --primed.
    Branch,
    /// Vogel parameters, split-Casimir eigenvalues and subspace dimensions of □⊗Y_n.
    Universal,
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Ladder colour factor Tr₁ Ĉ^L on □⊗ad; --oracle cross-checks against explicit sl(N ≤ 5) matrices.
    Ladder,
    /// Explicit split-Casimir matrix on □⊗Y_n for sl(N ≤ 5).
    Oracle,
    /// The q-dimension identities (--N, --n for the branching identity; --N, --M for the second one).
    Qverify,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// sl, so, sp, g2, f4, e6, e7, e8; "sl5" or "sl(5)" also set N.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// N, a range "a..b" (inclusive) or a list "a,b,c".
    #[arg(long = "N", global = true)]
    pub big_n: Option<String>,
    /// Level n of Y_n (value, range or list).
    #[arg(long = "n", global = true)]
    pub n: Option<String>,
    /// Tensor power k (value, range or list).
    #[arg(long, global = true)]
    pub k: Option<String>,
    /// Number of rungs L (value, range or list).
    #[arg(long = "L", global = true)]
    pub l: Option<String>,
    /// Second parameter M of the q-identity.
    #[arg(long = "M", global = true)]
    pub m: Option<String>,
    /// Young diagram "[2,1^3]" or composite "([2],[1])".
    #[arg(long, global = true)]
    pub label: Option<String>,
    /// Highest weight in fundamental weights, e.g. "1*w2" or "w1+2*w4".
    #[arg(long, global = true)]
    pub weight: Option<String>,
    /// Use Y_n′ instead of Y_n.
    #[arg(long, global = true)]
    pub primed: bool,
    /// Exchange β̂ and γ̂ (classical algebras).
    #[arg(long, global = true)]
    pub swapped: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Read fixtures from this directory (overrides CASIMIRLAB_FIXTURES).
    #[arg(long, global = true)]
    pub fixtures_dir: Option<PathBuf>,
    /// Add decimal approximations next to exact rationals.
    #[arg(long, global = true)]
    pub approx: bool,
    /// Reduced sweep for verify.
    #[arg(long, global = true)]
    pub quick: bool,
    /// Comma-separated families for verify, e.g. "sl,so,sp".
    #[arg(long, global = true)]
    pub families: Option<String>,
    /// Cross-check with explicit matrices (ladder).
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Use the universal (Vogel-parameter) formula (dim, casimir).
    #[arg(long, global = true)]
    pub universal: bool,
    /// Record wall-clock time per check (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

/// What a command produced.
#[derive(Debug)]
pub enum Output {
    Table(Table),
    Report(VerifyReport),
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(m: impl Into<String>) -> CliError {
    CliError::Usage(m.into())
}

/// Result of one invocation: what goes to stdout and stderr, and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses arguments (the first is the program name) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Invocation { stdout: text, stderr: String::new(), code }
            } else {
                Invocation { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok(Output::Table(t)) => Invocation { stdout: t.render(cli.opts.format, cli.opts.approx), stderr: String::new(), code: EXIT_OK },
        Ok(Output::Report(r)) => {
            let code = if r.passed() { EXIT_OK } else { EXIT_FAIL };
            Invocation { stdout: r.render(cli.opts.format), stderr: String::new(), code }
        }
        Err(e) => Invocation { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_USAGE },
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn execute(cli: &Cli) -> CliResult<Output> {
    let o = &cli.opts;
    match &cli.command {
        Command::Dim => cmd_dim(o).map(Output::Table),
        Command::Casimir => cmd_casimir(o).map(Output::Table),
        Command::Decompose => cmd_decompose(o).map(Output::Table),
        Command::Branch => cmd_branch(o).map(Output::Table),
        Command::Universal => cmd_universal(o).map(Output::Table),
        Command::Verify { suite } => Ok(Output::Report(suites::run(*suite, &suite_options(o)?))),
        Command::Ladder => cmd_ladder(o),
        Command::Oracle => cmd_oracle(o).map(Output::Report),
        Command::Qverify => cmd_qverify(o).map(Output::Report),
    }
}

/// "3", "1..4" (inclusive) or "1,3,5".
pub fn parse_range(flag: &str, s: &str) -> CliResult<Vec<i64>> {
    let bad = || usage(format!("--{flag}: expected a value, a range a..b or a list a,b,c; got {s:?}"));
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    let out: Vec<i64> = if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        s.split(',').map(num).collect::<CliResult<_>>()?
    };
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn range_of<T: TryFrom<i64>>(flag: &str, v: &Option<String>) -> CliResult<Option<Vec<T>>> {
    let Some(s) = v else { return Ok(None) };
    parse_range(flag, s)?
        .into_iter()
        .map(|x| T::try_from(x).map_err(|_| usage(format!("--{flag}: {x} is out of range"))))
        .collect::<CliResult<Vec<T>>>()
        .map(Some)
}

fn single<T: TryFrom<i64> + Copy>(flag: &str, v: &Option<String>) -> CliResult<Option<T>> {
    match range_of::<T>(flag, v)? {
        None => Ok(None),
        Some(xs) if xs.len() == 1 => Ok(Some(xs[0])),
        Some(_) => Err(usage(format!("--{flag} takes a single value here"))),
    }
}

fn required<T>(flag: &str, v: Option<T>) -> CliResult<T> {
    v.ok_or_else(|| usage(format!("missing --{flag}")))
}

/// Splits "sl", "sl5" or "sl(5)" into the family and an embedded N.
fn family_of(text: &str) -> CliResult<(Family, Option<u32>)> {
    let text = text.trim();
    if let Ok(f) = text.parse::<Family>() {
        return Ok((f, None));
    }
    let split = text.find(|c: char| c.is_ascii_digit() || c == '(').unwrap_or(text.len());
    let (name, rest) = text.split_at(split);
    let f: Family = name.parse()?;
    if !f.is_classical() {
        return Err(usage(format!("--algebra: unknown algebra {text:?}")));
    }
    let digits = rest.trim_start_matches('(').trim_end_matches(')');
    let n = digits.parse::<u32>().map_err(|_| usage(format!("--algebra: bad N in {text:?}")))?;
    Ok((f, Some(n)))
}

/// Resolves --algebra (and --N for the classical series).
pub fn algebra(o: &Options) -> CliResult<AlgebraId> {
    let text = required("algebra", o.algebra.as_deref())?;
    let (family, embedded_n) = family_of(text)?;
    let flag_n = single::<u32>("N", &o.big_n)?;
    let n = match (embedded_n, flag_n) {
        (Some(a), Some(b)) if a != b => return Err(usage(format!("--algebra {text} conflicts with --N {b}"))),
        (a, b) => a.or(b),
    };
    if family.is_classical() && n.is_none() {
        return Err(usage(format!("{} needs --N", family.name())));
    }
    Ok(AlgebraId::new(family, if family.is_classical() { n } else { None })?)
}

fn irrep(o: &Options, g: &AlgebraId) -> CliResult<IrrepLabel> {
    match (&o.label, &o.weight) {
        (Some(l), None) => Ok(label::parse_for(g, l)?),
        (None, Some(w)) => Ok(label::normalize(g, &IrrepLabel::weight(label::parse_weight(w)?))?),
        (Some(_), Some(_)) => Err(usage("give either --label or --weight, not both")),
        (None, None) => Err(usage("missing --label or --weight")),
    }
}

fn levels(o: &Options) -> CliResult<Vec<usize>> {
    let ns = required("n", range_of::<usize>("n", &o.n)?)?;
    if ns.contains(&0) {
        return Err(usage("--n must be at least 1"));
    }
    Ok(ns)
}

fn cmd_dim(o: &Options) -> CliResult<Table> {
    let g = algebra(o)?;
    if o.universal {
        let mut p = vogel::params(&g, o.swapped);
        if o.primed {
            p = p.plain().exchange_alpha_beta();
        }
        let mut t = Table::new(&["algebra", "k", "label", "dim"]);
        for k in levels(o)? {
            let name = if o.primed { format!("Y{k}'") } else { format!("Y{k}") };
            t.push(vec![g.to_string().into(), k.into(), name.into(), vogel::dim_yk_universal(&p, k)?.into()]);
        }
        return Ok(t);
    }
    let l = irrep(o, &g)?;
    let mut t = Table::new(&["algebra", "label", "dim"]);
    t.push(vec![g.to_string().into(), l.to_string().into(), label::dim(&g, &l)?.into()]);
    Ok(t)
}

fn cmd_casimir(o: &Options) -> CliResult<Table> {
    let g = algebra(o)?;
    if o.universal {
        let p = vogel::params(&g, false);
        let mut t = Table::new(&["algebra", "n", "label", "normalized"]);
        for n in levels(o)? {
            let name = if o.primed { format!("Y{n}'") } else { format!("Y{n}") };
            t.push(vec![g.to_string().into(), n.into(), name.into(), vogel::c2_yn_universal(&p, n, o.primed).into()]);
        }
        return Ok(t);
    }
    let l = irrep(o, &g)?;
    let c = label::casimir(&g, &l)?;
    let mut t = Table::new(&["algebra", "label", "raw", "normalized"]);
    t.push(vec![g.to_string().into(), l.to_string().into(), c.raw.into(), c.normalized.into()]);
    Ok(t)
}

fn store(o: &Options) -> FixtureStore {
    FixtureStore::resolve(o.fixtures_dir.as_deref())
}

/// Rows label / multiplicity / dim for a decomposition; `dim_of` is None when no N is fixed.
fn decomposition_table(d: &Decomposition, extra: Option<(&'static str, Cell)>, dim_of: Option<&AlgebraId>) -> CliResult<Table> {
    let mut cols = Vec::new();
    if let Some((name, _)) = &extra {
        cols.push(*name);
    }
    cols.extend(["label", "multiplicity"]);
    if dim_of.is_some() {
        cols.push("dim");
    }
    let mut t = Table::new(&cols);
    for (l, m) in d.iter() {
        let mut row: Vec<Cell> = Vec::new();
        if let Some((_, c)) = &extra {
            row.push(c.clone());
        }
        row.push(l.to_string().into());
        row.push(m.into());
        if let Some(g) = dim_of {
            row.push(label::dim(g, l)?.into());
        }
        t.push(row);
    }
    Ok(t)
}

fn cmd_decompose(o: &Options) -> CliResult<Table> {
    let (family, embedded_n) = family_of(required("algebra", o.algebra.as_deref())?)?;
    // ad^⊗k and label ⊗ ad are N-independent; dimensions are shown once N is fixed
    let with_n = || -> CliResult<Option<AlgebraId>> {
        if o.big_n.is_some() || embedded_n.is_some() {
            algebra(o).map(Some)
        } else {
            Ok(None)
        }
    };
    if let Some(k) = single::<usize>("k", &o.k)? {
        let d = match family {
            Family::SL => decomp::ad_power(k)?,
            Family::SO => {
                let f = store(o).so_ad_powers()?;
                let terms = f.ad(k).ok_or_else(|| usage(format!("so ad^⊗{k} is tabulated for k = 2..4")))?;
                Decomposition::from_terms(terms)?
            }
            _ => return Err(usage("--k decompositions are available for sl and so")),
        };
        return decomposition_table(&d, Some(("k", k.into())), with_n()?.as_ref());
    }
    if o.label.is_some() {
        if family != Family::SL {
            return Err(usage("label ⊗ ad is available for sl composite labels"));
        }
        let l = label::parse_label(o.label.as_deref().unwrap_or_default())?;
        let d = decomp::mult_by_adjoint(&Decomposition::singleton(l))?;
        return decomposition_table(&d, None, with_n()?.as_ref());
    }
    let g = algebra(o)?;
    let mut all = Table::new(&["n", "label", "multiplicity", "dim"]);
    for n in levels(o)? {
        let d = decomp::yn_times_ad(&g, n, &store(o))?;
        all.rows.extend(decomposition_table(&d, Some(("n", n.into())), Some(&g))?.rows);
    }
    Ok(all)
}

fn cmd_branch(o: &Options) -> CliResult<Table> {
    let g = algebra(o)?;
    let mut all = Table::new(&["n", "label", "multiplicity", "dim"]);
    for n in levels(o)? {
        let d = decomp::branch_box_yn(&g, n, o.primed, &store(o))?;
        all.rows.extend(decomposition_table(&d, Some(("n", n.into())), Some(&g))?.rows);
    }
    Ok(all)
}

fn cmd_universal(o: &Options) -> CliResult<Table> {
    let g = algebra(o)?;
    if o.primed {
        return Err(usage("universal describes □⊗Y_n; use `branch --primed` for □⊗Y_n′"));
    }
    let p = vogel::params(&g, o.swapped);
    let mut t = Table::new(&["n", "multiplet", "eigenvalue", "dimension", "label", "alpha_hat", "beta_hat", "gamma_hat"]);
    for n in levels(o)? {
        for m in vogel::dims_box_yn_with(&g, &p, n)? {
            t.push(vec![
                n.into(),
                m.index.to_string().into(),
                m.eigenvalue.into(),
                m.dimension.into(),
                m.label.map_or_else(|| "-".to_string(), |l| l.to_string()).into(),
                p.alpha_hat.clone().into(),
                p.beta_hat.clone().into(),
                p.gamma_hat.clone().into(),
            ]);
        }
    }
    Ok(t)
}

fn cmd_ladder(o: &Options) -> CliResult<Output> {
    let g = algebra(o)?;
    let ls = required("L", range_of::<u32>("L", &o.l)?)?;
    if !o.oracle {
        let mut t = Table::new(&["algebra", "L", "ladder"]);
        for l in ls {
            t.push(vec![g.to_string().into(), l.into(), vogel::ladder_factor(&g, l)?.into()]);
        }
        return Ok(Output::Table(t));
    }
    let big_n = match (g.family(), g.n()) {
        (Family::SL, Some(n)) if n as usize <= matrixoracle::MAX_N => n as usize,
        _ => return Err(usage(format!("--oracle needs sl(N) with N ≤ {}", matrixoracle::MAX_N))),
    };
    let (sl, c) = matrixoracle::box_times_adjoint(big_n)?;
    let max = *ls.iter().max().expect("nonempty");
    let traces = matrixoracle::trace_powers(&c, max);
    let r = Recorder { timings: o.timings };
    let dim_g = int(sl.dim_g() as i64);
    let entries = ls
        .iter()
        .map(|&l| {
            r.check("ladder.oracle", g, params(&[("L", l)]), || {
                Ok(Comparison::eq(&(&traces[l as usize] / &dim_g), &vogel::ladder_factor(&g, l)?))
            })
        })
        .collect();
    Ok(Output::Report(VerifyReport::new("ladder", entries)))
}

fn cmd_oracle(o: &Options) -> CliResult<VerifyReport> {
    let g = algebra(o)?;
    let big_n = match (g.family(), g.n()) {
        (Family::SL, Some(n)) if n as usize <= matrixoracle::MAX_N => n as usize,
        _ => return Err(usage(format!("the matrix oracle covers sl(N) with N ≤ {}", matrixoracle::MAX_N))),
    };
    let ns = match &o.n {
        Some(_) => levels(o)?,
        None => vec![1],
    };
    let r = Recorder { timings: o.timings };
    Ok(VerifyReport::new("oracle", ns.into_iter().flat_map(|n| suites::oracle_entries(&r, big_n, n)).collect()))
}

fn cmd_qverify(o: &Options) -> CliResult<VerifyReport> {
    let ns = required("N", range_of::<usize>("N", &o.big_n)?)?;
    let r = Recorder { timings: o.timings };
    let mut entries = Vec::new();
    if let Some(ms) = range_of::<i64>("M", &o.m)? {
        for &big_n in &ns {
            for &m in &ms {
                entries.push(r.check("qdim.identity2", "-", params(&[("N", big_n as i64), ("M", m)]), || {
                    let id = qdim::q_identity_2(big_n as i64, m);
                    let samples = qdim::sample_points(id.required_samples());
                    Ok(Comparison::holds(format!("{} points", samples.len()), qdim::verify_q_identity_2(big_n as i64, m, &samples)?))
                }));
            }
        }
    }
    if o.n.is_some() || o.m.is_none() {
        let levels = if o.n.is_some() { levels(o)? } else { vec![1] };
        for &big_n in &ns {
            for &n in &levels {
                let p = params(&[("N", big_n), ("n", n)]);
                let alg = format!("sl({big_n})");
                entries.push(r.check("qdim.identity1", &alg, p.clone(), || {
                    let id = qdim::q_identity_1(big_n, n)?;
                    let samples = qdim::sample_points(id.required_samples());
                    Ok(Comparison::holds(format!("{} points", samples.len()), id.verify(&samples)?))
                }));
                entries.push(r.check("qdim.classical", &alg, p, || Ok(Comparison::holds("q = 1", qdim::classical_check(big_n, n)?))));
            }
        }
    }
    Ok(VerifyReport::new("qverify", entries))
}

fn suite_options(o: &Options) -> CliResult<SuiteOptions> {
    let families = match &o.families {
        Some(s) => Some(s.split(',').map(|f| f.trim().parse::<Family>().map_err(CliError::from)).collect::<CliResult<Vec<_>>>()?),
        None => o.algebra.as_ref().map(|a| a.parse::<Family>().map(|f| vec![f])).transpose()?,
    };
    let n = range_of::<usize>("n", &o.n)?;
    if n.as_ref().is_some_and(|v| v.contains(&0)) {
        return Err(usage("--n must be at least 1"));
    }
    Ok(SuiteOptions {
        quick: o.quick,
        families,
        big_n: range_of::<u32>("N", &o.big_n)?,
        n,
        k: range_of::<usize>("k", &o.k)?,
        timings: o.timings,
        store: store(o),
    })
}
