//! Command-line front end: algebra spec files, Lefschetz checks, verification sweeps and the
//! counterexample pipeline.

pub mod poly;
pub mod report;
pub mod spec;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lefschetz_core::lefschetz::{self, LefschetzReport, Mode, RankProfile, DEFAULT_TRIALS};
use lefschetz_core::theorem;
use lefschetz_core::{check_symmetric_unimodal, FieldSpec, GradedAlgebra, Verdict};

pub use report::{emit_report, Format, Report};
pub use spec::{build, parse_spec, print_spec, AlgebraSpec, SpecError};

use report::join;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const COUNTEREXAMPLE_PRIME: u64 = 32003;
const COUNTEREXAMPLE_HILB_B: [usize; 11] = [1, 5, 14, 30, 51, 71, 84, 84, 70, 46, 16];
const COUNTEREXAMPLE_HILB_C: [usize; 11] = [1, 5, 14, 30, 51, 71, 84, 84, 70, 45, 12];

#[derive(Parser, Debug)]
#[command(name = "lefschetz", version, about = "Exact Lefschetz property checks for graded Artinian algebras")]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Omit wall-clock timing so the output is byte-for-byte reproducible
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert function, symmetry, unimodality and Gorenstein flag of an algebra
    Hilbert {
        spec: PathBuf,
    },
    /// Search for (or test) a Lefschetz element
    Check(CheckArgs),
    /// Mechanical checks of the ingredients behind the extension theorem
    #[command(subcommand)]
    Verify(Verify),
    /// Rebuild a published example end to end
    #[command(subcommand)]
    Reproduce(Reproduce),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Weak,
    Strong,
    Maxrank,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub spec: PathBuf,
    #[arg(long, value_enum, default_value = "strong")]
    pub mode: CheckMode,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Test this linear form instead of searching, e.g. "x + 2*y"
    #[arg(long)]
    pub element: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Closed-form reduction coefficients against literal rewriting, plus the binomial identity
    Coefficients {
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long, default_value_t = 25)]
        rmax: usize,
    },
    /// Determinants of (1/(r - i + j)) by elimination and by the Cauchy formula
    Smatrix {
        #[arg(long, default_value_t = 30)]
        rmax: usize,
    },
    /// Both sides of the duality between f(a) on A and a - x on A[x]/(f)
    Duality {
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Block matrix rank against direct rank on A[x]/((a + x)^k)
    Blockmatrix {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Strong Lefschetz search over monomial complete intersections
    Stanley {
        #[arg(long, default_value_t = 256)]
        dimcap: usize,
        #[arg(long, default_value_t = 4)]
        max_vars: usize,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Reproduce {
    /// K[x1..x5]/(x1^4, .., x4^4, x5^2) modulo a degree-8 form, over GF(32003)
    Gegen {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// Draw the degree-8 form from x1..x4 only
        #[arg(long)]
        split: bool,
    },
}

/// Failure before any computation: bad arguments, unreadable or invalid spec.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<lefschetz_core::Error> for UsageError {
    fn from(e: lefschetz_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = std::result::Result<Report, UsageError>;

/// Execute a parsed command line; `echo` is recorded as the report's command.
pub fn run(cli: &Cli, echo: &str) -> CmdResult {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Hilbert { spec } => hilbert(spec, echo)?,
        Command::Check(args) => check(args, echo)?,
        Command::Verify(v) => verify(v, echo)?,
        Command::Reproduce(Reproduce::Gegen {
            seed,
            trials,
            split,
        }) => counterexample(*seed, *trials, *split, echo)?,
    };
    if !cli.no_timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

/// Parse arguments, run, print. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match run(&cli, &echo) {
        Ok(report) => {
            print!("{}", emit_report(&report, cli.format));
            if report.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn load(path: &Path) -> std::result::Result<(AlgebraSpec, GradedAlgebra), UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let spec = parse_spec(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let alg = build(&spec).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok((spec, alg))
}

fn describe_algebra(report: &mut Report, alg: &GradedAlgebra) {
    report.fingerprint = Some(alg.fingerprint());
    report.field = Some(alg.field().to_string());
    report.hilbert = Some(alg.hilbert_function());
}

fn hilbert(path: &Path, echo: &str) -> CmdResult {
    let (_, alg) = load(path)?;
    let mut r = Report::new(echo);
    describe_algebra(&mut r, &alg);
    let h = alg.hilbert_function();
    let (symmetric, unimodal) = check_symmetric_unimodal(&h);
    let (socle, gorenstein) = alg.socle_dimension();
    r.line(format!("Hilbert function: {}", join(&h)));
    r.line(format!("socle degree: {}", alg.sigma()));
    r.line(format!("multiplicity: {}", alg.multiplicity()));
    r.line(format!("symmetric: {symmetric}"));
    r.line(format!("unimodal: {unimodal}"));
    r.line(format!("socle dimensions: {}", join(&socle)));
    r.line(format!("Gorenstein: {gorenstein}"));
    r.detail("sigma", alg.sigma());
    r.detail("multiplicity", alg.multiplicity());
    r.detail("symmetric", symmetric);
    r.detail("unimodal", unimodal);
    r.detail("socle", &socle);
    r.detail("gorenstein", gorenstein);
    Ok(r)
}

fn profile_lines(r: &mut Report, profiles: &[RankProfile]) {
    for p in profiles {
        for row in &p.rows {
            r.line(format!(
                "  power {} degree {}: {} -> {} rank {}{}",
                p.power,
                row.degree,
                row.source_dim,
                row.target_dim,
                row.rank,
                if row.is_maximal { "" } else { "  NOT MAXIMAL" }
            ));
        }
    }
}

fn lefschetz_lines(r: &mut Report, rep: &LefschetzReport) {
    r.line(format!("element: {}", rep.element));
    r.line(format!("trials used: {}", rep.trials_used));
    if let Some(w) = rep.witness {
        r.line(format!("first failure: power {} on degree {}", w.power, w.degree));
    }
    if rep.probabilistic {
        r.line("note: over a finite field a failed search is weaker evidence than over QQ");
    }
    r.line("rank profiles:");
    profile_lines(r, &rep.profiles);
    r.passed = rep.verdict == Verdict::CertifiedSuccess;
}

fn check(args: &CheckArgs, echo: &str) -> CmdResult {
    let (spec, alg) = load(&args.spec)?;
    let mut r = Report::new(echo);
    describe_algebra(&mut r, &alg);
    r.line(format!("Hilbert function: {}", join(&alg.hilbert_function())));
    let mode = match args.mode {
        CheckMode::Weak => Mode::Weak,
        CheckMode::Strong => Mode::Strong,
        CheckMode::Maxrank => {
            if args.element.is_some() {
                return Err(UsageError("--element is not supported with --mode maxrank".into()));
            }
            r.seeds.push(args.seed);
            let rep = lefschetz::maximal_rank_property(&alg, args.trials, args.seed)?;
            for d in &rep.degrees {
                r.line(format!(
                    "degree {}: {} after {} trial(s)",
                    d.degree,
                    verdict_name(d.verdict),
                    d.trials_used
                ));
                r.verdict(format!("degree {}", d.degree), d.verdict);
            }
            r.passed = rep.all_certified();
            r.detail("maxrank", &rep);
            return Ok(r);
        }
    };
    let rep = match &args.element {
        Some(text) => {
            let l = spec::parse_element(&alg, &spec.variables(), text)
                .map_err(|e| UsageError(format!("--element: {e}")))?;
            if l.degree() != 1 {
                return Err(UsageError("--element must be a linear form".into()));
            }
            lefschetz::check_element(&alg, &l, mode)?
        }
        None => {
            r.seeds.push(args.seed);
            lefschetz::search(&alg, mode, args.trials, args.seed)?
        }
    };
    lefschetz_lines(&mut r, &rep);
    r.verdict(mode_name(mode), rep.verdict);
    r.detail("lefschetz", &rep);
    Ok(r)
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::CertifiedSuccess => "certified_success",
        Verdict::ElementFailure => "element_failure",
        Verdict::SearchInconclusive => "search_inconclusive",
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Weak => "weak",
        Mode::Strong => "strong",
    }
}

fn verify(v: &Verify, echo: &str) -> CmdResult {
    let mut r = Report::new(echo);
    match v {
        Verify::Coefficients { kmax, rmax } => {
            if *kmax == 0 {
                return Err(UsageError("--kmax must be at least 1".into()));
            }
            let s = theorem::coefficient_sweep(*kmax, *rmax);
            r.line(format!(
                "checked {} coefficients and {} binomial identities",
                s.checked, s.identities_checked
            ));
            for (rr, j, k) in &s.mismatches {
                r.line(format!("closed form differs from rewriting at r={rr} j={j} k={k}"));
            }
            for (rr, j, k) in &s.identity_failures {
                r.line(format!("binomial identity fails at r={rr} j={j} k={k}"));
            }
            if s.passed() {
                r.line("all identities hold");
            }
            r.passed = s.passed();
            r.detail("coefficients", &s);
        }
        Verify::Smatrix { rmax } => {
            let s = theorem::smatrix_sweep(*rmax);
            r.line(format!("checked {} pairs 0 <= t < r <= {rmax}", s.checked));
            for (rr, t) in &s.failures {
                r.line(format!("mismatch or singular at r={rr} t={t}"));
            }
            if s.passed() {
                r.line("all determinants agree and are nonzero");
            }
            r.passed = s.passed();
            r.detail("smatrix", &s);
        }
        Verify::Duality { instances, seed } => {
            r.seeds.push(*seed);
            let s = theorem::duality_sweep(*instances, *seed)?;
            r.line(format!(
                "{} instances, {} with f(a) Lefschetz, {} disagreements",
                s.instances,
                s.lhs_true,
                s.disagreements.len()
            ));
            r.passed = s.passed();
            r.detail("duality", &s);
        }
        Verify::Blockmatrix { seed } => {
            r.seeds.push(*seed);
            let s = theorem::blockmatrix_sweep(*seed)?;
            r.line(format!("{} cases, {} rank mismatches", s.cases, s.failures.len()));
            for c in &s.failures {
                r.line(format!(
                    "  h={} k={} q={} t={}: block {} direct {} N {} + id {}",
                    join(&c.hilbert),
                    c.k,
                    c.q,
                    c.t,
                    c.block_rank,
                    c.direct_rank,
                    c.n_rank,
                    c.identity_size
                ));
            }
            for (q, k) in &s.l_failures {
                r.line(format!("  coefficient matrix q={q} k={k} not anti-triangularizable"));
            }
            r.passed = s.passed();
            r.detail("blockmatrix", &s);
        }
        Verify::Stanley {
            dimcap,
            max_vars,
            trials,
            seed,
        } => {
            r.seeds.push(*seed);
            r.field = Some(FieldSpec::rationals().to_string());
            let cases = theorem::stanley_sweep(FieldSpec::rationals(), *max_vars, *dimcap, *trials, *seed)?;
            let mut passed = true;
            for c in &cases {
                let ok = c.verdict == Verdict::CertifiedSuccess;
                passed &= ok;
                if !ok {
                    r.line(format!(
                        "exponents {}: {}",
                        join(&c.exponents),
                        verdict_name(c.verdict)
                    ));
                }
            }
            r.line(format!(
                "{} monomial complete intersections with at most {max_vars} variables and e <= {dimcap}, {} certified",
                cases.len(),
                cases.iter().filter(|c| c.verdict == Verdict::CertifiedSuccess).count()
            ));
            r.passed = passed;
            r.detail("stanley", &cases);
        }
    }
    Ok(r)
}

fn counterexample(seed: u64, trials: usize, split: bool, echo: &str) -> CmdResult {
    let field = FieldSpec::prime(COUNTEREXAMPLE_PRIME)?;
    let mut r = Report::new(echo);
    r.seeds.push(seed);
    let ambient = theorem::counterexample_ambient(field)?;
    r.line(format!("Hilb_A: {}", join(&ambient.hilbert_function())));
    let b = if split {
        theorem::split_counterexample_algebra(field, seed)?
    } else {
        theorem::counterexample_algebra(field, seed)?
    };
    describe_algebra(&mut r, &b);
    let hb = b.hilbert_function();
    r.line(format!("Hilb_B: {}", join(&hb)));
    let d = theorem::counterexample_disproof(&b, seed)?;
    r.line(format!("b = {}", d.element));
    r.line(format!("Hilb_C: {}", join(&d.quotient_hilbert)));
    r.line(format!("rank of b^9 on B_1: {}", d.rank));
    match &d.certificate {
        Some(c) => r.line(format!(
            "certificate: dim B_1 + dim C_10 = {} + {} > {} = dim B_10, so b^9: B_1 -> B_10 is neither injective nor surjective",
            c.source_dim, c.quotient_dim, c.target_dim
        )),
        None => r.line("no certificate: b^9 has maximal rank on B_1"),
    }
    let maxrank = lefschetz::maximal_rank_property(&b, trials, seed)?;
    for deg in &maxrank.degrees {
        r.line(format!(
            "maximal rank, degree {}: {}",
            deg.degree,
            verdict_name(deg.verdict)
        ));
    }
    r.verdict("disproof", if d.certificate.is_some() { "certified" } else { "none" });
    r.verdict(
        "maximal_rank",
        if maxrank.all_certified() {
            Verdict::CertifiedSuccess
        } else {
            Verdict::SearchInconclusive
        },
    );
    r.passed = hb == COUNTEREXAMPLE_HILB_B
        && d.quotient_hilbert == COUNTEREXAMPLE_HILB_C
        && d.certificate.is_some()
        && maxrank.all_certified();
    r.detail("disproof", &d);
    r.detail("maximal_rank", &maxrank);
    Ok(r)
}
