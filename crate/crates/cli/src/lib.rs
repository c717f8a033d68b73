//! The `homcode` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a size cap was hit,
//! 3 the codomain is trivial, 4 brute force and formula disagree or a
//! verification suite reported failures.

mod cache;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homcode_core::report::{AnalysisReport, GroupAnalysis, Method};
use homcode_core::spec_file::{parse_group_spec, ResolvedGroup};
use homcode_core::verify::{self, Suite, SuiteConfig};
use homcode_core::{homspace, Error};

pub use cache::Cache;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_TRIVIAL_CODOMAIN: i32 = 3;
pub const EXIT_DISCREPANCY: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "homcode",
    version,
    about = "Maximum agreement of homomorphism codes between finite groups"
)]
pub struct Cli {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute lambda(G, H) by brute force, by the closed form, or both.
    Lambda(LambdaArgs),
    /// Structural summary of a group.
    Analyze {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite over the catalog sweep.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 48)]
        max_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Count or list Hom(G, H).
    Homs {
        g: String,
        h: String,
        #[arg(long, conflicts_with = "list", required_unless_present = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct LambdaArgs {
    g: String,
    h: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    #[arg(long)]
    json: bool,
    /// Neither read nor write the result cache.
    #[arg(long)]
    no_cache: bool,
    /// Record per-phase timings (bypasses the cache).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Brute,
    Formula,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Formula => Method::Formula,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Props,
    Theorem,
    Simple,
    Structure,
    Burnside,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Props => Suite::Props,
            SuiteArg::Theorem => Suite::Theorem,
            SuiteArg::Simple => Suite::Simple,
            SuiteArg::Structure => Suite::Structure,
            SuiteArg::Burnside => Suite::Burnside,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ClosureCapExceeded { .. }
        | Error::CapExceeded { .. }
        | Error::SearchCapExceeded { .. } => EXIT_CAP,
        Error::TrivialCodomain => EXIT_TRIVIAL_CODOMAIN,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    pool.install(|| match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    })
}

fn dispatch(
    command: Command,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32, Error> {
    match command {
        Command::Lambda(args) => cmd_lambda(args, out, err),
        Command::Analyze { group, json } => {
            let g = parse_group_spec(&group)?;
            let report = GroupAnalysis::compute(&g.label, &g.group);
            emit(out, json, &report, || report.to_text());
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_order,
            seed,
            json,
        } => {
            let summary = verify::run_suite(suite.into(), SuiteConfig { max_order, seed });
            emit(out, json, &summary, || summary.to_text());
            Ok(if summary.is_success() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            })
        }
        Command::Homs {
            g,
            h,
            count: _,
            list,
            json,
        } => {
            let (g, h) = (parse_group_spec(&g)?, parse_group_spec(&h)?);
            let homs = homspace::enumerate_homomorphisms(&g.group, &h.group)?;
            if json {
                let mut doc = serde_json::json!({ "count": homs.len() });
                if list {
                    doc["homomorphisms"] =
                        homs.iter().map(|f| f.images()).collect::<Vec<_>>().into();
                }
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            } else if list {
                for f in &homs {
                    let imgs: Vec<String> = f.images().iter().map(|x| x.to_string()).collect();
                    let _ = writeln!(out, "[{}]", imgs.join(", "));
                }
            } else {
                let _ = writeln!(out, "{}", homs.len());
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit<T: serde::Serialize>(
    out: &mut (dyn Write + Send),
    json: bool,
    value: &T,
    text: impl FnOnce() -> String,
) {
    let _ = if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        )
    } else {
        write!(out, "{}", text())
    };
}

fn cmd_lambda(
    args: LambdaArgs,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32, Error> {
    let g = parse_group_spec(&args.g)?;
    let h = parse_group_spec(&args.h)?;
    if h.group.is_trivial() {
        return Err(Error::TrivialCodomain);
    }
    let method: Method = args.method.into();
    let cache = (!args.no_cache && !args.timings)
        .then(Cache::from_env)
        .flatten();
    let key = Cache::key(&g.canonical, &h.canonical, method);

    let cached = cache.as_ref().and_then(|c| c.load(&key));
    let report = match cached {
        Some(mut r) => {
            r.g_spec = g.label.clone();
            r.h_spec = h.label.clone();
            r
        }
        None => {
            let r = compute(&g, &h, method, args.timings)?;
            if let Some(c) = &cache {
                if let Err(e) = c.store(&key, &r) {
                    let _ = writeln!(err, "warning: could not write cache entry: {e}");
                }
            }
            r
        }
    };

    if let Some(v) = &report.formula_verdict {
        if !v.applicable && args.json {
            let _ = writeln!(
                err,
                "warning: G is not solvable and H is not nilpotent; the formula value is advisory only"
            );
        }
    }
    emit(out, args.json, &report, || report.to_text());
    if report.discrepancy {
        let _ = writeln!(err, "error: brute force and formula disagree");
        return Ok(EXIT_DISCREPANCY);
    }
    Ok(EXIT_OK)
}

fn compute(
    g: &ResolvedGroup,
    h: &ResolvedGroup,
    method: Method,
    timings: bool,
) -> Result<AnalysisReport, Error> {
    AnalysisReport::compute(&g.label, &g.group, &h.label, &h.group, method, timings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::TrivialCodomain), EXIT_TRIVIAL_CODOMAIN);
        assert_eq!(
            exit_code(&Error::SearchCapExceeded {
                candidates: 2,
                cap: 1
            }),
            EXIT_CAP
        );
        assert_eq!(exit_code(&Error::ClosureCapExceeded { cap: 1 }), EXIT_CAP);
        assert_eq!(exit_code(&Error::UnknownSpec("X".into())), EXIT_USAGE);
    }

    #[test]
    fn run_writes_to_the_given_streams() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            ["homcode", "homs", "C4", "C2", "--count"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_OK);
        assert_eq!(String::from_utf8(out).unwrap(), "2\n");

        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            ["homcode", "lambda", "C4", "C1", "--no-cache"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_TRIVIAL_CODOMAIN);
        assert!(String::from_utf8(err).unwrap().contains("trivial"));
    }
}
