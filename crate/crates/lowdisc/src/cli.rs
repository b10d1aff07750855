//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards `std::env::args_os` and exits with its status.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use lowdisc_core::diophantine::{
    b_statistic, cf_rational, cf_surd, fold_convergent, largest_pq_2k_sqrt2, littlewood_scan,
    moser_report, schmidt_count, zaremba_report, ContinuedFraction, Phi, ScanReport,
};
use lowdisc_core::discrepancy::WorkBudget;
use lowdisc_core::generators::{stream, UnitPoint};
use serde_json::json;

use crate::disc::{compute, parse_kind, Algo};
use crate::error::{Error, Result};
use crate::experiment::{parse_plan, preset, read_fit_rows, run_scaling, write_table};
use crate::fit::fit_exponent;
use crate::format::{disc_json, read_points, write_points, NumberStyle};
use crate::lattice_scan::{lattice_scan, ScanMode};
use crate::syntax::{parse_rational, parse_real, parse_spec, DEFAULT_WIDTH};

#[derive(Parser, Debug)]
#[command(name = "lowdisc", version, about = "Low-discrepancy sequences, exact discrepancy and continued-fraction scans")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    /// Print numbers as decimals truncated to this many digits instead of p/q.
    #[arg(long, value_name = "DIGITS", global = true)]
    decimal: Option<u32>,
}

impl Output {
    fn style(self) -> NumberStyle {
        self.decimal.map_or(NumberStyle::Exact, NumberStyle::Decimal)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit points of a sequence.
    Gen {
        /// Spec text, or a file containing it.
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 0)]
        start: u64,
        #[arg(long)]
        count: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Discrepancy of a point file or of a sequence prefix.
    Disc {
        #[arg(long, default_value = "star")]
        kind: String,
        #[arg(long, default_value = "auto")]
        algo: String,
        /// Bracket resolution.
        #[arg(long, default_value_t = 256)]
        k: u32,
        /// Point file ("-" for stdin).
        #[arg(long = "in", conflicts_with = "spec")]
        input: Option<PathBuf>,
        #[arg(long, requires = "count")]
        spec: Option<String>,
        #[arg(long)]
        count: Option<u64>,
        #[arg(long, default_value_t = WorkBudget::DEFAULT.max_work)]
        budget: u128,
        #[command(flatten)]
        output: Output,
    },
    /// Distribution of the star discrepancy over lattice generating vectors.
    ScanLattice {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        d: usize,
        /// exhaustive or sample.
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Sample size.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = WorkBudget::DEFAULT.max_work)]
        budget: u128,
        #[command(flatten)]
        output: Output,
    },
    /// Continued fractions.
    Cfrac {
        /// a/N.
        #[arg(long, group = "what")]
        rational: Option<String>,
        /// sqrt(D).
        #[arg(long, group = "what")]
        surd: Option<u128>,
        /// Largest partial quotient of 2^K sqrt(2).
        #[arg(long, group = "what")]
        a2k: Option<u32>,
        /// Running maximum of the above over 0..=L.
        #[arg(long, group = "what")]
        bl: Option<u32>,
    },
    /// Smallest attainable largest partial quotient of a/N, per N.
    Zaremba {
        #[arg(long, default_value_t = 2)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Smallest attainable partial quotient sum of a/N, per N.
    Moser {
        #[arg(long, default_value_t = 2)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Lattice counting against a threshold function.
    Schmidt {
        #[arg(long)]
        h: u64,
        /// Comma-separated generators.
        #[arg(long, value_delimiter = ',')]
        gens: Vec<u64>,
        #[arg(long = "N")]
        n: u64,
        /// const:C or product:C.
        #[arg(long)]
        phi: String,
        #[command(flatten)]
        output: Output,
    },
    /// Minimum of n ||n a|| ||n b|| over 1 <= n <= nmax.
    Littlewood {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        nmax: u64,
        /// Fixed-point width for irrational parameters.
        #[arg(long, default_value_t = DEFAULT_WIDTH)]
        width: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Run a scaling experiment.
    Experiment {
        #[arg(long, group = "source", required = true)]
        preset: Option<String>,
        #[arg(long, group = "source")]
        plan: Option<PathBuf>,
        /// Parameter of the op12-digitsum-alpha preset.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Fit the log exponent of an experiment table.
    Fit {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn spec_text(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if !arg.contains('(') && path.is_file() {
        let text = fs::read_to_string(path)?;
        let body: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        return Ok(body.join(" "));
    }
    Ok(arg.to_string())
}

fn with_sink(out: &Option<PathBuf>, stdout: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match out {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            f(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

fn print_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))?;
    Ok(())
}

fn scan_csv(out: &mut dyn Write, report: &ScanReport, column: &str) -> Result<()> {
    writeln!(out, "N,{column},witness")?;
    for r in &report.rows {
        writeln!(out, "{},{},{}", r.n, r.value, r.witness)?;
    }
    if let Some(e) = report.extremal {
        writeln!(out, "# max: N={} {column}={} witness={}", e.n, e.value, e.witness)?;
    }
    Ok(())
}

fn cf_text(cf: &ContinuedFraction) -> String {
    match cf {
        ContinuedFraction::Rational { quotients } => {
            let tail: Vec<String> = quotients[1..].iter().map(u64::to_string).collect();
            if tail.is_empty() {
                format!("[{}]", quotients[0])
            } else {
                format!("[{}; {}]", quotients[0], tail.join(", "))
            }
        }
        ContinuedFraction::Surd { preperiod, period, .. } => {
            let pre: Vec<String> = preperiod[1..].iter().map(u128::to_string).collect();
            let per: Vec<String> = period.iter().map(u128::to_string).collect();
            let mut parts = pre;
            parts.push(format!("({})", per.join(", ")));
            format!("[{}; {}]", preperiod[0], parts.join(", "))
        }
    }
}

fn parse_phi(s: &str) -> Result<Phi> {
    let bad = || Error::Invalid(format!("bad --phi {s:?}; use const:C or product:C"));
    let (kind, c) = s.split_once(':').ok_or_else(bad)?;
    let c = parse_rational(c)?;
    match kind {
        "const" => Ok(Phi::Constant(c)),
        "product" => Ok(Phi::Product(c)),
        _ => Err(bad()),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Gen { spec, start, count, out: path, output } => {
            let spec = parse_spec(&spec_text(&spec)?)?;
            if start.checked_add(count).is_none() {
                return Err(Error::Invalid("start + count overflows".into()));
            }
            let set = stream(&spec, start, count)?;
            with_sink(&path, out, |w| write_points(w, &set, output.style()))
        }
        Command::Disc { kind, algo, k, input, spec, count, budget, output } => {
            let kind = parse_kind(&kind)?;
            let algo: Algo = algo.parse()?;
            let points: Vec<UnitPoint> = match (input, spec) {
                (Some(path), None) if path.as_os_str() == "-" => read_points(io::stdin().lock())?,
                (Some(path), None) => read_points(BufReader::new(fs::File::open(path)?))?,
                (None, Some(spec)) => {
                    let spec = parse_spec(&spec_text(&spec)?)?;
                    stream(&spec, 0, count.expect("required by clap"))?.into_points()
                }
                _ => return Err(Error::Invalid("disc needs --in FILE or --spec SPEC --count N".into())),
            };
            let r = compute(&points, kind, algo, k, &WorkBudget { max_work: budget })?;
            print_json(out, &disc_json(&r, output.style()))
        }
        Command::ScanLattice { n, d, mode, count, seed, budget, output } => {
            let mode = match mode.as_str() {
                "exhaustive" => ScanMode::Exhaustive,
                "sample" => ScanMode::Sample { count, seed },
                other => return Err(Error::Invalid(format!("unknown scan mode {other:?} (exhaustive|sample)"))),
            };
            let scan = lattice_scan(n, d, mode, &WorkBudget { max_work: budget })?;
            print_json(out, &scan.to_json(output.style()))
        }
        Command::Cfrac { rational, surd, a2k, bl } => {
            if let Some(r) = rational {
                let (a, n) = r
                    .split_once('/')
                    .and_then(|(a, n)| Some((a.trim().parse::<u64>().ok()?, n.trim().parse::<u64>().ok()?)))
                    .ok_or_else(|| Error::Invalid(format!("bad --rational {r:?}; use a/N")))?;
                let cf = cf_rational(a, n)?;
                let ContinuedFraction::Rational { quotients } = &cf else { unreachable!() };
                let (p, q) = fold_convergent(quotients.iter().map(|&x| u128::from(x)));
                writeln!(out, "{a}/{n} = {}", cf_text(&cf))?;
                writeln!(out, "convergent: {p}/{q}")?;
                writeln!(out, "max partial quotient: {}", cf.max_partial_quotient())?;
            } else if let Some(d) = surd {
                let cf = cf_surd(d)?;
                writeln!(out, "sqrt({d}) = {}", cf_text(&cf))?;
                writeln!(out, "max partial quotient: {}", cf.max_partial_quotient())?;
            } else if let Some(k) = a2k {
                writeln!(out, "A_{k} = {}", largest_pq_2k_sqrt2(k)?)?;
            } else if let Some(l) = bl {
                writeln!(out, "B_{l} = {}", b_statistic(l)?)?;
            } else {
                return Err(Error::Invalid("cfrac needs one of --rational, --surd, --a2k, --bl".into()));
            }
            Ok(())
        }
        Command::Zaremba { from, to } => scan_csv(out, &zaremba_report(from..=to)?, "max_partial_quotient"),
        Command::Moser { from, to } => scan_csv(out, &moser_report(from..=to)?, "quotient_sum"),
        Command::Schmidt { h, gens, n, phi, output } => {
            let r = schmidt_count(h, &gens, n, &parse_phi(&phi)?)?;
            let s = output.style();
            print_json(
                out,
                &json!({
                    "count": r.count,
                    "main_term": s.render(&r.main_term),
                    "residual": s.render(&r.residual),
                }),
            )
        }
        Command::Littlewood { alpha, beta, nmax, width, output } => {
            let r = littlewood_scan(&parse_real(&alpha, width)?, &parse_real(&beta, width)?, nmax)?;
            let s = output.style();
            print_json(
                out,
                &json!({
                    "min": s.render(&r.min),
                    "argmin": r.argmin,
                    "error_bound": s.render(&r.error_bound),
                }),
            )
        }
        Command::Experiment { preset: name, plan, alpha, out: path, output } => {
            let plan = match (name, plan) {
                (Some(name), None) => preset(&name, alpha.as_deref())?,
                (None, Some(file)) => parse_plan(&fs::read_to_string(file)?)?,
                _ => return Err(Error::Invalid("experiment needs --preset or --plan".into())),
            };
            let rows = run_scaling(&plan)?;
            with_sink(&path, out, |w| write_table(w, &plan, &rows, output.style()))
        }
        Command::Fit { input } => {
            let rows = read_fit_rows(fs::File::open(input)?)?;
            let f = fit_exponent(&rows)?;
            print_json(
                out,
                &json!({
                    "exponent": f.exponent,
                    "intercept": f.intercept,
                    "residual": f.residual,
                    "samples": f.samples,
                }),
            )
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit status: 0 success, 2 validation error, 3 budget exceeded.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("lowdisc").chain(args.iter().copied()), &mut out, &mut err);
        assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
        String::from_utf8(out).unwrap()
    }

    fn run_code(args: &[&str]) -> i32 {
        run(std::iter::once("lowdisc").chain(args.iter().copied()), &mut Vec::new(), &mut Vec::new())
    }

    #[test]
    fn cfrac_outputs() {
        assert!(run_ok(&["cfrac", "--surd", "32"]).starts_with("sqrt(32) = [5; (1, 1, 1, 10)]\n"));
        assert!(run_ok(&["cfrac", "--rational", "5/8"]).contains("[0; 1, 1, 1, 2]"));
        assert_eq!(run_ok(&["cfrac", "--a2k", "2"]), "A_2 = 10\n");
        assert_eq!(run_ok(&["cfrac", "--bl", "2"]), "B_2 = 10\n");
    }

    #[test]
    fn schmidt_and_littlewood() {
        let s = run_ok(&["schmidt", "--h", "2", "--gens", "1", "--N", "5", "--phi", "const:1/2"]);
        assert!(s.contains("\"count\": 3") && s.contains("\"residual\": \"1/2\""), "{s}");
        let l = run_ok(&["littlewood", "--alpha", "1/2", "--beta", "1/2", "--nmax", "10"]);
        assert!(l.contains("\"argmin\": 2") && l.contains("\"min\": \"0\""), "{l}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_code(&["gen", "--spec", "halton(2, 4)", "--count", "3"]), 2);
        assert_eq!(run_code(&["bogus"]), 2);
        assert_eq!(run_code(&["disc", "--spec", "halton(2, 3)", "--count", "64", "--algo", "grid", "--budget", "10"]), 3);
        assert_eq!(run_code(&["experiment", "--preset", "nope"]), 2);
        assert_eq!(run_code(&["--help"]), 0);
    }

    #[test]
    fn gen_then_disc() {
        let dir = tempfile::tempdir().unwrap();
        let pts = dir.path().join("pts.txt");
        run_ok(&["gen", "--spec", "hammersley(N=4; 2)", "--count", "4", "--out", pts.to_str().unwrap()]);
        let text = fs::read_to_string(&pts).unwrap();
        assert!(text.contains("1/4\t1/2"));
        let j = run_ok(&["disc", "--in", pts.to_str().unwrap(), "--algo", "grid"]);
        let via_spec = run_ok(&["disc", "--spec", "hammersley(N=4; 2)", "--count", "4", "--algo", "2d"]);
        assert_eq!(j, via_spec);
    }
}
