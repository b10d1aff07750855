//! Scaling studies: discrepancy along a schedule of point counts.

use std::io::{Read, Write};

use lowdisc_core::algebra::{BigRational, FixedPointReal, GenMatrix, Prime};
use lowdisc_core::discrepancy::{DiscKind, DiscrepancyResult, WorkBudget};
use lowdisc_core::generators::{default_digital_precision, point_at, SequenceSpec, UnitPoint};
use num_integer::Roots;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::disc::{compute, parse_kind, Algo};
use crate::error::{Error, Result};
use crate::fit::FitRow;
use crate::format::{kind_name, mode_name, parse_number, NumberStyle};
use crate::syntax::{format_spec, parse_fixed, parse_spec};

/// What is measured at each `N`.
#[derive(Clone, Debug, PartialEq)]
pub enum PlanSpec {
    /// The first `N` points of one sequence.
    Sequence(SequenceSpec),
    /// For each `N`: the `N`-point Hammersley set in `bases` joined with the
    /// one-dimensional lattice `{n g / N}`, `g = round(N (sqrt(5) - 1) / 2)`.
    HammersleyLattice { bases: Vec<u64> },
}

impl PlanSpec {
    /// The concrete spec evaluated at point count `n`.
    pub fn at(&self, n: u64) -> SequenceSpec {
        match self {
            PlanSpec::Sequence(s) => s.clone(),
            PlanSpec::HammersleyLattice { bases } => SequenceSpec::hybrid(
                SequenceSpec::Hammersley { n, bases: bases.clone() },
                SequenceSpec::Lattice { n, gens: vec![golden_generator(n)] },
            ),
        }
    }

    fn describe(&self) -> String {
        match self {
            PlanSpec::Sequence(s) => format_spec(s),
            PlanSpec::HammersleyLattice { bases } => format!(
                "hammersley-lattice({})",
                bases.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

/// `round(n (sqrt(5) - 1) / 2) = floor((floor(n sqrt 5) - n + 1) / 2)`.
pub fn golden_generator(n: u64) -> u64 {
    let root = (5 * u128::from(n) * u128::from(n)).sqrt();
    ((root + 1 - u128::from(n)) / 2) as u64 % n.max(1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentPlan {
    pub name: String,
    pub spec: PlanSpec,
    /// Strictly increasing point counts.
    pub schedule: Vec<u64>,
    pub kind: DiscKind,
    pub algo: Algo,
    /// Exponent `p` of the normalized column `N D / (ln N)^p`.
    pub p: f64,
    /// Bracket resolution for the bracket algorithm and its fallback.
    pub resolution: u32,
    pub budget: WorkBudget,
}

impl ExperimentPlan {
    pub fn new(name: &str, spec: PlanSpec, schedule: Vec<u64>, p: f64) -> Self {
        ExperimentPlan {
            name: name.into(),
            spec,
            schedule,
            kind: DiscKind::Star,
            algo: Algo::Auto,
            p,
            resolution: 256,
            budget: WorkBudget::DEFAULT,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.schedule.is_empty() {
            return Err(Error::Invalid("schedule is empty".into()));
        }
        if self.schedule[0] == 0 || self.schedule.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("schedule must be positive and strictly increasing".into()));
        }
        if !(self.p.is_finite() && self.p >= 0.0) {
            return Err(Error::Invalid(format!("normalization exponent must be >= 0, got {}", self.p)));
        }
        match &self.spec {
            PlanSpec::Sequence(s) => s.validate()?,
            PlanSpec::HammersleyLattice { bases } => {
                for &n in &self.schedule {
                    if n < 2 || bases.contains(&n) {
                        return Err(Error::Invalid(format!(
                            "hammersley-lattice needs N >= 2 distinct from the bases, got {n}"
                        )));
                    }
                    self.spec.at(n).validate()?;
                }
            }
        }
        Ok(())
    }
}

/// `base^from, ..., base^to`.
pub fn geometric(base: u64, from: u32, to: u32) -> Result<Vec<u64>> {
    (from..=to)
        .map(|e| base.checked_pow(e).ok_or_else(|| Error::Invalid("schedule overflows u64".into())))
        .collect()
}

pub const PRESETS: &[&str] = &[
    "op9-vdc-sqrt2",
    "op12-digitsum-alpha",
    "halton-2-3",
    "c1-counterexample",
    "hammersley-lattice",
    "power-3-2",
];

/// A named plan. `alpha` is the parameter of `op12-digitsum-alpha`
/// (default `sqrt(2)`); other presets ignore it.
pub fn preset(name: &str, alpha: Option<&str>) -> Result<ExperimentPlan> {
    let seq = PlanSpec::Sequence;
    let plan = match name {
        "op9-vdc-sqrt2" => ExperimentPlan::new(
            name,
            seq(SequenceSpec::hybrid(
                SequenceSpec::van_der_corput(2),
                SequenceSpec::Kronecker { alphas: vec![FixedPointReal::quadratic(0, 1, 2, 1, 192)] },
            )),
            geometric(2, 4, 12)?,
            2.0,
        ),
        "op12-digitsum-alpha" => {
            let alpha = parse_fixed(alpha.unwrap_or("sqrt(2)"), 128)?;
            ExperimentPlan::new(
                name,
                seq(SequenceSpec::digit_sum_filtered(SequenceSpec::Kronecker { alphas: vec![alpha] })),
                geometric(2, 4, 16)?,
                1.0,
            )
        }
        "halton-2-3" => ExperimentPlan::new(
            name,
            seq(SequenceSpec::Halton { bases: vec![2, 3] }),
            geometric(2, 4, 12)?,
            2.0,
        ),
        "c1-counterexample" => {
            let schedule = geometric(6, 1, 6)?;
            let n_max = *schedule.last().expect("nonempty");
            let q3 = Prime::new(3)?;
            let q2 = Prime::new(2)?;
            let mut plan = ExperimentPlan::new(
                name,
                seq(SequenceSpec::hybrid(
                    SequenceSpec::Digital {
                        q: q3,
                        matrices: vec![GenMatrix::all_ones_first_row(q3)],
                        precision: default_digital_precision(q3.get(), n_max),
                    },
                    SequenceSpec::Digital {
                        q: q2,
                        matrices: vec![GenMatrix::identity(q2)],
                        precision: default_digital_precision(q2.get(), n_max),
                    },
                )),
                schedule,
                2.0,
            );
            plan.algo = Algo::Bracket;
            plan.resolution = 512;
            plan
        }
        "hammersley-lattice" => ExperimentPlan::new(
            name,
            PlanSpec::HammersleyLattice { bases: vec![2] },
            vec![5, 11, 23, 47, 97, 197],
            2.0,
        ),
        "power-3-2" => ExperimentPlan::new(
            name,
            seq(SequenceSpec::PowerRatio { p: 3, r: 2 }),
            geometric(2, 4, 10)?,
            1.0,
        ),
        _ => {
            return Err(Error::Invalid(format!(
                "unknown preset {name:?}; available: {}",
                PRESETS.join(", ")
            )))
        }
    };
    plan.validate()?;
    Ok(plan)
}

fn parse_schedule(v: &str) -> Result<Vec<u64>> {
    let v = v.trim();
    if let Some(args) = v.strip_prefix("geometric(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        let bad = || Error::Invalid(format!("bad schedule {v:?}; use geometric(base, from, to)"));
        if parts.len() != 3 {
            return Err(bad());
        }
        return geometric(
            parts[0].parse().map_err(|_| bad())?,
            parts[1].parse().map_err(|_| bad())?,
            parts[2].parse().map_err(|_| bad())?,
        );
    }
    v.split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Invalid(format!("bad schedule entry {s:?}"))))
        .collect()
}

/// Reads a plan from `key = value` lines (`#` starts a comment).
///
/// Keys: `spec` or `template` (`hammersley-lattice(b, ...)`), `schedule`
/// (`16, 32, 64` or `geometric(2, 4, 12)`), `kind`, `algo`, `p`,
/// `resolution`, `budget`, `name`.
pub fn parse_plan(text: &str) -> Result<ExperimentPlan> {
    let mut plan = ExperimentPlan::new("plan", PlanSpec::Sequence(SequenceSpec::van_der_corput(2)), vec![], 1.0);
    let mut have_spec = false;
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Invalid(format!("plan line {}: expected key = value", i + 1)))?;
        let value = value.trim();
        let num_err = |what: &str| Error::Invalid(format!("plan line {}: bad {what} {value:?}", i + 1));
        match key.trim() {
            "name" => plan.name = value.into(),
            "spec" => {
                plan.spec = PlanSpec::Sequence(parse_spec(value)?);
                have_spec = true;
            }
            "template" => {
                let args = value
                    .strip_prefix("hammersley-lattice(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| num_err("template"))?;
                let bases = args
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.trim().parse().map_err(|_| num_err("template base")))
                    .collect::<Result<_>>()?;
                plan.spec = PlanSpec::HammersleyLattice { bases };
                have_spec = true;
            }
            "schedule" => plan.schedule = parse_schedule(value)?,
            "kind" => plan.kind = parse_kind(value)?,
            "algo" => plan.algo = value.parse()?,
            "p" => plan.p = value.parse().map_err(|_| num_err("exponent"))?,
            "resolution" => plan.resolution = value.parse().map_err(|_| num_err("resolution"))?,
            "budget" => plan.budget.max_work = value.parse().map_err(|_| num_err("budget"))?,
            other => return Err(Error::Invalid(format!("plan line {}: unknown key {other:?}", i + 1))),
        }
    }
    if !have_spec {
        return Err(Error::Invalid("plan needs a spec or template line".into()));
    }
    plan.validate()?;
    Ok(plan)
}

/// One schedule entry: the discrepancy at `n` or the reason it failed.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalingRow {
    pub n: u64,
    pub result: std::result::Result<DiscrepancyResult, String>,
    /// `N D / (ln N)^p` at the midpoint, when defined.
    pub normalized: Option<f64>,
}

fn normalized(n: u64, d: &BigRational, p: f64) -> Option<f64> {
    let ln = (n as f64).ln();
    if p > 0.0 && ln <= 0.0 {
        return None;
    }
    Some(n as f64 * d.to_f64()? / ln.powf(p))
}

fn points_for(spec: &SequenceSpec, n: u64) -> lowdisc_core::Result<Vec<UnitPoint>> {
    (0..n).map(|i| point_at(spec, i)).collect()
}

/// Evaluates every schedule entry (concurrently; output is in schedule order).
pub fn run_scaling(plan: &ExperimentPlan) -> Result<Vec<ScalingRow>> {
    plan.validate()?;
    // A fixed sequence is generated once, up to the largest N that succeeds.
    let shared: Option<(Vec<UnitPoint>, Option<String>)> = match &plan.spec {
        PlanSpec::Sequence(spec) => {
            let n_max = *plan.schedule.last().expect("validated");
            let mut pts = Vec::new();
            let mut failure = None;
            for i in 0..n_max {
                match point_at(spec, i) {
                    Ok(p) => pts.push(p),
                    Err(e) => {
                        failure = Some(e.to_string());
                        break;
                    }
                }
            }
            Some((pts, failure))
        }
        PlanSpec::HammersleyLattice { .. } => None,
    };
    let rows = plan
        .schedule
        .par_iter()
        .map(|&n| {
            let result = match &shared {
                Some((pts, failure)) if (pts.len() as u64) < n => {
                    Err(failure.clone().unwrap_or_else(|| "sequence too short".into()))
                }
                Some((pts, _)) => compute(&pts[..n as usize], plan.kind, plan.algo, plan.resolution, &plan.budget)
                    .map_err(|e| e.to_string()),
                None => points_for(&plan.spec.at(n), n)
                    .map_err(Error::from)
                    .and_then(|pts| compute(&pts, plan.kind, plan.algo, plan.resolution, &plan.budget))
                    .map_err(|e| e.to_string()),
            };
            let norm = result.as_ref().ok().and_then(|r| normalized(n, &r.midpoint(), plan.p));
            ScalingRow { n, result, normalized: norm }
        })
        .collect();
    Ok(rows)
}

pub const CSV_HEADER: [&str; 7] = ["N", "mode", "D", "D_lo", "D_hi", "normalized", "error"];

/// Writes a scaling table as CSV preceded by `#` comment lines describing
/// the plan.
pub fn write_table<W: Write + ?Sized>(out: &mut W, plan: &ExperimentPlan, rows: &[ScalingRow], style: NumberStyle) -> Result<()> {
    writeln!(out, "# plan: {}", plan.name)?;
    writeln!(out, "# spec: {}", plan.spec.describe())?;
    writeln!(
        out,
        "# kind: {}, algo: {:?}, p: {}, resolution: {}",
        kind_name(plan.kind),
        plan.algo,
        plan.p,
        plan.resolution
    )?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        let n = row.n.to_string();
        let norm = row.normalized.map(|v| format!("{v:.12}")).unwrap_or_default();
        match &row.result {
            Ok(r) => {
                let exact = r.exact().map(|v| style.render(v)).unwrap_or_default();
                w.write_record([
                    n.as_str(),
                    mode_name(r.mode),
                    &exact,
                    &style.render(r.lo()),
                    &style.render(r.hi()),
                    &norm,
                    "",
                ])?;
            }
            Err(e) => w.write_record([n.as_str(), "failed", "", "", "", "", e.as_str()])?,
        }
    }
    w.flush()?;
    Ok(())
}

/// Reads rows for [`crate::fit::fit_exponent`] from a table written by
/// [`write_table`]. A bracket `[lo, hi]` contributes its midpoint `m` with
/// weight `m / (m + h)`, `h` the half-width; failed rows are skipped.
pub fn read_fit_rows<R: Read>(input: R) -> Result<Vec<FitRow>> {
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
    let headers = reader.headers()?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Invalid(format!("table has no {name} column")))
    };
    let (cn, clo, chi) = (col("N")?, col("D_lo")?, col("D_hi")?);
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec?;
        let (lo, hi) = (&rec[clo], &rec[chi]);
        if lo.is_empty() || hi.is_empty() {
            continue;
        }
        let n: u64 = rec[cn].parse().map_err(|_| Error::Invalid(format!("bad N {:?}", &rec[cn])))?;
        let lo = parse_number(lo)?.to_f64().unwrap_or(f64::NAN);
        let hi = parse_number(hi)?.to_f64().unwrap_or(f64::NAN);
        let mid = (lo + hi) / 2.0;
        let half = (hi - lo) / 2.0;
        let weight = if half > 0.0 { mid / (mid + half) } else { 1.0 };
        rows.push(FitRow { n, d: mid, weight });
    }
    Ok(rows)
}
