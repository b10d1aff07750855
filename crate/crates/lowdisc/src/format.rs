//! Text formats: point files, discrepancy JSON, number rendering.

use std::io::{BufRead, Write};

use lowdisc_core::algebra::BigRational;
use lowdisc_core::discrepancy::{DiscKind, DiscValue, DiscrepancyResult, Mode};
use lowdisc_core::generators::{PointSet, Repr, UnitPoint};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::error::{parse_err, Result};
use crate::syntax::{format_rational, format_spec, parse_rational};

/// How numbers are rendered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NumberStyle {
    /// Exact `p/q`.
    #[default]
    Exact,
    /// Decimal truncated toward zero to this many fractional digits.
    Decimal(u32),
}

impl NumberStyle {
    pub fn render(self, x: &BigRational) -> String {
        match self {
            NumberStyle::Exact => format_rational(x),
            NumberStyle::Decimal(digits) => format_decimal(x, digits),
        }
    }
}

/// `x` truncated toward zero to `digits` fractional digits.
pub fn format_decimal(x: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (x.numer().abs() * &scale) / x.denom();
    let (int, frac) = scaled.div_rem(&scale);
    let sign = if x.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits as usize)
}

/// Parses `p/q`, an integer, or a finite decimal, exactly.
pub fn parse_number(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let Some((int, frac)) = s.split_once('.') else {
        return parse_rational(s);
    };
    let bad = || parse_err(format!("bad decimal {s:?}"));
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let negative = int.starts_with('-');
    let whole: BigInt = if int.is_empty() || int == "-" {
        BigInt::zero()
    } else {
        int.parse().map_err(|_| bad())?
    };
    let scale = BigInt::from(10u32).pow(frac.len() as u32);
    let frac: BigInt = frac.parse().map_err(|_| bad())?;
    let magnitude = whole.abs() * &scale + frac;
    let numer = if negative { -magnitude } else { magnitude };
    Ok(BigRational::new(numer, scale))
}

fn repr_text(repr: Option<Repr>) -> String {
    match repr {
        Some(Repr::Exact) | None => "exact".into(),
        Some(Repr::FixedPoint { width, coerced }) => {
            format!("fixed W={width}{}", if coerced { " coerced" } else { "" })
        }
    }
}

/// Writes a point file: `#` header lines, then one tab-separated point per
/// line.
pub fn write_points<W: Write + ?Sized>(out: &mut W, set: &PointSet, style: NumberStyle) -> Result<()> {
    writeln!(out, "# lowdisc points")?;
    if let Some(spec) = set.spec() {
        writeln!(out, "# spec: {}", format_spec(spec))?;
    }
    writeln!(out, "# start: {}", set.start())?;
    writeln!(out, "# count: {}", set.count())?;
    writeln!(out, "# repr: {}", repr_text(set.repr()))?;
    for p in set.points() {
        let line = p
            .to_rationals()
            .iter()
            .map(|c| style.render(c))
            .collect::<Vec<_>>()
            .join("\t");
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Reads a point file (or any whitespace-separated table of coordinates) as
/// exact points. Lines starting with `#` and blank lines are skipped.
pub fn read_points<R: BufRead>(input: R) -> Result<Vec<UnitPoint>> {
    let mut points = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let coords = line
            .split_whitespace()
            .map(parse_number)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| parse_err(format!("line {}: {e}", i + 1)))?;
        points.push(UnitPoint::exact(coords)?);
    }
    Ok(points)
}

pub fn kind_name(kind: DiscKind) -> &'static str {
    match kind {
        DiscKind::Star => "star",
        DiscKind::Extreme => "extreme",
    }
}

pub fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Exact => "exact",
        Mode::ExactForRepresented { .. } => "exact-for-represented",
        Mode::Bracketed { .. } => "bracketed",
    }
}

/// JSON object describing a discrepancy result.
pub fn disc_json(r: &DiscrepancyResult, style: NumberStyle) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(kind_name(r.kind)));
    obj.insert("mode".into(), json!(mode_name(r.mode)));
    match r.mode {
        Mode::ExactForRepresented { width } => {
            obj.insert("width".into(), json!(width));
        }
        Mode::Bracketed { resolution } => {
            obj.insert("resolution".into(), json!(resolution));
        }
        Mode::Exact => {}
    }
    obj.insert("N".into(), json!(r.n));
    obj.insert("d".into(), json!(r.d));
    match &r.value {
        DiscValue::Exact(v) => {
            obj.insert("value".into(), json!(style.render(v)));
        }
        DiscValue::Interval { lo, hi } => {
            obj.insert("lo".into(), json!(style.render(lo)));
            obj.insert("hi".into(), json!(style.render(hi)));
        }
    }
    Value::Object(obj)
}
