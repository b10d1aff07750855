//! Text form of sequence specs.
//!
//! ```text
//! halton(2, 3)                      vdc(2)
//! kronecker(W=128; sqrt(2), 1/4, quad(-1, 1, 5, 2))
//! digital(q=3, L=26; c1, identity, rows[1 0 1|0 1 1])
//! digital(q=2, L=20; random(7), finiterow(8))
//! dkron(q=2, L=20; laurent(1; [1 1 0 1 ...]), rat([1], [1 1 1]))
//! lattice(N=5; 1, 2)                hammersley(N=4; 2)
//! ratnet(q=2, f=[1 1 1]; [1], [0 1])
//! power(3, 2)                       digitsum(kronecker(sqrt(2)))
//! hybrid(vdc(2), kronecker(W=192; sqrt(2)))
//! ```
//!
//! Polynomial and series coefficient lists are written lowest degree (or
//! lowest index) first. A trailing `...` marks a truncated series.
//! `random(seed)` and `finiterow(seed)` draw an `L x L` matrix as in
//! [`crate::sampling`] and print as `rows[...]`. Printing with
//! [`format_spec`] and parsing back yields an equal spec.

use std::fmt::Write as _;

use lowdisc_core::algebra::{
    BigRational, FixedPointReal, GenMatrix, LaurentSeries, Origin, Poly, Prime,
};
use lowdisc_core::diophantine::Real;
use lowdisc_core::generators::{default_digital_precision, SequenceSpec};
use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{parse_err, Result};
use crate::sampling::{random_finite_row_matrix, random_matrix};

/// Fixed-point width used when a spec does not give one.
pub const DEFAULT_WIDTH: u32 = 128;

/// Index range covered by the default digital precision.
const DEFAULT_DIGITAL_RANGE: u64 = 1 << 32;

#[derive(Clone, Debug, PartialEq)]
enum Node {
    Atom(String),
    Call { name: String, sections: Vec<Vec<Node>> },
    List { tag: String, raw: String },
    KeyVal(String, Box<Node>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const DELIMS: &str = "(),;=[]|";

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_err(format!("expected '{c}' at offset {} in {:?}", self.pos, self.src)))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() || DELIMS.contains(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        self.src[start..self.pos].to_string()
    }

    fn item(&mut self) -> Result<Node> {
        let w = self.word();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let sections = self.sections()?;
                self.expect(')')?;
                Ok(Node::Call { name: w, sections })
            }
            Some('[') => {
                self.pos += 1;
                let end = self.src[self.pos..]
                    .find(']')
                    .ok_or_else(|| parse_err("unterminated '['"))?;
                let raw = self.src[self.pos..self.pos + end].to_string();
                self.pos += end + 1;
                Ok(Node::List { tag: w, raw })
            }
            Some('=') if !w.is_empty() => {
                self.pos += 1;
                Ok(Node::KeyVal(w, Box::new(self.item()?)))
            }
            _ if w.is_empty() => Err(parse_err(format!(
                "expected a value at offset {} in {:?}",
                self.pos, self.src
            ))),
            _ => Ok(Node::Atom(w)),
        }
    }

    fn sections(&mut self) -> Result<Vec<Vec<Node>>> {
        let mut sections = vec![Vec::new()];
        if self.peek() == Some(')') {
            return Ok(sections);
        }
        loop {
            sections.last_mut().expect("nonempty").push(self.item()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(';') => {
                    self.pos += 1;
                    sections.push(Vec::new());
                }
                _ => return Ok(sections),
            }
        }
    }
}

fn parse_node(src: &str) -> Result<Node> {
    let mut p = Parser { src, pos: 0 };
    let node = p.item()?;
    if p.peek().is_some() {
        return Err(parse_err(format!("trailing input at offset {} in {src:?}", p.pos)));
    }
    Ok(node)
}

fn int<T: std::str::FromStr>(node: &Node) -> Result<T> {
    match node {
        Node::Atom(s) => s.parse().map_err(|_| parse_err(format!("expected an integer, got {s:?}"))),
        other => Err(parse_err(format!("expected an integer, got {other:?}"))),
    }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || parse_err(format!("expected a rational p/q, got {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn coeff_list(raw: &str) -> Result<(Vec<u64>, bool)> {
    let mut truncated = false;
    let mut out = Vec::new();
    for tok in raw.split_whitespace() {
        if tok == "..." {
            truncated = true;
        } else if truncated {
            return Err(parse_err("'...' must end a coefficient list"));
        } else {
            out.push(tok.parse().map_err(|_| parse_err(format!("bad coefficient {tok:?}")))?);
        }
    }
    Ok((out, truncated))
}

fn poly(node: &Node, q: Prime) -> Result<Poly> {
    match node {
        Node::List { tag, raw } if tag.is_empty() => {
            let (coeffs, truncated) = coeff_list(raw)?;
            if truncated {
                return Err(parse_err("a polynomial cannot be truncated"));
            }
            Ok(Poly::new(q, coeffs)?)
        }
        other => Err(parse_err(format!("expected a polynomial [c0 c1 ...], got {other:?}"))),
    }
}

// Splits `key=value` items of a section off from positional items.
fn split_keys(items: &[Node]) -> (Vec<(&str, &Node)>, Vec<&Node>) {
    let mut keys = Vec::new();
    let mut pos = Vec::new();
    for it in items {
        match it {
            Node::KeyVal(k, v) => keys.push((k.as_str(), v.as_ref())),
            other => pos.push(other),
        }
    }
    (keys, pos)
}

struct Args<'a> {
    name: &'a str,
    keys: Vec<(&'a str, &'a Node)>,
    pos: Vec<&'a Node>,
}

impl<'a> Args<'a> {
    fn new(name: &'a str, sections: &'a [Vec<Node>]) -> Self {
        let mut keys = Vec::new();
        let mut pos = Vec::new();
        for s in sections {
            let (k, p) = split_keys(s);
            keys.extend(k);
            pos.extend(p);
        }
        Args { name, keys, pos }
    }

    fn key(&self, k: &str) -> Option<&'a Node> {
        self.keys.iter().find(|(name, _)| *name == k).map(|(_, v)| *v)
    }

    fn required(&self, k: &str) -> Result<&'a Node> {
        self.key(k).ok_or_else(|| parse_err(format!("{} needs {k}=...", self.name)))
    }

    fn only_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.keys.iter().find(|(k, _)| !allowed.contains(k)) {
            Some((k, _)) => Err(parse_err(format!("{} does not take {k}=", self.name))),
            None => Ok(()),
        }
    }

    fn ints<T: std::str::FromStr>(&self) -> Result<Vec<T>> {
        self.pos.iter().map(|n| int(n)).collect()
    }

    fn exactly(&self, n: usize) -> Result<()> {
        if self.pos.len() == n {
            Ok(())
        } else {
            Err(parse_err(format!("{} takes {n} positional arguments, got {}", self.name, self.pos.len())))
        }
    }
}

fn prime(node: &Node) -> Result<Prime> {
    Ok(Prime::new(int(node)?)?)
}

/// Parses one real parameter (`sqrt(d)`, `quad(a, b, d, c)`, `p/q`, `raw(total)`)
/// at the given fixed-point width.
fn fixed_real(node: &Node, width: u32) -> Result<FixedPointReal> {
    match node {
        Node::Atom(s) => {
            let r = parse_rational(s)?;
            let p: i64 = r.numer().try_into().map_err(|_| parse_err("numerator out of range"))?;
            let q: u64 = r.denom().try_into().map_err(|_| parse_err("denominator out of range"))?;
            Ok(FixedPointReal::from_ratio(p, q, width))
        }
        Node::Call { name, sections } => {
            let args = Args::new(name, sections);
            args.only_keys(&[])?;
            match name.as_str() {
                "sqrt" => {
                    args.exactly(1)?;
                    Ok(FixedPointReal::quadratic(0, 1, int(args.pos[0])?, 1, width))
                }
                "quad" => {
                    args.exactly(4)?;
                    let c: u64 = int(args.pos[3])?;
                    if c == 0 {
                        return Err(parse_err("quad denominator must be positive"));
                    }
                    Ok(FixedPointReal::quadratic(
                        int(args.pos[0])?,
                        int(args.pos[1])?,
                        int(args.pos[2])?,
                        c,
                        width,
                    ))
                }
                "raw" => {
                    let exact = match args.pos.len() {
                        1 => false,
                        2 if args.pos[1] == &Node::Atom("exact".into()) => true,
                        _ => return Err(parse_err("raw takes (total) or (total, exact)")),
                    };
                    let total: BigInt = int(args.pos[0])?;
                    Ok(FixedPointReal::from_scaled(total, width, exact, Origin::Raw))
                }
                other => Err(parse_err(format!("unknown real {other:?}"))),
            }
        }
        other => Err(parse_err(format!("expected a real parameter, got {other:?}"))),
    }
}

/// Parses a real for scans: rationals stay exact, anything else becomes a
/// fixed-point value of the given width.
pub fn parse_real(src: &str, width: u32) -> Result<Real> {
    let node = parse_node(src)?;
    if let Node::Atom(s) = &node {
        return Ok(Real::Exact(parse_rational(s)?));
    }
    Ok(Real::Fixed(fixed_real(&node, width)?))
}

/// Parses a fixed-point real such as `sqrt(2)` or `quad(-1, 1, 5, 2)`.
pub fn parse_fixed(src: &str, width: u32) -> Result<FixedPointReal> {
    fixed_real(&parse_node(src)?, width)
}

fn matrix(node: &Node, q: Prime, depth: usize) -> Result<GenMatrix> {
    match node {
        Node::Call { name, sections } if name == "random" || name == "finiterow" => {
            let args = Args::new(name, sections);
            args.only_keys(&[])?;
            args.exactly(1)?;
            let mut rng = ChaCha8Rng::seed_from_u64(int(args.pos[0])?);
            Ok(if name == "random" {
                random_matrix(q, depth, &mut rng)
            } else {
                random_finite_row_matrix(q, depth, &mut rng)
            })
        }
        Node::Atom(s) if s == "identity" => Ok(GenMatrix::identity(q)),
        Node::Atom(s) if s == "c1" => Ok(GenMatrix::all_ones_first_row(q)),
        Node::List { tag, raw } if tag == "rows" => {
            let rows = raw
                .split('|')
                .map(|r| {
                    let (c, t) = coeff_list(r)?;
                    if t {
                        return Err(parse_err("matrix rows cannot be truncated"));
                    }
                    Ok(c)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(GenMatrix::dense(q, rows)?)
        }
        other => Err(parse_err(format!(
            "expected a matrix (identity, c1, rows[...], random(seed), finiterow(seed)), got {other:?}"
        ))),
    }
}

fn series(node: &Node, q: Prime, precision: u32) -> Result<LaurentSeries> {
    let Node::Call { name, sections } = node else {
        return Err(parse_err(format!("expected laurent(...) or rat(...), got {node:?}")));
    };
    let args = Args::new(name, sections);
    args.only_keys(&[])?;
    match name.as_str() {
        "laurent" => {
            args.exactly(2)?;
            let omega: i64 = int(args.pos[0])?;
            let Node::List { tag, raw } = args.pos[1] else {
                return Err(parse_err("laurent needs a coefficient list"));
            };
            if !tag.is_empty() {
                return Err(parse_err("laurent needs a plain coefficient list"));
            }
            let (coeffs, truncated) = coeff_list(raw)?;
            Ok(if truncated {
                LaurentSeries::new(q, omega, coeffs)?
            } else {
                LaurentSeries::exact(q, omega, coeffs)?
            })
        }
        "rat" => {
            args.exactly(2)?;
            let g = poly(args.pos[0], q)?;
            let f = poly(args.pos[1], q)?;
            // Multiplying by n(x) with n < q^L slides the window down by < L.
            Ok(LaurentSeries::from_rational(&g, &f, 2 * i64::from(precision))?)
        }
        other => Err(parse_err(format!("unknown series form {other:?}"))),
    }
}

fn spec_from_node(node: &Node) -> Result<SequenceSpec> {
    let Node::Call { name, sections } = node else {
        return Err(parse_err(format!("expected a sequence like halton(2, 3), got {node:?}")));
    };
    let args = Args::new(name, sections);
    let spec = match name.as_str() {
        "halton" | "vdc" => {
            args.only_keys(&[])?;
            let bases = args.ints()?;
            if name == "vdc" && bases.len() != 1 {
                return Err(parse_err("vdc takes exactly one base"));
            }
            SequenceSpec::Halton { bases }
        }
        "kronecker" => {
            args.only_keys(&["W"])?;
            let width = args.key("W").map(int).transpose()?.unwrap_or(DEFAULT_WIDTH);
            let alphas = args
                .pos
                .iter()
                .map(|n| fixed_real(n, width))
                .collect::<Result<Vec<_>>>()?;
            SequenceSpec::Kronecker { alphas }
        }
        "digital" | "dkron" => {
            args.only_keys(&["q", "L"])?;
            let q = prime(args.required("q")?)?;
            let precision = match args.key("L") {
                Some(n) => int(n)?,
                None => default_digital_precision(q.get(), DEFAULT_DIGITAL_RANGE),
            };
            if name == "digital" {
                let matrices = args.pos.iter().map(|n| matrix(n, q, precision as usize)).collect::<Result<_>>()?;
                SequenceSpec::Digital { q, matrices, precision }
            } else {
                let series = args
                    .pos
                    .iter()
                    .map(|n| series(n, q, precision))
                    .collect::<Result<_>>()?;
                SequenceSpec::DigitalKronecker { q, series, precision }
            }
        }
        "lattice" | "hammersley" => {
            args.only_keys(&["N"])?;
            let n = int(args.required("N")?)?;
            if name == "lattice" {
                SequenceSpec::Lattice { n, gens: args.ints()? }
            } else {
                SequenceSpec::Hammersley { n, bases: args.ints()? }
            }
        }
        "ratnet" => {
            args.only_keys(&["q", "f"])?;
            let q = prime(args.required("q")?)?;
            let f = poly(args.required("f")?, q)?;
            let gs = args.pos.iter().map(|n| poly(n, q)).collect::<Result<_>>()?;
            SequenceSpec::RationalNet { q, f, gs }
        }
        "power" => {
            args.only_keys(&[])?;
            args.exactly(2)?;
            SequenceSpec::PowerRatio { p: int(args.pos[0])?, r: int(args.pos[1])? }
        }
        "digitsum" => {
            args.only_keys(&[])?;
            args.exactly(1)?;
            SequenceSpec::digit_sum_filtered(spec_from_node(args.pos[0])?)
        }
        "hybrid" => {
            args.only_keys(&[])?;
            if args.pos.len() < 2 {
                return Err(parse_err("hybrid takes at least two components"));
            }
            let mut parts = args.pos.iter().map(|n| spec_from_node(n));
            let first = parts.next().expect("two components")?;
            parts.try_fold(first, |acc, r| Ok::<_, crate::Error>(SequenceSpec::hybrid(acc, r?)))?
        }
        other => return Err(parse_err(format!("unknown sequence family {other:?}"))),
    };
    Ok(spec)
}

/// Parses and validates a spec.
pub fn parse_spec(src: &str) -> Result<SequenceSpec> {
    let spec = spec_from_node(&parse_node(src)?)?;
    spec.validate()?;
    Ok(spec)
}

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(", ")
}

fn list(coeffs: &[u64]) -> String {
    let body = coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    format!("[{body}]")
}

pub fn format_real(a: &FixedPointReal) -> String {
    match a.origin() {
        Origin::Quadratic { a: p, b: 0, c: 1, .. } => p.to_string(),
        Origin::Quadratic { a: p, b: 0, c, .. } => format!("{p}/{c}"),
        Origin::Quadratic { a: 0, b: 1, d, c: 1 } => format!("sqrt({d})"),
        Origin::Quadratic { a, b, d, c } => format!("quad({a}, {b}, {d}, {c})"),
        Origin::Raw if a.is_exact() => format!("raw({}, exact)", a.scaled()),
        Origin::Raw => format!("raw({})", a.scaled()),
    }
}

fn format_matrix(m: &GenMatrix) -> String {
    if m.is_identity() {
        "identity".into()
    } else if m.is_all_ones_first_row() {
        "c1".into()
    } else if let Some(rows) = m.dense_block() {
        let body = rows
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("|");
        format!("rows[{body}]")
    } else {
        "custom".into()
    }
}

fn format_series(s: &LaurentSeries) -> String {
    let mut body = list(s.coeffs());
    if s.known_until().is_some() {
        body.insert_str(body.len() - 1, if s.coeffs().is_empty() { "..." } else { " ..." });
    }
    format!("laurent({}; {body})", s.omega())
}

/// Canonical text of a spec. Custom matrices print as `custom`, which does
/// not parse back.
pub fn format_spec(spec: &SequenceSpec) -> String {
    let mut out = String::new();
    match spec {
        SequenceSpec::Kronecker { alphas } => {
            let w = alphas.first().map_or(DEFAULT_WIDTH, FixedPointReal::width);
            let _ = write!(out, "kronecker(W={w}; {})", join(alphas, format_real));
        }
        SequenceSpec::Halton { bases } => {
            let _ = write!(out, "halton({})", join(bases, u64::to_string));
        }
        SequenceSpec::Digital { q, matrices, precision } => {
            let _ = write!(out, "digital(q={q}, L={precision}; {})", join(matrices, format_matrix));
        }
        SequenceSpec::DigitalKronecker { q, series, precision } => {
            let _ = write!(out, "dkron(q={q}, L={precision}; {})", join(series, format_series));
        }
        SequenceSpec::Lattice { n, gens } => {
            let _ = write!(out, "lattice(N={n}; {})", join(gens, u64::to_string));
        }
        SequenceSpec::RationalNet { q, f, gs } => {
            let _ = write!(
                out,
                "ratnet(q={q}, f={}; {})",
                list(f.coeffs()),
                join(gs, |g| list(g.coeffs()))
            );
        }
        SequenceSpec::Hammersley { n, bases } if bases.is_empty() => {
            let _ = write!(out, "hammersley(N={n})");
        }
        SequenceSpec::Hammersley { n, bases } => {
            let _ = write!(out, "hammersley(N={n}; {})", join(bases, u64::to_string));
        }
        SequenceSpec::PowerRatio { p, r } => {
            let _ = write!(out, "power({p}, {r})");
        }
        SequenceSpec::DigitSumFiltered { inner } => {
            let _ = write!(out, "digitsum({})", format_spec(inner));
        }
        SequenceSpec::Hybrid { left, right } => {
            let _ = write!(out, "hybrid({}, {})", format_spec(left), format_spec(right));
        }
    }
    out
}

/// Exact `p/q` text of a rational (`p` alone for integers).
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
