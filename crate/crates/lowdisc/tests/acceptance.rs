//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use lowdisc::core::algebra::{BigRational, GenMatrix, LaurentSeries, Poly, Prime};
use lowdisc::core::diophantine::{
    cf_rational, cf_surd, fold_convergent, largest_pq_2k_sqrt2, zaremba_scan, ContinuedFraction,
};
use lowdisc::core::discrepancy::{
    brute_force_oracle, extreme_disc_1d, star_disc_1d, star_disc_1d_prefixes, star_disc_2d_sweep,
    star_disc_bracket, star_disc_exact, DiscKind, WorkBudget,
};
use lowdisc::core::generators::{
    digital_kronecker_point, digital_point, radical_inverse, rational_net_point, stream,
    SequenceSpec, UnitPoint,
};
use lowdisc::experiment::{preset, PlanSpec};
use lowdisc::fit::{fit_exponent, FitRow};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Rational bounds on ln 2: 0.6931 < ln 2 < 0.6932.
const LN2_LO: (i64, i64) = (6931, 10000);
const LN2_HI: (i64, i64) = (6932, 10000);

fn log2_floor(n: u64) -> i64 {
    63 - i64::from(n.leading_zeros())
}

fn log2_ceil(n: u64) -> i64 {
    log2_floor(n) + i64::from(!n.is_power_of_two())
}

/// Rational upper bound on `ln n`.
fn ln_upper(n: u64) -> BigRational {
    r(log2_ceil(n), 1) * r(LN2_HI.0, LN2_HI.1)
}

/// Rational lower bound on `ln n`.
fn ln_lower(n: u64) -> BigRational {
    r(log2_floor(n), 1) * r(LN2_LO.0, LN2_LO.1)
}

fn random_set(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<UnitPoint> {
    let den: i64 = rng.gen_range(2..=16);
    (0..n)
        .map(|_| UnitPoint::exact((0..d).map(|_| r(rng.gen_range(0..den), den)).collect()).unwrap())
        .collect()
}

/// 1. Exact algorithms equal the brute-force oracle on random rational sets.
fn oracle_equivalence() -> Outcome {
    const SETS: usize = 360;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let budget = WorkBudget::DEFAULT;
    let mut checks = 0;
    for i in 0..SETS {
        let d = 1 + i % 3;
        let n = rng.gen_range(1..=8);
        let pts = random_set(&mut rng, n, d);
        let star = brute_force_oracle(&pts, DiscKind::Star).map_err(|e| e.to_string())?;
        let mut got = vec![("grid", star_disc_exact(&pts, &budget))];
        if d == 1 {
            got.push(("1d", star_disc_1d(&pts)));
        }
        if d == 2 {
            got.push(("2d sweep", star_disc_2d_sweep(&pts, &budget)));
        }
        for (name, res) in got {
            let v = res.map_err(|e| e.to_string())?;
            ensure(v.exact() == Some(&star), || format!("set {i}: {name} gave {:?}, oracle {star}", v.value))?;
            checks += 1;
        }
        if d == 1 {
            let ext = brute_force_oracle(&pts, DiscKind::Extreme).map_err(|e| e.to_string())?;
            let v = extreme_disc_1d(&pts).map_err(|e| e.to_string())?;
            ensure(v.exact() == Some(&ext), || format!("set {i}: extreme 1d gave {:?}, oracle {ext}", v.value))?;
            checks += 1;
        }
    }
    Ok(format!("{SETS} sets, {checks} exact comparisons"))
}

/// 2. Identity digital sequence = van der Corput; rational net over x^t =
/// digital Kronecker with the expanded series.
fn construction_identities() -> Outcome {
    let q = Prime::new(2).unwrap();
    let id = [GenMatrix::identity(q)];
    for n in 0..1u64 << 12 {
        let p = digital_point(n, q, &id, 16).map_err(|e| e.to_string())?;
        ensure(p.coord(0) == radical_inverse(n, 2), || format!("digital identity differs at n={n}"))?;
    }
    let mut nets = 0;
    for t in 1..=6usize {
        let f = Poly::monomial(q, t);
        for g in (1..1u64 << t).step_by(2).map(|i| Poly::from_index(i, q)) {
            let series = LaurentSeries::from_rational(&g, &f, 2 * t as i64).map_err(|e| e.to_string())?;
            for n in 0..1u64 << t {
                let a = rational_net_point(n, q, &f, std::slice::from_ref(&g)).map_err(|e| e.to_string())?;
                let b = digital_kronecker_point(n, q, std::slice::from_ref(&series), t as u32)
                    .map_err(|e| e.to_string())?;
                ensure(a == b, || format!("t={t} g={:?} n={n}", g.coeffs()))?;
                nets += 1;
            }
        }
    }
    Ok(format!("4096 digital points, {nets} net points"))
}

/// 3. van der Corput: max over 2 <= N <= 2^16 of N D*_N / ln N >= 0.06015.
fn van_der_corput_lower_bound_constant() -> Outcome {
    let n_max = 1usize << 16;
    let set = stream(&SequenceSpec::van_der_corput(2), 0, n_max as u64).map_err(|e| e.to_string())?;
    let prefixes = star_disc_1d_prefixes(set.points()).map_err(|e| e.to_string())?;
    let c = r(6015, 100_000);
    let mut holds = 0usize;
    let mut last_half = false;
    for (i, res) in prefixes.iter().enumerate().skip(1) {
        let n = (i + 1) as u64;
        let nd = r(n as i64, 1) * res.exact().expect("exact");
        if nd >= &c * ln_upper(n) {
            holds += 1;
            last_half |= n > (n_max as u64) / 2;
        }
    }
    ensure(holds > 0, || "no N reaches the constant".into())?;
    ensure(last_half, || "no N in (2^15, 2^16] reaches the constant".into())?;
    Ok(format!("{holds} of {} values of N reach 6015/100000 (including N in (2^15, 2^16])", n_max - 1))
}

/// Exact D*_N of Halton(2, 3) at N = 2^4 .. 2^12, computed once with the 2D
/// sweep and confirmed by an independent brute-force evaluation up to 2^7.
const HALTON_2_3: [(i64, i64); 9] = [
    (29, 144),
    (5, 48),
    (5, 96),
    (95, 2592),
    (389, 20736),
    (1409, 124_416),
    (7, 1024),
    (8221, 2_239_488),
    (16693, 8_957_952),
];

/// 4. Halton(2, 3): N D*_N / (ln N)^2 <= 5 on the schedule; values pinned.
fn halton_low_discrepancy() -> Outcome {
    let spec = SequenceSpec::Halton { bases: vec![2, 3] };
    let all = stream(&spec, 0, 1 << 12).map_err(|e| e.to_string())?;
    let mut worst = 0f64;
    for (j, &(p, q)) in (4..=12).zip(HALTON_2_3.iter()) {
        let n = 1u64 << j;
        let v = star_disc_2d_sweep(&all.points()[..n as usize], &WorkBudget::DEFAULT).map_err(|e| e.to_string())?;
        let v = v.exact().expect("exact").clone();
        ensure(v == r(p, q), || format!("N=2^{j}: got {v}, pinned {p}/{q}"))?;
        let lo = ln_lower(n);
        ensure(r(n as i64, 1) * &v <= r(5, 1) * &lo * &lo, || format!("N=2^{j} exceeds the bound"))?;
        let ln = (n as f64).ln();
        worst = worst.max(n as f64 * (p as f64 / q as f64) / (ln * ln));
    }
    Ok(format!("9 pinned values match, max N D/(ln N)^2 = {worst:.4} <= 5"))
}

fn decimal_max_quotient(d: u128, digits: u32, period: usize) -> BigInt {
    let scale = BigInt::from(10u32).pow(digits);
    let mut num = (BigInt::from(d) * &scale * &scale).sqrt();
    let mut den = scale;
    let mut best = BigInt::from(0);
    for i in 0..=period {
        let (a, rem) = num.div_mod_floor(&den);
        if i > 0 {
            best = best.max(a);
        }
        num = den;
        den = rem;
    }
    best
}

/// 5. A_0, A_1, A_2 = 2, 4, 10 (surd recurrence and 80-digit expansion);
/// rational expansions reconstruct a/N exactly for all N <= 500.
fn continued_fraction_fixtures() -> Outcome {
    for (k, want) in [(0u32, 2u128), (1, 4), (2, 10)] {
        let got = largest_pq_2k_sqrt2(k).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("A_{k} = {got}, expected {want}"))?;
        let d = 1u128 << (2 * k + 1);
        let ContinuedFraction::Surd { period, .. } = cf_surd(d).map_err(|e| e.to_string())? else {
            return Err("surd expansion expected".into());
        };
        let numeric = decimal_max_quotient(d, 80, period.len());
        ensure(numeric == BigInt::from(want), || format!("80-digit expansion gives A_{k} = {numeric}"))?;
    }
    let mut count = 0;
    for n in 1..=500u64 {
        for a in 0..n {
            let ContinuedFraction::Rational { quotients } = cf_rational(a, n).map_err(|e| e.to_string())? else {
                return Err("rational expansion expected".into());
            };
            let (p, q) = fold_convergent(quotients.iter().map(|&x| u128::from(x)));
            let g = a.gcd(&n);
            ensure(p == BigInt::from(a / g) && q == BigInt::from(n / g), || format!("{a}/{n} -> {p}/{q}"))?;
            count += 1;
        }
    }
    Ok(format!("A_0..A_2 = 2, 4, 10 by both methods; {count} rational round trips"))
}

/// 6. Every 2 <= N <= 1000 has a coprime a with all partial quotients <= 5.
fn zaremba_scan_to_1000() -> Outcome {
    let mut worst = (0, 0);
    for n in 2..=1000u64 {
        let row = zaremba_scan(n).map_err(|e| e.to_string())?;
        ensure(row.value <= 5, || format!("N={n}: best max quotient {}", row.value))?;
        ensure(row.witness.gcd(&n) == 1, || format!("N={n}: witness {} not coprime", row.witness))?;
        let check = cf_rational(row.witness, n).map_err(|e| e.to_string())?.max_partial_quotient();
        ensure(check == u128::from(row.value), || format!("N={n}: witness re-verification failed"))?;
        worst = worst.max((row.value, n));
    }
    Ok(format!("max over N of the best max quotient = {} (first at N={})", worst.0, worst.1))
}

/// 7. The base-3 all-ones-row / base-2 identity hybrid: bracketed D*_N at
/// 6^6 lies strictly below the bracket at 6^3 (k = 512).
fn counterexample_preset_sanity() -> Outcome {
    let plan = preset("c1-counterexample", None).map_err(|e| e.to_string())?;
    let PlanSpec::Sequence(spec) = &plan.spec else {
        return Err("sequence plan expected".into());
    };
    let big = stream(spec, 0, 6u64.pow(6)).map_err(|e| e.to_string())?;
    let small = star_disc_bracket(&big.points()[..216], 512, &WorkBudget::DEFAULT).map_err(|e| e.to_string())?;
    let large = star_disc_bracket(big.points(), 512, &WorkBudget::DEFAULT).map_err(|e| e.to_string())?;
    ensure(large.hi() < small.lo(), || {
        format!("brackets overlap: 6^6 -> [{}, {}], 6^3 -> [{}, {}]", large.lo(), large.hi(), small.lo(), small.hi())
    })?;
    let f = |x: &BigRational| num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN);
    Ok(format!(
        "6^6 in [{:.5}, {:.5}] below 6^3 in [{:.5}, {:.5}]",
        f(large.lo()),
        f(large.hi()),
        f(small.lo()),
        f(small.hi())
    ))
}

/// 8. Moving every coordinate by at most eps moves D* by at most 2 d eps.
fn perturbation_contract() -> Outcome {
    const BITS: u32 = 30;
    const EPS_BITS: u32 = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let den = BigInt::from(1u64 << BITS);
    let top = (1i64 << BITS) - 1;
    let shift = 1i64 << (BITS - EPS_BITS);
    let to_point = |c: &[i64]| {
        UnitPoint::exact(c.iter().map(|&x| BigRational::new(x.into(), den.clone())).collect()).unwrap()
    };
    let bound = r(4, 1) * BigRational::new(1.into(), BigInt::from(1u64 << EPS_BITS));
    let mut largest = BigRational::from_integer(0.into());
    for pair in 0..100 {
        let n = rng.gen_range(1..=64);
        let mut p = Vec::with_capacity(n);
        let mut q = Vec::with_capacity(n);
        for _ in 0..n {
            let a: Vec<i64> = (0..2).map(|_| rng.gen_range(0..=top)).collect();
            let b: Vec<i64> = a.iter().map(|&x| (x + rng.gen_range(-shift..=shift)).clamp(0, top)).collect();
            p.push(to_point(&a));
            q.push(to_point(&b));
        }
        let dp = star_disc_2d_sweep(&p, &WorkBudget::DEFAULT).map_err(|e| e.to_string())?;
        let dq = star_disc_2d_sweep(&q, &WorkBudget::DEFAULT).map_err(|e| e.to_string())?;
        let diff = (dp.exact().unwrap() - dq.exact().unwrap()).abs();
        ensure(diff <= bound, || format!("pair {pair}: |D*(P) - D*(Q)| = {diff}"))?;
        largest = largest.max(diff);
    }
    let ratio = num_traits::ToPrimitive::to_f64(&(largest / bound)).unwrap_or(f64::NAN);
    Ok(format!("100 pairs, largest change = {ratio:.3} x 2 d eps"))
}

use num_traits::Signed;

/// 9. The exponent fit recovers planted exponents.
fn fit_recovers_planted_exponents() -> Outcome {
    const TOL: f64 = 1e-9;
    let mut worst = 0f64;
    for p in 0..=3 {
        let rows: Vec<FitRow> = (4..=24)
            .map(|j| {
                let n = 1u64 << j;
                let ln = (n as f64).ln();
                FitRow { n, d: 1.3 * ln.powi(p) / n as f64, weight: 1.0 }
            })
            .collect();
        let fit = fit_exponent(&rows).map_err(|e| e.to_string())?;
        let err = (fit.exponent - f64::from(p)).abs();
        ensure(err < TOL, || format!("p={p}: estimate {}", fit.exponent))?;
        worst = worst.max(err);
    }
    Ok(format!("largest error {worst:.2e} < {TOL:e}"))
}

fn run_cli(args: &[String]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_lowdisc"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

/// 10. Every command reruns to byte-identical output.
fn cli_determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("lowdisc-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = |name: &str| -> String { dir.join(name).to_string_lossy().into_owned() };
    let pts = path("pts.txt");
    let table = path("table.csv");
    let plan = path("plan.txt");
    std::fs::write(&plan, "spec = vdc(2)\nschedule = geometric(2, 4, 10)\np = 1\n").map_err(|e| e.to_string())?;
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<String>>();
    let commands: Vec<(Vec<String>, Option<String>)> = vec![
        (s(&["gen", "--spec", "hybrid(vdc(2), kronecker(W=96; sqrt(2)))", "--count", "50", "--out", &pts]), Some(pts.clone())),
        (s(&["gen", "--spec", "digital(q=3, L=12; c1)", "--start", "7", "--count", "20", "--decimal", "9"]), None),
        (s(&["disc", "--in", &pts, "--algo", "2d"]), None),
        (s(&["disc", "--spec", "halton(2, 3, 5)", "--count", "40", "--algo", "bracket", "--k", "32"]), None),
        (s(&["disc", "--spec", "vdc(3)", "--count", "30", "--kind", "extreme"]), None),
        (s(&["scan-lattice", "--N", "7", "--d", "2"]), None),
        (s(&["scan-lattice", "--N", "31", "--d", "2", "--mode", "sample", "--count", "40", "--seed", "9"]), None),
        (s(&["cfrac", "--surd", "32"]), None),
        (s(&["cfrac", "--rational", "13/21"]), None),
        (s(&["cfrac", "--bl", "6"]), None),
        (s(&["zaremba", "--to", "60"]), None),
        (s(&["moser", "--to", "60"]), None),
        (s(&["schmidt", "--h", "3", "--gens", "1,3", "--N", "7", "--phi", "product:1"]), None),
        (s(&["littlewood", "--alpha", "sqrt(2)", "--beta", "sqrt(3)", "--nmax", "500"]), None),
        (s(&["experiment", "--preset", "halton-2-3", "--out", &table]), Some(table.clone())),
        (s(&["experiment", "--plan", &plan, "--decimal", "12"]), None),
        (s(&["fit", "--in", &table]), None),
    ];
    for (args, file) in &commands {
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let stdout = run_cli(args)?;
            let file_bytes = match file {
                Some(f) => std::fs::read(f).map_err(|e| e.to_string())?,
                None => Vec::new(),
            };
            outputs.push((stdout, file_bytes));
        }
        ensure(outputs[0] == outputs[1], || format!("{args:?} is not deterministic"))?;
        ensure(!outputs[0].0.is_empty() || !outputs[0].1.is_empty(), || format!("{args:?} printed nothing"))?;
    }
    let _ = std::fs::remove_dir_all(PathBuf::from(&dir));
    Ok(format!("{} commands byte-identical across reruns", commands.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("construction identities", construction_identities),
        ("van der Corput lower-bound constant", van_der_corput_lower_bound_constant),
        ("Halton(2,3) low-discrepancy behavior", halton_low_discrepancy),
        ("continued-fraction fixtures", continued_fraction_fixtures),
        ("Zaremba scan to 1000", zaremba_scan_to_1000),
        ("counterexample preset sanity", counterexample_preset_sanity),
        ("perturbation contract", perturbation_contract),
        ("fit recovers planted exponents", fit_recovers_planted_exponents),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
