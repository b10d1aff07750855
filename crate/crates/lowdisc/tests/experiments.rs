use lowdisc::core::algebra::BigRational;
use lowdisc::core::diophantine::littlewood_scan;
use lowdisc::core::discrepancy::{star_disc_1d, star_disc_1d_prefixes, WorkBudget};
use lowdisc::core::generators::stream;
use lowdisc::experiment::{parse_plan, preset, run_scaling};
use lowdisc::fit::{fit_exponent, FitRow};
use lowdisc::lattice_scan::{lattice_scan, ScanMode};
use lowdisc::syntax::{parse_real, parse_spec};
use num_traits::ToPrimitive;

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[test]
fn kronecker_sqrt2_stays_bounded() {
    let spec = parse_spec("kronecker(W=128; sqrt(2))").unwrap();
    let set = stream(&spec, 0, 1 << 17).unwrap();
    for j in 4..=17 {
        let n = 1usize << j;
        let d = star_disc_1d(&set.points()[..n]).unwrap().midpoint().to_f64().unwrap();
        let norm = n as f64 * d / (n as f64).ln();
        assert!(norm <= 3.0, "N=2^{j}: {norm}");
    }
}

#[test]
fn van_der_corput_has_d_equal_one_over_n_at_powers_of_two() {
    let plan = parse_plan("spec = halton(2)\nschedule = geometric(2, 1, 12)\np = 1\n").unwrap();
    for row in run_scaling(&plan).unwrap() {
        let d = row.result.unwrap();
        assert_eq!(d.exact().unwrap(), &r(1, row.n as i64));
        if row.n >= 4 {
            assert!(row.normalized.unwrap() < 1.0, "N={}", row.n);
        }
    }
}

#[test]
fn van_der_corput_fit_over_all_n() {
    let set = stream(&parse_spec("vdc(2)").unwrap(), 0, 1 << 16).unwrap();
    let prefixes = star_disc_1d_prefixes(set.points()).unwrap();
    let rows: Vec<FitRow> = prefixes
        .iter()
        .enumerate()
        .map(|(i, d)| FitRow { n: i as u64 + 1, d: d.exact().unwrap().to_f64().unwrap(), weight: 1.0 })
        .collect();
    let fit = fit_exponent(&rows).unwrap();
    assert!((fit.exponent - 0.7708259975336345).abs() < 1e-9, "{}", fit.exponent);
}

#[test]
fn littlewood_sqrt2_sqrt3() {
    let alpha = parse_real("sqrt(2)", 128).unwrap();
    let beta = parse_real("sqrt(3)", 128).unwrap();
    let scan = littlewood_scan(&alpha, &beta, 10_000).unwrap();
    assert_eq!(scan.argmin, 41);
    let target = 0.00995678224782801;
    let slack = scan.error_bound.to_f64().unwrap() + 1e-15;
    assert!((scan.min.to_f64().unwrap() - target).abs() <= slack);
}

#[test]
fn lattice_scan_n5_fixture() {
    let scan = lattice_scan(5, 2, ScanMode::Exhaustive, &WorkBudget::DEFAULT).unwrap();
    assert_eq!(scan.values.len(), 25);
    let (g, v) = &scan.values[scan.min];
    assert_eq!(g, &vec![1, 2]);
    assert_eq!(v, &r(9, 25));
    assert_eq!(scan.quantiles[2], r(11, 25));
}

#[test]
fn c1_preset_brackets_separate() {
    let mut plan = preset("c1-counterexample", None).unwrap();
    plan.schedule = vec![216, 1296];
    let rows = run_scaling(&plan).unwrap();
    let small = rows[0].result.as_ref().unwrap();
    let large = rows[1].result.as_ref().unwrap();
    assert!(large.hi() < small.lo());
}

#[test]
fn hammersley_lattice_preset_runs() {
    let plan = preset("hammersley-lattice", None).unwrap();
    let rows = run_scaling(&plan).unwrap();
    assert_eq!(rows.len(), plan.schedule.len());
    for row in rows {
        let d = row.result.unwrap();
        assert_eq!(d.d, 3);
        assert!(d.lo() > &r(0, 1) && d.hi() <= &r(1, 1));
    }
}
