//! Exit criteria. Each test writes one `[PASS]`/`[FAIL]` line to stderr
//! (bypassing the harness capture) and then asserts.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use expdio::bounds::exponent_ranges;
use expdio::ntheory::{factorize, is_prime, jacobi, power_of};
use expdio::verify::ScanOutcome;
use expdio::{
    oracle_solve, scan, solve, z_bound_le, z_bound_new, EquationInstance, OracleMode, ParityClass,
    ScanRanges, SieveConfig,
};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(criterion: u32, title: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(
        std::io::stderr(),
        "[{tag}] criterion {criterion}: {title} -- {detail}"
    );
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Valid instances with 2 <= a, b <= 12 and odd 3 <= c <= 35.
fn small_grid() -> Vec<EquationInstance> {
    let mut out = Vec::new();
    for a in 2..=12u32 {
        for b in 2..=12u32 {
            for c in (3..=35u32).step_by(2) {
                if let Ok(i) = EquationInstance::new(a, b, c) {
                    out.push(i);
                }
            }
        }
    }
    out
}

/// The 2 <= a, b <= 20, 3 <= c <= 49 scan, computed once for criteria 2-4.
fn big_scan() -> &'static ScanOutcome {
    static SCAN: OnceLock<ScanOutcome> = OnceLock::new();
    SCAN.get_or_init(|| {
        scan(
            &ScanRanges::up_to(20, 20, 49),
            &SieveConfig::default(),
            OracleMode::Off,
            1,
        )
    })
}

fn as_u64(v: &BigUint) -> u64 {
    v.to_string().parse().unwrap()
}

#[test]
fn criterion_1_oracle_equivalence() {
    let started = Instant::now();
    let grid = small_grid();
    let mut mismatches = Vec::new();
    let mut total = 0;
    for inst in &grid {
        let z_cap = as_u64(&z_bound_new(inst.a(), inst.b()).unwrap());
        // The exact z cap, computed here with native integers.
        let (a, b) = (as_u64(inst.a()), as_u64(inst.b()));
        assert_eq!(z_cap, (a * b - 1) / 2);
        let (x_cap, y_cap) = exponent_ranges(inst, z_cap);
        let expected = oracle_solve(inst, x_cap, y_cap, z_cap);
        let got = solve(inst, &SieveConfig::default()).unwrap().solutions;
        total += got.len();
        if got != expected {
            mismatches.push(inst.to_string());
        }
    }
    let elapsed = started.elapsed();
    let pass = mismatches.is_empty() && elapsed < Duration::from_secs(120);
    verdict(
        1,
        "solver equals brute-force oracle on a,b<=12, c<=35",
        pass,
        &format!(
            "{} instances, {} solutions, {} mismatches, {:.2?}",
            grid.len(),
            total,
            mismatches.len(),
            elapsed
        ),
    );
    assert!(mismatches.is_empty(), "mismatches: {mismatches:?}");
    assert!(elapsed < Duration::from_secs(120));
}

#[test]
fn criterion_2_count_bound() {
    let out = big_scan();
    let mut violations = Vec::new();
    let mut equality = 0;
    for r in &out.reports {
        let omega = factorize(r.instance.c()).unwrap().omega();
        let bound = 1usize << omega;
        if r.solutions.len() > bound {
            violations.push(r.instance.to_string());
        }
        if !r.solutions.is_empty() && r.solutions.len() == bound {
            equality += 1;
        }
    }
    let witness = out
        .reports
        .iter()
        .find(|r| r.instance == EquationInstance::new(2u32, 3u32, 5u32).unwrap())
        .expect("(2, 3, 5) is in the grid");
    let witness_ok = witness.solutions.len() == 2 && witness.omega_c == 1;
    let pass = violations.is_empty() && equality > 0 && witness_ok && out.summary.errors.is_empty();
    verdict(
        2,
        "|solutions| <= 2^omega(c) on a,b<=20, c<=49",
        pass,
        &format!(
            "{} instances, {} violations, {} at equality, max count {}, (2,3,5) has {}",
            out.reports.len(),
            violations.len(),
            equality,
            out.summary.max_solutions,
            witness.solutions.len()
        ),
    );
    assert!(pass, "violations: {violations:?}");
}

#[test]
fn criterion_3_z_bound() {
    let out = big_scan();
    let mut violations = Vec::new();
    let mut tightness: f64 = 0.0;
    let mut witness = String::new();
    for r in &out.reports {
        let (a, b) = (as_u64(r.instance.a()), as_u64(r.instance.b()));
        let limit = (a * b - 1) / 2;
        for s in &r.solutions {
            if s.z > limit || 2 * s.z >= a * b {
                violations.push((r.instance.to_string(), s.z));
            }
            let t = s.z as f64 / limit as f64;
            if t > tightness {
                tightness = t;
                witness = format!("{} z={} of {}", r.instance, s.z, limit);
            }
        }
    }
    let pass = violations.is_empty();
    verdict(
        3,
        "every solution has z <= floor((ab-1)/2)",
        pass,
        &format!(
            "{} violations, max z/bound = {tightness:.3} at {witness}",
            violations.len()
        ),
    );
    assert!(pass, "violations: {violations:?}");
}

#[test]
fn criterion_4_parity_classes() {
    let out = big_scan();
    let mut violations = Vec::new();
    let mut two_class = 0;
    for r in &out.reports {
        let classes: BTreeSet<(u64, u64)> =
            r.solutions.iter().map(|s| (s.x % 2, s.y % 2)).collect();
        if classes.len() > 2 {
            violations.push(r.instance.to_string());
        }
        if classes.len() == 2 {
            two_class += 1;
        }
    }
    let witness = solve(
        &EquationInstance::new(2u32, 3u32, 5u32).unwrap(),
        &SieveConfig::default(),
    )
    .unwrap();
    let expected = BTreeSet::from([
        ParityClass {
            x_parity: 1,
            y_parity: 1,
        },
        ParityClass {
            x_parity: 0,
            y_parity: 0,
        },
    ]);
    let pass = violations.is_empty() && two_class > 0 && witness.parity_classes == expected;
    verdict(
        4,
        "at most two (x mod 2, y mod 2) classes per instance",
        pass,
        &format!(
            "{} violations, {two_class} instances with exactly two classes",
            violations.len()
        ),
    );
    assert!(pass, "violations: {violations:?}");
}

#[test]
fn criterion_5_bound_comparison() {
    let mut violations = Vec::new();
    for a in 2..=100u64 {
        for b in 2..=100u64 {
            let new = z_bound_new(&big(a), &big(b)).unwrap();
            let le = z_bound_le(&big(a), &big(b)).unwrap();
            if new > le {
                violations.push((a, b));
            }
        }
    }
    let new = z_bound_new(&big(2), &big(3)).unwrap();
    let le = z_bound_le(&big(2), &big(3)).unwrap();
    // Independent high-precision evaluation: 12 ln(12e) / pi = 13.3113628686...
    let le_ok = le == big(13);
    let factor_ok = &new * 5u32 <= le;
    let pass = violations.is_empty() && le_ok && factor_ok;
    verdict(
        5,
        "z_bound_new <= z_bound_le on [2,100]^2; (2,3) at least 5x smaller",
        pass,
        &format!("{} violations, (2,3): new {new}, Le {le}", violations.len()),
    );
    assert!(pass, "violations: {violations:?}");
}

fn euler_criterion(a: u64, p: u64) -> i8 {
    let (mut acc, mut base, mut e) = (1u64, a % p, (p - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if acc == p - 1 {
        -1
    } else {
        acc as i8
    }
}

#[test]
fn criterion_6_primitives() {
    let mut failures = 0usize;
    let mut checks = 0usize;
    for p in (3..1000u64).filter(|&p| is_prime(&big(p))) {
        for a in 0..p {
            checks += 1;
            if jacobi(&BigInt::from(a), &big(p)).unwrap() != euler_criterion(a, p) {
                failures += 1;
            }
        }
    }
    for n in 1..=100_000u64 {
        checks += 1;
        if factorize(&big(n)).unwrap().product() != big(n) {
            failures += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_061_726);
    for _ in 0..1000 {
        let n: u64 = rng.gen_range(1..=u64::MAX);
        checks += 1;
        let f = factorize(&big(n)).unwrap();
        if f.product() != big(n) || !f.factors().iter().all(|(p, _)| is_prime(p)) {
            failures += 1;
        }
    }
    for b in 2..=30u64 {
        for y in 1..=40u32 {
            checks += 1;
            if power_of(&big(b).pow(y), &big(b)) != Some(y as u64) {
                failures += 1;
            }
        }
    }
    let pass = failures == 0;
    verdict(
        6,
        "jacobi / factorize / power_of exact",
        pass,
        &format!("{checks} checks, {failures} failures"),
    );
    assert!(pass);
}

fn scan_bytes(jobs: &str) -> Vec<u8> {
    let o = Command::new(env!("CARGO_BIN_EXE_expdio"))
        .args([
            "scan", "--a-max", "20", "--b-max", "20", "--c-max", "49", "--jobs", jobs,
        ])
        .env_remove("EXPDIO_MODULI")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    o.stdout
}

#[test]
fn criterion_7_determinism() {
    let one = scan_bytes("1");
    let eight = scan_bytes("8");
    let again = scan_bytes("8");
    let pass = one == eight && eight == again && !one.is_empty();
    verdict(
        7,
        "scan output byte-identical across --jobs 1/8 and reruns",
        pass,
        &format!(
            "{} bytes, {} lines",
            one.len(),
            one.iter().filter(|&&c| c == b'\n').count()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_8_sieve_soundness() {
    let mut differ = Vec::new();
    let (mut candidates, mut pruned) = (0u64, 0u64);
    for inst in small_grid() {
        let sieved = solve(&inst, &SieveConfig::default()).unwrap();
        let plain = solve(&inst, &SieveConfig::none()).unwrap();
        if sieved.solutions != plain.solutions {
            differ.push(inst.to_string());
        }
        candidates += sieved.prefilter_stats.candidates;
        pruned += sieved.prefilter_stats.pruned;
    }
    let pass = differ.is_empty();
    verdict(
        8,
        "identical solutions with and without the residue prefilter",
        pass,
        &format!(
            "{} differences, prune rate {:.1}% ({pruned} of {candidates} candidates)",
            differ.len(),
            100.0 * pruned as f64 / candidates.max(1) as f64
        ),
    );
    assert!(pass, "differences: {differ:?}");
}
