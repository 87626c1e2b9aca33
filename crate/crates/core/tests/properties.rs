use expdio::bounds::exponent_ranges;
use expdio::ntheory::{factorize, ilog_bound, is_prime, jacobi, mult_order, power_of};
use expdio::{oracle_solve, solve, z_bound_new, EquationInstance, SieveConfig};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn euler_criterion(a: u64, p: u64) -> i8 {
    let mut acc = 1u64;
    for _ in 0..(p - 1) / 2 {
        acc = acc * a % p;
    }
    match acc {
        0 => 0,
        1 => 1,
        v if v == p - 1 => -1,
        v => panic!("a^((p-1)/2) = {v} mod {p}"),
    }
}

#[test]
fn jacobi_is_euler_criterion_for_small_primes() {
    for p in (3..1000u64).filter(|&p| is_prime(&big(p))) {
        for a in 0..p {
            assert_eq!(
                jacobi(&BigInt::from(a), &big(p)).unwrap(),
                euler_criterion(a, p),
                "({a} / {p})"
            );
        }
    }
}

#[test]
fn factorize_reconstructs_small_range() {
    for n in 1..=100_000u64 {
        let f = factorize(&big(n)).unwrap();
        assert_eq!(f.product(), big(n));
        assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        assert!(f.factors().iter().all(|(p, e)| is_prime(p) && *e >= 1));
    }
}

#[test]
fn factorize_reconstructs_random_u64() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n: u64 = rng.gen_range(1..=u64::MAX);
        let f = factorize(&big(n)).unwrap();
        assert_eq!(f.product(), big(n), "n = {n}");
        assert!(f.factors().iter().all(|(p, _)| is_prime(p)));
    }
}

/// Exponent by repeated exact division, independent of `power_of`.
fn power_by_division(mut m: BigUint, b: &BigUint) -> Option<u64> {
    if m <= BigUint::one() {
        return None;
    }
    let mut y = 0;
    while (&m % b) == BigUint::from(0u32) {
        m /= b;
        y += 1;
    }
    (m.is_one()).then_some(y)
}

#[test]
fn power_of_round_trips() {
    for b in 2..=30u64 {
        let base = big(b);
        for y in 1..=40u32 {
            let m = base.pow(y);
            assert_eq!(power_of(&m, &base), Some(y as u64));
            for near in [&m + 1u32, &m - 1u32] {
                assert_eq!(
                    power_of(&near, &base),
                    power_by_division(near.clone(), &base)
                );
            }
        }
    }
}

fn brute_order(g: u64, m: u64) -> u64 {
    let mut v = g % m;
    let mut k = 1;
    while v != 1 {
        v = v * (g % m) % m;
        k += 1;
    }
    k
}

proptest! {
    #[test]
    fn jacobi_is_multiplicative(a1 in -10_000i64..10_000, a2 in -10_000i64..10_000, half in 0u64..50_000) {
        let n = big(2 * half + 1);
        let j = |a: i64| jacobi(&BigInt::from(a), &n).unwrap();
        prop_assert_eq!(j(a1 * a2), j(a1) * j(a2));
    }

    #[test]
    fn ilog_bound_is_exact(base in 2u64..1000, limit in 2u64..u64::MAX) {
        let e = ilog_bound(&big(base), &big(limit)).unwrap() as u32;
        prop_assert!(big(base).pow(e) < big(limit));
        prop_assert!(big(base).pow(e + 1) >= big(limit));
    }

    #[test]
    fn ilog_bound_is_exact_on_powers(base in 2u64..50, e in 1u32..200, delta in 0u32..3) {
        let limit = big(base).pow(e) + delta - 1u32;
        if limit >= big(2) {
            let got = ilog_bound(&big(base), &limit).unwrap() as u32;
            prop_assert!(big(base).pow(got) < limit && limit <= big(base).pow(got + 1));
        }
    }

    #[test]
    fn mult_order_divides_phi(g in 1u64..100_000, m in 2u64..20_000) {
        prop_assume!(num_integer::gcd(g, m) == 1);
        let order = mult_order(&BigInt::from(g), m).unwrap();
        let phi = factorize(&big(m)).unwrap().euler_phi().to_u64().unwrap();
        prop_assert_eq!(phi % order, 0);
        prop_assert_eq!(order, brute_order(g, m));
    }

    #[test]
    fn exponent_ranges_are_exact(a in 2u32..40, b in 2u32..40, c in 1u32..30, z in 1u64..40) {
        let c = 2 * c + 1;
        let Ok(inst) = EquationInstance::new(a, b, c) else { return Ok(()) };
        let (x_max, y_max) = exponent_ranges(&inst, z);
        let cz = big(c as u64).pow(z as u32);
        prop_assert!(inst.a().pow(x_max as u32) < cz && cz <= inst.a().pow(x_max as u32 + 1));
        prop_assert!(inst.b().pow(y_max as u32) < cz && cz <= inst.b().pow(y_max as u32 + 1));
    }

    #[test]
    fn sieve_never_changes_solutions(
        a in 2u32..16,
        b in 2u32..16,
        c in 1u32..20,
        moduli in proptest::collection::vec(2u64..200, 0..8),
    ) {
        let Ok(inst) = EquationInstance::new(a, b, 2 * c + 1) else { return Ok(()) };
        let config = SieveConfig::new(moduli).unwrap();
        let sieved = solve(&inst, &config).unwrap().solutions;
        let plain = solve(&inst, &SieveConfig::none()).unwrap().solutions;
        prop_assert_eq!(sieved, plain);
    }

    #[test]
    fn solver_matches_oracle(a in 2u32..16, b in 2u32..16, c in 1u32..20) {
        let Ok(inst) = EquationInstance::new(a, b, 2 * c + 1) else { return Ok(()) };
        let report = solve(&inst, &SieveConfig::default()).unwrap();
        let z_cap = z_bound_new(inst.a(), inst.b()).unwrap().to_u64().unwrap();
        let (x_cap, y_cap) = exponent_ranges(&inst, z_cap);
        prop_assert_eq!(&report.solutions, &oracle_solve(&inst, x_cap, y_cap, z_cap));
        prop_assert!(report.solutions.iter().all(|s| inst.satisfied_by(s)));
        prop_assert!(report.solutions.windows(2).all(|w| (w[0].z, w[0].x) < (w[1].z, w[1].x)));
    }
}
