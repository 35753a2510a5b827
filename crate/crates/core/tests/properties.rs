mod common;

use biquad_core::arith::{decompose, decompose_cornacchia, quartic_symbol, Modulus, MAX_MODULUS};
use biquad_core::counts::{n_count, n_sum_closed};
use biquad_core::jacobsthal::{phi2_closed, phi_k};
use biquad_core::perm::{count_inversions, perm_sign, sgn_tau_direct, Sign, TauKernel};
use biquad_core::scan::{read_csv, read_jsonl, write_csv, write_jsonl, CheckRecord};
use biquad_core::PrimeContext;
use proptest::prelude::*;
use proptest::sample::select;

fn primes_1_mod_8() -> Vec<u64> {
    common::primes(17, 1500, 8, 1)
}

fn primes_1_mod_4() -> Vec<u64> {
    common::primes(5, 3000, 4, 1)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<u64>> {
    Just((0..n as u64).collect::<Vec<_>>()).prop_shuffle()
}

fn permutations(max: usize) -> impl Strategy<Value = (Vec<u64>, Vec<u64>, Vec<u64>)> {
    (1..max).prop_flat_map(|n| (permutation(n), permutation(n), permutation(n)))
}

fn record() -> impl Strategy<Value = CheckRecord> {
    (
        any::<u64>(),
        "[a-z_0-9]{1,12}",
        "[ -~]{0,40}",
        proptest::option::of(any::<u64>()),
        proptest::option::of(any::<i64>()),
        proptest::option::of(any::<u64>()),
        any::<i64>(),
        any::<i64>(),
    )
        .prop_map(|(p, check, case, g, t, m, expected, actual)| {
            let mut r = CheckRecord::new(p, &check, case, expected, actual);
            r.g = g;
            r.t = t;
            r.m = m;
            r
        })
}

proptest! {
    #[test]
    fn modulus_ops_match_wide_arithmetic(
        p in prop_oneof![2u64..1 << 20, (1u64 << 31)..(1 << 33), (1u64 << 60)..=MAX_MODULUS],
        x in any::<u64>(),
        y in any::<u64>(),
        e in 0u64..1 << 20,
    ) {
        let m = Modulus::new(p);
        let (a, b) = (x % p, y % p);
        let wide = |v: u128| (v % p as u128) as u64;
        prop_assert_eq!(m.reduce(x), x % p);
        prop_assert_eq!(m.add(a, b), wide(a as u128 + b as u128));
        prop_assert_eq!(m.sub(a, b), wide(a as u128 + p as u128 - b as u128));
        prop_assert_eq!(m.mul(a, b), wide(a as u128 * b as u128));
        let mut pow = 1u128 % p as u128;
        let mut base = a as u128;
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                pow = pow * base % p as u128;
            }
            base = base * base % p as u128;
            k >>= 1;
        }
        prop_assert_eq!(m.pow(a, e) as u128, pow);
        prop_assert_eq!(m.add(m.neg(a), a), 0);
    }

    #[test]
    fn inverse_is_inverse(p in select(primes_1_mod_4()), x in 1u64..1 << 40) {
        let m = Modulus::new(p);
        let x = x % p;
        prop_assume!(x != 0);
        prop_assert_eq!(m.mul(x, m.inv(x).unwrap()), 1);
    }

    #[test]
    fn quartic_symbol_ignores_fourth_powers(p in select(primes_1_mod_4()), x in 1i64..1 << 30, y in 1i64..1 << 30) {
        prop_assume!(x % p as i64 != 0 && y % p as i64 != 0);
        let y4 = (common::pow_mod(y as u64, 4, p)) as i64;
        let xy4 = (x % p as i64) * y4;
        prop_assert_eq!(quartic_symbol(xy4, p).unwrap(), quartic_symbol(x, p).unwrap());
        prop_assert_eq!(quartic_symbol(y4, p).unwrap(), 1);
    }

    #[test]
    fn decompositions_agree(p in select(primes_1_mod_4())) {
        let (a, b) = decompose(p).unwrap();
        prop_assert_eq!((a, b as i64), common::two_squares(p));
        prop_assert_eq!(decompose_cornacchia(p).unwrap(), (a, b));
        prop_assert_eq!(a * a + 4 * (b * b) as i64, p as i64);
        prop_assert_eq!(a.rem_euclid(4), 3);
    }

    #[test]
    fn sign_of_composition_is_product((a, b, c) in permutations(200)) {
        let ab = perm_sign(&a, &b).unwrap();
        let bc = perm_sign(&b, &c).unwrap();
        prop_assert_eq!(perm_sign(&a, &c).unwrap(), ab * bc);
        prop_assert_eq!(perm_sign(&b, &a).unwrap(), ab);
        prop_assert_eq!(perm_sign(&a, &a).unwrap(), Sign::Plus);
        prop_assert_eq!(i64::from(ab), common::perm_sign_cycles(&a, &b));
    }

    #[test]
    fn inversions_match_quadratic_count(v in proptest::collection::vec(any::<u32>(), 0..300)) {
        let mut naive = 0u64;
        for j in 0..v.len() {
            naive += v[..j].iter().filter(|&&x| x > v[j]).count() as u64;
        }
        let mut sorted = v.clone();
        let mut scratch = Vec::new();
        prop_assert_eq!(count_inversions(&mut sorted, &mut scratch), naive);
        prop_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn sign_exponents_add(a in -1000i64..1000, b in -1000i64..1000) {
        prop_assert_eq!(Sign::from_exponent(a + b), Sign::from_exponent(a) * Sign::from_exponent(b));
        prop_assert_eq!(-Sign::from_exponent(a), Sign::from_exponent(a + 1));
    }

    #[test]
    fn phi2_closed_matches_sum(p in select(primes_1_mod_4()), m in 1i64..1 << 30) {
        prop_assume!(m % p as i64 != 0);
        let ctx = PrimeContext::new(p).unwrap();
        let closed = phi2_closed(m, &ctx).unwrap();
        prop_assert_eq!(phi_k(m, 2, &ctx).unwrap(), closed);
        prop_assert_eq!(common::Field::new(p).jacobsthal((m % p as i64) as u64, 2).0, closed);
        // phi_2 is a class function of the quartic character
        prop_assert_eq!(phi2_closed(m * 16, &ctx).unwrap(), closed);
    }

    #[test]
    fn pair_count_closed_form(p in select(primes_1_mod_8()), t in 1i64..1 << 20) {
        prop_assume!(t % p as i64 != 0);
        let ctx = PrimeContext::new(p).unwrap();
        let sum = n_count(t, &ctx).unwrap() + n_count(-t, &ctx).unwrap();
        prop_assert_eq!(sum as i64, n_sum_closed(t, &ctx).unwrap());
        prop_assert_eq!(n_sum_closed(-t, &ctx).unwrap(), sum as i64);
    }

    #[test]
    fn tau_kernel_matches_merge_sort(p in select(primes_1_mod_8()), k in any::<prop::sample::Index>()) {
        let ctx = PrimeContext::new(p).unwrap();
        let roots = common::primitive_roots(p);
        let g = roots[k.index(roots.len())];
        let kernel = TauKernel::new(&ctx).unwrap();
        prop_assert_eq!(kernel.sign(&ctx, g), sgn_tau_direct(&ctx, g).unwrap());
    }

    #[test]
    fn records_round_trip(recs in proptest::collection::vec(record(), 0..20)) {
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &recs).unwrap();
        prop_assert_eq!(buf.iter().filter(|&&c| c == b'\n').count(), recs.len());
        prop_assert_eq!(&read_jsonl(&buf[..]).unwrap(), &recs);
        let mut csv = Vec::new();
        write_csv(&mut csv, &recs).unwrap();
        prop_assert_eq!(&read_csv(&csv[..]).unwrap(), &recs);
    }
}
