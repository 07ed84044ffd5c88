use cubic_residue::arith::is_prime;
use cubic_residue::characters::{build_character, char_sum, gauss_sum};
use cubic_residue::representations::{solve_4p, solve_norm_form, split_rational_prime};
use cubic_residue::solvability::{cubic2_full, cubic2_oracle};
use cubic_residue::symbols::{cubic_symbol, legendre};
use cubic_residue::EisensteinInt;
use proptest::prelude::*;

fn split_prime() -> impl Strategy<Value = u64> {
    (7u64..50_000).prop_filter_map("split prime", |n| (n % 3 == 1 && is_prime(n)).then_some(n))
}

fn small_eis() -> impl Strategy<Value = EisensteinInt> {
    (-10_000i64..10_000, -10_000i64..10_000).prop_map(|(a, b)| EisensteinInt::new(a, b))
}

proptest! {
    #[test]
    fn symbol_is_multiplicative(p in split_prime(), x in small_eis(), y in small_eis()) {
        let (pi, _) = split_rational_prime(p).unwrap();
        let lhs = cubic_symbol(x * y, pi).unwrap();
        let rhs = cubic_symbol(x, pi).unwrap() * cubic_symbol(y, pi).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symbol_of_a_cube_is_one(p in split_prime(), x in small_eis()) {
        let (pi, _) = split_rational_prime(p).unwrap();
        prop_assume!(!pi.divides(x).unwrap());
        prop_assert!(cubic_symbol(x * x * x, pi).unwrap().is_one());
    }

    #[test]
    fn representations_are_consistent(p in split_prime()) {
        let nf = solve_norm_form(p).unwrap();
        prop_assert_eq!(nf.value(), p as i128);
        let (pi, pi_bar) = split_rational_prime(p).unwrap();
        prop_assert_eq!(pi * pi_bar, EisensteinInt::from_int(p as i64));
        prop_assert_eq!(solve_4p(p).unwrap().value(), 4 * p as i128);
    }

    #[test]
    fn verdict_routes_agree(p in split_prime()) {
        let v = cubic2_full(p).unwrap();
        prop_assert!(v.consistent());
        prop_assert_eq!(v.root, cubic2_oracle(p).unwrap());
    }

    #[test]
    fn legendre_is_multiplicative(p in (3u64..20_000).prop_filter("prime", |&n| is_prime(n)), a in -500i64..500, b in -500i64..500) {
        prop_assert_eq!(legendre(a * b, p).unwrap(), legendre(a, p).unwrap() * legendre(b, p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gauss_sums_have_absolute_value_sqrt_p(p in (3u64..3000).prop_filter("prime", |&n| is_prime(n)), k in 2u64..7) {
        prop_assume!((p - 1) % k == 0);
        let chi = build_character(p, k).unwrap();
        prop_assert!(char_sum(&chi).is_zero());
        prop_assert!((gauss_sum(&chi, 1).norm_sqr() - p as f64).abs() < 1e-8 * p as f64);
    }
}
