use deligne::arith::{binom_poly, factorial, rat, ratio};
use deligne::frob::{
    binom_product_expand, comm_alg_dim, enumerate_frobenius_functors, frobenius_predicate,
    functor_exists, search_witness, zinvs_member, DecisionMode, WitnessBounds,
};
use deligne::oracle::{fun_g_algebra, subgroups_of_sj};
use deligne::{FiniteSubgroup, Rational};
use proptest::prelude::*;

#[test]
fn binomial_products_expand_with_nonnegative_coefficients() {
    for i in 0..=6 {
        for j in 0..=6 {
            let cone = binom_product_expand(i, j);
            assert_eq!(
                cone.poly(),
                &binom_poly(i) * &binom_poly(j),
                "C(t,{i})·C(t,{j})"
            );
            // The top term is C(t, i+j) with coefficient (i+j)!/(i!j!).
            let top = factorial((i + j) as u64) / (factorial(i as u64) * factorial(j as u64));
            assert_eq!(num_bigint::BigInt::from(cone.coeffs[&(i + j)]), top);
        }
    }
}

#[test]
fn simple_algebra_dimensions_are_coset_counts() {
    for j in 0..=3 {
        for h in subgroups_of_sj(j).unwrap() {
            let p = comm_alg_dim(j, &h).unwrap();
            for n in j..=10 {
                let index = factorial(n as u64)
                    / (factorial((n - j) as u64) * num_bigint::BigInt::from(h.order()));
                assert_eq!(
                    p.eval_int(n as i64),
                    Rational::from_integer(index),
                    "j = {j}, H = {h}"
                );
            }
        }
    }
}

#[test]
fn enumerated_functors_have_the_right_dimension() {
    let cases = [
        (ratio(-1, 8), ratio(1, 2)),
        (ratio(1, 4), ratio(1, 2)),
        (ratio(3, 4), ratio(1, 2)),
        (ratio(1, 3), ratio(1, 3)),
        (ratio(-2, 9), ratio(-1, 3)),
    ];
    for (src, tgt) in cases {
        let found = enumerate_frobenius_functors(&src, &tgt, 3).unwrap();
        assert!(!found.is_empty(), "{src} from {tgt}");
        for datum in found {
            assert_eq!(datum.dim_poly().unwrap().eval(&tgt), src, "{datum}");
        }
    }
}

#[test]
fn functor_decisions() {
    let d = functor_exists(&ratio(-1, 8), &ratio(1, 2)).unwrap();
    assert!(d.exists);
    assert_eq!(d.mode, DecisionMode::DenominatorTest);
    assert_eq!(d.witness.unwrap().to_string(), "C(t,2)");
    assert!(!functor_exists(&ratio(1, 2), &rat(-2)).unwrap().exists);
    assert_eq!(
        functor_exists(&rat(5), &rat(-2)).unwrap().mode,
        DecisionMode::IntegerTest
    );
    assert!(!functor_exists(&ratio(1, 3), &ratio(1, 2)).unwrap().exists);
}

#[test]
fn commutative_oracle_algebras_are_frobenius() {
    for n in 1..=4 {
        for h in subgroups_of_sj(n.min(3)).unwrap() {
            let a = fun_g_algebra(n, &h, 1, None).unwrap();
            assert!(frobenius_predicate(&a).unwrap(), "N = {n}, G = {h}");
        }
    }
    let noncommutative = fun_g_algebra(2, &FiniteSubgroup::symmetric(2), 2, None).unwrap();
    assert!(frobenius_predicate(&noncommutative).is_err());
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn membership_is_sound(t_prime in small_rational(), x in small_rational()) {
        let bounds = WitnessBounds { max_degree: 4, max_coeff: 2 };
        if let Some(w) = search_witness(&x, &t_prime, bounds) {
            prop_assert_eq!(w.eval(&t_prime), x.clone());
            if !t_prime.is_integer() {
                prop_assert!(zinvs_member(&t_prime, &x));
            }
        }
    }
}
