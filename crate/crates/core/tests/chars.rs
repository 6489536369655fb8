use std::collections::BTreeMap;

use deligne::arith::rat;
use deligne::chars::{
    alt2, assemble, character, decompose, inner_product, mn_character, sym2, z_rho, SymClasses,
};
use deligne::oracle::subgroups_of_sj;
use deligne::partitions::partitions;
use deligne::{ClassFunction, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn column_orthogonality() {
    for n in 0..=7 {
        let types = &SymClasses::of(n).types;
        for rho in types {
            for sigma in types {
                let s: BigInt = partitions(n)
                    .iter()
                    .map(|l| mn_character(l, rho).unwrap() * mn_character(l, sigma).unwrap())
                    .sum();
                let expected = if rho == sigma {
                    z_rho(rho)
                } else {
                    BigInt::zero()
                };
                assert_eq!(s, expected, "n = {n}, {rho} vs {sigma}");
            }
        }
    }
}

#[test]
fn row_orthogonality() {
    for n in 1..=6 {
        for a in partitions(n) {
            for b in partitions(n) {
                let ip = inner_product(&character(&a), &character(&b)).unwrap();
                assert_eq!(ip, rat(i64::from(a == b)));
            }
        }
    }
}

#[test]
fn reciprocity_for_every_subgroup() {
    for j in 1..=4 {
        for h in subgroups_of_sj(j).unwrap() {
            let table = h.rational_table();
            let order = rat(h.order() as i64);
            for i in 0..table.len() {
                let phi = table.elementwise(i);
                let induced = h.induce(&phi).unwrap();
                for lam in partitions(j) {
                    let chi = character(&lam);
                    let upstairs = inner_product(&induced, &chi).unwrap();
                    let downstairs: Rational = h
                        .elements()
                        .iter()
                        .zip(&phi)
                        .map(|(g, f)| f * chi.value(&g.cycle_type()).unwrap())
                        .fold(Rational::zero(), |a, x| a + x)
                        / &order;
                    assert_eq!(upstairs, downstairs, "H = {h}, φ_{i}, λ = {lam}");
                }
            }
        }
    }
}

fn mults(n: usize) -> impl Strategy<Value = BTreeMap<deligne::Partition, i64>> {
    let all = partitions(n);
    prop::collection::vec(0i64..4, all.len()).prop_map(move |ms| {
        all.iter()
            .cloned()
            .zip(ms)
            .filter(|(_, m)| *m > 0)
            .collect()
    })
}

fn any_character() -> impl Strategy<Value = ClassFunction> {
    (1usize..=6)
        .prop_flat_map(mults)
        .prop_filter_map("nonzero", |m| {
            let n = m.keys().next()?.size();
            Some(assemble(n, &m))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decompose_inverts_assemble((n, m) in (1usize..=7).prop_flat_map(|n| (Just(n), mults(n)))) {
        let f = assemble(n, &m);
        prop_assert_eq!(decompose(&f).unwrap(), m);
    }

    #[test]
    fn symmetric_and_exterior_squares_sum_to_the_square(f in any_character()) {
        let total = sym2(&f).add(&alt2(&f)).unwrap();
        prop_assert_eq!(total, f.mul(&f).unwrap());
    }
}
