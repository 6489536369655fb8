use deligne::arith::factorial;
use deligne::partitions::{conjugate, hook_dim, lr_coeff, pad, partitions};
use deligne::Partition;
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

#[test]
fn squared_dimensions_sum_to_factorial() {
    for n in 0..=8 {
        let total: BigInt = partitions(n).iter().map(|l| hook_dim(l).pow(2)).sum();
        assert_eq!(total, factorial(n as u64), "n = {n}");
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugation_is_an_involution(l in partition(10)) {
        prop_assert_eq!(conjugate(&conjugate(&l)), l.clone());
        prop_assert_eq!(hook_dim(&conjugate(&l)), hook_dim(&l));
    }

    #[test]
    fn pad_then_strip(l in partition(6), extra in 0usize..6) {
        let n = l.size() + l.first_row() + extra;
        let padded = pad(&l, n).unwrap();
        prop_assert_eq!(padded.size(), n);
        prop_assert_eq!(padded.strip_first_row(), l);
    }

    #[test]
    fn littlewood_richardson_symmetry(lam in partition(8), a in 0usize..=8) {
        let a = a.min(lam.size());
        for mu in partitions(a) {
            for nu in partitions(lam.size() - a) {
                prop_assert_eq!(lr_coeff(&lam, &nu, &mu), lr_coeff(&lam, &mu, &nu));
            }
        }
    }
}

#[test]
fn littlewood_richardson_dimension_count() {
    // dim Ind_{S_a × S_b}^{S_n} (χ_μ ⊠ χ_ν) = binom(n, a) f^μ f^ν.
    for n in 2..=7 {
        for a in 1..n {
            for mu in partitions(a) {
                for nu in partitions(n - a) {
                    let lhs: BigInt = partitions(n)
                        .iter()
                        .map(|l| hook_dim(l) * lr_coeff(l, &mu, &nu))
                        .sum();
                    let rhs = deligne::arith::binomial(n as u64, a as u64)
                        * hook_dim(&mu)
                        * hook_dim(&nu);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
