use deligne::arith::bell;
use deligne::diagrams::{basis, finite_hom_dim, gram_pairing, hom_dim, SetPartitionDiagram};
use deligne::linalg::poly_det;
use num_bigint::BigInt;
use proptest::prelude::*;

/// A random basis diagram in `P_{n,m}`.
fn diagram(n: usize, m: usize) -> impl Strategy<Value = SetPartitionDiagram> {
    let all = basis(n, m);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

#[test]
fn basis_sizes_are_bell_numbers() {
    for n in 0..=4 {
        for m in 0..=4 {
            assert_eq!(BigInt::from(basis(n, m).len()), bell(n + m));
            assert_eq!(hom_dim(n, m), bell(n + m));
        }
    }
}

#[test]
fn composition_is_associative_in_rank_two() {
    let b = basis(2, 2);
    assert_eq!(b.len(), 15);
    for x in &b {
        for y in &b {
            let (l1, xy) = x.compose_basis(y).unwrap();
            for z in &b {
                let (l2, left) = xy.compose_basis(z).unwrap();
                let (l3, yz) = y.compose_basis(z).unwrap();
                let (l4, right) = x.compose_basis(&yz).unwrap();
                assert_eq!((l1 + l2, &left), (l3 + l4, &right));
            }
        }
    }
}

#[test]
fn identity_is_neutral() {
    for n in 0..=3 {
        for m in 0..=3 {
            for d in basis(n, m) {
                let id_n = SetPartitionDiagram::identity(n);
                let id_m = SetPartitionDiagram::identity(m);
                assert_eq!(d.compose_basis(&id_n).unwrap(), (0, d.clone()));
                assert_eq!(id_m.compose_basis(&d).unwrap(), (0, d.clone()));
            }
        }
    }
}

#[test]
fn gram_determinants_are_nonzero() {
    for n in 0..=3 {
        let g = gram_pairing(n).unwrap();
        assert!(!poly_det(&g).is_zero(), "n = {n}");
    }
}

#[test]
fn finite_hom_dims_count_diagrams() {
    // Diagrams with at most N blocks index a basis of Hom_{S_N}(X^{⊗n}, X^{⊗m}).
    for n in 0..=3 {
        for m in 0..=3 {
            for big_n in 1..=n + m + 2 {
                let count = basis(n, m)
                    .iter()
                    .filter(|d| d.num_blocks() <= big_n)
                    .count();
                assert_eq!(
                    finite_hom_dim(n, m, big_n),
                    BigInt::from(count),
                    "{n} {m} {big_n}"
                );
            }
        }
    }
}

fn interchange_case() -> impl Strategy<
    Value = (
        SetPartitionDiagram,
        SetPartitionDiagram,
        SetPartitionDiagram,
        SetPartitionDiagram,
    ),
> {
    // a: P_{q1,r1}, c: P_{p1,q1}, b: P_{q2,r2}, d: P_{p2,q2}.
    (
        0usize..=2,
        0usize..=2,
        0usize..=2,
        0usize..=2,
        0usize..=2,
        0usize..=2,
    )
        .prop_filter("total size at most 6", |(p1, q1, r1, p2, q2, r2)| {
            p1 + r1 + p2 + r2 + q1 + q2 <= 6
        })
        .prop_flat_map(|(p1, q1, r1, p2, q2, r2)| {
            (
                diagram(q1, r1),
                diagram(q2, r2),
                diagram(p1, q1),
                diagram(p2, q2),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn interchange_law((a, b, c, d) in interchange_case()) {
        let (l, lhs) = a.tensor(&b).compose_basis(&c.tensor(&d)).unwrap();
        let (l1, ac) = a.compose_basis(&c).unwrap();
        let (l2, bd) = b.compose_basis(&d).unwrap();
        prop_assert_eq!((l, lhs), (l1 + l2, ac.tensor(&bd)));
    }

    #[test]
    fn dual_reverses_composition(
        (x, y) in (0usize..=3, 0usize..=3, 0usize..=3)
            .prop_flat_map(|(n, k, m)| (diagram(k, m), diagram(n, k)))
    ) {
        let (l, xy) = x.compose_basis(&y).unwrap();
        let (l_dual, yx) = y.dual().compose_basis(&x.dual()).unwrap();
        prop_assert_eq!((l, xy.dual()), (l_dual, yx));
        prop_assert_eq!(x.dual().dual(), x);
    }
}
