use deligne::arith::bell;
use deligne::oracle::subgroups_of_sj;
use deligne::partitions::{hook_dim, pad, partitions};
use deligne::repst::{
    decompose_power, dim_poly, index_poly, induce, restrict, tensor_decompose, Engine, HBiObject,
    RepObject,
};
use deligne::{Partition, PolyQ, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_object(max_size: usize) -> impl Strategy<Value = RepObject> {
    let pool: Vec<Partition> = (0..=max_size).flat_map(partitions).collect();
    prop::collection::vec((0..pool.len(), 1u64..=2), 1..=2).prop_map(move |picks| {
        RepObject::from_terms(picks.into_iter().map(|(i, m)| (pool[i].clone(), m)))
    })
}

#[test]
fn powers_have_dimension_t_to_the_m() {
    for m in 0..=5 {
        let p = decompose_power(m).unwrap();
        assert_eq!(p.dim_poly().unwrap(), PolyQ::t().pow(m as u32), "m = {m}");
    }
}

#[test]
fn power_multiplicities_square_to_bell() {
    for m in 0..=4 {
        let p = decompose_power(m).unwrap();
        let s: u64 = p.terms().values().map(|k| k * k).sum();
        assert_eq!(BigInt::from(s), bell(2 * m), "m = {m}");
    }
}

#[test]
fn dimensions_interpolate_hook_lengths() {
    for size in 0..=5 {
        for l in partitions(size) {
            let p = dim_poly(&l).unwrap();
            for n in l.first_row() + size..=25 {
                let expected = Rational::from_integer(hook_dim(&pad(&l, n).unwrap()));
                assert_eq!(p.eval_int(n as i64), expected, "{l} at {n}");
            }
        }
    }
}

#[test]
fn induction_scales_dimension_by_the_index() {
    let cases = [
        (1, part(&[])),
        (2, part(&[1])),
        (2, part(&[])),
        (3, part(&[])),
    ];
    for (j, nu) in cases {
        for h in subgroups_of_sj(j).unwrap() {
            for label in 0..h.rational_table().len() {
                let mut w = HBiObject::new(h.clone());
                w.add(nu.clone(), label, 1);
                let induced = induce(&w).unwrap();
                let expected = &w.dim_poly().unwrap() * &index_poly(j, h.order());
                assert_eq!(induced.dim_poly().unwrap(), expected, "H = {h}, ψ_{label}");
            }
        }
    }
}

#[test]
fn start_rank_does_not_matter() {
    let a = RepObject::from_terms([(part(&[1]), 1), (part(&[2]), 1)]);
    let b = RepObject::from_terms([(part(&[1, 1]), 2)]);
    let base = Engine::default();
    for offset in [1, 3, 6] {
        let e = base.with_offset(offset);
        assert_eq!(
            e.tensor(&a, &b).unwrap().result,
            base.tensor(&a, &b).unwrap().result
        );
        assert_eq!(
            e.restrict(&a, 2).unwrap().result,
            base.restrict(&a, 2).unwrap().result
        );
        assert_eq!(e.power(3).unwrap().result, base.power(3).unwrap().result);
    }
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tensor_is_commutative_and_multiplies_dimensions(a in small_object(3), b in small_object(3)) {
        let ab = tensor_decompose(&a, &b).unwrap();
        prop_assert_eq!(&ab, &tensor_decompose(&b, &a).unwrap());
        prop_assert_eq!(ab.dim_poly().unwrap(), &a.dim_poly().unwrap() * &b.dim_poly().unwrap());
    }

    #[test]
    fn tensor_is_associative(a in small_object(2), b in small_object(2), c in small_object(2)) {
        let left = tensor_decompose(&tensor_decompose(&a, &b).unwrap(), &c).unwrap();
        let right = tensor_decompose(&a, &tensor_decompose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn restriction_preserves_dimension(v in small_object(3), k in 0usize..=3) {
        let r = restrict(&v, k).unwrap();
        prop_assert_eq!(r.k, k);
        prop_assert_eq!(r.dim_poly().unwrap(), v.dim_poly().unwrap());
    }
}

#[test]
fn closed_restriction_formula_against_stabilization() {
    // Read as plain semistandard counts, the closed formula agrees with the
    // stabilized restriction when the S_k factor is trivial and over-counts
    // otherwise, since it drops the lattice-word condition.
    let found = deligne::repst::restriction_formula_discrepancies(4, 3).unwrap();
    assert_eq!(found.len(), 116);
    for d in &found {
        assert!(d.mu.len() > 1, "{} / {} with {}", d.lambda, d.nu, d.mu);
        assert!(d.formula > d.stabilized);
    }
}
