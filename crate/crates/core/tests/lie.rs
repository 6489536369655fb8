use deligne::arith::{rat, ratio};
use deligne::chars::FiniteSubgroup;
use deligne::lie::{
    build_simple_lie, cartan_dim, gl_obj, gl_super, osp_super, p_super, psl_obj, psl_super,
    q_super, sl_obj, sl_super, so_obj, sp_obj, CartanDim, CartanType, ClassificationDatum, LieKind,
    WittAlgebra,
};
use deligne::partitions::partitions;
use deligne::repst::{index_poly, Engine, RepObject};
use deligne::{Error, Partition, PolyQ};
use num_bigint::BigInt;

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec())
}

/// Objects with at most two simple summands of size at most 2, each with multiplicity 1 or 2.
fn small_objects() -> Vec<RepObject> {
    let labels: Vec<Partition> = (0..=2).flat_map(partitions).collect();
    let mut out = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for ma in 1..=2 {
            out.push(RepObject::from_terms([(a.clone(), ma)]));
            for b in &labels[i + 1..] {
                for mb in 1..=2 {
                    out.push(RepObject::from_terms([(a.clone(), ma), (b.clone(), mb)]));
                }
            }
        }
    }
    out
}

#[test]
fn classical_dimension_identities() {
    let engine = Engine::default();
    for w in small_objects() {
        let d = w.dim_poly().unwrap();
        let gl = gl_obj(&w).unwrap().dim_poly().unwrap();
        assert_eq!(gl, &d * &d);
        assert_eq!(sl_obj(&w).unwrap().dim_poly().unwrap(), &gl - &PolyQ::one());
        let so = so_obj(&w).unwrap().dim_poly().unwrap();
        let sym2 = engine.sym2(&w).unwrap().result.dim_poly().unwrap();
        assert_eq!(&so + &sym2, gl, "W = {w}");
        match sp_obj(&w) {
            Ok(sp) => assert_eq!(&so + &sp.dim_poly().unwrap(), gl),
            Err(e) => assert!(matches!(e, Error::NoInvariantForm(_))),
        }
    }
}

#[test]
fn psl_has_dimension_minus_two() {
    // dim W = t + 1 vanishes at t = -1.
    let w = RepObject::from_terms([(part(&[]), 2), (part(&[1]), 1)]);
    let psl = psl_obj(&w, &rat(-1)).unwrap();
    assert_eq!(psl.dim_poly().unwrap().eval(&rat(-1)), rat(-2));
    assert!(matches!(
        psl_obj(&w, &rat(3)),
        Err(Error::DimensionNonzero(..))
    ));
    // [2] has dimension t(t-3)/2, with roots 0 and 3.
    let v = RepObject::from_terms([(part(&[2]), 2)]);
    for t0 in [rat(0), rat(3)] {
        let psl = psl_obj(&v, &t0).unwrap();
        assert_eq!(psl.dim_poly().unwrap().eval(&t0), rat(-2));
    }
}

#[test]
fn super_dimension_identities() {
    let objects = small_objects();
    for v in objects.iter().take(12) {
        let dv = v.dim_poly().unwrap();
        let p = p_super(v).unwrap().total_dim().unwrap();
        assert_eq!(p, &(&dv * &dv).scale(&rat(2)) - &PolyQ::one());
        let q = q_super(v).unwrap().total_dim().unwrap();
        assert_eq!(q, &(&dv * &dv).scale(&rat(2)) - &PolyQ::from_int(2));
        for w in objects.iter().take(12) {
            let dw = w.dim_poly().unwrap();
            let sum = &dv + &dw;
            let sq = &sum * &sum;
            assert_eq!(gl_super(v, w).unwrap().total_dim().unwrap(), sq);
            assert_eq!(
                sl_super(v, w).unwrap().total_dim().unwrap(),
                &sq - &PolyQ::one()
            );
            if let Ok(osp) = osp_super(v, w) {
                let half = ratio(1, 2);
                let expected = &(&(&(&dv * &dv) - &dv).scale(&half)
                    + &(&(&dw * &dw) + &dw).scale(&half))
                    + &(&dv * &dw);
                assert_eq!(osp.total_dim().unwrap(), expected);
            }
        }
    }
    let one = RepObject::from_terms([(part(&[]), 1)]);
    let s = psl_super(
        &RepObject::simple(part(&[1])),
        &RepObject::simple(part(&[1])),
        &rat(7),
    )
    .unwrap();
    assert_eq!(s.total_dim().unwrap().eval(&rat(7)), rat(6 * 6 * 4 - 2));
    let g = gl_super(&one, &one).unwrap();
    assert_eq!(g.even, RepObject::from_terms([(part(&[]), 2)]));
    assert_eq!(g.odd, RepObject::from_terms([(part(&[]), 2)]));
}

#[test]
fn induced_dimension_is_index_times_inner_dimension() {
    let h = FiniteSubgroup::symmetric(2);
    let mut built = 0;
    for kind in [LieKind::Sl, LieKind::So, LieKind::Gl] {
        for v in small_objects().into_iter().take(6) {
            let datum = ClassificationDatum::new(h.clone(), kind, v.clone());
            let lie = match build_simple_lie(&datum) {
                Ok(l) => l,
                Err(_) => continue,
            };
            let inner = lie.inner_even.dim_poly().unwrap();
            assert_eq!(lie.dim, &index_poly(2, 2) * &inner, "{kind:?} on {v}");
            built += 1;
        }
    }
    assert!(built >= 10, "only {built} data built");
}

#[test]
fn witt_algebras() {
    for p in [5, 7] {
        let w = WittAlgebra::new(p).unwrap();
        assert_eq!(w.dim(), p as usize);
        assert_eq!(
            cartan_dim(CartanType::W, 1, &[1], p).unwrap(),
            CartanDim::Exact(BigInt::from(p))
        );
        assert!(w.check_antisymmetry());
        assert!(w.check_jacobi());
    }
    assert!(WittAlgebra::new(5)
        .unwrap()
        .proper_ideal_witness()
        .is_none());
}
