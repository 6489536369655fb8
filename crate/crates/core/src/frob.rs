//! Commutative (Frobenius) algebras in `Rep(S_t)` and tensor functors
//! `Rep(S_t) → Rep(S_{t'})`.
//!
//! Simple commutative algebras are `Ind^{S_t}_{S_{t-j}×H}(1)` of dimension
//! `C(t, j)·j!/|H|`. A functor with source `t` exists iff `t = f(t')` for a
//! nonnegative integer combination `f` of binomial coefficients, which for a
//! rational non-integer `t' = r/s` means `t ∈ Z[1/s]`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{binom_poly, factorial, Int, PolyQ, Rational};
use crate::chars::FiniteSubgroup;
use crate::error::{Error, Result};
use crate::oracle::{subgroups_of_sj, ConcreteAlgebra};
use crate::repst::{index_poly, Engine, HBiObject, RepObject};

/// `C(t, j) · j!/|H|`.
pub fn comm_alg_dim(j: usize, h: &FiniteSubgroup) -> Result<PolyQ> {
    if h.j != j {
        return Err(Error::NotSubgroup(format!(
            "{h} is not a subgroup of S_{j}"
        )));
    }
    Ok(index_poly(j, h.order()))
}

/// `Ind^{S_t}_{S_{t-j}×H}(1)` as an object.
pub fn comm_alg_object(j: usize, h: &FiniteSubgroup) -> Result<RepObject> {
    comm_alg_dim(j, h)?;
    let unit = HBiObject::trivial_action(h.clone(), &RepObject::unit());
    Ok(Engine::default().induce(&unit)?.result)
}

/// A semisimple commutative algebra: a multiset of simple summands `(j, H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebraDatum {
    pub summands: Vec<(usize, FiniteSubgroup)>,
}

impl CommAlgebraDatum {
    pub fn dim_poly(&self) -> Result<PolyQ> {
        let mut acc = PolyQ::zero();
        for (j, h) in &self.summands {
            acc = &acc + &comm_alg_dim(*j, h)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for CommAlgebraDatum {
    /// `{(1, 1), (2, <(1 2)>)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(j, h)| format!("({j}, {h})"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// An element `Σ a_k C(t, k)` of the cone `R_+`, `a_k ≥ 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BinomialCone {
    pub coeffs: BTreeMap<usize, u64>,
}

impl BinomialCone {
    pub fn poly(&self) -> PolyQ {
        self.coeffs
            .iter()
            .map(|(&k, &a)| binom_poly(k).scale(&Rational::from_integer(Int::from(a))))
            .sum()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .map(|(&k, &a)| binom_at(t, k) * Rational::from_integer(Int::from(a)))
            .fold(Rational::zero(), |x, y| x + y)
    }
}

impl fmt::Display for BinomialCone {
    /// `C(t,2) + 3*C(t,0)`; the empty combination prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(k, a)| {
                if *a == 1 {
                    format!("C(t,{k})")
                } else {
                    format!("{a}*C(t,{k})")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `C(t, k)` for rational `t`.
fn binom_at(t: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (t - Rational::from_integer(Int::from(i)))
            / Rational::from_integer(Int::from(i + 1));
    }
    acc
}

/// `C(t, i)·C(t, j) = Σ a_k C(t, k)`, where `a_k` is the coefficient of
/// `zⁱ wʲ` in `(z + w + zw)^k`. The identity is checked as polynomials.
pub fn binom_product_expand(i: usize, j: usize) -> BinomialCone {
    let mut coeffs = BTreeMap::new();
    for c in 0..=i.min(j) {
        // z^{i-c} w^{j-c} (zw)^c from k = i + j - c factors.
        let k = i + j - c;
        let a = factorial(k as u64)
            / (factorial((i - c) as u64) * factorial((j - c) as u64) * factorial(c as u64));
        coeffs.insert(k, a.to_u64().expect("small coefficient"));
    }
    let cone = BinomialCone { coeffs };
    assert_eq!(
        cone.poly(),
        &binom_poly(i) * &binom_poly(j),
        "binomial product identity"
    );
    cone
}

/// Whether `x ∈ Z[1/s]` for `t' = r/s` in lowest terms: every prime factor
/// of the reduced denominator of `x` divides `s`.
pub fn zinvs_member(t_prime: &Rational, x: &Rational) -> bool {
    let s = t_prime.denom().clone();
    let mut d = x.denom().clone();
    loop {
        let g = d.gcd(&s);
        if g.is_one() {
            break;
        }
        while (&d % &g).is_zero() {
            d /= &g;
        }
    }
    d.is_one()
}

/// How a functor-existence answer was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecisionMode {
    /// `t'` is a rational non-integer: membership in `Z[1/s]`.
    DenominatorTest,
    /// `t'` is a negative integer: `R_+(t') = Z`.
    IntegerTest,
}

impl fmt::Display for DecisionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecisionMode::DenominatorTest => "decision: Z[1/s] membership",
            DecisionMode::IntegerTest => "decision: integrality",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorDecision {
    pub exists: bool,
    pub mode: DecisionMode,
    /// An explicit `f ∈ R_+` with `f(t') = t`, when the bounded search finds one.
    pub witness: Option<BinomialCone>,
}

/// Bounds for the witness search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessBounds {
    pub max_degree: usize,
    pub max_coeff: u64,
}

impl Default for WitnessBounds {
    fn default() -> Self {
        WitnessBounds {
            max_degree: 6,
            max_coeff: 3,
        }
    }
}

/// The first `f = Σ a_k C(t, k)` with `f(t') = t`, searching by increasing
/// top degree, then lexicographically in `(a_0, a_1, ...)`.
pub fn search_witness(
    t_src: &Rational,
    t_tgt: &Rational,
    bounds: WitnessBounds,
) -> Option<BinomialCone> {
    let cap = bounds.max_coeff;
    if t_src.is_zero() {
        return Some(BinomialCone::default());
    }
    let values: Vec<Rational> = (0..=bounds.max_degree)
        .map(|k| binom_at(t_tgt, k))
        .collect();
    for d in 0..=bounds.max_degree {
        let lower = (cap + 1).pow(d as u32);
        for code in 0..lower * cap {
            // a_d is the least significant digit and runs over 1..=cap.
            let mut a = vec![0u64; d + 1];
            a[d] = code % cap + 1;
            let mut rest = code / cap;
            for k in (0..d).rev() {
                a[k] = rest % (cap + 1);
                rest /= cap + 1;
            }
            let v = a
                .iter()
                .zip(&values)
                .map(|(&x, b)| b * Rational::from_integer(Int::from(x)))
                .fold(Rational::zero(), |x, y| x + y);
            if &v == t_src {
                let coeffs = a
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(k, &x)| (k, x))
                    .collect();
                return Some(BinomialCone { coeffs });
            }
        }
    }
    None
}

/// Whether a symmetric tensor functor `Rep(S_{t_src}) → Rep(S_{t_tgt})`
/// exists, for `t_tgt ∉ Z_{≥0}`.
pub fn functor_exists(t_src: &Rational, t_tgt: &Rational) -> Result<FunctorDecision> {
    functor_exists_bounded(t_src, t_tgt, WitnessBounds::default())
}

pub fn functor_exists_bounded(
    t_src: &Rational,
    t_tgt: &Rational,
    bounds: WitnessBounds,
) -> Result<FunctorDecision> {
    let (exists, mode) = if !t_tgt.is_integer() {
        (zinvs_member(t_tgt, t_src), DecisionMode::DenominatorTest)
    } else if t_tgt.is_negative() {
        (t_src.is_integer(), DecisionMode::IntegerTest)
    } else {
        return Err(Error::UnsupportedTarget(format!(
            "t' = {t_tgt} is a nonnegative integer; only t' ∉ Z_{{≥0}} is decided"
        )));
    };
    let witness = search_witness(t_src, t_tgt, bounds);
    if witness.is_some() && !exists {
        return Err(Error::VerificationFailure(format!(
            "found a witness for {t_src} at {t_tgt} although the decision says no"
        )));
    }
    Ok(FunctorDecision {
        exists,
        mode,
        witness,
    })
}

pub const DEFAULT_MAX_SUMMANDS: usize = 4;
pub const FUNCTOR_J_BOUND: usize = 5;

/// Semisimple commutative algebras in `Rep(S_{t_tgt})` of dimension `t_src`
/// with summands `(j ≤ j_max, H)` (one `H` per conjugacy class) and at most
/// [`DEFAULT_MAX_SUMMANDS`] summands. Each corresponds to a tensor functor
/// `Rep(S_{t_src}) → Rep(S_{t_tgt})`.
pub fn enumerate_frobenius_functors(
    t_src: &Rational,
    t_tgt: &Rational,
    j_max: usize,
) -> Result<Vec<CommAlgebraDatum>> {
    enumerate_frobenius_functors_bounded(t_src, t_tgt, j_max, DEFAULT_MAX_SUMMANDS)
}

/// Summands are listed in the order of `(j, H)` with `H` as in
/// [`subgroups_of_sj`]; data come out in lexicographic order of those lists.
pub fn enumerate_frobenius_functors_bounded(
    t_src: &Rational,
    t_tgt: &Rational,
    j_max: usize,
    max_summands: usize,
) -> Result<Vec<CommAlgebraDatum>> {
    if j_max > FUNCTOR_J_BOUND {
        return Err(Error::BoundExceeded(format!(
            "j_max = {j_max} > {FUNCTOR_J_BOUND}"
        )));
    }
    let mut atoms: Vec<(usize, FiniteSubgroup, Rational)> = Vec::new();
    for j in 0..=j_max {
        for h in subgroups_of_sj(j)? {
            let v = comm_alg_dim(j, &h)?.eval(t_tgt);
            atoms.push((j, h, v));
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        atoms: &[(usize, FiniteSubgroup, Rational)],
        start: usize,
        left: usize,
        sum: Rational,
        target: &Rational,
        chosen: &mut Vec<usize>,
        out: &mut Vec<CommAlgebraDatum>,
    ) {
        if !chosen.is_empty() && &sum == target {
            out.push(CommAlgebraDatum {
                summands: chosen
                    .iter()
                    .map(|&i| (atoms[i].0, atoms[i].1.clone()))
                    .collect(),
            });
        }
        if left == 0 {
            return;
        }
        for i in start..atoms.len() {
            chosen.push(i);
            rec(atoms, i, left - 1, &sum + &atoms[i].2, target, chosen, out);
            chosen.pop();
        }
    }
    rec(
        &atoms,
        0,
        max_summands,
        Rational::zero(),
        t_src,
        &mut chosen,
        &mut out,
    );
    Ok(out)
}

/// Whether `Tr ∘ μ` is non-degenerate on a commutative unital algebra.
pub fn frobenius_predicate(a: &ConcreteAlgebra) -> Result<bool> {
    let n = a.dim();
    for x in 0..n {
        for y in 0..n {
            let (ex, ey) = (a.basis_vector(x), a.basis_vector(y));
            if a.mul(&ex, &ey) != a.mul(&ey, &ex) {
                return Err(Error::NotAnAlgebra(format!(
                    "{} and {} do not commute",
                    a.labels[x], a.labels[y]
                )));
            }
        }
    }
    if n > 0 && a.unit().is_none() {
        return Err(Error::NotAnAlgebra("no unit element".into()));
    }
    Ok(a.trace_form().rank() == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::oracle::{fun_g_algebra, Sparse};

    fn h(s: &str, j: usize) -> FiniteSubgroup {
        FiniteSubgroup::parse(s, Some(j)).unwrap()
    }

    #[test]
    fn simple_algebra_dims() {
        assert_eq!(
            comm_alg_dim(0, &FiniteSubgroup::trivial(0)).unwrap(),
            PolyQ::one()
        );
        assert_eq!(comm_alg_dim(2, &h("S2", 2)).unwrap(), binom_poly(2));
        assert_eq!(
            comm_alg_dim(3, &h("A3", 3)).unwrap(),
            binom_poly(3).scale(&rat(2))
        );
        assert!(matches!(
            comm_alg_dim(3, &h("S2", 2)),
            Err(Error::NotSubgroup(_))
        ));
        assert_eq!(
            comm_alg_object(1, &h("1", 1)).unwrap(),
            "{[]:1,[1]:1}".parse().unwrap()
        );
        assert_eq!(
            comm_alg_object(2, &h("S2", 2)).unwrap(),
            "{[]:1,[1]:1,[2]:1}".parse().unwrap()
        );
    }

    #[test]
    fn product_expansion() {
        let c = binom_product_expand(1, 1);
        assert_eq!(c.coeffs, BTreeMap::from([(1, 1), (2, 2)]));
        assert_eq!(binom_product_expand(0, 3).coeffs, BTreeMap::from([(3, 1)]));
        assert_eq!(
            binom_product_expand(2, 1).coeffs,
            BTreeMap::from([(2, 2), (3, 3)])
        );
        assert_eq!(c.to_string(), "2*C(t,2) + C(t,1)");
    }

    #[test]
    fn denominators() {
        assert!(zinvs_member(&ratio(1, 2), &ratio(5, 8)));
        assert!(!zinvs_member(&ratio(1, 2), &ratio(1, 3)));
        assert!(zinvs_member(&ratio(1, 2), &rat(-7)));
        assert!(zinvs_member(&ratio(5, 6), &ratio(1, 12)));
        assert!(!zinvs_member(&ratio(5, 6), &ratio(1, 10)));
    }

    #[test]
    fn functors() {
        let d = functor_exists(&ratio(-1, 8), &ratio(1, 2)).unwrap();
        assert!(d.exists);
        assert_eq!(d.witness.unwrap().coeffs, BTreeMap::from([(2, 1)]));
        assert!(!functor_exists(&ratio(1, 3), &ratio(1, 2)).unwrap().exists);
        let d = functor_exists(&ratio(1, 2), &rat(-2)).unwrap();
        assert!(!d.exists);
        assert_eq!(d.mode, DecisionMode::IntegerTest);
        assert!(matches!(
            functor_exists(&rat(1), &rat(3)),
            Err(Error::UnsupportedTarget(_))
        ));
    }

    #[test]
    fn enumeration() {
        let t = ratio(1, 2);
        let same = enumerate_frobenius_functors(&t, &t, 2).unwrap();
        assert!(same
            .iter()
            .any(|d| d.summands == vec![(1, FiniteSubgroup::trivial(1))]));
        let sq = &t * &t;
        let listed = enumerate_frobenius_functors(&sq, &t, 2).unwrap();
        let want = vec![
            (1, FiniteSubgroup::trivial(1)),
            (2, FiniteSubgroup::trivial(2)),
        ];
        assert!(listed.iter().any(|d| d.summands == want));
        for d in &listed {
            assert_eq!(d.dim_poly().unwrap().eval(&t), sq);
        }
        assert!(enumerate_frobenius_functors(&ratio(1, 3), &t, 2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn frobenius_forms() {
        let coset = fun_g_algebra(4, &h("S3", 3), 1, None).unwrap();
        assert!(frobenius_predicate(&coset).unwrap());
        assert!(coset.trace_form().is_identity());
        assert!(frobenius_predicate(&coset.direct_sum(&coset).unwrap()).unwrap());
        // Q[ε]/ε²: basis 1, ε.
        let one = |k: usize| -> Sparse { vec![(k, rat(1))] };
        let mult = vec![vec![one(0), one(1)], vec![one(1), Vec::new()]];
        let dual = ConcreteAlgebra::new(vec!["1".into(), "e".into()], mult, Vec::new()).unwrap();
        assert!(!frobenius_predicate(&dual).unwrap());
    }
}
