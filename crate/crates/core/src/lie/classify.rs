use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::equivariant::{hadd, hmult, hscale, remove_units};
use super::{Exceptional, LieKind};
use crate::arith::{rat, rational_roots, PolyQ, Rational};
use crate::chars::FiniteSubgroup;
use crate::error::{Error, Result};
use crate::oracle::subgroups_of_sj;
use crate::partitions::{partitions, Partition};
use crate::repst::{index_poly, Engine, HBiObject, RepObject};

/// For each `λ` in the support of an inner object, the Q-irreducible
/// characters of `H` (by index) whose sum is the `H`-module structure on the
/// multiplicity space of `𝒳(λ)`. Degrees must add up to the multiplicity.
pub type Action = BTreeMap<Partition, Vec<usize>>;

/// Data for a simple Lie (super)algebra `Ind^{S_t}_{S_{t-j}×H}(h)` with `h`
/// built from `V` (and `W` for `(V|W)` kinds) in `Rep(S_{t-j}) ⊠ Rep(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationDatum {
    pub j: usize,
    pub h: FiniteSubgroup,
    pub kind: LieKind,
    pub v: RepObject,
    pub w: Option<RepObject>,
    pub action_v: Action,
    pub action_w: Option<Action>,
    /// The value of `t` at which `psl` kinds are taken; `None` for the others
    /// (and for `psl(V|W)` when the dimensions agree identically).
    pub t0: Option<Rational>,
}

pub fn trivial_action(v: &RepObject) -> Action {
    v.terms()
        .iter()
        .map(|(l, &m)| (l.clone(), vec![0; m as usize]))
        .collect()
}

impl ClassificationDatum {
    /// A datum with trivial `H`-actions.
    pub fn new(h: FiniteSubgroup, kind: LieKind, v: RepObject) -> Self {
        let action_v = trivial_action(&v);
        ClassificationDatum {
            j: h.j,
            h,
            kind,
            v,
            w: None,
            action_v,
            action_w: None,
            t0: None,
        }
    }

    /// `h = dim·1` for an exceptional type.
    pub fn exceptional(h: FiniteSubgroup, e: Exceptional) -> Self {
        let v = RepObject::from_terms([(Partition::empty(), e.dim())]);
        Self::new(h, LieKind::Exceptional(e), v)
    }

    pub fn with_w(mut self, w: RepObject) -> Self {
        self.action_w = Some(trivial_action(&w));
        self.w = Some(w);
        self
    }

    pub fn with_t0(mut self, t0: Rational) -> Self {
        self.t0 = Some(t0);
        self
    }

    fn attach(&self, obj: &RepObject, action: &Action) -> Result<HBiObject> {
        let table = self.h.rational_table();
        let mut out = HBiObject::new(self.h.clone());
        for (lam, &m) in obj.terms() {
            let labels = action.get(lam).ok_or_else(|| {
                Error::InvalidAction(format!(
                    "no H-structure given for the multiplicity space of {lam}"
                ))
            })?;
            let mut total = Rational::zero();
            for &i in labels {
                if i >= table.len() {
                    return Err(Error::InvalidAction(format!(
                        "label {i} but {} has {} Q-irreducible characters",
                        self.h,
                        table.len()
                    )));
                }
                total += table.degree(i);
                out.add(lam.clone(), i, 1);
            }
            if total != rat(m as i64) {
                return Err(Error::InvalidAction(format!(
                    "characters on {lam} have total degree {total}, multiplicity is {m}"
                )));
            }
        }
        if let Some(extra) = action.keys().find(|l| obj.mult(l) == 0) {
            return Err(Error::InvalidAction(format!(
                "{extra} is not in the support of {obj}"
            )));
        }
        Ok(out)
    }

    fn inner_objects(&self) -> Result<(HBiObject, Option<HBiObject>)> {
        if self.h.j != self.j {
            return Err(Error::NotSubgroup(format!(
                "{} is not a subgroup of S_{}",
                self.h, self.j
            )));
        }
        let x = self.attach(&self.v, &self.action_v)?;
        let y = match (&self.w, self.kind.is_super_pair()) {
            (Some(w), true) => {
                let empty = Action::new();
                let act = self.action_w.as_ref().unwrap_or(&empty);
                Some(self.attach(w, act)?)
            }
            (None, true) => {
                return Err(Error::Precondition(format!(
                    "{} needs a second object W",
                    self.kind
                )))
            }
            (Some(_), false) => {
                return Err(Error::Precondition(format!(
                    "{} takes a single object",
                    self.kind
                )))
            }
            (None, false) => None,
        };
        Ok((x, y))
    }
}

impl fmt::Display for ClassificationDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let act = |a: &Action| -> String {
            let parts: Vec<String> = a
                .iter()
                .map(|(l, ls)| {
                    let ls: Vec<String> = ls.iter().map(usize::to_string).collect();
                    format!("{l}:[{}]", ls.join(","))
                })
                .collect();
            format!("{{{}}}", parts.join(", "))
        };
        write!(
            f,
            "j={} H={} kind={} V={} action={}",
            self.j,
            self.h,
            self.kind,
            self.v,
            act(&self.action_v)
        )?;
        if let (Some(w), Some(a)) = (&self.w, &self.action_w) {
            write!(f, " W={w} action_W={}", act(a))?;
        }
        if let Some(t0) = &self.t0 {
            write!(f, " t0={t0}")?;
        }
        Ok(())
    }
}

/// The result of inducing `h` up to `Rep(S_t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleLie {
    /// `h` in `Rep(S_{t-j}) ⊠ Rep(H)`, even and odd parts.
    pub inner_even: HBiObject,
    pub inner_odd: HBiObject,
    /// The induced object in `Rep(S_t)`.
    pub even: RepObject,
    pub odd: RepObject,
    /// Total dimension `dim even + dim odd` as a polynomial in `t`.
    pub dim: PolyQ,
    /// Superdimension `dim even - dim odd`.
    pub superdim: PolyQ,
}

fn skew_ok(x: &HBiObject) -> bool {
    !x.terms.is_empty() && x.terms.values().all(|m| m % 2 == 0)
}

impl Engine {
    /// `h` for a datum, as even and odd parts.
    pub fn inner_lie(&self, datum: &ClassificationDatum) -> Result<(HBiObject, HBiObject)> {
        let (x, y) = datum.inner_objects()?;
        let empty = HBiObject::new(datum.h.clone());
        if x.terms.is_empty() || y.as_ref().is_some_and(|y| y.terms.is_empty()) {
            return Err(Error::ZeroObject);
        }
        let gl = |a: &HBiObject| self.h_tensor(a, a);
        Ok(match datum.kind {
            LieKind::Exceptional(e) => {
                if x.terms.keys().any(|(nu, i)| !nu.is_empty() || *i != 0)
                    || x.terms.values().sum::<u64>() != e.dim()
                {
                    return Err(Error::InvalidAction(format!(
                        "{e:?} enters as {} unit objects with trivial H-action",
                        e.dim()
                    )));
                }
                (x, empty)
            }
            LieKind::Gl => (gl(&x)?, empty),
            LieKind::Sl => (remove_units(&gl(&x)?, 1)?, empty),
            LieKind::Psl => {
                let t0 = datum
                    .t0
                    .as_ref()
                    .ok_or_else(|| Error::Precondition("psl needs the value t0".into()))?;
                let d = x.dim_poly()?.eval(t0);
                if !d.is_zero() {
                    return Err(Error::DimensionNonzero(t0.to_string(), d.to_string()));
                }
                let g = gl(&x)?;
                let units = hmult(&g, &Partition::empty(), 0);
                if units < 2 {
                    return Err(Error::InsufficientTrivial(format!(
                        "gl(V) contains {units} invariant unit object(s)"
                    )));
                }
                (remove_units(&g, 2)?, empty)
            }
            LieKind::So => (self.h_alt2(&x)?, empty),
            LieKind::Sp => {
                if !skew_ok(&x) {
                    return Err(Error::NoInvariantForm(format!(
                        "{} has an odd multiplicity",
                        datum.v
                    )));
                }
                (self.h_sym2(&x)?, empty)
            }
            LieKind::SlSuper | LieKind::PslSuper => {
                let y = y.unwrap();
                let mut even = remove_units(&hadd(&gl(&x)?, &gl(&y)?), 1)?;
                if datum.kind == LieKind::PslSuper {
                    let diff = &x.dim_poly()? - &y.dim_poly()?;
                    let vanishes = match &datum.t0 {
                        Some(t0) => diff.eval(t0).is_zero(),
                        None => diff.is_zero(),
                    };
                    if !vanishes {
                        let at = datum
                            .t0
                            .as_ref()
                            .map_or("generic t".to_string(), Rational::to_string);
                        return Err(Error::DimensionNonzero(at, diff.to_string()));
                    }
                    even = remove_units(&even, 1)?;
                }
                (even, hscale(&self.h_tensor(&x, &y)?, 2))
            }
            LieKind::Osp => {
                let y = y.unwrap();
                if !skew_ok(&y) {
                    return Err(Error::NoInvariantForm("W has an odd multiplicity".into()));
                }
                (
                    hadd(&self.h_alt2(&x)?, &self.h_sym2(&y)?),
                    self.h_tensor(&x, &y)?,
                )
            }
            LieKind::P => {
                let even = remove_units(&gl(&x)?, 1)?;
                (even, hadd(&self.h_sym2(&x)?, &self.h_alt2(&x)?))
            }
            LieKind::Q => {
                let part = remove_units(&gl(&x)?, 1)?;
                (part.clone(), part)
            }
        })
    }

    /// Induces `h` to `Rep(S_t)` and checks the dimension against
    /// `dim = C(t, j) · j!/|H| · dim h`.
    pub fn build_simple_lie(&self, datum: &ClassificationDatum) -> Result<SimpleLie> {
        let (inner_even, inner_odd) = self.inner_lie(datum)?;
        let index = index_poly(datum.j, datum.h.order());
        let even = self.induce(&inner_even)?.result;
        let odd = self.induce(&inner_odd)?.result;
        let (de, dodd) = (even.dim_poly()?, odd.dim_poly()?);
        let expect_even = &index * &inner_even.dim_poly()?;
        let expect_odd = &index * &inner_odd.dim_poly()?;
        if de != expect_even || dodd != expect_odd {
            return Err(Error::VerificationFailure(format!(
                "induced dimension {de} | {dodd} differs from the index formula {expect_even} | {expect_odd}"
            )));
        }
        Ok(SimpleLie {
            dim: &de + &dodd,
            superdim: &de - &dodd,
            inner_even,
            inner_odd,
            even,
            odd,
        })
    }
}

pub fn build_simple_lie(datum: &ClassificationDatum) -> Result<SimpleLie> {
    Engine::default().build_simple_lie(datum)
}

/// Nonzero objects whose labels have `|λ| ≤ s` and whose total multiplicity
/// is at most `s`, in increasing order.
fn bounded_objects(s: usize) -> Vec<RepObject> {
    let labels: Vec<Partition> = (0..=s).flat_map(partitions).collect();
    let mut out = Vec::new();
    fn rec(
        labels: &[Partition],
        start: usize,
        left: usize,
        cur: &mut RepObject,
        out: &mut Vec<RepObject>,
    ) {
        if !cur.is_zero() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in start..labels.len() {
            cur.add_copies(&labels[i], 1);
            rec(labels, i, left - 1, cur, out);
            *cur = cur.sub(&RepObject::simple(labels[i].clone())).unwrap();
        }
    }
    rec(&labels, 0, s, &mut RepObject::zero(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// All ways to write `m` as a sum of degrees of the given characters, as
/// non-decreasing label lists.
fn label_multisets(degrees: &[u64], m: u64) -> Vec<Vec<usize>> {
    fn rec(deg: &[u64], start: usize, left: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..deg.len() {
            if deg[i] <= left {
                cur.push(i);
                rec(deg, i, left - deg[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(degrees, 0, m, &mut Vec::new(), &mut out);
    out
}

fn actions(h: &FiniteSubgroup, v: &RepObject) -> Vec<Action> {
    let table = h.rational_table();
    let degrees: Vec<u64> = (0..table.len())
        .map(|i| {
            table
                .degree(i)
                .to_integer()
                .try_into()
                .expect("small degree")
        })
        .collect();
    let mut out = vec![Action::new()];
    for (lam, &m) in v.terms() {
        let choices = label_multisets(&degrees, m);
        out = out
            .into_iter()
            .flat_map(|a| {
                choices.iter().map(move |c| {
                    let mut a = a.clone();
                    a.insert(lam.clone(), c.clone());
                    a
                })
            })
            .collect();
    }
    out
}

/// Values of `t` outside `Z_{≥0}` at which `p` vanishes.
fn admissible_roots(p: &PolyQ) -> Vec<Rational> {
    rational_roots(p)
        .into_iter()
        .filter(|r| !(r.is_integer() && *r >= Rational::zero()))
        .collect()
}

fn is_domain_rejection(e: &Error) -> bool {
    matches!(
        e,
        Error::ZeroObject
            | Error::DimensionNonzero(..)
            | Error::InsufficientTrivial(_)
            | Error::NoInvariantForm(_)
            | Error::NegativeMultiplicity(_)
    )
}

pub const ENUM_J_BOUND: usize = 5;
pub const ENUM_SIZE_BOUND: usize = 3;

impl Engine {
    /// Every datum with `j ≤ j_max` and inner objects from
    /// `bounded_objects(inner_size_max)` whose `h` is nonzero and satisfies
    /// its kind's preconditions. Ordered by `j`, then subgroup, kind, `V`,
    /// `W`, actions and `t0`. Data that differ only by an automorphism of `h`
    /// are not identified, so the same algebra may be listed more than once.
    ///
    /// `sl(V|W)` is listed when the dimensions of `V` and `W` differ as
    /// polynomials; `psl` kinds at each admissible root `t0`.
    pub fn enumerate_classification(
        &self,
        j_max: usize,
        inner_size_max: usize,
        kinds: &[LieKind],
    ) -> Result<Vec<ClassificationDatum>> {
        if j_max > ENUM_J_BOUND {
            return Err(Error::BoundExceeded(format!(
                "j_max = {j_max} > {ENUM_J_BOUND}"
            )));
        }
        if inner_size_max > ENUM_SIZE_BOUND {
            return Err(Error::BoundExceeded(format!(
                "inner size {inner_size_max} > {ENUM_SIZE_BOUND}"
            )));
        }
        let mut kinds = kinds.to_vec();
        kinds.sort();
        kinds.dedup();
        let objects = bounded_objects(inner_size_max);
        let mut out = Vec::new();
        for j in 0..=j_max {
            for h in subgroups_of_sj(j)? {
                for &kind in &kinds {
                    for datum in self.candidates(&h, kind, &objects)? {
                        match self.inner_lie(&datum) {
                            Ok((even, odd)) if !(even.terms.is_empty() && odd.terms.is_empty()) => {
                                out.push(datum)
                            }
                            Ok(_) => {}
                            Err(e) if is_domain_rejection(&e) => {}
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn candidates(
        &self,
        h: &FiniteSubgroup,
        kind: LieKind,
        objects: &[RepObject],
    ) -> Result<Vec<ClassificationDatum>> {
        let mut out = Vec::new();
        if let LieKind::Exceptional(e) = kind {
            out.push(ClassificationDatum::exceptional(h.clone(), e));
            return Ok(out);
        }
        let base = |v: &RepObject, a: &Action| {
            let mut d = ClassificationDatum::new(h.clone(), kind, v.clone());
            d.action_v = a.clone();
            d
        };
        for v in objects {
            for av in actions(h, v) {
                let d = base(v, &av);
                if kind.is_super_pair() {
                    for w in objects {
                        for aw in actions(h, w) {
                            let mut d = d.clone();
                            d.w = Some(w.clone());
                            d.action_w = Some(aw);
                            let (x, y) = d.inner_objects()?;
                            let diff = &x.dim_poly()? - &y.unwrap().dim_poly()?;
                            match kind {
                                LieKind::SlSuper if diff.is_zero() => {}
                                LieKind::PslSuper if diff.is_zero() => out.push(d),
                                LieKind::PslSuper => out.extend(
                                    admissible_roots(&diff)
                                        .into_iter()
                                        .map(|t0| d.clone().with_t0(t0)),
                                ),
                                _ => out.push(d),
                            }
                        }
                    }
                } else if kind == LieKind::Psl {
                    let (x, _) = d.inner_objects()?;
                    out.extend(
                        admissible_roots(&x.dim_poly()?)
                            .into_iter()
                            .map(|t0| d.clone().with_t0(t0)),
                    );
                } else {
                    out.push(d);
                }
            }
        }
        Ok(out)
    }
}

pub fn enumerate_classification(
    j_max: usize,
    inner_size_max: usize,
    kinds: &[LieKind],
) -> Result<Vec<ClassificationDatum>> {
    Engine::default().enumerate_classification(j_max, inner_size_max, kinds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binom_poly;

    fn obj(s: &str) -> RepObject {
        s.parse().unwrap()
    }

    #[test]
    fn induction_by_nothing() {
        let d = ClassificationDatum::new(FiniteSubgroup::trivial(0), LieKind::Sl, obj("[1]"));
        let built = build_simple_lie(&d).unwrap();
        assert_eq!(built.even, obj("{[1]:1,[2]:1,[1,1]:1}"));
        assert!(built.odd.is_zero());
    }

    #[test]
    fn exceptional_and_associative_dims() {
        let d = ClassificationDatum::exceptional(FiniteSubgroup::trivial(1), Exceptional::G2);
        assert_eq!(
            build_simple_lie(&d).unwrap().dim,
            PolyQ::t().scale(&rat(14))
        );
        let d =
            ClassificationDatum::new(FiniteSubgroup::symmetric(2), LieKind::Gl, RepObject::unit());
        assert_eq!(build_simple_lie(&d).unwrap().dim, binom_poly(2));
    }

    #[test]
    fn sign_action_on_a_line() {
        let h = FiniteSubgroup::symmetric(2);
        let mut d = ClassificationDatum::new(h, LieKind::Sl, obj("[1]"));
        d.action_v = Action::from([(obj_label("[1]"), vec![1])]);
        let built = build_simple_lie(&d).unwrap();
        // sl(𝒳(1) ⊠ sgn) = sl(𝒳(1)) ⊠ triv as sgn ⊗ sgn = triv.
        let plain = ClassificationDatum::new(FiniteSubgroup::symmetric(2), LieKind::Sl, obj("[1]"));
        assert_eq!(built.even, build_simple_lie(&plain).unwrap().even);
        d.action_v = Action::from([(obj_label("[1]"), vec![5])]);
        assert!(matches!(build_simple_lie(&d), Err(Error::InvalidAction(_))));
    }

    fn obj_label(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hand_count() {
        let data = enumerate_classification(2, 1, &[LieKind::Sl]).unwrap();
        assert_eq!(data.len(), 5);
        let exc =
            enumerate_classification(1, 0, &LieKind::parse_list("exceptional").unwrap()).unwrap();
        assert_eq!(exc.len(), 10);
        let hs: Vec<usize> = data
            .iter()
            .filter(|d| d.j == 2)
            .map(|d| d.h.order())
            .collect();
        assert_eq!(hs, vec![1, 2, 2]);
    }

    #[test]
    fn psl_roots() {
        let h = FiniteSubgroup::trivial(0);
        let d = ClassificationDatum::new(h, LieKind::Psl, obj("{[]:2,[1]:1}")).with_t0(rat(-1));
        let built = build_simple_lie(&d).unwrap();
        assert_eq!(built.dim.eval(&rat(-1)), rat(-2));
        // dim(𝒳(1) ⊕ 𝒳(2)) = (t - 2)(t + 1)/2 vanishes at t = -1.
        let listed = enumerate_classification(0, 2, &[LieKind::Psl]).unwrap();
        assert!(listed
            .iter()
            .any(|x| x.v == obj("{[1]:1,[2]:1}") && x.t0 == Some(rat(-1))));
        assert!(listed.iter().all(|x| x
            .t0
            .as_ref()
            .is_some_and(|t| !t.is_integer() || *t < rat(0))));
    }
}
