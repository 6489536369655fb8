use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::perm::Perm;
use super::symmetric::{z_rho, ClassFunction, SymClasses};
use crate::arith::{Int, Rational};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// An explicit subgroup of `S_j`, elements sorted (so the identity comes first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSubgroup {
    pub j: usize,
    elements: Vec<Perm>,
}

impl FiniteSubgroup {
    /// Closure of `gens` inside `S_j`.
    pub fn generated(j: usize, gens: &[Perm]) -> Result<Self> {
        for g in gens {
            if g.degree() != j {
                return Err(Error::NotSubgroup(format!("generator {g} is not in S_{j}")));
            }
        }
        let id = Perm::identity(j);
        let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.after(&x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(FiniteSubgroup {
            j,
            elements: seen.into_iter().collect(),
        })
    }

    /// Validates that `elements` is closed under products and inverses.
    pub fn from_elements(j: usize, elements: Vec<Perm>) -> Result<Self> {
        let set: BTreeSet<Perm> = elements.into_iter().collect();
        if !set.contains(&Perm::identity(j)) {
            return Err(Error::NotSubgroup("missing the identity".into()));
        }
        for a in &set {
            if a.degree() != j {
                return Err(Error::NotSubgroup(format!("{a} is not in S_{j}")));
            }
            if !set.contains(&a.inverse()) {
                return Err(Error::NotSubgroup(format!(
                    "not closed under inverse at {a}"
                )));
            }
            for b in &set {
                if !set.contains(&a.after(b)) {
                    return Err(Error::NotSubgroup(format!("not closed: {a} * {b}")));
                }
            }
        }
        Ok(FiniteSubgroup {
            j,
            elements: set.into_iter().collect(),
        })
    }

    pub fn trivial(j: usize) -> Self {
        FiniteSubgroup {
            j,
            elements: vec![Perm::identity(j)],
        }
    }

    pub fn symmetric(j: usize) -> Self {
        let mut gens = Vec::new();
        if j >= 2 {
            gens.push(transposition(j, 0, 1));
            gens.push(long_cycle(j, 0, j));
        }
        Self::generated(j, &gens).unwrap()
    }

    pub fn alternating(j: usize) -> Self {
        let gens: Vec<Perm> = (2..j).map(|k| three_cycle(j, 0, 1, k)).collect();
        Self::generated(j, &gens).unwrap()
    }

    /// Generated by the cycle `(1 2 ... k)` inside `S_j`.
    pub fn cyclic(j: usize, k: usize) -> Self {
        let gens = if k >= 2 {
            vec![long_cycle(j, 0, k)]
        } else {
            Vec::new()
        };
        Self::generated(j, &gens).unwrap()
    }

    /// Parses `1`, `trivial`, `S3`, `A4`, `C3` or a comma-separated list of
    /// generators in cycle notation such as `(1 2),(1 2 3)`. The ambient rank
    /// is `j` when given, otherwise the smallest one that fits.
    pub fn parse(spec: &str, j: Option<usize>) -> Result<Self> {
        let s = spec.trim();
        let named = |prefix: char| -> Option<usize> {
            s.strip_prefix(prefix)
                .or_else(|| s.strip_prefix(prefix.to_ascii_lowercase()))
                .map(|r| r.trim_start_matches('_'))
                .and_then(|r| r.parse().ok())
        };
        let fit = |k: usize| -> Result<usize> {
            let j = j.unwrap_or(k);
            if k > j {
                return Err(Error::NotSubgroup(format!("{s} does not fit in S_{j}")));
            }
            Ok(j)
        };
        if s == "1" || s.eq_ignore_ascii_case("trivial") || s.is_empty() {
            return Ok(Self::trivial(j.unwrap_or(0)));
        }
        if let Some(k) = named('S') {
            let full = Self::symmetric(k);
            return Ok(full.embed(fit(k)?));
        }
        if let Some(k) = named('A') {
            return Ok(Self::alternating(k).embed(fit(k)?));
        }
        if let Some(k) = named('C') {
            return Ok(Self::cyclic(fit(k)?, k));
        }
        let n = fit(Perm::max_point(s))?;
        let mut gens = Vec::new();
        let mut depth = 0;
        let mut cur = String::new();
        for c in s.chars() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if c == ',' && depth == 0 {
                gens.push(Perm::parse_cycles(&cur, n)?);
                cur.clear();
            } else {
                cur.push(c);
            }
        }
        if !cur.trim().is_empty() {
            gens.push(Perm::parse_cycles(&cur, n)?);
        }
        Self::generated(n, &gens)
    }

    /// The same permutations viewed inside `S_m`, `m ≥ j`.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.j);
        let mut elements: Vec<Perm> = self.elements.iter().map(|p| p.extend(m)).collect();
        elements.sort();
        FiniteSubgroup { j: m, elements }
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    pub fn conjugate_by(&self, g: &Perm) -> Self {
        let gi = g.inverse();
        let mut elements: Vec<Perm> = self
            .elements
            .iter()
            .map(|h| g.after(h).after(&gi))
            .collect();
        elements.sort();
        FiniteSubgroup {
            j: self.j,
            elements,
        }
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<Perm> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut span = Self::trivial(self.j);
        for e in &self.elements {
            if !span.contains(e) {
                gens.push(e.clone());
                span = Self::generated(self.j, &gens).unwrap();
            }
        }
        gens
    }

    /// Conjugacy classes as lists of element indices, ordered by first element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for i in 0..self.order() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut cls = BTreeSet::new();
            for g in &self.elements {
                let c = g.after(&self.elements[i]).after(&g.inverse());
                cls.insert(self.index_of(&c).unwrap());
            }
            for &c in &cls {
                class_of[c] = classes.len();
            }
            classes.push(cls.into_iter().collect());
        }
        classes
    }

    /// Character of the permutation action of `self` on cosets, induced to
    /// `S_j`: `Ind_H^{S_j} φ` for `φ` given element-wise.
    pub fn induce(&self, phi: &[Rational]) -> Result<ClassFunction> {
        induce_character(self, phi)
    }

    /// Q-irreducible character table, cached per subgroup.
    pub fn rational_table(&self) -> Arc<RationalTable> {
        static CACHE: OnceLock<Mutex<HashMap<FiniteSubgroup, Arc<RationalTable>>>> =
            OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(self) {
            return t.clone();
        }
        let t = Arc::new(RationalTable::build(self));
        cache
            .lock()
            .unwrap()
            .entry(self.clone())
            .or_insert(t)
            .clone()
    }
}

impl fmt::Display for FiniteSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(ToString::to_string).collect();
        if gens.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "<{}>", gens.join(","))
        }
    }
}

fn transposition(j: usize, a: usize, b: usize) -> Perm {
    let mut p = Perm::identity(j);
    p.0.swap(a, b);
    p
}

fn three_cycle(j: usize, a: usize, b: usize, c: usize) -> Perm {
    let mut p = Perm::identity(j);
    p.0[a] = b as u8;
    p.0[b] = c as u8;
    p.0[c] = a as u8;
    p
}

/// The cycle `(from+1 ... to)` on 1-based points.
fn long_cycle(j: usize, from: usize, to: usize) -> Perm {
    let mut p = Perm::identity(j);
    for i in from..to {
        p.0[i] = if i + 1 == to {
            from as u8
        } else {
            (i + 1) as u8
        };
    }
    p
}

/// Frobenius induction `Ind_H^{S_j} φ` with `φ` given on each element of `H`:
/// `(Ind φ)(ρ) = (z_ρ / |H|) Σ_{h ∈ H of type ρ} φ(h)`.
pub fn induce_character(h: &FiniteSubgroup, phi: &[Rational]) -> Result<ClassFunction> {
    if phi.len() != h.order() {
        return Err(Error::NotClassFunction(format!(
            "{} values for a group of order {}",
            phi.len(),
            h.order()
        )));
    }
    for cls in h.conjugacy_classes() {
        if cls.iter().any(|&i| phi[i] != phi[cls[0]]) {
            return Err(Error::NotClassFunction(format!(
                "values differ on the class of {}",
                h.elements[cls[0]]
            )));
        }
    }
    let cls = SymClasses::of(h.j);
    let mut sums = vec![Rational::zero(); cls.len()];
    for (e, v) in h.elements.iter().zip(phi) {
        sums[cls.index_of(&e.cycle_type()).unwrap()] += v;
    }
    let order = Rational::from_integer(Int::from(h.order()));
    let values = cls
        .types
        .iter()
        .zip(sums)
        .map(|(rho, s)| s * Rational::from_integer(z_rho(rho)) / &order)
        .collect();
    Ok(ClassFunction { n: h.j, values })
}

/// Characters of the Q-irreducible representations of a subgroup `H ⊆ S_j`,
/// evaluated on its rational classes (unions of conjugacy classes of
/// elements generating conjugate cyclic subgroups).
///
/// All subgroups of `S_j` for `j ≤ 5` have Schur index 1 over Q, so each
/// character here is the sum of a Galois orbit of complex irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalTable {
    pub order: usize,
    /// Element indices of each rational class; the identity class is first.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// `chars[i][c]` is the value of the i-th character on rational class `c`.
    /// The trivial character is first.
    pub chars: Vec<Vec<Rational>>,
}

impl RationalTable {
    fn build(h: &FiniteSubgroup) -> RationalTable {
        let order = h.order();
        let conj = h.conjugacy_classes();
        let mut conj_of = vec![0; order];
        for (c, cls) in conj.iter().enumerate() {
            for &i in cls {
                conj_of[i] = c;
            }
        }
        // Merge g with g^k, gcd(k, ord g) = 1.
        let mut rat_of_conj = vec![usize::MAX; conj.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for c in 0..conj.len() {
            if rat_of_conj[c] != usize::MAX {
                continue;
            }
            let g = &h.elements[conj[c][0]];
            let o = g.order();
            let mut members = BTreeSet::new();
            for k in (1..=o).filter(|k| k.gcd(&o) == 1) {
                members.insert(conj_of[h.index_of(&g.pow(k)).unwrap()]);
            }
            let idx = classes.len();
            let mut elems = Vec::new();
            for m in members {
                rat_of_conj[m] = idx;
                elems.extend_from_slice(&conj[m]);
            }
            elems.sort_unstable();
            classes.push(elems);
        }
        let class_of: Vec<usize> = (0..order).map(|i| rat_of_conj[conj_of[i]]).collect();
        let r = classes.len();

        let mul = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); order];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, y) in b.iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    let p = h.elements[i].after(&h.elements[k]);
                    out[h.index_of(&p).unwrap()] += x * y;
                }
            }
            out
        };
        let indicator = |elems: &[usize]| -> Vec<Rational> {
            let mut v = vec![Rational::zero(); order];
            for &e in elems {
                v[e] = Rational::one();
            }
            v
        };
        let sums: Vec<Vec<Rational>> = classes.iter().map(|c| indicator(c)).collect();
        // Coordinates of a Q-class-constant group-algebra element.
        let coords =
            |v: &[Rational]| -> Vec<Rational> { classes.iter().map(|c| v[c[0]].clone()).collect() };
        let ops: Vec<Matrix> = sums
            .iter()
            .map(|a| {
                let cols: Vec<Vec<Rational>> = sums.iter().map(|b| coords(&mul(a, b))).collect();
                Matrix::from_rows(cols).transpose()
            })
            .collect();

        // Joint eigenspaces. Eigenvalues |Q|χ(g)/χ(1) are integers bounded by |Q|.
        let mut spaces: Vec<Vec<Vec<Rational>>> = vec![(0..r).map(|i| unit(r, i)).collect()];
        for (a, op) in ops.iter().enumerate() {
            let bound = classes[a].len() as i64;
            let mut next = Vec::new();
            for space in spaces {
                if space.len() == 1 {
                    next.push(space);
                    continue;
                }
                let b = Matrix::from_rows(space.clone()).transpose();
                let mb = op.mul(&b);
                let mut found = 0;
                for lam in -bound..=bound {
                    let lam = Rational::from_integer(Int::from(lam));
                    let mut m = mb.clone();
                    for i in 0..m.rows {
                        for k in 0..m.cols {
                            let v = &m[(i, k)] - &lam * &b[(i, k)];
                            m[(i, k)] = v;
                        }
                    }
                    let ns = m.nullspace();
                    if ns.is_empty() {
                        continue;
                    }
                    found += ns.len();
                    next.push(ns.iter().map(|x| b.apply(x)).collect());
                }
                assert_eq!(found, space.len(), "class algebra is not split");
            }
            spaces = next;
        }
        assert_eq!(spaces.len(), r);

        let full_sums: Vec<Vec<Rational>> = conj.iter().map(|c| indicator(c)).collect();
        let order_q = Rational::from_integer(Int::from(order));
        let mut chars: Vec<Vec<Rational>> = spaces
            .into_iter()
            .map(|sp| {
                let v = &sp[0];
                let ga: Vec<Rational> = expand(v, &classes, order);
                let sq = coords(&mul(&ga, &ga));
                let pivot = v.iter().position(|x| !x.is_zero()).unwrap();
                let c = &sq[pivot] / &v[pivot];
                let e: Vec<Rational> = ga.iter().map(|x| x / &c).collect();
                let orbit = Subspace::spanned_by(
                    order,
                    full_sums
                        .iter()
                        .map(|k| mul(&e, k))
                        .collect::<Vec<_>>()
                        .iter(),
                )
                .dim();
                let d2 = &e[0] * &order_q / Rational::from_integer(Int::from(orbit));
                let d = exact_sqrt(&d2);
                classes.iter().map(|cl| &e[cl[0]] * &order_q / &d).collect()
            })
            .collect();
        chars.sort_by(|a, b| a[0].cmp(&b[0]).then_with(|| b.cmp(a)));
        RationalTable {
            order,
            classes,
            class_of,
            chars,
        }
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn degree(&self, i: usize) -> Rational {
        self.chars[i][0].clone()
    }

    /// Value of character `i` on element `e` (an index into the subgroup).
    pub fn value(&self, i: usize, e: usize) -> &Rational {
        &self.chars[i][self.class_of[e]]
    }

    /// Element-wise values of character `i`.
    pub fn elementwise(&self, i: usize) -> Vec<Rational> {
        (0..self.order).map(|e| self.value(i, e).clone()).collect()
    }

    /// `(1/|H|) Σ_h f(h) g(h)` for functions given on rational classes.
    /// Rational classes are closed under inversion, so no conjugation is needed.
    pub fn inner(&self, f: &[Rational], g: &[Rational]) -> Rational {
        let s: Rational = self
            .classes
            .iter()
            .zip(f.iter().zip(g))
            .map(|(c, (a, b))| a * b * Rational::from_integer(Int::from(c.len())))
            .fold(Rational::zero(), |acc, x| acc + x);
        s / Rational::from_integer(Int::from(self.order))
    }

    /// Multiplicities of each Q-irreducible in a class function given on rational classes.
    pub fn decompose(&self, f: &[Rational]) -> Result<Vec<i64>> {
        self.chars
            .iter()
            .map(|ch| {
                let m = self.inner(f, ch) / self.inner(ch, ch);
                if !m.is_integer() {
                    return Err(Error::NonIntegralMultiplicity(format!("{m}")));
                }
                Ok(m.to_integer().to_i64().unwrap())
            })
            .collect()
    }

    /// Restricts a class function of the ambient `S_j` to rational classes of `H`.
    pub fn restrict(&self, h: &FiniteSubgroup, f: &ClassFunction) -> Vec<Rational> {
        self.classes
            .iter()
            .map(|c| f.value(&h.elements()[c[0]].cycle_type()).unwrap().clone())
            .collect()
    }
}

fn unit(r: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); r];
    v[i] = Rational::one();
    v
}

fn expand(v: &[Rational], classes: &[Vec<usize>], order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order];
    for (x, c) in v.iter().zip(classes) {
        for &e in c {
            out[e] = x.clone();
        }
    }
    out
}

fn exact_sqrt(x: &Rational) -> Rational {
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    let r = Rational::new(n, d);
    assert_eq!(&(&r * &r), x, "degree squared {x} is not a square");
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::symmetric::decompose;
    use crate::partitions::part;
    use std::collections::BTreeMap;

    fn r(x: i64) -> Rational {
        Rational::from_integer(Int::from(x))
    }

    #[test]
    fn named_groups() {
        assert_eq!(FiniteSubgroup::symmetric(4).order(), 24);
        assert_eq!(FiniteSubgroup::alternating(4).order(), 12);
        assert_eq!(FiniteSubgroup::alternating(2).order(), 1);
        assert_eq!(FiniteSubgroup::cyclic(5, 5).order(), 5);
        assert_eq!(FiniteSubgroup::parse("S2", Some(3)).unwrap().order(), 2);
        let v4 = FiniteSubgroup::parse("(1 2)(3 4),(1 3)(2 4)", None).unwrap();
        assert_eq!((v4.j, v4.order()), (4, 4));
        assert_eq!(
            FiniteSubgroup::parse("trivial", Some(2)).unwrap().order(),
            1
        );
        assert!(FiniteSubgroup::parse("S4", Some(2)).is_err());
        let s3 = FiniteSubgroup::parse("(1,2),(1,2,3)", None).unwrap();
        assert_eq!(s3, FiniteSubgroup::symmetric(3));
    }

    #[test]
    fn closure_validation() {
        let bad = vec![Perm::identity(3), Perm::parse_cycles("(1 2 3)", 3).unwrap()];
        assert!(FiniteSubgroup::from_elements(3, bad).is_err());
    }

    #[test]
    fn inductions() {
        let s2 = FiniteSubgroup::symmetric(2);
        let triv = vec![r(1); 2];
        assert_eq!(
            decompose(&induce_character(&s2, &triv).unwrap()).unwrap(),
            BTreeMap::from([(part(&[2]), 1)])
        );
        let a3 = FiniteSubgroup::alternating(3);
        let d = decompose(&induce_character(&a3, &[r(1), r(1), r(1)]).unwrap()).unwrap();
        assert_eq!(d, BTreeMap::from([(part(&[3]), 1), (part(&[1, 1, 1]), 1)]));
        let s2in3 = FiniteSubgroup::symmetric(2).embed(3);
        let d = decompose(&induce_character(&s2in3, &triv).unwrap()).unwrap();
        assert_eq!(d, BTreeMap::from([(part(&[3]), 1), (part(&[2, 1]), 1)]));
        let s3 = FiniteSubgroup::symmetric(3);
        let bad = induce_character(&s3, &[r(1), r(2), r(3), r(4), r(5), r(6)]);
        assert!(matches!(bad, Err(Error::NotClassFunction(_))));
    }

    #[test]
    fn rational_tables() {
        // C3 has two Q-irreducibles: trivial and the 2-dimensional sum of the
        // two complex faithful characters.
        let c3 = FiniteSubgroup::cyclic(3, 3);
        let t = c3.rational_table();
        assert_eq!(t.chars, vec![vec![r(1), r(1)], vec![r(2), r(-1)]]);
        let s3 = FiniteSubgroup::symmetric(3);
        assert_eq!(s3.rational_table().len(), 3);
        let c4 = FiniteSubgroup::cyclic(4, 4);
        let degs: Vec<Rational> = (0..c4.rational_table().len())
            .map(|i| c4.rational_table().degree(i))
            .collect();
        assert_eq!(degs, vec![r(1), r(1), r(2)]);
        let c5 = FiniteSubgroup::cyclic(5, 5);
        assert_eq!(c5.rational_table().chars[1], vec![r(4), r(-1)]);
        let s5 = FiniteSubgroup::symmetric(5);
        assert_eq!(s5.rational_table().len(), 7);
    }
}
