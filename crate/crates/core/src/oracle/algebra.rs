use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::arith::{rational_roots, PolyQ, Rational};
use crate::chars::{FiniteSubgroup, Perm};
use crate::error::{Error, Result};
use crate::linalg::{poly_det, Matrix, Subspace, Vector};

/// Sparse vector in a basis: `(index, coefficient)` pairs.
pub type Sparse = Vec<(usize, Rational)>;

/// A finite-dimensional algebra over Q given by structure constants, with a
/// group acting through the matrices of a generating set.
#[derive(Clone, Debug)]
pub struct ConcreteAlgebra {
    pub labels: Vec<String>,
    /// `mult[a][b]` is the product of basis elements `a` and `b`.
    mult: Vec<Vec<Sparse>>,
    /// Group generators and their matrices (column `a` is the image of basis element `a`).
    pub action: Vec<(Perm, Matrix)>,
}

fn densify(v: &Sparse, dim: usize) -> Vector {
    let mut out = vec![Rational::zero(); dim];
    for (i, c) in v {
        out[*i] += c;
    }
    out
}

impl ConcreteAlgebra {
    /// Builds the algebra and checks associativity and that every generator
    /// acts by an algebra automorphism.
    pub fn new(
        labels: Vec<String>,
        mult: Vec<Vec<Sparse>>,
        action: Vec<(Perm, Matrix)>,
    ) -> Result<Self> {
        let a = ConcreteAlgebra {
            labels,
            mult,
            action,
        };
        a.check_associative()?;
        a.check_automorphisms()?;
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_vector(&self, a: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        v[a] = Rational::one();
        v
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xa * yb;
                for (k, s) in &self.mult[a][b] {
                    out[*k] += &c * s;
                }
            }
        }
        out
    }

    /// `x·y` for sparse `x`, `y`, with zero entries dropped.
    fn mul_sparse(
        &self,
        x: &[(usize, Rational)],
        y: &[(usize, Rational)],
    ) -> BTreeMap<usize, Rational> {
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (a, xa) in x {
            for (b, yb) in y {
                let c = xa * yb;
                for (k, s) in &self.mult[*a][*b] {
                    *out.entry(*k).or_insert_with(Rational::zero) += &c * s;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let ab = &self.mult[a][b];
                for c in 0..n {
                    let left = self.mul_sparse(ab, &[(c, Rational::one())]);
                    let right = self.mul_sparse(&[(a, Rational::one())], &self.mult[b][c]);
                    if left != right {
                        return Err(Error::AssertionFailure(format!(
                            "not associative at ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_automorphisms(&self) -> Result<()> {
        let n = self.dim();
        for (g, m) in &self.action {
            let cols: Vec<Sparse> = (0..n)
                .map(|a| {
                    (0..n)
                        .filter(|&i| !m[(i, a)].is_zero())
                        .map(|i| (i, m[(i, a)].clone()))
                        .collect()
                })
                .collect();
            for a in 0..n {
                for b in 0..n {
                    let mut image: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (k, s) in &self.mult[a][b] {
                        for (i, v) in &cols[*k] {
                            *image.entry(*i).or_insert_with(Rational::zero) += s * v;
                        }
                    }
                    image.retain(|_, v| !v.is_zero());
                    if image != self.mul_sparse(&cols[a], &cols[b]) {
                        return Err(Error::AssertionFailure(format!(
                            "{g} is not an automorphism at ({}, {})",
                            self.labels[a], self.labels[b]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `A ⊕ B` with the diagonal action; both must list the same generators.
    pub fn direct_sum(&self, other: &ConcreteAlgebra) -> Result<ConcreteAlgebra> {
        let (n, m) = (self.dim(), other.dim());
        let gens_a: Vec<&Perm> = self.action.iter().map(|(g, _)| g).collect();
        let gens_b: Vec<&Perm> = other.action.iter().map(|(g, _)| g).collect();
        if gens_a != gens_b {
            return Err(Error::Precondition(
                "summands are acted on by different generators".into(),
            ));
        }
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("{l}#1")).collect();
        labels.extend(other.labels.iter().map(|l| format!("{l}#2")));
        let mut mult = vec![vec![Sparse::new(); n + m]; n + m];
        for (row, src) in mult.iter_mut().zip(&self.mult) {
            row[..n].clone_from_slice(src);
        }
        for a in 0..m {
            for b in 0..m {
                mult[n + a][n + b] = other.mult[a][b]
                    .iter()
                    .map(|(k, c)| (n + k, c.clone()))
                    .collect();
            }
        }
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|((g, x), (_, y))| {
                let mut big = Matrix::zeros(n + m, n + m);
                for i in 0..n {
                    for j in 0..n {
                        big[(i, j)] = x[(i, j)].clone();
                    }
                }
                for i in 0..m {
                    for j in 0..m {
                        big[(n + i, n + j)] = y[(i, j)].clone();
                    }
                }
                (g.clone(), big)
            })
            .collect();
        ConcreteAlgebra::new(labels, mult, action)
    }

    /// The two-sided unit, if there is one.
    pub fn unit(&self) -> Option<Vector> {
        let n = self.dim();
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for e in 0..n {
            for k in 0..n {
                // Σ_u x_u (e_u e_e)_k = δ_ek and Σ_u x_u (e_e e_u)_k = δ_ek.
                rows.push(
                    (0..n)
                        .map(|u| densify(&self.mult[u][e], n)[k].clone())
                        .collect(),
                );
                rhs.push(if e == k {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                rows.push(
                    (0..n)
                        .map(|u| densify(&self.mult[e][u], n)[k].clone())
                        .collect(),
                );
                rhs.push(if e == k {
                    Rational::one()
                } else {
                    Rational::zero()
                });
            }
        }
        solve(&rows, &rhs)
    }

    /// Smallest subspace containing `seeds` that is closed under left and
    /// right multiplication by basis elements and under the group action.
    pub fn ideal_closure(&self, seeds: &[Vector]) -> Subspace {
        let n = self.dim();
        let mut span = Subspace::new(n);
        let mut queue: Vec<Vector> = Vec::new();
        for s in seeds {
            if span.insert(s) {
                queue.push(s.clone());
            }
        }
        while let Some(v) = queue.pop() {
            let mut next: Vec<Vector> = Vec::new();
            for a in 0..n {
                let e = self.basis_vector(a);
                next.push(self.mul(&e, &v));
                next.push(self.mul(&v, &e));
            }
            for (_, m) in &self.action {
                next.push(m.apply(&v));
            }
            for w in next {
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        span
    }

    /// `Tr(L_{xy})` on basis pairs.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim();
        let tr: Vec<Rational> = (0..n)
            .map(|c| {
                (0..n)
                    .map(|d| densify(&self.mult[c][d], n)[d].clone())
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect();
        let mut out = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                out[(a, b)] = self.mult[a][b]
                    .iter()
                    .fold(Rational::zero(), |acc, (k, c)| acc + c * &tr[*k]);
            }
        }
        out
    }

    /// Basis of the group-invariant part of the center.
    pub fn invariant_center(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut rows: Vec<Vector> = Vec::new();
        for (_, m) in &self.action {
            rows.extend(m.sub(&Matrix::identity(n)).to_rows());
        }
        let inv = if rows.is_empty() {
            (0..n).map(|a| self.basis_vector(a)).collect()
        } else {
            Matrix::from_rows(rows).nullspace()
        };
        if inv.is_empty() {
            return inv;
        }
        // Among invariants, solve [z, e_a] = 0 for every basis element.
        let mut cond: Vec<Vector> = Vec::new();
        for a in 0..n {
            let e = self.basis_vector(a);
            let comms: Vec<Vector> = inv
                .iter()
                .map(|z| {
                    let l = self.mul(z, &e);
                    let r = self.mul(&e, z);
                    l.iter().zip(&r).map(|(x, y)| x - y).collect()
                })
                .collect();
            for k in 0..n {
                cond.push(comms.iter().map(|c| c[k].clone()).collect());
            }
        }
        Matrix::from_rows(cond)
            .nullspace()
            .into_iter()
            .map(|coef| {
                let mut z = vec![Rational::zero(); n];
                for (c, v) in coef.iter().zip(&inv) {
                    for (x, y) in z.iter_mut().zip(v) {
                        *x += c * y;
                    }
                }
                z
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct SimplicityReport {
    pub simple: bool,
    /// A basis of a proper nonzero invariant ideal, when one was found.
    pub witness: Option<Vec<Vector>>,
}

/// Whether `A` has no two-sided ideals that are invariant under the group
/// other than `0` and `A`.
///
/// The radical of the trace form is such an ideal. When it vanishes `A` is
/// semisimple and its invariant ideals correspond to invariant central
/// idempotents, so `A` is invariantly simple exactly when the invariant
/// center is one-dimensional. Otherwise a witness is produced by saturating
/// a non-invertible invariant central element.
pub fn invariant_simple(a: &ConcreteAlgebra) -> SimplicityReport {
    let n = a.dim();
    if n == 0 {
        return SimplicityReport {
            simple: false,
            witness: None,
        };
    }
    let radical = a.trace_form().nullspace();
    if !radical.is_empty() {
        let ideal = a.ideal_closure(&radical);
        let witness = (!ideal.is_full()).then(|| ideal.basis().cloned().collect());
        return SimplicityReport {
            simple: false,
            witness,
        };
    }
    let center = a.invariant_center();
    if center.len() <= 1 {
        return SimplicityReport {
            simple: true,
            witness: None,
        };
    }
    let one = unit_element(a, &center);
    for z in &center {
        // Eigenvalues of multiplication by z on the invariant center.
        let k = center.len();
        let coords: Vec<Vector> = center.iter().map(|c| a.mul(z, c)).collect();
        let m = express_in(&center, &coords);
        let charpoly: Vec<Vec<PolyQ>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let c = PolyQ::constant(m[(i, j)].clone());
                        if i == j {
                            &c - &PolyQ::t()
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        for lambda in rational_roots(&poly_det(&charpoly)) {
            let w: Vector = z.iter().zip(&one).map(|(x, u)| x - &lambda * u).collect();
            if w.iter().all(Zero::is_zero) {
                continue;
            }
            let ideal = a.ideal_closure(&[w]);
            if !ideal.is_full() {
                return SimplicityReport {
                    simple: false,
                    witness: Some(ideal.basis().cloned().collect()),
                };
            }
        }
    }
    for e in 0..n {
        let ideal = a.ideal_closure(&[a.basis_vector(e)]);
        if !ideal.is_full() {
            return SimplicityReport {
                simple: false,
                witness: Some(ideal.basis().cloned().collect()),
            };
        }
    }
    SimplicityReport {
        simple: false,
        witness: None,
    }
}

/// The unit of a semisimple algebra: the element of the center acting as
/// the identity on every basis vector.
fn unit_element(a: &ConcreteAlgebra, center: &[Vector]) -> Vector {
    let n = a.dim();
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for e in 0..n {
        let be = a.basis_vector(e);
        let prods: Vec<Vector> = center.iter().map(|z| a.mul(z, &be)).collect();
        for k in 0..n {
            rows.push(prods.iter().map(|p| p[k].clone()).collect());
            rhs.push(be[k].clone());
        }
    }
    let coef = solve(&rows, &rhs).expect("semisimple algebras are unital");
    let mut u = vec![Rational::zero(); n];
    for (c, z) in coef.iter().zip(center) {
        for (x, y) in u.iter_mut().zip(z) {
            *x += c * y;
        }
    }
    u
}

/// A solution of `rows · x = rhs`, if one exists.
fn solve(rows: &[Vector], rhs: &[Rational]) -> Option<Vector> {
    let k = rows.first().map_or(0, Vec::len);
    let aug: Vec<Vector> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| r.iter().cloned().chain([b.clone()]).collect())
        .collect();
    let mut m = Matrix::from_rows(aug);
    let pivots = m.rref();
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[(r, k)].clone();
    }
    Some(x)
}

/// Coordinates of each of `vs` in the (independent) family `basis`, as columns.
fn express_in(basis: &[Vector], vs: &[Vector]) -> Matrix {
    let k = basis.len();
    let n = basis[0].len();
    let rows: Vec<Vector> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    let mut out = Matrix::zeros(k, vs.len());
    for (j, v) in vs.iter().enumerate() {
        let x = solve(&rows, v).expect("vector lies in the span");
        for i in 0..k {
            out[(i, j)] = x[i].clone();
        }
    }
    out
}

/// A projective action `G → PGL_m(Q)` given on generators.
pub type MatrixAction = Vec<(Perm, Matrix)>;

/// Extends generator images to all of `G`, checking multiplicativity up to scalars.
fn extend_action(
    g: &FiniteSubgroup,
    m: usize,
    action: Option<&MatrixAction>,
) -> Result<HashMap<Perm, Matrix>> {
    let ident = Perm::identity(g.j);
    let mut images = HashMap::from([(ident.clone(), Matrix::identity(m))]);
    let Some(gens) = action else {
        for x in g.elements() {
            images.insert(x.clone(), Matrix::identity(m));
        }
        return Ok(images);
    };
    let gens: Vec<(Perm, Matrix)> = gens
        .iter()
        .map(|(s, mat)| {
            (
                if s.degree() < g.j {
                    s.extend(g.j)
                } else {
                    s.clone()
                },
                mat.clone(),
            )
        })
        .collect();
    for (s, mat) in &gens {
        if !g.contains(s) {
            return Err(Error::NotMultiplicative(format!("{s} is not in {g}")));
        }
        if mat.rows != m || mat.cols != m || mat.inverse().is_none() {
            return Err(Error::NotMultiplicative(format!(
                "image of {s} is not an invertible {m}x{m} matrix"
            )));
        }
    }
    let mut stack = vec![ident];
    while let Some(x) = stack.pop() {
        let mx = images[&x].clone();
        for (s, ms) in &gens {
            let y = s.after(&x);
            let cand = ms.mul(&mx);
            match images.get(&y) {
                Some(my) => {
                    if !proportional(my, &cand) {
                        return Err(Error::NotMultiplicative(format!(
                            "images of {s} and {x} do not multiply to the image of {y}, even up to a scalar"
                        )));
                    }
                }
                None => {
                    images.insert(y.clone(), cand);
                    stack.push(y);
                }
            }
        }
    }
    if images.len() != g.order() {
        return Err(Error::NotMultiplicative(
            "generators do not generate G".into(),
        ));
    }
    Ok(images)
}

fn proportional(a: &Matrix, b: &Matrix) -> bool {
    let rows_a = a.to_rows();
    let rows_b = b.to_rows();
    let flat_a: Vec<&Rational> = rows_a.iter().flatten().collect();
    let flat_b: Vec<&Rational> = rows_b.iter().flatten().collect();
    let Some(i) = flat_a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if flat_b[i].is_zero() {
        return false;
    }
    let c = flat_b[i] / flat_a[i];
    flat_a.iter().zip(&flat_b).all(|(x, y)| &(*x * &c) == *y)
}

/// The transposition `(1 2)` and the long cycle, which generate `S_n`.
pub fn symmetric_generators(n: usize) -> Vec<Perm> {
    if n < 2 {
        return Vec::new();
    }
    let mut t: Vec<u8> = (0..n as u8).collect();
    t.swap(0, 1);
    let c: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
    let mut gens = vec![Perm(t)];
    if n > 2 {
        gens.push(Perm(c));
    }
    gens
}

/// `Fun_G(S_N, Mat_m)`: functions `f : S_N → Mat_m` with
/// `f(g x) = ρ(g) f(x) ρ(g)^{-1}`, multiplied pointwise, with `S_N` acting
/// by right translation `(σ·f)(y) = f(y σ)`.
///
/// The basis element `f_{k,ab}` is supported on the `k`-th right coset `G x_k`
/// and takes the value `E_ab` at `x_k`. `ρ` may be projective.
pub fn fun_g_algebra(
    n: usize,
    g: &FiniteSubgroup,
    m: usize,
    action: Option<&MatrixAction>,
) -> Result<ConcreteAlgebra> {
    if n > 8 || m > 3 || m == 0 {
        return Err(Error::BoundExceeded(format!(
            "fun_g_algebra needs N ≤ 8 and 1 ≤ m ≤ 3, got N = {n}, m = {m}"
        )));
    }
    if g.j > n {
        return Err(Error::NotSubgroup(format!("{g} does not fit in S_{n}")));
    }
    let g = g.embed(n);
    let rho = extend_action(&g, m, action)?;
    let rho_inv: HashMap<&Perm, Matrix> =
        rho.iter().map(|(p, x)| (p, x.inverse().unwrap())).collect();

    // Right cosets G x, located by a lookup table y ↦ (coset, g) with y = g x_coset.
    let all = FiniteSubgroup::symmetric(n);
    let mut locate: HashMap<Perm, (usize, usize)> = HashMap::new();
    let mut reps: Vec<Perm> = Vec::new();
    for y in all.elements() {
        if locate.contains_key(y) {
            continue;
        }
        let k = reps.len();
        for (gi, h) in g.elements().iter().enumerate() {
            locate.insert(h.after(y), (k, gi));
        }
        reps.push(y.clone());
    }
    let cosets = reps.len();
    let m2 = m * m;
    let dim = cosets * m2;
    let idx = |k: usize, a: usize, b: usize| k * m2 + a * m + b;

    let mut labels = Vec::with_capacity(dim);
    for rep in &reps {
        for a in 0..m {
            for b in 0..m {
                labels.push(if m == 1 {
                    format!("G{rep}")
                } else {
                    format!("G{rep}:E{}{}", a + 1, b + 1)
                });
            }
        }
    }
    let mut mult = vec![vec![Sparse::new(); dim]; dim];
    for k in 0..cosets {
        for a in 0..m {
            for b in 0..m {
                for d in 0..m {
                    mult[idx(k, a, b)][idx(k, b, d)] = vec![(idx(k, a, d), Rational::one())];
                }
            }
        }
    }

    let mut gens_action = Vec::new();
    for sigma in symmetric_generators(n) {
        let mut mat = Matrix::zeros(dim, dim);
        for (l, rep) in reps.iter().enumerate() {
            let (k, gi) = locate[&rep.after(&sigma)];
            let h = &g.elements()[gi];
            let (r, ri) = (&rho[h], &rho_inv[h]);
            for a in 0..m {
                for b in 0..m {
                    // ρ(h) E_ab ρ(h)^{-1} has (c, d) entry r[c][a] · ri[b][d].
                    for c in 0..m {
                        for d in 0..m {
                            let v = &r[(c, a)] * &ri[(b, d)];
                            if !v.is_zero() {
                                mat[(idx(l, c, d), idx(k, a, b))] = v;
                            }
                        }
                    }
                }
            }
        }
        gens_action.push((sigma, mat));
    }
    ConcreteAlgebra::new(labels, mult, gens_action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn dimensions() {
        let s4 = FiniteSubgroup::symmetric(4);
        assert_eq!(fun_g_algebra(4, &s4, 1, None).unwrap().dim(), 1);
        let s3 = FiniteSubgroup::symmetric(3);
        assert_eq!(fun_g_algebra(4, &s3, 1, None).unwrap().dim(), 4);
        assert_eq!(fun_g_algebra(4, &s3, 2, None).unwrap().dim(), 16);
    }

    #[test]
    fn simplicity() {
        let s3 = FiniteSubgroup::symmetric(3);
        let a = fun_g_algebra(4, &s3, 1, None).unwrap();
        assert!(invariant_simple(&a).simple);
        let doubled = a.direct_sum(&a).unwrap();
        let report = invariant_simple(&doubled);
        assert!(!report.simple);
        assert_eq!(report.witness.unwrap().len(), 4);
        let mat2 = fun_g_algebra(4, &FiniteSubgroup::symmetric(4), 2, None).unwrap();
        assert!(invariant_simple(&mat2).simple);
    }

    #[test]
    fn projective_klein_action() {
        let v4 = FiniteSubgroup::parse("(1 2)(3 4),(1 3)(2 4)", Some(4)).unwrap();
        let x = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        let z = Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]);
        let gens = v4.generators();
        let action = vec![(gens[0].clone(), x), (gens[1].clone(), z)];
        let a = fun_g_algebra(4, &v4, 2, Some(&action)).unwrap();
        assert_eq!(a.dim(), 24);
        assert!(invariant_simple(&a).simple);
    }

    #[test]
    fn rejects_non_multiplicative() {
        let c2 = FiniteSubgroup::parse("(1 2)", Some(2)).unwrap();
        let bad = Matrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]]);
        let action = vec![(c2.generators()[0].clone(), bad)];
        assert!(matches!(
            fun_g_algebra(3, &c2, 2, Some(&action)),
            Err(Error::NotMultiplicative(_))
        ));
    }
}
