use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::chars::Perm;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};

use super::algebra::symmetric_generators;

/// A small explicit module with an invariant bilinear form `B`, symmetric
/// or skew. `gens` are the matrices of a generating set of the group.
#[derive(Clone, Debug)]
pub struct FormModule {
    pub gens: Vec<Matrix>,
    pub form: Matrix,
}

impl FormModule {
    pub fn new(gens: Vec<Matrix>, form: Matrix) -> Result<Self> {
        let d = form.rows;
        if form.cols != d || gens.iter().any(|g| g.rows != d || g.cols != d) {
            return Err(Error::Precondition("matrix sizes disagree".into()));
        }
        if d > 12 {
            return Err(Error::BoundExceeded(format!("module dimension {d} > 12")));
        }
        if d > 0 && form.inverse().is_none() {
            return Err(Error::Precondition("form is degenerate".into()));
        }
        let t = form.transpose();
        if t != form && t != form.scale(&-Rational::one()) {
            return Err(Error::Precondition(
                "form is neither symmetric nor skew".into(),
            ));
        }
        for g in &gens {
            if g.transpose().mul(&form).mul(g) != form {
                return Err(Error::Precondition("form is not invariant".into()));
            }
        }
        Ok(FormModule { gens, form })
    }

    /// The permutation module of `S_n` with the standard symmetric form.
    pub fn permutation(n: usize) -> Self {
        let gens = symmetric_generators(n).iter().map(perm_matrix).collect();
        FormModule::new(gens, Matrix::identity(n)).unwrap()
    }

    /// `Q²` with the form `[[0, 1], [-1, 0]]` and the trivial group.
    pub fn symplectic_plane() -> Self {
        let o = Rational::zero;
        let b = Matrix::from_rows(vec![
            vec![o(), Rational::one()],
            vec![-Rational::one(), o()],
        ]);
        FormModule::new(Vec::new(), b).unwrap()
    }

    pub fn zero() -> Self {
        FormModule {
            gens: Vec::new(),
            form: Matrix::zeros(0, 0),
        }
    }

    pub fn dim(&self) -> usize {
        self.form.rows
    }

    pub fn is_symmetric(&self) -> bool {
        self.form.transpose() == self.form
    }
}

pub fn perm_matrix(p: &Perm) -> Matrix {
    let n = p.degree();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m[(p.apply(i), i)] = Rational::one();
    }
    m
}

fn flatten(m: &Matrix) -> Vector {
    m.to_rows().into_iter().flatten().collect()
}

fn unflatten(v: &[Rational], d: usize) -> Matrix {
    Matrix::from_rows(v.chunks(d).map(<[Rational]>::to_vec).collect())
}

fn unit(d: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    m[(i, j)] = Rational::one();
    m
}

/// Checks, on `End(V) = V ⊗ V*`, that the kernel of
/// `X ↦ X + B^{-1} Xᵀ B` (the operators preserving the form) equals the
/// image of `Λ²V` (symmetric form) or `S²V` (skew form) under
/// `v ⊗ w ↦ v wᵀ B`, and that both are stable under the group.
pub fn kernel_model_check(module: &FormModule) -> bool {
    let d = module.dim();
    if d == 0 {
        return true;
    }
    let b = &module.form;
    let b_inv = b.inverse().expect("validated non-degenerate");
    let n = d * d;
    // Columns of the map K in the basis E_ij.
    let mut rows: Vec<Vector> = vec![Vec::with_capacity(n); n];
    for i in 0..d {
        for j in 0..d {
            let x = unit(d, i, j);
            let kx = flatten(&x.add(&b_inv.mul(&x.transpose()).mul(b)));
            for (r, v) in rows.iter_mut().zip(kx) {
                r.push(v);
            }
        }
    }
    let kernel = Matrix::from_rows(rows).nullspace();
    let kernel_space = Subspace::spanned_by(n, kernel.iter());

    let sign = if module.is_symmetric() {
        -Rational::one()
    } else {
        Rational::one()
    };
    let mut image = Subspace::new(n);
    for i in 0..d {
        for j in i..d {
            // v_i w_jᵀ ± v_j w_iᵀ: antisymmetric for Λ², symmetric for S².
            let a = unit(d, i, j).add(&unit(d, j, i).scale(&sign));
            if !a.is_zero() {
                image.insert(&flatten(&a.mul(b)));
            }
        }
    }
    let expected = if module.is_symmetric() {
        d * (d - 1) / 2
    } else {
        d * (d + 1) / 2
    };
    if kernel_space.dim() != expected || image.dim() != expected {
        return false;
    }
    if !image.basis().all(|v| kernel_space.contains(v)) {
        return false;
    }
    module.gens.iter().all(|g| {
        let g_inv = g.inverse().expect("invertible");
        kernel_space.basis().all(|v| {
            let conj = g.mul(&unflatten(v, d)).mul(&g_inv);
            kernel_space.contains(&flatten(&conj))
        })
    })
}
