use num_traits::{One, Zero};

use super::algebra::{fun_g_algebra, symmetric_generators};
use crate::arith::Rational;
use crate::chars::FiniteSubgroup;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// `S_{N-j} × H` inside `S_N`, with `S_{N-j}` on the first `N - j` points.
pub fn young_times(n: usize, h: &FiniteSubgroup) -> Result<FiniteSubgroup> {
    let j = h.j;
    if j > n {
        return Err(Error::NotSubgroup(format!("{h} does not fit in S_{n}")));
    }
    let mut gens: Vec<_> = symmetric_generators(n - j)
        .into_iter()
        .map(|g| g.extend(n))
        .collect();
    gens.extend(h.generators().into_iter().map(|g| g.shifted(n - j, n)));
    FiniteSubgroup::generated(n, &gens)
}

/// Gram matrix of `(x, y) ↦ Tr(L_{xy})` on `Fun_{S_{N-j}×H}(S_N)` in the
/// basis of coset indicators; fails unless it is the identity.
pub fn frobenius_gram(n: usize, h: &FiniteSubgroup) -> Result<Matrix> {
    if n > 8 {
        return Err(Error::BoundExceeded(format!(
            "frobenius_gram needs N ≤ 8, got {n}"
        )));
    }
    let k = young_times(n, h)?;
    let algebra = fun_g_algebra(n, &k, 1, None)?;
    let gram = algebra.trace_form();
    for a in 0..gram.rows {
        for b in 0..gram.cols {
            let want = if a == b {
                Rational::one()
            } else {
                Rational::zero()
            };
            if gram[(a, b)] != want {
                return Err(Error::AssertionFailure(format!(
                    "Tr({} · {}) = {}, expected {}",
                    algebra.labels[a],
                    algebra.labels[b],
                    gram[(a, b)],
                    want
                )));
            }
        }
    }
    Ok(gram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities() {
        assert_eq!(
            frobenius_gram(4, &FiniteSubgroup::trivial(1)).unwrap(),
            Matrix::identity(4)
        );
        assert_eq!(
            frobenius_gram(4, &FiniteSubgroup::trivial(0)).unwrap(),
            Matrix::identity(1)
        );
        assert_eq!(
            frobenius_gram(5, &FiniteSubgroup::symmetric(2)).unwrap(),
            Matrix::identity(10)
        );
        assert_eq!(
            frobenius_gram(4, &FiniteSubgroup::trivial(2)).unwrap().rows,
            12
        );
    }
}
