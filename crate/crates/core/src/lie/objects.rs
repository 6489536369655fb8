use std::fmt;

use crate::arith::{PolyQ, Rational};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::repst::{Engine, RepObject};

fn unit_copies(k: u64) -> RepObject {
    RepObject::from_terms([(Partition::empty(), k)])
}

/// A `Z/2`-graded object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperObject {
    pub even: RepObject,
    pub odd: RepObject,
}

impl SuperObject {
    /// `dim even + dim odd`.
    pub fn total_dim(&self) -> Result<PolyQ> {
        Ok(&self.even.dim_poly()? + &self.odd.dim_poly()?)
    }

    /// `dim even - dim odd`.
    pub fn superdim(&self) -> Result<PolyQ> {
        Ok(&self.even.dim_poly()? - &self.odd.dim_poly()?)
    }
}

impl fmt::Display for SuperObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "even {} | odd {}", self.even, self.odd)
    }
}

/// Whether `W` carries a non-degenerate invariant symmetric form. Every
/// simple object is self-dual through a symmetric form, so this holds for
/// all nonzero `W`.
pub fn has_symmetric_form(w: &RepObject) -> bool {
    !w.is_zero()
}

/// Whether `W` carries a non-degenerate invariant skew form: each isotypic
/// part `𝒳(λ) ⊗ C^m` needs a skew form on `C^m`, so every `m` must be even.
pub fn has_skew_form(w: &RepObject) -> bool {
    !w.is_zero() && w.terms().values().all(|m| m % 2 == 0)
}

impl Engine {
    /// `gl(W) = W ⊗ W*`, using that every object is self-dual.
    pub fn gl(&self, w: &RepObject) -> Result<RepObject> {
        if w.is_zero() {
            return Err(Error::ZeroObject);
        }
        Ok(self.tensor(w, w)?.result)
    }

    /// `sl(W)`: the kernel of evaluation, one trivial summand less than `gl(W)`.
    pub fn sl(&self, w: &RepObject) -> Result<RepObject> {
        self.gl(w)?.sub(&unit_copies(1))
    }

    /// `psl(W)` for `dim W(t₀) = 0`: two trivial summands less than `gl(W)`.
    pub fn psl(&self, w: &RepObject, t0: &Rational) -> Result<RepObject> {
        let d = w.dim_poly()?.eval(t0);
        if !num_traits::Zero::is_zero(&d) {
            return Err(Error::DimensionNonzero(t0.to_string(), d.to_string()));
        }
        let gl = self.gl(w)?;
        let triv = gl.mult(&Partition::empty());
        if triv < 2 {
            return Err(Error::InsufficientTrivial(format!(
                "gl({w}) contains the unit object {triv} time(s); the image of coev and the kernel of ev coincide"
            )));
        }
        gl.sub(&unit_copies(2))
    }

    /// `so(W)`, realized as `Λ²W`.
    pub fn so(&self, w: &RepObject) -> Result<RepObject> {
        if !has_symmetric_form(w) {
            return Err(Error::NoInvariantForm(format!("{w} has no symmetric form")));
        }
        Ok(self.alt2(w)?.result)
    }

    /// `sp(W)`, realized as `S²W`.
    pub fn sp(&self, w: &RepObject) -> Result<RepObject> {
        if !has_skew_form(w) {
            return Err(Error::NoInvariantForm(format!(
                "{w} has no non-degenerate skew form (some multiplicity is odd)"
            )));
        }
        Ok(self.sym2(w)?.result)
    }

    fn nonzero(v: &RepObject, w: &RepObject) -> Result<()> {
        if v.is_zero() || w.is_zero() {
            return Err(Error::ZeroObject);
        }
        Ok(())
    }

    /// `gl(V|W)`: even `V⊗V ⊕ W⊗W`, odd `V⊗W ⊕ W⊗V`.
    pub fn gl_super(&self, v: &RepObject, w: &RepObject) -> Result<SuperObject> {
        Self::nonzero(v, w)?;
        let even = self.tensor(v, v)?.result.add(&self.tensor(w, w)?.result);
        let odd = self.tensor(v, w)?.result.scale(2);
        Ok(SuperObject { even, odd })
    }

    /// `sl(V|W)`: the kernel of the supertrace.
    pub fn sl_super(&self, v: &RepObject, w: &RepObject) -> Result<SuperObject> {
        let g = self.gl_super(v, w)?;
        Ok(SuperObject {
            even: g.even.sub(&unit_copies(1))?,
            odd: g.odd,
        })
    }

    /// `psl(V|W)` for `dim V(t₀) = dim W(t₀)`.
    pub fn psl_super(&self, v: &RepObject, w: &RepObject, t0: &Rational) -> Result<SuperObject> {
        let (dv, dw) = (v.dim_poly()?.eval(t0), w.dim_poly()?.eval(t0));
        if dv != dw {
            return Err(Error::DimensionNonzero(
                t0.to_string(),
                (dv - dw).to_string(),
            ));
        }
        let s = self.sl_super(v, w)?;
        Ok(SuperObject {
            even: s.even.sub(&unit_copies(1))?,
            odd: s.odd,
        })
    }

    /// `osp(V|W)`: even `Λ²V ⊕ S²W`, odd `V⊗W`.
    pub fn osp_super(&self, v: &RepObject, w: &RepObject) -> Result<SuperObject> {
        Self::nonzero(v, w)?;
        if !has_skew_form(w) {
            return Err(Error::NoInvariantForm(format!(
                "{w} has no non-degenerate skew form"
            )));
        }
        let even = self.alt2(v)?.result.add(&self.sym2(w)?.result);
        let odd = self.tensor(v, w)?.result;
        Ok(SuperObject { even, odd })
    }

    /// `p(V)`: even `V⊗V ⊖ 1`, odd `S²V ⊕ Λ²V`.
    pub fn p_super(&self, v: &RepObject) -> Result<SuperObject> {
        if v.is_zero() {
            return Err(Error::ZeroObject);
        }
        let even = self.tensor(v, v)?.result.sub(&unit_copies(1))?;
        let odd = self.sym2(v)?.result.add(&self.alt2(v)?.result);
        Ok(SuperObject { even, odd })
    }

    /// `q(V)`: even and odd parts both `V⊗V ⊖ 1`.
    pub fn q_super(&self, v: &RepObject) -> Result<SuperObject> {
        if v.is_zero() {
            return Err(Error::ZeroObject);
        }
        let part = self.tensor(v, v)?.result.sub(&unit_copies(1))?;
        Ok(SuperObject {
            even: part.clone(),
            odd: part,
        })
    }
}

pub fn gl_obj(w: &RepObject) -> Result<RepObject> {
    Engine::default().gl(w)
}

pub fn sl_obj(w: &RepObject) -> Result<RepObject> {
    Engine::default().sl(w)
}

pub fn psl_obj(w: &RepObject, t0: &Rational) -> Result<RepObject> {
    Engine::default().psl(w, t0)
}

pub fn so_obj(w: &RepObject) -> Result<RepObject> {
    Engine::default().so(w)
}

pub fn sp_obj(w: &RepObject) -> Result<RepObject> {
    Engine::default().sp(w)
}

pub fn gl_super(v: &RepObject, w: &RepObject) -> Result<SuperObject> {
    Engine::default().gl_super(v, w)
}

pub fn sl_super(v: &RepObject, w: &RepObject) -> Result<SuperObject> {
    Engine::default().sl_super(v, w)
}

pub fn psl_super(v: &RepObject, w: &RepObject, t0: &Rational) -> Result<SuperObject> {
    Engine::default().psl_super(v, w, t0)
}

pub fn osp_super(v: &RepObject, w: &RepObject) -> Result<SuperObject> {
    Engine::default().osp_super(v, w)
}

pub fn p_super(v: &RepObject) -> Result<SuperObject> {
    Engine::default().p_super(v)
}

pub fn q_super(v: &RepObject) -> Result<SuperObject> {
    Engine::default().q_super(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::repst::decompose_power;

    fn obj(s: &str) -> RepObject {
        s.parse().unwrap()
    }

    #[test]
    fn classical() {
        assert_eq!(gl_obj(&RepObject::unit()).unwrap(), RepObject::unit());
        let perm = obj("{[]:1,[1]:1}");
        assert_eq!(gl_obj(&perm).unwrap(), decompose_power(2).unwrap());
        let x1 = obj("[1]");
        let t1 = &PolyQ::t() - &PolyQ::one();
        assert_eq!(gl_obj(&x1).unwrap().dim_poly().unwrap(), t1.pow(2));
        assert_eq!(sl_obj(&x1).unwrap(), obj("{[1]:1,[2]:1,[1,1]:1}"));
        assert!(sl_obj(&RepObject::unit()).unwrap().is_zero());
        assert!(matches!(gl_obj(&RepObject::zero()), Err(Error::ZeroObject)));
    }

    #[test]
    fn psl_dimension_minus_two() {
        let w = obj("{[]:2,[1]:1}");
        let p = psl_obj(&w, &rat(-1)).unwrap();
        assert_eq!(p.dim_poly().unwrap().eval(&rat(-1)), rat(-2));
        assert_eq!(
            p.mult(&Partition::empty()),
            gl_obj(&w).unwrap().mult(&Partition::empty()) - 2
        );
        assert!(matches!(
            psl_obj(&w, &rat(3)),
            Err(Error::DimensionNonzero(..))
        ));
        // dim 𝒳(1) = t - 1 vanishes at 1, but 𝒳(1) ⊗ 𝒳(1) has a single unit summand.
        assert!(matches!(
            psl_obj(&obj("[1]"), &rat(1)),
            Err(Error::InsufficientTrivial(_))
        ));
    }

    #[test]
    fn orthogonal_symplectic() {
        let perm = obj("{[]:1,[1]:1}");
        let so = so_obj(&perm).unwrap();
        assert_eq!(so, obj("{[1]:1,[1,1]:1}"));
        let t = PolyQ::t();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(
            so.dim_poly().unwrap(),
            (&t * &(&t - &PolyQ::one())).scale(&half)
        );
        assert!(matches!(
            sp_obj(&RepObject::unit()),
            Err(Error::NoInvariantForm(_))
        ));
        let w = obj("{[1]:2}");
        let total =
            &so_obj(&w).unwrap().dim_poly().unwrap() + &sp_obj(&w).unwrap().dim_poly().unwrap();
        assert_eq!(total, w.dim_poly().unwrap().pow(2));
    }

    #[test]
    fn super_examples() {
        let one = RepObject::unit();
        let g = gl_super(&one, &one).unwrap();
        assert_eq!(g.even, obj("{[]:2}"));
        assert_eq!(g.odd, obj("{[]:2}"));
        let v = obj("{[]:3}");
        assert_eq!(
            q_super(&v).unwrap().total_dim().unwrap(),
            PolyQ::from_int(16)
        );
        assert_eq!(
            p_super(&v).unwrap().total_dim().unwrap(),
            PolyQ::from_int(17)
        );
        let s = sl_super(&v, &obj("{[]:2}")).unwrap();
        assert_eq!(s.total_dim().unwrap(), PolyQ::from_int(24));
    }
}
