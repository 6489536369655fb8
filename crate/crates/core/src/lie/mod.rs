//! Lie algebra objects in `Rep(S_t)`: the classical and super constructions,
//! simplicity in `Vect`, Cartan-type dimensions, a small modular Witt algebra
//! and the induced classification data.

mod cartan;
mod classify;
mod equivariant;
mod objects;
mod witt;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use cartan::{cartan_dim, growth_crossover, CartanDim, CartanType};
pub use classify::{
    build_simple_lie, enumerate_classification, Action, ClassificationDatum, SimpleLie,
};
pub use equivariant::{h_alt2, h_sym2, h_tensor};
pub use objects::{
    gl_obj, gl_super, has_skew_form, has_symmetric_form, osp_super, p_super, psl_obj, psl_super,
    q_super, sl_obj, sl_super, so_obj, sp_obj, SuperObject,
};
pub use witt::{divided_multiply, witt_basis, witt_bracket, WittAlgebra, WittElement};

/// Exceptional simple Lie algebras, which only enter as sums of unit objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exceptional {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Exceptional {
    pub const ALL: [Exceptional; 5] = [
        Exceptional::G2,
        Exceptional::F4,
        Exceptional::E6,
        Exceptional::E7,
        Exceptional::E8,
    ];

    pub fn dim(self) -> u64 {
        match self {
            Exceptional::G2 => 14,
            Exceptional::F4 => 52,
            Exceptional::E6 => 78,
            Exceptional::E7 => 133,
            Exceptional::E8 => 248,
        }
    }
}

/// The shapes of simple Lie (super)algebra appearing in the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieKind {
    Exceptional(Exceptional),
    Gl,
    Sl,
    Psl,
    So,
    Sp,
    SlSuper,
    PslSuper,
    Osp,
    P,
    Q,
}

impl LieKind {
    /// Kinds built from a pair `(V, W)`.
    pub fn is_super_pair(self) -> bool {
        matches!(self, LieKind::SlSuper | LieKind::PslSuper | LieKind::Osp)
    }

    pub fn is_super(self) -> bool {
        self.is_super_pair() || matches!(self, LieKind::P | LieKind::Q)
    }

    /// Every non-exceptional kind, followed by the five exceptional ones.
    pub fn all() -> Vec<LieKind> {
        use LieKind::*;
        let mut v = vec![Gl, Sl, Psl, So, Sp, SlSuper, PslSuper, Osp, P, Q];
        v.extend(crate::lie::Exceptional::ALL.map(LieKind::Exceptional));
        v
    }

    /// Parses a comma-separated list; `exceptional` expands to all five types.
    pub fn parse_list(s: &str) -> Result<Vec<LieKind>> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            match item {
                "exceptional" => out.extend(Exceptional::ALL.map(LieKind::Exceptional)),
                "all" => out.extend(LieKind::all()),
                _ => out.push(item.parse()?),
            }
        }
        Ok(out)
    }
}

impl fmt::Display for LieKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieKind::Exceptional(e) => return write!(f, "{e:?}"),
            LieKind::Gl => "gl",
            LieKind::Sl => "sl",
            LieKind::Psl => "psl",
            LieKind::So => "so",
            LieKind::Sp => "sp",
            LieKind::SlSuper => "sl-super",
            LieKind::PslSuper => "psl-super",
            LieKind::Osp => "osp",
            LieKind::P => "p",
            LieKind::Q => "q",
        };
        f.write_str(s)
    }
}

impl FromStr for LieKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "gl" => LieKind::Gl,
            "sl" => LieKind::Sl,
            "psl" => LieKind::Psl,
            "so" => LieKind::So,
            "sp" => LieKind::Sp,
            "sl-super" => LieKind::SlSuper,
            "psl-super" => LieKind::PslSuper,
            "osp" => LieKind::Osp,
            "p" => LieKind::P,
            "q" => LieKind::Q,
            "G2" | "g2" => LieKind::Exceptional(Exceptional::G2),
            "F4" | "f4" => LieKind::Exceptional(Exceptional::F4),
            "E6" | "e6" => LieKind::Exceptional(Exceptional::E6),
            "E7" | "e7" => LieKind::Exceptional(Exceptional::E7),
            "E8" | "e8" => LieKind::Exceptional(Exceptional::E8),
            other => return Err(Error::Parse(format!("unknown Lie kind {other:?}"))),
        })
    }
}

fn congruent(a: i64, b: i64, p: u64) -> bool {
    if p == 0 {
        a == b
    } else {
        (a - b).rem_euclid(p as i64) == 0
    }
}

/// Whether the algebra of the given kind built on vector spaces of dimensions
/// `dims` (one entry, or two for `(V|W)` kinds) is simple over an
/// algebraically closed field of characteristic `p` (0 or a prime).
///
/// The super rows are the classical results: `sl(V|W)` iff the dimensions
/// differ (mod `p`); `psl(V|W)` when they agree and both exceed 1; `osp`
/// always; `p(V)` and `q(V)` iff `dim V ≥ 2`. The even rows follow the
/// usual list for `p ≠ 2`; `gl` is never simple.
pub fn simple_predicate(kind: LieKind, dims: &[i64], p: u64) -> bool {
    let d = dims.first().copied().unwrap_or(0);
    let e = dims.get(1).copied().unwrap_or(0);
    let divides = |x: i64| p > 0 && x.rem_euclid(p as i64) == 0;
    match kind {
        LieKind::SlSuper => !congruent(d, e, p),
        LieKind::PslSuper => congruent(d, e, p) && d > 1 && e > 1,
        LieKind::Osp => true,
        LieKind::P | LieKind::Q => d >= 2,
        LieKind::Gl => false,
        LieKind::Sl => d >= 2 && !divides(d),
        LieKind::Psl => d >= 3 && divides(d),
        LieKind::So => d >= 3 && d != 4,
        LieKind::Sp => d >= 2 && d % 2 == 0,
        LieKind::Exceptional(_) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn super_truth_table() {
        assert!(!simple_predicate(LieKind::SlSuper, &[2, 2], 0));
        assert!(simple_predicate(LieKind::SlSuper, &[2, 3], 0));
        assert!(simple_predicate(LieKind::Q, &[2], 0));
        assert!(!simple_predicate(LieKind::Q, &[1], 0));
        assert!(!simple_predicate(LieKind::SlSuper, &[2, 7], 5));
        assert!(simple_predicate(LieKind::PslSuper, &[2, 7], 5));
        assert!(!simple_predicate(LieKind::PslSuper, &[1, 1], 0));
        assert!(simple_predicate(LieKind::Osp, &[1, 2], 3));
    }

    #[test]
    fn classical_rows() {
        assert!(simple_predicate(LieKind::Sl, &[5], 0));
        assert!(!simple_predicate(LieKind::Sl, &[5], 5));
        assert!(simple_predicate(LieKind::Psl, &[5], 5));
        assert!(!simple_predicate(LieKind::So, &[4], 0));
        assert!(!simple_predicate(LieKind::Sp, &[3], 0));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in LieKind::all() {
            assert_eq!(k.to_string().parse::<LieKind>().unwrap(), k);
        }
        assert_eq!(LieKind::parse_list("sl, exceptional").unwrap().len(), 6);
        assert!("spin".parse::<LieKind>().is_err());
    }
}
