use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::arith::{is_prime, Int};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    W,
    S,
    H,
    K,
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "W" | "w" => Ok(CartanType::W),
            "S" | "s" => Ok(CartanType::S),
            "H" | "h" => Ok(CartanType::H),
            "K" | "k" => Ok(CartanType::K),
            other => Err(Error::Parse(format!("unknown Cartan type {other:?}"))),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A Cartan-type dimension. For `K` the formula depends on `m` modulo `p`
/// and both candidates are returned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanDim {
    Exact(Int),
    Either(Int, Int),
}

impl fmt::Display for CartanDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanDim::Exact(d) => write!(f, "{d}"),
            CartanDim::Either(a, b) => write!(f, "{a} or {b}"),
        }
    }
}

/// Dimension of `X(m, n̲)` over a field of characteristic `p`, with
/// `N = p^{Σ nᵢ}`: `W` has `mN`, `S` has `(m-1)(N-1)`, `H` has `N-2` and
/// `K` has `N` or `N-1`.
pub fn cartan_dim(kind: CartanType, m: usize, n: &[usize], p: u64) -> Result<CartanDim> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("p = {p} is not prime")));
    }
    if m == 0 || n.len() != m || n.contains(&0) {
        return Err(Error::Precondition(format!(
            "need m ≥ 1 and {m} positive entries in n, got {n:?}"
        )));
    }
    match kind {
        CartanType::H if !m.is_multiple_of(2) => {
            return Err(Error::ParityViolation(format!(
                "H(m, n) needs even m, got {m}"
            )))
        }
        CartanType::K if m.is_multiple_of(2) => {
            return Err(Error::ParityViolation(format!(
                "K(m, n) needs odd m, got {m}"
            )))
        }
        _ => {}
    }
    let big_n: Int = Pow::pow(BigInt::from(p), n.iter().sum::<usize>() as u32);
    let m_int = Int::from(m);
    Ok(match kind {
        CartanType::W => CartanDim::Exact(m_int * &big_n),
        CartanType::S => CartanDim::Exact((m_int - 1) * (&big_n - 1)),
        CartanType::H => CartanDim::Exact(&big_n - 2),
        CartanType::K => CartanDim::Either(big_n.clone(), big_n - 1),
    })
}

/// The least `n₀` with `2^{n-j-1} - 3 > M·n^L` for every `n ≥ n₀`.
///
/// `2^{n-j-1}` bounds `p^{n-j-1}` from below for every prime `p`, so past
/// `n₀` a Cartan-type `h_n` is too large for any object of polynomial growth.
/// "For every `n`" is certified by induction: once the inequality holds at
/// `n` and `(n+1)^L ≤ 2n^L`, doubling the left side preserves it.
pub fn growth_crossover(m: u64, l: u32, j: usize) -> Result<usize> {
    if m == 0 || l == 0 {
        return Err(Error::Precondition("M and L must be positive".into()));
    }
    let holds = |n: usize| -> bool {
        if n < j + 1 {
            return false;
        }
        let lhs: Int = Pow::pow(BigInt::from(2), (n - j - 1) as u32) - 3;
        lhs > Int::from(m) * Pow::pow(BigInt::from(n), l)
    };
    let mut n = 1usize;
    loop {
        let ratio_ok: bool = {
            let a: Int = Pow::pow(BigInt::from(n + 1), l);
            let b: Int = Pow::pow(BigInt::from(n), l) * 2;
            a <= b
        };
        if ratio_ok && holds(n) {
            break;
        }
        n += 1;
    }
    while n > 1 && holds(n - 1) {
        n -= 1;
    }
    Ok(n)
}
