//! The Witt algebra `W(1, (1))` over `F_p`: basis `x^{(a)}∂` for `0 ≤ a < p`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;

use crate::arith::{binomial, is_prime};
use crate::error::{Error, Result};

fn check_p(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Precondition(format!("p = {p} is not an odd prime")));
    }
    Ok(())
}

/// `x^{(a)} · x^{(b)} = C(a+b, a) x^{(a+b)}` in `O(1, (1))`, returned as
/// `(coefficient mod p, exponent)`. The product is zero once `a + b ≥ p`.
pub fn divided_multiply(a: usize, b: usize, p: u64) -> Result<(u64, usize)> {
    check_p(p)?;
    if a as u64 >= p || b as u64 >= p {
        return Err(Error::OutOfRangeExponent(format!(
            "x^({a}) · x^({b}) with p = {p}"
        )));
    }
    if (a + b) as u64 >= p {
        return Ok((0, a + b));
    }
    let c = binomial((a + b) as u64, a as u64) % p;
    Ok((c.to_u64().unwrap(), a + b))
}

/// An element `Σ c_a x^{(a)}∂` with coefficients in `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WittElement {
    pub p: u64,
    coeffs: BTreeMap<usize, u64>,
}

impl WittElement {
    pub fn zero(p: u64) -> Self {
        WittElement {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    /// `c · x^{(a)}∂`.
    pub fn monomial(p: u64, a: usize, c: u64) -> Result<Self> {
        check_p(p)?;
        if a as u64 >= p {
            return Err(Error::OutOfRangeExponent(format!("x^({a})∂ with p = {p}")));
        }
        let mut out = Self::zero(p);
        out.add_term(a, c);
        Ok(out)
    }

    pub fn from_vec(p: u64, v: &[u64]) -> Self {
        let mut out = Self::zero(p);
        for (a, &c) in v.iter().enumerate() {
            out.add_term(a, c);
        }
        out
    }

    pub fn to_vec(&self) -> Vec<u64> {
        (0..self.p as usize).map(|a| self.coeff(a)).collect()
    }

    pub fn coeff(&self, a: usize) -> u64 {
        self.coeffs.get(&a).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, a: usize, c: u64) {
        let c = (self.coeff(a) + c % self.p) % self.p;
        if c == 0 {
            self.coeffs.remove(&a);
        } else {
            self.coeffs.insert(a, c);
        }
    }

    pub fn add(&self, other: &WittElement) -> WittElement {
        let mut out = self.clone();
        for (&a, &c) in &other.coeffs {
            out.add_term(a, c);
        }
        out
    }

    pub fn scale(&self, k: u64) -> WittElement {
        let mut out = Self::zero(self.p);
        for (&a, &c) in &self.coeffs {
            out.add_term(a, c * (k % self.p));
        }
        out
    }

    pub fn neg(&self) -> WittElement {
        self.scale(self.p - 1)
    }
}

impl fmt::Display for WittElement {
    /// `2*x^(3)d + d`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(&a, &c)| {
                let mono = if a == 0 {
                    "d".to_string()
                } else {
                    format!("x^({a})d")
                };
                if c == 1 {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `[x^{(a)}∂, x^{(b)}∂] = (x^{(a)}·x^{(b-1)} - x^{(b)}·x^{(a-1)})∂`.
fn bracket_basis(a: usize, b: usize, p: u64) -> Result<WittElement> {
    let mut out = WittElement::zero(p);
    if b > 0 {
        let (c, e) = divided_multiply(a, b - 1, p)?;
        if c != 0 {
            out.add_term(e, c);
        }
    }
    if a > 0 {
        let (c, e) = divided_multiply(b, a - 1, p)?;
        if c != 0 {
            out.add_term(e, p - c);
        }
    }
    Ok(out)
}

/// `[f∂, g∂] = (f·∂g - g·∂f)∂`, extended bilinearly.
pub fn witt_bracket(x: &WittElement, y: &WittElement) -> Result<WittElement> {
    if x.p != y.p {
        return Err(Error::Precondition(format!(
            "characteristics {} and {} differ",
            x.p, y.p
        )));
    }
    let p = x.p;
    let mut out = WittElement::zero(p);
    for (&a, &c) in &x.coeffs {
        for (&b, &d) in &y.coeffs {
            out = out.add(&bracket_basis(a, b, p)?.scale(c * d % p));
        }
    }
    Ok(out)
}

pub fn witt_basis(p: u64) -> Result<Vec<WittElement>> {
    (0..p as usize)
        .map(|a| WittElement::monomial(p, a, 1))
        .collect()
}

/// A subspace of `F_p^d` kept in reduced row echelon form.
#[derive(Clone, Debug)]
struct ModSubspace {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

fn inv_mod(x: u64, p: u64) -> u64 {
    let mut r = 1;
    let (mut b, mut e) = (x % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl ModSubspace {
    fn new(p: u64) -> Self {
        ModSubspace {
            p,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, v: &mut [u64]) {
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + (self.p - c) * r) % self.p;
                }
            }
        }
    }

    /// Adds `v`; returns whether the dimension grew.
    fn insert(&mut self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[piv], p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        self.rows.push((piv, v));
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// `W(1, (1))` over `F_p` with its structure constants precomputed.
#[derive(Clone, Debug)]
pub struct WittAlgebra {
    pub p: u64,
    table: Vec<Vec<WittElement>>,
}

impl WittAlgebra {
    pub fn new(p: u64) -> Result<Self> {
        check_p(p)?;
        let n = p as usize;
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| bracket_basis(a, b, p))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WittAlgebra { p, table })
    }

    pub fn dim(&self) -> usize {
        self.p as usize
    }

    pub fn bracket(&self, x: &WittElement, y: &WittElement) -> WittElement {
        let mut out = WittElement::zero(self.p);
        for (&a, &c) in &x.coeffs {
            for (&b, &d) in &y.coeffs {
                out = out.add(&self.table[a][b].scale(c * d % self.p));
            }
        }
        out
    }

    /// `[x, y] = -[y, x]` and `[x, x] = 0` on basis elements.
    pub fn check_antisymmetry(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            self.table[a][a].is_zero() && (0..n).all(|b| self.table[a][b] == self.table[b][a].neg())
        })
    }

    /// Jacobi identity on every basis triple.
    pub fn check_jacobi(&self) -> bool {
        let n = self.dim();
        let e = |a: usize| WittElement::monomial(self.p, a, 1).unwrap();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    let t1 = self.bracket(&e(a), &self.table[b][c]);
                    let t2 = self.bracket(&e(b), &self.table[c][a]);
                    let t3 = self.bracket(&e(c), &self.table[a][b]);
                    t1.add(&t2).add(&t3).is_zero()
                })
            })
        })
    }

    /// Dimension of the ideal generated by `v`.
    pub fn ideal_dim(&self, v: &WittElement) -> usize {
        let mut span = ModSubspace::new(self.p);
        let mut queue = vec![v.clone()];
        span.insert(&v.to_vec());
        while let Some(x) = queue.pop() {
            for a in 0..self.dim() {
                let y = self.bracket(&WittElement::monomial(self.p, a, 1).unwrap(), &x);
                if span.insert(&y.to_vec()) {
                    queue.push(y);
                }
            }
        }
        span.dim()
    }

    /// A nonzero element generating a proper ideal, if one exists. Runs over
    /// every element with leading coefficient 1, i.e. `(p^p - 1)/(p - 1)` of them.
    pub fn proper_ideal_witness(&self) -> Option<WittElement> {
        let n = self.dim();
        let p = self.p;
        for lead in 0..n {
            let free = n - lead - 1;
            let total = p.pow(free as u32);
            for code in 0..total {
                let mut v = vec![0u64; n];
                v[lead] = 1;
                let mut c = code;
                for x in v.iter_mut().skip(lead + 1) {
                    *x = c % p;
                    c /= p;
                }
                let w = WittElement::from_vec(p, &v);
                if self.ideal_dim(&w) < n {
                    return Some(w);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication() {
        assert_eq!(divided_multiply(1, 1, 5).unwrap(), (2, 2));
        assert_eq!(divided_multiply(4, 1, 5).unwrap().0, 0);
        assert_eq!(divided_multiply(2, 2, 7).unwrap(), (6, 4));
        assert!(matches!(
            divided_multiply(5, 0, 5),
            Err(Error::OutOfRangeExponent(_))
        ));
    }

    #[test]
    fn brackets() {
        let d = WittElement::monomial(5, 0, 1).unwrap();
        let xd = WittElement::monomial(5, 1, 1).unwrap();
        assert_eq!(witt_bracket(&d, &xd).unwrap(), d);
        assert_eq!(witt_bracket(&xd, &d).unwrap(), d.neg());
        assert_eq!(d.to_string(), "d");
        assert_eq!(
            witt_bracket(&xd, &WittElement::monomial(5, 3, 1).unwrap())
                .unwrap()
                .to_string(),
            "2*x^(3)d"
        );
    }

    #[test]
    fn axioms_and_simplicity() {
        for p in [5, 7] {
            let w = WittAlgebra::new(p).unwrap();
            assert!(w.check_antisymmetry());
            assert!(w.check_jacobi());
        }
        assert!(WittAlgebra::new(5)
            .unwrap()
            .proper_ideal_witness()
            .is_none());
        assert!(WittAlgebra::new(4).is_err());
    }
}
