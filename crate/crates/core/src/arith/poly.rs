use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Int, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `t` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`; there is never a trailing zero, so
/// the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(Int::from(c)))
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(Int::from(x)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `q` for `t`.
    pub fn compose(&self, q: &PolyQ) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * q) + &Self::constant(c.clone())
        })
    }

    /// `p(t + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        self.compose(&Self::new(vec![c.clone(), Rational::one()]))
    }

    /// Text form in the binomial basis, e.g. `2*C(t,2) + C(t,1)`.
    pub fn to_binomial_string(&self) -> String {
        let terms: Vec<(usize, Rational)> = to_binomial_basis(self)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .rev()
            .collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        join_terms(terms.into_iter().map(|(k, c)| {
            let body = if k == 0 {
                String::new()
            } else {
                format!("C(t,{k})")
            };
            (c, body)
        }))
    }
}

/// Joins `(coefficient, body)` pairs into `a*x + b*y - c` form.
fn join_terms(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if body.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{a}*{body}"));
        }
    }
    out
}

impl fmt::Display for PolyQ {
    /// Expanded form, highest degree first: `1/2*t^2 - 1/2*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let body = match k {
                    0 => String::new(),
                    1 => "t".to_string(),
                    _ => format!("t^{k}"),
                };
                (c.clone(), body)
            });
        f.write_str(&join_terms(terms))
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: PolyQ) -> PolyQ {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

impl std::iter::Sum for PolyQ {
    fn sum<I: Iterator<Item = PolyQ>>(iter: I) -> PolyQ {
        iter.fold(PolyQ::zero(), |a, b| &a + &b)
    }
}

/// `t(t-1)...(t-k+1)/k!`
pub fn binom_poly(k: usize) -> PolyQ {
    let mut p = PolyQ::one();
    for i in 0..k {
        let f = PolyQ::new(vec![Rational::from_integer(-Int::from(i)), Rational::one()]);
        p = &p * &f;
    }
    p.scale(&Rational::new(Int::one(), super::factorial(k as u64)))
}

/// Coefficients `c_k` with `p = sum c_k C(t,k)`: the forward differences of `p` at 0.
pub fn to_binomial_basis(p: &PolyQ) -> Vec<Rational> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    let mut vals: Vec<Rational> = (0..=d as i64).map(|x| p.eval_int(x)).collect();
    let mut out = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        out.push(vals[0].clone());
        vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

pub fn from_binomial_basis(c: &[Rational]) -> PolyQ {
    c.iter()
        .enumerate()
        .map(|(k, ck)| binom_poly(k).scale(ck))
        .sum()
}

/// The polynomial of degree at most `max_degree` through the first
/// `max_degree + 1` points; any further points are checked against it.
pub fn interpolate(points: &[(Rational, Rational)], max_degree: usize) -> Result<PolyQ> {
    let need = max_degree + 1;
    if points.len() < need {
        return Err(Error::Precondition(format!(
            "interpolation needs {need} points, got {}",
            points.len()
        )));
    }
    let (head, surplus) = points.split_at(need);
    for i in 0..need {
        for j in 0..i {
            if head[i].0 == head[j].0 {
                return Err(Error::Precondition("repeated abscissa".into()));
            }
        }
    }
    // Newton divided differences.
    let xs: Vec<&Rational> = head.iter().map(|p| &p.0).collect();
    let mut dd: Vec<Rational> = head.iter().map(|p| p.1.clone()).collect();
    for level in 1..need {
        for i in (level..need).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut p = PolyQ::zero();
    for i in (0..need).rev() {
        let lin = PolyQ::new(vec![-xs[i].clone(), Rational::one()]);
        p = &(&p * &lin) + &PolyQ::constant(dd[i].clone());
    }
    for (x, y) in surplus {
        let got = p.eval(x);
        if &got != y {
            return Err(Error::VerificationFailure(format!(
                "interpolant {p} gives {got} at {x}, expected {y}"
            )));
        }
    }
    Ok(p)
}

/// All rational roots of a nonzero polynomial, ascending and without repeats.
pub fn rational_roots(p: &PolyQ) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let lcm = p.coeffs().iter().fold(Int::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    let ints: Vec<Int> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rational::zero());
    }
    if low < deg {
        let divisors = |n: &Int| -> Vec<Int> {
            let n = n.abs();
            let mut out = Vec::new();
            let mut d = Int::one();
            while &d * &d <= n {
                if (&n % &d).is_zero() {
                    out.push(d.clone());
                    out.push(&n / &d);
                }
                d += 1;
            }
            out
        };
        for a in divisors(&ints[low]) {
            for b in divisors(&ints[deg]) {
                for sign in [1, -1] {
                    let x = Rational::new(&a * sign, b.clone());
                    if p.eval(&x).is_zero() && !roots.contains(&x) {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(x, y)| (rat(x), rat(y))).collect()
    }

    #[test]
    fn roots() {
        let t = PolyQ::t();
        let p = &(&t + &PolyQ::one())
            * &(&t.scale(&Rational::new(2.into(), 1.into())) - &PolyQ::from_int(3));
        assert_eq!(
            rational_roots(&p),
            vec![crate::arith::rat(-1), Rational::new(3.into(), 2.into())]
        );
        assert_eq!(rational_roots(&(&t * &t)), vec![Rational::zero()]);
        assert!(rational_roots(&(&(&t * &t) + &PolyQ::one())).is_empty());
    }

    #[test]
    fn binom_poly_values() {
        assert_eq!(binom_poly(0), PolyQ::one());
        assert_eq!(
            binom_poly(2),
            PolyQ::new(vec![rat(0), ratio(-1, 2), ratio(1, 2)])
        );
        assert_eq!(binom_poly(2).eval(&ratio(1, 2)), ratio(-1, 8));
        assert_eq!(binom_poly(5).leading(), ratio(1, 120));
        assert_eq!(binom_poly(5).degree(), Some(5));
    }

    #[test]
    fn binomial_basis_examples() {
        assert_eq!(to_binomial_basis(&PolyQ::one()), vec![rat(1)]);
        let t2 = PolyQ::t().pow(2);
        assert_eq!(to_binomial_basis(&t2), vec![rat(0), rat(1), rat(2)]);
        let p = PolyQ::new(vec![rat(0), ratio(-3, 2), ratio(1, 2)]);
        assert_eq!(to_binomial_basis(&p), vec![rat(0), rat(-1), rat(1)]);
        assert!(to_binomial_basis(&PolyQ::zero()).is_empty());
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(
            interpolate(&pts(&[(0, 1), (1, 1)]), 1).unwrap(),
            PolyQ::one()
        );
        assert_eq!(
            interpolate(&pts(&[(0, 0), (1, 1), (2, 4)]), 2).unwrap(),
            PolyQ::t().pow(2)
        );
        let p = interpolate(&pts(&[(2, 1), (3, 2), (4, 3), (5, 4)]), 1).unwrap();
        assert_eq!(p.to_string(), "t - 1");
        let bad = interpolate(&pts(&[(0, 0), (1, 1), (2, 4)]), 1);
        assert!(matches!(bad, Err(Error::VerificationFailure(_))));
    }

    #[test]
    fn display_forms() {
        assert_eq!(binom_poly(2).to_string(), "1/2*t^2 - 1/2*t");
        assert_eq!(PolyQ::zero().to_string(), "0");
        assert_eq!(PolyQ::from_int(-2).to_string(), "-2");
        assert_eq!((-PolyQ::t()).to_string(), "-t");
        let t2 = PolyQ::t().pow(2);
        assert_eq!(t2.to_binomial_string(), "2*C(t,2) + C(t,1)");
        assert_eq!(PolyQ::one().to_binomial_string(), "1");
    }

    #[test]
    fn shift_and_compose() {
        let p = binom_poly(2);
        assert_eq!(p.shift(&rat(1)).eval_int(3), rat(6));
        assert_eq!(p.compose(&PolyQ::t().pow(2)).eval_int(2), rat(6));
    }
}
