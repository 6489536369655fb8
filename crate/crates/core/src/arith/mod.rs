//! Exact integers, rationals and univariate polynomials over Q.

mod poly;

pub use poly::{
    binom_poly, from_binomial_basis, interpolate, rational_roots, to_binomial_basis, PolyQ,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// Parses `"a/b"` or `"a"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = n.parse().map_err(|_| bad())?;
    let d: Int = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

pub fn to_i64(x: &Rational) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn factorial(n: u64) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * k)
}

/// Binomial coefficient C(n, k) for nonnegative integers.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> Int {
    let mut row = vec![Int::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// Distinct prime factors of |n| by trial division; n must be nonzero.
pub fn prime_factors(n: &Int) -> Vec<Int> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = Int::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(p.clone());
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > Int::one() {
        out.push(n);
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Text form used throughout: `a/b` or `a`.
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("-1/8").unwrap(), ratio(-1, 8));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(fmt_rational(&rat(0)), "0");
    }

    #[test]
    fn lowest_terms() {
        let x = ratio(6, -4);
        assert_eq!(x.numer(), &int(-3));
        assert_eq!(x.denom(), &int(2));
    }

    #[test]
    fn bell_numbers() {
        let expect = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in expect.iter().enumerate() {
            assert_eq!(bell(n), int(b));
        }
    }

    #[test]
    fn binomials_and_primes() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(2, 5), int(0));
        assert_eq!(factorial(6), int(720));
        assert_eq!(prime_factors(&int(-360)), vec![int(2), int(3), int(5)]);
        assert!(is_prime(7) && !is_prime(9) && !is_prime(1));
    }
}
