//! Young diagrams: padding, hook lengths, Littlewood–Richardson coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::arith::{factorial, Int};
use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers. Construction sorts and
/// drops zeros, so equal diagrams always compare and hash equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Wraps parts already known to be canonical.
    fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with rows numbered from 0; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(0)
    }

    /// Drops the first row; the inverse of [`pad`].
    pub fn strip_first_row(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Multiplicities of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first_row() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }
}

impl Ord for Partition {
    /// By size, then reverse lexicographic, so that `[2]` precedes `[1,1]`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1,1]`, `(3,1,1)`, `3,1,1`, `[]` and `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| s.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

impl From<Vec<usize>> for Partition {
    fn from(v: Vec<usize>) -> Self {
        Partition::new(v)
    }
}

/// Shorthand for tests and examples: `part(&[2, 1])`.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

/// An unsorted vector of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<usize>);

/// `λ|_n = (n - |λ|, λ_1, λ_2, ...)`.
pub fn pad(lambda: &Partition, n: usize) -> Result<Partition> {
    if n < lambda.first_row() + lambda.size() {
        return Err(Error::PadTooSmall {
            lambda: lambda.to_string(),
            n,
        });
    }
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    parts.push(n - lambda.size());
    parts.extend_from_slice(lambda.parts());
    Ok(Partition::new(parts))
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let cols = (0..lambda.first_row())
        .map(|c| lambda.0.iter().take_while(|&&r| r > c).count())
        .collect();
    Partition::from_sorted(cols)
}

/// Dimension of the irreducible `S_{|λ|}`-module, by the hook-length formula.
pub fn hook_dim(lambda: &Partition) -> Int {
    let conj = conjugate(lambda);
    let mut hooks = Int::from(1u32);
    for (i, &row) in lambda.0.iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j) + (conj.0[j] - i) - 1;
        }
    }
    factorial(lambda.size() as u64) / hooks
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` with every part at most `max_part`.
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Partitions `λ ⊇ μ` with `|λ| = |μ| + k`.
pub fn add_boxes(mu: &Partition, k: usize) -> Vec<Partition> {
    fn go(row: usize, left: usize, cur: &mut Vec<usize>, mu: &Partition, out: &mut Vec<Partition>) {
        if left == 0 {
            let mut parts = cur.clone();
            parts.extend_from_slice(&mu.0[row.min(mu.len())..]);
            out.push(Partition::from_sorted(parts));
            return;
        }
        let base = mu.part(row);
        let cap = if row == 0 {
            base + left
        } else {
            cur[row - 1].min(base + left)
        };
        // Past the last row of μ a row must gain at least one box.
        let lo = if row >= mu.len() { base + 1 } else { base };
        for v in (lo..=cap).rev() {
            cur.push(v);
            go(row + 1, left - (v - base), cur, mu, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, &mut Vec::new(), mu, &mut out);
    out.sort();
    out
}

/// Partitions `ν ⊆ λ` with `|ν| = |λ| - k`.
pub fn remove_boxes(lambda: &Partition, k: usize) -> Vec<Partition> {
    if k > lambda.size() {
        return Vec::new();
    }
    let target = lambda.size() - k;
    let mut out = Vec::new();
    fn go(
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        lam: &Partition,
        out: &mut Vec<Partition>,
    ) {
        if row == lam.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let cap = if row == 0 {
            lam.part(0)
        } else {
            cur[row - 1].min(lam.part(row))
        };
        for v in (0..=cap.min(left)).rev() {
            cur.push(v);
            go(row + 1, left - v, cur, lam, out);
            cur.pop();
        }
    }
    go(0, target, &mut Vec::new(), lambda, &mut out);
    out.sort();
    out.dedup();
    out
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^λ_{ν,μ}`: the number of Littlewood–Richardson tableaux of shape `λ/ν`
/// and content `μ`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() + mu.size() != lambda.size() || !lambda.contains(nu) || !lambda.contains(mu) {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&c) = lr_cache().lock().unwrap().get(&key) {
        return c;
    }
    let c = lr_count(lambda, mu, nu);
    lr_cache().lock().unwrap().insert(key, c);
    c
}

fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Cells in reading order: rows top to bottom, each row right to left.
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (nu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<usize>> = lambda.0.iter().map(|&l| vec![0; l]).collect();
    let mut count = vec![0usize; mu.len() + 1];

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        nu: &Partition,
        mu: &Partition,
        filling: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        // Weakly increasing rows: bounded above by the right neighbour.
        let hi = if c + 1 < lambda.part(r) {
            filling[r][c + 1]
        } else {
            mu.len()
        };
        // Strictly increasing columns: bounded below by the cell above.
        let lo = if r > 0 && c >= nu.part(r - 1) {
            filling[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi.min(r + 1) {
            if count[v] >= mu.part(v - 1) || (v > 1 && count[v] >= count[v - 1]) {
                continue;
            }
            count[v] += 1;
            filling[r][c] = v;
            total += go(idx + 1, cells, lambda, nu, mu, filling, count);
            count[v] -= 1;
        }
        filling[r][c] = 0;
        total
    }
    go(0, &cells, lambda, nu, mu, &mut filling, &mut count)
}

/// `M(μ)`: all integer vectors `μ'` with `0 ≤ μ'_i ≤ μ_i`.
pub fn weight_box(mu: &Partition) -> Vec<Weight> {
    let mut out = vec![Weight(Vec::new())];
    for &m in mu.parts() {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=m).map(move |x| {
                    let mut v = w.0.clone();
                    v.push(x);
                    Weight(v)
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_parse() {
        assert_eq!(Partition::new(vec![1, 0, 3, 1]), part(&[3, 1, 1]));
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), part(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(part(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn padding() {
        assert_eq!(pad(&part(&[1]), 5).unwrap(), part(&[4, 1]));
        assert_eq!(pad(&Partition::empty(), 3).unwrap(), part(&[3]));
        assert_eq!(pad(&part(&[2, 1]), 10).unwrap(), part(&[7, 2, 1]));
        assert!(matches!(
            pad(&part(&[2, 1]), 4),
            Err(Error::PadTooSmall { .. })
        ));
        assert_eq!(pad(&part(&[2, 1]), 5).unwrap(), part(&[2, 2, 1]));
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_dim(&part(&[1, 1, 1])), Int::from(1));
        assert_eq!(hook_dim(&part(&[2, 1])), Int::from(2));
        assert_eq!(hook_dim(&part(&[2, 2])), Int::from(2));
        assert_eq!(hook_dim(&part(&[3, 2])), Int::from(5));
        assert_eq!(hook_dim(&Partition::empty()), Int::from(1));
    }

    #[test]
    fn lr_examples() {
        let e = Partition::empty();
        assert_eq!(lr_coeff(&part(&[2]), &part(&[1]), &part(&[1])), 1);
        assert_eq!(lr_coeff(&part(&[2, 1]), &e, &part(&[2, 1])), 1);
        assert_eq!(lr_coeff(&part(&[3]), &part(&[1]), &part(&[1])), 0);
        // The classic c^{(3,2,1)}_{(2,1),(2,1)} = 2.
        assert_eq!(
            lr_coeff(&part(&[3, 2, 1]), &part(&[2, 1]), &part(&[2, 1])),
            2
        );
        assert_eq!(lr_coeff(&part(&[2, 1]), &part(&[1]), &part(&[1, 1])), 1);
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(&part(&[3, 1])), part(&[2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&part(&[1, 1])), part(&[2]));
    }

    #[test]
    fn weight_boxes() {
        assert_eq!(
            weight_box(&part(&[1])),
            vec![Weight(vec![0]), Weight(vec![1])]
        );
        assert_eq!(weight_box(&part(&[2, 1])).len(), 6);
        assert_eq!(weight_box(&Partition::empty()), vec![Weight(vec![])]);
    }

    #[test]
    fn enumeration() {
        let counts: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(
            partitions(3),
            vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]
        );
        let up = add_boxes(&part(&[1]), 2);
        assert_eq!(up, vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        let down = remove_boxes(&part(&[2, 1]), 1);
        assert_eq!(down, vec![part(&[2]), part(&[1, 1])]);
        assert_eq!(remove_boxes(&part(&[2, 1]), 3), vec![Partition::empty()]);
    }
}
