//! Set-partition diagrams and the partition category `Rep_0(S_t)`.
//!
//! A diagram in `P_{n,m}` partitions `n` bottom points and `m` top points.
//! Points are numbered bottom row first, then top row; the canonical form is
//! the restricted growth string of block labels in that order, so blocks are
//! ordered by their first point. In the external encoding bottom points are
//! `1..=n` and top points `-1..=-m`.
//!
//! `compose(μ, λ)` is "μ after λ": λ is drawn below μ and its top row is
//! glued to μ's bottom row.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{bell, Int, PolyQ};
use crate::chars::{inner_product, ClassFunction};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`gram_pairing`] by default.
pub const GRAM_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionDiagram {
    n: usize,
    m: usize,
    labels: Vec<u8>,
}

/// Disjoint-set forest with union by rank and path halving.
struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

/// Relabels arbitrary block keys into a restricted growth string.
fn canonical_labels<K: PartialEq + Copy>(keys: impl Iterator<Item = K>) -> Vec<u8> {
    let mut seen: Vec<K> = Vec::new();
    keys.map(|k| match seen.iter().position(|&s| s == k) {
        Some(i) => i as u8,
        None => {
            seen.push(k);
            (seen.len() - 1) as u8
        }
    })
    .collect()
}

impl SetPartitionDiagram {
    /// Builds a diagram from blocks in the external encoding.
    pub fn from_blocks(n: usize, m: usize, blocks: &[Vec<i64>]) -> Result<Self> {
        let mut owner = vec![usize::MAX; n + m];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for &p in block {
                let idx = match p {
                    p if p > 0 && p as usize <= n => p as usize - 1,
                    p if p < 0 && (-p) as usize <= m => n + (-p) as usize - 1,
                    _ => return Err(Error::Parse(format!("point {p} outside P_{{{n},{m}}}"))),
                };
                if owner[idx] != usize::MAX {
                    return Err(Error::Parse(format!("point {p} appears twice")));
                }
                owner[idx] = b;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(Error::Parse("blocks do not cover every point".into()));
        }
        Ok(Self::from_keys(n, m, owner.into_iter()))
    }

    fn from_keys<K: PartialEq + Copy>(n: usize, m: usize, keys: impl Iterator<Item = K>) -> Self {
        SetPartitionDiagram {
            n,
            m,
            labels: canonical_labels(keys),
        }
    }

    /// The identity of `[n]`: every bottom point joined to the top point above it.
    pub fn identity(n: usize) -> Self {
        Self::from_keys(n, n, (0..n).chain(0..n))
    }

    /// All points in singletons.
    pub fn singletons(n: usize, m: usize) -> Self {
        Self::from_keys(n, m, 0..n + m)
    }

    /// All points in one block.
    pub fn bar(n: usize, m: usize) -> Self {
        Self::from_keys(n, m, std::iter::repeat_n(0, n + m))
    }

    pub fn source(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> usize {
        self.m
    }

    pub fn num_blocks(&self) -> usize {
        self.labels
            .iter()
            .map(|&l| l as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Blocks in the external encoding.
    pub fn blocks(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            let p = if i < self.n {
                i as i64 + 1
            } else {
                -((i - self.n) as i64 + 1)
            };
            out[l as usize].push(p);
        }
        out
    }

    /// Horizontal concatenation, `other` to the right.
    pub fn tensor(&self, other: &Self) -> Self {
        let off = self.num_blocks() as u8;
        let (a, b) = (&self.labels, &other.labels);
        let keys = a[..self.n]
            .iter()
            .copied()
            .chain(b[..other.n].iter().map(|&l| l + off))
            .chain(a[self.n..].iter().copied())
            .chain(b[other.n..].iter().map(|&l| l + off));
        Self::from_keys(self.n + other.n, self.m + other.m, keys)
    }

    /// Swaps the two rows.
    pub fn dual(&self) -> Self {
        let keys = self.labels[self.n..]
            .iter()
            .chain(&self.labels[..self.n])
            .copied();
        Self::from_keys(self.m, self.n, keys)
    }

    /// `self ∘ lower`, returned as `(l, d)` meaning `t^l · d`.
    pub fn compose_basis(&self, lower: &Self) -> Result<(usize, Self)> {
        if lower.m != self.n {
            return Err(Error::ArityMismatch(format!(
                "P_{{{},{}}} after P_{{{},{}}}",
                self.n, self.m, lower.n, lower.m
            )));
        }
        let (n, mid, k) = (lower.n, lower.m, self.m);
        let mut uf = UnionFind::new(n + mid + k);
        // Stacked rows: lower bottom [0, n), middle [n, n+mid), upper top [n+mid, n+mid+k).
        let mut first = vec![usize::MAX; lower.num_blocks()];
        for (i, &l) in lower.labels.iter().enumerate() {
            match first[l as usize] {
                usize::MAX => first[l as usize] = i,
                f => uf.merge(f, i),
            }
        }
        let mut first = vec![usize::MAX; self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            let p = n + i;
            match first[l as usize] {
                usize::MAX => first[l as usize] = p,
                f => uf.merge(f, p),
            }
        }
        let roots: Vec<usize> = (0..n + mid + k).map(|p| uf.find(p)).collect();
        let outer: Vec<usize> = roots[..n]
            .iter()
            .chain(&roots[n + mid..])
            .copied()
            .collect();
        let mut closed: Vec<usize> = roots[n..n + mid]
            .iter()
            .copied()
            .filter(|r| !outer.contains(r))
            .collect();
        closed.sort_unstable();
        closed.dedup();
        Ok((closed.len(), Self::from_keys(n, k, outer.into_iter())))
    }

    /// `self ∘ lower` as a combination: `t^l (self · lower)`.
    pub fn compose(&self, lower: &Self) -> Result<DiagramCombination> {
        let (l, d) = self.compose_basis(lower)?;
        Ok(DiagramCombination::single(d, PolyQ::t().pow(l as u32)))
    }
}

impl fmt::Display for SetPartitionDiagram {
    /// Brace notation: `{1,1'},{2,2'}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.labels.is_empty() {
            return write!(f, "{{}}");
        }
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let pts: Vec<String> = b
                    .iter()
                    .map(|&p| {
                        if p > 0 {
                            p.to_string()
                        } else {
                            format!("{}'", -p)
                        }
                    })
                    .collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        write!(f, "{}", blocks.join(","))
    }
}

/// All diagrams in `P_{n,m}`, in lexicographic order of their growth strings.
pub fn basis(n: usize, m: usize) -> Vec<SetPartitionDiagram> {
    fn go(len: usize, cur: &mut Vec<u8>, max: u8, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max {
            cur.push(l);
            go(len, cur, if l == max { max + 1 } else { max }, out);
            cur.pop();
        }
    }
    let mut strings = Vec::new();
    go(n + m, &mut Vec::new(), 0, &mut strings);
    strings
        .into_iter()
        .map(|labels| SetPartitionDiagram { n, m, labels })
        .collect()
}

/// `dim Hom([n],[m]) = Bell(n+m)`.
pub fn hom_dim(n: usize, m: usize) -> Int {
    bell(n + m)
}

/// `dim Hom_{S_N}(X_N^{⊗n}, X_N^{⊗m})` computed from characters; equals
/// [`hom_dim`] once `N ≥ n + m`.
pub fn finite_hom_dim(n: usize, m: usize, big_n: usize) -> Int {
    let x = ClassFunction::permutation(big_n);
    inner_product(&x.pow(n as u32), &x.pow(m as u32))
        .expect("same rank")
        .to_integer()
}

/// A linear combination of diagrams in one `P_{n,m}` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCombination {
    pub n: usize,
    pub m: usize,
    terms: BTreeMap<SetPartitionDiagram, PolyQ>,
}

impl DiagramCombination {
    pub fn zero(n: usize, m: usize) -> Self {
        DiagramCombination {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(d: SetPartitionDiagram, c: PolyQ) -> Self {
        let mut out = Self::zero(d.n, d.m);
        out.add_term(d, c);
        out
    }

    pub fn add_term(&mut self, d: SetPartitionDiagram, c: PolyQ) {
        assert_eq!((d.n, d.m), (self.n, self.m));
        let e = self.terms.entry(d).or_default();
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> &BTreeMap<SetPartitionDiagram, PolyQ> {
        &self.terms
    }

    /// Bilinear extension of [`SetPartitionDiagram::compose`].
    pub fn compose(&self, lower: &Self) -> Result<Self> {
        if lower.m != self.n {
            return Err(Error::ArityMismatch(format!("{} vs {}", lower.m, self.n)));
        }
        let mut out = Self::zero(lower.n, self.m);
        for (a, ca) in &self.terms {
            for (b, cb) in &lower.terms {
                let (l, d) = a.compose_basis(b)?;
                out.add_term(d, &(ca * cb) * &PolyQ::t().pow(l as u32));
            }
        }
        Ok(out)
    }
}

/// The pairing `P_{n,0} × P_{0,n} → P_{0,0}` on set partitions of an
/// `n`-element set: entry `(π, σ)` is `t^{#blocks(π ∨ σ)}`. For `n = 2n'`
/// this is the trace form of `FP_{n'}(t)` up to relabeling.
pub fn gram_pairing(n: usize) -> Result<Vec<Vec<PolyQ>>> {
    gram_pairing_bounded(n, GRAM_BOUND)
}

pub fn gram_pairing_bounded(n: usize, bound: usize) -> Result<Vec<Vec<PolyQ>>> {
    if n > bound {
        return Err(Error::BoundExceeded(format!(
            "gram_pairing({n}) exceeds bound {bound}"
        )));
    }
    let caps = basis(n, 0);
    let cups = basis(0, n);
    caps.iter()
        .map(|cap| {
            cups.iter()
                .map(|cup| {
                    let (l, _) = cap.compose_basis(cup)?;
                    Ok(PolyQ::t().pow(l as u32))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize, blocks: &[&[i64]]) -> SetPartitionDiagram {
        let b: Vec<Vec<i64>> = blocks.iter().map(|b| b.to_vec()).collect();
        SetPartitionDiagram::from_blocks(n, m, &b).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id = SetPartitionDiagram::identity(1);
        assert_eq!(id.compose_basis(&id).unwrap(), (0, id.clone()));
        let e = SetPartitionDiagram::singletons(1, 1);
        assert_eq!(e.compose_basis(&e).unwrap(), (1, e.clone()));
        let bar = SetPartitionDiagram::bar(1, 1);
        assert_eq!(bar.compose_basis(&bar).unwrap(), (0, bar.clone()));
        assert!(matches!(
            bar.compose_basis(&SetPartitionDiagram::bar(1, 2)),
            Err(Error::ArityMismatch(_))
        ));
        assert_eq!(e.compose(&e).unwrap().terms()[&e], PolyQ::t());
    }

    #[test]
    fn tensor_and_dual() {
        let e = SetPartitionDiagram::singletons(1, 1);
        let empty = SetPartitionDiagram::identity(0);
        assert_eq!(e.tensor(&empty), e);
        assert_eq!(e.tensor(&e), SetPartitionDiagram::singletons(2, 2));
        let id = SetPartitionDiagram::identity(1);
        assert_eq!(id.tensor(&id), SetPartitionDiagram::identity(2));
        assert_eq!(id.dual(), id);
        assert_eq!(
            SetPartitionDiagram::bar(1, 2).dual(),
            SetPartitionDiagram::bar(2, 1)
        );
    }

    #[test]
    fn encoding() {
        let x = d(2, 2, &[&[2, -2], &[1, -1]]);
        assert_eq!(x, SetPartitionDiagram::identity(2));
        assert_eq!(x.blocks(), vec![vec![1, -1], vec![2, -2]]);
        assert_eq!(x.to_string(), "{1,1'},{2,2'}");
        assert!(SetPartitionDiagram::from_blocks(1, 1, &[vec![1]]).is_err());
        assert!(SetPartitionDiagram::from_blocks(1, 1, &[vec![1, 2]]).is_err());
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(hom_dim(1, 1), Int::from(2));
        assert_eq!(hom_dim(0, 0), Int::from(1));
        assert_eq!(hom_dim(2, 2), Int::from(15));
        assert_eq!(basis(2, 2).len(), 15);
        assert_eq!(finite_hom_dim(2, 2, 5), Int::from(15));
        // Below the stable range the finite Hom space is smaller.
        assert_eq!(finite_hom_dim(2, 2, 2), Int::from(8));
    }

    #[test]
    fn gram() {
        let t = PolyQ::t();
        assert_eq!(gram_pairing(0).unwrap(), vec![vec![PolyQ::one()]]);
        assert_eq!(gram_pairing(1).unwrap(), vec![vec![t.clone()]]);
        assert_eq!(
            gram_pairing(2).unwrap(),
            vec![vec![t.clone(), t.clone()], vec![t.clone(), t.pow(2)]]
        );
        assert!(matches!(gram_pairing(5), Err(Error::BoundExceeded(_))));
    }
}
