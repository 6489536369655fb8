use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A permutation of `{0, ..., n-1}` in one-line form: `p.0[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn pow(&self, k: usize) -> Perm {
        (0..k).fold(Perm::identity(self.degree()), |acc, _| self.after(&acc))
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, num_integer::lcm)
    }

    pub fn fixed_points(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i == p as usize)
            .count()
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Embeds into `S_m` (m ≥ degree) fixing the extra points.
    pub fn extend(&self, m: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u8..m as u8);
        Perm(v)
    }

    /// Shifts to act on `{offset, ..., offset + n - 1}` inside `S_m`.
    pub fn shifted(&self, offset: usize, m: usize) -> Perm {
        let mut v: Vec<u8> = (0..m as u8).collect();
        for (i, &p) in self.0.iter().enumerate() {
            v[offset + i] = p + offset as u8;
        }
        Perm(v)
    }

    /// Parses cycle notation with 1-based points, e.g. `(1 2)(3 4)` or `(1,2,3)`.
    /// `()` is the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Perm> {
        let bad = |why: &str| Error::Parse(format!("bad permutation {s:?}: {why}"));
        let mut img: Vec<u8> = (0..n as u8).collect();
        let mut rest = s.trim();
        let mut seen = vec![false; n];
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let pts = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| {
                    let v: usize = x.parse().map_err(|_| bad("non-numeric point"))?;
                    if v == 0 || v > n {
                        return Err(bad("point out of range"));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &pts {
                if std::mem::replace(&mut seen[p], true) {
                    return Err(bad("cycles are not disjoint"));
                }
            }
            for (i, &p) in pts.iter().enumerate() {
                img[p] = pts[(i + 1) % pts.len()] as u8;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Perm(img))
    }

    /// Largest point mentioned in a cycle string; used to infer the degree.
    pub fn max_point(s: &str) -> usize {
        s.split(|c: char| !c.is_ascii_digit())
            .filter_map(|x| x.parse::<usize>().ok())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points; fixed points omitted, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    #[test]
    fn cycles_roundtrip() {
        let p = Perm::parse_cycles("(1 2)(3 4)", 5).unwrap();
        assert_eq!(p.0, vec![1, 0, 3, 2, 4]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(p.cycle_type(), part(&[2, 2, 1]));
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert!(Perm::parse_cycles("(1 1)", 3).is_err());
        assert!(Perm::parse_cycles("(1 4)", 3).is_err());
    }

    #[test]
    fn group_ops() {
        let a = Perm::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        assert_eq!(a.order(), 3);
        assert!(a.pow(3).is_identity());
        assert!(a.after(&a.inverse()).is_identity());
        // (1 2 3)∘(1 2): 1 -> 2 -> 3.
        assert_eq!(a.after(&b).apply(0), 2);
        assert_eq!(b.sign(), -1);
        assert_eq!(a.sign(), 1);
    }
}
