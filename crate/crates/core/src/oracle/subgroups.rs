use std::collections::{BTreeMap, HashMap, HashSet};

use crate::chars::{FiniteSubgroup, Perm};
use crate::error::{Error, Result};

pub const SUBGROUP_BOUND: usize = 5;

/// `S_j` with a multiplication table; subgroups are bitmasks over its elements.
struct Ambient {
    elements: Vec<Perm>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Ambient {
    fn new(j: usize) -> Self {
        let elements = FiniteSubgroup::symmetric(j).elements().to_vec();
        let index: HashMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.after(b)]).collect())
            .collect();
        let inv = elements.iter().map(|a| index[&a.inverse()]).collect();
        Ambient { elements, mul, inv }
    }

    fn closure(&self, gens: &[usize]) -> u128 {
        let mut mask: u128 = 1; // the identity is element 0
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul[x][g];
                if mask & (1 << y) == 0 {
                    mask |= 1 << y;
                    stack.push(y);
                }
            }
        }
        mask
    }

    fn members(mask: u128) -> Vec<usize> {
        (0..128).filter(|i| mask & (1u128 << i) != 0).collect()
    }

    fn conjugate(&self, mask: u128, g: usize) -> u128 {
        Self::members(mask)
            .into_iter()
            .fold(0, |acc, x| acc | 1 << self.mul[self.mul[g][x]][self.inv[g]])
    }

    /// Every subgroup, each with a generating set, found by adjoining one
    /// element at a time starting from the trivial group.
    fn all_subgroups(&self) -> Vec<u128> {
        let mut seen: HashSet<u128> = HashSet::from([1]);
        let mut frontier: Vec<(u128, Vec<usize>)> = vec![(1, Vec::new())];
        while let Some((mask, gens)) = frontier.pop() {
            for g in 0..self.elements.len() {
                if mask & (1 << g) != 0 {
                    continue;
                }
                let mut bigger = gens.clone();
                bigger.push(g);
                let m = self.closure(&bigger);
                if seen.insert(m) {
                    frontier.push((m, bigger));
                }
            }
        }
        let mut out: Vec<u128> = seen.into_iter().collect();
        out.sort_by_key(|&m| (m.count_ones(), Self::members(m)));
        out
    }
}

/// Number of subgroups of `S_j` (not up to conjugacy).
pub fn count_all_subgroups(j: usize) -> Result<usize> {
    check(j)?;
    Ok(Ambient::new(j).all_subgroups().len())
}

fn check(j: usize) -> Result<()> {
    if j > SUBGROUP_BOUND {
        return Err(Error::BoundExceeded(format!(
            "subgroups of S_{j}: j > {SUBGROUP_BOUND}"
        )));
    }
    Ok(())
}

/// One representative per conjugacy class of subgroups of `S_j`, paired with
/// the size of its class. The representative is the conjugate whose sorted
/// element list is lexicographically least; classes are ordered by group
/// order, then by that list.
pub fn subgroup_classes(j: usize) -> Result<Vec<(FiniteSubgroup, usize)>> {
    check(j)?;
    let amb = Ambient::new(j);
    let mut classes: BTreeMap<(u32, Vec<usize>), usize> = BTreeMap::new();
    for mask in amb.all_subgroups() {
        let canonical = (0..amb.elements.len())
            .map(|g| Ambient::members(amb.conjugate(mask, g)))
            .min()
            .unwrap();
        *classes.entry((mask.count_ones(), canonical)).or_insert(0) += 1;
    }
    Ok(classes
        .into_iter()
        .map(|((_, members), size)| {
            let elements = members
                .into_iter()
                .map(|i| amb.elements[i].clone())
                .collect();
            (
                FiniteSubgroup::from_elements(j, elements).expect("closure is a subgroup"),
                size,
            )
        })
        .collect())
}

/// Conjugacy class representatives of subgroups of `S_j`, `j ≤ 5`.
pub fn subgroups_of_sj(j: usize) -> Result<Vec<FiniteSubgroup>> {
    Ok(subgroup_classes(j)?.into_iter().map(|(h, _)| h).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=4).map(|j| subgroups_of_sj(j).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11]);
        let orders: Vec<usize> = subgroups_of_sj(3)
            .unwrap()
            .iter()
            .map(FiniteSubgroup::order)
            .collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        let total: usize = subgroup_classes(4).unwrap().iter().map(|(_, c)| c).sum();
        assert_eq!(total, count_all_subgroups(4).unwrap());
        assert_eq!(total, 30);
        assert!(matches!(subgroups_of_sj(6), Err(Error::BoundExceeded(_))));
    }
}
