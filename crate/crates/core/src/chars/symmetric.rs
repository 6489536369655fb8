use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{factorial, Int, Rational};
use crate::error::{Error, Result};
use crate::partitions::{partitions, Partition};

/// Cycle types of `S_n`, with class sizes and the squaring map.
#[derive(Debug)]
pub struct SymClasses {
    pub n: usize,
    pub types: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `z_ρ = ∏ i^{m_i} m_i!`
    pub centralizer: Vec<Int>,
    /// Index of the cycle type of `g²`.
    pub square: Vec<usize>,
    pub order: Int,
}

impl SymClasses {
    pub fn of(n: usize) -> Arc<SymClasses> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymClasses>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(c) = cache.lock().unwrap().get(&n) {
            return c.clone();
        }
        let built = Arc::new(Self::build(n));
        cache.lock().unwrap().entry(n).or_insert(built).clone()
    }

    fn build(n: usize) -> SymClasses {
        let types = partitions(n);
        let index: HashMap<Partition, usize> = types
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let centralizer = types.iter().map(z_rho).collect();
        let square = types
            .iter()
            .map(|rho| {
                let sq: Vec<usize> = rho
                    .parts()
                    .iter()
                    .flat_map(|&l| {
                        if l % 2 == 0 {
                            vec![l / 2, l / 2]
                        } else {
                            vec![l]
                        }
                    })
                    .collect();
                index[&Partition::new(sq)]
            })
            .collect();
        SymClasses {
            n,
            types,
            index,
            centralizer,
            square,
            order: factorial(n as u64),
        }
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn index_of(&self, rho: &Partition) -> Option<usize> {
        self.index.get(rho).copied()
    }

    pub fn class_size(&self, i: usize) -> Int {
        &self.order / &self.centralizer[i]
    }
}

pub fn z_rho(rho: &Partition) -> Int {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(Int::one(), |acc, (i, &m)| {
            acc * Int::from(i).pow(m as u32) * factorial(m as u64)
        })
}

type MnKey = (Partition, Partition);

fn mn_cache() -> &'static Mutex<HashMap<MnKey, Int>> {
    static CACHE: OnceLock<Mutex<HashMap<MnKey, Int>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule, removing the largest part of `ρ`
/// as a rim hook at each step.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<Int> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but |{rho}| = {}",
            lambda.size(),
            rho.size()
        )));
    }
    Ok(mn(lambda, rho))
}

fn mn(lambda: &Partition, rho: &Partition) -> Int {
    if rho.is_empty() {
        return Int::one();
    }
    if lambda.len() <= 1 {
        return Int::one();
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(v) = mn_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let r = rho.first_row();
    let rest = rho.strip_first_row();
    // Beta set: λ_i + (l - 1 - i), strictly decreasing.
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect();
    let mut total = Int::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(k, &x)| x - (l - 1 - k))
            .collect();
        let v = mn(&Partition::new(parts), &rest);
        if crossed % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    mn_cache().lock().unwrap().insert(key, total.clone());
    total
}

/// A rational-valued class function on `S_n`, indexed like [`SymClasses::types`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: Vec<Rational>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> Rational) -> Self {
        let cls = SymClasses::of(n);
        ClassFunction {
            n,
            values: cls.types.iter().map(f).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::zero())
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::one())
    }

    /// Character of the natural permutation module `X_n`.
    pub fn permutation(n: usize) -> Self {
        Self::from_fn(n, |rho| {
            Rational::from_integer(Int::from(rho.parts().iter().filter(|&&p| p == 1).count()))
        })
    }

    pub fn value(&self, rho: &Partition) -> Option<&Rational> {
        SymClasses::of(self.n)
            .index_of(rho)
            .map(|i| &self.values[i])
    }

    pub fn degree(&self) -> Rational {
        // The identity class is the last partition in reverse lexicographic order.
        self.values.last().cloned().unwrap_or_else(Rational::one)
    }

    fn check_rank(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_rank(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_rank(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn pow(&self, m: u32) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|v| num_traits::pow(v.clone(), m as usize))
                .collect(),
        }
    }

    /// `g ↦ f(g²)`
    pub fn adams2(&self) -> ClassFunction {
        let cls = SymClasses::of(self.n);
        ClassFunction {
            n: self.n,
            values: cls.square.iter().map(|&s| self.values[s].clone()).collect(),
        }
    }
}

/// Irreducible character `χ^λ` as a class function, cached.
pub fn character(lambda: &Partition) -> Arc<ClassFunction> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<ClassFunction>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().unwrap().get(lambda) {
        return c.clone();
    }
    let n = lambda.size();
    let f = Arc::new(ClassFunction::from_fn(n, |rho| {
        Rational::from_integer(mn(lambda, rho))
    }));
    cache
        .lock()
        .unwrap()
        .entry(lambda.clone())
        .or_insert(f)
        .clone()
}

/// `(1/n!) Σ_ρ |C_ρ| f(ρ) g(ρ)`; characters of `S_n` are real so no conjugation is needed.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    f.check_rank(g)?;
    let cls = SymClasses::of(f.n);
    let mut acc = Rational::zero();
    for i in 0..cls.len() {
        if f.values[i].is_zero() || g.values[i].is_zero() {
            continue;
        }
        acc += &f.values[i] * &g.values[i] / Rational::from_integer(cls.centralizer[i].clone());
    }
    Ok(acc)
}

/// Multiplicities of every irreducible in `f`.
pub fn decompose(f: &ClassFunction) -> Result<BTreeMap<Partition, i64>> {
    decompose_over(f, &partitions(f.n))
}

/// Multiplicities of the listed irreducibles only; the caller is responsible
/// for checking that nothing outside the list occurs.
pub fn decompose_over(
    f: &ClassFunction,
    candidates: &[Partition],
) -> Result<BTreeMap<Partition, i64>> {
    let mut out = BTreeMap::new();
    for lam in candidates {
        let ip = inner_product(f, &character(lam))?;
        if !ip.is_integer() {
            return Err(Error::NonIntegralMultiplicity(format!(
                "<f, χ^{lam}> = {ip}"
            )));
        }
        let m = ip.to_integer().to_i64().ok_or_else(|| {
            Error::NonIntegralMultiplicity(format!("<f, χ^{lam}> = {ip} overflows"))
        })?;
        if m != 0 {
            out.insert(lam.clone(), m);
        }
    }
    Ok(out)
}

/// `Σ m_λ χ^λ`
pub fn assemble(n: usize, mults: &BTreeMap<Partition, i64>) -> ClassFunction {
    mults.iter().fold(ClassFunction::zero(n), |acc, (lam, &m)| {
        acc.add(&character(lam).scale(&Rational::from_integer(Int::from(m))))
            .unwrap()
    })
}

pub fn sym2(f: &ClassFunction) -> ClassFunction {
    let half = Rational::new(Int::one(), Int::from(2));
    f.pow(2).add(&f.adams2()).unwrap().scale(&half)
}

pub fn alt2(f: &ClassFunction) -> ClassFunction {
    let half = Rational::new(Int::one(), Int::from(2));
    f.pow(2)
        .add(&f.adams2().scale(&-Rational::one()))
        .unwrap()
        .scale(&half)
}

/// `⟨χ^λ χ^μ, χ^ν⟩`
pub fn kronecker_mult(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda}, {mu}, {nu}")));
    }
    let prod = character(lambda).mul(&character(mu))?;
    let ip = inner_product(&prod, &character(nu))?;
    Ok(ip
        .to_integer()
        .to_u64()
        .expect("Kronecker coefficients are nonnegative integers"))
}

/// Whether `f` is a genuine character: all multiplicities nonnegative integers.
pub fn is_character(f: &ClassFunction) -> bool {
    decompose(f).is_ok_and(|d| d.values().all(|&m| m >= 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{hook_dim, part};

    fn int(x: i64) -> Int {
        Int::from(x)
    }

    #[test]
    fn mn_examples() {
        assert_eq!(
            mn_character(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(),
            int(2)
        );
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[3])).unwrap(), int(-1));
        assert_eq!(
            mn_character(&part(&[2, 1]), &part(&[2, 1])).unwrap(),
            int(0)
        );
        for rho in partitions(5) {
            assert_eq!(mn_character(&part(&[5]), &rho).unwrap(), int(1));
        }
        assert!(mn_character(&part(&[2]), &part(&[1])).is_err());
        // Sign character.
        assert_eq!(
            mn_character(&part(&[1, 1, 1, 1]), &part(&[2, 1, 1])).unwrap(),
            int(-1)
        );
        assert_eq!(
            mn_character(&part(&[3, 2]), &part(&[1; 5])).unwrap(),
            hook_dim(&part(&[3, 2]))
        );
    }

    #[test]
    fn decompositions() {
        let d = decompose(&character(&part(&[2, 1]))).unwrap();
        assert_eq!(d, BTreeMap::from([(part(&[2, 1]), 1)]));
        let d = decompose(&ClassFunction::permutation(4)).unwrap();
        assert_eq!(d, BTreeMap::from([(part(&[4]), 1), (part(&[3, 1]), 1)]));
        let s = character(&part(&[3, 1]));
        let d = decompose(&s.mul(&s).unwrap()).unwrap();
        let expect: BTreeMap<_, _> = [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1]]
            .iter()
            .map(|p| (part(p), 1))
            .collect();
        assert_eq!(d, expect);
        let ip = inner_product(&ClassFunction::permutation(5), &ClassFunction::trivial(5)).unwrap();
        assert!(ip.is_one());
    }

    #[test]
    fn squares() {
        let s = character(&part(&[3, 1]));
        assert_eq!(
            decompose(&alt2(&s)).unwrap(),
            BTreeMap::from([(part(&[2, 1, 1]), 1)])
        );
        let d = decompose(&sym2(&s)).unwrap();
        let expect: BTreeMap<_, _> = [&[4][..], &[3, 1], &[2, 2]]
            .iter()
            .map(|p| (part(p), 1))
            .collect();
        assert_eq!(d, expect);
        assert_eq!(sym2(&ClassFunction::trivial(3)), ClassFunction::trivial(3));
    }

    #[test]
    fn kronecker() {
        assert_eq!(
            kronecker_mult(&part(&[4]), &part(&[2, 2]), &part(&[2, 2])).unwrap(),
            1
        );
        assert_eq!(
            kronecker_mult(&part(&[3, 1]), &part(&[3, 1]), &part(&[2, 2])).unwrap(),
            1
        );
        assert_eq!(
            kronecker_mult(&part(&[3, 1]), &part(&[3, 1]), &part(&[1, 1, 1, 1])).unwrap(),
            0
        );
    }

    #[test]
    fn rank_mismatch() {
        let e = inner_product(&ClassFunction::trivial(3), &ClassFunction::trivial(4));
        assert_eq!(e, Err(Error::RankMismatch(3, 4)));
    }
}
