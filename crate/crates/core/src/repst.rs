//! Objects of `Rep(S_t)` and the large-rank stabilization engine.
//!
//! Every construction is carried out for `S_n` at consecutive ranks `n`,
//! labels are un-padded by deleting the first row, and an answer is returned
//! only once two consecutive ranks agree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::ToPrimitive;

use crate::arith::{binom_poly, interpolate, Int, PolyQ, Rational};
use crate::chars::{character, decompose, decompose_over, ClassFunction, FiniteSubgroup};
use crate::error::{Error, Result};
use crate::partitions::{
    add_boxes, hook_dim, lr_coeff, pad, partitions, partitions_bounded, remove_boxes, Partition,
};

pub const DEFAULT_CAP: usize = 30;

/// A semisimple object: a finite multiset of simple objects `𝒳(λ)`.
/// `∅` labels the unit object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RepObject {
    terms: BTreeMap<Partition, u64>,
}

impl RepObject {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::simple(Partition::empty())
    }

    pub fn simple(lambda: Partition) -> Self {
        Self::from_terms([(lambda, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, u64)>) -> Self {
        let mut out = Self::zero();
        for (l, m) in terms {
            out.add_copies(&l, m);
        }
        out
    }

    pub fn add_copies(&mut self, lambda: &Partition, m: u64) {
        if m > 0 {
            *self.terms.entry(lambda.clone()).or_insert(0) += m;
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn mult(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of simple summands counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Largest `|λ|` in the support.
    pub fn max_size(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn add(&self, other: &RepObject) -> RepObject {
        let mut out = self.clone();
        for (l, &m) in &other.terms {
            out.add_copies(l, m);
        }
        out
    }

    pub fn scale(&self, k: u64) -> RepObject {
        Self::from_terms(self.terms.iter().map(|(l, &m)| (l.clone(), m * k)))
    }

    /// `self ⊖ other`, which must stay a genuine object.
    pub fn sub(&self, other: &RepObject) -> Result<RepObject> {
        let mut out = self.clone();
        for (l, &m) in &other.terms {
            let have = out.mult(l);
            if have < m {
                return Err(Error::NegativeMultiplicity(format!(
                    "cannot remove {m} copies of {l} from {self}"
                )));
            }
            if have == m {
                out.terms.remove(l);
            } else {
                out.terms.insert(l.clone(), have - m);
            }
        }
        Ok(out)
    }

    pub fn dim_poly(&self) -> Result<PolyQ> {
        let mut acc = PolyQ::zero();
        for (l, &m) in &self.terms {
            acc = &acc + &dim_poly(l)?.scale(&Rational::from_integer(Int::from(m)));
        }
        Ok(acc)
    }
}

impl fmt::Display for RepObject {
    /// `{[]:2, [1]:3}`; the zero object prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, m)| format!("{l}:{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl FromStr for RepObject {
    type Err = Error;

    /// Accepts a single partition (`[2,1]`), `0`, or a multiset `{[]:2, [1]:1}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let Some(body) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) else {
            return Ok(Self::simple(s.parse()?));
        };
        let bad = || Error::Parse(format!("bad object {s:?}"));
        let mut out = Self::zero();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let close = rest.find(']').ok_or_else(bad)?;
            let lambda: Partition = rest[..=close].parse()?;
            rest = rest[close + 1..].trim_start();
            let mult = if let Some(r) = rest.strip_prefix(':') {
                let end = r.find(',').unwrap_or(r.len());
                let m: u64 = r[..end].trim().parse().map_err(|_| bad())?;
                rest = &r[end..];
                m
            } else {
                1
            };
            out.add_copies(&lambda, mult);
            rest = rest
                .trim_start()
                .strip_prefix(',')
                .unwrap_or(rest)
                .trim_start();
        }
        Ok(out)
    }
}

/// An object of `Rep(S_{t-k}) ⊠ Rep(S_k)`: pairs `(ν, β)` with `|β| = k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiObject {
    pub k: usize,
    pub terms: BTreeMap<(Partition, Partition), u64>,
}

impl BiObject {
    /// `Σ m · dim 𝒳(ν)|_{t ↦ t-k} · dim X(β)`, a polynomial in `t`.
    pub fn dim_poly(&self) -> Result<PolyQ> {
        let shift = Rational::from_integer(-Int::from(self.k));
        let mut acc = PolyQ::zero();
        for ((nu, beta), &m) in &self.terms {
            let c = Rational::from_integer(hook_dim(beta) * m);
            acc = &acc + &dim_poly(nu)?.shift(&shift).scale(&c);
        }
        Ok(acc)
    }
}

impl fmt::Display for BiObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), m)| format!("({a},{b}):{m}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// An object of `Rep(S_{t-j}) ⊠ Rep(H)` for `H ⊆ S_j`: pairs `(ν, i)` where
/// `i` indexes the Q-irreducible characters of `H` (see
/// [`FiniteSubgroup::rational_table`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HBiObject {
    pub h: FiniteSubgroup,
    pub terms: BTreeMap<(Partition, usize), u64>,
}

impl HBiObject {
    pub fn new(h: FiniteSubgroup) -> Self {
        HBiObject {
            h,
            terms: BTreeMap::new(),
        }
    }

    /// `V ⊠ triv`.
    pub fn trivial_action(h: FiniteSubgroup, v: &RepObject) -> Self {
        let mut out = Self::new(h);
        for (l, &m) in v.terms() {
            out.add(l.clone(), 0, m);
        }
        out
    }

    pub fn add(&mut self, nu: Partition, label: usize, m: u64) {
        if m > 0 {
            *self.terms.entry((nu, label)).or_insert(0) += m;
        }
    }

    pub fn j(&self) -> usize {
        self.h.j
    }

    fn check_labels(&self) -> Result<()> {
        let len = self.h.rational_table().len();
        for &(_, i) in self.terms.keys() {
            if i >= len {
                return Err(Error::InvalidAction(format!(
                    "label {i} but H = {} has {len} Q-irreducible characters",
                    self.h
                )));
            }
        }
        Ok(())
    }

    /// Dimension as a polynomial in `t`, with `t - j` substituted in the first factor.
    pub fn dim_poly(&self) -> Result<PolyQ> {
        let table = self.h.rational_table();
        let shift = Rational::from_integer(-Int::from(self.j()));
        let mut acc = PolyQ::zero();
        for ((nu, i), &m) in &self.terms {
            let c = table.degree(*i) * Rational::from_integer(Int::from(m));
            acc = &acc + &dim_poly(nu)?.shift(&shift).scale(&c);
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport<T> {
    pub n_low: usize,
    pub n_high: usize,
    pub agreed: bool,
    pub result: T,
}

/// Evaluates `construction` at `n0, n0+1, ...` until two consecutive ranks
/// give equal answers, and returns that answer. A rank may answer `None`
/// ("too small to read off a stable label"), which never agrees with anything.
///
/// Ranks are evaluated two at a time in parallel; the returned pair is always
/// the first agreeing one, so the result does not depend on scheduling.
pub fn stabilize<T, F>(n0: usize, cap: usize, construction: F) -> Result<StabilizationReport<T>>
where
    T: PartialEq + Send,
    F: Fn(usize) -> Result<Option<T>> + Sync,
{
    let fail = |last: usize| {
        Error::StabilizationFailure(format!(
            "no two consecutive ranks agree in [{n0}, {last}] (cap {cap})"
        ))
    };
    if n0 + 1 > cap {
        return Err(fail(n0));
    }
    let (a, b) = rayon::join(|| construction(n0), || construction(n0 + 1));
    let mut prev = a?;
    let mut cur = b?;
    let mut n = n0;
    loop {
        if prev.is_some() && prev == cur {
            return Ok(StabilizationReport {
                n_low: n,
                n_high: n + 1,
                agreed: true,
                result: cur.unwrap(),
            });
        }
        if n + 2 > cap {
            return Err(fail(n + 1));
        }
        // Look ahead one extra rank so that two evaluations run concurrently.
        let (c, d) = if n + 3 <= cap {
            let (c, d) = rayon::join(|| construction(n + 2), || construction(n + 3));
            (c?, Some(d?))
        } else {
            (construction(n + 2)?, None)
        };
        if cur.is_some() && cur == c {
            return Ok(StabilizationReport {
                n_low: n + 1,
                n_high: n + 2,
                agreed: true,
                result: c.unwrap(),
            });
        }
        match d {
            Some(d) => {
                prev = c;
                cur = d;
                n += 2;
            }
            None => return Err(fail(n + 2)),
        }
    }
}

fn dim_cache() -> &'static Mutex<HashMap<Partition, PolyQ>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, PolyQ>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The polynomial `P` of degree `|λ|` with `P(n) = dim X(λ|_n)`, interpolated
/// from `|λ| + 1` ranks and checked on three more.
pub fn dim_poly(lambda: &Partition) -> Result<PolyQ> {
    if let Some(p) = dim_cache().lock().unwrap().get(lambda) {
        return Ok(p.clone());
    }
    let start = lambda.first_row() + lambda.size();
    let points = (start..start + lambda.size() + 4)
        .map(|n| {
            let d = hook_dim(&pad(lambda, n)?);
            Ok((
                Rational::from_integer(Int::from(n)),
                Rational::from_integer(d),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let p = interpolate(&points, lambda.size())?;
    dim_cache()
        .lock()
        .unwrap()
        .insert(lambda.clone(), p.clone());
    Ok(p)
}

/// Padded labels `ν|_n` for all `|ν| ≤ s` for which padding is defined.
fn padded_candidates(n: usize, s: usize) -> Vec<Partition> {
    (0..=s.min(n))
        .flat_map(|k| {
            partitions_bounded(k, n - k)
                .into_iter()
                .map(move |nu| pad(&nu, n).unwrap())
        })
        .collect()
}

/// Reads stable labels off a decomposition at rank `n`. Returns `None` when
/// some constituent's first row does not exceed its second by more than
/// `gap`, i.e. when the rank is too small for the labels to be trusted.
fn unpad(dec: &BTreeMap<Partition, i64>, gap: usize) -> Result<Option<RepObject>> {
    let mut out = RepObject::zero();
    for (lam, &m) in dec {
        if m < 0 {
            return Err(Error::NegativeMultiplicity(format!(
                "{lam} occurs {m} times"
            )));
        }
        if lam.first_row() <= lam.part(1) + gap {
            return Ok(None);
        }
        out.add_copies(&lam.strip_first_row(), m as u64);
    }
    Ok(Some(out))
}

/// Decomposes a genuine character of `S_n` known to involve only labels of
/// size `≤ s`; `None` if the candidates do not account for its whole degree.
fn decompose_stable(f: &ClassFunction, s: usize) -> Result<Option<RepObject>> {
    let cands = padded_candidates(f.n, s);
    let dec = decompose_over(f, &cands)?;
    let covered: Int = dec.iter().map(|(l, &m)| hook_dim(l) * m).sum();
    if Rational::from_integer(covered) != f.degree() {
        return Ok(None);
    }
    unpad(&dec, 0)
}

/// Bounds and stabilization parameters shared by every construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Engine {
    /// Highest rank the stabilization loop may reach.
    pub cap: usize,
    /// Added to each construction's default starting rank.
    pub start_offset: usize,
    /// Largest `m` for tensor powers `[m]`.
    pub power_bound: usize,
    /// Largest `|λ| + |μ|` for tensor products.
    pub size_bound: usize,
    /// Largest `k` for restriction and `j` for induction.
    pub k_bound: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            cap: DEFAULT_CAP,
            start_offset: 0,
            power_bound: 6,
            size_bound: 10,
            k_bound: 5,
        }
    }
}

impl Engine {
    pub fn with_offset(&self, start_offset: usize) -> Self {
        Engine {
            start_offset,
            ..self.clone()
        }
    }

    /// `[m] = 𝒳^{⊗m}` where `𝒳 = [1]` is the interpolated permutation module.
    pub fn power(&self, m: usize) -> Result<StabilizationReport<RepObject>> {
        if m > self.power_bound {
            return Err(Error::BoundExceeded(format!(
                "power {m} > {}",
                self.power_bound
            )));
        }
        stabilize(2 * m + 2 + self.start_offset, self.cap, |n| {
            decompose_stable(&ClassFunction::permutation(n).pow(m as u32), m)
        })
    }

    pub fn tensor(&self, a: &RepObject, b: &RepObject) -> Result<StabilizationReport<RepObject>> {
        let s = a.max_size() + b.max_size();
        if s > self.size_bound {
            return Err(Error::BoundExceeded(format!(
                "|λ|+|μ| = {s} > {}",
                self.size_bound
            )));
        }
        stabilize(2 * s + 2 + self.start_offset, self.cap, |n| {
            let mut f = ClassFunction::zero(n);
            for (l, &x) in a.terms() {
                let Ok(pl) = pad(l, n) else { return Ok(None) };
                for (m, &y) in b.terms() {
                    let Ok(pm) = pad(m, n) else { return Ok(None) };
                    let prod = character(&pl).mul(&character(&pm))?;
                    f = f.add(&prod.scale(&Rational::from_integer(Int::from(x * y))))?;
                }
            }
            decompose_stable(&f, s)
        })
    }

    /// The character of `W` at rank `n`, or `None` if some label cannot be padded.
    fn character_at(w: &RepObject, n: usize) -> Result<Option<ClassFunction>> {
        let mut f = ClassFunction::zero(n);
        for (l, &m) in w.terms() {
            let Ok(pl) = pad(l, n) else { return Ok(None) };
            f = f.add(&character(&pl).scale(&Rational::from_integer(Int::from(m))))?;
        }
        Ok(Some(f))
    }

    fn square(&self, w: &RepObject, sym: bool) -> Result<StabilizationReport<RepObject>> {
        let s = 2 * w.max_size();
        if s > self.size_bound {
            return Err(Error::BoundExceeded(format!(
                "2|λ| = {s} > {}",
                self.size_bound
            )));
        }
        stabilize(2 * s + 2 + self.start_offset, self.cap, |n| {
            let Some(f) = Self::character_at(w, n)? else {
                return Ok(None);
            };
            let sq = if sym {
                crate::chars::sym2(&f)
            } else {
                crate::chars::alt2(&f)
            };
            decompose_stable(&sq, s)
        })
    }

    /// Symmetric square `S²W`.
    pub fn sym2(&self, w: &RepObject) -> Result<StabilizationReport<RepObject>> {
        self.square(w, true)
    }

    /// Exterior square `Λ²W`.
    pub fn alt2(&self, w: &RepObject) -> Result<StabilizationReport<RepObject>> {
        self.square(w, false)
    }

    /// `Res^{S_t}_{S_{t-k} × S_k}`.
    pub fn restrict(&self, v: &RepObject, k: usize) -> Result<StabilizationReport<BiObject>> {
        if k > self.k_bound {
            return Err(Error::BoundExceeded(format!("k = {k} > {}", self.k_bound)));
        }
        let betas = partitions(k);
        stabilize(
            2 * v.max_size() + k + 2 + self.start_offset,
            self.cap,
            |n| {
                let mut out = BiObject {
                    k,
                    terms: BTreeMap::new(),
                };
                for (lam, &mult) in v.terms() {
                    let Ok(big) = pad(lam, n) else {
                        return Ok(None);
                    };
                    if big.first_row() <= big.part(1) + k {
                        return Ok(None);
                    }
                    for alpha in remove_boxes(&big, k) {
                        for beta in &betas {
                            let c = lr_coeff(&big, beta, &alpha);
                            if c > 0 {
                                *out.terms
                                    .entry((alpha.strip_first_row(), beta.clone()))
                                    .or_insert(0) += c * mult;
                            }
                        }
                    }
                }
                Ok(Some(out))
            },
        )
    }

    /// `Ind^{S_t}_{S_{t-j} × H}`: induce each `H`-character to `S_j`, then
    /// apply Littlewood–Richardson induction from `S_{n-j} × S_j` to `S_n`.
    pub fn induce(&self, w: &HBiObject) -> Result<StabilizationReport<RepObject>> {
        let j = w.j();
        if j > self.k_bound {
            return Err(Error::BoundExceeded(format!("j = {j} > {}", self.k_bound)));
        }
        w.check_labels()?;
        let table = w.h.rational_table();
        let mut lifted: HashMap<usize, BTreeMap<Partition, i64>> = HashMap::new();
        for &(_, i) in w.terms.keys() {
            if let std::collections::hash_map::Entry::Vacant(e) = lifted.entry(i) {
                e.insert(decompose(&w.h.induce(&table.elementwise(i))?)?);
            }
        }
        let size = w.terms.keys().map(|(nu, _)| nu.size()).max().unwrap_or(0);
        stabilize(2 * (size + j) + 2 + self.start_offset, self.cap, |n| {
            let mut dec: BTreeMap<Partition, i64> = BTreeMap::new();
            for ((nu, i), &mult) in &w.terms {
                let Some(rest) = n.checked_sub(j) else {
                    return Ok(None);
                };
                let Ok(alpha) = pad(nu, rest) else {
                    return Ok(None);
                };
                for lam in add_boxes(&alpha, j) {
                    for (beta, &mb) in &lifted[i] {
                        let c = lr_coeff(&lam, beta, &alpha);
                        if c > 0 {
                            *dec.entry(lam.clone()).or_insert(0) += c as i64 * mb * mult as i64;
                        }
                    }
                }
            }
            unpad(&dec, 0)
        })
    }

    /// Multiplicity of `ν ⊠ ψ_i` in `Res^{S_t}_{S_{t-j} × H} V`, for every pair.
    pub fn restrict_to_h(
        &self,
        v: &RepObject,
        h: &FiniteSubgroup,
    ) -> Result<BTreeMap<(Partition, usize), i64>> {
        let res = self.restrict(v, h.j)?.result;
        let table = h.rational_table();
        let mut out = BTreeMap::new();
        for ((nu, beta), &m) in &res.terms {
            let restricted = table.restrict(h, &character(beta));
            for (i, ch) in table.chars.iter().enumerate() {
                let hom = table.inner(ch, &restricted);
                let hom = hom.to_integer().to_i64().expect("small multiplicity");
                if hom != 0 {
                    *out.entry((nu.clone(), i)).or_insert(0) += hom * m as i64;
                }
            }
        }
        Ok(out)
    }

    /// Checks `dim Hom(Ind W, V) = dim Hom(W, Res V)`; returns both sides.
    pub fn frobenius_check(&self, w: &HBiObject, v: &RepObject) -> Result<(bool, u64, u64)> {
        let ind = self.induce(w)?.result;
        let lhs: u64 = v.terms().iter().map(|(l, &m)| m * ind.mult(l)).sum();
        let res = self.restrict_to_h(v, &w.h)?;
        let rhs: i64 = w
            .terms
            .iter()
            .map(|(key, &m)| m as i64 * res.get(key).copied().unwrap_or(0))
            .sum();
        let rhs = rhs as u64;
        Ok((lhs == rhs, lhs, rhs))
    }
}

/// [`Engine::power`] with default bounds.
pub fn decompose_power(m: usize) -> Result<RepObject> {
    Ok(Engine::default().power(m)?.result)
}

/// [`Engine::tensor`] with default bounds.
pub fn tensor_decompose(a: &RepObject, b: &RepObject) -> Result<RepObject> {
    Ok(Engine::default().tensor(a, b)?.result)
}

/// [`Engine::restrict`] with default bounds.
pub fn restrict(v: &RepObject, k: usize) -> Result<BiObject> {
    Ok(Engine::default().restrict(v, k)?.result)
}

/// [`Engine::induce`] with default bounds.
pub fn induce(w: &HBiObject) -> Result<RepObject> {
    Ok(Engine::default().induce(w)?.result)
}

/// [`Engine::frobenius_check`] with default bounds.
pub fn frobenius_check(w: &HBiObject, v: &RepObject) -> Result<(bool, u64, u64)> {
    Engine::default().frobenius_check(w, v)
}

/// `[S_t : S_{t-j} × H] = C(t,j) · j!/|H|` as a polynomial.
pub fn index_poly(j: usize, h_order: usize) -> PolyQ {
    let c = Rational::new(crate::arith::factorial(j as u64), Int::from(h_order));
    binom_poly(j).scale(&c)
}

/// One disagreement between stabilized restriction and the closed formula
/// `Σ_{μ' ∈ M(μ)} c^λ_{ν,μ'}`, read with `c^λ_{ν,μ'}` = number of
/// semistandard fillings of `λ/ν` with content `μ'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaDiscrepancy {
    pub lambda: Partition,
    pub nu: Partition,
    pub mu: Partition,
    pub stabilized: u64,
    pub formula: u64,
}

/// Compares the closed restriction formula against the stabilized answer for
/// all `|λ| ≤ max_size`, `k ≤ max_k`, listing every mismatch.
pub fn restriction_formula_discrepancies(
    max_size: usize,
    max_k: usize,
) -> Result<Vec<FormulaDiscrepancy>> {
    let engine = Engine::default();
    let mut out = Vec::new();
    for s in 0..=max_size {
        for lambda in partitions(s) {
            for k in 1..=max_k {
                let res = engine
                    .restrict(&RepObject::simple(lambda.clone()), k)?
                    .result;
                for nu in remove_boxes_any(&lambda, k) {
                    for mu in partitions(k) {
                        let formula: u64 = crate::partitions::weight_box(&mu)
                            .iter()
                            .map(|w| semistandard_count(&lambda, &nu, &w.0))
                            .sum();
                        let stabilized = res
                            .terms
                            .get(&(nu.clone(), mu.clone()))
                            .copied()
                            .unwrap_or(0);
                        if formula != stabilized {
                            out.push(FormulaDiscrepancy {
                                lambda: lambda.clone(),
                                nu: nu.clone(),
                                mu,
                                stabilized,
                                formula,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Subdiagrams `ν ⊆ λ` with `|λ/ν| ≤ k`.
fn remove_boxes_any(lambda: &Partition, k: usize) -> Vec<Partition> {
    (0..=k.min(lambda.size()))
        .flat_map(|r| remove_boxes(lambda, r))
        .collect()
}

/// Semistandard fillings of `λ/ν` whose content is exactly `w` (an unsorted weight).
fn semistandard_count(lambda: &Partition, nu: &Partition, w: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (nu.part(r)..lambda.part(r)).map(move |c| (r, c)))
        .collect();
    if cells.len() != w.iter().sum::<usize>() {
        return 0;
    }
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        nu: &Partition,
        fill: &mut HashMap<(usize, usize), usize>,
        left: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        let lo_row = if c > nu.part(r) { fill[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 && c >= nu.part(r - 1) {
            fill[&(r - 1, c)] + 1
        } else {
            0
        };
        let lo = lo_row.max(lo_col);
        let mut total = 0;
        for v in lo..left.len() {
            if left[v] == 0 {
                continue;
            }
            left[v] -= 1;
            fill.insert((r, c), v);
            total += go(idx + 1, cells, nu, fill, left);
            left[v] += 1;
        }
        total
    }
    go(0, &cells, nu, &mut HashMap::new(), &mut w.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn obj(s: &str) -> RepObject {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let o = obj("{[]:2, [1]:3, [2]:1, [1,1]:1}");
        assert_eq!(o.to_string(), "{[]:2, [1]:3, [2]:1, [1,1]:1}");
        assert_eq!(obj("[2,1]"), RepObject::simple(part(&[2, 1])));
        assert_eq!(obj("{[1], []}"), obj("{[]:1,[1]:1}"));
        assert!(obj("0").is_zero());
        assert!("{[1]:x}".parse::<RepObject>().is_err());
    }

    #[test]
    fn dimension_polynomials() {
        let t = PolyQ::t();
        assert_eq!(dim_poly(&Partition::empty()).unwrap(), PolyQ::one());
        assert_eq!(dim_poly(&part(&[1])).unwrap().to_string(), "t - 1");
        assert_eq!(
            dim_poly(&part(&[2])).unwrap().to_string(),
            "1/2*t^2 - 3/2*t"
        );
        let expect = &(&t - &PolyQ::from_int(1)) * &(&t - &PolyQ::from_int(2));
        assert_eq!(
            dim_poly(&part(&[1, 1])).unwrap(),
            expect.scale(&Rational::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn powers() {
        assert_eq!(decompose_power(0).unwrap(), RepObject::unit());
        assert_eq!(decompose_power(1).unwrap(), obj("{[]:1,[1]:1}"));
        assert_eq!(
            decompose_power(2).unwrap(),
            obj("{[]:2,[1]:3,[2]:1,[1,1]:1}")
        );
        assert!(matches!(decompose_power(7), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn tensors() {
        let x1 = obj("[1]");
        let r = Engine::default().tensor(&x1, &x1).unwrap();
        assert_eq!(r.result, obj("{[]:1,[1]:1,[2]:1,[1,1]:1}"));
        assert_eq!((r.n_low, r.n_high), (6, 7));
        let b = obj("{[2]:1,[1]:2}");
        assert_eq!(tensor_decompose(&RepObject::unit(), &b).unwrap(), b);
    }

    #[test]
    fn restrictions() {
        let r = restrict(&obj("[1]"), 1).unwrap();
        let expect: BTreeMap<_, _> = [
            ((Partition::empty(), part(&[1])), 1),
            ((part(&[1]), part(&[1])), 1),
        ]
        .into();
        assert_eq!(r.terms, expect);
        let r = restrict(&RepObject::unit(), 3).unwrap();
        assert_eq!(
            r.terms,
            BTreeMap::from([((Partition::empty(), part(&[3])), 1)])
        );
        let r = restrict(&obj("{[]:1,[1]:1}"), 2).unwrap();
        let expect: BTreeMap<_, _> = [
            ((Partition::empty(), part(&[2])), 2),
            ((part(&[1]), part(&[2])), 1),
            ((Partition::empty(), part(&[1, 1])), 1),
        ]
        .into();
        assert_eq!(r.terms, expect);
    }

    #[test]
    fn inductions() {
        let one = RepObject::unit();
        let w = HBiObject::trivial_action(FiniteSubgroup::trivial(0), &one);
        assert_eq!(induce(&w).unwrap(), one);
        let w = HBiObject::trivial_action(FiniteSubgroup::symmetric(1), &one);
        assert_eq!(induce(&w).unwrap(), obj("{[]:1,[1]:1}"));
        let w = HBiObject::trivial_action(FiniteSubgroup::symmetric(2), &one);
        assert_eq!(induce(&w).unwrap(), obj("{[]:1,[1]:1,[2]:1}"));
        let mut bad = HBiObject::new(FiniteSubgroup::symmetric(2));
        bad.add(Partition::empty(), 5, 1);
        assert!(matches!(induce(&bad), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn reciprocity_examples() {
        let w = HBiObject::trivial_action(FiniteSubgroup::symmetric(1), &RepObject::unit());
        assert_eq!(
            frobenius_check(&w, &obj("{[]:1,[1]:1}")).unwrap(),
            (true, 2, 2)
        );
        let mut w = HBiObject::new(FiniteSubgroup::symmetric(2));
        w.add(part(&[1]), 1, 1);
        let (ok, l, r) = frobenius_check(&w, &RepObject::unit()).unwrap();
        assert!(ok && l == 0 && r == 0);
    }

    #[test]
    fn stabilization_engine() {
        let r = stabilize(3, 30, |_| Ok(Some(7))).unwrap();
        assert_eq!((r.n_low, r.n_high, r.result), (3, 4, 7));
        let e = stabilize(3, 30, |n| Ok(Some(n % 2)));
        assert!(matches!(e, Err(Error::StabilizationFailure(_))));
        let r = stabilize(3, 30, |n| Ok(if n < 8 { Some(n) } else { Some(0) })).unwrap();
        assert_eq!((r.n_low, r.n_high), (8, 9));
        let r = stabilize(3, 30, |n| Ok(if n < 9 { Some(n) } else { Some(0) })).unwrap();
        assert_eq!((r.n_low, r.n_high), (9, 10));
        assert!(stabilize(30, 30, |_| Ok(Some(1))).is_err());
    }

    #[test]
    fn squares() {
        let e = Engine::default();
        let x1 = obj("[1]");
        assert_eq!(e.alt2(&x1).unwrap().result, obj("[1,1]"));
        // The permutation object [1] = 1 ⊕ 𝒳(1).
        let perm = obj("{[]:1,[1]:1}");
        assert_eq!(e.alt2(&perm).unwrap().result, obj("{[1]:1,[1,1]:1}"));
        assert_eq!(e.sym2(&x1).unwrap().result, obj("{[]:1,[1]:1,[2]:1}"));
        assert_eq!(
            e.sym2(&RepObject::unit()).unwrap().result,
            RepObject::unit()
        );
        assert!(e.alt2(&RepObject::unit()).unwrap().result.is_zero());
    }

    #[test]
    fn starting_rank_is_irrelevant() {
        let x = obj("{[1]:1,[2]:1}");
        let a = Engine::default().tensor(&x, &x).unwrap().result;
        let b = Engine::default()
            .with_offset(3)
            .tensor(&x, &x)
            .unwrap()
            .result;
        assert_eq!(a, b);
    }
}
