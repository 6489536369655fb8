//! Tensor operations in `Rep(S_{t-j}) ⊠ Rep(H)`.
//!
//! An object is stored as a map `ν ↦ χ_ν`, where `χ_ν` is the (element-wise)
//! character of the `H`-module sitting over `𝒳(ν)`. Products of simples
//! multiply the `H`-characters, and squares use
//! `S²(X ⊠ U) = S²X ⊠ S²U ⊕ Λ²X ⊠ Λ²U` and `S²(A ⊕ B) = S²A ⊕ A⊗B ⊕ S²B`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::{rat, Rational};
use crate::chars::FiniteSubgroup;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::repst::{Engine, HBiObject, RepObject};

type HChar = Vec<Rational>;

struct Graded {
    h: FiniteSubgroup,
    parts: BTreeMap<Partition, HChar>,
}

impl Graded {
    fn new(h: &FiniteSubgroup) -> Self {
        Graded {
            h: h.clone(),
            parts: BTreeMap::new(),
        }
    }

    fn of(x: &HBiObject) -> Self {
        let table = x.h.rational_table();
        let mut out = Self::new(&x.h);
        for ((nu, i), &m) in &x.terms {
            let chi: HChar = table
                .elementwise(*i)
                .iter()
                .map(|v| v * rat(m as i64))
                .collect();
            out.add(nu, &chi);
        }
        out
    }

    fn add(&mut self, nu: &Partition, chi: &[Rational]) {
        let slot = self
            .parts
            .entry(nu.clone())
            .or_insert_with(|| vec![Rational::zero(); chi.len()]);
        for (a, b) in slot.iter_mut().zip(chi) {
            *a += b;
        }
    }

    /// Adds `obj ⊠ χ`.
    fn add_object(&mut self, obj: &RepObject, chi: &[Rational]) {
        for (nu, &m) in obj.terms() {
            let scaled: HChar = chi.iter().map(|v| v * rat(m as i64)).collect();
            self.add(nu, &scaled);
        }
    }

    fn into_hbi(self) -> Result<HBiObject> {
        let table = self.h.rational_table();
        let mut out = HBiObject::new(self.h.clone());
        for (nu, chi) in self.parts {
            let on_classes: Vec<Rational> =
                table.classes.iter().map(|c| chi[c[0]].clone()).collect();
            for (i, m) in table.decompose(&on_classes)?.into_iter().enumerate() {
                if m < 0 {
                    return Err(Error::NegativeMultiplicity(format!(
                        "({nu}, {i}) occurs {m} times"
                    )));
                }
                out.add(nu.clone(), i, m as u64);
            }
        }
        Ok(out)
    }
}

fn product(a: &[Rational], b: &[Rational]) -> HChar {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

/// `(χ(h)² ± χ(h²)) / 2`.
fn square_char(h: &FiniteSubgroup, chi: &[Rational], sym: bool) -> HChar {
    let two = rat(2);
    h.elements()
        .iter()
        .enumerate()
        .map(|(e, g)| {
            let sq = h.index_of(&g.after(g)).expect("closed under squaring");
            let s = &chi[e] * &chi[e];
            if sym {
                (s + &chi[sq]) / &two
            } else {
                (s - &chi[sq]) / &two
            }
        })
        .collect()
}

fn same_group(a: &HBiObject, b: &HBiObject) -> Result<()> {
    if a.h != b.h {
        return Err(Error::Precondition(format!(
            "subgroups {} and {} differ",
            a.h, b.h
        )));
    }
    Ok(())
}

impl Engine {
    pub fn h_tensor(&self, a: &HBiObject, b: &HBiObject) -> Result<HBiObject> {
        same_group(a, b)?;
        let (ga, gb) = (Graded::of(a), Graded::of(b));
        let mut out = Graded::new(&a.h);
        for (nu, x) in &ga.parts {
            for (mu, y) in &gb.parts {
                let prod = self
                    .tensor(
                        &RepObject::simple(nu.clone()),
                        &RepObject::simple(mu.clone()),
                    )?
                    .result;
                out.add_object(&prod, &product(x, y));
            }
        }
        out.into_hbi()
    }

    fn h_square(&self, a: &HBiObject, sym: bool) -> Result<HBiObject> {
        let ga = Graded::of(a);
        let mut out = Graded::new(&a.h);
        let items: Vec<_> = ga.parts.iter().collect();
        for (k, (nu, x)) in items.iter().enumerate() {
            let simple = RepObject::simple((*nu).clone());
            let (s2, a2) = (self.sym2(&simple)?.result, self.alt2(&simple)?.result);
            let (s2x, a2x) = (square_char(&a.h, x, true), square_char(&a.h, x, false));
            if sym {
                out.add_object(&s2, &s2x);
                out.add_object(&a2, &a2x);
            } else {
                out.add_object(&s2, &a2x);
                out.add_object(&a2, &s2x);
            }
            for (mu, y) in &items[k + 1..] {
                let prod = self
                    .tensor(&simple, &RepObject::simple((*mu).clone()))?
                    .result;
                out.add_object(&prod, &product(x, y));
            }
        }
        out.into_hbi()
    }

    pub fn h_sym2(&self, a: &HBiObject) -> Result<HBiObject> {
        self.h_square(a, true)
    }

    pub fn h_alt2(&self, a: &HBiObject) -> Result<HBiObject> {
        self.h_square(a, false)
    }
}

pub fn h_tensor(a: &HBiObject, b: &HBiObject) -> Result<HBiObject> {
    Engine::default().h_tensor(a, b)
}

pub fn h_sym2(a: &HBiObject) -> Result<HBiObject> {
    Engine::default().h_sym2(a)
}

pub fn h_alt2(a: &HBiObject) -> Result<HBiObject> {
    Engine::default().h_alt2(a)
}

/// Total multiplicity of `(ν, label)`.
pub(crate) fn hmult(x: &HBiObject, nu: &Partition, label: usize) -> u64 {
    x.terms.get(&(nu.clone(), label)).copied().unwrap_or(0)
}

/// Removes `k` copies of the unit object with trivial `H`-action.
pub(crate) fn remove_units(x: &HBiObject, k: u64) -> Result<HBiObject> {
    let key = (Partition::empty(), 0);
    let have = x.terms.get(&key).copied().unwrap_or(0);
    if have < k {
        return Err(Error::NegativeMultiplicity(format!(
            "cannot remove {k} unit objects from {have}"
        )));
    }
    let mut out = x.clone();
    if have == k {
        out.terms.remove(&key);
    } else {
        out.terms.insert(key, have - k);
    }
    Ok(out)
}

pub(crate) fn hadd(a: &HBiObject, b: &HBiObject) -> HBiObject {
    let mut out = a.clone();
    for ((nu, i), &m) in &b.terms {
        out.add(nu.clone(), *i, m);
    }
    out
}

pub(crate) fn hscale(a: &HBiObject, k: u64) -> HBiObject {
    let mut out = HBiObject::new(a.h.clone());
    for ((nu, i), &m) in &a.terms {
        out.add(nu.clone(), *i, m * k);
    }
    out
}
