//! Dense-exponent monomials and the monomial orders used by the kernel.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

/// Inline capacity covers `3n + 1` variables up to `n = 9` without spilling.
pub type Exponents = SmallVec<[u16; 28]>;

/// A monomial as a dense exponent vector.
///
/// The total degree and a support bitmask are cached; equality and hashing
/// only look at the exponents.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
    mask: u64,
}

fn support_mask(exps: &[u16]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

impl Monomial {
    pub fn from_exponents<I: IntoIterator<Item = u16>>(exps: I) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        let mask = support_mask(&exps);
        Monomial { exps, degree, mask }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0, mask: 0 }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m.mask = 1u64 << (index % 64);
        m
    }

    /// Product of the given variables, each to the first power.
    pub fn squarefree<I: IntoIterator<Item = usize>>(nvars: usize, vars: I) -> Self {
        let mut exps: Exponents = SmallVec::from_elem(0, nvars);
        for v in vars {
            exps[v] += 1;
        }
        Self::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree, mask: self.mask | other.mask }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::from_exponents(self.exps.iter().map(|&e| e * k as u16))
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exponents(other.exps.iter().zip(&self.exps).map(|(b, a)| b - a)))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.nvars() <= 64 {
            return self.mask & other.mask == 0;
        }
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Compare under `ord`, rejecting monomials from different spaces.
    pub fn compare(&self, other: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
        if self.nvars() != other.nvars() {
            return Err(AlgebraError::SpaceMismatch {
                left: format!("{} variables", self.nvars()),
                right: format!("{} variables", other.nvars()),
            });
        }
        Ok(ord.cmp(self, other))
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

/// A monomial order.
///
/// `ElimBlock { block }` compares the first `block` exponents by grevlex
/// and breaks ties with grevlex on the remaining exponents, which makes any
/// monomial involving the block larger than every monomial free of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    ElimBlock { block: usize },
}

#[inline]
fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for k in (0..a.len()).rev() {
        if a[k] != b[k] {
            // The smaller exponent in the last differing slot wins.
            return b[k].cmp(&a[k]);
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::Grevlex => grevlex(&a.exps, &b.exps, a.degree, b.degree),
            MonomialOrder::ElimBlock { block } => {
                let (ah, at) = a.exps.split_at(block);
                let (bh, bt) = b.exps.split_at(block);
                let dah: u32 = ah.iter().map(|&e| e as u32).sum();
                let dbh: u32 = bh.iter().map(|&e| e as u32).sum();
                grevlex(ah, bh, dah, dbh).then_with(|| grevlex(at, bt, a.degree - dah, b.degree - dbh))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::ElimBlock { .. } => "elim-block",
        }
    }
}
