//! Exact sparse polynomials over the rationals.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::space::{Var, VarSpace};

pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// A polynomial in a fixed [`VarSpace`], terms strictly descending under
/// its [`MonomialOrder`]. The empty term list is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    space: VarSpace,
    order: MonomialOrder,
    terms: Vec<Term>,
}

/// Block degrees of a multihomogeneous polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiDegree {
    Zero,
    Homogeneous { x: u32, y: u32, z: u32 },
    Inhomogeneous,
}

impl Polynomial {
    pub fn zero(space: VarSpace, order: MonomialOrder) -> Self {
        Polynomial { space, order, terms: Vec::new() }
    }

    pub fn constant(space: VarSpace, order: MonomialOrder, c: Coeff) -> Self {
        Self::from_monomial(space, order, c, Monomial::one(space.nvars()))
    }

    pub fn one(space: VarSpace, order: MonomialOrder) -> Self {
        Self::constant(space, order, Coeff::one())
    }

    pub fn var(space: VarSpace, order: MonomialOrder, v: Var) -> Result<Self> {
        let idx = space.index(v)?;
        Ok(Self::from_monomial(space, order, Coeff::one(), Monomial::var(space.nvars(), idx)))
    }

    pub fn from_monomial(space: VarSpace, order: MonomialOrder, c: Coeff, mono: Monomial) -> Self {
        assert_eq!(mono.nvars(), space.nvars(), "monomial does not fit the space");
        let terms = if c.is_zero() { Vec::new() } else { vec![Term { coeff: c, mono }] };
        Polynomial { space, order, terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or
    /// zero) terms.
    pub fn from_terms<I>(space: VarSpace, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Coeff, Monomial)>,
    {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, mono)| {
                assert_eq!(mono.nvars(), space.nvars(), "monomial does not fit the space");
                Term { coeff, mono }
            })
            .collect();
        raw.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => {
                    if terms.last().is_some_and(|l| l.coeff.is_zero()) {
                        terms.pop();
                    }
                    terms.push(t);
                }
            }
        }
        if terms.last().is_some_and(|l| l.coeff.is_zero()) {
            terms.pop();
        }
        Polynomial { space, order, terms }
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(AlgebraError::LeadingTermOfZero)
    }

    /// Leading monomial; panics on zero, for internal hot paths.
    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    pub(crate) fn lc(&self) -> &Coeff {
        &self.terms[0].coeff
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|t| &t.mono)
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    pub fn multidegree(&self) -> MultiDegree {
        let s = self.space;
        let block = |m: &Monomial| {
            let e = m.exponents();
            let sum = |r: std::ops::Range<usize>| e[r].iter().map(|&v| v as u32).sum::<u32>();
            let (t0, x0, y0, z0) = (0, s.elim_count(), s.elim_count() + s.n(), s.elim_count() + 2 * s.n());
            (sum(t0..x0), sum(x0..y0), sum(y0..z0), sum(z0..s.nvars()))
        };
        let mut it = self.terms.iter().map(|t| block(&t.mono));
        let Some(first) = it.next() else {
            return MultiDegree::Zero;
        };
        if it.all(|d| d == first) {
            MultiDegree::Homogeneous { x: first.1, y: first.2, z: first.3 }
        } else {
            MultiDegree::Inhomogeneous
        }
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { space: self.space, order, terms }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => {
                let inv = t.coeff.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.space, self.order);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() }).collect();
        Polynomial { space: self.space, order: self.order, terms }
    }

    /// `c * m * self`; the order is preserved because monomial orders are
    /// multiplicative.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.space, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.mul(m) })
            .collect();
        Polynomial { space: self.space, order: self.order, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        self.mul_term(&Coeff::one(), m)
    }

    /// `self + c * m * g` in a single merge pass.
    pub(crate) fn add_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        let terms = merge_scaled(self.order, &self.terms, c, m, &g.terms);
        Polynomial { space: self.space, order: self.order, terms }
    }

    /// Wraps terms already strictly descending under `order`.
    pub(crate) fn from_sorted_terms(space: VarSpace, order: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { space, order, terms }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        self.space.check_same(&other.space)?;
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(&Coeff::one(), &Monomial::one(self.space.nvars()), other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(&-Coeff::one(), &Monomial::one(self.space.nvars()), other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.space, self.order));
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let t = &small.terms[0];
            return Ok(large.mul_term(&t.coeff, &t.mono));
        }
        let products = small
            .terms
            .iter()
            .flat_map(|s| large.terms.iter().map(move |l| (&s.coeff * &l.coeff, s.mono.mul(&l.mono))));
        Ok(Polynomial::from_terms(self.space, self.order, products))
    }

    pub fn power(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.space, self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Moves the polynomial into `space.with_extra_elim(extra)`, shifting
    /// exponents past the new leading elimination variables.
    pub fn embed_with_elim(&self, extra: usize, order: MonomialOrder) -> Polynomial {
        let space = self.space.with_extra_elim(extra);
        let terms = self.terms.iter().map(|t| {
            let exps = std::iter::repeat_n(0u16, extra).chain(t.mono.exponents().iter().copied());
            (t.coeff.clone(), Monomial::from_exponents(exps))
        });
        Polynomial::from_terms(space, order, terms)
    }

    /// Drops all elimination variables; fails if one occurs.
    pub fn strip_elim(&self, order: MonomialOrder) -> Result<Polynomial> {
        let e = self.space.elim_count();
        let space = self.space.without_elim();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.mono.exponents()[..e].iter().any(|&v| v > 0) {
                return Err(AlgebraError::Precondition(
                    "polynomial still involves an elimination variable".into(),
                ));
            }
            terms.push((t.coeff.clone(), Monomial::from_exponents(t.mono.exponents()[e..].iter().copied())));
        }
        Ok(Polynomial::from_terms(space, order, terms))
    }

    pub fn involves_elim(&self) -> bool {
        let e = self.space.elim_count();
        self.terms.iter().any(|t| t.mono.exponents()[..e].iter().any(|&v| v > 0))
    }

    /// Largest power of each variable that occurs.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.space.nvars()];
        for t in &self.terms {
            for v in t.mono.support() {
                seen[v] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }
}

/// Merges `a + c * m * g` for descending term slices.
pub(crate) fn merge_scaled(ord: MonomialOrder, a: &[Term], c: &Coeff, m: &Monomial, g: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut a = a.iter().peekable();
    let mut b = g.iter().map(|t| (&t.coeff * c, t.mono.mul(m))).peekable();
    loop {
        let step = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some((_, bm))) => ord.cmp(&x.mono, bm),
        };
        match step {
            Ordering::Greater => out.push(a.next().unwrap().clone()),
            Ordering::Less => {
                let (coeff, mono) = b.next().unwrap();
                out.push(Term { coeff, mono });
            }
            Ordering::Equal => {
                let x = a.next().unwrap();
                let (bc, mono) = b.next().unwrap();
                let coeff = &x.coeff + bc;
                if !coeff.is_zero() {
                    out.push(Term { coeff, mono });
                }
            }
        }
    }
    out
}

macro_rules! binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$call(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { coeff: -&t.coeff, mono: t.mono.clone() }).collect();
        Polynomial { space: self.space, order: self.order, terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// A ring homomorphism given by the image of every variable.
#[derive(Debug, Clone)]
pub struct Substitution {
    source: VarSpace,
    target: VarSpace,
    order: MonomialOrder,
    images: Vec<Option<Polynomial>>,
}

impl Substitution {
    pub fn new(source: VarSpace, target: VarSpace, order: MonomialOrder) -> Self {
        Substitution { source, target, order, images: vec![None; source.nvars()] }
    }

    /// The identity on `space`.
    pub fn identity(space: VarSpace, order: MonomialOrder) -> Self {
        let mut s = Self::new(space, space, order);
        for i in 0..space.nvars() {
            s.images[i] = Some(Polynomial::from_monomial(space, order, Coeff::one(), Monomial::var(space.nvars(), i)));
        }
        s
    }

    pub fn set(&mut self, v: Var, image: Polynomial) -> Result<&mut Self> {
        self.target.check_same(&image.space())?;
        let idx = self.source.index(v)?;
        self.images[idx] = Some(image.with_order(self.order));
        Ok(self)
    }

    pub fn source(&self) -> VarSpace {
        self.source
    }

    pub fn target(&self) -> VarSpace {
        self.target
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.source.check_same(&f.space())?;
        let mut acc = Polynomial::zero(self.target, self.order);
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); self.source.nvars()];
        for t in f.terms() {
            let mut prod = Polynomial::constant(self.target, self.order, t.coeff.clone());
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = self.images[v]
                    .as_ref()
                    .ok_or_else(|| AlgebraError::UnmappedVariable(self.source.var(v).to_string()))?;
                let cache = &mut powers[v];
                if cache.is_empty() {
                    cache.push(Polynomial::one(self.target, self.order));
                }
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * image;
                    cache.push(next);
                }
                prod = &prod * &cache[e as usize];
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }
}
