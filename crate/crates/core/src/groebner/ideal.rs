use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;

use super::buchberger::{buchberger, interreduce, Budget, BuchbergerOptions, BuchbergerStats};
use super::division::{reduce, s_poly_raw};
use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Coeff, Polynomial};
use crate::space::VarSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub polys: Vec<Polynomial>,
    pub stats: BuchbergerStats,
}

/// An ideal given by generators, with a write-once cache of its reduced
/// Gröbner basis under the ideal's order.
#[derive(Debug, Clone)]
pub struct Ideal {
    space: VarSpace,
    order: MonomialOrder,
    gens: Vec<Polynomial>,
    budget: Budget,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped, the rest are made monic.
    pub fn new(space: VarSpace, order: MonomialOrder, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            space.check_same(&g.space())?;
            if !g.is_zero() {
                out.push(g.with_order(order).monic());
            }
        }
        Ok(Ideal { space, order, gens: out, budget: Budget::default(), gb: OnceLock::new() })
    }

    pub fn zero(space: VarSpace, order: MonomialOrder) -> Self {
        Ideal { space, order, gens: Vec::new(), budget: Budget::default(), gb: OnceLock::new() }
    }

    pub fn unit(space: VarSpace, order: MonomialOrder) -> Self {
        Self::new(space, order, vec![Polynomial::one(space, order)]).expect("same space")
    }

    pub fn principal(f: &Polynomial) -> Self {
        Self::new(f.space(), f.order(), vec![f.clone()]).expect("same space")
    }

    /// An ideal whose generators are known to be its reduced Gröbner basis.
    pub(crate) fn from_reduced_basis(space: VarSpace, order: MonomialOrder, basis: Vec<Polynomial>, budget: Budget) -> Self {
        let gb = OnceLock::new();
        let _ = gb.set(GroebnerBasis { polys: basis.clone(), stats: BuchbergerStats::default() });
        Ideal { space, order, gens: basis, budget, gb }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let opts = BuchbergerOptions { criteria: true, budget: self.budget };
        let (polys, stats) = buchberger(&self.gens, self.order, &opts)?;
        let _ = self.gb.set(GroebnerBasis { polys, stats });
        Ok(self.gb.get().expect("just set"))
    }

    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        Ok(&self.groebner()?.polys)
    }

    pub fn is_basis_cached(&self) -> bool {
        self.gb.get().is_some()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.space.check_same(&f.space())?;
        let gb = self.groebner_basis()?;
        reduce(&f.with_order(self.order), gb, self.budget.deadline)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.space.check_same(&other.space)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual membership of generators.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(|g| g.is_constant()))
    }

    /// The ideal of leading monomials of the reduced basis.
    pub fn initial_ideal(&self) -> Result<Ideal> {
        let lms: Vec<Polynomial> = self
            .groebner_basis()?
            .iter()
            .map(|g| Polynomial::from_monomial(self.space, self.order, Coeff::from_integer(1.into()), g.lm().clone()))
            .collect();
        Ok(Ideal::from_reduced_basis(self.space, self.order, lms, self.budget))
    }

    /// Minimal monomial generators, if every generator is a monomial.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        if !self.gens.iter().all(|g| g.is_monomial()) {
            return None;
        }
        let mut ms: Vec<Monomial> = self.gens.iter().map(|g| g.lm().clone()).collect();
        ms.sort_by_key(|m| m.degree());
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in ms {
            if !minimal.iter().any(|k| k.divides(&m)) {
                minimal.push(m);
            }
        }
        Some(minimal)
    }

    /// True if the ideal is generated by squarefree monomials.
    pub fn is_squarefree_monomial_ideal(&self) -> Result<bool> {
        let probe = match self.monomial_generators() {
            Some(ms) => ms,
            None => {
                let gb = self.groebner_basis()?;
                if !gb.iter().all(|g| g.is_monomial()) {
                    return Ok(false);
                }
                gb.iter().map(|g| g.lm().clone()).collect()
            }
        };
        Ok(probe.iter().all(|m| m.is_squarefree()))
    }

    /// Graded trimming: generators are visited by degree and kept only when
    /// outside the ideal of those already kept.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        for g in &self.gens {
            if !g.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(g.to_string()));
            }
        }
        let mut gens = self.gens.clone();
        gens.sort_by_key(|g| g.total_degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut kept_gb: Vec<Polynomial> = Vec::new();
        let opts = BuchbergerOptions { criteria: true, budget: self.budget };
        for g in gens {
            if !reduce(&g, &kept_gb, self.budget.deadline)?.is_zero() {
                kept.push(g);
                kept_gb = buchberger(&kept, self.order, &opts)?.0;
            }
        }
        Ok(kept)
    }

    /// Re-expresses the ideal under another order; the cache is not kept.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal {
            space: self.space,
            order,
            gens: self.gens.iter().map(|g| g.with_order(order).monic()).collect(),
            budget: self.budget,
            gb: OnceLock::new(),
        }
    }
}

/// A failing S-pair: indices into the checked list and the nonzero remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbWitness {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbCertificate {
    pub pairs_checked: u64,
    pub witness: Option<GbWitness>,
}

impl GbCertificate {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Buchberger's criterion: every S-pair of `f` divides to zero against `f`.
/// On failure the lexicographically first failing pair is returned.
pub fn is_groebner_basis(f: &[Polynomial], ord: MonomialOrder) -> Result<GbCertificate> {
    is_groebner_basis_until(f, ord, None)
}

pub fn is_groebner_basis_until(f: &[Polynomial], ord: MonomialOrder, deadline: Option<Instant>) -> Result<GbCertificate> {
    if let Some(first) = f.first() {
        for g in f {
            first.space().check_same(&g.space())?;
            if g.is_zero() {
                return Err(AlgebraError::ZeroInput("Gröbner basis check"));
            }
        }
    }
    let f: Vec<Polynomial> = f.iter().map(|g| g.with_order(ord)).collect();
    let pairs: Vec<(usize, usize)> = (0..f.len()).flat_map(|i| (i + 1..f.len()).map(move |j| (i, j))).collect();
    let found = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Option<GbWitness>> {
            let s = s_poly_raw(&f[i], &f[j]);
            let r = reduce(&s, &f, deadline)?;
            Ok((!r.is_zero()).then_some(GbWitness { i, j, remainder: r }))
        })
        .find_first(|r| !matches!(r, Ok(None)));
    match found {
        Some(Err(e)) => Err(e),
        Some(Ok(w)) => Ok(GbCertificate { pairs_checked: pairs.len() as u64, witness: w }),
        None => Ok(GbCertificate { pairs_checked: pairs.len() as u64, witness: None }),
    }
}

/// Brings a Gröbner basis into reduced form.
pub fn reduce_basis(basis: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    interreduce(basis, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    const G: MonomialOrder = MonomialOrder::Grevlex;

    fn p(s: VarSpace, src: &str) -> Polynomial {
        parse(src, s, G).unwrap()
    }

    fn ideal(s: VarSpace, gens: &[&str]) -> Ideal {
        Ideal::new(s, G, gens.iter().map(|g| p(s, g)).collect()).unwrap()
    }

    #[test]
    fn certificate_witness() {
        let s = VarSpace::two_row(2).unwrap();
        let cert = is_groebner_basis(&[p(s, "x1^2 - y1"), p(s, "x1*y1")], G).unwrap();
        let w = cert.witness.unwrap();
        assert_eq!((w.i, w.j), (0, 1));
        assert_eq!(w.remainder, p(s, "-y1^2"));
        let ok = is_groebner_basis(&[p(s, "x1^2 - y1"), p(s, "x1*y1"), p(s, "y1^2")], G).unwrap();
        assert!(ok.holds());
        assert_eq!(ok.pairs_checked, 3);
    }

    #[test]
    fn membership_and_equality() {
        let s = VarSpace::new(3).unwrap();
        let i = ideal(s, &["x1*y2 - x2*y1", "x2*y3 - x3*y2"]);
        assert!(i.contains(&p(s, "x2*x1*y3 - x2*x3*y1")).unwrap());
        assert!(!i.contains(&p(s, "x1*y3 - x3*y1")).unwrap());
        assert!(i.equals(&i.clone()).unwrap());
        assert!(!i.is_unit().unwrap());
        assert!(ideal(s, &["x1", "x1 - 1"]).is_unit().unwrap());
    }

    #[test]
    fn squarefree_detection() {
        let s = VarSpace::new(2).unwrap();
        assert!(ideal(s, &["x1*y1", "x2*z1*z2"]).is_squarefree_monomial_ideal().unwrap());
        assert!(!ideal(s, &["x1^2*y1"]).is_squarefree_monomial_ideal().unwrap());
        assert!(ideal(s, &["x1", "x1^2"]).is_squarefree_monomial_ideal().unwrap());
        assert!(!ideal(s, &["x1 + y1"]).is_squarefree_monomial_ideal().unwrap());
    }

    #[test]
    fn minimal_generators_trim() {
        let s = VarSpace::new(2).unwrap();
        let gens = ideal(s, &["x1^2", "x1"]).minimal_generators().unwrap();
        assert_eq!(gens, vec![p(s, "x1")]);
        assert!(ideal(s, &["x1 + 1"]).minimal_generators().is_err());
    }

    #[test]
    fn initial_ideal_of_minors() {
        let s = VarSpace::two_row(3).unwrap();
        let i = ideal(s, &["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"]);
        let init = i.initial_ideal().unwrap();
        let mut lms: Vec<String> = init.gens().iter().map(|g| g.to_string()).collect();
        lms.sort();
        assert_eq!(lms, vec!["x2*y1", "x3*y1", "x3*y2"]);
    }

    #[test]
    fn idempotent_and_order_independent() {
        let s = VarSpace::two_row(3).unwrap();
        let gens = ["x1^2 - x2*y3", "x2^2 - x1*y1", "y1*y2 - x3"];
        let a = ideal(s, &gens);
        let b = ideal(s, &[gens[2], gens[0], gens[1]]);
        let ga = a.groebner_basis().unwrap().to_vec();
        assert_eq!(ga, b.groebner_basis().unwrap());
        let again = Ideal::new(s, G, ga.clone()).unwrap();
        assert_eq!(again.groebner_basis().unwrap(), ga.as_slice());
        assert!(is_groebner_basis(&ga, G).unwrap().holds());
    }
}
