//! Intersections, colon ideals, dimension and minimal primes.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::groebner::{divide, reduce_basis, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{coeff, Polynomial};

fn check_pair(i: &Ideal, j: &Ideal) -> Result<()> {
    i.space().check_same(&j.space())?;
    if i.order() != j.order() {
        return Err(AlgebraError::OrderMismatch);
    }
    Ok(())
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_pair(i, j)?;
    let space = i.space();
    let order = i.order();
    if space.elim_count() > 0 {
        return Err(AlgebraError::Precondition("intersection of ideals that already use elimination variables".into()));
    }
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(space, order).with_budget(i.budget()));
    }
    let elim = MonomialOrder::ElimBlock { block: 1 };
    let ext = space.with_extra_elim(1);
    let t = Polynomial::from_monomial(ext, elim, coeff(1), Monomial::var(ext.nvars(), 0));
    let one_minus_t = &Polynomial::one(ext, elim) - &t;
    let mut gens = Vec::with_capacity(i.gens().len() + j.gens().len());
    for f in i.gens() {
        gens.push(&t * &f.embed_with_elim(1, elim));
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.embed_with_elim(1, elim));
    }
    let big = Ideal::new(ext, elim, gens)?.with_budget(i.budget());
    let mut kept = Vec::new();
    for g in big.groebner_basis()? {
        if !g.involves_elim() {
            kept.push(g.strip_elim(order)?);
        }
    }
    if order == MonomialOrder::Grevlex {
        // The t-free part of the reduced basis is the reduced basis of I ∩ J.
        Ok(Ideal::from_reduced_basis(space, order, kept, i.budget()))
    } else {
        Ok(Ideal::new(space, order, kept)?.with_budget(i.budget()))
    }
}

/// `I : f`, computed as `(I ∩ (f)) / f`.
pub fn quotient_by_poly(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    i.space().check_same(&f.space())?;
    if f.is_zero() {
        return Err(AlgebraError::ZeroInput("colon by a polynomial"));
    }
    let f = f.with_order(i.order());
    let principal = Ideal::principal(&f).with_budget(i.budget());
    let cap = intersect(i, &principal)?;
    let mut quotients = Vec::with_capacity(cap.gens().len());
    for g in cap.gens() {
        let d = divide(g, std::slice::from_ref(&f), i.order())?;
        if !d.remainder.is_zero() {
            return Err(AlgebraError::InexactDivision(format!("{g} by {f}")));
        }
        quotients.push(d.quotients.into_iter().next().expect("one divisor"));
    }
    // Dividing a Gröbner basis of f·K by f gives a Gröbner basis of K.
    let basis: Vec<Polynomial> = quotients.into_iter().map(|q| q.monic()).collect();
    if i.order() == MonomialOrder::Grevlex && cap.is_basis_cached() {
        let reduced = reduce_basis(basis)?;
        return Ok(Ideal::from_reduced_basis(i.space(), i.order(), reduced, i.budget()));
    }
    Ok(Ideal::new(i.space(), i.order(), basis)?.with_budget(i.budget()))
}

/// `I : J = ∩_g (I : g)` over the generators of `J`.
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_pair(i, j)?;
    if j.is_zero() {
        return Ok(Ideal::unit(i.space(), i.order()).with_budget(i.budget()));
    }
    let parts: Vec<Ideal> = j.gens().par_iter().map(|g| quotient_by_poly(i, g)).collect::<Result<_>>()?;
    let mut parts = parts.into_iter();
    let mut acc = parts.next().expect("nonzero J");
    for p in parts {
        acc = intersect(&acc, &p)?;
    }
    Ok(acc)
}

pub fn sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_pair(i, j)?;
    let gens = i.gens().iter().chain(j.gens()).cloned().collect();
    Ok(Ideal::new(i.space(), i.order(), gens)?.with_budget(i.budget()))
}

pub fn product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_pair(i, j)?;
    let gens = i.gens().iter().flat_map(|f| j.gens().iter().map(move |g| f * g)).collect();
    Ok(Ideal::new(i.space(), i.order(), gens)?.with_budget(i.budget()))
}

/// Smallest set of variables meeting every support, by branching on the
/// smallest unhit support.
fn min_hitting_set(supports: &[u64]) -> u32 {
    fn go(supports: &[u64], chosen: u64, size: u32, best: &mut u32) {
        if size >= *best {
            return;
        }
        let unhit = supports.iter().filter(|&&s| s & chosen == 0).min_by_key(|s| s.count_ones());
        match unhit {
            None => *best = size,
            Some(&s) => {
                let mut rest = s;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    go(supports, chosen | bit, size + 1, best);
                }
            }
        }
    }
    let mut best = u32::MAX;
    go(supports, 0, 0, &mut best);
    best
}

fn support_mask(m: &Monomial) -> Result<u64> {
    if m.nvars() > 64 {
        return Err(AlgebraError::Precondition("more than 64 variables".into()));
    }
    Ok(m.support().fold(0u64, |acc, v| acc | (1u64 << v)))
}

/// Krull dimension, read off the initial ideal.
pub fn dimension(i: &Ideal) -> Result<usize> {
    let nvars = i.space().nvars();
    if i.is_zero() {
        return Ok(nvars);
    }
    let init = i.initial_ideal()?;
    let mut supports = Vec::with_capacity(init.gens().len());
    for g in init.gens() {
        let m = g.leading_monomial()?;
        if m.is_one() {
            return Err(AlgebraError::ImproperIdeal);
        }
        supports.push(support_mask(m)?);
    }
    Ok(nvars - min_hitting_set(&supports) as usize)
}

/// `nvars − dimension` over the full ambient ring.
pub fn height(i: &Ideal) -> Result<usize> {
    Ok(i.space().nvars() - dimension(i)?)
}

/// Minimal primes of a squarefree monomial ideal, as sorted sets of
/// variable indices (the minimal vertex covers of the supports).
pub fn minimal_primes_squarefree(i: &Ideal) -> Result<Vec<Vec<usize>>> {
    let monos: Vec<Monomial> = match i.monomial_generators() {
        Some(ms) => ms,
        None => {
            let gb = i.groebner_basis()?;
            if !gb.iter().all(|g| g.is_monomial()) {
                return Err(AlgebraError::NotSquarefreeMonomial);
            }
            gb.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
        }
    };
    if !monos.iter().all(|m| m.is_squarefree()) {
        return Err(AlgebraError::NotSquarefreeMonomial);
    }
    if monos.iter().any(|m| m.is_one()) {
        return Err(AlgebraError::ImproperIdeal);
    }
    let supports: Vec<u64> = monos.iter().map(support_mask).collect::<Result<_>>()?;

    fn covers(supports: &[u64], chosen: u64, out: &mut BTreeSet<u64>) {
        match supports.iter().find(|&&s| s & chosen == 0) {
            None => {
                out.insert(chosen);
            }
            Some(&s) => {
                let mut rest = s;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    covers(supports, chosen | bit, out);
                }
            }
        }
    }
    let mut all = BTreeSet::new();
    covers(&supports, 0, &mut all);
    let minimal: Vec<u64> = all
        .iter()
        .copied()
        .filter(|&c| !all.iter().any(|&d| d != c && d & c == d))
        .collect();
    let mut out: Vec<Vec<usize>> =
        minimal.into_iter().map(|c| (0..64).filter(|b| c >> b & 1 == 1).collect()).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::VarSpace;
    use crate::text::parse;

    const G: MonomialOrder = MonomialOrder::Grevlex;

    fn ideal(s: VarSpace, gens: &[&str]) -> Ideal {
        Ideal::new(s, G, gens.iter().map(|g| parse(g, s, G).unwrap()).collect()).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let s = VarSpace::new(2).unwrap();
        let k = intersect(&ideal(s, &["x1"]), &ideal(s, &["y1"])).unwrap();
        assert!(k.equals(&ideal(s, &["x1*y1"])).unwrap());
        let k = intersect(&ideal(s, &["x1^2"]), &ideal(s, &["x1*y1"])).unwrap();
        assert!(k.equals(&ideal(s, &["x1^2*y1"])).unwrap());
        let i = ideal(s, &["x1*y2 - x2*y1", "z1^2"]);
        assert!(intersect(&i, &i).unwrap().equals(&i).unwrap());
        let e = Ideal::new(s.with_extra_elim(1), G, vec![]).unwrap();
        assert!(intersect(&e, &e).is_err());
    }

    #[test]
    fn quotient_examples() {
        let s = VarSpace::new(2).unwrap();
        let q = quotient(&ideal(s, &["x1^2", "x1*y1"]), &ideal(s, &["x1"])).unwrap();
        assert!(q.equals(&ideal(s, &["x1", "y1"])).unwrap());
        let i = ideal(s, &["x1*y2 - x2*y1", "z1*x1"]);
        assert!(quotient(&i, &ideal(s, &["1"])).unwrap().equals(&i).unwrap());
        assert!(quotient_by_poly(&i, &Polynomial::zero(s, G)).is_err());
    }

    #[test]
    fn sums_products_heights() {
        let s = VarSpace::new(2).unwrap();
        let i = ideal(s, &["x1", "y1"]);
        assert_eq!(height(&i).unwrap(), 2);
        assert!(sum(&i, &Ideal::zero(s, G)).unwrap().equals(&i).unwrap());
        let p = product(&ideal(s, &["x1"]), &ideal(s, &["y1"])).unwrap();
        assert_eq!(p.gens(), ideal(s, &["x1*y1"]).gens());
        assert_eq!(height(&Ideal::zero(s, G)).unwrap(), 0);
        assert_eq!(height(&ideal(s, &["x1*y2 - x2*y1"])).unwrap(), 1);
        assert!(matches!(height(&ideal(s, &["x1", "x1 - 1"])), Err(AlgebraError::ImproperIdeal)));
    }

    #[test]
    fn minimal_primes_examples() {
        let s = VarSpace::new(3).unwrap();
        let (x1, x2, x3, y1) = (s.x(1), s.x(2), s.x(3), s.y(1));
        assert_eq!(minimal_primes_squarefree(&ideal(s, &["x1*y1"])).unwrap(), vec![vec![x1], vec![y1]]);
        let mut got = minimal_primes_squarefree(&ideal(s, &["x1*x2", "x2*x3"])).unwrap();
        got.sort();
        let mut want = vec![vec![x2], vec![x1, x3]];
        want.sort();
        assert_eq!(got, want);
        assert!(matches!(
            minimal_primes_squarefree(&ideal(s, &["x1^2"])),
            Err(AlgebraError::NotSquarefreeMonomial)
        ));
        assert!(minimal_primes_squarefree(&ideal(s, &["x1 + y1"])).is_err());
    }
}
