//! Buchberger's algorithm with the Gebauer–Möller pair update.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use smallvec::SmallVec;

use super::division::{reduce, s_poly_raw};
use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Resource limits for a single Gröbner computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: u64,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 1_000_000, deadline: None }
    }
}

impl Budget {
    pub fn with_max_pairs(self, max_pairs: u64) -> Self {
        Budget { max_pairs, ..self }
    }

    pub fn with_deadline(self, deadline: Option<Instant>) -> Self {
        Budget { deadline, ..self }
    }

    pub fn timed_out(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BuchbergerStats {
    pub pairs_created: u64,
    pub pairs_discarded: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Apply the product and chain criteria.
    pub criteria: bool,
    pub budget: Budget,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { criteria: true, budget: Budget::default() }
    }
}

type SortKey = SmallVec<[i32; 32]>;

/// A key whose lexicographic order agrees with `ord` on monomials.
fn sort_key(ord: MonomialOrder, m: &Monomial) -> SortKey {
    fn push_grevlex(key: &mut SortKey, e: &[u16]) {
        key.push(e.iter().map(|&v| v as i32).sum());
        key.extend(e.iter().rev().map(|&v| -(v as i32)));
    }
    let mut key = SortKey::new();
    match ord {
        MonomialOrder::Grevlex => push_grevlex(&mut key, m.exponents()),
        MonomialOrder::ElimBlock { block } => {
            let (h, t) = m.exponents().split_at(block);
            push_grevlex(&mut key, h);
            push_grevlex(&mut key, t);
        }
    }
    key
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    key: SortKey,
    i: usize,
    j: usize,
}

struct State {
    ord: MonomialOrder,
    criteria: bool,
    polys: Vec<Polynomial>,
    /// Indices of polys whose leading monomial is not divisible by a later one.
    basis: Vec<usize>,
    divisors: Vec<Polynomial>,
    pairs: BTreeSet<Pair>,
    lcms: std::collections::HashMap<(usize, usize), Monomial>,
    stats: BuchbergerStats,
}

impl State {
    fn lcm(&self, i: usize, j: usize) -> Monomial {
        self.polys[i].lm().lcm(self.polys[j].lm())
    }

    fn new_pair(&mut self, i: usize, j: usize) -> Pair {
        let (i, j) = (i.min(j), i.max(j));
        let l = self.lcm(i, j);
        let key = sort_key(self.ord, &l);
        self.lcms.insert((i, j), l);
        Pair { key, i, j }
    }

    /// Adds `polys[h]` to the basis, updating the pair set.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        if !self.criteria {
            for &g in &self.basis.clone() {
                let p = self.new_pair(g, h);
                self.pairs.insert(p);
                self.stats.pairs_created += 1;
            }
            self.basis.push(h);
            self.divisors.push(self.polys[h].clone());
            return;
        }
        let candidates: Vec<usize> = self.basis.clone();
        self.stats.pairs_created += candidates.len() as u64;
        let lcm_with: Vec<Monomial> = candidates.iter().map(|&g| lm_h.lcm(self.polys[g].lm())).collect();
        let coprime: Vec<bool> = candidates.iter().map(|&g| lm_h.is_coprime(self.polys[g].lm())).collect();

        // Gebauer–Möller: a new pair survives the first pass if it is
        // coprime or no other pending or surviving pair's lcm divides its lcm.
        let mut pending: Vec<usize> = (0..candidates.len()).collect();
        let mut survivors: Vec<usize> = Vec::new();
        while let Some(a) = pending.pop() {
            let divided = pending.iter().chain(&survivors).any(|&b| lcm_with[b].divides(&lcm_with[a]));
            if coprime[a] || !divided {
                survivors.push(a);
            }
        }
        let mut keep = vec![false; candidates.len()];
        for a in survivors {
            keep[a] = !coprime[a];
        }
        // Chain criterion on old pairs.
        let before = self.pairs.len();
        let lcms = &self.lcms;
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let l = &lcms[&(p.i, p.j)];
            if !lm_h.divides(l) {
                return true;
            }
            let li = lm_h.lcm(polys[p.i].lm());
            let lj = lm_h.lcm(polys[p.j].lm());
            li == *l || lj == *l
        });
        self.stats.pairs_discarded += (before - self.pairs.len()) as u64;
        for (a, &g) in candidates.iter().enumerate() {
            if keep[a] {
                let p = self.new_pair(g, h);
                self.pairs.insert(p);
            } else {
                self.stats.pairs_discarded += 1;
            }
        }
        let polys = &self.polys;
        self.basis.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.basis.push(h);
        self.divisors = self.basis.iter().map(|&i| self.polys[i].clone()).collect();
    }
}

fn check_budget(budget: &Budget, stats: &BuchbergerStats) -> Result<()> {
    if stats.pairs_reduced >= budget.max_pairs {
        return Err(AlgebraError::BudgetExceeded {
            pairs: stats.pairs_reduced,
            reason: format!("pair limit {} reached", budget.max_pairs),
        });
    }
    if budget.timed_out() {
        return Err(AlgebraError::BudgetExceeded { pairs: stats.pairs_reduced, reason: "deadline reached".into() });
    }
    Ok(())
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`
/// under `ord`: monic, interreduced, sorted by descending leading monomial.
pub fn buchberger(
    gens: &[Polynomial],
    ord: MonomialOrder,
    opts: &BuchbergerOptions,
) -> Result<(Vec<Polynomial>, BuchbergerStats)> {
    let Some(first) = gens.first() else {
        return Ok((Vec::new(), BuchbergerStats::default()));
    };
    let space = first.space();
    for g in gens {
        space.check_same(&g.space())?;
    }
    let deadline = opts.budget.deadline;
    let mut st = State {
        ord,
        criteria: opts.criteria,
        polys: Vec::new(),
        basis: Vec::new(),
        divisors: Vec::new(),
        pairs: BTreeSet::new(),
        lcms: Default::default(),
        stats: BuchbergerStats::default(),
    };

    // Seed with the inputs, each reduced against those already present.
    let mut inputs: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(ord).monic()).collect();
    inputs.sort_by(|a, b| ord.cmp(a.lm(), b.lm()).then_with(|| a.len().cmp(&b.len())));
    for f in inputs {
        let r = reduce(&f, &st.divisors, deadline)?;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok((vec![Polynomial::one(space, ord)], st.stats));
        }
        st.polys.push(r.monic());
        let h = st.polys.len() - 1;
        st.update(h);
    }

    while let Some(pair) = st.pairs.pop_first() {
        check_budget(&opts.budget, &st.stats)?;
        st.stats.pairs_reduced += 1;
        let s = s_poly_raw(&st.polys[pair.i], &st.polys[pair.j]);
        let r = reduce(&s, &st.divisors, deadline)?;
        if r.is_zero() {
            st.stats.zero_reductions += 1;
            continue;
        }
        if r.is_constant() {
            return Ok((vec![Polynomial::one(space, ord)], st.stats));
        }
        st.polys.push(r.monic());
        let h = st.polys.len() - 1;
        st.update(h);
    }

    Ok((interreduce(st.divisors, deadline)?, st.stats))
}

/// Turns a Gröbner basis into the reduced one.
pub(crate) fn interreduce(mut basis: Vec<Polynomial>, deadline: Option<Instant>) -> Result<Vec<Polynomial>> {
    let Some(first) = basis.first() else {
        return Ok(basis);
    };
    let ord = first.order();
    basis.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    // Drop elements whose leading monomial is divisible by another's.
    let mut minimal: Vec<Polynomial> = Vec::with_capacity(basis.len());
    for g in basis {
        if !minimal.iter().any(|m| m.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, g)| g.clone()).collect();
        let g = &minimal[k];
        let head = Polynomial::from_sorted_terms(g.space(), ord, vec![g.terms()[0].clone()]);
        let tail = Polynomial::from_sorted_terms(g.space(), ord, g.terms()[1..].to_vec());
        let tail = reduce(&tail, &others, deadline)?;
        out.push((&head + &tail).monic());
    }
    out.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::VarSpace;
    use crate::text::parse;

    const G: MonomialOrder = MonomialOrder::Grevlex;

    fn p(s: VarSpace, src: &str) -> Polynomial {
        parse(src, s, G).unwrap()
    }

    #[test]
    fn sort_key_agrees_with_order() {
        let ms = [[1u16, 0, 2, 0], [0, 1, 1, 1], [2, 1, 0, 0], [0, 0, 0, 3], [1, 1, 1, 0]];
        for ord in [G, MonomialOrder::ElimBlock { block: 1 }, MonomialOrder::ElimBlock { block: 2 }] {
            for a in &ms {
                for b in &ms {
                    let (a, b) = (Monomial::from_exponents(*a), Monomial::from_exponents(*b));
                    assert_eq!(sort_key(ord, &a).cmp(&sort_key(ord, &b)), ord.cmp(&a, &b));
                }
            }
        }
    }

    #[test]
    fn hand_example() {
        let s = VarSpace::two_row(2).unwrap();
        let (gb, _) = buchberger(&[p(s, "x1^2 - y1"), p(s, "x1*y1")], G, &Default::default()).unwrap();
        let mut expected = vec![p(s, "x1^2 - y1"), p(s, "x1*y1"), p(s, "y1^2")];
        expected.sort_by(|a, b| G.cmp(b.lm(), a.lm()));
        assert_eq!(gb, expected);
    }

    #[test]
    fn principal_ideal_is_monic_generator() {
        let s = VarSpace::new(2).unwrap();
        let f = p(s, "3*x1*y2 - 6*z1^2 + 9");
        let (gb, _) = buchberger(std::slice::from_ref(&f), G, &Default::default()).unwrap();
        assert_eq!(gb, vec![f.monic()]);
    }

    #[test]
    fn unit_ideal_collapses() {
        let s = VarSpace::two_row(2).unwrap();
        let (gb, _) = buchberger(&[p(s, "x1"), p(s, "x1 + 1")], G, &Default::default()).unwrap();
        assert_eq!(gb, vec![p(s, "1")]);
    }

    #[test]
    fn budget_is_enforced() {
        let s = VarSpace::two_row(3).unwrap();
        let gens = [p(s, "x1^2 - y1*x2"), p(s, "x2^2 - y2*x3"), p(s, "x3^2 - y3*x1"), p(s, "x1*y2 - y3^2")];
        let opts = BuchbergerOptions { criteria: true, budget: Budget::default().with_max_pairs(1) };
        let err = buchberger(&gens, G, &opts).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn criteria_do_not_change_the_result() {
        let s = VarSpace::two_row(3).unwrap();
        let gens = [p(s, "x1*y2 - x2*y1"), p(s, "x1*y3 - x3*y1"), p(s, "x2*y3 - x3*y2"), p(s, "x1^2 - y3")];
        let with = buchberger(&gens, G, &Default::default()).unwrap();
        let without = buchberger(&gens, G, &BuchbergerOptions { criteria: false, ..Default::default() }).unwrap();
        assert_eq!(with.0, without.0);
        assert!(with.1.pairs_reduced <= without.1.pairs_reduced);
    }
}
