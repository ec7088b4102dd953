//! Buchberger timings on the `𝔞` and `Σ J_i` families.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::families;
use crate::groebner::{buchberger, is_groebner_basis_until, BuchbergerOptions, Budget};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::space::VarSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Buchberger with the product and chain criteria.
    Criteria,
    /// Buchberger reducing every pair.
    NoCriteria,
    /// S-pair check of the known candidate basis.
    Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub family: &'static str,
    pub strategy: Strategy,
    pub status: &'static str,
    pub pairs_created: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub basis_size: usize,
    pub elapsed_ms: u64,
}

/// Family name, generators, and the known Gröbner basis candidate.
type Workload = (&'static str, Vec<Polynomial>, Vec<Polynomial>);

fn families_for(n: usize) -> Result<Vec<Workload>> {
    let space = VarSpace::new(n)?;
    let mut sum_gens = families::gens_a(n)?;
    for i in 1..=n {
        sum_gens.extend(families::m_set(n, i)?.into_iter().map(|m| families::monomial_poly(space, m)));
    }
    Ok(vec![
        ("a", families::gens_a(n)?, families::set_g(n)?),
        ("sum", sum_gens, families::set_g_union_m(n)?),
    ])
}

/// One row per family and strategy for each `n` in `n_min..=n_max`.
/// A row whose computation runs out of budget is marked and kept.
pub fn bench(n_min: usize, n_max: usize, budget: Budget, strategies: &[Strategy]) -> Result<Vec<BenchRow>> {
    let ord = MonomialOrder::Grevlex;
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        for (family, gens, candidate) in families_for(n)? {
            for &strategy in strategies {
                let start = Instant::now();
                let mut row = BenchRow {
                    n,
                    family,
                    strategy,
                    status: "ok",
                    pairs_created: 0,
                    pairs_reduced: 0,
                    zero_reductions: 0,
                    basis_size: 0,
                    elapsed_ms: 0,
                };
                match strategy {
                    Strategy::Criteria | Strategy::NoCriteria => {
                        let opts = BuchbergerOptions { criteria: strategy == Strategy::Criteria, budget };
                        match buchberger(&gens, ord, &opts) {
                            Ok((basis, stats)) => {
                                row.pairs_created = stats.pairs_created;
                                row.pairs_reduced = stats.pairs_reduced;
                                row.zero_reductions = stats.zero_reductions;
                                row.basis_size = basis.len();
                            }
                            Err(e) if e.is_budget() => row.status = "budget-exceeded",
                            Err(e) => return Err(e),
                        }
                    }
                    Strategy::Certificate => match is_groebner_basis_until(&candidate, ord, budget.deadline) {
                        Ok(cert) => {
                            row.pairs_created = cert.pairs_checked;
                            row.pairs_reduced = cert.pairs_checked;
                            row.zero_reductions = if cert.holds() { cert.pairs_checked } else { 0 };
                            row.basis_size = candidate.len();
                            if !cert.holds() {
                                row.status = "not-a-basis";
                            }
                        }
                        Err(e) if e.is_budget() => row.status = "budget-exceeded",
                        Err(e) => return Err(e),
                    },
                }
                row.elapsed_ms = start.elapsed().as_millis() as u64;
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_grow_with_n() {
        let rows = bench(4, 6, Budget::default(), &[Strategy::Criteria]).unwrap();
        assert_eq!(rows.len(), 6);
        let a: Vec<u64> = rows.iter().filter(|r| r.family == "a").map(|r| r.pairs_created).collect();
        assert!(a.windows(2).all(|w| w[0] < w[1]), "{a:?}");
        assert!(rows.iter().all(|r| r.status == "ok"));
    }
}
