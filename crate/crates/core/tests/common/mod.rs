#![allow(dead_code)]

use std::cmp::Ordering;

use detlink::{coeff, Monomial, MonomialOrder, Polynomial, VarSpace};
use rand::Rng;

pub const G: MonomialOrder = MonomialOrder::Grevlex;

/// Grevlex written out directly: higher total degree wins, then the
/// smaller exponent at the last differing position wins.
pub fn grevlex_oracle(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for k in (0..a.len()).rev() {
        if a[k] != b[k] {
            return b[k].cmp(&a[k]);
        }
    }
    Ordering::Equal
}

pub fn oracle_leading(p: &Polynomial) -> Vec<u16> {
    p.terms()
        .iter()
        .map(|t| t.mono.exponents().to_vec())
        .max_by(|a, b| grevlex_oracle(a, b))
        .expect("nonzero")
}

pub fn divides_oracle(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn random_poly(rng: &mut impl Rng, space: VarSpace, max_terms: usize, max_exp: u16, max_coeff: i64) -> Polynomial {
    let nv = space.nvars();
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..k)
        .map(|_| {
            let e: Vec<u16> = (0..nv).map(|_| rng.gen_range(0..=max_exp)).collect();
            (coeff(rng.gen_range(-max_coeff..=max_coeff)), Monomial::from_exponents(e))
        })
        .collect();
    Polynomial::from_terms(space, G, terms)
}

pub fn random_nonzero_poly(rng: &mut impl Rng, space: VarSpace, max_terms: usize, max_exp: u16, max_coeff: i64) -> Polynomial {
    loop {
        let p = random_poly(rng, space, max_terms, max_exp, max_coeff);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Largest set of variables containing no generator support, by trying
/// every subset.
pub fn brute_dimension(supports: &[u64], nvars: usize) -> usize {
    (0u64..1 << nvars)
        .filter(|&u| supports.iter().all(|&s| s & !u != 0))
        .map(|u| u.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
