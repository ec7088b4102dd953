mod common;

use common::*;
use detlink::groebner::{buchberger, divide, is_groebner_basis, BuchbergerOptions};
use detlink::ideal_ops::{dimension, intersect, quotient};
use detlink::{coeff, Ideal, Monomial, Polynomial, VarSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn term_order_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let s = VarSpace::new(2).unwrap();
    for _ in 0..500 {
        let p = random_nonzero_poly(&mut rng, s, 6, 3, 5);
        for w in p.terms().windows(2) {
            assert_eq!(grevlex_oracle(w[0].mono.exponents(), w[1].mono.exponents()), std::cmp::Ordering::Greater);
        }
        assert_eq!(p.leading_monomial().unwrap().exponents(), oracle_leading(&p).as_slice());
    }
}

#[test]
fn division_contract_on_random_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s = VarSpace::two_row(3).unwrap();
    for _ in 0..1000 {
        let h = random_poly(&mut rng, s, 8, 3, 9);
        let k = rng.gen_range(1..=3);
        let divs: Vec<Polynomial> = (0..k).map(|_| random_nonzero_poly(&mut rng, s, 3, 2, 5)).collect();
        let r = divide(&h, &divs, G).unwrap();
        let mut rebuilt = r.remainder.clone();
        for (q, d) in r.quotients.iter().zip(&divs) {
            rebuilt = &rebuilt + &(q * d);
        }
        assert_eq!(rebuilt, h);
        let leads: Vec<Vec<u16>> = divs.iter().map(oracle_leading).collect();
        for t in r.remainder.terms() {
            assert!(leads.iter().all(|l| !divides_oracle(l, t.mono.exponents())));
        }
        if !h.is_zero() {
            let lh = oracle_leading(&h);
            for (q, d) in r.quotients.iter().zip(&divs) {
                if !q.is_zero() {
                    let lqd = oracle_leading(&(q * d));
                    assert_ne!(grevlex_oracle(&lqd, &lh), std::cmp::Ordering::Greater);
                }
            }
        }
    }
}

fn random_ideal(rng: &mut impl Rng, s: VarSpace, gens: usize) -> Ideal {
    let gs = (0..gens).map(|_| random_nonzero_poly(rng, s, 2, 2, 3)).collect();
    Ideal::new(s, G, gs).unwrap()
}

fn random_element(rng: &mut impl Rng, i: &Ideal) -> Polynomial {
    let s = i.space();
    i.gens().iter().fold(Polynomial::zero(s, G), |acc, g| &acc + &(&random_poly(rng, s, 2, 1, 3) * g))
}

#[test]
fn intersection_agrees_with_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = VarSpace::two_row(2).unwrap();
    for _ in 0..6 {
        let i = random_ideal(&mut rng, s, 2);
        let j = random_ideal(&mut rng, s, 2);
        let k = intersect(&i, &j).unwrap();
        let mut both = 0;
        for t in 0..50 {
            let p = match t % 4 {
                0 => &random_element(&mut rng, &i) * &random_element(&mut rng, &j),
                1 => random_element(&mut rng, &i),
                2 => random_element(&mut rng, &j),
                _ => random_poly(&mut rng, s, 4, 2, 5),
            };
            let expected = i.contains(&p).unwrap() && j.contains(&p).unwrap();
            both += expected as usize;
            assert_eq!(k.contains(&p).unwrap(), expected, "{p}");
        }
        assert!(both >= 12);
    }
}

#[test]
fn colon_satisfies_its_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let s = VarSpace::two_row(2).unwrap();
    for _ in 0..5 {
        let i = random_ideal(&mut rng, s, 3);
        let j = random_ideal(&mut rng, s, 1);
        let q = quotient(&i, &j).unwrap();
        for g in q.groebner_basis().unwrap() {
            for h in j.gens() {
                assert!(i.contains(&(g * h)).unwrap());
            }
        }
        assert!(q.contains_ideal(&i).unwrap());
    }
}

#[test]
fn monomial_dimension_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for nvars_n in 2..=3 {
        let s = VarSpace::two_row(nvars_n).unwrap();
        let nv = s.nvars();
        for _ in 0..60 {
            let k = rng.gen_range(1..=4);
            let monos: Vec<Monomial> = (0..k)
                .map(|_| loop {
                    let e: Vec<u16> = (0..nv).map(|_| if rng.gen_bool(0.35) { rng.gen_range(1..=2) } else { 0 }).collect();
                    if e.iter().any(|&x| x > 0) {
                        break Monomial::from_exponents(e);
                    }
                })
                .collect();
            let supports: Vec<u64> = monos
                .iter()
                .map(|m| m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |a, (v, _)| a | 1 << v))
                .collect();
            let ideal = Ideal::new(s, G, monos.into_iter().map(|m| Polynomial::from_monomial(s, G, coeff(1), m)).collect())
                .unwrap();
            assert_eq!(dimension(&ideal).unwrap(), brute_dimension(&supports, nv));
        }
    }
}

#[test]
fn buchberger_output_is_certified_and_criteria_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let s = VarSpace::two_row(2).unwrap();
    for _ in 0..20 {
        let gens: Vec<Polynomial> = (0..3).map(|_| random_nonzero_poly(&mut rng, s, 3, 2, 4)).collect();
        let on = buchberger(&gens, G, &BuchbergerOptions::default()).unwrap().0;
        let off = buchberger(&gens, G, &BuchbergerOptions { criteria: false, ..Default::default() }).unwrap().0;
        assert_eq!(on, off);
        assert!(is_groebner_basis(&on, G).unwrap().holds());
        let ideal = Ideal::new(s, G, on.clone()).unwrap();
        for g in &gens {
            assert!(ideal.contains(g).unwrap());
        }
    }
}
