mod common;

use common::G;
use detlink::families::chain_ideal;
use detlink::groebner::{divide, s_polynomial};
use detlink::identities::*;
use detlink::verify::random_qualifying_pair;
use detlink::VarSpace;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn chain_products_lie_in_the_chain_ideal() {
    for n in 4..=6 {
        let chain = chain_ideal(n).unwrap();
        for i in 1..=n {
            for j in i + 1..=n {
                let ps = chain_products(n, i, j).unwrap();
                assert_eq!(ps.len(), 1 << (j - i - 1));
                for p in ps {
                    assert!(chain.contains(&p).unwrap(), "n={n} ({i},{j}) {p}");
                }
            }
        }
    }
}

#[test]
fn telescoping_sums_hold_up_to_seven() {
    for n in 4..=7 {
        for i in 1..=n {
            for j in i + 1..=n {
                let (l, r) = prefix_telescope(n, i, j).unwrap();
                assert_eq!(l, r);
                let (l, r) = suffix_telescope(n, j, i).unwrap();
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn recurrences_hold_up_to_seven() {
    for n in 4..=7 {
        for i in 1..=n - 2 {
            let (l, r) = prefix_recurrence(n, i).unwrap();
            assert_eq!(l, r);
        }
        for j in 3..=n {
            let (l, r) = suffix_recurrence(n, j).unwrap();
            assert_eq!(l, r);
        }
    }
}

#[test]
fn binomial_pairs_with_shared_gcd_reduce_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let s = VarSpace::two_row(3).unwrap();
    for _ in 0..500 {
        let (f, g) = random_qualifying_pair(&mut rng, s);
        let d = f.leading_monomial().unwrap().gcd(g.leading_monomial().unwrap());
        assert!(d.divides(&f.terms()[1].mono) && d.divides(&g.terms()[1].mono));
        let sp = s_polynomial(&f, &g, G).unwrap();
        assert!(divide(&sp, &[f, g], G).unwrap().remainder.is_zero());
    }
}

#[test]
fn rejects_invalid_ranges() {
    assert!(prefix_telescope(4, 3, 2).is_err());
    assert!(suffix_telescope(4, 2, 3).is_err());
    assert!(chain_products(4, 0, 2).is_err());
}
