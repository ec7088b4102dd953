mod common;

use common::G;
use detlink::automorphism::{family_images, phi_permutation};
use detlink::families::*;
use detlink::ideal_ops::{height, quotient};
use detlink::{Ideal, Polynomial, VarSpace};

fn p(s: VarSpace, src: &str) -> Polynomial {
    Polynomial::parse(src, s, G).unwrap()
}

#[test]
fn minors_ideal_shape() {
    let s4 = VarSpace::two_row(4).unwrap();
    assert_eq!(minors_ideal(s4).gens().len(), 6);
    assert_eq!(height(&minors_ideal(s4)).unwrap(), 3);
    let s5 = VarSpace::two_row(5).unwrap();
    assert_eq!(minors_ideal(s5).minimal_generators().unwrap().len(), 10);
}

#[test]
fn a_lies_in_the_minors() {
    for n in 4..=6 {
        let i = minors_ideal(VarSpace::new(n).unwrap());
        for g in gens_a(n).unwrap() {
            assert!(i.contains(&g).unwrap());
        }
        for k in 1..=n {
            assert_eq!(sub_a(n, k).unwrap().gens().len(), n - 1);
        }
    }
}

#[test]
fn m_monomials_are_squarefree_and_inside_their_sets() {
    for n in 4..=6 {
        for i in 1..=n {
            let set = m_set(n, i).unwrap();
            assert!(set.iter().all(|m| m.is_squarefree()));
            let js: Vec<usize> = if i == 1 {
                (3..=n + 1).collect()
            } else if i == n {
                (1..n).collect()
            } else {
                (1..=n + 1).collect()
            };
            for j in js {
                assert!(set.contains(&m_ij(n, i, j).unwrap()), "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn g_family_coincidences() {
    for n in 4..=7 {
        assert_eq!(g_1j(n, 1).unwrap(), g(n, 1).unwrap());
        assert_eq!(g_jn(n, n).unwrap(), g(n, n).unwrap());
        let a = ideal_a(n).unwrap();
        for f in set_g(n).unwrap() {
            assert!(a.contains(&f).unwrap());
        }
    }
    let s = VarSpace::new(4).unwrap();
    assert_eq!(g_jn(4, 3).unwrap(), p(s, "y4*z3*z4*x3*y2 - y4*z3*z4*x2*y3"));
}

#[test]
fn chain_link_colon_at_small_n() {
    for n in 4..=5 {
        let (chain, link) = chain_link(n).unwrap();
        let q = quotient(&chain, &minors_ideal(chain.space())).unwrap();
        assert!(q.equals(&link).unwrap());
    }
}

#[test]
fn links_match_candidates_at_four() {
    let s = VarSpace::new(4).unwrap();
    let i = minors_ideal(s);
    for k in 1..=4 {
        let q = quotient(&sub_a(4, k).unwrap(), &i).unwrap();
        assert!(q.equals(&link_candidate(4, k).unwrap()).unwrap(), "i = {k}");
    }
}

#[test]
fn last_link_needs_the_longer_z_range() {
    // with Z_{[1,n-2]} the monomials would not lie in the link
    let n = 4;
    let s = VarSpace::new(n).unwrap();
    let q = quotient(&sub_a(n, n).unwrap(), &minors_ideal(s)).unwrap();
    let short = xyz(s, [1], [2], [1, 2]);
    assert!(!q.contains(&monomial_poly(s, short)).unwrap());
    assert!(q.contains(&monomial_poly(s, m_ij(n, n, 2).unwrap())).unwrap());
}

#[test]
fn automorphism_examples() {
    let s = VarSpace::two_row(5).unwrap();
    let phi = phi_permutation(5, 5).unwrap();
    assert_eq!(phi.image(), &[3, 2, 4, 1, 5]);
    assert_eq!(phi.apply(&delta(s, 2, 1).unwrap()).unwrap(), delta(s, 2, 3).unwrap());
    let s4 = VarSpace::two_row(4).unwrap();
    let mut got: Vec<String> = family_images(4, 1).unwrap().iter().map(|f| f.to_string()).collect();
    let mut want: Vec<String> = (1..4).map(|t| delta(s4, t, t + 1).unwrap().monic().to_string()).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn z_free_sub_ideals_have_height_n_minus_one() {
    for n in 4..=6 {
        let s = VarSpace::two_row(n).unwrap();
        for i in 1..=n {
            let gens = (1..=n).filter(|&j| j != i).map(|j| g_prime(s, j).unwrap()).collect();
            assert_eq!(height(&Ideal::new(s, G, gens).unwrap()).unwrap(), n - 1, "n={n} i={i}");
        }
    }
}

#[test]
fn chain_heights() {
    for n in 4..=6 {
        assert_eq!(height(&chain_ideal(n).unwrap()).unwrap(), n - 1);
    }
}
