//! Multivariate division and S-polynomials.

use std::time::Instant;

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{merge_scaled, Coeff, Polynomial, Term};

/// Outcome of [`divide`]: `h = remainder + sum(quotients[i] * divisors[i])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

#[inline]
pub(crate) fn find_divisor(divisors: &[Polynomial], m: &Monomial) -> Option<usize> {
    divisors.iter().position(|g| g.lm().divides(m))
}

fn check_deadline(deadline: Option<Instant>, steps: u64) -> Result<()> {
    if steps.is_multiple_of(64) {
        if let Some(d) = deadline {
            if Instant::now() >= d {
                return Err(AlgebraError::BudgetExceeded {
                    pairs: 0,
                    reason: "deadline reached during reduction".into(),
                });
            }
        }
    }
    Ok(())
}

/// Divides `h` by `divisors`, always using the first divisor whose leading
/// monomial divides the current leading monomial.
pub fn divide(h: &Polynomial, divisors: &[Polynomial], ord: MonomialOrder) -> Result<DivisionResult> {
    for d in divisors {
        h.space().check_same(&d.space())?;
        if d.is_zero() {
            return Err(AlgebraError::ZeroInput("division by a divisor"));
        }
    }
    let space = h.space();
    let divisors: Vec<Polynomial> = divisors.iter().map(|d| d.with_order(ord)).collect();
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p: Vec<Term> = h.with_order(ord).into_terms();
    let mut start = 0;
    while start < p.len() {
        let lt = &p[start];
        match find_divisor(&divisors, &lt.mono) {
            Some(i) => {
                let g = &divisors[i];
                let q = g.lm().quotient_of(&lt.mono).expect("divisor found");
                let c = &lt.coeff / g.lc();
                p = merge_scaled(ord, &p[start + 1..], &-&c, &q, &g.terms()[1..]);
                start = 0;
                quotients[i].push(Term { coeff: c, mono: q });
            }
            None => {
                remainder.push(std::mem::replace(&mut p[start], zero_term()));
                start += 1;
            }
        }
    }
    Ok(DivisionResult {
        quotients: quotients
            .into_iter()
            .map(|ts| Polynomial::from_sorted_terms(space, ord, ts))
            .collect(),
        remainder: Polynomial::from_sorted_terms(space, ord, remainder),
    })
}

fn zero_term() -> Term {
    Term { coeff: Coeff::zero(), mono: Monomial::one(0) }
}

/// Full reduction of `f` modulo `divisors` (which must share `f`'s order
/// and be nonzero). Only the remainder is kept.
pub(crate) fn reduce(f: &Polynomial, divisors: &[Polynomial], deadline: Option<Instant>) -> Result<Polynomial> {
    let ord = f.order();
    let mut remainder = Vec::new();
    let mut p: Vec<Term> = f.terms().to_vec();
    let mut start = 0;
    let mut steps = 0u64;
    while start < p.len() {
        let lt = &p[start];
        match find_divisor(divisors, &lt.mono) {
            Some(i) => {
                steps += 1;
                check_deadline(deadline, steps)?;
                let g = &divisors[i];
                let q = g.lm().quotient_of(&lt.mono).expect("divisor found");
                let c = -(&lt.coeff / g.lc());
                p = merge_scaled(ord, &p[start + 1..], &c, &q, &g.terms()[1..]);
                start = 0;
            }
            None => {
                remainder.push(std::mem::replace(&mut p[start], zero_term()));
                start += 1;
            }
        }
    }
    Ok(Polynomial::from_sorted_terms(f.space(), ord, remainder))
}

/// `S(f, g) = (in(g)/d) f - (in(f)/d) g` with `d` the monic gcd of the
/// leading monomials and `in` including the coefficient.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Result<Polynomial> {
    f.space().check_same(&g.space())?;
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroInput("S-polynomial"));
    }
    let f = f.with_order(ord);
    let g = g.with_order(ord);
    Ok(s_poly_raw(&f, &g))
}

pub(crate) fn s_poly_raw(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let d = f.lm().gcd(g.lm());
    let mf = d.quotient_of(f.lm()).expect("gcd divides");
    let mg = d.quotient_of(g.lm()).expect("gcd divides");
    let a = f.mul_term(g.lc(), &mg);
    // Leading terms cancel exactly.
    let terms = merge_scaled(f.order(), &a.terms()[1..], &-f.lc(), &mf, &g.terms()[1..]);
    Polynomial::from_sorted_terms(f.space(), f.order(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::VarSpace;
    use crate::text::parse;
    use proptest::prelude::*;

    const G: MonomialOrder = MonomialOrder::Grevlex;

    fn p(s: VarSpace, src: &str) -> Polynomial {
        parse(src, s, G).unwrap()
    }

    #[test]
    fn division_examples() {
        let s = VarSpace::new(3).unwrap();
        // in(x1*y2 - x2*y1) = x2*y1, so x1*y2 itself is already reduced
        let d = p(s, "x1*y2 - x2*y1");
        let r = divide(&p(s, "x2*y1"), std::slice::from_ref(&d), G).unwrap();
        assert_eq!(r.quotients[0], p(s, "-1"));
        assert_eq!(r.remainder, p(s, "x1*y2"));
        let r = divide(&p(s, "x1*y2"), &[d], G).unwrap();
        assert!(r.quotients[0].is_zero());
        assert_eq!(r.remainder, p(s, "x1*y2"));

        let f = p(s, "x1*y2*z3 - 4*x3^2 + 1/2");
        assert!(divide(&f, std::slice::from_ref(&f), G).unwrap().remainder.is_zero());

        let h = p(s, "x2*x1*y3 - x2*x3*y1");
        let r = divide(&h, &[p(s, "x1*y2 - x2*y1"), p(s, "x2*y3 - x3*y2")], G).unwrap();
        assert!(r.remainder.is_zero());

        let r = divide(&f, &[], G).unwrap();
        assert_eq!(r.remainder, f);
        assert!(r.quotients.is_empty());
        assert!(divide(&f, &[Polynomial::zero(s, G)], G).is_err());
    }

    #[test]
    fn s_polynomial_examples() {
        // x > y realised as x1 > y1
        let s = VarSpace::two_row(2).unwrap();
        let f = p(s, "x1^2 - y1");
        let g = p(s, "x1*y1");
        assert_eq!(s_polynomial(&f, &g, G).unwrap(), p(s, "-y1^2"));
        assert!(s_polynomial(&f, &f, G).unwrap().is_zero());
        assert!(s_polynomial(&p(s, "3*x1*y2"), &p(s, "x2^2*y2"), G).unwrap().is_zero());
        assert!(s_polynomial(&f, &Polynomial::zero(s, G), G).is_err());
    }

    fn poly_strategy(s: VarSpace, max_terms: usize) -> impl Strategy<Value = Polynomial> {
        let nv = s.nvars();
        prop::collection::vec((-4i64..=4, prop::collection::vec(0u16..3, nv)), 1..=max_terms).prop_map(move |ts| {
            Polynomial::from_terms(s, G, ts.into_iter().map(|(c, e)| (crate::poly::coeff(c), Monomial::from_exponents(e))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn division_invariants(h in poly_strategy(VarSpace::two_row(2).unwrap(), 6),
                               divs in prop::collection::vec(poly_strategy(VarSpace::two_row(2).unwrap(), 3), 0..4)) {
            let divs: Vec<_> = divs.into_iter().filter(|d| !d.is_zero()).collect();
            let r = divide(&h, &divs, G).unwrap();
            // exact reconstruction
            let mut sum = r.remainder.clone();
            for (q, d) in r.quotients.iter().zip(&divs) {
                sum = &sum + &(q * d);
            }
            prop_assert_eq!(&sum, &h);
            // remainder terms are irreducible
            for t in r.remainder.terms() {
                prop_assert!(divs.iter().all(|d| !d.lm().divides(&t.mono)));
            }
            // degree condition
            for (q, d) in r.quotients.iter().zip(&divs) {
                if !q.is_zero() {
                    let qd = q * d;
                    prop_assert_ne!(G.cmp(qd.lm(), h.lm()), std::cmp::Ordering::Greater);
                }
            }
            // full reduction agrees with the division remainder
            prop_assert_eq!(reduce(&h, &divs, None).unwrap(), r.remainder);
        }
    }
}
