//! Column permutations carrying `𝔤'_i = (g'_j : j ≠ i)` onto the chain
//! `(Δ_{t,t+1})`.

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// A permutation of `[1, n]` acting on x- and y-indices simultaneously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexPermutation {
    image: Vec<usize>,
}

impl IndexPermutation {
    /// `image[k − 1]` is the image of `k`.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || seen[v] {
                return Err(AlgebraError::Precondition(format!("{image:?} is not a permutation of [1, {n}]")));
            }
            seen[v] = true;
        }
        Ok(IndexPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        IndexPermutation { image: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn map(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    /// Applies the permutation to `f`: `x_k ↦ x_{σ(k)}`, `y_k ↦ y_{σ(k)}`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let space = f.space();
        if space.n() != self.n() {
            return Err(AlgebraError::Precondition(format!(
                "permutation of width {} applied in a ring with n = {}",
                self.n(),
                space.n()
            )));
        }
        let mut target = (0..space.nvars()).collect::<Vec<_>>();
        for k in 1..=self.n() {
            target[space.x(k)] = space.x(self.map(k));
            target[space.y(k)] = space.y(self.map(k));
        }
        let terms = f.terms().iter().map(|t| {
            let mut exps = vec![0u16; space.nvars()];
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                exps[target[v]] = e;
            }
            (t.coeff.clone(), Monomial::from_exponents(exps))
        });
        Ok(Polynomial::from_terms(space, f.order(), terms))
    }
}

/// The permutation for the family omitting `g_{case_i}`.
pub fn phi_permutation(n: usize, case_i: usize) -> Result<IndexPermutation> {
    if n < 4 {
        return Err(AlgebraError::Precondition(format!("the case families need n >= 4, got {n}")));
    }
    if case_i == 0 || case_i > n {
        return Err(AlgebraError::IndexOutOfRange(format!("case {case_i} for n = {n}")));
    }
    let odd = |j: usize| j % 2 == 1;
    let f = |j: usize| -> usize {
        if case_i == n {
            if odd(n) {
                let m = (n + 1) / 2;
                if odd(j) { m + (j - 1) / 2 } else { m - j / 2 }
            } else {
                let m = n / 2;
                if odd(j) { m - (j - 1) / 2 } else { m + j / 2 }
            }
        } else if case_i == n - 1 {
            if j == n {
                n
            } else if odd(n) {
                let m = (n - 1) / 2;
                if odd(j) { m - (j - 1) / 2 } else { m + j / 2 }
            } else {
                let m = n / 2;
                if odd(j) { m + (j - 1) / 2 } else { m - j / 2 }
            }
        } else if case_i == 1 {
            if odd(j) { 1 + (j - 1) / 2 } else { n + 1 - j / 2 }
        } else if case_i == 2 {
            if j == 1 {
                1
            } else if odd(j) {
                n + 1 - (j - 1) / 2
            } else {
                1 + j / 2
            }
        } else if !odd(case_i) {
            let k = case_i / 2;
            if odd(j) && j < case_i {
                n - k + (j + 1) / 2
            } else if odd(j) {
                (j + 1) / 2 - k
            } else {
                n - k + 1 - j / 2
            }
        } else {
            let k = (case_i - 1) / 2;
            if !odd(j) && j < case_i {
                n - k + j / 2
            } else if !odd(j) {
                j / 2 - k
            } else {
                n - k - (j - 1) / 2
            }
        }
    };
    IndexPermutation::new((1..=n).map(f).collect())
}

/// Images of `g'_j` (`j ≠ case_i`) under the case permutation, made monic.
pub fn family_images(n: usize, case_i: usize) -> Result<Vec<Polynomial>> {
    let phi = phi_permutation(n, case_i)?;
    let space = crate::space::VarSpace::two_row(n)?;
    (1..=n)
        .filter(|&j| j != case_i)
        .map(|j| Ok(phi.apply(&crate::families::g_prime(space, j)?)?.monic()))
        .collect()
}

/// Whether the case images are exactly the chain minors up to sign.
pub fn family_matches_chain(n: usize, case_i: usize) -> Result<bool> {
    let space = crate::space::VarSpace::two_row(n)?;
    let mut got = family_images(n, case_i)?;
    let mut want = (1..n)
        .map(|t| Ok(crate::families::delta(space, t, t + 1)?.monic()))
        .collect::<Result<Vec<_>>>()?;
    let key = |p: &Polynomial| p.to_string();
    got.sort_by_key(key);
    want.sort_by_key(key);
    Ok(got == want)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::delta;
    use crate::space::VarSpace;

    #[test]
    fn documented_permutations() {
        assert_eq!(phi_permutation(5, 5).unwrap().image(), &[3, 2, 4, 1, 5]);
        assert_eq!(phi_permutation(6, 4).unwrap().image(), &[5, 4, 6, 3, 1, 2]);
        assert_eq!(phi_permutation(6, 3).unwrap().image(), &[5, 6, 4, 1, 3, 2]);
        assert_eq!(phi_permutation(5, 3).unwrap().image(), &[4, 5, 3, 1, 2]);
    }

    #[test]
    fn odd_n_last_case_example() {
        let s = VarSpace::two_row(5).unwrap();
        let phi = phi_permutation(5, 5).unwrap();
        assert_eq!(phi.apply(&delta(s, 2, 1).unwrap()).unwrap(), delta(s, 2, 3).unwrap());
        let f = delta(s, 4, 1).unwrap();
        assert_eq!(IndexPermutation::identity(5).apply(&f).unwrap(), f);
    }

    #[test]
    fn every_case_reaches_the_chain() {
        for n in 4..=8 {
            for i in 1..=n {
                assert!(family_matches_chain(n, i).unwrap(), "n = {n}, case {i}");
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(IndexPermutation::new(vec![1, 1, 2]).is_err());
        assert!(IndexPermutation::new(vec![0, 1]).is_err());
        assert!(phi_permutation(3, 1).is_err());
        assert!(phi_permutation(5, 6).is_err());
        let f = delta(VarSpace::two_row(4).unwrap(), 1, 2).unwrap();
        assert!(IndexPermutation::identity(5).apply(&f).is_err());
    }
}
