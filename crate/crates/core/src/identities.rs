//! Both sides of the telescoping and recurrence identities among the
//! `g`-families, and the products that must lie in the chain ideal.

use crate::error::{AlgebraError, Result};
use crate::families::{delta, g, g_1j, g_jn, monomial_poly, xyz};
use crate::poly::Polynomial;
use crate::space::VarSpace;

fn range(a: usize, b: usize) -> std::ops::Range<usize> {
    a..b.saturating_add(1)
}

fn bad(what: &str, n: usize, idx: impl std::fmt::Debug) -> AlgebraError {
    AlgebraError::IndexOutOfRange(format!("{what} {idx:?} for n = {n}"))
}

/// `X_K Y_L Δ_{i,j}` over all `K ⊔ L = [i+1, j−1]`, in the two-row ring.
pub fn chain_products(n: usize, i: usize, j: usize) -> Result<Vec<Polynomial>> {
    if i == 0 || i >= j || j > n {
        return Err(bad("pair", n, (i, j)));
    }
    let space = VarSpace::two_row(n)?;
    let d = delta(space, i, j)?;
    let mid: Vec<usize> = range(i + 1, j - 1).collect();
    Ok((0u64..1 << mid.len())
        .map(|mask| {
            let xs = mid.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &k)| k);
            let ys = mid.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 0).map(|(_, &k)| k);
            d.mul_monomial(&xyz(space, xs, ys, []))
        })
        .collect())
}

/// `X_{[1,j−1]∖{i}} Z_{[1,j−1]} Δ_{j,i}` and `Σ_{k=i}^{j−1} X_{[k+2,j]} Z_{[k+1,j−1]} g_{1,k}`
/// for `1 ≤ i < j ≤ n`.
pub fn prefix_telescope(n: usize, i: usize, j: usize) -> Result<(Polynomial, Polynomial)> {
    if i == 0 || i >= j || j > n {
        return Err(bad("pair", n, (i, j)));
    }
    let space = VarSpace::new(n)?;
    let lhs = delta(space, j, i)?.mul_monomial(&xyz(space, range(1, j - 1).filter(|&k| k != i), [], range(1, j - 1)));
    let mut rhs = Polynomial::zero(space, lhs.order());
    for k in i..j {
        rhs = &rhs + &g_1j(n, k)?.mul_monomial(&xyz(space, range(k + 2, j), [], range(k + 1, j - 1)));
    }
    Ok((lhs, rhs))
}

/// `Y_{[j+1,n]∖{i}} Z_{[j+1,n]} Δ_{i,j}` and `Σ_{k=j+1}^{i} Y_{[j,k−2]} Z_{[j+1,k−1]} g_{k,n}`
/// for `1 ≤ j < i ≤ n`.
pub fn suffix_telescope(n: usize, i: usize, j: usize) -> Result<(Polynomial, Polynomial)> {
    if j == 0 || j >= i || i > n {
        return Err(bad("pair", n, (i, j)));
    }
    let space = VarSpace::new(n)?;
    let lhs = delta(space, i, j)?.mul_monomial(&xyz(space, [], range(j + 1, n).filter(|&k| k != i), range(j + 1, n)));
    let mut rhs = Polynomial::zero(space, lhs.order());
    for k in j + 1..=i {
        rhs = &rhs + &g_jn(n, k)?.mul_monomial(&xyz(space, [], range(j, k - 2), range(j + 1, k - 1)));
    }
    Ok((lhs, rhs))
}

/// `X_{[1,i−1]∪{i+1}} Z_{[1,i]} g_{i+1} − z_{i+1} x_{i+2} g_{1,i}` and `g_{1,i+1}`,
/// for `1 ≤ i ≤ n−2`.
pub fn prefix_recurrence(n: usize, i: usize) -> Result<(Polynomial, Polynomial)> {
    if i == 0 || i + 2 > n {
        return Err(bad("recurrence index", n, i));
    }
    let space = VarSpace::new(n)?;
    let a = g(n, i + 1)?.mul_monomial(&xyz(space, range(1, i - 1).chain([i + 1]), [], range(1, i)));
    let b = g_1j(n, i)?.mul_monomial(&xyz(space, [i + 2], [], [i + 1]));
    Ok((&a - &b, g_1j(n, i + 1)?))
}

/// `Y_{{j−1}∪[j+1,n]} Z_{[j,n]} g_{j−1} − z_{j−1} y_{j−2} g_{j,n}` and `g_{j−1,n}`,
/// for `3 ≤ j ≤ n`.
pub fn suffix_recurrence(n: usize, j: usize) -> Result<(Polynomial, Polynomial)> {
    if j < 3 || j > n {
        return Err(bad("recurrence index", n, j));
    }
    let space = VarSpace::new(n)?;
    let a = g(n, j - 1)?.mul_monomial(&xyz(space, [], [j - 1].into_iter().chain(range(j + 1, n)), range(j, n)));
    let b = g_jn(n, j)?.mul_monomial(&xyz(space, [], [j - 2], [j - 1]));
    Ok((&a - &b, g_jn(n, j - 1)?))
}

/// Every `m · Δ_{a,b}` with `m ∈ M_i` and `a < b`, in `Q[x, y, z]`.
pub fn link_products(n: usize, i: usize) -> Result<Vec<Polynomial>> {
    let space = VarSpace::new(n)?;
    let minors = crate::families::minors(space);
    Ok(crate::families::m_set(n, i)?
        .into_iter()
        .flat_map(|m| {
            let mp = monomial_poly(space, m);
            minors.iter().map(move |d| &mp * d).collect::<Vec<_>>()
        })
        .collect())
}
