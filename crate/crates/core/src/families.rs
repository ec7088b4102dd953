//! Constructors for the minors, the chain link, the `g`/`m` families and
//! the generic residual setup.
//!
//! All constructors use grevlex. Ideals store monic generators, so the
//! sign of a minor inside an ideal is immaterial.

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{coeff, Coeff, Polynomial, Substitution};
use crate::space::{Var, VarSpace};

const ORD: MonomialOrder = MonomialOrder::Grevlex;

fn require_n_at_least_4(n: usize) -> Result<()> {
    if n < 4 {
        return Err(AlgebraError::Precondition(format!("the constructions need n >= 4, got {n}")));
    }
    Ok(())
}

fn out_of_range(what: &str, n: usize, idx: impl std::fmt::Debug) -> AlgebraError {
    AlgebraError::IndexOutOfRange(format!("{what} {idx:?} for n = {n}"))
}

/// Squarefree `X_xs * Y_ys * Z_zs` in `space`.
pub fn xyz(
    space: VarSpace,
    xs: impl IntoIterator<Item = usize>,
    ys: impl IntoIterator<Item = usize>,
    zs: impl IntoIterator<Item = usize>,
) -> Monomial {
    let vars = xs
        .into_iter()
        .map(|i| space.x(i))
        .chain(ys.into_iter().map(|i| space.y(i)))
        .chain(zs.into_iter().map(|i| space.z(i)))
        .collect::<Vec<_>>();
    Monomial::squarefree(space.nvars(), vars)
}

/// The integers in `[a, b]` (empty when `a > b`).
fn range(a: usize, b: usize) -> impl Iterator<Item = usize> + Clone {
    a..b.saturating_add(1)
}

pub fn monomial_poly(space: VarSpace, m: Monomial) -> Polynomial {
    Polynomial::from_monomial(space, ORD, coeff(1), m)
}

/// `Δ_{i,j} = x_i y_j − x_j y_i`, zero when `i = j`.
pub fn delta(space: VarSpace, i: usize, j: usize) -> Result<Polynomial> {
    let n = space.n();
    if i == 0 || j == 0 || i > n || j > n {
        return Err(out_of_range("minor", n, (i, j)));
    }
    if i == j {
        return Ok(Polynomial::zero(space, ORD));
    }
    let nv = space.nvars();
    Ok(Polynomial::from_terms(
        space,
        ORD,
        [
            (coeff(1), Monomial::squarefree(nv, [space.x(i), space.y(j)])),
            (coeff(-1), Monomial::squarefree(nv, [space.x(j), space.y(i)])),
        ],
    ))
}

/// All minors `Δ_{i,j}`, `i < j`, in lexicographic order of `(i, j)`.
pub fn minors(space: VarSpace) -> Vec<Polynomial> {
    let n = space.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| delta(space, i, j).expect("in range"))
        .collect()
}

/// `I = I_2(M)`.
pub fn minors_ideal(space: VarSpace) -> Ideal {
    Ideal::new(space, ORD, minors(space)).expect("same space")
}

/// The index pair of `g'_i`: `(2,1)`, `(i+1, i−1)` or `(n, n−1)`.
pub fn g_prime_indices(n: usize, i: usize) -> Result<(usize, usize)> {
    match i {
        1 => Ok((2, 1)),
        _ if i == n => Ok((n, n - 1)),
        _ if i >= 2 && i < n => Ok((i + 1, i - 1)),
        _ => Err(out_of_range("generator", n, i)),
    }
}

/// `g'_i`, the minor underlying `g_i`.
pub fn g_prime(space: VarSpace, i: usize) -> Result<Polynomial> {
    let (a, b) = g_prime_indices(space.n(), i)?;
    delta(space, a, b)
}

/// `g_i = z_i g'_i` in `Q[x, y, z]`.
pub fn g(n: usize, i: usize) -> Result<Polynomial> {
    require_n_at_least_4(n)?;
    let space = VarSpace::new(n)?;
    let zi = xyz(space, [], [], [i.max(1).min(n)]);
    Ok(g_prime(space, i)?.mul_monomial(&zi))
}

pub fn gens_a(n: usize) -> Result<Vec<Polynomial>> {
    (1..=n).map(|i| g(n, i)).collect()
}

/// `𝔞 = (g_1, …, g_n)`.
pub fn ideal_a(n: usize) -> Result<Ideal> {
    Ideal::new(VarSpace::new(n)?, ORD, gens_a(n)?)
}

/// `𝔞_i`, omitting `g_i`.
pub fn sub_a(n: usize, i: usize) -> Result<Ideal> {
    require_n_at_least_4(n)?;
    if i == 0 || i > n {
        return Err(out_of_range("omitted generator", n, i));
    }
    let gens = (1..=n).filter(|&k| k != i).map(|k| g(n, k)).collect::<Result<Vec<_>>>()?;
    Ideal::new(VarSpace::new(n)?, ORD, gens)
}

/// The index set partitioned into `K ⊔ L` for `M_i`, and the z-support.
fn m_shape(n: usize, i: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    require_n_at_least_4(n)?;
    if i == 1 {
        Ok((range(3, n).collect(), range(2, n).collect()))
    } else if i == n {
        Ok((range(1, n - 2).collect(), range(1, n - 1).collect()))
    } else if i >= 2 && i < n {
        Ok((
            range(1, n).filter(|&k| k != i - 1 && k != i + 1).collect(),
            range(1, n).filter(|&k| k != i).collect(),
        ))
    } else {
        Err(out_of_range("family index", n, i))
    }
}

/// `m_{i,j}`: the prefix/suffix member of `M_i` split at `j`.
pub fn m_ij(n: usize, i: usize, j: usize) -> Result<Monomial> {
    let (base, zs) = m_shape(n, i)?;
    let space = VarSpace::new(n)?;
    let valid = if i == 1 {
        (3..=n + 1).contains(&j)
    } else if i == n {
        (1..=n - 1).contains(&j)
    } else {
        (1..=n + 1).contains(&j)
    };
    if !valid {
        return Err(out_of_range("monomial index", n, (i, j)));
    }
    let xs = base.iter().copied().filter(|&k| k < j);
    let ys = base.iter().copied().filter(|&k| k >= j);
    Ok(xyz(space, xs, ys, zs))
}

/// `M_i`: every `X_K Y_L Z` over partitions `K ⊔ L` of the base set,
/// ordered by the bitmask of `K`.
pub fn m_set(n: usize, i: usize) -> Result<Vec<Monomial>> {
    let (base, zs) = m_shape(n, i)?;
    let space = VarSpace::new(n)?;
    Ok((0u64..1 << base.len())
        .map(|mask| {
            let xs = base.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &k)| k);
            let ys = base.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 0).map(|(_, &k)| k);
            xyz(space, xs, ys, zs.iter().copied())
        })
        .collect())
}

/// `𝔞_i + (M_i)`, the expected value of `𝔞_i : I`.
pub fn link_candidate(n: usize, i: usize) -> Result<Ideal> {
    let space = VarSpace::new(n)?;
    let mut gens = sub_a(n, i)?.gens().to_vec();
    gens.extend(m_set(n, i)?.into_iter().map(|m| monomial_poly(space, m)));
    Ideal::new(space, ORD, gens)
}

/// `Σ_i (𝔞_i + (M_i)) = 𝔞 + (∪ M_i)`.
pub fn sum_of_links(n: usize) -> Result<Ideal> {
    let space = VarSpace::new(n)?;
    let mut gens = gens_a(n)?;
    for i in 1..=n {
        gens.extend(m_set(n, i)?.into_iter().map(|m| monomial_poly(space, m)));
    }
    Ideal::new(space, ORD, gens)
}

/// `g_{1,j} = X_{[1,j−1]} Z_{[1,j]} Δ_{j+1,j}` for `1 ≤ j ≤ n−1`.
pub fn g_1j(n: usize, j: usize) -> Result<Polynomial> {
    require_n_at_least_4(n)?;
    if j == 0 || j >= n {
        return Err(out_of_range("g_{1,j} index", n, j));
    }
    let space = VarSpace::new(n)?;
    Ok(delta(space, j + 1, j)?.mul_monomial(&xyz(space, range(1, j - 1), [], range(1, j))))
}

/// `g_{j,n} = Y_{[j+1,n]} Z_{[j,n]} Δ_{j,j−1}` for `2 ≤ j ≤ n`.
pub fn g_jn(n: usize, j: usize) -> Result<Polynomial> {
    require_n_at_least_4(n)?;
    if j < 2 || j > n {
        return Err(out_of_range("g_{j,n} index", n, j));
    }
    let space = VarSpace::new(n)?;
    Ok(delta(space, j, j - 1)?.mul_monomial(&xyz(space, [], range(j + 1, n), range(j, n))))
}

/// `G = {g_i} ∪ {g_{1,i} : 2 ≤ i ≤ n−1} ∪ {g_{i,n} : 2 ≤ i ≤ n−1}`, in that order.
pub fn set_g(n: usize) -> Result<Vec<Polynomial>> {
    let mut out = gens_a(n)?;
    for i in 2..n {
        out.push(g_1j(n, i)?);
    }
    for i in 2..n {
        out.push(g_jn(n, i)?);
    }
    Ok(out)
}

/// `G ∪ M_1 ∪ … ∪ M_n` as one list (monomials after the binomials).
pub fn set_g_union_m(n: usize) -> Result<Vec<Polynomial>> {
    let space = VarSpace::new(n)?;
    let mut out = set_g(n)?;
    for i in 1..=n {
        out.extend(m_set(n, i)?.into_iter().map(|m| monomial_poly(space, m)));
    }
    Ok(out)
}

/// `(Δ_{1,2}, …, Δ_{n−1,n})` in the two-row ring.
pub fn chain_ideal(n: usize) -> Result<Ideal> {
    require_n_at_least_4(n)?;
    let space = VarSpace::two_row(n)?;
    let gens = (1..n).map(|t| delta(space, t, t + 1)).collect::<Result<Vec<_>>>()?;
    Ideal::new(space, ORD, gens)
}

/// The distinct-bidegree choice `m_j = X_{[2,j−1]} Y_{[j,n−1]}`, `2 ≤ j ≤ n`.
pub fn chain_monomials(n: usize) -> Result<Vec<Monomial>> {
    require_n_at_least_4(n)?;
    let space = VarSpace::two_row(n)?;
    Ok((2..=n).map(|j| xyz(space, range(2, j - 1), range(j, n - 1), [])).collect())
}

/// The chain ideal and its expected link `𝔞 + (m_2, …, m_n)`.
pub fn chain_link(n: usize) -> Result<(Ideal, Ideal)> {
    let chain = chain_ideal(n)?;
    let space = chain.space();
    let mut gens = chain.gens().to_vec();
    gens.extend(chain_monomials(n)?.into_iter().map(|m| monomial_poly(space, m)));
    Ok((chain, Ideal::new(space, ORD, gens)?))
}

/// The order of the minors in the generic residual setup: `g'_1, …, g'_n`
/// first, then the remaining `Δ_{i,j}` (`i < j`) lexicographically.
pub fn generic_minor_order(n: usize) -> Result<Vec<(usize, usize)>> {
    require_n_at_least_4(n)?;
    let mut out: Vec<(usize, usize)> = (1..=n).map(|i| g_prime_indices(n, i)).collect::<Result<_>>()?;
    for i in 1..=n {
        for j in i + 1..=n {
            if !out.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

fn generic_minors(space: VarSpace) -> Result<Vec<Polynomial>> {
    generic_minor_order(space.n())?.into_iter().map(|(i, j)| delta(space, i, j)).collect()
}

/// `a_j = Σ_i g_i B[i][j]` for an exact `r × n` matrix `B`, `r = C(n,2)`.
/// Returns `(𝔞_B, I)` in the two-row ring.
pub fn generic_residual(n: usize, b: &[Vec<Coeff>]) -> Result<(Ideal, Ideal)> {
    require_n_at_least_4(n)?;
    let r = n * (n - 1) / 2;
    if b.len() != r || b.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::Precondition(format!("B must be {r} x {n}")));
    }
    let space = VarSpace::two_row(n)?;
    let gs = generic_minors(space)?;
    let a: Vec<Polynomial> = (0..n)
        .map(|j| {
            gs.iter().zip(b).fold(Polynomial::zero(space, ORD), |acc, (g, row)| {
                if row[j].is_zero() {
                    acc
                } else {
                    &acc + &g.scale(&row[j])
                }
            })
        })
        .collect();
    Ok((Ideal::new(space, ORD, a)?, minors_ideal(space)))
}

/// The `a_j` with the fully generic matrix `z_{i,j}` (flattened as
/// `z_{(i−1)n + j}`), in `Q[x, y, z_1..z_{rn}]`.
pub fn generic_residual_symbolic(n: usize) -> Result<(Ideal, Ideal)> {
    require_n_at_least_4(n)?;
    let r = n * (n - 1) / 2;
    let space = VarSpace::with_blocks(n, r * n, 0)?;
    let gs = generic_minors(space)?;
    let a: Vec<Polynomial> = (1..=n)
        .map(|j| {
            gs.iter().enumerate().fold(Polynomial::zero(space, ORD), |acc, (i, g)| {
                &acc + &g.mul_monomial(&xyz(space, [], [], [i * n + j]))
            })
        })
        .collect();
    Ok((Ideal::new(space, ORD, a)?, minors_ideal(space)))
}

/// `π`: `z_{i,i} ↦ z_i`, `z_{i,j} ↦ 0` (`i ≠ j`), identity on x and y.
pub fn generic_projection(n: usize) -> Result<Substitution> {
    require_n_at_least_4(n)?;
    let r = n * (n - 1) / 2;
    let src = VarSpace::with_blocks(n, r * n, 0)?;
    let dst = VarSpace::new(n)?;
    let mut pi = Substitution::new(src, dst, ORD);
    for k in 1..=n {
        pi.set(Var::X(k), Polynomial::var(dst, ORD, Var::X(k))?)?;
        pi.set(Var::Y(k), Polynomial::var(dst, ORD, Var::Y(k))?)?;
    }
    for i in 1..=r {
        for j in 1..=n {
            let image = if i == j { Polynomial::var(dst, ORD, Var::Z(i))? } else { Polynomial::zero(dst, ORD) };
            pi.set(Var::Z((i - 1) * n + j), image)?;
        }
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    fn p(s: VarSpace, src: &str) -> Polynomial {
        parse(src, s, ORD).unwrap()
    }

    #[test]
    fn minors_examples() {
        let s = VarSpace::new(4).unwrap();
        assert_eq!(delta(s, 1, 2).unwrap(), p(s, "x1*y2 - x2*y1"));
        assert!(delta(s, 3, 3).unwrap().is_zero());
        assert_eq!(delta(s, 2, 1).unwrap(), -delta(s, 1, 2).unwrap());
        assert!(delta(s, 0, 2).is_err());
        assert!(delta(s, 1, 5).is_err());
        assert_eq!(minors(s).len(), 6);
    }

    #[test]
    fn a_family_examples() {
        let s = VarSpace::new(4).unwrap();
        assert_eq!(g(4, 2).unwrap(), p(s, "z2*x3*y1 - z2*x1*y3"));
        for i in 1..=4 {
            assert_eq!(sub_a(4, i).unwrap().gens().len(), 3);
        }
        assert!(ideal_a(3).is_err());
        assert!(sub_a(4, 5).is_err());
    }

    #[test]
    fn m_family_examples() {
        let s = VarSpace::new(4).unwrap();
        let mono = |src: &str| p(s, src).leading_monomial().unwrap().clone();
        assert_eq!(m_ij(4, 1, 3).unwrap(), mono("y3*y4*z2*z3*z4"));
        assert_eq!(m_ij(4, 4, 2).unwrap(), mono("x1*y2*z1*z2*z3"));
        assert_eq!(m_ij(4, 1, 4).unwrap(), mono("x3*y4*z2*z3*z4"));
        let mut got = m_set(4, 2).unwrap();
        let mut want: Vec<Monomial> =
            ["y2*y4", "x2*y4", "x4*y2", "x2*x4"].iter().map(|m| mono(&format!("{m}*z1*z3*z4"))).collect();
        got.sort_by(|a, b| ORD.cmp(a, b));
        want.sort_by(|a, b| ORD.cmp(a, b));
        assert_eq!(got, want);
        assert!(m_ij(4, 1, 2).is_err());
        assert!(m_ij(4, 4, 4).is_err());
        for n in 4..=7 {
            for i in 1..=n {
                assert_eq!(m_set(n, i).unwrap().len(), 1 << (n - 2));
            }
            for i in 2..n {
                assert_eq!(m_ij(n, i, i).unwrap(), m_ij(n, i, i - 1).unwrap());
                assert_eq!(m_ij(n, i, i + 1).unwrap(), m_ij(n, i, i + 2).unwrap());
            }
        }
    }

    #[test]
    fn chain_g_examples() {
        let s = VarSpace::new(4).unwrap();
        assert_eq!(g_1j(4, 2).unwrap(), p(s, "x1*z1*z2*x3*y2 - x1*z1*z2*x2*y3"));
        assert_eq!(g_jn(4, 3).unwrap(), p(s, "y4*z3*z4*x3*y2 - y4*z3*z4*x2*y3"));
        assert_eq!(g_1j(4, 1).unwrap(), g(4, 1).unwrap());
        assert_eq!(g_jn(4, 4).unwrap(), g(4, 4).unwrap());
        for n in 4..=7 {
            assert_eq!(set_g(n).unwrap().len(), 3 * n - 4);
        }
    }

    #[test]
    fn chain_link_examples() {
        let (chain, link) = chain_link(4).unwrap();
        let s = chain.space();
        assert_eq!(chain.gens().len(), 3);
        assert_eq!(chain.gens()[0], delta(s, 1, 2).unwrap().monic());
        let ms: Vec<String> = link.gens()[3..].iter().map(|g| g.to_string()).collect();
        assert_eq!(ms, vec!["y2*y3", "x2*y3", "x2*x3"]);
    }

    #[test]
    fn generic_setup() {
        let order = generic_minor_order(4).unwrap();
        assert_eq!(order, vec![(2, 1), (3, 1), (4, 2), (4, 3), (1, 4), (2, 3)]);
        // identity pattern gives the a-generators with z set to 1
        let n = 4;
        let r = 6;
        let b: Vec<Vec<Coeff>> =
            (0..r).map(|i| (0..n).map(|j| coeff((i == j) as i64)).collect()).collect();
        let (ab, _) = generic_residual(n, &b).unwrap();
        let s = VarSpace::two_row(n).unwrap();
        let expected: Vec<Polynomial> = (1..=n).map(|i| g_prime(s, i).unwrap().monic()).collect();
        assert_eq!(ab.gens(), expected.as_slice());
        let zero: Vec<Vec<Coeff>> = vec![vec![coeff(0); n]; r];
        assert!(generic_residual(n, &zero).unwrap().0.is_zero());
        assert!(generic_residual(n, &zero[1..]).is_err());
    }

    #[test]
    fn projection_recovers_a() {
        let n = 4;
        let (sym, _) = generic_residual_symbolic(n).unwrap();
        let pi = generic_projection(n).unwrap();
        for (j, a) in sym.gens().iter().enumerate() {
            let image = pi.apply(a).unwrap();
            assert_eq!(image.monic(), g(n, j + 1).unwrap().monic());
        }
    }
}
