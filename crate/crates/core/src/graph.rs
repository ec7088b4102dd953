//! Simple graphs, binomial edge ideals and the primes `P_S(G)`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::families::{delta, g, minors_ideal, sub_a, xyz};
use crate::groebner::Ideal;
use crate::ideal_ops::{height, quotient, sum};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::space::VarSpace;

const ORD: MonomialOrder = MonomialOrder::Grevlex;

/// Undirected graph on `[1, n]` without loops or multiple edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, edges: BTreeSet::new() }
    }

    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for i in 1..n {
            g.add_edge(i, i + 1).expect("valid");
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.add_edge(i, j).expect("valid");
            }
        }
        g
    }

    /// Parses `i j` lines; blank lines and `#` comments are skipped.
    pub fn from_edge_list(n: usize, text: &str) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = || AlgebraError::Parse { pos: lineno, msg: format!("expected `i j`, got `{line}`") };
            let mut it = line.split_whitespace();
            let a: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(parse_err)?;
            let b: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(parse_err)?;
            if it.next().is_some() {
                return Err(parse_err());
            }
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds `{i, j}`; re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(AlgebraError::Precondition(format!("loop at vertex {i}")));
        }
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(AlgebraError::IndexOutOfRange(format!("edge {{{i}, {j}}} on {} vertices", self.n)));
        }
        self.edges.insert((i.min(j), i.max(j)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Connected components of the graph with the vertices in `removed`
    /// deleted, each sorted, ordered by smallest vertex.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while p[r] != r {
                r = p[r];
            }
            p[v] = r;
            r
        }
        let gone = |v: usize| removed.contains(&v);
        for &(a, b) in &self.edges {
            if !gone(a) && !gone(b) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_of = vec![usize::MAX; self.n + 1];
        for v in (1..=self.n).filter(|&v| !gone(v)) {
            let r = find(&mut parent, v);
            if root_of[r] == usize::MAX {
                root_of[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_of[r]].push(v);
        }
        comps
    }
}

/// One minor per edge, in the two-row ring.
pub fn edge_ideal(graph: &SimpleGraph) -> Result<Ideal> {
    let space = VarSpace::two_row(graph.n())?;
    let gens = graph.edges().map(|(i, j)| delta(space, i, j)).collect::<Result<Vec<_>>>()?;
    Ideal::new(space, ORD, gens)
}

/// The prime `P_S(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePS {
    pub n: usize,
    pub s: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl PrimePS {
    /// `(x_i, y_i : i ∈ S)` plus all minors inside each component.
    pub fn ideal(&self) -> Result<Ideal> {
        let space = VarSpace::two_row(self.n)?;
        let mut gens: Vec<Polynomial> = Vec::new();
        for &i in &self.s {
            gens.push(Polynomial::from_monomial(space, ORD, crate::poly::coeff(1), xyz(space, [i], [], [])));
            gens.push(Polynomial::from_monomial(space, ORD, crate::poly::coeff(1), xyz(space, [], [i], [])));
        }
        for c in &self.components {
            for (a, &u) in c.iter().enumerate() {
                for &v in &c[a + 1..] {
                    gens.push(delta(space, u, v)?);
                }
            }
        }
        Ideal::new(space, ORD, gens)
    }

    /// `n + |S| − #components`.
    pub fn height_formula(&self) -> usize {
        self.n + self.s.len() - self.components.len()
    }

    /// Whether `Δ_{u,v}` lies in this prime.
    pub fn contains_minor(&self, u: usize, v: usize) -> bool {
        u == v
            || self.s.contains(&u)
            || self.s.contains(&v)
            || self.components.iter().any(|c| c.contains(&u) && c.contains(&v))
    }

    /// Combinatorial test for `self ⊆ other`.
    pub fn is_contained_in(&self, other: &PrimePS) -> bool {
        self.s.iter().all(|i| other.s.contains(i))
            && self.components.iter().all(|c| {
                c.iter().enumerate().all(|(a, &u)| c[a + 1..].iter().all(|&v| other.contains_minor(u, v)))
            })
    }
}

pub fn prime_ps(graph: &SimpleGraph, s: &[usize]) -> Result<PrimePS> {
    if s.iter().any(|&v| v == 0 || v > graph.n()) {
        return Err(AlgebraError::IndexOutOfRange(format!("vertex set {s:?} on {} vertices", graph.n())));
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(PrimePS { n: graph.n(), components: graph.components_without(&s), s })
}

/// The inclusion-minimal `P_S(G)` over all `S ⊆ [1, n]`. Containment is
/// decided by Gröbner membership; since `x_i ∈ P_S` exactly when `i ∈ S`,
/// only pairs with `S' ⊊ S` are tested.
pub fn minimal_primes_bei(graph: &SimpleGraph) -> Result<Vec<PrimePS>> {
    let n = graph.n();
    if n > 20 {
        return Err(AlgebraError::Precondition(format!("subset enumeration over {n} vertices")));
    }
    let candidates: Vec<(u32, PrimePS, Ideal)> = (0u32..1 << n)
        .into_par_iter()
        .map(|mask| {
            let s: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let p = prime_ps(graph, &s)?;
            let ideal = p.ideal()?;
            Ok((mask, p, ideal))
        })
        .collect::<Result<_>>()?;
    let keep: Vec<bool> = candidates
        .par_iter()
        .map(|(mask, _, big)| {
            for (m2, _, small) in &candidates {
                if m2 != mask && m2 & mask == *m2 && big.contains_ideal(small)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<_>>()?;
    Ok(candidates.into_iter().zip(keep).filter(|(_, k)| *k).map(|((_, p, _), _)| p).collect())
}

/// The graph of `(g'_j : j ∈ [1, n−1] ∖ T)`.
pub fn residual_graph(n: usize, t: &[usize]) -> Result<SimpleGraph> {
    let mut graph = SimpleGraph::new(n);
    for j in (1..n).filter(|j| !t.contains(j)) {
        let (a, b) = crate::families::g_prime_indices(n, j)?;
        graph.add_edge(a, b)?;
    }
    Ok(graph)
}

/// Outcome of [`verify_res_int`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResIntReport {
    pub n: usize,
    pub height: usize,
    /// `None` when the graph-level replay was not run (`n > 6`).
    pub graph_replay: Option<bool>,
}

impl ResIntReport {
    pub fn holds(&self) -> bool {
        self.height >= self.n && self.graph_replay != Some(false)
    }
}

/// Whether `Δ_{n,n−1}` avoids every prime `(z_T) + P_S(G_T)` other than
/// `I` itself, over all `T ⊆ [1, n−1]` and minimal `P_S(G_T)`.
pub fn replay_res_int(n: usize) -> Result<bool> {
    let space = VarSpace::two_row(n)?;
    let gn = delta(space, n, n - 1)?;
    for mask in 0u32..1 << (n - 1) {
        let t: Vec<usize> = (1..n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let graph = residual_graph(n, &t)?;
        for p in minimal_primes_bei(&graph)? {
            let is_whole = t.is_empty() && p.s.is_empty() && p.components.len() == 1;
            if !is_whole && p.ideal()?.contains(&gn)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `height(J_n + (g_n)) ≥ n` with `J_n = 𝔞_n : I`, plus the graph replay
/// for `n ≤ 6`.
pub fn verify_res_int(n: usize) -> Result<ResIntReport> {
    if n < 4 {
        return Err(AlgebraError::Precondition(format!("n >= 4 required, got {n}")));
    }
    let space = VarSpace::new(n)?;
    let jn = quotient(&sub_a(n, n)?, &minors_ideal(space))?;
    let h = height(&sum(&jn, &Ideal::principal(&g(n, n)?))?)?;
    let graph_replay = if n <= 6 { Some(replay_res_int(n)?) } else { None };
    Ok(ResIntReport { n, height: h, graph_replay })
}
