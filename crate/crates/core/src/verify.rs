//! Runs the named checks for one `n` and collects serializable reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::automorphism::family_matches_chain;
use crate::error::{AlgebraError, Result};
use crate::families::{self, minors_ideal};
use crate::graph::verify_res_int;
use crate::groebner::{divide, is_groebner_basis_until, reduce_basis, s_polynomial, Budget, Ideal};
use crate::identities;
use crate::ideal_ops::{height, quotient, sum};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{coeff, Coeff, Polynomial};
use crate::space::VarSpace;

pub const SCHEMA_VERSION: u32 = 1;
const ORD: MonomialOrder = MonomialOrder::Grevlex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    GbA,
    GbSum,
    Links,
    ChainLink,
    SumEqualsColon,
    Heights,
    Automorphisms,
    Identities,
    Reduced,
    RandomSpecialization,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::GbA,
        Check::GbSum,
        Check::Links,
        Check::ChainLink,
        Check::SumEqualsColon,
        Check::Heights,
        Check::Automorphisms,
        Check::Identities,
        Check::Reduced,
        Check::RandomSpecialization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::GbA => "gb-a",
            Check::GbSum => "gb-sum",
            Check::Links => "links",
            Check::ChainLink => "section2",
            Check::SumEqualsColon => "sum-equals-colon",
            Check::Heights => "heights",
            Check::Automorphisms => "automorphisms",
            Check::Identities => "identities",
            Check::Reduced => "reduced",
            Check::RandomSpecialization => "random-specialization",
        }
    }

    /// Parses `all` or a comma-separated list of names.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        if s.trim() == "all" {
            return Ok(Check::ALL.to_vec());
        }
        let mut out: Vec<Check> = s.split(',').map(|p| p.trim().parse()).collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| AlgebraError::Precondition(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    BudgetExceeded,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::BudgetExceeded => "budget-exceeded",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Environment {
    pub seed: u64,
    pub budget_pairs: u64,
    pub timeout_secs: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub n: usize,
    pub seed: u64,
    pub environment: Environment,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// The same report with all timings set to zero.
    pub fn without_timings(&self) -> VerifyReport {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n = {}, seed = {}\n", self.n, self.seed);
        for c in &self.checks {
            out.push_str(&format!("{:<22} {:<15} {:>8} ms  {}\n", c.name, c.status.to_string(), c.elapsed_ms, c.detail));
            if let Some(w) = &c.witness {
                out.push_str(&format!("{:<22} witness: {w}\n", ""));
            }
        }
        out
    }
}

/// Deliberate corruption of the candidate basis, used to show that the
/// certificate checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Negate the last term of the given element (0-based) of `G`.
    FlipTrailingSign { element: usize },
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n: usize,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub budget_pairs: u64,
    pub timeout: Option<Duration>,
    pub fault: Option<Fault>,
}

impl VerifyConfig {
    pub fn new(n: usize) -> Self {
        VerifyConfig {
            n,
            checks: Check::ALL.to_vec(),
            seed: 1,
            budget_pairs: Budget::default().max_pairs,
            timeout: None,
            fault: None,
        }
    }
}

enum Outcome {
    Pass(String),
    Fail { witness: String, detail: String },
    Skipped(String),
}

fn fail(witness: impl Into<String>, detail: impl Into<String>) -> Outcome {
    Outcome::Fail { witness: witness.into(), detail: detail.into() }
}

type Shared<T> = OnceLock<std::result::Result<T, AlgebraError>>;

/// Colon ideals shared between checks.
struct Context {
    n: usize,
    seed: u64,
    budget: Budget,
    fault: Option<Fault>,
    links: Shared<Vec<Ideal>>,
}

impl Context {
    fn ideal(&self, i: Ideal) -> Ideal {
        i.with_budget(self.budget)
    }

    fn space(&self) -> VarSpace {
        VarSpace::new(self.n).expect("n checked")
    }

    fn minors(&self) -> Ideal {
        self.ideal(minors_ideal(self.space()))
    }

    /// `J_i = 𝔞_i : I` for `i = 1..n`.
    fn links(&self) -> Result<&[Ideal]> {
        self.links
            .get_or_init(|| {
                let i = self.minors();
                (1..=self.n)
                    .into_par_iter()
                    .map(|k| quotient(&self.ideal(families::sub_a(self.n, k)?), &i))
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    fn set_g(&self) -> Result<Vec<Polynomial>> {
        let mut gs = families::set_g(self.n)?;
        if let Some(Fault::FlipTrailingSign { element }) = self.fault {
            let target = gs.get_mut(element).ok_or_else(|| {
                AlgebraError::IndexOutOfRange(format!("fault element {element} of {}", 3 * self.n - 4))
            })?;
            *target = flip_trailing(target);
        }
        Ok(gs)
    }
}

fn flip_trailing(f: &Polynomial) -> Polynomial {
    let last = f.terms().len() - 1;
    let terms = f.terms().iter().enumerate().map(|(k, t)| {
        let c = if k == last { -t.coeff.clone() } else { t.coeff.clone() };
        (c, t.mono.clone())
    });
    Polynomial::from_terms(f.space(), f.order(), terms)
}

fn certificate(ctx: &Context, list: &[Polynomial], label: &str) -> Result<Option<Outcome>> {
    let cert = is_groebner_basis_until(list, ORD, ctx.budget.deadline)?;
    Ok(cert.witness.map(|w| {
        fail(
            format!("S({label}[{}], {label}[{}]) reduces to {}", w.i + 1, w.j + 1, w.remainder),
            format!("{} elements are not a Gröbner basis", list.len()),
        )
    }))
}

fn check_gb_a(ctx: &Context) -> Result<Outcome> {
    let gs = ctx.set_g()?;
    if let Some(f) = certificate(ctx, &gs, "G")? {
        return Ok(f);
    }
    let computed = ctx.ideal(families::ideal_a(ctx.n)?);
    let computed = computed.groebner_basis()?;
    let expected = reduce_basis(gs.clone())?;
    if computed != expected.as_slice() {
        return Ok(fail(
            format!("reduced basis has {} elements, expected {}", computed.len(), expected.len()),
            "Buchberger on the a-generators does not reproduce G",
        ));
    }
    Ok(Outcome::Pass(format!("G ({} elements) certified; Buchberger reproduces it", gs.len())))
}

fn check_gb_sum(ctx: &Context) -> Result<Outcome> {
    let mut list = ctx.set_g()?;
    let space = ctx.space();
    for i in 1..=ctx.n {
        list.extend(families::m_set(ctx.n, i)?.into_iter().map(|m| families::monomial_poly(space, m)));
    }
    if let Some(f) = certificate(ctx, &list, "GM")? {
        return Ok(f);
    }
    Ok(Outcome::Pass(format!("G ∪ M ({} elements) certified", list.len())))
}

/// First product outside `ideal`, 1-based within the list.
fn first_outside(ideal: &Ideal, polys: &[Polynomial]) -> Result<Option<(usize, Polynomial)>> {
    ideal.groebner()?;
    let hit = polys
        .par_iter()
        .enumerate()
        .map(|(k, p)| ideal.contains(p).map(|inside| (!inside).then(|| (k + 1, p.clone()))))
        .find_first(|r| !matches!(r, Ok(None)));
    match hit {
        None => Ok(None),
        Some(r) => r,
    }
}

fn check_links(ctx: &Context) -> Result<Outcome> {
    for i in 1..=ctx.n {
        let ai = ctx.ideal(families::sub_a(ctx.n, i)?);
        if let Some((k, p)) = first_outside(&ai, &identities::link_products(ctx.n, i)?)? {
            return Ok(fail(format!("i = {i}: product #{k} {p} is not in a_{i}"), "M_i · I ⊄ a_i"));
        }
    }
    let links = ctx.links()?;
    for i in 1..=ctx.n {
        let expected = families::link_candidate(ctx.n, i)?;
        if !links[i - 1].equals(&expected)? {
            return Ok(fail(format!("i = {i}"), format!("a_{i} : I differs from a_{i} + (M_{i})")));
        }
    }
    Ok(Outcome::Pass(format!("a_i : I = a_i + (M_i) for i = 1..{}", ctx.n)))
}

fn check_chain_link(ctx: &Context) -> Result<Outcome> {
    let n = ctx.n;
    let (chain, link) = families::chain_link(n)?;
    let chain = ctx.ideal(chain);
    let colon = quotient(&chain, &ctx.ideal(minors_ideal(chain.space())))?;
    if !colon.equals(&link)? {
        return Ok(fail("colon differs", "chain : I differs from the chain plus the canonical monomials"));
    }
    let mut degrees: BTreeMap<u32, usize> = BTreeMap::new();
    for g in colon.minimal_generators()? {
        *degrees.entry(g.total_degree()).or_default() += 1;
    }
    let mut expected: BTreeMap<u32, usize> = BTreeMap::new();
    *expected.entry(2).or_default() += n - 1;
    *expected.entry(n as u32 - 2).or_default() += n - 1;
    if degrees != expected {
        return Ok(fail(format!("degrees {degrees:?}"), format!("expected {expected:?}")));
    }
    Ok(Outcome::Pass(format!("link generated in degrees {degrees:?}")))
}

fn check_sum_equals_colon(ctx: &Context) -> Result<Outcome> {
    let a = ctx.ideal(families::ideal_a(ctx.n)?);
    for i in 1..=ctx.n {
        if let Some((k, p)) = first_outside(&a, &identities::link_products(ctx.n, i)?)? {
            return Ok(fail(format!("i = {i}: product #{k} {p} is not in a"), "M_i · I ⊄ a"));
        }
    }
    let colon = quotient(&a, &ctx.minors())?;
    let sum = families::sum_of_links(ctx.n)?;
    if !colon.equals(&sum)? {
        return Ok(fail("colon differs", "a : I differs from the sum of the links"));
    }
    Ok(Outcome::Pass(format!("a : I = sum of J_i ({} generators)", colon.gens().len())))
}

fn check_heights(ctx: &Context) -> Result<Outcome> {
    let n = ctx.n;
    let chain = ctx.ideal(families::chain_ideal(n)?);
    let h = height(&chain)?;
    if h != n - 1 {
        return Ok(fail(format!("height(chain) = {h}"), format!("expected {}", n - 1)));
    }
    let two = VarSpace::two_row(n)?;
    for i in 1..=n {
        let gens = (1..=n).filter(|&j| j != i).map(|j| families::g_prime(two, j)).collect::<Result<Vec<_>>>()?;
        let h = height(&ctx.ideal(Ideal::new(two, ORD, gens)?))?;
        if h != n - 1 {
            return Ok(fail(format!("i = {i}: height = {h}"), "a_i with z = 1 is not of height n - 1"));
        }
    }
    let i_ideal = ctx.minors();
    for (k, j) in ctx.links()?.iter().enumerate() {
        let m = families::monomial_poly(ctx.space(), families::m_set(n, k + 1)?[0].clone());
        if !j.contains(&m)? {
            return Ok(fail(format!("J_{} misses {m}", k + 1), "link without a monomial"));
        }
        let h = height(&sum(&i_ideal, j)?)?;
        if h < n {
            return Ok(fail(format!("height(I + J_{}) = {h}", k + 1), format!("expected at least {n}")));
        }
    }
    let r = verify_res_int(n)?;
    if !r.holds() {
        return Ok(fail(format!("height(J_n + (g_n)) = {}, replay {:?}", r.height, r.graph_replay), "residual height"));
    }
    Ok(Outcome::Pass(format!(
        "height(chain) = {}; height(I + J_i) >= {n}; height(J_n + (g_n)) = {}{}",
        n - 1,
        r.height,
        if r.graph_replay.is_some() { "; graph replay holds" } else { "" }
    )))
}

fn check_automorphisms(ctx: &Context) -> Result<Outcome> {
    for i in 1..=ctx.n {
        if !family_matches_chain(ctx.n, i)? {
            return Ok(fail(format!("case {i}"), "images are not the chain minors"));
        }
    }
    Ok(Outcome::Pass(format!("all {} case families map onto the chain", ctx.n)))
}

/// Random binomials `f, g` whose leading-monomial gcd divides both
/// trailing monomials.
pub fn random_qualifying_pair(rng: &mut impl Rng, space: VarSpace) -> (Polynomial, Polynomial) {
    let nv = space.nvars();
    let mono = |rng: &mut dyn rand::RngCore, hi: u16| {
        Monomial::from_exponents((0..nv).map(|_| rng.gen_range(0..=hi)).collect::<Vec<u16>>())
    };
    let nonzero = |rng: &mut dyn rand::RngCore| {
        let c = rng.gen_range(1..=9i64);
        if rng.gen_bool(0.5) { coeff(c) } else { coeff(-c) }
    };
    loop {
        let c = mono(rng, 1);
        let binomial = |rng: &mut dyn rand::RngCore| {
            let a = c.mul(&mono(rng, 2));
            let b = c.mul(&mono(rng, 2));
            Polynomial::from_terms(space, ORD, [(nonzero(rng), a), (nonzero(rng), b)])
        };
        let f = binomial(rng);
        let g = binomial(rng);
        if f.len() != 2 || g.len() != 2 {
            continue;
        }
        let d = f.terms()[0].mono.gcd(&g.terms()[0].mono);
        if d.divides(&f.terms()[1].mono) && d.divides(&g.terms()[1].mono) {
            return (f, g);
        }
    }
}

fn check_identities(ctx: &Context) -> Result<Outcome> {
    let n = ctx.n;
    let chain = ctx.ideal(families::chain_ideal(n)?);
    let mut products = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let ps = identities::chain_products(n, i, j)?;
            products += ps.len();
            if let Some((k, p)) = first_outside(&chain, &ps)? {
                return Ok(fail(format!("({i}, {j}) product #{k}: {p}"), "not in the chain ideal"));
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (l, r) = identities::prefix_telescope(n, i, j)?;
            if l != r {
                return Ok(fail(format!("prefix telescope ({i}, {j}): {l} vs {r}"), "identity fails"));
            }
            let (l, r) = identities::suffix_telescope(n, j, i)?;
            if l != r {
                return Ok(fail(format!("suffix telescope ({j}, {i}): {l} vs {r}"), "identity fails"));
            }
        }
    }
    for i in 1..=n - 2 {
        let (l, r) = identities::prefix_recurrence(n, i)?;
        if l != r {
            return Ok(fail(format!("prefix recurrence i = {i}: {l} vs {r}"), "identity fails"));
        }
    }
    for j in 3..=n {
        let (l, r) = identities::suffix_recurrence(n, j)?;
        if l != r {
            return Ok(fail(format!("suffix recurrence j = {j}: {l} vs {r}"), "identity fails"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let space = VarSpace::two_row(3)?;
    for k in 0..500 {
        let (f, g) = random_qualifying_pair(&mut rng, space);
        let s = s_polynomial(&f, &g, ORD)?;
        let r = divide(&s, &[f.clone(), g.clone()], ORD)?.remainder;
        if !r.is_zero() {
            return Ok(fail(format!("pair #{}: f = {f}, g = {g}, remainder {r}", k + 1), "binomial S-pair"));
        }
    }
    Ok(Outcome::Pass(format!(
        "{products} chain products, telescopes, recurrences and 500 binomial pairs hold"
    )))
}

fn check_reduced(ctx: &Context) -> Result<Outcome> {
    let sum = ctx.ideal(families::sum_of_links(ctx.n)?);
    let init = sum.initial_ideal()?;
    if !init.is_squarefree_monomial_ideal()? {
        let bad = init
            .gens()
            .iter()
            .find(|g| !g.leading_monomial().map(|m| m.is_squarefree()).unwrap_or(true))
            .map(|g| g.to_string())
            .unwrap_or_default();
        return Ok(fail(bad, "initial ideal is not squarefree"));
    }
    Ok(Outcome::Pass(format!("initial ideal squarefree ({} generators)", init.gens().len())))
}

pub const SPECIALIZATION_SAMPLES: usize = 5;
pub const SPECIALIZATION_RETRIES: usize = 10;
pub const SPECIALIZATION_RANGE: i64 = 50;

/// An `r × n` matrix with entries uniform in `[−50, 50]`.
pub fn random_matrix(rng: &mut impl Rng, n: usize) -> Vec<Vec<Coeff>> {
    let r = n * (n - 1) / 2;
    (0..r)
        .map(|_| (0..n).map(|_| coeff(rng.gen_range(-SPECIALIZATION_RANGE..=SPECIALIZATION_RANGE))).collect())
        .collect()
}

fn check_random_specialization(ctx: &Context) -> Result<Outcome> {
    let n = ctx.n;
    if n != 4 {
        return Ok(Outcome::Skipped("runs at n = 4 only".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut draws = 0;
    for sample in 1..=SPECIALIZATION_SAMPLES {
        let mut accepted = None;
        for _ in 0..SPECIALIZATION_RETRIES {
            draws += 1;
            let b = random_matrix(&mut rng, n);
            let (ab, i) = families::generic_residual(n, &b)?;
            let (ab, i) = (ctx.ideal(ab), ctx.ideal(i));
            if ab.gens().len() < n {
                continue;
            }
            let colon = quotient(&ab, &i)?;
            if !colon.is_unit()? && height(&colon)? == n {
                accepted = Some((ab, i, colon));
                break;
            }
        }
        let Some((ab, i, colon)) = accepted else {
            return Ok(fail(format!("sample {sample}"), "no matrix passed the height filter"));
        };
        let space = ab.space();
        let parts: Vec<Ideal> = (0..n)
            .into_par_iter()
            .map(|k| {
                let gens: Vec<Polynomial> =
                    ab.gens().iter().enumerate().filter(|&(t, _)| t != k).map(|(_, g)| g.clone()).collect();
                quotient(&ctx.ideal(Ideal::new(space, ORD, gens)?), &i)
            })
            .collect::<Result<_>>()?;
        let mut total = Ideal::zero(space, ORD).with_budget(ctx.budget);
        for part in &parts {
            total = sum(&total, part)?;
        }
        if !colon.equals(&total)? {
            return Ok(fail(format!("sample {sample}"), "colon differs from the sum of the partial links"));
        }
    }
    Ok(Outcome::Pass(format!("{SPECIALIZATION_SAMPLES} samples agree ({draws} matrices drawn)")))
}

fn run_one(ctx: &Context, check: Check) -> Result<Outcome> {
    match check {
        Check::GbA => check_gb_a(ctx),
        Check::GbSum => check_gb_sum(ctx),
        Check::Links => check_links(ctx),
        Check::ChainLink => check_chain_link(ctx),
        Check::SumEqualsColon => check_sum_equals_colon(ctx),
        Check::Heights => check_heights(ctx),
        Check::Automorphisms => check_automorphisms(ctx),
        Check::Identities => check_identities(ctx),
        Check::Reduced => check_reduced(ctx),
        Check::RandomSpecialization => check_random_specialization(ctx),
    }
}

/// Runs the selected checks concurrently; reports follow the canonical
/// check order.
pub fn run_checks(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.n < 4 {
        return Err(AlgebraError::Precondition(format!("n >= 4 required, got {}", config.n)));
    }
    let deadline = config.timeout.map(|t| Instant::now() + t);
    let ctx = Context {
        n: config.n,
        seed: config.seed,
        budget: Budget::default().with_max_pairs(config.budget_pairs).with_deadline(deadline),
        fault: config.fault,
        links: OnceLock::new(),
    };
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    // initialized outside the thread pool
    if checks.iter().any(|c| matches!(c, Check::Links | Check::Heights)) {
        let _ = ctx.links();
    }
    let reports = checks
        .par_iter()
        .map(|&c| {
            let start = Instant::now();
            let outcome = run_one(&ctx, c);
            let elapsed_ms = start.elapsed().as_millis() as u64;
            let (status, witness, detail) = match outcome {
                Ok(Outcome::Pass(d)) => (CheckStatus::Pass, None, d),
                Ok(Outcome::Fail { witness, detail }) => (CheckStatus::Fail, Some(witness), detail),
                Ok(Outcome::Skipped(d)) => (CheckStatus::Skipped, None, d),
                Err(e) if e.is_budget() => (CheckStatus::BudgetExceeded, None, e.to_string()),
                Err(e) => (CheckStatus::Fail, Some(e.to_string()), "error during the check".into()),
            };
            CheckReport { name: c.name().into(), status, elapsed_ms, witness, detail }
        })
        .collect();
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        n: config.n,
        seed: config.seed,
        environment: Environment {
            seed: config.seed,
            budget_pairs: config.budget_pairs,
            timeout_secs: config.timeout.map(|t| t.as_secs()),
        },
        checks: reports,
    })
}
