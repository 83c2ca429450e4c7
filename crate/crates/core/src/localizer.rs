//! Localization systems around a self-dual object `k`.
//!
//! Unknowns are `y(a,b)` and `x(a,b,c)` indexed by labels of
//! `S_k = {a : N_{k,k}^a = 1}`. Every equation is emitted as
//! `right-hand side - left-hand side` with exact rational constants.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;
use polyforge::{groebner, specialize, Field, FieldSpec, GbConfig, GroebnerBasis, PolyRing, Polynomial, PrimeField, Rationals, System};
use serde::Serialize;

use crate::error::PrismError;
use crate::expr::{ring_over, Expr};
use crate::ring::FusionRing;

/// Which subsystem a variable belongs to when two localizations are combined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    K,
    L,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::K => "k",
            Tag::L => "l",
        }
    }

    /// Alias prefixes for x and y variables.
    fn alias_prefixes(self) -> (&'static str, &'static str) {
        match self {
            Tag::K => ("u", "v"),
            Tag::L => ("w", "z"),
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The object `k`, its set `S_k` and the multiplicity-free subsets of `S_k`
/// that are maximal under inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationInput {
    pub k: usize,
    pub s_k: Vec<usize>,
    pub candidates: Vec<Vec<usize>>,
    dims: Vec<u64>,
}

impl LocalizationInput {
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Validates a user-chosen `S'_k` and returns it sorted in label order.
    pub fn check_subset(&self, ring: &FusionRing, sprime: &[usize]) -> Result<Vec<usize>, PrismError> {
        let mut s: Vec<usize> = sprime.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.first() != Some(&0) {
            return Err(PrismError::InvalidSubset("the unit must belong to S'".into()));
        }
        if let Some(&a) = s.iter().find(|a| !self.s_k.contains(a)) {
            return Err(PrismError::InvalidSubset(format!("`{}` is not in S_k", ring.label(a))));
        }
        if let Some((a, b, c, n)) = multiplicity_violation(ring, &s) {
            return Err(PrismError::InvalidSubset(format!(
                "N_{{{},{}}}^{{{}}} = {n} exceeds 1",
                ring.label(b),
                ring.label(c),
                ring.label(a)
            )));
        }
        Ok(s)
    }

    /// The first maximal candidate containing all of `must`.
    pub fn default_subset(&self, must: &[usize]) -> Option<Vec<usize>> {
        self.candidates.iter().find(|c| must.iter().all(|m| c.contains(m))).cloned()
    }
}

fn multiplicity_violation(ring: &FusionRing, s: &[usize]) -> Option<(usize, usize, usize, u32)> {
    for &a in s {
        for &b in s {
            for &c in s {
                let n = ring.n(b, c, a);
                if n > 1 {
                    return Some((a, b, c, n));
                }
            }
        }
    }
    None
}

/// Computes `S_k` and checks the localization hypotheses.
pub fn localization_sets(ring: &FusionRing, k: usize) -> Result<LocalizationInput, PrismError> {
    let fp = ring.fpdim_data()?;
    let dims = fp.exact.ok_or(PrismError::NotIntegral)?;
    let label = |i: usize| ring.label(i).to_string();
    if !ring.is_self_dual(k) {
        return Err(PrismError::Hypothesis(format!("`{}` is not self-dual", label(k))));
    }
    let mut s_k = Vec::new();
    for a in 0..ring.rank() {
        match ring.n(k, k, a) {
            0 => {}
            1 => s_k.push(a),
            n => {
                return Err(PrismError::Hypothesis(format!(
                    "N_{{{k},{k}}}^{{{a}}} = {n} exceeds 1",
                    k = label(k),
                    a = label(a)
                )))
            }
        }
    }
    if let Some(&a) = s_k.iter().find(|&&a| !ring.is_self_dual(a)) {
        return Err(PrismError::Hypothesis(format!("`{}` in S_k is not self-dual", label(a))));
    }
    if !s_k.contains(&k) {
        return Err(PrismError::Hypothesis(format!("`{}` does not occur in its own square", label(k))));
    }
    let candidates = maximal_candidates(ring, &s_k)?;
    Ok(LocalizationInput { k, s_k, candidates, dims })
}

fn maximal_candidates(ring: &FusionRing, s_k: &[usize]) -> Result<Vec<Vec<usize>>, PrismError> {
    let rest = &s_k[1..];
    if rest.len() > 20 {
        return Err(PrismError::InvalidSubset(format!("S_k has {} elements, too many to enumerate", s_k.len())));
    }
    let mut valid: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << rest.len()) {
        let mut s = vec![0];
        s.extend(rest.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &a)| a));
        if multiplicity_violation(ring, &s).is_none() {
            valid.push(s);
        }
    }
    let subset = |a: &Vec<usize>, b: &Vec<usize>| a.len() < b.len() && a.iter().all(|x| b.contains(x));
    let mut out: Vec<Vec<usize>> = valid.iter().filter(|a| !valid.iter().any(|b| subset(a, b))).cloned().collect();
    out.sort();
    Ok(out)
}

/// Value map for the unknowns of one localization: constants, forced zeros
/// and named variables.
pub(crate) struct Ctx<'a> {
    ring: &'a FusionRing,
    dims: &'a [u64],
    k: usize,
    tag: Tag,
}

impl<'a> Ctx<'a> {
    fn new(ring: &'a FusionRing, input: &'a LocalizationInput, tag: Tag) -> Self {
        Ctx::raw(ring, &input.dims, input.k, tag)
    }

    pub(crate) fn raw(ring: &'a FusionRing, dims: &'a [u64], k: usize, tag: Tag) -> Self {
        Ctx { ring, dims, k, tag }
    }

    fn d(&self, i: usize) -> BigRational {
        BigRational::from_integer(self.dims[i].into())
    }

    pub(crate) fn y(&self, a: usize, b: usize) -> Expr {
        if a == 0 || b == 0 {
            return Expr::constant(self.d(self.k).recip());
        }
        Expr::var(y_name(self.ring, self.tag, a, b))
    }

    fn x2(&self, a: usize, b: usize) -> Expr {
        self.x3(a, b, b)
    }

    /// `x(a,b,c)` depends only on the multiset `{a,b,c}`.
    pub(crate) fn x3(&self, a: usize, b: usize, c: usize) -> Expr {
        let mut m = [a, b, c];
        m.sort_unstable();
        if m[0] == 0 {
            if m[1] != m[2] {
                return Expr::zero();
            }
            return Expr::constant((self.d(m[1]) * self.d(self.k)).recip());
        }
        if self.ring.n(m[1], m[2], m[0]) == 0 {
            return Expr::zero();
        }
        let ks = m.iter().filter(|&&v| v == self.k).count();
        if ks >= 2 {
            let other = m.iter().copied().find(|&v| v != self.k).unwrap_or(self.k);
            return self.y(other, self.k).pow(2);
        }
        Expr::var(x_name(self.ring, self.tag, m))
    }

    /// `Σ_{i ∈ S} d_i f(i)`.
    fn sum(&self, s: &[usize], f: impl Fn(usize) -> Expr) -> Expr {
        s.iter().fold(Expr::zero(), |acc, &i| acc.add(&f(i).scale(&self.d(i))))
    }
}

pub fn y_name(ring: &FusionRing, tag: Tag, a: usize, b: usize) -> String {
    let (p, q) = (a.min(b), a.max(b));
    format!("y_{tag}[{},{}]", ring.label(p), ring.label(q))
}

/// Name of the variable standing for the multiset `m` (sorted): two
/// arguments, odd one first, when a label repeats, otherwise three.
pub fn x_name(ring: &FusionRing, tag: Tag, m: [usize; 3]) -> String {
    let l = |i: usize| ring.label(i);
    if m[0] == m[1] && m[1] == m[2] {
        format!("x_{tag}[{},{}]", l(m[0]), l(m[0]))
    } else if m[0] == m[1] {
        format!("x_{tag}[{},{}]", l(m[2]), l(m[0]))
    } else if m[1] == m[2] {
        format!("x_{tag}[{},{}]", l(m[0]), l(m[1]))
    } else {
        format!("x_{tag}[{},{},{}]", l(m[0]), l(m[1]), l(m[2]))
    }
}

/// A generated system with its variable legend and one note per equation.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalSystem {
    pub tag: Tag,
    pub vars: Vec<String>,
    /// Short names parallel to `vars` (`u0, v0, ...` or `w0, z0, ...`).
    pub aliases: Vec<String>,
    pub polys: Vec<Expr>,
    pub notes: Vec<String>,
}

impl LocalSystem {
    fn assemble(tag: Tag, preferred: Vec<String>, eqs: Vec<(Expr, String)>, dedupe: bool) -> Self {
        let mut polys = Vec::new();
        let mut notes = Vec::new();
        for (e, n) in eqs {
            if e.is_zero() || (dedupe && polys.contains(&e)) {
                continue;
            }
            polys.push(e);
            notes.push(n);
        }
        let used: BTreeSet<String> = polys.iter().flat_map(Expr::vars).collect();
        let mut vars: Vec<String> = Vec::new();
        for v in preferred {
            if used.contains(&v) && !vars.contains(&v) {
                vars.push(v);
            }
        }
        let mut rest: Vec<String> = used.into_iter().filter(|v| !vars.contains(v)).collect();
        rest.sort_by_key(|v| !v.starts_with('x'));
        vars.extend(rest);
        let (xp, yp) = tag.alias_prefixes();
        let (mut nx, mut ny) = (0, 0);
        let aliases = vars
            .iter()
            .map(|v| {
                if v.starts_with('x') {
                    nx += 1;
                    format!("{xp}{}", nx - 1)
                } else {
                    ny += 1;
                    format!("{yp}{}", ny - 1)
                }
            })
            .collect();
        LocalSystem {
            tag,
            vars,
            aliases,
            polys,
            notes,
        }
    }

    pub fn alias_of(&self, var: &str) -> Option<&str> {
        self.vars.iter().position(|v| v == var).map(|i| self.aliases[i].as_str())
    }

    /// Equations rewritten with the short aliases.
    pub fn aliased_polys(&self) -> Vec<Expr> {
        self.polys
            .iter()
            .map(|p| p.rename(|v| self.alias_of(v).unwrap_or(v).to_string()))
            .collect()
    }

    /// The equations over a grevlex ring on `vars` (or on the aliases).
    pub fn polynomials(&self, aliased: bool) -> Result<(Arc<PolyRing<Rationals>>, Vec<Polynomial<Rationals>>), PrismError> {
        let (names, polys) = if aliased {
            (&self.aliases, self.aliased_polys())
        } else {
            (&self.vars, self.polys.clone())
        };
        let ring = ring_over(names)?;
        let out = polys.iter().map(|p| p.to_polynomial(&ring)).collect::<Result<Vec<_>, _>>()?;
        Ok((ring, out))
    }

    /// The system in the text file format, legend and notes as comments.
    pub fn to_system(&self, aliased: bool) -> Result<System<Rationals>, PrismError> {
        let (ring, polys) = self.polynomials(aliased)?;
        let mut notes: Vec<String> = self.vars.iter().zip(&self.aliases).map(|(v, a)| format!("{a} = {v}")).collect();
        notes.extend(self.notes.iter().enumerate().map(|(i, n)| format!("eq {}: {n}", i + 1)));
        Ok(System::new(ring, polys).with_notes(notes))
    }
}

fn prepare(ring: &FusionRing, k: usize, sprime: &[usize]) -> Result<(LocalizationInput, Vec<usize>), PrismError> {
    let input = localization_sets(ring, k)?;
    let s = input.check_subset(ring, sprime)?;
    Ok((input, s))
}

/// The reduced system in the `x(i,b)`, `y(i,b)` unknowns.
pub fn generate_ek(ring: &FusionRing, k: usize, sprime: &[usize], tag: Tag) -> Result<LocalSystem, PrismError> {
    let (input, s) = prepare(ring, k, sprime)?;
    let cx = Ctx::new(ring, &input, tag);
    let sk = &input.s_k;
    let l = |i: usize| ring.label(i).to_string();
    let nonunit: Vec<usize> = s[1..].to_vec();
    let x_b: Vec<usize> = nonunit.iter().copied().filter(|&b| b != k).collect();

    let mut eqs = Vec::new();
    for (ai, &a) in s.iter().enumerate().skip(1) {
        for &b in &s[..=ai] {
            let sum = cx.sum(sk, |i| cx.y(i, a).mul(&cx.y(i, b)));
            let delta = if a == b { 1 } else { 0 };
            eqs.push((sum.scale(&cx.d(b)).sub(&Expr::int(delta)), format!("orthogonality a={} b={}", l(a), l(b))));
        }
    }
    for &a in &nonunit {
        for &b in &nonunit {
            let sum = cx.sum(sk, |i| cx.y(i, a).mul(&cx.y(i, b).pow(2)));
            eqs.push((sum.sub(&cx.x2(a, b)), format!("cubic a={} b={}", l(a), l(b))));
        }
    }
    for &b in &x_b {
        for &a in &s {
            let sum = cx.sum(sk, |i| cx.y(i, a).mul(&cx.x2(i, b)));
            eqs.push((sum.sub(&cx.y(a, b).pow(2)), format!("mixed a={} b={}", l(a), l(b))));
        }
    }
    Ok(LocalSystem::assemble(tag, preferred_order(ring, &input, &s, tag), eqs, false))
}

fn preferred_order(ring: &FusionRing, input: &LocalizationInput, s: &[usize], tag: Tag) -> Vec<String> {
    let k = input.k;
    let mut out = Vec::new();
    for &b in s.iter().skip(1).filter(|&&b| b != k) {
        for &i in input.s_k.iter().skip(1) {
            out.push(x_name(ring, tag, {
                let mut m = [i, b, b];
                m.sort_unstable();
                m
            }));
        }
    }
    for &i in input.s_k.iter().skip(1) {
        for &b in s.iter().skip(1) {
            out.push(y_name(ring, tag, i, b));
        }
    }
    out
}

/// Every instance over `S'^3` of the two three-index families, with zero and
/// duplicate equations removed.
pub fn generate_full(ring: &FusionRing, k: usize, sprime: &[usize], tag: Tag) -> Result<LocalSystem, PrismError> {
    let (input, s) = prepare(ring, k, sprime)?;
    let cx = Ctx::new(ring, &input, tag);
    let sk = &input.s_k;
    let l = |i: usize| ring.label(i).to_string();
    let mut eqs = Vec::new();
    for &a in &s {
        for &b in &s {
            for &c in &s {
                let args = format!("a={} b={} c={}", l(a), l(b), l(c));
                let t = cx.sum(sk, |i| cx.y(i, a).mul(&cx.y(i, b)).mul(&cx.y(i, c)));
                eqs.push((t.sub(&cx.x3(a, b, c)), format!("triple {args}")));
                let m = cx.sum(sk, |i| cx.y(i, a).mul(&cx.x3(i, b, c)));
                eqs.push((m.sub(&cx.y(a, b).mul(&cx.y(a, c))), format!("mixed-triple {args}")));
            }
        }
    }
    Ok(LocalSystem::assemble(tag, preferred_order(ring, &input, &s, tag), eqs, true))
}

/// Indices of `generate_full` equations coming from instances with `b = c`
/// or `c` the unit, the ones the reduced system is derived from.
pub fn is_reduced_instance(note: &str, ring: &FusionRing) -> bool {
    let arg = |key: &str| note.split_whitespace().find_map(|w| w.strip_prefix(key)).map(str::to_string);
    match (arg("b="), arg("c=")) {
        (Some(b), Some(c)) => b == c || c == ring.label(0),
        _ => false,
    }
}

/// The equation tying the `x` unknowns of `k` to the `y` unknowns of `l`:
/// `Σ_{i ∈ S_k ∩ S_l} d_i y_l(i,l) x_k(i,l) - x_k(l,l)`.
pub fn extra_link(ring: &FusionRing, k: usize, l: usize) -> Result<Expr, PrismError> {
    if k == l {
        return Err(PrismError::Hypothesis("the two localizing objects must differ".into()));
    }
    let ik = localization_sets(ring, k)?;
    let il = localization_sets(ring, l)?;
    if !ik.s_k.contains(&l) {
        return Err(PrismError::Hypothesis(format!("`{}` is not in S_{}", ring.label(l), ring.label(k))));
    }
    let ck = Ctx::new(ring, &ik, Tag::K);
    let cl = Ctx::new(ring, &il, Tag::L);
    let common: Vec<usize> = ik.s_k.iter().copied().filter(|i| il.s_k.contains(i)).collect();
    let sum = ck.sum(&common, |i| cl.y(i, l).mul(&ck.x2(i, l)));
    Ok(sum.sub(&ck.x2(l, l)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The combined ideal is trivial: no categorification.
    Excluded,
    NotExcluded,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoParallelOutcome {
    pub verdict: Verdict,
    pub field: String,
    pub sprime_k: Vec<String>,
    pub sprime_l: Vec<String>,
    pub vars_k: usize,
    pub vars_l: usize,
    pub equations_k: usize,
    pub equations_l: usize,
    pub basis_k: usize,
    pub basis_l: usize,
    pub final_basis: Vec<String>,
    pub timings_ms: StageTimings,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct StageTimings {
    pub basis_k: u64,
    pub basis_l: u64,
    pub combined: u64,
}

/// Resolved inputs of the two-subsystem pipeline.
#[derive(Clone, Debug)]
pub struct TwoParallelPlan {
    pub k: usize,
    pub l: usize,
    pub e_k: LocalSystem,
    pub e_l: LocalSystem,
    pub link: Expr,
    pub sprime_k: Vec<usize>,
    pub sprime_l: Vec<usize>,
}

/// Generates both subsystems and the link. Missing subsets default to the
/// first maximal candidate containing the required objects.
pub fn two_parallel_plan(
    ring: &FusionRing,
    k: usize,
    l: usize,
    sprime_k: Option<&[usize]>,
    sprime_l: Option<&[usize]>,
) -> Result<TwoParallelPlan, PrismError> {
    let link = extra_link(ring, k, l)?;
    let ik = localization_sets(ring, k)?;
    let il = localization_sets(ring, l)?;
    let pick = |input: &LocalizationInput, given: Option<&[usize]>, must: &[usize]| match given {
        Some(s) => input.check_subset(ring, s),
        None => input.default_subset(must).ok_or_else(|| {
            let names: Vec<&str> = must.iter().map(|&m| ring.label(m)).collect();
            PrismError::InvalidSubset(format!("no multiplicity-free subset contains {}", names.join(", ")))
        }),
    };
    let sk = pick(&ik, sprime_k, &[k, l])?;
    if !sk.contains(&l) {
        return Err(PrismError::InvalidSubset(format!("S'_k must contain `{}`", ring.label(l))));
    }
    let sl = pick(&il, sprime_l, &[l])?;
    Ok(TwoParallelPlan {
        k,
        l,
        e_k: generate_ek(ring, k, &sk, Tag::K)?,
        e_l: generate_ek(ring, l, &sl, Tag::L)?,
        link,
        sprime_k: sk,
        sprime_l: sl,
    })
}

/// Groebner bases of both subsystems (in parallel), then of their union
/// with the link. The verdict is `Excluded` iff the final basis is `{1}`.
pub fn two_parallel(ring: &FusionRing, plan: &TwoParallelPlan, field: FieldSpec, cfg: &GbConfig) -> Result<TwoParallelOutcome, PrismError> {
    let (rk, pk) = plan.e_k.polynomials(false)?;
    let (rl, pl) = plan.e_l.polynomials(false)?;
    let mut all_vars = plan.e_k.vars.clone();
    all_vars.extend(plan.e_l.vars.iter().cloned());
    for v in plan.link.vars() {
        if !all_vars.contains(&v) {
            all_vars.push(v);
        }
    }
    let rc = ring_over(&all_vars)?;
    let link = plan.link.to_polynomial(&rc)?;
    let stages = match field {
        FieldSpec::Rationals => run_stages(&rk, &pk, &rl, &pl, &rc, link, cfg)?,
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p)?;
            let (rk, pk) = specialize(&pk, f)?;
            let (rl, pl) = specialize(&pl, f)?;
            let (rc, link) = specialize(&[link], f)?;
            run_stages(&rk, &pk, &rl, &pl, &rc, link.into_iter().next().expect("one polynomial"), cfg)?
        }
    };
    let names = |s: &[usize]| s.iter().map(|&i| ring.label(i).to_string()).collect();
    Ok(TwoParallelOutcome {
        verdict: if stages.trivial { Verdict::Excluded } else { Verdict::NotExcluded },
        field: field.to_string(),
        sprime_k: names(&plan.sprime_k),
        sprime_l: names(&plan.sprime_l),
        vars_k: plan.e_k.vars.len(),
        vars_l: plan.e_l.vars.len(),
        equations_k: plan.e_k.polys.len(),
        equations_l: plan.e_l.polys.len(),
        basis_k: stages.basis_k,
        basis_l: stages.basis_l,
        final_basis: stages.final_basis,
        timings_ms: stages.timings,
    })
}

struct Stages {
    trivial: bool,
    basis_k: usize,
    basis_l: usize,
    final_basis: Vec<String>,
    timings: StageTimings,
}

fn timed_gb<F: Field>(ring: &Arc<PolyRing<F>>, polys: &[Polynomial<F>], cfg: &GbConfig) -> (Result<GroebnerBasis<F>, polyforge::PolyError>, u64) {
    let t = Instant::now();
    let gb = groebner(ring, polys, cfg);
    (gb, t.elapsed().as_millis() as u64)
}

fn run_stages<F: Field>(
    rk: &Arc<PolyRing<F>>,
    pk: &[Polynomial<F>],
    rl: &Arc<PolyRing<F>>,
    pl: &[Polynomial<F>],
    rc: &Arc<PolyRing<F>>,
    link: Polynomial<F>,
    cfg: &GbConfig,
) -> Result<Stages, PrismError> {
    let ((gk, tk), (gl, tl)) = rayon::join(|| timed_gb(rk, pk, cfg), || timed_gb(rl, pl, cfg));
    let (gk, gl) = (gk?, gl?);
    let mut combined = Vec::with_capacity(gk.len() + gl.len() + 1);
    for p in gk.polys().iter().chain(gl.polys()) {
        combined.push(p.embed(rc)?);
    }
    combined.push(link);
    let (gc, tc) = timed_gb(rc, &combined, cfg);
    let gc = gc?;
    Ok(Stages {
        trivial: gc.is_trivial(),
        basis_k: gk.len(),
        basis_l: gl.len(),
        final_basis: gc.polys().iter().map(|p| p.to_string()).collect(),
        timings: StageTimings {
            basis_k: tk,
            basis_l: tl,
            combined: tc,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn rep_s3_sets() {
        let r = catalog("RepS3").unwrap();
        let input = localization_sets(&r, 2).unwrap();
        assert_eq!(input.s_k, vec![0, 1, 2]);
        assert_eq!(input.candidates, vec![vec![0, 1, 2]]);
        assert!(matches!(localization_sets(&catalog("Fib").unwrap(), 1), Err(PrismError::NotIntegral)));
        assert!(matches!(localization_sets(&catalog("Z2").unwrap(), 1), Err(PrismError::Hypothesis(_))));
    }

    #[test]
    fn x_names_follow_multiset() {
        let fib = catalog("Fib").unwrap();
        assert_eq!(x_name(&fib, Tag::K, [0, 1, 1]), "x_k[1,tau]");
        assert_eq!(x_name(&fib, Tag::L, [1, 1, 1]), "x_l[tau,tau]");
        assert_eq!(y_name(&fib, Tag::K, 1, 0), "y_k[1,tau]");
    }
}
