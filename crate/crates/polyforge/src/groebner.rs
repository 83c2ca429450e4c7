//! Buchberger's algorithm with the Gebauer-Moeller pair update, plus the
//! ideal predicates built on top of a reduced basis.

use std::any::Any;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::PolyError;
use crate::field::{Field, PrimeField, Rationals};
use crate::modular;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::zpoly::{self, ZPoly};

use num_bigint::BigInt;

/// Budgets and switches for a Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbConfig {
    /// Maximum number of S-pairs taken off the queue.
    pub max_pairs: u64,
    /// Maximum number of term-level operations during reduction.
    pub max_term_ops: u64,
    /// Verify the basis after the run.
    pub self_check: bool,
    /// How bases over the rationals are computed.
    pub strategy: GbStrategy,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_pairs: 1_000_000,
            max_term_ops: 100_000_000,
            self_check: true,
            strategy: GbStrategy::Auto,
        }
    }
}

/// Computation strategy for rational coefficients. Prime fields always run
/// Buchberger directly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GbStrategy {
    /// Direct Buchberger under a small budget, then multi-modular if the
    /// budget runs out.
    #[default]
    Auto,
    /// Buchberger with exact rational arithmetic throughout.
    Direct,
    /// Reconstruct from bases modulo word-sized primes, then verify over Q.
    Modular,
}

impl std::str::FromStr for GbStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(GbStrategy::Auto),
            "direct" => Ok(GbStrategy::Direct),
            "modular" => Ok(GbStrategy::Modular),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

/// Counters reported alongside a basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_considered: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub term_ops: u64,
    /// Primes used by the multi-modular strategy (0 for a direct run).
    pub primes: u32,
}

impl GbStats {
    pub(crate) fn absorb(&mut self, other: &GbStats) {
        self.pairs_considered += other.pairs_considered;
        self.pairs_reduced += other.pairs_reduced;
        self.zero_reductions += other.zero_reductions;
        self.term_ops += other.term_ops;
    }
}

/// Size of `k[x]/I` as a vector space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuotientDim::Finite(n) => write!(f, "{n}"),
            QuotientDim::Infinite => write!(f, "infinite"),
        }
    }
}

/// A reduced Groebner basis: monic, inter-reduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<PolyRing<F>>,
    polys: Vec<Polynomial<F>>,
    stats: GbStats,
}

struct Budget {
    cfg: GbConfig,
    stats: GbStats,
}

impl Budget {
    fn unlimited() -> Self {
        Budget {
            cfg: GbConfig {
                max_pairs: u64::MAX,
                max_term_ops: u64::MAX,
                self_check: false,
                strategy: GbStrategy::Direct,
            },
            stats: GbStats::default(),
        }
    }

    #[inline]
    fn spend_terms(&mut self, n: usize) -> Result<(), PolyError> {
        self.stats.term_ops += n as u64;
        if self.stats.term_ops > self.cfg.max_term_ops {
            return Err(PolyError::ResourceCap {
                what: "term operation",
                limit: self.cfg.max_term_ops,
            });
        }
        Ok(())
    }
}

/// Full reduction of `f` modulo `divisors`. Only polynomials whose flag in
/// `active` is set are used (all of them when `active` is `None`).
fn reduce_with<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    active: Option<&[bool]>,
    budget: &mut Budget,
) -> Result<Polynomial<F>, PolyError> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut rest = f.clone();
    let mut out: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((lm, lc)) = rest.terms().first().cloned() {
        let hit = divisors
            .iter()
            .enumerate()
            .filter(|(i, g)| active.map_or(true, |a| a[*i]) && g.leading_monomial().is_some_and(|m| m.divides(&lm)))
            .min_by_key(|(i, g)| (g.len(), *i));
        match hit {
            Some((_, g)) => {
                let q = g.leading_monomial().unwrap().quotient_of(&lm).unwrap();
                let c = field.div(&lc, g.leading_coeff().unwrap());
                budget.spend_terms(g.len() + rest.len())?;
                rest = rest.sub(&g.mul_term(&q, &c))?;
            }
            None => {
                let mut terms = rest.into_terms();
                let head = terms.remove(0);
                out.push(head);
                rest = Polynomial::from_sorted_unchecked(&ring, terms);
            }
        }
    }
    Ok(Polynomial::from_sorted_unchecked(&ring, out))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, lcm: &Monomial) -> Polynomial<F> {
    let field = f.ring().field();
    let mf = f.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let mg = g.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let a = f.mul_term(&mf, &field.inv(f.leading_coeff().unwrap()));
    let b = g.mul_term(&mg, &field.inv(g.leading_coeff().unwrap()));
    a.sub(&b).expect("same ring")
}

fn pair_cmp(order: MonomialOrder, a: &Pair, b: &Pair) -> Ordering {
    a.sugar
        .cmp(&b.sugar)
        .then_with(|| order.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

/// Deterministic canonical ordering for input generators.
fn canonical_sort<F: Field>(polys: &mut [Polynomial<F>]) {
    let order = polys.first().map(|p| p.ring().order()).unwrap_or_default();
    polys.sort_by(|a, b| {
        let (ta, tb) = (a.terms(), b.terms());
        for (x, y) in ta.iter().zip(tb.iter()) {
            let c = order.cmp(&x.0, &y.0);
            if c != Ordering::Equal {
                return c;
            }
        }
        ta.len()
            .cmp(&tb.len())
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
}

/// Computes the reduced Groebner basis of the ideal generated by `input`,
/// choosing the engine according to `cfg.strategy`.
pub fn groebner<F: Field>(
    ring: &Arc<PolyRing<F>>,
    input: &[Polynomial<F>],
    cfg: &GbConfig,
) -> Result<GroebnerBasis<F>, PolyError> {
    if cfg.strategy == GbStrategy::Direct {
        return buchberger(ring, input, cfg);
    }
    let Some(qring) = (ring as &dyn Any).downcast_ref::<Arc<PolyRing<Rationals>>>() else {
        return buchberger(ring, input, cfg);
    };
    let qin: Vec<Polynomial<Rationals>> = input
        .iter()
        .map(|p| (p as &dyn Any).downcast_ref::<Polynomial<Rationals>>().cloned())
        .collect::<Option<_>>()
        .expect("rational polynomials");
    let gb = if cfg.strategy == GbStrategy::Auto {
        let trial = GbConfig {
            max_term_ops: cfg.max_term_ops.min(DIRECT_TRIAL_TERM_OPS),
            ..*cfg
        };
        match buchberger(qring, &qin, &trial) {
            Err(PolyError::ResourceCap { .. }) => modular::modular_groebner(qring, &qin, cfg)?,
            other => other?,
        }
    } else {
        modular::modular_groebner(qring, &qin, cfg)?
    };
    let boxed: Box<dyn Any> = Box::new(gb);
    Ok(*boxed.downcast::<GroebnerBasis<F>>().expect("same field"))
}

/// Term budget for the exact attempt made by [`GbStrategy::Auto`].
const DIRECT_TRIAL_TERM_OPS: u64 = 200_000;

/// Buchberger's algorithm over the ring's own field.
pub fn buchberger<F: Field>(
    ring: &Arc<PolyRing<F>>,
    input: &[Polynomial<F>],
    cfg: &GbConfig,
) -> Result<GroebnerBasis<F>, PolyError> {
    for p in input {
        if **p.ring() != **ring {
            return Err(PolyError::RingMismatch);
        }
    }
    let mut gens: Vec<Polynomial<F>> = input.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    canonical_sort(&mut gens);
    gens.dedup();

    let mut budget = Budget {
        cfg: *cfg,
        stats: GbStats::default(),
    };
    // Over Q the run works on primitive integer polynomials, which avoids a
    // gcd after every coefficient operation.
    let polys = if let Some(qring) = (ring as &dyn Any).downcast_ref::<Arc<PolyRing<Rationals>>>() {
        let dom = IntegerDomain {
            order: ring.order(),
            nvars: ring.nvars(),
        };
        let zgens = gens
            .iter()
            .map(|p| ZPoly::from_rational((p as &dyn Any).downcast_ref::<Polynomial<Rationals>>().unwrap()))
            .collect();
        let zs = run(&dom, zgens, &mut budget)?;
        let qs: Vec<Polynomial<Rationals>> = zs.iter().map(|z| z.to_rational(qring)).collect();
        let boxed: Box<dyn Any> = Box::new(qs);
        *boxed.downcast::<Vec<Polynomial<F>>>().unwrap()
    } else {
        run(&FieldDomain { ring: ring.clone() }, gens, &mut budget)?
    };
    finish(ring, polys, budget, input, cfg)
}

/// The coefficient arithmetic a Buchberger run needs. Elements handed back
/// by `spoly` and `reduce` are normalized (monic or primitive).
trait Domain {
    type P: Clone;
    fn order(&self) -> MonomialOrder;
    fn lm<'a>(&self, p: &'a Self::P) -> Option<&'a Monomial>;
    fn spoly(&self, f: &Self::P, g: &Self::P, lcm: &Monomial) -> Self::P;
    fn reduce(&self, f: &Self::P, divisors: &[Self::P], active: Option<&[bool]>, budget: &mut Budget) -> Result<Self::P, PolyError>;
    fn one(&self) -> Self::P;
}

struct FieldDomain<F: Field> {
    ring: Arc<PolyRing<F>>,
}

impl<F: Field> Domain for FieldDomain<F> {
    type P = Polynomial<F>;
    fn order(&self) -> MonomialOrder {
        self.ring.order()
    }
    fn lm<'a>(&self, p: &'a Polynomial<F>) -> Option<&'a Monomial> {
        p.leading_monomial()
    }
    fn spoly(&self, f: &Polynomial<F>, g: &Polynomial<F>, lcm: &Monomial) -> Polynomial<F> {
        spoly(f, g, lcm)
    }
    fn reduce(&self, f: &Polynomial<F>, divisors: &[Polynomial<F>], active: Option<&[bool]>, budget: &mut Budget) -> Result<Polynomial<F>, PolyError> {
        Ok(reduce_with(f, divisors, active, budget)?.monic())
    }
    fn one(&self) -> Polynomial<F> {
        Polynomial::one(&self.ring)
    }
}

struct IntegerDomain {
    order: MonomialOrder,
    nvars: usize,
}

impl Domain for IntegerDomain {
    type P = ZPoly;
    fn order(&self) -> MonomialOrder {
        self.order
    }
    fn lm<'a>(&self, p: &'a ZPoly) -> Option<&'a Monomial> {
        p.lm()
    }
    fn spoly(&self, f: &ZPoly, g: &ZPoly, lcm: &Monomial) -> ZPoly {
        zpoly::spoly(self.order, f, g, lcm)
    }
    fn reduce(&self, f: &ZPoly, divisors: &[ZPoly], active: Option<&[bool]>, budget: &mut Budget) -> Result<ZPoly, PolyError> {
        let room = budget.cfg.max_term_ops.saturating_sub(budget.stats.term_ops);
        match zpoly::reduce(self.order, f, divisors, active, room) {
            Ok((z, spent)) => {
                budget.stats.term_ops += spent;
                Ok(z)
            }
            Err(spent) => {
                budget.stats.term_ops += spent;
                Err(PolyError::ResourceCap {
                    what: "term operation",
                    limit: budget.cfg.max_term_ops,
                })
            }
        }
    }
    fn one(&self) -> ZPoly {
        ZPoly {
            terms: vec![(Monomial::one(self.nvars), BigInt::from(1))],
        }
    }
}

fn run<D: Domain>(
    dom: &D,
    gens: Vec<D::P>,
    budget: &mut Budget,
) -> Result<Vec<D::P>, PolyError> {
    let order = dom.order();
    let cfg = budget.cfg;
    let mut basis: Vec<D::P> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let lm = |p: &D::P| dom.lm(p).unwrap().clone();
    let insert = |h: D::P, s: u32, basis: &mut Vec<D::P>, sugar: &mut Vec<u32>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| {
        let t = basis.len();
        let lh = lm(&h);
        // New pairs (g, h). A pair is dropped when another new pair's lcm
        // divides its own; of several equal lcms only one survives.
        let cand: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&i| active[i])
            .map(|i| {
                let lg = lm(&basis[i]);
                (i, lg.lcm(&lh), lg.is_coprime(&lh))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (i, l, coprime)) in cand.iter().enumerate() {
            let dominated = cand[k + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if *coprime || !dominated {
                kept.push((*i, l.clone(), *coprime));
            }
        }
        // Chain criterion on the old pairs.
        pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = lm(&basis[p.i]).lcm(&lh);
            let lj = lm(&basis[p.j]).lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        // Product criterion on the new ones.
        for (i, l, coprime) in kept {
            if coprime {
                continue;
            }
            let si = sugar[i] + l.degree() - lm(&basis[i]).degree();
            let sh = s + l.degree() - lh.degree();
            pairs.push(Pair {
                i,
                j: t,
                lcm: l,
                sugar: si.max(sh),
            });
        }
        for i in 0..t {
            if active[i] && lh.divides(dom.lm(&basis[i]).unwrap()) {
                active[i] = false;
            }
        }
        basis.push(h);
        sugar.push(s);
        active.push(true);
    };

    for g in gens {
        let s = dom.lm(&g).map_or(0, |m| m.degree());
        insert(g, s, &mut basis, &mut sugar, &mut active, &mut pairs);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| pair_cmp(order, &pairs[a], &pairs[b]))
            .unwrap();
        let pair = pairs.swap_remove(best);
        budget.stats.pairs_considered += 1;
        if budget.stats.pairs_considered > cfg.max_pairs {
            return Err(PolyError::ResourceCap {
                what: "S-pair",
                limit: cfg.max_pairs,
            });
        }
        let s = dom.spoly(&basis[pair.i], &basis[pair.j], &pair.lcm);
        budget.stats.pairs_reduced += 1;
        let h = dom.reduce(&s, &basis, Some(&active), budget)?;
        let Some(lh) = dom.lm(&h) else {
            budget.stats.zero_reductions += 1;
            continue;
        };
        if lh.is_one() {
            return Ok(vec![dom.one()]);
        }
        insert(h, pair.sugar, &mut basis, &mut sugar, &mut active, &mut pairs);
    }

    let kept: Vec<D::P> = basis
        .into_iter()
        .zip(active)
        .filter_map(|(p, a)| a.then_some(p))
        .collect();
    interreduce(dom, kept, budget)
}

/// Turns a minimal-up-to-tails basis into the reduced one, sorted by
/// increasing leading monomial.
fn interreduce<D: Domain>(dom: &D, mut polys: Vec<D::P>, budget: &mut Budget) -> Result<Vec<D::P>, PolyError> {
    let order = dom.order();
    polys.sort_by(|a, b| order.cmp(dom.lm(a).unwrap(), dom.lm(b).unwrap()));
    // Drop anything whose leading monomial is divisible by another one.
    let mut minimal: Vec<D::P> = Vec::new();
    for p in polys {
        let m = dom.lm(&p).unwrap();
        if !minimal.iter().any(|q| dom.lm(q).unwrap().divides(m)) {
            minimal.push(p);
        }
    }
    // Reducing by the unreduced peers is enough: leading terms never change,
    // so the remainders are free of every leading monomial.
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let mut flags = vec![true; minimal.len()];
        flags[k] = false;
        out.push(dom.reduce(&minimal[k], &minimal, Some(&flags), budget)?);
    }
    Ok(out)
}

fn finish<F: Field>(
    ring: &Arc<PolyRing<F>>,
    polys: Vec<Polynomial<F>>,
    budget: Budget,
    input: &[Polynomial<F>],
    cfg: &GbConfig,
) -> Result<GroebnerBasis<F>, PolyError> {
    let gb = GroebnerBasis {
        ring: ring.clone(),
        polys,
        stats: budget.stats,
    };
    if cfg.self_check {
        gb.verify(input)?;
    }
    Ok(gb)
}

impl<F: Field> GroebnerBasis<F> {
    pub(crate) fn from_parts(ring: Arc<PolyRing<F>>, polys: Vec<Polynomial<F>>, stats: GbStats) -> Self {
        GroebnerBasis { ring, polys, stats }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>, PolyError> {
        if **f.ring() != *self.ring {
            return Err(PolyError::RingMismatch);
        }
        reduce_with(f, &self.polys, None, &mut Budget::unlimited())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether the ideal is the whole ring.
    pub fn is_trivial(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    /// Number of standard monomials, i.e. the dimension of the quotient ring.
    pub fn quotient_dimension(&self) -> QuotientDim {
        let n = self.ring.nvars();
        let lms: Vec<&Monomial> = self.polys.iter().filter_map(|p| p.leading_monomial()).collect();
        let mut bound = vec![u32::MAX; n];
        for m in &lms {
            if let Some((i, e)) = m.pure_power() {
                bound[i] = bound[i].min(e);
            }
            if m.is_one() {
                return QuotientDim::Finite(0);
            }
        }
        if bound.iter().any(|&b| b == u32::MAX) {
            return QuotientDim::Infinite;
        }
        let mut exps = vec![0u32; n];
        QuotientDim::Finite(count_standard(&lms, &bound, &mut exps, 0))
    }

    /// The standard monomials themselves, or `None` if there are infinitely
    /// many.
    pub fn staircase(&self) -> Option<Vec<Monomial>> {
        if let QuotientDim::Infinite = self.quotient_dimension() {
            return None;
        }
        let n = self.ring.nvars();
        let lms: Vec<&Monomial> = self.polys.iter().filter_map(|p| p.leading_monomial()).collect();
        if lms.iter().any(|m| m.is_one()) {
            return Some(vec![]);
        }
        let mut bound = vec![u32::MAX; n];
        for m in &lms {
            if let Some((i, e)) = m.pure_power() {
                bound[i] = bound[i].min(e);
            }
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        collect_standard(&lms, &bound, &mut exps, 0, &mut out);
        let order = self.ring.order();
        out.sort_by(|a, b| order.cmp(a, b));
        Some(out)
    }

    /// Checks the defining properties of a reduced basis of `<input>`.
    pub fn verify(&self, input: &[Polynomial<F>]) -> Result<(), PolyError> {
        for g in input {
            if !self.normal_form(g)?.is_zero() {
                return Err(PolyError::SelfCheck(format!("generator {g} does not reduce to 0")));
            }
        }
        let field = self.ring.field();
        for (k, g) in self.polys.iter().enumerate() {
            if !field.is_one(g.leading_coeff().ok_or_else(|| PolyError::SelfCheck("zero element".into()))?) {
                return Err(PolyError::SelfCheck(format!("{g} is not monic")));
            }
            for (k2, h) in self.polys.iter().enumerate() {
                if k == k2 {
                    continue;
                }
                let lh = h.leading_monomial().unwrap();
                if g.terms().iter().any(|(m, _)| lh.divides(m)) {
                    return Err(PolyError::SelfCheck(format!("{g} is reducible by {h}")));
                }
            }
        }
        let mut budget = Budget::unlimited();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let (a, b) = (&self.polys[i], &self.polys[j]);
                let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
                if la.is_coprime(lb) {
                    continue;
                }
                let s = spoly(a, b, &la.lcm(lb));
                if !reduce_with(&s, &self.polys, None, &mut budget)?.is_zero() {
                    return Err(PolyError::SelfCheck(format!("S-pair ({i},{j}) does not reduce to 0")));
                }
            }
        }
        Ok(())
    }

    /// Whether two bases (of the same ring) describe the same ideal.
    pub fn same_ideal(&self, other: &GroebnerBasis<F>) -> Result<bool, PolyError> {
        if *self.ring != *other.ring {
            return Err(PolyError::RingMismatch);
        }
        Ok(self.polys == other.polys)
    }
}

fn divisible_by_any(lms: &[&Monomial], exps: &[u32]) -> bool {
    lms.iter()
        .any(|m| m.exps().iter().zip(exps.iter()).all(|(a, b)| a <= b))
}

fn count_standard(lms: &[&Monomial], bound: &[u32], exps: &mut Vec<u32>, var: usize) -> u64 {
    if var == exps.len() {
        return 1;
    }
    let mut total = 0;
    for e in 0..bound[var] {
        exps[var] = e;
        // Divisibility is monotone in each exponent, so stop at the first hit
        // with all later variables at zero.
        if divisible_by_any(lms, exps) {
            break;
        }
        total += count_standard(lms, bound, exps, var + 1);
    }
    exps[var] = 0;
    total
}

fn collect_standard(lms: &[&Monomial], bound: &[u32], exps: &mut Vec<u32>, var: usize, out: &mut Vec<Monomial>) {
    if var == exps.len() {
        out.push(Monomial::from_exps(exps.clone()));
        return;
    }
    for e in 0..bound[var] {
        exps[var] = e;
        if divisible_by_any(lms, exps) {
            break;
        }
        collect_standard(lms, bound, exps, var + 1, out);
    }
    exps[var] = 0;
}

/// Whether `a` and `b` generate the same ideal. Both systems must live in the
/// same ring (use [`Polynomial::embed`] to align variable names first).
pub fn ideal_equal<F: Field>(
    ring: &Arc<PolyRing<F>>,
    a: &[Polynomial<F>],
    b: &[Polynomial<F>],
    cfg: &GbConfig,
) -> Result<bool, PolyError> {
    // Generator lists that agree up to order and unit multiples need no basis.
    let monic_set = |s: &[Polynomial<F>]| {
        let mut v: Vec<String> = s.iter().filter(|p| !p.is_zero()).map(|p| p.monic().to_string()).collect();
        v.sort();
        v.dedup();
        v
    };
    if a.iter().chain(b).all(|p| **p.ring() == **ring) && monic_set(a) == monic_set(b) {
        return Ok(true);
    }
    let ga = groebner(ring, a, cfg)?;
    let gb = groebner(ring, b, cfg)?;
    for p in a {
        if !gb.contains(p)? {
            return Ok(false);
        }
    }
    for p in b {
        if !ga.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maps a rational system into `GF(p)`.
pub fn specialize(
    polys: &[Polynomial<Rationals>],
    field: PrimeField,
) -> Result<(Arc<PolyRing<PrimeField>>, Vec<Polynomial<PrimeField>>), PolyError> {
    let src = polys.first().ok_or(PolyError::NoVariables)?.ring().clone();
    let target = src.with_field(field);
    let out = polys
        .iter()
        .map(|p| p.map_coeffs(&target, |c| field.from_rational(c)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((target, out))
}

/// Sorted, deduplicated set of leading monomials, handy for diagnostics.
pub fn leading_monomials<F: Field>(gb: &GroebnerBasis<F>) -> BTreeSet<Vec<u32>> {
    gb.polys
        .iter()
        .filter_map(|p| p.leading_monomial().map(|m| m.exps().to_vec()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn ring(vars: &[&str], order: MonomialOrder) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vars.iter().map(|s| s.to_string()).collect(), order).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn unit_ideal_detected() {
        let r = ring(&["x"], MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        let gens = vec![x.add(&Polynomial::one(&r)).unwrap(), x.pow(2)];
        let gb = buchberger(&r, &gens, &GbConfig::default()).unwrap();
        assert!(gb.is_trivial());
        assert_eq!(gb.polys()[0].to_string(), "1");
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(0));
    }

    #[test]
    fn single_generator_is_made_monic() {
        let r = ring(&["d"], MonomialOrder::Grevlex);
        let d = Polynomial::var(&r, 0);
        let f = d.pow(2).sub(&d).unwrap().sub(&Polynomial::one(&r)).unwrap().scale(&q(3, 1));
        let gb = buchberger(&r, &[f], &GbConfig::default()).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.polys()[0].to_string(), "d^2 - d - 1");
        assert!(!gb.is_trivial());
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(2));
    }

    #[test]
    fn circle_meets_diagonal_in_lex() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let circle = x.pow(2).add(&y.pow(2)).unwrap().sub(&Polynomial::one(&r)).unwrap();
        let diag = x.sub(&y).unwrap();
        let gb = buchberger(&r, &[circle, diag], &GbConfig::default()).unwrap();
        let shown: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["y^2 - 1/2", "x - y"]);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"], MonomialOrder::Lex);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let gb = buchberger(&r, &[x.sub(&y).unwrap()], &GbConfig::default()).unwrap();
        assert_eq!(gb.normal_form(&x.pow(2)).unwrap(), y.pow(2));

        let gx = buchberger(&r, &[x.clone()], &GbConfig::default()).unwrap();
        let one = Polynomial::one(&r);
        assert_eq!(gx.normal_form(&one).unwrap(), one);
    }

    #[test]
    fn empty_system_is_zero_ideal() {
        let r = ring(&["x", "y"], MonomialOrder::Grevlex);
        let gb = buchberger(&r, &[], &GbConfig::default()).unwrap();
        assert!(!gb.is_trivial());
        assert!(gb.is_empty());
        assert_eq!(gb.quotient_dimension(), QuotientDim::Infinite);
    }

    #[test]
    fn quotient_dimensions() {
        let r = ring(&["x", "y"], MonomialOrder::Grevlex);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let one = Polynomial::one(&r);
        let gb = buchberger(&r, &[x.pow(2).sub(&one).unwrap()], &GbConfig::default()).unwrap();
        assert_eq!(gb.quotient_dimension(), QuotientDim::Infinite);
        let r1 = ring(&["x"], MonomialOrder::Grevlex);
        let x1 = Polynomial::var(&r1, 0);
        let gb1 = buchberger(&r1, &[x1.pow(2).sub(&Polynomial::one(&r1)).unwrap()], &GbConfig::default()).unwrap();
        assert_eq!(gb1.quotient_dimension(), QuotientDim::Finite(2));
        let gxy = buchberger(&r, &[x.mul(&y).unwrap()], &GbConfig::default()).unwrap();
        assert_eq!(gxy.quotient_dimension(), QuotientDim::Infinite);
        // x^2, y^2 and xy: standard monomials 1, x, y
        let g3 = buchberger(&r, &[x.pow(2), y.pow(2), x.mul(&y).unwrap()], &GbConfig::default()).unwrap();
        assert_eq!(g3.quotient_dimension(), QuotientDim::Finite(3));
        assert_eq!(g3.staircase().unwrap().len(), 3);
    }

    #[test]
    fn unit_multiples_generate_the_same_ideal() {
        let r = ring(&["x"], MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        let cfg = GbConfig::default();
        assert!(ideal_equal(&r, &[x.clone()], &[x.scale(&q(2, 1))], &cfg).unwrap());
        assert!(!ideal_equal(&r, &[x.clone()], &[x.pow(2)], &cfg).unwrap());
    }

    #[test]
    fn resource_cap_is_an_error() {
        let r = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
        let (x, y, z) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
        // cyclic-3
        let gens = vec![
            x.add(&y).unwrap().add(&z).unwrap(),
            x.mul(&y).unwrap().add(&y.mul(&z).unwrap()).unwrap().add(&z.mul(&x).unwrap()).unwrap(),
            x.mul(&y).unwrap().mul(&z).unwrap().sub(&Polynomial::one(&r)).unwrap(),
        ];
        let cfg = GbConfig {
            max_pairs: 1,
            ..GbConfig::default()
        };
        assert!(matches!(
            buchberger(&r, &gens, &cfg),
            Err(PolyError::ResourceCap { what: "S-pair", .. })
        ));
        let tight = GbConfig {
            max_term_ops: 5,
            ..GbConfig::default()
        };
        assert!(matches!(
            buchberger(&r, &gens, &tight),
            Err(PolyError::ResourceCap { what: "term operation", .. })
        ));
        let gb = buchberger(&r, &gens, &GbConfig::default()).unwrap();
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(6));
    }

    #[test]
    fn specialize_into_prime_fields() {
        let r = ring(&["x"], MonomialOrder::Grevlex);
        let p = Polynomial::var(&r, 0).sub(&Polynomial::constant(&r, q(1, 5))).unwrap();
        let (_, out) = specialize(&[p.clone()], PrimeField::new(7).unwrap()).unwrap();
        assert_eq!(out[0].to_string(), "x + 4");
        assert!(matches!(
            specialize(&[p], PrimeField::new(5).unwrap()),
            Err(PolyError::NonInvertibleConstant { p: 5, .. })
        ));
    }
}
