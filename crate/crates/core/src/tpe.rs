//! Triangular prism equations in the multiplicity-free, self-dual regime
//! with both Frobenius-Schur type indicators fixed to 1.
//!
//! A tetrahedron has vertices `α, β, γ, δ` (0..4) and edges
//! `e1={α,δ}, e2={α,γ}, e3={α,β}, e4={β,δ}, e5={β,γ}, e6={γ,δ}`.
//! Equations are emitted as `right-hand side - left-hand side`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::PrismError;
use crate::expr::Expr;
use crate::localizer::{Ctx, Tag};
use crate::ring::FusionRing;

/// Endpoints of each edge.
pub const EDGES: [(usize, usize); 6] = [(0, 3), (0, 2), (0, 1), (1, 3), (1, 2), (2, 3)];

/// Edges meeting at each vertex.
pub const STARS: [[usize; 3]; 4] = [[0, 1, 2], [2, 3, 4], [1, 4, 5], [0, 3, 5]];

/// Edge pairs with no common vertex.
pub const OPPOSITE: [(usize, usize); 3] = [(0, 4), (1, 3), (2, 5)];

fn edge_of(u: usize, v: usize) -> usize {
    EDGES
        .iter()
        .position(|&(a, b)| (a, b) == (u.min(v), u.max(v)))
        .expect("distinct vertices span an edge")
}

fn is_even(p: &[usize; 4]) -> bool {
    let mut inv = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

/// The 12 edge permutations induced by even vertex permutations. An edge
/// tuple transforms as `new[σ[e]] = old[e]`.
pub fn a4_edge_perms() -> Vec<[usize; 6]> {
    let mut out = Vec::with_capacity(12);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().any(|&v| std::mem::replace(&mut seen[v], true)) || !is_even(&p) {
                        continue;
                    }
                    let mut sigma = [0; 6];
                    for (e, &(u, v)) in EDGES.iter().enumerate() {
                        sigma[e] = edge_of(p[u], p[v]);
                    }
                    out.push(sigma);
                }
            }
        }
    }
    out
}

pub fn apply(sigma: &[usize; 6], edges: &[usize; 6]) -> [usize; 6] {
    let mut out = [0; 6];
    for e in 0..6 {
        out[sigma[e]] = edges[e];
    }
    out
}

/// A tetrahedron labelled by basis indices in edge order `e1..e6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TetraKey(pub [usize; 6]);

impl TetraKey {
    /// Distinct edge tuples in the orbit.
    pub fn orbit(&self) -> Vec<[usize; 6]> {
        let mut out: Vec<[usize; 6]> = a4_edge_perms().iter().map(|s| apply(s, &self.0)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Lexicographically least tuple in the orbit.
    pub fn canonical(&self) -> TetraKey {
        TetraKey(self.orbit()[0])
    }

    pub fn name(&self, ring: &FusionRing) -> String {
        let labels: Vec<&str> = self.0.iter().map(|&i| ring.label(i)).collect();
        format!("t[{}]", labels.join(","))
    }
}

fn fusion_one(ring: &FusionRing, a: usize, b: usize, c: usize) -> Result<bool, PrismError> {
    match ring.n(a, b, c) {
        0 => Ok(false),
        1 => Ok(true),
        n => Err(PrismError::Multiplicity {
            a: ring.label(a).into(),
            b: ring.label(b).into(),
            c: ring.label(c).into(),
            n,
        }),
    }
}

fn self_dual(ring: &FusionRing, labels: &[usize]) -> Result<(), PrismError> {
    match labels.iter().find(|&&i| !ring.is_self_dual(i)) {
        Some(&i) => Err(PrismError::NotSelfDual(ring.label(i).into())),
        None => Ok(()),
    }
}

/// Canonical form and admissibility (every vertex star fuses with
/// coefficient 1).
pub fn tetra_canonical(ring: &FusionRing, edges: [usize; 6]) -> Result<(TetraKey, bool), PrismError> {
    self_dual(ring, &edges)?;
    let mut ok = true;
    for s in STARS {
        ok &= fusion_one(ring, edges[s[0]], edges[s[1]], edges[s[2]])?;
    }
    Ok((TetraKey(edges).canonical(), ok))
}

/// Labels `X1..X9` of a triangular prism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TpConfig(pub [usize; 9]);

impl TpConfig {
    pub fn x(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Vertex triples that must each fuse with coefficient 1.
    pub fn vertex_triples(&self) -> [[usize; 3]; 6] {
        let x = |i| self.x(i);
        [
            [x(4), x(1), x(6)],
            [x(5), x(2), x(4)],
            [x(6), x(3), x(5)],
            [x(9), x(1), x(7)],
            [x(7), x(2), x(8)],
            [x(8), x(3), x(9)],
        ]
    }

    pub fn is_admissible(&self, ring: &FusionRing) -> Result<bool, PrismError> {
        let mut ok = true;
        for [a, b, c] in self.vertex_triples() {
            ok &= fusion_one(ring, a, b, c)?;
        }
        Ok(ok)
    }

    /// The prism rotation `(X1 X2 X3)(X4 X5 X6)(X7 X8 X9)`.
    pub fn rotate(&self) -> TpConfig {
        let x = &self.0;
        TpConfig([x[1], x[2], x[0], x[4], x[5], x[3], x[7], x[8], x[6]])
    }

    /// Least configuration in the rotation orbit.
    pub fn rotation_canonical(&self) -> TpConfig {
        let r1 = self.rotate();
        let r2 = r1.rotate();
        *[*self, r1, r2].iter().min().unwrap()
    }

    pub fn labels(&self, ring: &FusionRing) -> Vec<String> {
        self.0.iter().map(|&i| ring.label(i).to_string()).collect()
    }

    pub fn parse(ring: &FusionRing, csv: &str) -> Result<TpConfig, PrismError> {
        let v = ring.parse_labels(csv)?;
        let arr: [usize; 9] = v
            .try_into()
            .map_err(|v: Vec<usize>| PrismError::Usage(format!("a prism configuration has 9 labels, got {}", v.len())))?;
        Ok(TpConfig(arr))
    }
}

/// How tetrahedra become polynomial unknowns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdMap {
    /// Every tetrahedron but the all-unit one (which is 1) is the variable
    /// named by its canonical tuple. This assumes a gauge in which
    /// tetrahedra are fully A4 invariant. With
    /// `symbolic_dims` the dimension of each non-unit `X` is the unknown
    /// `d[X]`; otherwise the ring must be integral.
    Symmetric { symbolic_dims: bool },
    /// Tetrahedra are read as the `x`/`y` unknowns of the localizations at
    /// `k` (and `l`), and tetrahedra with a unit edge are evaluated.
    Localization { k: usize, l: Option<usize> },
}

impl IdMap {
    pub fn symmetric() -> Self {
        IdMap::Symmetric { symbolic_dims: false }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TpeEquation {
    pub config: TpConfig,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl TpeEquation {
    /// `rhs - lhs`.
    pub fn poly(&self) -> Expr {
        self.rhs.sub(&self.lhs)
    }

    pub fn is_tautology(&self) -> bool {
        self.poly().is_zero()
    }
}

impl fmt::Display for TpeEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

struct Evaluator<'a> {
    ring: &'a FusionRing,
    idmap: IdMap,
    dims: Option<Vec<u64>>,
}

impl<'a> Evaluator<'a> {
    fn new(ring: &'a FusionRing, idmap: IdMap) -> Result<Self, PrismError> {
        let dims = match idmap {
            IdMap::Symmetric { symbolic_dims: true } => None,
            _ => Some(ring.fpdim_data()?.exact.ok_or(PrismError::NotIntegral)?),
        };
        Ok(Evaluator { ring, idmap, dims })
    }

    fn dim(&self, x: usize) -> Expr {
        match &self.dims {
            Some(d) => Expr::int(d[x] as i64),
            None if x == 0 => Expr::int(1),
            None => Expr::var(format!("d[{}]", self.ring.label(x))),
        }
    }

    fn miss(&self, edges: &[usize; 6], why: &str) -> PrismError {
        let labels: Vec<&str> = edges.iter().map(|&i| self.ring.label(i)).collect();
        PrismError::IdMapMiss(format!("({}): {why}", labels.join(",")))
    }

    fn tag(&self, s: usize, edges: &[usize; 6]) -> Result<(Tag, usize), PrismError> {
        match self.idmap {
            IdMap::Localization { k, .. } if s == k => Ok((Tag::K, k)),
            IdMap::Localization { l: Some(l), .. } if s == l => Ok((Tag::L, l)),
            _ => Err(self.miss(edges, "the surrounding label is neither k nor l")),
        }
    }

    /// Value of `coeff * Π tetras`.
    fn product(&self, coeff: Expr, tetras: &[[usize; 6]]) -> Result<Expr, PrismError> {
        let mut admissible = true;
        for t in tetras {
            admissible &= tetra_canonical(self.ring, *t)?.1;
        }
        if !admissible {
            return Ok(Expr::zero());
        }
        match self.idmap {
            // The all-unit tetrahedron is normalized to 1.
            IdMap::Symmetric { .. } => Ok(tetras
                .iter()
                .filter(|t| t.iter().any(|&e| e != 0))
                .fold(coeff, |acc, t| acc.mul(&Expr::var(TetraKey(*t).canonical().name(self.ring))))),
            IdMap::Localization { .. } => self.localized(coeff, tetras),
        }
    }

    fn localized(&self, coeff: Expr, tetras: &[[usize; 6]]) -> Result<Expr, PrismError> {
        let dims = self.dims.as_ref().expect("integral");
        let mut radicand = BigInt::from(1);
        let mut value = coeff;
        let mut halves: BTreeMap<(Tag, usize, [usize; 3]), usize> = BTreeMap::new();
        for t in tetras {
            if let Some(e) = (0..6).find(|&e| t[e] == 0) {
                let (u, v) = EDGES[e];
                let others = |w: usize| -> Vec<usize> {
                    STARS[w].iter().copied().filter(|&f| f != e).map(|f| t[f]).collect()
                };
                let (ou, ov) = (others(u), others(v));
                if ou[0] != ou[1] || ov[0] != ov[1] {
                    return Ok(Expr::zero());
                }
                radicand *= dims[ou[0]] * dims[ov[0]];
                continue;
            }
            if let Some((p, q, s)) = OPPOSITE.iter().find_map(|&(a, b)| {
                let rest: Vec<usize> = (0..6).filter(|&e| e != a && e != b).map(|e| t[e]).collect();
                rest.iter().all(|&r| r == rest[0]).then_some((t[a], t[b], rest[0]))
            }) {
                let (tag, k) = self.tag(s, t)?;
                value = value.mul(&Ctx::raw(self.ring, dims, k, tag).y(p, q));
                continue;
            }
            let star = (0..4).find_map(|w| {
                let face: Vec<usize> = (0..6).filter(|e| !STARS[w].contains(e)).map(|e| t[e]).collect();
                (face.iter().all(|&f| f == face[0])).then(|| {
                    let mut m = STARS[w].map(|e| t[e]);
                    m.sort_unstable();
                    (m, face[0])
                })
            });
            match star {
                Some((m, s)) => {
                    let (tag, k) = self.tag(s, t)?;
                    *halves.entry((tag, k, m)).or_default() += 1;
                }
                None => return Err(self.miss(t, "no localization variable has this shape")),
            }
        }
        for ((tag, k, m), count) in halves {
            if count % 2 == 1 {
                let labels: Vec<&str> = m.iter().map(|&i| self.ring.label(i)).collect();
                return Err(PrismError::IdMapMiss(format!("unpaired half of x({})", labels.join(","))));
            }
            let x = Ctx::raw(self.ring, dims, k, tag).x3(m[0], m[1], m[2]);
            value = value.mul(&x.pow(count as u32 / 2));
        }
        let root = radicand.sqrt();
        if &root * &root != radicand {
            return Err(PrismError::IdMapMiss(format!("unit-edge factor sqrt({radicand}) is irrational")));
        }
        Ok(value.scale(&BigRational::from_integer(root).recip()))
    }
}

/// The prism equation of one configuration.
pub fn tpe_equation(ring: &FusionRing, config: &TpConfig, idmap: IdMap) -> Result<TpeEquation, PrismError> {
    equation_with(&Evaluator::new(ring, idmap)?, config)
}

fn equation_with(ev: &Evaluator, config: &TpConfig) -> Result<TpeEquation, PrismError> {
    let ring = ev.ring;
    self_dual(ring, &config.0)?;
    let x = |i| config.x(i);
    let lhs = if fusion_one(ring, x(2), x(3), x(1))? {
        ev.product(
            Expr::int(1),
            &[[x(1), x(2), x(3), x(6), x(5), x(4)], [x(3), x(2), x(1), x(9), x(7), x(8)]],
        )?
    } else {
        Expr::zero()
    };
    let mut rhs = Expr::zero();
    for o in 0..ring.rank() {
        let pairs = [(x(4), x(7)), (x(5), x(8)), (x(6), x(9))];
        if pairs.iter().any(|&(a, b)| ring.n(a, b, o) == 0) {
            continue;
        }
        for &(a, b) in &pairs {
            fusion_one(ring, a, b, o)?;
        }
        self_dual(ring, &[o])?;
        let term = ev.product(
            ev.dim(o),
            &[
                [x(9), o, x(6), x(1), x(4), x(7)],
                [x(7), o, x(4), x(2), x(5), x(8)],
                [x(8), o, x(5), x(3), x(6), x(9)],
            ],
        )?;
        rhs = rhs.add(&term);
    }
    Ok(TpeEquation { config: *config, lhs, rhs })
}

/// Deduplicated prism equations over a label subset.
#[derive(Clone, Debug)]
pub struct TpeSystem {
    /// Admissible configurations (before rotation).
    pub admissible: usize,
    /// Rotation classes of admissible configurations.
    pub classes: usize,
    pub tautologies: usize,
    pub equations: Vec<TpeEquation>,
}

impl TpeSystem {
    pub fn polys(&self) -> Vec<Expr> {
        self.equations.iter().map(TpeEquation::poly).collect()
    }

    /// All unknowns, sorted.
    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self.equations.iter().flat_map(|e| e.poly().vars()).collect();
        v.sort();
        v.dedup();
        v
    }
}

/// Enumerates admissible configurations with labels in `labels`, keeps one
/// per rotation class and drops tautologies and repeated polynomials.
pub fn tpe_system(ring: &FusionRing, labels: &[usize], idmap: IdMap) -> Result<TpeSystem, PrismError> {
    let n = labels.len();
    let total = n.checked_pow(9).filter(|&t| t <= 50_000_000).ok_or_else(|| {
        PrismError::Usage(format!("{n} labels give too many prism configurations"))
    })?;
    let ev = Evaluator::new(ring, idmap)?;
    let configs: Vec<TpConfig> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut c = [0; 9];
            for slot in c.iter_mut().rev() {
                *slot = labels[code % n];
                code /= n;
            }
            let cfg = TpConfig(c);
            match cfg.is_admissible(ring) {
                Ok(true) => Some(Ok(cfg)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect::<Result<_, _>>()?;
    let mut reps: Vec<TpConfig> = configs.iter().filter(|c| c.rotation_canonical() == **c).copied().collect();
    reps.sort();
    let eqs: Vec<TpeEquation> = reps.par_iter().map(|c| equation_with(&ev, c)).collect::<Result<_, _>>()?;
    let mut out: Vec<TpeEquation> = Vec::new();
    let mut tautologies = 0;
    for e in eqs {
        let p = e.poly();
        if p.is_zero() {
            tautologies += 1;
        } else if !out.iter().any(|o| o.poly() == p) {
            out.push(e);
        }
    }
    Ok(TpeSystem {
        admissible: configs.len(),
        classes: reps.len(),
        tautologies,
        equations: out,
    })
}

/// The three configuration families used with the localization map:
/// `(a,b,c,k,k,k,k,k,k)`, `(k,k,a,b,k,k,c,k,k)` over `S'^3`, and the
/// linking configuration `(k,k,l,k,l,l,k,l,l)` when `l` is given.
pub fn localization_families(sprime: &[usize], k: usize, l: Option<usize>) -> (Vec<TpConfig>, Vec<TpConfig>, Option<TpConfig>) {
    let mut triple = Vec::new();
    let mut mixed = Vec::new();
    for &a in sprime {
        for &b in sprime {
            for &c in sprime {
                triple.push(TpConfig([a, b, c, k, k, k, k, k, k]));
                mixed.push(TpConfig([k, k, a, b, k, k, c, k, k]));
            }
        }
    }
    let link = l.map(|l| TpConfig([k, k, l, k, l, l, k, l, l]));
    (triple, mixed, link)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_distinct_perms() {
        let mut p = a4_edge_perms();
        assert_eq!(p.len(), 12);
        p.sort();
        p.dedup();
        assert_eq!(p.len(), 12);
    }

    #[test]
    fn three_cycle_example() {
        let a = TetraKey([1, 2, 3, 0, 0, 0]);
        let b = TetraKey([3, 1, 2, 0, 0, 0]);
        assert_eq!(a.canonical(), b.canonical());
    }
}
