//! The zero and one spectrum criteria.
//!
//! Both criteria look for nine basis indices `i1..i9` for which one side of a
//! pentagon equation is forced to be a nonzero product while the other side
//! vanishes. The search binds indices in the order `(i4, i1, i6)`,
//! `(i5, i2)`, `i3`, `(i7, i9)`, `i8`, walking only through nonzero fusion
//! coefficients, and evaluates every side condition as soon as its indices
//! are bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::ring::FusionRing;

/// Nine basis indices; `self.0[j - 1]` is `i_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Nonet(pub [usize; 9]);

impl Nonet {
    /// `i_j` for `j` in `1..=9`.
    #[inline]
    pub fn i(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    pub fn labels(&self, ring: &FusionRing) -> Vec<String> {
        self.0.iter().map(|&i| ring.label(i).to_string()).collect()
    }

    pub fn parse(ring: &FusionRing, csv: &str) -> Result<Nonet, crate::PrismError> {
        let v = ring.parse_labels(csv)?;
        let arr: [usize; 9] = v
            .try_into()
            .map_err(|v: Vec<usize>| crate::PrismError::Usage(format!("expected 9 labels, got {}", v.len())))?;
        Ok(Nonet(arr))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Zero,
    One,
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zero" => Ok(Kind::Zero),
            "one" => Ok(Kind::One),
            other => Err(format!("unknown criterion `{other}`")),
        }
    }
}

/// Bitmask of `{k : N_{i,j}^k > 0}` for every pair `(i, j)`.
struct Supports {
    words: usize,
    rank: usize,
    bits: Vec<u64>,
}

impl Supports {
    fn new(ring: &FusionRing) -> Self {
        let r = ring.rank();
        let words = r.div_ceil(64);
        let mut bits = vec![0u64; r * r * words];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if ring.n(i, j, k) > 0 {
                        bits[(i * r + j) * words + k / 64] |= 1 << (k % 64);
                    }
                }
            }
        }
        Supports { words, rank: r, bits }
    }

    #[inline]
    fn row(&self, i: usize, j: usize) -> &[u64] {
        let o = (i * self.rank + j) * self.words;
        &self.bits[o..o + self.words]
    }

    /// Members of the intersection of three rows.
    fn meet3(&self, a: (usize, usize), b: (usize, usize), c: (usize, usize)) -> Vec<usize> {
        let (ra, rb, rc) = (self.row(a.0, a.1), self.row(b.0, b.1), self.row(c.0, c.1));
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut m = ra[w] & rb[w] & rc[w];
            while m != 0 {
                out.push(w * 64 + m.trailing_zeros() as usize);
                m &= m - 1;
            }
        }
        out
    }
}

/// The spectrum `{k : N_{i4,i7}^k, N_{i5*,i8}^k, N_{i6,i9*}^k > 0}`.
pub fn pe_spectrum(ring: &FusionRing, i4: usize, i5: usize, i6: usize, i7: usize, i8: usize, i9: usize) -> Vec<usize> {
    (0..ring.rank())
        .filter(|&k| ring.n(i4, i7, k) > 0 && ring.n(ring.star(i5), i8, k) > 0 && ring.n(i6, ring.star(i9), k) > 0)
        .collect()
}

/// `sum_k N_{a,b}^k N_{c,d}^k`.
#[inline]
fn pair_sum(ring: &FusionRing, a: usize, b: usize, c: usize, d: usize) -> u32 {
    (0..ring.rank()).map(|k| ring.n(a, b, k) * ring.n(c, d, k)).sum()
}

/// Index (1-based) of the first of three sums equal to one.
fn first_unit(sums: [u32; 3]) -> Option<usize> {
    sums.iter().position(|&s| s == 1).map(|p| p + 1)
}

/// A disjunctive condition and the alternative that held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disjunct {
    pub condition: &'static str,
    pub alternative: usize,
}

/// A nonet satisfying one of the criteria.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: Kind,
    pub nonet: Nonet,
    /// The unique spectrum element of a one spectrum witness.
    pub i0: Option<usize>,
    pub disjuncts: Vec<Disjunct>,
    /// The six premise coefficients in the order of [`PREMISES`].
    pub premises: [u32; 6],
}

impl Witness {
    fn sort_key(&self) -> (Nonet, Option<usize>) {
        (self.nonet, self.i0)
    }

    /// JSON with labels in place of indices.
    pub fn to_json(&self, ring: &FusionRing) -> serde_json::Value {
        let mut v = serde_json::json!({
            "kind": self.kind,
            "nonet": self.nonet.labels(ring),
            "disjuncts": self.disjuncts,
            "premises": PREMISES.iter().zip(self.premises).map(|(p, n)| serde_json::json!({"coefficient": p, "value": n})).collect::<Vec<_>>(),
        });
        if let Some(s) = self.i0 {
            v["i0"] = ring.label(s).into();
        }
        v
    }
}

/// The six coefficients that must be nonzero in both criteria.
pub const PREMISES: [&str; 6] = [
    "N_{i4,i1}^{i6}",
    "N_{i5,i4}^{i2}",
    "N_{i5,i6}^{i3}",
    "N_{i7,i9}^{i1}",
    "N_{i2,i7}^{i8}",
    "N_{i8,i9}^{i3}",
];

fn premises(ring: &FusionRing, x: &Nonet) -> [u32; 6] {
    let i = |j| x.i(j);
    [
        ring.n(i(4), i(1), i(6)),
        ring.n(i(5), i(4), i(2)),
        ring.n(i(5), i(6), i(3)),
        ring.n(i(7), i(9), i(1)),
        ring.n(i(2), i(7), i(8)),
        ring.n(i(8), i(9), i(3)),
    ]
}

fn zero_factor_a(ring: &FusionRing, x: &Nonet) -> [u32; 3] {
    let i = |j| x.i(j);
    let s = |j| ring.star(x.i(j));
    [
        pair_sum(ring, i(5), i(4), i(3), s(1)),
        pair_sum(ring, i(2), s(4), i(3), s(6)),
        pair_sum(ring, s(5), i(2), i(6), s(1)),
    ]
}

fn zero_factor_b(ring: &FusionRing, x: &Nonet) -> [u32; 3] {
    let i = |j| x.i(j);
    let s = |j| ring.star(x.i(j));
    [
        pair_sum(ring, i(2), i(7), i(3), s(9)),
        pair_sum(ring, i(8), s(7), i(3), s(1)),
        pair_sum(ring, s(2), i(8), i(1), s(9)),
    ]
}

fn one_factors(ring: &FusionRing, x: &Nonet, o: usize) -> [[u32; 3]; 3] {
    let i = |j| x.i(j);
    let s = |j| ring.star(x.i(j));
    let os = ring.star(o);
    [
        [
            pair_sum(ring, i(5), i(4), i(8), s(7)),
            pair_sum(ring, i(2), s(4), i(8), os),
            pair_sum(ring, s(5), i(2), o, s(7)),
        ],
        [
            pair_sum(ring, i(5), o, i(3), s(9)),
            pair_sum(ring, i(8), os, i(3), s(6)),
            pair_sum(ring, s(5), i(8), i(6), s(9)),
        ],
        [
            pair_sum(ring, i(4), i(7), i(6), s(9)),
            pair_sum(ring, o, s(7), i(6), s(1)),
            pair_sum(ring, s(4), o, i(1), s(9)),
        ],
    ]
}

/// Outcome of checking a single nonet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub passed: bool,
    /// The first condition that failed.
    pub failure: Option<String>,
    pub premises: [u32; 6],
    pub disjuncts: Vec<Disjunct>,
}

impl CheckReport {
    fn fail(premises: [u32; 6], msg: String) -> Self {
        CheckReport {
            passed: false,
            failure: Some(msg),
            premises,
            disjuncts: Vec::new(),
        }
    }
}

fn check_premises(ring: &FusionRing, x: &Nonet) -> Result<[u32; 6], CheckReport> {
    let p = premises(ring, x);
    match p.iter().position(|&v| v == 0) {
        Some(k) => Err(CheckReport::fail(p, format!("premise {} is zero", PREMISES[k]))),
        None => Ok(p),
    }
}

/// Checks every hypothesis of the zero spectrum criterion on `x`.
pub fn zero_witness_check(ring: &FusionRing, x: &Nonet) -> CheckReport {
    let p = match check_premises(ring, x) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let i = |j| x.i(j);
    let spec = pe_spectrum(ring, i(4), i(5), i(6), i(7), i(8), i(9));
    if !spec.is_empty() {
        let names: Vec<&str> = spec.iter().map(|&k| ring.label(k)).collect();
        return CheckReport::fail(p, format!("empty-spectrum: spectrum is {{{}}}", names.join(", ")));
    }
    let c = ring.n(i(2), i(1), i(3));
    if c != 1 {
        return CheckReport::fail(p, format!("coefficient: N_{{i2,i1}}^{{i3}} = {c}, not 1"));
    }
    let mut disjuncts = Vec::new();
    for (name, sums) in [("factor-a", zero_factor_a(ring, x)), ("factor-b", zero_factor_b(ring, x))] {
        match first_unit(sums) {
            Some(alt) => disjuncts.push(Disjunct {
                condition: name,
                alternative: alt,
            }),
            None => return CheckReport::fail(p, format!("{name}: no alternative equals 1 (sums {sums:?})")),
        }
    }
    CheckReport {
        passed: true,
        failure: None,
        premises: p,
        disjuncts,
    }
}

/// Checks every hypothesis of the one spectrum criterion on `x` with
/// spectrum element `o`.
pub fn one_witness_check(ring: &FusionRing, x: &Nonet, o: usize) -> CheckReport {
    let p = match check_premises(ring, x) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let i = |j| x.i(j);
    let spec = pe_spectrum(ring, i(4), i(5), i(6), i(7), i(8), i(9));
    let mult = [ring.n(i(4), i(7), o), ring.n(ring.star(i(5)), i(8), o), ring.n(i(6), ring.star(i(9)), o)];
    if spec != [o] || mult != [1, 1, 1] {
        let names: Vec<&str> = spec.iter().map(|&k| ring.label(k)).collect();
        return CheckReport::fail(
            p,
            format!(
                "single-spectrum: spectrum is {{{}}} with multiplicities {mult:?} at {}",
                names.join(", "),
                ring.label(o)
            ),
        );
    }
    let c = ring.n(i(2), i(1), i(3));
    if c != 0 {
        return CheckReport::fail(p, format!("vanishing-coefficient: N_{{i2,i1}}^{{i3}} = {c}, not 0"));
    }
    let mut disjuncts = Vec::new();
    for (name, sums) in ["factor-a", "factor-b", "factor-c"].into_iter().zip(one_factors(ring, x, o)) {
        match first_unit(sums) {
            Some(alt) => disjuncts.push(Disjunct {
                condition: name,
                alternative: alt,
            }),
            None => return CheckReport::fail(p, format!("{name}: no alternative equals 1 (sums {sums:?})")),
        }
    }
    CheckReport {
        passed: true,
        failure: None,
        premises: p,
        disjuncts,
    }
}

/// Precomputed support lists shared by all search workers.
struct Plan<'a> {
    ring: &'a FusionRing,
    sup: Supports,
    /// All `(a, b, c)` with `N_{a,b}^c > 0`, in lexicographic order.
    triples: Vec<(usize, usize, usize)>,
    /// `left[b]` lists `(a, c)` with `N_{a,b}^c > 0`.
    left: Vec<Vec<(usize, usize)>>,
    /// `into[c]` lists `(a, b)` with `N_{a,b}^c > 0`.
    into: Vec<Vec<(usize, usize)>>,
    /// `fuse[a * r + b]` lists `c` with `N_{a,b}^c > 0`.
    fuse: Vec<Vec<usize>>,
}

impl<'a> Plan<'a> {
    fn new(ring: &'a FusionRing) -> Self {
        let r = ring.rank();
        let mut triples = Vec::new();
        let mut left = vec![Vec::new(); r];
        let mut into = vec![Vec::new(); r];
        let mut fuse = vec![Vec::new(); r * r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    if ring.n(a, b, c) > 0 {
                        triples.push((a, b, c));
                        left[b].push((a, c));
                        into[c].push((a, b));
                        fuse[a * r + b].push(c);
                    }
                }
            }
        }
        Plan {
            ring,
            sup: Supports::new(ring),
            triples,
            left,
            into,
            fuse,
        }
    }

    /// Visits every nonet whose six premises hold and whose outer triple is
    /// `(i4, i1, i6)`. `early` sees the nonet with `i7..i9` unset once `i3`
    /// is bound and may veto the subtree.
    fn walk(
        &self,
        (i4, i1, i6): (usize, usize, usize),
        early: &mut dyn FnMut(&Nonet) -> bool,
        visit: &mut dyn FnMut(&Nonet),
    ) {
        let r = self.ring.rank();
        let mut x = Nonet([0; 9]);
        x.0[3] = i4;
        x.0[0] = i1;
        x.0[5] = i6;
        for &(i5, i2) in &self.left[i4] {
            x.0[4] = i5;
            x.0[1] = i2;
            for &i3 in &self.fuse[i5 * r + i6] {
                x.0[2] = i3;
                if !early(&x) {
                    continue;
                }
                for &(i7, i9) in &self.into[i1] {
                    x.0[6] = i7;
                    x.0[8] = i9;
                    for &i8 in &self.fuse[i2 * r + i7] {
                        if self.ring.n(i8, i9, i3) == 0 {
                            continue;
                        }
                        x.0[7] = i8;
                        visit(&x);
                    }
                }
            }
        }
    }

    fn spectrum(&self, x: &Nonet) -> Vec<usize> {
        let s = |j| self.ring.star(x.i(j));
        self.sup.meet3((x.i(4), x.i(7)), (s(5), x.i(8)), (x.i(6), s(9)))
    }

    /// Witnesses under one outer triple, in increasing order.
    fn search_triple(&self, t: (usize, usize, usize), kind: Kind, all: bool) -> Vec<Witness> {
        let ring = self.ring;
        let mut found: Vec<Witness> = Vec::new();
        let mut early = |x: &Nonet| {
            let c = ring.n(x.i(2), x.i(1), x.i(3));
            match kind {
                Kind::Zero => c == 1 && first_unit(zero_factor_a(ring, x)).is_some(),
                Kind::One => c == 0,
            }
        };
        let mut visit = |x: &Nonet| {
            if !all && found.first().is_some_and(|w| w.nonet <= *x) {
                return;
            }
            let spec = self.spectrum(x);
            let report = match kind {
                Kind::Zero if spec.is_empty() => zero_witness_check(ring, x),
                Kind::One if spec.len() == 1 => one_witness_check(ring, x, spec[0]),
                _ => return,
            };
            if report.passed {
                let w = Witness {
                    kind,
                    nonet: *x,
                    i0: (kind == Kind::One).then(|| spec[0]),
                    disjuncts: report.disjuncts,
                    premises: report.premises,
                };
                if all {
                    found.push(w);
                } else {
                    found = vec![w];
                }
            }
        };
        self.walk(t, &mut early, &mut visit);
        found.sort_by_key(Witness::sort_key);
        found
    }
}

/// Options for [`criterion_search`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchConfig {
    /// Return every witness instead of the first.
    pub all_witnesses: bool,
}

/// Searches for witnesses of the given criterion. Without
/// `all_witnesses` the result holds at most the lexicographically first
/// witness (ordered by `i1, ..., i9`). Work is spread over the ambient rayon
/// pool; the answer does not depend on the number of threads.
pub fn criterion_search(ring: &FusionRing, kind: Kind, cfg: SearchConfig) -> Vec<Witness> {
    let plan = Plan::new(ring);
    let per_triple: Vec<Vec<Witness>> = plan
        .triples
        .par_iter()
        .map(|&t| plan.search_triple(t, kind, cfg.all_witnesses))
        .collect();
    let mut all: Vec<Witness> = per_triple.into_iter().flatten().collect();
    all.sort_by_key(Witness::sort_key);
    if !cfg.all_witnesses {
        all.truncate(1);
    }
    all
}

/// Every nonet whose six premises are nonzero, as enumerated by the search.
pub fn premise_nonets(ring: &FusionRing) -> Vec<Nonet> {
    let plan = Plan::new(ring);
    let mut out = Vec::new();
    for &t in &plan.triples {
        plan.walk(t, &mut |_| true, &mut |x| out.push(*x));
    }
    out
}

/// Plain nested loops over all `r^9` nonets (and `i0` for the one spectrum
/// criterion). Reference implementation for tests.
pub fn brute_force(ring: &FusionRing, kind: Kind, first_only: bool) -> Vec<Witness> {
    let r = ring.rank();
    let mut out = Vec::new();
    let total = r.pow(9);
    for code in 0..total {
        let mut x = [0usize; 9];
        let mut c = code;
        for slot in x.iter_mut().rev() {
            *slot = c % r;
            c /= r;
        }
        let x = Nonet(x);
        let hits: Vec<(Option<usize>, CheckReport)> = match kind {
            Kind::Zero => vec![(None, zero_witness_check(ring, &x))],
            Kind::One => (0..r).map(|o| (Some(o), one_witness_check(ring, &x, o))).collect(),
        };
        for (i0, rep) in hits {
            if rep.passed {
                out.push(Witness {
                    kind,
                    nonet: x,
                    i0,
                    disjuncts: rep.disjuncts,
                    premises: rep.premises,
                });
                if first_only {
                    return out;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn fibonacci_spectrum_of_all_tau() {
        let fib = catalog("Fib").unwrap();
        assert_eq!(pe_spectrum(&fib, 1, 1, 1, 1, 1, 1), vec![0, 1]);
    }

    #[test]
    fn trivial_spectrum() {
        let t = catalog("trivial").unwrap();
        assert_eq!(pe_spectrum(&t, 0, 0, 0, 0, 0, 0), vec![0]);
        assert!(!one_witness_check(&t, &Nonet([0; 9]), 0).passed);
    }

    #[test]
    fn search_matches_brute_force_on_ising() {
        let ring = catalog("Ising").unwrap();
        for kind in [Kind::Zero, Kind::One] {
            let fast = criterion_search(&ring, kind, SearchConfig { all_witnesses: true });
            assert_eq!(fast, brute_force(&ring, kind, false));
        }
    }
}
