//! Fusion rings: storage, the based-ring axioms and Frobenius-Perron data.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::PrismError;

/// A fusion ring with basis `labels`, unit at index 0 and structure constants
/// `N[i][j][k] = N_{i,j}^k`, the `(j, k)` entry of the fusion matrix `M_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    name: String,
    labels: Vec<String>,
    n: Vec<u32>,
    star: Vec<usize>,
    provenance: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingDocument {
    name: String,
    rank: usize,
    labels: Vec<String>,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    provenance: Option<String>,
}

impl FusionRing {
    /// Builds a ring from its fusion coefficients and derives the duality.
    /// The axioms are not checked here; see [`FusionRing::verify_axioms`].
    pub fn new(name: &str, labels: Vec<String>, n: Vec<Vec<Vec<u32>>>) -> Result<Self, PrismError> {
        let r = labels.len();
        if r == 0 {
            return Err(PrismError::Malformed("rank must be positive".into()));
        }
        if n.len() != r || n.iter().any(|m| m.len() != r || m.iter().any(|row| row.len() != r)) {
            return Err(PrismError::NotSquare { rank: r });
        }
        for (a, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(PrismError::Malformed(format!("label {a} is empty or contains whitespace")));
            }
            if labels[..a].contains(l) {
                return Err(PrismError::Malformed(format!("duplicate label `{l}`")));
            }
        }
        let flat: Vec<u32> = n.into_iter().flatten().flatten().collect();
        let mut star = Vec::with_capacity(r);
        for i in 0..r {
            let cands: Vec<usize> = (0..r).filter(|&j| flat[(i * r + j) * r] != 0).collect();
            if cands.len() != 1 {
                return Err(PrismError::DualCandidates {
                    label: labels[i].clone(),
                    count: cands.len(),
                });
            }
            star.push(cands[0]);
        }
        Ok(FusionRing {
            name: name.to_string(),
            labels,
            n: flat,
            star,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, note: &str) -> Self {
        self.provenance = Some(note.to_string());
        self
    }

    /// Parses the JSON ring document.
    pub fn from_json(text: &str) -> Result<Self, PrismError> {
        let doc: RingDocument = serde_json::from_str(text).map_err(|e| PrismError::Malformed(e.to_string()))?;
        if doc.labels.len() != doc.rank {
            return Err(PrismError::Malformed(format!(
                "rank is {} but {} labels are given",
                doc.rank,
                doc.labels.len()
            )));
        }
        let r = doc.rank;
        if doc.n.len() != r || doc.n.iter().any(|m| m.len() != r || m.iter().any(|row| row.len() != r)) {
            return Err(PrismError::NotSquare { rank: r });
        }
        let mut n = vec![vec![vec![0u32; r]; r]; r];
        for (i, m) in doc.n.iter().enumerate() {
            for (j, row) in m.iter().enumerate() {
                for (k, &v) in row.iter().enumerate() {
                    n[i][j][k] = u32::try_from(v).map_err(|_| PrismError::Negative { i, j, k, value: v })?;
                }
            }
        }
        let mut ring = FusionRing::new(&doc.name, doc.labels, n)?;
        ring.provenance = doc.provenance;
        Ok(ring)
    }

    /// Serializes to the ring document: keys in fixed order, two-space
    /// indentation, one matrix row per line.
    pub fn to_json(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("string");
        let r = self.rank();
        let mut out = String::from("{\n");
        writeln!(out, "  \"name\": {},", q(&self.name)).unwrap();
        writeln!(out, "  \"rank\": {r},").unwrap();
        let labels: Vec<String> = self.labels.iter().map(|l| q(l)).collect();
        writeln!(out, "  \"labels\": [{}],", labels.join(", ")).unwrap();
        out.push_str("  \"N\": [\n");
        for i in 0..r {
            out.push_str("    [\n");
            for j in 0..r {
                let row: Vec<String> = (0..r).map(|k| self.n(i, j, k).to_string()).collect();
                let sep = if j + 1 < r { "," } else { "" };
                writeln!(out, "      [{}]{sep}", row.join(", ")).unwrap();
            }
            let sep = if i + 1 < r { "," } else { "" };
            writeln!(out, "    ]{sep}").unwrap();
        }
        match &self.provenance {
            Some(p) => writeln!(out, "  ],\n  \"provenance\": {}", q(p)).unwrap(),
            None => out.push_str("  ]\n"),
        }
        out.push_str("}\n");
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `N_{i,j}^k`.
    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.labels.len();
        self.n[(i * r + j) * r + k]
    }

    /// The dual `i*`.
    #[inline]
    pub fn star(&self, i: usize) -> usize {
        self.star[i]
    }

    pub fn is_self_dual(&self, i: usize) -> bool {
        self.star[i] == i
    }

    /// The fusion matrix `M_i` with `(M_i)_{j,k} = N_{i,j}^k`.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u32>> {
        let r = self.rank();
        (0..r).map(|j| (0..r).map(|k| self.n(i, j, k)).collect()).collect()
    }

    /// Replaces a single coefficient. Used to build deliberately broken
    /// rings; the duality is not re-derived.
    pub fn with_coefficient(mut self, i: usize, j: usize, k: usize, v: u32) -> Self {
        let r = self.rank();
        self.n[(i * r + j) * r + k] = v;
        self
    }

    pub fn is_commutative(&self) -> bool {
        self.first_noncommuting().is_none()
    }

    pub(crate) fn first_noncommuting(&self) -> Option<(usize, usize)> {
        let r = self.rank();
        for i in 0..r {
            for j in i + 1..r {
                if (0..r).any(|k| self.n(i, j, k) != self.n(j, i, k)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Largest structure constant.
    pub fn max_multiplicity(&self) -> u32 {
        self.n.iter().copied().max().unwrap_or(0)
    }

    /// Resolves a label. Besides exact matches, `5a`, `5b`, ... name `5_1`,
    /// `5_2`, ... when the ring uses that numbering.
    pub fn index_of(&self, name: &str) -> Result<usize, PrismError> {
        if let Some(i) = self.labels.iter().position(|l| l == name) {
            return Ok(i);
        }
        let alias = name
            .char_indices()
            .last()
            .filter(|(p, c)| *p > 0 && c.is_ascii_lowercase() && name[..*p].chars().all(|d| d.is_ascii_digit()))
            .map(|(p, c)| format!("{}_{}", &name[..p], c as u32 - 'a' as u32 + 1));
        alias
            .and_then(|a| self.labels.iter().position(|l| *l == a))
            .ok_or_else(|| PrismError::UnknownLabel(name.to_string()))
    }

    /// Resolves a comma-separated list of labels.
    pub fn parse_labels(&self, csv: &str) -> Result<Vec<usize>, PrismError> {
        csv.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| self.index_of(s))
            .collect()
    }

    /// Checks the unit, associativity, duality and Frobenius reciprocity
    /// axioms exhaustively, reporting the first failure of each in
    /// lexicographic index order.
    pub fn verify_axioms(&self) -> AxiomReport {
        let r = self.rank();
        let n = |i, j, k| self.n(i, j, k) as i64;
        let mut unit = None;
        'unit: for a in 0..r {
            for b in 0..r {
                let want = (a == b) as i64;
                if n(0, a, b) != want {
                    unit = Some(AxiomFailure::new(vec![0, a, b], n(0, a, b), want));
                    break 'unit;
                }
                if n(a, 0, b) != want {
                    unit = Some(AxiomFailure::new(vec![a, 0, b], n(a, 0, b), want));
                    break 'unit;
                }
            }
        }
        let mut assoc = None;
        'assoc: for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: i64 = (0..r).map(|m| n(i, j, m) * n(m, k, l)).sum();
                        let rhs: i64 = (0..r).map(|m| n(j, k, m) * n(i, m, l)).sum();
                        if lhs != rhs {
                            assoc = Some(AxiomFailure::new(vec![i, j, k, l], lhs, rhs));
                            break 'assoc;
                        }
                    }
                }
            }
        }
        let mut duality = None;
        for i in 0..r {
            let ones = (0..r).filter(|&j| n(i, j, 0) == 1).count() as i64;
            let others = (0..r).any(|j| n(i, j, 0) > 1);
            if ones != 1 || others {
                duality = Some(AxiomFailure::new(vec![i], ones, 1));
                break;
            }
            let s = self.star(i);
            if self.star(s) != i {
                duality = Some(AxiomFailure::new(vec![i, s], self.star(s) as i64, i as i64));
                break;
            }
        }
        if duality.is_none() && self.star(0) != 0 {
            duality = Some(AxiomFailure::new(vec![0], self.star(0) as i64, 0));
        }
        let mut frob = None;
        'frob: for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let v = n(i, j, k);
                    for w in [n(self.star(i), k, j), n(k, self.star(j), i)] {
                        if v != w {
                            frob = Some(AxiomFailure::new(vec![i, j, k], v, w));
                            break 'frob;
                        }
                    }
                }
            }
        }
        AxiomReport {
            unit: AxiomCheck::new("unit", unit),
            associativity: AxiomCheck::new("associativity", assoc),
            duality: AxiomCheck::new("duality", duality),
            frobenius: AxiomCheck::new("frobenius-reciprocity", frob),
        }
    }

    /// Frobenius-Perron dimensions by power iteration on `sum_i M_i`, made
    /// exact when they turn out to be integers.
    pub fn fpdim_data(&self) -> Result<FpData, PrismError> {
        const CAP: u32 = 100_000;
        const TOL: f64 = 1e-12;
        let r = self.rank();
        let mut a = vec![0f64; r * r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    a[j * r + k] += self.n(i, j, k) as f64;
                }
            }
        }
        let mut v = vec![1f64; r];
        let mut converged = false;
        for _ in 0..CAP {
            let mut w: Vec<f64> = (0..r).map(|j| (0..r).map(|k| a[j * r + k] * v[k]).sum()).collect();
            let top = w.iter().cloned().fold(0f64, f64::max);
            w.iter_mut().for_each(|x| *x /= top);
            let delta = w.iter().zip(&v).map(|(x, y)| (x - y).abs()).fold(0f64, f64::max);
            v = w;
            if delta <= TOL {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(PrismError::NoConvergence(CAP));
        }
        let dims: Vec<f64> = v.iter().map(|x| x / v[0]).collect();
        let exact = self.exact_dims(&dims);
        let dims = match &exact {
            Some(e) => e.iter().map(|&d| d as f64).collect(),
            None => dims,
        };
        let global = dims.iter().map(|d| d * d).sum();
        let mut type_partition: Vec<(f64, usize)> = Vec::new();
        let mut sorted = dims.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for d in sorted {
            match type_partition.last_mut() {
                Some((e, c)) if (d - *e).abs() <= 1e-9 * e.abs().max(1.0) => *c += 1,
                _ => type_partition.push((d, 1)),
            }
        }
        Ok(FpData {
            dims,
            exact,
            global,
            type_partition,
        })
    }

    fn exact_dims(&self, approx: &[f64]) -> Option<Vec<u64>> {
        let r = self.rank();
        let d: Vec<u64> = approx
            .iter()
            .map(|&x| {
                let n = x.round();
                ((x - n).abs() < 1e-6 && n >= 1.0).then_some(n as u64)
            })
            .collect::<Option<_>>()?;
        for i in 0..r {
            for j in 0..r {
                let lhs: u64 = (0..r).map(|k| self.n(i, j, k) as u64 * d[k]).sum();
                if lhs != d[i] * d[j] {
                    return None;
                }
            }
        }
        Some(d)
    }

    /// Every ring of the given rank whose structure constants away from the
    /// unit lie in `0..=max_coeff` and which passes [`FusionRing::verify_axioms`].
    /// Isomorphic copies are not merged. Practical up to rank 3.
    pub fn enumerate(rank: usize, max_coeff: u32) -> Vec<FusionRing> {
        let mut out = Vec::new();
        if rank == 0 {
            return out;
        }
        let labels: Vec<String> = (0..rank).map(|i| if i == 0 { "1".into() } else { format!("x{i}") }).collect();
        let free: Vec<(usize, usize, usize)> = (1..rank)
            .flat_map(|i| (1..rank).flat_map(move |j| (1..rank).map(move |k| (i, j, k))))
            .collect();
        let base = u64::from(max_coeff) + 1;
        let combos = base.checked_pow(free.len() as u32).expect("rank too large to enumerate");
        for star in involutions(rank) {
            for code in 0..combos {
                let mut n = vec![vec![vec![0u32; rank]; rank]; rank];
                for a in 0..rank {
                    n[0][a][a] = 1;
                    n[a][0][a] = 1;
                    n[a][star[a]][0] = 1;
                }
                let mut c = code;
                for &(i, j, k) in &free {
                    n[i][j][k] = (c % base) as u32;
                    c /= base;
                }
                let name = format!("R{rank}-{}-{code}", star.iter().map(|s| s.to_string()).collect::<String>());
                if let Ok(r) = FusionRing::new(&name, labels.clone(), n) {
                    if r.verify_axioms().passed() {
                        out.push(r);
                    }
                }
            }
        }
        out
    }
}

/// Involutions of `0..n` fixing 0.
fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        if p[i] != usize::MAX {
            return go(p, i + 1, out);
        }
        p[i] = i;
        go(p, i + 1, out);
        for j in i + 1..p.len() {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                go(p, i + 1, out);
                p[j] = usize::MAX;
            }
        }
        p[i] = usize::MAX;
    }
    let mut p = vec![usize::MAX; n];
    let mut out = Vec::new();
    if n > 0 {
        p[0] = 0;
        go(&mut p, 1, &mut out);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub indices: Vec<usize>,
    pub lhs: i64,
    pub rhs: i64,
}

impl AxiomFailure {
    fn new(indices: Vec<usize>, lhs: i64, rhs: i64) -> Self {
        AxiomFailure { indices, lhs, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub failure: Option<AxiomFailure>,
}

impl AxiomCheck {
    fn new(axiom: &'static str, failure: Option<AxiomFailure>) -> Self {
        AxiomCheck {
            axiom,
            passed: failure.is_none(),
            failure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub unit: AxiomCheck,
    pub associativity: AxiomCheck,
    pub duality: AxiomCheck,
    pub frobenius: AxiomCheck,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks().iter().all(|c| c.passed)
    }

    pub fn checks(&self) -> [&AxiomCheck; 4] {
        [&self.unit, &self.associativity, &self.duality, &self.frobenius]
    }
}

/// Frobenius-Perron data of a ring.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FpData {
    pub dims: Vec<f64>,
    /// The dimensions as integers, when they are.
    pub exact: Option<Vec<u64>>,
    /// `sum_i d_i^2`.
    pub global: f64,
    /// `(dimension, count)` pairs in increasing dimension.
    pub type_partition: Vec<(f64, usize)>,
}

impl FpData {
    pub fn is_integral(&self) -> bool {
        self.exact.is_some()
    }

    pub fn global_exact(&self) -> Option<u64> {
        self.exact.as_ref().map(|d| d.iter().map(|x| x * x).sum())
    }

    /// The type in the paper's `[[d, count], ...]` notation.
    pub fn type_string(&self) -> String {
        let parts: Vec<String> = self
            .type_partition
            .iter()
            .map(|(d, c)| {
                if self.is_integral() {
                    format!("[{},{c}]", *d as u64)
                } else {
                    format!("[{d:.6},{c}]")
                }
            })
            .collect();
        format!("[{}]", parts.join(","))
    }
}
