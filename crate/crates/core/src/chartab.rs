//! Character tables of commutative fusion rings and the predicates that
//! rule out pivotal categorifications in positive characteristic.

use nalgebra::{Complex, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::PrismError;
use crate::ring::FusionRing;

/// Seed of the generic linear combination of fusion matrices.
pub const SEED: u64 = 0x5eed_c0de;
const ATTEMPTS: u64 = 8;

/// `values[i][j]` is the value of character `j` on basis element `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    pub values: Vec<Vec<Complex<f64>>>,
    /// Largest `|M_i u_j - values[i][j] u_j|` over all `i, j`.
    pub residual: f64,
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<Complex<f64>> {
        self.values.iter().map(|row| row[j]).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<[f64; 2]>> = self
            .values
            .iter()
            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
            .collect();
        serde_json::json!({ "values": rows, "residual": self.residual })
    }

    /// Aligned text, one row per basis element.
    pub fn to_text(&self, ring: &FusionRing) -> String {
        let fmt = |z: &Complex<f64>| {
            let re = if z.re.abs() < 5e-10 { 0.0 } else { z.re };
            if z.im.abs() < 5e-10 {
                format!("{re:.6}")
            } else {
                format!("{re:.6}{:+.6}i", z.im)
            }
        };
        let cells: Vec<Vec<String>> = self.values.iter().map(|row| row.iter().map(fmt).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let lw = ring.labels().iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for (i, row) in cells.iter().enumerate() {
            out.push_str(&format!("{:<lw$}", ring.label(i)));
            for c in row {
                out.push_str(&format!("  {c:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

fn fusion_matrix(ring: &FusionRing, i: usize) -> DMatrix<f64> {
    let r = ring.rank();
    DMatrix::from_fn(r, r, |j, k| ring.n(i, j, k) as f64)
}

/// Unit-norm vector spanning (approximately) the kernel of `a`.
fn null_vector(a: DMatrix<Complex<f64>>) -> DVector<Complex<f64>> {
    let n = a.ncols();
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let m = (0..n)
        .min_by(|&x, &y| svd.singular_values[x].partial_cmp(&svd.singular_values[y]).unwrap())
        .unwrap();
    DVector::from_iterator(n, v_t.row(m).iter().map(|z| z.conj()))
}

/// Computes the character table by diagonalizing a seeded generic
/// combination of the fusion matrices. The Perron column comes first, the
/// rest are sorted by their rounded real parts.
pub fn character_table(ring: &FusionRing, tol: f64) -> Result<CharacterTable, PrismError> {
    if let Some((i, j)) = ring.first_noncommuting() {
        return Err(PrismError::NotCommutative { i, j });
    }
    let r = ring.rank();
    let mats: Vec<DMatrix<f64>> = (0..r).map(|i| fusion_matrix(ring, i)).collect();
    let mut best = f64::INFINITY;
    for attempt in 0..ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + attempt);
        let mut a = DMatrix::<f64>::zeros(r, r);
        for m in &mats {
            a += m * rng.gen_range(0.5..1.5);
        }
        let eig = a.clone().complex_eigenvalues();
        let ac: DMatrix<Complex<f64>> = a.map(|x| Complex::new(x, 0.0));
        let mut cols: Vec<Vec<Complex<f64>>> = Vec::with_capacity(r);
        for mu in eig.iter() {
            let shifted = &ac - DMatrix::<Complex<f64>>::identity(r, r) * *mu;
            let v = null_vector(shifted);
            if v[0].norm() < 1e-12 {
                break;
            }
            let v0 = v[0];
            cols.push(v.iter().map(|z| z / v0).collect());
        }
        if cols.len() != r {
            continue;
        }
        let mut residual = 0f64;
        for (i, m) in mats.iter().enumerate() {
            for u in &cols {
                let uv = DVector::from_column_slice(u);
                let mu = m.map(|x| Complex::new(x, 0.0)) * &uv;
                let diff = (mu - &uv * u[i]).norm();
                residual = residual.max(diff);
            }
        }
        best = best.min(residual);
        if residual > tol {
            continue;
        }
        let perron = (0..r)
            .max_by(|&x, &y| cols[x].iter().map(|z| z.re).sum::<f64>().partial_cmp(&cols[y].iter().map(|z| z.re).sum::<f64>()).unwrap())
            .unwrap();
        let first = cols.remove(perron);
        let key = |c: &Vec<Complex<f64>>| -> Vec<(i64, i64)> {
            c.iter().map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64)).collect()
        };
        cols.sort_by_key(key);
        cols.insert(0, first);
        let values = (0..r).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        return Ok(CharacterTable { values, residual });
    }
    Err(PrismError::Residual { residual: best, tol })
}

/// Whether every column but the first has an entry of modulus below
/// `zero_tol`.
pub fn column_zero_property(table: &CharacterTable, zero_tol: f64) -> bool {
    (1..table.rank()).all(|j| table.values.iter().any(|row| row[j].norm() < zero_tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    NoPositiveCharPivotalCategorification,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeWitness {
    pub prime: u64,
    /// A simple object whose dimension the prime divides.
    pub object: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftingVerdict {
    pub column_zero_ok: bool,
    pub prime_cover_ok: bool,
    pub primes: Vec<PrimeWitness>,
    pub conclusion: Conclusion,
}

/// Zero tolerance used by [`lifting_verdict`].
pub const ZERO_TOL: f64 = 1e-6;

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Evaluates the positive characteristic lifting argument. The conclusion
/// is only drawn when the caller asserts that characteristic zero
/// categorifications are already excluded.
pub fn lifting_verdict(ring: &FusionRing, table: &CharacterTable, char0_excluded: bool) -> Result<LiftingVerdict, PrismError> {
    let fp = ring.fpdim_data()?;
    let dims = fp.exact.clone().ok_or(PrismError::NotIntegral)?;
    let global = fp.global_exact().expect("integral");
    let primes: Vec<PrimeWitness> = prime_factors(global)
        .into_iter()
        .map(|p| PrimeWitness {
            prime: p,
            object: dims.iter().position(|d| d % p == 0).map(|i| ring.label(i).to_string()),
        })
        .collect();
    let prime_cover_ok = primes.iter().all(|w| w.object.is_some());
    let column_zero_ok = column_zero_property(table, ZERO_TOL);
    let conclusion = if column_zero_ok && prime_cover_ok && char0_excluded {
        Conclusion::NoPositiveCharPivotalCategorification
    } else {
        Conclusion::Inconclusive
    };
    Ok(LiftingVerdict {
        column_zero_ok,
        prime_cover_ok,
        primes,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn fibonacci_table() {
        let t = character_table(&catalog("Fib").unwrap(), 1e-9).unwrap();
        let s5 = 5f64.sqrt();
        assert!((t.values[1][0].re - (1.0 + s5) / 2.0).abs() < 1e-10);
        assert!((t.values[1][1].re - (1.0 - s5) / 2.0).abs() < 1e-10);
        assert!(!column_zero_property(&t, ZERO_TOL));
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(210), vec![2, 3, 5, 7]);
        assert_eq!(prime_factors(2), vec![2]);
        assert!(prime_factors(1).is_empty());
    }
}
