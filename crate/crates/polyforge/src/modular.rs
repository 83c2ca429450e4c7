//! Multi-modular Groebner bases over the rationals.
//!
//! Reduced bases are computed modulo a descending sequence of primes below
//! 2^62, combined by Chinese remaindering and lifted back to Q by rational
//! reconstruction. Primes are grouped by the support of their basis, so an
//! unlucky prime never contaminates the majority. A stable candidate is then
//! checked with exact rational arithmetic: every input must reduce to zero,
//! every S-pair must reduce to zero and the basis must be reduced. Finally the
//! candidate has to agree with fresh bases modulo further primes.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;
use crate::field::{is_prime, Field, PrimeField, Rationals};
use crate::groebner::{buchberger, GbConfig, GbStats, GroebnerBasis};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Upper limit on the number of primes tried before giving up.
const MAX_PRIMES: u32 = 256;
/// Fresh primes that must agree with a verified candidate.
const CHECK_PRIMES: u32 = 2;

struct Group {
    shape: Vec<Vec<Monomial>>,
    modulus: BigInt,
    residues: Vec<BigInt>,
    primes: u32,
    last: Option<Vec<BigRational>>,
}

/// Descending primes below 2^62 that keep every input coefficient defined
/// and every leading coefficient nonzero.
struct PrimeStream<'a> {
    next: u64,
    input: &'a [Polynomial<Rationals>],
}

impl Iterator for PrimeStream<'_> {
    type Item = PrimeField;

    fn next(&mut self) -> Option<PrimeField> {
        while self.next > 3 {
            let p = self.next;
            self.next -= 2;
            if !is_prime(p) {
                continue;
            }
            let pb = BigInt::from(p);
            let bad = self.input.iter().any(|f| {
                f.terms().iter().any(|(_, c)| c.denom().is_multiple_of(&pb))
                    || f.leading_coeff().is_some_and(|c| c.numer().is_multiple_of(&pb))
            });
            if !bad {
                return Some(PrimeField::new(p).expect("prime"));
            }
        }
        None
    }
}

fn mod_basis(
    ring: &Arc<PolyRing<Rationals>>,
    input: &[Polynomial<Rationals>],
    field: PrimeField,
    cfg: &GbConfig,
) -> Result<GroebnerBasis<PrimeField>, PolyError> {
    let target = ring.with_field(field);
    let polys = input
        .iter()
        .map(|p| p.map_coeffs(&target, |c| field.from_rational(c)))
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = GbConfig {
        self_check: false,
        ..*cfg
    };
    buchberger(&target, &polys, &cfg)
}

fn shape_of(gb: &GroebnerBasis<PrimeField>) -> Vec<Vec<Monomial>> {
    gb.polys()
        .iter()
        .map(|p| p.terms().iter().map(|(m, _)| m.clone()).collect())
        .collect()
}

fn residues_of(gb: &GroebnerBasis<PrimeField>) -> Vec<u64> {
    gb.polys()
        .iter()
        .flat_map(|p| p.terms().iter().map(|(_, c)| *c))
        .collect()
}

/// Reduces a rational basis modulo `field`, if every denominator survives.
fn reduce_candidate(
    candidate: &[Polynomial<Rationals>],
    target: &Arc<PolyRing<PrimeField>>,
    field: PrimeField,
) -> Option<Vec<Polynomial<PrimeField>>> {
    candidate
        .iter()
        .map(|p| p.map_coeffs(target, |c| field.from_rational(c)).ok())
        .collect()
}

pub(crate) fn modular_groebner(
    ring: &Arc<PolyRing<Rationals>>,
    input: &[Polynomial<Rationals>],
    cfg: &GbConfig,
) -> Result<GroebnerBasis<Rationals>, PolyError> {
    let input: Vec<Polynomial<Rationals>> = input.iter().filter(|p| !p.is_zero()).cloned().collect();
    if input.is_empty() {
        return buchberger(ring, &input, cfg);
    }
    let mut stats = GbStats::default();
    let mut groups: Vec<Group> = Vec::new();
    let mut primes = PrimeStream {
        next: (1u64 << 62) - 1,
        input: &input,
    };
    let mut used = 0u32;

    while used < MAX_PRIMES {
        let field = primes.next().ok_or(PolyError::ResourceCap {
            what: "modular prime",
            limit: MAX_PRIMES as u64,
        })?;
        used += 1;
        let gbp = mod_basis(ring, &input, field, cfg)?;
        stats.absorb(&gbp.stats());
        let shape = shape_of(&gbp);
        let values = residues_of(&gbp);
        let p = BigInt::from(field.modulus());
        let k = match groups.iter().position(|g| g.shape == shape) {
            Some(k) => {
                let g = &mut groups[k];
                let inv = g.modulus.mod_floor(&p).modpow(&(&p - 2u32), &p);
                for (a, &c) in g.residues.iter_mut().zip(values.iter()) {
                    let t = ((BigInt::from(c) - &*a) * &inv).mod_floor(&p);
                    *a += &g.modulus * t;
                }
                g.modulus *= &p;
                g.primes += 1;
                k
            }
            None => {
                groups.push(Group {
                    shape,
                    modulus: p,
                    residues: values.into_iter().map(BigInt::from).collect(),
                    primes: 1,
                    last: None,
                });
                groups.len() - 1
            }
        };
        let leader = (0..groups.len()).max_by_key(|&i| (groups[i].primes, std::cmp::Reverse(i))).unwrap();
        if leader != k {
            continue;
        }
        let g = &mut groups[k];
        let Some(values) = g
            .residues
            .iter()
            .map(|a| rational_reconstruct(a, &g.modulus))
            .collect::<Option<Vec<_>>>()
        else {
            g.last = None;
            continue;
        };
        let stable = g.last.as_ref() == Some(&values);
        g.last = Some(values.clone());
        if !stable {
            continue;
        }
        let candidate = assemble(ring, &g.shape, &values);
        let gb = GroebnerBasis::from_parts(ring.clone(), candidate.clone(), stats);
        if gb.verify(&input).is_err() {
            continue;
        }
        // Cross-check against fresh primes.
        let mut agreed = 0;
        while agreed < CHECK_PRIMES && used < MAX_PRIMES {
            let Some(field) = primes.next() else { break };
            used += 1;
            let gbp = mod_basis(ring, &input, field, cfg)?;
            stats.absorb(&gbp.stats());
            let target = gbp.ring().clone();
            match reduce_candidate(&candidate, &target, field) {
                Some(red) if red.as_slice() == gbp.polys() => agreed += 1,
                _ => break,
            }
        }
        if agreed == CHECK_PRIMES {
            stats.primes = used;
            return Ok(GroebnerBasis::from_parts(ring.clone(), candidate, stats));
        }
    }
    Err(PolyError::ResourceCap {
        what: "modular prime",
        limit: MAX_PRIMES as u64,
    })
}

fn assemble(ring: &Arc<PolyRing<Rationals>>, shape: &[Vec<Monomial>], values: &[BigRational]) -> Vec<Polynomial<Rationals>> {
    let mut it = values.iter();
    shape
        .iter()
        .map(|mons| {
            let terms = mons.iter().map(|m| (m.clone(), it.next().unwrap().clone())).collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect()
}

/// Finds `n/d` congruent to `a` modulo `m` with `|n|, d <= sqrt(m/2)`.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let (q, r2) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_small_fractions() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(999_983u64);
        for (n, d) in [(1i64, 5i64), (-4, 125), (7, 11), (0, 1), (-1, 1)] {
            let q = BigRational::new(n.into(), d.into());
            let ext = BigInt::from(d).extended_gcd(&m);
            let a = (BigInt::from(n) * ext.x).mod_floor(&m);
            assert_eq!(rational_reconstruct(&a, &m), Some(q));
        }
    }
}
