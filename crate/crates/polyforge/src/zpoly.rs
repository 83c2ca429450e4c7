//! Primitive integer polynomials, used to run Buchberger over Q without
//! normalizing a fraction after every coefficient operation.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::Rationals;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

/// A polynomial with integer coefficients whose content is 1 and whose
/// leading coefficient is positive. It stands for the rational polynomial
/// obtained by making it monic.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct ZPoly {
    pub(crate) terms: Vec<(Monomial, BigInt)>,
}

impl ZPoly {
    pub(crate) fn from_rational(p: &Polynomial<Rationals>) -> Self {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
            .collect();
        let mut z = ZPoly { terms };
        z.make_primitive();
        z
    }

    /// The monic rational polynomial this stands for.
    pub(crate) fn to_rational(&self, ring: &Arc<PolyRing<Rationals>>) -> Polynomial<Rationals> {
        let Some((_, lc)) = self.terms.first() else {
            return Polynomial::zero(ring);
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), BigRational::new(c.clone(), lc.clone())))
            .collect();
        Polynomial::from_sorted_unchecked(ring, terms)
    }

    pub(crate) fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub(crate) fn make_primitive(&mut self) {
        let Some((_, lc)) = self.terms.first() else { return };
        let negative = lc.sign() == Sign::Minus;
        // Start from the smallest coefficient so the running gcd drops fast.
        let mut order: Vec<usize> = (0..self.terms.len()).collect();
        order.sort_by_key(|&i| self.terms[i].1.bits());
        let mut g = BigInt::zero();
        for i in order {
            g = g.gcd(&self.terms[i].1);
            if g.is_one() {
                break;
            }
        }
        if negative {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }
}

/// `a*f - b*t*g` where both leading terms are known to cancel; the heads of
/// `f` and `g` are skipped.
fn combine(order: MonomialOrder, a: &BigInt, f: &[(Monomial, BigInt)], b: &BigInt, t: &Monomial, g: &[(Monomial, BigInt)]) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |c: &BigInt| if a.is_one() { c.clone() } else { a * c };
    let mut gm: Option<Monomial> = g.first().map(|(m, _)| t.mul(m));
    while i < f.len() || j < g.len() {
        let ord = match (f.get(i), &gm) {
            (Some((fm, _)), Some(m)) => order.cmp(fm, m),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push((f[i].0.clone(), scaled(&f[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.take().unwrap(), -(b * &g[j].1)));
                j += 1;
                gm = g.get(j).map(|(m, _)| t.mul(m));
            }
            Ordering::Equal => {
                let c = scaled(&f[i].1) - b * &g[j].1;
                let m = gm.take().unwrap();
                if !c.is_zero() {
                    out.push((m, c));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|(m, _)| t.mul(m));
            }
        }
    }
    out
}

/// Coefficients `(x, y)` with `x*lc(f) = y*lc(g)`, free of common factors.
fn cofactors(lf: &BigInt, lg: &BigInt) -> (BigInt, BigInt) {
    let g = lf.gcd(lg);
    if g.is_one() {
        (lg.clone(), lf.clone())
    } else {
        (lg / &g, lf / &g)
    }
}

pub(crate) fn spoly(order: MonomialOrder, f: &ZPoly, g: &ZPoly, lcm: &Monomial) -> ZPoly {
    let (lmf, lcf) = (&f.terms[0].0, &f.terms[0].1);
    let (lmg, lcg) = (&g.terms[0].0, &g.terms[0].1);
    let tf = lmf.quotient_of(lcm).unwrap();
    let tg = lmg.quotient_of(lcm).unwrap();
    let (x, y) = cofactors(lcf, lcg);
    let ft: Vec<(Monomial, BigInt)> = f.terms.iter().map(|(m, c)| (tf.mul(m), c.clone())).collect();
    let mut z = ZPoly {
        terms: combine(order, &x, &ft[1..], &y, &tg, &g.terms[1..]),
    };
    z.make_primitive();
    z
}

/// Full reduction of `f`. Returns the primitive remainder and the number of
/// term operations spent, or `Err(spent)` as soon as `limit` is exceeded.
pub(crate) fn reduce(
    order: MonomialOrder,
    f: &ZPoly,
    divisors: &[ZPoly],
    active: Option<&[bool]>,
    limit: u64,
) -> Result<(ZPoly, u64), u64> {
    let mut spent = 0u64;
    let mut rest = f.terms.clone();
    let mut out: Vec<(Monomial, BigInt)> = Vec::new();
    while let Some((lm, lc)) = rest.first() {
        let hit = divisors
            .iter()
            .enumerate()
            .filter(|(i, g)| active.map_or(true, |a| a[*i]) && g.lm().is_some_and(|m| m.divides(lm)))
            .min_by_key(|(i, g)| (g.len(), *i));
        match hit {
            Some((_, g)) => {
                spent += (g.len() + rest.len()) as u64;
                if spent > limit {
                    return Err(spent);
                }
                let t = g.terms[0].0.quotient_of(lm).unwrap();
                let (x, y) = cofactors(lc, &g.terms[0].1);
                rest = combine(order, &x, &rest[1..], &y, &t, &g.terms[1..]);
                if !x.is_one() {
                    for (_, c) in &mut out {
                        *c *= &x;
                    }
                }
            }
            None => {
                // Move the whole irreducible prefix in one go.
                let mut k = 1;
                while k < rest.len() && !divisors.iter().enumerate().any(|(i, g)| {
                    active.map_or(true, |a| a[i]) && g.lm().is_some_and(|m| m.divides(&rest[k].0))
                }) {
                    k += 1;
                }
                out.extend(rest.drain(..k));
            }
        }
    }
    let mut z = ZPoly { terms: out };
    z.make_primitive();
    Ok((z, spent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn ring() -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn round_trip_is_monic() {
        let r = ring();
        let p = parse_polynomial(&r, "-4/3*x^2 + 2/9*y - 6").unwrap();
        let z = ZPoly::from_rational(&p);
        let c: Vec<i64> = z.terms.iter().map(|(_, c)| c.try_into().unwrap()).collect();
        assert_eq!(c, vec![6, -1, 27]);
        assert_eq!(z.to_rational(&r), p.monic());
    }

    #[test]
    fn reduces_like_the_field_version() {
        let r = ring();
        let f = parse_polynomial(&r, "x^3 + 1/2*x*y").unwrap();
        let g = parse_polynomial(&r, "3*x^2 - y").unwrap();
        let (z, _) = reduce(
            MonomialOrder::Grevlex,
            &ZPoly::from_rational(&f),
            &[ZPoly::from_rational(&g)],
            None,
            u64::MAX,
        )
        .unwrap();
        // x^3 + xy/2 - x(x^2 - y/3) = 5/6 xy
        assert_eq!(z.to_rational(&r), parse_polynomial(&r, "x*y").unwrap());
    }
}
