//! Sparse multivariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::PolyError;
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// A polynomial ring `F[x0, ..., xn]` with a fixed term order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>, PolyError> {
        if vars.is_empty() {
            return Err(PolyError::NoVariables);
        }
        if vars.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables {
                max: MAX_VARS,
                got: vars.len(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(PolyError::VariableMismatch(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same field and variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order,
        })
    }

    pub fn with_field<G: Field>(&self, field: G) -> Arc<PolyRing<G>> {
        Arc::new(PolyRing {
            field,
            vars: self.vars.clone(),
            order: self.order,
        })
    }
}

/// A polynomial with terms kept in strictly decreasing term order and no
/// zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F::Elem) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Arc<PolyRing<F>>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field.one())
    }

    pub fn monomial(ring: &Arc<PolyRing<F>>, m: Monomial, c: F::Elem) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let terms = if ring.field.is_zero(&c) { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing<F>>, mut raw: Vec<(Monomial, F::Elem)>) -> Self {
        let order = ring.order;
        let field = &ring.field;
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut terms: Vec<(Monomial, F::Elem)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            assert_eq!(m.nvars(), ring.nvars());
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = terms.last() {
                        if field.is_zero(lc) {
                            terms.pop();
                        }
                    }
                    terms.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = terms.last() {
            if field.is_zero(lc) {
                terms.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted_unchecked(ring: &Arc<PolyRing<F>>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.combine(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.combine(other, true))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &other.terms {
            acc = acc.combine(&self.mul_term(m, c), false);
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Self {
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial is unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !self.ring.field.is_one(lc) => self.scale(&self.ring.field.inv(lc)),
            _ => self.clone(),
        }
    }

    /// `self + sign * other`, merging the sorted term lists.
    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let field = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if subtract { field.neg(&t.1) } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<PolyRing<F>>) -> Result<Self, PolyError> {
        if target.field.spec() != self.ring.field.spec() {
            return Err(PolyError::RingMismatch);
        }
        let map: Vec<Option<usize>> = self.ring.vars.iter().map(|v| target.var_index(v)).collect();
        let n = target.nvars();
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for (i, &x) in m.exps().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| {
                    PolyError::VariableMismatch(format!("`{}` missing from target ring", self.ring.vars[i]))
                })?;
                e[j] += x;
            }
            raw.push((Monomial::from_exps(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, raw))
    }

    /// Homogenizes into `target`, whose variables are this ring's followed
    /// by one extra variable.
    pub fn homogenize(&self, target: &Arc<PolyRing<F>>) -> Self {
        let n = self.ring.nvars();
        assert_eq!(target.nvars(), n + 1);
        let d = self.total_degree().unwrap_or(0);
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exps().to_vec();
                e.push(d - m.degree());
                (Monomial::from_exps(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, raw)
    }

    /// Sets the last variable to 1 and moves the result into `target`, whose
    /// variables are all but the last of this ring's.
    pub fn dehomogenize(&self, target: &Arc<PolyRing<F>>) -> Self {
        let n = target.nvars();
        assert_eq!(self.ring.nvars(), n + 1);
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::from_exps(m.exps()[..n].to_vec()), c.clone()))
            .collect();
        Polynomial::from_terms(target, raw)
    }

    /// Re-sorts the terms for a ring that differs only in its order.
    pub fn reorder(&self, target: &Arc<PolyRing<F>>) -> Self {
        assert_eq!(target.vars, self.ring.vars);
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Maps coefficients into another field.
    pub fn map_coeffs<G: Field>(
        &self,
        target: &Arc<PolyRing<G>>,
        f: impl Fn(&F::Elem) -> Result<G::Elem, PolyError>,
    ) -> Result<Polynomial<G>, PolyError> {
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), f(c)?)))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(Polynomial::from_terms(target, raw))
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Infix form such as `5*u0*z2 - u0 + 1/125`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = &self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !field.is_one(&abs) || m.is_one() {
                factors.push(field.format(&abs));
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars[i].clone()),
                    _ => factors.push(format!("{}^{e}", self.ring.vars[i])),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn qring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn square_of_a_sum() {
        let r = qring(&["x", "y"]);
        let s = Polynomial::var(&r, 0).add(&Polynomial::var(&r, 1)).unwrap();
        assert_eq!(s.pow(2).to_string(), "x^2 + 2*x*y + y^2");

        let gf2 = PolyRing::new(PrimeField::new(2).unwrap(), vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap();
        let s2 = Polynomial::var(&gf2, 0).add(&Polynomial::var(&gf2, 1)).unwrap();
        assert_eq!(s2.pow(2).to_string(), "x^2 + y^2");
    }

    #[test]
    fn scaling_clears_denominators() {
        let r = qring(&["x"]);
        let fifth = BigRational::new(1.into(), 5.into());
        let p = Polynomial::var(&r, 0).sub(&Polynomial::constant(&r, fifth)).unwrap();
        assert_eq!(p.to_string(), "x - 1/5");
        assert_eq!(p.scale(&Rationals.from_i64(5)).to_string(), "5*x - 1");
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = Polynomial::var(&qring(&["x"]), 0);
        let b = Polynomial::var(&qring(&["y"]), 0);
        assert_eq!(a.add(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn cancellation_leaves_zero() {
        let r = qring(&["x", "y"]);
        let p = Polynomial::var(&r, 0).mul(&Polynomial::var(&r, 1)).unwrap();
        assert!(p.sub(&p).unwrap().is_zero());
        assert_eq!(p.sub(&p).unwrap().to_string(), "0");
    }

    #[test]
    fn embedding_by_name() {
        let small = qring(&["b", "a"]);
        let big = qring(&["a", "c", "b"]);
        let p = Polynomial::var(&small, 0).pow(2).add(&Polynomial::var(&small, 1)).unwrap();
        let q = p.embed(&big).unwrap();
        assert_eq!(q.to_string(), "b^2 + a");
        assert_eq!(q.embed(&small).unwrap(), p);
        let tiny = qring(&["a"]);
        assert!(matches!(q.embed(&tiny), Err(PolyError::VariableMismatch(_))));
    }
}
