//! Symbolic polynomials over named variables. Generators build equations
//! here before the variable set is known, then convert to `polyforge`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use polyforge::{Monomial, MonomialOrder, PolyError, PolyRing, Polynomial, Rationals};

/// A polynomial with rational coefficients, keyed by sorted variable lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr {
    terms: BTreeMap<Vec<String>, BigRational>,
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Expr {
    pub fn zero() -> Self {
        Expr::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Expr { terms }
    }

    pub fn int(v: i64) -> Self {
        Expr::constant(BigRational::from_integer(v.into()))
    }

    pub fn var(name: impl Into<String>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![name.into()], BigRational::one());
        Expr { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the expression has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[String], &BigRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn vars(&self) -> BTreeSet<String> {
        self.terms.keys().flatten().cloned().collect()
    }

    fn insert(&mut self, key: Vec<String>, c: BigRational) {
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Expr) -> Expr {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Expr) -> Expr {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Expr {
        if c.is_zero() {
            return Expr::zero();
        }
        Expr {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Expr) -> Expr {
        let mut out = Expr::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut key: Vec<String> = ka.iter().chain(kb).cloned().collect();
                key.sort();
                out.insert(key, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Expr {
        (0..e).fold(Expr::int(1), |acc, _| acc.mul(self))
    }

    /// Renames variables through `f`, merging terms that collide.
    pub fn rename(&self, f: impl Fn(&str) -> String) -> Expr {
        let mut out = Expr::zero();
        for (k, c) in &self.terms {
            let mut key: Vec<String> = k.iter().map(|v| f(v)).collect();
            key.sort();
            out.insert(key, c.clone());
        }
        out
    }

    /// Converts into `ring`, which must contain every variable used.
    pub fn to_polynomial(&self, ring: &Arc<PolyRing<Rationals>>) -> Result<Polynomial<Rationals>, PolyError> {
        let n = ring.nvars();
        let mut raw = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            let mut exps = vec![0u32; n];
            for v in k {
                let i = ring
                    .var_index(v)
                    .ok_or_else(|| PolyError::VariableMismatch(format!("`{v}` is not a ring variable")))?;
                exps[i] += 1;
            }
            raw.push((Monomial::from_exps(exps), c.clone()));
        }
        Ok(Polynomial::from_terms(ring, raw))
    }
}

/// A grevlex ring over `vars`.
pub fn ring_over(vars: &[String]) -> Result<Arc<PolyRing<Rationals>>, PolyError> {
    PolyRing::new(Rationals, vars.to_vec(), MonomialOrder::Grevlex)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigRational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts = Vec::new();
            if k.is_empty() || !mag.is_one() {
                parts.push(mag.to_string());
            }
            let mut i = 0;
            while i < k.len() {
                let run = k[i..].iter().take_while(|v| **v == k[i]).count();
                parts.push(if run > 1 { format!("{}^{run}", k[i]) } else { k[i].clone() });
                i += run;
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels() {
        let x = Expr::var("x");
        let y = Expr::var("y");
        let s = x.add(&y);
        let d = x.sub(&y);
        let p = s.mul(&d);
        assert_eq!(p, x.pow(2).sub(&y.pow(2)));
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn converts_to_polynomial() {
        let ring = ring_over(&["a".into(), "b".into()]).unwrap();
        let e = Expr::var("a").mul(&Expr::var("b")).add(&Expr::constant(rational(1, 5)));
        let p = e.to_polynomial(&ring).unwrap();
        assert_eq!(p.to_string(), "a*b + 1/5");
        assert!(Expr::var("c").to_polynomial(&ring).is_err());
    }
}
