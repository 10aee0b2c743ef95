use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::rational::format_rational;
use crate::{ArithError, Rational, Result};

/// Sparse polynomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], c).expect("arity matches");
        p
    }

    /// The variable with index `i`.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, Rational::one()).expect("arity matches")
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Result<Self> {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c)?;
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * z^exps` in place.
    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) -> Result<()> {
        if exps.len() != self.arity {
            return Err(ArithError::ArityMismatch { expected: self.arity, got: exps.len() });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self::zero(self.arity);
        if !c.is_zero() {
            for (e, v) in &self.terms {
                p.terms.insert(e.clone(), v * c);
            }
        }
        p
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Evaluates at a point with one rational per variable.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(ArithError::ArityMismatch { expected: self.arity, got: point.len() });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    m *= x;
                }
            }
            acc += m;
        }
        Ok(acc)
    }

    fn check(&self, o: &MultiPoly) {
        assert_eq!(self.arity, o.arity, "MultiPoly arity mismatch");
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("z{i}") } else { format!("z{i}^{k}") })
                    .collect();
                if mono.is_empty() {
                    format_rational(c)
                } else {
                    format!("{}*{}", format_rational(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.check(o);
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone()).expect("arity checked");
        }
        p
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self + &o.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.check(o);
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += x * y;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        MultiPoly { arity: self.arity, terms: acc }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn cancellation_removes_terms() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let s = &x + &y;
        let d = &x - &y;
        let p = &s * &d; // x^2 - y^2
        assert_eq!(p.terms().len(), 2);
        assert!((&p - &p).is_zero());
        assert_eq!(p.eval(&[int(3), int(2)]).unwrap(), int(5));
    }

    #[test]
    fn arity_checked() {
        let mut p = MultiPoly::zero(2);
        assert!(p.add_term(vec![1], int(1)).is_err());
        assert!(p.eval(&[int(1)]).is_err());
    }

    #[test]
    fn display_form() {
        let p = &MultiPoly::var(2, 0) + &MultiPoly::constant(2, int(2));
        assert_eq!(p.to_string(), "2 + 1*z0");
    }
}
