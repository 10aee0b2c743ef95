use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{format_rational, int, serde_vec};
use crate::{ArithError, Rational, Result};

/// Dense polynomial in one variable; `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(a*x + b)`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Self {
        self.compose(&Self::new(vec![b.clone(), a.clone()]))
    }

    /// Euclidean division over Q. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dl = d.leading().expect("division by zero polynomial").clone();
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &rem[i + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> UniPoly {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
    }

    /// Numerators of `self * lcm(denominators)`, plus that multiplier.
    pub(crate) fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = num_integer::lcm(l, c.denom().clone());
        }
        let v = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        (v, l)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let body = format_rational(&a);
            match (i, a.is_one()) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{body}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{body}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        serde_vec::deserialize(d).map(UniPoly::new)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// `C(x + shift, degree)` as a polynomial in `x`.
pub fn binom_poly(shift: i64, degree: usize) -> UniPoly {
    let mut p = UniPoly::one();
    let mut fact = Rational::one();
    for j in 0..degree {
        p = &p * &UniPoly::new(vec![int(shift - j as i64), Rational::one()]);
        fact *= int(j as i64 + 1);
    }
    p.scale(&(Rational::one() / fact))
}

/// Newton interpolation through the given points.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<UniPoly> {
    if points.is_empty() {
        return Err(ArithError::NoPoints);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(ArithError::DuplicateNode(format_rational(xi)));
        }
    }
    let n = points.len();
    // divided differences, in place
    let mut dd: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        let lin = UniPoly::new(vec![-points[i].0.clone(), Rational::one()]);
        acc = &(&acc * &lin) + &UniPoly::constant(dd[i].clone());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(a, b)| (int(a), int(b))).collect()
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom_poly(1, 2), UniPoly::new(vec![int(0), rat(1, 2), rat(1, 2)]));
        assert_eq!(binom_poly(0, 0), UniPoly::one());
        assert_eq!(binom_poly(3, 4).eval_int(2), int(5));
        // below the support it vanishes
        assert_eq!(binom_poly(-1, 3).eval_int(2), int(0));
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(interpolate(&pts(&[(0, 0), (1, 2), (2, 4)])).unwrap(), UniPoly::from_ints(&[0, 2]));
        assert_eq!(interpolate(&pts(&[(1, 1), (2, 4), (3, 9)])).unwrap(), UniPoly::from_ints(&[0, 0, 1]));
        let b = binom_poly(1, 4);
        let samples: Vec<_> = (0..5).map(|x| (int(x), b.eval_int(x))).collect();
        assert_eq!(interpolate(&samples).unwrap(), b);
    }

    #[test]
    fn interpolation_errors() {
        assert_eq!(interpolate(&[]), Err(ArithError::NoPoints));
        assert!(matches!(interpolate(&pts(&[(1, 1), (1, 2)])), Err(ArithError::DuplicateNode(_))));
    }

    #[test]
    fn division_and_gcd() {
        let a = UniPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = UniPoly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UniPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let c = UniPoly::from_ints(&[1, 2, 1]);
        assert_eq!(a.gcd(&c), b);
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_ints(&[-1, 0, 2]).to_string(), "2*x^2 - 1");
        assert_eq!(binom_poly(1, 2).to_string(), "1/2*x^2 + 1/2*x");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn compose_linear_shifts() {
        let p = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(p.compose_linear(&int(1), &int(1)), UniPoly::from_ints(&[1, 2, 1]));
    }
}
