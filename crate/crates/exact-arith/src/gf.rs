use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{ArithError, Rational, Result, UniPoly};

/// A rational function `num(t)/den(t)` read as a formal power series.
///
/// Normal form: `num` and `den` are coprime, have integer coefficients whose
/// joint gcd is one, and `den` has a positive leading coefficient. Two
/// generating functions are equal exactly when their normal forms agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGF", into = "RawGF")]
pub struct RationalGF {
    num: UniPoly,
    den: UniPoly,
}

#[derive(Serialize, Deserialize)]
struct RawGF {
    num: UniPoly,
    den: UniPoly,
}

impl TryFrom<RawGF> for RationalGF {
    type Error = ArithError;
    fn try_from(r: RawGF) -> Result<Self> {
        RationalGF::new(r.num, r.den)
    }
}

impl From<RationalGF> for RawGF {
    fn from(g: RationalGF) -> Self {
        RawGF { num: g.num, den: g.den }
    }
}

impl RationalGF {
    /// Builds and normalizes `num/den`. The reduced denominator must have a
    /// nonzero constant term.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (num, den) =
            if g.is_zero() || g.degree() == Some(0) { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        if den.coeff(0).is_zero() {
            return Err(ArithError::ZeroConstantTerm);
        }
        let (ni, nl) = num.clear_denominators();
        let (di, dl) = den.clear_denominators();
        let l = nl.lcm(&dl);
        let nm = &l / &nl;
        let dm = &l / &dl;
        let mut ni: Vec<BigInt> = ni.into_iter().map(|c| c * &nm).collect();
        let mut di: Vec<BigInt> = di.into_iter().map(|c| c * &dm).collect();
        let mut content = BigInt::zero();
        for c in ni.iter().chain(di.iter()) {
            content = content.gcd(c);
        }
        if di.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        for c in ni.iter_mut().chain(di.iter_mut()) {
            *c = &*c / &content;
        }
        let lift = |v: Vec<BigInt>| UniPoly::new(v.into_iter().map(Rational::from_integer).collect());
        Ok(RationalGF { num: lift(ni), den: lift(di) })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self::new(p, UniPoly::one()).expect("constant denominator")
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `self / other`; fails when the quotient has a pole at `t = 0`.
    pub fn div(&self, other: &RationalGF) -> Result<RationalGF> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, e: u32) -> RationalGF {
        Self::new(self.num.pow(e), self.den.pow(e)).expect("power of a valid series")
    }

    pub fn scale(&self, c: &Rational) -> RationalGF {
        Self::new(self.num.scale(c), self.den.clone()).expect("valid series")
    }

    /// `p(self)`, evaluated by Horner's rule.
    pub fn substitute_into(&self, p: &UniPoly) -> RationalGF {
        let mut acc = RationalGF::from_poly(UniPoly::zero());
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &RationalGF::from_poly(UniPoly::constant(c.clone()));
        }
        acc
    }

    /// First `count` power-series coefficients.
    pub fn coeffs(&self, count: usize) -> Vec<Rational> {
        gf_coeffs(self, count).expect("normal form has nonzero constant term")
    }
}

/// Coefficients of `t^0 .. t^(count-1)` via the recurrence `den * c = num`.
pub fn gf_coeffs(gf: &RationalGF, count: usize) -> Result<Vec<Rational>> {
    let d0 = gf.den.coeff(0);
    if d0.is_zero() {
        return Err(ArithError::ZeroConstantTerm);
    }
    let inv = Rational::one() / d0;
    let den = gf.den.coeffs();
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for i in 0..count {
        let mut acc = gf.num.coeff(i);
        for j in 1..den.len().min(i + 1) {
            acc -= &den[j] * &out[i - j];
        }
        out.push(acc * &inv);
    }
    Ok(out)
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, o: &RationalGF) -> RationalGF {
        RationalGF::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("sum of valid series")
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;
    fn sub(self, o: &RationalGF) -> RationalGF {
        self + &(-o)
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, o: &RationalGF) -> RationalGF {
        RationalGF::new(&self.num * &o.num, &self.den * &o.den).expect("product of valid series")
    }
}

impl Neg for &RationalGF {
    type Output = RationalGF;
    fn neg(self) -> RationalGF {
        RationalGF { num: -&self.num, den: self.den.clone() }
    }
}
