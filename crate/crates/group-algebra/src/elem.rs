use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use peaklab_arith::{interpolate, rational, Rational, UniPoly};
use peaklab_perm::GroupKind;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::group::Group;
use crate::{AlgebraError, Result};

/// Element of `Q[S_n]` or `Q[B_n]`: a sparse map from element rank to a
/// nonzero coefficient.
#[derive(Clone)]
pub struct GAElem {
    group: Arc<Group>,
    terms: BTreeMap<usize, Rational>,
}

impl GAElem {
    pub fn zero(group: &Arc<Group>) -> Self {
        GAElem { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(group: &Arc<Group>) -> Self {
        Self::basis(group, group.identity())
    }

    /// The group element of rank `i` with coefficient 1.
    pub fn basis(group: &Arc<Group>, i: usize) -> Self {
        assert!(i < group.order(), "rank {i} out of range");
        GAElem { group: group.clone(), terms: BTreeMap::from([(i, Rational::one())]) }
    }

    /// Sum of the listed elements with coefficient 1 each; repeats accumulate.
    pub fn sum_of(group: &Arc<Group>, members: impl IntoIterator<Item = usize>) -> Self {
        Self::from_terms(group, members.into_iter().map(|i| (i, Rational::one())))
    }

    pub fn from_terms(group: &Arc<Group>, terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut e = Self::zero(group);
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn from_dense(group: &Arc<Group>, dense: Vec<Rational>) -> Self {
        assert_eq!(dense.len(), group.order());
        let terms = dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        GAElem { group: group.clone(), terms }
    }

    fn add_term(&mut self, i: usize, c: Rational) {
        assert!(i < self.group.order(), "rank {i} out of range");
        use std::collections::btree_map::Entry;
        match self.terms.entry(i) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn kind(&self) -> GroupKind {
        self.group.kind()
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    /// `(rank, coefficient)` pairs in increasing rank, i.e. lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.terms.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of group elements with nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.group.order()];
        for (i, c) in &self.terms {
            v[*i] = c.clone();
        }
        v
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.group);
        }
        GAElem { group: self.group.clone(), terms: self.terms.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.group.same(&other.group) {
            Ok(())
        } else {
            Err(AlgebraError::GroupMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(*i, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Convolution product: `(ab)(π) = Σ_{στ=π} a(σ) b(τ)`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_same_group(other))
    }

    fn mul_same_group(&self, other: &Self) -> Self {
        let g = &self.group;
        let (da, a) = scaled(&self.terms);
        let (db, b) = scaled(&other.terms);
        let den = da * db;
        let dense = match (small(&a), small(&b)) {
            (Some(a), Some(b)) => convolve_i128(g, &a, &b),
            _ => None,
        }
        .unwrap_or_else(|| convolve_big(g, &a, &b));
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, Rational::new(c, den.clone())))
            .collect();
        GAElem { group: g.clone(), terms }
    }

    /// `self · other − other · self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }
}

/// Common denominator and integer numerators.
fn scaled(terms: &BTreeMap<usize, Rational>) -> (BigInt, Vec<(usize, BigInt)>) {
    let den = terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = terms.iter().map(|(i, c)| (*i, c.numer() * (&den / c.denom()))).collect();
    (den, nums)
}

fn small(v: &[(usize, BigInt)]) -> Option<Vec<(usize, i64)>> {
    v.iter().map(|(i, c)| c.to_i64().map(|c| (*i, c))).collect()
}

fn convolve_i128(g: &Group, a: &[(usize, i64)], b: &[(usize, i64)]) -> Option<Vec<BigInt>> {
    let mut acc = vec![0i128; g.order()];
    for &(i, x) in a {
        for &(j, y) in b {
            let k = g.mul(i, j);
            acc[k] = acc[k].checked_add(x as i128 * y as i128)?;
        }
    }
    Some(acc.into_iter().map(BigInt::from).collect())
}

fn convolve_big(g: &Group, a: &[(usize, BigInt)], b: &[(usize, BigInt)]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); g.order()];
    for (i, x) in a {
        for (j, y) in b {
            acc[g.mul(*i, *j)] += x * y;
        }
    }
    acc
}

/// Checked product; errors if the groups differ.
pub fn ga_multiply(a: &GAElem, b: &GAElem) -> Result<GAElem> {
    a.try_mul(b)
}

impl PartialEq for GAElem {
    fn eq(&self, other: &Self) -> bool {
        self.group.same(&other.group) && self.terms == other.terms
    }
}

impl Eq for GAElem {}

impl fmt::Debug for GAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GAElem[{}{}]({self})", self.kind().tag(), self.n())
    }
}

impl fmt::Display for GAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let p = self.group.element(*i);
            if c.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "({})*{p}", rational::format_rational(c))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&GAElem> for &GAElem {
            type Output = GAElem;
            /// Panics if the operands live in different groups.
            fn $m(self, rhs: &GAElem) -> GAElem {
                self.$f(rhs).expect("group algebra operands must share a group")
            }
        }
        impl $tr<GAElem> for GAElem {
            type Output = GAElem;
            fn $m(self, rhs: GAElem) -> GAElem {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &GAElem {
    type Output = GAElem;
    fn neg(self) -> GAElem {
        GAElem { group: self.group.clone(), terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect() }
    }
}

impl Neg for GAElem {
    type Output = GAElem;
    fn neg(self) -> GAElem {
        -&self
    }
}

struct Term<'a> {
    perm: Vec<i32>,
    coeff: &'a Rational,
}

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("perm", &self.perm)?;
        m.serialize_entry("coeff", &rational::format_rational(self.coeff))?;
        m.end()
    }
}

struct Terms<'a>(&'a GAElem);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let g = &self.0.group;
        s.collect_seq(self.0.terms.iter().map(|(i, c)| Term { perm: g.images(*i), coeff: c }))
    }
}

/// `{"n":3,"group":"S","terms":[{"perm":[1,3,2],"coeff":"1/2"}]}`
impl Serialize for GAElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GAElem", 3)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("group", self.kind().tag())?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawTerm {
    perm: Vec<i32>,
    coeff: String,
}

#[derive(Deserialize)]
struct RawElem {
    n: usize,
    group: String,
    terms: Vec<RawTerm>,
}

impl<'de> Deserialize<'de> for GAElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawElem::deserialize(d)?;
        let kind = match raw.group.as_str() {
            "S" => GroupKind::Symmetric,
            "B" => GroupKind::Hyperoctahedral,
            other => return Err(D::Error::custom(format!("unknown group {other:?}"))),
        };
        let g = Group::get(kind, raw.n).map_err(D::Error::custom)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let i = g.index_of_images(&t.perm).map_err(D::Error::custom)?;
            let c = rational::parse_rational(&t.coeff).map_err(D::Error::custom)?;
            terms.push((i, c));
        }
        Ok(GAElem::from_terms(&g, terms))
    }
}

/// Polynomial in `x` with group-algebra coefficients; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, Debug)]
pub struct GAPoly {
    group: Arc<Group>,
    coeffs: Vec<GAElem>,
}

impl PartialEq for GAPoly {
    fn eq(&self, other: &Self) -> bool {
        self.group.same(&other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GAPoly {}

impl GAPoly {
    pub fn new(group: &Arc<Group>, mut coeffs: Vec<GAElem>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.group.same(group)) {
            return Err(AlgebraError::GroupMismatch);
        }
        while coeffs.last().is_some_and(GAElem::is_zero) {
            coeffs.pop();
        }
        Ok(GAPoly { group: group.clone(), coeffs })
    }

    pub fn zero(group: &Arc<Group>) -> Self {
        GAPoly { group: group.clone(), coeffs: Vec::new() }
    }

    /// `Σ q_c(x) E_c`.
    pub fn from_classes<'a>(
        group: &Arc<Group>,
        parts: impl IntoIterator<Item = (&'a UniPoly, &'a GAElem)>,
    ) -> Result<Self> {
        let mut coeffs: Vec<GAElem> = Vec::new();
        for (q, e) in parts {
            for (i, c) in q.coeffs().iter().enumerate() {
                if coeffs.len() <= i {
                    coeffs.resize(i + 1, GAElem::zero(group));
                }
                coeffs[i] = coeffs[i].try_add(&e.scale(c))?;
            }
        }
        Self::new(group, coeffs)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn coeffs(&self) -> &[GAElem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> GAElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| GAElem::zero(&self.group))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> GAElem {
        let mut acc = GAElem::zero(&self.group);
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(x) + c;
        }
        acc
    }

    /// `a · self(x)`.
    pub fn left_mul(&self, a: &GAElem) -> Result<Self> {
        let c = self.coeffs.iter().map(|c| a.try_mul(c)).collect::<Result<_>>()?;
        Self::new(&self.group, c)
    }

    /// `self(x) · a`.
    pub fn right_mul(&self, a: &GAElem) -> Result<Self> {
        let c = self.coeffs.iter().map(|c| c.try_mul(a)).collect::<Result<_>>()?;
        Self::new(&self.group, c)
    }

    /// Recovers a polynomial from its values at distinct nodes, one group
    /// element at a time.
    pub fn interpolate(group: &Arc<Group>, points: &[(Rational, GAElem)]) -> Result<Self> {
        if points.iter().any(|(_, e)| !e.group.same(group)) {
            return Err(AlgebraError::GroupMismatch);
        }
        let support: std::collections::BTreeSet<usize> =
            points.iter().flat_map(|(_, e)| e.terms.keys().copied()).collect();
        let mut coeffs = vec![GAElem::zero(group); points.len()];
        for i in support {
            let pts: Vec<(Rational, Rational)> = points.iter().map(|(x, e)| (x.clone(), e.coeff(i))).collect();
            let q = interpolate(&pts)?;
            for (p, c) in q.coeffs().iter().enumerate() {
                coeffs[p].add_term(i, c.clone());
            }
        }
        Self::new(group, coeffs)
    }
}

impl Serialize for GAPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GAPoly", 3)?;
        st.serialize_field("n", &self.group.n())?;
        st.serialize_field("group", self.group.kind().tag())?;
        let c: Vec<Terms<'_>> = self.coeffs.iter().map(Terms).collect();
        st.serialize_field("coeffs", &c)?;
        st.end()
    }
}
