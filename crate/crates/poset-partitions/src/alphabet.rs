use std::cmp::Ordering;
use std::fmt;

/// The exponent `ε` of an enriched letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

/// One letter of an enriched alphabet.
///
/// `value` is the signed magnitude and `epsilon` the exponent: in type B
/// notation the letter is `sign(value) * x_|value| ^ epsilon`. Type A letters
/// have `value >= 0`, and the type A letter usually written `-v` is
/// `(v, Minus)`. Ordinary letters always carry `Plus`.
///
/// The total order is `-1 < 1 < -2 < 2 < ...` on the positive side and
/// `-k < -k^-1 < ... < -1 < -1^-1 < 0 < 1^-1 < 1 < ...` across zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnrichedValue {
    pub value: i32,
    pub epsilon: Sign,
}

impl EnrichedValue {
    pub fn new(value: i32, epsilon: Sign) -> Self {
        EnrichedValue { value, epsilon }
    }

    pub fn plus(value: i32) -> Self {
        Self::new(value, Sign::Plus)
    }

    pub fn minus(value: i32) -> Self {
        Self::new(value, Sign::Minus)
    }

    pub fn magnitude(self) -> u32 {
        self.value.unsigned_abs()
    }

    /// Integer key realizing the total order.
    pub fn position(self) -> i64 {
        let v = self.value as i64;
        let m = i64::from(self.epsilon == Sign::Minus);
        if v >= 0 {
            2 * v - m
        } else {
            2 * v + m
        }
    }

    /// `-x`: flips the value, keeps the exponent.
    pub fn negate(self) -> Self {
        Self::new(-self.value, self.epsilon)
    }

    /// `a <=+ b`: `a < b`, or equal with `ε(a) = +`.
    pub fn le_plus(self, b: Self) -> bool {
        self < b || (self == b && self.epsilon == Sign::Plus)
    }

    /// `a <=- b`: `a < b`, or equal with `ε(a) = -`.
    pub fn le_minus(self, b: Self) -> bool {
        self < b || (self == b && self.epsilon == Sign::Minus)
    }
}

impl Ord for EnrichedValue {
    fn cmp(&self, o: &Self) -> Ordering {
        self.position().cmp(&o.position())
    }
}

impl PartialOrd for EnrichedValue {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for EnrichedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.epsilon {
            Sign::Plus => write!(f, "{}", self.value),
            Sign::Minus => write!(f, "{}^-1", self.value),
        }
    }
}

/// Which image set a P-partition takes values in, with its size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ImageSetSpec {
    /// `{1, ..., k}`
    Ordinary(usize),
    /// `{-k, ..., k}` with `f(-i) = -f(i)`, so chains live in `{0, ..., k}`
    OrdinaryB(usize),
    /// `[k]'`
    Enriched(usize),
    /// `[k]^(l) = {0} ∪ [k]'`
    LeftEnriched(usize),
    /// `[k]' ∪ {-(k+1)}`
    RightEnriched(usize),
    /// `[k-1]^(l) ∪ {-k}`
    ExteriorEnriched(usize),
    /// `±[k]'`
    BEnriched(usize),
}

impl ImageSetSpec {
    pub fn k(self) -> usize {
        use ImageSetSpec::*;
        match self {
            Ordinary(k) | OrdinaryB(k) | Enriched(k) | LeftEnriched(k) | RightEnriched(k) | ExteriorEnriched(k)
            | BEnriched(k) => k,
        }
    }

    pub fn with_k(self, k: usize) -> Self {
        use ImageSetSpec::*;
        match self {
            Ordinary(_) => Ordinary(k),
            OrdinaryB(_) => OrdinaryB(k),
            Enriched(_) => Enriched(k),
            LeftEnriched(_) => LeftEnriched(k),
            RightEnriched(_) => RightEnriched(k),
            ExteriorEnriched(_) => ExteriorEnriched(k),
            BEnriched(_) => BEnriched(k),
        }
    }

    /// True for the image sets used with signed posets.
    pub fn is_type_b(self) -> bool {
        matches!(self, ImageSetSpec::OrdinaryB(_) | ImageSetSpec::BEnriched(_))
    }

    /// Every type A flavor at parameter `k`.
    pub fn all_type_a(k: usize) -> [ImageSetSpec; 5] {
        use ImageSetSpec::*;
        [Ordinary(k), Enriched(k), LeftEnriched(k), RightEnriched(k), ExteriorEnriched(k)]
    }

    /// Every type B flavor at parameter `k`.
    pub fn all_type_b(k: usize) -> [ImageSetSpec; 2] {
        [ImageSetSpec::OrdinaryB(k), ImageSetSpec::BEnriched(k)]
    }

    /// The letters in increasing order.
    pub fn values(self) -> Vec<EnrichedValue> {
        use EnrichedValue as V;
        let k = self.k() as i32;
        let primed = |lo: i32, hi: i32| (lo..=hi).flat_map(|v| [V::minus(v), V::plus(v)]);
        let mut v: Vec<V> = match self {
            ImageSetSpec::Ordinary(_) => (1..=k).map(V::plus).collect(),
            ImageSetSpec::OrdinaryB(_) => (-k..=k).map(V::plus).collect(),
            ImageSetSpec::Enriched(_) => primed(1, k).collect(),
            ImageSetSpec::LeftEnriched(_) => std::iter::once(V::plus(0)).chain(primed(1, k)).collect(),
            ImageSetSpec::RightEnriched(_) => primed(1, k).chain([V::minus(k + 1)]).collect(),
            ImageSetSpec::ExteriorEnriched(_) if k == 0 => Vec::new(),
            ImageSetSpec::ExteriorEnriched(_) => {
                std::iter::once(V::plus(0)).chain(primed(1, k - 1)).chain([V::minus(k)]).collect()
            }
            ImageSetSpec::BEnriched(_) => primed(1, k).map(V::negate).chain([V::plus(0)]).chain(primed(1, k)).collect(),
        };
        v.sort();
        v
    }

    /// Index-level alphabet for the enumerator.
    pub fn alphabet(self) -> Alphabet {
        let vals = self.values();
        let plus = vals.iter().map(|v| v.epsilon == Sign::Plus).collect();
        let a = Alphabet::new(plus);
        if self.is_type_b() {
            a.symmetric()
        } else {
            a
        }
    }
}

impl fmt::Display for ImageSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ImageSetSpec::Ordinary(_) => "ordinary",
            ImageSetSpec::OrdinaryB(_) => "ordinaryB",
            ImageSetSpec::Enriched(_) => "enriched",
            ImageSetSpec::LeftEnriched(_) => "left_enriched",
            ImageSetSpec::RightEnriched(_) => "right_enriched",
            ImageSetSpec::ExteriorEnriched(_) => "exterior_enriched",
            ImageSetSpec::BEnriched(_) => "B_enriched",
        };
        write!(f, "{name}[{}]", self.k())
    }
}

/// A totally ordered alphabet seen only through letter indices: letter `i`
/// is below letter `j` iff `i < j`, and each letter carries its `ε`.
///
/// Symmetric alphabets (type B) additionally have a negation `i -> len-1-i`
/// and a middle zero letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    plus: Vec<bool>,
    symmetric: bool,
}

impl Alphabet {
    pub fn new(plus: Vec<bool>) -> Self {
        Alphabet { plus, symmetric: false }
    }

    /// Marks the alphabet as symmetric about its middle letter.
    /// Panics unless the length is odd and `ε` is mirror-invariant.
    pub fn symmetric(mut self) -> Self {
        let n = self.plus.len();
        assert!(n % 2 == 1, "symmetric alphabet needs odd length");
        assert!((0..n).all(|i| self.plus[i] == self.plus[n - 1 - i]), "ε must be mirror-invariant");
        assert!(self.plus[n / 2], "zero letter must have ε = +");
        self.symmetric = true;
        self
    }

    pub fn len(&self) -> usize {
        self.plus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty()
    }

    pub fn is_plus(&self, i: usize) -> bool {
        self.plus[i]
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn zero(&self) -> Option<usize> {
        self.symmetric.then_some(self.plus.len() / 2)
    }

    pub fn negate(&self, i: usize) -> usize {
        debug_assert!(self.symmetric);
        self.plus.len() - 1 - i
    }

    /// `a <=+ b` (when `plus`) or `a <=- b`.
    pub fn le(&self, a: usize, b: usize, plus: bool) -> bool {
        a < b || (a == b && self.plus[a] == plus)
    }
}
