use alloc::vec::Vec;
use core::fmt;
use core::ops::{Deref, DerefMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn int(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n"` or `"p/q"` exactly. Decimal and exponent notation is rejected.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let parse_int = |s: &str| -> Option<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse::<BigInt>().ok()
    };
    match text.split_once('/') {
        None => parse_int(text).map(Rational::from_integer),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

/// A point or dual vector with exact coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec(pub Vec<Rational>);

impl RatVec {
    pub fn zeros(dim: usize) -> Self {
        RatVec((0..dim).map(|_| Rational::zero()).collect())
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RatVec(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &[Rational]) -> Rational {
        dot(&self.0, other)
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        RatVec(self.iter().zip(other.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        RatVec(self.iter().zip(other.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> RatVec {
        RatVec(self.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> RatVec {
        RatVec(self.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.iter().all(Zero::is_zero)
    }

    pub fn l1_norm(&self) -> Rational {
        self.iter().fold(Rational::zero(), |acc, a| acc + a.abs())
    }

    pub fn concat(&self, other: &RatVec) -> RatVec {
        let mut coords = self.0.clone();
        coords.extend(other.0.iter().cloned());
        RatVec(coords)
    }

    /// Coordinates at the given indices, in order.
    pub fn select(&self, indices: &[usize]) -> RatVec {
        RatVec(indices.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// Rescales onto the sum-norm unit sphere; zero stays zero.
    pub fn l1_normalized(&self) -> RatVec {
        let norm = self.l1_norm();
        if norm.is_zero() {
            self.clone()
        } else {
            self.scale(&norm.recip())
        }
    }
}

impl Deref for RatVec {
    type Target = Vec<Rational>;
    fn deref(&self) -> &Vec<Rational> {
        &self.0
    }
}

impl DerefMut for RatVec {
    fn deref_mut(&mut self) -> &mut Vec<Rational> {
        &mut self.0
    }
}

impl From<Vec<Rational>> for RatVec {
    fn from(v: Vec<Rational>) -> Self {
        RatVec(v)
    }
}

impl FromIterator<Rational> for RatVec {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RatVec(iter.into_iter().collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Dense row-major rational matrix, used for linear maps between spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: Vec<RatVec>,
    pub cols: usize,
}

impl RatMatrix {
    pub fn new(rows: Vec<RatVec>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.dim() == cols));
        RatMatrix { rows, cols }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::new(rows.iter().map(|r| RatVec::from_i64(r)).collect(), cols)
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix::new((0..n).map(|i| RatVec::unit(n, i)).collect(), n)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, x: &[Rational]) -> RatVec {
        self.rows.iter().map(|r| r.dot(x)).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        RatMatrix::new(rows, self.nrows())
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Positive multiple of `coords` with coprime integer entries.
pub(crate) fn scale_to_integers(coords: &[Rational]) -> Vec<BigInt> {
    let lcm = coords
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive(ints)
}

pub(crate) fn primitive(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
    }
    ints
}

pub(crate) fn primitive_direction(coords: &[Rational]) -> RatVec {
    scale_to_integers(coords)
        .into_iter()
        .map(Rational::from_integer)
        .collect()
}
