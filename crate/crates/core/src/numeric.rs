//! Exact scalar and point arithmetic plus the geometric primitives the rest
//! of the crate is built from.
//!
//! Every value here is an exact rational. Reflections only use field
//! operations, so a rational input always maps to a rational output and no
//! comparison anywhere needs a tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GeometryError;

/// An exact fraction kept in lowest terms with a positive denominator.
///
/// Because the representation is canonical, derived equality and hashing
/// agree with value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, GeometryError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(GeometryError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        match self.numer().sign() {
            BigSign::Minus => -1,
            BigSign::NoSign => 0,
            BigSign::Plus => 1,
        }
    }

    /// Larger of the bit lengths of numerator and denominator.
    pub fn bit_size(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }

    /// Exact division; `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    /// Lossy conversion for display purposes only.
    pub fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }

    pub(crate) fn times_two(&self) -> Rational {
        Rational(&self.0 + &self.0)
    }

    pub(crate) fn halve(&self) -> Rational {
        Rational(&self.0 / BigInt::from(2))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = GeometryError;

    /// Accepts `"n"` or `"n/d"` with an optional leading sign on each part.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GeometryError::MalformedRational(s.to_string());
        let parse_int = |t: &str| -> Result<BigInt, GeometryError> {
            let t = t.trim();
            let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(bad());
                }
                Rational::new(parse_int(n)?, d)
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// A point (or vector) with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Convenience constructor for integer coordinates.
    pub fn int(x: i64, y: i64) -> Self {
        Point::new(x.into(), y.into())
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &(&self.x * &other.x) + &(&self.y * &other.y)
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, other: &Point) -> Rational {
        &(&self.x * &other.y) - &(&self.y * &other.x)
    }

    pub fn squared_norm(&self) -> Rational {
        self.dot(self)
    }

    pub fn squared_distance(&self, other: &Point) -> Rational {
        (self - other).squared_norm()
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new((&self.x + &other.x).halve(), (&self.y + &other.y).halve())
    }

    pub fn scale(&self, factor: &Rational) -> Point {
        Point::new(&self.x * factor, &self.y * factor)
    }

    pub fn bit_size(&self) -> u64 {
        self.x.bit_size().max(self.y.bit_size())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

/// Turn direction of an ordered point triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// Sign of `(b - a) x (c - a)`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    match (b - a).cross(&(c - a)).signum() {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

/// Mirror image of `p` in the line through `a` and `b`.
pub fn reflect_across_line(p: &Point, a: &Point, b: &Point) -> Result<Point, GeometryError> {
    let dir = b - a;
    let len2 = dir.squared_norm();
    let t = (p - a).dot(&dir).checked_div(&len2).ok_or(GeometryError::DegenerateLine)?;
    let foot = a + &dir.scale(&t);
    Ok(Point::new(
        &foot.x.times_two() - &p.x,
        &foot.y.times_two() - &p.y,
    ))
}

/// `2m - p`.
pub fn reflect_across_point(p: &Point, m: &Point) -> Point {
    Point::new(&m.x.times_two() - &p.x, &m.y.times_two() - &p.y)
}

/// A closed segment between two points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment<'a> {
    pub start: &'a Point,
    pub end: &'a Point,
}

impl<'a> Segment<'a> {
    pub fn new(start: &'a Point, end: &'a Point) -> Self {
        Segment { start, end }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionMode {
    /// Only crossings in the relative interior of both segments count.
    ProperOnly,
    /// Any shared point counts, including endpoints and collinear overlap.
    IncludingEndpoints,
}

/// `q` lies in the bounding box of segment `a`-`b`; combined with a zero
/// orientation this means `q` is on the closed segment.
fn in_box(a: &Point, b: &Point, q: &Point) -> bool {
    let within = |lo: &Rational, hi: &Rational, v: &Rational| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= v && v <= hi
    };
    within(&a.x, &b.x, &q.x) && within(&a.y, &b.y, &q.y)
}

pub fn segments_intersect(
    s1: &Segment<'_>,
    s2: &Segment<'_>,
    mode: IntersectionMode,
) -> Result<bool, GeometryError> {
    if s1.start == s1.end || s2.start == s2.end {
        return Err(GeometryError::ZeroLengthSegment);
    }
    let (a, b, c, d) = (s1.start, s1.end, s2.start, s2.end);
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    use Orientation::Collinear;

    let proper = o1 != Collinear
        && o2 != Collinear
        && o3 != Collinear
        && o4 != Collinear
        && o1 != o2
        && o3 != o4;
    if proper {
        return Ok(true);
    }
    match mode {
        IntersectionMode::ProperOnly => Ok(false),
        IntersectionMode::IncludingEndpoints => Ok((o1 == Collinear && in_box(a, b, c))
            || (o2 == Collinear && in_box(a, b, d))
            || (o3 == Collinear && in_box(c, d, a))
            || (o4 == Collinear && in_box(c, d, b))),
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic by x, then y.
impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}
