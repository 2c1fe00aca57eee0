//! Alternating polygons `A(x, y, sigma)`: `2k` vertices placed alternately on
//! the x-axis and the y-axis.
//!
//! With 0-based indices, vertex `2i` is `(sigma[2i] * x[i], 0)` and vertex
//! `2i + 1` is `(0, sigma[2i + 1] * y[i])`. A 1-based figure labels these
//! `p(2i+1)` and `p(2i+2)`.
//!
//! Popping vertex `i` of a member only negates `sigma[i]`: the neighbours of
//! an x-axis vertex both lie on the y-axis, so the reflection line is the
//! y-axis itself and the vertex lands on its mirror image (symmetrically for
//! y-axis vertices). Given `(x, y)`, the sign vector is therefore a
//! complete state descriptor under pops.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SpecError;
use crate::numeric::{Point, Rational};
use crate::polygon::Polygon;
use crate::transforms::PopSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, value: &Rational) -> Rational {
        match self {
            Sign::Plus => value.clone(),
            Sign::Minus => -value,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Signs written as a string over `{+, -}`, e.g. `"++---+"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    pub fn all(sign: Sign, n: usize) -> Self {
        SignVector(vec![sign; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn toggled(&self, i: usize) -> SignVector {
        let mut signs = self.0.clone();
        signs[i] = signs[i].flipped();
        SignVector(signs)
    }

    pub fn negated(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| s.flipped()).collect())
    }

    /// Bit `i` set iff sign `i` is minus. Requires `len() <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(self.len() <= 64, "sign vector too long for a mask");
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Minus)
            .fold(0, |m, (i, _)| m | (1u64 << i))
    }

    pub fn from_mask(mask: u64, n: usize) -> SignVector {
        SignVector(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect(),
        )
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for SignVector {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(SpecError::BadSign(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignVector)
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Parameters `(x, y, sigma)` of an alternating polygon with `k = x.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlternatingSpec {
    x: Vec<Rational>,
    y: Vec<Rational>,
    sigma: SignVector,
}

fn check_axis(axis: char, values: &[Rational]) -> Result<(), SpecError> {
    if let Some((index, v)) = values.iter().enumerate().find(|(_, v)| !v.is_positive()) {
        return Err(SpecError::NonPositive { axis, index, value: v.to_string() });
    }
    for second in 1..values.len() {
        if let Some(first) = values[..second].iter().position(|v| *v == values[second]) {
            return Err(SpecError::Duplicate {
                axis,
                first,
                second,
                value: values[second].to_string(),
            });
        }
    }
    Ok(())
}

impl AlternatingSpec {
    /// Requires `k >= 2`, positive pairwise-distinct `x` and `y` entries
    /// (cross-vector coincidences such as `x[i] == y[j]` are allowed), and
    /// `2k` signs.
    pub fn new(x: Vec<Rational>, y: Vec<Rational>, sigma: SignVector) -> Result<Self, SpecError> {
        let k = x.len();
        if k < 2 {
            return Err(SpecError::KTooSmall(k));
        }
        if y.len() != k {
            return Err(SpecError::LengthMismatch { what: "y entries", expected: k, got: y.len() });
        }
        if sigma.len() != 2 * k {
            return Err(SpecError::LengthMismatch { what: "signs", expected: 2 * k, got: sigma.len() });
        }
        check_axis('x', &x)?;
        check_axis('y', &y)?;
        Ok(AlternatingSpec { x, y, sigma })
    }

    /// Integer convenience constructor.
    pub fn from_ints(x: &[i64], y: &[i64], sigma: &str) -> Result<Self, SpecError> {
        AlternatingSpec::new(
            x.iter().map(|&v| v.into()).collect(),
            y.iter().map(|&v| v.into()).collect(),
            sigma.parse()?,
        )
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    /// Vertex count `2k`.
    pub fn n(&self) -> usize {
        2 * self.k()
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    pub fn sigma(&self) -> &SignVector {
        &self.sigma
    }

    /// Same `(x, y)`, different signs.
    pub fn with_sigma(&self, sigma: SignVector) -> Result<Self, SpecError> {
        if sigma.len() != self.n() {
            return Err(SpecError::LengthMismatch { what: "signs", expected: self.n(), got: sigma.len() });
        }
        Ok(AlternatingSpec { x: self.x.clone(), y: self.y.clone(), sigma })
    }

    pub fn vertex(&self, i: usize) -> Point {
        let s = self.sigma.get(i);
        if i.is_multiple_of(2) {
            Point::new(s.apply(&self.x[i / 2]), Rational::zero())
        } else {
            Point::new(Rational::zero(), s.apply(&self.y[i / 2]))
        }
    }

    pub fn build(&self) -> Polygon {
        Polygon::new((0..self.n()).map(|i| self.vertex(i)).collect())
            .expect("alternating vertices are nonzero on perpendicular axes, so no edge degenerates")
    }

    /// Negate `sigma[i]`; the sign-space image of `pop(build(), i)`.
    pub fn pop_sign(&self, i: usize) -> AlternatingSpec {
        AlternatingSpec {
            x: self.x.clone(),
            y: self.y.clone(),
            sigma: self.sigma.toggled(i),
        }
    }

    /// Ascending indices where the current signs differ from `target`.
    pub fn steering_sequence(&self, target: &SignVector) -> Result<PopSequence, SpecError> {
        if target.len() != self.n() {
            return Err(SpecError::LengthMismatch { what: "signs", expected: self.n(), got: target.len() });
        }
        Ok(PopSequence(
            (0..self.n()).filter(|&i| self.sigma.get(i) != target.get(i)).collect(),
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalKind {
    /// Simple member: `x = y = (k, k-1, ..., 1)`, `sigma = (+, +, -, ..., -)`.
    P1,
    /// Self-intersecting member: same `x = y`, all signs `+`.
    P2,
}

pub fn canonical_example(kind: CanonicalKind, k: usize) -> Result<AlternatingSpec, SpecError> {
    if k < 2 {
        return Err(SpecError::KTooSmall(k));
    }
    // x_1 = k and x_i = k - i + 1 give the same vector for both kinds.
    let coords: Vec<Rational> = (1..=k).rev().map(|v| Rational::from_integer(v as i64)).collect();
    let sigma = match kind {
        CanonicalKind::P1 => SignVector::new(
            (0..2 * k).map(|i| if i < 2 { Sign::Plus } else { Sign::Minus }).collect(),
        ),
        CanonicalKind::P2 => SignVector::all(Sign::Plus, 2 * k),
    };
    AlternatingSpec::new(coords.clone(), coords, sigma)
}

/// How a recovered spec lines up with the polygon it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub spec: AlternatingSpec,
    /// 0 when polygon vertex 0 lies on the x-axis; 1 when it lies on the
    /// y-axis and the vertex list is read starting from vertex 1.
    pub offset: usize,
}

impl Membership {
    /// Spec index of polygon vertex `i`.
    pub fn spec_index(&self, i: usize) -> usize {
        let n = self.spec.n();
        (i + n - self.offset) % n
    }

    /// Polygon index of spec vertex `j`.
    pub fn polygon_index(&self, j: usize) -> usize {
        (j + self.offset) % self.spec.n()
    }
}

/// Recognise an alternating polygon. `None` when the vertices do not
/// alternate between the axes or the absolute coordinates repeat on an axis.
pub fn recover_spec(polygon: &Polygon) -> Option<Membership> {
    let n = polygon.len();
    if !n.is_multiple_of(2) || n < 4 {
        return None;
    }
    let v0 = polygon.vertex(0);
    let offset = if v0.y.is_zero() && !v0.x.is_zero() {
        0
    } else if v0.x.is_zero() && !v0.y.is_zero() {
        1
    } else {
        return None;
    };
    let k = n / 2;
    let mut x = Vec::with_capacity(k);
    let mut y = Vec::with_capacity(k);
    let mut signs = Vec::with_capacity(n);
    for j in 0..n {
        let p = polygon.vertex(j + offset);
        let (on_axis, off_axis) = if j % 2 == 0 { (&p.x, &p.y) } else { (&p.y, &p.x) };
        if !off_axis.is_zero() || on_axis.is_zero() {
            return None;
        }
        signs.push(if on_axis.is_negative() { Sign::Minus } else { Sign::Plus });
        if j % 2 == 0 {
            x.push(on_axis.abs());
        } else {
            y.push(on_axis.abs());
        }
    }
    AlternatingSpec::new(x, y, SignVector::new(signs))
        .ok()
        .map(|spec| Membership { spec, offset })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::pop;

    fn reference_hexagon() -> AlternatingSpec {
        AlternatingSpec::from_ints(&[2, 3, 1], &[3, 2, 1], "++---+").unwrap()
    }

    #[test]
    fn build_reference_hexagon() {
        assert_eq!(
            reference_hexagon().build(),
            Polygon::from_ints(&[(2, 0), (0, 3), (-3, 0), (0, -2), (-1, 0), (0, 1)])
        );
    }

    #[test]
    fn build_convex_witness() {
        let spec = AlternatingSpec::from_ints(&[2, 1], &[2, 1], "++--").unwrap();
        let p = spec.build();
        assert_eq!(p, Polygon::from_ints(&[(2, 0), (0, 2), (-1, 0), (0, -1)]));
        assert!(p.is_convex(true));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            AlternatingSpec::from_ints(&[2, 2, 1], &[3, 2, 1], "++++++"),
            Err(SpecError::Duplicate { axis: 'x', first: 0, second: 1, value: "2".into() })
        );
        assert_eq!(
            AlternatingSpec::from_ints(&[2, 0, 1], &[3, 2, 1], "++++++"),
            Err(SpecError::NonPositive { axis: 'x', index: 1, value: "0".into() })
        );
        assert_eq!(
            AlternatingSpec::from_ints(&[2, 3, 1], &[3, -2, 1], "++++++"),
            Err(SpecError::NonPositive { axis: 'y', index: 1, value: "-2".into() })
        );
        assert!(matches!(
            AlternatingSpec::from_ints(&[2, 3, 1], &[3, 2], "++++++"),
            Err(SpecError::LengthMismatch { .. })
        ));
        assert!(matches!(
            AlternatingSpec::from_ints(&[2, 3, 1], &[3, 2, 1], "+++++"),
            Err(SpecError::LengthMismatch { .. })
        ));
        assert_eq!(AlternatingSpec::from_ints(&[2], &[3], "++"), Err(SpecError::KTooSmall(1)));
        assert_eq!("++x".parse::<SignVector>(), Err(SpecError::BadSign('x')));
        // cross-vector coincidence is fine
        assert!(AlternatingSpec::from_ints(&[1, 2], &[2, 1], "++++").is_ok());
    }

    #[test]
    fn canonical_examples() {
        let p1 = canonical_example(CanonicalKind::P1, 4).unwrap();
        assert_eq!(p1, AlternatingSpec::from_ints(&[4, 3, 2, 1], &[4, 3, 2, 1], "++------").unwrap());
        assert!(p1.build().is_simple());
        let p2 = canonical_example(CanonicalKind::P2, 3).unwrap();
        assert_eq!(p2, AlternatingSpec::from_ints(&[3, 2, 1], &[3, 2, 1], "++++++").unwrap());
        assert!(!p2.build().is_simple());
        assert!(canonical_example(CanonicalKind::P1, 3).unwrap().build().is_simple());
        assert_eq!(canonical_example(CanonicalKind::P2, 1), Err(SpecError::KTooSmall(1)));
    }

    #[test]
    fn three_pop_sign_chain() {
        let s0 = reference_hexagon();
        // 1-based vertices 2, 1, 6
        let s1 = s0.pop_sign(1);
        let s2 = s1.pop_sign(0);
        let s3 = s2.pop_sign(5);
        assert_eq!(s1.sigma().to_string(), "+----+");
        assert_eq!(s2.sigma().to_string(), "-----+");
        assert_eq!(s3.sigma().to_string(), "------");
        assert_eq!(pop(&s0.build(), 1).unwrap(), s1.build());
    }

    #[test]
    fn pop_sign_algebra() {
        let s = reference_hexagon();
        assert_eq!(s.pop_sign(3).pop_sign(3), s);
        assert_eq!(s.pop_sign(1).pop_sign(4), s.pop_sign(4).pop_sign(1));
    }

    #[test]
    fn steering() {
        let s = reference_hexagon();
        assert!(s.steering_sequence(s.sigma()).unwrap().is_empty());
        let target: SignVector = "------".parse().unwrap();
        assert_eq!(s.steering_sequence(&target).unwrap(), PopSequence(vec![0, 1, 5]));
        assert_eq!(
            s.steering_sequence(&s.sigma().negated()).unwrap(),
            PopSequence((0..6).collect())
        );
        assert!(s.steering_sequence(&"++".parse().unwrap()).is_err());
    }

    #[test]
    fn recovery() {
        let s = reference_hexagon();
        assert_eq!(recover_spec(&s.build()), Some(Membership { spec: s.clone(), offset: 0 }));
        let square = Polygon::from_ints(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_eq!(recover_spec(&square), None);
        let off_axis = Polygon::from_ints(&[(2, 0), (0, 3), (-3, 0), (1, -2), (-1, 0), (0, 1)]);
        assert_eq!(recover_spec(&off_axis), None);
        assert_eq!(recover_spec(&Polygon::from_ints(&[(1, 0), (0, 1), (-2, 0)])), None);
    }

    #[test]
    fn recovery_shifted_phase() {
        let s = reference_hexagon();
        let mut vs = s.build().into_vertices();
        vs.rotate_right(1);
        let rotated = Polygon::new(vs).unwrap();
        let m = recover_spec(&rotated).unwrap();
        assert_eq!(m.offset, 1);
        assert_eq!(m.spec, s);
        assert_eq!(rotated.vertex(m.polygon_index(0)), &s.vertex(0));
        for i in 0..6 {
            assert_eq!(m.polygon_index(m.spec_index(i)), i);
        }
    }

    #[test]
    fn mask_roundtrip() {
        let sigma: SignVector = "+-+--+".parse().unwrap();
        assert_eq!(sigma.to_mask(), 0b011010);
        assert_eq!(SignVector::from_mask(sigma.to_mask(), 6), sigma);
    }
}
