//! Seeded generators for test corpora and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::alternating::{AlternatingSpec, Sign, SignVector};
use crate::numeric::{Point, Rational};
use crate::polygon::Polygon;

/// A simple polygon with `n` integer vertices drawn from `[-range, range]^2`.
///
/// Points are sorted by angle around their centroid, which yields a
/// star-shaped polygon; draws that come out non-simple are rejected.
pub fn simple_polygon<R: Rng>(rng: &mut R, n: usize, range: i64) -> Polygon {
    assert!(n >= 3);
    loop {
        let mut pts: Vec<(i64, i64)> = (0..n)
            .map(|_| (rng.random_range(-range..=range), rng.random_range(-range..=range)))
            .collect();
        let (cx, cy) = pts.iter().fold((0.0, 0.0), |(sx, sy), &(x, y)| (sx + x as f64, sy + y as f64));
        let (cx, cy) = (cx / n as f64, cy / n as f64);
        // Sorting uses floats only to propose an order; simplicity is
        // checked exactly below.
        pts.sort_by(|a, b| {
            let ta = (a.1 as f64 - cy).atan2(a.0 as f64 - cx);
            let tb = (b.1 as f64 - cy).atan2(b.0 as f64 - cx);
            ta.total_cmp(&tb)
        });
        let Ok(polygon) = Polygon::new(pts.iter().map(|&(x, y)| Point::int(x, y)).collect()) else {
            continue;
        };
        if polygon.is_simple() {
            return polygon;
        }
    }
}

/// A simple polygon that is not convex.
pub fn simple_nonconvex_polygon<R: Rng>(rng: &mut R, n: usize, range: i64) -> Polygon {
    assert!(n >= 4);
    loop {
        let p = simple_polygon(rng, n, range);
        if !p.is_convex(false) {
            return p;
        }
    }
}

/// Any valid polygon (possibly self-intersecting) with integer vertices.
pub fn any_polygon<R: Rng>(rng: &mut R, n: usize, range: i64) -> Polygon {
    loop {
        let pts = (0..n)
            .map(|_| Point::int(rng.random_range(-range..=range), rng.random_range(-range..=range)))
            .collect();
        if let Ok(p) = Polygon::new(pts) {
            return p;
        }
    }
}

/// `k` distinct positive rationals with numerators up to `max_numer` and
/// denominators up to `max_denom`.
pub fn distinct_positive<R: Rng>(rng: &mut R, k: usize, max_numer: i64, max_denom: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    while out.len() < k {
        let q = Rational::new(rng.random_range(1..=max_numer), rng.random_range(1..=max_denom))
            .expect("nonzero denominator");
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out.shuffle(rng);
    out
}

pub fn sign_vector<R: Rng>(rng: &mut R, n: usize) -> SignVector {
    SignVector::new(
        (0..n)
            .map(|_| if rng.random_bool(0.5) { Sign::Minus } else { Sign::Plus })
            .collect(),
    )
}

/// A random admissible alternating spec with the given `k`.
pub fn alternating_spec<R: Rng>(rng: &mut R, k: usize) -> AlternatingSpec {
    let x = distinct_positive(rng, k, 40, 6);
    let y = distinct_positive(rng, k, 40, 6);
    AlternatingSpec::new(x, y, sign_vector(rng, 2 * k)).expect("admissible by construction")
}
