//! The polygon value type and its classification predicates.
//!
//! Indices are 0-based throughout; vertex `0` is what a 1-based figure
//! labels `p1`. Index arithmetic wraps modulo `n`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::PolygonError;
use crate::numeric::{orientation, segments_intersect, IntersectionMode, Orientation, Point, Rational, Segment};

/// A closed polygon given by its cyclically ordered vertices.
///
/// Every edge has distinct endpoints; coincident non-adjacent vertices are
/// allowed since pops can produce them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        if let Some(i) = (0..n).find(|&i| vertices[i] == vertices[(i + 1) % n]) {
            return Err(PolygonError::ZeroLengthEdge(i));
        }
        Ok(Polygon { vertices })
    }

    /// Builds from integer coordinate pairs. Panics on an invalid polygon,
    /// so it is meant for literals in tests and examples.
    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        Polygon::new(coords.iter().map(|&(x, y)| Point::int(x, y)).collect())
            .expect("invalid polygon literal")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; a polygon has at least three vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    /// Vertex at `i mod n`.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.len()]
    }

    pub fn prev_index(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    pub fn next_index(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<(), PolygonError> {
        if i < self.len() {
            Ok(())
        } else {
            Err(PolygonError::IndexOutOfRange { index: i, n: self.len() })
        }
    }

    /// Copy of `self` with the given vertices replaced. Callers guarantee the
    /// replacement keeps every edge non-degenerate.
    pub(crate) fn with_replaced(&self, replacements: impl IntoIterator<Item = (usize, Point)>) -> Polygon {
        let mut vertices = self.vertices.clone();
        for (i, p) in replacements {
            vertices[i] = p;
        }
        debug_assert!(Polygon::new(vertices.clone()).is_ok());
        Polygon { vertices }
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Segment<'_> {
        Segment::new(self.vertex(i), self.vertex(i + 1))
    }

    pub fn squared_edge_lengths(&self) -> Vec<Rational> {
        (0..self.len())
            .map(|i| self.vertex(i).squared_distance(self.vertex(i + 1)))
            .collect()
    }

    /// Turn direction at each vertex, `orientation(p[i-1], p[i], p[i+1])`.
    pub fn turns(&self) -> Vec<Orientation> {
        (0..self.len())
            .map(|i| orientation(self.vertex(self.prev_index(i)), self.vertex(i), self.vertex(i + 1)))
            .collect()
    }

    /// All nonzero turns share one sign and at least one turn is nonzero.
    /// Says nothing about simplicity.
    pub fn has_uniform_turns(&self) -> bool {
        let mut seen = Orientation::Collinear;
        for t in self.turns() {
            if t == Orientation::Collinear {
                continue;
            }
            if seen == Orientation::Collinear {
                seen = t;
            } else if seen != t {
                return false;
            }
        }
        seen != Orientation::Collinear
    }

    pub fn has_distinct_vertices(&self) -> bool {
        let mut sorted: Vec<&Point> = self.vertices.iter().collect();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Vertices pairwise distinct, non-adjacent edges disjoint, adjacent
    /// edges meeting only at their shared endpoint.
    pub fn is_simple(&self) -> bool {
        if !self.has_distinct_vertices() {
            return false;
        }
        let n = self.len();
        // Adjacent edges overlap only when the path doubles back on itself.
        for i in 0..n {
            let prev = self.vertex(self.prev_index(i));
            let here = self.vertex(i);
            let next = self.vertex(i + 1);
            if orientation(prev, here, next) == Orientation::Collinear
                && (prev - here).dot(&(next - here)).is_positive()
            {
                return false;
            }
        }
        for i in 0..n {
            // Skip j = i + 1 and, for i = 0, the closing edge n - 1.
            let last = if i == 0 { n - 1 } else { n };
            for j in (i + 2)..last {
                let hit = segments_intersect(&self.edge(i), &self.edge(j), IntersectionMode::IncludingEndpoints)
                    .expect("polygon edges are never zero-length");
                if hit {
                    return false;
                }
            }
        }
        true
    }

    /// Simple, with all nonzero turns of one sign. `strict` also forbids
    /// collinear consecutive triples.
    pub fn is_convex(&self, strict: bool) -> bool {
        if strict && self.turns().contains(&Orientation::Collinear) {
            return false;
        }
        self.has_uniform_turns() && self.is_simple()
    }

    pub fn scalene_flags(&self) -> ScaleneFlags {
        let lengths = self.squared_edge_lengths();
        let n = lengths.len();
        let weakly_scalene = (0..n).all(|i| lengths[i] != lengths[(i + 1) % n]);
        let mut sorted = lengths.clone();
        sorted.sort();
        let scalene = sorted.windows(2).all(|w| w[0] != w[1]);
        ScaleneFlags { scalene, weakly_scalene }
    }

    /// Indices `i` with `p[i-1] == p[i+1]`.
    pub fn hairpin_indices(&self) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&i| self.is_hairpin(i))
            .collect()
    }

    pub fn is_hairpin(&self, i: usize) -> bool {
        self.vertex(self.prev_index(i)) == self.vertex(i + 1)
    }

    /// Strict convex hull (collinear boundary points dropped) as vertex
    /// indices in counterclockwise order, starting from the smallest index.
    pub fn convex_hull(&self) -> Result<Vec<usize>, PolygonError> {
        if !self.is_simple() {
            return Err(PolygonError::NotSimple);
        }
        Ok(strict_hull(&self.vertices))
    }

    pub fn classify(&self) -> ClassificationReport {
        let simple = self.is_simple();
        let uniform = self.has_uniform_turns();
        let convex = simple && uniform;
        let strictly_convex = convex && !self.turns().contains(&Orientation::Collinear);
        let ScaleneFlags { scalene, weakly_scalene } = self.scalene_flags();
        ClassificationReport {
            simple,
            convex,
            strictly_convex,
            scalene,
            weakly_scalene,
            hairpin_indices: self.hairpin_indices().into_iter().collect(),
        }
    }

    /// Largest coordinate bit size over all vertices.
    pub fn bit_size(&self) -> u64 {
        self.vertices.iter().map(Point::bit_size).max().unwrap_or(0)
    }
}

/// Andrew's monotone chain over the given points, collinear points removed.
/// Returns indices counterclockwise, rotated to start at the smallest index.
pub(crate) fn strict_hull(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    order.dedup_by(|a, b| points[*a] == points[*b]);
    if order.len() < 3 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(order.len() * 2);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2
                && orientation(&points[hull[hull.len() - 2]], &points[hull[hull.len() - 1]], &points[i])
                    != Orientation::CounterClockwise
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    if let Some(pos) = hull.iter().enumerate().min_by_key(|(_, &i)| i).map(|(p, _)| p) {
        hull.rotate_left(pos);
    }
    hull
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScaleneFlags {
    pub scalene: bool,
    pub weakly_scalene: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub simple: bool,
    pub convex: bool,
    pub strictly_convex: bool,
    pub scalene: bool,
    pub weakly_scalene: bool,
    pub hairpin_indices: Vec<usize>,
}
