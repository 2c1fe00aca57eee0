//! Pop, popturn, pocket flip and pocket flipturn, and the flip-until-convex
//! loop.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::PolygonError;
use crate::numeric::{orientation, reflect_across_line, reflect_across_point, Orientation};
use crate::polygon::Polygon;

/// Default operation cap for [`convexify_by_flips`].
pub const DEFAULT_FLIP_CAP: usize = 100_000;

/// Reflect vertex `i` across the line through its two neighbours.
///
/// Undefined, and refused, at a hairpin vertex.
pub fn pop(polygon: &Polygon, i: usize) -> Result<Polygon, PolygonError> {
    polygon.check_index(i)?;
    let prev = polygon.vertex(polygon.prev_index(i));
    let next = polygon.vertex(i + 1);
    let image = reflect_across_line(polygon.vertex(i), prev, next).map_err(|_| PolygonError::Hairpin(i))?;
    Ok(polygon.with_replaced([(i, image)]))
}

/// Reflect vertex `i` through the midpoint of its two neighbours. Defined
/// everywhere, hairpins included; swaps the two incident edge lengths.
pub fn popturn(polygon: &Polygon, i: usize) -> Result<Polygon, PolygonError> {
    polygon.check_index(i)?;
    let mid = polygon.vertex(polygon.prev_index(i)).midpoint(polygon.vertex(i + 1));
    let image = reflect_across_point(polygon.vertex(i), &mid);
    Ok(polygon.with_replaced([(i, image)]))
}

/// An ordered list of vertices to pop, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PopSequence(pub Vec<usize>);

impl PopSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, polygon: &Polygon) -> Result<Polygon, PolygonError> {
        self.0.iter().try_fold(polygon.clone(), |p, &i| pop(&p, i))
    }
}

impl From<Vec<usize>> for PopSequence {
    fn from(v: Vec<usize>) -> Self {
        PopSequence(v)
    }
}

/// Region between a hull edge (the lid) and the polygon chain it spans.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pocket {
    /// Hull-consecutive vertices `(i, j)`, the chain running from `i` to `j`
    /// in increasing (cyclic) index order.
    pub lid: (usize, usize),
    /// Vertices strictly between the lid endpoints.
    pub chain: Vec<usize>,
}

/// All pockets of a simple polygon, ordered by the lid's first index.
///
/// A hull edge whose spanned chain lies entirely on the lid line bounds no
/// region and is not reported, so the result is empty exactly when the
/// polygon is (non-strictly) convex. Chain vertices on the lid line inside a
/// genuine pocket stay in the chain and reflect to themselves.
pub fn find_pockets(polygon: &Polygon) -> Result<Vec<Pocket>, PolygonError> {
    let mut hull = polygon.convex_hull()?;
    hull.sort_unstable();
    let n = polygon.len();
    let m = hull.len();
    let mut pockets = Vec::new();
    for a in 0..m {
        let (i, j) = (hull[a], hull[(a + 1) % m]);
        let chain: Vec<usize> = (1..(j + n - i) % n).map(|t| (i + t) % n).collect();
        if chain.is_empty() {
            continue;
        }
        let (li, lj) = (polygon.vertex(i), polygon.vertex(j));
        if chain
            .iter()
            .any(|&c| orientation(li, lj, polygon.vertex(c)) != Orientation::Collinear)
        {
            pockets.push(Pocket { lid: (i, j), chain });
        }
    }
    Ok(pockets)
}

fn ensure_current(polygon: &Polygon, pocket: &Pocket) -> Result<(), PolygonError> {
    let n = polygon.len();
    let (i, j) = pocket.lid;
    if i >= n || j >= n {
        return Err(PolygonError::StalePocket(i, j));
    }
    if !find_pockets(polygon)?.contains(pocket) {
        return Err(PolygonError::StalePocket(i, j));
    }
    Ok(())
}

/// Reflect the pocket chain across the lid line.
pub fn pocket_flip(polygon: &Polygon, pocket: &Pocket) -> Result<Polygon, PolygonError> {
    ensure_current(polygon, pocket)?;
    let (a, b) = (polygon.vertex(pocket.lid.0), polygon.vertex(pocket.lid.1));
    let images = pocket
        .chain
        .iter()
        .map(|&c| Ok((c, reflect_across_line(polygon.vertex(c), a, b)?)))
        .collect::<Result<Vec<_>, PolygonError>>()?;
    Ok(polygon.with_replaced(images))
}

/// Rotate the pocket chain a half turn about the lid midpoint.
///
/// The rotation swaps the lid endpoints, so the rotated chain is read in
/// reverse: the first chain slot receives the image of the last chain vertex.
pub fn pocket_flipturn(polygon: &Polygon, pocket: &Pocket) -> Result<Polygon, PolygonError> {
    ensure_current(polygon, pocket)?;
    let mid = polygon.vertex(pocket.lid.0).midpoint(polygon.vertex(pocket.lid.1));
    let images: Vec<_> = pocket
        .chain
        .iter()
        .zip(pocket.chain.iter().rev())
        .map(|(&slot, &source)| (slot, reflect_across_point(polygon.vertex(source), &mid)))
        .collect();
    Ok(polygon.with_replaced(images))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlipMode {
    Flip,
    Flipturn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PocketStrategy {
    /// Pocket with the smallest lid start index.
    First,
    /// Longest lid; ties go to the smaller start index.
    LargestLid,
    /// Uniform choice from a ChaCha stream with a fixed seed.
    SeededRandom(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvexifyOutcome {
    Convex { polygon: Polygon, operations: usize },
    CapExhausted { polygon: Polygon, operations: usize },
}

impl ConvexifyOutcome {
    pub fn polygon(&self) -> &Polygon {
        match self {
            ConvexifyOutcome::Convex { polygon, .. } | ConvexifyOutcome::CapExhausted { polygon, .. } => polygon,
        }
    }

    pub fn operations(&self) -> usize {
        match self {
            ConvexifyOutcome::Convex { operations, .. } | ConvexifyOutcome::CapExhausted { operations, .. } => {
                *operations
            }
        }
    }

    pub fn is_convex(&self) -> bool {
        matches!(self, ConvexifyOutcome::Convex { .. })
    }
}

pub fn convexify_by_flips(
    polygon: &Polygon,
    mode: FlipMode,
    strategy: PocketStrategy,
    cap: usize,
) -> Result<ConvexifyOutcome, PolygonError> {
    convexify_by_flips_observed(polygon, mode, strategy, cap, |_, _| {})
}

/// Like [`convexify_by_flips`], calling `observe(step, polygon)` after every
/// operation.
pub fn convexify_by_flips_observed(
    polygon: &Polygon,
    mode: FlipMode,
    strategy: PocketStrategy,
    cap: usize,
    mut observe: impl FnMut(usize, &Polygon),
) -> Result<ConvexifyOutcome, PolygonError> {
    if !polygon.is_simple() {
        return Err(PolygonError::NotSimple);
    }
    let mut rng = match strategy {
        PocketStrategy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut current = polygon.clone();
    let mut operations = 0;
    loop {
        let pockets = find_pockets(&current)?;
        if pockets.is_empty() {
            return Ok(ConvexifyOutcome::Convex { polygon: current, operations });
        }
        if operations >= cap {
            return Ok(ConvexifyOutcome::CapExhausted { polygon: current, operations });
        }
        let chosen = match strategy {
            PocketStrategy::First => &pockets[0],
            PocketStrategy::LargestLid => pockets
                .iter()
                .rev()
                .max_by_key(|pk| current.vertex(pk.lid.0).squared_distance(current.vertex(pk.lid.1)))
                .expect("nonempty"),
            PocketStrategy::SeededRandom(_) => {
                let rng = rng.as_mut().expect("seeded");
                &pockets[rng.random_range(0..pockets.len())]
            }
        };
        current = match mode {
            FlipMode::Flip => pocket_flip(&current, chosen)?,
            FlipMode::Flipturn => pocket_flipturn(&current, chosen)?,
        };
        operations += 1;
        observe(operations, &current);
    }
}
