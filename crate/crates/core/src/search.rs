//! Exhaustive classification of an alternating family and breadth-first
//! search for shortest convexifying pop sequences.

use std::collections::HashSet;

use num_bigint::Sign as BigSign;
use serde::Serialize;

use crate::alternating::{recover_spec, AlternatingSpec, Membership, SignVector};
use crate::error::SpecError;
use crate::exec::Execution;
use crate::numeric::{Rational, Point};
use crate::polygon::Polygon;
use crate::transforms::{pop, PopSequence};

/// Largest vertex count `2k` accepted for exhaustive sign enumeration.
pub const MAX_FAMILY_VERTICES: usize = 26;

/// Default coordinate size limit (numerator or denominator bits).
pub const DEFAULT_BIT_LIMIT: u64 = 512;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub k: usize,
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
    pub total_states: u64,
    /// Sign vectors whose polygon is simple and convex, ascending by mask.
    pub convex_states: Vec<SignVector>,
    pub simple_states: u64,
    pub self_intersecting_states: u64,
    /// Self-intersecting states whose turns all share a sign; they would
    /// count as convex under a reading that ignores simplicity.
    pub uniform_turn_self_intersecting_states: u64,
}

#[derive(Default)]
struct FamilyTally {
    convex: Vec<u64>,
    simple: u64,
    uniform_crossing: u64,
}

impl FamilyTally {
    fn merge(mut self, other: FamilyTally) -> FamilyTally {
        self.convex.extend(other.convex);
        self.simple += other.simple;
        self.uniform_crossing += other.uniform_crossing;
        self
    }
}

pub fn exhaustive_family_search(x: &[Rational], y: &[Rational]) -> Result<FamilyReport, SpecError> {
    exhaustive_family_search_with(x, y, Execution::default())
}

/// Build and classify all `2^(2k)` members `A(x, y, sigma)`.
///
/// Pops only toggle sign bits, so from any member every other member with
/// the same `(x, y)` is reachable and nothing else is: this enumeration is
/// the complete pop orbit.
pub fn exhaustive_family_search_with(
    x: &[Rational],
    y: &[Rational],
    exec: Execution,
) -> Result<FamilyReport, SpecError> {
    let k = x.len();
    let n = 2 * k;
    let base = AlternatingSpec::new(x.to_vec(), y.to_vec(), SignVector::from_mask(0, n))?;
    if n > MAX_FAMILY_VERTICES {
        return Err(SpecError::TooLarge { n, limit: MAX_FAMILY_VERTICES });
    }
    let total = 1u64 << n;
    let tally = exec.fold_range(
        0..total,
        FamilyTally::default,
        |mut acc, mask| {
            let polygon = member(&base, mask);
            let simple = polygon.is_simple();
            let uniform = polygon.has_uniform_turns();
            if simple {
                acc.simple += 1;
                if uniform {
                    acc.convex.push(mask);
                }
            } else if uniform {
                acc.uniform_crossing += 1;
            }
            acc
        },
        FamilyTally::merge,
    );
    let mut convex = tally.convex;
    convex.sort_unstable();
    Ok(FamilyReport {
        k,
        x: x.to_vec(),
        y: y.to_vec(),
        total_states: total,
        convex_states: convex.into_iter().map(|m| SignVector::from_mask(m, n)).collect(),
        simple_states: tally.simple,
        self_intersecting_states: total - tally.simple,
        uniform_turn_self_intersecting_states: tally.uniform_crossing,
    })
}

fn member(base: &AlternatingSpec, mask: u64) -> Polygon {
    base.with_sigma(SignVector::from_mask(mask, base.n()))
        .expect("mask width matches")
        .build()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SearchStatus {
    /// A convex state was reached; the sequence is a shortest one.
    Convexified,
    /// Every reachable state was enumerated and none is convex.
    ProvenImpossible,
    /// The depth cap was hit with unexplored states left.
    DepthExhausted,
    /// Oversized states were pruned, which may have hidden a solution.
    BitSizeAborted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Present iff `status` is `Convexified`.
    pub sequence: Option<PopSequence>,
    /// Distinct states discovered, the start state included.
    pub states_explored: u64,
    pub max_depth_reached: usize,
    /// States not expanded because a coordinate exceeded the bit limit.
    pub pruned_states: u64,
    /// Whether the search ran over sign vectors of an alternating polygon.
    pub sign_space: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_depth: usize,
    pub bit_limit: u64,
    /// Keep states with coincident non-adjacent vertices in the search.
    pub allow_coincident: bool,
    pub execution: Execution,
}

impl SearchConfig {
    pub fn new(max_depth: usize) -> Self {
        SearchConfig {
            max_depth,
            bit_limit: DEFAULT_BIT_LIMIT,
            allow_coincident: true,
            execution: Execution::default(),
        }
    }

    pub fn bit_limit(mut self, bits: u64) -> Self {
        self.bit_limit = bits;
        self
    }

    pub fn allow_coincident(mut self, allow: bool) -> Self {
        self.allow_coincident = allow;
        self
    }

    pub fn execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }
}

/// Injective byte encoding of the exact vertex sequence. No symmetry is
/// quotiented out: rotating or reversing the vertex list changes the key.
pub fn canonical_key(polygon: &Polygon) -> Vec<u8> {
    let mut key = Vec::with_capacity(polygon.len() * 16 + 4);
    key.extend_from_slice(&(polygon.len() as u32).to_le_bytes());
    let push_rational = |key: &mut Vec<u8>, q: &Rational| {
        let (sign, numer) = q.numer().to_bytes_le();
        key.push(match sign {
            BigSign::Minus => 0,
            BigSign::NoSign => 1,
            BigSign::Plus => 2,
        });
        let (_, denom) = q.denom().to_bytes_le();
        for part in [numer, denom] {
            key.extend_from_slice(&(part.len() as u32).to_le_bytes());
            key.extend_from_slice(&part);
        }
    };
    for Point { x, y } in polygon.vertices() {
        push_rational(&mut key, x);
        push_rational(&mut key, y);
    }
    key
}

/// Breadth-first search for a shortest pop sequence reaching a simple
/// convex polygon.
///
/// Children are generated in ascending vertex order and merged in layer
/// order, so the reported sequence is the lexicographically smallest among
/// the shortest ones, whatever the execution mode. Hairpin vertices are
/// skipped. Alternating polygons are searched over sign vectors instead.
pub fn search_pop_convexification(polygon: &Polygon, config: &SearchConfig) -> SearchOutcome {
    if polygon.len() <= MAX_FAMILY_VERTICES {
        if let Some(membership) = recover_spec(polygon) {
            return search_sign_space(&membership, config);
        }
    }
    search_polygons(polygon, config)
}

struct Node {
    polygon: Polygon,
    path: Vec<usize>,
    expandable: bool,
}

struct Child {
    vertex: usize,
    polygon: Polygon,
    key: Vec<u8>,
    convex: bool,
    oversized: bool,
    coincident: bool,
}

fn expand(node: &Node, bit_limit: u64) -> Vec<Child> {
    (0..node.polygon.len())
        .filter(|&i| !node.polygon.is_hairpin(i))
        .map(|i| {
            let polygon = pop(&node.polygon, i).expect("hairpins filtered");
            Child {
                vertex: i,
                key: canonical_key(&polygon),
                convex: polygon.is_convex(false),
                oversized: polygon.bit_size() > bit_limit,
                coincident: !polygon.has_distinct_vertices(),
                polygon,
            }
        })
        .collect()
}

fn search_polygons(start: &Polygon, config: &SearchConfig) -> SearchOutcome {
    let exec = config.execution;
    let mut outcome = SearchOutcome {
        status: SearchStatus::DepthExhausted,
        sequence: None,
        states_explored: 1,
        max_depth_reached: 0,
        pruned_states: 0,
        sign_space: false,
    };
    if start.is_convex(false) {
        outcome.status = SearchStatus::Convexified;
        outcome.sequence = Some(PopSequence::default());
        return outcome;
    }
    let mut visited: HashSet<Vec<u8>> = HashSet::new();
    visited.insert(canonical_key(start));
    let mut frontier = vec![Node { polygon: start.clone(), path: Vec::new(), expandable: true }];

    for depth in 1..=config.max_depth {
        frontier.retain(|node| node.expandable);
        if frontier.is_empty() {
            break;
        }
        let expansions = exec.map(&frontier, |node| expand(node, config.bit_limit));
        let mut layer = Vec::new();
        for (parent, children) in frontier.iter().zip(expansions) {
            for child in children {
                if !config.allow_coincident && child.coincident {
                    continue;
                }
                if !visited.insert(child.key) {
                    continue;
                }
                if child.oversized {
                    outcome.pruned_states += 1;
                }
                let mut path = parent.path.clone();
                path.push(child.vertex);
                layer.push((child.convex, Node { polygon: child.polygon, path, expandable: !child.oversized }));
            }
        }
        if layer.is_empty() {
            frontier.clear();
            break;
        }
        outcome.states_explored += layer.len() as u64;
        outcome.max_depth_reached = depth;
        if let Some(pos) = layer.iter().position(|(convex, _)| *convex) {
            outcome.status = SearchStatus::Convexified;
            outcome.sequence = Some(PopSequence(layer.swap_remove(pos).1.path));
            return outcome;
        }
        frontier = layer.into_iter().map(|(_, node)| node).collect();
    }

    frontier.retain(|node| node.expandable);
    // The depth cap may coincide with closure of the reachable set; probe
    // one more layer without recording it.
    let closed = frontier.is_empty()
        || exec
            .map(&frontier, |node| expand(node, config.bit_limit))
            .into_iter()
            .flatten()
            .filter(|c| config.allow_coincident || !c.coincident)
            .all(|c| visited.contains(&c.key));
    outcome.status = if outcome.pruned_states > 0 {
        SearchStatus::BitSizeAborted
    } else if closed {
        SearchStatus::ProvenImpossible
    } else {
        SearchStatus::DepthExhausted
    };
    outcome
}

fn search_sign_space(membership: &Membership, config: &SearchConfig) -> SearchOutcome {
    let exec = config.execution;
    let spec = &membership.spec;
    let n = spec.n();
    let total = 1u64 << n;
    let root = spec.sigma().to_mask();
    let is_convex = |mask: &u64| member(spec, *mask).is_convex(false);

    let mut outcome = SearchOutcome {
        status: SearchStatus::DepthExhausted,
        sequence: None,
        states_explored: 1,
        max_depth_reached: 0,
        pruned_states: 0,
        sign_space: true,
    };
    // Pops toggle sign bits; with ascending paths, the shortest
    // lexicographically smallest path to a mask is its sorted bit
    // difference from the root, translated back to polygon indices.
    let path_to = |mask: u64| -> PopSequence {
        let mut path: Vec<usize> = (0..n)
            .filter(|&j| (mask ^ root) >> j & 1 == 1)
            .map(|j| membership.polygon_index(j))
            .collect();
        path.sort_unstable();
        PopSequence(path)
    };
    if is_convex(&root) {
        outcome.status = SearchStatus::Convexified;
        outcome.sequence = Some(PopSequence::default());
        return outcome;
    }
    let mut visited = vec![0u64; (total as usize).div_ceil(64)];
    let mark = |visited: &mut Vec<u64>, m: u64| -> bool {
        let (word, bit) = ((m / 64) as usize, m % 64);
        let fresh = visited[word] >> bit & 1 == 0;
        visited[word] |= 1 << bit;
        fresh
    };
    mark(&mut visited, root);
    let mut frontier = vec![root];
    for depth in 1..=config.max_depth {
        let mut layer = Vec::new();
        for &mask in &frontier {
            for j in 0..n {
                let child = mask ^ (1 << j);
                if mark(&mut visited, child) {
                    layer.push(child);
                }
            }
        }
        if layer.is_empty() {
            break;
        }
        outcome.states_explored += layer.len() as u64;
        outcome.max_depth_reached = depth;
        let convex: Vec<bool> = exec.map(&layer, is_convex);
        let best = layer
            .iter()
            .zip(&convex)
            .filter(|(_, &c)| c)
            .map(|(&m, _)| path_to(m))
            .min();
        if let Some(seq) = best {
            outcome.status = SearchStatus::Convexified;
            outcome.sequence = Some(seq);
            return outcome;
        }
        frontier = layer;
    }
    if outcome.states_explored == total {
        outcome.status = SearchStatus::ProvenImpossible;
    }
    outcome
}
