use popkit_core::random::simple_nonconvex_polygon;
use popkit_core::{
    convexify_by_flips, convexify_by_flips_observed, find_pockets, pocket_flip, pocket_flipturn, FlipMode,
    PocketStrategy, Polygon, DEFAULT_FLIP_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn flips_preserve_edge_lengths_and_simplicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..60 {
        let p = simple_nonconvex_polygon(&mut rng, 8, 15);
        let mut lengths = p.squared_edge_lengths();
        lengths.sort();
        for pocket in find_pockets(&p).unwrap() {
            for q in [pocket_flip(&p, &pocket).unwrap(), pocket_flipturn(&p, &pocket).unwrap()] {
                assert!(q.is_simple(), "{p:?} {pocket:?}");
                let mut got = q.squared_edge_lengths();
                got.sort();
                assert_eq!(got, lengths);
            }
        }
    }
}

#[test]
fn every_strategy_convexifies() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let strategies = [PocketStrategy::First, PocketStrategy::LargestLid, PocketStrategy::SeededRandom(5)];
    for _ in 0..10 {
        let p = simple_nonconvex_polygon(&mut rng, 9, 20);
        for mode in [FlipMode::Flip, FlipMode::Flipturn] {
            for strategy in strategies {
                let mut steps = 0;
                let out = convexify_by_flips_observed(&p, mode, strategy, DEFAULT_FLIP_CAP, |step, q| {
                    steps = step;
                    assert!(q.is_simple());
                })
                .unwrap();
                assert!(out.is_convex());
                assert_eq!(steps, out.operations());
                assert!(find_pockets(out.polygon()).unwrap().is_empty());
            }
        }
    }
}

#[test]
fn convex_input_needs_no_operations() {
    let hexagon = Polygon::from_ints(&[(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]);
    let out = convexify_by_flips(&hexagon, FlipMode::Flip, PocketStrategy::First, 10).unwrap();
    assert!(out.is_convex());
    assert_eq!(out.operations(), 0);
    assert_eq!(out.polygon(), &hexagon);
}
