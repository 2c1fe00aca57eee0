use popkit_core::random::{alternating_spec, sign_vector};
use popkit_core::{
    exhaustive_family_search, exhaustive_family_search_with, pop, recover_spec, search_pop_convexification,
    AlternatingSpec, Execution, Polygon, SearchConfig, SearchStatus, SignVector,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spec_strategy() -> impl Strategy<Value = AlternatingSpec> {
    (2usize..=5, any::<u64>()).prop_map(|(k, seed)| alternating_spec(&mut ChaCha8Rng::seed_from_u64(seed), k))
}

proptest! {
    #[test]
    fn pops_stay_in_the_family(spec in spec_strategy(), i in 0usize..10) {
        let i = i % spec.n();
        let popped = pop(&spec.build(), i).unwrap();
        let m = recover_spec(&popped).unwrap();
        prop_assert_eq!(m.spec, spec.pop_sign(i));
    }

    #[test]
    fn steering_reaches_any_target(spec in spec_strategy(), seed in any::<u64>()) {
        let target = sign_vector(&mut ChaCha8Rng::seed_from_u64(seed), spec.n());
        let seq = spec.steering_sequence(&target).unwrap();
        prop_assert!(seq.len() <= spec.n());
        prop_assert_eq!(seq.apply(&spec.build()).unwrap(), spec.with_sigma(target).unwrap().build());
    }

    #[test]
    fn negating_all_signs_is_a_point_reflection(spec in spec_strategy()) {
        let p = spec.build();
        let q = spec.with_sigma(spec.sigma().negated()).unwrap().build();
        for (a, b) in p.vertices().iter().zip(q.vertices()) {
            prop_assert_eq!(&-a, b);
        }
        prop_assert_eq!(p.is_simple(), q.is_simple());
    }
}

#[test]
fn family_counts_add_up_and_match_execution_modes() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for k in 2..=4 {
        let spec = alternating_spec(&mut rng, k);
        let seq = exhaustive_family_search_with(spec.x(), spec.y(), Execution::Sequential).unwrap();
        let par = exhaustive_family_search_with(spec.x(), spec.y(), Execution::Parallel).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.simple_states + seq.self_intersecting_states, seq.total_states);
        assert!(seq.uniform_turn_self_intersecting_states <= seq.self_intersecting_states);
        if k >= 3 {
            assert!(seq.convex_states.is_empty());
        }
    }
}

#[test]
fn every_k3_member_search_is_proven_impossible() {
    let x: Vec<_> = [2, 3, 1].map(popkit_core::Rational::from).to_vec();
    let y: Vec<_> = [3, 2, 1].map(popkit_core::Rational::from).to_vec();
    assert!(exhaustive_family_search(&x, &y).unwrap().convex_states.is_empty());
    for mask in [0u64, 0b110011, 0b101010, 0b111111] {
        let spec = AlternatingSpec::new(x.clone(), y.clone(), SignVector::from_mask(mask, 6)).unwrap();
        let out = search_pop_convexification(&spec.build(), &SearchConfig::new(10));
        assert_eq!(out.status, SearchStatus::ProvenImpossible);
        assert_eq!(out.states_explored, 64);
    }
}

#[test]
fn k2_members_reach_a_convex_state() {
    let spec = AlternatingSpec::from_ints(&[2, 1], &[2, 1], "++++").unwrap();
    let out = search_pop_convexification(&spec.build(), &SearchConfig::new(4));
    assert_eq!(out.status, SearchStatus::Convexified);
    let seq = out.sequence.unwrap();
    assert_eq!(seq.len(), 2);
    assert!(seq.apply(&spec.build()).unwrap().is_convex(false));
}

#[test]
fn non_members_are_not_recovered() {
    let square = Polygon::from_ints(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
    // equal distances on both axes violate distinctness within a vector
    assert!(recover_spec(&square).is_none());
    let off_axis = Polygon::from_ints(&[(2, 0), (0, 3), (-3, 1), (0, -2)]);
    assert!(recover_spec(&off_axis).is_none());
}
