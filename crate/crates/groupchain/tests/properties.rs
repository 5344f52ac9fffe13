//! Property tests over randomized group descriptors.

use groupchain::{
    chain_difference, check_cd_bound, depth, length, length_equals_dim, max_length_chain, psi,
    ChainCertificate, Characteristic, CheckReport, Family, GroupDescriptor, SimpleType,
};
use proptest::prelude::*;

fn arb_simple_type(max_rank: u32) -> impl Strategy<Value = SimpleType> {
    (0u32..7, 1..=max_rank).prop_filter_map("valid type", |(f, r)| {
        let family = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ][f as usize];
        SimpleType::new(family, r).ok()
    })
}

fn arb_descriptor() -> impl Strategy<Value = GroupDescriptor> {
    (
        0u64..=30,
        0u64..=30,
        proptest::collection::vec(arb_simple_type(8), 0..=4),
    )
        .prop_map(|(u, z, factors)| GroupDescriptor::new(u, z, factors))
}

fn arb_char() -> impl Strategy<Value = Characteristic> {
    prop_oneof![
        Just(Characteristic::Zero),
        proptest::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
            .prop_map(Characteristic::Prime),
    ]
}

proptest! {
    #[test]
    fn length_dominates_half_dim(g in arb_descriptor()) {
        let l = length(&g);
        prop_assert!(l <= g.dim());
        if !g.is_trivial() {
            prop_assert!(2 * l > g.dim());
        }
        let all_a1 = g.factors().iter().all(|t| t.rank() == 1);
        prop_assert_eq!(length_equals_dim(&g), all_a1);
    }

    #[test]
    fn length_is_additive(g in arb_descriptor(), h in arb_descriptor()) {
        prop_assert_eq!(length(&g.concat(&h)), length(&g) + length(&h));
    }

    #[test]
    fn depth_bounds_are_ordered_and_dominated(g in arb_descriptor(), c in arb_char()) {
        prop_assume!(!g.is_trivial());
        let d = depth(&g, c).unwrap();
        prop_assert!(d.lower >= 1);
        prop_assert!(d.lower <= d.upper);
        prop_assert!(d.upper <= length(&g), "depth cannot exceed length");
        if g.is_soluble() {
            prop_assert!(d.is_exact());
            prop_assert_eq!(d.lower, g.dim());
        }
    }

    #[test]
    fn chain_difference_nonnegative_and_bounded(g in arb_descriptor(), c in arb_char()) {
        prop_assume!(!g.is_trivial());
        let cd = chain_difference(&g, c).unwrap();
        prop_assert!(cd.lo <= cd.hi);
        let report = check_cd_bound(&g, c).unwrap();
        prop_assert!(
            !matches!(report, CheckReport::Violated { .. }),
            "dimension bound in terms of cd violated for {}", g.render()
        );
    }

    #[test]
    fn longest_chain_roundtrips_and_has_full_length(g in arb_descriptor(), c in arb_char()) {
        prop_assume!(!g.is_trivial());
        let chain = max_length_chain(&g, c).unwrap();
        prop_assert_eq!(chain.length_of(), length(&g));
        let text = chain.serialize();
        let back = ChainCertificate::parse(&text).unwrap();
        prop_assert_eq!(back.serialize(), text);
        prop_assert_eq!(back.groups().len(), chain.groups().len());
    }

    #[test]
    fn psi_is_monotone_and_small(p in proptest::sample::select(vec![2u64, 3, 5, 7]), x in 1u64..=1_000_000) {
        let v = psi(p, x).unwrap();
        prop_assert!(v <= psi(p, x + 1).unwrap());
        prop_assert!(v <= 5, "psi grows slower than iterated logs");
    }
}
