mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn reduced_pairs_bound_no_bigon(p in any_pair()) {
        check_reduced_is_bigon_free(&p)?;
    }

    #[test]
    fn algebraic_intersection_is_antisymmetric(p in any_pair()) {
        check_antisymmetry(&p)?;
    }

    #[test]
    fn algebraic_is_at_most_geometric(p in any_pair()) {
        check_algebraic_bound(&p)?;
    }

    #[test]
    fn cup_product_agrees_with_algebraic(p in any_pair()) {
        check_cup_matches_algebraic(&p)?;
    }

    #[test]
    fn normalize_is_idempotent(p in any_pair()) {
        check_normalize(&p)?;
    }

    #[test]
    fn rerouting_keeps_the_homology_class(p in any_pair()) {
        check_homology_under_rerouting(&p)?;
    }

    #[test]
    fn complement_euler_characteristics_add_up(p in any_pair()) {
        check_euler_sum(&p)?;
    }

    #[test]
    fn canonical_code_survives_relabelling(
        p in any_pair(),
        rot in 0usize..8,
        flip in any::<u32>(),
        swap in any::<bool>(),
    ) {
        check_code_invariance(&p, rot, flip, swap)?;
    }
}
