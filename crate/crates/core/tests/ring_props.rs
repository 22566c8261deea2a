mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(abc in (class(), class(), class())) {
        ring_axioms(abc)?;
    }

    #[test]
    fn evaluation_respects_sum_and_product(ab in (class(), class())) {
        evaluate_is_a_homomorphism(ab)?;
    }

    #[test]
    fn division_undoes_multiplication(ab in (class(), nonzero_class())) {
        exact_div_round_trip(ab)?;
    }

    #[test]
    fn symmetric_square_counts_points(a in effective_class()) {
        sym_square_identity(a)?;
    }

    #[test]
    fn gaussian_binomials_are_symmetric(kn in gr_params()) {
        gaussian_symmetry(kn)?;
    }
}
