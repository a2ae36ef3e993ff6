mod common;

use proptest::prelude::*;
use riordan_core::{build_involution, InvolutionParams, JsonForm, PolySequence, RiordanArray, Weight};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn json_forms_round_trip(seed in any::<u64>(), order in 0usize..=6) {
        let mut rng = common::rng(seed);
        let t = common::random_array(&mut rng, order);
        prop_assert_eq!(&RiordanArray::from_json(&t.to_json()).unwrap(), &t);

        let m = t.inverse().to_matrix();
        prop_assert_eq!(&riordan_core::TriangularMatrix::from_json(&m.to_json()).unwrap(), &m);
        prop_assert_eq!(&riordan_core::TriangularMatrix::from_csv(&m.to_csv()).unwrap(), &m);

        let seq = PolySequence::from_matrix(m).weight(&Weight::exp(order)).unwrap();
        prop_assert_eq!(&PolySequence::from_json(&seq.to_json()).unwrap(), &seq);

        let p = common::random_params(&mut rng, order.max(1));
        prop_assert_eq!(&InvolutionParams::from_json(&p.to_json()).unwrap(), &p);
    }
}

#[test]
fn decomposed_params_serialize() {
    let mut rng = common::rng(41);
    let t = common::random_involution(&mut rng, 8);
    let p = riordan_core::decompose_involution(&t).unwrap();
    let back = InvolutionParams::from_json(&p.to_json()).unwrap();
    assert_eq!(build_involution(&back).unwrap(), t);
}
