use fano212_cli::{parse_instance, serialize_instance, InstanceFile};
use fano212_core::action::{random_equivariant_model, SwapActionSpec};
use proptest::prelude::*;

const CASES: [(u64, [i64; 4], [i64; 3]); 4] = [
    (2, [0; 4], [0, 0, 1]),
    (4, [0, 2, 0, 2], [0, 1, 3]),
    (6, [0, 2, 4, 0], [0, 2, 4]),
    (8, [1, 3, 5, 7], [1, 5, 6]),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn serialize_is_a_fixed_point(case in 0..CASES.len(), seed in 0u64..1000, shift in -3i64..=3) {
        let (n, r, s) = CASES[case];
        let model = random_equivariant_model(n, r, s, seed).unwrap();
        // weights and exponents are stored reduced, whatever representatives were given
        let spec = SwapActionSpec::swap(n, r.map(|w| w + 2 * shift * n as i64)).unwrap();
        let inst = InstanceFile { model, spec, exponents: Some(s.map(|k| k + shift * n as i64)) };
        let text = serialize_instance(&inst);
        let parsed = parse_instance(&text).unwrap();
        prop_assert_eq!(&serialize_instance(&parsed), &text);
        prop_assert_eq!(parsed.model, inst.model);
        prop_assert_eq!(parsed.exponents, Some(s));
    }
}
