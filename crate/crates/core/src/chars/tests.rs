use super::*;
use crate::action::{invariant_pencil, random_equivariant_model, random_model_for_action, GeneratorOptions};
use proptest::prelude::*;

fn cm(n: u64, e: [i64; 3]) -> CharacterMultiset {
    CharacterMultiset::new(n, e).unwrap()
}

/// `(n, first weights, second weights, s)`.
type DiagonalCase = (u64, [i64; 4], [i64; 4], [i64; 3]);

#[test]
fn formula_examples() {
    assert_eq!(jac_curve_characters([0; 3], &[0; 4], 2).unwrap(), cm(2, [0, 0, 0]));
    assert_eq!(jac_curve_characters([1, 2, 3], &[0; 4], 8).unwrap(), cm(8, [7, 0, 1]));
    assert_eq!(jac_curve_characters([3, 4, 5], &[2; 4], 8).unwrap(), cm(8, [7, 0, 1]));
    assert_eq!(ij_characters([0; 3], &[0; 4], 2).unwrap(), cm(2, [1, 1, 1]));
    assert_eq!(ij_characters([1, 2, 3], &[0; 4], 8).unwrap(), cm(8, [3, 4, 5]));
    assert_eq!(ij_characters([0; 3], &[0; 4], 3).unwrap_err(), Error::OddOrder(3));
    let jac = cm(8, [7, 0, 1]);
    assert_eq!(jac.shift(4).shift(4), jac);
    assert_eq!(jac.to_string(), "{0,1,7} mod 8");
}

#[test]
fn differ_examples() {
    assert!(characters_differ(&cm(2, [0; 3]), &cm(2, [1; 3])).unwrap());
    assert!(characters_differ(&cm(8, [7, 0, 1]), &cm(8, [3, 4, 5])).unwrap());
    assert!(!characters_differ(&cm(8, [7, 0, 1]), &cm(8, [1, 7, 0])).unwrap());
    assert_eq!(
        characters_differ(&cm(8, [0; 3]), &cm(4, [0; 3])).unwrap_err(),
        Error::CharacterOrderMismatch(8, 4)
    );
}

#[test]
fn symmetric_pencil_oracles() {
    let m = random_equivariant_model(2, [0; 4], [0; 3], 5).unwrap();
    assert!(m.matrices().iter().all(|a| a == &a.transpose()));
    let q = crate::model::determinantal_quartic(&m).unwrap();
    assert!(crate::model::quartic_smooth(&q).unwrap());
    let spec = SwapActionSpec::swap(2, [0; 4]).unwrap();
    let pencil = invariant_pencil(&m, &spec).unwrap();
    assert_eq!(curve_action_oracle(&pencil, &[0; 4], 2).unwrap(), cm(2, [0; 3]));
    assert_eq!(ij_oracle(&pencil, &[0; 4], 2, true).unwrap(), cm(2, [1; 3]));
}

const SWAP_CASES: [(u64, [i64; 4], [i64; 3]); 8] = [
    (2, [0; 4], [0, 0, 0]),
    (4, [0, 2, 0, 2], [0, 1, 2]),
    (4, [0, 2, 0, 2], [1, 2, 3]),
    (6, [0, 2, 4, 0], [0, 2, 3]),
    (6, [0, 2, 4, 0], [0, 3, 4]),
    (8, [0, 2, 4, 6], [0, 1, 4]),
    (8, [0, 2, 4, 6], [2, 3, 6]),
    (8, [1, 3, 5, 7], [1, 2, 5]),
];

#[test]
fn oracles_match_formulas_on_generated_swaps() {
    for (seed, &(n, r, s)) in SWAP_CASES.iter().enumerate() {
        let spec = SwapActionSpec::swap(n, r).unwrap();
        let m = random_equivariant_model(n, r, s, seed as u64).unwrap();
        let pencil = invariant_pencil(&m, &spec).unwrap();
        let s = pencil.exponents;
        let jac = jac_curve_characters(s, &r, n).unwrap();
        let ij = ij_characters(s, &r, n).unwrap();
        assert_eq!(curve_action_oracle(&pencil, &r, n).unwrap(), jac, "n = {n}, r = {r:?}");
        assert_eq!(ij_oracle(&pencil, &r, n, true).unwrap(), ij, "n = {n}, r = {r:?}");
        assert!(characters_differ(&jac, &ij).unwrap());
    }
}

#[test]
fn oracle_rejects_wrong_weights() {
    let (n, r, s) = (4, [0, 2, 0, 2], [0, 1, 2]);
    let spec = SwapActionSpec::swap(n, r).unwrap();
    let m = random_equivariant_model(n, r, s, 0).unwrap();
    let pencil = invariant_pencil(&m, &spec).unwrap();
    let err = curve_action_oracle(&pencil, &[0, 2, 0, 1], n).unwrap_err();
    assert!(matches!(err, Error::QuarticEigenvalueMismatch { expected: 3, found: Some(0) }), "{err}");
    let mut bad = pencil.clone();
    bad.exponents = [1, 1, 2];
    assert!(curve_action_oracle(&bad, &r, n).is_err());
}

#[test]
fn diagonal_actions_carry_no_sign() {
    let cases: [DiagonalCase; 5] = [
        (4, [0, 1, 2, 3], [0, 1, 2, 3], [0, 1, 1]),
        (3, [0, 1, 2, 0], [0, 0, 1, 2], [0, 1, 2]),
        (2, [0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 1]),
        (3, [0, 1, 1, 2], [0, 2, 2, 1], [0, 0, 2]),
        (4, [0, 1, 2, 3], [0, 3, 2, 1], [1, 2, 2]),
    ];
    let mut checked = 0;
    for (seed, (n, a, b, s)) in cases.into_iter().enumerate() {
        let spec = SwapActionSpec::diagonal(n, a, b).unwrap();
        let Ok(m) = random_model_for_action(&spec, s, seed as u64, GeneratorOptions::default()) else {
            continue;
        };
        let pencil = invariant_pencil(&m, &spec).unwrap();
        let w = spec.all_weights();
        let curve = curve_action_oracle(&pencil, &w, n).unwrap();
        assert_eq!(curve, jac_curve_characters(pencil.exponents, &w, n).unwrap());
        assert_eq!(ij_oracle(&pencil, &w, n, false).unwrap(), curve);
        assert_eq!(verdict(&spec), Verdict::Linearisable);
        checked += 1;
    }
    assert_eq!(checked, 5, "only {checked} diagonal instances generated");
}

#[test]
fn verdicts() {
    let swap = SwapActionSpec::swap(8, [0, 2, 4, 6]).unwrap();
    assert_eq!(verdict(&swap), Verdict::NotLinearisable);
    assert_eq!(verdict(&swap.square()), Verdict::Linearisable);
    let diag = SwapActionSpec::diagonal(4, [0, 1, 2, 3], [0; 4]).unwrap();
    assert_eq!(verdict(&diag), Verdict::Linearisable);

    let report = verdict_report(&swap, Some([0, 1, 4])).unwrap();
    let (jac, ij, differ) = report.witness.unwrap();
    assert!(differ);
    assert_eq!(ij, jac.shift(4));
    assert!(verdict_report(&diag, Some([0, 1, 3])).unwrap().witness.is_none());
    assert!(verdict_report(&diag, None).unwrap().explanation.contains("blow-down"));
}

proptest! {
    #[test]
    fn sign_always_distinguishes(
        half in 1u64..=12,
        s in prop::array::uniform3(-50i64..50),
        r in prop::array::uniform4(-50i64..50),
    ) {
        let n = 2 * half;
        let jac = jac_curve_characters(s, &r, n).unwrap();
        let ij = ij_characters(s, &r, n).unwrap();
        prop_assert!(characters_differ(&jac, &ij).unwrap());
    }

    #[test]
    fn lift_invariance(
        half in 1u64..=12,
        s in prop::array::uniform3(0i64..24),
        r in prop::array::uniform4(0i64..24),
        m in -10i64..10,
    ) {
        let n = 2 * half;
        let r2 = r.map(|k| k + 2 * m);
        let s2 = s.map(|k| k + 2 * m);
        prop_assert_eq!(jac_curve_characters(s, &r, n).unwrap(), jac_curve_characters(s2, &r2, n).unwrap());
        prop_assert_eq!(ij_characters(s, &r, n).unwrap(), ij_characters(s2, &r2, n).unwrap());
    }

    #[test]
    fn normalization_idempotent(n in 1u64..30, e in prop::array::uniform3(-100i64..100)) {
        let a = CharacterMultiset::new(n, e).unwrap();
        prop_assert!(a.exponents().iter().all(|&k| k < n));
        let again = CharacterMultiset::new(n, a.exponents().map(|k| k as i64)).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn verdict_ignores_weights(
        half in 1u64..=6,
        a in prop::array::uniform4(0i64..12),
        b in prop::array::uniform4(0i64..12),
    ) {
        let n = 2 * half;
        let swap = SwapActionSpec::swap_unchecked(n, a);
        prop_assert_eq!(verdict(&swap), Verdict::NotLinearisable);
        let diag = SwapActionSpec::diagonal_unchecked(n, a, b);
        prop_assert_eq!(verdict(&diag), Verdict::Linearisable);
    }
}
