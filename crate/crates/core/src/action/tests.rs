use super::*;
use crate::model::{determinantal_quartic, quartic_smooth};
use proptest::prelude::*;

fn sym(f: &Arc<CyclotomicField>, seed: i64) -> Matrix {
    Matrix::from_fn(4, 4, |i, j| {
        let (a, b) = (i.min(j) as i64, i.max(j) as i64);
        f.int((a * 3 + b * 5 + seed * 7) % 5 - 2)
    })
}

fn antisym(f: &Arc<CyclotomicField>, seed: i64) -> Matrix {
    Matrix::from_fn(4, 4, |i, j| {
        let v = ((i.min(j) as i64) * 3 + (i.max(j) as i64) * 2 + seed) % 4 + 1;
        match i.cmp(&j) {
            std::cmp::Ordering::Less => f.int(v),
            std::cmp::Ordering::Greater => f.int(-v),
            std::cmp::Ordering::Equal => f.zero(),
        }
    })
}

/// Brute force: smallest `m` with `σ^m` acting trivially on `ℙ³×ℙ³`, by
/// composing the linear lift on `ℂ⁴ ⊕ ℂ⁴` and testing for a pair of scalars.
fn brute_order(n: u64, r: [i64; 4], second: Option<[i64; 4]>) -> u64 {
    let f = CyclotomicField::new(n);
    let d: Vec<Cyclotomic> = r.iter().map(|&k| f.root_of_unity(k)).collect();
    // (x, y) as 8 coordinates; track where the basis vectors go
    let apply = |v: &[Cyclotomic]| -> Vec<Cyclotomic> {
        match second {
            None => {
                let (x, y) = v.split_at(4);
                y.iter().cloned().chain(x.iter().zip(&d).map(|(a, b)| a * b)).collect()
            }
            Some(s) => {
                let e: Vec<Cyclotomic> = s.iter().map(|&k| f.root_of_unity(k)).collect();
                let (x, y) = v.split_at(4);
                x.iter().zip(&d).map(|(a, b)| a * b).chain(y.iter().zip(&e).map(|(a, b)| a * b)).collect()
            }
        }
    };
    let mut images: Vec<Vec<Cyclotomic>> = (0..8)
        .map(|i| (0..8).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect();
    for m in 1..=4 * n {
        images = images.iter().map(|v| apply(v)).collect();
        // block-scalar: e_i ↦ c_x e_i on the first block, c_y e_i on the second
        let block_scalar = |lo: usize| {
            let c = images[lo][lo].clone();
            (lo..lo + 4).all(|i| (0..8).all(|j| images[i][j] == if i == j { c.clone() } else { f.zero() }))
        };
        if block_scalar(0) && block_scalar(4) {
            return m;
        }
    }
    unreachable!("finite order")
}

#[test]
fn projective_order_examples() {
    let s = SwapActionSpec::swap_unchecked(2, [0; 4]);
    assert_eq!(projective_order(&s), 2);
    // the brute-force values; both tuples mix parities and are rejected
    assert_eq!(projective_order(&SwapActionSpec::swap_unchecked(4, [0, 1, 0, 1])), 8);
    assert_eq!(brute_order(4, [0, 1, 0, 1], None), 8);
    assert_eq!(projective_order(&SwapActionSpec::swap_unchecked(8, [0, 1, 2, 3])), 16);
    assert_eq!(brute_order(8, [0, 1, 2, 3], None), 16);
    assert_eq!(SwapActionSpec::swap(4, [0, 1, 0, 1]).unwrap_err(), Error::ParityViolation { true_order: 8 });
    assert_eq!(SwapActionSpec::swap(2, [0, 1, 0, 0]).unwrap_err(), Error::ParityViolation { true_order: 4 });
}

#[test]
fn valid_specs_accepted() {
    for (n, r) in [(2, [0; 4]), (4, [0, 2, 0, 2]), (4, [1, 1, 1, 3]), (6, [0, 2, 4, 0]), (8, [0, 2, 4, 6]), (8, [1, 3, 5, 7])] {
        let spec = SwapActionSpec::swap(n, r).unwrap();
        assert_eq!(projective_order(&spec), n);
    }
    assert_eq!(
        SwapActionSpec::swap(4, [0; 4]).unwrap_err(),
        Error::OrderMismatch { declared: 4, computed: 2 }
    );
    assert!(SwapActionSpec::swap(3, [0, 2, 0, 2]).is_err());
    assert!(SwapActionSpec::diagonal(3, [0, 1, 2, 0], [0; 4]).is_ok());
}

proptest! {
    #[test]
    fn order_matches_brute_force(
        n in 1u64..=8,
        r in prop::array::uniform4(0i64..8),
        r2 in prop::array::uniform4(0i64..8),
        swap in any::<bool>(),
    ) {
        let second = (!swap).then_some(r2.map(|k| k % n as i64));
        let spec = match second {
            None => SwapActionSpec::swap_unchecked(n, r),
            Some(s) => SwapActionSpec { order: n, weights: reduce_weights(r, n), second: Some(s) },
        };
        prop_assert_eq!(projective_order(&spec), brute_order(n, spec.weights(), second));
    }

    #[test]
    fn accepted_swaps_have_even_order(n in 1u64..=12, r in prop::array::uniform4(-12i64..12)) {
        if let Ok(spec) = SwapActionSpec::swap(n, r) {
            prop_assert_eq!(spec.order() % 2, 0);
            prop_assert_eq!(projective_order(&spec), n);
        }
    }
}

#[test]
fn symmetric_and_antisymmetric_pencils() {
    let f = CyclotomicField::new(1);
    let spec = SwapActionSpec::swap(2, [0; 4]).unwrap();
    let m = ModelTriple::new([sym(&f, 0), sym(&f, 1), sym(&f, 2)]).unwrap();
    let s = action_on_forms(&m, &spec).unwrap();
    assert_eq!(s, Matrix::identity(3, s.field()));
    let pencil = invariant_pencil(&m, &spec).unwrap();
    assert_eq!(pencil.exponents, [0, 0, 0]);
    for (a, b) in pencil.matrices.iter().zip(m.matrices()) {
        assert_eq!(a, b);
    }
    assert!(pencil.satisfies_eigen_relation(&spec));

    let m = ModelTriple::new([antisym(&f, 0), antisym(&f, 1), antisym(&f, 2)]).unwrap();
    let s = action_on_forms(&m, &spec).unwrap();
    assert_eq!(s, Matrix::identity(3, s.field()).scale(&s.field().int(-1)));
    assert_eq!(invariant_pencil(&m, &spec).unwrap().exponents, [1, 1, 1]);
}

#[test]
fn generic_pencil_not_invariant() {
    let f = CyclotomicField::new(1);
    let m = ModelTriple::new(std::array::from_fn(|k| {
        Matrix::from_fn(4, 4, |i, j| f.int(((i * 5 + j * j * 3 + k * k * 7 + i * j * (k + 1)) % 7) as i64 - 3))
    }))
    .unwrap();
    let spec = SwapActionSpec::swap(4, [0, 2, 0, 2]).unwrap();
    assert_eq!(action_on_forms(&m, &spec).unwrap_err(), Error::PencilNotInvariant);
}

const SWAP_CASES: [(u64, [i64; 4], [i64; 3]); 6] = [
    (2, [0; 4], [0, 0, 0]),
    (4, [0, 2, 0, 2], [0, 1, 2]),
    (4, [0, 2, 0, 2], [1, 2, 3]),
    (6, [0, 2, 4, 0], [0, 2, 3]),
    (8, [0, 2, 4, 6], [0, 1, 4]),
    (8, [1, 3, 5, 7], [1, 2, 5]),
];

#[test]
fn generator_roundtrip() {
    for (seed, &(n, r, s)) in SWAP_CASES.iter().enumerate() {
        let spec = SwapActionSpec::swap(n, r).unwrap();
        let m = random_equivariant_model(n, r, s, seed as u64).unwrap_or_else(|e| panic!("{n} {r:?} {s:?}: {e}"));
        assert!(quartic_smooth(&determinantal_quartic(&m).unwrap()).unwrap());
        let pencil = invariant_pencil(&m, &spec).unwrap();
        assert!(pencil.satisfies_eigen_relation(&spec));
        let mut got = pencil.exponents;
        let mut want = s.map(|k| k.rem_euclid(n as i64));
        got.sort();
        want.sort();
        assert_eq!(got, want, "n = {n}, r = {r:?}");
    }
}

#[test]
fn generator_is_deterministic() {
    let a = random_equivariant_model(4, [0, 2, 0, 2], [0, 1, 2], 9).unwrap();
    let b = random_equivariant_model(4, [0, 2, 0, 2], [0, 1, 2], 9).unwrap();
    assert_eq!(a, b);
}

#[test]
fn generator_symmetric_and_failures() {
    let m = random_equivariant_model(2, [0; 4], [0, 0, 0], 1).unwrap();
    for mat in m.matrices() {
        assert_eq!(mat, &mat.transpose());
    }
    // Pfaffian squared: never a smooth quartic
    let err = random_equivariant_model(2, [0; 4], [1, 1, 1], 1).unwrap_err();
    assert!(matches!(err, Error::GeneratorExhausted { attempts: 50, .. }), "{err}");
    let f = CyclotomicField::new(1);
    let pf = ModelTriple::new([antisym(&f, 0), antisym(&f, 1), antisym(&f, 2)]).unwrap();
    let q = determinantal_quartic(&pf).unwrap();
    assert!(!quartic_smooth(&q).unwrap());

    assert_eq!(
        random_equivariant_model(4, [0; 4], [1, 0, 0], 1).unwrap_err(),
        Error::EmptyEigenspace { exponent: 1 }
    );
    assert!(random_equivariant_model(4, [0, 1, 0, 0], [0, 0, 0], 1).is_err());
}

#[test]
fn forced_point_generator() {
    // the vertex is a smooth point only when adj(M₁)₀₀ and a corner of M₂ or M₃ are nonzero
    for (n, r, s) in [(2, [0; 4], [0, 0, 1]), (8, [0, 2, 4, 6], [4, 0, 1])] {
        let spec = SwapActionSpec::swap(n, r).unwrap();
        let opts = GeneratorOptions { forced_point: true, ..Default::default() };
        let m = random_model_for_action(&spec, s, 3, opts).unwrap();
        let m1 = &m.matrices()[0];
        assert!((0..4).all(|k| m1[(0, k)].is_zero() && m1[(k, 0)].is_zero()));
        let q = determinantal_quartic(&m).unwrap();
        let f = m.field();
        assert!(q.eval(&[f.one(), f.zero(), f.zero()]).unwrap().is_zero());
    }
}

#[test]
fn diagonal_generator_and_pencil() {
    let spec = SwapActionSpec::diagonal(4, [0, 1, 2, 3], [0, 1, 2, 3]).unwrap();
    let m = random_model_for_action(&spec, [0, 1, 3], 2, GeneratorOptions::default()).unwrap();
    let pencil = invariant_pencil(&m, &spec).unwrap();
    assert!(pencil.satisfies_eigen_relation(&spec));
    let mut got = pencil.exponents;
    got.sort();
    assert_eq!(got, [0, 1, 3]);
}

#[test]
fn lift_change_shifts_exponents() {
    let (n, r, s) = (8, [0, 2, 4, 6], [1, 2, 6]);
    let m = random_equivariant_model(n, r, s, 4).unwrap();
    for shift in [2i64, 4, 6] {
        let spec = SwapActionSpec::swap(n, r.map(|k| k + shift)).unwrap();
        let mut got = invariant_pencil(&m, &spec).unwrap().exponents;
        let mut want = s.map(|k| (k + shift).rem_euclid(n as i64));
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn square_matches_two_steps() {
    for (seed, &(n, r, s)) in SWAP_CASES.iter().enumerate() {
        let spec = SwapActionSpec::swap(n, r).unwrap();
        let m = random_equivariant_model(n, r, s, seed as u64 + 100).unwrap();
        let s1 = action_on_forms(&m, &spec).unwrap();
        // M ↦ D M D computed directly in the basis of the pencil
        let field = s1.field().clone();
        let d: Vec<Cyclotomic> = r.iter().map(|&k| field.root_of_unity(k * (field.conductor() / n) as i64)).collect();
        let basis = Matrix::from_fn(16, 3, |row, c| m.matrices()[c][(row / 4, row % 4)].lift(&field));
        let cols: Vec<Vec<Cyclotomic>> = m
            .matrices()
            .iter()
            .map(|mi| {
                let img: Vec<Cyclotomic> = (0..16).map(|k| &(&d[k / 4] * &mi[(k / 4, k % 4)].lift(&field)) * &d[k % 4]).collect();
                basis.solve(&img).unwrap()
            })
            .collect();
        let s2 = Matrix::from_fn(3, 3, |k, i| cols[i][k].clone());
        assert_eq!(s1.mul(&s1), s2);
        let sq = spec.square();
        assert!(!sq.is_swap());
        assert_eq!(projective_order(&sq), n / 2);
        assert!(!is_gfano(&sq));
    }
}

#[test]
fn gfano_flag() {
    assert!(is_gfano(&SwapActionSpec::swap(2, [0; 4]).unwrap()));
    assert!(!is_gfano(&SwapActionSpec::diagonal(2, [0, 1, 0, 1], [0; 4]).unwrap()));
    assert!(gfano_explanation(&SwapActionSpec::swap(2, [0; 4]).unwrap()).contains("rank 1"));
}

#[test]
fn picard_lattice() {
    let h = DivisorClass::H;
    let e = DivisorClass::E;
    assert_eq!(picard_involution(picard_involution(h)), h);
    assert_eq!(picard_involution(picard_involution(e)), e);
    let k = DivisorClass::anticanonical();
    assert_eq!(k, DivisorClass::new(4, -1));
    assert_eq!(picard_involution(k), k);
    let hp = DivisorClass::h_prime();
    assert_eq!(picard_involution(h + hp), hp + h);
    // −4H + E = −H − H′
    assert_eq!(DivisorClass::canonical(), -h - hp);
    assert_eq!(invariant_sublattice(true), vec![k]);
    assert_eq!(invariant_sublattice(false).len(), 2);
    assert_eq!(k.to_string(), "4H - 1E");
}

proptest! {
    #[test]
    fn involution_squares_to_identity(a in -1000i64..1000, b in -1000i64..1000) {
        let c = DivisorClass::new(a, b);
        prop_assert_eq!(picard_involution(picard_involution(c)), c);
    }
}


