//! Seeded random models with a prescribed invariant pencil.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::Matrix;
use crate::model::{determinantal_quartic, quartic_smooth, ModelTriple};

use super::SwapActionSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorOptions {
    pub max_attempts: usize,
    /// Entries of the random combinations lie in `[-bound, bound]`.
    pub coefficient_bound: i64,
    /// Force `M'_1` to have zero first row and column, putting `[1:0:0]`
    /// on the quartic and `e_0` on the blowdown centre.
    pub forced_point: bool,
}

impl Default for GeneratorOptions {
    fn default() -> Self {
        GeneratorOptions {
            max_attempts: 50,
            coefficient_bound: 3,
            forced_point: false,
        }
    }
}

/// Swap-equivariant model with `D M'_jᵀ = ϖ^{s_j} M'_j`, deterministic in the seed.
pub fn random_equivariant_model(n: u64, r: [i64; 4], s: [i64; 3], seed: u64) -> Result<ModelTriple> {
    if n == 0 {
        return Err(Error::InvalidAction("order must be positive".into()));
    }
    let parity = r[0].rem_euclid(2);
    if r.iter().any(|w| w.rem_euclid(2) != parity) {
        return Err(Error::InvalidAction(
            "swap weights must be mutually congruent mod 2".into(),
        ));
    }
    let spec = SwapActionSpec::swap_unchecked(n, r);
    random_model_for_action(&spec, s, seed, GeneratorOptions::default())
}

/// Model whose forms are eigenvectors of the action with exponents `s`.
pub fn random_model_for_action(
    spec: &SwapActionSpec,
    s: [i64; 3],
    seed: u64,
    options: GeneratorOptions,
) -> Result<ModelTriple> {
    let n = spec.order();
    let field = spec.field();
    let s = s.map(|k| k.rem_euclid(n as i64));
    // T in the basis E_ab, column index 4a + b
    let t = Matrix::from_fn(16, 16, |row, col| {
        let unit = Matrix::from_fn(4, 4, |i, j| {
            if 4 * i + j == col {
                field.one()
            } else {
                field.zero()
            }
        });
        spec.act_on_matrix(&unit)[(row / 4, row % 4)].clone()
    });
    let mut spaces = Vec::with_capacity(3);
    for (j, &k) in s.iter().enumerate() {
        let lambda = field.root_of_unity(k);
        let mut rows = t.sub(&Matrix::identity(16, &field).scale(&lambda)).rows_vec();
        if options.forced_point && j == 0 {
            for idx in 0..4 {
                for pos in [idx, 4 * idx] {
                    let mut row = vec![field.zero(); 16];
                    row[pos] = field.one();
                    rows.push(row);
                }
            }
        }
        let basis = Matrix::from_rows(rows).nullspace();
        if basis.is_empty() {
            return Err(Error::EmptyEigenspace { exponent: k });
        }
        spaces.push(basis);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = options.coefficient_bound;
    let mut reason = String::new();
    for _ in 0..options.max_attempts {
        let mats: [Matrix; 3] = std::array::from_fn(|j| {
            let mut v = vec![field.zero(); 16];
            for b in &spaces[j] {
                let c = field.int(rng.gen_range(-bound..=bound));
                for (acc, x) in v.iter_mut().zip(b) {
                    *acc += &(&c * x);
                }
            }
            Matrix::from_fn(4, 4, |a, b| v[4 * a + b].clone())
        });
        let model = match ModelTriple::new(mats) {
            Ok(m) => m,
            Err(e) => {
                reason = e.to_string();
                continue;
            }
        };
        match determinantal_quartic(&model).and_then(|q| quartic_smooth(&q)) {
            Ok(true) => return Ok(model),
            Ok(false) => reason = "the determinantal quartic is singular".into(),
            Err(e) => reason = e.to_string(),
        }
    }
    Err(Error::GeneratorExhausted {
        attempts: options.max_attempts,
        reason,
    })
}
