//! Cyclic actions `⟨σ⟩` on `ℙ³×ℙ³` preserving `X`.
//!
//! Two shapes are supported, both given by weights modulo the order `n` with
//! `ϖ = ζ_n`:
//! * swap normal form `σ(x, y) = (y, D x)` with `D = diag(ϖ^{r_i})`;
//! * diagonal `σ(x, y) = (D x, D' y)` preserving both factors.
//!
//! `σ` acts on forms by pullback, so `xᵀ M y ↦ xᵀ T(M) y` with `T(M) = D Mᵀ`
//! for a swap and `T(M) = D M D'` for a diagonal action.

mod generator;
mod picard;

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, CyclotomicField, Matrix};
use crate::model::ModelTriple;

pub use generator::{random_equivariant_model, random_model_for_action, GeneratorOptions};
pub use picard::{invariant_sublattice, picard_involution, DivisorClass};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SwapActionSpec {
    order: u64,
    weights: [i64; 4],
    /// Weights on the second factor; present exactly for diagonal actions.
    second: Option<[i64; 4]>,
}

fn reduce_weights(w: [i64; 4], n: u64) -> [i64; 4] {
    w.map(|r| r.rem_euclid(n as i64))
}

impl SwapActionSpec {
    /// Swap normal form. Rejects mixed parities (reporting the true order)
    /// and a declared order different from the computed one.
    pub fn swap(order: u64, weights: [i64; 4]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidAction("order must be positive".into()));
        }
        let spec = Self::swap_unchecked(order, weights);
        let parity = weights[0].rem_euclid(2);
        if weights.iter().any(|r| r.rem_euclid(2) != parity) {
            return Err(Error::ParityViolation {
                true_order: projective_order(&spec),
            });
        }
        spec.check_order()?;
        Ok(spec)
    }

    /// Diagonal action on both factors.
    pub fn diagonal(order: u64, first: [i64; 4], second: [i64; 4]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidAction("order must be positive".into()));
        }
        let spec = SwapActionSpec {
            order,
            weights: reduce_weights(first, order),
            second: Some(reduce_weights(second, order)),
        };
        spec.check_order()?;
        Ok(spec)
    }

    /// A swap spec without order validation, for generators and for
    /// computing true orders of rejected input.
    pub fn swap_unchecked(order: u64, weights: [i64; 4]) -> Self {
        SwapActionSpec {
            order,
            weights: reduce_weights(weights, order.max(1)),
            second: None,
        }
    }

    /// A diagonal spec without order validation.
    pub fn diagonal_unchecked(order: u64, first: [i64; 4], second: [i64; 4]) -> Self {
        SwapActionSpec {
            order,
            weights: reduce_weights(first, order.max(1)),
            second: Some(reduce_weights(second, order.max(1))),
        }
    }

    fn check_order(&self) -> Result<()> {
        let computed = projective_order(self);
        if computed != self.order {
            return Err(Error::OrderMismatch {
                declared: self.order,
                computed,
            });
        }
        Ok(())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn weights(&self) -> [i64; 4] {
        self.weights
    }

    pub fn second_weights(&self) -> Option<[i64; 4]> {
        self.second
    }

    pub fn is_swap(&self) -> bool {
        self.second.is_none()
    }

    /// All weights entering the determinant of the action on `V ⊗ V`: the
    /// four swap weights, or both diagonal tuples.
    pub fn all_weights(&self) -> Vec<i64> {
        let mut out = self.weights.to_vec();
        if let Some(s) = self.second {
            out.extend(s);
        }
        out
    }

    /// `ℚ(ζ_n)`.
    pub fn field(&self) -> Arc<CyclotomicField> {
        CyclotomicField::new(self.order)
    }

    /// `ϖ^k`.
    pub fn varpi(&self, k: i64) -> Cyclotomic {
        self.field().root_of_unity(k)
    }

    /// `σ²` as a diagonal action over `ζ_{n/2}` (over `ζ_n` for odd `n`).
    /// For a swap, `D` is first rescaled so that `r_0 = 0`.
    pub fn square(&self) -> Self {
        let n = self.order;
        match self.second {
            None => {
                let half = n / 2;
                let w = self.weights.map(|r| (r - self.weights[0]).div_euclid(2));
                SwapActionSpec {
                    order: half.max(1),
                    weights: reduce_weights(w, half.max(1)),
                    second: Some(reduce_weights(w, half.max(1))),
                }
            }
            Some(second) if n.is_multiple_of(2) => SwapActionSpec {
                order: n / 2,
                weights: reduce_weights(self.weights, n / 2),
                second: Some(reduce_weights(second, n / 2)),
            },
            Some(second) => SwapActionSpec {
                order: n,
                weights: reduce_weights(self.weights.map(|r| 2 * r), n),
                second: Some(reduce_weights(second.map(|r| 2 * r), n)),
            },
        }
    }

    /// `T(M)`, the action on the coefficient matrix of a bilinear form.
    pub fn act_on_matrix(&self, m: &Matrix) -> Matrix {
        let field = CyclotomicField::new(self.order.lcm(&m.field().conductor()));
        let d: Vec<Cyclotomic> = self.weights.iter().map(|&r| field.root_of_unity(r * step(&field, self.order))).collect();
        let lifted = |i: usize, j: usize| m[(i, j)].lift(&field);
        match self.second {
            None => Matrix::from_fn(4, 4, |i, j| &d[i] * &lifted(j, i)),
            Some(second) => {
                let e: Vec<Cyclotomic> = second.iter().map(|&r| field.root_of_unity(r * step(&field, self.order))).collect();
                Matrix::from_fn(4, 4, |i, j| &(&d[i] * &lifted(i, j)) * &e[j])
            }
        }
    }
}

/// Exponent step turning `ζ_n` into a power of the field's generator.
fn step(field: &Arc<CyclotomicField>, n: u64) -> i64 {
    (field.conductor() / n) as i64
}

/// Smallest `k ≥ 1` with `diag(ϖ^{w_i})^k` scalar.
fn projective_order_diag(w: &[i64; 4], n: u64) -> u64 {
    let g = w
        .iter()
        .map(|r| (r - w[0]).rem_euclid(n as i64) as u64)
        .fold(n, |acc, d| acc.gcd(&d));
    n / g
}

/// Smallest `m ≥ 1` with `σ^m` the identity of `ℙ³×ℙ³`. For a swap this is
/// the smallest even `m` with `D^{m/2}` scalar.
pub fn projective_order(spec: &SwapActionSpec) -> u64 {
    let n = spec.order.max(1);
    match spec.second {
        None => 2 * projective_order_diag(&spec.weights, n),
        Some(second) => {
            projective_order_diag(&spec.weights, n).lcm(&projective_order_diag(&second, n))
        }
    }
}

/// The common field `ℚ(ζ_lcm(N, n))` of a model and an action.
fn working_field(m: &ModelTriple, spec: &SwapActionSpec) -> Arc<CyclotomicField> {
    CyclotomicField::new(m.conductor().lcm(&spec.order))
}

fn vectorize(m: &Matrix, field: &Arc<CyclotomicField>) -> Vec<Cyclotomic> {
    (0..16).map(|k| m[(k / 4, k % 4)].lift(field)).collect()
}

/// The 3×3 matrix `S` with `T(M_i) = Σ_k S[k][i] M_k`.
pub fn action_on_forms(m: &ModelTriple, spec: &SwapActionSpec) -> Result<Matrix> {
    let field = working_field(m, spec);
    let basis = Matrix::from_fn(16, 3, |r, c| m.matrices()[c][(r / 4, r % 4)].lift(&field));
    let mut columns = Vec::with_capacity(3);
    for mi in m.matrices() {
        let image = vectorize(&spec.act_on_matrix(mi), &field);
        columns.push(basis.solve(&image).ok_or(Error::PencilNotInvariant)?);
    }
    Ok(Matrix::from_fn(3, 3, |k, i| columns[i][k].clone()))
}

/// An eigenbasis of the pencil: `T(M'_j) = ϖ^{s_j} M'_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPencil {
    pub matrices: [Matrix; 3],
    pub exponents: [i64; 3],
    pub order: u64,
}

impl InvariantPencil {
    pub fn model(&self) -> Result<ModelTriple> {
        ModelTriple::new(self.matrices.clone())
    }

    /// Checks `T(M'_j) = ϖ^{s_j} M'_j` exactly.
    pub fn satisfies_eigen_relation(&self, spec: &SwapActionSpec) -> bool {
        self.matrices.iter().zip(self.exponents).all(|(mj, s)| {
            let t = spec.act_on_matrix(mj);
            let field = t.field().clone();
            let w = field.root_of_unity(s * step(&field, spec.order));
            t == Matrix::from_fn(4, 4, |i, j| &mj[(i, j)].lift(&field) * &w)
        })
    }
}

/// Diagonalises `S`: eigenvalues are found among `ϖ^k`, `k = 0..n-1`, by
/// testing `det(S − ϖ^k I) = 0`, and eigenvectors by exact nullspace.
pub fn invariant_pencil(m: &ModelTriple, spec: &SwapActionSpec) -> Result<InvariantPencil> {
    let s = action_on_forms(m, spec)?;
    let field = s.field().clone();
    let n = spec.order;
    let mut matrices = Vec::new();
    let mut exponents = Vec::new();
    for k in 0..n as i64 {
        let lambda = field.root_of_unity(k * step(&field, n));
        let shifted = s.sub(&Matrix::identity(3, &field).scale(&lambda));
        if !shifted.det().is_zero() {
            continue;
        }
        for v in shifted.nullspace() {
            let combo = Matrix::from_fn(4, 4, |i, j| {
                let mut acc = field.zero();
                for (c, mc) in v.iter().zip(m.matrices()) {
                    acc += &(c * &mc[(i, j)].lift(&field));
                }
                acc
            });
            matrices.push(combo);
            exponents.push(k);
        }
    }
    if matrices.len() != 3 {
        return Err(Error::NotDiagonalisable { order: n });
    }
    Ok(InvariantPencil {
        matrices: matrices.try_into().expect("three eigenvectors"),
        exponents: exponents.try_into().expect("three exponents"),
        order: n,
    })
}

/// `X` is `G`-Fano for `G = ⟨σ⟩` exactly when `σ` swaps the two rulings.
pub fn is_gfano(spec: &SwapActionSpec) -> bool {
    spec.is_swap()
}

/// One-line reason for [`is_gfano`].
pub fn gfano_explanation(spec: &SwapActionSpec) -> &'static str {
    if spec.is_swap() {
        "sigma swaps H and H', so Pic^G(X) = Z[H+H'] = Z[-K_X] has rank 1: X is G-Fano"
    } else {
        "sigma preserves H and H', so Pic^G(X) = Z[H] + Z[H'] has rank 2: X is not G-Fano"
    }
}

#[cfg(test)]
mod tests;
