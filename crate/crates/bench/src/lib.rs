//! Fixtures shared by the benchmarks.

use fano212_core::action::{invariant_pencil, random_equivariant_model, InvariantPencil, SwapActionSpec};
use fano212_core::model::ModelTriple;

/// A smooth order-8 swap instance with its invariant pencil.
pub fn order_eight_instance() -> (SwapActionSpec, ModelTriple, InvariantPencil) {
    let r = [0, 2, 4, 6];
    let spec = SwapActionSpec::swap(8, r).expect("valid swap");
    let model = random_equivariant_model(8, r, [0, 1, 4], 1).expect("generator succeeds");
    let pencil = invariant_pencil(&model, &spec).expect("pencil is invariant");
    (spec, model, pencil)
}

/// A smooth involution instance over ℚ.
pub fn involution_instance() -> ModelTriple {
    random_equivariant_model(2, [0; 4], [0, 0, 0], 5).expect("generator succeeds")
}
