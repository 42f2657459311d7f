//! Graded quotients `K[v_1..v_N]/(f_1..f_c)` with each `f_j` monic in its
//! own variable, and the constructions on them.

mod element;
mod free;
mod jacobian;
mod ops;
mod presentation;

pub use element::RingElement;
pub use free::FreePoly;
pub use jacobian::{integral_model, jacobian_minors, jacobian_partials, IntegralModel};
pub use ops::{base_change, embed_element, nilpotency_check, ring_frobenius, tensor_square, NilpotencyVerdict};
pub use presentation::{make_ring, Assumptions, Relation, RelationSpec, Ring, RingPresentation, RingSpec, Variable};

/// Reduces an element given with arbitrary exponents.
pub fn normal_form(ring: &Ring, f: &FreePoly) -> RingElement {
    ring.element(f.clone())
}

#[cfg(test)]
mod tests;
