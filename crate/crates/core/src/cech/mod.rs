//! Top local cohomology `H^d` via the Cech complex on the unbound
//! variables, in the canonical basis of classes
//! `[prod b_j^{a_j} / prod u_i^{alpha_i + 1}]` with `a_j < m_j`.

mod class;
mod component;
mod split;

pub use class::{class_frobenius, index_frobenius, normalize_class, BasisClassIndex, CechClass};
pub use component::{component_basis, veronese_component_basis, GradedComponent, VeroneseTag};
pub use split::{family_b_grading, multigraded_split, split_by, MultigradedSplit, ResidueGrading, SplitPart};

#[cfg(test)]
mod tests;
