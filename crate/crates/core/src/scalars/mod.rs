//! Exact arithmetic in `F_p`, `F_p[t_1..t_s]` and `K = F_p(t_1..t_s)`.

mod field;
mod gcd;
mod poly;
mod rational;

pub use field::{is_prime, FieldDescriptor, PrimeField, RootEmbedding};
pub use gcd::{gcd, lcm};
pub use poly::{Monomial, ParamPoly};
pub use rational::{frobenius_scalar, rf_normalize, RationalScalar};

pub(crate) use field::{inv_mod, mul_mod};
pub(crate) use poly::format_monomial;

/// `g = sum_eps (g_eps)^p * t^eps`; see [`ParamPoly::pth_root_decompose`].
pub fn pth_root_decompose(g: &ParamPoly) -> std::collections::BTreeMap<Vec<u32>, ParamPoly> {
    g.pth_root_decompose()
}
