//! The two hypersurface families
//! `x0^p - sum t_i x_i^p` over `F_p(t_1..t_p)` and
//! `w^{p+1} - t x^{p+1} - x y^p - sum z_i^{p+1}` over `F_p(t)`.

use crate::error::Result;
use crate::rings::{make_ring, Assumptions, FreePoly, RelationSpec, Ring, RingSpec};
use crate::scalars::FieldDescriptor;

fn pure_power(nvars: usize, v: usize, k: u32, c: crate::scalars::RationalScalar) -> FreePoly {
    let mut e = vec![0; nvars];
    e[v] = k;
    FreePoly::monomial(e, c)
}

/// `K[x_0..x_p]/(x_0^p - sum t_i x_i^p)`, all degrees 1. Assumptions record
/// the normality and isolated singularity the family is known to have.
pub fn family_a(p: u32) -> Result<Ring> {
    let params = (1..=p).map(|i| format!("t{i}")).collect();
    let field = FieldDescriptor::new(p, params, 0)?;
    let n = p as usize + 1;
    let variables = (0..n).map(|i| (format!("x{i}"), vec![1])).collect();
    let mut f = pure_power(n, 0, p, field.one());
    for i in 1..n {
        f = f.sub(&pure_power(n, i, p, field.param(i - 1)));
    }
    make_ring(RingSpec {
        field,
        variables,
        relations: vec![RelationSpec { poly: f, bound: Some(0) }],
        assumptions: Assumptions { isolated_singularity_asserted: true, normal_asserted: true },
    })
}

/// `K[w,x,y,z_1..z_{p-1}]/(w^{p+1} - t x^{p+1} - x y^p - sum z_i^{p+1})`.
pub fn family_b(p: u32) -> Result<Ring> {
    let field = FieldDescriptor::new(p, vec!["t".into()], 0)?;
    let mut names = vec!["w".to_string(), "x".into(), "y".into()];
    names.extend((1..p).map(|i| format!("z{i}")));
    let n = names.len();
    let one = field.one();
    let mut f = pure_power(n, 0, p + 1, one.clone());
    f = f.sub(&pure_power(n, 1, p + 1, field.param(0)));
    let mut xy = vec![0; n];
    xy[1] = 1;
    xy[2] = p;
    f = f.sub(&FreePoly::monomial(xy, one.clone()));
    for i in 3..n {
        f = f.sub(&pure_power(n, i, p + 1, one.clone()));
    }
    make_ring(RingSpec {
        field,
        variables: names.into_iter().map(|s| (s, vec![1])).collect(),
        relations: vec![RelationSpec { poly: f, bound: Some(0) }],
        assumptions: Assumptions { isolated_singularity_asserted: true, normal_asserted: true },
    })
}
