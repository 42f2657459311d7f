use serde::Serialize;

use super::free::FreePoly;
use super::presentation::{make_ring, Relation, RelationSpec, Ring, RingPresentation, RingSpec};
use super::RingElement;
use crate::error::{Error, Result};
use crate::scalars::RootEmbedding;

impl Relation {
    /// `v^m - rhs` as a free polynomial in `nvars` variables.
    pub fn poly(&self, nvars: usize, one: &crate::scalars::RationalScalar) -> FreePoly {
        let mut exps = vec![0; nvars];
        exps[self.bound()] = self.degree();
        FreePoly::monomial(exps, one.clone()).sub(self.rhs())
    }
}

/// `a^(p^e)` in normal form, computed term by term since Frobenius is
/// additive.
pub fn ring_frobenius(a: &RingElement, e: u32) -> RingElement {
    let ring = a.ring();
    let q = ring.p().pow(e);
    let mut out = ring.zero_free();
    for (exps, c) in a.terms() {
        let big: Vec<u32> = exps.iter().map(|x| x * q).collect();
        let cq = c.frobenius(e);
        let mono = ring.reduce(&FreePoly::monomial(big, cq));
        out = out.add(&mono);
    }
    RingElement::from_normal(ring.clone(), out)
}

/// `S (x)_K S`. The second copy's variables carry a trailing `'` and the
/// grading becomes `Z^2`.
pub fn tensor_square(s: &RingPresentation) -> Result<Ring> {
    if s.grading_rank() != 1 {
        return Err(Error::NotZGraded);
    }
    let n = s.num_vars();
    let mut variables = Vec::with_capacity(2 * n);
    for v in s.variables() {
        variables.push((v.name.clone(), vec![v.degree[0], 0]));
    }
    for v in s.variables() {
        variables.push((format!("{}'", v.name), vec![0, v.degree[0]]));
    }
    let one = s.field().one();
    let mut relations = Vec::with_capacity(2 * s.relations().len());
    for offset in [0, n] {
        for r in s.relations() {
            relations
                .push(RelationSpec { poly: r.poly(n, &one).embed(2 * n, offset), bound: Some(r.bound() + offset) });
        }
    }
    make_ring(RingSpec { field: s.field().clone(), variables, relations, assumptions: Default::default() })
}

/// `S (x)_K K^{1/p}`. Assumption flags are dropped since the base change
/// need not be reduced.
pub fn base_change(s: &RingPresentation) -> Result<(Ring, RootEmbedding)> {
    let (field, embedding) = s.field().adjoin_pth_roots_avoiding(&s.var_names())?;
    let n = s.num_vars();
    let one = s.field().one();
    let relations = s
        .relations()
        .iter()
        .map(|r| RelationSpec {
            poly: r.poly(n, &one).map_coeffs(|c| embedding.apply(c), field.num_params()),
            bound: Some(r.bound()),
        })
        .collect();
    let variables = s.variables().iter().map(|v| (v.name.clone(), v.degree.clone())).collect();
    let ring = make_ring(RingSpec { field, variables, relations, assumptions: Default::default() })?;
    Ok((ring, embedding))
}

/// Transports an element along a coefficient embedding into a ring with the
/// same variables.
pub fn embed_element(a: &RingElement, embedding: &RootEmbedding, target: &Ring) -> RingElement {
    let nparams = target.field().num_params();
    target.element(a.poly().map_coeffs(|c| embedding.apply(c), nparams))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyVerdict {
    pub nonzero: bool,
    pub kth_power_zero: bool,
}

pub fn nilpotency_check(a: &RingElement, k: u64) -> NilpotencyVerdict {
    NilpotencyVerdict { nonzero: !a.is_zero(), kth_power_zero: a.pow(k).is_zero() }
}
