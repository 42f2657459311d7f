use serde::Serialize;

use super::class::BasisClassIndex;
use crate::error::{Error, Result};
use crate::rings::Ring;

/// A finite graded piece `[H^d]_degree` with its ordered canonical basis.
#[derive(Clone, Debug)]
pub struct GradedComponent {
    ring: Ring,
    degree: Vec<i64>,
    basis: Vec<BasisClassIndex>,
    veronese: Option<VeroneseTag>,
}

/// Records that a component is the degree-`k` piece over `S^{(n)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VeroneseTag {
    pub n: u32,
    pub k: i64,
}

impl GradedComponent {
    /// A component restricted to the given indices, all of degree `degree`.
    pub fn from_indices(ring: &Ring, degree: Vec<i64>, mut basis: Vec<BasisClassIndex>) -> Self {
        basis.sort();
        basis.dedup();
        debug_assert!(basis.iter().all(|b| b.degree(ring) == degree));
        GradedComponent { ring: ring.clone(), degree, basis, veronese: None }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> &[i64] {
        &self.degree
    }

    pub fn basis(&self) -> &[BasisClassIndex] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn position(&self, idx: &BasisClassIndex) -> Option<usize> {
        self.basis.binary_search(idx).ok()
    }

    pub fn veronese(&self) -> Option<VeroneseTag> {
        self.veronese
    }
}

/// Every canonical basis index of the given degree, in lexicographic order
/// on `(bound, den)`.
pub fn component_basis(ring: &Ring, degree: &[i64]) -> Result<GradedComponent> {
    let g = ring.grading_rank();
    if degree.len() != g {
        return Err(Error::DegreeRank { expected: g, got: degree.len() });
    }
    let vars = ring.variables();
    let unbound = ring.unbound();
    let mut basis = Vec::new();
    let mut bound = vec![0u32; ring.relations().len()];
    loop {
        // required sum of alpha_i * deg(u_i)
        let mut target: Vec<i64> = degree.iter().map(|d| -d).collect();
        for (r, &a) in ring.relations().iter().zip(&bound) {
            for (t, &x) in target.iter_mut().zip(&vars[r.bound()].degree) {
                *t += a as i64 * x;
            }
        }
        for &u in unbound {
            for (t, &x) in target.iter_mut().zip(&vars[u].degree) {
                *t -= x;
            }
        }
        if target.iter().all(|&t| t >= 0) {
            let weights: Vec<&[i64]> = unbound.iter().map(|&u| vars[u].degree.as_slice()).collect();
            let mut den = Vec::with_capacity(unbound.len());
            enumerate_dens(&weights, &mut target, &mut den, &mut |den| {
                basis.push(BasisClassIndex { bound: bound.clone(), den: den.to_vec() });
            });
        }
        // odometer over bound exponents
        let mut j = bound.len();
        loop {
            if j == 0 {
                return Ok(GradedComponent::from_indices(ring, degree.to_vec(), basis));
            }
            j -= 1;
            if bound[j] + 1 < ring.relations()[j].degree() {
                bound[j] += 1;
                break;
            }
            bound[j] = 0;
        }
    }
}

/// All `alpha` with `sum alpha_i * w_i = target`.
fn enumerate_dens(weights: &[&[i64]], target: &mut Vec<i64>, den: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    let i = den.len();
    if i == weights.len() {
        if target.iter().all(|&t| t == 0) {
            emit(den);
        }
        return;
    }
    let w = weights[i];
    let mut alpha = 0u32;
    loop {
        den.push(alpha);
        enumerate_dens(weights, target, den, emit);
        den.pop();
        for (t, &x) in target.iter_mut().zip(w) {
            *t -= x;
        }
        alpha += 1;
        if target.iter().any(|&t| t < 0) {
            break;
        }
    }
    for (t, &x) in target.iter_mut().zip(w) {
        *t += alpha as i64 * x;
    }
}

/// The degree-`k` piece of top local cohomology of `S^{(n)}`, which is
/// the degree-`n k` piece over `S`.
pub fn veronese_component_basis(ring: &Ring, n: u32, k: i64) -> Result<GradedComponent> {
    if ring.grading_rank() != 1 {
        return Err(Error::NotZGraded);
    }
    if n == 0 {
        return Err(Error::Invalid("Veronese index must be positive".into()));
    }
    let mut c = component_basis(ring, &[n as i64 * k])?;
    c.veronese = Some(VeroneseTag { n, k });
    Ok(c)
}
