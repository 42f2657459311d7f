use std::collections::BTreeMap;

use super::class::BasisClassIndex;
use super::component::GradedComponent;
use crate::error::{Error, Result};
use crate::rings::Ring;

/// A grading of the ring by `(Z/modulus)^rank` under which every relation
/// is homogeneous of residue zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueGrading {
    modulus: u32,
    weights: Vec<Vec<u32>>,
}

impl ResidueGrading {
    pub fn new(ring: &Ring, modulus: u32, weights: Vec<Vec<u32>>) -> Result<Self> {
        if weights.len() != ring.num_vars() || modulus < 2 {
            return Err(Error::Invalid("residue grading does not match the ring".into()));
        }
        let g = ResidueGrading { modulus, weights };
        for (j, r) in ring.relations().iter().enumerate() {
            let mut top = vec![0; ring.num_vars()];
            top[r.bound()] = r.degree();
            let want = g.residue_of_exps(&top);
            if r.rhs().terms().any(|(e, _)| g.residue_of_exps(e) != want) {
                return Err(Error::NotFamilyBShape(format!("relation {j} is not residue-homogeneous")));
            }
        }
        Ok(g)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.weights.first().map_or(0, Vec::len)
    }

    fn residue_of_exps(&self, e: &[u32]) -> Vec<u32> {
        let m = self.modulus as u64;
        let mut out = vec![0u64; self.rank()];
        for (w, &x) in self.weights.iter().zip(e) {
            for (acc, &c) in out.iter_mut().zip(w) {
                *acc = (*acc + c as u64 * x as u64) % m;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// Residue degree of a basis class.
    pub fn residue(&self, ring: &Ring, idx: &BasisClassIndex) -> Vec<u32> {
        let m = self.modulus as i64;
        let num = self.residue_of_exps(&idx.numerator_exps(ring));
        let mut out: Vec<i64> = num.into_iter().map(i64::from).collect();
        for (&u, &k) in ring.unbound().iter().zip(&idx.den_powers()) {
            for (acc, &c) in out.iter_mut().zip(&self.weights[u]) {
                *acc -= c as i64 * k as i64;
            }
        }
        out.into_iter().map(|x| x.rem_euclid(m) as u32).collect()
    }
}

/// The `(Z/(p+1))^{p+1}` grading of `w^{p+1} - t x^{p+1} - x y^p - sum z_i^{p+1}`:
/// `z_i -> e_i`, `w -> e_p`, `x, y -> e_{p+1}`.
pub fn family_b_grading(ring: &Ring) -> Result<ResidueGrading> {
    let bad = |why: &str| Err(Error::NotFamilyBShape(why.to_string()));
    let p = ring.p();
    if ring.grading_rank() != 1 || ring.relations().len() != 1 {
        return bad("expected a single relation over a Z-grading");
    }
    let rel = &ring.relations()[0];
    if rel.degree() != p + 1 {
        return bad("bound variable must have monic degree p+1");
    }
    let unbound = ring.unbound();
    if unbound.len() != p as usize + 1 {
        return bad("expected p+1 unbound variables");
    }
    let mut xy = None;
    let mut pure = Vec::new();
    for (e, _) in rel.rhs().terms() {
        let support: Vec<usize> = (0..e.len()).filter(|&v| e[v] > 0).collect();
        match support.as_slice() {
            [v] if e[*v] == p + 1 => pure.push(*v),
            [a, b] if e[*a] == 1 && e[*b] == p && xy.is_none() => xy = Some((*a, *b)),
            [a, b] if e[*b] == 1 && e[*a] == p && xy.is_none() => xy = Some((*b, *a)),
            _ => return bad("unexpected term in the relation"),
        }
    }
    let Some((x, y)) = xy else {
        return bad("missing the x*y^p term");
    };
    let zs: Vec<usize> = unbound.iter().copied().filter(|&v| v != x && v != y).collect();
    if zs.iter().any(|z| !pure.contains(z)) {
        return bad("each remaining variable must appear as a pure (p+1)-th power");
    }
    let rank = p as usize + 1;
    let mut weights = vec![vec![0u32; rank]; ring.num_vars()];
    for (i, &z) in zs.iter().enumerate() {
        weights[z][i] = 1;
    }
    weights[rel.bound()][rank - 2] = 1;
    weights[x][rank - 1] = 1;
    weights[y][rank - 1] = 1;
    ResidueGrading::new(ring, p + 1, weights)
}

/// One residue class of basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPart {
    pub residue: Vec<u32>,
    pub basis: Vec<BasisClassIndex>,
}

#[derive(Clone, Debug)]
pub struct MultigradedSplit {
    pub grading: ResidueGrading,
    pub parts: Vec<SplitPart>,
}

impl MultigradedSplit {
    /// Subcomponent spanned by one part.
    pub fn component(&self, ring: &Ring, degree: &[i64], part: usize) -> GradedComponent {
        GradedComponent::from_indices(ring, degree.to_vec(), self.parts[part].basis.clone())
    }
}

/// Partitions a Family-B component by residue degree.
pub fn multigraded_split(ring: &Ring, component: &GradedComponent) -> Result<MultigradedSplit> {
    let grading = family_b_grading(ring)?;
    Ok(split_by(ring, component, grading))
}

pub fn split_by(ring: &Ring, component: &GradedComponent, grading: ResidueGrading) -> MultigradedSplit {
    let mut parts: BTreeMap<Vec<u32>, Vec<BasisClassIndex>> = BTreeMap::new();
    for idx in component.basis() {
        parts.entry(grading.residue(ring, idx)).or_default().push(idx.clone());
    }
    let parts = parts.into_iter().map(|(residue, basis)| SplitPart { residue, basis }).collect();
    MultigradedSplit { grading, parts }
}
