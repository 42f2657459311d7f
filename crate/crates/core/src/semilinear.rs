//! `p^e`-semilinear maps between graded components and their kernels.
//!
//! A single Frobenius step `sum_j c_j^p a_ij = 0` is linearized by writing
//! each cleared entry as `sum_eps g_eps^p t^eps`: since the monomials
//! `t^eps` are a basis of `K` over `K^p`, the condition splits into the
//! `K`-linear equations `sum_j c_j g_ij,eps = 0`.

use std::collections::{BTreeMap, BTreeSet};

use crate::cech::{component_basis, index_frobenius, BasisClassIndex, CechClass, GradedComponent};
use crate::error::Result;
use crate::linalg::{clear_row, dense_to_sparse, scalar_kernel, Echelon, PolyRow};
use crate::rings::Ring;
use crate::scalars::{lcm, FieldDescriptor, ParamPoly, RationalScalar};

/// Sparse column: row index into the target support, entry.
pub type Column = BTreeMap<usize, RationalScalar>;

/// `F^e` restricted to a component, as the matrix of images of the basis.
/// Only target basis classes that actually occur are kept as rows.
#[derive(Clone, Debug)]
pub struct SemilinearMap {
    source: GradedComponent,
    target_degree: Vec<i64>,
    target_support: Vec<BasisClassIndex>,
    e: u32,
    columns: Vec<Column>,
}

impl SemilinearMap {
    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    pub fn source(&self) -> &GradedComponent {
        &self.source
    }

    pub fn target_degree(&self) -> &[i64] {
        &self.target_degree
    }

    pub fn target_support(&self) -> &[BasisClassIndex] {
        &self.target_support
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn nrows(&self) -> usize {
        self.target_support.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> RationalScalar {
        self.columns[col].get(&row).cloned().unwrap_or_else(|| self.ring().field().zero())
    }

    /// Image of the source class with coordinates `c`: `sum c_j^{p^e} col_j`.
    pub fn apply(&self, c: &[RationalScalar]) -> CechClass {
        let ring = self.ring();
        let mut out = CechClass::zero(ring);
        for (cj, col) in c.iter().zip(&self.columns) {
            if cj.is_zero() {
                continue;
            }
            let cq = cj.frobenius(self.e);
            let part =
                CechClass::from_coords(ring, col.iter().map(|(&i, a)| (self.target_support[i].clone(), a.mul(&cq))));
            out = out.add(&part);
        }
        out
    }
}

/// Builds `F^e` on the full component of `source_degree`.
pub fn build_frobenius_matrix(ring: &Ring, source_degree: &[i64], e: u32) -> Result<SemilinearMap> {
    Ok(frobenius_map(&component_basis(ring, source_degree)?, e))
}

/// Builds `F^e` on an arbitrary (sub)component.
pub fn frobenius_map(source: &GradedComponent, e: u32) -> SemilinearMap {
    let ring = source.ring();
    let q = ring.p().pow(e) as i64;
    let images: Vec<CechClass> = source.basis().iter().map(|b| index_frobenius(ring, b, e)).collect();
    let support: BTreeSet<&BasisClassIndex> = images.iter().flat_map(|c| c.coords().keys()).collect();
    let target_support: Vec<BasisClassIndex> = support.into_iter().cloned().collect();
    let columns = images
        .iter()
        .map(|img| img.coords().iter().map(|(k, v)| (target_support.binary_search(k).unwrap(), v.clone())).collect())
        .collect();
    SemilinearMap {
        source: source.clone(),
        target_degree: source.degree().iter().map(|d| d * q).collect(),
        target_support,
        e,
        columns,
    }
}

/// Kernel of `c -> sum_j c_j^p a_j` for sparse rows `a` over `K`, together
/// with the rank of the expanded `K`-linear system.
#[derive(Clone, Debug)]
pub struct SemilinearSolution {
    pub kernel: Vec<Vec<RationalScalar>>,
    pub expanded_rank: usize,
    pub expanded_rows: usize,
}

/// Solves `sum_j c_j^p a_ij = 0` for all rows `i`.
pub fn solve_semilinear(field: &FieldDescriptor, ncols: usize, rows: &[Column]) -> SemilinearSolution {
    let p = field.p();
    let s = field.num_params();
    // Column scaling c_j = L_j c'_j makes every entry a_ij L_j^p polynomial.
    let mut l = vec![ParamPoly::one(p, s); ncols];
    for row in rows {
        for (&j, a) in row {
            l[j] = lcm(&l[j], a.den());
        }
    }
    let lp: Vec<ParamPoly> = l.iter().map(|x| x.frobenius(1)).collect();
    let mut expanded: BTreeMap<(usize, Vec<u32>), PolyRow> = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        for (&j, a) in row {
            let g = a.num().mul(&lp[j].div_exact(a.den()).unwrap());
            for (eps, part) in g.pth_root_decompose() {
                expanded.entry((i, eps)).or_default().insert(j, part);
            }
        }
    }
    let expanded_rows = expanded.len();
    let mut ech = Echelon::new(ncols);
    for row in expanded.into_values() {
        ech.insert(row);
    }
    let kernel = ech
        .kernel(p, s)
        .into_iter()
        .map(|v| {
            let v: Vec<RationalScalar> =
                v.iter().zip(&l).map(|(c, lj)| c.mul(&RationalScalar::from_poly(lj.clone()))).collect();
            normalize_first(v)
        })
        .collect();
    SemilinearSolution { kernel, expanded_rank: ech.rank(), expanded_rows }
}

/// Scales so the first nonzero coordinate is 1.
fn normalize_first(v: Vec<RationalScalar>) -> Vec<RationalScalar> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) if !lead.is_one() => {
            let inv = lead.inv().unwrap();
            v.iter().map(|c| c.mul(&inv)).collect()
        }
        _ => v,
    }
}

/// Kernel coordinates of `F^e` on the source, over its basis. Higher `e`
/// is reduced to single steps: `F^e v = 0` iff `F v` lies in the kernel `W`
/// of `F^{e-1}` on the support of `F`, i.e. iff `Lambda F v = 0` for an
/// annihilator basis `Lambda` of `W`.
pub fn kernel_coordinates(source: &GradedComponent, e: u32) -> SemilinearSolution {
    let ring = source.ring();
    let field = ring.field();
    let n = source.dim();
    if n == 0 || e == 0 {
        let expanded_rank = if e == 0 { n } else { 0 };
        return SemilinearSolution { kernel: vec![], expanded_rank, expanded_rows: expanded_rank };
    }
    let m = frobenius_map(source, 1);
    let rows = matrix_rows(&m);
    if e == 1 {
        return solve_semilinear(field, n, &rows);
    }
    let sub = GradedComponent::from_indices(ring, m.target_degree().to_vec(), m.target_support().to_vec());
    let w = kernel_coordinates(&sub, e - 1).kernel;
    let lambda: Vec<Vec<RationalScalar>> = if w.is_empty() {
        identity(field, sub.dim())
    } else {
        scalar_kernel(&w, sub.dim(), field.p(), field.num_params())
    };
    // Lambda rows are indexed by sub's basis, which equals m's support order.
    let combined: Vec<Column> = lambda
        .iter()
        .map(|lam| {
            let mut out = Column::new();
            for (i, row) in rows.iter().enumerate() {
                if lam[i].is_zero() {
                    continue;
                }
                for (&j, a) in row {
                    let v = a.mul(&lam[i]);
                    let slot = out.entry(j).or_insert_with(|| field.zero());
                    *slot = slot.add(&v);
                }
            }
            out.retain(|_, v| !v.is_zero());
            out
        })
        .collect();
    solve_semilinear(field, n, &combined)
}

fn identity(field: &FieldDescriptor, n: usize) -> Vec<Vec<RationalScalar>> {
    (0..n)
        .map(|i| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        })
        .collect()
}

/// Rows of the matrix as sparse maps over columns.
pub fn matrix_rows(m: &SemilinearMap) -> Vec<Column> {
    let mut rows = vec![Column::new(); m.nrows()];
    for (j, col) in m.columns().iter().enumerate() {
        for (&i, a) in col {
            rows[i].insert(j, a.clone());
        }
    }
    rows
}

/// Basis of the kernel of `M` as classes in the source component.
pub fn semilinear_kernel(m: &SemilinearMap) -> Vec<CechClass> {
    let source = m.source();
    kernel_coordinates(source, m.e()).kernel.iter().map(|v| coordinates_to_class(source, v)).collect()
}

pub fn coordinates_to_class(source: &GradedComponent, v: &[RationalScalar]) -> CechClass {
    CechClass::from_coords(source.ring(), source.basis().iter().cloned().zip(v.iter().cloned()))
}

/// Coordinates of a class over a component's basis; `None` if the class
/// has support outside the component.
pub fn class_coordinates(source: &GradedComponent, c: &CechClass) -> Option<Vec<RationalScalar>> {
    let mut v = vec![source.ring().field().zero(); source.dim()];
    for (idx, a) in c.coords() {
        v[source.position(idx)?] = a.clone();
    }
    Some(v)
}

pub fn is_injective(m: &SemilinearMap) -> bool {
    kernel_coordinates(m.source(), m.e()).kernel.is_empty()
}

/// Sparse rows from dense scalar rows.
pub fn dense_rows(rows: &[Vec<RationalScalar>]) -> Vec<Column> {
    rows.iter().map(|r| dense_to_sparse(r)).collect()
}

/// Whether `v` lies in the span of `basis` (all over the same coordinates).
pub fn in_span(basis: &[Vec<RationalScalar>], v: &[RationalScalar], ncols: usize) -> bool {
    let mut ech = Echelon::new(ncols);
    for b in basis {
        ech.insert(clear_row(&dense_to_sparse(b)));
    }
    ech.contains(clear_row(&dense_to_sparse(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cech::{class_frobenius, normalize_class};
    use crate::families::{family_a, family_b};
    use crate::rings::base_change;

    #[test]
    fn family_a_matrix_and_kernel() {
        let a = family_a(2).unwrap();
        let m = build_frobenius_matrix(&a, &[-2], 1).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (1, 3));
        let t1 = a.field().param(0);
        let t2 = a.field().param(1);
        // basis order: eta_00, eta_01, eta_10
        assert_eq!(m.entry(0, 0), a.field().one());
        assert_eq!(m.entry(0, 1), t2);
        assert_eq!(m.entry(0, 2), t1);
        assert!(semilinear_kernel(&m).is_empty());
        assert!(is_injective(&m));
    }

    #[test]
    fn base_changed_family_a_kernel() {
        let (ab, emb) = base_change(&family_a(2).unwrap()).unwrap();
        let m = build_frobenius_matrix(&ab, &[-2], 1).unwrap();
        let k = semilinear_kernel(&m);
        assert_eq!(k.len(), 2);
        for c in &k {
            assert!(class_frobenius(c, 1).is_zero());
        }
        let eta10 = normalize_class(&ab.monomial(vec![1, 0, 0]), &[2, 1]).unwrap();
        let eta01 = normalize_class(&ab.monomial(vec![1, 0, 0]), &[1, 2]).unwrap();
        let w = eta10.scale(&emb.root_of(1)).sub(&eta01.scale(&emb.root_of(0)));
        let coords: Vec<_> = k.iter().map(|c| class_coordinates(m.source(), c).unwrap()).collect();
        let wc = class_coordinates(m.source(), &w).unwrap();
        assert!(in_span(&coords, &wc, m.ncols()));
        assert!(!is_injective(&m));
    }

    #[test]
    fn zero_map_and_empty_source() {
        let a = family_a(2).unwrap();
        let empty = build_frobenius_matrix(&a, &[0], 1).unwrap();
        assert_eq!(empty.ncols(), 0);
        assert!(is_injective(&empty));
        let field = a.field();
        let sol = solve_semilinear(field, 1, &[]);
        assert_eq!(sol.kernel, vec![vec![field.one()]]);
    }

    #[test]
    fn family_b_matrix_shape() {
        let b = family_b(2).unwrap();
        let m = build_frobenius_matrix(&b, &[-2], 1).unwrap();
        assert_eq!(m.ncols(), 4);
        assert_eq!(m.target_degree(), [-4]);
        assert!(is_injective(&m));
    }

    #[test]
    fn iterated_kernel_is_sound() {
        let (ab, _) = base_change(&family_a(2).unwrap()).unwrap();
        let m2 = build_frobenius_matrix(&ab, &[-2], 2).unwrap();
        let k1 = semilinear_kernel(&build_frobenius_matrix(&ab, &[-2], 1).unwrap());
        let k2 = semilinear_kernel(&m2);
        assert!(k2.len() >= k1.len());
        for c in &k2 {
            assert!(class_frobenius(c, 2).is_zero());
        }
        let a = family_a(3).unwrap();
        assert!(is_injective(&build_frobenius_matrix(&a, &[-3], 2).unwrap()));
    }
}
