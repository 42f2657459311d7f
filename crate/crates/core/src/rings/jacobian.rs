use super::presentation::RingPresentation;
use crate::scalars::{lcm, Monomial, ParamPoly};

/// The ring with parameters promoted to polynomial variables, over `F_p`.
/// Variables are ordered parameters first, then ring variables.
#[derive(Clone, Debug)]
pub struct IntegralModel {
    p: u32,
    names: Vec<String>,
    nparams: usize,
    weights: Vec<i64>,
    relations: Vec<ParamPoly>,
}

impl IntegralModel {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Ring degree of each variable; parameters have weight 0.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn relations(&self) -> &[ParamPoly] {
        &self.relations
    }

    /// Index of ring variable `i` among all model variables.
    pub fn ring_var(&self, i: usize) -> usize {
        self.nparams + i
    }

    pub fn weight_of(&self, m: &Monomial) -> i64 {
        m.exps().iter().zip(&self.weights).map(|(&e, &w)| e as i64 * w).sum()
    }
}

/// Clears denominators of each relation. Ring variables are weighted by
/// their total degree.
pub fn integral_model(ring: &RingPresentation) -> IntegralModel {
    let s = ring.field().num_params();
    let n = ring.num_vars();
    let p = ring.p();
    let one = ring.field().one();
    let relations = ring
        .relations()
        .iter()
        .map(|r| {
            let f = r.poly(n, &one);
            let mut l = ParamPoly::one(p, s);
            for (_, c) in f.terms() {
                l = lcm(&l, c.den());
            }
            let mut out = ParamPoly::zero(p, s + n);
            for (e, c) in f.terms() {
                let scaled = c.num().mul(&l.div_exact(c.den()).unwrap());
                for (m, k) in scaled.terms() {
                    let mut exps = m.exps().to_vec();
                    exps.extend_from_slice(e);
                    out.add_term(Monomial::new(exps), k);
                }
            }
            out
        })
        .collect();
    let mut names: Vec<String> = ring.field().params().to_vec();
    names.extend(ring.var_names());
    let mut weights = vec![0; s];
    weights.extend(ring.variables().iter().map(|v| v.degree.iter().sum::<i64>()));
    IntegralModel { p, names, nparams: s, weights, relations }
}

/// Every formal partial derivative of every relation, including those in
/// the parameters, as `partials[j][k] = d f_j / d z_k`.
pub fn jacobian_partials(model: &IntegralModel) -> Vec<Vec<ParamPoly>> {
    model.relations.iter().map(|f| (0..model.nvars()).map(|k| f.derivative(k)).collect()).collect()
}

/// The `c x c` minors of the Jacobian matrix, `c` the number of relations;
/// for a hypersurface these are the partials. Zero minors are dropped.
pub fn jacobian_minors(model: &IntegralModel) -> Vec<ParamPoly> {
    let jac = jacobian_partials(model);
    let c = jac.len();
    let mut out = Vec::new();
    if c == 0 {
        return out;
    }
    let mut cols: Vec<usize> = (0..c).collect();
    let n = model.nvars();
    if c > n {
        return out;
    }
    loop {
        let m = determinant(&jac, &cols, model.p, n);
        if !m.is_zero() && !out.contains(&m) {
            out.push(m);
        }
        // next combination
        let mut i = c;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cols[i] < n - c + i {
                cols[i] += 1;
                for j in i + 1..c {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Laplace expansion along the first row.
fn determinant(jac: &[Vec<ParamPoly>], cols: &[usize], p: u32, nvars: usize) -> ParamPoly {
    fn rec(jac: &[Vec<ParamPoly>], row: usize, cols: &[usize], p: u32, nvars: usize) -> ParamPoly {
        if cols.is_empty() {
            return ParamPoly::one(p, nvars);
        }
        let mut acc = ParamPoly::zero(p, nvars);
        for (i, &c) in cols.iter().enumerate() {
            let entry = &jac[row][c];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry.mul(&rec(jac, row + 1, &rest, p, nvars));
            acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    rec(jac, 0, cols, p, nvars)
}
