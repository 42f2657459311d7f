use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::{FreePoly, Ring, RingElement};
use crate::scalars::{format_monomial, RationalScalar};

/// `[prod b_j^{a_j} / prod u_i^{alpha_i + 1}]`, with `bound[j] = a_j` for
/// relation `j` and `den[i] = alpha_i` for the `i`-th unbound variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BasisClassIndex {
    pub bound: Vec<u32>,
    pub den: Vec<u32>,
}

impl BasisClassIndex {
    pub fn degree(&self, ring: &Ring) -> Vec<i64> {
        let mut d = vec![0i64; ring.grading_rank()];
        for (r, &a) in ring.relations().iter().zip(&self.bound) {
            let g = &ring.variables()[r.bound()].degree;
            for (acc, &x) in d.iter_mut().zip(g) {
                *acc += a as i64 * x;
            }
        }
        for (&u, &alpha) in ring.unbound().iter().zip(&self.den) {
            let g = &ring.variables()[u].degree;
            for (acc, &x) in d.iter_mut().zip(g) {
                *acc -= (alpha as i64 + 1) * x;
            }
        }
        d
    }

    /// Full exponent vector of the numerator monomial.
    pub fn numerator_exps(&self, ring: &Ring) -> Vec<u32> {
        let mut e = vec![0; ring.num_vars()];
        for (r, &a) in ring.relations().iter().zip(&self.bound) {
            e[r.bound()] = a;
        }
        e
    }

    /// Denominator exponents `alpha_i + 1`.
    pub fn den_powers(&self) -> Vec<u32> {
        self.den.iter().map(|a| a + 1).collect()
    }

    pub fn display(&self, ring: &Ring) -> String {
        let names = ring.var_names();
        let num = format_monomial(&self.numerator_exps(ring), &names);
        let num = if num.is_empty() { "1".to_string() } else { num };
        format!("[{} / {}]", num, denominator_text(ring, &self.den_powers()))
    }
}

fn denominator_text(ring: &Ring, powers: &[u32]) -> String {
    let names = ring.var_names();
    ring.unbound()
        .iter()
        .zip(powers)
        .map(|(&u, &k)| if k == 1 { names[u].clone() } else { format!("{}^{}", names[u], k) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// An element of top local cohomology in canonical-basis coordinates.
#[derive(Clone)]
pub struct CechClass {
    ring: Ring,
    coords: BTreeMap<BasisClassIndex, RationalScalar>,
}

impl PartialEq for CechClass {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.coords == other.coords
    }
}

impl Eq for CechClass {}

impl fmt::Debug for CechClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl CechClass {
    pub fn zero(ring: &Ring) -> Self {
        CechClass { ring: ring.clone(), coords: BTreeMap::new() }
    }

    pub fn basis(ring: &Ring, idx: BasisClassIndex) -> Self {
        Self::from_coords(ring, [(idx, ring.field().one())])
    }

    pub fn from_coords(ring: &Ring, coords: impl IntoIterator<Item = (BasisClassIndex, RationalScalar)>) -> Self {
        let mut out = Self::zero(ring);
        for (idx, c) in coords {
            out.add_coord(idx, c);
        }
        out
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coords(&self) -> &BTreeMap<BasisClassIndex, RationalScalar> {
        &self.coords
    }

    pub fn coord(&self, idx: &BasisClassIndex) -> RationalScalar {
        self.coords.get(idx).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn add_coord(&mut self, idx: BasisClassIndex, c: RationalScalar) {
        if c.is_zero() {
            return;
        }
        let s = match self.coords.remove(&idx) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !s.is_zero() {
            self.coords.insert(idx, s);
        }
    }

    pub fn add(&self, other: &CechClass) -> CechClass {
        assert!(Arc::ptr_eq(&self.ring, &other.ring), "classes over different rings");
        let mut out = self.clone();
        for (idx, c) in &other.coords {
            out.add_coord(idx.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> CechClass {
        CechClass { ring: self.ring.clone(), coords: self.coords.iter().map(|(i, c)| (i.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &CechClass) -> CechClass {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &RationalScalar) -> CechClass {
        if s.is_zero() {
            return Self::zero(&self.ring);
        }
        CechClass { ring: self.ring.clone(), coords: self.coords.iter().map(|(i, c)| (i.clone(), c.mul(s))).collect() }
    }

    /// Degree if all coordinates share one degree; `None` for zero or
    /// inhomogeneous classes.
    pub fn degree(&self) -> Option<Vec<i64>> {
        let mut it = self.coords.keys().map(|i| i.degree(&self.ring));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// `s * self`.
    pub fn mul_element(&self, s: &RingElement) -> CechClass {
        assert!(Arc::ptr_eq(&self.ring, s.ring()), "element of a different ring");
        let mut out = Self::zero(&self.ring);
        for (idx, c) in &self.coords {
            let num = FreePoly::monomial(idx.numerator_exps(&self.ring), c.clone());
            let prod = self.ring.element(num.mul(s.poly()));
            let part = normalize_class(&prod, &idx.den_powers()).expect("positive powers");
            out = out.add(&part);
        }
        out
    }

    /// Text form `c*[num / v^k ...] + ...`, parseable as a class literal.
    pub fn display(&self) -> String {
        if self.coords.is_empty() {
            return "0".to_string();
        }
        let params = self.ring.field().params();
        self.coords
            .iter()
            .map(|(idx, c)| {
                let body = idx.display(&self.ring);
                if c.is_one() {
                    body
                } else if c.is_polynomial() && c.num().num_terms() == 1 {
                    format!("{}*{}", c.display_with(params), body)
                } else {
                    format!("({})*{}", c.display_with(params), body)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Coordinates of `[r / prod u_i^{k_i}]`. Terms whose exponent in some
/// `u_i` reaches `k_i` lie in a partial localization and vanish.
pub fn normalize_class(numerator: &RingElement, den_powers: &[u32]) -> Result<CechClass> {
    let ring = numerator.ring();
    let unbound = ring.unbound();
    if den_powers.len() != unbound.len() {
        return Err(Error::NotTopCechFraction(format!(
            "expected {} denominator exponents, got {}",
            unbound.len(),
            den_powers.len()
        )));
    }
    if let Some(i) = den_powers.iter().position(|&k| k == 0) {
        return Err(Error::NotTopCechFraction(format!(
            "denominator exponent of {} must be positive",
            ring.variables()[unbound[i]].name
        )));
    }
    let mut out = CechClass::zero(ring);
    'terms: for (e, c) in numerator.terms() {
        let mut den = Vec::with_capacity(unbound.len());
        for (&u, &k) in unbound.iter().zip(den_powers) {
            if e[u] >= k {
                continue 'terms;
            }
            den.push(k - e[u] - 1);
        }
        let bound = ring.relations().iter().map(|r| e[r.bound()]).collect();
        out.add_coord(BasisClassIndex { bound, den }, c.clone());
    }
    Ok(out)
}

/// `F^e(basis class)`: `[nf(b^{a q}) / u^{q (alpha + 1)}]` with `q = p^e`.
pub fn index_frobenius(ring: &Ring, idx: &BasisClassIndex, e: u32) -> CechClass {
    let q = ring.p().pow(e);
    let exps: Vec<u32> = idx.numerator_exps(ring).iter().map(|x| x * q).collect();
    let num = ring.monomial(exps);
    let den: Vec<u32> = idx.den_powers().iter().map(|k| k * q).collect();
    normalize_class(&num, &den).expect("positive powers")
}

/// The Frobenius action `F^e`, semilinear in the coordinates.
pub fn class_frobenius(eta: &CechClass, e: u32) -> CechClass {
    let ring = eta.ring();
    let mut out = CechClass::zero(ring);
    for (idx, c) in eta.coords() {
        out = out.add(&index_frobenius(ring, idx, e).scale(&c.frobenius(e)));
    }
    out
}
