use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::scalars::{format_monomial, RationalScalar};

/// A polynomial over `K` in the ring variables, not reduced modulo any
/// relation. Keys are full exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePoly {
    nvars: usize,
    p: u32,
    nparams: usize,
    terms: BTreeMap<Vec<u32>, RationalScalar>,
}

impl FreePoly {
    pub fn zero(p: u32, nparams: usize, nvars: usize) -> Self {
        FreePoly { nvars, p, nparams, terms: BTreeMap::new() }
    }

    pub fn constant(c: RationalScalar, nvars: usize) -> Self {
        let mut out = Self::zero(c.p(), c.nparams(), nvars);
        out.add_term(vec![0; nvars], c);
        out
    }

    pub fn monomial(exps: Vec<u32>, c: RationalScalar) -> Self {
        let mut out = Self::zero(c.p(), c.nparams(), exps.len());
        out.add_term(exps, c);
        out
    }

    pub fn var(i: usize, nvars: usize, p: u32, nparams: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(exps, RationalScalar::one(p, nparams))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &RationalScalar)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Vec<u32>, RationalScalar> {
        self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&RationalScalar> {
        self.terms.get(exps)
    }

    /// Constant term if the polynomial has no variable part.
    pub fn as_scalar(&self) -> Option<RationalScalar> {
        match self.terms.len() {
            0 => Some(RationalScalar::zero(self.p, self.nparams)),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: RationalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreePoly) -> FreePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FreePoly {
        FreePoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(), ..self.clone_empty() }
    }

    pub fn scale(&self, s: &RationalScalar) -> FreePoly {
        if s.is_zero() {
            return self.clone_empty();
        }
        FreePoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul(s))).collect(), ..self.clone_empty() }
    }

    pub fn mul_term(&self, exps: &[u32], s: &RationalScalar) -> FreePoly {
        if s.is_zero() {
            return self.clone_empty();
        }
        FreePoly {
            terms: self.terms.iter().map(|(e, c)| (add_exps(e, exps), c.mul(s))).collect(),
            ..self.clone_empty()
        }
    }

    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut out = self.clone_empty();
        for (e, c) in &small.terms {
            for (f, d) in &big.terms {
                out.add_term(add_exps(e, f), c.mul(d));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> FreePoly {
        let mut acc = Self::constant(RationalScalar::one(self.p, self.nparams), self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&RationalScalar) -> RationalScalar, nparams: usize) -> FreePoly {
        let mut out = FreePoly::zero(self.p, nparams, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Reinterprets in `nvars` variables, placing variable `i` at `offset + i`.
    pub fn embed(&self, nvars: usize, offset: usize) -> FreePoly {
        let mut out = FreePoly::zero(self.p, self.nparams, nvars);
        for (e, c) in &self.terms {
            let mut exps = vec![0; nvars];
            exps[offset..offset + self.nvars].copy_from_slice(e);
            out.terms.insert(exps, c.clone());
        }
        out
    }

    fn clone_empty(&self) -> FreePoly {
        FreePoly::zero(self.p, self.nparams, self.nvars)
    }

    /// Renders the polynomial, largest exponent vector first.
    pub fn display_with(&self, var_names: &[String], param_names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.iter().rev() {
            let mono = format_monomial(e, var_names);
            let coeff = c.display_with(param_names);
            let coeff_needs_group = !c.is_polynomial() || c.num().num_terms() > 1;
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => {
                    if coeff_needs_group && !c.is_polynomial() {
                        format!("({coeff})")
                    } else {
                        coeff
                    }
                }
                (false, true) => mono,
                (false, false) if coeff_needs_group => format!("({coeff})*{mono}"),
                (false, false) => format!("{coeff}*{mono}"),
            });
        }
        parts.join(" + ")
    }
}

fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}
