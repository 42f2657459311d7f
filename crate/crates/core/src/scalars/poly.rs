use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::field::{add_mod, inv_mod, mul_mod};

/// An exponent vector, ordered graded-lexicographically: total degree
/// first, then lexicographically with the first variable largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: vec![0; nvars] }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { degree: other.degree - self.degree, exps }
    }

    fn scaled(&self, q: u32) -> Monomial {
        Monomial { degree: self.degree * q, exps: self.exps.iter().map(|e| e * q).collect() }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over `F_p` in a fixed number of variables.
///
/// Used for numerators and denominators of parameter scalars and, with the
/// ring variables appended, for integral models of presentations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    p: u32,
    nvars: usize,
    terms: BTreeMap<Monomial, u32>,
}

impl ParamPoly {
    pub fn zero(p: u32, nvars: usize) -> Self {
        ParamPoly { p, nvars, terms: BTreeMap::new() }
    }

    pub fn one(p: u32, nvars: usize) -> Self {
        Self::constant(p, nvars, 1)
    }

    pub fn constant(p: u32, nvars: usize, c: u32) -> Self {
        let mut out = Self::zero(p, nvars);
        let c = c % p;
        if c != 0 {
            out.terms.insert(Monomial::one(nvars), c);
        }
        out
    }

    pub fn var(p: u32, nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(p, exps, 1)
    }

    pub fn monomial(p: u32, exps: Vec<u32>, c: u32) -> Self {
        let nvars = exps.len();
        let mut out = Self::zero(p, nvars);
        let c = c % p;
        if c != 0 {
            out.terms.insert(Monomial::new(exps), c);
        }
        out
    }

    pub fn from_terms(p: u32, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, u32)>) -> Self {
        let mut out = Self::zero(p, nvars);
        for (exps, c) in terms {
            debug_assert_eq!(exps.len(), nvars);
            out.add_term(Monomial::new(exps), c);
        }
        out
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, u32)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.constant_value() == 1
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().is_one(),
            _ => false,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> u32 {
        self.terms.get(&Monomial::one(self.nvars)).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial, u32)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn leading_coeff(&self) -> u32 {
        self.leading().map_or(0, |(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: u32) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = add_mod(*o.get(), c, self.p);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let (mut big, small) =
            if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, &c) in &small.terms {
            big.add_term(m.clone(), c);
        }
        big
    }

    pub fn neg(&self) -> ParamPoly {
        let p = self.p;
        ParamPoly { p, nvars: self.nvars, terms: self.terms.iter().map(|(m, &c)| (m.clone(), p - c)).collect() }
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), self.p - c);
        }
        out
    }

    pub fn scale(&self, c: u32) -> ParamPoly {
        let c = c % self.p;
        if c == 0 {
            return Self::zero(self.p, self.nvars);
        }
        ParamPoly {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), mul_mod(a, c, self.p))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> ParamPoly {
        let c = c % self.p;
        if c == 0 {
            return Self::zero(self.p, self.nvars);
        }
        // Multiplying by a monomial preserves the monomial order.
        ParamPoly {
            p: self.p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, &k)| (a.mul(m), mul_mod(k, c, self.p))).collect(),
        }
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p, self.nvars);
        }
        if other.is_monomial() {
            let (m, c) = other.leading().unwrap();
            return self.mul_monomial(m, c);
        }
        if self.is_monomial() {
            let (m, c) = self.leading().unwrap();
            return other.mul_monomial(m, c);
        }
        let mut out = Self::zero(self.p, self.nvars);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                out.add_term(a.mul(b), mul_mod(x, y, self.p));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> ParamPoly {
        let mut acc = Self::one(self.p, self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> ParamPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(inv_mod(c, self.p).unwrap()),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &ParamPoly) -> Option<ParamPoly> {
        assert!(!divisor.is_zero(), "exact division by zero polynomial");
        if divisor.is_constant() {
            return Some(self.scale(inv_mod(divisor.constant_value(), self.p).unwrap()));
        }
        let (lm, lc) = divisor.leading().map(|(m, c)| (m.clone(), c)).unwrap();
        let lc_inv = inv_mod(lc, self.p).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.p, self.nvars);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = mul_mod(c, lc_inv, self.p);
            rem = rem.sub(&divisor.mul_monomial(&qm, qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Highest variable index that occurs, if any.
    pub fn highest_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.exps.iter().rposition(|&e| e > 0)).max()
    }

    pub fn degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|m| m.exps[k]).max().unwrap_or(0)
    }

    /// Coefficient of `x_k^d`, as a polynomial with `x_k` absent.
    pub fn coeff_in(&self, k: usize, d: u32) -> ParamPoly {
        let mut out = Self::zero(self.p, self.nvars);
        for (m, &c) in &self.terms {
            if m.exps[k] == d {
                let mut exps = m.exps.clone();
                exps[k] = 0;
                out.terms.insert(Monomial::new(exps), c);
            }
        }
        out
    }

    /// Distinct exponents of `x_k` that occur.
    pub fn degrees_in(&self, k: usize) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|m| m.exps[k]).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn mul_var_pow(&self, k: usize, n: u32) -> ParamPoly {
        if n == 0 {
            return self.clone();
        }
        let mut exps = vec![0; self.nvars];
        exps[k] = n;
        self.mul_monomial(&Monomial::new(exps), 1)
    }

    /// Formal partial derivative with respect to `x_k`.
    pub fn derivative(&self, k: usize) -> ParamPoly {
        let mut out = Self::zero(self.p, self.nvars);
        for (m, &c) in &self.terms {
            let e = m.exps[k];
            if e == 0 {
                continue;
            }
            let c = mul_mod(c, e % self.p, self.p);
            if c == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[k] -= 1;
            out.add_term(Monomial::new(exps), c);
        }
        out
    }

    /// Substitutes `x_i -> x_i^q` for every variable.
    pub fn inflate(&self, q: u32) -> ParamPoly {
        ParamPoly { p: self.p, nvars: self.nvars, terms: self.terms.iter().map(|(m, &c)| (m.scaled(q), c)).collect() }
    }

    /// `self^(p^e)`. Coefficients are fixed by Frobenius on `F_p`.
    pub fn frobenius(&self, e: u32) -> ParamPoly {
        self.inflate(self.p.pow(e))
    }

    /// Reinterprets the polynomial in `nvars` variables, placing variable
    /// `i` at position `offset + i`.
    pub fn embed(&self, nvars: usize, offset: usize) -> ParamPoly {
        assert!(offset + self.nvars <= nvars);
        let mut out = Self::zero(self.p, nvars);
        for (m, &c) in &self.terms {
            let mut exps = vec![0; nvars];
            exps[offset..offset + self.nvars].copy_from_slice(&m.exps);
            out.terms.insert(Monomial::new(exps), c);
        }
        out
    }

    /// Writes `self = sum_eps (g_eps)^p * t^eps` with `eps` in `{0..p-1}^s`.
    pub fn pth_root_decompose(&self) -> BTreeMap<Vec<u32>, ParamPoly> {
        let p = self.p;
        let mut out: BTreeMap<Vec<u32>, ParamPoly> = BTreeMap::new();
        for (m, &c) in &self.terms {
            let eps: Vec<u32> = m.exps.iter().map(|e| e % p).collect();
            let root: Vec<u32> = m.exps.iter().map(|e| e / p).collect();
            // c^(1/p) = c in F_p.
            out.entry(eps).or_insert_with(|| Self::zero(p, self.nvars)).add_term(Monomial::new(root), c);
        }
        out.retain(|_, g| !g.is_zero());
        out
    }

    /// Renders with the given variable names, highest term first.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, &c) in self.terms.iter().rev() {
            let mono = format_monomial(m.exps(), names);
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        parts.join(" + ")
    }
}

pub(crate) fn format_monomial(exps: &[u32], names: &[String]) -> String {
    let mut factors = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(names[i].clone()),
            _ => factors.push(format!("{}^{}", names[i], e)),
        }
    }
    factors.join("*")
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("t{}", i + 1)).collect();
        write!(f, "ParamPoly[F_{}]({})", self.p, self.display_with(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: u32, n: usize, i: usize) -> ParamPoly {
        ParamPoly::var(p, n, i)
    }

    #[test]
    fn graded_lex_leading_term() {
        // t1 + t2^2: degree wins.
        let f = t(5, 2, 0).add(&t(5, 2, 1).pow(2));
        assert_eq!(f.leading().unwrap().0.exps(), &[0, 2]);
        // t1*t2 vs t2^2: same degree, t1 is larger.
        let g = t(5, 2, 0).mul(&t(5, 2, 1)).add(&t(5, 2, 1).pow(2));
        assert_eq!(g.leading().unwrap().0.exps(), &[1, 1]);
    }

    #[test]
    fn exact_division() {
        let a = t(3, 2, 0).add(&ParamPoly::one(3, 2));
        let b = t(3, 2, 1).sub(&t(3, 2, 0));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&b).is_none());
    }

    #[test]
    fn decompose_examples() {
        // p=2: t^3 + t = (t+1)^2 * t.
        let g = t(2, 1, 0).pow(3).add(&t(2, 1, 0));
        let d = g.pth_root_decompose();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&vec![1]], t(2, 1, 0).add(&ParamPoly::one(2, 1)));
        // constant 1.
        let d = ParamPoly::one(3, 2).pth_root_decompose();
        assert_eq!(d.len(), 1);
        assert!(d[&vec![0, 0]].is_one());
        // p=3: t^4 = t^3 * t.
        let d = t(3, 1, 0).pow(4).pth_root_decompose();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&vec![1]], t(3, 1, 0));
        // Zero decomposes to nothing.
        assert!(ParamPoly::zero(3, 1).pth_root_decompose().is_empty());
    }

    #[test]
    fn derivative_in_char_p() {
        // d/dt (t^2) = 2t = 0 in char 2.
        assert!(t(2, 1, 0).pow(2).derivative(0).is_zero());
        assert_eq!(t(3, 1, 0).pow(2).derivative(0), t(3, 1, 0).scale(2));
    }

    #[test]
    fn frobenius_is_freshmans_dream() {
        let f = t(2, 1, 0).add(&ParamPoly::one(2, 1));
        assert_eq!(f.frobenius(1), f.pow(2));
        let g = t(3, 2, 0).add(&t(3, 2, 1).scale(2));
        assert_eq!(g.frobenius(2), g.pow(9));
    }

    #[test]
    fn display() {
        let names = vec!["t1".to_string(), "t2".to_string()];
        let f = t(5, 2, 0).pow(2).mul(&t(5, 2, 1)).scale(3).add(&ParamPoly::constant(5, 2, 4));
        assert_eq!(f.display_with(&names), "3*t1^2*t2 + 4");
    }
}
