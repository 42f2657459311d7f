use std::collections::HashSet;

use super::{ParamPoly, RationalScalar};
use crate::error::{Error, Result};

/// Arithmetic modulo a fixed prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        add_mod(a, b, self.p)
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        mul_mod(a, b, self.p)
    }

    pub fn inv(self, a: u32) -> Option<u32> {
        inv_mod(a, self.p)
    }

    /// Reduces an arbitrary integer into `0..p`.
    pub fn reduce(self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u32, p: u32) -> Option<u32> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, (p - 2) as u64, p))
    }
}

/// The coefficient field `F_p(t_1, ..., t_s)`, or its `p`-th root field
/// `F_p(u_1, ..., u_s)` with `t_i = u_i^p` when `root_depth == 1`.
///
/// `params` are the names of the transcendental generators of the field
/// actually represented, so for `root_depth == 1` they name the `u_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    prime: PrimeField,
    params: Vec<String>,
    root_depth: u8,
}

impl FieldDescriptor {
    pub fn new(p: u32, params: Vec<String>, root_depth: u8) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        if root_depth > 1 {
            return Err(Error::RootDepth(root_depth));
        }
        let mut seen = HashSet::new();
        for name in &params {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(FieldDescriptor { prime, params, root_depth })
    }

    pub fn p(&self) -> u32 {
        self.prime.p()
    }

    pub fn prime_field(&self) -> PrimeField {
        self.prime
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn num_params(&self) -> usize {
        self.params.len()
    }

    pub fn root_depth(&self) -> u8 {
        self.root_depth
    }

    pub fn zero(&self) -> RationalScalar {
        RationalScalar::zero(self.p(), self.num_params())
    }

    pub fn one(&self) -> RationalScalar {
        RationalScalar::one(self.p(), self.num_params())
    }

    pub fn from_int(&self, n: i64) -> RationalScalar {
        RationalScalar::from_poly(ParamPoly::constant(self.p(), self.num_params(), self.prime.reduce(n)))
    }

    /// The `i`-th generator as a scalar.
    pub fn param(&self, i: usize) -> RationalScalar {
        RationalScalar::from_poly(ParamPoly::var(self.p(), self.num_params(), i))
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|n| n == name)
    }

    pub fn poly_zero(&self) -> ParamPoly {
        ParamPoly::zero(self.p(), self.num_params())
    }

    /// Passes from `K` to `K^{1/p}`, renaming each generator `t_i` to a
    /// fresh root name `u_i` and returning the embedding `t_i -> u_i^p`.
    pub fn adjoin_pth_roots(&self) -> Result<(FieldDescriptor, RootEmbedding)> {
        self.adjoin_pth_roots_avoiding(&[])
    }

    /// Like [`adjoin_pth_roots`](Self::adjoin_pth_roots), but never picks a
    /// root name listed in `reserved` (e.g. ring variable names).
    pub fn adjoin_pth_roots_avoiding(&self, reserved: &[String]) -> Result<(FieldDescriptor, RootEmbedding)> {
        if self.root_depth != 0 {
            return Err(Error::AlreadyExtended);
        }
        let mut taken: HashSet<String> = self.params.iter().cloned().collect();
        taken.extend(reserved.iter().cloned());
        let mut names = Vec::with_capacity(self.params.len());
        for name in &self.params {
            let base = match name.strip_prefix('t') {
                Some(rest) => format!("u{rest}"),
                None => format!("{name}_r"),
            };
            let mut candidate = base.clone();
            let mut k = 1;
            while taken.contains(&candidate) {
                candidate = format!("{base}_{k}");
                k += 1;
            }
            taken.insert(candidate.clone());
            names.push(candidate);
        }
        let target = FieldDescriptor { prime: self.prime, params: names, root_depth: 1 };
        let embedding = RootEmbedding { source: self.clone(), target: target.clone() };
        Ok((target, embedding))
    }
}

/// The field homomorphism `K -> K^{1/p}`, `t_i -> u_i^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEmbedding {
    source: FieldDescriptor,
    target: FieldDescriptor,
}

impl RootEmbedding {
    pub fn source(&self) -> &FieldDescriptor {
        &self.source
    }

    pub fn target(&self) -> &FieldDescriptor {
        &self.target
    }

    pub fn apply(&self, c: &RationalScalar) -> RationalScalar {
        let p = self.source.p();
        // A coprime pair stays coprime under t -> u^p, and the monic
        // leading term stays leading, so no renormalization is needed.
        RationalScalar::from_parts_unchecked(c.num().inflate(p), c.den().inflate(p))
    }

    /// The element `t_i^{1/p}`, i.e. `u_i`.
    pub fn root_of(&self, i: usize) -> RationalScalar {
        self.target.param(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(5).is_ok());
        assert!(matches!(PrimeField::new(4), Err(Error::NotPrime(4))));
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn inverses_mod_p() {
        for p in [2u32, 3, 5, 7, 13] {
            for a in 1..p {
                assert_eq!(mul_mod(a, inv_mod(a, p).unwrap(), p), 1);
            }
            assert_eq!(inv_mod(0, p), None);
        }
    }

    #[test]
    fn embedding_examples() {
        let k = FieldDescriptor::new(2, vec!["t1".into(), "t2".into()], 0).unwrap();
        let (k1, emb) = k.adjoin_pth_roots().unwrap();
        assert_eq!(k1.params(), &["u1".to_string(), "u2".to_string()]);
        assert_eq!(k1.root_depth(), 1);
        // t1 -> u1^2
        let u1 = k1.param(0);
        assert_eq!(emb.apply(&k.param(0)), u1.mul(&u1));
        // t1 + t2 -> u1^2 + u2^2
        let u2 = k1.param(1);
        assert_eq!(emb.apply(&k.param(0).add(&k.param(1))), u1.mul(&u1).add(&u2.mul(&u2)));
        assert!(matches!(k1.adjoin_pth_roots(), Err(Error::AlreadyExtended)));

        let k = FieldDescriptor::new(3, vec!["t".into()], 0).unwrap();
        let (k1, emb) = k.adjoin_pth_roots().unwrap();
        let inv_t = k.param(0).inv().unwrap();
        let u = k1.param(0);
        assert_eq!(emb.apply(&inv_t), u.pow(3).inv().unwrap());
        assert_eq!(emb.root_of(0), u);
    }

    #[test]
    fn root_names_avoid_collisions() {
        let k = FieldDescriptor::new(2, vec!["t".into(), "u".into()], 0).unwrap();
        let (k1, _) = k.adjoin_pth_roots_avoiding(&["u_r".into()]).unwrap();
        assert_eq!(k1.params(), &["u_1".to_string(), "u_r_1".to_string()]);
    }

    #[test]
    fn rejects_deep_towers() {
        assert!(matches!(FieldDescriptor::new(2, vec![], 2), Err(Error::RootDepth(2))));
    }
}
