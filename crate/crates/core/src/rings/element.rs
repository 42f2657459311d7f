use std::fmt;
use std::sync::Arc;

use super::free::FreePoly;
use super::presentation::Ring;
use crate::scalars::RationalScalar;

/// An element of a [`RingPresentation`](super::RingPresentation) in
/// free-basis normal form.
#[derive(Clone)]
pub struct RingElement {
    ring: Ring,
    poly: FreePoly,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.poly == other.poly
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl RingElement {
    pub(crate) fn from_normal(ring: Ring, poly: FreePoly) -> Self {
        RingElement { ring, poly }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn poly(&self) -> &FreePoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &RationalScalar)> + '_ {
        self.poly.terms()
    }

    fn check(&self, other: &RingElement) {
        assert!(Arc::ptr_eq(&self.ring, &other.ring), "elements of different rings");
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        self.check(other);
        RingElement { ring: self.ring.clone(), poly: self.poly.add(&other.poly) }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.check(other);
        RingElement { ring: self.ring.clone(), poly: self.poly.sub(&other.poly) }
    }

    pub fn neg(&self) -> RingElement {
        RingElement { ring: self.ring.clone(), poly: self.poly.neg() }
    }

    pub fn scale(&self, c: &RationalScalar) -> RingElement {
        RingElement { ring: self.ring.clone(), poly: self.poly.scale(c) }
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        self.check(other);
        self.ring.element(self.poly.mul(&other.poly))
    }

    pub fn pow(&self, k: u64) -> RingElement {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Degree vector if every term has the same degree; `None` for zero or
    /// inhomogeneous elements.
    pub fn homogeneous_degree(&self) -> Option<Vec<i64>> {
        let mut degrees = self.poly.terms().map(|(e, _)| self.ring.degree_of(e));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn display(&self) -> String {
        self.poly.display_with(&self.ring.var_names(), self.ring.field().params())
    }
}
