use std::fmt;

use super::field::inv_mod;
use super::gcd::gcd;
use super::poly::ParamPoly;
use crate::error::{Error, Result};

/// An element of `F_p(t_1, ..., t_s)` in canonical form: the denominator
/// is monic under graded-lex order and coprime to the numerator, and zero
/// is `0/1`. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalScalar {
    num: ParamPoly,
    den: ParamPoly,
}

/// Canonical form of `num / den`.
pub fn rf_normalize(num: &ParamPoly, den: &ParamPoly) -> Result<RationalScalar> {
    RationalScalar::new(num.clone(), den.clone())
}

impl RationalScalar {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: ParamPoly, den: ParamPoly) -> Self {
        let (p, n) = (num.p(), num.nvars());
        if num.is_zero() {
            return Self::zero(p, n);
        }
        if den.is_constant() {
            let inv = inv_mod(den.constant_value(), p).unwrap();
            return RationalScalar { num: num.scale(inv), den: ParamPoly::one(p, n) };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap()) };
        let inv = inv_mod(den.leading_coeff(), p).unwrap();
        RationalScalar { num: num.scale(inv), den: den.scale(inv) }
    }

    /// Builds from a pair the caller guarantees is already canonical.
    pub(crate) fn from_parts_unchecked(num: ParamPoly, den: ParamPoly) -> Self {
        debug_assert!(!den.is_zero());
        RationalScalar { num, den }
    }

    pub fn zero(p: u32, nparams: usize) -> Self {
        RationalScalar { num: ParamPoly::zero(p, nparams), den: ParamPoly::one(p, nparams) }
    }

    pub fn one(p: u32, nparams: usize) -> Self {
        RationalScalar { num: ParamPoly::one(p, nparams), den: ParamPoly::one(p, nparams) }
    }

    pub fn from_poly(num: ParamPoly) -> Self {
        let den = ParamPoly::one(num.p(), num.nvars());
        RationalScalar { num, den }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn p(&self) -> u32 {
        self.num.p()
    }

    pub fn nparams(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// A nonzero element of `F_p`.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        // Only factors of g = gcd(b, d) can cancel from a/b + c/d.
        let g = gcd(&self.den, &other.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        if num.is_zero() {
            return Self::zero(self.p(), self.nparams());
        }
        let den = self.den.mul(&d1);
        if g.is_one() {
            return RationalScalar { num, den };
        }
        let h = gcd(&num, &g);
        if h.is_one() {
            return RationalScalar { num, den };
        }
        RationalScalar { num: num.div_exact(&h).unwrap(), den: den.div_exact(&h).unwrap() }
    }

    pub fn neg(&self) -> Self {
        RationalScalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p(), self.nparams());
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        if other.is_constant() {
            return RationalScalar { num: self.num.scale(other.num.constant_value()), den: self.den.clone() };
        }
        if self.is_constant() {
            return other.mul(self);
        }
        // Cross-cancel so intermediate products stay small.
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let inv = inv_mod(den.leading_coeff(), self.p()).unwrap();
        RationalScalar { num: num.scale(inv), den: den.scale(inv) }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Multiplies by an element of `F_p` given as an integer residue.
    pub fn scale_int(&self, c: u32) -> Self {
        let c = c % self.p();
        if c == 0 {
            return Self::zero(self.p(), self.nparams());
        }
        RationalScalar { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u64) -> Self {
        if self.is_zero() {
            return if e == 0 { Self::one(self.p(), self.nparams()) } else { self.clone() };
        }
        // Powers of a coprime pair stay coprime; leading coefficients stay 1.
        RationalScalar { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// `c^(p^e)`.
    pub fn frobenius(&self, e: u32) -> Self {
        RationalScalar { num: self.num.frobenius(e), den: self.den.frobenius(e) }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let num = self.num.display_with(names);
        if self.den.is_one() {
            return num;
        }
        let num = if self.num.num_terms() > 1 { format!("({num})") } else { num };
        let den = self.den.display_with(names);
        // A denominator with more than one factor must be grouped.
        let single_factor = self.den.is_monomial()
            && self.den.leading_coeff() == 1
            && self.den.leading().unwrap().0.exps().iter().filter(|&&e| e > 0).count() == 1;
        if single_factor {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        }
    }
}

/// `c^(p^e)`.
pub fn frobenius_scalar(c: &RationalScalar, e: u32) -> RationalScalar {
    c.frobenius(e)
}

impl fmt::Debug for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nparams()).map(|i| format!("t{}", i + 1)).collect();
        write!(f, "{}", self.display_with(&names))
    }
}
