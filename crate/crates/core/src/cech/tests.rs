use super::*;
use crate::families::{family_a, family_b};
use crate::rings::{base_change, Ring};
use crate::scalars::RationalScalar;

fn idx(bound: &[u32], den: &[u32]) -> BasisClassIndex {
    BasisClassIndex { bound: bound.to_vec(), den: den.to_vec() }
}

fn class(ring: &Ring, num: &[u32], den: &[u32]) -> CechClass {
    normalize_class(&ring.monomial(num.to_vec()), den).unwrap()
}

#[test]
fn normalize_examples() {
    let a = family_a(2).unwrap();
    assert_eq!(class(&a, &[0, 1, 0], &[2, 1]), CechClass::basis(&a, idx(&[0], &[0, 0])));
    assert!(class(&a, &[0, 2, 0], &[2, 1]).is_zero());
    let got = class(&a, &[2, 0, 0], &[4, 2]);
    let t1 = a.field().param(0);
    assert_eq!(got, CechClass::basis(&a, idx(&[0], &[1, 1])).scale(&t1));
    assert!(normalize_class(&a.one(), &[1, 0]).is_err());
    assert!(normalize_class(&a.one(), &[1]).is_err());
}

#[test]
fn family_a_component_bases() {
    let a = family_a(2).unwrap();
    let c = component_basis(&a, &[-1]).unwrap();
    assert_eq!(c.basis(), [idx(&[1], &[0, 0])]);
    let c = component_basis(&a, &[-2]).unwrap();
    // eta_(0,0) = [1/(x1 x2)], eta_(1,0) = [x0/(x1^2 x2)], eta_(0,1)
    assert_eq!(c.basis(), [idx(&[0], &[0, 0]), idx(&[1], &[0, 1]), idx(&[1], &[1, 0])]);
    for p in [2u32, 3, 5] {
        let a = family_a(p).unwrap();
        assert_eq!(component_basis(&a, &[-(p as i64)]).unwrap().dim() as u64, binomial(2 * p - 1, p));
    }
}

#[test]
fn family_b_component_bases() {
    for p in [2u32, 3, 5] {
        let b = family_b(p).unwrap();
        let c = component_basis(&b, &[-(p as i64)]).unwrap();
        assert_eq!(c.dim() as u64, binomial(2 * p, p + 1));
        for i in c.basis() {
            let a = i.bound[0];
            assert_eq!(a, 1 + i.den.iter().sum::<u32>());
        }
        assert_eq!(component_basis(&b, &[-1]).unwrap().dim(), 1);
        assert!(component_basis(&b, &[0]).unwrap().is_empty());
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

#[test]
fn frobenius_examples() {
    let a = family_a(2).unwrap();
    let mu = CechClass::basis(&a, idx(&[0], &[1, 1]));
    assert_eq!(class_frobenius(&CechClass::basis(&a, idx(&[0], &[0, 0])), 1), mu);
    let eta10 = CechClass::basis(&a, idx(&[1], &[1, 0]));
    assert_eq!(class_frobenius(&eta10, 1), mu.scale(&a.field().param(0)));

    let (bb, emb) = base_change(&family_b(2).unwrap()).unwrap();
    let u = emb.root_of(0);
    let k = class(&bb, &[2, 0, 0, 0], &[2, 1, 1]).sub(&class(&bb, &[2, 0, 0, 0], &[1, 2, 1]).scale(&u));
    assert!(!k.is_zero());
    assert!(class_frobenius(&k, 1).is_zero());
}

#[test]
fn veronese_views() {
    let a = family_a(2).unwrap();
    let c = veronese_component_basis(&a, 2, -1).unwrap();
    assert_eq!(c.dim(), 3);
    assert_eq!(c.veronese(), Some(VeroneseTag { n: 2, k: -1 }));
    assert!(veronese_component_basis(&a, 2, 0).unwrap().is_empty());
    let c1 = veronese_component_basis(&a, 1, -3).unwrap();
    assert_eq!(c1.basis(), component_basis(&a, &[-3]).unwrap().basis());
}

#[test]
fn multigraded_split_examples() {
    let b = family_b(2).unwrap();
    let c = component_basis(&b, &[-2]).unwrap();
    let split = multigraded_split(&b, &c).unwrap();
    let part_of = |i: &BasisClassIndex| split.parts.iter().position(|p| p.basis.contains(i)).unwrap();
    // eta_{a,b,g} = [w^{1+a+b+g} / x^{a+1} y^{b+1} z^{g+1}]
    let eta = |a: u32, bb: u32, g: u32| idx(&[1 + a + bb + g], &[a, bb, g]);
    assert_ne!(part_of(&eta(0, 0, 0)), part_of(&eta(0, 0, 1)));
    assert_eq!(part_of(&eta(1, 0, 0)), part_of(&eta(0, 1, 0)));
    let total: usize = split.parts.iter().map(|p| p.basis.len()).sum();
    assert_eq!(total, c.dim());
    assert!(multigraded_split(&family_a(2).unwrap(), &c).is_err());
}

#[test]
fn frobenius_maps_parts_to_parts() {
    for p in [2, 3] {
        let b = family_b(p).unwrap();
        let c = component_basis(&b, &[-(p as i64)]).unwrap();
        let split = multigraded_split(&b, &c).unwrap();
        let mut images = Vec::new();
        for part in &split.parts {
            let mut residues = std::collections::BTreeSet::new();
            for i in &part.basis {
                for j in index_frobenius(&b, i, 1).coords().keys() {
                    residues.insert(split.grading.residue(&b, j));
                }
            }
            assert!(residues.len() <= 1);
            images.extend(residues);
        }
        let n = images.len();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), n);
    }
}

#[test]
fn multinomial_formula_family_a() {
    // F(eta_alpha) = multinomial(|alpha|; alpha) t^alpha mu
    for p in [2u32, 3, 5] {
        let a = family_a(p).unwrap();
        let n = p as usize;
        let mu = CechClass::basis(&a, idx(&[0], &vec![p - 1; n]));
        let comp = component_basis(&a, &[-(p as i64)]).unwrap();
        for i in comp.basis() {
            let alpha = &i.den;
            let mut coeff = a.field().from_int(multinomial_mod(alpha, p) as i64);
            for (k, &e) in alpha.iter().enumerate() {
                coeff = coeff.mul(&a.field().param(k).pow(e as u64));
            }
            let got = class_frobenius(&CechClass::basis(&a, i.clone()), 1);
            assert_eq!(got, mu.scale(&coeff), "p={p} alpha={alpha:?}");
        }
    }
}

fn multinomial_mod(alpha: &[u32], p: u32) -> u64 {
    let fact = |n: u32| (1..=n as u64).product::<u64>();
    let total: u32 = alpha.iter().sum();
    let m = fact(total) / alpha.iter().map(|&a| fact(a)).product::<u64>();
    m % p as u64
}

#[test]
fn mul_element_shifts_denominators() {
    let a = family_a(3).unwrap();
    let eta = class(&a, &[1, 0, 0, 0], &[2, 1, 1]);
    let x1 = a.var(1);
    assert_eq!(eta.mul_element(&x1), class(&a, &[1, 0, 0, 0], &[1, 1, 1]));
    let c = RationalScalar::one(3, 3);
    assert_eq!(eta.scale(&c), eta);
}

#[test]
fn display_roundtrip_shape() {
    let a = family_a(2).unwrap();
    let t1 = a.field().param(0);
    let eta = CechClass::basis(&a, idx(&[1], &[1, 0])).scale(&t1);
    assert_eq!(eta.display(), "t1*[x0 / x1^2 x2]");
    let sum = eta.add(&CechClass::basis(&a, idx(&[0], &[0, 0])));
    assert_eq!(sum.display(), "[1 / x1 x2] + t1*[x0 / x1^2 x2]");
}
