#![allow(dead_code)]

use std::sync::LazyLock;

use fsing::cech::{class_frobenius, component_basis, normalize_class, BasisClassIndex, CechClass};
use fsing::families::{family_a, family_b};
use fsing::rings::{base_change, FreePoly, Ring, RingElement};
use fsing::scalars::{frobenius_scalar, pth_root_decompose, FieldDescriptor, Monomial, ParamPoly, RationalScalar};
use fsing::semilinear::{dense_rows, solve_semilinear};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn param_poly(p: u32, s: usize, terms: usize, deg: u32) -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((prop::collection::vec(0..=deg, s), 0..p), 0..=terms)
        .prop_map(move |ts| ParamPoly::from_terms(p, s, ts))
}

pub fn scalar(p: u32, s: usize) -> impl Strategy<Value = RationalScalar> {
    (param_poly(p, s, 3, 2), param_poly(p, s, 2, 2))
        .prop_filter_map("zero denominator", |(n, d)| RationalScalar::new(n, d).ok())
}

pub fn nonzero_scalar(p: u32, s: usize) -> impl Strategy<Value = RationalScalar> {
    scalar(p, s).prop_filter("zero", |c| !c.is_zero())
}

/// A random element of the component of `degree`, about half its
/// coordinates nonzero.
pub fn class_in(ring: Ring, degree: i64) -> impl Strategy<Value = CechClass> {
    let basis: Vec<BasisClassIndex> = component_basis(&ring, &[degree]).unwrap().basis().to_vec();
    let (p, s) = (ring.p(), ring.field().num_params());
    prop::collection::vec(prop::option::weighted(0.5, scalar(p, s)), basis.len()).prop_map(move |cs| {
        let coords = basis.iter().cloned().zip(cs).filter_map(|(b, c)| c.map(|c| (b, c)));
        CechClass::from_coords(&ring, coords)
    })
}

pub fn free_poly(ring: &Ring, terms: usize, deg: u32) -> impl Strategy<Value = FreePoly> {
    let (p, s, n) = (ring.p(), ring.field().num_params(), ring.num_vars());
    prop::collection::vec((prop::collection::vec(0..=deg, n), scalar(p, s)), 0..=terms).prop_map(move |ts| {
        let mut f = FreePoly::zero(p, s, n);
        for (e, c) in ts {
            f.add_term(e, c);
        }
        f
    })
}

pub fn element(ring: Ring, terms: usize, deg: u32) -> impl Strategy<Value = RingElement> {
    free_poly(&ring, terms, deg).prop_map(move |f| ring.element(f))
}

pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `dim_K S_j` for a hypersurface of degree `m` in `n` standard variables.
pub fn hypersurface_hilbert(n: i64, m: i64, j: i64) -> u128 {
    if j < 0 {
        return 0;
    }
    binomial(j + n - 1, n - 1) - binomial(j - m + n - 1, n - 1)
}

/// Rank over `F_p` by plain Gaussian elimination on dense rows.
pub fn dense_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else { continue };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// A dense matrix over `F_p` of at most 8 x 8.
pub fn small_matrix() -> impl Strategy<Value = (u32, Vec<Vec<u64>>)> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 1usize..=8, 1usize..=8).prop_flat_map(|(p, r, c)| {
        // Sparse-ish entries so that kernels are often nontrivial.
        let entry = prop_oneof![3 => Just(0u64), 2 => 1..p as u64];
        (Just(p), prop::collection::vec(prop::collection::vec(entry, c), r))
    })
}

/// (ring, degree) pairs with nonempty components.
pub static CASES: LazyLock<Vec<(Ring, i64)>> = LazyLock::new(|| {
    vec![
        (family_a(2).unwrap(), -2),
        (family_a(3).unwrap(), -3),
        (family_a(3).unwrap(), -2),
        (family_b(2).unwrap(), -2),
        (family_b(3).unwrap(), -1),
        (base_change(&family_a(2).unwrap()).unwrap().0, -2),
    ]
});

pub fn any_class() -> impl Strategy<Value = CechClass> {
    (0..CASES.len()).prop_flat_map(|i| class_in(CASES[i].0.clone(), CASES[i].1))
}

pub fn class_pair() -> impl Strategy<Value = (CechClass, CechClass)> {
    (0..CASES.len()).prop_flat_map(|i| {
        let (r, d) = CASES[i].clone();
        (class_in(r.clone(), d), class_in(r, d))
    })
}

pub fn class_and_scalar() -> impl Strategy<Value = (CechClass, RationalScalar)> {
    (0..CASES.len()).prop_flat_map(|i| {
        let (r, d) = CASES[i].clone();
        let (p, s) = (r.p(), r.field().num_params());
        (class_in(r, d), scalar(p, s))
    })
}

pub fn free_pair() -> impl Strategy<Value = (Ring, FreePoly, FreePoly)> {
    prop::sample::select(vec![0usize, 3, 5]).prop_flat_map(|i| {
        let r = CASES[i].0.clone();
        (Just(r.clone()), free_poly(&r, 4, 4), free_poly(&r, 4, 4))
    })
}

pub fn class_and_element() -> impl Strategy<Value = (CechClass, RingElement)> {
    (0..CASES.len()).prop_flat_map(|i| {
        let (r, d) = CASES[i].clone();
        (class_in(r.clone(), d), element(r, 3, 2))
    })
}

pub fn decompose_input() -> impl Strategy<Value = ParamPoly> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..=3).prop_flat_map(|(p, s)| param_poly(p, s, 6, 8))
}

pub fn law_semilinear(eta: &CechClass, c: &RationalScalar, e: u32) -> Result<(), TestCaseError> {
    let lhs = class_frobenius(&eta.scale(c), e);
    let rhs = class_frobenius(eta, e).scale(&frobenius_scalar(c, e));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn law_additive(a: &CechClass, b: &CechClass) -> Result<(), TestCaseError> {
    prop_assert_eq!(class_frobenius(&a.add(b), 1), class_frobenius(a, 1).add(&class_frobenius(b, 1)));
    Ok(())
}

pub fn law_degree(eta: &CechClass, e: u32) -> Result<(), TestCaseError> {
    let image = class_frobenius(eta, e);
    let q = eta.ring().p().pow(e) as i64;
    match (eta.degree(), image.degree()) {
        (Some(d), Some(di)) => prop_assert_eq!(di, vec![q * d[0]]),
        (None, img) => prop_assert!(img.is_none()),
        (Some(_), None) => prop_assert!(image.is_zero()),
    }
    Ok(())
}

/// Re-normalizing every term of a normalized class gives it back.
pub fn law_normalize_idempotent(eta: &CechClass) -> Result<(), TestCaseError> {
    let ring = eta.ring();
    let mut again = CechClass::zero(ring);
    for (idx, c) in eta.coords() {
        let num = ring.monomial(idx.numerator_exps(ring));
        again = again.add(&normalize_class(&num, &idx.den_powers()).unwrap().scale(c));
    }
    prop_assert_eq!(&again, eta);
    Ok(())
}

pub fn law_normalize_linear(ring: &Ring, f: &FreePoly, g: &FreePoly, extra: &[u32]) -> Result<(), TestCaseError> {
    let (f, g) = (ring.element(f.clone()), ring.element(g.clone()));
    let den: Vec<u32> = (0..ring.unbound().len()).map(|k| 1 + extra[k]).collect();
    let lhs = normalize_class(&f.add(&g), &den).unwrap();
    let rhs = normalize_class(&f, &den).unwrap().add(&normalize_class(&g, &den).unwrap());
    prop_assert_eq!(lhs, rhs);
    // [f / u^k] = [f u_i / u^(k + e_i)]
    for (slot, &v) in ring.unbound().iter().enumerate() {
        let mut bigger = den.clone();
        bigger[slot] += 1;
        let fv = f.mul(&ring.var(v));
        prop_assert_eq!(normalize_class(&fv, &bigger).unwrap(), normalize_class(&f, &den).unwrap());
    }
    Ok(())
}

pub fn law_decompose_round_trip(g: &ParamPoly) -> Result<(), TestCaseError> {
    let (p, s) = (g.p(), g.nvars());
    let parts = pth_root_decompose(g);
    let mut back = ParamPoly::zero(p, s);
    for (eps, part) in &parts {
        prop_assert!(eps.iter().all(|&e| e < p));
        prop_assert!(!part.is_zero());
        back = back.add(&part.frobenius(1).mul_monomial(&Monomial::new(eps.clone()), 1));
    }
    prop_assert_eq!(&back, g);
    Ok(())
}

/// Kernel over `F_p` against [`dense_rank`], with every vector checked.
pub fn law_dense_oracle(p: u32, m: &[Vec<u64>]) -> Result<(), TestCaseError> {
    let field = FieldDescriptor::new(p, vec![], 0).unwrap();
    let ncols = m[0].len();
    let rows: Vec<Vec<RationalScalar>> =
        m.iter().map(|r| r.iter().map(|&x| field.from_int(x as i64)).collect()).collect();
    let sol = solve_semilinear(&field, ncols, &dense_rows(&rows));
    let oracle_rank = dense_rank(m.to_vec(), p as u64);
    prop_assert_eq!(sol.kernel.len(), ncols - oracle_rank);
    let kernel: Vec<Vec<u64>> =
        sol.kernel.iter().map(|v| v.iter().map(|x| x.num().constant_value() as u64).collect()).collect();
    for v in &kernel {
        for row in m {
            let dot = row.iter().zip(v).map(|(a, b)| a * b % p as u64).sum::<u64>() % p as u64;
            prop_assert_eq!(dot, 0);
        }
    }
    prop_assert_eq!(dense_rank(kernel, p as u64), sol.kernel.len());
    Ok(())
}
