//! Exact sparse linear algebra: fraction-free elimination over `F_p[t]`
//! with solutions in `K`, and an incremental echelon form over `F_p`.

use std::collections::BTreeMap;

use crate::scalars::{gcd, inv_mod, lcm, mul_mod, ParamPoly, RationalScalar};

/// A sparse row with polynomial entries, keyed by column.
pub type PolyRow = BTreeMap<usize, ParamPoly>;

/// Row echelon form over `F_p[t]`. Each stored row is primitive with its
/// pivot entry monic; pivot rows are listed by increasing pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, PolyRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the current pivots; returns the remainder.
    fn reduce(&self, mut row: PolyRow) -> PolyRow {
        let mut cursor = 0;
        loop {
            let Some((&c, _)) = row.range(cursor..).next() else {
                return row;
            };
            cursor = c + 1;
            let Some(piv) = self.pivots.get(&c) else {
                continue;
            };
            let a = &piv[&c];
            let b = row[&c].clone();
            let g = gcd(a, &b);
            let fa = a.div_exact(&g).unwrap();
            let fb = b.div_exact(&g).unwrap();
            let mut next = PolyRow::new();
            for (&k, v) in &row {
                let s = v.mul(&fa);
                if !s.is_zero() {
                    next.insert(k, s);
                }
            }
            for (&k, v) in piv {
                let s = v.mul(&fb);
                let slot = next.entry(k).or_insert_with(|| ParamPoly::zero(s.p(), s.nvars()));
                *slot = slot.sub(&s);
                if slot.is_zero() {
                    next.remove(&k);
                }
            }
            row = make_primitive(next);
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: PolyRow) -> bool {
        let row = self.reduce(make_primitive(row));
        match row.keys().next().copied() {
            None => false,
            Some(c) => {
                self.pivots.insert(c, normalize_lead(row));
                true
            }
        }
    }

    pub fn contains(&self, row: PolyRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column, normalized so
    /// the free coordinate is 1.
    pub fn kernel(&self, p: u32, nparams: usize) -> Vec<Vec<RationalScalar>> {
        let zero = RationalScalar::zero(p, nparams);
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivots.contains_key(&f) {
                continue;
            }
            let mut x = vec![zero.clone(); self.ncols];
            x[f] = RationalScalar::one(p, nparams);
            for (&c, row) in self.pivots.iter().rev() {
                let mut acc = zero.clone();
                for (&k, v) in row.range(c + 1..) {
                    if !x[k].is_zero() {
                        acc = acc.add(&x[k].mul(&RationalScalar::from_poly(v.clone())));
                    }
                }
                if !acc.is_zero() {
                    let lead = RationalScalar::from_poly(row[&c].clone());
                    x[c] = acc.neg().div(&lead).unwrap();
                }
            }
            out.push(x);
        }
        out
    }
}

/// Divides by the gcd of the entries.
fn make_primitive(row: PolyRow) -> PolyRow {
    let mut it = row.values();
    let Some(first) = it.next() else {
        return row;
    };
    let mut g = first.monic();
    for v in it {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, v);
    }
    if g.is_constant() {
        return row;
    }
    row.into_iter().map(|(k, v)| (k, v.div_exact(&g).unwrap())).collect()
}

/// Scales so the pivot entry has leading coefficient 1.
fn normalize_lead(row: PolyRow) -> PolyRow {
    let lead = row.values().next().unwrap().leading_coeff();
    if lead == 1 {
        return row;
    }
    let p = row.values().next().unwrap().p();
    let inv = inv_mod(lead, p).unwrap();
    row.into_iter().map(|(k, v)| (k, v.scale(inv))).collect()
}

/// Clears denominators of a row of scalars.
pub fn clear_row(row: &BTreeMap<usize, RationalScalar>) -> PolyRow {
    let Some((_, first)) = row.iter().next() else {
        return PolyRow::new();
    };
    let mut l = ParamPoly::one(first.p(), first.nparams());
    for c in row.values() {
        if !c.is_zero() {
            l = lcm(&l, c.den());
        }
    }
    row.iter().filter(|(_, c)| !c.is_zero()).map(|(&k, c)| (k, c.num().mul(&l.div_exact(c.den()).unwrap()))).collect()
}

pub fn dense_to_sparse(row: &[RationalScalar]) -> BTreeMap<usize, RationalScalar> {
    row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

pub fn echelon_of(rows: &[Vec<RationalScalar>], ncols: usize) -> Echelon {
    let mut e = Echelon::new(ncols);
    for row in rows {
        e.insert(clear_row(&dense_to_sparse(row)));
    }
    e
}

/// Rank over `K`.
pub fn rank(rows: &[Vec<RationalScalar>], ncols: usize) -> usize {
    echelon_of(rows, ncols).rank()
}

/// Basis of the right kernel of a matrix over `K` given by rows.
pub fn scalar_kernel(rows: &[Vec<RationalScalar>], ncols: usize, p: u32, nparams: usize) -> Vec<Vec<RationalScalar>> {
    echelon_of(rows, ncols).kernel(p, nparams)
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Vec<RationalScalar>], b: &[Vec<RationalScalar>], ncols: usize) -> bool {
    let ea = echelon_of(a, ncols);
    let eb = echelon_of(b, ncols);
    if ea.rank() != eb.rank() {
        return false;
    }
    b.iter().all(|v| ea.contains(clear_row(&dense_to_sparse(v))))
}

/// Incremental reduced-leading echelon form over `F_p` for sparse rows.
#[derive(Clone, Debug)]
pub struct FpEchelon {
    p: u32,
    pivots: BTreeMap<usize, BTreeMap<usize, u32>>,
}

impl FpEchelon {
    pub fn new(p: u32) -> Self {
        FpEchelon { p, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: BTreeMap<usize, u32>) -> BTreeMap<usize, u32> {
        let p = self.p;
        let mut cursor = 0;
        loop {
            let Some((&c, &v)) = row.range(cursor..).next() else {
                return row;
            };
            cursor = c + 1;
            let Some(piv) = self.pivots.get(&c) else {
                continue;
            };
            for (&k, &w) in piv {
                let sub = mul_mod(v, w, p);
                let e = row.entry(k).or_insert(0);
                *e = (*e + p - sub) % p;
                if *e == 0 {
                    row.remove(&k);
                }
            }
        }
    }

    pub fn insert(&mut self, row: BTreeMap<usize, u32>) -> bool {
        let row = self.reduce(row);
        let Some((&c, &lead)) = row.iter().next() else {
            return false;
        };
        let inv = inv_mod(lead, self.p).unwrap();
        let row = row.into_iter().map(|(k, v)| (k, mul_mod(v, inv, self.p))).collect();
        self.pivots.insert(c, row);
        true
    }

    pub fn contains(&self, row: BTreeMap<usize, u32>) -> bool {
        self.reduce(row).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: u32, n: i64) -> RationalScalar {
        RationalScalar::from_poly(ParamPoly::constant(p, 1, n.rem_euclid(p as i64) as u32))
    }

    #[test]
    fn kernel_over_rational_functions() {
        let p = 5;
        let t = RationalScalar::from_poly(ParamPoly::var(p, 1, 0));
        let one = s(p, 1);
        // rows [t, 1, 0], [0, t, 1]: kernel spanned by (1, -t, t^2)
        let rows = vec![vec![t.clone(), one.clone(), s(p, 0)], vec![s(p, 0), t.clone(), one.clone()]];
        let k = scalar_kernel(&rows, 3, p, 1);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        for row in &rows {
            let dot = row.iter().zip(v).fold(s(p, 0), |acc, (a, b)| acc.add(&a.mul(b)));
            assert!(dot.is_zero());
        }
        assert_eq!(rank(&rows, 3), 2);
    }

    #[test]
    fn span_comparison() {
        let p = 3;
        let a = vec![vec![s(p, 1), s(p, 2)], vec![s(p, 0), s(p, 1)]];
        let b = vec![vec![s(p, 1), s(p, 0)], vec![s(p, 1), s(p, 1)]];
        assert!(same_span(&a, &b, 2));
        assert!(!same_span(&a[..1], &b[..1], 2));
    }

    #[test]
    fn fp_echelon_membership() {
        let mut e = FpEchelon::new(7);
        assert!(e.insert(BTreeMap::from([(0, 1), (2, 3)])));
        assert!(e.insert(BTreeMap::from([(1, 2), (2, 1)])));
        assert!(!e.insert(BTreeMap::from([(0, 2), (1, 4), (2, 1)])));
        assert!(e.contains(BTreeMap::from([(0, 3), (2, 2)])));
        assert!(!e.contains(BTreeMap::from([(2, 1)])));
        assert_eq!(e.rank(), 2);
    }
}
