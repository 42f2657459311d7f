//! Multivariate gcd over `F_p` by recursive content / primitive-part
//! decomposition and primitive pseudo-remainder sequences.

use super::poly::ParamPoly;

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    gcd_rec(a, b).monic()
}

/// Monic least common multiple of two nonzero polynomials.
pub fn lcm(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_constant() {
        return b.monic();
    }
    if b.is_constant() {
        return a.monic();
    }
    let g = gcd(a, b);
    a.div_exact(&g).expect("gcd divides").mul(b).monic()
}

fn gcd_rec(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (p, n) = (a.p(), a.nvars());
    if a.is_constant() || b.is_constant() {
        return ParamPoly::one(p, n);
    }
    if a == b {
        return a.clone();
    }
    if a.is_monomial() {
        return monomial_gcd(a, b);
    }
    if b.is_monomial() {
        return monomial_gcd(b, a);
    }
    let (ma, mb) = (monomial_content(a), monomial_content(b));
    if !ma.is_one() || !mb.is_one() {
        let m = monomial_gcd(&ma, &mb);
        let rest = gcd_rec(&a.div_exact(&ma).unwrap(), &b.div_exact(&mb).unwrap());
        return m.mul(&rest);
    }
    // A variable in only one operand can be eliminated through contents.
    for k in 0..n {
        match (a.degree_in(k) > 0, b.degree_in(k) > 0) {
            (true, false) => return gcd_rec(&content(a, k), b),
            (false, true) => return gcd_rec(a, &content(b, k)),
            _ => {}
        }
    }
    let k = (0..n)
        .filter(|&k| a.degree_in(k) > 0)
        .min_by_key(|&k| {
            let (da, db) = (a.degree_in(k), b.degree_in(k));
            (da.min(db), da.max(db))
        })
        .expect("nonconstant");
    let ca = content(a, k);
    let cb = content(b, k);
    let c = gcd_rec(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree_in(k) < g.degree_in(k) {
        std::mem::swap(&mut f, &mut g);
    }
    match subresultant_prs(f, g, k) {
        Some(last) => c.mul(&primitive_part(&last, k)),
        None => c,
    }
}

/// Last nonzero member of the subresultant remainder sequence of `f` and
/// `g` in `x_k`, or `None` when it has degree zero (coprime inputs).
fn subresultant_prs(mut f: ParamPoly, mut g: ParamPoly, k: usize) -> Option<ParamPoly> {
    let (p, n) = (f.p(), f.nvars());
    let minus_one = ParamPoly::constant(p, n, p - 1);
    let mut psi = minus_one.clone();
    let mut prev_d: Option<u32> = None;
    loop {
        let d = f.degree_in(k) - g.degree_in(k);
        let r = pseudo_remainder(&f, &g, k);
        if r.is_zero() {
            return Some(g);
        }
        if r.degree_in(k) == 0 {
            return None;
        }
        let lc_f = f.coeff_in(k, f.degree_in(k));
        let beta = match prev_d {
            None => {
                if (d + 1).is_multiple_of(2) {
                    ParamPoly::one(p, n)
                } else {
                    minus_one.clone()
                }
            }
            Some(dp) => {
                // psi_i = (-lc(f))^dp / psi^(dp - 1)
                psi = if dp == 0 {
                    psi
                } else {
                    lc_f.neg().pow(dp as u64).div_exact(&psi.pow(dp as u64 - 1)).expect("subresultant division")
                };
                lc_f.neg().mul(&psi.pow(d as u64))
            }
        };
        let next = r.div_exact(&beta).expect("subresultant division");
        prev_d = Some(d);
        f = g;
        g = next;
    }
}

/// gcd of a single term `c * t^e` with `b`: the largest monomial dividing
/// every term of `b` and `t^e`.
fn monomial_gcd(m: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let (lead, _) = m.leading().unwrap();
    let mut exps = lead.exps().to_vec();
    for (mono, _) in b.terms() {
        for (e, &f) in exps.iter_mut().zip(mono.exps()) {
            *e = (*e).min(f);
        }
    }
    ParamPoly::monomial(m.p(), exps, 1)
}

/// The largest monomial dividing every term.
fn monomial_content(a: &ParamPoly) -> ParamPoly {
    let mut terms = a.terms();
    let (first, _) = terms.next().expect("nonzero");
    let mut exps = first.exps().to_vec();
    for (mono, _) in terms {
        for (e, &f) in exps.iter_mut().zip(mono.exps()) {
            *e = (*e).min(f);
        }
    }
    ParamPoly::monomial(a.p(), exps, 1)
}

/// gcd of the coefficients of `a` viewed as a polynomial in `x_k`.
fn content(a: &ParamPoly, k: usize) -> ParamPoly {
    let mut acc = ParamPoly::zero(a.p(), a.nvars());
    for d in a.degrees_in(k) {
        acc = gcd_rec(&acc, &a.coeff_in(k, d));
        if acc.is_constant() {
            return ParamPoly::one(a.p(), a.nvars());
        }
    }
    acc
}

fn primitive_part(a: &ParamPoly, k: usize) -> ParamPoly {
    let c = content(a, k);
    a.div_exact(&c).expect("content divides")
}

/// `lc(g)^(deg f - deg g + 1) f mod g` in `x_k`.
fn pseudo_remainder(f: &ParamPoly, g: &ParamPoly, k: usize) -> ParamPoly {
    let dg = g.degree_in(k);
    let lc = g.coeff_in(k, dg);
    let mut r = f.clone();
    let mut steps = f.degree_in(k) + 1 - dg;
    while !r.is_zero() {
        let dr = r.degree_in(k);
        if dr < dg {
            break;
        }
        let lr = r.coeff_in(k, dr);
        r = r.mul(&lc).sub(&lr.mul(g).mul_var_pow(k, dr - dg));
        steps -= 1;
    }
    if steps > 0 && !r.is_zero() {
        r = r.mul(&lc.pow(steps as u64));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: u32, n: usize, i: usize) -> ParamPoly {
        ParamPoly::var(p, n, i)
    }

    #[test]
    fn bivariate_example() {
        // p = 2: gcd(t1^2 t2 + t1 t2^2, t1 + t2) = t1 + t2, and
        // (t1^2 t2 + t1 t2^2) / (t1 + t2) = t1 t2.
        let (t1, t2) = (t(2, 2, 0), t(2, 2, 1));
        let num = t1.pow(2).mul(&t2).add(&t1.mul(&t2.pow(2)));
        let den = t1.add(&t2);
        let g = gcd(&num, &den);
        assert_eq!(g, den);
        assert_eq!(num.div_exact(&g).unwrap(), t1.mul(&t2));
    }

    #[test]
    fn coprime_and_common_factors() {
        let p = 5;
        let (a, b, c) = (t(p, 3, 0), t(p, 3, 1), t(p, 3, 2));
        let one = ParamPoly::one(p, 3);
        let f = a.add(&b).add(&one);
        let g = a.mul(&c).sub(&b.pow(2));
        assert!(gcd(&f, &g).is_one());
        let h = c.add(&a.pow(2)).add(&one.scale(3));
        assert_eq!(gcd(&f.mul(&h), &g.mul(&h)), h.monic());
        assert_eq!(gcd(&f.mul(&h).mul(&h), &g.mul(&h)), h.monic());
    }

    #[test]
    fn lcm_of_monomials() {
        let (a, b) = (t(3, 2, 0), t(3, 2, 1));
        assert_eq!(lcm(&a.pow(2).mul(&b), &a.mul(&b.pow(3))), a.pow(2).mul(&b.pow(3)));
    }
}
