use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::json;

use super::{Certificate, CertificateKind, Verdict, Witness};
use crate::cech::{class_frobenius, BasisClassIndex, CechClass};
use crate::error::{Error, Result};
use crate::linalg::{clear_row, Echelon};
use crate::rings::{FreePoly, Ring};
use crate::scalars::RationalScalar;

/// Bounded search for a nonzero homogeneous `s` with `s F^e(eta) = 0` for
/// every `e <= e_max`, over multiplier degrees `0, step, 2 step, ... <= cap`.
/// A pass is evidence only; a fail carries the annihilating multiplier.
pub fn annihilator_probe(eta: &CechClass, e_max: u32, cap: u32, step: u32) -> Result<Certificate> {
    let start = Instant::now();
    let ring = eta.ring();
    if ring.grading_rank() != 1 {
        return Err(Error::NotZGraded);
    }
    let base = Certificate::new(CertificateKind::AnnihilatorProbe, Verdict::Fail)
        .param("e_max", json!(e_max))
        .param("cap", json!(cap))
        .param("step", json!(step));
    if eta.is_zero() {
        return Ok(base.with_detail("the zero class is annihilated by everything").timed(start));
    }
    let mut images = Vec::with_capacity(e_max as usize + 1);
    for e in 0..=e_max {
        let img = class_frobenius(eta, e);
        if img.is_zero() {
            let mut cert = base
                .param("failed_at_e", json!(e))
                .param("multiplier", json!("1"))
                .with_detail(format!("F^{e}(eta) = 0"));
            cert.witness = Some(Witness::Class(eta.clone()));
            return Ok(cert.timed(start));
        }
        images.push(img);
    }
    let step = step.max(1);
    let mut checked = Vec::new();
    let mut delta = 0;
    while delta <= cap {
        let monos = normal_monomials(ring, delta as i64);
        if let Some(s) = common_annihilator(ring, &monos, &images) {
            let mut cert = base
                .param("failed_at_degree", json!(delta))
                .with_detail("a nonzero form annihilates every probed Frobenius power");
            cert.witness = Some(Witness::Element(ring.element(s)));
            return Ok(cert.timed(start));
        }
        checked.push(json!({"degree": delta, "multipliers": monos.len()}));
        delta += step;
    }
    let mut cert = base
        .param("checked", json!(checked))
        .with_detail("EVIDENCE-ONLY: no nonzero form of probed degree annihilates F^e(eta) for all probed e");
    cert.verdict = Verdict::Pass;
    cert.evidence_only = true;
    Ok(cert.timed(start))
}

/// A nonzero combination of `monos` killing every class, if one exists.
fn common_annihilator(ring: &Ring, monos: &[Vec<u32>], classes: &[CechClass]) -> Option<FreePoly> {
    if monos.is_empty() {
        return None;
    }
    let mut rows: BTreeMap<(usize, BasisClassIndex), BTreeMap<usize, RationalScalar>> = BTreeMap::new();
    for (j, m) in monos.iter().enumerate() {
        let s = ring.monomial(m.clone());
        for (e, c) in classes.iter().enumerate() {
            for (idx, v) in c.mul_element(&s).coords() {
                rows.entry((e, idx.clone())).or_default().insert(j, v.clone());
            }
        }
    }
    let mut ech = Echelon::new(monos.len());
    for row in rows.values() {
        ech.insert(clear_row(row));
    }
    let kernel = ech.kernel(ring.p(), ring.field().num_params());
    let v = kernel.first()?;
    let mut s = ring.zero_free();
    for (m, c) in monos.iter().zip(v) {
        s = s.add(&FreePoly::monomial(m.clone(), c.clone()));
    }
    Some(s)
}

/// Free-basis monomials of the given degree.
pub(crate) fn normal_monomials(ring: &Ring, degree: i64) -> Vec<Vec<u32>> {
    let n = ring.num_vars();
    let limits: Vec<Option<u32>> = (0..n).map(|v| ring.relation_of(v).map(|j| ring.relations()[j].degree())).collect();
    let weights: Vec<i64> = ring.variables().iter().map(|v| v.degree[0]).collect();
    let mut out = Vec::new();
    let mut exps = vec![0; n];
    fn rec(i: usize, rem: i64, w: &[i64], lim: &[Option<u32>], exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if rem == 0 {
                out.push(exps.clone());
            }
            return;
        }
        let mut k = 0u32;
        while rem - w[i] * k as i64 >= 0 && lim[i].is_none_or(|m| k < m) {
            exps[i] = k;
            rec(i + 1, rem - w[i] * k as i64, w, lim, exps, out);
            k += 1;
        }
        exps[i] = 0;
    }
    if degree >= 0 {
        rec(0, degree, &weights, &limits, &mut exps, &mut out);
    }
    out
}
