use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use super::{Certificate, CertificateKind, Verdict};
use crate::linalg::FpEchelon;
use crate::rings::{integral_model, jacobian_minors, IntegralModel, Ring};
use crate::scalars::{Monomial, ParamPoly};

/// Smallest power of one ring variable found in the Jacobian ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeOutcome {
    pub variable: String,
    pub power: Option<u32>,
}

/// Searches, for each ring variable `v`, for `v^N` in the ideal of the
/// integral model generated by the relations and the maximal minors of the
/// Jacobian, using summands `m * g` of total degree at most `cap`.
/// Never fails: a missing membership only makes the result inconclusive.
pub fn isolated_singularity_probe(ring: &Ring, cap: u32) -> Certificate {
    let start = Instant::now();
    let model = integral_model(ring);
    let mut gens: Vec<ParamPoly> = model.relations().to_vec();
    for m in jacobian_minors(&model) {
        if !gens.contains(&m) {
            gens.push(m);
        }
    }
    let mut search = SliceSearch { model: &model, gens: &gens, cap, slices: HashMap::new() };
    let mut outcomes = Vec::new();
    for i in 0..ring.num_vars() {
        let v = model.ring_var(i);
        let w = model.weights()[v];
        let mut found = None;
        for n in 1..=cap {
            let mut exps = vec![0; model.nvars()];
            exps[v] = n;
            if search.contains(w * n as i64, &Monomial::new(exps)) {
                found = Some(n);
                break;
            }
        }
        outcomes.push(ProbeOutcome { variable: ring.var_names()[i].clone(), power: found });
    }
    let all = !outcomes.is_empty() && outcomes.iter().all(|o| o.power.is_some());
    let verdict = if all { Verdict::Pass } else { Verdict::Inconclusive };
    let mut cert = Certificate::new(CertificateKind::IsolatedSingularityProbe, verdict)
        .param("cap", json!(cap))
        .param("generators", json!(gens.len()))
        .param("memberships", serde_json::to_value(&outcomes).unwrap());
    cert.evidence_only = !all;
    cert.detail = if all {
        "every ring variable has a power in the Jacobian ideal of the integral model".into()
    } else {
        "no bounded membership found for some variable".into()
    };
    cert.timed(start)
}

struct Slice {
    echelon: FpEchelon,
    columns: HashMap<Monomial, usize>,
}

struct SliceSearch<'a> {
    model: &'a IntegralModel,
    gens: &'a [ParamPoly],
    cap: u32,
    slices: HashMap<i64, Slice>,
}

impl SliceSearch<'_> {
    /// Whether the monomial lies in the span of all products `m * g` of ring
    /// weight `weight` and total degree at most the cap.
    fn contains(&mut self, weight: i64, target: &Monomial) -> bool {
        if !self.slices.contains_key(&weight) {
            let slice = self.build(weight);
            self.slices.insert(weight, slice);
        }
        let slice = &self.slices[&weight];
        let Some(&col) = slice.columns.get(target) else {
            return false;
        };
        slice.echelon.contains(BTreeMap::from([(col, 1)]))
    }

    fn build(&self, weight: i64) -> Slice {
        let model = self.model;
        let mut slice = Slice { echelon: FpEchelon::new(model.p()), columns: HashMap::new() };
        for g in self.gens {
            let Some((lead, _)) = g.leading() else { continue };
            let gw = model.weight_of(lead);
            let gd = g.total_degree();
            if gw > weight || gd > self.cap {
                continue;
            }
            let mut multipliers = Vec::new();
            let mut exps = vec![0; model.nvars()];
            enumerate(model.weights(), 0, weight - gw, self.cap - gd, &mut exps, &mut multipliers);
            for m in multipliers {
                let prod = g.mul_monomial(&Monomial::new(m), 1);
                let mut row = BTreeMap::new();
                for (mono, c) in prod.terms() {
                    let next = slice.columns.len();
                    let col = *slice.columns.entry(mono.clone()).or_insert(next);
                    row.insert(col, c);
                }
                slice.echelon.insert(row);
            }
        }
        slice
    }
}

/// Monomials of exact weight `weight` and total degree at most `deg`.
fn enumerate(weights: &[i64], i: usize, weight: i64, deg: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == weights.len() {
        if weight == 0 {
            out.push(exps.clone());
        }
        return;
    }
    let w = weights[i];
    let mut k = 0;
    loop {
        let rem = weight - w * k as i64;
        if rem < 0 || k > deg {
            break;
        }
        exps[i] = k;
        enumerate(weights, i + 1, rem, deg - k, exps, out);
        k += 1;
    }
    exps[i] = 0;
}
