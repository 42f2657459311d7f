//! Decision procedures built on the Frobenius action: the a-invariant,
//! injectivity on a component, the Veronese F-rationality certificate,
//! and two bounded probes.

mod annihilator;
mod probe;

use std::fmt;
use std::time::Instant;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cech::{class_frobenius, component_basis, multigraded_split, CechClass, GradedComponent};
use crate::error::{Error, Result};
use crate::rings::{Ring, RingElement};
use crate::semilinear::{coordinates_to_class, kernel_coordinates, SemilinearSolution};

pub use annihilator::annihilator_probe;
pub use probe::{isolated_singularity_probe, ProbeOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    FInjectiveComponent,
    FRationalVeronese,
    NotFInjective,
    IsolatedSingularityProbe,
    AnnihilatorProbe,
    AInvariant,
    NilpotentElement,
    MultigradedConsistency,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        write!(f, "{}", s.as_str().unwrap())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// How a hypothesis was discharged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisStatus {
    /// Checked by computation.
    Computed,
    /// Holds for every presentation of this class.
    Automatic,
    /// Recorded on the presentation, not verified.
    Assumed,
    /// Neither computed nor asserted.
    Missing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
    pub holds: bool,
    pub detail: String,
}

impl Hypothesis {
    fn new(name: &str, status: HypothesisStatus, holds: bool, detail: impl Into<String>) -> Self {
        Hypothesis { name: name.to_string(), status, holds, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub enum Witness {
    Class(CechClass),
    Classes(Vec<CechClass>),
    Element(RingElement),
}

impl Witness {
    pub fn text(&self) -> String {
        match self {
            Witness::Class(c) => c.display(),
            Witness::Classes(cs) => cs.iter().map(CechClass::display).collect::<Vec<_>>().join("; "),
            Witness::Element(a) => a.display(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub verdict: Verdict,
    /// Set for bounded checks of unbounded conditions.
    pub evidence_only: bool,
    pub assumptions: Vec<Hypothesis>,
    pub witness: Option<Witness>,
    pub parameters: IndexMap<String, Value>,
    pub detail: String,
    pub ms: u64,
}

impl Certificate {
    pub(crate) fn new(kind: CertificateKind, verdict: Verdict) -> Self {
        Certificate {
            kind,
            verdict,
            evidence_only: false,
            assumptions: vec![],
            witness: None,
            parameters: IndexMap::new(),
            detail: String::new(),
            ms: 0,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: Value) -> Self {
        self.parameters.insert(key.to_string(), value);
        self
    }

    pub(crate) fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub(crate) fn timed(mut self, start: Instant) -> Self {
        self.ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// `sum_j m_j deg(b_j) - sum_i deg(v_i)`, the top degree of `H^d`.
pub fn a_invariant(ring: &Ring) -> Result<i64> {
    if ring.grading_rank() != 1 {
        return Err(Error::NotZGraded);
    }
    let vars = ring.variables();
    let bound: i64 = ring.relations().iter().map(|r| r.degree() as i64 * vars[r.bound()].degree[0]).sum();
    let all: i64 = vars.iter().map(|v| v.degree[0]).sum();
    Ok(bound - all)
}

pub fn a_invariant_certificate(ring: &Ring) -> Result<Certificate> {
    let start = Instant::now();
    let a = a_invariant(ring)?;
    let top = component_basis(ring, &[a])?.dim();
    let above = component_basis(ring, &[a + 1])?.dim();
    let verdict = if top > 0 && above == 0 { Verdict::Pass } else { Verdict::Fail };
    Ok(Certificate::new(CertificateKind::AInvariant, verdict)
        .param("a", json!(a))
        .param("dim_at_a", json!(top))
        .param("dim_at_a_plus_1", json!(above))
        .timed(start))
}

/// How to organize a component kernel computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Direct,
    /// Kernel per residue part of the Family-B multigrading.
    Multigraded,
}

/// Kernel of `F^e` on a component, as classes.
#[derive(Clone, Debug)]
pub struct ComponentKernel {
    pub component: GradedComponent,
    pub kernel: Vec<CechClass>,
    pub parts: usize,
    pub expanded_rank: usize,
}

pub fn component_kernel(ring: &Ring, degree: &[i64], e: u32, strategy: Strategy) -> Result<ComponentKernel> {
    let component = component_basis(ring, degree)?;
    let solve = |c: &GradedComponent| -> (Vec<CechClass>, usize) {
        let SemilinearSolution { kernel, expanded_rank, .. } = kernel_coordinates(c, e);
        (kernel.iter().map(|v| coordinates_to_class(c, v)).collect(), expanded_rank)
    };
    match strategy {
        Strategy::Direct => {
            let (kernel, expanded_rank) = solve(&component);
            Ok(ComponentKernel { component, kernel, parts: 1, expanded_rank })
        }
        Strategy::Multigraded => {
            let split = multigraded_split(ring, &component)?;
            let subs: Vec<GradedComponent> = (0..split.parts.len()).map(|i| split.component(ring, degree, i)).collect();
            let results: Vec<(Vec<CechClass>, usize)> = std::thread::scope(|scope| {
                let handles: Vec<_> = subs.iter().map(|c| scope.spawn(move || solve(c))).collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            });
            let mut kernel = Vec::new();
            let mut expanded_rank = 0;
            for (k, r) in results {
                kernel.extend(k);
                expanded_rank += r;
            }
            Ok(ComponentKernel { component, kernel, parts: subs.len(), expanded_rank })
        }
    }
}

/// `pass` iff `F^e` is injective on the component of `degree`; a `fail`
/// carries a nonzero kernel class.
pub fn f_injectivity_on_component(ring: &Ring, degree: &[i64], e: u32) -> Result<Certificate> {
    f_injectivity_with(ring, degree, e, Strategy::Direct)
}

pub fn f_injectivity_with(ring: &Ring, degree: &[i64], e: u32, strategy: Strategy) -> Result<Certificate> {
    let start = Instant::now();
    let k = component_kernel(ring, degree, e, strategy)?;
    let verdict = if k.kernel.is_empty() { Verdict::Pass } else { Verdict::Fail };
    let mut cert = Certificate::new(CertificateKind::FInjectiveComponent, verdict)
        .param("degree", json!(degree))
        .param("e", json!(e))
        .param("dim", json!(k.component.dim()))
        .param("kernel_dim", json!(k.kernel.len()))
        .param("strategy", serde_json::to_value(strategy).unwrap())
        .param("parts", json!(k.parts));
    if let Some(w) = k.kernel.first() {
        debug_assert!(class_frobenius(w, e).is_zero());
        cert.witness = Some(Witness::Class(w.clone()));
    }
    Ok(cert.timed(start))
}

/// Checks that a class is nonzero and killed by `F^e`.
pub fn frobenius_kernel_witness(eta: &CechClass, e: u32) -> Certificate {
    let start = Instant::now();
    let image = class_frobenius(eta, e);
    let verdict = if !eta.is_zero() && image.is_zero() { Verdict::Pass } else { Verdict::Fail };
    let mut cert = Certificate::new(CertificateKind::NotFInjective, verdict)
        .param("e", json!(e))
        .param("nonzero", json!(!eta.is_zero()))
        .param("image_zero", json!(image.is_zero()))
        .param("coordinates", json!(eta.coords().len()));
    if let Some(d) = eta.degree() {
        cert = cert.param("degree", json!(d));
    }
    cert.witness = Some(Witness::Class(eta.clone()));
    cert.timed(start)
}

/// Options for [`f_rational_veronese_certificate`].
#[derive(Clone, Copy, Debug)]
pub struct VeroneseOptions {
    pub strategy: Strategy,
    /// Run the isolated-singularity probe with this cap as supporting data.
    pub probe_cap: Option<u32>,
}

impl Default for VeroneseOptions {
    fn default() -> Self {
        VeroneseOptions { strategy: Strategy::Direct, probe_cap: None }
    }
}

/// Sufficient criterion for `S^{(n)}` to be F-rational: `S` standard
/// graded Gorenstein normal with an isolated singularity, `a(S) < 0`,
/// `-n <= a(S)`, and `F` injective on `[H^d]_{-n}`.
pub fn f_rational_veronese_certificate(ring: &Ring, n: u32, opts: VeroneseOptions) -> Result<Certificate> {
    use HypothesisStatus::*;
    let start = Instant::now();
    let mut hyps = Vec::new();
    let standard = ring.is_standard_graded();
    hyps.push(Hypothesis::new(
        "standard_graded",
        Computed,
        standard,
        if standard { "all variables have degree 1" } else { "some variable has degree other than 1" },
    ));
    hyps.push(Hypothesis::new("gorenstein", Automatic, true, "complete intersection presentation"));
    let asm = ring.assumptions();
    let probe_note = match opts.probe_cap {
        Some(cap) => {
            let probe = isolated_singularity_probe(ring, cap);
            format!("; integral-model Jacobian probe (cap {cap}): {}", probe.verdict)
        }
        None => String::new(),
    };
    hyps.push(if asm.isolated_singularity_asserted {
        Hypothesis::new("isolated_singularity", Assumed, true, format!("asserted on the presentation{probe_note}"))
    } else {
        Hypothesis::new("isolated_singularity", Missing, false, format!("not asserted{probe_note}"))
    });
    hyps.push(if asm.normal_asserted {
        Hypothesis::new("normal_domain", Assumed, true, "asserted on the presentation")
    } else {
        Hypothesis::new("normal_domain", Missing, false, "not asserted")
    });
    let a = if ring.grading_rank() == 1 { Some(a_invariant(ring)?) } else { None };
    let a_ok = matches!(a, Some(a) if a < 0 && -(n as i64) <= a);
    hyps.push(Hypothesis::new(
        "a_invariant_bounds",
        Computed,
        a_ok,
        match a {
            Some(a) => format!("a(S) = {a}, n = {n}"),
            None => "ring is not Z-graded".to_string(),
        },
    ));
    let mut witness = None;
    let mut kernel_dim = None;
    let mut dim = None;
    if standard && a_ok {
        let k = component_kernel(ring, &[-(n as i64)], 1, opts.strategy)?;
        let ok = k.kernel.is_empty();
        dim = Some(k.component.dim());
        kernel_dim = Some(k.kernel.len());
        hyps.push(Hypothesis::new(
            "frobenius_injective_on_minus_n",
            Computed,
            ok,
            format!("dim [H^d]_{} = {}, kernel dim {}", -(n as i64), k.component.dim(), k.kernel.len()),
        ));
        witness = k.kernel.first().cloned().map(Witness::Class);
    } else {
        hyps.push(Hypothesis::new(
            "frobenius_injective_on_minus_n",
            Missing,
            false,
            "skipped: an earlier computed hypothesis fails",
        ));
    }
    let computed_fail = hyps.iter().any(|h| h.status == Computed && !h.holds);
    let missing = hyps.iter().any(|h| h.status == Missing);
    let verdict = if computed_fail {
        Verdict::Fail
    } else if missing {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    let mut cert = Certificate::new(CertificateKind::FRationalVeronese, verdict)
        .param("n", json!(n))
        .param("a", json!(a))
        .param("dim", json!(dim))
        .param("kernel_dim", json!(kernel_dim))
        .param("strategy", serde_json::to_value(opts.strategy).unwrap());
    cert.assumptions = hyps;
    cert.witness = witness;
    Ok(cert.timed(start))
}
