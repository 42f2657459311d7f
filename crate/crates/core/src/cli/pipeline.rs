use std::time::Instant;

use serde_json::json;

use super::parser::parse_class;
use super::report::Report;
use crate::cech::CechClass;
use crate::certify::{
    a_invariant_certificate, component_kernel, f_injectivity_with, f_rational_veronese_certificate,
    frobenius_kernel_witness, isolated_singularity_probe, Certificate, CertificateKind, Strategy, Verdict,
    VeroneseOptions, Witness,
};
use crate::error::{Error, Result};
use crate::families::{family_a, family_b};
use crate::linalg::same_span;
use crate::rings::{base_change, nilpotency_check, tensor_square, Ring};
use crate::scalars::{is_prime, RationalScalar};
use crate::semilinear::{class_coordinates, in_span};

pub const DEFAULT_MAX_P_A: u32 = 5;
pub const DEFAULT_MAX_P_B: u32 = 3;

fn check_prime(p: u32, max_p: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p as u64));
    }
    if p > max_p {
        return Err(Error::Invalid(format!("p = {p} exceeds the configured maximum {max_p}; raise it with --max-p")));
    }
    Ok(())
}

/// Rebuilds the ring a report record names, for re-checking witnesses.
pub fn report_ring(family: &str, p: u32, label: &str) -> Result<Ring> {
    let s = match family {
        "A" => family_a(p)?,
        "B" => family_b(p)?,
        _ => return Err(Error::Invalid(format!("no canonical ring for family `{family}`"))),
    };
    match label {
        "S" => Ok(s),
        "S_root" => Ok(base_change(&s)?.0),
        "S_tensor" => tensor_square(&s),
        _ => Err(Error::Invalid(format!("unknown ring label `{label}`"))),
    }
}

fn a_invariant_step(report: &mut Report, s: &Ring) -> Result<()> {
    let mut cert = a_invariant_certificate(s)?;
    if cert.parameters["a"] != json!(-1) {
        cert.verdict = Verdict::Fail;
        cert.detail = "expected a(S) = -1".into();
    } else {
        cert.detail = "a(S) = -1: top component nonempty, next one empty".into();
    }
    report.push("a_invariant", "S", Verdict::Pass, cert);
    Ok(())
}

/// Nonzero, `F`-killed, and inside the computed kernel at its degree.
fn kernel_witness_step(
    report: &mut Report,
    name: &str,
    ring_label: &str,
    ring: &Ring,
    witness: &CechClass,
    kernel_of: Option<&[i64]>,
) -> Result<()> {
    let start = Instant::now();
    let mut cert = frobenius_kernel_witness(witness, 1);
    if let Some(degree) = kernel_of {
        let k = component_kernel(ring, degree, 1, Strategy::Direct)?;
        let basis: Vec<Vec<RationalScalar>> = k
            .kernel
            .iter()
            .map(|c| class_coordinates(&k.component, c).expect("kernel lies in its component"))
            .collect();
        let inside = class_coordinates(&k.component, witness).is_some_and(|v| in_span(&basis, &v, k.component.dim()));
        cert = cert.param("in_computed_kernel", json!(inside)).param("kernel_dim", json!(k.kernel.len()));
        if !inside {
            cert.verdict = Verdict::Fail;
        }
    }
    cert.ms = start.elapsed().as_millis() as u64;
    report.push(name, ring_label, Verdict::Pass, cert);
    Ok(())
}

fn names(prefix: &str, range: std::ops::RangeInclusive<u32>, suffix: &str) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}{suffix}")).collect()
}

pub fn run_family_a(p: u32, max_p: u32) -> Result<Report> {
    check_prime(p, max_p)?;
    let s = family_a(p)?;
    let mut report = Report::new("A", s.field());
    let n = p as i64;
    report.data.insert("ring".into(), json!(s.describe()));

    a_invariant_step(&mut report, &s)?;

    let cap = 2 * (p + 2);
    report.push("isolated_singularity_probe", "S", Verdict::Pass, isolated_singularity_probe(&s, cap));

    let cert = f_rational_veronese_certificate(&s, p, VeroneseOptions::default())?;
    report.data.insert("dim_minus_p".into(), cert.parameters["dim"].clone());
    report.push("f_rational_veronese", "S", Verdict::Pass, cert);

    let (root, _) = base_change(&s)?;
    report.data.insert("base_changed_ring".into(), json!(root.describe()));
    report.push(
        "base_change_injectivity",
        "S_root",
        Verdict::Fail,
        f_injectivity_with(&root, &[-n], 1, Strategy::Direct)?,
    );

    // u2 [x0 / x1^2 x2 ... xp] - u1 [x0 / x1 x2^2 x3 ... xp]
    let rest = names("x", 3..=p, "").join(" ");
    let text = format!("u2*[x0 / x1^2 x2 {rest}] - u1*[x0 / x1 x2^2 {rest}]");
    let witness = parse_class(&text, &root)?;
    kernel_witness_step(&mut report, "base_change_witness", "S_root", &root, &witness, Some(&[-n]))?;

    let start = Instant::now();
    let mut a = root.var(0);
    for i in 1..=p as usize {
        a = a.sub(&root.var(i).scale(&root.field().param(i - 1)));
    }
    for i in 1..p as usize {
        a = a.mul(&root.var(i));
    }
    let verdict = nilpotency_check(&a, p as u64);
    let mut cert = Certificate::new(
        CertificateKind::NilpotentElement,
        if verdict.nonzero && verdict.kth_power_zero { Verdict::Pass } else { Verdict::Fail },
    )
    .param("k", json!(p))
    .param("nonzero", json!(verdict.nonzero))
    .param("kth_power_zero", json!(verdict.kth_power_zero))
    .with_detail("nonzero element whose p-th power vanishes after the base change");
    cert.witness = Some(Witness::Element(a));
    report.push("nilpotent_element", "S_root", Verdict::Pass, cert.timed(start));

    let t = tensor_square(&s)?;
    let xs = names("x", 2..=p, "").join(" ");
    let ys = names("x", 2..=p, "'").join(" ");
    let text = format!("[x0 x1' - x1 x0' / x1^2 {xs} x1'^2 {ys}]");
    let witness = parse_class(&text, &t)?;
    kernel_witness_step(&mut report, "enveloping_witness", "S_tensor", &t, &witness, None)?;
    Ok(report)
}

pub fn run_family_b(p: u32, max_p: u32) -> Result<Report> {
    check_prime(p, max_p)?;
    let s = family_b(p)?;
    let mut report = Report::new("B", s.field());
    let n = p as i64;
    report.data.insert("ring".into(), json!(s.describe()));

    a_invariant_step(&mut report, &s)?;

    let cap = 2 * (p + 2);
    report.push("isolated_singularity_probe", "S", Verdict::Pass, isolated_singularity_probe(&s, cap));

    let opts = VeroneseOptions { strategy: Strategy::Multigraded, probe_cap: None };
    let cert = f_rational_veronese_certificate(&s, p, opts)?;
    report.data.insert("dim_minus_p".into(), cert.parameters["dim"].clone());
    report.push("f_rational_veronese", "S", Verdict::Pass, cert);

    let (root, _) = base_change(&s)?;
    report.data.insert("base_changed_ring".into(), json!(root.describe()));

    let start = Instant::now();
    let mut consistent = true;
    let mut checks = Vec::new();
    for (label, ring) in [("S", &s), ("S_root", &root)] {
        let direct = component_kernel(ring, &[-n], 1, Strategy::Direct)?;
        let split = component_kernel(ring, &[-n], 1, Strategy::Multigraded)?;
        let coords = |cs: &[CechClass]| -> Vec<Vec<RationalScalar>> {
            cs.iter().map(|c| class_coordinates(&direct.component, c).expect("kernel lies in its component")).collect()
        };
        let same = same_span(&coords(&direct.kernel), &coords(&split.kernel), direct.component.dim());
        consistent &= same;
        checks.push(json!({
            "ring": label,
            "dim": direct.component.dim(),
            "parts": split.parts,
            "kernel_dim_direct": direct.kernel.len(),
            "kernel_dim_split": split.kernel.len(),
            "same_span": same,
        }));
    }
    let cert = Certificate::new(
        CertificateKind::MultigradedConsistency,
        if consistent { Verdict::Pass } else { Verdict::Fail },
    )
    .param("degree", json!([-n]))
    .param("checks", json!(checks))
    .with_detail(if consistent {
        "split and unsplit kernels span the same subspace"
    } else {
        "INTERNAL INCONSISTENCY: split and unsplit kernels differ"
    });
    report.push("multigraded_consistency", "S", Verdict::Pass, cert.timed(start));

    report.push(
        "base_change_injectivity",
        "S_root",
        Verdict::Fail,
        f_injectivity_with(&root, &[-n], 1, Strategy::Multigraded)?,
    );

    let zs = names("z", 1..=p - 1, "").join(" ");
    let text = format!("[w^2 / x^2 y {zs}] - u*[w^2 / x y^2 {zs}]");
    let witness = parse_class(&text, &root)?;
    kernel_witness_step(&mut report, "base_change_witness", "S_root", &root, &witness, Some(&[-n]))?;

    let t = tensor_square(&s)?;
    let zs2 = names("z", 1..=p - 1, "'").join(" ");
    let text = format!("[(w w')^2 (x' y - x y') / x^2 x'^2 y^2 y'^2 {zs} {zs2}]");
    let witness = parse_class(&text, &t)?;
    kernel_witness_step(&mut report, "enveloping_witness", "S_tensor", &t, &witness, None)?;
    Ok(report)
}
