//! Text and JSON renderings of library results.

use serde_json::{json, Value};

use starring::ginverse::InverseResult;
use starring::ring::ValidationReport;
use starring::theorems::DecompositionCheck;
use starring::{Backend, Element, ElementFlags};

pub fn validation(report: &ValidationReport) -> String {
    let mode = match report.seed {
        Some(seed) => format!("sampled, seed {seed:#x}"),
        None => "exhaustive".to_string(),
    };
    let mut out = format!(
        "{}: {} ({} pairs checked, {mode})",
        report.ring,
        if report.passed { "pass" } else { "FAIL" },
        report.pairs_checked
    );
    if let Some(v) = &report.violation {
        out.push_str(&format!(
            "\nviolates {} at a = {}, b = {}, c = {}",
            v.law, v.a, v.b, v.c
        ));
    }
    out
}

pub fn flags(a: &Element, f: &ElementFlags) -> String {
    let rows = [
        ("idempotent", f.idempotent),
        ("projection", f.projection),
        ("hermitian", f.hermitian),
        ("normal", f.normal),
        ("unit", f.unit),
        ("left invertible", f.left_invertible),
        ("right invertible", f.right_invertible),
    ];
    let mut out = format!("a = {a}");
    for (name, v) in rows {
        out.push_str(&format!("\n  {name:<17} {v}"));
    }
    out
}

pub fn inverse<B: Backend>(r: &B, a: &Element, res: &InverseResult<B::Elem>) -> String {
    let mut out = match &res.value {
        Some(b) => format!("{} inverse of {a}: {}", res.kind, r.format(b)),
        None => format!("{} inverse of {a}: does not exist", res.kind),
    };
    for step in &res.certificate {
        out.push_str(&format!(
            "\n  {}  [{}]",
            step.equation,
            r.format(&step.witness)
        ));
    }
    if let Some(reason) = &res.reason {
        out.push_str(&format!("\n  {reason}"));
    }
    out
}

pub fn inverse_json<B: Backend>(r: &B, a: &Element, res: &InverseResult<B::Elem>) -> Value {
    json!({
        "ring": a.ring(),
        "element": a.to_json(),
        "kind": res.kind,
        "exists": res.exists(),
        "value": res.value.as_ref().map(|b| r.to_json(b)),
        "certificate": res.certificate.iter().map(|s| json!({
            "equation": s.equation,
            "witness": r.to_json(&s.witness),
        })).collect::<Vec<_>>(),
        "reason": res.reason,
    })
}

fn set<B: Backend>(r: &B, members: &[B::Elem]) -> String {
    let items: Vec<String> = members.iter().map(|m| r.format(m)).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn decompositions<B: Backend>(
    r: &B,
    a: &Element,
    checks: &[DecompositionCheck<B::Elem>],
    mp_exists: bool,
) -> String {
    let mut out = format!("a = {a}; Moore-Penrose inverse exists: {mp_exists}");
    for c in checks {
        out.push_str(&format!(
            "\n({}) n={} {}: {}\n    annihilator {}\n    ideal       {}\n    sum is R: {}, intersection is {{0}}: {}",
            c.variant.condition(),
            c.n,
            c.variant.label(),
            if c.holds { "holds" } else { "fails" },
            set(r, c.annihilator.members()),
            set(r, c.ideal.members()),
            c.sum_is_whole,
            c.intersection_trivial,
        ));
    }
    out
}

pub fn decompositions_json<B: Backend>(
    r: &B,
    a: &Element,
    checks: &[DecompositionCheck<B::Elem>],
    mp_exists: bool,
) -> Value {
    let list = |m: &[B::Elem]| m.iter().map(|x| r.to_json(x)).collect::<Vec<_>>();
    json!({
        "ring": a.ring(),
        "element": a.to_json(),
        "mp_exists": mp_exists,
        "checks": checks.iter().map(|c| json!({
            "condition": c.variant.condition(),
            "label": c.variant.label(),
            "n": c.n,
            "annihilator": list(c.annihilator.members()),
            "ideal": list(c.ideal.members()),
            "sum_is_whole": c.sum_is_whole,
            "intersection_trivial": c.intersection_trivial,
            "holds": c.holds,
        })).collect::<Vec<_>>(),
    })
}
