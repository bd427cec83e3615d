//! JSON forms of the verification reports.

use parteq_core::counts::CountReport;
use parteq_core::qseries::IdentityReport;
use parteq_core::RoundtripReport;
use serde_json::{json, Map, Value};

pub fn roundtrip_json(r: &RoundtripReport) -> Value {
    json!({
        "bijection": r.bijection.tag(),
        "n_max": r.n_max,
        "checked": r.checked,
        "checked_codomain": r.checked_codomain,
        "failures": r.failures.iter().map(|f| json!({
            "input": f.input,
            "stage": f.stage,
            "detail": f.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn identity_json(r: &IdentityReport) -> Value {
    let mut out = json!({
        "name": r.identity.tag(),
        "order": r.order,
        "equal": r.equal,
        "enumerated_through": r.enumerated_through,
    });
    if let Some(m) = &r.first_mismatch {
        out["first_mismatch"] = json!({
            "degree": m.degree,
            "lhs": m.lhs.to_string(),
            "rhs": m.rhs.to_string(),
            "against": m.against,
        });
    }
    out
}

pub fn counts_json(target: &str, r: &CountReport) -> Value {
    json!({
        "target": target,
        "families": r.identity.families().iter().map(|f| f.tag()).collect::<Vec<_>>(),
        "n_max": r.n_max,
        "cells_checked": r.cells_checked,
        "objects": r.objects,
        "mismatches": r.mismatches.iter().map(|m| {
            let counts: Map<String, Value> =
                m.counts.iter().map(|(f, c)| (f.tag().to_string(), json!(c))).collect();
            json!({
                "n": m.n,
                "cell": m.cell.map(|(a, b)| [a, b]),
                "counts": counts,
            })
        }).collect::<Vec<_>>(),
    })
}
