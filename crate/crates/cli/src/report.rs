//! JSON report construction. serde_json's map is ordered (BTreeMap), so
//! reports serialize byte-stably for identical inputs.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use qss_core::access::{AccessStructure, OperatorWitness, PartySet};
use qss_core::num_complex::Complex64;
use qss_core::QssScheme;

pub fn input_meta(path: &str, bytes: &[u8]) -> Value {
    json!({
        "path": path,
        "sha256": hex::encode(Sha256::digest(bytes)),
    })
}

pub fn scheme_fields(report: &mut Map<String, Value>, scheme: &QssScheme) {
    report.insert("n".into(), json!(scheme.n()));
    report.insert("k".into(), json!(scheme.k()));
    report.insert("q".into(), json!(scheme.field().q()));
    report.insert("d".into(), json!(scheme.distance()));
    report.insert("pure".into(), json!(scheme.is_pure()));
    report.insert("g".into(), json!(scheme.g().coords()));
    report.insert("beta".into(), json!(scheme.beta().value()));
}

pub fn party_set(s: &PartySet) -> Value {
    json!(s.parties())
}

pub fn party_sets(sets: &[PartySet]) -> Value {
    Value::Array(sets.iter().map(party_set).collect())
}

/// `gamma_min` plus the per-support multiplicity object keyed by the
/// comma-joined positions.
pub fn structure_fields(report: &mut Map<String, Value>, structure: &AccessStructure) {
    report.insert("gamma_min".into(), party_sets(structure.gamma_min()));
    let mut mult = Map::new();
    for (set, &count) in structure.gamma_min().iter().zip(structure.multiplicities()) {
        let key: Vec<String> = set.parties().iter().map(|p| p.to_string()).collect();
        mult.insert(key.join(","), json!(count));
    }
    report.insert("multiplicity".into(), Value::Object(mult));
}

fn complex(v: Complex64) -> Value {
    json!({ "re": v.re, "im": v.im })
}

pub fn witness(w: &OperatorWitness) -> Value {
    match w {
        OperatorWitness::ExpectationMismatch {
            operator,
            first,
            second,
            values,
        } => json!({
            "kind": "expectation-mismatch",
            "operator": operator.to_string(),
            "states": [first, second],
            "values": [complex(values.0), complex(values.1)],
        }),
        OperatorWitness::CrossTerm {
            operator,
            first,
            second,
            value,
        } => json!({
            "kind": "cross-term",
            "operator": operator.to_string(),
            "states": [first, second],
            "value": complex(*value),
        }),
    }
}
