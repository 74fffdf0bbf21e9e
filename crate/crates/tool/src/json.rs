//! JSON documents. Every document carries `"schema": 1`.

use serde_json::{json, Value};

use quandle_core::functors::EquivalenceReport;
use quandle_core::homs::{HomMode, QuandleHom};
use quandle_core::StarMorphism;

pub const SCHEMA: u32 = 1;

pub fn homs(source_n: usize, target_n: usize, mode: HomMode, homs: &[QuandleHom]) -> Value {
    json!({
        "schema": SCHEMA,
        "source_n": source_n,
        "target_n": target_n,
        "mode": mode.to_string(),
        "homs": homs.iter().map(|f| f.map().to_vec()).collect::<Vec<_>>(),
        "count": homs.len(),
    })
}

/// `h` and `gamma` are indices into the target group's canonical order;
/// `pi` pairs an index of `h` with an index into the source group.
pub fn star_morphism(m: &StarMorphism) -> Value {
    let target = m.target().group();
    let h: Vec<usize> = m
        .sub()
        .elements()
        .iter()
        .map(|g| target.index_of(g).expect("H lies in the target group"))
        .collect();
    let gamma: Vec<usize> = m
        .gamma()
        .iter()
        .map(|g| target.index_of(g).expect("gamma lies in the target group"))
        .collect();
    let pi: Vec<[usize; 2]> = h.iter().zip(m.pi()).map(|(&a, &b)| [a, b]).collect();
    json!({ "h": h, "gamma": gamma, "pi": pi })
}

pub fn star_morphisms(source_order: usize, target_order: usize, ms: &[StarMorphism]) -> Value {
    json!({
        "schema": SCHEMA,
        "source_order": source_order,
        "target_order": target_order,
        "morphisms": ms.iter().map(star_morphism).collect::<Vec<_>>(),
        "count": ms.len(),
    })
}

pub fn report(r: &EquivalenceReport) -> Value {
    json!({
        "schema": SCHEMA,
        "mode": r.mode.to_string(),
        "instances": r.instances,
        "passed": r.is_passing(),
        "summary": r.summary().iter().map(|(kind, passed, total)| json!({
            "kind": kind.name(),
            "passed": passed,
            "total": total,
        })).collect::<Vec<_>>(),
        "checks": r.checks.iter().map(|c| json!({
            "kind": c.kind.name(),
            "subject": c.subject,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}
