//! The equivalence suite with each phase spread over a thread pool. Results
//! are collected in index order, so the report matches the serial one
//! exactly.

use rayon::prelude::*;

use quandle_core::functors::{
    check_associativity, check_chain, check_pair, prepare_instance, quadruples, EquivalenceReport,
    Mode,
};
use quandle_core::{Quandle, Result};

pub fn verify_equivalence(
    corpus: &[(String, Quandle)],
    mode: Mode,
    subset_cap: usize,
) -> Result<EquivalenceReport> {
    let prepared = corpus
        .par_iter()
        .map(|(name, q)| prepare_instance(name, q.clone(), mode))
        .collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();
    let mut instances = Vec::with_capacity(prepared.len());
    for (inst, c) in prepared {
        instances.push(inst);
        checks.extend(c);
    }
    let n = instances.len();

    let pair_results = (0..n * n)
        .into_par_iter()
        .map(|c| check_pair(&instances, c / n, c % n, mode, subset_cap))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::with_capacity(n * n);
    for (p, c) in pair_results {
        pairs.push(p);
        checks.extend(c);
    }

    let chains = (0..n * n * n)
        .into_par_iter()
        .map(|c| check_chain(&instances, &pairs, c / (n * n), (c / n) % n, c % n, mode))
        .collect::<Result<Vec<_>>>()?;
    checks.extend(chains.into_iter().flatten());

    let quads: Vec<[usize; 4]> = quadruples(n).collect();
    let assoc = quads
        .into_par_iter()
        .map(|chain| check_associativity(&instances, &pairs, chain))
        .collect::<Result<Vec<_>>>()?;
    checks.extend(assoc);

    Ok(EquivalenceReport {
        mode,
        instances: instances.into_iter().map(|i| i.name).collect(),
        checks,
    })
}
