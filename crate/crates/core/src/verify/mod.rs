//! Enumeration, canonical forms, rule sweeps, audits and counterexample search.

pub mod audit;
pub mod canonical;
pub mod enumerate;
pub mod rules;
pub mod search;
pub mod sweep;

pub use audit::{functorial_audit, product_audit, ClauseResult, FunctorialReport, ProductReport};
pub use canonical::{canonical_hash, canonical_key, canonicalize, isomorphic, CanonicalKey};
pub use enumerate::{
    enumerate_posets, enumerate_preorders, enumerate_semilattices, enumerate_topologies,
};
pub use rules::{default_rules, Check, Conclusion, ImplicationRule, Outcome, Tally};
pub use search::{search, NonImplication, SearchOutcome};
pub use sweep::{sweep, RuleStats, SweepConfig, SweepReport};

use crate::error::Result;
use crate::props::PropertyVector;
use crate::tsl::TopologizedSemigroup;

/// A stored witness: an instance together with the rule or non-implication
/// it bears on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CounterexampleRecord {
    pub id: String,
    pub instance: TopologizedSemigroup,
    pub property_vector: PropertyVector,
    /// Filled in when the record is persisted.
    pub discovered_at: Option<String>,
    pub canonical_hash: String,
    pub detail: String,
}

impl CounterexampleRecord {
    pub fn new(
        id: &str,
        instance: TopologizedSemigroup,
        property_vector: PropertyVector,
        detail: String,
    ) -> Result<Self> {
        let canonical_hash = canonical_hash(&instance)?;
        Ok(CounterexampleRecord {
            id: id.to_string(),
            instance,
            property_vector,
            discovered_at: None,
            canonical_hash,
            detail,
        })
    }
}

/// Every (topology, semilattice) pairing on `n` points, topology-major.
pub fn instances(n: usize) -> Result<Vec<TopologizedSemigroup>> {
    let sls = enumerate_semilattices(n)?;
    let mut out = Vec::new();
    for t in enumerate_topologies(n)? {
        for s in &sls {
            out.push(TopologizedSemigroup::new(s.clone(), t.clone())?);
        }
    }
    Ok(out)
}

/// Every semilattice on `n` points with the discrete topology.
pub fn discrete_instances(n: usize) -> Result<Vec<TopologizedSemigroup>> {
    Ok(enumerate_semilattices(n)?
        .into_iter()
        .map(TopologizedSemigroup::discrete)
        .collect())
}
