//! Canonical labeling of small instances.

use itertools::Itertools;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::tsl::TopologizedSemigroup;

/// Largest carrier that can be canonicalized by scanning permutations.
pub const MAX_CANONICAL: usize = 6;

/// Size, row-major table, then the ascending list of closed sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey {
    pub n: usize,
    pub table: Vec<u8>,
    pub closed: Vec<u64>,
}

impl CanonicalKey {
    pub fn of(x: &TopologizedSemigroup) -> Self {
        CanonicalKey {
            n: x.n(),
            table: x.algebra().entries().to_vec(),
            closed: x
                .topology()
                .closed_sets()
                .into_iter()
                .map(ElementSet::bits)
                .collect(),
        }
    }

    /// Stable text rendering, hashed by [`canonical_hash`].
    pub fn encode(&self) -> String {
        format!(
            "{};{};{}",
            self.n,
            self.table.iter().join(","),
            self.closed.iter().join(",")
        )
    }
}

/// The relabeling with the least key, together with the permutation used.
pub fn canonicalize(x: &TopologizedSemigroup) -> Result<(TopologizedSemigroup, Vec<usize>)> {
    let n = x.n();
    if n > MAX_CANONICAL {
        return Err(Error::OutOfRange {
            what: "canonical form size",
            value: n,
            min: 1,
            max: MAX_CANONICAL,
        });
    }
    let best = (0..n)
        .permutations(n)
        .map(|perm| {
            let y = x.permute(&perm);
            (CanonicalKey::of(&y), perm, y)
        })
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .expect("at least one permutation");
    Ok((best.2, best.1))
}

pub fn canonical_key(x: &TopologizedSemigroup) -> Result<CanonicalKey> {
    Ok(CanonicalKey::of(&canonicalize(x)?.0))
}

/// Hex SHA-256 of the canonical key.
pub fn canonical_hash(x: &TopologizedSemigroup) -> Result<String> {
    let key = canonical_key(x)?;
    Ok(hex::encode(Sha256::digest(key.encode().as_bytes())))
}

/// Whether two instances differ only by a relabeling.
pub fn isomorphic(a: &TopologizedSemigroup, b: &TopologizedSemigroup) -> Result<bool> {
    Ok(a.n() == b.n() && canonical_key(a)? == canonical_key(b)?)
}
