//! Search for the first small instance separating two property sets.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::props::{decide, Property, PropertyVector};
use crate::verify::canonical::{canonicalize, CanonicalKey};
use crate::verify::{instances, CounterexampleRecord};

pub const MAX_SEARCH: usize = 3;

/// "every `satisfy` property holding does not force `violate`".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NonImplication {
    pub satisfy: Vec<Property>,
    pub violate: Property,
}

impl NonImplication {
    pub fn id(&self) -> String {
        let sat: Vec<&str> = self.satisfy.iter().map(|p| p.name()).collect();
        format!("{} =/=> {}", sat.join(" & "), self.violate)
    }

    pub fn witnessed_by(&self, v: &PropertyVector) -> bool {
        self.satisfy.iter().all(|&p| v.holds(p)) && v.get(self.violate) == Some(false)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchOutcome {
    Found {
        record: Box<CounterexampleRecord>,
        instances_checked: usize,
    },
    /// No witness among instances up to `n_max`; says nothing beyond that.
    Exhausted {
        n_max: usize,
        instances_checked: usize,
    },
}

/// Scans sizes in increasing order and returns the witness with the least
/// canonical key at the first size that has any.
pub fn search(query: &NonImplication, n_max: usize) -> Result<SearchOutcome> {
    if !(1..=MAX_SEARCH).contains(&n_max) {
        return Err(Error::OutOfRange {
            what: "search size",
            value: n_max,
            min: 1,
            max: MAX_SEARCH,
        });
    }
    let mut checked = 0;
    for n in 1..=n_max {
        let xs = instances(n)?;
        checked += xs.len();
        let hits: Vec<(CanonicalKey, _)> = xs
            .par_iter()
            .map(|x| -> Result<Option<_>> {
                if !query.witnessed_by(&decide(x)?) {
                    return Ok(None);
                }
                let (c, _) = canonicalize(x)?;
                Ok(Some((CanonicalKey::of(&c), c)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if let Some((_, best)) = hits.into_iter().min_by(|a, b| a.0.cmp(&b.0)) {
            let vector = decide(&best)?;
            let record = CounterexampleRecord::new(&query.id(), best, vector, String::new())?;
            return Ok(SearchOutcome::Found {
                record: Box::new(record),
                instances_checked: checked,
            });
        }
    }
    Ok(SearchOutcome::Exhausted {
        n_max,
        instances_checked: checked,
    })
}
