//! Exhaustive rule sweeps over small instances.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::props::{Analysis, PropertyVector};
use crate::tsl::TopologizedSemigroup;
use crate::verify::rules::{ImplicationRule, Outcome, Tally};
use crate::verify::{discrete_instances, instances, CounterexampleRecord};

/// Largest size for the full topology × semilattice cross product.
pub const MAX_SWEEP: usize = 3;
/// Largest size for discrete-only sweeps.
pub const MAX_DISCRETE_SWEEP: usize = 4;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepConfig {
    pub n_max: usize,
    /// Discrete instances are added for sizes `n_max + 1 ..= discrete_n_max`.
    pub discrete_n_max: usize,
    /// Pair rules run over ordered pairs of instances up to this size.
    pub pair_n_max: usize,
    /// Instances beyond this many are skipped and the report is flagged
    /// incomplete.
    pub max_instances: Option<usize>,
}

impl SweepConfig {
    pub fn new(n_max: usize) -> Self {
        SweepConfig {
            n_max,
            discrete_n_max: if n_max == MAX_SWEEP {
                MAX_DISCRETE_SWEEP
            } else {
                n_max
            },
            pair_n_max: n_max.min(2),
            max_instances: None,
        }
    }

    fn validate(&self) -> Result<()> {
        let range = |what, value, max| {
            if (1..=max).contains(&value) {
                Ok(())
            } else {
                Err(Error::OutOfRange {
                    what,
                    value,
                    min: 1,
                    max,
                })
            }
        };
        range("sweep size", self.n_max, MAX_SWEEP)?;
        range(
            "discrete sweep size",
            self.discrete_n_max.max(1),
            MAX_DISCRETE_SWEEP,
        )?;
        range("pair sweep size", self.pair_n_max.max(1), 2)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RuleStats {
    pub id: String,
    pub anchor: String,
    pub applied: usize,
    pub vacuous: usize,
    pub violations: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepReport {
    pub config: SweepConfig,
    /// Cross-product instances evaluated.
    pub instances_checked: usize,
    /// Extra discrete instances evaluated.
    pub discrete_checked: usize,
    /// Ordered pairs evaluated by pair rules.
    pub pairs_checked: usize,
    pub complete: bool,
    pub rules: Vec<RuleStats>,
    /// Sorted by rule id, then canonical hash, then detail.
    pub violations: Vec<CounterexampleRecord>,
}

impl SweepReport {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.complete
    }
}

struct InstanceResult {
    instance: TopologizedSemigroup,
    vector: PropertyVector,
    tallies: Vec<Tally>,
}

fn evaluate_instance(
    x: &TopologizedSemigroup,
    rules: &[ImplicationRule],
) -> Result<InstanceResult> {
    let mut tallies = vec![Tally::default(); rules.len()];
    let analysis = match Analysis::new(x) {
        Ok(a) => a,
        // an inclusion failure between derived topologies
        Err(Error::BundleInvariant(why)) => {
            for (rule, tally) in rules.iter().zip(&mut tallies) {
                if !rule.is_pair() {
                    tally.applied += 1;
                    tally.violations.push(format!("derived topologies: {why}"));
                }
            }
            return Ok(InstanceResult {
                instance: x.clone(),
                vector: PropertyVector::default(),
                tallies,
            });
        }
        Err(e) => return Err(e),
    };
    for (rule, tally) in rules.iter().zip(&mut tallies) {
        if rule.is_pair() {
            continue;
        }
        match rule.evaluate(&analysis)? {
            Outcome::Vacuous => tally.vacuous += 1,
            Outcome::Held => tally.applied += 1,
            Outcome::Violated(why) => {
                tally.applied += 1;
                tally.violations.push(why);
            }
        }
    }
    Ok(InstanceResult {
        instance: x.clone(),
        vector: analysis.vector,
        tallies,
    })
}

fn budgeted(
    mut xs: Vec<TopologizedSemigroup>,
    left: &mut Option<usize>,
    complete: &mut bool,
) -> Vec<TopologizedSemigroup> {
    if let Some(l) = left {
        if xs.len() > *l {
            xs.truncate(*l);
            *complete = false;
        }
        *l -= xs.len();
    }
    xs
}

/// Evaluates every rule on every instance up to `config.n_max`, plus the
/// discrete extension and the pair rules.
///
/// Results are merged in enumeration order, so the report does not depend
/// on how the work was scheduled.
pub fn sweep(config: &SweepConfig, rules: &[ImplicationRule]) -> Result<SweepReport> {
    config.validate()?;
    let mut complete = true;
    let mut left = config.max_instances;

    let mut cross = Vec::new();
    for n in 1..=config.n_max {
        cross.extend(instances(n)?);
    }
    let cross = budgeted(cross, &mut left, &mut complete);
    let mut extension = Vec::new();
    for n in config.n_max + 1..=config.discrete_n_max {
        extension.extend(discrete_instances(n)?);
    }
    let extension = budgeted(extension, &mut left, &mut complete);

    let instance_count = cross.len();
    let discrete_count = extension.len();
    let all: Vec<TopologizedSemigroup> = cross.into_iter().chain(extension).collect();
    let results: Vec<InstanceResult> = all
        .par_iter()
        .map(|x| evaluate_instance(x, rules))
        .collect::<Result<_>>()?;

    let mut stats: Vec<RuleStats> = rules
        .iter()
        .map(|r| RuleStats {
            id: r.id.clone(),
            anchor: r.anchor.clone(),
            applied: 0,
            vacuous: 0,
            violations: 0,
        })
        .collect();
    let mut violations = Vec::new();
    for res in &results {
        for ((rule, stat), tally) in rules.iter().zip(&mut stats).zip(&res.tallies) {
            stat.applied += tally.applied;
            stat.vacuous += tally.vacuous;
            stat.violations += tally.violations.len();
            for why in &tally.violations {
                violations.push(CounterexampleRecord::new(
                    &rule.id,
                    res.instance.clone(),
                    res.vector,
                    why.clone(),
                )?);
            }
        }
    }

    let pair_rules: Vec<usize> = (0..rules.len()).filter(|&i| rules[i].is_pair()).collect();
    let mut pairs_checked = 0;
    if !pair_rules.is_empty() {
        let mut small = Vec::new();
        for n in 1..=config.pair_n_max {
            small.extend(instances(n)?);
        }
        let analyses: Vec<Analysis> = small.par_iter().map(Analysis::new).collect::<Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..analyses.len())
            .flat_map(|i| (0..analyses.len()).map(move |j| (i, j)))
            .collect();
        pairs_checked = pairs.len();
        let tallies: Vec<Vec<Tally>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                pair_rules
                    .iter()
                    .map(|&k| rules[k].evaluate_pair(&analyses[i], &analyses[j]))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        for (&(i, j), ts) in pairs.iter().zip(&tallies) {
            for (&k, tally) in pair_rules.iter().zip(ts) {
                stats[k].applied += tally.applied;
                stats[k].vacuous += tally.vacuous;
                stats[k].violations += tally.violations.len();
                if tally.violations.is_empty() {
                    continue;
                }
                let product = analyses[i].instance.product(&analyses[j].instance)?;
                let vector = Analysis::new(&product)
                    .map(|a| a.vector)
                    .unwrap_or_default();
                for why in &tally.violations {
                    let detail = format!("pair ({i}, {j}): {why}");
                    violations.push(CounterexampleRecord::new(
                        &rules[k].id,
                        product.clone(),
                        vector,
                        detail,
                    )?);
                }
            }
        }
    }

    violations.sort_by(|a, b| {
        (&a.id, &a.canonical_hash, &a.detail).cmp(&(&b.id, &b.canonical_hash, &b.detail))
    });
    Ok(SweepReport {
        config: config.clone(),
        instances_checked: instance_count,
        discrete_checked: discrete_count,
        pairs_checked,
        complete,
        rules: stats,
        violations,
    })
}
