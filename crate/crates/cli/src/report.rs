//! Check, sweep and search reports.

use std::fmt::Write;

use serde::Serialize;
use weaklat_core::props::Analysis;
use weaklat_core::verify::{SearchOutcome, SweepReport};
use weaklat_core::{FiniteTopology, PropertyVector, TopologyKind};

use crate::document::InstanceDocument;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub struct CheckReport {
    pub schema_version: u32,
    pub elements: Vec<String>,
    pub operation: &'static str,
    pub canonical_hash: String,
    pub properties: PropertyVector,
    /// Opens of each derived topology as lists of names; `null` when undefined.
    pub topologies: Vec<(String, Option<Vec<Vec<String>>>)>,
    pub inclusion: Inclusion,
}

#[derive(Serialize)]
pub struct Inclusion {
    pub kinds: Vec<&'static str>,
    /// `matrix[i][j]` is whether `kinds[i] ⊆ kinds[j]`.
    pub matrix: Vec<Vec<Option<bool>>>,
}

pub fn opens_by_name(top: &FiniteTopology, names: &[String]) -> Vec<Vec<String>> {
    top.opens()
        .iter()
        .map(|u| u.iter().map(|i| names[i].clone()).collect())
        .collect()
}

impl CheckReport {
    pub fn new(doc: &InstanceDocument, analysis: &Analysis, canonical_hash: String) -> Self {
        let bundle = &analysis.comparison.bundle;
        let topologies = TopologyKind::ALL
            .iter()
            .map(|&k| {
                (
                    k.name().to_string(),
                    bundle.get(k).map(|t| opens_by_name(t, &doc.elements)),
                )
            })
            .collect();
        CheckReport {
            schema_version: REPORT_SCHEMA_VERSION,
            elements: doc.elements.clone(),
            operation: doc.key().name(),
            canonical_hash,
            properties: analysis.vector,
            topologies,
            inclusion: Inclusion {
                kinds: TopologyKind::ALL.iter().map(|k| k.name()).collect(),
                matrix: analysis
                    .comparison
                    .matrix
                    .iter()
                    .map(|row| row.to_vec())
                    .collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&JsonView(self)).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        writeln!(s, "elements   {}", self.elements.join(" ")).unwrap();
        writeln!(s, "operation  {}", self.operation).unwrap();
        writeln!(s, "hash       {}", self.canonical_hash).unwrap();
        s.push('\n');
        let width = self
            .properties
            .iter()
            .map(|(p, _)| p.name().len())
            .max()
            .unwrap_or(0);
        for (p, v) in self.properties.iter() {
            writeln!(s, "{:<width$}  {}", p.name(), flag(v)).unwrap();
        }
        s.push('\n');
        for (kind, opens) in &self.topologies {
            match opens {
                Some(opens) => {
                    let sets: Vec<String> = opens
                        .iter()
                        .map(|o| format!("{{{}}}", o.join(",")))
                        .collect();
                    writeln!(s, "{kind:<8}  {}", sets.join(" ")).unwrap();
                }
                None => writeln!(s, "{kind:<8}  -").unwrap(),
            }
        }
        s.push('\n');
        write!(s, "{:<8}", "⊆").unwrap();
        for k in &self.inclusion.kinds {
            write!(s, " {k:>8}").unwrap();
        }
        s.push('\n');
        for (k, row) in self.inclusion.kinds.iter().zip(&self.inclusion.matrix) {
            write!(s, "{k:<8}").unwrap();
            for &v in row {
                write!(s, " {:>8}", flag(v)).unwrap();
            }
            s.push('\n');
        }
        s
    }
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

// Topologies serialize as an object keyed by kind, in fixed order.
struct JsonView<'a>(&'a CheckReport);

impl Serialize for JsonView<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        struct Tops<'a>(&'a [(String, Option<Vec<Vec<String>>>)]);
        impl Serialize for Tops<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(k, v)?;
                }
                m.end()
            }
        }
        let r = self.0;
        let mut m = s.serialize_map(Some(7))?;
        m.serialize_entry("schema_version", &r.schema_version)?;
        m.serialize_entry("elements", &r.elements)?;
        m.serialize_entry("operation", r.operation)?;
        m.serialize_entry("canonical_hash", &r.canonical_hash)?;
        m.serialize_entry("properties", &r.properties)?;
        m.serialize_entry("topologies", &Tops(&r.topologies))?;
        m.serialize_entry("inclusion", &r.inclusion)?;
        m.end()
    }
}

/// Plain-text sweep report. Contains nothing that depends on timing or
/// thread count.
pub fn sweep_text(report: &SweepReport) -> String {
    let c = &report.config;
    let mut s = String::new();
    writeln!(
        s,
        "sweep n_max={} discrete_n_max={} pair_n_max={}",
        c.n_max, c.discrete_n_max, c.pair_n_max
    )
    .unwrap();
    let width = report
        .rules
        .iter()
        .map(|r| r.id.len())
        .max()
        .unwrap_or(4)
        .max(4);
    writeln!(
        s,
        "{:<width$}  {:>8}  {:>8}  {:>10}  anchor",
        "rule", "applied", "vacuous", "violations"
    )
    .unwrap();
    for r in &report.rules {
        writeln!(
            s,
            "{:<width$}  {:>8}  {:>8}  {:>10}  {}",
            r.id, r.applied, r.vacuous, r.violations, r.anchor
        )
        .unwrap();
    }
    for v in &report.violations {
        writeln!(s, "violation {} {} {}", v.id, v.canonical_hash, v.detail).unwrap();
    }
    writeln!(
        s,
        "checked {} instances, {} discrete instances, {} pairs",
        report.instances_checked, report.discrete_checked, report.pairs_checked
    )
    .unwrap();
    if !report.complete {
        s.push_str("INCOMPLETE: instance budget exhausted\n");
    }
    writeln!(
        s,
        "{} violations / {} instances",
        report.violation_count(),
        report.instances_checked
    )
    .unwrap();
    s
}

pub fn search_text(id: &str, outcome: &SearchOutcome) -> String {
    match outcome {
        SearchOutcome::Found {
            record,
            instances_checked,
        } => {
            let doc = InstanceDocument::with_index_names(record.instance.clone());
            format!(
                "witness for `{id}` at n={} ({instances_checked} instances checked)\ncanonical_hash {}\n{}",
                record.instance.n(),
                record.canonical_hash,
                doc.to_text()
            )
        }
        SearchOutcome::Exhausted {
            n_max,
            instances_checked,
        } => format!("no witness for `{id}`: exhausted up to n_max={n_max} ({instances_checked} instances checked)\n"),
    }
}
