//! The textual instance format.
//!
//! ```text
//! {
//!   "schema_version": 1,
//!   "elements": ["z", "u"],
//!   "meet": [
//!     ["z", "z"],
//!     ["z", "u"]
//!   ],
//!   "opens": [[], ["u"], ["z", "u"]]
//! }
//! ```
//!
//! `meet` declares a semilattice; `op` declares any semigroup. Exactly one of
//! the two must be present. Opens are validated as given and never completed.

use std::collections::HashMap;
use std::fmt;

use serde::Deserialize;
use weaklat_core::algebra::{verify_semigroup, verify_semilattice};
use weaklat_core::error::TopologyDefect;
use weaklat_core::{
    ElementSet, Error as CoreError, FiniteSemigroup, FiniteTopology, TopologizedSemigroup,
};

pub const SCHEMA_VERSION: u32 = 1;

/// A parse or validation failure, with the place it was found.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DocumentError {
    pub location: Option<String>,
    pub message: String,
}

impl DocumentError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError {
            location: Some(location.into()),
            message: message.into(),
        }
    }

    fn bare(message: impl Into<String>) -> Self {
        DocumentError {
            location: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            Some(loc) => write!(f, "{loc}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for DocumentError {}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TableKey {
    Meet,
    Op,
}

impl TableKey {
    pub fn name(self) -> &'static str {
        match self {
            TableKey::Meet => "meet",
            TableKey::Op => "op",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    schema_version: u32,
    elements: Vec<String>,
    meet: Option<Vec<Vec<String>>>,
    op: Option<Vec<Vec<String>>>,
    opens: Vec<Vec<String>>,
}

/// A parsed document: element names plus the validated instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InstanceDocument {
    pub elements: Vec<String>,
    pub instance: TopologizedSemigroup,
}

struct Names<'a> {
    index: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn new(elements: &'a [String]) -> Result<Self, DocumentError> {
        if elements.is_empty() {
            return Err(DocumentError::at(
                "elements",
                "at least one element is required",
            ));
        }
        if elements.len() > weaklat_core::set::MAX_BITS {
            return Err(DocumentError::at(
                "elements",
                format!(
                    "{} elements exceed the limit of {}",
                    elements.len(),
                    weaklat_core::set::MAX_BITS
                ),
            ));
        }
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.as_str(), i).is_some() {
                return Err(DocumentError::at(
                    format!("elements[{i}]"),
                    format!("duplicate element `{e}`"),
                ));
            }
        }
        Ok(Names { index })
    }

    fn lookup(
        &self,
        name: &str,
        location: impl FnOnce() -> String,
    ) -> Result<usize, DocumentError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| DocumentError::at(location(), format!("unknown element `{name}`")))
    }
}

fn set_names(s: ElementSet, elements: &[String]) -> String {
    let names: Vec<&str> = s.iter().map(|i| elements[i].as_str()).collect();
    format!("{{{}}}", names.join(", "))
}

/// How opens are read: validated as a topology, or taken as a subbase.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum OpensMode {
    Topology,
    Subbase,
}

pub fn parse_instance(text: &str) -> Result<InstanceDocument, DocumentError> {
    parse_with(text, OpensMode::Topology)
}

pub fn parse_with(text: &str, mode: OpensMode) -> Result<InstanceDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| {
        DocumentError::at(
            format!("line {} column {}", e.line(), e.column()),
            strip_position(&e.to_string()),
        )
    })?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(DocumentError::at(
            "schema_version",
            format!(
                "unsupported version {} (expected {SCHEMA_VERSION})",
                raw.schema_version
            ),
        ));
    }
    let names = Names::new(&raw.elements)?;
    let n = raw.elements.len();
    let (key, rows) = match (raw.meet, raw.op) {
        (Some(t), None) => (TableKey::Meet, t),
        (None, Some(t)) => (TableKey::Op, t),
        (Some(_), Some(_)) => {
            return Err(DocumentError::bare("give either `meet` or `op`, not both"))
        }
        (None, None) => {
            return Err(DocumentError::bare(
                "missing table: expected `meet` or `op`",
            ))
        }
    };
    let k = key.name();
    if rows.len() != n {
        return Err(DocumentError::at(
            k,
            format!("{} rows, expected {n}", rows.len()),
        ));
    }
    let mut table = vec![vec![0usize; n]; n];
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(DocumentError::at(
                format!("{k}[{i}]"),
                format!("{} entries, expected {n}", row.len()),
            ));
        }
        for (j, name) in row.iter().enumerate() {
            table[i][j] = names.lookup(name, || format!("{k}[{i}][{j}]"))?;
        }
    }
    let e = &raw.elements;
    match key {
        TableKey::Meet => {
            let d =
                verify_semilattice(&table).map_err(|err| DocumentError::at(k, err.to_string()))?;
            if let Some(&x) = d.idempotency.first() {
                return Err(DocumentError::at(
                    format!("{k}[{x}][{x}]"),
                    format!("`{}` is not idempotent", e[x]),
                ));
            }
            if let Some(&(x, y)) = d.commutativity.first() {
                return Err(DocumentError::at(
                    format!("{k}[{x}][{y}]"),
                    format!("not commutative: {0}·{1} ≠ {1}·{0}", e[x], e[y]),
                ));
            }
            if let Some(&(x, y, z)) = d.associativity.first() {
                return Err(DocumentError::at(
                    k,
                    format!("not associative at ({}, {}, {})", e[x], e[y], e[z]),
                ));
            }
        }
        TableKey::Op => {
            let d =
                verify_semigroup(&table).map_err(|err| DocumentError::at(k, err.to_string()))?;
            if let Some(&(x, y, z)) = d.associativity.first() {
                return Err(DocumentError::at(
                    k,
                    format!("not associative at ({}, {}, {})", e[x], e[y], e[z]),
                ));
            }
        }
    }
    let algebra =
        FiniteSemigroup::new(&table).map_err(|err| DocumentError::at(k, err.to_string()))?;

    let mut opens = Vec::with_capacity(raw.opens.len());
    for (i, open) in raw.opens.iter().enumerate() {
        let mut s = ElementSet::EMPTY;
        for (j, name) in open.iter().enumerate() {
            let x = names.lookup(name, || format!("opens[{i}][{j}]"))?;
            if s.contains(x) {
                return Err(DocumentError::at(
                    format!("opens[{i}][{j}]"),
                    format!("`{name}` listed twice"),
                ));
            }
            s.insert(x);
        }
        opens.push(s);
    }
    let topology = match mode {
        OpensMode::Subbase => FiniteTopology::generate(n, &opens),
        OpensMode::Topology => FiniteTopology::from_opens(n, &opens),
    }
    .map_err(|err| topology_error(err, &opens, e))?;
    let instance = TopologizedSemigroup::new(algebra, topology)
        .map_err(|err| DocumentError::bare(err.to_string()))?;
    Ok(InstanceDocument {
        elements: raw.elements,
        instance,
    })
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn topology_error(err: CoreError, opens: &[ElementSet], e: &[String]) -> DocumentError {
    let position = |s: ElementSet| opens.iter().position(|&o| o == s).unwrap_or(0);
    match err {
        CoreError::NotATopology(defect) => match defect {
            TopologyDefect::MissingEmpty => DocumentError::at("opens", "missing empty set"),
            TopologyDefect::MissingFull => DocumentError::at("opens", "missing full set"),
            TopologyDefect::MissingUnion(a, b) => DocumentError::at(
                "opens",
                format!(
                    "missing union of opens[{}] and opens[{}]: {}",
                    position(a),
                    position(b),
                    set_names(a | b, e)
                ),
            ),
            TopologyDefect::MissingIntersection(a, b) => DocumentError::at(
                "opens",
                format!(
                    "missing intersection of opens[{}] and opens[{}]: {}",
                    position(a),
                    position(b),
                    set_names(a & b, e)
                ),
            ),
            TopologyDefect::Duplicate(a) => {
                let first = position(a);
                let second = opens.iter().rposition(|&o| o == a).unwrap_or(first);
                DocumentError::at(
                    format!("opens[{second}]"),
                    format!("duplicate of opens[{first}]: {}", set_names(a, e)),
                )
            }
        },
        other => DocumentError::at("opens", other.to_string()),
    }
}

/// Default names `0, 1, …`.
pub fn index_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl InstanceDocument {
    pub fn new(instance: TopologizedSemigroup, elements: Vec<String>) -> Self {
        assert_eq!(instance.n(), elements.len(), "one name per element");
        InstanceDocument { elements, instance }
    }

    pub fn with_index_names(instance: TopologizedSemigroup) -> Self {
        let names = index_names(instance.n());
        Self::new(instance, names)
    }

    pub fn key(&self) -> TableKey {
        if self.instance.is_semilattice() {
            TableKey::Meet
        } else {
            TableKey::Op
        }
    }

    pub fn names_of(&self, s: ElementSet) -> Vec<&str> {
        s.iter().map(|i| self.elements[i].as_str()).collect()
    }

    /// The same document as a JSON value, for embedding in other records.
    pub fn to_value(&self) -> serde_json::Value {
        serde_json::from_str(&self.to_text()).expect("printer emits valid JSON")
    }

    /// Pretty form: one table row per line, every open on one line.
    pub fn to_text(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let list = |items: Vec<&str>| {
            format!(
                "[{}]",
                items.into_iter().map(q).collect::<Vec<_>>().join(", ")
            )
        };
        let n = self.instance.n();
        let alg = self.instance.algebra();
        let rows: Vec<String> = (0..n)
            .map(|x| {
                let row: Vec<&str> = (0..n)
                    .map(|y| self.elements[alg.mul(x, y)].as_str())
                    .collect();
                format!("    {}", list(row))
            })
            .collect();
        let opens: Vec<String> = self
            .instance
            .topology()
            .opens()
            .iter()
            .map(|&u| list(self.names_of(u)))
            .collect();
        let elements: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        format!(
            "{{\n  \"schema_version\": {SCHEMA_VERSION},\n  \"elements\": {},\n  \"{}\": [\n{}\n  ],\n  \"opens\": [{}]\n}}\n",
            list(elements),
            self.key().name(),
            rows.join(",\n"),
            opens.join(", ")
        )
    }
}

pub fn serialize(doc: &InstanceDocument) -> String {
    doc.to_text()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIERPINSKI: &str = r#"{
  "schema_version": 1,
  "elements": ["z", "u"],
  "meet": [
    ["z", "z"],
    ["z", "u"]
  ],
  "opens": [[], ["u"], ["z", "u"]]
}
"#;

    fn with_opens(opens: &str) -> String {
        SIERPINSKI.replace(r#"[[], ["u"], ["z", "u"]]"#, opens)
    }

    #[test]
    fn sierpinski_round_trip() {
        let doc = parse_instance(SIERPINSKI).unwrap();
        assert_eq!(doc.elements, ["z", "u"]);
        assert_eq!(doc.instance.topology().opens().len(), 3);
        assert_eq!(serialize(&doc), SIERPINSKI);
        assert_eq!(parse_instance(&serialize(&doc)).unwrap(), doc);
    }

    #[test]
    fn missing_full_set() {
        let err = parse_instance(&with_opens(r#"[[], ["u"]]"#)).unwrap_err();
        assert_eq!(err.to_string(), "opens: missing full set");
    }

    #[test]
    fn missing_union_is_named() {
        let text = SIERPINSKI
            .replace(r#"["z", "u"]]"#, r#"["z", "u", "v"]]"#)
            .replace(
                r#""elements": ["z", "u"]"#,
                r#""elements": ["z", "u", "v"]"#,
            )
            .replace(
                "    [\"z\", \"z\"],\n    [\"z\", \"u\"]",
                "    [\"z\", \"z\", \"z\"],\n    [\"z\", \"u\", \"z\"],\n    [\"z\", \"z\", \"v\"]",
            )
            .replace(
                r#"[[], ["u"], ["z", "u", "v"]]"#,
                r#"[[], ["u"], ["v"], ["z", "u", "v"]]"#,
            );
        let err = parse_instance(&text).unwrap_err();
        assert_eq!(
            err.to_string(),
            "opens: missing union of opens[1] and opens[2]: {u, v}"
        );
    }

    #[test]
    fn located_errors() {
        let err = parse_instance(&SIERPINSKI.replace(
            r#"["z", "u"]
  ],"#,
            r#"["q", "u"]
  ],"#,
        ))
        .unwrap_err();
        assert_eq!(err.to_string(), "meet[1][0]: unknown element `q`");
        let err = parse_instance(&with_opens(r#"[[], ["w"], ["z", "u"]]"#)).unwrap_err();
        assert_eq!(err.location.as_deref(), Some("opens[1][0]"));
        let err =
            parse_instance(&SIERPINSKI.replace("\"schema_version\": 1", "\"schema_version\": 2"))
                .unwrap_err();
        assert_eq!(err.location.as_deref(), Some("schema_version"));
        let err = parse_instance("{ not json").unwrap_err();
        assert!(err.location.unwrap().starts_with("line 1"));
    }

    #[test]
    fn meet_must_be_a_semilattice() {
        let group = SIERPINSKI.replace(
            "    [\"z\", \"z\"],\n    [\"z\", \"u\"]",
            "    [\"z\", \"u\"],\n    [\"u\", \"z\"]",
        );
        let err = parse_instance(&group).unwrap_err();
        assert_eq!(err.to_string(), "meet[1][1]: `u` is not idempotent");
        let as_op = group.replace("\"meet\"", "\"op\"");
        let doc = parse_instance(&as_op).unwrap();
        assert!(!doc.instance.is_semilattice());
        assert!(serialize(&doc).contains("\"op\""));
    }

    #[test]
    fn subbase_mode_generates() {
        let text = with_opens(r#"[["u"]]"#);
        assert!(parse_instance(&text).is_err());
        let doc = parse_with(&text, OpensMode::Subbase).unwrap();
        assert_eq!(doc, parse_instance(SIERPINSKI).unwrap());
    }
}
