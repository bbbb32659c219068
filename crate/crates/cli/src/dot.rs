//! Graphviz output for orders and topologies.

use std::fmt::Write;

use weaklat_core::{ElementSet, FinitePoset, FiniteTopology};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Hasse diagram, edges pointing upward.
pub fn poset_dot(poset: &FinitePoset, names: &[String]) -> String {
    let mut s = String::from("digraph order {\n  rankdir=BT;\n");
    for (i, name) in names.iter().enumerate().take(poset.n()) {
        writeln!(s, "  n{i} [label={}];", quote(name)).unwrap();
    }
    for (x, y) in poset.covers() {
        writeln!(s, "  n{x} -> n{y};").unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn set_label(set: ElementSet, names: &[String]) -> String {
    if set.is_empty() {
        return "∅".to_string();
    }
    let inner: Vec<&str> = set.iter().map(|i| names[i].as_str()).collect();
    format!("{{{}}}", inner.join(", "))
}

/// The opens ordered by inclusion, drawn as their covering relation.
pub fn topology_dot(top: &FiniteTopology, names: &[String]) -> String {
    let opens = top.opens();
    let mut s = String::from("digraph opens {\n  rankdir=BT;\n");
    for (i, &u) in opens.iter().enumerate() {
        writeln!(s, "  o{i} [label={}];", quote(&set_label(u, names))).unwrap();
    }
    for (i, &a) in opens.iter().enumerate() {
        for (j, &b) in opens.iter().enumerate() {
            if a == b || !a.is_subset(b) {
                continue;
            }
            let between = opens
                .iter()
                .any(|&c| c != a && c != b && a.is_subset(c) && c.is_subset(b));
            if !between {
                writeln!(s, "  o{i} -> o{j};").unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    fn edges(dot: &str) -> usize {
        dot.matches("->").count()
    }

    #[test]
    fn chain_has_one_edge() {
        let dot = poset_dot(&FinitePoset::chain(2), &names(2));
        assert_eq!(edges(&dot), 1);
        assert!(dot.contains("n0 -> n1;"));
    }

    #[test]
    fn diamond_has_four_edges() {
        let leq = |x: usize, y: usize| x == y || x == 0 || y == 3;
        let dot = poset_dot(&FinitePoset::from_leq(4, leq).unwrap(), &names(4));
        assert_eq!(dot.matches("[label=").count(), 4);
        assert_eq!(edges(&dot), 4);
        assert!(!dot.contains("n0 -> n3;"));
    }

    #[test]
    fn sierpinski_opens_form_a_chain() {
        let top = FiniteTopology::generate(2, &[ElementSet::singleton(1)]).unwrap();
        let n = vec!["z".to_string(), "u".to_string()];
        let dot = topology_dot(&top, &n);
        assert_eq!(
            dot,
            "digraph opens {\n  rankdir=BT;\n  o0 [label=\"∅\"];\n  o1 [label=\"{u}\"];\n  o2 [label=\"{z, u}\"];\n  o0 -> o1;\n  o1 -> o2;\n}\n"
        );
    }

    #[test]
    fn names_are_escaped() {
        let dot = poset_dot(&FinitePoset::chain(1), &["a\"b".to_string()]);
        assert!(dot.contains(r#"[label="a\"b"]"#));
    }
}
