//! Audits of derived topologies along homomorphisms, subsemigroups and products.

use std::fmt;

use crate::error::Result;
use crate::set::ElementSet;
use crate::topo::FiniteTopology;
use crate::tsl::{ContinuousHom, TopologizedSemigroup};
use crate::weak::{topology_comparison, TopologyBundle};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClauseResult {
    Passed,
    Failed(String),
    NotApplicable,
}

impl ClauseResult {
    pub fn is_failed(&self) -> bool {
        matches!(self, ClauseResult::Failed(_))
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, ClauseResult::NotApplicable)
    }

    fn from_failure(failure: Option<String>) -> Self {
        failure.map_or(ClauseResult::Passed, ClauseResult::Failed)
    }
}

impl fmt::Display for ClauseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClauseResult::Passed => f.write_str("pass"),
            ClauseResult::Failed(why) => write!(f, "FAIL ({why})"),
            ClauseResult::NotApplicable => f.write_str("n/a"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctorialReport {
    pub weak_continuity: ClauseResult,
    pub law_openness_if_open: ClauseResult,
    pub zar_closedness_if_perfect: ClauseResult,
    pub zar_embedding_if_embedding: ClauseResult,
}

impl FunctorialReport {
    pub fn clauses(&self) -> [(&'static str, &ClauseResult); 4] {
        [
            ("weak_continuity", &self.weak_continuity),
            ("law_openness_if_open", &self.law_openness_if_open),
            ("zar_closedness_if_perfect", &self.zar_closedness_if_perfect),
            (
                "zar_embedding_if_embedding",
                &self.zar_embedding_if_embedding,
            ),
        ]
    }

    pub fn failures(&self) -> Vec<String> {
        self.clauses()
            .iter()
            .filter_map(|(name, c)| match c {
                ClauseResult::Failed(why) => Some(format!("{name}: {why}")),
                _ => None,
            })
            .collect()
    }
}

/// The topology on `n` points induced by `map` from `target`.
fn pullback(n: usize, target: &FiniteTopology, map: &[usize]) -> Result<FiniteTopology> {
    let preimages: Vec<ElementSet> = target
        .opens()
        .iter()
        .map(|&v| (0..n).filter(|&x| v.contains(map[x])).collect())
        .collect();
    FiniteTopology::generate(n, &preimages)
}

/// Re-checks continuity, openness, closedness and embedding of `h` in the
/// derived topologies of its source and target.
pub fn functorial_audit(h: &ContinuousHom) -> Result<FunctorialReport> {
    let src = TopologyBundle::derive(h.source())?;
    let dst = TopologyBundle::derive(h.target())?;
    functorial_audit_with(h, &src, &dst)
}

pub(crate) fn functorial_audit_with(
    h: &ContinuousHom,
    src: &TopologyBundle,
    dst: &TopologyBundle,
) -> Result<FunctorialReport> {
    let map = h.map();
    let mut broken = Vec::new();
    for (name, a, b) in [
        ("law", &src.law, &dst.law),
        ("zar", &src.zar, &dst.zar),
        ("weak", &src.weak, &dst.weak),
    ] {
        if let Some(u) = a.continuity_failure(b, map) {
            broken.push(format!("preimage of {name}-open {u} is not open"));
        }
    }
    let weak_continuity =
        ClauseResult::from_failure((!broken.is_empty()).then(|| broken.join("; ")));

    let law_openness_if_open = if h.is_open_map() {
        ClauseResult::from_failure(
            (!src.law.is_open_map(&dst.law, map))
                .then(|| "image of a law-open set is not law-open".to_string()),
        )
    } else {
        ClauseResult::NotApplicable
    };

    let zar_closedness_if_perfect = if h.is_closed_map() {
        ClauseResult::from_failure(
            (!src.zar.is_closed_map(&dst.zar, map))
                .then(|| "image of a zar-closed set is not zar-closed".to_string()),
        )
    } else {
        ClauseResult::NotApplicable
    };

    let zar_embedding_if_embedding = if h.is_embedding() && h.target().is_subtopological()? {
        let induced = pullback(h.source().n(), &dst.zar, map)?;
        ClauseResult::from_failure((induced != src.zar).then(|| {
            format!(
                "zar topology {:?} differs from the induced {:?}",
                src.zar.opens(),
                induced.opens()
            )
        }))
    } else {
        ClauseResult::NotApplicable
    };

    Ok(FunctorialReport {
        weak_continuity,
        law_openness_if_open,
        zar_closedness_if_perfect,
        zar_embedding_if_embedding,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductReport {
    pub i_weak: ClauseResult,
    pub weak_circ: ClauseResult,
    pub weak_bullet: ClauseResult,
    /// Zar of the product against the product of the Zar topologies.
    pub zar_product: ClauseResult,
    /// Subsemigroups of a product of linear factors are weak° and weak•.
    pub linear_subsemigroups: ClauseResult,
}

impl ProductReport {
    pub fn clauses(&self) -> [(&'static str, &ClauseResult); 5] {
        [
            ("i_weak", &self.i_weak),
            ("weak_circ", &self.weak_circ),
            ("weak_bullet", &self.weak_bullet),
            ("zar_product", &self.zar_product),
            ("linear_subsemigroups", &self.linear_subsemigroups),
        ]
    }

    pub fn failures(&self) -> Vec<String> {
        self.clauses()
            .iter()
            .filter_map(|(name, c)| match c {
                ClauseResult::Failed(why) => Some(format!("{name}: {why}")),
                _ => None,
            })
            .collect()
    }
}

/// Separation of `x` by Zar neighborhoods against τ neighborhoods, with
/// completeness and shift continuity: the hypotheses of the Zar product check.
fn zar_product_applies(x: &TopologizedSemigroup, zar: &FiniteTopology) -> Result<bool> {
    if !x.is_semilattice() || !x.is_semitopological() || !x.order_profile()?.complete {
        return Ok(false);
    }
    Ok(crate::props::pair_separated(zar, x.topology()))
}

/// Inheritance of the three weakness flags by `x × y`, the Zar product
/// identity, and the linear product clause.
pub fn product_audit(x: &TopologizedSemigroup, y: &TopologizedSemigroup) -> Result<ProductReport> {
    let p = x.product(y)?;
    let cx = topology_comparison(x)?;
    let cy = topology_comparison(y)?;
    let cp = topology_comparison(&p)?;
    let inherit = |fx: bool, fy: bool, fp: bool, name: &str| {
        if fx && fy {
            ClauseResult::from_failure(
                (!fp).then(|| format!("both factors are {name} but the product is not")),
            )
        } else {
            ClauseResult::NotApplicable
        }
    };
    let i_weak = inherit(cx.i_weak, cy.i_weak, cp.i_weak, "i_weak");
    let weak_circ = inherit(cx.weak_circ, cy.weak_circ, cp.weak_circ, "weak_circ");
    let weak_bullet = inherit(
        cx.weak_bullet,
        cy.weak_bullet,
        cp.weak_bullet,
        "weak_bullet",
    );

    let zar_product =
        if zar_product_applies(x, &cx.bundle.zar)? && zar_product_applies(y, &cy.bundle.zar)? {
            let expected = cx.bundle.zar.product(&cy.bundle.zar)?;
            ClauseResult::from_failure((cp.bundle.zar != expected).then(|| {
                format!(
                    "zar of the product {:?} differs from {:?}",
                    cp.bundle.zar.opens(),
                    expected.opens()
                )
            }))
        } else {
            ClauseResult::NotApplicable
        };

    let linear_subsemigroups = if x.algebra().is_linear() && y.algebra().is_linear() {
        let mut bad = None;
        for s in p
            .algebra()
            .subsemigroups()?
            .into_iter()
            .filter(|s| !s.is_empty())
        {
            let c = topology_comparison(&p.restrict(s)?)?;
            if !(c.weak_circ && c.weak_bullet) {
                bad = Some(format!(
                    "subsemigroup {s} of the product is not both weak_circ and weak_bullet"
                ));
                break;
            }
        }
        ClauseResult::from_failure(bad)
    } else {
        ClauseResult::NotApplicable
    };

    Ok(ProductReport {
        i_weak,
        weak_circ,
        weak_bullet,
        zar_product,
        linear_subsemigroups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;
    use crate::tsl::enumerate_continuous_homs;

    fn sierpinski() -> TopologizedSemigroup {
        let t = FiniteTopology::from_opens(
            2,
            &[
                ElementSet::EMPTY,
                ElementSet::singleton(1),
                ElementSet::full(2),
            ],
        )
        .unwrap();
        TopologizedSemigroup::new(standard::chain(2), t).unwrap()
    }

    #[test]
    fn constant_hom_to_singleton() {
        let d2 = TopologizedSemigroup::discrete(standard::chain(2));
        let one = TopologizedSemigroup::discrete(standard::chain(1));
        let h = ContinuousHom::new(d2, one, vec![0, 0]).unwrap();
        let r = functorial_audit(&h).unwrap();
        assert!(r.failures().is_empty());
        assert_eq!(r.weak_continuity, ClauseResult::Passed);
    }

    #[test]
    fn unit_into_group_embedding() {
        let one = TopologizedSemigroup::discrete(standard::chain(1));
        let g = TopologizedSemigroup::discrete(standard::two_element_group());
        let h = ContinuousHom::new(one, g, vec![0]).unwrap();
        let r = functorial_audit(&h).unwrap();
        assert_eq!(r.zar_embedding_if_embedding, ClauseResult::Passed);
        assert!(r.failures().is_empty());
    }

    #[test]
    fn diamond_onto_chain() {
        let d = TopologizedSemigroup::discrete(standard::diamond());
        let c = TopologizedSemigroup::discrete(standard::chain(2));
        // indicator of the up-set of a
        let h = ContinuousHom::new(d, c, vec![0, 1, 0, 1]).unwrap();
        let r = functorial_audit(&h).unwrap();
        assert_eq!(r.weak_continuity, ClauseResult::Passed);
        assert!(r.failures().is_empty());
    }

    #[test]
    fn all_small_homs_pass() {
        let xs = [
            sierpinski(),
            TopologizedSemigroup::discrete(standard::chain(2)),
            TopologizedSemigroup::new(standard::chain(2), FiniteTopology::indiscrete(2)).unwrap(),
            TopologizedSemigroup::discrete(standard::two_element_group()),
        ];
        for a in &xs {
            for b in &xs {
                for h in enumerate_continuous_homs(a, b).unwrap() {
                    assert!(functorial_audit(&h).unwrap().failures().is_empty());
                }
            }
        }
    }

    #[test]
    fn product_examples() {
        let d2 = TopologizedSemigroup::discrete(standard::chain(2));
        let r = product_audit(&d2, &d2).unwrap();
        assert_eq!(r.i_weak, ClauseResult::Passed);
        assert_eq!(r.weak_circ, ClauseResult::Passed);
        assert_eq!(r.weak_bullet, ClauseResult::Passed);
        assert_eq!(r.zar_product, ClauseResult::Passed);

        let s = sierpinski();
        let r = product_audit(&s, &s).unwrap();
        assert_eq!(r.weak_circ, ClauseResult::Passed);
        assert_eq!(r.i_weak, ClauseResult::NotApplicable);
        assert!(r.failures().is_empty());

        let one = TopologizedSemigroup::discrete(standard::chain(1));
        let r = product_audit(&s, &one).unwrap();
        assert!(r.failures().is_empty());
    }
}
