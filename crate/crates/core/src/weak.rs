//! The derived topologies of a topologized semigroup and how they compare.

use std::fmt;

use crate::algebra::ensure_scan;
use crate::error::{Error, Result};
use crate::order::{Bound, FinitePoset};
use crate::set::{all_subsets, ElementSet};
use crate::topo::FiniteTopology;
use crate::tsl::TopologizedSemigroup;

/// Topology generated by the open subsemigroups.
pub fn law_topology(x: &TopologizedSemigroup) -> FiniteTopology {
    let base: Vec<ElementSet> = x
        .topology()
        .opens()
        .iter()
        .copied()
        .filter(|&u| x.algebra().is_subsemigroup(u))
        .collect();
    FiniteTopology::generate(x.n(), &base).expect("subsets of the carrier")
}

/// Topology generated by the complements of closed subsemigroups.
pub fn zar_topology(x: &TopologizedSemigroup) -> Result<FiniteTopology> {
    let n = x.n();
    let subbase: Vec<ElementSet> = x
        .enumerate_subsemilattices(true)?
        .into_iter()
        .map(|f| f.complement(n))
        .collect();
    FiniteTopology::generate(n, &subbase)
}

/// Initial topology of all continuous homomorphisms into `([0,1], min)`.
///
/// Such a homomorphism has a finite discrete image chain, and its level sets
/// `h⁻¹{≥ t}` are the clopen sets `F` with `xy ∈ F ⇔ x, y ∈ F`. Those sets
/// and their complements form a subbase.
pub fn weak_topology(x: &TopologizedSemigroup) -> FiniteTopology {
    let n = x.n();
    let subbase: Vec<ElementSet> = x
        .clopen_prime_sets()
        .into_iter()
        .flat_map(|f| [f, f.complement(n)])
        .collect();
    FiniteTopology::generate(n, &subbase).expect("subsets of the carrier")
}

/// Non-empty up-directed sets that have a supremum, paired with it.
fn directed_with_sup(poset: &FinitePoset) -> Vec<(ElementSet, usize)> {
    all_subsets(poset.n())
        .filter(|&d| poset.chain_and_directed(d).is_up_directed)
        .filter_map(|d| match poset.bound_extremum(d, Bound::Sup) {
            Ok(Some(s)) => Some((d, s)),
            _ => None,
        })
        .collect()
}

/// Scott topology from the literal definition: upper sets `U` that meet every
/// up-directed set whose supremum lies in `U`.
pub fn scott_topology(poset: &FinitePoset) -> Result<FiniteTopology> {
    ensure_scan(poset.n())?;
    let directed = directed_with_sup(poset);
    let opens: Vec<ElementSet> = all_subsets(poset.n())
        .filter(|&u| poset.is_upper_set(u))
        .filter(|&u| {
            directed
                .iter()
                .all(|&(d, s)| !u.contains(s) || !d.is_disjoint(u))
        })
        .collect();
    FiniteTopology::generate(poset.n(), &opens)
}

/// All upper sets; agrees with [`scott_topology`] on finite posets.
pub fn upper_set_topology(poset: &FinitePoset) -> FiniteTopology {
    FiniteTopology::generate(
        poset.n(),
        &(0..poset.n()).map(|x| poset.up(x)).collect::<Vec<_>>(),
    )
    .expect("cones lie in the carrier")
}

pub fn lawson_topology(poset: &FinitePoset) -> Result<FiniteTopology> {
    let n = poset.n();
    let mut subbase = scott_topology(poset)?.opens().to_vec();
    subbase.extend((0..n).map(|x| poset.up(x).complement(n)));
    FiniteTopology::generate(n, &subbase)
}

pub fn interval_topology(poset: &FinitePoset) -> FiniteTopology {
    let n = poset.n();
    let subbase: Vec<ElementSet> = (0..n)
        .flat_map(|x| [poset.up(x).complement(n), poset.down(x).complement(n)])
        .collect();
    FiniteTopology::generate(n, &subbase).expect("cones lie in the carrier")
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TopologyKind {
    Tau,
    Law,
    Zar,
    Weak,
    Scott,
    Lawson,
    Interval,
}

impl TopologyKind {
    pub const ALL: [TopologyKind; 7] = [
        TopologyKind::Tau,
        TopologyKind::Law,
        TopologyKind::Zar,
        TopologyKind::Weak,
        TopologyKind::Scott,
        TopologyKind::Lawson,
        TopologyKind::Interval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TopologyKind::Tau => "tau",
            TopologyKind::Law => "law",
            TopologyKind::Zar => "zar",
            TopologyKind::Weak => "weak",
            TopologyKind::Scott => "scott",
            TopologyKind::Lawson => "lawson",
            TopologyKind::Interval => "interval",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(name))
    }

    /// Whether the topology comes from the natural order alone.
    pub fn is_order_based(self) -> bool {
        matches!(
            self,
            TopologyKind::Scott | TopologyKind::Lawson | TopologyKind::Interval
        )
    }
}

impl fmt::Display for TopologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The seven topologies of one instance; the order-based ones exist only for
/// semilattices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TopologyBundle {
    pub tau: FiniteTopology,
    pub law: FiniteTopology,
    pub zar: FiniteTopology,
    pub weak: FiniteTopology,
    pub scott: Option<FiniteTopology>,
    pub lawson: Option<FiniteTopology>,
    pub interval: Option<FiniteTopology>,
}

impl TopologyBundle {
    pub fn derive(x: &TopologizedSemigroup) -> Result<Self> {
        let (scott, lawson, interval) = if x.is_semilattice() {
            let poset = x.natural_order()?;
            let scott = scott_topology(&poset)?;
            if scott != upper_set_topology(&poset) {
                return Err(Error::BundleInvariant(
                    "scott differs from the upper-set topology".into(),
                ));
            }
            (
                Some(scott),
                Some(lawson_topology(&poset)?),
                Some(interval_topology(&poset)),
            )
        } else {
            (None, None, None)
        };
        let bundle = TopologyBundle {
            tau: x.topology().clone(),
            law: law_topology(x),
            zar: zar_topology(x)?,
            weak: weak_topology(x),
            scott,
            lawson,
            interval,
        };
        bundle.validate()?;
        Ok(bundle)
    }

    pub fn get(&self, kind: TopologyKind) -> Option<&FiniteTopology> {
        match kind {
            TopologyKind::Tau => Some(&self.tau),
            TopologyKind::Law => Some(&self.law),
            TopologyKind::Zar => Some(&self.zar),
            TopologyKind::Weak => Some(&self.weak),
            TopologyKind::Scott => self.scott.as_ref(),
            TopologyKind::Lawson => self.lawson.as_ref(),
            TopologyKind::Interval => self.interval.as_ref(),
        }
    }

    /// `Some(a ⊆ b)` when both topologies exist.
    pub fn includes(&self, a: TopologyKind, b: TopologyKind) -> Option<bool> {
        Some(self.get(a)?.is_coarser_than(self.get(b)?))
    }

    fn validate(&self) -> Result<()> {
        use TopologyKind::*;
        let required = [
            (Weak, Law),
            (Law, Tau),
            (Weak, Zar),
            (Zar, Tau),
            (Interval, Lawson),
            (Scott, Lawson),
        ];
        for (a, b) in required {
            if self.includes(a, b) == Some(false) {
                return Err(Error::BundleInvariant(format!(
                    "{a} is not contained in {b}"
                )));
            }
        }
        Ok(())
    }
}

/// All seven topologies, the inclusion matrix and the three weakness flags.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TopologyComparison {
    pub bundle: TopologyBundle,
    /// `matrix[i][j]` is `Some(Tᵢ ⊆ Tⱼ)` in [`TopologyKind::ALL`] order.
    pub matrix: [[Option<bool>; 7]; 7],
    pub weak_circ: bool,
    pub weak_bullet: bool,
    pub i_weak: bool,
}

pub fn topology_comparison(x: &TopologizedSemigroup) -> Result<TopologyComparison> {
    let bundle = TopologyBundle::derive(x)?;
    let mut matrix = [[None; 7]; 7];
    for (i, &a) in TopologyKind::ALL.iter().enumerate() {
        for (j, &b) in TopologyKind::ALL.iter().enumerate() {
            matrix[i][j] = bundle.includes(a, b);
        }
    }
    Ok(TopologyComparison {
        weak_circ: bundle.law == bundle.tau,
        weak_bullet: bundle.zar == bundle.tau,
        i_weak: bundle.weak == bundle.tau,
        bundle,
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::natural_order;
    use crate::standard;
    use crate::tsl::ChainHom;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn sets(xss: &[&[usize]]) -> Vec<ElementSet> {
        xss.iter().map(|xs| set(xs)).collect()
    }

    fn sierpinski() -> TopologizedSemigroup {
        let t = FiniteTopology::from_opens(2, &sets(&[&[], &[1], &[0, 1]])).unwrap();
        TopologizedSemigroup::new(standard::chain(2), t).unwrap()
    }

    fn group() -> TopologizedSemigroup {
        TopologizedSemigroup::discrete(standard::two_element_group())
    }

    // Generation from the fibers of every continuous chain homomorphism.
    fn weak_from_homs(x: &TopologizedSemigroup) -> FiniteTopology {
        let subbase: Vec<ElementSet> = x
            .enumerate_chain_homs(x.n())
            .unwrap()
            .iter()
            .map(ChainHom::normalized)
            .flat_map(|h| h.fibers())
            .collect();
        FiniteTopology::generate(x.n(), &subbase).unwrap()
    }

    #[test]
    fn group_example() {
        let g = group();
        assert_eq!(law_topology(&g).opens(), sets(&[&[], &[0], &[0, 1]]));
        assert_eq!(
            zar_topology(&g).unwrap().opens(),
            sets(&[&[], &[1], &[0, 1]])
        );
        assert_eq!(weak_topology(&g), FiniteTopology::indiscrete(2));
        let c = topology_comparison(&g).unwrap();
        assert_eq!(c.bundle.scott, None);
        assert_eq!(
            c.bundle.includes(TopologyKind::Law, TopologyKind::Zar),
            Some(false)
        );
        assert_eq!(
            c.bundle.includes(TopologyKind::Zar, TopologyKind::Law),
            Some(false)
        );
        assert!(!c.weak_circ && !c.weak_bullet && !c.i_weak);
    }

    #[test]
    fn linear_law_is_tau() {
        for t in [
            FiniteTopology::indiscrete(3),
            FiniteTopology::discrete(3),
            FiniteTopology::generate(3, &sets(&[&[0, 1], &[1, 2]])).unwrap(),
        ] {
            let x = TopologizedSemigroup::new(standard::chain(3), t.clone()).unwrap();
            assert_eq!(law_topology(&x), t);
        }
    }

    #[test]
    fn sierpinski_values() {
        let s = sierpinski();
        assert_eq!(law_topology(&s), *s.topology());
        assert_eq!(zar_topology(&s).unwrap(), *s.topology());
        assert_eq!(weak_topology(&s), FiniteTopology::indiscrete(2));
        let c = topology_comparison(&s).unwrap();
        assert!(c.weak_circ && c.weak_bullet && !c.i_weak);
        assert_eq!(c.bundle.lawson, Some(FiniteTopology::discrete(2)));
        assert_eq!(
            c.bundle.includes(TopologyKind::Lawson, TopologyKind::Zar),
            Some(false)
        );
    }

    #[test]
    fn discrete_values() {
        let d = TopologizedSemigroup::discrete(standard::chain(2));
        let c = topology_comparison(&d).unwrap();
        let disc = FiniteTopology::discrete(2);
        for k in [
            TopologyKind::Tau,
            TopologyKind::Law,
            TopologyKind::Zar,
            TopologyKind::Weak,
            TopologyKind::Lawson,
            TopologyKind::Interval,
        ] {
            assert_eq!(c.bundle.get(k), Some(&disc), "{k}");
        }
        assert_eq!(
            c.bundle.scott.as_ref().unwrap().opens(),
            sets(&[&[], &[1], &[0, 1]])
        );
        let diamond = TopologizedSemigroup::discrete(standard::diamond());
        assert_eq!(weak_topology(&diamond), FiniteTopology::discrete(4));
        assert_eq!(zar_topology(&diamond).unwrap(), FiniteTopology::discrete(4));
    }

    #[test]
    fn weak_matches_hom_fibers() {
        let mut instances = vec![
            sierpinski(),
            group(),
            TopologizedSemigroup::discrete(standard::diamond()),
        ];
        for sb in all_subsets(3) {
            let t = FiniteTopology::generate(3, &[sb, set(&[2])]).unwrap();
            instances.push(TopologizedSemigroup::new(standard::chain(3), t.clone()).unwrap());
            instances.push(TopologizedSemigroup::new(standard::left_zero(3), t).unwrap());
        }
        for x in &instances {
            assert_eq!(weak_topology(x), weak_from_homs(x), "{x:?}");
        }
    }

    #[test]
    fn scott_examples() {
        let c2 = FinitePoset::chain(2);
        assert_eq!(
            scott_topology(&c2).unwrap().opens(),
            sets(&[&[], &[1], &[0, 1]])
        );
        let d = natural_order(&standard::diamond()).unwrap();
        assert_eq!(
            scott_topology(&d).unwrap().opens(),
            sets(&[&[], &[3], &[1, 3], &[2, 3], &[1, 2, 3], &[0, 1, 2, 3]])
        );
        assert_eq!(
            scott_topology(&FinitePoset::antichain(2)).unwrap(),
            FiniteTopology::discrete(2)
        );
    }

    #[test]
    fn lawson_interval_examples() {
        assert_eq!(
            lawson_topology(&FinitePoset::chain(2)).unwrap(),
            FiniteTopology::discrete(2)
        );
        let d = natural_order(&standard::diamond()).unwrap();
        assert_eq!(interval_topology(&d), FiniteTopology::discrete(4));
        assert_eq!(lawson_topology(&d).unwrap(), FiniteTopology::discrete(4));
        let one = FinitePoset::chain(1);
        assert_eq!(interval_topology(&one), FiniteTopology::discrete(1));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in TopologyKind::ALL {
            assert_eq!(TopologyKind::parse(k.name()), Some(k));
        }
        assert_eq!(TopologyKind::parse("LAW"), Some(TopologyKind::Law));
        assert_eq!(TopologyKind::parse("nope"), None);
    }
}
