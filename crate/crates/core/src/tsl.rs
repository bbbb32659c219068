//! Semigroups paired with a topology on the same carrier.

use crate::algebra::{ensure_scan, FiniteSemigroup};
use crate::error::{Error, Result};
use crate::order::{natural_order, Bound, FinitePoset};
use crate::set::{all_subsets, ElementSet};
use crate::standard;
use crate::topo::FiniteTopology;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TopologizedSemigroup {
    algebra: FiniteSemigroup,
    topology: FiniteTopology,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct ContinuityProfile {
    pub topological: bool,
    pub semitopological: bool,
    pub subtopological: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct OrderProfile {
    pub updown_closed: bool,
    pub complete: bool,
    pub chain_compact: bool,
    pub down_chain_compact: bool,
}

/// A continuous homomorphism between two topologized semigroups.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContinuousHom {
    source: TopologizedSemigroup,
    target: TopologizedSemigroup,
    map: Vec<usize>,
}

/// A continuous homomorphism into the discrete chain `({0, …, k-1}, min)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChainHom {
    pub k: usize,
    pub map: Vec<usize>,
}

impl TopologizedSemigroup {
    pub fn new(algebra: FiniteSemigroup, topology: FiniteTopology) -> Result<Self> {
        if algebra.n() != topology.n() {
            return Err(Error::CarrierMismatch {
                left: algebra.n(),
                right: topology.n(),
            });
        }
        Ok(TopologizedSemigroup { algebra, topology })
    }

    pub fn discrete(algebra: FiniteSemigroup) -> Self {
        let topology = FiniteTopology::discrete(algebra.n());
        TopologizedSemigroup { algebra, topology }
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    pub fn algebra(&self) -> &FiniteSemigroup {
        &self.algebra
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn is_semilattice(&self) -> bool {
        self.algebra.is_semilattice()
    }

    /// Same algebra, different topology.
    pub fn with_topology(&self, topology: FiniteTopology) -> Result<Self> {
        Self::new(self.algebra.clone(), topology)
    }

    pub fn natural_order(&self) -> Result<FinitePoset> {
        natural_order(&self.algebra)
    }

    fn require_semilattice(&self) -> Result<FinitePoset> {
        if !self.is_semilattice() {
            return Err(Error::NotASemilattice(
                "operation is not a commutative band".into(),
            ));
        }
        self.natural_order()
    }

    /// Subsemigroup on `s` with the subspace topology, re-indexed onto `0..|s|`.
    pub fn restrict(&self, s: ElementSet) -> Result<Self> {
        Self::new(self.algebra.restrict(s)?, self.topology.subspace(s)?)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.algebra.product(&other.algebra)?,
            self.topology.product(&other.topology)?,
        )
    }

    pub fn permute(&self, perm: &[usize]) -> Self {
        TopologizedSemigroup {
            algebra: self.algebra.permute(perm),
            topology: self.topology.permute(perm),
        }
    }

    fn nbhd_product(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.algebra.mul(x, y));
            }
        }
        out
    }

    /// Joint continuity: `N(x)·N(y) ⊆ N(xy)` for all `x, y`.
    pub fn is_topological(&self) -> bool {
        let t = &self.topology;
        (0..self.n()).all(|x| {
            (0..self.n()).all(|y| {
                self.nbhd_product(t.nbhd(x), t.nbhd(y))
                    .is_subset(t.nbhd(self.algebra.mul(x, y)))
            })
        })
    }

    /// Separate continuity of every left and right shift.
    pub fn is_semitopological(&self) -> bool {
        let t = &self.topology;
        (0..self.n()).all(|a| {
            (0..self.n()).all(|x| {
                let single = ElementSet::singleton(a);
                self.nbhd_product(single, t.nbhd(x))
                    .is_subset(t.nbhd(self.algebra.mul(a, x)))
                    && self
                        .nbhd_product(t.nbhd(x), single)
                        .is_subset(t.nbhd(self.algebra.mul(x, a)))
            })
        })
    }

    /// The closure of every subsemigroup is a subsemigroup.
    pub fn is_subtopological(&self) -> Result<bool> {
        Ok(self
            .algebra
            .subsemigroups()?
            .into_iter()
            .all(|s| self.algebra.is_subsemigroup(self.topology.closure(s))))
    }

    pub fn continuity_profile(&self) -> Result<ContinuityProfile> {
        Ok(ContinuityProfile {
            topological: self.is_topological(),
            semitopological: self.is_semitopological(),
            subtopological: self.is_subtopological()?,
        })
    }

    /// Order-topological flags for a semilattice under its natural order.
    pub fn order_profile(&self) -> Result<OrderProfile> {
        let poset = self.require_semilattice()?;
        ensure_scan(self.n())?;
        let t = &self.topology;
        let updown_closed =
            (0..self.n()).all(|x| t.is_closed(poset.up(x)) && t.is_closed(poset.down(x)));
        Ok(OrderProfile {
            updown_closed,
            complete: is_complete(&poset, t),
            chain_compact: is_chain_compact(&poset, t, t.carrier()),
            down_chain_compact: (0..self.n()).all(|x| is_chain_compact(&poset, t, poset.down(x))),
        })
    }

    /// Subsemigroups, optionally only the closed ones; ascending by bitmask.
    pub fn enumerate_subsemilattices(&self, closed_only: bool) -> Result<Vec<ElementSet>> {
        let mut subs = self.algebra.subsemigroups()?;
        if closed_only {
            subs.retain(|&s| self.topology.is_closed(s));
        }
        Ok(subs)
    }

    /// Clopen sets `F` with `xy ∈ F ⇔ x ∈ F ∧ y ∈ F`, ascending by bitmask.
    ///
    /// These are exactly the sets `h⁻¹{≥ i}` of continuous homomorphisms into
    /// discrete min-chains.
    pub fn clopen_prime_sets(&self) -> Vec<ElementSet> {
        let n = self.n();
        self.topology
            .opens()
            .iter()
            .copied()
            .filter(|&f| self.topology.is_closed(f))
            .filter(|&f| {
                (0..n).all(|x| {
                    (0..n).all(|y| {
                        f.contains(self.algebra.mul(x, y)) == (f.contains(x) && f.contains(y))
                    })
                })
            })
            .collect()
    }

    /// Every continuous homomorphism into the discrete chain on
    /// `min(k_max, n)` points, constants included.
    pub fn enumerate_chain_homs(&self, k_max: usize) -> Result<Vec<ChainHom>> {
        if k_max == 0 {
            return Err(Error::OutOfRange {
                what: "chain length",
                value: 0,
                min: 1,
                max: self.n(),
            });
        }
        let k = k_max.min(self.n());
        let primes = self.clopen_prime_sets();
        let mut out = Vec::new();
        let mut levels = vec![self.topology.carrier()];
        collect_chains(&primes, k, &mut levels, &mut out, self.n());
        out.sort();
        Ok(out)
    }
}

// Each map is determined by the decreasing sequence of its upper level sets.
fn collect_chains(
    primes: &[ElementSet],
    k: usize,
    levels: &mut Vec<ElementSet>,
    out: &mut Vec<ChainHom>,
    n: usize,
) {
    if levels.len() == k {
        let map = (0..n)
            .map(|x| levels.iter().filter(|l| l.contains(x)).count() - 1)
            .collect();
        out.push(ChainHom { k, map });
        return;
    }
    let last = *levels.last().expect("starts with the carrier");
    for &f in primes {
        if f.is_subset(last) {
            levels.push(f);
            collect_chains(primes, k, levels, out, n);
            levels.pop();
        }
    }
}

fn is_complete(poset: &FinitePoset, t: &FiniteTopology) -> bool {
    all_subsets(poset.n())
        .filter(|c| !c.is_empty() && poset.is_chain(*c))
        .all(|c| {
            let closure = t.closure(c);
            let inside = |b: Result<Option<usize>>| matches!(b, Ok(Some(v)) if closure.contains(v));
            inside(poset.bound_extremum(c, Bound::Inf))
                && inside(poset.bound_extremum(c, Bound::Sup))
        })
}

// Chains inside `within` that are closed in the subspace `within`, each
// checked for compactness through its cover by minimal neighborhoods.
fn is_chain_compact(poset: &FinitePoset, t: &FiniteTopology, within: ElementSet) -> bool {
    within
        .subsets()
        .filter(|&c| poset.is_chain(c) && (t.closure(c) & within) == c)
        .all(|c| is_compact(t, c))
}

// A finite cover always is its own finite subcover.
fn is_compact(t: &FiniteTopology, c: ElementSet) -> bool {
    let cover: Vec<ElementSet> = c.iter().map(|x| t.nbhd(x) & c).collect();
    cover.iter().fold(ElementSet::EMPTY, |acc, &u| acc | u) == c
}

impl ContinuousHom {
    pub fn new(
        source: TopologizedSemigroup,
        target: TopologizedSemigroup,
        map: Vec<usize>,
    ) -> Result<Self> {
        source.algebra.check_homomorphism(&target.algebra, &map)?;
        if let Some(u) = source.topology.continuity_failure(&target.topology, &map) {
            return Err(Error::NotContinuous(u));
        }
        Ok(ContinuousHom {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &TopologizedSemigroup {
        &self.source
    }

    pub fn target(&self) -> &TopologizedSemigroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self) -> ElementSet {
        self.map.iter().copied().collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.map.len()
    }

    pub fn is_open_map(&self) -> bool {
        self.source
            .topology
            .is_open_map(&self.target.topology, &self.map)
    }

    pub fn is_closed_map(&self) -> bool {
        self.source
            .topology
            .is_closed_map(&self.target.topology, &self.map)
    }

    /// Injective, and every source open set is the trace of a target open set.
    pub fn is_embedding(&self) -> bool {
        self.is_injective()
            && self.source.topology.nbhds().iter().all(|&u| {
                let img = u.map(|x| self.map[x]);
                (self.target.topology.open_hull(img) & self.image()) == img
            })
    }
}

impl ChainHom {
    /// The map re-indexed onto its image, so that it is onto `0..k'`.
    pub fn normalized(&self) -> ChainHom {
        let image: ElementSet = self.map.iter().copied().collect();
        let map = self
            .map
            .iter()
            .map(|&v| (image & ElementSet::full(v)).len())
            .collect();
        ChainHom {
            k: image.len(),
            map,
        }
    }

    /// Preimages of single chain points, skipping empty ones.
    pub fn fibers(&self) -> Vec<ElementSet> {
        (0..self.k)
            .map(|v| {
                (0..self.map.len())
                    .filter(|&x| self.map[x] == v)
                    .collect::<ElementSet>()
            })
            .filter(|f| !f.is_empty())
            .collect()
    }

    pub fn as_continuous_hom(&self, source: &TopologizedSemigroup) -> Result<ContinuousHom> {
        let target = TopologizedSemigroup::discrete(standard::chain(self.k));
        ContinuousHom::new(source.clone(), target, self.map.clone())
    }
}

/// All continuous homomorphisms between two instances, by exhaustive scan of
/// the `|Y|^|X|` maps. Intended for very small carriers.
pub fn enumerate_continuous_homs(
    source: &TopologizedSemigroup,
    target: &TopologizedSemigroup,
) -> Result<Vec<ContinuousHom>> {
    let (n, m) = (source.n(), target.n());
    let total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > 1 << 20 {
        return Err(Error::TooLarge {
            what: "number of candidate maps",
            limit: 1 << 20,
        });
    }
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    for mut code in 0..total as u64 {
        for slot in map.iter_mut() {
            *slot = (code % m as u64) as usize;
            code /= m as u64;
        }
        if let Ok(h) = ContinuousHom::new(source.clone(), target.clone(), map.clone()) {
            out.push(h);
        }
    }
    Ok(out)
}
