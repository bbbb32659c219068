//! Finite topologies stored as sorted lists of open sets.
//!
//! Every finite topology is determined by the minimal open neighborhood
//! `N(x)` of each point, so most queries go through that table instead of
//! scanning the opens.

use std::collections::HashSet;

use crate::error::{Error, Result, TopologyDefect};
use crate::order::Relation;
use crate::set::{ElementSet, MAX_BITS};

/// Largest number of open sets a topology may have before construction bails out.
pub const MAX_OPENS: usize = 1 << 22;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FiniteTopology {
    n: usize,
    opens: Vec<ElementSet>,
    nbhd: Vec<ElementSet>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Hull {
    Closure,
    Interior,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub discrete: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct CenteredReport {
    pub is_centered: bool,
    pub total_intersection: ElementSet,
}

fn check_carrier(n: usize) -> Result<()> {
    if n == 0 || n > MAX_BITS {
        Err(Error::CarrierSize { n, max: MAX_BITS })
    } else {
        Ok(())
    }
}

fn check_within(s: ElementSet, n: usize) -> Result<()> {
    if s.within(n) {
        Ok(())
    } else {
        Err(Error::OutOfCarrier { set: s, n })
    }
}

impl FiniteTopology {
    /// Builds the topology whose minimal neighborhoods are `nbhd`.
    ///
    /// Caller guarantees `x ∈ nbhd[x]` and `y ∈ nbhd[x] ⇒ nbhd[y] ⊆ nbhd[x]`.
    fn from_nbhds(nbhd: Vec<ElementSet>) -> Result<Self> {
        let n = nbhd.len();
        let mut seen: HashSet<ElementSet> = HashSet::new();
        seen.insert(ElementSet::EMPTY);
        let mut opens = vec![ElementSet::EMPTY];
        let mut distinct: Vec<ElementSet> = nbhd.clone();
        distinct.sort();
        distinct.dedup();
        for &u in &distinct {
            let len = opens.len();
            for i in 0..len {
                let v = opens[i] | u;
                if seen.insert(v) {
                    if opens.len() >= MAX_OPENS {
                        return Err(Error::TooLarge {
                            what: "number of open sets",
                            limit: MAX_OPENS,
                        });
                    }
                    opens.push(v);
                }
            }
        }
        opens.sort_unstable();
        Ok(FiniteTopology { n, opens, nbhd })
    }

    /// The smallest topology on `0..n` containing every set of `subbase`.
    pub fn generate(n: usize, subbase: &[ElementSet]) -> Result<Self> {
        check_carrier(n)?;
        for &s in subbase {
            check_within(s, n)?;
        }
        let full = ElementSet::full(n);
        let nbhd = (0..n)
            .map(|x| {
                subbase
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(full, |acc, &s| acc & s)
            })
            .collect();
        Self::from_nbhds(nbhd)
    }

    /// Validates an explicit family of open sets. Nothing is added.
    pub fn from_opens(n: usize, opens: &[ElementSet]) -> Result<Self> {
        check_carrier(n)?;
        for &s in opens {
            check_within(s, n)?;
        }
        let mut sorted = opens.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotATopology(TopologyDefect::Duplicate(w[0])));
        }
        let has = |s: ElementSet| sorted.binary_search(&s).is_ok();
        if !has(ElementSet::full(n)) {
            return Err(Error::NotATopology(TopologyDefect::MissingFull));
        }
        if !has(ElementSet::EMPTY) {
            return Err(Error::NotATopology(TopologyDefect::MissingEmpty));
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if !has(a | b) {
                    return Err(Error::NotATopology(TopologyDefect::MissingUnion(a, b)));
                }
                if !has(a & b) {
                    return Err(Error::NotATopology(TopologyDefect::MissingIntersection(
                        a, b,
                    )));
                }
            }
        }
        let nbhd = (0..n)
            .map(|x| {
                sorted
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(ElementSet::full(n), |acc, &u| acc & u)
            })
            .collect();
        Ok(FiniteTopology {
            n,
            opens: sorted,
            nbhd,
        })
    }

    /// The Alexandrov topology of a preorder: opens are the up-closed sets,
    /// so `N(x) = {y : x ⊑ y}`.
    pub fn from_preorder(rel: &Relation) -> Result<Self> {
        check_carrier(rel.n())?;
        if !rel.is_preorder() {
            return Err(Error::NotAPartialOrder("not a preorder".into()));
        }
        Self::from_nbhds(rel.rows().to_vec())
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_nbhds((0..n).map(ElementSet::singleton).collect()).expect("discrete topology")
    }

    pub fn indiscrete(n: usize) -> Self {
        FiniteTopology {
            n,
            opens: vec![ElementSet::EMPTY, ElementSet::full(n)],
            nbhd: vec![ElementSet::full(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Open sets, ascending by bitmask.
    pub fn opens(&self) -> &[ElementSet] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Closed sets, ascending by bitmask.
    pub fn closed_sets(&self) -> Vec<ElementSet> {
        let mut v: Vec<_> = self.opens.iter().map(|u| u.complement(self.n)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_open(&self, s: ElementSet) -> bool {
        s.within(self.n) && self.interior(s) == s
    }

    pub fn is_closed(&self, s: ElementSet) -> bool {
        s.within(self.n) && self.closure(s) == s
    }

    /// Smallest open set containing `x`.
    pub fn nbhd(&self, x: usize) -> ElementSet {
        self.nbhd[x]
    }

    pub fn nbhds(&self) -> &[ElementSet] {
        &self.nbhd
    }

    /// Smallest open set containing `s`.
    pub fn open_hull(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .fold(ElementSet::EMPTY, |acc, x| acc | self.nbhd[x])
    }

    pub fn hull(&self, s: ElementSet, mode: Hull) -> ElementSet {
        match mode {
            Hull::Closure => self.closure(s),
            Hull::Interior => self.interior(s),
        }
    }

    pub fn closure(&self, s: ElementSet) -> ElementSet {
        (0..self.n)
            .filter(|&x| !self.nbhd[x].is_disjoint(s))
            .collect()
    }

    pub fn interior(&self, s: ElementSet) -> ElementSet {
        (0..self.n).filter(|&x| self.nbhd[x].is_subset(s)).collect()
    }

    pub fn separation_profile(&self) -> SeparationProfile {
        let n = self.n;
        let t0 = (0..n).all(|x| (x + 1..n).all(|y| self.nbhd[x] != self.nbhd[y]));
        let t1 = (0..n).all(|x| self.closure(ElementSet::singleton(x)) == ElementSet::singleton(x));
        let t2 = (0..n).all(|x| (x + 1..n).all(|y| self.nbhd[x].is_disjoint(self.nbhd[y])));
        let discrete = (0..n).all(|x| self.nbhd[x] == ElementSet::singleton(x));
        SeparationProfile {
            t0,
            t1,
            t2,
            discrete,
        }
    }

    pub fn is_discrete(&self) -> bool {
        self.separation_profile().discrete
    }

    /// `x ⊑ y` iff `x` lies in the closure of `{y}`.
    pub fn specialization_preorder(&self) -> Relation {
        Relation::from_rows(self.nbhd.clone())
    }

    /// Trace topology on `s`, re-indexed onto `0..|s|` in ascending order.
    pub fn subspace(&self, s: ElementSet) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        check_within(s, self.n)?;
        Self::from_nbhds(s.iter().map(|x| (self.nbhd[x] & s).compress(s)).collect())
    }

    /// Product topology; the pair `(i, j)` gets index `i * other.n() + j`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let m = other.n;
        let size = self.n * m;
        if size > MAX_BITS {
            return Err(Error::TooLarge {
                what: "product carrier",
                limit: MAX_BITS,
            });
        }
        let nbhd = (0..size)
            .map(|p| {
                let (i, j) = (p / m, p % m);
                let mut out = ElementSet::EMPTY;
                for a in self.nbhd[i] {
                    for b in other.nbhd[j] {
                        out.insert(a * m + b);
                    }
                }
                out
            })
            .collect();
        Self::from_nbhds(nbhd)
    }

    /// True when every open set of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &Self) -> bool {
        self.n == other.n && (0..self.n).all(|x| other.nbhd[x].is_subset(self.nbhd[x]))
    }

    /// Image of the topology under the relabeling `x ↦ perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut nbhd = vec![ElementSet::EMPTY; self.n];
        for x in 0..self.n {
            nbhd[perm[x]] = self.nbhd[x].map(|y| perm[y]);
        }
        Self::from_nbhds(nbhd).expect("same size as the original")
    }

    /// Whether `map: self → target` is continuous.
    pub fn is_continuous(&self, target: &Self, map: &[usize]) -> bool {
        self.continuity_failure(target, map).is_none()
    }

    /// A target open set whose preimage is not open, if any.
    pub fn continuity_failure(&self, target: &Self, map: &[usize]) -> Option<ElementSet> {
        for x in 0..self.n {
            let v = target.nbhd[map[x]];
            if !self.nbhd[x].iter().all(|y| v.contains(map[y])) {
                return Some(v);
            }
        }
        None
    }

    /// Whether `map` sends closed sets to closed sets.
    pub fn is_closed_map(&self, target: &Self, map: &[usize]) -> bool {
        self.opens
            .iter()
            .all(|u| target.is_closed(u.complement(self.n).map(|x| map[x])))
    }

    /// Whether `map` sends open sets to open sets.
    pub fn is_open_map(&self, target: &Self, map: &[usize]) -> bool {
        // images of unions are unions of images, so minimal neighborhoods suffice
        self.nbhd.iter().all(|u| target.is_open(u.map(|x| map[x])))
    }
}

/// Whether every nonempty subfamily of `sets` has nonempty intersection.
pub fn centered_family_report(sets: &[ElementSet]) -> Result<CenteredReport> {
    if sets.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let total = sets.iter().skip(1).fold(sets[0], |acc, &s| acc & s);
    // every subfamily intersection is reachable by intersecting one set at a time
    let mut seen: HashSet<ElementSet> = sets.iter().copied().collect();
    let mut stack: Vec<ElementSet> = seen.iter().copied().collect();
    let mut is_centered = !seen.contains(&ElementSet::EMPTY);
    while is_centered {
        let Some(cur) = stack.pop() else { break };
        for &s in sets {
            let next = cur & s;
            if next.is_empty() {
                is_centered = false;
                break;
            }
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Ok(CenteredReport {
        is_centered,
        total_intersection: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::all_subsets;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn sets(xss: &[&[usize]]) -> Vec<ElementSet> {
        xss.iter().map(|xs| set(xs)).collect()
    }

    fn sierpinski() -> FiniteTopology {
        FiniteTopology::from_opens(2, &sets(&[&[], &[1], &[0, 1]])).unwrap()
    }

    #[test]
    fn generate_examples() {
        let t = FiniteTopology::generate(2, &[set(&[0])]).unwrap();
        assert_eq!(t.opens(), sets(&[&[], &[0], &[0, 1]]));
        let t = FiniteTopology::generate(3, &sets(&[&[0, 1], &[1, 2]])).unwrap();
        assert_eq!(t.opens(), sets(&[&[], &[1], &[0, 1], &[1, 2], &[0, 1, 2]]));
        let t = FiniteTopology::generate(2, &[]).unwrap();
        assert_eq!(t, FiniteTopology::indiscrete(2));
    }

    #[test]
    fn generate_rejects_out_of_range() {
        assert_eq!(
            FiniteTopology::generate(2, &[set(&[2])]),
            Err(Error::OutOfCarrier {
                set: set(&[2]),
                n: 2
            })
        );
    }

    #[test]
    fn from_opens_reports_defects() {
        assert_eq!(
            FiniteTopology::from_opens(2, &sets(&[&[], &[1]])),
            Err(Error::NotATopology(TopologyDefect::MissingFull))
        );
        assert_eq!(
            FiniteTopology::from_opens(3, &sets(&[&[], &[0], &[1], &[0, 1, 2]])),
            Err(Error::NotATopology(TopologyDefect::MissingUnion(
                set(&[0]),
                set(&[1])
            )))
        );
        assert_eq!(
            FiniteTopology::from_opens(3, &sets(&[&[], &[0, 1], &[1, 2], &[0, 1, 2]])),
            Err(Error::NotATopology(TopologyDefect::MissingIntersection(
                set(&[0, 1]),
                set(&[1, 2])
            )))
        );
    }

    #[test]
    fn hull_examples() {
        let s = sierpinski();
        assert_eq!(s.closure(set(&[1])), set(&[0, 1]));
        assert_eq!(s.interior(set(&[0])), ElementSet::EMPTY);
        let d = FiniteTopology::discrete(3);
        for a in all_subsets(3) {
            assert_eq!(d.closure(a), a);
        }
    }

    #[test]
    fn separation_examples() {
        let p = sierpinski().separation_profile();
        assert_eq!(
            p,
            SeparationProfile {
                t0: true,
                t1: false,
                t2: false,
                discrete: false
            }
        );
        assert_eq!(
            FiniteTopology::indiscrete(2).separation_profile(),
            SeparationProfile::default()
        );
        let d = FiniteTopology::discrete(4).separation_profile();
        assert!(d.t0 && d.t1 && d.t2 && d.discrete);
    }

    #[test]
    fn specialization_examples() {
        let r = sierpinski().specialization_preorder();
        assert!(r.holds(0, 1) && !r.holds(1, 0));
        let r = FiniteTopology::discrete(3).specialization_preorder();
        assert_eq!(r, Relation::from_fn(3, |x, y| x == y));
        let r = FiniteTopology::indiscrete(3).specialization_preorder();
        assert_eq!(r, Relation::from_fn(3, |_, _| true));
    }

    #[test]
    fn subspace_examples() {
        let s = sierpinski();
        assert_eq!(s.subspace(set(&[1])).unwrap(), FiniteTopology::discrete(1));
        let t = FiniteTopology::generate(3, &sets(&[&[0, 1], &[1, 2]])).unwrap();
        assert_eq!(
            t.subspace(set(&[0, 2])).unwrap(),
            FiniteTopology::discrete(2)
        );
        assert_eq!(t.subspace(t.carrier()).unwrap(), t);
        assert_eq!(t.subspace(ElementSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn product_examples() {
        let s = sierpinski();
        let p = s.product(&s).unwrap();
        // pair (i, j) is index 2i + j: 11 = 3, 10 = 2, 01 = 1
        assert_eq!(
            p.opens(),
            sets(&[&[], &[3], &[1, 3], &[2, 3], &[1, 2, 3], &[0, 1, 2, 3]])
        );
        let d = FiniteTopology::discrete(2);
        assert_eq!(d.product(&d).unwrap(), FiniteTopology::discrete(4));
        let i = FiniteTopology::indiscrete(2);
        let p = i.product(&s).unwrap();
        assert_eq!(p.opens(), sets(&[&[], &[1, 3], &[0, 1, 2, 3]]));
    }

    #[test]
    fn product_slice_is_factor() {
        let s = sierpinski();
        let t = FiniteTopology::generate(3, &sets(&[&[0, 1], &[1, 2]])).unwrap();
        let p = s.product(&t).unwrap();
        for i in 0..2 {
            let slice: ElementSet = (0..3).map(|j| i * 3 + j).collect();
            assert_eq!(p.subspace(slice).unwrap(), t);
        }
    }

    #[test]
    fn centered_examples() {
        let r = centered_family_report(&sets(&[&[0, 1], &[1, 2]])).unwrap();
        assert!(r.is_centered);
        assert_eq!(r.total_intersection, set(&[1]));
        let r = centered_family_report(&sets(&[&[0, 1], &[1, 2], &[0, 2]])).unwrap();
        assert!(!r.is_centered);
        assert_eq!(r.total_intersection, ElementSet::EMPTY);
        let r = centered_family_report(&[ElementSet::full(3)]).unwrap();
        assert!(r.is_centered && r.total_intersection == ElementSet::full(3));
        assert_eq!(centered_family_report(&[]), Err(Error::EmptyFamily));
    }

    #[test]
    fn continuity_matches_preimages() {
        let s = sierpinski();
        let d = FiniteTopology::discrete(2);
        let id = [0, 1];
        assert!(d.is_continuous(&s, &id));
        assert!(!s.is_continuous(&d, &id));
        assert_eq!(s.continuity_failure(&d, &id), Some(set(&[0])));
        assert!(s.is_continuous(&d, &[1, 1]));
    }

    #[test]
    fn coarser_and_permute() {
        let s = sierpinski();
        assert!(FiniteTopology::indiscrete(2).is_coarser_than(&s));
        assert!(s.is_coarser_than(&FiniteTopology::discrete(2)));
        assert!(!FiniteTopology::discrete(2).is_coarser_than(&s));
        let swapped = s.permute(&[1, 0]);
        assert_eq!(swapped.opens(), sets(&[&[], &[0], &[0, 1]]));
    }
}
