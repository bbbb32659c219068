//! Finite posets and preorders: cones, chains, directed sets, bounds.

use crate::algebra::{ensure_scan, FiniteSemigroup};
use crate::error::{Error, Result};
use crate::set::{all_subsets, ElementSet};

/// A binary relation on `0..n`; `row(x)` is the set of `y` with `x R y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation {
    rows: Vec<ElementSet>,
}

impl Relation {
    pub fn from_rows(rows: Vec<ElementSet>) -> Self {
        Relation { rows }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        Relation {
            rows: (0..n)
                .map(|x| (0..n).filter(|&y| f(x, y)).collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn row(&self, x: usize) -> ElementSet {
        self.rows[x]
    }

    pub fn rows(&self) -> &[ElementSet] {
        &self.rows
    }

    pub fn transpose(&self) -> Relation {
        let n = self.n();
        Relation::from_fn(n, |x, y| self.holds(y, x))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n()).all(|x| self.holds(x, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (x + 1..n).all(|y| !(self.holds(x, y) && self.holds(y, x))))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n()).all(|x| {
            self.rows[x]
                .iter()
                .all(|y| self.rows[y].is_subset(self.rows[x]))
        })
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }
}

/// A partial order on `0..n` with cached principal cones.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinitePoset {
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Bound {
    Sup,
    Inf,
}

/// Chain and directedness flags of a subset.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct ChainFlags {
    pub is_chain: bool,
    pub is_up_directed: bool,
    pub is_down_directed: bool,
}

impl FinitePoset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(relation: Relation) -> Result<Self> {
        if !relation.is_reflexive() {
            return Err(Error::NotAPartialOrder("not reflexive".into()));
        }
        if !relation.is_antisymmetric() {
            return Err(Error::NotAPartialOrder("not antisymmetric".into()));
        }
        if !relation.is_transitive() {
            return Err(Error::NotAPartialOrder("not transitive".into()));
        }
        Ok(Self::from_relation_unchecked(&relation))
    }

    fn from_relation_unchecked(relation: &Relation) -> Self {
        FinitePoset {
            up: relation.rows().to_vec(),
            down: relation.transpose().rows().to_vec(),
        }
    }

    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Self::new(Relation::from_fn(n, leq))
    }

    /// The numeric chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_relation_unchecked(&Relation::from_fn(n, |x, y| x <= y))
    }

    /// `n` pairwise incomparable points.
    pub fn antichain(n: usize) -> Self {
        Self::from_relation_unchecked(&Relation::from_fn(n, |x, y| x == y))
    }

    pub fn n(&self) -> usize {
        self.up.len()
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn relation(&self) -> Relation {
        Relation::from_rows(self.up.clone())
    }

    /// `↑x`
    pub fn up(&self, x: usize) -> ElementSet {
        self.up[x]
    }

    /// `↓x`
    pub fn down(&self, x: usize) -> ElementSet {
        self.down[x]
    }

    /// Union of the principal cones of the members of `s`.
    pub fn cone(&self, s: ElementSet, direction: Direction) -> ElementSet {
        let cones = match direction {
            Direction::Up => &self.up,
            Direction::Down => &self.down,
        };
        s.iter().fold(ElementSet::EMPTY, |acc, x| acc | cones[x])
    }

    pub fn is_upper_set(&self, s: ElementSet) -> bool {
        self.cone(s, Direction::Up) == s
    }

    pub fn is_lower_set(&self, s: ElementSet) -> bool {
        self.cone(s, Direction::Down) == s
    }

    pub fn is_chain(&self, s: ElementSet) -> bool {
        s.iter().all(|x| s.is_subset(self.up[x] | self.down[x]))
    }

    /// The empty set counts as a chain but not as directed.
    pub fn chain_and_directed(&self, s: ElementSet) -> ChainFlags {
        let directed = |cones: &[ElementSet]| {
            !s.is_empty()
                && s.iter()
                    .all(|x| s.iter().all(|y| !(s & cones[x] & cones[y]).is_empty()))
        };
        ChainFlags {
            is_chain: self.is_chain(s),
            is_up_directed: directed(&self.up),
            is_down_directed: directed(&self.down),
        }
    }

    /// Upper (or lower) bounds of `s` in the whole poset.
    pub fn bounds(&self, s: ElementSet, kind: Bound) -> ElementSet {
        let cones = match kind {
            Bound::Sup => &self.up,
            Bound::Inf => &self.down,
        };
        s.iter().fold(self.carrier(), |acc, x| acc & cones[x])
    }

    /// Least upper bound or greatest lower bound of a non-empty set.
    pub fn bound_extremum(&self, s: ElementSet, kind: Bound) -> Result<Option<usize>> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if !s.within(self.n()) {
            return Err(Error::OutOfCarrier {
                set: s,
                n: self.n(),
            });
        }
        let bounds = self.bounds(s, kind);
        let best = match kind {
            Bound::Sup => bounds.iter().find(|&b| bounds.is_subset(self.up[b])),
            Bound::Inf => bounds.iter().find(|&b| bounds.is_subset(self.down[b])),
        };
        Ok(best)
    }

    /// Largest element of `s` (a member of `s` above all of `s`).
    pub fn max_of(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.down[x]))
    }

    pub fn min_of(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.up[x]))
    }

    /// The same carrier with the order reversed.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Every maximal chain, ascending by bitmask.
    pub fn maximal_chains(&self) -> Result<Vec<ElementSet>> {
        ensure_scan(self.n())?;
        let chains: Vec<ElementSet> = all_subsets(self.n())
            .filter(|&c| self.is_chain(c))
            .collect();
        Ok(chains
            .iter()
            .copied()
            .filter(|&c| !chains.iter().any(|&d| d != c && c.is_subset(d)))
            .collect())
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for x in 0..n {
            for y in self.up[x].without(x) {
                let between = (self.up[x] & self.down[y]).without(x).without(y);
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// The natural order of a band: `x ≤ y ⇔ xy = x = yx`.
pub fn natural_order(band: &FiniteSemigroup) -> Result<FinitePoset> {
    let n = band.n();
    if let Some(x) = (0..n).find(|&x| band.mul(x, x) != x) {
        return Err(Error::NotABand(x));
    }
    let rel = Relation::from_fn(n, |x, y| band.mul(x, y) == x && band.mul(y, x) == x);
    // guaranteed to be a partial order for bands
    debug_assert!(rel.is_antisymmetric() && rel.is_transitive());
    Ok(FinitePoset::from_relation_unchecked(&rel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    const BOT: usize = 0;
    const A: usize = 1;
    const B: usize = 2;
    const TOP: usize = 3;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn natural_order_of_min_is_numeric() {
        let p = natural_order(&standard::chain(2)).unwrap();
        assert!(p.leq(0, 1));
        assert!(!p.leq(1, 0));
    }

    #[test]
    fn natural_order_of_diamond() {
        let p = natural_order(&standard::diamond()).unwrap();
        assert!(p.leq(BOT, A) && p.leq(A, TOP) && p.leq(BOT, B) && p.leq(B, TOP));
        assert!(!p.leq(A, B) && !p.leq(B, A));
        assert_eq!(p.covers().len(), 4);
    }

    #[test]
    fn group_is_not_a_band() {
        assert_eq!(
            natural_order(&standard::two_element_group()).unwrap_err(),
            Error::NotABand(1)
        );
    }

    #[test]
    fn cone_examples() {
        let p = natural_order(&standard::diamond()).unwrap();
        assert_eq!(p.cone(set(&[A]), Direction::Up), set(&[A, TOP]));
        assert_eq!(p.cone(ElementSet::EMPTY, Direction::Up), ElementSet::EMPTY);
        let c = FinitePoset::chain(3);
        assert_eq!(c.cone(set(&[1]), Direction::Down), set(&[0, 1]));
    }

    #[test]
    fn chain_and_directed_examples() {
        let p = natural_order(&standard::diamond()).unwrap();
        let f = p.chain_and_directed(set(&[A, B]));
        assert_eq!(
            f,
            ChainFlags {
                is_chain: false,
                is_up_directed: false,
                is_down_directed: false
            }
        );
        assert!(p.chain_and_directed(set(&[BOT, A, TOP])).is_chain);
        let f = p.chain_and_directed(set(&[A, B, TOP]));
        assert!(!f.is_chain && f.is_up_directed);
        let e = p.chain_and_directed(ElementSet::EMPTY);
        assert!(e.is_chain && !e.is_up_directed && !e.is_down_directed);
    }

    #[test]
    fn bound_examples() {
        let p = natural_order(&standard::diamond()).unwrap();
        assert_eq!(
            p.bound_extremum(set(&[A, B]), Bound::Sup).unwrap(),
            Some(TOP)
        );
        assert_eq!(
            p.bound_extremum(set(&[A, B]), Bound::Inf).unwrap(),
            Some(BOT)
        );
        let anti = FinitePoset::antichain(2);
        assert_eq!(anti.bound_extremum(set(&[0, 1]), Bound::Sup).unwrap(), None);
        assert_eq!(
            p.bound_extremum(ElementSet::EMPTY, Bound::Sup),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn meet_is_inf_in_natural_order() {
        let d = standard::diamond();
        let p = natural_order(&d).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(
                    p.bound_extremum(set(&[x, y]), Bound::Inf).unwrap(),
                    Some(d.mul(x, y))
                );
            }
        }
    }

    #[test]
    fn maximal_chains_of_diamond() {
        let p = natural_order(&standard::diamond()).unwrap();
        assert_eq!(
            p.maximal_chains().unwrap(),
            vec![set(&[BOT, A, TOP]), set(&[BOT, B, TOP])]
        );
    }

    #[test]
    fn rejects_non_orders() {
        assert!(FinitePoset::from_leq(2, |_, _| true).is_err());
        assert!(FinitePoset::from_leq(2, |x, y| x < y).is_err());
        // 0 ≤ 1, 1 ≤ 2 without 0 ≤ 2
        assert!(
            FinitePoset::from_leq(3, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 2))
                .is_err()
        );
    }
}
