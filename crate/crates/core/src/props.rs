//! Decision procedures for the named properties of an instance.

use std::collections::HashSet;
use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::ensure_scan;
use crate::error::{Error, Result};
use crate::order::{Bound, FinitePoset};
use crate::set::{all_subsets, ElementSet};
use crate::topo::{FiniteTopology, SeparationProfile};
use crate::tsl::{ContinuityProfile, OrderProfile, TopologizedSemigroup};
use crate::weak::{topology_comparison, TopologyComparison};

macro_rules! properties {
    ($($variant:ident => $name:literal,)*) => {
        /// Every property the workbench decides.
        #[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
        pub enum Property {
            $($variant,)*
        }

        impl Property {
            pub const ALL: &'static [Property] = &[$(Property::$variant,)*];
            pub const COUNT: usize = Self::ALL.len();

            pub fn name(self) -> &'static str {
                match self {
                    $(Property::$variant => $name,)*
                }
            }
        }
    };
}

properties! {
    Semilattice => "semilattice",
    Band => "band",
    Linear => "linear",
    ShiftHomomorphic => "shift_homomorphic",
    T0 => "T0",
    T1 => "T1",
    T2 => "T2",
    Discrete => "discrete",
    FunctionallyHausdorff => "functionally_hausdorff",
    Topological => "topological",
    Semitopological => "semitopological",
    Subtopological => "subtopological",
    UpdownClosed => "updown_closed",
    Complete => "complete",
    ChainCompact => "chain_compact",
    DownChainCompact => "down_chain_compact",
    WeakCirc => "weak_circ",
    WeakBullet => "weak_bullet",
    IWeak => "i_weak",
    ISeparated => "i_separated",
    LawTauSeparated => "law_tau_separated",
    ZarTauSeparated => "zar_tau_separated",
    LawHausdorff => "law_hausdorff",
    ZarHausdorff => "zar_hausdorff",
    WeakHausdorff => "weak_hausdorff",
    IsU => "is_U",
    IsW => "is_W",
    IsV => "is_V",
    MeetContinuous => "meet_continuous",
    ZarCompactCentered => "zar_compact_centered",
    LawsonHausdorff => "lawson_hausdorff",
    WeakEqLawson => "weak_eq_lawson",
    LawsonInLaw => "lawson_in_law",
    WeakEqZar => "weak_eq_zar",
    LawsonEqZar => "lawson_eq_zar",
    ZarT0 => "zar_T0",
    ZarT1 => "zar_T1",
}

impl Property {
    pub fn index(self) -> usize {
        self as usize
    }

    /// Case-insensitive lookup by name, with a few short aliases.
    pub fn parse(name: &str) -> Result<Property> {
        let name = name.trim();
        let alias = match name.to_ascii_lowercase().as_str() {
            "u" => Some(Property::IsU),
            "w" => Some(Property::IsW),
            "v" => Some(Property::IsV),
            "hausdorff" => Some(Property::T2),
            "weak°" | "weak_o" => Some(Property::WeakCirc),
            "weak•" => Some(Property::WeakBullet),
            "𝕀-weak" | "i-weak" => Some(Property::IWeak),
            _ => None,
        };
        alias
            .or_else(|| {
                Self::ALL
                    .iter()
                    .copied()
                    .find(|p| p.name().eq_ignore_ascii_case(name))
            })
            .ok_or_else(|| Error::UnknownProperty(name.to_string()))
    }

    /// Defined only when the operation is a semilattice.
    pub fn needs_semilattice(self) -> bool {
        use Property::*;
        matches!(
            self,
            UpdownClosed
                | Complete
                | ChainCompact
                | DownChainCompact
                | IsU
                | IsW
                | IsV
                | MeetContinuous
                | LawsonHausdorff
                | WeakEqLawson
                | LawsonInLaw
                | LawsonEqZar
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Property {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Property::parse(&s).map_err(de::Error::custom)
    }
}

/// Decided property bits; `None` where a property is undefined for the instance.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PropertyVector([Option<bool>; Property::COUNT]);

impl Default for PropertyVector {
    fn default() -> Self {
        PropertyVector([None; Property::COUNT])
    }
}

impl PropertyVector {
    pub fn get(&self, p: Property) -> Option<bool> {
        self.0[p.index()]
    }

    /// True only when the property is defined and holds.
    pub fn holds(&self, p: Property) -> bool {
        self.get(p) == Some(true)
    }

    pub fn set(&mut self, p: Property, value: Option<bool>) {
        self.0[p.index()] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Property, Option<bool>)> + '_ {
        Property::ALL.iter().map(move |&p| (p, self.get(p)))
    }
}

impl Serialize for PropertyVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(Property::COUNT))?;
        for (p, v) in self.iter() {
            map.serialize_entry(p.name(), &v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for PropertyVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = PropertyVector;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from property names to booleans or null")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<PropertyVector, A::Error> {
                let mut out = PropertyVector::default();
                while let Some((k, v)) = access.next_entry::<String, Option<bool>>()? {
                    out.set(Property::parse(&k).map_err(de::Error::custom)?, v);
                }
                Ok(out)
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Uvw {
    pub is_u: bool,
    pub is_w: bool,
    pub is_v: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct SeparationSuite {
    pub i_separated: bool,
    pub law_tau_separated: bool,
    pub zar_tau_separated: bool,
    pub law_hausdorff: bool,
    pub zar_hausdorff: bool,
    pub weak_hausdorff: bool,
}

fn semilattice_order(x: &TopologizedSemigroup) -> Result<FinitePoset> {
    if !x.is_semilattice() {
        return Err(Error::NotASemilattice(
            "operation is not a commutative band".into(),
        ));
    }
    x.natural_order()
}

/// `x` lies in the interior of `s`.
fn inside(t: &FiniteTopology, x: usize, s: ElementSet) -> bool {
    t.nbhd(x).is_subset(s)
}

/// `v ∈ V` with `x` interior to `↑v`, for open `V ∋ x`; smallest index first.
pub fn u_witness(
    x: &TopologizedSemigroup,
    poset: &FinitePoset,
    open: ElementSet,
    point: usize,
) -> Option<usize> {
    open.iter()
        .find(|&v| inside(x.topology(), point, poset.up(v)))
}

pub fn uvw_profile(x: &TopologizedSemigroup) -> Result<Uvw> {
    let poset = semilattice_order(x)?;
    let t = x.topology();
    let n = x.n();
    let is_u = t
        .opens()
        .iter()
        .all(|&v| v.iter().all(|p| u_witness(x, &poset, v, p).is_some()));
    // ↑F only grows with F, so F = V is the most generous finite choice
    let is_w = t.opens().iter().all(|&v| {
        v.iter()
            .all(|p| inside(t, p, poset.cone(v, crate::order::Direction::Up)))
    });
    let is_v = (0..n).all(|a| {
        (0..n)
            .filter(|&b| !poset.leq(a, b))
            .all(|b| (0..n).any(|v| !poset.leq(v, b) && inside(t, a, poset.up(v))))
    });
    Ok(Uvw { is_u, is_w, is_v })
}

/// Ordered-pair separation: every `x ≠ y` has disjoint neighborhoods
/// `O_x ∈ first`, `O_y ∈ second`.
pub fn pair_separated(first: &FiniteTopology, second: &FiniteTopology) -> bool {
    let n = first.n();
    (0..n).all(|x| (0..n).all(|y| x == y || first.nbhd(x).is_disjoint(second.nbhd(y))))
}

/// Whether clopen homomorphism level sets separate every pair of points.
pub fn is_i_separated(x: &TopologizedSemigroup) -> bool {
    let primes = x.clopen_prime_sets();
    let n = x.n();
    (0..n).all(|a| (a + 1..n).all(|b| primes.iter().any(|f| f.contains(a) != f.contains(b))))
}

pub fn separation_suite(x: &TopologizedSemigroup, cmp: &TopologyComparison) -> SeparationSuite {
    let b = &cmp.bundle;
    SeparationSuite {
        i_separated: is_i_separated(x),
        law_tau_separated: pair_separated(&b.law, &b.tau),
        zar_tau_separated: pair_separated(&b.zar, &b.tau),
        law_hausdorff: b.law.separation_profile().t2,
        zar_hausdorff: b.zar.separation_profile().t2,
        weak_hausdorff: b.weak.separation_profile().t2,
    }
}

fn distinct(a: usize, b: usize) -> Result<()> {
    if a == b {
        Err(Error::SamePoint(a))
    } else {
        Ok(())
    }
}

/// Disjoint open subsemigroups containing `a` and `b`, smallest bitmasks first.
pub fn law_hausdorff_witness(
    x: &TopologizedSemigroup,
    a: usize,
    b: usize,
) -> Result<Option<(ElementSet, ElementSet)>> {
    distinct(a, b)?;
    let open_subs: Vec<ElementSet> = x
        .topology()
        .opens()
        .iter()
        .copied()
        .filter(|&u| x.algebra().is_subsemigroup(u))
        .collect();
    for &oa in open_subs.iter().filter(|u| u.contains(a)) {
        if let Some(&ob) = open_subs
            .iter()
            .find(|u| u.contains(b) && u.is_disjoint(oa))
        {
            return Ok(Some((oa, ob)));
        }
    }
    Ok(None)
}

/// A cover of the carrier by closed subsemigroups none of which contains both
/// `a` and `b`. Each point takes the smallest admissible member covering it.
pub fn zar_hausdorff_witness(
    x: &TopologizedSemigroup,
    a: usize,
    b: usize,
) -> Result<Option<Vec<ElementSet>>> {
    distinct(a, b)?;
    let admissible: Vec<ElementSet> = x
        .enumerate_subsemilattices(true)?
        .into_iter()
        .filter(|f| !(f.contains(a) && f.contains(b)))
        .collect();
    let mut cover: Vec<ElementSet> = Vec::new();
    for z in 0..x.n() {
        if cover.iter().any(|f| f.contains(z)) {
            continue;
        }
        match admissible.iter().find(|f| f.contains(z)) {
            Some(&f) => cover.push(f),
            None => return Ok(None),
        }
    }
    cover.sort();
    Ok(Some(cover))
}

/// `sup(aD) = a · sup D` for every up-directed `D` with a supremum.
pub fn is_meet_continuous(x: &TopologizedSemigroup) -> Result<bool> {
    let poset = semilattice_order(x)?;
    ensure_scan(x.n())?;
    let alg = x.algebra();
    for d in all_subsets(x.n()) {
        if !poset.chain_and_directed(d).is_up_directed {
            continue;
        }
        let Some(sup) = poset.bound_extremum(d, Bound::Sup)? else {
            continue;
        };
        for a in 0..x.n() {
            let ad = d.map(|e| alg.mul(a, e));
            if poset.bound_extremum(ad, Bound::Sup)? != Some(alg.mul(a, sup)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every centered subfamily of the non-empty closed subsemigroups has
/// non-empty intersection.
///
/// Subfamilies are explored by their running intersection; a finite
/// subfamily is centered exactly when that intersection is non-empty.
pub fn zar_compact_centered(x: &TopologizedSemigroup) -> Result<bool> {
    let family: Vec<ElementSet> = x
        .enumerate_subsemilattices(true)?
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    let mut states: HashSet<ElementSet> = HashSet::new();
    for &f in &family {
        let mut next: Vec<ElementSet> = states.iter().map(|&s| s & f).collect();
        next.push(f);
        states.extend(next);
    }
    let centered = |s: &&ElementSet| !s.is_empty();
    Ok(states.iter().filter(centered).all(|s| !s.is_empty()))
}

/// Compactness of the whole carrier in a finite topology: the cover by
/// minimal neighborhoods is its own finite subcover.
pub fn is_compact(t: &FiniteTopology) -> bool {
    t.nbhds().iter().fold(ElementSet::EMPTY, |acc, &u| acc | u) == t.carrier()
}

/// Everything decided about one instance.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub instance: TopologizedSemigroup,
    pub comparison: TopologyComparison,
    pub poset: Option<FinitePoset>,
    pub tau: SeparationProfile,
    pub continuity: ContinuityProfile,
    pub order: Option<OrderProfile>,
    pub uvw: Option<Uvw>,
    pub separation: SeparationSuite,
    pub vector: PropertyVector,
}

impl Analysis {
    pub fn new(x: &TopologizedSemigroup) -> Result<Self> {
        let comparison = topology_comparison(x)?;
        let semilattice = x.is_semilattice();
        let poset = if semilattice {
            Some(x.natural_order()?)
        } else {
            None
        };
        let tau = x.topology().separation_profile();
        let continuity = x.continuity_profile()?;
        let order = if semilattice {
            Some(x.order_profile()?)
        } else {
            None
        };
        let uvw = if semilattice {
            Some(uvw_profile(x)?)
        } else {
            None
        };
        let separation = separation_suite(x, &comparison);
        let meet_continuous = if semilattice {
            Some(is_meet_continuous(x)?)
        } else {
            None
        };
        let zcc = zar_compact_centered(x)?;

        let alg = x.algebra();
        let b = &comparison.bundle;
        let lawson = b.lawson.as_ref();
        let zar_sep = b.zar.separation_profile();
        let mut v = PropertyVector::default();
        use Property::*;
        let mut put = |p: Property, value: bool| v.set(p, Some(value));
        put(Semilattice, semilattice);
        put(Band, alg.is_band());
        put(Linear, alg.is_linear());
        put(ShiftHomomorphic, alg.is_shift_homomorphic());
        put(T0, tau.t0);
        put(T1, tau.t1);
        put(T2, tau.t2);
        put(Discrete, tau.discrete);
        put(FunctionallyHausdorff, tau.discrete);
        put(Topological, continuity.topological);
        put(Semitopological, continuity.semitopological);
        put(Subtopological, continuity.subtopological);
        put(WeakCirc, comparison.weak_circ);
        put(WeakBullet, comparison.weak_bullet);
        put(IWeak, comparison.i_weak);
        put(ISeparated, separation.i_separated);
        put(LawTauSeparated, separation.law_tau_separated);
        put(ZarTauSeparated, separation.zar_tau_separated);
        put(LawHausdorff, separation.law_hausdorff);
        put(ZarHausdorff, separation.zar_hausdorff);
        put(WeakHausdorff, separation.weak_hausdorff);
        put(ZarCompactCentered, zcc);
        put(WeakEqZar, b.weak == b.zar);
        put(ZarT0, zar_sep.t0);
        put(ZarT1, zar_sep.t1);
        if let (Some(o), Some(u), Some(l), Some(mc)) = (order, uvw, lawson, meet_continuous) {
            put(UpdownClosed, o.updown_closed);
            put(Complete, o.complete);
            put(ChainCompact, o.chain_compact);
            put(DownChainCompact, o.down_chain_compact);
            put(IsU, u.is_u);
            put(IsW, u.is_w);
            put(IsV, u.is_v);
            put(MeetContinuous, mc);
            put(LawsonHausdorff, l.separation_profile().t2);
            put(WeakEqLawson, b.weak == *l);
            put(LawsonInLaw, l.is_coarser_than(&b.law));
            put(LawsonEqZar, *l == b.zar);
        }
        Ok(Analysis {
            instance: x.clone(),
            comparison,
            poset,
            tau,
            continuity,
            order,
            uvw,
            separation,
            vector: v,
        })
    }
}

/// The full property vector of an instance.
pub fn decide(x: &TopologizedSemigroup) -> Result<PropertyVector> {
    Ok(Analysis::new(x)?.vector)
}
