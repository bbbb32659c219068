//! Implication rules over property vectors, plus structural checks that
//! need more than the vector.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{Bound, Direction};
use crate::props::{is_compact, law_hausdorff_witness, zar_hausdorff_witness, Analysis, Property};
use crate::set::{all_subsets, ElementSet};
use crate::topo::FiniteTopology;
use crate::tsl::{enumerate_continuous_homs, TopologizedSemigroup};
use crate::verify::audit::{functorial_audit_with, product_audit, ClauseResult};
use crate::weak::{topology_comparison, zar_topology, TopologyBundle};

type ConeFn = fn(&crate::order::FinitePoset, usize) -> ElementSet;
type ExtremeFn = fn(&crate::order::FinitePoset, ElementSet) -> Option<usize>;

macro_rules! checks {
    ($($variant:ident => $name:literal,)*) => {
        /// Structural checks evaluated directly on an analysed instance, or on
        /// a pair of instances.
        #[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
        pub enum Check {
            $($variant,)*
        }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Check::$variant => $name,)*
                }
            }
        }
    };
}

checks! {
    DiagramStar => "diagram_star",
    ScottIsUpperSets => "scott_is_upper_sets",
    LawsonIntervalDiscrete => "lawson_interval_discrete",
    ShiftCharacterization => "shift_characterization",
    DerivedSemitopological => "derived_semitopological",
    WeakSemitopological => "weak_semitopological",
    LawHausdorffWitness => "law_hausdorff_witness",
    ZarHausdorffWitness => "zar_hausdorff_witness",
    SubsemigroupInheritance => "subsemigroup_inheritance",
    SubspaceZar => "subspace_zar",
    ZarCompactness => "zar_compactness",
    ClosedChains => "closed_chains",
    DirectedCompleteness => "directed_completeness",
    MaximalChainBounds => "maximal_chain_bounds",
    ScottChainCut => "scott_chain_cut",
    LowerChainCut => "lower_chain_cut",
    UpperChainCut => "upper_chain_cut",
    OpenUpperSetsScott => "open_upper_sets_scott",
    WeakInLawson => "weak_in_lawson",
    LawsonSandwich => "lawson_sandwich",
    LawsonCompactness => "lawson_compactness",
    MeetContinuity => "meet_continuity",
    UpperSetNeighborhoods => "upper_set_neighborhoods",
    FiniteUpperSets => "finite_upper_sets",
    Functorial => "functorial",
    ProductInheritance => "product_inheritance",
    ProductZar => "product_zar",
    LinearProducts => "linear_products",
}

impl Check {
    pub fn parse(name: &str) -> Result<Check> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(name.trim()))
            .ok_or_else(|| Error::UnknownProperty(format!("check:{}", name.trim())))
    }

    /// Whether the check ranges over ordered pairs of instances.
    pub fn is_pair(self) -> bool {
        matches!(
            self,
            Check::Functorial
                | Check::ProductInheritance
                | Check::ProductZar
                | Check::LinearProducts
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Conclusion {
    /// Every listed property holds.
    All(Vec<Property>),
    /// The conjunctions agree.
    Equivalent(Vec<Vec<Property>>),
    Check(Check),
}

fn join(ps: &[Property]) -> String {
    ps.iter().map(|p| p.name()).collect::<Vec<_>>().join(" & ")
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::All(ps) => f.write_str(&join(ps)),
            Conclusion::Equivalent(groups) => {
                let parts: Vec<String> = groups.iter().map(|g| join(g)).collect();
                f.write_str(&parts.join(" <=> "))
            }
            Conclusion::Check(c) => write!(f, "check:{}", c.name()),
        }
    }
}

impl FromStr for Conclusion {
    type Err = Error;

    /// `p & q`, `p <=> q & r`, or `check:name`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(name) = s.strip_prefix("check:") {
            return Ok(Conclusion::Check(Check::parse(name)?));
        }
        let conj = |part: &str| -> Result<Vec<Property>> {
            let ps = part
                .split('&')
                .map(Property::parse)
                .collect::<Result<Vec<_>>>()?;
            Ok(ps)
        };
        if s.contains("<=>") {
            let groups = s.split("<=>").map(conj).collect::<Result<Vec<_>>>()?;
            Ok(Conclusion::Equivalent(groups))
        } else {
            Ok(Conclusion::All(conj(s)?))
        }
    }
}

/// One checkable statement: when every hypothesis holds, so must the
/// conclusion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RuleSpec", into = "RuleSpec")]
pub struct ImplicationRule {
    pub id: String,
    pub hypotheses: Vec<Property>,
    pub conclusion: Conclusion,
    pub anchor: String,
}

#[derive(Clone, Serialize, Deserialize)]
struct RuleSpec {
    id: String,
    #[serde(default)]
    hypotheses: Vec<Property>,
    conclusion: String,
    #[serde(default)]
    anchor: String,
}

impl TryFrom<RuleSpec> for ImplicationRule {
    type Error = Error;

    fn try_from(spec: RuleSpec) -> Result<Self> {
        Ok(ImplicationRule {
            id: spec.id,
            hypotheses: spec.hypotheses,
            conclusion: spec.conclusion.parse()?,
            anchor: spec.anchor,
        })
    }
}

impl From<ImplicationRule> for RuleSpec {
    fn from(r: ImplicationRule) -> Self {
        RuleSpec {
            id: r.id,
            hypotheses: r.hypotheses,
            conclusion: r.conclusion.to_string(),
            anchor: r.anchor,
        }
    }
}

impl fmt::Display for ImplicationRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hyp = if self.hypotheses.is_empty() {
            "⊤".to_string()
        } else {
            join(&self.hypotheses)
        };
        write!(f, "{}: {} => {}", self.id, hyp, self.conclusion)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    Vacuous,
    Held,
    Violated(String),
}

/// Applied, vacuous and failing cases of one rule on one instance or pair.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tally {
    pub applied: usize,
    pub vacuous: usize,
    pub violations: Vec<String>,
}

impl Tally {
    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Held => self.applied += 1,
            Outcome::Violated(why) => {
                self.applied += 1;
                self.violations.push(why);
            }
        }
    }

    fn clause(&mut self, c: &ClauseResult, what: &str) {
        self.record(match c {
            ClauseResult::NotApplicable => Outcome::Vacuous,
            ClauseResult::Passed => Outcome::Held,
            ClauseResult::Failed(why) => Outcome::Violated(format!("{what}: {why}")),
        });
    }
}

impl ImplicationRule {
    pub fn new(id: &str, hypotheses: &[Property], conclusion: Conclusion, anchor: &str) -> Self {
        ImplicationRule {
            id: id.to_string(),
            hypotheses: hypotheses.to_vec(),
            conclusion,
            anchor: anchor.to_string(),
        }
    }

    /// Parses `id: h1 & h2 => conclusion`; an empty hypothesis side is `⊤`.
    pub fn parse_line(line: &str) -> Result<Self> {
        let bad = || Error::InvalidRule {
            id: line.trim().to_string(),
            reason: "expected `id: hypotheses => conclusion`".into(),
        };
        let (id, rest) = line.split_once(':').ok_or_else(bad)?;
        let (hyp, concl) = rest.split_once("=>").ok_or_else(bad)?;
        let hyp = hyp.trim();
        let hypotheses = if hyp.is_empty() || hyp == "⊤" {
            Vec::new()
        } else {
            hyp.split('&')
                .map(Property::parse)
                .collect::<Result<Vec<_>>>()?
        };
        Ok(ImplicationRule {
            id: id.trim().to_string(),
            hypotheses,
            conclusion: concl.parse()?,
            anchor: String::new(),
        })
    }

    pub fn is_pair(&self) -> bool {
        matches!(self.conclusion, Conclusion::Check(c) if c.is_pair())
    }

    fn hypotheses_hold(&self, a: &Analysis) -> bool {
        self.hypotheses.iter().all(|&p| a.vector.holds(p))
    }

    /// Evaluates an instance-scope rule.
    pub fn evaluate(&self, a: &Analysis) -> Result<Outcome> {
        if !self.hypotheses_hold(a) {
            return Ok(Outcome::Vacuous);
        }
        let v = &a.vector;
        let failure = match &self.conclusion {
            Conclusion::All(ps) => {
                let bad: Vec<String> = ps
                    .iter()
                    .filter(|&&p| !v.holds(p))
                    .map(|p| format!("{p}={}", show(v.get(*p))))
                    .collect();
                (!bad.is_empty()).then(|| bad.join(", "))
            }
            Conclusion::Equivalent(groups) => {
                let values: Vec<Option<bool>> = groups
                    .iter()
                    .map(|g| {
                        g.iter()
                            .map(|&p| v.get(p))
                            .try_fold(true, |acc, b| b.map(|b| acc && b))
                    })
                    .collect();
                let agree = values.iter().all(|x| x.is_some() && *x == values[0]);
                (!agree).then(|| {
                    groups
                        .iter()
                        .zip(&values)
                        .map(|(g, x)| format!("[{}]={}", join(g), show(*x)))
                        .collect::<Vec<_>>()
                        .join(", ")
                })
            }
            Conclusion::Check(c) => {
                if c.is_pair() {
                    return Err(Error::InvalidRule {
                        id: self.id.clone(),
                        reason: format!("{} ranges over pairs", c.name()),
                    });
                }
                run_check(*c, a)?
            }
        };
        Ok(failure.map_or(Outcome::Held, Outcome::Violated))
    }

    /// Evaluates a pair-scope rule; hypotheses must hold on both members.
    pub fn evaluate_pair(&self, x: &Analysis, y: &Analysis) -> Result<Tally> {
        let mut tally = Tally::default();
        if !(self.hypotheses_hold(x) && self.hypotheses_hold(y)) {
            tally.record(Outcome::Vacuous);
            return Ok(tally);
        }
        let Conclusion::Check(c) = self.conclusion else {
            return Err(Error::InvalidRule {
                id: self.id.clone(),
                reason: "not a pair rule".into(),
            });
        };
        match c {
            Check::Functorial => {
                let src = &x.comparison.bundle;
                let dst = &y.comparison.bundle;
                for h in enumerate_continuous_homs(&x.instance, &y.instance)? {
                    let report = functorial_audit_with(&h, src, dst)?;
                    let map = format!("{:?}", h.map());
                    for (name, clause) in report.clauses() {
                        tally.clause(clause, &format!("hom {map} {name}"));
                    }
                }
            }
            Check::ProductInheritance | Check::ProductZar | Check::LinearProducts => {
                let report = product_audit(&x.instance, &y.instance)?;
                let clauses: Vec<(&str, &ClauseResult)> = match c {
                    Check::ProductInheritance => vec![
                        ("i_weak", &report.i_weak),
                        ("weak_circ", &report.weak_circ),
                        ("weak_bullet", &report.weak_bullet),
                    ],
                    Check::ProductZar => vec![("zar_product", &report.zar_product)],
                    _ => vec![("linear_subsemigroups", &report.linear_subsemigroups)],
                };
                for (name, clause) in clauses {
                    tally.clause(clause, name);
                }
            }
            other => {
                return Err(Error::InvalidRule {
                    id: self.id.clone(),
                    reason: format!("{} is not a pair check", other.name()),
                })
            }
        }
        Ok(tally)
    }
}

fn show(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "undefined",
    }
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    cond.then(msg)
}

fn semitopological_with(x: &TopologizedSemigroup, t: &FiniteTopology) -> Result<bool> {
    Ok(x.with_topology(t.clone())?.is_semitopological())
}

fn run_check(check: Check, a: &Analysis) -> Result<Option<String>> {
    let x = &a.instance;
    let b: &TopologyBundle = &a.comparison.bundle;
    let n = x.n();
    let alg = x.algebra();
    let t = x.topology();
    let need_poset = || {
        a.poset.as_ref().ok_or_else(|| {
            Error::NotASemilattice(format!("check {} needs a semilattice", check.name()))
        })
    };
    Ok(match check {
        Check::DiagramStar => {
            let chain = [
                ("weak", &b.weak, "law", &b.law),
                ("law", &b.law, "tau", &b.tau),
                ("weak", &b.weak, "zar", &b.zar),
                ("zar", &b.zar, "tau", &b.tau),
            ];
            chain
                .iter()
                .find(|(_, s, _, l)| !s.is_coarser_than(l))
                .map(|(sn, _, ln, _)| format!("{sn} is not contained in {ln}"))
        }
        Check::ScottIsUpperSets => {
            let poset = need_poset()?;
            let scott = crate::weak::scott_topology(poset)?;
            fail_if(scott != crate::weak::upper_set_topology(poset), || {
                "scott differs from the upper sets".into()
            })
        }
        Check::LawsonIntervalDiscrete => {
            let (l, i) = (b.lawson.as_ref(), b.interval.as_ref());
            fail_if(
                !(l.is_some_and(FiniteTopology::is_discrete)
                    && i.is_some_and(FiniteTopology::is_discrete)),
                || "lawson or interval is not discrete".into(),
            )
        }
        Check::ShiftCharacterization => fail_if(
            alg.is_shift_homomorphic() != alg.shifts_are_homomorphisms(),
            || "identity test disagrees with the shifts being homomorphisms".into(),
        ),
        Check::DerivedSemitopological => {
            if !semitopological_with(x, &b.law)? {
                Some("(X, law) is not semitopological".into())
            } else if !semitopological_with(x, &b.zar)? {
                Some("(X, zar) is not semitopological".into())
            } else {
                None
            }
        }
        Check::WeakSemitopological => fail_if(!semitopological_with(x, &b.weak)?, || {
            "(X, weak) is not semitopological".into()
        }),
        Check::LawHausdorffWitness => {
            let mut all = true;
            for p in 0..n {
                for q in p + 1..n {
                    all &= law_hausdorff_witness(x, p, q)?.is_some();
                }
            }
            fail_if(all != a.separation.law_hausdorff, || {
                format!(
                    "open subsemigroup separation {all} but law_hausdorff {}",
                    a.separation.law_hausdorff
                )
            })
        }
        Check::ZarHausdorffWitness => {
            let mut all = true;
            for p in 0..n {
                for q in p + 1..n {
                    all &= zar_hausdorff_witness(x, p, q)?.is_some();
                }
            }
            fail_if(all != a.separation.zar_hausdorff, || {
                format!(
                    "closed subsemigroup covers {all} but zar_hausdorff {}",
                    a.separation.zar_hausdorff
                )
            })
        }
        Check::SubsemigroupInheritance => {
            let c = &a.comparison;
            let mut bad = None;
            for s in alg.subsemigroups()?.into_iter().filter(|s| !s.is_empty()) {
                let sub = topology_comparison(&x.restrict(s)?)?;
                let lost = [
                    ("i_weak", c.i_weak, sub.i_weak),
                    ("weak_circ", c.weak_circ, sub.weak_circ),
                    ("weak_bullet", c.weak_bullet, sub.weak_bullet),
                ]
                .into_iter()
                .find(|&(_, whole, part)| whole && !part);
                if let Some((name, _, _)) = lost {
                    bad = Some(format!("subsemigroup {s} is not {name}"));
                    break;
                }
            }
            bad
        }
        Check::SubspaceZar => {
            let mut bad = None;
            for s in alg.subsemigroups()?.into_iter().filter(|s| !s.is_empty()) {
                let own = zar_topology(&x.restrict(s)?)?;
                if own != b.zar.subspace(s)? {
                    bad = Some(format!(
                        "zar of subsemigroup {s} differs from the subspace topology"
                    ));
                    break;
                }
            }
            bad
        }
        Check::ZarCompactness => {
            let centered = a.vector.holds(Property::ZarCompactCentered);
            fail_if(centered != is_compact(&b.zar), || {
                "centered-family test disagrees with compactness".into()
            })
        }
        Check::ClosedChains => {
            let poset = need_poset()?;
            all_subsets(n)
                .filter(|&c| poset.is_chain(c))
                .find(|&c| !poset.is_chain(t.closure(c)))
                .map(|c| format!("closure of chain {c} is {}", t.closure(c)))
        }
        Check::DirectedCompleteness => {
            let poset = need_poset()?;
            let mut directed = true;
            for s in all_subsets(n).filter(|s| !s.is_empty()) {
                let flags = poset.chain_and_directed(s);
                let closure = t.closure(s);
                let within = |bound| matches!(poset.bound_extremum(s, bound), Ok(Some(v)) if closure.contains(v));
                if flags.is_up_directed && !within(Bound::Sup)
                    || flags.is_down_directed && !within(Bound::Inf)
                {
                    directed = false;
                }
            }
            let complete = a.vector.holds(Property::Complete);
            fail_if(directed != complete, || {
                format!("directed-set test {directed} but complete {complete}")
            })
        }
        Check::MaximalChainBounds => {
            let poset = need_poset()?;
            let mut bad = None;
            'outer: for m in poset.maximal_chains()? {
                for c in m.subsets().filter(|c| !c.is_empty()) {
                    for bound in [Bound::Inf, Bound::Sup] {
                        match poset.bound_extremum(c, bound)? {
                            Some(e) if m.contains(e) => {}
                            other => {
                                bad = Some(format!(
                                    "{bound:?} of {c} in maximal chain {m} is {other:?}"
                                ));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            bad
        }
        Check::ScottChainCut => {
            let poset = need_poset()?;
            let scott = b.scott.as_ref().expect("semilattice bundles carry scott");
            let mut bad = None;
            for m in poset.maximal_chains()? {
                for &u in scott.opens() {
                    let rest = m - u;
                    if rest.is_empty() {
                        continue;
                    }
                    let ok = poset
                        .max_of(rest)
                        .is_some_and(|top| rest == (m & poset.down(top)));
                    if !ok {
                        bad = Some(format!("chain {m} minus scott-open {u}"));
                    }
                }
            }
            bad
        }
        Check::LowerChainCut | Check::UpperChainCut => {
            let poset = need_poset()?;
            let (cone, extreme): (ConeFn, ExtremeFn) = if check == Check::LowerChainCut {
                (|p, x| p.down(x), |p, s| p.max_of(s))
            } else {
                (|p, x| p.up(x), |p, s| p.min_of(s))
            };
            let mut bad = None;
            for m in poset.maximal_chains()? {
                for p in 0..n {
                    let part = m & cone(poset, p);
                    if part.is_empty() {
                        continue;
                    }
                    let ok = extreme(poset, part).is_some_and(|c| part == (m & cone(poset, c)));
                    if !ok {
                        bad = Some(format!("chain {m} cut at {p}"));
                    }
                }
            }
            bad
        }
        Check::OpenUpperSetsScott => {
            let poset = need_poset()?;
            let scott = b.scott.as_ref().expect("semilattice bundles carry scott");
            t.opens()
                .iter()
                .find(|&&u| poset.is_upper_set(u) && !scott.is_open(u))
                .map(|u| format!("open upper set {u} is not scott-open"))
        }
        Check::WeakInLawson => {
            let lawson = b.lawson.as_ref().expect("semilattice bundles carry lawson");
            fail_if(!b.weak.is_coarser_than(lawson), || {
                "weak is not contained in lawson".into()
            })
        }
        Check::LawsonSandwich => {
            let lawson = b.lawson.as_ref().expect("semilattice bundles carry lawson");
            if !b.weak.is_coarser_than(lawson) {
                Some("weak is not contained in lawson".into())
            } else if !lawson.is_coarser_than(&b.zar) {
                Some("lawson is not contained in zar".into())
            } else {
                fail_if(!b.zar.is_coarser_than(&b.tau), || {
                    "zar is not contained in tau".into()
                })
            }
        }
        Check::LawsonCompactness => {
            let complete = a.vector.holds(Property::Complete);
            let lawson = is_compact(b.lawson.as_ref().expect("semilattice bundles carry lawson"));
            let interval = is_compact(
                b.interval
                    .as_ref()
                    .expect("semilattice bundles carry interval"),
            );
            fail_if(!(complete == lawson && lawson == interval), || {
                format!("complete {complete}, lawson compact {lawson}, interval compact {interval}")
            })
        }
        Check::MeetContinuity => {
            let scott = b.scott.as_ref().expect("semilattice bundles carry scott");
            let lawson = b.lawson.as_ref().expect("semilattice bundles carry lawson");
            let mc = a.vector.holds(Property::MeetContinuous);
            let sx = x.with_topology(scott.clone())?;
            let lx = x.with_topology(lawson.clone())?;
            let mut values = vec![
                ("meet_continuous", mc),
                ("scott semitopological", sx.is_semitopological()),
                ("lawson semitopological", lx.is_semitopological()),
            ];
            if a.vector.holds(Property::Complete) && a.vector.holds(Property::LawsonHausdorff) {
                values.push((
                    "lawson compact topological",
                    lx.is_topological() && is_compact(lawson),
                ));
                values.push((
                    "scott compact topological",
                    sx.is_topological() && is_compact(scott),
                ));
            }
            fail_if(values.iter().any(|v| v.1 != values[0].1), || {
                format!("{values:?}")
            })
        }
        Check::UpperSetNeighborhoods => {
            let poset = need_poset()?;
            let third = t
                .opens()
                .iter()
                .filter(|&&u| poset.is_upper_set(u))
                .all(|&u| {
                    u.iter()
                        .all(|p| u.iter().any(|y| t.nbhd(p).is_subset(poset.up(y))))
                });
            let is_u = a.vector.holds(Property::IsU);
            fail_if(third != is_u, || {
                format!("open upper set condition {third} but is_U {is_u}")
            })
        }
        Check::FiniteUpperSets => {
            let poset = need_poset()?;
            let mut bad = None;
            for f in all_subsets(n).filter(|f| !f.is_empty()) {
                let up = poset.cone(f, Direction::Up);
                for p in t.interior(up) {
                    if !f.iter().any(|e| t.nbhd(p).is_subset(poset.up(e))) {
                        bad = Some(format!(
                            "{p} is interior to the upper set of {f} but of no single member"
                        ));
                    }
                }
            }
            bad
        }
        Check::Functorial
        | Check::ProductInheritance
        | Check::ProductZar
        | Check::LinearProducts => {
            unreachable!("pair checks are rejected before dispatch")
        }
    })
}

fn r(id: &str, hyps: &[Property], conclusion: &str, anchor: &str) -> ImplicationRule {
    ImplicationRule::new(id, hyps, conclusion.parse().expect("built-in rule"), anchor)
}

/// The built-in rule set.
pub fn default_rules() -> Vec<ImplicationRule> {
    use Property::*;
    let hss = [T2, Semitopological, Semilattice];
    vec![
        // inclusions between the derived topologies
        r("star.inclusions", &[], "check:diagram_star", "weak ⊆ law ⊆ tau and weak ⊆ zar ⊆ tau"),
        r("star.i_weak", &[IWeak], "weak_circ & weak_bullet", "i_weak instances are weak_circ and weak_bullet"),
        r("continuity.chain", &[Topological], "semitopological", "topological implies semitopological"),
        r("continuity.sub", &[Semitopological], "subtopological", "semitopological implies subtopological"),
        r("finite.separation", &[], "T1 <=> T2 <=> discrete <=> functionally_hausdorff", "finite T1 spaces are discrete"),
        r("finite.order", &[Semilattice], "complete & chain_compact & down_chain_compact & meet_continuous", "finite semilattices"),
        r("order.scott", &[Semilattice], "check:scott_is_upper_sets", "scott topology of a finite poset"),
        r("order.lawson_interval", &[Semilattice], "check:lawson_interval_discrete", "lawson and interval of a finite poset"),
        // Hausdorff topologized semigroups
        r("diag.iweak_circ", &[T2, IWeak], "weak_circ", "Hausdorff diagram"),
        r("diag.iweak_bullet", &[T2, IWeak], "weak_bullet", "Hausdorff diagram"),
        r("diag.iweak_weakH", &[T2, IWeak], "weak_hausdorff", "Hausdorff diagram"),
        r("diag.circ_lawH", &[T2, WeakCirc], "law_hausdorff", "Hausdorff diagram"),
        r("diag.bullet_zarH", &[T2, WeakBullet], "zar_hausdorff", "Hausdorff diagram"),
        r("diag.weakH_lawH", &[T2, WeakHausdorff], "law_hausdorff", "Hausdorff diagram"),
        r("diag.weakH_zarH", &[T2, WeakHausdorff], "zar_hausdorff", "Hausdorff diagram"),
        r("diag.lawH_sep", &[T2, LawHausdorff], "law_tau_separated", "Hausdorff diagram"),
        r("diag.zarH_sep", &[T2, ZarHausdorff], "zar_tau_separated", "Hausdorff diagram"),
        r("diag.isep_weakH", &[T2], "i_separated <=> weak_hausdorff", "Hausdorff diagram"),
        r("diag.isep_law", &[T2, ISeparated], "law_tau_separated", "Hausdorff diagram"),
        r("diag.isep_zar", &[T2, ISeparated], "zar_tau_separated", "Hausdorff diagram"),
        // Hausdorff semitopological semilattices
        r("fig1.iweak_circ", &[T2, Semitopological, Semilattice, IWeak], "weak_circ", "separation diagram"),
        r("fig1.iweak_bullet", &[T2, Semitopological, Semilattice, IWeak], "weak_bullet", "separation diagram"),
        r("fig1.iweak_weakH", &[T2, Semitopological, Semilattice, IWeak], "weak_hausdorff", "separation diagram"),
        r("fig1.circ_lawH", &[T2, Semitopological, Semilattice, WeakCirc], "law_hausdorff", "separation diagram"),
        r("fig1.bullet_zarH", &[T2, Semitopological, Semilattice, WeakBullet], "zar_hausdorff", "separation diagram"),
        r("fig1.weakH_lawH", &[T2, Semitopological, Semilattice, WeakHausdorff], "law_hausdorff", "separation diagram"),
        r("fig1.weakH_zarH", &[T2, Semitopological, Semilattice, WeakHausdorff], "zar_hausdorff", "separation diagram"),
        r("fig1.weakH_isep", &hss, "weak_hausdorff <=> i_separated", "separation diagram"),
        r("fig1.lawH_sep", &[T2, Semitopological, Semilattice, LawHausdorff], "law_tau_separated", "separation diagram"),
        r("fig1.zarH_sep", &[T2, Semitopological, Semilattice, ZarHausdorff], "zar_tau_separated", "separation diagram"),
        r("fig1.isep_law", &[T2, Semitopological, Semilattice, ISeparated], "law_tau_separated", "separation diagram"),
        r("fig1.isep_zar", &[T2, Semitopological, Semilattice, ISeparated], "zar_tau_separated", "separation diagram"),
        r("fig1.W_lawsep", &[T2, Semitopological, Semilattice, IsW], "law_tau_separated", "separation diagram"),
        r("fig1.W_U", &hss, "is_W <=> is_U", "separation diagram"),
        r("fig1.U_isep", &[T2, Semitopological, Semilattice, IsU], "i_separated", "separation diagram"),
        r("fig1.U_V", &[T2, Semitopological, Semilattice, IsU], "is_V", "separation diagram"),
        r("fig1.V_zarsep", &[T2, Semitopological, Semilattice, IsV], "zar_tau_separated", "separation diagram"),
        // homomorphisms, subsemigroups, products
        r("p1", &[], "check:functorial", "continuous homomorphisms stay continuous, open, perfect, embeddings"),
        r("p2", &[], "check:shift_characterization", "shift-homomorphic identities"),
        r("p3", &[Semitopological, ShiftHomomorphic], "check:derived_semitopological", "derived topologies stay shift-continuous"),
        r("cCst", &[Semitopological, Semilattice], "check:derived_semitopological", "semilattices are shift-homomorphic"),
        r("weak.shift", &[Semitopological], "check:weak_semitopological", "weak topology is shift-continuous"),
        r("law.hausdorff", &[], "check:law_hausdorff_witness", "disjoint open subsemigroups"),
        r("zar.hausdorff", &[], "check:zar_hausdorff_witness", "covers by closed subsemigroups"),
        r("linear", &[Linear], "weak_circ & weak_bullet", "linear instances"),
        r("pSub", &[], "check:subsemigroup_inheritance", "subsemigroups inherit weakness"),
        r("pProduct", &[], "check:product_inheritance", "products inherit weakness"),
        r("linear.products", &[Linear], "check:linear_products", "subsemigroups of products of linear factors"),
        r("pProd2", &[ZarTauSeparated, Complete, Semitopological], "check:product_zar", "zar of a product"),
        r("pZarT0", &[Subtopological, Band], "T0 <=> zar_T0", "T0 of zar"),
        r("pZarT1", &[Band], "T1 <=> zar_T1", "T1 of zar"),
        r("cSubcomp", &[Subtopological], "check:subspace_zar", "zar of a subsemigroup"),
        // compactness and completeness
        r("tCc1", &[], "check:zar_compactness", "centered closed subsemigroups"),
        r("tCc1.value", &[], "zar_compact_centered", "finite instances are zar-compact"),
        r("tCc", &[UpdownClosed, Semilattice], "complete <=> zar_compact_centered <=> chain_compact", "completeness"),
        r("lClChain", &[UpdownClosed], "check:closed_chains", "closures of chains"),
        r("lIwa", &[Semilattice], "check:directed_completeness", "directed sets"),
        r("lSupInf", &[Complete], "check:maximal_chain_bounds", "maximal chains"),
        r("lSo1", &[Complete], "check:scott_chain_cut", "maximal chains and scott-open sets"),
        r("lSo2", &[Complete], "check:lower_chain_cut", "maximal chains and lower sets"),
        r("lSo3", &[Complete], "check:upper_chain_cut", "maximal chains and upper sets"),
        r("lScott", &[Complete], "check:open_upper_sets_scott", "open upper sets"),
        r("lLw", &[Complete], "check:weak_in_lawson", "weak inside lawson"),
        r("tLaw.topological", &[Complete, T2, Semitopological, Topological], "check:lawson_sandwich", "lawson between weak and zar"),
        r("tLaw.functional", &[Complete, T2, Semitopological, FunctionallyHausdorff], "check:lawson_sandwich", "lawson between weak and zar"),
        r("tLawComp", &[Semilattice], "check:lawson_compactness", "compactness of lawson and interval"),
        r("meet.continuity", &[Semilattice], "check:meet_continuity", "meet continuity"),
        // U, W, V
        r("tUW", &[Semitopological, Semilattice], "is_U <=> is_W", "U and W agree"),
        r("tUW.upper", &[Semitopological, Semilattice], "check:upper_set_neighborhoods", "U through open upper sets"),
        r("lW", &[Semitopological, Semilattice], "check:finite_upper_sets", "finite upper sets"),
        r("tUI", &[T2, Semitopological, IsU], "i_separated", "Hausdorff U-semilattices"),
        r("pVCH", &[Semitopological, IsV, T1], "zar_hausdorff", "V-semilattices with T1"),
        r("tVc", &[Semitopological, DownChainCompact], "zar_hausdorff <=> zar_tau_separated <=> is_V & T1", "down-chain-compact"),
        r(
            "tMain",
            &hss,
            "i_weak & weak_circ & weak_bullet & weak_eq_lawson & lawson_in_law & law_hausdorff & zar_hausdorff & weak_hausdorff & lawson_hausdorff & law_tau_separated & zar_tau_separated & i_separated & is_W & is_U & is_V",
            "compact Hausdorff semitopological semilattices",
        ),
        r(
            "tFinal",
            &[Complete, Semitopological],
            "zar_hausdorff <=> weak_hausdorff <=> i_separated <=> is_V & T1 <=> T0 & weak_eq_zar <=> weak_eq_lawson & lawson_eq_zar <=> functionally_hausdorff & lawson_hausdorff",
            "complete semitopological semilattices",
        ),
        r("weakBullet.final", &[T2, Complete, Semitopological, WeakBullet], "weak_circ & topological", "weak_bullet complete instances"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;

    fn analysis(x: &TopologizedSemigroup) -> Analysis {
        Analysis::new(x).unwrap()
    }

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
    fn conclusion_text_round_trip() {
        for rule in default_rules() {
            let text = rule.conclusion.to_string();
            assert_eq!(
                text.parse::<Conclusion>().unwrap(),
                rule.conclusion,
                "{}",
                rule.id
            );
        }
        assert!("check:nope".parse::<Conclusion>().is_err());
        assert!("weak_circ & bogus".parse::<Conclusion>().is_err());
    }

    #[test]
    fn rule_ids_are_unique() {
        let rules = default_rules();
        let mut ids: Vec<&str> = rules.iter().map(|r| r.id.as_str()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), rules.len());
    }

    #[test]
    fn parse_line_forms() {
        let rule = ImplicationRule::parse_line("x: T2 & semitopological => is_U <=> is_W").unwrap();
        assert_eq!(
            rule.hypotheses,
            vec![Property::T2, Property::Semitopological]
        );
        assert!(matches!(rule.conclusion, Conclusion::Equivalent(ref g) if g.len() == 2));
        let rule = ImplicationRule::parse_line("y: => check:diagram_star").unwrap();
        assert!(rule.hypotheses.is_empty());
        assert!(ImplicationRule::parse_line("no arrow").is_err());
    }

    #[test]
    fn serde_uses_text_conclusions() {
        let rules = default_rules();
        let json = serde_json::to_string(&rules[..3]).unwrap();
        assert!(json.contains("\"conclusion\":\"check:diagram_star\""));
        let back: Vec<ImplicationRule> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rules[..3]);
        let bad = r#"[{"id":"z","hypotheses":["nope"],"conclusion":"T0"}]"#;
        assert!(serde_json::from_str::<Vec<ImplicationRule>>(bad).is_err());
    }

    #[test]
    fn outcomes() {
        let s = analysis(&sierpinski());
        let held = ImplicationRule::parse_line("a: semilattice => weak_circ").unwrap();
        assert_eq!(held.evaluate(&s).unwrap(), Outcome::Held);
        let vacuous = ImplicationRule::parse_line("b: T2 => i_weak").unwrap();
        assert_eq!(vacuous.evaluate(&s).unwrap(), Outcome::Vacuous);
        let false_rule = ImplicationRule::parse_line("c: semilattice => i_weak").unwrap();
        assert!(
            matches!(false_rule.evaluate(&s).unwrap(), Outcome::Violated(m) if m.contains("i_weak=false"))
        );
        let undefined = ImplicationRule::parse_line("d: => is_U <=> T0").unwrap();
        let g = analysis(&TopologizedSemigroup::discrete(
            standard::two_element_group(),
        ));
        assert!(
            matches!(undefined.evaluate(&g).unwrap(), Outcome::Violated(m) if m.contains("undefined"))
        );
    }

    #[test]
    fn default_rules_hold_on_examples() {
        let xs = [
            sierpinski(),
            TopologizedSemigroup::discrete(standard::diamond()),
            TopologizedSemigroup::discrete(standard::fan(3)),
            TopologizedSemigroup::discrete(standard::two_element_group()),
            TopologizedSemigroup::new(standard::chain(3), FiniteTopology::indiscrete(3)).unwrap(),
            TopologizedSemigroup::new(standard::left_zero(2), FiniteTopology::discrete(2)).unwrap(),
        ];
        let analyses: Vec<Analysis> = xs.iter().map(analysis).collect();
        for rule in default_rules() {
            for a in &analyses {
                if rule.is_pair() {
                    for b in &analyses {
                        if a.instance.n() * b.instance.n() <= 9 {
                            let tally = rule.evaluate_pair(a, b).unwrap();
                            assert!(
                                tally.violations.is_empty(),
                                "{}: {:?}",
                                rule.id,
                                tally.violations
                            );
                        }
                    }
                } else {
                    let out = rule.evaluate(a).unwrap();
                    assert!(
                        !matches!(out, Outcome::Violated(_)),
                        "{} on {:?}: {out:?}",
                        rule.id,
                        a.instance
                    );
                }
            }
        }
    }

    #[test]
    fn group_breaks_shift_continuity_of_derived_topologies() {
        let g = analysis(&TopologizedSemigroup::discrete(
            standard::two_element_group(),
        ));
        let rule = ImplicationRule::new(
            "probe",
            &[],
            Conclusion::Check(Check::DerivedSemitopological),
            "",
        );
        assert!(matches!(rule.evaluate(&g).unwrap(), Outcome::Violated(_)));
        let p3 = default_rules().into_iter().find(|r| r.id == "p3").unwrap();
        assert_eq!(p3.evaluate(&g).unwrap(), Outcome::Vacuous);
    }
}
