//! Exhaustive enumeration of small labeled structures.

use crate::algebra::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::order::{FinitePoset, Relation};
use crate::set::ElementSet;
use crate::topo::FiniteTopology;

/// Largest carrier the enumerators accept.
pub const MAX_ENUM: usize = 5;

fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_ENUM).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "enumeration size",
            value: n,
            min: 1,
            max: MAX_ENUM,
        })
    }
}

/// All preorders on `0..n`, built by inserting one element at a time with a
/// down-set and an up-set of the earlier elements.
pub fn enumerate_preorders(n: usize) -> Result<Vec<Relation>> {
    check_n(n)?;
    let mut level: Vec<Vec<ElementSet>> = vec![vec![ElementSet::singleton(0)]];
    for k in 1..n {
        let mut next = Vec::new();
        let old = ElementSet::full(k);
        for rows in &level {
            let down_of = |s: ElementSet| {
                (0..k)
                    .filter(|&x| !rows[x].is_disjoint(s))
                    .collect::<ElementSet>()
            };
            let up_of = |s: ElementSet| s.iter().fold(s, |acc, x| acc | rows[x]);
            for d in old.subsets() {
                if down_of(d) != d {
                    continue;
                }
                for u in old.subsets() {
                    if up_of(u) != u || !d.iter().all(|x| u.is_subset(rows[x])) {
                        continue;
                    }
                    let mut new_rows: Vec<ElementSet> = rows
                        .iter()
                        .enumerate()
                        .map(|(x, &r)| if d.contains(x) { r.with(k) } else { r })
                        .collect();
                    new_rows.push(u.with(k));
                    next.push(new_rows);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(Relation::from_rows).collect())
}

/// All partial orders on `0..n`.
pub fn enumerate_posets(n: usize) -> Result<Vec<FinitePoset>> {
    Ok(enumerate_preorders(n)?
        .into_iter()
        .filter(Relation::is_antisymmetric)
        .map(|r| FinitePoset::new(r).expect("antisymmetric preorder"))
        .collect())
}

/// All topologies on `0..n`, ascending by their sorted open-set lists.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteTopology>> {
    let mut out = enumerate_preorders(n)?
        .iter()
        .map(FiniteTopology::from_preorder)
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// All semilattice tables on `0..n`, ascending by table.
pub fn enumerate_semilattices(n: usize) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    for p in enumerate_posets(n)? {
        let meet = |x: usize, y: usize| {
            let lower = p.down(x) & p.down(y);
            lower.iter().find(|&m| lower.is_subset(p.down(m)))
        };
        let complete = (0..n).all(|x| (0..n).all(|y| meet(x, y).is_some()));
        if complete {
            out.push(FiniteSemigroup::from_fn(n, |x, y| {
                meet(x, y).expect("checked")
            })?);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::all_subsets;

    // Scan every family of subsets that contains ∅ and the carrier.
    fn topology_count_oracle(n: usize) -> usize {
        let full = ElementSet::full(n);
        let middle: Vec<ElementSet> = all_subsets(n)
            .filter(|&s| !s.is_empty() && s != full)
            .collect();
        let mut count = 0;
        for mask in 0u64..(1 << middle.len()) {
            let mut fam = vec![ElementSet::EMPTY, full];
            fam.extend(
                (0..middle.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| middle[i]),
            );
            let closed = fam.iter().all(|&a| {
                fam.iter()
                    .all(|&b| fam.contains(&(a | b)) && fam.contains(&(a & b)))
            });
            if closed {
                count += 1;
            }
        }
        count
    }

    fn semilattice_count_oracle(n: usize) -> usize {
        let cells = n * n;
        let mut count = 0;
        for code in 0..n.pow(cells as u32) {
            let mut c = code;
            let table: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = c % n;
                            c /= n;
                            v
                        })
                        .collect()
                })
                .collect();
            if crate::algebra::verify_semilattice(&table).unwrap().is_ok() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_topologies(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
        for n in 1..=4 {
            assert_eq!(counts[n - 1], topology_count_oracle(n));
        }
    }

    #[test]
    fn topologies_are_sorted_and_distinct() {
        let ts = enumerate_topologies(3).unwrap();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ts[0], FiniteTopology::discrete(3));
        assert_eq!(ts[28], FiniteTopology::indiscrete(3));
    }

    #[test]
    fn semilattice_counts() {
        let counts: Vec<usize> = (1..=3)
            .map(|n| enumerate_semilattices(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 9]);
        for n in 1..=3 {
            assert_eq!(counts[n - 1], semilattice_count_oracle(n));
        }
        assert!(enumerate_semilattices(4)
            .unwrap()
            .iter()
            .all(FiniteSemigroup::is_semilattice));
    }

    #[test]
    fn preorder_and_poset_counts() {
        let pre: Vec<usize> = (1..=5)
            .map(|n| enumerate_preorders(n).unwrap().len())
            .collect();
        assert_eq!(pre, vec![1, 4, 29, 355, 6942]);
        let pos: Vec<usize> = (1..=5)
            .map(|n| enumerate_posets(n).unwrap().len())
            .collect();
        assert_eq!(pos, vec![1, 3, 19, 219, 4231]);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_topologies(0).is_err());
        assert!(enumerate_topologies(6).is_err());
    }
}
