use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use weaklat_core::verify::{enumerate_posets, enumerate_semilattices, enumerate_topologies};
use weaklat_core::weak::{interval_topology, lawson_topology, scott_topology};
use weaklat_core::{ElementSet, FinitePoset, FiniteTopology};

// Close a family under pairwise unions and intersections until nothing changes.
fn saturate(n: usize, subbase: &[u64]) -> Vec<u64> {
    let mut fam: BTreeSet<u64> = subbase.iter().copied().collect();
    fam.insert(0);
    fam.insert((1u64 << n) - 1);
    loop {
        let snapshot: Vec<u64> = fam.iter().copied().collect();
        let before = fam.len();
        for &a in &snapshot {
            for &b in &snapshot {
                fam.insert(a | b);
                fam.insert(a & b);
            }
        }
        if fam.len() == before {
            return fam.into_iter().collect();
        }
    }
}

#[test]
fn generation_matches_saturation() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.random_range(1..=4);
        let k = rng.random_range(0..=5);
        let subbase: Vec<u64> = (0..k).map(|_| rng.random_range(0..1u64 << n)).collect();
        let sets: Vec<ElementSet> = subbase.iter().map(|&b| ElementSet::from_bits(b)).collect();
        let t = FiniteTopology::generate(n, &sets).unwrap();
        let got: Vec<u64> = t.opens().iter().map(|s| s.bits()).collect();
        assert_eq!(got, saturate(n, &subbase), "n={n} subbase={subbase:?}");
    }
}

fn leq(p: &FinitePoset, x: usize, y: usize) -> bool {
    p.leq(x, y)
}

// Least upper bound of `d`, if any, straight from the order relation.
fn sup_of(p: &FinitePoset, d: &[usize]) -> Option<usize> {
    let n = p.n();
    let uppers: Vec<usize> = (0..n)
        .filter(|&u| d.iter().all(|&x| leq(p, x, u)))
        .collect();
    uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&v| leq(p, u, v)))
}

fn literal_scott(p: &FinitePoset) -> Vec<u64> {
    let n = p.n();
    let members = |mask: u64| {
        (0..n)
            .filter(move |&i| mask >> i & 1 == 1)
            .collect::<Vec<_>>()
    };
    let directed: Vec<(u64, usize)> = (1u64..1 << n)
        .filter_map(|mask| {
            let d = members(mask);
            let ok = d.iter().all(|&a| {
                d.iter()
                    .all(|&b| d.iter().any(|&c| leq(p, a, c) && leq(p, b, c)))
            });
            if ok {
                sup_of(p, &d).map(|s| (mask, s))
            } else {
                None
            }
        })
        .collect();
    (0u64..1 << n)
        .filter(|&u| {
            let up = members(u)
                .iter()
                .all(|&x| (0..n).all(|y| !leq(p, x, y) || u >> y & 1 == 1));
            up && directed.iter().all(|&(d, s)| u >> s & 1 == 0 || d & u != 0)
        })
        .collect()
}

fn upper_sets(p: &FinitePoset) -> Vec<u64> {
    let n = p.n();
    (0u64..1 << n)
        .filter(|&u| {
            (0..n).all(|x| u >> x & 1 == 0 || (0..n).all(|y| !leq(p, x, y) || u >> y & 1 == 1))
        })
        .collect()
}

#[test]
fn scott_is_upper_sets_on_all_small_posets() {
    for n in 1..=5 {
        for p in enumerate_posets(n).unwrap() {
            let scott: Vec<u64> = scott_topology(&p)
                .unwrap()
                .opens()
                .iter()
                .map(|s| s.bits())
                .collect();
            let oracle = literal_scott(&p);
            assert_eq!(oracle, upper_sets(&p));
            assert_eq!(scott, oracle);
        }
    }
}

#[test]
fn lawson_and_interval_are_discrete_on_all_small_posets() {
    for n in 1..=5 {
        let discrete = FiniteTopology::discrete(n);
        for p in enumerate_posets(n).unwrap() {
            assert_eq!(lawson_topology(&p).unwrap(), discrete);
            assert_eq!(interval_topology(&p), discrete);
        }
    }
}

fn topology_family_count(n: usize) -> usize {
    let full = (1u64 << n) - 1;
    let middle: Vec<u64> = (1..full).collect();
    (0u64..1 << middle.len())
        .filter(|mask| {
            let mut fam = vec![0, full];
            fam.extend(
                (0..middle.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| middle[i]),
            );
            fam.iter().all(|&a| {
                fam.iter()
                    .all(|&b| fam.contains(&(a | b)) && fam.contains(&(a & b)))
            })
        })
        .count()
}

fn semilattice_table_count(n: usize) -> usize {
    let cells = n * n;
    (0..n.pow(cells as u32))
        .filter(|&code| {
            let mut c = code;
            let mut t = vec![0usize; cells];
            for cell in t.iter_mut() {
                *cell = c % n;
                c /= n;
            }
            let m = |x: usize, y: usize| t[x * n + y];
            (0..n).all(|x| m(x, x) == x)
                && (0..n).all(|x| (0..n).all(|y| m(x, y) == m(y, x)))
                && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(m(x, y), z) == m(x, m(y, z)))))
        })
        .count()
}

#[test]
fn enumeration_counts_match_brute_force() {
    let topologies: Vec<usize> = (1..=4)
        .map(|n| enumerate_topologies(n).unwrap().len())
        .collect();
    assert_eq!(topologies, [1, 4, 29, 355]);
    let brute: Vec<usize> = (1..=4).map(topology_family_count).collect();
    assert_eq!(topologies, brute);

    let semilattices: Vec<usize> = (1..=3)
        .map(|n| enumerate_semilattices(n).unwrap().len())
        .collect();
    assert_eq!(semilattices, [1, 2, 9]);
    let brute: Vec<usize> = (1..=3).map(semilattice_table_count).collect();
    assert_eq!(semilattices, brute);
}
