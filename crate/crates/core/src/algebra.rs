//! Finite semigroups given by operation tables.

use crate::error::{Error, Result};
use crate::set::{all_subsets, ElementSet, MAX_BITS};

/// Largest carrier for which exhaustive subset scans (`2^n` work) are run.
pub const MAX_SCAN: usize = 12;

/// A finite semigroup on `0..n`, stored as a row-major operation table.
///
/// Construction checks associativity, so every value of this type is a
/// semigroup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<u8>,
}

/// Outcome of checking the associative law.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SemigroupDiagnostics {
    /// Triples `(x, y, z)` with `(xy)z ≠ x(yz)`.
    pub associativity: Vec<(usize, usize, usize)>,
}

impl SemigroupDiagnostics {
    pub fn is_ok(&self) -> bool {
        self.associativity.is_empty()
    }
}

/// Outcome of checking the three semilattice laws.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SemilatticeDiagnostics {
    /// Pairs `(x, y)` with `x < y` and `xy ≠ yx`.
    pub commutativity: Vec<(usize, usize)>,
    /// Elements with `xx ≠ x`.
    pub idempotency: Vec<usize>,
    pub associativity: Vec<(usize, usize, usize)>,
}

impl SemilatticeDiagnostics {
    pub fn is_ok(&self) -> bool {
        self.commutativity.is_empty()
            && self.idempotency.is_empty()
            && self.associativity.is_empty()
    }
}

fn check_shape<R: AsRef<[usize]>>(table: &[R]) -> Result<usize> {
    let n = table.len();
    if n == 0 || n > MAX_BITS {
        return Err(Error::CarrierSize { n, max: MAX_BITS });
    }
    for (row, r) in table.iter().enumerate() {
        let r = r.as_ref();
        if r.len() != n {
            return Err(Error::TableShape {
                n,
                row,
                len: r.len(),
            });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::MalformedTable { row, col, value, n });
        }
    }
    Ok(n)
}

fn associativity_violations<R: AsRef<[usize]>>(table: &[R]) -> Vec<(usize, usize, usize)> {
    let n = table.len();
    let at = |x: usize, y: usize| table[x].as_ref()[y];
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            for z in 0..n {
                if at(xy, z) != at(x, at(y, z)) {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// Checks the associative law, listing every violating triple.
///
/// Errors only when the table is malformed (wrong shape or an entry out of
/// range).
pub fn verify_semigroup<R: AsRef<[usize]>>(table: &[R]) -> Result<SemigroupDiagnostics> {
    check_shape(table)?;
    Ok(SemigroupDiagnostics {
        associativity: associativity_violations(table),
    })
}

/// Checks commutativity, idempotency and associativity.
pub fn verify_semilattice<R: AsRef<[usize]>>(table: &[R]) -> Result<SemilatticeDiagnostics> {
    let n = check_shape(table)?;
    let at = |x: usize, y: usize| table[x].as_ref()[y];
    let mut diag = SemilatticeDiagnostics {
        associativity: associativity_violations(table),
        ..Default::default()
    };
    for x in 0..n {
        if at(x, x) != x {
            diag.idempotency.push(x);
        }
        for y in x + 1..n {
            if at(x, y) != at(y, x) {
                diag.commutativity.push((x, y));
            }
        }
    }
    Ok(diag)
}

impl FiniteSemigroup {
    /// Builds a semigroup from an `n×n` table, rejecting malformed or
    /// non-associative tables (the first violating triple is reported).
    pub fn new<R: AsRef<[usize]>>(table: &[R]) -> Result<Self> {
        let n = check_shape(table)?;
        if let Some(&(x, y, z)) = associativity_violations(table).first() {
            return Err(Error::NotAssociative { x, y, z });
        }
        Ok(Self::from_table_unchecked(n, table))
    }

    fn from_table_unchecked<R: AsRef<[usize]>>(n: usize, table: &[R]) -> Self {
        let table = table
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&v| v as u8))
            .collect();
        FiniteSemigroup { n, table }
    }

    /// Builds the semigroup `x·y = f(x, y)` on `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Self::new(&rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    /// Row-major table entries.
    pub fn entries(&self) -> &[u8] {
        &self.table
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_band(&self) -> bool {
        self.first_non_idempotent().is_none()
    }

    fn first_non_idempotent(&self) -> Option<usize> {
        (0..self.n).find(|&x| self.mul(x, x) != x)
    }

    pub fn is_semilattice(&self) -> bool {
        self.is_band() && self.is_commutative()
    }

    /// `xy ∈ {x, y}` for all `x, y`.
    pub fn is_linear(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                let p = self.mul(x, y);
                p == x || p == y
            })
        })
    }

    /// `axay = axy` and `xaya = xya` for all `a, x, y`.
    pub fn is_shift_homomorphic(&self) -> bool {
        let m = |a, b| self.mul(a, b);
        (0..self.n).all(|a| {
            (0..self.n).all(|x| {
                (0..self.n).all(|y| {
                    let ax = m(a, x);
                    let xa = m(x, a);
                    m(ax, m(a, y)) == m(ax, y) && m(xa, m(y, a)) == m(x, m(y, a))
                })
            })
        })
    }

    /// Every left shift `x ↦ ax` and right shift `x ↦ xa` is an
    /// endomorphism. Computed directly from the shift maps.
    pub fn shifts_are_homomorphisms(&self) -> bool {
        (0..self.n).all(|a| {
            let left: Vec<usize> = (0..self.n).map(|x| self.mul(a, x)).collect();
            let right: Vec<usize> = (0..self.n).map(|x| self.mul(x, a)).collect();
            self.is_endomorphism(&left) && self.is_endomorphism(&right)
        })
    }

    fn is_endomorphism(&self, map: &[usize]) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| map[self.mul(x, y)] == self.mul(map[x], map[y])))
    }

    pub fn is_subsemigroup(&self, s: ElementSet) -> bool {
        s.iter()
            .all(|x| s.iter().all(|y| s.contains(self.mul(x, y))))
    }

    /// Smallest subsemigroup containing `s`.
    pub fn generated(&self, s: ElementSet) -> ElementSet {
        let mut cur = s;
        loop {
            let mut next = cur;
            for x in cur {
                for y in cur {
                    next.insert(self.mul(x, y));
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// All subsemigroups (including `∅`) in ascending bitmask order.
    pub fn subsemigroups(&self) -> Result<Vec<ElementSet>> {
        ensure_scan(self.n)?;
        Ok(all_subsets(self.n)
            .filter(|&s| self.is_subsemigroup(s))
            .collect())
    }

    /// The subsemigroup on a non-empty subset, re-indexed onto
    /// `0..s.len()` in ascending element order.
    pub fn restrict(&self, s: ElementSet) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if !s.within(self.n) {
            return Err(Error::OutOfCarrier { set: s, n: self.n });
        }
        let elems: Vec<usize> = s.iter().collect();
        let index = |v: usize| elems.iter().position(|&e| e == v);
        let mut rows = vec![vec![0; elems.len()]; elems.len()];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                rows[i][j] = index(self.mul(x, y)).ok_or_else(|| {
                    Error::NotASemilattice(format!("{s} is not closed under the operation"))
                })?;
            }
        }
        Ok(Self::from_table_unchecked(elems.len(), &rows))
    }

    /// Direct product; the pair `(i, j)` gets index `i·m + j`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let m = other.n;
        let n = self.n * m;
        if n > MAX_BITS {
            return Err(Error::TooLarge {
                what: "product carrier",
                limit: MAX_BITS,
            });
        }
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|p| {
                (0..n)
                    .map(|q| self.mul(p / m, q / m) * m + other.mul(p % m, q % m))
                    .collect()
            })
            .collect();
        Ok(Self::from_table_unchecked(n, &rows))
    }

    /// Relabels element `x` as `perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut table = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)] as u8;
            }
        }
        FiniteSemigroup { n, table }
    }

    /// Checks that `map: 0..n → 0..target.n` preserves the operation.
    pub fn check_homomorphism(&self, target: &Self, map: &[usize]) -> Result<()> {
        if map.len() != self.n {
            return Err(Error::MapShape {
                len: map.len(),
                n: self.n,
            });
        }
        if let Some(&value) = map.iter().find(|&&v| v >= target.n) {
            return Err(Error::MapValue { value, n: target.n });
        }
        for x in 0..self.n {
            for y in 0..self.n {
                if map[self.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn ensure_scan(n: usize) -> Result<()> {
    if n > MAX_SCAN {
        Err(Error::TooLarge {
            what: "carrier size for subset scans",
            limit: MAX_SCAN,
        })
    } else {
        Ok(())
    }
}

/// A commutative band: the operation is a meet for the natural order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FiniteSemilattice(FiniteSemigroup);

impl FiniteSemilattice {
    pub fn new<R: AsRef<[usize]>>(table: &[R]) -> Result<Self> {
        Self::try_from(FiniteSemigroup::new(table)?)
    }

    pub fn as_semigroup(&self) -> &FiniteSemigroup {
        &self.0
    }

    pub fn into_semigroup(self) -> FiniteSemigroup {
        self.0
    }
}

impl TryFrom<FiniteSemigroup> for FiniteSemilattice {
    type Error = Error;

    fn try_from(sg: FiniteSemigroup) -> Result<Self> {
        if let Some(x) = sg.first_non_idempotent() {
            return Err(Error::NotASemilattice(format!("{x}·{x} ≠ {x}")));
        }
        for x in 0..sg.n {
            for y in x + 1..sg.n {
                if sg.mul(x, y) != sg.mul(y, x) {
                    return Err(Error::NotASemilattice(format!("{x}·{y} ≠ {y}·{x}")));
                }
            }
        }
        Ok(FiniteSemilattice(sg))
    }
}

impl std::ops::Deref for FiniteSemilattice {
    type Target = FiniteSemigroup;
    fn deref(&self) -> &FiniteSemigroup {
        &self.0
    }
}
