//! Small named instances used throughout the tests and docs.

use crate::algebra::FiniteSemigroup;

/// The two-element group `{1, a}`: element `0` is the identity `1`, element `1` is `a`.
pub fn two_element_group() -> FiniteSemigroup {
    FiniteSemigroup::new(&[[0, 1], [1, 0]]).expect("group table")
}

/// The four-element lattice `⊥ < a, b < ⊤` under meet, indexed `⊥=0, a=1, b=2, ⊤=3`.
pub fn diamond() -> FiniteSemigroup {
    FiniteSemigroup::new(&[[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]])
        .expect("diamond table")
}

/// `{0, …, n-1}` under `min`.
pub fn chain(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, usize::min).expect("min table")
}

/// `{0, …, n-1}` under `max`.
pub fn max_chain(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, usize::max).expect("max table")
}

/// Left-zero band `xy = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |x, _| x).expect("left-zero table")
}

/// A bottom `0` with `n - 1` pairwise incomparable atoms above it.
pub fn fan(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |x, y| if x == y { x } else { 0 }).expect("fan table")
}
