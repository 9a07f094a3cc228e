use crate::traffic::CityPoint;

/// Everything that can go wrong across the library.
///
/// Domain violations are reported as errors, never silently coerced to
/// zero: a query that is outside the defined triangle is a different
/// thing from a query whose answer happens to vanish.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A basis index exceeded the ambient rank bound.
    #[error("basis index {index} out of range: indices must satisfy 0 <= i <= {rank_bound}")]
    IndexOutOfRange { index: u32, rank_bound: u32 },

    /// A canonical basis element was requested with indices not in
    /// strictly increasing order.
    #[error("indices ({i}, {j}) are not canonical: a basis wedge needs i < j")]
    NotCanonical { i: u32, j: u32 },

    /// A wedge or coefficient lookup mixed elements of different ambient rank.
    #[error("rank bound mismatch: vector has rank bound {expected}, element has {found}")]
    RankMismatch { expected: u32, found: u32 },

    /// The operator word does not reach top degree: kappa(a, b, n) is only
    /// defined when a + 2b = 2n.
    #[error("invalid query: the constraint a + 2b = 2n fails for a={a}, b={b}, n={n} ({} != {})", u64::from(*a) + 2 * u64::from(*b), 2 * u64::from(*n))]
    DegreeMismatch { a: u32, b: u32, n: u32 },

    /// A table or walk query lies outside the triangle 0 <= m <= n.
    #[error("(m, n) = ({m}, {n}) outside the triangle 0 <= m <= n")]
    OutsideTriangle { m: u32, n: u32 },

    /// A point with no admissible moves was asked for its move set.
    #[error("point ({}, {}) is inaccessible (road block or beyond the beach)", point.m, point.n)]
    InaccessiblePoint { point: CityPoint },

    /// Path counting needs the origin inside its window.
    #[error("bounds must contain the origin (0, 0)")]
    OriginNotInBounds,
}

pub type Result<T> = std::result::Result<T, Error>;
