//! Catalan numbers, binomial coefficients, and closed formulas for the
//! triangle K(m, n) = kappa(2m, n−m).
//!
//! Three independent expressions for the same triangle live here:
//!
//! * [`k_recursive`] — the two-term recursion
//!   K(m, n) = K(m+1, n) − K(m, n−1), seeded with K(n, n) = C_n;
//! * [`kappa_simplified`] — the alternating Catalan sum
//!   Σ_i (−1)^i · binomial(n−m, i) · C_{n−i};
//! * [`kappa_double_sum`] — a double sum of binomial/factorial terms
//!   whose summands are rational and only collapse to an integer in
//!   total.
//!
//! None of them touches the exterior-algebra machinery, which is what
//! makes them useful as cross-checks against the operator route.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact binomial coefficient, with the out-of-range convention
/// binomial(n, k) = 0 whenever k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    // Prefix products are themselves binomials, so each division is exact.
    for step in 0..k {
        acc = acc * (n - step) / (step + 1);
    }
    acc
}

/// The n-th Catalan number C_n = binomial(2n, n) / (n + 1).
///
/// The division is checked: a nonzero remainder would mean the binomial
/// machinery is broken, so it panics rather than rounding.
pub fn catalan(n: u32) -> BigInt {
    let n = i64::from(n);
    let (quot, rem) = binomial(2 * n, n).div_rem(&BigInt::from(n + 1));
    assert!(rem.is_zero(), "binomial(2n, n) must be divisible by n + 1");
    quot
}

/// A grow-on-demand cache of Catalan numbers.
///
/// Entry n always holds exactly `catalan(n)`. The cache is plain owned
/// state: share one per computation if you want sharing, or rely on
/// [`catalan`] directly — both are pure.
#[derive(Debug, Clone, Default)]
pub struct CatalanCache {
    values: Vec<BigInt>,
}

impl CatalanCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// C_n, extending the cache as needed.
    pub fn get(&mut self, n: u32) -> &BigInt {
        while self.values.len() <= n as usize {
            self.values.push(catalan(self.values.len() as u32));
        }
        &self.values[n as usize]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// All rows 0..=n_max of the triangle, by the recursion
/// K(m, n) = K(m+1, n) − K(m, n−1) with Catalan seeds on the diagonal.
///
/// Row n of the result holds K(0, n), ..., K(n, n) in that order.
pub fn k_recursive_triangle(n_max: u32) -> Vec<Vec<BigInt>> {
    let mut cache = CatalanCache::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max as usize {
        let mut row = vec![BigInt::zero(); n + 1];
        row[n] = cache.get(n as u32).clone();
        // Filling with m descending makes K(m+1, n) available in this
        // row and K(m, n−1) available in the previous one.
        for m in (0..n).rev() {
            row[m] = &row[m + 1] - &rows[n - 1][m];
        }
        rows.push(row);
    }
    rows
}

/// K(m, n) by the triangle recursion. Requires 0 <= m <= n.
pub fn k_recursive(m: u32, n: u32) -> Result<BigInt> {
    if m > n {
        return Err(Error::OutsideTriangle { m, n });
    }
    let mut rows = k_recursive_triangle(n);
    Ok(rows.pop().expect("triangle has row n").swap_remove(m as usize))
}

/// K(m, n) by the alternating Catalan sum
/// Σ_{i=0}^{n−m} (−1)^i · binomial(n−m, i) · C_{n−i}.
pub fn kappa_simplified(m: u32, n: u32) -> Result<BigInt> {
    if m > n {
        return Err(Error::OutsideTriangle { m, n });
    }
    let depth = n - m;
    let mut acc = BigInt::zero();
    for i in 0..=depth {
        let term = binomial(i64::from(depth), i64::from(i)) * catalan(n - i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

fn factorial(k: i64) -> BigInt {
    debug_assert!(k >= 0);
    let mut acc = BigInt::one();
    for step in 2..=k {
        acc *= step;
    }
    acc
}

/// K(m, n) by the unsimplified double sum
///
/// Σ_{i=0}^{n−m} Σ_{j=0}^{2m} binomial(2m, j) · (n−m)! ·
///     (m + n − 2j − 3i + 1) / (i! · (n − j − 2i + 1)! · (i + j − m)!).
///
/// A summand with a negative factorial argument contributes nothing.
/// Individual summands are genuinely rational; arithmetic is exact
/// rational throughout and only the total is claimed to be an integer,
/// so integrality of the sum is asserted rather than assumed.
pub fn kappa_double_sum(m: u32, n: u32) -> Result<BigInt> {
    if m > n {
        return Err(Error::OutsideTriangle { m, n });
    }
    let (m, n) = (i64::from(m), i64::from(n));
    let mut acc = BigRational::zero();
    for i in 0..=(n - m) {
        for j in 0..=(2 * m) {
            let lowered = n - j - 2 * i + 1;
            let raised = i + j - m;
            if lowered < 0 || raised < 0 {
                continue;
            }
            let numer =
                binomial(2 * m, j) * factorial(n - m) * BigInt::from(m + n - 2 * j - 3 * i + 1);
            let denom = factorial(i) * factorial(lowered) * factorial(raised);
            acc += BigRational::new(numer, denom);
        }
    }
    assert!(
        acc.is_integer(),
        "double sum for K({m}, {n}) did not collapse to an integer: {acc}"
    );
    Ok(acc.to_integer())
}
