//! The operator route to the intersection numbers.
//!
//! kappa(a, b, n) is the coefficient of the bottom wedge e^1 ∧ e^0 in
//! D1^a D2^b applied to the top wedge e^(n+1) ∧ e^n of the exterior
//! algebra with rank bound n + 1. It is defined exactly when the word
//! reaches top degree, a + 2b = 2n. Cells of the associated triangle
//! are addressed as K(m, n) = kappa(2m, n−m, n) for 0 <= m <= n.
//!
//! This route is the reference implementation: it is the definition,
//! mechanized, with no combinatorial identities in the loop. The other
//! routes in [`crate::closed_form`] and [`crate::traffic`] are checked
//! against it.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exterior::{BasisElement, ExtVector};

/// A validated query kappa(a, b, n).
///
/// Holding one proves a + 2b = 2n, so evaluation never needs a fallible
/// path: degree mismatch is rejected at construction, not mapped to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KappaQuery {
    a: u32,
    b: u32,
    n: u32,
}

impl KappaQuery {
    pub fn new(a: u32, b: u32, n: u32) -> Result<Self> {
        if u64::from(a) + 2 * u64::from(b) != 2 * u64::from(n) {
            return Err(Error::DegreeMismatch { a, b, n });
        }
        Ok(KappaQuery { a, b, n })
    }

    /// The query for the triangle cell K(m, n), i.e. a = 2m, b = n − m.
    pub fn for_cell(m: u32, n: u32) -> Result<Self> {
        if m > n {
            return Err(Error::OutsideTriangle { m, n });
        }
        Ok(KappaQuery {
            a: 2 * m,
            b: n - m,
            n,
        })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// Evaluates kappa(a, b, n) by applying the operator word to the top
/// wedge: all D2 steps first, then all D1 steps (the operators commute,
/// so the order is a convention, not a correctness condition).
pub fn kappa(query: &KappaQuery) -> BigInt {
    let rank_bound = query.n + 1;
    let mut vector = ExtVector::wedge(query.n, rank_bound, rank_bound)
        .expect("top wedge indices are within the rank bound");
    for _ in 0..query.b {
        vector = vector.d2();
    }
    for _ in 0..query.a {
        vector = vector.d1();
    }
    bottom_coefficient(&vector, rank_bound)
}

fn bottom_coefficient(vector: &ExtVector, rank_bound: u32) -> BigInt {
    let target =
        BasisElement::new(0, 1, rank_bound).expect("bottom wedge exists for every rank bound >= 1");
    vector
        .coefficient(&target)
        .expect("target shares the vector's rank bound")
}

/// K(m, n) = kappa(2m, n−m, n) for a cell of the triangle.
pub fn k_of(m: u32, n: u32) -> Result<BigInt> {
    Ok(kappa(&KappaQuery::for_cell(m, n)?))
}

/// The full triangle up to n_max, by the operator route.
///
/// Within a row all cells share the generator e^n ∧ e^(n+1), so the D2
/// chain is computed once and each cell only adds its own D1 steps.
pub fn k_table_operator(n_max: u32) -> KTable {
    KTable {
        n_max,
        rows: (0..=n_max).map(operator_row).collect(),
    }
}

fn operator_row(n: u32) -> Vec<BigInt> {
    let rank_bound = n + 1;
    let generator = ExtVector::wedge(n, rank_bound, rank_bound)
        .expect("top wedge indices are within the rank bound");
    let mut d2_chain = Vec::with_capacity(n as usize + 1);
    d2_chain.push(generator);
    for b in 1..=n as usize {
        d2_chain.push(d2_chain[b - 1].d2());
    }
    (0..=n)
        .map(|m| {
            let mut vector = d2_chain[(n - m) as usize].clone();
            for _ in 0..2 * m {
                vector = vector.d1();
            }
            bottom_coefficient(&vector, rank_bound)
        })
        .collect()
}

/// A lower-triangular table of K(m, n) values, 0 <= m <= n <= n_max.
///
/// The table is plain storage: routes fill it, audits read it, and
/// [`set`](KTable::set) exists so tests can perturb single cells and
/// watch the audits object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTable {
    n_max: u32,
    rows: Vec<Vec<BigInt>>,
}

impl KTable {
    /// Builds a table by evaluating `f(m, n)` on every cell of the
    /// triangle, row by row.
    pub fn from_fn(n_max: u32, mut f: impl FnMut(u32, u32) -> BigInt) -> Self {
        KTable {
            n_max,
            rows: (0..=n_max).map(|n| (0..=n).map(|m| f(m, n)).collect()).collect(),
        }
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    /// The value at (m, n); `None` outside the stored triangle.
    pub fn get(&self, m: u32, n: u32) -> Option<&BigInt> {
        self.rows.get(n as usize)?.get(m as usize)
    }

    /// Overwrites one cell.
    pub fn set(&mut self, m: u32, n: u32, value: BigInt) -> Result<()> {
        if m > n || n > self.n_max {
            return Err(Error::OutsideTriangle { m, n });
        }
        self.rows[n as usize][m as usize] = value;
        Ok(())
    }

    /// Row n as a slice K(0, n), ..., K(n, n).
    pub fn row(&self, n: u32) -> Option<&[BigInt]> {
        self.rows.get(n as usize).map(Vec::as_slice)
    }

    /// All cells in row-major order: n ascending, m ascending within a row.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.rows.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .map(move |(m, value)| (m as u32, n as u32, value))
        })
    }
}
