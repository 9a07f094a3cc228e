//! The second exterior power of a free module, together with the
//! derivation operators whose matrix entries are the intersection
//! numbers this crate is about.
//!
//! The ambient module M is free with basis e^0, e^1, ..., e^rb where
//! `rb` is the rank bound (rb = n + 1 when working over the
//! Grassmannian of lines in P^(n+1)). The second exterior power has
//! basis {e^i ∧ e^j : 0 <= i < j <= rb}, and every vector here is a
//! finitely supported integer combination of those wedges.
//!
//! Three operators act on it, each determined by the first-order
//! derivation D1 e^i = e^(i-1) (with D1 e^0 = 0):
//!
//! * [`ExtVector::d1`]    — D1, extended by the Leibniz rule;
//! * [`ExtVector::d2`]    — the second Hasse–Schmidt piece,
//!   D2(x ∧ y) = D1²x ∧ y + D1x ∧ D1y + x ∧ D1²y;
//! * [`ExtVector::delta11`] — the mixed piece D1x ∧ D1y, which equals
//!   D1² − D2 as an operator.
//!
//! # Sign convention
//!
//! Storage is canonical-ascending: every key satisfies i < j, and
//! [`normalize`] rewrites an arbitrary wedge e^i ∧ e^j into that order,
//! flipping the sign when the indices come in descending. Intersection
//! numbers are classically written with both the source wedge
//! (e^(n+1) ∧ e^n) and the target wedge (e^1 ∧ e^0) in descending
//! order; the two sign flips cancel, so coefficient extraction against
//! the canonical basis element (0, 1) yields the same number. Working
//! canonically throughout means D1 never introduces a sign at all, and
//! D2 only does so on wedges of adjacent indices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A canonical basis wedge e^i ∧ e^j with 0 <= i < j <= rank_bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElement {
    i: u32,
    j: u32,
    rank_bound: u32,
}

impl BasisElement {
    /// Builds a canonical wedge; fails unless 0 <= i < j <= rank_bound.
    pub fn new(i: u32, j: u32, rank_bound: u32) -> Result<Self> {
        check_index(i, rank_bound)?;
        check_index(j, rank_bound)?;
        if i >= j {
            // Equal or descending indices are not canonical; callers that
            // hold an arbitrary index pair should go through `normalize`.
            return Err(Error::NotCanonical { i, j });
        }
        Ok(BasisElement { i, j, rank_bound })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn rank_bound(&self) -> u32 {
        self.rank_bound
    }

    /// Wedge degree i + j; D1 lowers it by one, D2 by two.
    pub fn degree(&self) -> u32 {
        self.i + self.j
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}∧e{}", self.i, self.j)
    }
}

fn check_index(index: u32, rank_bound: u32) -> Result<()> {
    if index > rank_bound {
        Err(Error::IndexOutOfRange { index, rank_bound })
    } else {
        Ok(())
    }
}

/// Sign of a normalized wedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Result of rewriting an arbitrary wedge e^i ∧ e^j into canonical order.
///
/// Either the wedge vanishes (repeated index) or it is ± a canonical
/// basis element; the sign records whether the input pair had to be
/// swapped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizedTerm {
    Zero,
    Canonical { sign: Sign, basis: BasisElement },
}

impl NormalizedTerm {
    /// +1, -1, or 0 for the vanishing case.
    pub fn sign_value(&self) -> i8 {
        match self {
            NormalizedTerm::Zero => 0,
            NormalizedTerm::Canonical { sign, .. } => sign.as_i8(),
        }
    }

    /// The canonical basis element, absent exactly when the sign is 0.
    pub fn basis(&self) -> Option<BasisElement> {
        match self {
            NormalizedTerm::Zero => None,
            NormalizedTerm::Canonical { basis, .. } => Some(*basis),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, NormalizedTerm::Zero)
    }
}

/// Rewrites e^i ∧ e^j (any index order) as 0 or ± a canonical wedge.
pub fn normalize(i: u32, j: u32, rank_bound: u32) -> Result<NormalizedTerm> {
    check_index(i, rank_bound)?;
    check_index(j, rank_bound)?;
    Ok(match i.cmp(&j) {
        std::cmp::Ordering::Equal => NormalizedTerm::Zero,
        std::cmp::Ordering::Less => NormalizedTerm::Canonical {
            sign: Sign::Plus,
            basis: BasisElement { i, j, rank_bound },
        },
        std::cmp::Ordering::Greater => NormalizedTerm::Canonical {
            sign: Sign::Minus,
            basis: BasisElement {
                i: j,
                j: i,
                rank_bound,
            },
        },
    })
}

/// A sparse integer vector in the second exterior power.
///
/// Zero coefficients are never stored, so two vectors are equal iff
/// they are equal as maps. All keys share the vector's rank bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtVector {
    rank_bound: u32,
    terms: BTreeMap<BasisElement, BigInt>,
}

impl ExtVector {
    pub fn zero(rank_bound: u32) -> Self {
        ExtVector {
            rank_bound,
            terms: BTreeMap::new(),
        }
    }

    /// The vector e^i ∧ e^j in any index order, normalized; a repeated
    /// index gives the zero vector.
    pub fn wedge(i: u32, j: u32, rank_bound: u32) -> Result<Self> {
        let mut v = ExtVector::zero(rank_bound);
        match normalize(i, j, rank_bound)? {
            NormalizedTerm::Zero => {}
            NormalizedTerm::Canonical { sign, basis } => {
                v.terms.insert(basis, BigInt::from(sign.as_i8()));
            }
        }
        Ok(v)
    }

    pub fn rank_bound(&self) -> u32 {
        self.rank_bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &BigInt)> {
        self.terms.iter()
    }

    /// Adds `coeff * basis`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, basis: BasisElement, coeff: impl Into<BigInt>) -> Result<()> {
        if basis.rank_bound != self.rank_bound {
            return Err(Error::RankMismatch {
                expected: self.rank_bound,
                found: basis.rank_bound,
            });
        }
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(basis).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&basis);
        }
        Ok(())
    }

    /// Coefficient of a canonical basis element; zero when absent.
    pub fn coefficient(&self, basis: &BasisElement) -> Result<BigInt> {
        if basis.rank_bound != self.rank_bound {
            return Err(Error::RankMismatch {
                expected: self.rank_bound,
                found: basis.rank_bound,
            });
        }
        Ok(self.terms.get(basis).cloned().unwrap_or_else(BigInt::zero))
    }

    pub fn add(&self, other: &ExtVector) -> Result<ExtVector> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &ExtVector) -> Result<ExtVector> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &ExtVector, scale: i8) -> Result<ExtVector> {
        if other.rank_bound != self.rank_bound {
            return Err(Error::RankMismatch {
                expected: self.rank_bound,
                found: other.rank_bound,
            });
        }
        let mut out = self.clone();
        for (basis, coeff) in &other.terms {
            out.add_term(*basis, coeff * scale)?;
        }
        Ok(out)
    }

    /// Accumulates `coeff * (e^i ∧ e^j)` after normalization. Operator
    /// images always stay inside the rank bound, so the normalize call
    /// cannot fail for in-range inputs.
    fn accumulate(&mut self, i: u32, j: u32, coeff: &BigInt) {
        match normalize(i, j, self.rank_bound).expect("operator image stays within rank bound") {
            NormalizedTerm::Zero => {}
            NormalizedTerm::Canonical { sign, basis } => {
                let signed = match sign {
                    Sign::Plus => coeff.clone(),
                    Sign::Minus => -coeff,
                };
                self.add_term(basis, signed)
                    .expect("image basis shares the vector's rank bound");
            }
        }
    }

    /// The derivation D1, term by term via the Leibniz rule:
    /// D1(x ∧ y) = D1 x ∧ y + x ∧ D1 y, with D1 e^0 = 0.
    pub fn d1(&self) -> ExtVector {
        let mut out = ExtVector::zero(self.rank_bound);
        for (basis, coeff) in &self.terms {
            if basis.i > 0 {
                out.accumulate(basis.i - 1, basis.j, coeff);
            }
            if basis.j > 0 {
                out.accumulate(basis.i, basis.j - 1, coeff);
            }
        }
        out
    }

    /// The second-order operator
    /// D2(x ∧ y) = D1²x ∧ y + D1x ∧ D1y + x ∧ D1²y.
    ///
    /// Only the third summand can produce a descending pair (when
    /// j - 2 < i), so this is the one place a sign can appear.
    pub fn d2(&self) -> ExtVector {
        let mut out = ExtVector::zero(self.rank_bound);
        for (basis, coeff) in &self.terms {
            if basis.i >= 2 {
                out.accumulate(basis.i - 2, basis.j, coeff);
            }
            if basis.i >= 1 && basis.j >= 1 {
                out.accumulate(basis.i - 1, basis.j - 1, coeff);
            }
            if basis.j >= 2 {
                out.accumulate(basis.i, basis.j - 2, coeff);
            }
        }
        out
    }

    /// The mixed second-order piece D1x ∧ D1y, equal to D1² − D2.
    pub fn delta11(&self) -> ExtVector {
        let mut out = ExtVector::zero(self.rank_bound);
        for (basis, coeff) in &self.terms {
            if basis.i >= 1 && basis.j >= 1 {
                out.accumulate(basis.i - 1, basis.j - 1, coeff);
            }
        }
        out
    }
}

impl fmt::Display for ExtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (basis, coeff)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}·{basis}")?;
        }
        Ok(())
    }
}
