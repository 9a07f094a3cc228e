//! Catalan traffic: walks through a city with one-way streets, gates,
//! and road blocks, whose endpoint counts reproduce the intersection
//! numbers.
//!
//! The city is the integer lattice with coordinates (m, n): m runs
//! east, n runs north. Two lines organize the street plan — the beach
//! m = n and the control line 2m + n = 0:
//!
//! * the half-plane beyond the beach (m > n) is off the map; walks may
//!   touch the beach but never cross it;
//! * strictly below the control line (2m + n < 0) the streets are
//!   one-way North and West;
//! * strictly above its shadow (2m + n > 1) they are one-way East and
//!   North-East;
//! * on the control line itself (2m + n = 0) sits a gate allowing
//!   West, East, and North-East — the only place traffic can turn
//!   around;
//! * directly above each gate (2m + n = 1) sits a road block with no
//!   way in or out.
//!
//! Every walk starts at the origin, itself a gate. [`count_paths`]
//! tallies the walks ending at each point of a rectangular window;
//! [`upsilon`] reads the count at a triangle point 0 <= m <= n, which
//! equals the intersection number K(m, n) — Catalan numbers climb the
//! diagonal.
//!
//! The move graph is acyclic: no move decreases n, and within a row
//! West only runs where 2m + n <= 0 while East only runs where
//! 2m + n >= 0, each strictly away from the gate, so a row admits no
//! round trip. Acyclicity is what makes the counts finite and the
//! dynamic program below well-founded.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A lattice point of the city.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CityPoint {
    pub m: i64,
    pub n: i64,
}

impl CityPoint {
    pub const ORIGIN: CityPoint = CityPoint { m: 0, n: 0 };

    pub fn new(m: i64, n: i64) -> Self {
        CityPoint { m, n }
    }

    /// Signed distance data for the control line: 2m + n.
    fn control(&self) -> i64 {
        2 * self.m + self.n
    }
}

impl fmt::Display for CityPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// Which part of the street plan a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Zone {
    /// 2m + n < 0: one-way North/West country.
    BelowLine,
    /// 2m + n = 0: turn-around point allowing West, East, North-East.
    Gate,
    /// 2m + n = 1: inaccessible — no moves in, none out.
    RoadBlock,
    /// 2m + n > 1: one-way East/North-East country.
    AboveLine,
    /// m > n: beyond the beach, off the map entirely.
    BeachForbidden,
}

impl Zone {
    /// Whether walks may visit the point at all.
    pub fn is_accessible(self) -> bool {
        !matches!(self, Zone::RoadBlock | Zone::BeachForbidden)
    }

    /// Stable lowercase label, used by machine-readable output.
    pub fn label(self) -> &'static str {
        match self {
            Zone::BelowLine => "below-line",
            Zone::Gate => "gate",
            Zone::RoadBlock => "road-block",
            Zone::AboveLine => "above-line",
            Zone::BeachForbidden => "beach",
        }
    }
}

/// The four street directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    North,
    West,
    East,
    NorthEast,
}

impl Move {
    pub const ALL: [Move; 4] = [Move::North, Move::West, Move::East, Move::NorthEast];

    pub fn displacement(self) -> (i64, i64) {
        match self {
            Move::North => (0, 1),
            Move::West => (-1, 0),
            Move::East => (1, 0),
            Move::NorthEast => (1, 1),
        }
    }

    pub fn apply(self, p: CityPoint) -> CityPoint {
        let (dm, dn) = self.displacement();
        CityPoint::new(p.m + dm, p.n + dn)
    }
}

/// Classifies a point. The beach dominates: a point with m > n is
/// beyond the beach no matter where the control line runs.
pub fn classify(p: CityPoint) -> Zone {
    if p.m > p.n {
        return Zone::BeachForbidden;
    }
    match p.control() {
        c if c < 0 => Zone::BelowLine,
        0 => Zone::Gate,
        1 => Zone::RoadBlock,
        _ => Zone::AboveLine,
    }
}

/// Directions a zone offers before destination checks.
fn zone_moves(zone: Zone) -> &'static [Move] {
    match zone {
        Zone::BelowLine => &[Move::North, Move::West],
        Zone::Gate => &[Move::West, Move::East, Move::NorthEast],
        Zone::AboveLine => &[Move::East, Move::NorthEast],
        Zone::RoadBlock | Zone::BeachForbidden => &[],
    }
}

/// The moves actually available at an accessible point: the zone's
/// directions, minus any whose destination is a road block or beyond
/// the beach. Asking at an inaccessible point is an error.
pub fn allowed_moves(p: CityPoint) -> Result<Vec<Move>> {
    let zone = classify(p);
    if !zone.is_accessible() {
        return Err(Error::InaccessiblePoint { point: p });
    }
    Ok(zone_moves(zone)
        .iter()
        .copied()
        .filter(|mv| classify(mv.apply(p)).is_accessible())
        .collect())
}

/// An inclusive rectangular window of lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub m_min: i64,
    pub m_max: i64,
    pub n_min: i64,
    pub n_max: i64,
}

impl Bounds {
    pub fn new(m_min: i64, m_max: i64, n_min: i64, n_max: i64) -> Self {
        Bounds {
            m_min,
            m_max,
            n_min,
            n_max,
        }
    }

    pub fn contains(&self, p: CityPoint) -> bool {
        self.m_min <= p.m && p.m <= self.m_max && self.n_min <= p.n && p.n <= self.n_max
    }

    /// A window wide enough that every count in rows 0..=n is
    /// boundary-independent: a walk bound for row n never goes west of
    /// column −(2n + 2), never north of row n, and never east of the
    /// beach.
    pub fn sufficient_for(n: u32) -> Self {
        let n = i64::from(n);
        Bounds {
            m_min: -(2 * n + 2),
            m_max: n,
            n_min: 0,
            n_max: n,
        }
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m in [{}, {}], n in [{}, {}]",
            self.m_min, self.m_max, self.n_min, self.n_max
        )
    }
}

/// Walk counts over a window, with reliability marks.
///
/// Every accessible point of the window in rows n >= 0 has an explicit
/// entry (zero when no walk ends there); road blocks and beach points
/// never do. A point is marked unreliable when its count could receive
/// contributions from outside the window — such counts are lower
/// bounds, not wrong answers, and widening the window settles them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountGrid {
    bounds: Bounds,
    counts: BTreeMap<CityPoint, BigInt>,
    unreliable: BTreeSet<CityPoint>,
}

impl PathCountGrid {
    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    /// The stored count at p; `None` for inaccessible points, points
    /// outside the window, and rows below the origin.
    pub fn count(&self, p: CityPoint) -> Option<&BigInt> {
        self.counts.get(&p)
    }

    /// Whether the count at p (absent meaning zero) is guaranteed to be
    /// the true all-of-the-plane count. Points outside the window are
    /// never reliable; inaccessible points inside it always are.
    pub fn is_reliable(&self, p: CityPoint) -> bool {
        self.bounds.contains(p) && !self.unreliable.contains(&p)
    }

    /// All stored counts in key order.
    pub fn cells(&self) -> impl Iterator<Item = (CityPoint, &BigInt)> {
        self.counts.iter().map(|(p, c)| (*p, c))
    }
}

/// Counts the walks from the origin to every point of the window.
///
/// Processing order follows the street plan: rows from the bottom up;
/// within a row, the gate-and-below side right to left (West chains
/// flow leftward), then the above-line side left to right (East chains
/// flow rightward). Each cell's inflow is then already settled when the
/// cell is reached.
pub fn count_paths(bounds: Bounds) -> Result<PathCountGrid> {
    if !bounds.contains(CityPoint::ORIGIN) {
        return Err(Error::OriginNotInBounds);
    }
    let mut grid = PathCountGrid {
        bounds,
        counts: BTreeMap::new(),
        unreliable: BTreeSet::new(),
    };
    for n in 0..=bounds.n_max {
        let mut westward = Vec::new();
        let mut eastward = Vec::new();
        for m in bounds.m_min..=bounds.m_max {
            let p = CityPoint::new(m, n);
            if !classify(p).is_accessible() {
                continue;
            }
            // Control values step by 2 across a row, so exactly one of
            // the gate line (0) and the block line (1) can occur in it.
            if p.control() <= 0 {
                westward.push(p);
            } else {
                eastward.push(p);
            }
        }
        for p in westward.into_iter().rev() {
            settle(&mut grid, p);
        }
        for p in eastward {
            settle(&mut grid, p);
        }
    }
    Ok(grid)
}

/// Computes the final count at p from its (already settled) in-edges.
fn settle(grid: &mut PathCountGrid, p: CityPoint) {
    // The empty walk ends where it starts.
    let mut total = if p == CityPoint::ORIGIN {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    let mut tainted = false;
    for mv in Move::ALL {
        let (dm, dn) = mv.displacement();
        let source = CityPoint::new(p.m - dm, p.n - dn);
        if source.n < 0 {
            // No walk descends below the start row, so absent rows
            // contribute nothing and cost no reliability.
            continue;
        }
        let source_zone = classify(source);
        if !source_zone.is_accessible() || !zone_moves(source_zone).contains(&mv) {
            continue;
        }
        // The move's destination is p itself, which is accessible, so
        // the edge exists.
        if !grid.bounds.contains(source) {
            tainted = true;
            continue;
        }
        if let Some(count) = grid.counts.get(&source) {
            total += count;
        }
        if grid.unreliable.contains(&source) {
            tainted = true;
        }
    }
    grid.counts.insert(p, total);
    if tainted {
        grid.unreliable.insert(p);
    }
}

/// The walk count at triangle point (m, n), 0 <= m <= n, over an
/// automatically chosen window.
///
/// The default window is provably wide enough; if the reliability
/// marking ever says otherwise the window is widened westward rather
/// than trusted.
pub fn upsilon(m: u32, n: u32) -> Result<BigInt> {
    if m > n {
        return Err(Error::OutsideTriangle { m, n });
    }
    let target = CityPoint::new(i64::from(m), i64::from(n));
    let mut bounds = Bounds::sufficient_for(n);
    for _ in 0..6 {
        let grid = count_paths(bounds)?;
        if grid.is_reliable(target) {
            return Ok(grid.count(target).cloned().unwrap_or_else(BigInt::zero));
        }
        bounds.m_min *= 2;
    }
    unreachable!("window widening failed to reach a reliable count at {target}");
}

/// The walk count under the transposed reading of the map, in which the
/// first coordinate is taken as the vertical one: the count for (m, n)
/// is then read at lattice point (n, m). On the strict triangle m < n
/// that point lies beyond the beach, so this reading only survives a
/// cross-check on the diagonal; it exists so that a route comparison
/// can try both readings and report which one the data supports.
pub fn upsilon_transposed(m: u32, n: u32) -> Result<BigInt> {
    if m > n {
        return Err(Error::OutsideTriangle { m, n });
    }
    let target = CityPoint::new(i64::from(n), i64::from(m));
    let mut bounds = Bounds::sufficient_for(m);
    bounds.m_max = i64::from(n);
    let grid = count_paths(bounds)?;
    Ok(grid.count(target).cloned().unwrap_or_else(BigInt::zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Walk-tree enumeration, independent of the dynamic program: count
    /// every move sequence from the origin that ends at `target`,
    /// pruning only provably hopeless branches.
    fn brute_force_walks(target: CityPoint) -> u64 {
        fn explore(p: CityPoint, target: CityPoint, found: &mut u64) {
            if p == target {
                // The move graph is acyclic, so no extension returns.
                *found += 1;
                return;
            }
            // A detour can reach the target's own column, or as far west
            // as still allows climbing back to a gate by the target row.
            let west_limit = (-(2 * target.n + 2)).min(target.m);
            for mv in allowed_moves(p).expect("explored points are accessible") {
                let q = mv.apply(p);
                if q.n > target.n {
                    continue;
                }
                if q.m < west_limit {
                    continue;
                }
                if classify(q) == Zone::AboveLine && q.m > target.m {
                    // East of the target above the line, m only grows.
                    continue;
                }
                explore(q, target, found);
            }
        }
        let mut found = 0;
        explore(CityPoint::ORIGIN, target, &mut found);
        found
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(CityPoint::new(0, 0)), Zone::Gate);
        assert_eq!(classify(CityPoint::new(0, 1)), Zone::RoadBlock);
        assert_eq!(classify(CityPoint::new(2, 1)), Zone::BeachForbidden);
        assert_eq!(classify(CityPoint::new(-1, 0)), Zone::BelowLine);
        assert_eq!(classify(CityPoint::new(-1, 2)), Zone::Gate);
        assert_eq!(classify(CityPoint::new(1, 1)), Zone::AboveLine);
    }

    #[test]
    fn beach_dominates_the_control_line() {
        // (1, -1) has control value 1, but it is past the beach first.
        assert_eq!(classify(CityPoint::new(1, -1)), Zone::BeachForbidden);
    }

    #[test]
    fn moves_below_the_line() {
        assert_eq!(
            allowed_moves(CityPoint::new(-1, 0)).unwrap(),
            vec![Move::North, Move::West]
        );
    }

    #[test]
    fn origin_gate_loses_east_to_the_beach() {
        assert_eq!(
            allowed_moves(CityPoint::ORIGIN).unwrap(),
            vec![Move::West, Move::NorthEast]
        );
    }

    #[test]
    fn interior_gate_keeps_all_three_directions() {
        assert_eq!(
            allowed_moves(CityPoint::new(-1, 2)).unwrap(),
            vec![Move::West, Move::East, Move::NorthEast]
        );
    }

    #[test]
    fn moves_above_the_line() {
        assert_eq!(
            allowed_moves(CityPoint::new(1, 2)).unwrap(),
            vec![Move::East, Move::NorthEast]
        );
    }

    #[test]
    fn road_block_has_no_moves() {
        assert_eq!(
            allowed_moves(CityPoint::new(0, 1)),
            Err(Error::InaccessiblePoint {
                point: CityPoint::new(0, 1)
            })
        );
    }

    #[test]
    fn no_move_enters_a_road_block_or_the_beach() {
        for m in -8..=8i64 {
            for n in -4..=8i64 {
                let p = CityPoint::new(m, n);
                if !classify(p).is_accessible() {
                    continue;
                }
                for mv in allowed_moves(p).unwrap() {
                    assert!(
                        classify(mv.apply(p)).is_accessible(),
                        "{p} offers {mv:?} into an inaccessible point"
                    );
                }
            }
        }
    }

    #[test]
    fn move_graph_is_acyclic_on_a_patch() {
        // Depth-first search from every accessible point of a window;
        // re-entering the start would be a cycle.
        let window = Bounds::new(-8, 4, 0, 4);
        fn dfs(p: CityPoint, start: CityPoint, window: &Bounds) {
            for mv in allowed_moves(p).unwrap() {
                let q = mv.apply(p);
                if !window.contains(q) {
                    continue;
                }
                assert_ne!(q, start, "cycle through {start}");
                dfs(q, start, window);
            }
        }
        for m in window.m_min..=window.m_max {
            for n in window.n_min..=window.n_max {
                let p = CityPoint::new(m, n);
                if classify(p).is_accessible() {
                    dfs(p, p, &window);
                }
            }
        }
    }

    #[test]
    fn example_window_counts() {
        let grid = count_paths(Bounds::new(-6, 2, 0, 2)).unwrap();
        assert_eq!(grid.count(CityPoint::ORIGIN), Some(&BigInt::from(1)));
        assert_eq!(grid.count(CityPoint::new(2, 2)), Some(&BigInt::from(2)));
        assert_eq!(grid.count(CityPoint::new(0, 2)), Some(&BigInt::from(1)));
        // Inaccessible points carry no count at all.
        assert_eq!(grid.count(CityPoint::new(0, 1)), None);
        assert_eq!(grid.count(CityPoint::new(2, 1)), None);
        // This window is wide enough for everything it shows.
        for (p, _) in grid.cells() {
            assert!(grid.is_reliable(p), "{p} unexpectedly unreliable");
        }
    }

    #[test]
    fn west_side_counts_match_hand_computation() {
        let grid = count_paths(Bounds::new(-6, 2, 0, 2)).unwrap();
        let expect = [
            ((-1, 1), 1),
            ((-2, 1), 2),
            ((-3, 1), 3),
            ((-1, 2), 1),
            ((-2, 2), 3),
            ((-3, 2), 6),
            ((-4, 2), 10),
        ];
        for ((m, n), want) in expect {
            assert_eq!(
                grid.count(CityPoint::new(m, n)),
                Some(&BigInt::from(want)),
                "({m}, {n})"
            );
        }
    }

    #[test]
    fn counts_require_the_origin() {
        assert_eq!(
            count_paths(Bounds::new(1, 4, 0, 4)),
            Err(Error::OriginNotInBounds)
        );
        assert_eq!(
            count_paths(Bounds::new(-4, 4, 1, 4)),
            Err(Error::OriginNotInBounds)
        );
    }

    #[test]
    fn narrow_window_is_marked_unreliable_not_wrong() {
        // Cutting off the west loses the walks that detour through the
        // gate column; the counts come back short but flagged.
        let grid = count_paths(Bounds::new(0, 2, 0, 2)).unwrap();
        assert!(grid.is_reliable(CityPoint::ORIGIN));
        assert!(grid.is_reliable(CityPoint::new(1, 1)));
        assert!(!grid.is_reliable(CityPoint::new(0, 2)));
        assert!(!grid.is_reliable(CityPoint::new(2, 2)));
        // The flagged count is a lower bound: it misses one walk.
        assert_eq!(grid.count(CityPoint::new(2, 2)), Some(&BigInt::from(1)));
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(upsilon(4, 4).unwrap(), BigInt::from(14));
        assert_eq!(upsilon(1, 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn upsilon_at_the_road_block_is_zero() {
        assert_eq!(upsilon(0, 1).unwrap(), BigInt::from(0));
    }

    #[test]
    fn upsilon_rejects_points_past_the_beach() {
        assert_eq!(upsilon(3, 2), Err(Error::OutsideTriangle { m: 3, n: 2 }));
    }

    #[test]
    fn upsilon_matches_walk_enumeration() {
        for n in 0..=4 {
            for m in 0..=n {
                let brute = brute_force_walks(CityPoint::new(i64::from(m), i64::from(n)));
                assert_eq!(upsilon(m, n).unwrap(), BigInt::from(brute), "({m}, {n})");
            }
        }
    }

    #[test]
    fn west_side_counts_match_walk_enumeration() {
        let grid = count_paths(Bounds::sufficient_for(3)).unwrap();
        for m in -5..=0i64 {
            for n in 0..=3i64 {
                let p = CityPoint::new(m, n);
                if !classify(p).is_accessible() {
                    continue;
                }
                let brute = brute_force_walks(p);
                assert_eq!(
                    grid.count(p),
                    Some(&BigInt::from(brute)),
                    "{p}"
                );
            }
        }
    }

    #[test]
    fn widening_the_window_never_changes_reliable_counts() {
        let base = count_paths(Bounds::sufficient_for(4)).unwrap();
        let wider = count_paths(Bounds::new(-16, 8, 0, 7)).unwrap();
        for (p, count) in base.cells() {
            if base.is_reliable(p) {
                assert_eq!(wider.count(p), Some(count), "{p}");
            }
        }
    }

    #[test]
    fn transposed_reading_only_survives_on_the_diagonal() {
        assert_eq!(upsilon_transposed(2, 2).unwrap(), BigInt::from(2));
        assert_eq!(upsilon_transposed(3, 3).unwrap(), BigInt::from(5));
        assert_eq!(upsilon_transposed(0, 2).unwrap(), BigInt::from(0));
        assert_eq!(upsilon_transposed(1, 3).unwrap(), BigInt::from(0));
    }
}
