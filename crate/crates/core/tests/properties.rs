//! Randomized invariants: algebraic operator laws on arbitrary sparse
//! vectors, order-invariance of the operator word, and window
//! independence of the walk counts.

use proptest::prelude::*;

use catalan_traffic::closed_form;
use catalan_traffic::exterior::{normalize, BasisElement, ExtVector, NormalizedTerm};
use catalan_traffic::intersect;
use catalan_traffic::traffic::{count_paths, upsilon, Bounds};

/// Arbitrary sparse vectors with rank bound up to 14, built through the
/// same normalize/add paths production code uses.
fn vector_strategy() -> impl Strategy<Value = ExtVector> {
    (1u32..=14).prop_flat_map(|rank_bound| {
        prop::collection::vec((0..=rank_bound, 0..=rank_bound, -9i64..=9), 0..6).prop_map(
            move |raw_terms| {
                let mut v = ExtVector::zero(rank_bound);
                for (x, y, coeff) in raw_terms {
                    if let NormalizedTerm::Canonical { sign, basis } =
                        normalize(x, y, rank_bound).unwrap()
                    {
                        v.add_term(basis, coeff * i64::from(sign.as_i8())).unwrap();
                    }
                }
                v
            },
        )
    })
}

/// A triangle cell (m, n) with its operator word D1^2m D2^(n−m) in a
/// random application order: `true` steps apply D1, `false` apply D2.
fn shuffled_word_strategy() -> impl Strategy<Value = (u32, u32, Vec<bool>)> {
    (0u32..=5)
        .prop_flat_map(|n| (0..=n, Just(n)))
        .prop_flat_map(|(m, n)| {
            let mut word = vec![true; 2 * m as usize];
            word.extend(std::iter::repeat_n(false, (n - m) as usize));
            Just(word)
                .prop_shuffle()
                .prop_map(move |shuffled| (m, n, shuffled))
        })
}

proptest! {
    #[test]
    fn delta11_is_d1_squared_minus_d2_on_arbitrary_vectors(v in vector_strategy()) {
        let rhs = v.d1().d1().sub(&v.d2()).unwrap();
        prop_assert_eq!(v.delta11(), rhs);
    }

    #[test]
    fn d1_and_d2_commute_on_arbitrary_vectors(v in vector_strategy()) {
        prop_assert_eq!(v.d1().d2(), v.d2().d1());
    }

    #[test]
    fn kappa_does_not_depend_on_word_order((m, n, word) in shuffled_word_strategy()) {
        let rank_bound = n + 1;
        let mut v = ExtVector::wedge(n, rank_bound, rank_bound).unwrap();
        for is_d1 in word {
            v = if is_d1 { v.d1() } else { v.d2() };
        }
        let target = BasisElement::new(0, 1, rank_bound).unwrap();
        prop_assert_eq!(
            v.coefficient(&target).unwrap(),
            intersect::k_of(m, n).unwrap()
        );
    }

    #[test]
    fn reliable_counts_survive_any_window_growth(
        m_min in -14i64..=0,
        m_max in 0i64..=7,
        n_min in -2i64..=0,
        n_max in 0i64..=8,
        grow_west in 1i64..=4,
        grow_east in 1i64..=4,
        grow_north in 1i64..=4,
    ) {
        let base = count_paths(Bounds::new(m_min, m_max, n_min, n_max)).unwrap();
        let grown = count_paths(Bounds::new(
            m_min - grow_west,
            m_max + grow_east,
            n_min,
            n_max + grow_north,
        ))
        .unwrap();
        // A window so wide nothing relevant to rows <= 8 is outside it.
        let vast = count_paths(Bounds::new(-40, 16, n_min, n_max)).unwrap();
        for (p, count) in base.cells() {
            if base.is_reliable(p) {
                prop_assert_eq!(grown.count(p), Some(count), "grown window at {}", p);
                prop_assert_eq!(vast.count(p), Some(count), "vast window at {}", p);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn four_routes_agree_on_random_cells(n in 0u32..=8, m_seed in 0u32..=8) {
        let m = m_seed % (n + 1);
        let operator = intersect::k_of(m, n).unwrap();
        prop_assert_eq!(&operator, &closed_form::k_recursive(m, n).unwrap());
        prop_assert_eq!(&operator, &closed_form::kappa_simplified(m, n).unwrap());
        prop_assert_eq!(&operator, &upsilon(m, n).unwrap());
    }
}
