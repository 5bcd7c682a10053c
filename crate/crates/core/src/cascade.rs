//! Cascade representations and the closed-form shadow-size function.

use crate::counting::binomial;
use crate::error::{Error, Result};

/// Greedy cascade expansion t = sum of binomial(a_j, j) with the index j
/// descending from a top cardinality and a_{j} strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeRep {
    /// Pairs (a_j, j), j strictly decreasing from the top cardinality.
    pub terms: Vec<(u32, u32)>,
    /// The represented integer.
    pub t: u64,
}

impl CascadeRep {
    /// Re-evaluates the sum of binomials; equals `t` by construction.
    pub fn value(&self) -> u64 {
        self.terms.iter().map(|&(a, j)| binomial(a, j)).sum()
    }

    /// Index of the lowest term (r in the usual notation).
    pub fn bottom_index(&self) -> u32 {
        self.terms.last().map(|&(_, j)| j).unwrap_or(0)
    }
}

/// The unique greedy cascade of `t` with top index `card`. Only counts up
/// to binomial(64, card) are representable within the ground-size cap.
pub fn cascade_representation(t: u64, card: u32) -> Result<CascadeRep> {
    if t == 0 {
        return Err(Error::ZeroHasNoCascade);
    }
    if card == 0 || t > binomial(64, card) {
        return Err(Error::CountOutOfRange { t, max: binomial(64, card) });
    }
    let mut terms = Vec::new();
    let mut rest = t;
    let mut j = card;
    while rest > 0 {
        debug_assert!(j >= 1, "greedy cascade always terminates at index 1");
        // Largest a with binomial(a, j) <= rest; a >= j always works.
        let mut a = j;
        while a < 64 && binomial(a + 1, j) <= rest {
            a += 1;
        }
        terms.push((a, j));
        rest -= binomial(a, j);
        j -= 1;
    }
    Ok(CascadeRep { terms, t })
}

/// Exact size of the shadow of the first `t` card-sets in squashed order:
/// sum of binomial(a_j, j-1) over the cascade terms.
pub fn kk_shadow_size(t: u64, card: u32) -> Result<u64> {
    let rep = cascade_representation(t, card)?;
    Ok(rep.terms.iter().map(|&(a, j)| binomial(a, j - 1)).sum())
}

/// Size of the squashed full flat antichain with `t` upper sets:
/// t + binomial(n,l) - |shadow of the colex prefix|, with the t = 0 value
/// binomial(n,l) (the cascade is undefined at 0).
pub fn squashed_size(n: u32, l: u32, t: u64) -> Result<u64> {
    let max = binomial(n, l + 1);
    if t > max {
        return Err(Error::CountOutOfRange { t, max });
    }
    if t == 0 {
        return Ok(binomial(n, l));
    }
    Ok(t + binomial(n, l) - kk_shadow_size(t, l + 1)?)
}

/// Whether the squashed flat antichain with `t` upper sets is maximal:
/// true for t = 0, the full level, and whenever the cascade bottoms out at
/// index >= 2.
pub fn squashed_is_maximal(n: u32, l: u32, t: u64) -> Result<bool> {
    let max = binomial(n, l + 1);
    if t > max {
        return Err(Error::CountOutOfRange { t, max });
    }
    if t == 0 || t == max {
        return Ok(true);
    }
    Ok(cascade_representation(t, l + 1)?.bottom_index() >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::colex_prefix;

    #[test]
    fn cascade_examples() {
        assert_eq!(
            cascade_representation(10, 3).unwrap().terms,
            vec![(5, 3)] // binomial(5,3) = 10
        );
        assert_eq!(
            cascade_representation(14, 3).unwrap().terms,
            vec![(5, 3), (3, 2), (1, 1)] // 10 + 3 + 1
        );
        assert_eq!(cascade_representation(1, 3).unwrap().terms, vec![(3, 3)]);
        assert_eq!(cascade_representation(0, 3).unwrap_err(), Error::ZeroHasNoCascade);
    }

    #[test]
    fn cascade_at_the_ground_size_cap() {
        let t = binomial(64, 2);
        assert_eq!(cascade_representation(t, 2).unwrap().terms, vec![(64, 2)]);
        assert!(cascade_representation(t + 1, 2).is_err());
        assert_eq!(kk_shadow_size(t, 2).unwrap(), 64);
    }

    #[test]
    fn cascade_round_trip_and_monotone_terms() {
        for card in 2..=5u32 {
            for t in 1..=binomial(12, card) {
                let rep = cascade_representation(t, card).unwrap();
                assert_eq!(rep.value(), t);
                // Strictly decreasing in both components, a_j >= j >= 1.
                for w in rep.terms.windows(2) {
                    assert!(w[0].0 > w[1].0);
                    assert!(w[0].1 > w[1].1);
                }
                for &(a, j) in &rep.terms {
                    assert!(a >= j && j >= 1);
                }
                assert_eq!(rep.terms[0].1, card);
            }
        }
    }

    #[test]
    fn kk_shadow_examples() {
        assert_eq!(kk_shadow_size(10, 3).unwrap(), 10); // binomial(5,2)
        assert_eq!(kk_shadow_size(14, 3).unwrap(), 14); // 10 + 3 + 1
        assert_eq!(kk_shadow_size(1, 3).unwrap(), 3);
    }

    #[test]
    fn kk_matches_brute_force_shadow() {
        // Oracle equivalence across the full (t, card) grid at n = 12.
        for card in 2..=4u32 {
            for t in 1..=binomial(12, card) {
                let brute = colex_prefix(t, card, 12).unwrap().shadow().unwrap().len();
                assert_eq!(kk_shadow_size(t, card).unwrap(), brute, "t={t} card={card}");
            }
        }
    }

    #[test]
    fn squashed_size_examples() {
        assert_eq!(squashed_size(13, 2, 0).unwrap(), 78);
        assert_eq!(squashed_size(13, 2, 6).unwrap(), 75); // 6 + 78 - 9
        assert_eq!(squashed_size(13, 2, binomial(13, 3)).unwrap(), 286);
        assert!(squashed_size(13, 2, binomial(13, 3) + 1).is_err());
    }

    #[test]
    fn squashed_minimum_claim() {
        use crate::counting::catalan_prefix_sum;
        for (n, l) in [(13u32, 2u32), (12, 3), (11, 2), (10, 4)] {
            let floor = binomial(n, l) - catalan_prefix_sum(l);
            let mut seen_min = u64::MAX;
            for t in 0..=binomial(n, l + 1) {
                let s = squashed_size(n, l, t).unwrap();
                assert!(s >= floor, "n={n} l={l} t={t}");
                seen_min = seen_min.min(s);
            }
            assert_eq!(seen_min, floor);
        }
    }
}
