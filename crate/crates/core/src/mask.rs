//! Subsets of [n] = {1,...,n} as 64-bit masks, element i at bit i-1.

use crate::counting::{binomial, MAX_GROUND};
use crate::error::{Error, Result};

/// One subset of [n] packed into a word. The ground-set size is carried by
/// the surrounding [`crate::family::Family`] or operation; masks themselves
/// never set a bit at position >= n.
///
/// Colexicographic (squashed) order on equal-cardinality sets coincides with
/// numeric order of the underlying words, so sorting masks sorts families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Builds a mask from 1-based elements, validating against `n`.
    pub fn from_elements(elems: &[u32], n: u32) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        let mut bits = 0u64;
        for &e in elems {
            if e == 0 || e > n {
                return Err(Error::GroundSize(e));
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(SubsetMask(bits))
    }

    pub fn card(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, element: u32) -> bool {
        (1..=64).contains(&element) && self.0 & (1u64 << (element - 1)) != 0
    }

    pub fn insert(self, element: u32) -> Self {
        SubsetMask(self.0 | (1u64 << (element - 1)))
    }

    pub fn remove(self, element: u32) -> Self {
        SubsetMask(self.0 & !(1u64 << (element - 1)))
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based elements in increasing order.
    pub fn elements(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.card() as usize);
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros() + 1);
            bits &= bits - 1;
        }
        out
    }

    /// Position of this set in the colex enumeration of all card-sized sets:
    /// the combinatorial number system rank sum C(e_j - 1, j).
    pub fn colex_rank(self) -> u64 {
        let mut rank = 0u64;
        let mut bits = self.0;
        let mut j = 1u32;
        while bits != 0 {
            let e = bits.trailing_zeros() + 1;
            rank += binomial(e - 1, j);
            bits &= bits - 1;
            j += 1;
        }
        rank
    }

    /// Inverse of [`colex_rank`](Self::colex_rank) for the given cardinality.
    pub fn from_colex_rank(mut rank: u64, card: u32, n: u32) -> Self {
        let mut bits = 0u64;
        for j in (1..=card).rev() {
            // Largest e with C(e-1, j) <= rank.
            let mut e = j;
            while e < n && binomial(e, j) <= rank {
                e += 1;
            }
            rank -= binomial(e - 1, j);
            bits |= 1u64 << (e - 1);
        }
        SubsetMask(bits)
    }
}

impl std::fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Colex comparison straight from the definition: the larger set is the one
/// owning the maximum of the symmetric difference. Agrees with numeric order.
pub fn colex_cmp(a: SubsetMask, b: SubsetMask) -> std::cmp::Ordering {
    let diff = a.0 ^ b.0;
    if diff == 0 {
        return std::cmp::Ordering::Equal;
    }
    let top = 63 - diff.leading_zeros();
    if b.0 & (1u64 << top) != 0 {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(elems: &[u32]) -> SubsetMask {
        SubsetMask::from_elements(elems, 64).unwrap()
    }

    #[test]
    fn elements_round_trip() {
        let s = m(&[1, 5, 9]);
        assert_eq!(s.card(), 3);
        assert_eq!(s.elements(), vec![1, 5, 9]);
        assert!(s.contains(5));
        assert!(!s.contains(2));
    }

    #[test]
    fn colex_order_is_numeric_order() {
        // {1,2,3} < {1,2,4} < {1,3,4} < {2,3,4} < {1,2,5}
        let chain = [
            m(&[1, 2, 3]),
            m(&[1, 2, 4]),
            m(&[1, 3, 4]),
            m(&[2, 3, 4]),
            m(&[1, 2, 5]),
        ];
        for w in chain.windows(2) {
            assert_eq!(colex_cmp(w[0], w[1]), std::cmp::Ordering::Less);
            assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn colex_rank_round_trip() {
        assert_eq!(m(&[1, 2, 3]).colex_rank(), 0);
        assert_eq!(m(&[1, 2, 4]).colex_rank(), 1);
        for rank in 0..binomial(9, 4) {
            let s = SubsetMask::from_colex_rank(rank, 4, 9);
            assert_eq!(s.card(), 4);
            assert_eq!(s.colex_rank(), rank);
        }
    }

    #[test]
    fn rejects_out_of_range_elements() {
        assert!(SubsetMask::from_elements(&[0], 8).is_err());
        assert!(SubsetMask::from_elements(&[9], 8).is_err());
        assert!(SubsetMask::from_elements(&[3], 0).is_err());
    }
}
