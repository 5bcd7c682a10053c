//! Uniform-cardinality set families in canonical colex order.

use crate::counting::{binomial, MAX_GROUND};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// A finite collection of subsets of [n], all of one cardinality, kept
/// sorted in colexicographic order without duplicates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Family {
    n: u32,
    uniform_card: u32,
    members: Vec<SubsetMask>,
}

/// Iterates the card-subsets of [n] in colex order (Gosper's hack).
/// Yields nothing when card > n; yields the empty set once when card = 0.
pub fn level_masks(n: u32, card: u32) -> impl Iterator<Item = SubsetMask> {
    let count = binomial(n, card);
    let mut current = if card == 0 { 0u64 } else { (1u64 << card) - 1 };
    let mut produced = 0u64;
    std::iter::from_fn(move || {
        if produced == count {
            return None;
        }
        let out = SubsetMask(current);
        produced += 1;
        if produced < count {
            let c = current & current.wrapping_neg();
            let r = current + c;
            current = (((r ^ current) >> 2) / c) | r;
        }
        Some(out)
    })
}

impl Family {
    /// Canonicalizes (sorts, dedups) and validates the given members.
    pub fn new(n: u32, uniform_card: u32, mut members: Vec<SubsetMask>) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        let above = if n == 64 { 0 } else { !0u64 << n };
        for &m in &members {
            if m.0 & above != 0 {
                return Err(Error::GroundSize(n));
            }
            if m.card() != uniform_card {
                return Err(Error::BadFamily {
                    expected: uniform_card,
                    found: m.card(),
                });
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(Family { n, uniform_card, members })
    }

    /// Internal fast path for members already sorted, unique and in range.
    pub(crate) fn from_sorted_unchecked(n: u32, uniform_card: u32, members: Vec<SubsetMask>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|m| m.card() == uniform_card));
        Family { n, uniform_card, members }
    }

    pub fn empty(n: u32, uniform_card: u32) -> Self {
        Family { n, uniform_card, members: Vec::new() }
    }

    /// The complete level: all card-subsets of [n].
    pub fn full_level(n: u32, card: u32) -> Self {
        Family {
            n,
            uniform_card: card,
            members: level_masks(n, card).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn uniform_card(&self) -> u32 {
        self.uniform_card
    }

    pub fn len(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn contains(&self, m: SubsetMask) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    /// All (card-1)-sets contained in some member.
    pub fn shadow(&self) -> Result<Family> {
        if self.uniform_card == 0 {
            return Err(Error::EmptyCardinality);
        }
        let mut out = Vec::with_capacity(self.members.len() * self.uniform_card as usize);
        for &m in &self.members {
            let mut bits = m.0;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                out.push(SubsetMask(m.0 ^ low));
                bits ^= low;
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(Family {
            n: self.n,
            uniform_card: self.uniform_card - 1,
            members: out,
        })
    }

    /// All (card+1)-subsets of [n] containing some member.
    pub fn shade(&self) -> Result<Family> {
        if self.uniform_card >= self.n {
            return Err(Error::FullCardinality(self.n));
        }
        let width = (self.n - self.uniform_card) as usize;
        let mut out = Vec::with_capacity(self.members.len() * width);
        let ground = if self.n == 64 { !0u64 } else { (1u64 << self.n) - 1 };
        for &m in &self.members {
            let mut free = ground & !m.0;
            while free != 0 {
                let low = free & free.wrapping_neg();
                out.push(SubsetMask(m.0 | low));
                free ^= low;
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(Family {
            n: self.n,
            uniform_card: self.uniform_card + 1,
            members: out,
        })
    }

    /// Merges two families of the same cardinality over the same ground set.
    pub fn union(&self, other: &Family) -> Result<Family> {
        if self.n != other.n {
            return Err(Error::GroundMismatch(self.n, other.n));
        }
        if self.uniform_card != other.uniform_card {
            return Err(Error::BadFamily {
                expected: self.uniform_card,
                found: other.uniform_card,
            });
        }
        let mut members = Vec::with_capacity(self.members.len() + other.members.len());
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                std::cmp::Ordering::Less => {
                    members.push(self.members[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    members.push(other.members[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    members.push(self.members[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        members.extend_from_slice(&self.members[i..]);
        members.extend_from_slice(&other.members[j..]);
        Ok(Family {
            n: self.n,
            uniform_card: self.uniform_card,
            members,
        })
    }
}

/// The first `t` card-subsets of [n] in colexicographic (squashed) order.
pub fn colex_prefix(t: u64, card: u32, n: u32) -> Result<Family> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::GroundSize(n));
    }
    let max = binomial(n, card);
    if t > max {
        return Err(Error::CountOutOfRange { t, max });
    }
    let members: Vec<SubsetMask> = level_masks(n, card).take(t as usize).collect();
    Ok(Family::from_sorted_unchecked(n, card, members))
}
