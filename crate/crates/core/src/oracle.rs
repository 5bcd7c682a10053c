//! Ground-truth enumeration of flat maximal antichain size spectra at tiny
//! scale, independent of every construction in this crate.

use rayon::prelude::*;

use crate::counting::binomial;
use crate::error::{Error, Result};
use crate::family::level_masks;
use crate::mask::SubsetMask;

/// Largest lower-level size the subset sweep will take on (2^24 states).
const MAX_LOWER_BITS: u64 = 24;

/// Size spectrum of maximal flat antichains for one (n, l).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumResult {
    pub n: u32,
    pub l: u32,
    /// Achievable sizes in increasing order.
    pub sizes: Vec<u64>,
    /// Number of search states explored.
    pub count_explored: u64,
}

#[derive(Clone)]
struct SizeSet {
    bits: Vec<u64>,
}

impl SizeSet {
    fn new(max: u64) -> Self {
        SizeSet { bits: vec![0; (max as usize + 64) / 64 + 1] }
    }

    fn insert(&mut self, v: u64) {
        self.bits[(v / 64) as usize] |= 1 << (v % 64);
    }

    fn merge(mut self, other: SizeSet) -> SizeSet {
        for (a, b) in self.bits.iter_mut().zip(other.bits) {
            *a |= b;
        }
        self
    }

    fn to_sorted(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (w, &word) in self.bits.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w as u64 * 64 + bits.trailing_zeros() as u64);
                bits &= bits - 1;
            }
        }
        out
    }
}

/// Sweeps every subset D of level l. The upper family forced by D is
/// F(D) = { A at level l+1 : shadow(A) within D }, and the assembled flat
/// antichain F(D) plus (level l minus shadow(F(D))) is always maximal; every
/// maximal flat antichain on these levels arises this way from the shadow of
/// its own upper family. The size set recorded is therefore exact.
pub fn enumerate_flat_spectrum(n: u32, l: u32) -> Result<SpectrumResult> {
    let low_count = binomial(n, l);
    if l < 1 || l + 1 > n {
        return Err(Error::LevelRange { n, l });
    }
    if low_count > MAX_LOWER_BITS {
        return Err(Error::SearchTooLarge(low_count));
    }
    let lower: Vec<SubsetMask> = level_masks(n, l).collect();
    let position: std::collections::HashMap<u64, u32> = lower
        .iter()
        .enumerate()
        .map(|(i, m)| (m.0, i as u32))
        .collect();

    // Shadow of each upper-level set as an index mask over level l.
    let shadow_masks: Vec<u32> = level_masks(n, l + 1)
        .map(|t| {
            let mut sm = 0u32;
            let mut bits = t.0;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                sm |= 1 << position[&(t.0 ^ low)];
                bits ^= low;
            }
            sm
        })
        .collect();

    let states: u64 = 1u64 << low_count;
    let max_size = binomial(n, l) + binomial(n, l + 1);

    // Partition the sweep into blocks by the top bits of D for the parallel
    // map; the merge is a plain set union, so block order is irrelevant.
    let block_bits = low_count.saturating_sub(8);
    let blocks: u64 = states >> block_bits;
    let sizes = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut set = SizeSet::new(max_size);
            let start = block << block_bits;
            for d in start..start + (1 << block_bits) {
                let d = d as u32;
                let mut upper = 0u64;
                let mut union = 0u32;
                for &sm in &shadow_masks {
                    if sm & d == sm {
                        upper += 1;
                        union |= sm;
                    }
                }
                set.insert(upper + low_count - union.count_ones() as u64);
            }
            set
        })
        .reduce(|| SizeSet::new(max_size), SizeSet::merge);

    Ok(SpectrumResult { n, l, sizes: sizes.to_sorted(), count_explored: states })
}

/// Sweeps every graph on [n] and records t(G) + e(complement) for the graphs
/// in which every edge lies in a triangle.
pub fn enumerate_tgraph_spectrum(n: u32) -> Result<SpectrumResult> {
    if n < 3 {
        return Err(Error::GroundSize(n));
    }
    let pair_count = binomial(n, 2);
    if n > 8 {
        return Err(Error::SearchTooLarge(pair_count));
    }
    let pairs: Vec<(u32, u32)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let states: u64 = 1u64 << pair_count;
    let max_size = binomial(n, 3) + pair_count;

    let block_bits = pair_count.saturating_sub(8);
    let blocks: u64 = states >> block_bits;
    let sizes = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut set = SizeSet::new(max_size);
            let start = block << block_bits;
            'graphs: for g in start..start + (1 << block_bits) {
                let mut adj = [0u32; 8];
                let mut bits = g;
                while bits != 0 {
                    let e = bits.trailing_zeros() as usize;
                    let (i, j) = pairs[e];
                    adj[i as usize] |= 1 << j;
                    adj[j as usize] |= 1 << i;
                    bits &= bits - 1;
                }
                let mut triangles = 0u64;
                let mut bits = g;
                while bits != 0 {
                    let e = bits.trailing_zeros() as usize;
                    let (i, j) = pairs[e];
                    let common = adj[i as usize] & adj[j as usize];
                    if common == 0 {
                        continue 'graphs;
                    }
                    triangles += common.count_ones() as u64;
                    bits &= bits - 1;
                }
                set.insert(triangles / 3 + pair_count - g.count_ones() as u64);
            }
            set
        })
        .reduce(|| SizeSet::new(max_size), SizeSet::merge);

    Ok(SpectrumResult { n, l: 2, sizes: sizes.to_sorted(), count_explored: states })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antichain::{assemble_from_upper, check_maximal_flat};
    use crate::family::Family;

    #[test]
    fn spectrum_6_2_endpoints() {
        let s = enumerate_flat_spectrum(6, 2).unwrap();
        assert_eq!(*s.sizes.first().unwrap(), 9);
        assert_eq!(*s.sizes.last().unwrap(), 20);
        for m in 9..=15 {
            assert!(s.sizes.contains(&m), "missing {m}");
        }
        assert_eq!(s.count_explored, 1 << 15);
    }

    #[test]
    fn spectrum_rejects_large_search() {
        assert!(matches!(enumerate_flat_spectrum(8, 2).unwrap_err(), Error::SearchTooLarge(28)));
    }

    #[test]
    fn tgraph_spectrum_matches_flat_spectrum() {
        for n in [5u32, 6] {
            let a = enumerate_flat_spectrum(n, 2).unwrap();
            let b = enumerate_tgraph_spectrum(n).unwrap();
            assert_eq!(a.sizes, b.sizes, "n={n}");
        }
    }

    #[test]
    fn tgraph_spectrum_6_contains_base_interval_and_k6() {
        let s = enumerate_tgraph_spectrum(6).unwrap();
        for m in 9..=15 {
            assert!(s.sizes.contains(&m));
        }
        assert!(s.sizes.contains(&20));
    }

    /// Restricting the swept sets D to unions of upper-set shadows does not
    /// change the size set.
    #[test]
    fn downset_restriction_is_size_invariant() {
        let n = 6;
        let l = 2;
        let full = enumerate_flat_spectrum(n, l).unwrap();

        let lower: Vec<SubsetMask> = level_masks(n, l).collect();
        let position: std::collections::HashMap<u64, u32> = lower
            .iter()
            .enumerate()
            .map(|(i, m)| (m.0, i as u32))
            .collect();
        let shadow_masks: Vec<u32> = level_masks(n, l + 1)
            .map(|t| {
                let mut sm = 0u32;
                for e in t.elements() {
                    sm |= 1 << position[&t.remove(e).0];
                }
                sm
            })
            .collect();

        let mut sizes = std::collections::BTreeSet::new();
        for u in 0u32..(1 << shadow_masks.len()) {
            let mut d = 0u32;
            for (i, &sm) in shadow_masks.iter().enumerate() {
                if u & (1 << i) != 0 {
                    d |= sm;
                }
            }
            let mut upper = 0u64;
            let mut union = 0u32;
            for &sm in &shadow_masks {
                if sm & d == sm {
                    upper += 1;
                    union |= sm;
                }
            }
            sizes.insert(upper + binomial(n, l) - union.count_ones() as u64);
        }
        assert_eq!(full.sizes, sizes.into_iter().collect::<Vec<_>>());
    }

    /// Spot check: sizes reported by the sweep really are realized by
    /// maximal antichains.
    #[test]
    fn sweep_states_assemble_to_maximal_antichains() {
        let n = 5;
        let l = 2;
        let lower: Vec<SubsetMask> = level_masks(n, l).collect();
        for d in 0u32..(1 << lower.len()) {
            let picked: Vec<SubsetMask> = lower
                .iter()
                .enumerate()
                .filter(|(i, _)| d & (1 << i) != 0)
                .map(|(_, &m)| m)
                .collect();
            let dset = Family::from_sorted_unchecked(n, l, picked);
            let upper: Vec<SubsetMask> = level_masks(n, l + 1)
                .filter(|t| t.elements().iter().all(|&e| dset.contains(t.remove(e))))
                .collect();
            let a =
                assemble_from_upper(n, l, Family::from_sorted_unchecked(n, l + 1, upper)).unwrap();
            assert!(check_maximal_flat(&a).is_maximal);
        }
    }
}
