//! Three recursions mapping verified smaller antichains into B_n, each with
//! an exact size formula. Inputs are trusted (caller contract); outputs of a
//! whole construction chain are verified once at the top.

use crate::antichain::FlatAntichain;
use crate::counting::binomial;
use crate::error::{Error, Result};
use crate::family::{level_masks, Family};
use crate::mask::SubsetMask;

fn with_element(members: &[SubsetMask], element: u32) -> Vec<SubsetMask> {
    let bit = 1u64 << (element - 1);
    members.iter().map(|m| SubsetMask(m.0 | bit)).collect()
}

/// Keeps the antichain and adds every l-set through the new element n:
/// size grows by binomial(n-1, l-1).
pub fn lift_add_isolated(a: &FlatAntichain) -> Result<FlatAntichain> {
    let n = a.n() + 1;
    let l = a.lower_level();
    if l < 2 || l > n - 1 {
        return Err(Error::LevelRange { n, l });
    }
    let mut lower = a.lower().members().to_vec();
    lower.extend(level_masks(a.n(), l - 1).map(|m| SubsetMask(m.0 | 1 << (n - 1))));
    let out = FlatAntichain::from_parts_unchecked(
        n,
        l,
        Family::from_sorted_unchecked(n, l + 1, a.upper().members().to_vec()),
        Family::from_sorted_unchecked(n, l, lower),
    );
    debug_assert_eq!(out.size(), a.size() + binomial(n - 1, l - 1));
    Ok(out)
}

/// Joins the new element n to every member and adds the full (l+1)-level of
/// the old ground set: size grows by binomial(n-1, l+1).
pub fn lift_join_element(a: &FlatAntichain) -> Result<FlatAntichain> {
    let n = a.n() + 1;
    let l = a.lower_level() + 1;
    if l < 3 || l > n - 2 {
        return Err(Error::LevelRange { n, l });
    }
    let mut upper: Vec<SubsetMask> = level_masks(a.n(), l + 1).collect();
    upper.extend(with_element(a.upper().members(), n));
    let lower = with_element(a.lower().members(), n);
    let out = FlatAntichain::from_parts_unchecked(
        n,
        l,
        Family::from_sorted_unchecked(n, l + 1, upper),
        Family::from_sorted_unchecked(n, l, lower),
    );
    debug_assert_eq!(out.size(), a.size() + binomial(n - 1, l + 1));
    Ok(out)
}

/// Combines two antichains over [n-2] through the two new elements:
/// size is |a1| + |a2| + binomial(n-2, l+1) + binomial(n-2, l-2).
pub fn lift_pair(a1: &FlatAntichain, a2: &FlatAntichain) -> Result<FlatAntichain> {
    if a1.n() != a2.n() {
        return Err(Error::GroundMismatch(a1.n(), a2.n()));
    }
    if a1.lower_level() != a2.lower_level() {
        return Err(Error::LevelRange { n: a2.n(), l: a2.lower_level() });
    }
    let n = a1.n() + 2;
    let l = a1.lower_level() + 1;
    if l < 3 || l > n - 3 {
        return Err(Error::LevelRange { n, l });
    }
    let base = a1.n();

    let mut upper: Vec<SubsetMask> = level_masks(base, l + 1).collect();
    upper.extend(with_element(a1.upper().members(), n - 1));
    upper.extend(with_element(a2.upper().members(), n));

    let mut lower = with_element(a1.lower().members(), n - 1);
    lower.extend(with_element(a2.lower().members(), n));
    let both = (1u64 << (n - 1)) | (1u64 << (n - 2));
    lower.extend(level_masks(base, l - 2).map(|m| SubsetMask(m.0 | both)));

    let out = FlatAntichain::from_parts_unchecked(
        n,
        l,
        Family::from_sorted_unchecked(n, l + 1, upper),
        Family::from_sorted_unchecked(n, l, lower),
    );
    debug_assert_eq!(
        out.size(),
        a1.size() + a2.size() + binomial(n - 2, l + 1) + binomial(n - 2, l - 2)
    );
    Ok(out)
}
