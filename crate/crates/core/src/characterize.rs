//! Closed-form membership predicates for maximal-antichain sizes.

use crate::counting::binomial;
use crate::error::{Error, Result};

fn half_ceil(n: u32) -> u32 {
    n.div_ceil(2)
}

/// True when m = base - t*step + C(a,2) + C(b,2) + c has a solution with
/// t in t_range, a >= b >= c >= 0 and lo_ab <= a+b <= t.
fn quadruple_form(m: u64, base: u64, step: u64, t_max: u32, ab_min: u32) -> bool {
    for t in 0..=t_max as u64 {
        let offset = base as i128 - (t * step) as i128;
        for a in 0..=t {
            for b in 0..=a.min(t - a) {
                if a + b < ab_min as u64 {
                    continue;
                }
                // c ranges over 0..=b; check membership directly.
                let lo = offset + (binomial(a as u32, 2) + binomial(b as u32, 2)) as i128;
                let hi = lo + b as i128;
                if (lo..=hi).contains(&(m as i128)) {
                    return true;
                }
            }
        }
    }
    false
}

/// Whether some maximal antichain in B_n has exactly m members: either m is
/// at most the guaranteed prefix, or it has the near-top quadruple form.
pub fn is_mac_size(n: u32, m: u64) -> Result<bool> {
    let k = half_ceil(n);
    let max = binomial(n, k);
    if m < 1 || m > max {
        return Err(Error::SizeRange { m, max });
    }
    if m <= max - k as u64 * half_ceil(k + 1) as u64 {
        return Ok(true);
    }
    for l in [k, n - k] {
        if quadruple_form(m, max, l as u64, k, 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether some flat maximal antichain in B_n has exactly m members: the
/// main interval, the near-top quadruple form, or a singleton/pair family.
pub fn is_flat_mac_size(n: u32, m: u64) -> Result<bool> {
    let k = half_ceil(n);
    let max = binomial(n, k);
    if m < 1 || m > max {
        return Err(Error::SizeRange { m, max });
    }
    let lo = binomial(n, 2) - ((n as u64 + 1) * (n as u64 + 1)) / 8;
    if m >= lo && m <= max - k as u64 * half_ceil(k + 1) as u64 {
        return Ok(true);
    }
    for l in [k, n - k] {
        if quadruple_form(m, max, l as u64, k, 0) {
            return Ok(true);
        }
    }
    Ok(levels12_size(n, m).is_some())
}

/// The t with m = C(t,2) + n - t when m is a singleton/pair-family size.
/// Unique for t >= 2 since C(t,2) - t is strictly increasing there.
pub fn levels12_size(n: u32, m: u64) -> Option<u32> {
    (2..=n).find(|&t| binomial(t, 2) + (n - t) as u64 == m)
}

/// Gap form above the in-level construction ceiling: m must be reachable as
/// C(n,l+1) - t(n-l-1) + C(a,2) + C(b,2) + c with 1 <= a+b <= t.
pub fn near_top_gap_form(n: u32, l: u32, m: u64) -> Result<bool> {
    let top = binomial(n, l + 1);
    let lo = top - (n - l - 1) as u64 * half_ceil(n - l) as u64;
    if m <= lo || m >= top {
        return Err(Error::NotNearTop { n, l, m, lo, hi: top });
    }
    Ok(quadruple_form(m, top, (n - l - 1) as u64, n - l + 1, 1))
}
