//! Interval arithmetic and dispatch: picks a level and a construction for
//! any target size, producing a verified antichain plus a replayable trace.

use serde::{Deserialize, Serialize};

use crate::antichain::{check_maximal_flat, verify_maximal, FlatAntichain};
use crate::characterize::levels12_size;
use crate::counting::{binomial, catalan_prefix_sum, ceil_div, overlap_slack};
use crate::error::{Error, Result};
use crate::family::{level_masks, Family};
use crate::lift::{lift_add_isolated, lift_join_element, lift_pair};
use crate::mask::SubsetMask;
use crate::stars::{small_target_range, solve_small_target, star_construct};
use crate::tgraph::{base_case_construct, top_row_construct, top_row_range};

/// Inclusive interval of achievable sizes for one (n, l); lo > hi encodes
/// emptiness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeInterval {
    pub lo: u64,
    pub hi: u64,
    pub n: u32,
    pub l: u32,
}

impl SizeInterval {
    pub fn contains(&self, m: u64) -> bool {
        self.lo <= m && m <= self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

/// One rule application; a trace is a post-order list of these, replayed by
/// a stack machine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule")]
pub enum TraceStep {
    #[serde(rename = "base")]
    Base { n: u32, m: u64 },
    #[serde(rename = "topRow")]
    TopRow { n: u32, m: u64 },
    #[serde(rename = "star")]
    Star { n: u32, l: u32, t: u32, m: u64 },
    #[serde(rename = "level12")]
    Levels12 { n: u32, t: u32 },
    #[serde(rename = "lift1")]
    AddIsolated { n: u32, l: u32 },
    #[serde(rename = "lift2")]
    JoinElement { n: u32, l: u32 },
    #[serde(rename = "lift3")]
    Pair { n: u32, l: u32 },
}

pub type ConstructionTrace = Vec<TraceStep>;

fn half_ceil(n: u32) -> u32 {
    n.div_ceil(2)
}

fn check_level(n: u32, l: u32) -> Result<()> {
    if l < 2 || 2 * l + 2 > n {
        return Err(Error::LevelRange { n, l });
    }
    Ok(())
}

/// Interval covered by the recursive large construction:
/// [C(n,l) - 3 - C_l, C(n,l+1) - (n-l-1) ceil((n-l)/2) + slack(n-l)].
pub fn interval_large(n: u32, l: u32) -> Result<SizeInterval> {
    check_level(n, l)?;
    let lo = binomial(n, l) - 3 - catalan_prefix_sum(l);
    let hi = binomial(n, l + 1) - (n - l - 1) as u64 * half_ceil(n - l) as u64
        + overlap_slack(n - l);
    Ok(SizeInterval { lo, hi, n, l })
}

/// Guaranteed interval on levels (l, l+1): the star construction bound on
/// the left (with the pigeonhole class-size estimate for l >= 3) and the
/// disjoint-lower-sets construction on the right.
pub fn interval_flat(n: u32, l: u32) -> Result<SizeInterval> {
    check_level(n, l)?;
    let hi = binomial(n, l + 1) - (n - l - 1) as u64 * half_ceil(n - l) as u64;
    let lo = if l == 2 {
        binomial(n, 2) - ((n as u64 + 1) * (n as u64 + 1)) / 8
    } else {
        let k = half_ceil(n);
        let star = (1 + (l as i128 - 1) * (n - k) as i128)
            * (ceil_div(binomial(k, l), k as u64) as i128 - l as i128 + 2);
        let gamma = (3 + catalan_prefix_sum(l) as i128).max(star);
        (binomial(n, l) as i128 - gamma) as u64
    };
    Ok(SizeInterval { lo, hi, n, l })
}

/// Hull of the flat and large intervals: the per-level row of the summary
/// table.
pub fn table_interval(n: u32, l: u32) -> Result<SizeInterval> {
    let flat = interval_flat(n, l)?;
    let large = interval_large(n, l)?;
    Ok(SizeInterval { lo: flat.lo.min(large.lo), hi: flat.hi.max(large.hi), n, l })
}

/// Core ground size for the minimum-size l = 2 star construction.
fn l2_special_t(n: u32) -> u32 {
    if n % 4 <= 1 {
        n / 2
    } else {
        (n + 2) / 2
    }
}

/// Candidate star core sizes for a level, in dispatch order.
fn star_candidates(n: u32, l: u32) -> Vec<u32> {
    if l == 2 {
        return vec![l2_special_t(n)];
    }
    let mut out = vec![half_ceil(n)];
    match (l, n) {
        (3, 9) | (3, 10) => out.push(6),
        (4, 12) => out.push(7),
        _ => {}
    }
    out
}

/// Every interval the level-(l, l+1) machinery can construct, widest first.
pub fn level_coverage(n: u32, l: u32) -> Result<Vec<SizeInterval>> {
    check_level(n, l)?;
    let mut out = vec![interval_large(n, l)?];
    for t in star_candidates(n, l) {
        if let Ok((lo, hi)) = small_target_range(n, l, t) {
            out.push(SizeInterval { lo, hi, n, l });
        }
    }
    Ok(out)
}

fn covers(n: u32, l: u32, m: u64) -> bool {
    level_coverage(n, l).is_ok_and(|ivs| ivs.iter().any(|iv| iv.contains(m)))
}

fn construct_large_raw(n: u32, l: u32, m: u64) -> Result<(FlatAntichain, ConstructionTrace)> {
    let iv = interval_large(n, l)?;
    if !iv.contains(m) {
        return Err(Error::OutOfLargeRange { n, l, m, lo: iv.lo, hi: iv.hi });
    }
    if l == 2 {
        let (top_lo, _) = top_row_range(n);
        return if m >= top_lo {
            Ok((top_row_construct(n, m)?, vec![TraceStep::TopRow { n, m }]))
        } else {
            Ok((base_case_construct(n, m)?, vec![TraceStep::Base { n, m }]))
        };
    }
    if n == 2 * l + 2 {
        // Base of the induction on n: two overlapping joined intervals.
        let sub1 = interval_large(n - 1, l - 1)?;
        if m >= sub1.lo + binomial(n - 1, l + 1) {
            let (a, mut trace) = construct_large_raw(n - 1, l - 1, m - binomial(n - 1, l + 1))?;
            let lifted = lift_join_element(&a)?;
            trace.push(TraceStep::JoinElement { n, l });
            return Ok((lifted, trace));
        }
        let shift = binomial(n - 2, l + 1) + binomial(n - 1, l - 1);
        let (a, mut trace) = construct_large_raw(n - 2, l - 1, m - shift)?;
        let joined = lift_join_element(&a)?;
        trace.push(TraceStep::JoinElement { n: n - 1, l });
        let lifted = lift_add_isolated(&joined)?;
        trace.push(TraceStep::AddIsolated { n, l });
        return Ok((lifted, trace));
    }
    // n >= 2l+3: three lifted intervals chained left to right.
    let i1 = interval_large(n - 1, l)?;
    let i2 = interval_large(n - 1, l - 1)?;
    let b1 = i1.hi + binomial(n - 1, l - 1);
    let a2 = i2.lo + binomial(n - 1, l + 1);
    if m <= b1 {
        let (a, mut trace) = construct_large_raw(n - 1, l, m - binomial(n - 1, l - 1))?;
        let lifted = lift_add_isolated(&a)?;
        trace.push(TraceStep::AddIsolated { n, l });
        Ok((lifted, trace))
    } else if m >= a2 {
        let (a, mut trace) = construct_large_raw(n - 1, l - 1, m - binomial(n - 1, l + 1))?;
        let lifted = lift_join_element(&a)?;
        trace.push(TraceStep::JoinElement { n, l });
        Ok((lifted, trace))
    } else {
        // Pair recursion fills the gap; the first component takes the
        // largest feasible share.
        let i3 = interval_large(n - 2, l - 1)?;
        let m3 = m - binomial(n - 2, l + 1) - binomial(n - 2, l - 2);
        debug_assert!(2 * i3.lo <= m3 && m3 <= 2 * i3.hi);
        let x1 = i3.hi.min(m3 - i3.lo);
        let x2 = m3 - x1;
        let (a1, mut trace) = construct_large_raw(n - 2, l - 1, x1)?;
        let (a2c, trace2) = construct_large_raw(n - 2, l - 1, x2)?;
        let lifted = lift_pair(&a1, &a2c)?;
        trace.extend(trace2);
        trace.push(TraceStep::Pair { n, l });
        Ok((lifted, trace))
    }
}

/// Verified large-interval construction.
pub fn construct_large(n: u32, l: u32, m: u64) -> Result<(FlatAntichain, ConstructionTrace)> {
    let (a, trace) = construct_large_raw(n, l, m)?;
    finish(a, trace, m)
}

fn construct_in_level_raw(n: u32, l: u32, m: u64) -> Result<(FlatAntichain, ConstructionTrace)> {
    check_level(n, l)?;
    let large = interval_large(n, l)?;
    if m >= large.lo {
        if m > large.hi {
            return Err(Error::OutOfLevelRange { n, l, m });
        }
        return construct_large_raw(n, l, m);
    }
    for t in star_candidates(n, l) {
        if small_target_range(n, l, t).is_ok_and(|(lo, hi)| lo <= m && m <= hi) {
            let plan = solve_small_target(n, l, t, m)?;
            let a = star_construct(n, l, &plan)?;
            return Ok((a, vec![TraceStep::Star { n, l, t, m }]));
        }
    }
    Err(Error::OutOfLevelRange { n, l, m })
}

/// Size check plus independent maximality verification of a finished
/// construction.
fn finish(a: FlatAntichain, trace: ConstructionTrace, m: u64) -> Result<(FlatAntichain, ConstructionTrace)> {
    if a.size() != m {
        return Err(Error::VerificationFailed(format!(
            "size {} differs from target {m}",
            a.size()
        )));
    }
    if !verify_maximal(&a) {
        let report = check_maximal_flat(&a);
        return Err(Error::VerificationFailed(format!(
            "antichain={} maximal={} witness={:?}",
            report.is_antichain, report.is_maximal, report.witness
        )));
    }
    Ok((a, trace))
}

/// Verified construction of size m on levels (l, l+1).
pub fn construct_in_level(n: u32, l: u32, m: u64) -> Result<(FlatAntichain, ConstructionTrace)> {
    let (a, trace) = construct_in_level_raw(n, l, m)?;
    finish(a, trace, m)
}

/// The singleton/pair antichain: all pairs inside [t] together with the
/// singletons outside; size C(t,2) + n - t.
pub fn construct_levels12(n: u32, t: u32) -> Result<FlatAntichain> {
    if t < 2 || t > n {
        return Err(Error::BadT { n, t });
    }
    let upper: Vec<SubsetMask> = level_masks(t, 2).collect();
    let lower: Vec<SubsetMask> = (t + 1..=n).map(|e| SubsetMask(1u64 << (e - 1))).collect();
    let a = FlatAntichain::new(
        n,
        1,
        Family::new(n, 2, upper)?,
        Family::new(n, 1, lower)?,
    )?;
    debug_assert_eq!(a.size(), binomial(t, 2) + (n - t) as u64);
    if !verify_maximal(&a) {
        return Err(Error::VerificationFailed("levels-(1,2) construction".into()));
    }
    Ok(a)
}

/// Size interval the main construction covers for ground size n.
pub fn theorem_interval(n: u32) -> (u64, u64) {
    let k = half_ceil(n);
    (
        binomial(n, 2) - ((n as u64 + 1) * (n as u64 + 1)) / 8,
        binomial(n, k) - k as u64 * half_ceil(k + 1) as u64,
    )
}

fn achievable(n: u32, m: u64) -> bool {
    if m == 0 {
        return false;
    }
    let (lo, hi) = theorem_interval(n);
    if m >= lo && m <= hi && (2..=(n - 2) / 2).any(|l| covers(n, l, m)) {
        return true;
    }
    levels12_size(n, m).is_some()
}

/// Builds a verified maximal flat antichain of exact size m, choosing the
/// smallest level whose constructive coverage contains m. Sizes below the
/// main interval that match a singleton/pair-family size are still built;
/// anything else is rejected with the nearest achievable sizes.
pub fn construct_main(n: u32, m: u64) -> Result<(FlatAntichain, ConstructionTrace)> {
    if !(6..=64).contains(&n) {
        return Err(Error::GroundSize(n));
    }
    let (lo, hi) = theorem_interval(n);
    if m >= lo && m <= hi {
        for l in 2..=(n - 2) / 2 {
            if covers(n, l, m) {
                let (a, trace) = construct_in_level_raw(n, l, m)?;
                return finish(a, trace, m);
            }
        }
    }
    if let Some(t) = levels12_size(n, m) {
        let a = construct_levels12(n, t)?;
        return Ok((a, vec![TraceStep::Levels12 { n, t }]));
    }
    let nearest_below = (1..=m.saturating_sub(1).min(100_000))
        .map(|d| m - d)
        .find(|&x| achievable(n, x));
    let nearest_above = (1..=100_000u64)
        .map(|d| m + d)
        .find(|&x| achievable(n, x));
    Err(Error::OutOfTheoremRange { n, m, lo, hi, nearest_below, nearest_above })
}

/// Rebuilds the antichain a trace describes; deterministic constructions
/// make the result bit-exact.
pub fn replay(trace: &[TraceStep]) -> Result<FlatAntichain> {
    let mut stack: Vec<FlatAntichain> = Vec::new();
    for &step in trace {
        match step {
            TraceStep::Base { n, m } => stack.push(base_case_construct(n, m)?),
            TraceStep::TopRow { n, m } => stack.push(top_row_construct(n, m)?),
            TraceStep::Star { n, l, t, m } => {
                let plan = solve_small_target(n, l, t, m)?;
                stack.push(star_construct(n, l, &plan)?);
            }
            TraceStep::Levels12 { n, t } => stack.push(construct_levels12(n, t)?),
            TraceStep::AddIsolated { .. } => {
                let a = stack.pop().ok_or_else(|| Error::BadPlan("trace underflow".into()))?;
                stack.push(lift_add_isolated(&a)?);
            }
            TraceStep::JoinElement { .. } => {
                let a = stack.pop().ok_or_else(|| Error::BadPlan("trace underflow".into()))?;
                stack.push(lift_join_element(&a)?);
            }
            TraceStep::Pair { .. } => {
                let b = stack.pop().ok_or_else(|| Error::BadPlan("trace underflow".into()))?;
                let a = stack.pop().ok_or_else(|| Error::BadPlan("trace underflow".into()))?;
                stack.push(lift_pair(&a, &b)?);
            }
        }
    }
    if stack.len() != 1 {
        return Err(Error::BadPlan("trace leaves multiple constructions".into()));
    }
    Ok(stack.pop().unwrap())
}

/// All sizes the per-level machinery reaches, as a sorted deduplicated list.
pub fn constructive_sizes(n: u32, l: u32) -> Result<Vec<u64>> {
    let mut sizes = std::collections::BTreeSet::new();
    for iv in level_coverage(n, l)? {
        for m in iv.lo..=iv.hi {
            sizes.insert(m);
        }
    }
    Ok(sizes.into_iter().collect())
}
