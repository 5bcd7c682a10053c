//! Small maximal antichains from shadow-disjoint cores with attached stars:
//! sizes binomial(n,l) - s - (l-1) * alpha below the squashed minimum.

use crate::antichain::{assemble_from_upper, FlatAntichain};
use crate::counting::{binomial, ceil_div};
use crate::error::{Error, Result};
use crate::family::{level_masks, Family};
use crate::mask::SubsetMask;

/// Core of pairwise shadow-disjoint l-subsets of [t] with one star size per
/// member; star elements are drawn from {t+1, ..., n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPlan {
    pub t: u32,
    pub core: Family,
    pub star_sizes: Vec<u32>,
}

impl StarPlan {
    pub fn core_size(&self) -> u64 {
        self.core.len()
    }

    pub fn total_star_size(&self) -> u64 {
        self.star_sizes.iter().map(|&x| x as u64).sum()
    }
}

fn pairwise_shadow_disjoint(members: &[SubsetMask], l: u32) -> bool {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if (a.0 & b.0).count_ones() + 2 > l {
                return false;
            }
        }
    }
    true
}

/// The largest residue class (ties broken towards the smallest residue) of
/// l-subsets of [t] under element-sum mod t. Any two distinct members of a
/// class meet in at most l-2 elements, and the largest class has at least
/// ceil(binomial(t,l)/t) members.
pub fn sum_class_family(t: u32, l: u32) -> Result<Family> {
    if l < 2 || l >= t {
        return Err(Error::BadCore { t, l });
    }
    let mut classes: Vec<Vec<SubsetMask>> = vec![Vec::new(); t as usize];
    for m in level_masks(t, l) {
        let sum: u32 = m.elements().iter().sum();
        classes[(sum % t) as usize].push(m);
    }
    let best = classes
        .iter()
        .enumerate()
        .max_by(|(ra, a), (rb, b)| a.len().cmp(&b.len()).then(rb.cmp(ra)))
        .map(|(r, _)| r)
        .unwrap();
    let members = std::mem::take(&mut classes[best]);
    debug_assert!(pairwise_shadow_disjoint(&members, l));
    debug_assert!(members.len() as u64 >= ceil_div(binomial(t, l), t as u64));
    Ok(Family::from_sorted_unchecked(t, l, members))
}

/// Builds the antichain whose upper sets are core members extended by one
/// star element each; the lower level is forced. Exact size:
/// binomial(n,l) - |core| - (l-1) * total star size.
pub fn star_construct(n: u32, l: u32, plan: &StarPlan) -> Result<FlatAntichain> {
    let t = plan.t;
    if l < 2 || t >= n || plan.core.uniform_card() != l {
        return Err(Error::BadPlan(format!(
            "need 2 <= l < t < n, got n={n} l={l} t={t} core cardinality {}",
            plan.core.uniform_card()
        )));
    }
    if plan.core.n() > t {
        return Err(Error::BadPlan("core members must live inside [t]".into()));
    }
    if plan.core.is_empty() {
        return Err(Error::BadPlan("core must be nonempty".into()));
    }
    if plan.star_sizes.len() != plan.core.members().len() {
        return Err(Error::BadPlan("one star size per core member required".into()));
    }
    if plan.star_sizes.iter().any(|&x| x == 0 || x > n - t) {
        return Err(Error::BadPlan("star sizes must lie in 1..=n-t".into()));
    }
    if !pairwise_shadow_disjoint(plan.core.members(), l) {
        return Err(Error::BadPlan("core members must be pairwise shadow-disjoint".into()));
    }
    let mut upper = Vec::with_capacity(plan.total_star_size() as usize);
    for (&a, &x) in plan.core.members().iter().zip(&plan.star_sizes) {
        for j in 1..=x {
            upper.push(SubsetMask(a.0 | 1u64 << (t + j - 1)));
        }
    }
    let a = assemble_from_upper(n, l, Family::new(n, l + 1, upper)?)?;
    debug_assert_eq!(
        a.size(),
        binomial(n, l) - plan.core_size() - (l as u64 - 1) * plan.total_star_size()
    );
    Ok(a)
}

/// Range of sizes solvable by [`solve_small_target`] for (n, l, t), using
/// the realized sum-class size.
pub fn small_target_range(n: u32, l: u32, t: u32) -> Result<(u64, u64)> {
    let sigma = sum_class_family(t, l)?.len();
    let lmin1 = l as u64 - 1;
    let x_lo = lmin1 * lmin1 + 1;
    if sigma + 2 < l as u64 {
        return Err(Error::BadCore { t, l });
    }
    let x_hi = (1 + lmin1 * (n - t) as u64) * (sigma + 2 - l as u64);
    if x_hi < x_lo {
        return Err(Error::BadCore { t, l });
    }
    Ok((binomial(n, l) - x_hi, binomial(n, l) - x_lo))
}

/// Chooses the core size s and total star size alpha realizing the target
/// size m: s is the largest integer congruent to x = binomial(n,l) - m
/// modulo l-1 that fits under both floor(x/l) and the class size; the star
/// slots distribute alpha as evenly as possible.
pub fn solve_small_target(n: u32, l: u32, t: u32, m: u64) -> Result<StarPlan> {
    let class = sum_class_family(t, l)?;
    let sigma = class.len();
    let (m_lo, m_hi) = small_target_range(n, l, t)?;
    if m < m_lo || m > m_hi {
        return Err(Error::OutOfSmallRange { n, l, t, m });
    }
    let x = binomial(n, l) - m;
    let cap = (x / l as u64).min(sigma);
    let s = if l == 2 {
        cap
    } else {
        let r = x % (l as u64 - 1);
        debug_assert!(cap >= r);
        cap - (cap - r) % (l as u64 - 1)
    };
    let alpha = (x - s) / (l as u64 - 1).max(1);
    assert!(s >= 1, "target range guarantees a nonempty core");
    assert!(s <= alpha && alpha <= (n - t) as u64 * s);

    let core = Family::from_sorted_unchecked(
        t,
        l,
        class.members()[..s as usize].to_vec(),
    );
    let base = (alpha / s) as u32;
    let extra = (alpha % s) as usize;
    let star_sizes = (0..s as usize)
        .map(|i| if i < extra { base + 1 } else { base })
        .collect();
    Ok(StarPlan { t, core, star_sizes })
}
