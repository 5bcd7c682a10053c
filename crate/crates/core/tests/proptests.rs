//! Property-based invariants over randomized inputs.

use proptest::prelude::*;

use flatmac::antichain::{assemble_from_upper, check_maximal_flat, verify_maximal, FlatAntichain};
use flatmac::cascade::{cascade_representation, kk_shadow_size, squashed_size};
use flatmac::counting::{binomial, catalan_prefix_sum};
use flatmac::family::{colex_prefix, level_masks, Family};
use flatmac::mask::{colex_cmp, SubsetMask};

fn family_strategy(n: u32, card: u32, density: f64) -> impl Strategy<Value = Family> {
    let level: Vec<SubsetMask> = level_masks(n, card).collect();
    proptest::collection::vec(proptest::bool::weighted(density), level.len()).prop_map(
        move |picks| {
            let members: Vec<SubsetMask> = level
                .iter()
                .zip(&picks)
                .filter(|(_, &p)| p)
                .map(|(&m, _)| m)
                .collect();
            Family::new(n, card, members).unwrap()
        },
    )
}

proptest! {
    /// Numeric order on masks is exactly colexicographic order.
    #[test]
    fn colex_order_matches_numeric(a in 0u64..(1 << 12), b in 0u64..(1 << 12)) {
        let (a, b) = (SubsetMask(a), SubsetMask(b));
        prop_assert_eq!(colex_cmp(a, b), a.0.cmp(&b.0));
    }

    /// Each colex prefix extends the previous one by a single colex-greater
    /// set.
    #[test]
    fn colex_prefix_extension(t in 0u64..200, card in 2u32..5) {
        let n = 10;
        prop_assume!(t < binomial(n, card));
        let shorter = colex_prefix(t, card, n).unwrap();
        let longer = colex_prefix(t + 1, card, n).unwrap();
        prop_assert_eq!(&longer.members()[..t as usize], shorter.members());
        let added = longer.members()[t as usize];
        for &m in shorter.members() {
            prop_assert_eq!(colex_cmp(m, added), std::cmp::Ordering::Less);
        }
    }

    /// Cascade terms re-evaluate to the input and strictly decrease.
    #[test]
    fn cascade_round_trip(t in 1u64..2016, card in 2u32..7) {
        prop_assume!(t <= binomial(64, card));
        let rep = cascade_representation(t, card).unwrap();
        prop_assert_eq!(rep.value(), t);
        for w in rep.terms.windows(2) {
            prop_assert!(w[0].0 > w[1].0 && w[0].1 > w[1].1);
        }
        prop_assert!(rep.terms.last().unwrap().1 >= 1);
        prop_assert_eq!(kk_shadow_size(t, card).unwrap(),
            rep.terms.iter().map(|&(a, j)| binomial(a, j - 1)).sum::<u64>());
    }

    /// Squashed sizes never fall below the Catalan-sum floor.
    #[test]
    fn squashed_size_floor(t in 0u64..286, l in 2u32..5) {
        let n = 13;
        prop_assume!(t <= binomial(n, l + 1));
        prop_assert!(squashed_size(n, l, t).unwrap() >= binomial(n, l) - catalan_prefix_sum(l));
    }

    /// Shadow-then-shade and shade-then-shadow both dominate the original
    /// family.
    #[test]
    fn closure_monotonicity(f in family_strategy(9, 3, 0.2)) {
        prop_assume!(!f.is_empty());
        let up = f.shade().unwrap().shadow().unwrap();
        let down = f.shadow().unwrap().shade().unwrap();
        for &m in f.members() {
            prop_assert!(up.contains(m));
            prop_assert!(down.contains(m));
        }
    }

    /// Assembling from any upper family yields an antichain whose size obeys
    /// the exact formula.
    #[test]
    fn assemble_always_antichain(f in family_strategy(8, 3, 0.3)) {
        let shadow_len = f.shadow().unwrap().len();
        let a = assemble_from_upper(8, 2, f.clone()).unwrap();
        prop_assert_eq!(a.size(), f.len() + binomial(8, 2) - shadow_len);
        prop_assert!(check_maximal_flat(&a).is_antichain);
    }

    /// The structural verifier agrees with the reference verifier on
    /// assembled families and on arbitrary mutations of them.
    #[test]
    fn verifiers_agree_on_random_families(
        f in family_strategy(9, 4, 0.15),
        drop_low in 0usize..6,
        drop_high in 0usize..3,
    ) {
        let a = assemble_from_upper(9, 3, f).unwrap();
        prop_assert_eq!(check_maximal_flat(&a).is_maximal, verify_maximal(&a));

        let mut lower: Vec<SubsetMask> = a.lower().members().to_vec();
        for _ in 0..drop_low.min(lower.len()) {
            lower.remove(lower.len() / 2);
        }
        let mut upper: Vec<SubsetMask> = a.upper().members().to_vec();
        for _ in 0..drop_high.min(upper.len()) {
            upper.remove(upper.len() / 3);
        }
        let mutated = FlatAntichain::new(
            9,
            3,
            Family::new(9, 4, upper).unwrap(),
            Family::new(9, 3, lower).unwrap(),
        );
        if let Ok(b) = mutated {
            prop_assert_eq!(check_maximal_flat(&b).is_maximal, verify_maximal(&b));
        }
    }
}
