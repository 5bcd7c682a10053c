//! Exact integer counting helpers shared by every construction.

/// Largest ground-set size supported by the bit-vector set representation.
pub const MAX_GROUND: u32 = 64;

const TABLE_DIM: usize = MAX_GROUND as usize + 1;

/// Pascal triangle up to n = 64; every entry fits in a u64.
static BINOMIAL: std::sync::LazyLock<[[u64; TABLE_DIM]; TABLE_DIM]> =
    std::sync::LazyLock::new(|| {
        let mut c = [[0u64; TABLE_DIM]; TABLE_DIM];
        for n in 0..TABLE_DIM {
            c[n][0] = 1;
            for k in 1..=n {
                c[n][k] = c[n - 1][k - 1] + if k < n { c[n - 1][k] } else { 0 };
            }
        }
        c
    });

/// binomial(n, k), zero outside 0 <= k <= n <= 64.
pub fn binomial(n: u32, k: u32) -> u64 {
    if n > MAX_GROUND || k > n {
        return 0;
    }
    BINOMIAL[n as usize][k as usize]
}

/// Signed-index binomial, zero for negative k. Convenient in level arithmetic.
pub fn binomial_i(n: u32, k: i64) -> u64 {
    if k < 0 {
        0
    } else {
        binomial(n, k as u32)
    }
}

/// Sum of the first `l` Catalan numbers: 1 + 2 + 5 + 14 + ...
pub fn catalan_prefix_sum(l: u32) -> u64 {
    (1..=l as u64).map(|i| binomial(2 * i as u32, i as u32) / (i + 1)).sum()
}

/// Piecewise slack bound used to extend construction intervals to the right:
/// 0,0,0,1,1,3,3,4,4,7,7 for t = 0..=10 and t-1 for t >= 11.
pub fn overlap_slack(t: u32) -> u64 {
    match t {
        0..=2 => 0,
        3 | 4 => 1,
        5 | 6 => 3,
        7 | 8 => 4,
        9 | 10 => 7,
        _ => t as u64 - 1,
    }
}

/// ceil(a / b) for positive b.
pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_matches_factorial_definition() {
        // Independent route: multiplicative formula with u128 intermediates.
        for n in 0..=64u32 {
            for k in 0..=n {
                let mut acc: u128 = 1;
                for i in 0..k as u128 {
                    acc = acc * (n as u128 - i) / (i + 1);
                }
                assert_eq!(binomial(n, k) as u128, acc, "C({n},{k})");
            }
        }
        assert_eq!(binomial(65, 2), 0);
        assert_eq!(binomial(5, 6), 0);
    }

    #[test]
    fn catalan_prefix_values() {
        assert_eq!(catalan_prefix_sum(1), 1);
        assert_eq!(catalan_prefix_sum(2), 3); // 1 + 2
        assert_eq!(catalan_prefix_sum(3), 8); // 1 + 2 + 5
        assert_eq!(catalan_prefix_sum(4), 22); // 1 + 2 + 5 + 14
        assert_eq!(catalan_prefix_sum(5), 64);
        assert_eq!(catalan_prefix_sum(6), 196);
    }

    #[test]
    fn overlap_slack_piecewise() {
        let expect = [0u64, 0, 0, 1, 1, 3, 3, 4, 4, 7, 7];
        for (t, &v) in expect.iter().enumerate() {
            assert_eq!(overlap_slack(t as u32), v);
        }
        assert_eq!(overlap_slack(11), 10);
        assert_eq!(overlap_slack(2), 0);
        assert_eq!(overlap_slack(5), 3);
        for t in 11..100 {
            assert_eq!(overlap_slack(t), t as u64 - 1);
        }
    }
}
