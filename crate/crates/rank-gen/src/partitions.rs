//! Bounded partition counting by integer dynamic programming.

/// Number of partitions of exactly `n` into parts from the multiset
/// `parts` (repeated entries are distinct part kinds).
pub fn partition_count(parts: &[i64], n: u64) -> u128 {
    counts(parts, n)[n as usize]
}

/// Number of partitions of all `0 <= k <= s` into parts from `parts`:
/// the `s`-th Taylor coefficient of `1/(1-x) * prod_t 1/(1-x^t)`.
pub fn partition_count_upto(parts: &[i64], s: u64) -> u128 {
    counts(parts, s).iter().sum()
}

fn counts(parts: &[i64], n: u64) -> Vec<u128> {
    let n = n as usize;
    let mut dp = vec![0u128; n + 1];
    dp[0] = 1;
    for &p in parts {
        assert!(p > 0, "part sizes must be positive");
        let p = p as usize;
        for k in p..=n {
            dp[k] = dp[k].checked_add(dp[k - p]).expect("partition count overflow");
        }
    }
    dp
}
