use alloc::vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `|Par(n)|`, the number of partitions of `n`, computed exactly.
///
/// Counts partitions by largest admissible part (`ways[s] += ways[s - k]` for
/// each part size `k`), so it shares nothing with Euler's pentagonal
/// recurrence used to cross-check it in tests.
pub fn partition_count(n: u64) -> BigUint {
    let n = usize::try_from(n).expect("n exceeds address space");
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in 1..=n {
        for s in part..=n {
            let (lo, hi) = ways.split_at_mut(s);
            hi[0] += &lo[s - part];
        }
    }
    ways.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        assert_eq!(partition_count(0), BigUint::from(1u32));
        assert_eq!(partition_count(3), BigUint::from(3u32));
        assert_eq!(partition_count(4), BigUint::from(5u32));
        assert_eq!(partition_count(7), BigUint::from(15u32));
        assert_eq!(partition_count(14), BigUint::from(135u32));
        assert_eq!(partition_count(100), BigUint::from(190_569_292u64));
    }

    #[test]
    fn exceeds_u64_past_416() {
        assert!(partition_count(416).bits() <= 64);
        assert!(partition_count(417).bits() > 64);
    }
}
