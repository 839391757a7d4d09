use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;

/// Sieve of Eratosthenes over `[0, limit]`, stored as a bitset.
///
/// The sieve never grows: queries past `limit` fail with
/// [`Error::OutOfRange`] (or panic, for the plain [`PrimeSieve::is_prime`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSieve {
    limit: u64,
    bits: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Self {
        let limit = limit.max(2);
        let len = usize::try_from(limit).expect("sieve limit exceeds address space") + 1;
        let mut bits = vec![u64::MAX; len.div_ceil(64)];
        clear(&mut bits, 0);
        clear(&mut bits, 1);
        let mut p = 2usize;
        while p * p < len {
            if test(&bits, p) {
                let mut k = p * p;
                while k < len {
                    clear(&mut bits, k);
                    k += p;
                }
            }
            p += 1;
        }
        // Bits beyond `limit` in the final word stay set; mask them off so that
        // word-level scans never see phantom primes.
        let tail = len % 64;
        if tail != 0 {
            let last = bits.len() - 1;
            bits[last] &= (1u64 << tail) - 1;
        }
        PrimeSieve { limit, bits }
    }

    pub fn with_default_limit() -> Self {
        Self::new(DEFAULT_SIEVE_LIMIT)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Membership test. Panics when `n` exceeds the sieve limit.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(
            n <= self.limit,
            "{n} is beyond the sieve limit {}",
            self.limit
        );
        test(&self.bits, n as usize)
    }

    pub fn check(&self, n: u64) -> Result<bool> {
        self.ensure(n, 0)?;
        Ok(test(&self.bits, n as usize))
    }

    /// `l_m`: the largest prime not exceeding `m`.
    pub fn largest_prime_leq(&self, m: u64) -> Result<u64> {
        self.ensure(m, 2)?;
        let mut word = (m / 64) as usize;
        let mut bits = self.bits[word] & low_mask(m % 64 + 1);
        loop {
            if bits != 0 {
                return Ok(word as u64 * 64 + 63 - u64::from(bits.leading_zeros()));
            }
            // m >= 2 guarantees the prime 2 is found before word underflows.
            word -= 1;
            bits = self.bits[word];
        }
    }

    /// `Δ(m) = m − l_m`.
    pub fn delta(&self, m: u64) -> Result<u64> {
        Ok(m - self.largest_prime_leq(m)?)
    }

    /// Smallest prime `>= m`, if one lies within the sieve.
    pub fn next_prime_geq(&self, m: u64) -> Option<u64> {
        (m..=self.limit).find(|&k| test(&self.bits, k as usize))
    }

    /// All primes in `[2, n]`, increasing.
    pub fn primes_up_to(&self, n: u64) -> Result<Vec<u64>> {
        self.ensure(n, 0)?;
        Ok(self.primes().take_while(|&p| p <= n).collect())
    }

    /// Number of primes in `[2, n]`.
    pub fn prime_count(&self, n: u64) -> Result<usize> {
        self.ensure(n, 0)?;
        let full = (n / 64) as usize;
        let head: u32 = self.bits[..full].iter().map(|w| w.count_ones()).sum();
        let tail = (self.bits[full] & low_mask(n % 64 + 1)).count_ones();
        Ok((head + tail) as usize)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(i as u64 * 64 + u64::from(b))
            })
        })
    }

    fn ensure(&self, n: u64, min: u64) -> Result<()> {
        if n < min || n > self.limit {
            return Err(Error::OutOfRange {
                value: n,
                min,
                max: self.limit,
            });
        }
        Ok(())
    }
}

fn low_mask(count: u64) -> u64 {
    if count >= 64 {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

fn test(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn clear(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1u64 << (i % 64));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn matches_trial_division() {
        let sieve = PrimeSieve::new(5000);
        for n in 0..=5000 {
            assert_eq!(sieve.is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn largest_prime_examples() {
        let sieve = PrimeSieve::new(1000);
        assert_eq!(sieve.largest_prime_leq(125), Ok(113));
        assert_eq!(sieve.largest_prime_leq(7), Ok(7));
        assert_eq!(sieve.largest_prime_leq(875), Ok(863));
        assert_eq!(sieve.largest_prime_leq(2), Ok(2));
        assert_eq!(sieve.largest_prime_leq(64), Ok(61));
        assert_eq!(sieve.largest_prime_leq(128), Ok(127));
    }

    #[test]
    fn delta_examples() {
        let sieve = PrimeSieve::new(1000);
        assert_eq!(sieve.delta(125), Ok(12));
        assert_eq!(sieve.delta(27), Ok(4));
        for p in sieve.primes() {
            assert_eq!(sieve.delta(p), Ok(0));
        }
    }

    #[test]
    fn range_errors() {
        let sieve = PrimeSieve::new(100);
        assert!(matches!(
            sieve.largest_prime_leq(1),
            Err(Error::OutOfRange { value: 1, .. })
        ));
        assert!(matches!(
            sieve.largest_prime_leq(101),
            Err(Error::OutOfRange { value: 101, .. })
        ));
        assert!(sieve.delta(0).is_err());
    }

    #[test]
    #[should_panic]
    fn is_prime_past_limit_panics() {
        PrimeSieve::new(10).is_prime(11);
    }

    #[test]
    fn counts_and_iteration() {
        let sieve = PrimeSieve::new(1000);
        assert_eq!(sieve.primes().count(), 168);
        assert_eq!(sieve.prime_count(1000), Ok(168));
        assert_eq!(sieve.prime_count(27), Ok(9));
        assert_eq!(sieve.primes_up_to(10).unwrap(), [2, 3, 5, 7]);
        assert_eq!(sieve.next_prime_geq(24), Some(29));
        assert_eq!(sieve.next_prime_geq(998), None);
    }
}
