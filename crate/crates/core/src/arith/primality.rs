use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Miller–Rabin with the first 13 primes as witnesses is exact below this
/// bound (3,317,044,064,679,887,385,961,981).
pub const DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const SEED: u64 = 0x005e_ed0f_9a7e;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primality {
    Prime,
    Composite,
    /// Passed every random round above the deterministic bound; the chance
    /// that a composite gets here is at most `4^-rounds`.
    ProbablePrime,
}

impl Primality {
    /// Prime or probably prime.
    pub fn maybe_prime(self) -> bool {
        self != Primality::Composite
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Primality::Prime => "prime",
            Primality::Composite => "composite",
            Primality::ProbablePrime => "probably-prime",
        }
    }
}

/// Exact primality for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    WITNESSES[..12]
        .iter()
        .all(|&a| strong_probable_prime_u64(n, a, d, s))
}

fn strong_probable_prime_u64(n: u64, a: u64, d: u64, s: u32) -> bool {
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % n as u128) as u64;
    let mut x = 1u64;
    let (mut base, mut e) = (a % n, d);
    while e > 0 {
        if e & 1 == 1 {
            x = mul(x, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul(x, x);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Strong probable-prime test of odd `n > 3` to base `a`.
pub fn is_strong_probable_prime(n: &BigUint, a: &BigUint) -> bool {
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u32), n);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Miller–Rabin. Exact for `n` below [`DETERMINISTIC_BOUND`]; above it runs
/// `rounds` rounds with pseudo-random bases from a fixed seed. A
/// `Composite` verdict is always certain.
pub fn is_probable_prime(n: &BigUint, rounds: u32) -> Primality {
    if let Some(small) = n.to_u64() {
        return if is_prime_u64(small) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    if WITNESSES.iter().any(|&p| (n % p).is_zero()) {
        return Primality::Composite;
    }
    match (mr_witness(n, rounds), below_deterministic_bound(n)) {
        (Some(_), _) => Primality::Composite,
        (None, true) => Primality::Prime,
        (None, false) => Primality::ProbablePrime,
    }
}

/// A base `a` for which `n` fails the strong probable-prime test, which
/// proves `n` composite. `None` when `n` is prime, probably prime, or too
/// small (`n <= 2^64`, or divisible by a prime up to 41).
pub fn compositeness_witness(n: &BigUint, rounds: u32) -> Option<BigUint> {
    if n.to_u64().is_some() || WITNESSES.iter().any(|&p| (n % p).is_zero()) {
        return None;
    }
    mr_witness(n, rounds)
}

fn below_deterministic_bound(n: &BigUint) -> bool {
    n.to_u128().is_some_and(|v| v < DETERMINISTIC_BOUND)
}

/// Requires `n > 2^64` and coprime to the fixed witnesses.
fn mr_witness(n: &BigUint, rounds: u32) -> Option<BigUint> {
    if below_deterministic_bound(n) {
        return WITNESSES
            .iter()
            .map(|&a| BigUint::from(a))
            .find(|a| !is_strong_probable_prime(n, a));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    // n > 2^64 here, so any base in [2, 2^64) lies in [2, n - 2].
    (0..rounds.max(1))
        .map(|_| BigUint::from(rng.next_u64().max(2)))
        .find(|a| !is_strong_probable_prime(n, a))
}

/// `base^exponent mod modulus`; `modulus` must be at least 1.
pub fn modpow(base: &BigUint, exponent: &BigUint, modulus: &BigUint) -> BigUint {
    assert!(!modulus.is_zero(), "modulus must be at least 1");
    if modulus.is_one() {
        return BigUint::zero();
    }
    base.modpow(exponent, modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeSieve;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn examples() {
        assert_eq!(is_probable_prime(&big(4_782_967), 20), Primality::Composite);
        assert_eq!(4_782_967 % 7, 0);
        assert_eq!(is_probable_prime(&big(2), 20), Primality::Prime);
        assert_eq!(is_probable_prime(&big(1_000_000_007), 20), Primality::Prime);
        assert_eq!(is_probable_prime(&big(0), 20), Primality::Composite);
        assert_eq!(is_probable_prime(&big(1), 20), Primality::Composite);
    }

    #[test]
    fn sweep_against_sieve() {
        let sieve = PrimeSieve::new(1_000_000);
        for n in 0..=1_000_000u64 {
            assert_eq!(is_prime_u64(n), sieve.is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // strong pseudoprimes to several small bases
        for n in [
            2047u64,
            1_373_653,
            25_326_001,
            3_215_031_751,
            2_152_302_898_747,
            3_474_749_660_383,
            341_550_071_728_321,
            3_825_123_056_546_413_051,
        ] {
            assert!(!is_prime_u64(n), "{n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn big_inputs() {
        // 2^64 + 13 is the least prime above 2^64, below the deterministic bound.
        let above = (BigUint::one() << 64u32) + 13u32;
        assert_eq!(is_probable_prime(&above, 5), Primality::Prime);
        assert_eq!(is_probable_prime(&(&above + 2u32), 5), Primality::Composite);
        // 2^89 - 1 is a Mersenne prime above it.
        let m89 = (BigUint::one() << 89u32) - 1u32;
        assert_eq!(is_probable_prime(&m89, 5), Primality::ProbablePrime);
        // 2^127 - 1 is prime but above the bound.
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert_eq!(is_probable_prime(&m127, 5), Primality::ProbablePrime);
        let composite = &m127 * &m89;
        assert_eq!(is_probable_prime(&composite, 5), Primality::Composite);
        let a = compositeness_witness(&composite, 5).unwrap();
        assert!(!is_strong_probable_prime(&composite, &a));
        assert_eq!(compositeness_witness(&m127, 5), None);
        // product of two primes just above 2^64, no small factors
        let p = big(18_446_744_073_709_551_557);
        assert_eq!(is_probable_prime(&(&p * &p), 5), Primality::Composite);
    }

    #[test]
    fn modpow_examples() {
        assert_eq!(modpow(&big(3), &big(14), &big(7)), big(2));
        assert_eq!(modpow(&big(3), &big(14), &big(19)), big(4));
        assert_eq!(modpow(&big(12345), &big(0), &big(97)), big(1));
        assert_eq!(modpow(&big(5), &big(3), &big(1)), big(0));
    }
}
