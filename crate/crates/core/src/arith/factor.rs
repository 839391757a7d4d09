use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use super::primality::is_prime_u64;
use super::sieve::PrimeSieve;
use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing
/// primes. The empty factorization represents 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Validating constructor.
    pub fn new(factors: Vec<(u64, u32)>) -> Result<Self> {
        for (i, &(p, e)) in factors.iter().enumerate() {
            if !is_prime_u64(p) {
                return Err(Error::InvalidArgument(alloc::format!("{p} is not prime")));
            }
            if e == 0 {
                return Err(Error::InvalidArgument(alloc::format!(
                    "exponent of {p} is zero"
                )));
            }
            if i > 0 && factors[i - 1].0 >= p {
                return Err(Error::InvalidArgument(
                    "primes must be strictly increasing".into(),
                ));
            }
        }
        Ok(Factorization { factors })
    }

    pub fn prime_power(p: u64, e: u32) -> Result<Self> {
        Self::new(alloc::vec![(p, e)])
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map_or(0, |i| self.factors[i].1)
    }

    /// The represented integer, if it fits in a `u64`.
    pub fn value(&self) -> Option<u64> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }

    pub fn to_biguint(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::from(1u32), |acc, &(p, e)| {
                acc * BigUint::from(p).pow(e)
            })
    }
}

impl fmt::Display for Factorization {
    /// `5^3·7`; `1` for the empty factorization.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Trial-division factorization of `n >= 1`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut n = n;
    let mut factors = Vec::new();
    for p in [2u64, 3] {
        let e = strip(&mut n, p);
        if e > 0 {
            factors.push((p, e));
        }
    }
    // 6k ± 1 wheel
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        for p in [d, d + 2] {
            let e = strip(&mut n, p);
            if e > 0 {
                factors.push((p, e));
            }
        }
        d += 6;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    Ok(Factorization { factors })
}

fn strip(n: &mut u64, p: u64) -> u32 {
    let mut e = 0;
    while *n % p == 0 {
        *n /= p;
        e += 1;
    }
    e
}

/// `S(m)`: 1 for `m = 1`, otherwise the sum of the maximal prime-power parts
/// of `m`. `S_n` has an element of order `m` iff `S(m) <= n`.
pub fn landau_sum(m: u64) -> u64 {
    assert!(m >= 1, "landau_sum is defined for m >= 1");
    if m == 1 {
        return 1;
    }
    factorize(m)
        .expect("m >= 1")
        .factors
        .iter()
        .map(|&(p, e)| p.pow(e))
        .sum()
}

/// Factorization of `n!`; the exponent of `p` is `Σ_{i>=1} ⌊n / p^i⌋`.
pub fn factorial_factorization(n: u64) -> Factorization {
    if n < 2 {
        return Factorization::one();
    }
    let sieve = PrimeSieve::new(n);
    let factors = sieve
        .primes()
        .take_while(|&p| p <= n)
        .map(|p| {
            let mut e = 0u64;
            let mut q = n / p;
            while q > 0 {
                e += q;
                q /= p;
            }
            (p, u32::try_from(e).expect("exponent overflow"))
        })
        .collect();
    Factorization { factors }
}

/// `π(n)`: the primes occurring in `f`, increasing.
pub fn prime_support(f: &Factorization) -> Vec<u64> {
    f.factors.iter().map(|&(p, _)| p).collect()
}
