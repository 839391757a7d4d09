//! Integer substrate: sieving, factorization, partition numbers and
//! big-integer primality.

mod factor;
mod partitions;
mod primality;
mod sieve;

pub use factor::{factorial_factorization, factorize, landau_sum, prime_support, Factorization};
pub use partitions::partition_count;
pub use primality::{
    compositeness_witness, is_prime_u64, is_probable_prime, is_strong_probable_prime, modpow,
    Primality, DETERMINISTIC_BOUND,
};
pub use sieve::{PrimeSieve, DEFAULT_SIEVE_LIMIT};
