//! Certificates for infinite families of degrees `m = p^n` with `Δ(m) > 4`.
//!
//! For odd `m`, `m - 1` and `m - 3` are even and larger than 2, so
//! `Δ(m) > 4` follows once `m - 2` and `m - 4` are shown composite. That
//! avoids computing `l_m`, which is out of reach for large exponents.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{
    compositeness_witness, is_prime_u64, is_probable_prime, is_strong_probable_prime, modpow,
    Primality, PrimeSieve,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Primes up to this bound are tried as factors before Miller–Rabin.
    pub trial_bound: u64,
    pub rounds: u32,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            trial_bound: 100_000,
            rounds: 20,
        }
    }
}

/// Evidence that a value is composite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompositeWitness {
    /// `1 < factor < value` and `factor | value`.
    Factor(BigUint),
    /// `value = low · high` with `1 < low <= high`.
    DifferenceOfSquares { low: BigUint, high: BigUint },
    /// `value` fails the strong probable-prime test to this base.
    MillerRabinBase(BigUint),
}

impl CompositeWitness {
    pub fn verify(&self, value: &BigUint) -> bool {
        let one = BigUint::one();
        match self {
            CompositeWitness::Factor(f) => f > &one && f < value && (value % f).is_zero(),
            CompositeWitness::DifferenceOfSquares { low, high } => {
                low > &one && low <= high && &(low * high) == value
            }
            CompositeWitness::MillerRabinBase(a) => {
                value > &BigUint::from(3u32)
                    && value.bit(0)
                    && a > &one
                    && a < &(value - 1u32)
                    && !is_strong_probable_prime(value, a)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckVerdict {
    Composite(CompositeWitness),
    Prime,
    ProbablePrime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueCheck {
    /// The checked value is `m - offset`.
    pub offset: u32,
    pub value: BigUint,
    pub verdict: CheckVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateStatus {
    /// `m - 2` and `m - 4` are both composite, so `Δ(m) > 4`.
    Certified,
    /// `m - 2` or `m - 4` is prime, so `Δ(m) <= 4`.
    NotInFamily,
    /// Nothing certain: some value is only probably prime.
    Inconclusive,
}

impl CertificateStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateStatus::Certified => "certified",
            CertificateStatus::NotInFamily => "not-in-family",
            CertificateStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCertificate {
    pub p: u64,
    pub n: u32,
    pub m: BigUint,
    pub checks: Vec<ValueCheck>,
    pub status: CertificateStatus,
}

impl FamilyCertificate {
    /// Re-checks every composite witness against its value.
    pub fn witnesses_verify(&self) -> bool {
        self.checks.iter().all(|c| match &c.verdict {
            CheckVerdict::Composite(w) => w.verify(&c.value),
            _ => true,
        })
    }
}

fn classify(value: &BigUint, small_primes: &[u64], rounds: u32) -> CheckVerdict {
    for &p in small_primes {
        let p_big = BigUint::from(p);
        if &p_big >= value {
            break;
        }
        if (value % p).is_zero() {
            return CheckVerdict::Composite(CompositeWitness::Factor(p_big));
        }
    }
    match is_probable_prime(value, rounds) {
        Primality::Prime => CheckVerdict::Prime,
        Primality::ProbablePrime => CheckVerdict::ProbablePrime,
        Primality::Composite => {
            let witness = match value.to_u64() {
                Some(v) => CompositeWitness::Factor(BigUint::from(smallest_factor(v))),
                None => CompositeWitness::MillerRabinBase(
                    compositeness_witness(value, rounds)
                        .expect("composite value above 2^64 has a strong-test witness"),
                ),
            };
            CheckVerdict::Composite(witness)
        }
    }
}

fn smallest_factor(n: u64) -> u64 {
    (2..)
        .take_while(|d| d * d <= n)
        .find(|d| n % d == 0)
        .unwrap_or(n)
}

fn trial_primes(bound: u64) -> Vec<u64> {
    PrimeSieve::new(bound)
        .primes()
        .take_while(|&p| p <= bound)
        .collect()
}

/// Attempts to certify `Δ(p^n) > 4`.
pub fn certify_delta_gt4(p: u64, n: u32, options: CertifyOptions) -> Result<FamilyCertificate> {
    let small = trial_primes(options.trial_bound);
    certify_with(p, n, &small, options.rounds)
}

fn certify_with(p: u64, n: u32, small: &[u64], rounds: u32) -> Result<FamilyCertificate> {
    if p % 2 == 0 || !is_prime_u64(p) {
        return Err(Error::InvalidArgument(alloc::format!(
            "p must be an odd prime, got {p}"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "n must be at least 2, got {n}"
        )));
    }
    let m = BigUint::from(p).pow(n);
    let minus_2 = &m - 2u32;
    let minus_4 = &m - 4u32;

    let check_2 = ValueCheck {
        offset: 2,
        verdict: classify(&minus_2, small, rounds),
        value: minus_2,
    };
    // p^n - 4 = (p^{n/2} - 2)(p^{n/2} + 2) for even n; a proper split needs
    // p^{n/2} - 2 > 1.
    let half = BigUint::from(p).pow(n / 2);
    let verdict_4 = if n % 2 == 0 && half > BigUint::from(3u32) {
        CheckVerdict::Composite(CompositeWitness::DifferenceOfSquares {
            low: &half - 2u32,
            high: &half + 2u32,
        })
    } else {
        classify(&minus_4, small, rounds)
    };
    let check_4 = ValueCheck {
        offset: 4,
        value: minus_4,
        verdict: verdict_4,
    };

    let checks = alloc::vec![check_2, check_4];
    let status = if checks.iter().any(|c| c.verdict == CheckVerdict::Prime) {
        CertificateStatus::NotInFamily
    } else if checks
        .iter()
        .all(|c| matches!(c.verdict, CheckVerdict::Composite(_)))
    {
        CertificateStatus::Certified
    } else {
        CertificateStatus::Inconclusive
    };
    Ok(FamilyCertificate {
        p,
        n,
        m,
        checks,
        status,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSurvey {
    pub p: u64,
    pub n_max: u32,
    pub certificates: Vec<FamilyCertificate>,
}

impl DeltaSurvey {
    pub fn count(&self, status: CertificateStatus) -> usize {
        self.certificates
            .iter()
            .filter(|c| c.status == status)
            .count()
    }
}

/// [`certify_delta_gt4`] for every even `n` in `[2, n_max]`.
pub fn survey_prime_power_deltas(
    p: u64,
    n_max: u32,
    options: CertifyOptions,
) -> Result<DeltaSurvey> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(alloc::format!(
            "n_max must be at least 2, got {n_max}"
        )));
    }
    let small = trial_primes(options.trial_bound);
    let certificates = (2..=n_max)
        .step_by(2)
        .map(|n| certify_with(p, n, &small, options.rounds))
        .collect::<Result<_>>()?;
    Ok(DeltaSurvey {
        p,
        n_max,
        certificates,
    })
}

/// `3^n ≡ residue (mod modulus)`, i.e. `modulus | 3^n - residue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Congruence {
    pub modulus: u64,
    pub residue: u64,
    pub actual: u64,
}

impl Congruence {
    pub fn holds(&self) -> bool {
        self.residue == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod144Report {
    pub n: u64,
    pub congruences: Vec<Congruence>,
}

impl Mod144Report {
    pub fn all_hold(&self) -> bool {
        self.congruences.iter().all(Congruence::holds)
    }
}

/// For `n ≡ 14 (mod 144)`: `7, 17 | 3^n - 2` and `5, 19 | 3^n - 4`.
pub const MOD144_MODULI: [(u64, u64); 4] = [(7, 2), (17, 2), (5, 4), (19, 4)];

pub fn check_mod144_family(n: u64) -> Result<Mod144Report> {
    if n % 144 != 14 {
        return Err(Error::Precondition(alloc::format!(
            "n = {n} is not congruent to 14 mod 144"
        )));
    }
    let exponent = BigUint::from(n);
    let congruences = MOD144_MODULI
        .iter()
        .map(|&(modulus, residue)| Congruence {
            modulus,
            residue,
            actual: modpow(&BigUint::from(3u32), &exponent, &BigUint::from(modulus))
                .to_u64()
                .expect("residue below modulus"),
        })
        .collect();
    Ok(Mod144Report { n, congruences })
}

/// Smallest `k >= 1` with `a^k ≡ 1 (mod q)`, for `gcd(a, q) = 1`.
pub fn multiplicative_order(a: u64, q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let mut x = a % q;
    for k in 1..=q {
        if x == 1 {
            return Some(k);
        }
        x = ((x as u128 * a as u128) % q as u128) as u64;
    }
    None
}

/// One term `a^e - b` with `e = k + (q - 1)·m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedTerm {
    pub m: u64,
    pub exponent: BigUint,
    /// `q | a^e - b`, checked by modular exponentiation.
    pub divisible: bool,
    /// `a^e - b > q`; holds because `e > k` and `a >= 2`.
    pub exceeds_q: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorOutcome {
    /// `a^k - b = q` is prime (or probably prime) with `q > a`.
    Found {
        k: u64,
        q: BigUint,
        q_primality: Primality,
        terms: Vec<GeneratedTerm>,
    },
    /// No `k <= search_bound` gives a prime `a^k - b > a`: a bounded
    /// empirical statement only.
    NoPrimeFound { search_bound: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorReport {
    pub a: u64,
    pub b: u64,
    pub outcome: GeneratorOutcome,
}

/// Produces infinitely many composite `a^N - b` from one prime `q = a^k - b`
/// above `a`: Fermat gives `a^{k + (q-1)m} ≡ a^k ≡ b (mod q)`.
pub fn composite_generator(
    a: u64,
    b: u64,
    count: u64,
    search_bound: u64,
) -> Result<GeneratorReport> {
    if a < 2 || b < 1 {
        return Err(Error::InvalidArgument(alloc::format!(
            "need a >= 2 and b >= 1, got a = {a}, b = {b}"
        )));
    }
    let base = BigUint::from(a);
    let b_big = BigUint::from(b);
    let mut power = BigUint::one();
    for k in 1..=search_bound {
        power *= &base;
        if power <= b_big {
            continue;
        }
        let q = &power - &b_big;
        if q <= base {
            continue;
        }
        let q_primality = is_probable_prime(&q, 20);
        if q_primality == Primality::Composite {
            continue;
        }
        let target = &b_big % &q;
        let step = &q - 1u32;
        let terms = (1..=count)
            .map(|m| {
                let exponent = &step * m + k;
                GeneratedTerm {
                    m,
                    divisible: modpow(&base, &exponent, &q) == target,
                    exceeds_q: exponent > BigUint::from(k),
                    exponent,
                }
            })
            .collect();
        return Ok(GeneratorReport {
            a,
            b,
            outcome: GeneratorOutcome::Found {
                k,
                q,
                q_primality,
                terms,
            },
        });
    }
    Ok(GeneratorReport {
        a,
        b,
        outcome: GeneratorOutcome::NoPrimeFound { search_bound },
    })
}
