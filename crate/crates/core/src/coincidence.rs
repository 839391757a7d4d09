//! When do two prime graphs of symmetric or alternating groups coincide?
//!
//! `Γ(S_m) = Γ(S_n)` for `2 <= m < n` iff `m = n - 1` and either `n ∈ {4, 6}`
//! or both `n` and `n - 2` are odd composites. The forward direction for
//! `n > 6` relies on the strong Goldbach conjecture (every even `n > 6` is a
//! sum of two distinct odd primes), so verdicts are only given up to a
//! frontier where that has been checked by [`verify_goldbach`].

use alloc::vec::Vec;

use crate::arith::{is_prime_u64, PrimeSieve};
use crate::error::{Error, Result};
use crate::graph::PrimeGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoincidenceRule {
    VertexSetsDiffer,
    PrimeGapEdge,
    N4Or6,
    OddCompositePair,
    ExceptionalTable,
    BruteForce,
}

impl CoincidenceRule {
    pub fn as_str(self) -> &'static str {
        match self {
            CoincidenceRule::VertexSetsDiffer => "vertex-sets-differ",
            CoincidenceRule::PrimeGapEdge => "prime-gap-edge",
            CoincidenceRule::N4Or6 => "n4-or-6",
            CoincidenceRule::OddCompositePair => "odd-composite-pair",
            CoincidenceRule::ExceptionalTable => "exceptional-table",
            CoincidenceRule::BruteForce => "brute-force",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoincidenceWitness {
    /// A prime vertex of the larger graph only.
    Prime(u64),
    /// An edge `p ~ q` present in exactly one of the graphs.
    Pair(u64, u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoincidenceVerdict {
    pub equal: bool,
    pub rule: CoincidenceRule,
    pub witness: Option<CoincidenceWitness>,
}

fn is_composite(n: u64) -> bool {
    n >= 4 && !is_prime_u64(n)
}

/// Closed-form prediction of `Γ(S_m) = Γ(S_n)`.
///
/// Witness pairs for "not equal" come from the Goldbach report, so the report
/// must cover `n`.
pub fn predict_symmetric_equal(
    m: u64,
    n: u64,
    goldbach: &GoldbachReport,
) -> Result<CoincidenceVerdict> {
    if m < 2 || m >= n {
        return Err(Error::InvalidArgument(alloc::format!(
            "need 2 <= m < n, got m = {m}, n = {n}"
        )));
    }
    if n > goldbach.verified_up_to() {
        return Err(Error::ConditionalVerdict {
            n,
            frontier: goldbach.verified_up_to(),
        });
    }
    let not_equal = |rule, witness| CoincidenceVerdict {
        equal: false,
        rule,
        witness: Some(witness),
    };

    if let Some(p) = (m + 1..=n).find(|&k| is_prime_u64(k)) {
        return Ok(not_equal(
            CoincidenceRule::VertexSetsDiffer,
            CoincidenceWitness::Prime(p),
        ));
    }
    // Same vertex set from here on, so n is composite.
    if n <= 6 {
        // only (3, 4) and (5, 6) reach this point
        return Ok(CoincidenceVerdict {
            equal: true,
            rule: CoincidenceRule::N4Or6,
            witness: None,
        });
    }
    if m == n - 1 && n % 2 == 1 {
        if is_prime_u64(n - 2) {
            return Ok(not_equal(
                CoincidenceRule::PrimeGapEdge,
                CoincidenceWitness::Pair(2, n - 2),
            ));
        }
        return Ok(CoincidenceVerdict {
            equal: true,
            rule: CoincidenceRule::OddCompositePair,
            witness: None,
        });
    }
    // An even e in (m, n] with e >= 8 exists: n is even, or n is odd with
    // m < n - 1. Its Goldbach pair is an edge of Γ(S_n) but not of Γ(S_m).
    let even = if n % 2 == 0 { n } else { n - 1 };
    let (p, q) = goldbach
        .witness(even)
        .expect("even numbers up to the frontier have witnesses");
    Ok(not_equal(
        CoincidenceRule::PrimeGapEdge,
        CoincidenceWitness::Pair(p, q),
    ))
}

/// `Γ(A_n) = Γ(A_{n-1})` for odd `n >= 5` iff `n` and `n - 4` are composite.
pub fn predict_alternating_equal(n: u64) -> Result<bool> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "n must be odd and at least 5, got {n}"
        )));
    }
    Ok(is_composite(n) && is_composite(n - 4))
}

/// Simple groups whose prime graph coincides with `Γ(A_n)` outside the
/// generic `A_n` / `A_{n-1}` case. Only `n ∈ {5, 6, 7, 9}` have entries.
pub fn exceptional_partners(n: u64) -> &'static [&'static str] {
    match n {
        5 => &["A_6"],
        6 => &["A_5"],
        7 => &["L_2(49)", "U_4(3)"],
        9 => &["J_2", "S_6(2)", "O^+_8(2)"],
        _ => &[],
    }
}

/// Smallest-`p` decomposition `n = p + q` into distinct odd primes.
pub fn goldbach_witness(sieve: &PrimeSieve, n: u64) -> Option<(u64, u64)> {
    if n % 2 == 1 || n < 8 || n > sieve.limit() {
        return None;
    }
    (3..n / 2)
        .step_by(2)
        .find(|&p| sieve.is_prime(p) && sieve.is_prime(n - p))
        .map(|p| (p, n - p))
}

/// Outcome of sweeping the even numbers `8, 10, ..., limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldbachReport {
    /// Requested upper end of the sweep.
    pub limit: u64,
    /// Largest even number such that every even number in `[8, frontier]`
    /// has a witness.
    pub frontier: u64,
    pub counterexample: Option<u64>,
    /// Smallest `p` for each even `n`, indexed by `(n - 8) / 2`.
    smallest: Vec<u32>,
}

impl GoldbachReport {
    pub fn witness(&self, n: u64) -> Option<(u64, u64)> {
        if n % 2 == 1 || n < 8 || n > self.frontier {
            return None;
        }
        let p = u64::from(self.smallest[((n - 8) / 2) as usize]);
        Some((p, n - p))
    }

    /// Every integer up to this bound lies below the next unchecked even
    /// number, so coincidence verdicts up to it are unconditional.
    pub fn verified_up_to(&self) -> u64 {
        if self.counterexample.is_some() {
            self.frontier
        } else {
            self.frontier + 1
        }
    }

    /// A deterministic sample of witnesses: the first few and those at powers
    /// of ten.
    pub fn sampled_witnesses(&self) -> Vec<(u64, u64, u64)> {
        let mut picks: Vec<u64> = (8..=self.frontier.min(20)).step_by(2).collect();
        let mut t = 100;
        while t <= self.frontier {
            picks.push(t);
            t *= 10;
        }
        if self.frontier >= 8 && !picks.contains(&self.frontier) {
            picks.push(self.frontier);
        }
        picks
            .into_iter()
            .filter_map(|n| self.witness(n).map(|(p, q)| (n, p, q)))
            .collect()
    }
}

/// Checks that every even `n` in `[8, limit]` is a sum of two distinct odd
/// primes, stopping at the first failure.
pub fn verify_goldbach(sieve: &PrimeSieve, limit: u64) -> Result<GoldbachReport> {
    if limit < 8 || limit > sieve.limit() {
        return Err(Error::OutOfRange {
            value: limit,
            min: 8,
            max: sieve.limit(),
        });
    }
    let odd_primes: Vec<u64> = sieve.primes().skip(1).take_while(|&p| p <= limit).collect();
    let mut smallest = Vec::with_capacity((limit / 2) as usize);
    let mut counterexample = None;
    let mut n = 8;
    while n <= limit {
        let found = odd_primes
            .iter()
            .take_while(|&&p| 2 * p < n)
            .find(|&&p| sieve.is_prime(n - p));
        match found {
            Some(&p) => smallest.push(p as u32),
            None => {
                counterexample = Some(n);
                break;
            }
        }
        n += 2;
    }
    let frontier = match counterexample {
        Some(c) => c - 2,
        None => limit - limit % 2,
    };
    Ok(GoldbachReport {
        limit,
        frontier,
        counterexample,
        smallest,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub limit: u64,
    pub checked: u64,
    /// Even `n` where strict growth `Γ(S_{n-1}) ⊊ Γ(S_n)` and the existence
    /// of a distinct-odd-prime decomposition of `n` disagree.
    pub mismatches: Vec<u64>,
}

impl GrowthReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares, for every even `n` in `(6, limit]`, strict growth of the prime
/// graph from `S_{n-1}` to `S_n` against `n` having a Goldbach decomposition.
/// Both are computed independently: graphs from the adjacency rule,
/// decompositions by search.
pub fn check_growth_equivalence(sieve: &PrimeSieve, limit: u64) -> Result<GrowthReport> {
    if limit < 8 || limit > sieve.limit() {
        return Err(Error::OutOfRange {
            value: limit,
            min: 8,
            max: sieve.limit(),
        });
    }
    let mut mismatches = Vec::new();
    let mut checked = 0;
    let mut n = 8;
    while n <= limit {
        let smaller = PrimeGraph::symmetric_in(sieve, n - 1)?;
        let larger = PrimeGraph::symmetric_in(sieve, n)?;
        let strict = smaller.is_subgraph_of(&larger) && smaller != larger;
        let decomposable = goldbach_witness(sieve, n).is_some();
        if strict != decomposable {
            mismatches.push(n);
        }
        checked += 1;
        n += 2;
    }
    Ok(GrowthReport {
        limit,
        checked,
        mismatches,
    })
}
