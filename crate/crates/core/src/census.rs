//! Counting arguments for groups sharing order and degree pattern with
//! `S_27`, `A_m` or `S_m`.
//!
//! For odd `m` with `Δ(m) > 4` and every prime factor of `m` at most `Δ(m)`,
//! the primes dividing `m` are joined to every vertex of `Γ(A_m)`, and
//! `Γ(A_m) = Γ(A_{m-1})`. Then `A_{m-1} × H` matches `A_m` in order and
//! degree pattern for every group `H` of order `m`, giving
//! `h_OD(A_m) >= 1 + ν(m)`; the symmetric analogue gives `h_OD(S_m) >= 4`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arith::{factorial_factorization, factorize, prime_support, Factorization, PrimeSieve};
use crate::error::{Error, Result};
use crate::group_counts::{GroupCountTable, NuBasis};
use crate::spectrum::{Family, GroupKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusBranch {
    pub label: String,
    pub count: u64,
    pub witnesses: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub target: GroupKind,
    pub total: u64,
    pub branches: Vec<CensusBranch>,
}

/// The groups with the order and degree pattern of `S_27`: three with socle
/// `A_27`, then `ν(54)` groups `R × A_26`, `ν(27)` groups `Q × 2·A_26`, and
/// `ν(54)` fibre products over `Z_2` of `S_26` with a group of order 54.
pub fn s27_census(table: &GroupCountTable) -> Result<CensusReport> {
    let nu54 = table.nu(54).ok_or(Error::MissingCount(54))?;
    let nu27 = table.nu(27).ok_or(Error::MissingCount(27))?;
    let branch = |label: &str, count, witnesses: &str| CensusBranch {
        label: label.into(),
        count,
        witnesses: witnesses.into(),
    };
    let branches = alloc::vec![
        branch("S ≅ A_27 cases", 3, "S_27, Z_2×A_27, Z_2·A_27"),
        branch("G/R ≅ A_26, R order 54", nu54, "R×A_26"),
        branch("G/R ≅ A_26, split factor", nu27, "Q×(Z_2·A_26)"),
        branch(
            "G/R ≅ S_26 fibre products",
            nu54,
            "subdirect with order-54 quotient",
        ),
    ];
    Ok(CensusReport {
        target: GroupKind::symmetric(27)?,
        total: branches.iter().map(|b| b.count).sum(),
        branches,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    Odd,
    DeltaAbove4,
    SupportInDeltaFactorial,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Odd => "m odd",
            Condition::DeltaAbove4 => "Δ(m) > 4",
            Condition::SupportInDeltaFactorial => "π(m) ⊆ π(Δ(m)!)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreconditionCheck {
    pub condition: Condition,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundBasis {
    ExactNu,
    AbelianOnly,
    Conservative,
}

impl BoundBasis {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundBasis::ExactNu => "exact-nu",
            BoundBasis::AbelianOnly => "abelian-only",
            BoundBasis::Conservative => "conservative",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFamily {
    pub name: String,
    pub size: BigUint,
    pub basis: NuBasis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub target: GroupKind,
    /// `None` when some precondition failed.
    pub lower_bound: Option<BigUint>,
    pub basis: Option<BoundBasis>,
    pub preconditions: Vec<PreconditionCheck>,
    /// Families of groups matching the target, listed as in the argument;
    /// they may overlap (see `deduplicated`).
    pub witness_families: Vec<WitnessFamily>,
    pub deduplicated: bool,
}

impl BoundReport {
    pub fn preconditions_hold(&self) -> bool {
        self.preconditions.iter().all(|c| c.holds)
    }

    pub fn failed(&self) -> impl Iterator<Item = &PreconditionCheck> {
        self.preconditions.iter().filter(|c| !c.holds)
    }
}

fn format_set(primes: &[u64]) -> String {
    let inner: Vec<String> = primes.iter().map(|p| format!("{p}")).collect();
    format!("{{{}}}", inner.join(", "))
}

fn check_preconditions(sieve: &PrimeSieve, m: u64) -> Result<Vec<PreconditionCheck>> {
    let delta = sieve.delta(m)?;
    let support = prime_support(&factorize(m)?);
    let within = support.iter().all(|&p| p <= delta);
    Ok(alloc::vec![
        PreconditionCheck {
            condition: Condition::Odd,
            holds: m % 2 == 1,
            detail: format!("m = {m}"),
        },
        PreconditionCheck {
            condition: Condition::DeltaAbove4,
            holds: delta > 4,
            detail: format!("Δ({m}) = {delta}"),
        },
        PreconditionCheck {
            condition: Condition::SupportInDeltaFactorial,
            holds: within,
            detail: format!("π({m}) = {}, Δ({m}) = {delta}", format_set(&support)),
        },
    ])
}

/// `h_OD(A_m) >= 1 + ν(m)`, with `ν_a(m)` standing in when the table lacks
/// `m`.
pub fn alt_lower_bound(sieve: &PrimeSieve, m: u64, table: &GroupCountTable) -> Result<BoundReport> {
    let target = GroupKind::new(Family::Alternating, m)?;
    let preconditions = check_preconditions(sieve, m)?;
    let mut report = BoundReport {
        target,
        lower_bound: None,
        basis: None,
        preconditions,
        witness_families: Vec::new(),
        deduplicated: true,
    };
    if !report.preconditions_hold() {
        return Ok(report);
    }
    let nu = table.nu_lower_bound(&factorize(m)?);
    report.witness_families = alloc::vec![
        WitnessFamily {
            name: format!("A_{m}"),
            size: BigUint::from(1u32),
            basis: NuBasis::Exact,
        },
        WitnessFamily {
            name: format!("A_{}×H, |H| = {m}", m - 1),
            size: nu.count.clone(),
            basis: nu.basis,
        },
    ];
    report.lower_bound = Some(nu.count + 1u32);
    report.basis = Some(match nu.basis {
        NuBasis::Exact => BoundBasis::ExactNu,
        NuBasis::AbelianOnly => BoundBasis::AbelianOnly,
    });
    Ok(report)
}

/// `h_OD(S_m) >= 4`. The seven witness families are reported with their
/// sizes but not deduplicated: `A_{m-1}×K` with `K ≅ Z_2×H` repeats
/// `(Z_2×A_{m-1})×H`.
pub fn sym_lower_bound(sieve: &PrimeSieve, m: u64, table: &GroupCountTable) -> Result<BoundReport> {
    let target = GroupKind::new(Family::Symmetric, m)?;
    let preconditions = check_preconditions(sieve, m)?;
    let mut report = BoundReport {
        target,
        lower_bound: None,
        basis: None,
        preconditions,
        witness_families: Vec::new(),
        deduplicated: false,
    };
    if !report.preconditions_hold() {
        return Ok(report);
    }
    let nu_m = table.nu_lower_bound(&factorize(m)?);
    let double = m
        .checked_mul(2)
        .ok_or_else(|| Error::InvalidArgument(format!("2·{m} overflows")))?;
    let nu_2m = table.nu_lower_bound(&factorize(double)?);
    let k = m - 1;
    let single = |name: String| WitnessFamily {
        name,
        size: BigUint::from(1u32),
        basis: NuBasis::Exact,
    };
    let times = |name: String, est: &crate::group_counts::NuEstimate| WitnessFamily {
        name,
        size: est.count.clone(),
        basis: est.basis,
    };
    report.witness_families = alloc::vec![
        single(format!("S_{m}")),
        single(format!("Z_2×A_{m}")),
        single(format!("Z_2·A_{m}")),
        times(format!("S_{k}×H, |H| = {m}"), &nu_m),
        times(format!("(Z_2×A_{k})×H, |H| = {m}"), &nu_m),
        times(format!("(Z_2·A_{k})×H, |H| = {m}"), &nu_m),
        times(format!("A_{k}×K, |K| = {double}"), &nu_2m),
    ];
    report.lower_bound = Some(BigUint::from(4u32));
    report.basis = Some(BoundBasis::Conservative);
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub m: u64,
    pub m_factorization: Factorization,
    pub m_minus_4_factorization: Factorization,
    pub largest_prime: u64,
    pub delta: u64,
    pub delta_factorial_primes: Vec<u64>,
    pub nu: Option<u64>,
}

/// Odd `m` in `[lo, hi]` with `Δ(m) > 4` and `π(m) ⊆ π(Δ(m)!)`, increasing.
pub fn table1_search(
    sieve: &PrimeSieve,
    lo: u64,
    hi: u64,
    table: &GroupCountTable,
) -> Result<Vec<Table1Row>> {
    if hi > sieve.limit() {
        return Err(Error::OutOfRange {
            value: hi,
            min: 0,
            max: sieve.limit(),
        });
    }
    let mut rows = Vec::new();
    let start = lo.max(5) | 1;
    for m in (start..=hi).step_by(2) {
        let largest_prime = sieve.largest_prime_leq(m)?;
        let delta = m - largest_prime;
        if delta <= 4 {
            continue;
        }
        let m_factorization = factorize(m)?;
        if prime_support(&m_factorization).iter().any(|&p| p > delta) {
            continue;
        }
        rows.push(Table1Row {
            m,
            m_minus_4_factorization: factorize(m - 4)?,
            m_factorization,
            largest_prime,
            delta,
            delta_factorial_primes: prime_support(&factorial_factorization(delta)),
            nu: table.nu(m),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn census_standard_table() {
        let report = s27_census(&GroupCountTable::shipped()).unwrap();
        assert_eq!(report.total, 38);
        let counts: Vec<u64> = report.branches.iter().map(|b| b.count).collect();
        assert_eq!(counts, [3, 15, 5, 15]);
    }

    #[test]
    fn census_formula_and_missing_orders() {
        let t = GroupCountTable::from_entries([(27, 4), (54, 7)]).unwrap();
        assert_eq!(s27_census(&t).unwrap().total, 3 + 2 * 7 + 4);
        let t = GroupCountTable::from_entries([(27, 5)]).unwrap();
        assert_eq!(s27_census(&t), Err(Error::MissingCount(54)));
        let t = GroupCountTable::from_entries([(54, 15)]).unwrap();
        assert_eq!(s27_census(&t), Err(Error::MissingCount(27)));
    }

    #[test]
    fn alternating_bounds() {
        let sieve = PrimeSieve::new(1000);
        let t = GroupCountTable::shipped();
        let r = alt_lower_bound(&sieve, 125, &t).unwrap();
        assert_eq!(r.lower_bound, Some(big(6)));
        assert_eq!(r.basis, Some(BoundBasis::ExactNu));
        assert_eq!(
            alt_lower_bound(&sieve, 189, &t).unwrap().lower_bound,
            Some(big(14))
        );

        let r = alt_lower_bound(&sieve, 123, &t).unwrap();
        assert_eq!(r.lower_bound, None);
        let failed: Vec<Condition> = r.failed().map(|c| c.condition).collect();
        assert_eq!(failed, [Condition::SupportInDeltaFactorial]);
        assert_eq!(r.preconditions[1].detail, "Δ(123) = 10");
        assert_eq!(r.preconditions[2].detail, "π(123) = {3, 41}, Δ(123) = 10");
    }

    #[test]
    fn alternating_bound_falls_back_to_abelian_count() {
        let sieve = PrimeSieve::new(1000);
        let empty = GroupCountTable::from_entries([]).unwrap();
        let r = alt_lower_bound(&sieve, 625, &empty).unwrap();
        assert_eq!(r.lower_bound, Some(big(6)));
        assert_eq!(r.basis, Some(BoundBasis::AbelianOnly));
    }

    #[test]
    fn symmetric_bounds() {
        let sieve = PrimeSieve::new(1000);
        let t = GroupCountTable::shipped();
        let r = sym_lower_bound(&sieve, 125, &t).unwrap();
        assert_eq!(r.lower_bound, Some(big(4)));
        assert_eq!(r.basis, Some(BoundBasis::Conservative));
        assert!(!r.deduplicated);
        let r = sym_lower_bound(&sieve, 625, &t).unwrap();
        assert_eq!(r.witness_families.len(), 7);
        let sizes: Vec<&BigUint> = r.witness_families.iter().map(|f| &f.size).collect();
        assert_eq!(
            sizes[..6],
            [&big(1), &big(1), &big(1), &big(15), &big(15), &big(15)]
        );
        assert_eq!(r.witness_families[6].name, "A_624×K, |K| = 1250");

        let r = sym_lower_bound(&sieve, 11, &t).unwrap();
        assert_eq!(r.lower_bound, None);
        assert!(r.failed().any(|c| c.condition == Condition::DeltaAbove4));
        assert!(r.witness_families.is_empty());
    }

    #[test]
    fn even_m_fails_oddness() {
        let sieve = PrimeSieve::new(1000);
        let r = alt_lower_bound(&sieve, 126, &GroupCountTable::shipped()).unwrap();
        assert!(r.failed().any(|c| c.condition == Condition::Odd));
        assert!(alt_lower_bound(&sieve, 1001, &GroupCountTable::shipped()).is_err());
    }

    #[test]
    fn table1_small_range_is_empty() {
        let sieve = PrimeSieve::new(1000);
        let t = GroupCountTable::shipped();
        assert!(table1_search(&sieve, 3, 30, &t).unwrap().is_empty());
        assert!(table1_search(&sieve, 100, 1001, &t).is_err());
    }

    #[test]
    fn table1_row_539() {
        let sieve = PrimeSieve::new(1000);
        let rows = table1_search(&sieve, 539, 539, &GroupCountTable::shipped()).unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.delta_factorial_primes, [2, 3, 5, 7, 11, 13]);
        assert_eq!(row.largest_prime, 523);
        assert_eq!(row.delta, 16);
        assert_eq!(row.nu, Some(2));
    }
}
