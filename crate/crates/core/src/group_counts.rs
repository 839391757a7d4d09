//! `ν(n)`, the number of groups of order `n`, served from a table, and
//! `ν_a(n)`, the number of abelian groups, computed from partitions.
//!
//! Table text format: one `order count` pair per line separated by
//! whitespace; `#` starts a comment; blank lines are ignored. A repeated
//! order replaces the earlier entry and is recorded in
//! [`GroupCountTable::duplicates`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arith::{factorize, partition_count, Factorization};
use crate::error::{Error, Result};

/// Curated table shipped with the crate; provenance is in its header.
pub const SHIPPED_TABLE: &str = include_str!("../data/groups.txt");

/// Orders up to this bound are factored during loading to check
/// `ν_a(n) <= ν(n)`.
const ABELIAN_CHECK_LIMIT: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCountTable {
    entries: BTreeMap<u64, u64>,
    source: String,
    duplicates: Vec<Duplicate>,
}

/// An order that appeared more than once; the later line won.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Duplicate {
    pub order: u64,
    pub line: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NuBasis {
    Exact,
    AbelianOnly,
}

impl NuBasis {
    pub fn as_str(self) -> &'static str {
        match self {
            NuBasis::Exact => "exact",
            NuBasis::AbelianOnly => "abelian-only",
        }
    }
}

/// A lower bound for `ν(n)`, exact when the table has the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuEstimate {
    pub count: BigUint,
    pub basis: NuBasis,
}

impl GroupCountTable {
    pub fn parse(text: &str, source: impl Into<String>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let mut duplicates = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut fields = content.split_whitespace();
            let (Some(order), Some(count), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::Parse {
                    line,
                    message: alloc::format!("expected `order count`, found {content:?}"),
                });
            };
            let order = parse_field(order, "order", line)?;
            let count = parse_field(count, "count", line)?;
            if order < 1 {
                return Err(Error::Validation {
                    line,
                    message: "order must be at least 1".into(),
                });
            }
            if count < 1 {
                return Err(Error::Validation {
                    line,
                    message: alloc::format!("count for order {order} must be at least 1"),
                });
            }
            if order <= ABELIAN_CHECK_LIMIT {
                let abelian = nu_abelian(&factorize(order)?);
                if BigUint::from(count) < abelian {
                    return Err(Error::Validation {
                        line,
                        message: alloc::format!(
                            "count {count} for order {order} is below the {abelian} abelian groups"
                        ),
                    });
                }
            }
            if entries.insert(order, count).is_some() {
                duplicates.push(Duplicate { order, line });
            }
        }
        Ok(GroupCountTable {
            entries,
            source: source.into(),
            duplicates,
        })
    }

    pub fn shipped() -> Self {
        Self::parse(SHIPPED_TABLE, "shipped:groups.txt").expect("shipped table is valid")
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut text = String::new();
        for (order, count) in entries {
            text.push_str(&alloc::format!("{order} {count}\n"));
        }
        Self::parse(&text, "inline")
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn duplicates(&self) -> &[Duplicate] {
        &self.duplicates
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `ν(n)` if the table has it.
    pub fn nu(&self, n: u64) -> Option<u64> {
        self.entries.get(&n).copied()
    }

    pub fn nu_lower_bound(&self, f: &Factorization) -> NuEstimate {
        match f.value().and_then(|n| self.nu(n)) {
            Some(count) => NuEstimate {
                count: BigUint::from(count),
                basis: NuBasis::Exact,
            },
            None => NuEstimate {
                count: nu_abelian(f),
                basis: NuBasis::AbelianOnly,
            },
        }
    }
}

fn parse_field(text: &str, what: &str, line: usize) -> Result<u64> {
    text.parse().map_err(|_| Error::Parse {
        line,
        message: alloc::format!("{what} {text:?} is not a non-negative integer"),
    })
}

/// `ν_a(n) = Π |Par(a)|` over the prime-power parts `p^a` of `n`.
pub fn nu_abelian(f: &Factorization) -> BigUint {
    f.factors()
        .iter()
        .map(|&(_, e)| partition_count(u64::from(e)))
        .product()
}
