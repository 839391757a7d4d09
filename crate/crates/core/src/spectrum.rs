//! Element orders of `A_n` and `S_n`.
//!
//! `S_n` has an element of order `m` iff `S(m) <= n`; `A_n` does iff
//! `S(m) <= n` for odd `m` and `S(m) <= n - 2` for even `m`, where `S` is
//! [`landau_sum`].

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{landau_sum, PrimeSieve};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Alternating,
    Symmetric,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::Alternating => 'A',
            Family::Symmetric => 'S',
        }
    }
}

/// `A_n` or `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupKind {
    family: Family,
    degree: u64,
}

impl GroupKind {
    pub fn new(family: Family, degree: u64) -> Result<Self> {
        let min = match family {
            Family::Symmetric => 2,
            Family::Alternating => 3,
        };
        if degree < min {
            return Err(Error::UnsupportedDegree { degree, min });
        }
        Ok(GroupKind { family, degree })
    }

    pub fn symmetric(n: u64) -> Result<Self> {
        Self::new(Family::Symmetric, n)
    }

    pub fn alternating(n: u64) -> Result<Self> {
        Self::new(Family::Alternating, n)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn degree(self) -> u64 {
        self.degree
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.letter(), self.degree)
    }
}

pub fn has_element_of_order(g: GroupKind, m: u64) -> bool {
    assert!(m >= 1, "element orders are positive");
    let s = landau_sum(m);
    match g.family {
        Family::Symmetric => s <= g.degree,
        Family::Alternating if m % 2 == 1 => s <= g.degree,
        Family::Alternating => s + 2 <= g.degree,
    }
}

/// `π(G)`: the primes dividing `|G|`, i.e. the primes `<= n`. Alternating
/// groups of degree below 5 are rejected.
pub fn spectrum_primes(g: GroupKind) -> Result<Vec<u64>> {
    if g.family == Family::Alternating && g.degree < 5 {
        return Err(Error::UnsupportedDegree {
            degree: g.degree,
            min: 5,
        });
    }
    PrimeSieve::new(g.degree).primes_up_to(g.degree)
}

/// `{ m <= cutoff : G has an element of order m }`, increasing.
pub fn enumerate_spectrum(g: GroupKind, cutoff: u64) -> Vec<u64> {
    (1..=cutoff)
        .filter(|&m| has_element_of_order(g, m))
        .collect()
}
