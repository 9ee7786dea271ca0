//! Structural data of the extension F_{q^n} / F_q.
//!
//! Everything here is derived from q and n alone: the characteristic split
//! `n = p^s * n_0`, the order `d` of q modulo `n_0`, and how many distinct
//! irreducible factors of each degree divide `x^n - 1`. No polynomial is ever
//! factored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numtheory::{self, BigCount};

/// Largest supported extension degree.
pub const MAX_DEGREE: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionParams {
    pub q: u64,
    /// Characteristic.
    pub p: u64,
    /// `q = p^m`.
    pub m: u32,
    pub n: u64,
    /// The p-free part of n.
    pub n0: u64,
    /// `n = p^s * n0`.
    pub s: u32,
    /// Multiplicative order of q modulo n0.
    pub d: u64,
}

impl ExtensionParams {
    /// `p^s`, the multiplicity of every irreducible factor of `x^n - 1`.
    pub fn p_s(&self) -> u64 {
        self.n / self.n0
    }

    pub fn is_coprime(&self) -> bool {
        self.s == 0
    }

    pub fn q_big(&self) -> BigCount {
        BigUint::from(self.q)
    }
}

pub fn derive_params(q: u64, n: u64) -> Result<ExtensionParams> {
    let (p, m) = numtheory::prime_power_decompose(q)?;
    if n == 0 {
        return Err(Error::InputTooLarge {
            what: "n (must be positive)",
            value: 0,
            bound: MAX_DEGREE,
        });
    }
    if n > MAX_DEGREE {
        return Err(Error::InputTooLarge {
            what: "n",
            value: n,
            bound: MAX_DEGREE,
        });
    }
    let mut n0 = n;
    let mut s = 0;
    while n0.is_multiple_of(p) {
        n0 /= p;
        s += 1;
    }
    let d = numtheory::multiplicative_order(q % n0.max(1), n0)?;
    Ok(ExtensionParams {
        q,
        p,
        m,
        n,
        n0,
        s,
        d,
    })
}

/// Map `r -> v_r`: the number of distinct monic irreducible factors of degree
/// `r` of `x^n - 1`. Zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreePattern {
    entries: BTreeMap<u64, u64>,
}

impl DegreePattern {
    pub fn from_entries<I: IntoIterator<Item = (u64, u64)>>(entries: I) -> Self {
        let mut map = BTreeMap::new();
        for (r, v) in entries {
            if v > 0 {
                *map.entry(r).or_insert(0) += v;
            }
        }
        DegreePattern { entries: map }
    }

    /// Builds the pattern from a multiset of factor degrees.
    pub fn from_degrees<I: IntoIterator<Item = u64>>(degrees: I) -> Self {
        Self::from_entries(degrees.into_iter().map(|r| (r, 1)))
    }

    pub fn v(&self, r: u64) -> u64 {
        self.entries.get(&r).copied().unwrap_or(0)
    }

    /// Nonzero entries, ascending in r.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&r, &v)| (r, v))
    }

    /// Σ r·v_r.
    pub fn total_degree(&self) -> u64 {
        self.iter().map(|(r, v)| r * v).sum()
    }

    /// Σ v_r.
    pub fn factor_count(&self) -> u64 {
        self.entries.values().sum()
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (r, v)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}: {v}")?;
        }
        write!(f, "}}")
    }
}

/// Möbius inversion of `t_r = Σ_{u|r} u·v_u` over the divisors of d.
pub fn degree_pattern(params: &ExtensionParams) -> Result<DegreePattern> {
    let q = params.q_big();
    let divs = numtheory::divisors(params.d);
    let t: BTreeMap<u64, u64> = divs
        .iter()
        .map(|&r| (r, numtheory::gcd_qr_minus_one(&q, r, params.n)))
        .collect();

    let mut entries = Vec::new();
    for &r in &divs {
        let sum: i128 = numtheory::divisors(r)
            .into_iter()
            .map(|u| t[&u] as i128 * numtheory::moebius(r / u) as i128)
            .sum();
        if sum < 0 || sum % r as i128 != 0 {
            return Err(Error::InternalInconsistency(format!(
                "Möbius sum {sum} for degree {r} is not a nonnegative multiple of {r}"
            )));
        }
        entries.push((r, (sum / r as i128) as u64));
    }
    let pattern = DegreePattern::from_entries(entries);

    if pattern.total_degree() != params.n0 {
        return Err(Error::InternalInconsistency(format!(
            "degree pattern {pattern} has total degree {} but n0 = {}",
            pattern.total_degree(),
            params.n0
        )));
    }
    Ok(pattern)
}

/// Number of distinct irreducible factors of `x^n - 1`, from the totient sum
/// `(1/d) Σ_{r|d} gcd(q^r - 1, n)·φ(d/r)`.
pub fn omega(params: &ExtensionParams) -> u64 {
    let q = params.q_big();
    let d = params.d;
    let sum: u128 = numtheory::divisors(d)
        .into_iter()
        .map(|r| {
            numtheory::gcd_qr_minus_one(&q, r, params.n) as u128
                * numtheory::euler_phi(d / r) as u128
        })
        .sum();
    debug_assert_eq!(sum % d as u128, 0);
    (sum / d as u128) as u64
}
