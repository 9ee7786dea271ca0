//! Exact counts of k-normal elements.
//!
//! The number of k-normal elements of F_{q^n} is the sum of `Φ_q(h)` over the
//! monic divisors `h` of `x^n - 1` of degree `n - k`. Every divisor is a choice
//! of exponent `0..=p^s` per irreducible factor, so the count only depends on
//! the [`DegreePattern`] and on `p^s`.
//!
//! [`count_k_normal`] is the production path (truncated series product).
//! [`count_k_normal_enum`] walks the exponent tuples directly and exists as a
//! reference for tests. [`count_k_normal_coprime`] is the binomial formula for
//! `gcd(n, q) = 1`.

mod closed_form;
mod series;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Pow, ToPrimitive, Zero};

pub use closed_form::{closed_form_n1, closed_form_n2, closed_form_n3, ClosedFormBranch};
pub use series::{divisor_weight_series, TupleWeightSeries};

use crate::error::{Error, Result};
use crate::numtheory::BigCount;
use crate::spectrum::{self, DegreePattern, ExtensionParams};

/// Default cap on the number of exponent tuples [`count_k_normal_enum`] may
/// walk.
pub const DEFAULT_ENUM_BOUND: u64 = 10_000_000;

/// Params and degree pattern of one extension, computed once and reused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub params: ExtensionParams,
    pub pattern: DegreePattern,
}

impl Extension {
    pub fn new(q: u64, n: u64) -> Result<Self> {
        let params = spectrum::derive_params(q, n)?;
        let pattern = spectrum::degree_pattern(&params)?;
        Ok(Extension { params, pattern })
    }

    pub fn q(&self) -> u64 {
        self.params.q
    }

    pub fn n(&self) -> u64 {
        self.params.n
    }

    fn check_k(&self, k: u64) -> Result<usize> {
        if k > self.n() {
            return Err(Error::KOutOfRange { k, n: self.n() });
        }
        Ok((self.n() - k) as usize)
    }

    /// `Π_{r|d} (q^r - 1)^{v_r}`.
    pub fn unit_product(&self) -> BigCount {
        let q = self.params.q_big();
        self.pattern
            .iter()
            .map(|(r, v)| {
                let qr: BigUint = q.clone().pow(r as u32);
                (qr - BigUint::one()).pow(v as u32)
            })
            .product()
    }

    /// `N_0 = q^{n - n_0} Π_{r|d} (q^r - 1)^{v_r}`.
    pub fn count_normal(&self) -> BigCount {
        let q = self.params.q_big();
        q.pow((self.params.n - self.params.n0) as u32) * self.unit_product()
    }

    pub fn count_k_normal(&self, k: u64) -> Result<BigCount> {
        let deg = self.check_k(k)?;
        let series = divisor_weight_series(&self.params, &self.pattern, deg);
        Ok(series.coeff(deg).clone())
    }

    /// All counts `N_0..=N_n` from a single series product.
    pub fn distribution(&self) -> Distribution {
        let n = self.n() as usize;
        let series = divisor_weight_series(&self.params, &self.pattern, n);
        let counts = (0..=n).map(|k| series.coeff(n - k).clone()).collect();
        Distribution {
            q: self.q(),
            n: self.n(),
            counts,
        }
    }

    /// Reference evaluation by walking every exponent tuple.
    pub fn count_k_normal_enum(&self, k: u64, bound: u64) -> Result<BigCount> {
        let target = self.check_k(k)? as u64;
        let p_s = self.params.p_s();
        let size: BigUint = self
            .pattern
            .iter()
            .map(|(_, v)| BigUint::from(p_s + 1).pow(v as u32))
            .product();
        if size > BigUint::from(bound) {
            return Err(Error::EnumerationTooLarge {
                size: size.to_string(),
                bound,
            });
        }
        let degrees: Vec<u64> = self
            .pattern
            .iter()
            .flat_map(|(r, v)| std::iter::repeat_n(r, v as usize))
            .collect();
        let q = self.params.q_big();
        let mut total = BigUint::zero();
        enumerate_tuples(&degrees, p_s, &q, target, &BigUint::one(), &mut total);
        Ok(total)
    }

    /// Binomial formula over tuples `(a_r)` with `Σ r·a_r = n - k`, valid
    /// only when `n` is prime to `q`.
    pub fn count_k_normal_coprime(&self, k: u64) -> Result<BigCount> {
        if !self.params.is_coprime() {
            return Err(Error::NotCoprimeCase {
                q: self.q(),
                n: self.n(),
            });
        }
        let target = self.check_k(k)? as u64;
        let q = self.params.q_big();
        let slots: Vec<(u64, u64, BigCount)> = self
            .pattern
            .iter()
            .map(|(r, v)| {
                let qr: BigUint = q.clone().pow(r as u32);
                (r, v, qr - BigUint::one())
            })
            .collect();
        let mut total = BigUint::zero();
        sum_binomial_tuples(&slots, target, &BigUint::one(), &mut total);
        Ok(total)
    }

    /// `N_k = 0` or `N_k · q^k >= N_0`.
    pub fn lower_bound_holds(&self, k: u64) -> Result<bool> {
        let nk = self.count_k_normal(k)?;
        if nk.is_zero() {
            return Ok(true);
        }
        let lhs = nk * self.params.q_big().pow(k as u32);
        Ok(lhs >= self.count_normal())
    }
}

fn enumerate_tuples(
    degrees: &[u64],
    p_s: u64,
    q: &BigCount,
    remaining: u64,
    partial: &BigCount,
    total: &mut BigCount,
) {
    let Some((&r, rest)) = degrees.split_first() else {
        if remaining == 0 {
            *total += partial;
        }
        return;
    };
    // the rest can absorb at most p^s times their degree sum
    let rest_capacity: u64 = rest.iter().sum::<u64>() * p_s;
    for a in 0..=p_s {
        let used = r * a;
        if used > remaining {
            break;
        }
        if remaining - used > rest_capacity {
            continue;
        }
        if a == 0 {
            enumerate_tuples(rest, p_s, q, remaining, partial, total);
        } else {
            let phi = phi_q_prime_power(q, r, a);
            enumerate_tuples(rest, p_s, q, remaining - used, &(partial * phi), total);
        }
    }
}

fn sum_binomial_tuples(
    slots: &[(u64, u64, BigCount)],
    remaining: u64,
    partial: &BigCount,
    total: &mut BigCount,
) {
    let Some(((r, v, unit), rest)) = slots.split_first() else {
        if remaining == 0 {
            *total += partial;
        }
        return;
    };
    for a in 0..=*v {
        let used = r * a;
        if used > remaining {
            break;
        }
        let term = binomial(BigUint::from(*v), BigUint::from(a)) * unit.pow(a as u32);
        sum_binomial_tuples(rest, remaining - used, &(partial * term), total);
    }
}

/// `Φ_q(g^e)` for an irreducible `g` of degree `r`: `q^{r(e-1)}(q^r - 1)`.
pub fn phi_q_prime_power(q: &BigCount, r: u64, e: u64) -> BigCount {
    assert!(r >= 1 && e >= 1);
    let qr: BigUint = q.pow(r as u32);
    qr.clone().pow((e - 1) as u32) * (qr - BigUint::one())
}

pub fn count_normal(q: u64, n: u64) -> Result<BigCount> {
    Ok(Extension::new(q, n)?.count_normal())
}

pub fn count_k_normal(q: u64, n: u64, k: u64) -> Result<BigCount> {
    Extension::new(q, n)?.count_k_normal(k)
}

pub fn count_k_normal_enum(q: u64, n: u64, k: u64) -> Result<BigCount> {
    Extension::new(q, n)?.count_k_normal_enum(k, DEFAULT_ENUM_BOUND)
}

pub fn count_k_normal_coprime(q: u64, n: u64, k: u64) -> Result<BigCount> {
    Extension::new(q, n)?.count_k_normal_coprime(k)
}

pub fn distribution(q: u64, n: u64) -> Result<Distribution> {
    Ok(Extension::new(q, n)?.distribution())
}

pub fn lower_bound_holds(q: u64, n: u64, k: u64) -> Result<bool> {
    Extension::new(q, n)?.lower_bound_holds(k)
}

/// `(N_0, ..., N_n)` for one extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    pub q: u64,
    pub n: u64,
    pub counts: Vec<BigCount>,
}

impl Distribution {
    pub fn total(&self) -> BigCount {
        self.counts.iter().sum()
    }

    /// `q^n`, the field size.
    pub fn field_size(&self) -> BigCount {
        BigUint::from(self.q).pow(self.n as u32)
    }

    /// Sum rule, `N_n = 1` and `N_0 >= 1`.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InternalInconsistency(msg));
        if self.counts.len() as u64 != self.n + 1 {
            return fail(format!("{} counts for n = {}", self.counts.len(), self.n));
        }
        if self.total() != self.field_size() {
            return fail(format!(
                "counts sum to {} but q^n = {}",
                self.total(),
                self.field_size()
            ));
        }
        if !self.counts[self.n as usize].is_one() {
            return fail(format!(
                "N_n = {}, expected 1",
                self.counts[self.n as usize]
            ));
        }
        if self.counts[0].is_zero() {
            return fail("no normal elements".into());
        }
        Ok(())
    }

    pub fn count(&self, k: u64) -> Option<&BigCount> {
        self.counts.get(k as usize)
    }

    /// Counts as `u64`, for small instances in tests.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| c.to_u64()).collect()
    }
}
