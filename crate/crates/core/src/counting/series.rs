//! Truncated generating functions over divisor degrees.
//!
//! A monic divisor `h` of `x^n - 1` picks an exponent `0..=p^s` for each
//! irreducible factor. Weighting each choice by its contribution to `Φ_q(h)`
//! and tracking the degree in `z` turns the sum over all such tuples into the
//! coefficients of a product of one-variable polynomials.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::numtheory::BigCount;
use crate::spectrum::{DegreePattern, ExtensionParams};

/// Coefficients `w[0..=cap]` of a polynomial in `z`, truncated at `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleWeightSeries {
    weights: Vec<BigCount>,
}

impl TupleWeightSeries {
    /// The series `1`.
    pub fn one(cap: usize) -> Self {
        let mut weights = vec![BigUint::zero(); cap + 1];
        weights[0] = BigUint::one();
        TupleWeightSeries { weights }
    }

    /// Series of one irreducible factor of degree `r` appearing with
    /// multiplicity `p^s`:
    /// `1 + Σ_{a=1}^{p^s} q^{r(a-1)}(q^r - 1) z^{ra}`.
    pub fn factor(q: &BigCount, r: u64, p_s: u64, cap: usize) -> Self {
        let mut series = Self::one(cap);
        let qr: BigUint = q.pow(r as u32);
        let mut term = &qr - BigUint::one();
        let r = r as usize;
        for a in 1..=p_s as usize {
            let Some(deg) = r.checked_mul(a).filter(|&deg| deg <= cap) else {
                break;
            };
            series.weights[deg] = term.clone();
            term *= &qr;
        }
        series
    }

    pub fn cap(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn coeff(&self, deg: usize) -> &BigCount {
        &self.weights[deg]
    }

    pub fn weights(&self) -> &[BigCount] {
        &self.weights
    }

    /// Product truncated to the smaller of the two caps.
    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        let mut out = vec![BigUint::zero(); cap + 1];
        for (i, a) in self.weights.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.weights.iter().enumerate().take(cap + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TupleWeightSeries { weights: out }
    }
}

/// `Π_{r|d} w_r(z)^{v_r}` truncated at `cap`. The coefficient of `z^j` is the
/// sum of `Φ_q(h)` over monic divisors `h` of `x^n - 1` with degree `j`.
pub fn divisor_weight_series(
    params: &ExtensionParams,
    pattern: &DegreePattern,
    cap: usize,
) -> TupleWeightSeries {
    let q = params.q_big();
    let mut acc = TupleWeightSeries::one(cap);
    for (r, v) in pattern.iter() {
        let factor = TupleWeightSeries::factor(&q, r, params.p_s(), cap);
        for _ in 0..v {
            acc = acc.mul(&factor);
        }
    }
    acc
}
