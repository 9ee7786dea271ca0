//! Closed forms for N_1, N_2 and N_3.
//!
//! The case split depends only on `p^s`: coprime (`n = n_0`), `p^s = 2`,
//! `p^s = 3` and `p^s > 3`. Coefficients such as `q/(q-1)` and negative powers
//! of q appear in the formulas, so evaluation is done in exact rationals and
//! the result must come out a nonnegative integer.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Extension;
use crate::error::{Error, Result};
use crate::numtheory::BigCount;
use crate::spectrum::ExtensionParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedFormBranch {
    /// `n = n_0`.
    Coprime,
    PsTwo,
    PsThree,
    PsAboveThree,
}

impl ClosedFormBranch {
    pub fn of(params: &ExtensionParams) -> Self {
        match params.p_s() {
            1 => ClosedFormBranch::Coprime,
            2 => ClosedFormBranch::PsTwo,
            3 => ClosedFormBranch::PsThree,
            _ => ClosedFormBranch::PsAboveThree,
        }
    }
}

fn int(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn big(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, x.clone()))
}

fn to_count(value: BigRational, what: &str) -> Result<BigCount> {
    if !value.is_integer() || value < BigRational::zero() {
        return Err(Error::InternalInconsistency(format!(
            "{what} evaluated to {value}, not a nonnegative integer"
        )));
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

struct Terms {
    q: BigRational,
    v1: BigRational,
    v2: BigRational,
    v3: BigRational,
    /// `Π_{r|d} (q^r - 1)^{v_r}`
    units: BigRational,
    /// `q^{n - n_0 - k}` for the non-coprime branches
    shift: BigRational,
}

impl Terms {
    fn new(ext: &Extension, k: u64) -> Result<Self> {
        if ext.n() < k {
            return Err(Error::KOutOfRange { k, n: ext.n() });
        }
        let q = int(ext.q());
        let exp = ext.params.n as i64 - ext.params.n0 as i64 - k as i64;
        let shift = num_traits::Pow::pow(&q, exp as i32);
        Ok(Terms {
            v1: int(ext.pattern.v(1)),
            v2: int(ext.pattern.v(2)),
            v3: int(ext.pattern.v(3)),
            units: big(&ext.unit_product()),
            shift,
            q,
        })
    }

    fn q_over_q_minus_1(&self) -> BigRational {
        &self.q / (&self.q - BigRational::one())
    }
}

impl Extension {
    pub fn closed_form_n1(&self) -> Result<BigCount> {
        let t = Terms::new(self, 1)?;
        let value = match ClosedFormBranch::of(&self.params) {
            ClosedFormBranch::Coprime => {
                // v_1 (q-1)^{v_1-1} Π_{r≠1} (q^r - 1)^{v_r}
                let v1 = self.pattern.v(1);
                let qm1 = &t.q - BigRational::one();
                let others: BigRational = self
                    .pattern
                    .iter()
                    .filter(|&(r, _)| r != 1)
                    .map(|(r, v)| {
                        let qr: BigRational = num_traits::Pow::pow(&t.q, r as i32);
                        num_traits::Pow::pow(qr - BigRational::one(), v as i32)
                    })
                    .product();
                &t.v1 * num_traits::Pow::pow(qm1, v1 as i32 - 1) * others
            }
            _ => &t.v1 * &t.shift * &t.units,
        };
        to_count(value, "N_1 closed form")
    }

    pub fn closed_form_n2(&self) -> Result<BigCount> {
        let t = Terms::new(self, 2)?;
        let one = BigRational::one();
        let pairs = &t.v1 * (&t.v1 - &one) / int(2);
        let value = match ClosedFormBranch::of(&self.params) {
            ClosedFormBranch::Coprime => {
                let qm1 = &t.q - &one;
                let coeff = &pairs / (&qm1 * &qm1) + &t.v2 / (&t.q * &t.q - &one);
                coeff * &t.units
            }
            ClosedFormBranch::PsTwo => {
                (t.q_over_q_minus_1() * &t.v1 + &pairs + &t.v2) * &t.shift * &t.units
            }
            ClosedFormBranch::PsThree | ClosedFormBranch::PsAboveThree => {
                (&t.v1 + &pairs + &t.v2) * &t.shift * &t.units
            }
        };
        to_count(value, "N_2 closed form")
    }

    pub fn closed_form_n3(&self) -> Result<BigCount> {
        let t = Terms::new(self, 3)?;
        let one = BigRational::one();
        let v1 = &t.v1;
        let mixed = v1 * &t.v2;
        // v_1(v_1-1)(v_1+4)/6
        let cubic = v1 * (v1 - &one) * (v1 + int(4)) / int(6);
        let value = match ClosedFormBranch::of(&self.params) {
            ClosedFormBranch::Coprime => {
                let qm1 = &t.q - &one;
                let q2m1 = &t.q * &t.q - &one;
                let q3m1 = &t.q * &t.q * &t.q - &one;
                let triples = v1 * (v1 - &one) * (v1 - int(2)) / (int(6) * &qm1 * &qm1 * &qm1);
                let coeff = triples + &mixed / (&qm1 * &q2m1) + &t.v3 / q3m1;
                coeff * &t.units
            }
            ClosedFormBranch::PsTwo => {
                let lead = (t.q_over_q_minus_1() + (v1 - int(2)) / int(6)) * v1 * (v1 - &one);
                (lead + &mixed + &t.v3) * &t.shift * &t.units
            }
            ClosedFormBranch::PsThree => {
                (t.q_over_q_minus_1() * v1 + &cubic + &mixed + &t.v3) * &t.shift * &t.units
            }
            ClosedFormBranch::PsAboveThree => (v1 + &cubic + &mixed + &t.v3) * &t.shift * &t.units,
        };
        to_count(value, "N_3 closed form")
    }
}

pub fn closed_form_n1(q: u64, n: u64) -> Result<BigCount> {
    Extension::new(q, n)?.closed_form_n1()
}

pub fn closed_form_n2(q: u64, n: u64) -> Result<BigCount> {
    Extension::new(q, n)?.closed_form_n2()
}

pub fn closed_form_n3(q: u64, n: u64) -> Result<BigCount> {
    Extension::new(q, n)?.closed_form_n3()
}
