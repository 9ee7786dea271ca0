use super::{find_irreducible, FiniteField, Poly};
use crate::error::{Error, Result};
use crate::numtheory;

/// Largest F_q the tower will tabulate.
pub const MAX_BASE_ORDER: u64 = 1024;

/// Integers modulo a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !numtheory::is_prime(p) {
            return Err(Error::NotPrimePower(p));
        }
        let p = u32::try_from(p).map_err(|_| Error::InputTooLarge {
            what: "p",
            value: p,
            bound: u32::MAX as u64,
        })?;
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }
}

impl FiniteField for PrimeField {
    type Elem = u32;

    fn order(&self) -> u64 {
        self.p as u64
    }

    fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        (*a != 0).then(|| self.pow(a, self.p as u64 - 2))
    }

    fn element(&self, index: u64) -> u32 {
        debug_assert!(index < self.p as u64);
        index as u32
    }

    fn index_of(&self, a: &u32) -> u64 {
        *a as u64
    }
}

/// F_q = F_p[u]/(g) with full operation tables.
///
/// Element `i` has base-p digits equal to its coefficients in `1, u, u^2, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseField {
    prime: PrimeField,
    modulus: Poly<u32>,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl BaseField {
    /// F_q with the first irreducible of degree m over F_p as modulus.
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = numtheory::prime_power_decompose(q)?;
        let prime = PrimeField::new(p)?;
        let modulus = find_irreducible(&prime, m as usize);
        Self::with_modulus(prime, modulus)
    }

    pub fn with_modulus(prime: PrimeField, modulus: Poly<u32>) -> Result<Self> {
        let m = modulus.degree().expect("nonzero modulus") as u32;
        let q = prime.p().pow(m);
        if q > MAX_BASE_ORDER {
            return Err(Error::InputTooLarge {
                what: "q (tabulated base field)",
                value: q,
                bound: MAX_BASE_ORDER,
            });
        }
        let qs = q as usize;
        let p = prime.p();
        let to_poly = |i: u64| {
            let mut digits = Vec::with_capacity(m as usize);
            let mut x = i;
            for _ in 0..m {
                digits.push((x % p) as u32);
                x /= p;
            }
            Poly::new(&prime, digits)
        };
        let from_poly = |f: &Poly<u32>| {
            f.coeffs()
                .iter()
                .rev()
                .fold(0u64, |acc, &c| acc * p + c as u64) as u32
        };
        let polys: Vec<Poly<u32>> = (0..q).map(to_poly).collect();

        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                add[a * qs + b] = from_poly(&polys[a].add(&prime, &polys[b]));
                let prod = polys[a].mul(&prime, &polys[b]).rem(&prime, &modulus);
                mul[a * qs + b] = from_poly(&prod);
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u32)
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u32
                }
            })
            .collect();
        Ok(BaseField {
            prime,
            modulus,
            q: q as u32,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.prime
    }

    /// The defining polynomial g over F_p.
    pub fn modulus(&self) -> &Poly<u32> {
        &self.modulus
    }

    pub fn degree(&self) -> u32 {
        self.modulus.degree().unwrap() as u32
    }
}

impl FiniteField for BaseField {
    type Elem = u32;

    fn order(&self) -> u64 {
        self.q as u64
    }

    fn characteristic(&self) -> u64 {
        self.prime.p()
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.add[(*a * self.q + *b) as usize]
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        self.neg[*a as usize]
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.mul[(*a * self.q + *b) as usize]
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        (*a != 0).then(|| self.inv[*a as usize])
    }

    fn element(&self, index: u64) -> u32 {
        debug_assert!(index < self.q as u64);
        index as u32
    }

    fn index_of(&self, a: &u32) -> u64 {
        *a as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_ops() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.neg(&3), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn f4_tables() {
        // F_4 = F_2[u]/(u^2 + u + 1); element 2 is u, 3 is u + 1
        let f = BaseField::new(4).unwrap();
        assert_eq!(f.modulus().coeffs(), &[1, 1, 1]);
        assert_eq!(f.mul(&2, &2), 3);
        assert_eq!(f.mul(&2, &3), 1);
        assert_eq!(f.add(&2, &3), 1);
        assert_eq!(f.inv(&2), Some(3));
    }

    #[test]
    fn base_field_axioms() {
        for q in [4u64, 8, 9, 25, 27] {
            let f = BaseField::new(q).unwrap();
            let q = q as u32;
            for a in 0..q {
                assert_eq!(f.add(&a, &f.neg(&a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
                    for c in [1u32, q - 1] {
                        let lhs = f.mul(&a, &f.add(&b, &c));
                        let rhs = f.add(&f.mul(&a, &b), &f.mul(&a, &c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn base_field_too_large() {
        assert!(matches!(
            BaseField::new(2048),
            Err(Error::InputTooLarge { .. })
        ));
    }
}
