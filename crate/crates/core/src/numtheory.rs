//! Integer utilities: primality, factorization, divisors, Möbius and Euler
//! functions, multiplicative order.
//!
//! Structural quantities (n, d, r, v_r) stay in machine integers; anything
//! that grows like a power of q is a [`BigCount`].

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x < 4 {
        return true;
    }
    if x.is_multiple_of(2) || x.is_multiple_of(3) {
        return false;
    }
    let mut i = 5u64;
    while i.saturating_mul(i) <= x {
        if x.is_multiple_of(i) || x.is_multiple_of(i + 2) {
            return false;
        }
        i += 6;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut x: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= x {
        if x.is_multiple_of(p) {
            let mut e = 0;
            while x.is_multiple_of(p) {
                x /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

/// Splits `x` as `p^m` with `p` prime.
pub fn prime_power_decompose(x: u64) -> Result<(u64, u32)> {
    match factorize(x).as_slice() {
        [(p, m)] => Ok((*p, *m)),
        _ => Err(Error::NotPrimePower(x)),
    }
}

/// Divisors of `x` in ascending order. `x` must be positive.
pub fn divisors(x: u64) -> Vec<u64> {
    assert!(x >= 1, "divisors: x must be positive");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i.saturating_mul(i) <= x {
        if x.is_multiple_of(i) {
            small.push(i);
            if i != x / i {
                large.push(x / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn moebius(x: u64) -> i8 {
    assert!(x >= 1, "moebius: x must be positive");
    let mut sign = 1i8;
    for (_, e) in factorize(x) {
        if e > 1 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

pub fn euler_phi(x: u64) -> u64 {
    assert!(x >= 1, "euler_phi: x must be positive");
    factorize(x)
        .into_iter()
        .fold(x, |acc, (p, _)| acc / p * (p - 1))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Least `d >= 1` with `a^d ≡ 1 (mod modulus)`.
///
/// Only divisors of `φ(modulus)` are tried, in ascending order.
pub fn multiplicative_order(a: u64, modulus: u64) -> Result<u64> {
    assert!(
        modulus >= 1,
        "multiplicative_order: modulus must be positive"
    );
    if modulus == 1 {
        return Ok(1);
    }
    if a.gcd(&modulus) != 1 {
        return Err(Error::NotCoprime { a, modulus });
    }
    let phi = euler_phi(modulus);
    divisors(phi)
        .into_iter()
        .find(|&d| pow_mod(a, d, modulus) == 1)
        .ok_or_else(|| {
            Error::InternalInconsistency(format!("no order of {a} mod {modulus} divides {phi}"))
        })
}

/// `t_r = gcd(q^r - 1, n)`.
///
/// `q^r` is reduced modulo `n` in arbitrary precision, which leaves the gcd
/// unchanged and keeps the cost independent of how large `q^r` is.
pub fn gcd_qr_minus_one(q: &BigCount, r: u64, n: u64) -> u64 {
    assert!(r >= 1 && n >= 1);
    let modulus = BigUint::from(n);
    let qr = q.modpow(&BigUint::from(r), &modulus);
    // (q^r - 1) mod n, with q^r ≡ 0 wrapping to n - 1
    let rem = if qr.is_zero() {
        &modulus - BigUint::one()
    } else {
        qr - BigUint::one()
    };
    let rem = rem.to_u64().expect("residue below n fits in u64");
    rem.gcd(&n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2));
        assert!(!is_prime(27));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(is_prime(65537));
        assert!(!is_prime(25));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_decompose(25), Ok((5, 2)));
        assert_eq!(prime_power_decompose(16), Ok((2, 4)));
        assert_eq!(prime_power_decompose(7), Ok((7, 1)));
        assert_eq!(prime_power_decompose(12), Err(Error::NotPrimePower(12)));
        assert_eq!(prime_power_decompose(1), Err(Error::NotPrimePower(1)));
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(5), vec![1, 5]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn moebius_and_phi() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(10), 4);
        assert_eq!(euler_phi(11), 10);
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 5), Ok(4));
        assert_eq!(multiplicative_order(27, 11), Ok(5));
        assert_eq!(multiplicative_order(16, 15), Ok(1));
        assert_eq!(multiplicative_order(7, 1), Ok(1));
        assert_eq!(
            multiplicative_order(6, 9),
            Err(Error::NotCoprime { a: 6, modulus: 9 })
        );
    }

    #[test]
    fn t_r_values() {
        let big = |x: u64| BigUint::from(x);
        assert_eq!(gcd_qr_minus_one(&big(2), 4, 5), 5);
        assert_eq!(gcd_qr_minus_one(&big(25), 1, 3), 3);
        assert_eq!(gcd_qr_minus_one(&big(27), 1, 11), 1);
        assert_eq!(gcd_qr_minus_one(&big(2), 3, 1), 1);
        // q^r ≡ 0 mod n
        assert_eq!(gcd_qr_minus_one(&big(4), 2, 8), 1);
    }
}
