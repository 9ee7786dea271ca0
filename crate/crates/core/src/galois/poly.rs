use std::fmt::Debug;

use super::{ExtensionField, FiniteField};
use crate::error::{Error, Result};
use crate::numtheory;

/// Dense univariate polynomial, coefficients lowest degree first, with no
/// trailing zeros. The zero polynomial has no coefficients and no degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + Debug> Poly<E> {
    pub fn new<F: FiniteField<Elem = E>>(field: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant<F: FiniteField<Elem = E>>(field: &F, c: E) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one<F: FiniteField<Elem = E>>(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    /// `c·x^deg`.
    pub fn monomial<F: FiniteField<Elem = E>>(field: &F, c: E, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(field, coeffs)
    }

    pub fn x<F: FiniteField<Elem = E>>(field: &F) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one<F: FiniteField<Elem = E>>(field: &F, n: usize) -> Self {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = field.one();
        coeffs[0] = field.sub(&coeffs[0], &field.one());
        Self::new(field, coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn add<F: FiniteField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = field.zero();
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                field.add(a, b)
            })
            .collect();
        Self::new(field, coeffs)
    }

    pub fn sub<F: FiniteField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add(field, &other.scale(field, &field.neg(&field.one())))
    }

    pub fn scale<F: FiniteField<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Self::new(field, self.coeffs.iter().map(|a| field.mul(a, c)).collect())
    }

    pub fn mul<F: FiniteField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Self::new(field, out)
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub fn divrem<F: FiniteField<Elem = E>>(&self, field: &F, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&sd| sd >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![field.zero(); sd - dd + 1];
        for i in (dd..=sd).rev() {
            if field.is_zero(&rem[i]) {
                continue;
            }
            let c = field.mul(&rem[i], &lead_inv);
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = field.mul(&c, b);
                rem[i - dd + j] = field.sub(&rem[i - dd + j], &t);
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(field, quot), Self::new(field, rem))
    }

    pub fn rem<F: FiniteField<Elem = E>>(&self, field: &F, divisor: &Self) -> Self {
        self.divrem(field, divisor).1
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic<F: FiniteField<Elem = E>>(&self, field: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => self.scale(field, &field.inv(lead).unwrap()),
        }
    }

    pub fn eval<F: FiniteField<Elem = E>>(&self, field: &F, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }
}

/// Monic gcd by the Euclidean algorithm. `gcd(f, 0)` is `f` made monic.
pub fn poly_gcd<F: FiniteField>(
    field: &F,
    f: &Poly<F::Elem>,
    g: &Poly<F::Elem>,
) -> Result<Poly<F::Elem>> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(field, &b);
        a = b;
        b = r;
    }
    Ok(a.monic(field))
}

fn pow_mod<F: FiniteField>(
    field: &F,
    base: &Poly<F::Elem>,
    mut exp: u64,
    modulus: &Poly<F::Elem>,
) -> Poly<F::Elem> {
    let mut acc = Poly::one(field).rem(field, modulus);
    let mut base = base.rem(field, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.mul(field, &base).rem(field, modulus);
        }
        exp >>= 1;
        if exp > 0 {
            base = base.mul(field, &base).rem(field, modulus);
        }
    }
    acc
}

/// `x^exp mod modulus`.
pub fn x_pow_mod<F: FiniteField>(field: &F, exp: u64, modulus: &Poly<F::Elem>) -> Poly<F::Elem> {
    pow_mod(field, &Poly::x(field), exp, modulus)
}

/// Irreducibility of a monic `f` of degree `k >= 1` over a field of size Q:
/// `x^{Q^k} ≡ x (mod f)` and `gcd(x^{Q^{k/l}} - x, f) = 1` for every prime
/// `l | k`.
pub fn is_irreducible<F: FiniteField>(field: &F, f: &Poly<F::Elem>) -> bool {
    let Some(k) = f.degree() else {
        return false;
    };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let order = field.order();
    let x = Poly::x(field).rem(field, f);
    // frob[j] = x^{Q^j} mod f
    let mut frob = Vec::with_capacity(k + 1);
    frob.push(x.clone());
    for j in 1..=k {
        let next = pow_mod(field, &frob[j - 1], order, f);
        frob.push(next);
    }
    if frob[k] != x {
        return false;
    }
    numtheory::factorize(k as u64).into_iter().all(|(l, _)| {
        let h = frob[k / l as usize].sub(field, &x);
        match poly_gcd(field, &h, f) {
            Ok(g) => g.degree() == Some(0),
            Err(_) => false,
        }
    })
}

/// Monic irreducibles of the given degree, in scan order.
///
/// The candidate `x^deg + c_{deg-1} x^{deg-1} + ... + c_0` is visited in
/// increasing order of the integer `Σ index(c_i)·Q^i`, so `c_0` varies
/// fastest.
pub fn irreducibles<F: FiniteField>(
    field: &F,
    degree: usize,
) -> impl Iterator<Item = Poly<F::Elem>> + '_ {
    assert!(degree >= 1, "irreducible degree must be positive");
    let order = field.order();
    let mut digits = vec![0u64; degree];
    let mut exhausted = false;
    std::iter::from_fn(move || {
        if exhausted {
            return None;
        }
        let mut coeffs: Vec<F::Elem> = digits.iter().map(|&i| field.element(i)).collect();
        coeffs.push(field.one());
        // advance the counter
        exhausted = true;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < order {
                exhausted = false;
                break;
            }
            *d = 0;
        }
        Some(Poly::new(field, coeffs))
    })
    .filter(move |f| is_irreducible(field, f))
}

/// First monic irreducible of the given degree in scan order.
pub fn find_irreducible<F: FiniteField>(field: &F, degree: usize) -> Poly<F::Elem> {
    irreducibles(field, degree)
        .next()
        .expect("irreducibles exist in every degree")
}

/// `g_α(x) = Σ_{i<n} α^{q^i} x^{n-1-i}`.
pub fn g_alpha<F: ExtensionField>(field: &F, alpha: &F::Elem) -> Poly<F::Elem> {
    let n = field.degree() as usize;
    let mut coeffs = vec![field.zero(); n];
    let mut conj = alpha.clone();
    for i in 0..n {
        coeffs[n - 1 - i] = conj.clone();
        conj = field.frobenius(&conj);
    }
    Poly::new(field, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{BaseField, PrimeField};

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn poly(field: &PrimeField, c: &[u32]) -> Poly<u32> {
        Poly::new(field, c.to_vec())
    }

    #[test]
    fn trimming_and_degree() {
        let f = f2();
        assert_eq!(poly(&f, &[1, 0, 0]).degree(), Some(0));
        assert_eq!(poly(&f, &[0, 0]).degree(), None);
        assert!(poly(&f, &[0]).is_zero());
    }

    #[test]
    fn divrem_identity() {
        let f = PrimeField::new(5).unwrap();
        let a = poly(&f, &[3, 1, 4, 1, 2]);
        let b = poly(&f, &[2, 0, 3]);
        let (quot, rem) = a.divrem(&f, &b);
        assert!(rem.degree().unwrap_or(0) < 2);
        assert_eq!(quot.mul(&f, &b).add(&f, &rem), a);
    }

    #[test]
    fn irreducible_search() {
        let f = f2();
        assert_eq!(find_irreducible(&f, 1), poly(&f, &[0, 1]));
        assert_eq!(find_irreducible(&f, 2), poly(&f, &[1, 1, 1]));
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(find_irreducible(&f3, 2), poly(&f3, &[1, 0, 1]));
        // 1, 2, 3 and 6 irreducible monics of degrees 2, 3, 4 and 5 over F_2
        assert_eq!(irreducibles(&f, 2).count(), 1);
        assert_eq!(irreducibles(&f, 3).count(), 2);
        assert_eq!(irreducibles(&f, 4).count(), 3);
        assert_eq!(irreducibles(&f, 5).count(), 6);
    }

    #[test]
    fn irreducibility() {
        let f = f2();
        assert!(is_irreducible(&f, &poly(&f, &[1, 1, 1])));
        assert!(!is_irreducible(&f, &poly(&f, &[1, 0, 1])));
        let f5 = PrimeField::new(5).unwrap();
        assert!(is_irreducible(&f5, &poly(&f5, &[0, 1])));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(!is_irreducible(&f, &poly(&f, &[1, 0, 1, 0, 1])));
        assert!(is_irreducible(&f, &poly(&f, &[1, 1, 0, 0, 1])));
    }

    #[test]
    fn irreducible_over_extension() {
        // x^2 + x + u is irreducible over F_4 = F_2[u]/(u^2+u+1)
        let f4 = BaseField::new(4).unwrap();
        assert!(is_irreducible(&f4, &Poly::new(&f4, vec![2, 1, 1])));
        // x^2 + x + 1 splits over F_4
        assert!(!is_irreducible(&f4, &Poly::new(&f4, vec![1, 1, 1])));
    }

    #[test]
    fn gcd_examples() {
        let f = f2();
        let g = poly_gcd(&f, &poly(&f, &[1, 0, 1]), &poly(&f, &[1, 1])).unwrap();
        assert_eq!(g, poly(&f, &[1, 1]));
        let g = poly_gcd(&f, &poly(&f, &[1, 1, 0, 1]), &Poly::one(&f)).unwrap();
        assert_eq!(g, Poly::one(&f));
        let f7 = PrimeField::new(7).unwrap();
        let g = poly_gcd(&f7, &poly(&f7, &[3, 0, 2]), &Poly::zero()).unwrap();
        assert_eq!(g, poly(&f7, &[5, 0, 1]));
        assert_eq!(
            poly_gcd(&f, &Poly::zero(), &Poly::zero()),
            Err(Error::BothZero)
        );
        // x^2 - 1 and x + 1 over F_4
        let f4 = BaseField::new(4).unwrap();
        let a = Poly::x_pow_minus_one(&f4, 2);
        let b = Poly::new(&f4, vec![1, 1]);
        assert_eq!(poly_gcd(&f4, &a, &b).unwrap(), b);
    }
}
