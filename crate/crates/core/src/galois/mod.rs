//! Finite-field arithmetic for the brute-force oracle.
//!
//! The field F_{q^n} is built as a tower `F_p -> F_q = F_p[u]/(g) ->
//! F_{q^n} = F_q[v]/(h)`, with `g` and `h` the first monic irreducibles in a
//! fixed scan order (see [`irreducibles`]). Elements of every level are
//! indexed by their coefficient vectors read as base-p digits, lowest
//! coefficient first, which gives the enumeration order used by the oracle.
//!
//! [`LogField`] re-encodes a tower field through discrete logarithms so that
//! the per-element gcd work of the oracle runs on table lookups.

mod base;
mod logtable;
mod poly;
mod tower;

use std::fmt::Debug;

pub use base::{BaseField, PrimeField, MAX_BASE_ORDER};
pub use logtable::LogField;
pub use poly::{
    find_irreducible, g_alpha, irreducibles, is_irreducible, poly_gcd, x_pow_mod, Poly,
};
pub use tower::{FieldElement, TowerField};

pub trait FiniteField {
    type Elem: Clone + PartialEq + Eq + Debug;

    /// Number of elements.
    fn order(&self) -> u64;
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Element with the given enumeration index, `0 <= index < order`.
    fn element(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A degree-n extension of F_q, with its Frobenius map `a -> a^q`.
pub trait ExtensionField: FiniteField {
    /// q.
    fn base_order(&self) -> u64;
    /// n.
    fn degree(&self) -> u64;

    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.base_order())
    }

    /// `a^{q^i}`.
    fn frobenius_iterate(&self, a: &Self::Elem, i: u64) -> Self::Elem {
        (0..i).fold(a.clone(), |acc, _| self.frobenius(&acc))
    }
}
