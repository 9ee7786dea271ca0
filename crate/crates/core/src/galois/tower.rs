use super::{irreducibles, BaseField, ExtensionField, FiniteField, Poly};
use crate::error::{Error, Result};

/// Coefficients of an element of F_{q^n} in the basis `1, v, ..., v^{n-1}`,
/// each an element index of F_q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement(pub Vec<u32>);

/// F_{q^n} = F_q[v]/(h).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerField {
    base: BaseField,
    modulus: Poly<u32>,
    n: usize,
    order: u64,
}

impl TowerField {
    /// Tower with the first irreducibles of degree m over F_p and degree n
    /// over F_q.
    pub fn new(q: u64, n: u64) -> Result<Self> {
        Self::with_top_modulus_index(q, n, 0)
    }

    /// Like [`TowerField::new`], but the top modulus is the `index`-th
    /// irreducible of degree n in scan order.
    pub fn with_top_modulus_index(q: u64, n: u64, index: usize) -> Result<Self> {
        let base = BaseField::new(q)?;
        let order = q.checked_pow(n as u32).ok_or(Error::InputTooLarge {
            what: "q^n",
            value: q,
            bound: u64::MAX,
        })?;
        let modulus = irreducibles(&base, n as usize).nth(index).ok_or_else(|| {
            let available = irreducibles(&base, n as usize).count() as u64;
            Error::InputTooLarge {
                what: "top modulus index",
                value: index as u64,
                bound: available.saturating_sub(1),
            }
        })?;
        Ok(TowerField {
            base,
            modulus,
            n: n as usize,
            order,
        })
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    /// The defining polynomial h over F_q.
    pub fn modulus(&self) -> &Poly<u32> {
        &self.modulus
    }

    /// The class of `v`, a root of the top modulus.
    pub fn generator(&self) -> FieldElement {
        let mut c = vec![0u32; self.n];
        if self.n == 1 {
            // v ≡ -h_0 when h is linear
            c[0] = self.base.neg(&self.modulus.coeffs()[0]);
        } else {
            c[1] = 1;
        }
        FieldElement(c)
    }

    /// Image of `a ∈ F_q` under the inclusion F_q ⊂ F_{q^n}.
    pub fn embed(&self, a: u32) -> FieldElement {
        let mut c = vec![0u32; self.n];
        c[0] = a;
        FieldElement(c)
    }
}

impl FiniteField for TowerField {
    type Elem = FieldElement;

    fn order(&self) -> u64 {
        self.order
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.n])
    }

    fn one(&self) -> FieldElement {
        self.embed(1)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| self.base.add(x, y))
                .collect(),
        )
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().map(|x| self.base.neg(x)).collect())
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.n;
        let base = &self.base;
        let mut prod = vec![0u32; 2 * n - 1];
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                prod[i + j] = base.add(&prod[i + j], &base.mul(x, y));
            }
        }
        // h is monic: v^n = -(h_0 + ... + h_{n-1} v^{n-1})
        let h = self.modulus.coeffs();
        for i in (n..2 * n - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for (j, hj) in h.iter().enumerate().take(n) {
                let t = base.mul(&c, hj);
                prod[i - n + j] = base.sub(&prod[i - n + j], &t);
            }
        }
        prod.truncate(n);
        FieldElement(prod)
    }

    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        (!self.is_zero(a)).then(|| self.pow(a, self.order - 2))
    }

    fn element(&self, mut index: u64) -> FieldElement {
        let q = self.base.order();
        let mut c = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            c.push((index % q) as u32);
            index /= q;
        }
        FieldElement(c)
    }

    fn index_of(&self, a: &FieldElement) -> u64 {
        let q = self.base.order();
        a.0.iter().rev().fold(0, |acc, &c| acc * q + c as u64)
    }
}

impl ExtensionField for TowerField {
    fn base_order(&self) -> u64 {
        self.base.order()
    }

    fn degree(&self) -> u64 {
        self.n as u64
    }
}
