use super::{ExtensionField, FiniteField, TowerField};
use crate::error::{Error, Result};
use crate::numtheory;

const ZERO: u32 = u32::MAX;

/// A tower field re-encoded by discrete logarithms to a primitive element.
///
/// Nonzero elements are stored as their logarithm, zero as a sentinel.
/// Multiplication adds logarithms and addition goes through the Zech table
/// `log(1 + g^j)`, so every operation is O(1). The enumeration index of an
/// element is the same as in the tower it was built from.
#[derive(Debug, Clone)]
pub struct LogField {
    q: u64,
    n: u64,
    p: u64,
    /// `order - 1`
    cycle: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    minus_one: u32,
}

impl LogField {
    /// Builds the tables from `tower`; costs O(order) tower multiplications.
    pub fn from_tower(tower: &TowerField) -> Result<Self> {
        let order = tower.order();
        if order > ZERO as u64 {
            return Err(Error::InputTooLarge {
                what: "field order for log tables",
                value: order,
                bound: ZERO as u64,
            });
        }
        let cycle = order - 1;
        let primes: Vec<u64> = numtheory::factorize(cycle)
            .into_iter()
            .map(|(l, _)| l)
            .collect();
        let one = tower.one();
        let generator = (1..order)
            .map(|i| tower.element(i))
            .find(|g| primes.iter().all(|&l| tower.pow(g, cycle / l) != one))
            .ok_or_else(|| Error::InternalInconsistency("no primitive element".into()))?;

        let mut exp = Vec::with_capacity(cycle as usize);
        let mut log = vec![ZERO; order as usize];
        let mut cur = one.clone();
        for i in 0..cycle {
            let idx = tower.index_of(&cur);
            if log[idx as usize] != ZERO {
                return Err(Error::InternalInconsistency(format!(
                    "generator power {i} repeats"
                )));
            }
            exp.push(idx as u32);
            log[idx as usize] = i as u32;
            cur = tower.mul(&cur, &generator);
        }

        // adding 1 bumps the lowest base-p digit of the index
        let p = tower.characteristic();
        let zech = exp
            .iter()
            .map(|&idx| {
                let idx = idx as u64;
                let low = idx % p;
                let bumped = idx - low + (low + 1) % p;
                if bumped == 0 {
                    ZERO
                } else {
                    log[bumped as usize]
                }
            })
            .collect();

        let minus_one = if p == 2 { 0 } else { (cycle / 2) as u32 };
        Ok(LogField {
            q: tower.base_order(),
            n: tower.degree(),
            p,
            cycle: cycle as u32,
            exp,
            log,
            zech,
            minus_one,
        })
    }

    #[inline]
    fn add_logs(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.cycle as u64) as u32
    }

    /// The logarithm of a nonzero element.
    pub fn log_of(&self, a: &u32) -> Option<u32> {
        (*a != ZERO).then_some(*a)
    }
}

impl FiniteField for LogField {
    type Elem = u32;

    fn order(&self) -> u64 {
        self.cycle as u64 + 1
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> u32 {
        ZERO
    }

    fn one(&self) -> u32 {
        0
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let (a, b) = (*a, *b);
        if a == ZERO {
            return b;
        }
        if b == ZERO {
            return a;
        }
        // g^a + g^b = g^a (1 + g^{b-a})
        let diff = if b >= a { b - a } else { b + self.cycle - a };
        let z = self.zech[diff as usize];
        if z == ZERO {
            ZERO
        } else {
            self.add_logs(a, z)
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == ZERO {
            ZERO
        } else {
            self.add_logs(*a, self.minus_one)
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == ZERO || *b == ZERO {
            ZERO
        } else {
            self.add_logs(*a, *b)
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        match *a {
            ZERO => None,
            0 => Some(0),
            l => Some(self.cycle - l),
        }
    }

    fn element(&self, index: u64) -> u32 {
        self.log[index as usize]
    }

    fn index_of(&self, a: &u32) -> u64 {
        if *a == ZERO {
            0
        } else {
            self.exp[*a as usize] as u64
        }
    }

    fn pow(&self, a: &u32, exp: u64) -> u32 {
        match *a {
            ZERO if exp == 0 => 0,
            ZERO => ZERO,
            l => ((l as u64 * (exp % self.cycle as u64)) % self.cycle as u64) as u32,
        }
    }
}

impl ExtensionField for LogField {
    fn base_order(&self) -> u64 {
        self.q
    }

    fn degree(&self) -> u64 {
        self.n
    }

    fn frobenius_iterate(&self, a: &u32, i: u64) -> u32 {
        let mut e = 1u64;
        for _ in 0..i {
            e = e * self.q % self.cycle as u64;
        }
        self.pow(a, e)
    }
}
