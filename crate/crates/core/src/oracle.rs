//! Ground truth that does not go through the counting formulas.
//!
//! * [`brute_force_distribution`] classifies every element of F_{q^n} by the
//!   degree of `gcd(x^n - 1, g_α(x))` over F_{q^n}.
//! * [`cyclotomic_cosets`] gives the factor degrees of `x^{n_0} - 1` as orbit
//!   sizes of multiplication by q on Z/n_0.

use std::ops::Range;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::counting::Distribution;
use crate::error::{Error, Result};
use crate::galois::{g_alpha, poly_gcd, ExtensionField, LogField, Poly, TowerField};
use crate::spectrum::{self, DegreePattern};

/// Default bound on `q^n` for brute force.
pub const DEFAULT_MAX_BRUTE: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceOptions {
    /// Refuse instances with more elements than this.
    pub max_elements: u64,
    /// Which irreducible (in scan order) defines F_{q^n} over F_q.
    pub modulus_index: usize,
    /// Number of threads; 1 runs on the calling thread.
    pub workers: usize,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            max_elements: DEFAULT_MAX_BRUTE,
            modulus_index: 0,
            workers: 1,
        }
    }
}

pub fn brute_force_distribution(q: u64, n: u64) -> Result<Distribution> {
    brute_force_distribution_with(q, n, &BruteForceOptions::default())
}

pub fn brute_force_distribution_with(
    q: u64,
    n: u64,
    opts: &BruteForceOptions,
) -> Result<Distribution> {
    spectrum::derive_params(q, n)?;
    check_feasible(q, n, opts.max_elements)?;
    let tower = TowerField::with_top_modulus_index(q, n, opts.modulus_index)?;
    let field = LogField::from_tower(&tower)?;
    Ok(classify_parallel(&field, opts.workers))
}

/// Fails with `InstanceTooLarge` when `q^n` exceeds `max_elements`.
pub fn check_feasible(q: u64, n: u64, max_elements: u64) -> Result<()> {
    let size = BigUint::from(q).pow(n as u32);
    if size > BigUint::from(max_elements) {
        return Err(Error::InstanceTooLarge {
            q,
            n,
            size: size.to_string(),
            bound: max_elements,
        });
    }
    Ok(())
}

/// Degree of `gcd(x^n - 1, g_α)` over the field itself.
pub fn gcd_degree<F: ExtensionField>(field: &F, modulus: &Poly<F::Elem>, alpha: &F::Elem) -> usize {
    let g = g_alpha(field, alpha);
    poly_gcd(field, modulus, &g)
        .expect("x^n - 1 is nonzero")
        .degree()
        .expect("gcd of a nonzero polynomial is nonzero")
}

/// Tally of gcd degrees over the elements with the given indices.
pub fn tally_range<F: ExtensionField>(field: &F, range: Range<u64>) -> Vec<u64> {
    let n = field.degree() as usize;
    let modulus = Poly::x_pow_minus_one(field, n);
    let mut tally = vec![0u64; n + 1];
    for i in range {
        tally[gcd_degree(field, &modulus, &field.element(i))] += 1;
    }
    tally
}

/// Classifies every element of `field`, sequentially.
pub fn classify<F: ExtensionField>(field: &F) -> Distribution {
    to_distribution(field, tally_range(field, 0..field.order()))
}

/// Classifies every element, splitting the index range across `workers`
/// threads. The merged tally equals the sequential one.
pub fn classify_parallel<F: ExtensionField + Sync>(field: &F, workers: usize) -> Distribution {
    let order = field.order();
    let workers = (workers.max(1) as u64).min(order);
    if workers == 1 {
        return classify(field);
    }
    let chunk = order.div_ceil(workers);
    let tallies: Vec<Vec<u64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let range = (w * chunk).min(order)..((w + 1) * chunk).min(order);
                scope.spawn(move || tally_range(field, range))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut merged = vec![0u64; field.degree() as usize + 1];
    for t in tallies {
        for (m, x) in merged.iter_mut().zip(t) {
            *m += x;
        }
    }
    to_distribution(field, merged)
}

fn to_distribution<F: ExtensionField>(field: &F, tally: Vec<u64>) -> Distribution {
    Distribution {
        q: field.base_order(),
        n: field.degree(),
        counts: tally.into_iter().map(BigUint::from).collect(),
    }
}

/// Sizes of the orbits of `x -> q·x` on `{0, ..., n0 - 1}`, ascending.
pub fn cyclotomic_cosets(q: u64, n0: u64) -> Result<Vec<u64>> {
    assert!(n0 >= 1, "cyclotomic_cosets: n0 must be positive");
    if q.gcd(&n0) != 1 {
        return Err(Error::NotCoprime { a: q, modulus: n0 });
    }
    let qm = (q % n0) as u128;
    let mut seen = vec![false; n0 as usize];
    let mut sizes = Vec::new();
    for start in 0..n0 {
        if seen[start as usize] {
            continue;
        }
        let mut size = 0;
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            size += 1;
            x = ((x as u128 * qm) % n0 as u128) as u64;
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    Ok(sizes)
}

/// Coset sizes of q on `Z/n_0` as a degree pattern.
pub fn coset_pattern(q: u64, n: u64) -> Result<DegreePattern> {
    let params = spectrum::derive_params(q, n)?;
    Ok(DegreePattern::from_degrees(cyclotomic_cosets(
        q, params.n0,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets() {
        assert_eq!(cyclotomic_cosets(2, 5).unwrap(), vec![1, 4]);
        assert_eq!(cyclotomic_cosets(2, 7).unwrap(), vec![1, 3, 3]);
        assert_eq!(cyclotomic_cosets(27, 11).unwrap(), vec![1, 5, 5]);
        assert_eq!(cyclotomic_cosets(9, 1).unwrap(), vec![1]);
        assert_eq!(
            cyclotomic_cosets(3, 6),
            Err(Error::NotCoprime { a: 3, modulus: 6 })
        );
    }

    #[test]
    fn small_brute_force() {
        let d = brute_force_distribution(2, 3).unwrap();
        assert_eq!(d.to_u64s().unwrap(), vec![3, 3, 1, 1]);
        let d = brute_force_distribution(2, 2).unwrap();
        assert_eq!(d.to_u64s().unwrap(), vec![2, 1, 1]);
        let d = brute_force_distribution(2, 5).unwrap();
        assert_eq!(d.counts[0], BigUint::from(15u32));
    }

    #[test]
    fn log_field_and_tower_agree() {
        for (q, n) in [(2, 4), (3, 3), (4, 2), (5, 2), (2, 6)] {
            let tower = TowerField::new(q, n).unwrap();
            let logs = LogField::from_tower(&tower).unwrap();
            assert_eq!(classify(&tower), classify(&logs), "q={q} n={n}");
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let tower = TowerField::new(3, 5).unwrap();
        let logs = LogField::from_tower(&tower).unwrap();
        assert_eq!(classify_parallel(&logs, 4), classify(&logs));
        assert_eq!(classify_parallel(&logs, 1000), classify(&logs));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            brute_force_distribution(2, 30),
            Err(Error::InstanceTooLarge { .. })
        ));
        assert!(check_feasible(2, 22, DEFAULT_MAX_BRUTE).is_ok());
    }
}
