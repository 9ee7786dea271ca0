//! Cross-checks against independent computations and algebraic properties.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

use knormal::counting::{self, Extension, DEFAULT_ENUM_BOUND};
use knormal::galois::{
    find_irreducible, irreducibles, is_irreducible, poly_gcd, BaseField, ExtensionField,
    FiniteField, Poly, PrimeField, TowerField,
};
use knormal::numtheory::{self, divisors, euler_phi, moebius};
use knormal::oracle;
use knormal::spectrum::{self, DegreePattern};

const PRIME_POWERS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27];

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

// ---------------------------------------------------------------------------
// numtheory
// ---------------------------------------------------------------------------

fn naive_order(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut d = 1;
    while x != 1 % m {
        x = x * a % m;
        d += 1;
    }
    d
}

#[test]
fn order_examples_by_brute_force() {
    assert_eq!(naive_order(2, 5), 4);
    assert_eq!(naive_order(27, 11), 5);
    assert_eq!(numtheory::multiplicative_order(2, 5).unwrap(), 4);
    assert_eq!(numtheory::multiplicative_order(27, 11).unwrap(), 5);
}

#[test]
fn moebius_and_phi_divisor_sums() {
    for x in 1..=10_000u64 {
        let divs = divisors(x);
        let mu: i64 = divs.iter().map(|&d| moebius(d) as i64).sum();
        assert_eq!(mu, (x == 1) as i64, "Σ μ(d) for x = {x}");
        let phi: u64 = divs.iter().map(|&d| euler_phi(d)).sum();
        assert_eq!(phi, x, "Σ φ(d) for x = {x}");
    }
}

#[test]
fn divisors_match_filter() {
    for x in 1..=600u64 {
        let naive: Vec<u64> = (1..=x).filter(|d| x % d == 0).collect();
        assert_eq!(divisors(x), naive);
    }
}

#[test]
fn euler_phi_matches_count() {
    for x in 1..=500u64 {
        let naive = (1..=x).filter(|&j| num_integer::gcd(j, x) == 1).count() as u64;
        assert_eq!(euler_phi(x), naive);
    }
}

proptest! {
    #[test]
    fn prime_power_round_trip(idx in 0usize..8, m in 1u32..12) {
        let p = [2u64, 3, 5, 7, 11, 13, 31, 101][idx];
        let x = p.checked_pow(m);
        prop_assume!(x.is_some());
        let x = x.unwrap();
        prop_assert_eq!(numtheory::prime_power_decompose(x).unwrap(), (p, m));
    }

    #[test]
    fn order_divides_phi_and_matches_naive(a in 1u64..2000, m in 1u64..800) {
        prop_assume!(num_integer::gcd(a, m) == 1);
        let d = numtheory::multiplicative_order(a, m).unwrap();
        prop_assert_eq!(euler_phi(m) % d, 0);
        prop_assert_eq!(d, naive_order(a, m));
    }

    #[test]
    fn t_r_divides_t_rs(qi in 0usize..10, r in 1u64..12, s in 1u64..6, n in 1u64..5000) {
        let q = big(PRIME_POWERS[qi]);
        let tr = numtheory::gcd_qr_minus_one(&q, r, n);
        let trs = numtheory::gcd_qr_minus_one(&q, r * s, n);
        prop_assert_eq!(trs % tr, 0);
    }

    #[test]
    fn t_r_matches_direct_gcd(qi in 0usize..10, r in 1u32..8, n in 1u64..3000) {
        let q = PRIME_POWERS[qi];
        let direct = num_integer::gcd(big(q).pow(r) - BigUint::one(), big(n));
        prop_assert_eq!(big(numtheory::gcd_qr_minus_one(&big(q), r as u64, n)), direct);
    }
}

// ---------------------------------------------------------------------------
// spectrum vs cyclotomic cosets
// ---------------------------------------------------------------------------

#[test]
fn degree_pattern_matches_cosets() {
    for q in [
        2u64, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49, 64, 81, 121, 125,
    ] {
        for n in 1..=200u64 {
            let params = spectrum::derive_params(q, n).unwrap();
            let pattern = spectrum::degree_pattern(&params).unwrap();
            let cosets = oracle::cyclotomic_cosets(q, params.n0).unwrap();
            assert_eq!(cosets.iter().sum::<u64>(), params.n0);
            assert!(cosets.iter().all(|&c| params.d.is_multiple_of(c)));
            assert_eq!(pattern, DegreePattern::from_degrees(cosets), "q={q} n={n}");
            assert_eq!(pattern.total_degree(), params.n0);
            assert_eq!(spectrum::omega(&params), pattern.factor_count());
            assert_eq!(pattern.v(1), num_integer::gcd(q - 1, n));
        }
    }
}

#[test]
fn order_examples() {
    let p = spectrum::derive_params(27, 11).unwrap();
    assert_eq!(p.d, naive_order(27, 11));
}

// ---------------------------------------------------------------------------
// counting: three routes
// ---------------------------------------------------------------------------

/// `Φ_q(h)` by counting residues coprime to `h`.
fn phi_by_count(field: &BaseField, h: &Poly<u32>) -> u64 {
    let deg = h.degree().unwrap();
    let q = field.order();
    (0..q.pow(deg as u32))
        .filter(|&idx| {
            let mut c = Vec::with_capacity(deg);
            let mut x = idx;
            for _ in 0..deg {
                c.push(field.element(x % q));
                x /= q;
            }
            let g = Poly::new(field, c);
            poly_gcd(field, h, &g).unwrap().degree() == Some(0)
        })
        .count() as u64
}

/// `Σ Φ_q(h)` over explicitly enumerated monic divisors `h` of degree `n - k`.
fn divisor_sum_count(q: u64, n: u64, k: u64) -> u64 {
    let field = BaseField::new(q).unwrap();
    let f = Poly::x_pow_minus_one(&field, n as usize);
    let deg = (n - k) as usize;
    let mut total = 0;
    for idx in 0..q.pow(deg as u32) {
        let mut c = Vec::with_capacity(deg + 1);
        let mut x = idx;
        for _ in 0..deg {
            c.push(field.element(x % q));
            x /= q;
        }
        c.push(field.one());
        let h = Poly::new(&field, c);
        if f.rem(&field, &h).is_zero() {
            total += phi_by_count(&field, &h);
        }
    }
    total
}

#[test]
fn divisor_sum_route_small_fields() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for n in 1..=8u64 {
            if q.pow(n as u32) > 1 << 12 {
                break;
            }
            for k in 0..=n {
                let formula = counting::count_k_normal(q, n, k).unwrap();
                assert_eq!(
                    formula,
                    big(divisor_sum_count(q, n, k)),
                    "q={q} n={n} k={k}"
                );
            }
        }
    }
}

#[test]
fn small_hand_examples() {
    assert_eq!(divisor_sum_count(2, 3, 1), 3);
    assert_eq!(divisor_sum_count(2, 4, 2), 2);
    assert_eq!(counting::count_k_normal_enum(2, 4, 2).unwrap(), big(2));
    assert_eq!(counting::closed_form_n1(2, 2).unwrap(), big(1));
    assert_eq!(counting::closed_form_n2(2, 4).unwrap(), big(2));
}

#[test]
fn series_matches_enumeration_and_binomial() {
    let mut compared = 0;
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49] {
        for n in 1..=36u64 {
            let ext = Extension::new(q, n).unwrap();
            let dist = ext.distribution();
            for k in 0..=n {
                let series = &dist.counts[k as usize];
                assert_eq!(series, &ext.count_k_normal(k).unwrap());
                if let Ok(enumerated) = ext.count_k_normal_enum(k, DEFAULT_ENUM_BOUND) {
                    assert_eq!(series, &enumerated, "enum q={q} n={n} k={k}");
                    compared += 1;
                }
                if ext.params.is_coprime() {
                    assert_eq!(
                        series,
                        &ext.count_k_normal_coprime(k).unwrap(),
                        "binomial q={q} n={n} k={k}"
                    );
                }
            }
            assert_eq!(ext.count_normal(), dist.counts[0]);
        }
    }
    assert!(compared > 1000, "only {compared} enumeration comparisons");
}

#[test]
fn closed_forms_hit_every_branch() {
    use counting::ClosedFormBranch::*;
    let cases = [
        (5u64, 6u64, Coprime),
        (2, 6, PsTwo),
        (3, 6, PsThree),
        (2, 8, PsAboveThree),
        (3, 18, PsAboveThree),
        (5, 10, PsAboveThree),
        (9, 9, PsAboveThree),
    ];
    for (q, n, branch) in cases {
        let ext = Extension::new(q, n).unwrap();
        assert_eq!(counting::ClosedFormBranch::of(&ext.params), branch);
        let dist = ext.distribution();
        assert_eq!(ext.closed_form_n1().unwrap(), dist.counts[1]);
        assert_eq!(ext.closed_form_n2().unwrap(), dist.counts[2]);
        assert_eq!(ext.closed_form_n3().unwrap(), dist.counts[3]);
    }
}

/// Degrees `Σ r·α` reachable with `0 <= α <= p^s` per factor.
fn reachable_degrees(ext: &Extension) -> Vec<bool> {
    let n = ext.n() as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for (r, v) in ext.pattern.iter() {
        for _ in 0..v {
            let prev = reach.clone();
            for (deg, _) in prev.iter().enumerate().filter(|(_, &ok)| ok) {
                for a in 1..=ext.params.p_s() as usize {
                    let target = deg + r as usize * a;
                    if target <= n {
                        reach[target] = true;
                    }
                }
            }
        }
    }
    reach
}

#[test]
fn support_matches_reachable_degrees_and_brute_force() {
    for q in PRIME_POWERS {
        for n in 1..=14u64 {
            if big(q).pow(n as u32) > big(1 << 14) {
                break;
            }
            let ext = Extension::new(q, n).unwrap();
            let dist = ext.distribution();
            let brute = oracle::brute_force_distribution(q, n).unwrap();
            let reach = reachable_degrees(&ext);
            for k in 0..=n as usize {
                let positive = !dist.counts[k].is_zero();
                assert_eq!(positive, reach[n as usize - k], "q={q} n={n} k={k}");
                assert_eq!(positive, !brute.counts[k].is_zero());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// galois
// ---------------------------------------------------------------------------

/// Irreducible iff no monic factor of degree 1..=deg/2, by trial division.
fn irreducible_by_trial_division<F: FiniteField<Elem = u32>>(field: &F, f: &Poly<u32>) -> bool {
    let deg = f.degree().unwrap();
    let q = field.order();
    for d in 1..=deg / 2 {
        for idx in 0..q.pow(d as u32) {
            let mut c = Vec::new();
            let mut x = idx;
            for _ in 0..d {
                c.push(field.element(x % q));
                x /= q;
            }
            c.push(field.one());
            if f.rem(field, &Poly::new(field, c)).is_zero() {
                return false;
            }
        }
    }
    deg >= 1
}

fn all_monic<F: FiniteField<Elem = u32>>(field: &F, deg: usize) -> Vec<Poly<u32>> {
    let q = field.order();
    (0..q.pow(deg as u32))
        .map(|idx| {
            let mut c = Vec::new();
            let mut x = idx;
            for _ in 0..deg {
                c.push(field.element(x % q));
                x /= q;
            }
            c.push(field.one());
            Poly::new(field, c)
        })
        .collect()
}

#[test]
fn irreducibility_matches_trial_division() {
    for p in [2u64, 3, 5] {
        let field = PrimeField::new(p).unwrap();
        for deg in 1..=5 {
            if p.pow(deg as u32) > 4000 {
                break;
            }
            let polys = all_monic(&field, deg);
            for f in &polys {
                assert_eq!(
                    is_irreducible(&field, f),
                    irreducible_by_trial_division(&field, f),
                    "{f:?}"
                );
            }
            let first = polys
                .iter()
                .find(|f| irreducible_by_trial_division(&field, f))
                .unwrap();
            assert_eq!(&find_irreducible(&field, deg), first);
        }
    }
    for q in [4u64, 9] {
        let field = BaseField::new(q).unwrap();
        for deg in 1..=3 {
            let polys = all_monic(&field, deg);
            let expected: Vec<_> = polys
                .iter()
                .filter(|f| irreducible_by_trial_division(&field, f))
                .cloned()
                .collect();
            let found: Vec<_> = irreducibles(&field, deg).collect();
            assert_eq!(found, expected, "q={q} deg={deg}");
        }
    }
}

#[test]
fn irreducible_search_is_reproducible() {
    for (q, n) in [(2u64, 8u64), (3, 5), (4, 4), (25, 2), (27, 3)] {
        let a = TowerField::new(q, n).unwrap();
        let b = TowerField::new(q, n).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert!(is_irreducible(a.base(), a.modulus()));
        assert!(is_irreducible(a.base().prime_field(), a.base().modulus()));
    }
}

fn tower_and_index() -> impl Strategy<Value = ((u64, u64), u64, u64, u64)> {
    prop::sample::select(vec![
        (2u64, 5u64),
        (3, 3),
        (4, 3),
        (5, 2),
        (8, 2),
        (9, 2),
        (16, 2),
        (25, 2),
        (27, 2),
        (2, 1),
    ])
    .prop_flat_map(|(q, n)| {
        let order = q.pow(n as u32);
        (Just((q, n)), 0..order, 0..order, 0..order)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tower_field_axioms(((q, n), i, j, l) in tower_and_index()) {
        let f = TowerField::new(q, n).unwrap();
        let (a, b, c) = (f.element(i), f.element(j), f.element(l));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        if let Some(inv) = f.inv(&a) {
            prop_assert_eq!(f.mul(&a, &inv), f.one());
        } else {
            prop_assert_eq!(i, 0);
        }
    }

    #[test]
    fn base_field_axioms(qi in 0usize..10, i in 0u64..1024, j in 0u64..1024, l in 0u64..1024) {
        let q = PRIME_POWERS[qi];
        let f = BaseField::new(q).unwrap();
        let (a, b, c) = (f.element(i % q), f.element(j % q), f.element(l % q));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        if a != 0 {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism(((q, n), i, j, _l) in tower_and_index()) {
        let f = TowerField::new(q, n).unwrap();
        let (a, b) = (f.element(i), f.element(j));
        prop_assert_eq!(f.frobenius(&f.add(&a, &b)), f.add(&f.frobenius(&a), &f.frobenius(&b)));
        prop_assert_eq!(f.frobenius(&f.mul(&a, &b)), f.mul(&f.frobenius(&a), &f.frobenius(&b)));
        prop_assert_eq!(f.frobenius_iterate(&a, n), a.clone());
        // F_q is fixed
        let e = f.embed((i % q) as u32);
        prop_assert_eq!(f.frobenius_iterate(&e, 1), e);
    }

    #[test]
    fn gcd_divides_both(((q, n), i, j, l) in tower_and_index()) {
        let field = TowerField::new(q, n).unwrap();
        let order = field.order();
        let coeffs = |seed: u64| -> Vec<_> {
            (0..4).map(|t| field.element((seed.wrapping_mul(2654435761).wrapping_add(t * 40503)) % order)).collect()
        };
        let common = Poly::new(&field, coeffs(l));
        let f = Poly::new(&field, coeffs(i)).mul(&field, &common);
        let g = Poly::new(&field, coeffs(j)).mul(&field, &common);
        prop_assume!(!(f.is_zero() && g.is_zero()));
        let h = poly_gcd(&field, &f, &g).unwrap();
        prop_assert_eq!(h.leading(), Some(&field.one()));
        prop_assert!(f.rem(&field, &h).is_zero());
        prop_assert!(g.rem(&field, &h).is_zero());
        if !common.is_zero() {
            prop_assert!(h.rem(&field, &common.monic(&field)).is_zero());
        }
    }
}

#[test]
fn g_alpha_examples() {
    use knormal::galois::{g_alpha, FieldElement};
    let f = TowerField::new(2, 2).unwrap();
    assert!(g_alpha(&f, &f.zero()).is_zero());
    // α = 1: x + 1
    assert_eq!(g_alpha(&f, &f.one()), Poly::new(&f, vec![f.one(), f.one()]));
    // α = ω: ωx + ω^2
    let w = f.generator();
    let w2 = FieldElement(vec![1, 1]);
    assert_eq!(g_alpha(&f, &w), Poly::new(&f, vec![w2, w]));
}

#[test]
fn brute_force_examples() {
    assert_eq!(
        oracle::brute_force_distribution(2, 3)
            .unwrap()
            .to_u64s()
            .unwrap(),
        vec![3, 3, 1, 1]
    );
    assert_eq!(
        oracle::brute_force_distribution(2, 2)
            .unwrap()
            .to_u64s()
            .unwrap(),
        vec![2, 1, 1]
    );
    assert_eq!(
        oracle::brute_force_distribution(2, 5).unwrap().counts[0],
        big(15)
    );
}
