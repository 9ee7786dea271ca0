//! Exact counts of k-normal elements of F_{q^n} over F_q.
//!
//! An element `α` of F_{q^n} is k-normal when
//! `gcd(x^n - 1, Σ_i α^{q^i} x^{n-1-i})` has degree k over F_{q^n}. This crate
//! computes the number of such elements from q and n alone (no polynomial
//! factorization), and ships an independent brute-force classifier over an
//! explicit field tower to check those counts.
//!
//! * [`numtheory`]: divisors, Möbius, Euler φ, multiplicative order.
//! * [`spectrum`]: `n = p^s n_0`, the order `d`, and the degree pattern `v_r`.
//! * [`counting`]: `N_k` by series product, tuple enumeration, the binomial
//!   formula and the closed forms for `k <= 3`.
//! * [`galois`]: tower arithmetic `F_p -> F_q -> F_{q^n}` and polynomial gcd.
//! * [`oracle`]: brute-force classification and cyclotomic cosets.
//! * [`cli`]: the `knormal` command-line front end.

pub mod cli;
pub mod counting;
pub mod error;
pub mod galois;
pub mod numtheory;
pub mod oracle;
pub mod spectrum;

pub use error::{Error, Result};
pub use numtheory::BigCount;
