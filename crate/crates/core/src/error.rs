use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q must be a prime power, got {0}")]
    NotPrimePower(u64),

    #[error("{a} is not invertible modulo {modulus}")]
    NotCoprime { a: u64, modulus: u64 },

    #[error("{what} = {value} exceeds the supported bound {bound}")]
    InputTooLarge {
        what: &'static str,
        value: u64,
        bound: u64,
    },

    #[error("k = {k} is out of range for n = {n} (need 0 <= k <= n)")]
    KOutOfRange { k: u64, n: u64 },

    #[error("n = {n} is divisible by the characteristic of F_{q}; the binomial formula needs gcd(n, q) = 1")]
    NotCoprimeCase { q: u64, n: u64 },

    #[error("tuple enumeration has {size} candidates, above the limit {bound}")]
    EnumerationTooLarge { size: String, bound: u64 },

    #[error("F_{q}^{n} has {size} elements, above the oracle limit {bound}")]
    InstanceTooLarge {
        q: u64,
        n: u64,
        size: String,
        bound: u64,
    },

    #[error("gcd of two zero polynomials is undefined")]
    BothZero,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
