use thiserror::Error;

use crate::eisenstein::EisensteinInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input is not allowed for {0}")]
    ZeroInput(&'static str),
    #[error("{0} is divisible by 1-ω and has no primary associate")]
    NoPrimaryAssociate(EisensteinInt),
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} must be an odd prime")]
    NotOddPrime(u64),
    #[error("modulus {0} is below 2")]
    ModulusTooSmall(u64),
    #[error("{p} is not congruent to 1 mod 3")]
    NotSplit { p: u64 },
    #[error("{q} is not congruent to 2 mod 3")]
    NotInert { q: u64 },
    #[error("{p} exceeds the supported bound {limit}")]
    TooLarge { p: u64, limit: u64 },
    #[error("character order {order} does not divide p-1 = {}", .p - 1)]
    OrderDoesNotDivide { p: u64, order: u64 },
    #[error("characters are defined modulo different primes ({0} and {1})")]
    MismatchedPrime(u64, u64),
    #[error("character of order {0} is not cubic")]
    NotCubic(u64),
    #[error("trivial character not allowed here")]
    TrivialCharacter,
    #[error("product of the two characters is trivial")]
    TrivialComposition,
    #[error("modulus {0} has norm 3")]
    NormThree(EisensteinInt),
    #[error("{0} is not a prime of Z[ω]")]
    NotEisensteinPrime(EisensteinInt),
    #[error("{0} is not primary")]
    NotPrimary(EisensteinInt),
    #[error("modulus norm {0} exceeds the supported bound 2^48")]
    NormTooLarge(u128),
    #[error("moduli have equal norm {0}")]
    EqualNorms(u128),
    #[error("{alpha} is divisible by {modulus}")]
    Divisible {
        alpha: EisensteinInt,
        modulus: EisensteinInt,
    },
    #[error("negative input {0}")]
    Negative(i128),
    #[error("no representation found for {p}; this is a bug")]
    MissingRepresentation { p: u64 },
}
