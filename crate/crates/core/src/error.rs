use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} exceeds the factorization bound of 2^{bits}")]
    FactorizationLimitExceeded { value: BigUint, bits: u32 },

    #[error("{a} and {b} are not coprime (common factor {common})")]
    NotCoprime {
        a: BigUint,
        b: BigUint,
        common: BigUint,
    },

    #[error("argument must be positive")]
    ZeroArgument,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("cyclic factor at position {position} is zero")]
    ZeroFactor { position: usize },

    #[error("level {level} is out of range for a component of exponent {max}")]
    OutOfRange { level: u32, max: u32 },

    #[error("{d} is not a relevant divisor of the exponent {exponent}")]
    NotARelevantDivisor { d: BigUint, exponent: BigUint },

    #[error("group order {order} exceeds the oracle bound {bound}")]
    OracleBoundExceeded { order: BigUint, bound: u64 },

    #[error("{0} is not a prime power")]
    NotAPrimePower(BigUint),

    #[error("{0} is not prime")]
    NotPrime(BigUint),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotCoprime { .. } => 3,
            Error::OracleBoundExceeded { .. } => 4,
            Error::Invariant(_) => 1,
            _ => 2,
        }
    }
}
