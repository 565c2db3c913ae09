use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series is not a unit: constant coefficient is not invertible")]
    NotUnit,

    #[error("n = {n} exceeds the enumeration bound {bound}")]
    OracleBound { n: usize, bound: usize },

    #[error("n = {n} is outside the table range 0..={upto}")]
    OutOfRange { n: usize, upto: usize },

    #[error("the empty partition has no crank")]
    EmptyPartition,

    #[error("degenerate parameters: {0}")]
    DegenerateParameter(String),

    #[error("denominator {denominator} is not invertible modulo {modulus}")]
    NonInvertible { denominator: BigInt, modulus: u64 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("identity `{identity}` does not support variant `{variant}`")]
    UnsupportedVariant { identity: String, variant: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
