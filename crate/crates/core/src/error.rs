use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("there is no simple type {family}{rank}; allowed ranks for {family}: {allowed}")]
    InvalidType {
        family: char,
        rank: usize,
        allowed: &'static str,
    },
    #[error("unknown type string {0:?}; expected <Letter><rank> such as A3 or G2")]
    UnknownType(String),
    #[error("simple root index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("{0} is not prime; use the Smith normal form for composite moduli")]
    NotPrime(u64),
    #[error("l = {0} is not allowed: l must be odd and at least 3")]
    InvalidModulus(u64),
    #[error("Weyl group has order {order}, above the enumeration guard {guard}")]
    GuardExceeded { order: u128, guard: u128 },
    #[error("representation dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: u128, cap: u128 },
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
