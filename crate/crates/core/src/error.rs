use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invariant factors {0:?} are not a divisibility chain of integers >= 2")]
    NotDivisibilityChain(Vec<u64>),
    #[error("cannot parse group descriptor `{0}`")]
    BadGroupDescriptor(String),
    #[error("invariant factor {0} does not fit in 64 bits")]
    Overflow(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("saturation produced more than {cap} elements; the monoid may be infinite")]
    CapExceeded { cap: usize },
    #[error("invalid monoid table: {0}")]
    InvalidTable(String),
    #[error("invalid presentation: {0}")]
    BadPresentation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("spectrum enumeration refused: size {size} exceeds bound {bound}")]
    SizeExceeded { size: usize, bound: usize },
    #[error("{0} is not a prime ideal of this chart")]
    NotPrime(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("incompatible gluing: {left} has stalk {left_stalk} but {right} has stalk {right_stalk}")]
    IncompatibleGluing {
        left: String,
        right: String,
        left_stalk: String,
        right_stalk: String,
    },
    #[error("identification references unknown point {0}")]
    UnknownPoint(String),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("{0} is not a prime")]
    InvalidPrime(u64),
    #[error("numeric evaluation left the finite domain: {0}")]
    NumericDomain(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KError {
    #[error("modules live over different base monoids")]
    BaseMismatch,
    #[error("map is not a pointed equivariant module map: {0}")]
    NotEquivariant(String),
    #[error("spans are not composable: {0}")]
    NotComposable(String),
    #[error("invalid span leg: {0}")]
    InvalidLeg(String),
    #[error("module of size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("no stable stem recorded for index {0}")]
    OutOfTable(u32),
    #[error("invalid module: {0}")]
    InvalidModule(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search space {space} exceeds the limit {limit}")]
    SearchSpaceExceeded { space: u128, limit: u128 },
    #[error("{gens} generators exceed the oracle bound {bound}")]
    TooManyGenerators { gens: usize, bound: usize },
    #[error("target D_{0} needs k >= 2")]
    BadTarget(u64),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}
