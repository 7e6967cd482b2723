use thiserror::Error;

/// Errors raised while validating or operating on finite B1-structures.
///
/// Element positions are reported as indices into the structure's element
/// list; witnesses are always the lexicographically first offending tuple.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("structure must have at least one element")]
    Empty,
    #[error("table is not square: expected {expected} entries in row {row}, found {found}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table entry at ({row}, {col}) is out of range: {value}")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),

    #[error("sum is not commutative: {0} + {1} != {1} + {0}")]
    NotCommutative(usize, usize),
    #[error("sum is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("sum is not idempotent: {0} + {0} != {0}")]
    NotIdempotent(usize),
    #[error("element 0 is not neutral for the sum: 0 + {0} != {0}")]
    NoBottom(usize),
    #[error("order is not decent: {0}")]
    NotDecent(String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("multiplication is not commutative: {0} * {1} != {1} * {0}")]
    MulNotCommutative(usize, usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    MulNotAssociative(usize, usize, usize),
    #[error("multiplication does not distribute over the sum at ({0}, {1}, {2})")]
    NotDistributiveLaw(usize, usize, usize),
    #[error("element 1 is not a multiplicative unit: 1 * {0} != {0}")]
    NoUnit(usize),
    #[error("zero is not absorbing: 0 * {0} != 0")]
    ZeroNotAbsorbing(usize),
    #[error("algebra must contain distinct 0 and 1")]
    ZeroEqualsOne,

    #[error("map is not a morphism: {0}")]
    NotMorphism(String),
    #[error("map is not a bijection")]
    NotBijective,
    #[error("invalid family of subsets: {0}")]
    InvalidFamily(String),
    #[error("partition is not a congruence: {0}")]
    NotCongruence(String),
    #[error("generated congruence identifies 0 and 1")]
    CollapsesZeroOne,
    #[error("size {size} exceeds the supported maximum {max}")]
    SizeTooLarge { size: usize, max: usize },
    #[error("presentation does not close within {cap} elements")]
    TooLarge { cap: usize },

    #[error("polynomials are over different variable lists")]
    VariableMismatch,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("multiplication has no unit at index {0}")]
    MonoidUnit(usize),
    #[error("subset is not a submonoid: {0}")]
    NotSubmonoid(String),
    #[error("monoid is not a group")]
    NotAGroup,

    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
