use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: expected an odd prime between 3 and 13")]
    InvalidModulus(u32),
    #[error("invalid field characteristic {0}: expected a prime below 65536")]
    InvalidField(u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(u32, u32),
    #[error("entry {value} out of range for modulus {modulus}")]
    EntryOutOfRange { value: u32, modulus: u32 },
    #[error("invalid commutator form: {0}")]
    InvalidForm(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("subspace is not liftable")]
    NotLiftable,
    #[error("map is not surjective: rank {rank}, target dimension {target}")]
    NotSurjective { rank: usize, target: usize },
    #[error("I is not contained in D")]
    NotNested,
    #[error("perturbation is not symmetric")]
    NotSymmetric,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
