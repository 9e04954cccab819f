use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("random embedding generation failed after {attempts} attempts")]
    GenerationFailure { attempts: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    /// The target is not congruent to `r_n` modulo `(n-5)!`.
    #[error("inadmissible target {m} for n = {n}: the Hamiltonian a2 sum of any spatial K_{n} is congruent to {residue} modulo {modulus}")]
    InadmissibleTarget {
        n: u32,
        m: String,
        residue: String,
        modulus: String,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
