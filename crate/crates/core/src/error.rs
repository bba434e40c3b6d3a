use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("expected an integral matrix")]
    NonIntegral,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not a Lie lattice: {0}")]
    InvalidLattice(String),

    #[error("lattice is not nilpotent")]
    NotNilpotent,

    #[error("matrix is not a derivation: Leibniz rule fails on basis pair ({i}, {j})")]
    NotDerivation { i: usize, j: usize },

    #[error("candidate radical is not solvable")]
    NotSolvable,

    #[error("Levi complement could not be lifted at derived-series stage {0}")]
    LeviLift(usize),

    #[error("no element of the solvable part centralizes the reductive part outside the nilradical")]
    NoCentralizingElement,

    #[error("scalar search for {which} exceeded bound {bound} (offending denominators: {denominators})")]
    ScalarSearchExceeded {
        which: &'static str,
        bound: u64,
        denominators: String,
    },

    #[error("integrality violated: {0}")]
    IntegralityViolated(String),

    #[error("construction invariant violated: {0}")]
    Invariant(String),

    #[error("format error: {0}")]
    Format(String),
}
