use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("sample is not unitary: {0}")]
    NotUnitary(String),
    #[error("operator is not of the form {0}")]
    WrongForm(String),
    #[error("symmetry `{0}` does not normalize the algebra")]
    NotNormalizing(String),
}
