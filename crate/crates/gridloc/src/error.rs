use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no valid rectangle: matrix must have at least 2 rows and 2 columns")]
    NoValidRectangle,
}
