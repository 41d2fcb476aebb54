//! Plain-text matrix files shared by the CLI and scripted experiments.
//!
//! A matrix file starts with a header line `field <spec>` (spec as in
//! [`Field::spec_string`]), followed by one or more matrices given as one
//! row per line of whitespace-separated element codes; blank lines separate
//! matrices. Lines starting with `#` are comments and are ignored, so tool
//! output annotated with metadata re-parses unchanged.

use std::fmt;

use crate::gf::{Field, FieldError};
use crate::matrix::{MatrixError, MatrixGF};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    MissingHeader,
    BadHeader(String),
    BadCode { line: usize, token: String },
    RaggedRows { line: usize },
    NoMatrices,
    ExpectedSingleMatrix { got: usize },
    InconsistentColumns { expected: usize, got: usize },
    Field(FieldError),
    Matrix(MatrixError),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::MissingHeader => {
                write!(f, "missing `field <spec>` header line")
            }
            FormatError::BadHeader(line) => write!(f, "malformed header line `{line}`"),
            FormatError::BadCode { line, token } => {
                write!(f, "line {line}: `{token}` is not an element code")
            }
            FormatError::RaggedRows { line } => {
                write!(f, "line {line}: row length differs from the previous rows")
            }
            FormatError::NoMatrices => write!(f, "file contains no matrices"),
            FormatError::ExpectedSingleMatrix { got } => {
                write!(f, "expected exactly one matrix, file has {got}")
            }
            FormatError::InconsistentColumns { expected, got } => {
                write!(f, "matrix has {got} columns where the file established {expected}")
            }
            FormatError::Field(e) => write!(f, "{e}"),
            FormatError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<FieldError> for FormatError {
    fn from(e: FieldError) -> Self {
        FormatError::Field(e)
    }
}

impl From<MatrixError> for FormatError {
    fn from(e: MatrixError) -> Self {
        FormatError::Matrix(e)
    }
}

/// Parses a matrix file: the field header plus every matrix in order.
pub fn parse_matrices(text: &str) -> Result<(Field, Vec<MatrixGF>), FormatError> {
    let mut lines = text.lines().enumerate();
    let field = loop {
        let Some((_, raw)) = lines.next() else {
            return Err(FormatError::MissingHeader);
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(spec) = line.strip_prefix("field ") else {
            return Err(FormatError::BadHeader(line.to_string()));
        };
        break Field::parse_spec(spec)?;
    };

    let mut matrices: Vec<MatrixGF> = Vec::new();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut cols: Option<usize> = None;
    let flush = |rows: &mut Vec<Vec<u64>>,
                     cols: &mut Option<usize>,
                     matrices: &mut Vec<MatrixGF>|
     -> Result<(), FormatError> {
        if rows.is_empty() {
            return Ok(());
        }
        let m = MatrixGF::from_rows(field.clone(), rows)?;
        match cols {
            Some(c) if *c != m.cols() => {
                return Err(FormatError::InconsistentColumns { expected: *c, got: m.cols() })
            }
            Some(_) => {}
            None => *cols = Some(m.cols()),
        }
        matrices.push(m);
        rows.clear();
        Ok(())
    };

    for (idx, raw) in lines {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            flush(&mut rows, &mut cols, &mut matrices)?;
            continue;
        }
        let mut row = Vec::new();
        for token in line.split_whitespace() {
            let code: u64 = token
                .parse()
                .map_err(|_| FormatError::BadCode { line: idx + 1, token: token.to_string() })?;
            row.push(code);
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(FormatError::RaggedRows { line: idx + 1 });
            }
        }
        rows.push(row);
    }
    flush(&mut rows, &mut cols, &mut matrices)?;

    if matrices.is_empty() {
        return Err(FormatError::NoMatrices);
    }
    Ok((field, matrices))
}

/// Parses a file that must hold exactly one matrix.
pub fn parse_single_matrix(text: &str) -> Result<(Field, MatrixGF), FormatError> {
    let (field, mut matrices) = parse_matrices(text)?;
    if matrices.len() != 1 {
        return Err(FormatError::ExpectedSingleMatrix { got: matrices.len() });
    }
    Ok((field, matrices.pop().expect("length checked")))
}

/// The row lines of one matrix (no header, no trailing newline).
pub fn matrix_block(m: &MatrixGF) -> String {
    (0..m.rows())
        .map(|r| {
            m.row(r).iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Serializes a header plus blank-line-separated matrices.
pub fn write_matrices<'a>(
    field: &Field,
    matrices: impl IntoIterator<Item = &'a MatrixGF>,
) -> String {
    let mut out = format!("field {}\n", field.spec_string());
    let mut first = true;
    for m in matrices {
        if !first {
            out.push('\n');
        }
        out.push_str(&matrix_block(m));
        out.push('\n');
        first = false;
    }
    out
}
