use thiserror::Error;

/// Structural errors: malformed tables, bad indices, unmet preconditions.
/// Axiom violations are not errors; they are reported as [`crate::Verdict::Fail`].
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("index {index} out of range; carrier has {len} elements")]
    Index { index: usize, len: usize },
    #[error("not a free base: {0}")]
    NotFree(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub(crate) fn check_table(
    name: &str,
    table: &[Vec<usize>],
    rows: usize,
    cols: usize,
    range: usize,
) -> Result<(), CoreError> {
    if table.len() != rows {
        return Err(CoreError::Shape(format!(
            "{name}: expected {rows} rows, found {}",
            table.len()
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != cols {
            return Err(CoreError::Shape(format!(
                "{name}: row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (j, &e) in row.iter().enumerate() {
            if e >= range {
                return Err(CoreError::Shape(format!(
                    "{name}[{i}][{j}] = {e} is not an index below {range}"
                )));
            }
        }
    }
    Ok(())
}

pub(crate) fn check_index(index: usize, len: usize) -> Result<(), CoreError> {
    if index >= len {
        return Err(CoreError::Index { index, len });
    }
    Ok(())
}
