//! Square matrices stored as columns.

use crate::LinalgError;

/// An `n × n` matrix held as `n` columns of length `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    columns: Vec<Vec<T>>,
}

impl<T: Clone> SquareMatrix<T> {
    /// Builds a matrix from its columns. Order zero and ragged input are rejected.
    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let order = columns.len();
        if order == 0 {
            return Err(LinalgError::EmptyMatrix);
        }
        if let Some((index, col)) = columns.iter().enumerate().find(|(_, c)| c.len() != order) {
            return Err(LinalgError::RaggedColumn {
                column: index,
                len: col.len(),
                order,
            });
        }
        Ok(Self { columns })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let order = rows.len();
        if order == 0 {
            return Err(LinalgError::EmptyMatrix);
        }
        if let Some((index, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != order) {
            return Err(LinalgError::RaggedColumn {
                column: index,
                len: row.len(),
                order,
            });
        }
        let columns = (0..order)
            .map(|c| rows.iter().map(|r| r[c].clone()).collect())
            .collect();
        Ok(Self { columns })
    }

    pub fn order(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<T>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[T] {
        &self.columns[j]
    }

    /// Entry at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.columns[col][row]
    }

    /// Row-major copy of the entries.
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.order())
            .map(|r| self.columns.iter().map(|c| c[r].clone()).collect())
            .collect()
    }

    pub fn with_swapped_columns(&self, a: usize, b: usize) -> Self {
        let mut columns = self.columns.clone();
        columns.swap(a, b);
        Self { columns }
    }

    /// Copy with column `j` replaced.
    ///
    /// # Panics
    /// If `column` does not have length `order`.
    pub fn with_column(&self, j: usize, column: Vec<T>) -> Self {
        assert_eq!(column.len(), self.order(), "column length must equal order");
        let mut columns = self.columns.clone();
        columns[j] = column;
        Self { columns }
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            columns: self
                .columns
                .iter()
                .map(|c| c.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn into_columns(self) -> Vec<Vec<T>> {
        self.columns
    }
}

impl<T: Clone + num_traits::Zero + num_traits::One> SquareMatrix<T> {
    pub fn identity(order: usize) -> Result<Self, LinalgError> {
        Self::from_columns(
            (0..order)
                .map(|c| {
                    (0..order)
                        .map(|r| if r == c { T::one() } else { T::zero() })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn diagonal(entries: Vec<T>) -> Result<Self, LinalgError> {
        let order = entries.len();
        Self::from_columns(
            entries
                .into_iter()
                .enumerate()
                .map(|(c, d)| {
                    let mut col = vec![T::zero(); order];
                    col[c] = d;
                    col
                })
                .collect(),
        )
    }
}
