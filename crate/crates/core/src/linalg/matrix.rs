use super::{
    Echelon, LinalgError, LinearAction, Rational, SparseVec, SubspaceBasis,
};

/// Sparse matrix over the rationals, stored by columns.
///
/// Linear maps in this crate are assembled one basis image at a time, so
/// columns are the natural unit; rows are materialized by transposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    nrows: usize,
    ncols: usize,
    columns: Vec<SparseVec>,
}

impl SparseRationalMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseRationalMatrix {
            nrows,
            ncols,
            columns: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseRationalMatrix {
            nrows: n,
            ncols: n,
            columns: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_columns(nrows: usize, columns: Vec<SparseVec>) -> Result<Self, LinalgError> {
        for c in &columns {
            if let Some(i) = c.max_index() {
                if i >= nrows {
                    return Err(LinalgError::IndexOutOfRange { index: i, dim: nrows });
                }
            }
        }
        Ok(SparseRationalMatrix {
            nrows,
            ncols: columns.len(),
            columns,
        })
    }

    pub fn from_triplets<I>(nrows: usize, ncols: usize, entries: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); ncols];
        for (r, c, v) in entries {
            if r >= nrows {
                return Err(LinalgError::IndexOutOfRange { index: r, dim: nrows });
            }
            if c >= ncols {
                return Err(LinalgError::IndexOutOfRange { index: c, dim: ncols });
            }
            cols[c].push((r, v));
        }
        Ok(SparseRationalMatrix {
            nrows,
            ncols,
            columns: cols.into_iter().map(SparseVec::from_entries).collect(),
        })
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(c, &v)| (r, c, Rational::from_int(v)))
            }),
        )
        .expect("indices in range")
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.columns[col].get(row)
    }

    pub fn column(&self, col: usize) -> &SparseVec {
        &self.columns[col]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    /// All stored `(row, col, value)` triplets, column-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.nrows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                rows[r].push((c, v.clone()));
            }
        }
        SparseRationalMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            // column-major traversal pushes in increasing column order
            columns: rows.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> Result<SparseVec, LinalgError> {
        if let Some(i) = v.max_index() {
            if i >= self.ncols {
                return Err(LinalgError::IndexOutOfRange { index: i, dim: self.ncols });
            }
        }
        let mut out = SparseVec::new();
        for (j, x) in v.iter() {
            out.axpy(x, &self.columns[j]);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SparseRationalMatrix) -> Result<Self, LinalgError> {
        if self.ncols != other.nrows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ncols,
                found: other.nrows,
            });
        }
        let columns = other
            .columns
            .iter()
            .map(|c| self.mul_vec(c))
            .collect::<Result<_, _>>()?;
        Ok(SparseRationalMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            columns,
        })
    }

    pub fn add(&self, other: &SparseRationalMatrix) -> Result<Self, LinalgError> {
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return Err(LinalgError::DimensionMismatch {
                expected: self.nrows * self.ncols,
                found: other.nrows * other.ncols,
            });
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.axpy(&Rational::one(), b);
                c
            })
            .collect();
        Ok(SparseRationalMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            columns,
        })
    }

    pub fn scaled(&self, a: &Rational) -> Self {
        SparseRationalMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            columns: self.columns.iter().map(|c| c.scaled(a)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.nrows);
        for c in &self.columns {
            e.insert(c).expect("columns are in range");
        }
        e.rank()
    }

    /// Column space, canonical.
    pub fn image_basis(&self) -> SubspaceBasis {
        SubspaceBasis::from_vectors(self.nrows, &self.columns).expect("columns are in range")
    }

    /// Null space, canonical.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let rows = self.transpose();
        let row_space = rows.image_basis();
        let pivots = row_space.pivots();
        let mut is_pivot = vec![false; self.ncols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        // x_free = e_free - sum_i row_i[free] e_{pivot_i}
        let generators: Vec<SparseVec> = (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                SparseVec::from_entries(
                    std::iter::once((f, Rational::one())).chain(
                        row_space
                            .vectors()
                            .iter()
                            .zip(pivots)
                            .map(|(row, &p)| (p, -row.get(f))),
                    ),
                )
            })
            .collect();
        SubspaceBasis::from_vectors(self.ncols, &generators).expect("in range")
    }
}

impl LinearAction for SparseRationalMatrix {
    fn dim(&self) -> usize {
        assert_eq!(self.nrows, self.ncols, "linear action needs a square matrix");
        self.nrows
    }

    fn apply_unit(&self, index: usize) -> SparseVec {
        self.columns[index].clone()
    }

    fn apply(&self, v: &SparseVec) -> SparseVec {
        self.mul_vec(v).expect("vector in range")
    }

    fn trace(&self) -> Rational {
        (0..self.ncols.min(self.nrows)).map(|i| self.get(i, i)).sum()
    }
}
