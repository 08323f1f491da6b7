use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let mut m = IntMat::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "row {i} has the wrong length");
            for (j, v) in row.into_iter().enumerate() {
                m.data[i * cols + j] = v;
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMat::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Builds a matrix from sparse rows `(column, value)`.
    pub fn from_sparse_rows(cols: usize, rows: &[Vec<(usize, BigInt)>]) -> Self {
        let mut m = IntMat::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row {
                m.data[i * cols + j] += v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Appends the rows of `other`.
    pub fn stack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntMat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn push_row(&mut self, row: &[BigInt]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn select_rows(&self, indices: &[usize]) -> IntMat {
        IntMat::from_rows(
            self.cols,
            indices.iter().map(|&i| self.row(i).to_vec()).collect(),
        )
    }

    pub fn select_cols(&self, indices: &[usize]) -> IntMat {
        IntMat::from_rows(
            indices.len(),
            (0..self.rows)
                .map(|i| indices.iter().map(|&j| self.get(i, j).clone()).collect())
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<BigInt>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(|c| c.to_vec()).collect()
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
