use std::fmt;

use super::{PrimeField, Subspace};
use crate::{Error, Result};

/// Dense matrix over a prime field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixF {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatrixF {
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(&value) = data.iter().find(|&&v| v >= field.p()) {
            return Err(Error::EntryOutOfRange {
                value,
                modulus: field.p(),
            });
        }
        Ok(MatrixF {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows<R: AsRef<[u32]>>(field: PrimeField, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        MatrixF::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        MatrixF {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = MatrixF::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(<[u32]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> MatrixF {
        let mut t = MatrixF::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &MatrixF) -> Result<MatrixF> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        let p = self.field.p() as u64;
        let mut out = MatrixF::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                out.data[i * other.cols + j] = (acc % p) as u32;
            }
        }
        Ok(out)
    }

    /// `M v` for a column vector `v` of length `cols`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let acc: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (acc % p) as u32
            })
            .collect()
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (MatrixF, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(sel) = (lead..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            m.swap_rows(sel, lead);
            let inv = f.inv(m.get(lead, col));
            for j in col..m.cols {
                let v = f.mul(m.get(lead, j), inv);
                m.data[lead * m.cols + j] = v;
            }
            for i in 0..m.rows {
                let factor = m.get(i, col);
                if i == lead || factor == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(lead, j)));
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> MatrixF {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Null space `{v : M v = 0}` in `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let f = self.field;
        let (r, pivots) = self.rref_with_pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::span(f, self.cols, basis)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<MatrixF> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = MatrixF::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1;
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = MatrixF::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = r.get(i, n + j);
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> u32 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(sel) = (col..n).find(|&i| m.get(i, col) != 0) else {
                return 0;
            };
            if sel != col {
                m.swap_rows(sel, col);
                det = f.neg(det);
            }
            let pivot = m.get(col, col);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            for i in col + 1..n {
                let factor = f.mul(m.get(i, col), inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(col, j)));
                    m.data[i * n + j] = v;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for MatrixF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixF<F_{}>{:?}", self.field.p(), self.to_rows())
    }
}

impl fmt::Display for MatrixF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
