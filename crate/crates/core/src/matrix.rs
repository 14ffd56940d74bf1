//! Rectangular matrices of truncated power series with the row and column
//! operations used by the Smith reduction.

use std::fmt;

use crate::scalar::Field;
use crate::series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMat {
    rows: usize,
    cols: usize,
    field: Field,
    prec: usize,
    data: Vec<TruncSeries>,
}

impl SeriesMat {
    pub fn from_fn<F>(rows: usize, cols: usize, field: Field, prec: usize, mut f: F) -> SeriesMat
    where
        F: FnMut(usize, usize) -> TruncSeries,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.field(), field, "matrix entry field mismatch");
                assert_eq!(s.precision(), prec, "matrix entry precision mismatch");
                data.push(s);
            }
        }
        SeriesMat {
            rows,
            cols,
            field,
            prec,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<TruncSeries>>, field: Field, prec: usize) -> SeriesMat {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
        }
        let flat: Vec<TruncSeries> = rows.into_iter().flatten().collect();
        let mut it = flat.into_iter();
        SeriesMat::from_fn(nrows, ncols, field, prec, |_, _| it.next().unwrap())
    }

    pub fn zero(rows: usize, cols: usize, field: Field, prec: usize) -> SeriesMat {
        SeriesMat::from_fn(rows, cols, field, prec, |_, _| TruncSeries::zero(field, prec))
    }

    pub fn identity(n: usize, field: Field, prec: usize) -> SeriesMat {
        SeriesMat::from_fn(n, n, field, prec, |i, j| {
            if i == j {
                TruncSeries::one(field, prec)
            } else {
                TruncSeries::zero(field, prec)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn entry(&self, i: usize, j: usize) -> &TruncSeries {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, s: TruncSeries) {
        assert!(i < self.rows && j < self.cols);
        assert_eq!(s.field(), self.field);
        assert_eq!(s.precision(), self.prec);
        self.data[i * self.cols + j] = s;
    }

    pub fn column(&self, j: usize) -> Vec<TruncSeries> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn mul(&self, rhs: &SeriesMat) -> SeriesMat {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        assert_eq!(self.field, rhs.field);
        let prec = self.prec.min(rhs.prec);
        SeriesMat::from_fn(self.rows, rhs.cols, self.field, prec, |i, j| {
            let mut acc = TruncSeries::zero(self.field, prec);
            for k in 0..self.cols {
                acc = acc.add(&self.entry(i, k).mul(rhs.entry(k, j)));
            }
            acc
        })
    }

    /// Determinant by Laplace expansion along the first remaining row.
    /// Matrix sides stay small here, so no elimination is needed.
    pub fn det(&self) -> TruncSeries {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let cols: Vec<usize> = (0..self.cols).collect();
        self.det_rec(0, &cols)
    }

    fn det_rec(&self, row: usize, cols: &[usize]) -> TruncSeries {
        if cols.is_empty() {
            return TruncSeries::one(self.field, self.prec);
        }
        let mut acc = TruncSeries::zero(self.field, self.prec);
        for (idx, &j) in cols.iter().enumerate() {
            let e = self.entry(row, j);
            if e.is_zero_to_precision() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&c| c != j)
                .collect();
            let sub = self.det_rec(row + 1, &rest);
            let term = e.mul(&sub);
            acc = if idx % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[i] -= q * row[k]
    pub fn row_sub_mul(&mut self, i: usize, k: usize, q: &TruncSeries) {
        assert_ne!(i, k);
        for j in 0..self.cols {
            let v = self.entry(i, j).sub(&q.mul(self.entry(k, j)));
            self.data[i * self.cols + j] = v;
        }
    }

    /// row[i] += q * row[k]
    pub fn row_add_mul(&mut self, i: usize, k: usize, q: &TruncSeries) {
        assert_ne!(i, k);
        for j in 0..self.cols {
            let v = self.entry(i, j).add(&q.mul(self.entry(k, j)));
            self.data[i * self.cols + j] = v;
        }
    }

    /// col[j] -= q * col[k]
    pub fn col_sub_mul(&mut self, j: usize, k: usize, q: &TruncSeries) {
        assert_ne!(j, k);
        for i in 0..self.rows {
            let v = self.entry(i, j).sub(&q.mul(self.entry(i, k)));
            self.data[i * self.cols + j] = v;
        }
    }

    /// col[j] += q * col[k]
    pub fn col_add_mul(&mut self, j: usize, k: usize, q: &TruncSeries) {
        assert_ne!(j, k);
        for i in 0..self.rows {
            let v = self.entry(i, j).add(&q.mul(self.entry(i, k)));
            self.data[i * self.cols + j] = v;
        }
    }

    pub fn scale_row(&mut self, i: usize, q: &TruncSeries) {
        for j in 0..self.cols {
            let v = self.entry(i, j).mul(q);
            self.data[i * self.cols + j] = v;
        }
    }

    pub fn scale_col(&mut self, j: usize, q: &TruncSeries) {
        for i in 0..self.rows {
            let v = self.entry(i, j).mul(q);
            self.data[i * self.cols + j] = v;
        }
    }
}

impl fmt::Display for SeriesMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(k: usize, n: usize) -> TruncSeries {
        TruncSeries::monomial(Field::Rationals, k, n)
    }

    #[test]
    fn det_of_antidiagonal() {
        let f = Field::Rationals;
        let m = SeriesMat::from_rows(
            vec![
                vec![TruncSeries::zero(f, 8), mono(1, 8)],
                vec![mono(2, 8), TruncSeries::zero(f, 8)],
            ],
            f,
            8,
        );
        // det = -t^3
        let d = m.det();
        assert_eq!(d, mono(3, 8).neg());
    }

    #[test]
    fn mul_against_identity() {
        let f = Field::Rationals;
        let m = SeriesMat::from_rows(
            vec![
                vec![mono(1, 8), mono(0, 8)],
                vec![TruncSeries::zero(f, 8), mono(2, 8)],
            ],
            f,
            8,
        );
        let id = SeriesMat::identity(2, f, 8);
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
    }
}
