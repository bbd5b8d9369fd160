//! Dense matrices over a [`Ring`].

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::{Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer entries.
    pub fn from_i64(ring: &Ring, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(
            ring,
            rows.iter()
                .map(|row| row.iter().map(|&v| ring.from_i64(v)).collect())
                .collect(),
        )
    }

    /// Parses row-major element literals.
    pub fn parse<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Matrix> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(ring, rows)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.ring.format(self.get(i, j))).collect())
            .collect()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add_at(&mut self, i: usize, j: usize, v: &Elem) {
        let idx = i * self.cols + j;
        self.data[idx] = self.ring.add(&self.data[idx], v);
    }

    fn same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::DescriptorMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = &self.ring;
        let mut out = Matrix::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    out.add_at(i, j, &r.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Elem, &Elem) -> Elem) -> Result<Matrix> {
        self.same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| self.ring.sub(a, b))
    }

    pub fn neg(&self) -> Matrix {
        self.map(|x| self.ring.neg(x))
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        self.map(|x| self.ring.mul(c, x))
    }

    fn map(&self, f: impl Fn(&Elem) -> Elem) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.ring.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(&self.ring, self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// `self ⊥ other`.
    pub fn block_diag(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Ok(Matrix::from_fn(&self.ring, r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                self.ring.zero()
            }
        }))
    }

    /// Sub-block with rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(&self.ring, r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Relabels indices: entry `(i, j)` moves to `(perm[i], perm[j])`. This is
    /// `P·M·Pᵀ` for the permutation matrix `P` with `P e_i = e_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Matrix {
        assert!(self.is_square() && perm.len() == self.rows);
        let mut out = Matrix::zeros(&self.ring, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        out
    }

    /// Entry-wise canonical map into `target`.
    pub fn coerce(&self, target: &Ring) -> Result<Matrix> {
        Ok(Matrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| self.ring.coerce(x, target))
                .collect::<Result<_>>()?,
        })
    }

    /// Applies `f` to each entry, producing a matrix over `target`.
    pub fn try_map(&self, target: &Ring, f: impl Fn(&Elem) -> Result<Elem>) -> Result<Matrix> {
        Ok(Matrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Determinant by dynamic programming over column subsets. Division-free,
    /// so exact over any commutative ring; cost `O(2^n · n)` ring operations,
    /// with zero entries skipped.
    pub fn det(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n > 24 {
            return Err(Error::DimensionMismatch(format!("determinant of size {n} is too large")));
        }
        let r = &self.ring;
        let mut partial: Vec<Option<Elem>> = vec![None; 1 << n];
        partial[0] = Some(r.one());
        for mask in 0usize..(1 << n) {
            let Some(acc) = partial[mask].take() else { continue };
            let row = mask.count_ones() as usize;
            if row == n {
                return Ok(acc);
            }
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let a = self.get(row, c);
                if r.is_zero(a) {
                    continue;
                }
                let above = (mask >> (c + 1)).count_ones();
                let mut term = r.mul(&acc, a);
                if above % 2 == 1 {
                    term = r.neg(&term);
                }
                let next = mask | (1 << c);
                partial[next] = Some(match partial[next].take() {
                    Some(prev) => r.add(&prev, &term),
                    None => term,
                });
            }
            if row + 1 == n {
                // completed masks are read back below
            }
        }
        Ok(partial[(1 << n) - 1].take().unwrap_or_else(|| r.zero()))
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Matrix {
        let n = self.rows;
        Matrix::from_fn(&self.ring, n - 1, n - 1, |i, j| {
            let i = if i >= skip_row { i + 1 } else { i };
            let j = if j >= skip_col { j + 1 } else { j };
            self.get(i, j).clone()
        })
    }

    /// Exact inverse via the adjugate; fails when the determinant is not a unit.
    pub fn inverse(&self) -> Result<Matrix> {
        let det = self.det()?;
        let r = &self.ring;
        let dinv = r.inv(&det)?;
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        if n == 1 {
            return Ok(Matrix::from_fn(r, 1, 1, |_, _| dinv.clone()));
        }
        let mut out = Matrix::zeros(r, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut c = self.minor(i, j).det()?;
                if (i + j) % 2 == 1 {
                    c = r.neg(&c);
                }
                out.set(j, i, r.mul(&c, &dinv));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.to_strings();
        write!(f, "[")?;
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_det(m: &Matrix) -> Elem {
        // Leibniz expansion over all permutations
        let n = m.rows();
        let r = m.ring();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = r.zero();
        fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(perm.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, out);
                if k.is_multiple_of(2) {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        let mut all = Vec::new();
        heap(n, &mut perm, &mut all);
        for p in all {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut term = r.one();
            for (i, &pi) in p.iter().enumerate() {
                term = r.mul(&term, m.get(i, pi));
            }
            if inversions % 2 == 1 {
                term = r.neg(&term);
            }
            total = r.add(&total, &term);
        }
        total
    }

    #[test]
    fn det_matches_leibniz() {
        let z = Ring::integers();
        let m = Matrix::from_i64(&z, &[&[2, -1, 0, 3], &[1, 4, 5, -2], &[0, 0, 7, 1], &[3, 1, -1, 2]]).unwrap();
        assert_eq!(m.det().unwrap(), brute_det(&m));
        assert_eq!(Matrix::identity(&z, 5).det().unwrap(), z.one());
    }

    #[test]
    fn inverse_over_zmod() {
        let r = Ring::modular(9).unwrap();
        let m = Matrix::from_i64(&r, &[&[2, 1], &[1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let singular = Matrix::from_i64(&r, &[&[3, 0], &[0, 1]]).unwrap();
        assert!(matches!(singular.inverse(), Err(Error::NotAUnit { .. })));
    }

    #[test]
    fn permuted_is_conjugation() {
        let z = Ring::integers();
        let m = Matrix::from_i64(&z, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).unwrap();
        let perm = [2, 0, 1];
        let p = Matrix::zeros(&z, 3, 3).permuted(&perm);
        assert!(p.is_zero());
        let mut pm = Matrix::zeros(&z, 3, 3);
        for (i, &pi) in perm.iter().enumerate() {
            pm.set(pi, i, z.one());
        }
        let expect = pm.mul(&m).unwrap().mul(&pm.transpose()).unwrap();
        assert_eq!(m.permuted(&perm), expect);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = Matrix::identity(&Ring::integers(), 2);
        let b = Matrix::identity(&Ring::rationals(), 2);
        assert!(matches!(a.mul(&b), Err(Error::DescriptorMismatch { .. })));
    }
}
