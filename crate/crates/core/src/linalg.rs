//! Dense matrices over `F_p` and Gauss–Jordan elimination.

use std::fmt;

use crate::field::{FieldElement, PrimeField};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.field.p())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows; entries are reduced modulo `p`.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.mul_add(out.get(i, j), a, other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b))
            })
            .collect()
    }

    /// `self + c * other`
    pub fn add_scaled(&mut self, c: FieldElement, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, c, b);
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c));
            }
        }
        m
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: PrimeField, parts: &[&Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(sel) = (pr..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if sel != pr {
                for k in 0..self.cols {
                    self.data.swap(sel * self.cols + k, pr * self.cols + k);
                }
            }
            let inv = f.inv(self.get(pr, c));
            for k in c..self.cols {
                let v = f.mul(self.get(pr, k), inv);
                self.set(pr, k, v);
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for k in c..self.cols {
                    let v = f.mul_add(self.get(r, k), neg, self.get(pr, k));
                    self.set(r, k, v);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows < self.cols {
            self.clone().rref_in_place().len()
        } else {
            self.transpose().rref_in_place().len()
        }
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn determinant(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(sel) = (c..n).find(|&r| a[r * n + c] != 0) else {
                return 0;
            };
            if sel != c {
                for k in 0..n {
                    a.swap(sel * n + k, c * n + k);
                }
                det = f.neg(det);
            }
            let piv = a[c * n + c];
            det = f.mul(det, piv);
            let inv = f.inv(piv);
            for r in c + 1..n {
                let factor = a[r * n + c];
                if factor == 0 {
                    continue;
                }
                let m = f.neg(f.mul(factor, inv));
                for k in c..n {
                    a[r * n + k] = f.mul_add(a[r * n + k], m, a[c * n + k]);
                }
            }
        }
        det
    }

    /// Cokernel of the map `v -> self * v`, i.e. `F_p^rows / image`.
    pub fn cokernel(&self) -> Cokernel {
        Cokernel::new(self)
    }
}

/// A basis of `target / image(m)` made of target coordinates.
///
/// The image is kept as a reduced row echelon basis whose pivots sit on the
/// earliest possible coordinates; the remaining coordinates, in increasing
/// order, form the coset basis.
#[derive(Clone, Debug)]
pub struct Cokernel {
    field: PrimeField,
    dim: usize,
    image: Matrix,
    pivots: Vec<usize>,
    basis: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Cokernel {
    fn new(m: &Matrix) -> Self {
        let field = m.field;
        let dim = m.rows;
        let mut image = m.transpose();
        let pivots = image.rref_in_place();
        let rank = pivots.len();
        let image = image.submatrix(&(0..rank).collect::<Vec<_>>(), &(0..dim).collect::<Vec<_>>());
        let mut position = vec![None; dim];
        let mut basis = Vec::with_capacity(dim - rank);
        let mut is_pivot = vec![false; dim];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for c in 0..dim {
            if !is_pivot[c] {
                position[c] = Some(basis.len());
                basis.push(c);
            }
        }
        Cokernel {
            field,
            dim,
            image,
            pivots,
            basis,
            position,
        }
    }

    pub fn target_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Target coordinates whose classes form a basis of the cokernel.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of the class of `v` with respect to [`Self::basis`].
    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.dim);
        let f = self.field;
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (k, &e) in self.image.row(i).iter().enumerate() {
                if e != 0 {
                    w[k] = f.mul_add(w[k], neg, e);
                }
            }
        }
        self.basis.iter().map(|&b| w[b]).collect()
    }

    /// Class of a single target coordinate vector `e_coord`.
    pub fn reduce_unit(&self, coord: usize) -> Vec<FieldElement> {
        if let Some(pos) = self.position[coord] {
            let mut out = vec![0; self.basis.len()];
            out[pos] = 1;
            return out;
        }
        let mut v = vec![0; self.dim];
        v[coord] = 1;
        self.reduce(&v)
    }
}
