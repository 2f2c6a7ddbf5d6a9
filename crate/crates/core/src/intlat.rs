//! Exact integer-lattice linear algebra.
//!
//! Everything here is generic over an integer scalar so the same routines run
//! on machine integers (handy in tests) and on [`num_bigint::BigInt`], which is
//! what the rest of the crate uses.  No fixed-width fast path exists: callers
//! that need overflow-free results should use the `BigInt` aliases exported at
//! the crate root.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::LatticeError;

/// Integer scalar usable by the lattice routines.
pub trait Scalar:
    Integer + Signed + Clone + fmt::Debug + fmt::Display + FromPrimitive + ToPrimitive + std::hash::Hash
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + fmt::Debug
        + fmt::Display
        + FromPrimitive
        + ToPrimitive
        + std::hash::Hash
{
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, LatticeError> {
        if data.len() != rows * cols {
            return Err(LatticeError::EntryCount {
                rows,
                cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    /// `cols` is only consulted when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self, LatticeError> {
        let ncols = rows.first().map_or(cols, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != ncols {
                return Err(LatticeError::RaggedRow {
                    row: i,
                    expected: ncols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&x| T::from_i64(x).expect("i64 fits scalar")).collect())
            .collect();
        Self::from_rows(converted, cols).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LatticeError> {
        if self.cols != rhs.rows {
            return Err(LatticeError::Shape {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `A·x`.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>, LatticeError> {
        if x.len() != self.cols {
            return Err(LatticeError::Shape {
                left: (self.rows, self.cols),
                right: (x.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Lossless scalar conversion (e.g. `i64` to `BigInt`).
    pub fn convert<S: Scalar>(&self) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| S::from_i128(x.to_i128().expect("entry fits i128")).expect("entry fits"))
                .collect(),
        }
    }

    /// Same columns in a different order: column `j` of the result is column
    /// `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, perm.len());
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                out[(i, j)] = self[(i, src)].clone();
            }
        }
        out
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

    /// `row[dst] += factor * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self[(src, j)].clone() * factor.clone();
            self[(dst, j)] = self[(dst, j)].clone() + v;
        }
    }

    /// `col[dst] += factor * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self[(i, src)].clone() * factor.clone();
            self[(i, dst)] = self[(i, dst)].clone() + v;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)].clone();
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            self[(i, c)] = -self[(i, c)].clone();
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<T, LatticeError> {
        if !self.is_square() {
            return Err(LatticeError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(p) => {
                        m.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num / prev.clone();
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * m[(n - 1, n - 1)].clone())
    }

    pub fn rank(&self) -> usize {
        let (h, _) = hnf(self);
        (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of [`snf`]: `u · a · v = d` with `u`, `v` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    /// Nonzero diagonal entries of `d`, each dividing the next.
    pub invariant_factors: Vec<T>,
}

impl<T: Scalar> Smith<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

fn smallest_nonzero<T: Scalar>(vals: impl Iterator<Item = (usize, T)>) -> Option<usize> {
    let mut best: Option<(usize, T)> = None;
    for (i, v) in vals {
        if v.is_zero() {
            continue;
        }
        let a = v.abs();
        match &best {
            Some((_, b)) if *b <= a => {}
            _ => best = Some((i, a)),
        }
    }
    best.map(|(i, _)| i)
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `u · a = h`.  `h` is in row echelon
/// form, pivots are positive and entries above each pivot lie in `[0, pivot)`.
pub fn hnf<T: Scalar>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let (m, n) = (a.rows, a.cols);
    let mut h = a.clone();
    let mut u = Matrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        while let Some(p) = smallest_nonzero((r..m).map(|i| (i, h[(i, c)].clone()))) {
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut reduced = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &-q.clone());
                u.add_row_multiple(i, r, &-q);
                if !h[(i, c)].is_zero() {
                    reduced = false;
                }
            }
            if reduced {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.add_row_multiple(i, r, &-q.clone());
            u.add_row_multiple(i, r, &-q);
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form with transformation matrices.
///
/// Pivots are chosen as the entry of smallest nonzero absolute value in the
/// remaining block, which keeps intermediate growth small at desk scale.
pub fn snf<T: Scalar>(a: &Matrix<T>) -> Smith<T> {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut factors = Vec::new();
    for t in 0..m.min(n) {
        loop {
            let block = (t..m).flat_map(|i| (t..n).map(move |j| (i, j)));
            let coords: Vec<(usize, usize)> = block.collect();
            let Some(k) = smallest_nonzero(coords.iter().enumerate().map(|(k, &(i, j))| (k, d[(i, j)].clone())))
            else {
                break;
            };
            let (pi, pj) = coords[k];
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &-q.clone());
                u.add_row_multiple(i, t, &-q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &-q.clone());
                v.add_col_multiple(j, t, &-q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole remaining block
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &T::one());
                    u.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_zero() {
            break;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        factors.push(d[(t, t)].clone());
    }
    Smith {
        u,
        d,
        v,
        invariant_factors: factors,
    }
}

/// Basis of the integer kernel `{x : a·x = 0}`, returned as the columns of an
/// `a.cols() × k` matrix.  The basis is the Hermite form of the kernel lattice,
/// so equal kernels give identical output.
pub fn kernel_basis<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    let n = a.cols;
    let (h, u) = hnf(&a.transpose());
    let rank = (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count();
    let kernel_rows: Vec<Vec<T>> = (rank..n).map(|i| u.row(i).to_vec()).collect();
    if kernel_rows.is_empty() {
        return Matrix::zeros(n, 0);
    }
    let k = Matrix::from_rows(kernel_rows, n).expect("rows of u share a length");
    let (canon, _) = hnf(&k);
    canon.transpose()
}

/// Presentation of `Z^rows / (column lattice of a)` in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel<T> {
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<T>,
    /// Class of each standard basis vector of `Z^rows`, as
    /// `(free coordinates, torsion residues)`.
    pub images: Vec<(Vec<T>, Vec<T>)>,
}

pub fn cokernel<T: Scalar>(a: &Matrix<T>) -> Cokernel<T> {
    let s = snf(a);
    let m = a.rows;
    let r = s.rank();
    let torsion_idx: Vec<usize> = (0..r).filter(|&i| !s.invariant_factors[i].is_one()).collect();
    let torsion: Vec<T> = torsion_idx.iter().map(|&i| s.invariant_factors[i].clone()).collect();
    // y = u·x maps the column lattice onto the column lattice of d
    let images = (0..m)
        .map(|j| {
            let col = s.u.column(j);
            let tors = torsion_idx
                .iter()
                .map(|&i| col[i].mod_floor(&s.invariant_factors[i]))
                .collect();
            let free = col[r..].to_vec();
            (free, tors)
        })
        .collect();
    Cokernel {
        free_rank: m - r,
        torsion,
        images,
    }
}

/// Exact solution of `a·x = b` over the rationals, if one exists.  When the
/// system is underdetermined the free variables are set to zero.
pub fn solve_rational<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Option<Vec<Ratio<T>>>, LatticeError> {
    if b.len() != a.rows {
        return Err(LatticeError::Shape {
            left: (a.rows, a.cols),
            right: (b.len(), 1),
        });
    }
    let rows: Vec<Vec<Ratio<T>>> = (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .cloned()
                .chain(std::iter::once(b[i].clone()))
                .map(Ratio::from_integer)
                .collect()
        })
        .collect();
    let (reduced, pivots) = rref(rows, a.cols);
    if reduced
        .iter()
        .any(|r| r[..a.cols].iter().all(Zero::is_zero) && !r[a.cols].is_zero())
    {
        return Ok(None);
    }
    let mut x = vec![Ratio::zero(); a.cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = reduced[row][a.cols].clone();
    }
    Ok(Some(x))
}

/// Inverse of a square nonsingular matrix over the rationals.
pub fn inverse_rational<T: Scalar>(a: &Matrix<T>) -> Result<Option<Vec<Vec<Ratio<T>>>>, LatticeError> {
    if !a.is_square() {
        return Err(LatticeError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    let rows: Vec<Vec<Ratio<T>>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .cloned()
                .map(Ratio::from_integer)
                .chain((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }))
                .collect()
        })
        .collect();
    let (reduced, pivots) = rref(rows, n);
    if pivots.len() < n {
        return Ok(None);
    }
    Ok(Some(reduced.into_iter().map(|r| r[n..].to_vec()).collect()))
}

/// Inverse of a unimodular integer matrix.
pub fn inverse_unimodular<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, LatticeError> {
    let inv = inverse_rational(a)?.ok_or(LatticeError::NotUnimodular)?;
    let n = a.rows;
    let mut data = Vec::with_capacity(n * n);
    for r in inv {
        for x in r {
            if !x.is_integer() {
                return Err(LatticeError::NotUnimodular);
            }
            data.push(x.to_integer());
        }
    }
    Matrix::new(n, n, data)
}

/// Reduced row echelon form on the first `ncols` columns of an augmented
/// rational system.  Returns the reduced rows and the pivot column of each
/// leading row.
pub(crate) fn rref<Q>(mut rows: Vec<Vec<Q>>, ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>)
where
    Q: Clone + Zero + One + PartialEq + std::ops::Sub<Output = Q> + std::ops::Mul<Output = Q> + std::ops::Div<Output = Q>,
{
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / piv.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..rows[i].len() {
                let delta = f.clone() * rows[r][j].clone();
                rows[i][j] = rows[i][j].clone() - delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

/// gcd of a slice (zero for an empty or all-zero slice).
pub fn gcd_all<T: Scalar>(xs: &[T]) -> T {
    xs.iter().fold(T::zero(), |g, x| g.gcd(x))
}
