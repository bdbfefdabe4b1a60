//! Dense exact matrices.
//!
//! Elimination always picks the first nonzero entry scanning top-to-bottom within the current
//! column, and columns left-to-right, so reduced echelon forms and pivot sets are deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: DenseMatrix,
    pub pivot_cols: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }
}

impl DenseMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = DenseMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = f(i, j);
                debug_assert_eq!(x.field(), field);
                entries.push(x);
            }
        }
        DenseMatrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Build from explicit rows. Rows must have equal length and entries must live in `field`.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "ragged rows: expected {cols} entries, found {}",
                    row.len()
                )));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch {
                        left: field,
                        right: x.field(),
                    });
                }
                entries.push(x);
            }
        }
        Ok(DenseMatrix {
            field,
            rows: n,
            cols,
            entries,
        })
    }

    /// Integer matrix, convenient in tests and fixtures.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        DenseMatrix::from_fn(field, rows.len(), cols, |i, j| {
            Scalar::from_i64(field, rows[i][j])
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        DenseMatrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        debug_assert_eq!(x.field(), self.field);
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> DenseMatrix {
        DenseMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = DenseMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![Scalar::zero(self.field); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, acc) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    acc.add_mul_assign(a, x);
                }
            }
        }
        Ok(out)
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> DenseMatrix {
        DenseMatrix::from_fn(self.field, r1 - r0, c1 - c0, |i, j| {
            self.get(r0 + i, c0 + j).clone()
        })
    }

    /// Assemble a block matrix. `block(bi, bj)` returns `None` for a zero block; any returned
    /// block must be `row_dims[bi] x col_dims[bj]`.
    pub fn from_blocks(
        field: FieldSpec,
        row_dims: &[usize],
        col_dims: &[usize],
        mut block: impl FnMut(usize, usize) -> Option<DenseMatrix>,
    ) -> Result<DenseMatrix> {
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let mut out = DenseMatrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for (bi, &h) in row_dims.iter().enumerate() {
            let mut c0 = 0;
            for (bj, &w) in col_dims.iter().enumerate() {
                if let Some(b) = block(bi, bj) {
                    if b.rows != h || b.cols != w {
                        return Err(Error::DimensionMismatch(format!(
                            "block ({bi},{bj}) is {}x{}, expected {h}x{w}",
                            b.rows, b.cols
                        )));
                    }
                    for i in 0..h {
                        for j in 0..w {
                            out.set(r0 + i, c0 + j, b.get(i, j).clone());
                        }
                    }
                }
                c0 += w;
            }
            r0 += h;
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] -= factor * row[source]`, restricted to columns `from..`.
    fn eliminate_row(&mut self, target: usize, source: usize, factor: &Scalar, from: usize) {
        let neg = -factor;
        let cols = self.cols;
        let (src, dst) = if source < target {
            let (lo, hi) = self.entries.split_at_mut(target * cols);
            (&lo[source * cols..(source + 1) * cols], &mut hi[..cols])
        } else {
            let (lo, hi) = self.entries.split_at_mut(source * cols);
            (&hi[..cols], &mut lo[target * cols..(target + 1) * cols])
        };
        for j in from..cols {
            if !src[j].is_zero() {
                dst[j].add_mul_assign(&neg, &src[j]);
            }
        }
    }

    fn find_pivot(&self, col: usize, from_row: usize) -> Option<usize> {
        (from_row..self.rows).find(|&i| !self.get(i, col).is_zero())
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = m.find_pivot(c, r) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    m.eliminate_row(i, r, &factor, c);
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            pivot_cols,
        }
    }

    /// Rank by forward elimination only.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = m.find_pivot(c, r) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for i in r + 1..m.rows {
                if !m.get(i, c).is_zero() {
                    let factor = m.get(i, c) * &inv;
                    m.eliminate_row(i, r, &factor, c);
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of the right null space, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        let zero = Scalar::zero(self.field);
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in rref.pivot_cols.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        (0..self.cols)
            .filter(|&free| is_pivot[free].is_none())
            .map(|free| {
                let mut v = vec![zero.clone(); self.cols];
                v[free] = Scalar::one(self.field);
                for (r, &c) in rref.pivot_cols.iter().enumerate() {
                    v[c] = -rref.matrix.get(r, free);
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one(self.field);
        for c in 0..n {
            let Some(p) = m.find_pivot(c, c) else {
                return Ok(Scalar::zero(self.field));
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            let inv = pivot.inv()?;
            for i in c + 1..n {
                if !m.get(i, c).is_zero() {
                    let factor = m.get(i, c) * &inv;
                    m.eliminate_row(i, c, &factor, c);
                }
            }
            det = det * pivot;
        }
        Ok(det)
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Closed form of `det(1/(u_i + v_j))`:
/// `∏_{i<i'} (u_{i'} - u_i) · ∏_{j<j'} (v_{j'} - v_j) / ∏_{i,j} (u_i + v_j)`.
///
/// The sign convention matches the matrix with rows indexed by `u` and columns by `v`.
pub fn cauchy_determinant(u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch(format!(
            "Cauchy vectors of lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    let Some(first) = u.first() else {
        return Err(Error::InvalidArgument("empty Cauchy matrix".into()));
    };
    let field = first.field();
    let mut denom = Scalar::one(field);
    for (i, ui) in u.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            let s = ui.checked_add(vj)?;
            if s.is_zero() {
                return Err(Error::CauchyPole { i, j });
            }
            denom = denom * s;
        }
    }
    let mut numer = Scalar::one(field);
    for i in 0..u.len() {
        for k in i + 1..u.len() {
            numer = numer * u[k].checked_sub(&u[i])?;
            numer = numer * v[k].checked_sub(&v[i])?;
        }
    }
    numer.checked_div(&denom)
}

/// The Cauchy matrix `(1 / (u_i + v_j))`.
pub fn cauchy_matrix(u: &[Scalar], v: &[Scalar]) -> Result<DenseMatrix> {
    let field = u
        .first()
        .or(v.first())
        .map(Scalar::field)
        .ok_or_else(|| Error::InvalidArgument("empty Cauchy matrix".into()))?;
    let mut rows = Vec::with_capacity(u.len());
    for (i, ui) in u.iter().enumerate() {
        let mut row = Vec::with_capacity(v.len());
        for (j, vj) in v.iter().enumerate() {
            let s = ui.checked_add(vj)?;
            row.push(s.inv().map_err(|_| Error::CauchyPole { i, j })?);
        }
        rows.push(row);
    }
    DenseMatrix::from_rows(field, rows)
}

/// Outcome of [`anti_triangularize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntiTriangularization {
    /// Anti-diagonal entries nonzero, everything strictly below the anti-diagonal zero.
    Success(DenseMatrix),
    /// `det(F_index) = 0` (1-based), the first corner minor met by the elimination.
    Failure { index: usize },
}

impl AntiTriangularization {
    pub fn is_success(&self) -> bool {
        matches!(self, AntiTriangularization::Success(_))
    }
}

/// The lower-left corner `F_i = (f_{kl})_{k=i..n, l=1..n-i+1}` (1-based), of size `n - i + 1`.
pub fn corner_minor(f: &DenseMatrix, i: usize) -> DenseMatrix {
    let n = f.rows();
    assert!(f.is_square() && (1..=n).contains(&i));
    f.submatrix(i - 1, n, 0, n - i + 1)
}

/// Bring `f` to lower anti-triangular shape using only "subtract a multiple of an earlier
/// column from a later column".
///
/// Pivots are taken along the anti-diagonal starting at the bottom-left corner, so the pivot
/// met at step `p` is `±det F_{n-p} / det F_{n-p+1}`. The procedure therefore fails exactly
/// when some corner minor vanishes, and reports the largest such `i` (the smallest vanishing
/// corner).
pub fn anti_triangularize(f: &DenseMatrix) -> Result<AntiTriangularization> {
    if !f.is_square() {
        return Err(Error::NotSquare {
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    let n = f.rows();
    let mut m = f.clone();
    for p in 0..n {
        let row = n - 1 - p;
        let pivot = m.get(row, p).clone();
        if pivot.is_zero() {
            return Ok(AntiTriangularization::Failure { index: row + 1 });
        }
        let inv = pivot.inv()?;
        for c in p + 1..n {
            let factor = m.get(row, c) * &inv;
            if factor.is_zero() {
                continue;
            }
            let neg = -&factor;
            for k in 0..n {
                let src = m.get(k, p).clone();
                if !src.is_zero() {
                    m.entries[k * n + c].add_mul_assign(&neg, &src);
                }
            }
        }
    }
    Ok(AntiTriangularization::Success(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ratio;
    use proptest::prelude::*;

    fn qq() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(ratio(n, d))
    }

    #[test]
    fn rank_examples() {
        let m = DenseMatrix::from_i64(qq(), &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(m.rank(), 1);
        assert_eq!(DenseMatrix::identity(qq(), 3).rank(), 3);
    }

    #[test]
    fn rank_over_gf2_matches_enumeration() {
        let gf2 = FieldSpec::prime(2).unwrap();
        let rows: [[u8; 2]; 2] = [[1, 1], [1, 0]];
        // Oracle: the span of the rows has 2^rank elements.
        let mut span = std::collections::HashSet::new();
        for mask in 0..4u8 {
            let mut v = [0u8; 2];
            for (k, row) in rows.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    v[0] ^= row[0];
                    v[1] ^= row[1];
                }
            }
            span.insert(v);
        }
        let oracle_rank = span.len().trailing_zeros() as usize;
        let m = DenseMatrix::from_i64(gf2, &[&[1, 1], &[1, 0]]);
        assert_eq!(m.rank(), oracle_rank);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn empty_matrices_have_rank_zero() {
        assert_eq!(DenseMatrix::zeros(qq(), 0, 4).rank(), 0);
        assert_eq!(DenseMatrix::zeros(qq(), 3, 0).rank(), 0);
        assert_eq!(DenseMatrix::zeros(qq(), 3, 0).kernel_basis().len(), 0);
        assert_eq!(DenseMatrix::zeros(qq(), 0, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_examples() {
        let m = DenseMatrix::from_i64(qq(), &[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![q(-2, 1), q(1, 1)]]);
        assert!(DenseMatrix::identity(qq(), 2).kernel_basis().is_empty());

        let m = DenseMatrix::from_i64(qq(), &[&[1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
        }
        assert_eq!(DenseMatrix::from_columns(qq(), 3, &k).rank(), 2);
    }

    #[test]
    fn determinant_examples() {
        let m = DenseMatrix::from_rows(qq(), vec![vec![q(1, 3), q(1, 4)], vec![q(1, 2), q(1, 3)]])
            .unwrap();
        // Cofactor oracle: ad - bc.
        let cofactor = &(m.get(0, 0) * m.get(1, 1)) - &(m.get(0, 1) * m.get(1, 0));
        assert_eq!(cofactor, q(-1, 72));
        assert_eq!(m.determinant().unwrap(), cofactor);
        assert!(DenseMatrix::identity(qq(), 5).determinant().unwrap().is_one());
        let singular = DenseMatrix::from_i64(qq(), &[&[1, 2], &[2, 4]]);
        assert!(singular.determinant().unwrap().is_zero());
        assert_eq!(
            DenseMatrix::zeros(qq(), 2, 3).determinant(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn determinant_is_multiplicative() {
        let a = DenseMatrix::from_i64(qq(), &[&[2, -1, 0], &[1, 3, 5], &[0, 4, -2]]);
        let b = DenseMatrix::from_i64(qq(), &[&[1, 1, 1], &[0, 2, 7], &[3, 0, -1]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab.determinant().unwrap(),
            a.determinant().unwrap() * b.determinant().unwrap()
        );
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_determinant(&[q(3, 1)], &[q(0, 1)]).unwrap(), q(1, 3));
        let u = [q(3, 1), q(2, 1)];
        let v = [q(0, 1), q(1, 1)];
        let closed = cauchy_determinant(&u, &v).unwrap();
        assert_eq!(closed, q(-1, 72));
        assert_eq!(closed, cauchy_matrix(&u, &v).unwrap().determinant().unwrap());
        assert_eq!(
            cauchy_determinant(&[q(1, 1)], &[q(-1, 1)]),
            Err(Error::CauchyPole { i: 0, j: 0 })
        );
    }

    #[test]
    fn anti_triangularize_examples() {
        let f = DenseMatrix::from_i64(qq(), &[&[1, 1], &[1, 0]]);
        let AntiTriangularization::Success(t) = anti_triangularize(&f).unwrap() else {
            panic!("expected success");
        };
        assert!(t.get(1, 1).is_zero());
        assert!(!t.get(0, 1).is_zero() && !t.get(1, 0).is_zero());

        let f = DenseMatrix::from_i64(qq(), &[&[0, 1], &[0, 1]]);
        assert_eq!(
            anti_triangularize(&f).unwrap(),
            AntiTriangularization::Failure { index: 2 }
        );

        let f = DenseMatrix::from_rows(qq(), vec![vec![q(1, 2), q(1, 3)], vec![q(1, 1), q(1, 2)]])
            .unwrap();
        assert!(anti_triangularize(&f).unwrap().is_success());
        assert!(anti_triangularize(&DenseMatrix::zeros(qq(), 2, 1)).is_err());
    }

    fn is_anti_triangular(m: &DenseMatrix) -> bool {
        let n = m.rows();
        (0..n).all(|i| {
            (0..n).all(|j| match (i + j).cmp(&(n - 1)) {
                std::cmp::Ordering::Equal => !m.get(i, j).is_zero(),
                std::cmp::Ordering::Greater => m.get(i, j).is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    #[test]
    fn anti_triangularize_matches_corner_minors_on_all_binary_3x3() {
        for bits in 0..512u32 {
            let f = DenseMatrix::from_fn(qq(), 3, 3, |i, j| {
                Scalar::from_i64(qq(), ((bits >> (3 * i + j)) & 1) as i64)
            });
            let vanishing: Vec<usize> = (1..=3)
                .filter(|&i| corner_minor(&f, i).determinant().unwrap().is_zero())
                .collect();
            match anti_triangularize(&f).unwrap() {
                AntiTriangularization::Success(t) => {
                    assert!(vanishing.is_empty(), "bits {bits}");
                    assert!(is_anti_triangular(&t));
                    assert_eq!(t.rank(), f.rank());
                }
                AntiTriangularization::Failure { index } => {
                    assert_eq!(Some(&index), vanishing.iter().max(), "bits {bits}");
                }
            }
        }
    }

    fn small_matrix() -> impl Strategy<Value = DenseMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                DenseMatrix::from_fn(FieldSpec::rationals(), r, c, |i, j| {
                    Scalar::from_i64(FieldSpec::rationals(), v[i * c + j])
                })
            })
        })
    }

    fn distinct_rationals(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
        proptest::collection::btree_set(1i64..200, n)
            .prop_map(|set| set.into_iter().map(|a| Scalar::Rational(ratio(a, 3))).collect())
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank(), m.rref().rank());
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len(), m.cols() - m.rank());
            for v in &k {
                prop_assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn cauchy_closed_form_matches_elimination(
            n in 1usize..7,
            seed_u in distinct_rationals(6),
            seed_v in distinct_rationals(6),
        ) {
            let n = n.min(seed_u.len()).min(seed_v.len());
            let u = &seed_u[..n];
            let v = &seed_v[..n];
            // Positive u and v keep every u_i + v_j away from zero.
            let closed = cauchy_determinant(u, v).unwrap();
            prop_assert_eq!(closed, cauchy_matrix(u, v).unwrap().determinant().unwrap());
        }

        #[test]
        fn anti_triangularization_preserves_rank(v in proptest::collection::vec(-2i64..3, 16)) {
            let f = DenseMatrix::from_fn(FieldSpec::rationals(), 4, 4, |i, j| {
                Scalar::from_i64(FieldSpec::rationals(), v[4 * i + j])
            });
            if let AntiTriangularization::Success(t) = anti_triangularize(&f).unwrap() {
                prop_assert_eq!(t.rank(), f.rank());
                prop_assert!(is_anti_triangular(&t));
            }
        }
    }
}
