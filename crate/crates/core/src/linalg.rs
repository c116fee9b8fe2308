//! Dense exact linear algebra over a [`Scalar`] field.
//!
//! Sizes here are tiny (Hom spaces between small complexes, endomorphism
//! algebras), so plain Gaussian elimination with exact arithmetic is the
//! right tool.

use crate::field::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F: Scalar> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Mat<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn mul(&self, rhs: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, rhs.rows);
        let mut out: Mat<F> = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + term;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }
}

impl<F: Scalar> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

/// Row-reduced form together with the pivot columns.
pub struct Rref<F: Scalar> {
    pub mat: Mat<F>,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form by exact Gauss-Jordan elimination.
pub fn rref<F: Scalar>(m: &Mat<F>) -> Rref<F> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        for j in 0..a.cols {
            let tmp = a[(p, j)].clone();
            a[(p, j)] = a[(r, j)].clone();
            a[(r, j)] = tmp;
        }
        let inv = a[(r, c)].try_inv().expect("pivot must be invertible");
        for j in 0..a.cols {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..a.rows {
            if i != r && !a[(i, c)].is_zero() {
                let f = a[(i, c)].clone();
                for j in 0..a.cols {
                    let sub = f.clone() * a[(r, j)].clone();
                    a[(i, j)] = a[(i, j)].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.rows {
            break;
        }
    }
    Rref { mat: a, pivots }
}

pub fn rank<F: Scalar>(m: &Mat<F>) -> usize {
    rref(m).pivots.len()
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel_basis<F: Scalar>(m: &Mat<F>) -> Vec<Vec<F>> {
    let Rref { mat, pivots } = rref(m);
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; m.cols];
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = Some(row);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut v = vec![F::zero(); m.cols];
        v[free] = F::one();
        for (col, &rowopt) in pivot_set.iter().enumerate() {
            if let Some(row) = rowopt {
                v[col] = -mat[(row, free)].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// One solution of `m x = b`, if any.
pub fn solve<F: Scalar>(m: &Mat<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Mat::zero(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = b[i].clone();
    }
    let Rref { mat, pivots } = rref(&aug);
    if pivots.contains(&m.cols) {
        return None; // inconsistent
    }
    let mut x = vec![F::zero(); m.cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = mat[(row, m.cols)].clone();
    }
    Some(x)
}

/// A row-space membership oracle: spans are kept in reduced echelon form so
/// membership and dimension queries are cheap and exact.
#[derive(Clone, Debug)]
pub struct RowSpan<F: Scalar> {
    pub dim_ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> RowSpan<F> {
    pub fn new(dim_ambient: usize) -> Self {
        RowSpan {
            dim_ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span; the remainder has zeros in all pivot
    /// columns.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.dim_ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in 0..self.dim_ambient {
                    let sub = f.clone() * row[j].clone();
                    v[j] = v[j].clone() - sub;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(F::is_zero)
    }

    /// Insert `v`; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].try_inv().expect("field element");
        for x in &mut r {
            *x = x.clone() * inv.clone();
        }
        // back-substitute into the existing rows
        for (row, &_rp) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in 0..self.dim_ambient {
                    let sub = f.clone() * r[j].clone();
                    row[j] = row[j].clone() - sub;
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.rows.insert(pos, r);
        self.pivots.insert(pos, p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rat, Scalar};
    use num_traits::Zero;

    fn rmat(entries: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            entries
                .iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let m = rmat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ker = kernel_basis(&m);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.apply(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = rmat(&[&[1, 1], &[0, 1]]);
        let x = solve(&m, &[Rat::from_int(3), Rat::from_int(1)]).unwrap();
        assert_eq!(m.apply(&x), vec![Rat::from_int(3), Rat::from_int(1)]);
        let sing = rmat(&[&[1, 1], &[1, 1]]);
        assert!(solve(&sing, &[Rat::from_int(0), Rat::from_int(1)]).is_none());
    }

    #[test]
    fn rowspan_over_fp() {
        let mut span: RowSpan<Fp> = RowSpan::new(3);
        let f = |v: [i64; 3]| v.iter().map(|&x| Fp::new(5, x)).collect::<Vec<_>>();
        assert!(span.insert(f([1, 2, 3])));
        assert!(span.insert(f([0, 1, 4])));
        assert!(!span.insert(f([1, 3, 2]))); // 2*row1 - ... dependent mod 5? 1,3,2 = r1+r2 => (1,3,7)=(1,3,2) mod 5
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&f([2, 4, 6])));
    }
}
