//! Dense matrices and exact Gaussian elimination over any [`Field`].
//!
//! Pivoting takes the first nonzero entry in the column; there are no
//! numerical concerns over a finite field.

use std::ops::{Index, IndexMut};

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Copy> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// # Panics
    /// If the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

pub fn zeros<F: Field>(field: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::filled(rows, cols, field.zero())
}

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |r, c| if r == c { field.one() } else { field.zero() })
}

/// # Panics
/// If the inner dimensions differ.
pub fn mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    Matrix::from_fn(a.rows, b.cols, |r, c| {
        (0..a.cols).fold(field.zero(), |acc, i| field.add(acc, field.mul(a[(r, i)], b[(i, c)])))
    })
}

pub fn mul_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, x: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, x.len(), "dimension mismatch");
    (0..a.rows)
        .map(|r| {
            a.row(r)
                .iter()
                .zip(x)
                .fold(field.zero(), |acc, (&m, &v)| field.add(acc, field.mul(m, v)))
        })
        .collect()
}

/// Reduces `m` to reduced row echelon form in place and returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !field.is_zero(m[(r, col)])) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = field.inv(m[(row, col)]).expect("pivot is nonzero");
        for c in col..m.cols {
            m[(row, c)] = field.mul(m[(row, c)], inv);
        }
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let factor = m[(r, col)];
            if field.is_zero(factor) {
                continue;
            }
            for c in col..m.cols {
                let v = field.sub(m[(r, c)], field.mul(factor, m[(row, c)]));
                m[(r, c)] = v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, &mut m.clone()).len()
}

/// A basis of the right kernel `{x : M x = 0}`; its size is `cols - rank`.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut red = m.clone();
    let pivots = rref(field, &mut red);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); m.cols];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(red[(r, free)]);
            }
            v
        })
        .collect()
}

/// Some solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.rows, b.len(), "dimension mismatch");
    let mut aug = Matrix::from_fn(a.rows, a.cols + 1, |r, c| if c < a.cols { a[(r, c)] } else { b[r] });
    let pivots = rref(field, &mut aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![field.zero(); a.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[(r, a.cols)];
    }
    Some(x)
}

/// Whether the row spaces of `a` and `b` coincide.
pub fn same_row_space<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> bool {
    assert_eq!(a.cols, b.cols, "dimension mismatch");
    let mut stacked = a.to_rows();
    stacked.extend(b.to_rows());
    let joint = if stacked.is_empty() {
        0
    } else {
        rank(field, &Matrix::from_rows(stacked))
    };
    let (ra, rb) = (rank(field, a), rank(field, b));
    ra == rb && rb == joint
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldCtx, PrimeField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kernel_of_zero_and_identity() {
        let f = FieldCtx::with_default_modulus(2, 4).unwrap();
        let z = zeros(&f, 2, 3);
        let k = kernel(&f, &z);
        assert_eq!(k.len(), 3);
        assert_eq!(rank(&f, &Matrix::from_rows(k)), 3);
        assert!(kernel(&f, &identity(&f, 4)).is_empty());
    }

    #[test]
    fn solve_trivial_cases() {
        let fq = PrimeField::new(5).unwrap();
        let b = vec![1, 4, 2];
        assert_eq!(solve(&fq, &identity(&fq, 3), &b), Some(b.clone()));
        assert_eq!(solve(&fq, &zeros(&fq, 3, 3), &b), None);
        assert_eq!(solve(&fq, &zeros(&fq, 3, 3), &[0, 0, 0]), Some(vec![0, 0, 0]));
    }

    #[test]
    fn planted_kernel_vector_is_found() {
        let f = FieldCtx::with_default_modulus(2, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let v: Vec<_> = (0..5).map(|_| f.random(&mut rng)).collect();
            if v.iter().all(|&x| f.is_zero(x)) {
                continue;
            }
            // rows orthogonal to v: pick random rows, then fix the last
            // nonzero coordinate of v to cancel
            let piv = v.iter().rposition(|&x| !f.is_zero(x)).unwrap();
            let rows: Vec<Vec<_>> = (0..3)
                .map(|_| {
                    let mut row: Vec<_> = (0..5).map(|_| f.random(&mut rng)).collect();
                    row[piv] = f.zero();
                    let dot = row.iter().zip(&v).fold(f.zero(), |a, (&x, &y)| f.add(a, f.mul(x, y)));
                    row[piv] = f.neg(f.mul(dot, f.inv(v[piv]).unwrap()));
                    row
                })
                .collect();
            let m = Matrix::from_rows(rows);
            let k = kernel(&f, &m);
            assert_eq!(k.len(), 5 - rank(&f, &m));
            for kv in &k {
                assert!(mul_vec(&f, &m, kv).iter().all(|&x| f.is_zero(x)));
            }
            let mut with_v = k.clone();
            with_v.push(v.clone());
            assert_eq!(rank(&f, &Matrix::from_rows(with_v)), k.len());
        }
    }

    #[test]
    fn random_square_matrices_usually_invertible() {
        let f = FieldCtx::with_default_modulus(2, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..30 {
            let m = Matrix::from_fn(4, 4, |_, _| f.random(&mut rng));
            if rank(&f, &m) == 4 {
                assert!(kernel(&f, &m).is_empty());
            }
        }
    }

    #[test]
    fn solve_returns_a_solution() {
        let fq = PrimeField::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        use rand::Rng;
        for _ in 0..100 {
            let a = Matrix::from_fn(4, 6, |_, _| rng.gen_range(0..3u32));
            let x: Vec<u32> = (0..6).map(|_| rng.gen_range(0..3)).collect();
            let b = mul_vec(&fq, &a, &x);
            let y = solve(&fq, &a, &b).expect("consistent by construction");
            assert_eq!(mul_vec(&fq, &a, &y), b);
        }
    }
}
