use super::Scalar;

/// Dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    field: S::Field,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(field: &S::Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(field); rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &S::Field, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| if i == j { S::one(field) } else { S::zero(field) })
    }

    pub fn from_fn(field: &S::Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            field: field.clone(),
        }
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(field: &S::Field, cols: usize, rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
            field: field.clone(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| super::dot(&self.field, self.row(i), v))
            .collect()
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::<S>::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// Gauss-Jordan elimination to reduced row echelon form; returns pivot columns.
pub fn row_reduce_generic<S: Scalar>(m: &mut Matrix<S>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m.get(r, c).inverse().expect("nonzero pivot is invertible");
        for j in c..cols {
            let v = m.get(r, j).clone() * inv.clone();
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for j in c..cols {
                let pj = m.get(r, j).clone();
                if pj.is_zero() {
                    continue;
                }
                let v = m.get(i, j).clone() - f.clone() * pj;
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of `m`.
pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    let mut a = m.clone();
    S::row_reduce(&mut a).len()
}

/// Basis of the right kernel `{v : M v = 0}`.
///
/// One vector per free column, with that free coordinate set to 1, so integer
/// kernels come out with small integer entries.
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S>> {
    let field = m.field().clone();
    let mut a = m.clone();
    let pivots = S::row_reduce(&mut a);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![S::zero(&field); m.cols()];
            v[free] = S::one(&field);
            for (r, &p) in pivots.iter().enumerate() {
                let x = a.get(r, free);
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, PrimeField, Rational, Rationals};

    fn q(v: i64) -> Rational {
        Rational::from_int(&Rationals, v)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = Matrix::<Rational>::identity(&Rationals, 3);
        assert!(nullspace(&m).is_empty());
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = Matrix::<Rational>::zeros(&Rationals, 2, 3);
        assert_eq!(nullspace(&m).len(), 3);
        assert_eq!(rank(&m), 0);
    }

    /// Left cointegral of k[Z/2] on basis {e, x}: rows are (L_g - eps(g) id)
    /// for g = e (the zero map) and g = x (the swap minus identity).
    #[test]
    fn cointegral_system_of_group_algebra_z2() {
        let rows = vec![
            vec![q(0), q(0)],
            vec![q(0), q(0)],
            vec![q(-1), q(1)],
            vec![q(1), q(-1)],
        ];
        let m = Matrix::from_rows(&Rationals, 2, rows);
        let ker = nullspace(&m);
        assert_eq!(ker, vec![vec![q(1), q(1)]]);
    }

    #[test]
    fn kernel_over_prime_field() {
        let f = PrimeField::new(2).unwrap();
        let one = Fp::one(&f);
        // [1 1] over F2: kernel spanned by (1, 1)
        let m = Matrix::from_rows(&f, 2, vec![vec![one, one]]);
        let ker = nullspace(&m);
        assert_eq!(ker, vec![vec![one, one]]);
    }
}
