//! Dense square matrices over Laurent polynomials.

use std::fmt;
use std::ops::Mul;

use super::poly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    data: Vec<LaurentPoly>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = LaurentPoly::one();
        }
        m
    }

    /// `None` unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(Matrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// The matrix of a permutation of basis vectors: `e_j ↦ e_{p(j)}`.
    pub fn permutation(images: &[usize]) -> Self {
        let mut m = Self::zero(images.len());
        for (j, &i) in images.iter().enumerate() {
            m.data[i * images.len() + j] = LaurentPoly::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.data[r * self.dim + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.data.chunks(self.dim.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut t = LaurentPoly::zero();
        for i in 0..self.dim {
            t += self.get(i, i);
        }
        t
    }

    pub fn scale(&self, s: &LaurentPoly) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let d = self.dim * other.dim;
        let mut m = Matrix::zero(d);
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            m.set(r1 * other.dim + r2, c1 * other.dim + c2, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// First entry where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        (0..self.dim * self.dim)
            .find(|&k| self.data[k] != other.data[k])
            .map(|k| (k / self.dim, k % self.dim))
    }

    /// `self · (I_{d^left} ⊗ op ⊗ I_{d^right})` where `op` acts on two tensor
    /// factors of local dimension `d`, the first of which has `right + 1`
    /// factors after it.
    pub fn mul_local(&self, op: &Matrix, d: usize, right: usize) -> Matrix {
        let s = d.pow(right as u32);
        let big = s * d;
        let mut out = Matrix::zero(self.dim);
        for c in 0..self.dim {
            let x = (c / big) % d;
            let y = (c / s) % d;
            let base = c - x * big - y * s;
            let col_in_op = x * d + y;
            for xp in 0..d {
                for yp in 0..d {
                    let coef = op.get(xp * d + yp, col_in_op);
                    if coef.is_zero() {
                        continue;
                    }
                    let cp = base + xp * big + yp * s;
                    for r in 0..self.dim {
                        let m = self.get(r, cp);
                        if !m.is_zero() {
                            let v = &out.data[r * self.dim + c] + &(m * coef);
                            out.data[r * self.dim + c] = v;
                        }
                    }
                }
            }
        }
        out
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = &out.data[i * n + j] + &(a * b);
                        out.data[i * n + j] = v;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
