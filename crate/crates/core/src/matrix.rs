//! Dense matrices over an exact coefficient ring.

use crate::error::{Error, Result};
use crate::scalar::{Ring, RingAut, Scalar};
use rand::Rng;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { rows, cols, len: data.len() });
        }
        if let Some(first) = data.first() {
            let ring = first.ring();
            if data.iter().any(|s| s.ring() != ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn zero(ring: Ring, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Mat::zero(ring, n, n);
        for i in 0..n {
            m[(i, i)] = ring.one();
        }
        m
    }

    pub fn from_i64(ring: Ring, rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Mat { rows, cols, data: vals.iter().map(|&v| ring.from_i64(v)).collect() }
    }

    pub fn random<R: Rng>(ring: Ring, rows: usize, cols: usize, rng: &mut R) -> Self {
        Mat { rows, cols, data: (0..rows * cols).map(|_| ring.sample(rng)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn neg(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(Scalar::neg).collect() }
    }

    pub fn matmul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self.ring_or(other);
        let mut out = Mat::zero(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].add(&a.mul(&other[(k, j)]));
                }
            }
        }
        Ok(out)
    }

    /// Apply a ring automorphism to every entry.
    pub fn map_aut(&self, aut: &RingAut) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|s| aut.apply(s)).collect() }
    }

    pub fn map<F: Fn(&Scalar) -> Scalar>(&self, f: F) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|s| f(s)).collect() }
    }

    /// Block-diagonal concatenation.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let ring = self.ring_or(other);
        let mut out = Mat::zero(ring, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)];
            }
        }
        out
    }

    /// Kronecker product with the identity, doubling ranks.
    pub fn tensor_i2(&self) -> Mat {
        let ring = self.ring();
        let mut out = Mat::zero(ring, self.rows * 2, self.cols * 2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(2 * i, 2 * j)] = self[(i, j)];
                out[(2 * i + 1, 2 * j + 1)] = self[(i, j)];
            }
        }
        out
    }

    pub fn ring(&self) -> Ring {
        self.data.first().map(Scalar::ring).unwrap_or(Ring::Integers)
    }

    fn ring_or(&self, other: &Mat) -> Ring {
        self.data.first().or(other.data.first()).map(Scalar::ring).unwrap_or(Ring::Integers)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_shapes_checked() {
        let a = Mat::identity(Ring::Integers, 2);
        let b = Mat::zero(Ring::Integers, 3, 2);
        assert!(a.matmul(&b).is_err());
        assert_eq!(b.matmul(&a).unwrap(), b);
    }

    #[test]
    fn block_diag_and_tensor() {
        let a = Mat::from_i64(Ring::Integers, 1, 1, &[3]);
        let b = Mat::from_i64(Ring::Integers, 2, 2, &[1, 0, 0, 1]);
        let d = a.block_diag(&b);
        assert_eq!(d.rows, 3);
        assert_eq!(d[(0, 0)], Scalar::Int(3));
        assert_eq!(d[(1, 1)], Scalar::Int(1));
        assert_eq!(d[(1, 0)], Scalar::Int(0));
        assert_eq!(a.tensor_i2(), Mat::from_i64(Ring::Integers, 2, 2, &[3, 0, 0, 3]));
    }
}
