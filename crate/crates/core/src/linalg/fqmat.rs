use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::LinalgError;
use crate::field::FiniteField;

/// Dense matrix over a small finite field, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMat {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl FqMat {
    pub fn new(field: FiniteField, rows: usize, cols: usize, data: Vec<u8>) -> FqMat {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        assert!(
            data.iter().all(|&v| (v as u32) < field.order()),
            "entry outside the field"
        );
        FqMat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Square matrix from rows given as small signed integers (reduced mod p).
    pub fn from_ints(field: FiniteField, rows: &[&[i64]]) -> FqMat {
        assert!(field.is_prime_field(), "integer entries need a prime field");
        let p = field.characteristic() as i64;
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n);
                r.iter().map(move |&v| v.rem_euclid(p) as u8)
            })
            .collect();
        FqMat::new(field, n, n, data)
    }

    pub fn identity(field: FiniteField, n: usize) -> FqMat {
        let mut data = vec![0u8; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        FqMat::new(field, n, n, data)
    }

    pub fn scalar(field: FiniteField, n: usize, c: u8) -> FqMat {
        let mut m = FqMat::identity(field, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &FqMat) -> FqMat {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = self.field;
        let mut data = vec![0u8; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let idx = i * other.cols + j;
                        data[idx] = f.add(data[idx], f.mul(a, b));
                    }
                }
            }
        }
        FqMat::new(f, self.rows, other.cols, data)
    }

    pub fn transpose(&self) -> FqMat {
        let mut data = vec![0u8; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.get(i, j);
            }
        }
        FqMat::new(self.field, self.cols, self.rows, data)
    }

    pub fn neg(&self) -> FqMat {
        let f = self.field;
        FqMat::new(
            f,
            self.rows,
            self.cols,
            self.data.iter().map(|&v| f.neg(v)).collect(),
        )
    }

    pub fn scale(&self, c: u8) -> FqMat {
        let f = self.field;
        FqMat::new(
            f,
            self.rows,
            self.cols,
            self.data.iter().map(|&v| f.mul(c, v)).collect(),
        )
    }

    /// `Some(c)` when the matrix is `c·I`.
    pub fn scalar_value(&self) -> Option<u8> {
        if !self.is_square() {
            return None;
        }
        let c = self.get(0, 0);
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| self.get(i, j) == if i == j { c } else { 0 }))
            .then_some(c)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value() == Some(1)
    }

    pub fn det(&self) -> u8 {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = 1u8;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| m[r * n + c] != 0) else {
                return 0;
            };
            if piv != c {
                for j in 0..n {
                    m.swap(c * n + j, piv * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[c * n + c];
            det = f.mul(det, pv);
            let inv = f.inv(pv).expect("pivot is nonzero");
            for r in c + 1..n {
                let factor = f.mul(m[r * n + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[c * n + j]));
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<FqMat, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch);
        }
        let f = self.field;
        let n = self.rows;
        let w = 2 * n;
        let mut m = vec![0u8; n * w];
        for i in 0..n {
            for j in 0..n {
                m[i * w + j] = self.get(i, j);
            }
            m[i * w + n + i] = 1;
        }
        for c in 0..n {
            let piv = (c..n)
                .find(|&r| m[r * w + c] != 0)
                .ok_or(LinalgError::Singular)?;
            if piv != c {
                for j in 0..w {
                    m.swap(c * w + j, piv * w + j);
                }
            }
            let inv = f.inv(m[c * w + c]).expect("pivot is nonzero");
            for j in 0..w {
                m[c * w + j] = f.mul(m[c * w + j], inv);
            }
            for r in 0..n {
                if r == c || m[r * w + c] == 0 {
                    continue;
                }
                let factor = m[r * w + c];
                for j in 0..w {
                    m[r * w + j] = f.sub(m[r * w + j], f.mul(factor, m[c * w + j]));
                }
            }
        }
        let data = (0..n)
            .flat_map(|i| m[i * w + n..i * w + w].to_vec())
            .collect();
        Ok(FqMat::new(f, n, n, data))
    }

    /// Base-q digit packing, most significant digit first. Distinct matrices of
    /// one shape and field get distinct codes.
    pub fn encode(&self) -> u64 {
        let q = self.field.order() as u64;
        self.data.iter().fold(0u64, |acc, &d| acc * q + d as u64)
    }

    pub fn decode(field: FiniteField, rows: usize, cols: usize, mut code: u64) -> FqMat {
        let q = field.order() as u64;
        let mut data = vec![0u8; rows * cols];
        for slot in data.iter_mut().rev() {
            *slot = (code % q) as u8;
            code /= q;
        }
        FqMat::new(field, rows, cols, data)
    }

    /// One digit per entry, row-major.
    pub fn to_digits(&self) -> String {
        self.data.iter().map(|&d| self.field.digit(d)).collect()
    }

    pub fn from_digits(field: FiniteField, rows: usize, cols: usize, s: &str) -> Option<FqMat> {
        let data: Option<Vec<u8>> = s.chars().map(|c| field.from_digit(c)).collect();
        let data = data?;
        (data.len() == rows * cols).then(|| FqMat::new(field, rows, cols, data))
    }
}

impl fmt::Debug for FqMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(&self.field.render(self.get(i, j)))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det_over_f11() {
        let f = FiniteField::prime(11).unwrap();
        let m = FqMat::from_ints(f, &[&[2, 3], &[1, 4]]);
        assert_eq!(m.det(), 5);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = FqMat::from_ints(f, &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn encoding_round_trips() {
        let f = FiniteField::f8();
        let m = FqMat::new(f, 2, 2, vec![7, 1, 0, 5]);
        assert_eq!(FqMat::decode(f, 2, 2, m.encode()), m);
        assert_eq!(m.to_digits(), "7105");
        assert_eq!(FqMat::from_digits(f, 2, 2, "7105"), Some(m));
        assert_eq!(FqMat::from_digits(f, 2, 2, "7108"), None);
    }
}
