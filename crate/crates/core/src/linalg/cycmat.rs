use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::LinalgError;
use crate::arith::{CycField, CycNum, Rat};

/// Dense matrix over Q(ζ_n).
///
/// Entries are stored as one flat run of rational coordinates,
/// `φ(n)` per entry, row-major. Structural equality is mathematical
/// equality because the coordinates are canonical.
#[derive(Clone)]
pub struct CycMat {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl PartialEq for CycMat {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor() == other.field.conductor()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for CycMat {}

impl CycMat {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> CycMat {
        CycMat {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![Rat::ZERO; rows * cols * field.degree()],
        }
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> CycMat {
        CycMat::scalar(&field.one(), n)
    }

    pub fn scalar(c: &CycNum, n: usize) -> CycMat {
        let mut m = CycMat::zeros(c.field(), n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_entries(field: &Arc<CycField>, rows: usize, cols: usize, entries: &[CycNum]) -> CycMat {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let mut m = CycMat::zeros(field, rows, cols);
        for (k, e) in entries.iter().enumerate() {
            m.set(k / cols, k % cols, e);
        }
        m
    }

    pub fn from_fn(
        field: &Arc<CycField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycNum,
    ) -> CycMat {
        let mut m = CycMat::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, &f(i, j));
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_rows(field: &Arc<CycField>, cols: usize, rows: &[Vec<CycNum>]) -> CycMat {
        let mut m = CycMat::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn phi(&self) -> usize {
        self.field.degree()
    }

    fn span(&self, i: usize, j: usize) -> core::ops::Range<usize> {
        let phi = self.phi();
        let start = (i * self.cols + j) * phi;
        start..start + phi
    }

    pub fn coords(&self, i: usize, j: usize) -> &[Rat] {
        &self.data[self.span(i, j)]
    }

    pub fn get(&self, i: usize, j: usize) -> CycNum {
        self.field.from_coords(self.coords(i, j).to_vec())
    }

    pub fn set(&mut self, i: usize, j: usize, x: &CycNum) {
        assert_eq!(x.conductor(), self.field.conductor(), "mixed-conductor arithmetic");
        let r = self.span(i, j);
        self.data[r].clone_from_slice(x.coeffs());
    }

    pub fn entry_is_zero(&self, i: usize, j: usize) -> bool {
        self.coords(i, j).iter().all(Rat::is_zero)
    }

    pub fn row(&self, i: usize) -> Vec<CycNum> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn col(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    /// `Some(c)` when the matrix is `c·I`.
    pub fn scalar_value(&self) -> Option<CycNum> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.coords(0, 0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let ok = if i == j {
                    self.coords(i, j) == c
                } else {
                    self.entry_is_zero(i, j)
                };
                if !ok {
                    return None;
                }
            }
        }
        Some(self.get(0, 0))
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value().is_some_and(|c| c.is_one())
    }

    pub fn trace(&self) -> CycNum {
        assert!(self.is_square());
        let mut acc = vec![Rat::ZERO; self.phi()];
        for i in 0..self.rows {
            for (a, c) in acc.iter_mut().zip(self.coords(i, i)) {
                *a += c;
            }
        }
        self.field.from_coords(acc)
    }

    pub fn transpose(&self) -> CycMat {
        let mut m = CycMat::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let src = self.span(i, j);
                let dst = m.span(j, i);
                m.data[dst].clone_from_slice(&self.data[src]);
            }
        }
        m
    }

    fn zip_with(&self, other: &CycMat, f: impl Fn(&Rat, &Rat) -> Rat) -> CycMat {
        assert_eq!(self.field.conductor(), other.field.conductor(), "mixed-conductor arithmetic");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        CycMat {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &CycMat) -> CycMat {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &CycMat) -> CycMat {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> CycMat {
        self.scale_rat(&Rat::int(-1))
    }

    pub fn scale_rat(&self, r: &Rat) -> CycMat {
        CycMat {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * r).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> CycMat {
        let mut m = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.entry_is_zero(i, j) {
                    m.set(i, j, &(c * &self.get(i, j)));
                }
            }
        }
        m
    }

    /// Adds `c·other` into `self`.
    pub fn add_scaled(&mut self, c: &CycNum, other: &CycMat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        if let Some(r) = c.as_rational() {
            for (a, b) in self.data.iter_mut().zip(&other.data) {
                if !b.is_zero() {
                    *a += &(b * r);
                }
            }
            return;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !other.entry_is_zero(i, j) {
                    let v = &self.get(i, j) + &(c * &other.get(i, j));
                    self.set(i, j, &v);
                }
            }
        }
    }

    pub fn mul(&self, other: &CycMat) -> CycMat {
        assert_eq!(self.field.conductor(), other.field.conductor(), "mixed-conductor arithmetic");
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        self.mul_integral(other)
            .unwrap_or_else(|| self.mul_generic(other))
    }

    /// Common denominator and integer numerators, when everything fits in `i64`.
    pub(crate) fn integral_form(&self) -> Option<(Vec<i64>, i64)> {
        let mut den: i64 = 1;
        for x in &self.data {
            let (_, d) = x.as_small()?;
            if den % d != 0 {
                let g = num_integer::gcd(den, d);
                den = den.checked_mul(d / g)?;
            }
        }
        let nums = self
            .data
            .iter()
            .map(|x| {
                let (n, d) = x.as_small()?;
                n.checked_mul(den / d)
            })
            .collect::<Option<Vec<i64>>>()?;
        Some((nums, den))
    }

    fn mul_integral(&self, other: &CycMat) -> Option<CycMat> {
        let (a, da) = self.integral_form()?;
        let (b, db) = other.integral_form()?;
        let den = (da as i128).checked_mul(db as i128)?;
        let phi = self.phi();
        let a_nz: Vec<bool> = a.chunks(phi).map(|c| c.iter().any(|&x| x != 0)).collect();
        let b_nz: Vec<bool> = b.chunks(phi).map(|c| c.iter().any(|&x| x != 0)).collect();
        let mut out = CycMat::zeros(&self.field, self.rows, other.cols);
        let mut raw = vec![0i128; (2 * phi).saturating_sub(1).max(1)];
        let mut folded = vec![0i128; phi];
        for i in 0..self.rows {
            for j in 0..other.cols {
                raw.iter_mut().for_each(|x| *x = 0);
                let mut any = false;
                for k in 0..self.cols {
                    let ea = i * self.cols + k;
                    let eb = k * other.cols + j;
                    if !a_nz[ea] || !b_nz[eb] {
                        continue;
                    }
                    any = true;
                    let ca = &a[ea * phi..ea * phi + phi];
                    let cb = &b[eb * phi..eb * phi + phi];
                    for (s, &x) in ca.iter().enumerate() {
                        if x == 0 {
                            continue;
                        }
                        for (t, &y) in cb.iter().enumerate() {
                            if y != 0 {
                                raw[s + t] = raw[s + t].checked_add(x as i128 * y as i128)?;
                            }
                        }
                    }
                }
                if !any {
                    continue;
                }
                folded.iter_mut().for_each(|x| *x = 0);
                self.field.fold_i128(&raw, &mut folded)?;
                let span = out.span(i, j);
                for (slot, &v) in out.data[span].iter_mut().zip(&folded) {
                    if v != 0 {
                        *slot = Rat::from_i128(v, den);
                    }
                }
            }
        }
        Some(out)
    }

    fn mul_generic(&self, other: &CycMat) -> CycMat {
        let phi = self.phi();
        let mut out = CycMat::zeros(&self.field, self.rows, other.cols);
        let mut raw = vec![Rat::ZERO; (2 * phi).saturating_sub(1).max(1)];
        for i in 0..self.rows {
            for j in 0..other.cols {
                raw.iter_mut().for_each(|x| *x = Rat::ZERO);
                for k in 0..self.cols {
                    let ca = self.coords(i, k);
                    let cb = other.coords(k, j);
                    for (s, x) in ca.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        for (t, y) in cb.iter().enumerate() {
                            if !y.is_zero() {
                                raw[s + t] += &(x * y);
                            }
                        }
                    }
                }
                let span = out.span(i, j);
                self.field.fold_into(&raw, &mut out.data[span]);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    if !self.entry_is_zero(i, j) && !x.is_zero() {
                        acc = &acc + &(&self.get(i, j) * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (CycMat, Vec<usize>) {
        let mut rows: Vec<Vec<CycNum>> = (0..self.rows).map(|i| self.row(i)).collect();
        let pivots = rref_in_place(&mut rows, self.cols);
        (CycMat::from_rows(&self.field, self.cols, &rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<CycMat, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch);
        }
        let n = self.rows;
        let mut rows: Vec<Vec<CycNum>> = (0..n)
            .map(|i| {
                let mut r = self.row(i);
                r.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let inv: Vec<Vec<CycNum>> = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Ok(CycMat::from_rows(&self.field, n, &inv))
    }

    /// Copy of the matrix inside Q(ζ_N) for a multiple N of the conductor.
    pub fn embed(&self, target: &Arc<CycField>) -> Result<CycMat, LinalgError> {
        if target.conductor() == self.field.conductor() {
            return Ok(self.clone());
        }
        let mut m = CycMat::zeros(target, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.entry_is_zero(i, j) {
                    let x = self
                        .get(i, j)
                        .embed(target)
                        .map_err(|_| LinalgError::ConductorMismatch)?;
                    m.set(i, j, &x);
                }
            }
        }
        Ok(m)
    }

    /// Block `[r0, r0+rows) × [c0, c0+cols)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> CycMat {
        CycMat::from_fn(&self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    /// Rows rendered as `[a, b; c, d]` with canonical entry text.
    pub fn render(&self) -> String {
        let mut s = String::from("[");
        for i in 0..self.rows {
            if i > 0 {
                s.push_str("; ");
            }
            for j in 0..self.cols {
                if j > 0 {
                    s.push_str(", ");
                }
                s.push_str(&alloc::format!("{}", self.get(i, j)));
            }
        }
        s.push(']');
        s
    }
}

impl fmt::Debug for CycMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @{}", self.render(), self.field.conductor())
    }
}

/// Gauss–Jordan elimination on the first `width` columns; returns pivot columns.
/// Zero rows end up at the bottom.
pub(crate) fn rref_in_place(rows: &mut [Vec<CycNum>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            let scaled: Vec<CycNum> = rows[r].iter().map(|x| &inv * x).collect();
            rows[r] = scaled;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(field: &Arc<CycField>, rows: &[&[i64]]) -> CycMat {
        let n = rows[0].len();
        let entries: Vec<CycNum> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| field.int(v)))
            .collect();
        CycMat::from_entries(field, rows.len(), n, &entries)
    }

    #[test]
    fn integral_and_generic_products_agree() {
        let f = CycField::new(7);
        let z = f.zeta_pow(1);
        let a = CycMat::from_fn(&f, 3, 3, |i, j| {
            (&z.pow((i + 2 * j) as u32) + &f.rational(Rat::new(i as i64 + 1, 3))).clone()
        });
        let b = CycMat::from_fn(&f, 3, 2, |i, j| f.rational(Rat::new(j as i64 - i as i64, 5)));
        assert_eq!(a.mul_integral(&b).unwrap(), a.mul_generic(&b));
        let huge = CycMat::scalar(&f.rational(Rat::new(i64::MAX, 3)), 3);
        let p = huge.mul(&huge);
        assert_eq!(p, huge.mul_generic(&huge));
    }

    #[test]
    fn inverse_round_trip() {
        let f = CycField::new(3);
        let z = f.zeta_pow(1);
        let m = CycMat::from_fn(&f, 3, 3, |i, j| {
            if i == j {
                &f.int(2) + &z
            } else {
                f.rational(Rat::new((i * 3 + j) as i64, 2))
            }
        });
        let inv = m.inverse().unwrap();
        assert!(inv.mul(&m).is_identity());
        let sing = mat(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn rank_and_scalars() {
        let f = CycField::new(3);
        assert_eq!(mat(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]).rank(), 2);
        assert_eq!(CycMat::identity(&f, 4).scalar_value(), Some(f.one()));
        assert!(mat(&f, &[&[1, 1], &[0, 1]]).scalar_value().is_none());
    }
}
