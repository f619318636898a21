//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision: [`IntMatrix`] holds `BigInt`
//! entries, [`RatMatrix`] holds `BigRational` entries. Determinants use the
//! Bareiss fraction-free elimination, inverses use Gauss-Jordan over the
//! rationals, and the Smith/Hermite normal forms carry their unimodular
//! transform matrices so callers can extract lattice bases and projections.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::{Error, Result};

/// Integer vector, one entry per coordinate.
pub type IntVector = Vec<BigInt>;

/// Dense matrix over the integers, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Dense matrix over the rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

/// Smith decomposition `u * a * v = s` of an integer matrix.
///
/// `u` and `v` are unimodular; `s` is diagonal with nonnegative entries
/// `s[0][0] | s[1][1] | ...` (trailing zeros allowed).
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl IntMatrix {
    /// Builds a matrix from rows. All rows must have equal length.
    pub fn from_rows(rows: Vec<IntVector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Structural("ragged rows in matrix".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix from columns.
    pub fn from_cols(cols: Vec<IntVector>) -> Result<Self> {
        let m = Self::from_rows(cols)?;
        Ok(m.transpose())
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> IntVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Structural(format!(
                "matrix product shape mismatch: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Keeps the rows in `range`, in order. Column count is preserved even
    /// when the range is empty.
    pub fn row_slice(&self, range: std::ops::Range<usize>) -> Self {
        let rows = range.len();
        let data = range.flat_map(|i| self.row(i).to_vec()).collect();
        Self { rows, cols: self.cols, data }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    /// Determinant by Bareiss fraction-free elimination. Square matrices
    /// only; the empty matrix has determinant 1.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Structural(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    // Exact by the Bareiss identity; prev divides num.
                    a[(i, j)] = num / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    /// Exact inverse over the rationals. Fails on non-square or singular
    /// input.
    pub fn inverse(&self) -> Result<RatMatrix> {
        self.to_rational().inverse()
    }

    /// Smith decomposition with deterministic pivoting: the pivot is the
    /// minimal-absolute-value nonzero entry of the trailing submatrix,
    /// ties broken by lowest (row, col).
    pub fn smith_normal_form(&self) -> Smith {
        let (r, c) = (self.rows, self.cols);
        let mut s = self.clone();
        let mut u = Self::identity(r);
        let mut v = Self::identity(c);

        for t in 0..r.min(c) {
            if Self::min_abs_entry(&s, t).is_none() {
                break;
            }
            loop {
                let (pi, pj) = Self::min_abs_entry(&s, t).expect("nonzero entry exists");
                if pi != t {
                    s.swap_rows(t, pi);
                    u.swap_rows(t, pi);
                }
                if pj != t {
                    s.swap_cols(t, pj);
                    v.swap_cols(t, pj);
                }

                let mut clean = true;
                for i in t + 1..r {
                    if s[(i, t)].is_zero() {
                        continue;
                    }
                    let q = &s[(i, t)] / &s[(t, t)];
                    if !q.is_zero() {
                        s.row_sub_mul(i, t, &q);
                        u.row_sub_mul(i, t, &q);
                    }
                    if !s[(i, t)].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..c {
                    if s[(t, j)].is_zero() {
                        continue;
                    }
                    let q = &s[(t, j)] / &s[(t, t)];
                    if !q.is_zero() {
                        s.col_sub_mul(j, t, &q);
                        v.col_sub_mul(j, t, &q);
                    }
                    if !s[(t, j)].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // Row and column are clear; force the pivot to divide the
                // rest of the submatrix before moving on, which yields the
                // divisibility chain along the diagonal.
                let offender = (t + 1..r)
                    .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&s[(i, j)] % &s[(t, t)]).is_zero());
                match offender {
                    Some((i, _)) => {
                        s.row_add(t, i);
                        u.row_add(t, i);
                    }
                    None => break,
                }
            }
            if s[(t, t)].is_negative() {
                s.row_negate(t);
                u.row_negate(t);
            }
        }
        Smith { u, s, v }
    }

    /// Row-style Hermite normal form: returns `(h, u)` with `h = u * self`,
    /// `u` unimodular, pivots positive, entries above each pivot reduced
    /// into `[0, pivot)`. Canonical for a given row lattice.
    pub fn hermite_normal_form(&self) -> (Self, Self) {
        let (r, c) = (self.rows, self.cols);
        let mut h = self.clone();
        let mut u = Self::identity(r);
        let mut pivot_row = 0;
        for col in 0..c {
            if pivot_row == r {
                break;
            }
            // Euclidean reduction in this column among rows >= pivot_row.
            loop {
                let best = (pivot_row..r)
                    .filter(|&i| !h[(i, col)].is_zero())
                    .min_by_key(|&i| (h[(i, col)].abs(), i));
                let Some(best) = best else { break };
                if best != pivot_row {
                    h.swap_rows(pivot_row, best);
                    u.swap_rows(pivot_row, best);
                }
                let mut any_left = false;
                for i in pivot_row + 1..r {
                    if h[(i, col)].is_zero() {
                        continue;
                    }
                    let q = &h[(i, col)] / &h[(pivot_row, col)];
                    h.row_sub_mul(i, pivot_row, &q);
                    u.row_sub_mul(i, pivot_row, &q);
                    if !h[(i, col)].is_zero() {
                        any_left = true;
                    }
                }
                if !any_left {
                    break;
                }
            }
            if h[(pivot_row, col)].is_zero() {
                continue;
            }
            if h[(pivot_row, col)].is_negative() {
                h.row_negate(pivot_row);
                u.row_negate(pivot_row);
            }
            for i in 0..pivot_row {
                let q = h[(i, col)].div_floor(&h[(pivot_row, col)]);
                if !q.is_zero() {
                    h.row_sub_mul(i, pivot_row, &q);
                    u.row_sub_mul(i, pivot_row, &q);
                }
            }
            pivot_row += 1;
        }
        (h, u)
    }

    fn min_abs_entry(m: &Self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                if m[(i, j)].is_zero() {
                    continue;
                }
                let a = m[(i, j)].abs();
                let better = match &best {
                    None => true,
                    Some((b, _, _)) => a < *b,
                };
                if better {
                    best = Some((a, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[i] -= q * row[t]
    fn row_sub_mul(&mut self, i: usize, t: usize, q: &BigInt) {
        for j in 0..self.cols {
            let sub = q * &self[(t, j)];
            self[(i, j)] -= sub;
        }
    }

    /// col[j] -= q * col[t]
    fn col_sub_mul(&mut self, j: usize, t: usize, q: &BigInt) {
        for i in 0..self.rows {
            let sub = q * &self[(i, t)];
            self[(i, j)] -= sub;
        }
    }

    /// row[t] += row[i]
    fn row_add(&mut self, t: usize, i: usize) {
        for j in 0..self.cols {
            let add = self[(i, j)].clone();
            self[(t, j)] += add;
        }
    }

    fn row_negate(&mut self, i: usize) {
        for j in 0..self.cols {
            let neg = -self[(i, j)].clone();
            self[(i, j)] = neg;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl RatMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigRational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigRational::one();
        }
        Self { rows: n, cols: n, data }
    }

    /// Gauss-Jordan inverse. Fails on non-square or singular input.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Structural(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let pivot = (k..n).find(|&r| !a[(r, k)].is_zero());
            let Some(pivot) = pivot else {
                return Err(Error::Structural("singular matrix has no inverse".into()));
            };
            if pivot != k {
                a.swap_rows(k, pivot);
                inv.swap_rows(k, pivot);
            }
            let p = a[(k, k)].clone();
            for j in 0..n {
                a[(k, j)] /= p.clone();
                inv[(k, j)] /= p.clone();
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    let s = &f * &a[(k, j)];
                    a[(i, j)] -= s;
                    let s = &f * &inv[(k, j)];
                    inv[(i, j)] -= s;
                }
            }
        }
        Ok(inv)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Structural(format!(
                "matrix product shape mismatch: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = vec![BigRational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    data[i * other.cols + j] += prod;
                }
            }
        }
        Ok(Self { rows: self.rows, cols: other.cols, data })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

/// Divides a nonzero integer vector by the (positive) gcd of its entries.
/// The direction is preserved, never flipped: `(-2, -4)` maps to `(-1, -2)`.
pub fn primitive_vector(v: &[BigInt]) -> Result<IntVector> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return Err(Error::Structural("primitive vector of the zero vector is undefined".into()));
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Projection onto the quotient by the saturation of the span of
/// `generators` (k independent vectors in Z^n): a surjective integer
/// `(n-k) x n` matrix `P` with `ker P` equal to the saturation, taken from
/// the bottom rows of the unimodular `u` in the Smith decomposition of the
/// generator matrix. Deterministic given the generator order; changing the
/// order changes `P` only by a unimodular left factor.
pub fn saturation_projection(generators: &[IntVector]) -> Result<IntMatrix> {
    if generators.is_empty() {
        return Err(Error::Structural("saturation projection needs at least one generator".into()));
    }
    let n = generators[0].len();
    if generators.iter().any(|g| g.len() != n) {
        return Err(Error::Structural("generators have mixed lengths".into()));
    }
    let k = generators.len();
    if k > n {
        return Err(Error::Structural(format!("{k} generators cannot be independent in Z^{n}")));
    }
    let a = IntMatrix::from_cols(generators.to_vec())?;
    let smith = a.smith_normal_form();
    let rank = (0..k).take_while(|&i| !smith.s[(i, i)].is_zero()).count();
    if rank != k {
        return Err(Error::Structural("generators are linearly dependent".into()));
    }
    Ok(smith.u.row_slice(k..n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> IntVector {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn det_three_by_three() {
        assert_eq!(m(&[&[1, 0, 1], &[0, 0, 2], &[0, 1, 4]]).det().unwrap(), BigInt::from(-2));
        assert_eq!(m(&[&[1, 0, 1], &[0, 1, 2], &[0, 0, 4]]).det().unwrap(), BigInt::from(4));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), BigInt::zero());
        assert_eq!(IntMatrix::identity(0).det().unwrap(), BigInt::one());
    }

    #[test]
    fn smith_diagonals() {
        let cases: Vec<(IntMatrix, Vec<i64>)> = vec![
            (m(&[&[2, 1], &[1, 1]]), vec![1, 1]),
            (m(&[&[2, 0], &[0, 4]]), vec![2, 4]),
            (m(&[&[6, 0], &[0, 4]]), vec![2, 12]),
            // Determinantal divisors: gcd of entries 2, gcd of 2x2 minors
            // 4, determinant 624, so the diagonal is (2, 4/2, 624/4).
            (m(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]), vec![2, 2, 156]),
        ];
        for (a, want) in cases {
            let smith = a.smith_normal_form();
            let got: Vec<i64> = (0..a.rows().min(a.cols()))
                .map(|i| smith.s[(i, i)].to_i64().unwrap())
                .collect();
            assert_eq!(got, want, "diagonal mismatch for {a:?}");
            check_smith(&a, &smith);
        }
    }

    fn check_smith(a: &IntMatrix, smith: &Smith) {
        let uav = smith.u.mul(a).unwrap().mul(&smith.v).unwrap();
        assert_eq!(uav, smith.s);
        assert_eq!(smith.u.det().unwrap().abs(), BigInt::one());
        assert_eq!(smith.v.det().unwrap().abs(), BigInt::one());
        let d = a.rows().min(a.cols());
        for i in 0..d {
            assert!(!smith.s[(i, i)].is_negative());
            if i + 1 < d && !smith.s[(i, i)].is_zero() && !smith.s[(i + 1, i + 1)].is_zero() {
                assert!((&smith.s[(i + 1, i + 1)] % &smith.s[(i, i)]).is_zero());
            }
        }
        for i in 0..smith.s.rows() {
            for j in 0..smith.s.cols() {
                if i != j {
                    assert!(smith.s[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn smith_rectangular() {
        let a = m(&[&[1, 2, 4]]);
        let smith = a.smith_normal_form();
        assert_eq!(smith.s[(0, 0)], BigInt::one());
        check_smith(&a, &smith);
    }

    #[test]
    fn primitive_vector_examples() {
        assert_eq!(primitive_vector(&v(&[-2, -4])).unwrap(), v(&[-1, -2]));
        assert_eq!(primitive_vector(&v(&[0, -3, 6])).unwrap(), v(&[0, -1, 2]));
        assert_eq!(primitive_vector(&v(&[5])).unwrap(), v(&[1]));
        assert!(primitive_vector(&v(&[0, 0])).is_err());
    }

    #[test]
    fn saturation_projection_kills_generators() {
        let p = saturation_projection(&[v(&[1, 2, 4])]).unwrap();
        assert_eq!((p.rows(), p.cols()), (2, 3));
        let a = IntMatrix::from_cols(vec![v(&[1, 2, 4])]).unwrap();
        let pa = p.mul(&a).unwrap();
        assert_eq!(pa, IntMatrix::zero(2, 1));
        // Surjectivity: the Smith form of p has all-unit diagonal.
        let smith = p.smith_normal_form();
        assert_eq!(smith.s[(0, 0)], BigInt::one());
        assert_eq!(smith.s[(1, 1)], BigInt::one());
    }

    #[test]
    fn saturation_projection_rejects_dependent() {
        assert!(saturation_projection(&[v(&[1, 2]), v(&[2, 4])]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[1, 0, 1], &[0, 1, 2], &[0, 0, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.to_rational().mul(&inv).unwrap().is_identity());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn hermite_is_canonical() {
        let a = m(&[&[2, 3, 6, 2], &[5, 6, 1, 6], &[8, 3, 1, 1]]);
        let (h, u) = a.hermite_normal_form();
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), BigInt::one());
        // Same row lattice after an unimodular shuffle: identical HNF.
        let g = m(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let (h2, _) = g.mul(&a).unwrap().hermite_normal_form();
        assert_eq!(h, h2);
    }
}
