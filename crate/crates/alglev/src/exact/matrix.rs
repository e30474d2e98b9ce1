//! Exact rectangular matrices over a coefficient ring.

use super::{divisors, int, Ring, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use std::fmt;
use thiserror::Error;

/// Rectangular matrix with entries in an exact coefficient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("characteristic polynomial has an irreducible factor of degree >= 2 over the rationals")]
    NonSplitSpectrum,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        ExactMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].add(&rhs[(i, j)]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].sub(&rhs[(i, j)]))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].mul(c))
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc.add(&self[(i, k)].mul(&rhs[(k, j)]));
            }
            acc
        })
    }

    pub fn pow(&self, mut e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> ExactMatrix<S> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Exact rank over the fraction field of the entry ring, computed by
    /// fraction-free Bareiss elimination with full pivoting. Pivot columns
    /// are taken densest first, which keeps intermediate entries small on
    /// the sparse matrices arising from structure constants.
    pub fn rank_exact(&self) -> usize {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut prev = R::one();
        let mut rank = 0;
        for step in 0..rows.min(cols) {
            let mut col_order: Vec<usize> = (step..cols).collect();
            col_order.sort_by_key(|&j| {
                let nonzeros = (step..rows).filter(|&i| !a[(i, j)].is_zero()).count();
                usize::MAX - nonzeros
            });
            let mut pivot = None;
            'search: for &j in &col_order {
                for i in step..rows {
                    if !a[(i, j)].is_zero() {
                        pivot = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap_rows(step, pi);
            a.swap_cols(step, pj);
            let pv = a[(step, step)].clone();
            for i in step + 1..rows {
                for j in step + 1..cols {
                    let num = pv.mul(&a[(i, j)]).sub(&a[(i, step)].mul(&a[(step, j)]));
                    a[(i, j)] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact in an integral domain");
                }
                a[(i, step)] = R::zero();
            }
            prev = pv;
            rank += 1;
        }
        rank
    }

    /// Determinant by cofactor expansion; intended for small symbolic
    /// matrices where fraction-free elimination would force divisions.
    pub fn det_ring(&self) -> R {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        if n == 1 {
            return self[(0, 0)].clone();
        }
        let mut acc = R::zero();
        for j in 0..n {
            if self[(0, j)].is_zero() {
                continue;
            }
            let minor = ExactMatrix::from_fn(n - 1, n - 1, |r, c| {
                self[(r + 1, if c < j { c } else { c + 1 })].clone()
            });
            let term = self[(0, j)].mul(&minor.det_ring());
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    /// Adjugate matrix: `adj(A) * A = det(A) * I`.
    pub fn adjugate_ring(&self) -> ExactMatrix<R> {
        assert!(self.is_square());
        let n = self.rows;
        ExactMatrix::from_fn(n, n, |i, j| {
            let minor = ExactMatrix::from_fn(n - 1, n - 1, |r, c| {
                self[(if r < j { r } else { r + 1 }, if c < i { c } else { c + 1 })].clone()
            });
            let d = minor.det_ring();
            if (i + j) % 2 == 0 {
                d
            } else {
                d.neg()
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<R> std::ops::Index<(usize, usize)> for ExactMatrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.entries[i * self.cols + j]
    }
}

impl<R> std::ops::IndexMut<(usize, usize)> for ExactMatrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.entries[i * self.cols + j]
    }
}

impl<R: Ring> fmt::Display for ExactMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Field-only operations, used where entries are plain rationals.
pub type RatMatrix = ExactMatrix<Scalar>;

impl RatMatrix {
    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].clone().recip();
            for j in c..cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..cols {
                        let v = &self[(i, j)] - &factor * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Scalar::zero();
            };
            if p != k {
                a.swap_rows(k, p);
                det = -det;
            }
            let pv = a[(k, k)].clone();
            det *= &pv;
            for i in k + 1..n {
                let factor = &a[(i, k)] / &pv;
                for j in k..n {
                    let v = &a[(i, j)] - &factor * &a[(k, j)];
                    a[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = ExactMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(ExactMatrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// Solves `self * x = b`; `None` when inconsistent or underdetermined.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = ExactMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        if pivots.len() < self.cols {
            return None; // underdetermined
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Basis of the right kernel `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut a = self.clone();
        let pivots = a.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -a[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Monic characteristic polynomial coefficients `[c_0, ..., c_{n-1}, 1]`
    /// via the Faddeev-LeVerrier recurrence.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut mk = RatMatrix::identity(n);
        for k in 1..=n {
            mk = self.matmul(&mk);
            let c = -(mk.trace() / int(k as i64));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                mk[(i, i)] = &mk[(i, i)] + &c;
            }
        }
        coeffs
    }
}

fn horner(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &acc * x + c;
    }
    acc
}

/// Divides the polynomial by `(lambda - root)`, assuming the root is exact.
fn deflate(coeffs: &[Scalar], root: &Scalar) -> Vec<Scalar> {
    let n = coeffs.len() - 1;
    let mut out = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for k in (0..n).rev() {
        carry = &coeffs[k + 1] + root * &carry;
        out[k] = carry.clone();
    }
    out
}

/// All eigenvalues with algebraic multiplicities, provided the spectrum is
/// rational; multiplicities sum to the dimension on success.
pub fn rational_eigenvalues(m: &RatMatrix) -> Result<Vec<(Scalar, usize)>, SpectrumError> {
    assert!(m.is_square());
    let mut coeffs = m.char_poly();

    let mut eigs: Vec<(Scalar, usize)> = Vec::new();
    let mut add_root = |root: Scalar, coeffs: &mut Vec<Scalar>| {
        let mut mult = 0;
        while coeffs.len() > 1 && horner(coeffs, &root).is_zero() {
            *coeffs = deflate(coeffs, &root);
            mult += 1;
        }
        if mult > 0 {
            eigs.push((root, mult));
        }
    };

    add_root(Scalar::zero(), &mut coeffs);

    if coeffs.len() > 1 {
        // Clear denominators and apply the rational root theorem.
        let mut lcm = BigInt::from(1);
        for c in coeffs.iter() {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let a0 = ints[0].clone();
        let alead = ints.last().unwrap().clone();
        debug_assert!(!num_traits::Zero::is_zero(&a0));
        for p in divisors(&a0) {
            for q in divisors(&alead) {
                if coeffs.len() == 1 {
                    break;
                }
                for sign in [1i64, -1] {
                    let root = Scalar::new(&p * BigInt::from(sign), q.clone());
                    add_root(root, &mut coeffs);
                }
            }
        }
    }

    if coeffs.len() > 1 {
        return Err(SpectrumError::NonSplitSpectrum);
    }
    eigs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(eigs)
}

#[cfg(test)]
mod tests {
    use super::super::{frac, MPoly};
    use super::*;

    fn rat(rows: Vec<Vec<i64>>) -> RatMatrix {
        ExactMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(int).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(RatMatrix::identity(2).rank_exact(), 2);
        assert_eq!(RatMatrix::zero(3, 3).rank_exact(), 0);
    }

    #[test]
    fn rank_over_polynomial_fraction_field() {
        // [[x1, x1^2], [1, x1]] has rank 1 over the fraction field:
        // the second row is x1^{-1} times the first.
        let x = MPoly::var(1, 0);
        let m = ExactMatrix::from_rows(vec![
            vec![x.clone(), x.mul(&x)],
            vec![MPoly::one(), x.clone()],
        ]);
        assert_eq!(m.rank_exact(), 1);
        // Cross-check: the 2x2 determinant x1*x1 - x1^2 vanishes.
        let det = m[(0, 0)].mul(&m[(1, 1)]).sub(&m[(0, 1)].mul(&m[(1, 0)]));
        assert!(det.is_zero());
    }

    #[test]
    fn rank_agrees_with_rref_on_random_integer_matrices() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let rows = 1 + (next() % 5) as usize;
            let cols = 1 + (next() % 5) as usize;
            let m = RatMatrix::from_fn(rows, cols, |_, _| int((next() % 7) as i64 - 3));
            let mut r = m.clone();
            let pivots = r.rref();
            assert_eq!(m.rank_exact(), pivots.len());
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = rat(vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), RatMatrix::identity(2));
        let x = m.solve(&[int(3), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(rat(vec![vec![1, 1], vec![2, 2]]).inverse().is_none());
    }

    #[test]
    fn eigenvalues_nilpotent_and_diagonal() {
        let nil = rat(vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(rational_eigenvalues(&nil).unwrap(), vec![(int(0), 2)]);
        let diag = rat(vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(
            rational_eigenvalues(&diag).unwrap(),
            vec![(int(1), 1), (int(2), 1)]
        );
    }

    #[test]
    fn eigenvalues_rotation_is_nonsplit() {
        let rot = rat(vec![vec![0, -1], vec![1, 0]]);
        assert_eq!(
            rational_eigenvalues(&rot),
            Err(SpectrumError::NonSplitSpectrum)
        );
    }

    #[test]
    fn eigenvalues_with_fractions() {
        let m = ExactMatrix::from_rows(vec![
            vec![frac(1, 2), int(0)],
            vec![int(3), frac(1, 2)],
        ]);
        assert_eq!(rational_eigenvalues(&m).unwrap(), vec![(frac(1, 2), 2)]);
    }

    #[test]
    fn kernel_dimension() {
        let m = rat(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in k {
            for i in 0..2 {
                let dot: Scalar = (0..3).map(|j| &m[(i, j)] * &v[j]).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
