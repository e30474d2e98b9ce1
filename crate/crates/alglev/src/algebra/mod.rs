//! Structure-constant algebras: representation, basis action, identity
//! predicates, the named-structure catalog and the `.alg` text format.

mod catalog;
mod format;
mod invariants;

pub use catalog::{catalog, catalog_entries, CatalogEntry, CatalogError};
pub use format::{parse_structure, serialize_structure, FormatError};
pub use invariants::{invariants, Invariants, SymAlgebra};

use crate::exact::{ExactMatrix, Ring, Scalar};
use std::fmt;
use thiserror::Error;

type RatMatrix = ExactMatrix<Scalar>;

/// An n-dimensional algebra given by its structure constants
/// `mu_{i,j}^k` in the fixed basis `e_1, ..., e_n` (all indices 0-based
/// in code).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraStructure {
    dim: usize,
    constants: Vec<Scalar>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisError {
    #[error("basis change matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: algebra has dim {0}, matrix is {1}x{2}")]
    DimensionMismatch(usize, usize, usize),
}

impl AlgebraStructure {
    pub fn zero(dim: usize) -> Self {
        AlgebraStructure {
            dim,
            constants: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.idx(i, j, k);
        self.constants[idx] = v;
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.constants
    }

    /// Product of the basis vectors `e_i * e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()
    }

    /// Bilinear product of coordinate vectors over any coefficient ring
    /// containing the rationals.
    pub fn product_in<R: Ring>(&self, x: &[R], y: &[R]) -> Vec<R> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![R::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].mul(&y[j]);
                for k in 0..self.dim {
                    let c = self.get(i, j, k);
                    if !Ring::is_zero(c) {
                        out[k] = out[k].add(&xy.mul(&R::from_scalar(c)));
                    }
                }
            }
        }
        out
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.product_in::<Scalar>(x, y)
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.constants.iter().all(Scalar::is_zero)
    }

    /// Structure constants in the new basis `f_i = sum_j rows[i][j] e_j`.
    pub fn change_basis(&self, rows: &RatMatrix) -> Result<AlgebraStructure, BasisError> {
        let n = self.dim;
        if rows.rows() != n || rows.cols() != n {
            return Err(BasisError::DimensionMismatch(n, rows.rows(), rows.cols()));
        }
        let inv_t = rows
            .transpose()
            .inverse()
            .ok_or(BasisError::SingularMatrix)?;
        let mut out = AlgebraStructure::zero(n);
        for i in 0..n {
            for j in 0..n {
                let fi = rows.row(i);
                let fj = rows.row(j);
                let w = self.product(fi, fj);
                for k in 0..n {
                    let coord: Scalar = (0..n).map(|r| &inv_t[(k, r)] * &w[r]).sum();
                    out.set(i, j, k, coord);
                }
            }
        }
        Ok(out)
    }

    /// The GL-action `(g * mu)(x, y) = g mu(g^{-1} x, g^{-1} y)`.
    pub fn apply_basis_change(&self, g: &RatMatrix) -> Result<AlgebraStructure, BasisError> {
        let n = self.dim;
        if g.rows() != n || g.cols() != n {
            return Err(BasisError::DimensionMismatch(n, g.rows(), g.cols()));
        }
        let h = g.inverse().ok_or(BasisError::SingularMatrix)?;
        let mut out = AlgebraStructure::zero(n);
        for i in 0..n {
            for j in 0..n {
                let x: Vec<Scalar> = (0..n).map(|r| h[(r, i)].clone()).collect();
                let y: Vec<Scalar> = (0..n).map(|r| h[(r, j)].clone()).collect();
                let w = self.product(&x, &y);
                for k in 0..n {
                    let coord: Scalar = (0..n).map(|r| &g[(k, r)] * &w[r]).sum();
                    out.set(i, j, k, coord);
                }
            }
        }
        Ok(out)
    }

    /// Direct sum with the zero algebra of dimension `extra`.
    pub fn pad_trivial(&self, extra: usize) -> AlgebraStructure {
        let n = self.dim;
        let mut out = AlgebraStructure::zero(n + extra);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set(i, j, k, self.get(i, j, k).clone());
                }
            }
        }
        out
    }

    /// Structure in the permuted basis `f_i = e_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> AlgebraStructure {
        let n = self.dim;
        assert_eq!(perm.len(), n);
        let rows = RatMatrix::from_fn(n, n, |i, j| {
            if perm[i] == j {
                Scalar::from_integer(1.into())
            } else {
                Scalar::zero()
            }
        });
        self.change_basis(&rows).expect("permutation is invertible")
    }

    /// First differing constant against `other`, as (i, j, k) 1-based.
    pub fn first_difference(&self, other: &AlgebraStructure) -> Option<(usize, usize, usize)> {
        assert_eq!(self.dim, other.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if self.get(i, j, k) != other.get(i, j, k) {
                        return Some((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        None
    }
}

impl fmt::Display for AlgebraStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serialize_structure(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn product_is_bilinear_on_catalog_sample() {
        let a3 = catalog("A3", &[], 2).unwrap();
        let x = vec![int(2), int(0)];
        let y = vec![int(3), int(0)];
        assert_eq!(a3.product(&x, &y), vec![int(0), int(6)]);
    }

    #[test]
    fn basis_change_group_action() {
        let a = catalog("n3", &[], 3).unwrap();
        let g = RatMatrix::from_rows(vec![
            vec![int(1), int(1), int(0)],
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), int(1)],
        ]);
        let h = RatMatrix::from_rows(vec![
            vec![int(2), int(0), int(1)],
            vec![int(1), int(1), int(0)],
            vec![int(0), int(0), int(1)],
        ]);
        let gh = g.matmul(&h);
        let lhs = a.apply_basis_change(&gh).unwrap();
        let rhs = a.apply_basis_change(&h).unwrap().apply_basis_change(&g).unwrap();
        assert_eq!(lhs, rhs);
        let id = RatMatrix::identity(3);
        assert_eq!(a.apply_basis_change(&id).unwrap(), a);
    }

    #[test]
    fn change_basis_matches_gl_action() {
        let a = catalog("A3", &[], 3).unwrap();
        let p = RatMatrix::from_rows(vec![
            vec![int(1), int(2), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(3), int(0), int(1)],
        ]);
        let lhs = a.change_basis(&p).unwrap();
        let g = p.transpose().inverse().unwrap();
        let rhs = a.apply_basis_change(&g).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_on_n3_flips_sign() {
        let n3 = catalog("n3", &[], 3).unwrap();
        let swapped = n3.permuted(&[1, 0, 2]);
        assert_eq!(swapped.get(0, 1, 2), &int(-1));
        assert_eq!(swapped.get(1, 0, 2), &int(1));
    }

    #[test]
    fn scaling_e1_on_a3() {
        // e1 -> 2 e1 under the GL action: mu_{1,1}^2 becomes 4... in the
        // new-basis reading f1 = 2 e1 gives mu(f1,f1) = 4 e2.
        let a3 = catalog("A3", &[], 2).unwrap();
        let rows = RatMatrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(1)]]);
        let b = a3.change_basis(&rows).unwrap();
        assert_eq!(b.get(0, 0, 1), &int(4));
    }
}
