//! Basis-change-invariant quantities and polynomial identity predicates.
//!
//! Multilinear identities (commutative, anticommutative, associative) reduce
//! to checks on basis tuples. The left-alternative and Jordan identities are
//! not multilinear and are expanded on fully symbolic vectors, so a passing
//! check is a proof of the identity over any field containing the rationals.

use super::AlgebraStructure;
use crate::exact::{ExactMatrix, MPoly, Ring, Scalar};

type RatMatrix = ExactMatrix<Scalar>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Invariants {
    pub commutative: bool,
    pub anticommutative: bool,
    pub associative: bool,
    pub left_alternative: bool,
    pub jordan: bool,
    pub annihilator_dim: usize,
    pub square_dim: usize,
}

/// Structure constants with polynomial entries; used to certify identities
/// for whole parametric families at once.
#[derive(Clone, Debug)]
pub struct SymAlgebra {
    dim: usize,
    nparams: usize,
    constants: Vec<MPoly>,
}

impl SymAlgebra {
    /// `constants[(i*dim + j)*dim + k]` over `nparams` parameter variables.
    pub fn new(dim: usize, nparams: usize, constants: Vec<MPoly>) -> Self {
        assert_eq!(constants.len(), dim * dim * dim);
        let constants = constants.into_iter().map(|c| c.widen_to(nparams)).collect();
        SymAlgebra { dim, nparams, constants }
    }

    pub fn from_structure(a: &AlgebraStructure) -> Self {
        let dim = a.dim();
        SymAlgebra {
            dim,
            nparams: 0,
            constants: a
                .constants()
                .iter()
                .map(|c| MPoly::constant(0, c.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &MPoly {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Instantiates the parameters at a rational point.
    pub fn instantiate(&self, params: &[Scalar]) -> AlgebraStructure {
        assert_eq!(params.len(), self.nparams);
        let mut out = AlgebraStructure::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set(i, j, k, self.get(i, j, k).eval(params));
                }
            }
        }
        out
    }

    /// Substitutes some parameters, keeping the rest symbolic.
    pub fn specialize(&self, assignment: &[Option<Scalar>]) -> SymAlgebra {
        assert_eq!(assignment.len(), self.nparams);
        SymAlgebra {
            dim: self.dim,
            nparams: self.nparams,
            constants: self
                .constants
                .iter()
                .map(|c| c.substitute(assignment))
                .collect(),
        }
    }

    fn product(&self, total_vars: usize, x: &[MPoly], y: &[MPoly]) -> Vec<MPoly> {
        let n = self.dim;
        let mut out = vec![MPoly::zero(total_vars); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].mul(&y[j]);
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].add(&xy.mul(&c.widen_to(total_vars)));
                    }
                }
            }
        }
        out
    }

    /// Two generic vectors in variables appended after the parameters.
    fn symbolic_vectors(&self) -> (usize, Vec<MPoly>, Vec<MPoly>) {
        let total = self.nparams + 2 * self.dim;
        let x: Vec<MPoly> = (0..self.dim)
            .map(|i| MPoly::var(total, self.nparams + i))
            .collect();
        let y: Vec<MPoly> = (0..self.dim)
            .map(|i| MPoly::var(total, self.nparams + self.dim + i))
            .collect();
        (total, x, y)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.get(i, j, k) == self.get(j, i, k)))
        })
    }

    pub fn is_anticommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.get(i, j, k).add(self.get(j, i, k)).is_zero()
                        && (i != j || self.get(i, i, k).is_zero())
                })
            })
        })
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        let total = self.nparams;
        for i in 0..n {
            for j in 0..n {
                let ij: Vec<MPoly> = (0..n).map(|k| self.get(i, j, k).clone()).collect();
                for l in 0..n {
                    let jl: Vec<MPoly> = (0..n).map(|k| self.get(j, l, k).clone()).collect();
                    let el: Vec<MPoly> = (0..n)
                        .map(|k| {
                            MPoly::constant(total, if k == l { Scalar::from_integer(1.into()) } else { Scalar::zero() })
                        })
                        .collect();
                    let ei: Vec<MPoly> = (0..n)
                        .map(|k| {
                            MPoly::constant(total, if k == i { Scalar::from_integer(1.into()) } else { Scalar::zero() })
                        })
                        .collect();
                    let lhs = self.product(total, &ij, &el);
                    let rhs = self.product(total, &ei, &jl);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `(xx)y = x(xy)` on symbolic vectors.
    pub fn is_left_alternative(&self) -> bool {
        let (total, x, y) = self.symbolic_vectors();
        let xx = self.product(total, &x, &x);
        let lhs = self.product(total, &xx, &y);
        let rhs = self.product(total, &x, &self.product(total, &x, &y));
        lhs == rhs
    }

    /// Commutative plus the Jordan identity `(xy)(xx) = x(y(xx))`.
    pub fn is_jordan(&self) -> bool {
        if !self.is_commutative() {
            return false;
        }
        let (total, x, y) = self.symbolic_vectors();
        let xx = self.product(total, &x, &x);
        let xy = self.product(total, &x, &y);
        let lhs = self.product(total, &xy, &xx);
        let rhs = self.product(total, &x, &self.product(total, &y, &xx));
        lhs == rhs
    }

    /// The square map vanishes on the given symbolic subspace span.
    pub fn squares_vanish_on_span(&self, basis_indices: &[usize]) -> bool {
        let total = self.nparams + basis_indices.len();
        let mut v = vec![MPoly::zero(total); self.dim];
        for (pos, &idx) in basis_indices.iter().enumerate() {
            v[idx] = MPoly::var(total, self.nparams + pos);
        }
        self.product(total, &v, &v).iter().all(MPoly::is_zero)
    }
}

trait WidenTo {
    fn widen_to(&self, nvars: usize) -> MPoly;
}

impl WidenTo for MPoly {
    fn widen_to(&self, nvars: usize) -> MPoly {
        if self.nvars() >= nvars {
            self.clone()
        } else {
            self.widen(nvars)
        }
    }
}

/// Kernel dimension of the combined left/right multiplication map.
pub fn annihilator_dim(a: &AlgebraStructure) -> usize {
    let n = a.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| a.get(i, j, k).clone()).collect::<Vec<_>>());
            rows.push((0..n).map(|i| a.get(j, i, k).clone()).collect::<Vec<_>>());
        }
    }
    let m = RatMatrix::from_rows(rows);
    n - m.rank_exact()
}

/// Dimension of the span of all basis products.
pub fn square_dim(a: &AlgebraStructure) -> usize {
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            rows.push(a.basis_product(i, j));
        }
    }
    RatMatrix::from_rows(rows).rank_exact()
}

pub fn invariants(a: &AlgebraStructure) -> Invariants {
    let sym = SymAlgebra::from_structure(a);
    Invariants {
        commutative: sym.is_commutative(),
        anticommutative: sym.is_anticommutative(),
        associative: sym.is_associative(),
        left_alternative: sym.is_left_alternative(),
        jordan: sym.is_jordan(),
        annihilator_dim: annihilator_dim(a),
        square_dim: square_dim(a),
    }
}

#[cfg(test)]
mod tests {
    use super::super::catalog;
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn zero_algebra_satisfies_everything() {
        let z = AlgebraStructure::zero(3);
        let inv = invariants(&z);
        assert!(inv.commutative && inv.anticommutative && inv.associative);
        assert!(inv.left_alternative && inv.jordan);
        assert_eq!(inv.annihilator_dim, 3);
        assert_eq!(inv.square_dim, 0);
    }

    #[test]
    fn eta2_profile() {
        let eta2 = catalog("eta", &[int(2)], 5).unwrap();
        let inv = invariants(&eta2);
        assert!(inv.anticommutative);
        assert!(!inv.jordan);
        assert_eq!(inv.square_dim, 1);
        assert_eq!(inv.annihilator_dim, 1);
    }

    #[test]
    fn e4_profile() {
        // (e1e1)e2 = e1+e2 while e1(e1e2) = 2e1+e2, so E_4 is not
        // associative (and not left alternative either).
        let e4 = catalog("E4", &[], 2).unwrap();
        let inv = invariants(&e4);
        assert!(!inv.associative);
        assert!(!inv.commutative);
        assert!(!inv.left_alternative);
        assert_eq!(inv.annihilator_dim, 0);
        assert_eq!(inv.square_dim, 2);
    }

    #[test]
    fn d2_jordan_cases() {
        let j0 = catalog("D2", &[int(0), int(0)], 2).unwrap();
        let j1 = catalog("D2", &[int(1), int(1)], 2).unwrap();
        assert!(invariants(&j0).jordan && invariants(&j0).associative);
        assert!(invariants(&j1).jordan);
        let generic = catalog("D2", &[int(2), int(2)], 2).unwrap();
        assert!(!invariants(&generic).jordan);
    }

    #[test]
    fn nu_half_is_commutative_jordan() {
        let nu = catalog("nu", &[frac(1, 2)], 3).unwrap();
        let inv = invariants(&nu);
        assert!(inv.commutative);
        assert!(inv.jordan);
    }

    #[test]
    fn invariants_stable_under_basis_change() {
        let samples = [
            catalog("n3", &[], 3).unwrap(),
            catalog("E4", &[], 2).unwrap().pad_trivial(1),
            catalog("nu", &[int(2)], 3).unwrap(),
        ];
        let g = RatMatrix::from_rows(vec![
            vec![int(1), int(1), int(0)],
            vec![int(0), int(2), int(1)],
            vec![int(1), int(0), int(1)],
        ]);
        for a in samples {
            let b = a.apply_basis_change(&g).unwrap();
            assert_eq!(invariants(&a), invariants(&b));
        }
    }

    #[test]
    fn direct_sum_shifts_annihilator() {
        let a = catalog("A3", &[], 2).unwrap();
        let inv_a = invariants(&a);
        let b = a.pad_trivial(2);
        let inv_b = invariants(&b);
        assert_eq!(inv_b.annihilator_dim, inv_a.annihilator_dim + 2);
        assert_eq!(inv_b.square_dim, inv_a.square_dim);
        assert_eq!(inv_b.jordan, inv_a.jordan);
        assert_eq!(inv_b.left_alternative, inv_a.left_alternative);
    }

    #[test]
    fn symbolic_family_check() {
        // D_2^{a,a} is commutative for every a.
        let p = MPoly::var(1, 0);
        let mut constants = vec![MPoly::zero(1); 8];
        let n = 2;
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        constants[idx(0, 0, 0)] = MPoly::constant(1, int(1));
        constants[idx(0, 1, 1)] = p.clone();
        constants[idx(1, 0, 1)] = p.clone();
        let fam = SymAlgebra::new(2, 1, constants);
        assert!(fam.is_commutative());
        assert!(!fam.is_jordan()); // fails for generic a
        let at_zero = fam.specialize(&[Some(int(0))]);
        assert!(at_zero.is_jordan());
        assert_eq!(fam.instantiate(&[int(3)]).get(0, 1, 1), &int(3));
    }
}
