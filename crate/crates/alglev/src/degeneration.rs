//! Parametrized-basis contractions, degeneration witnesses, IW
//! contractions, and closed invariant sets for non-degeneration arguments.
//!
//! A parametrized basis `E^t` certifies a degeneration when the structure
//! constants in that basis are polynomial in `t`: the limit at `t = 0` is
//! then a structure in the orbit closure of the source.

mod ratfunc;
mod rset;
mod witness_format;

pub use rset::{
    rset_a1, rset_a2, rset_a3ext, rset_b2, rset_d2, rset_level1, rset_lt_invariance,
    shipped_rsets, ClosedSet, InvarianceVerdict,
};
pub use witness_format::{parse_witness, serialize_witness, witness_library, WitnessFormatError};

use crate::algebra::AlgebraStructure;
use crate::exact::{ExactMatrix, LaurentPoly, Ring, Scalar};
use crate::spectra::RowSpan;
use ratfunc::RatFunc;
use std::fmt;
use thiserror::Error;

type RatMatrix = ExactMatrix<Scalar>;

/// Basis family `E^t`: row `i` gives `E_i^t` in the fixed basis `e`, with
/// Laurent-polynomial coefficients. It is a basis for all but finitely
/// many `t` as long as the determinant is a nonzero Laurent polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParametrizedBasis {
    coeffs: ExactMatrix<LaurentPoly>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContractionError {
    #[error("parametrized basis is singular for all t")]
    SingularBasis,
    #[error("structure constant mu_{{{i},{j}}}^{{{k}}} has a pole at t = 0 (lowest exponent {exponent})")]
    PoleAtZero { i: usize, j: usize, k: usize, exponent: i64 },
    #[error("structure constant mu_{{{i},{j}}}^{{{k}}} is not a Laurent polynomial in t")]
    NotLaurent { i: usize, j: usize, k: usize },
    #[error("basis has dimension {0} but the algebra has dimension {1}")]
    DimensionMismatch(usize, usize),
}

impl ParametrizedBasis {
    pub fn new(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let coeffs = ExactMatrix::from_rows(rows);
        assert_eq!(coeffs.rows(), coeffs.cols(), "basis matrix must be square");
        ParametrizedBasis { coeffs }
    }

    pub fn identity(n: usize) -> Self {
        ParametrizedBasis {
            coeffs: ExactMatrix::identity(n),
        }
    }

    /// Constant basis from a rational matrix (rows are basis vectors).
    pub fn constant(rows: &RatMatrix) -> Self {
        ParametrizedBasis {
            coeffs: rows.map(|c| LaurentPoly::constant(c.clone())),
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn coeffs(&self) -> &ExactMatrix<LaurentPoly> {
        &self.coeffs
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        self.coeffs.row(i)
    }

    /// Left-composition with a constant change of basis: the new family is
    /// `F_i^t = sum_j rows[i][j] E_j^t`.
    pub fn compose_constant_left(&self, rows: &RatMatrix) -> ParametrizedBasis {
        assert_eq!(rows.rows(), self.dim());
        let lifted = rows.map(|c| LaurentPoly::constant(c.clone()));
        ParametrizedBasis {
            coeffs: lifted.matmul(&self.coeffs),
        }
    }

    /// Right-composition: rewrites the family in terms of another constant
    /// basis `f_j = sum_k rows[j][k] e_k`.
    pub fn compose_constant_right(&self, rows: &RatMatrix) -> ParametrizedBasis {
        assert_eq!(rows.rows(), self.dim());
        let lifted = rows.map(|c| LaurentPoly::constant(c.clone()));
        ParametrizedBasis {
            coeffs: self.coeffs.matmul(&lifted),
        }
    }
}

impl fmt::Display for ParametrizedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            let terms: Vec<String> = self
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| format!("({}) e{}", c, j + 1))
                .collect();
            writeln!(f, "E{} = {}", i + 1, terms.join(" + "))?;
        }
        Ok(())
    }
}

/// A recorded degeneration: source, the basis family, the expected limit
/// and a free-text label for provenance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegenerationWitness {
    pub source: AlgebraStructure,
    pub basis: ParametrizedBasis,
    pub target: AlgebraStructure,
    pub label: String,
}

/// Structure constants of `source` in the moving basis, evaluated at t = 0.
///
/// The coordinates of `mu(E_i^t, E_j^t)` in the `E^t` basis are computed by
/// exact linear solving against the coefficient matrix (no full inverse of
/// the Laurent matrix is formed up front) and must come out
/// Laurent-polynomial with nonnegative exponents.
pub fn contract_along(
    source: &AlgebraStructure,
    basis: &ParametrizedBasis,
) -> Result<AlgebraStructure, ContractionError> {
    let n = source.dim();
    if basis.dim() != n {
        return Err(ContractionError::DimensionMismatch(basis.dim(), n));
    }
    let ct = basis.coeffs.transpose().map(|c| RatFunc::from_laurent(c.clone()));
    let inv = invert_ratfunc(&ct).ok_or(ContractionError::SingularBasis)?;
    let mut out = AlgebraStructure::zero(n);
    for i in 0..n {
        for j in 0..n {
            let w = source.product_in::<LaurentPoly>(basis.row(i), basis.row(j));
            for k in 0..n {
                let mut acc = RatFunc::zero();
                for r in 0..n {
                    if w[r].is_zero() {
                        continue;
                    }
                    acc = acc.add(&inv[(k, r)].mul(&RatFunc::from_laurent(w[r].clone())));
                }
                let lp = acc
                    .to_laurent()
                    .ok_or(ContractionError::NotLaurent { i: i + 1, j: j + 1, k: k + 1 })?;
                if let Some(e) = lp.min_exp() {
                    if e < 0 {
                        return Err(ContractionError::PoleAtZero {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            exponent: e,
                        });
                    }
                }
                out.set(i, j, k, lp.eval_at_zero());
            }
        }
    }
    Ok(out)
}

fn invert_ratfunc(m: &ExactMatrix<RatFunc>) -> Option<ExactMatrix<RatFunc>> {
    let n = m.rows();
    let mut aug = ExactMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            RatFunc::one()
        } else {
            RatFunc::zero()
        }
    });
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[(r, col)].is_zero())?;
        if pivot != col {
            for j in 0..2 * n {
                let tmp = aug[(pivot, j)].clone();
                aug[(pivot, j)] = aug[(col, j)].clone();
                aug[(col, j)] = tmp;
            }
        }
        let inv = aug[(col, col)].inv();
        for j in 0..2 * n {
            aug[(col, j)] = aug[(col, j)].mul(&inv);
        }
        for r in 0..n {
            if r != col && !aug[(r, col)].is_zero() {
                let f = aug[(r, col)].clone();
                for j in 0..2 * n {
                    let v = aug[(r, j)].sub(&f.mul(&aug[(col, j)]));
                    aug[(r, j)] = v;
                }
            }
        }
    }
    Some(ExactMatrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
}

/// Outcome of checking a witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Verified,
    /// The contraction exists but differs from the recorded target; carries
    /// the first differing constant (1-based indices) and both values.
    Mismatch {
        i: usize,
        j: usize,
        k: usize,
        got: Scalar,
        want: Scalar,
    },
    /// The contraction itself fails (pole or singular basis).
    ContractionFailed(ContractionError),
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Verified => write!(f, "VERIFIED"),
            Verdict::Mismatch { i, j, k, got, want } => write!(
                f,
                "FAILED: limit differs at mu_{{{i},{j}}}^{{{k}}}: got {got}, expected {want}"
            ),
            Verdict::ContractionFailed(e) => write!(f, "FAILED: {e}"),
        }
    }
}

/// Runs the contraction of a witness and compares with its target.
pub fn verify_witness(w: &DegenerationWitness) -> Verdict {
    match contract_along(&w.source, &w.basis) {
        Ok(limit) => match limit.first_difference(&w.target) {
            None => Verdict::Verified,
            Some((i, j, k)) => Verdict::Mismatch {
                i,
                j,
                k,
                got: limit.get(i - 1, j - 1, k - 1).clone(),
                want: w.target.get(i - 1, j - 1, k - 1).clone(),
            },
        },
        Err(e) => Verdict::ContractionFailed(e),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IwError {
    #[error("the given span is not closed under the product")]
    NotASubalgebra,
    #[error("subalgebra vectors must be linearly independent and of the algebra's dimension")]
    BadSpan,
}

/// Standard Inonu-Wigner contraction with respect to a subalgebra span.
///
/// The result is presented with the complement first and the subalgebra in
/// the tail coordinates; it is always a trivial singular extension of the
/// subalgebra.
pub fn iw_contraction(
    a: &AlgebraStructure,
    subalgebra: &[Vec<Scalar>],
) -> Result<AlgebraStructure, IwError> {
    let n = a.dim();
    let mut span = RowSpan::new();
    for v in subalgebra {
        if v.len() != n || !span.insert(v) {
            return Err(IwError::BadSpan);
        }
    }
    let s = subalgebra.len();
    for x in subalgebra {
        for y in subalgebra {
            if !span.contains(&a.product(x, y)) {
                return Err(IwError::NotASubalgebra);
            }
        }
    }
    // Complement first, subalgebra last.
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    let mut full = RowSpan::new();
    for v in subalgebra {
        full.insert(v);
    }
    for i in 0..n {
        let mut e = vec![<Scalar as Ring>::zero(); n];
        e[i] = <Scalar as Ring>::one();
        if full.insert(&e) {
            rows.push(e);
        }
    }
    rows.extend(subalgebra.iter().cloned());
    let m = n - s;
    let conj = a
        .change_basis(&RatMatrix::from_rows(rows))
        .expect("complement construction yields a basis");
    let scaled = ParametrizedBasis::new(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i != j {
                            LaurentPoly::zero()
                        } else if i < m {
                            LaurentPoly::t()
                        } else {
                            LaurentPoly::one()
                        }
                    })
                    .collect()
            })
            .collect(),
    );
    let out = contract_along(&conj, &scaled).expect("IW contraction never has poles");
    debug_assert!(is_trivial_singular_extension(&out, m, &conj));
    Ok(out)
}

/// The complement-span ideal squares to zero and the tail restriction
/// agrees with the original subalgebra constants.
fn is_trivial_singular_extension(out: &AlgebraStructure, m: usize, conj: &AlgebraStructure) -> bool {
    let n = out.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = out.get(i, j, k);
                if i < m && j < m && !Ring::is_zero(c) {
                    return false;
                }
                if (i < m || j < m) && k >= m && !Ring::is_zero(c) {
                    return false;
                }
                if i >= m && j >= m && out.get(i, j, k) != conj.get(i, j, k) {
                    return false;
                }
            }
        }
    }
    true
}
