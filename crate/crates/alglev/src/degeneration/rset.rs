//! Closed invariant sets of structures and the lower-triangular
//! invariance certificate.
//!
//! A closed set is the vanishing locus of polynomial equations in the n^3
//! structure-constant coordinates. For the non-degeneration arguments the
//! set must additionally be invariant under lower triangular basis
//! transformations; `rset_lt_invariance` certifies this symbolically for
//! sets cut out by affine-linear equations (all the shipped ones are).

use crate::algebra::AlgebraStructure;
use crate::exact::{ExactMatrix, MPoly, Ring, Scalar};
use std::fmt;

type RatMatrix = ExactMatrix<Scalar>;

/// Polynomial conditions on structure constants. Variable `(i*n + j)*n + k`
/// is the coordinate `mu_{i+1,j+1}^{k+1}`.
#[derive(Clone, Debug)]
pub struct ClosedSet {
    pub dim: usize,
    pub name: String,
    pub equations: Vec<MPoly>,
}

impl ClosedSet {
    pub fn new(dim: usize, name: impl Into<String>, equations: Vec<MPoly>) -> Self {
        let nvars = dim * dim * dim;
        let equations = equations
            .into_iter()
            .map(|e| if e.nvars() < nvars { e.widen(nvars) } else { e })
            .collect();
        ClosedSet {
            dim,
            name: name.into(),
            equations,
        }
    }

    /// The coordinate variable `mu_{i,j}^k` (0-based indices).
    pub fn var(dim: usize, i: usize, j: usize, k: usize) -> MPoly {
        MPoly::var(dim * dim * dim, (i * dim + j) * dim + k)
    }

    /// True iff every equation vanishes on the structure constants.
    pub fn contains(&self, a: &AlgebraStructure) -> bool {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        let point: Vec<Scalar> = a.constants().to_vec();
        self.equations.iter().all(|e| Ring::is_zero(&e.eval(&point)))
    }
}

/// Result of the lower-triangular invariance check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvarianceVerdict {
    Invariant,
    /// Some defining equation fails on the transformed generic point; the
    /// residual polynomial is nonzero and a specialization exhibiting the
    /// failure is reported (parameter values, then triangular entries).
    NotInvariant {
        equation_index: usize,
        specialization: Vec<Scalar>,
    },
    /// The equations are not affine-linear, so no generic parametrization
    /// is attempted.
    NotLinear,
    /// The equations have no common solution.
    EmptySet,
}

impl fmt::Display for InvarianceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvarianceVerdict::Invariant => write!(f, "invariant"),
            InvarianceVerdict::NotInvariant { equation_index, .. } => {
                write!(f, "NOT invariant (equation {})", equation_index + 1)
            }
            InvarianceVerdict::NotLinear => write!(f, "equations are not linear"),
            InvarianceVerdict::EmptySet => write!(f, "set is empty"),
        }
    }
}

/// Affine-linear parametrization of the solution set: every coordinate as
/// an MPoly in `free` parameter variables.
fn linear_generic_point(r: &ClosedSet) -> Result<(usize, Vec<MPoly>), InvarianceVerdict> {
    let nvars = r.dim * r.dim * r.dim;
    for e in &r.equations {
        if e.total_degree() > 1 {
            return Err(InvarianceVerdict::NotLinear);
        }
    }
    // Rows: coefficients of each equation; last column the constant term.
    let rows: Vec<Vec<Scalar>> = r
        .equations
        .iter()
        .map(|e| {
            let mut row = vec![Scalar::zero(); nvars + 1];
            for (exps, c) in e.terms() {
                match exps.iter().position(|&x| x > 0) {
                    Some(v) => row[v] = c.clone(),
                    None => row[nvars] = c.clone(),
                }
            }
            row
        })
        .collect();
    if rows.is_empty() {
        let point = (0..nvars).map(|v| MPoly::var(nvars, v)).collect();
        return Ok((nvars, point));
    }
    let mut m = RatMatrix::from_rows(rows);
    let pivots = m.rref();
    if pivots.contains(&nvars) {
        return Err(InvarianceVerdict::EmptySet);
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..nvars).filter(|v| !pivot_set.contains(v)).collect();
    let nfree = free.len();
    let mut point = vec![MPoly::zero(nfree); nvars];
    for (slot, &v) in free.iter().enumerate() {
        point[v] = MPoly::var(nfree, slot);
    }
    for (row, &pv) in pivots.iter().enumerate() {
        // pivot variable = -constant - sum over free vars
        let mut expr = MPoly::constant(nfree, -m[(row, nvars)].clone());
        for (slot, &v) in free.iter().enumerate() {
            let c = &m[(row, v)];
            if !Ring::is_zero(c) {
                expr = expr.sub(&MPoly::var(nfree, slot).scale(c));
            }
        }
        point[pv] = expr;
    }
    Ok((nfree, point))
}

/// Certifies invariance under generic lower triangular transformations.
///
/// A generic point of the set is conjugated by `g = H^{-1}` for a symbolic
/// lower triangular `H` (so the transformed coordinates are polynomials
/// over a common denominator `det H`), and every defining equation is
/// required to vanish identically on the result.
pub fn rset_lt_invariance(r: &ClosedSet) -> InvarianceVerdict {
    let n = r.dim;
    let nvars = n * n * n;
    let (nfree, point) = match linear_generic_point(r) {
        Ok(v) => v,
        Err(verdict) => return verdict,
    };
    // Sanity: the parametrization satisfies the equations.
    for e in &r.equations {
        let widened: Vec<MPoly> = point.clone();
        let den = MPoly::constant(nfree, Scalar::from_integer(1.into()));
        let val = e.eval_frac(&widened, &den);
        assert!(val.is_zero(), "generic point must satisfy {}", r.name);
    }
    // Symbolic lower triangular H in fresh variables after the parameters.
    let tri = n * (n + 1) / 2;
    let total = nfree + tri;
    let point: Vec<MPoly> = point.into_iter().map(|p| p.widen(total)).collect();
    let mut h = ExactMatrix::from_fn(n, n, |_, _| MPoly::zero(total));
    {
        let mut slot = nfree;
        for i in 0..n {
            for j in 0..=i {
                h[(i, j)] = MPoly::var(total, slot);
                slot += 1;
            }
        }
    }
    let det = h.det_ring();
    let adj = h.adjugate_ring();
    // Transformed coordinates: nu_{i,j}^k = [adj(H) mu(H e_i, H e_j)]_k / det.
    let mut nu_num = vec![MPoly::zero(total); nvars];
    for i in 0..n {
        for j in 0..n {
            // w = mu(H e_i, H e_j) with mu at the generic point.
            let mut w = vec![MPoly::zero(total); n];
            for p in 0..n {
                if h[(p, i)].is_zero() {
                    continue;
                }
                for q in 0..n {
                    if h[(q, j)].is_zero() {
                        continue;
                    }
                    let hh = h[(p, i)].mul(&h[(q, j)]);
                    for k in 0..n {
                        let mu = &point[(p * n + q) * n + k];
                        if !mu.is_zero() {
                            w[k] = w[k].add(&hh.mul(mu));
                        }
                    }
                }
            }
            for k in 0..n {
                let mut acc = MPoly::zero(total);
                for rr in 0..n {
                    if !w[rr].is_zero() && !adj[(k, rr)].is_zero() {
                        acc = acc.add(&adj[(k, rr)].mul(&w[rr]));
                    }
                }
                nu_num[(i * n + j) * n + k] = acc;
            }
        }
    }
    for (idx, e) in r.equations.iter().enumerate() {
        let residual = e.eval_frac(&nu_num, &det);
        if !residual.is_zero() {
            let spec = find_nonzero_specialization(&residual, nfree, n);
            return InvarianceVerdict::NotInvariant {
                equation_index: idx,
                specialization: spec,
            };
        }
    }
    InvarianceVerdict::Invariant
}

/// Small search for a point where the residual is nonzero, keeping the
/// triangular diagonal entries nonzero.
fn find_nonzero_specialization(residual: &MPoly, nfree: usize, n: usize) -> Vec<Scalar> {
    let total = residual.nvars();
    let pool = [1i64, 2, -1, 3, 5, 7, -2, 4];
    for attempt in 0..pool.len() {
        let mut point = Vec::with_capacity(total);
        for v in 0..total {
            let raw = pool[(attempt + v) % pool.len()];
            // Diagonal entries of H sit at known slots; keep everything
            // nonzero for simplicity.
            let val = if raw == 0 { 1 } else { raw };
            point.push(Scalar::from_integer(val.into()));
        }
        let _ = n;
        let _ = nfree;
        if !Ring::is_zero(&residual.eval(&point)) {
            return point;
        }
    }
    Vec::new()
}

/// The level-1 set: all constants vanish except `mu_{1,1}^n`.
pub fn rset_level1(n: usize) -> ClosedSet {
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if (i, j, k) != (0, 0, n - 1) {
                    eqs.push(ClosedSet::var(n, i, j, k));
                }
            }
        }
    }
    ClosedSet::new(n, "level1", eqs)
}

/// Products of the ideal vanish: `mu_{i,j}^k = 0` for `2 <= i, j <= n`.
fn ideal_products_vanish(n: usize, eqs: &mut Vec<MPoly>) {
    for i in 1..n {
        for j in 1..n {
            for k in 0..n {
                eqs.push(ClosedSet::var(n, i, j, k));
            }
        }
    }
}

/// The A3-extension set: `mu(e1,e1) = mu_{1,1}^n e_n`, ideal products
/// vanish, `mu(e1,e_n) = mu(e_n,e1) = 0`, and for the middle coordinates
/// `mu(e1,e_i) = mu_{1,2}^2 e_i + mu_{1,i}^n e_n = -mu(e_i,e1)`.
pub fn rset_a3ext(n: usize) -> ClosedSet {
    assert!(n >= 3);
    let mut eqs = Vec::new();
    for k in 0..n - 1 {
        eqs.push(ClosedSet::var(n, 0, 0, k));
    }
    ideal_products_vanish(n, &mut eqs);
    for k in 0..n {
        eqs.push(ClosedSet::var(n, 0, n - 1, k));
        eqs.push(ClosedSet::var(n, n - 1, 0, k));
    }
    let shared = ClosedSet::var(n, 0, 1, 1); // mu_{1,2}^2
    for i in 1..n - 1 {
        for k in 0..n {
            if k == i {
                eqs.push(ClosedSet::var(n, 0, i, i).sub(&shared));
                eqs.push(ClosedSet::var(n, i, 0, i).add(&shared));
            } else if k == n - 1 {
                eqs.push(ClosedSet::var(n, 0, i, n - 1).add(&ClosedSet::var(n, i, 0, n - 1)));
            } else {
                eqs.push(ClosedSet::var(n, 0, i, k));
                eqs.push(ClosedSet::var(n, i, 0, k));
            }
        }
    }
    ClosedSet::new(n, "a3ext", eqs)
}

/// The A1-lemma set at a fixed alpha.
pub fn rset_a1(n: usize, alpha: &Scalar) -> ClosedSet {
    let mut eqs = Vec::new();
    for k in 1..n - 1 {
        eqs.push(ClosedSet::var(n, 0, 0, k));
    }
    ideal_products_vanish(n, &mut eqs);
    let corner = ClosedSet::var(n, 0, 0, 0);
    for i in 1..n {
        for k in 0..n {
            if k == i {
                eqs.push(ClosedSet::var(n, 0, i, i).sub(&corner.scale(alpha)));
                let one_minus = crate::exact::int(1) - alpha;
                eqs.push(ClosedSet::var(n, i, 0, i).sub(&corner.scale(&one_minus)));
            } else {
                eqs.push(ClosedSet::var(n, 0, i, k));
                eqs.push(ClosedSet::var(n, i, 0, k));
            }
        }
    }
    ClosedSet::new(n, "a1", eqs)
}

/// The A2-lemma set.
pub fn rset_a2(n: usize) -> ClosedSet {
    let mut eqs = Vec::new();
    for k in 0..n - 1 {
        eqs.push(ClosedSet::var(n, 0, 0, k));
    }
    ideal_products_vanish(n, &mut eqs);
    let shared = ClosedSet::var(n, 0, n - 1, n - 1); // mu_{1,n}^n
    for i in 1..n {
        for k in 0..n {
            if k == i {
                eqs.push(ClosedSet::var(n, 0, i, i).sub(&shared));
                eqs.push(ClosedSet::var(n, i, 0, i).add(&shared));
            } else {
                eqs.push(ClosedSet::var(n, 0, i, k));
                eqs.push(ClosedSet::var(n, i, 0, k));
            }
        }
    }
    ClosedSet::new(n, "a2", eqs)
}

/// The B2-lemma set at a fixed alpha.
pub fn rset_b2(n: usize, alpha: &Scalar) -> ClosedSet {
    let mut eqs = vec![ClosedSet::var(n, 0, 0, 0)];
    ideal_products_vanish(n, &mut eqs);
    let shared = ClosedSet::var(n, 0, 1, 1).add(&ClosedSet::var(n, 1, 0, 1));
    for i in 1..n {
        for k in 0..n {
            if k == i {
                eqs.push(ClosedSet::var(n, 0, i, i).sub(&shared.scale(alpha)));
                let one_minus = crate::exact::int(1) - alpha;
                eqs.push(ClosedSet::var(n, i, 0, i).sub(&shared.scale(&one_minus)));
            } else {
                eqs.push(ClosedSet::var(n, 0, i, k));
                eqs.push(ClosedSet::var(n, i, 0, k));
            }
        }
    }
    ClosedSet::new(n, "b2", eqs)
}

/// The D2-lemma set at fixed (alpha, beta); `mu(e1,e1)` is unconstrained.
pub fn rset_d2(n: usize, alpha: &Scalar, beta: &Scalar) -> ClosedSet {
    let mut eqs = Vec::new();
    ideal_products_vanish(n, &mut eqs);
    let corner = ClosedSet::var(n, 0, 0, 0);
    for i in 1..n {
        for k in 0..n {
            if k == i {
                eqs.push(ClosedSet::var(n, 0, i, i).sub(&corner.scale(alpha)));
                eqs.push(ClosedSet::var(n, i, 0, i).sub(&corner.scale(beta)));
            } else {
                eqs.push(ClosedSet::var(n, 0, i, k));
                eqs.push(ClosedSet::var(n, i, 0, k));
            }
        }
    }
    ClosedSet::new(n, "d2", eqs)
}

/// The six shipped sets at their sample parameters (alpha = 2 for A1 and
/// B2, (alpha, beta) = (2, 3) for D2).
pub fn shipped_rsets(n: usize) -> Vec<ClosedSet> {
    use crate::exact::int;
    vec![
        rset_level1(n),
        rset_a3ext(n),
        rset_a1(n, &int(2)),
        rset_a2(n),
        rset_b2(n, &int(2)),
        rset_d2(n, &int(2), &int(3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::exact::int;

    use super::rset_level1 as level1_set;

    #[test]
    fn membership() {
        let r = level1_set(3);
        // A_3 relabeled so that e1e1 = e_n.
        let mut a3 = AlgebraStructure::zero(3);
        a3.set(0, 0, 2, int(1));
        assert!(r.contains(&a3));
        assert!(!r.contains(&catalog("n3", &[], 3).unwrap()));
        let empty = ClosedSet::new(3, "empty", vec![]);
        assert!(empty.contains(&catalog("n3", &[], 3).unwrap()));
    }

    #[test]
    fn level1_set_is_invariant() {
        assert_eq!(rset_lt_invariance(&level1_set(3)), InvarianceVerdict::Invariant);
    }

    #[test]
    fn corner_equation_needs_companions() {
        // mu_{1,1}^1 = 0 alone is NOT invariant: for mu(e2,e2) = e1 and a
        // unipotent lower triangular g the transformed constant is nonzero.
        // Jointly with "products of e_2..e_n vanish" (as the shipped sets
        // always state it) the condition becomes invariant.
        let alone = ClosedSet::new(2, "corner", vec![ClosedSet::var(2, 0, 0, 0)]);
        assert!(matches!(
            rset_lt_invariance(&alone),
            InvarianceVerdict::NotInvariant { .. }
        ));
        let mut eqs = vec![ClosedSet::var(2, 0, 0, 0)];
        for k in 0..2 {
            eqs.push(ClosedSet::var(2, 1, 1, k));
            // mixed products keep only their e2 component
            eqs.push(ClosedSet::var(2, 0, 1, 0));
            eqs.push(ClosedSet::var(2, 1, 0, 0));
        }
        let joint = ClosedSet::new(2, "corner+ideal", eqs);
        assert_eq!(rset_lt_invariance(&joint), InvarianceVerdict::Invariant);
    }

    #[test]
    fn non_invariant_set_is_caught() {
        // mu_{2,2}^2 = 0 is NOT invariant under lower triangular moves.
        let r = ClosedSet::new(2, "bad", vec![ClosedSet::var(2, 1, 1, 1)]);
        match rset_lt_invariance(&r) {
            InvarianceVerdict::NotInvariant { specialization, .. } => {
                assert!(!specialization.is_empty());
            }
            v => panic!("expected NotInvariant, got {v:?}"),
        }
    }
}
