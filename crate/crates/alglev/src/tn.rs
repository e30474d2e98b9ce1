//! The variety of generation-type-1 algebras with a square-zero ideal of
//! codimension 1.
//!
//! A point is a pair `(r, S)` with `r` in {0, 1} and `S` a full specter of
//! total size n-1; it stands for the structure `T_r^{M(S)}` where the
//! distinguished generator acts on the ideal by `M(S)`. For `r = 0` the
//! specter only matters up to global scaling and is stored canonically.

use crate::algebra::AlgebraStructure;
use crate::degeneration::{DegenerationWitness, ParametrizedBasis};
use crate::exact::{int, ExactMatrix, LaurentPoly, Ring, Scalar};
use crate::partitions::Partition;
use crate::spectra::{
    block_diag, canonical_matrix, chain_matrix, equal_mod_scaling, fs_of_matrix, jordan_block,
    similarity_transform, FullSpecter,
};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

type RatMatrix = ExactMatrix<Scalar>;

/// Orbit datum of a point of the variety.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TnPoint {
    r: u8,
    spec: FullSpecter,
}

impl TnPoint {
    /// For `r = 0` the specter is replaced by its scaling-canonical form.
    pub fn new(r: u8, spec: FullSpecter) -> Self {
        assert!(r <= 1);
        let spec = if r == 0 { spec.scaling_canonical() } else { spec };
        TnPoint { r, spec }
    }

    /// The nilpotent point attached to a partition.
    pub fn nilpotent(a: Partition) -> Self {
        TnPoint::new(0, FullSpecter::new(vec![(Scalar::zero(), a)]))
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn spec(&self) -> &FullSpecter {
        &self.spec
    }

    /// Algebra dimension: total specter size plus the generator.
    pub fn dim(&self) -> usize {
        self.spec.total() as usize + 1
    }

    pub fn is_nilpotent(&self) -> bool {
        self.r == 0 && self.spec.is_nilpotent()
    }

    pub fn is_solvable(&self) -> bool {
        self.r == 0
    }
}

impl fmt::Display for TnPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}^{}", self.r, self.spec)
    }
}

/// The structure `T_r^M`: `e1 e1 = r e1`, `e1 e_i = M(e_i)`,
/// `e_i e1 = r e_i - M(e_i)`, products of ideal elements vanish.
pub fn build_t(r: u8, m: &RatMatrix) -> AlgebraStructure {
    assert!(m.is_square());
    assert!(r <= 1);
    let d = m.rows();
    let n = d + 1;
    let mut a = AlgebraStructure::zero(n);
    if r == 1 {
        a.set(0, 0, 0, <Scalar as Ring>::one());
    }
    for i in 0..d {
        for j in 0..d {
            let c = &m[(j, i)];
            if !Ring::is_zero(c) {
                a.set(0, i + 1, j + 1, c.clone());
                a.set(i + 1, 0, j + 1, -c.clone());
            }
        }
        if r == 1 {
            let cur = a.get(i + 1, 0, i + 1).clone();
            a.set(i + 1, 0, i + 1, cur + <Scalar as Ring>::one());
        }
    }
    a
}

/// Canonical structure of a point.
pub fn build_t_point(p: &TnPoint) -> AlgebraStructure {
    build_t(p.r, &canonical_matrix(&p.spec))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("structure does not have the square-zero codimension-1 shape in this basis")]
    NotAbelShape,
    #[error("generator action violates the generation-type-1 condition")]
    NotGenType1,
    #[error(transparent)]
    Spectrum(#[from] crate::exact::SpectrumError),
}

/// Reads a point off a structure given in the distinguished shape: the
/// ideal must be spanned by `e_2, ..., e_n` with zero products, and the
/// generator condition `mu(e1,e1) = alpha e1`,
/// `mu(e1,ei) + mu(ei,e1) = alpha ei` must hold.
pub fn recognize_t(a: &AlgebraStructure) -> Result<TnPoint, RecognizeError> {
    let n = a.dim();
    assert!(n >= 2);
    for i in 1..n {
        for j in 1..n {
            for k in 0..n {
                if !Ring::is_zero(a.get(i, j, k)) {
                    return Err(RecognizeError::NotAbelShape);
                }
            }
        }
    }
    for i in 1..n {
        if !Ring::is_zero(a.get(0, i, 0)) || !Ring::is_zero(a.get(i, 0, 0)) {
            return Err(RecognizeError::NotAbelShape);
        }
    }
    let alpha = a.get(0, 0, 0).clone();
    for k in 1..n {
        if !Ring::is_zero(a.get(0, 0, k)) {
            return Err(RecognizeError::NotGenType1);
        }
    }
    for i in 1..n {
        for k in 1..n {
            let sum = a.get(0, i, k).add(a.get(i, 0, k));
            let want = if i == k { alpha.clone() } else { Scalar::zero() };
            if sum != want {
                return Err(RecognizeError::NotGenType1);
            }
        }
    }
    let d = n - 1;
    let mut m = RatMatrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            m[(j, i)] = a.get(0, i + 1, j + 1).clone();
        }
    }
    if Ring::is_zero(&alpha) {
        let spec = fs_of_matrix(&m)?;
        Ok(TnPoint::new(0, spec))
    } else {
        let scaled = m.scale(&alpha.recip());
        let spec = fs_of_matrix(&scaled)?;
        Ok(TnPoint::new(1, spec))
    }
}

/// Orbit equality: equal specters for `r = 1`, specters equal modulo
/// scaling for `r = 0`, never across different `r`.
pub fn same_orbit_t(p: &TnPoint, q: &TnPoint) -> bool {
    if p.r != q.r || p.dim() != q.dim() {
        return false;
    }
    if p.r == 1 {
        p.spec == q.spec
    } else {
        equal_mod_scaling(&p.spec, &q.spec).is_some()
    }
}

/// Componentwise dominance against a matching eigenvalue assignment.
fn spec_dominates(p: &FullSpecter, q: &FullSpecter, alpha: &Scalar) -> bool {
    if p.pairs().len() != q.pairs().len() {
        return false;
    }
    p.pairs().iter().all(|(lambda, a)| {
        match q.partition_for(&(lambda * alpha)) {
            Some(b) => a.total() == b.total() && a.dominates(b).unwrap(),
            None => false,
        }
    })
}

/// The full degeneration criterion.
pub fn degenerates_t(p: &TnPoint, q: &TnPoint) -> bool {
    if p.dim() != q.dim() {
        return false;
    }
    // collapse condition: target nilpotent with dominated partition sum
    if q.r == 0 {
        if let [(lambda, b)] = q.spec.pairs() {
            if Ring::is_zero(lambda) {
                let total = p.spec.partition_sum();
                if total.dominates(b).unwrap() {
                    return true;
                }
            }
        }
    }
    if p.r != q.r {
        return false;
    }
    if p.r == 1 {
        return spec_dominates(&p.spec, &q.spec, &<Scalar as Ring>::one());
    }
    // r = 0: some global scaling matches eigenvalues with dominance.
    if !p.spec.has_nonzero_eigenvalue() || !q.spec.has_nonzero_eigenvalue() {
        // both nilpotent is the collapse condition already tested; a
        // nilpotent source never reaches a non-nilpotent target
        return false;
    }
    let (l1, _) = p
        .spec
        .pairs()
        .iter()
        .find(|(l, _)| !Ring::is_zero(l))
        .unwrap();
    for (l2, _) in q.spec.pairs().iter().filter(|(l, _)| !Ring::is_zero(l)) {
        let alpha = l2 / l1;
        if spec_dominates(&p.spec, &q.spec, &alpha) {
            return true;
        }
    }
    false
}

/// Level inside the variety: `lev(a)` for nilpotent points,
/// `lev(sum a^i) + 1` otherwise.
pub fn level_t(p: &TnPoint) -> u32 {
    if p.is_nilpotent() {
        p.spec.pairs()[0].1.level()
    } else {
        p.spec.partition_sum().level() + 1
    }
}

/// The primary-degeneration set: block moves on one Jordan type, plus (for
/// non-nilpotent points) the collapse onto the nilpotent point of the
/// partition sum.
pub fn primary_set_t(p: &TnPoint) -> BTreeSet<TnPoint> {
    let mut out = BTreeSet::new();
    if p.is_nilpotent() {
        let a = &p.spec.pairs()[0].1;
        for b in a.preceding() {
            out.insert(TnPoint::nilpotent(b));
        }
        return out;
    }
    for (j, (lambda, a)) in p.spec.pairs().iter().enumerate() {
        for b in a.preceding() {
            let mut pairs: Vec<(Scalar, Partition)> = p.spec.pairs().to_vec();
            pairs[j] = (lambda.clone(), b);
            out.insert(TnPoint::new(p.r, FullSpecter::new(pairs)));
        }
    }
    out.insert(TnPoint::nilpotent(p.spec.partition_sum()));
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("the pair is not a primary degeneration")]
    NotPrimary,
    #[error("endpoint conjugation failed: {0}")]
    Conjugation(String),
}

/// Rows of the change of basis taking `T_r^{m_from}` to `T_r'^{m_to}`
/// (constants in the new basis): `f_1 = c e_1`, ideal rows the transposed
/// similarity, where `c` rescales the specter for solvable points.
fn t_conjugation_rows(
    m_from: &RatMatrix,
    m_to: &RatMatrix,
    r: u8,
) -> Result<RatMatrix, WitnessError> {
    let d = m_from.rows();
    let fail = |msg: &str| WitnessError::Conjugation(msg.to_string());
    let c = if r == 1 {
        <Scalar as Ring>::one()
    } else {
        let from = fs_of_matrix(m_from).map_err(|e| fail(&e.to_string()))?;
        let to = fs_of_matrix(m_to).map_err(|e| fail(&e.to_string()))?;
        equal_mod_scaling(&from, &to).ok_or_else(|| fail("specters differ modulo scaling"))?
    };
    let scaled = m_from.scale(&c);
    let y = similarity_transform(&scaled, m_to)
        .map_err(|e| fail(&e.to_string()))?
        .ok_or_else(|| fail("matrices are not conjugate"))?;
    // rows: f_1 = c e_1; f_{i+1} = sum_j Y[(j, i)] e_{j+1}
    let n = d + 1;
    Ok(RatMatrix::from_fn(n, n, |i, j| {
        if i == 0 && j == 0 {
            c.clone()
        } else if i == 0 || j == 0 {
            Scalar::zero()
        } else {
            y[(j - 1, i - 1)].clone()
        }
    }))
}

/// Multiset subtraction of partition parts.
fn multiset_sub(a: &Partition, b: &Partition) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    let mut bs: Vec<u32> = b.parts().to_vec();
    for &x in a.parts() {
        if let Some(pos) = bs.iter().position(|&y| y == x) {
            bs.remove(pos);
        } else {
            out.push(x);
        }
    }
    out
}

/// Jordan blocks of the whole specter minus the two parts consumed by a
/// block move at `skip_lambda` (a zero skip part means nothing to skip).
fn remaining_blocks(spec: &FullSpecter, skip_lambda: &Scalar, skips: [u32; 2]) -> Vec<RatMatrix> {
    let mut blocks = Vec::new();
    let mut to_skip: Vec<u32> = skips.iter().copied().filter(|&s| s > 0).collect();
    for (lambda, a) in spec.pairs() {
        for &part in a.parts() {
            if lambda == skip_lambda {
                if let Some(pos) = to_skip.iter().position(|&s| s == part) {
                    to_skip.remove(pos);
                    continue;
                }
            }
            blocks.push(jordan_block(lambda, part as usize));
        }
    }
    assert!(to_skip.is_empty(), "moved parts must exist in the specter");
    blocks
}

fn lp(v: i64) -> LaurentPoly {
    LaurentPoly::constant(int(v))
}

fn lpt(exp: i64) -> LaurentPoly {
    LaurentPoly::monomial(exp, int(1))
}

/// A verified witness for a primary pair, between the canonical structures
/// of the endpoints.
///
/// The two explicit families are the block move
/// `E_2 = t e_{k+1}, E_i = t e_{i-1}, E_i = e_i - e_{i-k}` and the chain
/// collapse `E_1 = t e_1, E_i = t^{j-1} e_i` within each chain block; the
/// endpoints are then conjugated onto their canonical representatives.
pub fn primary_witness_t(p: &TnPoint, q: &TnPoint) -> Result<DegenerationWitness, WitnessError> {
    if !primary_set_t(p).contains(q) {
        return Err(WitnessError::NotPrimary);
    }
    let n = p.dim();
    let d = n - 1;

    // Collapse family: q is the nilpotent point of the partition sum and p
    // is not nilpotent.
    let is_collapse = !p.is_nilpotent()
        && *q == TnPoint::nilpotent(p.spec.partition_sum());
    let (m_proof, l_proof, basis_rows, r_target) = if is_collapse {
        let b = p.spec.partition_sum();
        // Chain block j carries each eigenvalue lambda_i repeated a^i_j
        // times, longer types first.
        let mut order: Vec<(Scalar, Partition)> = p.spec.pairs().to_vec();
        order.sort_by(|x, y| y.1.len().cmp(&x.1.len()).then(x.0.cmp(&y.0)));
        let mut m_blocks = Vec::new();
        for j in 0..b.len() {
            let mut values = Vec::new();
            for (lambda, a) in &order {
                for _ in 0..a.part(j) {
                    values.push(lambda.clone());
                }
            }
            assert_eq!(values.len() as u32, b.part(j));
            m_blocks.push(chain_matrix(&values));
        }
        let m_proof = block_diag(&m_blocks);
        let l_blocks: Vec<RatMatrix> = (0..b.len())
            .map(|j| jordan_block(&Scalar::zero(), b.part(j) as usize))
            .collect();
        let l_proof = block_diag(&l_blocks);
        let mut rows = vec![vec![LaurentPoly::zero(); n]; n];
        rows[0][0] = lpt(1);
        let mut coord = 1;
        for j in 0..b.len() {
            for pos in 0..b.part(j) as usize {
                rows[coord][coord] = lpt(pos as i64);
                coord += 1;
            }
        }
        assert_eq!(coord, n);
        (m_proof, l_proof, rows, 0u8)
    } else {
        // Block move: exactly one Jordan type changes by a cover. Recover
        // the generating (eigenvalue, cover) pair in the source's own
        // eigenvalue frame by re-enumerating the candidates.
        let mut found = None;
        'outer: for (j, (lambda, a)) in p.spec.pairs().iter().enumerate() {
            for b in a.preceding() {
                let mut pairs = p.spec.pairs().to_vec();
                pairs[j] = (lambda.clone(), b.clone());
                if &TnPoint::new(p.r, FullSpecter::new(pairs)) == q {
                    found = Some((lambda.clone(), a.clone(), b));
                    break 'outer;
                }
            }
        }
        let (lambda, a, b) = found.ok_or(WitnessError::NotPrimary)?;
        // The cover moves one unit: a part m+1 shrinks to m, a part k-1
        // grows to k (k-1 = 0 when a new part appears); always k <= m.
        let removed = multiset_sub(&a, &b);
        let added = multiset_sub(&b, &a);
        let (m_plus_1, k) = match (removed.as_slice(), added.as_slice()) {
            ([x], [y, z]) if y + z == *x => (*x, (*y).min(*z)),
            ([x, y], [u, v]) => {
                let big = (*x).max(*y);
                let small = (*x).min(*y);
                let nb = (*u).max(*v);
                let ns = (*u).min(*v);
                if big - 1 == nb && small + 1 == ns {
                    (big, ns)
                } else {
                    return Err(WitnessError::NotPrimary);
                }
            }
            _ => return Err(WitnessError::NotPrimary),
        };
        let m_small = (m_plus_1 - 1) as usize;
        let k = k as usize;
        assert!(1 <= k && k <= m_small);
        let u_blocks = remaining_blocks(&p.spec, &lambda, [m_plus_1, k as u32 - 1]);
        let mut m_blocks = Vec::new();
        if k > 1 {
            m_blocks.push(jordan_block(&lambda, k - 1));
        }
        m_blocks.push(jordan_block(&lambda, m_small + 1));
        m_blocks.extend(u_blocks.iter().cloned());
        let m_proof = block_diag(&m_blocks);
        let mut l_blocks = vec![
            jordan_block(&lambda, k),
            jordan_block(&lambda, m_small),
        ];
        l_blocks.extend(u_blocks);
        let l_proof = block_diag(&l_blocks);
        assert_eq!(m_proof.rows(), d);
        let mut rows = vec![vec![LaurentPoly::zero(); n]; n];
        rows[0][0] = lp(1);
        for i in 2..=n {
            let row = &mut rows[i - 1];
            if i == 2 {
                row[k] = lpt(1); // t e_{k+1}
            } else if 3 <= i && i <= k + 1 {
                row[i - 2] = lpt(1); // t e_{i-1}
            } else if k + 2 <= i && i <= 2 * k {
                row[i - 1] = lp(1);
                row[i - k - 1] = lp(-1); // e_i - e_{i-k}
            } else {
                row[i - 1] = lp(1);
            }
        }
        (m_proof, l_proof, rows, p.r)
    };

    let source_can = build_t_point(p);
    let target_can = build_t_point(q);
    let m_can = canonical_matrix(&p.spec);
    let l_can = canonical_matrix(&q.spec);

    // Witness between the canonical endpoints: conjugate the proof basis on
    // both sides. G takes the proof source to the canonical source, H the
    // proof limit to the canonical target.
    let g = t_conjugation_rows(&m_proof, &m_can, p.r)?;
    let h = t_conjugation_rows(&l_proof, &l_can, r_target)?;
    // Rows of G express the canonical source basis through the proof
    // basis, so the proof-frame family rewrites into canonical coordinates
    // by a right factor of G^{-1}; H then renames the limit.
    let g_inv = g
        .inverse()
        .ok_or_else(|| WitnessError::Conjugation("singular conjugation".into()))?;
    let basis = ParametrizedBasis::new(basis_rows)
        .compose_constant_right(&g_inv)
        .compose_constant_left(&h);

    Ok(DegenerationWitness {
        source: source_can,
        basis,
        target: target_can,
        label: format!("primary degeneration {p} -> {q}"),
    })
}

mod tables;
pub use tables::{emit_tn_tables, table_families, TableRow};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::verify_witness;
    use crate::exact::frac;
    use crate::spectra::fs_of_matrix;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pt(r: u8, pairs: Vec<(Scalar, &[u32])>) -> TnPoint {
        TnPoint::new(
            r,
            FullSpecter::new(pairs.into_iter().map(|(l, a)| (l, part(a))).collect()),
        )
    }

    #[test]
    fn build_examples() {
        // r = 0 with the identity matrix is p^-.
        let p = build_t(0, &RatMatrix::identity(3));
        assert_eq!(p, crate::algebra::catalog("p_minus", &[], 4).unwrap());
        // r = 1 with alpha * identity is nu^alpha.
        let m = RatMatrix::identity(3).scale(&frac(2, 3));
        let nu = build_t(1, &m);
        assert_eq!(nu, crate::algebra::catalog("nu", &[frac(2, 3)], 4).unwrap());
        // single nilpotent 2-block padded by zero gives n3 + k.
        let m = block_diag(&[jordan_block(&int(0), 2), RatMatrix::zero(1, 1)]);
        let n3 = build_t(0, &m);
        assert_eq!(n3, crate::algebra::catalog("n3", &[], 4).unwrap());
    }

    #[test]
    fn recognize_roundtrip() {
        let nu = crate::algebra::catalog("nu", &[frac(1, 2)], 3).unwrap();
        let p = recognize_t(&nu).unwrap();
        assert_eq!(p, pt(1, vec![(frac(1, 2), &[1, 1])]));
        let pm = crate::algebra::catalog("p_minus", &[], 3).unwrap();
        let p = recognize_t(&pm).unwrap();
        assert_eq!(p.r(), 0);
        assert_eq!(p, pt(0, vec![(int(1), &[1, 1])]));
        // recognize . build recovers the canonical point
        for point in [
            pt(0, vec![(int(0), &[2, 1])]),
            pt(1, vec![(int(1), &[2]), (int(0), &[1])]),
            pt(0, vec![(int(1), &[2]), (int(0), &[1])]),
        ] {
            assert_eq!(recognize_t(&build_t_point(&point)).unwrap(), point);
        }
    }

    #[test]
    fn recognize_rejects() {
        let g = crate::algebra::catalog("G", &[], 3).unwrap();
        assert_eq!(recognize_t(&g), Err(RecognizeError::NotAbelShape));
        // violates the alpha-condition: e1e2 + e2e1 not in <e2>
        let mut bad = AlgebraStructure::zero(3);
        bad.set(0, 1, 2, int(1));
        assert_eq!(recognize_t(&bad), Err(RecognizeError::NotGenType1));
    }

    #[test]
    fn orbit_tests() {
        let a = pt(1, vec![(int(1), &[2])]);
        assert!(same_orbit_t(&a, &a));
        let b = pt(0, vec![(int(1), &[2])]);
        let c = pt(0, vec![(int(3), &[2])]);
        assert!(same_orbit_t(&b, &c));
        assert!(!same_orbit_t(&a, &b));
        // conjugated builds stay in the same orbit
        let m = chain_matrix(&[int(1), int(0)]);
        let u = RatMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(0), int(1)]]);
        let conj = u.inverse().unwrap().matmul(&m).matmul(&u);
        let p1 = TnPoint::new(1, fs_of_matrix(&m).unwrap());
        let p2 = TnPoint::new(1, fs_of_matrix(&conj).unwrap());
        assert!(same_orbit_t(&p1, &p2));
    }

    #[test]
    fn degeneration_examples() {
        assert!(degenerates_t(
            &pt(1, vec![(int(1), &[2])]),
            &pt(1, vec![(int(1), &[1, 1])])
        ));
        assert!(!degenerates_t(
            &pt(1, vec![(int(1), &[1, 1])]),
            &pt(0, vec![(int(0), &[2])])
        ));
        let p = pt(0, vec![(int(0), &[2, 1])]);
        assert!(degenerates_t(&p, &p));
        assert!(degenerates_t(
            &pt(0, vec![(int(0), &[2, 1])]),
            &pt(0, vec![(int(0), &[1, 1, 1])])
        ));
        // scaling in condition (2)
        assert!(degenerates_t(
            &pt(0, vec![(int(1), &[2]), (int(2), &[1])]),
            &pt(0, vec![(int(2), &[1, 1]), (int(4), &[1])])
        ));
        // r = 1 needs matching eigenvalues exactly
        assert!(!degenerates_t(
            &pt(1, vec![(int(1), &[2])]),
            &pt(1, vec![(int(2), &[1, 1])])
        ));
    }

    #[test]
    fn level_examples() {
        assert_eq!(level_t(&pt(0, vec![(int(0), &[2, 1, 1])])), 1);
        assert_eq!(level_t(&pt(1, vec![(frac(1, 2), &[1, 1])])), 1);
        // Table 2's level-2 family: one chain of two distinct values plus
        // scalar blocks gives types (1) and (1,...,1), summing to (2,1,...).
        let p = pt(0, vec![(int(1), &[1]), (int(2), &[1, 1])]);
        assert_eq!(level_t(&p), 2);
        assert_eq!(level_t(&pt(0, vec![(int(0), &[1, 1, 1])])), 0);
    }

    #[test]
    fn primary_set_examples() {
        let p = pt(0, vec![(int(0), &[3, 1])]);
        let s = primary_set_t(&p);
        assert_eq!(s, BTreeSet::from([pt(0, vec![(int(0), &[2, 2])])]));
        let p = pt(1, vec![(int(1), &[2])]);
        let s = primary_set_t(&p);
        assert_eq!(
            s,
            BTreeSet::from([
                pt(1, vec![(int(1), &[1, 1])]),
                pt(0, vec![(int(0), &[2])]),
            ])
        );
        let zero = pt(0, vec![(int(0), &[1, 1, 1])]);
        assert!(primary_set_t(&zero).is_empty());
    }

    #[test]
    fn primary_witnesses_verify_small() {
        // block move at n = 3 (nilpotent)
        let p = pt(1, vec![(int(0), &[2])]);
        let q = pt(1, vec![(int(0), &[1, 1])]);
        let w = primary_witness_t(&p, &q).unwrap();
        assert!(verify_witness(&w).is_verified(), "{}", verify_witness(&w));
        // collapse at n = 2
        let p = pt(1, vec![(int(1), &[1])]);
        let q = pt(0, vec![(int(0), &[1])]);
        let w = primary_witness_t(&p, &q).unwrap();
        assert!(verify_witness(&w).is_verified());
        // non-primary pair
        let p = pt(0, vec![(int(0), &[3])]);
        let q = pt(0, vec![(int(0), &[1, 1, 1])]);
        assert_eq!(primary_witness_t(&p, &q), Err(WitnessError::NotPrimary));
    }

    #[test]
    fn primary_witnesses_verify_exhaustive_n4() {
        use crate::spectra::enumerate_specters;
        let eigs = [int(0), int(1), int(2)];
        for total in 1..=3u32 {
            for spec in enumerate_specters(total, &eigs) {
                for r in [0u8, 1] {
                    let p = TnPoint::new(r, spec.clone());
                    for q in primary_set_t(&p) {
                        let w = primary_witness_t(&p, &q).unwrap();
                        let v = verify_witness(&w);
                        assert!(v.is_verified(), "{p} -> {q}: {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn proper_degeneration_decreases_level() {
        use crate::spectra::enumerate_specters;
        let eigs = [int(0), int(1), int(2)];
        let mut points = Vec::new();
        for spec in enumerate_specters(3, &eigs) {
            points.push(TnPoint::new(0, spec.clone()));
            points.push(TnPoint::new(1, spec));
        }
        points.sort();
        points.dedup();
        for p in &points {
            for q in &points {
                if degenerates_t(p, q) && !same_orbit_t(p, q) {
                    assert!(level_t(p) > level_t(q), "{p} -> {q}");
                }
            }
        }
    }

    #[test]
    fn degenerates_is_primary_reachability() {
        use crate::spectra::enumerate_specters;
        use std::collections::BTreeMap;
        let eigs = [int(0), int(1), int(2)];
        for total in 1..=4u32 {
            let mut points: Vec<TnPoint> = Vec::new();
            for spec in enumerate_specters(total, &eigs) {
                points.push(TnPoint::new(0, spec.clone()));
                points.push(TnPoint::new(1, spec));
            }
            points.sort();
            points.dedup();
            // reachability closure of primary steps
            let mut reach: BTreeMap<TnPoint, BTreeSet<TnPoint>> = BTreeMap::new();
            fn visit(
                p: &TnPoint,
                reach: &mut BTreeMap<TnPoint, BTreeSet<TnPoint>>,
            ) -> BTreeSet<TnPoint> {
                if let Some(r) = reach.get(p) {
                    return r.clone();
                }
                let mut acc = BTreeSet::new();
                acc.insert(p.clone());
                for q in primary_set_t(p) {
                    acc.extend(visit(&q, reach));
                }
                reach.insert(p.clone(), acc.clone());
                acc
            }
            for p in &points {
                let closure = visit(p, &mut reach);
                for q in &points {
                    let direct = degenerates_t(p, q);
                    let via_chain = closure.iter().any(|c| same_orbit_t(c, q));
                    assert_eq!(direct, via_chain, "{p} vs {q}");
                }
            }
        }
    }
}
