//! Full specters of rational matrices and canonical representatives.
//!
//! The full specter of a square matrix is the set of pairs (eigenvalue,
//! Jordan-type partition); it classifies matrices up to conjugacy. The
//! canonical matrix attached to a specter is assembled from "chain" blocks:
//! lower 1-subdiagonal matrices whose diagonal carries a prescribed value
//! sequence.

use crate::exact::{rational_eigenvalues, ExactMatrix, Scalar, SpectrumError};
use crate::partitions::Partition;
use num_traits::{One, Zero};
use std::fmt;

type RatMatrix = ExactMatrix<Scalar>;

/// Set of (eigenvalue, Jordan type) pairs, kept sorted by eigenvalue.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FullSpecter {
    pairs: Vec<(Scalar, Partition)>,
}

impl FullSpecter {
    pub fn new(mut pairs: Vec<(Scalar, Partition)>) -> Self {
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        for w in pairs.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate eigenvalue in full specter");
        }
        assert!(pairs.iter().all(|(_, a)| !a.is_empty()));
        FullSpecter { pairs }
    }

    pub fn pairs(&self) -> &[(Scalar, Partition)] {
        &self.pairs
    }

    /// Total size, i.e. the dimension of any matrix with this specter.
    pub fn total(&self) -> u32 {
        self.pairs.iter().map(|(_, a)| a.total()).sum()
    }

    pub fn partition_for(&self, lambda: &Scalar) -> Option<&Partition> {
        self.pairs
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, a)| a)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].0.is_zero()
    }

    pub fn has_nonzero_eigenvalue(&self) -> bool {
        self.pairs.iter().any(|(l, _)| !l.is_zero())
    }

    /// Componentwise sum of all Jordan-type partitions.
    pub fn partition_sum(&self) -> Partition {
        Partition::sum(&self.pairs.iter().map(|(_, a)| a.clone()).collect::<Vec<_>>())
    }

    /// The action of a nonzero scalar: eigenvalues scale, types are kept.
    pub fn scaled(&self, alpha: &Scalar) -> FullSpecter {
        assert!(!alpha.is_zero());
        FullSpecter::new(
            self.pairs
                .iter()
                .map(|(l, a)| (l * alpha, a.clone()))
                .collect(),
        )
    }

    /// Canonical representative of the scaling orbit: the lexicographically
    /// least among all candidates that scale some eigenvalue to 1. Specters
    /// with only the zero eigenvalue are fixed points.
    pub fn scaling_canonical(&self) -> FullSpecter {
        let mut best: Option<FullSpecter> = None;
        for (l, _) in &self.pairs {
            if l.is_zero() {
                continue;
            }
            let cand = self.scaled(&l.clone().recip());
            if best.as_ref().is_none_or(|b| cand.pairs < b.pairs) {
                best = Some(cand);
            }
        }
        best.unwrap_or_else(|| self.clone())
    }
}

impl fmt::Display for FullSpecter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (l, a)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({l}, {a})")?;
        }
        write!(f, "}}")
    }
}

/// Jordan type of `m` at eigenvalue `lambda` from the rank drops of powers:
/// the number of blocks of size >= p is rank((M-lI)^{p-1}) - rank((M-lI)^p).
fn jordan_type(m: &RatMatrix, lambda: &Scalar) -> Partition {
    let n = m.rows();
    let mut shifted = m.clone();
    for i in 0..n {
        shifted[(i, i)] = &shifted[(i, i)] - lambda;
    }
    let mut ranks = vec![n];
    let mut power = RatMatrix::identity(n);
    loop {
        power = power.matmul(&shifted);
        let r = power.rank_exact();
        let last = *ranks.last().unwrap();
        ranks.push(r);
        if r == last {
            break;
        }
    }
    let mut parts = Vec::new();
    // blocks of size exactly p: (r_{p-1} - r_p) - (r_p - r_{p+1})
    for p in 1..ranks.len() - 1 {
        let at_least_p = ranks[p - 1] - ranks[p];
        let at_least_p1 = if p + 1 < ranks.len() {
            ranks[p] - ranks[p + 1]
        } else {
            0
        };
        for _ in 0..at_least_p - at_least_p1 {
            parts.push(p as u32);
        }
    }
    Partition::from_unsorted(parts)
}

/// Full specter of a square rational matrix with rational spectrum.
pub fn fs_of_matrix(m: &RatMatrix) -> Result<FullSpecter, SpectrumError> {
    assert!(m.is_square());
    let eigs = rational_eigenvalues(m)?;
    let pairs = eigs
        .into_iter()
        .map(|(lambda, _)| {
            let a = jordan_type(m, &lambda);
            (lambda, a)
        })
        .collect();
    Ok(FullSpecter::new(pairs))
}

/// Chain matrix: prescribed diagonal, ones on the first subdiagonal.
pub fn chain_matrix(values: &[Scalar]) -> RatMatrix {
    let n = values.len();
    RatMatrix::from_fn(n, n, |i, j| {
        if i == j {
            values[i].clone()
        } else if i == j + 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

pub fn jordan_block(lambda: &Scalar, size: usize) -> RatMatrix {
    chain_matrix(&vec![lambda.clone(); size])
}

pub fn block_diag(blocks: &[RatMatrix]) -> RatMatrix {
    let n: usize = blocks.iter().map(ExactMatrix::rows).sum();
    let mut m = RatMatrix::zero(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m[(off + i, off + j)] = b[(i, j)].clone();
            }
        }
        off += b.rows();
    }
    m
}

/// Representative tuples for the orbits of symmetric-group blocks acting on
/// value tuples, optionally together with global scaling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KRepresentative {
    pub blocks: Vec<usize>,
    pub values: Vec<Scalar>,
}

impl KRepresentative {
    /// Sorts each block segment non-increasingly (the K-set choice).
    pub fn canonical(blocks: &[usize], values: &[Scalar]) -> KRepresentative {
        assert_eq!(blocks.iter().sum::<usize>(), values.len());
        let mut out = values.to_vec();
        let mut off = 0;
        for &b in blocks {
            out[off..off + b].sort_by(|x, y| y.cmp(x));
            off += b;
        }
        KRepresentative {
            blocks: blocks.to_vec(),
            values: out,
        }
    }

    /// The K*-choice: additionally rescales so the first nonzero entry of
    /// the concatenated tuple is 1, taking the lexicographically least
    /// candidate. Returns the representative and the scaling applied;
    /// `None` on the zero tuple.
    pub fn canonical_star(blocks: &[usize], values: &[Scalar]) -> Option<(KRepresentative, Scalar)> {
        let mut best: Option<(KRepresentative, Scalar)> = None;
        for v in values {
            if v.is_zero() {
                continue;
            }
            let alpha = v.clone().recip();
            let scaled: Vec<Scalar> = values.iter().map(|w| w * &alpha).collect();
            let cand = Self::canonical(blocks, &scaled);
            let first_nonzero = cand.values.iter().find(|w| !w.is_zero());
            if first_nonzero != Some(&Scalar::one()) {
                continue;
            }
            if best.as_ref().is_none_or(|(b, _)| cand.values < b.values) {
                best = Some((cand, alpha));
            }
        }
        best
    }
}

/// The canonical matrix M(S): block-diagonal chain matrices built over a
/// value tuple determined by the specter, with the K-set ordering inside
/// each position group.
pub fn canonical_matrix(s: &FullSpecter) -> RatMatrix {
    let b = s.partition_sum();
    let len = b.len();
    if len == 0 {
        return RatMatrix::zero(0, 0);
    }
    // Position groups run from the tail of b: group j holds the positions
    // (b_{j+1}, b_j], all contained in exactly the blocks 1..=j. Within
    // group j the value lambda_i occurs a^i_j - a^i_{j+1} times.
    let mut tuple: Vec<Scalar> = Vec::with_capacity(b.part(0) as usize);
    for j in (0..len).rev() {
        let lo = b.part(j + 1);
        let hi = b.part(j);
        if hi == lo {
            continue;
        }
        let mut group: Vec<Scalar> = Vec::new();
        for (lambda, a) in s.pairs() {
            let count = a.part(j) - a.part(j + 1);
            for _ in 0..count {
                group.push(lambda.clone());
            }
        }
        assert_eq!(group.len() as u32, hi - lo);
        group.sort_by(|x, y| y.cmp(x));
        tuple.extend(group);
    }
    let blocks: Vec<RatMatrix> = (0..len)
        .map(|j| chain_matrix(&tuple[..b.part(j) as usize]))
        .collect();
    block_diag(&blocks)
}

/// A nonzero alpha with `alpha * s1 == s2`, when one exists. On specters
/// whose eigenvalues are all zero the answer is 1 exactly when the
/// partitions agree. The least admissible alpha is returned.
pub fn equal_mod_scaling(s1: &FullSpecter, s2: &FullSpecter) -> Option<Scalar> {
    if !s1.has_nonzero_eigenvalue() || !s2.has_nonzero_eigenvalue() {
        return (s1 == s2).then(Scalar::one);
    }
    let (l1, _) = s1.pairs().iter().find(|(l, _)| !l.is_zero())?;
    let mut candidates: Vec<Scalar> = s2
        .pairs()
        .iter()
        .filter(|(l, _)| !l.is_zero())
        .map(|(l2, _)| l2 / l1)
        .collect();
    candidates.sort();
    candidates.into_iter().find(|alpha| &s1.scaled(alpha) == s2)
}

/// Parses `lambda:p1.p2;mu:q1` into a full specter, e.g. `0:2.1` or
/// `1:2;0:1.1`. Eigenvalues are rationals, partitions dot-separated.
pub fn parse_full_specter(text: &str) -> Result<FullSpecter, String> {
    let mut pairs = Vec::new();
    for group in text.split(';') {
        let (l, parts) = group
            .split_once(':')
            .ok_or_else(|| format!("expected `eigenvalue:parts`, got `{group}`"))?;
        let lambda = crate::exact::parse_scalar(l).ok_or_else(|| format!("bad eigenvalue `{l}`"))?;
        let parsed: Result<Vec<u32>, _> = parts.split('.').map(|p| p.trim().parse::<u32>()).collect();
        let parsed = parsed.map_err(|_| format!("bad partition `{parts}`"))?;
        let partition = Partition::new(parsed).map_err(|e| e.to_string())?;
        pairs.push((lambda, partition));
    }
    if pairs.is_empty() {
        return Err("empty specter".into());
    }
    let mut sorted = pairs.clone();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    sorted.dedup_by(|a, b| a.0 == b.0);
    if sorted.len() != pairs.len() {
        return Err("duplicate eigenvalue".into());
    }
    Ok(FullSpecter::new(pairs))
}

/// All full specters of the given total size with eigenvalues drawn (each
/// at most once) from the given list; used by exhaustive sweeps.
pub fn enumerate_specters(total: u32, eigs: &[Scalar]) -> Vec<FullSpecter> {
    fn rec(
        remaining: u32,
        eigs: &[Scalar],
        from: usize,
        acc: &mut Vec<(Scalar, Partition)>,
        out: &mut Vec<FullSpecter>,
    ) {
        if remaining == 0 {
            if !acc.is_empty() {
                out.push(FullSpecter::new(acc.clone()));
            }
            return;
        }
        for i in from..eigs.len() {
            for k in 1..=remaining {
                for p in Partition::enumerate(k) {
                    acc.push((eigs[i].clone(), p));
                    rec(remaining - k, eigs, i + 1, acc, out);
                    acc.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(total, eigs, 0, &mut Vec::new(), &mut out);
    out
}

/// One Jordan block in a canonical decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JordanBlockSpec {
    pub eigenvalue: Scalar,
    pub size: usize,
}

/// Incremental row-space tracker over the rationals.
pub(crate) struct RowSpan {
    reduced: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new() -> Self {
        RowSpan {
            reduced: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    pub fn reduced_rows(&self) -> Vec<Vec<Scalar>> {
        self.reduced.clone()
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds the vector if independent; reports whether the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].clone().recip();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        self.reduced.push(v);
        self.pivots.push(p);
        true
    }
}

fn apply(m: &RatMatrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| &m[(i, j)] * &v[j]).sum())
        .collect()
}

/// Jordan basis: returns `(p, blocks)` with `p^{-1} * m * p` block diagonal
/// with chain-convention Jordan blocks, eigenvalues ascending and block
/// sizes descending. Columns of `p` are the generalized eigenvector chains.
pub fn jordan_basis(m: &RatMatrix) -> Result<(RatMatrix, Vec<JordanBlockSpec>), SpectrumError> {
    assert!(m.is_square());
    let n = m.rows();
    let eigs = rational_eigenvalues(m)?;
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    let mut blocks = Vec::new();
    for (lambda, _) in eigs {
        let mut shifted = m.clone();
        for i in 0..n {
            shifted[(i, i)] = &shifted[(i, i)] - &lambda;
        }
        // Kernels of successive powers.
        let mut kernels: Vec<Vec<Vec<Scalar>>> = vec![Vec::new()];
        let mut power = RatMatrix::identity(n);
        loop {
            power = power.matmul(&shifted);
            let k = power.kernel_basis();
            if k.len() == kernels.last().unwrap().len() {
                break;
            }
            kernels.push(k);
        }
        let p_max = kernels.len() - 1;
        // chains[h] = tops of chains of height h.
        let mut chains: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); p_max + 1];
        for h in (1..=p_max).rev() {
            let mut span = RowSpan::new();
            for v in &kernels[h - 1] {
                span.insert(v);
            }
            // Images at height h of the taller chains already chosen.
            for taller in h + 1..=p_max {
                for top in &chains[taller] {
                    let mut v = top.clone();
                    for _ in 0..taller - h {
                        v = apply(&shifted, &v);
                    }
                    span.insert(&v);
                }
            }
            for v in &kernels[h] {
                if span.insert(v) {
                    chains[h].push(v.clone());
                }
            }
        }
        for h in (1..=p_max).rev() {
            for top in &chains[h] {
                let mut v = top.clone();
                for step in 0..h {
                    columns.push(v.clone());
                    if step + 1 < h {
                        v = apply(&shifted, &v);
                    }
                }
                blocks.push(JordanBlockSpec {
                    eigenvalue: lambda.clone(),
                    size: h,
                });
            }
        }
    }
    assert_eq!(columns.len(), n, "generalized eigenvectors must fill the space");
    let p = RatMatrix::from_fn(n, n, |i, j| columns[j][i].clone());
    Ok((p, blocks))
}

/// Invertible `x` with `b = x^{-1} * a * x`, provided `a` and `b` are
/// conjugate with rational spectra.
pub fn similarity_transform(a: &RatMatrix, b: &RatMatrix) -> Result<Option<RatMatrix>, SpectrumError> {
    if a.rows() != b.rows() {
        return Ok(None);
    }
    let (pa, blocks_a) = jordan_basis(a)?;
    let (pb, blocks_b) = jordan_basis(b)?;
    if blocks_a != blocks_b {
        return Ok(None);
    }
    let x = pa.matmul(&pb.inverse().expect("Jordan basis is invertible"));
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(rows: Vec<Vec<i64>>) -> RatMatrix {
        RatMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(int).collect())
                .collect(),
        )
    }

    #[test]
    fn fs_basic_shapes() {
        let nil = rat(vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(
            fs_of_matrix(&nil).unwrap(),
            FullSpecter::new(vec![(int(0), part(&[2]))])
        );
        let id3 = RatMatrix::identity(3);
        assert_eq!(
            fs_of_matrix(&id3).unwrap(),
            FullSpecter::new(vec![(int(1), part(&[1, 1, 1]))])
        );
    }

    #[test]
    fn canonical_examples() {
        let s = FullSpecter::new(vec![(int(0), part(&[2]))]);
        assert_eq!(canonical_matrix(&s), rat(vec![vec![0, 0], vec![1, 0]]));
        let s = FullSpecter::new(vec![(int(5), part(&[1, 1, 1]))]);
        assert_eq!(canonical_matrix(&s), RatMatrix::identity(3).scale(&int(5)));
        // Distinct simple eigenvalues share one chain block; the K ordering
        // puts 1 before 0 on the diagonal.
        let s = FullSpecter::new(vec![(int(1), part(&[1])), (int(0), part(&[1]))]);
        let m = canonical_matrix(&s);
        assert_eq!(m, rat(vec![vec![1, 0], vec![1, 0]]));
    }

    #[test]
    fn fs_of_canonical_is_identity_small() {
        // All specters of total <= 5 with eigenvalues from {-1, 0, 1, 2}.
        let eigs = [int(-1), int(0), int(1), int(2)];
        for total in 1..=5u32 {
            for s in enumerate_specters(total, &eigs) {
                let m = canonical_matrix(&s);
                assert_eq!(fs_of_matrix(&m).unwrap(), s, "roundtrip of {s}");
            }
        }
    }

    #[test]
    fn conjugation_invariance() {
        let m = block_diag(&[jordan_block(&int(1), 2), jordan_block(&int(0), 1)]);
        let u = rat(vec![vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 3]]);
        let conj = u.inverse().unwrap().matmul(&m).matmul(&u);
        assert_eq!(fs_of_matrix(&m).unwrap(), fs_of_matrix(&conj).unwrap());
    }

    #[test]
    fn scaling_action() {
        let s = FullSpecter::new(vec![(int(1), part(&[2]))]);
        let t = FullSpecter::new(vec![(int(3), part(&[2]))]);
        assert_eq!(equal_mod_scaling(&s, &t), Some(int(3)));
        let nil = FullSpecter::new(vec![(int(0), part(&[2]))]);
        assert_eq!(equal_mod_scaling(&nil, &nil), Some(int(1)));
        let u = FullSpecter::new(vec![(int(1), part(&[1, 1]))]);
        assert_eq!(equal_mod_scaling(&s, &u), None);
    }

    #[test]
    fn chain_blocks_realize_the_count_formula() {
        // For any value tuple, the block-diagonal chain matrix over the
        // prefixes of a partition b has, at each eigenvalue L, the Jordan
        // type a_j = #{q <= b_j : alpha_q = L} — even when equal values
        // sit in separated runs of one chain.
        let mut state = 0x1234_5678_9abcu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let total = 2 + (next() % 4) as u32;
            let bs = Partition::enumerate(total);
            let b = bs[(next() % bs.len() as u64) as usize].clone();
            let tuple: Vec<Scalar> = (0..b.part(0))
                .map(|_| int((next() % 3) as i64))
                .collect();
            let blocks: Vec<RatMatrix> = b
                .parts()
                .iter()
                .map(|&p| chain_matrix(&tuple[..p as usize]))
                .collect();
            let m = block_diag(&blocks);
            let fs = fs_of_matrix(&m).unwrap();
            let mut expected: Vec<(Scalar, Partition)> = Vec::new();
            let mut values = tuple.clone();
            values.sort();
            values.dedup();
            for lambda in values {
                let parts: Vec<u32> = (0..b.len())
                    .map(|j| {
                        tuple[..b.part(j) as usize]
                            .iter()
                            .filter(|v| **v == lambda)
                            .count() as u32
                    })
                    .collect();
                let a = Partition::from_unsorted(parts);
                if !a.is_empty() {
                    expected.push((lambda, a));
                }
            }
            assert_eq!(fs, FullSpecter::new(expected), "b = {b}, tuple = {tuple:?}");
        }
    }

    #[test]
    fn scaling_recovered_for_nonzero_spectra() {
        let s = FullSpecter::new(vec![(int(1), part(&[2])), (int(-2), part(&[1]))]);
        for alpha in [int(2), int(-1), crate::exact::frac(3, 7)] {
            let scaled = s.scaled(&alpha);
            let got = equal_mod_scaling(&s, &scaled).unwrap();
            assert_eq!(s.scaled(&got), scaled);
        }
    }

    #[test]
    fn k_representatives() {
        let k = KRepresentative::canonical(&[2, 1], &[int(0), int(2), int(1)]);
        assert_eq!(k.values, vec![int(2), int(0), int(1)]);
        let (k, alpha) =
            KRepresentative::canonical_star(&[2], &[int(-2), int(-4)]).unwrap();
        assert_eq!(alpha, frac_scalar(-1, 4));
        assert_eq!(k.values, vec![int(1), frac_scalar(1, 2)]);
        assert!(KRepresentative::canonical_star(&[2], &[int(0), int(0)]).is_none());
    }

    fn frac_scalar(p: i64, q: i64) -> Scalar {
        crate::exact::frac(p, q)
    }

    #[test]
    fn jordan_basis_reconstructs() {
        let m = rat(vec![
            vec![2, 0, 0, 0],
            vec![1, 2, 0, 0],
            vec![0, 0, 2, 0],
            vec![0, 0, 5, 3],
        ]);
        let (p, blocks) = jordan_basis(&m).unwrap();
        let j = block_diag(
            &blocks
                .iter()
                .map(|b| jordan_block(&b.eigenvalue, b.size))
                .collect::<Vec<_>>(),
        );
        let lhs = p.inverse().unwrap().matmul(&m).matmul(&p);
        assert_eq!(lhs, j);
    }

    #[test]
    fn similarity_between_conjugates() {
        let a = chain_matrix(&[int(1), int(1), int(0)]);
        let b = block_diag(&[jordan_block(&int(1), 2), jordan_block(&int(0), 1)]);
        let x = similarity_transform(&a, &b).unwrap().unwrap();
        assert_eq!(x.inverse().unwrap().matmul(&a).matmul(&x), b);
        let c = RatMatrix::identity(3);
        assert!(similarity_transform(&a, &c).unwrap().is_none());
    }
}
