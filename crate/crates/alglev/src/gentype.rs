//! Generation type: word machinery, generic-point subalgebra closure, and
//! the constructive degeneration onto a standard 1-generated algebra.
//!
//! Words in a single generator are indexed by positive integers split into
//! Catalan-sized degree classes `S_i`; each index `m > 1` factors uniquely
//! as a product of two earlier indices via the fixed bijections `F_i`.

use crate::algebra::AlgebraStructure;
use crate::degeneration::{contract_along, ParametrizedBasis};
use crate::exact::{LaurentPoly, MPoly, Ring, Scalar};
use crate::spectra::RowSpan;
use num_integer::Integer;
use std::collections::HashMap;
use std::sync::Mutex;
use thiserror::Error;

/// Index data for words in one generator.
///
/// `S_i` is the block of indices of degree `i` (of size the Catalan number
/// C_{i-1}); the pairs of each block are ordered lexicographically, which
/// realizes the required monotone bijections.
#[derive(Clone, Debug, Default)]
pub struct WordTable {
    /// degree of each index (1-based; entry 0 unused)
    degrees: Vec<usize>,
    /// factorization of each index into (left, right); None for index 1
    pairs: Vec<Option<(usize, usize)>>,
    inverse: HashMap<(usize, usize), usize>,
    /// first index of each degree class (1-based degrees)
    class_start: Vec<usize>,
}

impl WordTable {
    /// Table covering at least the indices `1..=max_index`.
    pub fn with_max_index(max_index: usize) -> WordTable {
        let mut t = WordTable {
            degrees: vec![0, 1],
            pairs: vec![None, None],
            inverse: HashMap::new(),
            class_start: vec![0, 1],
        };
        while t.degrees.len() <= max_index {
            t.extend_one_degree();
        }
        t
    }

    /// Table covering all indices of degree at most `max_degree`.
    pub fn with_max_degree(max_degree: usize) -> WordTable {
        let mut t = Self::with_max_index(1);
        while t.max_degree() < max_degree {
            t.extend_one_degree();
        }
        t
    }

    pub fn max_degree(&self) -> usize {
        self.class_start.len() - 1
    }

    pub fn max_index(&self) -> usize {
        self.degrees.len() - 1
    }

    fn extend_one_degree(&mut self) {
        let next_degree = self.max_degree() + 1;
        let start = self.degrees.len();
        self.class_start.push(start);
        let mut pairs = Vec::new();
        for l in 1..start {
            for r in 1..start {
                if self.degrees[l] + self.degrees[r] == next_degree {
                    pairs.push((l, r));
                }
            }
        }
        pairs.sort();
        for (l, r) in pairs {
            let m = self.degrees.len();
            self.degrees.push(next_degree);
            self.pairs.push(Some((l, r)));
            self.inverse.insert((l, r), m);
        }
    }

    pub fn degree(&self, m: usize) -> usize {
        self.degrees[m]
    }

    /// The pair `(l_m, r_m)` with `F(m) = (l_m, r_m)`; `None` for `m = 1`.
    pub fn pair(&self, m: usize) -> Option<(usize, usize)> {
        self.pairs[m]
    }

    /// `F^{-1}(l, r)`, extending the table as needed.
    pub fn compose(&mut self, l: usize, r: usize) -> usize {
        let target = self.degrees[l] + self.degrees[r];
        while self.max_degree() < target {
            self.extend_one_degree();
        }
        self.inverse[&(l, r)]
    }

    /// The index range of `S_i`.
    pub fn class(&self, degree: usize) -> std::ops::Range<usize> {
        let start = self.class_start[degree];
        let end = if degree < self.class_start.len() - 1 {
            self.class_start[degree + 1]
        } else {
            self.degrees.len()
        };
        start..end
    }
}

/// Catalan numbers `C_0, C_1, ...` via the convolution recursion.
pub fn catalan(upto: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for i in 1..=upto {
        let next = (0..i).map(|j| c[j] * c[i - 1 - j]).sum();
        c.push(next);
    }
    c
}

/// The i-th word polynomial tuple `f^{mu,i}` in n variables; results are
/// memoized per structure.
pub fn f_mu(a: &AlgebraStructure, i: usize) -> Vec<MPoly> {
    assert!(i >= 1);
    static MEMO: Mutex<Option<HashMap<(usize, Vec<Scalar>), Vec<Vec<MPoly>>>>> = Mutex::new(None);
    let key = (a.dim(), a.constants().to_vec());
    let mut guard = MEMO.lock().unwrap();
    let memo = guard.get_or_insert_with(HashMap::new);
    let cache = memo.entry(key).or_default();
    if cache.is_empty() {
        let n = a.dim();
        cache.push((0..n).map(|j| MPoly::var(n, j)).collect());
    }
    if i > cache.len() {
        let table = WordTable::with_max_index(i);
        for m in cache.len() + 1..=i {
            let (l, r) = table.pair(m).unwrap();
            let prod = a.product_in::<MPoly>(&cache[l - 1], &cache[r - 1]);
            cache.push(prod);
        }
    }
    cache[i - 1].clone()
}

/// Row span of n-tuples of polynomials over the rational function field,
/// maintained fraction-free (rows are projective, so scaling is allowed).
struct PolyRowSpan {
    rows: Vec<Vec<MPoly>>,
    pivots: Vec<usize>,
}

impl PolyRowSpan {
    fn new() -> Self {
        PolyRowSpan {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[MPoly]) -> Vec<MPoly> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                // v := pivot * v - v[p] * row stays polynomial.
                let vp = v[p].clone();
                let pivot = row[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = pivot.mul(x).sub(&vp.mul(r));
                }
            }
        }
        v
    }

    fn insert(&mut self, v: &[MPoly]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // Strip rational content to keep coefficients small.
        let mut content: Option<Scalar> = None;
        for poly in &v {
            for (_, c) in poly.terms() {
                content = Some(match content {
                    None => c.clone(),
                    Some(acc) => Scalar::new(acc.numer().gcd(c.numer()), acc.denom().lcm(c.denom())),
                });
            }
        }
        if let Some(content) = content {
            if !Ring::is_zero(&content) {
                let inv = content.recip();
                for x in v.iter_mut() {
                    *x = x.scale(&inv);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// Generation type: the dimension of the subalgebra generated by the
/// generic vector over the rational function field. Computed by closure
/// iteration (span products, reduce, repeat); the generic value equals the
/// maximum over all specializations because each sublevel set is closed.
pub fn gen_type(a: &AlgebraStructure) -> usize {
    let n = a.dim();
    let generic: Vec<MPoly> = (0..n).map(|j| MPoly::var(n, j)).collect();
    let mut span = PolyRowSpan::new();
    span.insert(&generic);
    let mut basis: Vec<Vec<MPoly>> = vec![generic];
    loop {
        let mut grew = false;
        let mut new_elems = Vec::new();
        for x in &basis {
            for y in &basis {
                let prod = a.product_in::<MPoly>(x, y);
                if span.insert(&prod) {
                    new_elems.push(span.rows.last().unwrap().clone());
                    grew = true;
                }
            }
        }
        if !grew || span.rank() == n {
            return span.rank();
        }
        basis.extend(new_elems);
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenTypeError {
    #[error("generator does not realize the generation type (subalgebra has dim {got}, G = {expected})")]
    NotMaximalGenerator { got: usize, expected: usize },
    #[error("generator must be a nonzero vector of the algebra's dimension")]
    BadGenerator,
}

/// Constructive degeneration onto (standard 1-generated of dim m) + k^{n-m}
/// along the word pivots of the given generator.
///
/// Returns the parametrized basis `E_l^t = t^{d_l} v_{i_l}` (completed on
/// the trivial part with weight `t^{d_m}`) and the verified limit.
pub fn standard_contraction(
    a: &AlgebraStructure,
    generator: &[Scalar],
) -> Result<(ParametrizedBasis, AlgebraStructure), GenTypeError> {
    let n = a.dim();
    if generator.len() != n || generator.iter().all(Ring::is_zero) {
        return Err(GenTypeError::BadGenerator);
    }
    let expected = gen_type(a);

    // Word vectors v_i at the generator; pivots chosen by first linear
    // independence in index order. Beyond the generator itself every new
    // pivot is a product of two earlier pivots, so scanning products of
    // current pivots by ascending composed index is exhaustive.
    let mut table = WordTable::with_max_index(2);
    let mut vectors: HashMap<usize, Vec<Scalar>> = HashMap::new();
    vectors.insert(1, generator.to_vec());
    let mut span = RowSpan::new();
    span.insert(generator);
    let mut pivots: Vec<usize> = vec![1];
    loop {
        let mut candidates: Vec<usize> = Vec::new();
        for &l in &pivots {
            for &r in &pivots {
                candidates.push(table.compose(l, r));
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        let mut advanced = false;
        for m in candidates {
            let (l, r) = table.pair(m).unwrap();
            let vl = vectors[&l].clone();
            let vr = vectors[&r].clone();
            let v = a.product(&vl, &vr);
            vectors.insert(m, v.clone());
            if span.insert(&v) {
                pivots.push(m);
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    let m = pivots.len();
    if m != expected {
        return Err(GenTypeError::NotMaximalGenerator { got: m, expected });
    }

    let degrees: Vec<usize> = pivots.iter().map(|&i| table.degree(i)).collect();
    let d_max = *degrees.last().unwrap();

    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    for (l, &iv) in pivots.iter().enumerate() {
        let v = &vectors[&iv];
        rows.push(
            v.iter()
                .map(|c| LaurentPoly::monomial(degrees[l] as i64, c.clone()))
                .collect(),
        );
    }
    let mut completion_span = RowSpan::new();
    for &iv in &pivots {
        completion_span.insert(&vectors[&iv]);
    }
    for i in 0..n {
        let mut e = vec![<Scalar as Ring>::zero(); n];
        e[i] = <Scalar as Ring>::one();
        if completion_span.insert(&e) {
            rows.push(
                e.iter()
                    .map(|c| LaurentPoly::monomial(d_max as i64, c.clone()))
                    .collect(),
            );
        }
    }
    let basis = ParametrizedBasis::new(rows);
    let limit = contract_along(a, &basis).expect("word-pivot contraction has no poles");

    debug_assert!(standard_limit_checks(&limit, m, &degrees));
    Ok((basis, limit))
}

/// The limit splits as (graded, generated in degree 1) + zero summand.
fn standard_limit_checks(limit: &AlgebraStructure, m: usize, degrees: &[usize]) -> bool {
    let n = limit.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = limit.get(i, j, k);
                if Ring::is_zero(c) {
                    continue;
                }
                if i >= m || j >= m || k >= m {
                    return false;
                }
                if degrees[i] + degrees[j] != degrees[k] {
                    return false;
                }
            }
        }
    }
    // The restriction to the first m coordinates is generated by e_1.
    let mut gen = vec![<Scalar as Ring>::zero(); n];
    gen[0] = <Scalar as Ring>::one();
    let mut span = RowSpan::new();
    span.insert(&gen);
    loop {
        let basis = span.reduced_rows();
        let mut grew = false;
        for x in &basis {
            for y in &basis {
                if span.insert(&limit.product(x, y)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    span.rank() == m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;
    use crate::degeneration::{verify_witness, DegenerationWitness, Verdict};
    use crate::exact::{frac, int, ExactMatrix};

    type RatMatrix = ExactMatrix<Scalar>;

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(7), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn word_classes() {
        let t = WordTable::with_max_degree(4);
        assert_eq!(t.class(1), 1..2);
        assert_eq!(t.class(2), 2..3);
        assert_eq!(t.class(3), 3..5);
        assert_eq!(t.class(4), 5..10);
        assert_eq!(t.pair(2), Some((1, 1)));
        assert_eq!(t.pair(3), Some((1, 2)));
        assert_eq!(t.pair(4), Some((2, 1)));
    }

    #[test]
    fn word_monotonicity_up_to_200() {
        let t = WordTable::with_max_index(200);
        for m in 2..=200usize {
            for l in 2..=200usize {
                let (lm, rm) = t.pair(m).unwrap();
                let (ll, rl) = t.pair(l).unwrap();
                if lm <= ll && rm <= rl {
                    assert!(m <= l, "monotonicity fails at {m}, {l}");
                }
            }
        }
    }

    #[test]
    fn f_mu_examples() {
        let a3 = catalog("A3", &[], 2).unwrap();
        let f1 = f_mu(&a3, 1);
        assert_eq!(f1, vec![MPoly::var(2, 0), MPoly::var(2, 1)]);
        let f2 = f_mu(&a3, 2);
        let x1 = MPoly::var(2, 0);
        assert_eq!(f2, vec![MPoly::zero(2), x1.mul(&x1)]);
        let zero = AlgebraStructure::zero(2);
        for i in 2..6 {
            assert!(f_mu(&zero, i).iter().all(MPoly::is_zero));
        }
    }

    #[test]
    fn gen_type_spot_values() {
        assert_eq!(gen_type(&catalog("A3", &[], 4).unwrap()), 2);
        assert_eq!(gen_type(&catalog("eta", &[int(2)], 5).unwrap()), 1);
        assert_eq!(gen_type(&catalog("G", &[], 3).unwrap()), 3);
        assert_eq!(gen_type(&catalog("Gab", &[int(1), int(2)], 3).unwrap()), 3);
        assert_eq!(gen_type(&AlgebraStructure::zero(3)), 1);
        assert_eq!(gen_type(&catalog("nu", &[frac(1, 2)], 3).unwrap()), 1);
        // E_4 (and its extensions) square every vector onto itself, so the
        // generation type is 1 despite the rich-looking table.
        assert_eq!(gen_type(&catalog("E4", &[], 2).unwrap()), 1);
        assert_eq!(gen_type(&catalog("ext_E4", &[], 4).unwrap()), 1);
    }

    #[test]
    fn gen_type_is_basis_invariant() {
        let g = RatMatrix::from_rows(vec![
            vec![int(1), int(2), int(0)],
            vec![int(0), int(1), int(1)],
            vec![int(1), int(0), int(1)],
        ]);
        for a in [
            catalog("G", &[], 3).unwrap(),
            catalog("n3", &[], 3).unwrap(),
            catalog("F", &[int(1), int(1)], 3).unwrap(),
        ] {
            let b = a.apply_basis_change(&g).unwrap();
            assert_eq!(gen_type(&a), gen_type(&b));
        }
    }

    #[test]
    fn word_span_matches_closure_at_random_point() {
        // For small structures the span of f^{mu,i} evaluated at a point
        // equals the numeric subalgebra closure at that point.
        let samples = [
            catalog("G", &[], 3).unwrap(),
            catalog("F", &[int(2), int(1)], 3).unwrap(),
            catalog("nu", &[int(3)], 3).unwrap(),
        ];
        let point = vec![int(1), frac(1, 2), int(-2)];
        for a in samples {
            let mut word_span = RowSpan::new();
            for i in 1..=12 {
                let val: Vec<Scalar> = f_mu(&a, i).iter().map(|p| p.eval(&point)).collect();
                word_span.insert(&val);
            }
            let mut closure = RowSpan::new();
            closure.insert(&point);
            loop {
                let basis = closure.reduced_rows();
                let mut grew = false;
                for x in &basis {
                    for y in &basis {
                        if closure.insert(&a.product(x, y)) {
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            assert_eq!(word_span.rank(), closure.rank());
        }
    }

    #[test]
    fn standard_contraction_of_g_is_identity() {
        let g = catalog("G", &[], 3).unwrap();
        let e1 = vec![int(1), int(0), int(0)];
        let (basis, limit) = standard_contraction(&g, &e1).unwrap();
        assert_eq!(limit, g);
        let w = DegenerationWitness {
            source: g,
            basis,
            target: limit,
            label: String::new(),
        };
        assert!(matches!(verify_witness(&w), Verdict::Verified));
    }

    #[test]
    fn standard_contraction_of_nu_kills_everything() {
        let nu = catalog("nu", &[int(2)], 3).unwrap();
        let e1 = vec![int(1), int(0), int(0)];
        let (_, limit) = standard_contraction(&nu, &e1).unwrap();
        assert!(limit.is_zero_algebra());
    }

    #[test]
    fn standard_contraction_of_a3_plus_k() {
        let a = catalog("A3", &[], 3).unwrap();
        let e1 = vec![int(1), int(0), int(0)];
        let (_, limit) = standard_contraction(&a, &e1).unwrap();
        assert_eq!(limit, a);
    }

    #[test]
    fn standard_contraction_rejects_bad_generator() {
        // e3 generates only itself in A_3 + k, but G(A_3 + k) = 2.
        let a = catalog("A3", &[], 3).unwrap();
        let e3 = vec![int(0), int(0), int(1)];
        assert_eq!(
            standard_contraction(&a, &e3),
            Err(GenTypeError::NotMaximalGenerator { got: 1, expected: 2 })
        );
    }

    #[test]
    fn standard_contraction_limit_gen_type() {
        // The limit is an m-dimensional standard algebra plus a trivial
        // summand, so its generation type is m (the 1-dim standard algebra
        // is the zero algebra).
        let samples = [
            (catalog("Gab", &[int(2), int(3)], 3).unwrap(), 3usize),
            (catalog("F", &[int(1), int(2)], 4).unwrap(), 2),
            (catalog("ext_E4", &[], 4).unwrap(), 1),
        ];
        for (a, m) in samples {
            let mut gen = vec![int(0); a.dim()];
            gen[0] = int(1);
            let (_, limit) = standard_contraction(&a, &gen).unwrap();
            if m == 1 {
                assert!(limit.is_zero_algebra());
            } else {
                assert_eq!(gen_type(&limit), m);
            }
        }
    }
}
