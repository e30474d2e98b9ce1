//! Programmatic construction of the shipped witness library.
//!
//! Every explicit parametrized-basis degeneration used in the
//! classification is built here with concrete rational parameters; the
//! `.deg` files under `witnesses/` are the serialized form, regenerated by
//! the `gen-witnesses` binary and cross-checked in tests.

use crate::algebra::catalog;
use crate::degeneration::{DegenerationWitness, ParametrizedBasis};
use crate::exact::{frac, int, ExactMatrix, LaurentPoly, Scalar};
use crate::extensions::{reduce_extension, ExtensionSpec, ReductionRow};
use crate::partitions::Partition;
use crate::spectra::FullSpecter;
use crate::tn::{primary_witness_t, TnPoint};

type AlgebraStructureCase = (&'static str, Vec<Scalar>, usize);

type RatMatrix = ExactMatrix<Scalar>;

fn lp(v: i64) -> LaurentPoly {
    LaurentPoly::constant(int(v))
}

fn lpt(exp: i64, v: i64) -> LaurentPoly {
    LaurentPoly::monomial(exp, int(v))
}

fn lpq(exp: i64, c: Scalar) -> LaurentPoly {
    LaurentPoly::monomial(exp, c)
}

fn basis(rows: Vec<Vec<LaurentPoly>>) -> ParametrizedBasis {
    ParametrizedBasis::new(rows)
}

/// Sparse basis rows: each row is a list of (column, coefficient).
fn sparse(n: usize, rows: Vec<Vec<(usize, LaurentPoly)>>) -> ParametrizedBasis {
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for (i, terms) in rows.into_iter().enumerate() {
        for (j, c) in terms {
            out[i][j - 1] = c;
        }
    }
    basis(out)
}

fn rat2(entries: [[i64; 2]; 2]) -> RatMatrix {
    RatMatrix::from_rows(
        entries
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect(),
    )
}

fn spec_point(r: u8, pairs: Vec<(Scalar, Vec<u32>)>) -> TnPoint {
    TnPoint::new(
        r,
        FullSpecter::new(
            pairs
                .into_iter()
                .map(|(l, p)| (l, Partition::new(p).unwrap()))
                .collect(),
        ),
    )
}

fn with_label(mut w: DegenerationWitness, label: &str) -> DegenerationWitness {
    w.label = label.to_string();
    w
}

/// All shipped witnesses with their file names.
pub fn builtin() -> Vec<(&'static str, DegenerationWitness)> {
    let mut out: Vec<(&'static str, DegenerationWitness)> = Vec::new();

    // --- standard 1-generated chain ---
    out.push((
        "st_G_to_G11.deg",
        DegenerationWitness {
            source: catalog("G", &[], 3).unwrap(),
            basis: sparse(3, vec![
                vec![(1, lpt(1, 1)), (2, lpt(1, 1))],
                vec![(2, lpt(2, 1)), (3, lpt(2, 1))],
                vec![(3, lpt(3, 1))],
            ]),
            target: catalog("Gab", &[int(1), int(1)], 3).unwrap(),
            label: "G to G^{1,1}".into(),
        },
    ));
    out.push((
        "st_Gab_to_F.deg",
        DegenerationWitness {
            source: catalog("Gab", &[int(2), int(3)], 3).unwrap(),
            basis: sparse(3, vec![
                vec![(1, lpt(1, 1))],
                vec![(2, lpt(1, 1)), (3, lpt(1, -1))],
                vec![(3, lpt(2, 1))],
            ]),
            target: catalog("F", &[int(2), int(3)], 3).unwrap(),
            label: "G^{a,b} to F^{a,b} at (2,3)".into(),
        },
    ));
    out.push((
        "st_F_to_A3.deg",
        DegenerationWitness {
            source: catalog("F", &[int(2), int(3)], 3).unwrap(),
            basis: sparse(3, vec![
                vec![(1, lp(1))],
                vec![(3, lp(1))],
                vec![(2, lpt(1, 1))],
            ]),
            target: catalog("A3", &[], 3).unwrap(),
            label: "F^{a,b} to A3 + k at (2,3)".into(),
        },
    ));

    // --- orbit closures of the level-2 generation-type-1 structures ---
    out.push((
        "orbits2_extE4_to_pminus.deg",
        DegenerationWitness {
            source: catalog("ext_E4", &[], 4).unwrap(),
            basis: sparse(4, vec![
                vec![(1, lp(1)), (2, lp(-1))],
                vec![(2, lpt(1, 1))],
                vec![(3, lp(1))],
                vec![(4, lp(1))],
            ]),
            target: catalog("p_minus", &[], 4).unwrap(),
            label: "k^2 x| E4 to p-".into(),
        },
    ));
    out.push((
        "orbits2_extE4_to_nu.deg",
        DegenerationWitness {
            source: catalog("ext_E4", &[], 4).unwrap(),
            basis: sparse(4, vec![
                vec![(1, lp(2)), (2, lp(-1))],
                vec![(2, lpt(1, 1))],
                vec![(3, lp(1))],
                vec![(4, lp(1))],
            ]),
            target: catalog("nu", &[int(2)], 4).unwrap(),
            label: "k^2 x| E4 to nu^2".into(),
        },
    ));
    out.push((
        "orbits2_eta2_to_eta1.deg",
        DegenerationWitness {
            source: catalog("eta", &[int(2)], 5).unwrap(),
            basis: sparse(5, vec![
                vec![(1, lp(1))],
                vec![(2, lp(1))],
                vec![(5, lp(1))],
                vec![(4, lp(1))],
                vec![(3, lpt(1, 1))],
            ]),
            target: catalog("eta", &[int(1)], 5).unwrap(),
            label: "eta_2 to eta_1 + k^2".into(),
        },
    ));

    // --- extensions of A3 ---
    out.push((
        "a3ext_extA3_to_T0_01.deg",
        DegenerationWitness {
            source: catalog("ext_A3", &[], 4).unwrap(),
            basis: sparse(4, vec![
                vec![(1, lp(1))],
                vec![(2, lpt(-1, 1)), (3, lp(1))],
                vec![(3, lp(1))],
                vec![(4, lp(1))],
            ]),
            target: {
                use crate::spectra::{block_diag, chain_matrix};
                crate::tn::build_t(
                    0,
                    &block_diag(&[chain_matrix(&[int(0), int(1)]), RatMatrix::identity(1)]),
                )
            },
            label: "k^2 x| A3 to T_0^{2,(0,1)}".into(),
        },
    ));
    out.push((
        "a3ext_ext2A3_to_F.deg",
        DegenerationWitness {
            source: catalog("ext2_A3", &[int(2), int(3)], 4).unwrap(),
            basis: sparse(4, vec![
                vec![(1, lpt(1, 1))],
                vec![(3, lp(1))],
                vec![(4, lpt(1, 1))],
                vec![(2, lpt(1, 1)), (4, lp(-1))],
            ]),
            target: catalog("F", &[int(2), int(3)], 4).unwrap(),
            label: "k^2 x|_{2,3} A3 to F^{2,3} + k".into(),
        },
    ));

    // --- reductions of level-3 two-dimensional bases ---
    let l1 = rat2([[1, 0], [2, 1]]);
    let r1 = rat2([[0, 1], [1, 1]]);
    let l2 = rat2([[1, 1], [0, 2]]);
    let r2 = rat2([[2, 0], [1, 0]]);
    let lev3: [(&'static str, &str, Vec<Scalar>, ReductionRow); 6] = [
        ("lev3_A4_to_A2.deg", "A4", vec![int(2)], ReductionRow::A4),
        ("lev3_B1_to_A2.deg", "B1", vec![int(3)], ReductionRow::B1),
        ("lev3_C_to_A1.deg", "C", vec![int(2), int(1)], ReductionRow::C),
        ("lev3_D1_to_D2.deg", "D1", vec![int(2), int(3)], ReductionRow::D1),
        ("lev3_D3_to_D2.deg", "D3", vec![int(2), int(2)], ReductionRow::D3),
        (
            "lev3_E1_to_D2.deg",
            "E1",
            vec![int(1), int(2), int(3), int(5)],
            ReductionRow::E1,
        ),
    ];
    for (file, base, params, row) in lev3 {
        let spec = ExtensionSpec::from_base_name(
            base,
            &params,
            l1.clone(),
            r1.clone(),
            l2.clone(),
            r2.clone(),
        )
        .unwrap();
        let w = reduce_extension(&spec, row).unwrap();
        out.push((file, with_label(w, &format!("level-3 base reduction ({base})"))));
    }

    // --- nondiagonal action ---
    {
        let d = 3;
        let mut l1 = RatMatrix::identity(d);
        l1[(1, 0)] = int(2);
        let mut r1 = RatMatrix::zero(d, d);
        r1[(1, 0)] = int(-3);
        let spec = ExtensionSpec::from_base_name(
            "A3",
            &[],
            l1,
            r1,
            RatMatrix::zero(d, d),
            RatMatrix::zero(d, d),
        )
        .unwrap();
        let w = reduce_extension(&spec, ReductionRow::NonDiagonal).unwrap();
        out.push(("nondiag_to_ext2A3.deg", with_label(w, "nondiagonal action to k^2 x|_{2,-3} A3 + k")));
    }

    // --- scalar-action extensions of the level-2 bases ---
    {
        // k^2 x|_eps A1^a --(e1, e2/t + e3/(eps-a), e3, e4)--> T_1^{2,(a,eps)}
        let (alpha, eps) = (frac(1, 2), int(2));
        let c = (&eps - &alpha).recip();
        use crate::spectra::{block_diag, chain_matrix};
        out.push((
            "a1_ext_to_T1.deg",
            DegenerationWitness {
                source: catalog("ext_A1", &[eps.clone(), alpha.clone()], 4).unwrap(),
                basis: sparse(4, vec![
                    vec![(1, lp(1))],
                    vec![(2, lpt(-1, 1)), (3, LaurentPoly::constant(c))],
                    vec![(3, lp(1))],
                    vec![(4, lp(1))],
                ]),
                target: crate::tn::build_t(
                    1,
                    &block_diag(&[
                        chain_matrix(&[alpha.clone(), eps.clone()]),
                        RatMatrix::identity(1).scale(&eps),
                    ]),
                ),
                label: "k^2 x|_2 A1^{1/2} to T_1^{2,(1/2,2)}".into(),
            },
        ));
        // k^2 x|_eps A2 --(e1, e2/t + e3/(eps-1), e3, e4)--> T_0^{2,(1,eps)}
        let eps = int(3);
        let c = (&eps - int(1)).recip();
        out.push((
            "a2_ext_to_T0.deg",
            DegenerationWitness {
                source: catalog("ext_A2", std::slice::from_ref(&eps), 4).unwrap(),
                basis: sparse(4, vec![
                    vec![(1, lp(1))],
                    vec![(2, lpt(-1, 1)), (3, LaurentPoly::constant(c))],
                    vec![(3, lp(1))],
                    vec![(4, lp(1))],
                ]),
                target: crate::tn::build_t(
                    0,
                    &block_diag(&[
                        chain_matrix(&[int(1), eps.clone()]),
                        RatMatrix::identity(1).scale(&eps),
                    ]),
                ),
                label: "k^2 x|_3 A2 to T_0^{2,(1,3)}".into(),
            },
        ));
    }
    {
        // k^2 x|_eps B2^a --(t e1 + e2, e2 + e3, t e2, e4)--> F^{a-eps,1-a+eps} + k
        let (eps, alpha) = (int(2), frac(1, 2));
        out.push((
            "b2_ext_to_F.deg",
            DegenerationWitness {
                source: catalog("ext_B2", &[eps.clone(), alpha.clone()], 4).unwrap(),
                basis: sparse(4, vec![
                    vec![(1, lpt(1, 1)), (2, lp(1))],
                    vec![(2, lp(1)), (3, lp(1))],
                    vec![(2, lpt(1, 1))],
                    vec![(4, lp(1))],
                ]),
                target: catalog("F", &[&alpha - &eps, int(1) - &alpha + &eps], 4).unwrap(),
                label: "k^2 x|_2 B2^{1/2} to F^{-3/2,5/2} + k".into(),
            },
        ));
        // k^2 x|^t_1 B2^a --(t e1 + e2, t e2, e3, e4)--> k^2 x| A3
        out.push((
            "b2_extt1_to_extA3.deg",
            DegenerationWitness {
                source: catalog("extt_B2", &[int(1), alpha.clone()], 4).unwrap(),
                basis: sparse(4, vec![
                    vec![(1, lpt(1, 1)), (2, lp(1))],
                    vec![(2, lpt(1, 1))],
                    vec![(3, lp(1))],
                    vec![(4, lp(1))],
                ]),
                target: catalog("ext_A3", &[], 4).unwrap(),
                label: "k^2 x|^t_1 B2^{1/2} to k^2 x| A3".into(),
            },
        ));
        // k^2 x|_eps D2^{a,b}
        // --(t e1 + e2, (a+b-1)(e2+e3), (a+b-1) t e2, e4)--> F^{a-eps,b+eps-1} + k
        let (eps, alpha, beta) = (int(2), frac(1, 2), frac(1, 3));
        let s = &alpha + &beta - int(1);
        out.push((
            "d2_ext_to_F.deg",
            DegenerationWitness {
                source: catalog("ext_D2", &[eps.clone(), alpha.clone(), beta.clone()], 4).unwrap(),
                basis: sparse(4, vec![
                    vec![(1, lpt(1, 1)), (2, lp(1))],
                    vec![(2, LaurentPoly::constant(s.clone())), (3, LaurentPoly::constant(s.clone()))],
                    vec![(2, lpq(1, s.clone()))],
                    vec![(4, lp(1))],
                ]),
                target: catalog("F", &[&alpha - &eps, &beta + &eps - int(1)], 4).unwrap(),
                label: "k^2 x|_2 D2^{1/2,1/3} to F^{-3/2,4/3} + k".into(),
            },
        ));
        // k^2 x|^t_1 D2^{a,b} --(t e1 + e2, (a+b-1) t e2, e3, e4)--> k^2 x| A3
        out.push((
            "d2_extt1_to_extA3.deg",
            DegenerationWitness {
                source: catalog("extt_D2", &[int(1), alpha.clone(), beta.clone()], 4).unwrap(),
                basis: sparse(4, vec![
                    vec![(1, lpt(1, 1)), (2, lp(1))],
                    vec![(2, lpq(1, s.clone()))],
                    vec![(3, lp(1))],
                    vec![(4, lp(1))],
                ]),
                target: catalog("ext_A3", &[], 4).unwrap(),
                label: "k^2 x|^t_1 D2^{1/2,1/3} to k^2 x| A3".into(),
            },
        ));
    }

    // --- the A3-ideal structures ---
    out.push((
        "nonform_A3E4_to_A3pminus.deg",
        DegenerationWitness {
            source: catalog("A3_E4", &[], 5).unwrap(),
            basis: sparse(5, vec![
                vec![(1, lp(1)), (2, lp(-1))],
                vec![(2, lpt(1, 1))],
                vec![(3, lp(1))],
                vec![(4, lp(1))],
                vec![(5, lp(1))],
            ]),
            target: catalog("A3_p_minus", &[], 5).unwrap(),
            label: "(A3 + k) x| E4 to A3 x| p-".into(),
        },
    ));
    out.push((
        "nonform_A3pminus_to_extA2.deg",
        DegenerationWitness {
            source: catalog("A3_p_minus", &[], 5).unwrap(),
            basis: sparse(5, vec![
                vec![(1, lp(1)), (4, lp(1))],
                vec![(5, lp(1))],
                vec![(2, lpt(1, 1))],
                vec![(3, lpt(1, 1))],
                vec![(4, lpt(1, 1))],
            ]),
            target: catalog("ext_A2", &[int(1)], 5).unwrap(),
            label: "A3 x| p- to k^3 x|_1 A2".into(),
        },
    ));
    out.push((
        "nonform_A3E4_to_A3nu.deg",
        DegenerationWitness {
            source: catalog("A3_E4", &[], 5).unwrap(),
            basis: sparse(5, vec![
                vec![(1, lp(2)), (2, lp(-1))],
                vec![(1, lpt(1, 1)), (2, lpt(1, -1))],
                vec![(3, lp(1))],
                vec![(4, lp(1))],
                vec![(5, lp(1))],
            ]),
            target: catalog("A3_nu", &[int(2)], 5).unwrap(),
            label: "(A3 + k) x| E4 to A3 x| nu^2".into(),
        },
    ));
    out.push((
        "nonform_A3nu_to_extA1.deg",
        DegenerationWitness {
            source: catalog("A3_nu", &[int(2)], 5).unwrap(),
            basis: sparse(5, vec![
                vec![(1, lp(1)), (4, lp(1))],
                vec![(5, lp(1))],
                vec![(2, lpt(1, 1))],
                vec![(3, lpt(1, 1))],
                vec![(4, lpt(1, 1))],
            ]),
            target: catalog("ext_A1", &[int(2), int(2)], 5).unwrap(),
            label: "A3 x| nu^2 to k^3 x|_2 A1^2".into(),
        },
    ));

    // --- constructive standard-contraction arrows ---
    {
        use crate::gentype::standard_contraction;
        let cases: [(&'static str, AlgebraStructureCase); 3] = [
            ("anytost_G.deg", ("G", vec![], 3)),
            ("anytost_nu2.deg", ("nu", vec![int(2)], 3)),
            ("anytost_F21.deg", ("F", vec![int(2), int(1)], 4)),
        ];
        for (file, (name, params, n)) in cases {
            let a = catalog(name, &params, n).unwrap();
            let mut gen = vec![crate::exact::int(0); n];
            gen[0] = int(1);
            let (basis, limit) = standard_contraction(&a, &gen).unwrap();
            out.push((
                file,
                DegenerationWitness {
                    source: a,
                    basis,
                    target: limit,
                    label: format!("word-pivot contraction of {name} onto its standard part"),
                },
            ));
        }
    }

    // --- primary degenerations in the variety (both witness families) ---
    let tn_cases: [(&'static str, TnPoint, TnPoint); 7] = [
        (
            "tn_blockmove_r1_n3.deg",
            spec_point(1, vec![(int(0), vec![2])]),
            spec_point(1, vec![(int(0), vec![1, 1])]),
        ),
        (
            "tn_blockmove_r0_n4.deg",
            spec_point(0, vec![(int(1), vec![2, 1])]),
            spec_point(0, vec![(int(1), vec![1, 1, 1])]),
        ),
        (
            "tn_blockmove_r1_n5.deg",
            spec_point(1, vec![(int(1), vec![2]), (int(0), vec![2])]),
            spec_point(1, vec![(int(1), vec![1, 1]), (int(0), vec![2])]),
        ),
        (
            "tn_collapse_r1_n3.deg",
            spec_point(1, vec![(int(1), vec![1, 1])]),
            spec_point(0, vec![(int(0), vec![1, 1])]),
        ),
        (
            "tn_collapse_r1_n4.deg",
            spec_point(1, vec![(int(1), vec![2]), (int(0), vec![1])]),
            spec_point(0, vec![(int(0), vec![3])]),
        ),
        (
            "tn_collapse_r0_n5.deg",
            spec_point(0, vec![(int(1), vec![2]), (int(2), vec![1, 1])]),
            spec_point(0, vec![(int(0), vec![3, 1])]),
        ),
        (
            "tn_collapse_r1_n6.deg",
            spec_point(1, vec![(int(1), vec![2, 1]), (int(0), vec![2])]),
            spec_point(0, vec![(int(0), vec![4, 1])]),
        ),
    ];
    for (file, p, q) in tn_cases {
        let w = primary_witness_t(&p, &q).unwrap();
        out.push((file, w));
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::{parse_witness, verify_witness, witness_library};

    #[test]
    fn all_builtin_witnesses_verify() {
        for (name, w) in builtin() {
            let v = verify_witness(&w);
            assert!(v.is_verified(), "{name}: {v}");
        }
    }

    #[test]
    fn shipped_files_match_builtin() {
        let built = builtin();
        let files = witness_library();
        assert_eq!(
            built.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
            files.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
            "file list drifted"
        );
        for ((name, w), (_, text)) in built.iter().zip(&files) {
            let parsed = parse_witness(text).unwrap_or_else(|e| {
                panic!("{name}: regenerate with gen-witnesses: {e}")
            });
            assert_eq!(&parsed, w, "{name} drifted; regenerate with gen-witnesses");
        }
    }
}
