//! Catalog of the named algebra structures (2-dimensional structures,
//! padded families, trivial singular extensions, and the bilinear-form and
//! A3-ideal structures). Unlisted products are zero; families defined at a
//! fixed small dimension are padded with a trivial summand on request only
//! where their defining table allows it.

use super::AlgebraStructure;
use crate::exact::Scalar;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown structure name `{0}`")]
    UnknownName(String),
    #[error("`{name}` takes {expected} parameter(s), got {got}")]
    BadArity { name: String, expected: usize, got: usize },
    #[error("`{name}` is not defined in dimension {n}")]
    DimensionOutOfRange { name: String, n: usize },
    #[error("`{name}`: {message}")]
    ParameterConstraint { name: String, message: String },
}

/// Registry metadata for one named structure.
pub struct CatalogEntry {
    pub name: &'static str,
    pub arity: usize,
    pub min_dim: usize,
    pub max_dim: Option<usize>,
    pub description: &'static str,
}

pub fn catalog_entries() -> &'static [CatalogEntry] {
    const ENTRIES: &[CatalogEntry] = &[
        CatalogEntry { name: "zero", arity: 0, min_dim: 1, max_dim: None, description: "zero algebra k^n" },
        CatalogEntry { name: "A1", arity: 1, min_dim: 2, max_dim: Some(2), description: "e1e1=e1+e2, e1e2=a e2, e2e1=(1-a)e2" },
        CatalogEntry { name: "A2", arity: 0, min_dim: 2, max_dim: Some(2), description: "e1e1=e2, e1e2=e2, e2e1=-e2" },
        CatalogEntry { name: "A3", arity: 0, min_dim: 2, max_dim: None, description: "e1e1=e2 (plus trivial summand)" },
        CatalogEntry { name: "A4", arity: 1, min_dim: 2, max_dim: Some(2), description: "e1e1=a e1+e2, e1e2=e1+a e2, e2e1=-e1" },
        CatalogEntry { name: "B1", arity: 1, min_dim: 2, max_dim: Some(2), description: "e1e2=(1-a)e1+e2, e2e1=a e1-e2" },
        CatalogEntry { name: "B2", arity: 1, min_dim: 2, max_dim: Some(2), description: "e1e2=a e2, e2e1=(1-a)e2" },
        CatalogEntry { name: "C", arity: 2, min_dim: 2, max_dim: Some(2), description: "e1e1=e2, e1e2=(1-a)e1+b e2, e2e1=a e1-b e2, e2e2=e2" },
        CatalogEntry { name: "D1", arity: 2, min_dim: 2, max_dim: Some(2), description: "e1e1=e1, e1e2=(1-a)e1+b e2, e2e1=a e1-b e2" },
        CatalogEntry { name: "D2", arity: 2, min_dim: 2, max_dim: Some(2), description: "e1e1=e1, e1e2=a e2, e2e1=b e2 (a+b != 1)" },
        CatalogEntry { name: "D3", arity: 2, min_dim: 2, max_dim: Some(2), description: "e1e1=e1, e1e2=e1+a e2, e2e1=-e1+b e2 (a+b != 1)" },
        CatalogEntry { name: "E1", arity: 4, min_dim: 2, max_dim: Some(2), description: "e1e1=e1, e1e2=a e1+b e2, e2e1=c e1+d e2, e2e2=e2 (b+d != 1)" },
        CatalogEntry { name: "E4", arity: 0, min_dim: 2, max_dim: Some(2), description: "e1e1=e1, e1e2=e1+e2, e2e2=e2" },
        CatalogEntry { name: "n3", arity: 0, min_dim: 3, max_dim: None, description: "e1e2=e3, e2e1=-e3 (plus trivial summand)" },
        CatalogEntry { name: "p_minus", arity: 0, min_dim: 2, max_dim: None, description: "e1ei=ei, eie1=-ei for i>=2" },
        CatalogEntry { name: "nu", arity: 1, min_dim: 2, max_dim: None, description: "e1e1=e1, e1ei=a ei, eie1=(1-a)ei for i>=2" },
        CatalogEntry { name: "F", arity: 2, min_dim: 3, max_dim: None, description: "e1e1=e3, e1e2=a e3, e2e1=b e3 (plus trivial summand)" },
        CatalogEntry { name: "eta", arity: 1, min_dim: 3, max_dim: None, description: "Heisenberg: e_{2i-1}e_{2i}=-e_{2i}e_{2i-1}=e_{2m+1}, needs n >= 2m+1" },
        CatalogEntry { name: "G", arity: 0, min_dim: 3, max_dim: Some(3), description: "e1e1=e2, e2e2=e3" },
        CatalogEntry { name: "Gab", arity: 2, min_dim: 3, max_dim: Some(3), description: "e1e1=e2, e1e2=a e3, e2e1=b e3" },
        CatalogEntry { name: "ext_A1", arity: 2, min_dim: 3, max_dim: None, description: "k^{n-2} x| A1: params (eps, a)" },
        CatalogEntry { name: "ext_A2", arity: 1, min_dim: 3, max_dim: None, description: "k^{n-2} x| A2: param eps" },
        CatalogEntry { name: "ext_A3", arity: 0, min_dim: 3, max_dim: None, description: "e1e1=e2, e1ei=ei, eie1=-ei for i>=3" },
        CatalogEntry { name: "ext2_A3", arity: 2, min_dim: 4, max_dim: None, description: "e1e1=e2, e1e3=a e4, e3e1=b e4 (plus trivial summand)" },
        CatalogEntry { name: "ext_B2", arity: 2, min_dim: 3, max_dim: None, description: "k^{n-2} x| B2: params (eps, a)" },
        CatalogEntry { name: "extt_B2", arity: 2, min_dim: 3, max_dim: None, description: "twisted B2 extension: params (eps in {0,1}, a)" },
        CatalogEntry { name: "ext_D2", arity: 3, min_dim: 3, max_dim: None, description: "k^{n-2} x| D2: params (eps, a, b), a+b != 1" },
        CatalogEntry { name: "extt_D2", arity: 3, min_dim: 3, max_dim: None, description: "twisted D2 extension: params (eps in {0,1}, a, b), a+b != 1" },
        CatalogEntry { name: "ext_E4", arity: 0, min_dim: 3, max_dim: None, description: "e1e1=e1, e1e2=e1+e2, e2e2=e2, e1ei=eie2=ei for i>=3" },
        CatalogEntry { name: "A3_p_minus", arity: 0, min_dim: 3, max_dim: None, description: "e_{n-1}e_{n-1}=e_n, e1ei=ei, eie1=-ei for i>=2" },
        CatalogEntry { name: "A3_nu", arity: 1, min_dim: 3, max_dim: None, description: "e1e1=e1, e_{n-1}e_{n-1}=e_n, e1ei=a ei, eie1=(1-a)ei for i>=2" },
        CatalogEntry { name: "A3_E4", arity: 0, min_dim: 4, max_dim: None, description: "E4 action with an A3 ideal at the tail" },
    ];
    ENTRIES
}

fn check_dim(entry: &CatalogEntry, n: usize) -> Result<(), CatalogError> {
    let ok = n >= entry.min_dim && entry.max_dim.is_none_or(|m| n <= m);
    if ok {
        Ok(())
    } else {
        Err(CatalogError::DimensionOutOfRange {
            name: entry.name.to_string(),
            n,
        })
    }
}

fn constraint(name: &str, ok: bool, message: &str) -> Result<(), CatalogError> {
    if ok {
        Ok(())
    } else {
        Err(CatalogError::ParameterConstraint {
            name: name.to_string(),
            message: message.to_string(),
        })
    }
}

/// Builds the named structure with the given parameters in dimension `n`.
pub fn catalog(name: &str, params: &[Scalar], n: usize) -> Result<AlgebraStructure, CatalogError> {
    let entry = catalog_entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))?;
    if params.len() != entry.arity {
        return Err(CatalogError::BadArity {
            name: name.to_string(),
            expected: entry.arity,
            got: params.len(),
        });
    }
    check_dim(entry, n)?;
    let one = Scalar::one();
    let mut a = AlgebraStructure::zero(n);
    match name {
        "zero" => {}
        "A1" => {
            let al = &params[0];
            a.set(0, 0, 0, one.clone());
            a.set(0, 0, 1, one.clone());
            a.set(0, 1, 1, al.clone());
            a.set(1, 0, 1, &one - al);
        }
        "A2" => {
            a.set(0, 0, 1, one.clone());
            a.set(0, 1, 1, one.clone());
            a.set(1, 0, 1, -one.clone());
        }
        "A3" => {
            a.set(0, 0, 1, one.clone());
        }
        "A4" => {
            let al = &params[0];
            a.set(0, 0, 0, al.clone());
            a.set(0, 0, 1, one.clone());
            a.set(0, 1, 0, one.clone());
            a.set(0, 1, 1, al.clone());
            a.set(1, 0, 0, -one.clone());
        }
        "B1" => {
            let al = &params[0];
            a.set(0, 1, 0, &one - al);
            a.set(0, 1, 1, one.clone());
            a.set(1, 0, 0, al.clone());
            a.set(1, 0, 1, -one.clone());
        }
        "B2" => {
            let al = &params[0];
            a.set(0, 1, 1, al.clone());
            a.set(1, 0, 1, &one - al);
        }
        "C" => {
            let (al, be) = (&params[0], &params[1]);
            a.set(0, 0, 1, one.clone());
            a.set(0, 1, 0, &one - al);
            a.set(0, 1, 1, be.clone());
            a.set(1, 0, 0, al.clone());
            a.set(1, 0, 1, -be.clone());
            a.set(1, 1, 1, one.clone());
        }
        "D1" => {
            let (al, be) = (&params[0], &params[1]);
            a.set(0, 0, 0, one.clone());
            a.set(0, 1, 0, &one - al);
            a.set(0, 1, 1, be.clone());
            a.set(1, 0, 0, al.clone());
            a.set(1, 0, 1, -be.clone());
        }
        "D2" => {
            let (al, be) = (&params[0], &params[1]);
            constraint(name, al + be != one, "requires a + b != 1")?;
            a.set(0, 0, 0, one.clone());
            a.set(0, 1, 1, al.clone());
            a.set(1, 0, 1, be.clone());
        }
        "D3" => {
            let (al, be) = (&params[0], &params[1]);
            constraint(name, al + be != one, "requires a + b != 1")?;
            a.set(0, 0, 0, one.clone());
            a.set(0, 1, 0, one.clone());
            a.set(0, 1, 1, al.clone());
            a.set(1, 0, 0, -one.clone());
            a.set(1, 0, 1, be.clone());
        }
        "E1" => {
            let (al, be, ga, de) = (&params[0], &params[1], &params[2], &params[3]);
            constraint(name, be + de != one, "requires b + d != 1")?;
            a.set(0, 0, 0, one.clone());
            a.set(0, 1, 0, al.clone());
            a.set(0, 1, 1, be.clone());
            a.set(1, 0, 0, ga.clone());
            a.set(1, 0, 1, de.clone());
            a.set(1, 1, 1, one.clone());
        }
        "E4" => {
            a.set(0, 0, 0, one.clone());
            a.set(0, 1, 0, one.clone());
            a.set(0, 1, 1, one.clone());
            a.set(1, 1, 1, one.clone());
        }
        "n3" => {
            a.set(0, 1, 2, one.clone());
            a.set(1, 0, 2, -one.clone());
        }
        "p_minus" => {
            for i in 1..n {
                a.set(0, i, i, one.clone());
                a.set(i, 0, i, -one.clone());
            }
        }
        "nu" => {
            let al = &params[0];
            a.set(0, 0, 0, one.clone());
            for i in 1..n {
                a.set(0, i, i, al.clone());
                a.set(i, 0, i, &one - al);
            }
        }
        "F" => {
            let (al, be) = (&params[0], &params[1]);
            a.set(0, 0, 2, one.clone());
            a.set(0, 1, 2, al.clone());
            a.set(1, 0, 2, be.clone());
        }
        "eta" => {
            let m = &params[0];
            let m_int = m.to_integer();
            constraint(name, m.is_integer() && m_int >= 1.into(), "m must be a positive integer")?;
            let m = usize::try_from(u64::try_from(&m_int).map_err(|_| CatalogError::ParameterConstraint {
                name: name.to_string(),
                message: "m too large".into(),
            })?)
            .unwrap();
            constraint(name, n > 2 * m, "needs n >= 2m+1")?;
            for i in 0..m {
                a.set(2 * i, 2 * i + 1, 2 * m, one.clone());
                a.set(2 * i + 1, 2 * i, 2 * m, -one.clone());
            }
        }
        "G" => {
            a.set(0, 0, 1, one.clone());
            a.set(1, 1, 2, one.clone());
        }
        "Gab" => {
            let (al, be) = (&params[0], &params[1]);
            a.set(0, 0, 1, one.clone());
            a.set(0, 1, 2, al.clone());
            a.set(1, 0, 2, be.clone());
        }
        "ext_A1" => {
            let (eps, al) = (&params[0], &params[1]);
            a.set(0, 0, 0, one.clone());
            a.set(0, 0, 1, one.clone());
            a.set(0, 1, 1, al.clone());
            a.set(1, 0, 1, &one - al);
            for i in 2..n {
                a.set(0, i, i, eps.clone());
                a.set(i, 0, i, &one - eps);
            }
        }
        "ext_A2" => {
            let eps = &params[0];
            a.set(0, 0, 1, one.clone());
            a.set(0, 1, 1, one.clone());
            a.set(1, 0, 1, -one.clone());
            for i in 2..n {
                a.set(0, i, i, eps.clone());
                a.set(i, 0, i, -eps.clone());
            }
        }
        "ext_A3" => {
            a.set(0, 0, 1, one.clone());
            for i in 2..n {
                a.set(0, i, i, one.clone());
                a.set(i, 0, i, -one.clone());
            }
        }
        "ext2_A3" => {
            let (al, be) = (&params[0], &params[1]);
            a.set(0, 0, 1, one.clone());
            a.set(0, 2, 3, al.clone());
            a.set(2, 0, 3, be.clone());
        }
        "ext_B2" => {
            let (eps, al) = (&params[0], &params[1]);
            a.set(0, 1, 1, al.clone());
            a.set(1, 0, 1, &one - al);
            for i in 2..n {
                a.set(0, i, i, eps.clone());
                a.set(i, 0, i, -eps.clone());
            }
        }
        "extt_B2" => {
            let (eps, al) = (&params[0], &params[1]);
            constraint(name, eps.is_zero() || eps.is_one(), "eps must be 0 or 1")?;
            for i in 1..n {
                a.set(0, i, i, al.clone());
                a.set(i, 0, i, &one - al);
            }
            for i in 2..n {
                a.set(1, i, i, eps.clone());
                a.set(i, 1, i, -eps.clone());
            }
        }
        "ext_D2" => {
            let (eps, al, be) = (&params[0], &params[1], &params[2]);
            constraint(name, al + be != one, "requires a + b != 1")?;
            a.set(0, 0, 0, one.clone());
            a.set(0, 1, 1, al.clone());
            a.set(1, 0, 1, be.clone());
            for i in 2..n {
                a.set(0, i, i, eps.clone());
                a.set(i, 0, i, &one - eps);
            }
        }
        "extt_D2" => {
            let (eps, al, be) = (&params[0], &params[1], &params[2]);
            constraint(name, al + be != one, "requires a + b != 1")?;
            constraint(name, eps.is_zero() || eps.is_one(), "eps must be 0 or 1")?;
            a.set(0, 0, 0, one.clone());
            for i in 1..n {
                a.set(0, i, i, al.clone());
                a.set(i, 0, i, be.clone());
            }
            for i in 2..n {
                a.set(1, i, i, eps.clone());
                a.set(i, 1, i, -eps.clone());
            }
        }
        "ext_E4" => {
            a.set(0, 0, 0, one.clone());
            a.set(0, 1, 0, one.clone());
            a.set(0, 1, 1, one.clone());
            a.set(1, 1, 1, one.clone());
            for i in 2..n {
                a.set(0, i, i, one.clone());
                a.set(i, 1, i, one.clone());
            }
        }
        "A3_p_minus" => {
            a.set(n - 2, n - 2, n - 1, one.clone());
            for i in 1..n {
                a.set(0, i, i, one.clone());
                a.set(i, 0, i, -one.clone());
            }
        }
        "A3_nu" => {
            let al = &params[0];
            a.set(0, 0, 0, one.clone());
            a.set(n - 2, n - 2, n - 1, one.clone());
            for i in 1..n {
                a.set(0, i, i, al.clone());
                a.set(i, 0, i, &one - al);
            }
        }
        "A3_E4" => {
            a.set(0, 0, 0, one.clone());
            a.set(0, 1, 0, one.clone());
            a.set(0, 1, 1, one.clone());
            a.set(1, 1, 1, one.clone());
            a.set(n - 2, n - 2, n - 1, one.clone());
            for i in 2..n {
                a.set(0, i, i, one.clone());
                a.set(i, 1, i, one.clone());
            }
        }
        _ => unreachable!("entry table and builder match arms are in sync"),
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::super::invariants;
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn errors() {
        assert!(matches!(
            catalog("nope", &[], 2),
            Err(CatalogError::UnknownName(_))
        ));
        assert!(matches!(
            catalog("nu", &[], 3),
            Err(CatalogError::BadArity { .. })
        ));
        assert!(matches!(
            catalog("n3", &[], 2),
            Err(CatalogError::DimensionOutOfRange { .. })
        ));
        assert!(matches!(
            catalog("D2", &[frac(1, 2), frac(1, 2)], 2),
            Err(CatalogError::ParameterConstraint { .. })
        ));
    }

    #[test]
    fn p_minus_table_row() {
        let p = catalog("p_minus", &[], 4).unwrap();
        for i in 1..4 {
            assert_eq!(p.get(0, i, i), &int(1));
            assert_eq!(p.get(i, 0, i), &int(-1));
        }
        assert!(p.get(0, 0, 0).is_zero());
    }

    #[test]
    fn nu_table_row() {
        let nu = catalog("nu", &[frac(2, 3)], 3).unwrap();
        assert_eq!(nu.get(0, 0, 0), &int(1));
        assert_eq!(nu.get(0, 1, 1), &frac(2, 3));
        assert_eq!(nu.get(1, 0, 1), &frac(1, 3));
    }

    #[test]
    fn g_table_row() {
        let g = catalog("G", &[], 3).unwrap();
        assert_eq!(g.get(0, 0, 1), &int(1));
        assert_eq!(g.get(1, 1, 2), &int(1));
    }

    #[test]
    fn gen_type_one_catalog_structures_have_square_zero_hyperplane() {
        use super::super::SymAlgebra;
        let samples = [
            catalog("n3", &[], 4).unwrap(),
            catalog("p_minus", &[], 4).unwrap(),
            catalog("nu", &[frac(1, 3)], 4).unwrap(),
            catalog("eta", &[int(2)], 5).unwrap(),
        ];
        for a in samples {
            let sym = SymAlgebra::from_structure(&a);
            let span: Vec<usize> = (1..a.dim()).collect();
            assert!(sym.squares_vanish_on_span(&span));
        }
    }

    #[test]
    fn all_entries_build_at_min_dim() {
        let choices = [int(1), int(0), frac(1, 2), int(2), int(-1), int(3)];
        for e in catalog_entries() {
            let built = (0..choices.len()).any(|attempt| {
                let params: Vec<Scalar> = (0..e.arity)
                    .map(|i| choices[(attempt + i) % choices.len()].clone())
                    .collect();
                match catalog(e.name, &params, e.min_dim) {
                    Ok(a) => {
                        assert_eq!(a.dim(), e.min_dim);
                        true
                    }
                    Err(_) => false,
                }
            });
            assert!(built, "no parameter choice built `{}`", e.name);
        }
    }

    #[test]
    fn invariants_of_ext_e4() {
        let a = catalog("ext_E4", &[], 4).unwrap();
        let inv = invariants(&a);
        assert!(!inv.commutative);
        assert!(!inv.anticommutative);
        assert_eq!(inv.annihilator_dim, 0);
    }
}
