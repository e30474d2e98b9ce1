//! The `.alg` line-oriented text format.
//!
//! ```text
//! dim 3
//! # comment
//! e1*e2 = e3
//! e2*e1 = -1 e3
//! ```
//!
//! Omitted products are zero. Serialization lists products in (i, j) order
//! with terms ordered by ascending basis index and coefficients in lowest
//! terms, so serialized output is byte-stable.

use super::AlgebraStructure;
use crate::exact::{parse_scalar, Scalar};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: basis index e{index} exceeds dimension {dim}")]
    IndexOutOfRange { line: usize, index: usize, dim: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses `e<i>` returning the 1-based index.
fn parse_basis_ref(tok: &str, line: usize) -> Result<usize, FormatError> {
    let rest = tok
        .strip_prefix('e')
        .ok_or_else(|| syntax(line, format!("expected basis element, got `{tok}`")))?;
    rest.parse::<usize>()
        .ok()
        .filter(|&i| i >= 1)
        .ok_or_else(|| syntax(line, format!("bad basis index `{tok}`")))
}

/// Parses a sum of terms `[<rational>] e<k>` separated by `+`.
fn parse_terms(text: &str, dim: usize, line: usize) -> Result<Vec<(usize, Scalar)>, FormatError> {
    let mut out = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(syntax(line, "empty term"));
        }
        let toks: Vec<&str> = term.split_whitespace().collect();
        let (coeff, basis_tok) = match toks.len() {
            1 => (Scalar::one(), toks[0]),
            2 => {
                let c = parse_scalar(toks[0])
                    .ok_or_else(|| syntax(line, format!("bad coefficient `{}`", toks[0])))?;
                (c, toks[1])
            }
            _ => return Err(syntax(line, format!("malformed term `{term}`"))),
        };
        let k = parse_basis_ref(basis_tok, line)?;
        if k > dim {
            return Err(FormatError::IndexOutOfRange { line, index: k, dim });
        }
        out.push((k - 1, coeff));
    }
    Ok(out)
}

/// Parses the `.alg` format into a structure. Unspecified products default
/// to zero; repeated products accumulate.
pub fn parse_structure(text: &str) -> Result<AlgebraStructure, FormatError> {
    let mut dim: Option<usize> = None;
    let mut algebra: Option<AlgebraStructure> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if dim.is_none() {
            let rest = content
                .strip_prefix("dim")
                .ok_or_else(|| syntax(line, "first line must be `dim <n>`"))?;
            let n: usize = rest
                .trim()
                .parse()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| syntax(line, "bad dimension"))?;
            dim = Some(n);
            algebra = Some(AlgebraStructure::zero(n));
            continue;
        }
        let n = dim.unwrap();
        let a = algebra.as_mut().unwrap();
        let (lhs, rhs) = content
            .split_once('=')
            .ok_or_else(|| syntax(line, "expected `e<i>*e<j> = ...`"))?;
        let (ei, ej) = lhs
            .split_once('*')
            .ok_or_else(|| syntax(line, "expected product `e<i>*e<j>` on the left"))?;
        let i = parse_basis_ref(ei.trim(), line)?;
        let j = parse_basis_ref(ej.trim(), line)?;
        if i > n {
            return Err(FormatError::IndexOutOfRange { line, index: i, dim: n });
        }
        if j > n {
            return Err(FormatError::IndexOutOfRange { line, index: j, dim: n });
        }
        for (k, coeff) in parse_terms(rhs.trim(), n, line)? {
            let cur = a.get(i - 1, j - 1, k).clone();
            a.set(i - 1, j - 1, k, cur + coeff);
        }
    }
    algebra.ok_or_else(|| syntax(0, "missing `dim <n>` line"))
}

/// Serializes a structure; `parse_structure(serialize_structure(a)) == a`.
pub fn serialize_structure(a: &AlgebraStructure) -> String {
    let n = a.dim();
    let mut out = format!("dim {n}\n");
    for i in 0..n {
        for j in 0..n {
            let mut terms = Vec::new();
            for k in 0..n {
                let c = a.get(i, j, k);
                if c.is_zero() {
                    continue;
                }
                if c.is_one() {
                    terms.push(format!("e{}", k + 1));
                } else {
                    terms.push(format!("{} e{}", c, k + 1));
                }
            }
            if !terms.is_empty() {
                out.push_str(&format!("e{}*e{} = {}\n", i + 1, j + 1, terms.join(" + ")));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn parses_a3() {
        let a = parse_structure("dim 2\ne1*e1 = e2\n").unwrap();
        assert_eq!(a.get(0, 0, 1), &int(1));
        assert!(a.get(0, 0, 0).is_zero());
    }

    #[test]
    fn parses_zero_algebra() {
        let a = parse_structure("dim 1").unwrap();
        assert!(a.is_zero_algebra());
    }

    #[test]
    fn parses_n3_with_signs_and_comments() {
        let a = parse_structure("dim 3\n# heisenberg\ne1*e2 = e3\ne2*e1 = -1 e3\n").unwrap();
        assert_eq!(a.get(0, 1, 2), &int(1));
        assert_eq!(a.get(1, 0, 2), &int(-1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_structure("dim 2\ne1*e3 = e1"),
            Err(FormatError::IndexOutOfRange { line: 2, index: 3, dim: 2 })
        ));
        assert!(matches!(
            parse_structure("dim 2\ne1 e2 = e1"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(parse_structure("").is_err());
    }

    #[test]
    fn roundtrip_with_fractions() {
        let mut a = AlgebraStructure::zero(3);
        a.set(0, 1, 2, frac(3, 4));
        a.set(2, 2, 0, int(-2));
        a.set(1, 0, 1, int(1));
        let text = serialize_structure(&a);
        assert_eq!(parse_structure(&text).unwrap(), a);
        assert_eq!(text, "dim 3\ne1*e2 = 3/4 e3\ne2*e1 = e2\ne3*e3 = -2 e1\n");
    }
}
