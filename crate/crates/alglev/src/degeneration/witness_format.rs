//! The `.deg` witness file format and the shipped witness library.
//!
//! ```text
//! label: some citation
//! source:
//! dim 3
//! e1*e1 = e2
//! basis:
//! E1 = t e1 + t e2
//! E2 = t^2 e2
//! E3 = t^-1 e3
//! target:
//! dim 3
//! ```
//!
//! Basis terms are `[<rational>] [t^<int>] e<j>`, with `t` short for `t^1`;
//! negative exponents are allowed.

use super::{DegenerationWitness, ParametrizedBasis};
use crate::algebra::{parse_structure, serialize_structure, FormatError};
use crate::exact::{parse_scalar, LaurentPoly, Ring, Scalar};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessFormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("section `{0}` missing")]
    MissingSection(&'static str),
    #[error("in section `{section}`: {inner}")]
    Algebra { section: &'static str, inner: FormatError },
    #[error("source, basis and target dimensions disagree")]
    DimensionMismatch,
}

fn syntax(line: usize, message: impl Into<String>) -> WitnessFormatError {
    WitnessFormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses one basis term `[<rational>] [t^<int>] e<j>`.
fn parse_basis_term(term: &str, line: usize) -> Result<(usize, i64, Scalar), WitnessFormatError> {
    let toks: Vec<&str> = term.split_whitespace().collect();
    if toks.is_empty() || toks.len() > 3 {
        return Err(syntax(line, format!("malformed term `{term}`")));
    }
    let mut coeff = <Scalar as Ring>::one();
    let mut exp = 0i64;
    let mut idx = 0usize;
    let mut seen_basis = false;
    for tok in toks {
        if let Some(rest) = tok.strip_prefix('e') {
            if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
                if seen_basis {
                    return Err(syntax(line, "two basis elements in one term"));
                }
                idx = rest
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| syntax(line, format!("bad basis index `{tok}`")))?;
                seen_basis = true;
                continue;
            }
        }
        if tok == "t" {
            exp += 1;
            continue;
        }
        if let Some(rest) = tok.strip_prefix("t^") {
            let e: i64 = rest
                .parse()
                .map_err(|_| syntax(line, format!("bad exponent `{tok}`")))?;
            exp += e;
            continue;
        }
        match parse_scalar(tok) {
            Some(c) => coeff = coeff.mul(&c),
            None => return Err(syntax(line, format!("unrecognized token `{tok}`"))),
        }
    }
    if !seen_basis {
        return Err(syntax(line, format!("term `{term}` has no basis element")));
    }
    Ok((idx, exp, coeff))
}

pub fn parse_witness(text: &str) -> Result<DegenerationWitness, WitnessFormatError> {
    let mut label = String::new();
    let mut section: Option<&'static str> = None;
    let mut source_lines: Vec<(usize, String)> = Vec::new();
    let mut target_lines: Vec<(usize, String)> = Vec::new();
    let mut basis_lines: Vec<(usize, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("label:") {
            label = rest.trim().to_string();
            continue;
        }
        match content {
            "source:" => {
                section = Some("source");
                continue;
            }
            "basis:" => {
                section = Some("basis");
                continue;
            }
            "target:" => {
                section = Some("target");
                continue;
            }
            _ => {}
        }
        match section {
            Some("source") => source_lines.push((line, content.to_string())),
            Some("basis") => basis_lines.push((line, content.to_string())),
            Some("target") => target_lines.push((line, content.to_string())),
            _ => return Err(syntax(line, "content before any section header")),
        }
    }
    let join = |lines: &[(usize, String)]| -> String {
        lines
            .iter()
            .map(|(_, s)| s.as_str())
            .collect::<Vec<_>>()
            .join("\n")
    };
    if source_lines.is_empty() {
        return Err(WitnessFormatError::MissingSection("source"));
    }
    if target_lines.is_empty() {
        return Err(WitnessFormatError::MissingSection("target"));
    }
    if basis_lines.is_empty() {
        return Err(WitnessFormatError::MissingSection("basis"));
    }
    let source = parse_structure(&join(&source_lines))
        .map_err(|inner| WitnessFormatError::Algebra { section: "source", inner })?;
    let target = parse_structure(&join(&target_lines))
        .map_err(|inner| WitnessFormatError::Algebra { section: "target", inner })?;
    let n = source.dim();
    if target.dim() != n {
        return Err(WitnessFormatError::DimensionMismatch);
    }
    let mut rows = vec![vec![LaurentPoly::zero(); n]; n];
    let mut seen = vec![false; n];
    for (line, content) in &basis_lines {
        let (lhs, rhs) = content
            .split_once('=')
            .ok_or_else(|| syntax(*line, "expected `E<i> = ...`"))?;
        let i = lhs
            .trim()
            .strip_prefix('E')
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&i| 1 <= i && i <= n)
            .ok_or_else(|| syntax(*line, "bad basis row index"))?;
        if seen[i - 1] {
            return Err(syntax(*line, format!("row E{i} given twice")));
        }
        seen[i - 1] = true;
        for term in rhs.split('+') {
            let (j, exp, coeff) = parse_basis_term(term.trim(), *line)?;
            if j > n {
                return Err(syntax(*line, format!("basis index e{j} exceeds dim {n}")));
            }
            let add = LaurentPoly::monomial(exp, coeff);
            rows[i - 1][j - 1] = rows[i - 1][j - 1].add(&add);
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(WitnessFormatError::MissingSection("basis"));
    }
    Ok(DegenerationWitness {
        source,
        basis: ParametrizedBasis::new(rows),
        target,
        label,
    })
}

fn format_laurent_term(exp: i64, coeff: &Scalar, j: usize) -> String {
    let mut parts = Vec::new();
    if coeff != &<Scalar as Ring>::one() {
        parts.push(coeff.to_string());
    }
    match exp {
        0 => {}
        1 => parts.push("t".to_string()),
        e => parts.push(format!("t^{e}")),
    }
    parts.push(format!("e{j}"));
    parts.join(" ")
}

pub fn serialize_witness(w: &DegenerationWitness) -> String {
    let mut out = String::new();
    if !w.label.is_empty() {
        out.push_str(&format!("label: {}\n", w.label));
    }
    out.push_str("source:\n");
    out.push_str(&serialize_structure(&w.source));
    out.push_str("basis:\n");
    for i in 0..w.basis.dim() {
        let mut terms = Vec::new();
        for (j, c) in w.basis.row(i).iter().enumerate() {
            for (exp, coeff) in c.terms() {
                terms.push(format_laurent_term(exp, coeff, j + 1));
            }
        }
        out.push_str(&format!("E{} = {}\n", i + 1, terms.join(" + ")));
    }
    out.push_str("target:\n");
    out.push_str(&serialize_structure(&w.target));
    out
}

/// The shipped witness library: every explicit parametrized-basis
/// degeneration used in the classification, as data files.
pub fn witness_library() -> Vec<(&'static str, &'static str)> {
    macro_rules! lib {
        ($($name:literal),* $(,)?) => {
            vec![$(($name, include_str!(concat!("../../witnesses/", $name)))),*]
        };
    }
    lib![
        "st_G_to_G11.deg",
        "st_Gab_to_F.deg",
        "st_F_to_A3.deg",
        "orbits2_extE4_to_pminus.deg",
        "orbits2_extE4_to_nu.deg",
        "orbits2_eta2_to_eta1.deg",
        "a3ext_extA3_to_T0_01.deg",
        "a3ext_ext2A3_to_F.deg",
        "lev3_A4_to_A2.deg",
        "lev3_B1_to_A2.deg",
        "lev3_C_to_A1.deg",
        "lev3_D1_to_D2.deg",
        "lev3_D3_to_D2.deg",
        "lev3_E1_to_D2.deg",
        "nondiag_to_ext2A3.deg",
        "a1_ext_to_T1.deg",
        "a2_ext_to_T0.deg",
        "b2_ext_to_F.deg",
        "b2_extt1_to_extA3.deg",
        "d2_ext_to_F.deg",
        "d2_extt1_to_extA3.deg",
        "nonform_A3E4_to_A3pminus.deg",
        "nonform_A3pminus_to_extA2.deg",
        "nonform_A3E4_to_A3nu.deg",
        "nonform_A3nu_to_extA1.deg",
        "anytost_G.deg",
        "anytost_nu2.deg",
        "anytost_F21.deg",
        "tn_blockmove_r1_n3.deg",
        "tn_blockmove_r0_n4.deg",
        "tn_blockmove_r1_n5.deg",
        "tn_collapse_r1_n3.deg",
        "tn_collapse_r1_n4.deg",
        "tn_collapse_r0_n5.deg",
        "tn_collapse_r1_n6.deg",
    ]
}
