//! Python bindings for the main types and operations: partitions and the
//! dominance level, structure parsing, generation type, invariants, the
//! catalog, points of the generation-type-1 variety, witness verification,
//! table emission, and the classification lists.
//!
//! The boundary is string-based: `.alg` structure texts, `.deg` witness
//! texts, partition strings like `3,2,1`, and specter strings like
//! `0:2.1;1:1`.

use alglev::algebra::{self, catalog_entries};
use alglev::classify::{filtered_level2, level1_list, level2_list, Predicate};
use alglev::degeneration::{parse_witness, verify_witness};
use alglev::exact::{parse_scalar, ExactMatrix, Scalar};
use alglev::extensions::{decompose_extension, g2_condition};
use alglev::gentype;
use alglev::partitions::parse_partition;
use alglev::spectra::{fs_of_matrix, parse_full_specter};
use alglev::tn;
use alglev::verify::all_checks;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn scalars(params: Vec<String>) -> PyResult<Vec<Scalar>> {
    params
        .iter()
        .map(|s| parse_scalar(s).ok_or_else(|| value_err(format!("bad rational `{s}`"))))
        .collect()
}

/// Level of a partition given as `3,2,1`.
#[pyfunction]
fn partition_level(partition: &str) -> PyResult<u32> {
    Ok(parse_partition(partition).map_err(value_err)?.level())
}

/// Partitions directly below in dominance order.
#[pyfunction]
fn partition_preceding(partition: &str) -> PyResult<Vec<String>> {
    let a = parse_partition(partition).map_err(value_err)?;
    Ok(a.preceding().iter().map(|b| b.to_string()).collect())
}

#[pyfunction]
fn partition_dominates(first: &str, second: &str) -> PyResult<bool> {
    let a = parse_partition(first).map_err(value_err)?;
    let b = parse_partition(second).map_err(value_err)?;
    a.dominates(&b).map_err(value_err)
}

/// Builds a named catalog structure; returns its `.alg` text.
#[pyfunction]
#[pyo3(signature = (name, params, n))]
fn catalog(name: &str, params: Vec<String>, n: usize) -> PyResult<String> {
    let params = scalars(params)?;
    let a = algebra::catalog(name, &params, n).map_err(value_err)?;
    Ok(algebra::serialize_structure(&a))
}

/// Names, arities and dimension ranges of the catalog.
#[pyfunction]
fn catalog_names() -> Vec<(String, usize, usize)> {
    catalog_entries()
        .iter()
        .map(|e| (e.name.to_string(), e.arity, e.min_dim))
        .collect()
}

/// Generation type of an `.alg` structure.
#[pyfunction]
fn gen_type(alg_text: &str) -> PyResult<usize> {
    let a = algebra::parse_structure(alg_text).map_err(value_err)?;
    Ok(gentype::gen_type(&a))
}

/// Identity predicates and dimension invariants of an `.alg` structure.
#[pyfunction]
fn invariants(py: Python<'_>, alg_text: &str) -> PyResult<Py<PyDict>> {
    let a = algebra::parse_structure(alg_text).map_err(value_err)?;
    let inv = algebra::invariants(&a);
    let d = PyDict::new(py);
    d.set_item("commutative", inv.commutative)?;
    d.set_item("anticommutative", inv.anticommutative)?;
    d.set_item("associative", inv.associative)?;
    d.set_item("left_alternative", inv.left_alternative)?;
    d.set_item("jordan", inv.jordan)?;
    d.set_item("annihilator_dim", inv.annihilator_dim)?;
    d.set_item("square_dim", inv.square_dim)?;
    d.set_item("gen_type", gentype::gen_type(&a))?;
    Ok(d.unbind())
}

/// Full specter of a square matrix of rational strings.
#[pyfunction]
fn full_specter(matrix: Vec<Vec<String>>) -> PyResult<String> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|r| r.len() != n) {
        return Err(value_err("matrix must be square and nonempty"));
    }
    let rows: PyResult<Vec<Vec<Scalar>>> = matrix.into_iter().map(scalars).collect();
    let m = ExactMatrix::from_rows(rows?);
    Ok(fs_of_matrix(&m).map_err(value_err)?.to_string())
}

fn parse_point(r: u8, spec: &str) -> PyResult<tn::TnPoint> {
    if r > 1 {
        return Err(value_err("r must be 0 or 1"));
    }
    let s = parse_full_specter(spec).map_err(value_err)?;
    Ok(tn::TnPoint::new(r, s))
}

/// Level of the variety point `(r, spec)`, spec like `0:2.1`.
#[pyfunction]
fn tn_level(r: u8, spec: &str) -> PyResult<u32> {
    Ok(tn::level_t(&parse_point(r, spec)?))
}

/// The degeneration criterion between two points.
#[pyfunction]
fn tn_degenerates(r1: u8, spec1: &str, r2: u8, spec2: &str) -> PyResult<bool> {
    Ok(tn::degenerates_t(
        &parse_point(r1, spec1)?,
        &parse_point(r2, spec2)?,
    ))
}

/// The primary-degeneration set of a point.
#[pyfunction]
fn tn_primary(r: u8, spec: &str) -> PyResult<Vec<String>> {
    let p = parse_point(r, spec)?;
    Ok(tn::primary_set_t(&p).iter().map(|q| q.to_string()).collect())
}

/// The `.alg` text of the canonical structure of a point.
#[pyfunction]
fn tn_structure(r: u8, spec: &str) -> PyResult<String> {
    let p = parse_point(r, spec)?;
    Ok(algebra::serialize_structure(&tn::build_t_point(&p)))
}

/// Verifies a `.deg` witness text; returns the verdict line.
#[pyfunction]
fn check_witness(deg_text: &str) -> PyResult<String> {
    let w = parse_witness(deg_text).map_err(value_err)?;
    Ok(verify_witness(&w).to_string())
}

/// Builds and verifies the witness of a primary degeneration; returns its
/// `.deg` text.
#[pyfunction]
fn primary_witness(r1: u8, spec1: &str, r2: u8, spec2: &str) -> PyResult<String> {
    let p = parse_point(r1, spec1)?;
    let q = parse_point(r2, spec2)?;
    let w = tn::primary_witness_t(&p, &q).map_err(value_err)?;
    Ok(alglev::degeneration::serialize_witness(&w))
}

/// One of the three structure tables as text.
#[pyfunction]
#[pyo3(signature = (table, n, max_level = 5, machine = false))]
fn emit_table(table: u8, n: usize, max_level: u32, machine: bool) -> PyResult<String> {
    if !(1..=3).contains(&table) || !(1..=5).contains(&max_level) {
        return Err(value_err("table must be 1..3 and max_level 1..5"));
    }
    Ok(tn::emit_tn_tables(table, n, max_level, machine, None))
}

/// The level-1 classification list at dimension n.
#[pyfunction]
fn classify_level1(n: usize) -> PyResult<Vec<String>> {
    if n < 2 {
        return Err(value_err("n must be at least 2"));
    }
    Ok(level1_list(n).iter().map(|r| r.to_string()).collect())
}

/// The level-2 classification list at dimension n.
#[pyfunction]
fn classify_level2(n: usize) -> PyResult<Vec<String>> {
    if n < 2 {
        return Err(value_err("n must be at least 2"));
    }
    Ok(level2_list(n).iter().map(|r| r.to_string()).collect())
}

/// The level-2 list filtered by an identity predicate.
#[pyfunction]
fn classify_filter(n: usize, predicate: &str) -> PyResult<Vec<String>> {
    let pred = Predicate::parse(predicate)
        .ok_or_else(|| value_err("predicate must be commutative, anticommutative, jordan or left_alternative"))?;
    if n < 2 {
        return Err(value_err("n must be at least 2"));
    }
    Ok(filtered_level2(n, pred).iter().map(|r| r.to_string()).collect())
}

/// Generation-type-2 criterion for an extension given as `.alg` text.
#[pyfunction]
fn g2_check(alg_text: &str) -> PyResult<bool> {
    let a = algebra::parse_structure(alg_text).map_err(value_err)?;
    let spec = decompose_extension(&a).map_err(value_err)?;
    g2_condition(&spec).map_err(value_err)
}

/// Runs the whole verification battery; returns (name, passed, detail).
#[pyfunction]
#[pyo3(signature = (jobs = None))]
fn verify_paper(jobs: Option<usize>) -> Vec<(String, bool, String)> {
    all_checks(jobs)
        .into_iter()
        .map(|o| (o.name.to_string(), o.passed, o.detail))
        .collect()
}

#[pymodule]
fn alglev_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(partition_level, m)?)?;
    m.add_function(wrap_pyfunction!(partition_preceding, m)?)?;
    m.add_function(wrap_pyfunction!(partition_dominates, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(gen_type, m)?)?;
    m.add_function(wrap_pyfunction!(invariants, m)?)?;
    m.add_function(wrap_pyfunction!(full_specter, m)?)?;
    m.add_function(wrap_pyfunction!(tn_level, m)?)?;
    m.add_function(wrap_pyfunction!(tn_degenerates, m)?)?;
    m.add_function(wrap_pyfunction!(tn_primary, m)?)?;
    m.add_function(wrap_pyfunction!(tn_structure, m)?)?;
    m.add_function(wrap_pyfunction!(check_witness, m)?)?;
    m.add_function(wrap_pyfunction!(primary_witness, m)?)?;
    m.add_function(wrap_pyfunction!(emit_table, m)?)?;
    m.add_function(wrap_pyfunction!(classify_level1, m)?)?;
    m.add_function(wrap_pyfunction!(classify_level2, m)?)?;
    m.add_function(wrap_pyfunction!(classify_filter, m)?)?;
    m.add_function(wrap_pyfunction!(g2_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    Ok(())
}
