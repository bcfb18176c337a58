//! Python bindings. Partitions cross the boundary as lists of ints, big
//! integers as Python ints, center weights as `fractions.Fraction`.

use grassmoduli::moduli::{self, CenterWeight, ComponentReport, ModuliReport};
use grassmoduli::partition::{self, FundamentalCoeffs, Partition};
use grassmoduli::schur::{self, SchurExpansion};
use grassmoduli::verify::{self, Suite, VerifyConfig, VerifyReport};
use grassmoduli::{littlewood, Error};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn fraction<'py>(py: Python<'py>, w: CenterWeight) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((w.numer(), w.denom()))
}

/// Signed combination of Schur functions.
#[pyclass(name = "SchurExpansion", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySchurExpansion(SchurExpansion);

#[pymethods]
impl PySchurExpansion {
    /// `(partition, coefficient)` pairs in decreasing lexicographic order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let items: Vec<(Vec<u32>, Bound<'py, PyAny>)> = self
            .0
            .iter()
            .map(|(p, c)| Ok((p.parts().to_vec(), c.clone().into_pyobject(py)?.into_any())))
            .collect::<PyResult<_>>()?;
        PyList::new(py, items)
    }

    fn coeff<'py>(&self, py: Python<'py>, partition: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
        Ok(self
            .0
            .coeff(&to_partition(partition)?)
            .into_pyobject(py)?
            .into_any())
    }

    fn dimension<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
        Ok(self.0.dimension(n).into_pyobject(py)?.into_any())
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SchurExpansion({})", self.0)
    }
}

/// One irreducible component of the square of F(kϖ_q).
#[pyclass(name = "Component", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyComponent(ComponentReport);

#[pymethods]
impl PyComponent {
    #[getter]
    fn partition(&self) -> Vec<u32> {
        self.0.component.partition.parts().to_vec()
    }

    #[getter]
    fn fund(&self) -> Vec<u32> {
        self.0.component.fund.coeffs().to_vec()
    }

    #[getter]
    fn i(&self) -> Vec<u32> {
        self.0.component.i.clone()
    }

    #[getter]
    fn j(&self) -> Vec<u32> {
        self.0.component.j.clone()
    }

    /// `"sym"` or `"alt"`.
    #[getter]
    fn parity(&self) -> String {
        self.0.parity.to_string()
    }

    #[getter]
    fn dimension<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        Ok(self.0.dimension.clone().into_pyobject(py)?.into_any())
    }

    #[getter]
    fn center_weight<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.0.center_weight)
    }

    #[getter]
    fn passes_gs_filter(&self) -> bool {
        self.0.passes_gs_filter
    }

    fn __repr__(&self) -> String {
        format!(
            "Component([{}], {}, dim={}, weight={}, gs={})",
            self.0.component.partition,
            self.0.parity,
            self.0.dimension,
            self.0.center_weight,
            self.0.passes_gs_filter
        )
    }
}

#[pyclass(name = "ModuliReport", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyModuliReport(ModuliReport);

#[pymethods]
impl PyModuliReport {
    #[getter]
    fn p(&self) -> usize {
        self.0.p
    }

    #[getter]
    fn q(&self) -> usize {
        self.0.q
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k
    }

    #[getter]
    fn dim_h0<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        Ok(self.0.dim_h0.clone().into_pyobject(py)?.into_any())
    }

    #[getter]
    fn dim_vk<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        Ok(self.0.dim_vk.clone().into_pyobject(py)?.into_any())
    }

    #[getter]
    fn n_target<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        Ok(self.0.n_target.clone().into_pyobject(py)?.into_any())
    }

    #[getter]
    fn dim_image_moduli<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        Ok(self
            .0
            .dim_image_moduli
            .clone()
            .into_pyobject(py)?
            .into_any())
    }

    #[getter]
    fn gs_sym_components(&self) -> Vec<Vec<u32>> {
        self.0
            .gs_sym_components
            .iter()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[getter]
    fn routes_agree(&self) -> bool {
        self.0.flags.routes_agree
    }

    #[getter]
    fn gs_singleton(&self) -> bool {
        self.0.flags.gs_singleton
    }

    #[getter]
    fn skew_label_matches(&self) -> bool {
        self.0.flags.skew_label_matches
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "ModuliReport(p={}, q={}, k={}, dim_Vk={})",
            self.0.p, self.0.q, self.0.k, self.0.dim_vk
        )
    }
}

#[pyclass(name = "VerifyReport", frozen, skip_from_py_object)]
struct PyVerifyReport(VerifyReport);

#[pymethods]
impl PyVerifyReport {
    fn ok(&self) -> bool {
        self.0.ok()
    }

    /// `(suite, name, passed, cases, detail)` per check, in suite order.
    #[getter]
    fn checks(&self) -> Vec<(String, String, bool, usize, String)> {
        self.0
            .checks
            .iter()
            .map(|c| {
                (
                    c.suite.to_string(),
                    c.name.clone(),
                    c.passed,
                    c.cases,
                    c.detail.clone(),
                )
            })
            .collect()
    }

    /// Ids of the detected inconsistencies.
    #[getter]
    fn discrepancies(&self) -> Vec<String> {
        self.0.discrepancies.iter().map(|d| d.id.clone()).collect()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

#[pyfunction]
fn dim_gl<'py>(py: Python<'py>, partition: Vec<u32>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let p = to_partition(partition)?;
    Ok(partition::dim_gl(&p, n).into_pyobject(py)?.into_any())
}

#[pyfunction]
fn dim_rect<'py>(py: Python<'py>, a: usize, b: usize, c: usize) -> PyResult<Bound<'py, PyAny>> {
    Ok(partition::dim_rect(a, b, c)
        .map_err(err)?
        .into_pyobject(py)?
        .into_any())
}

#[pyfunction]
fn fund_to_partition(coeffs: Vec<u32>) -> PyResult<Vec<u32>> {
    let c = FundamentalCoeffs::new(coeffs.len() + 1, coeffs).map_err(err)?;
    Ok(partition::fund_to_partition(&c).parts().to_vec())
}

#[pyfunction]
fn partition_to_fund(partition: Vec<u32>, n: usize) -> PyResult<Vec<u32>> {
    let p = to_partition(partition)?;
    Ok(partition::partition_to_fund(&p, n)
        .map_err(err)?
        .coeffs()
        .to_vec())
}

#[pyfunction]
fn lr_coefficient<'py>(
    py: Python<'py>,
    lam: Vec<u32>,
    mu: Vec<u32>,
    nu: Vec<u32>,
) -> PyResult<Bound<'py, PyAny>> {
    let c = littlewood::lr_coefficient(&to_partition(lam)?, &to_partition(mu)?, &to_partition(nu)?);
    Ok(c.into_pyobject(py)?.into_any())
}

#[pyfunction]
fn multiply(a: Vec<u32>, b: Vec<u32>, max_rows: usize) -> PyResult<PySchurExpansion> {
    let a = SchurExpansion::schur(to_partition(a)?);
    let b = SchurExpansion::schur(to_partition(b)?);
    Ok(PySchurExpansion(schur::multiply(&a, &b, max_rows)))
}

#[pyfunction]
fn adams2(partition: Vec<u32>, max_rows: usize) -> PyResult<PySchurExpansion> {
    Ok(PySchurExpansion(schur::adams2(
        &to_partition(partition)?,
        max_rows,
    )))
}

#[pyfunction]
fn sym_square(partition: Vec<u32>, max_rows: usize) -> PyResult<PySchurExpansion> {
    schur::sym_square(&to_partition(partition)?, max_rows)
        .map(PySchurExpansion)
        .map_err(err)
}

#[pyfunction]
fn alt_square(partition: Vec<u32>, max_rows: usize) -> PyResult<PySchurExpansion> {
    schur::alt_square(&to_partition(partition)?, max_rows)
        .map(PySchurExpansion)
        .map_err(err)
}

/// Components of F(kϖ_q)⊗F(kϖ_q) for SU(p+q), largest partition first.
#[pyfunction]
fn decompose(p: usize, q: usize, k: u32) -> PyResult<Vec<PyComponent>> {
    Ok(moduli::classify_components(p, q, k)
        .map_err(err)?
        .into_iter()
        .map(PyComponent)
        .collect())
}

#[pyfunction]
fn moduli_report(p: usize, q: usize, k: u32) -> PyResult<PyModuliReport> {
    moduli::moduli_report(p, q, k)
        .map(PyModuliReport)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (max_n, max_k, suites = None))]
fn run_verify(
    py: Python<'_>,
    max_n: usize,
    max_k: u32,
    suites: Option<Vec<String>>,
) -> PyResult<PyVerifyReport> {
    let mut cfg = VerifyConfig::new(max_n, max_k).map_err(err)?;
    if let Some(names) = suites {
        let parsed = names
            .iter()
            .map(|s| s.parse::<Suite>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        cfg = cfg.with_suites(parsed);
    }
    let report = py.detach(|| verify::run(&cfg));
    Ok(PyVerifyReport(report))
}

#[pymodule]
fn grassmoduli_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySchurExpansion>()?;
    m.add_class::<PyComponent>()?;
    m.add_class::<PyModuliReport>()?;
    m.add_class::<PyVerifyReport>()?;
    m.add_function(wrap_pyfunction!(dim_gl, m)?)?;
    m.add_function(wrap_pyfunction!(dim_rect, m)?)?;
    m.add_function(wrap_pyfunction!(fund_to_partition, m)?)?;
    m.add_function(wrap_pyfunction!(partition_to_fund, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(multiply, m)?)?;
    m.add_function(wrap_pyfunction!(adams2, m)?)?;
    m.add_function(wrap_pyfunction!(sym_square, m)?)?;
    m.add_function(wrap_pyfunction!(alt_square, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(moduli_report, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
