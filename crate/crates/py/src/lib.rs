//! Python bindings: workspaces, categories, distributors and the completeness checks.

use std::sync::Arc;

use clap::ValueEnum;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use qcalc::cli::workspace::{parse_workspace, serialize_workspace, Workspace as CoreWorkspace};
use qcalc::cli::{check_property, dist_property, DistProperty, Property};
use qcalc::mcomplete::{free_extension, MoritaReport};
use qcalc::morita::{cauchy_completion, morita_equivalent};
use qcalc::qcat::QCategory;
use qcalc::qdist::{self, QDistributor};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Outcome of a property check.
#[pyclass(name = "Report", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct Report {
    subject: String,
    property: String,
    verdict: bool,
    witness: Option<String>,
    notes: Vec<String>,
}

impl From<MoritaReport> for Report {
    fn from(r: MoritaReport) -> Self {
        Report { subject: r.subject, property: r.property, verdict: r.verdict, witness: r.witness, notes: r.notes }
    }
}

#[pymethods]
impl Report {
    fn __bool__(&self) -> bool {
        self.verdict
    }

    fn __repr__(&self) -> String {
        format!("Report({} {}: {})", self.subject, self.property, self.verdict)
    }
}

#[pyclass(name = "Category", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Category(Arc<QCategory>);

#[pymethods]
impl Category {
    #[getter]
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    #[getter]
    fn objects(&self) -> Vec<String> {
        self.0.objects().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// Hom value between two named objects, by element name.
    fn hom(&self, x: &str, y: &str) -> PyResult<String> {
        let (x, y) = (self.0.object(x).map_err(value_error)?, self.0.object(y).map_err(value_error)?);
        Ok(self.0.hom_name(x, y).to_string())
    }

    /// Rows `(label, yoneda, star)` for every presheaf, in enumeration order.
    fn presheaves(&self) -> PyResult<Vec<(String, Vec<String>, Vec<String>)>> {
        let rows = qcalc::cli::paper::presheaf_rows(&self.0, None).map_err(value_error)?;
        Ok(rows.into_iter().map(|r| (r.label, r.yoneda, r.star)).collect())
    }

    /// Checks a property named as on the command line, e.g. `"m-cocomplete"`.
    #[pyo3(signature = (property, conical_empty = true))]
    fn check(&self, property: &str, conical_empty: bool) -> PyResult<Report> {
        let p = Property::from_str(property, true).map_err(PyValueError::new_err)?;
        Ok(check_property(&self.0, p, conical_empty).map_err(value_error)?.into())
    }

    /// The full subcategory of presheaves with a left adjoint, and its member labels.
    fn cauchy_completion(&self) -> PyResult<(Category, Vec<String>)> {
        let cc = cauchy_completion(self.0.clone()).map_err(value_error)?;
        let labels = cc.members.iter().map(|&i| cc.presheaves.label(i).to_string()).collect();
        Ok((Category(cc.category.clone()), labels))
    }

    fn morita_equivalent(&self, other: &Category) -> PyResult<bool> {
        Ok(morita_equivalent(self.0.clone(), other.0.clone()).map_err(value_error)?.is_some())
    }

    fn __repr__(&self) -> String {
        format!("Category({}, objects={:?})", self.0.name(), self.0.objects())
    }
}

#[pyclass(name = "Distributor", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Distributor(QDistributor);

#[pymethods]
impl Distributor {
    #[getter]
    fn name(&self) -> String {
        self.0.name.clone()
    }

    #[getter]
    fn domain(&self) -> Category {
        Category(self.0.dom().clone())
    }

    #[getter]
    fn codomain(&self) -> Category {
        Category(self.0.cod().clone())
    }

    /// Cell names, row by row over domain objects.
    fn cells(&self) -> Vec<Vec<String>> {
        (0..self.0.dom().len())
            .map(|x| (0..self.0.cod().len()).map(|y| self.0.cell_name(x, y).to_string()).collect())
            .collect()
    }

    /// `self ∘ first`.
    fn after(&self, first: &Distributor) -> PyResult<Distributor> {
        Ok(Distributor(qdist::compose(&self.0, &first.0).map_err(value_error)?))
    }

    fn star(&self) -> Distributor {
        Distributor(self.0.star())
    }

    fn leq(&self, other: &Distributor) -> PyResult<bool> {
        self.0.leq(&other.0).map_err(value_error)
    }

    fn is_left_adjoint(&self) -> bool {
        self.0.is_left_adjoint()
    }

    fn is_right_adjoint(&self) -> bool {
        self.0.is_right_adjoint()
    }

    /// Checks a property named as on the command line, e.g. `"phat-hom"`.
    fn check(&self, property: &str) -> PyResult<Report> {
        let p = DistProperty::from_str(property, true).map_err(PyValueError::new_err)?;
        Ok(dist_property(&self.0, p).map_err(value_error)?.into())
    }

    /// The extension along the Yoneda embedding; requires a left adjoint into an M-cocomplete category.
    #[pyo3(signature = (uniqueness = false))]
    fn free_extension(&self, uniqueness: bool) -> PyResult<(Distributor, bool)> {
        let fe = free_extension(&self.0, uniqueness).map_err(value_error)?;
        Ok((Distributor(fe.eta), fe.report.all_hold()))
    }

    fn __repr__(&self) -> String {
        format!("Distributor({}: {} -> {})", self.0.name, self.0.dom().name(), self.0.cod().name())
    }
}

#[pyclass(name = "Workspace", frozen)]
struct Workspace(CoreWorkspace);

#[pymethods]
impl Workspace {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Workspace> {
        Ok(Workspace(parse_workspace(text).map_err(value_error)?))
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Workspace> {
        let text = std::fs::read_to_string(path).map_err(value_error)?;
        Self::parse(&text)
    }

    fn categories(&self) -> Vec<String> {
        self.0.categories.keys().cloned().collect()
    }

    fn distributors(&self) -> Vec<String> {
        self.0.distributors.keys().cloned().collect()
    }

    fn category(&self, name: &str) -> PyResult<Category> {
        self.0.category(name).map(|c| Category(c.clone())).ok_or_else(|| PyKeyError::new_err(name.to_string()))
    }

    fn distributor(&self, name: &str) -> PyResult<Distributor> {
        self.0.distributors.get(name).map(|d| Distributor(d.clone())).ok_or_else(|| PyKeyError::new_err(name.to_string()))
    }

    fn to_text(&self) -> String {
        serialize_workspace(&self.0)
    }
}

/// The two-object category over the four-element frame.
#[pyfunction]
fn frame_example() -> Category {
    Category(Arc::new(qcalc::fixtures::x_f()))
}

/// Runs the command line with `args` (without the program name); returns `(code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let o = qcalc::cli::run_args(std::iter::once("qcalc".to_string()).chain(args));
    (o.code, o.stdout, o.stderr)
}

#[pymodule]
fn qcalc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Workspace>()?;
    m.add_class::<Category>()?;
    m.add_class::<Distributor>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(frame_example, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
