//! Python bindings for `nilcheck`.
//!
//! Groups are exposed as an immutable `FiniteGroup` class. Subgroups cross the
//! boundary as sorted lists of element indices.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use nilcheck::nilpotence::criteria_from_lattice;
use nilcheck::report::AnalysisReport;
use nilcheck::{Elem, GroupError, Limits, Permutation, SubgroupLattice, SubgroupSet};

create_exception!(nilcheck, NilcheckError, PyException);
create_exception!(nilcheck, CapExceededError, NilcheckError);

fn to_py(e: GroupError) -> PyErr {
    if e.is_cap_violation() {
        CapExceededError::new_err(e.to_string())
    } else {
        NilcheckError::new_err(e.to_string())
    }
}

type Res<T> = Result<T, GroupError>;

#[pyclass(name = "FiniteGroup", module = "nilcheck", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyFiniteGroup {
    inner: Arc<nilcheck::FiniteGroup>,
    limits: Limits,
}

impl PyFiniteGroup {
    fn wrap(g: nilcheck::FiniteGroup, limits: Limits) -> Self {
        PyFiniteGroup { inner: Arc::new(g), limits }
    }

    fn elem(&self, x: usize) -> Res<Elem> {
        self.inner.elem(x)
    }

    fn subgroup(&self, elements: &[usize]) -> Res<SubgroupSet> {
        SubgroupSet::from_elements(&self.inner, elements)
    }

    fn lattice(&self) -> Res<SubgroupLattice<'_>> {
        SubgroupLattice::compute(&self.inner, &self.limits)
    }

    fn subgroup_lists(&self) -> Res<Vec<Vec<usize>>> {
        Ok(self.lattice()?.iter().map(SubgroupSet::indices).collect())
    }

    fn criteria(&self) -> Res<PyCriteriaReport> {
        Ok(criteria_from_lattice(&self.lattice()?).into())
    }

    fn star(&self, sylow_only: bool) -> Res<PyStarReport> {
        let lattice = self.lattice()?;
        let report = if sylow_only {
            nilcheck::check_star_sylow_only(&lattice)
        } else {
            nilcheck::check_star(&lattice)
        };
        Ok(PyStarReport {
            holds: report.holds,
            witness: report.witness.map(|w| (w.subgroup.indices(), w.element.index(), w.exponent)),
            checked_subgroup_count: report.checked_subgroup_count,
        })
    }
}

fn limits_for(max_order: usize) -> Limits {
    Limits { max_order, ..Limits::default() }
}

#[pymethods]
impl PyFiniteGroup {
    /// Build a group from a spec such as "S3", "D8xC3", "Q8" or "@path/to/file.cayley".
    #[staticmethod]
    #[pyo3(signature = (spec, max_order = nilcheck::MAX_SUPPORTED_ORDER))]
    fn from_spec(spec: &str, max_order: usize) -> PyResult<Self> {
        let limits = limits_for(max_order);
        let g = nilcheck::parse_group_spec(spec, &limits).map_err(to_py)?;
        Ok(PyFiniteGroup::wrap(g, limits))
    }

    #[staticmethod]
    fn from_cayley_table(table: Vec<Vec<usize>>) -> PyResult<Self> {
        let g = nilcheck::FiniteGroup::from_cayley_table(&table).map_err(to_py)?;
        Ok(PyFiniteGroup::wrap(g, Limits::default()))
    }

    /// Close permutations (given as image lists) under composition.
    #[staticmethod]
    #[pyo3(signature = (degree, generators, max_order = nilcheck::MAX_SUPPORTED_ORDER))]
    fn from_permutations(degree: usize, generators: Vec<Vec<usize>>, max_order: usize) -> PyResult<Self> {
        let gens = generators
            .into_iter()
            .enumerate()
            .map(|(index, images)| {
                Permutation::from_images(images).map_err(|message| GroupError::InvalidPermutation { index, message })
            })
            .collect::<Res<Vec<_>>>()
            .map_err(to_py)?;
        let limits = limits_for(max_order);
        let g = nilcheck::FiniteGroup::from_permutation_generators(degree, &gens, &limits).map_err(to_py)?;
        Ok(PyFiniteGroup::wrap(g, limits))
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn identity(&self) -> usize {
        self.inner.identity().index()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("FiniteGroup(order={})", self.inner.order())
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.table_rows()
    }

    fn cayley_text(&self) -> String {
        self.inner.to_cayley_text()
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        Ok(self.inner.mul(self.elem(a).map_err(to_py)?, self.elem(b).map_err(to_py)?).index())
    }

    fn inv(&self, a: usize) -> PyResult<usize> {
        Ok(self.inner.inv(self.elem(a).map_err(to_py)?).index())
    }

    fn power(&self, x: usize, k: i64) -> PyResult<usize> {
        Ok(nilcheck::power(&self.inner, self.elem(x).map_err(to_py)?, k).index())
    }

    fn elem_order(&self, x: usize) -> PyResult<usize> {
        Ok(self.inner.elem_order(self.elem(x).map_err(to_py)?))
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn generated_subgroup(&self, seed: Vec<usize>) -> PyResult<Vec<usize>> {
        let seed = seed.into_iter().map(|x| self.elem(x)).collect::<Res<Vec<_>>>().map_err(to_py)?;
        Ok(nilcheck::generated_subgroup(&self.inner, &seed).indices())
    }

    /// All subgroups in canonical order (by order, then bitmask value).
    fn subgroups(&self) -> PyResult<Vec<Vec<usize>>> {
        self.subgroup_lists().map_err(to_py)
    }

    fn center(&self) -> Vec<usize> {
        nilcheck::center(&self.inner).indices()
    }

    fn is_normal(&self, subgroup: Vec<usize>) -> PyResult<bool> {
        Ok(nilcheck::is_normal(&self.inner, &self.subgroup(&subgroup).map_err(to_py)?))
    }

    fn is_hall(&self, subgroup: Vec<usize>) -> PyResult<bool> {
        Ok(nilcheck::is_hall(&self.inner, &self.subgroup(&subgroup).map_err(to_py)?))
    }

    fn normalizer(&self, subgroup: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(nilcheck::normalizer(&self.inner, &self.subgroup(&subgroup).map_err(to_py)?).indices())
    }

    fn index(&self, subgroup: Vec<usize>) -> PyResult<usize> {
        Ok(nilcheck::index(&self.inner, &self.subgroup(&subgroup).map_err(to_py)?))
    }

    fn sylow_subgroups(&self, p: usize) -> PyResult<Vec<Vec<usize>>> {
        let lattice = self.lattice().map_err(to_py)?;
        let sylows = lattice.sylow_subgroups(p).map_err(to_py)?;
        Ok(sylows.iter().map(SubgroupSet::indices).collect())
    }

    fn maximal_subgroups(&self) -> PyResult<Vec<Vec<usize>>> {
        let lattice = self.lattice().map_err(to_py)?;
        Ok(lattice.maximal_subgroups().iter().map(SubgroupSet::indices).collect())
    }

    /// Quotient by a normal subgroup; returns the quotient and the projection.
    fn quotient(&self, subgroup: Vec<usize>) -> PyResult<(PyFiniteGroup, Vec<usize>)> {
        let n = self.subgroup(&subgroup).map_err(to_py)?;
        let (q, proj) = nilcheck::quotient(&self.inner, &n).map_err(to_py)?;
        Ok((PyFiniteGroup::wrap(q, self.limits), proj.into_iter().map(Elem::index).collect()))
    }

    /// Terms `Z_0, Z_1, ...` of the upper central series.
    fn upper_central_series(&self) -> Vec<Vec<usize>> {
        nilcheck::upper_central_series(&self.inner).terms.iter().map(SubgroupSet::indices).collect()
    }

    fn nilpotency_class(&self) -> Option<usize> {
        nilcheck::upper_central_series(&self.inner).class
    }

    fn check_star(&self) -> PyResult<PyStarReport> {
        self.star(false).map_err(to_py)
    }

    fn check_star_sylow_only(&self) -> PyResult<PyStarReport> {
        self.star(true).map_err(to_py)
    }

    fn hall_implication(&self, subgroup: Vec<usize>) -> PyResult<(bool, bool, bool, bool)> {
        let h = self.subgroup(&subgroup).map_err(to_py)?;
        let v = nilcheck::check_hall_normality_implication(&self.inner, &h);
        Ok((v.hall, v.power_condition, v.normal, v.implication_holds))
    }

    fn verify_theorem(&self) -> PyResult<PyCriteriaReport> {
        self.criteria().map_err(to_py)
    }

    /// The same JSON document `nilcheck analyze --format json` prints.
    #[pyo3(signature = (name = "group"))]
    fn analyze_json(&self, name: &str) -> PyResult<String> {
        let report = AnalysisReport::build(name, &self.inner, &self.limits).map_err(to_py)?;
        Ok(serde_json::to_string_pretty(&report).expect("report serializes"))
    }
}

#[pyclass(name = "StarReport", module = "nilcheck", frozen, get_all, skip_from_py_object)]
#[derive(Clone, Debug)]
pub struct PyStarReport {
    holds: bool,
    /// `(subgroup, element, exponent)`
    witness: Option<(Vec<usize>, usize, usize)>,
    checked_subgroup_count: usize,
}

#[pymethods]
impl PyStarReport {
    fn __repr__(&self) -> String {
        format!("StarReport(holds={}, witness={:?})", self.holds, self.witness)
    }
}

#[pyclass(name = "CriteriaReport", module = "nilcheck", frozen, get_all, skip_from_py_object)]
#[derive(Clone, Debug)]
pub struct PyCriteriaReport {
    ucs_nilpotent: bool,
    normalizer_condition: bool,
    sylow_all_normal: bool,
    internal_product_of_sylows: bool,
    maximal_all_normal: bool,
    star: bool,
    star_sylow_only: bool,
    all_agree: bool,
    nilpotency_class: Option<usize>,
}

impl From<nilcheck::CriteriaReport> for PyCriteriaReport {
    fn from(c: nilcheck::CriteriaReport) -> Self {
        PyCriteriaReport {
            ucs_nilpotent: c.ucs_nilpotent,
            normalizer_condition: c.normalizer_condition,
            sylow_all_normal: c.sylow_all_normal,
            internal_product_of_sylows: c.internal_product_of_sylows,
            maximal_all_normal: c.maximal_all_normal,
            star: c.star,
            star_sylow_only: c.star_sylow_only,
            all_agree: c.all_agree,
            nilpotency_class: c.nilpotency_class,
        }
    }
}

#[pymethods]
impl PyCriteriaReport {
    fn verdicts(&self) -> [bool; 7] {
        [
            self.ucs_nilpotent,
            self.normalizer_condition,
            self.sylow_all_normal,
            self.internal_product_of_sylows,
            self.maximal_all_normal,
            self.star,
            self.star_sylow_only,
        ]
    }

    fn __repr__(&self) -> String {
        format!("CriteriaReport(all_agree={}, verdicts={:?})", self.all_agree, self.verdicts())
    }
}

/// `(name, group, expected_nilpotent)` for every built-in catalog entry.
#[pyfunction]
fn standard_catalog() -> Vec<(String, PyFiniteGroup, Option<bool>)> {
    nilcheck::standard_catalog()
        .into_iter()
        .map(|e| (e.name, PyFiniteGroup::wrap(e.group, Limits::default()), e.expected_nilpotent))
        .collect()
}

#[pyfunction]
fn direct_product(a: &PyFiniteGroup, b: &PyFiniteGroup) -> PyResult<PyFiniteGroup> {
    let limits = Limits::default();
    let p = nilcheck::direct_product(&a.inner, &b.inner, &limits).map_err(to_py)?;
    Ok(PyFiniteGroup::wrap(p.group, limits))
}

/// Splits a subgroup of a product of coprime-order factors into its projections.
#[pyfunction]
fn decompose_coprime_product_subgroup(
    factors: Vec<PyFiniteGroup>,
    product: &PyFiniteGroup,
    subgroup: Vec<usize>,
) -> PyResult<Vec<Vec<usize>>> {
    let h = product.subgroup(&subgroup).map_err(to_py)?;
    let groups: Vec<nilcheck::FiniteGroup> = factors.iter().map(|f| (*f.inner).clone()).collect();
    let parts = nilcheck::decompose_coprime_product_subgroup(&groups, &h).map_err(to_py)?;
    Ok(parts.iter().map(SubgroupSet::indices).collect())
}

#[pymodule]
fn nilcheck_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFiniteGroup>()?;
    m.add_class::<PyStarReport>()?;
    m.add_class::<PyCriteriaReport>()?;
    m.add_function(wrap_pyfunction!(standard_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(direct_product, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_coprime_product_subgroup, m)?)?;
    m.add("NilcheckError", m.py().get_type::<NilcheckError>())?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add("MAX_SUPPORTED_ORDER", nilcheck::MAX_SUPPORTED_ORDER)?;
    Ok(())
}
