//! Serializable reports produced by the command-line front end.

use serde::{Deserialize, Serialize};

use crate::arith::{p_part, prime_divisors};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::nilpotence::{check_star, criteria_from_lattice, upper_central_series, CriteriaReport, StarWitness};
use crate::subgroups::{index, is_hall, is_normal, SubgroupLattice};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub subgroup: Vec<usize>,
    pub element: usize,
    pub exponent: usize,
}

impl From<&StarWitness> for WitnessReport {
    fn from(w: &StarWitness) -> Self {
        WitnessReport { subgroup: w.subgroup.indices(), element: w.element.index(), exponent: w.exponent }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    /// Element indices of each term `Z_0, Z_1, ...`.
    pub terms: Vec<Vec<usize>>,
    pub stabilized: bool,
    pub reaches_whole_group: bool,
    pub class: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub group_name: String,
    pub order: usize,
    pub subgroup_count: usize,
    pub criteria: CriteriaReport,
    pub star_witness: Option<WitnessReport>,
    pub series: SeriesReport,
}

impl AnalysisReport {
    pub fn build(name: &str, g: &FiniteGroup, limits: &Limits) -> Result<Self> {
        let lattice = SubgroupLattice::compute(g, limits)?;
        Ok(AnalysisReport::from_lattice(name, &lattice))
    }

    pub fn from_lattice(name: &str, lattice: &SubgroupLattice<'_>) -> Self {
        let g = lattice.parent();
        let series = upper_central_series(g);
        AnalysisReport {
            group_name: name.to_string(),
            order: g.order(),
            subgroup_count: lattice.len(),
            criteria: criteria_from_lattice(lattice),
            star_witness: check_star(lattice).witness.as_ref().map(WitnessReport::from),
            series: SeriesReport {
                terms: series.terms.iter().map(|t| t.indices()).collect(),
                stabilized: series.stabilized,
                reaches_whole_group: series.reaches_whole_group,
                class: series.class,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRow {
    pub order: usize,
    pub index: usize,
    pub elements: Vec<usize>,
    pub normal: bool,
    pub hall: bool,
    /// The prime `p` when this is a Sylow `p`-subgroup.
    pub sylow_prime: Option<usize>,
    pub maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub group_name: String,
    pub order: usize,
    pub subgroups: Vec<SubgroupRow>,
}

impl LatticeReport {
    pub fn from_lattice(name: &str, lattice: &SubgroupLattice<'_>) -> Self {
        let g = lattice.parent();
        let n = g.order();
        let maximal = lattice.maximal_subgroups();
        let sylow_primes: Vec<(usize, usize)> = prime_divisors(n).into_iter().map(|p| (p, p_part(n, p))).collect();
        let subgroups = lattice
            .iter()
            .map(|h| SubgroupRow {
                order: h.order(),
                index: index(g, h),
                elements: h.indices(),
                normal: is_normal(g, h),
                hall: is_hall(g, h),
                sylow_prime: sylow_primes.iter().find(|(_, part)| *part == h.order()).map(|(p, _)| *p),
                maximal: maximal.contains(h),
            })
            .collect();
        LatticeReport { group_name: name.to_string(), order: n, subgroups }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub name: String,
    pub order: usize,
    pub subgroup_count: usize,
    pub expected_nilpotent: Option<bool>,
    pub criteria: CriteriaReport,
    /// True when the seven verdicts agree and match the annotation, if any.
    pub matches_annotation: bool,
    pub star_witness: Option<WitnessReport>,
}

impl CatalogRow {
    pub fn build(name: &str, g: &FiniteGroup, expected: Option<bool>, limits: &Limits) -> Result<Self> {
        let lattice = SubgroupLattice::compute(g, limits)?;
        let criteria = criteria_from_lattice(&lattice);
        let matches_annotation = match (criteria.verdict(), expected) {
            (Some(v), Some(e)) => v == e,
            (Some(_), None) => true,
            (None, _) => false,
        };
        Ok(CatalogRow {
            name: name.to_string(),
            order: g.order(),
            subgroup_count: lattice.len(),
            expected_nilpotent: expected,
            criteria,
            matches_annotation,
            star_witness: check_star(&lattice).witness.as_ref().map(WitnessReport::from),
        })
    }

    pub fn passed(&self) -> bool {
        self.criteria.all_agree && self.matches_annotation
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSummary {
    pub groups: Vec<CatalogRow>,
    pub all_passed: bool,
}
