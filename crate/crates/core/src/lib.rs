//! Finite group analysis over dense Cayley tables.
//!
//! Groups are stored as full multiplication tables over element indices and
//! subgroups as bitmasks over those indices. On top of that sit the subgroup
//! lattice, Sylow and maximal subgroups, the upper central series, and a set
//! of nilpotence criteria that can be run against each other.

pub mod arith;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod group;
pub mod nilpotence;
pub mod perm;
pub mod report;
pub mod subgroups;

pub use constructions::{
    alternating, cyclic, dicyclic, dihedral, direct_product, heisenberg, parse_group_spec, standard_catalog,
    symmetric, CatalogEntry, DirectProduct,
};
pub use error::{GroupError, Result};
pub use group::{power, quotient, Elem, FiniteGroup};
pub use nilpotence::{
    check_hall_normality_implication, check_internal_product_of_sylows, check_maximal_all_normal,
    check_normalizer_condition, check_star, check_star_sylow_only, check_sylow_all_normal,
    decompose_coprime_product_subgroup, is_nilpotent_ucs, upper_central_series, verify_theorem, CriteriaReport,
    HallVerdict, StarReport, StarWitness, UpperCentralSeries,
};
pub use perm::Permutation;
pub use subgroups::{
    all_subgroups, center, conjugate_subgroup, generated_subgroup, index, is_hall, is_normal, normalizer, ElemSet,
    SubgroupLattice, SubgroupSet,
};

/// Largest group order the bitmask representation can hold.
pub const MAX_SUPPORTED_ORDER: usize = 256;

/// Resource caps for closure and enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order accepted; never above [`MAX_SUPPORTED_ORDER`].
    pub max_order: usize,
    /// Largest subgroup lattice enumerated before giving up.
    pub max_subgroups: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: MAX_SUPPORTED_ORDER, max_subgroups: 20_000 }
    }
}
