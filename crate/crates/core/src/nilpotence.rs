//! Nilpotence criteria, the index-power property and its Sylow-only variant,
//! and a checker that runs them all side by side.
//!
//! The index-power property of a finite group `G` says that for every
//! subgroup `H` and every `x` in `G`, `x^[G:H]` lies in `H`. For finite groups
//! it holds exactly when `G` is nilpotent, and it is already enough to ask it
//! of the Sylow subgroups.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, p_part, prime_divisors};
use crate::error::{GroupError, Result};
use crate::group::{power, Elem, FiniteGroup};
use crate::subgroups::{index, is_hall, is_normal, normalizer, ElemSet, SubgroupLattice, SubgroupSet};
use crate::Limits;

/// `Z_0 <= Z_1 <= ...` with `Z_{i+1} / Z_i = Z(G / Z_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperCentralSeries {
    /// Strictly increasing, starting at the trivial subgroup.
    pub terms: Vec<SubgroupSet>,
    pub stabilized: bool,
    pub reaches_whole_group: bool,
    /// Nilpotency class, when the series reaches `G`.
    pub class: Option<usize>,
}

/// `Z_{i+1} = { x : [x, g] in Z_i for all g }`, iterated until it stops growing.
pub fn upper_central_series(g: &FiniteGroup) -> UpperCentralSeries {
    let whole = SubgroupSet::whole(g);
    let mut terms = vec![SubgroupSet::trivial(g)];
    loop {
        let current = *terms.last().expect("non-empty");
        if current == whole {
            let class = terms.len() - 1;
            return UpperCentralSeries { terms, stabilized: true, reaches_whole_group: true, class: Some(class) };
        }
        let next: ElemSet = g
            .elements()
            .filter(|&x| g.elements().all(|y| current.contains(g.commutator(x, y))))
            .collect();
        let next = SubgroupSet::from_elements(g, &next.iter().map(Elem::index).collect::<Vec<_>>())
            .expect("preimage of a center is a subgroup");
        if next == current {
            return UpperCentralSeries { terms, stabilized: true, reaches_whole_group: false, class: None };
        }
        terms.push(next);
    }
}

pub fn is_nilpotent_ucs(g: &FiniteGroup) -> bool {
    upper_central_series(g).reaches_whole_group
}

/// A failure of the index-power property: `element^exponent` is not in `subgroup`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarWitness {
    pub subgroup: SubgroupSet,
    pub element: Elem,
    pub exponent: usize,
}

impl StarWitness {
    /// Recomputes the power and index from scratch.
    pub fn verify(&self, g: &FiniteGroup) -> bool {
        self.exponent == index(g, &self.subgroup)
            && !self.subgroup.contains(power(g, self.element, self.exponent as i64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarReport {
    pub holds: bool,
    pub witness: Option<StarWitness>,
    /// Subgroups examined before stopping, the failing one included.
    pub checked_subgroup_count: usize,
}

/// First `x` in index order with `x^[G:H]` outside `H`.
pub fn power_condition_failure(g: &FiniteGroup, h: &SubgroupSet) -> Option<Elem> {
    let k = index(g, h) as i64;
    g.elements().find(|&x| !h.contains(power(g, x, k)))
}

fn check_star_over<'a>(g: &FiniteGroup, family: impl Iterator<Item = &'a SubgroupSet>) -> StarReport {
    let mut checked = 0;
    for h in family {
        checked += 1;
        if let Some(x) = power_condition_failure(g, h) {
            return StarReport {
                holds: false,
                witness: Some(StarWitness { subgroup: *h, element: x, exponent: index(g, h) }),
                checked_subgroup_count: checked,
            };
        }
    }
    StarReport { holds: true, witness: None, checked_subgroup_count: checked }
}

/// Checks `x^[G:H]` in `H` over every subgroup, in canonical lattice order.
pub fn check_star(lattice: &SubgroupLattice<'_>) -> StarReport {
    check_star_over(lattice.parent(), lattice.iter())
}

/// Lattice members whose order is the full `p`-part of `|G|` for some prime `p`.
pub fn sylow_family<'a>(lattice: &'a SubgroupLattice<'_>) -> impl Iterator<Item = &'a SubgroupSet> {
    let n = lattice.parent().order();
    let parts: Vec<usize> = prime_divisors(n).into_iter().map(|p| p_part(n, p)).collect();
    lattice.iter().filter(move |h| parts.contains(&h.order()))
}

/// Same as [`check_star`], restricted to Sylow subgroups.
pub fn check_star_sylow_only(lattice: &SubgroupLattice<'_>) -> StarReport {
    check_star_over(lattice.parent(), sylow_family(lattice))
}

/// Every proper subgroup is properly contained in its normalizer.
pub fn check_normalizer_condition(lattice: &SubgroupLattice<'_>) -> bool {
    let g = lattice.parent();
    lattice
        .iter()
        .filter(|h| h.order() < g.order())
        .all(|h| normalizer(g, h).order() > h.order())
}

pub fn check_sylow_all_normal(lattice: &SubgroupLattice<'_>) -> bool {
    sylow_family(lattice).all(|p| is_normal(lattice.parent(), p))
}

pub fn check_maximal_all_normal(lattice: &SubgroupLattice<'_>) -> bool {
    lattice.maximal_subgroups().iter().all(|m| is_normal(lattice.parent(), m))
}

/// `G` is the internal direct product of its Sylow subgroups: one Sylow
/// subgroup per prime, each normal, and `(x_1, ..., x_r) -> x_1 ... x_r` is a
/// bijective homomorphism from their external product onto `G`.
pub fn check_internal_product_of_sylows(lattice: &SubgroupLattice<'_>) -> bool {
    let g = lattice.parent();
    let mut factors: Vec<Vec<Elem>> = Vec::new();
    for p in prime_divisors(g.order()) {
        let sylows = lattice.sylow_subgroups(p).expect("p divides |G|");
        match sylows.as_slice() {
            [only] if is_normal(g, only) => factors.push(only.iter().collect()),
            _ => return false,
        }
    }

    // Enumerate tuples in mixed radix; tuple t has components factors[i][digit_i].
    let radices: Vec<usize> = factors.iter().map(Vec::len).collect();
    let count: usize = radices.iter().product();
    if count != g.order() {
        return false;
    }
    let digits = |mut t: usize| -> Vec<usize> {
        let mut d = vec![0; radices.len()];
        for i in (0..radices.len()).rev() {
            d[i] = t % radices[i];
            t /= radices[i];
        }
        d
    };
    let eval = |d: &[usize]| {
        d.iter()
            .enumerate()
            .fold(g.identity(), |acc, (i, &di)| g.mul(acc, factors[i][di]))
    };
    let tuples: Vec<Vec<usize>> = (0..count).map(digits).collect();
    let images: Vec<Elem> = tuples.iter().map(|d| eval(d)).collect();

    let mut hit = ElemSet::empty();
    if !images.iter().all(|&x| hit.insert(x)) {
        return false;
    }

    // Position of each factor element, for componentwise products.
    let mut position = vec![vec![usize::MAX; g.order()]; factors.len()];
    for (i, f) in factors.iter().enumerate() {
        for (pos, x) in f.iter().enumerate() {
            position[i][x.index()] = pos;
        }
    }
    for (s, ds) in tuples.iter().enumerate() {
        for (t, dt) in tuples.iter().enumerate() {
            let prod: Vec<usize> = (0..factors.len())
                .map(|i| position[i][g.mul(factors[i][ds[i]], factors[i][dt[i]]).index()])
                .collect();
            if eval(&prod) != g.mul(images[s], images[t]) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallVerdict {
    pub hall: bool,
    pub power_condition: bool,
    pub normal: bool,
    /// `!(hall && power_condition) || normal`
    pub implication_holds: bool,
}

/// Evaluates "Hall subgroup with `x^[G:H]` in `H` for all `x` implies normal".
pub fn check_hall_normality_implication(g: &FiniteGroup, h: &SubgroupSet) -> HallVerdict {
    let hall = is_hall(g, h);
    let power_condition = power_condition_failure(g, h).is_none();
    let normal = is_normal(g, h);
    HallVerdict { hall, power_condition, normal, implication_holds: !(hall && power_condition) || normal }
}

/// Splits a subgroup of `G_1 x ... x G_n` (pairwise coprime orders) into
/// its projections `H_i <= G_i`, and checks that `H = H_1 x ... x H_n`.
///
/// Product elements use mixed-radix indices with the first factor most
/// significant, matching repeated [`crate::constructions::direct_product`].
pub fn decompose_coprime_product_subgroup(factors: &[FiniteGroup], h: &SubgroupSet) -> Result<Vec<SubgroupSet>> {
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i + 1..] {
            if gcd(a.order(), b.order()) != 1 {
                return Err(GroupError::NotCoprimeFactors { left: a.order(), right: b.order() });
            }
        }
    }
    let orders: Vec<usize> = factors.iter().map(FiniteGroup::order).collect();
    let total: usize = orders.iter().product();
    let split = |mut x: usize| {
        let mut d = vec![0; orders.len()];
        for i in (0..orders.len()).rev() {
            d[i] = x % orders[i];
            x /= orders[i];
        }
        d
    };

    let mut projections = vec![ElemSet::empty(); factors.len()];
    for x in h.iter() {
        if x.index() >= total {
            return Err(GroupError::ElementOutOfRange { element: x.index(), order: total });
        }
        for (i, d) in split(x.index()).into_iter().enumerate() {
            projections[i].insert(Elem::new(d));
        }
    }
    let parts = factors
        .iter()
        .zip(&projections)
        .map(|(f, set)| {
            SubgroupSet::from_elements(f, &set.iter().map(Elem::index).collect::<Vec<_>>())
                .map_err(|_| GroupError::DecompositionMismatch)
        })
        .collect::<Result<Vec<_>>>()?;

    // reassemble H_1 x ... x H_n
    let mut rebuilt = vec![0usize];
    for (part, &radix) in parts.iter().zip(&orders) {
        rebuilt = rebuilt
            .iter()
            .flat_map(|&prefix| part.iter().map(move |y| prefix * radix + y.index()))
            .collect();
    }
    let rebuilt: ElemSet = rebuilt.into_iter().map(Elem::new).collect();
    if rebuilt != *h.members() {
        return Err(GroupError::DecompositionMismatch);
    }
    Ok(parts)
}

/// The seven verdicts side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub ucs_nilpotent: bool,
    pub normalizer_condition: bool,
    pub sylow_all_normal: bool,
    pub internal_product_of_sylows: bool,
    pub maximal_all_normal: bool,
    pub star: bool,
    pub star_sylow_only: bool,
    pub all_agree: bool,
    pub nilpotency_class: Option<usize>,
}

impl CriteriaReport {
    pub fn verdicts(&self) -> [bool; 7] {
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

    /// The common verdict, if all seven agree.
    pub fn verdict(&self) -> Option<bool> {
        self.all_agree.then_some(self.ucs_nilpotent)
    }
}

pub fn verify_theorem(g: &FiniteGroup, limits: &Limits) -> Result<CriteriaReport> {
    let lattice = SubgroupLattice::compute(g, limits)?;
    Ok(criteria_from_lattice(&lattice))
}

pub fn criteria_from_lattice(lattice: &SubgroupLattice<'_>) -> CriteriaReport {
    let series = upper_central_series(lattice.parent());
    let verdicts = [
        series.reaches_whole_group,
        check_normalizer_condition(lattice),
        check_sylow_all_normal(lattice),
        check_internal_product_of_sylows(lattice),
        check_maximal_all_normal(lattice),
        check_star(lattice).holds,
        check_star_sylow_only(lattice).holds,
    ];
    CriteriaReport {
        ucs_nilpotent: verdicts[0],
        normalizer_condition: verdicts[1],
        sylow_all_normal: verdicts[2],
        internal_product_of_sylows: verdicts[3],
        maximal_all_normal: verdicts[4],
        star: verdicts[5],
        star_sylow_only: verdicts[6],
        all_agree: verdicts.iter().all(|&v| v == verdicts[0]),
        nilpotency_class: series.class,
    }
}
