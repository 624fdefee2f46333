//! Subgroups as bitmasks, and the subgroup lattice engine.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::arith::{gcd, is_prime, p_part};
use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup};
use crate::{Limits, MAX_SUPPORTED_ORDER};

const WORDS: usize = MAX_SUPPORTED_ORDER / 64;

/// Fixed-width bitset over element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub fn empty() -> Self {
        ElemSet([0; WORDS])
    }

    /// All elements of a group of order `n`.
    pub fn full(n: usize) -> Self {
        let mut s = ElemSet::empty();
        for i in 0..n {
            s.insert(Elem::new(i));
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, x: Elem) -> bool {
        let (w, b) = (x.index() / 64, x.index() % 64);
        let was = self.0[w] >> b & 1 == 1;
        self.0[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        let (w, b) = (x.index() / 64, x.index() % 64);
        self.0[w] >> b & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(Elem::new(w * 64 + b))
            })
        })
    }

    /// Raw words, least significant first.
    pub fn words(&self) -> &[u64; WORDS] {
        &self.0
    }

    /// Compares the sets read as unsigned integers (bit i has weight 2^i).
    pub fn cmp_as_integer(&self, other: &ElemSet) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

/// A subgroup of a fixed parent group, as a membership bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    members: ElemSet,
    order: usize,
}

impl SubgroupSet {
    /// Wraps a bitmask that is already known to be a subgroup.
    pub(crate) fn from_closed(members: ElemSet) -> Self {
        SubgroupSet { order: members.len(), members }
    }

    /// Checks that `elements` form a subgroup of `g`.
    pub fn from_elements(g: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        let mut members = ElemSet::empty();
        for &i in elements {
            members.insert(g.elem(i)?);
        }
        if !members.contains(g.identity()) {
            return Err(GroupError::NotASubgroup { reason: "missing the identity".into() });
        }
        for a in members.iter() {
            if !members.contains(g.inv(a)) {
                return Err(GroupError::NotASubgroup { reason: format!("missing the inverse of {a}") });
            }
            for b in members.iter() {
                let ab = g.mul(a, b);
                if !members.contains(ab) {
                    return Err(GroupError::NotASubgroup { reason: format!("{a}*{b} = {ab} is missing") });
                }
            }
        }
        Ok(SubgroupSet::from_closed(members))
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        SubgroupSet::from_closed([g.identity()].into_iter().collect())
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        SubgroupSet::from_closed(ElemSet::full(g.order()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().map(Elem::index).collect()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_closed(self.members.intersection(&other.members))
    }
}

impl Ord for SubgroupSet {
    /// Canonical lattice order: by order, then by bitmask value.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp_as_integer(&other.members))
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Smallest subgroup containing `seed`.
pub fn generated_subgroup(g: &FiniteGroup, seed: &[Elem]) -> SubgroupSet {
    close(g, ElemSet::empty(), seed)
}

// Closure of `start ∪ {identity}` under right multiplication by `gens`. In a
// finite group this is the subgroup generated by `gens`, provided `start`
// already lies inside it.
fn close(g: &FiniteGroup, start: ElemSet, gens: &[Elem]) -> SubgroupSet {
    let mut members = start;
    let mut queue: Vec<Elem> = members.iter().collect();
    if members.insert(g.identity()) {
        queue.push(g.identity());
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if members.insert(y) {
                queue.push(y);
            }
        }
    }
    SubgroupSet::from_closed(members)
}

/// `[G:H]`
pub fn index(g: &FiniteGroup, h: &SubgroupSet) -> usize {
    g.order() / h.order()
}

/// `{ x h x^-1 : h in H }`
pub fn conjugate_subgroup(g: &FiniteGroup, h: &SubgroupSet, x: Elem) -> SubgroupSet {
    SubgroupSet::from_closed(h.iter().map(|y| g.conjugate(x, y)).collect())
}

pub fn is_normal(g: &FiniteGroup, h: &SubgroupSet) -> bool {
    g.elements().all(|x| h.iter().all(|y| h.contains(g.conjugate(x, y))))
}

pub fn normalizer(g: &FiniteGroup, h: &SubgroupSet) -> SubgroupSet {
    SubgroupSet::from_closed(
        g.elements()
            .filter(|&x| h.iter().all(|y| h.contains(g.conjugate(x, y))))
            .collect(),
    )
}

pub fn center(g: &FiniteGroup) -> SubgroupSet {
    SubgroupSet::from_closed(
        g.elements()
            .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
            .collect(),
    )
}

/// `gcd(|H|, [G:H]) = 1`
pub fn is_hall(g: &FiniteGroup, h: &SubgroupSet) -> bool {
    gcd(h.order(), index(g, h)) == 1
}

/// Every subgroup of a group, deduplicated and in canonical order.
#[derive(Debug, Clone)]
pub struct SubgroupLattice<'g> {
    parent: &'g FiniteGroup,
    subgroups: Vec<SubgroupSet>,
}

/// Lattice with default limits.
pub fn all_subgroups(g: &FiniteGroup) -> Result<SubgroupLattice<'_>> {
    SubgroupLattice::compute(g, &Limits::default())
}

impl<'g> SubgroupLattice<'g> {
    /// Enumerates subgroups by joining lattice members with cyclic subgroups
    /// until nothing new appears. Every subgroup is a join of cyclic ones, so
    /// the fixpoint is the whole lattice.
    pub fn compute(g: &'g FiniteGroup, limits: &Limits) -> Result<Self> {
        if g.order() > limits.max_order {
            return Err(GroupError::OrderExceedsCap { order: g.order(), cap: limits.max_order });
        }
        let cap = limits.max_subgroups;

        // (subgroup, generators)
        let mut cyclics: Vec<(SubgroupSet, Elem)> = Vec::new();
        let mut seen: HashSet<ElemSet> = HashSet::new();
        for x in g.elements() {
            let c = generated_subgroup(g, &[x]);
            if seen.insert(c.members) {
                cyclics.push((c, x));
            }
        }
        if seen.len() > cap {
            return Err(GroupError::LatticeExceedsCap { cap });
        }

        let mut all: Vec<SubgroupSet> = cyclics.iter().map(|(c, _)| *c).collect();
        let mut frontier: Vec<(SubgroupSet, Vec<Elem>)> =
            cyclics.iter().map(|(c, x)| (*c, vec![*x])).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (h, gens) in &frontier {
                for (c, x) in &cyclics {
                    if c.is_subgroup_of(h) {
                        continue;
                    }
                    let mut joined_gens = gens.clone();
                    joined_gens.push(*x);
                    let joined = close(g, h.members, &joined_gens);
                    if seen.insert(joined.members) {
                        if seen.len() > cap {
                            return Err(GroupError::LatticeExceedsCap { cap });
                        }
                        all.push(joined);
                        next.push((joined, joined_gens));
                    }
                }
            }
            frontier = next;
        }
        all.sort();
        Ok(SubgroupLattice { parent: g, subgroups: all })
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn subgroups(&self) -> &[SubgroupSet] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SubgroupSet> {
        self.subgroups.iter()
    }

    pub fn contains(&self, h: &SubgroupSet) -> bool {
        self.subgroups.binary_search(h).is_ok()
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &SubgroupSet> {
        self.subgroups.iter().filter(move |h| is_normal(self.parent, h))
    }

    /// Sylow `p`-subgroups in canonical order.
    pub fn sylow_subgroups(&self, p: usize) -> Result<Vec<SubgroupSet>> {
        let n = self.parent.order();
        if !is_prime(p) || !n.is_multiple_of(p) {
            return Err(GroupError::PrimeDoesNotDivideOrder { p, order: n });
        }
        let target = p_part(n, p);
        Ok(self.subgroups.iter().filter(|h| h.order() == target).copied().collect())
    }

    /// Proper subgroups not strictly contained in another proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<SubgroupSet> {
        let n = self.parent.order();
        let proper: Vec<&SubgroupSet> = self.subgroups.iter().filter(|h| h.order() < n).collect();
        proper
            .iter()
            .filter(|h| !proper.iter().any(|k| k.order() > h.order() && h.is_subgroup_of(k)))
            .map(|h| **h)
            .collect()
    }
}
