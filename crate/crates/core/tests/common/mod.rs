//! Brute-force oracles that share no code path with the lattice engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nilcheck::{FiniteGroup, SubgroupLattice};

/// Every subset of `G` (order at most 20) closed under the product and
/// containing the identity, as bitmasks over element indices.
pub fn power_set_subgroups(g: &FiniteGroup) -> BTreeSet<u32> {
    let n = g.order();
    assert!(n <= 20, "power-set oracle is exponential");
    let rows = g.table_rows();
    let e = g.identity().index();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask >> e & 1 == 0 {
            continue;
        }
        let closed = (0..n).filter(|a| mask >> a & 1 == 1).all(|a| {
            (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .all(|b| mask >> rows[a][b] & 1 == 1)
        });
        if closed {
            out.insert(mask);
        }
    }
    out
}

pub fn lattice_masks(lattice: &SubgroupLattice<'_>) -> BTreeSet<u32> {
    lattice
        .iter()
        .map(|h| h.indices().iter().fold(0u32, |m, &i| m | 1 << i))
        .collect()
}

pub fn mask_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Elements commuting with everything, straight from the table.
pub fn brute_center(g: &FiniteGroup) -> Vec<usize> {
    let t = g.table_rows();
    (0..g.order()).filter(|&z| (0..g.order()).all(|x| t[z][x] == t[x][z])).collect()
}

/// `{ g : g H g^-1 = H }` from the table, inverses found by search.
pub fn brute_normalizer(g: &FiniteGroup, h: &[usize]) -> Vec<usize> {
    let t = g.table_rows();
    let n = g.order();
    let e = g.identity().index();
    let inv = |a: usize| (0..n).find(|&b| t[a][b] == e).unwrap();
    let hs: BTreeSet<usize> = h.iter().copied().collect();
    (0..n)
        .filter(|&x| {
            let conj: BTreeSet<usize> = h.iter().map(|&y| t[t[x][y]][inv(x)]).collect();
            conj == hs
        })
        .collect()
}

/// `x^k` by repeated multiplication.
pub fn naive_power(g: &FiniteGroup, x: usize, k: usize) -> usize {
    let t = g.table_rows();
    (0..k).fold(g.identity().index(), |acc, _| t[acc][x])
}

/// Multiplication table of `G/N` on cosets `xN`, cosets listed by smallest member.
pub fn brute_quotient_table(g: &FiniteGroup, n: &[usize]) -> Vec<Vec<usize>> {
    let t = g.table_rows();
    let mut cosets: Vec<BTreeSet<usize>> = Vec::new();
    for row in &t {
        let c: BTreeSet<usize> = n.iter().map(|&y| row[y]).collect();
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    let which = |z: usize| cosets.iter().position(|c| c.contains(&z)).unwrap();
    cosets
        .iter()
        .map(|a| {
            cosets
                .iter()
                .map(|b| which(t[*a.iter().next().unwrap()][*b.iter().next().unwrap()]))
                .collect()
        })
        .collect()
}
