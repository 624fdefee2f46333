//! Concrete finite groups stored as dense multiplication tables.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::perm::{self, Permutation};
use crate::subgroups::{conjugate_subgroup, SubgroupSet};
use crate::{Limits, MAX_SUPPORTED_ORDER};

/// Index of an element within its owning group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u16);

impl Elem {
    pub fn new(index: usize) -> Self {
        debug_assert!(index < MAX_SUPPORTED_ORDER);
        Elem(index as u16)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A validated finite group. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
    elem_order: Vec<usize>,
    perms: Option<Vec<Permutation>>,
}

impl FiniteGroup {
    /// Validates a Cayley table and precomputes identity, inverses and orders.
    ///
    /// Checks run in order: shape and range, Latin square (rows then columns),
    /// identity, inverses, then every associativity triple. The first failure
    /// found is reported.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotSquare { row: 0, len: 0, expected: 1 });
        }
        if n > MAX_SUPPORTED_ORDER {
            return Err(GroupError::OrderExceedsCap { order: n, cap: MAX_SUPPORTED_ORDER });
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare { row, len: entries.len(), expected: n });
            }
            if let Some(&bad) = entries.iter().find(|&&v| v >= n) {
                return Err(GroupError::ElementOutOfRange { element: bad, order: n });
            }
        }

        for (row, entries) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            for (col, &v) in entries.iter().enumerate() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::NotLatinSquare { row, col, value: v });
                }
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for (row, entries) in table.iter().enumerate() {
                let v = entries[col];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::NotLatinSquare { row, col, value: v });
                }
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverse = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            let inv = (0..n)
                .find(|&b| row[b] == identity && table[b][a] == identity)
                .ok_or(GroupError::MissingInverse { element: a })?;
            inverse.push(Elem::new(inv));
        }

        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let flat: Vec<Elem> = table.iter().flatten().map(|&v| Elem::new(v)).collect();
        let identity = Elem::new(identity);
        let elem_order = (0..n)
            .map(|a| {
                let mut cur = Elem::new(a);
                let mut m = 1;
                while cur != identity {
                    cur = flat[cur.index() * n + a];
                    m += 1;
                }
                m
            })
            .collect();

        Ok(FiniteGroup { n, table: flat, identity, inverse, elem_order, perms: None })
    }

    /// Closes a set of permutations under composition.
    ///
    /// Elements are indexed in breadth-first discovery order starting from the
    /// identity at index 0, with generators tried in the order given.
    pub fn from_permutation_generators(
        degree: usize,
        generators: &[Permutation],
        limits: &Limits,
    ) -> Result<Self> {
        perm::check_generators(degree, generators)?;
        let cap = limits.max_order.min(MAX_SUPPORTED_ORDER);

        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            for g in generators {
                let next = elements[head].then(g);
                if !index.contains_key(&next) {
                    if elements.len() == cap {
                        return Err(GroupError::ClosureExceedsCap { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }

        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.then(b)]).collect())
            .collect();
        let mut group = FiniteGroup::from_cayley_table(&table)?;
        group.perms = Some(elements);
        Ok(group)
    }

    /// Parses the Cayley-table text format: the order on the first line, then
    /// one row of products per line. `#` starts a comment.
    pub fn from_cayley_text(text: &str) -> Result<Self> {
        FiniteGroup::from_cayley_table(&parse_cayley_text(text)?)
    }

    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.table[a * self.n + b].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).map(Elem::new)
    }

    /// Returns `Elem` for an index, or an error when out of range.
    pub fn elem(&self, index: usize) -> Result<Elem> {
        if index < self.n {
            Ok(Elem::new(index))
        } else {
            Err(GroupError::ElementOutOfRange { element: index, order: self.n })
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a.index()]
    }

    pub fn elem_order(&self, a: Elem) -> usize {
        self.elem_order[a.index()]
    }

    /// `a b a^-1 b^-1`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// `g x g^-1`
    pub fn conjugate(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(Elem::new(a), Elem::new(b)) == self.mul(Elem::new(b), Elem::new(a))))
    }

    /// The table as nested rows of indices, as accepted by `from_cayley_table`.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.table[a * self.n + b].index()).collect())
            .collect()
    }

    /// Permutation labels when the group was built by permutation closure.
    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.perms.as_deref()
    }

    /// Renders an element as its index, or in cycle notation if `as_perm` is
    /// set and permutation labels are available.
    pub fn render(&self, x: Elem, as_perm: bool) -> String {
        match (&self.perms, as_perm) {
            (Some(p), true) => p[x.index()].to_string(),
            _ => x.to_string(),
        }
    }

    pub(crate) fn set_permutations(&mut self, labels: Vec<Permutation>) {
        debug_assert_eq!(labels.len(), self.n);
        self.perms = Some(labels);
    }

    /// Builds a group directly from a product rule on `0..n`, validating it.
    pub(crate) fn from_rule(n: usize, rule: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| rule(a, b)).collect()).collect();
        FiniteGroup::from_cayley_table(&table)
    }
}

/// `x^k` by repeated squaring. Negative exponents use the inverse.
pub fn power(g: &FiniteGroup, x: Elem, k: i64) -> Elem {
    let mut base = if k < 0 { g.inv(x) } else { x };
    let mut e = k.unsigned_abs();
    let mut acc = g.identity();
    while e > 0 {
        if e & 1 == 1 {
            acc = g.mul(acc, base);
        }
        base = g.mul(base, base);
        e >>= 1;
    }
    acc
}

/// Builds `G/N` and the projection `G -> G/N`.
///
/// Cosets are indexed in increasing order of their smallest member.
pub fn quotient(g: &FiniteGroup, normal: &SubgroupSet) -> Result<(FiniteGroup, Vec<Elem>)> {
    for x in g.elements() {
        if conjugate_subgroup(g, normal, x) != *normal {
            return Err(GroupError::NotNormal { by: x.index() });
        }
    }
    let mut projection: Vec<Option<usize>> = vec![None; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if projection[x.index()].is_some() {
            continue;
        }
        let id = reps.len();
        for n in normal.iter() {
            projection[g.mul(x, n).index()] = Some(id);
        }
        reps.push(x);
    }
    let projection: Vec<usize> = projection.into_iter().map(|p| p.expect("cosets cover G")).collect();
    let q = FiniteGroup::from_rule(reps.len(), |a, b| projection[g.mul(reps[a], reps[b]).index()])?;
    Ok((q, projection.into_iter().map(Elem::new).collect()))
}

/// Parses the Cayley-table text format into rows without validating axioms.
pub fn parse_cayley_text(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_line, header) = lines.next().ok_or(GroupError::MalformedTable {
        line: 1,
        message: "missing order line".into(),
    })?;
    let n: usize = header.parse().map_err(|_| GroupError::MalformedTable {
        line: first_line,
        message: format!("expected group order, found `{header}`"),
    })?;
    if n == 0 {
        return Err(GroupError::MalformedTable { line: first_line, message: "order must be positive".into() });
    }
    if n > MAX_SUPPORTED_ORDER {
        return Err(GroupError::OrderExceedsCap { order: n, cap: MAX_SUPPORTED_ORDER });
    }

    let mut rows = Vec::with_capacity(n);
    for (line, content) in lines {
        if rows.len() == n {
            return Err(GroupError::MalformedTable { line, message: format!("more than {n} rows") });
        }
        let row = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| GroupError::MalformedTable {
                    line,
                    message: format!("invalid entry `{tok}`"),
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        if row.len() != n {
            return Err(GroupError::MalformedTable {
                line,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
            return Err(GroupError::MalformedTable { line, message: format!("entry {bad} is not in 0..{n}") });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(GroupError::MalformedTable {
            line: text.lines().count() + 1,
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}
