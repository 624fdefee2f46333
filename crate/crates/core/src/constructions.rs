//! Standard finite groups and the built-in catalog.

use crate::arith::is_prime;
use crate::error::{GroupError, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::Permutation;
use crate::{Limits, MAX_SUPPORTED_ORDER};

fn unsupported(family: &str, message: impl Into<String>) -> GroupError {
    GroupError::UnsupportedParameter { family: family.into(), message: message.into() }
}

fn cycle(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

/// Cyclic group of order `n`, generated by an `n`-cycle. Element `i` is `r^i`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(unsupported("cyclic", "order must be at least 1"));
    }
    if n > MAX_SUPPORTED_ORDER {
        return Err(unsupported("cyclic", format!("order {n} exceeds {MAX_SUPPORTED_ORDER}")));
    }
    let gens: Vec<Permutation> = if n == 1 {
        vec![]
    } else {
        vec![cycle(n, &(0..n).collect::<Vec<_>>())]
    };
    FiniteGroup::from_permutation_generators(n, &gens, &Limits::default())
}

/// Dihedral group with `order` elements (symmetries of a regular `order/2`-gon).
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(unsupported("dihedral", format!("order must be even and at least 4, got {order}")));
    }
    let m = order / 2;
    if m == 2 {
        // the 2-gon case is the Klein four-group
        let gens = [cycle(4, &[0, 1]), cycle(4, &[2, 3])];
        return FiniteGroup::from_permutation_generators(4, &gens, &Limits::default());
    }
    let rotation = cycle(m, &(0..m).collect::<Vec<_>>());
    let reflection = Permutation::from_images((0..m).map(|i| (m - i) % m).collect()).expect("bijection");
    FiniteGroup::from_permutation_generators(m, &[rotation, reflection], &Limits::default())
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(unsupported("symmetric", format!("degree must be in 1..=6, got {n}")));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[0, 1]));
    }
    if n >= 3 {
        gens.push(cycle(n, &(0..n).collect::<Vec<_>>()));
    }
    FiniteGroup::from_permutation_generators(n, &gens, &Limits::default())
}

/// Alternating group, generated by the 3-cycles `(i i+1 i+2)`.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(unsupported("alternating", format!("degree must be in 1..=6, got {n}")));
    }
    let gens: Vec<Permutation> = (0..n.saturating_sub(2)).map(|i| cycle(n, &[i, i + 1, i + 2])).collect();
    FiniteGroup::from_permutation_generators(n, &gens, &Limits::default())
}

/// Dicyclic group of the given order `4k`: `<a, x | a^2k = 1, x^2 = a^k, x a x^-1 = a^-1>`.
///
/// Element `a^i x^j` has index `j * 2k + i`. `dicyclic(8)` is the quaternion group.
pub fn dicyclic(order: usize) -> Result<FiniteGroup> {
    if order < 8 || !order.is_multiple_of(4) {
        return Err(unsupported("dicyclic", format!("order must be a multiple of 4 and at least 8, got {order}")));
    }
    if order > MAX_SUPPORTED_ORDER {
        return Err(unsupported("dicyclic", format!("order {order} exceeds {MAX_SUPPORTED_ORDER}")));
    }
    let two_k = order / 2;
    let k = order / 4;
    FiniteGroup::from_rule(order, |lhs, rhs| {
        let (i, j) = (lhs % two_k, lhs / two_k);
        let (c, d) = (rhs % two_k, rhs / two_k);
        match (j, d) {
            (0, _) => d * two_k + (i + c) % two_k,
            // x a^c = a^-c x
            (_, 0) => two_k + (i + two_k - c) % two_k,
            // a^i x a^c x = a^(i-c) x^2 = a^(i-c+k)
            _ => (i + two_k - c + k) % two_k,
        }
    })
}

/// Upper unitriangular 3x3 matrices over `Z/p`, order `p^3`.
///
/// The matrix with entries `a` (1,2), `b` (2,3), `c` (1,3) has index `a p^2 + b p + c`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(unsupported("heisenberg", format!("{p} is not prime")));
    }
    let order = p * p * p;
    if order > MAX_SUPPORTED_ORDER {
        return Err(unsupported("heisenberg", format!("order {order} exceeds {MAX_SUPPORTED_ORDER}")));
    }
    let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
    FiniteGroup::from_rule(order, |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p
    })
}

/// External direct product with its canonical embeddings and projections.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    pub embed_left: Vec<Elem>,
    pub embed_right: Vec<Elem>,
    pub project_left: Vec<Elem>,
    pub project_right: Vec<Elem>,
}

/// `A x B` with `(a, b)` stored at index `a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, limits: &Limits) -> Result<DirectProduct> {
    let (na, nb) = (a.order(), b.order());
    let cap = limits.max_order.min(MAX_SUPPORTED_ORDER);
    if na * nb > cap {
        return Err(GroupError::ClosureExceedsCap { cap });
    }
    let mut group = FiniteGroup::from_rule(na * nb, |x, y| {
        let left = a.mul(Elem::new(x / nb), Elem::new(y / nb)).index();
        let right = b.mul(Elem::new(x % nb), Elem::new(y % nb)).index();
        left * nb + right
    })?;
    if let (Some(pa), Some(pb)) = (a.permutations(), b.permutations()) {
        let da = pa.first().map_or(0, Permutation::degree);
        let labels = (0..na * nb)
            .map(|x| {
                let mut images: Vec<usize> = pa[x / nb].images().to_vec();
                images.extend(pb[x % nb].images().iter().map(|&i| i + da));
                Permutation::from_images(images).expect("disjoint union of bijections")
            })
            .collect();
        group.set_permutations(labels);
    }
    Ok(DirectProduct {
        embed_left: (0..na).map(|x| Elem::new(x * nb + b.identity().index())).collect(),
        embed_right: (0..nb).map(|y| Elem::new(a.identity().index() * nb + y)).collect(),
        project_left: (0..na * nb).map(|x| Elem::new(x / nb)).collect(),
        project_right: (0..na * nb).map(|x| Elem::new(x % nb)).collect(),
        group,
    })
}

/// Builds a group from the spec mini-language: `C12` (or `Z12`), `D8`, `S4`,
/// `A4`, `Q8`, `Dic12`, `H3`, products joined by `x` such as `D8xC3`, or
/// `@path` to read a Cayley-table file.
pub fn parse_group_spec(spec: &str, limits: &Limits) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let group = if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| GroupError::Io { path: path.to_string(), message: e.to_string() })?;
        FiniteGroup::from_cayley_text(&text)?
    } else {
        let mut acc: Option<FiniteGroup> = None;
        for token in spec.split('x') {
            let factor = parse_factor(token)?;
            acc = Some(match acc {
                None => factor,
                Some(prev) => direct_product(&prev, &factor, limits)?.group,
            });
        }
        acc.expect("split yields at least one token")
    };
    let cap = limits.max_order.min(MAX_SUPPORTED_ORDER);
    if group.order() > cap {
        return Err(GroupError::OrderExceedsCap { order: group.order(), cap });
    }
    Ok(group)
}

fn parse_factor(token: &str) -> Result<FiniteGroup> {
    let bad = |message: &str| GroupError::InvalidSpec { token: token.to_string(), message: message.to_string() };
    let split = token.find(|c: char| c.is_ascii_digit()).ok_or_else(|| bad("expected a family name followed by a number"))?;
    let (family, digits) = token.split_at(split);
    let n: usize = digits.parse().map_err(|_| bad("expected a number after the family name"))?;
    match family {
        "C" | "Z" => cyclic(n),
        "D" => dihedral(n),
        "S" => symmetric(n),
        "A" => alternating(n),
        "Q" if n >= 8 && n.is_power_of_two() => dicyclic(n),
        "Q" => Err(bad("quaternion order must be a power of two, at least 8")),
        "Dic" => dicyclic(n),
        "H" => heisenberg(n),
        _ => Err(bad("unknown family (expected C, Z, D, S, A, Q, Dic or H)")),
    }
}

/// A named catalog group with its expected nilpotence from the classification.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
    pub expected_nilpotent: Option<bool>,
}

// Nilpotent: p-groups and products of p-groups of coprime orders.
const NILPOTENT: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15", "C16",
    "C2xC4", "C2xC2xC2", "D8", "D16", "Q8", "H3", "D8xC3", "Q8xC3", "D8xC5", "Q8xC9",
];

// Each has a non-normal Sylow subgroup. Dic12 = C3 : C4 has three Sylow 2-subgroups.
const NOT_NILPOTENT: &[&str] = &["S3", "D10", "D12", "Dic12", "A4", "S4", "S3xC5", "S3xC8"];

/// The fixed test bed: nilpotent groups first, then non-nilpotent ones.
pub fn standard_catalog() -> Vec<CatalogEntry> {
    let limits = Limits::default();
    let build = |name: &&str, expected: bool| CatalogEntry {
        name: name.to_string(),
        group: parse_group_spec(name, &limits).expect("catalog spec is valid"),
        expected_nilpotent: Some(expected),
    };
    NILPOTENT
        .iter()
        .map(|n| build(n, true))
        .chain(NOT_NILPOTENT.iter().map(|n| build(n, false)))
        .collect()
}
