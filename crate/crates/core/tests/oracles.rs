mod common;

use common::*;
use nilcheck::*;

fn named(spec: &str) -> FiniteGroup {
    parse_group_spec(spec, &Limits::default()).unwrap()
}

#[test]
fn s3_lattice_matches_power_set() {
    let g = symmetric(3).unwrap();
    let oracle = power_set_subgroups(&g);
    let mut orders: Vec<usize> = oracle.iter().map(|m| m.count_ones() as usize).collect();
    orders.sort();
    assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    assert_eq!(lattice_masks(&all_subgroups(&g).unwrap()), oracle);
}

#[test]
fn d8_lattice_matches_power_set() {
    let g = dihedral(8).unwrap();
    let oracle = power_set_subgroups(&g);
    assert_eq!(oracle.len(), 10);
    assert_eq!(lattice_masks(&all_subgroups(&g).unwrap()), oracle);
}

#[test]
fn a4_and_s4_lattice_sizes() {
    let a4 = alternating(4).unwrap();
    assert_eq!(power_set_subgroups(&a4).len(), 10);
    assert_eq!(all_subgroups(&a4).unwrap().len(), 10);
    // S4 has 30 subgroups: 1 + 9 (order 2) + 4 (order 3) + 7 (order 4)
    // + 4 (order 6) + 3 (order 8) + 1 (order 12) + 1
    let orders: Vec<usize> = all_subgroups(&symmetric(4).unwrap()).unwrap().iter().map(|h| h.order()).collect();
    let count = |k| orders.iter().filter(|&&o| o == k).count();
    assert_eq!(
        [1, 2, 3, 4, 6, 8, 12, 24].map(count),
        [1, 9, 4, 7, 4, 3, 1, 1]
    );
}

#[test]
fn s3_quotient_by_rotations() {
    let g = symmetric(3).unwrap();
    let lattice = all_subgroups(&g).unwrap();
    let c3 = *lattice.iter().find(|h| h.order() == 3).unwrap();
    let (q, proj) = quotient(&g, &c3).unwrap();
    assert_eq!(q.order(), 2);
    assert_eq!(q.table_rows(), brute_quotient_table(&g, &c3.indices()));
    for x in g.elements() {
        assert_eq!(proj[x.index()] == q.identity(), c3.contains(x));
    }
}

#[test]
fn quotient_extremes_and_non_normal() {
    let g = dihedral(8).unwrap();
    let (q, _) = quotient(&g, &SubgroupSet::whole(&g)).unwrap();
    assert_eq!(q.order(), 1);
    let (q, proj) = quotient(&g, &SubgroupSet::trivial(&g)).unwrap();
    assert_eq!(q.order(), 8);
    assert_eq!(q.table_rows(), g.table_rows());
    assert!(proj.iter().enumerate().all(|(i, p)| p.index() == i));

    let s3 = symmetric(3).unwrap();
    let sigma = s3.elements().find(|&x| s3.elem_order(x) == 2).unwrap();
    let h = generated_subgroup(&s3, &[sigma]);
    assert!(matches!(quotient(&s3, &h), Err(GroupError::NotNormal { .. })));
}

#[test]
fn quotients_match_coset_tables_across_catalog() {
    for entry in standard_catalog().iter().filter(|e| e.group.order() <= 24) {
        let g = &entry.group;
        let lattice = all_subgroups(g).unwrap();
        for n in lattice.normal_subgroups() {
            let (q, _) = quotient(g, n).unwrap();
            assert_eq!(q.order() * n.order(), g.order());
            assert_eq!(q.table_rows(), brute_quotient_table(g, &n.indices()), "{}", entry.name);
        }
    }
}

#[test]
fn centers_and_normalizers_match_brute_force() {
    for entry in standard_catalog().iter().filter(|e| e.group.order() <= 30) {
        let g = &entry.group;
        assert_eq!(center(g).indices(), brute_center(g), "{}", entry.name);
        for h in all_subgroups(g).unwrap().iter() {
            assert_eq!(normalizer(g, h).indices(), brute_normalizer(g, &h.indices()), "{}", entry.name);
        }
    }
    assert_eq!(brute_center(&dihedral(8).unwrap()).len(), 2);
}

#[test]
fn s3_transposition_normalizer_is_itself() {
    let g = symmetric(3).unwrap();
    let sigma = g.elements().find(|&x| g.elem_order(x) == 2).unwrap();
    let h = generated_subgroup(&g, &[sigma]);
    assert_eq!(brute_normalizer(&g, &h.indices()), h.indices());
    assert!(!is_normal(&g, &h));
}

#[test]
fn q8_single_involution_by_enumeration() {
    let q8 = dicyclic(8).unwrap();
    let e = q8.identity().index();
    let involutions = (0..8).filter(|&x| x != e && naive_power(&q8, x, 2) == e).count();
    assert_eq!(involutions, 1);
}

#[test]
fn a4_sylow_only_witness_by_brute_force() {
    // a Sylow 3-subgroup has index 4 and a 3-cycle outside it satisfies x^4 = x
    let a4 = alternating(4).unwrap();
    let lattice = all_subgroups(&a4).unwrap();
    let sylow3 = lattice.sylow_subgroups(3).unwrap();
    assert_eq!(sylow3.len(), 4);
    let p = sylow3[0];
    let outside: Vec<usize> = (0..12)
        .filter(|&x| !p.indices().contains(&x) && a4.elem_order(Elem::new(x)) == 3)
        .collect();
    assert!(!outside.is_empty());
    for x in outside {
        assert_eq!(naive_power(&a4, x, 4), x);
    }
}

#[test]
fn s3_sylow_only_witness_by_brute_force() {
    let g = symmetric(3).unwrap();
    let lattice = all_subgroups(&g).unwrap();
    // Sylow 3-subgroup: index 2, squares stay inside. Sylow 2-subgroups fail.
    let p3 = lattice.sylow_subgroups(3).unwrap()[0];
    assert!((0..6).all(|x| p3.indices().contains(&naive_power(&g, x, 2))));
    let report = check_star_sylow_only(&lattice);
    let w = report.witness.unwrap();
    assert_eq!(w.subgroup.order(), 2);
    assert!(!w.subgroup.indices().contains(&naive_power(&g, w.element.index(), w.exponent)));
}

#[test]
fn d8_series_by_commutators() {
    let g = dihedral(8).unwrap();
    let t = g.table_rows();
    let e = g.identity().index();
    let inv = |a: usize| (0..8).find(|&b| t[a][b] == e).unwrap();
    let comm = |a: usize, b: usize| t[t[a][b]][t[inv(a)][inv(b)]];
    let z1: Vec<usize> = (0..8).filter(|&x| (0..8).all(|y| comm(x, y) == e)).collect();
    let z2: Vec<usize> = (0..8).filter(|&x| (0..8).all(|y| z1.contains(&comm(x, y)))).collect();
    assert_eq!(z1.len(), 2);
    assert_eq!(z2.len(), 8);
    let series = upper_central_series(&g);
    assert_eq!(series.terms.iter().map(|t| t.indices()).collect::<Vec<_>>(), vec![vec![e], z1, z2]);
}

#[test]
fn d8xc3_lattice_is_product_of_factor_lattices() {
    let d8 = dihedral(8).unwrap();
    let c3 = cyclic(3).unwrap();
    assert_eq!(power_set_subgroups(&d8).len(), 10);
    assert_eq!(power_set_subgroups(&c3).len(), 2);
    let g = named("D8xC3");
    assert_eq!(all_subgroups(&g).unwrap().len(), 20);
}

#[test]
fn q8xc9_counts() {
    // Q8 has 6 subgroups, C9 has 3
    assert_eq!(power_set_subgroups(&dicyclic(8).unwrap()).len(), 6);
    assert_eq!(power_set_subgroups(&cyclic(9).unwrap()).len(), 3);
    assert_eq!(all_subgroups(&named("Q8xC9")).unwrap().len(), 18);
}
