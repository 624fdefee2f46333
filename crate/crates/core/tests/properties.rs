mod common;

use std::sync::OnceLock;

use nilcheck::arith::{lcm, p_part, prime_divisors};
use nilcheck::nilpotence::criteria_from_lattice;
use nilcheck::*;
use proptest::prelude::*;

fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(standard_catalog)
}

fn group_index() -> impl Strategy<Value = usize> {
    0..catalog().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn power_is_additive(gi in group_index(), xi in 0usize..256, a in -300i64..300, b in -300i64..300) {
        let g = &catalog()[gi].group;
        let x = Elem::new(xi % g.order());
        prop_assert_eq!(power(g, x, a + b), g.mul(power(g, x, a), power(g, x, b)));
    }

    #[test]
    fn power_matches_repeated_product(gi in group_index(), xi in 0usize..256, k in 0usize..100) {
        let g = &catalog()[gi].group;
        let x = xi % g.order();
        prop_assert_eq!(power(g, Elem::new(x), k as i64).index(), common::naive_power(g, x, k));
    }

    #[test]
    fn table_round_trips(gi in group_index()) {
        let g = &catalog()[gi].group;
        let rebuilt = FiniteGroup::from_cayley_table(&g.table_rows()).unwrap();
        prop_assert_eq!(rebuilt.table_rows(), g.table_rows());
        prop_assert_eq!(FiniteGroup::from_cayley_text(&g.to_cayley_text()).unwrap().table_rows(), g.table_rows());
    }

    #[test]
    fn random_generators_close_to_valid_groups(
        degree in 1usize..6,
        seeds in proptest::collection::vec(proptest::collection::vec(0usize..1000, 6), 0..3),
    ) {
        // Fisher-Yates driven by the seed values
        let gens: Vec<Permutation> = seeds
            .iter()
            .map(|s| {
                let mut images: Vec<usize> = (0..degree).collect();
                for i in (1..degree).rev() {
                    images.swap(i, s[i] % (i + 1));
                }
                Permutation::from_images(images).unwrap()
            })
            .collect();
        let g = FiniteGroup::from_permutation_generators(degree, &gens, &Limits::default()).unwrap();
        prop_assert_eq!(g.identity().index(), 0);
        prop_assert_eq!(120 % g.order(), 0);
        for x in g.elements() {
            prop_assert_eq!(g.order() % g.elem_order(x), 0);
        }
    }
}

proptest! {
    // products reach order 256, where table validation dominates
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_orders_are_lcms(ai in group_index(), bi in group_index(), xi in 0usize..256) {
        let (a, b) = (&catalog()[ai].group, &catalog()[bi].group);
        prop_assume!(a.order() * b.order() <= MAX_SUPPORTED_ORDER);
        let p = direct_product(a, b, &Limits::default()).unwrap();
        prop_assert_eq!(p.group.order(), a.order() * b.order());
        let x = Elem::new(xi % p.group.order());
        let (l, r) = (p.project_left[x.index()], p.project_right[x.index()]);
        prop_assert_eq!(p.group.elem_order(x), lcm(a.elem_order(l), b.elem_order(r)));
        prop_assert_eq!(p.project_left[p.embed_left[l.index()].index()], l);
        prop_assert_eq!(p.project_right[p.embed_right[r.index()].index()], r);
    }
}

#[test]
fn element_orders_divide_group_order() {
    for e in catalog() {
        for x in e.group.elements() {
            assert_eq!(e.group.order() % e.group.elem_order(x), 0, "{}", e.name);
        }
    }
}

#[test]
fn lattice_invariants() {
    for e in catalog() {
        let g = &e.group;
        let lattice = all_subgroups(g).unwrap();
        let subs = lattice.subgroups();
        assert_eq!(subs[0], SubgroupSet::trivial(g));
        assert_eq!(*subs.last().unwrap(), SubgroupSet::whole(g));
        assert!(subs.windows(2).all(|w| w[0] < w[1]), "sorted and distinct: {}", e.name);
        for h in subs {
            assert_eq!(g.order() % h.order(), 0);
            let n = normalizer(g, h);
            assert!(h.is_subgroup_of(&n));
            assert_eq!(is_normal(g, h), n.order() == g.order());

            // conjugates form one orbit of size [G : N(H)]
            let mut orbit: Vec<SubgroupSet> = g.elements().map(|x| conjugate_subgroup(g, h, x)).collect();
            assert!(orbit.iter().all(|c| c.order() == h.order() && lattice.contains(c)));
            orbit.sort();
            orbit.dedup();
            assert_eq!(orbit.len(), index(g, &n), "{}", e.name);
        }
    }
}

#[test]
fn sylow_counts() {
    for e in catalog() {
        let g = &e.group;
        let lattice = all_subgroups(g).unwrap();
        for p in prime_divisors(g.order()) {
            let sylows = lattice.sylow_subgroups(p).unwrap();
            assert!(sylows.iter().all(|s| s.order() == p_part(g.order(), p)));
            assert_eq!(sylows.len() % p, 1, "{} p={p}", e.name);
        }
    }
}

#[test]
fn series_terms_are_normal_and_increasing() {
    for e in catalog() {
        let s = upper_central_series(&e.group);
        assert_eq!(s.terms[0].order(), 1);
        for t in &s.terms {
            assert!(is_normal(&e.group, t));
        }
        assert!(s.terms.windows(2).all(|w| w[0].is_subgroup_of(&w[1]) && w[0].order() < w[1].order()));
    }
}

#[test]
fn witnesses_recheck_and_star_implies_sylow_star() {
    for e in catalog() {
        let lattice = all_subgroups(&e.group).unwrap();
        let full = check_star(&lattice);
        let sylow = check_star_sylow_only(&lattice);
        for report in [&full, &sylow] {
            assert_eq!(report.holds, report.witness.is_none());
            if let Some(w) = &report.witness {
                assert!(w.verify(&e.group));
                assert_eq!(w.exponent, index(&e.group, &w.subgroup));
            }
        }
        if full.holds {
            assert!(sylow.holds, "{}", e.name);
            assert_eq!(full.checked_subgroup_count, lattice.len());
        }
        let c = criteria_from_lattice(&lattice);
        assert_eq!(c.all_agree, c.verdicts().iter().all(|&v| v == c.verdicts()[0]));
    }
}
