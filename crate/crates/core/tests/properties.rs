mod common;

use proptest::prelude::*;

use common::{colorings, Plain};
use wildnum::bounds::{
    ceiling_lower_bound, component_lower_bound, component_upper_bound, dip_lower_bound, dip_number_set, dip_numbers,
    dip_numbers_with,
};
use wildnum::families::{amalgamate, deduce, generate, wild_cycle, DeductionKind, FamilySpec};
use wildnum::sat::{
    assignment_to_wild_set, build_gadget, random_formula, verify_gadget, wild_set_to_assignment, CnfFormula,
};
use wildnum::{
    greedy_wild_set, parse_graph, serialize_graph, wild_brute, wild_exact, wild_exact_with, EdgeColoredGraph,
    ExactOptions, WildSet,
};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn graph_strategy(max_n: usize, max_m: usize, max_colors: usize) -> impl Strategy<Value = EdgeColoredGraph> {
    (2..=max_n, any::<u64>(), any::<bool>(), 0..=max_m, 1..=max_colors).prop_filter_map(
        "parameters out of range",
        move |(n, seed, simple, extra, colors)| {
            let m = (n - 1 + extra).min(max_m.max(n - 1));
            let simple = simple && m <= n * (n - 1) / 2;
            if colors > m {
                return None;
            }
            generate(&FamilySpec::Random { n, m, colors, seed, simple }).ok()
        },
    )
}

fn small_graph() -> impl Strategy<Value = EdgeColoredGraph> {
    graph_strategy(7, 12, 4)
}

fn subset(g: &EdgeColoredGraph, bits: u64) -> WildSet {
    (0..g.m()).filter(|e| bits >> e & 1 == 1).collect()
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn one_more_wild_edge_merges_at_most_once(g in small_graph(), bits in any::<u64>(), extra in any::<usize>()) {
        let w = subset(&g, bits);
        let mut bigger = w.clone();
        bigger.insert(extra % g.m());
        for (a, b) in g.kappas_with(&w).iter().zip(g.kappas_with(&bigger)) {
            prop_assert!(*a == b || *a == b + 1);
        }
    }

    #[test]
    fn an_edge_never_helps_its_own_color(g in small_graph()) {
        for (id, e) in g.edges().iter().enumerate() {
            prop_assert!(!g.helps(id, e.color).unwrap());
        }
    }

    #[test]
    fn contraction_agrees_with_color_connectivity(g in small_graph(), bits in any::<u64>()) {
        let w = subset(&g, bits);
        let q = g.contract(&w);
        let quotient_connected = q.graph.kappas().iter().all(|&k| k == 1);
        prop_assert_eq!(quotient_connected, g.is_color_connected(&w));
        prop_assert_eq!(q.graph.m() + q.dropped.len(), g.m());
        for (qe, &orig) in q.origin.iter().enumerate() {
            let (a, b) = (q.graph.edges()[qe], g.edges()[orig]);
            prop_assert_eq!((q.class_of[b.u], q.class_of[b.v]), (a.u, a.v));
        }
    }

    #[test]
    fn blocks_partition_edges(g in small_graph()) {
        let blocks = g.blocks();
        let mut seen = vec![0; g.m()];
        for b in &blocks {
            b.edges.iter().for_each(|&e| seen[e] += 1);
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        let total: usize = blocks.iter().map(|b| b.vertices.len() - 1).sum();
        prop_assert_eq!(total, g.n() - 1);
    }

    #[test]
    fn bridges_are_in_every_color_connecting_set(g in graph_strategy(7, 10, 4)) {
        prop_assume!(g.colors() >= 2 && g.is_surjective());
        let bridges = g.bridges();
        let p = Plain::of(&g);
        for mask in 0u64..1 << g.m() {
            if p.color_connected(mask) {
                prop_assert!(bridges.iter().all(|&e| mask >> e & 1 == 1));
            }
        }
        let r = wild_exact(&g);
        prop_assert!(bridges.iter().all(|&e| r.witness.contains(e)));
    }

    #[test]
    fn dip_facts(g in small_graph(), bits in any::<u64>()) {
        let dips = dip_numbers(&g);
        let w = subset(&g, bits);
        let sum: usize = w.iter().map(|e| dips[e]).sum();
        prop_assert!(dip_number_set(&g, &w) <= sum);
        prop_assert!(dips.iter().all(|&d| d < g.colors()));
        prop_assert!(dip_lower_bound(&g) >= ceiling_lower_bound(&g));
        prop_assert!(component_lower_bound(&g) <= component_upper_bound(&g));
        if g.is_color_connected(&w) {
            prop_assert_eq!(dip_number_set(&g, &w), component_upper_bound(&g));
        }
        let p = Plain::of(&g);
        for (e, &d) in dips.iter().enumerate() {
            prop_assert_eq!(d, p.dip(e));
        }
    }

    #[test]
    fn bounds_sandwich_the_oracle(g in small_graph()) {
        let wild = Plain::of(&g).wild();
        let (greedy, _) = greedy_wild_set(&g);
        let lower = component_lower_bound(&g).max(ceiling_lower_bound(&g)).max(dip_lower_bound(&g));
        prop_assert!(lower <= wild);
        prop_assert!(wild <= greedy.len());
        prop_assert!(wild <= component_upper_bound(&g));
        prop_assert!(component_upper_bound(&g) <= g.n() * g.colors());
        prop_assert!(wild < g.n());
    }

    #[test]
    fn greedy_is_valid_and_deterministic(g in small_graph()) {
        let (w, trace) = greedy_wild_set(&g);
        prop_assert!(g.is_color_connected(&w));
        prop_assert_eq!(w.len(), trace.chosen.len());
        prop_assert!(trace.chosen.len() < g.n());
        for step in &trace.steps {
            prop_assert!(step.dips[step.selected] >= 1);
        }
        prop_assert_eq!(greedy_wild_set(&g).1, trace);
        if g.colors() == 2 && g.is_surjective() {
            prop_assert_eq!(w.len(), component_upper_bound(&g));
        }
    }

    #[test]
    fn potential_rows_sort_to_potentials(g in small_graph()) {
        let (_, trace) = greedy_wild_set(&g);
        for step in &trace.steps {
            for c in &step.candidates {
                let mut wild = step.wild_before.clone();
                wild.push(c.edge);
                prop_assert_eq!(&c.row, &dip_numbers_with(&g, &wild));
                prop_assert_eq!(c.potential.len(), g.m());
                prop_assert!(c.potential.values().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn exact_matches_oracle(g in small_graph()) {
        let oracle = Plain::of(&g).wild();
        let brute = wild_brute(&g, None).unwrap();
        let exact = wild_exact(&g);
        let bare = wild_exact_with(&g, &ExactOptions::search_only());
        let parallel = wild_exact_with(&g, &ExactOptions { threads: 3, ..ExactOptions::default() });
        for r in [&brute, &exact, &bare, &parallel] {
            prop_assert_eq!(r.wild, oracle);
            prop_assert_eq!(r.witness.len(), r.wild);
            prop_assert!(g.is_color_connected(&r.witness));
        }
        prop_assert_eq!(wildnum::decide_k_wild(&g, oracle), true);
        if oracle > 0 {
            prop_assert_eq!(wildnum::decide_k_wild(&g, oracle - 1), false);
        }
    }

    #[test]
    fn deductions_are_sound(g in small_graph(), unused in any::<bool>()) {
        let g = if unused {
            let mut palette = g.palette().to_vec();
            palette.push("spare".into());
            g.with_palette(palette).unwrap()
        } else {
            g
        };
        let wild = Plain::of(&g).wild();
        for d in deduce(&g) {
            match d.kind {
                DeductionKind::Exact => prop_assert_eq!(d.value, wild, "{}", d),
                DeductionKind::LowerBound => prop_assert!(d.value <= wild, "{}", d),
            }
        }
    }

    #[test]
    fn amalgamation_adds_over_a_common_palette(
        g in graph_strategy(4, 6, 3),
        h in graph_strategy(4, 6, 3),
        u in any::<usize>(),
        v in any::<usize>(),
    ) {
        let (u, v) = (u % g.n(), v % h.n());
        let a = amalgamate(&g, &h, u, v).unwrap();
        let full = a.palette().to_vec();
        let parts = Plain::of(&g.with_palette(full.clone()).unwrap()).wild()
            + Plain::of(&h.with_palette(full).unwrap()).wild();
        prop_assert_eq!(Plain::of(&a).wild(), parts);
        prop_assert_eq!(wild_exact(&a).wild, parts);
    }

    #[test]
    fn file_round_trip(g in graph_strategy(8, 16, 5)) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_graph(&back), text);
    }
}

proptest! {
    #![proptest_config(config(60))]

    #[test]
    fn gadgets_verify(k in 3usize..=6, l in 1usize..=6, seed in any::<u64>()) {
        let Some(f) = random_formula(k, l, seed) else { return Ok(()) };
        let gg = build_gadget(&f);
        prop_assert!(verify_gadget(&gg).is_ok());
        prop_assert_eq!(gg.graph.n(), l + 3 * k + 1);
        prop_assert_eq!(gg.graph.colors(), l + 2);
        prop_assert!(component_lower_bound(&gg.graph) >= k);
    }

    #[test]
    fn gadget_kappas_ignore_clause_order(k in 3usize..=5, l in 2usize..=5, seed in any::<u64>(), rot in 1usize..5) {
        let Some(f) = random_formula(k, l, seed) else { return Ok(()) };
        let mut clauses: Vec<_> = f.clauses().iter().map(|c| c.to_vec()).collect();
        clauses.rotate_left(rot % l);
        let g = CnfFormula::new(k, clauses).unwrap();
        let mut a = build_gadget(&f).graph.kappas();
        let mut b = build_gadget(&g).graph.kappas();
        let (ta, tb) = (a.split_off(l), b.split_off(l));
        prop_assert_eq!(ta, tb);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn satisfying_assignments_round_trip(k in 3usize..=4, l in 1usize..=4, seed in any::<u64>()) {
        let Some(f) = random_formula(k, l, seed) else { return Ok(()) };
        let gg = build_gadget(&f);
        prop_assert!(wild_exact(&gg.graph).wild >= k);
        for bits in 0u32..1 << k {
            let a: Vec<bool> = (0..k).map(|j| bits >> j & 1 == 1).collect();
            if f.satisfies(&a) {
                let w = assignment_to_wild_set(&gg, &a).unwrap();
                prop_assert!(gg.graph.is_color_connected(&w));
                prop_assert!(f.satisfies(&wild_set_to_assignment(&gg, &w).unwrap()));
            }
        }
    }
}

#[test]
fn cycle_values_do_not_depend_on_the_coloring() {
    for n in 3..=7 {
        for l in 1..=n {
            for coloring in colorings(n, l) {
                let g = generate(&FamilySpec::Cycle { colors: coloring.clone() }).unwrap();
                assert_eq!(wild_brute(&g, None).unwrap().wild, wild_cycle(n, l).unwrap(), "{coloring:?}");
            }
        }
    }
}

#[test]
fn gadgets_have_no_bridges() {
    // Observation only: report any gadget with a bridge instead of failing.
    let mut checked = 0;
    let mut with_bridges = Vec::new();
    for seed in 0..200 {
        let k = 3 + (seed as usize % 4);
        let l = 1 + (seed as usize % 6);
        let Some(f) = random_formula(k, l, seed) else { continue };
        checked += 1;
        let bridges = build_gadget(&f).graph.bridges();
        if !bridges.is_empty() {
            with_bridges.push((k, l, seed, bridges.len()));
        }
    }
    println!("gadget bridge check: {checked} gadgets, {} with bridges {:?}", with_bridges.len(), with_bridges);
}
