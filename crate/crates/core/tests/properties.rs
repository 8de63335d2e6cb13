mod common;

use common::{naive_independence, naive_max_matching};
use hypermatch::io::{parse_edge_list, write_edge_list};
use hypermatch::matching::{
    has_pm_3partite, max_matching, max_matching_bnb, max_matching_dp, perfect_matching_dp,
    tripartite_graph, Cell,
};
use hypermatch::Hypergraph3;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Hypergraph3> {
    (3..=max_n).prop_flat_map(|n| {
        let triple = (0..n, 0..n, 0..n).prop_filter_map("distinct", |(a, b, c)| {
            (a != b && b != c && a != c).then_some([a, b, c])
        });
        prop::collection::vec(triple, 0..40)
            .prop_map(move |ts| Hypergraph3::new(n, ts).expect("valid triples"))
    })
}

fn cells(p: usize) -> impl Strategy<Value = Vec<Cell>> {
    prop::collection::vec(any::<bool>(), p * p * p).prop_map(move |bits| {
        bits.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(c, _)| (c / (p * p), c / p % p, c % p))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn handshake(h in graph(10)) {
        prop_assert_eq!(h.degrees().iter().sum::<usize>(), 3 * h.edge_count());
    }

    #[test]
    fn degree_is_half_codegree_sum(h in graph(10)) {
        for v in 0..h.n() {
            let s: usize = (0..h.n())
                .filter(|&u| u != v)
                .map(|u| h.codegree(u, v).unwrap())
                .sum();
            prop_assert_eq!(2 * h.degree(v).unwrap(), s);
        }
    }

    #[test]
    fn sigma2_is_min_over_adjacent_pairs(h in graph(10)) {
        let d = h.degrees();
        let brute = (0..h.n())
            .flat_map(|u| (u + 1..h.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| h.are_adjacent(u, v).unwrap())
            .map(|(u, v)| d[u] + d[v])
            .min();
        prop_assert_eq!(h.sigma2(), brute);
        if let Some((s, u, v)) = h.sigma2_witness() {
            prop_assert_eq!(Some(s), brute);
            prop_assert!(h.are_adjacent(u, v).unwrap());
        }
    }

    #[test]
    fn sigma2_monotone_on_adjacent_triples(h in graph(9), e in (0usize..9, 0usize..9, 0usize..9)) {
        let (a, b, c) = (e.0 % h.n(), e.1 % h.n(), e.2 % h.n());
        prop_assume!(a != b && b != c && a != c);
        let adj = |u, v| h.are_adjacent(u, v).unwrap();
        prop_assume!(adj(a, b) && adj(b, c) && adj(a, c));
        let g = h.with_edge([a, b, c]).unwrap();
        prop_assert!(g.sigma2() >= h.sigma2());
        prop_assert!(g.sigma2() <= Hypergraph3::complete(h.n()).sigma2());
    }

    #[test]
    fn independence_matches_naive(h in graph(7)) {
        let (alpha, witness) = h.independence_number();
        prop_assert_eq!(alpha, naive_independence(&h));
        prop_assert_eq!(witness.len(), alpha);
        for e in h.edges() {
            prop_assert!(e.iter().filter(|v| witness.contains(v)).count() <= 1);
        }
    }

    #[test]
    fn subgraph_of_h2_witness(h in graph(9).prop_filter("n % 3", |h| h.n() % 3 == 0)) {
        let (inside, w) = h.is_subgraph_of_h2().unwrap();
        prop_assert_eq!(inside, naive_independence(&h) > h.n() / 3);
        if inside {
            prop_assert_eq!(w.len(), h.n() / 3 + 1);
            for e in h.edges() {
                prop_assert!(e.iter().filter(|v| w.contains(v)).count() <= 1);
            }
        }
    }

    #[test]
    fn solvers_agree_with_naive(h in graph(10)) {
        let nu = naive_max_matching(&h);
        prop_assert_eq!(max_matching(&h).size, nu);
        prop_assert_eq!(max_matching_dp(&h).len(), nu);
        prop_assert_eq!(max_matching_bnb(&h, None).0.len(), nu);
        if h.n() % 3 == 0 {
            prop_assert_eq!(perfect_matching_dp(&h).is_some(), 3 * nu == h.n());
        }
    }

    #[test]
    fn matching_number_is_monotone(h in graph(9), e in (0usize..9, 0usize..9, 0usize..9)) {
        let (a, b, c) = (e.0 % h.n(), e.1 % h.n(), e.2 % h.n());
        prop_assume!(a != b && b != c && a != c);
        let g = h.with_edge([a, b, c]).unwrap();
        let (x, y) = (max_matching(&h).size, max_matching(&g).size);
        prop_assert!(x <= y && y <= x + 1);
    }

    #[test]
    fn tripartite_pm_matches_flattened(c in (1usize..=3).prop_flat_map(|p| (Just(p), cells(p)))) {
        let (p, cells) = c;
        let flat = tripartite_graph(&cells, p).unwrap();
        prop_assert_eq!(
            has_pm_3partite(&cells, p).unwrap(),
            perfect_matching_dp(&flat).is_some()
        );
    }

    #[test]
    fn edge_list_round_trip(h in graph(12)) {
        let back = parse_edge_list(&write_edge_list(&h)).unwrap().graph;
        prop_assert_eq!(back, h);
    }
}
