mod common;

use hypermatch::lemmas::{
    bipartite_class, bipartite_class_representative, verify_aharoni_howard, verify_by_id,
    verify_intersecting_bound_3n, verify_intersecting_bound_6n, verify_kpartite_nopm_bound,
    LemmaParams, LemmaVerdict, Mode, SearchMode, WitnessData, LEMMA_IDS, MAX_WITNESSES,
};
use hypermatch::matching::{bipartite_pm, tripartite_graph};
use hypermatch::LinkGraph;

type Pair = (usize, usize);

fn disjoint(e: Pair, f: Pair) -> bool {
    e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
}

fn cross_meets(g: &[Pair], h: &[Pair]) -> bool {
    g.iter().all(|&e| h.iter().all(|&f| !disjoint(e, f)))
}

fn best_three(universe: usize, graphs: &[Vec<Pair>; 3]) -> i64 {
    let mut deg = vec![0i64; universe];
    for g in graphs {
        for &(a, b) in g {
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    deg.sort_unstable_by(|a, b| b.cmp(a));
    deg.iter().take(3).sum()
}

fn check_trigraph_witnesses(v: &LemmaVerdict, all_three: bool) {
    assert!(!v.witnesses.is_empty());
    assert!(v.witnesses.len() <= MAX_WITNESSES);
    for w in &v.witnesses {
        let WitnessData::TriGraph(cfg) = &w.data else {
            panic!("unexpected witness kind");
        };
        let [g1, g2, g3] = &cfg.graphs;
        assert!(cross_meets(g1, g2) && cross_meets(g1, g3));
        if all_three {
            assert!(cross_meets(g2, g3));
        }
        assert_eq!(best_three(cfg.universe, &cfg.graphs), w.value);
        assert!(w.value <= v.bound);
        assert_eq!(Some(w.value), v.max_observed);
    }
}

fn json(v: &LemmaVerdict) -> String {
    serde_json::to_string(v).unwrap()
}

#[test]
fn exhaustive_universe_sizes() {
    let cases: [(&str, u64); 4] = [
        ("bipartite-fact", 512),
        ("kpartite-16", 1 << 20),
        ("weighted-20", 1 << 20),
        ("aharoni-howard", 256),
    ];
    for (id, size) in cases {
        let v = verify_by_id(id, LemmaParams::default(), SearchMode::Exhaustive).unwrap();
        assert_eq!(v.universe_size, size, "{id}");
        assert_eq!(v.mode, Mode::Exhaustive);
        assert!(v.holds(), "{id}");
    }
}

#[test]
fn every_id_dispatches() {
    for id in LEMMA_IDS {
        let v = verify_by_id(id, LemmaParams::default(), SearchMode::Auto { seed: 1 }).unwrap();
        assert!(v.holds(), "{id}");
        assert!(v.max_observed.unwrap() <= v.bound, "{id}");
    }
}

#[test]
fn kpartite_witnesses_have_no_perfect_matching() {
    let v = verify_kpartite_nopm_bound();
    assert_eq!(v.max_observed, Some(16));
    for w in &v.witnesses {
        let WitnessData::Cells { part_size, cells } = &w.data else {
            panic!("unexpected witness kind");
        };
        let h = tripartite_graph(cells, *part_size).unwrap();
        assert!(common::naive_max_matching(&h) < 3);
        assert_eq!(cells.len() as i64, w.value);
        assert!(cells
            .iter()
            .all(|&(i, j, k)| [i, j, k].iter().filter(|&&c| c == 2).count() <= 1));
    }
}

#[test]
fn aharoni_howard_witness_is_extremal() {
    let v = verify_aharoni_howard(2, 2, SearchMode::Exhaustive).unwrap();
    assert_eq!(v.max_observed, Some(4));
    let WitnessData::Cells { part_size, cells } = &v.witnesses[0].data else {
        panic!("unexpected witness kind");
    };
    let h = tripartite_graph(cells, *part_size).unwrap();
    assert_eq!(h.edge_count(), 4);
    assert!(common::naive_max_matching(&h) < 2);
}

#[test]
fn intersecting_witnesses_recheck() {
    let v = verify_intersecting_bound_6n(4, SearchMode::Exhaustive).unwrap();
    assert_eq!(v.max_observed, Some(18));
    check_trigraph_witnesses(&v, false);
    let mode = SearchMode::Randomized {
        samples: 20_000,
        seed: 5,
    };
    let v = verify_intersecting_bound_6n(6, mode).unwrap();
    assert!(v.holds());
    check_trigraph_witnesses(&v, false);
    let v = verify_intersecting_bound_3n(6, mode).unwrap();
    assert!(v.holds());
    check_trigraph_witnesses(&v, true);
}

#[test]
fn randomized_runs_reproduce_by_seed() {
    let mode = |seed| SearchMode::Randomized {
        samples: 10_000,
        seed,
    };
    let p = LemmaParams {
        a: Some(3),
        b: Some(3),
        ..Default::default()
    };
    let a = verify_by_id("ab-8a", p, mode(9)).unwrap();
    let b = verify_by_id("ab-8a", p, mode(9)).unwrap();
    assert_eq!(json(&a), json(&b));
    let c = verify_by_id("ab-8a", p, mode(10)).unwrap();
    assert_eq!(
        c.mode,
        Mode::Randomized {
            samples: 10_000,
            restarts: 100,
            seed: 10
        }
    );
}

#[test]
fn verdicts_are_schedule_independent() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let mode = SearchMode::Randomized {
                samples: 12_000,
                seed: 3,
            };
            (
                json(&verify_intersecting_bound_6n(5, mode).unwrap()),
                json(
                    &verify_by_id(
                        "weighted-20",
                        LemmaParams::default(),
                        SearchMode::Exhaustive,
                    )
                    .unwrap(),
                ),
            )
        })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn bipartite_classes_survive_relabelling() {
    let left = [10, 11, 12];
    let right = [20, 21, 22];
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for name in ["B_{033}", "B_{023}", "B_{113}"] {
        let rep = bipartite_class_representative(name).unwrap();
        let l0 = [0, 1, 2];
        let r0 = [3, 4, 5];
        assert!(!bipartite_pm(&rep, &l0, &r0).unwrap());
        assert_eq!(bipartite_class(&rep, &l0, &r0).as_deref(), Some(name));
        for p in &perms {
            for q in &perms {
                let map = |v: usize| if v < 3 { left[p[v]] } else { right[q[v - 3]] };
                let pairs: Vec<Pair> = rep.pairs().iter().map(|&(a, b)| (map(a), map(b))).collect();
                let universe: Vec<usize> = left.iter().chain(&right).copied().collect();
                let g = LinkGraph::new(&universe, pairs).unwrap();
                assert_eq!(bipartite_class(&g, &left, &right).as_deref(), Some(name));
                assert_eq!(bipartite_class(&g, &right, &left).as_deref(), Some(name));
            }
        }
    }
}

#[test]
fn bipartite_fact_bullets() {
    let v = verify_by_id(
        "bipartite-fact",
        LemmaParams::default(),
        SearchMode::Exhaustive,
    )
    .unwrap();
    assert!(v.holds());
    assert_eq!(v.max_observed, Some(6));
    let six: Vec<&str> = v
        .classes
        .iter()
        .filter(|c| c.edge_count == 6)
        .map(|c| c.name.as_str())
        .collect();
    let five = v.classes.iter().filter(|c| c.edge_count == 5).count();
    assert_eq!(six, ["B_{033}"]);
    assert_eq!(five, 2);
}
