use hypermatch::constructions::{
    f1, f2, h12, h12_block_degrees, h12_block_sizes, h12_edge_count, h12_sigma2_formula, h_ell,
    sigma2_formula_h_ell, sigma2_h2_expanded, Rational,
};
use hypermatch::matching::max_matching;

fn exact(r: Rational) -> i64 {
    assert!(r.is_integer(), "{r} is not an integer");
    r.to_integer()
}

#[test]
fn h_ell_sigma2_matches_closed_forms() {
    for n in 9..=24 {
        for s in 2..=n / 3 {
            for ell in 1..=3 {
                let g = h_ell(n, s, ell).unwrap().graph;
                let want = sigma2_formula_h_ell(n, s, ell).unwrap();
                assert_eq!(g.sigma2(), Some(want as usize), "H^{ell}_{{{n},{s}}}");
            }
            assert_eq!(
                sigma2_h2_expanded(n, s),
                sigma2_formula_h_ell(n, s, 2).unwrap()
            );
        }
    }
}

#[test]
fn h_ell_matching_number() {
    for n in 9..=30 {
        for s in 1..=n / 3 {
            for ell in 1..=3 {
                if s * ell > n + 1 {
                    continue;
                }
                let g = h_ell(n, s, ell).unwrap().graph;
                assert_eq!(max_matching(&g).size, s - 1, "H^{ell}_{{{n},{s}}}");
            }
        }
    }
}

#[test]
fn h12_on_the_line_is_min_of_f1_f2() {
    for n in (9..=60).step_by(3) {
        for x in 0..n / 3 {
            let y = n / 3 - x - 1;
            let g = h12(n, x, y).unwrap().graph;
            let want = exact(Rational::from(2) * f1(n, x)).min(exact(f2(n, x)));
            assert_eq!(g.sigma2(), Some(want as usize), "n={n} x={x}");
        }
    }
}

#[test]
fn h12_degrees_sizes_and_formula() {
    for n in (9..=36).step_by(3) {
        for x in 0..n / 3 {
            for y in 0..n / 3 - x {
                let inst = h12(n, x, y).unwrap();
                let (r, s, t) = h12_block_sizes(n, x, y);
                let (dr, ds, dt) = h12_block_degrees(n, x, y).unwrap();
                let g = &inst.graph;
                assert_eq!(g.edge_count() as i64, h12_edge_count(n, x, y).unwrap());
                let degs = g.degrees();
                assert!(degs[..r].iter().all(|&d| d as i64 == dr));
                assert!(degs[r..r + s].iter().all(|&d| d as i64 == ds));
                assert!(degs[r + s..].iter().all(|&d| d as i64 == dt));
                assert_eq!(
                    g.sigma2().map(|v| v as i64),
                    h12_sigma2_formula(n, x, y).unwrap(),
                    "n={n} x={x} y={y}"
                );
                assert_eq!(inst.partition.block("T").unwrap().len, t);
            }
        }
    }
}

#[test]
fn h12_block_degree_order() {
    for n in (9..=60).step_by(3) {
        for x in 0..n / 3 {
            for y in 0..n / 3 - x {
                if x + y == 0 {
                    assert_eq!(h12(n, 0, 0).unwrap().graph.edge_count(), 0);
                    continue;
                }
                let (dr, ds, dt) = h12_block_degrees(n, x, y).unwrap();
                assert!(dr < ds && ds < dt, "n={n} x={x} y={y}");
            }
        }
    }
}

#[test]
fn h12_adjacency_structure() {
    for (n, x, y) in [(15, 3, 1), (15, 0, 0), (21, 2, 3), (18, 5, 0), (12, 1, 0)] {
        let g = h12(n, x, y).unwrap().graph;
        let (r, s, t) = h12_block_sizes(n, x, y);
        let adj = |u, v| g.are_adjacent(u, v).unwrap();
        for u in 0..r {
            for v in r..r + s {
                assert!(!adj(u, v));
            }
        }
        if t >= 1 {
            for u in r..r + s {
                for v in u + 1..r + s {
                    assert!(adj(u, v));
                }
            }
        }
        if t >= 3 {
            for u in r + s..n {
                for v in u + 1..n {
                    assert!(adj(u, v));
                }
            }
        }
    }
}
