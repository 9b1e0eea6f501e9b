mod common;

use copwin::game::{
    brute_force_table, cop_strategy, default_max_value, robber_strategy, simulate, Outcome,
    RobberPolicy,
};
use copwin::{CaptureTable, CaptureValue, Graph, VertexId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_oracle_agrees(g: &Graph) {
    let t = CaptureTable::compute(g).unwrap();
    let bf = brute_force_table(g, default_max_value(g)).unwrap();
    for u in g.vertices() {
        for v in g.vertices() {
            assert_eq!(bf[u.0][v.0], t.eta(u, v), "pair ({u}, {v})");
        }
    }
}

/// All labeled graphs on `n` vertices, as edge masks over the `n(n-1)/2` pairs.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(&format!("v{i}")).unwrap();
        }
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge_ids(VertexId(a), VertexId(b)).unwrap();
            }
        }
        g
    })
}

#[test]
fn oracle_matches_on_every_small_connected_graph() {
    let mut count = 0;
    for n in 1..=5 {
        for g in all_graphs(n).filter(Graph::is_connected) {
            assert_oracle_agrees(&g);
            count += 1;
        }
    }
    // connected labeled graphs on 1..=5 vertices: 1 + 1 + 4 + 38 + 728
    assert_eq!(count, 772);
}

#[test]
fn robber_strategy_is_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut graphs: Vec<Graph> = (0..60)
        .map(|i| common::random_connected(&mut rng, 2 + i % 11, 0.3))
        .collect();
    graphs.extend(common::generator_corpus(12).into_iter().map(|(_, g)| g));
    for g in graphs {
        let t = CaptureTable::compute(&g).unwrap();
        let bf = brute_force_table(&g, default_max_value(&g)).unwrap();
        // value of the position after the robber moves to x, cop on c, cop to move
        let after = |x: VertexId, c: VertexId| {
            if x == c {
                return CaptureValue::Finite(0);
            }
            g.closed_neighborhood(c)
                .into_iter()
                .map(|y| bf[x.0][y.0])
                .min()
                .unwrap()
        };
        for u in g.vertices() {
            for v in g.vertices().filter(|&v| v != u) {
                let chosen = after(robber_strategy(&t, u, v), v);
                for x in g.closed_neighborhood(u) {
                    assert!(after(x, v) <= chosen);
                }
            }
        }
    }
}

#[test]
fn cop_follows_geodesic_on_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for i in 0..80 {
        let g = common::random_tree(&mut rng, 2 + i % 30);
        let t = CaptureTable::compute(&g).unwrap();
        for robber in g.vertices() {
            let dist = g.distances_from(robber);
            for cop in g.vertices().filter(|&c| c != robber) {
                let y = cop_strategy(&t, robber, cop);
                assert_eq!(dist[y.0].unwrap() + 1, dist[cop.0].unwrap());
            }
        }
    }
}

#[test]
fn optimal_play_lasts_exactly_eta() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for i in 0..80 {
        let g = common::random_connected(&mut rng, 1 + i % 15, 0.2);
        let t = CaptureTable::compute(&g).unwrap();
        for u in g.vertices() {
            for v in g.vertices() {
                let tr = simulate(&g, &t, u, v, 500, RobberPolicy::Optimal).unwrap();
                match t.eta(u, v) {
                    CaptureValue::Finite(e) => {
                        assert_eq!(tr.outcome, Outcome::Captured { round: e })
                    }
                    CaptureValue::Never => {
                        assert_eq!(tr.outcome, Outcome::Survived { rounds: 500 })
                    }
                }
                for seed in 0..5 {
                    let tr = simulate(&g, &t, u, v, 500, RobberPolicy::Random(seed)).unwrap();
                    if let (CaptureValue::Finite(e), Outcome::Captured { round }) =
                        (t.eta(u, v), tr.outcome)
                    {
                        assert!(round <= e);
                    } else {
                        assert!(t.eta(u, v).is_never());
                    }
                }
            }
        }
    }
}

#[test]
fn random_policy_is_reproducible() {
    let g: Graph = "spider:3,4,5"
        .parse::<copwin::GenSpec>()
        .unwrap()
        .build()
        .unwrap();
    let t = CaptureTable::compute(&g).unwrap();
    let (u, v) = (g.id("x1.3").unwrap(), g.id("x3.5").unwrap());
    let a = simulate(&g, &t, u, v, 50, RobberPolicy::Random(99)).unwrap();
    let b = simulate(&g, &t, u, v, 50, RobberPolicy::Random(99)).unwrap();
    assert_eq!(a, b);
}
