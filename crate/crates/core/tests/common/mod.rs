#![allow(dead_code)]

use copwin::{GenSpec, Graph, Ordinal};
use rand::Rng;

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(&format!("t{i}")).unwrap();
    }
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    for &s in &seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).unwrap();
        g.add_edge(&format!("t{leaf}"), &format!("t{s}")).unwrap();
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    g.add_edge(&format!("t{}", rest[0]), &format!("t{}", rest[1]))
        .unwrap();
    g
}

/// Random connected graph: a random tree plus each other edge with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = random_tree(rng, n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(&format!("t{a}"), &format!("t{b}")).unwrap();
            }
        }
    }
    g
}

/// Every generator output with at most `max_n` vertices, from a fixed parameter sweep.
pub fn generator_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let mut specs: Vec<String> = Vec::new();
    for n in 1..=max_n {
        specs.push(format!("path:{n}"));
        specs.push(format!("complete:{n}"));
        specs.push(format!("tomega:{n}"));
        if n >= 3 {
            specs.push(format!("cycle:{n}"));
        }
    }
    for n in 1..=copwin::graph::MAX_S_INDEX {
        specs.push(format!("s:{n}"));
    }
    for n in 2..=max_n {
        specs.push(format!("polat:{n}"));
        for t in 1..=3 {
            specs.push(format!("polat:{n}:{t}"));
        }
    }
    for legs in [
        "1", "2", "1,1", "1,2", "2,2", "1,2,3", "3,3", "1,1,1,1", "2,3,4", "1,4,4", "5,5",
    ] {
        specs.push(format!("spider:{legs}"));
    }
    specs
        .into_iter()
        .filter_map(|s| {
            let g = s.parse::<GenSpec>().unwrap().build().unwrap();
            (g.vertex_count() <= max_n).then_some((s, g))
        })
        .collect()
}

/// Random ordinal below ω^ω^… with exponent nesting at most `depth`.
pub fn random_ordinal<R: Rng>(rng: &mut R, depth: u32) -> Ordinal {
    let nterms = rng.gen_range(0..=4);
    let mut pairs: Vec<(Ordinal, u64)> = (0..nterms)
        .map(|_| {
            let exp = if depth == 0 || rng.gen_bool(0.4) {
                Ordinal::finite(rng.gen_range(0..4))
            } else {
                random_ordinal(rng, depth - 1)
            };
            (exp, rng.gen_range(1..6))
        })
        .collect();
    pairs.sort_by(|a, b| b.0.cmp(&a.0));
    pairs.dedup_by(|a, b| a.0 == b.0);
    Ordinal::from_terms(pairs).unwrap()
}

pub fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}
