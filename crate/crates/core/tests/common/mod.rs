//! Graph and word generators shared by the integration suites.
#![allow(dead_code)]

use std::collections::HashSet;

use coxfire::{families, AcyclicOrientation, CoxeterGraph, CoxeterWord, Vertex, Word};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Random labelled tree: vertex `i` hangs from a random earlier vertex, then
/// the labels are shuffled.
pub fn random_tree(n: usize, rng: &mut TestRng) -> CoxeterGraph {
    let edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    relabel(n, &edges, rng)
}

/// Random connected graph: a random tree plus each remaining pair with
/// probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut TestRng) -> CoxeterGraph {
    let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    let present: HashSet<(Vertex, Vertex)> = edges.iter().copied().collect();
    for a in 0..n {
        for b in a + 1..n {
            if !present.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    relabel(n, &edges, rng)
}

/// Arbitrary (possibly disconnected) graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut TestRng) -> CoxeterGraph {
    let edges: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    families::from_edges(n, &edges)
}

/// A cycle of length 3..=5 (with occasional chords) carrying at least one
/// limb, at most `max_n` vertices in total.
pub fn random_trunk_with_limbs(max_n: usize, rng: &mut TestRng) -> CoxeterGraph {
    let k = rng.gen_range(3..=5.min(max_n - 1));
    let n = rng.gen_range(k + 1..=max_n);
    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for a in 0..k {
        for b in a + 2..k {
            if (a, b) != (0, k - 1) && rng.gen_bool(0.3) {
                edges.push((a, b));
            }
        }
    }
    for v in k..n {
        edges.push((rng.gen_range(0..v), v));
    }
    relabel(n, &edges, rng)
}

fn relabel(n: usize, edges: &[(Vertex, Vertex)], rng: &mut TestRng) -> CoxeterGraph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<(Vertex, Vertex)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    families::from_edges(n, &edges)
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn isomorphism_classes(n: usize, connected_only: bool) -> Vec<CoxeterGraph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let pair_index = |a: Vertex, b: Vertex| -> usize {
        pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap()
    };
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut |p| perms.push(p.to_vec()));
    // image of each pair index under each permutation
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| pair_index(p[a], p[b])).collect())
        .collect();

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canonical = maps
            .iter()
            .map(|map| {
                (0..pairs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | 1 << map[i])
            })
            .min()
            .unwrap_or(mask);
        if !seen.insert(canonical) {
            continue;
        }
        let edges: Vec<(Vertex, Vertex)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = families::from_edges(n, &edges);
        if !connected_only || g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// All graphs on 1..=max_n vertices up to isomorphism.
pub fn small_graphs(max_n: usize, connected_only: bool) -> Vec<CoxeterGraph> {
    (1..=max_n)
        .flat_map(|n| isomorphism_classes(n, connected_only))
        .collect()
}

pub fn permutations(items: &mut Vec<Vertex>, k: usize, f: &mut impl FnMut(&[Vertex])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Every Coxeter word of `g`.
pub fn all_coxeter_words(g: &CoxeterGraph) -> Vec<CoxeterWord> {
    let mut out = Vec::new();
    permutations(&mut g.vertices().collect(), 0, &mut |p| {
        out.push(CoxeterWord::new(g, p.to_vec()).unwrap())
    });
    out
}

pub fn random_word(g: &CoxeterGraph, len: usize, rng: &mut TestRng) -> Word {
    Word((0..len).map(|_| rng.gen_range(0..g.num_vertices())).collect())
}

/// A uniformly chosen source at every step: a random Coxeter word for `o`.
pub fn random_linear_extension(o: &AcyclicOrientation<'_>, rng: &mut TestRng) -> CoxeterWord {
    let g = o.graph();
    let mut indegree = vec![0usize; g.num_vertices()];
    for (_, h) in o.arcs() {
        indegree[h] += 1;
    }
    let mut ready: Vec<Vertex> = g.vertices().filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::new();
    while !ready.is_empty() {
        let i = rng.gen_range(0..ready.len());
        let v = ready.swap_remove(i);
        order.push(v);
        for &(w, id) in g.neighbours(v) {
            if o.arc(id).0 == v {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
    }
    CoxeterWord::new(g, order).unwrap()
}

/// Applies `steps` random legal firings (sinks or sources).
pub fn random_walk<'g>(
    start: &AcyclicOrientation<'g>,
    steps: usize,
    rng: &mut TestRng,
) -> AcyclicOrientation<'g> {
    let mut o = start.clone();
    for _ in 0..steps {
        let sinks = o.sinks();
        let sources = o.sources();
        o = if rng.gen_bool(0.5) {
            o.fire_sink(*sinks.choose(rng).unwrap()).unwrap()
        } else {
            o.fire_source(*sources.choose(rng).unwrap()).unwrap()
        };
    }
    o
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
