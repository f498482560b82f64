//! Brute-force oracles shared by the integration tests. These deliberately
//! avoid the library's canonical-form and backtracking machinery so they
//! can serve as independent cross-checks.

use pintersect_core::graph::Graph;

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in all_permutations(n - 1) {
        for pos in 0..n {
            let mut perm = rest.clone();
            perm.insert(pos, n - 1);
            out.push(perm);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_brute(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    'perm: for perm in all_permutations(n) {
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) != h.has_edge(perm[u], perm[v]) {
                    continue 'perm;
                }
            }
        }
        return true;
    }
    false
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for v in start..n {
            acc.push(v);
            rec(n, k, v + 1, acc, out);
            acc.pop();
        }
    }
    rec(n, k, 0, &mut acc, &mut out);
    out
}

/// Induced-subgraph containment by checking every vertex subset and every
/// bijection onto it.
pub fn induced_contains_brute(g: &Graph, h: &Graph) -> bool {
    if h.n() > g.n() {
        return false;
    }
    let k = h.n();
    for subset in subsets_of_size(g.n(), k) {
        'perm: for perm in all_permutations(k) {
            for u in 0..k {
                for v in u + 1..k {
                    if h.has_edge(u, v) != g.has_edge(subset[perm[u]], subset[perm[v]]) {
                        continue 'perm;
                    }
                }
            }
            return true;
        }
    }
    false
}

/// All 2^(n choose 2) labeled graphs on n vertices.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Number of isomorphism classes among all labeled graphs on n vertices,
/// derived purely from the brute-force isomorphism test.
pub fn count_classes_brute(n: usize) -> usize {
    let mut representatives: Vec<Graph> = Vec::new();
    for g in all_labeled_graphs(n) {
        if !representatives.iter().any(|r| isomorphic_brute(r, &g)) {
            representatives.push(g);
        }
    }
    representatives.len()
}

/// A deterministic pseudo-random permutation (splitmix-style), independent
/// of any RNG crate.
pub fn scrambled_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
    for i in (1..n).rev() {
        state ^= state >> 30;
        state = state.wrapping_mul(0xbf58476d1ce4e5b9);
        state ^= state >> 27;
        let j = (state % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}
