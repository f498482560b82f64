//! Maximal and maximum cliques at desk scale.

use crate::bitset;
use crate::graph::Graph;

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted
/// ascending, in a deterministic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let stride = g.stride();
    let mut out: Vec<Vec<usize>> = Vec::new();
    if n == 0 {
        return out;
    }
    let mut r: Vec<usize> = Vec::new();
    let p = bitset::low_mask(n, stride);
    let x = vec![0u64; stride];

    fn expand(
        g: &Graph,
        r: &mut Vec<usize>,
        p: Vec<u64>,
        x: Vec<u64>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if bitset::popcount(&p) == 0 && bitset::popcount(&x) == 0 {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.push(clique);
            return;
        }
        // pivot: vertex of P ∪ X with most neighbors in P
        let pivot = bitset::iter_ones(&p)
            .chain(bitset::iter_ones(&x))
            .max_by_key(|&u| (bitset::and_popcount(g.row(u), &p), std::cmp::Reverse(u)))
            .expect("P or X nonempty");
        let mut candidates = p.clone();
        bitset::andnot_assign(&mut candidates, g.row(pivot));
        let mut p = p;
        let mut x = x;
        for v in bitset::iter_ones(&candidates.clone()) {
            let mut np = p.clone();
            bitset::and_assign(&mut np, g.row(v));
            let mut nx = x.clone();
            bitset::and_assign(&mut nx, g.row(v));
            r.push(v);
            expand(g, r, np, nx, out);
            r.pop();
            bitset::clear_bit(&mut p, v);
            bitset::set_bit(&mut x, v);
        }
    }

    expand(g, &mut r, p, x, &mut out);
    out.sort();
    out
}

/// All maximum-cardinality cliques, sorted.
pub fn maximum_cliques(g: &Graph) -> Vec<Vec<usize>> {
    if g.n() == 0 {
        return vec![vec![]];
    }
    let all = maximal_cliques(g);
    let best = all.iter().map(|c| c.len()).max().unwrap_or(0);
    all.into_iter().filter(|c| c.len() == best).collect()
}

/// A maximum clique. When some maximum clique `X` has `deg(u) >= |X|` for
/// every `u` in `X`, one such clique is returned; ties are broken by the
/// lexicographically least sorted vertex set. Deterministic.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let candidates = maximum_cliques(g);
    if candidates.is_empty() {
        return Vec::new();
    }
    let k = candidates[0].len();
    candidates
        .iter()
        .find(|c| c.iter().all(|&u| g.degree(u) >= k))
        .cloned()
        .unwrap_or_else(|| candidates[0].clone())
}
