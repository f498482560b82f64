//! Induced subgraph search by backtracking with bitmask pruning.

use crate::bitset;
use crate::graph::Graph;

/// Searches for an induced copy of `h` in `g`.
///
/// Returns an injective map `phi` (indexed by vertices of `h`) with
/// `uv in E(h)` iff `phi(u)phi(v) in E(g)`, or `None` when no such map
/// exists.
pub fn induced_contains(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let nh = h.n();
    let ng = g.n();
    if nh > ng {
        return None;
    }
    if nh == 0 {
        return Some(Vec::new());
    }

    // Order pattern vertices so each one (after the first) has as many
    // already-placed neighbors as possible; among ties prefer high degree.
    let order = pattern_order(h);
    let mut pos_in_order = vec![usize::MAX; nh];
    for (i, &v) in order.iter().enumerate() {
        pos_in_order[v] = i;
    }

    let h_degs: Vec<usize> = (0..nh).map(|v| h.degree(v)).collect();
    let g_degs: Vec<usize> = (0..ng).map(|v| g.degree(v)).collect();

    let stride = g.stride();
    let full = bitset::low_mask(ng, stride);
    let mut assigned = vec![usize::MAX; nh];
    let mut used = vec![0u64; stride];

    fn rec(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        depth: usize,
        assigned: &mut [usize],
        used: &mut [u64],
        full: &[u64],
        h_degs: &[usize],
        g_degs: &[usize],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let hv = order[depth];
        // candidates: unused vertices consistent with every placed vertex
        let mut cand: Vec<u64> = full.to_vec();
        bitset::andnot_assign(&mut cand, used);
        for &hu in &order[..depth] {
            let gu = assigned[hu];
            if h.has_edge(hu, hv) {
                bitset::and_assign(&mut cand, g.row(gu));
            } else {
                bitset::andnot_assign(&mut cand, g.row(gu));
            }
        }
        let ng = g.n();
        let nh = order.len();
        for gv in bitset::iter_ones(&cand) {
            // neighbors of hv must fit among gv's neighbors, non-neighbors
            // among the rest of the host
            if g_degs[gv] < h_degs[hv] || ng - 1 - g_degs[gv] < nh - 1 - h_degs[hv] {
                continue;
            }
            assigned[hv] = gv;
            bitset::set_bit(used, gv);
            if rec(g, h, order, depth + 1, assigned, used, full, h_degs, g_degs) {
                return true;
            }
            bitset::clear_bit(used, gv);
            assigned[hv] = usize::MAX;
        }
        false
    }

    if rec(
        g,
        h,
        &order,
        0,
        &mut assigned,
        &mut used,
        &full,
        &h_degs,
        &g_degs,
    ) {
        Some(assigned)
    } else {
        None
    }
}

fn pattern_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = h.neighbors(v).filter(|&u| placed[u]).count();
                (anchored, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Checks that `phi` really is an induced embedding of `h` into `g`.
pub fn check_embedding(g: &Graph, h: &Graph, phi: &[usize]) -> bool {
    if phi.len() != h.n() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for &img in phi {
        if img >= g.n() || !seen.insert(img) {
            return false;
        }
    }
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            if h.has_edge(u, v) != g.has_edge(phi[u], phi[v]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraphSpec::*;

    #[test]
    fn cycle_contains_path() {
        let c5 = Cycle(5).build().unwrap();
        let p4 = Path(4).build().unwrap();
        let phi = induced_contains(&c5, &p4).expect("delete one cycle vertex");
        assert!(check_embedding(&c5, &p4, &phi));
    }

    #[test]
    fn clique_contains_no_four_cycle() {
        let k4 = Complete(4).build().unwrap();
        let c4 = Cycle(4).build().unwrap();
        assert!(induced_contains(&k4, &c4).is_none());
    }

    #[test]
    fn empty_pattern_always_embeds() {
        let g = Path(3).build().unwrap();
        assert_eq!(induced_contains(&g, &Graph::empty(0).unwrap()), Some(vec![]));
    }

    #[test]
    fn pattern_larger_than_host() {
        let g = Path(3).build().unwrap();
        let h = Path(4).build().unwrap();
        assert!(induced_contains(&g, &h).is_none());
    }

    #[test]
    fn independent_set_needs_nonedges() {
        let k3 = Complete(3).build().unwrap();
        let e2 = Edgeless(2).build().unwrap();
        assert!(induced_contains(&k3, &e2).is_none());
        let p3 = Path(3).build().unwrap();
        let phi = induced_contains(&p3, &e2).unwrap();
        assert!(check_embedding(&p3, &e2, &phi));
    }

    use crate::graph::Graph;
}
