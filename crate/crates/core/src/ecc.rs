//! Exact minimum edge clique cover.
//!
//! `theta_1(G) <= d` holds exactly when `d` cliques of `G` cover every edge,
//! so this count is an independent oracle for the `p = 1` solver path. It is
//! computed by branch and bound over maximal cliques, which is fine at the
//! enforced cap.

use crate::clique::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::Graph;

const ECC_MAX_VERTICES: usize = 10;

/// Minimum number of cliques covering all edges (0 for edgeless graphs).
pub fn min_edge_clique_cover(g: &Graph) -> Result<usize> {
    if g.n() > ECC_MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n: g.n(),
            max: ECC_MAX_VERTICES,
        });
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Ok(0);
    }
    let mut edge_index = std::collections::HashMap::new();
    for (i, &e) in edges.iter().enumerate() {
        edge_index.insert(e, i);
    }
    // every edge lies in some maximal clique, so covers by maximal cliques
    // suffice for the minimum
    let cliques = maximal_cliques(g);
    let clique_masks: Vec<u64> = cliques
        .iter()
        .map(|c| {
            let mut mask = 0u64;
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    mask |= 1u64 << edge_index[&(u, v)];
                }
            }
            mask
        })
        .collect();
    let full: u64 = if edges.len() == 64 {
        u64::MAX
    } else {
        (1u64 << edges.len()) - 1
    };

    // greedy bound: repeatedly take the clique covering most uncovered edges
    let mut covered = 0u64;
    let mut upper = 0usize;
    while covered != full {
        let best = clique_masks
            .iter()
            .max_by_key(|&&m| (m & !covered).count_ones())
            .expect("at least one clique");
        covered |= best;
        upper += 1;
    }

    let mut best = upper;
    branch(&clique_masks, full, 0, 0, &mut best);
    Ok(best)
}

fn branch(clique_masks: &[u64], full: u64, covered: u64, used: usize, best: &mut usize) {
    if covered == full {
        *best = (*best).min(used);
        return;
    }
    if used + 1 >= *best {
        return;
    }
    // branch on the uncovered edge with the fewest covering cliques
    let uncovered = full & !covered;
    let edge_bit = (0..64)
        .filter(|&i| uncovered >> i & 1 == 1)
        .min_by_key(|&i| {
            clique_masks
                .iter()
                .filter(|&&m| m >> i & 1 == 1)
                .count()
        })
        .expect("uncovered edge exists");
    for &m in clique_masks.iter().filter(|&&m| m >> edge_bit & 1 == 1) {
        branch(clique_masks, full, covered | m, used + 1, best);
    }
}
