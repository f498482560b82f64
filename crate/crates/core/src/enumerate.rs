//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Level n+1 is produced from level n by attaching a new vertex with every
//! possible neighborhood and keeping one canonical representative per
//! certificate. Every graph on n+1 vertices arises this way from some graph
//! on n vertices, so each level is complete.

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeMap;

/// Enumeration cap; levels grow roughly tenfold per vertex.
pub const ENUMERATION_MAX_N: usize = 10;

/// All graphs of order `n` up to isomorphism, canonically labeled, in
/// canonical-certificate order. Deterministic.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_up_to(n)?.pop().unwrap_or_default())
}

/// Levels 1..=n of the enumeration; `result[k-1]` holds the graphs of
/// order `k`.
pub fn enumerate_up_to(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "enumeration cap is {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if n == 0 {
        return Ok(levels);
    }
    levels.push(vec![Graph::empty(1)?]);
    for size in 1..n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for parent in &levels[size - 1] {
            for neighborhood in 0u64..1 << size {
                let mut child = parent.disjoint_union(&Graph::empty(1)?)?;
                for v in 0..size {
                    if neighborhood >> v & 1 == 1 {
                        child.add_edge(v, size);
                    }
                }
                let cert = canonical_form(&child);
                next.entry(cert.canonical_graph6)
                    .or_insert_with(|| child.relabel(&cert.relabeling));
            }
        }
        levels.push(next.into_values().collect());
    }
    Ok(levels)
}
