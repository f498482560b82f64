//! Blow-up patterns: replace each base vertex by a clique or an independent
//! set, joining bags completely exactly when the base vertices are adjacent.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Clique,
    Independent,
}

/// A base graph with a clique/independent label and a multiplicity for each
/// vertex. Multiplicities may be zero ("possibly empty" bags) and are
/// ignored by membership testing.
#[derive(Clone, Debug)]
pub struct BlowUpPattern {
    pub base: Graph,
    pub part: Vec<Part>,
    pub sizes: Vec<usize>,
}

impl BlowUpPattern {
    pub fn new(base: Graph, part: Vec<Part>, sizes: Vec<usize>) -> Result<Self> {
        if part.len() != base.n() || sizes.len() != base.n() {
            return Err(Error::InvalidParameter(format!(
                "pattern labels {} / sizes {} do not cover base order {}",
                part.len(),
                sizes.len(),
                base.n()
            )));
        }
        Ok(BlowUpPattern { base, part, sizes })
    }

    /// All bags size 1 with a uniform part label.
    pub fn uniform(base: Graph, part: Part) -> Self {
        let n = base.n();
        BlowUpPattern {
            base,
            part: vec![part; n],
            sizes: vec![1; n],
        }
    }

    pub fn with_sizes(&self, sizes: Vec<usize>) -> Result<Self> {
        BlowUpPattern::new(self.base.clone(), self.part.clone(), sizes)
    }

    /// Builds the blow-up. Vertex order: bags in base-vertex order.
    pub fn build(&self) -> Result<Graph> {
        let total: usize = self.sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: total,
                max: MAX_VERTICES,
            });
        }
        let mut offset = vec![0usize; self.base.n() + 1];
        for u in 0..self.base.n() {
            offset[u + 1] = offset[u] + self.sizes[u];
        }
        let mut g = Graph::empty(total)?;
        for u in 0..self.base.n() {
            if self.part[u] == Part::Clique {
                for a in offset[u]..offset[u + 1] {
                    for b in a + 1..offset[u + 1] {
                        g.add_edge(a, b);
                    }
                }
            }
            for v in u + 1..self.base.n() {
                if self.base.has_edge(u, v) {
                    for a in offset[u]..offset[u + 1] {
                        for b in offset[v]..offset[v + 1] {
                            g.add_edge(a, b);
                        }
                    }
                }
            }
        }
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Tests whether `g` arises from this pattern with some (possibly empty)
    /// bag sizes; the stored sizes are ignored.
    ///
    /// Returns an assignment `phi: V(g) -> V(base)` such that distinct `u,v`
    /// are adjacent in `g` iff they share a clique bag or their bags are
    /// adjacent in the base.
    pub fn find_assignment(&self, g: &Graph) -> Option<Vec<usize>> {
        let n = g.n();
        let nb = self.base.n();
        if n == 0 {
            return Some(Vec::new());
        }
        if nb == 0 {
            return None;
        }

        // Visit order: breadth-first from a max-degree vertex so that later
        // vertices usually have assigned neighbors constraining them.
        let order = bfs_order(g);
        let mut phi = vec![usize::MAX; n];

        fn consistent(
            pattern: &BlowUpPattern,
            g: &Graph,
            phi: &[usize],
            order: &[usize],
            depth: usize,
            b: usize,
        ) -> bool {
            let v = order[depth];
            for &u in &order[..depth] {
                let bu = phi[u];
                let needed = if bu == b {
                    pattern.part[b] == Part::Clique
                } else {
                    pattern.base.has_edge(bu, b)
                };
                if g.has_edge(u, v) != needed {
                    return false;
                }
            }
            true
        }

        fn rec(
            pattern: &BlowUpPattern,
            g: &Graph,
            order: &[usize],
            depth: usize,
            phi: &mut Vec<usize>,
        ) -> bool {
            if depth == order.len() {
                return true;
            }
            for b in 0..pattern.base.n() {
                if consistent(pattern, g, phi, order, depth, b) {
                    phi[order[depth]] = b;
                    if rec(pattern, g, order, depth + 1, phi) {
                        return true;
                    }
                    phi[order[depth]] = usize::MAX;
                }
            }
            false
        }

        if rec(self, g, &order, 0, &mut phi) {
            debug_assert!(check_assignment(self, g, &phi));
            Some(phi)
        } else {
            None
        }
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    loop {
        let start = match (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        {
            Some(v) => v,
            None => break,
        };
        seen[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

/// Validates a bag assignment against the blow-up adjacency rule.
pub fn check_assignment(pattern: &BlowUpPattern, g: &Graph, phi: &[usize]) -> bool {
    if phi.len() != g.n() {
        return false;
    }
    for u in 0..g.n() {
        if phi[u] >= pattern.base.n() {
            return false;
        }
        for v in u + 1..g.n() {
            let needed = if phi[u] == phi[v] {
                pattern.part[phi[u]] == Part::Clique
            } else {
                pattern.base.has_edge(phi[u], phi[v])
            };
            if g.has_edge(u, v) != needed {
                return false;
            }
        }
    }
    true
}
