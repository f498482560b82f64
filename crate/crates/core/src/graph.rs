//! Finite simple graphs as vertex-indexed adjacency bit rows.

use crate::bitset;
use crate::error::{Error, Result};

/// Hard cap on the vertex count. Keeps rows word-packed and every search at
/// desk scale.
pub const MAX_VERTICES: usize = 512;

/// An undirected simple graph on vertices `0..n`.
///
/// Row `u` has bit `v` set iff `uv` is an edge. The adjacency is kept
/// symmetric and irreflexive, with no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let stride = bitset::words_for(n).max(1);
        Ok(Graph {
            n,
            stride,
            rows: vec![0u64; n * stride],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.stride..(u + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bitset::test_bit(self.row(u), v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        bitset::set_bit(
            &mut self.rows[u * self.stride..(u + 1) * self.stride],
            v,
        );
        bitset::set_bit(
            &mut self.rows[v * self.stride..(v + 1) * self.stride],
            u,
        );
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        bitset::clear_bit(
            &mut self.rows[u * self.stride..(u + 1) * self.stride],
            v,
        );
        bitset::clear_bit(
            &mut self.rows[v * self.stride..(v + 1) * self.stride],
            u,
        );
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        bitset::popcount(self.row(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::iter_ones(self.row(u))
    }

    #[inline]
    pub fn is_isolated(&self, u: usize) -> bool {
        self.degree(u) == 0
    }

    /// Adjacent to every other vertex. Requires at least one other vertex.
    #[inline]
    pub fn is_universal(&self, u: usize) -> bool {
        self.n >= 2 && self.degree(u) == self.n - 1
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&u| self.is_isolated(u)).collect()
    }

    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&u| self.is_universal(u)).collect()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced on `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len()).expect("induced subgraph within cap");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&verts)
    }

    /// Relabels by `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        debug_assert!(g.validate().is_ok());
        g
    }

    /// Disjoint union: vertices of `self` keep their indices, vertices of
    /// `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Upper-triangle adjacency bits in column-major order
    /// (pairs (0,1), (0,2), (1,2), (0,3), ...), packed low-bit first.
    /// Lexicographic comparison of the result is label-order comparison.
    pub fn adjacency_bits(&self) -> Vec<u64> {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        let mut bits = vec![0u64; bitset::words_for(pairs).max(1)];
        let mut k = 0;
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    bitset::set_bit(&mut bits, k);
                }
                k += 1;
            }
        }
        bits
    }

    /// Checks symmetry, irreflexivity and that no bits sit at positions
    /// `>= n`.
    pub fn validate(&self) -> Result<()> {
        let tail_mask = bitset::low_mask(self.n, self.stride);
        for u in 0..self.n {
            let row = self.row(u);
            if bitset::test_bit(row, u) {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            for (w, m) in row.iter().zip(&tail_mask) {
                if w & !m != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "row {u} has bits beyond n={}",
                        self.n
                    )));
                }
            }
            for v in 0..self.n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric at ({u},{v})"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
