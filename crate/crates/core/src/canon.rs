//! Canonical labeling by equitable refinement and individualization.
//!
//! The certificate of a graph is the lexicographically least adjacency bit
//! string over all relabelings reachable in the refinement search tree.
//! Because that minimum is itself the adjacency string of an actual
//! relabeling, certificate equality characterizes isomorphism exactly; the
//! refinement and the automorphism-based pruning only cut the search down.

use crate::bitset;
use crate::graph::Graph;
use crate::graph6::emit_graph6;

/// Canonical form of a graph plus the relabeling that achieves it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    /// graph6 encoding of the canonically relabeled graph. Equal strings
    /// mean isomorphic graphs.
    pub canonical_graph6: String,
    /// Permutation with `relabeling[old] = new` mapping the input onto its
    /// canonical form.
    pub relabeling: Vec<usize>,
    /// Vertex orbit representatives under the automorphisms discovered
    /// during the search. May be finer than the true orbit partition, never
    /// coarser.
    pub orbits: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> IsoCertificate {
    let n = g.n();
    if n == 0 {
        return IsoCertificate {
            canonical_graph6: "?".into(),
            relabeling: Vec::new(),
            orbits: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        n,
        best_bits: None,
        best_perm: vec![0; n],
        gens: Vec::new(),
    };
    let initial = refine(g, vec![(0..n).collect()]);
    let mut fixed = Vec::new();
    search.run(initial, &mut fixed);

    let canonical = g.relabel(&search.best_perm);
    let mut uf = UnionFind::new(n);
    for gen in &search.gens {
        for (u, &img) in gen.iter().enumerate() {
            uf.union(u, img);
        }
    }
    IsoCertificate {
        canonical_graph6: emit_graph6(&canonical),
        relabeling: search.best_perm,
        orbits: (0..n).map(|v| uf.find(v)).collect(),
    }
}

/// Shorthand for the canonical graph6 string.
pub fn canonical_key(g: &Graph) -> String {
    canonical_form(g).canonical_graph6
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let cert = canonical_form(g);
    g.relabel(&cert.relabeling)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && canonical_key(g) == canonical_key(h)
}

const MAX_GENERATORS: usize = 64;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_bits: Option<Vec<u64>>,
    best_perm: Vec<usize>,
    gens: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, partition: Vec<Vec<usize>>, fixed: &mut Vec<usize>) {
        if partition.iter().all(|c| c.len() == 1) {
            self.leaf(&partition);
            return;
        }
        let target = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a splittable cell");
        let members = partition[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if !tried.is_empty() && self.in_tried_orbit(v, &tried, fixed) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(partition.len() + 1);
            for (i, cell) in partition.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            fixed.push(v);
            let refined = refine(self.g, child);
            self.run(refined, fixed);
            fixed.pop();
        }
    }

    fn leaf(&mut self, partition: &[Vec<usize>]) {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in partition.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let bits = bits_under(self.g, &perm);
        match &self.best_bits {
            None => {
                self.best_bits = Some(bits);
                self.best_perm = perm;
            }
            Some(best) => match bits.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_bits = Some(bits);
                    self.best_perm = perm;
                }
                std::cmp::Ordering::Equal => self.record_automorphism(&perm),
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Two labelings with identical adjacency strings compose to an
    /// automorphism: sigma = best_perm^{-1} . perm.
    fn record_automorphism(&mut self, perm: &[usize]) {
        if self.gens.len() >= MAX_GENERATORS {
            return;
        }
        let mut inv_best = vec![0usize; self.n];
        for (old, &new) in self.best_perm.iter().enumerate() {
            inv_best[new] = old;
        }
        let sigma: Vec<usize> = (0..self.n).map(|u| inv_best[perm[u]]).collect();
        if sigma.iter().enumerate().all(|(u, &img)| u == img) {
            return;
        }
        debug_assert_eq!(self.g.relabel(&sigma), *self.g);
        if !self.gens.contains(&sigma) {
            self.gens.push(sigma);
        }
    }

    /// Does a discovered automorphism fixing every vertex of the current
    /// prefix map `v` into the already-tried set? Only such automorphisms
    /// guarantee the skipped subtree repeats an explored one.
    fn in_tried_orbit(&self, v: usize, tried: &[usize], fixed: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.n);
        for gen in &self.gens {
            if fixed.iter().all(|&f| gen[f] == f) {
                for (u, &img) in gen.iter().enumerate() {
                    uf.union(u, img);
                }
            }
        }
        tried.iter().any(|&u| uf.find(u) == uf.find(v))
    }
}

fn bits_under(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut inv = vec![0usize; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let pairs = n * (n - 1) / 2;
    let mut bits = vec![0u64; bitset::words_for(pairs).max(1)];
    let mut k = 0;
    for b in 1..n {
        for a in 0..b {
            if g.has_edge(inv[a], inv[b]) {
                bitset::set_bit(&mut bits, k);
            }
            k += 1;
        }
    }
    bits
}

/// Equitable refinement: split cells by neighbor counts into every cell
/// until stable. Sub-cells are ordered by their count signature, which keeps
/// the result independent of the input labeling.
fn refine(g: &Graph, mut partition: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    loop {
        let masks: Vec<Vec<u64>> = partition
            .iter()
            .map(|cell| {
                let mut m = vec![0u64; g.stride()];
                for &v in cell {
                    bitset::set_bit(&mut m, v);
                }
                m
            })
            .collect();
        let signature: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                masks
                    .iter()
                    .map(|m| bitset::and_popcount(g.row(v), m))
                    .collect()
            })
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(partition.len());
        let mut split = false;
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: Vec<(&Vec<usize>, Vec<usize>)> = Vec::new();
            for &v in cell {
                match groups.iter_mut().find(|(sig, _)| **sig == signature[v]) {
                    Some((_, members)) => members.push(v),
                    None => groups.push((&signature[v], vec![v])),
                }
            }
            if groups.len() > 1 {
                split = true;
                groups.sort_by(|a, b| a.0.cmp(b.0));
            }
            for (_, mut members) in groups {
                members.sort_unstable();
                next.push(members);
            }
        }
        partition = next;
        if !split {
            return partition;
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so orbit representatives are minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
