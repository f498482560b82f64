//! The canonical pattern graphs whose blow-ups are exactly the graphs with
//! a representation.
//!
//! For dimension `d` and threshold `p`, the cube pattern has all `2^d`
//! vectors as vertices, adjacency "dot product >= p", clique part "norm >=
//! p" and independent part "norm < p". A graph has a representation iff it
//! is a blow-up of this pattern. The split pattern keeps only the vectors
//! of norm `d-1` (a clique of size d) and norm `d-2` (an independent set of
//! size d choose 2) at threshold `d-2`; once isolated and universal
//! vertices are excluded, every representation lands in it.

use crate::bits::BitVector;
use crate::blowup::{BlowUpPattern, Part};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::NamedGraphSpec;
use crate::rep::BinaryRepresentation;

/// Order cap for cube patterns: 2^6 = 64 vertices.
pub const CUBE_MAX_DIMENSION: usize = 6;

/// The pattern graph on all `2^d` vectors, vertex `x` being the vector with
/// mask `x`.
pub fn cube_pattern(d: usize, p: usize) -> Result<BlowUpPattern> {
    if p < 1 {
        return Err(Error::InvalidParameter("threshold p must be >= 1".into()));
    }
    if d > CUBE_MAX_DIMENSION {
        return Err(Error::InvalidParameter(format!(
            "cube pattern dimension {d} over cap {CUBE_MAX_DIMENSION}"
        )));
    }
    let n = 1usize << d;
    let mut base = Graph::empty(n)?;
    for x in 0..n as u64 {
        for y in x + 1..n as u64 {
            if (x & y).count_ones() as usize >= p {
                base.add_edge(x as usize, y as usize);
            }
        }
    }
    let part: Vec<Part> = (0..n as u64)
        .map(|x| {
            if x.count_ones() as usize >= p {
                Part::Clique
            } else {
                Part::Independent
            }
        })
        .collect();
    let sizes = vec![1usize; n];
    BlowUpPattern::new(base, part, sizes)
}

/// Clique-side and independent-side orders of the cube pattern, computable
/// without building it.
pub fn cube_class_sizes(d: usize, p: usize) -> (u64, u64) {
    let total = 1u64 << d;
    let clique: u64 = (p..=d).map(|w| binomial(d, w)).sum();
    (clique, total - clique)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u64;
    for i in 0..k {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}

/// The split pattern for threshold `d-2`: a clique C of the `d` norm-(d-1)
/// vectors plus an independent set I of the `d choose 2` norm-(d-2)
/// vectors.
#[derive(Clone, Debug)]
pub struct SplitPattern {
    pub graph: Graph,
    /// Clique-side vertices (the first `d`); vertex `i` is the all-ones
    /// vector minus coordinate `i`.
    pub clique: Vec<usize>,
    /// Independent-side vertices; vertex for the pair `{i,j}` is the
    /// all-ones vector minus coordinates `i` and `j`.
    pub independent: Vec<usize>,
    vectors: Vec<BitVector>,
}

impl SplitPattern {
    pub fn d(&self) -> usize {
        self.clique.len()
    }

    /// The defining norm-based assignment; a representation of the pattern
    /// graph itself at threshold `d-2`.
    pub fn representation(&self) -> BinaryRepresentation {
        let d = self.d();
        BinaryRepresentation::new(d, d - 2, self.vectors.clone())
            .expect("vectors built with matching dimension")
    }

    /// All vertices labeled as cliques, for blow-up membership testing.
    pub fn clique_blowup(&self) -> BlowUpPattern {
        BlowUpPattern::uniform(self.graph.clone(), Part::Clique)
    }
}

pub fn split_pattern(d: usize) -> Result<SplitPattern> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!(
            "split pattern needs d >= 3, got {d}"
        )));
    }
    let pairs = d * (d - 1) / 2;
    let n = d + pairs;
    let mut vectors = Vec::with_capacity(n);
    for i in 0..d {
        vectors.push(BitVector::ones_minus(d, &[i]));
    }
    for i in 0..d {
        for j in i + 1..d {
            vectors.push(BitVector::ones_minus(d, &[i, j]));
        }
    }
    let p = d - 2;
    let mut graph = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if vectors[u].dot(&vectors[v])? >= p {
                graph.add_edge(u, v);
            }
        }
    }
    debug_assert!(graph.validate().is_ok());
    Ok(SplitPattern {
        graph,
        clique: (0..d).collect(),
        independent: (d..n).collect(),
        vectors,
    })
}

/// The star K_{1,d} with every vertex labeled as a clique bag; its blow-ups
/// are exactly the graphs with a representation at threshold `d-1`.
pub fn star_pattern(d: usize) -> Result<BlowUpPattern> {
    let star = NamedGraphSpec::Star(d).build()?;
    Ok(BlowUpPattern::uniform(star, Part::Clique))
}
