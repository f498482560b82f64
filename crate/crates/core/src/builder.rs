//! Constructive representation builder for the split law.
//!
//! Given a twin-reduced graph, choose a maximum clique X (preferring one in
//! which every vertex has degree at least |X|), classify the remaining
//! vertices into non-isolated Y and isolated Z, and assign:
//!
//! * the i-th clique vertex the all-ones vector minus coordinate i;
//! * a Y vertex adjacent to clique vertices i and j the all-ones vector
//!   minus coordinates i and j;
//! * the pendant neighbors of clique vertex i distinct vectors missing
//!   coordinate i and one coordinate above k;
//! * the isolated vertices distinct vectors missing two coordinates above k.
//!
//! The dispatch lowers k when the clique cannot carry the scheme: a
//! triangle with a degree-2 vertex either drops that vertex into Y (unique
//! common neighbor) or keeps k = 3 (two common neighbors); graphs with at
//! most one vertex of degree 2 or more run as a star, and edgeless graphs
//! take pair vectors only, which raises the isolated capacity to d choose 2.
//!
//! Every produced certificate is verified before it is returned; when a
//! slot runs out the builder returns the trace instead of an invalid
//! certificate, and the caller can fall back to the exact solver.

use crate::bits::BitVector;
use crate::clique::max_clique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rep::{verify_representation, BinaryRepresentation};
use crate::twins::twin_reduction;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeCase {
    /// k >= 4.
    BigClique,
    /// k = 3 with every clique vertex of degree >= 3.
    TriangleHighDegree,
    /// k = 3, a degree-2 clique vertex is the unique common neighbor of the
    /// other two; runs with k_eff = 2.
    TriangleSoloApex,
    /// k = 3, the two high vertices have a second common neighbor; runs
    /// with k_eff = 3.
    TriangleTwoApex,
    /// k = 2 with both endpoints of degree >= 2.
    PlainEdge,
    /// At most one vertex of degree >= 2 (possibly edgeless).
    StarLike,
}

impl std::fmt::Display for SchemeCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SchemeCase::BigClique => "1",
            SchemeCase::TriangleHighDegree => "2",
            SchemeCase::TriangleSoloApex => "3a",
            SchemeCase::TriangleTwoApex => "3b",
            SchemeCase::PlainEdge => "4",
            SchemeCase::StarLike => "5",
        })
    }
}

/// Why a vertex received its vector. Coordinates are 1-based, matching the
/// all-ones-minus-unit formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    CliqueVertex { index: usize },
    CommonPair { i: usize, j: usize },
    Pendant { anchor: usize, coord: usize },
    IsolatedPair { i: usize, j: usize },
}

#[derive(Clone, Debug)]
pub struct CaseTrace {
    /// The chosen maximum clique.
    pub clique: Vec<usize>,
    pub k: usize,
    /// The clique actually used by the scheme (equals `clique` except when
    /// the dispatch lowers k).
    pub scheme_clique: Vec<usize>,
    pub k_eff: usize,
    /// Non-isolated vertices outside the scheme clique.
    pub y: Vec<usize>,
    /// Isolated vertices outside the scheme clique.
    pub z: Vec<usize>,
    pub case: SchemeCase,
    /// Per-vertex slot rationale, in vertex order.
    pub slots: Vec<(usize, Slot)>,
    /// Present when no certificate could be produced.
    pub failure: Option<String>,
}

#[derive(Clone, Debug)]
pub struct BuildOutcome {
    pub representation: Option<BinaryRepresentation>,
    pub trace: CaseTrace,
}

/// Builds a representation of dimension `d` with threshold `d-2` for a
/// twin-reduced graph `h`, following the case scheme. Absence is reported
/// with the trace, never as an invalid certificate.
pub fn build_split_representation(h: &Graph, d: usize) -> Result<BuildOutcome> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!(
            "builder needs d >= 3, got {d}"
        )));
    }
    if twin_reduction(h).graph.n() != h.n() {
        return Err(Error::Precondition(
            "input graph has true twins; reduce it first".into(),
        ));
    }

    if h.n() == 0 {
        let trace = CaseTrace {
            clique: vec![],
            k: 0,
            scheme_clique: vec![],
            k_eff: 0,
            y: vec![],
            z: vec![],
            case: SchemeCase::StarLike,
            slots: vec![],
            failure: None,
        };
        return Ok(BuildOutcome {
            representation: Some(BinaryRepresentation::new(d, d - 2, vec![])?),
            trace,
        });
    }

    let (case, clique, scheme_clique) = dispatch(h, d);
    run_scheme(h, d, case, clique, scheme_clique)
}

fn dispatch(h: &Graph, d: usize) -> (SchemeCase, Vec<usize>, Vec<usize>) {
    if h.edge_count() == 0 {
        // star scheme when the single 1-e_1 slot plus its pair slots fit,
        // otherwise pair vectors only (capacity d choose 2)
        let star_capacity = 1 + (d - 1) * (d - 2) / 2;
        let clique = max_clique(h);
        if h.n() <= star_capacity {
            return (SchemeCase::StarLike, clique.clone(), clique);
        }
        return (SchemeCase::StarLike, clique, vec![]);
    }
    let clique = max_clique(h);
    let k = clique.len();
    match k {
        _ if k >= 4 => (SchemeCase::BigClique, clique.clone(), clique),
        3 => {
            if clique.iter().all(|&u| h.degree(u) >= 3) {
                return (SchemeCase::TriangleHighDegree, clique.clone(), clique);
            }
            let apex = *clique
                .iter()
                .find(|&&u| h.degree(u) == 2)
                .expect("triangle vertex of degree 2 in the low case");
            let others: Vec<usize> = clique.iter().copied().filter(|&u| u != apex).collect();
            let common = (0..h.n())
                .filter(|&w| w != others[0] && w != others[1])
                .filter(|&w| h.has_edge(w, others[0]) && h.has_edge(w, others[1]))
                .count();
            if common <= 1 {
                (SchemeCase::TriangleSoloApex, clique, others)
            } else {
                let mut ordered = others;
                ordered.push(apex);
                (SchemeCase::TriangleTwoApex, clique, ordered)
            }
        }
        2 => {
            if clique.iter().all(|&u| h.degree(u) >= 2) {
                return (SchemeCase::PlainEdge, clique.clone(), clique);
            }
            let center = (0..h.n())
                .max_by_key(|&u| (h.degree(u), std::cmp::Reverse(u)))
                .expect("nonempty graph");
            (SchemeCase::StarLike, clique, vec![center])
        }
        _ => unreachable!("a graph with an edge has a clique of size 2"),
    }
}

fn run_scheme(
    h: &Graph,
    d: usize,
    case: SchemeCase,
    clique: Vec<usize>,
    scheme_clique: Vec<usize>,
) -> Result<BuildOutcome> {
    let k = clique.len();
    let k_eff = scheme_clique.len();
    let n = h.n();
    let in_scheme = |v: usize| scheme_clique.contains(&v);

    let mut y: Vec<usize> = Vec::new();
    let mut z: Vec<usize> = Vec::new();
    for v in 0..n {
        if in_scheme(v) {
            continue;
        }
        if h.degree(v) == 0 {
            z.push(v);
        } else {
            y.push(v);
        }
    }

    let mut trace = CaseTrace {
        clique,
        k,
        scheme_clique: scheme_clique.clone(),
        k_eff,
        y: y.clone(),
        z: z.clone(),
        case,
        slots: Vec::new(),
        failure: None,
    };
    let fail = |trace: &mut CaseTrace, msg: String| {
        trace.failure = Some(msg);
    };

    if k_eff > d {
        fail(&mut trace, format!("clique of size {k_eff} exceeds dimension {d}"));
        return Ok(BuildOutcome {
            representation: None,
            trace,
        });
    }

    let mut vectors: Vec<Option<BitVector>> = vec![None; n];
    let mut slots: Vec<(usize, Slot)> = Vec::new();

    for (pos, &x) in scheme_clique.iter().enumerate() {
        let index = pos + 1;
        vectors[x] = Some(BitVector::ones_minus(d, &[index - 1]));
        slots.push((x, Slot::CliqueVertex { index }));
    }

    // outside the scheme clique everything must be pairwise non-adjacent
    for (ai, &a) in y.iter().enumerate() {
        for &b in &y[ai + 1..] {
            if h.has_edge(a, b) {
                fail(&mut trace, format!("edge {a}-{b} outside the clique"));
                return Ok(BuildOutcome {
                    representation: None,
                    trace,
                });
            }
        }
    }

    let mut used_pairs: Vec<(usize, usize)> = Vec::new();
    let mut pendant_next: Vec<usize> = vec![k_eff + 1; k_eff];
    for &v in &y {
        let anchors: Vec<usize> = scheme_clique
            .iter()
            .enumerate()
            .filter(|(_, &x)| h.has_edge(v, x))
            .map(|(pos, _)| pos + 1)
            .collect();
        if h.degree(v) != anchors.len() {
            fail(
                &mut trace,
                format!("vertex {v} has a neighbor outside the clique"),
            );
            return Ok(BuildOutcome {
                representation: None,
                trace,
            });
        }
        match anchors.len() {
            2 => {
                let pair = (anchors[0], anchors[1]);
                if used_pairs.contains(&pair) {
                    fail(
                        &mut trace,
                        format!("clique pair {pair:?} has two common neighbors"),
                    );
                    return Ok(BuildOutcome {
                        representation: None,
                        trace,
                    });
                }
                used_pairs.push(pair);
                vectors[v] = Some(BitVector::ones_minus(d, &[pair.0 - 1, pair.1 - 1]));
                slots.push((
                    v,
                    Slot::CommonPair {
                        i: pair.0,
                        j: pair.1,
                    },
                ));
            }
            1 => {
                let anchor = anchors[0];
                let coord = pendant_next[anchor - 1];
                if coord > d {
                    fail(
                        &mut trace,
                        format!("pendant slots of clique vertex {anchor} exhausted"),
                    );
                    return Ok(BuildOutcome {
                        representation: None,
                        trace,
                    });
                }
                pendant_next[anchor - 1] = coord + 1;
                vectors[v] = Some(BitVector::ones_minus(d, &[anchor - 1, coord - 1]));
                slots.push((v, Slot::Pendant { anchor, coord }));
            }
            0 => {
                fail(
                    &mut trace,
                    format!("non-isolated vertex {v} has no clique neighbor"),
                );
                return Ok(BuildOutcome {
                    representation: None,
                    trace,
                });
            }
            more => {
                fail(
                    &mut trace,
                    format!("vertex {v} has {more} clique neighbors"),
                );
                return Ok(BuildOutcome {
                    representation: None,
                    trace,
                });
            }
        }
    }

    // isolated vertices draw distinct pairs above k_eff
    let mut free_pairs = (k_eff + 1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)));
    for &v in &z {
        match free_pairs.next() {
            Some((i, j)) => {
                vectors[v] = Some(BitVector::ones_minus(d, &[i - 1, j - 1]));
                slots.push((v, Slot::IsolatedPair { i, j }));
            }
            None => {
                fail(&mut trace, "isolated-vertex slots exhausted".into());
                return Ok(BuildOutcome {
                    representation: None,
                    trace,
                });
            }
        }
    }

    slots.sort_by_key(|&(v, _)| v);
    trace.slots = slots;

    let assignment: Vec<BitVector> = vectors
        .into_iter()
        .map(|v| v.expect("every vertex slotted"))
        .collect();
    let rep = BinaryRepresentation::new(d, d - 2, assignment)?;
    match verify_representation(h, &rep)? {
        None => Ok(BuildOutcome {
            representation: Some(rep),
            trace,
        }),
        Some(violation) => {
            // a slotted assignment that fails the pair check means the input
            // is outside the class; report, never return the bad certificate
            trace.failure = Some(format!(
                "scheme assignment violates pair ({}, {})",
                violation.u, violation.v
            ));
            Ok(BuildOutcome {
                representation: None,
                trace,
            })
        }
    }
}
