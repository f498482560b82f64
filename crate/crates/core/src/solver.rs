//! Exact decision of `theta_p(G) <= d` by backtracking over vertex vectors.
//!
//! The search assigns one 0/1 vector per vertex and checks every pair
//! against the threshold. Three exactness-preserving reductions keep it
//! fast:
//!
//! * true twins always admit equal vectors, so the search runs on the
//!   twin-reduced graph with a norm floor on collapsed or non-isolated
//!   vertices;
//! * coordinate permutations are symmetries, broken by requiring the
//!   columns of the growing assignment matrix to be lexicographically
//!   non-increasing;
//! * candidate vectors are tried by norm descending, since high-degree
//!   vertices need high norms.
//!
//! Exhausting the node budget yields an explicit indeterminate outcome,
//! never a silent "no".

use crate::bits::{self, BitVector};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rep::{verify_representation, BinaryRepresentation};
use crate::twins::twin_reduction;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Largest dimension the solver will attempt.
    pub max_dimension: usize,
    /// Backtracking node budget per decision call. A node is one candidate
    /// vector tried at one vertex.
    pub node_budget: u64,
    /// Column symmetry breaking (on by default; disable only to cross-check
    /// the search itself).
    pub symmetry_breaking: bool,
    /// Try a few seeded vertex-order shuffles before the deterministic
    /// order. Off by default; the result is still deterministic for a fixed
    /// configuration.
    pub randomized_restarts: bool,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_dimension: bits::MAX_DIMENSION,
            node_budget: 100_000_000,
            symmetry_breaking: true,
            randomized_restarts: false,
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        SearchConfig {
            node_budget,
            ..SearchConfig::default()
        }
    }
}

/// Outcome of one decision call.
#[derive(Clone, Debug)]
pub enum Decision {
    /// A verified representation exists; the certificate is attached.
    Yes(BinaryRepresentation),
    /// The full (symmetry-pruned) space was exhausted without a solution.
    No,
    /// The node budget ran out first.
    Indeterminate { nodes: u64 },
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn certificate(&self) -> Option<&BinaryRepresentation> {
        match self {
            Decision::Yes(rep) => Some(rep),
            _ => None,
        }
    }
}

/// Decides whether `g` has a binary dot product representation of dimension
/// `d` with threshold `p`.
pub fn decide_theta_leq(g: &Graph, d: usize, p: usize, cfg: &SearchConfig) -> Result<Decision> {
    if p < 1 {
        return Err(Error::InvalidParameter("threshold p must be >= 1".into()));
    }
    let cap = cfg.max_dimension.min(bits::MAX_DIMENSION);
    if d > cap {
        return Err(Error::DimensionTooLarge { d, max: cap });
    }
    if g.n() == 0 {
        return Ok(Decision::Yes(BinaryRepresentation::new(d, p, Vec::new())?));
    }

    let red = twin_reduction(g);
    let k = red.graph.n();
    let mut class_size = vec![0usize; k];
    for &c in &red.class_of {
        class_size[c] += 1;
    }
    // any vertex with a neighbor needs norm >= p, and so does a collapsed
    // clique of twins
    let min_norm: Vec<usize> = (0..k)
        .map(|c| {
            if red.graph.degree(c) > 0 || class_size[c] >= 2 {
                p
            } else {
                0
            }
        })
        .collect();

    let mut base_order: Vec<usize> = (0..k).collect();
    base_order.sort_by_key(|&c| {
        (
            std::cmp::Reverse(class_size[c]),
            std::cmp::Reverse(red.graph.degree(c)),
            c,
        )
    });

    let mut plans: Vec<(Vec<usize>, u64)> = Vec::new();
    if cfg.randomized_restarts {
        let slice = (cfg.node_budget / 8).max(1);
        for t in 0..3u64 {
            let mut order = base_order.clone();
            if t > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(t));
                order.shuffle(&mut rng);
            }
            plans.push((order, slice));
        }
    }
    plans.push((base_order, cfg.node_budget));

    let mut total_nodes = 0u64;
    for (order, budget) in plans {
        let mut search = VectorSearch {
            reduced: &red.graph,
            order: &order,
            d,
            p,
            min_norm: &min_norm,
            symmetry: cfg.symmetry_breaking,
            pair_mask: if d >= 2 { bits::mask_for(d - 1) } else { 0 },
            budget,
            nodes: 0,
            assigned: vec![0u64; k],
            eq_stack: vec![0u64; k + 1],
        };
        search.eq_stack[0] = search.pair_mask;
        let outcome = search.dfs(0);
        total_nodes += search.nodes;
        match outcome {
            Run::Found => {
                let vectors: Vec<BitVector> = red
                    .class_of
                    .iter()
                    .map(|&c| {
                        let depth = order.iter().position(|&o| o == c).expect("vertex in order");
                        BitVector::from_mask(d, search.assigned[depth])
                    })
                    .collect();
                let rep = BinaryRepresentation::new(d, p, vectors)?;
                // soundness gate on every solver exit
                assert_eq!(
                    verify_representation(g, &rep)?,
                    None,
                    "solver produced an invalid certificate"
                );
                return Ok(Decision::Yes(rep));
            }
            Run::Exhausted => return Ok(Decision::No),
            Run::OutOfBudget => {}
        }
    }
    Ok(Decision::Indeterminate { nodes: total_nodes })
}

enum Run {
    Found,
    Exhausted,
    OutOfBudget,
}

struct VectorSearch<'a> {
    reduced: &'a Graph,
    order: &'a [usize],
    d: usize,
    p: usize,
    min_norm: &'a [usize],
    symmetry: bool,
    pair_mask: u64,
    budget: u64,
    nodes: u64,
    assigned: Vec<u64>,
    eq_stack: Vec<u64>,
}

impl VectorSearch<'_> {
    fn dfs(&mut self, depth: usize) -> Run {
        if depth == self.order.len() {
            return Run::Found;
        }
        let v = self.order[depth];
        let eq = self.eq_stack[depth];
        let lo = self.min_norm[v];
        if lo > self.d {
            return Run::Exhausted;
        }
        for w in (lo..=self.d).rev() {
            for m in WeightMasks::new(self.d, w) {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Run::OutOfBudget;
                }
                // columns still equal so far must stay non-increasing
                if self.symmetry && !m & (m >> 1) & eq != 0 {
                    continue;
                }
                if !self.consistent(m, depth, v) {
                    continue;
                }
                self.assigned[depth] = m;
                self.eq_stack[depth + 1] = eq & !(m ^ (m >> 1)) & self.pair_mask;
                match self.dfs(depth + 1) {
                    Run::Exhausted => {}
                    other => return other,
                }
            }
        }
        Run::Exhausted
    }

    #[inline]
    fn consistent(&self, m: u64, depth: usize, v: usize) -> bool {
        for j in 0..depth {
            let dot = (m & self.assigned[j]).count_ones() as usize;
            if (dot >= self.p) != self.reduced.has_edge(v, self.order[j]) {
                return false;
            }
        }
        true
    }
}

/// Masks of a fixed popcount over `d` bits, ascending (Gosper's hack).
struct WeightMasks {
    next: Option<u64>,
    limit: u64,
}

impl WeightMasks {
    fn new(d: usize, w: usize) -> Self {
        debug_assert!(d <= bits::MAX_DIMENSION);
        let limit = 1u64 << d;
        let next = if w > d {
            None
        } else if w == 0 {
            Some(0)
        } else {
            Some((1u64 << w) - 1)
        };
        WeightMasks { next, limit }
    }
}

impl Iterator for WeightMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let m = self.next?;
        if m >= self.limit && m != 0 {
            self.next = None;
            return None;
        }
        self.next = if m == 0 {
            None
        } else {
            let c = m & m.wrapping_neg();
            let r = m + c;
            Some((((r ^ m) >> 2) / c) | r)
        };
        if let Some(n) = self.next {
            if n >= self.limit {
                self.next = None;
            }
        }
        Some(m)
    }
}

/// Exact p-intersection number, or bounds when the budget ran out.
#[derive(Clone, Debug)]
pub enum ThetaResult {
    Exact {
        value: usize,
        certificate: BinaryRepresentation,
    },
    Indeterminate {
        lower: usize,
        upper: usize,
    },
}

impl ThetaResult {
    pub fn value(&self) -> Option<usize> {
        match self {
            ThetaResult::Exact { value, .. } => Some(*value),
            ThetaResult::Indeterminate { .. } => None,
        }
    }
}

/// Dimension that always suffices: cover each edge by its own ground
/// element (a 1-intersection representation on |E| elements), then give
/// every vertex the same p-1 extra elements. Adjacent pairs meet in
/// 1+(p-1) >= p points, non-adjacent pairs in exactly p-1 < p, so the
/// adjacency equivalence is preserved. Edgeless graphs need nothing.
pub fn theta_upper_bound(g: &Graph, p: usize) -> usize {
    let m = g.edge_count();
    if m == 0 {
        0
    } else {
        m + p - 1
    }
}

/// Computes `theta_p(g)` exactly by increasing the dimension until the
/// decision succeeds. Terminates at `theta_upper_bound`.
pub fn theta_p(g: &Graph, p: usize, cfg: &SearchConfig) -> Result<ThetaResult> {
    if p < 1 {
        return Err(Error::InvalidParameter("threshold p must be >= 1".into()));
    }
    if g.edge_count() == 0 {
        let certificate =
            BinaryRepresentation::new(0, p, vec![BitVector::zeros(0); g.n()])?;
        return Ok(ThetaResult::Exact {
            value: 0,
            certificate,
        });
    }
    let ub = theta_upper_bound(g, p);
    let cap = cfg.max_dimension.min(bits::MAX_DIMENSION);
    // an edge forces a dot product of at least p, hence dimension >= p
    for d in p..=ub.min(cap) {
        match decide_theta_leq(g, d, p, cfg)? {
            Decision::Yes(certificate) => {
                return Ok(ThetaResult::Exact {
                    value: d,
                    certificate,
                })
            }
            Decision::No => {}
            Decision::Indeterminate { .. } => {
                return Ok(ThetaResult::Indeterminate { lower: d, upper: ub });
            }
        }
    }
    if ub > cap {
        return Ok(ThetaResult::Indeterminate {
            lower: cap + 1,
            upper: ub,
        });
    }
    unreachable!("a representation of dimension |E|+p-1 always exists")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraphSpec::*;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn weight_masks_enumerate_combinations() {
        let masks: Vec<u64> = WeightMasks::new(4, 2).collect();
        assert_eq!(masks, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(WeightMasks::new(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(WeightMasks::new(3, 4).count(), 0);
        assert_eq!(WeightMasks::new(0, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(WeightMasks::new(6, 3).count(), 20);
    }

    #[test]
    fn star_with_four_leaves_needs_more_than_three_at_threshold_two() {
        let g = Star(4).build().unwrap();
        assert!(decide_theta_leq(&g, 3, 2, &cfg()).unwrap().is_no());
    }

    #[test]
    fn star_with_three_leaves_fits_dimension_three_threshold_two() {
        let g = Star(3).build().unwrap();
        let decision = decide_theta_leq(&g, 3, 2, &cfg()).unwrap();
        assert!(decision.is_yes());
    }

    #[test]
    fn edgeless_needs_no_ground_set() {
        let g = Edgeless(5).build().unwrap();
        let decision = decide_theta_leq(&g, 0, 1, &cfg()).unwrap();
        assert!(decision.is_yes());
        assert_eq!(decision.certificate().unwrap().d(), 0);
    }

    #[test]
    fn theta_of_complete_graphs_is_the_threshold() {
        for n in 2..=5 {
            for p in 1..=3 {
                let g = Complete(n).build().unwrap();
                assert_eq!(theta_p(&g, p, &cfg()).unwrap().value(), Some(p), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn theta_of_edgeless_graphs_is_zero() {
        for p in 1..=3 {
            let g = Edgeless(4).build().unwrap();
            assert_eq!(theta_p(&g, p, &cfg()).unwrap().value(), Some(0));
        }
    }

    #[test]
    fn theta_of_the_claw_at_threshold_one_is_three() {
        // leaves sharing an element would be adjacent, so each edge needs its own
        let g = Star(3).build().unwrap();
        assert_eq!(theta_p(&g, 1, &cfg()).unwrap().value(), Some(3));
        assert_eq!(
            crate::ecc::min_edge_clique_cover(&g).unwrap(),
            3,
            "clique cover oracle agrees"
        );
    }

    #[test]
    fn upper_bound_formula() {
        assert_eq!(theta_upper_bound(&Edgeless(7).build().unwrap(), 4), 0);
        assert_eq!(theta_upper_bound(&Complete(2).build().unwrap(), 3), 3);
        let p3 = Path(3).build().unwrap();
        assert_eq!(theta_upper_bound(&p3, 1), 2);
        assert_eq!(theta_p(&p3, 1, &cfg()).unwrap().value(), Some(2));
    }

    #[test]
    fn tiny_budget_reports_indeterminate() {
        let g = Cycle(5).build().unwrap();
        let tight = SearchConfig::with_budget(1);
        match decide_theta_leq(&g, 3, 2, &tight).unwrap() {
            Decision::Indeterminate { nodes } => assert!(nodes >= 1),
            other => panic!("expected indeterminate, got {other:?}"),
        }
    }

    #[test]
    fn symmetry_breaking_does_not_change_answers() {
        let plain = SearchConfig {
            symmetry_breaking: false,
            ..SearchConfig::default()
        };
        for spec in [Path(4), Cycle(4), Star(3), Complete(4), CompleteMinusEdge(4)] {
            let g = spec.build().unwrap();
            for d in 0..=3 {
                for p in 1..=2 {
                    let a = decide_theta_leq(&g, d, p, &cfg()).unwrap().is_yes();
                    let b = decide_theta_leq(&g, d, p, &plain).unwrap().is_yes();
                    assert_eq!(a, b, "{spec:?} d={d} p={p}");
                }
            }
        }
    }

    #[test]
    fn restarts_stay_exact() {
        let restarts = SearchConfig {
            randomized_restarts: true,
            seed: 7,
            ..SearchConfig::default()
        };
        let g = Star(4).build().unwrap();
        assert!(decide_theta_leq(&g, 3, 2, &restarts).unwrap().is_no());
        assert!(decide_theta_leq(&g, 4, 2, &restarts).unwrap().is_yes());
    }

    #[test]
    fn dimension_cap_is_an_error() {
        let g = Complete(3).build().unwrap();
        assert!(matches!(
            decide_theta_leq(&g, 64, 1, &cfg()),
            Err(Error::DimensionTooLarge { .. })
        ));
    }
}
