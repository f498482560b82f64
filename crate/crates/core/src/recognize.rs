//! Three-way recognition verdicts for the explicit characterizations.
//!
//! Each law states the equivalence, on its precondition domain, of
//!
//! * (i) a representation of dimension `d` exists at the law's threshold,
//! * (ii) the graph is a clique blow-up of the law's pattern graph,
//! * (iii) a forbidden family is avoided.
//!
//! The star law (threshold `d-1`) requires no isolated vertices and checks
//! (iii) on the graph itself; the split law (threshold `d-2`) requires no
//! isolated or universal vertices and checks (iii) on the twin reduction.
//! Condition (i) runs only on demand since it is the expensive one.

use crate::blowup::check_assignment;
use crate::error::{Error, Result};
use crate::family::{split_family, star_family, ForbWitness};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::patterns::{split_pattern, star_pattern};
use crate::rep::{verify_representation, BinaryRepresentation};
use crate::solver::{decide_theta_leq, Decision, SearchConfig};
use crate::twins::{twin_reduction, twin_reduction_iterated};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    /// Threshold d-1; pattern is the star on d leaves.
    Star,
    /// Threshold d-2; pattern is the split pattern.
    Split,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionOutcome {
    Holds,
    Fails,
    Skipped,
    Indeterminate,
}

impl std::fmt::Display for ConditionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConditionOutcome::Holds => "HOLDS",
            ConditionOutcome::Fails => "FAILS",
            ConditionOutcome::Skipped => "SKIPPED",
            ConditionOutcome::Indeterminate => "INDETERMINATE",
        })
    }
}

/// Which twin notion reduces the graph before the family check of the
/// split law.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    /// Quotient by equal closed neighborhoods (the default).
    TrueTwins,
    /// True and open twin quotients alternated to a fixpoint; available for
    /// comparison runs.
    TrueAndOpenIterated,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub law: Law,
    pub d: usize,
    pub cond_i: ConditionOutcome,
    pub cond_ii: ConditionOutcome,
    pub cond_iii: ConditionOutcome,
    /// Witness for (i): a verified representation.
    pub certificate: Option<BinaryRepresentation>,
    /// Witness for (ii): the bag assignment into the pattern graph.
    pub assignment: Option<Vec<usize>>,
    /// Witness for a failing (iii): the violated member and its embedding.
    pub violation: Option<ForbWitness>,
}

impl Verdict {
    pub fn all_evaluated_hold(&self) -> bool {
        [self.cond_i, self.cond_ii, self.cond_iii]
            .iter()
            .all(|c| matches!(c, ConditionOutcome::Holds | ConditionOutcome::Skipped))
    }

    pub fn any_fails(&self) -> bool {
        [self.cond_i, self.cond_ii, self.cond_iii]
            .iter()
            .any(|c| *c == ConditionOutcome::Fails)
    }

    /// Line-oriented report: `cond=<i|ii|iii> outcome=<...> witness=<...>`.
    pub fn report_lines(&self) -> Vec<String> {
        let witness_i = match (&self.certificate, self.cond_i) {
            (Some(_), _) => "certificate".to_string(),
            _ => "-".to_string(),
        };
        let witness_ii = match &self.assignment {
            Some(phi) => format!(
                "assignment:{}",
                phi.iter()
                    .enumerate()
                    .map(|(v, b)| format!("{v}>{b}"))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            None => "-".to_string(),
        };
        let witness_iii = match &self.violation {
            Some(w) => format!(
                "{}:{}",
                w.member_name,
                w.embedding
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            None => "-".to_string(),
        };
        vec![
            format!("cond=i outcome={} witness={}", self.cond_i, witness_i),
            format!("cond=ii outcome={} witness={}", self.cond_ii, witness_ii),
            format!("cond=iii outcome={} witness={}", self.cond_iii, witness_iii),
        ]
    }
}

/// Recognition under the star law (threshold `d-1`, `d >= 2`).
///
/// Rejects graphs with isolated vertices: the hypothesis is part of the
/// statement, not a normalization step.
pub fn check_star_law(
    g: &Graph,
    d: usize,
    with_solver: bool,
    cfg: &SearchConfig,
) -> Result<Verdict> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "star law needs d >= 2, got {d}"
        )));
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::Precondition(format!("isolated vertex {v}")));
    }

    let family = star_family(d)?;
    let violation = family.find_violation(g);
    let cond_iii = if violation.is_none() {
        ConditionOutcome::Holds
    } else {
        ConditionOutcome::Fails
    };

    let pattern = star_pattern(d)?;
    let assignment = pattern.find_assignment(g);
    if let Some(phi) = &assignment {
        debug_assert!(check_assignment(&pattern, g, phi));
    }
    let cond_ii = if assignment.is_some() {
        ConditionOutcome::Holds
    } else {
        ConditionOutcome::Fails
    };

    let (cond_i, certificate) = if with_solver {
        solver_condition(g, d, d - 1, cfg)?
    } else {
        (ConditionOutcome::Skipped, None)
    };

    Ok(Verdict {
        law: Law::Star,
        d,
        cond_i,
        cond_ii,
        cond_iii,
        certificate,
        assignment,
        violation,
    })
}

/// Recognition under the split law (threshold `d-2`, `d >= 3`), reducing by
/// true twins before the family check.
pub fn check_split_law(
    g: &Graph,
    d: usize,
    with_solver: bool,
    cfg: &SearchConfig,
) -> Result<Verdict> {
    check_split_law_with(g, d, with_solver, cfg, ReductionKind::TrueTwins)
}

pub fn check_split_law_with(
    g: &Graph,
    d: usize,
    with_solver: bool,
    cfg: &SearchConfig,
    reduction: ReductionKind,
) -> Result<Verdict> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!(
            "split law needs d >= 3, got {d}"
        )));
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::Precondition(format!("isolated vertex {v}")));
    }
    if let Some(&v) = g.universal_vertices().first() {
        return Err(Error::Precondition(format!("universal vertex {v}")));
    }

    let reduced = match reduction {
        ReductionKind::TrueTwins => twin_reduction(g).graph,
        ReductionKind::TrueAndOpenIterated => twin_reduction_iterated(g),
    };
    let family = split_family(d)?;
    let violation = family.find_violation(&reduced);
    let cond_iii = if violation.is_none() {
        ConditionOutcome::Holds
    } else {
        ConditionOutcome::Fails
    };

    let pattern = split_pattern(d)?.clique_blowup();
    let assignment = pattern.find_assignment(g);
    if let Some(phi) = &assignment {
        debug_assert!(check_assignment(&pattern, g, phi));
    }
    let cond_ii = if assignment.is_some() {
        ConditionOutcome::Holds
    } else {
        ConditionOutcome::Fails
    };

    let (cond_i, certificate) = if with_solver {
        solver_condition(g, d, d - 2, cfg)?
    } else {
        (ConditionOutcome::Skipped, None)
    };

    Ok(Verdict {
        law: Law::Split,
        d,
        cond_i,
        cond_ii,
        cond_iii,
        certificate,
        assignment,
        violation,
    })
}

fn solver_condition(
    g: &Graph,
    d: usize,
    p: usize,
    cfg: &SearchConfig,
) -> Result<(ConditionOutcome, Option<BinaryRepresentation>)> {
    Ok(match decide_theta_leq(g, d, p, cfg)? {
        Decision::Yes(rep) => {
            debug_assert_eq!(verify_representation(g, &rep)?, None);
            (ConditionOutcome::Holds, Some(rep))
        }
        Decision::No => (ConditionOutcome::Fails, None),
        Decision::Indeterminate { .. } => (ConditionOutcome::Indeterminate, None),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeelReason {
    Isolated,
    Universal,
}

#[derive(Clone, Debug)]
pub struct PeelStep {
    /// Index in the original graph.
    pub vertex: usize,
    pub reason: PeelReason,
}

/// Strips isolated and universal vertices iteratively (removing one can
/// expose another). Returns the peeled graph, the surviving original
/// indices, and the peeling sequence.
pub fn peel_isolated_universal(g: &Graph) -> (Graph, Vec<usize>, Vec<PeelStep>) {
    let mut current = g.clone();
    let mut kept: Vec<usize> = (0..g.n()).collect();
    let mut steps = Vec::new();
    loop {
        let found = (0..current.n()).find_map(|v| {
            if current.is_isolated(v) && current.n() > 0 {
                Some((v, PeelReason::Isolated))
            } else if current.is_universal(v) {
                Some((v, PeelReason::Universal))
            } else {
                None
            }
        });
        match found {
            Some((v, reason)) => {
                steps.push(PeelStep {
                    vertex: kept[v],
                    reason,
                });
                kept.remove(v);
                current = current.delete_vertex(v);
            }
            None => return (current, kept, steps),
        }
    }
}

/// Convenience for reports: the graph6 string of the reduced graph used by
/// the split law's family check.
pub fn reduced_for_report(g: &Graph, reduction: ReductionKind) -> String {
    let reduced = match reduction {
        ReductionKind::TrueTwins => twin_reduction(g).graph,
        ReductionKind::TrueAndOpenIterated => twin_reduction_iterated(g),
    };
    emit_graph6(&reduced)
}
