//! The verification suite: each runner checks one acceptance criterion
//! exhaustively and reports pass/fail with details. The CLI `suite`
//! subcommand and the acceptance test target both drive these.

use crate::bits::BitVector;
use crate::builder::{build_split_representation, SchemeCase};
use crate::canon::canonical_key;
use crate::ecc::min_edge_clique_cover;
use crate::enumerate::enumerate_up_to;
use crate::error::Result;
use crate::family::{split_family, star_family};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::mfis::{
    dimension_mfis_bound, enumerate_mfis, mfis_order_bound, verify_catalog,
};
use crate::named::NamedGraphSpec;
use crate::patterns::{binomial, cube_class_sizes, split_pattern, star_pattern};
use crate::rep::{verify_representation, BinaryRepresentation};
use crate::solver::{decide_theta_leq, theta_p, Decision, SearchConfig};
use crate::star::verify_star_mfis;
use crate::twins::{twin_reduction, twin_reduction_iterated};

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: &'static str,
    pub pass: bool,
    /// Number of individual checks performed.
    pub checked: u64,
    /// Failures; empty exactly when `pass`.
    pub failures: Vec<String>,
    /// Informational notes (counts, resolved questions).
    pub notes: Vec<String>,
}

impl CriterionReport {
    fn new(id: &'static str) -> Self {
        CriterionReport {
            id,
            pass: true,
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, message: String) {
        self.pass = false;
        if self.failures.len() < 32 {
            self.failures.push(message);
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{} {} ({} checks{})",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.checked,
            if self.failures.is_empty() {
                String::new()
            } else {
                format!(", {} failures", self.failures.len())
            }
        )
    }
}

pub const CRITERIA: [&str; 10] = [
    "star-equivalence",
    "split-equivalence",
    "star-mfis",
    "clique-cover-oracle",
    "mfis-ground-truth",
    "catalog-containment",
    "bound-compliance",
    "counting-identities",
    "builder-completeness",
    "formats-roundtrip",
];

pub fn run_by_name(name: &str, cfg: &SearchConfig) -> Result<CriterionReport> {
    match name {
        "star-equivalence" => star_equivalence(cfg),
        "split-equivalence" => split_equivalence(cfg),
        "star-mfis" => star_mfis(cfg),
        "clique-cover-oracle" => clique_cover_oracle(cfg),
        "mfis-ground-truth" => mfis_ground_truth(cfg),
        "catalog-containment" => catalog_containment(cfg),
        "bound-compliance" => bound_compliance(cfg),
        "counting-identities" => counting_identities(),
        "builder-completeness" => builder_completeness(cfg),
        "formats-roundtrip" => formats_roundtrip(cfg),
        other => Err(crate::error::Error::InvalidParameter(format!(
            "unknown suite criterion {other:?}; known: {}",
            CRITERIA.join(", ")
        ))),
    }
}

pub fn run_all(cfg: &SearchConfig) -> Result<Vec<CriterionReport>> {
    CRITERIA.iter().map(|name| run_by_name(name, cfg)).collect()
}

fn decide_bool(g: &Graph, d: usize, p: usize, cfg: &SearchConfig) -> Result<Option<bool>> {
    Ok(match decide_theta_leq(g, d, p, cfg)? {
        Decision::Yes(_) => Some(true),
        Decision::No => Some(false),
        Decision::Indeterminate { .. } => None,
    })
}

/// Criterion 1: on graphs without isolated vertices up to order 7, the
/// star-pattern membership (ii) and the family condition (iii) agree for
/// d in {2,3,4}; the solver condition (i) agrees on order <= 6 for d in
/// {2,3}.
fn star_equivalence(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("star-equivalence");
    let levels = enumerate_up_to(7)?;
    for d in [2usize, 3, 4] {
        let family = star_family(d)?;
        let pattern = star_pattern(d)?;
        for level in &levels {
            for g in level {
                if !g.isolated_vertices().is_empty() {
                    continue;
                }
                let b_iii = family.find_violation(g).is_none();
                let b_ii = pattern.find_assignment(g).is_some();
                report.checked += 1;
                if b_ii != b_iii {
                    report.fail(format!(
                        "{} d={d}: pattern membership {} but family says {}",
                        emit_graph6(g),
                        b_ii,
                        b_iii
                    ));
                }
                if g.n() <= 6 && (d == 2 || d == 3) {
                    report.checked += 1;
                    match decide_bool(g, d, d - 1, cfg)? {
                        Some(b_i) if b_i == b_iii => {}
                        Some(b_i) => report.fail(format!(
                            "{} d={d}: solver says {} but family says {}",
                            emit_graph6(g),
                            b_i,
                            b_iii
                        )),
                        None => report.fail(format!(
                            "{} d={d}: solver ran out of budget",
                            emit_graph6(g)
                        )),
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Criterion 2: on graphs without isolated or universal vertices up to
/// order 7 and d in {3,4}, conditions (i), (ii), (iii) agree under the
/// true-twin reduction. The family condition is re-run under the iterated
/// true+open reduction and the report states which notion matches (i).
fn split_equivalence(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("split-equivalence");
    let levels = enumerate_up_to(7)?;
    let mut open_mismatches = 0u64;
    let mut true_mismatches = 0u64;
    for d in [3usize, 4] {
        let family = split_family(d)?;
        let pattern = split_pattern(d)?.clique_blowup();
        for level in &levels {
            for g in level {
                if !g.isolated_vertices().is_empty() || !g.universal_vertices().is_empty() {
                    continue;
                }
                let b_iii = family.find_violation(&twin_reduction(g).graph).is_none();
                let b_iii_open = family
                    .find_violation(&twin_reduction_iterated(g))
                    .is_none();
                let b_ii = pattern.find_assignment(g).is_some();
                let b_i = match decide_bool(g, d, d - 2, cfg)? {
                    Some(b) => b,
                    None => {
                        report.fail(format!(
                            "{} d={d}: solver ran out of budget",
                            emit_graph6(g)
                        ));
                        continue;
                    }
                };
                report.checked += 1;
                if b_i != b_iii {
                    true_mismatches += 1;
                    report.fail(format!(
                        "{} d={d}: solver {} vs true-twin family {}",
                        emit_graph6(g),
                        b_i,
                        b_iii
                    ));
                }
                if b_i != b_ii {
                    report.fail(format!(
                        "{} d={d}: solver {} vs pattern membership {}",
                        emit_graph6(g),
                        b_i,
                        b_ii
                    ));
                }
                if b_i != b_iii_open {
                    open_mismatches += 1;
                }
            }
        }
    }
    report.notes.push(format!(
        "true-twin reduction mismatches vs solver: {true_mismatches}; \
         iterated true+open reduction mismatches: {open_mismatches}; \
         matching notion: {}",
        if true_mismatches == 0 {
            "true twins"
        } else {
            "neither"
        }
    ));
    Ok(report)
}

/// Criterion 3: the critical star is a minimal forbidden graph at the
/// six listed parameter pairs, with the expected leaf counts.
fn star_mfis(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("star-mfis");
    let cases: [(usize, usize, usize); 6] = [
        (1, 1, 2),
        (2, 1, 3),
        (3, 1, 4),
        (3, 2, 4),
        (4, 2, 7),
        (4, 3, 5),
    ];
    for (d, p, expected_k) in cases {
        report.checked += 1;
        let r = verify_star_mfis(d, p, cfg)?;
        if r.k != expected_k {
            report.fail(format!("d={d} p={p}: k={} expected {expected_k}", r.k));
        }
        if !r.is_mfis {
            report.fail(format!("d={d} p={p}: star not confirmed minimal ({r:?})"));
        }
    }
    Ok(report)
}

/// Criterion 4: theta at threshold 1 equals the minimum edge clique cover
/// on every graph of order at most 6.
fn clique_cover_oracle(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("clique-cover-oracle");
    for level in enumerate_up_to(6)? {
        for g in &level {
            report.checked += 1;
            let cover = min_edge_clique_cover(g)?;
            match theta_p(g, 1, cfg)?.value() {
                Some(theta) if theta == cover => {}
                Some(theta) => report.fail(format!(
                    "{}: theta_1={theta} but clique cover={cover}",
                    emit_graph6(g)
                )),
                None => report.fail(format!("{}: theta_1 undecided", emit_graph6(g))),
            }
        }
    }
    Ok(report)
}

/// Ground-truth membership for dimension 1, threshold 1: a vertex set
/// either holds the single ground element or not, so membership is a brute
/// force over all 2^n assignments.
fn in_class_one_element(g: &Graph) -> bool {
    let n = g.n();
    'next: for assign in 0u64..1 << n {
        for u in 0..n {
            for v in u + 1..n {
                let both = assign >> u & assign >> v & 1 == 1;
                if g.has_edge(u, v) != both {
                    continue 'next;
                }
            }
        }
        return true;
    }
    false
}

/// Criterion 5: the enumerated (1,1) catalog equals the one derived from
/// the independent brute-force membership oracle.
fn mfis_ground_truth(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("mfis-ground-truth");
    let catalog = enumerate_mfis(1, 1, 5, cfg)?;
    let got: Vec<String> = catalog.entries.iter().map(|e| e.graph6.clone()).collect();

    let mut expected: Vec<String> = Vec::new();
    for level in enumerate_up_to(5)? {
        for g in &level {
            report.checked += 1;
            if in_class_one_element(g) {
                continue;
            }
            let minimal = (0..g.n()).all(|v| in_class_one_element(&g.delete_vertex(v)));
            if minimal {
                expected.push(canonical_key(g));
            }
        }
    }
    expected.sort();
    let mut got_sorted = got.clone();
    got_sorted.sort();
    if got_sorted != expected {
        report.fail(format!(
            "catalog {got:?} differs from oracle {expected:?}"
        ));
    }
    Ok(report)
}

/// Criterion 6: the catalogs contain the critical stars.
fn catalog_containment(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("catalog-containment");
    for (d, p, leaves) in [(3usize, 2usize, 4usize), (2, 1, 3)] {
        report.checked += 1;
        let catalog = enumerate_mfis(d, p, 5, cfg)?;
        let star_key = canonical_key(&NamedGraphSpec::Star(leaves).build()?);
        if !catalog.entries.iter().any(|e| e.graph6 == star_key) {
            report.fail(format!(
                "catalog ({d},{p}) is missing the star with {leaves} leaves"
            ));
        }
    }
    Ok(report)
}

/// Criterion 7: every catalog entry respects the split-size order bound;
/// entries over the dimension-only bound are flagged (none expected).
fn bound_compliance(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("bound-compliance");
    for (d, p) in [(1usize, 1usize), (2, 1), (3, 2)] {
        let catalog = enumerate_mfis(d, p, 5, cfg)?;
        let (c, i) = cube_class_sizes(d, p);
        let bound = mfis_order_bound(c, i);
        let dim_bound = dimension_mfis_bound(d);
        for entry in &catalog.entries {
            report.checked += 1;
            if entry.order as u64 > bound {
                report.fail(format!(
                    "({d},{p}) entry {} of order {} exceeds bound {bound}",
                    entry.graph6, entry.order
                ));
            }
            if entry.order as u64 > dim_bound {
                report.notes.push(format!(
                    "({d},{p}) entry {} exceeds the dimension bound {dim_bound}",
                    entry.graph6
                ));
            }
        }
    }
    Ok(report)
}

fn for_each_subset(pool: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(pool: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..pool.len() {
            acc.push(pool[i]);
            rec(pool, k, i + 1, acc, f);
            acc.pop();
        }
    }
    rec(pool, k, 0, &mut Vec::new(), f);
}

/// Criterion 8: the two vector-counting identities behind the split family
/// sizes, verified by direct enumeration for d up to 8.
///
/// For any 3 distinct vectors of norm d-1, exactly C(d-3,2) vectors of norm
/// d-2 stay below threshold against all of them; for i >= 4 distinct
/// vectors of norm d-1, exactly d-i vectors of norm d-2 reach threshold
/// against the first and stay below it against the rest.
fn counting_identities() -> Result<CriterionReport> {
    let mut report = CriterionReport::new("counting-identities");
    for d in 4..=8usize {
        let p = d - 2;
        let high: Vec<u64> = (0..d)
            .map(|i| BitVector::ones_minus(d, &[i]).mask())
            .collect();
        let low: Vec<u64> = {
            let mut v = Vec::new();
            for i in 0..d {
                for j in i + 1..d {
                    v.push(BitVector::ones_minus(d, &[i, j]).mask());
                }
            }
            v
        };
        let coords: Vec<usize> = (0..d).collect();

        for_each_subset(&coords, 3, &mut |chosen| {
            let xs: Vec<u64> = chosen.iter().map(|&c| high[c]).collect();
            let count = low
                .iter()
                .filter(|&&y| xs.iter().all(|&x| ((y & x).count_ones() as usize) < p))
                .count();
            report.checked += 1;
            let expected = binomial(d - 3, 2) as usize;
            if count != expected {
                report.fail(format!(
                    "d={d}: {count} low vectors avoid {chosen:?}, expected {expected}"
                ));
            }
        });

        for i in 4..=d {
            for first in 0..d {
                let rest: Vec<usize> = (0..d).filter(|&c| c != first).collect();
                for_each_subset(&rest, i - 1, &mut |chosen| {
                    let x1 = high[first];
                    let others: Vec<u64> = chosen.iter().map(|&c| high[c]).collect();
                    let count = low
                        .iter()
                        .filter(|&&y| {
                            (y & x1).count_ones() as usize == p
                                && others
                                    .iter()
                                    .all(|&x| ((y & x).count_ones() as usize) < p)
                        })
                        .count();
                    report.checked += 1;
                    if count != d - i {
                        report.fail(format!(
                            "d={d} i={i}: {count} low vectors, expected {}",
                            d - i
                        ));
                    }
                });
            }
        }
    }
    Ok(report)
}

/// Criterion 9: over the split-equivalence graph set, the constructive
/// builder produces a verified certificate whenever the family condition
/// holds on the reduction; absences are cross-checked against the solver.
fn builder_completeness(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("builder-completeness");
    let levels = enumerate_up_to(7)?;
    let mut built = 0u64;
    let mut explained_absences = 0u64;
    for d in [3usize, 4] {
        let family = split_family(d)?;
        for level in &levels {
            for g in level {
                if !g.isolated_vertices().is_empty() || !g.universal_vertices().is_empty() {
                    continue;
                }
                let h = twin_reduction(g).graph;
                let holds = family.find_violation(&h).is_none();
                let outcome = build_split_representation(&h, d)?;
                report.checked += 1;
                match outcome.representation {
                    Some(rep) => {
                        built += 1;
                        if verify_representation(&h, &rep)?.is_some() {
                            report.fail(format!(
                                "{} d={d}: builder certificate does not verify",
                                emit_graph6(&h)
                            ));
                        }
                    }
                    None if holds => {
                        // the one tolerated gap: the lowered-triangle case
                        // may miss; the exact solver must then still succeed
                        let solver_yes =
                            matches!(decide_theta_leq(&h, d, d - 2, cfg)?, Decision::Yes(_));
                        if outcome.trace.case == SchemeCase::TriangleSoloApex && solver_yes {
                            explained_absences += 1;
                        } else {
                            report.fail(format!(
                                "{} d={d}: family holds but builder absent (case {}, {:?})",
                                emit_graph6(&h),
                                outcome.trace.case,
                                outcome.trace.failure
                            ));
                        }
                    }
                    None => {}
                }
            }
        }
    }
    report.notes.push(format!(
        "certificates built: {built}; explained triangle-case absences: {explained_absences}"
    ));
    Ok(report)
}

/// Criterion 10: byte-exact graph6 round-trips over all enumerated graphs
/// up to order 7; certificate and catalog files re-parse to equal values;
/// repeated catalog runs are byte-identical.
fn formats_roundtrip(cfg: &SearchConfig) -> Result<CriterionReport> {
    let mut report = CriterionReport::new("formats-roundtrip");
    for level in enumerate_up_to(7)? {
        for g in &level {
            report.checked += 1;
            let text = emit_graph6(g);
            let back = parse_graph6(&text)?;
            if back != *g {
                report.fail(format!("graph6 round-trip changed {text}"));
            }
            if emit_graph6(&back) != text {
                report.fail(format!("graph6 re-emit changed {text}"));
            }
        }
    }
    // solver certificates round-trip through the text format
    for level in enumerate_up_to(4)? {
        for g in &level {
            for (d, p) in [(2usize, 1usize), (3, 2)] {
                if let Decision::Yes(rep) = decide_theta_leq(g, d, p, cfg)? {
                    report.checked += 1;
                    let back = BinaryRepresentation::from_text(&rep.to_text())?;
                    if back != rep {
                        report.fail(format!(
                            "certificate round-trip changed for {}",
                            emit_graph6(g)
                        ));
                    }
                }
            }
        }
    }
    // catalogs: parse equality, repeatability, and post-hoc soundness
    for (d, p) in [(1usize, 1usize), (2, 1)] {
        report.checked += 1;
        let catalog = enumerate_mfis(d, p, 5, cfg)?;
        let text = catalog.to_text();
        let reparsed = crate::mfis::MfisCatalog::from_text(&text)?;
        if reparsed != catalog {
            report.fail(format!("catalog ({d},{p}) re-parse differs"));
        }
        let again = enumerate_mfis(d, p, 5, cfg)?.to_text();
        if again != text {
            report.fail(format!("catalog ({d},{p}) is not byte-identical across runs"));
        }
        for issue in verify_catalog(&catalog, cfg)? {
            report.fail(format!("catalog ({d},{p}): {issue}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_criterion_is_an_error() {
        assert!(run_by_name("no-such-criterion", &SearchConfig::default()).is_err());
    }

    #[test]
    fn subsets_enumerate_binomially() {
        let pool: Vec<usize> = (0..5).collect();
        let mut count = 0;
        for_each_subset(&pool, 3, &mut |_| count += 1);
        assert_eq!(count, 10);
    }

    #[test]
    fn one_element_oracle() {
        use crate::named::NamedGraphSpec::*;
        assert!(in_class_one_element(&Complete(4).build().unwrap()));
        assert!(in_class_one_element(
            &Union(vec![Complete(3), Edgeless(2)]).build().unwrap()
        ));
        assert!(!in_class_one_element(&Path(3).build().unwrap()));
        assert!(!in_class_one_element(
            &Union(vec![Complete(2), Complete(2)]).build().unwrap()
        ));
    }
}
