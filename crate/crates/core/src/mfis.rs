//! Enumeration of minimal forbidden induced subgraphs for fixed `(d, p)`.
//!
//! The class of graphs with a representation is hereditary, so it is
//! characterized by its minimal forbidden induced subgraphs, and those have
//! bounded order. Enumeration sweeps the graph levels in order, testing
//! membership with the exact solver; a graph containing an already-found
//! smaller forbidden graph cannot be minimal and is pruned together with
//! its supergraphs, which is safe because clean graphs always have clean
//! parents.

use crate::canon::{canonical_form, canonical_key};
use crate::enumerate::ENUMERATION_MAX_N;
use crate::error::{Error, Result};
use crate::family::{split_family, star_family};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::induced::induced_contains;
use crate::named::NamedGraphSpec;
use crate::patterns::{binomial, cube_class_sizes};
use crate::solver::{decide_theta_leq, Decision, SearchConfig};
use std::collections::BTreeMap;
use std::collections::HashMap;

/// Order bound for minimal forbidden induced subgraphs of a blow-up class
/// with clique side `c` and independent side `i`: 4ci + 2c + 2i + 1.
pub fn mfis_order_bound(c_size: u64, i_size: u64) -> u64 {
    4 * c_size * i_size + 2 * c_size + 2 * i_size + 1
}

/// The dimension-only bound 3 * 2^(d+1) + 1.
///
/// Note: this is reported alongside the split-size bound rather than used
/// as the ceiling, because a balanced split of the 2^d vectors makes the
/// product |C||I| exceed 2^d (already at d = 3 with 4 * 4 = 16 > 8), so the
/// two bounds are kept separate and catalogs record both.
pub fn dimension_mfis_bound(d: usize) -> u64 {
    3 * (1u64 << (d + 1)) + 1
}

/// Memoizing membership oracle for one `(d, p)` pair, keyed by canonical
/// form. The memo is capacity-bounded; insertions past the cap are skipped
/// and counted.
pub struct ClassOracle {
    pub d: usize,
    pub p: usize,
    cfg: SearchConfig,
    memo: HashMap<String, bool>,
    capacity: usize,
    pub hits: u64,
    pub misses: u64,
    pub skipped_inserts: u64,
}

impl ClassOracle {
    pub fn new(d: usize, p: usize, cfg: SearchConfig) -> Self {
        ClassOracle {
            d,
            p,
            cfg,
            memo: HashMap::new(),
            capacity: 1 << 20,
            hits: 0,
            misses: 0,
            skipped_inserts: 0,
        }
    }

    /// Membership of `g` in the class, memoized. A budget-exhausted solver
    /// run surfaces as an error and poisons the surrounding enumeration.
    pub fn in_class(&mut self, g: &Graph) -> Result<bool> {
        let key = canonical_key(g);
        if let Some(&answer) = self.memo.get(&key) {
            self.hits += 1;
            return Ok(answer);
        }
        self.misses += 1;
        let answer = self.in_class_fresh(g)?;
        if self.memo.len() < self.capacity {
            self.memo.insert(key, answer);
        } else {
            self.skipped_inserts += 1;
        }
        Ok(answer)
    }

    /// Membership without touching the memo; used for post-hoc catalog
    /// verification.
    pub fn in_class_fresh(&self, g: &Graph) -> Result<bool> {
        match decide_theta_leq(g, self.d, self.p, &self.cfg)? {
            Decision::Yes(_) => Ok(true),
            Decision::No => Ok(false),
            Decision::Indeterminate { nodes } => Err(Error::Indeterminate(format!(
                "membership of a {}-vertex graph undecided after {nodes} nodes",
                g.n()
            ))),
        }
    }
}

/// Is `g` outside the class while every one-vertex deletion is inside?
/// Deletions are tested once per vertex orbit.
pub fn is_minimal_forbidden(g: &Graph, oracle: &mut ClassOracle) -> Result<bool> {
    if oracle.in_class(g)? {
        return Ok(false);
    }
    let cert = canonical_form(g);
    let mut tested: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        let rep = cert.orbits[v];
        if tested.contains(&rep) {
            continue;
        }
        tested.push(rep);
        if !oracle.in_class(&g.delete_vertex(v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Canonical graph6 of the forbidden graph.
    pub graph6: String,
    pub order: usize,
    /// Symbolic name when the entry matches a known family member.
    pub name: Option<String>,
}

/// A persistent catalog of minimal forbidden induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MfisCatalog {
    pub d: usize,
    pub p: usize,
    pub max_n: usize,
    pub version: String,
    pub node_budget: u64,
    pub entries: Vec<CatalogEntry>,
}

impl MfisCatalog {
    /// Stable text form: header comments, then one line per entry
    /// `<graph6> order=<k> name=<label|->`.
    pub fn to_text(&self) -> String {
        let (c, i) = cube_class_sizes(self.d, self.p);
        let mut out = format!(
            "# mfis d={} p={} max_n={} version={}\n",
            self.d, self.p, self.max_n, self.version
        );
        out.push_str(&format!("# budget nodes={}\n", self.node_budget));
        out.push_str(&format!(
            "# bound split={} dimension={}\n",
            mfis_order_bound(c, i),
            dimension_mfis_bound(self.d)
        ));
        for e in &self.entries {
            out.push_str(&format!(
                "{} order={} name={}\n",
                e.graph6,
                e.order,
                e.name.as_deref().unwrap_or("-")
            ));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<MfisCatalog> {
        let mut d = None;
        let mut p = None;
        let mut max_n = None;
        let mut version = None;
        let mut node_budget = 0u64;
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let bad = |reason: String| Error::CatalogParse {
                line: line_no,
                reason,
            };
            if line.trim().is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                for tok in rest.split_whitespace() {
                    if let Some((key, value)) = tok.split_once('=') {
                        match key {
                            "d" => d = value.parse().ok(),
                            "p" => p = value.parse().ok(),
                            "max_n" => max_n = value.parse().ok(),
                            "version" => version = Some(value.to_string()),
                            "nodes" => node_budget = value.parse().unwrap_or(0),
                            _ => {}
                        }
                    }
                }
                continue;
            }
            let mut toks = line.split_whitespace();
            let graph6 = toks
                .next()
                .ok_or_else(|| bad("missing graph6 field".into()))?
                .to_string();
            let order_tok = toks
                .next()
                .and_then(|t| t.strip_prefix("order="))
                .ok_or_else(|| bad("missing order field".into()))?;
            let order: usize = order_tok
                .parse()
                .map_err(|_| bad(format!("bad order {order_tok:?}")))?;
            let name_tok = toks
                .next()
                .and_then(|t| t.strip_prefix("name="))
                .ok_or_else(|| bad("missing name field".into()))?;
            let parsed = parse_graph6(&graph6)?;
            if parsed.n() != order {
                return Err(bad(format!("order {order} does not match graph6")));
            }
            entries.push(CatalogEntry {
                graph6,
                order,
                name: if name_tok == "-" {
                    None
                } else {
                    Some(name_tok.to_string())
                },
            });
        }
        Ok(MfisCatalog {
            d: d.ok_or_else(|| Error::CatalogParse {
                line: 1,
                reason: "missing d".into(),
            })?,
            p: p.ok_or_else(|| Error::CatalogParse {
                line: 1,
                reason: "missing p".into(),
            })?,
            max_n: max_n.ok_or_else(|| Error::CatalogParse {
                line: 1,
                reason: "missing max_n".into(),
            })?,
            version: version.unwrap_or_default(),
            node_budget,
            entries,
        })
    }
}

/// Enumerates all minimal forbidden induced subgraphs of order at most
/// `max_n` for the `(d, p)` class.
pub fn enumerate_mfis(
    d: usize,
    p: usize,
    max_n: usize,
    cfg: &SearchConfig,
) -> Result<MfisCatalog> {
    if p < 1 {
        return Err(Error::InvalidParameter("threshold p must be >= 1".into()));
    }
    let (c_size, i_size) = cube_class_sizes(d, p);
    let ceiling = mfis_order_bound(c_size, i_size).min(ENUMERATION_MAX_N as u64) as usize;
    if max_n > ceiling {
        return Err(Error::InvalidParameter(format!(
            "max_n={max_n} exceeds the usable ceiling {ceiling}"
        )));
    }

    let mut oracle = ClassOracle::new(d, p, cfg.clone());
    let names = name_table(d, p, max_n)?;

    let mut found: Vec<(Graph, CatalogEntry)> = Vec::new();
    // level sweep with pruning: skip any graph containing a found entry
    let mut level: Vec<Graph> = if max_n == 0 {
        Vec::new()
    } else {
        vec![Graph::empty(1)?]
    };
    for order in 1..=max_n {
        for g in &level {
            if !oracle.in_class(g)? && is_minimal_forbidden(g, &mut oracle)? {
                let key = canonical_key(g);
                let name = names.get(&key).cloned();
                found.push((
                    g.clone(),
                    CatalogEntry {
                        graph6: key,
                        order,
                        name,
                    },
                ));
            }
        }
        if order == max_n {
            break;
        }
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for parent in &level {
            // a parent containing a found forbidden graph breeds nothing minimal
            if found
                .iter()
                .any(|(m, _)| induced_contains(parent, m).is_some())
            {
                continue;
            }
            for neighborhood in 0u64..1 << order {
                let mut child = parent.disjoint_union(&Graph::empty(1)?)?;
                for v in 0..order {
                    if neighborhood >> v & 1 == 1 {
                        child.add_edge(v, order);
                    }
                }
                let cert = canonical_form(&child);
                next.entry(cert.canonical_graph6)
                    .or_insert_with(|| child.relabel(&cert.relabeling));
            }
        }
        level = next.into_values().collect();
    }

    let mut entries: Vec<CatalogEntry> = found.into_iter().map(|(_, e)| e).collect();
    entries.sort_by(|a, b| (a.order, &a.graph6).cmp(&(b.order, &b.graph6)));
    Ok(MfisCatalog {
        d,
        p,
        max_n,
        version: env!("CARGO_PKG_VERSION").to_string(),
        node_budget: cfg.node_budget,
        entries,
    })
}

/// Known names for catalog annotation: the critical star and, when the
/// threshold matches one of the characterized cases, that family's members.
fn name_table(d: usize, p: usize, max_n: usize) -> Result<HashMap<String, String>> {
    let mut names = HashMap::new();
    let mut add = |g: &Graph, name: String| {
        names.entry(canonical_key(g)).or_insert(name);
    };
    let k = binomial(d, p) + 1;
    if k as usize <= max_n {
        let star = NamedGraphSpec::Star(k as usize);
        add(&star.build()?, star.name());
    }
    if d >= 2 && p + 1 == d {
        for m in star_family(d)?.members {
            add(&m.graph, m.name);
        }
    }
    if d >= 3 && p + 2 == d {
        for m in split_family(d)?.members {
            add(&m.graph, m.name);
        }
    }
    Ok(names)
}

/// Re-verifies a catalog with fresh, unmemoized solver runs: every entry
/// must fail membership and every one-vertex deletion must pass. Returns
/// human-readable issues; an empty list means the catalog is sound.
pub fn verify_catalog(catalog: &MfisCatalog, cfg: &SearchConfig) -> Result<Vec<String>> {
    let oracle = ClassOracle::new(catalog.d, catalog.p, cfg.clone());
    let mut issues = Vec::new();
    for entry in &catalog.entries {
        let g = parse_graph6(&entry.graph6)?;
        if oracle.in_class_fresh(&g)? {
            issues.push(format!("{} is inside the class", entry.graph6));
            continue;
        }
        for v in 0..g.n() {
            if !oracle.in_class_fresh(&g.delete_vertex(v))? {
                issues.push(format!(
                    "{} minus vertex {v} is still outside the class",
                    entry.graph6
                ));
            }
        }
    }
    Ok(issues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraphSpec::*;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn bounds() {
        assert_eq!(mfis_order_bound(4, 4), 81);
        assert_eq!(mfis_order_bound(0, 5), 11);
        assert_eq!(dimension_mfis_bound(3), 49);
    }

    #[test]
    fn membership_basics() {
        let mut oracle = ClassOracle::new(3, 2, cfg());
        assert!(oracle.in_class(&Edgeless(6).build().unwrap()).unwrap());
        assert!(!oracle.in_class(&Star(4).build().unwrap()).unwrap());
        let mut oracle11 = ClassOracle::new(1, 1, cfg());
        assert!(!oracle11.in_class(&Path(3).build().unwrap()).unwrap());
    }

    #[test]
    fn memoization_hits() {
        let mut oracle = ClassOracle::new(2, 1, cfg());
        let g = Cycle(4).build().unwrap();
        let first = oracle.in_class(&g).unwrap();
        // a relabeled copy hits the canonical memo entry
        let relabeled = g.relabel(&[2, 0, 3, 1]);
        let second = oracle.in_class(&relabeled).unwrap();
        assert_eq!(first, second);
        assert_eq!(oracle.hits, 1);
        assert_eq!(oracle.misses, 1);
    }

    #[test]
    fn minimality_examples() {
        let mut oracle21 = ClassOracle::new(2, 1, cfg());
        assert!(is_minimal_forbidden(&Star(3).build().unwrap(), &mut oracle21).unwrap());
        assert!(!is_minimal_forbidden(&Complete(4).build().unwrap(), &mut oracle21).unwrap());
        let mut oracle11 = ClassOracle::new(1, 1, cfg());
        // the four-cycle contains a forbidden path, so it is not minimal
        assert!(!is_minimal_forbidden(&Cycle(4).build().unwrap(), &mut oracle11).unwrap());
        let mut oracle32 = ClassOracle::new(3, 2, cfg());
        assert!(is_minimal_forbidden(&Star(4).build().unwrap(), &mut oracle32).unwrap());
    }

    #[test]
    fn one_one_catalog_is_path_and_matching() {
        let catalog = enumerate_mfis(1, 1, 5, &cfg()).unwrap();
        let names: Vec<Option<String>> =
            catalog.entries.iter().map(|e| e.name.clone()).collect();
        assert_eq!(catalog.entries.len(), 2);
        assert_eq!(catalog.entries[0].order, 3);
        assert_eq!(catalog.entries[1].order, 4);
        // P_3 is the critical star for (1,1); 2K_2 has no family name there
        assert_eq!(names[0].as_deref(), Some("K_{1,2}"));
        assert_eq!(names[1], None);
        let g = parse_graph6(&catalog.entries[1].graph6).unwrap();
        assert!(crate::canon::is_isomorphic(
            &g,
            &Union(vec![Complete(2), Complete(2)]).build().unwrap()
        ));
    }

    #[test]
    fn catalog_text_round_trips() {
        let catalog = enumerate_mfis(1, 1, 4, &cfg()).unwrap();
        let text = catalog.to_text();
        let parsed = MfisCatalog::from_text(&text).unwrap();
        assert_eq!(parsed, catalog);
        // deterministic output
        assert_eq!(enumerate_mfis(1, 1, 4, &cfg()).unwrap().to_text(), text);
    }

    #[test]
    fn catalog_verification_accepts_sound_catalogs() {
        let catalog = enumerate_mfis(1, 1, 4, &cfg()).unwrap();
        assert!(verify_catalog(&catalog, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn ceiling_is_enforced() {
        // (1,1) has split sizes (1,1) and bound 9, capped by the
        // enumeration limit
        assert!(enumerate_mfis(1, 1, 10, &cfg()).is_err());
    }
}
