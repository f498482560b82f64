//! Constructors for the named parameterized graphs used by the forbidden
//! families: cliques, paths, cycles, stars, near-cliques, pendant
//! attachments and disjoint unions.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

/// A symbolic description of a graph.
///
/// Vertex order of the built graph: base-graph vertices first, then added
/// vertices grouped by attachment point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraphSpec {
    /// K_n
    Complete(usize),
    /// K̄_n, written `~K_n`
    Edgeless(usize),
    /// P_n
    Path(usize),
    /// C_n, n >= 3
    Cycle(usize),
    /// K_{1,t}: center 0, t leaves
    Star(usize),
    /// K_n - e, n >= 2; the missing edge is (0,1)
    CompleteMinusEdge(usize),
    /// K_{2,3} plus an edge joining the two degree-3 vertices
    K23PlusEdge,
    /// K_r^{+(s)}: s pendant vertices attached to vertex 0 of K_r
    PendantClique { r: usize, s: usize },
    /// K_3^{+(s,1)}: s pendants on vertex 0, one extra vertex adjacent to
    /// vertices 1 and 2
    TriangleApex { s: usize },
    /// K_3^{+(s,1,1)}: s pendants on vertex 0, one pendant on each of
    /// vertices 1 and 2
    TrianglePendants { s: usize },
    /// (K_4-e)^{+(s)}: s pendants attached to a degree-3 vertex of K_4-e
    DiamondPendants { s: usize },
    /// Disjoint union of the parts, in order
    Union(Vec<NamedGraphSpec>),
}

use NamedGraphSpec::*;

impl NamedGraphSpec {
    pub fn build(&self) -> Result<Graph> {
        let g = match *self {
            Complete(n) => {
                let mut g = Graph::empty(n)?;
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v);
                    }
                }
                g
            }
            Edgeless(n) => Graph::empty(n)?,
            Path(n) => {
                let mut g = Graph::empty(n)?;
                for u in 1..n {
                    g.add_edge(u - 1, u);
                }
                g
            }
            Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter(format!("C_{n} needs n >= 3")));
                }
                let mut g = Graph::empty(n)?;
                for u in 0..n {
                    g.add_edge(u, (u + 1) % n);
                }
                g
            }
            Star(t) => {
                let mut g = Graph::empty(t + 1)?;
                for leaf in 1..=t {
                    g.add_edge(0, leaf);
                }
                g
            }
            CompleteMinusEdge(n) => {
                if n < 2 {
                    return Err(Error::InvalidParameter(format!("K_{n}-e needs n >= 2")));
                }
                let mut g = Complete(n).build()?;
                g.remove_edge(0, 1);
                g
            }
            K23PlusEdge => Graph::from_edges(
                5,
                &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
            )?,
            PendantClique { r, s } => {
                let mut g = Complete(r).build()?.disjoint_union(&Graph::empty(s)?)?;
                if s > 0 && r == 0 {
                    return Err(Error::InvalidParameter(
                        "pendants need an attachment vertex".into(),
                    ));
                }
                for p in r..r + s {
                    g.add_edge(0, p);
                }
                g
            }
            TriangleApex { s } => {
                let mut g = Complete(3).build()?.disjoint_union(&Graph::empty(s + 1)?)?;
                for p in 3..3 + s {
                    g.add_edge(0, p);
                }
                g.add_edge(1, 3 + s);
                g.add_edge(2, 3 + s);
                g
            }
            TrianglePendants { s } => {
                let mut g = Complete(3).build()?.disjoint_union(&Graph::empty(s + 2)?)?;
                for p in 3..3 + s {
                    g.add_edge(0, p);
                }
                g.add_edge(1, 3 + s);
                g.add_edge(2, 4 + s);
                g
            }
            DiamondPendants { s } => {
                // vertices 0,1 have degree 3; the missing edge is (2,3)
                let mut g = Graph::from_edges(
                    4,
                    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
                )?
                .disjoint_union(&Graph::empty(s)?)?;
                for p in 4..4 + s {
                    g.add_edge(0, p);
                }
                g
            }
            Union(ref parts) => {
                let mut g = Graph::empty(0)?;
                for part in parts {
                    g = g.disjoint_union(&part.build()?)?;
                }
                g
            }
        };
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Compact whitespace-free name, e.g. `K_5-e`, `K_3^+(2,1)`, `2K_2`,
    /// `K_2+~K_4`.
    pub fn name(&self) -> String {
        match self {
            Complete(n) => format!("K_{n}"),
            Edgeless(n) => format!("~K_{n}"),
            Path(n) => format!("P_{n}"),
            Cycle(n) => format!("C_{n}"),
            Star(t) => format!("K_{{1,{t}}}"),
            CompleteMinusEdge(n) => format!("K_{n}-e"),
            K23PlusEdge => "K_{2,3}+e".into(),
            PendantClique { r, s } => format!("K_{r}^+({s})"),
            TriangleApex { s } => format!("K_3^+({s},1)"),
            TrianglePendants { s } => format!("K_3^+({s},1,1)"),
            DiamondPendants { s } => format!("(K_4-e)^+({s})"),
            Union(parts) => {
                // collapse runs of identical parts: K_2+K_2 -> 2K_2
                let mut pieces: Vec<String> = Vec::new();
                let mut i = 0;
                while i < parts.len() {
                    let mut j = i;
                    while j < parts.len() && parts[j] == parts[i] {
                        j += 1;
                    }
                    let base = parts[i].name();
                    if j - i > 1 {
                        pieces.push(format!("{}{}", j - i, base));
                    } else {
                        pieces.push(base);
                    }
                    i = j;
                }
                pieces.join("+")
            }
        }
    }
}

impl fmt::Display for NamedGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Splits on `+` at union level. `+e` (the K_{2,3}+e suffix) and `^+(`
/// (pendant markers) are not separators.
fn split_union(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut parts = Vec::new();
    let mut start = 0;
    let mut depth = 0usize;
    for i in 0..bytes.len() {
        match bytes[i] {
            b'(' | b'{' => depth += 1,
            b')' | b'}' => depth = depth.saturating_sub(1),
            b'+' if depth == 0 => {
                let prev = if i > 0 { bytes[i - 1] } else { 0 };
                let next = if i + 1 < bytes.len() { bytes[i + 1] } else { 0 };
                if prev != b'^' && next != b'e' && next != b'(' {
                    parts.push(&s[start..i]);
                    start = i + 1;
                }
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_atom(s: &str) -> Result<NamedGraphSpec> {
    let err = |msg: &str| Error::InvalidParameter(format!("cannot parse graph spec {s:?}: {msg}"));
    // multiplicity prefix: 2K_2
    let digits = s.chars().take_while(|c| c.is_ascii_digit()).count();
    if digits > 0 && s.len() > digits {
        let count: usize = s[..digits].parse().map_err(|_| err("bad multiplier"))?;
        if count == 0 {
            return Err(err("zero multiplier"));
        }
        let inner = parse_atom(&s[digits..])?;
        return Ok(if count == 1 {
            inner
        } else {
            Union(vec![inner; count])
        });
    }
    if s == "K_{2,3}+e" {
        return Ok(K23PlusEdge);
    }
    if let Some(rest) = s.strip_prefix("(K_4-e)^+(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| err("missing )"))?;
        return Ok(DiamondPendants {
            s: inner.parse().map_err(|_| err("bad pendant count"))?,
        });
    }
    if let Some(rest) = s.strip_prefix("K_3^+(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| err("missing )"))?;
        let nums: Vec<&str> = inner.split(',').collect();
        let first: usize = nums[0].parse().map_err(|_| err("bad pendant count"))?;
        return match nums.len() {
            1 => Ok(PendantClique { r: 3, s: first }),
            2 if nums[1] == "1" => Ok(TriangleApex { s: first }),
            3 if nums[1] == "1" && nums[2] == "1" => Ok(TrianglePendants { s: first }),
            _ => Err(err("unsupported K_3 pendant pattern")),
        };
    }
    if let Some(rest) = s.strip_prefix("~K_") {
        return Ok(Edgeless(rest.parse().map_err(|_| err("bad order"))?));
    }
    if let Some(rest) = s.strip_prefix("P_") {
        return Ok(Path(rest.parse().map_err(|_| err("bad order"))?));
    }
    if let Some(rest) = s.strip_prefix("C_") {
        return Ok(Cycle(rest.parse().map_err(|_| err("bad order"))?));
    }
    if let Some(rest) = s.strip_prefix("K_{1,") {
        let inner = rest.strip_suffix('}').ok_or_else(|| err("missing }"))?;
        return Ok(Star(inner.parse().map_err(|_| err("bad leaf count"))?));
    }
    if let Some(rest) = s.strip_prefix("K_") {
        if let Some(order) = rest.strip_suffix("-e") {
            return Ok(CompleteMinusEdge(
                order.parse().map_err(|_| err("bad order"))?,
            ));
        }
        if let Some((order, pend)) = rest.split_once("^+(") {
            let inner = pend.strip_suffix(')').ok_or_else(|| err("missing )"))?;
            return Ok(PendantClique {
                r: order.parse().map_err(|_| err("bad order"))?,
                s: inner.parse().map_err(|_| err("bad pendant count"))?,
            });
        }
        return Ok(Complete(rest.parse().map_err(|_| err("bad order"))?));
    }
    Err(err("unknown constructor"))
}

impl FromStr for NamedGraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidParameter("empty graph spec".into()));
        }
        let parts = split_union(s);
        if parts.len() == 1 {
            parse_atom(parts[0])
        } else {
            let mut specs = Vec::new();
            for part in parts {
                match parse_atom(part)? {
                    Union(inner) => specs.extend(inner),
                    spec => specs.push(spec),
                }
            }
            Ok(Union(specs))
        }
    }
}
