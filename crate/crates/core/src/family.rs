//! Forbidden induced subgraph families for the two explicit
//! characterizations.
//!
//! The star family characterizes threshold `d-1` on graphs without isolated
//! vertices; the split family characterizes threshold `d-2` on twin-reduced
//! graphs without isolated or universal vertices. Family sizes use the
//! convention `C(n,2) = 0` for `n < 2`, and a clique index of 0 denotes the
//! empty graph, so the row `K_i + ~K_...` at `i = 0` degenerates to a plain
//! independent set.

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induced::induced_contains;
use crate::named::NamedGraphSpec::{self, *};
use crate::patterns::binomial;

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub name: String,
    pub graph: Graph,
}

/// A deduplicated list of forbidden graphs; no two members are isomorphic.
#[derive(Clone, Debug)]
pub struct ForbiddenFamily {
    pub d: usize,
    pub members: Vec<FamilyMember>,
}

/// A family member found inside a graph, with its embedding.
#[derive(Clone, Debug)]
pub struct ForbWitness {
    pub member_name: String,
    pub member: Graph,
    pub embedding: Vec<usize>,
}

impl ForbiddenFamily {
    fn from_specs(d: usize, specs: Vec<NamedGraphSpec>) -> Result<ForbiddenFamily> {
        let mut members: Vec<FamilyMember> = Vec::new();
        let mut keys: Vec<String> = Vec::new();
        for spec in specs {
            let graph = spec.build()?;
            let key = canonical_key(&graph);
            match keys.iter().position(|k| *k == key) {
                Some(i) => {
                    // rows can collide for small d; keep both names
                    let name = spec.name();
                    if !members[i].name.split('=').any(|n| n == name) {
                        members[i].name = format!("{}={}", members[i].name, name);
                    }
                }
                None => {
                    keys.push(key);
                    members.push(FamilyMember {
                        name: spec.name(),
                        graph,
                    });
                }
            }
        }
        Ok(ForbiddenFamily { d, members })
    }

    /// First member occurring as an induced subgraph of `g`, or `None` when
    /// `g` avoids the whole family.
    pub fn find_violation(&self, g: &Graph) -> Option<ForbWitness> {
        for member in &self.members {
            if member.graph.n() > g.n() {
                continue;
            }
            if let Some(embedding) = induced_contains(g, &member.graph) {
                return Some(ForbWitness {
                    member_name: member.name.clone(),
                    member: member.graph.clone(),
                    embedding,
                });
            }
        }
        None
    }

    pub fn member_named(&self, name: &str) -> Option<&FamilyMember> {
        self.members
            .iter()
            .find(|m| m.name.split('=').any(|n| n == name))
    }
}

/// The forbidden family for threshold `d-1`: independent set of order
/// `d+1`, the path on four vertices, its one-isolated-vertex variant and
/// the four-cycle.
pub fn star_family(d: usize) -> Result<ForbiddenFamily> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "star family needs d >= 2, got {d}"
        )));
    }
    ForbiddenFamily::from_specs(
        d,
        vec![
            Edgeless(d + 1),
            Path(4),
            Union(vec![Edgeless(1), Path(3)]),
            Cycle(4),
        ],
    )
}

/// The forbidden family for threshold `d-2` on twin-reduced graphs.
pub fn split_family(d: usize) -> Result<ForbiddenFamily> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!(
            "split family needs d >= 3, got {d}"
        )));
    }
    let iso = |n: u64| Edgeless(n as usize);
    let pad = |spec: NamedGraphSpec, n: u64| Union(vec![spec, iso(n)]);
    let mut specs: Vec<NamedGraphSpec> = vec![
        Union(vec![Complete(2), Complete(2)]),
        Cycle(4),
        Cycle(5),
        K23PlusEdge,
        CompleteMinusEdge(5),
        TriangleApex { s: d - 2 },
        TrianglePendants { s: d - 2 },
        DiamondPendants { s: d - 2 },
    ];
    // cliques with pendants: i = 2 (a star) and 4 <= i <= d+1
    specs.push(Star(d));
    for i in 4..=d + 1 {
        let s = d + 1 - i;
        specs.push(if s == 0 {
            Complete(i)
        } else {
            PendantClique { r: i, s }
        });
    }
    specs.push(pad(Complete(2), binomial(d - 1, 2) + 1));
    specs.push(pad(Complete(3), binomial(d - 2, 2) + 1));
    specs.push(pad(Path(4), binomial(d - 2, 2) + 1));
    specs.push(pad(TriangleApex { s: 1 }, binomial(d - 3, 2) + 1));
    specs.push(pad(TrianglePendants { s: 1 }, binomial(d - 3, 2) + 1));
    specs.push(pad(CompleteMinusEdge(4), binomial(d - 3, 2) + 1));
    // bare cliques with padding: i = 0 (pure independent set) and 4 <= i <= d
    specs.push(iso(binomial(d, 2) + 1));
    for i in 4..=d {
        specs.push(pad(Complete(i), binomial(d - i, 2) + 1));
    }
    ForbiddenFamily::from_specs(d, specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn star_family_orders() {
        let fam = star_family(2).unwrap();
        let mut orders: Vec<usize> = fam.members.iter().map(|m| m.graph.n()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![3, 4, 4, 4]);
        let fam5 = star_family(5).unwrap();
        assert!(fam5.member_named("~K_6").is_some());
        assert!(star_family(1).is_err());
    }

    #[test]
    fn star_family_members_pairwise_nonisomorphic() {
        for d in 2..=5 {
            let fam = star_family(d).unwrap();
            assert_eq!(fam.members.len(), 4);
            for i in 0..fam.members.len() {
                for j in i + 1..fam.members.len() {
                    assert!(!is_isomorphic(
                        &fam.members[i].graph,
                        &fam.members[j].graph
                    ));
                }
            }
        }
    }

    #[test]
    fn split_family_d3_instantiation() {
        let fam = split_family(3).unwrap();
        // the clique-with-pendants row yields the star and the plain K_4
        assert!(fam.member_named("K_{1,3}").is_some());
        assert!(fam.member_named("K_4").is_some());
        // the final row contributes only the independent set of order 4
        assert!(fam.member_named("~K_4").is_some());
        assert!(fam.member_named("K_4+~K_1").is_none());
        // regression constant: 17 members after dedup at d = 3
        assert_eq!(fam.members.len(), 17);
    }

    #[test]
    fn split_family_members_pairwise_nonisomorphic() {
        for d in 3..=5 {
            let fam = split_family(d).unwrap();
            for i in 0..fam.members.len() {
                for j in i + 1..fam.members.len() {
                    assert!(
                        !is_isomorphic(&fam.members[i].graph, &fam.members[j].graph),
                        "d={d}: {} vs {}",
                        fam.members[i].name,
                        fam.members[j].name
                    );
                }
            }
        }
    }

    #[test]
    fn violations_are_found_and_verified() {
        use crate::induced::check_embedding;
        let fam = star_family(3).unwrap();
        // a clique avoids all four members
        let k3 = Complete(3).build().unwrap();
        assert!(fam.find_violation(&k3).is_none());
        // the path on four vertices is itself a member
        let p4 = Path(4).build().unwrap();
        let w = fam.find_violation(&p4).unwrap();
        assert_eq!(w.member_name, "P_4");
        assert!(check_embedding(&p4, &w.member, &w.embedding));
        // an independent set of order d+1 trips the edgeless member
        let e4 = Edgeless(4).build().unwrap();
        let w = fam.find_violation(&e4).unwrap();
        assert_eq!(w.member_name, "~K_4");
    }
}
