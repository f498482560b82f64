//! Twin partitions and twin reductions.
//!
//! True twins share closed neighborhoods (and are therefore adjacent); open
//! twins share open neighborhoods (and are therefore non-adjacent). The
//! reduction keeps one representative per class. A single pass suffices: a
//! quotient pair with equal quotient neighborhoods would have come from
//! vertices with equal neighborhoods in the original graph.

use crate::bitset;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinMode {
    /// Equal closed neighborhoods N[u].
    TrueTwins,
    /// Equal open neighborhoods N(u).
    OpenTwins,
}

/// Partition into twin classes. Classes are sorted by smallest member and
/// each class lists its members ascending.
pub fn twin_partition(g: &Graph, mode: TwinMode) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut keys: Vec<Vec<u64>> = Vec::with_capacity(n);
    for u in 0..n {
        let mut key = g.row(u).to_vec();
        if mode == TwinMode::TrueTwins {
            bitset::set_bit(&mut key, u);
        }
        keys.push(key);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        match classes.iter_mut().find(|c| keys[c[0]] == keys[u]) {
            Some(class) => class.push(u),
            None => classes.push(vec![u]),
        }
    }
    classes
}

/// A twin reduction: the quotient graph plus the class structure.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    /// `class_of[v]` is the quotient vertex of original vertex `v`.
    pub class_of: Vec<usize>,
    /// Smallest original member of each quotient vertex.
    pub representatives: Vec<usize>,
}

/// Quotient by true-twin classes (the default reduction).
pub fn twin_reduction(g: &Graph) -> Reduction {
    twin_reduction_with(g, TwinMode::TrueTwins)
}

pub fn twin_reduction_with(g: &Graph, mode: TwinMode) -> Reduction {
    let classes = twin_partition(g, mode);
    let mut class_of = vec![0usize; g.n()];
    let mut representatives = Vec::with_capacity(classes.len());
    for (ci, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = ci;
        }
        representatives.push(class[0]);
    }
    let mut reduced = Graph::empty(classes.len()).expect("quotient within cap");
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if g.has_edge(representatives[i], representatives[j]) {
                reduced.add_edge(i, j);
            }
        }
    }
    debug_assert!(reduced.validate().is_ok());
    Reduction {
        graph: reduced,
        class_of,
        representatives,
    }
}

/// Alternates true-twin and open-twin reductions until neither changes the
/// graph. Used to compare reduction notions experimentally.
pub fn twin_reduction_iterated(g: &Graph) -> Graph {
    let mut current = g.clone();
    loop {
        let t = twin_reduction_with(&current, TwinMode::TrueTwins).graph;
        let o = twin_reduction_with(&t, TwinMode::OpenTwins).graph;
        if o.n() == current.n() {
            return o;
        }
        current = o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraphSpec::*;

    #[test]
    fn complete_graph_true_twins() {
        let k4 = Complete(4).build().unwrap();
        assert_eq!(twin_partition(&k4, TwinMode::TrueTwins), vec![vec![0, 1, 2, 3]]);
        let r = twin_reduction(&k4);
        assert_eq!(r.graph.n(), 1);
        assert_eq!(r.class_of, vec![0, 0, 0, 0]);
    }

    #[test]
    fn edgeless_open_twins() {
        let e4 = Edgeless(4).build().unwrap();
        assert_eq!(twin_partition(&e4, TwinMode::OpenTwins), vec![vec![0, 1, 2, 3]]);
        // but no true twins: closed neighborhoods differ
        assert_eq!(twin_partition(&e4, TwinMode::TrueTwins).len(), 4);
    }

    #[test]
    fn four_cycle_twins() {
        let c4 = Cycle(4).build().unwrap();
        assert_eq!(twin_partition(&c4, TwinMode::TrueTwins).len(), 4);
        // opposite vertices share open neighborhoods
        let open = twin_partition(&c4, TwinMode::OpenTwins);
        assert_eq!(open, vec![vec![0, 2], vec![1, 3]]);
        // reduction under the default notion leaves the cycle intact
        assert_eq!(twin_reduction(&c4).graph, c4);
    }

    #[test]
    fn reduction_is_idempotent() {
        for spec in [
            Complete(5),
            Star(4),
            Path(5),
            Union(vec![Complete(2), Complete(3)]),
        ] {
            let g = spec.build().unwrap();
            let once = twin_reduction(&g).graph;
            let twice = twin_reduction(&once).graph;
            assert_eq!(once, twice, "{spec:?}");
        }
    }

    #[test]
    fn iterated_reduction_collapses_mixed_twins() {
        // two disjoint edges: true twins collapse each edge, then the two
        // resulting vertices are open twins
        let g = Union(vec![Complete(2), Complete(2)]).build().unwrap();
        let reduced = twin_reduction_iterated(&g);
        assert_eq!(reduced.n(), 1);
    }
}
