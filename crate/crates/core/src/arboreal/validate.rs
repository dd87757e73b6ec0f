use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::ArborealDecomposition;
use crate::digraph::{guard_witness, scc_without, Digraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `R` is not an arborescence rooted at `root`.
    NotArborescence(String),
    EmptyBag { node: usize },
    /// `vertex` lies in the bags of both nodes.
    SharedVertex { vertex: usize, nodes: (usize, usize) },
    Uncovered { vertex: usize },
    /// Walk leaving and re-entering the part beyond `arc` outside its guard.
    NotGuarded { arc: usize, walk: Vec<usize> },
    /// The part beyond `arc` is not a strong component of `D \ X_arc`; the
    /// strong component (possibly empty) holding its least vertex is given.
    NotStrongComponent { arc: usize, component: VertexSet },
    /// Child bag of `node` meets the guard of an arc at `node`.
    ChildMeetsGuard { node: usize, child: usize, arc: usize, vertex: usize },
}

impl Violation {
    pub fn describe(&self, d: &Digraph, dec: &ArborealDecomposition) -> String {
        let arc = |i: usize| {
            let a = &dec.arcs[i];
            format!("arc {} -> {}", a.from, a.to)
        };
        let set = |s: &VertexSet| format!("{{{}}}", d.labels_of(s).join(", "));
        match self {
            Violation::NotArborescence(why) => format!("not an arborescence: {why}"),
            Violation::EmptyBag { node } => format!("node {node} has an empty bag"),
            Violation::SharedVertex { vertex, nodes } => {
                format!("vertex {} lies in bags of nodes {} and {}", d.label(*vertex), nodes.0, nodes.1)
            }
            Violation::Uncovered { vertex } => format!("vertex {} lies in no bag", d.label(*vertex)),
            Violation::NotGuarded { arc: i, walk } => {
                let mut s = format!("{} is not guarded; walk", arc(*i));
                for &v in walk {
                    let _ = write!(s, " {}", d.label(v));
                }
                s
            }
            Violation::NotStrongComponent { arc: i, component } => {
                format!("{} does not cut off a strong component; found {}", arc(*i), set(component))
            }
            Violation::ChildMeetsGuard { node, child, arc: i, vertex } => format!(
                "bag of child {child} of node {node} contains {} from the guard of {}",
                d.label(*vertex),
                arc(*i)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub width: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the partition and guardedness conditions, and with `nice` also
/// that every arc cuts off a strong component and child bags avoid the
/// guards around their parent.
///
/// Guardedness is tested on the part beyond each arc minus its guard, so a
/// guard may reuse vertices of the bags below it.
pub fn validate(d: &Digraph, dec: &ArborealDecomposition, nice: bool) -> ValidationReport {
    let mut violations = Vec::new();
    let n = d.vertex_count();

    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (&node, bag) in &dec.bags {
        if bag.is_empty() {
            violations.push(Violation::EmptyBag { node });
        }
        for &v in bag.iter().filter(|&&v| v < n) {
            match owner[v] {
                Some(other) => violations.push(Violation::SharedVertex { vertex: v, nodes: (other, node) }),
                None => owner[v] = Some(node),
            }
        }
    }
    violations.extend((0..n).filter(|&v| owner[v].is_none()).map(|vertex| Violation::Uncovered { vertex }));

    let Some(below) = subtrees(dec, &mut violations) else {
        return ValidationReport {
            width: dec.width(),
            violations,
        };
    };

    for (i, a) in dec.arcs.iter().enumerate() {
        let beyond: VertexSet = below[&a.to].iter().flat_map(|r| dec.bags[r].iter().copied()).collect();
        let outside: VertexSet = beyond.difference(&a.guard).copied().collect();
        if let Ok(Some(walk)) = guard_witness(d, &outside, &a.guard) {
            violations.push(Violation::NotGuarded { arc: i, walk });
        }
        if nice {
            let component = match beyond.iter().find(|v| !a.guard.contains(v)) {
                Some(&first) => {
                    let comps = scc_without(d, &d.mask(&a.guard));
                    let c = comps.component_of(first).expect("kept vertex");
                    comps.components[c].iter().copied().collect()
                }
                None => VertexSet::new(),
            };
            if component != beyond {
                violations.push(Violation::NotStrongComponent { arc: i, component });
            }
        }
    }

    if nice {
        for &node in dec.bags.keys() {
            let incident: Vec<usize> = (0..dec.arcs.len())
                .filter(|&i| dec.arcs[i].from == node || dec.arcs[i].to == node)
                .collect();
            for child in dec.children(node).map(|a| a.to) {
                for &i in &incident {
                    if let Some(&vertex) = dec.bags[&child].intersection(&dec.arcs[i].guard).next() {
                        violations.push(Violation::ChildMeetsGuard { node, child, arc: i, vertex });
                    }
                }
            }
        }
    }

    ValidationReport {
        width: dec.width(),
        violations,
    }
}

/// For every node the set of nodes in its subtree, or `None` (with a
/// violation recorded) if `R` is not an arborescence over the bag nodes.
fn subtrees(dec: &ArborealDecomposition, violations: &mut Vec<Violation>) -> Option<BTreeMap<usize, BTreeSet<usize>>> {
    let mut fail = |why: String| {
        violations.push(Violation::NotArborescence(why));
        None
    };
    if !dec.bags.contains_key(&dec.root) {
        return fail(format!("root {} is not a node", dec.root));
    }
    let mut parent = BTreeMap::new();
    for a in &dec.arcs {
        if !dec.bags.contains_key(&a.from) || !dec.bags.contains_key(&a.to) {
            return fail(format!("arc {} -> {} names an unknown node", a.from, a.to));
        }
        if a.to == dec.root {
            return fail("the root has an incoming arc".into());
        }
        if parent.insert(a.to, a.from).is_some() {
            return fail(format!("node {} has two incoming arcs", a.to));
        }
    }
    // every node must reach the root through parents without repeating
    let mut below: BTreeMap<usize, BTreeSet<usize>> = dec.bags.keys().map(|&r| (r, BTreeSet::from([r]))).collect();
    for &r in dec.bags.keys() {
        let mut cur = r;
        let mut steps = 0;
        while let Some(&p) = parent.get(&cur) {
            below.get_mut(&p).expect("known node").insert(r);
            cur = p;
            steps += 1;
            if steps > dec.bags.len() {
                return fail("the arcs contain a cycle".into());
            }
        }
        if cur != dec.root {
            return fail(format!("node {r} is not reachable from the root"));
        }
    }
    Some(below)
}
