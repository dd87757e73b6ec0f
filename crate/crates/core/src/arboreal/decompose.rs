use std::collections::BTreeMap;

use super::{ArborealDecomposition, ArborealError, Decomposition, LinkedSetCertificate, TreeArc};
use crate::balsep::{balanced_separator, BalancedSeparatorInstance, BalancedSeparatorResult};
use crate::digraph::{scc_without, Digraph, VertexSet};

/// Either a nice arboreal decomposition of width at most `3k - 2`, or a
/// `(k - 1, k - 1)`-linked set of `2k - 1` vertices.
///
/// Starting from the single-node decomposition, the least too-large leaf
/// (node size at least `3k`) is split until none is left. When a leaf's
/// incoming guard turns out to be linked, that guard is returned instead, so
/// the certificate arm can appear even if a decomposition also exists.
pub fn decompose(d: &Digraph, k: usize) -> Result<Decomposition, ArborealError> {
    if d.is_empty() {
        return Err(ArborealError::EmptyGraph);
    }
    if k == 0 {
        return Err(ArborealError::ZeroParameter);
    }
    let mut dec = ArborealDecomposition::trivial(d.vertex_count());
    // incoming arc of each node, by node id
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut leaves: Vec<usize> = vec![0];

    loop {
        let Some(pos) = leaves.iter().position(|&r| dec.node_size(r) >= 3 * k) else {
            break;
        };
        let r0 = leaves.remove(pos);
        let t = parent.get(&r0).map(|&a| dec.arcs[a].guard.clone()).unwrap_or_default();
        let inst = BalancedSeparatorInstance::new(d, &t, k - 1, k - 1);
        let z_prime = match balanced_separator(&inst)? {
            BalancedSeparatorResult::Separator(z) => z,
            BalancedSeparatorResult::Linked => {
                debug_assert_eq!(t.len(), 2 * k - 1);
                return Ok(Decomposition::Certificate(LinkedSetCertificate {
                    terminals: t,
                    k: k - 1,
                    r: k - 1,
                }));
            }
        };
        let w = dec.bags[&r0].clone();
        let v = *w.difference(&z_prime).next().expect("a too-large leaf keeps vertices outside Z'");
        let mut z = z_prime;
        z.insert(v);

        let c = scc_without(d, &d.mask(&z));
        let zt: VertexSet = z.union(&t).copied().collect();
        let b = scc_without(d, &d.mask(&zt));
        let mut spread = 0;
        for comp in &b.components {
            let inside = comp.iter().filter(|v| w.contains(v)).count();
            assert!(inside == 0 || inside == comp.len(), "leaf bag is not guarded by its incoming guard");
            if inside == 0 {
                continue;
            }
            spread += inside;
            let host = c.component_of(comp[0]).expect("component avoids Z");
            let mut guard = z.clone();
            guard.extend(c.components[host].iter().filter(|v| t.contains(v)));
            let id = dec.bags.keys().next_back().expect("non-empty") + 1;
            dec.bags.insert(id, comp.iter().copied().collect());
            parent.insert(id, dec.arcs.len());
            dec.arcs.push(TreeArc { from: r0, to: id, guard });
            leaves.push(id);
        }
        let kept: VertexSet = w.intersection(&z).copied().collect();
        debug_assert_eq!(spread + kept.len(), w.len());
        dec.bags.insert(r0, kept);

        debug_assert!(dec.arcs.iter().all(|a| a.guard.len() <= 2 * k - 1), "guard above 2k - 1");
        debug_assert!(
            dec.bags.keys().filter(|r| !leaves.contains(r)).all(|&r| dec.node_size(r) < 3 * k),
            "inner node above 3k - 1"
        );
    }
    Ok(Decomposition::Decomposition(dec))
}
