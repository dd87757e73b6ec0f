use super::{ArborealError, LinkedSetCertificate};
use crate::digraph::{scc_without, Digraph, VertexSet};

/// The strong component of `D \ Z` holding more than `r` terminals.
///
/// For a `(k, r)`-linked certificate with `|T| ≤ 2r + 1` this is well defined
/// whenever `|Z| ≤ k`, and shrinks as `Z` grows.
pub fn haven_eval(d: &Digraph, cert: &LinkedSetCertificate, z: &VertexSet) -> Result<VertexSet, ArborealError> {
    d.check_set(z)?;
    d.check_set(&cert.terminals)?;
    if z.len() > cert.k {
        return Err(ArborealError::BudgetExceeded {
            size: z.len(),
            budget: cert.k,
        });
    }
    let comps = scc_without(d, &d.mask(z));
    let counts = comps.counts_in(&d.mask(&cert.terminals));
    let mut heavy = (0..comps.len()).filter(|&c| counts[c] > cert.r);
    match (heavy.next(), heavy.next()) {
        (Some(c), None) => Ok(comps.components[c].iter().copied().collect()),
        _ => Err(ArborealError::NoHavenComponent { r: cert.r }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn whole_graph_for_empty_query() {
        let d = examples::bicycle(5);
        let cert = LinkedSetCertificate {
            terminals: [0, 1, 2].into(),
            k: 1,
            r: 1,
        };
        assert_eq!(haven_eval(&d, &cert, &VertexSet::new()).unwrap(), (0..5).collect());
    }

    #[test]
    fn k5_minus_two() {
        let d = examples::biclique(5);
        let cert = LinkedSetCertificate {
            terminals: (0..5).collect(),
            k: 2,
            r: 2,
        };
        let small = haven_eval(&d, &cert, &[0].into()).unwrap();
        let big = haven_eval(&d, &cert, &[0, 1].into()).unwrap();
        assert_eq!(big, [2, 3, 4].into());
        assert!(big.is_subset(&small));
        assert!(matches!(
            haven_eval(&d, &cert, &[0, 1, 2].into()),
            Err(ArborealError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn corrupt_certificate() {
        let d = Digraph::from_index_edges(3, []);
        let cert = LinkedSetCertificate {
            terminals: (0..3).collect(),
            k: 1,
            r: 1,
        };
        assert_eq!(haven_eval(&d, &cert, &VertexSet::new()), Err(ArborealError::NoHavenComponent { r: 1 }));
    }
}
