use crate::digraph::VertexSet;
use crate::lincut::TerminalSequence;

/// Ordered partitions of a vertex set into non-empty blocks of size at most
/// `r`, each produced exactly once.
///
/// Blocks are chosen front to back; at every level the candidate blocks run
/// through the subsets of the remaining vertices in increasing bitmask order
/// (bit `i` is the `i`-th smallest remaining vertex of the original set).
#[derive(Clone, Debug)]
pub struct OrderedPartitions {
    elements: Vec<usize>,
    r: usize,
    // (still unassigned, block chosen at this level)
    stack: Vec<(u64, u64)>,
    empty_pending: bool,
}

/// Lazily enumerate ordered partitions of `t` with blocks of size at most `r`.
///
/// # Panics
/// If `t` has more than 64 vertices.
pub fn ordered_partitions(t: &VertexSet, r: usize) -> OrderedPartitions {
    assert!(t.len() <= 64, "ordered partitions of more than 64 vertices");
    let elements: Vec<usize> = t.iter().copied().collect();
    let full = if elements.len() == 64 { u64::MAX } else { (1u64 << elements.len()) - 1 };
    OrderedPartitions {
        stack: if elements.is_empty() || r == 0 { Vec::new() } else { vec![(full, 0)] },
        empty_pending: elements.is_empty(),
        elements,
        r,
    }
}

impl OrderedPartitions {
    fn advance(&self, rem: u64, cur: u64) -> u64 {
        let mut next = cur;
        loop {
            next = (next | !rem).wrapping_add(1) & rem;
            if next == 0 || next.count_ones() as usize <= self.r {
                return next;
            }
        }
    }

    fn emit(&self) -> TerminalSequence {
        let blocks = self
            .stack
            .iter()
            .map(|&(_, block)| {
                (0..self.elements.len())
                    .filter(|&i| block >> i & 1 == 1)
                    .map(|i| self.elements[i])
                    .collect()
            })
            .collect();
        TerminalSequence::new(blocks)
    }
}

impl Iterator for OrderedPartitions {
    type Item = TerminalSequence;

    fn next(&mut self) -> Option<TerminalSequence> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(TerminalSequence::default());
        }
        loop {
            let &(rem, cur) = self.stack.last()?;
            let next = self.advance(rem, cur);
            if next == 0 {
                self.stack.pop();
                continue;
            }
            self.stack.last_mut().expect("non-empty").1 = next;
            let left = rem & !next;
            if left == 0 {
                return Some(self.emit());
            }
            self.stack.push((left, 0));
        }
    }
}
