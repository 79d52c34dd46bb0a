//! Greedy construction of a color-connecting set.
//!
//! Each round colors wild one edge of the current quotient `G/W`: among the
//! edges of maximal dip number, the one whose contraction leaves the
//! lexicographically greatest dip sequence (its *potential*). Remaining ties
//! go to the smallest original edge id.

use crate::bounds::{dip_numbers_with, DipSequence};
use crate::graph::{EdgeColoredGraph, EdgeId, GraphError, QuotientGraph, WildSet};

/// One maximal-dip edge considered in a round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub edge: EdgeId,
    /// Dip number of every original edge after also contracting `edge`
    /// (loops read 0). Sorting this row gives the potential.
    pub row: Vec<usize>,
    pub potential: DipSequence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    /// Wild set before this round.
    pub wild_before: Vec<EdgeId>,
    /// Dip number of every original edge in `G/W` (loops read 0).
    pub dips: Vec<usize>,
    pub max_dip: usize,
    pub candidates: Vec<Candidate>,
    pub selected: EdgeId,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GreedyTrace {
    /// Edges in the order they were colored wild.
    pub chosen: Vec<EdgeId>,
    pub steps: Vec<GreedyStep>,
}

/// Potential of quotient edge `e`: the dip sequence of `q/e`, padded with
/// one 0 per original edge already dropped as a loop.
pub fn potential(q: &QuotientGraph, e: EdgeId) -> Result<DipSequence, GraphError> {
    q.graph.edge(e)?;
    let mut values = dip_numbers_with(&q.graph, &[e]);
    values.extend(std::iter::repeat_n(0, q.dropped.len()));
    Ok(DipSequence::from_values(values))
}

pub fn greedy_wild_set(g: &EdgeColoredGraph) -> (WildSet, GreedyTrace) {
    let mut chosen: Vec<EdgeId> = Vec::new();
    let mut trace = GreedyTrace::default();
    loop {
        let dips = dip_numbers_with(g, &chosen);
        let max_dip = dips.iter().copied().max().unwrap_or(0);
        // A color that is still split has some crossing edge of another
        // color (G is connected), so max_dip == 0 means we are done.
        if max_dip == 0 {
            break;
        }
        let mut candidates = Vec::new();
        let mut wild = chosen.clone();
        for edge in (0..g.m()).filter(|&e| dips[e] == max_dip) {
            wild.push(edge);
            let row = dip_numbers_with(g, &wild);
            wild.pop();
            let potential = DipSequence::from_values(row.clone());
            candidates.push(Candidate { edge, row, potential });
        }
        let mut best = 0;
        for (k, c) in candidates.iter().enumerate().skip(1) {
            if c.potential > candidates[best].potential {
                best = k;
            }
        }
        let selected = candidates[best].edge;
        trace.steps.push(GreedyStep {
            wild_before: chosen.clone(),
            dips,
            max_dip,
            candidates,
            selected,
        });
        chosen.push(selected);
    }
    trace.chosen = chosen.clone();
    (WildSet::from_ids(chosen), trace)
}
