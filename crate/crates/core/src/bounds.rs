//! Dip numbers and the cheap bounds on the wild number.
//!
//! Every color `i` needs `κ(G_i) - 1` connections. A wild edge supplies one
//! connection to each color it helps, never to its own, so the bounds here
//! all compare the connections needed against what edges can supply.

use std::fmt;

use crate::families::{deduce, Deduction, DeductionKind};
use crate::graph::{EdgeColoredGraph, EdgeId, GraphError, WildSet};
use crate::greedy::greedy_wild_set;

/// Dip numbers arranged in non-increasing order. Ordering is lexicographic,
/// which is how potentials are compared.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DipSequence(Vec<usize>);

impl DipSequence {
    pub fn from_values(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DipSequence(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Run-length form: `[(2, 5), (1, 1), (0, 3)]` for `2,2,2,2,2,1,0,0,0`.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &d in &self.0 {
            match runs.last_mut() {
                Some((v, c)) if *v == d => *c += 1,
                _ => runs.push((d, 1)),
            }
        }
        runs
    }
}

impl fmt::Display for DipSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, c)) in self.runs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}^({c})")?;
        }
        Ok(())
    }
}

/// Dip number of every edge of `G/W`, indexed by original edge id. Edges that
/// became loops (including those in `W`) get 0.
pub fn dip_numbers_with(g: &EdgeColoredGraph, wild: &[EdgeId]) -> Vec<usize> {
    let mut ds = g.color_dsus(wild);
    g.edges()
        .iter()
        .map(|e| ds.iter_mut().map(|d| !d.same(e.u, e.v)).filter(|&x| x).count())
        .collect()
}

/// Dip number of every edge of `g`.
pub fn dip_numbers(g: &EdgeColoredGraph) -> Vec<usize> {
    dip_numbers_with(g, &[])
}

/// Number of colors helped by coloring `e` wild.
pub fn dip_number(g: &EdgeColoredGraph, e: EdgeId) -> Result<usize, GraphError> {
    let edge = *g.edge(e)?;
    let mut ds = g.color_dsus(&[]);
    Ok(ds.iter_mut().map(|d| !d.same(edge.u, edge.v)).filter(|&x| x).count())
}

/// Total drop in component count across all colors when `W` is colored wild.
pub fn dip_number_set(g: &EdgeColoredGraph, wild: &WildSet) -> usize {
    let before: usize = g.kappas().iter().sum();
    let after: usize = g.kappas_with(wild).iter().sum();
    before - after
}

pub fn dip_sequence(g: &EdgeColoredGraph) -> DipSequence {
    DipSequence::from_values(dip_numbers(g))
}

/// max_i (κ(G_i) - 1)
pub fn component_lower_bound(g: &EdgeColoredGraph) -> usize {
    g.kappas().iter().map(|k| k - 1).max().unwrap_or(0)
}

/// Σ_i (κ(G_i) - 1)
pub fn component_upper_bound(g: &EdgeColoredGraph) -> usize {
    g.kappas().iter().map(|k| k - 1).sum()
}

/// ⌈cub / (ℓ - 1)⌉. A single color needs nothing, so ℓ = 1 gives 0.
pub fn ceiling_lower_bound(g: &EdgeColoredGraph) -> usize {
    let l = g.colors();
    if l < 2 {
        return 0;
    }
    component_upper_bound(g).div_ceil(l - 1)
}

/// Shortest prefix of `dips` (sorted non-increasing) whose sum reaches
/// `needed`; `None` when even the full sum falls short.
pub fn prefix_cover(dips: &[usize], needed: usize) -> Option<usize> {
    let mut sum = 0;
    if needed == 0 {
        return Some(0);
    }
    for (p, &d) in dips.iter().enumerate() {
        sum += d;
        if sum >= needed {
            return Some(p + 1);
        }
    }
    None
}

/// Smallest `p` whose top-`p` dip sum covers `cub`.
///
/// On a connected graph the non-`i` edges crossing the components of `G_i`
/// always supply at least `κ(G_i) - 1` dips, so the cover exists.
pub fn dip_lower_bound(g: &EdgeColoredGraph) -> usize {
    prefix_cover(dip_sequence(g).values(), component_upper_bound(g))
        .expect("dip sum of a connected graph covers the component upper bound")
}

/// All bounds for one graph, plus the structural deductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub kappas: Vec<usize>,
    pub clb: usize,
    pub cub: usize,
    pub ceiling_lb: usize,
    pub dip_lb: usize,
    pub greedy_ub: usize,
    pub deductions: Vec<Deduction>,
    pub best_lb: usize,
    pub best_ub: usize,
}

pub fn bounds_report(g: &EdgeColoredGraph) -> BoundsReport {
    let kappas = g.kappas();
    let clb = component_lower_bound(g);
    let cub = component_upper_bound(g);
    let ceiling_lb = ceiling_lower_bound(g);
    let dip_lb = dip_lower_bound(g);
    let (greedy_set, _) = greedy_wild_set(g);
    let greedy_ub = greedy_set.len();
    let deductions = deduce(g);

    let mut best_lb = clb.max(ceiling_lb).max(dip_lb);
    let mut best_ub = cub.min(greedy_ub).min(g.n() - 1);
    for d in &deductions {
        best_lb = best_lb.max(d.value);
        if d.kind == DeductionKind::Exact {
            best_ub = best_ub.min(d.value);
        }
    }
    BoundsReport { kappas, clb, cub, ceiling_lb, dip_lb, greedy_ub, deductions, best_lb, best_ub }
}
