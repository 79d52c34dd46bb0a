//! Exact wild numbers.
//!
//! [`wild_brute`] enumerates edge subsets by size and serves as the oracle.
//! [`wild_exact`] answers the closed-form cases directly, colors every
//! bridge wild, solves each block on its own over the full palette, and runs
//! a branch-and-bound search per block.
//!
//! The search branches include-then-exclude on one edge at a time. State is
//! the wild set `W` so far plus a set of excluded edges. At every node:
//!
//! * candidates are the non-excluded edges with positive dip in `G/W`, one
//!   representative per parallel class of `G/W` (parallel quotient edges are
//!   interchangeable as wild edges);
//! * the node is infeasible if some color stays split even with every
//!   candidate added;
//! * the node is pruned when `|W|` plus the dip lower bound of `G/W` over the
//!   candidates reaches the incumbent, which starts as the greedy set.
//!
//! The branching edge is the highest-dip candidate crossing the component
//! (of any color) that has the fewest crossing candidates.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{component_upper_bound, prefix_cover};
use crate::dsu::DisjointSet;
use crate::graph::{EdgeColoredGraph, EdgeId, WildSet};
use crate::greedy::greedy_wild_set;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("no color-connecting set of size at most {cap}")]
    CapExceeded { cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Shortcut,
    Blocks,
    BranchBound,
    Brute,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Shortcut => "shortcut",
            Method::Blocks => "blocks",
            Method::BranchBound => "branch_bound",
            Method::Brute => "brute",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub wild: usize,
    pub witness: WildSet,
    pub method: Method,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Answer single-color, non-surjective and two-color graphs in closed form.
    pub shortcuts: bool,
    /// Force bridges and split into blocks before searching.
    pub decompose: bool,
    /// Worker threads for solving blocks; 1 keeps everything on the caller's thread.
    pub threads: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { shortcuts: true, decompose: true, threads: 1 }
    }
}

impl ExactOptions {
    pub fn search_only() -> Self {
        ExactOptions { shortcuts: false, decompose: false, threads: 1 }
    }
}

/// Smallest color-connecting set by exhaustive enumeration in increasing
/// size. Bridges are placed in every candidate set when at least two colors
/// are all in use, since every color-connecting set must contain them.
pub fn wild_brute(g: &EdgeColoredGraph, cap: Option<usize>) -> Result<ExactResult, ExactError> {
    let forced: Vec<EdgeId> = if g.colors() >= 2 && g.is_surjective() {
        g.bridges().into_iter().collect()
    } else {
        Vec::new()
    };
    let free: Vec<EdgeId> = (0..g.m()).filter(|e| !forced.contains(e)).collect();
    let limit = cap.unwrap_or(g.n() - 1).min(g.m());
    let mut checked = 0u64;
    for size in forced.len()..=limit {
        for extra in free.iter().copied().combinations(size - forced.len()) {
            checked += 1;
            let w: WildSet = forced.iter().copied().chain(extra).collect();
            if g.is_color_connected(&w) {
                return Ok(ExactResult { wild: size, witness: w, method: Method::Brute, nodes_explored: checked });
            }
        }
    }
    Err(ExactError::CapExceeded { cap: limit })
}

pub fn wild_exact(g: &EdgeColoredGraph) -> ExactResult {
    wild_exact_with(g, &ExactOptions::default())
}

pub fn wild_exact_with(g: &EdgeColoredGraph, opts: &ExactOptions) -> ExactResult {
    if opts.shortcuts {
        if let Some(r) = shortcut(g) {
            return r;
        }
    }
    if !opts.decompose {
        let (wild, witness, nodes) = search(g, None);
        return ExactResult { wild, witness, method: Method::BranchBound, nodes_explored: nodes };
    }

    let forced: Vec<EdgeId> = if g.colors() >= 2 && g.is_surjective() {
        g.bridges().into_iter().collect()
    } else {
        Vec::new()
    };
    let blocks: Vec<Vec<EdgeId>> = g
        .blocks()
        .into_iter()
        .map(|b| b.edges)
        .filter(|edges| !(edges.len() == 1 && forced.contains(&edges[0])))
        .collect();

    let solve_block = |edges: &Vec<EdgeId>| -> (usize, Vec<EdgeId>, u64) {
        let (sub, _) = g.edge_subgraph(edges);
        let r = if opts.shortcuts {
            shortcut(&sub).unwrap_or_else(|| {
                let (wild, witness, nodes) = search(&sub, None);
                ExactResult { wild, witness, method: Method::BranchBound, nodes_explored: nodes }
            })
        } else {
            let (wild, witness, nodes) = search(&sub, None);
            ExactResult { wild, witness, method: Method::BranchBound, nodes_explored: nodes }
        };
        (r.wild, r.witness.iter().map(|local| edges[local]).collect(), r.nodes_explored)
    };

    let parts: Vec<(usize, Vec<EdgeId>, u64)> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| blocks.par_iter().map(solve_block).collect())
    } else {
        blocks.iter().map(solve_block).collect()
    };

    let mut witness: WildSet = forced.iter().copied().collect();
    let mut wild = forced.len();
    let mut nodes = 0;
    for (w, ids, n) in parts {
        wild += w;
        nodes += n;
        witness.extend(ids);
    }
    let method = if blocks.len() + forced.len() > 1 { Method::Blocks } else { Method::BranchBound };
    ExactResult { wild, witness, method, nodes_explored: nodes }
}

/// Whether some color-connecting set has at most `k` edges.
pub fn decide_k_wild(g: &EdgeColoredGraph, k: usize) -> bool {
    if k + 1 >= g.n() {
        return true;
    }
    if let Some(r) = shortcut(g) {
        return r.wild <= k;
    }
    let (greedy, _) = greedy_wild_set(g);
    if greedy.len() <= k {
        return true;
    }
    let (wild, _, _) = search(g, Some(k + 1));
    wild <= k
}

fn shortcut(g: &EdgeColoredGraph) -> Option<ExactResult> {
    let done = |wild: usize, witness: WildSet| ExactResult { wild, witness, method: Method::Shortcut, nodes_explored: 0 };
    if !g.is_surjective() {
        // An unused color is spanned by W alone.
        let tree: WildSet = g.spanning_tree().into_iter().collect();
        return Some(done(tree.len(), tree));
    }
    match g.colors() {
        1 => Some(done(0, WildSet::empty())),
        2 => {
            // Every wild edge helps at most the other color, and connecting
            // forests of the two colors use disjoint edges.
            let mut witness = WildSet::empty();
            for color in 0..2 {
                let mut d = g.color_dsu(color, std::iter::empty());
                for (id, e) in g.edges().iter().enumerate() {
                    if d.union(e.u, e.v) {
                        witness.insert(id);
                    }
                }
            }
            debug_assert_eq!(witness.len(), component_upper_bound(g));
            Some(done(witness.len(), witness))
        }
        _ => None,
    }
}

struct Search<'a> {
    g: &'a EdgeColoredGraph,
    base: Vec<DisjointSet>,
    best: usize,
    best_set: Option<Vec<EdgeId>>,
    stop_at_first: bool,
    nodes: u64,
}

/// Branch-and-bound over `g`. With `bound = Some(b)` only sets smaller than
/// `b` are sought and the first one found ends the search; otherwise the
/// incumbent starts from the greedy set and the optimum is returned.
fn search(g: &EdgeColoredGraph, bound: Option<usize>) -> (usize, WildSet, u64) {
    let base = g.color_dsus(&[]);
    let mut s = match bound {
        Some(b) => Search { g, base, best: b, best_set: None, stop_at_first: true, nodes: 0 },
        None => {
            let (greedy, _) = greedy_wild_set(g);
            Search { g, base, best: greedy.len(), best_set: Some(greedy.ids()), stop_at_first: false, nodes: 0 }
        }
    };
    let mut chosen = Vec::new();
    let mut excluded = vec![false; g.m()];
    s.node(&mut chosen, &mut excluded);
    match s.best_set {
        Some(set) => (set.len(), WildSet::from_ids(set), s.nodes),
        None => (s.best, WildSet::empty(), s.nodes),
    }
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.stop_at_first && self.best_set.is_some()
    }

    fn node(&mut self, chosen: &mut Vec<EdgeId>, excluded: &mut [bool]) {
        self.nodes += 1;
        let g = self.g;
        let edges = g.edges();

        let mut colors = self.base.clone();
        let mut classes = DisjointSet::new(g.n());
        for &id in chosen.iter() {
            let e = &edges[id];
            classes.union(e.u, e.v);
            for d in colors.iter_mut() {
                d.union(e.u, e.v);
            }
        }
        let needed: usize = colors.iter().map(|d| d.count() - 1).sum();
        if needed == 0 {
            if chosen.len() < self.best {
                self.best = chosen.len();
                self.best_set = Some(chosen.clone());
            }
            return;
        }
        if chosen.len() + 1 >= self.best {
            return;
        }

        // One representative per parallel class of G/W, with its dip.
        let mut reps: Vec<(EdgeId, usize)> = Vec::new();
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        for (id, e) in edges.iter().enumerate() {
            if excluded[id] {
                continue;
            }
            let (a, b) = (classes.find(e.u), classes.find(e.v));
            if a == b {
                continue;
            }
            let dip = colors.iter_mut().map(|d| !d.same(e.u, e.v)).filter(|&x| x).count();
            if dip == 0 || seen.insert((a.min(b), a.max(b)), ()).is_some() {
                continue;
            }
            reps.push((id, dip));
        }

        // Every split color must be joinable by the candidates.
        let mut max_need = 0;
        for d in colors.iter() {
            if d.count() == 1 {
                continue;
            }
            max_need = max_need.max(d.count() - 1);
            let mut probe = d.clone();
            for &(id, _) in &reps {
                probe.union(edges[id].u, edges[id].v);
            }
            if probe.count() > 1 {
                return;
            }
        }

        let mut dips: Vec<usize> = reps.iter().map(|&(_, d)| d).collect();
        dips.sort_unstable_by(|a, b| b.cmp(a));
        let Some(cover) = prefix_cover(&dips, needed) else {
            return;
        };
        if chosen.len() + cover.max(max_need) >= self.best {
            return;
        }

        let pick = self.branch_edge(&mut colors, &reps);

        chosen.push(pick);
        self.node(chosen, excluded);
        chosen.pop();
        if self.done() {
            return;
        }

        // Excluding `pick` excludes everything parallel to it in G/W.
        let key = {
            let e = &edges[pick];
            let (a, b) = (classes.find(e.u), classes.find(e.v));
            (a.min(b), a.max(b))
        };
        let mut newly = Vec::new();
        for (id, e) in edges.iter().enumerate() {
            if excluded[id] {
                continue;
            }
            let (a, b) = (classes.find(e.u), classes.find(e.v));
            if (a.min(b), a.max(b)) == key {
                excluded[id] = true;
                newly.push(id);
            }
        }
        self.node(chosen, excluded);
        for id in newly {
            excluded[id] = false;
        }
    }

    /// Highest-dip candidate (smallest id on ties) crossing the color
    /// component with the fewest crossing candidates.
    fn branch_edge(&self, colors: &mut [DisjointSet], reps: &[(EdgeId, usize)]) -> EdgeId {
        let edges = self.g.edges();
        let n = self.g.n();
        let mut best: Option<(usize, usize, usize)> = None; // (cut size, color, root)
        for (c, d) in colors.iter_mut().enumerate() {
            if d.count() == 1 {
                continue;
            }
            let mut cut = vec![0usize; n];
            for &(id, _) in reps {
                let (a, b) = (d.find(edges[id].u), d.find(edges[id].v));
                if a != b {
                    cut[a] += 1;
                    cut[b] += 1;
                }
            }
            for (v, &size) in cut.iter().enumerate() {
                if d.find(v) == v && best.is_none_or(|(s, _, _)| size < s) {
                    best = Some((size, c, v));
                }
            }
        }
        let (_, c, root) = best.expect("some color is split");
        let d = &mut colors[c];
        let mut pick: Option<(EdgeId, usize)> = None;
        for &(id, dip) in reps {
            let (a, b) = (d.find(edges[id].u), d.find(edges[id].v));
            if a != b && (a == root || b == root) && pick.is_none_or(|(_, pd)| dip > pd) {
                pick = Some((id, dip));
            }
        }
        pick.expect("feasible node has a crossing candidate").0
    }
}
