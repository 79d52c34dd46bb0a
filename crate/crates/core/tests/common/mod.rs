//! Reference computations that share no code with the library: plain edge
//! lists, breadth-first search, and exhaustive subset enumeration.

#![allow(dead_code)]

use std::collections::VecDeque;

use wildnum::{Edge, EdgeColoredGraph};

#[derive(Debug, Clone)]
pub struct Plain {
    pub n: usize,
    pub colors: usize,
    pub edges: Vec<(usize, usize, usize)>,
}

impl Plain {
    pub fn of(g: &EdgeColoredGraph) -> Self {
        Plain { n: g.n(), colors: g.colors(), edges: g.edges().iter().map(|e| (e.u, e.v, e.color)).collect() }
    }

    pub fn to_graph(&self) -> EdgeColoredGraph {
        let palette = (1..=self.colors).map(|c| format!("c{c}")).collect();
        let edges = self.edges.iter().map(|&(u, v, c)| Edge::new(u, v, c)).collect();
        EdgeColoredGraph::build(self.n, palette, edges).expect("oracle instance is valid")
    }

    /// Components of the subgraph on the edges selected by `keep`.
    pub fn components(&self, keep: impl Fn(usize) -> bool) -> usize {
        let mut adj = vec![Vec::new(); self.n];
        for (id, &(u, v, _)) in self.edges.iter().enumerate() {
            if keep(id) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    /// κ of every color with the edges of `mask` made wild.
    pub fn kappas(&self, mask: u64) -> Vec<usize> {
        (0..self.colors)
            .map(|c| self.components(|id| self.edges[id].2 == c || mask >> id & 1 == 1))
            .collect()
    }

    /// Same as `kappas`, for edge sets too large for a mask.
    pub fn kappas_of(&self, wild: &[usize]) -> Vec<usize> {
        (0..self.colors).map(|c| self.components(|id| self.edges[id].2 == c || wild.contains(&id))).collect()
    }

    pub fn color_connected(&self, mask: u64) -> bool {
        self.kappas(mask).iter().all(|&k| k == 1)
    }

    /// Minimum size of a color-connecting set, by trying every subset.
    pub fn wild(&self) -> usize {
        assert!(self.edges.len() <= 20, "oracle limited to 20 edges");
        (0u64..1 << self.edges.len())
            .filter(|&mask| self.color_connected(mask))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .expect("the full edge set color-connects a connected graph")
    }

    pub fn dip(&self, e: usize) -> usize {
        let before = self.kappas(0);
        let after = self.kappas(1 << e);
        before.iter().zip(&after).map(|(b, a)| b - a).sum()
    }
}

pub fn mask_of(ids: impl IntoIterator<Item = usize>) -> u64 {
    ids.into_iter().fold(0, |m, e| m | 1 << e)
}

/// Edge sets of all connected simple graphs on vertices `0..n`.
pub fn connected_simple_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect::<Vec<_>>())
        .filter(|edges| {
            let p = Plain { n, colors: 1, edges: edges.iter().map(|&(u, v)| (u, v, 0)).collect() };
            p.components(|_| true) == 1
        })
        .collect()
}

/// Colorings of `m` edges with exactly `l` colors, one per color permutation
/// class (restricted growth strings).
pub fn colorings(m: usize, l: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, max: usize, m: usize, l: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            if max == l {
                out.push(prefix.clone());
            }
            return;
        }
        if l - max > m - prefix.len() {
            return;
        }
        for c in 0..=max.min(l - 1) {
            prefix.push(c);
            extend(prefix, max.max(c + 1), m, l, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 0, m, l, &mut out);
    out
}

pub fn is_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    edges.len() + 1 == n
}

pub fn is_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    n >= 3 && edges.len() == n && (0..n).all(|v| edges.iter().filter(|&&(a, b)| a == v || b == v).count() == 2)
}
