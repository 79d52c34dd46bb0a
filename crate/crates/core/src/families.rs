//! Closed forms for trees and cycles, vertex amalgamation, structural
//! deductions from color counts, and the graph generators.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::fixtures;
use crate::graph::{Edge, EdgeColoredGraph, GraphError, VertexId};

/// Wild number of an order-`n` tree colored surjectively with `colors` colors.
/// Every tree edge is a bridge, so two or more colors force all of them.
pub fn wild_tree(n: usize, colors: usize) -> Option<usize> {
    if n == 0 || colors == 0 || colors > (n - 1).max(1) {
        return None;
    }
    Some(if colors == 1 { 0 } else { n - 1 })
}

/// Wild number of an `n`-cycle colored surjectively with `colors` colors.
/// Independent of which coloring is used.
pub fn wild_cycle(n: usize, colors: usize) -> Option<usize> {
    if n < 3 || colors == 0 || colors > n {
        return None;
    }
    Some(match colors {
        1 => 0,
        2 => n - 2,
        _ => n - 1,
    })
}

/// Glues `h` onto `g` by identifying vertex `u` of `g` with vertex `v` of `h`.
///
/// The result keeps `g`'s vertex ids; `h`'s other vertices follow in order.
/// The palette is `g`'s palette followed by any labels only `h` uses.
pub fn amalgamate(
    g: &EdgeColoredGraph,
    h: &EdgeColoredGraph,
    u: VertexId,
    v: VertexId,
) -> Result<EdgeColoredGraph, GraphError> {
    if u >= g.n() {
        return Err(GraphError::BadVertex(u));
    }
    if v >= h.n() {
        return Err(GraphError::BadVertex(v));
    }
    let mut palette: Vec<String> = g.palette().to_vec();
    for label in h.palette() {
        if !palette.contains(label) {
            palette.push(label.clone());
        }
    }
    let map = |x: VertexId| -> VertexId {
        match x.cmp(&v) {
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Less => g.n() + x,
            std::cmp::Ordering::Greater => g.n() + x - 1,
        }
    };
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for e in h.edges() {
        let label = &h.palette()[e.color];
        let color = palette.iter().position(|p| p == label).expect("merged palette");
        edges.push(Edge::new(map(e.u), map(e.v), color));
    }
    EdgeColoredGraph::build(g.n() + h.n() - 1, palette, edges)
}

/// Which structural argument produced a [`Deduction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeductionRule {
    /// Some palette color has no edges, so `W` alone must span: `n - 1`.
    NonSurjective,
    /// One color: already connected, 0.
    SingleColor,
    /// Two colors: every wild edge helps only the other color, so `cub`.
    TwoColors,
    /// Simple graph with one repeated color (ℓ = m - 1 > 1): 1 on a triangle, else `n - 1`.
    OneRepeatedColor,
    /// Simple graph, every edge its own color (ℓ = m): `n - 1`.
    AllDistinctColors,
    /// The colors with the most components need more than a `clb`-sized set can
    /// deliver after the other colors take their share: `wild > clb`.
    ComponentSurplus,
    /// All but at most one color attain the maximum component count and no
    /// color is connected: `wild > clb`.
    NearlyUniformComponents,
    /// Every color used once or twice, with enough vertices: `n - 1`.
    SingletonAndPairColors,
    /// Too few edges outside the max-component colors to fill a `clb`-sized
    /// set: `wild > clb`.
    ScarceOtherEdges,
    /// Few edges besides the once-used colors: `n - 1`.
    SingletonColors,
}

impl DeductionRule {
    pub fn name(&self) -> &'static str {
        match self {
            DeductionRule::NonSurjective => "non-surjective",
            DeductionRule::SingleColor => "single-color",
            DeductionRule::TwoColors => "two-colors",
            DeductionRule::OneRepeatedColor => "one-repeated-color",
            DeductionRule::AllDistinctColors => "all-distinct-colors",
            DeductionRule::ComponentSurplus => "component-surplus",
            DeductionRule::NearlyUniformComponents => "nearly-uniform-components",
            DeductionRule::SingletonAndPairColors => "singleton-and-pair-colors",
            DeductionRule::ScarceOtherEdges => "scarce-other-edges",
            DeductionRule::SingletonColors => "singleton-colors",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeductionKind {
    /// `value` is the wild number.
    Exact,
    /// `value` is a lower bound (strict inequalities are stored as `clb + 1`).
    LowerBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deduction {
    pub rule: DeductionRule,
    pub kind: DeductionKind,
    pub value: usize,
}

impl fmt::Display for Deduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DeductionKind::Exact => write!(f, "{}: wild = {}", self.rule.name(), self.value),
            DeductionKind::LowerBound => write!(f, "{}: wild >= {}", self.rule.name(), self.value),
        }
    }
}

/// Every structural conclusion whose hypothesis `g` meets.
pub fn deduce(g: &EdgeColoredGraph) -> Vec<Deduction> {
    let exact = |rule, value| Deduction { rule, kind: DeductionKind::Exact, value };
    let lower = |rule, value| Deduction { rule, kind: DeductionKind::LowerBound, value };
    let n = g.n();
    let m = g.m();
    let l = g.colors();

    if !g.is_surjective() {
        return vec![exact(DeductionRule::NonSurjective, n - 1)];
    }
    let mut out = Vec::new();
    let kappas = g.kappas();
    if l == 1 {
        out.push(exact(DeductionRule::SingleColor, 0));
        return out;
    }
    let cub: usize = kappas.iter().map(|k| k - 1).sum();
    if l == 2 {
        out.push(exact(DeductionRule::TwoColors, cub));
    }

    let kmax = *kappas.iter().max().expect("non-empty palette");
    let kmin = *kappas.iter().min().expect("non-empty palette");
    let clb = kmax - 1;
    let s = kappas.iter().filter(|&&k| k == kmax).count();

    if clb > (l - s) * (kmax - kmin) {
        out.push(lower(DeductionRule::ComponentSurplus, clb + 1));
    }
    if s + 1 >= l && kmin > 1 {
        out.push(lower(DeductionRule::NearlyUniformComponents, clb + 1));
    }

    let counts = g.color_counts();
    let once = counts.iter().filter(|&&c| c == 1).count();
    let twice = counts.iter().filter(|&&c| c == 2).count();
    if once > 0 && once + twice == l && n >= 2 && n - 2 > l - once {
        out.push(exact(DeductionRule::SingletonAndPairColors, n - 1));
    }

    if g.is_simple() && n > 2 {
        if l + 1 == m && l > 1 {
            out.push(exact(DeductionRule::OneRepeatedColor, if n == 3 { 1 } else { n - 1 }));
        }
        if l == m {
            out.push(exact(DeductionRule::AllDistinctColors, n - 1));
        }
    }

    let m_clb: usize = kappas
        .iter()
        .zip(&counts)
        .filter(|(&k, _)| k == kmax)
        .map(|(_, &c)| c)
        .sum();
    if clb > m - m_clb {
        out.push(lower(DeductionRule::ScarceOtherEdges, clb + 1));
    }
    if n >= 2 && n - 2 + once > m {
        out.push(exact(DeductionRule::SingletonColors, n - 1));
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad family descriptor: {0}")]
    BadDescriptor(String),
}

/// A named fixture or a parameterized family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path whose `k`-th edge gets color index `colors[k]`.
    Path { colors: Vec<usize> },
    /// Cycle whose `k`-th edge joins `k` and `k + 1 mod n`.
    Cycle { colors: Vec<usize> },
    Fig1,
    Fig2,
    Fig3TwoColors,
    Fig3ThreeColors,
    Fig4,
    Fig5,
    Prism,
    Wheel,
    /// Random spanning tree plus extra edges, colored uniformly until every
    /// color is used.
    Random { n: usize, m: usize, colors: usize, seed: u64, simple: bool },
}

impl FamilySpec {
    /// Parses the command-line form, e.g. `cycle 1,1,2,2`, `fig5`,
    /// `random 6 9 3 42`. Color lists are 1-based.
    pub fn parse(name: &str, args: &[String]) -> Result<Self, FamilyError> {
        let bad = |msg: &str| FamilyError::BadDescriptor(format!("{name}: {msg}"));
        let colors = |args: &[String]| -> Result<Vec<usize>, FamilyError> {
            let [list] = args else { return Err(bad("expected one comma-separated color list")) };
            list.split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(c) if c >= 1 => Ok(c - 1),
                    _ => Err(bad(&format!("bad color `{t}`"))),
                })
                .collect()
        };
        let fixed = |spec: FamilySpec| if args.is_empty() { Ok(spec) } else { Err(bad("takes no arguments")) };
        match name {
            "path" => Ok(FamilySpec::Path { colors: colors(args)? }),
            "cycle" => Ok(FamilySpec::Cycle { colors: colors(args)? }),
            "fig1" => fixed(FamilySpec::Fig1),
            "fig2" => fixed(FamilySpec::Fig2),
            "fig3a" => fixed(FamilySpec::Fig3TwoColors),
            "fig3b" => fixed(FamilySpec::Fig3ThreeColors),
            "fig4" => fixed(FamilySpec::Fig4),
            "fig5" => fixed(FamilySpec::Fig5),
            "fig6" | "prism" => fixed(FamilySpec::Prism),
            "fig7" | "wheel" => fixed(FamilySpec::Wheel),
            "random" | "random-simple" => {
                if args.len() < 3 || args.len() > 4 {
                    return Err(bad("expected N M COLORS [SEED]"));
                }
                let num = |t: &String| t.parse::<u64>().map_err(|_| bad(&format!("bad number `{t}`")));
                Ok(FamilySpec::Random {
                    n: num(&args[0])? as usize,
                    m: num(&args[1])? as usize,
                    colors: num(&args[2])? as usize,
                    seed: args.get(3).map(num).transpose()?.unwrap_or(0),
                    simple: name == "random-simple",
                })
            }
            _ => Err(bad("unknown family")),
        }
    }
}

fn palette_for(colors: &[usize]) -> Vec<String> {
    let l = colors.iter().copied().max().map_or(1, |c| c + 1);
    (1..=l).map(|c| format!("c{c}")).collect()
}

pub fn generate(spec: &FamilySpec) -> Result<EdgeColoredGraph, FamilyError> {
    let invalid = |e: GraphError| FamilyError::BadDescriptor(e.to_string());
    match spec {
        FamilySpec::Path { colors } => {
            let edges = colors.iter().enumerate().map(|(k, &c)| Edge::new(k, k + 1, c)).collect();
            EdgeColoredGraph::build(colors.len() + 1, palette_for(colors), edges).map_err(invalid)
        }
        FamilySpec::Cycle { colors } => {
            let n = colors.len();
            if n < 3 {
                return Err(FamilyError::BadDescriptor("a cycle needs at least 3 edges".into()));
            }
            let edges = colors.iter().enumerate().map(|(k, &c)| Edge::new(k, (k + 1) % n, c)).collect();
            EdgeColoredGraph::build(n, palette_for(colors), edges).map_err(invalid)
        }
        FamilySpec::Fig1 => Ok(fixtures::fig1()),
        FamilySpec::Fig2 => Ok(fixtures::fig2()),
        FamilySpec::Fig3TwoColors => Ok(fixtures::fig3_two_colors()),
        FamilySpec::Fig3ThreeColors => Ok(fixtures::fig3_three_colors()),
        FamilySpec::Fig4 => Ok(fixtures::fig4()),
        FamilySpec::Fig5 => Ok(fixtures::fig5()),
        FamilySpec::Prism => Ok(fixtures::prism()),
        FamilySpec::Wheel => Ok(fixtures::wheel()),
        &FamilySpec::Random { n, m, colors, seed, simple } => random_graph(n, m, colors, seed, simple),
    }
}

fn random_graph(n: usize, m: usize, colors: usize, seed: u64, simple: bool) -> Result<EdgeColoredGraph, FamilyError> {
    let bad = |msg: String| Err(FamilyError::BadDescriptor(msg));
    if n == 0 || colors == 0 {
        return bad("need at least one vertex and one color".into());
    }
    if m + 1 < n {
        return bad(format!("{m} edges cannot connect {n} vertices"));
    }
    if colors > m.max(1) {
        return bad(format!("{colors} colors cannot all be used on {m} edges"));
    }
    if simple && m > n * (n - 1) / 2 {
        return bad(format!("a simple graph on {n} vertices has at most {} edges", n * (n - 1) / 2));
    }
    if !simple && n == 1 && m > 0 {
        return bad("a single vertex cannot carry edges".into());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|k| (order[rng.gen_range(0..k)], order[k])).collect();
    if simple {
        let mut free: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !pairs.iter().any(|&(x, y)| (x.min(y), x.max(y)) == (a, b)))
            .collect();
        free.shuffle(&mut rng);
        pairs.extend(free.into_iter().take(m + 1 - n));
    } else {
        while pairs.len() < m {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b {
                pairs.push((a, b));
            }
        }
    }
    pairs.shuffle(&mut rng);

    let coloring = loop {
        let c: Vec<usize> = (0..m).map(|_| rng.gen_range(0..colors)).collect();
        let mut used = vec![false; colors];
        c.iter().for_each(|&x| used[x] = true);
        if m == 0 || used.iter().all(|&u| u) {
            break c;
        }
    };
    let edges = pairs.iter().zip(&coloring).map(|(&(a, b), &c)| Edge::new(a, b, c)).collect();
    let palette = (1..=colors).map(|c| format!("c{c}")).collect();
    EdgeColoredGraph::build(n, palette, edges).map_err(|e| FamilyError::BadDescriptor(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{wild_brute, wild_exact};

    #[test]
    fn tree_and_cycle_closed_forms() {
        assert_eq!(wild_tree(8, 2), Some(7));
        assert_eq!(wild_tree(5, 1), Some(0));
        assert_eq!(wild_tree(3, 3), None);
        assert_eq!(wild_cycle(6, 2), Some(4));
        assert_eq!(wild_cycle(6, 3), Some(5));
        assert_eq!(wild_cycle(3, 2), Some(1));
        assert_eq!(wild_cycle(2, 1), None);
    }

    #[test]
    fn random_trees_match_the_closed_form() {
        for seed in 0..40 {
            let n = 2 + (seed as usize % 7);
            let colors = 1 + (seed as usize % (n - 1));
            let g = generate(&FamilySpec::Random { n, m: n - 1, colors, seed, simple: true }).unwrap();
            assert_eq!(wild_brute(&g, None).unwrap().wild, wild_tree(n, colors).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn fig3_cycles() {
        assert_eq!(wild_exact(&fixtures::fig3_two_colors()).wild, 4);
        assert_eq!(wild_exact(&fixtures::fig3_three_colors()).wild, 5);
    }

    #[test]
    fn amalgamation() {
        let g = fixtures::fig4();
        assert_eq!(g.n(), 11);
        assert_eq!(wild_exact(&g).wild, 10);

        let single = EdgeColoredGraph::build(1, vec!["purple".into()], vec![]).unwrap();
        let p = fixtures::prism();
        let glued = amalgamate(&p, &single, 3, 0).unwrap();
        assert_eq!(glued, p.with_palette(glued.palette().to_vec()).unwrap());
        assert_eq!(amalgamate(&p, &single, 6, 0), Err(GraphError::BadVertex(6)));
    }

    #[test]
    fn deductions() {
        let two = deduce(&fixtures::fig3_two_colors());
        assert!(two.contains(&Deduction { rule: DeductionRule::TwoColors, kind: DeductionKind::Exact, value: 4 }));

        // K4 with six distinct colors.
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let edges = pairs.iter().enumerate().map(|(c, &(u, v))| Edge::new(u, v, c)).collect();
        let k4 = EdgeColoredGraph::build(4, (0..6).map(|c| format!("c{c}")).collect(), edges).unwrap();
        assert!(deduce(&k4).contains(&Deduction { rule: DeductionRule::AllDistinctColors, kind: DeductionKind::Exact, value: 3 }));

        let unused = EdgeColoredGraph::build(2, vec!["a".into(), "b".into()], vec![Edge::new(0, 1, 0)]).unwrap();
        assert_eq!(deduce(&unused), vec![Deduction { rule: DeductionRule::NonSurjective, kind: DeductionKind::Exact, value: 1 }]);
    }

    #[test]
    fn scarce_other_edges_found_by_search() {
        let mut found = 0;
        for seed in 0..400 {
            let g = generate(&FamilySpec::Random { n: 6, m: 8, colors: 3, seed, simple: false }).unwrap();
            let Some(d) = deduce(&g).into_iter().find(|d| d.rule == DeductionRule::ScarceOtherEdges) else {
                continue;
            };
            found += 1;
            assert!(wild_brute(&g, None).unwrap().wild >= d.value, "seed {seed}");
        }
        assert!(found > 0);
    }

    #[test]
    fn generators() {
        let fig5 = generate(&FamilySpec::Fig5).unwrap();
        assert_eq!((fig5.n(), fig5.m(), fig5.colors()), (6, 12, 3));
        assert_eq!(fig5.kappas(), vec![2, 2, 2]);
        assert_eq!(generate(&FamilySpec::Fig1).unwrap().kappas(), vec![5, 4, 5]);
        let prism = generate(&FamilySpec::Prism).unwrap();
        let green: Vec<_> = prism.edges().iter().filter(|e| e.color == 0).map(|e| e.key()).collect();
        assert_eq!(green, vec![(0, 2), (0, 3), (2, 5)]);

        let spec = FamilySpec::Random { n: 6, m: 9, colors: 3, seed: 7, simple: false };
        let a = generate(&spec).unwrap();
        assert_eq!(a, generate(&spec).unwrap());
        assert!(a.is_surjective());
        assert_eq!(a.m(), 9);

        assert!(generate(&FamilySpec::Random { n: 5, m: 2, colors: 1, seed: 0, simple: false }).is_err());
        assert!(generate(&FamilySpec::Cycle { colors: vec![0, 1] }).is_err());
    }

    #[test]
    fn descriptor_parsing() {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(FamilySpec::parse("cycle", &s(&["1,1,2"])).unwrap(), FamilySpec::Cycle { colors: vec![0, 0, 1] });
        assert_eq!(FamilySpec::parse("fig7", &[]).unwrap(), FamilySpec::Wheel);
        assert_eq!(
            FamilySpec::parse("random", &s(&["6", "9", "3", "5"])).unwrap(),
            FamilySpec::Random { n: 6, m: 9, colors: 3, seed: 5, simple: false }
        );
        assert!(FamilySpec::parse("cycle", &s(&["0,1"])).is_err());
        assert!(FamilySpec::parse("moebius", &[]).is_err());
    }
}
