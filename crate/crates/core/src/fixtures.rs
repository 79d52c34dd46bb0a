//! Named graphs used throughout the documentation and tests.
//!
//! Vertex `v_k` is vertex `k - 1` here, except for the wheel whose hub is
//! `v_0`, where `v_k` is vertex `k`.

use crate::families::amalgamate;
use crate::graph::EdgeColoredGraph;

fn labeled(n: usize, palette: &[&str], edges: &[(usize, usize, &str)]) -> EdgeColoredGraph {
    // 1-based endpoints in the tables below.
    let edges: Vec<_> = edges.iter().map(|&(u, v, c)| (u - 1, v - 1, c)).collect();
    EdgeColoredGraph::from_labeled(n, palette, &edges).expect("fixture is valid")
}

/// Eight vertices, three colors, κ = (5, 4, 5).
pub fn fig1() -> EdgeColoredGraph {
    labeled(
        8,
        &["orange", "purple", "green"],
        &[
            (1, 8, "orange"),
            (6, 7, "orange"),
            (3, 6, "orange"),
            (2, 7, "purple"),
            (7, 8, "purple"),
            (3, 4, "purple"),
            (4, 5, "purple"),
            (1, 2, "green"),
            (2, 3, "green"),
            (5, 6, "green"),
        ],
    )
}

/// The seven-vertex graph obtained from ideal labels over Z_30
/// (⟨2⟩ purple, ⟨3⟩ green, ⟨5⟩ orange).
pub fn fig2() -> EdgeColoredGraph {
    labeled(
        7,
        &["purple", "green", "orange"],
        &[
            (1, 2, "green"),
            (2, 3, "purple"),
            (3, 4, "orange"),
            (4, 5, "purple"),
            (5, 6, "green"),
            (6, 7, "orange"),
            (7, 1, "green"),
            (3, 7, "orange"),
            (4, 6, "green"),
            (4, 7, "purple"),
        ],
    )
}

/// Six-cycle in two colors; wild number 4.
pub fn fig3_two_colors() -> EdgeColoredGraph {
    labeled(
        6,
        &["purple", "orange"],
        &[
            (1, 2, "purple"),
            (2, 3, "purple"),
            (3, 4, "orange"),
            (4, 5, "purple"),
            (5, 6, "orange"),
            (6, 1, "orange"),
        ],
    )
}

/// Six-cycle in three colors; wild number 5.
pub fn fig3_three_colors() -> EdgeColoredGraph {
    labeled(
        6,
        &["purple", "orange", "green"],
        &[
            (1, 2, "purple"),
            (2, 3, "purple"),
            (3, 4, "orange"),
            (4, 5, "green"),
            (5, 6, "orange"),
            (6, 1, "orange"),
        ],
    )
}

fn fig4_right_cycle() -> EdgeColoredGraph {
    labeled(
        6,
        &["purple", "orange", "green"],
        &[
            (1, 2, "purple"),
            (2, 3, "green"),
            (3, 4, "orange"),
            (4, 5, "purple"),
            (5, 6, "green"),
            (6, 1, "orange"),
        ],
    )
}

/// Two three-colored six-cycles glued at a vertex (`v6` of the left cycle
/// is `v3` of the right one); wild number 10.
pub fn fig4() -> EdgeColoredGraph {
    amalgamate(&fig3_three_colors(), &fig4_right_cycle(), 5, 2).expect("fixture is valid")
}

/// Six vertices, three colors with two components each; clb 1, ceiling 2,
/// dip bound 3, wild number 3.
pub fn fig5() -> EdgeColoredGraph {
    labeled(
        6,
        &["purple", "green", "orange"],
        &[
            (1, 5, "purple"),
            (2, 4, "purple"),
            (4, 5, "purple"),
            (5, 3, "purple"),
            (2, 6, "green"),
            (3, 1, "green"),
            (1, 2, "green"),
            (2, 5, "green"),
            (3, 4, "orange"),
            (2, 3, "orange"),
            (3, 6, "orange"),
            (6, 5, "orange"),
        ],
    )
}

/// The colored prism used to walk through the greedy algorithm. Edges are
/// listed in the column order of its dip table.
pub fn prism() -> EdgeColoredGraph {
    labeled(
        6,
        &["green", "purple", "orange"],
        &[
            (1, 2, "orange"),
            (1, 3, "green"),
            (1, 4, "green"),
            (2, 3, "purple"),
            (2, 5, "orange"),
            (3, 6, "green"),
            (4, 5, "orange"),
            (4, 6, "purple"),
            (5, 6, "purple"),
        ],
    )
}

/// Wheel on hub `v0` and rim `v1..v7` where greedy returns 6 edges but the
/// wild number is 5. Edges are listed rim first, then spokes, each starting
/// at `v4`; the greedy tie-break by smallest edge id depends on this order.
pub fn wheel() -> EdgeColoredGraph {
    let edges = [
        (4, 5, "purple"),
        (5, 6, "green"),
        (6, 7, "purple"),
        (1, 7, "green"),
        (1, 2, "green"),
        (2, 3, "red"),
        (3, 4, "red"),
        (0, 4, "orange"),
        (0, 5, "green"),
        (0, 6, "purple"),
        (0, 7, "green"),
        (0, 1, "orange"),
        (0, 2, "purple"),
        (0, 3, "orange"),
    ];
    EdgeColoredGraph::from_labeled(8, &["orange", "purple", "green", "red"], &edges)
        .expect("fixture is valid")
}

/// Four-vertex subgraph of the wheel on `v0..v3`, used to illustrate potentials.
pub fn wheel_fragment() -> EdgeColoredGraph {
    let edges = [
        (0, 1, "orange"),
        (0, 3, "orange"),
        (0, 2, "purple"),
        (1, 2, "green"),
        (2, 3, "red"),
    ];
    EdgeColoredGraph::from_labeled(4, &["orange", "purple", "green", "red"], &edges)
        .expect("fixture is valid")
}
