use std::fmt::Write as _;

use wildnum::greedy::GreedyTrace;
use wildnum::{BoundsReport, EdgeColoredGraph, EdgeId};

/// `u-v` with 1-based vertices; parallel edges get a `#id` suffix.
pub fn edge_label(g: &EdgeColoredGraph, e: EdgeId) -> String {
    let edge = g.edges()[e];
    let (u, v) = edge.key();
    let parallel = g.edges().iter().filter(|f| f.key() == (u, v)).count() > 1;
    if parallel {
        format!("{}-{}#{}", u + 1, v + 1, e + 1)
    } else {
        format!("{}-{}", u + 1, v + 1)
    }
}

pub fn bounds_text(g: &EdgeColoredGraph, r: &BoundsReport) -> String {
    let mut out = String::new();
    let kappas: Vec<String> = r.kappas.iter().map(|k| k.to_string()).collect();
    writeln!(out, "n = {}, m = {}, colors = {}", g.n(), g.m(), g.colors()).unwrap();
    writeln!(out, "kappa = {}", kappas.join(" ")).unwrap();
    writeln!(out, "component lower bound (clb) = {}", r.clb).unwrap();
    writeln!(out, "component upper bound (cub) = {}", r.cub).unwrap();
    writeln!(out, "ceiling lower bound = {}", r.ceiling_lb).unwrap();
    writeln!(out, "dip lower bound = {}", r.dip_lb).unwrap();
    writeln!(out, "greedy upper bound = {}", r.greedy_ub).unwrap();
    for d in &r.deductions {
        writeln!(out, "deduction {d}").unwrap();
    }
    if r.best_lb == r.best_ub {
        writeln!(out, "wild = {}", r.best_lb).unwrap();
    } else {
        writeln!(out, "wild in [{}, {}]", r.best_lb, r.best_ub).unwrap();
    }
    out
}

pub fn trace_text(g: &EdgeColoredGraph, trace: &GreedyTrace) -> String {
    let labels: Vec<String> = (0..g.m()).map(|e| edge_label(g, e)).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(1) + 2;
    let mut out = String::new();
    let row = |out: &mut String, head: &str, cells: &[String], tail: &str| {
        write!(out, "{head:<10}").unwrap();
        for c in cells {
            write!(out, "{c:>width$}").unwrap();
        }
        if tail.is_empty() {
            out.push('\n');
        } else {
            writeln!(out, "  {tail}").unwrap();
        }
    };
    for (k, step) in trace.steps.iter().enumerate() {
        let before: Vec<&str> = step.wild_before.iter().map(|&e| labels[e].as_str()).collect();
        writeln!(out, "round {}: W = {{{}}}", k + 1, before.join(", ")).unwrap();
        row(&mut out, "edge", &labels, "");
        let dips: Vec<String> = step.dips.iter().map(|d| d.to_string()).collect();
        row(&mut out, "dip", &dips, "");
        row(&mut out, "wild edge", &labels, "potential");
        for c in &step.candidates {
            let cells: Vec<String> = c.row.iter().map(|d| d.to_string()).collect();
            row(&mut out, &labels[c.edge], &cells, &c.potential.to_string());
        }
        writeln!(out, "select {}", labels[step.selected]).unwrap();
        out.push('\n');
    }
    out
}
