//! Reduction from 3-SAT: a formula with `ℓ` clauses over `k` variables maps to
//! a multigraph whose wild number is `k` exactly when the formula is
//! satisfiable.
//!
//! Vertex layout: `C_1..C_ℓ`, then `x_j, x̄_j, y_j` for each variable, then `z`.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact::decide_k_wild;
use crate::graph::{Edge, EdgeColoredGraph, EdgeId, GraphError, VertexId, WildSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SatError {
    #[error("line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },
    #[error("clause {clause} has {width} distinct literals, expected 3")]
    NotThreeSat { clause: usize, width: usize },
    #[error("clauses {first} and {second} have the same literals")]
    DuplicateClause { first: usize, second: usize },
    #[error("clause {clause} contains a variable and its negation")]
    TautologicalClause { clause: usize },
    #[error("variable {var} appears in no clause")]
    UnusedVariable { var: usize },
    #[error("formula has no clauses")]
    EmptyFormula,
    #[error("variable {var} out of range 1..={k}")]
    BadVariable { var: usize, k: usize },
    #[error("assignment has {got} values for {k} variables")]
    AssignmentLength { k: usize, got: usize },
    #[error("assignment falsifies clause {clause}")]
    UnsatisfyingAssignment { clause: usize },
    #[error("wild set does not color-connect the gadget")]
    NotColorConnecting,
    #[error("wild set has {got} edges, expected {expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("wild set has no edge at helper vertex of variable {var}")]
    MissingPairEdge { var: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A variable (0-based) with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: usize, positive: bool) -> Self {
        Literal { var, positive }
    }

    /// DIMACS form: `var + 1`, negated when the literal is negative.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "~x{}", self.var + 1)
        }
    }
}

/// A 3-CNF formula with distinct, non-tautological clauses that uses every
/// variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    k: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(k: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, SatError> {
        if clauses.is_empty() {
            return Err(SatError::EmptyFormula);
        }
        let mut seen: Vec<BTreeSet<Literal>> = Vec::with_capacity(clauses.len());
        let mut fixed = Vec::with_capacity(clauses.len());
        let mut used = vec![false; k];
        for (i, clause) in clauses.iter().enumerate() {
            for lit in clause {
                if lit.var >= k {
                    return Err(SatError::BadVariable { var: lit.var + 1, k });
                }
            }
            let set: BTreeSet<Literal> = clause.iter().copied().collect();
            if clause.len() != 3 || set.len() != 3 {
                return Err(SatError::NotThreeSat { clause: i + 1, width: set.len() });
            }
            if set.iter().any(|l| set.contains(&Literal::new(l.var, !l.positive))) {
                return Err(SatError::TautologicalClause { clause: i + 1 });
            }
            if let Some(first) = seen.iter().position(|s| *s == set) {
                return Err(SatError::DuplicateClause { first: first + 1, second: i + 1 });
            }
            clause.iter().for_each(|l| used[l.var] = true);
            seen.push(set);
            fixed.push([clause[0], clause[1], clause[2]]);
        }
        if let Some(var) = used.iter().position(|&u| !u) {
            return Err(SatError::UnusedVariable { var: var + 1 });
        }
        Ok(CnfFormula { k, clauses: fixed })
    }

    /// Number of variables.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of clauses.
    pub fn l(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// First clause (1-based) falsified by `assignment`.
    pub fn falsified_clause(&self, assignment: &[bool]) -> Result<Option<usize>, SatError> {
        if assignment.len() != self.k {
            return Err(SatError::AssignmentLength { k: self.k, got: assignment.len() });
        }
        Ok(self
            .clauses
            .iter()
            .position(|c| !c.iter().any(|l| l.eval(assignment)))
            .map(|i| i + 1))
    }

    pub fn satisfies(&self, assignment: &[bool]) -> bool {
        matches!(self.falsified_clause(assignment), Ok(None))
    }

    /// First satisfying assignment in truth-table order, if any.
    pub fn satisfying_assignment(&self) -> Option<Vec<bool>> {
        assert!(self.k < 64, "truth table too large");
        (0u64..1 << self.k)
            .map(|bits| (0..self.k).map(|j| bits >> j & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.satisfies(a))
    }

    pub fn is_satisfiable(&self) -> bool {
        self.satisfying_assignment().is_some()
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.k, self.clauses.len());
        for c in &self.clauses {
            let lits: Vec<String> = c.iter().map(|l| l.to_dimacs().to_string()).collect();
            out.push_str(&format!("{} 0\n", lits.join(" ")));
        }
        out
    }
}

/// Parses DIMACS CNF. Clauses may span lines; each ends with `0`.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, SatError> {
    let syntax = |line: usize, msg: String| SatError::SyntaxError { line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') || t.starts_with('%') {
            continue;
        }
        if t.starts_with('p') {
            let parts: Vec<&str> = t.split_whitespace().collect();
            if header.is_some() {
                return Err(syntax(line, "second header".into()));
            }
            match parts.as_slice() {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| syntax(line, format!("bad variable count `{v}`")))?;
                    let c = c.parse().map_err(|_| syntax(line, format!("bad clause count `{c}`")))?;
                    header = Some((v, c));
                }
                _ => return Err(syntax(line, "expected `p cnf <vars> <clauses>`".into())),
            }
            continue;
        }
        let Some((k, _)) = header else {
            return Err(syntax(line, "clause before header".into()));
        };
        for tok in t.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| syntax(line, format!("bad literal `{tok}`")))?;
            if x == 0 {
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = x.unsigned_abs() as usize;
            if var > k {
                return Err(syntax(line, format!("variable {var} exceeds declared {k}")));
            }
            current.push(Literal::new(var - 1, x > 0));
        }
    }
    let Some((k, count)) = header else {
        return Err(syntax(last_line.max(1), "missing `p cnf` header".into()));
    };
    if !current.is_empty() {
        return Err(syntax(last_line, "last clause is not terminated by 0".into()));
    }
    if clauses.len() != count {
        return Err(syntax(last_line, format!("header declares {count} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(k, clauses)
}

/// A random formula meeting all the validity conditions, or `None` after
/// repeated failures (e.g. too few clauses to use every variable).
pub fn random_formula(k: usize, l: usize, seed: u64) -> Option<CnfFormula> {
    if k < 3 || l == 0 || 3 * l < k {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let mut clauses = Vec::with_capacity(l);
        for _ in 0..l {
            let vars: Vec<usize> = (0..k).collect::<Vec<_>>().choose_multiple(&mut rng, 3).copied().collect();
            clauses.push(vars.into_iter().map(|v| Literal::new(v, rng.gen())).collect());
        }
        if let Ok(f) = CnfFormula::new(k, clauses) {
            return Some(f);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    Clause(usize),
    Literal(Literal),
    Helper(usize),
    Root,
}

/// Which construction step emitted an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeType {
    /// `C_i u` in `c_i` for `u` in `C_i`.
    A,
    /// `y_j u` and `z u` in `c_i` for `u` not in `C_i`.
    B,
    /// `C_i' u` in `c_i` for `u` in `C_i'` but not `C_i`.
    C,
    /// Clause-literal and `z`-literal edges in `c_{ℓ+1}`.
    D,
    /// Those of type D plus the helper-literal edges, in `c_{ℓ+2}`.
    E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub formula: CnfFormula,
    pub graph: EdgeColoredGraph,
    pub vertex_roles: Vec<VertexRole>,
    pub edge_types: Vec<EdgeType>,
}

impl GadgetGraph {
    pub fn clause_vertex(&self, i: usize) -> VertexId {
        i
    }

    pub fn literal_vertex(&self, lit: Literal) -> VertexId {
        literal_vertex(self.formula.l(), lit)
    }

    pub fn helper_vertex(&self, var: usize) -> VertexId {
        self.formula.l() + 3 * var + 2
    }

    pub fn root_vertex(&self) -> VertexId {
        self.formula.l() + 3 * self.formula.k()
    }
}

fn literal_vertex(l: usize, lit: Literal) -> VertexId {
    l + 3 * lit.var + usize::from(!lit.positive)
}

pub fn build_gadget(f: &CnfFormula) -> GadgetGraph {
    let l = f.l();
    let k = f.k();
    let n = l + 3 * k + 1;
    let z = n - 1;
    let helper = |j: usize| l + 3 * j + 2;
    let lit_v = |lit: Literal| literal_vertex(l, lit);
    let all_literals: Vec<Literal> =
        (0..k).flat_map(|j| [Literal::new(j, true), Literal::new(j, false)]).collect();

    let mut edges: Vec<Edge> = Vec::new();
    let mut types: Vec<EdgeType> = Vec::new();
    let mut push = |u: VertexId, v: VertexId, color: usize, t: EdgeType| {
        edges.push(Edge::new(u, v, color));
        types.push(t);
    };

    for (i, clause) in f.clauses().iter().enumerate() {
        for &lit in clause {
            push(i, lit_v(lit), i, EdgeType::A);
        }
        let outside: Vec<Literal> = all_literals.iter().copied().filter(|u| !clause.contains(u)).collect();
        for &u in &outside {
            push(helper(u.var), lit_v(u), i, EdgeType::B);
        }
        for &u in &outside {
            push(z, lit_v(u), i, EdgeType::B);
        }
        for (i2, other) in f.clauses().iter().enumerate() {
            if i2 == i {
                continue;
            }
            for &u in other.iter().filter(|u| !clause.contains(u)) {
                push(i2, lit_v(u), i, EdgeType::C);
            }
        }
    }
    for (color, t) in [(l, EdgeType::D), (l + 1, EdgeType::E)] {
        for (i, clause) in f.clauses().iter().enumerate() {
            for &lit in clause {
                push(i, lit_v(lit), color, t);
            }
        }
        for &u in &all_literals {
            push(z, lit_v(u), color, t);
        }
        if t == EdgeType::E {
            for &u in &all_literals {
                push(helper(u.var), lit_v(u), color, t);
            }
        }
    }

    let mut roles: Vec<VertexRole> = (0..l).map(VertexRole::Clause).collect();
    for j in 0..k {
        roles.push(VertexRole::Literal(Literal::new(j, true)));
        roles.push(VertexRole::Literal(Literal::new(j, false)));
        roles.push(VertexRole::Helper(j));
    }
    roles.push(VertexRole::Root);

    let palette = (1..=l + 2).map(|c| format!("c{c}")).collect();
    let graph = EdgeColoredGraph::build(n, palette, edges).expect("gadget is a connected multigraph");
    GadgetGraph { formula: f.clone(), graph, vertex_roles: roles, edge_types: types }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("color c{color}: {detail}")]
pub struct GadgetViolation {
    /// 1-based color index.
    pub color: usize,
    pub detail: String,
}

/// Checks the component structure of every color class.
pub fn verify_gadget(gg: &GadgetGraph) -> Result<(), GadgetViolation> {
    let l = gg.formula.l();
    let k = gg.formula.k();
    let g = &gg.graph;
    if g.n() != l + 3 * k + 1 || g.colors() != l + 2 {
        return Err(GadgetViolation {
            color: 0,
            detail: format!("expected {} vertices and {} colors, found {} and {}", l + 3 * k + 1, l + 2, g.n(), g.colors()),
        });
    }
    let empty = WildSet::empty();
    let parts = |c: usize| g.mono_components(c, &empty).expect("color in range");
    let set_of = |vs: &[VertexId]| vs.iter().copied().collect::<BTreeSet<_>>();

    for (i, clause) in gg.formula.clauses().iter().enumerate() {
        let mut side = vec![i];
        side.extend(clause.iter().map(|&lit| gg.literal_vertex(lit)));
        let side = set_of(&side);
        let comps = parts(i);
        if comps.len() != 2 {
            return Err(GadgetViolation { color: i + 1, detail: format!("{} components, expected 2", comps.len()) });
        }
        if !comps.iter().any(|c| set_of(c) == side) {
            return Err(GadgetViolation { color: i + 1, detail: "no component equals the clause side".into() });
        }
    }

    let comps = parts(l);
    let mut expected: Vec<BTreeSet<VertexId>> = (0..k).map(|j| set_of(&[gg.helper_vertex(j)])).collect();
    let helpers: BTreeSet<VertexId> = (0..k).map(|j| gg.helper_vertex(j)).collect();
    expected.push((0..g.n()).filter(|v| !helpers.contains(v)).collect());
    let mut found: Vec<BTreeSet<VertexId>> = comps.iter().map(|c| set_of(c)).collect();
    expected.sort();
    found.sort();
    if found != expected {
        return Err(GadgetViolation { color: l + 1, detail: "components are not the isolated helpers plus the rest".into() });
    }

    if parts(l + 1).len() != 1 {
        return Err(GadgetViolation { color: l + 2, detail: "not connected".into() });
    }
    Ok(())
}

fn edge_between(g: &EdgeColoredGraph, a: VertexId, b: VertexId, color: usize) -> Option<EdgeId> {
    let key = (a.min(b), a.max(b));
    g.edges().iter().position(|e| e.color == color && e.key() == key)
}

/// The wild set `{y_j u_j}` where `u_j` is the true literal of variable `j`,
/// using the copies in the last color.
pub fn assignment_to_wild_set(gg: &GadgetGraph, assignment: &[bool]) -> Result<WildSet, SatError> {
    if let Some(clause) = gg.formula.falsified_clause(assignment)? {
        return Err(SatError::UnsatisfyingAssignment { clause });
    }
    let last = gg.formula.l() + 1;
    let ids = assignment.iter().enumerate().map(|(j, &value)| {
        let u = gg.literal_vertex(Literal::new(j, value));
        edge_between(&gg.graph, gg.helper_vertex(j), u, last).expect("gadget has every helper edge in the last color")
    });
    Ok(WildSet::from_ids(ids))
}

/// Reads an assignment off an ideal wild set of the gadget.
pub fn wild_set_to_assignment(gg: &GadgetGraph, w: &WildSet) -> Result<Vec<bool>, SatError> {
    let g = &gg.graph;
    for e in w.iter() {
        g.edge(e)?;
    }
    if !g.is_color_connected(w) {
        return Err(SatError::NotColorConnecting);
    }
    let k = gg.formula.k();
    if w.len() != k {
        return Err(SatError::WrongSize { expected: k, got: w.len() });
    }
    let last = gg.formula.l() + 1;
    let normalized: BTreeSet<(VertexId, VertexId)> = w
        .iter()
        .map(|e| {
            let edge = g.edges()[e];
            let copy = edge_between(g, edge.u, edge.v, last).expect("every gadget edge has a copy in the last color");
            g.edges()[copy].key()
        })
        .collect();
    let mut assignment = Vec::with_capacity(k);
    for j in 0..k {
        let y = gg.helper_vertex(j);
        let has = |positive: bool| {
            let u = gg.literal_vertex(Literal::new(j, positive));
            normalized.contains(&(y.min(u), y.max(u)))
        };
        match (has(true), has(false)) {
            (true, _) => assignment.push(true),
            (false, true) => assignment.push(false),
            (false, false) => return Err(SatError::MissingPairEdge { var: j + 1 }),
        }
    }
    if let Some(clause) = gg.formula.falsified_clause(&assignment)? {
        return Err(SatError::UnsatisfyingAssignment { clause });
    }
    Ok(assignment)
}

/// Whether the gadget has wild number `k`. The last-but-one color always
/// needs `k` connections, so this is `wild <= k`.
pub fn gadget_has_wild_k(gg: &GadgetGraph) -> bool {
    decide_k_wild(&gg.graph, gg.formula.k())
}

/// `[f satisfiable] == [wild(gadget(f)) == k]`.
pub fn reduction_theorem_check(f: &CnfFormula) -> bool {
    f.is_satisfiable() == gadget_has_wild_k(&build_gadget(f))
}
