//! Coxeter graphs and their structural decompositions.
//!
//! A [`CoxeterGraph`] stores the generators in a fixed *canonical order* (the
//! order in which they were first declared). Every deterministic tie-break in
//! the crate uses that order. Edges are kept sorted by their endpoint indices,
//! which is the canonical edge order used for orientation encodings.
//!
//! Pairs with `m = 2` are not edges. All labels `m >= 3` (including infinity)
//! produce an edge, and everything except the group oracle only looks at the
//! edge skeleton.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Index of a generator in canonical order.
pub type Vertex = usize;

/// A Coxeter label `m(s, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    /// Label of a commuting pair.
    pub const COMMUTING: Label = Label::Finite(2);

    pub fn is_edge(self) -> bool {
        match self {
            Label::Finite(m) => m >= 3,
            Label::Infinity => true,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// An edge of the Coxeter graph, endpoints in canonical order (`lo < hi`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub lo: Vertex,
    pub hi: Vertex,
    pub label: Label,
}

impl Edge {
    /// The endpoint opposite to `v`.
    pub fn other(&self, v: Vertex) -> Vertex {
        if v == self.lo {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }
}

#[derive(Debug)]
pub struct CoxeterGraph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    edges: Vec<Edge>,
    /// `(neighbour, edge id)` pairs sorted by neighbour.
    adjacency: Vec<Vec<(Vertex, usize)>>,
    basis: OnceLock<CycleBasis>,
}

impl PartialEq for CoxeterGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for CoxeterGraph {}

impl Clone for CoxeterGraph {
    fn clone(&self) -> Self {
        Self {
            names: self.names.clone(),
            index: self.index.clone(),
            edges: self.edges.clone(),
            adjacency: self.adjacency.clone(),
            basis: OnceLock::new(),
        }
    }
}

impl CoxeterGraph {
    /// Builds a graph from generator names (canonical order) and labelled
    /// pairs. Pairs labelled 2 are rejected; commuting pairs are expressed by
    /// omission.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (Vertex, Vertex, Label)>,
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("invalid generator name {name:?}"),
                });
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate generator {name:?}"),
                });
            }
        }
        let n = names.len();
        let mut labelled: HashMap<(Vertex, Vertex), Label> = HashMap::new();
        for (a, b, label) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange(a));
            }
            if b >= n {
                return Err(Error::VertexOutOfRange(b));
            }
            if a == b {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("self-loop at {}", names[a]),
                });
            }
            if !label.is_edge() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("label {label} must be at least 3"),
                });
            }
            let key = (a.min(b), a.max(b));
            match labelled.get(&key) {
                Some(&old) if old != label => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!(
                            "conflicting labels {old} and {label} for {}-{}",
                            names[key.0], names[key.1]
                        ),
                    })
                }
                _ => {
                    labelled.insert(key, label);
                }
            }
        }
        let mut edges: Vec<Edge> = labelled
            .into_iter()
            .map(|((lo, hi), label)| Edge { lo, hi, label })
            .collect();
        edges.sort_by_key(|e| (e.lo, e.hi));

        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            adjacency[e.lo].push((e.hi, id));
            adjacency[e.hi].push((e.lo, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            names,
            index,
            edges,
            adjacency,
            basis: OnceLock::new(),
        })
    }

    /// Convenience constructor from named edges; vertex order is first
    /// mention order.
    pub fn from_named_edges<'a>(
        edges: impl IntoIterator<Item = (&'a str, &'a str, Label)>,
    ) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut seen: HashMap<String, Vertex> = HashMap::new();
        let mut idx = |name: &str, names: &mut Vec<String>| -> Vertex {
            *seen.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                names.len() - 1
            })
        };
        let mut list = Vec::new();
        for (a, b, label) in edges {
            let a = idx(a, &mut names);
            let b = idx(b, &mut names);
            list.push((a, b, label));
        }
        Self::new(names, list)
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    /// Looks up a generator by name.
    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// Neighbours of `v` with the connecting edge id, in canonical order.
    pub fn neighbours(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.adjacency[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| self.adjacency[a][i].1)
    }

    pub fn is_adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_between(a, b).is_some()
    }

    /// The Coxeter label `m(a, b)`: 1 on the diagonal, 2 for non-edges.
    pub fn label(&self, a: Vertex, b: Vertex) -> Label {
        if a == b {
            return Label::Finite(1);
        }
        match self.edge_between(a, b) {
            Some(id) => self.edges[id].label,
            None => Label::COMMUTING,
        }
    }

    /// Component index per vertex plus the number of components. Components
    /// are numbered in order of their lowest vertex.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.component_ids().1 == 1
    }

    /// Errors unless the graph is connected.
    pub fn require_connected(&self) -> Result<()> {
        let (_, components) = self.component_ids();
        if components == 1 {
            Ok(())
        } else {
            Err(Error::Disconnected { components })
        }
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.num_edges() + 1 == self.num_vertices()
    }

    /// The subgraph induced on `vertices`, keeping canonical order.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<CoxeterGraph> {
        let mut keep: Vec<Vertex> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut remap = vec![usize::MAX; self.num_vertices()];
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.num_vertices() {
                return Err(Error::VertexOutOfRange(old));
            }
            remap[old] = new;
        }
        let names = keep.iter().map(|&v| self.names[v].clone());
        let edges = self
            .edges
            .iter()
            .filter(|e| remap[e.lo] != usize::MAX && remap[e.hi] != usize::MAX)
            .map(|e| (remap[e.lo], remap[e.hi], e.label));
        CoxeterGraph::new(names, edges)
    }

    /// Splits the graph into its connected components as induced subgraphs.
    pub fn connected_components(&self) -> Vec<CoxeterGraph> {
        let (comp, count) = self.component_ids();
        (0..count)
            .map(|c| {
                let members: Vec<Vertex> = self.vertices().filter(|&v| comp[v] == c).collect();
                self.induced_subgraph(&members)
                    .expect("component of a valid graph is valid")
            })
            .collect()
    }

    /// Decomposes a connected graph into its leafless trunk and the limbs
    /// hanging off it.
    pub fn trunk_limb_decompose(&self) -> Result<TrunkLimbDecomposition> {
        self.require_connected()?;
        let n = self.num_vertices();
        let mut degree: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut queue: VecDeque<Vertex> = self.vertices().filter(|&v| degree[v] <= 1).collect();
        while let Some(v) = queue.pop_front() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &(w, _) in &self.adjacency[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] <= 1 {
                        queue.push_back(w);
                    }
                }
            }
        }
        let trunk: Vec<Vertex> = self.vertices().filter(|&v| !removed[v]).collect();
        if trunk.is_empty() {
            return Ok(TrunkLimbDecomposition {
                trunk,
                limbs: vec![Limb {
                    joint: None,
                    vertices: self.vertices().collect(),
                    edges: (0..self.num_edges()).collect(),
                }],
                in_trunk: vec![false; n],
            });
        }

        let in_trunk: Vec<bool> = removed.iter().map(|r| !r).collect();
        let mut limbs = Vec::new();
        for &joint in &trunk {
            let mut vertices = Vec::new();
            let mut stack: Vec<Vertex> = self.adjacency[joint]
                .iter()
                .filter(|&&(w, _)| !in_trunk[w])
                .map(|&(w, _)| w)
                .collect();
            let mut seen = vec![false; n];
            seen[joint] = true;
            while let Some(v) = stack.pop() {
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                vertices.push(v);
                for &(w, _) in &self.adjacency[v] {
                    if !seen[w] && !in_trunk[w] {
                        stack.push(w);
                    }
                }
            }
            if vertices.is_empty() {
                continue;
            }
            vertices.sort_unstable();
            let edges: Vec<usize> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| {
                    let inside = |v: Vertex| v == joint || vertices.binary_search(&v).is_ok();
                    inside(e.lo) && inside(e.hi) && !(in_trunk[e.lo] && in_trunk[e.hi])
                })
                .map(|(id, _)| id)
                .collect();
            limbs.push(Limb {
                joint: Some(joint),
                vertices,
                edges,
            });
        }
        Ok(TrunkLimbDecomposition {
            trunk,
            limbs,
            in_trunk,
        })
    }

    /// The deterministic fundamental cycle basis, computed once and cached.
    pub fn cycle_basis(&self) -> &CycleBasis {
        self.basis.get_or_init(|| CycleBasis::build(self))
    }

    /// Serializes to the line-oriented graph format. Parsing the output
    /// yields an equal graph.
    pub fn to_text(&self) -> String {
        let isolated: Vec<Vertex> = self.vertices().filter(|&v| self.degree(v) == 0).collect();
        // vertex order as the parser would reconstruct it from edges alone
        let mut implied = Vec::with_capacity(self.num_vertices());
        let mut seen = vec![false; self.num_vertices()];
        for e in &self.edges {
            for v in [e.lo, e.hi] {
                if !seen[v] {
                    seen[v] = true;
                    implied.push(v);
                }
            }
        }
        implied.extend(isolated.iter().copied());
        let declare_all = implied.iter().copied().ne(self.vertices());

        let mut out = String::new();
        if declare_all {
            for name in &self.names {
                out.push_str(name);
                out.push('\n');
            }
        }
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", self.names[e.lo], self.names[e.hi], e.label));
        }
        if !declare_all {
            for v in isolated {
                out.push_str(&self.names[v]);
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for CoxeterGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Parses the text graph format: one `NAME NAME LABEL` edge per line, a bare
/// `NAME` to declare a vertex, `#` comments.
pub fn parse_graph(text: &str) -> Result<CoxeterGraph> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, Vertex> = HashMap::new();
    let mut labels: HashMap<(Vertex, Vertex), (Label, usize)> = HashMap::new();
    let mut order: Vec<(Vertex, Vertex)> = Vec::new();

    let mut intern = |name: &str, names: &mut Vec<String>| -> Vertex {
        *index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            names.len() - 1
        })
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match fields.as_slice() {
            [name] => {
                intern(name, &mut names);
            }
            [a, b, label] => {
                if a == b {
                    return Err(err(format!("self-loop at {a}")));
                }
                let label = parse_label(label).map_err(err)?;
                let va = intern(a, &mut names);
                let vb = intern(b, &mut names);
                let key = (va.min(vb), va.max(vb));
                match labels.get(&key) {
                    Some(&(old, first)) if old != label => {
                        return Err(err(format!(
                            "edge {a}-{b} declared with label {label}, but line {first} gave {old}"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        labels.insert(key, (label, line_no));
                        order.push(key);
                    }
                }
            }
            _ => {
                return Err(err(format!(
                    "expected `NAME NAME LABEL` or `NAME`, got {line:?}"
                )))
            }
        }
    }
    let edges: Vec<(Vertex, Vertex, Label)> = order
        .into_iter()
        .map(|key| (key.0, key.1, labels[&key].0))
        .collect();
    CoxeterGraph::new(names, edges)
}

fn parse_label(s: &str) -> std::result::Result<Label, String> {
    if s.eq_ignore_ascii_case("inf") {
        return Ok(Label::Infinity);
    }
    let m: u32 = s
        .parse()
        .map_err(|_| format!("label {s:?} is neither an integer nor `inf`"))?;
    if m < 3 {
        return Err(format!(
            "label {m} is not allowed; commuting pairs (m = 2) are expressed by omitting the edge"
        ));
    }
    Ok(Label::Finite(m))
}

/// One limb of a trunk-plus-limbs graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limb {
    /// Trunk vertex the limb hangs from; `None` when the whole graph is a tree.
    pub joint: Option<Vertex>,
    /// Limb vertices, excluding the joint.
    pub vertices: Vec<Vertex>,
    /// Edge ids of the limb, including the edge(s) at the joint.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrunkLimbDecomposition {
    pub trunk: Vec<Vertex>,
    pub limbs: Vec<Limb>,
    in_trunk: Vec<bool>,
}

impl TrunkLimbDecomposition {
    pub fn is_trunk_vertex(&self, v: Vertex) -> bool {
        self.in_trunk[v]
    }

    /// An edge is a trunk edge iff both endpoints are on the trunk.
    pub fn is_trunk_edge(&self, e: &Edge) -> bool {
        self.in_trunk[e.lo] && self.in_trunk[e.hi]
    }

    /// Number of vertices of the decomposed graph.
    pub fn num_vertices(&self) -> usize {
        self.in_trunk.len()
    }
}

/// One step of a cycle walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleStep {
    pub edge: usize,
    pub from: Vertex,
    pub to: Vertex,
}

/// A fundamental cycle: a closed walk starting along its non-forest edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalCycle {
    pub closing_edge: usize,
    pub steps: Vec<CycleStep>,
}

impl FundamentalCycle {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertices in traversal order, starting at the walk's origin.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.steps.iter().map(|s| s.from)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    pub spanning_forest: Vec<usize>,
    pub cycles: Vec<FundamentalCycle>,
    edge_list: Vec<(Vertex, Vertex)>,
}

impl CycleBasis {
    /// Spanning forest by BFS from the lowest vertex of each component,
    /// neighbours in canonical order; one cycle per non-forest edge, in
    /// canonical edge order, traversed from the edge's lower endpoint.
    pub fn build(g: &CoxeterGraph) -> CycleBasis {
        let n = g.num_vertices();
        let mut parent: Vec<Option<(Vertex, usize)>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut in_forest = vec![false; g.num_edges()];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &(w, id) in g.neighbours(v) {
                    if !visited[w] {
                        visited[w] = true;
                        parent[w] = Some((v, id));
                        depth[w] = depth[v] + 1;
                        in_forest[id] = true;
                        queue.push_back(w);
                    }
                }
            }
        }

        let mut cycles = Vec::new();
        for (id, e) in g.edges().iter().enumerate() {
            if in_forest[id] {
                continue;
            }
            let (start, end) = (e.lo, e.hi);
            // tree path end -> start: climb from both sides to the common ancestor
            let mut up_from_end = Vec::new();
            let mut down_to_start = Vec::new();
            let (mut a, mut b) = (end, start);
            while depth[a] > depth[b] {
                let (p, pid) = parent[a].expect("non-root has a parent");
                up_from_end.push(CycleStep { edge: pid, from: a, to: p });
                a = p;
            }
            while depth[b] > depth[a] {
                let (p, pid) = parent[b].expect("non-root has a parent");
                down_to_start.push(CycleStep { edge: pid, from: p, to: b });
                b = p;
            }
            while a != b {
                let (pa, ida) = parent[a].expect("non-root has a parent");
                let (pb, idb) = parent[b].expect("non-root has a parent");
                up_from_end.push(CycleStep { edge: ida, from: a, to: pa });
                down_to_start.push(CycleStep { edge: idb, from: pb, to: b });
                a = pa;
                b = pb;
            }
            let mut steps = Vec::with_capacity(1 + up_from_end.len() + down_to_start.len());
            steps.push(CycleStep {
                edge: id,
                from: start,
                to: end,
            });
            steps.extend(up_from_end);
            steps.extend(down_to_start.into_iter().rev());
            cycles.push(FundamentalCycle {
                closing_edge: id,
                steps,
            });
        }

        CycleBasis {
            spanning_forest: (0..g.num_edges()).filter(|&id| in_forest[id]).collect(),
            cycles,
            edge_list: g.edges().iter().map(|e| (e.lo, e.hi)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Whether this basis was built from a graph with the same edge set.
    pub fn matches(&self, g: &CoxeterGraph) -> bool {
        self.edge_list.len() == g.num_edges()
            && self
                .edge_list
                .iter()
                .zip(g.edges())
                .all(|(&(lo, hi), e)| lo == e.lo && hi == e.hi)
    }
}

/// Standard graph families with generators named `s0, s1, ...`.
pub mod families {
    use super::{CoxeterGraph, Label, Vertex};

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("s{i}")).collect()
    }

    fn simple(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> CoxeterGraph {
        CoxeterGraph::new(names(n), edges.into_iter().map(|(a, b)| (a, b, Label::Finite(3))))
            .expect("family graphs are valid")
    }

    /// Path `s0 - s1 - ... - s(n-1)`, all labels 3 (type A).
    pub fn path(n: usize) -> CoxeterGraph {
        simple(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> CoxeterGraph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        simple(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Star with centre `s0` and `n - 1` leaves.
    pub fn star(n: usize) -> CoxeterGraph {
        simple(n, (1..n).map(|i| (0, i)))
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> CoxeterGraph {
        simple(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    /// Graph on `n` vertices with the given unlabelled edges (labels 3).
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> CoxeterGraph {
        simple(n, edges.iter().copied())
    }

    /// The triangle `s1 s2 s3` with the pendant `s0` attached to `s1`.
    pub fn triangle_with_tail() -> CoxeterGraph {
        simple(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    }

    /// Path with label 4 on its first edge (type B).
    pub fn type_b(n: usize) -> CoxeterGraph {
        assert!(n >= 2);
        let edges = (1..n).map(|i| {
            let label = if i == 1 { Label::Finite(4) } else { Label::Finite(3) };
            (i - 1, i, label)
        });
        CoxeterGraph::new(names(n), edges).expect("type B graph is valid")
    }

    /// The fork with centre `s1` and three leaves (type D4).
    pub fn type_d4() -> CoxeterGraph {
        simple(4, [(0, 1), (1, 2), (1, 3)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const INTRO: &str = "s0 s1 3\ns1 s2 3\ns1 s3 3\ns2 s3 3";

    #[test]
    fn parses_intro_graph() {
        let g = parse_graph(INTRO).unwrap();
        assert_eq!(g.names(), ["s0", "s1", "s2", "s3"]);
        assert_eq!(g.num_edges(), 4);
        assert!(g.is_adjacent(0, 1));
        assert!(!g.is_adjacent(0, 2));
        assert!(!g.is_adjacent(0, 3));
        assert!(g.is_adjacent(2, 3));
        assert_eq!(g, families::triangle_with_tail());
    }

    #[test]
    fn parses_small_cases() {
        let g = parse_graph("a b 3").unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (2, 1));
        let g = parse_graph("a b inf").unwrap();
        assert_eq!(g.edge(0).label, Label::Infinity);
        assert_eq!(g.label(0, 1), Label::Infinity);
        assert_eq!(g.label(0, 0), Label::Finite(1));
    }

    #[test]
    fn parse_comments_and_isolated() {
        let g = parse_graph("# header\nx\n\na b 5\n  # indented comment\nc\n").unwrap();
        assert_eq!(g.names(), ["x", "a", "b", "c"]);
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.label(1, 2), Label::Finite(5));
        assert_eq!(g.label(0, 3), Label::COMMUTING);
    }

    #[test]
    fn parse_errors() {
        let cases = [
            "a b 3\nb a 4",
            "a b 2",
            "a b 1",
            "a a 3",
            "a b",
            "a b c d",
            "a b x",
            "",
            "# only a comment",
        ];
        for text in cases {
            assert!(parse_graph(text).is_err(), "{text:?} should fail");
        }
        match parse_graph("a b 3\nb a 4").unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        // repeating an identical declaration is fine
        assert_eq!(parse_graph("a b 3\nb a 3").unwrap().num_edges(), 1);
    }

    #[test]
    fn serialization_round_trips() {
        for text in [INTRO, "x\na b 5\nc", "a c 3\nb c inf", "q\np"] {
            let g = parse_graph(text).unwrap();
            let again = parse_graph(&g.to_text()).unwrap();
            assert_eq!(g, again, "{text:?} -> {:?}", g.to_text());
        }
        assert_eq!(parse_graph(INTRO).unwrap().to_text(), format!("{INTRO}\n"));
    }

    #[test]
    fn trunk_of_intro_graph() {
        let g = families::triangle_with_tail();
        let d = g.trunk_limb_decompose().unwrap();
        assert_eq!(d.trunk, vec![1, 2, 3]);
        assert_eq!(d.limbs.len(), 1);
        assert_eq!(d.limbs[0].joint, Some(1));
        assert_eq!(d.limbs[0].vertices, vec![0]);
        assert_eq!(d.limbs[0].edges, vec![g.edge_between(0, 1).unwrap()]);
    }

    #[test]
    fn trunk_of_cycle_and_tree() {
        let d = families::cycle(4).trunk_limb_decompose().unwrap();
        assert_eq!(d.trunk, vec![0, 1, 2, 3]);
        assert!(d.limbs.is_empty());

        let g = families::star(5);
        let d = g.trunk_limb_decompose().unwrap();
        assert!(d.trunk.is_empty());
        assert_eq!(d.limbs.len(), 1);
        assert_eq!(d.limbs[0].joint, None);
        assert_eq!(d.limbs[0].vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(d.limbs[0].edges.len(), 4);

        let single = CoxeterGraph::new(["a"], []).unwrap();
        let d = single.trunk_limb_decompose().unwrap();
        assert!(d.trunk.is_empty());
        assert_eq!(d.limbs[0].vertices, vec![0]);
    }

    #[test]
    fn limbs_grouped_by_joint() {
        // square 0-1-2-3 with a path 4-5 hanging at 0 and leaves 6, 7 at 2
        let g = families::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (2, 6), (2, 7)]);
        let d = g.trunk_limb_decompose().unwrap();
        assert_eq!(d.trunk, vec![0, 1, 2, 3]);
        assert_eq!(d.limbs.len(), 2);
        assert_eq!(d.limbs[0].joint, Some(0));
        assert_eq!(d.limbs[0].vertices, vec![4, 5]);
        assert_eq!(d.limbs[0].edges.len(), 2);
        assert_eq!(d.limbs[1].joint, Some(2));
        assert_eq!(d.limbs[1].vertices, vec![6, 7]);

        // idempotent on the trunk subgraph
        let trunk = g.induced_subgraph(&d.trunk).unwrap();
        let again = trunk.trunk_limb_decompose().unwrap();
        assert_eq!(again.trunk, vec![0, 1, 2, 3]);
        assert!(again.limbs.is_empty());
    }

    #[test]
    fn decomposition_rejects_disconnected() {
        let g = families::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            g.trunk_limb_decompose().unwrap_err(),
            Error::Disconnected { components: 2 }
        );
    }

    #[test]
    fn cycle_basis_examples() {
        assert!(families::path(6).cycle_basis().is_empty());

        let c7 = families::cycle(7);
        let b = c7.cycle_basis();
        assert_eq!(b.len(), 1);
        assert_eq!(b.cycles[0].len(), 7);

        let g = families::triangle_with_tail();
        let b = g.cycle_basis();
        assert_eq!(b.len(), 1);
        let mut verts: Vec<_> = b.cycles[0].vertices().collect();
        // BFS from s0 reaches s1, then s2 and s3; s2-s3 closes the triangle
        assert_eq!(b.cycles[0].closing_edge, g.edge_between(2, 3).unwrap());
        assert_eq!(verts, vec![2, 3, 1]);
        verts.sort();
        assert_eq!(verts, vec![1, 2, 3]);
        assert_eq!(b.spanning_forest.len(), 3);
    }

    #[test]
    fn cycle_walks_are_closed() {
        let g = families::complete(5);
        let b = g.cycle_basis();
        assert_eq!(b.len(), 10 - 5 + 1);
        for c in &b.cycles {
            let first = c.steps[0];
            assert_eq!(g.edge(first.edge).lo, first.from);
            for w in c.steps.windows(2) {
                assert_eq!(w[0].to, w[1].from);
            }
            assert_eq!(c.steps.last().unwrap().to, first.from);
            let mut vs: Vec<_> = c.vertices().collect();
            vs.sort();
            vs.dedup();
            assert_eq!(vs.len(), c.len(), "simple cycle");
            let closing = c.steps.iter().filter(|s| !b.spanning_forest.contains(&s.edge)).count();
            assert_eq!(closing, 1);
        }
    }

    #[test]
    fn components() {
        let g = families::path(4);
        assert_eq!(g.connected_components().len(), 1);

        let g = families::from_edges(4, &[(0, 1), (2, 3)]);
        let parts = g.connected_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].names(), ["s0", "s1"]);
        assert_eq!(parts[1].names(), ["s2", "s3"]);
        assert_eq!(parts[1].num_edges(), 1);

        let g = CoxeterGraph::new(["a", "b", "c"], []).unwrap();
        let parts = g.connected_components();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.num_vertices() == 1));
        // a forest has |E| - |V| + c = 0 cycles
        assert!(g.cycle_basis().is_empty());
    }
}
