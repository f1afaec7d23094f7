//! Acyclic edge orientations and the firing game played on them.
//!
//! An orientation is stored as one bit per edge in canonical edge order; the
//! bit is set when the edge points from its lower endpoint to its higher one.
//! Firing a sink (or a source) reverses every edge at that vertex. Reachability
//! under firing is decided by comparing circulations around a fixed
//! fundamental cycle basis; [`reachable_bfs`] is the exhaustive cross-check.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, CycleBasis, TrunkLimbDecomposition, Vertex};

/// State cap used by the exhaustive searches unless the caller picks one.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Which vertices a firing move may act on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiringRule {
    Sink,
    Source,
}

#[derive(Clone)]
pub struct AcyclicOrientation<'g> {
    graph: &'g CoxeterGraph,
    bits: Vec<u64>,
}

impl PartialEq for AcyclicOrientation<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
            && (std::ptr::eq(self.graph, other.graph) || self.graph == other.graph)
    }
}

impl Eq for AcyclicOrientation<'_> {}

impl Hash for AcyclicOrientation<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl fmt::Debug for AcyclicOrientation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AcyclicOrientation({})", self.to_text())
    }
}

impl fmt::Display for AcyclicOrientation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn words_for(edges: usize) -> usize {
    edges.div_ceil(64).max(1)
}

impl<'g> AcyclicOrientation<'g> {
    /// Builds an orientation from one flag per edge (canonical edge order);
    /// `true` means the edge points from its lower endpoint to its higher one.
    pub fn from_forward(graph: &'g CoxeterGraph, forward: &[bool]) -> Result<Self> {
        if forward.len() != graph.num_edges() {
            return Err(Error::GraphMismatch);
        }
        let mut bits = vec![0u64; words_for(graph.num_edges())];
        for (e, &f) in forward.iter().enumerate() {
            if f {
                bits[e / 64] |= 1 << (e % 64);
            }
        }
        let o = Self { graph, bits };
        if o.is_acyclic() {
            Ok(o)
        } else {
            Err(Error::Cyclic)
        }
    }

    /// Orients every edge from the endpoint that comes first in `order`.
    /// `order` must list every vertex exactly once.
    pub fn from_linear_order(graph: &'g CoxeterGraph, order: &[Vertex]) -> Result<Self> {
        let mut rank = vec![usize::MAX; graph.num_vertices()];
        for (i, &v) in order.iter().enumerate() {
            if v >= rank.len() {
                return Err(Error::VertexOutOfRange(v));
            }
            rank[v] = i;
        }
        if let Some(v) = rank.iter().position(|&r| r == usize::MAX) {
            return Err(Error::MissingLetter(graph.name(v).to_string()));
        }
        Ok(Self::from_rank_unchecked(graph, &rank))
    }

    pub(crate) fn from_rank_unchecked(graph: &'g CoxeterGraph, rank: &[usize]) -> Self {
        let mut bits = vec![0u64; words_for(graph.num_edges())];
        for (e, edge) in graph.edges().iter().enumerate() {
            if rank[edge.lo] < rank[edge.hi] {
                bits[e / 64] |= 1 << (e % 64);
            }
        }
        Self { graph, bits }
    }

    /// Builds an orientation from `(tail, head)` pairs covering every edge.
    pub fn from_directed_edges(graph: &'g CoxeterGraph, arcs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut forward: Vec<Option<bool>> = vec![None; graph.num_edges()];
        for &(tail, head) in arcs {
            let id = graph
                .edge_between(tail, head)
                .ok_or_else(|| Error::NotAnEdge(graph.name(tail).into(), graph.name(head).into()))?;
            let f = graph.edge(id).lo == tail;
            match forward[id] {
                Some(prev) if prev != f => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!(
                            "edge {}-{} given both directions",
                            graph.name(tail),
                            graph.name(head)
                        ),
                    })
                }
                _ => forward[id] = Some(f),
            }
        }
        let forward: Vec<bool> = forward
            .iter()
            .enumerate()
            .map(|(id, f)| {
                f.ok_or_else(|| {
                    let e = graph.edge(id);
                    Error::IncompleteOrientation(format!("{}-{}", graph.name(e.lo), graph.name(e.hi)))
                })
            })
            .collect::<Result<_>>()?;
        Self::from_forward(graph, &forward)
    }

    /// Parses the text form `a>b,b>c,...`.
    pub fn parse(graph: &'g CoxeterGraph, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut arcs = Vec::new();
        if !text.is_empty() {
            for (i, item) in text.split(',').enumerate() {
                let (tail, head) = item.trim().split_once('>').ok_or_else(|| Error::Parse {
                    line: 0,
                    message: format!("item {} ({item:?}) is not of the form `tail>head`", i + 1),
                })?;
                arcs.push((graph.vertex(tail.trim())?, graph.vertex(head.trim())?));
            }
        }
        Self::from_directed_edges(graph, &arcs)
    }

    pub fn graph(&self) -> &'g CoxeterGraph {
        self.graph
    }

    /// Canonical encoding: bit `e` is set iff edge `e` points from its lower
    /// endpoint.
    pub fn encoding(&self) -> &[u64] {
        &self.bits
    }

    /// Whether edge `id` points from its lower endpoint to its higher one.
    pub fn is_forward(&self, id: usize) -> bool {
        self.bits[id / 64] >> (id % 64) & 1 == 1
    }

    fn flip(&mut self, id: usize) {
        self.bits[id / 64] ^= 1 << (id % 64);
    }

    /// `(tail, head)` of edge `id`.
    pub fn arc(&self, id: usize) -> (Vertex, Vertex) {
        let e = self.graph.edge(id);
        if self.is_forward(id) {
            (e.lo, e.hi)
        } else {
            (e.hi, e.lo)
        }
    }

    /// All arcs in canonical edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.graph.num_edges()).map(|id| self.arc(id))
    }

    /// Whether the edge `a - b` is directed `a -> b`. `None` for non-edges.
    pub fn points(&self, a: Vertex, b: Vertex) -> Option<bool> {
        self.graph
            .edge_between(a, b)
            .map(|id| self.arc(id).0 == a)
    }

    fn is_acyclic(&self) -> bool {
        topological_order(self).is_some()
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.graph.neighbours(v).iter().all(|&(_, id)| self.arc(id).1 == v)
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.graph.neighbours(v).iter().all(|&(_, id)| self.arc(id).0 == v)
    }

    pub fn sources(&self) -> Vec<Vertex> {
        self.graph.vertices().filter(|&v| self.is_source(v)).collect()
    }

    pub fn sinks(&self) -> Vec<Vertex> {
        self.graph.vertices().filter(|&v| self.is_sink(v)).collect()
    }

    fn reversed_at(&self, v: Vertex) -> Self {
        let mut next = self.clone();
        for &(_, id) in self.graph.neighbours(v) {
            next.flip(id);
        }
        debug_assert!(next.is_acyclic());
        next
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.graph.num_vertices() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Fires the sink `v`, turning it into a source.
    pub fn fire_sink(&self, v: Vertex) -> Result<Self> {
        self.check_vertex(v)?;
        if !self.is_sink(v) {
            return Err(Error::NotASink(self.graph.name(v).into()));
        }
        Ok(self.reversed_at(v))
    }

    /// Fires the source `v`, turning it into a sink.
    pub fn fire_source(&self, v: Vertex) -> Result<Self> {
        self.check_vertex(v)?;
        if !self.is_source(v) {
            return Err(Error::NotASource(self.graph.name(v).into()));
        }
        Ok(self.reversed_at(v))
    }

    pub fn fire(&self, v: Vertex, rule: FiringRule) -> Result<Self> {
        match rule {
            FiringRule::Sink => self.fire_sink(v),
            FiringRule::Source => self.fire_source(v),
        }
    }

    /// A firing sequence that starts with the sink `v`, fires every vertex
    /// exactly once and ends back at `self`.
    ///
    /// After `v` is fired, a vertex becomes a sink once all of its original
    /// out-neighbours have been fired, so repeatedly firing the lowest such
    /// vertex never gets stuck.
    pub fn playback_sequence(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        if !self.is_sink(v) {
            return Err(Error::NotASink(self.graph.name(v).into()));
        }
        let n = self.graph.num_vertices();
        let mut fired = vec![false; n];
        let mut sequence = Vec::with_capacity(n);
        let mut current = self.clone();
        let mut next = Some(v);
        while let Some(u) = next {
            current = current.fire_sink(u)?;
            fired[u] = true;
            sequence.push(u);
            next = (0..n).find(|&w| !fired[w] && current.is_sink(w));
        }
        debug_assert_eq!(sequence.len(), n);
        debug_assert_eq!(&current, self);
        Ok(sequence)
    }

    /// Circulation around each fundamental cycle of `basis`.
    pub fn circulation_signature(&self, basis: &CycleBasis) -> Result<CirculationSignature> {
        if !basis.matches(self.graph) {
            return Err(Error::GraphMismatch);
        }
        Ok(CirculationSignature(
            basis
                .cycles
                .iter()
                .map(|cycle| {
                    cycle
                        .steps
                        .iter()
                        .map(|step| if self.arc(step.edge).0 == step.from { 1 } else { -1 })
                        .sum()
                })
                .collect(),
        ))
    }

    /// Signature against the graph's canonical cycle basis.
    pub fn signature(&self) -> CirculationSignature {
        self.circulation_signature(self.graph.cycle_basis())
            .expect("canonical basis matches its own graph")
    }

    /// Redirects limb edges as given by `(tail, head)` pairs. Trunk edges may
    /// not be touched.
    pub fn redirect_limb_edges(
        &self,
        decomposition: &TrunkLimbDecomposition,
        new_dirs: &[(Vertex, Vertex)],
    ) -> Result<Self> {
        if decomposition.num_vertices() != self.graph.num_vertices() {
            return Err(Error::GraphMismatch);
        }
        let mut next = self.clone();
        for &(tail, head) in new_dirs {
            self.check_vertex(tail)?;
            self.check_vertex(head)?;
            let id = self.graph.edge_between(tail, head).ok_or_else(|| {
                Error::NotAnEdge(self.graph.name(tail).into(), self.graph.name(head).into())
            })?;
            let edge = self.graph.edge(id);
            if decomposition.is_trunk_edge(edge) {
                return Err(Error::TrunkEdge(
                    self.graph.name(edge.lo).into(),
                    self.graph.name(edge.hi).into(),
                ));
            }
            if next.arc(id) != (tail, head) {
                next.flip(id);
            }
        }
        if !next.is_acyclic() {
            return Err(Error::Cyclic);
        }
        Ok(next)
    }

    /// Text form `tail>head,...` in canonical edge order.
    pub fn to_text(&self) -> String {
        self.arcs()
            .map(|(t, h)| format!("{}>{}", self.graph.name(t), self.graph.name(h)))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_dot(&self) -> String {
        dot(self.graph, self.arcs())
    }
}

pub(crate) fn dot(graph: &CoxeterGraph, arcs: impl Iterator<Item = (Vertex, Vertex)>) -> String {
    let mut out = String::from("digraph coxeter {\n");
    for name in graph.names() {
        out.push_str(&format!("  \"{name}\";\n"));
    }
    for (t, h) in arcs {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", graph.name(t), graph.name(h)));
    }
    out.push_str("}\n");
    out
}

/// Kahn's algorithm; lowest available vertex first.
fn topological_order(o: &AcyclicOrientation<'_>) -> Option<Vec<Vertex>> {
    let g = o.graph;
    let n = g.num_vertices();
    let mut indegree = vec![0usize; n];
    for (_, h) in o.arcs() {
        indegree[h] += 1;
    }
    let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<Vertex>> = (0..n)
        .filter(|&v| indegree[v] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(std::cmp::Reverse(v)) = ready.pop() {
        order.push(v);
        for &(w, id) in g.neighbours(v) {
            if o.arc(id).0 == v {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(std::cmp::Reverse(w));
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// The lexicographically least linear extension of `o`: repeatedly take the
/// lowest-order source.
pub(crate) fn least_linear_extension(o: &AcyclicOrientation<'_>) -> Vec<Vertex> {
    topological_order(o).expect("acyclic orientation has a linear extension")
}

/// Circulations around the fundamental cycles, one value per cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CirculationSignature(pub Vec<i32>);

impl fmt::Display for CirculationSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn same_graph(a: &AcyclicOrientation<'_>, b: &AcyclicOrientation<'_>) -> Result<()> {
    if std::ptr::eq(a.graph, b.graph) || a.graph == b.graph {
        Ok(())
    } else {
        Err(Error::GraphMismatch)
    }
}

/// Decides whether `o2` can be reached from `o1` by firing moves, by
/// comparing circulation signatures.
pub fn reachable(o1: &AcyclicOrientation<'_>, o2: &AcyclicOrientation<'_>) -> Result<bool> {
    same_graph(o1, o2)?;
    o1.graph.require_connected()?;
    Ok(o1.signature() == o2.signature())
}

/// Breadth-first search over `rule` moves from `start`. Returns the fired
/// vertices of a shortest path to `target` (neighbours explored in canonical
/// vertex order), or `None` if the whole reachable set was exhausted.
pub(crate) fn shortest_firing_path<'g>(
    start: &AcyclicOrientation<'g>,
    target: &AcyclicOrientation<'g>,
    rule: FiringRule,
    budget: usize,
) -> Result<Option<Vec<Vertex>>> {
    same_graph(start, target)?;
    if start == target {
        return Ok(Some(Vec::new()));
    }
    let mut parent: HashMap<AcyclicOrientation<'g>, Option<(AcyclicOrientation<'g>, Vertex)>> =
        HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(current) = queue.pop_front() {
        for v in start.graph.vertices() {
            let Ok(next) = current.fire(v, rule) else {
                continue;
            };
            if parent.contains_key(&next) {
                continue;
            }
            if parent.len() >= budget {
                return Err(Error::BudgetExceeded(budget));
            }
            parent.insert(next.clone(), Some((current.clone(), v)));
            if &next == target {
                let mut path = Vec::new();
                let mut cursor = next;
                while let Some(Some((prev, fired))) = parent.get(&cursor) {
                    path.push(*fired);
                    cursor = prev.clone();
                }
                path.reverse();
                return Ok(Some(path));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}

/// Exhaustive reachability check by breadth-first search over sink firings.
pub fn reachable_bfs(
    o1: &AcyclicOrientation<'_>,
    o2: &AcyclicOrientation<'_>,
    max_states: usize,
) -> Result<bool> {
    same_graph(o1, o2)?;
    o1.graph.require_connected()?;
    Ok(shortest_firing_path(o1, o2, FiringRule::Sink, max_states)?.is_some())
}

/// Every orientation reachable from `start` by sink firings, in BFS order.
pub fn reachable_set<'g>(
    start: &AcyclicOrientation<'g>,
    max_states: usize,
) -> Result<Vec<AcyclicOrientation<'g>>> {
    let mut seen: std::collections::HashSet<AcyclicOrientation<'g>> =
        std::collections::HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut head = 0;
    while head < order.len() {
        let current = order[head].clone();
        head += 1;
        for v in current.sinks() {
            let next = current.reversed_at(v);
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= max_states {
                return Err(Error::BudgetExceeded(max_states));
            }
            seen.insert(next.clone());
            order.push(next);
        }
    }
    Ok(order)
}

/// All acyclic orientations, ordered lexicographically by the per-edge flags
/// in canonical edge order (`false` before `true`).
pub fn enumerate_acyclic_orientations(g: &CoxeterGraph) -> Vec<AcyclicOrientation<'_>> {
    let n = g.num_vertices();
    let m = g.num_edges();
    let mut out_arcs: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut forward = vec![false; m];
    let mut result = Vec::new();

    fn reaches(out_arcs: &[Vec<Vertex>], from: Vertex, to: Vertex, seen: &mut [bool]) -> bool {
        if from == to {
            return true;
        }
        seen[from] = true;
        out_arcs[from]
            .iter()
            .any(|&w| !seen[w] && reaches(out_arcs, w, to, seen))
    }

    fn extend<'g>(
        g: &'g CoxeterGraph,
        e: usize,
        out_arcs: &mut Vec<Vec<Vertex>>,
        forward: &mut Vec<bool>,
        result: &mut Vec<AcyclicOrientation<'g>>,
    ) {
        if e == g.num_edges() {
            result.push(AcyclicOrientation::from_forward(g, forward).expect("pruned search stays acyclic"));
            return;
        }
        let edge = *g.edge(e);
        for fwd in [false, true] {
            let (tail, head) = if fwd { (edge.lo, edge.hi) } else { (edge.hi, edge.lo) };
            let mut seen = vec![false; g.num_vertices()];
            if reaches(out_arcs, head, tail, &mut seen) {
                continue;
            }
            out_arcs[tail].push(head);
            forward[e] = fwd;
            extend(g, e + 1, out_arcs, forward, result);
            out_arcs[tail].pop();
        }
    }

    extend(g, 0, &mut out_arcs, &mut forward, &mut result);
    result
}

/// One reachability class.
#[derive(Debug, Clone)]
pub struct ReachabilityClass<'g> {
    pub signature: CirculationSignature,
    pub members: Vec<AcyclicOrientation<'g>>,
}

impl ReachabilityClass<'_> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Partitions all acyclic orientations of a connected graph by signature.
/// Classes come in ascending signature order; members keep enumeration order.
pub fn reachability_classes(g: &CoxeterGraph) -> Result<Vec<ReachabilityClass<'_>>> {
    g.require_connected()?;
    let mut classes: BTreeMap<CirculationSignature, Vec<AcyclicOrientation<'_>>> = BTreeMap::new();
    for o in enumerate_acyclic_orientations(g) {
        classes.entry(o.signature()).or_default().push(o);
    }
    Ok(classes
        .into_iter()
        .map(|(signature, members)| ReachabilityClass { signature, members })
        .collect())
}

/// A possibly partial orientation: edges whose endpoints have not both been
/// seen stay undirected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrientation<'g> {
    graph: &'g CoxeterGraph,
    forward: Vec<Option<bool>>,
}

impl<'g> PartialOrientation<'g> {
    pub(crate) fn new(graph: &'g CoxeterGraph, forward: Vec<Option<bool>>) -> Self {
        Self { graph, forward }
    }

    pub fn graph(&self) -> &'g CoxeterGraph {
        self.graph
    }

    /// `(tail, head)` of edge `id`, if oriented.
    pub fn arc(&self, id: usize) -> Option<(Vertex, Vertex)> {
        let e = self.graph.edge(id);
        self.forward[id].map(|f| if f { (e.lo, e.hi) } else { (e.hi, e.lo) })
    }

    /// Oriented arcs in canonical edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.forward.len()).filter_map(|id| self.arc(id))
    }

    pub fn is_total(&self) -> bool {
        self.forward.iter().all(Option::is_some)
    }

    /// The total orientation, if every edge is oriented.
    pub fn to_total(&self) -> Option<AcyclicOrientation<'g>> {
        let forward: Option<Vec<bool>> = self.forward.iter().copied().collect();
        forward.map(|f| AcyclicOrientation::from_forward(self.graph, &f).expect("first-occurrence orientations are acyclic"))
    }

    pub fn to_text(&self) -> String {
        self.arcs()
            .map(|(t, h)| format!("{}>{}", self.graph.name(t), self.graph.name(h)))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_dot(&self) -> String {
        dot(self.graph, self.arcs())
    }
}
