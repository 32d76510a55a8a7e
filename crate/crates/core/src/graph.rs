//! Finite labelled simplicial graphs.
//!
//! Vertices are stored sorted by identifier, so a [`Vertex`] index order is
//! the identifier order. Every other module relies on that: witnesses, normal
//! forms and enumerations are all ordered by vertex index.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of a fixed [`LabelledGraph`], by position in identifier order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub(crate) usize);

impl Vertex {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A set of vertices of one graph, iterated in identifier order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: Vertex) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// True if `n` is `q^k` for a prime `q` and `k >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut q = 2u64;
    while q.saturating_mul(q) <= m {
        if m.is_multiple_of(q) {
            while m.is_multiple_of(q) {
                m /= q;
            }
            return m == 1;
        }
        q += 1;
    }
    // m itself is prime, and no smaller prime divided n
    true
}

/// A finite simplicial graph with a prime-power order `p(v)` on each vertex.
///
/// Immutable once built; construct with [`LabelledGraph::new`] or by parsing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelledGraph {
    names: Vec<String>,
    orders: Vec<u64>,
    adjacency: Vec<Vec<bool>>,
}

impl fmt::Debug for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabelledGraph {{ {} }}", self.to_text().trim_end().replace('\n', "; "))
    }
}

fn check_name(name: &str) -> std::result::Result<(), String> {
    if name.is_empty() {
        return Err("empty vertex name".into());
    }
    if let Some(c) = name.chars().find(|c| c.is_whitespace() || matches!(c, '^' | ',' | '#')) {
        return Err(format!("vertex name `{name}` contains reserved character {c:?}"));
    }
    Ok(())
}

impl LabelledGraph {
    /// Builds and validates a graph from named vertices with orders and named edges.
    pub fn new<S: AsRef<str>>(vertices: &[(S, u64)], edges: &[(S, S)]) -> Result<Self> {
        let mut by_name: BTreeMap<&str, u64> = BTreeMap::new();
        for (name, order) in vertices {
            let name = name.as_ref();
            check_name(name).map_err(Error::Input)?;
            if !is_prime_power(*order) {
                return Err(Error::input(format!(
                    "order {order} of vertex `{name}` is not a prime power"
                )));
            }
            if by_name.insert(name, *order).is_some() {
                return Err(Error::input(format!("duplicate vertex `{name}`")));
            }
        }
        let names: Vec<String> = by_name.keys().map(|s| s.to_string()).collect();
        let orders: Vec<u64> = by_name.values().copied().collect();
        let n = names.len();
        let mut graph = LabelledGraph { names, orders, adjacency: vec![vec![false; n]; n] };
        for (a, b) in edges {
            let u = graph.vertex(a.as_ref())?;
            let v = graph.vertex(b.as_ref())?;
            if u == v {
                return Err(Error::input(format!("loop at vertex `{}`", a.as_ref())));
            }
            graph.adjacency[u.0][v.0] = true;
            graph.adjacency[v.0][u.0] = true;
        }
        Ok(graph)
    }

    /// The empty graph.
    pub fn empty() -> Self {
        LabelledGraph { names: Vec::new(), orders: Vec::new(), adjacency: Vec::new() }
    }

    /// Discrete graph on the given names, all orders 2.
    pub fn discrete(names: &[&str]) -> Result<Self> {
        let vs: Vec<(&str, u64)> = names.iter().map(|n| (*n, 2)).collect();
        Self::new::<&str>(&vs, &[])
    }

    /// Graph with all orders 2 from names and edges.
    pub fn involutions(names: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let vs: Vec<(&str, u64)> = names.iter().map(|n| (*n, 2)).collect();
        Self::new(&vs, edges)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.len()).map(Vertex)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map(Vertex)
            .map_err(|_| Error::UnknownVertex(name.to_string()))
    }

    /// Resolves a list of names into a vertex set.
    pub fn vertex_set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.vertex(n.as_ref())).collect()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.0]
    }

    pub fn names_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v.0].clone()).collect()
    }

    pub fn order(&self, v: Vertex) -> u64 {
        self.orders[v.0]
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u.0][v.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.vertices().filter(move |&v| u < v).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adjacent(u, v))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn all_involutions(&self) -> bool {
        self.orders.iter().all(|&p| p == 2)
    }

    /// Same graph with `v` relabelled to order `order`.
    pub fn with_order(&self, v: Vertex, order: u64) -> Result<Self> {
        if !is_prime_power(order) {
            return Err(Error::input(format!("order {order} is not a prime power")));
        }
        let mut g = self.clone();
        g.orders[v.0] = order;
        Ok(g)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v.0 < self.len() {
            Ok(())
        } else {
            Err(Error::input(format!("vertex index {} out of range", v.0)))
        }
    }

    /// Neighbours of `v`.
    pub fn link(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.vertices().filter(|&u| self.adjacent(u, v)).collect())
    }

    /// Neighbours of `v` together with `v`.
    pub fn star(&self, v: Vertex) -> Result<VertexSet> {
        let mut s = self.link(v)?;
        s.insert(v);
        Ok(s)
    }

    /// Connected components of the full subgraph on `vertices(g) \ removed`,
    /// sorted by smallest member.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let alive: Vec<bool> = self.vertices().map(|v| !removed.contains(v)).collect();
        self.components_of_mask(&alive)
    }

    pub(crate) fn components_of_mask(&self, alive: &[bool]) -> Vec<VertexSet> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if !alive[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                comp.insert(Vertex(u));
                for w in 0..n {
                    if alive[w] && !seen[w] && self.adjacency[u][w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The component of `v` in the full subgraph avoiding `removed`, if `v` survives.
    pub fn component_of(&self, v: Vertex, removed: &VertexSet) -> Option<VertexSet> {
        if removed.contains(v) {
            return None;
        }
        self.components_avoiding(removed).into_iter().find(|c| c.contains(v))
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// At most one component (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The induced subgraph on `keep`, with labels restricted.
    pub fn full_subgraph(&self, keep: &VertexSet) -> LabelledGraph {
        let kept: Vec<Vertex> = keep.iter().filter(|v| v.0 < self.len()).collect();
        LabelledGraph {
            names: kept.iter().map(|v| self.names[v.0].clone()).collect(),
            orders: kept.iter().map(|v| self.orders[v.0]).collect(),
            adjacency: kept
                .iter()
                .map(|u| kept.iter().map(|w| self.adjacency[u.0][w.0]).collect())
                .collect(),
        }
    }

    /// Disjoint union of `self` and `other` with every cross edge added.
    pub fn join(&self, other: &LabelledGraph) -> Result<LabelledGraph> {
        let mut vertices: Vec<(String, u64)> = Vec::new();
        for g in [self, other] {
            for v in g.vertices() {
                vertices.push((g.name(v).to_string(), g.order(v)));
            }
        }
        if let Some(clash) = self.names.iter().find(|n| other.vertex(n).is_ok()) {
            return Err(Error::input(format!("vertex `{clash}` occurs in both join factors")));
        }
        let mut edges: Vec<(String, String)> = Vec::new();
        for g in [self, other] {
            for (u, v) in g.edges() {
                edges.push((g.name(u).to_string(), g.name(v).to_string()));
            }
        }
        for a in &self.names {
            for b in &other.names {
                edges.push((a.clone(), b.clone()));
            }
        }
        let vs: Vec<(&str, u64)> = vertices.iter().map(|(n, p)| (n.as_str(), *p)).collect();
        let es: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        LabelledGraph::new(&vs, &es)
    }

    /// Parses the line-oriented text format, or JSON when the input starts with `{`.
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            return Self::from_json(input);
        }
        let mut vertices: Vec<(String, u64)> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        let mut declared: BTreeMap<String, usize> = BTreeMap::new();
        for (i, raw) in input.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["vertex", name, rest @ ..] => {
                    check_name(name).map_err(|m| Error::parse(line_no, m))?;
                    let order = match rest {
                        [] => 2,
                        ["order", p] => p
                            .parse::<u64>()
                            .map_err(|_| Error::parse(line_no, format!("invalid order `{p}`")))?,
                        _ => {
                            return Err(Error::parse(
                                line_no,
                                "expected `vertex <name> [order <p>]`",
                            ))
                        }
                    };
                    if !is_prime_power(order) {
                        return Err(Error::parse(
                            line_no,
                            format!("order {order} is not a prime power"),
                        ));
                    }
                    if declared.insert(name.to_string(), line_no).is_some() {
                        return Err(Error::parse(line_no, format!("duplicate vertex `{name}`")));
                    }
                    vertices.push((name.to_string(), order));
                }
                ["edge", a, b] => {
                    for n in [a, b] {
                        if !declared.contains_key(*n) {
                            return Err(Error::parse(line_no, format!("undeclared vertex `{n}`")));
                        }
                    }
                    if a == b {
                        return Err(Error::parse(line_no, format!("loop at vertex `{a}`")));
                    }
                    edges.push((a.to_string(), b.to_string()));
                }
                ["edge", ..] => return Err(Error::parse(line_no, "expected `edge <name> <name>`")),
                [other, ..] => {
                    return Err(Error::parse(line_no, format!("unknown directive `{other}`")))
                }
            }
        }
        let vs: Vec<(&str, u64)> = vertices.iter().map(|(n, p)| (n.as_str(), *p)).collect();
        let es: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        LabelledGraph::new(&vs, &es)
    }

    pub fn from_json(input: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(input)
            .map_err(|e| Error::parse(e.line(), format!("invalid graph JSON: {e}")))?;
        let vs: Vec<(String, u64)> = doc
            .vertices
            .into_iter()
            .map(|v| match v {
                VertexDoc::Name(name) => (name, 2),
                VertexDoc::Full { name, order } => (name, order.unwrap_or(2)),
            })
            .collect();
        let vs: Vec<(&str, u64)> = vs.iter().map(|(n, p)| (n.as_str(), *p)).collect();
        let es: Vec<(&str, &str)> = doc.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        LabelledGraph::new(&vs, &es)
    }

    /// Text format: one `vertex` line per vertex (order omitted when 2), then edges.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            match self.order(v) {
                2 => out.push_str(&format!("vertex {}\n", self.name(v))),
                p => out.push_str(&format!("vertex {} order {}\n", self.name(v), p)),
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("edge {} {}\n", self.name(u), self.name(v)));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphDoc {
            vertices: self
                .vertices()
                .map(|v| VertexDoc::Full { name: self.name(v).to_string(), order: Some(self.order(v)) })
                .collect(),
            edges: self
                .edges()
                .map(|(u, v)| [self.name(u).to_string(), self.name(v).to_string()])
                .collect(),
        };
        serde_json::to_value(doc).expect("graph document serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    #[serde(default)]
    edges: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VertexDoc {
    Name(String),
    Full {
        name: String,
        #[serde(default)]
        order: Option<u64>,
    },
}
