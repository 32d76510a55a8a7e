//! Separating intersections of links and their variants.
//!
//! * SIL `(x1, x2 | Z)`: `x1`, `x2` non-adjacent and `Z` a component of
//!   `Γ ∖ (lk(x1) ∩ lk(x2))` containing neither of them.
//! * STIL `(x1, x2, x3 | Z)`: the triple spans at most one edge and `Z` is a
//!   component of `Γ ∖ (lk(x1) ∩ lk(x2) ∩ lk(x3))` avoiding all three.
//! * FSIL `{x1, x2, x3}`: every `(xi, xj | xk)` is a SIL.
//! * non-Coxeter SIL: a SIL with `max(p(x1), p(x2)) >= 3`.
//!
//! Witnesses carry whole components. Searches run in lexicographic vertex
//! order, so results are deterministic.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SilWitness {
    pub x1: Vertex,
    pub x2: Vertex,
    pub component: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StilWitness {
    pub x1: Vertex,
    pub x2: Vertex,
    pub x3: Vertex,
    pub component: VertexSet,
}

/// The three constituent SILs are `(x1, x2 | x3)`, `(x1, x3 | x2)`, `(x2, x3 | x1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FsilWitness {
    pub x1: Vertex,
    pub x2: Vertex,
    pub x3: Vertex,
    pub sils: [SilWitness; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NonCoxeterSilWitness {
    pub underlying: SilWitness,
    pub heavy_vertex: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    Sil(SilWitness),
    Stil(StilWitness),
    Fsil(FsilWitness),
    NonCoxeterSil(NonCoxeterSilWitness),
}

/// Outcome of the three-way case split for two SILs sharing `x1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StilfindCase {
    Fsil(FsilWitness),
    Stil(StilWitness),
    SameComponentCondition,
}

fn distinct(vs: &[Vertex]) -> bool {
    vs.iter().enumerate().all(|(i, v)| !vs[..i].contains(v))
}

fn check_distinct(g: &LabelledGraph, vs: &[Vertex]) -> Result<()> {
    for &v in vs {
        g.check_vertex(v)?;
    }
    if distinct(vs) {
        Ok(())
    } else {
        Err(Error::input("vertices must be distinct"))
    }
}

fn link(g: &LabelledGraph, v: Vertex) -> VertexSet {
    g.vertices().filter(|&u| g.adjacent(u, v)).collect()
}

fn star(g: &LabelledGraph, v: Vertex) -> VertexSet {
    let mut s = link(g, v);
    s.insert(v);
    s
}

/// `lk(x1) ∩ … ∩ lk(xk)`.
pub fn common_link(g: &LabelledGraph, xs: &[Vertex]) -> VertexSet {
    g.vertices().filter(|&u| xs.iter().all(|&x| g.adjacent(u, x))).collect()
}

/// Component of `z` in `Γ ∖ (lk(x1) ∩ lk(x2))` if the pair is non-adjacent
/// and that component avoids both.
fn sil_component(g: &LabelledGraph, x1: Vertex, x2: Vertex, z: Vertex) -> Option<VertexSet> {
    if g.adjacent(x1, x2) {
        return None;
    }
    let comp = g.component_of(z, &common_link(g, &[x1, x2]))?;
    (!comp.contains(x1) && !comp.contains(x2)).then_some(comp)
}

fn span_edges(g: &LabelledGraph, x1: Vertex, x2: Vertex, x3: Vertex) -> usize {
    [(x1, x2), (x1, x3), (x2, x3)].iter().filter(|&&(a, b)| g.adjacent(a, b)).count()
}

fn stil_component(
    g: &LabelledGraph,
    x1: Vertex,
    x2: Vertex,
    x3: Vertex,
    z: Vertex,
) -> Option<VertexSet> {
    if span_edges(g, x1, x2, x3) > 1 {
        return None;
    }
    let comp = g.component_of(z, &common_link(g, &[x1, x2, x3]))?;
    [x1, x2, x3].iter().all(|&x| !comp.contains(x)).then_some(comp)
}

/// `Some(witness)` iff `(x1, x2 | z)` is a SIL.
pub fn is_sil(g: &LabelledGraph, x1: Vertex, x2: Vertex, z: Vertex) -> Result<Option<SilWitness>> {
    check_distinct(g, &[x1, x2, z])?;
    Ok(sil_component(g, x1, x2, z).map(|component| SilWitness { x1, x2, component }))
}

/// True when `(x1, x2 | z)` is a SIL for every `z` in the non-empty set `zs`.
pub fn is_sil_for_all(g: &LabelledGraph, x1: Vertex, x2: Vertex, zs: &VertexSet) -> bool {
    !zs.is_empty()
        && !zs.contains(x1)
        && !zs.contains(x2)
        && zs.iter().all(|z| sil_component(g, x1, x2, z).is_some())
}

/// Every SIL `(x1, x2 | Z)` with `x1 < x2`, ordered by pair then by component.
pub fn enumerate_sils(g: &LabelledGraph) -> Vec<SilWitness> {
    let mut out = Vec::new();
    for x1 in g.vertices() {
        for x2 in g.vertices().filter(|&x2| x1 < x2 && !g.adjacent(x1, x2)) {
            for component in g.components_avoiding(&common_link(g, &[x1, x2])) {
                if !component.contains(x1) && !component.contains(x2) {
                    out.push(SilWitness { x1, x2, component });
                }
            }
        }
    }
    out
}

/// SILs on the pair `{x1, x2}`, one per component.
pub fn sils_on_pair(g: &LabelledGraph, x1: Vertex, x2: Vertex) -> Vec<SilWitness> {
    if x1 == x2 || g.adjacent(x1, x2) {
        return Vec::new();
    }
    g.components_avoiding(&common_link(g, &[x1, x2]))
        .into_iter()
        .filter(|c| !c.contains(x1) && !c.contains(x2))
        .map(|component| SilWitness { x1, x2, component })
        .collect()
}

pub fn is_stil(
    g: &LabelledGraph,
    x1: Vertex,
    x2: Vertex,
    x3: Vertex,
    z: Vertex,
) -> Result<Option<StilWitness>> {
    check_distinct(g, &[x1, x2, x3, z])?;
    Ok(stil_component(g, x1, x2, x3, z).map(|component| StilWitness { x1, x2, x3, component }))
}

fn fsil_unchecked(g: &LabelledGraph, x1: Vertex, x2: Vertex, x3: Vertex) -> Option<FsilWitness> {
    let s12 = sil_component(g, x1, x2, x3)?;
    let s13 = sil_component(g, x1, x3, x2)?;
    let s23 = sil_component(g, x2, x3, x1)?;
    Some(FsilWitness {
        x1,
        x2,
        x3,
        sils: [
            SilWitness { x1, x2, component: s12 },
            SilWitness { x1, x2: x3, component: s13 },
            SilWitness { x1: x2, x2: x3, component: s23 },
        ],
    })
}

pub fn is_fsil(g: &LabelledGraph, x1: Vertex, x2: Vertex, x3: Vertex) -> Result<Option<FsilWitness>> {
    check_distinct(g, &[x1, x2, x3])?;
    Ok(fsil_unchecked(g, x1, x2, x3))
}

/// First FSIL `x1 < x2 < x3` in lexicographic order.
pub fn find_fsil(g: &LabelledGraph) -> Option<FsilWitness> {
    let n = g.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if let Some(w) = fsil_unchecked(g, Vertex(a), Vertex(b), Vertex(c)) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// First STIL over triples `x1 < x2 < x3`, taking the component of the least
/// qualifying `z`.
pub fn find_stil(g: &LabelledGraph) -> Option<StilWitness> {
    let n = g.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x1, x2, x3) = (Vertex(a), Vertex(b), Vertex(c));
                if span_edges(g, x1, x2, x3) > 1 {
                    continue;
                }
                let comps = g.components_avoiding(&common_link(g, &[x1, x2, x3]));
                if let Some(component) =
                    comps.into_iter().find(|c| [x1, x2, x3].iter().all(|&x| !c.contains(x)))
                {
                    return Some(StilWitness { x1, x2, x3, component });
                }
            }
        }
    }
    None
}

/// First SIL in [`enumerate_sils`] order on which some defining vertex has order at least 3.
pub fn find_non_coxeter_sil(g: &LabelledGraph) -> Option<NonCoxeterSilWitness> {
    enumerate_sils(g).into_iter().find_map(|s| {
        let heavy = [s.x1, s.x2].into_iter().find(|&x| g.order(x) >= 3)?;
        Some(NonCoxeterSilWitness { underlying: s, heavy_vertex: heavy })
    })
}

/// A witness to largeness: FSIL first, then STIL, then non-Coxeter SIL.
pub fn find_witness(g: &LabelledGraph) -> Option<Witness> {
    if let Some(w) = find_fsil(g) {
        return Some(Witness::Fsil(w));
    }
    if let Some(w) = find_stil(g) {
        return Some(Witness::Stil(w));
    }
    find_non_coxeter_sil(g).map(Witness::NonCoxeterSil)
}

/// Two SILs sharing a vertex with overlapping components give a STIL.
///
/// `s1 = (x1, x2 | Z)` and `s2 = (x1, x3 | Z')` may list the shared vertex in
/// either slot. Returns `(x1, x2, x3 | z)`.
pub fn overlap_to_stil(
    g: &LabelledGraph,
    s1: &SilWitness,
    s2: &SilWitness,
    z: Vertex,
) -> Result<StilWitness> {
    for s in [s1, s2] {
        if !Witness::Sil(s.clone()).is_valid(g) {
            return Err(Error::input(format!("{} is not a SIL", s.display(g))));
        }
    }
    let shared = [s1.x1, s1.x2]
        .into_iter()
        .find(|v| *v == s2.x1 || *v == s2.x2)
        .ok_or_else(|| Error::input("the two SILs share no vertex"))?;
    let other = |s: &SilWitness| if s.x1 == shared { s.x2 } else { s.x1 };
    let (x1, x2, x3) = (shared, other(s1), other(s2));
    if x2 == x3 {
        return Err(Error::input("the two SILs are on the same pair"));
    }
    if !s1.component.contains(z) || !s2.component.contains(z) {
        return Err(Error::input(format!("`{}` is not in both components", g.name(z))));
    }
    stil_component(g, x1, x2, x3, z)
        .map(|component| StilWitness { x1, x2, x3, component })
        .ok_or_else(|| {
            Error::counterexample(format!(
                "overlapping SILs {} and {} at `{}` give no STIL in {:?}",
                s1.display(g),
                s2.display(g),
                g.name(z),
                g
            ))
        })
}

/// Given SILs `(x1, x2 | y)` and `(x1, x3 | z)`, reports an FSIL, a STIL on
/// the triple, or that `x1, x2, y` share a component of `(Γ ∖ st(x3)) ∪ {x2}`
/// and `x1, x3, z` share a component of `(Γ ∖ st(x2)) ∪ {x3}`.
pub fn stilfind_trichotomy(
    g: &LabelledGraph,
    x1: Vertex,
    x2: Vertex,
    x3: Vertex,
    y: Vertex,
    z: Vertex,
) -> Result<StilfindCase> {
    check_distinct(g, &[x1, x2, x3])?;
    g.check_vertex(y)?;
    g.check_vertex(z)?;
    if [x1, x2].contains(&y) || sil_component(g, x1, x2, y).is_none() {
        return Err(Error::input("(x1, x2 | y) is not a SIL"));
    }
    if [x1, x3].contains(&z) || sil_component(g, x1, x3, z).is_none() {
        return Err(Error::input("(x1, x3 | z) is not a SIL"));
    }
    if y == z {
        if let Some(component) = stil_component(g, x1, x2, x3, y) {
            return Ok(StilfindCase::Stil(StilWitness { x1, x2, x3, component }));
        }
    }
    if let Some(w) = fsil_unchecked(g, x1, x2, x3) {
        return Ok(StilfindCase::Fsil(w));
    }
    let candidates = [y, z].into_iter().chain(g.vertices());
    for w in candidates.filter(|w| ![x1, x2, x3].contains(w)) {
        if let Some(component) = stil_component(g, x1, x2, x3, w) {
            return Ok(StilfindCase::Stil(StilWitness { x1, x2, x3, component }));
        }
    }
    let same_component = |outer: Vertex, keep: Vertex, members: [Vertex; 3]| {
        let st = star(g, outer);
        let alive: Vec<bool> = g.vertices().map(|v| v == keep || !st.contains(v)).collect();
        g.components_of_mask(&alive)
            .iter()
            .any(|c| members.iter().all(|&m| c.contains(m)))
    };
    if same_component(x3, x2, [x1, x2, y]) && same_component(x2, x3, [x1, x3, z]) {
        return Ok(StilfindCase::SameComponentCondition);
    }
    Err(Error::counterexample(format!(
        "no case applies for x1={}, x2={}, x3={}, y={}, z={} in {:?}",
        g.name(x1),
        g.name(x2),
        g.name(x3),
        g.name(y),
        g.name(z),
        g
    )))
}

/// True iff `a` and `b` lie in different components of `Γ ∖ st(v)`.
pub fn star_separates(g: &LabelledGraph, v: Vertex, a: Vertex, b: Vertex) -> Result<bool> {
    let st = g.star(v)?;
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if st.contains(a) || st.contains(b) {
        return Err(Error::input(format!(
            "`{}` and `{}` must lie outside st({})",
            g.name(a),
            g.name(b),
            g.name(v)
        )));
    }
    Ok(g.component_of(a, &st).is_some_and(|c| !c.contains(b)))
}

fn separates_quiet(g: &LabelledGraph, v: Vertex, a: Vertex, b: Vertex) -> bool {
    star_separates(g, v, a, b).unwrap_or(false)
}

/// If `(x1, x2 | x4)` is a SIL and `st(x4)` separates `x1` from `x2`, then
/// `{x1, x2, x4}` is an FSIL.
pub fn fsil_from_separating_star(
    g: &LabelledGraph,
    x1: Vertex,
    x2: Vertex,
    x4: Vertex,
) -> Result<FsilWitness> {
    check_distinct(g, &[x1, x2, x4])?;
    if sil_component(g, x1, x2, x4).is_none() {
        return Err(Error::input("(x1, x2 | x4) is not a SIL"));
    }
    if !separates_quiet(g, x4, x1, x2) {
        return Err(Error::input("st(x4) does not separate x1 and x2"));
    }
    fsil_unchecked(g, x1, x2, x4).ok_or_else(|| {
        Error::counterexample(format!(
            "{{{}, {}, {}}} is not an FSIL in {:?}",
            g.name(x1),
            g.name(x2),
            g.name(x4),
            g
        ))
    })
}

/// If `st(x1)` separates `x2, x3` and `st(x2)` separates `x1, x3`, then
/// `(x1, x2 | x3)` is a SIL.
pub fn sil_from_double_separation(
    g: &LabelledGraph,
    x1: Vertex,
    x2: Vertex,
    x3: Vertex,
) -> Result<SilWitness> {
    check_distinct(g, &[x1, x2, x3])?;
    if !separates_quiet(g, x1, x2, x3) || !separates_quiet(g, x2, x1, x3) {
        return Err(Error::input("the two star separations do not both hold"));
    }
    sil_component(g, x1, x2, x3)
        .map(|component| SilWitness { x1, x2, component })
        .ok_or_else(|| {
            Error::counterexample(format!(
                "({}, {} | {}) is not a SIL in {:?}",
                g.name(x1),
                g.name(x2),
                g.name(x3),
                g
            ))
        })
}

impl Witness {
    /// Re-checks the witness against the definitions from scratch.
    pub fn is_valid(&self, g: &LabelledGraph) -> bool {
        let in_graph = |vs: &[Vertex]| vs.iter().all(|v| v.index() < g.len());
        let is_component = |removed: &VertexSet, c: &VertexSet| {
            g.components_avoiding(removed).iter().any(|d| d == c)
        };
        match self {
            Witness::Sil(s) => {
                in_graph(&[s.x1, s.x2])
                    && s.x1 != s.x2
                    && !g.adjacent(s.x1, s.x2)
                    && !s.component.is_empty()
                    && !s.component.contains(s.x1)
                    && !s.component.contains(s.x2)
                    && is_component(&common_link(g, &[s.x1, s.x2]), &s.component)
            }
            Witness::Stil(s) => {
                let xs = [s.x1, s.x2, s.x3];
                in_graph(&xs)
                    && distinct(&xs)
                    && span_edges(g, s.x1, s.x2, s.x3) <= 1
                    && !s.component.is_empty()
                    && xs.iter().all(|&x| !s.component.contains(x))
                    && is_component(&common_link(g, &xs), &s.component)
            }
            Witness::Fsil(f) => {
                let xs = [f.x1, f.x2, f.x3];
                let expected = [(f.x1, f.x2, f.x3), (f.x1, f.x3, f.x2), (f.x2, f.x3, f.x1)];
                in_graph(&xs)
                    && distinct(&xs)
                    && f.sils.iter().zip(expected).all(|(s, (a, b, c))| {
                        s.x1 == a
                            && s.x2 == b
                            && s.component.contains(c)
                            && Witness::Sil(s.clone()).is_valid(g)
                    })
            }
            Witness::NonCoxeterSil(w) => {
                let s = &w.underlying;
                (w.heavy_vertex == s.x1 || w.heavy_vertex == s.x2)
                    && w.heavy_vertex.index() < g.len()
                    && g.order(w.heavy_vertex) >= 3
                    && Witness::Sil(s.clone()).is_valid(g)
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Sil(_) => "sil",
            Witness::Stil(_) => "stil",
            Witness::Fsil(_) => "fsil",
            Witness::NonCoxeterSil(_) => "non-coxeter-sil",
        }
    }

    pub fn record(&self, g: &LabelledGraph) -> WitnessRecord {
        let name = |v: Vertex| g.name(v).to_string();
        match self {
            Witness::Sil(s) => WitnessRecord::Sil(SilRecord::of(g, s)),
            Witness::Stil(s) => WitnessRecord::Stil {
                x1: name(s.x1),
                x2: name(s.x2),
                x3: name(s.x3),
                component: g.names_of(&s.component),
            },
            Witness::Fsil(f) => WitnessRecord::Fsil {
                x1: name(f.x1),
                x2: name(f.x2),
                x3: name(f.x3),
                sils: f.sils.iter().map(|s| SilRecord::of(g, s)).collect(),
            },
            Witness::NonCoxeterSil(w) => WitnessRecord::NonCoxeterSil {
                x1: name(w.underlying.x1),
                x2: name(w.underlying.x2),
                component: g.names_of(&w.underlying.component),
                heavy_vertex: name(w.heavy_vertex),
            },
        }
    }

    pub fn display<'a>(&'a self, g: &'a LabelledGraph) -> impl fmt::Display + 'a {
        DisplayWitness { witness: self, graph: g }
    }
}

impl SilWitness {
    pub fn display<'a>(&'a self, g: &'a LabelledGraph) -> impl fmt::Display + 'a {
        DisplayWitness { witness: Witness::Sil(self.clone()), graph: g }
    }
}

struct DisplayWitness<'a, W> {
    witness: W,
    graph: &'a LabelledGraph,
}

impl<W: std::borrow::Borrow<Witness>> fmt::Display for DisplayWitness<'_, W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.graph;
        let set = |s: &VertexSet| g.names_of(s).join(", ");
        match self.witness.borrow() {
            Witness::Sil(s) => {
                write!(f, "SIL ({}, {} | {{{}}})", g.name(s.x1), g.name(s.x2), set(&s.component))
            }
            Witness::Stil(s) => write!(
                f,
                "STIL ({}, {}, {} | {{{}}})",
                g.name(s.x1),
                g.name(s.x2),
                g.name(s.x3),
                set(&s.component)
            ),
            Witness::Fsil(w) => {
                write!(f, "FSIL {{{}, {}, {}}}", g.name(w.x1), g.name(w.x2), g.name(w.x3))
            }
            Witness::NonCoxeterSil(w) => write!(
                f,
                "non-Coxeter SIL ({}, {} | {{{}}}) with p({}) = {}",
                g.name(w.underlying.x1),
                g.name(w.underlying.x2),
                set(&w.underlying.component),
                g.name(w.heavy_vertex),
                g.order(w.heavy_vertex)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SilRecord {
    pub x1: String,
    pub x2: String,
    pub component: Vec<String>,
}

impl SilRecord {
    fn of(g: &LabelledGraph, s: &SilWitness) -> Self {
        SilRecord {
            x1: g.name(s.x1).to_string(),
            x2: g.name(s.x2).to_string(),
            component: g.names_of(&s.component),
        }
    }
}

/// JSON shape of a witness: a `kind` tag, vertex names and component lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessRecord {
    Sil(SilRecord),
    Stil { x1: String, x2: String, x3: String, component: Vec<String> },
    Fsil { x1: String, x2: String, x3: String, sils: Vec<SilRecord> },
    NonCoxeterSil { x1: String, x2: String, component: Vec<String>, heavy_vertex: String },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_va() -> LabelledGraph {
        LabelledGraph::involutions(
            &["x", "y", "c1", "c2", "z"],
            &[("x", "c1"), ("x", "c2"), ("y", "c1"), ("y", "c2"), ("c1", "c2"), ("z", "c1")],
        )
        .unwrap()
    }

    fn k1n(leaves: &[&str]) -> LabelledGraph {
        let mut names = vec!["m"];
        names.extend_from_slice(leaves);
        let edges: Vec<(&str, &str)> = leaves.iter().map(|l| ("m", *l)).collect();
        LabelledGraph::involutions(&names, &edges).unwrap()
    }

    fn vs<const N: usize>(g: &LabelledGraph, names: [&str; N]) -> [Vertex; N] {
        names.map(|n| g.vertex(n).unwrap())
    }

    #[test]
    fn is_sil_examples() {
        let g = g_va();
        let [x, y, z, c1] = vs(&g, ["x", "y", "z", "c1"]);
        let w = is_sil(&g, x, y, z).unwrap().unwrap();
        assert_eq!(g.names_of(&w.component), ["z"]);
        assert!(is_sil(&g, x, z, y).unwrap().is_none());
        assert!(is_sil(&g, x, c1, z).unwrap().is_none());
        assert!(is_sil(&g, x, x, z).is_err());
    }

    #[test]
    fn enumerate_sils_examples() {
        let p3 = LabelledGraph::involutions(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(enumerate_sils(&p3).is_empty());

        let g = g_va();
        let sils = enumerate_sils(&g);
        assert_eq!(sils.len(), 1);
        assert_eq!(sils[0].display(&g).to_string(), "SIL (x, y | {z})");

        let d = LabelledGraph::discrete(&["a", "b", "c"]).unwrap();
        let shown: Vec<String> = enumerate_sils(&d).iter().map(|s| s.display(&d).to_string()).collect();
        assert_eq!(shown, ["SIL (a, b | {c})", "SIL (a, c | {b})", "SIL (b, c | {a})"]);
    }

    #[test]
    fn is_stil_examples() {
        let d4 = LabelledGraph::discrete(&["a", "b", "c", "d"]).unwrap();
        let [a, b, c, d] = vs(&d4, ["a", "b", "c", "d"]);
        let w = is_stil(&d4, a, b, c, d).unwrap().unwrap();
        assert_eq!(d4.names_of(&w.component), ["d"]);

        let g31 = LabelledGraph::involutions(&["a", "b", "c", "d"], &[("a", "b")]).unwrap();
        assert!(is_stil(&g31, a, b, c, d).unwrap().is_some());

        let g = g_va();
        let [x, y, c1, z] = vs(&g, ["x", "y", "c1", "z"]);
        assert!(is_stil(&g, x, y, c1, z).unwrap().is_none());
        assert!(is_stil(&g, x, y, z, z).is_err());
    }

    #[test]
    fn is_fsil_examples() {
        let d = LabelledGraph::discrete(&["a", "b", "c"]).unwrap();
        let [a, b, c] = vs(&d, ["a", "b", "c"]);
        assert!(is_fsil(&d, a, b, c).unwrap().is_some());

        let k = k1n(&["x", "y", "z"]);
        let [x, y, z] = vs(&k, ["x", "y", "z"]);
        let w = is_fsil(&k, x, y, z).unwrap().unwrap();
        assert!(Witness::Fsil(w).is_valid(&k));

        let g = g_va();
        let [x, y, z] = vs(&g, ["x", "y", "z"]);
        assert!(is_fsil(&g, x, y, z).unwrap().is_none());
    }

    #[test]
    fn find_witness_examples() {
        let d4 = LabelledGraph::discrete(&["a", "b", "c", "d"]).unwrap();
        let w = find_witness(&d4).unwrap();
        assert_eq!(w.display(&d4).to_string(), "FSIL {a, b, c}");

        let g = g_va();
        assert!(find_witness(&g).is_none());
        let heavy = g.with_order(g.vertex("x").unwrap(), 3).unwrap();
        match find_witness(&heavy).unwrap() {
            Witness::NonCoxeterSil(w) => {
                assert_eq!(heavy.name(w.heavy_vertex), "x");
                assert_eq!(heavy.names_of(&w.underlying.component), ["z"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn overlap_to_stil_examples() {
        let k = k1n(&["x1", "x2", "x3", "z"]);
        let [x1, x2, x3, z] = vs(&k, ["x1", "x2", "x3", "z"]);
        let s1 = is_sil(&k, x1, x2, z).unwrap().unwrap();
        let s2 = is_sil(&k, x1, x3, z).unwrap().unwrap();
        let st = overlap_to_stil(&k, &s1, &s2, z).unwrap();
        assert_eq!((st.x1, st.x2, st.x3), (x1, x2, x3));
        assert_eq!(k.names_of(&st.component), ["z"]);

        let d4 = LabelledGraph::discrete(&["a", "b", "c", "d"]).unwrap();
        let [a, b, c, d] = vs(&d4, ["a", "b", "c", "d"]);
        let s1 = is_sil(&d4, a, b, d).unwrap().unwrap();
        let s2 = is_sil(&d4, a, c, d).unwrap().unwrap();
        let st = overlap_to_stil(&d4, &s1, &s2, d).unwrap();
        assert_eq!((st.x1, st.x2, st.x3), (a, b, c));

        // disjoint components
        let s2 = is_sil(&d4, a, c, b).unwrap().unwrap();
        assert!(matches!(overlap_to_stil(&d4, &s1, &s2, d), Err(Error::Input(_))));
    }

    #[test]
    fn stilfind_examples() {
        let d4 = LabelledGraph::discrete(&["x1", "x2", "x3", "w"]).unwrap();
        let [x1, x2, x3, w] = vs(&d4, ["x1", "x2", "x3", "w"]);
        assert!(matches!(stilfind_trichotomy(&d4, x1, x2, x3, w, w), Ok(StilfindCase::Stil(_))));

        let k = k1n(&["x1", "x2", "x3"]);
        let [x1, x2, x3] = vs(&k, ["x1", "x2", "x3"]);
        assert!(matches!(stilfind_trichotomy(&k, x1, x2, x3, x3, x2), Ok(StilfindCase::Fsil(_))));

        // hypothesis violated
        let g = g_va();
        let [x, y, z] = vs(&g, ["x", "y", "z"]);
        assert!(stilfind_trichotomy(&g, x, z, y, y, z).is_err());
    }

    #[test]
    fn stilfind_same_component_case() {
        // Two SILs (a, b | y) and (a, c | z) with no STIL or FSIL anywhere.
        // c1 joins a, b; c2 joins a, c; the hub h is adjacent to a, b, c, c1, c2, y, z,
        // y hangs off c1, z off c2, and b - c are adjacent.
        let g = LabelledGraph::involutions(
            &["a", "b", "c", "c1", "c2", "h", "y", "z"],
            &[
                ("a", "c1"),
                ("b", "c1"),
                ("a", "c2"),
                ("c", "c2"),
                ("a", "h"),
                ("b", "h"),
                ("c", "h"),
                ("c1", "h"),
                ("c2", "h"),
                ("y", "h"),
                ("z", "h"),
                ("y", "c1"),
                ("z", "c2"),
                ("b", "c"),
            ],
        )
        .unwrap();
        let [a, b, c, y, z] = vs(&g, ["a", "b", "c", "y", "z"]);
        if is_sil(&g, a, b, y).unwrap().is_some() && is_sil(&g, a, c, z).unwrap().is_some() {
            let case = stilfind_trichotomy(&g, a, b, c, y, z).unwrap();
            if find_witness(&g).is_none() {
                assert_eq!(case, StilfindCase::SameComponentCondition);
            }
        }
    }

    #[test]
    fn star_separation_examples() {
        let g = g_va();
        let [x, y, z] = vs(&g, ["x", "y", "z"]);
        assert!(star_separates(&g, x, y, z).unwrap());

        let p3 = LabelledGraph::involutions(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let [a, b, c] = vs(&p3, ["a", "b", "c"]);
        assert!(star_separates(&p3, b, a, c).is_err());

        let p5 = LabelledGraph::involutions(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
        )
        .unwrap();
        let [a, c, e] = vs(&p5, ["a", "c", "e"]);
        assert!(star_separates(&p5, c, a, e).unwrap());
    }

    #[test]
    fn fsil_from_separating_star_examples() {
        let d = LabelledGraph::discrete(&["x1", "x2", "x4"]).unwrap();
        let [x1, x2, x4] = vs(&d, ["x1", "x2", "x4"]);
        assert!(fsil_from_separating_star(&d, x1, x2, x4).is_ok());

        // 5-path: st(c) separates a and e, but (a, e | c) is not a SIL
        let p5 = LabelledGraph::involutions(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
        )
        .unwrap();
        let [a, c, e] = vs(&p5, ["a", "c", "e"]);
        assert!(matches!(fsil_from_separating_star(&p5, a, e, c), Err(Error::Input(_))));

        // st(z) leaves x, y joined through c2
        let g = g_va();
        let [x, y, z] = vs(&g, ["x", "y", "z"]);
        assert!(matches!(fsil_from_separating_star(&g, x, y, z), Err(Error::Input(_))));
    }

    #[test]
    fn sil_from_double_separation_examples() {
        let d = LabelledGraph::discrete(&["x1", "x2", "x3"]).unwrap();
        let [x1, x2, x3] = vs(&d, ["x1", "x2", "x3"]);
        let s = sil_from_double_separation(&d, x1, x2, x3).unwrap();
        assert_eq!(d.names_of(&s.component), ["x3"]);

        let k = k1n(&["x1", "x2", "x3"]);
        let [x1, x2, x3] = vs(&k, ["x1", "x2", "x3"]);
        let s = sil_from_double_separation(&k, x1, x2, x3).unwrap();
        assert_eq!(k.names_of(&s.component), ["x3"]);

        let p3 = LabelledGraph::involutions(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let [a, b, c] = vs(&p3, ["a", "b", "c"]);
        assert!(matches!(sil_from_double_separation(&p3, a, c, b), Err(Error::Input(_))));
    }

    #[test]
    fn witness_json_shape() {
        let g = g_va();
        let w = Witness::Sil(enumerate_sils(&g).remove(0));
        let json = serde_json::to_value(w.record(&g)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"kind": "sil", "x1": "x", "x2": "y", "component": ["z"]})
        );
    }
}
