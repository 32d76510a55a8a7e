//! Three-way classification of `Out(G(Γ, p))`, and the structure of `Out⁰`
//! for disconnected Coxeter graphs without STIL or FSIL.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, VertexSet};
use crate::sil::{enumerate_sils, find_fsil, find_stil, find_witness, FsilWitness, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Finite,
    VirtuallyAbelianInfinite,
    Large,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Finite => "finite",
            Verdict::VirtuallyAbelianInfinite => "virtually-abelian-infinite",
            Verdict::Large => "large",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// A STIL, FSIL or non-Coxeter SIL for `Large`; a SIL for the infinite
    /// virtually abelian case; nothing when finite.
    pub witness: Option<Witness>,
    pub justification: Vec<String>,
}

pub fn classify(g: &LabelledGraph) -> Classification {
    if let Some(w) = find_witness(g) {
        let step = match &w {
            Witness::Fsil(_) => "an FSIL gives a surjection onto a virtually free group",
            Witness::Stil(_) => "a STIL gives a surjection onto a virtually free group",
            _ => "a SIL with a vertex of order at least 3 gives a surjection onto a virtually free group",
        };
        return Classification {
            verdict: Verdict::Large,
            justification: vec![
                format!("found {}", w.display(g)),
                step.to_string(),
                "so Out is large".to_string(),
            ],
            witness: Some(w),
        };
    }
    let mut justification =
        vec!["no STIL, FSIL or non-Coxeter SIL, so Out is virtually abelian".to_string()];
    match enumerate_sils(g).into_iter().next() {
        Some(s) => {
            let w = Witness::Sil(s);
            justification.push(format!("found {}", w.display(g)));
            justification.push("a SIL makes Out infinite".to_string());
            Classification { verdict: Verdict::VirtuallyAbelianInfinite, witness: Some(w), justification }
        }
        None => {
            justification.push("no SIL, so Out is finite".to_string());
            Classification { verdict: Verdict::Finite, witness: None, justification }
        }
    }
}

impl Classification {
    pub fn to_json(&self, g: &LabelledGraph) -> serde_json::Value {
        #[derive(Serialize)]
        struct Out<'a> {
            verdict: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<crate::sil::WitnessRecord>,
            justification: &'a [String],
        }
        serde_json::to_value(Out {
            verdict: self.verdict.as_str(),
            witness: self.witness.as_ref().map(|w| w.record(g)),
            justification: &self.justification,
        })
        .expect("plain data serializes")
    }
}

/// One side of a two-component graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentFactor {
    pub component: LabelledGraph,
    /// Vertices adjacent to every other vertex of the component.
    pub central_clique: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectedStructure {
    /// `Out⁰` is the Coxeter group on this graph: the join of the two
    /// components with their central cliques removed.
    pub out0_graph: LabelledGraph,
    pub factors: [ComponentFactor; 2],
}

/// Structure of `Out⁰` for a disconnected all-involution graph with no STIL
/// or FSIL. Such a graph has exactly two components.
pub fn disconnected_structure(g: &LabelledGraph) -> Result<DisconnectedStructure> {
    if !g.all_involutions() {
        return Err(Error::input("every vertex must have order 2"));
    }
    let comps = g.components();
    if comps.len() < 2 {
        return Err(Error::input("the graph is connected"));
    }
    if comps.len() >= 3 {
        let [a, b, c] = [0, 1, 2].map(|i| comps[i].first().expect("components are non-empty"));
        let fsil = crate::sil::is_fsil(g, a, b, c)?.expect("vertices of three components form an FSIL");
        return Err(Error::input(format!(
            "{} components; {} is an FSIL",
            comps.len(),
            Witness::Fsil(fsil).display(g)
        )));
    }
    if let Some(w) = find_fsil(g) {
        return Err(Error::input(format!("{} present", Witness::Fsil(w).display(g))));
    }
    if let Some(w) = find_stil(g) {
        return Err(Error::input(format!("{} present", Witness::Stil(w).display(g))));
    }
    let factor = |c: &VertexSet| -> (ComponentFactor, LabelledGraph) {
        let component = g.full_subgraph(c);
        let clique = component.central_clique();
        let rest: VertexSet = component.vertices().filter(|v| !clique.contains(*v)).collect();
        let reduced = component.full_subgraph(&rest);
        let central_clique = component.names_of(&clique);
        (ComponentFactor { component, central_clique }, reduced)
    };
    let (f1, r1) = factor(&comps[0]);
    let (f2, r2) = factor(&comps[1]);
    Ok(DisconnectedStructure { out0_graph: r1.join(&r2)?, factors: [f1, f2] })
}

impl DisconnectedStructure {
    pub fn to_json(&self) -> serde_json::Value {
        let factors: Vec<serde_json::Value> = self
            .factors
            .iter()
            .map(|f| {
                serde_json::json!({
                    "component": f.component.to_json(),
                    "central_clique": f.central_clique,
                })
            })
            .collect();
        serde_json::json!({ "out0_graph": self.out0_graph.to_json(), "factors": factors })
    }
}

/// The FSIL on three vertices taken from distinct components, if there are three.
pub fn fsil_across_components(g: &LabelledGraph) -> Option<FsilWitness> {
    let comps = g.components();
    if comps.len() < 3 {
        return None;
    }
    let [a, b, c] = [0, 1, 2].map(|i| comps[i].first().unwrap());
    crate::sil::is_fsil(g, a, b, c).ok().flatten()
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

    #[test]
    fn golden_verdicts() {
        let p3 = LabelledGraph::involutions(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(classify(&p3).verdict, Verdict::Finite);
        assert!(classify(&p3).witness.is_none());

        let c = classify(&g_va());
        assert_eq!(c.verdict, Verdict::VirtuallyAbelianInfinite);
        assert_eq!(c.witness.unwrap().display(&g_va()).to_string(), "SIL (x, y | {z})");

        let heavy = g_va().with_order(g_va().vertex("x").unwrap(), 3).unwrap();
        let c = classify(&heavy);
        assert_eq!(c.verdict, Verdict::Large);
        assert!(matches!(c.witness, Some(Witness::NonCoxeterSil(_))));

        let d3 = LabelledGraph::discrete(&["a", "b", "c"]).unwrap();
        let c = classify(&d3);
        assert_eq!(c.verdict, Verdict::Large);
        assert!(matches!(c.witness, Some(Witness::Fsil(_))));
    }

    #[test]
    fn json_shape() {
        let g = g_va();
        let v = classify(&g).to_json(&g);
        assert_eq!(v["verdict"], "virtually-abelian-infinite");
        assert_eq!(v["witness"]["kind"], "sil");
        assert!(v["justification"].as_array().unwrap().len() >= 2);

        let p3 = LabelledGraph::involutions(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(classify(&p3).to_json(&p3).get("witness").is_none());
    }

    #[test]
    fn disconnected_examples() {
        let g = LabelledGraph::involutions(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]).unwrap();
        let s = disconnected_structure(&g).unwrap();
        assert_eq!(s.out0_graph, LabelledGraph::discrete(&["a", "c"]).unwrap());
        assert_eq!(s.factors[0].central_clique, ["b"]);
        assert_eq!(s.factors[1].central_clique, ["d"]);
        assert_ne!(classify(&s.out0_graph).verdict, Verdict::Large);

        let g = LabelledGraph::involutions(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let s = disconnected_structure(&g).unwrap();
        assert!(s.out0_graph.is_empty());
        assert_eq!(classify(&s.out0_graph).verdict, Verdict::Finite);

        let d3 = LabelledGraph::discrete(&["a", "b", "c"]).unwrap();
        let err = disconnected_structure(&d3).unwrap_err();
        assert!(err.to_string().contains("FSIL"));
        assert!(fsil_across_components(&d3).is_some());

        assert!(disconnected_structure(&g_va()).is_err());
    }
}
