//! Automorphisms of `G(Γ, p)` given by generator images.
//!
//! Maps act on the left: `compose(f, h)` is `x ↦ f(h(x))`. Every automorphism
//! carries the images of its inverse too, so inversion is free and
//! bijectivity is checked once at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, Vertex, VertexSet};
use crate::word::{Letter, NormalForm};

#[derive(Clone)]
pub struct Automorphism {
    graph: Arc<LabelledGraph>,
    images: Vec<NormalForm>,
    inverse_images: Vec<NormalForm>,
}

/// The partial conjugation `w ↦ v w v⁻¹` on a component of `Γ ∖ st(v)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialConjugation {
    pub multiplier: Vertex,
    pub support: VertexSet,
}

/// Result of the bounded innerness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InnerVerdict {
    Identity,
    /// Conjugation by this element, which is the shortest one that works.
    Inner(NormalForm),
    /// No conjugator of length at most the bound exists.
    NotInnerUpTo(usize),
}

impl InnerVerdict {
    pub fn is_inner(&self) -> bool {
        !matches!(self, InnerVerdict::NotInnerUpTo(_))
    }
}

/// Result of comparing two automorphisms modulo inner automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OutVerdict {
    /// `f = ι_g ∘ h` for the given `g`.
    Equal(NormalForm),
    NotEqualUpTo(usize),
}

impl OutVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, OutVerdict::Equal(_))
    }
}

fn same_graph(a: &Arc<LabelledGraph>, b: &Arc<LabelledGraph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_same(f: &Automorphism, h: &Automorphism) -> Result<()> {
    if same_graph(&f.graph, &h.graph) {
        Ok(())
    } else {
        Err(Error::input("automorphisms act on different graphs"))
    }
}

/// Substitutes generator images into a word.
fn substitute(g: &LabelledGraph, images: &[NormalForm], w: &[Letter]) -> NormalForm {
    let mut parts = Vec::with_capacity(w.len());
    for l in w {
        parts.push(g.power(&images[l.vertex.index()], l.exp));
    }
    let refs: Vec<&[Letter]> = parts.iter().map(|p| p.letters()).collect();
    g.product(&refs)
}

/// True iff `images` respects every defining relator.
fn is_homomorphism(g: &LabelledGraph, images: &[NormalForm]) -> bool {
    g.vertices().all(|v| g.power(&images[v.index()], g.order(v)).is_identity())
        && g.edges()
            .all(|(u, v)| g.commutator(&images[u.index()], &images[v.index()]).is_identity())
}

fn generator_form(v: Vertex) -> NormalForm {
    NormalForm::from_reduced(vec![Letter::generator(v)])
}

impl Automorphism {
    pub fn identity(graph: &Arc<LabelledGraph>) -> Self {
        let images: Vec<NormalForm> = graph.vertices().map(generator_form).collect();
        Automorphism { graph: graph.clone(), inverse_images: images.clone(), images }
    }

    /// Builds an automorphism from generator images and the images of its inverse.
    ///
    /// Both maps must respect the relators and be mutually inverse on generators.
    pub fn from_images(
        graph: &Arc<LabelledGraph>,
        images: Vec<NormalForm>,
        inverse_images: Vec<NormalForm>,
    ) -> Result<Self> {
        let g = &**graph;
        if images.len() != g.len() || inverse_images.len() != g.len() {
            return Err(Error::input(format!("expected {} generator images", g.len())));
        }
        let normal = |w: &NormalForm| {
            w.iter().all(|l| l.vertex.index() < g.len() && l.exp >= 1 && l.exp < g.order(l.vertex))
                && g.normalize(w) == *w
        };
        if !images.iter().chain(&inverse_images).all(normal) {
            return Err(Error::input("generator images must be normal forms over the graph"));
        }
        if !is_homomorphism(g, &images) || !is_homomorphism(g, &inverse_images) {
            return Err(Error::input("the images do not respect the relators"));
        }
        for v in g.vertices() {
            let there = substitute(g, &images, &inverse_images[v.index()]);
            let back = substitute(g, &inverse_images, &images[v.index()]);
            if there != generator_form(v) || back != generator_form(v) {
                return Err(Error::input("the two maps are not mutually inverse"));
            }
        }
        Ok(Automorphism { graph: graph.clone(), images, inverse_images })
    }

    /// Conjugation by `element`: `w ↦ element · w · element⁻¹`.
    pub fn inner(graph: &Arc<LabelledGraph>, element: &[Letter]) -> Self {
        let g = &**graph;
        let inv = g.inverse(element);
        let images = g.vertices().map(|v| g.conjugate(element, &[Letter::generator(v)])).collect();
        let inverse_images = g.vertices().map(|v| g.conjugate(&inv, &[Letter::generator(v)])).collect();
        Automorphism { graph: graph.clone(), images, inverse_images }
    }

    /// The partial conjugation with multiplier `v` on `support`, which must be
    /// a whole component of `Γ ∖ st(v)`.
    pub fn partial_conjugation(
        graph: &Arc<LabelledGraph>,
        v: Vertex,
        support: &VertexSet,
    ) -> Result<Self> {
        let g = &**graph;
        let st = g.star(v)?;
        if !g.components_avoiding(&st).iter().any(|c| c == support) {
            return Err(Error::input(format!(
                "{{{}}} is not a component of the graph minus st({})",
                g.names_of(support).join(", "),
                g.name(v)
            )));
        }
        let fwd = [Letter::generator(v)];
        let back = [Letter::new(v, g.order(v) - 1)];
        let map = |m: &[Letter]| -> Vec<NormalForm> {
            g.vertices()
                .map(|w| {
                    if support.contains(w) {
                        g.conjugate(m, &[Letter::generator(w)])
                    } else {
                        generator_form(w)
                    }
                })
                .collect()
        };
        Ok(Automorphism { graph: graph.clone(), images: map(&fwd), inverse_images: map(&back) })
    }

    pub fn graph(&self) -> &Arc<LabelledGraph> {
        &self.graph
    }

    /// Image of each generator, indexed by vertex.
    pub fn images(&self) -> &[NormalForm] {
        &self.images
    }

    pub fn image(&self, v: Vertex) -> &NormalForm {
        &self.images[v.index()]
    }

    pub fn apply(&self, w: &[Letter]) -> NormalForm {
        substitute(&self.graph, &self.images, w)
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            graph: self.graph.clone(),
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.graph.vertices().all(|v| self.images[v.index()] == generator_form(v))
    }

    /// `f ∘ h`.
    pub fn compose(&self, h: &Automorphism) -> Result<Automorphism> {
        check_same(self, h)?;
        let g = &*self.graph;
        let images = h.images.iter().map(|w| substitute(g, &self.images, w)).collect();
        let inverse_images =
            self.inverse_images.iter().map(|w| substitute(g, &h.inverse_images, w)).collect();
        let out = Automorphism { graph: self.graph.clone(), images, inverse_images };
        debug_assert!(is_homomorphism(g, &out.images));
        Ok(out)
    }

    /// `f h f⁻¹ h⁻¹`.
    pub fn commutator(&self, h: &Automorphism) -> Result<Automorphism> {
        self.compose(h)?.compose(&self.inverse())?.compose(&h.inverse())
    }

    /// Equality in `Aut(G)`: identical generator images.
    pub fn equal_in_aut(&self, h: &Automorphism) -> Result<bool> {
        check_same(self, h)?;
        Ok(self.images == h.images)
    }

    /// The shortest `g` with `self = ι_g`, or `None` if `self` is not inner.
    pub fn inner_conjugator(&self) -> Option<NormalForm> {
        let g = &*self.graph;
        // coset of all valid conjugators, as representative · G_allowed
        let mut rep: Vec<Letter> = Vec::new();
        let mut allowed = g.vertex_set();
        for v in g.vertices() {
            let u = conjugator_to_generator(g, v, &self.images[v.index()])?;
            let st = g.star(v).ok()?;
            let h = g.multiply(&g.inverse(&rep), &u);
            let (peeled, rest) = peel_left(g, &h, &allowed);
            if rest.iter().any(|l| !st.contains(l.vertex)) {
                return None;
            }
            rep = g.multiply(&rep, &peeled).into_word().into_letters();
            allowed = allowed.intersection(&st);
        }
        let shortest = strip_right(g, &g.normalize(&rep), &allowed);
        // the decision above is exact; this guards the bookkeeping
        let check = Automorphism::inner(&self.graph, &shortest);
        (check.images == self.images).then_some(shortest)
    }

    /// Is `self` conjugation by some element of length at most `max_len`?
    pub fn is_inner_bounded(&self, max_len: usize) -> InnerVerdict {
        if self.is_identity() {
            return InnerVerdict::Identity;
        }
        match self.inner_conjugator() {
            Some(g) if g.len() <= max_len => InnerVerdict::Inner(g),
            _ => InnerVerdict::NotInnerUpTo(max_len),
        }
    }

    /// Do `self` and `h` agree in `Out(G)` up to a conjugator of length `bound`?
    pub fn equal_in_out_bounded(&self, h: &Automorphism, bound: usize) -> Result<OutVerdict> {
        let q = self.compose(&h.inverse())?;
        Ok(match q.is_inner_bounded(bound) {
            InnerVerdict::Identity => OutVerdict::Equal(NormalForm::identity()),
            InnerVerdict::Inner(g) => OutVerdict::Equal(g),
            InnerVerdict::NotInnerUpTo(b) => OutVerdict::NotEqualUpTo(b),
        })
    }

    /// Exact equality in `Out(G)`.
    pub fn equal_in_out(&self, h: &Automorphism) -> Result<bool> {
        Ok(self.compose(&h.inverse())?.inner_conjugator().is_some())
    }

    /// The induced automorphism of `G_keep`, obtained by killing every
    /// generator outside `keep`.
    ///
    /// Requires each generator outside `keep` to map into the kernel of that
    /// projection, which holds for products of partial conjugations.
    pub fn factor_map(&self, keep: &VertexSet) -> Result<(Arc<LabelledGraph>, Automorphism)> {
        let g = &*self.graph;
        for v in keep.iter() {
            g.check_vertex(v)?;
        }
        for v in g.vertices().filter(|v| !keep.contains(*v)) {
            if !g.project(&self.images[v.index()], keep).is_identity()
                || !g.project(&self.inverse_images[v.index()], keep).is_identity()
            {
                return Err(Error::input(format!(
                    "the image of `{}` survives the projection",
                    g.name(v)
                )));
            }
        }
        let sub = Arc::new(g.full_subgraph(keep));
        let rank: Vec<Option<usize>> = {
            let mut r = vec![None; g.len()];
            for (i, v) in keep.iter().enumerate() {
                r[v.index()] = Some(i);
            }
            r
        };
        let reindex = |w: &NormalForm| -> NormalForm {
            let letters: Vec<Letter> = g
                .project(w, keep)
                .iter()
                .map(|l| Letter::new(Vertex(rank[l.vertex.index()].unwrap()), l.exp))
                .collect();
            sub.normalize(&letters)
        };
        let images = keep.iter().map(|v| reindex(&self.images[v.index()])).collect();
        let inverse_images = keep.iter().map(|v| reindex(&self.inverse_images[v.index()])).collect();
        let f = Automorphism::from_images(&sub, images, inverse_images)?;
        Ok((sub, f))
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        DisplayAutomorphism(self)
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        same_graph(&self.graph, &other.graph) && self.images == other.images
    }
}

impl Eq for Automorphism {}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism({})", self.display())
    }
}

struct DisplayAutomorphism<'a>(&'a Automorphism);

impl fmt::Display for DisplayAutomorphism<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &*self.0.graph;
        let mut first = true;
        for v in g.vertices() {
            let img = &self.0.images[v.index()];
            if *img == generator_form(v) {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{} -> {}", g.name(v), g.display_word(img))?;
        }
        if first {
            f.write_str("id")?;
        }
        Ok(())
    }
}

/// Some `u` with `w = u v u⁻¹`, found by peeling matching outer letters.
fn conjugator_to_generator(g: &LabelledGraph, v: Vertex, w: &NormalForm) -> Option<Vec<Letter>> {
    let target = generator_form(v);
    let mut cur = w.clone();
    let mut u: Vec<Letter> = Vec::new();
    while cur != target {
        if cur.len() <= 1 {
            return None;
        }
        let x = cur[0];
        let xi = g.inverse_letters(&[x]);
        let next = g.product(&[&xi, &cur, &[x]]);
        if next.len() + 2 != cur.len() {
            return None;
        }
        u.push(x);
        cur = next;
    }
    Some(g.normalize(&u).into_word().into_letters())
}

/// Splits `h = a · rest` with `a` the largest left factor in `G_allowed`.
fn peel_left(g: &LabelledGraph, h: &[Letter], allowed: &VertexSet) -> (Vec<Letter>, Vec<Letter>) {
    let mut rest = h.to_vec();
    let mut peeled = Vec::new();
    loop {
        let pos = g
            .left_available(&rest)
            .into_iter()
            .find(|&j| allowed.contains(rest[j].vertex));
        match pos {
            Some(j) => peeled.push(rest.remove(j)),
            None => return (peeled, rest),
        }
    }
}

/// Shortest element of the coset `w · G_allowed`.
fn strip_right(g: &LabelledGraph, w: &[Letter], allowed: &VertexSet) -> NormalForm {
    let mut rest = w.to_vec();
    while let Some(j) = g
        .right_available(&rest)
        .into_iter()
        .find(|&j| allowed.contains(rest[j].vertex))
    {
        rest.remove(j);
    }
    g.normalize(&rest)
}

/// Every partial conjugation, ordered by multiplier then by component.
pub fn enumerate_partial_conjugations(g: &LabelledGraph) -> Vec<PartialConjugation> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let st = g.star(v).expect("vertex of this graph");
        for support in g.components_avoiding(&st) {
            out.push(PartialConjugation { multiplier: v, support });
        }
    }
    out
}

impl PartialConjugation {
    pub fn automorphism(&self, graph: &Arc<LabelledGraph>) -> Result<Automorphism> {
        Automorphism::partial_conjugation(graph, self.multiplier, &self.support)
    }

    pub fn display<'a>(&'a self, g: &'a LabelledGraph) -> impl fmt::Display + 'a {
        DisplayPartial(self, g)
    }
}

struct DisplayPartial<'a>(&'a PartialConjugation, &'a LabelledGraph);

impl fmt::Display for DisplayPartial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.1;
        write!(
            f,
            "chi[{}; {}]",
            g.name(self.0.multiplier),
            g.names_of(&self.0.support).join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet, VecDeque};

    fn g_va() -> Arc<LabelledGraph> {
        Arc::new(
            LabelledGraph::involutions(
                &["x", "y", "c1", "c2", "z"],
                &[("x", "c1"), ("x", "c2"), ("y", "c1"), ("y", "c2"), ("c1", "c2"), ("z", "c1")],
            )
            .unwrap(),
        )
    }

    fn chi(g: &Arc<LabelledGraph>, v: &str, support: &[&str]) -> Automorphism {
        let v = g.vertex(v).unwrap();
        Automorphism::partial_conjugation(g, v, &g.vertex_set_of(support).unwrap()).unwrap()
    }

    fn img(f: &Automorphism, name: &str) -> String {
        let g = f.graph();
        g.format_word(f.image(g.vertex(name).unwrap()))
    }

    /// Conjugators found by breadth-first search over all elements up to `radius`.
    fn brute_force_conjugator(f: &Automorphism, radius: usize) -> Option<NormalForm> {
        let g = f.graph();
        let mut seen: HashSet<NormalForm> = HashSet::new();
        let mut queue = VecDeque::from([(NormalForm::identity(), 0usize)]);
        seen.insert(NormalForm::identity());
        let mut best: Option<NormalForm> = None;
        while let Some((w, d)) = queue.pop_front() {
            let works = g.vertices().all(|v| {
                g.conjugate(&w, &[Letter::generator(v)]) == *f.image(v)
            });
            if works && best.as_ref().is_none_or(|b| w.len() < b.len()) {
                best = Some(w.clone());
            }
            if d == radius {
                continue;
            }
            for v in g.vertices() {
                for e in 1..g.order(v) {
                    let next = g.multiply(&w, &[Letter::new(v, e)]);
                    if seen.insert(next.clone()) {
                        queue.push_back((next, d + 1));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn partial_conjugation_examples() {
        let g = g_va();
        let f = chi(&g, "x", &["z"]);
        assert_eq!(img(&f, "z"), "x z x");
        assert_eq!(img(&f, "y"), "y");

        let d = Arc::new(LabelledGraph::new(&[("a", 3), ("b", 2)], &[]).unwrap());
        let f = chi(&d, "a", &["b"]);
        assert_eq!(img(&f, "b"), "a b a^2");
        assert_eq!(img(&f.inverse(), "b"), "a^2 b a");

        let x = g.vertex("x").unwrap();
        let bad = g.vertex_set_of(&["c1"]).unwrap();
        assert!(Automorphism::partial_conjugation(&g, x, &bad).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let p3 = LabelledGraph::involutions(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let shown: Vec<String> =
            enumerate_partial_conjugations(&p3).iter().map(|c| c.display(&p3).to_string()).collect();
        assert_eq!(shown, ["chi[a; c]", "chi[c; a]"]);

        let g = g_va();
        assert_eq!(enumerate_partial_conjugations(&g).len(), 6);
    }

    #[test]
    fn compose_follows_left_action() {
        let g = g_va();
        let f = chi(&g, "x", &["z"]);
        let h = chi(&g, "y", &["z"]);
        let fh = f.compose(&h).unwrap();
        // f(h(z)) = f(y z y) = y x z x y
        assert_eq!(img(&fh, "z"), "y x z x y");
        assert!(fh.compose(&fh.inverse()).unwrap().is_identity());
    }

    #[test]
    fn partial_conjugations_with_same_multiplier_commute() {
        let d = Arc::new(LabelledGraph::discrete(&["a", "b", "c"]).unwrap());
        let f = chi(&d, "a", &["b"]);
        let h = chi(&d, "a", &["c"]);
        assert!(f.commutator(&h).unwrap().is_identity());
        // product of all components is conjugation by a
        let all = f.compose(&h).unwrap();
        assert_eq!(all.inner_conjugator().unwrap().len(), 1);
    }

    #[test]
    fn noncommuting_example() {
        let g = g_va();
        let f = chi(&g, "x", &["z"]);
        let h = chi(&g, "y", &["z"]);
        let c = f.commutator(&h).unwrap();
        assert!(!c.is_identity());
        assert_eq!(c.is_inner_bounded(8), InnerVerdict::NotInnerUpTo(8));
        assert!(c.inner_conjugator().is_none());
    }

    #[test]
    fn innerness_examples() {
        let g = g_va();
        let x = g.vertex("x").unwrap();
        let z = g.vertex("z").unwrap();
        let w = [Letter::generator(x), Letter::generator(z)];
        let inner = Automorphism::inner(&g, &w);
        assert_eq!(inner.is_inner_bounded(5), InnerVerdict::Inner(g.normalize(&w)));
        assert_eq!(inner.is_inner_bounded(1), InnerVerdict::NotInnerUpTo(1));
        assert_eq!(Automorphism::identity(&g).is_inner_bounded(0), InnerVerdict::Identity);
        // central letters are invisible
        let c1 = g.vertex("c1").unwrap();
        let central = Automorphism::inner(&g, &[Letter::generator(c1)]);
        assert_eq!(central.is_inner_bounded(0), InnerVerdict::Identity);
    }

    #[test]
    fn innerness_matches_breadth_first_search() {
        let g = Arc::new(
            LabelledGraph::new(
                &[("a", 2), ("b", 3), ("c", 2), ("d", 2)],
                &[("a", "b")],
            )
            .unwrap(),
        );
        let gens: Vec<Automorphism> = enumerate_partial_conjugations(&g)
            .iter()
            .map(|c| c.automorphism(&g).unwrap())
            .collect();
        let mut words = vec![Automorphism::identity(&g)];
        for a in &gens {
            for b in &gens {
                words.push(a.compose(b).unwrap());
                words.push(a.commutator(b).unwrap());
            }
        }
        let mut by_status: HashMap<bool, usize> = HashMap::new();
        for f in &words {
            let exact = f.inner_conjugator();
            let brute = brute_force_conjugator(f, 3);
            *by_status.entry(exact.is_some()).or_default() += 1;
            match (&exact, &brute) {
                (Some(e), Some(b)) => assert_eq!(e.len(), b.len()),
                (Some(e), None) => assert!(e.len() > 3),
                (None, Some(b)) => panic!("missed conjugator {}", g.format_word(b)),
                (None, None) => {}
            }
        }
        assert!(by_status[&true] > 0 && by_status[&false] > 0);
    }

    #[test]
    fn out_equality() {
        let g = g_va();
        let f = chi(&g, "x", &["z"]);
        let x = g.vertex("x").unwrap();
        let shifted = Automorphism::inner(&g, &[Letter::generator(x)]).compose(&f).unwrap();
        assert!(shifted.equal_in_out_bounded(&f, 2).unwrap().is_equal());
        assert!(!shifted.equal_in_aut(&f).unwrap());
        let h = chi(&g, "y", &["z"]);
        assert!(!f.equal_in_out_bounded(&h, 6).unwrap().is_equal());
    }

    #[test]
    fn graph_mismatch_is_an_error() {
        let g = g_va();
        let d = Arc::new(LabelledGraph::discrete(&["a", "b"]).unwrap());
        let f = Automorphism::identity(&g);
        let h = Automorphism::identity(&d);
        assert!(matches!(f.compose(&h), Err(Error::Input(_))));
    }

    #[test]
    fn from_images_rejects_non_automorphisms() {
        let d = Arc::new(LabelledGraph::discrete(&["a", "b"]).unwrap());
        let a = d.vertex("a").unwrap();
        let b = d.vertex("b").unwrap();
        let ab = d.normalize(&[Letter::generator(a), Letter::generator(b)]);
        let gens = vec![generator_form(a), generator_form(b)];
        assert!(Automorphism::from_images(&d, vec![ab.clone(), generator_form(b)], gens.clone()).is_err());
        assert!(Automorphism::from_images(&d, gens.clone(), gens).is_ok());
    }

    #[test]
    fn factor_map_examples() {
        let g = g_va();
        let keep = g.vertex_set_of(&["x", "y", "z"]).unwrap();
        let (sub, f) = chi(&g, "x", &["z"]).factor_map(&keep).unwrap();
        assert_eq!(sub.len(), 3);
        assert_eq!(img(&f, "z"), "x z x");

        let (_, f) = chi(&g, "c2", &["z"]).factor_map(&keep).unwrap();
        assert!(f.is_identity());
    }
}
