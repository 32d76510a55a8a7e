//! Random graphs and executable verification suites for the structural lemmas.
//!
//! Each suite expands a graph into a list of [`Check`]s. A check names its
//! vertices and supports, so a stored failure replays on its own.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automorphism::{enumerate_partial_conjugations, Automorphism, InnerVerdict, OutVerdict};
use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, Vertex, VertexSet};
use crate::presentation::muehlherr_out0;
use crate::sil::{
    fsil_from_separating_star, is_sil_for_all, overlap_to_stil, sil_from_double_separation,
    sils_on_pair, star_separates, stilfind_trichotomy,
};

/// Vertex labels a sampler draws from.
pub const MIXED_LABELS: [u64; 6] = [2, 3, 4, 5, 8, 9];

#[derive(Debug, Clone, PartialEq)]
pub struct GraphSampler {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Fixed edge probability, or `None` to draw one per graph from `[0.2, 0.9]`.
    pub edge_prob: Option<f64>,
    pub labels: Vec<u64>,
    pub seed: u64,
}

impl GraphSampler {
    pub fn coxeter(min_vertices: usize, max_vertices: usize, seed: u64) -> Self {
        GraphSampler { min_vertices, max_vertices, edge_prob: None, labels: vec![2], seed }
    }

    pub fn mixed(min_vertices: usize, max_vertices: usize, seed: u64) -> Self {
        GraphSampler { labels: MIXED_LABELS.to_vec(), ..GraphSampler::coxeter(min_vertices, max_vertices, seed) }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GraphSampler { seed, ..self.clone() }
    }

    /// Seed for trial `i`, spread out so nearby seeds do not share streams.
    fn trial_seed(&self, i: usize) -> u64 {
        self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
    }
}

/// Vertex names `v0, v1, …`, zero-padded so name order is index order.
pub fn vertex_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}

fn draw_graph(s: &GraphSampler, rng: &mut ChaCha8Rng) -> LabelledGraph {
    let n = rng.gen_range(s.min_vertices..=s.max_vertices.max(s.min_vertices));
    let prob = s.edge_prob.unwrap_or_else(|| rng.gen_range(0.2..0.9));
    let names = vertex_names(n);
    let labels = if s.labels.is_empty() { vec![2] } else { s.labels.clone() };
    let vertices: Vec<(String, u64)> =
        names.iter().map(|v| (v.clone(), labels[rng.gen_range(0..labels.len())])).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(prob.clamp(0.0, 1.0)) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    LabelledGraph::new(&vertices, &edges).expect("sampled graphs are valid")
}

pub fn sample_graph(s: &GraphSampler) -> LabelledGraph {
    draw_graph(s, &mut ChaCha8Rng::seed_from_u64(s.seed))
}

/// Every graph on `n` vertices with every vertex labelled `label`.
pub fn all_graphs(n: usize, label: u64) -> Vec<LabelledGraph> {
    all_labelled_graphs(n, &[label])
}

/// Every graph on `n` vertices with every labelling drawn from `labels`.
pub fn all_labelled_graphs(n: usize, labels: &[u64]) -> Vec<LabelledGraph> {
    let names = vertex_names(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let labellings = labels.len().pow(n as u32);
    let mut out = Vec::with_capacity((1usize << pairs.len()) * labellings);
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(String, String)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &(i, j))| (names[i].clone(), names[j].clone()))
            .collect();
        for mut code in 0..labellings {
            let vertices: Vec<(String, u64)> = names
                .iter()
                .map(|v| {
                    let l = labels[code % labels.len()];
                    code /= labels.len();
                    (v.clone(), l)
                })
                .collect();
            out.push(LabelledGraph::new(&vertices, &edges).expect("enumerated graphs are valid"));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    NonCommute,
    NoOverlap,
    StilFind,
    ConjTwo,
    Rewrite,
    ConjThree,
    DerivedAbelian,
    FsilSep,
    SilDoubleSep,
    PresentationSound,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::NonCommute,
        Suite::NoOverlap,
        Suite::StilFind,
        Suite::ConjTwo,
        Suite::Rewrite,
        Suite::ConjThree,
        Suite::DerivedAbelian,
        Suite::FsilSep,
        Suite::SilDoubleSep,
        Suite::PresentationSound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NonCommute => "noncommute",
            Suite::NoOverlap => "no_overlap",
            Suite::StilFind => "stilfind",
            Suite::ConjTwo => "conj_two",
            Suite::Rewrite => "rewrite",
            Suite::ConjThree => "conj_three",
            Suite::DerivedAbelian => "derived_abelian",
            Suite::FsilSep => "fsil_sep",
            Suite::SilDoubleSep => "sil_double_sep",
            Suite::PresentationSound => "presentation_sound",
        }
    }

    /// Suites about the virtually abelian case only run on connected
    /// all-involution graphs without STIL or FSIL.
    pub fn needs_tame_graph(self) -> bool {
        matches!(self, Suite::ConjTwo | Suite::Rewrite | Suite::ConjThree | Suite::DerivedAbelian)
    }

    pub fn admits(self, g: &LabelledGraph) -> bool {
        !self.needs_tame_graph() || is_tame(g)
    }

    /// All checks this suite makes on `g`.
    pub fn checks(self, g: &LabelledGraph) -> Vec<Check> {
        match self {
            Suite::NonCommute => noncommute_checks(g),
            Suite::NoOverlap => no_overlap_checks(g),
            Suite::StilFind => stilfind_checks(g),
            Suite::ConjTwo => conj_two_checks(g),
            Suite::Rewrite => rewrite_checks(g),
            Suite::ConjThree => conj_three_checks(g),
            Suite::DerivedAbelian => derived_abelian_checks(g),
            Suite::FsilSep => fsil_sep_checks(g),
            Suite::SilDoubleSep => sil_double_sep_checks(g),
            Suite::PresentationSound => presentation_checks(g),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::input(format!("unknown suite `{s}` (known: {})", known.join(", ")))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Connected, every label 2, and no STIL or FSIL.
pub fn is_tame(g: &LabelledGraph) -> bool {
    g.all_involutions()
        && g.is_connected()
        && crate::sil::find_fsil(g).is_none()
        && crate::sil::find_stil(g).is_none()
}

/// A partial conjugation by vertex and support names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NamedPartial {
    pub multiplier: String,
    pub support: Vec<String>,
}

impl NamedPartial {
    fn of(g: &LabelledGraph, v: Vertex, support: &VertexSet) -> Self {
        NamedPartial { multiplier: g.name(v).to_string(), support: g.names_of(support) }
    }

    fn resolve(&self, g: &Arc<LabelledGraph>) -> Result<(Vertex, VertexSet, Automorphism)> {
        let v = g.vertex(&self.multiplier)?;
        let c = g.vertex_set_of(&self.support)?;
        let f = Automorphism::partial_conjugation(g, v, &c)?;
        Ok((v, c, f))
    }
}

/// One instance of one lemma, small enough to store and replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    /// `[a, b]` is non-inner exactly when `expect_noncommuting`.
    NonCommute { a: NamedPartial, b: NamedPartial, expect_noncommuting: bool },
    /// SILs on `(x1, x2)` and `(x1, x3)` through `z` give the STIL `(x1, x2, x3 | z)`.
    NoOverlap { x1: String, x2: String, x3: String, z: String },
    StilFind { x1: String, x2: String, x3: String, y: String, z: String },
    /// `θ_j [χ, θ_i] θ_j` for `χ = a` and `θ` the partial conjugations by `x2`.
    ConjTwo { chi: NamedPartial, x2: String, i: usize, j: usize },
    Rewrite { chi1: NamedPartial, chi2: NamedPartial },
    ConjThree { chi: [NamedPartial; 3] },
    DerivedAbelian { chi: [NamedPartial; 4] },
    FsilSep { x1: String, x2: String, x4: String },
    SilDoubleSep { x1: String, x2: String, x3: String },
    /// A relator of the partial conjugation presentation, by generator names.
    PresentationRelator { relator: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "snake_case")]
pub enum Outcome {
    Pass(Option<String>),
    Inconclusive(String),
    Fail(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

fn from_lemma<T>(r: Result<T>) -> Outcome {
    match r {
        Ok(_) => Outcome::Pass(None),
        Err(Error::Counterexample(m)) => Outcome::Fail(m),
        Err(e) => Outcome::Fail(format!("hypotheses did not hold on replay: {e}")),
    }
}

/// Equality in Out: bounded first, then once more at twice the bound. When
/// both fail, the exact decision tells failure from an over-long conjugator.
fn certify_equal(g: &LabelledGraph, lhs: &Automorphism, rhs: &Automorphism, bound: usize) -> Result<Outcome> {
    for b in [bound, 2 * bound] {
        if let OutVerdict::Equal(c) = lhs.equal_in_out_bounded(rhs, b)? {
            return Ok(Outcome::Pass(Some(g.format_word(&c))));
        }
    }
    Ok(if lhs.equal_in_out(rhs)? {
        Outcome::Inconclusive(format!("equal in Out, but no conjugator of length <= {}", 2 * bound))
    } else {
        Outcome::Fail(format!("not equal in Out: {} vs {}", lhs.display(), rhs.display()))
    })
}

fn certify_inner(g: &LabelledGraph, f: &Automorphism, bound: usize) -> Outcome {
    for b in [bound, 2 * bound] {
        match f.is_inner_bounded(b) {
            InnerVerdict::Identity => return Outcome::Pass(Some("1".to_string())),
            InnerVerdict::Inner(c) => return Outcome::Pass(Some(g.format_word(&c))),
            InnerVerdict::NotInnerUpTo(_) => {}
        }
    }
    if f.inner_conjugator().is_some() {
        Outcome::Inconclusive(format!("inner, but no conjugator of length <= {}", 2 * bound))
    } else {
        Outcome::Fail(format!("{} is not inner", f.display()))
    }
}

fn pcs_of(g: &Arc<LabelledGraph>, v: Vertex) -> Result<Vec<(VertexSet, Automorphism)>> {
    g.components_avoiding(&g.star(v)?)
        .into_iter()
        .map(|c| Automorphism::partial_conjugation(g, v, &c).map(|f| (c, f)))
        .collect()
}

/// Partial conjugations by `x2`, ordered so the one moving `x1` comes first.
fn theta_list(g: &Arc<LabelledGraph>, x1: Vertex, x2: Vertex) -> Result<Vec<(VertexSet, Automorphism)>> {
    let mut list = pcs_of(g, x2)?;
    if let Some(k) = list.iter().position(|(c, _)| c.contains(x1)) {
        let first = list.remove(k);
        list.insert(0, first);
    }
    Ok(list)
}

fn product(g: &Arc<LabelledGraph>, fs: &[Automorphism]) -> Result<Automorphism> {
    fs.iter().try_fold(Automorphism::identity(g), |acc, f| acc.compose(f))
}

impl Check {
    /// Runs the check on `g`, bounded by `bound` for Out equalities.
    pub fn run(&self, g: &LabelledGraph, bound: usize) -> Result<Outcome> {
        let ga = Arc::new(g.clone());
        let v = |name: &String| g.vertex(name);
        Ok(match self {
            Check::NonCommute { a, b, expect_noncommuting } => {
                let (_, _, fa) = a.resolve(&ga)?;
                let (_, _, fb) = b.resolve(&ga)?;
                let c = fa.commutator(&fb)?;
                if *expect_noncommuting {
                    match c.is_inner_bounded(bound) {
                        InnerVerdict::NotInnerUpTo(_) if c.inner_conjugator().is_none() => {
                            Outcome::Pass(None)
                        }
                        _ => Outcome::Fail("expected non-commuting, but the commutator is inner".into()),
                    }
                } else {
                    certify_inner(g, &c, bound)
                }
            }
            Check::NoOverlap { x1, x2, x3, z } => {
                let (x1, x2, x3, z) = (v(x1)?, v(x2)?, v(x3)?, v(z)?);
                let find = |a, b| {
                    sils_on_pair(g, a, b).into_iter().find(|s| s.component.contains(z))
                };
                match (find(x1, x2), find(x1, x3)) {
                    (Some(s1), Some(s2)) => from_lemma(overlap_to_stil(g, &s1, &s2, z)),
                    _ => Outcome::Fail("hypotheses did not hold on replay".into()),
                }
            }
            Check::StilFind { x1, x2, x3, y, z } => {
                from_lemma(stilfind_trichotomy(g, v(x1)?, v(x2)?, v(x3)?, v(y)?, v(z)?))
            }
            Check::ConjTwo { chi, x2, i, j } => {
                let (x1, c, f) = chi.resolve(&ga)?;
                let x2 = v(x2)?;
                let thetas = theta_list(&ga, x1, x2)?;
                let (ci, ti) = &thetas[*i - 1];
                let (cj, tj) = &thetas[*j - 1];
                let lhs = product(&ga, &[tj.clone(), f.commutator(ti)?, tj.clone()])?;
                let sil_on = |s: &VertexSet| is_sil_for_all(g, x1, x2, s);
                let rhs = if i == j
                    || (*j == 1 && *i > 1 && sil_on(ci) && (*ci == c || c.contains(x2)))
                    || (*i == 1 && *j > 1 && *cj == c && sil_on(&c))
                {
                    ti.commutator(&f)?
                } else if *i == 1 && *j > 1 && sil_on(cj) && c.contains(x2) {
                    let parts = thetas[1..]
                        .iter()
                        .enumerate()
                        .map(|(k, (_, t))| if k + 2 == *j { t.commutator(&f) } else { f.commutator(t) })
                        .collect::<Result<Vec<_>>>()?;
                    product(&ga, &parts)?
                } else {
                    f.commutator(ti)?
                };
                certify_equal(g, &lhs, &rhs, bound)?
            }
            Check::Rewrite { chi1, chi2 } => {
                let (_, _, f1) = chi1.resolve(&ga)?;
                let (x2, c2, f2) = chi2.resolve(&ga)?;
                let rest = pcs_of(&ga, x2)?
                    .into_iter()
                    .filter(|(c, _)| *c != c2)
                    .map(|(_, t)| f1.commutator(&t))
                    .collect::<Result<Vec<_>>>()?;
                certify_equal(g, &f1.commutator(&f2)?, &product(&ga, &rest)?, bound)?
            }
            Check::ConjThree { chi } => {
                let fs = chi.iter().map(|p| p.resolve(&ga).map(|r| r.2)).collect::<Result<Vec<_>>>()?;
                let comm = fs[0].commutator(&fs[1])?;
                let lhs = product(&ga, &[fs[2].clone(), comm.clone(), fs[2].inverse()])?;
                certify_equal(g, &lhs, &comm, bound)?
            }
            Check::DerivedAbelian { chi } => {
                let fs = chi.iter().map(|p| p.resolve(&ga).map(|r| r.2)).collect::<Result<Vec<_>>>()?;
                let c12 = fs[0].commutator(&fs[1])?;
                let c34 = fs[2].commutator(&fs[3])?;
                certify_equal(g, &c12.compose(&c34)?, &c34.compose(&c12)?, bound)?
            }
            Check::FsilSep { x1, x2, x4 } => from_lemma(fsil_from_separating_star(g, v(x1)?, v(x2)?, v(x4)?)),
            Check::SilDoubleSep { x1, x2, x3 } => {
                from_lemma(sil_from_double_separation(g, v(x1)?, v(x2)?, v(x3)?))
            }
            Check::PresentationRelator { relator } => {
                let p = muehlherr_out0(g);
                let word = p.parse_relator(relator)?;
                certify_inner(g, &p.evaluate(&ga, &word)?, bound)
            }
        })
    }
}

fn noncommute_checks(g: &LabelledGraph) -> Vec<Check> {
    let pcs = enumerate_partial_conjugations(g);
    let mut out = Vec::new();
    for (k, a) in pcs.iter().enumerate() {
        for b in &pcs[k + 1..] {
            let (x, y) = (a.multiplier, b.multiplier);
            if x == y {
                continue;
            }
            let (c, d) = (&a.support, &b.support);
            let sils = sils_on_pair(g, x, y);
            let meets = |s: &VertexSet| sils.iter().any(|z| !z.component.is_disjoint(s));
            let expect = (c == d && meets(c))
                || (d.contains(x) && meets(c))
                || (c.contains(y) && meets(d))
                || (d.contains(x) && c.contains(y) && !sils.is_empty());
            out.push(Check::NonCommute {
                a: NamedPartial::of(g, x, c),
                b: NamedPartial::of(g, y, d),
                expect_noncommuting: expect,
            });
        }
    }
    out
}

fn no_overlap_checks(g: &LabelledGraph) -> Vec<Check> {
    let mut out = Vec::new();
    let name = |v: Vertex| g.name(v).to_string();
    for x1 in g.vertices() {
        for x2 in g.vertices().filter(|&u| u != x1) {
            for x3 in g.vertices().filter(|&u| u != x1 && u > x2) {
                for s1 in sils_on_pair(g, x1, x2) {
                    for s2 in sils_on_pair(g, x1, x3) {
                        for z in s1.component.intersection(&s2.component).iter() {
                            out.push(Check::NoOverlap { x1: name(x1), x2: name(x2), x3: name(x3), z: name(z) });
                        }
                    }
                }
            }
        }
    }
    out
}

fn stilfind_checks(g: &LabelledGraph) -> Vec<Check> {
    let mut out = Vec::new();
    let name = |v: Vertex| g.name(v).to_string();
    for x1 in g.vertices() {
        for x2 in g.vertices().filter(|&u| u != x1) {
            for x3 in g.vertices().filter(|&u| u != x1 && u != x2) {
                let ys: Vec<Vertex> =
                    sils_on_pair(g, x1, x2).iter().flat_map(|s| s.component.iter().collect::<Vec<_>>()).collect();
                let zs: Vec<Vertex> =
                    sils_on_pair(g, x1, x3).iter().flat_map(|s| s.component.iter().collect::<Vec<_>>()).collect();
                for &y in &ys {
                    for &z in &zs {
                        out.push(Check::StilFind {
                            x1: name(x1),
                            x2: name(x2),
                            x3: name(x3),
                            y: name(y),
                            z: name(z),
                        });
                    }
                }
            }
        }
    }
    out
}

fn conj_two_checks(g: &LabelledGraph) -> Vec<Check> {
    let mut out = Vec::new();
    for chi in enumerate_partial_conjugations(g) {
        let x1 = chi.multiplier;
        for x2 in g.vertices().filter(|&u| u != x1 && !g.adjacent(u, x1)) {
            let r = g.components_avoiding(&g.star(x2).expect("own vertex")).len();
            for i in 1..=r {
                for j in 1..=r {
                    out.push(Check::ConjTwo {
                        chi: NamedPartial::of(g, x1, &chi.support),
                        x2: g.name(x2).to_string(),
                        i,
                        j,
                    });
                }
            }
        }
    }
    out
}

fn rewrite_checks(g: &LabelledGraph) -> Vec<Check> {
    let pcs = enumerate_partial_conjugations(g);
    let mut out = Vec::new();
    for a in &pcs {
        for b in pcs.iter().filter(|b| b.multiplier != a.multiplier && b.support.contains(a.multiplier)) {
            out.push(Check::Rewrite {
                chi1: NamedPartial::of(g, a.multiplier, &a.support),
                chi2: NamedPartial::of(g, b.multiplier, &b.support),
            });
        }
    }
    out
}

fn conj_three_checks(g: &LabelledGraph) -> Vec<Check> {
    let pcs = enumerate_partial_conjugations(g);
    let mut out = Vec::new();
    for a in &pcs {
        for b in pcs.iter().filter(|b| b.multiplier > a.multiplier) {
            for c in pcs.iter().filter(|c| c.multiplier != a.multiplier && c.multiplier != b.multiplier) {
                out.push(Check::ConjThree {
                    chi: [a, b, c].map(|p| NamedPartial::of(g, p.multiplier, &p.support)),
                });
            }
        }
    }
    out
}

/// One check per pair of distinct non-trivial commutators `[a, b]`, `[c, d]`.
fn derived_abelian_checks(g: &LabelledGraph) -> Vec<Check> {
    let ga = Arc::new(g.clone());
    let pcs = enumerate_partial_conjugations(g);
    let autos: Vec<Automorphism> = pcs.iter().map(|p| p.automorphism(&ga).expect("enumerated")).collect();
    let mut comms: Vec<(usize, usize, Automorphism)> = Vec::new();
    for a in 0..pcs.len() {
        for b in a + 1..pcs.len() {
            if pcs[a].multiplier == pcs[b].multiplier {
                continue;
            }
            let c = autos[a].commutator(&autos[b]).expect("same graph");
            if c.inner_conjugator().is_none() && !comms.iter().any(|(_, _, d)| *d == c) {
                comms.push((a, b, c));
            }
        }
    }
    let named = |k: usize| NamedPartial::of(g, pcs[k].multiplier, &pcs[k].support);
    let mut out = Vec::new();
    for (k, (a, b, _)) in comms.iter().enumerate() {
        for (c, d, _) in &comms[k + 1..] {
            out.push(Check::DerivedAbelian { chi: [named(*a), named(*b), named(*c), named(*d)] });
        }
    }
    out
}

fn fsil_sep_checks(g: &LabelledGraph) -> Vec<Check> {
    let mut out = Vec::new();
    let name = |v: Vertex| g.name(v).to_string();
    for x4 in g.vertices() {
        for x1 in g.vertices().filter(|&u| u != x4) {
            for x2 in g.vertices().filter(|&u| u > x1 && u != x4) {
                let sil = crate::sil::is_sil(g, x1, x2, x4).ok().flatten().is_some();
                if sil && star_separates(g, x4, x1, x2).unwrap_or(false) {
                    out.push(Check::FsilSep { x1: name(x1), x2: name(x2), x4: name(x4) });
                }
            }
        }
    }
    out
}

fn sil_double_sep_checks(g: &LabelledGraph) -> Vec<Check> {
    let mut out = Vec::new();
    let name = |v: Vertex| g.name(v).to_string();
    for x1 in g.vertices() {
        for x2 in g.vertices().filter(|&u| u != x1) {
            for x3 in g.vertices().filter(|&u| u != x1 && u != x2) {
                if star_separates(g, x1, x2, x3).unwrap_or(false)
                    && star_separates(g, x2, x1, x3).unwrap_or(false)
                {
                    out.push(Check::SilDoubleSep { x1: name(x1), x2: name(x2), x3: name(x3) });
                }
            }
        }
    }
    out
}

fn presentation_checks(g: &LabelledGraph) -> Vec<Check> {
    let p = muehlherr_out0(g);
    p.relators
        .iter()
        .map(|r| Check::PresentationRelator { relator: p.format_relator(r) })
        .collect()
}

/// A check that did not pass, with the graph it ran on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub graph: String,
    pub check: Check,
    pub outcome: Outcome,
}

impl CheckRecord {
    /// Re-runs the stored check on the stored graph.
    pub fn replay(&self, bound: usize) -> Result<Outcome> {
        let g = LabelledGraph::parse(&self.graph)?;
        self.check.run(&g, bound)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub bound: usize,
    pub graphs: usize,
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<CheckRecord>,
    pub inconclusive: Vec<CheckRecord>,
    /// Sampled trials for which no admissible graph was found.
    pub skipped: usize,
}

impl VerificationReport {
    fn empty(suite: Suite, bound: usize) -> Self {
        VerificationReport {
            suite: suite.name().to_string(),
            bound,
            graphs: 0,
            instances: 0,
            passed: 0,
            failures: Vec::new(),
            inconclusive: Vec::new(),
            skipped: 0,
        }
    }

    fn absorb(&mut self, other: VerificationReport) {
        self.graphs += other.graphs;
        self.instances += other.instances;
        self.passed += other.passed;
        self.failures.extend(other.failures);
        self.inconclusive.extend(other.inconclusive);
        self.skipped += other.skipped;
    }

    pub fn inconclusive_rate(&self) -> f64 {
        if self.instances == 0 { 0.0 } else { self.inconclusive.len() as f64 / self.instances as f64 }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<20} {:>8} {:>10} {:>8} {:>8} {:>13}", "suite", "graphs", "instances", "passed", "failed", "inconclusive")?;
        writeln!(
            f,
            "{:<20} {:>8} {:>10} {:>8} {:>8} {:>13}",
            self.suite,
            self.graphs,
            self.instances,
            self.passed,
            self.failures.len(),
            self.inconclusive.len()
        )?;
        if self.skipped > 0 {
            writeln!(f, "skipped trials without an admissible graph: {}", self.skipped)?;
        }
        for r in &self.failures {
            writeln!(f, "FAIL {:?}: {:?}", r.check, r.outcome)?;
        }
        for r in &self.inconclusive {
            writeln!(f, "INCONCLUSIVE {:?}: {:?}", r.check, r.outcome)?;
        }
        Ok(())
    }
}

fn run_on_graph(suite: Suite, g: &LabelledGraph, bound: usize) -> VerificationReport {
    let mut report = VerificationReport::empty(suite, bound);
    report.graphs = 1;
    let text = g.to_text();
    for check in suite.checks(g) {
        report.instances += 1;
        let outcome = check
            .run(g, bound)
            .unwrap_or_else(|e| Outcome::Fail(format!("check could not run: {e}")));
        let record = |outcome| CheckRecord { graph: text.clone(), check: check.clone(), outcome };
        match outcome {
            Outcome::Pass(_) => report.passed += 1,
            Outcome::Inconclusive(_) => report.inconclusive.push(record(outcome)),
            Outcome::Fail(_) => report.failures.push(record(outcome)),
        }
    }
    report
}

/// Runs a suite on a fixed list of graphs, skipping inadmissible ones.
pub fn run_suite_on_graphs(suite: Suite, graphs: &[LabelledGraph], bound: usize) -> VerificationReport {
    let parts: Vec<VerificationReport> = graphs
        .par_iter()
        .filter(|g| suite.admits(g))
        .map(|g| run_on_graph(suite, g, bound))
        .collect();
    let mut report = VerificationReport::empty(suite, bound);
    for p in parts {
        report.absorb(p);
    }
    report
}

/// Attempts per trial to find an admissible graph.
const MAX_ATTEMPTS: usize = 2000;

/// Runs `trials` sampled graphs through a suite. Trials are independent and
/// merged in trial order, so the report depends only on the sampler.
pub fn run_suite(name: &str, sampler: &GraphSampler, trials: usize, bound: usize) -> Result<VerificationReport> {
    let suite: Suite = name.parse()?;
    let parts: Vec<VerificationReport> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(sampler.trial_seed(i));
            let found = (0..MAX_ATTEMPTS).map(|_| draw_graph(sampler, &mut rng)).find(|g| suite.admits(g));
            match found {
                Some(g) => run_on_graph(suite, &g, bound),
                None => VerificationReport { skipped: 1, ..VerificationReport::empty(suite, bound) },
            }
        })
        .collect();
    let mut report = VerificationReport::empty(suite, bound);
    for p in parts {
        report.absorb(p);
    }
    Ok(report)
}
