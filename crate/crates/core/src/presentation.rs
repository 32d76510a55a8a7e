//! Finite presentations of groups of outer automorphisms.
//!
//! Relators are words of syllables `(generator index, exponent)`. Partial
//! conjugation generators carry a tag naming their multiplier and support,
//! so a relator can be evaluated back into an automorphism.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::automorphism::{enumerate_partial_conjugations, Automorphism};
use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, Vertex, VertexSet};
use crate::sil::{star_separates, StilWitness};

pub type Syllable = (usize, i64);

/// What a generator denotes when it is a partial conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorTag {
    pub multiplier: String,
    pub support: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<GeneratorTag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub relators: Vec<Vec<Syllable>>,
}

/// The target forms recognised after simplification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormTag {
    /// `Z2 * Z2 * Z2`
    Z2FreeProductRank3,
    /// `(Z2 x Z2) * Z2`
    KleinFourStarZ2,
    Unrecognized(Presentation),
}

impl FormTag {
    pub fn label(&self) -> &'static str {
        match self {
            FormTag::Z2FreeProductRank3 => "Z2*Z2*Z2",
            FormTag::KleinFourStarZ2 => "(Z2xZ2)*Z2",
            FormTag::Unrecognized(_) => "unrecognized",
        }
    }
}

/// Free rank and torsion coefficients (all greater than 1) of the abelianization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn free_reduce(word: &[Syllable]) -> Vec<Syllable> {
    let mut out: Vec<Syllable> = Vec::with_capacity(word.len());
    for &(g, e) in word {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

fn cyclic_reduce(word: &[Syllable]) -> Vec<Syllable> {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0].0 == w[w.len() - 1].0 {
        let (_, e) = w.pop().unwrap();
        w[0].1 += e;
        if w[0].1 == 0 {
            w.remove(0);
        }
    }
    w
}

fn invert(word: &[Syllable]) -> Vec<Syllable> {
    word.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Reduces exponents into `(-n/2, n/2]` for generators of declared order `n`.
fn reduce_torsion(word: &[Syllable], orders: &[Option<u64>]) -> Vec<Syllable> {
    let mut w = cyclic_reduce(word);
    loop {
        let next: Vec<Syllable> = w
            .iter()
            .map(|&(g, e)| match orders[g] {
                Some(n) => {
                    let n = n as i64;
                    let mut r = e.rem_euclid(n);
                    if 2 * r > n {
                        r -= n;
                    }
                    (g, r)
                }
                None => (g, e),
            })
            .collect();
        let next = cyclic_reduce(&next);
        if next == w {
            return w;
        }
        w = next;
    }
}

/// Orders syllables by generator, then positive exponents before negative ones.
fn order_key(w: &[Syllable]) -> Vec<(usize, bool, u64)> {
    w.iter().map(|&(g, e)| (g, e < 0, e.unsigned_abs())).collect()
}

/// Least rotation of the word or its inverse, after torsion reduction.
fn canonical(word: &[Syllable], orders: &[Option<u64>]) -> Vec<Syllable> {
    let mut best: Option<Vec<Syllable>> = None;
    for w in [reduce_torsion(word, orders), reduce_torsion(&invert(word), orders)] {
        for k in 0..w.len().max(1) {
            let mut r = w[k..].to_vec();
            r.extend_from_slice(&w[..k]);
            if best.as_ref().is_none_or(|b| order_key(&r) < order_key(b)) {
                best = Some(r);
            }
        }
    }
    best.unwrap_or_default()
}

/// Canonical form of a relator with no torsion information: the least
/// rotation of it or its inverse.
pub fn canonical_relator(word: &[Syllable]) -> Vec<Syllable> {
    let orders = vec![None; word.iter().map(|s| s.0 + 1).max().unwrap_or(0)];
    canonical(word, &orders)
}

fn commutator(a: usize, b: usize) -> Vec<Syllable> {
    vec![(a, 1), (b, 1), (a, -1), (b, -1)]
}

impl Presentation {
    pub fn new() -> Self {
        Presentation::default()
    }

    pub fn add_generator(&mut self, name: impl Into<String>, tag: Option<GeneratorTag>) -> usize {
        self.generators.push(Generator { name: name.into(), tag });
        self.generators.len() - 1
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::input(format!("unknown generator `{name}`")))
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }

    /// Adds a relator, checking that it only uses declared generators.
    pub fn add_relator(&mut self, word: Vec<Syllable>) -> Result<()> {
        if word.iter().any(|&(g, _)| g >= self.generators.len()) {
            return Err(Error::input("relator mentions an undeclared generator"));
        }
        self.relators.push(word);
        Ok(())
    }

    /// Multiset of canonical relators, for comparison up to rotation,
    /// inversion and reordering.
    pub fn canonical_relators(&self) -> Vec<Vec<Syllable>> {
        let mut out: Vec<Vec<Syllable>> = self.relators.iter().map(|r| canonical_relator(r)).collect();
        out.sort();
        out
    }

    /// Same as [`Presentation::canonical_relators`] but over generator names.
    pub fn canonical_named_relators(&self) -> Vec<Vec<(String, i64)>> {
        let mut out: Vec<Vec<(String, i64)>> = self
            .canonical_relators()
            .into_iter()
            .map(|r| r.into_iter().map(|(g, e)| (self.generators[g].name.clone(), e)).collect())
            .collect();
        out.sort();
        out
    }

    pub fn format_relator(&self, word: &[Syllable]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = word
            .iter()
            .map(|&(g, e)| {
                let name = &self.generators[g].name;
                if e == 1 { name.clone() } else { format!("{name}^{e}") }
            })
            .collect();
        parts.join(" ")
    }

    /// Parses `name name^-1 ...` over this presentation's generators.
    pub fn parse_relator(&self, literal: &str) -> Result<Vec<Syllable>> {
        let literal = literal.trim();
        if literal.is_empty() || literal == "1" {
            return Ok(Vec::new());
        }
        literal
            .split_whitespace()
            .map(|tok| {
                let (name, exp) = match tok.split_once('^') {
                    Some((n, e)) => {
                        let e: i64 =
                            e.parse().map_err(|_| Error::input(format!("bad exponent in `{tok}`")))?;
                        (n, e)
                    }
                    None => (tok, 1),
                };
                Ok((self.generator_index(name)?, exp))
            })
            .collect()
    }

    /// Text format: `gen <name>` lines followed by `rel <word>` lines.
    pub fn parse(input: &str) -> Result<Self> {
        let mut p = Presentation::new();
        for (i, raw) in input.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (directive, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match directive {
                "gen" => {
                    let name = rest.trim();
                    if name.is_empty() || name.contains(char::is_whitespace) || name.contains('^') {
                        return Err(Error::parse(i + 1, format!("bad generator name `{name}`")));
                    }
                    if p.generator_index(name).is_ok() {
                        return Err(Error::parse(i + 1, format!("duplicate generator `{name}`")));
                    }
                    p.add_generator(name, None);
                }
                "rel" => {
                    let w = p.parse_relator(rest).map_err(|e| Error::parse(i + 1, e.to_string()))?;
                    p.relators.push(w);
                }
                other => return Err(Error::parse(i + 1, format!("unknown directive `{other}`"))),
            }
        }
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            out.push_str(&format!("gen {}\n", g.name));
        }
        for r in &self.relators {
            out.push_str(&format!("rel {}\n", self.format_relator(r)));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let relators: Vec<String> = self.relators.iter().map(|r| self.format_relator(r)).collect();
        serde_json::json!({ "generators": self.generators, "relators": relators })
    }

    pub fn from_json(input: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            generators: Vec<Generator>,
            relators: Vec<String>,
        }
        let raw: Raw =
            serde_json::from_str(input).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        let mut p = Presentation { generators: raw.generators, relators: Vec::new() };
        for r in &raw.relators {
            let w = p.parse_relator(r)?;
            p.relators.push(w);
        }
        Ok(p)
    }

    /// Interprets a relator as a composition of the tagged partial conjugations on `graph`.
    ///
    /// A tag whose support is a union of components stands for the product
    /// of the partial conjugations on those components.
    pub fn evaluate(&self, graph: &Arc<LabelledGraph>, word: &[Syllable]) -> Result<Automorphism> {
        let mut acc = Automorphism::identity(graph);
        for &(g, e) in word {
            let gen = &self.generators[g];
            let tag = gen.tag.as_ref().ok_or_else(|| {
                Error::input(format!("generator `{}` has no partial conjugation tag", gen.name))
            })?;
            let v = graph.vertex(&tag.multiplier)?;
            let support = graph.vertex_set_of(&tag.support)?;
            let mut f = Automorphism::identity(graph);
            let mut covered = VertexSet::new();
            for c in graph.components_avoiding(&graph.star(v)?) {
                if c.is_subset(&support) {
                    f = f.compose(&Automorphism::partial_conjugation(graph, v, &c)?)?;
                    covered = covered.union(&c);
                }
            }
            if covered != support {
                return Err(Error::input(format!(
                    "support of `{}` is not a union of components",
                    gen.name
                )));
            }
            if e < 0 {
                f = f.inverse();
            }
            for _ in 0..e.unsigned_abs() {
                acc = acc.compose(&f)?;
            }
        }
        Ok(acc)
    }

    /// Exponent-sum invariants of the abelianization.
    pub fn abelian_invariants(&self) -> AbelianInvariants {
        let n = self.generators.len();
        let mut m: Vec<Vec<i128>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i128; n];
                for &(g, e) in r {
                    row[g] += e as i128;
                }
                row
            })
            .collect();
        let diag = smith_diagonal(&mut m, n);
        let rank = diag.len();
        let torsion = diag.into_iter().map(|d| d.unsigned_abs() as u64).filter(|&d| d > 1).collect();
        AbelianInvariants { free_rank: n - rank, torsion }
    }
}

/// Non-zero diagonal of the Smith normal form, each entry dividing the next.
fn smith_diagonal(m: &mut [Vec<i128>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest non-zero entry in the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            if q != 0 {
                let pivot = m[t].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot).skip(t) {
                    *x -= q * y;
                }
            }
            clean &= m[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / m[t][t];
            if q != 0 {
                for row in m.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            clean &= m[t][j] == 0;
        }
        if !clean {
            continue;
        }
        let p = m[t][t];
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
        if let Some(i) = bad {
            let row = m[i].clone();
            for (x, y) in m[t].iter_mut().zip(&row).skip(t) {
                *x += y;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_relator(r)).collect();
        write!(f, "< {} | {} >", self.generator_names().join(", "), rels.join(", "))
    }
}

/// Orders declared by single-syllable relators `g^n`.
fn torsion_orders(p: &Presentation) -> Vec<Option<u64>> {
    let mut orders: Vec<Option<u64>> = vec![None; p.generators.len()];
    for r in &p.relators {
        let r = cyclic_reduce(r);
        if let [(g, e)] = r[..] {
            let n = e.unsigned_abs();
            orders[g] = Some(orders[g].map_or(n, |m| gcd(m, n)));
        }
    }
    orders
}

/// One pass of relator clean-up: reduction, torsion rewriting, removal of
/// trivial relators and duplicates.
fn tidy(p: &mut Presentation) {
    let orders = torsion_orders(p);
    let mut seen: BTreeSet<Vec<Syllable>> = BTreeSet::new();
    let mut torsion_done = vec![false; p.generators.len()];
    let mut out = Vec::new();
    for r in &p.relators {
        let reduced = cyclic_reduce(r);
        if let [(g, _)] = reduced[..] {
            if !torsion_done[g] {
                torsion_done[g] = true;
                out.push(vec![(g, orders[g].unwrap() as i64)]);
            }
            continue;
        }
        let w = reduce_torsion(&reduced, &orders);
        if !w.is_empty() && seen.insert(canonical(&w, &orders)) {
            out.push(w);
        }
    }
    p.relators = out;
}

/// Picks a generator to eliminate: one occurring once, with exponent ±1, in
/// some relator. Generators without a torsion relator go first, then later ones.
fn elimination_candidate(p: &Presentation) -> Option<(usize, usize)> {
    let orders = torsion_orders(p);
    let mut best: Option<(bool, usize, usize)> = None;
    for (ri, r) in p.relators.iter().enumerate() {
        for &(g, e) in r {
            if e.abs() != 1 || r.iter().filter(|s| s.0 == g).count() != 1 {
                continue;
            }
            let key = (orders[g].is_none(), g, ri);
            let better = match best {
                None => true,
                Some((t, bg, _)) => (key.0, key.1) > (t, bg),
            };
            if better {
                best = Some(key);
            }
        }
    }
    best.map(|(_, g, ri)| (g, ri))
}

fn eliminate(p: &mut Presentation, g: usize, ri: usize) {
    let r = p.relators.remove(ri);
    let pos = r.iter().position(|s| s.0 == g).unwrap();
    let (a, b) = (&r[..pos], &r[pos + 1..]);
    let value: Vec<Syllable> = if r[pos].1 == 1 {
        let mut v = invert(a);
        v.extend(invert(b));
        v
    } else {
        let mut v = b.to_vec();
        v.extend_from_slice(a);
        v
    };
    let substitute = |word: &[Syllable]| -> Vec<Syllable> {
        let mut out = Vec::new();
        for &(h, e) in word {
            if h == g {
                let piece = if e > 0 { value.clone() } else { invert(&value) };
                for _ in 0..e.unsigned_abs() {
                    out.extend_from_slice(&piece);
                }
            } else {
                out.push((h, e));
            }
        }
        out
    };
    let rels: Vec<Vec<Syllable>> = p.relators.iter().map(|w| substitute(w)).collect();
    p.generators.remove(g);
    p.relators = rels
        .into_iter()
        .map(|w| w.into_iter().map(|(h, e)| (if h > g { h - 1 } else { h }, e)).collect())
        .collect();
}

/// Tietze simplification to a fixpoint: reduce relators, drop trivial and
/// duplicate ones, and eliminate generators that a relator expresses in
/// terms of the others.
pub fn tietze_simplify(p: &Presentation) -> Presentation {
    let mut cur = p.clone();
    loop {
        let before = cur.clone();
        tidy(&mut cur);
        if let Some((g, ri)) = elimination_candidate(&cur) {
            eliminate(&mut cur, g, ri);
            continue;
        }
        if cur == before {
            return cur;
        }
    }
}

/// Sets the named generators to the identity and drops relators that become trivial.
pub fn quotient_by(p: &Presentation, kill: &[&str]) -> Result<Presentation> {
    let mut dead = vec![false; p.generators.len()];
    for name in kill {
        dead[p.generator_index(name)?] = true;
    }
    let mut new_index = vec![0usize; p.generators.len()];
    let mut generators = Vec::new();
    for (i, g) in p.generators.iter().enumerate() {
        if !dead[i] {
            new_index[i] = generators.len();
            generators.push(g.clone());
        }
    }
    let relators = p
        .relators
        .iter()
        .map(|r| {
            let kept: Vec<Syllable> =
                r.iter().filter(|s| !dead[s.0]).map(|&(g, e)| (new_index[g], e)).collect();
            free_reduce(&kept)
        })
        .filter(|r| !r.is_empty())
        .collect();
    Ok(Presentation { generators, relators })
}

/// Kills, for each split multiplier `i` of a factor image presentation, the
/// generator acting on the least other label.
pub fn standard_quotient(p: &Presentation) -> Result<Presentation> {
    let kill: Vec<String> = (1..=3)
        .filter_map(|i| {
            let target = if i == 1 { 2 } else { 1 };
            let name = format!("chi{i}_{target}");
            p.generator_index(&name).ok().map(|_| name)
        })
        .collect();
    let kill: Vec<&str> = kill.iter().map(String::as_str).collect();
    quotient_by(p, &kill)
}

/// Simplifies and matches against the two virtually free target forms.
pub fn recognize_form(p: &Presentation) -> FormTag {
    let s = tietze_simplify(p);
    if s.generators.len() != 3 {
        return FormTag::Unrecognized(s);
    }
    let orders = torsion_orders(&s);
    let squares: BTreeSet<usize> = s
        .relators
        .iter()
        .filter_map(|r| match r[..] {
            [(g, e)] if e.abs() == 2 => Some(g),
            _ => None,
        })
        .collect();
    let others: Vec<&Vec<Syllable>> = s.relators.iter().filter(|r| r.len() != 1).collect();
    let square_count = s.relators.len() - others.len();
    if squares.len() != 3 || square_count != 3 {
        return FormTag::Unrecognized(s);
    }
    match others[..] {
        [] => FormTag::Z2FreeProductRank3,
        [r] => {
            let c = canonical(r, &orders);
            let is_commutator = (0..3)
                .flat_map(|a| (0..3).map(move |b| (a, b)))
                .filter(|(a, b)| a != b)
                .any(|(a, b)| canonical(&commutator(a, b), &orders) == c);
            if is_commutator {
                FormTag::KleinFourStarZ2
            } else {
                FormTag::Unrecognized(s)
            }
        }
        _ => FormTag::Unrecognized(s),
    }
}

fn tag_for(g: &LabelledGraph, v: Vertex, support: &VertexSet) -> GeneratorTag {
    GeneratorTag { multiplier: g.name(v).to_string(), support: g.names_of(support) }
}

/// Presentation of `Out⁰` on all partial conjugations with relators:
/// (a) commutators of pairs whose multipliers commute or whose extended
/// supports `C ∪ {v}` are disjoint, (b) the product of all partial
/// conjugations sharing a multiplier, (c) `χ^p(v)`.
pub fn muehlherr_out0(g: &LabelledGraph) -> Presentation {
    let pcs = enumerate_partial_conjugations(g);
    let mut p = Presentation::new();
    for pc in &pcs {
        let name = format!("chi[{};{}]", g.name(pc.multiplier), g.names_of(&pc.support).join(","));
        p.add_generator(name, Some(tag_for(g, pc.multiplier, &pc.support)));
    }
    let mut relators: Vec<Vec<Syllable>> = Vec::new();
    for (i, a) in pcs.iter().enumerate() {
        for (j, b) in pcs.iter().enumerate().skip(i + 1) {
            let (v, w) = (a.multiplier, b.multiplier);
            let mut ext_a = a.support.clone();
            ext_a.insert(v);
            let mut ext_b = b.support.clone();
            ext_b.insert(w);
            if v == w || g.adjacent(v, w) || ext_a.is_disjoint(&ext_b) {
                relators.push(commutator(i, j));
            }
        }
    }
    for v in g.vertices() {
        let word: Vec<Syllable> =
            pcs.iter().enumerate().filter(|(_, pc)| pc.multiplier == v).map(|(i, _)| (i, 1)).collect();
        if !word.is_empty() {
            relators.push(word);
        }
    }
    for (i, pc) in pcs.iter().enumerate() {
        relators.push(vec![(i, g.order(pc.multiplier) as i64)]);
    }
    let mut seen = BTreeSet::new();
    p.relators = relators.into_iter().filter(|r| seen.insert(canonical_relator(r))).collect();
    p
}

/// Presentation of the image of the factor map onto the STIL vertices,
/// using the least vertex of the STIL component as the fourth vertex.
pub fn factor_image_presentation(g: &LabelledGraph, stil: &StilWitness) -> Result<Presentation> {
    let x4 = stil
        .component
        .first()
        .ok_or_else(|| Error::input("STIL component is empty"))?;
    factor_image_presentation_at(g, [stil.x1, stil.x2, stil.x3, x4])
}

/// Presentation of the image of the factor map for the STIL `(x1, x2, x3 | x4)`
/// with no edges among `x1, x2, x3`.
///
/// Each of `x1, x2, x3` multiplies `x4` by itself. Its action on the other
/// two is one generator, or two when its star separates them. The triple is
/// relabelled so that separating vertices come first.
pub fn factor_image_presentation_at(g: &LabelledGraph, xs: [Vertex; 4]) -> Result<Presentation> {
    let [x1, x2, x3, x4] = xs;
    if crate::sil::is_stil(g, x1, x2, x3, x4)?.is_none() {
        return Err(Error::input("not a STIL"));
    }
    let triple = [x1, x2, x3];
    for (i, &a) in triple.iter().enumerate() {
        for &b in &triple[i + 1..] {
            if g.adjacent(a, b) {
                return Err(Error::input(format!(
                    "`{}` and `{}` are adjacent; the STIL has an edge",
                    g.name(a),
                    g.name(b)
                )));
            }
            if star_separates(g, x4, a, b)? {
                return Err(Error::input(format!(
                    "st({}) separates `{}` and `{}`, so the triple with it is an FSIL",
                    g.name(x4),
                    g.name(a),
                    g.name(b)
                )));
            }
        }
    }
    let others = |i: usize| -> (Vertex, Vertex) {
        let rest: Vec<Vertex> = (0..3).filter(|&j| j != i).map(|j| triple[j]).collect();
        (rest[0], rest[1])
    };
    let mut sep = [false; 3];
    for i in 0..3 {
        let (a, b) = others(i);
        sep[i] = star_separates(g, triple[i], a, b)?;
    }
    if sep.iter().all(|&s| s) {
        return Err(Error::input("all three stars separate, so the triple is an FSIL"));
    }
    // separating vertices first, order otherwise kept
    let mut order: Vec<usize> = (0..3).filter(|&i| sep[i]).collect();
    order.extend((0..3).filter(|&i| !sep[i]));
    let xs: Vec<Vertex> = order.iter().map(|&i| triple[i]).collect();
    let split: Vec<bool> = order.iter().map(|&i| sep[i]).collect();

    let mut p = Presentation::new();
    // per multiplier: (generator, extended support as labels) lists
    let mut ext: Vec<(usize, BTreeSet<usize>)> = Vec::new();
    let mut product_rel: Vec<Vec<Syllable>> = Vec::new();
    let mut squares: Vec<usize> = Vec::new();
    let mut designated: Vec<usize> = Vec::new();
    for i in 0..3 {
        let label = i + 1;
        let v = xs[i];
        let gen = |p: &mut Presentation, targets: &[usize]| -> usize {
            let suffix: String = targets.iter().map(|t| t.to_string()).collect();
            let support: VertexSet =
                targets.iter().map(|&t| if t == 4 { x4 } else { xs[t - 1] }).collect();
            p.add_generator(format!("chi{label}_{suffix}"), Some(tag_for(g, v, &support)))
        };
        let g4 = gen(&mut p, &[4]);
        ext.push((g4, BTreeSet::from([label, 4])));
        squares.push(g4);
        let rest: Vec<usize> = (1..=3).filter(|&t| t != label).collect();
        if split[i] {
            // designated target is the next label cyclically
            let first = label % 3 + 1;
            let second = rest.iter().copied().find(|&t| t != first).unwrap();
            let d = gen(&mut p, &[first]);
            let q = gen(&mut p, &[second]);
            ext.push((d, BTreeSet::from([label, first])));
            ext.push((q, BTreeSet::from([label, second])));
            designated.push(d);
            product_rel.push(vec![(d, 1), (q, 1), (g4, 1)]);
        } else {
            let m = gen(&mut p, &rest);
            ext.push((m, BTreeSet::from([label, rest[0], rest[1]])));
            product_rel.push(vec![(g4, 1), (m, 1)]);
        }
    }
    let mult = |gen: usize| p.generators[gen].name.as_bytes()[3];
    let mut relators = product_rel;
    for (k, (a, ea)) in ext.iter().enumerate() {
        for (b, eb) in &ext[k + 1..] {
            if mult(*a) != mult(*b) && ea.is_disjoint(eb) {
                relators.push(commutator(*a, *b));
            }
        }
    }
    for &s in squares.iter().chain(&designated) {
        let v = xs[(mult(s) - b'1') as usize];
        relators.push(vec![(s, g.order(v) as i64)]);
    }
    p.relators = relators;
    Ok(p)
}
