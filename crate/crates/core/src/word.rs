//! Words in the graph product `G(Γ, p)` and their canonical normal form.
//!
//! Generators are the vertices; `v^p(v) = 1`, and `u`, `v` commute exactly
//! when they are adjacent. Commutators follow `[a, b] = a b a⁻¹ b⁻¹`.
//!
//! A word is *reduced* when no two letters on the same vertex can be shuffled
//! next to each other. Reduced words for one element are all shuffles of one
//! another, so the lexicographically least shuffle (vertex order, then
//! exponent) is a canonical representative.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, Vertex, VertexSet};

/// A generator power `vertex^exp` with `1 <= exp < p(vertex)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub vertex: Vertex,
    pub exp: u64,
}

impl Letter {
    pub fn new(vertex: Vertex, exp: u64) -> Self {
        Letter { vertex, exp }
    }

    /// The generator itself.
    pub fn generator(vertex: Vertex) -> Self {
        Letter { vertex, exp: 1 }
    }
}

/// A sequence of letters over a fixed graph (not necessarily reduced).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

/// The canonical representative of a group element.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm(Vec<Letter>);

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Wraps letters already known to be in normal form.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Self {
        NormalForm(letters)
    }

    pub fn into_word(self) -> Word {
        Word(self.0)
    }
}

impl Deref for NormalForm {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

/// Displays a word with the vertex names of its graph.
pub struct DisplayWord<'a> {
    graph: &'a LabelledGraph,
    letters: &'a [Letter],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.name(l.vertex))?;
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}

impl LabelledGraph {
    /// `v^exp` reduced modulo `p(v)`, or `None` when that is trivial.
    pub fn letter(&self, v: Vertex, exp: i64) -> Option<Letter> {
        let p = self.order(v) as i64;
        let e = exp.rem_euclid(p);
        (e != 0).then(|| Letter::new(v, e as u64))
    }

    /// Validates raw letters against this graph.
    pub fn word(&self, letters: &[Letter]) -> Result<Word> {
        for l in letters {
            self.check_vertex(l.vertex)?;
            if l.exp == 0 || l.exp >= self.order(l.vertex) {
                return Err(Error::input(format!(
                    "exponent {} out of range for `{}` of order {}",
                    l.exp,
                    self.name(l.vertex),
                    self.order(l.vertex)
                )));
            }
        }
        Ok(Word(letters.to_vec()))
    }

    /// Parses `x c1^2 z` style literals. The empty string and `1` denote the identity.
    pub fn parse_word(&self, literal: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in literal.split_whitespace() {
            if token == "1" && self.vertex("1").is_err() {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, e)) => {
                    let e: i64 =
                        e.parse().map_err(|_| Error::input(format!("bad exponent in `{token}`")))?;
                    (name, e)
                }
                None => (token, 1),
            };
            let v = self.vertex(name)?;
            let letter = self.letter(v, exp).ok_or_else(|| {
                Error::input(format!("`{token}` is trivial: exponent divisible by {}", self.order(v)))
            })?;
            letters.push(letter);
        }
        Ok(Word(letters))
    }

    pub fn display_word<'a>(&'a self, letters: &'a [Letter]) -> DisplayWord<'a> {
        DisplayWord { graph: self, letters }
    }

    pub fn format_word(&self, letters: &[Letter]) -> String {
        self.display_word(letters).to_string()
    }

    /// Appends `x` to an already reduced word, keeping it reduced.
    ///
    /// Scanning left from the end, `x` can only meet a letter on its own
    /// vertex after passing letters it commutes with.
    fn push_reduced(&self, acc: &mut Vec<Letter>, x: Letter) {
        let p = self.order(x.vertex);
        for i in (0..acc.len()).rev() {
            let y = acc[i];
            if y.vertex == x.vertex {
                let e = (y.exp + x.exp) % p;
                if e == 0 {
                    acc.remove(i);
                } else {
                    acc[i].exp = e;
                }
                return;
            }
            if !self.adjacent(y.vertex, x.vertex) {
                break;
            }
        }
        acc.push(x);
    }

    /// Lexicographically least shuffle of a reduced word: repeatedly take the
    /// smallest letter that commutes with everything before it.
    fn lex_least(&self, mut rest: Vec<Letter>) -> Vec<Letter> {
        let mut out = Vec::with_capacity(rest.len());
        let mut seen: Vec<Vertex> = Vec::new();
        while !rest.is_empty() {
            seen.clear();
            let mut best = 0;
            for j in 0..rest.len() {
                let v = rest[j].vertex;
                if seen.iter().all(|&u| self.adjacent(u, v)) && (j == 0 || rest[j] < rest[best]) {
                    best = j;
                }
                if !seen.contains(&v) {
                    seen.push(v);
                }
                // once every vertex of the graph blocks, nothing further is available
                if seen.len() == self.len() {
                    break;
                }
            }
            out.push(rest.remove(best));
        }
        out
    }

    pub fn normalize(&self, letters: &[Letter]) -> NormalForm {
        let mut acc = Vec::with_capacity(letters.len());
        for &x in letters {
            self.push_reduced(&mut acc, x);
        }
        NormalForm(self.lex_least(acc))
    }

    pub fn multiply(&self, u: &[Letter], v: &[Letter]) -> NormalForm {
        let mut acc: Vec<Letter> = Vec::with_capacity(u.len() + v.len());
        for &x in u.iter().chain(v) {
            self.push_reduced(&mut acc, x);
        }
        NormalForm(self.lex_least(acc))
    }

    /// Product of several words, normalised once at the end.
    pub fn product(&self, words: &[&[Letter]]) -> NormalForm {
        let mut acc = Vec::new();
        for w in words {
            for &x in w.iter() {
                self.push_reduced(&mut acc, x);
            }
        }
        NormalForm(self.lex_least(acc))
    }

    pub(crate) fn inverse_letters(&self, w: &[Letter]) -> Vec<Letter> {
        w.iter()
            .rev()
            .map(|l| Letter::new(l.vertex, self.order(l.vertex) - l.exp))
            .collect()
    }

    pub fn inverse(&self, w: &[Letter]) -> NormalForm {
        self.normalize(&self.inverse_letters(w))
    }

    /// `u v u⁻¹ v⁻¹`.
    pub fn commutator(&self, u: &[Letter], v: &[Letter]) -> NormalForm {
        let ui = self.inverse_letters(u);
        let vi = self.inverse_letters(v);
        self.product(&[u, v, &ui, &vi])
    }

    /// `u w u⁻¹`.
    pub fn conjugate(&self, u: &[Letter], w: &[Letter]) -> NormalForm {
        let ui = self.inverse_letters(u);
        self.product(&[u, w, &ui])
    }

    /// `w^k` for `k >= 0`.
    pub fn power(&self, w: &[Letter], k: u64) -> NormalForm {
        let mut acc = Vec::new();
        for _ in 0..k {
            for &x in w {
                self.push_reduced(&mut acc, x);
            }
        }
        NormalForm(self.lex_least(acc))
    }

    /// Kills every generator outside `keep`.
    pub fn project(&self, w: &[Letter], keep: &VertexSet) -> NormalForm {
        let kept: Vec<Letter> = w.iter().copied().filter(|l| keep.contains(l.vertex)).collect();
        self.normalize(&kept)
    }

    /// Vertices adjacent to every other vertex.
    pub fn central_clique(&self) -> VertexSet {
        self.vertices()
            .filter(|&v| self.vertices().all(|u| u == v || self.adjacent(u, v)))
            .collect()
    }

    /// Positions of letters that commute with everything before them.
    pub(crate) fn left_available(&self, w: &[Letter]) -> Vec<usize> {
        (0..w.len())
            .filter(|&j| w[..j].iter().all(|l| self.adjacent(l.vertex, w[j].vertex)))
            .collect()
    }

    /// Positions of letters that commute with everything after them.
    pub(crate) fn right_available(&self, w: &[Letter]) -> Vec<usize> {
        (0..w.len())
            .filter(|&j| w[j + 1..].iter().all(|l| self.adjacent(l.vertex, w[j].vertex)))
            .collect()
    }
}
