//! Naive re-implementations of the definitions, used as independent oracles.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use coxout::{LabelledGraph, Letter, Vertex};

/// Adjacency matrix and orders, indexed by vertex position.
pub struct Naive {
    pub vs: Vec<Vertex>,
    pub adj: Vec<Vec<bool>>,
    pub order: Vec<u64>,
}

impl Naive {
    pub fn new(g: &LabelledGraph) -> Self {
        let vs: Vec<Vertex> = g.vertices().collect();
        let adj = vs.iter().map(|&a| vs.iter().map(|&b| g.adjacent(a, b)).collect()).collect();
        let order = vs.iter().map(|&v| g.order(v)).collect();
        Naive { vs, adj, order }
    }

    pub fn n(&self) -> usize {
        self.vs.len()
    }

    fn common_link(&self, xs: &[usize]) -> Vec<bool> {
        (0..self.n()).map(|u| xs.iter().all(|&x| self.adj[u][x])).collect()
    }

    /// Warshall closure of adjacency on the vertices not in `removed`.
    pub fn reach(&self, removed: &[bool]) -> Vec<Vec<bool>> {
        let n = self.n();
        let mut r = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                r[i][j] = !removed[i] && !removed[j] && (i == j || self.adj[i][j]);
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        r
    }

    pub fn sil(&self, x1: usize, x2: usize, z: usize) -> bool {
        if x1 == x2 || z == x1 || z == x2 || self.adj[x1][x2] {
            return false;
        }
        let l = self.common_link(&[x1, x2]);
        if l[z] {
            return false;
        }
        let r = self.reach(&l);
        !r[z][x1] && !r[z][x2]
    }

    pub fn stil(&self, x: [usize; 3], z: usize) -> bool {
        let [a, b, c] = x;
        if a == b || b == c || a == c || x.contains(&z) {
            return false;
        }
        let edges = [(a, b), (a, c), (b, c)].iter().filter(|&&(u, v)| self.adj[u][v]).count();
        if edges > 1 {
            return false;
        }
        let l = self.common_link(&x);
        if l[z] {
            return false;
        }
        let r = self.reach(&l);
        x.iter().all(|&xi| !r[z][xi])
    }

    pub fn fsil(&self, a: usize, b: usize, c: usize) -> bool {
        self.sil(a, b, c) && self.sil(a, c, b) && self.sil(b, c, a)
    }

    /// All `(x1, x2, z)` with `x1 < x2` and `(x1, x2 | z)` a SIL.
    pub fn sils(&self) -> BTreeSet<(usize, usize, usize)> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                for z in 0..n {
                    if self.sil(a, b, z) {
                        out.insert((a, b, z));
                    }
                }
            }
        }
        out
    }

    pub fn has_stil(&self) -> bool {
        let n = self.n();
        (0..n).any(|a| {
            (a + 1..n).any(|b| (b + 1..n).any(|c| (0..n).any(|z| self.stil([a, b, c], z))))
        })
    }

    pub fn has_fsil(&self) -> bool {
        let n = self.n();
        (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| self.fsil(a, b, c))))
    }

    pub fn has_non_coxeter_sil(&self) -> bool {
        self.sils().iter().any(|&(a, b, _)| self.order[a] >= 3 || self.order[b] >= 3)
    }

    /// "finite", "virtually-abelian-infinite" or "large", from the definitions.
    pub fn verdict(&self) -> &'static str {
        if self.has_fsil() || self.has_stil() || self.has_non_coxeter_sil() {
            "large"
        } else if self.sils().is_empty() {
            "finite"
        } else {
            "virtually-abelian-infinite"
        }
    }

    /// Components of `Γ ∖ st(v)`, as sorted index lists.
    pub fn star_components(&self, v: usize) -> Vec<Vec<usize>> {
        let removed: Vec<bool> = (0..self.n()).map(|u| u == v || self.adj[u][v]).collect();
        let r = self.reach(&removed);
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for i in 0..self.n() {
            if removed[i] || seen[i] {
                continue;
            }
            let comp: Vec<usize> = (0..self.n()).filter(|&j| r[i][j]).collect();
            for &j in &comp {
                seen[j] = true;
            }
            out.push(comp);
        }
        out
    }
}

/// The lexicographically least among the shortest words reachable from `w`
/// by swapping adjacent commuting letters and merging equal-vertex neighbours.
pub fn rewrite_closure_minimum(g: &LabelledGraph, w: &[Letter]) -> Vec<Letter> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    let mut best = w.to_vec();
    while let Some(cur) = queue.pop_front() {
        if cur.len() < best.len() || (cur.len() == best.len() && cur < best) {
            best = cur.clone();
        }
        for i in 0..cur.len().saturating_sub(1) {
            let (a, b) = (cur[i], cur[i + 1]);
            let mut next = cur.clone();
            if a.vertex == b.vertex {
                let p = g.order(a.vertex);
                let e = (a.exp + b.exp) % p;
                if e == 0 {
                    next.drain(i..i + 2);
                } else {
                    next[i] = Letter::new(a.vertex, e);
                    next.remove(i + 1);
                }
            } else if g.adjacent(a.vertex, b.vertex) {
                next.swap(i, i + 1);
            } else {
                continue;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    best
}

pub fn graph(names: &[&str], edges: &[(&str, &str)]) -> LabelledGraph {
    LabelledGraph::involutions(names, edges).unwrap()
}

pub fn g_va() -> LabelledGraph {
    graph(
        &["x", "y", "c1", "c2", "z"],
        &[("x", "c1"), ("x", "c2"), ("y", "c1"), ("y", "c2"), ("c1", "c2"), ("z", "c1")],
    )
}

/// STIL `(x1, x2, x3 | x4)` where no star of `x1, x2, x3` separates the other two.
pub fn no_separation() -> LabelledGraph {
    graph(
        &["x1", "x2", "x3", "x4", "y", "w12", "w13", "w23"],
        &[
            ("y", "x1"),
            ("y", "x2"),
            ("y", "x3"),
            ("w12", "x1"),
            ("w12", "x2"),
            ("w13", "x1"),
            ("w13", "x3"),
            ("w23", "x2"),
            ("w23", "x3"),
        ],
    )
}

/// Only `st(x1)` separates.
pub fn one_separation() -> LabelledGraph {
    graph(
        &["x1", "x2", "x3", "x4", "y", "u", "w"],
        &[("y", "x1"), ("y", "x2"), ("y", "x3"), ("u", "x1"), ("u", "x3"), ("w", "x1"), ("w", "x2")],
    )
}

/// `st(x1)` and `st(x2)` separate.
pub fn two_separations() -> LabelledGraph {
    graph(
        &["x1", "x2", "x3", "x4", "y", "w"],
        &[("y", "x1"), ("y", "x2"), ("y", "x3"), ("w", "x1"), ("w", "x2")],
    )
}

pub fn stil_vertices(g: &LabelledGraph) -> [Vertex; 4] {
    ["x1", "x2", "x3", "x4"].map(|n| g.vertex(n).unwrap())
}
