//! Brauer tree algebras on the walk basis.
//!
//! For an edge `i` with endpoints `u`, `v`, the projective at `i` has basis
//! the idempotent `e_i`, the walks of length `1..N_w` going around `w ∈ {u, v}`
//! starting at `i` (each step moves to the cyclic successor of the current
//! edge at `w`), and one socle element `s_i`. Here `N_w = val(w)·m_w`, with
//! `m_w` the multiplicity at the exceptional vertex and 1 elsewhere. Walks
//! concatenate when they turn around the same vertex; a concatenation of
//! total length `N_w` is `s_i` and anything longer vanishes.

use std::collections::HashMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::form::{validate_form, SymForm};
use crate::gfield::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerTree {
    /// `cyclic[v]` lists the edges at vertex `v` in cyclic order.
    cyclic: Vec<Vec<usize>>,
    edge_count: usize,
    exceptional: usize,
    multiplicity: u32,
}

impl BrauerTree {
    pub fn new(cyclic: Vec<Vec<usize>>, exceptional: usize, multiplicity: u32) -> Result<Self> {
        let bad = |msg: String| Err(Error::BadTree(msg));
        let n = cyclic.len();
        if n < 2 {
            return bad("a tree needs at least two vertices".into());
        }
        if exceptional >= n {
            return bad(format!("exceptional vertex {exceptional} out of range"));
        }
        if multiplicity == 0 {
            return bad("multiplicity must be at least 1".into());
        }
        let edge_count = n - 1;
        let mut ends: Vec<Vec<usize>> = vec![Vec::new(); edge_count];
        for (v, edges) in cyclic.iter().enumerate() {
            if edges.is_empty() {
                return bad(format!("vertex {v} has no edges"));
            }
            for &e in edges {
                if e >= edge_count {
                    return bad(format!("edge {e} out of range for {n} vertices"));
                }
                if ends[e].contains(&v) {
                    return bad(format!("edge {e} repeated at vertex {v}"));
                }
                ends[e].push(v);
            }
        }
        if let Some(e) = ends.iter().position(|x| x.len() != 2) {
            return bad(format!("edge {e} must have exactly two endpoints"));
        }
        // n vertices, n − 1 edges: connected iff acyclic iff a tree
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for e in &ends {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a == b {
                return bad("edges form a cycle".into());
            }
            parent[a] = b;
        }
        Ok(BrauerTree { cyclic, edge_count, exceptional, multiplicity })
    }

    /// Star: centre vertex 0 (exceptional) with edges `0..e` in order.
    pub fn star(e: usize, multiplicity: u32) -> Result<Self> {
        let mut cyclic = vec![(0..e).collect::<Vec<_>>()];
        cyclic.extend((0..e).map(|i| vec![i]));
        Self::new(cyclic, 0, multiplicity)
    }

    /// Line `0 - 1 - ... - e`, edge `i` joining vertices `i` and `i + 1`;
    /// the exceptional vertex is the end vertex 0.
    pub fn line(e: usize, multiplicity: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::BadTree("a tree needs at least one edge".into()));
        }
        let mut cyclic = vec![vec![0]];
        cyclic.extend((1..e).map(|v| vec![v - 1, v]));
        cyclic.push(vec![e - 1]);
        Self::new(cyclic, 0, multiplicity)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertex_count(&self) -> usize {
        self.cyclic.len()
    }

    pub fn cyclic_order(&self, v: usize) -> &[usize] {
        &self.cyclic[v]
    }

    pub fn exceptional(&self) -> usize {
        self.exceptional
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn valence(&self, v: usize) -> usize {
        self.cyclic[v].len()
    }

    /// Endpoints of edge `e`, smaller vertex first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let mut it = (0..self.cyclic.len()).filter(|&v| self.cyclic[v].contains(&e));
        let u = it.next().expect("validated tree");
        let v = it.next().expect("validated tree");
        (u, v)
    }

    /// Walk length `N_w = val(w)·m_w` around vertex `w`.
    pub fn walk_length(&self, w: usize) -> usize {
        let m = if w == self.exceptional { self.multiplicity as usize } else { 1 };
        self.valence(w) * m
    }

    /// `Σ_edges (N_u + N_v)`.
    pub fn expected_dim(&self) -> usize {
        (0..self.edge_count)
            .map(|e| {
                let (u, v) = self.endpoints(e);
                self.walk_length(u) + self.walk_length(v)
            })
            .sum()
    }

    /// Same tree with edge `i` renamed `perm[i]`.
    pub fn relabel_edges(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.edge_count {
            return Err(Error::BadTree("permutation has wrong length".into()));
        }
        let cyclic = self.cyclic.iter().map(|edges| edges.iter().map(|&e| perm[e]).collect()).collect();
        Self::new(cyclic, self.exceptional, self.multiplicity)
    }

    fn successor(&self, w: usize, e: usize) -> usize {
        let order = &self.cyclic[w];
        let pos = order.iter().position(|&x| x == e).expect("edge at vertex");
        order[(pos + 1) % order.len()]
    }

    fn walk_end(&self, w: usize, start: usize, len: usize) -> usize {
        let mut e = start;
        for _ in 0..len % self.valence(w) {
            e = self.successor(w, e);
        }
        e
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Walk {
    Idempotent(usize),
    Socle(usize),
    Partial { start: usize, vertex: usize, len: usize },
}

/// The Brauer tree algebra with `λ` the indicator of the socle elements.
/// Associativity and the form are validated; a construction error surfaces
/// as `Error::Internal` rather than a wrong algebra.
pub fn brauer_tree_algebra(t: &BrauerTree, field: FieldSpec) -> Result<(Algebra, SymForm)> {
    let mut basis = Vec::with_capacity(t.expected_dim());
    for i in 0..t.edge_count() {
        let (u, v) = t.endpoints(i);
        basis.push(Walk::Idempotent(i));
        for w in [u, v] {
            for len in 1..t.walk_length(w) {
                basis.push(Walk::Partial { start: i, vertex: w, len });
            }
        }
        basis.push(Walk::Socle(i));
    }
    let index: HashMap<Walk, usize> = basis.iter().enumerate().map(|(k, &w)| (w, k)).collect();

    let start = |w: Walk| match w {
        Walk::Idempotent(i) | Walk::Socle(i) => i,
        Walk::Partial { start, .. } => start,
    };
    let end = |w: Walk| match w {
        Walk::Idempotent(i) | Walk::Socle(i) => i,
        Walk::Partial { start, vertex, len } => t.walk_end(vertex, start, len),
    };
    let product = |a: Walk, b: Walk| -> Option<Walk> {
        if end(a) != start(b) {
            return None;
        }
        match (a, b) {
            (Walk::Idempotent(_), _) => Some(b),
            (_, Walk::Idempotent(_)) => Some(a),
            (Walk::Partial { start, vertex, len }, Walk::Partial { vertex: w2, len: len2, .. }) if vertex == w2 => {
                let total = len + len2;
                let full = t.walk_length(vertex);
                match total.cmp(&full) {
                    std::cmp::Ordering::Less => Some(Walk::Partial { start, vertex, len: total }),
                    std::cmp::Ordering::Equal => Some(Walk::Socle(start)),
                    std::cmp::Ordering::Greater => None,
                }
            }
            _ => None,
        }
    };

    let mut sc = Vec::new();
    for (i, &a) in basis.iter().enumerate() {
        for (j, &b) in basis.iter().enumerate() {
            if let Some(c) = product(a, b) {
                sc.push((i, j, index[&c], Scalar::ONE));
            }
        }
    }
    let d = basis.len();
    let mut unit = vec![Scalar::ZERO; d];
    let mut lambda = vec![Scalar::ZERO; d];
    for (k, w) in basis.iter().enumerate() {
        match w {
            Walk::Idempotent(_) => unit[k] = Scalar::ONE,
            Walk::Socle(_) => lambda[k] = Scalar::ONE,
            Walk::Partial { .. } => {}
        }
    }
    let names = basis
        .iter()
        .map(|w| match *w {
            Walk::Idempotent(i) => format!("e{i}"),
            Walk::Socle(i) => format!("s{i}"),
            Walk::Partial { start, vertex, len } => format!("w{start}v{vertex}l{len}"),
        })
        .collect();
    let a = Algebra::new(field, d, &sc, unit)
        .map_err(|e| Error::Internal(format!("Brauer tree algebra: {e}")))?
        .with_names(names)?;
    let form = validate_form(&a, &lambda).map_err(|e| Error::Internal(format!("Brauer tree form: {e}")))?;
    Ok((a, form))
}
