//! Simple undirected graphs with stable vertex and edge indexing.
//!
//! Edges are always stored sorted lexicographically with `u < v`, so every
//! edge has a canonical index that labelers and the search modules can rely
//! on. Named families additionally carry a role map (e.g. `"center"`,
//! `"base-3-1"`, `"middle-2-0"`) so constructions can address structural
//! positions without re-deriving them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Immutable simple undirected graph.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
    degrees: Vec<usize>,
    family: Option<String>,
    vertex_roles: BTreeMap<String, usize>,
    edge_roles: BTreeMap<String, usize>,
    /// Set when a product/corona was built from a disconnected operand.
    disconnected_operand: bool,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list. Edges are
    /// normalized to `u < v` and sorted; self-loops and duplicates are
    /// rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if es.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate edge".into()));
        }
        let mut adj = vec![false; n * n];
        let mut degrees = vec![0usize; n];
        for &(u, v) in &es {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Graph {
            n,
            edges: es,
            adj,
            degrees,
            family: None,
            vertex_roles: BTreeMap::new(),
            edge_roles: BTreeMap::new(),
            disconnected_operand: false,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (sorted) order; the position of an edge in this
    /// slice is its stable edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adjacent(v, u))
    }

    /// Canonical index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn family(&self) -> Option<&str> {
        self.family.as_deref()
    }

    pub fn vertex_role(&self, name: &str) -> Option<usize> {
        self.vertex_roles.get(name).copied()
    }

    pub fn edge_role(&self, name: &str) -> Option<usize> {
        self.edge_roles.get(name).copied()
    }

    pub fn vertex_roles(&self) -> &BTreeMap<String, usize> {
        &self.vertex_roles
    }

    pub fn edge_roles(&self) -> &BTreeMap<String, usize> {
        &self.edge_roles
    }

    /// True when this graph was produced by a product/corona constructor
    /// whose operand was disconnected. The corona bound operations reject
    /// such graphs; the constructors themselves accept them.
    pub fn has_disconnected_operand(&self) -> bool {
        self.disconnected_operand
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    fn with_family(mut self, tag: String) -> Graph {
        self.family = Some(tag);
        self
    }

    fn role_v(&mut self, name: impl Into<String>, v: usize) {
        self.vertex_roles.insert(name.into(), v);
    }

    fn role_e(&mut self, name: impl Into<String>, u: usize, v: usize) {
        let idx = self.edge_index(u, v).expect("role edge must exist");
        self.edge_roles.insert(name.into(), idx);
    }

    /// Path on `n` vertices, in path order.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("path needs n >= 1".into()));
        }
        Graph::new(n, (1..n).map(|v| (v - 1, v))).map(|g| g.with_family(format!("path({n})")))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
        }
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Graph::new(n, edges).map(|g| g.with_family(format!("cycle({n})")))
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("complete needs n >= 1".into()));
        }
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Graph::new(n, edges).map(|g| g.with_family(format!("complete({n})")))
    }

    /// Star with `n >= 1` leaves; the center is vertex 0.
    pub fn star(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("star needs n >= 1 leaves".into()));
        }
        let mut g = Graph::new(n + 1, (1..=n).map(|v| (0, v)))?;
        g.role_v("center", 0);
        Ok(g.with_family(format!("star({n})")))
    }

    /// Complete bipartite graph K_{p,q}; the first part is vertices 0..p.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParameter("biclique needs p,q >= 1".into()));
        }
        let edges = (0..p).flat_map(|u| (0..q).map(move |v| (u, p + v)));
        Graph::new(p + q, edges).map(|g| g.with_family(format!("biclique({p},{q})")))
    }

    /// Friendship graph: `n >= 2` triangles sharing the center vertex 0.
    /// Triangle `i` (1-based) has base vertices `2i-1` and `2i`.
    pub fn friendship(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter("friendship needs n >= 2".into()));
        }
        let mut edges = Vec::with_capacity(3 * n);
        for i in 1..=n {
            let (a, b) = (2 * i - 1, 2 * i);
            edges.push((0, a));
            edges.push((0, b));
            edges.push((a, b));
        }
        let mut g = Graph::new(2 * n + 1, edges)?;
        g.role_v("center", 0);
        for i in 1..=n {
            let (a, b) = (2 * i - 1, 2 * i);
            g.role_v(format!("base-{i}-1"), a);
            g.role_v(format!("base-{i}-2"), b);
            g.role_e(format!("side-{i}-1"), 0, a);
            g.role_e(format!("side-{i}-2"), 0, b);
            g.role_e(format!("base-{i}"), a, b);
        }
        Ok(g.with_family(format!("friendship({n})")))
    }

    /// Book graph with `n >= 2` pages: the spine edge is {0,1}; page `i`
    /// (1-based) has its top vertex `2i` adjacent to 0 and its bottom
    /// vertex `2i+1` adjacent to 1.
    pub fn book(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter("book needs n >= 2".into()));
        }
        let mut edges = vec![(0, 1)];
        for i in 1..=n {
            let (top, bot) = (2 * i, 2 * i + 1);
            edges.push((0, top));
            edges.push((1, bot));
            edges.push((top, bot));
        }
        let mut g = Graph::new(2 * n + 2, edges)?;
        g.role_v("spine-1", 0);
        g.role_v("spine-2", 1);
        for i in 1..=n {
            g.role_v(format!("page-{i}-top"), 2 * i);
            g.role_v(format!("page-{i}-bottom"), 2 * i + 1);
        }
        Ok(g.with_family(format!("book({n})")))
    }

    /// Cartesian product; vertex `(a, b)` gets index `a * |V(H)| + b`.
    pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
        if g.n == 0 || h.n == 0 {
            return Err(Error::InvalidParameter("product factors must be nonempty".into()));
        }
        let nh = h.n;
        let mut edges = Vec::with_capacity(g.n * h.edge_count() + h.n * g.edge_count());
        for a in 0..g.n {
            for &(b1, b2) in h.edges() {
                edges.push((a * nh + b1, a * nh + b2));
            }
        }
        for &(a1, a2) in g.edges() {
            for b in 0..h.n {
                edges.push((a1 * nh + b, a2 * nh + b));
            }
        }
        let mut prod = Graph::new(g.n * h.n, edges)?;
        prod.disconnected_operand = g.disconnected_operand
            || h.disconnected_operand
            || !g.is_connected()
            || !h.is_connected();
        Ok(prod.with_family(format!(
            "cartesian({},{})",
            g.family().unwrap_or("graph"),
            h.family().unwrap_or("graph")
        )))
    }

    /// Corona product G∘H: one copy of G (vertices 0..|V(G)|) plus |V(G)|
    /// copies of H, vertex `i` of G joined to every vertex of copy `i`.
    /// Copy `i`'s vertex `k` sits at index `|V(G)| + i*|V(H)| + k`; the
    /// middle edge from `v_i` to it carries the edge role `middle-i-k`.
    pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
        if g.n == 0 || h.n == 0 {
            return Err(Error::InvalidParameter("corona operands must be nonempty".into()));
        }
        let (ng, nh) = (g.n, h.n);
        let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
        for i in 0..ng {
            let base = ng + i * nh;
            for &(u, v) in h.edges() {
                edges.push((base + u, base + v));
            }
            for k in 0..nh {
                edges.push((i, base + k));
            }
        }
        let mut c = Graph::new(ng * (1 + nh), edges)?;
        for i in 0..ng {
            c.role_v(format!("g-{i}"), i);
            let base = ng + i * nh;
            for k in 0..nh {
                c.role_v(format!("copy-{i}-{k}"), base + k);
                c.role_e(format!("middle-{i}-{k}"), i, base + k);
            }
        }
        c.disconnected_operand = g.disconnected_operand
            || h.disconnected_operand
            || !g.is_connected()
            || !h.is_connected();
        Ok(c.with_family(format!(
            "corona({},{})",
            g.family().unwrap_or("graph"),
            h.family().unwrap_or("graph")
        )))
    }

    /// Parses the edge-list format: a `p <n>` line followed by `e <u> <v>`
    /// lines (0-based); `#` starts a comment.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let bad = || Error::Parse(format!("line {}: `{}`", lineno + 1, raw.trim()));
            match parts.next() {
                Some("p") => {
                    let v = parts.next().ok_or_else(bad)?;
                    n = Some(v.parse().map_err(|_| bad())?);
                }
                Some("e") => {
                    let u: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    let v: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    edges.push((u, v));
                }
                _ => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `p <vertex_count>` line".into()))?;
        Graph::new(n, edges).map(|g| g.with_family("file".into()))
    }

    /// Renders the graph in the same edge-list format `from_edge_list` reads.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }

    /// DOT export; optional vertex/edge labels are rendered as node labels
    /// and edge labels (labels are the 1-based labeling arrays used
    /// throughout the crate).
    pub fn to_dot(&self, vertex_labels: Option<&[usize]>, edge_labels: Option<&[usize]>) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            match vertex_labels {
                Some(l) => {
                    let _ = writeln!(out, "  {v} [label=\"{v}:{}\"];", l[v]);
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            match edge_labels {
                Some(l) => {
                    let _ = writeln!(out, "  {u} -- {v} [label=\"{}\"];", l[i]);
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The edge-index permutation induced by a vertex permutation. Fails with
/// `NotAnAutomorphism` when some edge's image is not an edge.
pub fn induced_edge_permutation(g: &Graph, p: &Permutation) -> Result<Vec<usize>> {
    if p.len() != g.vertex_count() {
        return Err(Error::InvalidParameter(
            "permutation length does not match vertex count".into(),
        ));
    }
    g.edges()
        .iter()
        .map(|&(u, v)| {
            g.edge_index(p.apply(u), p.apply(v))
                .ok_or(Error::NotAnAutomorphism)
        })
        .collect()
}
