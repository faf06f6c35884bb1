//! Graphs and the numerical invariants read off their clique structure.
//!
//! A right-angled Artin group is captured by its commutation graph; the
//! invariants of interest here are purely clique-theoretic:
//!
//! * the **clique vector** counts cliques by cardinality (the empty clique
//!   included), and for these groups equals the vector of Betti numbers of
//!   the group's classifying complex;
//! * **cat** is the largest clique cardinality (the LS-category of that
//!   complex);
//! * **tc_r** is the largest total size of `r` cliques with empty common
//!   intersection (the `r`-th topological complexity), computed exactly by
//!   dynamic programming over intersection states.
//!
//! The graph constructors cover the families needed downstream: the
//! staircase graphs `B(k)` (parts `u_1..u_k`, `v_1..v_k`, with `u_i ~ v_j`
//! exactly when `i ≤ j`), isolated-vertex extensions, and the distant-pair
//! graphs `ra(n)` on `x_1..x_{n−1}` with `x_i ~ x_j` exactly when
//! `|i − j| > 1`.

use serde::Serialize;

use crate::error::{Error, Result};

/// An undirected simple graph on at most 64 labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// An edgeless graph with the given vertex labels.
    pub fn new(labels: Vec<String>) -> Result<SimpleGraph> {
        if labels.len() > 64 {
            return Err(Error::BadGraphSpec {
                msg: format!("{} vertices exceed the 64-vertex limit", labels.len()),
            });
        }
        let n = labels.len();
        Ok(SimpleGraph { labels, adj: vec![0; n] })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Label of vertex `u`.
    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    /// Index of the vertex with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Inserts the undirected edge `{u, v}`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.vertex_count() && v < self.vertex_count(), "bad edge ({u},{v})");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// True when `{u, v}` is an edge.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Neighbourhood of `u` as a bitmask.
    pub fn neighbours(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in u + 1..self.vertex_count() {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge count.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Degree of `u`.
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Graphviz DOT source.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for (u, label) in self.labels.iter().enumerate() {
            if self.adj[u] == 0 {
                out.push_str(&format!("  \"{label}\";\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.labels[u], self.labels[v]));
        }
        out.push_str("}\n");
        out
    }

    /// Parses a minimal subset of DOT: `graph name { a -- b; c; }` with
    /// bare or double-quoted identifiers.
    pub fn from_dot(src: &str) -> Result<SimpleGraph> {
        let open = src.find('{').ok_or_else(|| Error::BadGraphSpec { msg: "missing '{'".into() })?;
        let close =
            src.rfind('}').ok_or_else(|| Error::BadGraphSpec { msg: "missing '}'".into() })?;
        if close < open {
            return Err(Error::BadGraphSpec { msg: "mismatched braces".into() });
        }
        let body = &src[open + 1..close];
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        let intern = |labels: &mut Vec<String>, name: &str| {
            if !labels.iter().any(|l| l == name) {
                labels.push(name.to_string());
            }
        };
        for stmt in body.split([';', '\n']) {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let parts: Vec<String> = stmt
                .split("--")
                .map(|s| s.trim().trim_matches('"').to_string())
                .collect();
            if parts.iter().any(String::is_empty) {
                return Err(Error::BadGraphSpec { msg: format!("bad statement: {stmt:?}") });
            }
            for name in &parts {
                intern(&mut labels, name);
            }
            for w in parts.windows(2) {
                edges.push((w[0].clone(), w[1].clone()));
            }
        }
        let mut g = SimpleGraph::new(labels)?;
        for (a, b) in edges {
            let u = g.index_of(&a).expect("interned");
            let v = g.index_of(&b).expect("interned");
            if u == v {
                return Err(Error::BadGraphSpec { msg: format!("self-loop at {a}") });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Exhaustive isomorphism test (degree-pruned backtracking); intended
    /// for the small comparison graphs that arise here.
    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut deg_a: Vec<usize> = (0..n).map(|u| self.degree(u)).collect();
        let mut deg_b: Vec<usize> = (0..n).map(|u| other.degree(u)).collect();
        deg_a.sort_unstable();
        deg_b.sort_unstable();
        if deg_a != deg_b {
            return false;
        }
        let mut map: Vec<Option<usize>> = vec![None; n];
        let mut used: u64 = 0;
        self.iso_rec(other, 0, &mut map, &mut used)
    }

    fn iso_rec(&self, other: &SimpleGraph, u: usize, map: &mut Vec<Option<usize>>, used: &mut u64) -> bool {
        let n = self.vertex_count();
        if u == n {
            return true;
        }
        for v in 0..n {
            if *used & (1 << v) != 0 || self.degree(u) != other.degree(v) {
                continue;
            }
            let consistent = (0..u).all(|w| {
                let mw = map[w].expect("mapped prefix");
                self.adjacent(u, w) == other.adjacent(v, mw)
            });
            if !consistent {
                continue;
            }
            map[u] = Some(v);
            *used |= 1 << v;
            if self.iso_rec(other, u + 1, map, used) {
                return true;
            }
            map[u] = None;
            *used &= !(1 << v);
        }
        false
    }
}

/// The staircase graph `B(k)`: vertices `u_1..u_k, v_1..v_k`, with an edge
/// `{u_i, v_j}` exactly when `i ≤ j`.
pub fn b_graph(k: usize) -> Result<SimpleGraph> {
    let mut labels = Vec::with_capacity(2 * k);
    for i in 1..=k {
        labels.push(format!("u{i}"));
    }
    for j in 1..=k {
        labels.push(format!("v{j}"));
    }
    let mut g = SimpleGraph::new(labels)?;
    for i in 1..=k {
        for j in i..=k {
            g.add_edge(i - 1, k + j - 1);
        }
    }
    Ok(g)
}

/// `graph` plus `k` fresh isolated vertices.
pub fn add_isolated(k: usize, graph: &SimpleGraph) -> Result<SimpleGraph> {
    let mut labels: Vec<String> = graph.labels.clone();
    for i in 1..=k {
        labels.push(format!("iso{i}"));
    }
    let mut g = SimpleGraph::new(labels)?;
    for (u, v) in graph.edges() {
        g.add_edge(u, v);
    }
    Ok(g)
}

/// The distant-pair graph on `x_1..x_{n−1}`: `x_i ~ x_j` iff `|i − j| > 1`.
pub fn ra_graph(n: usize) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(Error::BadGraphSpec { msg: "ra graph needs n ≥ 1".into() });
    }
    let labels: Vec<String> = (1..n).map(|i| format!("x{i}")).collect();
    let mut g = SimpleGraph::new(labels)?;
    for i in 0..n.saturating_sub(1) {
        for j in i + 2..n - 1 {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

/// All cliques of the graph as vertex bitmasks (the empty clique included),
/// or `None` once more than `cap` cliques exist.
pub fn cliques_bounded(g: &SimpleGraph, cap: usize) -> Option<Vec<u64>> {
    let n = g.vertex_count();
    let mut out: Vec<u64> = vec![0];
    // Grow cliques by their largest vertex; candidates stay sorted above it.
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((mask, start)) = stack.pop() {
        for v in start..n {
            let vbit = 1u64 << v;
            if mask != 0 && (g.neighbours(v) & mask) != mask {
                continue;
            }
            let grown = mask | vbit;
            if out.len() == cap {
                return None;
            }
            out.push(grown);
            stack.push((grown, v + 1));
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Default clique enumeration cap.
pub const CLIQUE_CAP: usize = 100_000;

/// Clique counts by cardinality, `vector[k]` = number of `k`-cliques
/// (so `vector[0] = 1`).
pub fn clique_vector(g: &SimpleGraph) -> Result<Vec<usize>> {
    let cliques = cliques_bounded(g, CLIQUE_CAP).ok_or_else(|| Error::BadGraphSpec {
        msg: format!("more than {CLIQUE_CAP} cliques; clique vector not computed"),
    })?;
    let mut vector = Vec::new();
    for c in cliques {
        let k = c.count_ones() as usize;
        if vector.len() <= k {
            vector.resize(k + 1, 0);
        }
        vector[k] += 1;
    }
    Ok(vector)
}

/// Largest clique cardinality.
pub fn cat(g: &SimpleGraph) -> Result<usize> {
    Ok(clique_vector(g)?.len() - 1)
}

/// Result of a topological-complexity computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TcResult {
    /// The computed value.
    pub value: usize,
    /// True when the clique enumeration was exhaustive (exact value);
    /// false when only maximal cliques were used (lower bound).
    pub exact: bool,
}

/// The `r`-th topological complexity: the maximum of `Σ|C_i|` over `r`
/// cliques `C_1, …, C_r` (empty allowed) with `C_1 ∩ … ∩ C_r = ∅`.
///
/// Exact whenever the graph has at most [`CLIQUE_CAP`] cliques; beyond
/// that, falls back to maximal cliques only and reports a lower bound.
pub fn tc(g: &SimpleGraph, r: usize) -> Result<TcResult> {
    if r < 2 {
        return Err(Error::BadGraphSpec { msg: format!("tc needs r ≥ 2, got {r}") });
    }
    match cliques_bounded(g, CLIQUE_CAP) {
        Some(cliques) => Ok(TcResult { value: tc_over(&cliques, r), exact: true }),
        None => {
            let maximal = maximal_cliques(g);
            let mut with_empty = maximal;
            with_empty.push(0);
            Ok(TcResult { value: tc_over(&with_empty, r), exact: false })
        }
    }
}

/// Intersection-state dynamic programme with domination pruning.
fn tc_over(cliques: &[u64], r: usize) -> usize {
    // state: intersection mask → best total size so far
    let mut states: Vec<(u64, usize)> =
        cliques.iter().map(|&c| (c, c.count_ones() as usize)).collect();
    states = prune_dominated(states);
    for _ in 1..r {
        let mut next: std::collections::HashMap<u64, usize> = Default::default();
        for &(mask, total) in &states {
            for &c in cliques {
                let m = mask & c;
                let t = total + c.count_ones() as usize;
                let slot = next.entry(m).or_insert(0);
                if t > *slot {
                    *slot = t;
                }
            }
        }
        states = prune_dominated(next.into_iter().collect());
    }
    states.iter().filter(|&&(m, _)| m == 0).map(|&(_, t)| t).max().unwrap_or(0)
}

/// Keeps only states not dominated by another state with a subset mask and
/// a total at least as large.
fn prune_dominated(mut states: Vec<(u64, usize)>) -> Vec<(u64, usize)> {
    states.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.count_ones().cmp(&b.0.count_ones())));
    let mut kept: Vec<(u64, usize)> = Vec::new();
    'outer: for (mask, total) in states {
        for &(kmask, ktotal) in &kept {
            if kmask & mask == kmask && ktotal >= total {
                continue 'outer;
            }
        }
        kept.push((mask, total));
    }
    kept
}

/// All maximal cliques (Bron–Kerbosch with pivoting).
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<u64> {
    let n = g.vertex_count();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    fn bk(g: &SimpleGraph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = {
            let candidates = p | x;
            (0..64)
                .filter(|&v| candidates & (1 << v) != 0)
                .max_by_key(|&v| (g.neighbours(v) & p).count_ones())
                .expect("candidates nonempty")
        };
        let mut rest = p & !g.neighbours(pivot);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let vbit = 1u64 << v;
            bk(g, r | vbit, p & g.neighbours(v), x & g.neighbours(v), out);
            p &= !vbit;
            x |= vbit;
            rest &= !vbit;
        }
    }
    bk(g, 0, all, 0, &mut out);
    out
}

/// Parses a builtin graph description: `ra:<n>`, `b:<k>`,
/// `iso<k>+b:<j>` (e.g. `iso3+b:2`), or `complete:<n>`.
pub fn builtin_graph(desc: &str) -> Result<SimpleGraph> {
    let bad = |msg: &str| Error::BadGraphSpec { msg: msg.to_string() };
    if let Some(n) = desc.strip_prefix("ra:") {
        return ra_graph(n.parse().map_err(|_| bad(desc))?);
    }
    if let Some(k) = desc.strip_prefix("b:") {
        return b_graph(k.parse().map_err(|_| bad(desc))?);
    }
    if let Some(n) = desc.strip_prefix("complete:") {
        let n: usize = n.parse().map_err(|_| bad(desc))?;
        let mut g = SimpleGraph::new((1..=n).map(|i| format!("k{i}")).collect())?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        return Ok(g);
    }
    if let Some(rest) = desc.strip_prefix("iso") {
        if let Some((k, inner)) = rest.split_once('+') {
            let k: usize = k.parse().map_err(|_| bad(desc))?;
            return add_isolated(k, &builtin_graph(inner)?);
        }
    }
    Err(bad(&format!(
        "unknown graph description {desc:?} (try ra:<n>, b:<k>, iso<k>+b:<j>, complete:<n>)"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn staircase_graph_edge_counts() {
        for k in 0..6 {
            let g = b_graph(k).unwrap();
            assert_eq!(g.vertex_count(), 2 * k);
            assert_eq!(g.edge_count(), k * (k + 1) / 2);
        }
    }

    #[test]
    fn distant_pair_graph_on_five() {
        let g = ra_graph(5).unwrap();
        assert_eq!(g.vertex_count(), 4);
        let edges: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
            .collect();
        assert_eq!(
            edges,
            vec![
                ("x1".to_string(), "x3".to_string()),
                ("x1".to_string(), "x4".to_string()),
                ("x2".to_string(), "x4".to_string()),
            ]
        );
    }

    #[test]
    fn clique_vector_of_distant_pair_graphs_is_binomial() {
        for n in 2..=12 {
            let g = ra_graph(n).unwrap();
            let vector = clique_vector(&g).unwrap();
            for (k, &count) in vector.iter().enumerate() {
                assert_eq!(count, binom(n - k, k), "n = {n}, k = {k}");
            }
            assert_eq!(cat(&g).unwrap(), n / 2, "n = {n}");
        }
    }

    #[test]
    fn tc_of_the_five_token_strip_graph() {
        let g = ra_graph(5).unwrap();
        assert_eq!(tc(&g, 2).unwrap(), TcResult { value: 4, exact: true });
    }

    #[test]
    fn tc_on_isolated_vertices() {
        // One isolated vertex: r cliques with empty intersection can use
        // the vertex r−1 times.
        let one = add_isolated(1, &SimpleGraph::new(vec![]).unwrap()).unwrap();
        for r in 2..=4 {
            assert_eq!(tc(&one, r).unwrap().value, r - 1, "r = {r}");
        }
        // Two or more isolated vertices allow alternation: value r.
        let three = add_isolated(3, &SimpleGraph::new(vec![]).unwrap()).unwrap();
        for r in 2..=4 {
            assert_eq!(tc(&three, r).unwrap().value, r, "r = {r}");
        }
    }

    #[test]
    fn tc_on_staircase_families() {
        // 3 isolated vertices + B(1): an edge plus isolated vertices.
        let g = add_isolated(3, &b_graph(1).unwrap()).unwrap();
        for r in 2..=4 {
            assert_eq!(tc(&g, r).unwrap().value, 2 * r - 1, "r = {r}");
        }
        // B(2) has two disjoint edges: value 2r.
        let g = add_isolated(3, &b_graph(2).unwrap()).unwrap();
        for r in 2..=4 {
            assert_eq!(tc(&g, r).unwrap().value, 2 * r, "r = {r}");
        }
    }

    #[test]
    fn isomorphism_distinguishes_same_degree_sequences() {
        // C6 vs 2×C3: both 3-regular? no — both 2-regular, 6 vertices.
        let mut c6 = SimpleGraph::new((0..6).map(|i| format!("a{i}")).collect()).unwrap();
        for i in 0..6 {
            c6.add_edge(i, (i + 1) % 6);
        }
        let mut two_triangles = SimpleGraph::new((0..6).map(|i| format!("b{i}")).collect()).unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            two_triangles.add_edge(u, v);
        }
        assert!(!c6.is_isomorphic(&two_triangles));
        // Relabelled C6 is isomorphic.
        let mut c6_shuffled = SimpleGraph::new((0..6).map(|i| format!("c{i}")).collect()).unwrap();
        for (u, v) in [(2, 4), (4, 0), (0, 3), (3, 5), (5, 1), (1, 2)] {
            c6_shuffled.add_edge(u, v);
        }
        assert!(c6.is_isomorphic(&c6_shuffled));
    }

    #[test]
    fn dot_round_trip() {
        let g = add_isolated(1, &b_graph(2).unwrap()).unwrap();
        let dot = g.to_dot();
        let back = SimpleGraph::from_dot(&dot).unwrap();
        assert!(g.is_isomorphic(&back));
        assert_eq!(back.edge_count(), 3);
    }

    #[test]
    fn builtin_graph_descriptions() {
        assert_eq!(builtin_graph("ra:6").unwrap().vertex_count(), 5);
        assert_eq!(builtin_graph("b:3").unwrap().edge_count(), 6);
        assert_eq!(builtin_graph("iso3+b:1").unwrap().vertex_count(), 5);
        assert_eq!(builtin_graph("complete:4").unwrap().edge_count(), 6);
        assert!(builtin_graph("nope:1").is_err());
    }

    #[test]
    fn maximal_cliques_of_a_triangle_with_a_tail() {
        let mut g = SimpleGraph::new((0..4).map(|i| format!("t{i}")).collect()).unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 0), (2, 3)] {
            g.add_edge(u, v);
        }
        let mut max = maximal_cliques(&g);
        max.sort_unstable();
        assert_eq!(max, vec![0b0111, 0b1100]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn tc_bounds(n in 1usize..7, edge_bits in 0u64..(1 << 15), r in 2usize..5) {
            let mut g = SimpleGraph::new((0..n).map(|i| format!("p{i}")).collect()).unwrap();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if edge_bits & (1 << bit) != 0 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            let c = cat(&g).unwrap();
            let t = tc(&g, r).unwrap();
            prop_assert!(t.exact);
            // r cliques with empty intersection can't beat r·cat; taking a
            // maximum clique plus r−1 empty cliques shows tc ≥ cat.
            prop_assert!(t.value <= r * c);
            prop_assert!(t.value >= c);
            // Monotone in r.
            if r < 4 {
                prop_assert!(tc(&g, r + 1).unwrap().value >= t.value);
            }
        }
    }
}
