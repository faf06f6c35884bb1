//! The ambient complex of a `p × q` grid graph.
//!
//! Vertices of the grid are numbered `1..=p·q` along a snake path: row 1 is
//! the bottom row and is read left to right, row 2 right to left, and so on,
//! alternating.  The snake path itself (consecutively numbered vertices) is
//! the chosen spanning tree.  Every vertical edge that is *not* a snake turn
//! is a "deleted" (non-tree) edge; the deleted edge whose lower endpoint is
//! `i` joins `i` to its vertical partner `2p·⌈i/p⌉ − i + 1`, the vertex
//! directly above `i` in the next row.  Unit squares of the grid are keyed by
//! their smallest corner.
//!
//! All edges are oriented from their smaller endpoint to their larger one,
//! and all cells of the ambient complex are self-describing vertex tuples, so
//! a cell can be serialized, hashed, and compared without reference to the
//! grid that produced it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A grid vertex, numbered `1..=p·q` along the snake path.
pub type Vertex = usize;

/// Validated dimensions of a grid graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    /// Number of columns (row length).
    pub p: usize,
    /// Number of rows.
    pub q: usize,
}

/// Hard cap on the vertex count so that vertex sets fit in a `u128` bitmask.
pub const MAX_VERTICES: usize = 128;

impl GridSpec {
    /// Validates `p, q ≥ 2` and the global vertex cap.
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p < 2 || q < 2 || p * q > MAX_VERTICES {
            return Err(Error::InvalidGrid { p, q });
        }
        Ok(GridSpec { p, q })
    }

    /// Total number of vertices, `p·q`.
    pub fn vertex_count(&self) -> usize {
        self.p * self.q
    }

    /// Snake number of the vertex in 1-based `(col, row)` position.
    pub fn vertex_at(&self, col: usize, row: usize) -> Result<Vertex> {
        if col == 0 || col > self.p || row == 0 || row > self.q {
            return Err(Error::VertexOutOfRange {
                v: 0,
                msg: format!("(col, row) = ({col}, {row}) outside {}×{}", self.p, self.q),
            });
        }
        let base = (row - 1) * self.p;
        Ok(if row % 2 == 1 { base + col } else { base + self.p - col + 1 })
    }

    /// 1-based `(col, row)` position of a snake-numbered vertex.
    pub fn col_row(&self, v: Vertex) -> Result<(usize, usize)> {
        self.check_vertex(v)?;
        let row = (v - 1) / self.p + 1;
        let offset = v - (row - 1) * self.p;
        let col = if row % 2 == 1 { offset } else { self.p - offset + 1 };
        Ok((col, row))
    }

    /// The vertex directly above `i` (same column, next row):
    /// `2p·⌈i/p⌉ − i + 1`.  Defined for `1 ≤ i ≤ p(q−1)`.
    pub fn vertical_partner(&self, i: Vertex) -> Result<Vertex> {
        if i == 0 || i > self.p * (self.q - 1) {
            return Err(Error::VertexOutOfRange {
                v: i,
                msg: format!("vertical partner needs 1 ≤ i ≤ {}", self.p * (self.q - 1)),
            });
        }
        let ceil = i.div_ceil(self.p);
        Ok(2 * self.p * ceil - i + 1)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                v,
                msg: format!("grid has vertices 1..={}", self.vertex_count()),
            });
        }
        Ok(())
    }
}

/// A cell of the ambient complex: a vertex, an edge, or a unit square.
///
/// Edges store their endpoints in increasing order and are oriented from the
/// smaller endpoint to the larger one.  Squares store their four corners in
/// increasing order `[i, i+1, j−1, j]` where `j` is the vertical partner of
/// the key corner `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AmbientCell {
    /// A single grid vertex.
    Vertex(Vertex),
    /// A grid edge `[a, b]` with `a < b`.
    Edge([Vertex; 2]),
    /// A unit square, corners in increasing snake order.
    Square([Vertex; 4]),
}

impl AmbientCell {
    /// Builds an edge cell, normalizing endpoint order.
    pub fn edge(x: Vertex, y: Vertex) -> AmbientCell {
        if x < y {
            AmbientCell::Edge([x, y])
        } else {
            AmbientCell::Edge([y, x])
        }
    }

    /// Cell dimension: 0, 1, or 2.
    pub fn dim(&self) -> usize {
        match self {
            AmbientCell::Vertex(_) => 0,
            AmbientCell::Edge(_) => 1,
            AmbientCell::Square(_) => 2,
        }
    }

    /// Smallest vertex in the closure of the cell.
    pub fn min_vertex(&self) -> Vertex {
        self.vertices()[0]
    }

    /// Vertices in the closure of the cell, in increasing order.
    pub fn vertices(&self) -> &[Vertex] {
        match self {
            AmbientCell::Vertex(v) => std::slice::from_ref(v),
            AmbientCell::Edge(ends) => ends,
            AmbientCell::Square(corners) => corners,
        }
    }

    /// Endpoints of an edge cell.
    pub fn endpoints(&self) -> Option<(Vertex, Vertex)> {
        match self {
            AmbientCell::Edge([a, b]) => Some((*a, *b)),
            _ => None,
        }
    }

    /// Bitmask of the closure vertices (bit `v − 1` set for vertex `v`).
    pub fn vertex_mask(&self) -> u128 {
        self.vertices().iter().fold(0u128, |m, v| m | (1u128 << (v - 1)))
    }

    /// True when the closures of `self` and `other` share a vertex.
    pub fn meets(&self, other: &AmbientCell) -> bool {
        self.vertex_mask() & other.vertex_mask() != 0
    }

    /// Total order: by smallest vertex, then dimension, then vertex tuple.
    pub fn sort_key(&self) -> (Vertex, usize, [Vertex; 4]) {
        let mut t = [0usize; 4];
        for (slot, v) in t.iter_mut().zip(self.vertices()) {
            *slot = *v;
        }
        (self.min_vertex(), self.dim(), t)
    }
}

impl Ord for AmbientCell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for AmbientCell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for AmbientCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AmbientCell::Vertex(v) => write!(f, "{v}"),
            AmbientCell::Edge([a, b]) => write!(f, "[{a},{b}]"),
            AmbientCell::Square([a, b, c, d]) => write!(f, "sq({a},{b},{c},{d})"),
        }
    }
}

/// The full ambient complex of a grid: vertices, spanning-tree edges,
/// deleted (non-tree) vertical edges, and unit squares.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AmbientComplex {
    /// Grid dimensions.
    pub spec: GridSpec,
    /// All vertices, `1..=p·q`.
    pub vertices: Vec<Vertex>,
    /// Snake-path edges `[i, i+1]`, `1 ≤ i ≤ pq−1`.
    pub tree_edges: Vec<AmbientCell>,
    /// Non-tree vertical edges `[i, partner(i)]` for `p ∤ i`, keyed by `i`.
    pub deleted_edges: Vec<AmbientCell>,
    /// Unit squares keyed by their smallest corner.
    pub squares: Vec<AmbientCell>,
}

impl AmbientComplex {
    /// Builds the ambient complex of the given grid.
    pub fn build(spec: GridSpec) -> AmbientComplex {
        let m = spec.vertex_count();
        let vertices: Vec<Vertex> = (1..=m).collect();
        let tree_edges: Vec<AmbientCell> = (1..m).map(|i| AmbientCell::Edge([i, i + 1])).collect();
        let mut deleted_edges = Vec::new();
        let mut squares = Vec::new();
        for i in 1..=spec.p * (spec.q - 1) {
            if i % spec.p == 0 {
                continue; // snake turn: this vertical edge is already in the tree
            }
            let j = spec.vertical_partner(i).expect("i is in partner range");
            deleted_edges.push(AmbientCell::Edge([i, j]));
            squares.push(AmbientCell::Square([i, i + 1, j - 1, j]));
        }
        AmbientComplex { spec, vertices, tree_edges, deleted_edges, squares }
    }

    /// The deleted edge keyed by its lower endpoint `i` (requires `p ∤ i`,
    /// `i ≤ p(q−1)`).
    pub fn deleted_edge(&self, i: Vertex) -> Result<AmbientCell> {
        if i == 0 || i > self.spec.p * (self.spec.q - 1) || i.is_multiple_of(self.spec.p) {
            return Err(Error::NoSuchAmbientCell {
                msg: format!("no deleted edge keyed by {i} in a {}×{} grid", self.spec.p, self.spec.q),
            });
        }
        let j = self.spec.vertical_partner(i)?;
        Ok(AmbientCell::Edge([i, j]))
    }

    /// The unit square keyed by its smallest corner `i` (same key range as
    /// the deleted edges).
    pub fn square(&self, i: Vertex) -> Result<AmbientCell> {
        let edge = self.deleted_edge(i).map_err(|_| Error::NoSuchAmbientCell {
            msg: format!("no square keyed by {i} in a {}×{} grid", self.spec.p, self.spec.q),
        })?;
        let (_, j) = edge.endpoints().expect("deleted edge");
        Ok(AmbientCell::Square([i, i + 1, j - 1, j]))
    }

    /// True when `[a, b]` (with `a < b`) is a spanning-tree edge.
    pub fn is_tree_edge(&self, a: Vertex, b: Vertex) -> bool {
        b == a + 1 && a >= 1 && b <= self.spec.vertex_count()
    }

    /// Key of a tree edge: `[i−1, i] ↦ i`.  Deleted edges have no key.
    pub fn edge_key(&self, cell: &AmbientCell) -> Result<usize> {
        match cell {
            AmbientCell::Edge([a, b]) if self.is_tree_edge(*a, *b) => Ok(*b),
            AmbientCell::Edge([a, b]) => Err(Error::NotATreeEdge { a: *a, b: *b }),
            other => Err(Error::WrongDimension { got: other.dim(), expected: 1 }),
        }
    }

    /// True when `cell` is one of the deleted edges.
    pub fn is_deleted_edge(&self, cell: &AmbientCell) -> bool {
        match cell {
            AmbientCell::Edge([a, b]) => {
                *a <= self.spec.p * (self.spec.q - 1)
                    && *a % self.spec.p != 0
                    && self.spec.vertical_partner(*a).is_ok_and(|j| j == *b)
            }
            _ => false,
        }
    }

    /// Every ambient cell (optionally including squares), sorted.
    pub fn all_cells(&self, include_squares: bool) -> Vec<AmbientCell> {
        let mut cells: Vec<AmbientCell> =
            self.vertices.iter().map(|&v| AmbientCell::Vertex(v)).collect();
        cells.extend_from_slice(&self.tree_edges);
        cells.extend_from_slice(&self.deleted_edges);
        if include_squares {
            cells.extend_from_slice(&self.squares);
        }
        cells.sort();
        cells
    }

    /// Pretty JSON dump of the whole ambient complex.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Graphviz DOT source: tree edges solid, deleted edges dashed, vertices
    /// pinned to their grid coordinates.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph grid {\n  node [shape=circle];\n");
        for &v in &self.vertices {
            let (col, row) = self.spec.col_row(v).expect("built vertex is valid");
            out.push_str(&format!("  {v} [pos=\"{col},{row}!\"];\n"));
        }
        for e in &self.tree_edges {
            if let AmbientCell::Edge([a, b]) = e {
                out.push_str(&format!("  {a} -- {b};\n"));
            }
        }
        for e in &self.deleted_edges {
            if let AmbientCell::Edge([a, b]) = e {
                out.push_str(&format!("  {a} -- {b} [style=dashed];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn grid(p: usize, q: usize) -> AmbientComplex {
        AmbientComplex::build(GridSpec::new(p, q).expect("valid grid"))
    }

    #[test]
    fn snake_numbering_matches_worked_six_by_four_example() {
        let spec = GridSpec::new(6, 4).unwrap();
        assert_eq!(spec.vertex_at(6, 2).unwrap(), 7);
        assert_eq!(spec.vertex_at(1, 2).unwrap(), 12);
        assert_eq!(spec.vertex_at(5, 4).unwrap(), 20);
        assert_eq!(spec.vertex_at(1, 1).unwrap(), 1);
        assert_eq!(spec.vertex_at(6, 1).unwrap(), 6);
    }

    #[test]
    fn vertical_partner_formula_spot_checks() {
        let spec = GridSpec::new(6, 4).unwrap();
        assert_eq!(spec.vertical_partner(1).unwrap(), 12);
        assert_eq!(spec.vertical_partner(8).unwrap(), 17);
        assert_eq!(spec.vertical_partner(6).unwrap(), 7);
    }

    #[test]
    fn six_by_four_cell_counts() {
        let g = grid(6, 4);
        assert_eq!(g.vertices.len(), 24);
        assert_eq!(g.tree_edges.len(), 23);
        assert_eq!(g.deleted_edges.len(), 15);
        assert_eq!(g.tree_edges.len() + g.deleted_edges.len(), 38);
        assert_eq!(g.squares.len(), 15);
    }

    #[test]
    fn two_by_two_is_a_single_square_with_one_deleted_edge() {
        let g = grid(2, 2);
        assert_eq!(g.vertices, vec![1, 2, 3, 4]);
        assert_eq!(
            g.tree_edges,
            vec![AmbientCell::edge(1, 2), AmbientCell::edge(2, 3), AmbientCell::edge(3, 4)]
        );
        assert_eq!(g.deleted_edges, vec![AmbientCell::edge(1, 4)]);
        assert_eq!(g.squares, vec![AmbientCell::Square([1, 2, 3, 4])]);
    }

    #[test]
    fn edge_key_names_tree_edges_by_larger_endpoint() {
        let g = grid(2, 2);
        assert_eq!(g.edge_key(&AmbientCell::edge(1, 2)).unwrap(), 2);
        assert_eq!(g.edge_key(&AmbientCell::edge(3, 4)).unwrap(), 4);
        assert!(matches!(
            g.edge_key(&AmbientCell::edge(1, 4)),
            Err(Error::NotATreeEdge { a: 1, b: 4 })
        ));
    }

    #[test]
    fn deleted_edge_lookup_respects_key_range() {
        let g = grid(3, 3);
        assert_eq!(g.deleted_edge(1).unwrap(), AmbientCell::edge(1, 6));
        assert_eq!(g.deleted_edge(2).unwrap(), AmbientCell::edge(2, 5));
        assert_eq!(g.deleted_edge(4).unwrap(), AmbientCell::edge(4, 9));
        assert!(g.deleted_edge(3).is_err()); // snake turn
        assert!(g.deleted_edge(7).is_err()); // top row
    }

    #[test]
    fn square_corners_are_increasing_and_share_the_deleted_edge_key_range() {
        for (p, q) in [(2, 2), (3, 3), (4, 2), (6, 4), (5, 3)] {
            let g = grid(p, q);
            assert_eq!(g.squares.len(), (p - 1) * (q - 1));
            assert_eq!(g.deleted_edges.len(), (p - 1) * (q - 1));
            for s in &g.squares {
                let AmbientCell::Square(corners) = s else { panic!("square expected") };
                assert!(corners.windows(2).all(|w| w[0] < w[1]), "corners {corners:?}");
                let i = corners[0];
                assert_eq!(corners[1], i + 1);
                assert_eq!(g.spec.vertical_partner(i).unwrap(), corners[3]);
                assert_eq!(g.spec.vertical_partner(i + 1).unwrap(), corners[2]);
            }
        }
    }

    #[test]
    fn dot_export_styles_tree_and_deleted_edges_differently() {
        let dot = grid(2, 2).to_dot();
        assert!(dot.contains("1 -- 2;"));
        assert!(dot.contains("1 -- 4 [style=dashed];"));
    }

    #[test]
    fn json_round_trip() {
        let g = grid(3, 2);
        let json = g.to_json().unwrap();
        let back: AmbientComplex = serde_json::from_str(&json).unwrap();
        assert_eq!(back.spec, g.spec);
        assert_eq!(back.deleted_edges, g.deleted_edges);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(GridSpec::new(1, 5).is_err());
        assert!(GridSpec::new(5, 1).is_err());
        assert!(GridSpec::new(0, 0).is_err());
    }

    proptest! {
        #[test]
        fn coordinates_round_trip(p in 2usize..9, q in 2usize..9, col in 1usize..9, row in 1usize..9) {
            prop_assume!(col <= p && row <= q);
            let spec = GridSpec::new(p, q).unwrap();
            let v = spec.vertex_at(col, row).unwrap();
            prop_assert!(v >= 1 && v <= p * q);
            prop_assert_eq!(spec.col_row(v).unwrap(), (col, row));
        }

        #[test]
        fn vertical_partner_is_the_vertex_directly_above(p in 2usize..9, q in 2usize..9, i in 1usize..65) {
            prop_assume!(i <= p * (q - 1));
            let spec = GridSpec::new(p, q).unwrap();
            let j = spec.vertical_partner(i).unwrap();
            let (ci, ri) = spec.col_row(i).unwrap();
            prop_assert_eq!(spec.col_row(j).unwrap(), (ci, ri + 1));
        }

        #[test]
        fn edge_counts_match_the_grid_formulas(p in 2usize..8, q in 2usize..8) {
            let g = grid(p, q);
            let horizontal = q * (p - 1);
            let vertical = p * (q - 1);
            prop_assert_eq!(g.tree_edges.len() + g.deleted_edges.len(), horizontal + vertical);
            prop_assert_eq!(g.tree_edges.len(), p * q - 1);
            prop_assert_eq!(g.squares.len(), (p - 1) * (q - 1));
        }
    }
}
