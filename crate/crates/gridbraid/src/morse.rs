//! The discrete gradient field on a configuration complex.
//!
//! Every cell is classified as **critical**, **redundant** (paired with a
//! cell one dimension up), or **collapsible** (paired with a cell one
//! dimension down).  The classification of a cell `c` reads off its sorted
//! ingredient list:
//!
//! * any square ingredient makes `c` critical;
//! * a vertex token `v` is *blocked* when `v = 1` or when the tree edge
//!   `[v−1, v]` meets another ingredient of `c` (equivalently, `v−1` lies in
//!   the closure of another ingredient);
//! * the *moves* of `c` are its unblocked vertices (keyed by the vertex) and
//!   its tree-edge ingredients (keyed by the larger endpoint), merged in
//!   increasing key order.  No moves means critical; if the smallest key is
//!   an unblocked vertex `v`, the cell is redundant with partner obtained by
//!   replacing `v` with the edge `[v−1, v]`; if it is a tree edge `[i−1, i]`,
//!   the cell is collapsible with partner obtained by replacing the edge
//!   with the vertex `i`.
//!
//! [`ClassifiedComplex`] memoizes the classification of every cell and
//! [`ClassifiedComplex::validate`] checks the global properties that make
//! the classification an honest acyclic matching: the pairing is an
//! involution, there is exactly one critical 0-cell (all tokens packed at
//! the start of the snake path), the induced relation on redundant cells of
//! each dimension is acyclic, and the alternating sum of critical cell
//! counts equals the Euler characteristic.

use serde::Serialize;

use crate::complex::{CellId, ConfigCell, ConfigComplex};
use crate::error::{Error, Result};
use crate::grid::AmbientCell;

/// Classification of a single cell, with the paired cell spelled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CellClass {
    /// Not matched with any neighbour.
    Critical,
    /// Matched with the cell one dimension up obtained by replacing the
    /// smallest unblocked vertex `v` with the tree edge `[v−1, v]`.
    Redundant {
        /// The partner cell one dimension up.
        partner: CellId,
    },
    /// Matched with the cell one dimension down obtained by replacing the
    /// smallest-keyed tree edge `[i−1, i]` with the vertex `i`.
    Collapsible {
        /// The partner cell one dimension down.
        partner: CellId,
    },
}

/// One "move" available to a cell: an unblocked vertex or a tree edge.
enum Move {
    UnblockedVertex(usize),
    TreeEdge { b: usize },
}

impl Move {
    fn key(&self) -> usize {
        match self {
            Move::UnblockedVertex(v) => *v,
            Move::TreeEdge { b } => *b,
        }
    }
}

/// True when vertex token `v` of `cell` is blocked.
fn is_blocked(cell: &ConfigCell, v: usize) -> bool {
    v == 1 || cell.vertex_mask() & (1u128 << (v - 2)) != 0
}

/// Pure classification of one cell; the partner is returned as a cell.
pub fn classify_cell(cx: &ConfigComplex, cell: &ConfigCell) -> Result<(CellClassKind, Option<ConfigCell>)> {
    if cell.has_square() {
        return Ok((CellClassKind::Critical, None));
    }
    let mut moves: Vec<(usize, Move)> = Vec::new();
    for (k, ing) in cell.ingredients().iter().enumerate() {
        match *ing {
            AmbientCell::Vertex(v) => {
                if !is_blocked(cell, v) {
                    moves.push((k, Move::UnblockedVertex(v)));
                }
            }
            AmbientCell::Edge([a, b]) => {
                if cx.ambient.is_tree_edge(a, b) {
                    moves.push((k, Move::TreeEdge { b }));
                }
            }
            AmbientCell::Square(_) => unreachable!("square cells are critical"),
        }
    }
    for w in moves.windows(2) {
        assert_ne!(w[0].1.key(), w[1].1.key(), "move keys are distinct by construction");
    }
    let Some((k, mv)) = moves.into_iter().min_by_key(|(_, m)| m.key()) else {
        return Ok((CellClassKind::Critical, None));
    };
    match mv {
        Move::UnblockedVertex(v) => {
            let partner = cell.replace_ingredient(k, AmbientCell::Edge([v - 1, v]))?;
            Ok((CellClassKind::Redundant, Some(partner)))
        }
        Move::TreeEdge { b } => {
            let partner = cell.replace_ingredient(k, AmbientCell::Vertex(b))?;
            Ok((CellClassKind::Collapsible, Some(partner)))
        }
    }
}

/// Bare classification tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CellClassKind {
    /// See [`CellClass::Critical`].
    Critical,
    /// See [`CellClass::Redundant`].
    Redundant,
    /// See [`CellClass::Collapsible`].
    Collapsible,
}

/// A configuration complex with every cell's classification memoized.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifiedComplex {
    /// The underlying complex.
    pub complex: ConfigComplex,
    classes: Vec<Vec<CellClass>>,
    critical: Vec<Vec<CellId>>,
}

/// Aggregate facts established by [`ClassifiedComplex::validate`].
#[derive(Debug, Clone, Serialize)]
pub struct FieldReport {
    /// Number of critical cells in each dimension.
    pub critical_counts: Vec<usize>,
    /// Euler characteristic of the complex (matches the alternating sum of
    /// critical counts).
    pub euler: i64,
}

impl ClassifiedComplex {
    /// Classifies every cell of the complex.
    #[allow(clippy::needless_range_loop)] // `d` is a dimension, not a position in one slice
    pub fn new(complex: ConfigComplex) -> Result<ClassifiedComplex> {
        let dims = complex.cell_counts().len();
        let mut classes: Vec<Vec<CellClass>> = Vec::with_capacity(dims);
        let mut critical: Vec<Vec<CellId>> = vec![Vec::new(); dims];
        for d in 0..dims {
            let mut layer = Vec::with_capacity(complex.cells(d).len());
            for (idx, cell) in complex.cells(d).iter().enumerate() {
                let id = CellId { dim: d, idx };
                let class = match classify_cell(&complex, cell)? {
                    (CellClassKind::Critical, None) => {
                        critical[d].push(id);
                        CellClass::Critical
                    }
                    (CellClassKind::Redundant, Some(p)) => {
                        CellClass::Redundant { partner: complex.id_of(&p)? }
                    }
                    (CellClassKind::Collapsible, Some(p)) => {
                        CellClass::Collapsible { partner: complex.id_of(&p)? }
                    }
                    _ => unreachable!("classify_cell returns a partner iff non-critical"),
                };
                layer.push(class);
            }
            classes.push(layer);
        }
        Ok(ClassifiedComplex { complex, classes, critical })
    }

    /// Classification of a cell by id.
    pub fn class(&self, id: CellId) -> &CellClass {
        &self.classes[id.dim][id.idx]
    }

    /// True when the cell is critical.
    pub fn is_critical(&self, id: CellId) -> bool {
        matches!(self.class(id), CellClass::Critical)
    }

    /// Critical cells of one dimension, in cell order.
    pub fn critical(&self, dim: usize) -> &[CellId] {
        self.critical.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of critical cells per dimension.
    pub fn critical_counts(&self) -> Vec<usize> {
        self.critical.iter().map(Vec::len).collect()
    }

    /// Checks that the classification is a valid acyclic matching:
    /// the pairing is an involution between redundant and collapsible
    /// cells, there is exactly one critical 0-cell (tokens packed on
    /// `1..=n`), the descent relation on redundant cells of each dimension
    /// is acyclic, and the critical counts satisfy the Euler identity.
    pub fn validate(&self) -> Result<FieldReport> {
        self.check_involution()?;
        self.check_unique_critical_vertex()?;
        for d in 0..self.classes.len() {
            self.check_acyclic(d)?;
        }
        let euler = self.complex.euler_characteristic();
        let morse_euler: i64 = self
            .critical
            .iter()
            .enumerate()
            .map(|(d, ids)| if d % 2 == 0 { ids.len() as i64 } else { -(ids.len() as i64) })
            .sum();
        if euler != morse_euler {
            return Err(Error::FieldInvalid {
                msg: format!("critical alternating sum {morse_euler} ≠ Euler characteristic {euler}"),
            });
        }
        Ok(FieldReport { critical_counts: self.critical_counts(), euler })
    }

    fn check_involution(&self) -> Result<()> {
        for (d, layer) in self.classes.iter().enumerate() {
            for (idx, class) in layer.iter().enumerate() {
                let id = CellId { dim: d, idx };
                match class {
                    CellClass::Critical => {}
                    CellClass::Redundant { partner } => {
                        if partner.dim != d + 1 {
                            return Err(Error::FieldInvalid {
                                msg: format!("redundant cell {} has partner in dim {}", d, partner.dim),
                            });
                        }
                        match self.class(*partner) {
                            CellClass::Collapsible { partner: back } if *back == id => {}
                            other => {
                                return Err(Error::FieldInvalid {
                                    msg: format!(
                                        "partner of redundant {} is {:?}, not collapsible back to it",
                                        self.complex.cell(id),
                                        other
                                    ),
                                })
                            }
                        }
                    }
                    CellClass::Collapsible { partner } => {
                        if partner.dim + 1 != d {
                            return Err(Error::FieldInvalid {
                                msg: format!("collapsible cell in dim {} paired into dim {}", d, partner.dim),
                            });
                        }
                        match self.class(*partner) {
                            CellClass::Redundant { partner: back } if *back == id => {}
                            other => {
                                return Err(Error::FieldInvalid {
                                    msg: format!(
                                        "partner of collapsible {} is {:?}, not redundant back to it",
                                        self.complex.cell(id),
                                        other
                                    ),
                                })
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unique_critical_vertex(&self) -> Result<()> {
        let zero = self.critical(0);
        if zero.len() != 1 {
            return Err(Error::FieldInvalid {
                msg: format!("{} critical 0-cells, expected exactly 1", zero.len()),
            });
        }
        let base = self.complex.cell(zero[0]);
        let expected: Vec<AmbientCell> = (1..=self.complex.n).map(AmbientCell::Vertex).collect();
        if base.ingredients() != expected.as_slice() {
            return Err(Error::FieldInvalid {
                msg: format!("critical 0-cell is {base}, expected tokens on 1..={}", self.complex.n),
            });
        }
        Ok(())
    }

    /// Cycle check on the descent digraph of redundant `d`-cells:
    /// `r → r'` when `r' ≠ r` is redundant and a codimension-1 face of
    /// `partner(r)`.  Iterative three-colour DFS.
    fn check_acyclic(&self, d: usize) -> Result<()> {
        let layer = &self.classes[d];
        let succ = |idx: usize| -> Result<Vec<usize>> {
            let CellClass::Redundant { partner } = &layer[idx] else {
                return Ok(Vec::new());
            };
            let mut out = Vec::new();
            for face in self.complex.codim1_faces(self.complex.cell(*partner))? {
                let fid = self.complex.id_of(&face.cell)?;
                if fid.dim == d
                    && fid.idx != idx
                    && matches!(layer[fid.idx], CellClass::Redundant { .. })
                {
                    out.push(fid.idx);
                }
            }
            Ok(out)
        };

        #[derive(Clone, Copy, PartialEq)]
        enum Colour {
            White,
            Grey,
            Black,
        }
        let mut colour = vec![Colour::White; layer.len()];
        for root in 0..layer.len() {
            if colour[root] != Colour::White
                || !matches!(layer[root], CellClass::Redundant { .. })
            {
                continue;
            }
            // Stack holds (node, next-successor cursor, successor list).
            let mut stack: Vec<(usize, usize, Vec<usize>)> = vec![(root, 0, succ(root)?)];
            colour[root] = Colour::Grey;
            while let Some((node, cursor, successors)) = stack.last_mut() {
                if *cursor < successors.len() {
                    let next = successors[*cursor];
                    *cursor += 1;
                    match colour[next] {
                        Colour::Grey => {
                            return Err(Error::FieldInvalid {
                                msg: format!(
                                    "descent cycle through {} in dimension {d}",
                                    self.complex.cell(CellId { dim: d, idx: next })
                                ),
                            });
                        }
                        Colour::White => {
                            colour[next] = Colour::Grey;
                            let s = succ(next)?;
                            stack.push((next, 0, s));
                        }
                        Colour::Black => {}
                    }
                } else {
                    colour[*node] = Colour::Black;
                    stack.pop();
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SquarePolicy;
    use crate::grid::AmbientCell;

    fn cell(ings: Vec<AmbientCell>) -> ConfigCell {
        ConfigCell::new(ings).expect("disjoint ingredients")
    }

    fn classified(p: usize, q: usize, n: usize, squares: SquarePolicy) -> ClassifiedComplex {
        let cx = match squares {
            SquarePolicy::Include => ConfigComplex::cubical(p, q, n).unwrap(),
            SquarePolicy::Exclude => ConfigComplex::discrete(p, q, n).unwrap(),
        };
        ClassifiedComplex::new(cx).unwrap()
    }

    /// The full classification of all 16 cells of two tokens on the 2×2
    /// grid, worked out by hand.
    #[test]
    fn two_by_two_with_two_tokens_full_oracle() {
        let cc = classified(2, 2, 2, SquarePolicy::Exclude);
        let v = AmbientCell::Vertex;
        let e = AmbientCell::edge;

        let expect_critical = [cell(vec![v(1), v(2)]), cell(vec![e(1, 4), v(2)])];
        let expect_redundant = [
            (cell(vec![v(1), v(3)]), cell(vec![v(1), e(2, 3)])),
            (cell(vec![v(1), v(4)]), cell(vec![v(1), e(3, 4)])),
            (cell(vec![v(2), v(3)]), cell(vec![e(1, 2), v(3)])),
            (cell(vec![v(2), v(4)]), cell(vec![e(1, 2), v(4)])),
            (cell(vec![v(3), v(4)]), cell(vec![e(2, 3), v(4)])),
            (cell(vec![e(3, 4), v(2)]), cell(vec![e(1, 2), e(3, 4)])),
            (cell(vec![e(1, 4), v(3)]), cell(vec![e(1, 4), e(2, 3)])),
        ];
        let expect_collapsible = [
            (cell(vec![e(1, 2), v(3)]), cell(vec![v(2), v(3)])),
            (cell(vec![e(1, 2), v(4)]), cell(vec![v(2), v(4)])),
            (cell(vec![e(2, 3), v(1)]), cell(vec![v(1), v(3)])),
            (cell(vec![e(2, 3), v(4)]), cell(vec![v(3), v(4)])),
            (cell(vec![e(3, 4), v(1)]), cell(vec![v(1), v(4)])),
            (cell(vec![e(1, 2), e(3, 4)]), cell(vec![e(3, 4), v(2)])),
            (cell(vec![e(1, 4), e(2, 3)]), cell(vec![e(1, 4), v(3)])),
        ];

        for c in &expect_critical {
            let id = cc.complex.id_of(c).unwrap();
            assert_eq!(cc.class(id), &CellClass::Critical, "cell {c}");
        }
        for (c, partner) in &expect_redundant {
            let id = cc.complex.id_of(c).unwrap();
            let pid = cc.complex.id_of(partner).unwrap();
            assert_eq!(cc.class(id), &CellClass::Redundant { partner: pid }, "cell {c}");
        }
        for (c, partner) in &expect_collapsible {
            let id = cc.complex.id_of(c).unwrap();
            let pid = cc.complex.id_of(partner).unwrap();
            assert_eq!(cc.class(id), &CellClass::Collapsible { partner: pid }, "cell {c}");
        }
        assert_eq!(cc.critical_counts(), vec![1, 1, 0]);
        cc.validate().unwrap();
    }

    #[test]
    fn critical_cells_without_squares_carry_deleted_edges_and_blocked_vertices() {
        let cc = classified(3, 3, 4, SquarePolicy::Exclude);
        for d in 0..cc.complex.cell_counts().len() {
            for &id in cc.critical(d) {
                let c = cc.complex.cell(id);
                let mut deleted = 0;
                for ing in c.ingredients() {
                    match *ing {
                        AmbientCell::Vertex(v) => assert!(is_blocked(c, v), "vertex {v} of {c}"),
                        AmbientCell::Edge(_) => {
                            assert!(cc.complex.ambient.is_deleted_edge(ing), "tree edge in {c}");
                            deleted += 1;
                        }
                        AmbientCell::Square(_) => panic!("square in discrete model"),
                    }
                }
                assert_eq!(deleted, d, "critical {d}-cell {c}");
            }
        }
    }

    #[test]
    fn two_row_complexes_have_the_expected_number_of_critical_edges() {
        for p in 3..=5 {
            let cc = classified(p, 2, 2 * p - 2, SquarePolicy::Include);
            assert_eq!(cc.critical(1).len(), 3 * p - 5, "p = {p}");
        }
    }

    #[test]
    fn validation_passes_across_models_and_token_counts() {
        for (p, q, n) in [(2, 2, 2), (2, 2, 3), (3, 2, 2), (3, 2, 4), (3, 3, 4), (4, 2, 3)] {
            for squares in [SquarePolicy::Exclude, SquarePolicy::Include] {
                let ambient =
                    crate::grid::AmbientComplex::build(crate::grid::GridSpec::new(p, q).unwrap());
                let cx = ConfigComplex::enumerate(ambient, n, squares).unwrap();
                let cc = ClassifiedComplex::new(cx).unwrap();
                let report = cc.validate().unwrap();
                assert_eq!(report.euler, cc.complex.euler_characteristic());
            }
        }
    }

    #[test]
    fn square_cells_are_always_critical() {
        let cc = classified(3, 2, 3, SquarePolicy::Include);
        for d in 0..cc.complex.cell_counts().len() {
            for (idx, c) in cc.complex.cells(d).iter().enumerate() {
                if c.has_square() {
                    assert!(cc.is_critical(CellId { dim: d, idx }), "cell {c}");
                }
            }
        }
    }
}
