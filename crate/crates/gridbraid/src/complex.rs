//! Configuration complexes: cells of `n` pairwise-disjoint tokens.
//!
//! A configuration cell is a set of pairwise-disjoint ambient cells
//! ("ingredients"), stored sorted by smallest vertex.  Tokens sitting on
//! vertices contribute dimension 0, tokens sliding along edges dimension 1,
//! and tokens sweeping a unit square dimension 2; the cell's dimension is the
//! sum.  Two models are built from the same ambient complex:
//!
//! * the **discrete** model, whose ingredients are vertices and edges only;
//! * the **cubical** model, which also admits square ingredients.
//!
//! The complex stores every cell grouped by dimension together with a
//! reverse index, exposes codimension-1 faces, the boundary cycle of a
//! 2-cell (the combinatorial input for fundamental-group relators), and the
//! vertex/edge duality that exchanges `r`-token and `(pq−r)`-token discrete
//! complexes.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{AmbientCell, AmbientComplex, GridSpec};

/// A configuration cell: pairwise-disjoint ambient cells sorted by their
/// smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConfigCell {
    ingredients: Vec<AmbientCell>,
}

impl ConfigCell {
    /// Validating constructor: sorts the ingredients and checks pairwise
    /// disjointness of their closures.
    pub fn new(mut ingredients: Vec<AmbientCell>) -> Result<ConfigCell> {
        ingredients.sort();
        let mut seen: u128 = 0;
        for ing in &ingredients {
            let mask = ing.vertex_mask();
            if seen & mask != 0 {
                return Err(Error::NotDisjoint {
                    msg: format!("ingredient {ing} overlaps an earlier one"),
                });
            }
            seen |= mask;
        }
        Ok(ConfigCell { ingredients })
    }

    /// Internal constructor for ingredient lists already sorted and disjoint.
    fn from_sorted_unchecked(ingredients: Vec<AmbientCell>) -> ConfigCell {
        debug_assert!(ingredients.windows(2).all(|w| w[0] < w[1]));
        ConfigCell { ingredients }
    }

    /// The ingredients, sorted by smallest vertex.
    pub fn ingredients(&self) -> &[AmbientCell] {
        &self.ingredients
    }

    /// Number of tokens (= number of ingredients).
    pub fn tokens(&self) -> usize {
        self.ingredients.len()
    }

    /// Cell dimension: total number of edge ingredients plus twice the
    /// number of square ingredients.
    pub fn dim(&self) -> usize {
        self.ingredients.iter().map(AmbientCell::dim).sum()
    }

    /// Bitmask of all vertices touched by the closure of the cell.
    pub fn vertex_mask(&self) -> u128 {
        self.ingredients.iter().fold(0u128, |m, c| m | c.vertex_mask())
    }

    /// True when some ingredient is a square.
    pub fn has_square(&self) -> bool {
        self.ingredients.iter().any(|c| matches!(c, AmbientCell::Square(_)))
    }

    /// The cell with ingredient `k` replaced, revalidated and resorted.
    pub fn replace_ingredient(&self, k: usize, with: AmbientCell) -> Result<ConfigCell> {
        let mut ing = self.ingredients.clone();
        ing[k] = with;
        ConfigCell::new(ing)
    }

    /// Dual cell in the discrete model: keep the edges, and place the
    /// remaining tokens on every vertex *not* touched by the cell.
    ///
    /// Defined only for square-free cells; sends an `r`-token cell of a grid
    /// with `m` vertices to an `(m−r)`-token cell.
    pub fn dual(&self, ambient: &AmbientComplex) -> Result<ConfigCell> {
        if self.has_square() {
            return Err(Error::DualityUnavailable { msg: format!("cell {self} has a square token") });
        }
        let touched = self.vertex_mask();
        let mut ingredients: Vec<AmbientCell> = self
            .ingredients
            .iter()
            .filter(|c| matches!(c, AmbientCell::Edge(_)))
            .copied()
            .collect();
        for &v in &ambient.vertices {
            if touched & (1u128 << (v - 1)) == 0 {
                ingredients.push(AmbientCell::Vertex(v));
            }
        }
        ConfigCell::new(ingredients)
    }
}

/// Identifier of a cell inside a [`ConfigComplex`]: dimension plus position
/// in that dimension's sorted cell list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellId {
    /// Cell dimension.
    pub dim: usize,
    /// Index into the complex's list of cells of that dimension.
    pub idx: usize,
}

/// Which codimension-1 face of an ingredient was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FaceKind {
    /// Edge `[a,b]` collapsed to its smaller endpoint `a`.
    EdgeStart,
    /// Edge `[a,b]` collapsed to its larger endpoint `b`.
    EdgeEnd,
    /// Square collapsed to its bottom horizontal edge `[i, i+1]`.
    SquareBottom,
    /// Square collapsed to its top horizontal edge `[j−1, j]`.
    SquareTop,
    /// Square collapsed to the vertical edge `[i, j]` through its key corner.
    SquareAtKey,
    /// Square collapsed to the vertical edge `[i+1, j−1]` opposite the key.
    SquareOpposite,
}

/// A codimension-1 face together with its provenance.
#[derive(Debug, Clone, Serialize)]
pub struct Face {
    /// The face cell itself.
    pub cell: ConfigCell,
    /// Index of the ingredient (in the parent's sorted list) that was
    /// collapsed.
    pub ingredient: usize,
    /// Which face of that ingredient was taken.
    pub kind: FaceKind,
}

/// Whether the cubical model (square tokens allowed) is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SquarePolicy {
    /// Vertices and edges only (the discrete model).
    Exclude,
    /// Vertices, edges, and squares (the cubical model).
    Include,
}

/// The configuration complex of `n` tokens on a grid.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigComplex {
    /// The underlying grid complex.
    pub ambient: AmbientComplex,
    /// Number of tokens.
    pub n: usize,
    /// Whether square tokens were admitted.
    pub squares: SquarePolicy,
    cells: Vec<Vec<ConfigCell>>,
    #[serde(skip)]
    index: HashMap<ConfigCell, CellId>,
}

impl ConfigComplex {
    /// Enumerates every configuration cell of `n` tokens.
    ///
    /// Supported token counts are `1 ≤ n < pq` (with `n = pq` every token
    /// is frozen on a vertex and the complex is a single point; larger `n`
    /// does not fit at all).
    pub fn enumerate(ambient: AmbientComplex, n: usize, squares: SquarePolicy) -> Result<ConfigComplex> {
        let m = ambient.spec.vertex_count();
        if n == 0 || n >= m {
            return Err(Error::UnsupportedTokenCount { n, vertices: m });
        }
        let catalog = ambient.all_cells(squares == SquarePolicy::Include);
        let masks: Vec<u128> = catalog.iter().map(AmbientCell::vertex_mask).collect();
        let mut cells: Vec<Vec<ConfigCell>> = Vec::new();
        let mut cur: Vec<AmbientCell> = Vec::with_capacity(n);

        fn rec(
            catalog: &[AmbientCell],
            masks: &[u128],
            start: usize,
            used: u128,
            slots: usize,
            cur: &mut Vec<AmbientCell>,
            out: &mut Vec<Vec<ConfigCell>>,
        ) {
            if slots == 0 {
                let cell = ConfigCell::from_sorted_unchecked(cur.clone());
                let d = cell.dim();
                if out.len() <= d {
                    out.resize_with(d + 1, Vec::new);
                }
                out[d].push(cell);
                return;
            }
            for k in start..catalog.len() {
                if catalog.len() - k < slots {
                    break;
                }
                if used & masks[k] != 0 {
                    continue;
                }
                cur.push(catalog[k]);
                rec(catalog, masks, k + 1, used | masks[k], slots - 1, cur, out);
                cur.pop();
            }
        }
        rec(&catalog, &masks, 0, 0, n, &mut cur, &mut cells);

        let mut index = HashMap::new();
        for (d, layer) in cells.iter().enumerate() {
            debug_assert!(layer.windows(2).all(|w| w[0] < w[1]), "dimension {d} must be sorted");
            for (idx, cell) in layer.iter().enumerate() {
                index.insert(cell.clone(), CellId { dim: d, idx });
            }
        }
        Ok(ConfigComplex { ambient, n, squares, cells, index })
    }

    /// Convenience: the discrete model on a fresh `p × q` grid.
    pub fn discrete(p: usize, q: usize, n: usize) -> Result<ConfigComplex> {
        let ambient = AmbientComplex::build(GridSpec::new(p, q)?);
        ConfigComplex::enumerate(ambient, n, SquarePolicy::Exclude)
    }

    /// Convenience: the cubical model on a fresh `p × q` grid.
    pub fn cubical(p: usize, q: usize, n: usize) -> Result<ConfigComplex> {
        let ambient = AmbientComplex::build(GridSpec::new(p, q)?);
        ConfigComplex::enumerate(ambient, n, SquarePolicy::Include)
    }

    /// Largest dimension that actually carries cells, or `None` when empty.
    pub fn top_dim(&self) -> Option<usize> {
        (!self.cells.is_empty()).then(|| self.cells.len() - 1)
    }

    /// Number of cells in each dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// All cells of one dimension, sorted.
    pub fn cells(&self, dim: usize) -> &[ConfigCell] {
        self.cells.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Cell lookup by id.
    pub fn cell(&self, id: CellId) -> &ConfigCell {
        &self.cells[id.dim][id.idx]
    }

    /// Reverse lookup of a cell's id.
    pub fn id_of(&self, cell: &ConfigCell) -> Result<CellId> {
        self.index
            .get(cell)
            .copied()
            .ok_or_else(|| Error::CellNotInComplex { msg: cell.to_string() })
    }

    /// Alternating sum of cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, layer)| {
                let c = layer.len() as i64;
                if d % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    /// All codimension-1 faces of a cell, with the collapsed ingredient and
    /// the face kind.  Edges contribute two faces, squares four.
    pub fn codim1_faces(&self, cell: &ConfigCell) -> Result<Vec<Face>> {
        let mut out = Vec::new();
        for (k, ing) in cell.ingredients().iter().enumerate() {
            match *ing {
                AmbientCell::Vertex(_) => {}
                AmbientCell::Edge([a, b]) => {
                    out.push(Face {
                        cell: cell.replace_ingredient(k, AmbientCell::Vertex(a))?,
                        ingredient: k,
                        kind: FaceKind::EdgeStart,
                    });
                    out.push(Face {
                        cell: cell.replace_ingredient(k, AmbientCell::Vertex(b))?,
                        ingredient: k,
                        kind: FaceKind::EdgeEnd,
                    });
                }
                AmbientCell::Square([i, i1, j1, j]) => {
                    let sides = [
                        (AmbientCell::Edge([i, i1]), FaceKind::SquareBottom),
                        (AmbientCell::Edge([j1, j]), FaceKind::SquareTop),
                        (AmbientCell::Edge([i, j]), FaceKind::SquareAtKey),
                        (AmbientCell::Edge([i1, j1]), FaceKind::SquareOpposite),
                    ];
                    for (edge, kind) in sides {
                        out.push(Face {
                            cell: cell.replace_ingredient(k, edge)?,
                            ingredient: k,
                            kind,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// The boundary of a 2-cell as a closed edge traversal.
    ///
    /// Returns the four codimension-1 faces in cyclic walk order; the sign
    /// is `+1` exactly when the walk traverses the face along its intrinsic
    /// (small-vertex to large-vertex) orientation.  The cycle is normalized
    /// to start at the lexicographically least face, traversed positively.
    pub fn boundary_cycle(&self, cell: &ConfigCell) -> Result<Vec<(CellId, i8)>> {
        if cell.dim() != 2 {
            return Err(Error::WrongDimension { got: cell.dim(), expected: 2 });
        }
        let square_pos = cell
            .ingredients()
            .iter()
            .position(|c| matches!(c, AmbientCell::Square(_)));
        let mut cycle: Vec<(ConfigCell, i8)> = match square_pos {
            Some(k) => {
                let AmbientCell::Square([i, i1, j1, j]) = cell.ingredients()[k] else {
                    unreachable!("position found above")
                };
                // Walk the square's corners i → i+1 → j−1 → j → i.
                vec![
                    (cell.replace_ingredient(k, AmbientCell::Edge([i, i1]))?, 1),
                    (cell.replace_ingredient(k, AmbientCell::Edge([i1, j1]))?, 1),
                    (cell.replace_ingredient(k, AmbientCell::Edge([j1, j]))?, 1),
                    (cell.replace_ingredient(k, AmbientCell::Edge([i, j]))?, -1),
                ]
            }
            None => {
                let edge_positions: Vec<usize> = cell
                    .ingredients()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| matches!(c, AmbientCell::Edge(_)))
                    .map(|(k, _)| k)
                    .collect();
                let [k1, k2] = edge_positions[..] else {
                    return Err(Error::WrongDimension { got: cell.dim(), expected: 2 });
                };
                let (a, _b) = cell.ingredients()[k1].endpoints().expect("edge");
                let (c, d) = cell.ingredients()[k2].endpoints().expect("edge");
                // Walk the product square's corners (a,c) → (b,c) → (b,d) →
                // (a,d) → (a,c); freezing one edge at an endpoint gives the
                // face being traversed.
                let f_first_low = cell.replace_ingredient(k2, AmbientCell::Vertex(c))?;
                let f_first_high = cell.replace_ingredient(k2, AmbientCell::Vertex(d))?;
                let f_second_low = cell.replace_ingredient(k1, AmbientCell::Vertex(a))?;
                let f_second_high = cell.replace_ingredient(k1, AmbientCell::Vertex(_b))?;
                vec![
                    (f_first_low, 1),
                    (f_second_high, 1),
                    (f_first_high, -1),
                    (f_second_low, -1),
                ]
            }
        };

        // Normalize: lexicographically least face first, traversed with +1.
        let least = |cyc: &[(ConfigCell, i8)]| {
            cyc.iter()
                .enumerate()
                .min_by(|(_, (c1, _)), (_, (c2, _))| c1.cmp(c2))
                .map(|(k, _)| k)
                .expect("cycle has four faces")
        };
        let mut k = least(&cycle);
        if cycle[k].1 < 0 {
            cycle.reverse();
            for entry in &mut cycle {
                entry.1 = -entry.1;
            }
            k = least(&cycle);
        }
        cycle.rotate_left(k);

        cycle
            .into_iter()
            .map(|(face, sign)| Ok((self.id_of(&face)?, sign)))
            .collect()
    }

    /// Pretty JSON dump of the complex (ambient data plus all cells).
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

impl std::fmt::Display for ConfigCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, ing) in self.ingredients.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{ing}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cell(ings: Vec<AmbientCell>) -> ConfigCell {
        ConfigCell::new(ings).expect("disjoint ingredients")
    }

    #[test]
    fn rejects_overlapping_ingredients() {
        assert!(ConfigCell::new(vec![AmbientCell::Vertex(2), AmbientCell::edge(2, 3)]).is_err());
        assert!(ConfigCell::new(vec![
            AmbientCell::Square([1, 2, 3, 4]),
            AmbientCell::Vertex(3)
        ])
        .is_err());
    }

    #[test]
    fn two_tokens_on_the_two_by_two_grid() {
        let cx = ConfigComplex::discrete(2, 2, 2).unwrap();
        assert_eq!(cx.cell_counts(), vec![6, 8, 2]);
        assert_eq!(cx.euler_characteristic(), 0);
    }

    #[test]
    fn cubical_four_tokens_on_three_by_two() {
        let cx = ConfigComplex::cubical(3, 2, 4).unwrap();
        assert_eq!(cx.euler_characteristic(), -2);
    }

    #[test]
    fn near_full_complexes_do_not_depend_on_the_square_policy() {
        let with = ConfigComplex::cubical(3, 3, 7).unwrap();
        let without = ConfigComplex::discrete(3, 3, 7).unwrap();
        assert_eq!(with.cell_counts(), without.cell_counts());
        for d in 0..with.cell_counts().len() {
            assert_eq!(with.cells(d), without.cells(d));
        }
    }

    #[test]
    fn square_faces_are_the_four_boundary_edges() {
        let cx = ConfigComplex::cubical(4, 3, 3).unwrap();
        let c = cell(vec![
            cx.ambient.square(2).unwrap(),
            AmbientCell::Vertex(5),
            AmbientCell::Vertex(10),
        ]);
        let faces = cx.codim1_faces(&c).unwrap();
        assert_eq!(faces.len(), 4);
        let face_edges: Vec<AmbientCell> = faces
            .iter()
            .map(|f| {
                *f.cell
                    .ingredients()
                    .iter()
                    .find(|ing| matches!(ing, AmbientCell::Edge(_)))
                    .expect("face has an edge")
            })
            .collect();
        for expected in [
            AmbientCell::edge(2, 3),
            AmbientCell::edge(6, 7),
            AmbientCell::edge(2, 7),
            AmbientCell::edge(3, 6),
        ] {
            assert!(face_edges.contains(&expected), "missing face edge {expected}");
        }
        for f in &faces {
            assert!(cx.id_of(&f.cell).is_ok(), "face {} must be in the complex", f.cell);
        }
    }

    #[test]
    fn edge_cell_faces_replace_the_edge_by_its_endpoints() {
        let cx = ConfigComplex::discrete(2, 2, 2).unwrap();
        let c = cell(vec![AmbientCell::edge(1, 2), AmbientCell::Vertex(4)]);
        let faces = cx.codim1_faces(&c).unwrap();
        assert_eq!(faces.len(), 2);
        assert_eq!(faces[0].kind, FaceKind::EdgeStart);
        assert_eq!(faces[0].cell, cell(vec![AmbientCell::Vertex(1), AmbientCell::Vertex(4)]));
        assert_eq!(faces[1].kind, FaceKind::EdgeEnd);
        assert_eq!(faces[1].cell, cell(vec![AmbientCell::Vertex(2), AmbientCell::Vertex(4)]));
    }

    #[test]
    fn duality_on_the_two_by_two_grid() {
        let cx = ConfigComplex::discrete(2, 2, 2).unwrap();
        let a = cell(vec![AmbientCell::Vertex(1), AmbientCell::Vertex(2)]);
        let da = a.dual(&cx.ambient).unwrap();
        assert_eq!(da, cell(vec![AmbientCell::Vertex(3), AmbientCell::Vertex(4)]));
        let b = cell(vec![AmbientCell::edge(1, 2), AmbientCell::Vertex(4)]);
        let db = b.dual(&cx.ambient).unwrap();
        assert_eq!(db, cell(vec![AmbientCell::edge(1, 2), AmbientCell::Vertex(3)]));
    }

    #[test]
    fn duality_rejects_square_tokens() {
        let cx = ConfigComplex::cubical(2, 2, 1).unwrap();
        let c = cell(vec![AmbientCell::Square([1, 2, 3, 4])]);
        assert!(c.dual(&cx.ambient).is_err());
    }

    #[test]
    fn boundary_cycle_of_a_lone_square() {
        let cx = ConfigComplex::cubical(2, 2, 1).unwrap();
        let c = cell(vec![AmbientCell::Square([1, 2, 3, 4])]);
        let cyc = cx.boundary_cycle(&c).unwrap();
        let walk: Vec<(ConfigCell, i8)> =
            cyc.iter().map(|&(id, s)| (cx.cell(id).clone(), s)).collect();
        assert_eq!(
            walk,
            vec![
                (cell(vec![AmbientCell::edge(1, 2)]), 1),
                (cell(vec![AmbientCell::edge(2, 3)]), 1),
                (cell(vec![AmbientCell::edge(3, 4)]), 1),
                (cell(vec![AmbientCell::edge(1, 4)]), -1),
            ]
        );
    }

    #[test]
    fn boundary_cycle_of_a_two_edge_cell_is_normalized() {
        let cx = ConfigComplex::discrete(2, 2, 2).unwrap();
        let c = cell(vec![AmbientCell::edge(1, 2), AmbientCell::edge(3, 4)]);
        let cyc = cx.boundary_cycle(&c).unwrap();
        let walk: Vec<(ConfigCell, i8)> =
            cyc.iter().map(|&(id, s)| (cx.cell(id).clone(), s)).collect();
        assert_eq!(
            walk,
            vec![
                (cell(vec![AmbientCell::Vertex(1), AmbientCell::edge(3, 4)]), 1),
                (cell(vec![AmbientCell::edge(1, 2), AmbientCell::Vertex(4)]), 1),
                (cell(vec![AmbientCell::Vertex(2), AmbientCell::edge(3, 4)]), -1),
                (cell(vec![AmbientCell::edge(1, 2), AmbientCell::Vertex(3)]), -1),
            ]
        );
    }

    #[test]
    fn boundary_cycles_start_positive_at_the_least_face() {
        let cx = ConfigComplex::cubical(3, 3, 3).unwrap();
        for c in cx.cells(2) {
            let cyc = cx.boundary_cycle(c).unwrap();
            assert_eq!(cyc.len(), 4);
            assert_eq!(cyc[0].1, 1);
            let faces: Vec<&ConfigCell> = cyc.iter().map(|&(id, _)| cx.cell(id)).collect();
            for k in 1..4 {
                assert!(faces[0] < faces[k], "first face must be lexicographically least");
            }
        }
    }

    #[test]
    fn token_count_bounds_are_enforced() {
        assert!(ConfigComplex::discrete(2, 2, 0).is_err());
        assert!(ConfigComplex::discrete(2, 2, 4).is_err());
        assert!(ConfigComplex::discrete(2, 2, 3).is_ok());
        assert!(ConfigComplex::discrete(2, 2, 1).is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn faces_of_enumerated_cells_are_enumerated(p in 2usize..4, q in 2usize..4, n in 1usize..5) {
            prop_assume!(n < p * q);
            let cx = ConfigComplex::cubical(p, q, n).unwrap();
            for d in 1..cx.cell_counts().len() {
                for c in cx.cells(d) {
                    for f in cx.codim1_faces(c).unwrap() {
                        prop_assert!(cx.id_of(&f.cell).is_ok());
                        prop_assert_eq!(f.cell.dim() + 1, c.dim());
                    }
                }
            }
        }

        #[test]
        fn duality_is_a_face_commuting_involution(p in 2usize..4, q in 2usize..4, n in 1usize..6) {
            prop_assume!(n < p * q);
            let m = p * q;
            let cx = ConfigComplex::discrete(p, q, n).unwrap();
            let dual_cx = ConfigComplex::discrete(p, q, m - n).unwrap();
            prop_assert_eq!(cx.cell_counts(), dual_cx.cell_counts());
            for d in 0..cx.cell_counts().len() {
                for c in cx.cells(d) {
                    let dc = c.dual(&cx.ambient).unwrap();
                    prop_assert!(dual_cx.id_of(&dc).is_ok());
                    prop_assert_eq!(&dc.dual(&cx.ambient).unwrap(), c);
                    // Face sets commute with duality.
                    let mut lhs: Vec<ConfigCell> = cx
                        .codim1_faces(c)
                        .unwrap()
                        .into_iter()
                        .map(|f| f.cell.dual(&cx.ambient).unwrap())
                        .collect();
                    let mut rhs: Vec<ConfigCell> = dual_cx
                        .codim1_faces(&dc)
                        .unwrap()
                        .into_iter()
                        .map(|f| f.cell)
                        .collect();
                    lhs.sort();
                    rhs.sort();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
