//! Fundamental-group presentations read off the gradient field.
//!
//! The critical cells of a classified complex carry a presentation of the
//! fundamental group: critical 1-cells are the generators, and each
//! critical 2-cell contributes the relator obtained by rewriting its
//! boundary word until only critical letters remain ([`reduce_edge_word`]).
//! The rewriting deletes collapsible letters and replaces redundant ones
//! through the boundary cycle of their paired 2-cell; the gradient field's
//! acyclicity makes this terminate with a strategy-independent result.
//!
//! Every critical 1-cell is a *compacted* cell: one vertical edge
//! `[i, j]` plus runs of vertices packed against the walls below `i`,
//! above `i`, and above `j`. The triple of run lengths names the
//! generator: [`EpsilonGen`] `eps(i; r,s,t)`.
//!
//! For critical 2-cells the reduced relator also has a closed form
//! ([`closed_form_relator`]), found by case analysis on how the two
//! vertical edges sit relative to each other (nested, interleaved,
//! disjoint) or on the single square; the engine output and the closed
//! form agree up to the canonical form of cyclic words.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{CellId, ConfigCell};
use crate::error::{Error, Result};
use crate::grid::{AmbientCell, AmbientComplex};
use crate::morse::{CellClass, ClassifiedComplex};
use crate::words::{canonical_relator, Presentation, Word};

/// Default step budget for word rewriting.
pub const DEFAULT_MAX_STEPS: usize = 1_000_000;

/// Which non-critical letter the rewriter eliminates next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Always the leftmost non-critical letter.
    Leftmost,
    /// Always the rightmost non-critical letter.
    Rightmost,
    /// A uniformly random non-critical letter from a seeded generator.
    Seeded(u64),
}

/// A generator of the presentation: the critical 1-cell with vertical
/// edge `[i, vp(i)]`, `r` vertices packed on `1..=r`, `s` vertices on
/// `i+1..=i+s`, and `t` vertices on `j+1..=j+t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpsilonGen {
    /// Lower endpoint of the vertical edge (a deleted-edge key).
    pub i: usize,
    /// Vertices packed below `i`.
    pub r: usize,
    /// Vertices packed directly above `i`.
    pub s: usize,
    /// Vertices packed directly above `j = vp(i)`.
    pub t: usize,
}

impl EpsilonGen {
    /// Validates the parameter ranges against the grid: `[i, vp(i)]` must
    /// be a vertical non-tree edge, `r < i`, `s < vp(i) − i`, and
    /// `t ≤ pq − vp(i)`.
    pub fn new(ambient: &AmbientComplex, i: usize, r: usize, s: usize, t: usize) -> Result<EpsilonGen> {
        ambient.deleted_edge(i)?;
        let j = ambient.spec.vertical_partner(i)?;
        let pq = ambient.spec.vertex_count();
        if r >= i || s >= j - i || t > pq - j {
            return Err(Error::NotStandardForm {
                msg: format!(
                    "eps({i}; {r},{s},{t}) out of range: need r < {i}, s < {}, t ≤ {}",
                    j - i,
                    pq - j
                ),
            });
        }
        Ok(EpsilonGen { i, r, s, t })
    }

    /// Display label, e.g. `eps(3; 1,0,2)`.
    pub fn label(&self) -> String {
        format!("eps({}; {},{},{})", self.i, self.r, self.s, self.t)
    }

    /// Number of tokens of the underlying cell.
    pub fn tokens(&self) -> usize {
        1 + self.r + self.s + self.t
    }

    /// The critical 1-cell this generator names.
    pub fn to_cell(&self, ambient: &AmbientComplex) -> Result<ConfigCell> {
        let j = ambient.spec.vertical_partner(self.i)?;
        let mut ingredients = vec![ambient.deleted_edge(self.i)?];
        ingredients.extend((1..=self.r).map(AmbientCell::Vertex));
        ingredients.extend((self.i + 1..=self.i + self.s).map(AmbientCell::Vertex));
        ingredients.extend((j + 1..=j + self.t).map(AmbientCell::Vertex));
        ConfigCell::new(ingredients)
    }

    /// Reads the generator off a critical 1-cell in compacted form.
    pub fn from_cell(ambient: &AmbientComplex, cell: &ConfigCell) -> Result<EpsilonGen> {
        if cell.dim() != 1 {
            return Err(Error::WrongDimension { got: cell.dim(), expected: 1 });
        }
        let edge = cell
            .ingredients()
            .iter()
            .find_map(|c| match c {
                AmbientCell::Edge(_) => Some(*c),
                _ => None,
            })
            .expect("a 1-cell has exactly one edge ingredient");
        if !ambient.is_deleted_edge(&edge) {
            return Err(Error::NotStandardForm {
                msg: format!("edge ingredient {edge} is a tree edge"),
            });
        }
        let (i, j) = edge.endpoints().expect("edge has endpoints");
        let vertices: Vec<usize> = cell
            .ingredients()
            .iter()
            .filter_map(|c| match c {
                AmbientCell::Vertex(v) => Some(*v),
                _ => None,
            })
            .collect();
        let r = vertices.iter().filter(|&&v| v < i).count();
        let s = vertices.iter().filter(|&&v| i < v && v < j).count();
        let t = vertices.iter().filter(|&&v| v > j).count();
        let gen = EpsilonGen::new(ambient, i, r, s, t)?;
        let expected = gen.to_cell(ambient)?;
        if &expected != cell {
            return Err(Error::NotStandardForm {
                msg: format!("cell {cell} is not packed against the walls"),
            });
        }
        Ok(gen)
    }
}

/// Deletes adjacent mutually-inverse letters until none remain.
fn free_reduce_edge_word(letters: &mut Vec<(CellId, i8)>) {
    let mut stack: Vec<(CellId, i8)> = Vec::with_capacity(letters.len());
    for &(c, s) in letters.iter() {
        if let Some(&(tc, ts)) = stack.last() {
            if tc == c && ts == -s {
                stack.pop();
                continue;
            }
        }
        stack.push((c, s));
    }
    *letters = stack;
}

/// The boundary cycle of the 2-cell paired with a redundant 1-cell,
/// rotated so the redundant cell leads with sign `+1`; returns the
/// remaining three letters `w`, so that the cycle relation reads
/// `c = w⁻¹`.
fn coherent_remainder(cx: &ClassifiedComplex, c: CellId, partner: CellId) -> Result<Vec<(CellId, i8)>> {
    let two_cell = cx.complex.cell(partner).clone();
    let mut cycle = cx.complex.boundary_cycle(&two_cell)?;
    let pos = cycle
        .iter()
        .position(|&(f, _)| f == c)
        .expect("a redundant cell is a face of its partner");
    if cycle[pos].1 < 0 {
        cycle.reverse();
        for l in cycle.iter_mut() {
            l.1 = -l.1;
        }
    }
    let pos = cycle.iter().position(|&(f, s)| f == c && s > 0).expect("present positively");
    cycle.rotate_left(pos);
    Ok(cycle[1..].to_vec())
}

/// Rewrites a word of 1-cell letters until every letter is critical.
///
/// One step removes a collapsible letter, or replaces a redundant letter
/// `c^±` through the boundary relation `c · w = 1` of its paired 2-cell
/// (so `c ↦ w⁻¹` and `c⁻¹ ↦ w`). The strategy picks which non-critical
/// letter to eliminate; the final word does not depend on it.
pub fn reduce_edge_word(
    cx: &ClassifiedComplex,
    word: &[(CellId, i8)],
    strategy: Strategy,
    max_steps: usize,
) -> Result<Vec<(CellId, i8)>> {
    for &(c, s) in word {
        if c.dim != 1 {
            return Err(Error::WrongDimension { got: c.dim, expected: 1 });
        }
        assert!(s == 1 || s == -1, "letter signs must be ±1");
    }
    let mut letters: Vec<(CellId, i8)> = word.to_vec();
    let mut rng = match strategy {
        Strategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut steps = 0usize;
    loop {
        free_reduce_edge_word(&mut letters);
        let pending: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(_, (c, _))| !cx.is_critical(*c))
            .map(|(k, _)| k)
            .collect();
        let Some(&pick) = (match strategy {
            Strategy::Leftmost => pending.first(),
            Strategy::Rightmost => pending.last(),
            Strategy::Seeded(_) => {
                if pending.is_empty() {
                    None
                } else {
                    let rng = rng.as_mut().expect("seeded rng present");
                    Some(&pending[rng.gen_range(0..pending.len())])
                }
            }
        }) else {
            return Ok(letters);
        };
        steps += 1;
        if steps > max_steps {
            return Err(Error::MaxStepsExceeded { max_steps });
        }
        let (c, sign) = letters[pick];
        match cx.class(c) {
            CellClass::Critical => unreachable!("critical letters are never picked"),
            CellClass::Collapsible { .. } => {
                letters.remove(pick);
            }
            CellClass::Redundant { partner } => {
                let remainder = coherent_remainder(cx, c, *partner)?;
                let replacement: Vec<(CellId, i8)> = if sign > 0 {
                    remainder.iter().rev().map(|&(f, s)| (f, -s)).collect()
                } else {
                    remainder
                };
                letters.splice(pick..=pick, replacement);
            }
        }
    }
}

/// A presentation together with its geometric bookkeeping.
#[derive(Debug, Clone)]
pub struct PresentationBuild {
    /// The presentation: generator `k+1` is `generators[k]`, relators are
    /// canonical and nonempty.
    pub presentation: Presentation,
    /// Generators sorted by `(i, r, s, t)`.
    pub generators: Vec<EpsilonGen>,
    /// The critical 1-cells, parallel to `generators`.
    pub generator_cells: Vec<ConfigCell>,
    /// One entry per critical 2-cell: the cell and its canonical relator
    /// (possibly empty).
    pub relators_by_cell: Vec<(ConfigCell, Word)>,
    index_by_cell: HashMap<CellId, usize>,
}

impl PresentationBuild {
    /// Generator index (0-based) of a critical 1-cell.
    pub fn generator_index(&self, id: CellId) -> Option<usize> {
        self.index_by_cell.get(&id).copied()
    }

    /// Converts a reduced edge word (critical letters only) to a word
    /// over the generators.
    pub fn to_generator_word(&self, reduced: &[(CellId, i8)]) -> Result<Word> {
        let mut letters = Vec::with_capacity(reduced.len());
        for &(c, s) in reduced {
            let k = self.generator_index(c).ok_or_else(|| Error::CellNotInComplex {
                msg: format!("letter {c:?} is not a critical 1-cell"),
            })?;
            letters.push((k as i32 + 1) * s as i32);
        }
        Ok(Word::from_letters(letters))
    }
}

/// Reads the fundamental-group presentation off a classified complex.
///
/// Generators are the critical 1-cells (as [`EpsilonGen`]s, sorted by
/// parameter); each critical 2-cell contributes the canonical form of its
/// reduced boundary word, with empty relators recorded per cell but
/// dropped from the presentation.
pub fn presentation(cx: &ClassifiedComplex) -> Result<PresentationBuild> {
    let ambient = &cx.complex.ambient;
    let mut gens: Vec<(EpsilonGen, ConfigCell, CellId)> = Vec::new();
    for &id in cx.critical(1) {
        let cell = cx.complex.cell(id).clone();
        let gen = EpsilonGen::from_cell(ambient, &cell)?;
        gens.push((gen, cell, id));
    }
    gens.sort_by_key(|(g, _, _)| *g);
    let index_by_cell: HashMap<CellId, usize> =
        gens.iter().enumerate().map(|(k, (_, _, id))| (*id, k)).collect();
    let labels: Vec<String> = gens.iter().map(|(g, _, _)| g.label()).collect();

    let mut relators_by_cell = Vec::new();
    let mut relators = Vec::new();
    for &id in cx.critical(2) {
        let cell = cx.complex.cell(id).clone();
        let cycle = cx.complex.boundary_cycle(&cell)?;
        let reduced = reduce_edge_word(cx, &cycle, Strategy::Leftmost, DEFAULT_MAX_STEPS)?;
        let mut letters = Vec::with_capacity(reduced.len());
        for &(c, s) in &reduced {
            let k = index_by_cell[&c];
            letters.push((k as i32 + 1) * s as i32);
        }
        let relator = canonical_relator(&Word::from_letters(letters));
        if !relator.is_empty() {
            relators.push(relator.clone());
        }
        relators_by_cell.push((cell, relator));
    }

    Ok(PresentationBuild {
        presentation: Presentation::new(labels, relators)?,
        generators: gens.iter().map(|(g, _, _)| *g).collect(),
        generator_cells: gens.into_iter().map(|(_, c, _)| c).collect(),
        relators_by_cell,
        index_by_cell,
    })
}

/// Region counts of the vertex ingredients of a cell relative to sorted
/// cut points: `counts[k]` is the number of vertices strictly between
/// `cuts[k−1]` and `cuts[k]` (with `counts[0]` below `cuts[0]` and the
/// last entry above the last cut).
fn region_counts(cell: &ConfigCell, cuts: &[usize]) -> Vec<usize> {
    let mut counts = vec![0usize; cuts.len() + 1];
    for ing in cell.ingredients() {
        if let AmbientCell::Vertex(v) = ing {
            let k = cuts.iter().filter(|&&c| c < *v).count();
            debug_assert!(!cuts.contains(v), "vertices are disjoint from the edges");
            counts[k] += 1;
        }
    }
    counts
}

/// The closed-form relator of a critical 2-cell, by case analysis.
///
/// For two vertical edges `[i, j]` and `[i′, j′]` with `i < i′` the cases
/// are **nested** (`j′ < j`), **interleaved** (`i′ < j < j′`), and
/// **disjoint** (`j < i′`, a plain commutator); a **square** cell yields
/// either a two-letter relator identifying neighbouring generators or —
/// when its upper edge is a tree edge — a single-letter relator.
pub fn closed_form_relator(
    ambient: &AmbientComplex,
    cell: &ConfigCell,
) -> Result<Vec<(EpsilonGen, i8)>> {
    if cell.dim() != 2 {
        return Err(Error::WrongDimension { got: cell.dim(), expected: 2 });
    }
    let p = ambient.spec.p;
    let eps = |i, r, s, t| EpsilonGen::new(ambient, i, r, s, t);

    if let Some(AmbientCell::Square(corners)) =
        cell.ingredients().iter().find(|c| matches!(c, AmbientCell::Square(_)))
    {
        let [i, i1, j1, j] = *corners;
        debug_assert_eq!(i1, i + 1);
        debug_assert_eq!(j, ambient.spec.vertical_partner(i)?);
        let counts = region_counts(cell, &[i, i1, j1, j]);
        debug_assert_eq!(counts[1] + counts[3], 0, "inter-corner gaps are empty");
        let (r, s, t) = (counts[0], counts[2], counts[4]);
        return if (i + 1) % p != 0 {
            Ok(vec![(eps(i, r, s, t)?, 1), (eps(i + 1, r, s, t)?, -1)])
        } else {
            Ok(vec![(eps(i, r, s, t)?, 1)])
        };
    }

    let edges: Vec<(usize, usize)> = cell
        .ingredients()
        .iter()
        .filter_map(AmbientCell::endpoints)
        .collect();
    let [(i, j), (i2, j2)] = edges[..] else {
        return Err(Error::WrongDimension { got: cell.dim(), expected: 2 });
    };
    for &(a, b) in &[(i, j), (i2, j2)] {
        if !ambient.is_deleted_edge(&AmbientCell::edge(a, b)) {
            return Err(Error::NotStandardForm {
                msg: format!("edge [{a},{b}] of a critical 2-cell must be vertical"),
            });
        }
    }
    debug_assert!(i < i2, "ingredients are sorted by smallest vertex");

    if j2 < j {
        // Nested: i < i′ < j′ < j.
        let c = region_counts(cell, &[i, i2, j2, j]);
        let (r, s, t, u, v) = (c[0], c[1], c[2], c[3], c[4]);
        let a = eps(i, r, s + t + u + 1, v)?;
        Ok(vec![
            (a, 1),
            (eps(i2, r + s, t, u + v + 1)?, 1),
            (a, -1),
            (eps(i2, r + s + 1, t, u + v)?, -1),
        ])
    } else if i2 < j {
        // Interleaved: i < i′ < j < j′.
        let c = region_counts(cell, &[i, i2, j, j2]);
        let (r, s, t, u, v) = (c[0], c[1], c[2], c[3], c[4]);
        Ok(vec![
            (eps(i, r, s + t + 1, u + v)?, 1),
            (eps(i2, r + s, t + u + 1, v)?, 1),
            (eps(i, r, s + t, u + v + 1)?, -1),
            (eps(i2, r + s + 1, t + u, v)?, -1),
        ])
    } else {
        // Disjoint: i < j < i′ < j′ — the generators commute.
        let c = region_counts(cell, &[i, j, i2, j2]);
        let (r, s, t, u, v) = (c[0], c[1], c[2], c[3], c[4]);
        let a = eps(i, r, s, t + u + v + 1)?;
        let b = eps(i2, r + s + t + 1, u, v)?;
        Ok(vec![(a, 1), (b, 1), (a, -1), (b, -1)])
    }
}

/// The two-row strip presentation on `n` strands: generators
/// `x_1, …, x_{n−1}` with `[x_i, x_j]` whenever `|i − j| ≥ 2`.
pub fn strip_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::RangeGuard { msg: format!("strip presentation needs n ≥ 2, got {n}") });
    }
    let gens: Vec<String> = (1..n).map(|i| format!("x{i}")).collect();
    let mut relators = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            let (a, b) = (i as i32, j as i32);
            relators.push(Word::from_letters([a, b, -a, -b]));
        }
    }
    Presentation::new(gens, relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ConfigComplex, SquarePolicy};
    use crate::grid::GridSpec;

    fn classified(p: usize, q: usize, n: usize, squares: SquarePolicy) -> ClassifiedComplex {
        let ambient = AmbientComplex::build(GridSpec::new(p, q).unwrap());
        let cx = ConfigComplex::enumerate(ambient, n, squares).unwrap();
        ClassifiedComplex::new(cx).unwrap()
    }

    #[test]
    fn epsilon_round_trip_and_label() {
        let ambient = AmbientComplex::build(GridSpec::new(4, 2).unwrap());
        let gen = EpsilonGen::new(&ambient, 3, 1, 0, 2).unwrap();
        assert_eq!(gen.label(), "eps(3; 1,0,2)");
        let cell = gen.to_cell(&ambient).unwrap();
        assert_eq!(EpsilonGen::from_cell(&ambient, &cell).unwrap(), gen);
        // Out-of-range parameters are rejected: r must stay below i.
        assert!(EpsilonGen::new(&ambient, 3, 3, 0, 0).is_err());
        // Tree edges never name a generator.
        assert!(EpsilonGen::new(&ambient, 4, 0, 0, 0).is_err());
    }

    #[test]
    fn every_critical_one_cell_is_in_standard_form() {
        for (p, q, n, policy) in [
            (2, 2, 2, SquarePolicy::Exclude),
            (3, 3, 4, SquarePolicy::Exclude),
            (3, 2, 4, SquarePolicy::Include),
            (4, 2, 5, SquarePolicy::Include),
        ] {
            let cx = classified(p, q, n, policy);
            for &id in cx.critical(1) {
                let cell = cx.complex.cell(id);
                let gen = EpsilonGen::from_cell(&cx.complex.ambient, cell).unwrap();
                assert_eq!(&gen.to_cell(&cx.complex.ambient).unwrap(), cell);
            }
        }
    }

    #[test]
    fn single_letters_reduce_to_their_compacted_form() {
        let cx = classified(3, 2, 3, SquarePolicy::Include);
        for (idx, cell) in cx.complex.cells(1).iter().enumerate() {
            let id = CellId { dim: 1, idx };
            let reduced =
                reduce_edge_word(&cx, &[(id, 1)], Strategy::Leftmost, DEFAULT_MAX_STEPS).unwrap();
            let edge = cell
                .ingredients()
                .iter()
                .find_map(AmbientCell::endpoints)
                .expect("one edge ingredient");
            if cx.complex.ambient.is_tree_edge(edge.0, edge.1) {
                assert!(reduced.is_empty(), "tree-edge cell {cell} must die");
            } else {
                // A vertical-edge cell reduces to the single generator
                // with the same edge and the same region counts.
                assert_eq!(reduced.len(), 1, "cell {cell}");
                assert_eq!(reduced[0].1, 1, "cell {cell}");
                let target = cx.complex.cell(reduced[0].0);
                let gen = EpsilonGen::from_cell(&cx.complex.ambient, target).unwrap();
                let vertices: Vec<usize> = cell
                    .ingredients()
                    .iter()
                    .filter_map(|c| match c {
                        AmbientCell::Vertex(v) => Some(*v),
                        _ => None,
                    })
                    .collect();
                let (i, j) = edge;
                assert_eq!(gen.i, i);
                assert_eq!(gen.r, vertices.iter().filter(|&&v| v < i).count());
                assert_eq!(gen.s, vertices.iter().filter(|&&v| i < v && v < j).count());
                assert_eq!(gen.t, vertices.iter().filter(|&&v| v > j).count());
            }
        }
    }

    #[test]
    fn two_token_square_grid_gives_one_free_generator() {
        let cx = classified(2, 2, 2, SquarePolicy::Exclude);
        let build = presentation(&cx).unwrap();
        assert_eq!(build.presentation.rank(), 1);
        assert_eq!(build.presentation.gens[0], "eps(1; 0,1,0)");
        assert!(build.presentation.relators.is_empty());
        assert!(build.relators_by_cell.iter().all(|(_, w)| w.is_empty()));
    }

    #[test]
    fn six_tokens_on_the_four_column_strip() {
        let cx = classified(4, 2, 6, SquarePolicy::Include);
        let build = presentation(&cx).unwrap();
        assert_eq!(build.presentation.rank(), 7);
        assert_eq!(build.presentation.relators.len(), 3);
    }

    #[test]
    fn full_grids_present_free_groups() {
        // With all but one vertex occupied nothing can move: the group is
        // free on the vertical edges.
        for (p, q) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let cx = classified(p, q, p * q - 1, SquarePolicy::Exclude);
            let build = presentation(&cx).unwrap();
            assert_eq!(build.presentation.rank(), (p - 1) * (q - 1), "p = {p}, q = {q}");
            assert!(build.presentation.relators.is_empty(), "p = {p}, q = {q}");
        }
    }

    #[test]
    fn reduction_strategies_agree_on_boundary_words() {
        let cx = classified(4, 2, 5, SquarePolicy::Include);
        for &id in cx.critical(2) {
            let cycle = cx.complex.boundary_cycle(cx.complex.cell(id)).unwrap();
            let left =
                reduce_edge_word(&cx, &cycle, Strategy::Leftmost, DEFAULT_MAX_STEPS).unwrap();
            let right =
                reduce_edge_word(&cx, &cycle, Strategy::Rightmost, DEFAULT_MAX_STEPS).unwrap();
            let seeded =
                reduce_edge_word(&cx, &cycle, Strategy::Seeded(7), DEFAULT_MAX_STEPS).unwrap();
            assert_eq!(left, right);
            assert_eq!(left, seeded);
        }
    }

    #[test]
    fn closed_forms_match_the_engine() {
        // Mixed-case sweep: squares both kinds on a strip, nested and
        // interleaved pairs on a 3×3 grid, disjoint pairs on a 3×4 grid.
        for (p, q, n, policy) in [
            (4, 2, 5, SquarePolicy::Include),
            (3, 3, 4, SquarePolicy::Exclude),
            (3, 3, 5, SquarePolicy::Exclude),
            (3, 4, 6, SquarePolicy::Exclude),
        ] {
            let cx = classified(p, q, n, policy);
            let build = presentation(&cx).unwrap();
            let gen_index: HashMap<EpsilonGen, usize> =
                build.generators.iter().enumerate().map(|(k, g)| (*g, k)).collect();
            assert!(!cx.critical(2).is_empty(), "want critical 2-cells at ({p},{q},{n})");
            for (k, &id) in cx.critical(2).iter().enumerate() {
                let cell = cx.complex.cell(id);
                let closed = closed_form_relator(&cx.complex.ambient, cell).unwrap();
                let letters: Vec<i32> = closed
                    .iter()
                    .map(|(g, s)| (gen_index[g] as i32 + 1) * *s as i32)
                    .collect();
                let closed_word = canonical_relator(&Word::from_letters(letters));
                let (engine_cell, engine_word) = &build.relators_by_cell[k];
                assert_eq!(engine_cell, cell);
                assert_eq!(
                    &closed_word, engine_word,
                    "closed form disagrees on {cell} in ({p},{q},{n})"
                );
            }
        }
    }

    #[test]
    fn disjoint_edges_commute_in_closed_form() {
        // On a 3-column, 4-row grid the edges [1,6] and [7,12] are
        // disjoint; with no extra vertices the relator is a commutator.
        let ambient = AmbientComplex::build(GridSpec::new(3, 4).unwrap());
        let cell = ConfigCell::new(vec![
            ambient.deleted_edge(1).unwrap(),
            ambient.deleted_edge(7).unwrap(),
        ])
        .unwrap();
        let closed = closed_form_relator(&ambient, &cell).unwrap();
        let a = EpsilonGen::new(&ambient, 1, 0, 0, 1).unwrap();
        let b = EpsilonGen::new(&ambient, 7, 1, 0, 0).unwrap();
        assert_eq!(closed, vec![(a, 1), (b, 1), (a, -1), (b, -1)]);
    }

    #[test]
    fn strip_presentation_relator_count() {
        let p = strip_presentation(4).unwrap();
        assert_eq!(p.gens, vec!["x1", "x2", "x3"]);
        assert_eq!(p.relators.len(), 1);
        assert_eq!(p.relators[0].letters(), [1, 3, -1, -3]);
        assert_eq!(strip_presentation(6).unwrap().relators.len(), 6);
    }
}
