//! Integral homology of configuration complexes.
//!
//! The boundary operator follows the product (Koszul) convention.  List the
//! positive-dimensional factors of a cell in ingredient order — each edge is
//! one interval factor, each square is its horizontal interval (key corner
//! towards key corner + 1) followed by its vertical interval (bottom row
//! towards top row).  The two faces of the `k`-th factor enter with sign
//! `(−1)^(sum of dims of the preceding factors)`, top endpoint minus bottom
//! endpoint; a face edge whose intrinsic (small-to-large) orientation
//! disagrees with the factor's sweep direction flips its coefficient, and
//! re-sorting the replaced ingredient into canonical position contributes
//! `(−1)^(d·D)` where `d` is the new ingredient's dimension and `D` the
//! total dimension of the ingredients it moves past.
//!
//! Smith normal forms are computed sparsely: unit pivots are eliminated
//! first (choosing sparse columns to limit fill-in), and whatever non-unit
//! core remains is finished densely with arbitrary-precision arithmetic, so
//! ranks and torsion coefficients are exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::ConfigComplex;
use crate::error::{Error, Result};
use crate::grid::AmbientCell;

/// A sparse integer matrix, row-major.
#[derive(Debug, Clone)]
pub struct SparseMat {
    /// Number of rows.
    pub rows: usize,
    /// Number of columns.
    pub cols: usize,
    data: Vec<BTreeMap<usize, BigInt>>,
}

impl SparseMat {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> SparseMat {
        SparseMat { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    /// Builds from dense rows.
    pub fn from_dense(dense: &[Vec<i64>]) -> SparseMat {
        let rows = dense.len();
        let cols = dense.first().map(Vec::len).unwrap_or(0);
        let mut m = SparseMat::zero(rows, cols);
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.data[r].insert(c, BigInt::from(v));
                }
            }
        }
        m
    }

    /// Adds `v` to entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            return;
        }
        let slot = self.data[r].entry(c).or_insert_with(BigInt::zero);
        *slot += v;
        if slot.is_zero() {
            self.data[r].remove(&c);
        }
    }

    /// One row as a sorted column → value map.
    pub fn row(&self, r: usize) -> &BTreeMap<usize, BigInt> {
        &self.data[r]
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    /// True when all entries are zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = SparseMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, a) in &self.data[r] {
                for (c, b) in &other.data[*k] {
                    let slot = acc.entry(*c).or_insert_with(BigInt::zero);
                    *slot += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[r] = acc;
        }
        out
    }

    /// First nonzero entry position, if any (for error reporting).
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        for (r, row) in self.data.iter().enumerate() {
            if let Some((&c, _)) = row.iter().next() {
                return Some((r, c));
            }
        }
        None
    }
}

/// Rank and invariant factors of an integer matrix.
#[derive(Debug, Clone)]
pub struct SmithData {
    /// Rank over the rationals.
    pub rank: usize,
    /// Invariant factors with absolute value > 1, in divisibility order.
    pub nontrivial_factors: Vec<BigInt>,
}

/// Smith normal form data of a sparse matrix.
///
/// Unit pivots (±1) are eliminated first — the pivot is taken in the
/// sparsest available column to limit fill-in — and the remaining non-unit
/// core is finished with a dense algorithm.
pub fn smith(mat: &SparseMat) -> SmithData {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = mat.data.clone();
    let mut row_alive: Vec<bool> = vec![true; mat.rows];
    let mut col_alive: Vec<bool> = vec![true; mat.cols];
    // col → rows with a nonzero entry there (kept exact under row updates).
    let mut col_rows: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); mat.cols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut rank = 0usize;

    // Phase 1: repeat passes of unit-pivot elimination until none remain.
    loop {
        // Visit live columns from sparsest to densest (snapshot order).
        let mut order: Vec<(usize, usize)> = (0..mat.cols)
            .filter(|&c| col_alive[c] && !col_rows[c].is_empty())
            .map(|c| (col_rows[c].len(), c))
            .collect();
        order.sort_unstable();
        let mut progress = false;
        for (_, c0) in order {
            if !col_alive[c0] {
                continue;
            }
            // Sparsest row among unit entries of this column.
            let pivot_row = col_rows[c0]
                .iter()
                .copied()
                .filter(|&r| rows[r].get(&c0).map(|v| v.abs().is_one()) == Some(true))
                .min_by_key(|&r| rows[r].len());
            let Some(r0) = pivot_row else { continue };
            progress = true;
            let pivot = rows[r0][&c0].clone(); // ±1
            let pivot_row_entries: Vec<(usize, BigInt)> =
                rows[r0].iter().map(|(c, v)| (*c, v.clone())).collect();
            let targets: Vec<usize> =
                col_rows[c0].iter().copied().filter(|&r| r != r0).collect();
            for r in targets {
                let factor = &rows[r][&c0] * &pivot; // a · p⁻¹ since p = ±1
                for (c, v) in &pivot_row_entries {
                    let entry = rows[r].entry(*c).or_insert_with(BigInt::zero);
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        rows[r].remove(c);
                        col_rows[*c].remove(&r);
                    } else {
                        col_rows[*c].insert(r);
                    }
                }
            }
            // Retire the pivot row and column: the column now has a single
            // ±1 entry, and clearing the pivot row is a column operation
            // that touches no other row.
            for (c, _) in &pivot_row_entries {
                col_rows[*c].remove(&r0);
            }
            rows[r0].clear();
            row_alive[r0] = false;
            col_alive[c0] = false;
            rank += 1;
        }
        if !progress {
            break;
        }
    }

    // Phase 2: dense Smith normal form of the non-unit core.
    let live_rows: Vec<usize> = (0..mat.rows).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..mat.cols).filter(|&c| col_alive[c] && !col_rows[c].is_empty()).collect();
    let mut factors = Vec::new();
    if !live_rows.is_empty() && !live_cols.is_empty() {
        let col_index: BTreeMap<usize, usize> =
            live_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut dense: Vec<Vec<BigInt>> =
            vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
        for (ri, &r) in live_rows.iter().enumerate() {
            for (c, v) in &rows[r] {
                dense[ri][col_index[c]] = v.clone();
            }
        }
        factors = dense_smith(&mut dense);
        rank += factors.len();
    }

    let nontrivial_factors = factors.into_iter().filter(|f| !f.abs().is_one()).collect();
    SmithData { rank, nontrivial_factors }
}

/// Classic dense Smith normal form; returns the nonzero diagonal entries
/// (absolute values, divisibility-ordered).
#[allow(clippy::needless_range_loop)] // pivot loops update m[r][c] through two moving indices
fn dense_smith(m: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows > 0 { m[0].len() } else { 0 };
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // Min-|v| nonzero pivot in the trailing submatrix.
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if !m[r][c].is_zero()
                    && best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs())
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        m.swap(t, br);
        for row in m.iter_mut() {
            row.swap(t, bc);
        }
        loop {
            // Clear column t by row operations.
            let mut dirty = false;
            for r in t + 1..rows {
                if m[r][t].is_zero() {
                    continue;
                }
                let q = &m[r][t] / &m[t][t];
                if !q.is_zero() {
                    for c in t..cols {
                        let sub = &q * &m[t][c];
                        m[r][c] -= sub;
                    }
                }
                if !m[r][t].is_zero() {
                    // Remainder smaller than the pivot: swap it up.
                    m.swap(t, r);
                    dirty = true;
                }
            }
            // Clear row t by column operations.
            for c in t + 1..cols {
                if m[t][c].is_zero() {
                    continue;
                }
                let q = &m[t][c] / &m[t][t];
                if !q.is_zero() {
                    for r in t..rows {
                        let sub = &q * &m[r][t];
                        m[r][c] -= sub;
                    }
                }
                if !m[t][c].is_zero() {
                    for r in t..rows {
                        let add = m[r][c].clone();
                        m[r][t] += add;
                    }
                    dirty = true;
                }
            }
            if !dirty && (t + 1..rows).all(|r| m[r][t].is_zero()) && (t + 1..cols).all(|c| m[t][c].is_zero()) {
                break;
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    // Divisibility fix-up: ensure d_i | d_{i+1} via gcd/lcm exchanges.
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if (&diag[j] % &diag[i]).is_zero() {
                continue;
            }
            let g = gcd(&diag[i], &diag[j]);
            let l = (&diag[i] * &diag[j]) / &g;
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// The factor decomposition of a cell: each edge one interval, each square
/// a horizontal then a vertical interval.
fn boundary_terms(cell_ingredients: &[AmbientCell]) -> Vec<(usize, AmbientCell, i64)> {
    let mut out = Vec::new();
    let mut prefix = 0usize; // total dimension of the preceding factors
    for (k, ing) in cell_ingredients.iter().enumerate() {
        let sigma: i64 = if prefix.is_multiple_of(2) { 1 } else { -1 };
        match *ing {
            AmbientCell::Vertex(_) => {}
            AmbientCell::Edge([a, b]) => {
                out.push((k, AmbientCell::Vertex(b), sigma));
                out.push((k, AmbientCell::Vertex(a), -sigma));
                prefix += 1;
            }
            AmbientCell::Square([i, i1, j1, j]) => {
                // Horizontal factor: vertical edge at the far column minus
                // vertical edge at the key column.
                out.push((k, AmbientCell::Edge([i1, j1]), sigma));
                out.push((k, AmbientCell::Edge([i, j]), -sigma));
                // Vertical factor (one more preceding dimension): the top
                // horizontal edge is swept against its intrinsic
                // orientation, flipping its sign.
                out.push((k, AmbientCell::Edge([j1, j]), sigma));
                out.push((k, AmbientCell::Edge([i, i1]), sigma));
                prefix += 2;
            }
        }
    }
    out
}

/// Koszul re-sorting sign: the replaced ingredient moves from slot `k` to
/// its sorted position; each positive-dimensional ingredient it passes
/// contributes `(−1)^(dim(new)·dim(passed))`.
fn resort_sign(ingredients: &[AmbientCell], k: usize, new_cell: &AmbientCell) -> i64 {
    if new_cell.dim() == 0 {
        return 1;
    }
    let new_min = new_cell.min_vertex();
    let old_min = ingredients[k].min_vertex();
    let (lo, hi) = if new_min < old_min { (new_min, old_min) } else { (old_min, new_min) };
    let crossed_dim: usize = ingredients
        .iter()
        .enumerate()
        .filter(|&(g, ing)| g != k && ing.min_vertex() > lo && ing.min_vertex() < hi)
        .map(|(_, ing)| ing.dim())
        .sum();
    if (new_cell.dim() * crossed_dim).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The boundary matrix `∂_d` (rows: `(d−1)`-cells, columns: `d`-cells).
pub fn boundary_matrix(cx: &ConfigComplex, d: usize) -> Result<SparseMat> {
    if d == 0 {
        return Ok(SparseMat::zero(0, cx.cells(0).len()));
    }
    let mut mat = SparseMat::zero(cx.cells(d - 1).len(), cx.cells(d).len());
    for (col, cell) in cx.cells(d).iter().enumerate() {
        for (k, new_ing, coeff) in boundary_terms(cell.ingredients()) {
            let face = cell.replace_ingredient(k, new_ing)?;
            let row = cx.id_of(&face)?.idx;
            let sign = coeff * resort_sign(cell.ingredients(), k, &new_ing);
            mat.add(row, col, BigInt::from(sign));
        }
    }
    Ok(mat)
}

/// Verifies `∂_{d−1} ∘ ∂_d = 0` for every dimension of the complex.
pub fn check_boundary_squares_to_zero(cx: &ConfigComplex) -> Result<()> {
    let top = cx.cell_counts().len();
    let mut prev = boundary_matrix(cx, 1)?;
    for d in 2..top {
        let next = boundary_matrix(cx, d)?;
        let product = prev.mul(&next);
        if let Some((row, col)) = product.first_nonzero() {
            return Err(Error::BoundaryNotSquareZero { dim: d, row, col });
        }
        prev = next;
    }
    Ok(())
}

/// Betti numbers and torsion coefficients of a complex.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BettiReport {
    /// `betti[d]` is the rank of `H_d`.
    pub betti: Vec<usize>,
    /// `torsion[d]` lists the nontrivial torsion coefficients of `H_d`
    /// (decimal strings, divisibility-ordered).
    pub torsion: Vec<Vec<String>>,
}

impl BettiReport {
    /// True when no dimension carries torsion.
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }
}

/// Integral homology via Smith normal forms of the boundary matrices.
/// Fails loudly if the boundary operator does not square to zero.
pub fn betti(cx: &ConfigComplex) -> Result<BettiReport> {
    check_boundary_squares_to_zero(cx)?;
    let dims = cx.cell_counts().len();
    let mut smiths: Vec<SmithData> = Vec::with_capacity(dims + 1);
    for d in 1..=dims {
        if d < dims {
            smiths.push(smith(&boundary_matrix(cx, d)?));
        } else {
            smiths.push(SmithData { rank: 0, nontrivial_factors: Vec::new() });
        }
    }
    let mut betti = Vec::with_capacity(dims);
    let mut torsion = Vec::with_capacity(dims);
    for d in 0..dims {
        let cells = cx.cells(d).len();
        let rank_in = if d == 0 { 0 } else { smiths[d - 1].rank };
        let rank_out = smiths[d].rank;
        betti.push(cells - rank_in - rank_out);
        torsion.push(smiths[d].nontrivial_factors.iter().map(BigInt::to_string).collect());
    }
    while betti.last() == Some(&0) && torsion.last().map(Vec::is_empty) == Some(true) {
        betti.pop();
        torsion.pop();
    }
    Ok(BettiReport { betti, torsion })
}

/// Smith data of a dense integer matrix (rows × cols), for small inputs
/// such as abelianized relator matrices.
pub fn smith_dense_i64(dense: &[Vec<i64>]) -> SmithData {
    smith(&SparseMat::from_dense(dense))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ConfigCell, ConfigComplex};

    #[test]
    fn smith_of_small_matrices() {
        // gcd of entries 2, |det| = 4, so diag(2, 2).
        let s = smith_dense_i64(&[vec![2, 4], vec![2, 2]]);
        assert_eq!(s.rank, 2);
        assert_eq!(s.nontrivial_factors, vec![BigInt::from(2), BigInt::from(2)]);

        let s = smith_dense_i64(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(s.rank, 2);
        assert!(s.nontrivial_factors.is_empty());

        // Zero matrix.
        let s = smith_dense_i64(&[vec![0, 0]]);
        assert_eq!(s.rank, 0);

        // Rank 1, factor 3: [[3, 6], [6, 12]].
        let s = smith_dense_i64(&[vec![3, 6], vec![6, 12]]);
        assert_eq!(s.rank, 1);
        assert_eq!(s.nontrivial_factors, vec![BigInt::from(3)]);
    }

    #[test]
    fn smith_invariant_factors_are_divisibility_ordered() {
        // diag(2, 3) ~ diag(1, 6).
        let s = smith_dense_i64(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(s.rank, 2);
        assert_eq!(s.nontrivial_factors, vec![BigInt::from(6)]);
    }

    #[test]
    fn lone_square_boundary_squares_to_zero() {
        let cx = ConfigComplex::cubical(2, 2, 1).unwrap();
        check_boundary_squares_to_zero(&cx).unwrap();
        let d2 = boundary_matrix(&cx, 2).unwrap();
        assert_eq!(d2.nnz(), 4);
    }

    #[test]
    fn boundary_squares_to_zero_on_mixed_models() {
        for (p, q, n) in [(2, 2, 2), (3, 2, 2), (3, 2, 4), (3, 3, 3), (4, 2, 4), (4, 3, 3)] {
            let cx = ConfigComplex::cubical(p, q, n).unwrap();
            check_boundary_squares_to_zero(&cx).unwrap();
        }
    }

    #[test]
    fn circle_homology_of_two_tokens_on_the_two_by_two_grid() {
        let cx = ConfigComplex::discrete(2, 2, 2).unwrap();
        let report = betti(&cx).unwrap();
        assert_eq!(report.betti, vec![1, 1]);
        assert!(report.is_torsion_free());
    }

    #[test]
    fn wedge_of_circles_for_four_tokens_on_three_by_two() {
        let cx = ConfigComplex::cubical(3, 2, 4).unwrap();
        let report = betti(&cx).unwrap();
        assert_eq!(report.betti, vec![1, 3]);
        assert!(report.is_torsion_free());
    }

    #[test]
    fn five_tokens_on_five_by_two() {
        let cx = ConfigComplex::cubical(5, 2, 5).unwrap();
        let report = betti(&cx).unwrap();
        assert_eq!(report.betti, vec![1, 4, 3]);
        assert!(report.is_torsion_free());
    }

    #[test]
    fn resort_sign_flips_when_a_square_face_crosses_an_edge() {
        // Square [1,2,7,8] in a 4×2 grid with an edge token on [3,4]:
        // replacing the square by its top edge [7,8] moves it past the edge.
        let ingredients = vec![AmbientCell::Square([1, 2, 7, 8]), AmbientCell::edge(3, 4)];
        let cell = ConfigCell::new(ingredients).unwrap();
        assert_eq!(resort_sign(cell.ingredients(), 0, &AmbientCell::edge(7, 8)), -1);
        assert_eq!(resort_sign(cell.ingredients(), 0, &AmbientCell::edge(1, 8)), 1);
        // A vertex face never picks up a sign.
        assert_eq!(resort_sign(cell.ingredients(), 1, &AmbientCell::Vertex(4)), 1);
    }
}
