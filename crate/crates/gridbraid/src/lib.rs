//! Discrete configuration spaces of grid graphs and their fundamental groups.
//!
//! This library builds the cube complexes of `n` unordered, pairwise-disjoint
//! tokens on a `p × q` grid graph (tokens may occupy vertices, edges, or unit
//! squares), equips them with a discrete gradient field, and extracts finite
//! presentations of their fundamental groups.  For two-row grids the
//! presentations are pushed through an explicit rewriting pipeline into
//! right-angled Artin groups, and the topological invariants used to tell the
//! resulting spaces apart (Betti numbers, clique vectors, LS-category and
//! higher topological complexity of the associated graphs) are computed
//! exactly.
//!
//! Module map:
//! * [`grid`] — the ambient complex of a `p × q` grid with its snake-path
//!   spanning tree, deleted vertical edges, and unit squares.
//! * [`complex`] — configuration cells, enumeration of the token complexes,
//!   codimension-1 faces, boundary cycles, and the vertex/edge duality.
//! * [`morse`] — the discrete gradient field: cell classification,
//!   critical cells, and global field validation.
//! * [`words`] — free-group words, presentations, Tietze moves, right-angled
//!   Artin normal forms, and abelianization.
//! * [`present`] — fundamental-group presentations read off the field, the
//!   closed-form relator catalogue, and the interval strip model.
//! * [`q2`] — the two-row reduction: the unified generator family `g_j`, the
//!   relation tuple enumeration, normalized commutation data, and the
//!   comparison map into a right-angled Artin group.
//! * [`invariants`] — graphs (bipartite-like `B(k)`, opposite-interval
//!   graphs), cliques, LS-category, higher topological complexity.
//! * [`homology`] — signed boundary matrices, Smith normal form, Betti
//!   numbers and torsion.
//! * [`verify`] — self-contained verification suites shared by the CLI and
//!   the acceptance tests.

pub mod complex;
pub mod error;
pub mod grid;
pub mod homology;
pub mod invariants;
pub mod morse;
pub mod present;
pub mod q2;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
