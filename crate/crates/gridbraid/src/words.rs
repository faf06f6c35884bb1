//! Words in free groups, finite presentations, and right-angled tooling.
//!
//! A [`Word`] is a sequence of nonzero signed letters: `+k` is the `k`-th
//! generator (1-based), `−k` its inverse. On top of words this module
//! provides:
//!
//! * free and cyclic reduction, and a canonical form for relators that is
//!   invariant under rotation and inversion;
//! * [`Presentation`]s with pretty-printing, abelianization, Tietze
//!   simplification with generator tracking, and change of generating set;
//! * right-angled normal forms: given a commutation graph, every word is
//!   shortened to a geodesic, which is empty exactly when the element is
//!   trivial — this decides the word problem and supports certified
//!   homomorphism checks ([`verify_hom`]) and recognizing commutation
//!   presentations ([`as_raag`]);
//! * [`triangular_inverse`], which inverts a generator map whose images
//!   are triangular (each image uses one new pivot letter), certifying
//!   surjectivity of the map.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::smith_dense_i64;
use crate::invariants::SimpleGraph;

/// A word in a free group: nonzero signed letters, `+k`/`−k` for the
/// `k`-th generator and its inverse.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Word(Vec<i32>);

impl Word {
    /// The empty word.
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    /// Builds a word from signed letters; zero letters are rejected.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Word {
        let letters: Vec<i32> = letters.into_iter().collect();
        assert!(letters.iter().all(|&l| l != 0), "letter 0 is not a generator");
        Word(letters)
    }

    /// The letters of the word.
    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The formal inverse (reverse and negate).
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    /// Concatenation (no reduction).
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Removes adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    /// Freely reduces, then strips matching first/last inverse pairs.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.free_reduce().0;
        while w.len() >= 2 && *w.first().expect("nonempty") == -*w.last().expect("nonempty") {
            w.pop();
            w.remove(0);
        }
        Word(w)
    }

    /// The generators (absolute letter values) occurring in the word.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0.iter().map(|l| l.unsigned_abs() as usize).collect()
    }

    /// Renders the word with generator names, e.g. `h3 h2 h1^-1`;
    /// the empty word renders as `1`.
    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&l| {
                let name = &names[(l.unsigned_abs() as usize) - 1];
                if l > 0 {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Order on letters: by generator, positive before negative.
fn letter_key(l: i32) -> (u32, bool) {
    (l.unsigned_abs(), l < 0)
}

/// Canonical form of a relator: cyclically reduce, then take the
/// lexicographically least rotation of the word or its inverse (letters
/// ordered by generator, positive before negative).
pub fn canonical_relator(word: &Word) -> Word {
    let reduced = word.cyclic_reduce();
    if reduced.is_empty() {
        return reduced;
    }
    let n = reduced.len();
    let mut best: Option<Vec<i32>> = None;
    for candidate in [reduced.clone(), reduced.inverse()] {
        for start in 0..n {
            let rotated: Vec<i32> =
                (0..n).map(|k| candidate.0[(start + k) % n]).collect();
            let better = match &best {
                None => true,
                Some(b) => {
                    let ka: Vec<_> = rotated.iter().map(|&l| letter_key(l)).collect();
                    let kb: Vec<_> = b.iter().map(|&l| letter_key(l)).collect();
                    ka < kb
                }
            };
            if better {
                best = Some(rotated);
            }
        }
    }
    Word(best.expect("nonempty"))
}

/// Parses a word like `g1 g3^-1 g2^2` against a list of generator names.
pub fn parse_word(src: &str, names: &[String]) -> Result<Word> {
    let mut letters = Vec::new();
    for token in src.split_whitespace() {
        if token == "1" {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((name, exp)) => {
                let exp: i64 = exp.parse().map_err(|_| Error::UnknownGenerator {
                    msg: format!("bad exponent in token {token:?}"),
                })?;
                (name, exp)
            }
            None => (token, 1),
        };
        let idx = names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownGenerator {
            msg: format!("no generator named {name:?}"),
        })?;
        let letter = (idx + 1) as i32;
        for _ in 0..exp.unsigned_abs() {
            letters.push(if exp >= 0 { letter } else { -letter });
        }
    }
    Ok(Word(letters))
}

/// A finite presentation: named generators and relator words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    /// Generator names; letter `±k` in a relator refers to `gens[k−1]`.
    pub gens: Vec<String>,
    /// Relator words.
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation, checking that relator letters are in range.
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> Result<Presentation> {
        let rank = gens.len() as u32;
        for r in &relators {
            for &l in r.letters() {
                if l.unsigned_abs() > rank || l == 0 {
                    return Err(Error::UnknownGenerator {
                        msg: format!("letter {l} out of range for {rank} generators"),
                    });
                }
            }
        }
        Ok(Presentation { gens, relators })
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// Sum of relator lengths.
    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.gens.join(", ");
        let relators = self
            .relators
            .iter()
            .map(|r| r.display(&self.gens))
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "⟨ {gens} | {relators} ⟩")
    }
}

/// Free rank and invariant factors of the abelianized group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    /// Rank of the free part.
    pub rank: usize,
    /// Nontrivial invariant factors (absolute values, as decimal strings).
    pub torsion: Vec<String>,
}

/// Abelianization via the Smith form of the exponent-sum matrix.
pub fn abelianization(pres: &Presentation) -> Abelianization {
    let rows = pres.rank();
    let cols = pres.relators.len();
    let mut m = vec![vec![0i64; cols]; rows];
    for (j, r) in pres.relators.iter().enumerate() {
        for &l in r.letters() {
            let i = (l.unsigned_abs() as usize) - 1;
            m[i][j] += l.signum() as i64;
        }
    }
    let smith = smith_dense_i64(&m);
    Abelianization {
        rank: rows - smith.rank,
        torsion: smith
            .nontrivial_factors
            .iter()
            .map(|f| {
                let mut f = f.clone();
                if f.sign() == num_bigint::Sign::Minus {
                    f = -f;
                }
                f.to_string()
            })
            .collect(),
    }
}

/// A map sending each source generator to a word over target generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenMap {
    /// Source generator names.
    pub from: Vec<String>,
    /// Target generator names.
    pub to: Vec<String>,
    /// `images[k]` is the image of source generator `k+1`.
    pub images: Vec<Word>,
}

impl GenMap {
    /// Builds a map, checking arity and letter ranges.
    pub fn new(from: Vec<String>, to: Vec<String>, images: Vec<Word>) -> Result<GenMap> {
        if images.len() != from.len() {
            return Err(Error::BadScript {
                msg: format!("{} images for {} generators", images.len(), from.len()),
            });
        }
        let rank = to.len() as u32;
        for w in &images {
            for &l in w.letters() {
                if l.unsigned_abs() > rank {
                    return Err(Error::UnknownGenerator {
                        msg: format!("image letter {l} out of range for {rank} targets"),
                    });
                }
            }
        }
        Ok(GenMap { from, to, images })
    }

    /// Applies the map to a word over the source generators (freely
    /// reducing the result).
    pub fn apply(&self, word: &Word) -> Word {
        let mut out = Vec::new();
        for &l in word.letters() {
            let img = &self.images[(l.unsigned_abs() as usize) - 1];
            if l > 0 {
                out.extend_from_slice(img.letters());
            } else {
                out.extend(img.inverse().letters().iter().copied());
            }
        }
        Word(out).free_reduce()
    }

    /// JSON rendering with images as readable words.
    pub fn to_json(&self) -> serde_json::Value {
        let images: serde_json::Map<String, serde_json::Value> = self
            .from
            .iter()
            .zip(&self.images)
            .map(|(name, w)| (name.clone(), serde_json::Value::String(w.display(&self.to))))
            .collect();
        serde_json::json!({ "from": self.from, "to": self.to, "images": images })
    }
}

/// Geodesic normal form in the right-angled group of `graph` (generator
/// `k` ↔ vertex `k−1`; adjacent generators commute). Repeatedly deletes a
/// pair of inverse letters separated only by letters of other, commuting
/// generators; the result is a geodesic, empty iff the element is trivial.
pub fn raag_normal_form(word: &Word, graph: &SimpleGraph) -> Result<Word> {
    let rank = graph.vertex_count() as u32;
    for &l in word.letters() {
        if l.unsigned_abs() > rank {
            return Err(Error::UnknownGenerator {
                msg: format!("letter {l} out of range for {rank} graph vertices"),
            });
        }
    }
    let mut letters = word.free_reduce().0;
    'restart: loop {
        for i in 0..letters.len() {
            let gi = letters[i].unsigned_abs() as usize - 1;
            // Walk right while every letter passed over commutes with
            // generator gi; the first inverse letter found cancels.
            for j in i + 1..letters.len() {
                let lj = letters[j];
                if lj == -letters[i] {
                    letters.remove(j);
                    letters.remove(i);
                    continue 'restart;
                }
                let gj = lj.unsigned_abs() as usize - 1;
                if gj == gi || !graph.adjacent(gi, gj) {
                    break;
                }
            }
        }
        return Ok(Word(letters));
    }
}

/// Checks that a generator map kills every relator in the right-angled
/// target group; returns the first surviving relator as a witness.
pub fn verify_hom(relators: &[Word], map: &GenMap, target: &SimpleGraph) -> Result<()> {
    for r in relators {
        let image = map.apply(r);
        let nf = raag_normal_form(&image, target)?;
        if !nf.is_empty() {
            return Err(Error::NotRightAngled {
                relator: r.display(&map.from),
                word: nf.display(&map.to),
            });
        }
    }
    Ok(())
}

/// Reads a commutation graph off a presentation: every relator must
/// reduce to a commutator of two distinct generators. Returns the graph
/// on the presentation's generators with one edge per commuting pair.
pub fn as_raag(pres: &Presentation) -> Result<SimpleGraph> {
    let mut graph = SimpleGraph::new(pres.gens.clone())?;
    for r in &pres.relators {
        let c = r.cyclic_reduce();
        if c.is_empty() {
            continue;
        }
        let l = c.letters();
        let commutator = l.len() == 4
            && l[2] == -l[0]
            && l[3] == -l[1]
            && l[0].unsigned_abs() != l[1].unsigned_abs();
        if !commutator {
            return Err(Error::NotRightAngled {
                relator: r.display(&pres.gens),
                word: c.display(&pres.gens),
            });
        }
        let u = l[0].unsigned_abs() as usize - 1;
        let v = l[1].unsigned_abs() as usize - 1;
        if !graph.adjacent(u, v) {
            graph.add_edge(u, v);
        }
    }
    Ok(graph)
}

/// Inverts a triangular generator map into a right-angled group.
///
/// Requires each image `map(g_k) = u · h_k · v` where the pivot `h_k`
/// occurs with exponent `+1` and `u, v` only use `h_j` with `j < k` (so
/// source and target ranks agree). Returns the section `h_k ↦ ψ(u)⁻¹ ·
/// g_k · ψ(v)⁻¹` and verifies the round trip `map(ψ(h_k))` normalizes to
/// `h_k` in the right-angled target.
pub fn triangular_inverse(map: &GenMap, target: &SimpleGraph) -> Result<GenMap> {
    let n = map.from.len();
    if map.to.len() != n {
        return Err(Error::NotTriangular {
            msg: format!("{} source vs {} target generators", n, map.to.len()),
        });
    }
    let mut images: Vec<Word> = Vec::with_capacity(n);
    for k in 1..=n {
        let img = &map.images[k - 1];
        let pivot_positions: Vec<usize> = img
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, &l)| l.unsigned_abs() as usize == k)
            .map(|(i, _)| i)
            .collect();
        let pivot = match pivot_positions.as_slice() {
            [i] if img.letters()[*i] > 0 => *i,
            _ => {
                return Err(Error::NotTriangular {
                    msg: format!(
                        "image of {} is {}, which does not use pivot {} exactly once positively",
                        map.from[k - 1],
                        img.display(&map.to),
                        map.to[k - 1]
                    ),
                })
            }
        };
        if img.letters().iter().any(|&l| l.unsigned_abs() as usize > k) {
            return Err(Error::NotTriangular {
                msg: format!(
                    "image of {} uses a generator above its pivot {}",
                    map.from[k - 1],
                    map.to[k - 1]
                ),
            });
        }
        let u = Word(img.letters()[..pivot].to_vec());
        let v = Word(img.letters()[pivot + 1..].to_vec());
        // ψ on earlier targets is already known; apply it to u and v.
        let partial = GenMap {
            from: map.to[..k - 1].to_vec(),
            to: map.from.clone(),
            images: images.clone(),
        };
        let gk = Word(vec![k as i32]);
        let image =
            partial.apply(&u).inverse().concat(&gk).concat(&partial.apply(&v).inverse());
        images.push(image.free_reduce());
    }
    let section = GenMap::new(map.to.clone(), map.from.clone(), images)?;
    for k in 1..=n {
        let round = map.apply(&section.images[k - 1]);
        let nf = raag_normal_form(&round, target)?;
        if nf.letters() != [k as i32] {
            return Err(Error::NotTriangular {
                msg: format!(
                    "round trip of {} gives {}, not itself",
                    map.to[k - 1],
                    nf.display(&map.to)
                ),
            });
        }
    }
    Ok(section)
}

/// Result of Tietze simplification: the reduced presentation and the map
/// expressing every original generator over the surviving ones.
#[derive(Debug, Clone)]
pub struct TietzeOutcome {
    /// The simplified presentation (surviving generators, reduced relators).
    pub presentation: Presentation,
    /// Map from the original generators to words over the survivors.
    pub rewrite: GenMap,
}

/// Tietze simplification: free/cyclic reduction, dropping empty relators,
/// then generator eliminations.
///
/// Each name in `script` must be a generator occurring exactly once in
/// some relator; that relator is solved for the generator and removed.
/// With `auto`, further such eliminations are applied greedily (shortest
/// defining relator first). Total relator length may not grow past 16×
/// the initial total; abelianization is checked invariant throughout.
pub fn tietze_simplify(pres: &Presentation, script: &[&str], auto: bool) -> Result<TietzeOutcome> {
    let initial_ab = abelianization(pres);
    let growth_cap = 16 * pres.total_relator_length().max(16);

    // Working state over the ORIGINAL generator indexing.
    let mut relators: Vec<Word> =
        pres.relators.iter().map(Word::cyclic_reduce).filter(|w| !w.is_empty()).collect();
    let mut alive: Vec<bool> = vec![true; pres.rank()];
    // Expression of each original generator over original generators that
    // are still alive (identity for survivors).
    let mut express: Vec<Word> = (1..=pres.rank()).map(|k| Word(vec![k as i32])).collect();

    let eliminate = |gen: usize,
                         relators: &mut Vec<Word>,
                         alive: &mut Vec<bool>,
                         express: &mut Vec<Word>|
     -> Result<()> {
        // Find the shortest relator using the generator exactly once;
        // among ties, prefer the lexicographically least replacement so
        // the outcome is independent of relator order.
        let solve = |r: &Word| -> Option<Word> {
            let mut occurrences =
                r.letters().iter().enumerate().filter(|(_, l)| l.unsigned_abs() as usize == gen);
            let (pos, _) = occurrences.next()?;
            if occurrences.next().is_some() {
                return None;
            }
            // Rotate the relator so the ±gen letter leads, then solve.
            let mut rot = r.0.clone();
            rot.rotate_left(pos);
            let lead = rot[0];
            let rest = Word(rot[1..].to_vec());
            Some(if lead > 0 { rest.inverse() } else { rest })
        };
        let mut choice: Option<(usize, Word)> = None;
        for (idx, r) in relators.iter().enumerate() {
            let Some(repl) = solve(r) else { continue };
            let key = |w: &Word| -> Vec<(u32, bool)> { w.letters().iter().map(|&l| letter_key(l)).collect() };
            let better = match &choice {
                None => true,
                Some((best, best_repl)) => (relators[*best].len(), key(best_repl)) > (r.len(), key(&repl)),
            };
            if better {
                choice = Some((idx, repl));
            }
        }
        let (idx, replacement) = choice.ok_or_else(|| Error::BadScript {
            msg: format!("no relator uses generator index {gen} exactly once"),
        })?;
        relators.remove(idx);
        let substitute = |w: &Word| -> Word {
            let mut out = Vec::new();
            for &l in w.letters() {
                if l.unsigned_abs() as usize == gen {
                    if l > 0 {
                        out.extend_from_slice(replacement.letters());
                    } else {
                        out.extend(replacement.inverse().letters().iter().copied());
                    }
                } else {
                    out.push(l);
                }
            }
            Word(out).free_reduce()
        };
        for r in relators.iter_mut() {
            *r = substitute(r).cyclic_reduce();
        }
        relators.retain(|r| !r.is_empty());
        for e in express.iter_mut() {
            *e = substitute(e);
        }
        alive[gen - 1] = false;
        let total: usize = relators.iter().map(Word::len).sum();
        if total > growth_cap {
            return Err(Error::BadScript {
                msg: format!("relator growth {total} exceeds cap {growth_cap}"),
            });
        }
        Ok(())
    };

    for name in script {
        let gen = pres
            .gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator { msg: format!("no generator {name:?}") })?
            + 1;
        if !alive[gen - 1] {
            return Err(Error::BadScript { msg: format!("generator {name:?} already eliminated") });
        }
        eliminate(gen, &mut relators, &mut alive, &mut express)?;
    }
    if auto {
        loop {
            // Pick the elimination with the shortest defining relator.
            let mut best: Option<(usize, usize)> = None; // (relator len, gen)
            for r in &relators {
                for gen in 1..=pres.rank() {
                    if !alive[gen - 1] {
                        continue;
                    }
                    let count =
                        r.letters().iter().filter(|l| l.unsigned_abs() as usize == gen).count();
                    if count == 1 && best.is_none_or(|(len, _)| r.len() < len) {
                        best = Some((r.len(), gen));
                    }
                }
            }
            match best {
                Some((_, gen)) => eliminate(gen, &mut relators, &mut alive, &mut express)?,
                None => break,
            }
        }
    }

    // Reindex onto the survivors.
    let survivors: Vec<usize> = (1..=pres.rank()).filter(|&k| alive[k - 1]).collect();
    let mut new_index = vec![0i32; pres.rank() + 1];
    for (new, &old) in survivors.iter().enumerate() {
        new_index[old] = (new + 1) as i32;
    }
    let reindex = |w: &Word| -> Word {
        Word(
            w.letters()
                .iter()
                .map(|&l| new_index[l.unsigned_abs() as usize] * l.signum())
                .collect(),
        )
    };
    let gens: Vec<String> = survivors.iter().map(|&k| pres.gens[k - 1].clone()).collect();
    let presentation =
        Presentation::new(gens.clone(), relators.iter().map(&reindex).collect())?;
    let rewrite =
        GenMap::new(pres.gens.clone(), gens, express.iter().map(&reindex).collect())?;

    let final_ab = abelianization(&presentation);
    if final_ab != initial_ab {
        return Err(Error::BadScript {
            msg: format!("abelianization changed: {initial_ab:?} vs {final_ab:?}"),
        });
    }
    Ok(TietzeOutcome { presentation, rewrite })
}

/// Rewrites a presentation on a new generating set.
///
/// `forward` expresses each old generator over the new names and
/// `backward` expresses each new generator over the old; both round
/// trips must reduce freely to the identity map, which certifies the two
/// sets generate the same group. The new relators are the forward images
/// of the old ones, cyclically reduced, with empties dropped.
pub fn change_of_basis(
    pres: &Presentation,
    forward: &GenMap,
    backward: &GenMap,
) -> Result<Presentation> {
    if forward.from != pres.gens {
        return Err(Error::BadScript { msg: "forward map domain mismatch".into() });
    }
    if backward.from != forward.to || backward.to != forward.from {
        return Err(Error::BadScript { msg: "backward map is not the reverse of forward".into() });
    }
    for k in 1..=pres.rank() {
        let g = Word(vec![k as i32]);
        let round = backward.apply(&forward.apply(&g));
        if round != g {
            return Err(Error::BadScript {
                msg: format!(
                    "old generator {} does not round-trip: got {}",
                    pres.gens[k - 1],
                    round.display(&pres.gens)
                ),
            });
        }
    }
    for k in 1..=forward.to.len() {
        let h = Word(vec![k as i32]);
        let round = forward.apply(&backward.apply(&h));
        if round != h {
            return Err(Error::BadScript {
                msg: format!(
                    "new generator {} does not round-trip: got {}",
                    forward.to[k - 1],
                    round.display(&forward.to)
                ),
            });
        }
    }
    let relators: Vec<Word> = pres
        .relators
        .iter()
        .map(|r| forward.apply(r).cyclic_reduce())
        .filter(|w| !w.is_empty())
        .collect();
    Presentation::new(forward.to.clone(), relators)
}
