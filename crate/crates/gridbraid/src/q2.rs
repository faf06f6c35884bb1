//! Two-row reduction: normalized generators and relations for `p×2` grids.
//!
//! On a two-row grid the presentation machinery admits a dramatic
//! arithmetic compression. Writing `φ = n − p` for the token surplus over
//! the column count, every generator `ε(r,s,t)` (the edge index is
//! determined as `ι(r,t) = max(r,t)+1`) is an iterated conjugate of one
//! of the *reduced generators* `g_j = ε(m_j, j, n−1−j−m_j)` with
//! `m_j = max(0, φ − ⌊j/2⌋)`, and every relator normalizes to a
//! commutation datum `g_t & ḡ_J^{g_{n−1}^shift}·g_{n−1}` indexed by the
//! triple `(t, J, shift)` ([`RelDatum`]).
//!
//! The commutation data produced by all admissible five-tuples are, for
//! `n ≤ 2p−5`, consequences of three *codified* families
//! ([`TwoRow::codified_relations`]); each family member is realized by an
//! explicit five-tuple ([`TwoRow::tuple_for_high_pair`],
//! [`TwoRow::tuple_for_low_pair`], [`TwoRow::tuple_for_adjacent_odd`]).
//! The map [`TwoRow::phi_map`] sends the reduced generators to a
//! right-angled group on `h_1, …, h_{n−1}` (distant pairs commute); it is
//! triangular, hence invertible, and [`TwoRow::check_lemma_bounds`]
//! certifies the support estimates that drive the general proof.
//!
//! Convention: the conjugation power is `y^x = x·y·x̄` throughout.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::ra_graph;
use crate::words::{raag_normal_form, GenMap, Word};

/// Parameters of the two-row regime: `p` columns, `n` tokens, with
/// `p ≤ n ≤ 2p−3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoRow {
    /// Number of columns of the `p×2` grid.
    pub p: usize,
    /// Number of tokens.
    pub n: usize,
}

/// A normalized commutation datum: `g_t` commutes with
/// `g_{n−1}^{shift} · ḡ_j · g_{n−1}^{−shift} · g_{n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RelDatum {
    /// Index of the commuting reduced generator.
    pub t: usize,
    /// Index of the conjugated reduced generator.
    pub j: usize,
    /// Conjugation power of the last generator applied to `ḡ_j`.
    pub shift: i64,
}

/// Report of a lemma-bound sweep: how many support checks ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaBoundsReport {
    /// Number of individual support inclusions verified.
    pub checks: usize,
}

/// `ι(a,b) = max(a,b) + 1`: the least usable edge index for wall
/// populations `a` and `b`.
pub fn iota(a: usize, b: usize) -> usize {
    a.max(b) + 1
}

/// `ℓ(i)`: `i` rounded up to an even number.
pub fn ell(i: usize) -> usize {
    2 * i.div_ceil(2)
}

impl TwoRow {
    /// Validates `p ≤ n ≤ 2p−3` (forcing `p ≥ 3`).
    pub fn new(p: usize, n: usize) -> Result<TwoRow> {
        if p < 3 || n < p || n + 3 > 2 * p {
            return Err(Error::RangeGuard {
                msg: format!("two-row regime needs p ≤ n ≤ 2p−3 with p ≥ 3; got p = {p}, n = {n}"),
            });
        }
        Ok(TwoRow { p, n })
    }

    /// The token surplus `φ = n − p`.
    pub fn surplus(&self) -> usize {
        self.n - self.p
    }

    /// `m_j = max(0, φ − ⌊j/2⌋)`: the rest position of the lower wall for
    /// the reduced generator `g_j`.
    pub fn m(&self, j: usize) -> usize {
        self.surplus().saturating_sub(j / 2)
    }

    /// Generator names `g1, …, g_{n−1}`.
    pub fn g_names(&self) -> Vec<String> {
        (1..self.n).map(|i| format!("g{i}")).collect()
    }

    /// Target names `h1, …, h_{n−1}`.
    pub fn h_names(&self) -> Vec<String> {
        (1..self.n).map(|i| format!("h{i}")).collect()
    }

    /// Existence test for the unified generator `ε(r,s,t)`.
    pub fn eps_exists(&self, r: usize, s: usize, t: usize) -> bool {
        s > 0
            && r + s + t == self.n - 1
            && iota(r, t) < self.p
            && s <= 2 * (self.p - iota(r, t))
    }

    /// The defining triple `(m_j, j, n−1−j−m_j)` of the reduced
    /// generator `g_j`, for `1 ≤ j ≤ n−1`.
    pub fn gen_tuple(&self, j: usize) -> Result<(usize, usize, usize)> {
        if j == 0 || j >= self.n {
            return Err(Error::RangeGuard {
                msg: format!("reduced generator index {j} outside 1..={}", self.n - 1),
            });
        }
        let m = self.m(j);
        Ok((m, j, self.n - 1 - j - m))
    }

    /// Existence test for a unified-relation five-tuple.
    pub fn is_rel_tuple(&self, [r, s, t, u, v]: [usize; 5]) -> bool {
        t > 0
            && r + v > 0
            && r + s + t + u + v == self.n - 2
            && iota(r, v) + iota(s, u) < self.p
            && t <= 2 * (self.p - iota(r, v) - iota(s, u))
    }

    /// All admissible five-tuples, in lexicographic order.
    pub fn rel_tuples(&self) -> Vec<[usize; 5]> {
        let total = self.n - 2;
        let mut out = Vec::new();
        for r in 0..=total {
            for s in 0..=total - r {
                for t in 0..=total - r - s {
                    for u in 0..=total - r - s - t {
                        let v = total - r - s - t - u;
                        let tup = [r, s, t, u, v];
                        if self.is_rel_tuple(tup) {
                            out.push(tup);
                        }
                    }
                }
            }
        }
        out
    }

    /// The normalized commutation datum of a five-tuple:
    /// `t`, `J = s+t+u+1`, and `shift = m(t) − m(J) − s`.
    pub fn normalized_relation(&self, tup: [usize; 5]) -> Result<RelDatum> {
        if !self.is_rel_tuple(tup) {
            return Err(Error::RangeGuard {
                msg: format!("{tup:?} is not an admissible relation tuple for {self:?}"),
            });
        }
        let [_, s, t, u, _] = tup;
        let j = s + t + u + 1;
        let shift = self.m(t) as i64 - self.m(j) as i64 - s as i64;
        Ok(RelDatum { t, j, shift })
    }

    /// The commutator word `[g_t, g_{n−1}^{shift}·ḡ_j·g_{n−1}^{−shift}·g_{n−1}]`
    /// over `g_1, …, g_{n−1}`, freely reduced.
    pub fn datum_word(&self, datum: &RelDatum) -> Word {
        let last = (self.n - 1) as i32;
        let mut c: Vec<i32> = Vec::new();
        let reps = datum.shift.unsigned_abs() as usize;
        let powered = if datum.shift >= 0 { last } else { -last };
        c.extend(std::iter::repeat_n(powered, reps));
        c.push(-(datum.j as i32));
        c.extend(std::iter::repeat_n(-powered, reps));
        c.push(last);
        let a = datum.t as i32;
        let mut letters = vec![a];
        letters.extend_from_slice(&c);
        letters.push(-a);
        letters.extend(c.iter().rev().map(|l| -l));
        Word::from_letters(letters).free_reduce()
    }

    /// Expresses `ε(r,s,t)` over the reduced generators:
    /// `g_s^{g_{n−1}^{r−m_s}}` (and the empty word when `s = 0`).
    ///
    /// Every single-step descent of the wall population is checked
    /// against the conjugation-relation conditions; a violation is an
    /// error, never silent.
    pub fn eps_to_g(&self, r: usize, s: usize, t: usize) -> Result<Word> {
        if s == 0 {
            return Ok(Word::identity());
        }
        if !self.eps_exists(r, s, t) {
            return Err(Error::RangeGuard {
                msg: format!("eps({r},{s},{t}) does not exist for {self:?}"),
            });
        }
        let ms = self.m(s);
        if r < ms {
            return Err(Error::RangeGuard {
                msg: format!("eps({r},{s},{t}) has lower wall below its rest position {ms}"),
            });
        }
        for a in (ms + 1..=r).rev() {
            // The step from wall height a to a−1 instantiates the basic
            // conjugation relation; check its admissibility.
            let c = self.n - 1 - a - s;
            let step_ok = self.eps_exists(a, s, self.n - 1 - a - s)
                && iota(a - 1, c) <= self.p - 2
                && s <= 2 * (self.p - 1 - iota(a - 1, c));
            if !step_ok {
                return Err(Error::RangeGuard {
                    msg: format!(
                        "conjugation step at wall height {a} of eps({r},{s},{t}) is inadmissible"
                    ),
                });
            }
        }
        let e = r - ms;
        let last = (self.n - 1) as i32;
        let mut letters = Vec::with_capacity(2 * e + 1);
        letters.extend(std::iter::repeat_n(last, e));
        letters.push(s as i32);
        letters.extend(std::iter::repeat_n(-last, e));
        Ok(Word::from_letters(letters))
    }

    /// Realizing five-tuple for `g_i & ḡ_j·g_{n−1}` in the high range
    /// `max(1, 2φ) ≤ i < j ≤ n−2`.
    pub fn tuple_for_high_pair(&self, i: usize, j: usize) -> Result<[usize; 5]> {
        let phi2 = 2 * self.surplus();
        if !(i >= 1.max(phi2) && i < j && j <= self.n - 2) {
            return Err(Error::RangeGuard {
                msg: format!("high pair needs max(1,2φ) ≤ i < j ≤ n−2; got ({i},{j})"),
            });
        }
        Ok([0, 0, i, j - i - 1, self.n - j - 1])
    }

    /// Realizing five-tuple for `g_i & ḡ_j·g_{n−1}` in the low range
    /// `1 ≤ i < 2φ`, `ℓ(i) < j ≤ n−2` (requires `n ≤ 2p−5`).
    pub fn tuple_for_low_pair(&self, i: usize, j: usize) -> Result<[usize; 5]> {
        if self.n + 5 > 2 * self.p {
            return Err(Error::RangeGuard {
                msg: format!("low pairs need n ≤ 2p−5; got p = {}, n = {}", self.p, self.n),
            });
        }
        let phi = self.surplus() as i64;
        let (il, jl, l) = (i as i64, j as i64, ell(i) as i64);
        if !(i >= 1 && i < 2 * self.surplus() && (l as usize) < j && j <= self.n - 2) {
            return Err(Error::RangeGuard {
                msg: format!("low pair needs 1 ≤ i < 2φ and ℓ(i) < j ≤ n−2; got ({i},{j})"),
            });
        }
        let (p, n) = (self.p as i64, self.n as i64);
        let tup = if phi > (jl + il - l - 1).div_euclid(2) {
            [
                phi + l - il - (jl - 1).div_euclid(2),
                (jl + l).div_euclid(2) - il,
                il,
                (jl - l - 1).div_euclid(2),
                p + il - l - 2 - jl.div_euclid(2),
            ]
        } else {
            [
                0,
                phi - il + (il + 1).div_euclid(2),
                il,
                jl - phi - (il + 3).div_euclid(2),
                n - jl - 1,
            ]
        };
        let mut out = [0usize; 5];
        for (slot, &x) in out.iter_mut().zip(&tup) {
            if x < 0 {
                return Err(Error::RangeGuard {
                    msg: format!("low-pair tuple for ({i},{j}) has a negative entry: {tup:?}"),
                });
            }
            *slot = x as usize;
        }
        Ok(out)
    }

    /// Realizing five-tuple for `g_i & g_{n−1}·ḡ_{i+1}` with `i` odd,
    /// `i < 2φ`.
    pub fn tuple_for_adjacent_odd(&self, i: usize) -> Result<[usize; 5]> {
        if i.is_multiple_of(2) || i >= 2 * self.surplus() {
            return Err(Error::RangeGuard {
                msg: format!("adjacent-odd relation needs odd i < 2φ; got i = {i}"),
            });
        }
        Ok([
            self.surplus() - i / 2,
            0,
            i,
            0,
            self.p - 2 - i.div_ceil(2),
        ])
    }

    /// The three codified families of commutation data (requires
    /// `n ≤ 2p−5`), in family order.
    pub fn codified_relations(&self) -> Result<Vec<RelDatum>> {
        if self.n + 5 > 2 * self.p {
            return Err(Error::RangeGuard {
                msg: format!("codified relations need n ≤ 2p−5; got p = {}, n = {}", self.p, self.n),
            });
        }
        let phi2 = 2 * self.surplus();
        let mut out = Vec::new();
        for i in 1.max(phi2)..=self.n.saturating_sub(2) {
            for j in i + 1..=self.n - 2 {
                out.push(RelDatum { t: i, j, shift: 0 });
            }
        }
        for i in 1..phi2 {
            for j in ell(i) + 1..=self.n - 2 {
                out.push(RelDatum { t: i, j, shift: 0 });
            }
        }
        for i in (1..phi2).step_by(2) {
            out.push(RelDatum { t: i, j: i + 1, shift: 1 });
        }
        Ok(out)
    }

    /// Keeps one datum per `(t, j)` pair: smallest `|shift|`, preferring
    /// non-negative on ties; result sorted by `(t, j)`.
    pub fn dedup_data(data: &[RelDatum]) -> Vec<RelDatum> {
        use std::collections::BTreeMap;
        let mut best: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for d in data {
            best.entry((d.t, d.j))
                .and_modify(|cur| {
                    let better = d.shift.abs() < cur.abs()
                        || (d.shift.abs() == cur.abs() && d.shift >= 0 && *cur < 0);
                    if better {
                        *cur = d.shift;
                    }
                })
                .or_insert(d.shift);
        }
        best.into_iter().map(|((t, j), shift)| RelDatum { t, j, shift }).collect()
    }

    fn a_letters(&self, a1: i64, a2: i64) -> Vec<i32> {
        let lo = a1.max(1);
        let hi = a2.min(self.n as i64 - 1);
        (lo..=hi).map(|i| i as i32).collect()
    }

    fn e_letters(&self, e1: i64, e2: i64) -> Vec<i32> {
        debug_assert!(e1 % 2 == 0 && e2 % 2 == 0, "even-run bounds must be even");
        let top = 2 * ((self.n as i64 - 1) / 2);
        let lo = e1.max(2);
        let hi = e2.min(top);
        (lo..=hi).step_by(2).map(|i| i as i32).collect()
    }

    fn o_letters(&self, o1: i64, o2: i64) -> Vec<i32> {
        debug_assert!(o1 % 2 == 1 && o2.rem_euclid(2) == 1, "odd-run bounds must be odd");
        let top = 2 * (self.n as i64 / 2) - 1;
        let lo = o1.max(1);
        let hi = o2.min(top);
        (lo..=hi).step_by(2).map(|i| i as i32).collect()
    }

    /// The image of `g_i` in the right-angled target, over `h_1, …, h_{n−1}`.
    pub fn phi_word(&self, i: usize) -> Result<Word> {
        if i == 0 || i >= self.n {
            return Err(Error::RangeGuard {
                msg: format!("generator index {i} outside 1..={}", self.n - 1),
            });
        }
        if i == 1 {
            return Ok(Word::from_letters([1]));
        }
        let phi2 = 2 * self.surplus() as i64;
        let il = i as i64;
        let mut letters = Vec::new();
        if il <= phi2 + il % 2 {
            // 2 ≤ i = 2k ≤ 2φ, or 3 ≤ i = 2k+1 ≤ 2φ+1.
            if il % 2 == 0 {
                letters.extend(self.o_letters(3, il - 1));
                letters.extend(self.e_letters(2, il));
            } else {
                letters.extend(self.o_letters(3, il));
                letters.extend(self.e_letters(2, il - 1));
            }
        } else {
            // i ≥ 2φ+2.
            letters.extend(self.o_letters(3, phi2 + 1));
            letters.extend(self.e_letters(2, phi2));
            letters.extend(self.a_letters(phi2 + 2, il));
        }
        Ok(Word::from_letters(letters))
    }

    /// The full generator map `g_i ↦ φ(g_i)`.
    pub fn phi_map(&self) -> Result<GenMap> {
        let images: Result<Vec<Word>> = (1..self.n).map(|i| self.phi_word(i)).collect();
        GenMap::new(self.g_names(), self.h_names(), images?)
    }

    /// Certifies the support estimates for conjugates in the right-angled
    /// target, sweeping every admissible parameter combination.
    ///
    /// Lower-support claims (`w`-type: support within `{h_1..h_b}`) and
    /// upper-support claims (`W`-type: support within `{h_b..h_{n−1}}`)
    /// are checked on geodesic normal forms. For claims about *generic*
    /// words of a type, per-generator conjugation bounds suffice because
    /// conjugation is a homomorphism and the bounds are monotone in the
    /// generator index.
    pub fn check_lemma_bounds(&self) -> Result<LemmaBoundsReport> {
        if self.n + 5 > 2 * self.p {
            return Err(Error::RangeGuard {
                msg: format!("lemma sweep targets n ≤ 2p−5; got p = {}, n = {}", self.p, self.n),
            });
        }
        let graph = ra_graph(self.n)?;
        let phi = self.surplus();
        let nn = self.n - 1;
        let conj = |w: &Word, c: &Word| c.concat(w).concat(&c.inverse());
        let last = self.phi_word(nn)?;
        let mut checks = 0usize;

        let mut expect_low = |word: &Word, bound: usize, what: &str| -> Result<()> {
            let nf = raag_normal_form(word, &graph)?;
            checks += 1;
            if let Some(&maxi) = nf.support().iter().next_back() {
                if maxi > bound {
                    return Err(Error::RangeGuard {
                        msg: format!("{what}: support reaches h{maxi}, above h{bound}"),
                    });
                }
            }
            Ok(())
        };
        // Low-support estimates.
        for x in 1..=nn {
            let gx = self.phi_word(x)?;
            expect_low(&gx, x, &format!("phi(g{x})"))?;
            let b2 = if x > 2 * phi || x % 2 == 0 { x + 1 } else { x + 2 };
            let hx = Word::from_letters([x as i32]);
            expect_low(&conj(&hx, &last), b2, &format!("conjugate of h{x}"))?;
            if x >= 2 * phi {
                let mut w = gx.clone();
                for y in 1..=self.n - x {
                    w = conj(&w, &last);
                    expect_low(&w, x + y, &format!("{y}-fold conjugate of phi(g{x})"))?;
                }
            }
        }
        for z in 1..2 * phi {
            let x = 2 * phi - z;
            let mut w = self.phi_word(x)?;
            for y in 1..=self.n.saturating_sub(2 * phi) + z / 2 {
                w = conj(&w, &last);
                expect_low(
                    &w,
                    2 * phi + y - z / 2,
                    &format!("{y}-fold conjugate of phi(g{x}) (deficit {z})"),
                )?;
            }
        }

        let mut expect_high = |word: &Word, bound: usize, what: &str| -> Result<()> {
            let nf = raag_normal_form(word, &graph)?;
            checks += 1;
            if let Some(&mini) = nf.support().iter().next() {
                if mini < bound {
                    return Err(Error::RangeGuard {
                        msg: format!("{what}: support reaches h{mini}, below h{bound}"),
                    });
                }
            }
            Ok(())
        };
        // High-support estimates.
        for x in 1..=nn {
            let base = self.phi_word(x)?.inverse().concat(&last);
            let b1 = if x >= 2.max(2 * phi + 1) || (x % 2 == 1 && x >= 3) { x + 1 } else { x };
            expect_high(&base, b1, &format!("phi(inv(g{x})·g{nn})"))?;
            let hx = Word::from_letters([x as i32]);
            let b2 = if x >= 2 * phi { 2 * phi } else { 2 * (x / 2) }.max(2) - 1;
            expect_high(&conj(&hx, &last), b2, &format!("conjugate of h{x}"))?;
            let b3 = if x >= 2 * phi {
                2 * phi + 1
            } else if x % 2 == 1 {
                x
            } else {
                x + 1
            };
            expect_high(&conj(&base, &last), b3, &format!("conjugate of phi(inv(g{x})·g{nn})"))?;
            if x >= 2 * phi {
                let mut w = base.clone();
                for y in 1..=phi + 1 {
                    w = conj(&w, &last);
                    let bound = (2 * phi + 3).saturating_sub(2 * y).max(1);
                    expect_high(
                        &w,
                        bound,
                        &format!("{y}-fold conjugate of phi(inv(g{x})·g{nn})"),
                    )?;
                }
            }
        }
        Ok(LemmaBoundsReport { checks })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::triangular_inverse;

    fn w(letters: &[i32]) -> Word {
        Word::from_letters(letters.iter().copied())
    }

    #[test]
    fn wall_rest_positions_and_index_helpers() {
        let tr = TwoRow::new(6, 8).unwrap();
        assert_eq!(tr.surplus(), 2);
        let m: Vec<usize> = (1..8).map(|j| tr.m(j)).collect();
        assert_eq!(m, vec![2, 1, 1, 0, 0, 0, 0]);
        assert_eq!(iota(0, 3), 4);
        assert_eq!(iota(2, 2), 3);
        assert_eq!(ell(3), 4);
        assert_eq!(ell(4), 4);
        assert!(TwoRow::new(4, 6).is_err());
        assert!(TwoRow::new(5, 4).is_err());
    }

    #[test]
    fn reduced_generators_exist() {
        for (p, n) in [(4, 4), (4, 5), (5, 6), (5, 7), (7, 8), (7, 9), (9, 13)] {
            let tr = TwoRow::new(p, n).unwrap();
            for j in 1..n {
                let (r, s, t) = tr.gen_tuple(j).unwrap();
                assert!(tr.eps_exists(r, s, t), "g{j} at (p,n)=({p},{n})");
            }
        }
    }

    #[test]
    fn iterated_conjugation_powers() {
        let tr = TwoRow::new(7, 8).unwrap();
        // eps(1,2,4): e = 1 − m(2) = 1, so the word is g7 g2 g7^-1.
        assert_eq!(tr.eps_to_g(1, 2, 4).unwrap(), w(&[7, 2, -7]));
        // A reduced generator maps to itself.
        let (r, s, t) = tr.gen_tuple(3).unwrap();
        assert_eq!(tr.eps_to_g(r, s, t).unwrap(), w(&[3]));
        // s = 0 is the trivial element.
        assert!(tr.eps_to_g(3, 0, 4).unwrap().is_empty());
        // Nonexistent generators are rejected.
        assert!(tr.eps_to_g(7, 1, 0).is_err());
    }

    #[test]
    fn five_tuple_normalization() {
        let tr = TwoRow::new(7, 8).unwrap();
        let datum = tr.normalized_relation([1, 1, 1, 0, 3]).unwrap();
        assert_eq!(datum, RelDatum { t: 1, j: 3, shift: 0 });
        // The datum expands to the commutator of g1 with g3^-1 g7.
        assert_eq!(tr.datum_word(&datum), w(&[1, -3, 7, -1, -7, 3]));
        // An adjacent-odd datum free-reduces to [g_i, g7·g_{i+1}^-1].
        let d3 = RelDatum { t: 3, j: 4, shift: 1 };
        assert_eq!(tr.datum_word(&d3), w(&[3, 7, -4, -3, 4, -7]));
    }

    #[test]
    fn low_pair_tuple_example() {
        let tr = TwoRow::new(7, 8).unwrap();
        let tup = tr.tuple_for_low_pair(1, 3).unwrap();
        assert_eq!(tup, [1, 1, 1, 0, 3]);
        assert!(tr.is_rel_tuple(tup));
    }

    #[test]
    fn deduplicated_data_for_small_strips() {
        // Five tokens on four columns.
        let tr = TwoRow::new(4, 5).unwrap();
        let data: Vec<RelDatum> = tr
            .rel_tuples()
            .iter()
            .map(|&t| tr.normalized_relation(t).unwrap())
            .collect();
        assert_eq!(
            TwoRow::dedup_data(&data),
            vec![RelDatum { t: 1, j: 2, shift: 1 }, RelDatum { t: 2, j: 3, shift: 0 }]
        );

        // Six tokens on five columns: every pair below n−1 appears, with a
        // shift only on the leading adjacent pair.
        let tr = TwoRow::new(5, 6).unwrap();
        let data: Vec<RelDatum> = tr
            .rel_tuples()
            .iter()
            .map(|&t| tr.normalized_relation(t).unwrap())
            .collect();
        assert_eq!(
            TwoRow::dedup_data(&data),
            vec![
                RelDatum { t: 1, j: 2, shift: 1 },
                RelDatum { t: 1, j: 3, shift: 0 },
                RelDatum { t: 1, j: 4, shift: 0 },
                RelDatum { t: 2, j: 3, shift: 0 },
                RelDatum { t: 2, j: 4, shift: 0 },
                RelDatum { t: 3, j: 4, shift: 0 },
            ]
        );

        // Seven tokens on six columns: the deduplicated data coincide with
        // the codified families.
        let tr = TwoRow::new(6, 7).unwrap();
        let data: Vec<RelDatum> = tr
            .rel_tuples()
            .iter()
            .map(|&t| tr.normalized_relation(t).unwrap())
            .collect();
        let mut codified = tr.codified_relations().unwrap();
        codified.sort();
        assert_eq!(TwoRow::dedup_data(&data), codified);

        // Seven tokens on five columns: eleven tuples, eight distinct
        // data, seven after deduplication.
        let tr = TwoRow::new(5, 7).unwrap();
        let tuples = tr.rel_tuples();
        assert_eq!(tuples.len(), 11);
        let data: Vec<RelDatum> =
            tuples.iter().map(|&t| tr.normalized_relation(t).unwrap()).collect();
        let distinct: std::collections::BTreeSet<RelDatum> = data.iter().copied().collect();
        assert_eq!(distinct.len(), 8);
        assert_eq!(
            TwoRow::dedup_data(&data),
            vec![
                RelDatum { t: 1, j: 2, shift: 1 },
                RelDatum { t: 1, j: 4, shift: 1 },
                RelDatum { t: 2, j: 3, shift: 0 },
                RelDatum { t: 2, j: 4, shift: 0 },
                RelDatum { t: 2, j: 5, shift: 0 },
                RelDatum { t: 3, j: 4, shift: 1 },
                RelDatum { t: 4, j: 5, shift: 0 },
            ]
        );
    }

    #[test]
    fn family_tuples_realize_their_data() {
        for (p, n) in [(5, 5), (6, 6), (6, 7), (7, 8), (7, 9), (8, 11), (9, 13)] {
            let tr = TwoRow::new(p, n).unwrap();
            if tr.codified_relations().is_err() {
                continue;
            }
            let phi2 = 2 * tr.surplus();
            for i in 1.max(phi2)..=n - 2 {
                for j in i + 1..=n - 2 {
                    let tup = tr.tuple_for_high_pair(i, j).unwrap();
                    assert!(tr.is_rel_tuple(tup), "high ({i},{j}) at ({p},{n})");
                    let d = tr.normalized_relation(tup).unwrap();
                    assert_eq!(d, RelDatum { t: i, j, shift: 0 });
                }
            }
            for i in 1..phi2 {
                for j in ell(i) + 1..=n - 2 {
                    let tup = tr.tuple_for_low_pair(i, j).unwrap();
                    assert!(tr.is_rel_tuple(tup), "low ({i},{j}) at ({p},{n})");
                    let d = tr.normalized_relation(tup).unwrap();
                    assert_eq!(d, RelDatum { t: i, j, shift: 0 });
                }
            }
            for i in (1..phi2).step_by(2) {
                let tup = tr.tuple_for_adjacent_odd(i).unwrap();
                assert!(tr.is_rel_tuple(tup), "odd {i} at ({p},{n})");
                let d = tr.normalized_relation(tup).unwrap();
                assert_eq!(d, RelDatum { t: i, j: i + 1, shift: 1 });
            }
        }
    }

    #[test]
    fn phi_words_and_triangularity() {
        let tr = TwoRow::new(7, 8).unwrap();
        assert_eq!(tr.phi_word(1).unwrap(), w(&[1]));
        assert_eq!(tr.phi_word(2).unwrap(), w(&[2]));
        assert_eq!(tr.phi_word(3).unwrap(), w(&[3, 2]));
        assert_eq!(tr.phi_word(4).unwrap(), w(&[3, 2, 4]));
        assert_eq!(tr.phi_word(7).unwrap(), w(&[3, 2, 4, 5, 6, 7]));
        // With no surplus the images are plain runs.
        let tr = TwoRow::new(4, 4).unwrap();
        assert_eq!(tr.phi_word(1).unwrap(), w(&[1]));
        assert_eq!(tr.phi_word(2).unwrap(), w(&[2]));
        assert_eq!(tr.phi_word(3).unwrap(), w(&[2, 3]));
        // The map is triangular, hence inverts.
        for (p, n) in [(4, 4), (5, 6), (7, 8), (7, 9), (9, 13)] {
            let tr = TwoRow::new(p, n).unwrap();
            let map = tr.phi_map().unwrap();
            let graph = ra_graph(n).unwrap();
            triangular_inverse(&map, &graph).unwrap();
        }
    }

    #[test]
    fn all_normalized_relations_die_in_the_target() {
        for (p, n) in [(5, 5), (6, 7), (7, 9)] {
            let tr = TwoRow::new(p, n).unwrap();
            let map = tr.phi_map().unwrap();
            let graph = ra_graph(n).unwrap();
            for tup in tr.rel_tuples() {
                let d = tr.normalized_relation(tup).unwrap();
                let image = map.apply(&tr.datum_word(&d));
                let nf = raag_normal_form(&image, &graph).unwrap();
                assert!(nf.is_empty(), "datum {d:?} of tuple {tup:?} at ({p},{n}) survives");
            }
        }
    }

    #[test]
    fn lemma_bound_sweeps() {
        for (p, n) in [(5, 5), (6, 7), (7, 9), (8, 11)] {
            let tr = TwoRow::new(p, n).unwrap();
            let report = tr.check_lemma_bounds().unwrap();
            assert!(report.checks > 0, "({p},{n})");
        }
    }
}
