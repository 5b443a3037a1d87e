//! Finite-support permutations, the 0-Hecke monoid, and compatible pairs.
//!
//! Convention: the letter `j` acts on a permutation by left multiplication
//! with `s_j`, i.e. by swapping the *values* `j` and `j + 1` in one-line
//! notation, and only when that increases the length. A word `a_1 ⋯ a_l` is
//! folded left to right, so `[a]_H` is the Demazure product
//! `s_{a_l} ∗ ⋯ ∗ s_{a_1}` and `[rev(a)]_H = [a]_H⁻¹`.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of the positive integers moving finitely many points,
/// stored as its one-line notation with trailing fixed points trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity() -> Self {
        Permutation(Vec::new())
    }

    /// Validates that `one_line` is a bijection of `[len]`.
    pub fn from_one_line(one_line: Vec<u32>) -> Result<Self> {
        let k = one_line.len();
        let mut seen = vec![false; k];
        for &v in &one_line {
            let slot = (v as usize)
                .checked_sub(1)
                .and_then(|i| seen.get_mut(i))
                .ok_or_else(|| Error::invalid("permutation", format!("value {v} out of range 1..={k}")))?;
            if *slot {
                return Err(Error::invalid("permutation", format!("value {v} repeated")));
            }
            *slot = true;
        }
        Ok(Self::normalized(one_line))
    }

    fn normalized(mut v: Vec<u32>) -> Self {
        while v.last().is_some_and(|&x| x as usize == v.len()) {
            v.pop();
        }
        Permutation(v)
    }

    /// The simple transposition `s_i`.
    pub fn simple(i: u32) -> Self {
        assert!(i >= 1, "simple transpositions are indexed from 1");
        let mut v: Vec<u32> = (1..=i + 1).collect();
        v.swap(i as usize - 1, i as usize);
        Permutation(v)
    }

    /// The support bound `K`: everything above `K` is fixed. Zero for the
    /// identity.
    pub fn support(&self) -> usize {
        self.0.len()
    }

    /// One-line notation on `[support]`.
    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    /// One-line notation padded with fixed points to length `k`.
    pub fn one_line_padded(&self, k: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.extend(v.len() as u32 + 1..=k as u32);
        v
    }

    /// `w(i)`.
    pub fn apply(&self, i: u32) -> u32 {
        self.0.get(i as usize - 1).copied().unwrap_or(i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = pos as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Left multiplication by `s_j` if it makes the permutation longer;
    /// otherwise `None`.
    fn raise(&self, j: u32) -> Option<Self> {
        let k = self.0.len().max(j as usize + 1);
        let mut v = self.one_line_padded(k);
        let pj = v.iter().position(|&x| x == j).expect("value present");
        let pj1 = v.iter().position(|&x| x == j + 1).expect("value present");
        if pj > pj1 {
            return None;
        }
        v[pj] = j + 1;
        v[pj1] = j;
        Some(Self::normalized(v))
    }

    /// The 0-Hecke action of a single letter.
    pub fn hecke_act(&self, j: u32) -> Self {
        self.raise(j).unwrap_or_else(|| self.clone())
    }

    /// Bruhat order via the rank-matrix criterion.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        let k = self.support().max(other.support());
        let u = self.one_line_padded(k);
        let w = other.one_line_padded(k);
        // For every prefix length i and threshold j, count values ≥ j.
        let mut cu = vec![0i32; k + 2];
        let mut cw = vec![0i32; k + 2];
        for i in 0..k {
            for j in 1..=u[i] as usize {
                cu[j] += 1;
            }
            for j in 1..=w[i] as usize {
                cw[j] += 1;
            }
            if (1..=k).any(|j| cu[j] > cw[j]) {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One-line notation; comma-separated unless every value is a single digit.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        write_letters(f, &self.0)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    let sep = if letters.iter().all(|&x| x <= 9) { "" } else { "," };
    for (k, x) in letters.iter().enumerate() {
        if k > 0 {
            write!(f, "{sep}")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Number of inversions, which equals the length of any reduced word.
pub fn coxeter_length(w: &Permutation) -> usize {
    let v = w.one_line();
    (0..v.len())
        .map(|i| v[i + 1..].iter().filter(|&&y| y < v[i]).count())
        .sum()
}

/// `1^N × w`: fixes `1..=N` and sends `i > N` to `w(i − N) + N`.
pub fn shift_perm(w: &Permutation, n: usize) -> Permutation {
    if w.is_identity() {
        return Permutation::identity();
    }
    let n32 = n as u32;
    let v = (1..=n32).chain(w.one_line().iter().map(|&x| x + n32)).collect();
    Permutation(v)
}

/// A finite word over the positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&x| x > 0));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rev(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The letters satisfying `keep`, in order.
    pub fn filtered(&self, keep: impl Fn(u32) -> bool) -> Word {
        Word(self.0.iter().copied().filter(|&x| keep(x)).collect())
    }

    /// Weight vector of length `n`: entry `j` counts occurrences of `j`.
    pub fn weight(&self, n: usize) -> Result<Vec<u32>> {
        let mut wt = vec![0u32; n];
        for &x in &self.0 {
            *wt
                .get_mut(x as usize - 1)
                .ok_or(Error::EntryExceedsN { entry: x, n })? += 1;
        }
        Ok(wt)
    }

    pub fn push(&mut self, x: u32) {
        self.0.push(x);
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for Word {
    fn from(a: [u32; N]) -> Self {
        Word::new(a.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

/// `[a]_H`.
pub fn hecke_eval(a: &Word) -> Permutation {
    a.letters()
        .iter()
        .fold(Permutation::identity(), |w, &j| w.hecke_act(j))
}

pub fn is_hecke_word(a: &Word, w: &Permutation) -> bool {
    hecke_eval(a) == *w
}

pub fn is_reduced(a: &Word) -> bool {
    coxeter_length(&hecke_eval(a)) == a.len()
}

/// A pair of equal-length words `(a, i)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompatiblePair {
    a: Word,
    i: Word,
}

impl CompatiblePair {
    /// Validates equal lengths, weakly increasing `i`, and strict descents of
    /// `a` on plateaus of `i`.
    pub fn new(a: Word, i: Word) -> Result<Self> {
        if a.len() != i.len() {
            return Err(Error::invalid("compatible pair", "words differ in length"));
        }
        for j in 1..a.len() {
            let (i0, i1) = (i.letters()[j - 1], i.letters()[j]);
            if i0 > i1 {
                return Err(Error::invalid("compatible pair", "i is not weakly increasing"));
            }
            if i0 == i1 && a.letters()[j - 1] <= a.letters()[j] {
                return Err(Error::invalid(
                    "compatible pair",
                    "equal i-letters require a strict descent in a",
                ));
            }
        }
        Ok(CompatiblePair { a, i })
    }

    pub fn empty() -> Self {
        CompatiblePair::default()
    }

    pub fn a(&self) -> &Word {
        &self.a
    }

    pub fn i(&self) -> &Word {
        &self.i
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `i_j ≤ a_j` for every position.
    pub fn is_bounded(&self) -> bool {
        self.a.letters().iter().zip(self.i.letters()).all(|(a, i)| i <= a)
    }

    /// The subpair at the given positions (kept in order).
    pub fn restrict(&self, positions: impl Fn(usize, u32) -> bool) -> CompatiblePair {
        let (mut a, mut i) = (Vec::new(), Vec::new());
        for (j, (&x, &y)) in self.a.letters().iter().zip(self.i.letters()).enumerate() {
            if positions(j, x) {
                a.push(x);
                i.push(y);
            }
        }
        CompatiblePair::new(Word(a), Word(i)).expect("subpairs of compatible pairs are compatible")
    }
}

impl fmt::Debug for CompatiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CompatiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.i)
    }
}

/// Which compatible pairs to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// `i_j ≤ a_j` everywhere.
    Bounded,
    /// Every entry of `i` is at most the given `n`.
    CapI(u32),
}

/// Every compatible pair `(a, i)` with `[a]_H = w` allowed by `mode`, in
/// lexicographic order of `(i, a)` steps.
pub fn enumerate_compatible_pairs(w: &Permutation, mode: PairMode) -> Vec<CompatiblePair> {
    let max_letter = w.support().saturating_sub(1) as u32;
    let max_i = match mode {
        PairMode::Bounded => max_letter,
        PairMode::CapI(n) => n,
    };
    let mut out = Vec::new();
    let mut a = Vec::new();
    let mut i = Vec::new();
    pairs_dfs(w, mode, max_letter, max_i, &Permutation::identity(), &mut a, &mut i, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn pairs_dfs(
    w: &Permutation,
    mode: PairMode,
    max_letter: u32,
    max_i: u32,
    cur: &Permutation,
    a: &mut Vec<u32>,
    i: &mut Vec<u32>,
    out: &mut Vec<CompatiblePair>,
) {
    if cur == w {
        out.push(CompatiblePair {
            a: Word(a.clone()),
            i: Word(i.clone()),
        });
    }
    let i_lo = i.last().copied().unwrap_or(1);
    for iv in i_lo..=max_i {
        let plateau_cap = match (i.last(), a.last()) {
            (Some(&li), Some(&la)) if li == iv => la - 1,
            _ => max_letter,
        };
        let a_lo = match mode {
            PairMode::Bounded => iv,
            PairMode::CapI(_) => 1,
        };
        for av in a_lo..=plateau_cap {
            let next = cur.hecke_act(av);
            if !next.bruhat_leq(w) {
                continue;
            }
            a.push(av);
            i.push(iv);
            pairs_dfs(w, mode, max_letter, max_i, &next, a, i, out);
            a.pop();
            i.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn hecke_eval_examples() {
        let a = Word::from([4, 2, 1, 4, 3, 3]);
        assert_eq!(hecke_eval(&a), hecke_eval(&Word::from([2, 1, 4, 3])));
        assert_eq!(hecke_eval(&a), perm(&[2, 4, 1, 5, 3]));
        assert_eq!(hecke_eval(&Word::empty()), Permutation::identity());
        assert_eq!(hecke_eval(&Word::from([1, 1])), Permutation::simple(1));
        assert!(is_hecke_word(&Word::empty(), &Permutation::identity()));
        assert!(!is_hecke_word(&Word::from([1, 1]), &Permutation::simple(2)));
    }

    #[test]
    fn reduced_words() {
        assert!(is_reduced(&Word::from([2, 1, 4, 3])));
        assert!(!is_reduced(&Word::from([1, 1])));
        assert!(is_reduced(&Word::from([1, 2, 1])));
    }

    #[test]
    fn lengths_and_shifts() {
        assert_eq!(coxeter_length(&Permutation::identity()), 0);
        assert_eq!(coxeter_length(&perm(&[2, 1, 4, 3])), 2);
        assert_eq!(coxeter_length(&perm(&[1, 2, 3, 4, 5, 8, 7, 6])), 3);
        let w = perm(&[3, 2, 1]);
        assert_eq!(shift_perm(&w, 5), perm(&[1, 2, 3, 4, 5, 8, 7, 6]));
        assert_eq!(shift_perm(&w, 0), w);
        assert_eq!(perm(&[1, 2, 3]), Permutation::identity());
    }

    #[test]
    fn pair_examples() {
        let bad = CompatiblePair::new(Word::from([4, 2, 1, 4, 3, 3]), Word::from([1, 1, 1, 2, 2, 4]))
            .unwrap();
        assert!(!bad.is_bounded());
        let good = CompatiblePair::new(Word::from([4, 2, 1, 4, 3, 3]), Word::from([1, 1, 1, 2, 2, 3]))
            .unwrap();
        assert!(good.is_bounded());
        let w_inv = perm(&[2, 4, 1, 5, 3]);
        assert!(enumerate_compatible_pairs(&w_inv, PairMode::Bounded).contains(&good));
        assert_eq!(
            enumerate_compatible_pairs(&Permutation::identity(), PairMode::Bounded),
            vec![CompatiblePair::empty()]
        );
        assert_eq!(
            enumerate_compatible_pairs(&Permutation::simple(1), PairMode::CapI(1)),
            vec![CompatiblePair::new(Word::from([1]), Word::from([1])).unwrap()]
        );
        assert!(CompatiblePair::new(Word::from([1, 2]), Word::from([1, 1])).is_err());
    }

    #[test]
    fn bruhat() {
        let id = Permutation::identity();
        let s1 = Permutation::simple(1);
        let w0 = perm(&[3, 2, 1]);
        assert!(id.bruhat_leq(&s1));
        assert!(s1.bruhat_leq(&w0));
        assert!(!w0.bruhat_leq(&s1));
        assert!(!Permutation::simple(2).bruhat_leq(&s1));
    }
}
