//! Finite sets of positive integers and the greedy set-matching operators
//! that drive every left-key computation.

use std::fmt;

use crate::error::{Error, Result};

/// A finite set of positive integers, kept sorted ascending.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSet(Vec<u32>);

impl FinSet {
    pub fn new() -> Self {
        FinSet(Vec::new())
    }

    /// `v` must already be strictly increasing.
    pub(crate) fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        FinSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u32> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    /// The `i`-th smallest element, 1-based as in `S(i)`.
    pub fn nth(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|j| self.0.get(j).copied())
    }

    pub fn min(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    /// `S ⊔ x`; inserting an existing element is a no-op.
    pub fn with(&self, x: u32) -> FinSet {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&x) {
            v.insert(pos, x);
        }
        FinSet(v)
    }

    /// `S − x`; removing an absent element is a no-op.
    pub fn without(&self, x: u32) -> FinSet {
        FinSet(self.0.iter().copied().filter(|&y| y != x).collect())
    }

    pub fn less_than(&self, x: u32) -> FinSet {
        FinSet(self.0.iter().copied().take_while(|&y| y < x).collect())
    }

    pub fn at_most(&self, x: u32) -> FinSet {
        FinSet(self.0.iter().copied().take_while(|&y| y <= x).collect())
    }

    pub fn greater_than(&self, x: u32) -> FinSet {
        FinSet(self.0.iter().copied().filter(|&y| y > x).collect())
    }

    pub fn at_least(&self, x: u32) -> FinSet {
        FinSet(self.0.iter().copied().filter(|&y| y >= x).collect())
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &FinSet) -> FinSet {
        FinSet(self.iter().filter(|&x| !other.contains(x)).collect())
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Elements are sorted and deduplicated.
impl FromIterator<u32> for FinSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut v: Vec<u32> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        FinSet(v)
    }
}

impl<const N: usize> From<[u32; N]> for FinSet {
    fn from(a: [u32; N]) -> Self {
        a.into_iter().collect()
    }
}

/// `T ◁ S`: each `s ∈ S`, largest first, picks the largest unpicked `t ∈ T`
/// with `t < s`.
pub fn triangle_left(t: &FinSet, s: &FinSet) -> FinSet {
    // Picks made in decreasing order of s are themselves decreasing, so the
    // unpicked candidates below s are exactly a prefix of T minus a suffix.
    let tv = t.as_slice();
    let mut picked = Vec::with_capacity(s.len().min(t.len()));
    // `hi` is one past the largest index still eligible.
    let mut hi = tv.len();
    for x in s.iter().rev() {
        let below = tv[..hi].partition_point(|&y| y < x);
        if below == 0 {
            break;
        }
        picked.push(tv[below - 1]);
        hi = below - 1;
    }
    picked.reverse();
    FinSet::from_sorted(picked)
}

/// The recursive form of `T ◁ S`:
/// `m ⊔ (T_{<m} ◁ (S − max S))` with `m = max(T_{<max S})`.
pub fn triangle_left_recursive(t: &FinSet, s: &FinSet) -> FinSet {
    let (Some(smax), Some(tmin)) = (s.max(), t.min()) else {
        return FinSet::new();
    };
    if smax <= tmin {
        return FinSet::new();
    }
    let m = FinSet::max(&t.less_than(smax)).expect("max(S) > min(T)");
    triangle_left_recursive(&t.less_than(m), &s.without(smax)).with(m)
}

/// Right-to-left fold `P_1 ◁ (P_2 ◁ (⋯ ◁ P_k))`.
pub fn triangle_chain(columns: &[FinSet]) -> Result<FinSet> {
    let (last, rest) = columns.split_last().ok_or(Error::EmptyChain)?;
    Ok(rest
        .iter()
        .rev()
        .fold(last.clone(), |acc, col| triangle_left(col, &acc)))
}

/// `T ⊵ S`: each `s ∈ S`, smallest first, picks the smallest unpicked
/// `t ∈ T` with `t ≥ s`.
pub fn triangle_right_geq(t: &FinSet, s: &FinSet) -> FinSet {
    let tv = t.as_slice();
    let mut picked = Vec::with_capacity(s.len().min(t.len()));
    let mut lo = 0;
    for x in s.iter() {
        let at = lo + tv[lo..].partition_point(|&y| y < x);
        if at == tv.len() {
            break;
        }
        picked.push(tv[at]);
        lo = at + 1;
    }
    FinSet::from_sorted(picked)
}

/// Right-to-left fold `T_1 ⊵ (T_2 ⊵ (⋯ ⊵ T_k))`.
pub fn triangle_right_chain(columns: &[FinSet]) -> Result<FinSet> {
    let (last, rest) = columns.split_last().ok_or(Error::EmptyChain)?;
    Ok(rest
        .iter()
        .rev()
        .fold(last.clone(), |acc, col| triangle_right_geq(col, &acc)))
}

/// `T ⪯ S`: `|T| ≥ |S|` and `T(i) < S(i)` for every `i ≤ |S|`.
pub fn dominates(t: &FinSet, s: &FinSet) -> bool {
    t.len() >= s.len() && t.iter().zip(s.iter()).all(|(a, b)| a < b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<const N: usize>(a: [u32; N]) -> FinSet {
        FinSet::from(a)
    }

    #[test]
    fn triangle_left_examples() {
        let t = set([1, 3, 4, 6, 7, 9]);
        assert_eq!(triangle_left(&t, &set([2, 3, 7, 8])), set([1, 6, 7]));
        assert_eq!(triangle_left(&t, &set([2, 4, 7, 8])), set([1, 3, 6, 7]));
        assert_eq!(triangle_left(&t, &FinSet::new()), FinSet::new());
        assert_eq!(triangle_left(&FinSet::new(), &t), FinSet::new());
    }

    #[test]
    fn not_associative() {
        let (a, b, c) = (set([1, 2]), set([2, 3]), set([3]));
        assert_eq!(triangle_left(&triangle_left(&a, &b), &c), set([2]));
        assert_eq!(triangle_left(&a, &triangle_left(&b, &c)), set([1]));
        assert_eq!(triangle_chain(&[a, b, c]).unwrap(), set([1]));
    }

    #[test]
    fn chain_cases() {
        assert_eq!(triangle_chain(&[set([4, 5])]).unwrap(), set([4, 5]));
        assert_eq!(triangle_chain(&[]), Err(Error::EmptyChain));
        let cols = [set([1, 3, 7]), set([4, 7]), set([6]), set([7])];
        assert_eq!(triangle_chain(&cols).unwrap(), set([3]));
    }

    #[test]
    fn triangle_right_examples() {
        assert_eq!(
            triangle_right_geq(&set([1, 4, 5, 6, 7]), &set([2, 3, 7])),
            set([4, 5, 7])
        );
        assert_eq!(triangle_right_geq(&set([1, 2]), &FinSet::new()), FinSet::new());
        assert_eq!(triangle_right_geq(&set([3, 4, 6]), &set([2, 5])), set([3, 6]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&FinSet::new(), &FinSet::new()));
        assert!(dominates(&set([1, 2]), &set([2, 3])));
        assert!(!dominates(&set([2]), &set([2])));
        assert!(!dominates(&set([1]), &set([2, 3])));
    }

    #[test]
    fn recursive_agrees_exhaustively_on_small_sets() {
        let subsets: Vec<FinSet> = (0u32..64)
            .map(|mask| (1..=6).filter(|i| mask >> (i - 1) & 1 == 1).collect())
            .collect();
        for t in &subsets {
            for s in &subsets {
                assert_eq!(triangle_left(t, s), triangle_left_recursive(t, s));
            }
        }
    }

    #[test]
    fn set_queries() {
        let s = set([2, 5, 7, 9]);
        assert_eq!(s.nth(1), Some(2));
        assert_eq!(s.nth(4), Some(9));
        assert_eq!(s.nth(0), None);
        assert_eq!(s.less_than(7), set([2, 5]));
        assert_eq!(s.at_most(7), set([2, 5, 7]));
        assert_eq!(s.greater_than(7), set([9]));
        assert_eq!(s.at_least(7), set([7, 9]));
        assert_eq!(s.with(6).without(2), set([5, 6, 7, 9]));
        assert_eq!(s.to_string(), "{2,5,7,9}");
    }
}
