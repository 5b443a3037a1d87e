//! Weak compositions, partitions, shapes and keys.

use std::fmt;

use crate::error::{Error, Result};
use crate::setops::FinSet;

/// A sequence of `n` non-negative integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    pub fn new(entries: Vec<u32>) -> Self {
        WeakComposition(entries)
    }

    pub fn zero(n: usize) -> Self {
        WeakComposition(vec![0; n])
    }

    /// Number of parts `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `|α|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// 1-based entry `α_i`; zero beyond the length.
    pub fn get(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|j| self.0.get(j).copied())
            .unwrap_or(0)
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// All weak compositions of length `n` with `|α| = size`, in lexicographic
    /// order.
    pub fn all_of_size(n: usize, size: u32) -> Vec<WeakComposition> {
        fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
            if cur.len() + 1 == n {
                cur.push(left);
                out.push(WeakComposition(cur.clone()));
                cur.pop();
                return;
            }
            for v in 0..=left {
                cur.push(v);
                go(n, left - v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if size == 0 {
                out.push(WeakComposition(Vec::new()));
            }
            return out;
        }
        go(n, size, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(v: Vec<u32>) -> Self {
        WeakComposition(v)
    }
}

impl<const N: usize> From<[u32; N]> for WeakComposition {
    fn from(a: [u32; N]) -> Self {
        WeakComposition(a.to_vec())
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition", "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition", "parts must weakly decrease"));
        }
        Ok(Partition(parts))
    }

    /// Drops trailing zeros; the input must be weakly decreasing.
    pub(crate) fn from_row_lengths(mut rows: Vec<usize>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        Partition(rows)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `r` (0-based), zero beyond the last row.
    pub fn row(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths (the conjugate partition).
    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Every partition fitting inside a `rows × cols` box.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::from_row_lengths(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                go(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition with at most `max_cells` cells.
    pub fn all_up_to_size(max_cells: usize) -> Vec<Partition> {
        Partition::all_in_box(max_cells, max_cells)
            .into_iter()
            .filter(|p| p.size() <= max_cells)
            .collect()
    }
}

/// A skew shape `outer / inner`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Shape {
    outer: Partition,
    inner: Partition,
}

impl Shape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::invalid("shape", "inner diagram not contained in outer"));
        }
        Ok(Shape { outer, inner })
    }

    pub fn normal(outer: Partition) -> Self {
        Shape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_normal(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        c < self.outer.row(r) && c >= self.inner.row(r)
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len()).flat_map(move |r| (self.inner.row(r)..self.outer.row(r)).map(move |c| (r, c)))
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// A key: strictly increasing columns with `K_1 ⊇ K_2 ⊇ ⋯`, stored column-wise.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Key {
    columns: Vec<FinSet>,
}

impl Key {
    pub fn from_columns(columns: Vec<FinSet>) -> Result<Self> {
        if columns.iter().any(FinSet::is_empty) {
            return Err(Error::invalid("key", "empty column"));
        }
        if columns.windows(2).any(|w| !w[1].is_subset(&w[0])) {
            return Err(Error::invalid("key", "columns are not nested"));
        }
        Ok(Key { columns })
    }

    /// Builds a key from its rows (top to bottom), each read left to right.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let columns = (0..shape.row(0))
            .map(|c| {
                let col: Vec<u32> = rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect();
                if col.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::invalid("key", "column is not strictly increasing"));
                }
                Ok(FinSet::from_sorted(col))
            })
            .collect::<Result<Vec<_>>>()?;
        Key::from_columns(columns)
    }

    pub fn columns(&self) -> &[FinSet] {
        &self.columns
    }

    pub fn column(&self, c: usize) -> Option<&FinSet> {
        self.columns.get(c)
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Column lengths, i.e. the conjugate of the shape.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(FinSet::len).collect()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.column_lengths()).conjugate()
    }

    /// Row view: row `r` lists the `r`-th smallest entry of each column.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let height = self.columns.first().map_or(0, FinSet::len);
        (1..=height)
            .map(|r| self.columns.iter().map_while(|col| col.nth(r)).collect())
            .collect()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.columns.first().and_then(FinSet::max)
    }

    pub fn num_cells(&self) -> usize {
        self.columns.iter().map(FinSet::len).sum()
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.columns.iter()).finish()
    }
}

/// `key(α)`: column `c` is `{i : α_i ≥ c}`.
pub fn key_of(alpha: &WeakComposition) -> Key {
    let width = alpha.entries().iter().copied().max().unwrap_or(0);
    let columns = (1..=width)
        .map(|c| {
            alpha
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, &a)| a >= c)
                .map(|(i, _)| i as u32 + 1)
                .collect()
        })
        .collect();
    Key { columns }
}

/// `wt(K)`: entry `i` counts occurrences of `i`. Entries must lie in `[n]`.
pub fn wt_key(k: &Key, n: usize) -> Result<WeakComposition> {
    let mut wt = vec![0u32; n];
    for x in k.columns.iter().flat_map(FinSet::iter) {
        let slot = wt
            .get_mut((x as usize).wrapping_sub(1))
            .ok_or(Error::EntryExceedsN { entry: x, n })?;
        *slot += 1;
    }
    Ok(WeakComposition(wt))
}

/// `cap_n`: in each column, entries above `n` are replaced by the largest
/// values of `[n]` missing from that column.
pub fn cap_n(k: &Key, n: usize) -> Result<Key> {
    let columns = k
        .columns
        .iter()
        .map(|col| cap_column(col, n))
        .collect::<Result<Vec<_>>>()?;
    Key::from_columns(columns)
}

fn cap_column(col: &FinSet, n: usize) -> Result<FinSet> {
    if col.len() > n {
        return Err(Error::ColumnTooLong { len: col.len(), n });
    }
    let n = n as u32;
    let kept = col.at_most(n);
    let mut need = col.len() - kept.len();
    let mut out = kept.clone().into_vec();
    let mut v = n;
    while need > 0 {
        if !kept.contains(v) {
            out.push(v);
            need -= 1;
        }
        v -= 1;
    }
    Ok(out.into_iter().collect())
}

/// Entrywise comparison `a ≤ b` of two keys of identical shape; keys of
/// differing shape are incomparable.
pub fn key_leq(a: &Key, b: &Key) -> bool {
    a.columns.len() == b.columns.len()
        && a.columns.iter().zip(&b.columns).all(|(ca, cb)| {
            ca.len() == cb.len() && ca.iter().zip(cb.iter()).all(|(x, y)| x <= y)
        })
}

/// Decreasing sort of the nonzero entries of `α`.
pub fn sorted_partition(alpha: &WeakComposition) -> Partition {
    let mut parts: Vec<usize> = alpha
        .entries()
        .iter()
        .filter(|&&a| a > 0)
        .map(|&a| a as usize)
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(cols: &[&[u32]]) -> Key {
        Key::from_columns(cols.iter().map(|c| c.iter().copied().collect()).collect()).unwrap()
    }

    #[test]
    fn key_of_examples() {
        let k = key_of(&WeakComposition::from([2, 1, 4, 0, 2]));
        assert_eq!(k, key(&[&[1, 2, 3, 5], &[1, 3, 5], &[3], &[3]]));
        assert_eq!(k.rows(), vec![vec![1, 1, 3, 3], vec![2, 3], vec![3, 5], vec![5]]);
        assert!(key_of(&WeakComposition::zero(4)).is_empty());
        assert_eq!(key_of(&WeakComposition::from([1, 0, 2])), key(&[&[1, 3], &[3]]));
    }

    #[test]
    fn wt_key_examples() {
        let k = key(&[&[1, 2, 3], &[3], &[3], &[3]]);
        assert_eq!(wt_key(&k, 3).unwrap(), WeakComposition::from([1, 1, 4]));
        assert_eq!(wt_key(&Key::default(), 3).unwrap(), WeakComposition::zero(3));
        let alpha = WeakComposition::from([2, 1, 4, 0, 2]);
        assert_eq!(wt_key(&key_of(&alpha), 5).unwrap(), alpha);
        assert_eq!(
            wt_key(&key(&[&[1, 4]]), 3),
            Err(Error::EntryExceedsN { entry: 4, n: 3 })
        );
    }

    #[test]
    fn cap_examples() {
        let k = key(&[&[1, 4, 6, 8, 9]]);
        assert_eq!(cap_n(&k, 6).unwrap(), key(&[&[1, 3, 4, 5, 6]]));
        let small = key(&[&[1, 2], &[2]]);
        assert_eq!(cap_n(&small, 3).unwrap(), small);
        let k = key(&[&[1, 3, 7], &[1, 3], &[3], &[3]]);
        let capped = cap_n(&k, 3).unwrap();
        assert_eq!(capped, key(&[&[1, 2, 3], &[1, 3], &[3], &[3]]));
        assert_eq!(wt_key(&capped, 3).unwrap(), WeakComposition::from([2, 1, 4]));
        assert_eq!(
            cap_n(&key(&[&[1, 2, 3]]), 2),
            Err(Error::ColumnTooLong { len: 3, n: 2 })
        );
    }

    #[test]
    fn key_leq_examples() {
        let k = key(&[&[1, 3], &[3]]);
        assert!(key_leq(&k, &k));
        assert!(!key_leq(&key(&[&[3], &[3]]), &key(&[&[1], &[1]])));
        assert!(key_leq(&key(&[&[1], &[1]]), &key(&[&[3], &[3]])));
        assert!(!key_leq(&key(&[&[1]]), &key(&[&[1], &[1]])));
    }

    #[test]
    fn sorted_partition_examples() {
        assert_eq!(sorted_partition(&WeakComposition::from([0, 2, 1])).parts(), &[2, 1]);
        assert!(sorted_partition(&WeakComposition::zero(3)).is_empty());
        assert_eq!(sorted_partition(&WeakComposition::from([1, 0, 2])).parts(), &[2, 1]);
    }

    #[test]
    fn key_rejects_non_nested() {
        assert!(Key::from_columns(vec![[1u32, 2].into(), [3u32].into()]).is_err());
        assert!(Key::from_rows(&[vec![1, 1], vec![3]]).is_ok());
        assert!(Key::from_rows(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn compositions_of_size() {
        let all = WeakComposition::all_of_size(3, 2);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|a| a.size() == 2 && a.len() == 3));
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(Partition::all_up_to_size(4).len(), 12);
    }
}
