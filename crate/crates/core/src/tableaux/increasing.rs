use std::fmt;

use crate::combi::{Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::hecke::Word;
use crate::setops::FinSet;

/// A filling of a Young diagram whose rows and columns strictly increase.
/// Rows and columns are 0-based.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingTableau {
    rows: Vec<Vec<u32>>,
}

impl IncreasingTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = IncreasingTableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let t = IncreasingTableau { rows };
        debug_assert!(t.validate().is_ok(), "{t:?}");
        t
    }

    pub fn empty() -> Self {
        IncreasingTableau::default()
    }

    /// Builds a tableau from its column sets, left to right.
    pub fn from_columns(columns: &[FinSet]) -> Result<Self> {
        let height = columns.first().map_or(0, FinSet::len);
        let rows = (1..=height)
            .map(|r| columns.iter().map_while(|c| c.nth(r)).collect())
            .collect();
        let t = IncreasingTableau::new(rows)?;
        if t.columns() != columns {
            return Err(Error::invalid("increasing tableau", "column lengths must weakly decrease"));
        }
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let err = |reason: &str| Err(Error::invalid("increasing tableau", reason));
        if self.rows.iter().any(Vec::is_empty) {
            return err("empty row");
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return err("row lengths must weakly decrease");
        }
        if self.rows.iter().flatten().any(|&x| x == 0) {
            return err("entries must be positive");
        }
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return err("rows must strictly increase");
        }
        for w in self.rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return err("columns must strictly increase");
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.rows.get(r).map_or(0, Vec::len)
    }

    pub fn column_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() > c).count()
    }

    /// `|P|`, the number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    /// Column `c` as a set.
    pub fn column(&self, c: usize) -> FinSet {
        FinSet::from_sorted(self.rows.iter().map_while(|r| r.get(c).copied()).collect())
    }

    /// All column sets, left to right.
    pub fn columns(&self) -> Vec<FinSet> {
        (0..self.num_columns()).map(|c| self.column(c)).collect()
    }

    /// Every value occurring in the tableau.
    pub fn entries(&self) -> FinSet {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().max()
    }

    /// Neither the cell below nor the cell to the right is present.
    pub fn is_outer_cell(&self, r: usize, c: usize) -> bool {
        c < self.row_len(r) && c + 1 == self.row_len(r) && self.row_len(r + 1) <= c
    }

    pub fn outer_cells(&self) -> Vec<(usize, usize)> {
        (0..self.num_rows())
            .map(|r| (r, self.row_len(r) - 1))
            .filter(|&(r, c)| self.is_outer_cell(r, c))
            .collect()
    }

    /// Columns left to right, each read bottom to top.
    pub fn reading_word(&self) -> Word {
        let mut w = Vec::with_capacity(self.size());
        for c in 0..self.num_columns() {
            w.extend(self.column(c).iter().rev());
        }
        Word::new(w)
    }

    /// The cells with entries strictly below `bound`.
    pub fn restrict_below(&self, bound: u32) -> IncreasingTableau {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().take_while(|&x| x < bound).collect::<Vec<_>>())
            .take_while(|r| !r.is_empty())
            .collect();
        IncreasingTableau::new_unchecked(rows)
    }

    /// `P_{←j}`: the first `j` columns.
    pub fn first_columns(&self, j: usize) -> IncreasingTableau {
        let rows = self.rows.iter().map(|r| r[..r.len().min(j)].to_vec()).collect();
        IncreasingTableau::new_unchecked(if j == 0 { Vec::new() } else { rows })
    }

    /// `P_{r↓}`: rows `r, r+1, …` (0-based `r`).
    pub fn rows_from(&self, r: usize) -> IncreasingTableau {
        IncreasingTableau::new_unchecked(self.rows.get(r..).unwrap_or_default().to_vec())
    }

    /// Multiplicity vector; entries must lie in `[n]`.
    pub fn weight(&self, n: usize) -> Result<WeakComposition> {
        let mut wt = vec![0u32; n];
        for &x in self.rows.iter().flatten() {
            *wt
                .get_mut(x as usize - 1)
                .ok_or(Error::EntryExceedsN { entry: x, n })? += 1;
        }
        Ok(WeakComposition::new(wt))
    }
}

impl fmt::Debug for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn reading_words() {
        assert_eq!(tab(&[&[1, 4, 6, 7], &[3], &[7]]).reading_word(), Word::from([7, 3, 1, 4, 6, 7]));
        assert_eq!(
            tab(&[&[1, 4, 6, 7], &[3, 7], &[7]]).reading_word(),
            Word::from([7, 3, 1, 7, 4, 6, 7])
        );
        assert_eq!(
            tab(&[&[1, 4, 6, 7], &[3, 6], &[6, 7]]).reading_word(),
            Word::from([6, 3, 1, 7, 6, 4, 6, 7])
        );
        assert!(IncreasingTableau::empty().reading_word().is_empty());
    }

    #[test]
    fn restriction() {
        let p = tab(&[&[1, 4, 6, 7], &[3, 7], &[7]]);
        assert_eq!(p.restrict_below(5), tab(&[&[1, 4], &[3]]));
        assert_eq!(p.restrict_below(100), p);
        assert_eq!(p.restrict_below(1), IncreasingTableau::empty());
    }

    #[test]
    fn validation() {
        assert!(IncreasingTableau::new(vec![vec![1, 1]]).is_err());
        assert!(IncreasingTableau::new(vec![vec![1, 2], vec![2]]).is_ok());
        assert!(IncreasingTableau::new(vec![vec![2], vec![1]]).is_err());
        assert!(IncreasingTableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn cells_and_columns() {
        let p = tab(&[&[1, 2, 3, 5], &[2, 5, 6], &[3, 6], &[6, 7], &[8]]);
        assert_eq!(p.outer_cells(), vec![(0, 3), (1, 2), (3, 1), (4, 0)]);
        assert!(!p.is_outer_cell(2, 1));
        assert_eq!(p.column(1), FinSet::from([2, 5, 6, 7]));
        assert_eq!(p.first_columns(1).rows(), &[vec![1], vec![2], vec![3], vec![6], vec![8]]);
        assert_eq!(p.rows_from(3), tab(&[&[6, 7], &[8]]));
        assert_eq!(IncreasingTableau::from_columns(&p.columns()).unwrap(), p);
    }
}
