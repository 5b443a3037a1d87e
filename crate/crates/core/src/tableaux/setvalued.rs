use std::fmt;

use crate::combi::{Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::setops::FinSet;

/// Reverse semistandard tableau: rows weakly decrease, columns strictly
/// decrease.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Rssyt {
    rows: Vec<Vec<u32>>,
}

impl Rssyt {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let err = |reason: &str| Err(Error::invalid("RSSYT", reason));
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return err("not a partition shape");
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return err("entries must be positive");
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] < w[1])) {
            return err("rows must weakly decrease");
        }
        if rows
            .windows(2)
            .any(|w| w[1].iter().zip(&w[0]).any(|(below, above)| below >= above))
        {
            return err("columns must strictly decrease");
        }
        Ok(Rssyt { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.iter().map(Vec::len).collect())
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn column(&self, c: usize) -> FinSet {
        self.rows.iter().map_while(|r| r.get(c).copied()).collect()
    }

    pub fn columns(&self) -> Vec<FinSet> {
        (0..self.num_columns()).map(|c| self.column(c)).collect()
    }

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

impl fmt::Debug for Rssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// Reverse set-valued tableau: nonempty set-valued cells with
/// `min T(r,c) ≥ max T(r,c+1)` and `min T(r,c) > max T(r+1,c)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Rsvt {
    rows: Vec<Vec<FinSet>>,
}

impl Rsvt {
    pub fn new(rows: Vec<Vec<FinSet>>) -> Result<Self> {
        let t = Rsvt { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(rows: Vec<Vec<FinSet>>) -> Self {
        let t = Rsvt { rows };
        debug_assert!(t.validate().is_ok());
        t
    }

    pub fn empty() -> Self {
        Rsvt::default()
    }

    fn validate(&self) -> Result<()> {
        let err = |reason: &str| Err(Error::invalid("RSVT", reason));
        let rows = &self.rows;
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return err("not a partition shape");
        }
        if rows.iter().flatten().any(|c| c.is_empty() || c.min() == Some(0)) {
            return err("cells must be nonempty sets of positive integers");
        }
        for row in rows {
            if row.windows(2).any(|w| FinSet::min(&w[0]) < FinSet::max(&w[1])) {
                return err("horizontal neighbours violate min(left) >= max(right)");
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| above.min() <= below.max()) {
                return err("vertical neighbours violate min(above) > max(below)");
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<FinSet>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.rows.get(r).map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&FinSet> {
        self.rows.get(r).and_then(|row| row.get(c))
    }

    pub fn min_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().filter_map(FinSet::min).min()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().filter_map(FinSet::max).max()
    }

    /// `L(T)`: keep the largest element of each cell.
    pub fn flatten_l(&self) -> Rssyt {
        Rssyt {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.max().expect("nonempty cell")).collect())
                .collect(),
        }
    }

    /// Each membership `i ∈ T(r,c)` counts once; entries must lie in `[n]`.
    pub fn weight(&self, n: usize) -> Result<WeakComposition> {
        let mut wt = vec![0u32; n];
        for x in self.rows.iter().flatten().flat_map(FinSet::iter) {
            *wt
                .get_mut(x as usize - 1)
                .ok_or(Error::EntryExceedsN { entry: x, n })? += 1;
        }
        Ok(WeakComposition::new(wt))
    }

    /// Total number of memberships, `|wt(T)|`.
    pub fn total_size(&self) -> usize {
        self.rows.iter().flatten().map(FinSet::len).sum()
    }

    /// Cell holding the minimum entry, rightmost among ties.
    pub fn rightmost_min_cell(&self) -> Option<(usize, usize, u32)> {
        let q = self.min_entry()?;
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if cell.contains(q) && best.is_none_or(|(_, bc)| c > bc) {
                    best = Some((r, c));
                }
            }
        }
        best.map(|(r, c)| (r, c, q))
    }

    /// Removes `x` from cell `(r, c)`, deleting the cell if it becomes empty.
    pub(crate) fn remove_entry(&self, r: usize, c: usize, x: u32) -> Rsvt {
        let mut rows = self.rows.clone();
        let cell = rows[r][c].without(x);
        if cell.is_empty() {
            rows[r].remove(c);
            if rows[r].is_empty() {
                rows.remove(r);
            }
        } else {
            rows[r][c] = cell;
        }
        Rsvt { rows }
    }

    /// Adds `x` to the existing cell `(r, c)`, or creates that cell as `{x}`.
    pub(crate) fn add_entry(&self, r: usize, c: usize, x: u32) -> Result<Rsvt> {
        let mut rows = self.rows.clone();
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = rows
            .get_mut(r)
            .ok_or_else(|| Error::invalid("RSVT", "new cell is not addable"))?;
        if c == row.len() {
            row.push(FinSet::from([x]));
        } else if let Some(cell) = row.get_mut(c) {
            *cell = cell.with(x);
        } else {
            return Err(Error::invalid("RSVT", "new cell is not addable"));
        }
        Rsvt::new(rows)
    }
}

impl fmt::Debug for Rsvt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.iter().rev().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rsvt(rows: &[&[&[u32]]]) -> Rsvt {
        Rsvt::new(
            rows.iter()
                .map(|r| r.iter().map(|c| c.iter().copied().collect()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn flatten_example() {
        let t = rsvt(&[&[&[6], &[5, 3], &[3], &[3, 2, 1]], &[&[4], &[2, 1], &[1]], &[&[3, 2]]]);
        let l = t.flatten_l();
        assert_eq!(l.rows(), &[vec![6, 5, 3, 3], vec![4, 2, 1], vec![3]]);
        assert_eq!(l.shape(), t.shape());
    }

    #[test]
    fn weights() {
        let t = rsvt(&[&[&[3], &[2]], &[&[2]]]);
        assert_eq!(t.weight(3).unwrap(), WeakComposition::from([0, 2, 1]));
        let t = rsvt(&[&[&[3], &[2, 1]], &[&[2, 1]]]);
        assert_eq!(t.weight(3).unwrap(), WeakComposition::from([2, 2, 1]));
        assert_eq!(Rsvt::empty().weight(3).unwrap(), WeakComposition::zero(3));
        assert_eq!(t.rightmost_min_cell(), Some((0, 1, 1)));
    }

    #[test]
    fn validation() {
        assert!(Rsvt::new(vec![vec![FinSet::from([1]), FinSet::from([2])]]).is_err());
        assert!(Rsvt::new(vec![vec![FinSet::from([2])], vec![FinSet::from([2])]]).is_err());
        assert!(Rssyt::new(vec![vec![3, 3], vec![1]]).is_ok());
        assert!(Rssyt::new(vec![vec![3, 3], vec![3]]).is_err());
    }
}
