use std::collections::BTreeSet;
use std::fmt;

use crate::combi::{Partition, Shape};
use crate::error::{Error, Result};
use crate::setops::FinSet;

/// A cell of a dotted skew tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dot {
    Num(u32),
    Bullet,
}

/// A skew filling by positive integers and `•`, increasing along rows and
/// columns for the order `⋯ < m < • < m+1 < ⋯` where `m` is the order
/// parameter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DottedSkewTableau {
    /// Row `r` occupies columns `inner[r] .. inner[r] + cells[r].len()`.
    inner: Vec<usize>,
    cells: Vec<Vec<Dot>>,
    order: u32,
}

impl DottedSkewTableau {
    /// `inner` and `cells` must have one entry per row; rows may be empty.
    pub fn new(inner: Vec<usize>, cells: Vec<Vec<Dot>>, order: u32) -> Result<Self> {
        if inner.len() != cells.len() {
            return Err(Error::invalid("dotted tableau", "inner offsets and rows differ in count"));
        }
        let t = DottedSkewTableau { inner, cells, order };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let err = |reason: &str| Err(Error::invalid("dotted tableau", reason));
        let outer: Vec<usize> = (0..self.cells.len()).map(|r| self.outer_row(r)).collect();
        if self.inner.windows(2).any(|w| w[0] < w[1]) || outer.windows(2).any(|w| w[0] < w[1]) {
            return err("not a skew shape");
        }
        if self.cells.iter().flatten().any(|d| *d == Dot::Num(0)) {
            return err("entries must be positive");
        }
        for r in 0..self.cells.len() {
            for c in self.inner[r]..outer[r] {
                let v = self.rank(self.get(r, c).expect("cell in range"));
                if let Some(right) = self.get(r, c + 1) {
                    if self.rank(right) <= v {
                        return err("rows must strictly increase");
                    }
                }
                if let Some(below) = self.get(r + 1, c) {
                    if self.rank(below) <= v {
                        return err("columns must strictly increase");
                    }
                }
            }
        }
        Ok(())
    }

    /// Position of a cell value in the order `⋯ < m < • < m+1 < ⋯`.
    fn rank(&self, d: Dot) -> u64 {
        match d {
            Dot::Num(v) => 2 * v as u64,
            Dot::Bullet => 2 * self.order as u64 + 1,
        }
    }

    pub fn order_param(&self) -> u32 {
        self.order
    }

    pub fn num_rows(&self) -> usize {
        self.cells.len()
    }

    pub fn inner_row(&self, r: usize) -> usize {
        self.inner.get(r).copied().unwrap_or(0)
    }

    pub fn outer_row(&self, r: usize) -> usize {
        self.inner.get(r).map_or(0, |&i| i + self.cells[r].len())
    }

    pub fn shape(&self) -> Shape {
        let outer = Partition::from_row_lengths((0..self.num_rows()).map(|r| self.outer_row(r)).collect());
        let inner = Partition::from_row_lengths(self.inner.clone());
        Shape::new(outer, inner).expect("validated skew shape")
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Dot> {
        let row = self.cells.get(r)?;
        c.checked_sub(self.inner[r]).and_then(|k| row.get(k)).copied()
    }

    fn set(&mut self, r: usize, c: usize, d: Dot) {
        let k = c - self.inner[r];
        self.cells[r][k] = d;
    }

    /// Cells `(r, c)` of the shape, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, Dot)> + '_ {
        self.cells.iter().enumerate().flat_map(move |(r, row)| {
            row.iter().enumerate().map(move |(k, &d)| (r, self.inner[r] + k, d))
        })
    }

    /// Numbers in column `c`, bullets ignored.
    pub fn column_numbers(&self, c: usize) -> FinSet {
        (0..self.num_rows())
            .filter_map(|r| match self.get(r, c) {
                Some(Dot::Num(v)) => Some(v),
                _ => None,
            })
            .collect()
    }

    /// Index one past the rightmost column holding a number.
    pub fn numeric_width(&self) -> usize {
        self.cells()
            .filter(|(_, _, d)| matches!(d, Dot::Num(_)))
            .map(|(_, c, _)| c + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn has_bullet(&self) -> bool {
        self.cells().any(|(_, _, d)| d == Dot::Bullet)
    }

    fn is_active(&self, d: Dot) -> bool {
        d == Dot::Bullet || d == Dot::Num(self.order)
    }

    /// One revKjdt move: every alternating ribbon of `m` and `•` with more
    /// than one cell is switched from type 1 to type 2; the order parameter
    /// drops by one.
    pub fn revkjdt_step(&self) -> Result<DottedSkewTableau> {
        if self.order == 0 {
            return Err(Error::ZeroOrderParam);
        }
        let mut out = self.clone();
        let mut seen = BTreeSet::new();
        for (r, c, d) in self.cells() {
            if !self.is_active(d) || seen.contains(&(r, c)) {
                continue;
            }
            let component = self.component(r, c);
            seen.extend(component.iter().copied());
            if component.len() > 1 {
                self.check_type1_ribbon(&component)?;
                for &(r, c) in &component {
                    let flipped = match self.get(r, c) {
                        Some(Dot::Bullet) => Dot::Num(self.order),
                        _ => Dot::Bullet,
                    };
                    out.set(r, c, flipped);
                }
            }
        }
        out.order -= 1;
        debug_assert!(out.validate().is_ok());
        Ok(out)
    }

    /// The literal simultaneous-replacement form of the same move: each `•`
    /// adjacent to an `m` becomes `m` and each `m` adjacent to a `•` becomes
    /// `•`.
    pub fn revkjdt_step_cellwise(&self) -> Result<DottedSkewTableau> {
        if self.order == 0 {
            return Err(Error::ZeroOrderParam);
        }
        let m = Dot::Num(self.order);
        let mut out = self.clone();
        for (r, c, d) in self.cells() {
            let other = match d {
                Dot::Bullet => m,
                x if x == m => Dot::Bullet,
                _ => continue,
            };
            if self.neighbours(r, c).any(|(rr, cc)| self.get(rr, cc) == Some(other)) {
                out.set(r, c, other);
            }
        }
        out.order -= 1;
        out.validate()?;
        Ok(out)
    }

    fn neighbours(&self, r: usize, c: usize) -> impl Iterator<Item = (usize, usize)> {
        let mut v = vec![(r + 1, c), (r, c + 1)];
        if r > 0 {
            v.push((r - 1, c));
        }
        if c > 0 {
            v.push((r, c - 1));
        }
        v.into_iter()
    }

    fn component(&self, r: usize, c: usize) -> BTreeSet<(usize, usize)> {
        let mut comp = BTreeSet::from([(r, c)]);
        let mut stack = vec![(r, c)];
        while let Some((r, c)) = stack.pop() {
            for (rr, cc) in self.neighbours(r, c) {
                if self.get(rr, cc).is_some_and(|d| self.is_active(d)) && comp.insert((rr, cc)) {
                    stack.push((rr, cc));
                }
            }
        }
        comp
    }

    fn check_type1_ribbon(&self, comp: &BTreeSet<(usize, usize)>) -> Result<()> {
        let err = |reason: &str| Err(Error::invalid("dotted tableau", reason));
        for &(r, c) in comp {
            if comp.contains(&(r + 1, c)) && comp.contains(&(r, c + 1)) && comp.contains(&(r + 1, c + 1)) {
                return err("m/bullet component contains a 2x2 block");
            }
            if comp.iter().filter(|&&(rr, _)| rr == r).count() > 2
                || comp.iter().filter(|&&(_, cc)| cc == c).count() > 2
            {
                return err("m/bullet component has a row or column with more than 2 cells");
            }
            for (rr, cc) in [(r + 1, c), (r, c + 1)] {
                if comp.contains(&(rr, cc)) && self.get(r, c) == self.get(rr, cc) {
                    return err("m/bullet component is not alternating");
                }
            }
        }
        let left = comp.iter().map(|&(_, c)| c).min().expect("nonempty");
        let top = comp
            .iter()
            .filter(|&&(_, c)| c == left)
            .map(|&(r, _)| r)
            .min()
            .expect("nonempty");
        if self.get(top, left) != Some(Dot::Num(self.order)) {
            return err("alternating ribbon is not of type 1");
        }
        Ok(())
    }

    /// Replaces every bullet cell by an inner (removed) cell; the bullets
    /// must occupy an order ideal of the skew shape.
    pub fn remove_bullets(&self) -> Result<DottedSkewTableau> {
        let mut inner = self.inner.clone();
        let mut cells = self.cells.clone();
        for r in 0..cells.len() {
            let k = cells[r].iter().take_while(|&&d| d == Dot::Bullet).count();
            if cells[r][k..].contains(&Dot::Bullet) {
                return Err(Error::invalid("dotted tableau", "bullets are not at the start of their row"));
            }
            cells[r].drain(..k);
            inner[r] += k;
        }
        let t = DottedSkewTableau { inner, cells, order: self.order };
        t.validate()?;
        Ok(t)
    }

    /// Appends a bullet at the end of row `r`; the cell must be addable.
    pub fn add_bullet(&self, r: usize) -> Result<DottedSkewTableau> {
        let mut t = self.clone();
        t.cells[r].push(Dot::Bullet);
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn with_order(&self, order: u32) -> Result<DottedSkewTableau> {
        let t = DottedSkewTableau { order, ..self.clone() };
        t.validate()?;
        Ok(t)
    }

    /// Inner offsets, one per row.
    pub fn inner_offsets(&self) -> &[usize] {
        &self.inner
    }
}

impl fmt::Debug for DottedSkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.num_rows())
            .map(|r| {
                let mut s: Vec<String> = vec![".".into(); self.inner[r]];
                s.extend(self.cells[r].iter().map(|d| match d {
                    Dot::Num(v) => v.to_string(),
                    Dot::Bullet => "*".into(),
                }));
                s.join(" ")
            })
            .collect();
        write!(f, "[m={}: {}]", self.order, rows.join(" / "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Dot::{Bullet, Num};

    #[test]
    fn vertical_domino_switches() {
        let t = DottedSkewTableau::new(vec![0, 0], vec![vec![Num(2)], vec![Bullet]], 2).unwrap();
        let s = t.revkjdt_step().unwrap();
        assert_eq!(s.get(0, 0), Some(Bullet));
        assert_eq!(s.get(1, 0), Some(Num(2)));
        assert_eq!(s.order_param(), 1);
        assert_eq!(s, t.revkjdt_step_cellwise().unwrap());
    }

    #[test]
    fn untouched_without_m_or_bullet() {
        let t = DottedSkewTableau::new(vec![0], vec![vec![Num(1), Num(3)]], 2).unwrap();
        let s = t.revkjdt_step().unwrap();
        assert_eq!(s.get(0, 0), Some(Num(1)));
        assert_eq!(s.get(0, 1), Some(Num(3)));
        assert_eq!(s.order_param(), 1);
        let zero = DottedSkewTableau::new(vec![0], vec![vec![Num(1)]], 0).unwrap();
        assert_eq!(zero.revkjdt_step(), Err(Error::ZeroOrderParam));
    }

    #[test]
    fn rejects_bad_order() {
        assert!(DottedSkewTableau::new(vec![0], vec![vec![Bullet, Num(2)]], 2).is_err());
        assert!(DottedSkewTableau::new(vec![0], vec![vec![Bullet, Num(3)]], 2).is_ok());
    }
}
