//! Bounded exhaustive enumerators. Tableaux are built depth first with the
//! partial invariants checked at every cell, so only valid tableaux are ever
//! produced.

use crate::combi::Partition;
use crate::setops::FinSet;

use super::{IncreasingTableau, Rsvt};

/// Restrictions applied while enumerating increasing tableaux column by
/// column. Every method has a permissive default.
pub trait IncreasingConstraint {
    /// May value `v` sit at cell `(r, c)`?
    fn cell(&self, _r: usize, _c: usize, _v: u32) -> bool {
        true
    }

    /// Column `c` must contain at least this many cells.
    fn min_column_len(&self, _c: usize) -> usize {
        0
    }

    /// Prefix pruning, called once every column of `columns` is complete.
    fn prefix(&self, _columns: &[Vec<u32>]) -> bool {
        true
    }

    /// Final acceptance test.
    fn accept(&self, _t: &IncreasingTableau) -> bool {
        true
    }
}

/// Accepts everything.
pub struct NoConstraint;

impl IncreasingConstraint for NoConstraint {}

/// Wraps per-cell and final predicates given as closures.
pub struct FnConstraint<C, A> {
    pub cell: C,
    pub accept: A,
}

impl<C, A> IncreasingConstraint for FnConstraint<C, A>
where
    C: Fn(usize, usize, u32) -> bool,
    A: Fn(&IncreasingTableau) -> bool,
{
    fn cell(&self, r: usize, c: usize, v: u32) -> bool {
        (self.cell)(r, c, v)
    }

    fn accept(&self, t: &IncreasingTableau) -> bool {
        (self.accept)(t)
    }
}

/// Calls `visit` on every increasing tableau with at most `max_rows` rows and
/// entries from `alphabet` satisfying `constraint`, each exactly once.
pub fn for_each_increasing<C: IncreasingConstraint + ?Sized>(
    max_rows: usize,
    alphabet: &FinSet,
    constraint: &C,
    visit: &mut dyn FnMut(IncreasingTableau),
) {
    let mut columns: Vec<Vec<u32>> = Vec::new();
    inc_dfs(max_rows, alphabet.as_slice(), constraint, &mut columns, visit);
}

/// Collecting form of [`for_each_increasing`].
pub fn enumerate_increasing<C: IncreasingConstraint + ?Sized>(
    max_rows: usize,
    alphabet: &FinSet,
    constraint: &C,
) -> Vec<IncreasingTableau> {
    let mut out = Vec::new();
    for_each_increasing(max_rows, alphabet, constraint, &mut |t| out.push(t));
    out
}

fn columns_to_tableau(columns: &[Vec<u32>]) -> IncreasingTableau {
    let height = columns.first().map_or(0, Vec::len);
    let rows = (0..height)
        .map(|r| columns.iter().map_while(|c| c.get(r).copied()).collect())
        .collect();
    IncreasingTableau::new_unchecked(rows)
}

fn inc_dfs<C: IncreasingConstraint + ?Sized>(
    max_rows: usize,
    alphabet: &[u32],
    constraint: &C,
    columns: &mut Vec<Vec<u32>>,
    visit: &mut dyn FnMut(IncreasingTableau),
) {
    let c = columns.len();
    let min_len = constraint.min_column_len(c);
    if min_len == 0 {
        let t = columns_to_tableau(columns);
        if constraint.accept(&t) {
            visit(t);
        }
    }
    let max_len = columns.last().map_or(max_rows, Vec::len);
    if max_len < min_len.max(1) {
        return;
    }
    let mut col = Vec::with_capacity(max_len);
    fill_column(max_rows, alphabet, constraint, columns, &mut col, min_len.max(1), max_len, visit);
}

#[allow(clippy::too_many_arguments)]
fn fill_column<C: IncreasingConstraint + ?Sized>(
    max_rows: usize,
    alphabet: &[u32],
    constraint: &C,
    columns: &mut Vec<Vec<u32>>,
    col: &mut Vec<u32>,
    min_len: usize,
    max_len: usize,
    visit: &mut dyn FnMut(IncreasingTableau),
) {
    let c = columns.len();
    if col.len() >= min_len {
        columns.push(col.clone());
        if constraint.prefix(columns) {
            inc_dfs(max_rows, alphabet, constraint, columns, visit);
        }
        columns.pop();
    }
    if col.len() == max_len {
        return;
    }
    let r = col.len();
    let above = col.last().copied().unwrap_or(0);
    let left = columns.last().map_or(0, |prev| prev[r]);
    let lo = above.max(left);
    let start = alphabet.partition_point(|&v| v <= lo);
    for &v in &alphabet[start..] {
        if constraint.cell(r, c, v) {
            col.push(v);
            fill_column(max_rows, alphabet, constraint, columns, col, min_len, max_len, visit);
            col.pop();
        }
    }
}

/// Every RSVT of the given shape with entries in `[n]` accepted by
/// `constraint`, each exactly once.
pub fn enumerate_rsvt(shape: &Partition, n: usize, constraint: &dyn Fn(&Rsvt) -> bool) -> Vec<Rsvt> {
    let mut out = Vec::new();
    for_each_rsvt(shape, n, &mut |t| {
        if constraint(&t) {
            out.push(t);
        }
    });
    out
}

/// Calls `visit` on every RSVT of the given shape with entries in `[n]`.
pub fn for_each_rsvt(shape: &Partition, n: usize, visit: &mut dyn FnMut(Rsvt)) {
    let mut rows: Vec<Vec<FinSet>> = shape.parts().iter().map(|&len| Vec::with_capacity(len)).collect();
    rsvt_dfs(shape, n as u32, 0, &mut rows, visit);
}

fn rsvt_dfs(shape: &Partition, n: u32, r: usize, rows: &mut Vec<Vec<FinSet>>, visit: &mut dyn FnMut(Rsvt)) {
    if r == shape.len() {
        visit(Rsvt::new_unchecked(rows.clone()));
        return;
    }
    let c = rows[r].len();
    if c == shape.row(r) {
        rsvt_dfs(shape, n, r + 1, rows, visit);
        return;
    }
    // max(cell) ≤ min(left) and max(cell) < min(above).
    let mut bound = n;
    if c > 0 {
        bound = bound.min(FinSet::min(&rows[r][c - 1]).expect("nonempty"));
    }
    if r > 0 {
        bound = bound.min(FinSet::min(&rows[r - 1][c]).expect("nonempty") - 1);
    }
    for mask in 1u32..(1 << bound) {
        let cell: FinSet = (1..=bound).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        rows[r].push(cell);
        rsvt_dfs(shape, n, r, rows, visit);
        rows[r].pop();
    }
}

/// Every semistandard tableau (rows weakly increasing, columns strictly
/// increasing) of shape `shape` with entries in `[n]`, as rows.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Vec<Vec<Vec<u32>>> {
    fn go(shape: &Partition, n: u32, r: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if r == shape.len() {
            out.push(rows.clone());
            return;
        }
        let c = rows[r].len();
        if c == shape.row(r) {
            go(shape, n, r + 1, rows, out);
            return;
        }
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for v in lo..=n {
            rows[r].push(v);
            go(shape, n, r, rows, out);
            rows[r].pop();
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape, n as u32, 0, &mut rows, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combi::{key_leq, key_of, WeakComposition};
    use crate::leftkey::left_key_rssyt;

    #[test]
    fn small_increasing_counts() {
        let one = enumerate_increasing(3, &FinSet::from([1]), &NoConstraint);
        assert_eq!(one.len(), 2);
        let two = enumerate_increasing(2, &FinSet::from([1, 2]), &NoConstraint);
        assert_eq!(two.len(), 6);
        let expected: Vec<Vec<Vec<u32>>> = vec![
            vec![],
            vec![vec![1]],
            vec![vec![1], vec![2]],
            vec![vec![1, 2]],
            vec![vec![1, 2], vec![2]],
            vec![vec![2]],
        ];
        let mut got: Vec<Vec<Vec<u32>>> = two.into_iter().map(IncreasingTableau::into_rows).collect();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn rsvt_counts() {
        assert_eq!(enumerate_rsvt(&Partition::empty(), 3, &|_| true).len(), 1);
        assert_eq!(enumerate_rsvt(&Partition::new(vec![1]).unwrap(), 2, &|_| true).len(), 3);
        let alpha = WeakComposition::from([0, 2, 1]);
        let key = key_of(&alpha);
        let shape = Partition::new(vec![2, 1]).unwrap();
        let hits = enumerate_rsvt(&shape, 3, &|t| key_leq(&left_key_rssyt(&t.flatten_l()), &key));
        assert_eq!(hits.len(), 11);
    }

    #[test]
    fn ssyt_counts() {
        // s_(2,1)(x1,x2,x3) has 8 tableaux.
        assert_eq!(enumerate_ssyt(&Partition::new(vec![2, 1]).unwrap(), 3).len(), 8);
    }
}
