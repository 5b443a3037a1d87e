//! Reverse row insertion on increasing tableaux, its inverse, and the
//! bijection `Ψ` between tableau pairs and compatible pairs.

use std::fmt;

use crate::error::{Error, Result};
use crate::hecke::{CompatiblePair, Word};
use crate::tableaux::{IncreasingTableau, Rsvt};

/// A pair `(P, Q)` of an increasing tableau and an RSVT of the same shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TableauPair {
    p: IncreasingTableau,
    q: Rsvt,
}

impl TableauPair {
    pub fn new(p: IncreasingTableau, q: Rsvt) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::invalid("tableau pair", "P and Q have different shapes"));
        }
        Ok(TableauPair { p, q })
    }

    pub fn empty() -> Self {
        TableauPair::default()
    }

    pub fn p(&self) -> &IncreasingTableau {
        &self.p
    }

    pub fn q(&self) -> &Rsvt {
        &self.q
    }
}

/// What happened in one row of a reverse insertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowCase {
    /// The starting cell was removed.
    InitRemove,
    /// Dummy: `m_i + 1` is already in the row.
    D,
    /// Direct replacement by `m_{i+1}`.
    Dr,
    /// Indirect replacement by an ejectable value from below.
    Ir,
    /// No replacement.
    Nr,
}

impl fmt::Display for RowCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowCase::InitRemove => "INIT-REMOVE",
            RowCase::D => "D",
            RowCase::Dr => "DR",
            RowCase::Ir => "IR",
            RowCase::Nr => "NR",
        })
    }
}

/// Output of [`reverse_insert`]. Equality ignores the trace.
#[derive(Clone, Debug)]
pub struct ReverseInsertResult {
    pub p_prime: IncreasingTableau,
    pub m: u32,
    /// One tag per processed row, bottom row first.
    pub trace: Vec<RowCase>,
}

impl PartialEq for ReverseInsertResult {
    fn eq(&self, other: &Self) -> bool {
        self.p_prime == other.p_prime && self.m == other.m
    }
}

impl Eq for ReverseInsertResult {}

/// Is `x` ejectable in `rows` (the tableau read from its top row)?
fn ejectable_in(rows: &[Vec<u32>], x: u32) -> bool {
    let Some(first) = rows.first() else {
        return false;
    };
    if first.binary_search(&x).is_err() {
        return false;
    }
    first.binary_search(&(x + 1)).is_err() || ejectable_in(&rows[1..], x + 1)
}

/// `x` occurs in the first row of `P` and either `x + 1` is absent from that
/// row or `x + 1` is ejectable in `P_{2↓}`.
pub fn is_ejectable(p: &IncreasingTableau, x: u32) -> bool {
    ejectable_in(p.rows(), x)
}

/// The bumping path from `(r, c)` (0-based) up to row 0, listed bottom-up.
pub fn bumping_path(p: &IncreasingTableau, r: usize, c: usize) -> Result<Vec<(usize, usize)>> {
    let below = p.get(r, c).ok_or_else(|| Error::invalid("cell", format!("({r}, {c}) is not in the tableau")))?;
    let mut path = vec![(r, c)];
    let mut below = below;
    for i in (0..r).rev() {
        let row = &p.rows()[i];
        let ci = row.partition_point(|&v| v < below) - 1;
        path.push((i, ci));
        below = row[ci];
    }
    Ok(path)
}

/// Reverse row insertion from the outer cell `(r, c)` (0-based). With
/// `alpha = true` the cell is removed.
pub fn reverse_insert(p: &IncreasingTableau, r: usize, c: usize, alpha: bool) -> Result<ReverseInsertResult> {
    if !p.is_outer_cell(r, c) {
        return Err(Error::NotOuterCell { row: r, col: c });
    }
    let path = bumping_path(p, r, c)?;
    let m_of = |i: usize| p.rows()[i][path[r - i].1];
    let mut work = p.clone().into_rows();
    let mut trace = Vec::with_capacity(r + 2);
    // `above` is (m_{i+1}, α_{i+1}); `None` stands for the ∞ sentinel.
    let (mut m_next, mut a_next, mut start): (Option<u32>, bool, Option<usize>) = if alpha {
        work[r].pop();
        if work[r].is_empty() {
            work.pop();
        }
        trace.push(RowCase::InitRemove);
        (Some(m_of(r)), true, r.checked_sub(1))
    } else {
        (None, false, Some(r))
    };
    while let Some(i) = start {
        let m_i = m_of(i);
        let ci = path[r - i].1;
        let row = &work[i];
        let in_row = |v: u32| row.binary_search(&v).is_ok();
        let case = if in_row(m_i + 1) {
            RowCase::D
        } else if a_next && m_next.is_some_and(|v| !in_row(v)) {
            RowCase::Dr
        } else {
            // An ejectable value must occur in the first row below.
            let candidate = work
                .get(i + 1)
                .into_iter()
                .flatten()
                .rev()
                .copied()
                .filter(|&x| x > m_i && m_next.is_none_or(|v| x < v))
                .find(|&x| ejectable_in(&work[i + 1..], x));
            match candidate {
                Some(x) => {
                    work[i][ci] = x;
                    RowCase::Ir
                }
                None => RowCase::Nr,
            }
        };
        match case {
            RowCase::D => {}
            RowCase::Dr => {
                work[i][ci] = m_next.expect("direct replacement has a finite value");
                a_next = true;
            }
            RowCase::Ir => a_next = true,
            RowCase::Nr => a_next = false,
            RowCase::InitRemove => unreachable!(),
        }
        trace.push(case);
        m_next = Some(m_i);
        start = i.checked_sub(1);
    }
    let p_prime = IncreasingTableau::new(work)?;
    Ok(ReverseInsertResult {
        p_prime,
        m: m_of(0),
        trace,
    })
}

/// The candidate value range for inverting a reverse insertion: values that
/// occur in `P′` together with `m` (reverse insertion only relocates values
/// it reads or ejects).
fn preimage_values(p_prime: &IncreasingTableau, m: u32) -> Vec<u32> {
    p_prime.entries().with(m).into_vec()
}

/// A forward insertion step: `(P, cell, α)` with
/// `reverse_insert(P, cell, α) = (P′, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForwardInsertResult {
    pub p: IncreasingTableau,
    pub cell: (usize, usize),
    pub alpha: bool,
}

/// Inverts [`reverse_insert`] by exhaustive search over tableaux that agree
/// with `P′` off a bumping path. Returns the unique preimage.
pub fn forward_insert(p_prime: &IncreasingTableau, m: u32) -> Result<ForwardInsertResult> {
    let values = preimage_values(p_prime, m);
    let mut found: Vec<ForwardInsertResult> = Vec::new();
    let base = p_prime.rows().to_vec();
    // α = 0: same shape, path ends at any outer cell.
    search_paths(&base, None, &values, m, &mut |cand, r, c| {
        try_candidate(cand, r, c, false, p_prime, m, &mut found);
    });
    // α = 1: one more cell at an addable corner, where the path ends.
    for r in 0..=base.len() {
        let len = base.get(r).map_or(0, Vec::len);
        let room = r == 0 || base[r - 1].len() > len;
        if !room {
            continue;
        }
        search_paths(&base, Some((r, len)), &values, m, &mut |cand, rr, cc| {
            try_candidate(cand, rr, cc, true, p_prime, m, &mut found);
        });
    }
    match found.len() {
        0 => Err(Error::NoPreimage { m }),
        1 => Ok(found.pop().expect("one element")),
        count => Err(Error::NonUniquePreimage { m, count }),
    }
}

fn try_candidate(
    rows: &[Vec<u32>],
    r: usize,
    c: usize,
    alpha: bool,
    p_prime: &IncreasingTableau,
    m: u32,
    found: &mut Vec<ForwardInsertResult>,
) {
    let Ok(p) = IncreasingTableau::new(rows.to_vec()) else {
        return;
    };
    if let Ok(res) = reverse_insert(&p, r, c, alpha) {
        if res.m == m && res.p_prime == *p_prime {
            let cand = ForwardInsertResult { p, cell: (r, c), alpha };
            if !found.contains(&cand) {
                found.push(cand);
            }
        }
    }
}

/// Enumerates fillings that differ from `base` along a path with one cell per
/// row from row 0 downwards, in weakly decreasing columns, with the top cell
/// holding `m`. When `corner` is given, that cell is added to the shape and
/// the path must end there; otherwise the path may end at any outer cell.
fn search_paths(
    base: &[Vec<u32>],
    corner: Option<(usize, usize)>,
    values: &[u32],
    m: u32,
    emit: &mut dyn FnMut(&[Vec<u32>], usize, usize),
) {
    let mut rows = base.to_vec();
    if corner.is_none() && rows.is_empty() {
        return;
    }
    if let Some((r, _)) = corner {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        rows[r].push(0);
    }
    let width = rows[0].len();
    for c0 in 0..width {
        let saved = rows[0][c0];
        rows[0][c0] = m;
        if row_ok(&rows, 0, c0) {
            path_dfs(&mut rows, corner, values, 0, c0, emit);
        }
        rows[0][c0] = saved;
    }
}

fn row_ok(rows: &[Vec<u32>], r: usize, c: usize) -> bool {
    let row = &rows[r];
    let v = row[c];
    (c == 0 || row[c - 1] < v)
        && row.get(c + 1).is_none_or(|&w| w == 0 || v < w)
        && (r == 0 || rows[r - 1][c] < v)
}

fn path_dfs(
    rows: &mut Vec<Vec<u32>>,
    corner: Option<(usize, usize)>,
    values: &[u32],
    r: usize,
    c: usize,
    emit: &mut dyn FnMut(&[Vec<u32>], usize, usize),
) {
    let is_end = match corner {
        Some(cell) => cell == (r, c),
        None => c + 1 == rows[r].len() && rows.get(r + 1).is_none_or(|below| below.len() <= c),
    };
    if is_end {
        emit(rows, r, c);
    }
    if corner.is_some_and(|(cr, _)| r >= cr) {
        return;
    }
    let next = r + 1;
    if next >= rows.len() {
        return;
    }
    let above = rows[r][c];
    let next_above = rows[r].get(c + 1).copied();
    for c1 in 0..=c.min(rows[next].len() - 1) {
        let saved = rows[next][c1];
        for &v in values {
            // The path rule: column c is the last one in row r below v.
            if above >= v || next_above.is_some_and(|w| w < v) {
                continue;
            }
            rows[next][c1] = v;
            if row_ok(rows, next, c1) && rows[r].iter().take_while(|&&w| w < v).count() == c + 1 {
                path_dfs(rows, corner, values, next, c1, emit);
            }
        }
        rows[next][c1] = saved;
    }
}

/// `Ψ(P, Q)`: repeatedly take the smallest entry `q` of `Q` in its rightmost
/// cell, reverse-insert from that cell (removing it when `q` is alone), and
/// record `(m, q)`.
pub fn psi(pair: &TableauPair) -> Result<CompatiblePair> {
    let mut p = pair.p.clone();
    let mut q = pair.q.clone();
    let (mut a, mut i) = (Vec::new(), Vec::new());
    while let Some((r, c, qmin)) = q.rightmost_min_cell() {
        let alone = q.get(r, c).is_some_and(|cell| cell.len() == 1);
        let res = reverse_insert(&p, r, c, alone)?;
        q = q.remove_entry(r, c, qmin);
        p = res.p_prime;
        a.push(res.m);
        i.push(qmin);
    }
    CompatiblePair::new(Word::new(a), Word::new(i))
}

/// `Ψ⁻¹`: insert the pair's letters right to left, recording each `i`-letter
/// in `Q` at the reported cell.
pub fn psi_inverse(pair: &CompatiblePair) -> Result<TableauPair> {
    let mut p = IncreasingTableau::empty();
    let mut q = Rsvt::empty();
    for (&a, &i) in pair.a().letters().iter().zip(pair.i().letters()).rev() {
        let step = forward_insert(&p, a)?;
        let (r, c) = step.cell;
        q = q.add_entry(r, c, i)?;
        p = step.p;
    }
    TableauPair::new(p, q)
}
