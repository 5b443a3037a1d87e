//! Anti-rectification by reverse K-theoretic jeu de taquin.

use crate::combi::Key;
use crate::error::{Error, Result};
use crate::tableaux::{Dot, DottedSkewTableau, IncreasingTableau};

/// Places a normal-shape tableau in the top-left corner of a
/// `rows × cols` rectangle.
pub fn embed_in_rectangle(p: &IncreasingTableau, rows: usize, cols: usize) -> Result<DottedSkewTableau> {
    if p.num_rows() > rows || p.num_columns() > cols {
        return Err(Error::ExceedsRectangle { rows, cols });
    }
    let cells = (0..rows)
        .map(|r| p.rows().get(r).map_or_else(Vec::new, |row| row.iter().map(|&v| Dot::Num(v)).collect()))
        .collect();
    DottedSkewTableau::new(vec![0; rows], cells, 0)
}

/// Anti-rectifies a bullet-free skew tableau inside a `rows × cols`
/// rectangle, always placing the next bullet at the leftmost addable cell.
/// `observe` sees every intermediate dotted tableau right before each
/// revKjdt move.
pub fn anti_rectify_traced(
    t: &DottedSkewTableau,
    cols: usize,
    observe: &mut dyn FnMut(&DottedSkewTableau),
) -> Result<DottedSkewTableau> {
    let rows = t.num_rows();
    if (0..rows).any(|r| t.outer_row(r) > cols) {
        return Err(Error::ExceedsRectangle { rows, cols });
    }
    if t.has_bullet() {
        return Err(Error::invalid("dotted tableau", "anti-rectification input must be bullet-free"));
    }
    let cap = rows * cols;
    let mut t = t.clone();
    let mut rounds = 0;
    while let Some(r) = leftmost_addable_row(&t, cols) {
        rounds += 1;
        if rounds > cap {
            return Err(Error::IterationCap { cap });
        }
        let top = t
            .cells()
            .filter_map(|(_, _, d)| match d {
                Dot::Num(v) => Some(v),
                Dot::Bullet => None,
            })
            .max()
            .unwrap_or(0);
        t = t.with_order(top)?.add_bullet(r)?;
        while t.order_param() > 0 {
            observe(&t);
            t = t.revkjdt_step()?;
        }
        t = t.remove_bullets()?;
    }
    Ok(t)
}

/// The row of the addable cell with the smallest column index inside a
/// rectangle of width `cols`, if the outer shape is not yet the rectangle.
fn leftmost_addable_row(t: &DottedSkewTableau, cols: usize) -> Option<usize> {
    (0..t.num_rows())
        .filter(|&r| {
            let len = t.outer_row(r);
            len < cols && (r == 0 || t.outer_row(r - 1) > len)
        })
        .min_by_key(|&r| t.outer_row(r))
}

/// Anti-rectification without observation.
pub fn anti_rectify(t: &DottedSkewTableau, cols: usize) -> Result<DottedSkewTableau> {
    anti_rectify_traced(t, cols, &mut |_| {})
}

/// Anti-rectifies a normal-shape increasing tableau inside a
/// `rect_rows × rect_cols` rectangle. The result is anti-normal and carries
/// no bullets.
pub fn anti_rectify_leftmost(p: &IncreasingTableau, rect_rows: usize, rect_cols: usize) -> Result<DottedSkewTableau> {
    anti_rectify(&embed_in_rectangle(p, rect_rows, rect_cols)?, rect_cols)
}

/// `K₋(P)` by anti-rectification: column `j` is the leftmost column of the
/// anti-rectified `P_{←j}` inside a `(rows of P) × j` rectangle.
pub fn left_key_via_jdt(p: &IncreasingTableau) -> Result<Key> {
    let rows = p.num_rows();
    let cols = (1..=p.num_columns())
        .map(|j| Ok(anti_rectify_leftmost(&p.first_columns(j), rows, j)?.column_numbers(0)))
        .collect::<Result<Vec<_>>>()?;
    Key::from_columns(cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setops::FinSet;

    #[test]
    fn single_column_moves_right() {
        let p = IncreasingTableau::new(vec![vec![1], vec![3]]).unwrap();
        let out = anti_rectify_leftmost(&p, 2, 2).unwrap();
        assert_eq!(out.column_numbers(0), FinSet::new());
        assert_eq!(out.column_numbers(1), FinSet::from([1, 3]));
        assert!(!out.has_bullet());
    }

    #[test]
    fn full_rectangle_unchanged() {
        let p = IncreasingTableau::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let out = anti_rectify_leftmost(&p, 2, 2).unwrap();
        assert_eq!(out, embed_in_rectangle(&p, 2, 2).unwrap());
    }

    #[test]
    fn too_large_for_rectangle() {
        let p = IncreasingTableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(anti_rectify_leftmost(&p, 1, 1), Err(Error::ExceedsRectangle { rows: 1, cols: 1 }));
    }
}
