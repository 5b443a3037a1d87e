//! Left keys of increasing tableaux (via `◁` chains or via K-theoretic jeu de
//! taquin) and of reverse semistandard tableaux (via `⊵` chains).

mod jdt;

pub use jdt::{anti_rectify, anti_rectify_leftmost, anti_rectify_traced, embed_in_rectangle, left_key_via_jdt};

use crate::combi::Key;
use crate::setops::{triangle_chain, triangle_right_chain};
use crate::tableaux::{IncreasingTableau, Rssyt};

/// `K₋(P)`: column `i` is `P₁ ◁ P₂ ◁ ⋯ ◁ P_i`, evaluated right to left.
pub fn left_key_increasing(p: &IncreasingTableau) -> Key {
    let cols = p.columns();
    let key_cols = (1..=cols.len())
        .map(|i| triangle_chain(&cols[..i]).expect("nonempty prefix"))
        .collect();
    Key::from_columns(key_cols).expect("the left key of an increasing tableau is a key")
}

/// `K₋(T)` of a reverse semistandard tableau: column `i` is
/// `T₁ ⊵ (T₂ ⊵ (⋯ ⊵ T_i))`.
pub fn left_key_rssyt(t: &Rssyt) -> Key {
    let cols = t.columns();
    let key_cols = (1..=cols.len())
        .map(|i| triangle_right_chain(&cols[..i]).expect("nonempty prefix"))
        .collect();
    Key::from_columns(key_cols).expect("the left key of an RSSYT is a key")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combi::{cap_n, wt_key, WeakComposition};
    use crate::setops::FinSet;

    fn tab(rows: &[&[u32]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn key(cols: &[&[u32]]) -> Key {
        Key::from_columns(cols.iter().map(|c| c.iter().copied().collect()).collect()).unwrap()
    }

    #[test]
    fn three_tableaux_with_shared_first_row() {
        let cases = [
            (tab(&[&[1, 4, 6, 7], &[3], &[7]]), key(&[&[1, 3, 7], &[3], &[3], &[3]]), [1, 1, 4]),
            (
                tab(&[&[1, 4, 6, 7], &[3, 7], &[7]]),
                key(&[&[1, 3, 7], &[1, 3], &[3], &[3]]),
                [2, 1, 4],
            ),
            (
                tab(&[&[1, 4, 6, 7], &[3, 6], &[6, 7]]),
                key(&[&[1, 3, 6], &[1, 3, 6], &[3], &[3]]),
                [2, 2, 4],
            ),
        ];
        for (p, k, wt) in cases {
            assert_eq!(left_key_increasing(&p), k);
            assert_eq!(left_key_via_jdt(&p).unwrap(), k);
            let capped = cap_n(&k, 3).unwrap();
            assert_eq!(wt_key(&capped, 3).unwrap(), WeakComposition::from(wt));
        }
    }

    #[test]
    fn single_column() {
        let p = tab(&[&[2], &[5]]);
        assert_eq!(left_key_increasing(&p), key(&[&[2, 5]]));
        assert_eq!(left_key_via_jdt(&p).unwrap(), key(&[&[2, 5]]));
    }

    #[test]
    fn rssyt_example() {
        let t = Rssyt::new(vec![vec![6, 5, 3, 3], vec![4, 2, 1], vec![3]]).unwrap();
        assert_eq!(left_key_rssyt(&t), key(&[&[3, 4, 6], &[3, 6], &[3, 6], &[6]]));
        let single = Rssyt::new(vec![vec![4], vec![2]]).unwrap();
        assert_eq!(left_key_rssyt(&single).columns(), &[FinSet::from([2, 4])]);
    }
}
