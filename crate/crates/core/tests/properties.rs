//! Property-based tests over randomly generated sets, words, tableaux and
//! compositions.

use lascoux::combi::{cap_n, key_leq, key_of, wt_key, WeakComposition};
use lascoux::expansion::{expand_product, expand_in_lascoux_basis};
use lascoux::hecke::{coxeter_length, hecke_eval, shift_perm, CompatiblePair, Permutation, Word};
use lascoux::insertion::{forward_insert, psi, psi_inverse, reverse_insert};
use lascoux::leftkey::{left_key_increasing, left_key_via_jdt};
use lascoux::polynomials::{grothendieck_stable_truncated, lascoux};
use lascoux::setops::{dominates, triangle_left, triangle_left_recursive, FinSet};
use lascoux::tableaux::IncreasingTableau;
use proptest::prelude::*;

fn finset(max: u32) -> impl Strategy<Value = FinSet> {
    prop::collection::btree_set(1..=max, 0..=max as usize).prop_map(|s| s.into_iter().collect())
}

fn composition(len: usize, max_part: u32) -> impl Strategy<Value = WeakComposition> {
    prop::collection::vec(0..=max_part, 1..=len).prop_map(WeakComposition::new)
}

fn permutation(k: u32) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(v).expect("a shuffle is a permutation"))
}

/// An increasing tableau of a random shape inside a 4×4 box: each entry
/// exceeds its left and upper neighbours by one plus a gap in 0..=2.
fn increasing_tableau() -> impl Strategy<Value = IncreasingTableau> {
    (prop::collection::vec(1..=4usize, 1..=4), prop::collection::vec(0..=2u32, 16)).prop_map(|(mut shape, gaps)| {
        shape.sort_unstable_by(|a, b| b.cmp(a));
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (r, &len) in shape.iter().enumerate() {
            let mut row: Vec<u32> = Vec::with_capacity(len);
            for c in 0..len {
                let left = if c > 0 { row[c - 1] } else { 0 };
                let above = if r > 0 { rows[r - 1][c] } else { 0 };
                row.push(left.max(above) + 1 + gaps[4 * r + c]);
            }
            rows.push(row);
        }
        IncreasingTableau::new(rows).expect("increasing by construction")
    })
}

/// A compatible pair: `i` weakly increasing from 1, letters strictly
/// decreasing along each run of equal `i`-values.
fn compatible_pair(max_letter: u32, max_len: usize) -> impl Strategy<Value = CompatiblePair> {
    prop::collection::vec((1..=max_letter, 0..=1u32), 0..=max_len).prop_filter_map("plateau not decreasing", |steps| {
        let mut i = Vec::with_capacity(steps.len());
        let mut cur = 1;
        for (k, &(_, bump)) in steps.iter().enumerate() {
            if k > 0 {
                cur += bump;
            }
            i.push(cur);
        }
        let a = steps.iter().map(|&(x, _)| x).collect();
        CompatiblePair::new(Word::new(a), Word::new(i)).ok()
    })
}

proptest! {
    #[test]
    fn triangle_left_picks_a_subset_of_the_left_set(t in finset(10), s in finset(10)) {
        let picked = triangle_left(&t, &s);
        prop_assert!(picked.is_subset(&t));
        prop_assert!(picked.len() <= s.len());
        prop_assert_eq!(picked.len() == s.len(), dominates(&t, &s));
    }

    #[test]
    fn greedy_and_recursive_triangle_agree(t in finset(10), s in finset(10)) {
        prop_assert_eq!(triangle_left(&t, &s), triangle_left_recursive(&t, &s));
    }

    #[test]
    fn doubling_a_letter_does_not_change_the_hecke_class(
        letters in prop::collection::vec(1..=5u32, 1..10),
        pos in any::<prop::sample::Index>(),
    ) {
        let k = pos.index(letters.len());
        let mut doubled = letters.clone();
        doubled.insert(k, letters[k]);
        prop_assert_eq!(hecke_eval(&Word::new(letters)), hecke_eval(&Word::new(doubled)));
    }

    #[test]
    fn braid_moves_preserve_the_hecke_class(
        prefix in prop::collection::vec(1..=5u32, 0..5),
        suffix in prop::collection::vec(1..=5u32, 0..5),
        j in 1..=4u32,
    ) {
        let word = |mid: [u32; 3]| {
            Word::new(prefix.iter().copied().chain(mid).chain(suffix.iter().copied()).collect())
        };
        prop_assert_eq!(hecke_eval(&word([j, j + 1, j])), hecke_eval(&word([j + 1, j, j + 1])));
    }

    #[test]
    fn inverse_is_an_involution_and_shift_keeps_length(w in permutation(6), n in 0..4usize) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(coxeter_length(&shift_perm(&w, n)), coxeter_length(&w));
    }

    #[test]
    fn key_and_weight_are_inverse(alpha in composition(5, 3)) {
        let n = alpha.len();
        prop_assert_eq!(wt_key(&key_of(&alpha), n).unwrap(), alpha);
    }

    #[test]
    fn capping_lowers_a_key_unless_a_column_is_too_long(alpha in composition(5, 3), n in 1..=5usize) {
        let k = key_of(&alpha);
        let tallest = k.column_lengths().first().copied().unwrap_or(0);
        match cap_n(&k, n) {
            Ok(capped) => {
                prop_assert!(tallest <= n);
                prop_assert!(key_leq(&capped, &k));
                prop_assert!(capped.max_entry().is_none_or(|m| m as usize <= n));
            }
            // Columns longer than n cannot be capped.
            Err(_) => prop_assert!(tallest > n),
        }
    }

    #[test]
    fn left_key_oracles_agree(p in increasing_tableau()) {
        prop_assert_eq!(left_key_via_jdt(&p).unwrap(), left_key_increasing(&p));
    }

    #[test]
    fn forward_insertion_undoes_reverse_insertion(
        p in increasing_tableau(),
        cell in any::<prop::sample::Index>(),
        alpha in any::<bool>(),
    ) {
        let cells = p.outer_cells();
        let (r, c) = cells[cell.index(cells.len())];
        let res = reverse_insert(&p, r, c, alpha).unwrap();
        let back = forward_insert(&res.p_prime, res.m).unwrap();
        prop_assert_eq!(back.p, p);
        prop_assert_eq!(back.cell, (r, c));
        prop_assert_eq!(back.alpha, alpha);
    }

    #[test]
    fn psi_inverts_psi_inverse(x in compatible_pair(5, 6)) {
        let pair = psi_inverse(&x).unwrap();
        prop_assert_eq!(psi(&pair).unwrap(), x.clone());
        prop_assert_eq!(hecke_eval(&pair.p().reading_word().rev()), hecke_eval(x.a()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_rule_matches_the_basis_oracle(alpha in composition(3, 2), w in permutation(3)) {
        let n = alpha.len();
        let e = expand_product(&alpha, &w, n).unwrap();
        let lhs = &lascoux(&alpha, n) * &grothendieck_stable_truncated(&w, n);
        prop_assert_eq!(expand_in_lascoux_basis(&lhs, n).unwrap(), e);
    }
}
