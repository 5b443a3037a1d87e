//! Properties of reverse insertion and `Ψ`: bijectivity onto compatible
//! pairs, weight and Hecke-class preservation, boundedness versus left keys,
//! inversion by forward insertion, the left-key change law, restriction
//! below a threshold, and the compatible-pair enumerator itself.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::sample::{random_increasing, rng};
use super::{Outcome, Tally};
use crate::combi::{key_leq, Key};
use crate::hecke::{
    enumerate_compatible_pairs, hecke_eval, shift_perm, CompatiblePair, PairMode, Permutation, Word,
};
use crate::insertion::{forward_insert, psi, psi_inverse, reverse_insert, TableauPair};
use crate::leftkey::{left_key_increasing, left_key_rssyt};
use crate::setops::FinSet;
use crate::tableaux::{enumerate_increasing, for_each_rsvt, IncreasingTableau, NoConstraint};

/// Bound on cells, entries, letters and `i`-values for the exhaustive runs.
pub const SMALL: u32 = 4;

/// Every permutation of `[k]`, in lexicographic order.
pub fn symmetric_group(k: u32) -> Vec<Permutation> {
    fn go(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        if rest.is_empty() {
            out.push(Permutation::from_one_line(cur.clone()).expect("a permutation"));
            return;
        }
        for idx in 0..rest.len() {
            let v = rest.remove(idx);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=k).collect(), &mut Vec::new(), &mut out);
    out
}

/// Increasing tableaux with at most `max_cells` cells and entries in `[max]`.
pub fn small_tableaux(max_cells: usize, max: u32) -> Vec<IncreasingTableau> {
    enumerate_increasing(max_cells, &(1..=max).collect(), &NoConstraint)
        .into_iter()
        .filter(|p| p.size() <= max_cells)
        .collect()
}

/// Every pair `(P, Q)` with `|P| ≤ max_cells`, entries of `P` in `[max]`
/// and entries of `Q` in `[n]`.
pub fn small_pairs(max_cells: usize, max: u32, n: usize) -> Vec<TableauPair> {
    let mut out = Vec::new();
    for p in small_tableaux(max_cells, max) {
        for_each_rsvt(&p.shape(), n, &mut |q| {
            out.push(TableauPair::new(p.clone(), q).expect("same shape"));
        });
    }
    out
}

/// Every compatible pair with letters in `[max_letter]`, `i`-values in
/// `[max_i]` and length at most `max_len`.
pub fn small_compatible_pairs(max_letter: u32, max_i: u32, max_len: usize) -> Vec<CompatiblePair> {
    fn go(
        max_letter: u32,
        max_i: u32,
        max_len: usize,
        a: &mut Vec<u32>,
        i: &mut Vec<u32>,
        out: &mut Vec<CompatiblePair>,
    ) {
        out.push(CompatiblePair::new(Word::new(a.clone()), Word::new(i.clone())).expect("compatible"));
        if a.len() == max_len {
            return;
        }
        for iv in i.last().copied().unwrap_or(1)..=max_i {
            let cap = match (i.last(), a.last()) {
                (Some(&li), Some(&la)) if li == iv => la - 1,
                _ => max_letter,
            };
            for av in 1..=cap {
                a.push(av);
                i.push(iv);
                go(max_letter, max_i, max_len, a, i, out);
                a.pop();
                i.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(max_letter, max_i, max_len, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

fn psi_properties() -> Vec<Outcome> {
    let n = SMALL as usize;
    let domain = small_pairs(SMALL as usize, SMALL, n);
    let images: Vec<(usize, Result<CompatiblePair, String>)> = domain
        .par_iter()
        .enumerate()
        .map(|(idx, pair)| (idx, psi(pair).map_err(|e| e.to_string())))
        .collect();

    let (mut injective, mut weight, mut hecke, mut bounded) = (Tally::new(), Tally::new(), Tally::new(), Tally::new());
    let mut seen: HashMap<CompatiblePair, usize> = HashMap::new();
    for (idx, image) in images {
        let pair = &domain[idx];
        let image = match image {
            Ok(x) => x,
            Err(e) => {
                injective.fail(format!("Ψ failed on {pair:?}: {e}"));
                continue;
            }
        };
        let wq = pair.q().weight(n).map(|w| w.entries().to_vec());
        weight.check(wq.ok() == image.i().weight(n).ok(), || format!("{pair:?} ↦ {image}"));
        hecke.check(hecke_eval(&pair.p().reading_word().rev()) == hecke_eval(image.a()), || {
            format!("{pair:?} ↦ {image}")
        });
        let in_tb = key_leq(&left_key_rssyt(&pair.q().flatten_l()), &left_key_increasing(pair.p()));
        bounded.check(in_tb == image.is_bounded(), || format!("{pair:?} ↦ {image}"));
        let prev = seen.insert(image.clone(), idx);
        injective.check(prev.is_none(), || {
            format!("{:?} and {pair:?} both map to {image}", domain[prev.expect("collision")])
        });
    }
    injective.note = format!("{} pairs with |P| ≤ 4, entries ≤ 4, n = 4", domain.len());

    let targets = small_compatible_pairs(SMALL, SMALL, SMALL as usize);
    let checks: Vec<Tally> = targets
        .par_chunks(64)
        .map(|chunk| {
            let mut t = Tally::new();
            for x in chunk {
                let ok = match psi_inverse(x) {
                    Ok(pre) => {
                        pre.p().size() <= SMALL as usize
                            && seen.get(x).is_some_and(|&idx| domain[idx] == pre)
                            && psi(&pre).as_ref() == Ok(x)
                    }
                    Err(_) => false,
                };
                t.check(ok, || format!("{x}"));
            }
            t
        })
        .collect();
    let mut surjective = Tally::new();
    for c in checks {
        surjective.merge(c);
    }
    surjective.note = format!("{} compatible pairs with letters, i-values and length ≤ 4", targets.len());

    vec![
        injective.outcome("insertion: Ψ is injective on small tableau pairs"),
        weight.outcome("insertion: Ψ preserves weight"),
        hecke.outcome("insertion: Ψ preserves the Hecke class of the reversed reading word"),
        bounded.outcome("insertion: (P, Q) has K₋(L(Q)) ≤ K₋(P) iff Ψ(P, Q) is bounded"),
        surjective.outcome("insertion: every small compatible pair has a Ψ-preimage and Ψ(Ψ⁻¹(x)) = x"),
    ]
}

fn round_trip() -> Outcome {
    let family = small_tableaux(SMALL as usize, SMALL);
    let parts: Vec<Tally> = family
        .par_iter()
        .map(|p| {
            let mut t = Tally::new();
            for (r, c) in p.outer_cells() {
                for alpha in [false, true] {
                    let ok = match reverse_insert(p, r, c, alpha) {
                        Ok(res) => forward_insert(&res.p_prime, res.m).is_ok_and(|f| {
                            f.p == *p && f.cell == (r, c) && f.alpha == alpha
                        }),
                        Err(_) => false,
                    };
                    t.check(ok, || format!("{p:?} cell ({r}, {c}) α={}", u8::from(alpha)));
                }
            }
            t
        })
        .collect();
    let mut total = Tally::new();
    for p in parts {
        total.merge(p);
    }
    total.outcome("insertion: forward insertion inverts reverse insertion")
}

fn column(k: &Key, c: usize) -> FinSet {
    k.column(c).cloned().unwrap_or_default()
}

fn change_law(seed: u64, trials: u64) -> Outcome {
    let mut r = rng(seed, 200);
    let mut tally = Tally::new();
    for _ in 0..trials.max(1000) {
        let p = random_increasing(&mut r, 5, 5, 2);
        let &(row, col) = p.outer_cells().choose(&mut r).expect("a nonempty tableau has an outer cell");
        let alpha = r.gen_bool(0.5);
        let Ok(res) = reverse_insert(&p, row, col, alpha) else {
            tally.fail(format!("reverse insertion failed on {p:?} at ({row}, {col})"));
            continue;
        };
        let before = left_key_increasing(&p);
        let after = left_key_increasing(&res.p_prime);
        let width = before.num_columns().max(after.num_columns());
        let ok = (0..width).all(|c| {
            let expected = if alpha && c == col {
                let kc = column(&before, c);
                match FinSet::min(&kc.difference(&column(&before, c + 1))) {
                    Some(y) => kc.without(y),
                    None => return false,
                }
            } else {
                column(&before, c)
            };
            column(&after, c) == expected
        });
        tally.check(ok, || format!("{p:?} cell ({row}, {col}) α={}", u8::from(alpha)));
    }
    tally.outcome("insertion: reverse insertion changes the left key only as predicted")
}

fn restriction() -> Outcome {
    let pairs = small_compatible_pairs(SMALL, SMALL - 1, SMALL as usize);
    let parts: Vec<Tally> = pairs
        .par_chunks(64)
        .map(|chunk| {
            let mut t = Tally::new();
            for x in chunk {
                let Ok(full) = psi_inverse(x) else {
                    t.fail(format!("Ψ⁻¹ failed on {x}"));
                    continue;
                };
                for n in (1..=SMALL + 1).filter(|v| !x.a().letters().contains(v)) {
                    let sub = x.restrict(|_, a| a < n);
                    let ok = psi_inverse(&sub).is_ok_and(|small| full.p().restrict_below(n) == *small.p());
                    t.check(ok, || format!("{x} below {n}"));
                }
            }
            t
        })
        .collect();
    let mut total = Tally::new();
    for p in parts {
        total.merge(p);
    }
    total.outcome("insertion: restricting below an absent letter commutes with Ψ⁻¹")
}

/// Applies one 0-Hecke relation at a random applicable position, if any.
fn rewrite(word: &[u32], rng: &mut impl Rng) -> Option<Vec<u32>> {
    let mut moves: Vec<Vec<u32>> = Vec::new();
    for j in 0..word.len() {
        if j + 1 < word.len() && word[j] == word[j + 1] {
            let mut v = word.to_vec();
            v.remove(j);
            moves.push(v);
            let mut v = word.to_vec();
            v.insert(j, word[j]);
            moves.push(v);
        }
        if j + 1 < word.len() && word[j].abs_diff(word[j + 1]) >= 2 {
            let mut v = word.to_vec();
            v.swap(j, j + 1);
            moves.push(v);
        }
        if j + 2 < word.len() && word[j] == word[j + 2] && word[j].abs_diff(word[j + 1]) == 1 {
            let mut v = word.to_vec();
            v[j] = word[j + 1];
            v[j + 1] = word[j];
            v[j + 2] = word[j + 1];
            moves.push(v);
        }
    }
    moves.choose(rng).cloned()
}

fn hecke_properties(seed: u64, trials: u64) -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut relations = Tally::new();
    let mut r = rng(seed, 201);
    for _ in 0..trials {
        let len = r.gen_range(0..=10);
        let mut word: Vec<u32> = (0..len).map(|_| r.gen_range(1..=4)).collect();
        let w = hecke_eval(&Word::new(word.clone()));
        for _ in 0..8 {
            if let Some(next) = rewrite(&word, &mut r) {
                word = next;
                let now = hecke_eval(&Word::new(word.clone()));
                relations.check(now == w, || format!("{} vs {}", Word::new(word.clone()), w));
            }
        }
    }
    out.push(relations.outcome("hecke: rewriting by 0-Hecke relations preserves [a]_H"));

    let s4 = symmetric_group(4);
    let mut shifted = Tally::new();
    for w in &s4 {
        for shift in 0..=3 {
            let w2 = shift_perm(w, shift);
            shifted.check(
                crate::hecke::coxeter_length(&w2) == crate::hecke::coxeter_length(w),
                || format!("length of 1^{shift} × {w}"),
            );
            if w.is_identity() {
                continue;
            }
            for x in enumerate_compatible_pairs(&w2, PairMode::CapI(2)) {
                shifted.check(x.a().letters().iter().all(|&l| l as usize > shift), || {
                    format!("{x} for 1^{shift} × {w}")
                });
            }
        }
    }
    out.push(shifted.outcome("hecke: shifted permutations keep their length and use only large letters"));

    // Brute force: every compatible pair over a finite range, filtered by its
    // Hecke class, against the pruned enumerator.
    let mut oracle = Tally::new();
    let universe = small_compatible_pairs(3, 3, 9);
    for w in &s4 {
        for (mode, name) in [(PairMode::Bounded, "bounded"), (PairMode::CapI(2), "i ≤ 2")] {
            let listed = enumerate_compatible_pairs(w, mode);
            let unique: HashSet<&CompatiblePair> = listed.iter().collect();
            oracle.check(unique.len() == listed.len(), || format!("duplicates for {w} ({name})"));
            let valid = listed
                .iter()
                .all(|x| CompatiblePair::new(x.a().clone(), x.i().clone()).is_ok());
            oracle.check(valid, || format!("invalid pair for {w} ({name})"));
            let keep = |x: &&CompatiblePair| match mode {
                PairMode::Bounded => x.is_bounded(),
                PairMode::CapI(n) => x.i().letters().iter().all(|&i| i <= n),
            };
            let brute: HashSet<&CompatiblePair> =
                universe.iter().filter(keep).filter(|x| hecke_eval(x.a()) == *w).collect();
            oracle.check(brute == unique, || format!("{w} ({name}): {} vs {}", brute.len(), unique.len()));
        }
    }
    out.push(oracle.outcome("hecke: compatible-pair enumeration matches brute force on S4"));
    out
}

/// Runs every insertion and Hecke property.
pub fn run(seed: u64, trials: u64) -> Vec<Outcome> {
    let mut out = psi_properties();
    out.push(round_trip());
    out.push(change_law(seed, trials));
    out.push(restriction());
    out.extend(hecke_properties(seed, trials));
    out
}
