//! Left-key properties: the jeu-de-taquin oracle against the `◁`-chain
//! formula, invariance of the column chain under revKjdt moves, the two
//! descriptions of a revKjdt move, key nesting, and the key-level operators.

use rand::Rng;
use rayon::prelude::*;

use super::sample::{random_increasing, random_key, rng, SuiteRng};
use super::{Outcome, Tally};
use crate::combi::{cap_n, key_leq, key_of, wt_key, Key, Partition, WeakComposition};
use crate::leftkey::{anti_rectify_traced, embed_in_rectangle, left_key_increasing, left_key_rssyt, left_key_via_jdt};
use crate::setops::{triangle_chain, FinSet};
use crate::tableaux::{
    enumerate_increasing, enumerate_rsvt, for_each_rsvt, Dot, DottedSkewTableau, FnConstraint, IncreasingTableau,
};

/// Every increasing tableau fitting a `rows × cols` box with entries in
/// `[max]`.
pub fn box_tableaux(rows: usize, cols: usize, max: u32) -> Vec<IncreasingTableau> {
    let constraint = FnConstraint {
        cell: |_r: usize, c: usize, _v: u32| c < cols,
        accept: |_: &IncreasingTableau| true,
    };
    enumerate_increasing(rows, &(1..=max).collect(), &constraint)
}

/// Random tableaux used where exhaustive coverage is out of reach; the jdt
/// oracle is comparatively slow, so at most this many are drawn.
const MAX_JDT_SAMPLES: u64 = 2000;

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    let parts: Vec<Tally> = items
        .par_chunks(64)
        .map(|chunk| {
            let mut t = Tally::new();
            for item in chunk {
                f(item, &mut t);
            }
            t
        })
        .collect();
    let mut total = Tally::new();
    for p in parts {
        total.merge(p);
    }
    total
}

fn jdt_matches_chains(p: &IncreasingTableau, tally: &mut Tally) {
    match left_key_via_jdt(p) {
        Ok(k) => tally.check(k == left_key_increasing(p), || format!("{p:?}")),
        Err(e) => tally.fail(format!("{p:?}: {e}")),
    }
}

/// Column chain `P_{1,C}` of a dotted tableau, bullets ignored, over columns
/// `0..=c`.
fn column_chain(t: &DottedSkewTableau, c: usize) -> FinSet {
    let cols: Vec<FinSet> = (0..=c).map(|j| t.column_numbers(j)).collect();
    triangle_chain(&cols).expect("nonempty")
}

/// Anti-rectifies every prefix `P_{←j}` of `p` and checks each observed
/// revKjdt move: the ribbon and cellwise forms agree, and the chain over
/// columns up to the rightmost nonempty numeric column is unchanged.
fn check_moves(p: &IncreasingTableau, chains: &mut Tally, forms: &mut Tally) {
    for j in 1..=p.num_columns() {
        let start = match embed_in_rectangle(&p.first_columns(j), p.num_rows(), j) {
            Ok(t) => t,
            Err(e) => return chains.fail(format!("{p:?}: {e}")),
        };
        let mut observe = |t: &DottedSkewTableau| {
            let ribbon = t.revkjdt_step();
            let cellwise = t.revkjdt_step_cellwise();
            forms.check(ribbon.is_ok() && ribbon == cellwise, || format!("{t:?}"));
            let Ok(next) = ribbon else {
                return;
            };
            if let Some(c) = (0..t.numeric_width()).rev().find(|&c| !t.column_numbers(c).is_empty()) {
                chains.check(column_chain(t, c) == column_chain(&next, c), || format!("{t:?} → {next:?}"));
            }
        };
        if let Err(e) = anti_rectify_traced(&start, j, &mut observe) {
            chains.fail(format!("{p:?}: {e}"));
        }
    }
}

/// The `◁` chains of `p`'s columns are nested and entrywise at most the
/// corresponding columns of `p`.
fn check_nesting(p: &IncreasingTableau, nesting: &mut Tally, below: &mut Tally) {
    let cols = p.columns();
    let chains: Vec<FinSet> = (1..=cols.len())
        .map(|i| triangle_chain(&cols[..i]).expect("nonempty prefix"))
        .collect();
    let nested = chains.windows(2).all(|w| w[1].is_subset(&w[0]))
        && chains.iter().zip(&cols).all(|(k, c)| k.len() == c.len());
    nesting.check(nested, || format!("{p:?}"));
    let lower = chains
        .iter()
        .zip(&cols)
        .all(|(k, c)| k.iter().zip(c.iter()).all(|(x, y)| x <= y));
    below.check(lower, || format!("{p:?}"));
}

/// Every valid dotted tableau of a skew shape inside a 3×3 box with numeric
/// entries in `[max]` and order parameter in `[max]`.
pub fn small_dotted_tableaux(max: u32) -> Vec<DottedSkewTableau> {
    fn rank(d: Dot, m: u32) -> u32 {
        match d {
            Dot::Num(v) if v <= m => 2 * v,
            Dot::Num(v) => 2 * v + 1,
            Dot::Bullet => 2 * m + 1,
        }
    }
    #[allow(clippy::too_many_arguments)]
    fn fill(
        inner: &[usize],
        outer: &[usize],
        m: u32,
        max: u32,
        r: usize,
        rows: &mut Vec<Vec<Dot>>,
        out: &mut Vec<DottedSkewTableau>,
    ) {
        if r == outer.len() {
            if let Ok(t) = DottedSkewTableau::new(inner.to_vec(), rows.clone(), m) {
                out.push(t);
            }
            return;
        }
        let c = inner[r] + rows[r].len();
        if c == outer[r] {
            return fill(inner, outer, m, max, r + 1, rows, out);
        }
        let choices = (1..=max).map(Dot::Num).chain(std::iter::once(Dot::Bullet));
        for d in choices {
            let left_ok = rows[r].last().is_none_or(|&l| rank(l, m) < rank(d, m));
            let above_ok = r == 0
                || c < inner[r - 1]
                || c >= outer[r - 1]
                || rank(rows[r - 1][c - inner[r - 1]], m) < rank(d, m);
            if left_ok && above_ok {
                rows[r].push(d);
                fill(inner, outer, m, max, r, rows, out);
                rows[r].pop();
            }
        }
    }
    let pad = |p: &Partition| (0..3).map(|r| p.row(r)).collect::<Vec<_>>();
    let shapes = Partition::all_in_box(3, 3);
    let mut out = Vec::new();
    for outer in &shapes {
        for inner in shapes.iter().filter(|i| outer.contains(i)) {
            for m in 1..=max {
                let mut rows = vec![Vec::new(); 3];
                fill(&pad(inner), &pad(outer), m, max, 0, &mut rows, &mut out);
            }
        }
    }
    out
}

/// A random key whose column lengths are those of `shape_of`, with entries
/// in `[max]`.
fn random_key_like(rng: &mut SuiteRng, shape_of: &Key, max: u32) -> Key {
    let lens = shape_of.column_lengths();
    let mut pool: Vec<u32> = (1..=max).collect();
    let mut columns = Vec::with_capacity(lens.len());
    for &len in &lens {
        while pool.len() > len {
            pool.remove(rng.gen_range(0..pool.len()));
        }
        columns.push(pool.iter().copied().collect::<FinSet>());
    }
    Key::from_columns(columns).expect("nested columns")
}

fn key_properties(seed: u64, trials: u64) -> Vec<Outcome> {
    let mut out = Vec::new();

    let mut round = Tally::new();
    for n in 1..=4 {
        for size in 0..=6 {
            for alpha in WeakComposition::all_of_size(n, size) {
                let k = key_of(&alpha);
                round.check(wt_key(&k, n).as_ref() == Ok(&alpha), || format!("{alpha}"));
            }
        }
    }
    let mut r = rng(seed, 100);
    for _ in 0..trials {
        let k = random_key(&mut r, 4, 6, 5);
        let ok = wt_key(&k, 6).is_ok_and(|alpha| key_of(&alpha) == k);
        round.check(ok, || format!("{k:?}"));
    }
    out.push(round.outcome("combi: key(α) and wt are mutually inverse"));

    let mut is_key = Tally::new();
    let mut equiv = Tally::new();
    let mut r = rng(seed, 101);
    for _ in 0..trials {
        let n = r.gen_range(2..=5usize);
        let t = random_key(&mut r, n, 8, 4);
        let capped = cap_n(&t, n);
        is_key.check(capped.is_ok(), || format!("{t:?} n={n}"));
        let Ok(capped) = capped else {
            continue;
        };
        let max = r.gen_range(n as u32..=8);
        let t2 = random_key_like(&mut r, &t, max);
        let lhs = key_leq(&t2, &capped);
        let rhs = key_leq(&t2, &t) && t2.max_entry().unwrap_or(0) as usize <= n;
        equiv.check(lhs == rhs, || format!("T={t:?} T'={t2:?} n={n}"));
    }
    out.push(is_key.outcome("combi: cap_n of a key is a key"));
    out.push(equiv.outcome("combi: T' ≤ cap_n(T) iff T' ≤ T and max(T') ≤ n"));

    let mut order = Tally::new();
    for shape in [vec![2, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1]] {
        let shape = Partition::new(shape).expect("partition");
        let keys: Vec<Key> = WeakComposition::all_of_size(4, shape.size() as u32)
            .into_iter()
            .filter(|a| crate::combi::sorted_partition(a) == shape)
            .map(|a| key_of(&a))
            .collect();
        for a in &keys {
            order.check(key_leq(a, a), || format!("reflexivity at {a:?}"));
            for b in &keys {
                if a != b {
                    order.check(!(key_leq(a, b) && key_leq(b, a)), || format!("antisymmetry at {a:?}, {b:?}"));
                }
                for c in &keys {
                    if key_leq(a, b) && key_leq(b, c) {
                        order.check(key_leq(a, c), || format!("transitivity at {a:?}, {b:?}, {c:?}"));
                    }
                }
            }
        }
    }
    out.push(order.outcome("combi: entrywise comparison is a partial order on keys of one shape"));
    out
}

fn tableau_properties(seed: u64, trials: u64) -> Vec<Outcome> {
    let mut out = Vec::new();
    let family = box_tableaux(3, 3, 5);

    let mut restrict = Tally::new();
    let mut word = Tally::new();
    for p in &family {
        word.check(p.reading_word().len() == p.size(), || format!("{p:?}"));
        for b1 in 1..=6 {
            let r1 = p.restrict_below(b1);
            restrict.check(IncreasingTableau::new(r1.rows().to_vec()).is_ok(), || format!("{p:?} below {b1}"));
            for b2 in 1..=6 {
                restrict.check(r1.restrict_below(b2) == p.restrict_below(b1.min(b2)), || {
                    format!("{p:?} below {b1} then {b2}")
                });
            }
        }
    }
    let mut r = rng(seed, 102);
    for _ in 0..trials {
        let p = random_increasing(&mut r, 5, 5, 2);
        let b = r.gen_range(1..=p.max_entry().unwrap_or(1) + 1);
        restrict.check(IncreasingTableau::new(p.restrict_below(b).rows().to_vec()).is_ok(), || {
            format!("{p:?} below {b}")
        });
    }
    out.push(restrict.outcome("tableaux: restriction stays increasing and composes by min"));
    out.push(word.outcome("tableaux: reading word has one letter per cell"));

    let mut flatten = Tally::new();
    for shape in Partition::all_up_to_size(4) {
        for_each_rsvt(&shape, 3, &mut |q| {
            let l = q.flatten_l();
            let ok = l.shape() == q.shape()
                && match (l.weight(3), q.weight(3)) {
                    (Ok(wl), Ok(wq)) => wl.entries().iter().zip(wq.entries()).all(|(a, b)| a <= b),
                    _ => false,
                };
            flatten.check(ok, || format!("{q:?}"));
        });
    }
    out.push(flatten.outcome("tableaux: L(Q) keeps the shape and lowers the weight"));

    let alpha = WeakComposition::from([0, 2, 1]);
    let target = key_of(&alpha);
    let shape = crate::combi::sorted_partition(&alpha);
    let found = enumerate_rsvt(&shape, 3, &|q| key_leq(&left_key_rssyt(&q.flatten_l()), &target));
    let mut count = Tally::new();
    count.check(found.len() == 11, || format!("found {} tableaux", found.len()));
    out.push(count.outcome("tableaux: 11 RSVTs of shape (2,1) with left key at most key(0,2,1)"));
    out
}

/// Runs every left-key and key-level property.
pub fn run(seed: u64, trials: u64) -> Vec<Outcome> {
    let mut out = Vec::new();
    let family = box_tableaux(3, 3, 5);
    let mut r = rng(seed, 0);
    let samples: Vec<IncreasingTableau> =
        (0..trials.min(MAX_JDT_SAMPLES)).map(|_| random_increasing(&mut r, 5, 5, 2)).collect();

    let mut exhaustive = par_tally(&family, jdt_matches_chains);
    exhaustive.note = format!("all {} tableaux in a 3×3 box with entries ≤ 5", family.len());
    out.push(exhaustive.outcome("leftkey: jdt anti-rectification agrees with ◁ chains (exhaustive)"));
    let random = par_tally(&samples, jdt_matches_chains);
    out.push(random.outcome("leftkey: jdt anti-rectification agrees with ◁ chains (random 5×5)"));

    let both: Vec<&IncreasingTableau> = family.iter().chain(&samples).collect();
    let moves: Vec<(Tally, Tally)> = both
        .par_iter()
        .map(|p| {
            let (mut chains, mut forms) = (Tally::new(), Tally::new());
            check_moves(p, &mut chains, &mut forms);
            (chains, forms)
        })
        .collect();
    let (mut chains, mut forms) = (Tally::new(), Tally::new());
    for (c, f) in moves {
        chains.merge(c);
        forms.merge(f);
    }
    out.push(chains.outcome("leftkey: revKjdt moves preserve the column ◁ chain"));

    let dotted = small_dotted_tableaux(3);
    let mut small = par_tally(&dotted, |t, tally| {
        let ribbon = t.revkjdt_step();
        tally.check(ribbon.is_ok() && ribbon == t.revkjdt_step_cellwise(), || format!("{t:?}"));
    });
    small.merge(forms);
    small.note = format!("{} small dotted tableaux plus every move seen while anti-rectifying", dotted.len());
    out.push(small.outcome("leftkey: ribbon and cellwise revKjdt moves agree"));

    let (mut nesting, mut below) = (Tally::new(), Tally::new());
    for p in &both {
        check_nesting(p, &mut nesting, &mut below);
    }
    out.push(nesting.outcome("leftkey: ◁ chains of the columns form a key"));
    out.push(below.outcome("leftkey: the left key is entrywise at most the tableau"));

    // A key read as an increasing tableau need not be its own left key.
    let mut witness = Tally::new();
    let k = IncreasingTableau::new(vec![vec![1, 2], vec![2]]).expect("increasing");
    let expected = Key::from_columns(vec![FinSet::from([1, 2]), FinSet::from([1])]).expect("key");
    witness.check(left_key_increasing(&k) == expected, || format!("{:?}", left_key_increasing(&k)));
    witness.note = "columns {1,2},{2} have left key {1,2},{1}".into();
    out.push(witness.outcome("leftkey: a key need not be its own left key"));

    out.extend(key_properties(seed, trials));
    out.extend(tableau_properties(seed, trials));
    out
}
