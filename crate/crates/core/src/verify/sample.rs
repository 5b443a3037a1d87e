//! Seeded random generators and small exhaustive families used by the
//! property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combi::{Key, Partition};
use crate::setops::FinSet;
use crate::tableaux::IncreasingTableau;

pub type SuiteRng = ChaCha8Rng;

/// The deterministic generator used everywhere in the suites. Distinct
/// `stream` values give independent sequences for the same seed.
pub fn rng(seed: u64, stream: u64) -> SuiteRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// A random subset of `[max]` with a randomly chosen density, so that both
/// sparse and dense sets are common.
pub fn random_subset(rng: &mut SuiteRng, max: u32) -> FinSet {
    let density: f64 = rng.gen_range(0.1..0.9);
    (1..=max).filter(|_| rng.gen_bool(density)).collect()
}

/// A random `T ⊆ [max]` with `T ⪯ S`: `T(i)` is drawn from
/// `(T(i−1), S(i) − 1]`, then extra elements above `T(|S|)` may be added.
/// Returns `None` when the draw gets stuck.
pub fn random_dominated(rng: &mut SuiteRng, s: &FinSet, max: u32) -> Option<FinSet> {
    random_dominated_from(rng, s, 1, max)
}

/// [`random_dominated`] with every element of `T` at least `lo`.
pub fn random_dominated_from(rng: &mut SuiteRng, s: &FinSet, lo: u32, max: u32) -> Option<FinSet> {
    let mut t = Vec::with_capacity(s.len() + 2);
    let mut prev = lo - 1;
    for si in s.iter() {
        let hi = si - 1;
        if hi <= prev {
            return None;
        }
        let v = rng.gen_range(prev + 1..=hi);
        t.push(v);
        prev = v;
    }
    let extra_density: f64 = rng.gen_range(0.0..0.6);
    for v in prev + 1..=max {
        if rng.gen_bool(extra_density) {
            t.push(v);
        }
    }
    Some(FinSet::from_iter(t))
}

/// A random `U` with elements at least `lo`, `|U| ≤ |T|` and `U(i) < T(i + δ)` for
/// `δ = |T| − |U|`, i.e. `U` is strictly dominated by the top of `T`.
/// Returns `None` when the draw gets stuck.
pub fn random_tail_dominated(rng: &mut SuiteRng, t: &FinSet, lo: u32) -> Option<FinSet> {
    let size = rng.gen_range(0..=t.len());
    let delta = t.len() - size;
    let mut u = Vec::with_capacity(size);
    let mut prev = lo - 1;
    for i in 1..=size {
        let hi = t.nth(i + delta).expect("index within T") - 1;
        if hi <= prev {
            return None;
        }
        let v = rng.gen_range(prev + 1..=hi);
        u.push(v);
        prev = v;
    }
    Some(FinSet::from_iter(u))
}

/// Random `S`, then sets each dominated by the previous one:
/// `[…, U, T, S]` with `U ⪯ T ⪯ S`, of the requested length.
pub fn random_dominance_chain(rng: &mut SuiteRng, max: u32, len: usize) -> Option<Vec<FinSet>> {
    let mut chain = vec![random_subset(rng, max)];
    while chain.len() < len {
        let next = random_dominated(rng, chain.last().expect("nonempty"), max)?;
        chain.push(next);
    }
    chain.reverse();
    Some(chain)
}

/// All `2^max` subsets of `[max]`.
pub fn all_subsets(max: u32) -> Vec<FinSet> {
    (0u32..1 << max)
        .map(|mask| (1..=max).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

/// Subsets of `set`, at most `limit` of them (in bitmask order).
pub fn subsets_of(set: &FinSet, limit: usize) -> Vec<FinSet> {
    let elems = set.as_slice();
    let total = if elems.len() >= 63 { u64::MAX } else { 1u64 << elems.len() };
    (0..total)
        .take(limit)
        .map(|mask| {
            elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// A random partition inside a `rows × cols` box with at least one cell.
pub fn random_shape(rng: &mut SuiteRng, rows: usize, cols: usize) -> Partition {
    let nrows = rng.gen_range(1..=rows);
    let mut parts: Vec<usize> = (0..nrows).map(|_| rng.gen_range(1..=cols)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("weakly decreasing positive parts")
}

/// A random increasing tableau: a random shape, each entry one more than
/// the larger of its left and upper neighbours plus a random gap in
/// `0..=max_gap`.
pub fn random_increasing(rng: &mut SuiteRng, rows: usize, cols: usize, max_gap: u32) -> IncreasingTableau {
    let shape = random_shape(rng, rows, cols);
    let mut t: Vec<Vec<u32>> = Vec::with_capacity(shape.len());
    for r in 0..shape.len() {
        let mut row = Vec::with_capacity(shape.row(r));
        for c in 0..shape.row(r) {
            let left = if c > 0 { row[c - 1] } else { 0 };
            let above = if r > 0 { t[r - 1][c] } else { 0 };
            row.push(left.max(above) + 1 + rng.gen_range(0..=max_gap));
        }
        t.push(row);
    }
    IncreasingTableau::new(t).expect("strictly increasing by construction")
}

/// A random key with at most `rows` rows, entries in `[max_entry]` and at
/// most `max_cols` columns: each column is a random nonempty subset of the
/// previous one.
pub fn random_key(rng: &mut SuiteRng, rows: usize, max_entry: u32, max_cols: usize) -> Key {
    let mut pool: Vec<u32> = (1..=max_entry).collect();
    pool.shuffle(rng);
    let height = rng.gen_range(1..=rows.min(max_entry as usize));
    let mut col: Vec<u32> = pool[..height].to_vec();
    let ncols = rng.gen_range(1..=max_cols);
    let mut columns = Vec::with_capacity(ncols);
    for _ in 0..ncols {
        columns.push(col.iter().copied().collect::<FinSet>());
        let keep = rng.gen_range(1..=col.len());
        col.shuffle(rng);
        col.truncate(keep);
    }
    Key::from_columns(columns).expect("nested nonempty columns")
}
