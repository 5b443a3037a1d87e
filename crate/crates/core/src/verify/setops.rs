//! Properties of `◁` and `⪯`: each is checked exhaustively on all pairs or
//! triples of subsets of `[6]` and on random subsets of `[12]`, where draws
//! that do not meet a property's hypotheses are resampled.

use rand::Rng;
use rayon::prelude::*;

use super::sample::{
    all_subsets, random_dominance_chain, random_dominated_from, random_subset, random_tail_dominated, rng,
    subsets_of, SuiteRng,
};
use super::{Outcome, Tally};
use crate::setops::{dominates, triangle_left, triangle_left_recursive, FinSet};

/// Universe for the exhaustive sweep.
pub const SWEEP_MAX: u32 = 6;
/// Universe for random trials.
pub const RANDOM_MAX: u32 = 12;
/// Cap on subsets `S′ ⊆ S` (or `T′ ⊆ T`) examined per instance.
const SUBSET_LIMIT: usize = 64;

/// How random instances are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sampler {
    /// Independent random sets.
    Plain,
    /// Half plain, half dominance chains `U ⪯ T ⪯ S`.
    Chain,
    /// `(U, T)` with `U` strictly dominated by the top of `T`.
    Tail,
    /// `(U, T, S)` built around a random threshold `x ∉ T`.
    Threshold,
}

type Check = fn(&[FinSet], u32, &mut Tally);

/// A named property over `arity` sets; `check` records one instance per
/// admissible choice of its auxiliary parameters.
pub struct SetProperty {
    pub name: &'static str,
    arity: usize,
    sampler: Sampler,
    check: Check,
}

fn tl(t: &FinSet, s: &FinSet) -> FinSet {
    triangle_left(t, s)
}

fn show(sets: &[FinSet]) -> String {
    sets.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn definitions_agree(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    tally.check(tl(t, s) == triangle_left_recursive(t, s), || show(&[t.clone(), s.clone()]));
}

fn unpicked_element_is_irrelevant(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    let r = tl(t, s);
    for x in t.difference(&r).iter() {
        tally.check(tl(&t.without(x), s) == r, || format!("T={t} S={s} x={x}"));
    }
}

fn intermediate_sets_agree(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    let r = tl(t, s);
    for extra in subsets_of(&t.difference(&r), SUBSET_LIMIT) {
        let t2 = r.union(&extra);
        tally.check(tl(&t2, s) == r, || format!("T={t} S={s} T'={t2}"));
    }
}

fn removing_picked_element(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    let r = tl(t, s);
    for x in r.iter() {
        let spare = t.less_than(x).difference(&r);
        let expected = match FinSet::max(&spare) {
            None => r.without(x),
            Some(x2) => r.without(x).with(x2),
        };
        tally.check(tl(&t.without(x), s) == expected, || format!("T={t} S={s} x={x}"));
    }
}

fn full_size_iff_dominated(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    tally.check((tl(t, s).len() == s.len()) == dominates(t, s), || format!("T={t} S={s}"));
}

fn result_is_dominated(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    if dominates(t, s) {
        tally.check(dominates(&tl(t, s), s), || format!("T={t} S={s}"));
    }
}

fn small_entries_survive(s: &[FinSet], u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    if !dominates(t, s) {
        return;
    }
    let r = tl(t, s);
    for x in 1..=u + 1 {
        let i = t.less_than(x).len();
        if i != s.at_most(x).len() {
            continue;
        }
        tally.check((1..=i).all(|j| r.nth(j) == t.nth(j)), || format!("T={t} S={s} x={x}"));
    }
}

fn small_entries_survive_exchange(s: &[FinSet], u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    if !dominates(t, s) {
        return;
    }
    let r = tl(t, s);
    for x in (1..=u + 1).filter(|&x| !s.contains(x)) {
        if s.less_than(x).len() != t.less_than(x).len() {
            continue;
        }
        for y in s.less_than(x).iter() {
            let s2 = s.with(x).without(y);
            let r2 = tl(t, &s2);
            let ok = dominates(t, &s2)
                && (1..=s.len())
                    .filter(|&i| s.nth(i).expect("in range") < x)
                    .all(|i| r.nth(i) == r2.nth(i) && r.nth(i) == t.nth(i));
            tally.check(ok, || format!("T={t} S={s} x={x} y={y}"));
        }
    }
}

fn removal_lowers_entrywise(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    if !dominates(t, s) {
        return;
    }
    let r = tl(t, s);
    for x in t.iter() {
        let t2 = t.without(x);
        if !dominates(&t2, s) {
            continue;
        }
        let r2 = tl(&t2, s);
        tally.check((1..=s.len()).all(|i| r.nth(i) >= r2.nth(i)), || format!("T={t} S={s} x={x}"));
    }
}

fn splits_at_threshold(s: &[FinSet], u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    let r = tl(t, s);
    for x in 1..=u + 1 {
        if !dominates(&t.at_least(x), &s.greater_than(x)) {
            continue;
        }
        let split = tl(&t.less_than(x), &s.at_most(x)).union(&tl(&t.at_least(x), &s.greater_than(x)));
        tally.check(r == split, || format!("T={t} S={s} x={x}"));
    }
}

fn threshold_element_not_picked(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    let r = tl(t, s);
    for x in t.iter() {
        if s.contains(x + 1) || !dominates(&t.at_least(x + 1), &s.greater_than(x + 1)) {
            continue;
        }
        tally.check(!r.contains(x), || format!("T={t} S={s} x={x}"));
    }
}

fn monotone_in_right_argument(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    let r = tl(t, s);
    for s2 in subsets_of(s, SUBSET_LIMIT) {
        tally.check(tl(t, &s2).is_subset(&r), || format!("T={t} S={s} S'={s2}"));
    }
}

fn removing_min_of_difference(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    if !dominates(t, s) {
        return;
    }
    let r = tl(t, s);
    for s2 in subsets_of(s, SUBSET_LIMIT) {
        if s2.len() == s.len() {
            continue;
        }
        let a = FinSet::min(&s.difference(&s2)).expect("proper subset");
        let ok = match FinSet::min(&r.difference(&tl(t, &s2))) {
            Some(b) => tl(t, &s.without(a)) == r.without(b),
            None => false,
        };
        tally.check(ok, || format!("T={t} S={s} S'={s2}"));
    }
}

fn exchange_in_middle(s: &[FinSet], u: u32, tally: &mut Tally) {
    let (uu, t, s) = (&s[0], &s[1], &s[2]);
    if !dominates(uu, t) || !dominates(t, s) {
        return;
    }
    for x in (1..=u + 1).filter(|&x| !t.contains(x)) {
        if uu.less_than(x).len() != t.less_than(x).len() {
            continue;
        }
        let Some(y) = t.less_than(x).iter().find(|&y| dominates(&t.with(x).without(y), s)) else {
            continue;
        };
        let t2 = t.with(x).without(y);
        let mut ok = tl(uu, t) == tl(uu, &t2);
        for s2 in subsets_of(s, SUBSET_LIMIT) {
            ok &= tl(uu, &tl(t, &s2)) == tl(uu, &tl(&t2, &s2));
        }
        tally.check(ok, || format!("U={uu} T={t} S={s} x={x} y={y}"));
    }
}

fn smallest_removable_element(s: &[FinSet], _u: u32, tally: &mut Tally) {
    let (t, s) = (&s[0], &s[1]);
    if !dominates(t, s) || t.len() <= s.len() {
        return;
    }
    let Some(y) = t.iter().find(|&y| dominates(&t.without(y), s)) else {
        return;
    };
    let r = tl(t, s);
    let mut ok = (1..=t.len())
        .filter(|&j| t.nth(j).expect("in range") < y)
        .all(|j| r.nth(j) == t.nth(j));
    ok &= !r.contains(y);
    let t2 = t.without(y);
    for s2 in subsets_of(s, SUBSET_LIMIT) {
        ok &= tl(&t2, &s2) == tl(t, &s2);
    }
    tally.check(ok, || format!("T={t} S={s} y={y}"));
}

/// `|U| ≤ |T|` and `U(i) < T(i + δ)` with `δ = |T| − |U|`.
fn tail_dominated(uu: &FinSet, t: &FinSet) -> bool {
    uu.len() <= t.len() && {
        let delta = t.len() - uu.len();
        (1..=uu.len()).all(|i| uu.nth(i) < t.nth(i + delta))
    }
}

fn large_element_in_right_set(s: &[FinSet], u: u32, tally: &mut Tally) {
    let (uu, t) = (&s[0], &s[1]);
    if !tail_dominated(uu, t) {
        return;
    }
    let base = tl(uu, t);
    let proper: Vec<FinSet> = subsets_of(t, SUBSET_LIMIT)
        .into_iter()
        .filter(|t2| t2.len() < t.len())
        .collect();
    for x in t.max().unwrap_or(0) + 1..=u + 1 {
        let mut ok = tl(uu, &t.with(x)) == base && base == *uu;
        for t2 in &proper {
            let x2 = FinSet::max(&t.difference(t2)).expect("proper subset");
            ok &= tl(uu, &t2.with(x)) == tl(uu, &t2.with(x2));
        }
        tally.check(ok, || format!("U={uu} T={t} x={x}"));
    }
}

fn insert_into_middle(s: &[FinSet], u: u32, tally: &mut Tally) {
    let (uu, t, s) = (&s[0], &s[1], &s[2]);
    for x in (1..=u + 1).filter(|&x| !t.contains(x)) {
        if !dominates(&uu.at_least(x), &t.greater_than(x)) || !tail_dominated(&uu.less_than(x), &t.less_than(x)) {
            continue;
        }
        tally.check(tl(uu, &tl(t, s)) == tl(uu, &tl(&t.with(x), s)), || {
            format!("U={uu} T={t} S={s} x={x}")
        });
    }
}

/// Every set property, in a fixed order.
pub fn properties() -> Vec<SetProperty> {
    use Sampler::*;
    let p = |name, arity, sampler, check: Check| SetProperty {
        name,
        arity,
        sampler,
        check,
    };
    vec![
        p("◁ recursive and greedy definitions agree", 2, Plain, definitions_agree),
        p("◁ ignores an unpicked element of T", 2, Plain, unpicked_element_is_irrelevant),
        p("◁ agrees on every T' between T◁S and T", 2, Plain, intermediate_sets_agree),
        p("◁ after removing a picked element", 2, Plain, removing_picked_element),
        p("|T◁S| = |S| iff T ⪯ S", 2, Chain, full_size_iff_dominated),
        p("T ⪯ S implies T◁S ⪯ S", 2, Chain, result_is_dominated),
        p("small entries of T survive ◁ under dominance", 2, Chain, small_entries_survive),
        p("small entries survive exchanging an element of S", 2, Chain, small_entries_survive_exchange),
        p("removing an element of T lowers T◁S entrywise", 2, Chain, removal_lowers_entrywise),
        p("◁ splits at a dominance threshold", 2, Chain, splits_at_threshold),
        p("threshold element below a gap is never picked", 2, Chain, threshold_element_not_picked),
        p("◁ is monotone in its right argument", 2, Plain, monotone_in_right_argument),
        p("removing min(S∖S') removes min((T◁S)∖(T◁S'))", 2, Chain, removing_min_of_difference),
        p("exchange in the middle of a ◁ chain", 3, Chain, exchange_in_middle),
        p("smallest removable element of T", 2, Chain, smallest_removable_element),
        p("adding a large element to the right set", 2, Tail, large_element_in_right_set),
        p("adding an element to the middle of a ◁ chain", 3, Threshold, insert_into_middle),
    ]
}

/// Runs `prop` on all pairs or triples of subsets of `[SWEEP_MAX]`.
pub fn sweep(prop: &SetProperty) -> Tally {
    let subsets = all_subsets(SWEEP_MAX);
    let parts: Vec<Tally> = subsets
        .par_iter()
        .map(|a| {
            let mut tally = Tally::new();
            for b in &subsets {
                if prop.arity == 2 {
                    (prop.check)(&[a.clone(), b.clone()], SWEEP_MAX, &mut tally);
                } else {
                    for c in &subsets {
                        (prop.check)(&[a.clone(), b.clone(), c.clone()], SWEEP_MAX, &mut tally);
                    }
                }
            }
            tally
        })
        .collect();
    let mut total = Tally::new();
    for part in parts {
        total.merge(part);
    }
    total
}

fn draw(rng: &mut SuiteRng, prop: &SetProperty) -> Option<Vec<FinSet>> {
    let plain = |rng: &mut SuiteRng| (0..prop.arity).map(|_| random_subset(rng, RANDOM_MAX)).collect();
    match prop.sampler {
        Sampler::Plain => Some(plain(rng)),
        Sampler::Chain => {
            if rng.gen_bool(0.5) {
                Some(plain(rng))
            } else {
                random_dominance_chain(rng, RANDOM_MAX, prop.arity)
            }
        }
        Sampler::Tail => {
            let t = random_subset(rng, RANDOM_MAX);
            Some(vec![random_tail_dominated(rng, &t, 1)?, t])
        }
        Sampler::Threshold => {
            let x = rng.gen_range(1..=RANDOM_MAX);
            let t_low: FinSet = random_subset(rng, x - 1);
            let t_high: FinSet = random_subset(rng, RANDOM_MAX).greater_than(x);
            let u_low = random_tail_dominated(rng, &t_low, 1)?;
            let u_high = random_dominated_from(rng, &t_high, x, RANDOM_MAX)?;
            Some(vec![u_low.union(&u_high), t_low.union(&t_high), random_subset(rng, RANDOM_MAX)])
        }
    }
}

/// Draws until `trials` instances meet the hypotheses (at most
/// `200 · trials + 1000` attempts). Returns the tally and the number of
/// non-vacuous draws.
pub fn random_trials(prop: &SetProperty, rng: &mut SuiteRng, trials: u64) -> (Tally, u64) {
    let cap = trials.saturating_mul(200).saturating_add(1000);
    let mut tally = Tally::new();
    let mut found = 0;
    let mut attempts = 0;
    while found < trials && attempts < cap {
        attempts += 1;
        let Some(sets) = draw(rng, prop) else {
            continue;
        };
        let mut local = Tally::new();
        (prop.check)(&sets, RANDOM_MAX, &mut local);
        if local.checked > 0 {
            found += 1;
            tally.merge(local);
        }
    }
    if found < trials {
        tally.fail(format!("only {found} of {trials} random draws met the hypotheses"));
    }
    (tally, found)
}

/// Exhaustive sweep plus `trials` random instances for every property.
pub fn run(seed: u64, trials: u64) -> Vec<Outcome> {
    properties()
        .iter()
        .enumerate()
        .map(|(idx, prop)| {
            let mut tally = sweep(prop);
            let swept = tally.checked;
            let mut r = rng(seed, idx as u64);
            let (random, draws) = random_trials(prop, &mut r, trials);
            let random_checked = random.checked;
            tally.merge(random);
            if swept == 0 {
                tally.fail("exhaustive sweep found no instance meeting the hypotheses");
            }
            tally.note = format!("sweep {swept}, random {random_checked} over {draws} draws");
            tally.outcome(format!("setops: {}", prop.name))
        })
        .collect()
}
