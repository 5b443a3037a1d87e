//! Expansion and polynomial properties: the Lascoux fixture, the worked
//! `𝔏_(1,0,2) · G_321` example, the product rule on a grid of small cases
//! against the basis oracle, the Grothendieck rule on `S₄`, degenerations,
//! invariances, and the shuffle decomposition behind the product rule.

use std::collections::HashSet;

use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

use super::insertion::symmetric_group;
use super::sample::{random_key, rng};
use super::{Outcome, Tally};
use crate::combi::{cap_n, key_leq, sorted_partition, wt_key, Partition, WeakComposition};
use crate::expansion::{
    check_key_degeneration, expand_grothendieck, expand_in_lascoux_basis, expand_product, expand_product_with,
    product_tableaux, ExpansionResult, ProductOptions,
};
use crate::hecke::{enumerate_compatible_pairs, hecke_eval, shift_perm, PairMode, Permutation};
use crate::insertion::{psi, psi_inverse, TableauPair};
use crate::leftkey::{left_key_increasing, left_key_rssyt};
use crate::polynomials::{
    grothendieck_stable_truncated, key_polynomial, lascoux, schur, stanley_truncated, LPolynomial, Monomial,
};
use crate::tableaux::{enumerate_increasing, for_each_rsvt, FnConstraint, IncreasingTableau};
use crate::Result;

/// `𝔏_(0,2,1)` in three variables, as printed by [`LPolynomial`]'s display.
pub const LASCOUX_021: &str = "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3 \
     + b*x1^2*x2^2 + 2*b*x1^2*x2*x3 + 2*b*x1*x2^2*x3 + b^2*x1^2*x2^2*x3";

/// The weights listed for the worked product example, one per tableau.
pub const WORKED_WEIGHT_LIST: [[u32; 3]; 19] = [
    [1, 1, 4],
    [2, 0, 4],
    [3, 0, 3],
    [1, 2, 3],
    [2, 1, 3],
    [2, 2, 2],
    [2, 1, 4],
    [2, 1, 4],
    [1, 2, 4],
    [3, 0, 4],
    [2, 2, 3],
    [2, 2, 3],
    [3, 1, 3],
    [3, 1, 3],
    [3, 1, 4],
    [3, 1, 4],
    [2, 2, 4],
    [3, 2, 3],
    [3, 2, 4],
];

/// The displayed final expansion of the worked example as
/// `(β-degree, γ, coefficient)`.
pub const WORKED_DISPLAY: [(u32, [u32; 3], u32); 14] = [
    (0, [1, 1, 4], 1),
    (0, [2, 0, 4], 1),
    (0, [3, 0, 3], 1),
    (0, [1, 2, 3], 1),
    (0, [2, 1, 3], 1),
    (0, [2, 2, 2], 1),
    (1, [2, 1, 4], 2),
    (1, [1, 2, 4], 1),
    (1, [2, 2, 3], 2),
    (1, [3, 1, 3], 2),
    (2, [3, 1, 4], 2),
    (2, [2, 2, 4], 1),
    (2, [3, 2, 3], 1),
    (3, [3, 2, 4], 1),
];

/// The worked product example `𝔏_(1,0,2) · G_321(x₁, x₂, x₃)`, evaluated and
/// compared with both printed versions.
#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub result: ExpansionResult,
    /// Number of contributing tableaux.
    pub tableaux: usize,
    /// The basis oracle applied to `𝔏_α · G_w` returns the same expansion.
    pub oracle_agrees: bool,
    pub beta0_row_matches: bool,
    pub beta3_row_matches: bool,
    /// The multiset of weights equals the 19-entry list.
    pub matches_weight_list: bool,
    /// The expansion equals the 18-term display.
    pub matches_display: bool,
}

impl WorkedExample {
    pub fn verdict(&self) -> String {
        match (self.matches_weight_list, self.matches_display) {
            (true, false) => format!(
                "{} tableaux; matches the 19-entry weight list including (3,0,4); \
                 the 18-term display omits b L_(3,0,4)",
                self.tableaux
            ),
            (false, true) => format!("{} tableaux; matches the 18-term display", self.tableaux),
            (true, true) => "matches both printed versions".into(),
            (false, false) => "matches neither printed version".into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.oracle_agrees
            && self.beta0_row_matches
            && self.beta3_row_matches
            && self.matches_weight_list != self.matches_display
    }
}

fn display_expansion() -> ExpansionResult {
    let mut out = ExpansionResult::new();
    for (k, g, c) in WORKED_DISPLAY {
        out.add(WeakComposition::from(g), k, BigUint::from(c));
    }
    out
}

fn row(e: &ExpansionResult, k: u32) -> Vec<(WeakComposition, BigUint)> {
    e.lines()
        .into_iter()
        .filter(|&(kk, _, _)| kk == k)
        .map(|(_, g, c)| (g.clone(), c.clone()))
        .collect()
}

/// Runs the worked example. The product rule's built-in identity check is
/// part of the computation, so an `Err` means the identity failed.
pub fn worked_example() -> Result<WorkedExample> {
    let alpha = WeakComposition::from([1, 0, 2]);
    let w = Permutation::from_one_line(vec![3, 2, 1])?;
    let n = 3;
    let result = expand_product(&alpha, &w, n)?;
    let tableaux = product_tableaux(&alpha, &w, n, &ProductOptions::default())?.tableaux.len();
    let lhs = &lascoux(&alpha, n) * &grothendieck_stable_truncated(&w, n);
    let oracle_agrees = expand_in_lascoux_basis(&lhs, n).is_ok_and(|o| o == result);
    let display = display_expansion();
    let mut listed: Vec<WeakComposition> = WORKED_WEIGHT_LIST.iter().map(|&g| WeakComposition::from(g)).collect();
    listed.sort();
    let mut found = result.weights_with_multiplicity();
    found.sort();
    Ok(WorkedExample {
        beta0_row_matches: row(&result, 0) == row(&display, 0),
        beta3_row_matches: row(&result, 3) == row(&display, 3) && result.lines().iter().all(|l| l.0 <= 3),
        matches_weight_list: found == listed,
        matches_display: result == display,
        oracle_agrees,
        tableaux,
        result,
    })
}

/// The compositions of length `n` and size at most `max_size`.
pub fn small_compositions(n: usize, max_size: u32) -> Vec<WeakComposition> {
    (0..=max_size).flat_map(|s| WeakComposition::all_of_size(n, s)).collect()
}

/// One product-rule grid case: the built-in identity, the basis oracle, and
/// the `β = 0` degeneration. Returns a failure description.
pub fn check_grid_case(alpha: &WeakComposition, w: &Permutation, n: usize) -> std::result::Result<(), String> {
    let e = expand_product(alpha, w, n).map_err(|e| format!("L_{alpha} * G_{w}, n={n}: {e}"))?;
    let lhs = &lascoux(alpha, n) * &grothendieck_stable_truncated(w, n);
    if !lhs.is_nonnegative() {
        return Err(format!("L_{alpha} * G_{w}, n={n}: negative coefficient"));
    }
    match expand_in_lascoux_basis(&lhs, n) {
        Ok(o) if o == e => {}
        Ok(o) => return Err(format!("L_{alpha} * G_{w}, n={n}: oracle gives {o:?}, rule gives {e:?}")),
        Err(err) => return Err(format!("L_{alpha} * G_{w}, n={n}: oracle failed: {err}")),
    }
    check_key_degeneration(alpha, w, n, &e).map_err(|err| format!("L_{alpha} * G_{w}, n={n}: {err}"))
}

/// Every `(α, w, n)` with `n ≤ 3`, `|α| ≤ 3` and `w ∈ S₃`.
pub fn grid_cases() -> Vec<(WeakComposition, Permutation, usize)> {
    let s3 = symmetric_group(3);
    let mut out = Vec::new();
    for n in 1..=3 {
        for alpha in small_compositions(n, 3) {
            for w in &s3 {
                out.push((alpha.clone(), w.clone(), n));
            }
        }
    }
    out
}

fn grid() -> Outcome {
    let cases = grid_cases();
    let results: Vec<std::result::Result<(), String>> =
        cases.par_iter().map(|(a, w, n)| check_grid_case(a, w, *n)).collect();
    let mut tally = Tally::new();
    for r in results {
        match r {
            Ok(()) => tally.check(true, String::new),
            Err(e) => tally.check(false, || e),
        }
    }
    tally.note = "identity, basis oracle and β = 0 degeneration for n ≤ 3, |α| ≤ 3, w ∈ S3".into();
    tally.outcome("expansion: product rule on the small grid")
}

/// Increasing tableaux other than `build_p1(α)` whose left key has weight
/// `α`, with entries in `[max]`.
fn alternative_p1s(alpha: &WeakComposition, max: u32, limit: usize) -> Vec<IncreasingTableau> {
    let n = alpha.len();
    let shape = sorted_partition(alpha);
    let constraint = FnConstraint {
        cell: |r: usize, c: usize, _v: u32| c < shape.row(r),
        accept: |p: &IncreasingTableau| {
            p.shape() == shape && wt_key(&left_key_increasing(p), n).as_ref() == Ok(alpha)
        },
    };
    enumerate_increasing(n, &(1..=max).collect(), &constraint)
        .into_iter()
        .take(limit)
        .collect()
}

fn independence() -> Outcome {
    let mut tally = Tally::new();
    let s3 = symmetric_group(3);
    for n in 1..=3 {
        for alpha in small_compositions(n, 2) {
            for w in &s3 {
                let Ok(base) = expand_product(&alpha, w, n) else {
                    tally.fail(format!("L_{alpha} * G_{w}, n={n} failed"));
                    continue;
                };
                let floor = build_floor(&alpha, n);
                for shift in floor + 1..=floor + 3 {
                    let opts = ProductOptions { shift: Some(shift), ..Default::default() };
                    let other = expand_product_with(&alpha, w, n, &opts);
                    tally.check(other.as_ref() == Ok(&base), || format!("L_{alpha} * G_{w}, n={n}, N={shift}"));
                }
                for p1 in alternative_p1s(&alpha, n as u32 + 2, 4) {
                    let opts = ProductOptions { p1: Some(p1.clone()), ..Default::default() };
                    let other = expand_product_with(&alpha, w, n, &opts);
                    tally.check(other.as_ref() == Ok(&base), || format!("L_{alpha} * G_{w}, n={n}, P1={p1:?}"));
                }
            }
        }
    }
    tally.outcome("expansion: product rule is independent of N and of P1")
}

fn build_floor(alpha: &WeakComposition, n: usize) -> u32 {
    let p1 = crate::expansion::build_p1(alpha).expect("P1 exists");
    (n as u32).max(p1.max_entry().unwrap_or(0))
}

fn grothendieck_rule() -> Outcome {
    let s4 = symmetric_group(4);
    let results: Vec<(Permutation, Result<ExpansionResult>)> =
        s4.par_iter().map(|w| (w.clone(), expand_grothendieck(w))).collect();
    let mut tally = Tally::new();
    for (w, r) in results {
        match r {
            Ok(_) => tally.check(true, String::new),
            Err(e) => tally.check(false, || format!("{w}: {e}")),
        }
    }
    tally.note = "all 24 permutations of S4".into();
    tally.outcome("expansion: Grothendieck rule reproduces G_w for w in S4")
}

fn degenerations() -> Vec<Outcome> {
    let mut out = Vec::new();

    let mut schur_check = Tally::new();
    for n in 1..=4 {
        for alpha in small_compositions(n, 5).into_iter().filter(WeakComposition::is_weakly_increasing) {
            let mut parts: Vec<usize> = alpha.entries().iter().rev().map(|&a| a as usize).filter(|&a| a > 0).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = Partition::new(parts).expect("partition");
            schur_check.check(key_polynomial(&alpha, n) == schur(&lambda, n), || format!("{alpha}"));
        }
    }
    out.push(schur_check.outcome("polynomials: key polynomials of increasing α are Schur polynomials"));

    let mut shift = Tally::new();
    for w in symmetric_group(3) {
        for n in 1..=3 {
            let base = grothendieck_stable_truncated(&w, n);
            for big_n in 0..=4 {
                shift.check(grothendieck_stable_truncated(&shift_perm(&w, big_n), n) == base, || {
                    format!("w={w}, N={big_n}, n={n}")
                });
            }
        }
    }
    out.push(shift.outcome("polynomials: G_w(x1..xn) is unchanged by shifting w"));

    let mut symmetric = Tally::new();
    for w in symmetric_group(4) {
        for n in 1..=3 {
            let f = stanley_truncated(&w, n);
            for sigma in symmetric_group(n as u32) {
                let perm: Vec<usize> = sigma.one_line_padded(n).iter().map(|&v| v as usize - 1).collect();
                symmetric.check(f.permute_vars(&perm) == f, || format!("w={w}, n={n}, σ={sigma}"));
            }
        }
    }
    out.push(symmetric.outcome("polynomials: truncated Stanley polynomials are symmetric"));

    let mut nonneg = Tally::new();
    for n in 1..=3 {
        for alpha in small_compositions(n, 4) {
            nonneg.check(lascoux(&alpha, n).is_nonnegative(), || format!("L_{alpha}"));
        }
    }
    for w in symmetric_group(4) {
        nonneg.check(crate::polynomials::grothendieck(&w).is_nonnegative(), || format!("G_{w}"));
        for n in 1..=3 {
            nonneg.check(grothendieck_stable_truncated(&w, n).is_nonnegative(), || format!("G_{w}, n={n}"));
        }
    }
    out.push(nonneg.outcome("polynomials: generating functions have nonnegative coefficients"));
    out
}

/// Sum over RSVTs `Q` of the key's shape with entries in `[n]` and
/// `K₋(L(Q)) ≤ T` of `β^{|wt Q| − |wt T|} x^{wt Q}`.
fn capped_key_sum(t: &crate::combi::Key, n: usize) -> LPolynomial {
    let mut out = LPolynomial::zero(n);
    let cells = t.num_cells() as u32;
    for_each_rsvt(&t.shape(), n, &mut |q| {
        if key_leq(&left_key_rssyt(&q.flatten_l()), t) {
            let wt = q.weight(n).expect("entries in [n]");
            out.add_term(Monomial::new(q.total_size() as u32 - cells, wt.entries().to_vec()), 1.into());
        }
    });
    out
}

fn capped_keys(seed: u64, trials: u64) -> Outcome {
    let mut r = rng(seed, 300);
    let mut tally = Tally::new();
    for _ in 0..trials.min(300) {
        let n = r.gen_range(1..=3usize);
        let t = random_key(&mut r, n, n as u32 + 3, 3);
        let ok = cap_n(&t, n)
            .and_then(|c| wt_key(&c, n))
            .is_ok_and(|g| capped_key_sum(&t, n) == lascoux(&g, n));
        tally.check(ok, || format!("T={t:?}, n={n}"));
    }
    tally.outcome("polynomials: sum over RSVTs below a key is the Lascoux polynomial of its cap")
}

/// Checks the shuffle decomposition for one product case: `Ψ` maps the
/// pairs `(P, Q)` with `P` from the product rule, entries of `Q` in `[n]`
/// and `K₋(L(Q)) ≤ K₋(P)` onto pairs that split at `N` into a pair from
/// `P₁` and a compatible pair of `1^N × w` with `i ≤ n`, bijectively.
pub fn check_shuffle(alpha: &WeakComposition, w: &Permutation, n: usize) -> std::result::Result<usize, String> {
    let ctx = |e: &dyn std::fmt::Display| format!("L_{alpha} * G_{w}, n={n}: {e}");
    let found = product_tableaux(alpha, w, n, &ProductOptions::default()).map_err(|e| ctx(&e))?;
    let shift = found.shift;
    // Ψ reverses the reading word, so its images carry Hecke words of the
    // inverse permutation, matching the pair formula for G_w.
    let target = found.shifted_w.inverse();
    let c2: HashSet<_> = enumerate_compatible_pairs(&target, PairMode::CapI(n as u32))
        .into_iter()
        .collect();
    let mut c1_size = 0usize;
    for_each_rsvt(&found.p1.shape(), n, &mut |q| {
        if key_leq(&left_key_rssyt(&q.flatten_l()), &left_key_increasing(&found.p1)) {
            c1_size += 1;
        }
    });
    let mut splits = HashSet::new();
    let mut count = 0usize;
    for p in &found.tableaux {
        let kp = left_key_increasing(p);
        let mut qs = Vec::new();
        for_each_rsvt(&p.shape(), n, &mut |q| {
            if key_leq(&left_key_rssyt(&q.flatten_l()), &kp) {
                qs.push(q);
            }
        });
        for q in qs {
            count += 1;
            let pair = TableauPair::new(p.clone(), q).map_err(|e| ctx(&e))?;
            let image = psi(&pair).map_err(|e| ctx(&e))?;
            if !image.is_bounded() {
                return Err(ctx(&format!("Ψ({pair:?}) = {image} is not bounded")));
            }
            let small = image.restrict(|_, a| a < shift);
            let large = image.restrict(|_, a| a > shift);
            let pre = psi_inverse(&small).map_err(|e| ctx(&e))?;
            if *pre.p() != found.p1 || !small.is_bounded() {
                return Err(ctx(&format!("{small} does not come from P1")));
            }
            if !c2.contains(&large) || hecke_eval(large.a()) != target {
                return Err(ctx(&format!("{large} is not a compatible pair of 1^N × w")));
            }
            if !splits.insert((small, large)) {
                return Err(ctx(&format!("two pairs split to the same parts ({image})")));
            }
        }
    }
    if count != c1_size * c2.len() {
        return Err(ctx(&format!("{count} pairs but {c1_size} × {} parts", c2.len())));
    }
    Ok(count)
}

fn shuffle() -> Outcome {
    let mut cases: Vec<(WeakComposition, Permutation, usize)> = grid_cases()
        .into_iter()
        .filter(|(a, _, n)| *n <= 2 || a.size() <= 2)
        .collect();
    cases.push((
        WeakComposition::from([1, 0, 2]),
        Permutation::from_one_line(vec![3, 2, 1]).expect("permutation"),
        3,
    ));
    let results: Vec<std::result::Result<usize, String>> =
        cases.par_iter().map(|(a, w, n)| check_shuffle(a, w, *n)).collect();
    let mut tally = Tally::new();
    let mut pairs = 0;
    for r in results {
        match r {
            Ok(c) => {
                pairs += c;
                tally.check(true, String::new);
            }
            Err(e) => tally.check(false, || e),
        }
    }
    tally.note = format!("{pairs} tableau pairs split across the grid and the worked example");
    tally.outcome("expansion: Ψ images split into a P1 part and a w part bijectively")
}

/// Runs every expansion and polynomial property.
pub fn run(seed: u64, trials: u64) -> Vec<Outcome> {
    let mut out = Vec::new();

    let mut fixture = Tally::new();
    let l = lascoux(&WeakComposition::from([0, 2, 1]), 3);
    fixture.check(l.to_string() == LASCOUX_021, || l.to_string());
    let oracle = expand_in_lascoux_basis(&l, 3);
    let single = {
        let mut e = ExpansionResult::new();
        e.add(WeakComposition::from([0, 2, 1]), 0, BigUint::from(1u32));
        e
    };
    fixture.check(oracle.as_ref() == Ok(&single), || format!("{oracle:?}"));
    out.push(fixture.outcome("polynomials: L_(0,2,1) fixture and its basis expansion"));

    let mut worked = Tally::new();
    match worked_example() {
        Ok(report) => {
            worked.check(report.passed(), || format!("{report:?}"));
            worked.note = report.verdict();
        }
        Err(e) => worked.fail(format!("identity check failed: {e}")),
    }
    out.push(worked.outcome("expansion: L_(1,0,2) * G_321 in three variables"));

    out.push(grid());
    out.push(independence());
    out.push(grothendieck_rule());
    out.extend(degenerations());
    out.push(capped_keys(seed, trials));
    out.push(shuffle());
    out
}
