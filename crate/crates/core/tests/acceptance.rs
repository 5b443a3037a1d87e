//! Acceptance checks for the library: worked fixtures, exhaustive
//! small-scale verification of the product rule and of Ψ, the left-key
//! oracle, the set-operation lemma suite, the Grothendieck expansion,
//! degenerations, and the left-key change law under reverse insertion.
//!
//! Every comparison is exact. Each criterion also has a wall-clock limit.
//! One PASS/FAIL line is printed per criterion and the process exits with a
//! nonzero status if any criterion fails.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use lascoux::combi::{key_leq, sorted_partition, Key, WeakComposition};
use lascoux::expansion::{expand_grothendieck, expand_product};
use lascoux::hecke::{hecke_eval, shift_perm, CompatiblePair, Permutation, Word};
use lascoux::insertion::{psi, psi_inverse, reverse_insert, TableauPair};
use lascoux::leftkey::{left_key_increasing, left_key_rssyt, left_key_via_jdt};
use lascoux::polynomials::{
    grothendieck, grothendieck_stable_truncated, grothendieck_vars, key_polynomial, lascoux, schur,
    stanley_truncated,
};
use lascoux::setops::FinSet;
use lascoux::tableaux::{IncreasingTableau, Rsvt};
use lascoux::verify::expansion::{check_grid_case, grid_cases, small_compositions, worked_example};
use lascoux::verify::insertion::{small_compatible_pairs, small_pairs, symmetric_group};
use lascoux::verify::leftkey::box_tableaux;
use lascoux::verify::sample::{random_increasing, rng};
use lascoux::verify::setops::{properties, random_trials, sweep};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(xs: &[u32]) -> FinSet {
    xs.iter().copied().collect()
}

fn tableau(rows: &[&[u32]]) -> IncreasingTableau {
    IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).expect("increasing tableau")
}

fn rsvt(rows: &[&[&[u32]]]) -> Rsvt {
    Rsvt::new(rows.iter().map(|r| r.iter().map(|c| set(c)).collect()).collect()).expect("valid RSVT")
}

fn pair(a: &[u32], i: &[u32]) -> CompatiblePair {
    CompatiblePair::new(Word::new(a.to_vec()), Word::new(i.to_vec())).expect("compatible pair")
}

/// The Lascoux polynomial of (0,2,1) in three variables, term for term.
fn lascoux_fixture() -> Check {
    let expected = "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3 \
                    + b*x1^2*x2^2 + 2*b*x1^2*x2*x3 + 2*b*x1*x2^2*x3 \
                    + b^2*x1^2*x2^2*x3";
    let l = lascoux(&WeakComposition::from([0, 2, 1]), 3);
    ensure(l.to_string() == expected, || format!("got {l}"))?;
    let mut by_degree: HashMap<u32, Vec<String>> = HashMap::new();
    for (m, c) in l.terms() {
        by_degree.entry(m.beta).or_default().push(c.to_string());
    }
    let mut b1 = by_degree.get(&1).cloned().unwrap_or_default();
    b1.sort();
    ensure(
        by_degree.get(&0).map(Vec::len) == Some(5) && b1 == ["1", "2", "2"] && by_degree.get(&2).map(Vec::len) == Some(1),
        || format!("term structure {by_degree:?}"),
    )?;
    Ok("9 terms: 5 of degree 0 in b, coefficients 2,1,2 in degree 1, one in degree 2".into())
}

/// Reverse insertion from cell (4,2) of a five-row tableau with α = 0.
fn reverse_insertion_fixture() -> Check {
    let p = tableau(&[&[1, 2, 3, 5], &[2, 5, 6], &[3, 6], &[6, 7], &[8]]);
    let start = Instant::now();
    let out = reverse_insert(&p, 3, 1, false).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let trace: Vec<String> = out.trace.iter().map(ToString::to_string).collect();
    ensure(out.m == 3, || format!("m = {}", out.m))?;
    ensure(out.p_prime == tableau(&[&[1, 2, 3, 5], &[2, 5, 6], &[3, 7], &[6, 8], &[8]]), || {
        format!("P' = {:?}", out.p_prime)
    })?;
    ensure(trace == ["IR", "DR", "D", "NR"], || format!("trace {trace:?}"))?;
    ensure(elapsed < Duration::from_millis(1), || format!("insertion took {elapsed:?}"))?;
    Ok(format!("m = 3, trace IR, DR, D, NR in {elapsed:?}"))
}

/// Ψ of a two-row pair, its first step, and the inverse map.
fn psi_fixture() -> Check {
    let p = tableau(&[&[1, 2], &[3]]);
    let q = rsvt(&[&[&[3], &[2, 1]], &[&[2, 1]]]);
    let p_prime = tableau(&[&[1, 3], &[3]]);
    let q_prime = rsvt(&[&[&[3], &[2]], &[&[2, 1]]]);
    let full = TableauPair::new(p.clone(), q).map_err(|e| e.to_string())?;
    let rest = TableauPair::new(p_prime.clone(), q_prime).map_err(|e| e.to_string())?;

    let start = Instant::now();
    let step = reverse_insert(&p, 0, 1, false).map_err(|e| e.to_string())?;
    let image = psi(&full).map_err(|e| e.to_string())?;
    let inner = psi(&rest).map_err(|e| e.to_string())?;
    let back = psi_inverse(&image).map_err(|e| e.to_string())?;
    let inner_back = psi_inverse(&inner).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    ensure(step.m == 2 && step.p_prime == p_prime, || format!("first step gave {step:?}"))?;
    ensure(image == pair(&[2, 1, 3, 1, 3], &[1, 1, 2, 2, 3]), || format!("Ψ(P, Q) = {image}"))?;
    ensure(inner == pair(&[1, 3, 1, 3], &[1, 2, 2, 3]), || format!("Ψ(P', Q') = {inner}"))?;
    ensure(back == full, || format!("Ψ⁻¹ gave {back:?}"))?;
    ensure(inner_back == rest, || format!("Ψ⁻¹ gave {inner_back:?}"))?;
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!("(21313, 11223) via (1313, 1223), inverted, in {elapsed:?}"))
}

/// 𝔏_(1,0,2) · G_321(x₁, x₂, x₃).
fn worked_product() -> Check {
    let ex = worked_example().map_err(|e| format!("product rule failed: {e}"))?;
    ensure(ex.oracle_agrees, || "basis oracle disagrees".into())?;
    ensure(ex.beta0_row_matches, || "degree-0 row differs from the printed display".into())?;
    ensure(ex.beta3_row_matches, || "degree-3 row differs from the printed display".into())?;
    ensure(ex.passed(), || ex.verdict())?;
    Ok(ex.verdict())
}

/// Every α with n ≤ 3 and |α| ≤ 3, and every w ∈ S₃.
fn product_grid() -> Check {
    let cases = grid_cases();
    let perms: HashSet<Permutation> = cases.iter().map(|(_, w, _)| w.clone()).collect();
    ensure(perms.len() == 6, || format!("grid uses {} permutations", perms.len()))?;
    for n in 1..=3 {
        let expected = small_compositions(n, 3).len() * 6;
        let got = cases.iter().filter(|c| c.2 == n).count();
        ensure(got == expected, || format!("n = {n}: {got} cases, expected {expected}"))?;
    }
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(a, w, n)| check_grid_case(a, w, *n).err())
        .collect();
    ensure(failures.is_empty(), || format!("{} failures; first: {}", failures.len(), failures[0]))?;
    Ok(format!("{} cases", cases.len()))
}

/// Ψ on all pairs with |P| ≤ 4, entries ≤ 4, n = 4, and surjectivity onto
/// compatible pairs with letters, i-values and length ≤ 4.
fn psi_bijection() -> Check {
    let n = 4;
    let domain = small_pairs(4, 4, n);
    let images: Vec<CompatiblePair> = domain
        .par_iter()
        .map(|pr| psi(pr).map_err(|e| format!("Ψ failed on {pr:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let mut inverse: HashMap<&CompatiblePair, &TableauPair> = HashMap::new();
    for (pr, x) in domain.iter().zip(&images) {
        if let Some(other) = inverse.insert(x, pr) {
            return Err(format!("{other:?} and {pr:?} both map to {x}"));
        }
        let wq = pr.q().weight(n).map_err(|e| e.to_string())?;
        ensure(Ok(wq.entries().to_vec()) == x.i().weight(n), || format!("weight: {pr:?} ↦ {x}"))?;
        ensure(hecke_eval(&pr.p().reading_word().rev()) == hecke_eval(x.a()), || {
            format!("Hecke class: {pr:?} ↦ {x}")
        })?;
        let in_tb = key_leq(&left_key_rssyt(&pr.q().flatten_l()), &left_key_increasing(pr.p()));
        ensure(in_tb == x.is_bounded(), || format!("boundedness: {pr:?} ↦ {x}"))?;
    }
    let targets = small_compatible_pairs(4, 4, 4);
    for x in &targets {
        let Some(pre) = inverse.get(x) else {
            return Err(format!("{x} has no preimage among the enumerated pairs"));
        };
        let computed = psi_inverse(x).map_err(|e| e.to_string())?;
        ensure(&computed == *pre, || format!("Ψ⁻¹({x}) = {computed:?}, expected {pre:?}"))?;
    }
    Ok(format!("{} pairs injective; {} compatible pairs all hit", domain.len(), targets.len()))
}

/// The jeu-de-taquin left key equals the column-chain left key on every
/// increasing tableau in a 3×3 box with entries ≤ 5.
fn left_key_oracle() -> Check {
    let all = box_tableaux(3, 3, 5);
    ensure(all.len() > 400, || format!("only {} tableaux enumerated", all.len()))?;
    let bad: Vec<String> = all
        .par_iter()
        .filter_map(|p| match left_key_via_jdt(p) {
            Ok(k) if k == left_key_increasing(p) => None,
            Ok(k) => Some(format!("{p:?}: jdt {k:?}, chains {:?}", left_key_increasing(p))),
            Err(e) => Some(format!("{p:?}: {e}")),
        })
        .collect();
    ensure(bad.is_empty(), || format!("{} mismatches; first: {}", bad.len(), bad[0]))?;
    Ok(format!("{} tableaux", all.len()))
}

/// The lemma suite for ◁: exhaustive over subsets of [6], at least 10⁴
/// random instances each over subsets of [12].
fn set_lemmas() -> Check {
    let props = properties();
    let mut summary = Vec::new();
    for (k, prop) in props.iter().enumerate() {
        let swept = sweep(prop);
        ensure(swept.failures == 0 && swept.checked > 0, || {
            format!("{} (sweep): {:?}", prop.name, swept.first_failure)
        })?;
        let mut r = rng(2024, k as u64);
        let (random, draws) = random_trials(prop, &mut r, 10_000);
        ensure(random.failures == 0, || format!("{} (random): {:?}", prop.name, random.first_failure))?;
        ensure(random.checked >= 10_000 && draws >= 10_000, || {
            format!("{}: only {} random checks over {draws} draws", prop.name, random.checked)
        })?;
        summary.push(swept.checked + random.checked);
    }
    Ok(format!("{} properties, {} instances", props.len(), summary.iter().sum::<u64>()))
}

/// expand_grothendieck(w) evaluates back to 𝔊_w for all w ∈ S₄.
fn grothendieck_expansion() -> Check {
    let perms = symmetric_group(4);
    for w in &perms {
        let e = expand_grothendieck(w).map_err(|e| format!("{w}: {e}"))?;
        let n = grothendieck_vars(w);
        ensure(e.to_polynomial(n) == grothendieck(w), || format!("{w}: {e}"))?;
    }
    Ok(format!("{} permutations", perms.len()))
}

/// β = 0 degenerations of the product rule, Schur polynomials, and shift
/// invariance of truncated stable Grothendieck polynomials.
fn degenerations() -> Check {
    let mut checked = 0;
    for (alpha, w, n) in grid_cases() {
        let e = expand_product(&alpha, &w, n).map_err(|e| e.to_string())?;
        let lhs = &key_polynomial(&alpha, n) * &stanley_truncated(&w, n);
        let rhs = e.beta_zero().evaluate_with(n, |g| key_polynomial(g, n));
        ensure(lhs == rhs, || format!("key degeneration fails for {alpha}, {w}, n = {n}"))?;
        checked += 1;
    }
    for n in 1..=4 {
        for alpha in small_compositions(n, 5).into_iter().filter(WeakComposition::is_weakly_increasing) {
            let s = schur(&sorted_partition(&alpha), n);
            ensure(lascoux(&alpha, n).beta_zero() == s, || format!("Schur mismatch at {alpha}"))?;
            checked += 1;
        }
    }
    for w in symmetric_group(3) {
        for shift in 0..=4 {
            for n in 1..=3 {
                let g = grothendieck_stable_truncated(&w, n);
                ensure(grothendieck_stable_truncated(&shift_perm(&w, shift), n) == g, || {
                    format!("shift {shift} changes G_{w} in {n} variables")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} identities"))
}

fn column(k: &Key, c: usize) -> FinSet {
    k.column(c).cloned().unwrap_or_default()
}

/// Reverse insertion with α = 0 keeps the left key; with α = 1 at column C
/// it removes min(K_C ∖ K_{C+1}) from column C and changes nothing else.
fn change_law() -> Check {
    let mut r = rng(7, 0);
    let trials = 2000;
    for _ in 0..trials {
        let p = random_increasing(&mut r, 5, 5, 2);
        let &(row, col) = p.outer_cells().choose(&mut r).ok_or("empty tableau sampled")?;
        let alpha = r.gen_bool(0.5);
        let res = reverse_insert(&p, row, col, alpha).map_err(|e| format!("{p:?} ({row}, {col}): {e}"))?;
        let before = left_key_increasing(&p);
        let after = left_key_increasing(&res.p_prime);
        let width = before.num_columns().max(after.num_columns());
        for c in 0..width {
            let expected = if alpha && c == col {
                let kc = column(&before, c);
                let y = FinSet::min(&kc.difference(&column(&before, c + 1)))
                    .ok_or_else(|| format!("{p:?}: K_C ⊆ K_(C+1) at column {c}"))?;
                kc.without(y)
            } else {
                column(&before, c)
            };
            ensure(column(&after, c) == expected, || {
                format!("{p:?} cell ({row}, {col}) α = {}: column {c} is {:?}", u8::from(alpha), column(&after, c))
            })?;
        }
    }
    Ok(format!("{trials} random triples"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 11] = [
        ("Lascoux polynomial of (0,2,1)", lascoux_fixture, Duration::from_secs(1)),
        ("reverse insertion fixture", reverse_insertion_fixture, Duration::from_millis(1)),
        ("Ψ fixture", psi_fixture, Duration::from_millis(1)),
        ("L_(1,0,2) * G_321 in three variables", worked_product, Duration::from_secs(30)),
        ("product rule grid", product_grid, Duration::from_secs(600)),
        ("Ψ bijectivity on small pairs", psi_bijection, Duration::from_secs(300)),
        ("jeu de taquin left key oracle", left_key_oracle, Duration::from_secs(300)),
        ("◁ lemma suite", set_lemmas, Duration::from_secs(120)),
        ("Grothendieck polynomials of S4 in the Lascoux basis", grothendieck_expansion, Duration::from_secs(120)),
        ("degenerations and invariances", degenerations, Duration::from_secs(120)),
        ("left key change law under reverse insertion", change_law, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (k, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed <= limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(msg) => println!("PASS {:>2} {name} [{elapsed:.2?}]: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{elapsed:.2?}]: {msg}", k + 1);
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
