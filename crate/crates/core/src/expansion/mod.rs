//! Lascoux expansions: the tableau rule for `𝔏_α · G_w(x_1, …, x_n)`, the
//! tableau rule for `𝔊_w`, and a linear-algebra basis expansion used as an
//! independent oracle.

mod basis;

pub use basis::expand_in_lascoux_basis;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combi::{cap_n, wt_key, WeakComposition};
use crate::error::{Error, Result};
use crate::hecke::{coxeter_length, hecke_eval, shift_perm, Permutation, Word};
use crate::leftkey::left_key_increasing;
use crate::polynomials::{
    grothendieck_in, grothendieck_stable_truncated, grothendieck_vars, key_polynomial, lascoux, LPolynomial,
};
use crate::setops::FinSet;
use crate::tableaux::{for_each_increasing, IncreasingConstraint, IncreasingTableau};

/// A finite sum `Σ c_γ(β) 𝔏_γ` with coefficients in `ℤ≥0[β]`. Each
/// coefficient is stored as its list of `β`-coefficients (index = `β`-degree)
/// without trailing zeros; zero coefficients are not stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ExpansionResult {
    terms: BTreeMap<WeakComposition, Vec<BigUint>>,
}

impl ExpansionResult {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c · β^k 𝔏_γ`.
    pub fn add(&mut self, gamma: WeakComposition, k: u32, c: BigUint) {
        if c.is_zero() {
            return;
        }
        let coeffs = self.terms.entry(gamma).or_default();
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigUint::zero());
        }
        coeffs[k] += c;
    }

    pub fn terms(&self) -> &BTreeMap<WeakComposition, Vec<BigUint>> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `β^k 𝔏_γ`.
    pub fn coeff(&self, gamma: &WeakComposition, k: u32) -> BigUint {
        self.terms
            .get(gamma)
            .and_then(|c| c.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// `(k, γ, c)` for every nonzero coefficient, sorted by `(k, γ)`.
    pub fn lines(&self) -> Vec<(u32, &WeakComposition, &BigUint)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .flat_map(|(g, cs)| {
                cs.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(k, c)| (k as u32, g, c))
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
        out
    }

    /// Sum of all coefficients at `β = 1`, i.e. the number of contributing
    /// tableaux.
    pub fn total_multiplicity(&self) -> BigUint {
        self.terms.values().flatten().sum()
    }

    /// `γ` listed once per unit of multiplicity, across all `β`-degrees.
    pub fn weights_with_multiplicity(&self) -> Vec<WeakComposition> {
        let mut out = Vec::new();
        for (k, g, c) in self.lines() {
            let _ = k;
            let mut i = BigUint::zero();
            while &i < c {
                out.push(g.clone());
                i += 1u32;
            }
        }
        out
    }

    /// Only the `β⁰` coefficients.
    pub fn beta_zero(&self) -> ExpansionResult {
        let mut out = ExpansionResult::new();
        for (g, cs) in &self.terms {
            if let Some(c) = cs.first() {
                out.add(g.clone(), 0, c.clone());
            }
        }
        out
    }

    /// `Σ c_γ(β) · basis(γ)` in `n` variables.
    pub fn evaluate_with(&self, n: usize, basis: impl Fn(&WeakComposition) -> LPolynomial) -> LPolynomial {
        let mut out = LPolynomial::zero(n);
        for (g, cs) in &self.terms {
            let b = basis(g);
            for (k, c) in cs.iter().enumerate() {
                if !c.is_zero() {
                    out = &out + &b.scaled(&BigInt::from(c.clone()), k as u32);
                }
            }
        }
        out
    }

    /// `Σ c_γ(β) 𝔏_γ` in `n` variables.
    pub fn to_polynomial(&self, n: usize) -> LPolynomial {
        self.evaluate_with(n, |g| lascoux(g, n))
    }
}

impl fmt::Debug for ExpansionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One line per nonzero coefficient, sorted by `(k, γ)`, e.g.
/// `b^2 L_(3,1,4) : 2`; the empty expansion renders as `0`.
impl fmt::Display for ExpansionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.lines();
        if lines.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, g, c)) in lines.into_iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            match k {
                0 => write!(f, "L_{g} : {c}")?,
                1 => write!(f, "b L_{g} : {c}")?,
                _ => write!(f, "b^{k} L_{g} : {c}")?,
            }
        }
        Ok(())
    }
}

/// `P₁` for `α`: column `c` is `{i + c − 1 : α_i ≥ c}`. The result is checked
/// to satisfy `wt(K₋(P₁)) = α`.
pub fn build_p1(alpha: &WeakComposition) -> Result<IncreasingTableau> {
    let width = alpha.entries().iter().copied().max().unwrap_or(0);
    let columns: Vec<FinSet> = (1..=width)
        .map(|c| {
            alpha
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, &a)| a >= c)
                .map(|(i, _)| i as u32 + c)
                .collect()
        })
        .collect();
    let p1 = IncreasingTableau::from_columns(&columns)?;
    check_p1(&p1, alpha)?;
    Ok(p1)
}

fn check_p1(p1: &IncreasingTableau, alpha: &WeakComposition) -> Result<()> {
    let wt = wt_key(&left_key_increasing(p1), alpha.len());
    if wt.as_ref() != Ok(alpha) {
        return Err(Error::Internal(format!(
            "P1 = {p1:?} has left-key weight {wt:?}, expected {alpha}"
        )));
    }
    Ok(())
}

/// Tuning for [`expand_product_with`].
#[derive(Clone, Debug)]
pub struct ProductOptions {
    /// Use this tableau instead of [`build_p1`]; it must have left-key
    /// weight `α`.
    pub p1: Option<IncreasingTableau>,
    /// Use this shift instead of the smallest admissible one; it must exceed
    /// `n` and every entry of `P₁`.
    pub shift: Option<u32>,
    /// Check the polynomial identity `𝔏_α · G_w = Σ c 𝔏_γ`.
    pub verify: bool,
}

impl Default for ProductOptions {
    fn default() -> Self {
        ProductOptions {
            p1: None,
            shift: None,
            verify: true,
        }
    }
}

/// The tableaux indexing the expansion of `𝔏_α · G_w(x_1, …, x_n)`.
#[derive(Clone, Debug)]
pub struct ProductTableaux {
    pub p1: IncreasingTableau,
    /// The shift `N`: letters of `w` are moved to `N + 1, N + 2, …`.
    pub shift: u32,
    pub shifted_w: Permutation,
    pub tableaux: Vec<IncreasingTableau>,
}

struct ProductConstraint<'a> {
    p1: &'a IncreasingTableau,
    shift: u32,
    target: &'a Permutation,
}

impl ProductConstraint<'_> {
    fn large_word(&self, letters: impl Iterator<Item = u32>) -> Word {
        Word::new(letters.filter(|&x| x > self.shift).collect())
    }
}

impl IncreasingConstraint for ProductConstraint<'_> {
    fn cell(&self, r: usize, c: usize, v: u32) -> bool {
        match self.p1.get(r, c) {
            Some(x) => v == x,
            None => v > self.shift,
        }
    }

    fn min_column_len(&self, c: usize) -> usize {
        self.p1.column_len(c)
    }

    fn prefix(&self, columns: &[Vec<u32>]) -> bool {
        let word = self.large_word(columns.iter().flat_map(|col| col.iter().rev().copied()));
        hecke_eval(&word).bruhat_leq(self.target)
    }

    fn accept(&self, t: &IncreasingTableau) -> bool {
        hecke_eval(&self.large_word(t.reading_word().into_vec().into_iter())) == *self.target
    }
}

/// Enumerates the increasing tableaux `P` with at most `n` rows whose
/// entries below `N` form `P₁` and whose larger entries, in reading order,
/// form a Hecke word of `1^N × w`.
pub fn product_tableaux(
    alpha: &WeakComposition,
    w: &Permutation,
    n: usize,
    opts: &ProductOptions,
) -> Result<ProductTableaux> {
    if alpha.len() != n {
        return Err(Error::LengthMismatch { len: alpha.len(), n });
    }
    let p1 = match &opts.p1 {
        Some(p) => {
            check_p1(p, alpha)?;
            p.clone()
        }
        None => build_p1(alpha)?,
    };
    let floor = (n as u32).max(p1.max_entry().unwrap_or(0));
    let shift = match opts.shift {
        Some(s) if s <= floor => {
            return Err(Error::invalid("shift", format!("{s} must exceed n and every entry of P1")));
        }
        Some(s) => s,
        None => floor + 1,
    };
    let shifted_w = shift_perm(w, shift as usize);
    let top = shifted_w.support() as u32;
    let alphabet: FinSet = p1.entries().iter().chain(shift + 1..top).collect();
    let constraint = ProductConstraint {
        p1: &p1,
        shift,
        target: &shifted_w,
    };
    let mut tableaux = Vec::new();
    for_each_increasing(n, &alphabet, &constraint, &mut |t| tableaux.push(t));
    Ok(ProductTableaux {
        p1,
        shift,
        shifted_w,
        tableaux,
    })
}

/// The Lascoux expansion of `𝔏_α · G_w(x_1, …, x_n)` with the default
/// options (identity check enabled).
pub fn expand_product(alpha: &WeakComposition, w: &Permutation, n: usize) -> Result<ExpansionResult> {
    expand_product_with(alpha, w, n, &ProductOptions::default())
}

/// The Lascoux expansion of `𝔏_α · G_w(x_1, …, x_n)`: each tableau `P` from
/// [`product_tableaux`] contributes `β^{|P|−ℓ(w)−|α|}` to
/// `𝔏_{wt(cap_n(K₋(P)))}`.
pub fn expand_product_with(
    alpha: &WeakComposition,
    w: &Permutation,
    n: usize,
    opts: &ProductOptions,
) -> Result<ExpansionResult> {
    let found = product_tableaux(alpha, w, n, opts)?;
    let base = coxeter_length(w) + alpha.size() as usize;
    let mut out = ExpansionResult::new();
    for p in &found.tableaux {
        let gamma = wt_key(&cap_n(&left_key_increasing(p), n)?, n)?;
        let k = p.size().checked_sub(base).ok_or_else(|| {
            Error::Internal(format!("tableau {p:?} is smaller than l(w) + |alpha|"))
        })?;
        out.add(gamma, k as u32, BigUint::one());
    }
    if opts.verify {
        let lhs = &lascoux(alpha, n) * &grothendieck_stable_truncated(w, n);
        let rhs = out.to_polynomial(n);
        if lhs != rhs {
            return Err(Error::IdentityMismatch(format!(
                "L_{alpha} * G_{w} in {n} variables: difference {}",
                lhs.try_sub(&rhs)?
            )));
        }
    }
    Ok(out)
}

/// Checks the `β = 0` specialization of an expansion of `𝔏_α · G_w`:
/// `κ_α · F_w(x_1, …, x_n) = Σ_{β⁰ terms} c_γ κ_γ`.
pub fn check_key_degeneration(
    alpha: &WeakComposition,
    w: &Permutation,
    n: usize,
    expansion: &ExpansionResult,
) -> Result<()> {
    let lhs = &key_polynomial(alpha, n) * &crate::polynomials::stanley_truncated(w, n);
    let rhs = expansion.beta_zero().evaluate_with(n, |g| key_polynomial(g, n));
    if lhs != rhs {
        return Err(Error::IdentityMismatch(format!(
            "key_{alpha} * F_{w} in {n} variables: difference {}",
            lhs.try_sub(&rhs)?
        )));
    }
    Ok(())
}

struct GrothendieckConstraint<'a> {
    target: &'a Permutation,
}

impl IncreasingConstraint for GrothendieckConstraint<'_> {
    fn prefix(&self, columns: &[Vec<u32>]) -> bool {
        let word = Word::new(columns.iter().flat_map(|col| col.iter().rev().copied()).collect());
        hecke_eval(&word).bruhat_leq(self.target)
    }

    fn accept(&self, t: &IncreasingTableau) -> bool {
        hecke_eval(&t.reading_word()) == *self.target
    }
}

/// The Lascoux expansion of `𝔊_w` in [`grothendieck_vars`]`(w)` variables.
pub fn expand_grothendieck(w: &Permutation) -> Result<ExpansionResult> {
    expand_grothendieck_in(w, grothendieck_vars(w))
}

/// The Lascoux expansion of `𝔊_w` in `n` variables: the sum over increasing
/// tableaux `P` with entries in `[n]`, at most `n` rows and `[word(P)]_H = w`
/// of `β^{|P|−ℓ(w)} 𝔏_{wt(K₋(P))}`, checked against [`grothendieck_in`].
pub fn expand_grothendieck_in(w: &Permutation, n: usize) -> Result<ExpansionResult> {
    if n < w.support().saturating_sub(1) {
        return Err(Error::invalid(
            "variable count",
            format!("{n} variables cannot hold the Grothendieck polynomial of {w}"),
        ));
    }
    let len = coxeter_length(w);
    let alphabet: FinSet = (1..=n as u32).collect();
    let mut out = ExpansionResult::new();
    let mut failure = None;
    for_each_increasing(n, &alphabet, &GrothendieckConstraint { target: w }, &mut |p| {
        match wt_key(&left_key_increasing(&p), n) {
            Ok(gamma) => out.add(gamma, (p.size() - len) as u32, BigUint::one()),
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let lhs = grothendieck_in(w, n);
    let rhs = out.to_polynomial(n);
    if lhs != rhs {
        return Err(Error::IdentityMismatch(format!(
            "G_{w} in {n} variables: difference {}",
            lhs.try_sub(&rhs)?
        )));
    }
    Ok(out)
}
