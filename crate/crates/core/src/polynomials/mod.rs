//! Exact polynomials in `x_1, …, x_n` over `ℤ[β]` and the tableau/pair
//! generating functions: Lascoux, key, Grothendieck, truncated stable
//! Grothendieck and truncated Stanley polynomials.

mod lpoly;

pub use lpoly::{LPolynomial, Monomial};

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::combi::{key_leq, key_of, sorted_partition, Partition, WeakComposition};
use crate::hecke::{coxeter_length, enumerate_compatible_pairs, PairMode, Permutation};
use crate::leftkey::left_key_rssyt;
use crate::tableaux::{enumerate_ssyt, for_each_rsvt};

type LascouxCache = RwLock<HashMap<(WeakComposition, usize), LPolynomial>>;

fn lascoux_cache() -> &'static LascouxCache {
    static CACHE: OnceLock<LascouxCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `𝔏_α` in `n` variables: the sum over RSVTs `T` of shape
/// `sorted_partition(α)` with entries in `[n]` and `K₋(L(T)) ≤ key(α)` of
/// `β^{|wt(T)|−|α|} x^{wt(T)}`. Results are memoized.
///
/// # Panics
/// If `α` does not have length `n`.
pub fn lascoux(alpha: &WeakComposition, n: usize) -> LPolynomial {
    assert_eq!(alpha.len(), n, "the composition must have exactly n parts");
    let cache_key = (alpha.clone(), n);
    if let Some(p) = lascoux_cache().read().expect("cache lock").get(&cache_key) {
        return p.clone();
    }
    let p = lascoux_uncached(alpha, n);
    lascoux_cache()
        .write()
        .expect("cache lock")
        .insert(cache_key, p.clone());
    p
}

fn lascoux_uncached(alpha: &WeakComposition, n: usize) -> LPolynomial {
    let target = key_of(alpha);
    let size = alpha.size();
    let mut out = LPolynomial::zero(n);
    for_each_rsvt(&sorted_partition(alpha), n, &mut |t| {
        if key_leq(&left_key_rssyt(&t.flatten_l()), &target) {
            let wt = t.weight(n).expect("entries lie in [n]");
            let beta = t.total_size() as u32 - size;
            out.add_term(Monomial::new(beta, wt.entries().to_vec()), BigInt::one());
        }
    });
    debug_assert!(out.is_nonnegative());
    out
}

/// The key polynomial `κ_α`: the `β⁰` part of `𝔏_α`.
pub fn key_polynomial(alpha: &WeakComposition, n: usize) -> LPolynomial {
    lascoux(alpha, n).beta_zero()
}

/// Number of variables used by [`grothendieck`]: one less than the support
/// bound of `w`, and at least one.
pub fn grothendieck_vars(w: &Permutation) -> usize {
    w.support().saturating_sub(1).max(1)
}

/// `𝔊_w`: the sum over bounded compatible pairs `(a, i)` with
/// `[a]_H = w⁻¹` of `β^{ℓ(a)−ℓ(w)} x^{wt(i)}`, in
/// [`grothendieck_vars`]`(w)` variables.
pub fn grothendieck(w: &Permutation) -> LPolynomial {
    grothendieck_in(w, grothendieck_vars(w))
}

/// [`grothendieck`] written in `n` variables.
///
/// # Panics
/// If `n` is smaller than the largest variable index that can occur.
pub fn grothendieck_in(w: &Permutation, n: usize) -> LPolynomial {
    pair_sum(w, PairMode::Bounded, n)
}

/// `G_w(x_1, …, x_n)`: the sum over compatible pairs `(a, i)` with
/// `[a]_H = w⁻¹` and `i ≤ n` of `β^{ℓ(a)−ℓ(w)} x^{wt(i)}`.
pub fn grothendieck_stable_truncated(w: &Permutation, n: usize) -> LPolynomial {
    pair_sum(w, PairMode::CapI(n as u32), n)
}

/// `F_w(x_1, …, x_n)`: the `β⁰` part of `G_w(x_1, …, x_n)`.
pub fn stanley_truncated(w: &Permutation, n: usize) -> LPolynomial {
    grothendieck_stable_truncated(w, n).beta_zero()
}

fn pair_sum(w: &Permutation, mode: PairMode, n: usize) -> LPolynomial {
    let len = coxeter_length(w) as u32;
    let mut out = LPolynomial::zero(n);
    for pair in enumerate_compatible_pairs(&w.inverse(), mode) {
        let wt = pair.i().weight(n).expect("i-letters lie in [n]");
        out.add_term(Monomial::new(pair.len() as u32 - len, wt), BigInt::one());
    }
    debug_assert!(out.is_nonnegative());
    out
}

/// Schur polynomial `s_λ(x_1, …, x_n)` from semistandard tableaux; an
/// oracle independent of the reverse-tableau machinery.
pub fn schur(lambda: &Partition, n: usize) -> LPolynomial {
    let mut out = LPolynomial::zero(n);
    for t in enumerate_ssyt(lambda, n) {
        let mut wt = vec![0u32; n];
        for &x in t.iter().flatten() {
            wt[x as usize - 1] += 1;
        }
        out.add_term(Monomial::new(0, wt), BigInt::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn lascoux_fixture() {
        let p = lascoux(&WeakComposition::from([0, 2, 1]), 3);
        assert_eq!(
            p.to_string(),
            "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3 + b*x1^2*x2^2 + 2*b*x1^2*x2*x3 \
             + 2*b*x1*x2^2*x3 + b^2*x1^2*x2^2*x3"
        );
        assert_eq!(lascoux(&WeakComposition::zero(2), 2), LPolynomial::one(2));
        assert_eq!(key_polynomial(&WeakComposition::from([0, 2, 1]), 3).num_terms(), 5);
    }

    #[test]
    fn schur_degeneration() {
        let alpha = WeakComposition::from([0, 1, 2]);
        let lambda = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(key_polynomial(&alpha, 3), schur(&lambda, 3));
    }

    #[test]
    fn grothendieck_small() {
        assert_eq!(grothendieck(&Permutation::identity()), LPolynomial::one(1));
        assert_eq!(grothendieck(&Permutation::simple(1)), LPolynomial::var(1, 1));
        assert_eq!(grothendieck(&perm(&[3, 1, 2])).to_string(), "x1^2");
        let g = grothendieck(&perm(&[3, 1, 5, 2, 4]));
        assert_eq!(g.coeff(&Monomial::new(2, vec![3, 2, 1, 0])), BigInt::one());
    }

    #[test]
    fn stable_truncated_small() {
        let s1 = Permutation::simple(1);
        assert_eq!(grothendieck_stable_truncated(&s1, 2).to_string(), "x1 + x2 + b*x1*x2");
        assert_eq!(stanley_truncated(&s1, 2).to_string(), "x1 + x2");
        assert_eq!(grothendieck_stable_truncated(&Permutation::identity(), 3), LPolynomial::one(3));
    }
}
