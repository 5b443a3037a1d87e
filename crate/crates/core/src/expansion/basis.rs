//! Expansion of an arbitrary polynomial in the Lascoux basis by exact linear
//! algebra. This makes no use of tableau rules and serves as an independent
//! check of them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::ExpansionResult;
use crate::combi::WeakComposition;
use crate::error::{Error, Result};
use crate::polynomials::{lascoux, LPolynomial, Monomial};

/// Writes `p` as `Σ c_γ(β) 𝔏_γ` with `c_γ ∈ ℤ≥0[β]`.
///
/// Lascoux polynomials are homogeneous for the grading `deg x_i = 1`,
/// `deg β = −1`, so the problem splits by this weighted degree `d`. For each
/// `d` the unknowns are the coefficients of `β^k 𝔏_γ` with `|γ| − k = d`,
/// `0 ≤ k ≤` the largest `β`-degree of `p`, and `γ_i` at most the degree of
/// `p` in `x_i`. Each block is solved exactly over `ℚ`.
///
/// Errors: [`Error::NotInSpan`] when the system is inconsistent;
/// [`Error::NegativeCoefficient`] when the unique solution is negative or
/// non-integral somewhere.
pub fn expand_in_lascoux_basis(p: &LPolynomial, n: usize) -> Result<ExpansionResult> {
    if p.nvars() != n {
        return Err(Error::VariableMismatch { left: p.nvars(), right: n });
    }
    let degs: Vec<u32> = (0..n).map(|i| p.degree_in(i)).collect();
    let max_beta = p.max_beta_degree();
    let mut by_degree: BTreeMap<i64, LPolynomial> = BTreeMap::new();
    for (m, c) in p.terms() {
        by_degree
            .entry(m.weighted_degree())
            .or_insert_with(|| LPolynomial::zero(n))
            .add_term(m.clone(), c.clone());
    }
    let mut out = ExpansionResult::new();
    for (d, part) in by_degree {
        let mut unknowns: Vec<(WeakComposition, u32)> = Vec::new();
        for k in 0..=max_beta {
            let size = d + k as i64;
            if size < 0 {
                continue;
            }
            for gamma in bounded_compositions(&degs, size as u32) {
                unknowns.push((gamma, k));
            }
        }
        let solution = solve_block(&part, &unknowns, n)?;
        for ((gamma, k), c) in unknowns.into_iter().zip(solution) {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() || !c.is_integer() {
                return Err(Error::NegativeCoefficient(format!("b^{k} L_{gamma} = {c}")));
            }
            let c: BigUint = c.to_integer().to_biguint().expect("non-negative");
            out.add(gamma, k, c);
        }
    }
    Ok(out)
}

/// Weak compositions of `size` with `γ_i ≤ bounds[i]`.
fn bounded_compositions(bounds: &[u32], size: u32) -> Vec<WeakComposition> {
    fn go(bounds: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        let i = cur.len();
        if i == bounds.len() {
            if left == 0 {
                out.push(WeakComposition::new(cur.clone()));
            }
            return;
        }
        let rest: u32 = bounds[i + 1..].iter().sum();
        for v in 0..=bounds[i].min(left) {
            if left - v > rest {
                continue;
            }
            cur.push(v);
            go(bounds, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bounds, size, &mut Vec::new(), &mut out);
    out
}

fn solve_block(target: &LPolynomial, unknowns: &[(WeakComposition, u32)], n: usize) -> Result<Vec<BigRational>> {
    let gammas: BTreeSet<&WeakComposition> = unknowns.iter().map(|(g, _)| g).collect();
    let polys: BTreeMap<&WeakComposition, LPolynomial> = gammas
        .into_par_iter()
        .map(|g| (g, lascoux(g, n)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let columns: Vec<LPolynomial> = unknowns
        .iter()
        .map(|(g, k)| polys[g].scaled(&BigInt::from(1), *k))
        .collect();
    let monomials: BTreeSet<&Monomial> = columns
        .iter()
        .flat_map(|c| c.terms().keys())
        .chain(target.terms().keys())
        .collect();
    let width = unknowns.len();
    let mut matrix: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|m| {
            columns
                .iter()
                .map(|c| BigRational::from_integer(c.coeff(m)))
                .chain(std::iter::once(BigRational::from_integer(target.coeff(m))))
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut matrix, width);
    if matrix
        .iter()
        .skip(pivots.len())
        .any(|row| !row[width].is_zero())
    {
        return Err(Error::NotInSpan);
    }
    if pivots.len() < width {
        return Err(Error::Internal(format!(
            "candidate Lascoux polynomials are linearly dependent (rank {} of {width})",
            pivots.len()
        )));
    }
    let mut solution = vec![BigRational::zero(); width];
    for (row, &col) in pivots.iter().enumerate() {
        solution[col] = matrix[row][width].clone();
    }
    Ok(solution)
}

/// Reduced row echelon form over the first `width` columns; returns the pivot
/// column of each leading row.
fn row_reduce(matrix: &mut [Vec<BigRational>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        let Some(found) = (row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(row, found);
        let inv = matrix[row][col].recip();
        for x in matrix[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = matrix[row].clone();
        for (r, other) in matrix.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn single_lascoux() {
        let gamma = WeakComposition::from([0, 2, 1]);
        let res = expand_in_lascoux_basis(&lascoux(&gamma, 3), 3).unwrap();
        let mut expected = ExpansionResult::new();
        expected.add(gamma, 0, BigUint::one());
        assert_eq!(res, expected);
    }

    #[test]
    fn diagnostics() {
        let x1 = LPolynomial::var(2, 1);
        let neg = x1.scaled(&BigInt::from(-1), 0);
        assert!(matches!(expand_in_lascoux_basis(&neg, 2), Err(Error::NegativeCoefficient(_))));
        assert_eq!(
            expand_in_lascoux_basis(&x1, 3),
            Err(Error::VariableMismatch { left: 2, right: 3 })
        );
        // x2 = L_(0,1) − L_(1,0) − β L_(1,1) needs indices outside the degree
        // bounds of x2, so the bounded system is inconsistent.
        let x2 = LPolynomial::var(2, 2);
        assert_eq!(expand_in_lascoux_basis(&x2, 2), Err(Error::NotInSpan));
    }
}
