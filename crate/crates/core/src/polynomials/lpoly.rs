use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A monomial `β^beta · x^exps`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub beta: u32,
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn new(beta: u32, exps: Vec<u32>) -> Self {
        Monomial { beta, exps }
    }

    /// Total `x`-degree.
    pub fn x_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `x`-degree minus `β`-degree; Lascoux polynomials are homogeneous for
    /// this grading.
    pub fn weighted_degree(&self) -> i64 {
        self.x_degree() as i64 - self.beta as i64
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            beta: self.beta + other.beta,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

/// A polynomial in `x_1, …, x_n` whose coefficients are integer polynomials
/// in `β`, stored sparsely without zero terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, Monomial::new(0, vec![0; nvars]), BigInt::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, coeff: BigInt) -> Self {
        assert_eq!(m.exps.len(), nvars, "exponent vector length must equal the number of variables");
        let mut p = Self::zero(nvars);
        p.add_term(m, coeff);
        p
    }

    /// `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        Self::monomial(nvars, Monomial::new(0, exps), BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Adds `coeff · m` in place.
    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        debug_assert_eq!(m.exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &LPolynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LPolynomial) -> Result<LPolynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LPolynomial) -> Result<LPolynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LPolynomial) -> Result<LPolynomial> {
        self.check_vars(other)?;
        let mut out = LPolynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by `c · β^k`.
    pub fn scaled(&self, c: &BigInt, k: u32) -> LPolynomial {
        let mut out = LPolynomial::zero(self.nvars);
        for (m, coeff) in &self.terms {
            out.add_term(Monomial::new(m.beta + k, m.exps.clone()), coeff * c);
        }
        out
    }

    /// Sets `β = 0`.
    pub fn beta_zero(&self) -> LPolynomial {
        LPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.beta == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Renames `x_i ↦ x_{σ(i)}` for a permutation `σ` of `0..n` (0-based).
    pub fn permute_vars(&self, sigma: &[usize]) -> LPolynomial {
        let mut out = LPolynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; self.nvars];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[sigma[i]] = e;
            }
            out.add_term(Monomial::new(m.beta, exps), c.clone());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Largest exponent of `x_i` (0-based) over all terms.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exps[i]).max().unwrap_or(0)
    }

    pub fn max_beta_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.beta).max().unwrap_or(0)
    }
}

impl Add for &LPolynomial {
    type Output = LPolynomial;

    /// Panics on mismatched variable counts; use [`LPolynomial::try_add`] to
    /// handle that case.
    fn add(self, other: &LPolynomial) -> LPolynomial {
        self.try_add(other).expect("same number of variables")
    }
}

impl Mul for &LPolynomial {
    type Output = LPolynomial;

    /// Panics on mismatched variable counts; use [`LPolynomial::try_mul`] to
    /// handle that case.
    fn mul(self, other: &LPolynomial) -> LPolynomial {
        self.try_mul(other).expect("same number of variables")
    }
}

impl fmt::Debug for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Plain-text rendering with `b` for `β`, e.g. `x1^2*x3 + 2*b*x1*x2`.
/// Terms are ordered by `β`-degree, then by exponent vector descending.
impl fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.beta.cmp(&b.beta).then_with(|| b.exps.cmp(&a.exps)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            if m.beta == 1 {
                factors.push("b".into());
            } else if m.beta > 1 {
                factors.push(format!("b^{}", m.beta));
            }
            for (i, &e) in m.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            let mag = c.abs();
            let body = if factors.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", mag, factors.join("*"))
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let x1 = LPolynomial::var(2, 1);
        let x2 = LPolynomial::var(2, 2);
        let one = LPolynomial::one(2);
        assert_eq!(&x1 * &one, x1);
        let prod = &x1 * &x2;
        assert_eq!(prod.to_string(), "x1*x2");
        let sum = &(&x1 + &x2) + &prod.scaled(&BigInt::from(3), 1);
        assert_eq!(sum.to_string(), "x1 + x2 + 3*b*x1*x2");
        assert_eq!(sum.beta_zero().to_string(), "x1 + x2");
        assert!(sum.try_sub(&sum).unwrap().is_zero());
        assert_eq!(
            x1.try_mul(&LPolynomial::var(3, 1)),
            Err(Error::VariableMismatch { left: 2, right: 3 })
        );
        assert_eq!(x1.permute_vars(&[1, 0]), x2);
    }
}
