//! Named integer polynomials in two parameters, used to transcribe the
//! closed-form families term by term.

use num_traits::{One, Zero};

use crate::rational::{int, Rational};

/// `Σ coeff · t1^i · t2^j`, carrying a printable name so a vanishing factor
/// can be reported.
#[derive(Debug, Clone, Copy)]
pub struct Factor {
    pub name: &'static str,
    pub terms: &'static [(i64, u32, u32)],
}

impl Factor {
    pub fn eval(&self, t1: &Rational, t2: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, &(c, i, j)| {
            acc + int(c) * pow(t1, i) * pow(t2, j)
        })
    }
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// A signed integer multiple of a product of factor powers.
#[derive(Debug, Clone, Copy)]
pub struct Monomial {
    pub coeff: i64,
    pub factors: &'static [(Factor, u32)],
}

impl Monomial {
    /// Evaluates the product, or returns the name of the first factor that vanishes.
    pub fn eval(&self, t1: &Rational, t2: &Rational) -> Result<Rational, &'static str> {
        let mut acc = int(self.coeff);
        for (factor, power) in self.factors {
            let v = factor.eval(t1, t2);
            if v.is_zero() {
                return Err(factor.name);
            }
            acc *= pow(&v, *power);
        }
        Ok(acc)
    }
}

/// Ascending-coefficient univariate evaluation by Horner's rule.
pub fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Coefficients of `p(x + shift)` from the ascending coefficients of `p`.
pub fn taylor_shift(coeffs: &[Rational], shift: &Rational) -> Vec<Rational> {
    let mut out = coeffs.to_vec();
    let n = out.len();
    // repeated synthetic division
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let carry = &out[j + 1] * shift;
            out[j] += carry;
        }
    }
    out
}

/// Product of two ascending-coefficient polynomials.
pub fn mul_univariate(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// `(c0 + c1 x)^n` expanded.
pub fn linear_power(c0: &Rational, c1: &Rational, n: u32) -> Vec<Rational> {
    let base = [c0.clone(), c1.clone()];
    (0..n).fold(vec![Rational::one()], |acc, _| mul_univariate(&acc, &base))
}
