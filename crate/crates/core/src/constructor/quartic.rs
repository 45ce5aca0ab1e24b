//! Univariate quartics and Fermat's completing-the-square step.

use num_traits::Zero;

use super::ConstructError;
use crate::poly::{horner, taylor_shift};
use crate::rational::{int, rational_sqrt, Rational};

/// `q(u) = q4 u⁴ + q3 u³ + q2 u² + q1 u + q0`, stored ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticPoly {
    coeffs: [Rational; 5],
}

impl QuarticPoly {
    /// Coefficients in ascending order `q0..q4`; `q4` must be nonzero.
    pub fn new(coeffs: [Rational; 5]) -> Result<QuarticPoly, ConstructError> {
        if coeffs[4].is_zero() {
            return Err(ConstructError::NotAQuartic);
        }
        Ok(QuarticPoly { coeffs })
    }

    pub fn coeffs(&self) -> &[Rational; 5] {
        &self.coeffs
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        horner(&self.coeffs, u)
    }

    /// `q(u)` is the square of a rational.
    pub fn is_square_at(&self, u: &Rational) -> bool {
        rational_sqrt(&self.eval(u)).is_ok()
    }
}

/// Given `q(u0) = w² ≠ 0`, returns a new `u1` with `q(u1)` a rational square.
///
/// With `s = u − u0` the shifted quartic is `Q(s) = w² + Q1 s + Q2 s² + Q3 s³ + Q4 s⁴`.
/// Choosing `r0 = w`, `r1 = Q1/(2r0)`, `r2 = (Q2 − r1²)/(2r0)` cancels the
/// constant, linear and quadratic terms of `Q(s) − (r0 + r1 s + r2 s²)²`,
/// leaving `(Q3 − 2r1r2)s³ + (Q4 − r2²)s⁴` whose nonzero root is taken.
pub fn fermat_quartic_step(q: &QuarticPoly, u0: &Rational) -> Result<Rational, ConstructError> {
    let shifted = taylor_shift(q.coeffs(), u0);
    let w = match rational_sqrt(&shifted[0]) {
        Ok(w) if !w.is_zero() => w,
        _ => return Err(ConstructError::NotASquareAtBase(u0.to_string())),
    };
    let two = int(2);
    for r0 in [w.clone(), -w] {
        let r1 = &shifted[1] / (&two * &r0);
        let r2 = (&shifted[2] - &r1 * &r1) / (&two * &r0);
        let den = &shifted[4] - &r2 * &r2;
        if den.is_zero() {
            continue;
        }
        let s = -(&shifted[3] - &two * &r1 * &r2) / den;
        if s.is_zero() {
            continue;
        }
        return Ok(u0 + s);
    }
    Err(ConstructError::DescentStuck(u0.to_string()))
}

/// Repeats [`fermat_quartic_step`] from `u0`, stopping early at the first
/// failure or repeated value.
pub fn fermat_iterate(q: &QuarticPoly, u0: &Rational, steps: usize) -> Vec<Rational> {
    let mut seen = vec![u0.clone()];
    let mut out = Vec::new();
    let mut current = u0.clone();
    while out.len() < steps {
        match fermat_quartic_step(q, &current) {
            Ok(next) if !seen.contains(&next) => {
                seen.push(next.clone());
                out.push(next.clone());
                current = next;
            }
            _ => break,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rejects_low_degree() {
        assert!(QuarticPoly::new([int(1), int(0), int(0), int(1), int(0)]).is_err());
    }

    #[test]
    fn step_from_non_square_fails() {
        let q = QuarticPoly::new([int(2), int(0), int(0), int(0), int(1)]).unwrap();
        assert!(matches!(
            fermat_quartic_step(&q, &int(0)),
            Err(ConstructError::NotASquareAtBase(_))
        ));
    }

    #[test]
    fn step_on_simple_quartic() {
        // q(u) = u⁴ + u + 1, q(0) = 1: r0 = 1, r1 = 1/2, r2 = −1/8,
        // s = −(0 − 2·(1/2)(−1/8)) / (1 − 1/64) = −(1/8)/(63/64) = −8/63
        let q = QuarticPoly::new([int(1), int(1), int(0), int(0), int(1)]).unwrap();
        let u1 = fermat_quartic_step(&q, &int(0)).unwrap();
        assert_eq!(u1, rat(-8, 63));
        assert!(q.is_square_at(&u1));
    }

    #[test]
    fn iterate_stops_on_zero_steps() {
        let q = QuarticPoly::new([int(1), int(1), int(0), int(0), int(1)]).unwrap();
        assert!(fermat_iterate(&q, &int(0), 0).is_empty());
        let seq = fermat_iterate(&q, &int(0), 2);
        for u in &seq {
            assert!(q.is_square_at(u));
        }
    }
}
