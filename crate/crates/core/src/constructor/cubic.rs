//! Plane cubics with exact coefficients and the tangent/chord process.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::ConstructError;
use crate::poly::{linear_power, mul_univariate, pow};
use crate::rational::{self, int, Rational};

/// A rational point `(y1, y2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurvePoint {
    #[serde(with = "rational::serde_str")]
    pub y1: Rational,
    #[serde(with = "rational::serde_str")]
    pub y2: Rational,
}

impl CurvePoint {
    pub fn new(y1: Rational, y2: Rational) -> Self {
        CurvePoint { y1, y2 }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.y1, self.y2)
    }
}

/// Sparse bivariate polynomial `Σ c_ij y1^i y2^j`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct BiPoly(BTreeMap<(u32, u32), Rational>);

impl BiPoly {
    pub(crate) fn constant(c: Rational) -> Self {
        BiPoly::from_terms([((0, 0), c)])
    }

    pub(crate) fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = BiPoly::default();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&exp);
        }
    }

    pub(crate) fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for (&(i1, j1), c1) in &self.0 {
            for (&(i2, j2), c2) in &other.0 {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub(crate) fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&exp, c) in &other.0 {
            out.add_term(exp, -c);
        }
        out
    }
}

/// `F(y1, y2) = Σ c_ij y1^i y2^j` of total degree exactly three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCubic {
    coefficients: BTreeMap<(u32, u32), Rational>,
}

impl PlaneCubic {
    pub fn new(
        coefficients: impl IntoIterator<Item = ((u32, u32), Rational)>,
    ) -> Result<PlaneCubic, ConstructError> {
        let poly = BiPoly::from_terms(coefficients);
        PlaneCubic::from_poly(poly)
    }

    pub(crate) fn from_poly(poly: BiPoly) -> Result<PlaneCubic, ConstructError> {
        let degree = poly.0.keys().map(|(i, j)| i + j).max();
        if degree != Some(3) {
            return Err(ConstructError::NotACubic(degree.unwrap_or(0)));
        }
        Ok(PlaneCubic { coefficients: poly.0 })
    }

    pub fn coefficients(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.coefficients
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Rational {
        self.coefficients.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, p: &CurvePoint) -> Rational {
        self.coefficients.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + c * pow(&p.y1, i) * pow(&p.y2, j)
        })
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        self.eval(p).is_zero()
    }

    /// `(∂F/∂y1, ∂F/∂y2)` at `p`.
    pub fn gradient(&self, p: &CurvePoint) -> (Rational, Rational) {
        let mut d1 = Rational::zero();
        let mut d2 = Rational::zero();
        for (&(i, j), c) in &self.coefficients {
            if i > 0 {
                d1 += c * int(i.into()) * pow(&p.y1, i - 1) * pow(&p.y2, j);
            }
            if j > 0 {
                d2 += c * int(j.into()) * pow(&p.y1, i) * pow(&p.y2, j - 1);
            }
        }
        (d1, d2)
    }

    /// Coefficients `[c0, c1, c2, c3]` of `s ↦ F(p + s·d)`.
    pub fn restrict_to_line(&self, p: &CurvePoint, d: (&Rational, &Rational)) -> [Rational; 4] {
        let mut out: [Rational; 4] = Default::default();
        for (&(i, j), c) in &self.coefficients {
            let term = mul_univariate(&linear_power(&p.y1, d.0, i), &linear_power(&p.y2, d.1, j));
            for (k, v) in term.into_iter().enumerate() {
                out[k] += c * v;
            }
        }
        out
    }

    fn point_on_line(p: &CurvePoint, d: (&Rational, &Rational), s: &Rational) -> CurvePoint {
        CurvePoint::new(&p.y1 + s * d.0, &p.y2 + s * d.1)
    }

    fn require_on_curve(&self, p: &CurvePoint) -> Result<(), ConstructError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(ConstructError::NotOnCurve(p.to_string()))
        }
    }
}

/// Third intersection of the tangent at `p` with the curve.
///
/// The tangent is parametrized as `p + s·(∂F/∂y2, −∂F/∂y1)`, so `s = 0` is a
/// double root of the restricted cubic `c3 s³ + c2 s²` and the remaining root
/// is `−c2/c3`.
pub fn tangent_third_point(curve: &PlaneCubic, p: &CurvePoint) -> Result<CurvePoint, ConstructError> {
    curve.require_on_curve(p)?;
    let (g1, g2) = curve.gradient(p);
    if g1.is_zero() && g2.is_zero() {
        return Err(ConstructError::SingularPoint(p.to_string()));
    }
    let dir = (g2, -g1);
    let [c0, c1, c2, c3] = curve.restrict_to_line(p, (&dir.0, &dir.1));
    debug_assert!(c0.is_zero() && c1.is_zero());
    if c3.is_zero() {
        return Err(ConstructError::InflectionOrDegenerate(format!(
            "tangent at {p} meets the curve again only at infinity"
        )));
    }
    let s = -c2 / c3;
    if s.is_zero() {
        return Err(ConstructError::InflectionOrDegenerate(format!("{p} is a flex")));
    }
    Ok(PlaneCubic::point_on_line(p, (&dir.0, &dir.1), &s))
}

/// Third intersection of the chord through `p` and `q` with the curve.
pub fn chord_third_point(
    curve: &PlaneCubic,
    p: &CurvePoint,
    q: &CurvePoint,
) -> Result<CurvePoint, ConstructError> {
    curve.require_on_curve(p)?;
    curve.require_on_curve(q)?;
    if p == q {
        return Err(ConstructError::DegenerateChord("the two points coincide".into()));
    }
    let dir = (&q.y1 - &p.y1, &q.y2 - &p.y2);
    let coeffs = curve.restrict_to_line(p, (&dir.0, &dir.1));
    if coeffs.iter().all(Zero::is_zero) {
        return Err(ConstructError::DegenerateChord(format!(
            "the line through {p} and {q} is a component of the curve"
        )));
    }
    let [_, _, c2, c3] = coeffs;
    if c3.is_zero() {
        return Err(ConstructError::DegenerateChord(format!(
            "the chord through {p} and {q} meets the curve again only at infinity"
        )));
    }
    // roots 0, 1 and s with 0 + 1 + s = −c2/c3
    let s = -c2 / c3 - int(1);
    Ok(PlaneCubic::point_on_line(p, (&dir.0, &dir.1), &s))
}

/// Produces up to `steps` new rational points from `known` by the
/// tangent/chord process.
///
/// Each round pivots on the newest point: its tangent is tried first, then
/// chords to every earlier point from newest to oldest. If the newest point
/// yields nothing new, older points are tried as pivots. Points are
/// deduplicated by exact equality. Returns [`ConstructError::Exhausted`] only
/// if no new point at all could be produced; otherwise the points found so
/// far are returned.
pub fn descend_further(
    curve: &PlaneCubic,
    known: &[CurvePoint],
    steps: usize,
) -> Result<Vec<CurvePoint>, ConstructError> {
    for p in known {
        curve.require_on_curve(p)?;
    }
    let mut all: Vec<CurvePoint> = Vec::new();
    for p in known {
        if !all.contains(p) {
            all.push(p.clone());
        }
    }
    let mut fresh = Vec::new();
    while fresh.len() < steps {
        match next_point(curve, &all) {
            Some(p) => {
                all.push(p.clone());
                fresh.push(p);
            }
            None => break,
        }
    }
    if fresh.is_empty() && steps > 0 {
        return Err(ConstructError::Exhausted);
    }
    Ok(fresh)
}

fn next_point(curve: &PlaneCubic, all: &[CurvePoint]) -> Option<CurvePoint> {
    for pivot_idx in (0..all.len()).rev() {
        let pivot = &all[pivot_idx];
        let tangent = tangent_third_point(curve, pivot).ok();
        let chords = (0..all.len())
            .rev()
            .filter(|&i| i != pivot_idx)
            .filter_map(|i| chord_third_point(curve, pivot, &all[i]).ok());
        if let Some(p) = tangent.into_iter().chain(chords).find(|p| !all.contains(p)) {
            return Some(p);
        }
    }
    None
}
