//! Constructive route to the families: the cubic curves whose rational points
//! give pairs with common circumradius and perimeter or inradius, the quartic
//! whose square values give pairs with common circumradius and area, and the
//! end-to-end solvers built on tangent/chord and Fermat steps.

mod cubic;
mod quartic;

pub use cubic::{chord_third_point, descend_further, tangent_third_point, CurvePoint, PlaneCubic};
pub use quartic::{fermat_iterate, fermat_quartic_step, QuarticPoly};

use num_traits::Zero;
use thiserror::Error;

use crate::families::{FamilyError, PairKind, TrianglePair};
use crate::geometry::{param_sides, triangle_from_param, GeometryError, ParamTriangle};
use crate::rational::{int, Rational};
use cubic::BiPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial has total degree {0}, expected 3")]
    NotACubic(u32),
    #[error("leading quartic coefficient is zero")]
    NotAQuartic,
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("point {0} is singular")]
    SingularPoint(String),
    #[error("tangent degenerate: {0}")]
    InflectionOrDegenerate(String),
    #[error("chord degenerate: {0}")]
    DegenerateChord(String),
    #[error("no new rational point could be produced")]
    Exhausted,
    #[error("quartic is not a nonzero square at u = {0}")]
    NotASquareAtBase(String),
    #[error("Fermat step from u = {0} degenerates for both square-root signs")]
    DescentStuck(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

impl From<GeometryError> for ConstructError {
    fn from(e: GeometryError) -> Self {
        ConstructError::Degenerate(e.to_string())
    }
}

fn nonzero(name: &str, values: &[&Rational]) -> Result<(), ConstructError> {
    if values.iter().any(|v| v.is_zero()) {
        return Err(ConstructError::InvalidParameter(format!("{name} must be nonzero")));
    }
    Ok(())
}

fn lin(c0: Rational, c1: Rational, var: usize) -> BiPoly {
    let exp = if var == 1 { (1, 0) } else { (0, 1) };
    BiPoly::from_terms([((0, 0), c0), (exp, c1)])
}

fn quad(c0: Rational, c2: Rational, var: usize) -> BiPoly {
    let exp = if var == 1 { (2, 0) } else { (0, 2) };
    BiPoly::from_terms([((0, 0), c0), (exp, c2)])
}

/// The common-circumradius condition after fixing a common perimeter `m`:
///
/// `(t1²+1)(4t1²y1² + m²)(2t2²y2 + m)t2 − (t2²+1)(4t2²y2² + m²)(2t1²y1 + m)t1`.
pub fn cubic_rp(t1: &Rational, t2: &Rational, m: &Rational) -> Result<PlaneCubic, ConstructError> {
    nonzero("t1, t2 and m", &[t1, t2, m])?;
    let one = int(1);
    let four = int(4);
    let two = int(2);
    let t1s = t1 * t1;
    let t2s = t2 * t2;
    let lhs = BiPoly::constant((&t1s + &one) * t2)
        .mul(&quad(m * m, &four * &t1s, 1))
        .mul(&lin(m.clone(), &two * &t2s, 2));
    let rhs = BiPoly::constant((&t2s + &one) * t1)
        .mul(&quad(m * m, &four * &t2s, 2))
        .mul(&lin(m.clone(), &two * &t1s, 1));
    PlaneCubic::from_poly(lhs.sub(&rhs))
}

/// Known point `(−m/(2t1²), −m/(2t2²))` of [`cubic_rp`], where both sides vanish.
pub fn cubic_rp_base_point(t1: &Rational, t2: &Rational, m: &Rational) -> CurvePoint {
    let two = int(2);
    CurvePoint::new(-m / (&two * t1 * t1), -m / (&two * t2 * t2))
}

/// The common-circumradius condition after fixing a common inradius `m`
/// (`x1 = m·t1`, `x2 = m·t2`).
pub fn cubic_rr(t1: &Rational, t2: &Rational, m: &Rational) -> Result<PlaneCubic, ConstructError> {
    nonzero("t1, t2 and m", &[t1, t2, m])?;
    let one = int(1);
    let s1 = t1 * t1 + &one;
    let s2 = t2 * t2 + &one;
    let m2 = m * m;
    let m3 = &m2 * m;
    PlaneCubic::new([
        ((2, 1), t2 * &s1),
        ((1, 2), -(t1 * &s2)),
        ((2, 0), -(m * &s1)),
        ((0, 2), m * &s2),
        ((1, 0), -(&m2 * t1 * &s2)),
        ((0, 1), &m2 * t2 * &s1),
        ((0, 0), -(m3 * (t1 - t2) * (t1 + t2))),
    ])
}

/// Known point `(t2·m, t1·m)` of [`cubic_rr`].
pub fn cubic_rr_base_point(t1: &Rational, t2: &Rational, m: &Rational) -> CurvePoint {
    CurvePoint::new(t2 * m, t1 * m)
}

/// Builds the perimeter pair from a point of [`cubic_rp`]:
/// `x_i = t_i² y_i (m − 2y_i)/(2t_i² y_i + m)`.
pub fn pair_from_rp_point(
    t1: &Rational,
    t2: &Rational,
    m: &Rational,
    point: &CurvePoint,
) -> Result<TrianglePair, ConstructError> {
    let two = int(2);
    let x_of = |t: &Rational, y: &Rational| -> Result<Rational, ConstructError> {
        let ts = t * t;
        let den = &two * &ts * y + m;
        if den.is_zero() {
            return Err(ConstructError::Degenerate("2t^2*y + m = 0".into()));
        }
        Ok(&ts * y * (m - &two * y) / den)
    };
    let p1 = ParamTriangle::new(x_of(t1, &point.y1)?, point.y1.clone(), t1.clone())?;
    let p2 = ParamTriangle::new(x_of(t2, &point.y2)?, point.y2.clone(), t2.clone())?;
    pair_from_params(PairKind::CommonRp, &p1, &p2)
}

/// Builds the inradius pair from a point of [`cubic_rr`] with `x_i = m·t_i`.
pub fn pair_from_rr_point(
    t1: &Rational,
    t2: &Rational,
    m: &Rational,
    point: &CurvePoint,
) -> Result<TrianglePair, ConstructError> {
    let p1 = ParamTriangle::new(m * t1, point.y1.clone(), t1.clone())?;
    let p2 = ParamTriangle::new(m * t2, point.y2.clone(), t2.clone())?;
    pair_from_params(PairKind::CommonRr, &p1, &p2)
}

fn pair_from_params(
    kind: PairKind,
    p1: &ParamTriangle,
    p2: &ParamTriangle,
) -> Result<TrianglePair, ConstructError> {
    // each triangle must be valid on its own before joint normalization
    triangle_from_param(p1)?;
    triangle_from_param(p2)?;
    Ok(TrianglePair::from_raw_sides(kind, [param_sides(p1), param_sides(p2)])?)
}

/// Common circumradius and perimeter via the tangent at the known point of
/// [`cubic_rp`].
pub fn solve_rp(t1: &Rational, t2: &Rational, m: &Rational) -> Result<TrianglePair, ConstructError> {
    let curve = cubic_rp(t1, t2, m)?;
    let point = tangent_third_point(&curve, &cubic_rp_base_point(t1, t2, m))?;
    pair_from_rp_point(t1, t2, m, &point)
}

/// Common circumradius and inradius via the tangent at `(t2·m, t1·m)` on [`cubic_rr`].
pub fn solve_rr(t1: &Rational, t2: &Rational, m: &Rational) -> Result<TrianglePair, ConstructError> {
    let curve = cubic_rr(t1, t2, m)?;
    let point = tangent_third_point(&curve, &cubic_rr_base_point(t1, t2, m))?;
    pair_from_rr_point(t1, t2, m, &point)
}

/// The quartic in `u` that must be a square for the common-area pair at `m = t`,
/// `n = 1`, `p = u`, `q = 1` to have rational area:
///
/// `−Ku⁴ + Lu³ + 6Ku² − Lu − K` with `K = (t+1)²(t−1)²t²` and
/// `L = (t²+2t−1)(t²−2t−1)(t−1)(t+1)t`.
pub fn quartic_ra(t: &Rational) -> Result<QuarticPoly, ConstructError> {
    let one = int(1);
    let two = int(2);
    if t.is_zero() || *t == one || *t == -&one {
        return Err(ConstructError::InvalidParameter("t must not be 0 or ±1".into()));
    }
    let tp = t + &one;
    let tm = t - &one;
    let t2 = t * t;
    let k = &tp * &tp * &tm * &tm * &t2;
    let l = (&t2 + &two * t - &one) * (&t2 - &two * t - &one) * &tm * &tp * t;
    QuarticPoly::new([-k.clone(), -l.clone(), int(6) * &k, l, -k])
}

/// Sides of the common-area pair for parameters `(m, n, p, q)`; `c1 = c2`.
pub fn ra_sides(m: &Rational, n: &Rational, p: &Rational, q: &Rational) -> [[Rational; 3]; 2] {
    let two = int(2);
    let m2 = m * m;
    let n2 = n * n;
    let mn2 = &two * m * n;
    let plus = &m2 + &mn2 - &n2; // m² + 2mn − n²
    let minus = &m2 - &mn2 - &n2; // m² − 2mn − n²
    let pq = p * q;
    let a1 = &plus * p * p - &minus * &pq;
    let a2 = &minus * p * p + &plus * &pq;
    let b1 = &minus * &pq + &plus * q * q;
    let b2 = &plus * &pq - &minus * q * q;
    let c = (&m2 + &n2) * (p * p + q * q);
    [[a1, b1, c.clone()], [a2, b2, c]]
}

/// Common-area pair at `m = t·n`, `p = u·q`.
pub fn pair_from_ra_u(
    t: &Rational,
    u: &Rational,
    n: &Rational,
    q: &Rational,
) -> Result<TrianglePair, ConstructError> {
    nonzero("n and q", &[n, q])?;
    let sides = ra_sides(&(t * n), n, &(u * q), q);
    Ok(TrianglePair::from_raw_sides(PairKind::CommonRa, sides)?)
}

/// Common circumradius and area with `n = q = 1`.
pub fn solve_ra(t: &Rational) -> Result<TrianglePair, ConstructError> {
    solve_ra_scaled(t, &int(1), &int(1))
}

/// As [`solve_ra`] with explicit `n` and `q`; the similarity class does not
/// depend on them.
pub fn solve_ra_scaled(t: &Rational, n: &Rational, q: &Rational) -> Result<TrianglePair, ConstructError> {
    let quartic = quartic_ra(t)?;
    let u = fermat_quartic_step(&quartic, &int(1))?;
    pair_from_ra_u(t, &u, n, q)
}

/// Successive Fermat steps from `u = 1` on [`quartic_ra`]; each value makes
/// the quartic a square.
pub fn solve_ra_iterate(t: &Rational, steps: usize) -> Result<Vec<Rational>, ConstructError> {
    let quartic = quartic_ra(t)?;
    Ok(fermat_iterate(&quartic, &int(1), steps))
}
