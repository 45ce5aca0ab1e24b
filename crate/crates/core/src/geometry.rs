//! Exact rational triangles, Heron certificates and the incircle-tangent
//! coordinates used to parametrize every triangle with rational area.
//!
//! With `a = y + z`, `b = z + x`, `c = x + y` the squared area becomes
//! `(x + y + z)xyz`. It is a rational square exactly when some rational `t`
//! satisfies `(x + y + z)x = t²yz`, and then every rational triangle is
//! described by `(x, y, t)`:
//!
//! ```text
//! a = (x² + t²y²)/(t²y − x)    b = xy(t² + 1)/(t²y − x)    c = x + y
//! A = txy(x + y)/(t²y − x)     R = (x² + t²y²)(t² + 1)/(4t(t²y − x))
//! r = x/t                       P = 2t²y(x + y)/(t²y − x)
//! ```

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, primitive_factor, rational_sqrt, Rational, SqrtError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("invalid sides: {0}")]
    InvalidSides(String),
    #[error("triangle has irrational area")]
    NotHeron,
    #[error("degenerate parameters: {0}")]
    DegenerateParam(String),
    #[error(transparent)]
    Sqrt(#[from] SqrtError),
}

/// A triangle with positive rational sides obeying the strict triangle inequality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSides")]
pub struct Triangle {
    #[serde(with = "rational::serde_str")]
    a: Rational,
    #[serde(with = "rational::serde_str")]
    b: Rational,
    #[serde(with = "rational::serde_str")]
    c: Rational,
}

#[derive(Deserialize)]
struct RawSides {
    #[serde(with = "rational::serde_str")]
    a: Rational,
    #[serde(with = "rational::serde_str")]
    b: Rational,
    #[serde(with = "rational::serde_str")]
    c: Rational,
}

impl TryFrom<RawSides> for Triangle {
    type Error = GeometryError;

    fn try_from(raw: RawSides) -> Result<Self, Self::Error> {
        Triangle::new(raw.a, raw.b, raw.c)
    }
}

/// `(a+b+c)(a+b−c)(b+c−a)(c+a−b)`, i.e. `16A²`. Even in each side.
pub fn heron_product(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    (a + b + c) * (a + b - c) * (b + c - a) * (c + a - b)
}

impl Triangle {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        if !a.is_positive() || !b.is_positive() || !c.is_positive() {
            return Err(GeometryError::InvalidSides(format!(
                "sides must be positive, got ({a}, {b}, {c})"
            )));
        }
        if !heron_product(&a, &b, &c).is_positive() {
            return Err(GeometryError::InvalidSides(format!(
                "({a}, {b}, {c}) violates the strict triangle inequality"
            )));
        }
        Ok(Triangle { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, GeometryError> {
        Triangle::new(rational::int(a), rational::int(b), rational::int(c))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn sides(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn perimeter(&self) -> Rational {
        &self.a + &self.b + &self.c
    }

    /// Sides in ascending order; equal for congruent triangles.
    pub fn sorted_sides(&self) -> [Rational; 3] {
        let mut s = [self.a.clone(), self.b.clone(), self.c.clone()];
        s.sort();
        s
    }

    pub fn is_congruent_to(&self, other: &Triangle) -> bool {
        self.sorted_sides() == other.sorted_sides()
    }

    pub fn is_scalene(&self) -> bool {
        self.a != self.b && self.b != self.c && self.a != self.c
    }

    /// Multiplies every side by a positive factor.
    pub fn scaled(&self, factor: &Rational) -> Result<Triangle, GeometryError> {
        Triangle::new(&self.a * factor, &self.b * factor, &self.c * factor)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A triangle together with its exact area, circumradius, inradius and perimeter.
///
/// Certificates produced by this crate always satisfy the Heron identities;
/// deserialized ones are taken at face value and can be checked with
/// [`HeronCertificate::check_identities`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeronCertificate {
    #[serde(flatten)]
    pub triangle: Triangle,
    #[serde(with = "rational::serde_str")]
    pub area: Rational,
    #[serde(with = "rational::serde_str")]
    pub circumradius: Rational,
    #[serde(with = "rational::serde_str")]
    pub inradius: Rational,
    #[serde(with = "rational::serde_str")]
    pub perimeter: Rational,
}

impl HeronCertificate {
    /// Names of any certificate identities that fail.
    pub fn check_identities(&self) -> Vec<&'static str> {
        let [a, b, c] = self.triangle.sides();
        let sixteen = rational::int(16);
        let four = rational::int(4);
        let two = rational::int(2);
        let mut failed = Vec::new();
        if &sixteen * &self.area * &self.area != heron_product(a, b, c) || !self.area.is_positive() {
            failed.push("16A^2 = (a+b+c)(a+b-c)(b+c-a)(c+a-b)");
        }
        if a * b * c != &four * &self.circumradius * &self.area {
            failed.push("abc = 4RA");
        }
        if &two * &self.area != &self.inradius * &self.perimeter {
            failed.push("2A = rP");
        }
        if self.perimeter != self.triangle.perimeter() {
            failed.push("P = a+b+c");
        }
        if self.circumradius < &two * &self.inradius {
            failed.push("R >= 2r");
        }
        failed
    }
}

/// The triangle's incircle-tangent coordinates `(x, y)` and rational-area parameter `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamTriangle {
    pub x: Rational,
    pub y: Rational,
    pub t: Rational,
}

impl ParamTriangle {
    pub fn new(x: Rational, y: Rational, t: Rational) -> Result<Self, GeometryError> {
        if x.is_zero() || y.is_zero() || t.is_zero() {
            return Err(GeometryError::DegenerateParam(
                "x, y and t must be nonzero".into(),
            ));
        }
        let p = ParamTriangle { x, y, t };
        if p.denominator().is_zero() {
            return Err(GeometryError::DegenerateParam("t^2*y - x = 0".into()));
        }
        Ok(p)
    }

    /// `t²y − x`
    pub fn denominator(&self) -> Rational {
        &self.t * &self.t * &self.y - &self.x
    }

    /// The third tangent length `z = (x + y)x/(t²y − x)`.
    pub fn z(&self) -> Rational {
        (&self.x + &self.y) * &self.x / self.denominator()
    }
}

/// `A²` by Heron's formula.
pub fn heron_area_squared(tri: &Triangle) -> Rational {
    let [a, b, c] = tri.sides();
    heron_product(a, b, c) / rational::int(16)
}

/// Classifies a triangle: returns its certificate when the area is rational.
pub fn certify_heron(tri: &Triangle) -> Result<HeronCertificate, GeometryError> {
    let area = match rational_sqrt(&heron_area_squared(tri)) {
        Ok(area) => area,
        Err(SqrtError::NotASquare) => return Err(GeometryError::NotHeron),
        Err(e) => return Err(e.into()),
    };
    let [a, b, c] = tri.sides();
    let perimeter = tri.perimeter();
    let circumradius = a * b * c / (rational::int(4) * &area);
    let inradius = rational::int(2) * &area / &perimeter;
    Ok(HeronCertificate {
        triangle: tri.clone(),
        area,
        circumradius,
        inradius,
        perimeter,
    })
}

/// `x = (−a+b+c)/2`, `y = (a−b+c)/2`, `z = (a+b−c)/2`.
pub fn xyz_from_sides(tri: &Triangle) -> (Rational, Rational, Rational) {
    let [a, b, c] = tri.sides();
    let two = rational::int(2);
    (
        (b + c - a) / &two,
        (a - b + c) / &two,
        (a + b - c) / &two,
    )
}

/// Inverse of [`xyz_from_sides`]: the triangle `(y + z, z + x, x + y)`.
pub fn sides_from_xyz(x: &Rational, y: &Rational, z: &Rational) -> Result<Triangle, GeometryError> {
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(GeometryError::InvalidSides("x, y and z must be nonzero".into()));
    }
    Triangle::new(y + z, z + x, x + y)
}

/// Applies the sign rule for formula-generated sides: an all-negative triple
/// is negated, a triple with mixed signs or a zero is rejected. Returns the
/// sides and the sign applied (`1` or `-1`).
pub fn normalize_signs(
    sides: [Rational; 3],
) -> Result<([Rational; 3], i8), GeometryError> {
    if sides.iter().all(Signed::is_positive) {
        Ok((sides, 1))
    } else if sides.iter().all(Signed::is_negative) {
        Ok((sides.map(|s| -s), -1))
    } else {
        Err(GeometryError::DegenerateParam(format!(
            "sides ({}, {}, {}) have mixed signs or a zero",
            sides[0], sides[1], sides[2]
        )))
    }
}

/// Raw (unnormalized) sides produced by the `(x, y, t)` formulas.
pub fn param_sides(p: &ParamTriangle) -> [Rational; 3] {
    let d = p.denominator();
    let t2 = &p.t * &p.t;
    let a = (&p.x * &p.x + &t2 * &p.y * &p.y) / &d;
    let b = &p.x * &p.y * (&t2 + rational::int(1)) / &d;
    let c = &p.x + &p.y;
    [a, b, c]
}

/// Builds the triangle from `(x, y, t)` and certifies it with the closed-form
/// `A`, `R`, `r`, `P`. No square root is taken.
pub fn triangle_from_param(p: &ParamTriangle) -> Result<(Triangle, HeronCertificate), GeometryError> {
    let d = p.denominator();
    if d.is_zero() {
        return Err(GeometryError::DegenerateParam("t^2*y - x = 0".into()));
    }
    let (sides, sign) = normalize_signs(param_sides(p))?;
    let [a, b, c] = sides;
    let tri = Triangle::new(a, b, c)
        .map_err(|e| GeometryError::DegenerateParam(e.to_string()))?;

    let t2 = &p.t * &p.t;
    let one = rational::int(1);
    let sum = &p.x + &p.y;
    let area = (&p.t * &p.x * &p.y * &sum / &d).abs();
    let circumradius = ((&p.x * &p.x + &t2 * &p.y * &p.y) * (&t2 + &one)
        / (rational::int(4) * &d * &p.t))
        .abs();
    let inradius = (&p.x / &p.t).abs();
    let perimeter = rational::int(2) * &t2 * &p.y * &sum / &d;
    let perimeter = if sign < 0 { -perimeter } else { perimeter };

    let cert = HeronCertificate {
        triangle: tri.clone(),
        area,
        circumradius,
        inradius,
        perimeter,
    };
    Ok((tri, cert))
}

/// Recovers `(x, y, t)` for the sides in their given order, with `t = A/(yz)`.
pub fn param_from_triangle(cert: &HeronCertificate) -> ParamTriangle {
    let (x, y, z) = xyz_from_sides(&cert.triangle);
    let t = &cert.area / (&y * &z);
    ParamTriangle { x, y, t }
}

/// Scales to the similar triangle with coprime integer sides.
pub fn normalize_primitive(tri: &Triangle) -> Triangle {
    let factor = primitive_factor(tri.sides()).expect("sides are positive");
    tri.scaled(&factor).expect("positive scaling keeps a valid triangle")
}

pub fn is_right(tri: &Triangle) -> bool {
    let [a, b, c] = tri.sorted_sides();
    &a * &a + &b * &b == &c * &c
}
