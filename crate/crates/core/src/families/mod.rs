//! Closed-form families of triangle pairs with a common circumradius and a
//! common perimeter, inradius or area, together with the pair type shared by
//! every producer in the crate and its verifier.
//!
//! The published side formulas are polynomials in the parameters. They are
//! evaluated exactly, scaled jointly to the primitive integer pair, and both
//! triangles are re-certified from their sides before a pair is returned.

mod formulas;

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    certify_heron, heron_product, normalize_signs, GeometryError, HeronCertificate, Triangle,
};
use crate::poly::Monomial;
use crate::rational::{self, int, primitive_factor, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("degenerate family: {0}")]
    Degenerate(String),
    #[error("triangle {0} has irrational area")]
    NotHeron(String),
    #[error("shared invariant mismatch: {0}")]
    InvariantMismatch(String),
}

impl From<GeometryError> for FamilyError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::NotHeron => FamilyError::NotHeron("from parameters".into()),
            other => FamilyError::Degenerate(other.to_string()),
        }
    }
}

/// Which invariant the pair shares besides the circumradius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    CommonRp,
    CommonRr,
    CommonRa,
}

impl PairKind {
    pub const ALL: [PairKind; 3] = [PairKind::CommonRp, PairKind::CommonRr, PairKind::CommonRa];

    /// The shared non-circumradius quantity of a certificate.
    pub fn other_of<'a>(&self, cert: &'a HeronCertificate) -> &'a Rational {
        match self {
            PairKind::CommonRp => &cert.perimeter,
            PairKind::CommonRr => &cert.inradius,
            PairKind::CommonRa => &cert.area,
        }
    }

    pub fn other_name(&self) -> &'static str {
        match self {
            PairKind::CommonRp => "perimeter",
            PairKind::CommonRr => "inradius",
            PairKind::CommonRa => "area",
        }
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            PairKind::CommonRp => "rp",
            PairKind::CommonRr => "rr",
            PairKind::CommonRa => "ra",
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::CommonRp => "common_rp",
            PairKind::CommonRr => "common_rr",
            PairKind::CommonRa => "common_ra",
        })
    }
}

/// Two certified triangles sharing the circumradius and one more invariant.
///
/// `scale_first`/`scale_second` are the signed factors that took the raw
/// formula sides to the stored sides; both are `1` for searched pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrianglePair {
    pub kind: PairKind,
    pub first: HeronCertificate,
    pub second: HeronCertificate,
    #[serde(with = "rational::serde_str")]
    pub shared_circumradius: Rational,
    #[serde(with = "rational::serde_str")]
    pub shared_other: Rational,
    #[serde(with = "rational::serde_str")]
    pub scale_first: Rational,
    #[serde(with = "rational::serde_str")]
    pub scale_second: Rational,
}

impl TrianglePair {
    /// Certifies two triangles as a pair of the given kind, checking both
    /// shared invariants and non-congruence.
    pub fn from_triangles(
        kind: PairKind,
        first: &Triangle,
        second: &Triangle,
    ) -> Result<TrianglePair, FamilyError> {
        let c1 = certify_heron(first).map_err(|_| FamilyError::NotHeron(first.to_string()))?;
        let c2 = certify_heron(second).map_err(|_| FamilyError::NotHeron(second.to_string()))?;
        if c1.circumradius != c2.circumradius {
            return Err(FamilyError::InvariantMismatch(format!(
                "circumradius {} vs {}",
                c1.circumradius, c2.circumradius
            )));
        }
        if kind.other_of(&c1) != kind.other_of(&c2) {
            return Err(FamilyError::InvariantMismatch(format!(
                "{} {} vs {}",
                kind.other_name(),
                kind.other_of(&c1),
                kind.other_of(&c2)
            )));
        }
        if first.is_congruent_to(second) {
            return Err(FamilyError::Degenerate("congruent triangles".into()));
        }
        Ok(TrianglePair {
            kind,
            shared_circumradius: c1.circumradius.clone(),
            shared_other: kind.other_of(&c1).clone(),
            first: c1,
            second: c2,
            scale_first: int(1),
            scale_second: int(1),
        })
    }

    /// Normalizes raw formula sides and certifies the pair.
    ///
    /// Perimeter and inradius pairs use the all-negative negation rule per
    /// triangle. Area pairs take absolute values side by side: the squared
    /// area is even in every side and `|abc|` is unchanged, so both shared
    /// invariants survive. The two triangles are then scaled by one common
    /// factor to coprime integers.
    pub fn from_raw_sides(kind: PairKind, raw: [[Rational; 3]; 2]) -> Result<TrianglePair, FamilyError> {
        let [raw1, raw2] = raw;
        let (s1, s2, sign1, sign2) = match kind {
            PairKind::CommonRa => {
                if raw1.iter().chain(raw2.iter()).any(Zero::is_zero) {
                    return Err(FamilyError::Degenerate("zero side".into()));
                }
                (raw1.map(|s| s.abs()), raw2.map(|s| s.abs()), 1, 1)
            }
            _ => {
                let (s1, sign1) = normalize_signs(raw1)?;
                let (s2, sign2) = normalize_signs(raw2)?;
                (s1, s2, sign1, sign2)
            }
        };
        let factor = primitive_factor(s1.iter().chain(s2.iter()))
            .ok_or_else(|| FamilyError::Degenerate("zero side".into()))?;
        let scale = |sides: [Rational; 3]| -> Result<Triangle, FamilyError> {
            let [a, b, c] = sides.map(|s| s * &factor);
            Ok(Triangle::new(a, b, c)?)
        };
        let first = scale(s1)?;
        let second = scale(s2)?;
        let mut pair = TrianglePair::from_triangles(kind, &first, &second)?;
        pair.scale_first = &factor * int(sign1.into());
        pair.scale_second = &factor * int(sign2.into());
        Ok(pair)
    }

    /// Integer sides `[a1, b1, c1, a2, b2, c2]`, if all are integers.
    pub fn integer_sides(&self) -> Option<[i128; 6]> {
        use num_traits::ToPrimitive;
        let mut out = [0i128; 6];
        let sides = self.first.triangle.sides().into_iter().chain(self.second.triangle.sides());
        for (slot, s) in out.iter_mut().zip(sides) {
            if !s.is_integer() {
                return None;
            }
            *slot = s.to_integer().to_i128()?;
        }
        Some(out)
    }

    /// Unordered identity of the pair: the two sorted side triples, sorted.
    pub fn similarity_key(&self) -> [[Rational; 3]; 2] {
        let mut k = [
            self.first.triangle.sorted_sides(),
            self.second.triangle.sorted_sides(),
        ];
        k.sort();
        k
    }
}

/// The published closed forms of the shared values, before any scaling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedValues {
    pub circumradius: Rational,
    pub other: Rational,
}

/// A member of one of the published families at specific parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Common circumradius and perimeter.
    Rp { t1: Rational, t2: Rational },
    /// The perimeter family at `t2 = 1`; the second triangle is right.
    RpRight { t1: Rational },
    /// Common circumradius and inradius.
    Rr { t1: Rational, t2: Rational },
    /// The inradius family at `t2 = 1`; the second triangle is right.
    RrRight { t1: Rational },
    /// Common circumradius and area.
    Ra { t: Rational },
}

fn degenerate(name: &str) -> FamilyError {
    FamilyError::Degenerate(format!("factor {name} vanishes"))
}

fn eval_monomial(m: &Monomial, t1: &Rational, t2: &Rational) -> Result<Rational, FamilyError> {
    m.eval(t1, t2).map_err(degenerate)
}

fn eval_sides(
    table: &[[Monomial; 3]; 2],
    t1: &Rational,
    t2: &Rational,
) -> Result<[[Rational; 3]; 2], FamilyError> {
    let mut out: [[Rational; 3]; 2] = Default::default();
    for (row, monos) in out.iter_mut().zip(table) {
        for (slot, m) in row.iter_mut().zip(monos) {
            *slot = eval_monomial(m, t1, t2)?;
        }
    }
    Ok(out)
}

impl Family {
    pub fn kind(&self) -> PairKind {
        match self {
            Family::Rp { .. } | Family::RpRight { .. } => PairKind::CommonRp,
            Family::Rr { .. } | Family::RrRight { .. } => PairKind::CommonRr,
            Family::Ra { .. } => PairKind::CommonRa,
        }
    }

    fn params(&self) -> (Rational, Rational) {
        match self {
            Family::Rp { t1, t2 } | Family::Rr { t1, t2 } => (t1.clone(), t2.clone()),
            Family::RpRight { t1 } | Family::RrRight { t1 } => (t1.clone(), Rational::zero()),
            Family::Ra { t } => (t.clone(), Rational::zero()),
        }
    }

    fn check_params(&self) -> Result<(), FamilyError> {
        let (t1, t2) = self.params();
        let one = int(1);
        match self {
            Family::Rp { .. } | Family::Rr { .. } => {
                if t1.is_zero() || t2.is_zero() {
                    return Err(FamilyError::Degenerate("t1 and t2 must be nonzero".into()));
                }
            }
            Family::RpRight { .. } => {
                if t1.is_zero() || t1.abs() == one {
                    return Err(FamilyError::Degenerate("t1 must not be 0 or ±1".into()));
                }
            }
            Family::RrRight { .. } => {}
            Family::Ra { .. } => {
                if t1.is_zero() || t1.abs() == one {
                    return Err(FamilyError::Degenerate("t must not be 0 or ±1".into()));
                }
            }
        }
        Ok(())
    }

    /// The family's side formulas evaluated exactly, unscaled and unsigned-normalized.
    pub fn raw_sides(&self) -> Result<[[Rational; 3]; 2], FamilyError> {
        self.check_params()?;
        let (t1, t2) = self.params();
        let table = match self {
            Family::Rp { .. } => &formulas::RP_SIDES,
            Family::RpRight { .. } => &formulas::RP_RIGHT_SIDES,
            Family::Rr { .. } => &formulas::RR_SIDES,
            Family::RrRight { .. } => &formulas::RR_RIGHT_SIDES,
            Family::Ra { .. } => &formulas::RA_SIDES,
        };
        eval_sides(table, &t1, &t2)
    }

    /// The published closed forms for the shared circumradius and shared
    /// perimeter/inradius/area, matching [`Family::raw_sides`] up to sign.
    pub fn closed_form(&self) -> Result<SharedValues, FamilyError> {
        self.check_params()?;
        let (t1, t2) = self.params();
        let over = |(m, d): &(Monomial, i64)| -> Result<Rational, FamilyError> {
            Ok(eval_monomial(m, &t1, &t2)? / int(*d))
        };
        let (circumradius, other) = match self {
            Family::Rp { .. } => (
                over(&formulas::RP_CIRCUMRADIUS)?,
                eval_monomial(&formulas::RP_PERIMETER, &t1, &t2)?,
            ),
            Family::RpRight { .. } => (
                over(&formulas::RP_RIGHT_CIRCUMRADIUS)?,
                eval_monomial(&formulas::RP_RIGHT_PERIMETER, &t1, &t2)?,
            ),
            Family::Rr { .. } => (
                over(&formulas::RR_CIRCUMRADIUS)?,
                eval_monomial(&formulas::RR_INRADIUS, &t1, &t2)?,
            ),
            Family::RrRight { .. } => (
                over(&formulas::RR_RIGHT_CIRCUMRADIUS)?,
                eval_monomial(&formulas::RR_RIGHT_INRADIUS, &t1, &t2)?,
            ),
            Family::Ra { .. } => (
                eval_monomial(&formulas::RA_CIRCUMRADIUS_NUM, &t1, &t2)?
                    / eval_monomial(&formulas::RA_CIRCUMRADIUS_DEN, &t1, &t2)?,
                eval_monomial(&formulas::RA_AREA, &t1, &t2)?,
            ),
        };
        Ok(SharedValues { circumradius, other })
    }

    /// Evaluates, normalizes to the primitive integer pair and certifies.
    pub fn evaluate(&self) -> Result<TrianglePair, FamilyError> {
        TrianglePair::from_raw_sides(self.kind(), self.raw_sides()?)
    }
}

pub fn family_rp(t1: &Rational, t2: &Rational) -> Result<TrianglePair, FamilyError> {
    Family::Rp { t1: t1.clone(), t2: t2.clone() }.evaluate()
}

pub fn family_rp_right(t1: &Rational) -> Result<TrianglePair, FamilyError> {
    Family::RpRight { t1: t1.clone() }.evaluate()
}

pub fn family_rr(t1: &Rational, t2: &Rational) -> Result<TrianglePair, FamilyError> {
    Family::Rr { t1: t1.clone(), t2: t2.clone() }.evaluate()
}

pub fn family_rr_right(t1: &Rational) -> Result<TrianglePair, FamilyError> {
    Family::RrRight { t1: t1.clone() }.evaluate()
}

pub fn family_ra(t: &Rational) -> Result<TrianglePair, FamilyError> {
    Family::Ra { t: t.clone() }.evaluate()
}

/// One verified identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: PairKind,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check { name: name.into(), passed });
    }
}

/// Recomputes both certificates from the raw sides and checks every pair
/// invariant. Area pairs additionally check `a1b1c1 = a2b2c2` and equality
/// of the two Heron products.
pub fn verify_pair(pair: &TrianglePair) -> VerificationReport {
    let mut report = VerificationReport { kind: pair.kind, checks: Vec::new() };
    let kind = pair.kind;
    let recomputed = [&pair.first, &pair.second].map(|c| certify_heron(&c.triangle).ok());

    for (label, claimed, fresh) in [
        ("first", &pair.first, &recomputed[0]),
        ("second", &pair.second, &recomputed[1]),
    ] {
        report.push(format!("{label}: rational area"), fresh.is_some());
        report.push(
            format!("{label}: certificate matches recomputation"),
            fresh.as_ref() == Some(claimed),
        );
        report.push(
            format!("{label}: certificate identities"),
            fresh.as_ref().is_some_and(|c| c.check_identities().is_empty()),
        );
    }

    match (&recomputed[0], &recomputed[1]) {
        (Some(c1), Some(c2)) => {
            report.push("circumradius equal", c1.circumradius == c2.circumradius);
            report.push(
                "shared circumradius matches",
                c1.circumradius == pair.shared_circumradius,
            );
            report.push(
                format!("{} equal", kind.other_name()),
                kind.other_of(c1) == kind.other_of(c2),
            );
            report.push(
                format!("shared {} matches", kind.other_name()),
                *kind.other_of(c1) == pair.shared_other,
            );
        }
        _ => {
            report.push("circumradius equal", false);
            report.push("shared circumradius matches", false);
            report.push(format!("{} equal", kind.other_name()), false);
            report.push(format!("shared {} matches", kind.other_name()), false);
        }
    }

    report.push(
        "non-congruent",
        !pair.first.triangle.is_congruent_to(&pair.second.triangle),
    );

    if kind == PairKind::CommonRa {
        let [a1, b1, c1] = pair.first.triangle.sides();
        let [a2, b2, c2] = pair.second.triangle.sides();
        report.push("a1*b1*c1 = a2*b2*c2", a1 * b1 * c1 == a2 * b2 * c2);
        report.push(
            "equal Heron products",
            heron_product(a1, b1, c1) == heron_product(a2, b2, c2),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::is_right;
    use crate::rational::rat;

    fn sides(cert: &HeronCertificate) -> Vec<Rational> {
        cert.triangle.sides().into_iter().cloned().collect()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rp_published_example() {
        let pair = family_rp(&int(2), &int(3)).unwrap();
        assert_eq!(sides(&pair.first), ints(&[1321940, 1166616, 1636180]));
        assert_eq!(sides(&pair.second), ints(&[991455, 1548096, 1585185]));
        assert_eq!(pair.shared_circumradius, rat(1652425, 2));
        assert_eq!(pair.shared_other, int(4124736));
        assert_eq!(pair.scale_first, rat(1, 15625));
        assert!(verify_pair(&pair).all_passed());
    }

    #[test]
    fn rp_swapped_parameters_swap_roles() {
        let a = family_rp(&int(2), &int(3)).unwrap();
        let b = family_rp(&int(3), &int(2)).unwrap();
        assert_eq!(a.first.triangle, b.second.triangle);
        assert_eq!(a.second.triangle, b.first.triangle);
        assert_eq!(a.shared_circumradius, b.shared_circumradius);
    }

    #[test]
    fn rp_equal_parameters_are_congruent() {
        assert!(matches!(family_rp(&int(2), &int(2)), Err(FamilyError::Degenerate(_))));
    }

    #[test]
    fn rp_right_published_example() {
        let pair = family_rp_right(&int(2)).unwrap();
        assert_eq!(sides(&pair.first), ints(&[500516, 609400, 252324]));
        assert_eq!(sides(&pair.second), ints(&[625645, 123200, 613395]));
        assert_eq!(pair.shared_circumradius, rat(625645, 2));
        assert_eq!(pair.shared_other, int(1362240));
        assert!(is_right(&pair.second.triangle));
        assert!(matches!(family_rp_right(&int(1)), Err(FamilyError::Degenerate(_))));
    }

    #[test]
    fn rr_published_example() {
        let pair = family_rr(&rat(9, 2), &rat(7, 6)).unwrap();
        assert_eq!(sides(&pair.first), ints(&[2055, 1105, 3002]));
        assert_eq!(sides(&pair.second), ints(&[4795, 4845, 482]));
        assert_eq!(pair.shared_circumradius, rat(58225, 24));
        assert_eq!(pair.shared_other, int(228));
    }

    #[test]
    fn rr_vanishing_factor_is_named() {
        // t1·t2² − t1 − 2t2 = 0 at t2 = 2, t1 = 4/3
        let err = family_rr(&rat(4, 3), &int(2)).unwrap_err();
        assert_eq!(err, FamilyError::Degenerate("factor t1t2^2 - t1 - 2t2 vanishes".into()));
    }

    #[test]
    fn rr_swapped_parameters() {
        let a = family_rr(&rat(9, 2), &rat(7, 6)).unwrap();
        let b = family_rr(&rat(7, 6), &rat(9, 2)).unwrap();
        assert!(verify_pair(&b).all_passed());
        assert_eq!(a.similarity_key(), b.similarity_key());
    }

    #[test]
    fn rr_right_published_example() {
        let pair = family_rr_right(&int(4)).unwrap();
        assert_eq!(sides(&pair.first), ints(&[40, 68, 84]));
        assert_eq!(sides(&pair.second), ints(&[85, 77, 36]));
        assert_eq!(pair.shared_circumradius, rat(85, 2));
        assert_eq!(pair.shared_other, int(14));
        assert!(is_right(&pair.second.triangle));
        assert_eq!(
            family_rr_right(&int(2)).unwrap_err(),
            FamilyError::Degenerate("factor t1 - 2 vanishes".into())
        );
    }

    #[test]
    fn ra_published_example() {
        let raw = Family::Ra { t: int(2) }.raw_sides().unwrap();
        assert_eq!(raw[0][2], raw[1][2]);
        let pair = family_ra(&int(2)).unwrap();
        assert_eq!(sides(&pair.first), ints(&[3283540, 7603539, 7776485]));
        assert_eq!(sides(&pair.second), ints(&[4279155, 5834452, 7776485]));
        assert_eq!(pair.shared_circumradius, rat(10402718520025, 2639802));
        assert_eq!(pair.shared_other, int(12317028393582));
        assert!(verify_pair(&pair).all_passed());
    }

    #[test]
    fn ra_at_one_half_uses_absolute_sides() {
        let pair = family_ra(&rat(1, 2)).unwrap();
        assert!(verify_pair(&pair).all_passed());
        let fam = Family::Ra { t: rat(1, 2) };
        let closed = fam.closed_form().unwrap();
        let k = pair.scale_first.abs();
        assert_eq!(pair.shared_circumradius, &k * closed.circumradius.abs());
        assert_eq!(pair.shared_other, &k * &k * closed.other.abs());
    }

    #[test]
    fn ra_excluded_parameters() {
        for t in [int(0), int(1), int(-1)] {
            assert!(family_ra(&t).is_err());
        }
    }

    #[test]
    fn closed_forms_scale_coherently() {
        let cases = [
            Family::Rp { t1: int(2), t2: int(3) },
            Family::RpRight { t1: int(2) },
            Family::Rr { t1: rat(9, 2), t2: rat(7, 6) },
            Family::RrRight { t1: int(4) },
            Family::Ra { t: int(2) },
        ];
        for fam in cases {
            let pair = fam.evaluate().unwrap();
            let closed = fam.closed_form().unwrap();
            let k = pair.scale_first.abs();
            assert_eq!(pair.scale_first.abs(), pair.scale_second.abs());
            assert_eq!(pair.shared_circumradius, &k * closed.circumradius.abs(), "{fam:?}");
            let expected_other = match fam.kind() {
                PairKind::CommonRa => &k * &k * closed.other.abs(),
                _ => &k * closed.other.abs(),
            };
            assert_eq!(pair.shared_other, expected_other, "{fam:?}");
        }
    }

    #[test]
    fn verify_detects_broken_pairs() {
        let pair = family_rr_right(&int(4)).unwrap();
        let report = verify_pair(&pair);
        assert!(report.all_passed(), "{report:?}");

        let mut broken = pair.clone();
        let [a, b, c] = broken.second.triangle.sides().map(Clone::clone);
        broken.second.triangle = Triangle::new(a + int(1), b, c).unwrap();
        let report = verify_pair(&broken);
        assert_eq!(report.get("circumradius equal"), Some(false));

        let mut congruent = pair.clone();
        congruent.second = congruent.first.clone();
        let report = verify_pair(&congruent);
        assert_eq!(report.get("non-congruent"), Some(false));
        assert_eq!(report.get("circumradius equal"), Some(true));
    }

    #[test]
    fn pair_json_shape() {
        let pair = family_rr_right(&int(4)).unwrap();
        let v = serde_json::to_value(&pair).unwrap();
        assert_eq!(v["kind"], "common_rr");
        assert_eq!(v["shared_circumradius"], "85/2");
        assert_eq!(v["shared_other"], "14");
        assert_eq!(v["scale_first"], "1");
        assert_eq!(v["first"]["a"], "40");
        assert_eq!(v["second"]["inradius"], "14");
        let back: TrianglePair = serde_json::from_value(v).unwrap();
        assert_eq!(back, pair);
    }
}
