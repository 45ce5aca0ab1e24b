//! Exact rational scalars and their text form.
//!
//! Every quantity in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The canonical
//! text form is `"p/q"`, or just `"p"` when the denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision exact fraction.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedChar { position: usize, found: char },
    #[error("missing digits at position {position}")]
    MissingDigits { position: usize },
    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SqrtError {
    #[error("negative input has no real square root")]
    NegativeInput,
    #[error("not the square of a rational")]
    NotASquare,
}

/// Builds `num/den` from machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses an optional sign, decimal digits and an optional `/digits` part.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let negative = match bytes[0] {
        b'-' => {
            pos = 1;
            true
        }
        b'+' => {
            pos = 1;
            false
        }
        _ => false,
    };

    let (numer, next) = digits(text, pos)?;
    pos = next;
    let denom = if pos < bytes.len() {
        if bytes[pos] != b'/' {
            return Err(unexpected(text, pos));
        }
        let den_start = pos + 1;
        let (d, next) = digits(text, den_start)?;
        if next < bytes.len() {
            return Err(unexpected(text, next));
        }
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator { position: den_start });
        }
        d
    } else {
        BigInt::one()
    };

    let numer = if negative { -numer } else { numer };
    Ok(Rational::new(numer, denom))
}

fn digits(text: &str, start: usize) -> Result<(BigInt, usize), ParseRationalError> {
    let end = text[start..]
        .find(|c: char| !c.is_ascii_digit())
        .map_or(text.len(), |i| start + i);
    if end == start {
        return match text[start..].chars().next() {
            Some(c) => Err(ParseRationalError::UnexpectedChar { position: start, found: c }),
            None => Err(ParseRationalError::MissingDigits { position: start }),
        };
    }
    // only ASCII digits in range, parse cannot fail
    let value = text[start..end].parse::<BigInt>().expect("digit run");
    Ok((value, end))
}

fn unexpected(text: &str, pos: usize) -> ParseRationalError {
    let found = text[pos..].chars().next().unwrap_or('?');
    ParseRationalError::UnexpectedChar { position: pos, found }
}

/// Canonical `"p/q"` form (`"p"` for integers).
pub fn format_rational(q: &Rational) -> String {
    // Ratio's Display already omits a unit denominator.
    q.to_string()
}

/// Exact integer square root of a non-negative integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}

/// Non-negative rational square root, decided on the reduced numerator and denominator.
pub fn rational_sqrt(q: &Rational) -> Result<Rational, SqrtError> {
    if q.is_negative() {
        return Err(SqrtError::NegativeInput);
    }
    let num = exact_isqrt(q.numer()).ok_or(SqrtError::NotASquare)?;
    let den = exact_isqrt(q.denom()).ok_or(SqrtError::NotASquare)?;
    Ok(Rational::new(num, den))
}

/// `lcm(denominators) / gcd(scaled numerators)`: multiplying every value by
/// this factor yields coprime integers. Returns `None` if all values are zero.
pub fn primitive_factor<'a, I>(values: I) -> Option<Rational>
where
    I: IntoIterator<Item = &'a Rational>,
{
    let values: Vec<&Rational> = values.into_iter().collect();
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let gcd = values.iter().fold(BigInt::zero(), |acc, v| {
        let scaled = v.numer() * (&lcm / v.denom());
        acc.gcd(&scaled)
    });
    if gcd.is_zero() {
        None
    } else {
        Some(Rational::new(lcm, gcd))
    }
}

/// Serde adapter storing a [`Rational`] as its canonical string.
pub mod serde_str {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(de::Error::custom)
    }
}

/// Serde adapter for a pair of rationals stored as a two-element string array.
pub mod serde_str_pair {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de, ser::SerializeTuple, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &(Rational, Rational),
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        let mut tuple = serializer.serialize_tuple(2)?;
        tuple.serialize_element(&format_rational(&value.0))?;
        tuple.serialize_element(&format_rational(&value.1))?;
        tuple.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<(Rational, Rational), D::Error> {
        let (a, b) = <(String, String)>::deserialize(deserializer)?;
        let a = parse_rational(&a).map_err(de::Error::custom)?;
        let b = parse_rational(&b).map_err(de::Error::custom)?;
        Ok((a, b))
    }
}
