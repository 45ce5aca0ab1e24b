//! Brute-force oracle: every integer Heron triangle up to a side bound, grouped
//! by exact invariant keys.
//!
//! Deliberately naive. It is the independent check for the families and
//! solvers, so it never uses a parametrization.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{PairKind, TrianglePair};
use crate::geometry::{certify_heron, HeronCertificate, Triangle};
use crate::rational::{self, format_rational, Rational};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("max_side must be at least 3, got {0}")]
    InvalidConfig(u64),
    #[error("pair has a side larger than max_side = {max_side}")]
    OutOfBounds { max_side: u64 },
    #[error("pair sides are not integers")]
    NotIntegral,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_side: u64,
    pub kinds: BTreeSet<PairKind>,
    pub primitive_only: bool,
    pub scalene_only: bool,
}

impl SearchConfig {
    pub fn new(max_side: u64, kinds: impl IntoIterator<Item = PairKind>) -> Self {
        SearchConfig {
            max_side,
            kinds: kinds.into_iter().collect(),
            primitive_only: false,
            scalene_only: false,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.max_side < 3 {
            return Err(SearchError::InvalidConfig(self.max_side));
        }
        Ok(())
    }
}

/// A found pair and the exact `(R, other)` key it was grouped under.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub pair: TrianglePair,
    #[serde(with = "rational::serde_str_pair")]
    pub key: (Rational, Rational),
}

/// Heron triangles with integer sides `a ≤ b ≤ c ≤ max_side` in ascending
/// `(c, b, a)` order. Shards by the largest side run in parallel.
pub fn enumerate_heron(max_side: u64) -> Vec<HeronCertificate> {
    (1..=max_side)
        .into_par_iter()
        .map(heron_with_largest_side)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn heron_with_largest_side(c: u64) -> Vec<HeronCertificate> {
    let mut out = Vec::new();
    for b in 1..=c {
        for a in 1..=b {
            if a + b <= c {
                continue;
            }
            let (a, b, c) = (a as u128, b as u128, c as u128);
            let product = (a + b + c) * (a + b - c) * (b + c - a) * (c + a - b);
            if !is_square(product) {
                continue;
            }
            let tri = Triangle::from_ints(a as i64, b as i64, c as i64).expect("triangle inequality checked");
            if let Ok(cert) = certify_heron(&tri) {
                out.push(cert);
            }
        }
    }
    out
}

fn is_square(n: u128) -> bool {
    let r = num_integer::Roots::sqrt(&n);
    r * r == n
}

fn is_primitive(tri: &Triangle) -> bool {
    let g = tri
        .sides()
        .iter()
        .fold(num_bigint::BigInt::from(0), |acc, s| acc.gcd(s.numer()));
    g == num_bigint::BigInt::from(1)
}

/// Every unordered non-congruent pair sharing the exact `(R, other)` key, per
/// requested kind. Output is sorted by kind, key, then sides.
pub fn find_pairs(cfg: &SearchConfig) -> Result<Vec<PairRecord>, SearchError> {
    cfg.validate()?;
    let certs: Vec<HeronCertificate> = enumerate_heron(cfg.max_side)
        .into_iter()
        .filter(|c| !cfg.primitive_only || is_primitive(&c.triangle))
        .filter(|c| !cfg.scalene_only || c.triangle.is_scalene())
        .collect();

    let mut records = Vec::new();
    for &kind in &cfg.kinds {
        let mut groups: BTreeMap<(Rational, Rational), Vec<&HeronCertificate>> = BTreeMap::new();
        for cert in &certs {
            let key = (cert.circumradius.clone(), kind.other_of(cert).clone());
            groups.entry(key).or_default().push(cert);
        }
        for (key, members) in groups {
            let mut members = members;
            members.sort_by_key(|c| c.triangle.sorted_sides());
            for (i, first) in members.iter().enumerate() {
                for second in &members[i + 1..] {
                    if first.triangle.is_congruent_to(&second.triangle) {
                        continue;
                    }
                    let pair = TrianglePair::from_triangles(kind, &first.triangle, &second.triangle)
                        .expect("grouped by exact shared key");
                    records.push(PairRecord { pair, key: key.clone() });
                }
            }
        }
    }
    Ok(records)
}

/// Whether the oracle emits exactly this pair (unordered) under its key.
pub fn cross_check_family(pair: &TrianglePair, cfg: &SearchConfig) -> Result<bool, SearchError> {
    let sides = pair.integer_sides().ok_or(SearchError::NotIntegral)?;
    if sides.iter().any(|&s| s > cfg.max_side as i128) {
        return Err(SearchError::OutOfBounds { max_side: cfg.max_side });
    }
    let cfg = SearchConfig {
        kinds: [pair.kind].into(),
        ..cfg.clone()
    };
    let target = pair.similarity_key();
    let key = (pair.shared_circumradius.clone(), pair.shared_other.clone());
    Ok(find_pairs(&cfg)?
        .iter()
        .any(|r| r.key == key && r.pair.similarity_key() == target))
}

pub fn write_jsonl<W: Write>(records: &[PairRecord], mut out: W) -> Result<(), SearchError> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub const CSV_HEADER: [&str; 9] = [
    "kind",
    "a1",
    "b1",
    "c1",
    "a2",
    "b2",
    "c2",
    "shared_circumradius",
    "shared_other",
];

/// One CSV row for a pair: kind, six sides, then the key.
pub fn csv_row(pair: &TrianglePair) -> Vec<String> {
    let mut row = vec![pair.kind.to_string()];
    row.extend(
        pair.first
            .triangle
            .sides()
            .into_iter()
            .chain(pair.second.triangle.sides())
            .map(format_rational),
    );
    row.push(format_rational(&pair.shared_circumradius));
    row.push(format_rational(&pair.shared_other));
    row
}

pub fn write_csv<W: Write>(pairs: &[&TrianglePair], out: W) -> Result<(), SearchError> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for p in pairs {
        writer.write_record(csv_row(p))?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_rr_right;
    use crate::rational::{int, rat};

    #[test]
    fn enumerate_small_bounds() {
        assert!(enumerate_heron(4).is_empty());
        let five = enumerate_heron(5);
        assert_eq!(five.len(), 1);
        assert_eq!(five[0].triangle, Triangle::from_ints(3, 4, 5).unwrap());
        assert_eq!(five[0].area, int(6));
        let six = enumerate_heron(6);
        let t556 = six
            .iter()
            .find(|c| c.triangle == Triangle::from_ints(5, 5, 6).unwrap())
            .unwrap();
        assert_eq!(t556.area, int(12));
    }

    #[test]
    fn enumeration_is_exhaustive_and_ordered() {
        let certs = enumerate_heron(20);
        let mut brute = Vec::new();
        for c in 1..=20i64 {
            for b in 1..=c {
                for a in 1..=b {
                    if let Ok(t) = Triangle::from_ints(a, b, c) {
                        if let Ok(cert) = certify_heron(&t) {
                            brute.push(cert);
                        }
                    }
                }
            }
        }
        assert_eq!(certs, brute);
    }

    #[test]
    fn tiny_bound_has_no_pairs() {
        let cfg = SearchConfig::new(10, PairKind::ALL);
        assert!(find_pairs(&cfg).unwrap().is_empty());
        assert!(matches!(
            find_pairs(&SearchConfig::new(2, PairKind::ALL)),
            Err(SearchError::InvalidConfig(2))
        ));
    }

    #[test]
    fn finds_published_inradius_pair() {
        let cfg = SearchConfig::new(85, [PairKind::CommonRr]);
        let records = find_pairs(&cfg).unwrap();
        let target = family_rr_right(&int(4)).unwrap().similarity_key();
        let hit = records.iter().find(|r| r.pair.similarity_key() == target).unwrap();
        assert_eq!(hit.key, (rat(85, 2), int(14)));
        assert!(cross_check_family(&family_rr_right(&int(4)).unwrap(), &cfg).unwrap());
    }

    #[test]
    fn filters_apply() {
        let mut cfg = SearchConfig::new(60, PairKind::ALL);
        let all = find_pairs(&cfg).unwrap();
        cfg.primitive_only = true;
        cfg.scalene_only = true;
        let filtered = find_pairs(&cfg).unwrap();
        assert!(filtered.len() <= all.len());
        for r in &filtered {
            for t in [&r.pair.first.triangle, &r.pair.second.triangle] {
                assert!(is_primitive(t) && t.is_scalene());
            }
        }
    }

    #[test]
    fn record_json_round_trip() {
        let cfg = SearchConfig::new(85, [PairKind::CommonRr]);
        let records = find_pairs(&cfg).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let first: PairRecord = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first, records[0]);
        assert!(text.lines().next().unwrap().contains("\"key\":["));
    }

    #[test]
    fn csv_output() {
        let pair = family_rr_right(&int(4)).unwrap();
        let mut buf = Vec::new();
        write_csv(&[&pair], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "kind,a1,b1,c1,a2,b2,c2,shared_circumradius,shared_other\n\
             common_rr,40,68,84,85,77,36,85/2,14\n"
        );
    }
}
