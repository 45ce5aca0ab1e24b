//! Walks the inradius cubic by tangents and chords, turning each new rational
//! point into another pair.

use heron_pairs::constructor::{
    cubic_rr, cubic_rr_base_point, descend_further, pair_from_rr_point, tangent_third_point,
};
use heron_pairs::rational::int;
use heron_pairs::verify_pair;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (t1, t2, m) = (int(4), int(1), int(1));
    let curve = cubic_rr(&t1, &t2, &m)?;
    let base = cubic_rr_base_point(&t1, &t2, &m);
    println!("base point ({}, {}), on curve: {}", base.y1, base.y2, curve.contains(&base));

    let tangent = tangent_third_point(&curve, &base)?;
    println!("tangent meets the curve again at ({}, {})", tangent.y1, tangent.y2);

    for p in descend_further(&curve, &[base], 3)? {
        match pair_from_rr_point(&t1, &t2, &m, &p) {
            Ok(pair) => println!(
                "({}, {}) -> {} and {}, r = {}, verified = {}",
                p.y1, p.y2, pair.first.triangle, pair.second.triangle,
                pair.shared_other, verify_pair(&pair).all_passed()
            ),
            Err(e) => println!("({}, {}) -> {e}", p.y1, p.y2),
        }
    }
    Ok(())
}
