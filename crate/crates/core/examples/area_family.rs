//! Pairs with a common circumradius and area, both triangles sharing a side.

use heron_pairs::constructor::{solve_ra, solve_ra_scaled};
use heron_pairs::families::family_ra;
use heron_pairs::rational::{int, rat};
use heron_pairs::verify_pair;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pair = family_ra(&int(2))?;
    println!("family t = 2: {} and {}", pair.first.triangle, pair.second.triangle);
    println!("  R = {}, A = {}", pair.shared_circumradius, pair.shared_other);

    let report = verify_pair(&pair);
    println!("  side products equal: {:?}", report.get("a1*b1*c1 = a2*b2*c2"));
    println!("  Heron products equal: {:?}", report.get("equal Heron products"));

    let solved = solve_ra(&int(2))?;
    assert_eq!(solved.first.triangle, pair.first.triangle);
    let scaled = solve_ra_scaled(&int(2), &int(3), &rat(1, 5))?;
    println!("scaled construction is similar: {}", scaled.similarity_key() == pair.similarity_key());

    for t in [int(3), rat(1, 2), rat(2, 3)] {
        let p = family_ra(&t)?;
        println!("t = {t}: {} and {}", p.first.triangle, p.second.triangle);
    }
    Ok(())
}
