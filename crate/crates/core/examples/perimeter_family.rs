//! Pairs with a common circumradius and perimeter, from the closed-form family
//! and from the tangent construction on the associated cubic.

use heron_pairs::constructor::solve_rp;
use heron_pairs::families::{family_rp, family_rp_right, Family};
use heron_pairs::rational::{int, rat};
use heron_pairs::verify_pair;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pair = family_rp(&int(2), &int(3))?;
    println!("family (2, 3): {} and {}", pair.first.triangle, pair.second.triangle);
    println!("  R = {}, P = {}", pair.shared_circumradius, pair.shared_other);
    let closed = Family::Rp { t1: int(2), t2: int(3) }.closed_form()?;
    println!("  closed form before scaling: R = {}, P = {}", closed.circumradius, closed.other);

    // the scale m of the common perimeter does not change the primitive pair
    for m in [int(1), rat(-7, 2)] {
        let solved = solve_rp(&int(2), &int(3), &m)?;
        assert_eq!(solved.first.triangle, pair.first.triangle);
        println!("tangent solver, m = {m}: verified = {}", verify_pair(&solved).all_passed());
    }

    let right = family_rp_right(&int(2))?;
    println!("right specialization: {} and {} (R = {}, P = {})",
        right.first.triangle, right.second.triangle, right.shared_circumradius, right.shared_other);
    Ok(())
}
