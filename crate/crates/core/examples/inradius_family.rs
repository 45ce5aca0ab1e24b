//! Pairs with a common circumradius and inradius.

use heron_pairs::constructor::solve_rr;
use heron_pairs::families::{family_rr, family_rr_right};
use heron_pairs::rational::{int, parse_rational};
use heron_pairs::verify_pair;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (t1, t2) = (parse_rational("9/2")?, parse_rational("7/6")?);
    let pair = family_rr(&t1, &t2)?;
    println!("family ({t1}, {t2}): {} and {}", pair.first.triangle, pair.second.triangle);
    println!("  R = {}, r = {}", pair.shared_circumradius, pair.shared_other);

    let solved = solve_rr(&t1, &t2, &int(1))?;
    assert_eq!(solved.second.triangle, pair.second.triangle);

    let right = family_rr_right(&int(4))?;
    println!("right specialization: {} and {}", right.first.triangle, right.second.triangle);
    for check in verify_pair(&right).checks {
        println!("  [{}] {}", if check.passed { "ok" } else { "FAIL" }, check.name);
    }

    // degenerate parameters name the vanishing factor
    if let Err(e) = family_rr(&int(1), &int(1)) {
        println!("(1, 1): {e}");
    }
    Ok(())
}
