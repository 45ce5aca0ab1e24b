//! Repeated Fermat steps on the area quartic: each value of u makes the
//! quartic a square and yields a new common-area pair.

use heron_pairs::constructor::{pair_from_ra_u, quartic_ra, solve_ra_iterate};
use heron_pairs::rational::int;
use heron_pairs::verify_pair;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = int(2);
    let quartic = quartic_ra(&t)?;
    println!("q(1) = {}", quartic.eval(&int(1)));
    for u in solve_ra_iterate(&t, 3)? {
        let pair = pair_from_ra_u(&t, &u, &int(1), &int(1))?;
        println!("u = {u}");
        println!("  square: {}, verified: {}", quartic.is_square_at(&u), verify_pair(&pair).all_passed());
        println!("  {} and {}", pair.first.triangle, pair.second.triangle);
    }
    Ok(())
}
