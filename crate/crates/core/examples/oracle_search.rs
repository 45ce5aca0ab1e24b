//! Brute-force search over integer Heron triangles, cross-checked against a
//! closed-form family. Pass the side bound as the first argument.

use heron_pairs::families::family_rr_right;
use heron_pairs::rational::int;
use heron_pairs::search::{cross_check_family, find_pairs, write_csv, SearchConfig};
use heron_pairs::PairKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_side = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(100);
    let cfg = SearchConfig::new(max_side, PairKind::ALL);
    let records = find_pairs(&cfg)?;
    println!("{} pairs with sides up to {max_side}", records.len());
    let pairs: Vec<_> = records.iter().map(|r| &r.pair).collect();
    write_csv(&pairs, std::io::stdout().lock())?;

    if max_side >= 85 {
        let family = family_rr_right(&int(4))?;
        println!("family pair found by search: {}", cross_check_family(&family, &cfg)?);
    }
    Ok(())
}
