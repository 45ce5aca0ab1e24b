//! Round-trips a pair through JSON and shows what verification catches.

use heron_pairs::families::family_rr;
use heron_pairs::rational::{int, rat};
use heron_pairs::{verify_pair, TrianglePair};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pair = family_rr(&rat(9, 2), &rat(7, 6))?;
    let json = serde_json::to_string_pretty(&pair)?;
    println!("{json}");

    let back: TrianglePair = serde_json::from_str(&json)?;
    println!("round trip verified: {}", verify_pair(&back).all_passed());

    let mut tampered = back.clone();
    tampered.shared_other = int(229);
    for check in verify_pair(&tampered).failures() {
        println!("tampered pair fails: {}", check.name);
    }

    // JSON with a side that breaks the triangle inequality is rejected on load
    let bad = json.replacen("\"2055\"", "\"9999\"", 1);
    if let Err(e) = serde_json::from_str::<TrianglePair>(&bad) {
        println!("rejected on load: {e}");
    }
    Ok(())
}
