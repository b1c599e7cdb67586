//! Scan run vectors for Schur positivity of the series polynomial part.
//! Vectors realizable under a convex curve are expected positive; the
//! others are scanned for contrast and routinely fail.
//!
//! ```bash
//! cargo run -p catalanimal --example positivity_scan
//! ```

use catalanimal::verify::scan_positivity;

fn main() {
    let reports = scan_positivity(4, 5).unwrap();
    let convex = reports.iter().filter(|r| r.convex).count();
    let convex_bad = reports.iter().filter(|r| r.convex && !r.positive()).count();
    let nonconvex_bad = reports
        .iter()
        .filter(|r| !r.convex && !r.positive())
        .count();

    println!(
        "scanned {} run vectors with at most 4 columns and size at most 5",
        reports.len()
    );
    println!("convex: {convex}, with negative coefficients: {convex_bad}");
    println!(
        "non-convex: {}, with negative coefficients: {nonconvex_bad} (informational)",
        reports.len() - convex
    );

    // the smallest non-convex failures, for a look at what goes wrong
    for r in reports.iter().filter(|r| !r.positive()).take(3) {
        println!("\nb = {:?} (non-convex):", r.b);
        for (lam, c) in &r.negative_terms {
            println!("  s_{lam:?}  {c}");
        }
    }
    assert_eq!(convex_bad, 0);
}
