//! The path identity end to end: the polynomial part of the series for b
//! equals the sum over paths of t^{area} q^{dinv} times the tuple LLT
//! polynomial at q → 1/q, and its stable refinement holds coefficient by
//! coefficient in a window of dominant weights.
//!
//! ```bash
//! cargo run -p catalanimal --example shuffle_identity
//! ```

use catalanimal::paths::{ExtendedPathSpec, Line};
use catalanimal::verify::{check_main, check_stable, dominant_window};

fn main() {
    let line = Line::new("47/10".parse().unwrap(), "331/100-e".parse().unwrap()).unwrap();

    let report = check_main(&line, &ExtendedPathSpec::none()).unwrap();
    println!("{report}\n");
    assert!(report.equal);

    // the y-axis extension: paths start u steps higher
    for u in 0..=1 {
        let report = check_main(&line, &ExtendedPathSpec::new(u).unwrap()).unwrap();
        assert!(report.equal);
        println!("extension u = {u}: equal");
    }

    // the stable identity compares windowed coefficients of the infinite
    // series, including non-polynomial dominant weights
    let window = dominant_window(line.l(), 4, 2);
    let report = check_stable(&line, 0, 0, 2, &window).unwrap();
    assert!(report.equal);
    println!(
        "\nstable identity: {} dominant weights, t-order 2: equal",
        window.len()
    );
}
