//! Enumerate the lattice paths weakly below a line and print their
//! statistics: south runs, area against the highest path, the balanced-hook
//! count dinv, and the row data (α, β, σ) that attaches an LLT polynomial
//! to each path.
//!
//! ```bash
//! cargo run -p catalanimal --example paths_under_a_line
//! ```

use catalanimal::algebra::Infinitesimal;
use catalanimal::paths::{area, dinv_p, enumerate_paths, highest_path, llt_data, Line};

fn main() {
    // the line from (0, 4.7) to (just under 3.31, 0); the perturbation on
    // the x-intercept makes every comparison tie-free
    let s: Infinitesimal = "47/10".parse().unwrap();
    let r: Infinitesimal = "331/100-e".parse().unwrap();
    let line = Line::new(s, r).unwrap();

    println!("line: {line}");
    println!("columns: {}, lattice height: {}", line.l(), line.floor_s());
    println!("highest path: {}", highest_path(&line));
    println!("gap permutation: {}\n", line.gap_permutation());

    println!(
        "{:<12} {:>4} {:>5}   alpha / beta",
        "south runs", "area", "dinv"
    );
    for path in enumerate_paths(&line) {
        let (a, columns) = area(&path, &line);
        let d = dinv_p(&path, line.p());
        let data = llt_data(&path, &line);
        println!(
            "{:<12} {:>4} {:>5}   {:?} / {:?}   (columns {:?})",
            path.to_string(),
            a,
            d,
            data.alpha,
            data.beta,
            columns,
        );
    }

    // the same statistics at a classical slope: s = 3, slope 1 − ε
    let line = Line::from_slope("3".parse().unwrap(), "1-e".parse().unwrap()).unwrap();
    println!(
        "\nclassical line {line}: {} paths",
        enumerate_paths(&line).len()
    );
}
