//! The Cauchy identity for non-symmetric Hall-Littlewood polynomials: the
//! kernel Π_{i<j}(1 − qt x_i y_j) / Π_{i≤j}(1 − t x_i y_j) expanded t-adically
//! equals Σ_a t^{|a|} E^σ_a(x;1/q) F^σ_a(y;q) for every twist σ, together
//! with the head/tail identities of winding permutations that drive its
//! applications.
//!
//! ```bash
//! cargo run -p catalanimal --example cauchy_identity
//! ```

use catalanimal::algebra::{Infinitesimal, Permutation};
use catalanimal::hecke::{check_cauchy, check_winding_identity, winding_from_progression};

fn main() {
    for l in 1..=3usize {
        for sigma in Permutation::all(l) {
            assert!(check_cauchy(&sigma, l, 3));
        }
        println!("Cauchy identity holds for l = {l}, every twist, t-order 3");
    }

    // winding permutations: sorting the fractional parts of an arithmetic
    // progression with irrational step
    let a: Infinitesimal = "3/7+e".parse().unwrap();
    let b: Infinitesimal = "1/5".parse().unwrap();
    let data = winding_from_progression(&a, &b, 5).unwrap();
    println!(
        "\nprogression step {a}, offset {b}: sigma = {}, eta = {:?}",
        data.sigma, data.eta
    );
    println!("head tau = {}, tail theta = {}", data.tau, data.theta);

    for lam in [vec![1, 0, 1, 0], vec![0, 1, 2, 0], vec![2, 0, 0, 1]] {
        assert!(check_winding_identity(&data, &lam));
        println!("head/tail identity holds at lambda = {lam:?}");
    }
}
