//! Combinatorial LLT polynomials on tuples of skew shapes: attacking pairs,
//! Schur expansions, the omega image via all-negative super tableaux, and
//! the rotation identity ω G_ν(X;q) = q^{I(ν)} G_{ν^R}(X;1/q).
//!
//! ```bash
//! cargo run -p catalanimal --example llt_polynomials
//! ```

use catalanimal::characters::schur_expand;
use catalanimal::llt::{attacking_pairs, llt_poly, omega_llt_poly, RowTuple};

fn main() {
    // the tuple of one-row shapes printed 2011/0000: rows of lengths
    // 2, 0, 1, 1 starting at the origin
    let rows = RowTuple::new(vec![0, 0, 0, 0], vec![2, 0, 1, 1]).unwrap();
    let nu = rows.to_skew_tuple();
    let (pairs, _) = attacking_pairs(&nu);
    println!("tuple {nu} with {pairs} attacking pairs");

    let g = llt_poly(&nu, 4);
    println!("G = {}", schur_expand(&g).unwrap());

    // the omega image two ways: transposed partitions, and directly as the
    // generating function of all-negative super tableaux
    let direct = schur_expand(&omega_llt_poly(&nu, 4)).unwrap();
    println!("omega G = {direct}");

    // rotation identity: rotate each component 180° after transposing,
    // preserving contents
    let rot = nu.rotate();
    let i = attacking_pairs(&nu).0 as i64;
    let rhs = schur_expand(&llt_poly(&rot, 4))
        .unwrap()
        .map_coeffs(|c| c.bar_q().mul_term(i, 0, &1.into()));
    println!("rotated tuple {rot}");
    assert_eq!(direct, rhs);
    println!("rotation identity verified: omega G = q^{i} * G_rotated(1/q)");
}
