//! Twisted non-symmetric Hall-Littlewood polynomials: the E and F families
//! for l = 3 up to degree 2, and their orthogonality under the q-deformed
//! constant-term pairing.
//!
//! ```bash
//! cargo run -p catalanimal --example hall_littlewood_ef
//! ```

use catalanimal::algebra::{Permutation, QTLaurent};
use catalanimal::hecke::{ef_pairing, ns_hl_e, ns_hl_f};

fn main() {
    let id = Permutation::identity(3);
    let weights: Vec<Vec<i64>> = vec![
        vec![0, 0, 0],
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![1, 1, 0],
        vec![1, 0, 1],
        vec![0, 1, 1],
        vec![2, 0, 0],
        vec![0, 2, 0],
        vec![0, 0, 2],
    ];

    println!("E (tabulated at q -> 1/q) and F for the identity twist:");
    for lam in &weights {
        let e = ns_hl_e(&id, lam).map_coeffs(|c| c.bar_q());
        let f = ns_hl_f(&id, lam);
        let name: String = lam.iter().map(|d| d.to_string()).collect();
        println!("E_{name} = {e}");
        println!("F_{name} = {f}");
    }

    // duality: ⟨E_λ, conj F_μ⟩_q = δ_{λμ} for every twist
    for sigma in Permutation::all(3) {
        for lam in &weights {
            for mu in &weights {
                let pairing = ef_pairing(&sigma, lam, mu).unwrap();
                let want = if lam == mu {
                    QTLaurent::one()
                } else {
                    QTLaurent::zero()
                };
                assert_eq!(pairing, want);
            }
        }
    }
    println!(
        "\northogonality verified for all twists over {} weight pairs",
        6 * weights.len() * weights.len()
    );
}
