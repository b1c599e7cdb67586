//! σ-triples on a tuple of rows, the triple-weighted tableau generating
//! function, and the statistic transfer h_σ(β/α) − inv(T) = h_σ(S) under
//! S = T∘σ.
//!
//! ```bash
//! cargo run -p catalanimal --example triple_statistics
//! ```

use catalanimal::algebra::Permutation;
use catalanimal::llt::{increasing_triples, llt_n, sigma_triples, transfer_tableau, RowTuple};

fn main() {
    // rows (6,3,5)/(2,1,2): row j holds boxes at x = alpha_j+1 ..= beta_j
    let rows = RowTuple::new(vec![2, 1, 2], vec![6, 3, 5]).unwrap();
    let s: Vec<Vec<i64>> = vec![vec![2, 5, 6, 7], vec![1, 3], vec![4, 8, 9]];

    for images in [vec![1usize, 2, 3], vec![3, 1, 2]] {
        let sigma = Permutation::from_images(images).unwrap();
        let (h, _) = sigma_triples(&rows, &sigma);
        let hs = increasing_triples(&rows, &sigma, &s);
        println!("twist {sigma}: {h} triples, {hs} increasing in the sample tableau");

        // move the tableau onto the permuted tuple and transfer it back
        let t: Vec<Vec<i64>> = (1..=3)
            .map(|k| s[sigma.inverse().apply(k) - 1].clone())
            .collect();
        let res = transfer_tableau(&rows, &sigma, &t).unwrap();
        println!(
            "  transfer: h = {}, inv(T) = {}, h(S) = {} (h − inv = h(S))",
            res.h_rows, res.inv_t, res.h_s
        );
    }

    // the generating function over negative tableaux, weighted by q^{h}
    let small = RowTuple::new(vec![0, 0], vec![2, 1]).unwrap();
    for sigma in Permutation::all(2) {
        let n = llt_n(&sigma, &small, 3);
        println!("\nN for rows (2,1)/(0,0), twist {sigma}:\n{n}");
    }
}
