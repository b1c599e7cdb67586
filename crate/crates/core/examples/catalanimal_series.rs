//! The character series of a run vector b: its polynomial part as a Schur
//! expansion, computed three independent ways, with its q,t symmetry and
//! its q = 1 and t = 0 specializations.
//!
//! ```bash
//! cargo run -p catalanimal --example catalanimal_series
//! ```

use catalanimal::algebra::{QTLaurent, XLaurent};
use catalanimal::catalan::{hb_pol, hb_pol_chain_form, hb_pol_via_h_route, trailing_zero_check};
use catalanimal::characters::hall_littlewood_pol;
use catalanimal::verify::check_q1;

fn main() {
    let b = [1, 2, 1, 0];
    let series = hb_pol(&b).unwrap();
    println!("polynomial part for b = {b:?}:");
    for (lam, c) in series.terms().rev() {
        println!("  s_{lam}  {c}");
    }

    // three routes, one answer
    assert_eq!(series, hb_pol_chain_form(&b).unwrap());
    assert_eq!(series, hb_pol_via_h_route(&b).unwrap());
    println!("chain-denominator and Cauchy-coefficient routes agree");

    // manifest q,t symmetry of the kernel survives into the expansion
    assert_eq!(series, series.map_coeffs(|c| c.swap_qt()));
    println!("q <-> t symmetric");

    // t = 0 collapses to a Hall-Littlewood symmetrization
    let t0 = series.map_coeffs(|c| c.subst_t_zero());
    let mono = XLaurent::monomial(vec![2, 1, 1, 0], QTLaurent::one());
    assert_eq!(
        t0,
        hall_littlewood_pol(&mono).unwrap().scale(&QTLaurent::q())
    );
    println!("t = 0 slice equals q * HL symmetrization of x^(2,1,1,0)");

    // q = 1 collapses to a path-indexed sum of h products
    let report = check_q1(&b).unwrap();
    assert!(report.equal);
    println!("q = 1 slice equals the path-indexed h sum");

    // a trailing zero never matters
    assert!(trailing_zero_check(&[1, 2, 1]).unwrap());
    println!("trailing zero verified: b = (1,2,1) and (1,2,1,0) give one series");
}
