//! The character series attached to a run vector b, its polynomial part,
//! LLT series coefficients, and generalized q,t-Catalan numbers by three
//! independent methods.
//!
//! The series for b is the symmetrization of
//!
//!   x^b · Π_{i+1<j}(1 − qt x_i/x_j) / Π_{i<j}((1 − q x_i/x_j)(1 − t x_i/x_j)),
//!
//! expanded under transfer caps and straightened. Its polynomial part is a
//! symmetric polynomial in l variables of degree |b|. The same object is
//! reachable through the full Cauchy-kernel constant term, which the
//! verification paths exploit.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{Permutation, QTLaurent, XLaurent};
use crate::characters::{
    chi_eval, h_product_schur, hall_littlewood_pol, schur_expand, weyl_sigma_pol, Partition,
    SchurExpansion,
};
use crate::kernel::{self, KernelOpts};
use crate::llt::{llt_poly, sigma_triples, RowTuple};
use crate::paths::{self, Line};
use crate::{Error, Result};

pub use crate::kernel::{
    expand as expand_kernel, expand_monomial, KernelFactor, KernelOpts as ExpandOpts, TransferCaps,
};

/// Factor set of the series for b in the Hall-Littlewood form: geometric
/// series in q and t for every pair, numerators 1 − qt x_i/x_j for
/// non-adjacent pairs.
pub fn hb_factors(l: usize) -> Vec<KernelFactor> {
    [
        kernel::t_denominators(l),
        kernel::q_denominators(l),
        kernel::qt_numerators_gap(l),
    ]
    .concat()
}

/// Factor set of the q,t-symmetrization kernel Γ for every pair.
pub fn gamma_factors(l: usize) -> Vec<KernelFactor> {
    [
        kernel::t_denominators(l),
        kernel::q_denominators(l),
        kernel::qt_numerators(l),
    ]
    .concat()
}

/// Polynomial part of the q,t-symmetrization of φ.
pub fn hqt_pol(phi: &XLaurent) -> Result<SchurExpansion> {
    let l = phi.nvars();
    let expanded = kernel::expand(
        phi,
        &gamma_factors(l),
        &kernel::pol_floors(l),
        &KernelOpts::default(),
    )?;
    Ok(weyl_sigma_pol(&expanded))
}

/// Polynomial part of the character series for b, as a Schur expansion in
/// l = b.len() variables; homogeneous of degree |b| when b ≥ 0.
pub fn hb_pol(b: &[i64]) -> Result<SchurExpansion> {
    hb_pol_opts(b, &KernelOpts::default())
}

pub fn hb_pol_opts(b: &[i64], opts: &KernelOpts) -> Result<SchurExpansion> {
    let l = b.len();
    if l == 0 {
        return Ok(SchurExpansion::one(0));
    }
    let expanded = kernel::expand_monomial(b, &hb_factors(l), &kernel::pol_floors(l), opts)?;
    Ok(weyl_sigma_pol(&expanded))
}

/// The same series through the chain-denominator form of the kernel; equal
/// to `hb_pol` term by term.
pub fn hb_pol_chain_form(b: &[i64]) -> Result<SchurExpansion> {
    let l = b.len();
    if l == 0 {
        return Ok(SchurExpansion::one(0));
    }
    let factors = [gamma_factors(l), kernel::qt_chain_denominators(l)].concat();
    let expanded =
        kernel::expand_monomial(b, &factors, &kernel::pol_floors(l), &KernelOpts::default())?;
    Ok(weyl_sigma_pol(&expanded))
}

/// Independent route to the polynomial part through the Cauchy-kernel
/// coefficient extraction: each retained kernel monomial z^μ contributes
/// its coefficient times h_{μ_1}···h_{μ_l}.
pub fn hb_pol_via_h_route(b: &[i64]) -> Result<SchurExpansion> {
    let l = b.len();
    if l == 0 {
        return Ok(SchurExpansion::one(0));
    }
    let factors = [
        kernel::qt_chain_denominators(l),
        gamma_factors(l),
        kernel::unit_numerators(l),
    ]
    .concat();
    h_route(&XLaurent::monomial(b.to_vec(), QTLaurent::one()), &factors)
}

/// The h-route for the plain Γ kernel applied to an arbitrary polynomial.
pub fn hqt_pol_via_h_route(phi: &XLaurent) -> Result<SchurExpansion> {
    let l = phi.nvars();
    let factors = [gamma_factors(l), kernel::unit_numerators(l)].concat();
    h_route(phi, &factors)
}

fn h_route(init: &XLaurent, factors: &[KernelFactor]) -> Result<SchurExpansion> {
    let l = init.nvars();
    let floors = vec![0i64; l];
    let expanded = kernel::expand(init, factors, &floors, &KernelOpts::default())?;
    let mut out = SchurExpansion::zero(l);
    for (mu, c) in expanded.terms() {
        out = out.add(&h_product_schur(mu, l).scale(c));
    }
    Ok(out)
}

/// Appending a zero to b changes nothing: the longer series restricted to
/// partitions of length ≤ l matches, and no length-(l+1) partition occurs.
pub fn trailing_zero_check(b: &[i64]) -> Result<bool> {
    let short = hb_pol(b)?;
    let mut extended = b.to_vec();
    extended.push(0);
    let long = hb_pol(&extended)?;
    let l = b.len();
    if long.terms().any(|(lam, _)| lam.len() > l) {
        return Ok(false);
    }
    let a: Vec<(Partition, QTLaurent)> =
        short.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
    let z: Vec<(Partition, QTLaurent)> =
        long.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
    Ok(a == z)
}

// ---- LLT series ----

/// Polynomial part of the twisted LLT series for index vectors β, α in Z^l:
/// q^{h_σ(β/α)} times the tuple LLT polynomial of σ(β/α) at q → 1/q when
/// α ≤ β coordinatewise, zero otherwise.
pub fn llt_series_pol(sigma: &Permutation, beta: &[i64], alpha: &[i64]) -> Result<SchurExpansion> {
    let l = beta.len();
    assert_eq!(alpha.len(), l);
    assert_eq!(sigma.size(), l);
    if alpha.iter().zip(beta).any(|(a, b)| a > b) {
        return Ok(SchurExpansion::zero(l));
    }
    let rows = RowTuple::new(alpha.to_vec(), beta.to_vec())?;
    let (h, _) = sigma_triples(&rows, sigma);
    let g = llt_poly(&rows.permuted(sigma).to_skew_tuple(), l);
    let expansion = schur_expand(&g)?;
    Ok(expansion.map_coeffs(|c| c.bar_q().mul_term(h, 0, &BigInt::one())))
}

/// The same series through Hall-Littlewood symmetrization of
/// w_0(F^{σ^{-1}}_β(x;q) · E^{σ^{-1}}_α(1/x;1/q)); used as the verification
/// route against `llt_series_pol`.
pub fn llt_series_pol_via_formula(
    sigma: &Permutation,
    beta: &[i64],
    alpha: &[i64],
) -> Result<SchurExpansion> {
    let l = beta.len();
    let tw = sigma.inverse();
    let f = crate::hecke::ns_hl_f(&tw, beta);
    let ebar = crate::hecke::ns_hl_e(&tw, alpha).substitute_inverse();
    let prod = (&f * &ebar).permute_vars(&Permutation::w0(l));
    hall_littlewood_pol(&prod)
}

/// Coefficient of χ_λ in the twisted LLT series, by bounded constant-term
/// extraction; λ is any dominant weight, possibly with negative entries.
pub fn llt_series_coeff(
    sigma: &Permutation,
    beta: &[i64],
    alpha: &[i64],
    lam: &[i64],
) -> Result<QTLaurent> {
    let l = beta.len();
    assert_eq!(alpha.len(), l);
    assert_eq!(lam.len(), l);
    let tw = sigma.inverse();
    // F^{σ^{-1}}_β(1/x; q) = E^{σ^{-1}w0}_{−β}(x; 1/q)
    let neg_beta: Vec<i64> = beta.iter().map(|&v| -v).collect();
    let fpart = crate::hecke::ns_hl_e(&tw.compose(&Permutation::w0(l)), &neg_beta)
        .map_coeffs(|c| c.bar_q());
    let epart = crate::hecke::ns_hl_e(&tw, alpha).map_coeffs(|c| c.bar_q());
    let p = &(&chi_eval(lam, l) * &fpart) * &epart;
    let factors = [
        kernel::unit_numerators(l),
        kernel::q_power_denominators(l, 1),
    ]
    .concat();
    kernel::constant_term(&p, &factors, &KernelOpts::default())
}

// ---- Generalized q,t-Catalan numbers ----

/// Coefficient of the one-row Schur function in the series for b.
pub fn catalan_schur(b: &[i64]) -> Result<QTLaurent> {
    let total: i64 = b.iter().sum();
    Ok(hb_pol(b)?.coeff(&Partition::row(total.max(0))))
}

/// Path sum Σ t^{area} q^{dinv} over the paths below the line.
pub fn catalan_paths(line: &Line) -> QTLaurent {
    let mut out = QTLaurent::zero();
    for path in paths::enumerate_paths(line) {
        let (a, _) = paths::area(&path, line);
        let d = paths::dinv_p(&path, line.p());
        out.add_term(d, a, &BigInt::one());
    }
    out
}

/// Series-coefficient formula: the z^{−b} coefficient of the full Cauchy
/// kernel against Π 1/(1 − 1/z_i). Every transfer term with exponent ≥ −b
/// coordinatewise contributes its coefficient.
pub fn catalan_ct(b: &[i64]) -> Result<QTLaurent> {
    let l = b.len();
    if l == 0 {
        return Ok(QTLaurent::one());
    }
    let factors = [
        kernel::qt_chain_denominators(l),
        gamma_factors(l),
        kernel::unit_numerators(l),
    ]
    .concat();
    let floors: Vec<i64> = b.iter().map(|&v| -v).collect();
    let expanded = kernel::expand_monomial(&vec![0; l], &factors, &floors, &KernelOpts::default())?;
    let mut out = QTLaurent::zero();
    for (_, c) in expanded.terms() {
        out = &out + c;
    }
    Ok(out)
}

/// The generalized q,t-Catalan number of b, with the series and
/// constant-term methods compared, and the path sum as well when a line
/// realizing b is supplied. A disagreement is an error.
pub fn catalan_cb(b: &[i64], line: Option<&Line>) -> Result<QTLaurent> {
    let schur = catalan_schur(b)?;
    let ct = catalan_ct(b)?;
    if schur != ct {
        return Err(Error::MethodMismatch("catalan series vs constant term"));
    }
    if let Some(line) = line {
        if paths::highest_path(line).south_runs() != b {
            return Err(Error::Invalid("line does not realize b".into()));
        }
        if catalan_paths(line) != schur {
            return Err(Error::MethodMismatch("catalan path sum"));
        }
    }
    Ok(schur)
}
