//! The Demazure-Lusztig action on Laurent polynomials, twisted non-symmetric
//! Hall-Littlewood polynomials E and F, their inner product, winding
//! permutations, and the Cauchy-identity checker.
//!
//! The generator T_i acts exactly: on a monomial the divided-difference
//! quotient telescopes along the root string between the exponent and its
//! transposition, so no rational function is ever formed. The quadratic
//! relation (T_i − q)(T_i + 1) = 0 gives the inverse as
//! T_i^{-1} = q^{-1}(T_i + 1 − q).

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{Infinitesimal, Permutation, QTLaurent, XLaurent};
use crate::characters::{is_dominant, schur_eval, Partition};
use crate::kernel::{self, KernelOpts};
use crate::Result;

// ---- Demazure-Lusztig operators ----

/// Apply T_i (or T_i^{-1}) to a Laurent polynomial, 1 ≤ i ≤ nvars−1.
pub fn dl_apply(i: usize, f: &XLaurent, inverse: bool) -> XLaurent {
    assert!(i >= 1 && i < f.nvars(), "generator index out of range");
    if inverse {
        // T_i^{-1} = q^{-1}(T_i + 1 − q)
        let tf = dl_apply(i, f, false);
        let qinv = QTLaurent::monomial(-1, 0, BigInt::one());
        let shift = &QTLaurent::monomial(-1, 0, BigInt::one()) - &QTLaurent::one();
        return &tf.scale(&qinv) + &f.scale(&shift);
    }
    let mut out = XLaurent::zero(f.nvars());
    let q = QTLaurent::q();
    let qm1 = &q - &QTLaurent::one();
    for (e, c) in f.terms() {
        let a = e[i - 1];
        let b = e[i];
        let mut swapped = e.clone();
        swapped.swap(i - 1, i);
        if a == b {
            out.add_term(e.clone(), &(c * &q));
        } else if a > b {
            // T_i x^μ = q x^{s_i μ} + (q−1)(x^μ + ... + x^{μ−(n−1)α_i})
            out.add_term(swapped, &(c * &q));
            let mut step = e.clone();
            for _ in 0..(a - b) {
                out.add_term(step.clone(), &(c * &qm1));
                step[i - 1] -= 1;
                step[i] += 1;
            }
        } else {
            // T_i x^μ = q x^{s_i μ} + (1−q)(x^{μ+α_i} + ... + x^{s_i μ})
            out.add_term(swapped.clone(), &(c * &q));
            let mut step = e.clone();
            for _ in 0..(b - a) {
                step[i - 1] += 1;
                step[i] -= 1;
                out.add_term(step.clone(), &-&(c * &qm1));
            }
        }
    }
    out
}

/// A product of generators T_i^{±1} to apply to a polynomial; the word is
/// read left to right as operator composition, so the rightmost letter acts
/// first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeWord(pub Vec<(usize, bool)>);

impl HeckeWord {
    /// T_w for a reduced word of w, all exponents +1.
    pub fn from_reduced(indices: &[usize]) -> Self {
        HeckeWord(indices.iter().map(|&i| (i, false)).collect())
    }

    pub fn apply(&self, f: &XLaurent) -> XLaurent {
        let mut g = f.clone();
        for &(i, inv) in self.0.iter().rev() {
            g = dl_apply(i, &g, inv);
        }
        g
    }
}

// ---- Non-symmetric Hall-Littlewood polynomials ----

/// The twisted non-symmetric Hall-Littlewood polynomial E^σ_λ(x;q),
/// computed by the descent recurrence from the dominant seed
/// E^σ_{λ+} = x^{λ+}.
pub fn ns_hl_e(sigma: &Permutation, lam: &[i64]) -> XLaurent {
    let l = lam.len();
    assert_eq!(sigma.size(), l);
    ns_hl_e_with(sigma, lam, &mut |lam: &[i64]| {
        lam.iter().zip(lam.iter().skip(1)).position(|(a, b)| a < b)
    })
}

/// Same recurrence, but the reduction step at each stage is chosen by
/// `pick`: any strategy returning an index i (0-based) with λ_i < λ_{i+1}
/// yields the same polynomial.
pub fn ns_hl_e_with(
    sigma: &Permutation,
    lam: &[i64],
    pick: &mut impl FnMut(&[i64]) -> Option<usize>,
) -> XLaurent {
    if is_dominant(lam) {
        return XLaurent::monomial(lam.to_vec(), QTLaurent::one());
    }
    let i0 = pick(lam).expect("non-dominant weight has an ascent");
    debug_assert!(lam[i0] < lam[i0 + 1]);
    let i = i0 + 1;
    let mut swapped = lam.to_vec();
    swapped.swap(i0, i0 + 1);
    let inner = ns_hl_e_with(&sigma.swap_values(i), &swapped, pick);
    if sigma.inverse().apply(i) < sigma.inverse().apply(i + 1) {
        // ascent case carries q^{−1} since λ_i ≤ λ_{i+1} here
        dl_apply(i, &inner, false).scale(&QTLaurent::monomial(-1, 0, BigInt::one()))
    } else {
        dl_apply(i, &inner, true)
    }
}

/// F^σ_λ(x;q) = E^{σw0}_{−λ}(1/x; 1/q).
pub fn ns_hl_f(sigma: &Permutation, lam: &[i64]) -> XLaurent {
    let l = lam.len();
    let sw0 = sigma.compose(&Permutation::w0(l));
    let neg: Vec<i64> = lam.iter().map(|&a| -a).collect();
    let f = ns_hl_e(&sw0, &neg).substitute_inverse();
    debug_assert!(
        !lam.iter().all(|&a| a >= 0) || f.terms().all(|(e, _)| e.iter().all(|&a| a >= 0)),
        "F with nonnegative index must be a polynomial"
    );
    f
}

/// ⟨f, g⟩_q = ⟨x^0⟩ f g Π (1 − x_i/x_j)/(1 − q^{-1} x_i/x_j).
pub fn hl_inner(f: &XLaurent, g: &XLaurent) -> Result<QTLaurent> {
    let l = f.nvars();
    assert_eq!(g.nvars(), l);
    let factors = [
        kernel::unit_numerators(l),
        kernel::q_power_denominators(l, -1),
    ]
    .concat();
    kernel::constant_term(&(f * g), &factors, &KernelOpts::default())
}

// ---- Winding permutations ----

/// The sorting permutation of the fractional parts of an arithmetic
/// progression, with its descent indicator and head/tail contractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindingData {
    pub sigma: Permutation,
    /// η_i = 1 exactly when σ(i) > σ(i+1).
    pub eta: Vec<i64>,
    /// Relative order of σ(1), ..., σ(l−1).
    pub tau: Permutation,
    /// Relative order of σ(2), ..., σ(l).
    pub theta: Permutation,
}

/// Winding data of a sequence of distinct fractional parts.
pub fn winding(cs: &[Infinitesimal]) -> Result<WindingData> {
    let sigma = Permutation::sorting(cs)?;
    Ok(winding_of_permutation(&sigma))
}

/// Winding data read off an arbitrary permutation. The caller asserts that
/// σ arises from an arithmetic progression; `winding` and
/// `winding_from_progression` construct only genuine instances.
pub fn winding_of_permutation(sigma: &Permutation) -> WindingData {
    let l = sigma.size();
    let eta: Vec<i64> = (1..l).map(|i| i64::from(sigma.descent(i))).collect();
    let head: Vec<usize> = sigma.images()[..l - 1].to_vec();
    let tail: Vec<usize> = sigma.images()[1..].to_vec();
    WindingData {
        sigma: sigma.clone(),
        eta,
        tau: Permutation::sorting(&head).expect("distinct images"),
        theta: Permutation::sorting(&tail).expect("distinct images"),
    }
}

/// Winding data of c_i = {a·i + b}, i = 1..l.
pub fn winding_from_progression(
    a: &Infinitesimal,
    b: &Infinitesimal,
    l: usize,
) -> Result<WindingData> {
    let cs: Vec<Infinitesimal> = (1..=l)
        .map(|i| (&(a * &Infinitesimal::integer(i as i64)) + b).frac())
        .collect();
    winding(&cs)
}

/// Check E^{θ^{-1}}_λ = x^η E^{τ^{-1}}_{λ−η} and the same identity for F,
/// as Laurent polynomials in l−1 variables.
pub fn check_winding_identity(data: &WindingData, lam: &[i64]) -> bool {
    let m = data.tau.size();
    assert_eq!(lam.len(), m);
    let shifted: Vec<i64> = lam.iter().zip(&data.eta).map(|(a, e)| a - e).collect();
    let eta_mono = XLaurent::monomial(data.eta.clone(), QTLaurent::one());

    let lhs_e = ns_hl_e(&data.theta.inverse(), lam);
    let rhs_e = &eta_mono * &ns_hl_e(&data.tau.inverse(), &shifted);
    if lhs_e != rhs_e {
        return false;
    }
    let lhs_f = ns_hl_f(&data.theta.inverse(), lam);
    let rhs_f = &eta_mono * &ns_hl_f(&data.tau.inverse(), &shifted);
    lhs_f == rhs_f
}

// ---- Cauchy identity ----

/// Compare Π_{i<j}(1 − qt x_i y_j) / Π_{i≤j}(1 − t x_i y_j), expanded as a
/// t-adic series to order tmax, with Σ_{|a| ≤ tmax} t^{|a|}
/// E^σ_a(x;q^{-1}) F^σ_a(y;q).
pub fn check_cauchy(sigma: &Permutation, l: usize, tmax: i64) -> bool {
    assert_eq!(sigma.size(), l);
    assert!(tmax >= 0);
    let n = 2 * l;

    // left side: x's occupy variables 0..l, y's occupy l..2l
    let mut lhs = XLaurent::one(n);
    for i in 0..l {
        for j in 0..l {
            let mut pair = vec![0i64; n];
            pair[i] = 1;
            pair[l + j] = 1;
            if i < j {
                let mut num = XLaurent::one(n);
                num.add_term(pair.clone(), &-&(&QTLaurent::q() * &QTLaurent::t()));
                lhs = (&lhs * &num).truncate_t(tmax);
            }
            if i <= j {
                let mut geom = XLaurent::zero(n);
                for k in 0..=tmax {
                    geom.add_term(
                        pair.iter().map(|&e| e * k).collect(),
                        &QTLaurent::monomial(0, k, BigInt::one()),
                    );
                }
                lhs = (&lhs * &geom).truncate_t(tmax);
            }
        }
    }

    // right side
    let mut rhs = XLaurent::zero(n);
    for a in compositions_up_to(l, tmax) {
        let total: i64 = a.iter().sum();
        let e = ns_hl_e(sigma, &a).map_coeffs(|c| c.bar_q()).embed(n, 0);
        let f = ns_hl_f(sigma, &a).embed(n, l);
        rhs = &rhs + &(&e * &f).scale(&QTLaurent::monomial(0, total, BigInt::one()));
    }
    lhs == rhs
}

/// All vectors in N^l with coordinate sum ≤ max.
pub fn compositions_up_to(l: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..l {
        let mut next = Vec::new();
        for v in &out {
            let used: i64 = v.iter().sum();
            for a in 0..=(max - used) {
                let mut w = v.clone();
                w.push(a);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

// ---- Multiplication by e_k ----

/// h_I of the expansion of e_k(x)·E^{σ^{-1}}_λ: pairs i < j with i ∈ I,
/// j ∉ I and λ_j = λ_i when σ(i) < σ(j), or λ_j = λ_i + 1 when
/// σ(i) > σ(j).
fn h_subset(sigma: &Permutation, lam: &[i64], subset: &[bool]) -> i64 {
    let l = lam.len();
    let mut h = 0;
    for i in 0..l {
        if !subset[i] {
            continue;
        }
        for j in i + 1..l {
            if subset[j] {
                continue;
            }
            let asc = sigma.apply(i + 1) < sigma.apply(j + 1);
            if (asc && lam[j] == lam[i]) || (!asc && lam[j] == lam[i] + 1) {
                h += 1;
            }
        }
    }
    h
}

/// Verify e_k(x)·E^{σ^{-1}}_λ(x;q) = Σ_{|I|=k} q^{−h_I} E^{σ^{-1}}_{λ+ε_I}.
pub fn ek_expansion_check(sigma: &Permutation, lam: &[i64], k: usize) -> bool {
    let l = lam.len();
    assert!(k <= l);
    let tw = sigma.inverse();
    let ek = schur_eval(&Partition::new(vec![1; k]).unwrap(), l);
    let lhs = &ek * &ns_hl_e(&tw, lam);

    let mut rhs = XLaurent::zero(l);
    for mask in 0u32..(1 << l) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let subset: Vec<bool> = (0..l).map(|i| mask & (1 << i) != 0).collect();
        let bumped: Vec<i64> = lam
            .iter()
            .zip(&subset)
            .map(|(&a, &s)| a + i64::from(s))
            .collect();
        let h = h_subset(sigma, lam, &subset);
        rhs = &rhs + &ns_hl_e(&tw, &bumped).scale(&QTLaurent::monomial(-h, 0, BigInt::one()));
    }
    lhs == rhs
}

/// Orthogonality pairing ⟨E^σ_λ, conj F^σ_μ⟩_q; equals δ_{λμ}.
pub fn ef_pairing(sigma: &Permutation, lam: &[i64], mu: &[i64]) -> Result<QTLaurent> {
    let e = ns_hl_e(sigma, lam);
    let fbar = ns_hl_f(sigma, mu).substitute_inverse();
    hl_inner(&e, &fbar)
}
