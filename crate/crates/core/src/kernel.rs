//! Bounded expansion of raising-operator kernels.
//!
//! A kernel is a product of factors (1 − u z_i/z_j) or 1/(1 − u z_i/z_j) with
//! i < j and u a monomial in q,t. Choosing the k-th term of a factor moves k
//! units of exponent from column j to column i, so every term of the formally
//! infinite product is a transfer pattern. A retention floor f kills terms
//! whose exponent dips below f in any coordinate; because transfers only move
//! exponent toward smaller indices, the floor makes the retained sum finite:
//!
//! processing target columns j = l..2 in decreasing order, all inflow into
//! column j has already happened when its own factors are applied, so the
//! outflow from j in any surviving term is at most (current exponent − f_j).
//! Capping each geometric series at that budget enumerates exactly the terms
//! of the infinite sum that satisfy the floor.
//!
//! The `slack` option widens every budget by a constant and re-filters at the
//! true floors; the retained polynomial must not change, which is the
//! cap-stability certificate exercised by the tests.

use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

use crate::algebra::{QTLaurent, XLaurent};
use crate::{Error, Result};

/// One factor of a raising-operator kernel, coupling columns i < j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelFactor {
    /// True for (1 − u z_i/z_j); false for the geometric series
    /// 1/(1 − u z_i/z_j).
    pub numerator: bool,
    /// (q-exponent, t-exponent) of the monomial u.
    pub u: (i64, i64),
    pub i: usize,
    pub j: usize,
}

impl KernelFactor {
    pub fn numerator(u: (i64, i64), i: usize, j: usize) -> Self {
        assert!(i < j);
        KernelFactor {
            numerator: true,
            u,
            i,
            j,
        }
    }

    pub fn denominator(u: (i64, i64), i: usize, j: usize) -> Self {
        assert!(i < j);
        KernelFactor {
            numerator: false,
            u,
            i,
            j,
        }
    }
}

// ---- Standard factor sets (0-based column indices) ----

/// Π_{i<j} 1/(1 − q z_i/z_j).
pub fn q_denominators(l: usize) -> Vec<KernelFactor> {
    pairs(l)
        .map(|(i, j)| KernelFactor::denominator((1, 0), i, j))
        .collect()
}

/// Π_{i<j} 1/(1 − t z_i/z_j).
pub fn t_denominators(l: usize) -> Vec<KernelFactor> {
    pairs(l)
        .map(|(i, j)| KernelFactor::denominator((0, 1), i, j))
        .collect()
}

/// Π_{i<j} (1 − qt z_i/z_j).
pub fn qt_numerators(l: usize) -> Vec<KernelFactor> {
    pairs(l)
        .map(|(i, j)| KernelFactor::numerator((1, 1), i, j))
        .collect()
}

/// Π_{i+1<j} (1 − qt z_i/z_j).
pub fn qt_numerators_gap(l: usize) -> Vec<KernelFactor> {
    pairs(l)
        .filter(|&(i, j)| j > i + 1)
        .map(|(i, j)| KernelFactor::numerator((1, 1), i, j))
        .collect()
}

/// Π_i 1/(1 − qt z_i/z_{i+1}).
pub fn qt_chain_denominators(l: usize) -> Vec<KernelFactor> {
    (0..l.saturating_sub(1))
        .map(|i| KernelFactor::denominator((1, 1), i, i + 1))
        .collect()
}

/// Π_{i<j} (1 − z_i/z_j), the Weyl-type numerator.
pub fn unit_numerators(l: usize) -> Vec<KernelFactor> {
    pairs(l)
        .map(|(i, j)| KernelFactor::numerator((0, 0), i, j))
        .collect()
}

/// Π_{i<j} 1/(1 − q^e z_i/z_j) for the inner-product kernels.
pub fn q_power_denominators(l: usize, e: i64) -> Vec<KernelFactor> {
    pairs(l)
        .map(|(i, j)| KernelFactor::denominator((e, 0), i, j))
        .collect()
}

fn pairs(l: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..l).flat_map(move |i| (i + 1..l).map(move |j| (i, j)))
}

/// Retention floors for polynomial-part extraction: a monomial can only
/// straighten to a partition when μ_j + ρ_j ≥ 0, i.e. μ_j ≥ j − (l−1)
/// in 0-based coordinates.
pub fn pol_floors(l: usize) -> Vec<i64> {
    (0..l).map(|j| j as i64 - (l as i64 - 1)).collect()
}

// ---- Static transfer caps ----

/// Per-column bounds on the total exponent that can leave each column in any
/// term surviving the floors, telescoped from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferCaps {
    caps: Vec<i64>,
}

impl TransferCaps {
    /// Caps for expanding z^b against `factors` with the given floors.
    /// Outflow from column j is bounded by b_j − f_j plus everything that
    /// could flow in from columns to its right.
    pub fn compute(b: &[i64], factors: &[KernelFactor], floors: &[i64]) -> Self {
        let l = b.len();
        assert_eq!(floors.len(), l);
        let mut caps = vec![0i64; l];
        for j in (0..l).rev() {
            if !factors.iter().any(|f| f.j == j) {
                continue;
            }
            let inflow: i64 = (j + 1..l).map(|k| caps[k]).sum();
            caps[j] = (b[j] - floors[j] + inflow).max(0);
        }
        TransferCaps { caps }
    }

    pub fn caps(&self) -> &[i64] {
        &self.caps
    }

    pub fn total(&self) -> i64 {
        self.caps.iter().sum()
    }
}

// ---- Expansion ----

#[derive(Clone, Debug)]
pub struct KernelOpts {
    /// Drop coefficient terms with t-exponent above this bound as they arise.
    /// Only valid when every factor's u has nonnegative t-exponent.
    pub t_cap: Option<i64>,
    /// Extra transfer allowance beyond the floors; the retained result is
    /// independent of it.
    pub slack: i64,
    /// Abort when the working state count exceeds this.
    pub state_limit: usize,
    /// Abort when a static per-column cap exceeds this.
    pub cap_limit: i64,
}

impl Default for KernelOpts {
    fn default() -> Self {
        KernelOpts {
            t_cap: None,
            slack: 0,
            state_limit: 4_000_000,
            cap_limit: 1_000_000,
        }
    }
}

/// Expand `init · Π factors`, retaining exactly the terms whose exponent
/// vector is ≥ `floors` coordinatewise.
pub fn expand(
    init: &XLaurent,
    factors: &[KernelFactor],
    floors: &[i64],
    opts: &KernelOpts,
) -> Result<XLaurent> {
    let l = init.nvars();
    assert_eq!(floors.len(), l);
    for f in factors {
        assert!(f.i < f.j && f.j < l, "factor indices out of range");
        if opts.t_cap.is_some() {
            assert!(f.u.1 >= 0, "t-cap pruning requires nonnegative t-exponents");
        }
    }

    // guard against runaway inputs before enumerating anything
    for (e, _) in init.terms() {
        let caps = TransferCaps::compute(e, factors, floors);
        if caps.caps().iter().any(|&c| c > opts.cap_limit) {
            return Err(Error::CapOverflow(opts.cap_limit as usize));
        }
    }

    let mut states: BTreeMap<Vec<i64>, QTLaurent> = BTreeMap::new();
    for (e, c) in init.terms() {
        let c = match opts.t_cap {
            Some(tc) => c.truncate_t(tc),
            None => c.clone(),
        };
        if !c.is_zero() {
            states.insert(e.clone(), c);
        }
    }

    // one pass per target column, right to left
    for j in (1..l).rev() {
        let col: Vec<&KernelFactor> = factors.iter().filter(|f| f.j == j).collect();
        if col.is_empty() {
            continue;
        }
        let lo = floors[j] - opts.slack;
        states.retain(|e, _| e[j] >= lo);
        for f in col {
            let mut next: BTreeMap<Vec<i64>, QTLaurent> = BTreeMap::new();
            for (e, c) in &states {
                let budget = e[j] - lo;
                let kmax = if f.numerator { budget.min(1) } else { budget };
                for k in 0..=kmax {
                    let mut coeff = if k == 0 {
                        c.clone()
                    } else {
                        let sign = if f.numerator {
                            -BigInt::one()
                        } else {
                            BigInt::one()
                        };
                        c.mul_term(f.u.0 * k, f.u.1 * k, &sign)
                    };
                    if let Some(tc) = opts.t_cap {
                        coeff = coeff.truncate_t(tc);
                    }
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut exps = e.clone();
                    exps[f.i] += k;
                    exps[f.j] -= k;
                    match next.entry(exps) {
                        std::collections::btree_map::Entry::Vacant(en) => {
                            en.insert(coeff);
                        }
                        std::collections::btree_map::Entry::Occupied(mut en) => {
                            let v = en.get() + &coeff;
                            if v.is_zero() {
                                en.remove();
                            } else {
                                *en.get_mut() = v;
                            }
                        }
                    }
                }
            }
            if next.len() > opts.state_limit {
                return Err(Error::CapOverflow(opts.state_limit));
            }
            states = next;
        }
    }

    let mut out = XLaurent::zero(l);
    for (e, c) in states {
        if e.iter().zip(floors).all(|(&a, &f)| a >= f) {
            out.add_term(e, &c);
        }
    }
    Ok(out)
}

/// Convenience wrapper for a single starting monomial z^b.
pub fn expand_monomial(
    b: &[i64],
    factors: &[KernelFactor],
    floors: &[i64],
    opts: &KernelOpts,
) -> Result<XLaurent> {
    expand(
        &XLaurent::monomial(b.to_vec(), QTLaurent::one()),
        factors,
        floors,
        opts,
    )
}

/// Constant term ⟨z^0⟩ of `p · Π factors`.
pub fn constant_term(
    p: &XLaurent,
    factors: &[KernelFactor],
    opts: &KernelOpts,
) -> Result<QTLaurent> {
    let l = p.nvars();
    let floors = vec![0i64; l];
    let expanded = expand(p, factors, &floors, opts)?;
    Ok(expanded.coeff(&vec![0i64; l]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_factors_is_identity() {
        let f = expand_monomial(&[3], &[], &[0], &KernelOpts::default()).unwrap();
        assert_eq!(f, XLaurent::monomial(vec![3], QTLaurent::one()));
    }

    #[test]
    fn single_denominator_examples() {
        let qt = KernelFactor::denominator((1, 1), 0, 1);
        // floors (−1, 0), start (1, 0): nothing can leave column 2
        let f = expand_monomial(
            &[1, 0],
            std::slice::from_ref(&qt),
            &[-1, 0],
            &KernelOpts::default(),
        )
        .unwrap();
        assert_eq!(f, XLaurent::monomial(vec![1, 0], QTLaurent::one()));

        // start (0, 2): transfers of 0, 1, 2 units survive
        let f = expand_monomial(&[0, 2], &[qt], &[-1, 0], &KernelOpts::default()).unwrap();
        let mut want = XLaurent::monomial(vec![0, 2], QTLaurent::one());
        want.add_term(vec![1, 1], &QTLaurent::monomial(1, 1, BigInt::one()));
        want.add_term(vec![2, 0], &QTLaurent::monomial(2, 2, BigInt::one()));
        assert_eq!(f, want);
    }

    #[test]
    fn matches_generous_brute_force() {
        // brute force: expand every factor to a fixed large order with no
        // floors, multiply out, then filter by the floors
        fn brute(b: &[i64], factors: &[KernelFactor], floors: &[i64], kk: i64) -> XLaurent {
            let l = b.len();
            let mut f = XLaurent::monomial(b.to_vec(), QTLaurent::one());
            for fac in factors {
                let mut series = XLaurent::zero(l);
                let kmax = if fac.numerator { 1 } else { kk };
                for k in 0..=kmax {
                    let mut e = vec![0i64; l];
                    e[fac.i] = k;
                    e[fac.j] = -k;
                    let sign = if fac.numerator && k == 1 {
                        -BigInt::one()
                    } else {
                        BigInt::one()
                    };
                    series.add_term(e, &QTLaurent::monomial(fac.u.0 * k, fac.u.1 * k, sign));
                }
                f = &f * &series;
            }
            let mut out = XLaurent::zero(l);
            for (e, c) in f.terms() {
                if e.iter().zip(floors).all(|(&a, &fl)| a >= fl) {
                    out.add_term(e.clone(), c);
                }
            }
            out
        }

        let cases: Vec<(Vec<i64>, Vec<KernelFactor>, Vec<i64>)> = vec![
            (vec![1, 2, 0], q_denominators(3), pol_floors(3)),
            (
                vec![2, 1],
                vec![
                    KernelFactor::denominator((1, 0), 0, 1),
                    KernelFactor::numerator((1, 1), 0, 1),
                    KernelFactor::denominator((0, 1), 0, 1),
                ],
                vec![-1, 0],
            ),
            (
                vec![1, 1, 1],
                [q_denominators(3), t_denominators(3), qt_numerators_gap(3)].concat(),
                pol_floors(3),
            ),
        ];
        for (b, factors, floors) in cases {
            let fast = expand_monomial(&b, &factors, &floors, &KernelOpts::default()).unwrap();
            let o1 = brute(&b, &factors, &floors, 8);
            let o2 = brute(&b, &factors, &floors, 10);
            assert_eq!(o1, o2, "brute force not stabilized for {b:?}");
            assert_eq!(fast, o1, "mismatch for {b:?}");
        }
    }

    #[test]
    fn slack_does_not_change_retained_terms() {
        let factors = [q_denominators(3), t_denominators(3), qt_numerators_gap(3)].concat();
        let floors = pol_floors(3);
        let base = expand_monomial(&[1, 2, 1], &factors, &floors, &KernelOpts::default()).unwrap();
        for slack in [1, 2] {
            let opts = KernelOpts {
                slack,
                ..KernelOpts::default()
            };
            assert_eq!(
                expand_monomial(&[1, 2, 1], &factors, &floors, &opts).unwrap(),
                base
            );
        }
    }

    #[test]
    fn caps_guard_rejects_runaway() {
        let opts = KernelOpts {
            cap_limit: 3,
            ..KernelOpts::default()
        };
        let err = expand_monomial(&[9, 9], &q_denominators(2), &[0, 0], &opts);
        assert!(matches!(err, Err(Error::CapOverflow(_))));
    }

    #[test]
    fn constant_term_geometric() {
        // ⟨z^0⟩ (z1/z2)^k-series on z^(−1,1) picks the k = 1 term
        let p = XLaurent::monomial(vec![-1, 1], QTLaurent::one());
        let ct = constant_term(&p, &q_denominators(2), &KernelOpts::default()).unwrap();
        assert_eq!(ct, QTLaurent::q());
    }
}
