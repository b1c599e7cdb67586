//! Sparse Laurent polynomials in x_1..x_l over the q,t scalars.
//!
//! Exponent vectors are machine integers (checked arithmetic); coefficients
//! are `QTLaurent`. Terms live in a `BTreeMap` keyed by the exponent vector,
//! which fixes the canonical (lexicographic) term order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Permutation, QTLaurent};

#[derive(Clone, PartialEq, Eq)]
pub struct XLaurent {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, QTLaurent>,
}

impl XLaurent {
    pub fn zero(nvars: usize) -> Self {
        XLaurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], QTLaurent::one())
    }

    pub fn monomial(exps: Vec<i64>, coeff: QTLaurent) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        XLaurent { nvars, terms }
    }

    /// x_i (1-based).
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        Self::monomial(exps, QTLaurent::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &QTLaurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> QTLaurent {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Lexicographically greatest exponent vector.
    pub fn leading_exps(&self) -> Option<&Vec<i64>> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, coeff: &QTLaurent) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn scale(&self, c: &QTLaurent) -> XLaurent {
        if c.is_zero() {
            return XLaurent::zero(self.nvars);
        }
        let mut out = XLaurent::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &(v * c));
        }
        out
    }

    /// Apply a map to every coefficient (dropping zeros).
    pub fn map_coeffs(&self, f: impl Fn(&QTLaurent) -> QTLaurent) -> XLaurent {
        let mut out = XLaurent::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &f(v));
        }
        out
    }

    /// Substitute x_i → 1/x_i for all i and q → 1/q in the coefficients.
    pub fn substitute_inverse(&self) -> XLaurent {
        let mut out = XLaurent::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.iter().map(|&a| -a).collect(), &v.bar_q());
        }
        out
    }

    /// Permute variables: x_i → x_{σ(i)}.
    pub fn permute_vars(&self, sigma: &Permutation) -> XLaurent {
        assert_eq!(sigma.size(), self.nvars);
        let mut out = XLaurent::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(sigma.permute(e), v);
        }
        out
    }

    /// Reindex into a ring with more variables; existing variables keep their
    /// positions shifted by `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> XLaurent {
        assert!(offset + self.nvars <= nvars);
        let mut out = XLaurent::zero(nvars);
        for (e, v) in &self.terms {
            let mut exps = vec![0; nvars];
            exps[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(exps, v);
        }
        out
    }

    /// Multiply every term by the monomial x^shift.
    pub fn shift(&self, shift: &[i64]) -> XLaurent {
        assert_eq!(shift.len(), self.nvars);
        let mut out = XLaurent::zero(self.nvars);
        for (e, v) in &self.terms {
            let exps = e
                .iter()
                .zip(shift)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect();
            out.add_term(exps, v);
        }
        out
    }

    /// True when the polynomial is invariant under every adjacent transposition.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| {
            let s = Permutation::identity(self.nvars).swap_values(i);
            self.permute_vars(&s) == *self
        })
    }

    /// Drop coefficient terms whose t-exponent exceeds `tmax`.
    pub fn truncate_t(&self, tmax: i64) -> XLaurent {
        self.map_coeffs(|c| c.truncate_t(tmax))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, v)| serde_json::json!({"x": e, "coeff": v.to_json()}))
                .collect(),
        )
    }
}

impl Add for &XLaurent {
    type Output = XLaurent;
    fn add(self, rhs: &XLaurent) -> XLaurent {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), v);
        }
        out
    }
}

impl Sub for &XLaurent {
    type Output = XLaurent;
    fn sub(self, rhs: &XLaurent) -> XLaurent {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), &-v);
        }
        out
    }
}

impl Mul for &XLaurent {
    type Output = XLaurent;
    fn mul(self, rhs: &XLaurent) -> XLaurent {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = XLaurent::zero(self.nvars);
        for (e1, v1) in &self.terms {
            for (e2, v2) in &rhs.terms {
                let exps: Vec<i64> = e1
                    .iter()
                    .zip(e2)
                    .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                    .collect();
                out.add_term(exps, &(v1 * v2));
            }
        }
        out
    }
}

impl Neg for &XLaurent {
    type Output = XLaurent;
    fn neg(self) -> XLaurent {
        XLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), -v)).collect(),
        }
    }
}

impl fmt::Display for XLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, a)
                    }
                })
                .collect();
            if vars.is_empty() {
                if v.num_terms() <= 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "({v})")?;
                }
            } else if v.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "({v})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
