//! Laurent polynomials in q and t with arbitrary-precision integer
//! coefficients: the universal scalar of the crate.
//!
//! Terms are kept in a `BTreeMap` keyed by (q-exponent, t-exponent), so the
//! iteration order is the canonical lexicographic order used everywhere for
//! serialization. No zero coefficient is ever stored.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QTLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl QTLaurent {
    pub fn zero() -> Self {
        QTLaurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, 0, BigInt::from(n))
    }

    /// c·q^qe·t^te.
    pub fn monomial(qe: i64, te: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, te), c);
        }
        QTLaurent { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    pub fn coeff(&self, qe: i64, te: i64) -> BigInt {
        self.terms.get(&(qe, te)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, qe: i64, te: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((qe, te)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(qe, te));
        }
    }

    /// Multiply by c·q^qe·t^te in place.
    pub fn mul_term(&self, qe: i64, te: i64, c: &BigInt) -> QTLaurent {
        if c.is_zero() {
            return QTLaurent::zero();
        }
        QTLaurent {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| {
                    (
                        (
                            a.checked_add(qe).expect("q exponent overflow"),
                            b.checked_add(te).expect("t exponent overflow"),
                        ),
                        v * c,
                    )
                })
                .collect(),
        }
    }

    /// Substitute q → 1/q, t → 1/t.
    pub fn bar(&self) -> QTLaurent {
        QTLaurent {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((-a, -b), v.clone()))
                .collect(),
        }
    }

    /// Substitute q → 1/q only.
    pub fn bar_q(&self) -> QTLaurent {
        QTLaurent {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((-a, b), v.clone()))
                .collect(),
        }
    }

    /// Exchange q and t.
    pub fn swap_qt(&self) -> QTLaurent {
        QTLaurent {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((b, a), v.clone()))
                .collect(),
        }
    }

    /// Specialize q = 1 (result is a Laurent polynomial in t alone).
    pub fn subst_q_one(&self) -> QTLaurent {
        let mut out = QTLaurent::zero();
        for (&(_, b), v) in &self.terms {
            out.add_term(0, b, v);
        }
        out
    }

    /// Terms with t-exponent 0, i.e. the specialization t = 0 of a
    /// polynomial with no negative t powers.
    pub fn subst_t_zero(&self) -> QTLaurent {
        debug_assert!(self.terms.keys().all(|&(_, b)| b >= 0));
        QTLaurent {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, b), _)| b == 0)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Drop terms with t-exponent above `tmax`.
    pub fn truncate_t(&self, tmax: i64) -> QTLaurent {
        QTLaurent {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, b), _)| b <= tmax)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Coefficient of t^k, as a polynomial in q.
    pub fn t_coefficient(&self, k: i64) -> QTLaurent {
        QTLaurent {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, b), _)| b == k)
                .map(|(&(a, _), v)| ((a, 0), v.clone()))
                .collect(),
        }
    }

    pub fn max_t_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Evaluate at q = t = 1.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|v| v.is_negative())
    }

    /// Canonically ordered JSON: `[{"q":a,"t":b,"c":"coeff"}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&(a, b), v)| serde_json::json!({"q": a, "t": b, "c": v.to_string()}))
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected array".into()))?;
        let mut out = QTLaurent::zero();
        for item in arr {
            let qe = item["q"]
                .as_i64()
                .ok_or_else(|| Error::Parse("bad q".into()))?;
            let te = item["t"]
                .as_i64()
                .ok_or_else(|| Error::Parse("bad t".into()))?;
            let c: BigInt = item["c"]
                .as_str()
                .ok_or_else(|| Error::Parse("bad c".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad coefficient".into()))?;
            out.add_term(qe, te, &c);
        }
        Ok(out)
    }
}

impl Add for &QTLaurent {
    type Output = QTLaurent;
    fn add(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = self.clone();
        for (&(a, b), v) in &rhs.terms {
            out.add_term(a, b, v);
        }
        out
    }
}

impl Sub for &QTLaurent {
    type Output = QTLaurent;
    fn sub(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = self.clone();
        for (&(a, b), v) in &rhs.terms {
            out.add_term(a, b, &-v);
        }
        out
    }
}

impl Mul for &QTLaurent {
    type Output = QTLaurent;
    fn mul(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = QTLaurent::zero();
        for (&(a1, b1), v1) in &self.terms {
            for (&(a2, b2), v2) in &rhs.terms {
                out.add_term(
                    a1.checked_add(a2).expect("q exponent overflow"),
                    b1.checked_add(b2).expect("t exponent overflow"),
                    &(v1 * v2),
                );
            }
        }
        out
    }
}

impl Neg for &QTLaurent {
    type Output = QTLaurent;
    fn neg(self) -> QTLaurent {
        QTLaurent {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl fmt::Display for QTLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), v) in &self.terms {
            let mag = v.abs();
            if first {
                if v.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if v.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                parts.push(mag.to_string());
            }
            match a {
                0 => {}
                1 => parts.push("q".into()),
                _ => parts.push(format!("q^{a}")),
            }
            match b {
                0 => {}
                1 => parts.push("t".into()),
                _ => parts.push(format!("t^{b}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QTLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
