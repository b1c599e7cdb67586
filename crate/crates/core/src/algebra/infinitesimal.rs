//! First-order infinitesimals: numbers of the form a + b·ε with a, b exact
//! rationals and ε a positive infinitesimal.
//!
//! The total order is lexicographic on (standard part, ε coefficient), and
//! products truncate ε² to zero. Every quantity this crate builds from an
//! infinitesimal is affine in the perturbation, so first order is exact; the
//! truncation never discards information that a later comparison could need.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::{Error, Result};

/// a + b·ε with ε an infinitesimal, ordered lexicographically on (a, b).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Infinitesimal {
    std: BigRational,
    eps: BigRational,
}

impl Infinitesimal {
    pub fn new(std: BigRational, eps: BigRational) -> Self {
        Infinitesimal { std, eps }
    }

    /// Exact rational n/d, no ε part.
    pub fn rational(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Infinitesimal {
            std: BigRational::new(BigInt::from(n), BigInt::from(d)),
            eps: BigRational::zero(),
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(n, 1)
    }

    /// n/d + sign·ε.
    pub fn rational_eps(n: i64, d: i64, sign: i64) -> Self {
        Infinitesimal {
            std: BigRational::new(BigInt::from(n), BigInt::from(d)),
            eps: BigRational::from(BigInt::from(sign)),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn std(&self) -> &BigRational {
        &self.std
    }

    pub fn eps(&self) -> &BigRational {
        &self.eps
    }

    pub fn is_zero(&self) -> bool {
        self.std.is_zero() && self.eps.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    /// Greatest integer ≤ self in the ordered field. For a standard part that
    /// is itself an integer, the sign of the ε part decides.
    pub fn floor(&self) -> i64 {
        let fl = self.std.floor().to_integer();
        let n = if self.std.is_integer() && self.eps.is_negative() {
            fl - BigInt::one()
        } else {
            fl
        };
        n.to_i64().expect("floor exceeds machine range")
    }

    /// Fractional part self − floor(self); lies in [0, 1) of the ordered field.
    pub fn frac(&self) -> Infinitesimal {
        self - &Infinitesimal::integer(self.floor())
    }

    pub fn is_integer(&self) -> bool {
        self.std.is_integer() && self.eps.is_zero()
    }
}

impl PartialOrd for Infinitesimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Infinitesimal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.std
            .cmp(&other.std)
            .then_with(|| self.eps.cmp(&other.eps))
    }
}

/// Comparison in the ordered field; ε > 0 by definition.
pub fn inf_compare(a: &Infinitesimal, b: &Infinitesimal) -> Ordering {
    a.cmp(b)
}

macro_rules! binop {
    ($trait:ident, $fn:ident, $op:tt) => {
        impl $trait for &Infinitesimal {
            type Output = Infinitesimal;
            fn $fn(self, rhs: &Infinitesimal) -> Infinitesimal {
                Infinitesimal {
                    std: &self.std $op &rhs.std,
                    eps: &self.eps $op &rhs.eps,
                }
            }
        }
        impl $trait for Infinitesimal {
            type Output = Infinitesimal;
            fn $fn(self, rhs: Infinitesimal) -> Infinitesimal {
                (&self).$fn(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl Mul for &Infinitesimal {
    type Output = Infinitesimal;
    // (a + bε)(c + dε) = ac + (ad + bc)ε, ε² truncated.
    fn mul(self, rhs: &Infinitesimal) -> Infinitesimal {
        Infinitesimal {
            std: &self.std * &rhs.std,
            eps: &self.std * &rhs.eps + &self.eps * &rhs.std,
        }
    }
}

impl Mul for Infinitesimal {
    type Output = Infinitesimal;
    fn mul(self, rhs: Infinitesimal) -> Infinitesimal {
        (&self) * (&rhs)
    }
}

impl Div for &Infinitesimal {
    type Output = Infinitesimal;
    // (a + bε)/(c + dε) = a/c + ((bc − ad)/c²)ε; requires c ≠ 0.
    fn div(self, rhs: &Infinitesimal) -> Infinitesimal {
        assert!(!rhs.std.is_zero(), "division by infinitesimal");
        let std = &self.std / &rhs.std;
        let eps = (&self.eps * &rhs.std - &self.std * &rhs.eps) / (&rhs.std * &rhs.std);
        Infinitesimal { std, eps }
    }
}

impl Div for Infinitesimal {
    type Output = Infinitesimal;
    fn div(self, rhs: Infinitesimal) -> Infinitesimal {
        (&self) / (&rhs)
    }
}

impl Neg for &Infinitesimal {
    type Output = Infinitesimal;
    fn neg(self) -> Infinitesimal {
        Infinitesimal {
            std: -&self.std,
            eps: -&self.eps,
        }
    }
}

impl Neg for Infinitesimal {
    type Output = Infinitesimal;
    fn neg(self) -> Infinitesimal {
        -&self
    }
}

impl fmt::Display for Infinitesimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let std = if self.std.is_integer() {
            self.std.numer().to_string()
        } else {
            format!("{}/{}", self.std.numer(), self.std.denom())
        };
        if self.eps.is_zero() {
            write!(f, "{std}")
        } else if self.eps == BigRational::one() {
            write!(f, "{std}+e")
        } else if self.eps == -BigRational::one() {
            write!(f, "{std}-e")
        } else {
            write!(f, "{std}+({})e", self.eps)
        }
    }
}

impl fmt::Debug for Infinitesimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Text syntax: `a`, `a/b`, `a/b+e`, `a/b-e`.
impl FromStr for Infinitesimal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, eps) = if let Some(b) = s.strip_suffix("+e") {
            (b, BigRational::one())
        } else if let Some(b) = s.strip_suffix("-e") {
            (b, -BigRational::one())
        } else {
            (s, BigRational::zero())
        };
        let std = match body.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad(s))?;
                let d: BigInt = d.parse().map_err(|_| bad(s))?;
                if d.is_zero() {
                    return Err(bad(s));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from(body.parse::<BigInt>().map_err(|_| bad(s))?),
        };
        Ok(Infinitesimal { std, eps })
    }
}

fn bad(s: &str) -> Error {
    Error::Parse(format!(
        "invalid infinitesimal `{s}` (expected a, a/b, a/b+e, a/b-e)"
    ))
}

impl Infinitesimal {
    /// gcd-reduced form is maintained by `BigRational`; expose for checks.
    pub fn is_reduced(&self) -> bool {
        self.std.numer().gcd(self.std.denom()).is_one() || self.std.numer().is_zero()
    }
}
