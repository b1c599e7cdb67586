//! GL_l character bookkeeping: partitions, Weyl straightening of monomials
//! into signed irreducible characters, Schur expansions of symmetric
//! polynomials, the omega involution, and Hall-Littlewood symmetrization.
//!
//! A virtual character is represented by its Schur expansion: a finite map
//! partition → q,t-scalar. Internally, straightening produces general
//! dominant weights (possibly with negative entries); the polynomial-part
//! filter keeps only those that are partitions.

use num_bigint::BigInt;
use num_traits::One;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::algebra::{QTLaurent, XLaurent};
use crate::kernel::{self, KernelOpts};
use crate::{Error, Result};

// ---- Partitions ----

/// Integer partition: weakly decreasing nonnegative parts, trailing zeros
/// normalized away.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p < 0) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Single row (n); the empty partition when n = 0.
    pub fn row(n: i64) -> Self {
        Partition::new(vec![n]).unwrap()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as i64)
            .collect();
        Partition { parts }
    }

    /// Dominance order: self ≤ other when all prefix sums compare.
    /// Only meaningful between partitions of equal size.
    pub fn dominance_le(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let n = self.parts.len().max(other.parts.len());
        let mut a = 0i64;
        let mut b = 0i64;
        for k in 0..n {
            a += self.part(k);
            b += other.part(k);
            if a > b {
                return false;
            }
        }
        true
    }

    /// All partitions of n into at most `max_len` parts.
    pub fn all(n: i64, max_len: usize) -> Vec<Partition> {
        fn rec(
            rem: i64,
            max_part: i64,
            slots: usize,
            cur: &mut Vec<i64>,
            out: &mut Vec<Partition>,
        ) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- Weights ----

/// ρ = (l−1, l−2, ..., 1, 0).
pub fn rho(l: usize) -> Vec<i64> {
    (0..l).map(|i| (l - 1 - i) as i64).collect()
}

pub fn is_dominant(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1])
}

/// Weyl straightening of a monomial exponent: None when μ+ρ is not regular,
/// otherwise the sign of the sorting permutation and the dominant weight λ
/// with w(μ+ρ) = λ+ρ. λ may have negative entries.
pub fn straighten(mu: &[i64]) -> Option<(i64, Vec<i64>)> {
    let l = mu.len();
    let rho = rho(l);
    let mut v: Vec<i64> = mu.iter().zip(&rho).map(|(&a, &b)| a + b).collect();
    let mut sign = 1i64;
    for i in 0..l {
        for j in i + 1..l {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => sign = -sign,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    v.sort_unstable_by(|a, b| b.cmp(a));
    let lam = v.iter().zip(&rho).map(|(&a, &b)| a - b).collect();
    Some((sign, lam))
}

/// Extended order on weights of equal degree: μ ≤ λ when the dominant
/// rearrangement of μ is dominance-below that of λ, or they share an orbit
/// and every sorted prefix of μ weakly dominates the corresponding prefix
/// of λ. Dominant weights are minimal in their orbits.
pub fn weight_le(mu: &[i64], lam: &[i64]) -> bool {
    assert_eq!(mu.len(), lam.len());
    if mu.iter().sum::<i64>() != lam.iter().sum::<i64>() {
        return false;
    }
    let sort_desc = |v: &[i64]| {
        let mut s = v.to_vec();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    };
    let mu_plus = sort_desc(mu);
    let lam_plus = sort_desc(lam);
    if mu_plus != lam_plus {
        // dominance on the dominant rearrangements
        let mut a = 0i64;
        let mut b = 0i64;
        for k in 0..mu.len() {
            a += mu_plus[k];
            b += lam_plus[k];
            if a > b {
                return false;
            }
        }
        return true;
    }
    for j in 1..=mu.len() {
        let pa = sort_desc(&mu[..j]);
        let pb = sort_desc(&lam[..j]);
        if pa.iter().zip(&pb).any(|(x, y)| x < y) {
            return false;
        }
    }
    true
}

// ---- Schur expansions ----

/// A virtual GL_l character as a finite sum Σ c_λ s_λ(x_1..x_l).
#[derive(Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    nvars: usize,
    coeffs: BTreeMap<Partition, QTLaurent>,
}

impl SchurExpansion {
    pub fn zero(nvars: usize) -> Self {
        SchurExpansion {
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut e = Self::zero(nvars);
        e.add_term(Partition::empty(), &QTLaurent::one());
        e
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &QTLaurent)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> QTLaurent {
        self.coeffs.get(lam).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lam: Partition, c: &QTLaurent) {
        if c.is_zero() {
            return;
        }
        debug_assert!(lam.len() <= self.nvars || self.nvars == 0);
        match self.coeffs.entry(lam) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (lam, c) in &other.coeffs {
            out.add_term(lam.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (lam, c) in &other.coeffs {
            out.add_term(lam.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &QTLaurent) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.nvars);
        for (lam, v) in &self.coeffs {
            out.add_term(lam.clone(), &(v * c));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTLaurent) -> QTLaurent) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.nvars);
        for (lam, v) in &self.coeffs {
            out.add_term(lam.clone(), &f(v));
        }
        out
    }

    /// Keep only partitions with at most `len` parts.
    pub fn restrict_length(&self, len: usize) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.nvars.min(len.max(1)));
        for (lam, v) in &self.coeffs {
            if lam.len() <= len {
                out.add_term(lam.clone(), v);
            }
        }
        out
    }

    /// Evaluate as a polynomial in x_1..x_nvars.
    pub fn evaluate(&self) -> XLaurent {
        let mut out = XLaurent::zero(self.nvars);
        for (lam, c) in &self.coeffs {
            out = &out + &schur_eval(lam, self.nvars).scale(c);
        }
        out
    }

    /// JSON: array of {partition, coeff} sorted by partition in reverse-lex
    /// (lexicographically descending) order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .rev()
                .map(|(lam, c)| serde_json::json!({"partition": lam.parts(), "coeff": c.to_json()}))
                .collect(),
        )
    }

    pub fn from_json(nvars: usize, v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected array".into()))?;
        let mut out = SchurExpansion::zero(nvars);
        for item in arr {
            let parts: Vec<i64> = item["partition"]
                .as_array()
                .ok_or_else(|| Error::Parse("bad partition".into()))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| Error::Parse("bad part".into())))
                .collect::<Result<_>>()?;
            out.add_term(
                Partition::new(parts)?,
                &QTLaurent::from_json(&item["coeff"])?,
            );
        }
        Ok(out)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "s{lam}")?;
            } else {
                write!(f, "({c})*s{lam}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- Schur polynomial evaluation ----

type SchurCache = Mutex<HashMap<(Vec<i64>, usize), XLaurent>>;

fn schur_cache() -> &'static SchurCache {
    static CACHE: OnceLock<SchurCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// s_λ(x_1..x_nvars) by the branching rule over horizontal strips.
pub fn schur_eval(lam: &Partition, nvars: usize) -> XLaurent {
    if lam.is_empty() {
        return XLaurent::one(nvars);
    }
    if lam.len() > nvars {
        return XLaurent::zero(nvars);
    }
    let key = (lam.parts().to_vec(), nvars);
    if let Some(hit) = schur_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let mut out = XLaurent::zero(nvars);
    for (mu, strip) in horizontal_strips(lam) {
        let inner = schur_eval(&mu, nvars - 1);
        for (e, c) in inner.terms() {
            let mut exps = e.clone();
            exps.push(strip);
            out.add_term(exps, c);
        }
    }
    schur_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// All μ ⊆ λ with λ/μ a horizontal strip, with the strip size.
fn horizontal_strips(lam: &Partition) -> Vec<(Partition, i64)> {
    fn rec(parts: &[i64], i: usize, mu: &mut Vec<i64>, out: &mut Vec<(Partition, i64)>) {
        if i == parts.len() {
            let p = Partition::new(mu.clone()).unwrap();
            let strip: i64 = parts.iter().sum::<i64>() - p.size();
            out.push((p, strip));
            return;
        }
        let hi = parts[i];
        let lo = if i + 1 < parts.len() { parts[i + 1] } else { 0 };
        for v in lo..=hi {
            mu[i] = v;
            rec(parts, i + 1, mu, out);
        }
        mu[i] = 0;
    }
    let mut out = Vec::new();
    let mut mu = vec![0i64; lam.len()];
    rec(lam.parts(), 0, &mut mu, &mut out);
    out
}

/// χ_λ for a dominant weight λ (entries may be negative): the Schur
/// polynomial of the shifted partition times (x_1···x_l)^min.
pub fn chi_eval(lam: &[i64], nvars: usize) -> XLaurent {
    assert!(is_dominant(lam));
    assert_eq!(lam.len(), nvars);
    let shift = lam.last().copied().unwrap_or(0);
    let parts: Vec<i64> = lam.iter().map(|&a| a - shift).collect();
    let s = schur_eval(&Partition::new(parts).unwrap(), nvars);
    s.shift(&vec![shift; nvars])
}

/// Complete homogeneous polynomial h_k(x_1..x_nvars); zero for k < 0.
pub fn complete_homogeneous(k: i64, nvars: usize) -> XLaurent {
    if k < 0 {
        return XLaurent::zero(nvars);
    }
    schur_eval(&Partition::row(k), nvars)
}

// ---- Weyl symmetrization and Schur expansion ----

/// Straighten every monomial; keep only polynomial weights (partitions).
pub fn weyl_sigma_pol(f: &XLaurent) -> SchurExpansion {
    let mut out = SchurExpansion::zero(f.nvars());
    for (e, c) in f.terms() {
        if let Some((sign, lam)) = straighten(e) {
            if lam.last().is_none_or(|&x| x >= 0) {
                let p = Partition::new(lam).unwrap();
                let signed = if sign < 0 { -c } else { c.clone() };
                out.add_term(p, &signed);
            }
        }
    }
    out
}

/// Straighten every monomial keeping all dominant weights, including those
/// with negative entries. Keyed by the dominant weight vector.
pub fn straighten_expand(f: &XLaurent) -> BTreeMap<Vec<i64>, QTLaurent> {
    let mut out: BTreeMap<Vec<i64>, QTLaurent> = BTreeMap::new();
    for (e, c) in f.terms() {
        if let Some((sign, lam)) = straighten(e) {
            let signed = if sign < 0 { -c } else { c.clone() };
            let entry = out.entry(lam).or_default();
            *entry = &*entry + &signed;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Expand a symmetric polynomial with nonnegative exponents in the Schur
/// basis by repeated leading-monomial subtraction.
pub fn schur_expand(sym: &XLaurent) -> Result<SchurExpansion> {
    let nvars = sym.nvars();
    let mut rem = sym.clone();
    let mut out = SchurExpansion::zero(nvars);
    while !rem.is_zero() {
        let lead = rem.leading_exps().unwrap().clone();
        if lead.iter().any(|&a| a < 0) || !is_dominant(&lead) {
            return Err(Error::NotSymmetric(lead));
        }
        let c = rem.coeff(&lead);
        let lam = Partition::new(lead).unwrap();
        rem = &rem - &schur_eval(&lam, nvars).scale(&c);
        out.add_term(lam, &c);
    }
    Ok(out)
}

/// Hall-Littlewood symmetrization, polynomial part: straighten the product
/// of `f` with the expanded geometric kernel Π 1/(1 − q x_i/x_j).
pub fn hall_littlewood_pol(f: &XLaurent) -> Result<SchurExpansion> {
    let l = f.nvars();
    let factors = kernel::q_denominators(l);
    let expanded = kernel::expand(f, &factors, &kernel::pol_floors(l), &KernelOpts::default())?;
    Ok(weyl_sigma_pol(&expanded))
}

/// ω on a Schur expansion: transpose every indexing partition.
pub fn omega(expansion: &SchurExpansion, target_nvars: usize) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::zero(target_nvars);
    for (lam, c) in expansion.terms() {
        let t = lam.transpose();
        if t.len() > target_nvars {
            return Err(Error::TooFewVariables {
                needed: t.len(),
                have: target_nvars,
            });
        }
        out.add_term(t, c);
    }
    Ok(out)
}

/// Kostka number K_{λμ} = #SSYT of shape λ and content μ, via iterated
/// horizontal strips; μ is any composition with nonnegative entries.
pub fn kostka(lam: &Partition, mu: &[i64]) -> BigInt {
    fn rec(lam: &Partition, mu: &[i64]) -> BigInt {
        if mu.is_empty() {
            return if lam.is_empty() {
                BigInt::one()
            } else {
                BigInt::ZERO
            };
        }
        let (rest, last) = mu.split_at(mu.len() - 1);
        let mut n = BigInt::ZERO;
        for (inner, strip) in horizontal_strips(lam) {
            if strip == last[0] {
                n += rec(&inner, rest);
            }
        }
        n
    }
    if lam.size() != mu.iter().sum::<i64>() || mu.iter().any(|&m| m < 0) {
        return BigInt::ZERO;
    }
    rec(lam, mu)
}

/// Schur expansion of h_{μ_1}···h_{μ_k} via Kostka numbers.
pub fn h_product_schur(mu: &[i64], nvars: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero(nvars);
    if mu.iter().any(|&m| m < 0) {
        return out;
    }
    let n: i64 = mu.iter().sum();
    if n == 0 {
        return SchurExpansion::one(nvars);
    }
    for lam in Partition::all(n, nvars) {
        let k = kostka(&lam, mu);
        out.add_term(lam, &QTLaurent::monomial(0, 0, k));
    }
    out
}
