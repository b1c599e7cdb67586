//! Identity checkers that compute both sides through independent code paths
//! and report exact agreement.
//!
//! Each checker touches disjoint machinery on its two sides: the series side
//! goes through kernel expansion and straightening, the combinatorial side
//! through path enumeration and tableau generating functions. Nothing is
//! shared beyond scalar arithmetic, so agreement certifies both.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::QTLaurent;
use crate::catalan::{self, hb_factors};
use crate::characters::{h_product_schur, schur_expand, straighten_expand, SchurExpansion};
use crate::kernel::{self, KernelOpts};
use crate::llt::{llt_poly, sigma_triples, RowTuple};
use crate::paths::{self, ExtendedPathSpec, Line};
use crate::Result;

/// Outcome of one identity check: both sides and their exact difference.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub instance: String,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub equal: bool,
    pub discrepancy: Option<ReportValue>,
}

#[derive(Clone, Debug)]
pub enum ReportValue {
    Schur(SchurExpansion),
    Scalar(QTLaurent),
    Text(String),
}

impl ReportValue {
    fn json(&self) -> serde_json::Value {
        match self {
            ReportValue::Schur(e) => e.to_json(),
            ReportValue::Scalar(c) => c.to_json(),
            ReportValue::Text(s) => serde_json::Value::String(s.clone()),
        }
    }
}

impl fmt::Display for ReportValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportValue::Schur(e) => write!(f, "{e}"),
            ReportValue::Scalar(c) => write!(f, "{c}"),
            ReportValue::Text(s) => write!(f, "{s}"),
        }
    }
}

impl VerificationReport {
    fn schur(name: &str, instance: String, lhs: SchurExpansion, rhs: SchurExpansion) -> Self {
        let diff = lhs.sub(&rhs);
        VerificationReport {
            name: name.to_string(),
            instance,
            equal: diff.is_zero(),
            discrepancy: (!diff.is_zero()).then_some(ReportValue::Schur(diff)),
            lhs: ReportValue::Schur(lhs),
            rhs: ReportValue::Schur(rhs),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "name": self.name,
            "instance": self.instance,
            "equal": self.equal,
            "lhs": self.lhs.json(),
            "rhs": self.rhs.json(),
        });
        if let Some(d) = &self.discrepancy {
            obj["discrepancy"] = d.json();
        }
        obj
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} [{}]",
            if self.equal { "EQUAL" } else { "MISMATCH" },
            self.name,
            self.instance
        )?;
        write!(f, "  lhs = {}", self.lhs)?;
        write!(f, "\n  rhs = {}", self.rhs)?;
        if let Some(d) = &self.discrepancy {
            write!(f, "\n  difference = {d}")?;
        }
        Ok(())
    }
}

// ---- The path identity ----

/// Series side: the polynomial part for b (with b_1 extended by u).
/// Combinatorial side: Σ over paths of t^{area} q^{triples} times the tuple
/// LLT polynomial at q → 1/q, rows extended by u on the y-axis.
pub fn check_main(line: &Line, ext: &ExtendedPathSpec) -> Result<VerificationReport> {
    let l = line.l();
    let mut b = paths::highest_path(line).south_runs().to_vec();
    b[0] += ext.u;
    let lhs = catalan::hb_pol(&b)?;

    let mut rhs = SchurExpansion::zero(l);
    for path in paths::enumerate_paths(line) {
        let (a, _) = paths::area(&path, line);
        let data = paths::llt_data_extended(&path, line, ext);
        let rows = RowTuple::new(data.alpha.clone(), data.beta.clone())?;
        let (h, _) = sigma_triples(&rows, &data.sigma);
        let g = llt_poly(&rows.permuted(&data.sigma).to_skew_tuple(), l);
        let term = schur_expand(&g)?.map_coeffs(|c| c.bar_q().mul_term(h, a, &BigInt::one()));
        rhs = rhs.add(&term);
    }

    Ok(VerificationReport::schur(
        "main",
        format!("line {line}, u = {}", ext.u),
        lhs,
        rhs,
    ))
}

// ---- The stable identity ----

/// Window comparison of the series for (b'_1+u, b'_2, ..., b'_l − v)
/// against Σ_a t^{|a|} · (LLT series coefficients), for dominant weights λ
/// in the window and t-degrees ≤ tmax.
pub fn check_stable(
    line: &Line,
    u: i64,
    v: i64,
    tmax: i64,
    window: &[Vec<i64>],
) -> Result<VerificationReport> {
    let l = line.l();
    let mut b = line.untruncated_runs(l);
    b[0] += u;
    b[l - 1] -= v;

    // left side: kernel expansion with floors wide enough for the window,
    // truncated in t, then straightened without the polynomial filter
    let min_last = window
        .iter()
        .map(|lam| *lam.last().unwrap())
        .min()
        .unwrap_or(0)
        .min(0);
    let floors: Vec<i64> = (0..l)
        .map(|j| min_last + j as i64 - (l as i64 - 1))
        .collect();
    let opts = KernelOpts {
        t_cap: Some(tmax),
        ..KernelOpts::default()
    };
    let expanded = kernel::expand_monomial(&b, &hb_factors(l), &floors, &opts)?;
    let lhs_map = straighten_expand(&expanded);

    // right side: Σ over a ∈ N^{l−1}, |a| ≤ tmax
    let runs = paths::highest_path(line);
    let runs = runs.south_runs();
    let sigma = line.gap_permutation();
    let mut rhs_map: BTreeMap<Vec<i64>, QTLaurent> = BTreeMap::new();
    for a in crate::hecke::compositions_up_to(l - 1, tmax) {
        let total: i64 = a.iter().sum();
        // β = reversed runs + (−v, a_{l−1}, ..., a_1), α = (a_{l−1}, ..., a_1, −u)
        let mut beta: Vec<i64> = runs.iter().rev().copied().collect();
        beta[0] = line.untruncated_runs(l)[l - 1] - v;
        let mut alpha: Vec<i64> = Vec::with_capacity(l);
        for k in 0..l - 1 {
            let ak = a[l - 2 - k];
            beta[k + 1] += ak;
            alpha.push(ak);
        }
        alpha.push(-u);
        for lam in window {
            let c = catalan::llt_series_coeff(&sigma, &beta, &alpha, lam)?;
            let c = c.mul_term(0, total, &BigInt::one());
            if !c.is_zero() {
                let entry = rhs_map.entry(lam.clone()).or_default();
                *entry = &*entry + &c;
            }
        }
    }
    rhs_map.retain(|_, c| !c.is_zero());

    // compare windowed coefficients
    let mut equal = true;
    let mut diffs = Vec::new();
    for lam in window {
        let lhs_c = lhs_map
            .get(lam)
            .cloned()
            .unwrap_or_default()
            .truncate_t(tmax);
        let rhs_c = rhs_map.get(lam).cloned().unwrap_or_default();
        if lhs_c != rhs_c {
            equal = false;
            diffs.push(format!("χ{lam:?}: {}", &lhs_c - &rhs_c));
        }
    }
    let lhs_text = window
        .iter()
        .map(|lam| {
            format!(
                "χ{lam:?}: {}",
                lhs_map
                    .get(lam)
                    .cloned()
                    .unwrap_or_default()
                    .truncate_t(tmax)
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    let rhs_text = window
        .iter()
        .map(|lam| {
            format!(
                "χ{lam:?}: {}",
                rhs_map.get(lam).cloned().unwrap_or_default()
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    Ok(VerificationReport {
        name: "stable".into(),
        instance: format!(
            "line {line}, u = {u}, v = {v}, tmax = {tmax}, window of {}",
            window.len()
        ),
        lhs: ReportValue::Text(lhs_text),
        rhs: ReportValue::Text(rhs_text),
        equal,
        discrepancy: (!equal).then_some(ReportValue::Text(diffs.join("; "))),
    })
}

/// Dominant window {λ : Σλ = degree, |λ_i| ≤ bound} for `check_stable`.
pub fn dominant_window(l: usize, degree: i64, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::new();
    fn rec(l: usize, degree: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == l {
            if cur.iter().sum::<i64>() == degree {
                out.push(cur.clone());
            }
            return;
        }
        let hi = cur.last().copied().unwrap_or(bound);
        for v in (-bound..=hi).rev() {
            cur.push(v);
            rec(l, degree, bound, cur, out);
            cur.pop();
        }
    }
    rec(l, degree, bound, &mut cur, &mut out);
    out
}

// ---- The q = 1 specialization ----

/// At q = 1: the series for b collapses to Σ_paths t^{area} h_{runs}.
pub fn check_q1(b: &[i64]) -> Result<VerificationReport> {
    let l = b.len().max(1);
    let lhs = catalan::hb_pol(b)?.map_coeffs(|c| c.subst_q_one());

    let mut rhs = SchurExpansion::zero(if b.is_empty() { 0 } else { l });
    for a in paths::area_vectors(b) {
        let runs = paths::runs_from_area(b, &a);
        let total: i64 = a.iter().sum();
        let term =
            h_product_schur(&runs, b.len()).scale(&QTLaurent::monomial(0, total, BigInt::one()));
        rhs = rhs.add(&term);
    }

    Ok(VerificationReport::schur(
        "q1",
        format!("b = {b:?}"),
        lhs,
        rhs,
    ))
}

// ---- Positivity scan ----

/// Exact rational feasibility of a small linear system by Fourier-Motzkin
/// elimination. Constraints are Σ coeffs·x ≤ rhs, strict when flagged.
struct LinearSystem {
    nvars: usize,
    constraints: Vec<(Vec<BigRational>, BigRational, bool)>,
}

impl LinearSystem {
    fn new(nvars: usize) -> Self {
        LinearSystem {
            nvars,
            constraints: Vec::new(),
        }
    }

    fn le(&mut self, coeffs: Vec<i64>, rhs: i64) {
        self.push(coeffs, rhs, false);
    }

    fn lt(&mut self, coeffs: Vec<i64>, rhs: i64) {
        self.push(coeffs, rhs, true);
    }

    fn push(&mut self, coeffs: Vec<i64>, rhs: i64, strict: bool) {
        assert_eq!(coeffs.len(), self.nvars);
        self.constraints.push((
            coeffs
                .into_iter()
                .map(|x| BigRational::from_integer(x.into()))
                .collect(),
            BigRational::from_integer(rhs.into()),
            strict,
        ));
    }

    fn feasible(mut self) -> bool {
        for var in (0..self.nvars).rev() {
            let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
            for (c, r, s) in self.constraints {
                match c[var].cmp(&BigRational::zero()) {
                    std::cmp::Ordering::Greater => pos.push((c, r, s)),
                    std::cmp::Ordering::Less => neg.push((c, r, s)),
                    std::cmp::Ordering::Equal => rest.push((c, r, s)),
                }
            }
            for (pc, pr, ps) in &pos {
                for (nc, nr, ns) in &neg {
                    // combine a·x ≤ pr (a > 0) with b·x ≤ nr (b < 0)
                    let a = &pc[var];
                    let b = -&nc[var];
                    let coeffs: Vec<BigRational> =
                        (0..self.nvars).map(|k| &pc[k] * &b + &nc[k] * a).collect();
                    let rhs = pr * &b + nr * a;
                    rest.push((coeffs, rhs, *ps || *ns));
                }
            }
            self.constraints = rest;
        }
        // only constant constraints remain: 0 ≤ rhs (or 0 < rhs)
        self.constraints.iter().all(|(_, rhs, strict)| {
            if *strict {
                rhs.is_positive()
            } else {
                !rhs.is_negative()
            }
        })
    }
}

/// Whether b arises as the floor-difference vector of a weakly decreasing
/// convex sequence s_0 ≥ ... ≥ s_l = 0: exact feasibility of
/// S_i ≤ s_i < S_i + 1 with weakly decreasing differences, where
/// S_i = b_{i+1} + ... + b_l.
pub fn convex_realizable(b: &[i64]) -> bool {
    let l = b.len();
    if b.iter().any(|&x| x < 0) {
        return false;
    }
    if l == 0 {
        return true;
    }
    // variables s_0..s_{l-1}; s_l = 0
    let mut sys = LinearSystem::new(l);
    let mut suffix = vec![0i64; l + 1];
    for i in (0..l).rev() {
        suffix[i] = suffix[i + 1] + b[i];
    }
    for i in 0..l {
        let mut c = vec![0i64; l];
        c[i] = -1;
        sys.le(c.clone(), -suffix[i]); // s_i ≥ S_i
        let mut c = vec![0i64; l];
        c[i] = 1;
        sys.lt(c, suffix[i] + 1); // s_i < S_i + 1
    }
    for i in 1..l {
        // s_{i−1} − 2 s_i + s_{i+1} ≥ 0, with s_l = 0
        let mut c = vec![0i64; l];
        c[i - 1] = -1;
        c[i] = 2;
        if i + 1 < l {
            c[i + 1] = -1;
        }
        sys.le(c, 0);
    }
    sys.feasible()
}

/// One finding of the positivity scan.
#[derive(Clone, Debug)]
pub struct PositivityReport {
    pub b: Vec<i64>,
    pub convex: bool,
    /// Schur terms carrying some negative coefficient.
    pub negative_terms: Vec<(Vec<i64>, QTLaurent)>,
}

impl PositivityReport {
    pub fn positive(&self) -> bool {
        self.negative_terms.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "b": self.b,
            "convex": self.convex,
            "positive": self.positive(),
            "negative_terms": self.negative_terms.iter().map(|(lam, c)| {
                serde_json::json!({"partition": lam, "coeff": c.to_json()})
            }).collect::<Vec<_>>(),
        })
    }
}

/// Scan every b with at most `max_cols` columns and |b| ≤ `max_size` for
/// negative Schur coefficients in the series polynomial part. Convex b are
/// the conjecture's hypothesis; non-convex b are scanned for contrast and
/// their findings are informational.
pub fn scan_positivity(max_cols: usize, max_size: i64) -> Result<Vec<PositivityReport>> {
    let mut out = Vec::new();
    for l in 1..=max_cols {
        for b in crate::hecke::compositions_up_to(l, max_size) {
            let expansion = catalan::hb_pol(&b)?;
            let negative_terms: Vec<(Vec<i64>, QTLaurent)> = expansion
                .terms()
                .filter(|(_, c)| c.has_negative_coeff())
                .map(|(lam, c)| (lam.parts().to_vec(), c.clone()))
                .collect();
            out.push(PositivityReport {
                convex: convex_realizable(&b),
                b,
                negative_terms,
            });
        }
    }
    Ok(out)
}
