//! Lattice paths weakly below a line with infinitesimally perturbed slope.
//!
//! A line y + p·x = s with s, r = s/p > 0 determines the set of south-east
//! paths from (0, ⌊s⌋) to (⌊r⌋, 0) lying weakly below it. Paths are stored as
//! their south-run vectors: entry i is the number of south steps on x = i−1.
//! Every statistic here is a function of the runs and the line: the column
//! areas against the highest path δ, the balanced-hook count dinv_p, and the
//! row data (α, β, σ) that attaches an LLT polynomial to the path.

use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{inf_compare, Infinitesimal, Permutation};
use crate::{Error, Result};

/// Extra south steps prepended on the y-axis above (0, ⌊s⌋).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtendedPathSpec {
    pub u: i64,
}

impl ExtendedPathSpec {
    pub fn none() -> Self {
        ExtendedPathSpec { u: 0 }
    }

    pub fn new(u: i64) -> Result<Self> {
        if u < 0 {
            return Err(Error::Invalid("extension must be nonnegative".into()));
        }
        Ok(ExtendedPathSpec { u })
    }
}

/// The line y + p·x = s between (0, s) and (r, 0), with p = s/r.
///
/// The constructor rejects configurations in which a comparison used by the
/// statistics could land on exact equality: the gaps along x = 0..l must be
/// pairwise distinct, and when p carries no ε part it must avoid every
/// balanced-hook boundary ratio reachable at this size.
#[derive(Clone, PartialEq, Eq)]
pub struct Line {
    s: Infinitesimal,
    r: Infinitesimal,
    p: Infinitesimal,
}

impl Line {
    /// Line through (0, s) and (r, 0); the slope is derived.
    pub fn new(s: Infinitesimal, r: Infinitesimal) -> Result<Self> {
        if !s.is_positive() || !r.is_positive() {
            return Err(Error::Invalid("intercepts must be positive".into()));
        }
        let p = &s / &r;
        Line::validated(s, r, p)
    }

    /// Line with given y-intercept and slope; the x-intercept is derived.
    pub fn from_slope(s: Infinitesimal, p: Infinitesimal) -> Result<Self> {
        if !s.is_positive() || !p.is_positive() {
            return Err(Error::Invalid(
                "intercept and slope must be positive".into(),
            ));
        }
        let r = &s / &p;
        Line::validated(s, r, p)
    }

    /// The classical regime: the segment from (0, kn) to (km, 0) tilted so
    /// that p = n/m − ε.
    pub fn classical(k: i64, m: i64, n: i64) -> Result<Self> {
        if k <= 0 || m <= 0 || n <= 0 {
            return Err(Error::Invalid("k, m, n must be positive".into()));
        }
        Line::from_slope(
            Infinitesimal::integer(k * n),
            Infinitesimal::rational_eps(n, m, -1),
        )
    }

    fn validated(s: Infinitesimal, r: Infinitesimal, p: Infinitesimal) -> Result<Self> {
        let line = Line { s, r, p };
        let l = line.l();
        // gaps must sort strictly
        for i in 1..=l {
            for j in i + 1..=l {
                if line.gap(i) == line.gap(j) {
                    return Err(Error::AmbiguousLine(format!(
                        "gaps at x = {} and x = {} coincide",
                        i - 1,
                        j - 1
                    )));
                }
            }
        }
        // balanced-hook boundaries: only reachable ties matter, and a nonzero
        // ε part on p rules them all out at once
        if line.p.eps().is_zero() {
            let max_leg = line.floor_s();
            let max_arm = l as i64;
            for leg in 0..=max_leg {
                for arm in 0..=max_arm {
                    let lo = Infinitesimal::rational(leg, arm + 1);
                    if line.p == lo {
                        return Err(Error::AmbiguousLine(format!("p = {}/{}", leg, arm + 1)));
                    }
                    if arm > 0 && line.p == Infinitesimal::rational(leg + 1, arm) {
                        return Err(Error::AmbiguousLine(format!("p = {}/{}", leg + 1, arm)));
                    }
                }
            }
        }
        Ok(line)
    }

    pub fn s(&self) -> &Infinitesimal {
        &self.s
    }

    pub fn r(&self) -> &Infinitesimal {
        &self.r
    }

    pub fn p(&self) -> &Infinitesimal {
        &self.p
    }

    /// Number of columns, ⌊r⌋ + 1.
    pub fn l(&self) -> usize {
        (self.r.floor() + 1) as usize
    }

    pub fn floor_s(&self) -> i64 {
        self.s.floor()
    }

    /// Height of the line above x = i−1, s − p(i−1).
    pub fn height(&self, i: usize) -> Infinitesimal {
        &self.s - &(&self.p * &Infinitesimal::integer(i as i64 - 1))
    }

    /// d_i = ⌊s − p(i−1)⌋, the highest lattice ordinate weakly below the
    /// line at x = i−1.
    pub fn d(&self, i: usize) -> i64 {
        self.height(i).floor()
    }

    /// c_i = {s − p(i−1)}, the gap between the line and d_i.
    pub fn gap(&self, i: usize) -> Infinitesimal {
        self.height(i).frac()
    }

    /// The permutation with σ(1..l) in the relative order of (c_l, ..., c_1).
    pub fn gap_permutation(&self) -> Permutation {
        let l = self.l();
        let rev: Vec<Infinitesimal> = (1..=l).rev().map(|i| self.gap(i)).collect();
        Permutation::sorting(&rev).expect("gaps validated distinct")
    }

    /// South runs b'_i = d_i − d_{i+1} of the untruncated highest path,
    /// which continues below the x-axis.
    pub fn untruncated_runs(&self, len: usize) -> Vec<i64> {
        (1..=len).map(|i| self.d(i) - self.d(i + 1)).collect()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y + ({})x = {}", self.p, self.s)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A south-east path from (0, ⌊s⌋) to (l−1, 0) weakly below a line, stored
/// as south-run lengths per column.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticePath {
    south_runs: Vec<i64>,
}

impl LatticePath {
    pub fn new(south_runs: Vec<i64>, line: &Line) -> Result<Self> {
        let l = line.l();
        if south_runs.len() != l {
            return Err(Error::Invalid(format!("expected {l} runs")));
        }
        if south_runs.iter().any(|&b| b < 0) {
            return Err(Error::Invalid("negative run length".into()));
        }
        if south_runs.iter().sum::<i64>() != line.floor_s() {
            return Err(Error::Invalid("runs must sum to ⌊s⌋".into()));
        }
        let path = LatticePath { south_runs };
        if path.column_areas(&highest_path(line).south_runs).is_none() {
            return Err(Error::Invalid("path exceeds the highest path".into()));
        }
        Ok(path)
    }

    pub fn south_runs(&self) -> &[i64] {
        &self.south_runs
    }

    pub fn l(&self) -> usize {
        self.south_runs.len()
    }

    /// Column areas a_i against the path with runs `delta`; None when some
    /// column dips above δ.
    fn column_areas(&self, delta: &[i64]) -> Option<Vec<i64>> {
        let l = self.south_runs.len();
        let mut a = vec![0i64; l.saturating_sub(1)];
        let mut acc = 0i64;
        for i in 0..l.saturating_sub(1) {
            acc += self.south_runs[i] - delta[i];
            if acc < 0 {
                return None;
            }
            a[i] = acc;
        }
        Some(a)
    }

    /// Heights of the enclosed Young diagram: column x ∈ [i−1, i] holds
    /// Σ_{j>i} runs_j boxes.
    pub fn column_heights(&self) -> Vec<i64> {
        let l = self.south_runs.len();
        let mut heights = vec![0i64; l.saturating_sub(1)];
        let mut acc = 0i64;
        for i in (1..l).rev() {
            acc += self.south_runs[i];
            heights[i - 1] = acc;
        }
        heights
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.south_runs
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The LLT data attached to a path under a line: the reversed row bounds
/// (α, β), the gap-sorting permutation σ, the ordinates d_i, and the gaps.
#[derive(Clone, Debug)]
pub struct LLTData {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub sigma: Permutation,
    pub d: Vec<i64>,
    pub c: Vec<Infinitesimal>,
}

/// The highest path δ under the line: runs d_i − d_{i+1}, truncated at the
/// x-axis in the final column.
pub fn highest_path(line: &Line) -> LatticePath {
    let l = line.l();
    let mut runs: Vec<i64> = (1..l).map(|i| line.d(i) - line.d(i + 1)).collect();
    runs.push(line.d(l));
    LatticePath { south_runs: runs }
}

/// All area vectors a ≥ 0 with a_{l−1} ≤ b_l and a_i ≤ a_{i+1} + b_{i+1},
/// in lexicographic order. These index the paths weakly below large-path
/// runs `b`.
pub fn area_vectors(b: &[i64]) -> Vec<Vec<i64>> {
    let l = b.len();
    if l <= 1 {
        return vec![vec![]];
    }
    // build from the right: a_{l-1} first
    let mut partial: Vec<Vec<i64>> = (0..=b[l - 1]).map(|a| vec![a]).collect();
    for i in (0..l - 2).rev() {
        let mut next = Vec::new();
        for tail in &partial {
            let bound = tail[0] + b[i + 1];
            for a in 0..=bound {
                let mut v = Vec::with_capacity(tail.len() + 1);
                v.push(a);
                v.extend_from_slice(tail);
                next.push(v);
            }
        }
        partial = next;
    }
    partial.sort();
    partial
}

/// South runs of the path at area vector `a` below the path with runs `b`.
pub fn runs_from_area(b: &[i64], a: &[i64]) -> Vec<i64> {
    let l = b.len();
    assert_eq!(a.len(), l.saturating_sub(1));
    let mut runs = b.to_vec();
    for i in 0..l - 1 {
        let prev = if i == 0 { 0 } else { a[i - 1] };
        runs[i] += a[i] - prev;
    }
    if l > 1 {
        runs[l - 1] -= a[l - 2];
    }
    runs
}

/// Every path from (0, ⌊s⌋) to (⌊r⌋, 0) weakly below the line, ordered
/// lexicographically by area vector.
pub fn enumerate_paths(line: &Line) -> Vec<LatticePath> {
    let b = highest_path(line);
    area_vectors(b.south_runs())
        .into_iter()
        .map(|a| LatticePath {
            south_runs: runs_from_area(b.south_runs(), &a),
        })
        .collect()
}

/// Lattice squares between the path and the highest path: total and per
/// column.
pub fn area(path: &LatticePath, line: &Line) -> (i64, Vec<i64>) {
    let delta = highest_path(line);
    let a = path
        .column_areas(delta.south_runs())
        .expect("path validated below the line");
    (a.iter().sum(), a)
}

/// Number of boxes of the enclosed Young diagram whose hook is balanced
/// against slope p: leg/(arm+1) < p < (leg+1)/arm, the right bound read as
/// ∞ when arm = 0.
pub fn dinv_p(path: &LatticePath, p: &Infinitesimal) -> i64 {
    let heights = path.column_heights();
    let ncols = heights.len();
    let mut count = 0i64;
    for i in 0..ncols {
        for j in 1..=heights[i] {
            let arm = (i + 1..ncols).filter(|&k| heights[k] >= j).count() as i64;
            let leg = heights[i] - j;
            let lo = Infinitesimal::rational(leg, arm + 1);
            let below = inf_compare(&lo, p);
            debug_assert_ne!(
                below,
                Ordering::Equal,
                "balanced-hook tie at leg {leg}, arm {arm}"
            );
            if below != Ordering::Less {
                continue;
            }
            if arm > 0 {
                let hi = Infinitesimal::rational(leg + 1, arm);
                let above = inf_compare(p, &hi);
                debug_assert_ne!(
                    above,
                    Ordering::Equal,
                    "balanced-hook tie at leg {leg}, arm {arm}"
                );
                if above != Ordering::Less {
                    continue;
                }
            }
            count += 1;
        }
    }
    count
}

/// The LLT data (α, β, σ) of a path, reversed as vectors so that row k of
/// the tuple β/α describes the column x = l−k.
pub fn llt_data(path: &LatticePath, line: &Line) -> LLTData {
    llt_data_extended(path, line, &ExtendedPathSpec::none())
}

/// LLT data with `ext.u` extra south steps on the y-axis; the row for x = 0
/// starts at α = −u.
pub fn llt_data_extended(path: &LatticePath, line: &Line, ext: &ExtendedPathSpec) -> LLTData {
    let l = line.l();
    assert_eq!(path.l(), l);
    let d: Vec<i64> = (1..=l).map(|i| line.d(i)).collect();
    let c: Vec<Infinitesimal> = (1..=l).map(|i| line.gap(i)).collect();
    let sigma = line.gap_permutation();

    let mut alpha = Vec::with_capacity(l);
    let mut beta = Vec::with_capacity(l);
    let mut y = line.floor_s();
    for (di, run) in d.iter().zip(path.south_runs()) {
        // the run descends from y to y − run
        alpha.push(di - y);
        y -= run;
        beta.push(di - y);
    }
    alpha.reverse();
    beta.reverse();
    alpha[l - 1] -= ext.u;

    LLTData {
        alpha,
        beta,
        sigma,
        d,
        c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inf(s: &str) -> Infinitesimal {
        s.parse().unwrap()
    }

    /// The worked line with s = 47/10 and r just under 331/100.
    pub fn line_47_331() -> Line {
        Line::new(inf("47/10"), inf("331/100-e")).unwrap()
    }

    /// The seven-row line with s = 927/100 and slope just over 34/25.
    pub fn line_927_136() -> Line {
        Line::from_slope(inf("927/100"), inf("34/25+e")).unwrap()
    }

    #[test]
    fn highest_path_examples() {
        assert_eq!(highest_path(&line_47_331()).south_runs(), &[1, 2, 1, 0]);

        let line = Line::from_slope(inf("2"), inf("1-e")).unwrap();
        assert_eq!(line.l(), 3);
        assert_eq!(highest_path(&line).south_runs(), &[1, 1, 0]);

        let line = Line::new(inf("1/2"), inf("9/10-e")).unwrap();
        assert_eq!(highest_path(&line).south_runs(), &[0]);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_paths(&line_47_331()).len(), 7);
        let line = Line::from_slope(inf("2"), inf("1-e")).unwrap();
        assert_eq!(enumerate_paths(&line).len(), 2);
        let line = Line::new(inf("1/2"), inf("9/10-e")).unwrap();
        assert_eq!(enumerate_paths(&line).len(), 1);
    }

    #[test]
    fn enumerate_cardinality_matches_direct_count() {
        // independent count of the area-vector constraints
        for line in [line_47_331(), Line::classical(2, 2, 1).unwrap()] {
            let b = highest_path(&line);
            let b = b.south_runs();
            let l = b.len();
            let mut count = 0usize;
            let bound: i64 = b.iter().sum();
            let mut stack = vec![vec![]];
            while let Some(a) = stack.pop() {
                if a.len() == l - 1 {
                    let ok = (0..l - 1).all(|i| {
                        let nxt = if i + 1 < l - 1 { a[i + 1] } else { 0 };
                        let cap = if i + 1 < l - 1 {
                            nxt + b[i + 1]
                        } else {
                            b[l - 1]
                        };
                        a[i] <= cap
                    });
                    if ok {
                        count += 1;
                    }
                    continue;
                }
                for v in 0..=bound {
                    let mut n = a.clone();
                    n.push(v);
                    stack.push(n);
                }
            }
            assert_eq!(enumerate_paths(&line).len(), count);
        }
    }

    #[test]
    fn area_examples() {
        let line = line_47_331();
        let delta = highest_path(&line);
        assert_eq!(area(&delta, &line), (0, vec![0, 0, 0]));

        let lowest = LatticePath::new(vec![4, 0, 0, 0], &line).unwrap();
        assert_eq!(area(&lowest, &line).0, 4);

        let third = LatticePath::new(vec![2, 1, 1, 0], &line).unwrap();
        assert_eq!(area(&third, &line).0, 1);
    }

    #[test]
    fn dinv_examples() {
        let line = line_47_331();
        // exact slope, no ε: valid because no boundary ratio is reachable
        let p = inf("47/10") / inf("331/100");
        assert_eq!(dinv_p(&highest_path(&line), &p), 4);
        assert_eq!(
            dinv_p(&LatticePath::new(vec![4, 0, 0, 0], &line).unwrap(), &p),
            0
        );

        // a single box is balanced for any slope
        let line1 = Line::from_slope(inf("2"), inf("1-e")).unwrap();
        let single = LatticePath::new(vec![1, 1, 0], &line1).unwrap();
        for p in ["1/3", "1-e", "7/2", "5+e"] {
            assert_eq!(dinv_p(&single, &inf(p)), 1);
        }
    }

    #[test]
    fn dinv_all_paths_match_caption_statistics() {
        let line = line_47_331();
        let got: Vec<(i64, i64)> = enumerate_paths(&line)
            .iter()
            .map(|path| (area(path, &line).0, dinv_p(path, line.p())))
            .collect();
        assert_eq!(
            got,
            vec![(0, 4), (1, 2), (1, 3), (2, 2), (2, 1), (3, 1), (4, 0)]
        );
    }

    #[test]
    fn dinv_stable_under_slope_perturbation() {
        // same floors and gap order ⇒ same dinv
        let line = line_47_331();
        let p0 = inf("47/10") / inf("331/100");
        let plus = inf("470/331+e");
        let minus = inf("470/331-e");
        for path in enumerate_paths(&line) {
            let d = dinv_p(&path, &p0);
            assert_eq!(dinv_p(&path, &plus), d);
            assert_eq!(dinv_p(&path, &minus), d);
        }
    }

    #[test]
    fn llt_data_seven_row_example() {
        let line = line_927_136();
        assert_eq!(
            (1..=7).map(|i| line.d(i)).collect::<Vec<_>>(),
            vec![9, 7, 6, 5, 3, 2, 1]
        );
        let path = LatticePath::new(vec![3, 0, 3, 2, 0, 1, 0], &line).unwrap();
        let data = llt_data(&path, &line);
        assert_eq!(data.alpha, vec![1, 1, 2, 2, 0, 1, 0]);
        assert_eq!(data.beta, vec![1, 2, 2, 4, 3, 1, 3]);
        assert_eq!(data.sigma.images(), &[1, 4, 6, 2, 5, 7, 3]);
    }

    #[test]
    fn gap_permutation_example() {
        assert_eq!(line_47_331().gap_permutation().images(), &[2, 4, 1, 3]);
    }

    #[test]
    fn llt_data_of_highest_path() {
        // for δ: α is zero and β is the reversed run vector
        let line = line_47_331();
        let delta = highest_path(&line);
        let data = llt_data(&delta, &line);
        assert_eq!(data.alpha, vec![0, 0, 0, 0]);
        assert_eq!(data.beta, vec![0, 1, 2, 1]);
    }

    #[test]
    fn llt_data_general_shape() {
        // β = reversed(b) + (0, a_{l−1}, ..., a_1), α = (a_{l−1}, ..., a_1, 0)
        let line = line_47_331();
        let b = highest_path(&line);
        for path in enumerate_paths(&line) {
            let (_, a) = area(&path, &line);
            let data = llt_data(&path, &line);
            let l = line.l();
            let mut beta_want: Vec<i64> = b.south_runs().iter().rev().copied().collect();
            for k in 1..l {
                beta_want[k] += a[l - 1 - k];
            }
            let mut alpha_want: Vec<i64> = a.iter().rev().copied().collect();
            alpha_want.push(0);
            assert_eq!(data.beta, beta_want);
            assert_eq!(data.alpha, alpha_want);
            assert!(data
                .alpha
                .iter()
                .zip(&data.beta)
                .all(|(x, y)| 0 <= *x && x <= y));
        }
    }

    #[test]
    fn extension_lowers_final_alpha() {
        let line = line_47_331();
        let delta = highest_path(&line);
        let data = llt_data_extended(&delta, &line, &ExtendedPathSpec::new(2).unwrap());
        assert_eq!(data.alpha, vec![0, 0, 0, -2]);
    }

    #[test]
    fn classical_line_shape() {
        let line = Line::classical(2, 3, 1).unwrap();
        // segment from (0,2) to (6,0), slope 1/3 − ε
        assert_eq!(line.l(), 7);
        assert_eq!(line.floor_s(), 2);
        assert_eq!(highest_path(&line).south_runs(), &[1, 0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn constructor_rejects_ties() {
        // slope exactly 1 ties the single-box hook test
        assert!(Line::from_slope(inf("2"), inf("1")).is_err());
        // equal gaps: slope 1/2 with no perturbation has c_1 = c_3
        assert!(Line::from_slope(inf("3/2"), inf("1/2")).is_err());
        // perturbation repairs both
        assert!(Line::from_slope(inf("2"), inf("1-e")).is_ok());
        assert!(Line::from_slope(inf("3/2"), inf("1/2+e")).is_ok());
    }

    #[test]
    fn runs_round_trip_area() {
        let line = line_927_136();
        let b = highest_path(&line);
        for a in area_vectors(b.south_runs()).iter().take(40) {
            let runs = runs_from_area(b.south_runs(), a);
            let path = LatticePath::new(runs, &line).unwrap();
            assert_eq!(&area(&path, &line).1, a);
        }
    }
}
