//! Tuples of skew diagrams, attacking pairs, (super)tableau enumeration,
//! combinatorial LLT polynomials, diagram rotation, σ-triples, and the
//! triple-weighted tableau generating function.
//!
//! Boxes live at integer coordinates (x, y) with content x − y; components
//! are French-style skew shapes that may be translated anywhere in the
//! plane. The reading order sorts boxes by (content, component index, row),
//! bottom row first; the tie-break only reorders boxes that can never
//! attack, so every statistic here is independent of it.

use std::fmt;

use crate::algebra::{Permutation, QTLaurent, XLaurent};
use crate::{Error, Result};

// ---- Shapes ----

/// Consecutive boxes of one row: x ∈ (lo, hi], possibly empty (lo = hi).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpan {
    pub y: i64,
    pub lo: i64,
    pub hi: i64,
}

/// One skew diagram, rows listed bottom to top on consecutive y values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewComponent {
    rows: Vec<RowSpan>,
}

impl SkewComponent {
    pub fn new(rows: Vec<RowSpan>) -> Result<Self> {
        for w in rows.windows(2) {
            let (lower, upper) = (&w[0], &w[1]);
            if upper.y != lower.y + 1 || upper.lo > lower.lo || upper.hi > lower.hi {
                return Err(Error::Invalid("rows do not stack into a skew shape".into()));
            }
        }
        if rows.iter().any(|r| r.lo > r.hi) {
            return Err(Error::Invalid("row with negative length".into()));
        }
        Ok(SkewComponent { rows })
    }

    /// Single row spanning x ∈ (alpha, beta] at height 0.
    pub fn row(alpha: i64, beta: i64) -> Self {
        SkewComponent {
            rows: vec![RowSpan {
                y: 0,
                lo: alpha,
                hi: beta,
            }],
        }
    }

    pub fn rows(&self) -> &[RowSpan] {
        &self.rows
    }

    pub fn n_boxes(&self) -> usize {
        self.rows.iter().map(|r| (r.hi - r.lo) as usize).sum()
    }

    fn boxes(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.rows
            .iter()
            .flat_map(|r| (r.lo + 1..=r.hi).map(move |x| (x, r.y)))
    }

    /// 180° rotation of the transpose, positioned so contents are preserved.
    fn rotate(&self) -> SkewComponent {
        let boxes: Vec<(i64, i64)> = self.boxes().collect();
        if boxes.is_empty() {
            return SkewComponent { rows: vec![] };
        }
        let m = boxes.iter().map(|&(x, y)| x + y).max().unwrap();
        // (x, y) → (m − y, m − x) negates and re-centers both axes, so each
        // image box keeps the content x − y of its source
        let mut imgs: Vec<(i64, i64)> = boxes.iter().map(|&(x, y)| (m - y, m - x)).collect();
        imgs.sort_by_key(|&(x, y)| (y, x));
        let mut rows: Vec<RowSpan> = Vec::new();
        for (x, y) in imgs {
            match rows.last_mut() {
                Some(r) if r.y == y => {
                    assert_eq!(r.hi + 1, x, "rotation produced a gap");
                    r.hi = x;
                }
                _ => rows.push(RowSpan {
                    y,
                    lo: x - 1,
                    hi: x,
                }),
            }
        }
        SkewComponent::new(rows).expect("rotation of a skew shape is a skew shape")
    }
}

/// Position of one box inside a tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxPos {
    pub comp: usize,
    pub x: i64,
    pub y: i64,
}

impl BoxPos {
    pub fn content(&self) -> i64 {
        self.x - self.y
    }
}

/// A tuple of skew diagrams; the index of an LLT polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTuple {
    components: Vec<SkewComponent>,
}

impl SkewTuple {
    pub fn new(components: Vec<SkewComponent>) -> Self {
        SkewTuple { components }
    }

    pub fn components(&self) -> &[SkewComponent] {
        &self.components
    }

    pub fn n_boxes(&self) -> usize {
        self.components.iter().map(|c| c.n_boxes()).sum()
    }

    pub fn total_rows(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.rows.iter().filter(|r| r.lo < r.hi).count())
            .sum()
    }

    /// Boxes in canonical order: component, then row, then column.
    pub fn boxes(&self) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for (k, c) in self.components.iter().enumerate() {
            for (x, y) in c.boxes() {
                out.push(BoxPos { comp: k, x, y });
            }
        }
        out
    }

    /// Indices into `boxes()` sorted by the reading order.
    pub fn reading_order(&self) -> Vec<usize> {
        let boxes = self.boxes();
        let mut idx: Vec<usize> = (0..boxes.len()).collect();
        idx.sort_by_key(|&i| (boxes[i].content(), boxes[i].comp, boxes[i].y));
        idx
    }

    /// 180°-rotated transpose of every component, contents preserved.
    pub fn rotate(&self) -> SkewTuple {
        SkewTuple {
            components: self.components.iter().map(|c| c.rotate()).collect(),
        }
    }
}

/// Attacking pairs of a tuple: boxes a before b in reading order with either
/// equal contents and comp(a) < comp(b), or c(b) = c(a)+1 and
/// comp(a) > comp(b). Returns (count, pairs as indices into `boxes()`).
pub fn attacking_pairs(nu: &SkewTuple) -> (usize, Vec<(usize, usize)>) {
    let boxes = nu.boxes();
    let order = nu.reading_order();
    let mut pairs = Vec::new();
    for (pos_a, &ia) in order.iter().enumerate() {
        for &ib in order.iter().skip(pos_a + 1) {
            let (a, b) = (boxes[ia], boxes[ib]);
            let attack = (a.content() == b.content() && a.comp < b.comp)
                || (b.content() == a.content() + 1 && a.comp > b.comp);
            if attack {
                pairs.push((ia, ib));
            }
        }
    }
    (pairs.len(), pairs)
}

// ---- Tableaux ----

/// A filling of the boxes of a tuple, aligned with `SkewTuple::boxes()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub entries: Vec<i64>,
}

impl Tableau {
    /// Exponent vector of x^T in `nvars` variables.
    pub fn weight(&self, nvars: usize) -> Vec<i64> {
        let mut w = vec![0i64; nvars];
        for &e in &self.entries {
            w[(e - 1) as usize] += 1;
        }
        w
    }
}

/// Row-weak, column-strict (ordinary semistandard) versus row-strict,
/// column-weak (all-negative super tableaux).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauKind {
    Positive,
    Negative,
}

/// All fillings with entries in 1..=nvars of the given kind.
pub fn enumerate_tableaux(nu: &SkewTuple, nvars: usize, kind: TableauKind) -> Vec<Tableau> {
    let boxes = nu.boxes();
    // per-box constraint sources, as indices into `boxes`
    let mut left = vec![None; boxes.len()];
    let mut below = vec![None; boxes.len()];
    for (i, b) in boxes.iter().enumerate() {
        for (j, c) in boxes.iter().enumerate() {
            if c.comp == b.comp && c.y == b.y && c.x == b.x - 1 {
                left[i] = Some(j);
            }
            if c.comp == b.comp && c.x == b.x && c.y == b.y - 1 {
                below[i] = Some(j);
            }
        }
    }
    let mut out = Vec::new();
    let mut entries = vec![0i64; boxes.len()];
    fn rec(
        i: usize,
        nvars: usize,
        kind: TableauKind,
        left: &[Option<usize>],
        below: &[Option<usize>],
        entries: &mut Vec<i64>,
        out: &mut Vec<Tableau>,
    ) {
        if i == entries.len() {
            out.push(Tableau {
                entries: entries.clone(),
            });
            return;
        }
        // boxes() is row-major within components, so both neighbors precede i
        let min_left = left[i].map(|j| match kind {
            TableauKind::Positive => entries[j],
            TableauKind::Negative => entries[j] + 1,
        });
        let min_below = below[i].map(|j| match kind {
            TableauKind::Positive => entries[j] + 1,
            TableauKind::Negative => entries[j],
        });
        let lo = min_left.unwrap_or(1).max(min_below.unwrap_or(1)).max(1);
        for e in lo..=nvars as i64 {
            entries[i] = e;
            rec(i + 1, nvars, kind, left, below, entries, out);
        }
        entries[i] = 0;
    }
    rec(0, nvars, kind, &left, &below, &mut entries, &mut out);
    out
}

/// Attacking inversions of a filling: pairs with T(a) > T(b) for ordinary
/// tableaux, T(a) ≥ T(b) for all-negative ones.
pub fn inversions(nu: &SkewTuple, t: &Tableau, kind: TableauKind) -> i64 {
    let (_, pairs) = attacking_pairs(nu);
    pairs
        .iter()
        .filter(|&&(a, b)| match kind {
            TableauKind::Positive => t.entries[a] > t.entries[b],
            TableauKind::Negative => t.entries[a] >= t.entries[b],
        })
        .count() as i64
}

/// The combinatorial LLT polynomial Σ_T q^inv(T) x^T over semistandard
/// fillings with entries ≤ nvars.
pub fn llt_poly(nu: &SkewTuple, nvars: usize) -> XLaurent {
    tableau_sum(nu, nvars, TableauKind::Positive)
}

/// Σ q^inv(T) x^T over all-negative super tableaux; evaluates ω of the LLT
/// polynomial. Letters are ordered 1̄ < 2̄ < ⋯; by invariance of the super
/// expansion under the alphabet order, any other choice gives the same sum.
pub fn omega_llt_poly(nu: &SkewTuple, nvars: usize) -> XLaurent {
    tableau_sum(nu, nvars, TableauKind::Negative)
}

fn tableau_sum(nu: &SkewTuple, nvars: usize, kind: TableauKind) -> XLaurent {
    let (_, pairs) = attacking_pairs(nu);
    let mut out = XLaurent::zero(nvars);
    for t in enumerate_tableaux(nu, nvars, kind) {
        let inv = pairs
            .iter()
            .filter(|&&(a, b)| match kind {
                TableauKind::Positive => t.entries[a] > t.entries[b],
                TableauKind::Negative => t.entries[a] >= t.entries[b],
            })
            .count() as i64;
        out.add_term(t.weight(nvars), &QTLaurent::monomial(inv, 0, 1.into()));
    }
    debug_assert!(
        out.is_symmetric(),
        "tableau generating function must be symmetric"
    );
    out
}

// ---- Tuples of one-row shapes and σ-triples ----

/// A tuple of one-row skew shapes: row j occupies x ∈ (alpha_j, beta_j].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowTuple {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

impl RowTuple {
    pub fn new(alpha: Vec<i64>, beta: Vec<i64>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::Invalid("alpha and beta lengths differ".into()));
        }
        if alpha.iter().zip(&beta).any(|(a, b)| a > b) {
            return Err(Error::Invalid("row with alpha > beta".into()));
        }
        Ok(RowTuple { alpha, beta })
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.iter().zip(&self.beta).all(|(a, b)| a == b)
    }

    /// σ(β/α): row j moves to position σ(j).
    pub fn permuted(&self, sigma: &Permutation) -> RowTuple {
        RowTuple {
            alpha: sigma.permute(&self.alpha),
            beta: sigma.permute(&self.beta),
        }
    }

    pub fn to_skew_tuple(&self) -> SkewTuple {
        SkewTuple::new(
            self.alpha
                .iter()
                .zip(&self.beta)
                .map(|(&a, &b)| SkewComponent::row(a, b))
                .collect(),
        )
    }

    /// Strictly increasing fillings of every row with entries ≤ nvars.
    fn negative_row_fillings(&self, nvars: usize) -> Vec<Vec<Vec<i64>>> {
        self.alpha
            .iter()
            .zip(&self.beta)
            .map(|(&a, &b)| strict_rows((b - a) as usize, nvars))
            .collect()
    }
}

fn strict_rows(len: usize, nvars: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(len: usize, nvars: i64, start: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..=nvars {
            cur.push(v);
            rec(len, nvars, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(len, nvars as i64, 1, &mut cur, &mut out);
    out
}

/// One σ-triple: boxes a, c consecutive in or adjacent to row `row_ac`
/// (x-coordinates i_a, i_a+1) and b a box of the lower-indexed row `row_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triple {
    /// 1-based row of a and c.
    pub row_ac: usize,
    /// 1-based row of b; row_b < row_ac.
    pub row_b: usize,
    /// x-coordinate of a; c sits at i_a + 1.
    pub i_a: i64,
    /// x-coordinate of b.
    pub i_b: i64,
    /// Whether a (resp. c) is a real box of the tuple.
    pub a_real: bool,
    pub c_real: bool,
}

/// All σ-triples of β/α: b must be a box of the diagram, a may hang off the
/// left end of its row and c off the right end.
pub fn sigma_triples(rows: &RowTuple, sigma: &Permutation) -> (i64, Vec<Triple>) {
    let l = rows.len();
    assert_eq!(sigma.size(), l);
    let mut out = Vec::new();
    for ja in 1..=l {
        for jb in 1..ja {
            // reading order of σ(β/α) puts b strictly between a and c
            let b_right = sigma.apply(jb) < sigma.apply(ja);
            for i_a in rows.alpha[ja - 1]..=rows.beta[ja - 1] {
                let i_c = i_a + 1;
                let i_b = if b_right { i_c } else { i_a };
                if i_b > rows.alpha[jb - 1] && i_b <= rows.beta[jb - 1] {
                    out.push(Triple {
                        row_ac: ja,
                        row_b: jb,
                        i_a,
                        i_b,
                        a_real: i_a > rows.alpha[ja - 1],
                        c_real: i_c <= rows.beta[ja - 1],
                    });
                }
            }
        }
    }
    (out.len() as i64, out)
}

/// A filling of a row tuple, rows listed in order, entries left to right.
pub type RowFilling = Vec<Vec<i64>>;

fn entry(rows: &RowTuple, filling: &RowFilling, row: usize, x: i64) -> i64 {
    filling[row - 1][(x - rows.alpha[row - 1] - 1) as usize]
}

/// Number of increasing σ-triples of a negative tableau on β/α:
/// S(a) < S(b) < S(c), reading S(a) = −∞ and S(c) = ∞ off the ends.
pub fn increasing_triples(rows: &RowTuple, sigma: &Permutation, filling: &RowFilling) -> i64 {
    let (_, triples) = sigma_triples(rows, sigma);
    triples
        .iter()
        .filter(|t| {
            let sb = entry(rows, filling, t.row_b, t.i_b);
            let ok_a = !t.a_real || entry(rows, filling, t.row_ac, t.i_a) < sb;
            let ok_c = !t.c_real || sb < entry(rows, filling, t.row_ac, t.i_a + 1);
            ok_a && ok_c
        })
        .count() as i64
}

/// Generating function Σ_S q^{h_σ(S)} x^S over negative tableaux on β/α
/// with entries ≤ nvars.
pub fn llt_n(sigma: &Permutation, rows: &RowTuple, nvars: usize) -> XLaurent {
    let per_row = rows.negative_row_fillings(nvars);
    let mut out = XLaurent::zero(nvars);
    let mut filling: RowFilling = vec![vec![]; rows.len()];
    fn rec(
        row: usize,
        per_row: &[Vec<Vec<i64>>],
        rows: &RowTuple,
        sigma: &Permutation,
        nvars: usize,
        filling: &mut RowFilling,
        out: &mut XLaurent,
    ) {
        if row == per_row.len() {
            let h = increasing_triples(rows, sigma, filling);
            let mut w = vec![0i64; nvars];
            for r in filling.iter() {
                for &e in r {
                    w[(e - 1) as usize] += 1;
                }
            }
            out.add_term(w, &QTLaurent::monomial(h, 0, 1.into()));
            return;
        }
        for choice in &per_row[row] {
            filling[row] = choice.clone();
            rec(row + 1, per_row, rows, sigma, nvars, filling, out);
        }
    }
    rec(0, &per_row, rows, sigma, nvars, &mut filling, &mut out);
    debug_assert!(
        out.is_symmetric(),
        "triple generating function must be symmetric"
    );
    out
}

/// Statistics carried across the tableau transfer T ↦ S = T∘σ.
#[derive(Clone, Debug)]
pub struct TransferResult {
    pub s_rows: RowFilling,
    pub h_rows: i64,
    pub inv_t: i64,
    pub h_s: i64,
}

/// Transfer a negative tableau T on σ(β/α) to S = T∘σ on β/α, checking the
/// statistic identity h_σ(β/α) − inv(T) = h_σ(S).
pub fn transfer_tableau(
    rows: &RowTuple,
    sigma: &Permutation,
    t_rows: &RowFilling,
) -> Result<TransferResult> {
    let l = rows.len();
    if t_rows.len() != l {
        return Err(Error::Invalid("filling has wrong number of rows".into()));
    }
    let permuted = rows.permuted(sigma);
    // validate row lengths against σ(β/α)
    for k in 1..=l {
        let want = (permuted.beta[k - 1] - permuted.alpha[k - 1]) as usize;
        if t_rows[k - 1].len() != want {
            return Err(Error::Invalid(format!(
                "row {k} should hold {want} entries"
            )));
        }
        if t_rows[k - 1].windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(
                "rows of a negative tableau increase strictly".into(),
            ));
        }
    }

    // inv(T) against the attacking pairs of σ(β/α)
    let nu = permuted.to_skew_tuple();
    let boxes = nu.boxes();
    let entries: Vec<i64> = boxes
        .iter()
        .map(|b| t_rows[b.comp][(b.x - permuted.alpha[b.comp] - 1) as usize])
        .collect();
    let inv_t = inversions(&nu, &Tableau { entries }, TableauKind::Negative);

    // S row j is T row σ(j)
    let s_rows: RowFilling = (1..=l)
        .map(|j| t_rows[sigma.apply(j) - 1].clone())
        .collect();
    let (h_rows, _) = sigma_triples(rows, sigma);
    let h_s = increasing_triples(rows, sigma, &s_rows);
    if h_rows - inv_t != h_s {
        return Err(Error::MethodMismatch("tableau transfer statistic"));
    }
    Ok(TransferResult {
        s_rows,
        h_rows,
        inv_t,
        h_s,
    })
}

impl fmt::Display for SkewTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                c.rows
                    .iter()
                    .map(|r| format!("({},{}]@{}", r.lo, r.hi, r.y))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", parts.join(" | "))
    }
}
