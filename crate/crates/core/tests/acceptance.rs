//! Acceptance suite: one test per criterion, each computing both sides of
//! its identities through independent code paths at exact (zero-tolerance)
//! arithmetic and printing a pass line with its runtime.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use catalanimal::algebra::{Infinitesimal, Permutation, QTLaurent, XLaurent};
use catalanimal::catalan::{self, hb_factors};
use catalanimal::characters::{schur_expand, weight_le, Partition, SchurExpansion};
use catalanimal::cli::Config;
use catalanimal::hecke;
use catalanimal::kernel::{self, KernelOpts};
use catalanimal::llt;
use catalanimal::paths::{self, ExtendedPathSpec, LatticePath, Line};
use catalanimal::verify;

fn inf(s: &str) -> Infinitesimal {
    s.parse().unwrap()
}

fn perm(v: &[usize]) -> Permutation {
    Permutation::from_images(v.to_vec()).unwrap()
}

fn p(v: &[i64]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn qt(qe: i64, te: i64) -> QTLaurent {
    QTLaurent::monomial(qe, te, BigInt::from(1))
}

fn rng() -> StdRng {
    StdRng::seed_from_u64(Config::default().seed)
}

/// The four-column worked line: s = 47/10, r just below 331/100.
fn worked_line() -> Line {
    Line::new(inf("47/10"), inf("331/100-e")).unwrap()
}

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("PASS {name} in {elapsed:?} (budget {budget:?})");
    assert!(
        elapsed < budget,
        "{name} exceeded its runtime budget: {elapsed:?}"
    );
}

/// Random line with ⌊s⌋ ≤ 4, ⌊r⌋ ≤ 3 and a perturbed intercept.
fn random_line(rng: &mut StdRng) -> Line {
    loop {
        let sn = rng.random_range(11..50); // s in [1.1, 4.9]
        let rn = rng.random_range(11..40); // r in [1.1, 3.9]
        let tilt = if rng.random_bool(0.5) { "+e" } else { "-e" };
        let s = inf(&format!("{sn}/10"));
        let r = inf(&format!("{rn}/10{tilt}"));
        if let Ok(line) = Line::new(s, r) {
            return line;
        }
    }
}

#[test]
fn criterion_1_worked_line_reproduction() {
    let start = Instant::now();
    let line = worked_line();
    let paths_list = paths::enumerate_paths(&line);
    assert_eq!(paths_list.len(), 7);

    let stats: Vec<(i64, i64)> = paths_list
        .iter()
        .map(|path| (paths::area(path, &line).0, paths::dinv_p(path, line.p())))
        .collect();
    let mut sorted = stats.clone();
    sorted.sort();
    assert_eq!(
        sorted,
        vec![(0, 4), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (4, 0)]
    );

    // the seven tuple expansions, verbatim, keyed by the permuted digit
    // strings
    let deep = vec![
        (p(&[4]), qt(0, 0)),
        (p(&[3, 1]), &qt(1, 0) + &qt(2, 0)),
        (p(&[2, 2]), qt(2, 0)),
        (p(&[2, 1, 1]), qt(3, 0)),
    ];
    let mid = vec![
        (p(&[4]), qt(0, 0)),
        (p(&[3, 1]), qt(1, 0)),
        (p(&[2, 2]), qt(2, 0)),
    ];
    let shallow = vec![(p(&[4]), qt(0, 0)), (p(&[3, 1]), qt(1, 0))];
    let single = vec![(p(&[4]), qt(0, 0))];
    let expected: Vec<(&str, &Vec<(Partition, QTLaurent)>)> = vec![
        ("2011/0000", &deep),
        ("3011/0001", &shallow),
        ("2021/1000", &deep),
        ("3021/1001", &mid),
        ("2031/2000", &shallow),
        ("3031/2001", &shallow),
        ("3041/3001", &single),
    ];

    for (path, (shape, want)) in paths_list.iter().zip(&expected) {
        let data = paths::llt_data(path, &line);
        let rows = llt::RowTuple::new(data.alpha.clone(), data.beta.clone()).unwrap();
        let permuted = rows.permuted(&data.sigma);
        let digits = format!(
            "{}/{}",
            permuted
                .beta
                .iter()
                .map(|d| d.to_string())
                .collect::<String>(),
            permuted
                .alpha
                .iter()
                .map(|d| d.to_string())
                .collect::<String>()
        );
        assert_eq!(&digits, shape);
        let expansion = schur_expand(&llt::llt_poly(&permuted.to_skew_tuple(), 4)).unwrap();
        let mut expect = SchurExpansion::zero(4);
        for (lam, c) in want.iter() {
            expect.add_term(lam.clone(), c);
        }
        assert_eq!(expansion, expect, "expansion for {digits}");
    }
    finish(
        "criterion 1 (worked line reproduction)",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_2_main_identity() {
    let start = Instant::now();
    let report = verify::check_main(&worked_line(), &ExtendedPathSpec::none()).unwrap();
    assert!(report.equal, "{report}");

    // the classical indicator patterns: the series of the run vector with
    // ones at 1, m+1, ..., km+1 equals the path sum under the classical
    // line from (0, k+1) with slope 1/m − ε
    for (m, k) in [(1i64, 1i64), (2, 1), (1, 2), (3, 1), (2, 2)] {
        let line = Line::classical(k + 1, m, 1).unwrap();
        let b = paths::highest_path(&line);
        let runs = b.south_runs();
        // run vector is the indicator of x_1 x_{m+1} ... x_{km+1}
        assert_eq!(runs.len(), ((k + 1) * m + 1) as usize);
        for (i, &r) in runs.iter().enumerate() {
            let on = i as i64 % m == 0 && (i as i64) <= k * m;
            assert_eq!(r, i64::from(on), "position {i}");
        }
        let report = verify::check_main(&line, &ExtendedPathSpec::none()).unwrap();
        assert!(report.equal, "indicator case m={m} k={k}: {report}");
    }

    let mut rng = rng();
    for trial in 0..50 {
        let line = random_line(&mut rng);
        let u = (trial % 2) as i64;
        let report = verify::check_main(&line, &ExtendedPathSpec::new(u).unwrap()).unwrap();
        assert!(report.equal, "trial {trial}: {report}");
    }
    finish(
        "criterion 2 (main identity, 50 random lines)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_3_classical_catalan() {
    let start = Instant::now();

    // frozen values derived from the in-repo path enumeration oracle
    let mut c2 = QTLaurent::zero();
    for (a, b) in [(1, 0), (0, 1)] {
        c2.add_term(a, b, &BigInt::from(1));
    }
    let mut c3 = QTLaurent::zero();
    for (a, b) in [(3, 0), (2, 1), (1, 2), (0, 3), (1, 1)] {
        c3.add_term(a, b, &BigInt::from(1));
    }

    for k in 2..=4i64 {
        let line = Line::from_slope(Infinitesimal::integer(k), inf("1-e")).unwrap();
        let b = paths::highest_path(&line);
        let b = b.south_runs();

        // the in-repo oracle: enumerate paths, sum t^area q^dinv
        let oracle = catalan::catalan_paths(&line);
        let series = catalan::hb_pol(b).unwrap().coeff(&Partition::row(k));
        assert_eq!(series, oracle, "k = {k}");

        match k {
            2 => assert_eq!(series, c2),
            3 => assert_eq!(series, c3),
            4 => {
                assert_eq!(series.eval_one(), BigInt::from(14));
                assert_eq!(series, series.swap_qt());
            }
            _ => unreachable!(),
        }

        // all three methods agree
        catalan::catalan_cb(b, Some(&line)).unwrap();
    }

    // independence of the leading entry
    for base in [vec![1, 1, 0], vec![1, 1, 1, 0], vec![2, 1, 0]] {
        let reference = catalan::catalan_cb(&base, None).unwrap();
        for b1 in 0..=3 {
            let mut b = base.clone();
            b[0] = b1;
            assert_eq!(
                catalan::catalan_cb(&b, None).unwrap(),
                reference,
                "b = {b:?}"
            );
        }
    }
    finish(
        "criterion 3 (classical q,t-Catalan values)",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_4_hall_littlewood_table() {
    let start = Instant::now();
    let id = Permutation::identity(3);

    // coefficient shorthand: 0 → 1, 1 → 1−q, 2 → (1−q)²
    let table_e: Vec<(&[i64], Vec<(Vec<i64>, u8)>)> = vec![
        (&[0, 0, 0], vec![(vec![0, 0, 0], 0)]),
        (&[1, 0, 0], vec![(vec![1, 0, 0], 0)]),
        (&[0, 1, 0], vec![(vec![1, 0, 0], 1), (vec![0, 1, 0], 0)]),
        (
            &[0, 0, 1],
            vec![(vec![1, 0, 0], 1), (vec![0, 1, 0], 1), (vec![0, 0, 1], 0)],
        ),
        (&[1, 1, 0], vec![(vec![1, 1, 0], 0)]),
        (&[1, 0, 1], vec![(vec![1, 1, 0], 1), (vec![1, 0, 1], 0)]),
        (
            &[0, 1, 1],
            vec![(vec![1, 1, 0], 1), (vec![1, 0, 1], 1), (vec![0, 1, 1], 0)],
        ),
        (&[2, 0, 0], vec![(vec![2, 0, 0], 0)]),
        (
            &[0, 2, 0],
            vec![(vec![2, 0, 0], 1), (vec![1, 1, 0], 1), (vec![0, 2, 0], 0)],
        ),
        (
            &[0, 0, 2],
            vec![
                (vec![2, 0, 0], 1),
                (vec![1, 1, 0], 2),
                (vec![1, 0, 1], 1),
                (vec![0, 2, 0], 1),
                (vec![0, 1, 1], 1),
                (vec![0, 0, 2], 0),
            ],
        ),
    ];
    let table_f: Vec<(&[i64], Vec<(Vec<i64>, u8)>)> = vec![
        (&[0, 0, 0], vec![(vec![0, 0, 0], 0)]),
        (&[1, 0, 0], vec![(vec![1, 0, 0], 0)]),
        (&[0, 1, 0], vec![(vec![0, 1, 0], 0)]),
        (&[0, 0, 1], vec![(vec![0, 0, 1], 0)]),
        (&[1, 1, 0], vec![(vec![1, 1, 0], 0)]),
        (&[1, 0, 1], vec![(vec![1, 0, 1], 0)]),
        (&[0, 1, 1], vec![(vec![0, 1, 1], 0)]),
        (
            &[2, 0, 0],
            vec![(vec![2, 0, 0], 0), (vec![1, 1, 0], 1), (vec![1, 0, 1], 1)],
        ),
        (&[0, 2, 0], vec![(vec![0, 2, 0], 0), (vec![0, 1, 1], 1)]),
        (&[0, 0, 2], vec![(vec![0, 0, 2], 0)]),
    ];

    let one_minus_q = &QTLaurent::one() - &QTLaurent::q();
    let coeff = |code: u8| match code {
        0 => QTLaurent::one(),
        1 => one_minus_q.clone(),
        _ => &one_minus_q * &one_minus_q,
    };
    let build = |terms: &[(Vec<i64>, u8)]| {
        let mut f = XLaurent::zero(3);
        for (e, code) in terms {
            f.add_term(e.clone(), &coeff(*code));
        }
        f
    };

    let mut checked = 0;
    for (lam, want) in &table_e {
        // tabulated at q → 1/q
        let e = hecke::ns_hl_e(&id, lam).map_coeffs(|c| c.bar_q());
        assert_eq!(e, build(want), "E at {lam:?}");
        checked += 1;
    }
    for (lam, want) in &table_f {
        let f = hecke::ns_hl_f(&id, lam);
        assert_eq!(f, build(want), "F at {lam:?}");
        checked += 1;
    }
    assert_eq!(checked, 20);
    finish(
        "criterion 4 (E/F table, 20 entries)",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_5_cauchy_and_orthogonality() {
    let start = Instant::now();
    for l in 1..=3usize {
        for sigma in Permutation::all(l) {
            assert!(hecke::check_cauchy(&sigma, l, 3), "cauchy l={l} σ={sigma}");
        }
    }

    // orthogonality over the full grid {0,1,2}^3
    let mut grid = Vec::new();
    for a in 0..=2i64 {
        for b in 0..=2i64 {
            for c in 0..=2i64 {
                grid.push(vec![a, b, c]);
            }
        }
    }
    for sigma in Permutation::all(3) {
        let es: Vec<XLaurent> = grid.iter().map(|lam| hecke::ns_hl_e(&sigma, lam)).collect();
        let fbars: Vec<XLaurent> = grid
            .iter()
            .map(|mu| hecke::ns_hl_f(&sigma, mu).substitute_inverse())
            .collect();
        for (i, e) in es.iter().enumerate() {
            for (j, fbar) in fbars.iter().enumerate() {
                let pairing = hecke::hl_inner(e, fbar).unwrap();
                let want = if i == j {
                    QTLaurent::one()
                } else {
                    QTLaurent::zero()
                };
                assert_eq!(pairing, want, "σ={sigma} λ={:?} μ={:?}", grid[i], grid[j]);
            }
        }
    }
    finish(
        "criterion 5 (Cauchy and orthogonality)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_6_property_suites() {
    let start = Instant::now();
    let mut rng = rng();

    let random_poly = |rng: &mut StdRng, nvars: usize| {
        let mut f = XLaurent::zero(nvars);
        for _ in 0..rng.random_range(1..4) {
            let exps: Vec<i64> = (0..nvars).map(|_| rng.random_range(-2..3)).collect();
            let c = QTLaurent::monomial(
                rng.random_range(-1..2),
                0,
                BigInt::from(rng.random_range(-3..4i64)),
            );
            f.add_term(exps, &c);
        }
        f
    };
    let random_perm = |rng: &mut StdRng, l: usize| {
        let mut images: Vec<usize> = (1..=l).collect();
        for i in (1..l).rev() {
            images.swap(i, rng.random_range(0..=i));
        }
        Permutation::from_images(images).unwrap()
    };

    // quadratic and braid relations
    for _ in 0..100 {
        let f = random_poly(&mut rng, 3);
        let i = rng.random_range(1..3);
        let tf = hecke::dl_apply(i, &f, false);
        let step = &tf + &f;
        assert!((&hecke::dl_apply(i, &step, false) - &step.scale(&QTLaurent::q())).is_zero());
        let lhs = hecke::HeckeWord::from_reduced(&[1, 2, 1]).apply(&f);
        let rhs = hecke::HeckeWord::from_reduced(&[2, 1, 2]).apply(&f);
        assert_eq!(lhs, rhs);
    }
    println!("  suite: quadratic and braid relations (100)");

    // monic triangularity against the extended weight order
    for _ in 0..100 {
        let l = 3;
        let sigma = random_perm(&mut rng, l);
        let lam: Vec<i64> = (0..l).map(|_| rng.random_range(-2..4)).collect();
        let e = hecke::ns_hl_e(&sigma, &lam);
        assert_eq!(e.coeff(&lam), QTLaurent::one());
        for (mu, _) in e.terms() {
            assert!(weight_le(mu, &lam), "σ={sigma} λ={lam:?} μ={mu:?}");
        }
    }
    println!("  suite: monic triangularity (100)");

    // e_k expansion
    for _ in 0..100 {
        let sigma = random_perm(&mut rng, 3);
        let lam: Vec<i64> = (0..3).map(|_| rng.random_range(0..3)).collect();
        let k = rng.random_range(0..4);
        assert!(
            hecke::ek_expansion_check(&sigma, &lam, k),
            "σ={sigma} λ={lam:?} k={k}"
        );
    }
    println!("  suite: e_k expansion (100)");

    // factorization at a split index
    for _ in 0..100 {
        let k = rng.random_range(1..4usize);
        let l = 4;
        let lo = rng.random_range(-1..2);
        let left: Vec<i64> = (0..k).map(|_| rng.random_range(lo + 2..lo + 4)).collect();
        let right: Vec<i64> = (k..l).map(|_| rng.random_range(lo..lo + 2)).collect();
        let lam: Vec<i64> = [left, right].concat();
        let sigma = random_perm(&mut rng, l);
        let s1 = Permutation::sorting(&sigma.images()[..k]).unwrap();
        let s2 = Permutation::sorting(&sigma.images()[k..]).unwrap();
        let whole = hecke::ns_hl_e(&sigma.inverse(), &lam);
        let prod = &hecke::ns_hl_e(&s1.inverse(), &lam[..k]).embed(l, 0)
            * &hecke::ns_hl_e(&s2.inverse(), &lam[k..]).embed(l, k);
        assert_eq!(whole, prod, "σ={sigma} λ={lam:?} split {k}");
    }
    println!("  suite: factorization (100)");

    // winding identities from genuine progressions
    for _ in 0..100 {
        let l = rng.random_range(3..6usize);
        let num = rng.random_range(1..40i64);
        let den = 41;
        let a = Infinitesimal::rational_eps(num, den, if rng.random_bool(0.5) { 1 } else { -1 });
        let b = Infinitesimal::rational(rng.random_range(0..den), den);
        let data = hecke::winding_from_progression(&a, &b, l).unwrap();
        let lam: Vec<i64> = (0..l - 1).map(|_| rng.random_range(-1..3)).collect();
        assert!(
            hecke::check_winding_identity(&data, &lam),
            "a={a} b={b} λ={lam:?}"
        );
    }
    println!("  suite: winding identities (100)");

    // rotation identity on random tuples of rows and columns
    for trial in 0..100 {
        let ncomp = rng.random_range(1..4usize);
        let mut total = 0i64;
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for _ in 0..ncomp {
            let a = rng.random_range(0..3i64);
            let len = rng.random_range(0..=(5 - total).min(3));
            alpha.push(a);
            beta.push(a + len);
            total += len;
        }
        let rows = llt::RowTuple::new(alpha, beta).unwrap();
        let nu = if trial % 2 == 0 {
            rows.to_skew_tuple()
        } else {
            rows.to_skew_tuple().rotate()
        };
        let m = nu.n_boxes().max(1);
        let lhs = schur_expand(&llt::omega_llt_poly(&nu, m)).unwrap();
        let i = llt::attacking_pairs(&nu).0 as i64;
        let rhs = schur_expand(&llt::llt_poly(&nu.rotate(), m))
            .unwrap()
            .map_coeffs(|c| c.bar_q().mul_term(i, 0, &BigInt::from(1)));
        assert_eq!(lhs, rhs, "tuple {nu}");
    }
    println!("  suite: rotation identity (100)");

    // dinv equals the triple count, for every path under random lines
    let mut instances = 0;
    while instances < 100 {
        let line = random_line(&mut rng);
        for path in paths::enumerate_paths(&line) {
            let data = paths::llt_data(&path, &line);
            let rows = llt::RowTuple::new(data.alpha.clone(), data.beta.clone()).unwrap();
            let (h, _) = llt::sigma_triples(&rows, &data.sigma);
            assert_eq!(paths::dinv_p(&path, line.p()), h, "line {line} path {path}");
            instances += 1;
        }
    }
    println!("  suite: dinv equals triple count ({instances})");

    // tableau transfer: worked values plus random instances
    let r = llt::RowTuple::new(vec![2, 1, 2], vec![6, 3, 5]).unwrap();
    let s: Vec<Vec<i64>> = vec![vec![2, 5, 6, 7], vec![1, 3], vec![4, 8, 9]];
    let tw = perm(&[3, 1, 2]);
    let t: Vec<Vec<i64>> = (1..=3)
        .map(|k| s[tw.inverse().apply(k) - 1].clone())
        .collect();
    let res = llt::transfer_tableau(&r, &tw, &t).unwrap();
    assert_eq!((res.h_rows, res.inv_t, res.h_s), (5, 4, 1));
    let res = llt::transfer_tableau(&r, &perm(&[1, 2, 3]), &s).unwrap();
    assert_eq!((res.h_rows, res.inv_t, res.h_s), (7, 2, 5));
    let pf_rows =
        llt::RowTuple::new(vec![0, 0, 1, 2, 1, 2, 2, 0], vec![0, 1, 1, 2, 3, 2, 3, 3]).unwrap();
    let w0 = Permutation::w0(8);
    let pf_s: Vec<Vec<i64>> = [
        vec![],
        vec![4],
        vec![],
        vec![],
        vec![3, 1],
        vec![],
        vec![6],
        vec![5, 3, 2],
    ]
    .iter()
    .map(|row| row.iter().map(|v| 7 - v).collect())
    .collect();
    assert_eq!(llt::increasing_triples(&pf_rows, &w0, &pf_s), 6);

    for _ in 0..100 {
        let l = rng.random_range(2..4usize);
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for _ in 0..l {
            let a = rng.random_range(0..3i64);
            alpha.push(a);
            beta.push(a + rng.random_range(0..3i64));
        }
        let rows = llt::RowTuple::new(alpha, beta).unwrap();
        let sigma = random_perm(&mut rng, l);
        let permuted = rows.permuted(&sigma);
        // random strictly increasing filling of each row of σ(β/α)
        let t: Vec<Vec<i64>> = permuted
            .alpha
            .iter()
            .zip(&permuted.beta)
            .map(|(a, b)| {
                let len = (b - a) as usize;
                let mut row = Vec::with_capacity(len);
                let mut v = 0i64;
                for _ in 0..len {
                    v += rng.random_range(1..3);
                    row.push(v);
                }
                row
            })
            .collect();
        llt::transfer_tableau(&rows, &sigma, &t).expect("statistic transfer");
    }
    println!("  suite: tableau transfer (100 + worked values)");

    // trailing zero
    for _ in 0..100 {
        let l = rng.random_range(1..4usize);
        let b: Vec<i64> = (0..l).map(|_| rng.random_range(0..3)).collect();
        assert!(catalan::trailing_zero_check(&b).unwrap(), "b = {b:?}");
    }
    println!("  suite: trailing zero (100)");

    // cap stability of kernel expansion
    for _ in 0..100 {
        let l = rng.random_range(2..4usize);
        let b: Vec<i64> = (0..l).map(|_| rng.random_range(0..3)).collect();
        let factors = hb_factors(l);
        let floors = kernel::pol_floors(l);
        let base = kernel::expand_monomial(&b, &factors, &floors, &KernelOpts::default()).unwrap();
        for slack in [1, 2] {
            let opts = KernelOpts {
                slack,
                ..KernelOpts::default()
            };
            let widened = kernel::expand_monomial(&b, &factors, &floors, &opts).unwrap();
            assert_eq!(base, widened, "b = {b:?} slack {slack}");
        }
    }
    println!("  suite: cap stability (100)");

    // q ↔ t symmetry of the series
    for _ in 0..100 {
        let l = rng.random_range(1..4usize);
        let b: Vec<i64> = (0..l).map(|_| rng.random_range(0..3)).collect();
        let e = catalan::hb_pol(&b).unwrap();
        assert_eq!(e, e.map_coeffs(|c| c.swap_qt()), "b = {b:?}");
    }
    println!("  suite: q-t symmetry (100)");

    finish(
        "criterion 6 (property suites)",
        start,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_7_specializations() {
    let start = Instant::now();

    // q = 1 on 20 line-realizable run vectors
    let mut rng = rng();
    let mut seen = Vec::new();
    while seen.len() < 20 {
        let line = random_line(&mut rng);
        let b = paths::highest_path(&line).south_runs().to_vec();
        if seen.contains(&b) {
            continue;
        }
        let report = verify::check_q1(&b).unwrap();
        assert!(report.equal, "{report}");
        seen.push(b);
    }

    // t = 0 for the worked run vector: q times the Hall-Littlewood
    // symmetrization of x^(2,1,1,0)
    let hb = catalan::hb_pol(&[1, 2, 1, 0]).unwrap();
    let t0 = hb.map_coeffs(|c| c.subst_t_zero());
    let mono = XLaurent::monomial(vec![2, 1, 1, 0], QTLaurent::one());
    let want = catalanimal::characters::hall_littlewood_pol(&mono)
        .unwrap()
        .scale(&QTLaurent::q());
    assert_eq!(t0, want);

    finish(
        "criterion 7 (specializations)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_8_positivity_scan() {
    let start = Instant::now();
    let reports = verify::scan_positivity(4, 5).unwrap();
    let mut convex = 0;
    for r in &reports {
        if r.convex {
            convex += 1;
            assert!(
                r.positive(),
                "negative Schur coefficient at convex b = {:?}: {:?}",
                r.b,
                r.negative_terms
            );
        }
    }
    println!(
        "  scanned {} vectors, {} convex, all convex positive",
        reports.len(),
        convex
    );
    assert!(convex > 20);
    assert!(reports.len() > convex);
    finish(
        "criterion 8 (positivity scan)",
        start,
        Duration::from_secs(600),
    );
}

/// The line-realizable run vectors used across criteria stay available to
/// the stable identity as well; exercise a couple of windows end to end.
#[test]
fn stable_identity_cross_check() {
    let start = Instant::now();
    let line = worked_line();
    let window = verify::dominant_window(4, 4, 2);
    let report = verify::check_stable(&line, 0, 0, 2, &window).unwrap();
    assert!(report.equal, "{report}");

    let line = Line::from_slope(inf("2"), inf("1-e")).unwrap();
    let l = line.l();
    let deg: i64 = line.untruncated_runs(l).iter().sum();
    for (u, v) in [(0i64, 0i64), (1, 0), (0, 1)] {
        let window = verify::dominant_window(l, deg + u - v, 2);
        let report = verify::check_stable(&line, u, v, 2, &window).unwrap();
        assert!(report.equal, "u={u} v={v}: {report}");
    }
    finish(
        "stable identity cross-check",
        start,
        Duration::from_secs(120),
    );
}

/// Paths are immutable values; reconstructing one from its runs must agree
/// with the enumeration.
#[test]
fn path_reconstruction_round_trip() {
    let line = worked_line();
    for path in paths::enumerate_paths(&line) {
        let rebuilt = LatticePath::new(path.south_runs().to_vec(), &line).unwrap();
        assert_eq!(rebuilt, path);
    }
}
