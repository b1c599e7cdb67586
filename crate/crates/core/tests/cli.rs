//! Golden-file and exit-code tests for the command-line front end.
//!
//! Each golden file regenerates exactly from its recorded command line, and
//! repeated runs are byte-identical.

use catalanimal::cli;

fn run(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = std::iter::once("catalanimal")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let mut out = Vec::new();
    let code = cli::run(&argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

const GOLDEN: &[(&str, &[&str])] = &[
    (
        "catalan_1210.json",
        &["catalan", "--b", "1,2,1,0", "--json"],
    ),
    ("hb_1210.json", &["hb", "--b", "1,2,1,0", "--json"]),
    (
        "paths_47_331.json",
        &["paths", "--s", "47/10", "--r", "331/100-e", "--json"],
    ),
    (
        "llt_2011.json",
        &["llt", "--shape", "2011/0000", "--vars", "4", "--json"],
    ),
    (
        "nshl_e010.json",
        &[
            "nshl", "--sigma", "1,2,3", "--lambda", "0,1,0", "--qinv", "--json",
        ],
    ),
];

#[test]
fn golden_files_regenerate() {
    for (file, args) in GOLDEN {
        let want = std::fs::read_to_string(format!("tests/golden/{file}")).unwrap();
        let (code, got) = run(args);
        assert_eq!(code, 0, "{file}");
        assert_eq!(got, want, "{file} drifted from its command line");
    }
}

#[test]
fn output_is_deterministic() {
    for (_, args) in GOLDEN {
        let (_, first) = run(args);
        let (_, second) = run(args);
        assert_eq!(first, second);
    }
}

#[test]
fn verify_exit_codes() {
    let (code, out) = run(&["verify", "cauchy", "--l", "3", "--tmax", "2"]);
    assert_eq!(code, 0, "{out}");

    let (code, out) = run(&["verify", "main", "--s", "47/10", "--r", "331/100-e"]);
    assert_eq!(code, 0, "{out}");

    let (code, out) = run(&["verify", "q1", "--b", "1,2,1,0"]);
    assert_eq!(code, 0, "{out}");

    // a non-winding permutation fails the winding identities
    let (code, _) = run(&[
        "verify", "winding", "--sigma", "2,1,3,4", "--lambda", "1,0,1",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_2() {
    let (code, _) = run(&["catalan"]);
    assert_eq!(code, 2);
    let (code, out) = run(&["catalan", "--b", "1,2,1,0", "--method", "bogus"]);
    assert_eq!(code, 2);
    assert!(out.contains("bogus"));
    let (code, _) = run(&["paths", "--s", "47/10"]);
    assert_eq!(code, 2);
    let (code, out) = run(&["paths", "--s", "2", "--p", "1"]);
    assert_eq!(code, 2, "ambiguous line must be rejected: {out}");
}

#[test]
fn catalan_text_output() {
    let (code, out) = run(&["catalan", "--b", "1,2,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        "t^4 + q*t^2 + q*t^3 + q^2*t + q^2*t^2 + q^3*t + q^4"
    );

    let (code, out) = run(&["hb", "--b", "9"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "s_(9)  1");
}

#[test]
fn catalan_methods_match() {
    for method in ["schur", "ct", "all"] {
        let (code, out) = run(&["catalan", "--b", "1,1,0", "--method", method]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "t + q");
    }
    let (code, out) = run(&[
        "catalan", "--b", "1,1,0", "--method", "paths", "--s", "2", "--p", "1-e",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "t + q");
}

#[test]
fn scan_positivity_runs() {
    let (code, out) = run(&["scan-positivity", "--max-cols", "3", "--max-size", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("all convex instances positive"));
}
