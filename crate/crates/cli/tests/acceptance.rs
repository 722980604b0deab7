//! End-to-end acceptance gate: ten independent criteria covering the
//! generator matrix, weight hierarchy, zero-count tables, zero-bound properties,
//! parameter closed forms, spectra, extension spectra, geometry of the
//! q = 5, m = 3 example, and output determinism. Each test prints its own
//! pass line; time budgets are asserted where the criterion carries one.

use std::process::Command;
use std::time::{Duration, Instant};

use symcode_core::{
    binomial, build_code, closed_form_m2_distribution, closed_form_m2_higher, closed_form_params,
    code_params, enumerate_distinguished, enumerate_orbit_reps, extension_closed_form_odd,
    extension_spectrum, gaussian_binomial, generalized_hamming_weights, ghw_geometric,
    higher_weight_spectra, higher_weight_spectra_all, min_weight_words, pow_u128, rank,
    verify_example_q5_m3, verify_ghw_relations, verify_m2_tables, verify_zero_bounds,
    weight_distribution, Field, FieldElement, SetKind,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symcode"))
}

fn run(args: &[&str]) -> (String, i32) {
    let out = bin().args(args).output().expect("spawn symcode");
    (String::from_utf8(out.stdout).expect("utf8 stdout"), out.status.code().unwrap_or(-1))
}

fn pass(n: u32, what: &str) {
    println!("criterion {n} ({what}): PASS");
}

#[test]
fn criterion_01_generator_matrix_q5_m3() {
    let (stdout, code) = run(&["genmat", "--q", "5", "--m", "3", "--set", "orbit"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "# q=5 m=3 set=orbit order=lex\n\
         1 1 1 1 1 1 1 1 1 1\n\
         3 4 0 0 1 2 1 2 3 4\n\
         2 3 4 1 3 2 1 4 4 1\n\
         0 0 0 0 0 0 1 3 2 4\n"
    );
    // the matrix itself is built well under a millisecond
    let field = Field::prime(5).unwrap();
    let start = Instant::now();
    let built = build_code(&field, &enumerate_orbit_reps(&field, 3)).unwrap();
    assert!(start.elapsed() < Duration::from_millis(1), "took {:?}", start.elapsed());
    assert_eq!((built.n(), built.k()), (10, 4));
    pass(1, "reference 4x10 generator matrix, entry for entry");
}

#[test]
fn criterion_02_weight_hierarchy_q5_m3() {
    let start = Instant::now();
    let field = Field::prime(5).unwrap();
    let full = build_code(&field, &enumerate_distinguished(&field, 3)).unwrap();
    let orbit = build_code(&field, &enumerate_orbit_reps(&field, 3)).unwrap();
    for (code, want) in [(&full, vec![24u64, 42, 54, 60]), (&orbit, vec![4u64, 7, 9, 10])] {
        assert_eq!(generalized_hamming_weights(&field, code).unwrap(), want);
        assert_eq!(ghw_geometric(&field, code).unwrap(), want);
    }
    assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
    pass(2, "weight hierarchy (24,42,54,60) and (4,7,9,10) by two algorithms");
}

#[test]
fn criterion_03_zero_count_tables() {
    for q in [5u64, 7, 9, 4, 8] {
        let start = Instant::now();
        let field = Field::from_order(q).unwrap();
        let report = verify_m2_tables(&field);
        assert!(report.passed(), "q={q}: {:?}", report.checks);
        assert!(start.elapsed() < Duration::from_secs(5), "q={q} took {:?}", start.elapsed());
    }
    pass(3, "zero-count histograms for q in {5,7,9} and {4,8}");
}

#[test]
fn criterion_04_zero_bound_property_grid() {
    let start = Instant::now();
    for q in [2u64, 3, 4, 5, 7] {
        let field = Field::from_order(q).unwrap();
        for m in 1..=3usize.min(q as usize) {
            let report = verify_zero_bounds(&field, m, false);
            assert!(report.passed(), "q={q} m={m}: {:?}", report.checks);
        }
    }
    assert!(start.elapsed() < Duration::from_secs(120), "took {:?}", start.elapsed());
    pass(4, "zero-count bounds, equality condition and m! divisibility on the full grid");
}

#[test]
fn criterion_05_code_parameters_grid() {
    let start = Instant::now();
    for q in [3u64, 4, 5, 7, 8, 9] {
        let field = Field::from_order(q).unwrap();
        for m in 1..=4u64.min(q - 1) {
            for kind in [SetKind::FullDistinguished, SetKind::OrbitRepresentatives] {
                let set = match kind {
                    SetKind::FullDistinguished => enumerate_distinguished(&field, m as usize),
                    SetKind::OrbitRepresentatives => enumerate_orbit_reps(&field, m as usize),
                };
                let code = build_code(&field, &set).unwrap();
                let params = code_params(&field, &code).unwrap();
                let (n, k, d) = closed_form_params(q, m, kind).unwrap();
                assert_eq!(
                    (params.n as u128, params.k as u64, params.d as u128),
                    (n, k, d),
                    "q={q} m={m} {kind}"
                );
                let words = min_weight_words(&field, &code).unwrap();
                assert_eq!(words.len() as u64, q * (q - 1), "q={q} m={m} {kind}");
                let vecs: Vec<Vec<FieldElement>> =
                    words.into_iter().map(|(_, w)| w).collect();
                assert_eq!(rank(&field, &vecs), params.k, "q={q} m={m} {kind}");
            }
        }
    }
    assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    pass(5, "(n,k,d) closed forms and spanning minimum-weight words, m < q <= 9, m <= 4");
}

#[test]
fn criterion_06_weight_spectra_closed_forms() {
    let start = Instant::now();
    for q in [3u64, 4, 5, 7, 8, 9] {
        let field = Field::from_order(q).unwrap();
        let code = build_code(&field, &enumerate_distinguished(&field, 2)).unwrap();
        let brute = weight_distribution(&field, &code).unwrap();
        assert_eq!(brute, closed_form_m2_distribution(q).unwrap(), "q={q}");
    }
    for q in [4u64, 5, 7] {
        let field = Field::from_order(q).unwrap();
        let code = build_code(&field, &enumerate_distinguished(&field, 2)).unwrap();
        for r in 1..=3usize {
            let brute = higher_weight_spectra(&field, &code, r).unwrap();
            assert_eq!(brute, closed_form_m2_higher(q, r).unwrap(), "q={q} r={r}");
            let total: u128 = brute.values().sum();
            assert_eq!(total, gaussian_binomial(3, r as u64, q), "q={q} r={r}");
        }
    }
    assert!(start.elapsed() < Duration::from_secs(10), "took {:?}", start.elapsed());
    pass(6, "weight distributions and subcode spectra match their closed forms");
}

#[test]
fn criterion_07_extension_spectrum_q7() {
    let start = Instant::now();
    let field = Field::prime(7).unwrap();
    let code = build_code(&field, &enumerate_distinguished(&field, 2)).unwrap();
    let spectra = higher_weight_spectra_all(&field, &code).unwrap();
    let p2 = extension_spectrum(&spectra, 7, 2).unwrap();
    assert_eq!(p2, extension_closed_form_odd(7, 2).unwrap());
    assert_eq!(p2.values().sum::<u128>(), pow_u128(49, 3));
    let p1 = extension_spectrum(&spectra, 7, 1).unwrap();
    assert_eq!(p1, weight_distribution(&field, &code).unwrap());
    assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
    pass(7, "degree-2 extension spectrum at q=7 and its degenerate s=1 case");
}

#[test]
fn criterion_08_weight_hierarchy_bounds_grid() {
    for q in [3u64, 4, 5, 7, 8, 9] {
        let field = Field::from_order(q).unwrap();
        for m in 1..=4usize.min(q as usize - 1) {
            let report = verify_ghw_relations(&field, m);
            assert!(report.passed(), "q={q} m={m}: {:?}", report.checks);
        }
    }
    pass(8, "GHW upper bounds, top equalities and m! scaling across the grid");
}

#[test]
fn criterion_09_q5_m3_geometry() {
    let start = Instant::now();
    let report = verify_example_q5_m3();
    assert!(report.passed(), "{:?}", report.checks);
    assert!(start.elapsed() < Duration::from_secs(5), "took {:?}", start.elapsed());
    pass(9, "plane statistics, collinearity, dependent triples and word counts at q=5, m=3");
}

#[test]
fn criterion_10_jobs_determinism() {
    let cases: &[&[&str]] = &[
        &["params", "--q", "5", "--m", "2", "--set", "full"],
        &["params", "--q", "9", "--m", "3", "--set", "orbit", "--format", "json"],
        &["genmat", "--q", "5", "--m", "3", "--set", "orbit"],
        &["genmat", "--p", "2", "--e", "3", "--m", "2", "--set", "full", "--format", "csv"],
        &["zeroes", "--q", "5", "--coeffs", "3,0,1", "--list"],
        &["zeroes", "--q", "8", "--coeffs", "1,2,3", "--subset", "0,1,2,3,4", "--format", "json"],
        &["weight-dist", "--q", "7", "--m", "2", "--set", "full"],
        &["weight-dist", "--q", "5", "--m", "3", "--set", "orbit", "--format", "csv"],
        &["ghw", "--q", "5", "--m", "3", "--set", "orbit", "--witnesses"],
        &["spectra", "--q", "5", "--m", "2", "--set", "full", "--format", "json"],
        &["extend", "--q", "7", "--m", "2", "--s", "2"],
        &["verify", "--suite", "example"],
        &["verify", "--suite", "tables", "--q", "5", "--json"],
    ];
    for args in cases {
        let a = bin().args(*args).args(["--jobs", "1"]).output().expect("spawn");
        let b = bin().args(*args).args(["--jobs", "3"]).output().expect("spawn");
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
    }
    pass(10, "byte-identical output for every subcommand across --jobs values");
}
