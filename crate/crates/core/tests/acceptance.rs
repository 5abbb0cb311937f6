//! Acceptance suite: every shipped guarantee, one test per criterion, each
//! printing a pass/fail line. Sizes and tolerances are pinned here; all
//! comparisons are exact (invariant-factor equality).

use piclat_core::verify::{self, SuiteReport};

fn assert_suite(criterion: &str, report: &SuiteReport) {
    if report.ok() {
        println!("acceptance {}: PASS ({} checks)", criterion, report.cases);
    } else {
        println!("acceptance {}: FAIL", criterion);
        for f in report.failures.iter().take(20) {
            println!("  {}", f);
        }
    }
    assert!(report.ok(), "{} failed: {:?}", criterion, report.failures.first());
}

#[test]
fn acceptance_01_type_a_sweep() {
    let rows = verify::sweep_type_a(12).unwrap();
    assert_suite("01 type-A sweep (n <= 12, all r | s | n, all classes)",
        &SuiteReport::from_rows("type-a", &rows));
}

#[test]
fn acceptance_02_bc_sweep() {
    let rows = verify::sweep_bc(8).unwrap();
    assert_suite("02 B/C sweep (2 <= l <= 8, all isogenies and classes)",
        &SuiteReport::from_rows("bc", &rows));
}

#[test]
fn acceptance_03_d_sweep() {
    let rows = verify::sweep_d(10).unwrap();
    assert_suite("03 D sweep (3 <= l <= 10, all isogenies and classes)",
        &SuiteReport::from_rows("d", &rows));
}

#[test]
fn acceptance_04_exceptional_sweep() {
    let rows = verify::sweep_exceptional().unwrap();
    assert_suite("04 exceptional sweep (E6/E7/E8/F4/G2, all classes)",
        &SuiteReport::from_rows("exceptional", &rows));
}

#[test]
fn acceptance_05_torus_closed_forms() {
    assert_suite("05 torus closed forms (dim <= 3, g <= 6, |entries| <= 20)",
        &verify::torus_suite().unwrap());
}

#[test]
fn acceptance_06_image_invariant_factors() {
    assert_suite("06 invariant factors of the unmarked Picard image",
        &verify::suite_im_factors().unwrap());
}

#[test]
fn acceptance_07_order_identities() {
    assert_suite("07 cokernel order identities and marked-case isomorphism",
        &verify::suite_order_identities().unwrap());
}

#[test]
fn acceptance_08_rank_bookkeeping() {
    assert_suite("08 Picard/NS rank bookkeeping",
        &verify::suite_rank_bookkeeping().unwrap());
}

#[test]
fn acceptance_09_weyl_bruteforce() {
    assert_suite("09 brute-force Weyl certificates at rank <= 3",
        &verify::suite_weyl_bruteforce().unwrap());
}

#[test]
fn acceptance_10_functoriality() {
    assert_suite("10 pullback composition and lift independence",
        &verify::suite_functoriality(50, 100).unwrap());
}

#[test]
fn acceptance_11_gl_sanity() {
    assert_suite("11 GL_n gcd obstruction (2 <= n <= 8, |d| <= 8)",
        &verify::suite_gl_sanity().unwrap());
}
