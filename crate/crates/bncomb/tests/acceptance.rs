//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line. All comparisons are coefficient-exact; every tolerance
//! is zero.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bncomb::ediagrams::{
    compact_of_perm, compactify, compactify_by_moves, enumerate_ediagrams, phi, EDiagram,
};
use bncomb::frobenius::{
    group_order, irr_dim, irr_labels, mult_bigraded, verify_corollary, verify_flip_symmetry,
    verify_genfunction, verify_ogenfunction, verify_product_formula, verify_psi_positivity,
    verify_psi_suite, verify_table3, VerifyReport,
};
use bncomb::group_core::{enumerate_bn, SignedPerm};
use bncomb::odiagrams::{
    compact_o_of_perm, enumerate_odiagrams, phi_o, phi_o_inverse, psi, ODiagram,
};
use bncomb::polyring::{
    expand_straightened, monomial_invariant, straighten, DiagPoly, ReductionOrder,
};
use bncomb::symfunc::{coeff_int, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Runs one criterion, printing exactly one summary line, and re-raises
/// any failure so the test stays red.
fn criterion(
    number: u32,
    label: &str,
    budget: Duration,
    body: impl FnOnce() + std::panic::UnwindSafe,
) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    let in_budget = elapsed <= budget;
    match (&outcome, in_budget) {
        (Ok(()), true) => println!("ACCEPTANCE {number} [{label}]: PASS ({elapsed:.2?})"),
        (Ok(()), false) => {
            println!(
                "ACCEPTANCE {number} [{label}]: FAIL (over budget: {elapsed:.2?} > {budget:.2?})"
            );
            panic!("criterion {number} exceeded its runtime budget");
        }
        (Err(_), _) => println!("ACCEPTANCE {number} [{label}]: FAIL ({elapsed:.2?})"),
    }
    if let Err(cause) = outcome {
        resume_unwind(cause);
    }
}

fn perm(window: &str) -> SignedPerm {
    SignedPerm::parse(window).expect("well-formed window")
}

fn ediagram(a: &[u32], b: &[u32]) -> EDiagram {
    EDiagram::from_rows(a, b).expect("well-formed e-diagram")
}

#[test]
fn criterion_1_compact_diagram_table() {
    criterion(
        1,
        "n=2 compact e-diagram table",
        Duration::from_secs(1),
        || {
            let table: [(&str, [u32; 2], [u32; 2]); 8] = [
                ("1 2", [1, 1], [1, 1]),
                ("-1 2", [0, 1], [0, 1]),
                ("1 -2", [1, 2], [1, 2]),
                ("-1 -2", [0, 0], [0, 0]),
                ("2 1", [1, 3], [3, 1]),
                ("-2 1", [0, 1], [2, 1]),
                ("2 -1", [1, 2], [1, 0]),
                ("-2 -1", [0, 2], [2, 0]),
            ];
            for (window, a, b) in table {
                assert_eq!(
                    compact_of_perm(&perm(window)),
                    ediagram(&a, &b),
                    "compact diagram of {window}"
                );
            }
        },
    );
}

#[test]
fn criterion_2_invariant_basis_b2() {
    criterion(
        2,
        "n=2 monomial invariant basis",
        Duration::from_secs(1),
        || {
            let table: [(&str, &[[u32; 4]]); 8] = [
                ("1 2", &[[1, 1, 1, 1]]),
                ("-1 2", &[[1, 1, 0, 0], [0, 0, 1, 1]]),
                ("1 -2", &[[1, 1, 2, 2], [2, 2, 1, 1]]),
                ("-1 -2", &[[0, 0, 0, 0]]),
                ("2 1", &[[1, 3, 3, 1], [3, 1, 1, 3]]),
                ("-2 1", &[[0, 2, 1, 1], [1, 1, 0, 2]]),
                ("2 -1", &[[1, 1, 2, 0], [2, 0, 1, 1]]),
                ("-2 -1", &[[0, 2, 2, 0], [2, 0, 0, 2]]),
            ];
            for (window, monomials) in table {
                let mut expected = DiagPoly::zero(2);
                for exps in monomials {
                    expected = expected
                        .add(&DiagPoly::monomial(2, exps.to_vec(), coeff_int(1)))
                        .expect("matching sizes");
                }
                assert_eq!(
                    monomial_invariant(&compact_of_perm(&perm(window))),
                    expected,
                    "basis polynomial of {window}"
                );
            }
        },
    );
}

#[test]
fn criterion_3_multiplicity_table_n3() {
    criterion(
        3,
        "n=3 graded multiplicity table",
        Duration::from_secs(5),
        || {
            let report = verify_table3();
            assert!(report.is_pass(), "table3 report: {:?}", report.to_json());
        },
    );
}

#[test]
fn criterion_4_worked_compactification() {
    criterion(
        4,
        "worked 9-cell compactification",
        Duration::from_secs(1),
        || {
            let d = ediagram(&[0, 0, 1, 2, 2, 6, 8, 9, 9], &[0, 0, 5, 6, 6, 4, 0, 5, 9]);
            let compact = ediagram(&[0, 0, 1, 2, 2, 4, 6, 7, 7], &[0, 0, 3, 4, 4, 2, 0, 3, 5]);
            let beta = perm("-1 -2 5 -7 -8 -4 -3 6 9");
            assert_eq!(compactify(&d), compact);
            assert_eq!(d.classifying_perm(), beta);
            assert_eq!(compact.classifying_perm(), beta);
            let decomposition = phi(&d).expect("weights pair up");
            assert_eq!(decomposition.compact, compact);
            assert_eq!(decomposition.lambda, Partition::new(vec![4]).unwrap());
            assert_eq!(decomposition.mu, Partition::new(vec![6, 1]).unwrap());
            let image = psi(&compact).expect("compact input");
            let expected =
                ODiagram::from_rows(&[0, 0, 1, 2, 2, 4, 6, 7, 7], &[1, 3, 6, 9, 11, 5, 5, 8, 12])
                    .unwrap();
            assert_eq!(image, expected);
            assert_eq!(image.colabel_classifying_perm(), beta);
        },
    );
}

#[test]
fn criterion_5_worked_straightening() {
    criterion(
        5,
        "worked straightening with certificate",
        Duration::from_secs(1),
        || {
            let d = ediagram(&[1, 4], &[3, 4]);
            let form = straighten(&d).expect("terminates");
            let expected = vec![
                (
                    Partition::new(vec![1]).unwrap(),
                    Partition::new(vec![1, 1]).unwrap(),
                    perm("1 -2"),
                    coeff_int(1),
                ),
                (
                    Partition::new(vec![1, 1]).unwrap(),
                    Partition::new(vec![1, 1]).unwrap(),
                    perm("-2 1"),
                    coeff_int(-1),
                ),
            ];
            assert_eq!(form.terms(), expected.as_slice());
            // Exactness certificate: the expansion reproduces the invariant.
            assert_eq!(expand_straightened(&form), monomial_invariant(&d));
        },
    );
}

#[test]
fn criterion_6_generating_function_identities() {
    criterion(
        6,
        "generating-function identities",
        Duration::from_secs(120),
        || {
            let mut reports: Vec<VerifyReport> = Vec::new();
            for n in 1..=4 {
                reports.push(verify_genfunction(n, 2 * n * n));
                reports.push(verify_ogenfunction(n, 2 * n * n));
            }
            for n in 1..=6 {
                reports.push(verify_product_formula(n));
            }
            for n in 1..=5 {
                reports.push(verify_corollary(n));
            }
            for report in reports {
                assert!(
                    report.is_pass(),
                    "identity {} failed at n = {}: {:?}",
                    report.identity,
                    report.n,
                    report.to_json()
                );
            }
        },
    );
}

/// Optional extension of criterion 6 to n = 5 within a two-minute budget.
#[test]
#[ignore = "optional large case; run with --ignored (about a minute)"]
fn criterion_6_optional_n5() {
    criterion(
        6,
        "generating-function identities at n=5",
        Duration::from_secs(120),
        || {
            assert!(verify_genfunction(5, 50).is_pass(), "genfunction n = 5");
            assert!(verify_ogenfunction(5, 50).is_pass(), "ogenfunction n = 5");
        },
    );
}

#[test]
fn criterion_7_structure_counts() {
    criterion(
        7,
        "compact diagram and basis counts",
        Duration::from_secs(60),
        || {
            for n in 1..=4u32 {
                let order = group_order(n) as usize;
                let group = enumerate_bn(n as usize).unwrap();
                let bound = 2 * n - 1;

                let from_perms: std::collections::BTreeSet<EDiagram> =
                    group.iter().map(compact_of_perm).collect();
                assert_eq!(
                    from_perms.len(),
                    order,
                    "distinct compact e-diagrams, n = {n}"
                );
                let compact_count = enumerate_ediagrams(n as usize, bound)
                    .unwrap()
                    .into_iter()
                    .filter(EDiagram::is_compact)
                    .count();
                assert_eq!(
                    compact_count, order,
                    "compact e-diagrams by census, n = {n}"
                );

                let o_from_perms: std::collections::BTreeSet<ODiagram> =
                    group.iter().map(compact_o_of_perm).collect();
                assert_eq!(
                    o_from_perms.len(),
                    order,
                    "distinct compact o-diagrams, n = {n}"
                );
                let o_count = enumerate_odiagrams(n as usize, bound)
                    .unwrap()
                    .into_iter()
                    .filter(ODiagram::is_compact)
                    .count();
                assert_eq!(o_count, order, "compact o-diagrams by census, n = {n}");

                let leading: std::collections::BTreeSet<Vec<u32>> = group
                    .iter()
                    .map(|beta| {
                        let poly = monomial_invariant(&compact_of_perm(beta));
                        let (exps, coeff) = poly.leading_monomial().expect("nonzero");
                        assert_eq!(coeff, &coeff_int(1));
                        exps.clone()
                    })
                    .collect();
                assert_eq!(leading.len(), order, "distinct leading monomials, n = {n}");
            }
        },
    );
}

#[test]
fn criterion_8_property_suites() {
    criterion(
        8,
        "oracle-certified property suites",
        Duration::from_secs(300),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0);

            // Move-order confluence: 500 random 3-cell diagrams, 20 random
            // reduction orders each, all reaching the canonical compact form.
            for _ in 0..500 {
                let cells: Vec<(u32, u32)> = (0..3)
                    .map(|_| {
                        let a = rng.gen_range(0..=8u32);
                        let b = 2 * rng.gen_range(0..=3u32) + (a % 2);
                        (a, b)
                    })
                    .collect();
                let a_row: Vec<u32> = cells.iter().map(|c| c.0).collect();
                let b_row: Vec<u32> = cells.iter().map(|c| c.1).collect();
                let d = EDiagram::from_rows(&a_row, &b_row).unwrap();
                let canonical = compactify(&d);
                assert!(canonical.is_compact());
                for _ in 0..20 {
                    let reached = compactify_by_moves(&d, |moves| rng.gen_range(0..moves.len()));
                    assert_eq!(reached, canonical, "confluence from {d:?}");
                }
            }

            // Decomposition round-trips on exhaustive small domains.
            for (n, bound) in [(1usize, 6u32), (2, 4), (3, 3)] {
                for d in enumerate_ediagrams(n, bound).unwrap() {
                    let parts = phi(&d).expect("pairing succeeds on valid e-diagrams");
                    let back = bncomb::ediagrams::phi_inverse(&parts).unwrap();
                    assert_eq!(back, d, "phi round-trip, n = {n}");
                }
                for d in enumerate_odiagrams(n, bound).unwrap() {
                    let parts = phi_o(&d).expect("pairing succeeds on valid o-diagrams");
                    let back = phi_o_inverse(&parts).unwrap();
                    assert_eq!(back, d, "phi_o round-trip, n = {n}");
                }
            }

            // Straightening round-trip exactness on every small e-diagram,
            // under both admissible recursion orders.
            for n in 1..=3usize {
                for d in enumerate_ediagrams(n, 5).unwrap() {
                    let form = straighten(&d).expect("terminates");
                    assert_eq!(
                        expand_straightened(&form),
                        monomial_invariant(&d),
                        "round trip for {d:?}"
                    );
                    let input = std::collections::BTreeMap::from([(d.clone(), coeff_int(1))]);
                    let other = bncomb::polyring::straighten_combination(
                        n,
                        &input,
                        ReductionOrder::LexLargestFirst,
                    )
                    .expect("terminates");
                    assert_eq!(form, other, "order independence for {d:?}");
                }
            }

            // Degree-reversal symmetry of graded multiplicities.
            for n in 1..=4 {
                assert!(verify_flip_symmetry(n).is_pass(), "flip symmetry, n = {n}");
            }

            // Multiplicity polynomials evaluate at q = t = 1 to the
            // regular-representation dimension count.
            for n in 1..=3u32 {
                for l in irr_labels(n) {
                    let total = mult_bigraded(&l).sum_coeffs();
                    let expected = group_order(n) * irr_dim(&l);
                    assert_eq!(total, coeff_int(expected as i64), "dimension of {l}");
                }
            }

            // Normalized multiplicity positivity: exhaustive for n <= 2, a
            // seed-0 sample of labels at n = 3.
            for n in 1..=2 {
                assert!(verify_psi_suite(n).is_pass(), "psi suite, n = {n}");
            }
            let labels = irr_labels(3);
            for _ in 0..4 {
                let l = &labels[rng.gen_range(0..labels.len())];
                assert!(
                    verify_psi_positivity(&l.lam, &l.rho, 3).is_pass(),
                    "psi positivity for {l}"
                );
            }
        },
    );
}
