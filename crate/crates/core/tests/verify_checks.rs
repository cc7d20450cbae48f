use hurwitz::factorize::{count_factorizations, DEFAULT_ENUMERATION_BUDGET};
use hurwitz::perm::mu;
use hurwitz::verify::{
    check_components, check_conjecture, check_cut_and_join_pde, check_three_cycle_pde, check_tilde_w3,
    generating_series,
};
use hurwitz::wop::degree_two_summation;
use hurwitz::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn residuals_vanish_at_six() {
    assert!(check_cut_and_join_pde(6).unwrap().pass);
    assert!(check_three_cycle_pde(6).unwrap().pass);
    assert!(check_tilde_w3(6, false).unwrap().pass);
    for d in 2..=3 {
        let r = check_conjecture(d, 6).unwrap();
        assert!(r.pass && !r.experimental, "d={d}");
    }
    assert!(check_conjecture(4, 6).unwrap().experimental);
}

#[test]
fn literal_reading_fails_by_a_fixed_multiple() {
    for n in 3..=6 {
        let f = generating_series(3, n).unwrap();
        let r = check_tilde_w3(n, true).unwrap();
        assert!(!r.pass);
        let expected = degree_two_summation(&f, false).scale(&BigRational::from_integer(BigInt::from(-2)));
        assert_eq!(r.residual, expected, "N={n}");
    }
}

#[test]
fn two_routes_to_the_three_cycle_equation_agree() {
    for n in 0..=6 {
        let a = check_tilde_w3(n, false).unwrap();
        let b = check_conjecture(3, n).unwrap();
        assert_eq!(a.residual, b.residual, "N={n}");
    }
}

#[test]
fn conjecture_rejects_degree_one() {
    assert!(check_conjecture(1, 3).is_err());
}

#[test]
fn component_histograms_partition_the_counts() {
    let report = check_components(5, DEFAULT_ENUMERATION_BUDGET).unwrap();
    assert!(report.skipped.is_empty());
    assert_eq!(report.case4_total, 0);
    for row in &report.rows {
        let h = count_factorizations(row.alpha.weight(), 3, row.k, &row.alpha, true).unwrap();
        assert_eq!(BigInt::from(row.histogram.total()), BigInt::from(h), "alpha=({})", row.alpha);
    }
    let row = |a: Partition| report.rows.iter().find(|r| r.alpha == a).unwrap().histogram.clone();
    // p_1^3 only comes from cutting a 3-cycle, p_3 only from joining three fixed points
    let ones = row(Partition::ones(3));
    assert_eq!(ones.leading_type(3), ones.total());
    assert_eq!(ones.total(), 2);
    let three = row(Partition::single(3));
    assert_eq!(three.leading_type(1), three.total());
    assert!(report.pass());
}

#[test]
fn component_rows_cover_every_admissible_type() {
    let report = check_components(4, DEFAULT_ENUMERATION_BUDGET).unwrap();
    let expected: Vec<Partition> = Partition::all_up_to(4)
        .into_iter()
        .filter(|a| matches!(mu(3, a).as_usize(), Some(k) if k > 0))
        .collect();
    let mut covered = report.covered();
    covered.sort();
    let mut expected = expected;
    expected.sort();
    assert_eq!(covered, expected);
    assert!(report.eq2_literal.pass);
    assert!(!report.eq2_index_consistent.pass);
}

#[test]
fn tiny_budgets_skip_instead_of_failing() {
    let report = check_components(5, 10).unwrap();
    assert!(!report.skipped.is_empty());
    assert!(!report.pass());
}
