use std::collections::BTreeMap;

use hurwitz::wop::{
    apply_reconstructed_linear, apply_tilde_hw, apply_tilde_w, apply_w2_explicit,
    apply_w3_explicit, apply_w_groupalg, degree_two_summation, OperatorTermTable,
};
use hurwitz::symfunc::PSeries;
use hurwitz::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn sparse_series(n: usize) -> impl Strategy<Value = PSeries> {
    let all = Partition::all_up_to(n);
    let pool = all.len();
    prop::collection::vec((0..pool, -4i64..=4, 1i64..=3), 0..5).prop_map(move |picks| {
        let mut s = PSeries::zero(n);
        for (idx, num, den) in picks {
            s.add_term(all[idx].clone(), q(num, den));
        }
        s
    })
}

#[test]
fn explicit_forms_match_the_group_algebra() {
    for alpha in Partition::all_up_to(7) {
        let f = PSeries::monomial(7, alpha.clone(), BigRational::one());
        assert_eq!(apply_w2_explicit(&f), apply_w_groupalg(2, &f), "alpha=({alpha})");
        assert_eq!(apply_w3_explicit(&f), apply_w_groupalg(3, &f), "alpha=({alpha})");
    }
}

#[test]
fn reconstruction_matches_the_group_algebra() {
    for d in 2..=4 {
        let table = OperatorTermTable::build(d, 7);
        for alpha in Partition::all_up_to(7) {
            let f = PSeries::monomial(7, alpha.clone(), BigRational::one());
            assert_eq!(
                apply_reconstructed_linear(&table, &f).unwrap(),
                apply_w_groupalg(d, &f),
                "d={d} alpha=({alpha})"
            );
        }
    }
}

#[test]
fn reconstruction_refuses_weights_beyond_the_table() {
    let table = OperatorTermTable::build(3, 4);
    let f = PSeries::monomial(6, p(&[5]), BigRational::one());
    assert!(apply_reconstructed_linear(&table, &f).is_err());
}

#[test]
fn degrees_are_bounded_and_the_top_degree_always_occurs() {
    for d in 2..=4 {
        let table = OperatorTermTable::build(d, 7);
        assert!(table.terms().iter().all(|t| t.degree <= d + 1), "d={d}");
        for m in d..=7 {
            assert!(
                table
                    .terms()
                    .iter()
                    .any(|t| t.degree == d + 1 && t.b.weight() == m),
                "d={d} m={m}"
            );
        }
    }
}

#[test]
fn transposition_terms_follow_cut_and_join() {
    let table = OperatorTermTable::build(2, 8);
    let c = |b: &[usize], a: &[usize]| table.get(&p(b), &p(a)).map(|t| t.c.clone());
    for i in 1..=4 {
        for j in i..=8 - i {
            let join = if i == j { q((i * i) as i64, 2) } else { q((i * j) as i64, 1) };
            assert_eq!(c(&[i, j], &[i + j]), Some(join), "join {i},{j}");
            let s = (i + j) as i64;
            let cut = if i == j { q(s, 2) } else { q(s, 1) };
            assert_eq!(c(&[i + j], &[i, j]), Some(cut), "cut {i},{j}");
        }
    }
    assert_eq!(table.len(), table.terms().iter().filter(|t| t.degree == 3).count());
}

/// The six-summation display for `W([3])` collected into `c(B, A)`.
fn three_cycle_normal_form(max: usize) -> BTreeMap<(Partition, Partition), BigRational> {
    let mut out: BTreeMap<(Partition, Partition), BigRational> = BTreeMap::new();
    let mut add = |b: &[usize], a: &[usize], c: usize| {
        *out.entry((p(b), p(a))).or_insert_with(BigRational::zero) += q(c as i64, 3);
    };
    for i in 1..=max {
        for j in 1..=max {
            for k in 1..=max {
                let s = i + j + k;
                if s > max {
                    continue;
                }
                add(&[i, j, k], &[s], i * j * k);
                add(&[i, j + k], &[i + k, j], i * (j + k));
                add(&[j, i + k], &[i + j, k], j * (i + k));
                add(&[k, i + j], &[k + j, i], k * (i + j));
                add(&[s], &[i, j, k], s);
                add(&[s], &[s], s);
            }
        }
    }
    out
}

#[test]
fn three_cycle_table_matches_the_display() {
    let expected = three_cycle_normal_form(7);
    let table = OperatorTermTable::build(3, 7);
    let got: BTreeMap<(Partition, Partition), BigRational> = table
        .terms()
        .iter()
        .map(|t| ((t.b.clone(), t.a.clone()), t.c.clone()))
        .collect();
    assert_eq!(got, expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn operators_are_linear(f in sparse_series(6), g in sparse_series(6), a in -3i64..=3) {
        let k = q(a, 2);
        let combo = f.scale(&k).add(&g).unwrap();
        for d in 2..=3 {
            let lhs = apply_w_groupalg(d, &combo);
            let rhs = apply_w_groupalg(d, &f).scale(&k).add(&apply_w_groupalg(d, &g)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        let table = OperatorTermTable::build(3, 6);
        let lhs = apply_reconstructed_linear(&table, &combo).unwrap();
        let rhs = apply_reconstructed_linear(&table, &f).unwrap().scale(&k)
            .add(&apply_reconstructed_linear(&table, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn top_degree_part_is_tilde_w_without_the_degree_two_sum(f in sparse_series(6)) {
        let t3 = OperatorTermTable::build(3, 6);
        let expected = apply_tilde_w(3, &f).unwrap().sub(&degree_two_summation(&f, false)).unwrap();
        prop_assert_eq!(apply_tilde_hw(3, &t3, &f).unwrap(), expected);
        let t2 = OperatorTermTable::build(2, 6);
        prop_assert_eq!(apply_tilde_hw(2, &t2, &f).unwrap(), apply_tilde_w(2, &f).unwrap());
    }
}

#[test]
fn tilde_hw_needs_a_complete_table() {
    let table = OperatorTermTable::build(3, 4);
    assert!(apply_tilde_hw(3, &table, &PSeries::zero(6)).is_err());
    assert!(apply_tilde_hw(2, &table, &PSeries::zero(4)).is_err());
}

#[test]
fn table_round_trips_through_json() {
    let table = OperatorTermTable::build(3, 5);
    let text = serde_json::to_string(&table).unwrap();
    let back: OperatorTermTable = serde_json::from_str(&text).unwrap();
    assert_eq!(back, table);
}
