//! The printed tables against the derived channels.

mod common;

use rindler_qt::crosscheck::report::{check_table, run_check};
use rindler_qt::crosscheck::{
    compare, derived_matrix, evaluate_printed_table, TableId, TableInput,
};
use rindler_qt::families::FamilySpec;
use rindler_qt::fano::{density_to_fano, validate_state};
use rindler_qt::linalg::{BipartiteState, ComplexMatrix, C64};
use rindler_qt::random::{random_r, random_state, rng};
use rindler_qt::tol::TABLE_MATCH;

use common::r;

fn labels_failing(id: TableId, seed: u64) -> Vec<String> {
    let s = check_table(id, seed, 100, TABLE_MATCH).unwrap();
    let mut v: Vec<String> = s
        .entries
        .iter()
        .filter(|e| !e.matched())
        .map(|e| e.label.clone())
        .collect();
    v.sort();
    v
}

#[test]
fn appendix_a_fails_on_exactly_nine_elements() {
    assert_eq!(
        labels_failing(TableId::AppendixA, 1),
        ["00,00", "00,11", "01,10", "02,12", "10,00", "11,10", "12,00", "12,10", "12,11"]
    );
}

#[test]
fn appendix_a_plus_minus_glyph_matches_under_one_reading() {
    let s = check_table(TableId::AppendixA, 2, 100, TABLE_MATCH).unwrap();
    let e = s
        .entries
        .iter()
        .find(|e| e.reading_max_abs_diffs.len() == 2)
        .unwrap();
    assert!(e.matched());
    assert!(e.reading_max_abs_diffs.iter().any(|(_, d)| *d > 1e-3));
}

#[test]
fn eq7_and_eq17_fully_match() {
    for id in [TableId::Eq7, TableId::Eq17] {
        let s = check_table(id, 3, 100, TABLE_MATCH).unwrap();
        assert!(s.all_matched(), "{id}: {:?}", s.entries[0]);
        assert!(s.max_abs_diff <= 1e-12);
    }
}

#[test]
fn eq10_vacuum_up_flag_tracks_the_typo_condition() {
    let report = |rho: ComplexMatrix, x: f64| {
        let input =
            TableInput::Fano(density_to_fano(&BipartiteState::new(rho, 2, 3).unwrap()).unwrap());
        let rep = compare(TableId::Eq10, &input, None, Some(r(x)), TABLE_MATCH).unwrap();
        rep.entries
            .into_iter()
            .find(|e| e.label == "0U,0U")
            .unwrap()
    };
    let mut g = rng(5);
    for _ in 0..20 {
        let s = random_state(&mut g, 3);
        let x = random_r(&mut g).value().max(1e-3);
        let e = report(s.rho().clone(), x);
        let (c, sn) = (x.cos(), x.sin());
        let expected = c * c * sn * sn * (s.rho()[(0, 1)] - s.rho()[(0, 0)]).norm();
        assert!(!e.matched);
        assert!((e.abs_diff - expected).abs() < 1e-12);
    }
    // equal elements: (|00> + |01>)/sqrt 2 has varrho_{00,00} = varrho_{00,01}
    let v = [
        C64::new(0.5f64.sqrt(), 0.0),
        C64::new(0.5f64.sqrt(), 0.0),
        C64::default(),
        C64::default(),
        C64::default(),
        C64::default(),
    ];
    assert!(report(ComplexMatrix::projector(&v), 0.5).matched);
    // r_t = 0 removes the s_t^2 factor
    assert!(report(random_state(&mut g, 3).into_matrix(), 0.0).matched);
}

#[test]
fn eq20_verbatim_loses_weight_at_zero_acceleration() {
    let input = TableInput::Family(FamilySpec::TwoParameter {
        alpha: 0.0,
        gamma: 0.0,
    });
    let printed = evaluate_printed_table(TableId::Eq20, &input, Some(r(0.0)), None).unwrap();
    let derived = derived_matrix(TableId::Eq20, &input, Some(r(0.0)), None).unwrap();
    let diag = |m: &ComplexMatrix| (0..6).map(|i| m[(i, i)].re).collect::<Vec<_>>();
    let third = 1.0 / 3.0;
    let sixth = 1.0 / 6.0;
    for (got, want) in diag(&printed)
        .iter()
        .zip([third, sixth, 0.0, 0.0, third, 0.0])
    {
        assert!((got - want).abs() < 1e-15);
    }
    for (got, want) in diag(&derived)
        .iter()
        .zip([third, sixth, 0.0, sixth, third, 0.0])
    {
        assert!((got - want).abs() < 1e-15);
    }
}

#[test]
fn derived_columns_are_states_for_physical_inputs() {
    let mut g = rng(6);
    for id in TableId::ALL {
        if id == TableId::AppendixA || matches!(id, TableId::Eq14 | TableId::Eq15) {
            continue;
        }
        let t = rindler_qt::crosscheck::report::sample_trial(id, &mut g);
        let m = derived_matrix(id, &t.input, t.r_q, t.r_t).unwrap();
        assert!(validate_state(&m, 1e-12, 1e-10).is_physical, "{id}");
    }
}

#[test]
fn every_printed_entry_is_reported() {
    let report = run_check(&TableId::ALL, 7, 3, TABLE_MATCH).unwrap();
    let counts: Vec<usize> = report.tables.iter().map(|t| t.total_count).collect();
    assert_eq!(counts, [36, 36, 64, 52, 10, 16, 10, 16, 8, 12, 12]);
    for t in &report.tables {
        assert!(t
            .entries
            .windows(2)
            .all(|w| w[0].max_abs_diff >= w[1].max_abs_diff));
    }
}

#[test]
fn reports_are_reproducible() {
    let a = serde_json::to_string(
        &run_check(&[TableId::Eq7, TableId::Eq11B], 42, 10, TABLE_MATCH).unwrap(),
    )
    .unwrap();
    let b = serde_json::to_string(
        &run_check(&[TableId::Eq7, TableId::Eq11B], 42, 10, TABLE_MATCH).unwrap(),
    )
    .unwrap();
    assert_eq!(a, b);
}
