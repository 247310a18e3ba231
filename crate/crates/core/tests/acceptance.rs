//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the lines appear in
//! plain `cargo test` output.

mod common;

use std::f64::consts::FRAC_PI_4;
use std::process::{Command, ExitCode};
use std::time::Instant;

use common::r;
use rindler_qt::cli::{preset_state, sweep, ModeName, SweepConfig, Target};
use rindler_qt::crosscheck::report::check_table;
use rindler_qt::crosscheck::{compare, TableId, TableInput};
use rindler_qt::entanglement::negativity;
use rindler_qt::families::one_parameter;
use rindler_qt::fano::{appendix_a_density, density_to_fano, fano_to_density, validate_state};
use rindler_qt::linalg::{hermitian_eigenvalues, BipartiteState, ComplexMatrix, C64};
use rindler_qt::random::{random_fano, random_product_state, random_r, random_state, rng};
use rindler_qt::rindler::{
    accelerate, accelerate_both, accelerate_qubit, accelerate_qutrit, choi_matrix, ChannelMode,
};
use rindler_qt::tol::TABLE_MATCH;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let mut g = rng(1001);
    let worst = (0..100)
        .map(|_| {
            let p = random_fano(&mut g);
            fano_to_density(&p)
                .rho()
                .max_abs_diff(appendix_a_density(&p).rho())
        })
        .fold(0.0, f64::max);
    outcome(
        worst <= 1e-12,
        format!("max elementwise diff {worst:.2e} over 100 parameter sets"),
    )
}

fn criterion_2() -> Outcome {
    let mut g = rng(1002);
    let rs: Vec<f64> = (0..20).map(|i| FRAC_PI_4 * i as f64 / 19.0).collect();
    let (mut trace_dev, mut min_eig) = (0.0f64, f64::INFINITY);
    for _ in 0..100 {
        let s = random_state(&mut g, 3);
        for (i, x) in rs.iter().enumerate() {
            for mode in [
                ChannelMode::QubitOnly { r_q: r(*x) },
                ChannelMode::QutritOnly { r_t: r(*x) },
                ChannelMode::Both {
                    r_q: r(*x),
                    r_t: r(rs[19 - i]),
                },
            ] {
                let out = accelerate(&s, mode).unwrap();
                let report = validate_state(out.rho(), 1e-12, 1e-10);
                trace_dev = trace_dev.max(report.trace_deviation);
                min_eig = min_eig.min(report.min_eigenvalue);
            }
        }
    }
    let mut choi_min = f64::INFINITY;
    for x in [0.0, 0.4, FRAC_PI_4] {
        for mode in [
            ChannelMode::QubitOnly { r_q: r(x) },
            ChannelMode::QutritOnly { r_t: r(x) },
            ChannelMode::Both {
                r_q: r(x),
                r_t: r(x),
            },
        ] {
            let choi = choi_matrix(mode, 3).unwrap();
            choi_min =
                choi_min.min(hermitian_eigenvalues(&choi.hermitian_part(), 1e-13).unwrap()[0]);
        }
    }
    outcome(
        trace_dev <= 1e-12 && min_eig >= -1e-10 && choi_min >= -1e-10,
        format!("max |tr-1| {trace_dev:.2e}, min eigenvalue {min_eig:.2e}, min Choi eigenvalue {choi_min:.2e}"),
    )
}

fn criterion_3() -> Outcome {
    let mut g = rng(1003);
    let zero = r(0.0);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let s = random_state(&mut g, 3);
        let e = negativity(&s).unwrap().negativity;
        for mode in [
            ChannelMode::QubitOnly { r_q: zero },
            ChannelMode::QutritOnly { r_t: zero },
            ChannelMode::Both {
                r_q: zero,
                r_t: zero,
            },
        ] {
            let after = negativity(&accelerate(&s, mode).unwrap())
                .unwrap()
                .negativity;
            worst = worst.max((after - e).abs());
        }
    }
    outcome(
        worst <= 1e-10,
        format!("max |E(r=0) - E| {worst:.2e} over 100 states x 3 channels"),
    )
}

fn criterion_4() -> Outcome {
    let mut g = rng(1004);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let s = random_state(&mut g, 3);
        let (r_q, r_t) = (random_r(&mut g), random_r(&mut g));
        let joint = accelerate_both(&s, r_q, r_t).unwrap();
        let composed = accelerate_qubit(&accelerate_qutrit(&s, r_t).unwrap(), r_q).unwrap();
        worst = worst.max(joint.rho().max_abs_diff(composed.rho()));
    }
    outcome(
        worst <= 1e-12,
        format!("max elementwise diff {worst:.2e} over 50 (state, r_q, r_t)"),
    )
}

fn vacuum_up_flagged(rho: ComplexMatrix, x: f64) -> bool {
    let input =
        TableInput::Fano(density_to_fano(&BipartiteState::new(rho, 2, 3).unwrap()).unwrap());
    let report = compare(TableId::Eq10, &input, None, Some(r(x)), TABLE_MATCH).unwrap();
    !report
        .entries
        .iter()
        .find(|e| e.label == "0U,0U")
        .unwrap()
        .matched
}

fn criterion_5() -> Outcome {
    let appendix = check_table(TableId::AppendixA, 1005, 100, TABLE_MATCH).unwrap();
    let eq7 = check_table(TableId::Eq7, 1005, 100, TABLE_MATCH).unwrap();

    // flag <=> varrho_{00,00} != varrho_{00,01}, for r_t > 0
    let mut g = rng(1005);
    let mut flag_ok = true;
    for _ in 0..100 {
        let s = random_state(&mut g, 3);
        let x = random_r(&mut g).value().max(1e-3);
        flag_ok &= vacuum_up_flagged(s.into_matrix(), x);
    }
    let h = C64::new(0.5f64.sqrt(), 0.0);
    let equal = ComplexMatrix::projector(&[
        h,
        h,
        C64::default(),
        C64::default(),
        C64::default(),
        C64::default(),
    ]);
    flag_ok &= !vacuum_up_flagged(equal, 0.5);
    flag_ok &= !vacuum_up_flagged(one_parameter(0.0).unwrap().into_matrix(), 0.5);

    let failing: Vec<&str> = appendix
        .entries
        .iter()
        .filter(|e| !e.matched())
        .map(|e| e.label.as_str())
        .collect();
    outcome(
        appendix.all_matched() && eq7.all_matched() && flag_ok,
        format!(
            "APPENDIX_A {}/{} (max diff {:.2e}; mismatching {}), EQ7 {}/{} (max diff {:.2e}), EQ10 (0U,0U) flag {}",
            appendix.match_count,
            appendix.total_count,
            appendix.max_abs_diff,
            if failing.is_empty() { "none".to_string() } else { failing.join(" ") },
            eq7.match_count,
            eq7.total_count,
            eq7.max_abs_diff,
            if flag_ok { "ok" } else { "WRONG" }
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for preset in [Target::Fig1a, Target::Fig1b, Target::Fig2, Target::Fig3] {
        let cfg = SweepConfig {
            state: preset_state(preset),
            modes: ModeName::ALL.to_vec(),
            points: 64,
            fixed_r_q: None,
            fixed_r_t: None,
            grid2d: false,
        };
        let out = sweep(&cfg).unwrap();
        let rise = (0..3)
            .flat_map(|c| out.rows.windows(2).map(move |w| w[1][c] - w[0][c]))
            .fold(f64::NEG_INFINITY, f64::max);
        pass &= rise <= 1e-9;
        notes.push(format!("{preset:?} max step {rise:+.1e}"));
        if preset == Target::Fig2 {
            let order = out.rows[1..].iter().all(|row| row[0] >= row[1] - 1e-9);
            pass &= order;
            let both_below = out.rows[1..]
                .iter()
                .filter(|row| row[2] <= row[0].min(row[1]) + 1e-9)
                .count();
            let last = out.rows.last().unwrap();
            let end_holds = last[2] <= last[0].min(last[1]) + 1e-9;
            pass &= !end_holds || both_below == out.rows.len() - 1;
            notes.push(format!(
                "fig2 E_qubit>=E_qutrit {}, E_both<=min at {}/{} points",
                if order { "holds" } else { "VIOLATED" },
                both_below,
                out.rows.len() - 1
            ));
        }
    }
    outcome(pass, notes.join("; "))
}

fn criterion_7() -> Outcome {
    let e_pure = negativity(&one_parameter(0.0).unwrap()).unwrap().negativity;
    let mut g = rng(1007);
    let worst = (0..100)
        .map(|_| {
            negativity(&random_product_state(&mut g, 3))
                .unwrap()
                .negativity
                .abs()
        })
        .fold(0.0, f64::max);
    outcome(
        (e_pure - 1.0).abs() <= 1e-10 && worst <= 1e-10,
        format!("E(one_parameter(0)) = {e_pure:.12}, max |E| over 100 product states {worst:.2e}"),
    )
}

fn criterion_8(started: Instant) -> Outcome {
    let bin = env!("CARGO_BIN_EXE_rindler-qt");
    let dir = std::env::temp_dir().join(format!("rindler-qt-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = |tag: &str| {
        dir.join(format!("{tag}.csv"))
            .to_string_lossy()
            .into_owned()
    };
    let commands: Vec<(String, Vec<String>)> = vec![
        (
            "sweep fig1a".into(),
            vec!["sweep".into(), "fig1a".into(), "--out".into(), csv("fig1a")],
        ),
        (
            "sweep fig1b".into(),
            vec!["sweep".into(), "fig1b".into(), "--out".into(), csv("fig1b")],
        ),
        (
            "sweep fig2".into(),
            vec!["sweep".into(), "fig2".into(), "--out".into(), csv("fig2")],
        ),
        (
            "sweep fig3".into(),
            vec!["sweep".into(), "fig3".into(), "--out".into(), csv("fig3")],
        ),
        (
            "sweep grid2d".into(),
            vec![
                "sweep".into(),
                "fig2".into(),
                "--grid2d".into(),
                "--points".into(),
                "16".into(),
            ],
        ),
        (
            "check".into(),
            vec![
                "check".into(),
                "--seed".into(),
                "42".into(),
                "--json".into(),
            ],
        ),
        (
            "inspect".into(),
            vec![
                "inspect".into(),
                "fig3".into(),
                "--mode".into(),
                "both".into(),
                "--rq".into(),
                "0.3".into(),
                "--rt".into(),
                "0.6".into(),
            ],
        ),
    ];
    let mut mismatched = Vec::new();
    for (name, args) in &commands {
        let snapshot = || {
            let out = Command::new(bin).args(args).output().expect("binary runs");
            let mut bytes = out.stdout;
            if let Some(i) = args.iter().position(|a| a == "--out") {
                let path = std::path::Path::new(&args[i + 1]);
                for ext in ["csv", "json", "gp"] {
                    bytes.extend(std::fs::read(path.with_extension(ext)).unwrap());
                }
            }
            (out.status.code(), bytes)
        };
        if snapshot() != snapshot() {
            mismatched.push(name.as_str());
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    let elapsed = started.elapsed().as_secs_f64();
    outcome(
        mismatched.is_empty() && elapsed < 60.0,
        format!(
            "{} commands re-run byte-identical{}, suite time {elapsed:.1} s",
            commands.len() - mismatched.len(),
            if mismatched.is_empty() {
                String::new()
            } else {
                format!(" (differ: {})", mismatched.join(", "))
            }
        ),
    )
}

fn main() -> ExitCode {
    let started = Instant::now();
    let results = [
        ("Fano consistency", criterion_1()),
        ("Channel physicality", criterion_2()),
        ("Zero-acceleration identity", criterion_3()),
        ("Factorization", criterion_4()),
        ("Table regression anchors", criterion_5()),
        ("Figure reproduction", criterion_6()),
        ("Pure-state endpoints", criterion_7()),
        ("Determinism and runtime", criterion_8(started)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!(
            "{} {} {}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            name,
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} passed, {} failed",
        results.len() - failed,
        failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
