//! `check`: seeded cross-check of the printed tables.

use std::fs;
use std::io::Write;

use crate::crosscheck::report::{render_text, run_check};
use crate::crosscheck::TableId;
use crate::error::Result;

use super::{CheckArgs, EXIT_OK, EXIT_VALIDATION};

/// Exit code 0 unless an anchor table among those requested mismatched;
/// mismatches elsewhere are informational.
pub(super) fn run(a: &CheckArgs, out: &mut dyn Write) -> Result<u8> {
    let tables = if a.tables.is_empty() {
        TableId::ALL.to_vec()
    } else {
        a.tables.clone()
    };
    let report = run_check(&tables, a.seed, a.trials, a.tol)?;
    let text = render_text(&report);
    let mut json = serde_json::to_string_pretty(&report)?;
    json.push('\n');
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("check.json"), &json)?;
        fs::write(dir.join("check.txt"), &text)?;
    }
    out.write_all(if a.json {
        json.as_bytes()
    } else {
        text.as_bytes()
    })?;
    Ok(if report.anchors_matched() {
        EXIT_OK
    } else {
        EXIT_VALIDATION
    })
}
