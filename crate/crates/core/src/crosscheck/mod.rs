//! Element-by-element comparison of the printed channel tables against the
//! isometry-derived channels.
//!
//! Each [`TableId`] names one hard-coded transcription (see [`tables`]). For a
//! given input and acceleration, [`compare`] evaluates every printed formula
//! and the same element of the trusted output (built through
//! [`crate::fano`], [`crate::families`] and [`crate::rindler`]), and lists the
//! differences. [`report::run_check`] repeats this over seeded random inputs.

pub mod env;
pub mod report;
pub mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::fano::{density_to_fano, fano_to_density, FanoParams};
use crate::linalg::{ComplexMatrix, C64};
use crate::rindler::{apply_channel, ChannelMode, RindlerParam};

use env::{parse_label, Env};
use tables::PrintedEntry;

/// One printed table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableId {
    #[serde(rename = "APPENDIX_A")]
    AppendixA,
    #[serde(rename = "EQ7")]
    Eq7,
    #[serde(rename = "EQ10")]
    Eq10,
    #[serde(rename = "EQ11B")]
    Eq11B,
    #[serde(rename = "EQ14")]
    Eq14,
    #[serde(rename = "EQ15")]
    Eq15,
    #[serde(rename = "EQ17")]
    Eq17,
    #[serde(rename = "EQ18")]
    Eq18,
    #[serde(rename = "EQ20")]
    Eq20,
    #[serde(rename = "EQ21")]
    Eq21,
    #[serde(rename = "EQ22")]
    Eq22,
}

/// Which family a table is written for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Any state (given as Fano parameters or any family member).
    General,
    ExampleOne,
    OneParameter,
    TwoParameter,
}

impl TableId {
    pub const ALL: [TableId; 11] = [
        TableId::AppendixA,
        TableId::Eq7,
        TableId::Eq10,
        TableId::Eq11B,
        TableId::Eq14,
        TableId::Eq15,
        TableId::Eq17,
        TableId::Eq18,
        TableId::Eq20,
        TableId::Eq21,
        TableId::Eq22,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableId::AppendixA => "APPENDIX_A",
            TableId::Eq7 => "EQ7",
            TableId::Eq10 => "EQ10",
            TableId::Eq11B => "EQ11B",
            TableId::Eq14 => "EQ14",
            TableId::Eq15 => "EQ15",
            TableId::Eq17 => "EQ17",
            TableId::Eq18 => "EQ18",
            TableId::Eq20 => "EQ20",
            TableId::Eq21 => "EQ21",
            TableId::Eq22 => "EQ22",
        }
    }

    /// Position in [`TableId::ALL`].
    pub fn ordinal(self) -> usize {
        Self::ALL.iter().position(|t| *t == self).expect("listed")
    }

    /// Regression anchors: tables expected to match the derived channel exactly.
    pub fn is_anchor(self) -> bool {
        matches!(self, TableId::AppendixA | TableId::Eq7)
    }

    pub fn family_kind(self) -> FamilyKind {
        match self {
            TableId::AppendixA | TableId::Eq7 | TableId::Eq10 | TableId::Eq11B => {
                FamilyKind::General
            }
            TableId::Eq14 | TableId::Eq15 => FamilyKind::ExampleOne,
            TableId::Eq17 | TableId::Eq18 => FamilyKind::OneParameter,
            TableId::Eq20 | TableId::Eq21 | TableId::Eq22 => FamilyKind::TwoParameter,
        }
    }

    pub fn needs_r_q(self) -> bool {
        matches!(
            self,
            TableId::Eq7
                | TableId::Eq11B
                | TableId::Eq14
                | TableId::Eq17
                | TableId::Eq20
                | TableId::Eq22
        )
    }

    pub fn needs_r_t(self) -> bool {
        matches!(
            self,
            TableId::Eq10
                | TableId::Eq11B
                | TableId::Eq15
                | TableId::Eq18
                | TableId::Eq21
                | TableId::Eq22
        )
    }

    /// Side of the square output matrix (6 before qutrit acceleration, 8 after).
    pub fn output_dim(self) -> usize {
        if self.needs_r_t() {
            8
        } else {
            6
        }
    }

    /// The printed formulas, in printed order.
    pub fn entries(self) -> Vec<PrintedEntry> {
        match self {
            TableId::AppendixA => tables::appendix_a(),
            TableId::Eq7 => tables::eq7(),
            TableId::Eq10 => tables::eq10(),
            TableId::Eq11B => tables::eq11b(),
            TableId::Eq14 => tables::eq14(),
            TableId::Eq15 => tables::eq15(),
            TableId::Eq17 => tables::eq17(),
            TableId::Eq18 => tables::eq18(),
            TableId::Eq20 => tables::eq20(),
            TableId::Eq21 => tables::eq21(),
            TableId::Eq22 => tables::eq22(),
        }
    }

    fn channel(self, r_q: Option<RindlerParam>, r_t: Option<RindlerParam>) -> Option<ChannelMode> {
        match (self.needs_r_q(), self.needs_r_t()) {
            (true, true) => Some(ChannelMode::Both {
                r_q: r_q?,
                r_t: r_t?,
            }),
            (true, false) => Some(ChannelMode::QubitOnly { r_q: r_q? }),
            (false, true) => Some(ChannelMode::QutritOnly { r_t: r_t? }),
            (false, false) => None,
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTable(s.to_string()))
    }
}

/// Input state for a table: raw Fano parameters or a family member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)] // short-lived, built once per trial
pub enum TableInput {
    Fano(FanoParams),
    Family(FamilySpec),
}

impl TableInput {
    fn family(&self) -> Option<FamilySpec> {
        match self {
            TableInput::Fano(_) => None,
            TableInput::Family(f) => Some(*f),
        }
    }
}

/// Everything needed to evaluate one table on one input.
struct Bound {
    env: Env,
    derived: ComplexMatrix,
}

fn incompatible(id: TableId, reason: impl Into<String>) -> Error {
    Error::IncompatibleInput {
        table: id.to_string(),
        reason: reason.into(),
    }
}

fn bind(
    id: TableId,
    input: &TableInput,
    r_q: Option<RindlerParam>,
    r_t: Option<RindlerParam>,
) -> Result<Bound> {
    let kind = id.family_kind();
    let family = input.family();
    let kind_ok = matches!(
        (kind, family),
        (FamilyKind::General, _)
            | (FamilyKind::ExampleOne, Some(FamilySpec::ExampleOne { .. }))
            | (
                FamilyKind::OneParameter,
                Some(FamilySpec::OneParameter { .. })
            )
            | (
                FamilyKind::TwoParameter,
                Some(FamilySpec::TwoParameter { .. })
            )
    );
    if !kind_ok {
        return Err(incompatible(
            id,
            format!("needs a {kind:?} input, got {input:?}"),
        ));
    }
    if id.needs_r_q() && r_q.is_none() {
        return Err(incompatible(id, "needs r_q"));
    }
    if id.needs_r_t() && r_t.is_none() {
        return Err(incompatible(id, "needs r_t"));
    }
    if !id.needs_r_q() && r_q.is_some() {
        return Err(incompatible(id, "does not take r_q"));
    }
    if !id.needs_r_t() && r_t.is_some() {
        return Err(incompatible(id, "does not take r_t"));
    }

    let (rho, fano) = match input {
        TableInput::Fano(p) => (fano_to_density(p).into_matrix(), p.clone()),
        TableInput::Family(f) => {
            let state = f.prepare()?.state;
            let fano = density_to_fano(&state)?;
            (state.into_matrix(), fano)
        }
    };

    let derived = match id.channel(r_q, r_t) {
        None => rho.clone(),
        Some(mode) => apply_channel(&rho, 3, mode)?.0,
    };
    let qutrit_out = match (id, r_t) {
        (TableId::Eq22, Some(r_t)) => {
            Some(apply_channel(&rho, 3, ChannelMode::QutritOnly { r_t })?.0)
        }
        _ => None,
    };
    let env = Env::new(
        rho,
        fano,
        family,
        r_q.map(RindlerParam::value),
        r_t.map(RindlerParam::value),
        qutrit_out,
    );
    Ok(Bound { env, derived })
}

/// Matrix assembled from the printed formulas (first reading of each entry).
///
/// Unprinted elements are zero, except that an unprinted element whose
/// transpose is printed receives the conjugate (Hermitian completion).
pub fn evaluate_printed_table(
    id: TableId,
    input: &TableInput,
    r_q: Option<RindlerParam>,
    r_t: Option<RindlerParam>,
) -> Result<ComplexMatrix> {
    let bound = bind(id, input, r_q, r_t)?;
    let dim = id.output_dim();
    let mut m = ComplexMatrix::zeros(dim, dim);
    let mut printed = vec![false; dim * dim];
    for e in id.entries() {
        let (r, c) = parse_label(e.label, dim);
        m[(r, c)] = (e.readings[0].eval)(&bound.env);
        printed[r * dim + c] = true;
    }
    for r in 0..dim {
        for c in 0..dim {
            if !printed[r * dim + c] && printed[c * dim + r] {
                m[(r, c)] = m[(c, r)].conj();
            }
        }
    }
    Ok(m)
}

/// The trusted output for the same input: the initial state for
/// `APPENDIX_A`, otherwise the isometry-derived channel output.
pub fn derived_matrix(
    id: TableId,
    input: &TableInput,
    r_q: Option<RindlerParam>,
    r_t: Option<RindlerParam>,
) -> Result<ComplexMatrix> {
    Ok(bind(id, input, r_q, r_t)?.derived)
}

/// A complex number as `[re, im]` for serialization.
pub type Pair = [f64; 2];

fn pair(z: C64) -> Pair {
    [z.re, z.im]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReadingOutcome {
    pub note: String,
    pub value: Pair,
    pub abs_diff: f64,
}

/// One printed element compared with the derived value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryComparison {
    /// Element compared, `row,col`.
    pub label: String,
    /// Label as printed, when it differs from `label`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_label: Option<String>,
    pub formula: String,
    /// Value of the closest reading.
    pub printed_value: Pair,
    pub derived_value: Pair,
    pub abs_diff: f64,
    pub matched: bool,
    /// Note of the closest reading.
    pub reading: String,
    /// Every reading, in transcription order.
    pub readings: Vec<ReadingOutcome>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscrepancyReport {
    pub table: TableId,
    pub tol: f64,
    /// Sorted by descending `abs_diff`, ties by position in the matrix.
    pub entries: Vec<EntryComparison>,
    pub max_abs_diff: f64,
    pub match_count: usize,
    pub total_count: usize,
}

/// Differences that are NaN (e.g. a printed `1/p` at `p = 0`) count as
/// infinite so they sort first and never match.
pub(crate) fn sanitize(d: f64) -> f64 {
    if d.is_nan() {
        f64::INFINITY
    } else {
        d
    }
}

/// Compares every printed formula of `id` with the derived value.
pub fn compare(
    id: TableId,
    input: &TableInput,
    r_q: Option<RindlerParam>,
    r_t: Option<RindlerParam>,
    tol: f64,
) -> Result<DiscrepancyReport> {
    let bound = bind(id, input, r_q, r_t)?;
    let dim = id.output_dim();
    let mut keyed = Vec::new();
    for e in id.entries() {
        let (r, c) = parse_label(e.label, dim);
        let derived = bound.derived[(r, c)];
        let readings: Vec<ReadingOutcome> = e
            .readings
            .iter()
            .map(|rd| {
                let v = (rd.eval)(&bound.env);
                ReadingOutcome {
                    note: rd.note.to_string(),
                    value: pair(v),
                    abs_diff: sanitize((v - derived).norm()),
                }
            })
            .collect();
        let best = best_index(readings.iter().map(|r| r.abs_diff));
        let abs_diff = readings[best].abs_diff;
        keyed.push((
            (r, c),
            EntryComparison {
                label: e.label.to_string(),
                printed_label: (e.printed != e.label).then(|| e.printed.to_string()),
                formula: e.formula.to_string(),
                printed_value: readings[best].value,
                derived_value: pair(derived),
                abs_diff,
                matched: abs_diff <= tol,
                reading: readings[best].note.clone(),
                readings,
            },
        ));
    }
    keyed.sort_by(|(ka, a), (kb, b)| b.abs_diff.total_cmp(&a.abs_diff).then(ka.cmp(kb)));
    let entries: Vec<EntryComparison> = keyed.into_iter().map(|(_, e)| e).collect();
    let max_abs_diff = entries.first().map_or(0.0, |e| e.abs_diff);
    let match_count = entries.iter().filter(|e| e.matched).count();
    Ok(DiscrepancyReport {
        table: id,
        tol,
        total_count: entries.len(),
        entries,
        max_abs_diff,
        match_count,
    })
}

/// Index of the smallest value; the first one wins ties.
pub(crate) fn best_index(values: impl Iterator<Item = f64>) -> usize {
    let mut best = (0, f64::INFINITY);
    for (i, v) in values.enumerate() {
        if v < best.1 || i == 0 {
            best = (i, v);
        }
    }
    best.0
}
