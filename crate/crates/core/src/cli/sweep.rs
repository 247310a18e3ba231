//! `sweep`: negativity against the Rindler parameter.

use std::f64::consts::FRAC_PI_4;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::entanglement::negativity_unchecked;
use crate::error::{Error, Result};
use crate::families::{FamilySpec, Fig3Substitute};
use crate::linalg::ComplexMatrix;
use crate::rindler::{apply_channel, RindlerParam};

use super::{ModeName, Resolved, SweepArgs, EXIT_OK};

pub const MAX_POINTS: usize = 100_000;

/// Everything that determines a sweep's output.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub state: Resolved,
    /// Requested channels, deduplicated, in qubit/qutrit/both order.
    pub modes: Vec<ModeName>,
    pub points: usize,
    pub fixed_r_q: Option<RindlerParam>,
    pub fixed_r_t: Option<RindlerParam>,
    pub grid2d: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepMetadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub family: FamilySpec,
    pub family_label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    /// Whether the initial state passed the trace/PSD check.
    pub physical: bool,
    pub min_eigenvalue: f64,
    pub negativity: &'static str,
    pub channels: &'static str,
    pub grid: String,
    pub columns: Vec<String>,
    pub rows: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_r_q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_r_t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub substitution: Option<Fig3Substitute>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutput {
    pub csv: String,
    pub metadata: SweepMetadata,
    /// Negativity columns, one row per grid point (without the r columns).
    pub rows: Vec<Vec<f64>>,
}

impl SweepConfig {
    pub fn from_args(a: &SweepArgs) -> Result<Self> {
        let state = a.state.resolve()?;
        let mut modes = if a.modes.is_empty() {
            ModeName::ALL.to_vec()
        } else {
            a.modes.clone()
        };
        modes.sort_unstable();
        modes.dedup();
        if a.grid2d && modes != [ModeName::Both] && !a.modes.is_empty() {
            return Err(Error::InvalidSweep(
                "--grid2d sweeps the both-accelerated channel only".into(),
            ));
        }
        Ok(Self {
            state,
            modes: if a.grid2d {
                vec![ModeName::Both]
            } else {
                modes
            },
            points: a.points,
            fixed_r_q: a.rq.map(RindlerParam::new).transpose()?,
            fixed_r_t: a.rt.map(RindlerParam::new).transpose()?,
            grid2d: a.grid2d,
        })
    }
}

/// `points` equally spaced values from 0 to pi/4 inclusive.
pub fn grid(points: usize) -> Result<Vec<RindlerParam>> {
    if !(2..=MAX_POINTS).contains(&points) {
        return Err(Error::InvalidSweep(format!(
            "points must be in 2..={MAX_POINTS}, got {points}"
        )));
    }
    let step = FRAC_PI_4 / (points - 1) as f64;
    (0..points)
        .map(|i| {
            let r = if i + 1 == points {
                FRAC_PI_4
            } else {
                i as f64 * step
            };
            RindlerParam::new(r)
        })
        .collect()
}

fn negativity_after(
    rho: &ComplexMatrix,
    mode: ModeName,
    r_q: RindlerParam,
    r_t: RindlerParam,
) -> Result<f64> {
    let (out, dims) = apply_channel(rho, 3, mode.channel(r_q, r_t))?;
    Ok(negativity_unchecked(&out, dims)?.negativity)
}

/// Computes the curves.
///
/// One- and two-parameter states must be physical (they cannot be built
/// otherwise). Example-one states are swept even when they are not positive
/// semidefinite: the channels are applied as linear maps to the Hermitian
/// matrix and the result carries `physical: false` and a warning.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepOutput> {
    let prepared = cfg.state.family.prepare()?;
    let mut warnings = Vec::new();
    if !prepared.is_physical() {
        warnings.push(format!(
            "{} is not a physical state ({}); curves use the linear channel on the raw matrix",
            cfg.state.family.label(),
            prepared.report
        ));
    }
    let rho = prepared.state.rho();
    let axis = grid(cfg.points)?;

    let (columns, points): (Vec<String>, Vec<(RindlerParam, RindlerParam)>) = if cfg.grid2d {
        let pts = axis
            .iter()
            .flat_map(|q| axis.iter().map(move |t| (*q, *t)))
            .collect();
        (vec!["r_q".into(), "r_t".into(), "E_both".into()], pts)
    } else {
        let mut cols = vec!["r".to_string()];
        cols.extend(cfg.modes.iter().map(|m| format!("E_{}", m.as_str())));
        let pts = axis
            .iter()
            .map(|r| (cfg.fixed_r_q.unwrap_or(*r), cfg.fixed_r_t.unwrap_or(*r)))
            .collect();
        (cols, pts)
    };

    let rows: Vec<Vec<f64>> = points
        .par_iter()
        .map(|(r_q, r_t)| {
            cfg.modes
                .iter()
                .map(|m| negativity_after(rho, *m, *r_q, *r_t))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;

    let mut csv = columns.join(",");
    csv.push('\n');
    for (i, row) in rows.iter().enumerate() {
        let lead: Vec<f64> = if cfg.grid2d {
            vec![points[i].0.value(), points[i].1.value()]
        } else {
            vec![axis[i].value()]
        };
        let fields: Vec<String> = lead
            .iter()
            .chain(row)
            .map(|v| format!("{v:.16e}"))
            .collect();
        csv.push_str(&fields.join(","));
        csv.push('\n');
    }

    let metadata = SweepMetadata {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        family: cfg.state.family,
        family_label: cfg.state.family.label(),
        preset: cfg.state.preset.map(|p| format!("{p:?}").to_lowercase()),
        physical: prepared.is_physical(),
        min_eigenvalue: prepared.report.min_eigenvalue,
        negativity: "E = ||rho^{T_A}||_1 - 1 (partial transpose on the qubit)",
        channels: "isometric dilation per accelerated subsystem, trace over Rindler region II",
        grid: if cfg.grid2d {
            format!("{0} x {0} points, r_q and r_t in [0, pi/4]", cfg.points)
        } else {
            format!("{} points, r in [0, pi/4]", cfg.points)
        },
        columns,
        rows: rows.len(),
        fixed_r_q: cfg.fixed_r_q.map(RindlerParam::value),
        fixed_r_t: cfg.fixed_r_t.map(RindlerParam::value),
        substitution: cfg.state.substitution.clone(),
        warnings,
    };
    Ok(SweepOutput {
        csv,
        metadata,
        rows,
    })
}

/// gnuplot command file plotting every E column of `csv_name` against r.
pub fn gnuplot_script(csv_name: &str, meta: &SweepMetadata) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set key autotitle columnhead");
    let _ = writeln!(s, "set title '{}'", meta.family_label.replace('\'', ""));
    if meta.columns[0] == "r_q" {
        let _ = writeln!(s, "set xlabel 'r_q'\nset ylabel 'r_t'\nset zlabel 'E'");
        let _ = writeln!(s, "splot '{csv_name}' using 1:2:3 with points");
    } else {
        let _ = writeln!(s, "set xlabel 'r'\nset ylabel 'E'");
        let plots: Vec<String> = (2..=meta.columns.len())
            .map(|c| format!("'{csv_name}' using 1:{c} with lines"))
            .collect();
        let _ = writeln!(s, "plot {}", plots.join(", \\\n     "));
    }
    s
}

fn write_files(out: &Path, output: &SweepOutput) -> Result<()> {
    fs::write(out, &output.csv)?;
    let mut json = serde_json::to_string_pretty(&output.metadata)?;
    json.push('\n');
    fs::write(out.with_extension("json"), json)?;
    let name = out
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    fs::write(
        out.with_extension("gp"),
        gnuplot_script(&name, &output.metadata),
    )?;
    Ok(())
}

pub(super) fn run(a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let cfg = SweepConfig::from_args(a)?;
    let output = sweep(&cfg)?;
    for w in &output.metadata.warnings {
        writeln!(err, "warning: {w}")?;
    }
    match &a.out {
        Some(path) => {
            write_files(path, &output)?;
            writeln!(
                out,
                "wrote {} rows to {}",
                output.rows.len(),
                path.display()
            )?;
        }
        None => out.write_all(output.csv.as_bytes())?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{preset_state, Target};

    fn cfg(preset: Target, points: usize) -> SweepConfig {
        SweepConfig {
            state: preset_state(preset),
            modes: ModeName::ALL.to_vec(),
            points,
            fixed_r_q: None,
            fixed_r_t: None,
            grid2d: false,
        }
    }

    #[test]
    fn grid_endpoints() {
        let g = grid(2).unwrap();
        assert_eq!(g[0].value(), 0.0);
        assert_eq!(g[1].value(), FRAC_PI_4);
        assert!(grid(1).is_err());
        assert!(grid(MAX_POINTS + 1).is_err());
    }

    #[test]
    fn fig2_endpoints() {
        let out = sweep(&cfg(Target::Fig2, 2)).unwrap();
        assert_eq!(out.csv.lines().next().unwrap(), "r,E_qubit,E_qutrit,E_both");
        assert_eq!(out.rows.len(), 2);
        for e in &out.rows[0] {
            assert!((e - 0.5).abs() < 1e-10);
        }
        let end = &out.rows[1];
        assert!((end[0] - 0.25).abs() < 1e-10);
        assert!((end[1] - 0.125).abs() < 1e-10);
        assert!((end[2] - 0.0625).abs() < 1e-10);
    }

    #[test]
    fn fig1a_runs_with_a_warning() {
        let out = sweep(&cfg(Target::Fig1a, 4)).unwrap();
        assert!(!out.metadata.physical);
        assert_eq!(out.metadata.warnings.len(), 1);
    }

    #[test]
    fn grid2d_header() {
        let mut c = cfg(Target::Fig2, 3);
        c.grid2d = true;
        c.modes = vec![ModeName::Both];
        let out = sweep(&c).unwrap();
        assert_eq!(out.csv.lines().next().unwrap(), "r_q,r_t,E_both");
        assert_eq!(out.rows.len(), 9);
    }

    #[test]
    fn csv_values_have_seventeen_digits() {
        let out = sweep(&cfg(Target::Fig2, 2)).unwrap();
        let last = out.csv.lines().nth(2).unwrap().split(',').next().unwrap();
        assert_eq!(last, "7.8539816339744828e-1");
        assert!(out.csv.ends_with('\n') && !out.csv.contains('\r'));
    }
}
