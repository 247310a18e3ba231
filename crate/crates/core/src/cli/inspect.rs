//! `inspect`: print one state.

use std::fmt::Write as _;
use std::io::Write;

use crate::crosscheck::env::basis_label;
use crate::entanglement::negativity_unchecked;
use crate::error::{Error, Result};
use crate::fano::{density_to_fano, validate_state, FanoParams};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix};
use crate::rindler::{apply_channel, RindlerParam};
use crate::tol;

use super::{InspectArgs, ModeName, EXIT_OK, EXIT_VALIDATION};

fn param(name: &str, v: Option<f64>, mode: ModeName) -> Result<RindlerParam> {
    let v =
        v.ok_or_else(|| Error::InvalidSweep(format!("--mode {} needs --{name}", mode.as_str())))?;
    RindlerParam::new(v)
}

/// Real and (when present) imaginary parts with basis labels.
pub fn format_matrix(m: &ComplexMatrix) -> String {
    let n = m.rows();
    let mut s = String::new();
    let block = |s: &mut String, title: &str, part: &dyn Fn(usize, usize) -> f64| {
        let _ = writeln!(s, "{title}");
        let _ = write!(s, "{:>4}", "");
        for c in 0..n {
            let _ = write!(s, " {:>10}", basis_label(c, n));
        }
        s.push('\n');
        for r in 0..n {
            let _ = write!(s, "{:>4}", basis_label(r, n));
            for c in 0..n {
                let v = part(r, c);
                // avoid printing "-0.0000000"
                let v = if v.abs() < 5e-9 { 0.0 } else { v };
                let _ = write!(s, " {v:>10.7}");
            }
            s.push('\n');
        }
    };
    block(&mut s, "Re:", &|r, c| m[(r, c)].re);
    if m.as_slice().iter().any(|z| z.im.abs() >= 5e-9) {
        block(&mut s, "Im:", &|r, c| m[(r, c)].im);
    }
    s
}

fn format_fano(p: &FanoParams) -> String {
    let row = |v: &[f64]| {
        v.iter()
            .map(|x| format!("{x:.6}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = format!("s = [{}]\nt = [{}]\nc =\n", row(&p.s), row(&p.t));
    for r in &p.c {
        let _ = writeln!(s, "  [{}]", row(r));
    }
    s
}

pub(super) fn run(a: &InspectArgs, out: &mut dyn Write) -> Result<u8> {
    let resolved = a.state.resolve()?;
    let prepared = resolved.family.prepare()?;
    let initial = prepared.state.rho();

    let mut text = format!("state: {}\n", resolved.family.label());
    if let Some(sub) = &resolved.substitution {
        let _ = writeln!(text, "substitution: {}", sub.search);
    }
    let _ = write!(
        text,
        "Fano parameters of the initial state:\n{}",
        format_fano(&density_to_fano(&prepared.state)?)
    );

    let (m, dims) = match a.mode {
        None => (initial.clone(), (2, 3)),
        Some(mode) => {
            let r_q = if mode == ModeName::Qutrit {
                RindlerParam::ZERO
            } else {
                param("rq", a.rq, mode)?
            };
            let r_t = if mode == ModeName::Qubit {
                RindlerParam::ZERO
            } else {
                param("rt", a.rt, mode)?
            };
            let _ = writeln!(
                text,
                "channel: {} (r_q = {}, r_t = {})",
                mode.as_str(),
                r_q.value(),
                r_t.value()
            );
            apply_channel(initial, 3, mode.channel(r_q, r_t))?
        }
    };
    let _ = write!(
        text,
        "density matrix ({}x{}):\n{}",
        m.rows(),
        m.cols(),
        format_matrix(&m)
    );

    let report = validate_state(&m, tol::TRACE, tol::PSD_SLACK);
    let spectrum = hermitian_eigenvalues(&m.hermitian_part(), tol::EIG_OFFDIAG)?;
    let spectrum: Vec<String> = spectrum.iter().map(|x| format!("{x:.10e}")).collect();
    let _ = writeln!(text, "eigenvalues: [{}]", spectrum.join(", "));
    let _ = writeln!(text, "validation: {report}");
    let e = negativity_unchecked(&m, dims)?.negativity;
    let _ = writeln!(text, "negativity: {e:.12}");
    if !prepared.is_physical() {
        let _ = writeln!(text, "UNPHYSICAL initial state: {}", prepared.report);
    }
    out.write_all(text.as_bytes())?;
    Ok(if prepared.is_physical() && report.is_physical {
        EXIT_OK
    } else {
        EXIT_VALIDATION
    })
}
