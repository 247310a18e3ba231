//! Helpers shared by the integration tests: an independent Kraus-operator
//! oracle for the channels and small conveniences.

#![allow(dead_code)]

use rindler_qt::linalg::{tensor, ComplexMatrix, C64};
use rindler_qt::rindler::{ChannelMode, RindlerParam};

pub fn r(x: f64) -> RindlerParam {
    RindlerParam::new(x).unwrap()
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `sum_k K_k rho K_k†`.
pub fn apply_kraus(rho: &ComplexMatrix, kraus: &[ComplexMatrix]) -> ComplexMatrix {
    let n = kraus[0].rows();
    kraus.iter().fold(ComplexMatrix::zeros(n, n), |acc, k| {
        &acc + &(&(k * rho) * &k.adjoint())
    })
}

/// Qubit channel: `L0 = |0><0| c + |1><1|`, `L1 = s |1><0|`.
pub fn qubit_kraus(r: RindlerParam) -> Vec<ComplexMatrix> {
    let (c, s) = (r.cos(), r.sin());
    let mut l0 = ComplexMatrix::zeros(2, 2);
    l0[(0, 0)] = re(c);
    l0[(1, 1)] = re(1.0);
    let mut l1 = ComplexMatrix::zeros(2, 2);
    l1[(1, 0)] = re(s);
    vec![l0, l1]
}

/// Qutrit channel, `C^3 -> C^4` with output order `{0, D, U, P}`, one Kraus
/// operator per region-II occupation.
pub fn qutrit_kraus(r: RindlerParam) -> Vec<ComplexMatrix> {
    let (c, s) = (r.cos(), r.sin());
    let op = |entries: &[(usize, usize, f64)]| {
        let mut k = ComplexMatrix::zeros(4, 3);
        for &(out, inp, v) in entries {
            k[(out, inp)] = re(v);
        }
        k
    };
    vec![
        op(&[(0, 0, c * c), (1, 1, c), (2, 2, c)]),
        op(&[(2, 0, s * c), (3, 1, -s)]),
        op(&[(1, 0, s * c), (3, 2, s)]),
        op(&[(3, 0, s * s)]),
    ]
}

fn identity_kraus(n: usize) -> Vec<ComplexMatrix> {
    vec![ComplexMatrix::identity(n)]
}

/// Kraus oracle for a `(2, 3)` input.
pub fn kraus_channel(rho: &ComplexMatrix, mode: ChannelMode) -> ComplexMatrix {
    let (a, b) = match mode {
        ChannelMode::QubitOnly { r_q } => (qubit_kraus(r_q), identity_kraus(3)),
        ChannelMode::QutritOnly { r_t } => (identity_kraus(2), qutrit_kraus(r_t)),
        ChannelMode::Both { r_q, r_t } => (qubit_kraus(r_q), qutrit_kraus(r_t)),
    };
    let joint: Vec<ComplexMatrix> = a
        .iter()
        .flat_map(|ka| b.iter().map(move |kb| tensor(ka, kb)))
        .collect();
    apply_kraus(rho, &joint)
}

pub fn basis_projector(n: usize, i: usize) -> ComplexMatrix {
    ComplexMatrix::unit(n, i, i)
}
