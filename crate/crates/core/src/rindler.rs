//! Single-mode Unruh channels for the qubit, the qutrit, or both.
//!
//! Each accelerated subsystem is described by an isometry from its Minkowski
//! mode into region I ⊗ region II. A channel is the conjugation by the local
//! isometries followed by the partial trace over every region-II factor. The
//! lifted space is ordered `(qubit-I, qutrit-I, qubit-II, qutrit-II)`; region
//! II is the trailing block that gets traced.
//!
//! Region-I/II bases:
//! - qubit: `{|0>, |1>}` on each side, product order `|I II>`;
//! - qutrit: `{|0>, |D>, |U>, |P>}` on each side, with the Minkowski qutrit
//!   levels identified as `|0> -> vacuum`, `|1> -> D`, `|2> -> U`.
//!
//! The phase `phi` of the Bogoliubov transformation is fixed to zero.

use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fano::require_physical;
use crate::linalg::{partial_trace, BipartiteState, ComplexMatrix, Factor, C64};

/// Acceleration parameter `r` with `tan r = exp(-pi omega c / a)`, `0 <= r <= pi/4`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct RindlerParam(f64);

impl RindlerParam {
    pub const ZERO: RindlerParam = RindlerParam(0.0);
    pub const MAX: RindlerParam = RindlerParam(FRAC_PI_4);

    pub fn new(r: f64) -> Result<Self> {
        if (0.0..=FRAC_PI_4).contains(&r) {
            Ok(Self(r))
        } else {
            Err(Error::RindlerOutOfRange(r))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    #[inline]
    pub fn sin(self) -> f64 {
        self.0.sin()
    }
}

impl TryFrom<f64> for RindlerParam {
    type Error = Error;

    fn try_from(r: f64) -> Result<Self> {
        Self::new(r)
    }
}

impl From<RindlerParam> for f64 {
    fn from(r: RindlerParam) -> f64 {
        r.0
    }
}

/// `r = arctan(exp(-pi omega c / a))` for mode frequency `omega`,
/// proper acceleration `a` and speed of light `c`.
pub fn rindler_param_from_physical(omega: f64, a: f64, c: f64) -> Result<RindlerParam> {
    for (name, value) in [("omega", omega), ("acceleration", a), ("speed of light", c)] {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::NonPositive { name, value });
        }
    }
    RindlerParam::new((-PI * omega * c / a).exp().atan())
}

/// Which subsystems are accelerated.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ChannelMode {
    QubitOnly {
        r_q: RindlerParam,
    },
    QutritOnly {
        r_t: RindlerParam,
    },
    Both {
        r_q: RindlerParam,
        r_t: RindlerParam,
    },
}

impl ChannelMode {
    /// Qutrit dimension after the channel, given the input one.
    pub fn output_dim_b(self, dim_b: usize) -> usize {
        match self {
            ChannelMode::QubitOnly { .. } => dim_b,
            ChannelMode::QutritOnly { .. } | ChannelMode::Both { .. } => 4,
        }
    }
}

/// Qubit mode isometry, `C^2 -> C^2 (I) ⊗ C^2 (II)`, shape 4x2.
///
/// `|0> -> cos r |0_I 0_II> + sin r |1_I 1_II>`, `|1> -> |1_I 0_II>`.
pub fn qubit_isometry(r: RindlerParam) -> ComplexMatrix {
    let (c, s) = (r.cos(), r.sin());
    let mut v = ComplexMatrix::zeros(4, 2);
    v[(0, 0)] = C64::new(c, 0.0);
    v[(3, 0)] = C64::new(s, 0.0);
    v[(2, 1)] = C64::new(1.0, 0.0);
    v
}

/// Qutrit mode isometry, `C^3 -> C^4 (I) ⊗ C^4 (II)`, shape 16x3.
///
/// ```text
/// |0> -> cos^2 r |0,0> + sin r cos r (|U,D> + |D,U>) + sin^2 r |P,P>
/// |1> -> cos r |D,0> - sin r |P,D>
/// |2> -> cos r |U,0> + sin r |P,U>
/// ```
pub fn qutrit_isometry(r: RindlerParam) -> ComplexMatrix {
    const VAC: usize = 0;
    const D: usize = 1;
    const U: usize = 2;
    const P: usize = 3;
    let at = |region_one: usize, region_two: usize| 4 * region_one + region_two;
    let (c, s) = (r.cos(), r.sin());
    let re = |x: f64| C64::new(x, 0.0);

    let mut w = ComplexMatrix::zeros(16, 3);
    w[(at(VAC, VAC), 0)] = re(c * c);
    w[(at(U, D), 0)] = re(s * c);
    w[(at(D, U), 0)] = re(s * c);
    w[(at(P, P), 0)] = re(s * s);
    w[(at(D, VAC), 1)] = re(c);
    w[(at(P, D), 1)] = re(-s);
    w[(at(U, VAC), 2)] = re(c);
    w[(at(P, U), 2)] = re(s);
    w
}

/// A local isometry together with its (region I, region II) output split.
struct LocalIsometry {
    map: ComplexMatrix,
    kept: usize,
    env: usize,
}

impl LocalIsometry {
    fn identity(d: usize) -> Self {
        Self {
            map: ComplexMatrix::identity(d),
            kept: d,
            env: 1,
        }
    }

    fn qubit(r: RindlerParam) -> Self {
        Self {
            map: qubit_isometry(r),
            kept: 2,
            env: 2,
        }
    }

    fn qutrit(r: RindlerParam) -> Self {
        Self {
            map: qutrit_isometry(r),
            kept: 4,
            env: 4,
        }
    }
}

/// `A ⊗ B` re-indexed so the output is ordered `(A-I, B-I, A-II, B-II)`.
fn joint_dilation(a: &LocalIsometry, b: &LocalIsometry) -> ComplexMatrix {
    let (a_in, b_in) = (a.map.cols(), b.map.cols());
    let rows = a.kept * b.kept * a.env * b.env;
    let mut j = ComplexMatrix::zeros(rows, a_in * b_in);
    for ai in 0..a.kept {
        for ae in 0..a.env {
            for x in 0..a_in {
                let va = a.map[(ai * a.env + ae, x)];
                if va == C64::new(0.0, 0.0) {
                    continue;
                }
                for bi in 0..b.kept {
                    for be in 0..b.env {
                        for y in 0..b_in {
                            let vb = b.map[(bi * b.env + be, y)];
                            let row = ((ai * b.kept + bi) * a.env + ae) * b.env + be;
                            j[(row, x * b_in + y)] = va * vb;
                        }
                    }
                }
            }
        }
    }
    j
}

fn dilate_and_trace(
    rho: &ComplexMatrix,
    a: &LocalIsometry,
    b: &LocalIsometry,
) -> Result<ComplexMatrix> {
    let j = joint_dilation(a, b);
    if rho.rows() != j.cols() || !rho.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} operator does not match channel input dimension {}",
            rho.rows(),
            rho.cols(),
            j.cols()
        )));
    }
    let lifted = j.sandwich(rho);
    partial_trace(&lifted, (a.kept * b.kept, a.env * b.env), Factor::B)
}

/// The channel as a linear map on arbitrary operators on `C^2 ⊗ C^dim_b`.
///
/// No physicality requirement: used for Choi matrices, table comparisons and
/// deliberately unphysical inputs. Returns the output matrix and its factor
/// dimensions.
pub fn apply_channel(
    rho: &ComplexMatrix,
    dim_b: usize,
    mode: ChannelMode,
) -> Result<(ComplexMatrix, (usize, usize))> {
    let (a, b) = match mode {
        ChannelMode::QubitOnly { r_q } => {
            (LocalIsometry::qubit(r_q), LocalIsometry::identity(dim_b))
        }
        ChannelMode::QutritOnly { r_t } => (LocalIsometry::identity(2), qutrit_side(dim_b, r_t)?),
        ChannelMode::Both { r_q, r_t } => (LocalIsometry::qubit(r_q), qutrit_side(dim_b, r_t)?),
    };
    let out = dilate_and_trace(rho, &a, &b)?;
    Ok((out, (2, mode.output_dim_b(dim_b))))
}

fn qutrit_side(dim_b: usize, r_t: RindlerParam) -> Result<LocalIsometry> {
    if dim_b != 3 {
        return Err(Error::DimensionMismatch(format!(
            "qutrit acceleration needs a 3-level factor B, got {dim_b}"
        )));
    }
    Ok(LocalIsometry::qutrit(r_t))
}

/// Applies `mode` to a physical state.
pub fn accelerate(state: &BipartiteState, mode: ChannelMode) -> Result<BipartiteState> {
    require_physical(state)?;
    let (rho, (da, db)) = apply_channel(state.rho(), state.dim_b(), mode)?;
    BipartiteState::new(rho.hermitian_part(), da, db)
}

/// Qubit accelerated, factor B untouched. Accepts `(2,3)` and `(2,4)` states.
pub fn accelerate_qubit(state: &BipartiteState, r_q: RindlerParam) -> Result<BipartiteState> {
    accelerate(state, ChannelMode::QubitOnly { r_q })
}

/// Qutrit accelerated; `(2,3) -> (2,4)`.
pub fn accelerate_qutrit(state: &BipartiteState, r_t: RindlerParam) -> Result<BipartiteState> {
    accelerate(state, ChannelMode::QutritOnly { r_t })
}

/// Both accelerated through one joint dilation; `(2,3) -> (2,4)`.
pub fn accelerate_both(
    state: &BipartiteState,
    r_q: RindlerParam,
    r_t: RindlerParam,
) -> Result<BipartiteState> {
    accelerate(state, ChannelMode::Both { r_q, r_t })
}

/// Choi matrix `sum_ij |i><j| ⊗ Phi(|i><j|)` of the channel acting on the
/// whole `2 x dim_b` input. PSD iff the channel is completely positive.
pub fn choi_matrix(mode: ChannelMode, dim_b: usize) -> Result<ComplexMatrix> {
    let n = 2 * dim_b;
    let n_out = 2 * mode.output_dim_b(dim_b);
    let mut choi = ComplexMatrix::zeros(n * n_out, n * n_out);
    for i in 0..n {
        for j in 0..n {
            let (img, _) = apply_channel(&ComplexMatrix::unit(n, i, j), dim_b, mode)?;
            for k in 0..n_out {
                for l in 0..n_out {
                    choi[(i * n_out + k, j * n_out + l)] = img[(k, l)];
                }
            }
        }
    }
    Ok(choi)
}
