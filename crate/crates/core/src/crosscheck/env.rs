//! Symbol bindings for evaluating printed formulas.

use crate::families::{beta, FamilySpec};
use crate::fano::FanoParams;
use crate::linalg::{ComplexMatrix, C64};

/// Values of every symbol a printed formula may mention.
///
/// `varrho_{ab,cd}` reads the input matrix, `A_l` its `l`-th element in
/// row-major order, `s_i`, `t_j`, `c_ij` the Fano parameters, `p`, `alpha`,
/// `beta`, `gamma` the family parameters (NaN when the input is not that
/// family), and `c_q`, `s_q`, `c_t`, `s_t` the cosines and sines of the
/// acceleration parameters (NaN when the table does not use them).
pub struct Env {
    rho: ComplexMatrix,
    fano: FanoParams,
    family: Option<FamilySpec>,
    c_q: f64,
    s_q: f64,
    c_t: f64,
    s_t: f64,
    qutrit_out: Option<ComplexMatrix>,
}

impl Env {
    pub(crate) fn new(
        rho: ComplexMatrix,
        fano: FanoParams,
        family: Option<FamilySpec>,
        r_q: Option<f64>,
        r_t: Option<f64>,
        qutrit_out: Option<ComplexMatrix>,
    ) -> Self {
        let (c_q, s_q) = r_q.map_or((f64::NAN, f64::NAN), |r| (r.cos(), r.sin()));
        let (c_t, s_t) = r_t.map_or((f64::NAN, f64::NAN), |r| (r.cos(), r.sin()));
        Self {
            rho,
            fano,
            family,
            c_q,
            s_q,
            c_t,
            s_t,
            qutrit_out,
        }
    }

    /// Input element `varrho_{label}`, e.g. `v("00,12")`.
    pub fn v(&self, label: &str) -> C64 {
        let (r, c) = parse_label(label, 6);
        self.rho[(r, c)]
    }

    /// `A_l`, 1-based row-major element of the input.
    pub fn a(&self, l: usize) -> C64 {
        self.rho[((l - 1) / 6, (l - 1) % 6)]
    }

    /// Element of the qutrit-accelerated input, e.g. `qutrit("1U,0P")`.
    pub fn qutrit(&self, label: &str) -> C64 {
        let m = self
            .qutrit_out
            .as_ref()
            .expect("table references the qutrit-accelerated state but none was bound");
        let (r, c) = parse_label(label, 8);
        m[(r, c)]
    }

    pub fn s(&self, i: usize) -> f64 {
        self.fano.s[i - 1]
    }

    pub fn t(&self, j: usize) -> f64 {
        self.fano.t[j - 1]
    }

    pub fn c(&self, i: usize, j: usize) -> f64 {
        self.fano.c[i - 1][j - 1]
    }

    pub fn cq(&self, n: i32) -> f64 {
        self.c_q.powi(n)
    }

    pub fn sq(&self, n: i32) -> f64 {
        self.s_q.powi(n)
    }

    pub fn ct(&self, n: i32) -> f64 {
        self.c_t.powi(n)
    }

    pub fn st(&self, n: i32) -> f64 {
        self.s_t.powi(n)
    }

    pub fn p(&self) -> f64 {
        match self.family {
            Some(FamilySpec::OneParameter { p }) => p,
            _ => f64::NAN,
        }
    }

    fn two_parameter(&self) -> (f64, f64) {
        match self.family {
            Some(FamilySpec::TwoParameter { alpha, gamma }) => (alpha, gamma),
            _ => (f64::NAN, f64::NAN),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.two_parameter().0
    }

    pub fn gamma(&self) -> f64 {
        self.two_parameter().1
    }

    pub fn beta(&self) -> f64 {
        let (a, g) = self.two_parameter();
        beta(a, g)
    }
}

/// Index of one basis label: `ab` -> `3a + b` in dimension 6,
/// `l k` -> `4l + k` with `k` in `{0, D, U, P}` in dimension 8.
pub fn basis_index(label: &str, dim: usize) -> Option<usize> {
    let b = label.as_bytes();
    if b.len() != 2 {
        return None;
    }
    let high = match b[0] {
        b'0' => 0,
        b'1' => 1,
        _ => return None,
    };
    match dim {
        6 => match b[1] {
            d @ b'0'..=b'2' => Some(3 * high + (d - b'0') as usize),
            _ => None,
        },
        8 => {
            let k = match b[1] {
                b'0' => 0,
                b'D' => 1,
                b'U' => 2,
                b'P' => 3,
                _ => return None,
            };
            Some(4 * high + k)
        }
        _ => None,
    }
}

/// `"row,col"` -> matrix indices. Labels are compile-time constants, so a
/// malformed one is a programming error.
pub fn parse_label(label: &str, dim: usize) -> (usize, usize) {
    let (r, c) = label
        .split_once(',')
        .unwrap_or_else(|| panic!("label `{label}` lacks a comma"));
    let idx = |s: &str| {
        basis_index(s, dim).unwrap_or_else(|| panic!("bad basis label `{s}` for dimension {dim}"))
    };
    (idx(r), idx(c))
}

/// Label of basis index `i` in dimension 6 or 8.
pub fn basis_label(i: usize, dim: usize) -> String {
    match dim {
        6 => format!("{}{}", i / 3, i % 3),
        _ => format!("{}{}", i / 4, ['0', 'D', 'U', 'P'][i % 4]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for dim in [6, 8] {
            for i in 0..dim {
                assert_eq!(basis_index(&basis_label(i, dim), dim), Some(i));
            }
        }
        assert_eq!(parse_label("1U,0P", 8), (6, 3));
        assert_eq!(parse_label("02,10", 6), (2, 3));
        assert_eq!(basis_index("0D", 6), None);
        assert_eq!(basis_index("13", 6), None);
    }
}
