//! Verbatim transcriptions of the printed element tables.
//!
//! Every formula is kept exactly as printed, typos included. An entry carries
//! more than one reading only when a glyph is malformed (a bare `c`/`s`
//! without subscript, `c^q`, a garbled index); well-formed but wrong formulas
//! get a single reading so the comparison flags them.
//!
//! Labels are written `row,col`. Six-dimensional tables use `ab` with qubit
//! `a` and qutrit `b`; eight-dimensional tables use `l k` with
//! `k` in `{0, D, U, P}`. `printed` keeps the label as it appears when it is
//! itself garbled (`02U,0D`, `0D10`, ...); `label` is the element it is
//! compared against.

use super::env::Env;
use crate::linalg::C64;

pub type Eval = Box<dyn Fn(&Env) -> C64 + Send + Sync>;

pub struct Reading {
    pub note: &'static str,
    pub eval: Eval,
}

pub struct PrintedEntry {
    pub printed: &'static str,
    pub label: &'static str,
    pub formula: &'static str,
    pub readings: Vec<Reading>,
}

const SQRT3: f64 = 1.732_050_807_568_877_2;

fn z(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn entry(
    label: &'static str,
    formula: &'static str,
    f: impl Fn(&Env) -> C64 + Send + Sync + 'static,
) -> PrintedEntry {
    PrintedEntry {
        printed: label,
        label,
        formula,
        readings: vec![Reading {
            note: "as printed",
            eval: Box::new(f),
        }],
    }
}

/// An entry whose printed label is garbled; compared at `label`.
fn relabeled(
    printed: &'static str,
    label: &'static str,
    formula: &'static str,
    f: impl Fn(&Env) -> C64 + Send + Sync + 'static,
) -> PrintedEntry {
    PrintedEntry {
        printed,
        ..entry(label, formula, f)
    }
}

fn ambiguous(
    printed: &'static str,
    label: &'static str,
    formula: &'static str,
    readings: Vec<Reading>,
) -> PrintedEntry {
    PrintedEntry {
        printed,
        label,
        formula,
        readings,
    }
}

fn reading(note: &'static str, f: impl Fn(&Env) -> C64 + Send + Sync + 'static) -> Reading {
    Reading {
        note,
        eval: Box::new(f),
    }
}

fn zero(label: &'static str) -> PrintedEntry {
    entry(label, "0", |_| re(0.0))
}

/// Element labels of a 6x6 matrix in row-major order.
pub const SIX_BY_SIX: [&str; 36] = [
    "00,00", "00,01", "00,02", "00,10", "00,11", "00,12", "01,00", "01,01", "01,02", "01,10",
    "01,11", "01,12", "02,00", "02,01", "02,02", "02,10", "02,11", "02,12", "10,00", "10,01",
    "10,02", "10,10", "10,11", "10,12", "11,00", "11,01", "11,02", "11,10", "11,11", "11,12",
    "12,00", "12,01", "12,02", "12,10", "12,11", "12,12",
];

pub fn appendix_a() -> Vec<PrintedEntry> {
    // A_l sits at row (l-1)/6, column (l-1)%6.
    let l = |k: usize| SIX_BY_SIX[k - 1];
    vec![
        entry(
            l(1),
            r"(1+s_3+t_3-c_{33}+t_8/\sqrt{3}-c_{38}/\sqrt{3})/6",
            |e| re(1.0 + e.s(3) + e.t(3) - e.c(3, 3) + e.t(8) / SQRT3 - e.c(3, 8) / SQRT3) / 6.0,
        ),
        entry(l(2), r"(t_1-it_2-c_{31}+ic_{32})/6", |e| {
            z(e.t(1) - e.c(3, 1), -e.t(2) + e.c(3, 2)) / 6.0
        }),
        entry(l(3), r"(t_4-it_5-c_{34}+ic_{35})/6", |e| {
            z(e.t(4) - e.c(3, 4), -e.t(5) + e.c(3, 5)) / 6.0
        }),
        entry(
            l(4),
            r"(s_1+is_2+c_{13}+ic_{23}+c_{18}/\sqrt{3}+ic_{28}/\sqrt{3})/6",
            |e| {
                z(
                    e.s(1) + e.c(1, 3) + e.c(1, 8) / SQRT3,
                    e.s(2) + e.c(2, 3) + e.c(2, 8) / SQRT3,
                ) / 6.0
            },
        ),
        entry(l(5), r"(c_{11}-c_{22}+ic_{21}-ic_{12})/6", |e| {
            z(e.c(1, 1) - e.c(2, 2), e.c(2, 1) - e.c(1, 2)) / 6.0
        }),
        entry(l(6), r"(c_{14}+c_{25}+ic_{24}-ic_{15})/6", |e| {
            z(e.c(1, 4) + e.c(2, 5), e.c(2, 4) - e.c(1, 5)) / 6.0
        }),
        entry(l(7), r"(t_1+it_2-c_{31}-ic_{32})/6", |e| {
            z(e.t(1) - e.c(3, 1), e.t(2) - e.c(3, 2)) / 6.0
        }),
        entry(
            l(8),
            r"(1-s_3-t_3+t_{8}/\sqrt{3}+c_{33}-c_{38}/\sqrt{3})/6",
            |e| re(1.0 - e.s(3) - e.t(3) + e.t(8) / SQRT3 + e.c(3, 3) - e.c(3, 8) / SQRT3) / 6.0,
        ),
        entry(l(9), r"(t_6-it_7-c_{36}+ic_{37})/6", |e| {
            z(e.t(6) - e.c(3, 6), -e.t(7) + e.c(3, 7)) / 6.0
        }),
        entry(l(10), r"(c_{11}-c_{22}+ic_{12}-ic_{21})/6", |e| {
            z(e.c(1, 1) - e.c(2, 2), e.c(1, 2) - e.c(2, 1)) / 6.0
        }),
        ambiguous(
            l(11),
            l(11),
            r"(s_1+is_2-c_{13}+-ic_{23}+c_{18}/\sqrt{3}+ic_{28}/\sqrt{3})/6",
            vec![
                reading("'+-' read as '+'", |e| {
                    z(
                        e.s(1) - e.c(1, 3) + e.c(1, 8) / SQRT3,
                        e.s(2) + e.c(2, 3) + e.c(2, 8) / SQRT3,
                    ) / 6.0
                }),
                reading("'+-' read as '-'", |e| {
                    z(
                        e.s(1) - e.c(1, 3) + e.c(1, 8) / SQRT3,
                        e.s(2) - e.c(2, 3) + e.c(2, 8) / SQRT3,
                    ) / 6.0
                }),
            ],
        ),
        entry(l(12), r"(c_{16}+c_{27}+ic_{26}-ic_{17})/6", |e| {
            z(e.c(1, 6) + e.c(2, 7), e.c(2, 6) - e.c(1, 7)) / 6.0
        }),
        entry(l(13), r"(t_4+it_5-c_{34}-ic_{35})/6", |e| {
            z(e.t(4) - e.c(3, 4), e.t(5) - e.c(3, 5)) / 6.0
        }),
        entry(l(14), r"(t_6+it_7-c_{36}-ic_{37})/6", |e| {
            z(e.t(6) - e.c(3, 6), e.t(7) - e.c(3, 7)) / 6.0
        }),
        entry(l(15), r"(1-s_3-2t_{8}/\sqrt{3}+2c_{38}/\sqrt{3})/6", |e| {
            re(1.0 - e.s(3) - 2.0 * e.t(8) / SQRT3 + 2.0 * e.c(3, 8) / SQRT3) / 6.0
        }),
        entry(l(16), r"(c_{14}-c_{25}+ic_{15}+ic_{24})/6", |e| {
            z(e.c(1, 4) - e.c(2, 5), e.c(1, 5) + e.c(2, 4)) / 6.0
        }),
        entry(l(17), r"(c_{16}-c_{27}+ic_{17}+ic_{26})/6", |e| {
            z(e.c(1, 6) - e.c(2, 7), e.c(1, 7) + e.c(2, 6)) / 6.0
        }),
        entry(
            l(18),
            r"(s_1+is_2-2c_{28}/\sqrt{3}-2c_{18}/\sqrt{3})/6",
            |e| {
                z(
                    e.s(1) - 2.0 * e.c(2, 8) / SQRT3 - 2.0 * e.c(1, 8) / SQRT3,
                    e.s(2),
                ) / 6.0
            },
        ),
        entry(
            l(19),
            r"(s_1+is_2+c_{13}-ic_{23}+c_{18}/\sqrt{3}-ic_{28}/\sqrt{3})/6",
            |e| {
                z(
                    e.s(1) + e.c(1, 3) + e.c(1, 8) / SQRT3,
                    e.s(2) - e.c(2, 3) - e.c(2, 8) / SQRT3,
                ) / 6.0
            },
        ),
        entry(l(20), r"(c_{11}-c_{22}-ic_{12}-ic_{21})/6", |e| {
            z(e.c(1, 1) - e.c(2, 2), -e.c(1, 2) - e.c(2, 1)) / 6.0
        }),
        entry(l(21), r"(c_{14}-c_{25}-ic_{15}-ic_{24})/6", |e| {
            z(e.c(1, 4) - e.c(2, 5), -e.c(1, 5) - e.c(2, 4)) / 6.0
        }),
        entry(
            l(22),
            r"(1+s_3+t_3+t_{8}/\sqrt{3}+c_{33}+c_{38}/\sqrt{3})/6",
            |e| re(1.0 + e.s(3) + e.t(3) + e.t(8) / SQRT3 + e.c(3, 3) + e.c(3, 8) / SQRT3) / 6.0,
        ),
        entry(l(23), r"(t_1-it_2+c_{31}-ic_{32})/6", |e| {
            z(e.t(1) + e.c(3, 1), -e.t(2) - e.c(3, 2)) / 6.0
        }),
        entry(l(24), r"(t_4-it_5+c_{34}-ic_{35})/6", |e| {
            z(e.t(4) + e.c(3, 4), -e.t(5) - e.c(3, 5)) / 6.0
        }),
        entry(l(25), r"(c_{11}+c_{22}+ic_{12}-ic_{21})/6", |e| {
            z(e.c(1, 1) + e.c(2, 2), e.c(1, 2) - e.c(2, 1)) / 6.0
        }),
        entry(
            l(26),
            r"(s_1-is_2-c_{13}+ic_{23}+c_{18}/\sqrt{3}-ic_{28}/\sqrt{3})/6",
            |e| {
                z(
                    e.s(1) - e.c(1, 3) + e.c(1, 8) / SQRT3,
                    -e.s(2) + e.c(2, 3) - e.c(2, 8) / SQRT3,
                ) / 6.0
            },
        ),
        entry(l(27), r"(c_{16}-c_{27}-ic_{17}-ic_{26})/6", |e| {
            z(e.c(1, 6) - e.c(2, 7), -e.c(1, 7) - e.c(2, 6)) / 6.0
        }),
        entry(l(28), r"-(t_1+it_2+c_{31}+ic_{32})/6", |e| {
            z(-e.t(1) - e.c(3, 1), -e.t(2) - e.c(3, 2)) / 6.0
        }),
        entry(
            l(29),
            r"(1+s_3-t_3+t_{8}/\sqrt{3}-c_{33}+c_{38}/\sqrt{3})/6",
            |e| re(1.0 + e.s(3) - e.t(3) + e.t(8) / SQRT3 - e.c(3, 3) + e.c(3, 8) / SQRT3) / 6.0,
        ),
        entry(l(30), r"(t_6-it_7+c_{36}-ic_{37})/6", |e| {
            z(e.t(6) + e.c(3, 6), -e.t(7) - e.c(3, 7)) / 6.0
        }),
        entry(l(31), r"(c_{14}+c_{25}+ic_{15}+ic_{24})/6", |e| {
            z(e.c(1, 4) + e.c(2, 5), e.c(1, 5) + e.c(2, 4)) / 6.0
        }),
        entry(l(32), r"(c_{16}+c_{27}+ic_{17}-ic_{26})/6", |e| {
            z(e.c(1, 6) + e.c(2, 7), e.c(1, 7) - e.c(2, 6)) / 6.0
        }),
        entry(
            l(33),
            r"(s_1-is_2+2ic_{28}/\sqrt{3}-2c_{18}/\sqrt{3})/6",
            |e| {
                z(
                    e.s(1) - 2.0 * e.c(1, 8) / SQRT3,
                    -e.s(2) + 2.0 * e.c(2, 8) / SQRT3,
                ) / 6.0
            },
        ),
        entry(l(34), r"(t_6+it_7+c_{36}+ic_{37})/6", |e| {
            z(e.t(6) + e.c(3, 6), e.t(7) + e.c(3, 7)) / 6.0
        }),
        entry(l(35), r"(t_4+it_5+c_{34}+ic_{35})/6", |e| {
            z(e.t(4) + e.c(3, 4), e.t(5) + e.c(3, 5)) / 6.0
        }),
        entry(l(36), r"(1+s_3-2t_{8}/\sqrt{3}-2c_{38}/\sqrt{3})/6", |e| {
            re(1.0 + e.s(3) - 2.0 * e.t(8) / SQRT3 - 2.0 * e.c(3, 8) / SQRT3) / 6.0
        }),
    ]
}

/// Qubit accelerated, general input.
pub fn eq7() -> Vec<PrintedEntry> {
    vec![
        entry("00,00", r"c^2_q\varrho_{00,00}", |e| e.cq(2) * e.v("00,00")),
        entry("00,01", r"c^2_q\varrho_{00,01}", |e| e.cq(2) * e.v("00,01")),
        entry("00,02", r"c^2_q\varrho_{00,02}", |e| e.cq(2) * e.v("00,02")),
        entry("00,10", r"c_q\varrho_{00,10}", |e| e.cq(1) * e.v("00,10")),
        entry("00,11", r"c_q\varrho_{00,11}", |e| e.cq(1) * e.v("00,11")),
        entry("00,12", r"c_q\varrho_{00,12}", |e| e.cq(1) * e.v("00,12")),
        entry("01,00", r"c^2_q\varrho_{01,00}", |e| e.cq(2) * e.v("01,00")),
        entry("01,01", r"c^2_q\varrho_{01,01}", |e| e.cq(2) * e.v("01,01")),
        entry("01,02", r"c^2_q\varrho_{01,02}", |e| e.cq(2) * e.v("01,02")),
        entry("01,10", r"c_q\varrho_{01,10}", |e| e.cq(1) * e.v("01,10")),
        entry("01,11", r"c_q\varrho_{01,11}", |e| e.cq(1) * e.v("01,11")),
        entry("01,12", r"c_q\varrho_{01,12}", |e| e.cq(1) * e.v("01,12")),
        entry("02,00", r"c^2_q\varrho_{02,00}", |e| e.cq(2) * e.v("02,00")),
        entry("02,01", r"c^2_q\varrho_{02,01}", |e| e.cq(2) * e.v("02,01")),
        entry("02,02", r"c^2_q\varrho_{02,02}", |e| e.cq(2) * e.v("02,02")),
        entry("02,10", r"c_q\varrho_{02,10}", |e| e.cq(1) * e.v("02,10")),
        entry("02,11", r"c_q\varrho_{02,11}", |e| e.cq(1) * e.v("02,11")),
        entry("02,12", r"c_q\varrho_{02,12}", |e| e.cq(1) * e.v("02,12")),
        entry("10,00", r"c_q\varrho_{10,00}", |e| e.cq(1) * e.v("10,00")),
        entry("10,01", r"c_q\varrho_{10,01}", |e| e.cq(1) * e.v("10,01")),
        entry("10,02", r"c_q\varrho_{10,02}", |e| e.cq(1) * e.v("10,02")),
        entry("10,10", r"s^2_q\varrho_{00,00}+\varrho_{10,10}", |e| {
            e.sq(2) * e.v("00,00") + e.v("10,10")
        }),
        entry("10,11", r"s^2_q\varrho_{00,01}+\varrho_{10,11}", |e| {
            e.sq(2) * e.v("00,01") + e.v("10,11")
        }),
        entry("10,12", r"s^2_q\varrho_{00,02}+\varrho_{10,12}", |e| {
            e.sq(2) * e.v("00,02") + e.v("10,12")
        }),
        entry("11,00", r"c_q\varrho_{11,00}", |e| e.cq(1) * e.v("11,00")),
        entry("11,01", r"c_q\varrho_{11,01}", |e| e.cq(1) * e.v("11,01")),
        entry("11,02", r"c_q\varrho_{11,02}", |e| e.cq(1) * e.v("11,02")),
        entry("11,10", r"s^2_q\varrho_{01,00}+\varrho_{11,10}", |e| {
            e.sq(2) * e.v("01,00") + e.v("11,10")
        }),
        entry("11,11", r"s^2_q\varrho_{01,01}+\varrho_{11,11}", |e| {
            e.sq(2) * e.v("01,01") + e.v("11,11")
        }),
        entry("11,12", r"s^2_q\varrho_{01,02}+\varrho_{11,12}", |e| {
            e.sq(2) * e.v("01,02") + e.v("11,12")
        }),
        entry("12,00", r"c_q\varrho_{12,00}", |e| e.cq(1) * e.v("12,00")),
        entry("12,01", r"c_q\varrho_{12,01}", |e| e.cq(1) * e.v("12,01")),
        entry("12,02", r"c_q\varrho_{12,02}", |e| e.cq(1) * e.v("12,02")),
        entry("12,10", r"s^2_q\varrho_{02,00}+\varrho_{12,10}", |e| {
            e.sq(2) * e.v("02,00") + e.v("12,10")
        }),
        entry("12,11", r"s^2_q\varrho_{02,01}+\varrho_{12,11}", |e| {
            e.sq(2) * e.v("02,01") + e.v("12,11")
        }),
        entry("12,12", r"s^2_q\varrho_{02,02}+\varrho_{12,12}", |e| {
            e.sq(2) * e.v("02,02") + e.v("12,12")
        }),
    ]
}

/// Qutrit accelerated, general input.
pub fn eq10() -> Vec<PrintedEntry> {
    vec![
        entry("00,00", r"c_t^4\varrho_{00,00}", |e| e.ct(4) * e.v("00,00")),
        entry("00,0D", r"c_t^3\varrho_{00,01}", |e| e.ct(3) * e.v("00,01")),
        entry("00,0U", r"c_t^2\varrho_{00,02}", |e| e.ct(2) * e.v("00,02")),
        zero("00,0P"),
        entry("00,10", r"c_t^4\varrho_{00,10}", |e| e.ct(4) * e.v("00,10")),
        entry("00,1D", r"c_t^3\varrho_{00,11}", |e| e.ct(3) * e.v("00,11")),
        entry("00,1U", r"c_t^2\varrho_{00,12}", |e| e.ct(2) * e.v("00,12")),
        zero("00,1P"),
        entry("0D,00", r"c_t^4\varrho_{01,00}", |e| e.ct(4) * e.v("01,00")),
        entry(
            "0D,0D",
            r"c_t^2(s^2_t\varrho_{00,00}+\varrho_{01,01})",
            |e| e.ct(2) * (e.st(2) * e.v("00,00") + e.v("01,01")),
        ),
        entry("0D,0U", r"c_t^2\varrho_{01,02}", |e| e.ct(2) * e.v("01,02")),
        entry("0D,0P", r"c_ts^2_t\varrho_{00,02}", |e| {
            e.ct(1) * e.st(2) * e.v("00,02")
        }),
        relabeled("0D,D0", "0D,10", r"c_t^4\varrho_{01,10}", |e| {
            e.ct(4) * e.v("01,10")
        }),
        relabeled(
            "0D,DD",
            "0D,1D",
            r"c^2_t(s^2_t\varrho_{00,10}+\varrho_{01,11})",
            |e| e.ct(2) * (e.st(2) * e.v("00,10") + e.v("01,11")),
        ),
        entry("0D,1U", r"c_t^2\varrho_{01,12}", |e| e.ct(2) * e.v("01,12")),
        entry("0D,1P", r"c_ts^2_t\varrho_{00,12}", |e| {
            e.ct(1) * e.st(2) * e.v("00,12")
        }),
        entry("0U,00", r"c_t^3\varrho_{02,00}", |e| e.ct(3) * e.v("02,00")),
        relabeled("02U,0D", "0U,0D", r"c_t^3\varrho_{02,01}", |e| {
            e.ct(3) * e.v("02,01")
        }),
        entry(
            "0U,0U",
            r"c^2_t(s^2_t\varrho_{00,01}+\varrho_{02,02})",
            |e| e.ct(2) * (e.st(2) * e.v("00,01") + e.v("02,02")),
        ),
        entry("0U,0P", r"-c_ts^2_t\varrho_{02,10}", |e| {
            -e.ct(1) * e.st(2) * e.v("02,10")
        }),
        entry("0U,10", r"c_t^3\varrho_{02,10}", |e| e.ct(3) * e.v("02,10")),
        entry("0U,1D", r"c_t^2\varrho_{02,11}", |e| e.ct(2) * e.v("02,11")),
        entry(
            "0U,1U",
            r"c^2_t(s^2_t\varrho_{02,10}+\varrho_{02,12})",
            |e| e.ct(2) * (e.st(2) * e.v("02,10") + e.v("02,12")),
        ),
        entry("0U,1P", r"-c_ts^2_t\varrho_{00,11}", |e| {
            -e.ct(1) * e.st(2) * e.v("00,11")
        }),
        zero("0P,00"),
        entry("0P,0D", r"c_ts_t^2\varrho_{02,00}", |e| {
            e.ct(1) * e.st(2) * e.v("02,00")
        }),
        entry("0P,0U", r"-c_ts_t^2\varrho_{01,00}", |e| {
            -e.ct(1) * e.st(2) * e.v("01,00")
        }),
        entry(
            "0P,0P",
            r"s^2_t(s^2_t\varrho_{00,00}+\varrho_{01,02})",
            |e| e.st(2) * (e.st(2) * e.v("00,00") + e.v("01,02")),
        ),
        zero("0P,10"),
        entry("0P,1D", r"c_ts_t^2\varrho_{02,10}", |e| {
            e.ct(1) * e.st(2) * e.v("02,10")
        }),
        entry("0P,1U", r"-c_ts_t^2\varrho_{01,10}", |e| {
            -e.ct(1) * e.st(2) * e.v("01,10")
        }),
        entry("0P,1P", r"s_t^4\varrho_{00,10}", |e| e.st(4) * e.v("00,10")),
        entry("10,00", r"c^4_t\varrho_{10,00}", |e| e.ct(4) * e.v("10,00")),
        entry("10,0D", r"c^3_t\varrho_{10,01}", |e| e.ct(3) * e.v("10,01")),
        entry("10,0U", r"c^2_t\varrho_{10,02}", |e| e.ct(2) * e.v("10,02")),
        PrintedEntry {
            printed: "10,0p",
            ..zero("10,0P")
        },
        entry("10,10", r"c^4_t\varrho_{10,10}", |e| e.ct(4) * e.v("10,10")),
        entry("10,1D", r"c^3_t\varrho_{10,11}", |e| e.ct(3) * e.v("10,11")),
        relabeled("10,12U", "10,1U", r"c^2_t\varrho_{10,12}", |e| {
            e.ct(2) * e.v("10,12")
        }),
        zero("10,1P"),
        entry("1D,00", r"c^3_t\varrho_{11,00}", |e| e.ct(3) * e.v("11,00")),
        entry("1D,0D", r"c^2_t\varrho_{11,01}", |e| e.ct(2) * e.v("11,01")),
        entry("1D,0U", r"c^2_t\varrho_{11,02}", |e| e.ct(2) * e.v("11,02")),
        entry("1D,0P", r"c_ts^2_t\varrho_{10,02}", |e| {
            e.ct(1) * e.st(2) * e.v("10,02")
        }),
        entry("1D,10", r"c^3_t\varrho_{11,10}", |e| e.ct(3) * e.v("11,10")),
        entry("1D,1D", r"c^2_ts^2_t\varrho_{11,11}", |e| {
            e.ct(2) * e.st(2) * e.v("11,11")
        }),
        entry("1D,1U", r"c^2_t\varrho_{11,12}", |e| e.ct(2) * e.v("11,12")),
        entry("1D,1P", r"c^2_ts^2_t\varrho_{10,12}", |e| {
            e.ct(2) * e.st(2) * e.v("10,12")
        }),
        entry("1U,00", r"c^2_t\varrho_{12,00}", |e| e.ct(2) * e.v("12,00")),
        entry("1U,0D", r"c^2_t\varrho_{12,01}", |e| e.ct(2) * e.v("12,01")),
        entry("1U,0U", r"c^2_t\varrho_{12,02}", |e| e.ct(2) * e.v("12,02")),
        entry("1U,0P", r"-c_ts^2_t\varrho_{10,01}", |e| {
            -e.ct(1) * e.st(2) * e.v("10,01")
        }),
        entry("1U,10", r"c^2_t\varrho_{12,10}", |e| e.ct(2) * e.v("12,10")),
        entry("1U,1D", r"c^2_t\varrho_{12,11}", |e| e.ct(2) * e.v("12,11")),
        entry("1U,1U", r"c^2_ts^2_t\varrho_{10,10}", |e| {
            e.ct(2) * e.st(2) * e.v("10,10")
        }),
        ambiguous(
            "1U,1P",
            "1U,1P",
            r"-c^2_ts_t\varrho_{10,112}",
            vec![
                reading("index '10,112' read as 10,11", |e| {
                    -e.ct(2) * e.st(1) * e.v("10,11")
                }),
                reading("index '10,112' read as 10,12", |e| {
                    -e.ct(2) * e.st(1) * e.v("10,12")
                }),
            ],
        ),
        zero("1P,00"),
        entry("1P,0D", r"c^2_ts^2_t\varrho_{12,00}", |e| {
            e.ct(2) * e.st(2) * e.v("12,00")
        }),
        entry("1P,0U", r"-c_ts^2_t\varrho_{11,00}", |e| {
            -e.ct(1) * e.st(2) * e.v("11,00")
        }),
        entry("1P,0P", r"s^2_t(\varrho_{11,01}+\varrho_{12,02})", |e| {
            e.st(2) * (e.v("11,01") + e.v("12,02"))
        }),
        zero("1P,10"),
        entry("1P,1D", r"c^2_t\varrho_{12,11}", |e| e.ct(2) * e.v("12,11")),
        entry("1P,1U", r"-c_ts^2_t\varrho_{11,10}", |e| {
            -e.ct(1) * e.st(2) * e.v("11,10")
        }),
        entry("1P,1P", r"s^2_t(\varrho_{11,12}+\varrho_{12,12})", |e| {
            e.st(2) * (e.v("11,12") + e.v("12,12"))
        }),
    ]
}

/// Where each `B_l` lands in the eight-dimensional output.
pub const B_PLACEMENT: [&str; 52] = [
    "00,00", "00,0D", "00,0U", "00,10", "00,1D", // B1..B5
    "0D,00", "0D,0D", "0D,0U", "0D,0P", "0D,10", "0D,1D", "0D,1U", "0D,1P", // B6..B13
    "0U,00", "0U,0D", "0U,0U", "0U,0P", "0U,10", "0U,1D", "0U,1U", "0U,1P", // B14..B21
    "0P,0D", "0P,0U", "0P,0P", "0P,1D", "0P,1U", "0P,1P", // B22..B27
    "10,00", "10,0D", "10,0U", "10,10", "10,1D", "10,1U", // B28..B33
    "1D,0D", "1D,0U", "1D,0P", "1D,10", "1D,1D", "1D,1U", "1D,1P", // B34..B40
    "1U,00", "1U,0D", "1U,0U", "1U,10", "1U,1D", "1U,1U", "1U,1P", // B41..B47
    "1P,0D", "1P,0P", // B48, B49
    "1P,1D", "1P,1U", "1P,1P", // B50..B52
];

/// Both accelerated, general input; `A_l` is element `l` of the input.
pub fn eq11b() -> Vec<PrintedEntry> {
    let p = |l: usize| B_PLACEMENT[l - 1];
    vec![
        entry(p(1), r"c^2_qc^4_t \mathcal{A}_1", |e| {
            e.cq(2) * e.ct(4) * e.a(1)
        }),
        entry(p(2), r"c^2_q\mathcal{A}_2", |e| e.cq(2) * e.a(2)),
        entry(p(3), r"c^2_q\mathcal{A}_3+c_q\mathcal{A}_6", |e| {
            e.cq(2) * e.a(3) + e.cq(1) * e.a(6)
        }),
        entry(p(4), r"c_qc^4_t\mathcal{A}_4", |e| {
            e.cq(1) * e.ct(4) * e.a(4)
        }),
        entry(p(5), r"c_qc^3_t\mathcal{A}_5", |e| {
            e.cq(1) * e.ct(3) * e.a(5)
        }),
        entry(p(6), r"c^2_qc^3_t\mathcal{A}_6", |e| {
            e.cq(2) * e.ct(3) * e.a(6)
        }),
        entry(p(7), r"c^2_qc^2_t(\mathcal{A}_8+s^2_t\mathcal{A}_1)", |e| {
            e.cq(2) * e.ct(2) * (e.a(8) + e.st(2) * e.a(1))
        }),
        ambiguous(
            p(8),
            p(8),
            r"c^qc^2_t\mathcal{A}_9",
            vec![
                reading("'c^q' read as c_q^2", |e| e.cq(2) * e.ct(2) * e.a(9)),
                reading("'c^q' read as c_q", |e| e.cq(1) * e.ct(2) * e.a(9)),
            ],
        ),
        entry(p(9), r"c^2_qc_ts^2_t\mathcal{A}_3", |e| {
            e.cq(2) * e.ct(1) * e.st(2) * e.a(3)
        }),
        entry(p(10), r"c_qc^3_t\mathcal{A}_{10}", |e| {
            e.cq(1) * e.ct(3) * e.a(10)
        }),
        entry(
            p(11),
            r"c_qc^2_t(\mathcal{A}_{11}+s^2_t\mathcal{A}_4)",
            |e| e.cq(1) * e.ct(2) * (e.a(11) + e.st(2) * e.a(4)),
        ),
        entry(p(12), r"c_qc^2_t\mathcal{A}_{12}", |e| {
            e.cq(1) * e.ct(2) * e.a(12)
        }),
        entry(p(13), r"c_qs^2_t\mathcal{A}_6", |e| {
            e.cq(1) * e.st(2) * e.a(6)
        }),
        entry(p(14), r"c^2_qc^3_t\mathcal{A}_{13}", |e| {
            e.cq(2) * e.ct(3) * e.a(13)
        }),
        entry(p(15), r"c^2_qc^2_t\mathcal{A}_{14}", |e| {
            e.cq(2) * e.ct(2) * e.a(14)
        }),
        ambiguous(
            p(16),
            p(16),
            r"c^qc^2_t(\mathcal{A}_{15}+s^2_t\mathcal{A}_1)",
            vec![
                reading("'c^q' read as c_q^2", |e| {
                    e.cq(2) * e.ct(2) * (e.a(15) + e.st(2) * e.a(1))
                }),
                reading("'c^q' read as c_q", |e| {
                    e.cq(1) * e.ct(2) * (e.a(15) + e.st(2) * e.a(1))
                }),
            ],
        ),
        entry(p(17), r"-c^2_qc_ts^2_t\mathcal{A}_2", |e| {
            -e.cq(2) * e.ct(1) * e.st(2) * e.a(2)
        }),
        entry(p(18), r"c_qc^3_t\mathcal{A}_{16}", |e| {
            e.cq(1) * e.ct(3) * e.a(16)
        }),
        entry(p(19), r"c_qc^2_t\mathcal{A}_{19}", |e| {
            e.cq(1) * e.ct(2) * e.a(19)
        }),
        entry(
            p(20),
            r"c_q(\mathcal{A}_{18}+c^2_ts^2_t\mathcal{A}_{4})",
            |e| e.cq(1) * (e.a(18) + e.ct(2) * e.st(2) * e.a(4)),
        ),
        entry(p(21), r"-c_qc^2_ts^2_t\mathcal{A}_5", |e| {
            -e.cq(1) * e.ct(2) * e.st(2) * e.a(5)
        }),
        entry(p(22), r"c^2_qc_ts^2_t\mathcal{A}_{13}", |e| {
            e.cq(2) * e.ct(1) * e.st(2) * e.a(13)
        }),
        entry(p(23), r"-c^2_qc_ts^2_t\mathcal{A}_7", |e| {
            -e.cq(2) * e.ct(1) * e.st(2) * e.a(7)
        }),
        ambiguous(
            p(24),
            p(24),
            r"c^2_q(s^2_q\mathcal{A}_{15}+s^2_t\mathcal{A}_8+s^4_t\mathcal{A}_1)",
            vec![
                reading("as printed (s_q^2 on A_15)", |e| {
                    e.cq(2) * (e.sq(2) * e.a(15) + e.st(2) * e.a(8) + e.st(4) * e.a(1))
                }),
                reading("s_q^2 on A_15 read as s_t^2", |e| {
                    e.cq(2) * (e.st(2) * e.a(15) + e.st(2) * e.a(8) + e.st(4) * e.a(1))
                }),
            ],
        ),
        entry(p(25), r"c_qc_ts^2_t\mathcal{A}_{16}", |e| {
            e.cq(1) * e.ct(1) * e.st(2) * e.a(16)
        }),
        entry(p(26), r"-c_qc_ts^2_t\mathcal{A}_{10}", |e| {
            -e.cq(1) * e.ct(1) * e.st(2) * e.a(10)
        }),
        entry(
            p(27),
            r"c_q(s^4_t\mathcal{A}_1+s^2_t\mathcal{A}_{18}+s^2_t\mathcal{A}_{11})",
            |e| e.cq(1) * (e.st(4) * e.a(1) + e.st(2) * e.a(18) + e.st(2) * e.a(11)),
        ),
        entry(
            p(28),
            r"c_qc^3_t(c_t\mathcal{A}_{19}+\mathcal{A}_{25})",
            |e| e.cq(1) * e.ct(3) * (e.ct(1) * e.a(19) + e.a(25)),
        ),
        entry(p(29), r"c_qc^3_t\mathcal{A}_{20}", |e| {
            e.cq(1) * e.ct(3) * e.a(20)
        }),
        entry(p(30), r"c_qc^3_t\mathcal{A}_{21}", |e| {
            e.cq(1) * e.ct(3) * e.a(21)
        }),
        entry(p(31), r"c^4_t(s^2_q\mathcal{A}_1+\mathcal{A}_{22})", |e| {
            e.ct(4) * (e.sq(2) * e.a(1) + e.a(22))
        }),
        entry(p(32), r"c^3_t(s^2_q\mathcal{A}_2+\mathcal{A}_{23})", |e| {
            e.ct(3) * (e.sq(2) * e.a(2) + e.a(23))
        }),
        entry(p(33), r"c^3_t(s^2_q\mathcal{A}_3+\mathcal{A}_{24})", |e| {
            e.ct(3) * (e.sq(2) * e.a(3) + e.a(24))
        }),
        entry(
            p(34),
            r"c_qc^2_t(s^2_q\mathcal{A}_{19}+\mathcal{A}_{26})",
            |e| e.cq(1) * e.ct(2) * (e.sq(2) * e.a(19) + e.a(26)),
        ),
        entry(p(35), r"c_qc^2_t\mathcal{A}_{27}", |e| {
            e.cq(1) * e.ct(2) * e.a(27)
        }),
        entry(p(36), r"c_qc_ts^2_t\mathcal{A}_{21}", |e| {
            e.cq(1) * e.ct(1) * e.st(2) * e.a(21)
        }),
        entry(
            p(37),
            r"c^3_t(s^2_q\mathcal{A}_{7}+\mathcal{A}_{28})",
            |e| e.ct(3) * (e.sq(2) * e.a(7) + e.a(28)),
        ),
        entry(
            p(38),
            r"c^2_qs^2_t\mathcal{A}_{22}+c^2_t\mathcal{A}_{29}+s^2_qc^2_t\mathcal{A}_8+s^2_qc^2_ts^2_t\mathcal{A}_1",
            |e| {
                e.cq(2) * e.st(2) * e.a(22)
                    + e.ct(2) * e.a(29)
                    + e.sq(2) * e.ct(2) * e.a(8)
                    + e.sq(2) * e.ct(2) * e.st(2) * e.a(1)
            },
        ),
        entry(p(39), r"c^2_t(s^2_q\mathcal{A}_9+\mathcal{A}_{30})", |e| {
            e.ct(2) * (e.sq(2) * e.a(9) + e.a(30))
        }),
        entry(
            p(40),
            r"c_ts^2_t(s^2_q\mathcal{A}_3+\mathcal{A}_{24})",
            |e| e.ct(1) * e.st(2) * (e.sq(2) * e.a(3) + e.a(24)),
        ),
        entry(p(41), r"c_qc^3_t\mathcal{A}_{31}", |e| {
            e.cq(1) * e.ct(3) * e.a(31)
        }),
        entry(p(42), r"c_qc^2_t\mathcal{A}_{32}", |e| {
            e.cq(1) * e.ct(2) * e.a(32)
        }),
        entry(
            p(43),
            r"c_qc^2_t(s^2_t\mathcal{A}_{19}+\mathcal{A}_{33})",
            |e| e.cq(1) * e.ct(2) * (e.st(2) * e.a(19) + e.a(33)),
        ),
        entry(p(44), r"-c_qc_ts^2_t\mathcal{A}_{20}", |e| {
            -e.cq(1) * e.ct(1) * e.st(2) * e.a(20)
        }),
        ambiguous(
            p(45),
            p(45),
            r"c^3_t(s^2_q\mathcal{a}_{13}+\mathcal{A}_{34})",
            vec![reading("lowercase 'a_13' read as A_13", |e| {
                e.ct(3) * (e.sq(2) * e.a(13) + e.a(34))
            })],
        ),
        entry(
            p(46),
            r"c_t(c_t\mathcal{A}_{35}+s^2_t\mathcal{A}_{14})",
            |e| e.ct(1) * (e.ct(1) * e.a(35) + e.st(2) * e.a(14)),
        ),
        ambiguous(
            p(47),
            p(47),
            r"c^2s^2\mathcal{A}_{22}+c^2\mathcal{A}_{36}+s^2_qc^2_t\mathcal{A}_{15}+s^2_qc^2_ts^2_t\mathcal{A}_1",
            b47_readings(),
        ),
        entry(
            p(48),
            r"c_qc_ts^2_q(\mathcal{A}_{31}-\mathcal{A}_{25})",
            |e| e.cq(1) * e.ct(1) * e.sq(2) * (e.a(31) - e.a(25)),
        ),
        ambiguous(
            p(49),
            p(49),
            r"c_qs^2_t(s^2\mathcal{A}_{19}+s^2_q\mathcal{A}_{26}+\mathcal{A}_{33})",
            vec![
                reading("bare 's^2' read as s_q^2", |e| {
                    e.cq(1) * e.st(2) * (e.sq(2) * e.a(19) + e.sq(2) * e.a(26) + e.a(33))
                }),
                reading("bare 's^2' read as s_t^2", |e| {
                    e.cq(1) * e.st(2) * (e.st(2) * e.a(19) + e.sq(2) * e.a(26) + e.a(33))
                }),
            ],
        ),
        ambiguous(
            p(50),
            p(50),
            r"c_ts^2_t(s^2q\mathcal{A}_{13}+\mathcal{A}_{34})",
            vec![
                reading("'s^2q' read as s_q^2", |e| {
                    e.ct(1) * e.st(2) * (e.sq(2) * e.a(13) + e.a(34))
                }),
                reading("'s^2q' read as s_t^2", |e| {
                    e.ct(1) * e.st(2) * (e.st(2) * e.a(13) + e.a(34))
                }),
            ],
        ),
        entry(
            p(51),
            r"-c_ts^2_t(s^2_q\mathcal{A}_7+\mathcal{A}_{28})",
            |e| -e.ct(1) * e.st(2) * (e.sq(2) * e.a(7) + e.a(28)),
        ),
        ambiguous(
            p(52),
            p(52),
            r"s^2\mathcal{A}_{29}+s^2_qs^2_t(\mathcal{A}_8+\mathcal{A}_{15})+s^2_qs^4_t\mathcal{A}_1+s^3_t\mathcal{A}_{22}+s^2\mathcal{A}_{36}",
            b52_readings(),
        ),
    ]
}

#[derive(Clone, Copy)]
enum Side {
    Q,
    T,
}

fn c2(e: &Env, side: Side) -> f64 {
    match side {
        Side::Q => e.cq(2),
        Side::T => e.ct(2),
    }
}

fn s2(e: &Env, side: Side) -> f64 {
    match side {
        Side::Q => e.sq(2),
        Side::T => e.st(2),
    }
}

fn b47_readings() -> Vec<Reading> {
    use Side::{Q, T};
    const NOTES: [&str; 8] = [
        "c^2s^2 -> c_q^2 s_q^2, c^2 -> c_q^2",
        "c^2s^2 -> c_q^2 s_q^2, c^2 -> c_t^2",
        "c^2s^2 -> c_q^2 s_t^2, c^2 -> c_q^2",
        "c^2s^2 -> c_q^2 s_t^2, c^2 -> c_t^2",
        "c^2s^2 -> c_t^2 s_q^2, c^2 -> c_q^2",
        "c^2s^2 -> c_t^2 s_q^2, c^2 -> c_t^2",
        "c^2s^2 -> c_t^2 s_t^2, c^2 -> c_q^2",
        "c^2s^2 -> c_t^2 s_t^2, c^2 -> c_t^2",
    ];
    let mut out = Vec::with_capacity(8);
    let mut k = 0;
    for cs_c in [Q, T] {
        for cs_s in [Q, T] {
            for c_alone in [Q, T] {
                out.push(reading(NOTES[k], move |e| {
                    c2(e, cs_c) * s2(e, cs_s) * e.a(22)
                        + c2(e, c_alone) * e.a(36)
                        + e.sq(2) * e.ct(2) * e.a(15)
                        + e.sq(2) * e.ct(2) * e.st(2) * e.a(1)
                }));
                k += 1;
            }
        }
    }
    out
}

fn b52_readings() -> Vec<Reading> {
    use Side::{Q, T};
    const NOTES: [&str; 4] = [
        "first s^2 -> s_q^2, last s^2 -> s_q^2",
        "first s^2 -> s_q^2, last s^2 -> s_t^2",
        "first s^2 -> s_t^2, last s^2 -> s_q^2",
        "first s^2 -> s_t^2, last s^2 -> s_t^2",
    ];
    let mut out = Vec::with_capacity(4);
    let mut k = 0;
    for first in [Q, T] {
        for last in [Q, T] {
            out.push(reading(NOTES[k], move |e| {
                s2(e, first) * e.a(29)
                    + e.sq(2) * e.st(2) * (e.a(8) + e.a(15))
                    + e.sq(2) * e.st(4) * e.a(1)
                    + e.st(3) * e.a(22)
                    + s2(e, last) * e.a(36)
            }));
            k += 1;
        }
    }
    out
}

/// Example-one state, qubit accelerated.
pub fn eq14() -> Vec<PrintedEntry> {
    vec![
        entry("00,00", r"c_q^2\varrho_{00,00}", |e| e.cq(2) * e.v("00,00")),
        entry("00,11", r"c_q\varrho_{00,11}", |e| e.cq(1) * e.v("00,11")),
        entry("01,01", r"c_q^2\varrho_{01,01}", |e| e.cq(2) * e.v("01,01")),
        entry("01,10", r"c_q\varrho_{01,10}", |e| e.cq(1) * e.v("01,10")),
        entry("02,02", r"c_q^2\varrho_{02,02}", |e| e.cq(2) * e.v("02,02")),
        ambiguous(
            "10,01",
            "10,01",
            r"c\varrho_{00,01}",
            vec![
                reading("bare 'c' read as c_q", |e| e.cq(1) * e.v("00,01")),
                reading("bare 'c' read as c_q^2", |e| e.cq(2) * e.v("00,01")),
            ],
        ),
        entry("10,10", r"\varrho_{10,10}+s_q^2\varrho_{00,00}", |e| {
            e.v("10,10") + e.sq(2) * e.v("00,00")
        }),
        entry("11,00", r"c_q\varrho_{11,00}", |e| e.cq(1) * e.v("11,00")),
        entry("11,11", r"\varrho_{11,11}+s_q^2\varrho_{01,01}", |e| {
            e.v("11,11") + e.sq(2) * e.v("01,01")
        }),
        entry("12,12", r"\varrho_{12,12}+s_q^2\varrho_{01,02}", |e| {
            e.v("12,12") + e.sq(2) * e.v("01,02")
        }),
    ]
}

/// Example-one state, qutrit accelerated.
pub fn eq15() -> Vec<PrintedEntry> {
    vec![
        entry("00,00", r"c_t^4\varrho_{00,00}", |e| e.ct(4) * e.v("00,00")),
        entry("00,1D", r"c_t^3\varrho_{00,11}", |e| e.ct(3) * e.v("00,11")),
        entry("0D,0D", r"c_t^2\varrho_{01,01}+c^2_ts^2_t", |e| {
            e.ct(2) * e.v("01,01") + e.ct(2) * e.st(2)
        }),
        entry("0D,10", r"c_t^3\varrho_{01,10}", |e| e.ct(3) * e.v("01,10")),
        entry(
            "0P,0P",
            r"s_t^4\varrho_{00,00}+s^2_t(\varrho_{01,01}+\varrho_{02,02})",
            |e| e.st(4) * e.v("00,00") + e.st(2) * (e.v("01,01") + e.v("02,02")),
        ),
        relabeled("0Pp,1U", "0P,1U", r"-c_ts^2_t\varrho_{01,10}", |e| {
            -e.ct(1) * e.st(2) * e.v("01,10")
        }),
        relabeled("02,1p", "0U,1P", r"-c^2_ts^2_t\varrho_{00,11}", |e| {
            -e.ct(2) * e.st(2) * e.v("00,11")
        }),
        entry(
            "0U,0U",
            r"c_t^2s^2_t\varrho_{00,00}+c^2_t\varrho_{02,02}",
            |e| e.ct(2) * e.st(2) * e.v("00,00") + e.ct(2) * e.v("02,02"),
        ),
        entry("10,0D", r"c^3_t\varrho_{10,01}", |e| e.ct(3) * e.v("10,01")),
        entry("10,10", r"c^4_t\varrho_{10,10}", |e| e.ct(4) * e.v("10,10")),
        entry("1D,00", r"c_t^2\varrho_{11,00}", |e| e.ct(2) * e.v("11,00")),
        ambiguous(
            "1D,1D",
            "1D,1D",
            r"c^2_t\varrho_{11,11}+c_t^2s\varrho_{10,10}",
            vec![
                reading("bare 's' read as s_t", |e| {
                    e.ct(2) * e.v("11,11") + e.ct(2) * e.st(1) * e.v("10,10")
                }),
                reading("bare 's' read as s_t^2", |e| {
                    e.ct(2) * e.v("11,11") + e.ct(2) * e.st(2) * e.v("10,10")
                }),
            ],
        ),
        entry(
            "1U,1U",
            r"c^2_t\varrho_{12,12}+c^2_ts_t^2\varrho_{10,10}",
            |e| e.ct(2) * e.v("12,12") + e.ct(2) * e.st(2) * e.v("10,10"),
        ),
        entry("1U,0P", r"-c_ts^2_t\varrho_{10,01}", |e| {
            -e.ct(1) * e.st(2) * e.v("10,01")
        }),
        entry("1P,0U", r"-c_ts^2_t\varrho_{11,00}", |e| {
            -e.ct(1) * e.st(2) * e.v("11,00")
        }),
        entry(
            "1P,1P",
            r"s_t^4\varrho_{10,10}+s_t^2(\varrho_{11,11}+\varrho_{12,12})",
            |e| e.st(4) * e.v("10,10") + e.st(2) * (e.v("11,11") + e.v("12,12")),
        ),
    ]
}

/// One-parameter family, qubit accelerated.
pub fn eq17() -> Vec<PrintedEntry> {
    vec![
        entry("00,00", r"\frac{p}{2}c^2_q", |e| re(e.p() / 2.0 * e.cq(2))),
        entry("00,12", r"\frac{p}{2}c_q", |e| re(e.p() / 2.0 * e.cq(1))),
        entry("01,01", r"\frac{p}{2}c^2_q", |e| re(e.p() / 2.0 * e.cq(2))),
        entry("12,00", r"\rho^{(1_q)}_{00,12}", |e| {
            re(e.p() / 2.0 * e.cq(1))
        }),
        entry("02,02", r"\frac{1-2p}{2}c^2_q", |e| {
            re((1.0 - 2.0 * e.p()) / 2.0 * e.cq(2))
        }),
        entry("10,02", r"\frac{1-2p}{2}c_q", |e| {
            re((1.0 - 2.0 * e.p()) / 2.0 * e.cq(1))
        }),
        entry(
            "10,10",
            r"\left(\frac{1-2p}{2}+\frac{p}{2}s^2_q\right)",
            |e| re((1.0 - 2.0 * e.p()) / 2.0 + e.p() / 2.0 * e.sq(2)),
        ),
        entry("02,10", r"\rho_{10,02}", |e| {
            re((1.0 - 2.0 * e.p()) / 2.0 * e.cq(1))
        }),
        entry("11,11", r"\frac{p}{2}(1+s^2_q)", |e| {
            re(e.p() / 2.0 * (1.0 + e.sq(2)))
        }),
        entry(
            "12,12",
            r"\left(\frac{1-2p}{2}s^2_q+\frac{p}{2}\right)",
            |e| re((1.0 - 2.0 * e.p()) / 2.0 * e.sq(2) + e.p() / 2.0),
        ),
    ]
}

/// One-parameter family, qutrit accelerated.
pub fn eq18() -> Vec<PrintedEntry> {
    let half_p = |e: &Env| e.p() / 2.0;
    let q = |e: &Env| (1.0 - 2.0 * e.p()) / 2.0;
    vec![
        entry("00,00", r"\frac{p}{2}c^4_t", move |e| {
            re(half_p(e) * e.ct(4))
        }),
        relabeled("12,00", "1U,00", r"\frac{p}{2}c^3_t", move |e| {
            re(half_p(e) * e.ct(3))
        }),
        entry("0D,0D", r"\frac{p}{2}c^2_t(1+s^2_t)", move |e| {
            re(half_p(e) * e.ct(2) * (1.0 + e.st(2)))
        }),
        entry("1P,0D", r"\frac{p}{2}c_ts^2_t", move |e| {
            re(half_p(e) * e.ct(1) * e.st(2))
        }),
        entry(
            "0U,0U",
            r"c^2_t\left(\frac{1-2p}{2}+\frac{p}{2}s^2_t\right)",
            move |e| re(e.ct(2) * (q(e) + half_p(e) * e.st(2))),
        ),
        relabeled("10,02", "10,0U", r"\frac{1-2p}{2}c^3_t", move |e| {
            re(q(e) * e.ct(3))
        }),
        entry(
            "0P,0P",
            r"s^2_t\left(\frac{p}{2}(1+s_t^2)+\frac{1-2p}{2}\right)",
            move |e| re(e.st(2) * (half_p(e) * (1.0 + e.st(2)) + q(e))),
        ),
        entry("1D,0P", r"\frac{1-2p}{2}c_ts^2_t", move |e| {
            re(q(e) * e.ct(1) * e.st(2))
        }),
        entry("10,10", r"\frac{1-2p}{2}c^4_t", move |e| re(q(e) * e.ct(4))),
        entry("0U,10", r"\rho^{(1_t)}_{10,0\mathcal{U}}", move |e| {
            re(q(e) * e.ct(3))
        }),
        entry("1D,1D", r"\frac{1-2p}{2}c^2_ts^2_t", move |e| {
            re(q(e) * e.ct(2) * e.st(2))
        }),
        entry("0P,1D", r"\frac{1-2p}{2}c_ts^2_t", move |e| {
            re(q(e) * e.ct(1) * e.st(2))
        }),
        entry("00,1U", r"\rho^{(1_t)}_{12,00}", move |e| {
            re(half_p(e) * e.ct(3))
        }),
        entry(
            "1U,1U",
            r"c^2_t\left(\frac{p}{2}+\frac{1-2p}{p}s^2_t\right)",
            move |e| re(e.ct(2) * (half_p(e) + (1.0 - 2.0 * e.p()) / e.p() * e.st(2))),
        ),
        entry("0D,1P", r"\frac{p}{2}c_ts^2_t", move |e| {
            re(half_p(e) * e.ct(1) * e.st(2))
        }),
        entry(
            "1P,1P",
            r"s^2_t\left(p+\frac{1-2p}{2}s_t^2\right)",
            move |e| re(e.st(2) * (e.p() + q(e) * e.st(2))),
        ),
    ]
}

/// Two-parameter family, qubit accelerated.
pub fn eq20() -> Vec<PrintedEntry> {
    vec![
        entry("00,00", r"\beta c^2_q", |e| re(e.beta() * e.cq(2))),
        entry("01,01", r"\frac{\beta+\gamma}{2}c^2_q", |e| {
            re((e.beta() + e.gamma()) / 2.0 * e.cq(2))
        }),
        entry("10,01", r"\frac{\beta-\gamma}{2}c_q", |e| {
            re((e.beta() - e.gamma()) / 2.0 * e.cq(1))
        }),
        entry("02,02", r"\alpha c^2_q", |e| re(e.alpha() * e.cq(2))),
        entry("01,10", r"\frac{\beta-\gamma}{2}c_q", |e| {
            re((e.beta() - e.gamma()) / 2.0 * e.cq(1))
        }),
        entry("10,10", r"\beta s^2_q", |e| re(e.beta() * e.sq(2))),
        entry(
            "11,11",
            r"\left(\beta+\frac{\beta+\gamma}{2}s^2_q\right)",
            |e| re(e.beta() + (e.beta() + e.gamma()) / 2.0 * e.sq(2)),
        ),
        entry("12,12", r"\alpha(1+s^2_q)", |e| {
            re(e.alpha() * (1.0 + e.sq(2)))
        }),
    ]
}

/// Two-parameter family, qutrit accelerated.
pub fn eq21() -> Vec<PrintedEntry> {
    vec![
        entry("00,00", r"\beta c^4_t", |e| re(e.beta() * e.ct(4))),
        relabeled(
            "01,0D",
            "0D,0D",
            r"c^2_t\left(\beta s^2_t+\frac{\beta+\gamma}{2}\right)",
            |e| re(e.ct(2) * (e.beta() * e.st(2) + (e.beta() + e.gamma()) / 2.0)),
        ),
        entry("10,0D", r"\frac{\beta-\gamma}{2}c^3_t", |e| {
            re((e.beta() - e.gamma()) / 2.0 * e.ct(3))
        }),
        entry("0U,0U", r"c^2_t(\alpha+\beta s^2_t)", |e| {
            re(e.ct(2) * (e.alpha() + e.beta() * e.st(2)))
        }),
        entry(
            "0P,0P",
            r"s^2_t(\left(\alpha+ \frac{3\beta+\gamma}{2}s^2_t\right)",
            |e| re(e.st(2) * (e.alpha() + (3.0 * e.beta() + e.gamma()) / 2.0 * e.st(2))),
        ),
        entry("1U,0P", r"-\frac{\beta-\gamma}{2}c_ts^2_t", |e| {
            re(-(e.beta() - e.gamma()) / 2.0 * e.ct(1) * e.st(2))
        }),
        entry("0D,10", r"\frac{\beta-\gamma}{2}c^3_t", |e| {
            re((e.beta() - e.gamma()) / 2.0 * e.ct(3))
        }),
        entry("10,10", r"\frac{\beta+\gamma}{2}c^4_t", |e| {
            re((e.beta() + e.gamma()) / 2.0 * e.ct(4))
        }),
        entry(
            "1D,1D",
            r"c^2_t\left(\beta+\frac{\beta+\gamma}{2}s^2_t\right)",
            |e| re(e.ct(2) * (e.beta() + (e.beta() + e.gamma()) / 2.0 * e.st(2))),
        ),
        entry(
            "0P,1U",
            r"\rho^{(2_{t})}_{1\mathcal{U},0\mathcal{P}}",
            |e| re(-(e.beta() - e.gamma()) / 2.0 * e.ct(1) * e.st(2)),
        ),
        entry(
            "1U,1U",
            r"c^2_t\left(\alpha+\frac{\beta+\gamma}{2}s^2_t\right)",
            |e| re(e.ct(2) * (e.alpha() + (e.beta() + e.gamma()) / 2.0 * e.st(2))),
        ),
        entry(
            "1P,1P",
            r"s^2_t\left(\alpha+\frac{3\beta+\gamma}{2}s^2_t\right)",
            |e| re(e.st(2) * (e.alpha() + (3.0 * e.beta() + e.gamma()) / 2.0 * e.st(2))),
        ),
    ]
}

/// Two-parameter family, both accelerated, written against the
/// qutrit-accelerated state (`T` below, taken from the channel).
pub fn eq22() -> Vec<PrintedEntry> {
    vec![
        entry("00,00", r"c^2_q\rho^{(2_{t})}_{00,00}", |e| {
            e.cq(2) * e.qutrit("00,00")
        }),
        entry(
            "0D,0D",
            r"c^2_q\rho^{(2_{t})}_{0\mathcal{D},0\mathcal{D}}",
            |e| e.cq(2) * e.qutrit("0D,0D"),
        ),
        entry("10,0D", r"c_q\rho^{(2_{t})}_{10,0\mathcal{D}}", |e| {
            e.cq(1) * e.qutrit("10,0D")
        }),
        entry(
            "0U,0U",
            r"c^2_q\rho^{(2_{t})}_{0\mathcal{U},0\mathcal{U}}",
            |e| e.cq(2) * e.qutrit("0U,0U"),
        ),
        entry(
            "0P,0P",
            r"c^2_q\rho^{(2_{t})}_{0\mathcal{P},0\mathcal{P}}",
            |e| e.cq(2) * e.qutrit("0P,0P"),
        ),
        entry(
            "1U,0P",
            r"c_q\rho^{(2_{t})}_{1\mathcal{U},0\mathcal{P}}",
            |e| e.cq(1) * e.qutrit("1U,0P"),
        ),
        relabeled(
            "0D10",
            "0D,10",
            r"c_q\rho^{(2_{t})}_{0\mathcal{D},10}",
            |e| e.cq(1) * e.qutrit("0D,10"),
        ),
        entry("10,10", r"s^2_q\rho^{(2_{t})}_{10,10}", |e| {
            e.sq(2) * e.qutrit("10,10")
        }),
        ambiguous(
            "1D,1D",
            "1D,1D",
            r"\rho^{(2_{t})}_{11,11}+s^2_q\rho^{(2_{t})}_{0\mathcal{D},0\mathcal{D}}",
            vec![
                reading("index '11,11' read as 1D,1D", |e| {
                    e.qutrit("1D,1D") + e.sq(2) * e.qutrit("0D,0D")
                }),
                reading("index '11,11' read as the input element 11,11", |e| {
                    e.v("11,11") + e.sq(2) * e.qutrit("0D,0D")
                }),
            ],
        ),
        entry(
            "0P,1U",
            r"\rho^{(2_{qt})}_{1\mathcal{U},0\mathcal{P}}",
            |e| e.cq(1) * e.qutrit("1U,0P"),
        ),
        entry(
            "1U,1U",
            r"\rho^{(2_{t})}_{1\mathcal{U},1\mathcal{U}}+s^2_q\rho^{(2_{t})}_{0\mathcal{U},0\mathcal{U}}",
            |e| e.qutrit("1U,1U") + e.sq(2) * e.qutrit("0U,0U"),
        ),
        relabeled(
            "1p,1p",
            "1P,1P",
            r"\rho^{(2_{t})}_{1\mathcal{P},1\mathcal{P}}+s^2_q\rho^{(2_{t})}_{0\mathcal{P},0\mathcal{P}}",
            |e| e.qutrit("1P,1P") + e.sq(2) * e.qutrit("0P,0P"),
        ),
    ]
}
