#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use weyl_schur::poly::Monomial;
use weyl_schur::XPoly;

/// Reads a polynomial written as `"-720 x1 + x1^7 + 66 x1^5 x2"` and divides
/// it by `denominator`. Factors are `xi` or `xi^e`; coefficients are integers.
pub fn xpoly(nvars: usize, denominator: i64, text: &str) -> XPoly {
    let mut out = XPoly::zero(nvars);
    let normalized = text.replace('-', " - ").replace('+', " + ");
    let mut sign = 1i64;
    let mut coeff: Option<i64> = None;
    let mut exps = vec![0u32; nvars];
    let mut pending = false;
    let flush = |sign: i64, coeff: Option<i64>, exps: &mut Vec<u32>, out: &mut XPoly| {
        let c = BigRational::new(BigInt::from(sign * coeff.unwrap_or(1)), BigInt::from(denominator));
        out.add_term(Monomial::new(exps.clone()), c);
        exps.iter_mut().for_each(|e| *e = 0);
    };
    for tok in normalized.split_whitespace() {
        match tok {
            "+" | "-" => {
                if pending {
                    flush(sign, coeff, &mut exps, &mut out);
                }
                sign = if tok == "-" { -1 } else { 1 };
                coeff = None;
                pending = false;
            }
            t if t.starts_with('x') => {
                let (var, exp) = match t[1..].split_once('^') {
                    Some((v, e)) => (v.parse::<usize>().unwrap(), e.parse::<u32>().unwrap()),
                    None => (t[1..].parse::<usize>().unwrap(), 1),
                };
                exps[var - 1] += exp;
                pending = true;
            }
            t => {
                coeff = Some(t.parse().unwrap());
                pending = true;
            }
        }
    }
    if pending {
        flush(sign, coeff, &mut exps, &mut out);
    }
    out
}

/// Terms of `a - b`, for readable failure messages.
pub fn diff(a: &XPoly, b: &XPoly) -> String {
    (a - b).to_string()
}

// Printed values for A_5, transcribed over a common denominator each.

pub const X6: &str = "-720 + x1^6 - 30 x1^4 x2 + 180 x1^2 x2^2 - 120 x2^3 + 120 x1^3 x3 - 720 x1 x2 x3 \
                  + 360 x3^2 - 360 x1^2 x4 + 720 x2 x4 + 720 x1 x5";
pub const X7: &str = "-840 x1 + x1^7 - 28 x1^5 x2 + 140 x1^3 x2^2 + 105 x1^4 x3 - 420 x1^2 x2 x3 \
                  - 420 x2^2 x3 - 280 x1^3 x4 + 840 x3 x4 + 420 x1^2 x5 + 840 x2 x5";

// As printed, with the impossible token "x2 x1^3 x4" (graded degree 9) kept.
pub const S6_PRINTED: &str = "360 + x1^6 + 180 x1^2 x2^2 + 120 x1^3 x3 + 360 x3^2 + 720 x2 x4 + 720 x1 x5";
pub const S7_PRINTED: &str = "720 x1 + x1^7 - 24 x1^5 x2 + 180 x1^3 x2^2 + 120 x1^4 x3 - 360 x1^2 x2 x3 \
                          + 360 x1 x3^2 - 120 x2 x1^3 x4 + 720 x1 x2 x4 + 720 x3 x4 + 720 x1^2 x5 + 720 x2 x5";

pub const S61_PRINTED: &str = "-15 x1 + x1^5 x2 + 15 x1^2 x2 x3 + 10 x1^3 x4 - 30 x3 x4 - 30 x2 x5";

/// The closing list of degenerated generalized Schur functions for A_5, as
/// printed. The `S_(2,2,2,1)` entry carries a single 1/360.
pub const PRINTED_DEGREE_7: &[(&str, i64, &str)] = &[
    ("5,2", 720, "-720 x1 + x1^7 + 66 x1^5 x2 - 60 x1^3 x2^2 + 360 x1 x2^3 - 60 x1^4 x3 + 720 x1^2 x2 x3 + 720 x2^2 x3 - 720 x1 x3^2 + 360 x1^3 x4 - 720 x1 x2 x4 - 1080 x1^2 x5 + 720 x2 x5"),
    ("4,3", 360, "x1^7 + 12 x1^5 x2 + 60 x1^3 x2^2 - 15 x1^4 x3 + 180 x1^2 x2 x3 - 180 x2^2 x3 + 360 x1 x3^2 - 120 x1^3 x4 + 360 x3 x4 - 180 x1^2 x5 - 360 x2 x5"),
    ("5,1,1", 240, "240 x1 + x1^7 + 2 x1^5 x2 + 20 x1^3 x2^2 - 120 x1 x2^3 + 60 x1^4 x3 - 240 x1^2 x2 x3 - 240 x2^2 x3 - 40 x1^3 x4 - 240 x1 x2 x4 + 480 x3 x4 + 120 x1^2 x5 + 240 x2 x5"),
    ("4,2,1", 120, "120 x1 + x1^7 + 20 x1^3 x2^2 + 15 x1^4 x3 - 180 x1^2 x2 x3 - 60 x2^2 x3 - 80 x1^3 x4 + 240 x1 x2 x4 - 120 x3 x4 + 120 x1^2 x5"),
    ("3,3,1", 240, "x1^7 + 2 x1^5 x2 + 20 x1^3 x2^2 - 120 x1 x2^3 - 30 x1^4 x3 + 120 x1^2 x2 x3 + 120 x2^2 x3 - 40 x1^3 x4 - 240 x1 x2 x4 - 240 x3 x4 + 120 x1^2 x5 + 240 x2 x5"),
    ("3,2,2", 240, "x1^7 - 2 x1^5 x2 + 20 x1^3 x2^2 + 120 x1 x2^3 - 30 x1^4 x3 - 120 x1^2 x2 x3 + 120 x2^2 x3 + 40 x1^3 x4 - 240 x1 x2 x4 + 240 x3 x4 + 120 x1^2 x5 - 240 x2 x5"),
    ("4,1,1,1", 360, "-360 x1 + x1^7 + 12 x1^5 x2 - 180 x1^3 x2^2 - 15 x1^4 x3 + 180 x1^2 x2 x3 + 540 x2^2 x3 + 360 x1 x3^2 + 120 x1^3 x4 - 360 x3 x4 - 180 x1^2 x5 - 360 x2 x5"),
    ("3,2,1,1", 360, "-360 x1 + 2 x1^7 - 120 x1^3 x2^2 - 75 x1^4 x3 + 540 x1^2 x2 x3 - 180 x2^2 x3 - 360 x1 x3^2 + 240 x1^3 x4 + 360 x3 x4 - 360 x1^2 x5"),
    ("2,2,2,1", 360, "x1^7 - 12 x1^5 x2 + 60 x1^3 x2^2 - 15 x1^4 x3 - 180 x1^2 x2 x3 - 180 x2^2 x3 + 360 x1 x3^2 + 120 x1^3 x4 - 360 x3 x4 - 180 x1^2 x5 + 360 x2 x5"),
    ("3,1,1,1,1", 240, "240 x1 + x1^7 - 18 x1^5 x2 + 20 x1^3 x2^2 + 120 x1 x2^3 + 60 x1^4 x3 - 240 x2^2 x3 - 120 x1^3 x4 - 240 x1 x2 x4 + 120 x1^2 x5 + 240 x2 x5"),
    ("2,2,1,1,1", 240, "240 x1 + x1^7 - 22 x1^5 x2 + 100 x1^3 x2^2 - 120 x1 x2^3 + 60 x1^4 x3 - 240 x1^2 x2 x3 + 240 x2^2 x3 - 120 x1^3 x4 + 240 x1 x2 x4 + 120 x1^2 x5 - 240 x2 x5"),
];
