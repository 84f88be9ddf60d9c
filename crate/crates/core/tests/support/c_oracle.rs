//! Line-by-line transcription of the original C routine, written apart from
//! the library and used only to cross-check it.
//!
//! ```c
//! int r, g, m, t, t1, u, u1;
//! float t2, t3, a, b, c, x, y, z;
//! t1 = 4; t = t1 / 0.3;
//! for (m = 1; m < 6; m++) {
//!   for (g = 2; g < 24; g++) {
//!     t2 = .6 * t;
//!     t3 = (t - t3) / (t - t2);
//!     x = g - 1; x = x / 2;
//!     y = pow(m, 2);
//!     z = t3 - 1;
//!     a = 1 + (r * x * y * z);
//!     b = t3 * r * (x * y);
//!     c = -r * x * y;
//!     t = a + b * (u / u1) + c * (pow((u / u1), 2));
//!     printf("%d", t % 35);
//!   }
//!   printf("%d", t % 35);
//! }
//! ```
//!
//! Conversions follow C99 usual arithmetic conversions with
//! `FLT_EVAL_METHOD == 0`: int operands meeting a float become float, a
//! double literal or `pow` result widens the whole expression to double.

#![allow(dead_code)]

/// Printed values, and whether the run stopped at undefined behaviour.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleRun {
    pub printed: Vec<i32>,
    pub stopped_early: bool,
}

fn c_int_to_float(i: i32) -> f32 {
    i as f32
}

fn c_int_to_double(i: i32) -> f64 {
    i as f64
}

fn c_pow(base: f64, exp: f64) -> f64 {
    base.powf(exp)
}

/// Double to int conversion; `None` where C leaves it undefined.
fn c_double_to_int(d: f64) -> Option<i32> {
    let tr = d.trunc();
    if tr.is_nan() || !(-2147483648.0..=2147483647.0).contains(&tr) {
        None
    } else {
        Some(tr as i32)
    }
}

pub fn run(r: i32, u: i32, u1: i32, t1: i32, modulus: i32) -> OracleRun {
    let mut printed = Vec::new();
    let mut t: i32 = c_double_to_int(c_int_to_double(t1) / 0.3).expect("seed fits");
    let mut t3: f32 = 0.0;
    let mut t2: f32;
    let (mut a, mut b, mut c, mut x, mut y, mut z): (f32, f32, f32, f32, f32, f32);

    let mut m = 1;
    while m < 6 {
        let mut g = 2;
        while g < 24 {
            t2 = (0.6 * c_int_to_double(t)) as f32;
            let divisor = c_int_to_float(t) - t2;
            if divisor == 0.0 {
                return OracleRun {
                    printed,
                    stopped_early: true,
                };
            }
            t3 = (c_int_to_float(t) - t3) / divisor;
            x = c_int_to_float(g - 1);
            x /= c_int_to_float(2);
            y = c_pow(c_int_to_double(m), 2.0) as f32;
            z = t3 - c_int_to_float(1);
            a = c_int_to_float(1) + (c_int_to_float(r) * x * y * z);
            b = t3 * c_int_to_float(r) * (x * y);
            c = c_int_to_float(-r) * x * y;
            let q = match u.checked_div(u1) {
                Some(q) => q,
                None => {
                    return OracleRun {
                        printed,
                        stopped_early: true,
                    }
                }
            };
            let lhs: f32 = a + b * c_int_to_float(q);
            let rhs: f64 = (c as f64) * c_pow(c_int_to_double(q), 2.0);
            t = match c_double_to_int(lhs as f64 + rhs) {
                Some(v) => v,
                None => {
                    return OracleRun {
                        printed,
                        stopped_early: true,
                    }
                }
            };
            printed.push(t % modulus);
            g += 1;
        }
        printed.push(t % modulus);
        m += 1;
    }
    OracleRun {
        printed,
        stopped_early: false,
    }
}
