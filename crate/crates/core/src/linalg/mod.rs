//! Exact linear algebra: small integer matrices, dense rational elimination,
//! GF(2) solves, and Smith normal form with solvability certificates.

mod gf2;
mod intmat;
pub mod rational;
pub mod snf;

pub use gf2::solve_gf2;
pub use intmat::IntMatrix;
pub use rational::QMatrix;
pub use snf::{IntegralObstruction, SmithForm, SolveOutcome};

pub(crate) fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_i128(a as i128, b as i128) as i64
}
