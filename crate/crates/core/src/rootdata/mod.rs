//! Root data, Weyl groups and the coroot-divisor calculus of ramification.
//!
//! Roots live in a fixed basis of the character lattice and coroots in the
//! dual basis of the cocharacter lattice, so the pairing is the literal dot
//! product and isogeny types differ only in the stored coordinates.

mod datum;
mod degrees;
mod divisor;
mod stabilizer;
mod system;

pub use datum::{build_classical, Family, RootDatum, TypeTag};
pub use degrees::{degrees, poincare_polynomial};
pub use divisor::{
    check_ram_cocycle, ram_divisor, ram_scan, rtriviality_shadow, twisted_pullback, CorootDivisor, RamScan,
};
pub use stabilizer::{cameral_stabilizer_ok, is_parabolic_conjugate};
pub use system::{RootSystem, WeylElement, DEFAULT_MAX_GROUP_ORDER};

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// True iff the gcd of the coordinates is 1.
pub fn coroot_primitive(system: &RootSystem, coroot: &[i64]) -> crate::Result<bool> {
    if coroot.iter().all(|c| *c == 0) {
        return Err(crate::Error::Precondition("zero vector is not a coroot".into()));
    }
    let neg: Vec<i64> = coroot.iter().map(|c| -c).collect();
    if !system.coroots().iter().any(|c| c == coroot || *c == neg) {
        return Err(crate::Error::Precondition(format!("{coroot:?} is not a coroot of the datum")));
    }
    Ok(coroot.iter().fold(0, |g, c| crate::linalg::gcd_i64(g, *c)) == 1)
}

/// Positive coroots that are divisible in the cocharacter lattice.
pub fn nonprimitive_coroots(system: &RootSystem) -> Vec<Vec<i64>> {
    system
        .coroots()
        .iter()
        .filter(|c| c.iter().fold(0, |g, x| crate::linalg::gcd_i64(g, *x)) != 1)
        .cloned()
        .collect()
}

/// True iff some coroot is divisible in the cocharacter lattice.
pub fn has_nonprimitive_coroot(system: &RootSystem) -> bool {
    !nonprimitive_coroots(system).is_empty()
}
