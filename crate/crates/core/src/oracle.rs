//! Independent checks for Weyl groups of order two, by direct computation
//! in `T` rather than through bar cochains.
//!
//! For `W = {1, s}` with `s` acting on `X_*` by `S` and `n² = λ(−1)`, the
//! extension splits iff `t·s(t)·n² = 1` for some `t ∈ T`. Writing
//! `t = exp(2πiμ)`, this is `(1 + S)μ ≡ λ/2 mod X_*`, i.e. there is
//! `x ∈ X_*` with `(1 − S)(λ − 2x) = 0`.

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::rootdata::RootSystem;
use crate::titsext::{chevalley_generators, cocycle};

/// Coordinates of the search box for `x`.
const BOX: i64 = 3;

/// `true` if the order-two extension with square `λ(−1)` splits.
pub fn cyclic_splits(s: &IntMatrix, lambda: &[i64]) -> bool {
    let r = lambda.len();
    let one_minus_s = IntMatrix::identity(r).sub(s);
    let target = one_minus_s.mul_vec(lambda);
    let mut x = vec![-BOX; r];
    loop {
        let image = one_minus_s.mul_vec(&x);
        if target.iter().zip(&image).all(|(t, i)| *t == 2 * i) {
            return true;
        }
        let Some(k) = x.iter().position(|&v| v < BOX) else { return false };
        x[k] += 1;
        x[..k].iter_mut().for_each(|v| *v = -BOX);
    }
}

/// Splitting verdict for a datum with `|W| = 2`, from its matrix model.
pub fn rank_one_splits(system: &RootSystem) -> Result<bool> {
    if system.order() != 2 {
        return Err(Error::Precondition(format!("Weyl group has order {}, not 2", system.order())));
    }
    let model = chevalley_generators(system.datum())?;
    let s = system.simple_reflection(0);
    let lambda = cocycle(&model, system, s, s)?.as_i64();
    Ok(cyclic_splits(system.element(s).matrix(), &lambda))
}
