use num_traits::{One, Zero};

use super::splitting::{compose, SplittingAlgebra};
use crate::error::{Error, Result};
use crate::gcohom::{is_coboundary, Cochain, CoboundaryDecision, FiniteGroupTable, GModule, ModuleKind, Witness};
use crate::linalg::rational::Q;
use crate::linalg::IntMatrix;

/// `S_n` as a table over the algebra's permutation order.
pub fn symmetric_group(alg: &SplittingAlgebra<Q>) -> Result<FiniteGroupTable> {
    let perms = alg.permutations();
    let m = perms.len();
    let mul = (0..m * m).map(|k| alg.perm_index(&compose(&perms[k / m], &perms[k % m]))).collect();
    FiniteGroupTable::from_table(m, mul)
}

fn is_truncated_local(alg: &SplittingAlgebra<Q>) -> bool {
    alg.coeffs.iter().all(Zero::is_zero)
}

fn nilpotency_bound(alg: &SplittingAlgebra<Q>) -> usize {
    alg.n * (alg.n - 1) / 2 + 1
}

/// `log(u)` for `u ∈ 1 + m`.
fn log_unit(alg: &SplittingAlgebra<Q>, u: &[Q]) -> Vec<Q> {
    let m = alg.sub(u, &alg.one());
    let mut out = vec![Q::zero(); alg.dim()];
    let mut power = alg.one();
    for k in 1..=nilpotency_bound(alg) {
        power = alg.mul(&power, &m);
        let c = Q::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
        out = alg.add(&out, &alg.scale(&c, &power));
    }
    out
}

/// `exp(a)` for nilpotent `a`.
fn exp_nilpotent(alg: &SplittingAlgebra<Q>, a: &[Q]) -> Vec<Q> {
    let mut out = alg.one();
    let mut term = alg.one();
    for k in 1..=nilpotency_bound(alg) {
        term = alg.scale(&Q::new(1.into(), (k as i64).into()), &alg.mul(&term, a));
        out = alg.add(&out, &term);
    }
    out
}

/// Inverse of a unit `c(1 + m)` with `c ≠ 0` constant.
pub fn unit_inverse(alg: &SplittingAlgebra<Q>, u: &[Q]) -> Result<Vec<Q>> {
    if !is_truncated_local(alg) {
        return Err(Error::Precondition("units are only inverted in the totally ramified algebra".into()));
    }
    let c = u[0].clone();
    if c.is_zero() {
        return Err(Error::Precondition("element has no constant term and is not a unit".into()));
    }
    let m = alg.sub(&alg.scale(&c.recip(), u), &alg.one());
    let mut out = alg.one();
    let mut power = alg.one();
    for k in 1..=nilpotency_bound(alg) {
        power = alg.mul(&power, &m);
        out = if k % 2 == 1 { alg.sub(&out, &power) } else { alg.add(&out, &power) };
    }
    Ok(alg.scale(&c.recip(), &out))
}

/// `g ↦ g(w)/w`.
pub fn unit_coboundary(alg: &SplittingAlgebra<Q>, w: &[Q]) -> Result<Vec<Vec<Q>>> {
    let inv = unit_inverse(alg, w)?;
    Ok((0..alg.permutations().len()).map(|p| alg.mul(&alg.act(p, w), &inv)).collect())
}

/// Trivializes a cocycle `S_n → 1 + m` of the splitting algebra of `Yⁿ`:
/// returns `w` with `u(g) = g(w)/w` for every `g`.
///
/// The logarithm turns `u` into an additive cocycle with values in the
/// nilpotent ideal; over `Q` that is a coboundary `dφ`, and `w = exp(φ)`.
pub fn unit_cocycle_trivialize(alg: &SplittingAlgebra<Q>, cocycle: &[Vec<Q>]) -> Result<Vec<Q>> {
    if !is_truncated_local(alg) {
        return Err(Error::Precondition("expected the splitting algebra of Yⁿ".into()));
    }
    let perms = alg.permutations();
    if cocycle.len() != perms.len() || cocycle.iter().any(|u| u.len() != alg.dim() || !u[0].is_one()) {
        return Err(Error::Precondition("cocycle values must lie in 1 + m".into()));
    }
    let group = symmetric_group(alg)?;
    for a in 0..perms.len() {
        for b in 0..perms.len() {
            let lhs = &cocycle[group.mul(a, b)];
            let rhs = alg.mul(&cocycle[a], &alg.act(a, &cocycle[b]));
            if *lhs != rhs {
                return Err(Error::NotCocycle { tuple: vec![a, b] });
            }
        }
    }
    let logs: Vec<Vec<Q>> = cocycle.iter().map(|u| log_unit(alg, u)).collect();
    let denom = logs.iter().flatten().fold(num_bigint::BigInt::one(), |acc, v| num_integer::Integer::lcm(&acc, v.denom()));
    let scaled: Vec<Vec<i64>> = logs
        .iter()
        .map(|l| {
            l.iter()
                .map(|v| i64::try_from((v * Q::from_integer(denom.clone())).to_integer()).map_err(|_| Error::Overflow("unit logarithm")))
                .collect()
        })
        .collect::<Result<_>>()?;
    let action = (0..perms.len())
        .map(|p| {
            let mut m = IntMatrix::zeros(alg.dim(), alg.dim());
            for b in 0..alg.dim() {
                let mut e = vec![Q::zero(); alg.dim()];
                e[b] = Q::one();
                for (r, v) in alg.act(p, &e).iter().enumerate() {
                    if !v.is_integer() {
                        return Err(Error::Internal("non-integral permutation action".into()));
                    }
                    m.set(r, b, i64::try_from(v.to_integer()).map_err(|_| Error::Overflow("action"))?);
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    let module = GModule::new(&group, ModuleKind::Rational, alg.dim(), action)?;
    let c = Cochain::from_fn(&group, 1, alg.dim(), |g| Ok(scaled[g[0]].clone()))?;
    let phi = match is_coboundary(&group, &module, &c)? {
        CoboundaryDecision::Coboundary(Witness::Rational { values, .. }) => values,
        _ => return Err(Error::Internal("rational 1-cocycle is not a coboundary".into())),
    };
    let mut phi: Vec<Q> = phi.iter().map(|v| v / Q::from_integer(denom.clone())).collect();
    // constants are invariant; drop them so exp is a finite sum
    phi[0] = Q::zero();
    let w = exp_nilpotent(alg, &phi);
    if unit_coboundary(alg, &w)? != cocycle {
        return Err(Error::Internal("trivialization failed verification".into()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glncover::spectral_from_coeffs;
    use crate::linalg::rational::q;

    fn truncated(n: usize) -> SplittingAlgebra<Q> {
        SplittingAlgebra::new(&spectral_from_coeffs(n, vec![q(0); n]).unwrap())
    }

    #[test]
    fn trivial_cocycle() {
        let a = truncated(2);
        let w = unit_cocycle_trivialize(&a, &vec![a.one(); 2]).unwrap();
        assert_eq!(unit_coboundary(&a, &w).unwrap(), vec![a.one(); 2]);
    }

    #[test]
    fn recovers_coboundaries() {
        for n in [2, 3] {
            let a = truncated(n);
            // w = 1 + x₁ − 2x₁x₂ + …, times an invariant unit (1 + e_2 noise)
            let mut w = a.add(&a.one(), &a.x(0));
            if n == 3 {
                w = a.add(&w, &a.scale(&q(-2), &a.mul(&a.x(0), &a.x(1))));
                let noise = a.add(&a.one(), &a.scale(&q(3), &a.elementary_symmetric(2)));
                w = a.mul(&w, &noise);
            }
            let u = unit_coboundary(&a, &w).unwrap();
            let found = unit_cocycle_trivialize(&a, &u).unwrap();
            assert_eq!(unit_coboundary(&a, &found).unwrap(), u);
        }
    }

    #[test]
    fn rejects_non_cocycles() {
        let a = truncated(3);
        let mut u = vec![a.one(); 6];
        u[a.perm_index(&[1, 0, 2])] = a.add(&a.one(), &a.x(0));
        assert!(matches!(unit_cocycle_trivialize(&a, &u), Err(Error::NotCocycle { .. })));
        let b = SplittingAlgebra::new(&spectral_from_coeffs(2, vec![q(1), q(0)]).unwrap());
        assert!(unit_cocycle_trivialize(&b, &vec![b.one(); 2]).is_err());
    }
}
