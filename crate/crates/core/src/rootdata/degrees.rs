use super::RootSystem;
use crate::error::{Error, Result};

/// `Σ_w t^{ℓ(w)}`, coefficients from degree 0 upward.
pub fn poincare_polynomial(system: &RootSystem) -> Vec<i64> {
    let top = system.elements().iter().map(|e| e.length()).max().unwrap_or(0);
    let mut p = vec![0; top + 1];
    for e in system.elements() {
        p[e.length()] += 1;
    }
    p
}

/// Exact division by `1 + t + … + t^{d−1}`; `None` if it leaves a remainder.
fn divide_by_q_integer(p: &[i64], d: usize) -> Option<Vec<i64>> {
    if p.len() < d {
        return None;
    }
    let mut rem = p.to_vec();
    let mut quot = vec![0; p.len() - d + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + d - 1];
        quot[k] = c;
        for j in 0..d {
            rem[k + j] -= c;
        }
    }
    rem.iter().all(|c| *c == 0).then_some(quot)
}

/// Degrees of the fundamental invariants, smallest first, including a `1`
/// for every dimension of the central torus.
///
/// The Poincaré polynomial factors as `∏ [d_i]`. Dividing greedily by the
/// largest `[d]` that divides exactly recovers the degrees: `[d]` contains
/// the cyclotomic factor `Φ_d`, which only occurs when some `d_i` is a
/// multiple of `d`, so the largest exact divisor is `[max d_i]`.
pub fn degrees(system: &RootSystem) -> Result<Vec<usize>> {
    let mut p = poincare_polynomial(system);
    let mut out = Vec::new();
    while p.len() > 1 {
        let top = p.len();
        let d = (2..=top)
            .rev()
            .find(|&d| divide_by_q_integer(&p, d).is_some())
            .ok_or_else(|| Error::Internal(format!("Poincaré polynomial {p:?} does not factor")))?;
        p = divide_by_q_integer(&p, d).expect("checked above");
        out.push(d);
    }
    if p != [1] {
        return Err(Error::Internal("Poincaré polynomial has leftover factor".into()));
    }
    let central = system.rank() - system.datum().semisimple_rank();
    out.extend(std::iter::repeat_n(1, central));
    out.sort_unstable();
    if out.len() != system.rank() {
        return Err(Error::Internal("wrong number of degrees".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_classical, Family};

    fn deg(f: Family, n: usize) -> Vec<usize> {
        degrees(&RootSystem::new(&build_classical(f, n).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn classical_degrees() {
        assert_eq!(deg(Family::SL, 2), vec![2]);
        assert_eq!(deg(Family::SL, 3), vec![2, 3]);
        assert_eq!(deg(Family::GL, 3), vec![1, 2, 3]);
        assert_eq!(deg(Family::GL, 1), vec![1]);
        assert_eq!(deg(Family::SO, 5), vec![2, 4]);
        assert_eq!(deg(Family::Sp, 6), vec![2, 4, 6]);
        assert_eq!(deg(Family::SO, 8), vec![2, 4, 4, 6]);
        assert_eq!(deg(Family::SO, 4), vec![2, 2]);
    }

    #[test]
    fn poincare_of_sl3() {
        let s = RootSystem::new(&build_classical(Family::SL, 3).unwrap()).unwrap();
        assert_eq!(poincare_polynomial(&s), vec![1, 2, 2, 1]);
    }
}
