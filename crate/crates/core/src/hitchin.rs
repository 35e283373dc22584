//! Dimension counts for the Hitchin base and the generalized Prym.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{degrees, RootDatum, RootSystem};

/// The base curve and the line bundle `K` the Higgs field takes values in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "bundle", rename_all = "snake_case")]
pub enum CurveSpec {
    /// The canonical bundle of a genus `g ≥ 2` curve.
    Canonical { g: u32 },
    /// `O(k)` on `P¹`.
    Rational { k: i64 },
}

impl CurveSpec {
    pub fn genus(&self) -> u32 {
        match self {
            CurveSpec::Canonical { g } => *g,
            CurveSpec::Rational { .. } => 0,
        }
    }

    pub fn bundle_degree(&self) -> i64 {
        match self {
            CurveSpec::Canonical { g } => 2 * *g as i64 - 2,
            CurveSpec::Rational { k } => *k,
        }
    }
}

/// `h⁰(K^d)`.
pub fn h0_of_power(curve: &CurveSpec, d: u32) -> Result<i64> {
    match *curve {
        CurveSpec::Canonical { g } if g >= 2 => {
            let g = g as i64;
            Ok(match d {
                0 => 1,
                1 => g,
                _ => (2 * d as i64 - 1) * (g - 1),
            })
        }
        CurveSpec::Canonical { g } => Err(Error::Precondition(format!("canonical bundle needs genus ≥ 2, got {g}"))),
        CurveSpec::Rational { k } => Ok((d as i64 * k + 1).max(0)),
    }
}

/// `Σ h⁰(K^{d_i})` over the fundamental degrees.
pub fn hitchin_dim(datum: &RootDatum, curve: &CurveSpec) -> Result<i64> {
    let system = RootSystem::new(datum)?;
    degrees(&system)?.iter().map(|&d| h0_of_power(curve, d as u32)).sum()
}

/// Genus of a generic cameral cover by Riemann–Hurwitz: each positive
/// root ramifies simply along the zeros of `α∘v`, a section of `K` pulled
/// back, so `2g̃ − 2 = |W|·(2g − 2 + |Δ⁺|·deg K)`.
pub fn cameral_genus(datum: &RootDatum, curve: &CurveSpec) -> Result<i64> {
    let system = RootSystem::new(datum)?;
    let w = system.order() as i64;
    let chi = w * (2 * curve.genus() as i64 - 2 + system.positive_roots().len() as i64 * curve.bundle_degree());
    if chi % 2 != 0 {
        return Err(Error::Internal("odd Euler characteristic".into()));
    }
    Ok(chi / 2 + 1)
}

/// `dim H¹(X, (p_*O ⊗ t)^W)` for a generic cameral cover, `K` canonical.
///
/// Over the generic locus `(p_*O ⊗ t)^W ≅ z ⊕ t_ss ⊗ p_*O` restricted to
/// `W`-invariants, which splits as the centre (trivial, contributing
/// `h¹(O) = g` per dimension) plus a bundle of rank `r'` and degree
/// `−|Δ⁺|(2g − 2)` (the ramification of the roots). For that bundle
/// `h⁰ = 0` generically, so Riemann–Roch gives
/// `h¹ = −deg + r'(g − 1) = |Δ⁺|(2g − 2) + r'(g − 1)`.
pub fn prym_dim(datum: &RootDatum, curve: &CurveSpec) -> Result<i64> {
    let CurveSpec::Canonical { g } = *curve else {
        return Err(Error::Precondition("the Prym dimension is only derived for the canonical bundle".into()));
    };
    if g < 2 {
        return Err(Error::Precondition(format!("canonical bundle needs genus ≥ 2, got {g}")));
    }
    let system = RootSystem::new(datum)?;
    let g = g as i64;
    let z = (datum.rank() - datum.semisimple_rank()) as i64;
    let r_ss = datum.semisimple_rank() as i64;
    let pos = system.positive_roots().len() as i64;
    Ok(z * g + pos * (2 * g - 2) + r_ss * (g - 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HitchinRow {
    pub datum: String,
    pub g: u32,
    pub hitchin_dim: i64,
    pub prym_dim: i64,
    pub cameral_genus: i64,
    pub equal: bool,
}

pub fn hitchin_row(datum: &RootDatum, g: u32) -> Result<HitchinRow> {
    let curve = CurveSpec::Canonical { g };
    let hitchin_dim = hitchin_dim(datum, &curve)?;
    let prym_dim = prym_dim(datum, &curve)?;
    Ok(HitchinRow {
        datum: datum.label(),
        g,
        hitchin_dim,
        prym_dim,
        cameral_genus: cameral_genus(datum, &curve)?,
        equal: hitchin_dim == prym_dim,
    })
}

pub fn prym_equals_hitchin(datum: &RootDatum, g: u32) -> Result<bool> {
    Ok(hitchin_row(datum, g)?.equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_classical, Family};

    fn d(f: Family, n: usize) -> RootDatum {
        build_classical(f, n).unwrap()
    }

    #[test]
    fn h0_values() {
        assert_eq!(h0_of_power(&CurveSpec::Canonical { g: 2 }, 2).unwrap(), 3);
        assert_eq!(h0_of_power(&CurveSpec::Rational { k: 2 }, 3).unwrap(), 7);
        assert_eq!(h0_of_power(&CurveSpec::Rational { k: -3 }, 1).unwrap(), 0);
        assert_eq!(h0_of_power(&CurveSpec::Canonical { g: 5 }, 0).unwrap(), 1);
        assert!(h0_of_power(&CurveSpec::Canonical { g: 1 }, 1).is_err());
    }

    #[test]
    fn base_dimensions() {
        let k = |g| CurveSpec::Canonical { g };
        assert_eq!(hitchin_dim(&d(Family::SL, 2), &k(2)).unwrap(), 3);
        for n in 1..=4 {
            for g in 2..=4u32 {
                let gi = g as i64;
                let n2 = (n * n) as i64;
                assert_eq!(hitchin_dim(&d(Family::GL, n), &k(g)).unwrap(), n2 * (gi - 1) + 1);
                if n >= 2 {
                    let diff = hitchin_dim(&d(Family::GL, n), &k(g)).unwrap() - hitchin_dim(&d(Family::SL, n), &k(g)).unwrap();
                    assert_eq!(diff, gi);
                }
            }
        }
        assert_eq!(hitchin_dim(&d(Family::GL, 1), &k(3)).unwrap(), 3);
    }

    #[test]
    fn cameral_genera() {
        for g in 2..=5 {
            assert_eq!(cameral_genus(&d(Family::SL, 2), &CurveSpec::Canonical { g }).unwrap(), 4 * g as i64 - 3);
        }
        assert_eq!(cameral_genus(&d(Family::SL, 2), &CurveSpec::Rational { k: 2 }).unwrap(), 1);
        assert_eq!(cameral_genus(&d(Family::GL, 1), &CurveSpec::Canonical { g: 3 }).unwrap(), 3);
        // monotone in deg K and in |W|
        let sl2 = d(Family::SL, 2);
        let sl3 = d(Family::SL, 3);
        for k in 0..5 {
            let c = CurveSpec::Rational { k };
            let c1 = CurveSpec::Rational { k: k + 1 };
            assert!(cameral_genus(&sl2, &c).unwrap() <= cameral_genus(&sl2, &c1).unwrap());
            assert!(cameral_genus(&sl2, &c1).unwrap() <= cameral_genus(&sl3, &c1).unwrap());
        }
    }

    #[test]
    fn prym_matches_base() {
        for g in 2..=4u32 {
            let gi = g as i64;
            assert_eq!(prym_dim(&d(Family::SL, 2), &CurveSpec::Canonical { g }).unwrap(), 3 * gi - 3);
            assert_eq!(prym_dim(&d(Family::GL, 1), &CurveSpec::Canonical { g }).unwrap(), gi);
            for (f, n) in [(Family::SL, 2), (Family::GL, 3), (Family::Sp, 4), (Family::SO, 5), (Family::PGL, 3)] {
                assert!(prym_equals_hitchin(&d(f, n), g).unwrap());
            }
        }
        assert!(prym_dim(&d(Family::SL, 2), &CurveSpec::Rational { k: 2 }).is_err());
    }

    #[test]
    fn curve_json() {
        let c: CurveSpec = serde_json::from_str(r#"{"bundle": "canonical", "g": 3}"#).unwrap();
        assert_eq!(c, CurveSpec::Canonical { g: 3 });
    }
}
