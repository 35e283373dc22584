//! Spectral covers of degree `n` and their cameral (splitting-algebra)
//! counterparts, with exact checks that the two constructions invert each
//! other.

mod charpoly;
mod invariants;
mod ring;
mod spectral;
mod splitting;
mod units;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use charpoly::charpoly_condition;
pub use invariants::{
    anti_invariant_module, invariant_subalgebra, roundtrip_check, stabilizer_of_first, AntiInvariantReport,
    InvariantAlgebra, RoundtripReport,
};
pub use ring::{BaseRing, QPoly};
pub use spectral::{characteristic_polynomial, spectral_from_coeffs, SpectralAlgebra};
pub use splitting::{compose, permutations, splitting_algebra, transposition, MPoly, SplittingAlgebra};
pub use units::{symmetric_group, unit_cocycle_trivialize, unit_coboundary, unit_inverse};

use crate::error::{Error, Result};
use crate::linalg::rational::Q;

/// Serialized cover: `{"n": 2, "coefficients": ["2", "-3"]}` for
/// `Y² − 3Y + 2`, coefficients `a₀, …, a_{n−1}` as rational strings.
/// Integers are also accepted on input, and `a` is an alias for
/// `coefficients`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSpec {
    pub n: usize,
    #[serde(alias = "a", deserialize_with = "rational_strings")]
    pub coefficients: Vec<String>,
}

fn rational_strings<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<String>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Coeff {
        Text(String),
        Int(i64),
    }
    let raw = Vec::<Coeff>::deserialize(d)?;
    Ok(raw
        .into_iter()
        .map(|c| match c {
            Coeff::Text(s) => s,
            Coeff::Int(v) => v.to_string(),
        })
        .collect())
}

impl CoverSpec {
    pub fn from_coeffs(coeffs: &[Q]) -> Self {
        CoverSpec { n: coeffs.len(), coefficients: coeffs.iter().map(|c| c.to_string()).collect() }
    }

    pub fn to_spectral(&self) -> Result<SpectralAlgebra<Q>> {
        let coeffs = self
            .coefficients
            .iter()
            .map(|s| s.trim().parse::<Q>().map_err(|_| Error::Precondition(format!("bad rational coefficient {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        spectral_from_coeffs(self.n, coeffs)
    }
}

/// Coefficients with numerators in `[−5, 5]` and denominators in `[1, 4]`.
pub fn random_coeffs(rng: &mut impl Rng, n: usize) -> Vec<Q> {
    (0..n).map(|_| Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into())).collect()
}

/// A random element of the spectral algebra with small rational coordinates.
pub fn random_element(rng: &mut impl Rng, n: usize) -> Vec<Q> {
    random_coeffs(rng, n)
}

/// Roundtrip and characteristic-polynomial checks for a single cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub cover: CoverSpec,
    pub roundtrip: RoundtripReport,
    pub symmetric_identities: bool,
    /// Elements checked: `x` first, then the random ones.
    pub charpoly_checked: usize,
    pub charpoly_failures: Vec<Vec<String>>,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.roundtrip.passed() && self.symmetric_identities && self.charpoly_failures.is_empty()
    }
}

/// Runs the roundtrip, then the characteristic-polynomial condition for `x`
/// and `samples` random elements drawn from `rng`.
pub fn cover_report(spec: &SpectralAlgebra<Q>, rng: &mut impl Rng, samples: usize) -> Result<CoverReport> {
    let roundtrip = roundtrip_check(spec)?;
    let alg = SplittingAlgebra::new(spec);
    let mut elements = vec![spec.x()];
    elements.extend((0..samples).map(|_| random_element(rng, spec.n)));
    let charpoly_failures = elements
        .iter()
        .filter(|f| !charpoly_condition(spec, &alg, f))
        .map(|f| f.iter().map(ToString::to_string).collect())
        .collect();
    Ok(CoverReport {
        cover: CoverSpec::from_coeffs(&spec.coeffs),
        roundtrip,
        symmetric_identities: alg.symmetric_identities_hold(),
        charpoly_checked: elements.len(),
        charpoly_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cover_json() {
        let c: CoverSpec = serde_json::from_str(r#"{"n": 2, "coefficients": ["2", "-3/2"]}"#).unwrap();
        let s = c.to_spectral().unwrap();
        let short: CoverSpec = serde_json::from_str(r#"{"n": 2, "a": [2, "-3"]}"#).unwrap();
        assert_eq!(short.coefficients, ["2", "-3"]);
        assert_eq!(CoverSpec::from_coeffs(&s.coeffs), c);
        let bad = CoverSpec { n: 1, coefficients: vec!["x".into()] };
        assert!(bad.to_spectral().is_err());
    }

    #[test]
    fn seeded_covers_are_reproducible() {
        let a = random_coeffs(&mut ChaCha8Rng::seed_from_u64(7), 4);
        let b = random_coeffs(&mut ChaCha8Rng::seed_from_u64(7), 4);
        assert_eq!(a, b);
    }
}
