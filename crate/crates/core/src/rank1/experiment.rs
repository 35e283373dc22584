use serde::Serialize;

use super::curve::HyperCurve;
use super::pic::{condition_star_quotient, pgl2_image_size, torsor_check, two_torsion};
use super::poly;
use crate::error::Result;
use crate::rootdata::{build_classical, Family};

/// Default enumeration budget (candidate `(u, v)` pairs).
pub const DEFAULT_MAX_ENUM: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rank1Report {
    pub q: u32,
    /// Coefficients of `f`, low degree first, in the field's integer encoding.
    pub f: Vec<u32>,
    pub g: usize,
    pub jac_order: usize,
    pub solutions: usize,
    pub torsor_ok: bool,
    pub det_identity_ok: bool,
    pub sigma_is_negation: bool,
    pub pgl2_image: usize,
    pub two_torsion: usize,
    /// `2^{r−1}` for `r` irreducible factors of `f`.
    pub two_torsion_from_factors: usize,
    pub star_quotient_sl2: usize,
    pub star_quotient_pgl2: usize,
}

impl Rank1Report {
    pub fn passed(&self) -> bool {
        self.solutions > 0
            && self.solutions == self.jac_order
            && self.torsor_ok
            && self.det_identity_ok
            && self.sigma_is_negation
            && self.pgl2_image * self.two_torsion == self.solutions
            && self.two_torsion == self.two_torsion_from_factors
            && self.star_quotient_sl2 == 1
            && self.star_quotient_pgl2 == 2
    }
}

/// Number of irreducible factors of a squarefree polynomial, by
/// distinct-degree factorization.
pub fn irreducible_factor_count(curve: &HyperCurve) -> usize {
    let fq = curve.field();
    let q = fq.order() as u64;
    let mut rest = poly::monic(fq, curve.f());
    let mut h: Vec<u32> = vec![0, 1];
    let mut count = 0;
    let mut d = 1;
    while poly::degree(&rest).unwrap_or(0) >= 2 * d {
        h = poly::powmod(fq, &h, q, &rest);
        let g = poly::gcd(fq, &rest, &poly::sub(fq, &h, &[0, 1]));
        let gd = poly::degree(&g).unwrap_or(0);
        if gd > 0 {
            count += gd / d;
            rest = poly::divrem(fq, &rest, &g).0;
            h = poly::rem(fq, &h, &rest);
        }
        d += 1;
    }
    if poly::degree(&rest).unwrap_or(0) > 0 {
        count += 1;
    }
    count
}

/// Enumerates `Jac(F_q)` and checks the SL(2)/PGL(2) descriptions on it.
pub fn run_rank1(curve: &HyperCurve, max_enum: u64) -> Result<Rank1Report> {
    let jac = curve.enumerate_jacobian(max_enum)?;
    let solutions = curve.sl2_solutions(max_enum)?;
    let torsor_ok = torsor_check(curve, &jac, &solutions);
    let g1 = curve.genus() as i64 + 1;
    let det_identity_ok = jac.iter().all(|m| {
        (-1..=g1 + 1).all(|deg| curve.det_pushforward_identity(&super::pic::PicClass { degree: deg, class: m.clone() }))
    });
    let sigma_is_negation = jac.iter().all(|m| {
        let l = super::pic::PicClass { degree: 0, class: m.clone() };
        let s = curve.sigma_pullback(&l);
        curve.pic_add(&l, &s).class.is_identity() && curve.sigma_pullback(&s) == l
    });
    let two = two_torsion(curve, &jac);
    Ok(Rank1Report {
        q: curve.field().order(),
        f: curve.f().to_vec(),
        g: curve.genus(),
        jac_order: jac.len(),
        solutions: solutions.len(),
        torsor_ok,
        det_identity_ok,
        sigma_is_negation,
        pgl2_image: pgl2_image_size(curve, &solutions)?,
        two_torsion: two,
        two_torsion_from_factors: 1 << (irreducible_factor_count(curve) - 1),
        star_quotient_sl2: condition_star_quotient(curve, &build_classical(Family::SL, 2)?)?,
        star_quotient_pgl2: condition_star_quotient(curve, &build_classical(Family::PGL, 2)?)?,
    })
}
