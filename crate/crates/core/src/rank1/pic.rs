use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::curve::{HyperCurve, MumfordDivisor};
use super::poly;
use crate::error::{Error, Result};
use crate::rootdata::RootDatum;

/// A divisor class `degree·∞ + class`, where `class` has degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PicClass {
    pub degree: i64,
    pub class: MumfordDivisor,
}

impl PicClass {
    pub fn multiple_of_infinity(d: i64) -> Self {
        PicClass { degree: d, class: MumfordDivisor::identity() }
    }
}

impl HyperCurve {
    pub fn pic_add(&self, a: &PicClass, b: &PicClass) -> PicClass {
        PicClass { degree: a.degree + b.degree, class: self.cantor_add(&a.class, &b.class) }
    }

    pub fn pic_scale(&self, a: &PicClass, k: i64) -> PicClass {
        PicClass { degree: a.degree * k, class: self.multiply(&a.class, k) }
    }

    /// Pullback along the hyperelliptic involution `(x, y) ↦ (x, −y)`,
    /// which fixes `∞`.
    pub fn sigma_pullback(&self, a: &PicClass) -> PicClass {
        PicClass { degree: a.degree, class: self.negate(&a.class) }
    }

    /// Class of the ramification divisor: the finite Weierstrass points
    /// (the zeros of `y`, Mumford pair `(f, 0)`) plus `∞`.
    pub fn ramification_class(&self) -> PicClass {
        let finite = self.reduce(self.f(), &[]);
        PicClass { degree: 2 * self.genus() as i64 + 2, class: finite }
    }

    /// `{L ∈ Pic^{g+1} : L + σ*L = [D]}`.
    pub fn sl2_solutions(&self, max_enum: u64) -> Result<Vec<PicClass>> {
        let d = self.ramification_class();
        let g1 = self.genus() as i64 + 1;
        Ok(self
            .enumerate_jacobian(max_enum)?
            .into_iter()
            .map(|m| PicClass { degree: g1, class: m })
            .filter(|l| self.pic_add(l, &self.sigma_pullback(l)) == d)
            .collect())
    }

    /// `p^*(det p_*L) + [D] = L + σ*L`, with `det p_*L = Nm(L) + det p_*O`
    /// and `deg det p_*O = −(g+1)` on the base line.
    ///
    /// For `L = n·∞ + (u, v)` (the effective part `E` of degree `deg u`),
    /// `Nm(L) = div(u) + (n − deg u)·∞_base`; pulling back `div(u)` gives
    /// `E + σE` and `∞_base` pulls back to `2∞`.
    pub fn det_pushforward_identity(&self, l: &PicClass) -> bool {
        let fq = self.field();
        let u = &l.class.u;
        let pulled_norm = self.cantor_add(&l.class, &MumfordDivisor { u: u.clone(), v: poly::neg(fq, &l.class.v) });
        let base_degree = l.degree - (self.genus() as i64 + 1);
        let lhs = self.pic_add(&PicClass { degree: 2 * base_degree, class: pulled_norm }, &self.ramification_class());
        let rhs = self.pic_add(l, &self.sigma_pullback(l));
        lhs == rhs
    }

    /// `2·L¹`, checked against `L + σ*L = 2[D]`.
    pub fn pgl2_from_sl2(&self, l1: &PicClass) -> Result<PicClass> {
        let d = self.ramification_class();
        if self.pic_add(l1, &self.sigma_pullback(l1)) != d {
            return Err(Error::Precondition("class is not an SL(2) solution".into()));
        }
        let l = self.pic_scale(l1, 2);
        if self.pic_add(&l, &self.sigma_pullback(&l)) != self.pic_scale(&d, 2) {
            return Err(Error::Internal("squared class fails the PGL(2) condition".into()));
        }
        Ok(l)
    }
}

/// Whether `m ↦ L + m` is a bijection from the group onto `solutions`, for
/// every `L` in `solutions`.
pub fn torsor_check(curve: &HyperCurve, jacobian: &[MumfordDivisor], solutions: &[PicClass]) -> bool {
    let target: HashSet<&PicClass> = solutions.iter().collect();
    !solutions.is_empty()
        && target.len() == solutions.len()
        && solutions.iter().all(|l| {
            let image: HashSet<PicClass> = jacobian.iter().map(|m| curve.pic_add(l, &PicClass { degree: 0, class: m.clone() })).collect();
            image.len() == jacobian.len() && image.iter().all(|x| target.contains(x)) && image.len() == target.len()
        })
}

/// Order of the 2-torsion subgroup, from the enumerated group.
pub fn two_torsion(curve: &HyperCurve, jacobian: &[MumfordDivisor]) -> usize {
    jacobian.iter().filter(|m| curve.cantor_add(m, m).is_identity()).count()
}

/// Size of the image of `L¹ ↦ 2L¹` on the SL(2) solutions.
pub fn pgl2_image_size(curve: &HyperCurve, solutions: &[PicClass]) -> Result<usize> {
    let image = solutions.iter().map(|l| curve.pgl2_from_sl2(l)).collect::<Result<BTreeSet<_>>>()?;
    Ok(image.len())
}

/// Sign ambiguity left by condition (*) for a rank-one datum: the constant
/// `σ`-anti-invariant maps to `G_m` (those `c` with `c² = 1`) modulo the ones
/// with `α(c) = c^k = 1` on the ramification divisor, `k = ⟨α, generator⟩`.
pub fn condition_star_quotient(curve: &HyperCurve, datum: &RootDatum) -> Result<usize> {
    if datum.rank() != 1 || datum.semisimple_rank() != 1 {
        return Err(Error::Precondition(format!("{} is not a rank-one semisimple datum", datum.label())));
    }
    let k = datum.simple_roots()[0][0].unsigned_abs();
    let fq = curve.field();
    let anti: Vec<u32> = fq.elements().filter(|&c| c != 0 && fq.mul(c, c) == 1).collect();
    let fixed = anti.iter().filter(|&&c| fq.pow(c, k) == 1).count();
    Ok(anti.len() / fixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_classical, Family};

    #[test]
    fn ramification_divisor_is_principal_part() {
        for (q, g) in [(3, 2), (5, 1), (7, 1)] {
            let c = HyperCurve::default_for(q, g).unwrap();
            assert!(c.ramification_class().class.is_identity());
            let l0 = PicClass::multiple_of_infinity(g as i64 + 1);
            assert!(c.sl2_solutions(1 << 20).unwrap().contains(&l0));
        }
    }

    #[test]
    fn sigma_on_points() {
        let c = HyperCurve::default_for(5, 2).unwrap();
        let fq = c.field();
        let (x, y) = fq
            .elements()
            .find_map(|x| fq.sqrt(poly::eval(fq, c.f(), x)).filter(|&y| y != 0).map(|y| (x, y)))
            .unwrap();
        let p = PicClass { degree: 0, class: c.point_class(x, y).unwrap() };
        let sp = PicClass { degree: 0, class: c.point_class(x, fq.neg(y)).unwrap() };
        assert_eq!(c.sigma_pullback(&p), sp);
        assert!(c.pic_add(&p, &sp).class.is_identity());
        let one_point = PicClass { degree: 1, class: p.class.clone() };
        assert!(c.det_pushforward_identity(&one_point));
        assert!(c.det_pushforward_identity(&PicClass::multiple_of_infinity(0)));
    }

    #[test]
    fn star_quotients() {
        let c = HyperCurve::default_for(7, 1).unwrap();
        assert_eq!(condition_star_quotient(&c, &build_classical(Family::PGL, 2).unwrap()).unwrap(), 2);
        assert_eq!(condition_star_quotient(&c, &build_classical(Family::SL, 2).unwrap()).unwrap(), 1);
        assert!(condition_star_quotient(&c, &build_classical(Family::GL, 2).unwrap()).is_err());
    }

    #[test]
    fn pgl2_rejects_non_solutions() {
        let c = HyperCurve::default_for(5, 1).unwrap();
        assert!(c.pgl2_from_sl2(&PicClass::multiple_of_infinity(0)).is_err());
        let l0 = PicClass::multiple_of_infinity(2);
        assert_eq!(c.pgl2_from_sl2(&l0).unwrap(), PicClass::multiple_of_infinity(4));
    }
}
