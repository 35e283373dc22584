use serde::Serialize;

use super::field::Fq;
use super::poly::{self, Poly};
use crate::error::{Error, Result};

/// `y² = f(x)` with `f` squarefree of odd degree `2g + 1` over `F_q`, `q` odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperCurve {
    field: Fq,
    f: Poly,
    genus: usize,
}

/// Reduced Mumford pair `(u, v)`: `u` monic, `deg v < deg u ≤ g`,
/// `u | v² − f`. `(1, 0)` is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MumfordDivisor {
    pub u: Poly,
    pub v: Poly,
}

impl MumfordDivisor {
    pub fn identity() -> Self {
        MumfordDivisor { u: vec![1], v: vec![] }
    }

    pub fn is_identity(&self) -> bool {
        self.u == [1]
    }

    pub fn degree(&self) -> usize {
        poly::degree(&self.u).unwrap_or(0)
    }
}

impl HyperCurve {
    pub fn new(field: Fq, f: Poly) -> Result<Self> {
        let f = poly::trim(f);
        if f.iter().any(|&c| c >= field.order()) {
            return Err(Error::InvalidCurve("coefficient outside the field".into()));
        }
        let d = poly::degree(&f).unwrap_or(0);
        if d < 3 || d % 2 == 0 {
            return Err(Error::InvalidCurve(format!("f must have odd degree at least 3, got {d}")));
        }
        let df = poly::derivative(&field, &f);
        if df.is_empty() || poly::gcd(&field, &f, &df) != [1] {
            return Err(Error::InvalidCurve("f is not squarefree".into()));
        }
        Ok(HyperCurve { field, f, genus: (d - 1) / 2 })
    }

    /// `x^{2g+1} + x + c` for the smallest `c` making it squarefree, else the
    /// first squarefree monic polynomial in enumeration order.
    pub fn default_for(q: u32, genus: usize) -> Result<Self> {
        let field = Fq::new(q)?;
        let d = 2 * genus + 1;
        let mut candidates: Vec<Poly> = (1..q)
            .map(|c| {
                let mut f = vec![0; d + 1];
                f[0] = c;
                f[1] = 1;
                f[d] = 1;
                f
            })
            .collect();
        candidates.extend(poly::monic_of_degree(&field, d).take(100_000));
        candidates
            .into_iter()
            .find_map(|f| HyperCurve::new(field.clone(), f).ok())
            .ok_or_else(|| Error::InvalidCurve(format!("no squarefree polynomial of degree {d} over F_{q}")))
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn f(&self) -> &[u32] {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_valid(&self, d: &MumfordDivisor) -> bool {
        let fq = &self.field;
        d.u.last() == Some(&1)
            && d.degree() <= self.genus
            && poly::degree(&d.v).is_none_or(|dv| dv < d.degree())
            && poly::rem(fq, &poly::sub(fq, &poly::mul(fq, &d.v, &d.v), &self.f), &d.u).is_empty()
    }

    /// Reduces a semi-reduced pair `(u, v)` with `u | v² − f`.
    pub fn reduce(&self, u: &[u32], v: &[u32]) -> MumfordDivisor {
        let fq = &self.field;
        let mut u = poly::monic(fq, u);
        let mut v = poly::rem(fq, v, &u);
        while poly::degree(&u).unwrap_or(0) > self.genus {
            let num = poly::sub(fq, &self.f, &poly::mul(fq, &v, &v));
            let (q, r) = poly::divrem(fq, &num, &u);
            debug_assert!(r.is_empty());
            u = poly::monic(fq, &q);
            v = poly::rem(fq, &poly::neg(fq, &v), &u);
        }
        MumfordDivisor { u, v }
    }

    /// Cantor composition followed by reduction.
    pub fn cantor_add(&self, a: &MumfordDivisor, b: &MumfordDivisor) -> MumfordDivisor {
        let fq = &self.field;
        let (d1, e1, e2) = poly::xgcd(fq, &a.u, &b.u);
        let vsum = poly::add(fq, &a.v, &b.v);
        let (d, c1, c2) = poly::xgcd(fq, &d1, &vsum);
        let s1 = poly::mul(fq, &c1, &e1);
        let s2 = poly::mul(fq, &c1, &e2);
        let s3 = c2;
        let u = poly::divrem(fq, &poly::mul(fq, &a.u, &b.u), &poly::mul(fq, &d, &d)).0;
        let num = poly::add(
            fq,
            &poly::add(fq, &poly::mul(fq, &s1, &poly::mul(fq, &a.u, &b.v)), &poly::mul(fq, &s2, &poly::mul(fq, &b.u, &a.v))),
            &poly::mul(fq, &s3, &poly::add(fq, &poly::mul(fq, &a.v, &b.v), &self.f)),
        );
        let v = poly::divrem(fq, &num, &d).0;
        self.reduce(&u, &poly::rem(fq, &v, &u))
    }

    pub fn negate(&self, a: &MumfordDivisor) -> MumfordDivisor {
        MumfordDivisor { u: a.u.clone(), v: poly::neg(&self.field, &a.v) }
    }

    /// `k·a` by double-and-add (`k` may be negative).
    pub fn multiply(&self, a: &MumfordDivisor, k: i64) -> MumfordDivisor {
        let mut base = if k < 0 { self.negate(a) } else { a.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = MumfordDivisor::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.cantor_add(&acc, &base);
            }
            base = self.cantor_add(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Class of `P − ∞` for an affine point `P = (x, y)`.
    pub fn point_class(&self, x: u32, y: u32) -> Result<MumfordDivisor> {
        let fq = &self.field;
        if fq.mul(y, y) != poly::eval(fq, &self.f, x) {
            return Err(Error::InvalidCurve(format!("({x}, {y}) is not on the curve")));
        }
        Ok(MumfordDivisor { u: vec![fq.neg(x), 1], v: poly::trim(vec![y]) })
    }

    /// Every reduced pair over `F_q`, i.e. the group `Jac(F_q)`.
    pub fn enumerate_jacobian(&self, max_enum: u64) -> Result<Vec<MumfordDivisor>> {
        let q = self.field.order() as u64;
        let work: u64 = (0..=self.genus as u32).map(|d| q.saturating_pow(2 * d)).sum();
        if work > max_enum {
            return Err(Error::Budget(format!(
                "enumerating Jac over F_{q} in genus {} needs about {work} candidates (limit {max_enum}); use a smaller field or genus",
                self.genus
            )));
        }
        let fq = &self.field;
        let mut out = Vec::new();
        for d in 0..=self.genus {
            for u in poly::monic_of_degree(fq, d) {
                for v in poly::below_degree(fq, d) {
                    let r = poly::rem(fq, &poly::sub(fq, &poly::mul(fq, &v, &v), &self.f), &u);
                    if r.is_empty() {
                        out.push(MumfordDivisor { u: u.clone(), v });
                    }
                }
            }
        }
        Ok(out)
    }
}
