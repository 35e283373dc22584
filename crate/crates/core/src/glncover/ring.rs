use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::rational::{q, Q};

/// Exact commutative coefficient rings containing `Q`.
pub trait BaseRing: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division by a nonzero integer.
    fn div_int(&self, k: i64) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl BaseRing for Q {
    fn zero() -> Self {
        <Q as Zero>::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(v: i64) -> Self {
        q(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, k: i64) -> Self {
        self / q(k)
    }
}

/// Univariate polynomials `Σ c_k t^k` over `Q`, coefficients low degree first
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly(Vec<Q>);

impl QPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        QPoly(vec![q(0), q(1)])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, at: &Q) -> Q {
        self.0.iter().rev().fold(<Q as Zero>::zero(), |acc, c| acc * at + c)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl BaseRing for QPoly {
    fn zero() -> Self {
        QPoly(vec![])
    }
    fn one() -> Self {
        QPoly(vec![q(1)])
    }
    fn from_int(v: i64) -> Self {
        QPoly::new(vec![q(v)])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let z = <Q as Zero>::zero();
        QPoly::new((0..len).map(|k| self.0.get(k).unwrap_or(&z) + other.0.get(k).unwrap_or(&z)).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Self::zero();
        }
        let mut out = vec![<Q as Zero>::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
    fn neg(&self) -> Self {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
    fn div_int(&self, k: i64) -> Self {
        QPoly(self.0.iter().map(|c| c / q(k)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_arithmetic() {
        let t = QPoly::t();
        let p = t.add(&QPoly::one()).mul(&t.sub(&QPoly::one()));
        assert_eq!(p, QPoly::new(vec![q(-1), q(0), q(1)]));
        assert_eq!(p.eval(&q(3)), q(8));
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.degree(), Some(2));
    }
}
