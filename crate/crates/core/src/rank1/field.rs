use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order handled (tables are `q²` entries).
pub const MAX_FIELD_ORDER: u32 = 1024;

/// A finite field `F_q`, `q = p^k` odd, with elements encoded as integers
/// `0..q` (base-`p` digits of the polynomial representative in `F_p[t]/(m)`).
#[derive(Clone)]
pub struct Fq(Arc<Tables>);

struct Tables {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    sqrt: Vec<Option<u32>>,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product in `F_p[t]/(m)` with `m` monic of degree `k` (coefficients low first, leading 1 omitted).
fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let k = m.len();
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c != 0 {
            prod[deg] = 0;
            for (i, &mi) in m.iter().enumerate() {
                prod[deg - k + i] = (prod[deg - k + i] + p - (c * mi) % p) % p;
            }
        }
    }
    prod.truncate(k);
    prod
}

impl Fq {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidCurve(format!("{q} is not a prime power")))?;
        if p == 2 {
            return Err(Error::InvalidCurve("characteristic 2 is not supported".into()));
        }
        if q > MAX_FIELD_ORDER {
            return Err(Error::Budget(format!("field order {q} exceeds {MAX_FIELD_ORDER}")));
        }
        let n = q as usize;
        // smallest monic m of degree k without zero divisors in F_p[t]/(m)
        let modulus = (0..q)
            .map(|c| digits(c, p, k))
            .find(|m| {
                k == 1
                    || (1..q).all(|a| {
                        let da = digits(a, p, k);
                        (1..q).all(|b| poly_mulmod(&da, &digits(b, p, k), m, p).iter().any(|&c| c != 0))
                    })
            })
            .expect("irreducible polynomials exist in every degree");
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p);
                mul[(a * q + b) as usize] = undigits(&poly_mulmod(&da, &db, &modulus, p), p);
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap()).collect();
        let inv = (0..q).map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap() }).collect();
        let mut sqrt = vec![None; n];
        for a in 0..q {
            let s = mul[(a * q + a) as usize] as usize;
            if sqrt[s].is_none() {
                sqrt[s] = Some(a);
            }
        }
        Ok(Fq(Arc::new(Tables { p, k, q, modulus, add, mul, neg, inv, sqrt })))
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q
    }

    /// Image of an integer under `Z → F_p ⊂ F_q`.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.0.add[(a * self.0.q + b) as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.0.mul[(a * self.0.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0) = 0`.
    pub fn inv(&self, a: u32) -> u32 {
        self.0.inv[a as usize]
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn sqrt(&self, a: u32) -> Option<u32> {
        self.0.sqrt[a as usize]
    }

    /// Quadratic character: 0, 1 or −1.
    pub fn legendre(&self, a: u32) -> i64 {
        match (a, self.sqrt(a)) {
            (0, _) => 0,
            (_, Some(_)) => 1,
            _ => -1,
        }
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.0.q == other.0.q && self.0.modulus == other.0.modulus
    }
}

impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f = Fq::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.neg(2), 5);
        assert_eq!((1..7).filter(|&a| f.sqrt(a).is_some()).count(), 3);
    }

    #[test]
    fn prime_power_fields() {
        for q in [9u32, 25, 27] {
            let f = Fq::new(q).unwrap();
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.pow(a, (q - 1) as u64), 1);
            }
            assert_eq!((1..q).filter(|&a| f.sqrt(a).is_some()).count() as u32, (q - 1) / 2);
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(Fq::new(2).is_err());
        assert!(Fq::new(12).is_err());
        assert!(Fq::new(1).is_err());
    }
}
