//! Dense polynomials over `F_q`, coefficients low degree first, no
//! trailing zeros (the zero polynomial is empty).

use super::field::Fq;

pub type Poly = Vec<u32>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add(f: &Fq, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
}

pub fn neg(f: &Fq, a: &[u32]) -> Poly {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub fn sub(f: &Fq, a: &[u32], b: &[u32]) -> Poly {
    add(f, a, &neg(f, b))
}

pub fn scale(f: &Fq, c: u32, a: &[u32]) -> Poly {
    trim(a.iter().map(|&x| f.mul(c, x)).collect())
}

pub fn mul(f: &Fq, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem(f: &Fq, a: &[u32], b: &[u32]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (vec![], trim(r));
    }
    let mut q = vec![0; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = f.mul(r[k + db], lead_inv);
        q[k] = c;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                r[k + i] = f.sub(r[k + i], f.mul(c, bi));
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(f: &Fq, a: &[u32], b: &[u32]) -> Poly {
    divrem(f, a, b).1
}

pub fn monic(f: &Fq, a: &[u32]) -> Poly {
    match a.last() {
        Some(&l) => scale(f, f.inv(l), a),
        None => vec![],
    }
}

/// `(d, s, t)` with `d = s·a + t·b` monic (or zero).
pub fn xgcd(f: &Fq, a: &[u32], b: &[u32]) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (Poly, Poly) = (vec![1], vec![]);
    let (mut t0, mut t1): (Poly, Poly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    match r0.last() {
        Some(&l) => {
            let c = f.inv(l);
            (scale(f, c, &r0), scale(f, c, &s0), scale(f, c, &t0))
        }
        None => (vec![], s0, t0),
    }
}

pub fn gcd(f: &Fq, a: &[u32], b: &[u32]) -> Poly {
    xgcd(f, a, b).0
}

pub fn derivative(f: &Fq, a: &[u32]) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect())
}

pub fn eval(f: &Fq, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// `base^e mod m`.
pub fn powmod(f: &Fq, base: &[u32], mut e: u64, m: &[u32]) -> Poly {
    let mut acc: Poly = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m);
        }
        b = rem(f, &mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

/// All monic polynomials of exact degree `d`.
pub fn monic_of_degree(f: &Fq, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = f.order() as u64;
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut p = Vec::with_capacity(d + 1);
        for _ in 0..d {
            p.push((idx % q) as u32);
            idx /= q;
        }
        p.push(1);
        p
    })
}

/// All polynomials of degree `< d` (including zero).
pub fn below_degree(f: &Fq, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = f.order() as u64;
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut p = Vec::with_capacity(d);
        for _ in 0..d {
            p.push((idx % q) as u32);
            idx /= q;
        }
        trim(p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let f = Fq::new(5).unwrap();
        // (x+1)(x+2) and (x+1)(x+3)
        let a = mul(&f, &[1, 1], &[2, 1]);
        let b = mul(&f, &[1, 1], &[3, 1]);
        let (d, s, t) = xgcd(&f, &a, &b);
        assert_eq!(d, vec![1, 1]);
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), d);
        let (q, r) = divrem(&f, &a, &[2, 1]);
        assert_eq!((q, r), (vec![1, 1], vec![]));
    }

    #[test]
    fn powmod_fermat() {
        let f = Fq::new(7).unwrap();
        // x^7 ≡ x mod (x^2 + 1)? only if x^2+1 splits; check x^49 ≡ x instead
        let m = vec![1, 0, 1];
        assert_eq!(powmod(&f, &[0, 1], 49, &m), vec![0, 1]);
    }
}
