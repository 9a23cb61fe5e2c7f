//! Dense univariate polynomials over any [`Field`], lowest degree first.

use super::Field;
use crate::error::{Error, Result};

pub type Poly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, a: &mut Poly<F::Elem>) {
    while let Some(last) = a.last() {
        if f.is_zero(last) {
            a.pop();
        } else {
            break;
        }
    }
}

pub fn degree<F: Field>(f: &F, a: &Poly<F::Elem>) -> Option<usize> {
    a.iter().rposition(|c| !f.is_zero(c))
}

pub fn add<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(f, &mut out);
    out
}

pub fn neg<F: Field>(f: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn sub<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    add(f, a, &neg(f, b))
}

pub fn scale<F: Field>(f: &F, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
    let mut out: Vec<_> = a.iter().map(|x| f.mul(x, c)).collect();
    trim(f, &mut out);
    out
}

pub fn mul<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if f.is_zero(y) {
                continue;
            }
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

/// Quotient and remainder; the divisor must be nonzero.
pub fn divrem<F: Field>(
    f: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
    let db = degree(f, b).ok_or(Error::DivisionByZero)?;
    let lead_inv = f.inv(&b[db])?;
    let mut r = a.clone();
    trim(f, &mut r);
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(f, &r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (j, y) in b.iter().enumerate().take(db + 1) {
            r[shift + j] = f.sub(&r[shift + j], &f.mul(&c, y));
        }
        r[dr] = f.zero();
        q[shift] = c;
        trim(f, &mut r);
    }
    trim(f, &mut q);
    Ok((q, r))
}

pub fn rem<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    Ok(divrem(f, a, b)?.1)
}

pub fn monic<F: Field>(f: &F, a: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    match degree(f, a) {
        None => Ok(Vec::new()),
        Some(d) => {
            let inv = f.inv(&a[d])?;
            Ok(scale(f, a, &inv))
        }
    }
}

/// Monic gcd (zero if both inputs vanish).
pub fn gcd<F: Field>(f: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y)?;
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Returns (g, s, t) with s·a + t·b = g monic.
pub fn xgcd<F: Field>(
    f: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
) -> Result<(Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>)> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    trim(f, &mut r0);
    trim(f, &mut r1);
    let (mut s0, mut s1) = (vec![f.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1)?;
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let d = degree(f, &r0).ok_or(Error::DivisionByZero)?;
    let inv = f.inv(&r0[d])?;
    Ok((scale(f, &r0, &inv), scale(f, &s0, &inv), scale(f, &t0, &inv)))
}

pub fn derivative<F: Field>(f: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    let mut out: Vec<_> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_int(i as i64), c))
        .collect();
    trim(f, &mut out);
    out
}

pub fn eval<F: Field>(f: &F, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in a.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

/// a^n mod m.
pub fn powmod<F: Field>(
    f: &F,
    a: &Poly<F::Elem>,
    mut n: u128,
    m: &Poly<F::Elem>,
) -> Result<Poly<F::Elem>> {
    let mut base = rem(f, a, m)?;
    let mut acc = rem(f, &vec![f.one()], m)?;
    while n > 0 {
        if n & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &base), m)?;
        }
        base = rem(f, &mul(f, &base, &base), m)?;
        n >>= 1;
    }
    Ok(acc)
}

pub fn is_zero<F: Field>(f: &F, a: &Poly<F::Elem>) -> bool {
    a.iter().all(|c| f.is_zero(c))
}
