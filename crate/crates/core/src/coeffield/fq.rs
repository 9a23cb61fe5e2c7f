//! Finite fields 𝔽_q = 𝔽_p[ω]/(m(ω)).

use super::{upoly, Field};
use crate::error::{Error, Result};

/// Elements are coefficient vectors of length r over 𝔽_p, lowest power first.
pub type Fq = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    /// Monic modulus, lowest degree first, length r + 1.
    modulus: Vec<u64>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test for a polynomial over a finite field with `q` elements.
pub fn is_irreducible_over_finite<F: Field>(f: &F, q: u128, poly: &[F::Elem]) -> Result<bool> {
    let m = upoly::monic(f, &poly.to_vec())?;
    let d = match upoly::degree(f, &m) {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(d) => d,
    };
    let x = vec![f.zero(), f.one()];
    // X^{q^k} mod m for k = 1..d
    let mut powers = Vec::with_capacity(d);
    let mut cur = x.clone();
    for _ in 0..d {
        cur = upoly::powmod(f, &cur, q, &m)?;
        powers.push(cur.clone());
    }
    if upoly::sub(f, &powers[d - 1], &x).iter().any(|c| !f.is_zero(c)) {
        return Ok(false);
    }
    for l in prime_factors(d as u64) {
        let k = d / l as usize;
        let diff = upoly::sub(f, &powers[k - 1], &x);
        let g = upoly::gcd(f, &diff, &m)?;
        if upoly::degree(f, &g) != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl FiniteField {
    /// 𝔽_{p^r} with the smallest irreducible modulus in counting order.
    pub fn new(p: u64, r: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::invalid("r", "degree must be positive"));
        }
        if r == 1 {
            return Ok(FiniteField { p, modulus: vec![0, 1] });
        }
        let prime = FiniteField { p, modulus: vec![0, 1] };
        let total = (p as u128).pow(r as u32);
        for idx in 0..total {
            let mut coeffs = Vec::with_capacity(r + 1);
            let mut n = idx;
            for _ in 0..r {
                coeffs.push((n % p as u128) as u64);
                n /= p as u128;
            }
            coeffs.push(1);
            let poly: Vec<Fq> = coeffs.iter().map(|&c| vec![c]).collect();
            if is_irreducible_over_finite(&prime, p as u128, &poly)? {
                return Ok(FiniteField { p, modulus: coeffs });
            }
        }
        Err(Error::NotIrreducible)
    }

    /// 𝔽_p[ω]/(modulus); the modulus is checked for irreducibility.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if modulus.last() != Some(&1) || modulus.len() < 2 {
            return Err(Error::NotMonic);
        }
        let prime = FiniteField { p, modulus: vec![0, 1] };
        let poly: Vec<Fq> = modulus.iter().map(|&c| vec![c]).collect();
        if !is_irreducible_over_finite(&prime, p as u128, &poly)? {
            return Err(Error::NotIrreducible);
        }
        Ok(FiniteField { p, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.degree() as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elem(&self, coeffs: &[i64]) -> Fq {
        let mut out = vec![0u64; self.degree()];
        let p = self.p as i64;
        for (i, c) in coeffs.iter().enumerate() {
            let i = i % self.degree();
            out[i] = (out[i] + c.rem_euclid(p) as u64) % self.p;
        }
        self.reduce_full(out)
    }

    fn reduce_full(&self, mut a: Vec<u64>) -> Fq {
        let r = self.degree();
        for c in a.iter_mut() {
            *c %= self.p;
        }
        while a.len() > r {
            let top = a.pop().unwrap();
            if top != 0 {
                let base = a.len() - r;
                for (j, m) in self.modulus.iter().enumerate().take(r) {
                    a[base + j] = (a[base + j] + self.p - (top * m) % self.p) % self.p;
                }
            }
        }
        a.resize(r, 0);
        a
    }

    /// Field generator ω (or 1 over the prime field, whose modulus is X).
    pub fn generator(&self) -> Fq {
        if self.degree() == 1 {
            return self.elem(&[1]);
        }
        let mut g = vec![0; self.degree()];
        g[1] = 1;
        g
    }

    pub fn pow(&self, a: &Fq, mut n: u128) -> Fq {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn frobenius(&self, a: &Fq) -> Fq {
        self.pow(a, self.p as u128)
    }

    /// The unique p-th root.
    pub fn pth_root(&self, a: &Fq) -> Fq {
        let mut x = a.clone();
        for _ in 1..self.degree() {
            x = self.frobenius(&x);
        }
        x
    }

    /// Iterator over all field elements, in counting order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        let p = self.p as u128;
        let r = self.degree();
        (0..self.order()).map(move |mut n| {
            let mut v = Vec::with_capacity(r);
            for _ in 0..r {
                v.push((n % p) as u64);
                n /= p;
            }
            v
        })
    }
}

impl Field for FiniteField {
    type Elem = Fq;

    fn zero(&self) -> Fq {
        vec![0; self.degree()]
    }

    fn one(&self) -> Fq {
        let mut v = vec![0; self.degree()];
        v[0] = 1;
        v
    }

    fn is_zero(&self, a: &Fq) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn neg(&self, a: &Fq) -> Fq {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }

    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        if self.degree() == 1 {
            return vec![(a[0] * b[0]) % self.p];
        }
        let mut out = vec![0u64; 2 * self.degree() - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.reduce_full(out)
    }

    fn inv(&self, a: &Fq) -> Result<Fq> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    fn from_int(&self, n: i64) -> Fq {
        self.elem(&[n])
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_f3() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(f.inv(&f.elem(&[2])).unwrap(), f.elem(&[2]));
    }

    #[test]
    fn f9_modulus_and_roots() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        // X^2 + 1 is the first irreducible quadratic over 𝔽_3 in counting order
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let g = f.generator();
        let r = f.pth_root(&g);
        assert_eq!(f.pow(&r, 3), g);
        for x in f.elements().filter(|x| !f.is_zero(x)) {
            assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
        }
    }

    #[test]
    fn rabin_rejects_reducible() {
        let f = FiniteField::new(2, 1).unwrap();
        let x2_1: Vec<Fq> = vec![vec![1], vec![0], vec![1]];
        assert!(!is_irreducible_over_finite(&f, 2, &x2_1).unwrap());
        let x2_x_1: Vec<Fq> = vec![vec![1], vec![1], vec![1]];
        assert!(is_irreducible_over_finite(&f, 2, &x2_x_1).unwrap());
        assert!(FiniteField::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(FiniteField::new(4, 1).is_err());
    }
}
