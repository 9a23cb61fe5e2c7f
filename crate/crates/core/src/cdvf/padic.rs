//! Finite extensions of ℚ_p given by an unramified step followed by one
//! Eisenstein step: elements are p^k · Σ_{j<E} c_j π^j with c_j ∈ W = ℤ_p[ω].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::coeffield::{Field, FiniteField, Fq};
use crate::error::{Error, Result};

/// Element of the unramified ring W, coordinates in the ω-power basis.
pub type WElem = Vec<BigInt>;

#[derive(Debug, Clone, PartialEq)]
pub struct PAdicField {
    p: BigInt,
    unram: FiniteField,
    /// Monic integral lift of the residue modulus, length r + 1.
    unram_lift: Vec<BigInt>,
    /// Eisenstein coefficients e_0..e_{E-1} (the leading 1 is implicit).
    eis: Vec<WElem>,
    /// Absolute precision given to constants that are exact in principle.
    cap: i64,
    /// −(e_0/p)^{-1} to `cap` digits, used for π^{-1}.
    neg_u0_inv: WElem,
}

/// p^k · Σ c_j π^j, digits reduced modulo p^M so that every dropped term has
/// valuation ≥ `prec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicElem {
    pub k: i64,
    pub c: Vec<WElem>,
    pub prec: i64,
}

fn vp_int(p: &BigInt, x: &BigInt) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let mut v = 0;
    let mut y = x.clone();
    while (&y % p).is_zero() {
        y /= p;
        v += 1;
    }
    Some(v)
}

impl PAdicField {
    /// `unram_modulus` is a monic polynomial over ℤ, irreducible mod p; `eis`
    /// lists e_0..e_{E-1} of an Eisenstein polynomial over W.
    pub fn new(p: u64, unram_modulus: Vec<i64>, eis: Vec<WElem>, cap: i64) -> Result<Self> {
        let r = unram_modulus.len().saturating_sub(1);
        let unram = if r <= 1 {
            FiniteField::new(p, 1)?
        } else {
            FiniteField::with_modulus(p, unram_modulus.iter().map(|c| c.rem_euclid(p as i64) as u64).collect())?
        };
        let unram_lift: Vec<BigInt> = if r <= 1 {
            vec![BigInt::zero(), BigInt::one()]
        } else {
            unram_modulus.iter().map(|&c| BigInt::from(c)).collect()
        };
        let pb = BigInt::from(p);
        let rr = unram.degree();
        let eis: Vec<WElem> = eis
            .into_iter()
            .map(|mut w| {
                w.resize(rr, BigInt::zero());
                w
            })
            .collect();
        if eis.is_empty() {
            return Err(Error::invalid("tower", "Eisenstein polynomial must have positive degree"));
        }
        let mut field = PAdicField {
            p: pb.clone(),
            unram,
            unram_lift,
            eis,
            cap,
            neg_u0_inv: Vec::new(),
        };
        for (j, c) in field.eis.iter().enumerate() {
            if !c.iter().all(|x| (x % &pb).is_zero()) {
                return Err(Error::invalid(format!("tower.eisenstein[{j}]"), "coefficient not divisible by p"));
            }
        }
        let u0: WElem = field.eis[0].iter().map(|x| x / &pb).collect();
        if field.w_vp(&u0) != Some(0) {
            return Err(Error::invalid("tower.eisenstein[0]", "constant term must have p-valuation exactly 1"));
        }
        let digits = field.digits_for(cap) + 2;
        let inv = field.w_inv_unit(&u0, digits)?;
        field.neg_u0_inv = field.w_mod(&field.w_neg(&inv), digits);
        Ok(field)
    }

    /// ℚ_p itself (π = p).
    pub fn rational(p: u64, cap: i64) -> Result<Self> {
        PAdicField::new(p, vec![0, 1], vec![vec![BigInt::from(-(p as i64))]], cap)
    }

    pub fn with_cap(&self, cap: i64) -> Result<Self> {
        let modulus: Vec<i64> = self.unram_lift.iter().map(|c| i64::try_from(c).unwrap()).collect();
        PAdicField::new(self.p_u64(), modulus, self.eis.clone(), cap)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn p_u64(&self) -> u64 {
        u64::try_from(&self.p).unwrap()
    }

    /// Ramification index E = v_π(p).
    pub fn e(&self) -> i64 {
        self.eis.len() as i64
    }

    pub fn residue_field(&self) -> &FiniteField {
        &self.unram
    }

    pub fn eisenstein(&self) -> &[WElem] {
        &self.eis
    }

    pub fn unram_modulus(&self) -> &[BigInt] {
        &self.unram_lift
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    fn r(&self) -> usize {
        self.unram.degree()
    }

    fn digits_for(&self, prec: i64) -> i64 {
        prec.div_euclid(self.e()) + i64::from(prec.rem_euclid(self.e()) != 0)
    }

    // --- W arithmetic -------------------------------------------------

    pub fn w_zero(&self) -> WElem {
        vec![BigInt::zero(); self.r()]
    }

    pub fn w_from_int(&self, n: BigInt) -> WElem {
        let mut w = self.w_zero();
        w[0] = n;
        w
    }

    fn w_add(&self, a: &WElem, b: &WElem) -> WElem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn w_neg(&self, a: &WElem) -> WElem {
        a.iter().map(|x| -x).collect()
    }

    fn w_sub(&self, a: &WElem, b: &WElem) -> WElem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    fn w_scale(&self, a: &WElem, s: &BigInt) -> WElem {
        a.iter().map(|x| x * s).collect()
    }

    fn w_mul(&self, a: &WElem, b: &WElem) -> WElem {
        let r = self.r();
        if r == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut out = vec![BigInt::zero(); 2 * r - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        for d in (r..out.len()).rev() {
            let top = std::mem::take(&mut out[d]);
            if top.is_zero() {
                continue;
            }
            for j in 0..r {
                let delta = &top * &self.unram_lift[j];
                out[d - r + j] -= delta;
            }
        }
        out.truncate(r);
        out
    }

    fn w_mod(&self, a: &WElem, digits: i64) -> WElem {
        let m = self.p.pow(digits.max(0) as u32);
        a.iter().map(|x| x.mod_floor(&m)).collect()
    }

    fn w_is_zero(&self, a: &WElem) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// Minimal p-adic valuation of the coordinates.
    pub fn w_vp(&self, a: &WElem) -> Option<i64> {
        a.iter().filter_map(|x| vp_int(&self.p, x)).min()
    }

    fn w_residue(&self, a: &WElem) -> Fq {
        let pu = self.p_u64() as i64;
        let coeffs: Vec<i64> = a
            .iter()
            .map(|x| i64::try_from(x.mod_floor(&self.p)).unwrap() % pu)
            .collect();
        if self.r() == 1 {
            return self.unram.elem(&coeffs);
        }
        coeffs.iter().map(|&c| c as u64).collect()
    }

    fn w_lift(&self, a: &Fq) -> WElem {
        a.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Inverse of a unit of W modulo p^digits, by Newton iteration.
    fn w_inv_unit(&self, a: &WElem, digits: i64) -> Result<WElem> {
        let res = self.w_residue(a);
        let inv = self.unram.inv(&res).map_err(|_| Error::AssertionFailed("not a unit of W".into()))?;
        let mut y = self.w_lift(&inv);
        let two = self.w_from_int(BigInt::from(2));
        let mut have = 1;
        while have < digits {
            have *= 2;
            let ay = self.w_mul(a, &y);
            y = self.w_mod(&self.w_mul(&y, &self.w_sub(&two, &ay)), have.min(digits));
        }
        Ok(self.w_mod(&y, digits))
    }

    // --- elements -----------------------------------------------------

    pub fn zero_with_prec(&self, prec: i64) -> PAdicElem {
        PAdicElem { k: 0, c: vec![self.w_zero(); self.e() as usize], prec }
    }

    pub fn zero(&self) -> PAdicElem {
        self.zero_with_prec(self.cap)
    }

    pub fn from_digits(&self, k: i64, c: Vec<WElem>, prec: i64) -> PAdicElem {
        let mut x = PAdicElem { k, c, prec };
        x.c.resize(self.e() as usize, self.w_zero());
        self.normalize(x)
    }

    pub fn from_int(&self, n: i64) -> PAdicElem {
        self.from_bigint(BigInt::from(n), self.cap)
    }

    pub fn from_bigint(&self, n: BigInt, prec: i64) -> PAdicElem {
        let mut c = vec![self.w_zero(); self.e() as usize];
        c[0] = self.w_from_int(n);
        self.from_digits(0, c, prec)
    }

    /// w · π^j for a W-element w.
    pub fn from_w(&self, w: WElem, j: i64, prec: i64) -> PAdicElem {
        let mut w = w;
        w.resize(self.r(), BigInt::zero());
        let mut c = vec![self.w_zero(); self.e() as usize];
        c[0] = w;
        let x = self.from_digits(0, c, prec - j);
        self.mul_pi_pow(&x, j)
    }

    pub fn uniformizer(&self) -> PAdicElem {
        if self.e() == 1 {
            return self.from_bigint(self.p.clone(), self.cap);
        }
        let mut c = vec![self.w_zero(); self.e() as usize];
        c[1] = self.w_from_int(BigInt::one());
        self.from_digits(0, c, self.cap)
    }

    fn pi_inverse(&self) -> PAdicElem {
        let e = self.e() as usize;
        let mut c = Vec::with_capacity(e);
        for j in 0..e {
            let coef = if j + 1 < e { self.eis[j + 1].clone() } else { self.w_from_int(BigInt::one()) };
            c.push(self.w_mul(&self.neg_u0_inv, &coef));
        }
        self.from_digits(-1, c, self.cap)
    }

    /// Reduce digits, pull out powers of p, and detect vanishing.
    pub fn normalize(&self, mut x: PAdicElem) -> PAdicElem {
        let e = self.e();
        loop {
            let rel = x.prec - e * x.k;
            for (j, w) in x.c.iter_mut().enumerate() {
                let d = self.digits_for(rel - j as i64);
                *w = if d <= 0 { self.w_zero() } else { self.w_mod(w, d) };
            }
            if x.c.iter().all(|w| self.w_is_zero(w)) {
                return self.zero_with_prec(x.prec);
            }
            if !x.c.iter().all(|w| w.iter().all(|d| (d % &self.p).is_zero())) {
                return x;
            }
            for w in x.c.iter_mut() {
                for d in w.iter_mut() {
                    *d /= &self.p;
                }
            }
            x.k += 1;
        }
    }

    pub fn is_zero(&self, x: &PAdicElem) -> bool {
        x.c.iter().all(|w| self.w_is_zero(w))
    }

    /// Valuation of the stored digits (None if they all vanish).
    pub fn valuation(&self, x: &PAdicElem) -> Option<i64> {
        let e = self.e();
        x.c.iter()
            .enumerate()
            .filter_map(|(j, w)| self.w_vp(w).map(|v| e * v + j as i64))
            .min()
            .map(|m| e * x.k + m)
    }

    pub fn val_lower_bound(&self, x: &PAdicElem) -> i64 {
        self.valuation(x).unwrap_or(x.prec)
    }

    pub fn truncate(&self, x: &PAdicElem, prec: i64) -> PAdicElem {
        let mut y = x.clone();
        y.prec = y.prec.min(prec);
        self.normalize(y)
    }

    pub fn add(&self, x: &PAdicElem, y: &PAdicElem) -> PAdicElem {
        let prec = x.prec.min(y.prec);
        if self.is_zero(x) {
            return self.truncate(y, prec);
        }
        if self.is_zero(y) {
            return self.truncate(x, prec);
        }
        let k = x.k.min(y.k);
        let sx = self.p.pow((x.k - k) as u32);
        let sy = self.p.pow((y.k - k) as u32);
        let c = x
            .c
            .iter()
            .zip(&y.c)
            .map(|(a, b)| self.w_add(&self.w_scale(a, &sx), &self.w_scale(b, &sy)))
            .collect();
        self.normalize(PAdicElem { k, c, prec })
    }

    pub fn neg(&self, x: &PAdicElem) -> PAdicElem {
        self.normalize(PAdicElem { k: x.k, c: x.c.iter().map(|w| self.w_neg(w)).collect(), prec: x.prec })
    }

    pub fn sub(&self, x: &PAdicElem, y: &PAdicElem) -> PAdicElem {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &PAdicElem, y: &PAdicElem) -> PAdicElem {
        let prec = (x.prec + self.val_lower_bound(y)).min(y.prec + self.val_lower_bound(x));
        if self.is_zero(x) || self.is_zero(y) {
            return self.zero_with_prec(prec);
        }
        let e = self.e() as usize;
        let mut prod = vec![self.w_zero(); 2 * e - 1];
        for (i, a) in x.c.iter().enumerate() {
            if self.w_is_zero(a) {
                continue;
            }
            for (j, b) in y.c.iter().enumerate() {
                if self.w_is_zero(b) {
                    continue;
                }
                prod[i + j] = self.w_add(&prod[i + j], &self.w_mul(a, b));
            }
        }
        for d in (e..prod.len()).rev() {
            let top = std::mem::replace(&mut prod[d], self.w_zero());
            if self.w_is_zero(&top) {
                continue;
            }
            for j in 0..e {
                let delta = self.w_mul(&top, &self.eis[j]);
                prod[d - e + j] = self.w_sub(&prod[d - e + j], &delta);
            }
        }
        prod.truncate(e);
        self.normalize(PAdicElem { k: x.k + y.k, c: prod, prec })
    }

    /// x · π^m with precision shifted exactly by m.
    pub fn mul_pi_pow(&self, x: &PAdicElem, m: i64) -> PAdicElem {
        if m == 0 {
            return x.clone();
        }
        let step = if m > 0 { self.uniformizer() } else { self.pi_inverse() };
        let mut y = x.clone();
        y.prec = self.cap;
        for _ in 0..m.abs() {
            y = self.mul(&y, &step);
        }
        let mut out = y;
        out.prec = x.prec + m;
        self.normalize(out)
    }

    /// Inverse of an element whose stored digits do not vanish.
    pub fn inv(&self, x: &PAdicElem) -> Result<PAdicElem> {
        let v = self.valuation(x).ok_or_else(|| Error::exhausted("p-adic element vanishes to its precision"))?;
        let rel = x.prec - v;
        if rel <= 0 {
            return Err(Error::exhausted("no relative precision left to invert"));
        }
        let mut u = self.mul_pi_pow(x, -v);
        u.prec = rel;
        let u = self.normalize(u);
        let ures = self.w_residue(&u.c[0]);
        let y0 = self.unram.inv(&ures)?;
        let mut y = self.from_digits(0, {
            let mut c = vec![self.w_zero(); self.e() as usize];
            c[0] = self.w_lift(&y0);
            c
        }, rel);
        let one = self.from_bigint(BigInt::one(), rel);
        for _ in 0..(2 + 64 - (rel as u64).leading_zeros()) {
            let err = self.sub(&one, &self.mul(&u, &y));
            if self.is_zero(&err) {
                break;
            }
            y = self.add(&y, &self.mul(&y, &err));
        }
        if !self.is_zero(&self.sub(&one, &self.mul(&u, &y))) {
            return Err(Error::AssertionFailed("Newton inversion did not converge".into()));
        }
        Ok(self.mul_pi_pow(&y, -v))
    }

    /// Residue class of an integral element.
    pub fn residue(&self, x: &PAdicElem) -> Result<Fq> {
        match self.valuation(x) {
            Some(v) if v < 0 => Err(Error::NegativeValuation),
            Some(0) => Ok(self.w_residue(&x.c[0])),
            Some(_) => Ok(self.unram.zero()),
            None if x.prec >= 1 => Ok(self.unram.zero()),
            None => Err(Error::exhausted("residue needs precision at least 1")),
        }
    }

    pub fn lift(&self, a: &Fq, prec: i64) -> PAdicElem {
        let mut c = vec![self.w_zero(); self.e() as usize];
        c[0] = self.w_lift(a);
        self.from_digits(0, c, prec)
    }

    /// Digits of the element scaled to k = 0 (for display and serialization).
    pub fn digits(&self, x: &PAdicElem) -> Vec<WElem> {
        x.c.clone()
    }

    pub fn sign_normalized(&self, w: &BigInt, digits: i64) -> BigInt {
        let m = self.p.pow(digits.max(0) as u32);
        let r = w.mod_floor(&m);
        if (&r * 2) > m {
            r - m
        } else {
            r
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2i() -> PAdicField {
        // π = i − 1 satisfies π^2 + 2π + 2 = 0
        PAdicField::new(2, vec![0, 1], vec![vec![BigInt::from(2)], vec![BigInt::from(2)]], 80).unwrap()
    }

    #[test]
    fn valuation_of_two_in_gaussian_field() {
        let k = q2i();
        let two = k.from_int(2);
        assert_eq!(k.valuation(&two), Some(2));
        let pi = k.uniformizer();
        assert_eq!(k.valuation(&pi), Some(1));
        // i = 1 + π squares to −1
        let i = k.add(&k.from_int(1), &pi);
        assert_eq!(k.add(&k.mul(&i, &i), &k.from_int(1)), k.zero_with_prec(80));
    }

    #[test]
    fn inverses() {
        let k = q2i();
        let pi = k.uniformizer();
        let pinv = k.inv(&pi).unwrap();
        assert_eq!(k.valuation(&pinv), Some(-1));
        let one = k.mul(&pi, &pinv);
        assert!(k.is_zero(&k.sub(&one, &k.from_int(1))));
        let x = k.add(&k.from_int(3), &k.mul(&pi, &pi));
        let y = k.inv(&x).unwrap();
        assert!(k.is_zero(&k.sub(&k.mul(&x, &y), &k.from_int(1))));
    }

    #[test]
    fn residue_of_rational_integers() {
        let k = PAdicField::rational(3, 40).unwrap();
        assert_eq!(k.residue(&k.from_int(4)).unwrap(), vec![1]);
        assert_eq!(k.valuation(&k.from_int(18)), Some(2));
    }

    #[test]
    fn rejects_non_eisenstein() {
        assert!(PAdicField::new(2, vec![0, 1], vec![vec![BigInt::from(4)]], 40).is_err());
        assert!(PAdicField::new(2, vec![0, 1], vec![vec![BigInt::from(2)], vec![BigInt::from(1)]], 40).is_err());
    }
}
