//! Rational function fields 𝔽_q(T_1..T_c) with canonical reduced fractions.

use std::sync::Arc;

use super::fq::{FiniteField, Fq};
use super::mpoly::{MPoly, Mono};
use super::{upoly, Field};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunField {
    fq: Arc<FiniteField>,
    vars: Vec<String>,
}

/// Reduced fraction with denominator monic in the graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    pub num: MPoly,
    pub den: MPoly,
}

/// Monic gcd of two polynomials (recursive in the number of variables).
pub fn gcd(fq: &FiniteField, a: &MPoly, b: &MPoly) -> Result<MPoly> {
    let n = a.nvars;
    if a.is_zero() {
        return b.monic(fq);
    }
    if b.is_zero() {
        return a.monic(fq);
    }
    if n == 0 {
        return Ok(MPoly::one(fq, 0));
    }
    if n == 1 {
        let g = upoly::gcd(fq, &a.to_univariate(fq), &b.to_univariate(fq))?;
        return Ok(MPoly::from_univariate(fq, &g));
    }
    let ca = content_last(fq, a)?;
    let cb = content_last(fq, b)?;
    let g0 = gcd(fq, &ca, &cb)?.embed_front(n);
    let pa = a.exact_div(fq, &ca.embed_front(n))?;
    let pb = b.exact_div(fq, &cb.embed_front(n))?;
    if pa.degree_in(n - 1) == 0 || pb.degree_in(n - 1) == 0 {
        return g0.monic(fq);
    }
    let sub = RatFunField { fq: Arc::new(fq.clone()), vars: (0..n - 1).map(|i| format!("v{i}")).collect() };
    let lift = |x: &MPoly| -> Vec<RatFun> {
        x.split_last().into_iter().map(|c| sub.from_poly(c)).collect()
    };
    let g = upoly::gcd(&sub, &lift(&pa), &lift(&pb))?;
    // clear denominators, then take the primitive part
    let mut l = MPoly::one(fq, n - 1);
    for c in &g {
        let d = gcd(fq, &l, &c.den)?;
        l = l.mul(fq, &c.den.exact_div(fq, &d)?);
    }
    let parts: Vec<MPoly> = g
        .iter()
        .map(|c| Ok(c.num.mul(fq, &l.exact_div(fq, &c.den)?)))
        .collect::<Result<_>>()?;
    let big = MPoly::join_last(&parts, n);
    let cont = content_last(fq, &big)?;
    let prim = big.exact_div(fq, &cont.embed_front(n))?;
    g0.mul(fq, &prim).monic(fq)
}

/// Gcd of the coefficients with respect to the last variable.
fn content_last(fq: &FiniteField, a: &MPoly) -> Result<MPoly> {
    let mut acc = MPoly::zero(a.nvars - 1);
    for part in a.split_last() {
        if !part.is_zero() {
            acc = gcd(fq, &acc, &part)?;
        }
    }
    Ok(acc)
}

impl RatFunField {
    pub fn new(fq: FiniteField, vars: Vec<String>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::invalid("vars", "at least one variable is required"));
        }
        if vars.len() > 2 {
            return Err(Error::UnsupportedImperfection(vars.len()));
        }
        Ok(RatFunField { fq: Arc::new(fq), vars })
    }

    pub fn fq(&self) -> &FiniteField {
        &self.fq
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn from_poly(&self, num: MPoly) -> RatFun {
        RatFun { num, den: MPoly::one(&self.fq, self.nvars()) }
    }

    pub fn constant(&self, c: Fq) -> RatFun {
        self.from_poly(MPoly::constant(&self.fq, self.nvars(), c))
    }

    pub fn var(&self, i: usize) -> RatFun {
        self.from_poly(MPoly::var(&self.fq, self.nvars(), i))
    }

    pub fn fraction(&self, num: MPoly, den: MPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(self.zero());
        }
        let g = gcd(&self.fq, &num, &den)?;
        let mut n = num.exact_div(&self.fq, &g)?;
        let mut d = den.exact_div(&self.fq, &g)?;
        let lc = d.lead().map(|(_, c)| c.clone()).unwrap();
        let inv = self.fq.inv(&lc)?;
        n = n.scale(&self.fq, &inv);
        d = d.scale(&self.fq, &inv);
        Ok(RatFun { num: n, den: d })
    }

    /// Exponent criterion: a p-th root exists iff every exponent is divisible by p.
    pub fn pth_root(&self, x: &RatFun) -> Option<RatFun> {
        let n = x.num.pth_root(&self.fq)?;
        let d = x.den.pth_root(&self.fq)?;
        Some(RatFun { num: n, den: d })
    }

    /// Write x = Σ_β T^β · X_β^p over the monomial p-basis T^β, β ∈ [0,p)^c.
    pub fn p_decompose(&self, x: &RatFun) -> Result<Vec<RatFun>> {
        let p = self.fq.p() as u32;
        let c = self.nvars();
        let m = x.num.mul(&self.fq, &x.den.pow(&self.fq, p - 1));
        let count = (p as usize).pow(c as u32);
        let mut parts = vec![MPoly::zero(c); count];
        for (mono, coef) in &m.terms {
            let idx = mono.0.iter().rev().fold(0usize, |acc, ex| acc * p as usize + (ex % p) as usize);
            let e = mono.0.iter().map(|ex| ex / p).collect();
            parts[idx].terms.insert(Mono(e), self.fq.pth_root(coef));
        }
        parts.into_iter().map(|num| self.fraction(num, x.den.clone())).collect()
    }

    /// The p-basis monomials T^β in the order used by [`p_decompose`](Self::p_decompose).
    pub fn p_basis(&self) -> Vec<RatFun> {
        let p = self.fq.p() as usize;
        let c = self.nvars();
        (0..p.pow(c as u32))
            .map(|mut idx| {
                let mut e = vec![0u32; c];
                for slot in e.iter_mut() {
                    *slot = (idx % p) as u32;
                    idx /= p;
                }
                self.from_poly(MPoly::monomial(&self.fq, self.fq.one(), e))
            })
            .collect()
    }
}

impl Field for RatFunField {
    type Elem = RatFun;

    fn zero(&self) -> RatFun {
        self.from_poly(MPoly::zero(self.nvars()))
    }

    fn one(&self) -> RatFun {
        self.constant(self.fq.one())
    }

    fn is_zero(&self, a: &RatFun) -> bool {
        a.num.is_zero()
    }

    fn add(&self, a: &RatFun, b: &RatFun) -> RatFun {
        let fq = &*self.fq;
        if a.den == b.den {
            return self.fraction(a.num.add(fq, &b.num), a.den.clone()).expect("nonzero denominator");
        }
        let num = a.num.mul(fq, &b.den).add(fq, &b.num.mul(fq, &a.den));
        self.fraction(num, a.den.mul(fq, &b.den)).expect("nonzero denominator")
    }

    fn neg(&self, a: &RatFun) -> RatFun {
        RatFun { num: a.num.neg(&self.fq), den: a.den.clone() }
    }

    fn mul(&self, a: &RatFun, b: &RatFun) -> RatFun {
        let fq = &*self.fq;
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        self.fraction(a.num.mul(fq, &b.num), a.den.mul(fq, &b.den)).expect("nonzero denominator")
    }

    fn inv(&self, a: &RatFun) -> Result<RatFun> {
        if a.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.fraction(a.den.clone(), a.num.clone())
    }

    fn from_int(&self, n: i64) -> RatFun {
        self.constant(self.fq.from_int(n))
    }

    fn characteristic(&self) -> u64 {
        self.fq.p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, c: usize) -> RatFunField {
        let vars = ["u", "v"][..c].iter().map(|s| s.to_string()).collect();
        RatFunField::new(FiniteField::new(p, 1).unwrap(), vars).unwrap()
    }

    #[test]
    fn inverse_of_u() {
        let k = field(3, 1);
        let u = k.var(0);
        assert_eq!(k.mul(&u, &k.inv(&u).unwrap()), k.one());
    }

    #[test]
    fn char_two_doubling() {
        let k = field(2, 1);
        let t = k.var(0);
        assert!(k.is_zero(&k.add(&t, &t)));
    }

    #[test]
    fn bivariate_fraction_reduces() {
        let k = field(3, 2);
        let u = k.var(0);
        let v = k.var(1);
        // (u^2 - v^2)/(u + v) = u - v
        let num = k.sub(&k.mul(&u, &u), &k.mul(&v, &v));
        let den = k.add(&u, &v);
        let q = k.mul(&num, &k.inv(&den).unwrap());
        assert_eq!(q, k.sub(&u, &v));
        assert!(q.den.is_constant());
    }

    #[test]
    fn exponent_criterion() {
        let k = field(2, 1);
        assert!(k.pth_root(&k.var(0)).is_none());
        let k3 = field(3, 1);
        let u = k3.var(0);
        let u3 = k3.mul(&k3.mul(&u, &u), &u);
        let u6 = k3.mul(&u3, &u3);
        let x = k3.mul(&u3, &k3.inv(&k3.add(&u6, &k3.one())).unwrap());
        let r = k3.pth_root(&x).unwrap();
        assert_eq!(k3.mul(&k3.mul(&r, &r), &r), x);
    }

    #[test]
    fn p_decomposition_reassembles() {
        let k = field(2, 2);
        let u = k.var(0);
        let v = k.var(1);
        let x = k.mul(&k.add(&u, &k.mul(&u, &v)), &k.inv(&k.add(&v, &k.one())).unwrap());
        let parts = k.p_decompose(&x).unwrap();
        let basis = k.p_basis();
        let mut acc = k.zero();
        for (b, c) in basis.iter().zip(&parts) {
            acc = k.add(&acc, &k.mul(b, &k.mul(c, c)));
        }
        assert_eq!(acc, x);
    }
}
