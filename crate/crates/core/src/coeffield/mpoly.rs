//! Multivariate polynomials over 𝔽_q with graded-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::fq::{FiniteField, Fq};
use super::Field;
use crate::error::{Error, Result};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Mono, Fq>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(fq: &FiniteField, nvars: usize, c: Fq) -> Self {
        let mut m = MPoly::zero(nvars);
        if !fq.is_zero(&c) {
            m.terms.insert(Mono(vec![0; nvars]), c);
        }
        m
    }

    pub fn one(fq: &FiniteField, nvars: usize) -> Self {
        MPoly::constant(fq, nvars, fq.one())
    }

    pub fn monomial(fq: &FiniteField, c: Fq, exps: Vec<u32>) -> Self {
        let mut m = MPoly::zero(exps.len());
        if !fq.is_zero(&c) {
            m.terms.insert(Mono(exps), c);
        }
        m
    }

    pub fn var(fq: &FiniteField, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(fq, fq.one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total() == 0)
    }

    pub fn lead(&self) -> Option<(&Mono, &Fq)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, fq: &FiniteField, m: Mono, c: Fq) {
        let entry = self.terms.remove(&m);
        let v = match entry {
            Some(old) => fq.add(&old, &c),
            None => c,
        };
        if !fq.is_zero(&v) {
            self.terms.insert(m, v);
        }
    }

    pub fn add(&self, fq: &FiniteField, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(fq, m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, fq: &FiniteField) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), fq.neg(c))).collect(),
        }
    }

    pub fn sub(&self, fq: &FiniteField, other: &MPoly) -> MPoly {
        self.add(fq, &other.neg(fq))
    }

    pub fn scale(&self, fq: &FiniteField, c: &Fq) -> MPoly {
        if fq.is_zero(c) {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), fq.mul(x, c))).collect(),
        }
    }

    pub fn mul(&self, fq: &FiniteField, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e: Vec<u32> = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.insert_add(fq, Mono(e), fq.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, fq: &FiniteField, n: u32) -> MPoly {
        let mut acc = MPoly::one(fq, self.nvars);
        for _ in 0..n {
            acc = acc.mul(fq, self);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, fq: &FiniteField) -> Result<MPoly> {
        match self.lead() {
            None => Ok(self.clone()),
            Some((_, c)) => Ok(self.scale(fq, &fq.inv(c)?)),
        }
    }

    /// Exact division; fails if `d` does not divide `self`.
    pub fn exact_div(&self, fq: &FiniteField, d: &MPoly) -> Result<MPoly> {
        let (dm, dc) = d.lead().ok_or(Error::DivisionByZero)?;
        let dinv = fq.inv(dc)?;
        let mut r = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while let Some((rm, rc)) = r.lead() {
            if rm.0.iter().zip(&dm.0).any(|(a, b)| a < b) {
                return Err(Error::AssertionFailed("inexact polynomial division".into()));
            }
            let e: Vec<u32> = rm.0.iter().zip(&dm.0).map(|(a, b)| a - b).collect();
            let c = fq.mul(rc, &dinv);
            let t = MPoly::monomial(fq, c, e);
            r = r.sub(fq, &t.mul(fq, d));
            q = q.add(fq, &t);
        }
        Ok(q)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Coefficients with respect to the last variable, as polynomials in the others.
    pub fn split_last(&self) -> Vec<MPoly> {
        let n = self.nvars;
        let deg = self.degree_in(n - 1) as usize;
        let mut out = vec![MPoly::zero(n - 1); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[n - 1] as usize;
            out[k].terms.insert(Mono(m.0[..n - 1].to_vec()), c.clone());
        }
        out
    }

    pub fn join_last(parts: &[MPoly], nvars: usize) -> MPoly {
        let mut out = MPoly::zero(nvars);
        for (k, part) in parts.iter().enumerate() {
            for (m, c) in &part.terms {
                let mut e = m.0.clone();
                e.push(k as u32);
                out.terms.insert(Mono(e), c.clone());
            }
        }
        out
    }

    /// Re-embed a polynomial in the first `nvars - 1` variables.
    pub fn embed_front(&self, nvars: usize) -> MPoly {
        MPoly::join_last(std::slice::from_ref(self), nvars)
    }

    pub fn to_univariate(&self, fq: &FiniteField) -> Vec<Fq> {
        assert_eq!(self.nvars, 1);
        let deg = self.degree_in(0) as usize;
        let mut out = vec![fq.zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.0[0] as usize] = c.clone();
        }
        out
    }

    pub fn from_univariate(fq: &FiniteField, a: &[Fq]) -> MPoly {
        let mut out = MPoly::zero(1);
        for (i, c) in a.iter().enumerate() {
            if !fq.is_zero(c) {
                out.terms.insert(Mono(vec![i as u32]), c.clone());
            }
        }
        out
    }

    /// p-th power map applied to each coefficient and exponent: returns `r` with r^p = self
    /// when every exponent is divisible by p.
    pub fn pth_root(&self, fq: &FiniteField) -> Option<MPoly> {
        let p = fq.p() as u32;
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0.iter().any(|e| e % p != 0) {
                return None;
            }
            out.terms.insert(Mono(m.0.iter().map(|e| e / p).collect()), fq.pth_root(c));
        }
        Some(out)
    }
}
