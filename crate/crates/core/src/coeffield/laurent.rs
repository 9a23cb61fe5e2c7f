//! Truncated Laurent series over a field: Σ c_i t^i known for i < prec.

use super::Field;
use crate::error::{Error, Result};

/// `prec = None` means the expansion is exact (finitely many terms).
#[derive(Debug, Clone, PartialEq)]
pub struct Laurent<E> {
    pub start: i64,
    pub coeffs: Vec<E>,
    pub prec: Option<i64>,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

fn add_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

impl<E: Clone + PartialEq + std::fmt::Debug> Laurent<E> {
    pub fn zero(prec: Option<i64>) -> Self {
        Laurent { start: 0, coeffs: Vec::new(), prec }
    }

    pub fn from_coeffs<F: Field<Elem = E>>(f: &F, start: i64, coeffs: Vec<E>, prec: Option<i64>) -> Self {
        let mut s = Laurent { start, coeffs, prec };
        s.normalize(f);
        s
    }

    pub fn monomial<F: Field<Elem = E>>(f: &F, c: E, k: i64, prec: Option<i64>) -> Self {
        Self::from_coeffs(f, k, vec![c], prec)
    }

    /// Strip zeros at both ends and drop terms at or beyond the precision.
    pub fn normalize<F: Field<Elem = E>>(&mut self, f: &F) {
        if let Some(p) = self.prec {
            let keep = (p - self.start).clamp(0, self.coeffs.len() as i64) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(|c| f.is_zero(c)) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| f.is_zero(c)).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.start += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.start = 0;
        }
    }

    pub fn is_zero_known(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec.is_none()
    }

    /// Exponent of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.start)
        }
    }

    /// Lower bound for the true valuation (`None` = exact zero).
    pub fn val_lower_bound(&self) -> Option<i64> {
        self.valuation().or(self.prec)
    }

    pub fn end(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }

    pub fn coeff<F: Field<Elem = E>>(&self, f: &F, k: i64) -> E {
        if k < self.start || k >= self.end() {
            f.zero()
        } else {
            self.coeffs[(k - self.start) as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &E)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.start + i as i64, c))
    }

    pub fn truncate<F: Field<Elem = E>>(&self, f: &F, prec: Option<i64>) -> Self {
        Self::from_coeffs(f, self.start, self.coeffs.clone(), min_opt(self.prec, prec))
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let prec = min_opt(self.prec, o.prec);
        if self.coeffs.is_empty() {
            return o.truncate(f, prec);
        }
        if o.coeffs.is_empty() {
            return self.truncate(f, prec);
        }
        let lo = self.start.min(o.start);
        let hi = self.end().max(o.end());
        let coeffs = (lo..hi).map(|k| f.add(&self.coeff(f, k), &o.coeff(f, k))).collect();
        Self::from_coeffs(f, lo, coeffs, prec)
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Laurent { start: self.start, coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect(), prec: self.prec }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        self.add(f, &o.neg(f))
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Self::from_coeffs(f, self.start, self.coeffs.iter().map(|x| f.mul(x, c)).collect(), self.prec)
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            start: if self.coeffs.is_empty() { 0 } else { self.start + k },
            coeffs: self.coeffs.clone(),
            prec: self.prec.map(|p| p + k),
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        if self.is_exact_zero() || o.is_exact_zero() {
            return Self::zero(None);
        }
        let prec = min_opt(add_opt(self.prec, o.val_lower_bound()), add_opt(o.prec, self.val_lower_bound()));
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero(prec);
        }
        let start = self.start + o.start;
        let mut len = self.coeffs.len() + o.coeffs.len() - 1;
        if let Some(p) = prec {
            len = len.min((p - start).max(0) as usize);
        }
        let mut out = vec![f.zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || f.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if f.is_zero(b) {
                    continue;
                }
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::from_coeffs(f, start, out, prec)
    }

    /// Inverse; an exact non-monomial input is expanded to `window` terms.
    pub fn inv<F: Field<Elem = E>>(&self, f: &F, window: i64) -> Result<Self> {
        let v = match self.valuation() {
            Some(v) => v,
            None if self.prec.is_none() => return Err(Error::ZeroElement),
            None => return Err(Error::exhausted("series vanishes to its precision")),
        };
        let rel = match self.prec {
            Some(p) => p - v,
            None if self.coeffs.len() == 1 => {
                let c = f.inv(&self.coeffs[0])?;
                return Ok(Self::monomial(f, c, -v, None));
            }
            None => window,
        };
        let c0inv = f.inv(&self.coeffs[0])?;
        let n = rel.max(0) as usize;
        let mut b: Vec<E> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                b.push(c0inv.clone());
                continue;
            }
            let mut acc = f.zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                if f.is_zero(&self.coeffs[j]) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(&self.coeffs[j], &b[k - j]));
            }
            b.push(f.neg(&f.mul(&acc, &c0inv)));
        }
        Ok(Self::from_coeffs(f, -v, b, Some(-v + rel)))
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, n: u64, one: Self) -> Self {
        let mut acc = one;
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::super::fq::FiniteField;
    use super::*;

    #[test]
    fn geometric_series() {
        let f = FiniteField::new(3, 1).unwrap();
        let one_plus_t = Laurent::from_coeffs(&f, 0, vec![f.one(), f.one()], Some(20));
        let inv = one_plus_t.inv(&f, 20).unwrap();
        for k in 0..20 {
            let expect = if k % 2 == 0 { f.one() } else { f.neg(&f.one()) };
            assert_eq!(inv.coeff(&f, k), expect);
        }
        let prod = one_plus_t.mul(&f, &inv);
        assert_eq!(prod.valuation(), Some(0));
        assert_eq!(prod.coeffs, vec![f.one()]);
    }

    #[test]
    fn precision_propagates_through_products() {
        let f = FiniteField::new(2, 1).unwrap();
        let t_inv2 = Laurent::monomial(&f, f.one(), -2, Some(10));
        let x = Laurent::from_coeffs(&f, 1, vec![f.one(), f.one()], Some(10));
        let y = t_inv2.mul(&f, &x);
        assert_eq!(y.prec, Some(8));
        assert_eq!(y.valuation(), Some(-1));
    }
}
