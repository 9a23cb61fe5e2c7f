//! Series Σ a_k T^k over a p-adic field F with a_k → 0, valued by the Gauss
//! valuation min v_F(a_k). Elements carry a π-adic precision and, after
//! inverting units with non-monomial residue, a T-horizon beyond which the
//! coefficients are only known to lie in π^floor · O_F.

use std::collections::BTreeMap;

use super::padic::{PAdicElem, PAdicField};
use crate::coeffield::{Field, FiniteField, Fq, Laurent};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct MixedElem {
    pub coeffs: BTreeMap<i64, PAdicElem>,
    pub prec: i64,
    pub horizon: Option<i64>,
    pub floor: i64,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Operations on T-series with coefficients in `f`.
pub struct Mixed<'a> {
    pub f: &'a PAdicField,
    pub window: i64,
}

impl<'a> Mixed<'a> {
    pub fn zero(&self, prec: i64) -> MixedElem {
        MixedElem { coeffs: BTreeMap::new(), prec, horizon: None, floor: prec }
    }

    pub fn scalar(&self, a: PAdicElem) -> MixedElem {
        let prec = a.prec;
        self.build(BTreeMap::from([(0, a)]), prec, None, prec)
    }

    pub fn monomial(&self, a: PAdicElem, k: i64) -> MixedElem {
        let prec = a.prec;
        self.build(BTreeMap::from([(k, a)]), prec, None, prec)
    }

    /// Truncate coefficients to the series precision and drop vanishing ones.
    pub fn build(&self, coeffs: BTreeMap<i64, PAdicElem>, prec: i64, horizon: Option<i64>, floor: i64) -> MixedElem {
        let coeffs = coeffs
            .into_iter()
            .filter(|(k, _)| horizon.is_none_or(|h| *k < h))
            .map(|(k, a)| (k, self.f.truncate(&a, prec)))
            .filter(|(_, a)| !self.f.is_zero(a))
            .collect();
        MixedElem { coeffs, prec, horizon, floor: if horizon.is_some() { floor } else { prec } }
    }

    /// Minimum valuation of the stored coefficients.
    pub fn valuation(&self, x: &MixedElem) -> Option<i64> {
        x.coeffs.values().filter_map(|a| self.f.valuation(a)).min()
    }

    /// Valuation below which nothing unknown can hide.
    pub fn certain_bound(&self, x: &MixedElem) -> i64 {
        if x.horizon.is_some() {
            x.prec.min(x.floor)
        } else {
            x.prec
        }
    }

    pub fn val_lower_bound(&self, x: &MixedElem) -> i64 {
        let b = self.certain_bound(x);
        self.valuation(x).map_or(b, |v| v.min(b))
    }

    fn ord_t(&self, x: &MixedElem) -> Option<i64> {
        min_opt(x.coeffs.keys().next().copied(), x.horizon)
    }

    pub fn truncate(&self, x: &MixedElem, prec: i64) -> MixedElem {
        self.build(x.coeffs.clone(), x.prec.min(prec), x.horizon, x.floor)
    }

    pub fn add(&self, x: &MixedElem, y: &MixedElem) -> MixedElem {
        let mut coeffs = x.coeffs.clone();
        for (k, b) in &y.coeffs {
            let v = match coeffs.remove(k) {
                Some(a) => self.f.add(&a, b),
                None => b.clone(),
            };
            coeffs.insert(*k, v);
        }
        let horizon = min_opt(x.horizon, y.horizon);
        let floor = match (x.horizon, y.horizon) {
            (Some(_), Some(_)) => x.floor.min(y.floor),
            (Some(_), None) => x.floor,
            (None, Some(_)) => y.floor,
            (None, None) => 0,
        };
        self.build(coeffs, x.prec.min(y.prec), horizon, floor)
    }

    pub fn neg(&self, x: &MixedElem) -> MixedElem {
        MixedElem {
            coeffs: x.coeffs.iter().map(|(k, a)| (*k, self.f.neg(a))).collect(),
            ..x.clone()
        }
    }

    pub fn sub(&self, x: &MixedElem, y: &MixedElem) -> MixedElem {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &MixedElem, y: &MixedElem) -> MixedElem {
        let vx = self.val_lower_bound(x);
        let vy = self.val_lower_bound(y);
        let prec = (x.prec + vy).min(y.prec + vx);
        let mut horizon = None;
        let mut floor = i64::MAX;
        if let Some(h) = x.horizon {
            if let Some(o) = self.ord_t(y) {
                horizon = min_opt(horizon, Some(h + o));
                floor = floor.min(x.floor + vy);
            }
        }
        if let Some(h) = y.horizon {
            if let Some(o) = self.ord_t(x) {
                horizon = min_opt(horizon, Some(h + o));
                floor = floor.min(y.floor + vx);
            }
        }
        let mut coeffs: BTreeMap<i64, PAdicElem> = BTreeMap::new();
        for (i, a) in &x.coeffs {
            for (j, b) in &y.coeffs {
                let k = i + j;
                if horizon.is_some_and(|h| k >= h) {
                    continue;
                }
                let prod = self.f.mul(a, b);
                let v = match coeffs.remove(&k) {
                    Some(c) => self.f.add(&c, &prod),
                    None => prod,
                };
                coeffs.insert(k, v);
            }
        }
        self.build(coeffs, prec, horizon, floor)
    }

    pub fn scale(&self, x: &MixedElem, s: &PAdicElem) -> MixedElem {
        self.mul(x, &self.scalar(s.clone()))
    }

    /// x · π^m, shifting the precision exactly.
    pub fn mul_pi_pow(&self, x: &MixedElem, m: i64) -> MixedElem {
        let coeffs = x.coeffs.iter().map(|(k, a)| (*k, self.f.mul_pi_pow(a, m))).collect();
        self.build(coeffs, x.prec + m, x.horizon, x.floor + m)
    }

    /// x · T^m.
    pub fn shift(&self, x: &MixedElem, m: i64) -> MixedElem {
        MixedElem {
            coeffs: x.coeffs.iter().map(|(k, a)| (k + m, a.clone())).collect(),
            prec: x.prec,
            horizon: x.horizon.map(|h| h + m),
            floor: x.floor,
        }
    }

    pub fn residue(&self, x: &MixedElem) -> Result<Laurent<Fq>> {
        let fq = self.f.residue_field();
        if let Some(v) = self.valuation(x) {
            if v < 0 {
                return Err(Error::NegativeValuation);
            }
        }
        if x.prec < 1 || (x.horizon.is_some() && x.floor < 0) {
            return Err(Error::exhausted("residue needs π-adic precision at least 1"));
        }
        let mut out = Laurent::zero(if x.floor >= 1 { None } else { x.horizon });
        for (k, a) in &x.coeffs {
            let r = self.f.residue(a)?;
            if !fq.is_zero(&r) {
                out = out.add(fq, &Laurent::from_coeffs(fq, *k, vec![r], None));
            }
        }
        Ok(out)
    }

    pub fn lift(&self, r: &Laurent<Fq>, prec: i64) -> MixedElem {
        let coeffs = r.terms().map(|(k, c)| (k, self.f.lift(c, prec))).collect();
        self.build(coeffs, prec, r.prec, 0)
    }

    pub fn inv(&self, x: &MixedElem) -> Result<MixedElem> {
        let v = self.valuation(x).ok_or_else(|| Error::exhausted("T-series vanishes to its precision"))?;
        let bound = self.certain_bound(x);
        if v >= bound {
            return Err(Error::exhausted("leading valuation not certified"));
        }
        let rel = bound - v;
        let mut u = self.mul_pi_pow(x, -v);
        u = self.truncate(&u, rel);
        let fq: &FiniteField = self.f.residue_field();
        let ubar = self.residue(&u)?;
        let ybar = ubar.inv(fq, self.window)?;
        let mut y = self.lift(&ybar, rel);
        let one = self.scalar(self.f.from_bigint(1.into(), rel));
        let rounds = 2 + 64 - (rel as u64).leading_zeros();
        for _ in 0..rounds {
            let err = self.sub(&one, &self.mul(&u, &y));
            if err.coeffs.is_empty() {
                break;
            }
            y = self.add(&y, &self.mul(&y, &err));
        }
        if !self.sub(&one, &self.mul(&u, &y)).coeffs.is_empty() {
            return Err(Error::exhausted("Newton inversion of a T-series did not converge"));
        }
        Ok(self.mul_pi_pow(&y, -v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2() -> PAdicField {
        PAdicField::rational(2, 100).unwrap()
    }

    #[test]
    fn gauss_valuation() {
        let f = q2();
        let m = Mixed { f: &f, window: 32 };
        // 2·T^{-5} + 4
        let x = m.add(&m.monomial(f.from_int(2), -5), &m.scalar(f.from_int(4)));
        assert_eq!(m.valuation(&x), Some(1));
    }

    #[test]
    fn residue_drops_non_units() {
        let f = q2();
        let m = Mixed { f: &f, window: 32 };
        let x = m.add(&m.monomial(f.from_int(1), 1), &m.monomial(f.from_int(2), -1));
        let r = m.residue(&x).unwrap();
        assert_eq!(r.start, 1);
        assert_eq!(r.coeffs, vec![vec![1]]);
    }

    #[test]
    fn invert_monomial_residue_unit() {
        let f = q2();
        let m = Mixed { f: &f, window: 32 };
        let mut x = m.add(&m.scalar(f.from_int(1)), &m.monomial(f.from_int(2), -1));
        x = m.truncate(&x, 40);
        let y = m.inv(&x).unwrap();
        assert!(y.horizon.is_none());
        let prod = m.mul(&x, &y);
        let diff = m.sub(&prod, &m.scalar(f.from_int(1)));
        assert!(diff.coeffs.is_empty());
        // coefficient of T^{-k} is (−2)^k
        for k in 0..10 {
            let c = y.coeffs.get(&-k).unwrap();
            assert!(f.is_zero(&f.sub(c, &f.from_bigint(num_bigint::BigInt::from(-2).pow(k as u32), 100))));
        }
    }

    #[test]
    fn invert_non_monomial_residue_sets_horizon() {
        let f = q2();
        let m = Mixed { f: &f, window: 16 };
        let mut x = m.add(&m.scalar(f.from_int(1)), &m.monomial(f.from_int(1), 1));
        x = m.truncate(&x, 30);
        let y = m.inv(&x).unwrap();
        assert!(y.horizon.is_some());
        let prod = m.mul(&x, &y);
        let diff = m.sub(&prod, &m.scalar(f.from_int(1)));
        assert!(diff.coeffs.is_empty());
    }
}
