//! Complete discrete valuation fields at truncated precision: Laurent series
//! over a residue field, finite extensions of ℚ_p, and T-series over a
//! p-adic field. Every valuation handed to callers is certified with a guard
//! margin; otherwise the call fails with `PrecisionExhausted`.

pub mod linalg;
pub mod mixed;
pub mod newton;
pub mod padic;
pub mod tower;

use std::sync::Arc;

use crate::coeffield::{Field, Laurent, ResidueElem, ResidueField};
use crate::error::{Error, Result};
use mixed::{Mixed, MixedElem};
use padic::{PAdicElem, PAdicField};

pub use newton::{hensel_root, newton_polygon};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionPolicy {
    /// Absolute t-adic precision of input series, and the expansion length
    /// used when inverting exact non-monomial series.
    pub series_window: i64,
    /// Absolute π-adic precision of p-adic input data.
    pub padic_digits: i64,
    /// Slack required between a certified valuation and the precision.
    pub guard: i64,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { series_window: 64, padic_digits: 64, guard: 8 }
    }
}

impl PrecisionPolicy {
    pub fn uniform(n: i64) -> Self {
        PrecisionPolicy { series_window: n, padic_digits: n, ..Default::default() }
    }

    pub fn doubled(&self) -> Self {
        PrecisionPolicy { series_window: 2 * self.series_window, padic_digits: 2 * self.padic_digits, guard: self.guard }
    }

    fn cap(&self) -> i64 {
        4 * self.padic_digits.max(self.series_window)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LocalKind {
    EqualChar { residue: ResidueField, var: String },
    PAdic(PAdicField),
    Mixed { coeff: PAdicField, var: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalField {
    kind: Arc<LocalKind>,
    residue: ResidueField,
    policy: PrecisionPolicy,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LocalElem {
    Series(Laurent<ResidueElem>),
    PAdic(PAdicElem),
    Mixed(MixedElem),
}

macro_rules! mismatch {
    () => {
        panic!("local field element mismatch")
    };
}

impl LocalField {
    pub fn equal_char(residue: ResidueField, var: impl Into<String>, policy: PrecisionPolicy) -> Self {
        LocalField {
            kind: Arc::new(LocalKind::EqualChar { residue: residue.clone(), var: var.into() }),
            residue,
            policy,
        }
    }

    pub fn padic(field: PAdicField, policy: PrecisionPolicy) -> Result<Self> {
        let field = field.with_cap(policy.cap())?;
        let residue = ResidueField::from_finite(field.residue_field().clone());
        Ok(LocalField { kind: Arc::new(LocalKind::PAdic(field)), residue, policy })
    }

    pub fn mixed(coeff: PAdicField, var: impl Into<String>, policy: PrecisionPolicy) -> Result<Self> {
        let coeff = coeff.with_cap(policy.cap())?;
        let var = var.into();
        let residue = ResidueField::laurent(coeff.residue_field().clone(), var.clone(), policy.series_window);
        Ok(LocalField { kind: Arc::new(LocalKind::Mixed { coeff, var }), residue, policy })
    }

    pub fn with_policy(&self, policy: PrecisionPolicy) -> Result<Self> {
        match &*self.kind {
            LocalKind::EqualChar { residue, var } => Ok(Self::equal_char(residue.clone(), var.clone(), policy)),
            LocalKind::PAdic(f) => Self::padic(f.clone(), policy),
            LocalKind::Mixed { coeff, var } => Self::mixed(coeff.clone(), var.clone(), policy),
        }
    }

    pub fn kind(&self) -> &LocalKind {
        &self.kind
    }

    pub fn policy(&self) -> PrecisionPolicy {
        self.policy
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    pub fn p(&self) -> u64 {
        self.residue.characteristic()
    }

    /// v_K(p), or None in equal characteristic.
    pub fn e_abs(&self) -> Option<i64> {
        match &*self.kind {
            LocalKind::EqualChar { .. } => None,
            LocalKind::PAdic(f) => Some(f.e()),
            LocalKind::Mixed { coeff, .. } => Some(coeff.e()),
        }
    }

    fn mixed_ops(&self) -> Mixed<'_> {
        match &*self.kind {
            LocalKind::Mixed { coeff, .. } => Mixed { f: coeff, window: self.policy.series_window },
            _ => mismatch!(),
        }
    }

    /// Precision given to elements read from input data.
    pub fn input_prec(&self) -> i64 {
        match &*self.kind {
            LocalKind::EqualChar { .. } => self.policy.series_window,
            _ => self.policy.padic_digits,
        }
    }

    pub fn zero(&self) -> LocalElem {
        match &*self.kind {
            LocalKind::EqualChar { .. } => LocalElem::Series(Laurent::zero(None)),
            LocalKind::PAdic(f) => LocalElem::PAdic(f.zero()),
            LocalKind::Mixed { coeff, .. } => LocalElem::Mixed(self.mixed_ops().zero(coeff.cap())),
        }
    }

    pub fn one(&self) -> LocalElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> LocalElem {
        match &*self.kind {
            LocalKind::EqualChar { residue, .. } => {
                LocalElem::Series(Laurent::from_coeffs(residue, 0, vec![residue.from_int(n)], None))
            }
            LocalKind::PAdic(f) => LocalElem::PAdic(f.from_int(n)),
            LocalKind::Mixed { coeff, .. } => LocalElem::Mixed(self.mixed_ops().scalar(coeff.from_int(n))),
        }
    }

    pub fn uniformizer(&self) -> LocalElem {
        match &*self.kind {
            LocalKind::EqualChar { residue, .. } => {
                LocalElem::Series(Laurent::from_coeffs(residue, 1, vec![residue.one()], None))
            }
            LocalKind::PAdic(f) => LocalElem::PAdic(f.uniformizer()),
            LocalKind::Mixed { coeff, .. } => LocalElem::Mixed(self.mixed_ops().scalar(coeff.uniformizer())),
        }
    }

    /// The series variable (t in equal characteristic, T for T-series).
    pub fn series_var(&self) -> Option<LocalElem> {
        match &*self.kind {
            LocalKind::EqualChar { .. } => Some(self.uniformizer()),
            LocalKind::PAdic(_) => None,
            LocalKind::Mixed { coeff, .. } => Some(LocalElem::Mixed(self.mixed_ops().monomial(coeff.from_int(1), 1))),
        }
    }

    pub fn var_name(&self) -> Option<&str> {
        match &*self.kind {
            LocalKind::EqualChar { var, .. } | LocalKind::Mixed { var, .. } => Some(var),
            LocalKind::PAdic(_) => None,
        }
    }

    pub fn add(&self, x: &LocalElem, y: &LocalElem) -> LocalElem {
        match (&*self.kind, x, y) {
            (LocalKind::EqualChar { residue, .. }, LocalElem::Series(a), LocalElem::Series(b)) => {
                LocalElem::Series(a.add(residue, b))
            }
            (LocalKind::PAdic(f), LocalElem::PAdic(a), LocalElem::PAdic(b)) => LocalElem::PAdic(f.add(a, b)),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a), LocalElem::Mixed(b)) => {
                LocalElem::Mixed(self.mixed_ops().add(a, b))
            }
            _ => mismatch!(),
        }
    }

    pub fn neg(&self, x: &LocalElem) -> LocalElem {
        match (&*self.kind, x) {
            (LocalKind::EqualChar { residue, .. }, LocalElem::Series(a)) => LocalElem::Series(a.neg(residue)),
            (LocalKind::PAdic(f), LocalElem::PAdic(a)) => LocalElem::PAdic(f.neg(a)),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a)) => LocalElem::Mixed(self.mixed_ops().neg(a)),
            _ => mismatch!(),
        }
    }

    pub fn sub(&self, x: &LocalElem, y: &LocalElem) -> LocalElem {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &LocalElem, y: &LocalElem) -> LocalElem {
        match (&*self.kind, x, y) {
            (LocalKind::EqualChar { residue, .. }, LocalElem::Series(a), LocalElem::Series(b)) => {
                LocalElem::Series(a.mul(residue, b))
            }
            (LocalKind::PAdic(f), LocalElem::PAdic(a), LocalElem::PAdic(b)) => LocalElem::PAdic(f.mul(a, b)),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a), LocalElem::Mixed(b)) => {
                LocalElem::Mixed(self.mixed_ops().mul(a, b))
            }
            _ => mismatch!(),
        }
    }

    pub fn pow(&self, x: &LocalElem, n: u64) -> LocalElem {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn pow_i(&self, x: &LocalElem, n: i64) -> Result<LocalElem> {
        if n >= 0 {
            Ok(self.pow(x, n as u64))
        } else {
            Ok(self.pow(&self.inv(x)?, n.unsigned_abs()))
        }
    }

    pub fn inv(&self, x: &LocalElem) -> Result<LocalElem> {
        if self.is_exact_zero(x) {
            return Err(Error::ZeroElement);
        }
        self.val(x)?;
        match (&*self.kind, x) {
            (LocalKind::EqualChar { residue, .. }, LocalElem::Series(a)) => {
                Ok(LocalElem::Series(a.inv(residue, self.policy.series_window)?))
            }
            (LocalKind::PAdic(f), LocalElem::PAdic(a)) => Ok(LocalElem::PAdic(f.inv(a)?)),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a)) => Ok(LocalElem::Mixed(self.mixed_ops().inv(a)?)),
            _ => mismatch!(),
        }
    }

    pub fn div(&self, x: &LocalElem, y: &LocalElem) -> Result<LocalElem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// x · π^m with the precision shifted exactly.
    pub fn mul_uniformizer_pow(&self, x: &LocalElem, m: i64) -> LocalElem {
        match (&*self.kind, x) {
            (LocalKind::EqualChar { .. }, LocalElem::Series(a)) => LocalElem::Series(a.shift(m)),
            (LocalKind::PAdic(f), LocalElem::PAdic(a)) => LocalElem::PAdic(f.mul_pi_pow(a, m)),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a)) => LocalElem::Mixed(self.mixed_ops().mul_pi_pow(a, m)),
            _ => mismatch!(),
        }
    }

    /// Valuation of the stored data, without certification.
    pub fn valuation_unchecked(&self, x: &LocalElem) -> Option<i64> {
        match (&*self.kind, x) {
            (LocalKind::EqualChar { .. }, LocalElem::Series(a)) => a.valuation(),
            (LocalKind::PAdic(f), LocalElem::PAdic(a)) => f.valuation(a),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a)) => self.mixed_ops().valuation(a),
            _ => mismatch!(),
        }
    }

    /// Valuation up to which the element is known (None: exact).
    pub fn precision(&self, x: &LocalElem) -> Option<i64> {
        match (&*self.kind, x) {
            (LocalKind::EqualChar { .. }, LocalElem::Series(a)) => a.prec,
            (LocalKind::PAdic(_), LocalElem::PAdic(a)) => Some(a.prec),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a)) => Some(self.mixed_ops().certain_bound(a)),
            _ => mismatch!(),
        }
    }

    /// Lower bound for the valuation (None: exact zero).
    pub fn val_lower_bound(&self, x: &LocalElem) -> Option<i64> {
        match self.valuation_unchecked(x) {
            Some(v) => Some(self.precision(x).map_or(v, |p| v.min(p))),
            None => self.precision(x),
        }
    }

    /// True when no nonzero digit is known.
    pub fn is_zero(&self, x: &LocalElem) -> bool {
        self.valuation_unchecked(x).is_none()
    }

    pub fn is_exact_zero(&self, x: &LocalElem) -> bool {
        matches!(x, LocalElem::Series(a) if a.is_exact_zero())
    }

    /// Certified normalized valuation.
    pub fn val(&self, x: &LocalElem) -> Result<i64> {
        let prec = self.precision(x);
        match self.valuation_unchecked(x) {
            None if prec.is_none() => Err(Error::ZeroElement),
            None => Err(Error::exhausted(format!("element vanishes to precision {}", prec.unwrap()))),
            Some(v) => match prec {
                Some(p) if v + self.policy.guard > p => Err(Error::exhausted(format!(
                    "valuation {v} is within {} of the precision {p}",
                    self.policy.guard
                ))),
                _ => Ok(v),
            },
        }
    }

    /// Truncate to an absolute precision.
    pub fn truncate(&self, x: &LocalElem, prec: i64) -> LocalElem {
        match (&*self.kind, x) {
            (LocalKind::EqualChar { residue, .. }, LocalElem::Series(a)) => LocalElem::Series(a.truncate(residue, Some(prec))),
            (LocalKind::PAdic(f), LocalElem::PAdic(a)) => LocalElem::PAdic(f.truncate(a, prec)),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a)) => LocalElem::Mixed(self.mixed_ops().truncate(a, prec)),
            _ => mismatch!(),
        }
    }

    /// Truncate to the precision of input data.
    pub fn as_input(&self, x: &LocalElem) -> LocalElem {
        self.truncate(x, self.input_prec())
    }

    pub fn residue(&self, x: &LocalElem) -> Result<ResidueElem> {
        match (&*self.kind, x) {
            (LocalKind::EqualChar { residue, .. }, LocalElem::Series(a)) => {
                if a.valuation().is_some_and(|v| v < 0) {
                    return Err(Error::NegativeValuation);
                }
                if a.prec.is_some_and(|p| p < 1) {
                    return Err(Error::exhausted("residue needs precision at least 1"));
                }
                Ok(a.coeff(residue, 0))
            }
            (LocalKind::PAdic(f), LocalElem::PAdic(a)) => Ok(ResidueElem::Fq(f.residue(a)?)),
            (LocalKind::Mixed { .. }, LocalElem::Mixed(a)) => Ok(ResidueElem::Laurent(self.mixed_ops().residue(a)?)),
            _ => mismatch!(),
        }
    }

    /// Teichmüller-free lift: digits of the residue placed in degree 0.
    pub fn lift(&self, r: &ResidueElem) -> Result<LocalElem> {
        if !self.residue.owns(r) {
            return Err(Error::FieldMismatch);
        }
        match (&*self.kind, r) {
            (LocalKind::EqualChar { residue, .. }, _) => {
                Ok(LocalElem::Series(Laurent::from_coeffs(residue, 0, vec![r.clone()], None)))
            }
            (LocalKind::PAdic(f), ResidueElem::Fq(a)) => Ok(LocalElem::PAdic(f.lift(a, f.cap()))),
            (LocalKind::Mixed { coeff, .. }, ResidueElem::Laurent(s)) => {
                Ok(LocalElem::Mixed(self.mixed_ops().lift(s, coeff.cap())))
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    // --- constructors used by input parsing -----------------------------

    /// Σ c_i t^i (equal characteristic).
    pub fn series(&self, terms: Vec<(i64, ResidueElem)>) -> Result<LocalElem> {
        let LocalKind::EqualChar { residue, .. } = &*self.kind else {
            return Err(Error::FieldMismatch);
        };
        let mut acc = Laurent::zero(None);
        for (k, c) in terms {
            if !residue.owns(&c) {
                return Err(Error::FieldMismatch);
            }
            acc = acc.add(residue, &Laurent::from_coeffs(residue, k, vec![c], None));
        }
        Ok(LocalElem::Series(acc))
    }

    /// Σ a_k T^k with p-adic coefficients (T-series fields).
    pub fn tseries(&self, terms: Vec<(i64, PAdicElem)>) -> Result<LocalElem> {
        let LocalKind::Mixed { coeff, .. } = &*self.kind else {
            return Err(Error::FieldMismatch);
        };
        let m = self.mixed_ops();
        let mut acc = m.zero(coeff.cap());
        for (k, a) in terms {
            acc = m.add(&acc, &m.monomial(a, k));
        }
        Ok(LocalElem::Mixed(acc))
    }

    /// The p-adic coefficient field (for p-adic and T-series kinds).
    pub fn padic_field(&self) -> Option<&PAdicField> {
        match &*self.kind {
            LocalKind::PAdic(f) | LocalKind::Mixed { coeff: f, .. } => Some(f),
            LocalKind::EqualChar { .. } => None,
        }
    }

    pub fn from_padic(&self, a: PAdicElem) -> Result<LocalElem> {
        match &*self.kind {
            LocalKind::PAdic(_) => Ok(LocalElem::PAdic(a)),
            LocalKind::Mixed { .. } => Ok(LocalElem::Mixed(self.mixed_ops().scalar(a))),
            LocalKind::EqualChar { .. } => Err(Error::FieldMismatch),
        }
    }

    // --- polynomials over K, lowest degree first ------------------------

    pub fn poly_eval(&self, f: &[LocalElem], x: &LocalElem) -> LocalElem {
        let mut acc = self.zero();
        for c in f.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    pub fn poly_derivative(&self, f: &[LocalElem]) -> Vec<LocalElem> {
        f.iter().enumerate().skip(1).map(|(i, c)| self.mul(&self.from_int(i as i64), c)).collect()
    }
}
