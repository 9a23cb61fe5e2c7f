//! Residue-level fields of characteristic p: finite fields, rational function
//! fields, simple algebraic extensions and truncated Laurent series over 𝔽_q.
//! Includes the p-th power bookkeeping needed to tell separable from
//! inseparable residue extensions.

pub mod fq;
pub mod laurent;
pub mod mpoly;
pub mod ratfun;
pub mod upoly;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
pub use fq::{FiniteField, Fq};
pub use laurent::Laurent;
pub use ratfun::{RatFun, RatFunField};

/// Arithmetic shared by every coefficient field used in this crate.
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
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
}

/// k[X]/(m) for a monic irreducible m over k.
#[derive(Debug, Clone, PartialEq)]
pub struct SimpleExt {
    base: ResidueField,
    minpoly: Vec<ResidueElem>,
    name: String,
}

/// 𝔽_q((T̄)), the residue field of a T-series field over a p-adic field.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentResidue {
    fq: FiniteField,
    var: String,
    window: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ResidueField {
    Finite(Arc<FiniteField>),
    RatFun(Arc<RatFunField>),
    Ext(Arc<SimpleExt>),
    Laurent(Arc<LaurentResidue>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ResidueElem {
    Fq(Fq),
    RatFun(RatFun),
    Ext(Vec<ResidueElem>),
    Laurent(Laurent<Fq>),
}

/// Which binary/unary operation [`rf_arith`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

/// Checked arithmetic entry point: verifies both operands belong to `k`.
pub fn rf_arith(k: &ResidueField, op: RfOp, x: &ResidueElem, y: Option<&ResidueElem>) -> Result<ResidueElem> {
    if !k.owns(x) || y.is_some_and(|y| !k.owns(y)) {
        return Err(Error::FieldMismatch);
    }
    match op {
        RfOp::Add => Ok(k.add(x, y.ok_or_else(|| Error::invalid("y", "missing operand"))?)),
        RfOp::Mul => Ok(k.mul(x, y.ok_or_else(|| Error::invalid("y", "missing operand"))?)),
        RfOp::Inv => k.inv(x),
        RfOp::Pow(n) => Ok(k.pow(x, n)),
    }
}

impl LaurentResidue {
    pub fn new(fq: FiniteField, var: impl Into<String>, window: i64) -> Self {
        LaurentResidue { fq, var: var.into(), window }
    }

    pub fn fq(&self) -> &FiniteField {
        &self.fq
    }

    pub fn var(&self) -> &str {
        &self.var
    }
}

impl SimpleExt {
    /// Verified construction: the minimal polynomial must be monic and irreducible.
    pub fn new(base: ResidueField, minpoly: Vec<ResidueElem>, name: impl Into<String>) -> Result<Self> {
        let ext = Self::new_trusted(base, minpoly, name)?;
        check_irreducible(&ext.base, &ext.minpoly)?;
        Ok(ext)
    }

    /// Construction without the irreducibility test, for polynomials that are
    /// irreducible for structural reasons (e.g. residue polynomials of a
    /// local ring).
    pub fn new_trusted(base: ResidueField, minpoly: Vec<ResidueElem>, name: impl Into<String>) -> Result<Self> {
        let mut m = minpoly;
        upoly::trim(&base, &mut m);
        if m.len() < 2 {
            return Err(Error::invalid("minpoly", "must have positive degree"));
        }
        if m.last() != Some(&base.one()) {
            return Err(Error::NotMonic);
        }
        Ok(SimpleExt { base, minpoly: m, name: name.into() })
    }

    pub fn base(&self) -> &ResidueField {
        &self.base
    }

    pub fn minpoly(&self) -> &[ResidueElem] {
        &self.minpoly
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    fn reduce(&self, mut a: Vec<ResidueElem>) -> Vec<ResidueElem> {
        let b = &self.base;
        let d = self.degree();
        while a.len() > d {
            let top = a.pop().unwrap();
            if !b.is_zero(&top) {
                let shift = a.len() - d;
                for j in 0..d {
                    a[shift + j] = b.sub(&a[shift + j], &b.mul(&top, &self.minpoly[j]));
                }
            }
        }
        a.resize(d, b.zero());
        a
    }
}

/// Irreducibility of a monic polynomial over k, decided where a sound criterion applies.
pub fn check_irreducible(base: &ResidueField, m: &[ResidueElem]) -> Result<()> {
    let deg = m.len() - 1;
    if deg == 1 {
        return Ok(());
    }
    if let Some(q) = base.finite_order() {
        return if fq::is_irreducible_over_finite(base, q, m)? { Ok(()) } else { Err(Error::NotIrreducible) };
    }
    // constant coefficients: irreducible over 𝔽_q implies irreducible over k, since 𝔽_q is
    // algebraically closed in k
    if let Some(fqf) = base.constant_field() {
        let consts: Option<Vec<Fq>> = m.iter().map(|c| base.as_constant(c)).collect();
        if let Some(cs) = consts {
            let q = fqf.order();
            return if fq::is_irreducible_over_finite(&fqf, q, &cs)? { Ok(()) } else { Err(Error::NotIrreducible) };
        }
    }
    // X^{p^s} - b is irreducible iff b is not a p-th power
    let p = base.characteristic() as usize;
    let middle_zero = m[1..deg].iter().all(|c| base.is_zero(c));
    let mut d = deg;
    while d.is_multiple_of(p) {
        d /= p;
    }
    if middle_zero && d == 1 {
        let b = base.neg(&m[0]);
        return match base.pth_root_test(&b)? {
            None => Ok(()),
            Some(_) => Err(Error::NotIrreducible),
        };
    }
    Err(Error::IrreducibilityUndecided(format!("degree {deg} polynomial over {base}")))
}

impl fmt::Display for ResidueField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueField::Finite(k) => write!(f, "F_{}^{}", k.p(), k.degree()),
            ResidueField::RatFun(k) => write!(f, "F_{}^{}({})", k.fq().p(), k.fq().degree(), k.vars().join(",")),
            ResidueField::Ext(k) => write!(f, "{}[{}]/(deg {})", k.base, k.name, k.degree()),
            ResidueField::Laurent(k) => write!(f, "F_{}^{}(({}))", k.fq.p(), k.fq.degree(), k.var),
        }
    }
}

impl ResidueField {
    pub fn finite(p: u64, r: usize) -> Result<Self> {
        Ok(ResidueField::Finite(Arc::new(FiniteField::new(p, r)?)))
    }

    pub fn from_finite(k: FiniteField) -> Self {
        ResidueField::Finite(Arc::new(k))
    }

    pub fn ratfun(k: FiniteField, vars: Vec<String>) -> Result<Self> {
        Ok(ResidueField::RatFun(Arc::new(RatFunField::new(k, vars)?)))
    }

    pub fn ext(ext: SimpleExt) -> Self {
        ResidueField::Ext(Arc::new(ext))
    }

    pub fn laurent(k: FiniteField, var: impl Into<String>, window: i64) -> Self {
        ResidueField::Laurent(Arc::new(LaurentResidue::new(k, var, window)))
    }

    pub fn p(&self) -> u64 {
        self.characteristic()
    }

    /// The finite field of constants at the bottom of the tower.
    pub fn constant_field(&self) -> Option<FiniteField> {
        match self {
            ResidueField::Finite(k) => Some((**k).clone()),
            ResidueField::RatFun(k) => Some(k.fq().clone()),
            ResidueField::Laurent(k) => Some(k.fq.clone()),
            ResidueField::Ext(_) => None,
        }
    }

    /// Number of elements when the field is finite.
    pub fn finite_order(&self) -> Option<u128> {
        match self {
            ResidueField::Finite(k) => Some(k.order()),
            ResidueField::Ext(e) => e.base.finite_order().map(|q| q.pow(e.degree() as u32)),
            _ => None,
        }
    }

    /// c with |k : k^p| = p^c.
    pub fn imperfection_degree(&self) -> usize {
        match self {
            ResidueField::Finite(_) => 0,
            ResidueField::RatFun(k) => k.nvars(),
            ResidueField::Laurent(_) => 1,
            ResidueField::Ext(e) => e.base.imperfection_degree(),
        }
    }

    /// The element as a constant of 𝔽_q, when it is one.
    pub fn as_constant(&self, x: &ResidueElem) -> Option<Fq> {
        match (self, x) {
            (ResidueField::Finite(_), ResidueElem::Fq(a)) => Some(a.clone()),
            (ResidueField::RatFun(k), ResidueElem::RatFun(r)) => {
                if r.num.is_constant() && r.den.is_constant() {
                    let n = r.num.terms.values().next().cloned().unwrap_or_else(|| k.fq().zero());
                    Some(n)
                } else {
                    None
                }
            }
            (ResidueField::Laurent(k), ResidueElem::Laurent(s)) => {
                if s.prec.is_some() {
                    return None;
                }
                match s.coeffs.len() {
                    0 => Some(k.fq.zero()),
                    1 if s.start == 0 => Some(s.coeffs[0].clone()),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    pub fn constant(&self, c: Fq) -> ResidueElem {
        match self {
            ResidueField::Finite(_) => ResidueElem::Fq(c),
            ResidueField::RatFun(k) => ResidueElem::RatFun(k.constant(c)),
            ResidueField::Laurent(k) => ResidueElem::Laurent(Laurent::from_coeffs(&k.fq, 0, vec![c], None)),
            ResidueField::Ext(e) => self.embed(&e.base.constant(c)),
        }
    }

    /// Embed an element of the base of an extension field.
    pub fn embed(&self, x: &ResidueElem) -> ResidueElem {
        match self {
            ResidueField::Ext(e) => {
                let mut v = vec![e.base.zero(); e.degree()];
                v[0] = x.clone();
                ResidueElem::Ext(v)
            }
            _ => x.clone(),
        }
    }

    /// The adjoined generator of an extension, or the i-th variable of a rational function field.
    pub fn generator(&self, i: usize) -> Result<ResidueElem> {
        match self {
            ResidueField::Ext(e) => {
                let mut v = vec![e.base.zero(); e.degree()];
                if e.degree() == 1 {
                    return Ok(ResidueElem::Ext(vec![e.base.neg(&e.minpoly[0])]));
                }
                v[1] = e.base.one();
                Ok(ResidueElem::Ext(v))
            }
            ResidueField::RatFun(k) if i < k.nvars() => Ok(ResidueElem::RatFun(k.var(i))),
            ResidueField::Laurent(k) => Ok(ResidueElem::Laurent(Laurent::from_coeffs(&k.fq, 1, vec![k.fq.one()], None))),
            ResidueField::Finite(k) => Ok(ResidueElem::Fq(k.generator())),
            _ => Err(Error::invalid("generator", "no such generator")),
        }
    }

    /// Shallow ownership test used to reject mixed-field arithmetic.
    pub fn owns(&self, x: &ResidueElem) -> bool {
        match (self, x) {
            (ResidueField::Finite(k), ResidueElem::Fq(a)) => a.len() == k.degree() && a.iter().all(|&c| c < k.p()),
            (ResidueField::RatFun(k), ResidueElem::RatFun(r)) => r.num.nvars == k.nvars(),
            (ResidueField::Ext(e), ResidueElem::Ext(v)) => v.len() == e.degree() && v.iter().all(|c| e.base.owns(c)),
            (ResidueField::Laurent(_), ResidueElem::Laurent(_)) => true,
            _ => false,
        }
    }

    /// Returns y with y^p = x when x is a p-th power in this field.
    pub fn pth_root_test(&self, x: &ResidueElem) -> Result<Option<ResidueElem>> {
        match (self, x) {
            (ResidueField::Finite(k), ResidueElem::Fq(a)) => Ok(Some(ResidueElem::Fq(k.pth_root(a)))),
            (ResidueField::RatFun(k), ResidueElem::RatFun(r)) => Ok(k.pth_root(r).map(ResidueElem::RatFun)),
            (ResidueField::Laurent(k), ResidueElem::Laurent(s)) => {
                let p = k.fq.p() as i64;
                let mut coeffs = Vec::new();
                let mut start = 0;
                for (e, c) in s.terms() {
                    if k.fq.is_zero(c) {
                        continue;
                    }
                    if e.rem_euclid(p) != 0 {
                        return Ok(None);
                    }
                    if coeffs.is_empty() {
                        start = e / p;
                    }
                    let idx = (e / p - start) as usize;
                    coeffs.resize(idx + 1, k.fq.zero());
                    coeffs[idx] = k.fq.pth_root(c);
                }
                let prec = s.prec.map(|q| q.div_euclid(p) + if q.rem_euclid(p) == 0 { 0 } else { 1 });
                Ok(Some(ResidueElem::Laurent(Laurent::from_coeffs(&k.fq, start, coeffs, prec))))
            }
            (ResidueField::Ext(e), ResidueElem::Ext(v)) => ext_pth_root(self, e, v),
            _ => Err(Error::FieldMismatch),
        }
    }

    /// p-basis of the field over its p-th powers together with the coordinates of x:
    /// x = Σ_β basis_β · parts_β^p.
    fn p_decompose(&self, x: &ResidueElem) -> Result<(Vec<ResidueElem>, Vec<ResidueElem>)> {
        match (self, x) {
            (ResidueField::Finite(k), ResidueElem::Fq(a)) => {
                Ok((vec![self.one()], vec![ResidueElem::Fq(k.pth_root(a))]))
            }
            (ResidueField::RatFun(k), ResidueElem::RatFun(r)) => {
                let basis = k.p_basis().into_iter().map(ResidueElem::RatFun).collect();
                let parts = k.p_decompose(r)?.into_iter().map(ResidueElem::RatFun).collect();
                Ok((basis, parts))
            }
            (ResidueField::Laurent(k), ResidueElem::Laurent(s)) => {
                let p = k.fq.p() as i64;
                let mut basis = Vec::new();
                let mut parts = Vec::new();
                for beta in 0..p {
                    basis.push(ResidueElem::Laurent(Laurent::from_coeffs(&k.fq, beta, vec![k.fq.one()], None)));
                    let mut part = Laurent::zero(s.prec.map(|q| (q - beta).div_euclid(p) + i64::from((q - beta).rem_euclid(p) != 0)));
                    for (e, c) in s.terms() {
                        if e.rem_euclid(p) == beta && !k.fq.is_zero(c) {
                            let term = Laurent::from_coeffs(&k.fq, (e - beta) / p, vec![k.fq.pth_root(c)], None);
                            part = part.add(&k.fq, &term);
                        }
                    }
                    parts.push(ResidueElem::Laurent(part));
                }
                Ok((basis, parts))
            }
            _ => Err(Error::Unsupported("p-basis of an iterated extension".into())),
        }
    }
}

/// p-th root in k0[a]/(m) by solving a linear system over k0 on p-basis coordinates.
fn ext_pth_root(k: &ResidueField, e: &SimpleExt, x: &[ResidueElem]) -> Result<Option<ResidueElem>> {
    let b = &e.base;
    let p = b.characteristic();
    if let Some(q) = k.finite_order() {
        // Frobenius inverse: x^{|k|/p}
        let mut y = ResidueElem::Ext(x.to_vec());
        let mut steps = 0;
        let mut n = q;
        while n > p as u128 {
            n /= p as u128;
            steps += 1;
        }
        for _ in 0..steps {
            y = k.pow(&y, p);
        }
        return Ok(Some(y));
    }
    if matches!(b, ResidueField::Ext(_)) {
        return Err(Error::Unsupported("p-th roots in an iterated extension".into()));
    }
    let d = e.degree();
    let a = k.generator(0)?;
    let ap = k.pow(&a, p);
    // columns: coordinates of (a^p)^i
    let mut cols = Vec::with_capacity(d);
    let mut cur = k.one();
    for _ in 0..d {
        let ResidueElem::Ext(v) = &cur else { unreachable!() };
        cols.push(v.clone());
        cur = k.mul(&cur, &ap);
    }
    let mut rows: Vec<Vec<ResidueElem>> = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..d {
        let (_, xparts) = b.p_decompose(&x[j])?;
        let decomposed: Vec<Vec<ResidueElem>> =
            (0..d).map(|i| b.p_decompose(&cols[i][j]).map(|r| r.1)).collect::<Result<_>>()?;
        for (beta, xb) in xparts.iter().enumerate() {
            rows.push((0..d).map(|i| decomposed[i][beta].clone()).collect());
            rhs.push(xb.clone());
        }
    }
    Ok(solve_linear(b, rows, rhs)?.map(ResidueElem::Ext))
}

/// Gaussian elimination; `None` when the system is inconsistent.
pub fn solve_linear<F: Field>(f: &F, mut rows: Vec<Vec<F::Elem>>, mut rhs: Vec<F::Elem>) -> Result<Option<Vec<F::Elem>>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else { continue };
        rows.swap(r, pr);
        rhs.swap(r, pr);
        let inv = f.inv(&rows[r][c])?;
        for i in 0..rows.len() {
            if i != r && !f.is_zero(&rows[i][c]) {
                let factor = f.mul(&rows[i][c], &inv);
                for k in c..n {
                    let t = f.mul(&factor, &rows[r][k]);
                    rows[i][k] = f.sub(&rows[i][k], &t);
                }
                rhs[i] = f.sub(&rhs[i], &f.mul(&factor, &rhs[r]));
            }
        }
        pivots.push((r, c, inv));
        r += 1;
    }
    if rhs[r..].iter().any(|v| !f.is_zero(v)) {
        return Ok(None);
    }
    let mut sol = vec![f.zero(); n];
    for (row, col, inv) in pivots {
        sol[col] = f.mul(&rhs[row], &inv);
    }
    Ok(Some(sol))
}

/// m(X) = m_sep(X^{p^s}) with s maximal.
pub fn separable_split<F: Field>(f: &F, m: &[F::Elem]) -> Result<(Vec<F::Elem>, u32)> {
    let mut cur = m.to_vec();
    upoly::trim(f, &mut cur);
    if cur.len() < 2 {
        return Err(Error::invalid("m", "polynomial must be nonconstant"));
    }
    if cur.last() != Some(&f.one()) {
        return Err(Error::NotMonic);
    }
    let p = f.characteristic() as usize;
    let mut s = 0;
    loop {
        let deg = cur.len() - 1;
        if deg == 0 || deg % p != 0 {
            break;
        }
        if cur.iter().enumerate().any(|(i, c)| i % p != 0 && !f.is_zero(c)) {
            break;
        }
        cur = cur.iter().step_by(p).cloned().collect();
        s += 1;
    }
    Ok((cur, s))
}

impl Field for ResidueField {
    type Elem = ResidueElem;

    fn zero(&self) -> ResidueElem {
        match self {
            ResidueField::Finite(k) => ResidueElem::Fq(k.zero()),
            ResidueField::RatFun(k) => ResidueElem::RatFun(k.zero()),
            ResidueField::Ext(e) => ResidueElem::Ext(vec![e.base.zero(); e.degree()]),
            ResidueField::Laurent(_) => ResidueElem::Laurent(Laurent::zero(None)),
        }
    }

    fn one(&self) -> ResidueElem {
        match self {
            ResidueField::Finite(k) => ResidueElem::Fq(k.one()),
            ResidueField::RatFun(k) => ResidueElem::RatFun(k.one()),
            ResidueField::Ext(e) => self.embed(&e.base.one()),
            ResidueField::Laurent(k) => ResidueElem::Laurent(Laurent::from_coeffs(&k.fq, 0, vec![k.fq.one()], None)),
        }
    }

    fn is_zero(&self, a: &ResidueElem) -> bool {
        match (self, a) {
            (ResidueField::Finite(k), ResidueElem::Fq(x)) => k.is_zero(x),
            (ResidueField::RatFun(k), ResidueElem::RatFun(x)) => k.is_zero(x),
            (ResidueField::Ext(e), ResidueElem::Ext(v)) => v.iter().all(|c| e.base.is_zero(c)),
            (ResidueField::Laurent(_), ResidueElem::Laurent(s)) => s.is_zero_known(),
            _ => panic!("residue field mismatch"),
        }
    }

    fn add(&self, a: &ResidueElem, b: &ResidueElem) -> ResidueElem {
        match (self, a, b) {
            (ResidueField::Finite(k), ResidueElem::Fq(x), ResidueElem::Fq(y)) => ResidueElem::Fq(k.add(x, y)),
            (ResidueField::RatFun(k), ResidueElem::RatFun(x), ResidueElem::RatFun(y)) => ResidueElem::RatFun(k.add(x, y)),
            (ResidueField::Ext(e), ResidueElem::Ext(x), ResidueElem::Ext(y)) => {
                ResidueElem::Ext(x.iter().zip(y).map(|(u, v)| e.base.add(u, v)).collect())
            }
            (ResidueField::Laurent(k), ResidueElem::Laurent(x), ResidueElem::Laurent(y)) => {
                ResidueElem::Laurent(x.add(&k.fq, y))
            }
            _ => panic!("residue field mismatch"),
        }
    }

    fn neg(&self, a: &ResidueElem) -> ResidueElem {
        match (self, a) {
            (ResidueField::Finite(k), ResidueElem::Fq(x)) => ResidueElem::Fq(k.neg(x)),
            (ResidueField::RatFun(k), ResidueElem::RatFun(x)) => ResidueElem::RatFun(k.neg(x)),
            (ResidueField::Ext(e), ResidueElem::Ext(x)) => ResidueElem::Ext(x.iter().map(|u| e.base.neg(u)).collect()),
            (ResidueField::Laurent(k), ResidueElem::Laurent(x)) => ResidueElem::Laurent(x.neg(&k.fq)),
            _ => panic!("residue field mismatch"),
        }
    }

    fn mul(&self, a: &ResidueElem, b: &ResidueElem) -> ResidueElem {
        match (self, a, b) {
            (ResidueField::Finite(k), ResidueElem::Fq(x), ResidueElem::Fq(y)) => ResidueElem::Fq(k.mul(x, y)),
            (ResidueField::RatFun(k), ResidueElem::RatFun(x), ResidueElem::RatFun(y)) => ResidueElem::RatFun(k.mul(x, y)),
            (ResidueField::Ext(e), ResidueElem::Ext(x), ResidueElem::Ext(y)) => {
                let prod = upoly::mul(&e.base, x, y);
                ResidueElem::Ext(e.reduce(prod))
            }
            (ResidueField::Laurent(k), ResidueElem::Laurent(x), ResidueElem::Laurent(y)) => {
                ResidueElem::Laurent(x.mul(&k.fq, y))
            }
            _ => panic!("residue field mismatch"),
        }
    }

    fn inv(&self, a: &ResidueElem) -> Result<ResidueElem> {
        match (self, a) {
            (ResidueField::Finite(k), ResidueElem::Fq(x)) => Ok(ResidueElem::Fq(k.inv(x)?)),
            (ResidueField::RatFun(k), ResidueElem::RatFun(x)) => Ok(ResidueElem::RatFun(k.inv(x)?)),
            (ResidueField::Ext(e), ResidueElem::Ext(x)) => {
                if x.iter().all(|c| e.base.is_zero(c)) {
                    return Err(Error::DivisionByZero);
                }
                let (g, s, _) = upoly::xgcd(&e.base, x, &e.minpoly)?;
                if g.len() != 1 {
                    return Err(Error::NotIrreducible);
                }
                Ok(ResidueElem::Ext(e.reduce(s)))
            }
            (ResidueField::Laurent(k), ResidueElem::Laurent(x)) => {
                if x.is_zero_known() {
                    return Err(Error::DivisionByZero);
                }
                Ok(ResidueElem::Laurent(x.inv(&k.fq, k.window)?))
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    fn from_int(&self, n: i64) -> ResidueElem {
        match self {
            ResidueField::Finite(k) => ResidueElem::Fq(k.from_int(n)),
            ResidueField::RatFun(k) => ResidueElem::RatFun(k.from_int(n)),
            ResidueField::Ext(e) => self.embed(&e.base.from_int(n)),
            ResidueField::Laurent(k) => {
                ResidueElem::Laurent(Laurent::from_coeffs(&k.fq, 0, vec![k.fq.from_int(n)], None))
            }
        }
    }

    fn characteristic(&self) -> u64 {
        match self {
            ResidueField::Finite(k) => k.p(),
            ResidueField::RatFun(k) => k.fq().p(),
            ResidueField::Ext(e) => e.base.characteristic(),
            ResidueField::Laurent(k) => k.fq.p(),
        }
    }
}

#[cfg(test)]
mod tests;
