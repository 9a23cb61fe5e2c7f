//! Monogenic Galois p-extensions L = K[X]/(f) with an explicit group action,
//! their residue invariants, fixed fields and base changes.

pub mod fixed;
pub mod group;
pub mod model;

use std::fmt;

use crate::cdvf::{linalg, LocalElem, LocalField};
use crate::coeffield::{check_irreducible, separable_split, upoly, Field, ResidueElem, ResidueField};
use crate::error::{Error, Result};
pub use fixed::{change_generator, fixed_field, kummer_compositum, Compositum, FixedField};
pub use group::{GroupSpec, Table};
pub use model::{LElem, Model};

/// How the automorphisms are supplied.
#[derive(Debug, Clone)]
pub enum ActionSpec {
    /// Images g_σ(X) of the generator, one per group element.
    Explicit(Vec<Vec<LocalElem>>),
    /// f = X^n − a and X ↦ ζ^j X for a root of unity ζ of order n in K.
    Kummer { zeta: LocalElem },
    /// f = X^p − X − a and X ↦ X + j. With `clearing = (a, b)` the declared
    /// generator becomes x^a·u^b for the series variable or uniformizer u.
    ArtinSchreier { clearing: Option<(i64, i64)> },
    /// X is ζ − 1 for a primitive p^level-th root of unity ζ and the group
    /// acts by ζ ↦ ζ^a with a ≡ 1 modulo p^level / n.
    Cyclotomic { level: u32 },
}

#[derive(Debug, Clone)]
pub struct ExtensionSpec {
    pub base: LocalField,
    pub var: String,
    pub minpoly: Vec<LocalElem>,
    pub action: ActionSpec,
    pub group: GroupSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    CaseI,
    CaseII,
    CaseIII,
    NotWellRamified,
    Undetermined,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::CaseI => "I",
            CaseLabel::CaseII => "II",
            CaseLabel::CaseIII => "III",
            CaseLabel::NotWellRamified => "not_well_ramified",
            CaseLabel::Undetermined => "undetermined",
        };
        f.write_str(s)
    }
}

/// A model K[X]/(f) together with verified automorphisms.
#[derive(Debug, Clone)]
pub struct ActionModel {
    model: Model,
    /// images[s][j] = σ_s(x^j)
    images: Vec<Vec<LElem>>,
    table: Table,
}

impl ActionModel {
    /// Verify that every g_σ is a root of f and that the images form a group.
    pub fn new(model: Model, gens: Vec<LElem>) -> Result<Self> {
        let n = model.degree();
        if gens.len() != n {
            return Err(Error::DegreeMismatch(format!("{} automorphisms for a degree {n} polynomial", gens.len())));
        }
        let x = model.gen();
        let id = gens
            .iter()
            .position(|g| model.is_zero(&model.sub(g, &x)))
            .ok_or_else(|| Error::ActionNotClosed("the identity is missing".into()))?;
        let mut gens = gens;
        gens.swap(0, id);
        for (s, g) in gens.iter().enumerate() {
            if !model.is_zero(&model.eval(model.minpoly(), g)) {
                return Err(Error::NotARoot(s));
            }
        }
        let images: Vec<Vec<LElem>> = gens
            .iter()
            .map(|g| {
                let mut pw = vec![model.one()];
                for j in 1..n {
                    let next = model.mul(&pw[j - 1], g);
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut am = ActionModel { model, images, table: Vec::new() };
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                // (σ_a∘σ_b)(x) = σ_a(g_b)
                let img = am.apply(a, &gens[b]);
                table[a][b] = gens
                    .iter()
                    .position(|g| am.model.is_zero(&am.model.sub(g, &img)))
                    .ok_or_else(|| Error::ActionNotClosed(format!("σ_{a}∘σ_{b} matches no automorphism")))?;
            }
        }
        group::verify_group(&table)?;
        am.table = table;
        Ok(am)
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    /// σ_s(y).
    pub fn apply(&self, s: usize, y: &LElem) -> LElem {
        let m = &self.model;
        let mut acc = m.zero();
        for (c, img) in y.iter().zip(&self.images[s]) {
            if m.base().is_exact_zero(c) {
                continue;
            }
            acc = m.add(&acc, &m.scale(c, img));
        }
        acc
    }

    /// g_s = σ_s(x).
    pub fn image(&self, s: usize) -> LElem {
        if self.model.degree() == 1 {
            return self.model.gen();
        }
        self.images[s][1].clone()
    }

    /// N_{L/K}(y) = Π_σ σ(y).
    pub fn norm(&self, y: &LElem) -> Result<LocalElem> {
        let m = &self.model;
        let mut acc = y.clone();
        for s in 1..self.order() {
            acc = m.mul(&acc, &self.apply(s, y));
        }
        m.as_base(&acc).ok_or_else(|| Error::AssertionFailed("norm does not lie in the base field".into()))
    }

    pub fn inv(&self, y: &LElem) -> Result<LElem> {
        let m = &self.model;
        let mut acc = m.one();
        for s in 1..self.order() {
            acc = m.mul(&acc, &self.apply(s, y));
        }
        let n = m.as_base(&m.mul(&acc, y)).ok_or_else(|| Error::AssertionFailed("norm does not lie in the base field".into()))?;
        let ninv = m.base().inv(&n)?;
        Ok(m.scale(&ninv, &acc))
    }

    /// Coordinates c with y = Σ c_j z^j, solved over K.
    pub fn express_in_powers(&self, z: &LElem, y: &LElem, count: usize) -> Result<Vec<LocalElem>> {
        let m = &self.model;
        let k = m.base();
        let n = m.degree();
        let mut pw = vec![m.one()];
        for j in 1..count {
            let next = m.mul(&pw[j - 1], z);
            pw.push(next);
        }
        let a: Vec<Vec<LocalElem>> = (0..n).map(|r| (0..count).map(|c| pw[c][r].clone()).collect()).collect();
        linalg::solve(k, a, y.clone())
    }
}

/// Residue data of a model with integral minimal polynomial.
#[derive(Debug, Clone)]
struct ResidueData {
    e: u64,
    f_sep: u64,
    f_ins: u64,
    factor: Vec<ResidueElem>,
    lift: Vec<LocalElem>,
    pi_l: LElem,
    maximal: bool,
}

/// A verified monogenic Galois extension.
#[derive(Debug, Clone)]
pub struct GaloisExtension {
    action: ActionModel,
    var: String,
    group: GroupSpec,
    note: Option<String>,
    res: ResidueData,
}

impl GaloisExtension {
    /// Wrap a verified action model and compute e, f_sep, f_ins.
    pub fn from_action(action: ActionModel, var: impl Into<String>, note: Option<String>) -> Result<Self> {
        let k = action.model.base().clone();
        let p = k.p();
        let group = group::structure(&action.table, p)?;
        let n = action.order() as u64;
        if !is_p_power(n, p) {
            return Err(Error::DegreeMismatch(format!("degree {n} is not a power of p = {p}")));
        }
        let res = residue_data(&action, &k)?;
        Ok(GaloisExtension { action, var: var.into(), group, note, res })
    }

    pub fn base(&self) -> &LocalField {
        self.action.model.base()
    }

    pub fn model(&self) -> &Model {
        &self.action.model
    }

    pub fn action(&self) -> &ActionModel {
        &self.action
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// How the declared generator was obtained, when it is not the input X.
    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.action.order()
    }

    pub fn p(&self) -> u64 {
        self.base().p()
    }

    pub fn table(&self) -> &Table {
        &self.action.table
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn apply(&self, s: usize, y: &LElem) -> LElem {
        self.action.apply(s, y)
    }

    pub fn gen(&self) -> LElem {
        self.action.model.gen()
    }

    pub fn image(&self, s: usize) -> LElem {
        self.action.image(s)
    }

    pub fn e(&self) -> u64 {
        self.res.e
    }

    pub fn f_sep(&self) -> u64 {
        self.res.f_sep
    }

    pub fn f_ins(&self) -> u64 {
        self.res.f_ins
    }

    /// |k_L : k_K|.
    pub fn f_res(&self) -> u64 {
        self.res.f_sep * self.res.f_ins
    }

    pub fn ext_invariants(&self) -> (u64, u64, u64) {
        (self.res.e, self.res.f_sep, self.res.f_ins)
    }

    /// The irreducible factor h̄ with f̄ = h̄^e.
    pub fn residue_factor(&self) -> &[ResidueElem] {
        &self.res.factor
    }

    /// Monic lift of h̄ to K[X].
    pub fn residue_factor_lift(&self) -> &[LocalElem] {
        &self.res.lift
    }

    /// True when 𝒪_K[x] is the full valuation ring of L.
    pub fn is_maximal(&self) -> bool {
        self.res.maximal
    }

    pub fn uniformizer(&self) -> &LElem {
        &self.res.pi_l
    }

    pub fn norm(&self, y: &LElem) -> Result<LocalElem> {
        self.action.norm(y)
    }

    /// Normalized valuation of L, through the norm: v_L = v_K∘N / f.
    pub fn v_l(&self, y: &LElem) -> Result<i64> {
        if self.model().is_zero(y) && y.iter().all(|c| self.base().is_exact_zero(c)) {
            return Err(Error::ZeroElement);
        }
        let nv = self.base().val(&self.norm(y)?)?;
        let f = self.f_res() as i64;
        if nv.rem_euclid(f) != 0 {
            return Err(Error::AssertionFailed(format!("v_K of a norm is {nv}, not divisible by f = {f}")));
        }
        Ok(nv / f)
    }

    pub fn inv(&self, y: &LElem) -> Result<LElem> {
        self.action.inv(y)
    }

    /// Label from residue data alone: I when k_L/k_K is separable, II when
    /// the extension is ferociously ramified with k_L = k_K(a) purely
    /// inseparable. Other extensions need the well-ramified verdict.
    pub fn residue_label(&self) -> Option<CaseLabel> {
        if !self.is_maximal() {
            return Some(CaseLabel::NotWellRamified);
        }
        if self.res.f_ins == 1 {
            Some(CaseLabel::CaseI)
        } else if self.res.e == 1 && self.res.f_sep == 1 {
            Some(CaseLabel::CaseII)
        } else {
            None
        }
    }
}

pub(crate) fn is_p_power(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Build and verify an extension from its description.
pub fn build_extension(spec: &ExtensionSpec) -> Result<GaloisExtension> {
    let k = &spec.base;
    let p = k.p();
    let model = Model::new(k.clone(), spec.minpoly.clone())?;
    let n = model.degree();
    if spec.group.order() != n as u64 {
        return Err(Error::DegreeMismatch(format!("group of order {} for a degree {n} polynomial", spec.group.order())));
    }
    if !is_p_power(n as u64, p) {
        return Err(Error::DegreeMismatch(format!("degree {n} is not a power of p = {p}")));
    }
    let f = model.minpoly().to_vec();
    let x = model.gen();
    let gens: Vec<LElem> = match &spec.action {
        ActionSpec::Explicit(polys) => polys.iter().map(|g| model.reduce(g.clone())).collect(),
        ActionSpec::Kummer { zeta } => {
            if f[1..n].iter().any(|c| !k.is_zero(c)) {
                return Err(Error::invalid("minpoly", "a Kummer extension needs f = X^n − a"));
            }
            let n64 = n as u64;
            if !k.is_zero(&k.sub(&k.pow(zeta, n64), &k.one())) {
                return Err(Error::invalid("zeta", format!("not an {n}-th root of unity")));
            }
            let sub = k.sub(&k.pow(zeta, n64 / p), &k.one());
            if k.is_exact_zero(&sub) {
                return Err(Error::invalid("zeta", format!("not a primitive {n}-th root of unity")));
            }
            if k.is_zero(&sub) {
                return Err(Error::exhausted("ζ^(n/p) − 1 vanishes at the working precision"));
            }
            k.val(&sub)?;
            (0..n).map(|j| model.scale(&k.pow(zeta, j as u64), &x)).collect()
        }
        ActionSpec::ArtinSchreier { .. } => {
            let shape_ok = n as u64 == p
                && f[2..n].iter().all(|c| k.is_zero(c))
                && k.is_zero(&k.add(&f[1], &k.one()));
            if !shape_ok || k.e_abs().is_some() {
                return Err(Error::invalid("minpoly", "an Artin–Schreier extension needs f = X^p − X − a in characteristic p"));
            }
            (0..n).map(|j| model.add(&x, &model.from_base(&k.from_int(j as i64)))).collect()
        }
        ActionSpec::Cyclotomic { level } => {
            let pk = p.pow(*level);
            if pk % (n as u64 * p) != 0 {
                return Err(Error::invalid("action", format!("degree {n} does not divide p^{level}")));
            }
            let step = pk / n as u64;
            let one = model.one();
            let z = model.add(&x, &one);
            (0..n as u64).map(|j| model.sub(&model.pow(&z, 1 + j * step), &one)).collect()
        }
    };
    let action = ActionModel::new(model, gens)?;
    let profile = group::order_profile(&action.table);
    if profile != spec.group.order_profile() {
        return Err(Error::ActionNotClosed(format!("the automorphisms do not form a group of type {}", spec.group)));
    }
    if let ActionSpec::ArtinSchreier { clearing: Some((a, b)) } = &spec.action {
        let u = k.series_var().unwrap_or_else(|| k.uniformizer());
        let m = action.model();
        let xa = if *a >= 0 { m.pow(&x, *a as u64) } else { m.pow(&action.inv(&x)?, a.unsigned_abs()) };
        let ub = k.pow_i(&u, *b)?;
        let y = m.scale(&ub, &xa);
        let cleared = change_generator(&action, &y)?;
        let note = format!("generator {}^{a}·{}^{b}", spec.var, k.var_name().unwrap_or("π"));
        return GaloisExtension::from_action(cleared, spec.var.clone(), Some(note));
    }
    GaloisExtension::from_action(action, spec.var.clone(), None)
}

/// p-th root of a polynomial over k, if it is a p-th power.
fn poly_pth_root(k: &ResidueField, f: &[ResidueElem]) -> Result<Option<Vec<ResidueElem>>> {
    let p = k.characteristic() as usize;
    let mut out = Vec::new();
    for (i, c) in f.iter().enumerate() {
        if i % p != 0 {
            if !k.is_zero(c) {
                return Ok(None);
            }
            continue;
        }
        match k.pth_root_test(c)? {
            Some(r) => out.push(r),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

fn residue_data(action: &ActionModel, k: &LocalField) -> Result<ResidueData> {
    let m = &action.model;
    let rf = k.residue_field();
    let f = m.minpoly();
    let mut fbar = Vec::with_capacity(f.len());
    for c in f {
        if k.val_lower_bound(c).is_some_and(|v| v < 0) {
            return Err(Error::invalid("minpoly", "coefficients must be integral"));
        }
        fbar.push(k.residue(c)?);
    }
    let p = k.p();
    let mut e = 1u64;
    let mut h = fbar.clone();
    while h.len() > 2 {
        match poly_pth_root(rf, &h)? {
            Some(r) => {
                h = r;
                e *= p;
            }
            None => break,
        }
    }
    check_irreducible(rf, &h)?;
    let (sep, s) = separable_split(rf, &h)?;
    let f_sep = (sep.len() - 1) as u64;
    let f_ins = p.pow(s);
    let lift: Vec<LocalElem> = h.iter().map(|c| k.lift(c)).collect::<Result<_>>()?;
    let (maximal, pi_l) = if e == 1 {
        (true, m.from_base(&k.uniformizer()))
    } else {
        // Dedekind: 𝒪_K[x] is maximal iff h̄ does not divide (f − h̃^e)/π reduced
        let mut he: Vec<LocalElem> = vec![k.one()];
        for _ in 0..e {
            he = poly_mul(k, &he, &lift);
        }
        let mut fbig = Vec::new();
        for (i, c) in f.iter().enumerate() {
            let d = k.sub(c, &he[i]);
            if !k.is_zero(&d) && k.val(&d)? < 1 {
                return Err(Error::AssertionFailed("f does not reduce to h̄^e".into()));
            }
            fbig.push(k.residue(&k.mul_uniformizer_pow(&d, -1))?);
        }
        let r = upoly::rem(rf, &fbig, &h)?;
        (!upoly::is_zero(rf, &r), m.eval(&lift, &m.gen()))
    };
    let res = ResidueData { e, f_sep, f_ins, factor: h, lift, pi_l, maximal };
    if maximal {
        let nv = k.val(&action.norm(&res.pi_l)?)?;
        if nv != (f_sep * f_ins) as i64 {
            return Err(Error::AssertionFailed(format!("v_K(N(π_L)) = {nv}, expected {}", f_sep * f_ins)));
        }
    }
    Ok(res)
}

pub(crate) fn poly_mul(k: &LocalField, a: &[LocalElem], b: &[LocalElem]) -> Vec<LocalElem> {
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    out
}
