use super::model::{product_of_linears, LElem, Model};
use super::{group, ActionModel, CaseLabel, GaloisExtension};
use crate::cdvf::mixed::MixedElem;
use crate::cdvf::{LocalElem, LocalField, LocalKind};
use crate::error::{Error, Result};

/// Re-present an extension through another generator y of L/K: the new
/// minimal polynomial is Π_σ (X − σy) and σ(y) is solved for in powers of y.
pub fn change_generator(action: &ActionModel, y: &LElem) -> Result<ActionModel> {
    let m = action.model();
    let k = m.base();
    let n = action.order();
    let conj: Vec<LElem> = (0..n).map(|s| action.apply(s, y)).collect();
    require_distinct(m, &conj)?;
    let minpoly = to_base_poly(m, &product_of_linears(m, &conj))?;
    let target = Model::new(k.clone(), minpoly)?;
    let gens: Vec<LElem> = conj.iter().map(|c| action.express_in_powers(y, c, n)).collect::<Result<_>>()?;
    ActionModel::new(target, gens)
}

fn require_distinct(m: &Model, conj: &[LElem]) -> Result<()> {
    for a in 0..conj.len() {
        for b in a + 1..conj.len() {
            let d = m.sub(&conj[a], &conj[b]);
            if m.coord_val(&d)?.is_none() {
                return Err(Error::DegreeMismatch(format!("conjugates {a} and {b} coincide")));
            }
        }
    }
    Ok(())
}

fn to_base_poly(m: &Model, poly: &[LElem]) -> Result<Vec<LocalElem>> {
    poly.iter()
        .map(|c| m.as_base(c).ok_or_else(|| Error::AssertionFailed("coefficient outside the base field".into())))
        .collect()
}

/// The fixed field L^H as an extension of K.
#[derive(Debug, Clone)]
pub struct FixedField {
    pub ext: GaloisExtension,
    /// Generator of L^H inside L.
    pub beta: LElem,
    pub subgroup: Vec<usize>,
    /// Quotient element q corresponds to cosets[q].
    pub cosets: Vec<Vec<usize>>,
    /// Which candidate of the search schedule succeeded.
    pub candidate: String,
}

impl FixedField {
    pub fn coset_of(&self, s: usize) -> usize {
        self.cosets.iter().position(|c| c.contains(&s)).unwrap()
    }
}

/// Search for a monogenic generator of L^H: traces Σ_H σ(x^j), then norms
/// Π_H σ(x + c), keeping the first whose conjugates over G/H are distinct
/// and whose minimal polynomial gives a maximal model.
pub fn fixed_field(e: &GaloisExtension, h: &[usize]) -> Result<FixedField> {
    let t = e.table();
    let mut h: Vec<usize> = h.to_vec();
    h.sort();
    h.dedup();
    if group::closure(t, &h) != h {
        return Err(Error::invalid("subgroup", "not a subgroup"));
    }
    if !group::is_normal(t, &h) {
        return Err(Error::invalid("subgroup", "not normal"));
    }
    let cosets = group::cosets(t, &h);
    if h.len() == 1 {
        return Ok(FixedField { ext: e.clone(), beta: e.gen(), subgroup: h, cosets, candidate: "x".into() });
    }
    let m = e.model();
    let k = e.base();
    let n = e.degree();
    let x = e.gen();
    let mut schedule: Vec<(String, LElem)> = Vec::new();
    for j in 1..n {
        let xj = m.pow(&x, j as u64);
        let tr = h.iter().fold(m.zero(), |acc, &s| m.add(&acc, &e.apply(s, &xj)));
        schedule.push((format!("trace of x^{j}"), tr));
    }
    let mut shifts: Vec<(String, LocalElem)> = (0..=e.p() as i64).map(|c| (c.to_string(), k.from_int(c))).collect();
    if let Some(u) = k.series_var() {
        shifts.push((k.var_name().unwrap_or("t").to_string(), u));
    }
    for (name, c) in shifts {
        let xc = m.add(&x, &m.from_base(&c));
        let nm = h.iter().fold(m.one(), |acc, &s| m.mul(&acc, &e.apply(s, &xc)));
        schedule.push((format!("norm of x + {name}"), nm));
    }
    let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
    for (name, beta) in schedule {
        match try_candidate(e, &beta, &reps) {
            Ok(Some(ext)) => {
                return Ok(FixedField { ext, beta, subgroup: h, cosets, candidate: name });
            }
            Ok(None) => continue,
            Err(err) if err.is_precision() => return Err(err),
            Err(_) => continue,
        }
    }
    Err(Error::GeneratorSearchFailed(h.len()))
}

fn try_candidate(e: &GaloisExtension, beta: &LElem, reps: &[usize]) -> Result<Option<GaloisExtension>> {
    let m = e.model();
    let k = e.base();
    let conj: Vec<LElem> = reps.iter().map(|&s| e.apply(s, beta)).collect();
    for a in 0..conj.len() {
        for b in a + 1..conj.len() {
            if m.coord_val(&m.sub(&conj[a], &conj[b]))?.is_none() {
                return Ok(None);
            }
        }
    }
    let minpoly = to_base_poly(m, &product_of_linears(m, &conj))?;
    if minpoly.iter().any(|c| k.val_lower_bound(c).is_some_and(|v| v < 0)) {
        return Ok(None);
    }
    let target = Model::new(k.clone(), minpoly)?;
    let deg = reps.len();
    let gens: Vec<LElem> = conj.iter().map(|c| e.action().express_in_powers(beta, c, deg)).collect::<Result<_>>()?;
    let action = ActionModel::new(target, gens)?;
    let ext = GaloisExtension::from_action(action, format!("{}_fixed", e.var()), None)?;
    Ok(if ext.is_maximal() { Some(ext) } else { None })
}

/// The base change of a case III extension to M = K(α^{1/f}).
#[derive(Debug, Clone)]
pub struct Compositum {
    pub m_field: LocalField,
    /// α^{1/f}.
    pub root_var: String,
    pub f: u64,
    pub lm: GaloisExtension,
    /// Automorphism σ of L/K corresponds to σ' = lm's element of the same index.
    pub e_lm_over_l: u64,
}

/// LM/M for M = K(T^{1/f}), where T is the series variable of a T-series
/// base and f = f_ins. The same polynomial and the same automorphism
/// images, read over M, describe LM/M, so σ'|_L = σ by construction.
pub fn kummer_compositum(e: &GaloisExtension) -> Result<Compositum> {
    if e.residue_label().is_some() {
        return Err(Error::NotCaseIII);
    }
    let k = e.base();
    let LocalKind::Mixed { coeff, var } = k.kind() else {
        return Err(Error::Unsupported("the compositum needs a T-series base field".into()));
    };
    let f = e.f_ins();
    let root_var = format!("{var}^(1/{f})");
    let mf = LocalField::mixed(coeff.clone(), root_var.clone(), k.policy())?;
    let map = |x: &LocalElem| -> LocalElem {
        match x {
            LocalElem::Mixed(me) => LocalElem::Mixed(MixedElem {
                coeffs: me.coeffs.iter().map(|(&i, c)| (i * f as i64, c.clone())).collect(),
                prec: me.prec,
                horizon: me.horizon.map(|h| h * f as i64),
                floor: me.floor,
            }),
            _ => unreachable!("T-series field holds T-series elements"),
        }
    };
    let model = Model::new(mf.clone(), e.model().minpoly().iter().map(map).collect())?;
    let gens: Vec<LElem> = (0..e.degree()).map(|s| e.image(s).iter().map(map).collect()).collect();
    let action = ActionModel::new(model, gens)?;
    let lm = GaloisExtension::from_action(action, e.var().to_string(), None)?;
    if lm.residue_label() != Some(CaseLabel::CaseI) {
        return Err(Error::AssertionFailed("LM/M is not in case I".into()));
    }
    let e_lm_over_l = lm.e() / e.e();
    Ok(Compositum { m_field: mf, root_var, f, lm, e_lm_over_l })
}
