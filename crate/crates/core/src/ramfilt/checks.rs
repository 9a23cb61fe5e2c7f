use std::collections::BTreeSet;

use super::herbrand::{sfun_sum, HerbrandFunction};
use super::{compute, filtrations, RamificationData, Q};
use crate::error::{Error, Result};
use crate::extension::{fixed_field, group, CaseLabel, FixedField, GaloisExtension};

/// v_L(𝔇) = v_L(f'(x)) against Σ i_G and Σ_k (|G_k| − 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hilbert {
    pub different: i64,
    pub sum_i: i64,
    pub sum_lower: i64,
    pub holds: bool,
}

pub fn different_and_hilbert(e: &GaloisExtension, r: &RamificationData) -> Result<Hilbert> {
    let m = e.model();
    let k = e.base();
    let df = k.poly_derivative(m.minpoly());
    let different = e.v_l(&m.eval(&df, &e.gen()))?;
    let sum_i = r.sum_i();
    let sum_lower: i64 = filtrations(r).lower.iter().map(|g| g.len() as i64 - 1).sum();
    Ok(Hilbert { different, sum_i, sum_lower, holds: different == sum_i && sum_i == sum_lower })
}

/// L^H/K for a normal subgroup H, with its own ramification data.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub subgroup: Vec<usize>,
    pub fixed: FixedField,
    pub data: RamificationData,
    /// e(L|L^H).
    pub e_top: u64,
}

impl Quotient {
    /// 𝔰_{L/L^H} from the i_G values on H.
    pub fn top_herbrand(&self, r: &RamificationData) -> HerbrandFunction {
        let top = r.max_i();
        let orders = (1..=top)
            .map(|t| self.subgroup.iter().filter(|&&s| r.i[s].is_none_or(|x| x >= t)).count() as i64)
            .collect();
        HerbrandFunction::new(self.e_top as i64, orders)
    }

    pub fn bottom_herbrand(&self) -> HerbrandFunction {
        HerbrandFunction::from_data(&self.data)
    }
}

pub type Quotients = Vec<Quotient>;

/// Fixed fields and their data for every normal subgroup.
pub fn quotients(e: &GaloisExtension) -> Result<Quotients> {
    let t = e.table();
    let mut out = Vec::new();
    for h in group::subgroups(t) {
        if !group::is_normal(t, &h) {
            continue;
        }
        let fixed = fixed_field(e, &h)?;
        let data = compute(&fixed.ext)?;
        let e_top = e.e() / fixed.ext.e();
        out.push(Quotient { subgroup: h, fixed, data, e_top });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HerbrandEntry {
    pub subgroup: Vec<usize>,
    /// Quotient element and the coset it stands for.
    pub tau: usize,
    pub coset: Vec<usize>,
    pub lhs: i64,
    pub rhs: Q,
    pub holds: bool,
}

/// i_{G/H}(τ) = (1/e(L|L^H))·Σ_{σ ∈ τH} i_G(σ) for every normal H ≠ G.
pub fn herbrand_check(r: &RamificationData, qs: &Quotients) -> Vec<HerbrandEntry> {
    let mut out = Vec::new();
    for q in qs {
        if q.fixed.cosets.len() == 1 {
            continue;
        }
        for (tau, coset) in q.fixed.cosets.iter().enumerate().skip(1) {
            let lhs = q.data.i[tau].expect("non-identity quotient element");
            let sum: i64 = coset.iter().map(|&s| r.i[s].expect("non-identity element")).sum();
            let rhs = Q::new(sum, q.e_top as i64);
            out.push(HerbrandEntry {
                subgroup: q.subgroup.clone(),
                tau,
                coset: coset.clone(),
                lhs,
                rhs,
                holds: Q::from_integer(lhs) == rhs,
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub hilbert: Hilbert,
    pub herbrand: Vec<HerbrandEntry>,
    pub well_ramified: bool,
}

/// Hilbert formula and Herbrand property must agree; both true means well ramified.
pub fn well_ramified_verdict(e: &GaloisExtension, r: &RamificationData, qs: &Quotients) -> Result<Verdict> {
    let hilbert = different_and_hilbert(e, r)?;
    let herbrand = herbrand_check(r, qs);
    let herbrand_ok = herbrand.iter().all(|h| h.holds);
    if hilbert.holds != herbrand_ok {
        return Err(Error::EquivalenceViolation(format!(
            "Hilbert formula {} but Herbrand property {}",
            hilbert.holds, herbrand_ok
        )));
    }
    Ok(Verdict { hilbert, herbrand, well_ramified: herbrand_ok })
}

/// Case label from the residue data, falling back on the verdict.
pub fn classify_case(e: &GaloisExtension, verdict: &Result<Verdict>) -> Result<CaseLabel> {
    if let Some(l) = e.residue_label() {
        return Ok(l);
    }
    match verdict {
        Ok(v) if v.well_ramified => Ok(CaseLabel::CaseIII),
        Ok(_) => Ok(CaseLabel::NotWellRamified),
        Err(err) if err.is_precision() => Ok(CaseLabel::Undetermined),
        Err(Error::NotWellRamified(_)) => Ok(CaseLabel::NotWellRamified),
        Err(err) => Err(err.clone()),
    }
}

/// Label of a relative extension from its (e, f_sep, f_ins).
pub fn relative_label(e: u64, f_sep: u64, f_ins: u64) -> &'static str {
    if e * f_sep * f_ins == 1 {
        "trivial"
    } else if f_ins == 1 {
        "I"
    } else if e == 1 && f_sep == 1 {
        "II"
    } else {
        "other"
    }
}

#[derive(Debug, Clone)]
pub struct Tower {
    pub subgroup: Vec<usize>,
    pub bottom: &'static str,
    pub top: &'static str,
    pub quotient: usize,
}

/// A normal H with L^H/K in case I and L/L^H in case II (trivial floors allowed).
pub fn tower_decomposition(e: &GaloisExtension, qs: &Quotients) -> Result<Tower> {
    for (idx, q) in qs.iter().enumerate() {
        let t = &q.fixed.ext;
        let bottom = relative_label(t.e(), t.f_sep(), t.f_ins());
        let top = relative_label(e.e() / t.e(), e.f_sep() / t.f_sep(), e.f_ins() / t.f_ins());
        if matches!(bottom, "trivial" | "I") && matches!(top, "trivial" | "II") {
            return Ok(Tower { subgroup: q.subgroup.clone(), bottom, top, quotient: idx });
        }
    }
    Err(Error::NoDecomposition)
}

/// Modified upper jumps 𝔰(m) and whether all are integers.
pub fn upper_jumps_modified(r: &RamificationData) -> (Vec<Q>, bool) {
    let f = filtrations(r);
    let ok = f.upper_jumps.iter().all(|q| q.is_integer());
    (f.upper_jumps, ok)
}

/// Closed form of 𝔰 against (1/e)Σ min(i_G(σ), u).
pub fn lemma2(r: &RamificationData, samples: &[Q]) -> bool {
    let h = HerbrandFunction::from_data(r);
    samples.iter().all(|&u| h.eval(u) == sfun_sum(r, u))
}

/// i_{L^H/K}(τ) = 𝔰_{L/L^H}(max_{σ∈τH} i_G(σ)); returns (τ, lhs, rhs).
pub fn lemma3(r: &RamificationData, q: &Quotient) -> Vec<(usize, i64, Q)> {
    let top = q.top_herbrand(r);
    q.fixed
        .cosets
        .iter()
        .enumerate()
        .skip(1)
        .map(|(tau, c)| {
            let j = c.iter().map(|&s| r.i[s].unwrap()).max().unwrap();
            (tau, q.data.i[tau].unwrap(), top.eval(Q::from_integer(j)))
        })
        .collect()
}

/// 𝔰_{L/K} = 𝔰_{L^H/K} ∘ 𝔰_{L/L^H}, compared at every break point of
/// either side and one point beyond.
pub fn lemma4(r: &RamificationData, q: &Quotient) -> bool {
    let whole = HerbrandFunction::from_data(r);
    let top = q.top_herbrand(r);
    let bottom = q.bottom_herbrand();
    let mut pts: BTreeSet<Q> = BTreeSet::new();
    for (u, _) in whole.breaks().into_iter().chain(top.breaks()) {
        pts.insert(u);
    }
    for (v, _) in bottom.breaks() {
        pts.insert(top.inverse(v));
    }
    let last = *pts.iter().next_back().unwrap();
    pts.insert(last + 1);
    pts.insert(last + 2);
    pts.iter().all(|&u| whole.eval(u) == bottom.eval(top.eval(u)))
}

/// (G/H)(u) = G(u)H/H with G(u) = {σ : i_G(σ) ≥ 𝔰^{-1}(u)}.
pub fn herbrand_corollary(r: &RamificationData, q: &Quotient, samples: &[Q]) -> bool {
    let whole = HerbrandFunction::from_data(r);
    let bottom = q.bottom_herbrand();
    let which = |s: usize| q.fixed.cosets.iter().position(|c| c.contains(&s)).unwrap();
    samples.iter().all(|&u| {
        let lu = whole.inverse(u);
        let image: BTreeSet<usize> =
            (0..r.order()).filter(|&s| r.i[s].is_none_or(|x| Q::from_integer(x) >= lu)).map(which).collect();
        let bu = bottom.inverse(u);
        let direct: BTreeSet<usize> = (0..q.data.order())
            .filter(|&t| q.data.i[t].is_none_or(|x| Q::from_integer(x) >= bu))
            .collect();
        image == direct
    })
}

/// For cyclic G = ⟨ρ⟩ and |T:K| ≤ p^m ≤ |L:K|: i(ρ^{p^m}) > i(ρ^{p^{m−1}}).
pub fn monotone_along_powers(e: &GaloisExtension, r: &RamificationData, t_degree: u64) -> Option<bool> {
    let t = e.table();
    let n = t.len() as u64;
    let rho = (0..t.len()).find(|&g| group::element_order(t, g) == n)?;
    let p = e.p();
    let power = |mut k: u64| {
        let mut x = 0;
        while k > 0 {
            x = t[x][rho];
            k -= 1;
        }
        x
    };
    let as_q = |v: Option<i64>| v.map_or(i64::MAX, |x| x);
    let mut ok = true;
    let mut pm = p;
    while pm <= n {
        if pm >= t_degree {
            ok &= as_q(r.i[power(pm)]) > as_q(r.i[power(pm / p)]);
        }
        pm *= p;
    }
    Some(ok)
}

/// Case I: G_i = H_i; cases II and III: G_i = H_{i+1}, up to the last jump.
pub fn case_filtration_identity(r: &RamificationData, label: CaseLabel) -> bool {
    let f = filtrations(r);
    let shift = usize::from(label != CaseLabel::CaseI);
    (0..f.lower.len()).all(|k| f.lower[k] == f.shifted[k + shift])
}
