//! Swan, Artin and Kato conductors of degree-one characters, Hyodo depth,
//! and the inequalities tying them together.

pub mod character;

use crate::error::{Error, Result};
use crate::extension::{kummer_compositum, CaseLabel, GaloisExtension, Table};
use crate::ramfilt::{compute, Hilbert, HerbrandFunction, Quotients, RamificationData, Q};
pub use character::Character;

/// sw(χ) = (f/|G|)·Σ_{n≥1, χ|S_n ≠ 1} |S_n| with S_n = {s_G ≥ n} ∪ {1}.
pub fn swan_conductor(r: &RamificationData, chi: &Character) -> Result<Q> {
    if chi.values.len() != r.order() {
        return Err(Error::NotDegreeOne);
    }
    let top = r.s.iter().flatten().copied().max().unwrap_or(0);
    let mut total = 0i64;
    for n in 1..=top {
        let stratum: Vec<usize> = (0..r.order()).filter(|&s| r.s[s].is_none_or(|v| v >= n)).collect();
        if !chi.is_trivial_on(&stratum) {
            total += stratum.len() as i64;
        }
    }
    Ok(Q::new(r.f_res as i64 * total, r.order() as i64))
}

/// A(χ) = (1/e)·Σ_{n≥1, χ|G[n] ≠ 1} |G[n]|.
pub fn artin_conductor(r: &RamificationData, chi: &Character) -> Result<Q> {
    if chi.values.len() != r.order() {
        return Err(Error::NotDegreeOne);
    }
    let mut total = 0i64;
    for n in 1..=r.max_i() {
        let g: Vec<usize> = (0..r.order()).filter(|&s| r.i[s].is_none_or(|v| v >= n)).collect();
        if !chi.is_trivial_on(&g) {
            total += g.len() as i64;
        }
    }
    Ok(Q::new(total, r.e as i64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConductorReport {
    pub sw: Q,
    pub artin: Q,
    pub ksw: i64,
    pub label: CaseLabel,
    /// Largest modified jump.
    pub t: i64,
    pub s_t: Q,
    /// ksw through sw and through 𝔰(t).
    pub via_sw: Q,
    pub via_sfun: Q,
}

/// ksw(χ) for a faithful χ: sw in cases I/II and sw − 1 in case III, each
/// checked against 𝔰(t) − 1, 𝔰(t), 𝔰(t) − 1.
pub fn kato_conductor(r: &RamificationData, label: CaseLabel, chi: &Character) -> Result<ConductorReport> {
    if !chi.is_faithful() {
        return Err(Error::NotFaithful);
    }
    let sw = swan_conductor(r, chi)?;
    let artin = artin_conductor(r, chi)?;
    let t = r.max_i();
    let h = HerbrandFunction::from_data(r);
    let s_t = h.eval(Q::from_integer(t));
    if chi.is_trivial() {
        let zero = Q::from_integer(0);
        return Ok(ConductorReport { sw, artin, ksw: 0, label, t, s_t, via_sw: zero, via_sfun: zero });
    }
    let one = Q::from_integer(1);
    let (via_sw, via_sfun) = match label {
        CaseLabel::CaseI => (sw, s_t - one),
        CaseLabel::CaseII => (sw, s_t),
        CaseLabel::CaseIII => (sw - one, s_t - one),
        CaseLabel::NotWellRamified | CaseLabel::Undetermined => {
            return Err(Error::NotWellRamified(format!("no Kato conductor formula for label {label}")));
        }
    };
    if via_sw != via_sfun || !via_sw.is_integer() {
        return Err(Error::ConductorMismatch(format!("sw route gives {via_sw}, 𝔰 route gives {via_sfun}")));
    }
    Ok(ConductorReport { sw, artin, ksw: via_sw.to_integer(), label, t, s_t, via_sw, via_sfun })
}

/// ksw(χ) for any χ, computed on the extension cut out by χ.
pub fn kato_conductor_any(
    r: &RamificationData,
    label: CaseLabel,
    qs: &Quotients,
    chi: &Character,
) -> Result<ConductorReport> {
    if chi.is_faithful() {
        return kato_conductor(r, label, chi);
    }
    let ker = chi.kernel();
    let q = qs
        .iter()
        .find(|q| q.subgroup == ker)
        .ok_or_else(|| Error::AssertionFailed("kernel of χ is not among the computed subgroups".into()))?;
    let qchi = chi.on_quotient(&q.fixed.cosets)?;
    // subextensions of well ramified extensions are well ramified
    let qlabel = match q.fixed.ext.residue_label() {
        Some(l) => l,
        None if matches!(label, CaseLabel::CaseI | CaseLabel::CaseII | CaseLabel::CaseIII) => CaseLabel::CaseIII,
        None => label,
    };
    if q.fixed.ext.degree() == 1 {
        let zero = Q::from_integer(0);
        return Ok(ConductorReport { sw: zero, artin: zero, ksw: 0, label: qlabel, t: 0, s_t: zero, via_sw: zero, via_sfun: zero });
    }
    kato_conductor(&q.data, qlabel, &qchi)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthReport {
    pub v_different: i64,
    pub d_k: Q,
    pub d_l: Q,
    pub sum_s: i64,
    /// M_{L/K} = Σ s_G − d_L.
    pub m: Q,
    /// e·d_K from Σ s_G (cases I/II) or Σ s_G − e + 1 (case III).
    pub closed_form: Q,
    /// The jump t in e·ksw = d_L + t (I/II) or d_L + t − 1 (III): the last
    /// lower jump in case I, the largest modified jump otherwise.
    pub jump: i64,
    pub e_ksw: Q,
    pub ksw_relation_rhs: Q,
}

/// d_K = v_K(𝔇) − 1 + 1/e and its cross-checks.
pub fn depth(r: &RamificationData, hilbert: &Hilbert, label: CaseLabel, ksw: i64) -> Result<DepthReport> {
    let e = r.e as i64;
    let one = Q::from_integer(1);
    let d_k = Q::new(hilbert.different, e) - one + Q::new(1, e);
    let d_l = d_k * e;
    let sum_s = r.sum_s();
    let t = r.max_i();
    // in case I the jump entering e·ksw = d_L + t is the last lower jump max i_G − 1
    let (closed_form, jump, rhs) = match label {
        CaseLabel::CaseI => (Q::from_integer(sum_s), t - 1, d_l + t - 1),
        CaseLabel::CaseII => (Q::from_integer(sum_s), t, d_l + t),
        CaseLabel::CaseIII => (Q::from_integer(sum_s - e + 1), t, d_l + t - 1),
        _ => return Err(Error::NotWellRamified(format!("no depth formula for label {label}"))),
    };
    if closed_form != d_l {
        return Err(Error::DepthMismatch(format!("e·d_K = {d_l} but the s_G formula gives {closed_form}")));
    }
    let e_ksw = Q::from_integer(e * ksw);
    if e_ksw != rhs {
        return Err(Error::DepthMismatch(format!("e·ksw = {e_ksw} but the d_L + t relation gives {rhs}")));
    }
    Ok(DepthReport {
        v_different: hilbert.different,
        d_k,
        d_l,
        sum_s,
        m: Q::from_integer(sum_s) - d_l,
        closed_form,
        jump,
        e_ksw,
        ksw_relation_rhs: rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyodoLedger {
    pub j: Vec<i64>,
    /// Classical jumping numbers (case I only).
    pub classical: Option<Vec<i64>>,
    /// Derived jumping numbers ksw(χ^{p^{l−1}}) (cyclic groups).
    pub derived: Option<Vec<i64>>,
    pub lower: Q,
    pub upper: Q,
    pub d_k: Q,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub first_is_equality: bool,
    /// Equality is expected exactly in case I.
    pub equality_expected: bool,
}

/// j(l) = max{v ≥ 1 : |G^(v)| ≥ p^l} with G^(v) = G[⌈𝔰⁻¹(1 + v)⌉].
pub fn classical_jumps(r: &RamificationData, p: u64) -> Vec<i64> {
    let h = HerbrandFunction::from_data(r);
    let levels = log_p(r.order() as u64, p);
    let vmax = h.eval(Q::from_integer(r.max_i() + 1)).ceil().to_integer() + 1;
    (1..=levels)
        .map(|l| {
            let need = p.pow(l) as i64;
            (1..=vmax)
                .filter(|&v| {
                    let w = h.inverse(Q::from_integer(1 + v)).ceil().to_integer();
                    let order = r.i.iter().filter(|x| x.is_none_or(|y| y >= w)).count() as i64;
                    order >= need
                })
                .max()
                .unwrap_or(0)
        })
        .collect()
}

fn log_p(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

/// (p−1)Σ j(l)/p^l ≤ d_K ≤ (1 − 1/p)Σ j(l).
pub fn hyodo_bounds(
    t: &Table,
    r: &RamificationData,
    label: CaseLabel,
    qs: &Quotients,
    p: u64,
    d_k: Q,
) -> Result<HyodoLedger> {
    let levels = log_p(r.order() as u64, p);
    let classical = (label == CaseLabel::CaseI).then(|| classical_jumps(r, p));
    let derived = match derived_jumps(t, r, label, qs, p, levels) {
        Ok(d) => Some(d),
        Err(e) if e.is_precision() => return Err(e),
        Err(_) => None,
    };
    let j = match (&classical, &derived) {
        (Some(c), _) => c.clone(),
        (None, Some(d)) => d.clone(),
        (None, None) => return Err(Error::Unsupported("jumping numbers need a cyclic group outside case I".into())),
    };
    let pq = p as i64;
    let lower: Q = j.iter().enumerate().map(|(l, &v)| Q::new((pq - 1) * v, pq.pow(l as u32 + 1))).sum();
    let upper = Q::new(pq - 1, pq) * Q::from_integer(j.iter().sum());
    Ok(HyodoLedger {
        lower_holds: lower <= d_k,
        upper_holds: d_k <= upper,
        first_is_equality: lower == d_k,
        equality_expected: label == CaseLabel::CaseI,
        j,
        classical,
        derived,
        lower,
        upper,
        d_k,
    })
}

fn derived_jumps(t: &Table, r: &RamificationData, label: CaseLabel, qs: &Quotients, p: u64, levels: u32) -> Result<Vec<i64>> {
    let chi = Character::faithful(t)?;
    (0..levels).map(|l| kato_conductor_any(r, label, qs, &chi.power(p.pow(l))).map(|c| c.ksw)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SprianoLedger {
    pub ksw: i64,
    /// d_K + t/e.
    pub theorem6_rhs: Q,
    pub theorem6_slack: Q,
    /// ⌈(1/e)(|G|·sw − M)⌉.
    pub star_bound: i64,
    pub star_slack: i64,
    pub m: Q,
}

pub fn spriano_bound(r: &RamificationData, c: &ConductorReport, d: &DepthReport) -> SprianoLedger {
    let e = r.e as i64;
    let rhs = d.d_k + Q::new(c.t, e);
    let star = ((c.sw * r.order() as i64 - d.m) / e).ceil().to_integer();
    SprianoLedger {
        ksw: c.ksw,
        theorem6_rhs: rhs,
        theorem6_slack: rhs - c.ksw,
        star_bound: star,
        star_slack: star - c.ksw,
        m: d.m,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForms {
    pub p: u64,
    pub e: u64,
    pub ksw: Q,
    pub j2: Q,
    pub d: Q,
    pub lhs3: Q,
    pub lhs3_differs: bool,
}

/// The case III example family: ksw = (2p−1)e/(p−1) − 1, j(2) = pe/(p−1) − 1,
/// d = ((p−1)/p)(2pe/(p−1) − 1), first Hyodo side 2e − (p²−1)/p².
pub fn case3_closed_forms(p: u64, e: u64) -> Result<ClosedForms> {
    if !crate::coeffield::fq::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 || !e.is_multiple_of(p * (p - 1)) {
        return Err(Error::NonIntegralInstance { p, e });
    }
    let (pi, ei) = (p as i64, e as i64);
    let one = Q::from_integer(1);
    let ksw = Q::new((2 * pi - 1) * ei, pi - 1) - one;
    let j2 = Q::new(pi * ei, pi - 1) - one;
    let d = Q::new(pi - 1, pi) * (Q::new(2 * pi * ei, pi - 1) - one);
    let lhs3 = Q::from_integer(2 * ei) - Q::new(pi * pi - 1, pi * pi);
    Ok(ClosedForms { p, e, ksw, j2, d, lhs3, lhs3_differs: lhs3 != d })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositumCheck {
    pub root_var: String,
    pub e_lm_over_l: u64,
    /// (σ, i_{LM/M}(σ'), i_{L/K}(σ)).
    pub i_pairs: Vec<(usize, i64, i64)>,
    pub artin_lm: Q,
    pub artin_lk: Q,
    pub integral: bool,
    pub ksw_is_artin_minus_one: bool,
}

/// A(χ|_M) on the compositum LM/M and through the i-table of L/K.
pub fn artin_via_compositum(e: &GaloisExtension, r: &RamificationData, chi: &Character, ksw: i64) -> Result<CompositumCheck> {
    let c = kummer_compositum(e)?;
    let rlm = compute(&c.lm)?;
    let mut i_pairs = Vec::new();
    for s in 1..r.order() {
        let (a, b) = (rlm.i[s].unwrap(), r.i[s].unwrap());
        if a != c.e_lm_over_l as i64 * b {
            return Err(Error::IdentityViolation(format!(
                "i_LM/M(σ'_{s}) = {a} but e(LM|L)·i_L/K(σ_{s}) = {}",
                c.e_lm_over_l as i64 * b
            )));
        }
        i_pairs.push((s, a, b));
    }
    let artin_lm = artin_conductor(&rlm, chi)?;
    let artin_lk = artin_conductor(r, chi)?;
    if artin_lm != artin_lk {
        return Err(Error::IdentityViolation(format!("A(χ|_M) = {artin_lm} on LM/M but {artin_lk} from L/K")));
    }
    Ok(CompositumCheck {
        root_var: c.root_var,
        e_lm_over_l: c.e_lm_over_l,
        i_pairs,
        artin_lm,
        artin_lk,
        integral: artin_lm.is_integer(),
        ksw_is_artin_minus_one: Q::from_integer(ksw) == artin_lm - 1,
    })
}

#[cfg(test)]
mod tests;
