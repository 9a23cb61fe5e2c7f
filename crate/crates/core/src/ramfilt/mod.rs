//! Ramification data of a monogenic extension: i_G and s_G tables, the
//! classical, two-index and modified filtrations, the modified
//! Hasse–Herbrand function, and the well-ramified checks built on them.

pub mod checks;
pub mod herbrand;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::extension::GaloisExtension;
pub use checks::{
    classify_case, different_and_hilbert, herbrand_check, tower_decomposition, upper_jumps_modified,
    well_ramified_verdict, HerbrandEntry, Hilbert, Quotient, Quotients, Tower, Verdict,
};
pub use herbrand::{classical_phi, HerbrandFunction};

pub type Q = Ratio<i64>;

/// Per-element ramification numbers, indexed like the group table.
/// `None` stands for +∞ (the identity).
#[derive(Debug, Clone, PartialEq)]
pub struct RamificationData {
    pub i: Vec<Option<i64>>,
    pub s: Vec<Option<i64>>,
    /// d[m][σ] = min v_L(σg − g) over g ∈ 𝔐_L^m, for m = 0..=e.
    pub d: Vec<Vec<Option<i64>>>,
    pub inertia: Vec<usize>,
    pub e: u64,
    pub f_res: u64,
}

impl RamificationData {
    pub fn order(&self) -> usize {
        self.i.len()
    }

    pub fn sum_i(&self) -> i64 {
        self.i.iter().flatten().sum()
    }

    pub fn sum_s(&self) -> i64 {
        self.s.iter().flatten().sum()
    }

    pub fn max_i(&self) -> i64 {
        self.i.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// i_G(σ) = v_L(σx − x) at the declared generator x.
pub fn compute_ig(e: &GaloisExtension) -> Result<Vec<Option<i64>>> {
    if !e.is_maximal() {
        return Err(Error::NotWellRamified("the declared generator does not generate the valuation ring".into()));
    }
    let m = e.model();
    let x = e.gen();
    (0..e.degree())
        .map(|s| if s == 0 { Ok(None) } else { e.v_l(&m.sub(&e.image(s), &x)).map(Some) })
        .collect()
}

/// d_m(σ) = min over the generators π_L^m x^j of 𝔐_L^m of v_L(σg − g).
fn compute_d(e: &GaloisExtension, sigma: usize, m: u64) -> Result<i64> {
    let md = e.model();
    let pim = md.pow(e.uniformizer(), m);
    let x = e.gen();
    let mut g = pim;
    let mut best: Option<i64> = None;
    for j in 0..e.degree() {
        if j > 0 {
            g = md.mul(&g, &x);
        }
        if m == 0 && j == 0 {
            continue;
        }
        let diff = md.sub(&e.apply(sigma, &g), &g);
        // an element fixed by σ contributes +∞
        if md.is_zero(&diff) {
            continue;
        }
        let v = e.v_l(&diff)?;
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best.ok_or_else(|| Error::AssertionFailed(format!("σ_{sigma} acts trivially on 𝔐^{m}")))
}

/// i_G, s_G and the d_m table.
pub fn compute(e: &GaloisExtension) -> Result<RamificationData> {
    let i = compute_ig(e)?;
    let n = e.degree();
    let ee = e.e();
    let inertia: Vec<usize> = (0..n).filter(|&s| i[s].is_none_or(|v| v >= 1)).collect();
    let mut d = vec![vec![None; n]; ee as usize + 1];
    let mut s_tab = vec![None; n];
    for s in 1..n {
        if !inertia.contains(&s) {
            s_tab[s] = Some(0);
            for (m, row) in d.iter_mut().enumerate() {
                row[s] = Some(m as i64);
            }
            continue;
        }
        for m in 0..ee {
            d[m as usize][s] = Some(compute_d(e, s, m)?);
        }
        d[ee as usize][s] = d[0][s].map(|v| v + ee as i64);
        let sv = (0..ee).map(|m| d[m as usize][s].unwrap() - m as i64).min().unwrap();
        let iv = i[s].unwrap();
        if d[0][s] != Some(iv) {
            return Err(Error::AssertionFailed(format!("d_0(σ_{s}) = {:?} differs from i_G = {iv}", d[0][s])));
        }
        if sv != iv && sv != iv - 1 {
            return Err(Error::AssertionFailed(format!("s_G(σ_{s}) = {sv} is not i_G or i_G − 1 (i_G = {iv})")));
        }
        s_tab[s] = Some(sv);
    }
    Ok(RamificationData { i, s: s_tab, d, inertia, e: ee, f_res: e.f_res() })
}

/// All filtrations derived from the tables.
#[derive(Debug, Clone, PartialEq)]
pub struct Filtrations {
    /// G_0, G_1, … up to and including the first trivial group.
    pub lower: Vec<Vec<usize>>,
    /// H_0, H_1, … on the same range plus one.
    pub shifted: Vec<Vec<usize>>,
    /// grid[n][m] = G_{n,m} for n ∈ [0, last jump + 2], m ∈ [0, e].
    pub grid: Vec<Vec<Vec<usize>>>,
    /// G[0], G[1], … up to and including the first trivial group.
    pub modified: Vec<Vec<usize>>,
    pub jumps: Vec<i64>,
    pub upper_jumps: Vec<Q>,
}

fn select(n: usize, pred: impl Fn(usize) -> bool) -> Vec<usize> {
    (0..n).filter(|&s| pred(s)).collect()
}

fn at_least(v: Option<i64>, b: i64) -> bool {
    v.is_none_or(|x| x >= b)
}

pub fn filtrations(r: &RamificationData) -> Filtrations {
    let n = r.order();
    let top = r.max_i();
    let lower: Vec<Vec<usize>> = (0..=top).map(|k| select(n, |s| at_least(r.i[s], k + 1))).collect();
    let grid_n = top + 2;
    let grid: Vec<Vec<Vec<usize>>> = (0..=grid_n)
        .map(|k| (0..=r.e as usize).map(|m| select(n, |s| at_least(r.d[m][s], k + m as i64))).collect())
        .collect();
    let shifted: Vec<Vec<usize>> = (0..=top + 1).map(|k| select(n, |s| at_least(r.d[1][s], k + 1))).collect();
    let modified: Vec<Vec<usize>> = (0..=top + 1).map(|t| select(n, |s| at_least(r.i[s], t))).collect();
    let mut jumps: Vec<i64> = r.i.iter().flatten().copied().filter(|&v| v >= 1).collect();
    jumps.sort_unstable();
    jumps.dedup();
    let h = HerbrandFunction::from_data(r);
    let upper_jumps = jumps.iter().map(|&j| h.eval(Q::from_integer(j))).collect();
    Filtrations { lower, shifted, grid, modified, jumps, upper_jumps }
}

#[cfg(test)]
mod tests;
