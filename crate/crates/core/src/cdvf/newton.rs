use num_rational::Ratio;

use super::{LocalElem, LocalField};
use crate::error::{Error, Result};

/// Newton polygon of Σ f_i X^i (lowest degree first).
///
/// Returns (root valuation, number of roots) per segment, root valuations
/// ascending. Coefficients vanishing at precision must provably lie on or
/// above the hull.
pub fn newton_polygon(k: &LocalField, f: &[LocalElem]) -> Result<Vec<(Ratio<i64>, usize)>> {
    let mut pts: Vec<(i64, i64)> = Vec::new();
    let mut unknown: Vec<(i64, i64)> = Vec::new();
    for (i, c) in f.iter().enumerate() {
        if k.is_exact_zero(c) {
            continue;
        }
        if k.is_zero(c) {
            unknown.push((i as i64, k.precision(c).unwrap_or(i64::MAX)));
        } else {
            pts.push((i as i64, k.val(c)?));
        }
    }
    if pts.len() < 2 {
        return Ok(Vec::new());
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &q in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b if it lies on or above the segment a..q
            if (b.1 - a.1) * (q.0 - a.0) >= (q.1 - a.1) * (b.0 - a.0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(q);
    }
    for &(i, bound) in &unknown {
        if i < hull[0].0 || i > hull[hull.len() - 1].0 {
            continue;
        }
        let seg = hull.windows(2).find(|w| w[0].0 <= i && i <= w[1].0).unwrap();
        let (a, b) = (seg[0], seg[1]);
        // hull height at i is a.1 + (b.1-a.1)(i-a.0)/(b.0-a.0)
        if bound * (b.0 - a.0) < a.1 * (b.0 - a.0) + (b.1 - a.1) * (i - a.0) {
            return Err(Error::exhausted(format!("coefficient {i} is unknown below the Newton polygon")));
        }
    }
    let mut out: Vec<(Ratio<i64>, usize)> = hull
        .windows(2)
        .map(|w| (Ratio::new(w[0].1 - w[1].1, w[1].0 - w[0].0), (w[1].0 - w[0].0) as usize))
        .collect();
    out.sort();
    Ok(out)
}

/// Refine an approximate root by Newton's method. Requires
/// v(f(x0)) > 2·v(f'(x0)).
pub fn hensel_root(k: &LocalField, f: &[LocalElem], x0: &LocalElem) -> Result<LocalElem> {
    let df = k.poly_derivative(f);
    let fx = k.poly_eval(f, x0);
    if k.is_zero(&fx) {
        return Ok(x0.clone());
    }
    let d = k.val(&k.poly_eval(&df, x0))?;
    let v = k.val(&fx)?;
    if v <= 2 * d {
        return Err(Error::HenselHypothesisFailed(format!("v(f(x0)) = {v}, v(f'(x0)) = {d}")));
    }
    let mut x = x0.clone();
    for _ in 0..64 {
        let fx = k.poly_eval(f, &x);
        if k.is_zero(&fx) {
            return Ok(x);
        }
        if let Some(p) = k.precision(&fx) {
            if k.valuation_unchecked(&fx).is_some_and(|v| v + k.policy().guard > p) {
                return Ok(x);
            }
        }
        let dfx = k.poly_eval(&df, &x);
        x = k.sub(&x, &k.div(&fx, &dfx)?);
    }
    Err(Error::exhausted("Newton iteration did not converge"))
}
