use super::{LocalElem, LocalField};
use crate::error::{Error, Result};

/// Solve A·x = b over K by Gaussian elimination with full pivoting on the
/// smallest certified valuation. A has at least as many rows as columns;
/// surplus rows must reduce to zero at precision.
pub fn solve(k: &LocalField, mut a: Vec<Vec<LocalElem>>, mut b: Vec<LocalElem>) -> Result<Vec<LocalElem>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    if rows < cols || b.len() != rows {
        return Err(Error::DegreeMismatch(format!("{rows}x{cols} system with {} right-hand sides", b.len())));
    }
    let mut perm: Vec<usize> = (0..cols).collect();
    for s in 0..cols {
        let mut best: Option<(i64, usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(s) {
            for (c, x) in row.iter().enumerate().skip(s) {
                if k.is_zero(x) {
                    continue;
                }
                let v = k.val(x)?;
                if best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, r, c));
                }
            }
        }
        let Some((_, r, c)) = best else {
            return Err(Error::exhausted("linear system is singular at the working precision"));
        };
        a.swap(s, r);
        b.swap(s, r);
        for row in a.iter_mut() {
            row.swap(s, c);
        }
        perm.swap(s, c);
        let pinv = k.inv(&a[s][s])?;
        for r in s + 1..rows {
            if k.is_zero(&a[r][s]) {
                continue;
            }
            let factor = k.mul(&a[r][s], &pinv);
            for c in s..cols {
                let t = k.mul(&factor, &a[s][c]);
                a[r][c] = k.sub(&a[r][c], &t);
            }
            let t = k.mul(&factor, &b[s]);
            b[r] = k.sub(&b[r], &t);
        }
    }
    for r in cols..rows {
        if !k.is_zero(&b[r]) && k.val(&b[r]).is_ok() {
            return Err(Error::AssertionFailed("inconsistent linear system".into()));
        }
    }
    let mut y = vec![k.zero(); cols];
    for s in (0..cols).rev() {
        let mut acc = b[s].clone();
        for c in s + 1..cols {
            acc = k.sub(&acc, &k.mul(&a[s][c], &y[c]));
        }
        y[s] = k.div(&acc, &a[s][s])?;
    }
    let mut x = vec![k.zero(); cols];
    for (s, &c) in perm.iter().enumerate() {
        x[c] = y[s].clone();
    }
    Ok(x)
}
