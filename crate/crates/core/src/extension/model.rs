use crate::cdvf::{LocalElem, LocalField};
use crate::error::{Error, Result};

/// Element of K[X]/(f) in the power basis 1, x, …, x^{n-1}.
pub type LElem = Vec<LocalElem>;

/// The ring K[X]/(f) for a monic f of degree n.
#[derive(Debug, Clone)]
pub struct Model {
    k: LocalField,
    f: Vec<LocalElem>,
}

impl Model {
    pub fn new(k: LocalField, f: Vec<LocalElem>) -> Result<Self> {
        if f.len() < 2 {
            return Err(Error::DegreeMismatch("minimal polynomial must have degree at least 1".into()));
        }
        let lead = f.last().unwrap();
        if !k.is_zero(&k.sub(lead, &k.one())) {
            return Err(Error::NotMonic);
        }
        let mut f = f;
        let n = f.len() - 1;
        f[n] = k.one();
        Ok(Model { k, f })
    }

    pub fn base(&self) -> &LocalField {
        &self.k
    }

    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    pub fn minpoly(&self) -> &[LocalElem] {
        &self.f
    }

    pub fn zero(&self) -> LElem {
        vec![self.k.zero(); self.degree()]
    }

    pub fn from_base(&self, a: &LocalElem) -> LElem {
        let mut y = self.zero();
        y[0] = a.clone();
        y
    }

    pub fn one(&self) -> LElem {
        self.from_base(&self.k.one())
    }

    /// The class of X.
    pub fn gen(&self) -> LElem {
        if self.degree() == 1 {
            return vec![self.k.neg(&self.f[0])];
        }
        let mut y = self.zero();
        y[1] = self.k.one();
        y
    }

    /// Reduce a polynomial in X of any degree.
    pub fn reduce(&self, mut c: Vec<LocalElem>) -> LElem {
        let k = &self.k;
        let n = self.degree();
        while c.len() > n {
            let top = c.pop().unwrap();
            if k.is_exact_zero(&top) {
                continue;
            }
            let shift = c.len() - n;
            for j in 0..n {
                let t = k.mul(&top, &self.f[j]);
                c[shift + j] = k.sub(&c[shift + j], &t);
            }
        }
        c.resize(n, k.zero());
        c
    }

    pub fn add(&self, a: &LElem, b: &LElem) -> LElem {
        a.iter().zip(b).map(|(x, y)| self.k.add(x, y)).collect()
    }

    pub fn neg(&self, a: &LElem) -> LElem {
        a.iter().map(|x| self.k.neg(x)).collect()
    }

    pub fn sub(&self, a: &LElem, b: &LElem) -> LElem {
        a.iter().zip(b).map(|(x, y)| self.k.sub(x, y)).collect()
    }

    pub fn scale(&self, c: &LocalElem, a: &LElem) -> LElem {
        a.iter().map(|x| self.k.mul(c, x)).collect()
    }

    pub fn mul(&self, a: &LElem, b: &LElem) -> LElem {
        let k = &self.k;
        let n = self.degree();
        let mut prod = vec![k.zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if k.is_exact_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if k.is_exact_zero(y) {
                    continue;
                }
                prod[i + j] = k.add(&prod[i + j], &k.mul(x, y));
            }
        }
        self.reduce(prod)
    }

    pub fn pow(&self, a: &LElem, mut e: u64) -> LElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Evaluate a polynomial with coefficients in K at y.
    pub fn eval(&self, poly: &[LocalElem], y: &LElem) -> LElem {
        let mut acc = self.zero();
        for c in poly.iter().rev() {
            acc = self.mul(&acc, y);
            acc[0] = self.k.add(&acc[0], c);
        }
        acc
    }

    /// Evaluate a polynomial with coefficients in L at y.
    pub fn eval_l(&self, poly: &[LElem], y: &LElem) -> LElem {
        let mut acc = self.zero();
        for c in poly.iter().rev() {
            acc = self.add(&self.mul(&acc, y), c);
        }
        acc
    }

    /// All coordinates vanish at their precision.
    pub fn is_zero(&self, a: &LElem) -> bool {
        a.iter().all(|c| self.k.is_zero(c))
    }

    /// The element as a scalar of K, if its higher coordinates vanish.
    pub fn as_base(&self, a: &LElem) -> Option<LocalElem> {
        if a[1..].iter().all(|c| self.k.is_zero(c)) {
            Some(a[0].clone())
        } else {
            None
        }
    }

    /// Truncate every coordinate to an absolute precision.
    pub fn truncate(&self, a: &LElem, prec: i64) -> LElem {
        a.iter().map(|c| self.k.truncate(c, prec)).collect()
    }

    /// Minimum certified v_K over the coordinates (None if all vanish).
    pub fn coord_val(&self, a: &LElem) -> Result<Option<i64>> {
        let mut best: Option<i64> = None;
        for c in a {
            if self.k.is_zero(c) {
                continue;
            }
            let v = self.k.val(c)?;
            best = Some(best.map_or(v, |b| b.min(v)));
        }
        Ok(best)
    }
}

/// Σ_i a_i X^i as coefficients of a product of monic linear factors
/// Π (X − r_i) computed in L.
pub fn product_of_linears(m: &Model, roots: &[LElem]) -> Vec<LElem> {
    let mut poly: Vec<LElem> = vec![m.one()];
    for r in roots {
        let mut next = vec![m.zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = m.add(&next[i + 1], c);
            next[i] = m.sub(&next[i], &m.mul(c, r));
        }
        poly = next;
    }
    poly
}
