//! Compile a tower of Eisenstein extensions of ℚ_p into a single absolute
//! Eisenstein polynomial for the top uniformizer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Each step is an Eisenstein polynomial (lowest degree first, monic) whose
/// coefficients are integer polynomials in the previous step's uniformizer.
/// Returns the monic absolute minimal polynomial of the last uniformizer.
pub fn compile_eisenstein_tower(p: u64, steps: &[Vec<Vec<BigInt>>]) -> Result<Vec<BigInt>> {
    if steps.is_empty() {
        return Err(Error::invalid("tower", "empty tower"));
    }
    let dims: Vec<usize> = steps.iter().map(|s| s.len() - 1).collect();
    let total: usize = dims.iter().product();
    // strides[i] = product of dims below i
    let mut strides = vec![1usize; dims.len()];
    for i in 1..dims.len() {
        strides[i] = strides[i - 1] * dims[i - 1];
    }
    let zero = BigRational::zero();
    let mut mats: Vec<Vec<Vec<BigRational>>> = Vec::new();
    for (i, step) in steps.iter().enumerate() {
        let d = dims[i];
        if step.last().map(|c| c.len() == 1 && c[0] == BigInt::one()) != Some(true) {
            return Err(Error::invalid(format!("tower[{i}]"), "step polynomial must be monic"));
        }
        // column `b` of the matrix is π_i times basis vector b
        let mut m = vec![vec![zero.clone(); total]; total];
        for b in 0..total {
            let a_i = (b / strides[i]) % d;
            if a_i + 1 < d {
                m[b + strides[i]][b] = BigRational::one();
                continue;
            }
            let base = b - a_i * strides[i];
            for (j, coef) in step.iter().enumerate().take(d) {
                // −coef(π_{i−1}) · (basis vector with a_i = j)
                let mut v = vec![zero.clone(); total];
                v[base + j * strides[i]] = BigRational::one();
                let applied = apply_poly(&mats, i, coef, &v)?;
                for (r, val) in applied.into_iter().enumerate() {
                    m[r][b] -= val;
                }
            }
        }
        mats.push(m);
    }
    let charpoly = charpoly(mats.last().unwrap());
    let mut out = Vec::with_capacity(charpoly.len());
    for c in &charpoly {
        if !c.is_integer() {
            return Err(Error::invalid("tower", "absolute polynomial is not integral"));
        }
        out.push(c.to_integer());
    }
    let pb = BigInt::from(p);
    let n = out.len() - 1;
    let eisenstein = out[..n].iter().all(|c| (c % &pb).is_zero())
        && !(&out[0] % (&pb * &pb)).is_zero();
    if !eisenstein {
        return Err(Error::invalid("tower", "compiled polynomial is not Eisenstein"));
    }
    Ok(out)
}

/// coef(π_{i−1}) applied to v, where π_{i−1} acts through mats[i−1]; for the
/// first step the coefficient must be a constant.
fn apply_poly(mats: &[Vec<Vec<BigRational>>], i: usize, coef: &[BigInt], v: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut acc = vec![BigRational::zero(); v.len()];
    let mut cur = v.to_vec();
    for (k, c) in coef.iter().enumerate() {
        if k > 0 {
            if i == 0 {
                return Err(Error::invalid("tower[0]", "coefficients of the first step must be integers"));
            }
            cur = matvec(&mats[i - 1], &cur);
        }
        if !c.is_zero() {
            let cr = BigRational::from_integer(c.clone());
            for (a, x) in acc.iter_mut().zip(&cur) {
                *a += &cr * x;
            }
        }
    }
    Ok(acc)
}

fn matvec(m: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

/// Characteristic polynomial det(X − M), lowest degree first (Faddeev–LeVerrier).
fn charpoly(m: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = m.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let ident = |c: &BigRational| -> Vec<Vec<BigRational>> {
        (0..n).map(|i| (0..n).map(|j| if i == j { c.clone() } else { BigRational::zero() }).collect()).collect()
    };
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = M·M_{k−1} + c_{n−k+1} I
        let prev = mk.clone();
        let c_prev = coeffs[n - k + 1].clone();
        let shift = ident(&c_prev);
        mk = (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |acc, l| acc + &m[i][l] * &prev[l][j]) + &shift[i][j]).collect())
            .collect();
        let am: BigRational = (0..n).fold(BigRational::zero(), |acc, i| {
            acc + (0..n).fold(BigRational::zero(), |a, l| a + &m[i][l] * &mk[l][i])
        });
        coeffs[n - k] = -am / BigRational::from_integer(BigInt::from(k as i64));
    }
    coeffs
}
