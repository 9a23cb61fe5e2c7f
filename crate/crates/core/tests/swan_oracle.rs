//! sw(χ) by the subgroup-strata method against the character pairing
//! (1/|G|)·Σ Sw_G(σ)χ(σ), evaluated exactly in ℤ[ζ_m] = ℤ[X]/Φ_m for m = p^k.

use num_rational::Ratio;
use ramify_core::analysis::analyze_catalog;
use ramify_core::cdvf::PrecisionPolicy;
use ramify_core::conductor::swan_conductor;
use ramify_core::ramfilt::RamificationData;

/// Coefficients of X^a reduced modulo Φ_{p^k}(X) = Σ_{j<p} X^{j·p^{k−1}}.
fn zeta_power(a: u64, p: u64, m: u64) -> Vec<i64> {
    if m == 1 {
        return vec![1];
    }
    let q = m / p;
    let deg = (m - q) as usize;
    let mut v = vec![0i64; m as usize];
    v[(a % m) as usize] = 1;
    // X^{(p−1)q + r} = −Σ_{j<p−1} X^{jq + r}
    for top in (deg..m as usize).rev() {
        let c = v[top];
        if c != 0 {
            v[top] = 0;
            let r = top - deg;
            for j in 0..(p - 1) as usize {
                v[j * q as usize + r] -= c;
            }
        }
    }
    v.truncate(deg);
    v
}

fn pairing(r: &RamificationData, values: &[u64], modulus: u64, p: u64) -> Ratio<i64> {
    let f = r.f_res as i64;
    let sw_of = |s: usize| -> i64 {
        if !r.inertia.contains(&s) {
            return 0;
        }
        -f * r.s[s].unwrap()
    };
    let mut total = vec![0i64; zeta_power(0, p, modulus).len()];
    let mut sw_one = 0;
    for s in 1..r.order() {
        let w = sw_of(s);
        sw_one -= w;
        for (t, c) in total.iter_mut().zip(zeta_power(values[s], p, modulus)) {
            *t += w * c;
        }
    }
    total[0] += sw_one;
    assert!(total[1..].iter().all(|&c| c == 0), "pairing is not rational: {total:?}");
    Ratio::new(total[0], r.order() as i64)
}

#[test]
fn cyclotomic_reduction() {
    // ζ_4² = −1, ζ_4³ = −ζ_4, ζ_9^6 = −1 − ζ_9^3
    assert_eq!(zeta_power(2, 2, 4), vec![-1, 0]);
    assert_eq!(zeta_power(3, 2, 4), vec![0, -1]);
    assert_eq!(zeta_power(6, 3, 9), vec![-1, 0, 0, -1, 0, 0]);
}

#[test]
fn strata_method_matches_the_pairing() {
    let mut seen = 0;
    for (name, a) in analyze_catalog(PrecisionPolicy::default()) {
        let a = a.unwrap();
        let p = a.ext.p();
        for row in &a.characters {
            let c = &row.character;
            let direct = pairing(&a.data, &c.values, c.modulus, p);
            assert_eq!(swan_conductor(&a.data, c).unwrap(), direct, "{name} χ = {:?}", c.values);
            seen += 1;
        }
    }
    assert!(seen >= 30);
}
