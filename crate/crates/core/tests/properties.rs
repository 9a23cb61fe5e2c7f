//! Property tests for the arithmetic layers and the ramification and
//! conductor formulas.

use num_rational::Ratio;
use proptest::prelude::*;
use ramify_core::cdvf::padic::PAdicField;
use ramify_core::cdvf::{newton_polygon, LocalField, PrecisionPolicy};
use ramify_core::coeffield::{Field, FiniteField, ResidueField};
use ramify_core::conductor::{case3_closed_forms, swan_conductor, Character};
use ramify_core::extension::group::{self, GroupSpec};
use ramify_core::extension::Table;
use ramify_core::ramfilt::herbrand::sfun_sum;
use ramify_core::ramfilt::{classical_phi, HerbrandFunction, RamificationData};
use ramify_core::Error;

type Q = Ratio<i64>;

fn cyclic(n: usize) -> Table {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// ℤ/a_1 × ℤ/a_2 × … with mixed-radix indices.
fn product(factors: &[usize]) -> Table {
    let n: usize = factors.iter().product();
    let digits = |mut x: usize| {
        factors
            .iter()
            .map(|&f| {
                let d = x % f;
                x /= f;
                d
            })
            .collect::<Vec<_>>()
    };
    let index = |ds: &[usize]| ds.iter().zip(factors).rev().fold(0, |acc, (&d, &f)| acc * f + d);
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let s: Vec<usize> = digits(a).iter().zip(digits(b)).zip(factors).map(|((x, y), f)| (x + y) % f).collect();
                    index(&s)
                })
                .collect()
        })
        .collect()
}

/// Ramification numbers of a cyclic group of order p^k whose i_G depends
/// only on v_p of the exponent, increasing with it.
fn cyclic_data(p: u64, steps: &[i64], e: u64) -> RamificationData {
    let k = steps.len() as u32;
    let n = p.pow(k) as usize;
    let mut levels = Vec::new();
    let mut acc = 0;
    for s in steps {
        acc += s;
        levels.push(acc);
    }
    let i: Vec<Option<i64>> = (0..n)
        .map(|a| {
            if a == 0 {
                return None;
            }
            let mut v = 0;
            let mut x = a as u64;
            while x.is_multiple_of(p) {
                x /= p;
                v += 1;
            }
            Some(levels[v])
        })
        .collect();
    RamificationData { s: i.clone(), i, d: Vec::new(), inertia: (0..n).collect(), e, f_res: 1 }
}

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

proptest! {
    #[test]
    fn sfun_is_increasing_and_invertible(orders in prop::collection::vec(1i64..9, 0..6), e in 1i64..6, num in 0i64..200) {
        let mut orders = orders;
        orders.sort_unstable_by(|a, b| b.cmp(a));
        let h = HerbrandFunction::new(e, orders);
        let u = q(num, 7);
        let v = h.eval(u);
        prop_assert_eq!(h.inverse(v), u);
        prop_assert!(h.eval(u + q(1, 3)) > v);
    }

    #[test]
    fn closed_form_matches_min_sum(p in prop::sample::select(vec![2u64, 3]), steps in prop::collection::vec(1i64..5, 1..3), e in 1u64..5, num in 0i64..300) {
        let r = cyclic_data(p, &steps, e);
        let u = q(num, 11);
        prop_assert_eq!(HerbrandFunction::from_data(&r).eval(u), sfun_sum(&r, u));
    }

    #[test]
    fn sfun_is_shifted_phi_when_totally_ramified(p in prop::sample::select(vec![2u64, 3]), steps in prop::collection::vec(1i64..5, 1..3), num in 0i64..300) {
        let n = p.pow(steps.len() as u32);
        let r = cyclic_data(p, &steps, n);
        let u = q(num, 13);
        let one = q(1, 1);
        prop_assert_eq!(HerbrandFunction::from_data(&r).eval(u), one + classical_phi(&r, u - one));
    }

    #[test]
    fn swan_conductor_is_a_character_pairing(p in prop::sample::select(vec![2u64, 3]), steps in prop::collection::vec(1i64..5, 1..3), j in 0u64..27) {
        let r = cyclic_data(p, &steps, 1);
        let n = r.order();
        let t = cyclic(n);
        let chi = Character::new(&t, (0..n as u64).map(|a| a * j).collect(), n as u64).unwrap();
        // S_m = ⟨ρ^{p^v}⟩ for m in (level_{v−1}, level_v], and χ is
        // non-trivial there exactly for v below the kernel level
        let kernel_level = (0..).find(|&l| (j * p.pow(l)) % n as u64 == 0).unwrap();
        let k = steps.len() as u32;
        let mut expected = q(0, 1);
        for (v, &width) in steps.iter().enumerate().take(kernel_level as usize) {
            let size = p.pow(k - v as u32) as i64;
            expected += q(width * size, n as i64);
        }
        prop_assert_eq!(swan_conductor(&r, &chi).unwrap(), expected);
    }

    #[test]
    fn dual_group_has_full_order(factors in prop::collection::vec(prop::sample::select(vec![2usize, 4, 8]), 1..3)) {
        let t = product(&factors);
        group::verify_group(&t).unwrap();
        let all = Character::all(&t).unwrap();
        prop_assert_eq!(all.len(), t.len());
        for c in &all {
            let ker = c.kernel();
            prop_assert_eq!(group::closure(&t, &ker), ker.clone());
            prop_assert_eq!(t.len() as u64 / ker.len() as u64, c.order());
        }
    }

    #[test]
    fn group_spec_round_trips(factors in prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 9]), 1..4)) {
        let spec = GroupSpec::Product(factors);
        prop_assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn closed_forms_never_reach_equality(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), k in 1u64..30) {
        let e = p * (p - 1) * k;
        let c = case3_closed_forms(p, e).unwrap();
        prop_assert!(c.ksw.is_integer() && c.j2.is_integer());
        prop_assert!(c.lhs3 < c.d);
        prop_assert!(c.lhs3_differs);
        // ksw = j(1) and the first Hyodo sum is (p − 1)(j(1)/p + j(2)/p²)
        let pq = q(p as i64, 1);
        prop_assert_eq!(c.lhs3, (pq - 1) * (c.ksw / pq + c.j2 / (pq * pq)));
    }

    #[test]
    fn closed_forms_refuse_non_integral(p in prop::sample::select(vec![3u64, 5, 7]), e in 1u64..200) {
        prop_assume!(e % (p * (p - 1)) != 0);
        let refused = matches!(case3_closed_forms(p, e), Err(Error::NonIntegralInstance { .. }));
        prop_assert!(refused);
    }

    #[test]
    fn series_valuations_add(a in prop::collection::vec(0i64..5, 1..6), b in prop::collection::vec(0i64..5, 1..6), sa in -5i64..5, sb in -5i64..5) {
        let rf = ResidueField::finite(5, 1).unwrap();
        let k = LocalField::equal_char(rf.clone(), "t", PrecisionPolicy::default());
        let mk = |c: &[i64], s: i64| k.series(c.iter().enumerate().map(|(j, &x)| (s + j as i64, rf.from_int(x))).collect()).unwrap();
        prop_assume!(a[0] != 0 && b[0] != 0);
        let (x, y) = (mk(&a, sa), mk(&b, sb));
        prop_assert_eq!(k.val(&k.mul(&x, &y)).unwrap(), sa + sb);
        let back = k.mul(&k.div(&x, &y).unwrap(), &y);
        prop_assert!(k.is_zero(&k.sub(&back, &x)));
    }

    #[test]
    fn padic_inverse_round_trips(n in 1i64..100_000, p in prop::sample::select(vec![2u64, 3, 5])) {
        let k = LocalField::padic(PAdicField::rational(p, 64).unwrap(), PrecisionPolicy::default()).unwrap();
        let x = k.from_int(n);
        let mut m = n;
        let mut v = 0;
        while m % p as i64 == 0 { m /= p as i64; v += 1; }
        prop_assert_eq!(k.val(&x).unwrap(), v);
        let one = k.mul(&x, &k.inv(&x).unwrap());
        prop_assert!(k.is_zero(&k.sub(&one, &k.one())));
    }

    #[test]
    fn newton_polygon_reads_root_valuations(vals in prop::collection::vec(0i64..6, 1..4)) {
        let rf = ResidueField::finite(3, 1).unwrap();
        let k = LocalField::equal_char(rf, "t", PrecisionPolicy::default());
        let t = k.uniformizer();
        // f = Π (X − t^{v_i}(1 + t))
        let mut f = vec![k.one()];
        for &v in &vals {
            let root = k.mul(&k.pow(&t, v as u64), &k.add(&k.one(), &t));
            let mut g = vec![k.zero(); f.len() + 1];
            for (i, c) in f.iter().enumerate() {
                g[i + 1] = k.add(&g[i + 1], c);
                g[i] = k.sub(&g[i], &k.mul(c, &root));
            }
            f = g;
        }
        let mut expected: Vec<(Q, usize)> = Vec::new();
        let mut sorted = vals.clone();
        sorted.sort_unstable();
        for v in sorted {
            match expected.last_mut() {
                Some((w, m)) if *w == q(v, 1) => *m += 1,
                _ => expected.push((q(v, 1), 1)),
            }
        }
        prop_assert_eq!(newton_polygon(&k, &f).unwrap(), expected);
    }
}

#[test]
fn finite_field_sanity() {
    assert!(FiniteField::new(4, 1).is_err());
}
