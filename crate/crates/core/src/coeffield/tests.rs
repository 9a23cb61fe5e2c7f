use proptest::prelude::*;

use super::mpoly::MPoly;
use super::*;

fn f(p: u64, r: usize) -> ResidueField {
    ResidueField::finite(p, r).unwrap()
}

fn ratfun(p: u64, vars: &[&str]) -> ResidueField {
    ResidueField::ratfun(FiniteField::new(p, 1).unwrap(), vars.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn poly(k: &ResidueField, coeffs: Vec<ResidueElem>) -> Vec<ResidueElem> {
    let mut c = coeffs;
    upoly::trim(k, &mut c);
    c
}

#[test]
fn small_field_identities() {
    let f3 = f(3, 1);
    assert_eq!(f3.inv(&f3.from_int(2)).unwrap(), f3.from_int(2));
    let k = ratfun(3, &["u"]);
    let u = k.generator(0).unwrap();
    assert_eq!(rf_arith(&k, RfOp::Mul, &u, Some(&k.inv(&u).unwrap())).unwrap(), k.one());
    let k2 = ratfun(2, &["T"]);
    let t = k2.generator(0).unwrap();
    assert!(k2.is_zero(&k2.add(&t, &t)));
    assert_eq!(rf_arith(&k2, RfOp::Inv, &k2.zero(), None), Err(Error::DivisionByZero));
    assert_eq!(rf_arith(&k2, RfOp::Add, &f3.one(), Some(&t)), Err(Error::FieldMismatch));
}

#[test]
fn pth_roots() {
    let f9 = f(3, 2);
    let g = f9.generator(0).unwrap();
    let r = f9.pth_root_test(&g).unwrap().unwrap();
    assert_eq!(f9.pow(&r, 3), g);

    let k2 = ratfun(2, &["T"]);
    assert_eq!(k2.pth_root_test(&k2.generator(0).unwrap()).unwrap(), None);

    let k3 = ratfun(3, &["u"]);
    let u = k3.generator(0).unwrap();
    let u3 = k3.pow(&u, 3);
    let den = k3.add(&k3.pow(&u, 6), &k3.from_int(2));
    let x = k3.mul(&u3, &k3.inv(&den).unwrap());
    let y = k3.pth_root_test(&x).unwrap().unwrap();
    assert_eq!(k3.pow(&y, 3), x);
}

#[test]
fn separable_split_examples() {
    let k2 = ratfun(2, &["T"]);
    let t = k2.generator(0).unwrap();
    let m = vec![k2.neg(&t), k2.zero(), k2.one()];
    let (ms, s) = separable_split(&k2, &m).unwrap();
    assert_eq!((ms.clone(), s), (vec![k2.neg(&t), k2.one()], 1));
    // oracle: m_sep coprime to its derivative
    let g = upoly::gcd(&k2, &ms, &upoly::derivative(&k2, &ms)).unwrap();
    assert_eq!(g, vec![k2.one()]);

    let f3 = f(3, 1);
    let m = vec![f3.from_int(-1), f3.from_int(-1), f3.zero(), f3.one()];
    assert_eq!(separable_split(&f3, &m).unwrap(), (m.clone(), 0));

    let k3 = ratfun(3, &["T"]);
    let t = k3.generator(0).unwrap();
    let mut m = vec![k3.zero(); 10];
    m[0] = k3.neg(&t);
    m[9] = k3.one();
    let (ms, s) = separable_split(&k3, &m).unwrap();
    assert_eq!((ms, s), (vec![k3.neg(&t), k3.one()], 2));

    let not_monic = vec![f3.one(), f3.from_int(2)];
    assert_eq!(separable_split(&f3, &not_monic), Err(Error::NotMonic));
}

#[test]
fn imperfection_degrees() {
    assert_eq!(f(5, 1).imperfection_degree(), 0);
    assert_eq!(ratfun(2, &["T"]).imperfection_degree(), 1);
    assert_eq!(ratfun(3, &["u", "v"]).imperfection_degree(), 2);
    assert!(matches!(
        ResidueField::ratfun(FiniteField::new(2, 1).unwrap(), vec!["a".into(), "b".into(), "c".into()]),
        Err(Error::UnsupportedImperfection(3))
    ));
}

#[test]
fn extension_construction_checks_irreducibility() {
    let k = ratfun(2, &["T"]);
    let t = k.generator(0).unwrap();
    let ok = SimpleExt::new(k.clone(), vec![k.neg(&t), k.zero(), k.one()], "a");
    assert!(ok.is_ok());
    let t2 = k.mul(&t, &t);
    let bad = SimpleExt::new(k.clone(), vec![k.neg(&t2), k.zero(), k.one()], "a");
    assert_eq!(bad.unwrap_err(), Error::NotIrreducible);
    let consts = SimpleExt::new(k.clone(), vec![k.one(), k.one(), k.one()], "w");
    assert!(consts.is_ok());
    let undecided = SimpleExt::new(k.clone(), vec![k.one(), t.clone(), k.one()], "w");
    assert!(matches!(undecided, Err(Error::IrreducibilityUndecided(_))));
    let f2 = f(2, 1);
    let red = SimpleExt::new(f2.clone(), vec![f2.one(), f2.zero(), f2.one()], "w");
    assert_eq!(red.unwrap_err(), Error::NotIrreducible);
}

#[test]
fn pth_roots_in_extensions() {
    // k = 𝔽_2(T)(a), a^2 = T: T is a square, a is not
    let k = ratfun(2, &["T"]);
    let t = k.generator(0).unwrap();
    let ext = ResidueField::ext(SimpleExt::new(k.clone(), vec![k.neg(&t), k.zero(), k.one()], "a").unwrap());
    let a = ext.generator(0).unwrap();
    let big_t = ext.embed(&t);
    let r = ext.pth_root_test(&big_t).unwrap().unwrap();
    assert_eq!(ext.mul(&r, &r), big_t);
    assert_eq!(ext.pth_root_test(&a).unwrap(), None);
    let a_plus_t = ext.add(&a, &big_t);
    let sq = ext.mul(&a_plus_t, &a_plus_t);
    let r = ext.pth_root_test(&sq).unwrap().unwrap();
    assert_eq!(ext.mul(&r, &r), sq);

    // finite extension of a finite field
    let f3 = f(3, 1);
    let e = ResidueField::ext(SimpleExt::new(f3.clone(), vec![f3.one(), f3.zero(), f3.one()], "w").unwrap());
    let w = e.generator(0).unwrap();
    let r = e.pth_root_test(&w).unwrap().unwrap();
    assert_eq!(e.pow(&r, 3), w);
}

#[test]
fn laurent_residue_roots() {
    let k = ResidueField::laurent(FiniteField::new(2, 1).unwrap(), "T", 16);
    let t = k.generator(0).unwrap();
    assert_eq!(k.pth_root_test(&t).unwrap(), None);
    let t2 = k.mul(&t, &t);
    assert_eq!(k.pth_root_test(&t2).unwrap(), Some(t.clone()));
    let x = k.add(&k.one(), &t);
    let y = k.inv(&x).unwrap();
    assert_eq!(k.mul(&x, &y), k.one().clone().and_prec(16));
}

impl ResidueElem {
    fn and_prec(self, p: i64) -> Self {
        match self {
            ResidueElem::Laurent(s) => ResidueElem::Laurent(Laurent { prec: Some(p), ..s }),
            other => other,
        }
    }
}

fn arb_fq(p: u64, r: usize) -> impl Strategy<Value = Fq> {
    prop::collection::vec(0..p, r)
}

fn arb_poly_u(p: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..p, 1..5)
}

fn ratfun_elem(k: &ResidueField, num: &[u64], den: &[u64]) -> Option<ResidueElem> {
    let ResidueField::RatFun(rf) = k else { unreachable!() };
    let fq = rf.fq();
    let to_poly = |c: &[u64]| MPoly::from_univariate(fq, &c.iter().map(|&x| vec![x]).collect::<Vec<_>>());
    let d = to_poly(den);
    if d.is_zero() {
        return None;
    }
    Some(ResidueElem::RatFun(rf.fraction(to_poly(num), d).ok()?))
}

proptest! {
    #[test]
    fn finite_field_inverse(x in arb_fq(3, 2)) {
        let k = f(3, 2);
        let x = ResidueElem::Fq(x);
        prop_assume!(!k.is_zero(&x));
        prop_assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
    }

    #[test]
    fn ratfun_inverse_and_roots(num in arb_poly_u(3), den in arb_poly_u(3)) {
        let k = ratfun(3, &["u"]);
        let Some(x) = ratfun_elem(&k, &num, &den) else { return Ok(()) };
        if !k.is_zero(&x) {
            prop_assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
        }
        let cube = k.pow(&x, 3);
        let root = k.pth_root_test(&cube).unwrap();
        prop_assert_eq!(root, Some(x.clone()));
        if let Some(y) = k.pth_root_test(&x).unwrap() {
            prop_assert_eq!(k.pow(&y, 3), x);
        }
    }

    #[test]
    fn separable_split_reconstitutes(coeffs in prop::collection::vec(0u64..2, 1..5), s in 0u32..3) {
        let k = f(2, 1);
        let mut sep: Vec<ResidueElem> = coeffs.iter().map(|&c| k.from_int(c as i64)).collect();
        sep.push(k.one());
        let step = 2usize.pow(s);
        let mut m = vec![k.zero(); (sep.len() - 1) * step + 1];
        for (i, c) in sep.iter().enumerate() {
            m[i * step] = c.clone();
        }
        let (ms, s2) = separable_split(&k, &m).unwrap();
        let step2 = 2usize.pow(s2);
        let mut back = vec![k.zero(); (ms.len() - 1) * step2 + 1];
        for (i, c) in ms.iter().enumerate() {
            back[i * step2] = c.clone();
        }
        prop_assert_eq!(poly(&k, back), poly(&k, m));
        prop_assert!(s2 >= s);
    }
}
