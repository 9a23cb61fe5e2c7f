use super::*;
use crate::ramfilt::{checks, different_and_hilbert};

#[test]
fn flagship_conductors() {
    let e = crate::extension::tests::e4();
    let r = compute(&e).unwrap();
    let qs = checks::quotients(&e).unwrap();
    let chi = Character::faithful(e.table()).unwrap();
    let c = kato_conductor(&r, CaseLabel::CaseIII, &chi).unwrap();
    assert_eq!((c.sw, c.artin, c.ksw), (Q::from(6), Q::from(6), 5));
    let h = different_and_hilbert(&e, &r).unwrap();
    let d = depth(&r, &h, CaseLabel::CaseIII, c.ksw).unwrap();
    assert_eq!(d.d_k, Q::new(7, 2));
    assert_eq!(d.m, Q::from(1));
    let hy = hyodo_bounds(e.table(), &r, CaseLabel::CaseIII, &qs, 2, d.d_k).unwrap();
    assert_eq!(hy.j, vec![5, 3]);
    assert_eq!((hy.lower, hy.upper), (Q::new(13, 4), Q::from(4)));
    assert!(hy.lower_holds && hy.upper_holds && !hy.first_is_equality);
    let sp = spriano_bound(&r, &c, &d);
    assert_eq!(sp.theorem6_rhs, Q::new(11, 2));
    assert!(sp.star_slack >= 0 && sp.theorem6_slack >= Q::from(0));
    let cc = artin_via_compositum(&e, &r, &chi, c.ksw).unwrap();
    assert_eq!(cc.artin_lm, Q::from(6));
    assert!(cc.integral && cc.ksw_is_artin_minus_one);
}

#[test]
fn closed_form_family() {
    let c = case3_closed_forms(2, 2).unwrap();
    assert_eq!((c.ksw, c.j2, c.d, c.lhs3), (Q::from(5), Q::from(3), Q::new(7, 2), Q::new(13, 4)));
    let c = case3_closed_forms(3, 6).unwrap();
    assert_eq!((c.ksw, c.j2, c.d, c.lhs3), (Q::from(14), Q::from(8), Q::new(34, 3), Q::new(100, 9)));
    let c = case3_closed_forms(5, 20).unwrap();
    assert_eq!((c.ksw, c.j2, c.d, c.lhs3), (Q::from(44), Q::from(24), Q::new(196, 5), Q::new(976, 25)));
    assert!(matches!(case3_closed_forms(3, 3), Err(Error::NonIntegralInstance { .. })));
    assert!(matches!(case3_closed_forms(4, 12), Err(Error::NotPrime(4))));
}

#[test]
fn non_faithful_rejected() {
    let e = crate::extension::tests::e4();
    let r = compute(&e).unwrap();
    let chi = Character::faithful(e.table()).unwrap().power(2);
    assert_eq!(kato_conductor(&r, CaseLabel::CaseIII, &chi), Err(Error::NotFaithful));
}
