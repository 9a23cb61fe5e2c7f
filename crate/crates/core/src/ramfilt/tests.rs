use super::*;
use crate::extension::CaseLabel;

#[test]
fn flagship_tables() {
    let e = crate::extension::tests::e4();
    let r = compute(&e).unwrap();
    assert_eq!(r.i, vec![None, Some(2), Some(4), Some(2)]);
    assert_eq!(r.s, vec![None, Some(2), Some(4), Some(2)]);
    assert_eq!(r.d[1][1], Some(3));
    let f = filtrations(&r);
    assert_eq!(f.jumps, vec![2, 4]);
    assert_eq!(f.upper_jumps, vec![Q::from(4), Q::from(6)]);
    let orders: Vec<usize> = f.modified[1..5].iter().map(|g| g.len()).collect();
    assert_eq!(orders, vec![4, 4, 2, 2]);
    let qs = checks::quotients(&e).unwrap();
    let v = well_ramified_verdict(&e, &r, &qs).unwrap();
    assert_eq!(v.hilbert, Hilbert { different: 8, sum_i: 8, sum_lower: 8, holds: true });
    assert!(v.well_ramified);
    let mid = qs.iter().find(|q| q.subgroup == vec![0, 2]).unwrap();
    assert_eq!(mid.data.i[1], Some(4));
    assert_eq!(mid.e_top, 1);
    assert_eq!(classify_case(&e, &Ok(v)).unwrap(), CaseLabel::CaseIII);
    let tower = tower_decomposition(&e, &qs).unwrap();
    assert_eq!((tower.subgroup.clone(), tower.bottom, tower.top), (vec![0, 2], "I", "II"));
    for q in &qs {
        assert!(checks::lemma4(&r, q));
        for (_, l, rhs) in checks::lemma3(&r, q) {
            assert_eq!(Q::from(l), rhs);
        }
    }
    assert!(checks::case_filtration_identity(&r, CaseLabel::CaseIII));
    assert_eq!(checks::monotone_along_powers(&e, &r, 2), Some(true));
}
