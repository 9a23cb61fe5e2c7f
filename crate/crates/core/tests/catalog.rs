use num_rational::Ratio;
use ramify_core::analysis::{analyze_catalog, analyze_doc, Analysis};
use ramify_core::cdvf::PrecisionPolicy;
use ramify_core::catalog;
use ramify_core::extension::CaseLabel;
use ramify_core::report;
use ramify_core::suites::{run, Suite};

type Q = Ratio<i64>;

fn analysis(name: &str) -> Analysis {
    analyze_doc(&catalog::get(name).unwrap().doc, PrecisionPolicy::default()).unwrap()
}

struct Expect {
    name: &'static str,
    case: CaseLabel,
    inv: (u64, u64, u64),
    i: &'static [i64],
    ksw: i64,
    sw: Q,
    d_k: Q,
    different: i64,
}

// Artin–Schreier x^p − x = t^{-n} (p ∤ n) has its lower jump at n, so
// i_G = n + 1, ksw = sw = n and v_L(𝔇) = (p − 1)(n + 1).
fn expectations() -> Vec<Expect> {
    use CaseLabel::*;
    let q = |n, d| Q::new(n, d);
    vec![
        Expect { name: "e1_as_p3_n1", case: CaseI, inv: (3, 1, 1), i: &[2, 2], ksw: 1, sw: q(1, 1), d_k: q(2, 3), different: 4 },
        Expect { name: "e1_as_p3_n2", case: CaseI, inv: (3, 1, 1), i: &[3, 3], ksw: 2, sw: q(2, 1), d_k: q(4, 3), different: 6 },
        Expect { name: "e1_as_p3_n4", case: CaseI, inv: (3, 1, 1), i: &[5, 5], ksw: 4, sw: q(4, 1), d_k: q(8, 3), different: 10 },
        Expect { name: "e1_as_p2_n1", case: CaseI, inv: (2, 1, 1), i: &[2], ksw: 1, sw: q(1, 1), d_k: q(1, 2), different: 2 },
        Expect { name: "e1_as_p2_n3", case: CaseI, inv: (2, 1, 1), i: &[4], ksw: 3, sw: q(3, 1), d_k: q(3, 2), different: 4 },
        Expect { name: "e1_as_p2_n5", case: CaseI, inv: (2, 1, 1), i: &[6], ksw: 5, sw: q(5, 1), d_k: q(5, 2), different: 6 },
        Expect { name: "e2_case2_p3", case: CaseII, inv: (1, 1, 3), i: &[1, 1], ksw: 3, sw: q(3, 1), d_k: q(2, 1), different: 2 },
        Expect { name: "e2_case2_p2", case: CaseII, inv: (1, 1, 2), i: &[1], ksw: 2, sw: q(2, 1), d_k: q(1, 1), different: 1 },
        Expect { name: "e3_cyclotomic", case: CaseI, inv: (3, 1, 1), i: &[3, 3], ksw: 2, sw: q(2, 1), d_k: q(4, 3), different: 6 },
        Expect { name: "e4_case3", case: CaseIII, inv: (2, 1, 2), i: &[2, 4, 2], ksw: 5, sw: q(6, 1), d_k: q(7, 2), different: 8 },
        Expect { name: "e4_floor_bottom", case: CaseI, inv: (2, 1, 1), i: &[4], ksw: 3, sw: q(3, 1), d_k: q(3, 2), different: 4 },
        Expect { name: "e4_floor_top", case: CaseII, inv: (1, 1, 2), i: &[4], ksw: 8, sw: q(8, 1), d_k: q(4, 1), different: 4 },
    ]
}

#[test]
fn catalog_values() {
    let results = analyze_catalog(PrecisionPolicy::default());
    let exp = expectations();
    assert_eq!(results.len(), exp.len());
    for ((name, a), x) in results.into_iter().zip(exp) {
        assert_eq!(name, x.name);
        let a = a.unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(a.label, x.case, "{name}");
        assert_eq!(a.ext.ext_invariants(), x.inv, "{name}");
        let i: Vec<i64> = a.data.i.iter().skip(1).map(|v| v.unwrap()).collect();
        assert_eq!(i, x.i, "{name}");
        let c = a.conductor.as_ref().unwrap();
        assert_eq!((c.ksw, c.sw), (x.ksw, x.sw), "{name}");
        assert_eq!(a.depth.as_ref().unwrap().d_k, x.d_k, "{name}");
        assert_eq!(a.verdict.hilbert.different, x.different, "{name}");
    }
}

#[test]
fn every_suite_passes_on_the_catalog() {
    for (name, a) in analyze_catalog(PrecisionPolicy::default()) {
        let a = a.unwrap();
        for item in run(Suite::All, &a) {
            assert!(item.passed(), "{name}: {} expected {} got {}", item.key(), item.expected, item.got);
        }
    }
}

#[test]
fn depth_adds_along_the_flagship_tower() {
    let whole = analysis("e4_case3");
    let bottom = analysis("e4_floor_bottom");
    let top = analysis("e4_floor_top");
    let e_bottom = bottom.ext.e() as i64;
    let d = |a: &Analysis| a.depth.as_ref().unwrap().d_k;
    // the top floor's depth is measured with the valuation of T
    assert_eq!(d(&whole), d(&bottom) + d(&top) / e_bottom);
}

#[test]
fn floors_match_the_quotient_route() {
    let whole = analysis("e4_case3");
    let bottom = analysis("e4_floor_bottom");
    let t = whole.tower.as_ref().unwrap();
    let q = &whole.quotients[t.quotient];
    assert_eq!(q.data.i, bottom.data.i);
    assert_eq!(q.fixed.ext.ext_invariants(), bottom.ext.ext_invariants());
    let chi2 = whole.chi.as_ref().unwrap().power(2);
    let row = whole.characters.iter().find(|r| r.character.kernel() == chi2.kernel() && !r.character.is_trivial()).unwrap();
    assert_eq!(row.ksw, Some(bottom.conductor.as_ref().unwrap().ksw));
}

/// Reports without the sections that legitimately depend on the policy.
fn invariants(name: &str, policy: PrecisionPolicy) -> serde_json::Value {
    let doc = catalog::get(name).unwrap().doc;
    let a = analyze_doc(&doc, policy).unwrap();
    let mut r = report::document(&a, &doc, &policy);
    r.as_object_mut().unwrap().remove("precision");
    r
}

#[test]
fn doubling_precision_changes_nothing() {
    let base = PrecisionPolicy::default();
    for e in catalog::entries() {
        assert_eq!(invariants(e.name, base), invariants(e.name, base.doubled()), "{}", e.name);
    }
}

#[test]
fn starved_precision_fails_instead_of_lying() {
    let doc = catalog::get("e4_case3").unwrap().doc;
    let reference = invariants("e4_case3", PrecisionPolicy::default());
    for n in 1..=12 {
        let policy = PrecisionPolicy::uniform(n);
        match analyze_doc(&doc, policy) {
            Ok(a) => {
                let mut r = report::document(&a, &doc, &policy);
                r.as_object_mut().unwrap().remove("precision");
                assert_eq!(r, reference, "precision {n}");
            }
            Err(e) => assert!(e.is_precision(), "precision {n}: {e}"),
        }
    }
    assert!(analyze_doc(&doc, PrecisionPolicy::uniform(2)).unwrap_err().is_precision());
}

#[test]
fn reports_are_deterministic() {
    for e in catalog::entries() {
        let policy = PrecisionPolicy::default();
        let a = report::to_text(&report::document(&analyze_doc(&e.doc, policy).unwrap(), &e.doc, &policy));
        let b = report::to_text(&report::document(&analyze_doc(&e.doc, policy).unwrap(), &e.doc, &policy));
        assert_eq!(a, b);
    }
}
