//! The shipped example extensions, stored as JSON descriptions.

use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: &'static str,
    pub summary: &'static str,
    pub doc: Value,
}

/// Alternative names accepted by [`get`].
const ALIASES: &[(&str, &str)] = &[("e1_artin_schreier", "e1_as_p3_n2")];

fn laurent_finite(p: u64) -> Value {
    json!({"kind": "laurent", "var": "t", "residue": {"kind": "finite", "p": p, "r": 1}})
}

/// f = X^p − X − t^{-n} over 𝔽_p((t)) with the generator x^a·t^b.
fn artin_schreier(name: &str, p: u64, n: i64, clearing: (i64, i64)) -> Value {
    json!({
        "name": name,
        "base": laurent_finite(p),
        "var": "x",
        "minpoly": {"0": {(-n).to_string(): -1}, "1": -1, p.to_string(): 1},
        "action": "builtin:artin_schreier",
        "clearing": [clearing.0, clearing.1],
        "group": format!("cyclic:{p}"),
    })
}

/// f = X^p − X − u·t^{-p} over 𝔽_p(u)((t)), generator x·t.
fn ferocious(name: &str, p: u64) -> Value {
    json!({
        "name": name,
        "base": {"kind": "laurent", "var": "t", "residue": {"kind": "ratfun", "p": p, "vars": ["u"]}},
        "var": "x",
        "minpoly": {"0": {(-(p as i64)).to_string(): {"num": [[-1, 1]]}}, "1": -1, p.to_string(): 1},
        "action": "builtin:artin_schreier",
        "clearing": [1, 1],
        "group": format!("cyclic:{p}"),
    })
}

/// ℚ_2(i) with uniformizer π = i − 1, a root of X² + 2X + 2.
fn q2i() -> Value {
    json!({"kind": "padic", "p": 2, "steps": [{"type": "eisenstein", "poly": [2, 2, 1]}]})
}

fn e4_base() -> Value {
    json!({"kind": "mixed_tseries", "var": "T", "coeff": q2i()})
}

pub fn entries() -> Vec<Entry> {
    vec![
        Entry {
            name: "e1_as_p3_n1",
            summary: "x^3 - x = t^-1 over F_3((t)), case I, ksw 1",
            doc: artin_schreier("e1_as_p3_n1", 3, 1, (-1, 0)),
        },
        Entry {
            name: "e1_as_p3_n2",
            summary: "x^3 - x = t^-2 over F_3((t)), case I, ksw 2",
            doc: artin_schreier("e1_as_p3_n2", 3, 2, (1, 1)),
        },
        Entry {
            name: "e1_as_p3_n4",
            summary: "x^3 - x = t^-4 over F_3((t)), case I, ksw 4",
            doc: artin_schreier("e1_as_p3_n4", 3, 4, (-1, -1)),
        },
        Entry {
            name: "e1_as_p2_n1",
            summary: "x^2 - x = t^-1 over F_2((t)), case I, ksw 1",
            doc: artin_schreier("e1_as_p2_n1", 2, 1, (1, 1)),
        },
        Entry {
            name: "e1_as_p2_n3",
            summary: "x^2 - x = t^-3 over F_2((t)), case I, ksw 3",
            doc: artin_schreier("e1_as_p2_n3", 2, 3, (1, 2)),
        },
        Entry {
            name: "e1_as_p2_n5",
            summary: "x^2 - x = t^-5 over F_2((t)), case I, ksw 5",
            doc: artin_schreier("e1_as_p2_n5", 2, 5, (1, 3)),
        },
        Entry {
            name: "e2_case2_p3",
            summary: "x^3 - x = u t^-3 over F_3(u)((t)), ferociously ramified, case II",
            doc: ferocious("e2_case2_p3", 3),
        },
        Entry {
            name: "e2_case2_p2",
            summary: "x^2 - x = u t^-2 over F_2(u)((t)), ferociously ramified, case II",
            doc: ferocious("e2_case2_p2", 2),
        },
        Entry {
            name: "e3_cyclotomic",
            summary: "Q_3(zeta_9)/Q_3(zeta_3), case I",
            doc: json!({
                "name": "e3_cyclotomic",
                "base": {"kind": "padic", "p": 3, "steps": [{"type": "eisenstein", "poly": [3, 3, 1]}]},
                "var": "x",
                "minpoly": {"0": {"1": -1}, "1": 3, "2": 3, "3": 1},
                "action": "builtin:cyclotomic",
                "level": 2,
                "group": "cyclic:3",
            }),
        },
        Entry {
            name: "e4_case3",
            summary: "x^4 = (2+i) T^2 over Q_2(i){{T}}, case III",
            doc: json!({
                "name": "e4_case3",
                "base": e4_base(),
                "var": "x",
                "minpoly": {"0": {"2": {"0": -3, "1": -1}}, "4": 1},
                "action": "builtin:kummer",
                "zeta": {"0": {"0": 1, "1": 1}},
                "group": "cyclic:4",
            }),
        },
        Entry {
            name: "e4_floor_bottom",
            summary: "y^2 = (2+i) T^2 over Q_2(i){{T}}, lower floor of e4_case3",
            doc: json!({
                "name": "e4_floor_bottom",
                "base": e4_base(),
                "var": "y",
                "minpoly": {"0": {"2": {"0": -3, "1": -1}}, "2": 1},
                "action": "builtin:kummer",
                "zeta": -1,
                "group": "cyclic:2",
            }),
        },
        Entry {
            name: "e4_floor_top",
            summary: "x^2 = w T over Q_2(i, w){{T}} with w^2 = 2+i, upper floor of e4_case3",
            doc: json!({
                "name": "e4_floor_top",
                "base": {
                    "kind": "mixed_tseries",
                    "var": "T",
                    // z = w − 1 is a uniformizer of Q_2(i, w)
                    "coeff": {"kind": "padic", "p": 2, "steps": [{"type": "eisenstein", "poly": [2, -4, 2, 4, 1]}]},
                },
                "var": "x",
                "minpoly": {"0": {"1": {"0": -1, "1": -1}}, "2": 1},
                "action": "builtin:kummer",
                "zeta": -1,
                "group": "cyclic:2",
            }),
        },
    ]
}

pub fn get(name: &str) -> Result<Entry> {
    let name = ALIASES.iter().find(|(a, _)| *a == name).map_or(name, |(_, n)| *n);
    entries().into_iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Canonical text of an entry: pretty JSON with sorted keys and a final newline.
pub fn emit(name: &str) -> Result<String> {
    let e = get(name)?;
    Ok(canonical(&e.doc))
}

pub fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_emit_is_stable() {
        let all = entries();
        let mut names: Vec<&str> = all.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), all.len());
        assert!(all.len() >= 8);
        for e in &all {
            assert_eq!(e.doc["name"], e.name);
            let text = emit(e.name).unwrap();
            let back: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(canonical(&back), text);
        }
        assert_eq!(get("e1_artin_schreier").unwrap().name, "e1_as_p3_n2");
        assert!(matches!(get("nope"), Err(Error::UnknownName(_))));
    }
}
