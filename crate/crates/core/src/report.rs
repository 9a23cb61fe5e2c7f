//! The JSON report document and its plain-text rendering.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::analysis::Analysis;
use crate::cdvf::PrecisionPolicy;
use crate::ramfilt::{HerbrandFunction, Q};
use crate::suites::{run, Status, Suite};

pub const SCHEMA: &str = "ramify/1";

pub fn rational(q: Q) -> Value {
    json!({"num": *q.numer(), "den": *q.denom()})
}

fn rationals(qs: &[Q]) -> Value {
    Value::Array(qs.iter().map(|&q| rational(q)).collect())
}

fn per_element(v: &[Option<i64>]) -> Value {
    let mut m = Map::new();
    for (s, x) in v.iter().enumerate() {
        m.insert(s.to_string(), x.map_or(json!("inf"), |y| json!(y)));
    }
    Value::Object(m)
}

/// sha256 of the canonical (sorted-key, compact) form of the input document.
pub fn digest(doc: &Value) -> String {
    let text = serde_json::to_string(doc).expect("JSON values always serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn filtration_section(a: &Analysis) -> Value {
    let f = &a.filtrations;
    let h = HerbrandFunction::from_data(&a.data);
    let breaks: Vec<Value> = h.breaks().into_iter().map(|(u, v)| json!([rational(u), rational(v)])).collect();
    json!({
        "iG": per_element(&a.data.i),
        "sG": per_element(&a.data.s),
        "d": a.data.d.iter().map(|row| per_element(row)).collect::<Vec<_>>(),
        "lower": f.lower,
        "shifted": f.shifted,
        "grid": f.grid,
        "modified": f.modified,
        "sfun": {"breaks": breaks, "slopes": rationals(&h.slopes())},
        "jumps": f.jumps,
        "upper_jumps": rationals(&f.upper_jumps),
    })
}

fn conductor_section(a: &Analysis) -> Value {
    let characters: Vec<Value> = a
        .characters
        .iter()
        .map(|row| {
            json!({
                "values": row.character.values,
                "modulus": row.character.modulus,
                "order": row.character.order(),
                "sw": rational(row.sw),
                "artin": rational(row.artin),
                "ksw": row.ksw,
            })
        })
        .collect();
    let faithful = a.conductor.as_ref().map(|c| {
        json!({
            "sw": rational(c.sw),
            "artin": rational(c.artin),
            "ksw": c.ksw,
            "t": c.t,
            "sfun_t": rational(c.s_t),
            "ksw_via_sw": rational(c.via_sw),
            "ksw_via_sfun": rational(c.via_sfun),
        })
    });
    let compositum = a.compositum.as_ref().map(|c| {
        json!({
            "adjoined": c.root_var,
            "e_lm_over_l": c.e_lm_over_l,
            "i_pairs": c.i_pairs.iter().map(|(s, lm, lk)| json!({"sigma": s, "i_lm": lm, "i_lk": lk})).collect::<Vec<_>>(),
            "artin_lm": rational(c.artin_lm),
            "artin_lk": rational(c.artin_lk),
            "artin_integral": c.integral,
            "ksw_is_artin_minus_one": c.ksw_is_artin_minus_one,
        })
    });
    let mut out = json!({"characters": characters, "faithful": faithful, "compositum": compositum});
    if let Some(c) = &a.conductor {
        out["ksw"] = json!(c.ksw);
        out["sw"] = rational(c.sw);
        out["artin"] = rational(c.artin);
    }
    out
}

fn depth_section(a: &Analysis) -> Value {
    let Some(d) = &a.depth else { return Value::Null };
    let mut out = json!({
        "v_different": d.v_different,
        "d_k": rational(d.d_k),
        "d_l": rational(d.d_l),
        "sum_s": d.sum_s,
        "m": rational(d.m),
        "e_dk_closed_form": rational(d.closed_form),
        "e_ksw": rational(d.e_ksw),
        "e_ksw_relation_rhs": rational(d.ksw_relation_rhs),
        "relation_jump": d.jump,
    });
    if let Some(h) = &a.hyodo {
        out["hyodo"] = json!({
            "j": h.j,
            "classical": h.classical,
            "derived": h.derived,
            "lower": rational(h.lower),
            "upper": rational(h.upper),
            "lower_holds": h.lower_holds,
            "upper_holds": h.upper_holds,
            "first_is_equality": h.first_is_equality,
        });
    }
    if let Some(s) = &a.spriano {
        out["bounds"] = json!({
            "theorem6_rhs": rational(s.theorem6_rhs),
            "theorem6_slack": rational(s.theorem6_slack),
            "star_bound": s.star_bound,
            "star_slack": s.star_slack,
        });
    }
    out
}

fn checks_section(a: &Analysis) -> Value {
    let mut m = Map::new();
    for item in run(Suite::All, a) {
        let status = match item.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedStrict => "expected_strict",
        };
        m.insert(
            item.key(),
            json!({
                "holds": item.passed(),
                "status": status,
                "expected": item.expected,
                "got": item.got,
                "slack": item.slack.map(rational),
            }),
        );
    }
    Value::Object(m)
}

pub fn document(a: &Analysis, input: &Value, policy: &PrecisionPolicy) -> Value {
    let e = &a.ext;
    let (ee, fs, fi) = e.ext_invariants();
    let tower = a.tower.as_ref().map(|t| {
        json!({
            "subgroup": t.subgroup,
            "bottom": t.bottom,
            "top": t.top,
            "generator": a.quotients[t.quotient].fixed.candidate,
        })
    });
    let quotients: Vec<Value> = a
        .quotients
        .iter()
        .map(|q| {
            json!({
                "subgroup": q.subgroup,
                "generator": q.fixed.candidate,
                "degree": q.fixed.ext.degree(),
                "case": q.fixed.ext.residue_label().map(|l| l.to_string()),
                "iG": per_element(&q.data.i),
                "e_top": q.e_top,
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "tool": {"name": "ramify", "version": env!("CARGO_PKG_VERSION")},
        "input": {"name": input.get("name").cloned().unwrap_or(Value::Null), "sha256": digest(input)},
        "precision": {
            "series_window": policy.series_window,
            "padic_digits": policy.padic_digits,
            "guard": policy.guard,
        },
        "extension": {
            "p": e.p(),
            "degree": e.degree(),
            "group": e.group().to_string(),
            "e": ee,
            "f_sep": fs,
            "f_ins": fi,
            "case": a.label.to_string(),
            "maximal": e.is_maximal(),
            "generator_note": e.note(),
            "residue_factor_degree": e.residue_factor().len() - 1,
        },
        "ramification": filtration_section(a),
        "different": {
            "v_l": a.verdict.hilbert.different,
            "sum_i": a.verdict.hilbert.sum_i,
            "sum_lower": a.verdict.hilbert.sum_lower,
        },
        "well_ramified": {
            "hilbert": a.verdict.hilbert.holds,
            "herbrand": a.verdict.herbrand.iter().all(|h| h.holds),
            "verdict": a.verdict.well_ramified,
        },
        "tower": tower,
        "quotients": quotients,
        "conductors": conductor_section(a),
        "depth": depth_section(a),
        "checks": checks_section(a),
    })
}

/// Pretty JSON with sorted keys and a final newline.
pub fn to_text(v: &Value) -> String {
    crate::catalog::canonical(v)
}

fn show_q(v: &Value) -> String {
    match (v.get("num").and_then(Value::as_i64), v.get("den").and_then(Value::as_i64)) {
        (Some(n), Some(1)) => n.to_string(),
        (Some(n), Some(d)) => format!("{n}/{d}"),
        _ => "-".into(),
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Object(o) if o.contains_key("num") => show_q(v),
        Value::Array(a) => format!("[{}]", a.iter().map(show).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

/// A short human-readable summary of a report document.
pub fn table(doc: &Value) -> String {
    let mut rows: Vec<(String, String)> = Vec::new();
    let mut row = |k: &str, v: &Value| rows.push((k.to_string(), show(v)));
    row("name", &doc["input"]["name"]);
    for k in ["p", "degree", "group", "e", "f_sep", "f_ins", "case"] {
        row(k, &doc["extension"][k]);
    }
    row("iG", &Value::Array(doc["ramification"]["iG"].as_object().map(|o| o.values().cloned().collect()).unwrap_or_default()));
    row("jumps", &doc["ramification"]["jumps"]);
    row("upper jumps", &doc["ramification"]["upper_jumps"]);
    row("v_L(different)", &doc["different"]["v_l"]);
    row("well ramified", &doc["well_ramified"]["verdict"]);
    row("tower subgroup", &doc["tower"]["subgroup"]);
    row("sw", &doc["conductors"]["sw"]);
    row("artin", &doc["conductors"]["artin"]);
    row("ksw", &doc["conductors"]["ksw"]);
    row("d_K", &doc["depth"]["d_k"]);
    row("hyodo j", &doc["depth"]["hyodo"]["j"]);
    row("hyodo lower", &doc["depth"]["hyodo"]["lower"]);
    let checks = doc["checks"].as_object();
    let total = checks.map_or(0, |c| c.len());
    let failed = checks.map_or(0, |c| c.values().filter(|v| v["holds"] == Value::Bool(false)).count());
    rows.push(("checks".into(), format!("{} of {total} hold", total - failed)));
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}
