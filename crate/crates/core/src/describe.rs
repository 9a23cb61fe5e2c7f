//! JSON extension descriptions.
//!
//! A description is a single JSON object:
//!
//! ```json
//! {
//!   "name": "e4_case3",
//!   "base": {"kind": "mixed_tseries", "var": "T",
//!            "coeff": {"kind": "padic", "p": 2, "steps": [{"type": "eisenstein", "poly": [2, 2, 1]}]}},
//!   "var": "x",
//!   "minpoly": {"0": {"2": {"0": -3, "1": -1}}, "4": 1},
//!   "action": "builtin:kummer",
//!   "zeta": {"0": {"0": 1, "1": 1}},
//!   "group": "cyclic:4"
//! }
//! ```
//!
//! Elements are sparse maps from exponents to coefficients: t-exponent to a
//! residue element over a Laurent base, π-exponent to an integer (or a list
//! of integers in the unramified generator) over a p-adic base, and
//! T-exponent to a p-adic element over a T-series base. A bare integer is
//! accepted anywhere an element is expected.

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::cdvf::padic::{PAdicElem, PAdicField};
use crate::cdvf::tower::compile_eisenstein_tower;
use crate::cdvf::{LocalElem, LocalField, PrecisionPolicy};
use crate::coeffield::mpoly::MPoly;
use crate::coeffield::{FiniteField, ResidueElem, ResidueField, SimpleExt};
use crate::error::{Error, Result};
use crate::extension::{build_extension, ActionSpec, ExtensionSpec, GaloisExtension, GroupSpec};

/// A parsed description, still carrying the document it came from.
#[derive(Debug, Clone)]
pub struct Description {
    pub name: Option<String>,
    pub doc: Value,
    pub spec: ExtensionSpec,
}

impl Description {
    pub fn build(&self) -> Result<GaloisExtension> {
        build_extension(&self.spec)
    }
}

/// Parse JSON text. Syntax errors are reported with line and column.
pub fn parse_str(text: &str, policy: PrecisionPolicy) -> Result<Description> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::invalid(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    parse_value(&doc, policy)
}

pub fn parse_value(doc: &Value, policy: PrecisionPolicy) -> Result<Description> {
    let obj = as_object(doc, "$")?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "name" | "base" | "var" | "minpoly" | "action" | "zeta" | "clearing" | "level" | "group") {
            return Err(Error::invalid(format!("$.{key}"), "unknown field"));
        }
    }
    let name = match obj.get("name") {
        None => None,
        Some(v) => Some(as_str(v, "$.name")?.to_string()),
    };
    let base = parse_base(field(obj, "base", "$")?, "$.base", policy)?;
    let var = match obj.get("var") {
        None => "x".to_string(),
        Some(v) => as_str(v, "$.var")?.to_string(),
    };
    let minpoly = parse_poly(&base, field(obj, "minpoly", "$")?, "$.minpoly")?;
    let group = GroupSpec::parse(as_str(field(obj, "group", "$")?, "$.group")?)
        .map_err(|e| Error::invalid("$.group", e.to_string()))?;
    let action = parse_action(&base, obj)?;
    Ok(Description { name, doc: doc.clone(), spec: ExtensionSpec { base, var, minpoly, action, group } })
}

fn parse_action(base: &LocalField, obj: &Map<String, Value>) -> Result<ActionSpec> {
    let a = field(obj, "action", "$")?;
    if let Some(o) = a.as_object() {
        let list = field(o, "explicit", "$.action")?;
        let arr = as_array(list, "$.action.explicit")?;
        let polys = arr
            .iter()
            .enumerate()
            .map(|(i, v)| parse_poly(base, v, &format!("$.action.explicit[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        return Ok(ActionSpec::Explicit(polys));
    }
    match as_str(a, "$.action")? {
        "builtin:kummer" => Ok(ActionSpec::Kummer { zeta: parse_elem(base, field(obj, "zeta", "$")?, "$.zeta")? }),
        "builtin:artin_schreier" => {
            let clearing = match obj.get("clearing") {
                None => None,
                Some(v) => {
                    let arr = as_array(v, "$.clearing")?;
                    if arr.len() != 2 {
                        return Err(Error::invalid("$.clearing", "expected [a, b]"));
                    }
                    Some((as_i64(&arr[0], "$.clearing[0]")?, as_i64(&arr[1], "$.clearing[1]")?))
                }
            };
            Ok(ActionSpec::ArtinSchreier { clearing })
        }
        "builtin:cyclotomic" => {
            let level = as_i64(field(obj, "level", "$")?, "$.level")?;
            if !(1..=16).contains(&level) {
                return Err(Error::invalid("$.level", "expected 1..=16"));
            }
            Ok(ActionSpec::Cyclotomic { level: level as u32 })
        }
        other => Err(Error::invalid("$.action", format!("unknown action {other:?}"))),
    }
}

fn parse_base(v: &Value, path: &str, policy: PrecisionPolicy) -> Result<LocalField> {
    let obj = as_object(v, path)?;
    match as_str(field(obj, "kind", path)?, &format!("{path}.kind"))? {
        "laurent" => {
            let residue = parse_residue(field(obj, "residue", path)?, &format!("{path}.residue"))?;
            let var = as_str(field(obj, "var", path)?, &format!("{path}.var"))?;
            Ok(LocalField::equal_char(residue, var, policy))
        }
        "padic" => LocalField::padic(parse_padic(obj, path)?, policy),
        "mixed_tseries" => {
            let cpath = format!("{path}.coeff");
            let coeff = as_object(field(obj, "coeff", path)?, &cpath)?;
            if as_str(field(coeff, "kind", &cpath)?, &format!("{cpath}.kind"))? != "padic" {
                return Err(Error::invalid(format!("{cpath}.kind"), "coefficients must be a padic field"));
            }
            let var = as_str(field(obj, "var", path)?, &format!("{path}.var"))?;
            LocalField::mixed(parse_padic(coeff, &cpath)?, var, policy)
        }
        other => Err(Error::invalid(format!("{path}.kind"), format!("unknown base kind {other:?}"))),
    }
}

/// One optional unramified step followed by Eisenstein steps. Several
/// Eisenstein steps are compiled into one absolute polynomial over ℚ_p.
fn parse_padic(obj: &Map<String, Value>, path: &str) -> Result<PAdicField> {
    let p = as_u64(field(obj, "p", path)?, &format!("{path}.p"))?;
    if !crate::coeffield::fq::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let steps = match obj.get("steps") {
        None => Vec::new(),
        Some(s) => as_array(s, &format!("{path}.steps"))?.clone(),
    };
    let mut unram = vec![0i64, 1];
    let mut eis: Vec<Vec<Vec<BigInt>>> = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        let sp = format!("{path}.steps[{i}]");
        let so = as_object(s, &sp)?;
        let poly = as_array(field(so, "poly", &sp)?, &format!("{sp}.poly"))?;
        match as_str(field(so, "type", &sp)?, &format!("{sp}.type"))? {
            "unramified" => {
                if i != 0 {
                    return Err(Error::invalid(sp, "the unramified step must come first"));
                }
                unram = poly.iter().enumerate().map(|(j, c)| as_i64(c, &format!("{sp}.poly[{j}]"))).collect::<Result<_>>()?;
            }
            "eisenstein" => {
                let coeffs = poly
                    .iter()
                    .enumerate()
                    .map(|(j, c)| int_list(c, &format!("{sp}.poly[{j}]")))
                    .collect::<Result<Vec<_>>>()?;
                eis.push(coeffs);
            }
            other => return Err(Error::invalid(format!("{sp}.type"), format!("unknown step type {other:?}"))),
        }
    }
    let cap = 64;
    let unramified = unram.len() > 2;
    let eis_coeffs: Vec<Vec<BigInt>> = match eis.len() {
        0 => vec![vec![BigInt::from(-(p as i64))]],
        1 => {
            let poly = &eis[0];
            if poly.last().map(|c| c.len() == 1 && c[0] == BigInt::from(1)) != Some(true) {
                return Err(Error::invalid(format!("{path}.steps"), "Eisenstein polynomial must be monic"));
            }
            poly[..poly.len() - 1].to_vec()
        }
        _ => {
            if unramified {
                return Err(Error::Unsupported("several Eisenstein steps over an unramified extension".into()));
            }
            let abs = compile_eisenstein_tower(p, &eis)?;
            abs[..abs.len() - 1].iter().map(|c| vec![c.clone()]).collect()
        }
    };
    PAdicField::new(p, unram, eis_coeffs, cap)
}

fn parse_residue(v: &Value, path: &str) -> Result<ResidueField> {
    let obj = as_object(v, path)?;
    match as_str(field(obj, "kind", path)?, &format!("{path}.kind"))? {
        "finite" => {
            let p = as_u64(field(obj, "p", path)?, &format!("{path}.p"))?;
            let r = match obj.get("r") {
                None => 1,
                Some(r) => as_u64(r, &format!("{path}.r"))? as usize,
            };
            ResidueField::finite(p, r)
        }
        "ratfun" => {
            let p = as_u64(field(obj, "p", path)?, &format!("{path}.p"))?;
            let vars = as_array(field(obj, "vars", path)?, &format!("{path}.vars"))?
                .iter()
                .enumerate()
                .map(|(i, x)| as_str(x, &format!("{path}.vars[{i}]")).map(str::to_string))
                .collect::<Result<Vec<_>>>()?;
            ResidueField::ratfun(FiniteField::new(p, 1)?, vars)
        }
        "ext" => {
            let base = parse_residue(field(obj, "base", path)?, &format!("{path}.base"))?;
            let name = match obj.get("name") {
                None => "a",
                Some(n) => as_str(n, &format!("{path}.name"))?,
            };
            let minpoly = as_array(field(obj, "minpoly", path)?, &format!("{path}.minpoly"))?
                .iter()
                .enumerate()
                .map(|(i, c)| parse_residue_elem(&base, c, &format!("{path}.minpoly[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(ResidueField::ext(SimpleExt::new(base, minpoly, name)?))
        }
        other => Err(Error::invalid(format!("{path}.kind"), format!("unknown residue kind {other:?}"))),
    }
}

fn parse_residue_elem(k: &ResidueField, v: &Value, path: &str) -> Result<ResidueElem> {
    use crate::coeffield::Field;
    if let Some(n) = v.as_i64() {
        return Ok(k.from_int(n));
    }
    match k {
        ResidueField::Finite(fq) => {
            let coeffs: Vec<i64> = as_array(v, path)?
                .iter()
                .enumerate()
                .map(|(i, c)| as_i64(c, &format!("{path}[{i}]")))
                .collect::<Result<_>>()?;
            if coeffs.len() > fq.degree() {
                return Err(Error::invalid(path, "too many coordinates"));
            }
            Ok(ResidueElem::Fq(fq.elem(&coeffs)))
        }
        ResidueField::RatFun(rf) => {
            let obj = as_object(v, path)?;
            let num = parse_mpoly(rf.fq(), rf.nvars(), field(obj, "num", path)?, &format!("{path}.num"))?;
            let den = match obj.get("den") {
                None => MPoly::one(rf.fq(), rf.nvars()),
                Some(d) => parse_mpoly(rf.fq(), rf.nvars(), d, &format!("{path}.den"))?,
            };
            Ok(ResidueElem::RatFun(rf.fraction(num, den)?))
        }
        ResidueField::Ext(e) => {
            let arr = as_array(v, path)?;
            if arr.len() > e.degree() {
                return Err(Error::invalid(path, "too many coordinates"));
            }
            let mut coords = vec![e.base().zero(); e.degree()];
            for (i, c) in arr.iter().enumerate() {
                coords[i] = parse_residue_elem(e.base(), c, &format!("{path}[{i}]"))?;
            }
            Ok(ResidueElem::Ext(coords))
        }
        ResidueField::Laurent(_) => Err(Error::invalid(path, "Laurent residue fields are not an input kind")),
    }
}

/// [[c, e_1, …, e_n], …] for Σ c·u_1^{e_1}⋯u_n^{e_n}.
fn parse_mpoly(fq: &FiniteField, nvars: usize, v: &Value, path: &str) -> Result<MPoly> {
    if let Some(n) = v.as_i64() {
        return Ok(MPoly::constant(fq, nvars, fq.elem(&[n])));
    }
    let mut acc = MPoly::zero(nvars);
    for (i, t) in as_array(v, path)?.iter().enumerate() {
        let tp = format!("{path}[{i}]");
        let ints: Vec<i64> = as_array(t, &tp)?.iter().enumerate().map(|(j, x)| as_i64(x, &format!("{tp}[{j}]"))).collect::<Result<_>>()?;
        if ints.len() != nvars + 1 || ints[1..].iter().any(|&e| e < 0) {
            return Err(Error::invalid(tp, format!("expected [coefficient, {nvars} non-negative exponents]")));
        }
        let exps = ints[1..].iter().map(|&e| e as u32).collect();
        acc = acc.add(fq, &MPoly::monomial(fq, fq.elem(&[ints[0]]), exps));
    }
    Ok(acc)
}

/// Sparse polynomial {"degree": element}.
fn parse_poly(k: &LocalField, v: &Value, path: &str) -> Result<Vec<LocalElem>> {
    let obj = as_object(v, path)?;
    let mut terms = Vec::new();
    for (key, c) in obj {
        let d: usize = key.parse().map_err(|_| Error::invalid(format!("{path}.{key}"), "degree keys must be non-negative integers"))?;
        terms.push((d, parse_elem(k, c, &format!("{path}.{key}"))?));
    }
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut out = vec![k.zero(); deg + 1];
    for (d, c) in terms {
        out[d] = c;
    }
    Ok(out)
}

pub fn parse_elem(k: &LocalField, v: &Value, path: &str) -> Result<LocalElem> {
    if let Some(n) = v.as_i64() {
        return Ok(k.from_int(n));
    }
    let obj = as_object(v, path)?;
    let mut terms = Vec::new();
    for (key, c) in obj {
        let e: i64 = key.parse().map_err(|_| Error::invalid(format!("{path}.{key}"), "exponent keys must be integers"))?;
        terms.push((e, c, format!("{path}.{key}")));
    }
    if let Some(f) = k.padic_field().filter(|_| k.var_name().is_none()) {
        let mut acc = f.zero();
        for (e, c, p) in terms {
            acc = f.add(&acc, &padic_term(f, e, c, &p)?);
        }
        return k.from_padic(acc);
    }
    if let Some(f) = k.padic_field() {
        let coeffs = terms
            .into_iter()
            .map(|(e, c, p)| {
                let inner = as_object_or_int(c, &p)?;
                let mut acc = f.zero();
                for (j, w, q) in inner {
                    acc = f.add(&acc, &padic_term(f, j, w, &q)?);
                }
                Ok((e, acc))
            })
            .collect::<Result<Vec<(i64, PAdicElem)>>>()?;
        return k.tseries(coeffs);
    }
    let rf = k.residue_field().clone();
    let coeffs = terms
        .into_iter()
        .map(|(e, c, p)| Ok((e, parse_residue_elem(&rf, c, &p)?)))
        .collect::<Result<Vec<_>>>()?;
    k.series(coeffs)
}

fn as_object_or_int<'a>(v: &'a Value, path: &str) -> Result<Vec<(i64, &'a Value, String)>> {
    if v.is_i64() || v.is_array() {
        return Ok(vec![(0, v, path.to_string())]);
    }
    let obj = as_object(v, path)?;
    obj.iter()
        .map(|(key, c)| {
            let e: i64 = key.parse().map_err(|_| Error::invalid(format!("{path}.{key}"), "exponent keys must be integers"))?;
            Ok((e, c, format!("{path}.{key}")))
        })
        .collect()
}

fn padic_term(f: &PAdicField, j: i64, w: &Value, path: &str) -> Result<PAdicElem> {
    let digits = int_list(w, path)?;
    if digits.len() > f.residue_field().degree() {
        return Err(Error::invalid(path, "too many unramified coordinates"));
    }
    Ok(f.from_w(digits, j, f.cap()))
}

fn int_list(v: &Value, path: &str) -> Result<Vec<BigInt>> {
    if let Some(n) = v.as_i64() {
        return Ok(vec![BigInt::from(n)]);
    }
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| as_i64(x, &format!("{path}[{i}]")).map(BigInt::from))
        .collect()
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::invalid(format!("{path}.{key}"), "missing field"))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::invalid(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::invalid(path, "expected an array"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| Error::invalid(path, "expected a string"))
}

fn as_i64(v: &Value, path: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| Error::invalid(path, "expected an integer"))
}

fn as_u64(v: &Value, path: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::invalid(path, "expected a non-negative integer"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_str("{\n  \"base\": ,\n}", PrecisionPolicy::default()).unwrap_err();
        match err {
            Error::Invalid { field, .. } => assert!(field.starts_with("line 2")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_fields_are_named() {
        let doc = serde_json::json!({"base": {"kind": "laurent", "residue": {"kind": "finite", "p": 3}, "var": "t"}});
        let err = parse_value(&doc, PrecisionPolicy::default()).unwrap_err();
        assert_eq!(err, Error::invalid("$.minpoly", "missing field"));
    }

    #[test]
    fn ratfun_elements() {
        let k = ResidueField::ratfun(FiniteField::new(3, 1).unwrap(), vec!["u".into()]).unwrap();
        let v = serde_json::json!({"num": [[1, 1]], "den": [[1, 0], [2, 2]]});
        let x = parse_residue_elem(&k, &v, "$").unwrap();
        assert!(matches!(x, ResidueElem::RatFun(_)));
    }
}
