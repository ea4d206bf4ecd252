//! WebAssembly bindings for the demo page in `www/`. Each export returns a
//! JSON string; the plain functions behind them are usable natively too.

use cdindex::analysis::{is_reverse_unimodal, unimodal_sequence};
use cdindex::lattice::{beta, boolean_table, cubical_table, gamma};
use cdindex::CdMonomial;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a browser tab responsive.
pub const MAX_RANK: usize = 16;

fn parse(monomial: &str) -> Result<CdMonomial, String> {
    monomial.parse().map_err(|e| format!("{e}"))
}

/// The cd-index of `B_n` or `C_n` with one row per monomial.
pub fn index_json(family: &str, rank: usize) -> Result<Value, String> {
    if rank > MAX_RANK {
        return Err(format!("rank is limited to {MAX_RANK} here"));
    }
    let poly = match family {
        "boolean" => boolean_table().poly(rank),
        "cubical" if rank >= 1 => cubical_table().poly(rank),
        "cubical" => return Err("cubical ranks start at 1".into()),
        _ => return Err(format!("unknown family `{family}`")),
    };
    let rows: Vec<Value> = poly
        .terms()
        .rev()
        .map(|(m, c)| json!({ "word": m.to_string(), "list": m.to_list_string(), "coeff": c.to_string() }))
        .collect();
    Ok(json!({ "family": family, "rank": rank, "text": poly.to_string(), "terms": rows }))
}

/// `β` and, away from `e`, `γ` of one monomial.
pub fn lookup_json(monomial: &str) -> Result<Value, String> {
    let m = parse(monomial)?;
    if m.degree() + 1 > MAX_RANK as i64 {
        return Err(format!("degree is limited to {} here", MAX_RANK - 1));
    }
    let g = (!m.is_e()).then(|| gamma(&m).to_string());
    Ok(json!({
        "word": m.to_string(),
        "list": m.to_list_string(),
        "degree": m.degree(),
        "beta": beta(&m).to_string(),
        "gamma": g,
    }))
}

/// `β(i,…,i,j,i,…,i)` with `j` in each of the `l` slots.
pub fn unimodal_json(i: u32, j: u32, l: usize) -> Result<Value, String> {
    if l == 0 {
        return Err("length must be at least 1".into());
    }
    let degree = (l - 1) * (i as usize + 2) + j as usize;
    if degree + 1 > MAX_RANK {
        return Err(format!("list degree {degree} is above {}", MAX_RANK - 1));
    }
    let seq = unimodal_sequence(i, j, l);
    Ok(json!({
        "values": seq.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "reverse_unimodal": is_reverse_unimodal(&seq),
        "degree": degree,
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn index(family: &str, rank: usize) -> Result<String, JsError> {
    to_js(index_json(family, rank))
}

#[wasm_bindgen]
pub fn lookup(monomial: &str) -> Result<String, JsError> {
    to_js(lookup_json(monomial))
}

#[wasm_bindgen]
pub fn unimodal(i: u32, j: u32, l: usize) -> Result<String, JsError> {
    to_js(unimodal_json(i, j, l))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_rows() {
        let v = index_json("boolean", 3).unwrap();
        assert_eq!(v["text"], "c^2 + d");
        assert_eq!(v["terms"].as_array().unwrap().len(), 2);
        assert!(index_json("cubical", 0).is_err());
        assert!(index_json("boolean", 99).is_err());
    }

    #[test]
    fn lookup_values() {
        let v = lookup_json("(6,1,1)").unwrap();
        assert_eq!(v["beta"], "5005");
        let v = lookup_json("cd").unwrap();
        assert_eq!((v["beta"].as_str(), v["gamma"].as_str()), (Some("2"), Some("4")));
        assert!(lookup_json("e").unwrap()["gamma"].is_null());
        assert!(lookup_json("x").is_err());
    }

    #[test]
    fn unimodal_values() {
        let v = unimodal_json(0, 1, 6).unwrap();
        assert_eq!(v["values"][0], "66336");
        assert_eq!(v["reverse_unimodal"], true);
        assert!(unimodal_json(0, 1, 0).is_err());
    }
}
