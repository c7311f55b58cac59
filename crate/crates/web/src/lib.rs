//! Browser bindings. The [`api`] functions are plain Rust and return JSON
//! text, so they can be tested natively; the exported wrappers only adapt
//! errors for JavaScript.

use wasm_bindgen::prelude::*;

pub mod api {
    use cellchar::conjecture::{check_conjecture, ConjectureInput};
    use cellchar::fock::canonical_basis;
    use cellchar::jm::jm_cellular_characters;
    use cellchar::qlaurent::{parse_rational, rational, Rational};
    use cellchar::{CMParams, ChargeVector};
    use serde_json::{json, Value};

    /// Refuse inputs that would keep a browser tab busy for minutes.
    pub const MAX_N: u32 = 6;

    fn charges(r: &str) -> Result<ChargeVector, String> {
        r.parse().map_err(|e| format!("r: {e}"))
    }

    fn c0(s: &str) -> Result<Rational, String> {
        if s.trim().is_empty() {
            return Ok(rational(1));
        }
        parse_rational(s.trim()).map_err(|e| format!("c0: {e}"))
    }

    fn size(n: u32) -> Result<u32, String> {
        if n > MAX_N {
            return Err(format!("n: at most {MAX_N} in the browser"));
        }
        Ok(n)
    }

    fn pretty(v: &Value) -> String {
        serde_json::to_string_pretty(v).expect("serializable")
    }

    /// Compares the two character sets for charges `r` and parameter `c0`.
    pub fn check(r: &str, c0_text: &str, n: u32) -> Result<String, String> {
        let input = ConjectureInput::Charges { r: charges(r)?, c0: c0(c0_text)? };
        let v = check_conjecture(&input, size(n)?).map_err(|e| e.to_string())?;
        Ok(pretty(&serde_json::to_value(&v).map_err(|e| e.to_string())?))
    }

    /// Canonical basis vectors at height `n`, coefficients as text.
    pub fn canonical(r: &str, n: u32) -> Result<String, String> {
        let r = charges(r)?;
        let basis = canonical_basis(&r, size(n)?).map_err(|e| e.to_string())?;
        let vectors: Vec<Value> = basis
            .at_height(n)
            .map(|(sigma, b)| {
                let terms: serde_json::Map<String, Value> =
                    b.terms().map(|(s, c)| (s.to_string(), Value::String(c.to_string()))).collect();
                json!({ "symbol": sigma, "terms": terms })
            })
            .collect();
        Ok(pretty(&json!({ "r": r, "n": n, "vectors": vectors, "warnings": basis.warnings })))
    }

    /// Jucys-Murphy cells for `k#` given as a comma separated list.
    pub fn jm_cells(k: &str, c0_text: &str, n: u32) -> Result<String, String> {
        let ks = k
            .split(',')
            .map(|x| parse_rational(x.trim()).map_err(|e| format!("k: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let p = CMParams::from_ksharp(c0(c0_text)?, ks).map_err(|e| e.to_string())?;
        let cells = jm_cellular_characters(&p, size(n)?);
        Ok(pretty(&json!({ "params": p, "cells": cells })))
    }
}

fn to_js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = checkConjecture)]
pub fn check_conjecture(r: &str, c0: &str, n: u32) -> Result<String, JsError> {
    to_js(api::check(r, c0, n))
}

#[wasm_bindgen(js_name = canonicalBasis)]
pub fn canonical_basis(r: &str, n: u32) -> Result<String, JsError> {
    to_js(api::canonical(r, n))
}

#[wasm_bindgen(js_name = jmCells)]
pub fn jm_cells(k: &str, c0: &str, n: u32) -> Result<String, JsError> {
    to_js(api::jm_cells(k, c0, n))
}
