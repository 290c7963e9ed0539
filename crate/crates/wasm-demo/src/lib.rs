//! Browser bindings for `cm-families`. Every export returns a JSON string;
//! errors come back as a plain message.

use cm_families::alcove::{reduce_to_alcove, FamilyParams};
use cm_families::cli::{alcove_json, parse_point};
use cm_families::families::{
    charged_residue, class_multisets, cm_partition, compare, jheart_of, rouquier_residue_partition,
};
use cm_families::partition::Multipartition;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn rationals(v: &[cm_families::alcove::Rational]) -> Vec<String> {
    v.iter()
        .map(|x| format!("{}/{}", x.numer(), x.denom()))
        .collect()
}

pub fn reduce_json(l: usize, h: &str) -> Result<String, String> {
    let p = parse_point(l, 0, h).map_err(|e| e.to_string())?;
    let datum = reduce_to_alcove(&p);
    let mut out = json!({ "l": l, "theta": rationals(&p.theta()) });
    if let (Some(a), serde_json::Value::Object(b)) = (out.as_object_mut(), alcove_json(&datum)) {
        a.extend(b);
    }
    Ok(out.to_string())
}

pub fn partitions_json(l: usize, n: usize, h: &str) -> Result<String, String> {
    if n > 6 {
        return Err("n is capped at 6 in the demo".into());
    }
    let p = parse_point(l, n, h).map_err(|e| e.to_string())?;
    let cm = cm_partition(&p);
    let rq = rouquier_residue_partition(&p);
    let verdict = compare(&cm, &rq).map_err(|e| e.to_string())?;
    Ok(json!({
        "size": cm.ground().len(),
        "cm": cm.block_strings(),
        "rouquier": rq.block_strings(),
        "verdict": verdict.to_string(),
    })
    .to_string())
}

pub fn residue_json(multipartition: &str, h: &str) -> Result<String, String> {
    let m: Multipartition = multipartition
        .parse()
        .map_err(|e: cm_families::Error| e.to_string())?;
    let p: FamilyParams = parse_point(m.level(), m.size(), h).map_err(|e| e.to_string())?;
    let datum = reduce_to_alcove(&p);
    let heart = jheart_of(&m, &datum).map_err(|e| e.to_string())?;
    let classes = class_multisets(&m, &datum, None).map_err(|e| e.to_string())?;
    Ok(json!({
        "multipartition": m.to_string(),
        "d": p.denominator(),
        "mbar": p.mbar(),
        "residue": charged_residue(&m, &p).to_string(),
        "jheart": heart.to_string(),
        "classes": classes.to_string(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn reduce(l: usize, h: &str) -> Result<String, JsValue> {
    reduce_json(l, h).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn partitions(l: usize, n: usize, h: &str) -> Result<String, JsValue> {
    partitions_json(l, n, h).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn residue(multipartition: &str, h: &str) -> Result<String, JsValue> {
    residue_json(multipartition, h).map_err(|e| JsValue::from_str(&e))
}
