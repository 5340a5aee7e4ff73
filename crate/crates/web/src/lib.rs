//! Browser bindings: a homotopy-group table, certificates, and induced maps.
//!
//! The `*_json` functions are plain Rust so they can be tested natively; the
//! `#[wasm_bindgen]` wrappers only translate errors into JavaScript values.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use orthocert_core::checker::{certify, DecompositionProblem};
use orthocert_core::homotopy::{pi_of, GroupFamily};
use orthocert_core::induced::{
    direct_sum_induced, quotient_tensor_induced, r_fold_sum_induced, r_fold_tensor_induced,
    stabilization, tensor_induced,
};
use orthocert_core::GroupHom;

/// Largest degree the table will render; keeps the page responsive.
pub const MAX_TABLE_DEGREE: u64 = 64;

#[derive(Serialize)]
struct TableRow {
    n: u64,
    /// `cells[i]` is `pi_i`, for `i = 0..n`.
    cells: Vec<String>,
}

#[derive(Serialize)]
struct Table {
    family: String,
    rows: Vec<TableRow>,
}

/// `pi_i` of the chosen family for `1 <= n <= max_n` and all `i <= n - 1`.
pub fn homotopy_table_json(family: &str, max_n: u64) -> Result<String, String> {
    let family: GroupFamily = family.parse().map_err(|e| format!("{e}"))?;
    if max_n == 0 || max_n > MAX_TABLE_DEGREE {
        return Err(format!(
            "degree must be between 1 and {MAX_TABLE_DEGREE}, got {max_n}"
        ));
    }
    let rows = (1..=max_n)
        .map(|n| {
            let cells = (0..n)
                .map(|i| pi_of(family, n, i).map(|g| g.to_string()))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            Ok(TableRow { n, cells })
        })
        .collect::<Result<_, String>>()?;
    let table = Table {
        family: family.to_string(),
        rows,
    };
    Ok(serde_json::to_string(&table).expect("table serializes"))
}

/// Certificate as JSON, plus the verdict narrative.
pub fn certify_json(m: u64, n: u64, dim_x: u64) -> Result<String, String> {
    let c = certify(DecompositionProblem { m, n, dim_x }).map_err(|e| e.to_string())?;
    let body = c.to_json_value().map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Response<T> {
        certificate: T,
        narrative: String,
    }
    let response = Response {
        certificate: body,
        narrative: c.narrative,
    };
    Ok(serde_json::to_string(&response).expect("certificate serializes"))
}

#[derive(Serialize)]
struct MapView {
    source: String,
    target: String,
    matrix: Vec<Vec<i64>>,
    epi: bool,
    iso: bool,
}

/// One of the induced maps. `kind` is `stabilization` (m -> n), `sum`,
/// `tensor`, `quotient-tensor` (m even, n odd), `r-fold-sum` and
/// `r-fold-tensor` (degree m, multiplicity n).
pub fn induced_map_json(kind: &str, m: u64, n: u64, i: u64) -> Result<String, String> {
    let hom: GroupHom = match kind {
        "stabilization" => stabilization(m, n, i),
        "sum" => direct_sum_induced(m, n, i),
        "tensor" => tensor_induced(m, n, i),
        "quotient-tensor" => quotient_tensor_induced(m, n, i),
        "r-fold-sum" => r_fold_sum_induced(m, n, i),
        "r-fold-tensor" => r_fold_tensor_induced(m, n, i),
        other => return Err(format!("unknown map kind {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    let view = MapView {
        source: hom.source().to_string(),
        target: hom.target().to_string(),
        matrix: hom.matrix_i64().ok_or("matrix entry exceeds 64 bits")?,
        epi: hom.is_epimorphism(),
        iso: hom.is_isomorphism(),
    };
    Ok(serde_json::to_string(&view).expect("map serializes"))
}

#[wasm_bindgen(js_name = homotopyTable)]
pub fn homotopy_table(family: &str, max_n: u32) -> Result<String, JsValue> {
    homotopy_table_json(family, max_n.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = certify)]
pub fn certify_js(m: u32, n: u32, dim_x: u32) -> Result<String, JsValue> {
    certify_json(m.into(), n.into(), dim_x.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = inducedMap)]
pub fn induced_map(kind: &str, m: u32, n: u32, i: u32) -> Result<String, JsValue> {
    induced_map_json(kind, m.into(), n.into(), i.into()).map_err(|e| JsValue::from_str(&e))
}
