//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string; the plain functions behind them are
//! usable (and tested) natively.

use csp_core::geometry::mod2pi;
use csp_core::three_point::{canonicalize, length_profile, search_interval};
use csp_core::{
    default_extent, dubins_shortest, generate, sample_path, solve_sequence, solve_three_point, Configuration, CspError,
    DubinsPath, PathWord, Point, Turn,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const PROFILE_SAMPLES: usize = 240;

fn polyline(path: &DubinsPath) -> Result<Vec<[f64; 2]>, CspError> {
    let step = (path.rho / 10.0).max(path.length / 2000.0);
    Ok(sample_path(path, step)?.into_iter().map(|p| [p.x, p.y]).collect())
}

fn word(path: &DubinsPath) -> String {
    path.word.map_or_else(String::new, |w| w.to_string())
}

/// Shortest path between two configurations.
pub fn dubins(x0: f64, y0: f64, h0: f64, x1: f64, y1: f64, h1: f64, rho: f64) -> Result<Value, CspError> {
    if rho.is_nan() || rho <= 0.0 {
        return Err(CspError::InvalidParameter(format!("rho must be positive, got {rho}")));
    }
    let path = dubins_shortest(Configuration::new(x0, y0, h0), Configuration::new(x1, y1, h1), rho);
    Ok(json!({
        "length": path.length,
        "word": word(&path),
        "points": polyline(&path)?,
    }))
}

/// Three-point solution plus the length profile over the heading at `p2`.
pub fn three_point(p: [f64; 6], rho: f64, eps: f64) -> Result<Value, CspError> {
    let (p1, p2, p3) = (Point::new(p[0], p[1]), Point::new(p[2], p[3]), Point::new(p[4], p[5]));
    let sol = solve_three_point(p1, p2, p3, rho, eps)?;
    let frame = canonicalize(p1, p2, p3, rho)?;
    let mut profile = Vec::new();
    let mut optimum = Value::Null;
    let side = match sol.word {
        PathWord::Srs => Some(Turn::Right),
        PathWord::Sls => Some(Turn::Left),
        _ => None,
    };
    if let Some(side) = side {
        let sign = if side == Turn::Right { 1.0 } else { -1.0 };
        let width = search_interval(&frame, side);
        for k in 1..PROFILE_SAMPLES {
            let phi = width * k as f64 / PROFILE_SAMPLES as f64;
            if let Ok(g) = length_profile(&frame, sign * phi, side) {
                profile.push([phi, g.total()]);
            }
        }
        let local = mod2pi(sol.headings[1] - frame.to_world.angle);
        optimum = json!([mod2pi(sign * local), sol.length()]);
    }
    Ok(json!({
        "length": sol.length(),
        "word": sol.word.to_string(),
        "headings": sol.headings,
        "turn12": sol.turn12,
        "turn23": sol.turn23,
        "points": polyline(&sol.path)?,
        "profile": profile,
        "optimum": optimum,
    }))
}

/// Random instance with the three candidate paths.
pub fn sequence(n: usize, rho: f64, seed: u64, eps: f64) -> Result<Value, CspError> {
    let inst = generate(n, rho, default_extent(n, rho), seed)?;
    let report = solve_sequence(&inst, eps)?;
    let candidates = report
        .candidates
        .iter()
        .map(|c| {
            Ok(json!({
                "label": c.label.to_string(),
                "cost": c.cost,
                "points": polyline(&c.path)?,
            }))
        })
        .collect::<Result<Vec<_>, CspError>>()?;
    Ok(json!({
        "waypoints": inst.points().iter().map(|p| [p.x, p.y]).collect::<Vec<_>>(),
        "chosen": report.chosen.label.to_string(),
        "euclidean_lb": report.euclidean_lb,
        "candidates": candidates,
    }))
}

fn export(v: Result<Value, CspError>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = dubinsPath)]
pub fn dubins_path(x0: f64, y0: f64, h0: f64, x1: f64, y1: f64, h1: f64, rho: f64) -> Result<String, JsError> {
    export(dubins(x0, y0, h0, x1, y1, h1, rho))
}

#[wasm_bindgen(js_name = threePoint)]
#[allow(clippy::too_many_arguments)]
pub fn three_point_js(x1: f64, y1: f64, x2: f64, y2: f64, x3: f64, y3: f64, rho: f64, eps: f64) -> Result<String, JsError> {
    export(three_point([x1, y1, x2, y2, x3, y3], rho, eps))
}

#[wasm_bindgen(js_name = sequenceCandidates)]
pub fn sequence_js(n: usize, rho: f64, seed: u32, eps: f64) -> Result<String, JsError> {
    export(sequence(n, rho, seed as u64, eps))
}
