//! Waypoint instances: validation, seeded generation and JSON documents.

use crate::error::{CspError, Result};
use crate::geometry::Point;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Consecutive rejected samples after which generation gives up.
pub const MAX_REJECTIONS: u64 = 1_000_000;

/// An ordered waypoint sequence with its turning radius.
///
/// Every adjacent pair is at least `2ρ` apart; non-adjacent points are
/// unconstrained.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    points: Vec<Point>,
    rho: f64,
    seed: Option<u64>,
}

impl Instance {
    pub fn new(points: Vec<Point>, rho: f64) -> Result<Self> {
        Self::with_seed(points, rho, None)
    }

    pub fn with_seed(points: Vec<Point>, rho: f64, seed: Option<u64>) -> Result<Self> {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(CspError::Validation(format!("rho must be positive and finite, got {rho}")));
        }
        if points.len() < 3 {
            return Err(CspError::Validation(format!(
                "at least 3 points are required, got {}",
                points.len()
            )));
        }
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(CspError::Validation(format!("point {i} has a non-finite coordinate")));
        }
        for (i, w) in points.windows(2).enumerate() {
            let gap = w[0].distance(w[1]);
            if gap < 2.0 * rho * (1.0 - 1e-12) {
                return Err(CspError::Validation(format!(
                    "points {i} and {} are {gap} apart, below 2ρ = {}",
                    i + 1,
                    2.0 * rho
                )));
            }
        }
        Ok(Self { points, rho, seed })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Default sampling window side for `n` points: `10·ρ·√n`.
pub fn default_extent(n: usize, rho: f64) -> f64 {
    10.0 * rho * (n as f64).sqrt()
}

/// Draws `n` points uniformly from `[0, extent]²`, rejecting any point closer
/// than `2ρ` to its predecessor.
///
/// Uses ChaCha8 seeded from `seed`, so the output is identical across
/// platforms.
pub fn generate(n: usize, rho: f64, extent: f64, seed: u64) -> Result<Instance> {
    if n < 3 {
        return Err(CspError::InvalidParameter(format!("need at least 3 points, got {n}")));
    }
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(CspError::InvalidParameter(format!("rho must be positive, got {rho}")));
    }
    if !(extent >= 4.0 * rho && extent.is_finite()) {
        return Err(CspError::InvalidParameter(format!(
            "extent {extent} is below 4ρ = {}",
            4.0 * rho
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || Point::new(rng.random_range(0.0..=extent), rng.random_range(0.0..=extent));
    let mut points = vec![draw()];
    while points.len() < n {
        let prev = points[points.len() - 1];
        let mut rejections = 0u64;
        let next = loop {
            let p = draw();
            if p.distance(prev) >= 2.0 * rho {
                break p;
            }
            rejections += 1;
            if rejections >= MAX_REJECTIONS {
                return Err(CspError::GenerationStalled { rejections });
            }
        };
        points.push(next);
    }
    Instance::with_seed(points, rho, Some(seed))
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    rho: f64,
    points: Vec<[f64; 2]>,
    seed: Option<u64>,
}

fn parse_error(err: serde_json::Error) -> CspError {
    CspError::Parse {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    }
}

/// Location of `"field"` in `text`, as 1-based line and column.
fn field_location(text: &str, field: &str) -> (usize, usize) {
    let needle = format!("\"{field}\"");
    match text.find(&needle) {
        Some(offset) => {
            let before = &text[..offset];
            let line = before.matches('\n').count() + 1;
            let column = offset - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, column)
        }
        None => (0, 0),
    }
}

/// Parses an instance document: `{"rho": .., "points": [[x, y], ..], "seed": ..}`.
pub fn read_instance(bytes: &[u8]) -> Result<Instance> {
    let text = std::str::from_utf8(bytes).map_err(|e| CspError::Parse {
        line: 0,
        column: 0,
        message: format!("document is not UTF-8: {e}"),
    })?;
    let doc: InstanceDoc = serde_json::from_str(text).map_err(parse_error)?;
    if doc.points.is_empty() {
        let (line, column) = field_location(text, "points");
        return Err(CspError::Parse {
            line,
            column,
            message: "field `points` is empty".into(),
        });
    }
    let points = doc.points.into_iter().map(Point::from).collect();
    Instance::with_seed(points, doc.rho, doc.seed)
}

/// Serializes an instance. Coordinates are written in shortest round-trip
/// form, so [`read_instance`] restores them bit for bit.
pub fn write_instance(instance: &Instance) -> Vec<u8> {
    let doc = InstanceDoc {
        rho: instance.rho,
        points: instance.points.iter().map(|p| [p.x, p.y]).collect(),
        seed: instance.seed,
    };
    let mut out = serde_json::to_vec_pretty(&doc).expect("instance documents always serialize");
    out.push(b'\n');
    out
}
