//! Planar points, oriented configurations and angle helpers.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Tolerance used when comparing angles.
pub const ANGLE_EPS: f64 = 1e-9;

/// Wraps an angle into `[0, 2π)`.
pub fn mod2pi(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Wraps an arc extent into `[0, 2π)` and snaps values within [`ANGLE_EPS`]
/// of a full turn down to zero. A shortest path never contains a full circle,
/// so such values are rounding noise around a zero-length arc.
pub fn arc_extent(theta: f64) -> f64 {
    let r = mod2pi(theta);
    if TAU - r < ANGLE_EPS {
        0.0
    } else {
        r
    }
}

/// Smallest absolute difference between two headings, in `[0, π]`.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = mod2pi(a - b);
    d.min(TAU - d)
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(self, other: Point) -> f64 {
        (other.x - self.x).hypot(other.y - self.y)
    }

    /// Direction of travel from `self` towards `other`, in `[0, 2π)`.
    pub fn bearing_to(self, other: Point) -> f64 {
        mod2pi((other.y - self.y).atan2(other.x - self.x))
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub(crate) fn offset(self, angle: f64, len: f64) -> Point {
        Point::new(self.x + len * angle.cos(), self.y + len * angle.sin())
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Self::new(x, y)
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Self::new(x, y)
    }
}

/// A position together with a heading angle.
///
/// The heading is normalized into `[0, 2π)` on construction.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Configuration {
    pub x: f64,
    pub y: f64,
    pub heading: f64,
}

impl Configuration {
    pub fn new(x: f64, y: f64, heading: f64) -> Self {
        Self {
            x,
            y,
            heading: mod2pi(heading),
        }
    }

    pub fn at(p: Point, heading: f64) -> Self {
        Self::new(p.x, p.y, heading)
    }

    pub fn position(&self) -> Point {
        Point::new(self.x, self.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.heading.is_finite()
    }

    /// Center of the left (counter-clockwise) turning circle of radius `rho`.
    pub fn left_center(&self, rho: f64) -> Point {
        Point::new(
            self.x - rho * self.heading.sin(),
            self.y + rho * self.heading.cos(),
        )
    }

    /// Center of the right (clockwise) turning circle of radius `rho`.
    pub fn right_center(&self, rho: f64) -> Point {
        Point::new(
            self.x + rho * self.heading.sin(),
            self.y - rho * self.heading.cos(),
        )
    }
}

/// A proper rigid motion of the plane: rotation by `angle`, then translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub angle: f64,
    pub tx: f64,
    pub ty: f64,
}

impl RigidMotion {
    pub fn new(angle: f64, tx: f64, ty: f64) -> Self {
        Self { angle, tx, ty }
    }

    pub fn apply(&self, p: Point) -> Point {
        let (s, c) = self.angle.sin_cos();
        Point::new(c * p.x - s * p.y + self.tx, s * p.x + c * p.y + self.ty)
    }

    pub fn apply_config(&self, q: Configuration) -> Configuration {
        Configuration::at(self.apply(q.position()), q.heading + self.angle)
    }

    pub fn inverse(&self) -> Self {
        let (s, c) = self.angle.sin_cos();
        Self {
            angle: -self.angle,
            tx: -(c * self.tx + s * self.ty),
            ty: -(-s * self.tx + c * self.ty),
        }
    }
}
