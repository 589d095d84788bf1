//! Side lengths, tangent-circle coordinates and the sphere embedding.
//!
//! Triangles are scaled to perimeter 2, so the semiperimeter is 1 and the
//! tangent-circle radii are `s_a = 1 - a` and so on. They sum to 1, and their
//! square roots give a point on the unit sphere.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sphere::{normalize_coords, SpherePoint};

/// Default classification tolerance, relative to perimeter 2.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Slack allowed on the perimeter and on the triangle inequalities.
const SIDE_TOL: f64 = 1e-12;

/// Side lengths of a triangle normalized to perimeter 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleSides {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangleSides {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn perimeter(&self) -> f64 {
        self.a + self.b + self.c
    }

    /// Sides in ascending order.
    pub fn sorted(&self) -> [f64; 3] {
        let mut s = self.as_array();
        s.sort_by(f64::total_cmp);
        s
    }
}

/// Tangent-circle radii `(s_a, s_b, s_c)`, summing to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SCoords {
    pub s_a: f64,
    pub s_b: f64,
    pub s_c: f64,
}

impl SCoords {
    pub fn as_array(&self) -> [f64; 3] {
        [self.s_a, self.s_b, self.s_c]
    }
}

/// Scales `(a, b, c)` to perimeter 2.
pub fn normalize_perimeter(a: f64, b: f64, c: f64) -> Result<TriangleSides> {
    if [a, b, c].iter().any(|s| !s.is_finite() || *s < 0.0) {
        return Err(Error::DegenerateInput(format!(
            "side lengths must be finite and nonnegative, got ({a}, {b}, {c})"
        )));
    }
    let p = a + b + c;
    if p.is_nan() || p <= 0.0 {
        return Err(Error::DegenerateInput("zero perimeter".into()));
    }
    let k = 2.0 / p;
    Ok(TriangleSides::new(a * k, b * k, c * k))
}

pub fn s_coords(sides: &TriangleSides) -> Result<SCoords> {
    let per = sides.perimeter();
    if !per.is_finite() || (per - 2.0).abs() > SIDE_TOL {
        return Err(Error::NotATriangle(format!("perimeter is {per}, expected 2 (normalize the sides first)")));
    }
    let s = SCoords { s_a: 1.0 - sides.a, s_b: 1.0 - sides.b, s_c: 1.0 - sides.c };
    if s.as_array().iter().any(|v| *v < -SIDE_TOL) {
        return Err(Error::NotATriangle(format!(
            "({}, {}, {}) violates the triangle inequality",
            sides.a, sides.b, sides.c
        )));
    }
    if sides.as_array().iter().any(|v| *v < -SIDE_TOL) {
        return Err(Error::NotATriangle("negative side length".into()));
    }
    Ok(s)
}

/// The representative `(√s_a, √s_b, √s_c)` in the closed positive octant.
pub fn point_from_sides(sides: &TriangleSides) -> Result<SpherePoint> {
    let s = s_coords(sides)?;
    let [x, y, z] = s.as_array().map(|v| v.max(0.0).sqrt());
    normalize_coords(x, y, z)
}

/// `(1 - x², 1 - y², 1 - z²)`.
pub fn sides_from_point(p: &SpherePoint) -> TriangleSides {
    TriangleSides::new(1.0 - p.x() * p.x(), 1.0 - p.y() * p.y(), 1.0 - p.z() * p.z())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeFlag {
    Equilateral,
    Isosceles,
    Scalene,
    Degenerate,
    DoublyDegenerate,
    Right,
    Acute,
    Obtuse,
}

impl ShapeFlag {
    pub const ALL: [ShapeFlag; 8] = [
        ShapeFlag::Equilateral,
        ShapeFlag::Isosceles,
        ShapeFlag::Scalene,
        ShapeFlag::Degenerate,
        ShapeFlag::DoublyDegenerate,
        ShapeFlag::Right,
        ShapeFlag::Acute,
        ShapeFlag::Obtuse,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ShapeFlag::Equilateral => "equilateral",
            ShapeFlag::Isosceles => "isosceles",
            ShapeFlag::Scalene => "scalene",
            ShapeFlag::Degenerate => "degenerate",
            ShapeFlag::DoublyDegenerate => "doubly_degenerate",
            ShapeFlag::Right => "right",
            ShapeFlag::Acute => "acute",
            ShapeFlag::Obtuse => "obtuse",
        }
    }
}

impl fmt::Display for ShapeFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every category a triangle belongs to. Categories overlap, e.g. a
/// degenerate isosceles triangle carries both flags.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ShapeClass(BTreeSet<ShapeFlag>);

impl ShapeClass {
    pub fn contains(&self, flag: ShapeFlag) -> bool {
        self.0.contains(&flag)
    }

    pub fn iter(&self) -> impl Iterator<Item = ShapeFlag> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<ShapeFlag> for ShapeClass {
    fn from_iter<I: IntoIterator<Item = ShapeFlag>>(iter: I) -> Self {
        ShapeClass(iter.into_iter().collect())
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.0.iter().map(ShapeFlag::name).collect();
        f.write_str(&names.join(" "))
    }
}

/// Flags the triangle by side equalities, degeneracy and largest angle.
///
/// Degenerate triangles get no angle flag.
pub fn classify(sides: &TriangleSides, tol: f64) -> ShapeClass {
    let [a, b, c] = sides.sorted();
    let mut flags = BTreeSet::new();

    let eq_ab = (b - a).abs() < tol;
    let eq_bc = (c - b).abs() < tol;
    let eq_ac = (c - a).abs() < tol;
    if eq_ab && eq_bc && eq_ac {
        flags.insert(ShapeFlag::Equilateral);
    }
    if eq_ab || eq_bc || eq_ac {
        flags.insert(ShapeFlag::Isosceles);
    } else {
        flags.insert(ShapeFlag::Scalene);
    }

    let near_one = |s: f64| (s - 1.0).abs() < tol;
    let degenerate = near_one(c);
    if degenerate {
        flags.insert(ShapeFlag::Degenerate);
        if near_one(b) {
            flags.insert(ShapeFlag::DoublyDegenerate);
        }
    } else {
        let excess = c * c - (a * a + b * b);
        flags.insert(if excess.abs() < tol {
            ShapeFlag::Right
        } else if excess < 0.0 {
            ShapeFlag::Acute
        } else {
            ShapeFlag::Obtuse
        });
    }
    ShapeClass(flags)
}
