//! Polylines and markers behind the tiling and region figures.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use trishape::loci::right_curve_point;
use trishape::sphere::normalize_coords;
use trishape::symmetry::b3_elements;
use trishape::{solvers, Error, SpherePoint, SymmetryLoci};

use crate::{CliError, ExportKind};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polyline {
    pub label: String,
    pub points: Vec<SpherePoint>,
    /// Whether the last point joins back to the first.
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Marker {
    pub label: String,
    pub point: SpherePoint,
    pub radius: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ExportBundle {
    pub polylines: Vec<Polyline>,
    pub markers: Vec<Marker>,
}

/// The nine symmetry circles, `samples` points each.
pub fn tiling(samples: usize) -> Vec<Polyline> {
    SymmetryLoci::standard()
        .labeled()
        .into_iter()
        .map(|(label, circle)| Polyline { label: label.to_string(), points: circle.sample(samples), closed: true })
        .collect()
}

/// The 24 distinct signed-permutation images of the positive-octant
/// hypotenuse-`c` right-curve branch, `samples` points each.
///
/// Labels are `right-{a|b|c}-NN`, the letter naming the hypotenuse.
pub fn right_curve_orbit(samples: usize) -> Result<Vec<Polyline>, CliError> {
    let base: Vec<SpherePoint> = (0..samples)
        .map(|k| {
            let theta = std::f64::consts::FRAC_PI_2 * k as f64 / (samples - 1) as f64;
            right_curve_point(theta.sin().min(1.0))
        })
        .collect::<Result<_, _>>()?;
    // The isosceles right point is fixed by exactly the stabilizer of the branch.
    let m = (std::f64::consts::SQRT_2 - 1.0).sqrt();
    let apex = right_curve_point(m)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in b3_elements() {
        let key = g.apply(&apex).coords().map(|v| (v * 1e9).round() as i64);
        if !seen.insert(key) {
            continue;
        }
        let hyp = ['a', 'b', 'c'][g.perm().iter().position(|&i| i == 2).expect("permutation")];
        out.push(Polyline {
            label: format!("right-{hyp}-{:02}", out.len()),
            points: base.iter().map(|p| g.apply(p)).collect(),
            closed: false,
        });
    }
    Ok(out)
}

/// The four distinguished incenters with their incircle radii.
pub fn figure_markers() -> Result<Vec<Marker>, CliError> {
    let results = [
        solvers::least_symmetric_ordered()?,
        solvers::least_symmetric()?,
        solvers::least_symmetric_obtuse()?,
        solvers::least_symmetric_acute()?,
    ];
    Ok(results.into_iter().map(|r| Marker { label: r.label.to_string(), point: r.point, radius: r.inradius }).collect())
}

pub fn cmd_export(what: ExportKind, samples: usize) -> Result<ExportBundle, CliError> {
    if samples < 2 {
        return Err(Error::OutOfDomain { value: samples as f64, lo: 2.0, hi: f64::INFINITY }.into());
    }
    Ok(match what {
        ExportKind::Tiling => ExportBundle { polylines: tiling(samples), markers: vec![] },
        ExportKind::RightCurve => ExportBundle { polylines: right_curve_orbit(samples)?, markers: vec![] },
        ExportKind::Figure => {
            let mut polylines = tiling(samples);
            polylines.extend(right_curve_orbit(samples)?);
            ExportBundle { polylines, markers: figure_markers()? }
        }
    })
}

impl ExportBundle {
    /// One `label,x,y,z` row per polyline point, then one per marker.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,x,y,z\n");
        let rows = self
            .polylines
            .iter()
            .flat_map(|l| l.points.iter().map(move |p| (&l.label, p)))
            .chain(self.markers.iter().map(|m| (&m.label, &m.point)));
        for (label, p) in rows {
            let [x, y, z] = p.coords();
            writeln!(out, "{label},{x},{y},{z}").expect("write to string");
        }
        out
    }

    /// Orthographic projection of the hemisphere facing `view`.
    pub fn to_svg(&self, view: [f64; 3]) -> Result<String, CliError> {
        let v = normalize_coords(view[0], view[1], view[2])?.coords();
        let up = if v[2].abs() < 0.9 { [0.0, 0.0, 1.0] } else { [0.0, 1.0, 0.0] };
        let e1 =
            normalize_coords(up[1] * v[2] - up[2] * v[1], up[2] * v[0] - up[0] * v[2], up[0] * v[1] - up[1] * v[0])?
                .coords();
        let e2 = [v[1] * e1[2] - v[2] * e1[1], v[2] * e1[0] - v[0] * e1[2], v[0] * e1[1] - v[1] * e1[0]];
        let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        let project = |p: &SpherePoint| (dot(p.coords(), e1), -dot(p.coords(), e2));
        let visible = |p: &SpherePoint| dot(p.coords(), v) >= 0.0;

        let mut out = String::from(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 2 2\">\n\
             <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.004\"/>\n",
        );
        for line in &self.polylines {
            let color = if line.label.starts_with("right") { "#c03030" } else { "#3050a0" };
            let mut pts: Vec<&SpherePoint> = line.points.iter().collect();
            if line.closed {
                pts.extend(line.points.first());
            }
            writeln!(out, "<g stroke=\"{color}\" stroke-width=\"0.003\" fill=\"none\"><title>{}</title>", line.label)
                .expect("write to string");
            for run in pts.split(|p| !visible(p)).filter(|r| r.len() >= 2) {
                let coords: Vec<String> = run
                    .iter()
                    .map(|p| {
                        let (x, y) = project(p);
                        format!("{x:.5},{y:.5}")
                    })
                    .collect();
                writeln!(out, "<polyline points=\"{}\"/>", coords.join(" ")).expect("write to string");
            }
            out += "</g>\n";
        }
        for m in self.markers.iter().filter(|m| visible(&m.point)) {
            let (x, y) = project(&m.point);
            writeln!(
                out,
                "<g><title>{}</title><circle cx=\"{x:.5}\" cy=\"{y:.5}\" r=\"{:.5}\" fill=\"none\" stroke=\"#208040\" stroke-width=\"0.003\"/>\
                 <circle cx=\"{x:.5}\" cy=\"{y:.5}\" r=\"0.006\" fill=\"#208040\"/></g>",
                m.label,
                m.radius.sin()
            )
            .expect("write to string");
        }
        out += "</svg>\n";
        Ok(out)
    }
}
