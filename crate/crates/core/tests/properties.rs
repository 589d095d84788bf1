use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trishape::loci::{distance_to_right, distance_to_symmetric, RightBranch, RightCurve};
use trishape::sphere::{
    bisector, geodesic_distance, intersect, normalize_coords, point_circle_distance, ArcParametrization, GreatCircle,
};
use trishape::symmetry::b3_elements;
use trishape::SpherePoint;

fn unit() -> impl Strategy<Value = SpherePoint> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
        .prop_filter("nonzero", |(x, y, z)| x * x + y * y + z * z > 1e-4)
        .prop_map(|(x, y, z)| normalize_coords(x, y, z).unwrap())
}

fn random_unit(rng: &mut ChaCha8Rng) -> SpherePoint {
    loop {
        let v: [f64; 3] = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
        let n2 = v.iter().map(|c| c * c).sum::<f64>();
        if n2 > 1e-4 && n2 <= 1.0 {
            return normalize_coords(v[0], v[1], v[2]).unwrap();
        }
    }
}

/// Orthonormal frame spanning the circle `n · p = 0`, built without the library.
fn circle_frame(n: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let a = if n[0].abs() < 0.5 { [1.0, 0.0, 0.0] } else { [0.0, 0.0, 1.0] };
    let cross =
        |u: [f64; 3], v: [f64; 3]| [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
    let norm = |u: [f64; 3]| {
        let l = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
        [u[0] / l, u[1] / l, u[2] / l]
    };
    let e1 = norm(cross(n, a));
    let e2 = norm(cross(n, e1));
    (e1, e2)
}

fn acos_distance(p: [f64; 3], q: [f64; 3]) -> f64 {
    (p[0] * q[0] + p[1] * q[1] + p[2] * q[2]).clamp(-1.0, 1.0).acos()
}

/// Positive-octant right-triangle curve `x² + y² + x²y² = 1`, sampled in two
/// halves so neither parameter runs into the infinite-slope end.
fn dense_right_curve(count: usize) -> Vec<[f64; 3]> {
    let m = (2f64.sqrt() - 1.0).sqrt();
    let half = count / 2;
    let mut out = Vec::with_capacity(count);
    for i in 0..half {
        let u = m * i as f64 / (half - 1) as f64;
        let v = ((1.0 - u * u) / (1.0 + u * u)).sqrt();
        let w = (1.0 - u * u - v * v).max(0.0).sqrt();
        out.push([u, v, w]);
        out.push([v, u, w]);
    }
    out
}

fn brute_distance_to_right(p: &SpherePoint, curve: &[[f64; 3]]) -> f64 {
    let mut best = f64::INFINITY;
    for g in b3_elements() {
        let q = g.apply(p).coords();
        for c in curve {
            best = best.min(acos_distance(q, *c));
        }
    }
    best
}

#[test]
fn point_circle_distance_matches_sampling_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let p = random_unit(&mut rng);
        let n = random_unit(&mut rng);
        let (e1, e2) = circle_frame(n.coords());
        let samples = 10_000;
        let brute = (0..samples)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / samples as f64;
                let q = [0, 1, 2].map(|i| t.cos() * e1[i] + t.sin() * e2[i]);
                acos_distance(p.coords(), q)
            })
            .fold(f64::INFINITY, f64::min);
        let d = point_circle_distance(&p, &GreatCircle::new(n));
        assert!((d - brute).abs() < 1e-4, "{d} vs {brute}");
    }
}

#[test]
fn distance_to_right_matches_dense_oracle() {
    let curve = dense_right_curve(100_000);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut points: Vec<SpherePoint> = (0..25).map(|_| random_unit(&mut rng)).collect();
    points.push(SpherePoint::equilateral());
    points.push(normalize_coords(1.0, 0.02, 0.01).unwrap());
    points.push(normalize_coords(0.9, 0.1, -0.3).unwrap());
    for p in points {
        let d = distance_to_right(&p);
        let brute = brute_distance_to_right(&p, &curve);
        assert!((d - brute).abs() < 1e-4, "{p:?}: {d} vs {brute}");
        assert!(d <= brute + 1e-12);
    }
}

#[test]
fn dense_oracle_curve_lies_on_quartic() {
    let curve = RightCurve::new(RightBranch::HypotenuseC);
    for c in dense_right_curve(2_000) {
        let p = SpherePoint::new(c[0], c[1], c[2]).unwrap();
        assert!(curve.residual(&p).abs() < 1e-12);
    }
}

proptest! {
    #[test]
    fn geodesic_distance_is_a_metric(p in unit(), q in unit(), r in unit()) {
        let pq = geodesic_distance(&p, &q);
        prop_assert_eq!(pq, geodesic_distance(&q, &p));
        prop_assert!((0.0..=std::f64::consts::PI).contains(&pq));
        prop_assert!(pq <= geodesic_distance(&p, &r) + geodesic_distance(&r, &q) + 1e-12);
        prop_assert_eq!(geodesic_distance(&p, &p), 0.0);
    }

    #[test]
    fn bisector_points_are_equidistant(n1 in unit(), n2 in unit(), seed in any::<u64>()) {
        prop_assume!(n1.dot(&n2).abs() < 0.999);
        let (c1, c2) = (GreatCircle::new(n1), GreatCircle::new(n2));
        let b = bisector(&c1, &c2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for p in b.sample(100).into_iter().skip(rng.random_range(0..10)) {
            let gap = (point_circle_distance(&p, &c1) - point_circle_distance(&p, &c2)).abs();
            prop_assert!(gap < 1e-12, "gap {}", gap);
        }
    }

    #[test]
    fn intersection_lies_on_both_circles(n1 in unit(), n2 in unit()) {
        prop_assume!(n1.dot(&n2).abs() < 0.999);
        let (c1, c2) = (GreatCircle::new(n1), GreatCircle::new(n2));
        let (p, q) = intersect(&c1, &c2).unwrap();
        for x in [p, q] {
            prop_assert!(x.dot(&n1).abs() < 1e-12);
            prop_assert!(x.dot(&n2).abs() < 1e-12);
        }
    }

    #[test]
    fn arc_points_are_unit(u in unit(), v in unit(), t in -10.0f64..10.0) {
        let w = normalize_coords(
            v.x() - u.dot(&v) * u.x(),
            v.y() - u.dot(&v) * u.y(),
            v.z() - u.dot(&v) * u.z(),
        );
        prop_assume!(w.is_ok());
        let w = w.unwrap();
        prop_assume!(u.dot(&w).abs() < 1e-12);
        let arc = ArcParametrization::new(u, w).unwrap();
        let p = arc.point(t);
        prop_assert!((p.dot(&p) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn boundary_distances_are_b3_invariant(p in unit()) {
        let ds = distance_to_symmetric(&p);
        let dr = distance_to_right(&p);
        for g in b3_elements() {
            let q = g.apply(&p);
            prop_assert!((distance_to_symmetric(&q) - ds).abs() < 1e-12);
            prop_assert!((distance_to_right(&q) - dr).abs() < 1e-12);
        }
    }
}
