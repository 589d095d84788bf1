//! The hyperoctahedral group `B₃` of signed coordinate permutations.
//!
//! Permuting `(x, y, z)` relabels the sides of the triangle and flipping signs
//! leaves the triangle unchanged, so every `B₃` orbit is one unordered
//! triangle. The chamber `0 ≤ z ≤ y ≤ x` holds exactly one point of each orbit.

use std::sync::OnceLock;

use serde::Serialize;

use crate::sphere::SpherePoint;

/// `p ↦ q` with `q[i] = signs[i] * p[perm[i]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignedPermutation {
    perm: [usize; 3],
    signs: [i8; 3],
}

impl SignedPermutation {
    /// Returns `None` unless `perm` is a permutation of `0..3` and every sign is ±1.
    pub fn new(perm: [usize; 3], signs: [i8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &perm {
            if i > 2 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return None;
        }
        Some(Self { perm, signs })
    }

    pub fn identity() -> Self {
        Self { perm: [0, 1, 2], signs: [1, 1, 1] }
    }

    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    pub fn signs(&self) -> [i8; 3] {
        self.signs
    }

    pub fn apply_coords(&self, p: [f64; 3]) -> [f64; 3] {
        [0, 1, 2].map(|i| f64::from(self.signs[i]) * p[self.perm[i]])
    }

    pub fn apply(&self, p: &SpherePoint) -> SpherePoint {
        let [x, y, z] = self.apply_coords(p.coords());
        // Signed permutations preserve the norm exactly.
        SpherePoint::new(x, y, z).expect("signed permutation of a unit vector")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let perm = [0, 1, 2].map(|i| other.perm[self.perm[i]]);
        let signs = [0, 1, 2].map(|i| self.signs[i] * other.signs[self.perm[i]]);
        Self { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = [0; 3];
        let mut signs = [1; 3];
        for i in 0..3 {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        Self { perm, signs }
    }

    /// The signed permutation matrix `M` with `M · p = self.apply(p)`.
    pub fn matrix(&self) -> [[i8; 3]; 3] {
        let mut m = [[0; 3]; 3];
        for i in 0..3 {
            m[i][self.perm[i]] = self.signs[i];
        }
        m
    }

    /// Smallest `k ≥ 1` with `self^k = identity`.
    pub fn order(&self) -> usize {
        let id = Self::identity();
        let mut g = *self;
        let mut k = 1;
        while g != id {
            g = g.compose(self);
            k += 1;
        }
        k
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// All 48 elements, identity first.
pub fn b3_elements() -> &'static [SignedPermutation] {
    static ELEMENTS: OnceLock<Vec<SignedPermutation>> = OnceLock::new();
    ELEMENTS.get_or_init(|| {
        let mut out = Vec::with_capacity(48);
        for perm in PERMUTATIONS {
            for bits in 0..8u8 {
                let signs = [0, 1, 2].map(|i| if bits >> i & 1 == 1 { -1 } else { 1 });
                out.push(SignedPermutation { perm, signs });
            }
        }
        out
    })
}

pub fn apply(g: &SignedPermutation, p: &SpherePoint) -> SpherePoint {
    g.apply(p)
}

/// The orbit representative with `0 ≤ z ≤ y ≤ x`, and an element mapping `p` to it.
///
/// When coordinates tie in magnitude or vanish the point is still unique but
/// several group elements reach it; the one returned comes from a stable sort.
pub fn canonicalize(p: &SpherePoint) -> (SpherePoint, SignedPermutation) {
    let c = p.coords();
    let mut perm = [0usize, 1, 2];
    perm.sort_by(|&i, &j| c[j].abs().total_cmp(&c[i].abs()));
    let signs = perm.map(|i| if c[i] < 0.0 { -1 } else { 1 });
    let g = SignedPermutation { perm, signs };
    (g.apply(p), g)
}

/// Membership in `0 ≤ z ≤ y ≤ x`, each inequality relaxed by `tol`.
pub fn in_fundamental_domain(p: &SpherePoint, tol: f64) -> bool {
    -tol <= p.z() && p.z() <= p.y() + tol && p.y() <= p.x() + tol
}

/// Membership in `|z| ≤ y ≤ x`, the chamber pair ignoring degeneracy.
pub fn in_doubled_domain(p: &SpherePoint, tol: f64) -> bool {
    p.z().abs() <= p.y() + tol && p.y() <= p.x() + tol
}
