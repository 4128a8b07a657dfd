//! The octagon model of a flat cone metric on the sphere with five cone points.
//!
//! Three triangles `T1`, `T2`, `T3` with complex side parameters `z1`, `z2`,
//! `z3` are glued into an octagon `Π` symmetric about the imaginary axis.
//! Every vertex is a ℂ-linear function of `(z1, z2, z3)` (the left half uses
//! the conjugate-reflected coefficients), so the moves act on the octagon
//! through their matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cxgeom::{c, cis, Mat3, TrigConstants, Vec3, C64};

/// Vertex slots of `Π` in cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slot {
    V0,
    V1,
    V2,
    V3,
    Star,
    M3,
    M2,
    M1,
}

impl Slot {
    pub const CYCLE: [Slot; 8] = [
        Slot::V0,
        Slot::V1,
        Slot::V2,
        Slot::V3,
        Slot::Star,
        Slot::M3,
        Slot::M2,
        Slot::M1,
    ];

    pub fn index(self) -> usize {
        Self::CYCLE.iter().position(|&s| s == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::V0 => "v0",
            Slot::V1 => "v1",
            Slot::V2 => "v2",
            Slot::V3 => "v3",
            Slot::Star => "v*",
            Slot::M3 => "v-3",
            Slot::M2 => "v-2",
            Slot::M1 => "v-1",
        }
    }
}

/// The five cone points: `0`, `1`, `2`, `3` and `*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConePoint {
    C0,
    C1,
    C2,
    C3,
    Star,
}

impl ConePoint {
    /// The octagon vertices that represent this cone point.
    pub fn slots(self) -> &'static [Slot] {
        match self {
            ConePoint::C0 => &[Slot::V0],
            ConePoint::C1 => &[Slot::V1, Slot::M1],
            ConePoint::C2 => &[Slot::V2, Slot::M2],
            ConePoint::C3 => &[Slot::V3, Slot::M3],
            ConePoint::Star => &[Slot::Star],
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ConePoint::C0 => "0",
            ConePoint::C1 => "1",
            ConePoint::C2 => "2",
            ConePoint::C3 => "3",
            ConePoint::Star => "*",
        }
    }
}

impl fmt::Display for ConePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctagonConfig {
    pub z1: C64,
    pub z2: C64,
    pub z3: C64,
    pub theta: f64,
    pub phi: f64,
}

impl OctagonConfig {
    pub fn new(z: &Vec3, theta: f64, phi: f64) -> Self {
        Self {
            z1: z[0],
            z2: z[1],
            z3: z[2],
            theta,
            phi,
        }
    }

    pub fn vector(&self) -> Vec3 {
        Vec3::new(self.z1, self.z2, self.z3)
    }

    pub fn trig(&self) -> TrigConstants {
        TrigConstants::new(self.theta, self.phi)
    }

    pub fn transformed(&self, m: &Mat3) -> Self {
        Self::new(&(m * self.vector()), self.theta, self.phi)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OctagonRealization {
    /// In the order `v0, v1, v2, v3, v*, v-3, v-2, v-1`.
    pub vertices: [C64; 8],
}

impl OctagonRealization {
    pub fn get(&self, slot: Slot) -> C64 {
        self.vertices[slot.index()]
    }

    /// Pairs of slots closer than `tol`.
    pub fn coincidences(&self, tol: f64) -> Vec<(Slot, Slot)> {
        let mut out = Vec::new();
        for (i, &a) in Slot::CYCLE.iter().enumerate() {
            for &b in &Slot::CYCLE[i + 1..] {
                if (self.get(a) - self.get(b)).norm() < tol {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Smallest distance between some representative of `a` and of `b`.
    pub fn cone_gap(&self, a: ConePoint, b: ConePoint) -> f64 {
        let mut best = f64::INFINITY;
        for &sa in a.slots() {
            for &sb in b.slots() {
                best = best.min((self.get(sa) - self.get(sb)).norm());
            }
        }
        best
    }
}

/// Coefficients `(c1, c2, c3)` of the right-half vertices, on top of the
/// common offset `-i·z3·sinθ/sin(θ+φ)`.
fn right_coefficients(theta: f64, phi: f64) -> [[C64; 3]; 4] {
    let u = cis(std::f64::consts::FRAC_PI_2 - phi);
    let uc = cis(std::f64::consts::FRAC_PI_2 - theta - phi);
    let zero = c(0.0);
    let v0 = C64::new(0.0, (theta / 2.0).cos() / (theta / 2.0 - phi).cos());
    [
        [v0, zero, zero],
        [u, zero, zero],
        [zero, -u, u],
        [zero, -uc, u],
    ]
}

pub fn build_octagon(cfg: &OctagonConfig) -> OctagonRealization {
    let t = cfg.trig();
    let offset = C64::new(0.0, -1.0) * cfg.z3 * (t.st / t.s);
    let coeffs = right_coefficients(cfg.theta, cfg.phi);
    let z = [cfg.z1, cfg.z2, cfg.z3];
    let right: Vec<C64> = coeffs
        .iter()
        .map(|cs| offset + cs[0] * z[0] + cs[1] * z[1] + cs[2] * z[2])
        .collect();
    let left: Vec<C64> = coeffs
        .iter()
        .map(|cs| offset - cs[0].conj() * z[0] - cs[1].conj() * z[1] - cs[2].conj() * z[2])
        .collect();
    OctagonRealization {
        vertices: [
            right[0],
            right[1],
            right[2],
            right[3],
            c(0.0),
            left[3],
            left[2],
            left[1],
        ],
    }
}

/// Shoelace area of a closed polygon; positive when counterclockwise.
pub fn shoelace(points: &[C64]) -> f64 {
    let n = points.len();
    (0..n)
        .map(|i| (points[i].conj() * points[(i + 1) % n]).im)
        .sum::<f64>()
        / 2.0
}

pub fn signed_area(oct: &OctagonRealization) -> f64 {
    shoelace(&oct.vertices)
}

/// `(sinθ sinφ / sin(θ+φ))|z3|² − sinθ|z2|² − (sinθ sinφ / (sinφ + sin(θ−φ)))|z1|²`.
pub fn area_form(cfg: &OctagonConfig) -> f64 {
    let t = cfg.trig();
    t.st * t.sp / t.s * cfg.z3.norm_sqr()
        - t.st * cfg.z2.norm_sqr()
        - t.st * t.sp / t.c0 * cfg.z1.norm_sqr()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveName {
    R1,
    R2,
    S1,
}

impl MoveName {
    /// `(image slot, original slot)` pairs: `v'_image = v_original`.
    pub fn equations(self) -> &'static [(Slot, Slot)] {
        match self {
            MoveName::R1 => &[
                (Slot::V0, Slot::V0),
                (Slot::V1, Slot::V1),
                (Slot::V3, Slot::V2),
                (Slot::M2, Slot::M3),
            ],
            MoveName::R2 => &[
                (Slot::V0, Slot::V0),
                (Slot::V2, Slot::V1),
                (Slot::M1, Slot::M2),
                (Slot::V3, Slot::V3),
            ],
            MoveName::S1 => &[
                (Slot::V3, Slot::V3),
                (Slot::V2, Slot::V2),
                (Slot::V1, Slot::V0),
                (Slot::V0, Slot::M1),
            ],
        }
    }
}

/// Largest violation of the move's vertex equations after rebuilding the
/// octagon from `m·z`.
pub fn move_vertex_residual(name: MoveName, m: &Mat3, cfg: &OctagonConfig) -> f64 {
    let before = build_octagon(cfg);
    let after = build_octagon(&cfg.transformed(m));
    name.equations()
        .iter()
        .map(|&(img, orig)| (after.get(img) - before.get(orig)).norm())
        .fold(0.0, f64::max)
}

pub fn move_vertex_equations(name: MoveName, m: &Mat3, cfg: &OctagonConfig, tol: f64) -> bool {
    move_vertex_residual(name, m, cfg) < tol
}

/// The two pairs of cone points that coalesce at each of the 14 vertices.
pub const COALESCENCE: [[(ConePoint, ConePoint); 2]; 14] = {
    use ConePoint::*;
    [
        [(C0, C1), (C2, C3)],
        [(C0, C3), (C1, C2)],
        [(Star, C0), (C2, C3)],
        [(Star, C0), (C1, C2)],
        [(Star, C0), (C1, C3)],
        [(Star, C1), (C2, C3)],
        [(Star, C1), (C0, C2)],
        [(Star, C1), (C0, C3)],
        [(Star, C3), (C0, C1)],
        [(Star, C3), (C1, C2)],
        [(Star, C3), (C0, C2)],
        [(Star, C2), (C0, C1)],
        [(Star, C2), (C1, C3)],
        [(Star, C2), (C0, C3)],
    ]
};

/// Worst gap among the named coalescing pairs for vertex `index` (1-based).
pub fn coalescence_residual(index: usize, z: &Vec3, theta: f64, phi: f64) -> f64 {
    let oct = build_octagon(&OctagonConfig::new(z, theta, phi));
    COALESCENCE[index - 1]
        .iter()
        .map(|&(a, b)| oct.cone_gap(a, b))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg(z1: C64, z2: C64, p: f64, k: f64) -> OctagonConfig {
        OctagonConfig {
            z1,
            z2,
            z3: c(1.0),
            theta: 2.0 * PI / p,
            phi: PI / k,
        }
    }

    #[test]
    fn unit_square_shoelace() {
        let sq = [c(0.0), c(1.0), C64::new(1.0, 1.0), C64::new(0.0, 1.0)];
        assert!((shoelace(&sq) - 1.0).abs() < 1e-15);
        let mut rev = sq;
        rev.reverse();
        assert!((shoelace(&rev) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn origin_config_is_a_quadrilateral() {
        let o = build_octagon(&cfg(c(0.0), c(0.0), 10.0, 5.0));
        assert!((o.get(Slot::V0) - o.get(Slot::V1)).norm() < 1e-15);
        assert!((o.get(Slot::V2) - o.get(Slot::V3)).norm() < 1e-15);
        let t = TrigConstants::new(2.0 * PI / 10.0, PI / 5.0);
        assert!((signed_area(&o) - t.st * t.sp / t.s).abs() < 1e-14);
    }

    #[test]
    fn real_config_is_mirror_symmetric() {
        let o = build_octagon(&cfg(c(0.1), c(0.2), 7.0, 3.0));
        assert!(o.get(Slot::V0).re.abs() < 1e-15 && o.get(Slot::V0).im < 0.0);
        for (a, b) in [
            (Slot::V1, Slot::M1),
            (Slot::V2, Slot::M2),
            (Slot::V3, Slot::M3),
        ] {
            assert!((o.get(a) + o.get(b).conj()).norm() < 1e-15);
        }
        assert_eq!(o.coincidences(1e-9), vec![]);
    }

    #[test]
    fn area_matches_form() {
        let c = cfg(C64::new(0.1, -0.2), C64::new(0.3, 0.05), 8.0, 3.0);
        let a = signed_area(&build_octagon(&c));
        assert!((a - area_form(&c)).abs() < 1e-14);
    }
}
