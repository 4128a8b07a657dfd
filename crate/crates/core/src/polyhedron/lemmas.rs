//! Sign equivalences locating a point relative to each bisector, modulus
//! bounds on the affine coordinates, and the ξ-coordinates near `F(J, R2⁻¹)`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cxgeom::{
    affine, cis, normalize_affine, GeomError, HForm, Mat3, TrigConstants, Vec3, C64,
};
use crate::moves::{Gen, GeneratorSet};

use super::bisectors::{star_polars, StarPolars};
use super::lines::ComplexLine;

/// Which chart a sign condition reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chart {
    Z,
    W,
}

/// One of the eight equivalences: `sign condition ⇔ d(a) < d(b)`, where
/// `d(v) = |⟨x,v⟩|²/ν` and `x` is the point in the given chart.
///
/// `ν` is the reduced norm of the star polar `v` comes from, so `d` stays
/// finite on rows where the polars become null.
#[derive(Clone, Debug, PartialEq)]
pub struct SideInequality {
    pub side: Gen,
    pub chart: Chart,
    pub statement: &'static str,
    pub a: Vec3,
    pub b: Vec3,
    pub a_weight: f64,
    pub b_weight: f64,
    /// Rotation `α` and strict sign: the condition is `sign·Im(e^{iα}x) > 0`.
    coord: usize,
    rotation: f64,
    sign: f64,
}

impl SideInequality {
    pub fn condition_value(&self, x: &Vec3) -> f64 {
        self.sign * (cis(self.rotation) * x[self.coord]).im
    }

    /// `d(b) − d(a)`; positive exactly when the distance comparison holds.
    pub fn distance_margin(&self, form: &HForm, x: &Vec3) -> f64 {
        form.inner(x, &self.b).norm_sqr() / self.b_weight
            - form.inner(x, &self.a).norm_sqr() / self.a_weight
    }
}

/// `⟨n,n⟩` of the star polars (normalized to `n3 = 1`) with the factor that
/// vanishes on degenerate rows removed: `c0 − s` for `n*0`, `sinφ − s` for
/// the others. Indexed `[n*0, n*1, n*2, n*3]` in z- and w-coordinates.
pub fn reduced_polar_norms(t: &TrigConstants) -> ([f64; 4], [f64; 4]) {
    let n0 = t.st * t.sp / (t.c0 * t.s);
    let n1 = t.sp * t.sp / (t.s * t.st);
    let n2 = t.st / t.s;
    ([n0, n1, n2, n2], [n0, n2, n2, n1])
}

pub fn side_inequalities(gens: &GeneratorSet, lines: &[ComplexLine]) -> Vec<SideInequality> {
    let StarPolars { z: nz, w: nw } = star_polars(lines);
    let t = gens.trig();
    let (th, ph) = (t.theta, t.phi);
    let (vz, vw) = reduced_polar_norms(&t);
    let g = |x| gens.gen(x);
    let w = |m: Mat3| gens.in_w(&m);
    let mk = |side, chart, statement, (a, a_weight), (b, b_weight), coord, rotation, sign| {
        SideInequality {
            side,
            chart,
            statement,
            a,
            b,
            a_weight,
            b_weight,
            coord,
            rotation,
            sign,
        }
    };
    vec![
        mk(
            Gen::P,
            Chart::Z,
            "Im(z1) < 0",
            (nz[1], vz[1]),
            (g(Gen::Pi) * nz[3], vz[3]),
            0,
            0.0,
            -1.0,
        ),
        mk(
            Gen::Pi,
            Chart::W,
            "Im(w1) > 0",
            (nw[3], vw[3]),
            (w(g(Gen::P)) * nw[1], vw[1]),
            0,
            0.0,
            1.0,
        ),
        mk(
            Gen::J,
            Chart::Z,
            "Im(e^(i.phi) z1) > 0",
            (nz[0], vz[0]),
            (g(Gen::Ji) * nz[0], vz[0]),
            0,
            ph,
            1.0,
        ),
        mk(
            Gen::Ji,
            Chart::W,
            "Im(e^(-i.phi) w1) < 0",
            (nw[0], vw[0]),
            (w(g(Gen::J)) * nw[0], vw[0]),
            0,
            -ph,
            -1.0,
        ),
        mk(
            Gen::R1,
            Chart::Z,
            "Im(z2) > 0",
            (nz[2], vz[2]),
            (g(Gen::R1i) * nz[3], vz[3]),
            1,
            0.0,
            1.0,
        ),
        mk(
            Gen::R1i,
            Chart::Z,
            "Im(e^(-i.theta) z2) < 0",
            (nz[3], vz[3]),
            (g(Gen::R1) * nz[2], vz[2]),
            1,
            -th,
            -1.0,
        ),
        mk(
            Gen::R2,
            Chart::W,
            "Im(w2) > 0",
            (nw[1], vw[1]),
            (w(g(Gen::R2i)) * nw[2], vw[2]),
            1,
            0.0,
            1.0,
        ),
        mk(
            Gen::R2i,
            Chart::W,
            "Im(e^(-i.theta) w2) < 0",
            (nw[2], vw[2]),
            (w(g(Gen::R2)) * nw[1], vw[1]),
            1,
            -th,
            -1.0,
        ),
    ]
}

/// The point in the chart the inequality reads.
pub fn chart_point(gens: &GeneratorSet, chart: Chart, z: &Vec3) -> Option<Vec3> {
    match chart {
        Chart::Z => normalize_affine(z),
        Chart::W => normalize_affine(&(gens.p_inv() * z)),
    }
}

/// Whether both sides of the equivalence agree at `z`.
pub fn side_inequality_check(
    gens: &GeneratorSet,
    ineq: &SideInequality,
    z: &Vec3,
) -> Result<bool, GeomError> {
    let n = gens.form().norm(z);
    if n <= 0.0 {
        return Err(GeomError::NotPositive(n));
    }
    let x = chart_point(gens, ineq.chart, z).ok_or(GeomError::AtInfinity)?;
    let lhs = ineq.condition_value(&x) > 0.0;
    let rhs = ineq.distance_margin(gens.form(), &x) > 0.0;
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaBounds {
    /// `|z1|², |w1|² ≤ (sinφ + sin(θ−φ))/sin(θ+φ)`.
    pub first_squares: bool,
    /// `|z2|², |w2|² ≤ sinφ/sin(θ+φ)`.
    pub second_squares: bool,
    /// `|z1|, |w1| < 1`, asserted when `p > 6`.
    pub first_below_one: Option<bool>,
    /// `|z2|, |w2| ≤ 1`, asserted when `l ≥ 0`.
    pub second_at_most_one: Option<bool>,
}

impl LemmaBounds {
    pub fn all(&self) -> bool {
        self.first_squares
            && self.second_squares
            && self.first_below_one.unwrap_or(true)
            && self.second_at_most_one.unwrap_or(true)
    }
}

pub fn lemma_bounds_check(
    gens: &GeneratorSet,
    z: &Vec3,
    tol: f64,
) -> Result<LemmaBounds, GeomError> {
    let n = gens.form().norm(z);
    if n <= 0.0 {
        return Err(GeomError::NotPositive(n));
    }
    let zn = normalize_affine(z).ok_or(GeomError::AtInfinity)?;
    let wn = normalize_affine(&(gens.p_inv() * z)).ok_or(GeomError::AtInfinity)?;
    let t = gens.trig();
    let params = &gens.params;
    let m1 = zn[0].norm().max(wn[0].norm());
    let m2 = zn[1].norm().max(wn[1].norm());
    let l_nonnegative = params.l.is_infinite() || params.l.numer() >= 0;
    Ok(LemmaBounds {
        first_squares: m1 * m1 <= t.c0 / t.s + tol,
        second_squares: m2 * m2 <= t.sp / t.s + tol,
        first_below_one: (params.p_int() > 6).then_some(m1 < 1.0),
        second_at_most_one: l_nonnegative.then_some(m2 <= 1.0 + tol),
    })
}

/// `ξ1 = (sinφ − sin(θ+φ)z2)/(1 − z2)`, `ξ2 = z1(sin(θ+φ) − sinφ)/(1 − z2)`.
pub fn xi_coords(gens: &GeneratorSet, z: &Vec3) -> Result<(C64, C64), GeomError> {
    let zn = normalize_affine(z).ok_or(GeomError::AtInfinity)?;
    let t = gens.trig();
    let den = C64::new(1.0, 0.0) - zn[1];
    if den.norm() < 1e-14 {
        return Err(GeomError::AtInfinity);
    }
    let xi1 = (C64::new(t.sp, 0.0) - zn[1] * t.s) / den;
    let xi2 = zn[0] * (t.s - t.sp) / den;
    Ok((xi1, xi2))
}

/// Angular defect of `arg ξ1(J R2 z) = −2π/l` at `z = (z1, e^{iθ}u, 1)`,
/// wrapped to `(−π, π]`.
pub fn xi_rotation_defect(gens: &GeneratorSet, z1: C64, u: f64) -> Result<f64, GeomError> {
    let l = gens
        .params
        .l
        .finite()
        .ok_or(GeomError::AtInfinity)
        .map(|l| *l.numer() as f64 / *l.denom() as f64)?;
    let t = gens.trig();
    let z = affine(z1, cis(t.theta) * u);
    let image = gens.frame.j * gens.frame.r2 * z;
    let (xi1, _) = xi_coords(gens, &image)?;
    let psi = 2.0 * std::f64::consts::PI / l;
    let mut d = xi1.arg() + psi;
    d = (d + std::f64::consts::PI).rem_euclid(2.0 * std::f64::consts::PI) - std::f64::consts::PI;
    Ok(d.abs())
}

/// Upper end of the admissible `u` range for the ξ rotation check.
pub fn xi_u_max(gens: &GeneratorSet) -> f64 {
    let t = gens.trig();
    (t.sp / t.s).min(1.0)
}

/// Uniform random positive point with `|z1| ≤ r1`, `|z2| ≤ r2`, by rejection.
pub fn random_positive_point<R: Rng>(gens: &GeneratorSet, rng: &mut R) -> Vec3 {
    let t = gens.trig();
    let r1 = (t.c0 / t.s).sqrt();
    let r2 = (t.sp / t.s).sqrt();
    loop {
        let z1 = C64::new(rng.random_range(-r1..r1), rng.random_range(-r1..r1));
        let z2 = C64::new(rng.random_range(-r2..r2), rng.random_range(-r2..r2));
        let z = affine(z1, z2);
        if gens.form().norm(&z) > 0.0 {
            return z;
        }
    }
}
