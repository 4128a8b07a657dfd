//! Complex linear algebra on ℂ³ with a Hermitian form of signature (1,2).
//!
//! Points of the complex hyperbolic plane are the vectors with positive norm
//! `⟨z,z⟩ = z*Hz > 0`, taken up to scale.

use nalgebra::{Matrix3, SymmetricEigen, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type C64 = Complex64;
pub type Vec3 = Vector3<C64>;
pub type Mat3 = Matrix3<C64>;

pub const DEFAULT_TOL: f64 = 1e-9;

/// `e^{ix}`.
pub fn cis(x: f64) -> C64 {
    C64::from_polar(1.0, x)
}

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn vec3(a: C64, b: C64, c: C64) -> Vec3 {
    Vec3::new(a, b, c)
}

/// Affine point `(z1, z2, 1)`.
pub fn affine(z1: C64, z2: C64) -> Vec3 {
    Vec3::new(z1, z2, C64::new(1.0, 0.0))
}

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("angles must satisfy 0 < theta, 0 < phi, theta + phi < pi (got {theta}, {phi})")]
    InvalidAngles { theta: f64, phi: f64 },
    #[error("point is not positive: <z,z> = {0}")]
    NotPositive(f64),
    #[error("zero vector has no projective class")]
    ZeroVector,
    #[error("point lies at infinity of the affine chart")]
    AtInfinity,
}

/// The sines that appear everywhere: `sin(θ+φ)`, `sin φ`, `sin θ` and
/// `sin φ + sin(θ−φ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigConstants {
    pub theta: f64,
    pub phi: f64,
    pub s: f64,
    pub sp: f64,
    pub st: f64,
    pub c0: f64,
}

impl TrigConstants {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self {
            theta,
            phi,
            s: (theta + phi).sin(),
            sp: phi.sin(),
            st: theta.sin(),
            c0: phi.sin() + (theta - phi).sin(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HForm {
    pub matrix: Mat3,
    pub trig: TrigConstants,
}

impl HForm {
    pub fn new(theta: f64, phi: f64) -> Result<Self, GeomError> {
        if !(theta > 0.0 && phi > 0.0 && theta + phi < std::f64::consts::PI) {
            return Err(GeomError::InvalidAngles { theta, phi });
        }
        let t = TrigConstants::new(theta, phi);
        let diag = Vec3::new(c(-t.st * t.sp / t.c0), c(-t.st), c(t.st * t.sp / t.s));
        Ok(Self {
            matrix: Mat3::from_diagonal(&diag),
            trig: t,
        })
    }

    pub fn theta(&self) -> f64 {
        self.trig.theta
    }

    pub fn phi(&self) -> f64 {
        self.trig.phi
    }

    /// `⟨z,w⟩ = w*Hz`; linear in `z`, antilinear in `w`.
    pub fn inner(&self, z: &Vec3, w: &Vec3) -> C64 {
        (w.adjoint() * self.matrix * z)[(0, 0)]
    }

    pub fn norm(&self, z: &Vec3) -> f64 {
        self.inner(z, z).re
    }

    /// Counts of positive and negative eigenvalues.
    pub fn signature(&self) -> (usize, usize) {
        let eig = SymmetricEigen::new(self.matrix);
        let pos = eig.eigenvalues.iter().filter(|&&x| x > 0.0).count();
        let neg = eig.eigenvalues.iter().filter(|&&x| x < 0.0).count();
        (pos, neg)
    }

    pub fn hermiticity_residual(&self) -> f64 {
        max_abs(&(self.matrix - self.matrix.adjoint()))
    }

    /// `cosh²(ρ/2)` for two positive points.
    pub fn cosh2_half_distance(&self, z: &Vec3, w: &Vec3) -> Result<f64, GeomError> {
        let zz = self.norm(z);
        let ww = self.norm(w);
        if zz <= 0.0 {
            return Err(GeomError::NotPositive(zz));
        }
        if ww <= 0.0 {
            return Err(GeomError::NotPositive(ww));
        }
        Ok(self.inner(z, w).norm_sqr() / (zz * ww))
    }

    pub fn distance(&self, z: &Vec3, w: &Vec3) -> Result<f64, GeomError> {
        let ch2 = self.cosh2_half_distance(z, w)?;
        Ok(2.0 * ch2.max(1.0).sqrt().acosh())
    }

    /// `|⟨z,a⟩|² / |⟨a,a⟩|`, the quantity compared when locating `z`
    /// relative to the bisector of two foci or polar vectors.
    pub fn focal_distance(&self, z: &Vec3, a: &Vec3) -> f64 {
        self.inner(z, a).norm_sqr() / self.norm(a).abs()
    }

    pub fn unitarity_residual(&self, m: &Mat3) -> f64 {
        max_abs(&(m.adjoint() * self.matrix * m - self.matrix))
    }

    /// Polar vector `H⁻¹·conj(L)` of the line `{z : L·z = 0}`, scaled to have
    /// last coordinate 1 when possible.
    pub fn polar(&self, functional: &Vec3) -> Vec3 {
        let n = Vec3::from_fn(|i, _| functional[i].conj() / self.matrix[(i, i)]);
        if n[2].norm() > 1e-12 {
            n / n[2]
        } else {
            normalize_max(&n)
        }
    }

    /// The functional `L` whose kernel is the span of `a` and `b`.
    pub fn line_through(a: &Vec3, b: &Vec3) -> Vec3 {
        a.cross(b)
    }
}

pub fn max_abs(m: &Mat3) -> f64 {
    m.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Scale so the entry of largest modulus is 1.
pub fn normalize_max(v: &Vec3) -> Vec3 {
    let i = v.icamax();
    if v[i].norm() == 0.0 {
        return *v;
    }
    v / v[i]
}

/// Scale so the last coordinate is 1; `None` near the chart's infinity.
pub fn normalize_affine(v: &Vec3) -> Option<Vec3> {
    let scale = v.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if v[2].norm() <= 1e-14 * scale.max(1e-300) {
        return None;
    }
    Some(v / v[2])
}

/// Largest 2×2 minor of `[a b]` after max-normalization of each column.
pub fn proj_residual(a: &Vec3, b: &Vec3) -> f64 {
    let a = normalize_max(a);
    let b = normalize_max(b);
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in (i + 1)..3 {
            worst = worst.max((a[i] * b[j] - a[j] * b[i]).norm());
        }
    }
    worst
}

pub fn proj_equal(a: &Vec3, b: &Vec3, tol: f64) -> bool {
    proj_residual(a, b) < tol
}

/// Distance of `m` from the scalar matrices: `max|m/λ − I|`, with `λ` the
/// diagonal entry of largest modulus.
pub fn scalar_residual(m: &Mat3) -> f64 {
    let mut k = 0;
    for i in 1..3 {
        if m[(i, i)].norm() > m[(k, k)].norm() {
            k = i;
        }
    }
    let lambda = m[(k, k)];
    if lambda.norm() == 0.0 {
        return f64::INFINITY;
    }
    max_abs(&(m / lambda - Mat3::identity()))
}

pub fn proj_equal_matrix(a: &Mat3, b: &Mat3) -> f64 {
    match b.try_inverse() {
        Some(bi) => scalar_residual(&(a * bi)),
        None => f64::INFINITY,
    }
}

pub fn conj_mat(m: &Mat3) -> Mat3 {
    m.map(|x| x.conj())
}

pub fn conj_vec(v: &Vec3) -> Vec3 {
    v.map(|x| x.conj())
}

pub fn inverse(m: &Mat3) -> Mat3 {
    m.try_inverse().expect("generator matrices are invertible")
}

/// A projective isometry, holomorphic or antiholomorphic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    #[serde(with = "mat_serde")]
    pub matrix: Mat3,
    pub antiholomorphic: bool,
}

impl Isometry {
    pub fn holo(matrix: Mat3) -> Self {
        Self {
            matrix,
            antiholomorphic: false,
        }
    }

    pub fn anti(matrix: Mat3) -> Self {
        Self {
            matrix,
            antiholomorphic: true,
        }
    }

    pub fn identity() -> Self {
        Self::holo(Mat3::identity())
    }

    pub fn apply(&self, z: &Vec3) -> Vec3 {
        if self.antiholomorphic {
            self.matrix * conj_vec(z)
        } else {
            self.matrix * z
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let rhs = if self.antiholomorphic {
            conj_mat(&other.matrix)
        } else {
            other.matrix
        };
        Isometry {
            matrix: self.matrix * rhs,
            antiholomorphic: self.antiholomorphic ^ other.antiholomorphic,
        }
    }

    pub fn inverse(&self) -> Isometry {
        let inv = inverse(&self.matrix);
        if self.antiholomorphic {
            Isometry::anti(conj_mat(&inv))
        } else {
            Isometry::holo(inv)
        }
    }

    pub fn pow(&self, n: i64) -> Isometry {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Isometry::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.compose(&base);
            out.matrix = rescale(&out.matrix);
        }
        out
    }

    /// Projective distance from `other`; infinite when the holomorphy differs.
    pub fn proj_residual(&self, other: &Isometry) -> f64 {
        if self.antiholomorphic != other.antiholomorphic {
            return f64::INFINITY;
        }
        proj_equal_matrix(&self.matrix, &other.matrix)
    }
}

fn rescale(m: &Mat3) -> Mat3 {
    let s = m.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if s > 0.0 {
        m / c(s)
    } else {
        *m
    }
}

pub fn mat_pow(m: &Mat3, n: i64) -> Mat3 {
    Isometry::holo(*m).pow(n).matrix
}

/// Least `n ≤ n_max` with `mⁿ` scalar, testing at `tol`.
pub fn proj_order_tol(m: &Mat3, n_max: u64, tol: f64) -> Option<u64> {
    let mut x = Mat3::identity();
    for n in 1..=n_max {
        x = rescale(&(x * m));
        if scalar_residual(&x) < tol {
            return Some(n);
        }
    }
    None
}

pub fn proj_order(t: &Isometry, n_max: u64) -> Option<u64> {
    if t.antiholomorphic {
        let sq = t.compose(t);
        return proj_order_tol(&sq.matrix, n_max / 2, DEFAULT_TOL).map(|n| 2 * n);
    }
    proj_order_tol(&t.matrix, n_max, DEFAULT_TOL)
}

pub const DEFAULT_ORDER_CAP: u64 = 200;

/// Complex matrices as nested `[re, im]` pairs.
pub mod mat_serde {
    use super::{Mat3, C64};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn to_rows(m: &Mat3) -> [[[f64; 2]; 3]; 3] {
        let mut out = [[[0.0; 2]; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = [m[(i, j)].re, m[(i, j)].im];
            }
        }
        out
    }

    pub fn serialize<S: Serializer>(m: &Mat3, s: S) -> Result<S::Ok, S::Error> {
        to_rows(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Mat3, D::Error> {
        let rows = <[[[f64; 2]; 3]; 3]>::deserialize(d)?;
        Ok(Mat3::from_fn(|i, j| C64::new(rows[i][j][0], rows[i][j][1])))
    }
}

pub mod vec_serde {
    use super::{Vec3, C64};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn to_pairs(v: &Vec3) -> [[f64; 2]; 3] {
        [0, 1, 2].map(|i| [v[i].re, v[i].im])
    }

    pub fn serialize<S: Serializer>(v: &Vec3, s: S) -> Result<S::Ok, S::Error> {
        to_pairs(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec3, D::Error> {
        let p = <[[f64; 2]; 3]>::deserialize(d)?;
        Ok(Vec3::from_fn(|i, _| C64::new(p[i][0], p[i][1])))
    }
}

/// A nonzero vector of ℂ³ regarded up to scale.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjectivePoint {
    #[serde(with = "vec_serde")]
    pub rep: Vec3,
}

impl ProjectivePoint {
    pub fn new(rep: Vec3) -> Result<Self, GeomError> {
        if rep.iter().all(|x| x.norm() == 0.0) {
            return Err(GeomError::ZeroVector);
        }
        Ok(Self { rep })
    }

    pub fn affine(z1: C64, z2: C64) -> Self {
        Self {
            rep: affine(z1, z2),
        }
    }

    pub fn coords(&self) -> Result<(C64, C64), GeomError> {
        let v = normalize_affine(&self.rep).ok_or(GeomError::AtInfinity)?;
        Ok((v[0], v[1]))
    }

    pub fn norm(&self, form: &HForm) -> f64 {
        form.norm(&self.rep)
    }

    pub fn is_positive(&self, form: &HForm) -> bool {
        self.norm(form) > 0.0
    }

    pub fn proj_equal(&self, other: &ProjectivePoint, tol: f64) -> bool {
        proj_equal(&self.rep, &other.rep, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn form(p: f64, k: f64) -> HForm {
        HForm::new(2.0 * PI / p, PI / k).unwrap()
    }

    #[test]
    fn form_is_hermitian_with_signature_one_two() {
        for (p, k) in [(10.0, 5.0), (3.0, 4.0), (7.0, 3.5), (18.0, 2.0)] {
            let h = form(p, k);
            assert!(h.hermiticity_residual() < 1e-12);
            assert_eq!(h.signature(), (1, 2));
        }
    }

    #[test]
    fn equal_angles_give_simple_form() {
        let th = 2.0 * PI / 10.0;
        let h = HForm::new(th, th).unwrap();
        let want = [-th.sin(), -th.sin(), th.sin() / (2.0 * th.cos())];
        for (i, w) in want.iter().enumerate() {
            assert!((h.matrix[(i, i)].re - w).abs() < 1e-14);
        }
        let e3 = affine(C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        assert!((h.norm(&e3) - th.sin() / (2.0 * th.cos())).abs() < 1e-14);
    }

    #[test]
    fn rejects_obtuse_angle_sum() {
        assert!(HForm::new(2.0, 1.5).is_err());
        assert!(HForm::new(0.0, 1.0).is_err());
    }

    #[test]
    fn inner_of_basis_vectors() {
        let h = form(8.0, 3.0);
        let e1 = vec3(c(1.0), c(0.0), c(0.0));
        let e2 = vec3(c(0.0), c(1.0), c(0.0));
        assert_eq!(h.inner(&e1, &e2), c(0.0));
    }

    #[test]
    fn proj_equal_examples() {
        let a = vec3(c(1.0), c(2.0), c(3.0));
        let b = vec3(c(2.0), c(4.0), c(6.0));
        assert!(proj_equal(&a, &b, 1e-12));
        let e1 = vec3(c(1.0), c(0.0), c(0.0));
        let e2 = vec3(c(0.0), c(1.0), c(0.0));
        assert!(!proj_equal(&e1, &e2, 1e-9));
    }

    #[test]
    fn distance_to_self_is_zero() {
        let h = form(7.0, 3.0);
        let z = affine(C64::new(0.1, -0.05), C64::new(0.1, 0.1));
        assert!(h.distance(&z, &z).unwrap() < 1e-7);
        let w = z * C64::new(-2.0, 3.0);
        assert!(h.distance(&z, &w).unwrap() < 1e-7);
        let bad = affine(c(5.0), c(0.0));
        assert!(h.distance(&bad, &z).is_err());
    }

    #[test]
    fn isometry_inverse_and_antiholomorphic_composition() {
        let m = Mat3::new(
            C64::new(1.0, 1.0),
            c(0.5),
            c(0.0),
            c(0.0),
            C64::new(0.0, 2.0),
            c(1.0),
            c(0.3),
            c(0.0),
            c(1.0),
        );
        for anti in [false, true] {
            let t = Isometry {
                matrix: m,
                antiholomorphic: anti,
            };
            let id = t.compose(&t.inverse());
            assert!(!id.antiholomorphic);
            assert!(scalar_residual(&id.matrix) < 1e-12);
            let z = vec3(C64::new(0.2, 0.7), C64::new(-1.0, 0.1), c(1.0));
            assert!(proj_equal(&t.inverse().apply(&t.apply(&z)), &z, 1e-12));
        }
    }

    #[test]
    fn order_of_diagonal_rotation() {
        let r = Mat3::from_diagonal(&vec3(c(1.0), cis(2.0 * PI / 7.0), c(1.0)));
        assert_eq!(proj_order(&Isometry::holo(r), 200), Some(7));
        let r = Mat3::from_diagonal(&vec3(c(1.0), cis(1.0), c(1.0)));
        assert_eq!(proj_order(&Isometry::holo(r), 50), None);
    }

    #[test]
    fn polar_is_orthogonal_to_the_line() {
        let h = form(9.0, 3.0);
        let a = affine(C64::new(0.1, 0.2), C64::new(-0.3, 0.0));
        let b = affine(C64::new(0.0, -0.4), C64::new(0.2, 0.5));
        let n = h.polar(&HForm::line_through(&a, &b));
        assert!(h.inner(&a, &n).norm() < 1e-12);
        assert!(h.inner(&b, &n).norm() < 1e-12);
    }
}
