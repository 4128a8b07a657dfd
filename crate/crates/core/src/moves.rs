//! The moves `R1`, `R2`, `A1`, `J`, `P`, the antiholomorphic involution `ι`,
//! the symmetric-case moves `S1`, `S2`, `K`, and the `z ↔ w` coordinate change.
//!
//! Matrices carry their scalar prefactors, so every holomorphic generator is
//! unitary for the Hermitian form of its frame.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::checks::Check;
use crate::cxgeom::{
    affine, c, cis, inverse, mat_pow, normalize_affine, proj_equal_matrix, proj_order_tol,
    proj_residual, scalar_residual, GeomError, HForm, Isometry, Mat3, TrigConstants, Vec3, C64,
    DEFAULT_ORDER_CAP,
};
use crate::params::{ExtRational, LatticeParams, Rational};

/// The side pairings and their inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    P,
    Pi,
    J,
    Ji,
    R1,
    R1i,
    R2,
    R2i,
}

impl Gen {
    pub const ALL: [Gen; 8] = [
        Gen::P,
        Gen::Pi,
        Gen::J,
        Gen::Ji,
        Gen::R1,
        Gen::R1i,
        Gen::R2,
        Gen::R2i,
    ];

    pub const PAIRINGS: [Gen; 4] = [Gen::J, Gen::P, Gen::R1, Gen::R2];

    pub fn inverse(self) -> Gen {
        match self {
            Gen::P => Gen::Pi,
            Gen::Pi => Gen::P,
            Gen::J => Gen::Ji,
            Gen::Ji => Gen::J,
            Gen::R1 => Gen::R1i,
            Gen::R1i => Gen::R1,
            Gen::R2 => Gen::R2i,
            Gen::R2i => Gen::R2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Gen::P => "P",
            Gen::Pi => "P^-1",
            Gen::J => "J",
            Gen::Ji => "J^-1",
            Gen::R1 => "R1",
            Gen::R1i => "R1^-1",
            Gen::R2 => "R2",
            Gen::R2i => "R2^-1",
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Generator matrices for one choice of angles `(θ, φ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    pub form: HForm,
    pub r1: Mat3,
    pub r2: Mat3,
    /// `R2` without the prefactor `1/((1 − e^{−iθ}) sin φ)`.
    pub r2_bracket: Mat3,
    pub r2_prefactor: C64,
    pub a1: Mat3,
    pub p: Mat3,
    pub j: Mat3,
}

impl Frame {
    pub fn new(theta: f64, phi: f64) -> Result<Self, GeomError> {
        let form = HForm::new(theta, phi)?;
        let TrigConstants { s, sp, st, c0, .. } = form.trig;
        let one = c(1.0);
        let r1 = Mat3::from_diagonal(&Vec3::new(one, cis(theta), one));
        let r2_bracket = Mat3::new(
            -cis(-phi) * st,
            c(-c0),
            c(c0),
            c(-sp),
            -cis(-theta) * sp,
            c(sp),
            c(-s),
            c(-s),
            cis(phi) * st + sp,
        );
        let r2_prefactor = one / ((one - cis(-theta)) * sp);
        let r2 = r2_bracket * r2_prefactor;
        let a1 = Mat3::from_diagonal(&Vec3::new(cis(2.0 * phi), one, one));
        let p = r1 * r2;
        let j = p * a1;
        Ok(Self {
            form,
            r1,
            r2,
            r2_bracket,
            r2_prefactor,
            a1,
            p,
            j,
        })
    }

    pub fn trig(&self) -> TrigConstants {
        self.form.trig
    }

    pub fn gen(&self, g: Gen) -> Mat3 {
        match g {
            Gen::P => self.p,
            Gen::Pi => inverse(&self.p),
            Gen::J => self.j,
            Gen::Ji => inverse(&self.j),
            Gen::R1 => self.r1,
            Gen::R1i => inverse(&self.r1),
            Gen::R2 => self.r2,
            Gen::R2i => inverse(&self.r2),
        }
    }

    /// `J` with the `R2` prefactor cleared; its trace vanishes.
    pub fn j_bracket(&self) -> Mat3 {
        self.r1 * self.r2_bracket * self.a1
    }
}

/// `S1`, `S2` and `K`, defined when the two angles agree.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMoves {
    /// Built from `(p, l)` instead of `(p, k)`, for the rows with `l = p/2`.
    pub dual: bool,
    pub frame: Frame,
    pub s1: Mat3,
    pub s2: Mat3,
    pub k: Mat3,
}

impl SymmetricMoves {
    pub fn new(theta: f64, dual: bool) -> Result<Self, GeomError> {
        let frame = Frame::new(theta, theta)?;
        let one = c(1.0);
        let s1 = Mat3::from_diagonal(&Vec3::new(cis(theta), one, one));
        let s2 = frame.p * s1 * inverse(&frame.p);
        let k = frame.r1 * frame.r2 * s1;
        Ok(Self {
            dual,
            frame,
            s1,
            s2,
            k,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub params: LatticeParams,
    pub frame: Frame,
    pub iota: Isometry,
    pub symmetric: Option<SymmetricMoves>,
}

impl GeneratorSet {
    pub fn form(&self) -> &HForm {
        &self.frame.form
    }

    pub fn trig(&self) -> TrigConstants {
        self.frame.form.trig
    }

    pub fn gen(&self, g: Gen) -> Mat3 {
        self.frame.gen(g)
    }

    pub fn p_inv(&self) -> Mat3 {
        inverse(&self.frame.p)
    }

    /// A z-coordinate matrix expressed in w-coordinates.
    pub fn in_w(&self, m: &Mat3) -> Mat3 {
        self.p_inv() * m * self.frame.p
    }

    /// `w = P⁻¹ z`, normalized to `w3 = 1` when finite.
    pub fn to_w(&self, z: &Vec3) -> Vec3 {
        let w = self.p_inv() * z;
        normalize_affine(&w).unwrap_or(w)
    }

    pub fn to_z(&self, w: &Vec3) -> Vec3 {
        let z = self.frame.p * w;
        normalize_affine(&z).unwrap_or(z)
    }

    /// The affine formulas for `(w1, w2)` in terms of `(z1, z2)`.
    pub fn to_w_formula(&self, z1: C64, z2: C64) -> Result<(C64, C64), GeomError> {
        let TrigConstants {
            theta,
            phi,
            s,
            sp,
            st,
            c0,
        } = self.trig();
        let den = -z1 * s - cis(-theta) * z2 * s + sp + cis(-phi) * st;
        if den.norm() < 1e-14 {
            return Err(GeomError::AtInfinity);
        }
        let w1 = (-cis(phi) * z1 * st - cis(-theta) * z2 * c0 + c0) / den;
        let w2 = (-z1 * sp - z2 * sp + sp) / den;
        Ok((w1, w2))
    }

    /// The inverse affine formulas.
    pub fn to_z_formula(&self, w1: C64, w2: C64) -> Result<(C64, C64), GeomError> {
        let TrigConstants {
            theta,
            phi,
            s,
            sp,
            st,
            c0,
        } = self.trig();
        let den = -w1 * s - w2 * s + sp + cis(phi) * st;
        if den.norm() < 1e-14 {
            return Err(GeomError::AtInfinity);
        }
        let z1 = (-cis(-phi) * w1 * st - w2 * c0 + c0) / den;
        let z2 = (-cis(theta) * w1 * sp - w2 * sp + cis(theta) * sp) / den;
        Ok((z1, z2))
    }

    pub fn apply_iota(&self, z: &Vec3) -> Vec3 {
        self.iota.apply(z)
    }

    /// `ι` in affine form: `(w̄1, w̄2·e^{iθ})`.
    pub fn iota_formula(&self, z: &Vec3) -> Option<Vec3> {
        let w = normalize_affine(&(self.p_inv() * z))?;
        Some(affine(w[0].conj(), w[1].conj() * cis(self.trig().theta)))
    }
}

pub fn build_generators(params: &LatticeParams) -> GeneratorSet {
    let theta = params.theta.radians();
    let phi = params.phi.radians();
    let frame = Frame::new(theta, phi).expect("lattice angles are admissible");
    let iota = Isometry::anti(frame.p * frame.r1);
    let symmetric = if !params.symmetric {
        None
    } else {
        // Either k = p/2 already, or l = p/2 and the moves live in the frame (p, l).
        Some(SymmetricMoves::new(theta, !params.angles_equal()).expect("admissible"))
    };
    GeneratorSet {
        params: params.clone(),
        frame,
        iota,
        symmetric,
    }
}

/// Check that `mⁿ` is scalar.
fn power_identity(name: &str, m: &Mat3, n: i64, tol: f64) -> Check {
    Check::residual(name, scalar_residual(&mat_pow(m, n)), tol)
}

fn same(name: &str, a: &Mat3, b: &Mat3, tol: f64) -> Check {
    Check::residual(name, proj_equal_matrix(a, b), tol)
}

fn iso_same(name: &str, a: &Isometry, b: &Isometry, tol: f64) -> Check {
    Check::residual(name, a.proj_residual(b), tol)
}

/// `3d` as an extended rational.
pub fn three_d(params: &LatticeParams) -> ExtRational {
    match params.d.finite() {
        Some(d) => ExtRational::from_ratio(d * 3),
        None => ExtRational::INFINITY,
    }
}

/// The absolute value, when it is a finite integer.
fn abs_integer(x: ExtRational) -> Option<i64> {
    let r = x.finite()?;
    r.is_integer().then(|| r.numer().abs())
}

/// Every relation among the generators, as a list of checks.
pub fn verify_relations(gens: &GeneratorSet, tol: f64) -> Vec<Check> {
    let params = &gens.params;
    let f = &gens.frame;
    let p_int = params.p_int();
    let mut out = Vec::new();

    for (name, m) in [
        ("R1", f.r1),
        ("R2", f.r2),
        ("A1", f.a1),
        ("J", f.j),
        ("P", f.p),
    ] {
        out.push(Check::residual(
            format!("unitary {name}"),
            f.form.unitarity_residual(&m),
            1e-10,
        ));
    }
    out.push(Check::residual(
        "trace of bracketed J vanishes",
        f.j_bracket().trace().norm(),
        tol,
    ));
    out.push(Check::residual(
        "P = R1 R2",
        crate::cxgeom::max_abs(&(f.p - f.r1 * f.r2)),
        1e-12,
    ));
    out.push(Check::residual(
        "J = P A1",
        crate::cxgeom::max_abs(&(f.j - f.p * f.a1)),
        1e-12,
    ));
    out.push(power_identity("J^3 ~ I", &f.j, 3, tol));
    out.push(power_identity("R1^p ~ I", &f.r1, p_int, tol));
    out.push(power_identity("R2^p ~ I", &f.r2, p_int, tol));
    let pij = inverse(&f.p) * f.j;
    out.push(same("P^-1 J ~ A1", &pij, &f.a1, tol));
    if let Some(k) = params.k.positive_integer() {
        out.push(power_identity("(P^-1 J)^k ~ I", &pij, k as i64, tol));
    }
    let r2r1j = f.r2 * f.r1 * f.j;
    match three_d(params).positive_integer() {
        Some(n) => out.push(power_identity("P^(3d) ~ I", &f.p, n as i64, tol)),
        None => {
            if let Some(n) = abs_integer(three_d(params)) {
                out.push(power_identity("P^(3|d|) ~ I", &f.p, n, tol).informational());
            }
        }
    }
    match params.l.positive_integer() {
        Some(n) => out.push(power_identity("(R2 R1 J)^l ~ I", &r2r1j, n as i64, tol)),
        None => {
            if let Some(n) = abs_integer(params.l) {
                out.push(power_identity("(R2 R1 J)^|l| ~ I", &r2r1j, n, tol).informational());
            }
        }
    }
    out.push(same(
        "R2 ~ P R1 P^-1",
        &f.r2,
        &(f.p * f.r1 * inverse(&f.p)),
        tol,
    ));
    out.push(same(
        "R2 ~ J R1 J^-1",
        &f.r2,
        &(f.j * f.r1 * inverse(&f.j)),
        tol,
    ));

    let iota = &gens.iota;
    let h = Isometry::holo;
    out.push(iso_same(
        "iota^2 ~ I",
        &iota.compose(iota),
        &Isometry::identity(),
        tol,
    ));
    for (name, a, b) in [
        ("J iota = iota J^-1", f.j, inverse(&f.j)),
        ("P iota = iota P^-1", f.p, inverse(&f.p)),
        ("R1 iota = iota R2^-1", f.r1, inverse(&f.r2)),
        ("R2 iota = iota R1^-1", f.r2, inverse(&f.r1)),
    ] {
        out.push(iso_same(
            name,
            &h(a).compose(iota),
            &iota.compose(&h(b)),
            tol,
        ));
    }

    if let Some(sym) = &gens.symmetric {
        out.extend(verify_symmetric(sym, p_int, tol));
    }
    out
}

/// Relations among `S1`, `S2`, `K` in their own frame.
pub fn verify_symmetric(sym: &SymmetricMoves, p: i64, tol: f64) -> Vec<Check> {
    let f = &sym.frame;
    let (s1, s2, k) = (sym.s1, sym.s2, sym.k);
    let ki = inverse(&k);
    let k2 = k * k;
    let k3 = k2 * k;
    let mut out = Vec::new();
    for (name, m) in [("S1", s1), ("S2", s2), ("K", k)] {
        out.push(Check::residual(
            format!("unitary {name}"),
            f.form.unitarity_residual(&m),
            1e-10,
        ));
    }
    out.push(Check::residual(
        "S1 R1 = R1 S1",
        crate::cxgeom::max_abs(&(s1 * f.r1 - f.r1 * s1)),
        tol,
    ));
    out.push(same(
        "S1 R2 S1 ~ R2 S1 R2",
        &(s1 * f.r2 * s1),
        &(f.r2 * s1 * f.r2),
        tol,
    ));
    out.push(power_identity("K^4 ~ I", &k, 4, tol));
    out.push(same(
        "S1 ~ K^2 R1 K^-2",
        &s1,
        &(k2 * f.r1 * inverse(&k2)),
        tol,
    ));
    out.push(same(
        "S2 ~ K^3 R1 K^-3",
        &s2,
        &(k3 * f.r1 * inverse(&k3)),
        tol,
    ));
    out.push(same("S1^2 ~ A1", &(s1 * s1), &f.a1, tol));
    out.push(same("R2 ~ K R1 K^-1", &f.r2, &(k * f.r1 * ki), tol));
    out.push(power_identity("S1^p ~ I", &s1, p, tol));
    out.push(power_identity("(K R1)^3 ~ I", &(k * f.r1), 3, tol));
    let (det, tr) = k_det_trace(sym, -1);
    out.push(Check::info(
        "e^-i.theta K: det and trace",
        format!("det {det:.6}, trace {tr:.6}"),
    ));
    out
}

/// Determinant and trace of `e^{±iθ}·K`.
pub fn k_det_trace(sym: &SymmetricMoves, sign: i32) -> (C64, C64) {
    let m = sym.k * cis(sign as f64 * sym.frame.form.theta());
    (m.determinant(), m.trace())
}

/// Projective order at the default cap, with a tolerance loose enough for
/// powers up to the cap.
pub fn order_of(m: &Mat3) -> Option<u64> {
    proj_order_tol(m, DEFAULT_ORDER_CAP, 1e-8)
}

/// Order claims for one row: `(name, measured, expected, active)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderClaim {
    pub name: String,
    pub measured: Option<u64>,
    pub expected: Option<u64>,
    pub active: bool,
}

impl OrderClaim {
    pub fn holds(&self) -> bool {
        !self.active || (self.expected.is_some() && self.measured == self.expected)
    }

    pub fn to_check(&self) -> Check {
        let detail = format!(
            "measured {}, expected {}",
            self.measured.map_or("none".into(), |n| n.to_string()),
            self.expected.map_or("none".into(), |n| n.to_string())
        );
        let c = Check::boolean(format!("order {}", self.name), self.holds()).with_detail(detail);
        if self.active {
            c
        } else {
            c.informational()
        }
    }
}

fn claim(name: &str, m: &Mat3, expected: Option<u64>, active: bool) -> OrderClaim {
    OrderClaim {
        name: name.to_string(),
        measured: order_of(m),
        expected,
        active,
    }
}

pub fn order_claims(gens: &GeneratorSet) -> Vec<OrderClaim> {
    let params = &gens.params;
    let f = &gens.frame;
    let p = params.p_int() as u64;
    let mut out = vec![
        claim("J", &f.j, Some(3), true),
        claim("R1", &f.r1, Some(p), true),
        claim("R2", &f.r2, Some(p), true),
    ];
    let pij = inverse(&f.p) * f.j;
    match params.k.positive_integer() {
        Some(k) => out.push(claim("P^-1 J", &pij, Some(k), true)),
        None => {
            let twice = params.k_ratio() * 2;
            out.push(claim("P^-1 J", &pij, Some(*twice.numer() as u64), false));
        }
    }
    let td = three_d(params);
    out.push(claim(
        "P",
        &f.p,
        abs_integer(td).map(|n| n as u64),
        td.positive_integer().is_some(),
    ));
    out.push(claim(
        "R2 R1 J",
        &(f.r2 * f.r1 * f.j),
        abs_integer(params.l).map(|n| n as u64),
        params.l.positive_integer().is_some(),
    ));
    if let Some(sym) = &gens.symmetric {
        out.push(claim("K", &sym.k, Some(4), true));
        out.push(claim("S1", &sym.s1, Some(p), true));
    }
    out
}

/// `2k` for half-integer `k`.
pub fn doubled_k(params: &LatticeParams) -> Rational {
    params.k_ratio() * 2
}

pub fn proj_equal_points(a: &Vec3, b: &Vec3, tol: f64) -> bool {
    proj_residual(a, b) < tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{derive_params, TABLE};

    fn gens(p: i64, kn: i64, kd: i64) -> GeneratorSet {
        build_generators(&derive_params(Rational::from_integer(p), Rational::new(kn, kd)).unwrap())
    }

    #[test]
    fn r1_is_diagonal_rotation() {
        let g = gens(7, 3, 1);
        let th = 2.0 * std::f64::consts::PI / 7.0;
        assert!((g.frame.r1[(1, 1)] - cis(th)).norm() < 1e-15);
        assert_eq!(g.frame.r1[(0, 0)], c(1.0));
        assert_eq!(g.frame.r1[(0, 1)], c(0.0));
    }

    #[test]
    fn all_relations_hold_on_every_row() {
        for e in TABLE.iter() {
            let g = build_generators(&e.params());
            for chk in verify_relations(&g, 1e-9) {
                assert!(!chk.failed(), "{:?}: {}", e, chk);
            }
        }
    }

    #[test]
    fn symmetric_moves_only_on_symmetric_rows() {
        assert!(gens(7, 3, 1).symmetric.is_none());
        let g = gens(10, 5, 1);
        assert!(!g.symmetric.as_ref().unwrap().dual);
        let g = gens(12, 4, 1);
        assert!(g.symmetric.as_ref().unwrap().dual);
    }

    #[test]
    fn ten_five_k_has_unit_det_and_trace_after_negative_phase() {
        let g = gens(10, 5, 1);
        let (det, tr) = k_det_trace(g.symmetric.as_ref().unwrap(), -1);
        assert!((det - c(1.0)).norm() < 1e-10);
        assert!((tr - c(1.0)).norm() < 1e-10);
    }

    #[test]
    fn w_formula_matches_matrix() {
        let g = gens(8, 3, 1);
        let z1 = C64::new(0.1, -0.2);
        let z2 = C64::new(0.05, 0.3);
        let w = g.to_w(&affine(z1, z2));
        let (w1, w2) = g.to_w_formula(z1, z2).unwrap();
        assert!(proj_residual(&w, &affine(w1, w2)) < 1e-12);
        let (y1, y2) = g.to_z_formula(w1, w2).unwrap();
        assert!((y1 - z1).norm() < 1e-12 && (y2 - z2).norm() < 1e-12);
    }

    #[test]
    fn iota_fixes_origin_image() {
        let g = gens(10, 5, 1);
        let z = affine(C64::new(0.2, -0.1), C64::new(0.1, 0.2));
        let a = g.apply_iota(&z);
        let b = g.iota_formula(&z).unwrap();
        assert!(proj_residual(&a, &b) < 1e-12);
        assert!(proj_residual(&g.apply_iota(&a), &z) < 1e-12);
    }

    #[test]
    fn seven_three_orders() {
        let g = gens(7, 3, 1);
        for cl in order_claims(&g) {
            assert!(cl.holds(), "{:?}", cl);
        }
        let p = order_claims(&g)
            .into_iter()
            .find(|c| c.name == "P")
            .unwrap();
        assert_eq!(p.measured, Some(42));
    }
}
