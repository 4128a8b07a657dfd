//! The ten complex lines `L*0 … L23` on which the vertices sit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cxgeom::{c, cis, normalize_max, proj_residual, Vec3};
use crate::moves::GeneratorSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LineLabel {
    S0,
    S1,
    S2,
    S3,
    L01,
    L02,
    L03,
    L12,
    L13,
    L23,
}

impl LineLabel {
    pub const ALL: [LineLabel; 10] = [
        LineLabel::S0,
        LineLabel::S1,
        LineLabel::S2,
        LineLabel::S3,
        LineLabel::L01,
        LineLabel::L02,
        LineLabel::L03,
        LineLabel::L12,
        LineLabel::L13,
        LineLabel::L23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LineLabel::S0 => "L*0",
            LineLabel::S1 => "L*1",
            LineLabel::S2 => "L*2",
            LineLabel::S3 => "L*3",
            LineLabel::L01 => "L01",
            LineLabel::L02 => "L02",
            LineLabel::L03 => "L03",
            LineLabel::L12 => "L12",
            LineLabel::L13 => "L13",
            LineLabel::L23 => "L23",
        }
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A complex line given by linear functionals `L` with `L·(x1, x2, 1) = 0`
/// in both coordinate systems.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexLine {
    pub label: LineLabel,
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub z_equation: Vec3,
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub w_equation: Vec3,
    /// Polar vector in z-coordinates.
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub polar_z: Vec3,
    /// Polar vector in w-coordinates.
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub polar_w: Vec3,
}

impl ComplexLine {
    pub fn z_residual(&self, z: &Vec3) -> f64 {
        functional_residual(&self.z_equation, z)
    }

    pub fn w_residual(&self, w: &Vec3) -> f64 {
        functional_residual(&self.w_equation, w)
    }
}

/// `|L·v|` with both sides scaled to unit max-modulus.
pub fn functional_residual(l: &Vec3, v: &Vec3) -> f64 {
    let l = normalize_max(l);
    let v = normalize_max(v);
    (l[0] * v[0] + l[1] * v[1] + l[2] * v[2]).norm()
}

pub fn line_table(gens: &GeneratorSet) -> Vec<ComplexLine> {
    let t = gens.trig();
    let (th, ph) = (t.theta, t.phi);
    let r = c(t.st / t.c0);
    let one = c(1.0);
    let zero = c(0.0);
    let v = Vec3::new;
    let rows = [
        (
            LineLabel::S0,
            v(one, zero, c(-t.c0 / t.s)),
            v(one, zero, c(-t.c0 / t.s)),
        ),
        (
            LineLabel::S1,
            v(one, zero, -cis(-ph) * (t.st / t.s)),
            v(zero, one, -cis(th) * (t.sp / t.s)),
        ),
        (
            LineLabel::S2,
            v(zero, one, -cis(th) * (t.sp / t.s)),
            v(zero, one, c(-t.sp / t.s)),
        ),
        (
            LineLabel::S3,
            v(zero, one, c(-t.sp / t.s)),
            v(one, zero, -cis(ph) * (t.st / t.s)),
        ),
        (
            LineLabel::L01,
            v(one, zero, zero),
            v(r * cis(-ph), one, -one),
        ),
        (
            LineLabel::L02,
            v(r * cis(ph), one, -one),
            v(r * cis(-ph), cis(-th), -one),
        ),
        (
            LineLabel::L03,
            v(r * cis(ph), cis(-th), -one),
            v(one, zero, zero),
        ),
        (LineLabel::L12, v(one, one, -one), v(zero, one, zero)),
        (LineLabel::L23, v(zero, one, zero), v(one, cis(-th), -one)),
        (LineLabel::L13, v(one, cis(-th), -one), v(one, one, -one)),
    ];
    let form = gens.form();
    rows.into_iter()
        .map(|(label, z_equation, w_equation)| ComplexLine {
            label,
            z_equation,
            w_equation,
            polar_z: form.polar(&z_equation),
            polar_w: form.polar(&w_equation),
        })
        .collect()
}

pub fn line(lines: &[ComplexLine], label: LineLabel) -> &ComplexLine {
    lines
        .iter()
        .find(|l| l.label == label)
        .expect("all ten lines present")
}

/// The z-functional pulled back from the w-functional, `Lw·P⁻¹`, compared
/// projectively with the tabulated z-functional.
pub fn equation_consistency(gens: &GeneratorSet, l: &ComplexLine) -> f64 {
    let pulled = (l.w_equation.transpose() * gens.p_inv()).transpose();
    proj_residual(&pulled, &l.z_equation)
}

/// The polar vector in w-coordinates, pushed to z-coordinates, compared with
/// the z-polar.
pub fn polar_consistency(gens: &GeneratorSet, l: &ComplexLine) -> f64 {
    proj_residual(&(gens.frame.p * l.polar_w), &l.polar_z)
}
