//! Coordinates of the fourteen vertices `z1 … z14` of `D`.

use serde::{Deserialize, Serialize};

use crate::conemetric::{ConePoint, COALESCENCE};
use crate::cxgeom::{affine, c, cis, proj_residual, Vec3, C64};
use crate::moves::GeneratorSet;

use super::lines::{line, ComplexLine, LineLabel};

/// The two lines through each vertex, indexed by vertex number minus one.
pub const VERTEX_LINES: [(LineLabel, LineLabel); 14] = {
    use LineLabel::*;
    [
        (L01, L23),
        (L03, L12),
        (S0, L23),
        (S0, L12),
        (S0, L13),
        (S1, L23),
        (S1, L02),
        (S1, L03),
        (S3, L01),
        (S3, L12),
        (S3, L02),
        (S2, L01),
        (S2, L13),
        (S2, L03),
    ]
};

/// Image of vertex `i` under `ι`, indexed by `i − 1`.
pub const IOTA_PERMUTATION: [usize; 14] = [2, 1, 4, 3, 5, 10, 11, 9, 8, 6, 7, 14, 13, 12];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexEntry {
    /// 1-based label.
    pub index: usize,
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub z_rep: Vec3,
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub w_rep: Vec3,
    pub lines: (LineLabel, LineLabel),
    pub cone_pairs: [(ConePoint, ConePoint); 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexTable {
    pub vertices: Vec<VertexEntry>,
}

impl VertexTable {
    pub fn get(&self, index: usize) -> &VertexEntry {
        &self.vertices[index - 1]
    }

    pub fn z(&self, index: usize) -> Vec3 {
        self.vertices[index - 1].z_rep
    }

    /// The vertex projectively equal to `v`, if any.
    pub fn find(&self, v: &Vec3, tol: f64) -> Option<usize> {
        self.vertices
            .iter()
            .find(|e| proj_residual(&e.z_rep, v) < tol)
            .map(|e| e.index)
    }
}

pub fn vertex_table(gens: &GeneratorSet) -> VertexTable {
    let t = gens.trig();
    let (th, ph) = (t.theta, t.phi);
    let (s, sp, st, c0) = (t.s, t.sp, t.st, t.c0);
    let a = c(c0 / s);
    let b = c(sp * (2.0 * th.cos() - 1.0) / s);
    let z7 = c(1.0 - st * st / (s * c0));
    let q = cis(-ph) * (c0 / st * (1.0 - sp / s));
    let qw = cis(ph) * (c0 / st * (1.0 - sp / s));
    let zero = c(0.0);
    let e_th = cis(th);
    let d_minus = cis(-ph) * st + sp;
    let d_plus = cis(ph) * st + sp;
    let sps = c(sp / s);
    let ssp = c((s - sp) / s);
    let zrows: [(C64, C64); 14] = [
        (zero, zero),
        (c(c0) / d_plus, e_th * sp / d_plus),
        (a, zero),
        (a, b),
        (a, e_th * b),
        (cis(-ph) * (st / s), zero),
        (cis(-ph) * (st / s), z7),
        (cis(-ph) * (st / s), e_th * z7),
        (zero, sps),
        (ssp, sps),
        (q, sps),
        (zero, e_th * sps),
        (ssp, e_th * sps),
        (q, e_th * sps),
    ];
    let wrows: [(C64, C64); 14] = [
        (c(c0) / d_minus, c(sp) / d_minus),
        (zero, zero),
        (a, e_th * b),
        (a, zero),
        (a, b),
        (ssp, e_th * sps),
        (qw, e_th * sps),
        (zero, e_th * sps),
        (cis(ph) * (st / s), z7),
        (cis(ph) * (st / s), zero),
        (cis(ph) * (st / s), e_th * z7),
        (qw, sps),
        (ssp, sps),
        (zero, sps),
    ];
    let vertices = (0..14)
        .map(|i| VertexEntry {
            index: i + 1,
            z_rep: affine(zrows[i].0, zrows[i].1),
            w_rep: affine(wrows[i].0, wrows[i].1),
            lines: VERTEX_LINES[i],
            cone_pairs: COALESCENCE[i],
        })
        .collect();
    VertexTable { vertices }
}

/// Residuals for one vertex: both z-equations, both w-equations, and
/// `P⁻¹(z-rep) ~ w-rep`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexResiduals {
    pub z_lines: f64,
    pub w_lines: f64,
    pub coordinate_change: f64,
    pub norm: f64,
}

pub fn vertex_residuals(
    gens: &GeneratorSet,
    lines: &[ComplexLine],
    v: &VertexEntry,
) -> VertexResiduals {
    let (la, lb) = v.lines;
    let (a, b) = (line(lines, la), line(lines, lb));
    VertexResiduals {
        z_lines: a.z_residual(&v.z_rep).max(b.z_residual(&v.z_rep)),
        w_lines: a.w_residual(&v.w_rep).max(b.w_residual(&v.w_rep)),
        coordinate_change: proj_residual(&(gens.p_inv() * v.z_rep), &v.w_rep),
        norm: gens.form().norm(&v.z_rep),
    }
}

/// The vertex labels that survive in a collapsed case: each merged triple
/// keeps its smallest label.
pub fn collapsed_representative(index: usize, z345: bool, outer: bool) -> usize {
    match index {
        4 | 5 if z345 => 3,
        7 | 8 if outer => 6,
        10 | 11 if outer => 9,
        13 | 14 if outer => 12,
        i => i,
    }
}

/// The common point of a merged triple, named by its smallest label.
pub fn merged_point(gens: &GeneratorSet, triple_head: usize) -> Option<Vec3> {
    let t = gens.trig();
    let one = c(1.0);
    let zero = c(0.0);
    match triple_head {
        3 => Some(Vec3::new(one, zero, one)),
        6 => Some(Vec3::new(cis(-t.phi) * (t.c0 / t.st), zero, one)),
        9 => Some(Vec3::new(zero, one, one)),
        12 => Some(Vec3::new(zero, cis(t.theta), one)),
        _ => None,
    }
}
