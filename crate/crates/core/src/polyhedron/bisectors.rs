//! The eight bisectors `B(T)` containing the sides of `D`, the membership
//! test for `D`, and the equidistance check on Giraud ridges.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cxgeom::{cis, normalize_affine, proj_residual, GeomError, Vec3, C64};
use crate::moves::{Gen, GeneratorSet};

use super::lines::{line, ComplexLine, LineLabel};
use super::vertices::VertexTable;

/// Which affine coordinate a bisector condition constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coord {
    Z1,
    Z2,
    W1,
    W2,
}

/// `Im(e^{i·rotation}·coord) = 0`, with the rotation stored in units of
/// `(θ, φ)`: `rotation = a·θ + b·φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImCondition {
    pub coord: Coord,
    pub theta_mult: i8,
    pub phi_mult: i8,
}

impl ImCondition {
    pub fn rotation(&self, theta: f64, phi: f64) -> f64 {
        self.theta_mult as f64 * theta + self.phi_mult as f64 * phi
    }

    pub fn describe(&self) -> String {
        let coord = match self.coord {
            Coord::Z1 => "z1",
            Coord::Z2 => "z2",
            Coord::W1 => "w1",
            Coord::W2 => "w2",
        };
        let rot = match (self.theta_mult, self.phi_mult) {
            (0, 0) => String::new(),
            (0, 1) => "e^(i.phi) ".into(),
            (0, -1) => "e^(-i.phi) ".into(),
            (-1, 0) => "e^(-i.theta) ".into(),
            (a, b) => format!("e^(i({a}.theta + {b}.phi)) "),
        };
        format!("Im({rot}{coord}) = 0")
    }
}

pub fn condition(side: Gen) -> ImCondition {
    let (coord, theta_mult, phi_mult) = match side {
        Gen::P => (Coord::Z1, 0, 0),
        Gen::J => (Coord::Z1, 0, 1),
        Gen::R1 => (Coord::Z2, 0, 0),
        Gen::R1i => (Coord::Z2, -1, 0),
        Gen::Pi => (Coord::W1, 0, 0),
        Gen::Ji => (Coord::W1, 0, -1),
        Gen::R2 => (Coord::W2, 0, 0),
        Gen::R2i => (Coord::W2, -1, 0),
    };
    ImCondition {
        coord,
        theta_mult,
        phi_mult,
    }
}

/// The vertices on each bisector.
pub fn incident_vertices(side: Gen) -> [usize; 8] {
    match side {
        Gen::P => [1, 3, 4, 5, 9, 10, 12, 13],
        Gen::Pi => [2, 3, 4, 5, 6, 8, 13, 14],
        Gen::J => [1, 6, 7, 8, 9, 11, 12, 14],
        Gen::Ji => [2, 7, 8, 9, 10, 11, 12, 14],
        Gen::R1 => [1, 3, 4, 6, 7, 9, 10, 11],
        Gen::R1i => [1, 3, 5, 6, 8, 12, 13, 14],
        Gen::R2 => [2, 4, 5, 9, 10, 12, 13, 14],
        Gen::R2i => [2, 3, 4, 6, 7, 8, 10, 11],
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BisectorSpec {
    pub side: Gen,
    pub condition: ImCondition,
    pub vertices: [usize; 8],
    /// Two points in z-coordinates equidistant from every point of the bisector.
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub focus_a: Vec3,
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub focus_b: Vec3,
}

/// Polars of `L*0 … L*3` in z- and w-coordinates.
pub(crate) struct StarPolars {
    pub z: [Vec3; 4],
    pub w: [Vec3; 4],
}

pub(crate) fn star_polars(lines: &[ComplexLine]) -> StarPolars {
    let labels = [LineLabel::S0, LineLabel::S1, LineLabel::S2, LineLabel::S3];
    StarPolars {
        z: labels.map(|l| line(lines, l).polar_z),
        w: labels.map(|l| line(lines, l).polar_w),
    }
}

pub fn bisector_table(gens: &GeneratorSet, lines: &[ComplexLine]) -> Vec<BisectorSpec> {
    let n = star_polars(lines);
    let g = |x| gens.gen(x);
    let w = |m| gens.in_w(&m);
    let p = gens.frame.p;
    // w-vectors are pushed to z-coordinates by P.
    let foci = |side: Gen| -> (Vec3, Vec3) {
        match side {
            Gen::P => (n.z[1], g(Gen::Pi) * n.z[3]),
            Gen::J => (n.z[0], g(Gen::Ji) * n.z[0]),
            Gen::R1 => (n.z[2], g(Gen::R1i) * n.z[3]),
            Gen::R1i => (n.z[3], g(Gen::R1) * n.z[2]),
            Gen::Pi => (p * n.w[3], p * (w(g(Gen::P)) * n.w[1])),
            Gen::Ji => (p * n.w[0], p * (w(g(Gen::J)) * n.w[0])),
            Gen::R2 => (p * n.w[1], p * (w(g(Gen::R2i)) * n.w[2])),
            Gen::R2i => (p * n.w[2], p * (w(g(Gen::R2)) * n.w[1])),
        }
    };
    Gen::ALL
        .iter()
        .map(|&side| {
            let (focus_a, focus_b) = foci(side);
            BisectorSpec {
                side,
                condition: condition(side),
                vertices: incident_vertices(side),
                focus_a,
                focus_b,
            }
        })
        .collect()
}

/// `(z1, z2, w1, w2)` of a point with finite affine coordinates in both charts.
pub fn both_charts(gens: &GeneratorSet, z: &Vec3) -> Result<[C64; 4], GeomError> {
    let zn = normalize_affine(z).ok_or(GeomError::AtInfinity)?;
    let wn = normalize_affine(&(gens.p_inv() * z)).ok_or(GeomError::AtInfinity)?;
    Ok([zn[0], zn[1], wn[0], wn[1]])
}

fn coordinate(coords: &[C64; 4], c: Coord) -> C64 {
    match c {
        Coord::Z1 => coords[0],
        Coord::Z2 => coords[1],
        Coord::W1 => coords[2],
        Coord::W2 => coords[3],
    }
}

/// `|Im(e^{iα}x)|` for the bisector's condition.
pub fn condition_residual(gens: &GeneratorSet, side: Gen, z: &Vec3) -> f64 {
    let t = gens.trig();
    let cond = condition(side);
    match both_charts(gens, z) {
        Ok(coords) => (cis(cond.rotation(t.theta, t.phi)) * coordinate(&coords, cond.coord))
            .im
            .abs(),
        Err(_) => f64::INFINITY,
    }
}

/// Relative difference of the focal distances, divided by `⟨z,z⟩`.
pub fn equidistance_residual(gens: &GeneratorSet, b: &BisectorSpec, z: &Vec3) -> f64 {
    let form = gens.form();
    (form.focal_distance(z, &b.focus_a) - form.focal_distance(z, &b.focus_b)) / form.norm(z)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    Interior,
    Boundary(BTreeSet<Gen>),
    Exterior,
}

/// Argument ranges that cut out `D`: `(coordinate, lower, upper, side at lower, side at upper)`.
fn ranges(theta: f64, phi: f64) -> [(Coord, f64, f64, Gen, Gen); 4] {
    [
        (Coord::Z1, -phi, 0.0, Gen::J, Gen::P),
        (Coord::Z2, 0.0, theta, Gen::R1, Gen::R1i),
        (Coord::W1, 0.0, phi, Gen::Pi, Gen::Ji),
        (Coord::W2, 0.0, theta, Gen::R2, Gen::R2i),
    ]
}

/// Locate a positive point relative to `D`, with angular tolerance `tol`.
pub fn membership(gens: &GeneratorSet, z: &Vec3, tol: f64) -> Result<Membership, GeomError> {
    let norm = gens.form().norm(z);
    if norm <= 0.0 {
        return Err(GeomError::NotPositive(norm));
    }
    Ok(classify_point(gens, z, tol)?.0)
}

/// Membership plus the active sides, without the positivity precondition
/// (vertices of collapsed rows can sit on or outside the boundary sphere).
pub fn classify_point(
    gens: &GeneratorSet,
    z: &Vec3,
    tol: f64,
) -> Result<(Membership, BTreeSet<Gen>), GeomError> {
    let t = gens.trig();
    let coords = both_charts(gens, z)?;
    let mut tags = BTreeSet::new();
    let mut outside = false;
    for (c, lo, hi, at_lo, at_hi) in ranges(t.theta, t.phi) {
        let x = coordinate(&coords, c);
        if x.norm() < tol {
            tags.insert(at_lo);
            tags.insert(at_hi);
            continue;
        }
        let a = x.arg();
        if (a - lo).abs() < tol {
            tags.insert(at_lo);
        } else if (a - hi).abs() < tol {
            tags.insert(at_hi);
        } else if !(lo < a && a < hi) {
            outside = true;
        }
    }
    let m = if outside {
        Membership::Exterior
    } else if tags.is_empty() {
        Membership::Interior
    } else {
        Membership::Boundary(tags.clone())
    };
    Ok((m, tags))
}

/// The vertices of `table` that `membership` tags with `side`.
pub fn tagged_vertices(
    gens: &GeneratorSet,
    table: &VertexTable,
    side: Gen,
    tol: f64,
) -> Vec<usize> {
    table
        .vertices
        .iter()
        .filter(|v| {
            classify_point(gens, &v.z_rep, tol)
                .map(|(_, tags)| tags.contains(&side))
                .unwrap_or(false)
        })
        .map(|v| v.index)
        .collect()
}

/// Worst equidistance defect on a Giraud ridge `F(a, b)`: at each listed
/// vertex, the focal distances to the focus shared by `B(a)` and `B(b)`
/// and to the two remaining foci agree.
pub fn giraud_residual(
    gens: &GeneratorSet,
    bisectors: &[BisectorSpec],
    table: &VertexTable,
    pair: (Gen, Gen),
    vertices: &[usize],
) -> Option<f64> {
    let find = |g: Gen| bisectors.iter().find(|b| b.side == g).unwrap();
    let (b1, b2) = (find(pair.0), find(pair.1));
    let mut shared = None;
    for u in [b1.focus_a, b1.focus_b] {
        for v in [b2.focus_a, b2.focus_b] {
            if proj_residual(&u, &v) < 1e-9 {
                shared = Some(u);
            }
        }
    }
    let c = shared?;
    let other = |b: &BisectorSpec| {
        if proj_residual(&c, &b.focus_a) < 1e-9 {
            b.focus_b
        } else {
            b.focus_a
        }
    };
    let (o1, o2) = (other(b1), other(b2));
    let form = gens.form();
    let worst = vertices
        .iter()
        .map(|&i| {
            let z = table.z(i);
            let zz = form.norm(&z).abs();
            let dc = form.focal_distance(&z, &c);
            let d1 = form.focal_distance(&z, &o1);
            let d2 = form.focal_distance(&z, &o2);
            ((dc - d1).abs().max((dc - d2).abs())) / zz
        })
        .fold(0.0, f64::max);
    Some(worst)
}

pub fn sides_of_vertex(index: usize) -> Vec<Gen> {
    Gen::ALL
        .iter()
        .copied()
        .filter(|&g| incident_vertices(g).contains(&index))
        .collect()
}
