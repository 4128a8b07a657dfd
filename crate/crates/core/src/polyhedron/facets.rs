//! Combinatorics of `D`: vertices, edges `γ(i,j)`, ridges `F(S,T)` and
//! sides `S(T)`, with the vertex collapses of the degenerate cases.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::moves::Gen;
use crate::params::CollapseCase;

use super::vertices::collapsed_representative;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RidgeType {
    /// Contained in a complex line; three vertices.
    S,
    /// Defined by two conditions in the same chart; five vertices.
    M,
    /// A Giraud disc; six vertices.
    G,
}

impl RidgeType {
    pub fn generic_vertex_count(self) -> usize {
        match self {
            RidgeType::S => 3,
            RidgeType::M => 5,
            RidgeType::G => 6,
        }
    }
}

/// A ridge `F(a, b)`, the intersection of the sides `S(a)` and `S(b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RidgeId(pub Gen, pub Gen);

impl RidgeId {
    pub fn contains(&self, g: Gen) -> bool {
        self.0 == g || self.1 == g
    }

    pub fn same(&self, other: &RidgeId) -> bool {
        (self.0 == other.0 && self.1 == other.1) || (self.0 == other.1 && self.1 == other.0)
    }
}

impl fmt::Display for RidgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.0, self.1)
    }
}

pub struct RidgeRow {
    pub id: RidgeId,
    pub kind: RidgeType,
    pub vertices: &'static [usize],
}

const fn rr(a: Gen, b: Gen, kind: RidgeType, vertices: &'static [usize]) -> RidgeRow {
    RidgeRow {
        id: RidgeId(a, b),
        kind,
        vertices,
    }
}

use Gen::*;
use RidgeType::{G, M, S};

/// The twenty ridges of the generic polyhedron.
pub const RIDGES: [RidgeRow; 20] = [
    rr(P, J, S, &[1, 9, 12]),
    rr(R1, R1i, S, &[1, 3, 6]),
    rr(Pi, Ji, S, &[2, 8, 14]),
    rr(R2, R2i, S, &[2, 4, 10]),
    rr(P, Pi, S, &[3, 4, 5]),
    rr(J, R2i, S, &[6, 7, 8]),
    rr(R1, Ji, S, &[9, 10, 11]),
    rr(R1i, R2, S, &[12, 13, 14]),
    rr(P, R1, M, &[1, 3, 4, 9, 10]),
    rr(P, R1i, M, &[1, 3, 5, 12, 13]),
    rr(J, R1, M, &[1, 6, 7, 9, 11]),
    rr(J, R1i, M, &[1, 6, 8, 12, 14]),
    rr(Pi, R2, M, &[2, 4, 5, 13, 14]),
    rr(Pi, R2i, M, &[2, 3, 4, 6, 8]),
    rr(Ji, R2, M, &[2, 9, 10, 12, 14]),
    rr(Ji, R2i, M, &[2, 7, 8, 10, 11]),
    rr(P, R2, G, &[4, 5, 9, 10, 12, 13]),
    rr(J, Ji, G, &[7, 8, 9, 11, 12, 14]),
    rr(R1, R2i, G, &[3, 4, 6, 7, 10, 11]),
    rr(R1i, Pi, G, &[3, 5, 6, 8, 13, 14]),
];

pub struct EdgeRow {
    pub ends: (usize, usize),
    pub ridges: &'static [RidgeId],
}

const fn er(a: usize, b: usize, ridges: &'static [RidgeId]) -> EdgeRow {
    EdgeRow {
        ends: (a, b),
        ridges,
    }
}

const fn f(a: Gen, b: Gen) -> RidgeId {
    RidgeId(a, b)
}

/// The twenty-six edges with the ridges containing them. The edge
/// `γ(6,8)` lies in `F(P⁻¹, R2⁻¹)`.
pub const EDGES: [EdgeRow; 26] = [
    er(1, 3, &[f(R1, R1i), f(P, R1), f(P, R1i)]),
    er(1, 6, &[f(R1, R1i), f(J, R1), f(J, R1i)]),
    er(1, 9, &[f(P, J), f(P, R1), f(J, R1)]),
    er(1, 12, &[f(P, J), f(P, R1i), f(J, R1i)]),
    er(2, 4, &[f(R2, R2i), f(Pi, R2i), f(Pi, R2)]),
    er(2, 8, &[f(Pi, Ji), f(Pi, R2i), f(Ji, R2i)]),
    er(2, 10, &[f(R2, R2i), f(Ji, R2), f(Ji, R2i)]),
    er(2, 14, &[f(Pi, Ji), f(Pi, R2), f(Ji, R2)]),
    er(5, 13, &[f(P, R1i), f(Pi, R2), f(P, R2), f(R1i, Pi)]),
    er(7, 11, &[f(J, R1), f(Ji, R2i), f(J, Ji), f(R1, R2i)]),
    er(9, 10, &[f(R1, Ji), f(P, R1), f(Ji, R2), f(P, R2)]),
    er(3, 4, &[f(P, Pi), f(P, R1), f(Pi, R2i), f(R1, R2i)]),
    er(6, 8, &[f(J, R2i), f(J, R1i), f(Pi, R2i), f(R1i, Pi)]),
    er(12, 14, &[f(R1i, R2), f(J, R1i), f(Ji, R2), f(J, Ji)]),
    er(4, 10, &[f(R2, R2i), f(P, R1), f(P, R2), f(R1, R2i)]),
    er(8, 14, &[f(Pi, Ji), f(J, R1i), f(J, Ji), f(R1i, Pi)]),
    er(9, 12, &[f(P, J), f(Ji, R2), f(P, R2), f(J, Ji)]),
    er(3, 6, &[f(R1, R1i), f(Pi, R2i), f(R1, R2i), f(R1i, Pi)]),
    er(13, 14, &[f(R1i, R2), f(Pi, R2), f(R1i, Pi)]),
    er(12, 13, &[f(R1i, R2), f(P, R1i), f(P, R2)]),
    er(10, 11, &[f(R1, Ji), f(Ji, R2i), f(R1, R2i)]),
    er(9, 11, &[f(R1, Ji), f(J, R1), f(J, Ji)]),
    er(7, 8, &[f(J, R2i), f(Ji, R2i), f(J, Ji)]),
    er(6, 7, &[f(J, R2i), f(J, R1), f(R1, R2i)]),
    er(4, 5, &[f(P, Pi), f(Pi, R2), f(P, R2)]),
    er(3, 5, &[f(P, Pi), f(P, R1i), f(R1i, Pi)]),
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub ends: (usize, usize),
    pub ridges: Vec<RidgeId>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ridge {
    pub id: RidgeId,
    pub kind: RidgeType,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Side {
    pub side: Gen,
    pub ridges: Vec<RidgeId>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FacetComplex {
    pub collapse_case: CollapseCase,
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub ridges: Vec<Ridge>,
    pub sides: Vec<Side>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetCounts {
    pub vertices: usize,
    pub edges: usize,
    pub ridges: usize,
    pub sides: usize,
}

impl FacetCounts {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.vertices, self.edges, self.ridges, self.sides)
    }

    pub fn alternating_sum(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.ridges as i64 - self.sides as i64
    }
}

/// Edges and ridges that degenerate when `{z3, z4, z5}` merge.
const Z345_EDGES: [(usize, usize); 3] = [(3, 4), (4, 5), (3, 5)];
const Z345_RIDGES: [RidgeId; 1] = [RidgeId(P, Pi)];
/// Edges and ridges that degenerate when the three outer triples merge.
const OUTER_EDGES: [(usize, usize); 9] = [
    (6, 7),
    (7, 8),
    (6, 8),
    (9, 10),
    (10, 11),
    (9, 11),
    (12, 13),
    (13, 14),
    (12, 14),
];
const OUTER_RIDGES: [RidgeId; 3] = [RidgeId(J, R2i), RidgeId(R1, Ji), RidgeId(R1i, R2)];

impl FacetComplex {
    pub fn counts(&self) -> FacetCounts {
        FacetCounts {
            vertices: self.vertices.len(),
            edges: self.edges.len(),
            ridges: self.ridges.len(),
            sides: self.sides.len(),
        }
    }

    pub fn ridge(&self, id: RidgeId) -> Option<&Ridge> {
        self.ridges.iter().find(|r| r.id.same(&id))
    }

    /// Total number of (edge, ridge) incidences.
    pub fn edge_ridge_incidences(&self) -> usize {
        self.edges.iter().map(|e| e.ridges.len()).sum()
    }

    /// For each ridge, the number of sides listing it.
    pub fn sides_per_ridge(&self) -> BTreeMap<RidgeId, usize> {
        let mut out: BTreeMap<RidgeId, usize> = self.ridges.iter().map(|r| (r.id, 0)).collect();
        for s in &self.sides {
            for r in &s.ridges {
                *out.entry(*r).or_default() += 1;
            }
        }
        out
    }

    /// Edges whose endpoints are missing from some listed ridge.
    pub fn inconsistent_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .filter(|e| {
                e.ridges.iter().any(|id| match self.ridge(*id) {
                    Some(r) => !(r.vertices.contains(&e.ends.0) && r.vertices.contains(&e.ends.1)),
                    None => true,
                })
            })
            .map(|e| e.ends)
            .collect()
    }
}

fn same_edge(a: (usize, usize), b: (usize, usize)) -> bool {
    a == b || (a.0 == b.1 && a.1 == b.0)
}

/// The sides whose bisector contains every vertex of the ridge.
pub fn sides_containing(vertices: &[usize]) -> Vec<Gen> {
    Gen::ALL
        .iter()
        .copied()
        .filter(|&g| {
            let inc = super::bisectors::incident_vertices(g);
            vertices.iter().all(|v| inc.contains(v))
        })
        .collect()
}

pub fn facet_complex(case: CollapseCase) -> FacetComplex {
    let z345 = case.merges_z345();
    let outer = case.merges_outer_triples();
    let mut removed_edges: Vec<(usize, usize)> = Vec::new();
    let mut removed_ridges: Vec<RidgeId> = Vec::new();
    if z345 {
        removed_edges.extend(Z345_EDGES);
        removed_ridges.extend(Z345_RIDGES);
    }
    if outer {
        removed_edges.extend(OUTER_EDGES);
        removed_ridges.extend(OUTER_RIDGES);
    }
    let rep = |v: usize| collapsed_representative(v, z345, outer);
    let vertices: BTreeSet<usize> = (1..=14).map(rep).collect();
    let kept_ridge = |id: &RidgeId| !removed_ridges.iter().any(|r| r.same(id));
    let ridges: Vec<Ridge> = RIDGES
        .iter()
        .filter(|r| kept_ridge(&r.id))
        .map(|r| {
            let vs: BTreeSet<usize> = r.vertices.iter().map(|&v| rep(v)).collect();
            Ridge {
                id: r.id,
                kind: r.kind,
                vertices: vs.into_iter().collect(),
            }
        })
        .collect();
    let edges: Vec<Edge> = EDGES
        .iter()
        .filter(|e| !removed_edges.iter().any(|&r| same_edge(r, e.ends)))
        .map(|e| Edge {
            ends: (rep(e.ends.0), rep(e.ends.1)),
            ridges: e
                .ridges
                .iter()
                .copied()
                .filter(|id| kept_ridge(id))
                .collect(),
        })
        .collect();
    let sides = Gen::ALL
        .iter()
        .map(|&g| Side {
            side: g,
            ridges: ridges
                .iter()
                .filter(|r| r.id.contains(g))
                .map(|r| r.id)
                .collect(),
        })
        .collect();
    FacetComplex {
        collapse_case: case,
        vertices: vertices.into_iter().collect(),
        edges,
        ridges,
        sides,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_counts() {
        let fc = facet_complex(CollapseCase::FullD);
        assert_eq!(fc.counts().as_tuple(), (14, 26, 20, 8));
        assert_eq!(fc.edge_ridge_incidences(), 88);
        assert!(fc.inconsistent_edges().is_empty());
    }

    #[test]
    fn ridges_lie_in_exactly_their_two_sides() {
        for r in RIDGES.iter() {
            let mut got = sides_containing(r.vertices);
            got.sort();
            let mut want = vec![r.id.0, r.id.1];
            want.sort();
            assert_eq!(got, want, "{}", r.id);
        }
    }

    #[test]
    fn each_side_has_its_ridges() {
        let fc = facet_complex(CollapseCase::FullD);
        for s in &fc.sides {
            assert_eq!(s.ridges.len(), 5, "{}", s.side);
        }
    }
}
