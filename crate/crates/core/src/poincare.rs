//! Side pairings, ridge cycles, the facet orbit table, the orbifold Euler
//! characteristic and the presentations they produce.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::checks::Check;
use crate::cxgeom::{inverse, mat_pow, proj_residual, scalar_residual, Mat3};
use crate::moves::{three_d, Gen, GeneratorSet};
use crate::params::{ExtRational, LatticeParams, Rational};
use crate::polyhedron::bisectors::incident_vertices;
use crate::polyhedron::facets::{RidgeId, RIDGES};
use crate::polyhedron::vertices::VertexTable;

/// The images under `T` of the vertices of `B(T)`, in the listed order.
pub fn side_pairing_images(
    gens: &GeneratorSet,
    table: &VertexTable,
    t: Gen,
    tol: f64,
) -> Vec<Option<usize>> {
    let m = gens.gen(t);
    incident_vertices(t)
        .iter()
        .map(|&i| table.find(&(m * table.z(i)), tol))
        .collect()
}

/// `T` maps the vertex set of `B(T)` onto that of `B(T⁻¹)`, for each pairing.
pub fn side_pairing_report(gens: &GeneratorSet, table: &VertexTable, tol: f64) -> Vec<Check> {
    Gen::PAIRINGS
        .iter()
        .map(|&t| {
            let images = side_pairing_images(gens, table, t, tol);
            let mut got: Vec<usize> = images.iter().flatten().copied().collect();
            got.sort();
            let want = incident_vertices(t.inverse()).to_vec();
            let shown: Vec<String> = images
                .iter()
                .map(|i| i.map_or("?".into(), |i| i.to_string()))
                .collect();
            Check::boolean(
                format!("side pairing {t}: B({t}) -> B({})", t.inverse()),
                got == want,
            )
            .with_detail(format!("images [{}]", shown.join(", ")))
        })
        .collect()
}

/// The exponent `m` of a ridge cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleExponent {
    K,
    P,
    L,
    D,
    One,
}

impl CycleExponent {
    pub fn value(self, params: &LatticeParams) -> ExtRational {
        match self {
            CycleExponent::K => params.k,
            CycleExponent::P => params.p,
            CycleExponent::L => params.l,
            CycleExponent::D => params.d,
            CycleExponent::One => ExtRational::ONE,
        }
    }
}

pub struct CycleRow {
    pub start: RidgeId,
    /// Letters in order of application.
    pub letters: &'static [Gen],
    pub ell: u32,
    pub m: CycleExponent,
}

pub const CYCLES: [CycleRow; 9] = [
    CycleRow {
        start: RidgeId(Gen::P, Gen::J),
        letters: &[Gen::J, Gen::Pi],
        ell: 1,
        m: CycleExponent::K,
    },
    CycleRow {
        start: RidgeId(Gen::R1, Gen::R1i),
        letters: &[Gen::R1],
        ell: 1,
        m: CycleExponent::P,
    },
    CycleRow {
        start: RidgeId(Gen::R2, Gen::R2i),
        letters: &[Gen::R2],
        ell: 1,
        m: CycleExponent::P,
    },
    CycleRow {
        start: RidgeId(Gen::P, Gen::R1),
        letters: &[Gen::P, Gen::R2, Gen::Pi, Gen::R1i],
        ell: 1,
        m: CycleExponent::One,
    },
    CycleRow {
        start: RidgeId(Gen::J, Gen::R1),
        letters: &[Gen::J, Gen::R2, Gen::Ji, Gen::R1i],
        ell: 1,
        m: CycleExponent::One,
    },
    CycleRow {
        start: RidgeId(Gen::R1, Gen::R2i),
        letters: &[Gen::R1, Gen::Pi, Gen::R2],
        ell: 1,
        m: CycleExponent::One,
    },
    CycleRow {
        start: RidgeId(Gen::J, Gen::R2i),
        letters: &[Gen::J, Gen::R1, Gen::R2],
        ell: 1,
        m: CycleExponent::L,
    },
    CycleRow {
        start: RidgeId(Gen::J, Gen::Ji),
        letters: &[Gen::J],
        ell: 3,
        m: CycleExponent::One,
    },
    CycleRow {
        start: RidgeId(Gen::P, Gen::Pi),
        letters: &[Gen::P],
        ell: 3,
        m: CycleExponent::D,
    },
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RidgeCycle {
    pub ridges: Vec<Option<RidgeId>>,
    pub letters: Vec<Gen>,
    /// The cycle transformation as a product, e.g. `P^-1 J`.
    pub word: String,
    pub ell: u32,
    pub m: ExtRational,
    pub active: bool,
    pub closes: bool,
    pub fixes_ridge: f64,
    /// Residual of `(T^ℓ)^m ~ I`, when active.
    pub relation_residual: Option<f64>,
}

fn ridge_vertices(id: RidgeId) -> &'static [usize] {
    RIDGES
        .iter()
        .find(|r| r.id.same(&id))
        .map(|r| r.vertices)
        .expect("known ridge")
}

fn ridge_with_vertices(vs: &[usize]) -> Option<RidgeId> {
    let mut want = vs.to_vec();
    want.sort();
    RIDGES
        .iter()
        .find(|r| {
            let mut have = r.vertices.to_vec();
            have.sort();
            have == want
        })
        .map(|r| r.id)
}

fn word_string(letters: &[Gen]) -> String {
    letters
        .iter()
        .rev()
        .map(|g| g.symbol())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Steps each cycle's letters through the ridge table by mapping vertex sets.
pub fn cycle_table(gens: &GeneratorSet, table: &VertexTable, tol: f64) -> Vec<RidgeCycle> {
    CYCLES
        .iter()
        .map(|row| {
            let mut current = Some(row.start);
            let mut ridges = vec![current];
            let mut t = Mat3::identity();
            for &g in row.letters {
                let m = gens.gen(g);
                t = m * t;
                current = current.and_then(|id| {
                    let imgs: Option<Vec<usize>> = ridge_vertices(id)
                        .iter()
                        .map(|&v| table.find(&(m * table.z(v)), tol))
                        .collect();
                    imgs.and_then(|vs| ridge_with_vertices(&vs))
                });
                ridges.push(current);
            }
            let closes = matches!(current, Some(id) if id.same(&row.start));
            let t_ell = mat_pow(&t, row.ell as i64);
            let fixes_ridge = ridge_vertices(row.start)
                .iter()
                .map(|&v| proj_residual(&(t_ell * table.z(v)), &table.z(v)))
                .fold(0.0, f64::max);
            let m = row.m.value(&gens.params);
            let active = m.positive_integer().is_some();
            let relation_residual = m
                .positive_integer()
                .map(|n| scalar_residual(&mat_pow(&t_ell, n as i64)));
            RidgeCycle {
                ridges,
                letters: row.letters.to_vec(),
                word: word_string(row.letters),
                ell: row.ell,
                m,
                active,
                closes,
                fixes_ridge,
                relation_residual,
            }
        })
        .collect()
}

/// The cycle transformation of each row, without reference to vertices.
pub fn cycle_transformation(gens: &GeneratorSet, row: &CycleRow) -> Mat3 {
    row.letters
        .iter()
        .fold(Mat3::identity(), |t, &g| gens.gen(g) * t)
}

/// A stabiliser order: a product of a small integer and at most one parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitOrder {
    Const(i64),
    K(i64),
    P(i64),
    L(i64),
    D(i64),
    Kp,
    Pd,
    Pl,
    Kl,
}

impl OrbitOrder {
    pub fn value(self, params: &LatticeParams) -> ExtRational {
        let mul = |x: ExtRational, n: i64| match x.finite() {
            Some(r) => ExtRational::from_ratio(r * n),
            None => ExtRational::INFINITY,
        };
        let prod = |a: ExtRational, b: ExtRational| match (a.finite(), b.finite()) {
            (Some(x), Some(y)) => ExtRational::from_ratio(x * y),
            _ => ExtRational::INFINITY,
        };
        match self {
            OrbitOrder::Const(n) => ExtRational::from_integer(n),
            OrbitOrder::K(n) => mul(params.k, n),
            OrbitOrder::P(n) => mul(params.p, n),
            OrbitOrder::L(n) => mul(params.l, n),
            OrbitOrder::D(n) => mul(params.d, n),
            OrbitOrder::Kp => prod(params.k, params.p),
            OrbitOrder::Pd => prod(params.p, params.d),
            OrbitOrder::Pl => prod(params.p, params.l),
            OrbitOrder::Kl => prod(params.k, params.l),
        }
    }

    pub fn label(self) -> String {
        let scaled = |n: i64, s: &str| {
            if n == 1 {
                s.to_string()
            } else {
                format!("{n}{s}")
            }
        };
        match self {
            OrbitOrder::Const(n) => n.to_string(),
            OrbitOrder::K(n) => scaled(n, "k"),
            OrbitOrder::P(n) => scaled(n, "p"),
            OrbitOrder::L(n) => scaled(n, "l"),
            OrbitOrder::D(n) => scaled(n, "d"),
            OrbitOrder::Kp => "kp".into(),
            OrbitOrder::Pd => "pd".into(),
            OrbitOrder::Pl => "pl".into(),
            OrbitOrder::Kl => "kl".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FacetDim {
    Vertex,
    Edge,
    Ridge,
    Side,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub dim: FacetDim,
    pub members: Vec<String>,
    pub stabiliser: String,
    pub order: OrbitOrder,
}

fn entry(dim: FacetDim, members: &[&str], stabiliser: &str, order: OrbitOrder) -> OrbitEntry {
    OrbitEntry {
        dim,
        members: members.iter().map(|s| s.to_string()).collect(),
        stabiliser: stabiliser.to_string(),
        order,
    }
}

pub fn orbit_table() -> Vec<OrbitEntry> {
    use FacetDim::*;
    use OrbitOrder::*;
    vec![
        entry(Vertex, &["z1", "z2"], "<A1, R1>", Kp),
        entry(Vertex, &["z3", "z4", "z5"], "<P^3, R1>", Pd),
        entry(Vertex, &["z6", "z10", "z13"], "<A1'>", Pl),
        entry(
            Vertex,
            &["z7", "z8", "z9", "z11", "z12", "z14"],
            "<A2'>",
            Kl,
        ),
        entry(Edge, &["g1,3", "g2,4"], "<R1>", P(1)),
        entry(Edge, &["g1,6", "g2,10"], "<R1>", P(1)),
        entry(Edge, &["g3,6", "g5,13", "g4,10"], "<R1>", P(1)),
        entry(Edge, &["g2,8", "g1,9", "g1,12", "g2,14"], "<A1>", K(1)),
        entry(Edge, &["g7,11", "g9,12", "g8,14"], "<J R1>", K(2)),
        entry(
            Edge,
            &["g9,10", "g12,13", "g6,7", "g13,14", "g6,8", "g10,11"],
            "<R2 R1 J>",
            L(1),
        ),
        entry(Edge, &["g7,8", "g12,14", "g9,11"], "<J R1^-1>", L(2)),
        entry(Edge, &["g4,5", "g3,5", "g3,4"], "<R2 P>", D(2)),
        entry(Ridge, &["F(P,J)", "F(P^-1,J^-1)"], "<A1>", K(1)),
        entry(Ridge, &["F(R1,R1^-1)"], "<R1>", P(1)),
        entry(Ridge, &["F(R2,R2^-1)"], "<R2>", P(1)),
        entry(
            Ridge,
            &["F(P,R1)", "F(P,R1^-1)", "F(P^-1,R2)", "F(P^-1,R2^-1)"],
            "1",
            Const(1),
        ),
        entry(
            Ridge,
            &["F(J,R1)", "F(J,R1^-1)", "F(J^-1,R2)", "F(J^-1,R2^-1)"],
            "1",
            Const(1),
        ),
        entry(
            Ridge,
            &["F(P,R2)", "F(R1,R2^-1)", "F(R1^-1,P^-1)"],
            "1",
            Const(1),
        ),
        entry(
            Ridge,
            &["F(J,R2^-1)", "F(R1,J^-1)", "F(R1^-1,R2)"],
            "<R2 R1 J>",
            L(1),
        ),
        entry(Ridge, &["F(J,J^-1)"], "<J>", Const(3)),
        entry(Ridge, &["F(P,P^-1)"], "<P^3>", D(3)),
        entry(Side, &["S(P)", "S(P^-1)"], "1", Const(1)),
        entry(Side, &["S(J)", "S(J^-1)"], "1", Const(1)),
        entry(Side, &["S(R1)", "S(R1^-1)"], "1", Const(1)),
        entry(Side, &["S(R2)", "S(R2^-1)"], "1", Const(1)),
    ]
}

/// Orbit sizes per dimension: `(vertices, edges, ridges, sides)`.
pub fn orbit_member_counts(table: &[OrbitEntry]) -> (usize, usize, usize, usize) {
    let count = |d: FacetDim| {
        table
            .iter()
            .filter(|e| e.dim == d)
            .map(|e| e.members.len())
            .sum()
    };
    (
        count(FacetDim::Vertex),
        count(FacetDim::Edge),
        count(FacetDim::Ridge),
        count(FacetDim::Side),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCharacteristic {
    pub orbit_sum: ExtRational,
    pub closed_form: ExtRational,
}

impl EulerCharacteristic {
    pub fn agree(&self) -> bool {
        self.orbit_sum == self.closed_form
    }
}

/// `Σ_V 1/|stab| − Σ_E + Σ_R − Σ_S + 1`, with signed reciprocals and `1/∞ = 0`.
pub fn euler_orbit_sum(params: &LatticeParams) -> Rational {
    let mut total = Rational::from_integer(1);
    for e in orbit_table() {
        let r = e
            .order
            .value(params)
            .recip()
            .finite()
            .expect("orders are nonzero");
        match e.dim {
            FacetDim::Vertex | FacetDim::Ridge => total += r,
            FacetDim::Edge | FacetDim::Side => total -= r,
        }
    }
    total
}

pub fn euler_characteristic(params: &LatticeParams) -> EulerCharacteristic {
    EulerCharacteristic {
        orbit_sum: ExtRational::from_ratio(euler_orbit_sum(params)),
        closed_form: ExtRational::from_ratio(crate::params::euler_closed_form(params)),
    }
}

/// Letters that appear in relators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    J,
    P,
    R1,
    R2,
    K,
    /// `K² R1 K⁻²` in the coset presentation.
    S1,
}

impl Letter {
    pub fn symbol(self) -> &'static str {
        match self {
            Letter::J => "J",
            Letter::P => "P",
            Letter::R1 => "R1",
            Letter::R2 => "R2",
            Letter::K => "K",
            Letter::S1 => "S1",
        }
    }
}

/// A word `x1^e1 x2^e2 …` raised to an outer exponent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Relator {
    pub word: Vec<(Letter, i64)>,
    pub exponent: ExtRational,
    /// Active iff the exponent is a positive finite integer.
    pub active: bool,
}

impl Relator {
    fn new(word: &[(Letter, i64)], exponent: ExtRational) -> Self {
        Self {
            word: word.to_vec(),
            exponent,
            active: exponent.positive_integer().is_some(),
        }
    }

    fn plain(word: &[(Letter, i64)]) -> Self {
        Self::new(word, ExtRational::ONE)
    }

    pub fn base_string(&self) -> String {
        self.word
            .iter()
            .map(|&(l, e)| {
                if e == 1 {
                    l.symbol().to_string()
                } else {
                    format!("{}^{}", l.symbol(), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn exponent_int(&self) -> Option<i64> {
        self.exponent.positive_integer().map(|n| n as i64)
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.base_string();
        if self.exponent == ExtRational::ONE {
            return f.write_str(&base);
        }
        if self.word.len() == 1 && self.word[0].1 == 1 {
            write!(f, "{}^{}", base, self.exponent)
        } else {
            write!(f, "({})^{}", base, self.exponent)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PresentationKind {
    Generic,
    Coset,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub kind: PresentationKind,
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn active_relators(&self) -> impl Iterator<Item = &Relator> {
        self.relators.iter().filter(|r| r.active)
    }

    /// Exponents of the power relators, in order, `None` when inactive.
    pub fn power_exponents(&self) -> Vec<Option<i64>> {
        self.relators
            .iter()
            .filter(|r| r.exponent != ExtRational::ONE || !r.active)
            .map(|r| r.exponent_int())
            .collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.active_relators().map(|r| r.to_string()).collect();
        write!(
            f,
            "< {} | {} >",
            self.generators.join(", "),
            rels.join(", ")
        )
    }
}

pub fn generic_presentation(params: &LatticeParams) -> Presentation {
    use Letter::*;
    let td = three_d(params);
    Presentation {
        kind: PresentationKind::Generic,
        generators: ["J", "P", "R1", "R2"].map(String::from).to_vec(),
        relators: vec![
            Relator::new(&[(J, 1)], ExtRational::from_integer(3)),
            Relator::new(&[(P, 1)], td),
            Relator::new(&[(R1, 1)], params.p),
            Relator::new(&[(R2, 1)], params.p),
            Relator::new(&[(P, -1), (J, 1)], params.k),
            Relator::new(&[(R2, 1), (R1, 1), (J, 1)], params.l),
            Relator::plain(&[(R2, -1), (P, 1), (R1, 1), (P, -1)]),
            Relator::plain(&[(R2, -1), (J, 1), (R1, 1), (J, -1)]),
            Relator::plain(&[(P, -1), (R1, 1), (R2, 1)]),
        ],
    }
}

/// The coset form; `S1` stands for `K² R1 K⁻²`.
pub fn coset_presentation(params: &LatticeParams) -> Presentation {
    use Letter::*;
    let td = three_d(params);
    Presentation {
        kind: PresentationKind::Coset,
        generators: ["K", "R1"].map(String::from).to_vec(),
        relators: vec![
            Relator::new(&[(R1, 1)], params.p),
            Relator::new(&[(K, 1)], ExtRational::from_integer(4)),
            Relator::new(&[(K, -1), (R1, 1)], td),
            Relator::new(&[(K, 1), (R1, 1)], ExtRational::from_integer(3)),
            Relator::plain(&[(K, 2), (S1, -1), (R1, 1)]),
            Relator::plain(&[
                (K, 2),
                (R1, 1),
                (K, 2),
                (R1, 1),
                (K, -2),
                (R1, -1),
                (K, -2),
                (R1, -1),
            ]),
        ],
    }
}

/// Every presentation that applies: the generic one, plus the coset form on
/// symmetric rows.
pub fn presentation(params: &LatticeParams) -> Vec<Presentation> {
    let mut out = vec![generic_presentation(params)];
    if params.symmetric {
        out.push(coset_presentation(params));
    }
    out
}

fn letter_matrix(gens: &GeneratorSet, kind: PresentationKind, l: Letter) -> Mat3 {
    match kind {
        PresentationKind::Generic => match l {
            Letter::J => gens.frame.j,
            Letter::P => gens.frame.p,
            Letter::R1 => gens.frame.r1,
            Letter::R2 => gens.frame.r2,
            Letter::K | Letter::S1 => panic!("K and S1 are not generic generators"),
        },
        PresentationKind::Coset => {
            let sym = gens
                .symmetric
                .as_ref()
                .expect("coset form needs symmetric moves");
            match l {
                Letter::K => sym.k,
                Letter::R1 => sym.frame.r1,
                Letter::R2 => sym.frame.r2,
                Letter::P => sym.frame.p,
                Letter::J => sym.frame.j,
                Letter::S1 => {
                    let k2 = sym.k * sym.k;
                    k2 * sym.frame.r1 * inverse(&k2)
                }
            }
        }
    }
}

pub fn relator_matrix(gens: &GeneratorSet, kind: PresentationKind, r: &Relator) -> Option<Mat3> {
    let n = r.exponent_int()?;
    let base = r.word.iter().fold(Mat3::identity(), |acc, &(l, e)| {
        acc * mat_pow(&letter_matrix(gens, kind, l), e)
    });
    Some(mat_pow(&base, n))
}

/// Numeric verification of every active relator as a projective identity.
pub fn verify_presentation(gens: &GeneratorSet, pres: &Presentation, tol: f64) -> Vec<Check> {
    let label = match pres.kind {
        PresentationKind::Generic => "relator",
        PresentationKind::Coset => "coset relator",
    };
    pres.relators
        .iter()
        .map(|r| match relator_matrix(gens, pres.kind, r) {
            Some(m) => Check::residual(format!("{label} {r} ~ I"), scalar_residual(&m), tol),
            None => Check::info(
                format!("{label} {r}"),
                "inactive (exponent not a positive integer)",
            ),
        })
        .collect()
}

/// `K² R1 K⁻² S1⁻¹`, the compatibility of the two descriptions of `S1`.
pub fn s1_compatibility_residual(gens: &GeneratorSet) -> Option<f64> {
    let sym = gens.symmetric.as_ref()?;
    let k2 = sym.k * sym.k;
    Some(scalar_residual(
        &(k2 * sym.frame.r1 * inverse(&k2) * inverse(&sym.s1)),
    ))
}
