//! Runs every check for a lattice and collects the results.

use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checks::{Check, Status};
use crate::conemetric::{
    area_form, build_octagon, coalescence_residual, move_vertex_residual, signed_area, ConePoint,
    MoveName, OctagonConfig,
};
use crate::cxgeom::{c, max_abs, proj_residual, Isometry, Vec3, C64};
use crate::moves::{build_generators, order_claims, verify_relations, Gen, GeneratorSet};
use crate::params::{CollapseCase, ExtRational, LatticeParams};
use crate::poincare::{
    cycle_table, euler_characteristic, presentation, s1_compatibility_residual,
    side_pairing_report, verify_presentation, EulerCharacteristic, Presentation, RidgeCycle,
};
use crate::polyhedron::bisectors::{incident_vertices, tagged_vertices};
use crate::polyhedron::facets::RidgeType;
use crate::polyhedron::lemmas::{random_positive_point, xi_u_max};
use crate::polyhedron::lines::{equation_consistency, polar_consistency};
use crate::polyhedron::vertices::merged_point;
use crate::polyhedron::{
    bisector_table, classify_point, condition_residual, equidistance_residual, facet_complex,
    giraud_residual, interior_witness, lemma_bounds_check, line_table, membership,
    side_inequalities, side_inequality_check, vertex_residuals, vertex_table, xi_rotation_defect,
    BisectorSpec, ComplexLine, FacetComplex, FacetCounts, Membership, VertexTable,
    IOTA_PERMUTATION, RIDGES,
};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub tol: f64,
    pub seed: u64,
    pub lemma_samples: usize,
    pub area_samples: usize,
    pub move_samples: usize,
    pub xi_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            seed: DEFAULT_SEED,
            lemma_samples: 1000,
            area_samples: 1000,
            move_samples: 100,
            xi_samples: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub p: ExtRational,
    pub k: ExtRational,
    pub collapse_case: CollapseCase,
    pub in_table: bool,
    pub checks: Vec<Check>,
    pub presentation: Vec<String>,
    pub facet_counts: FacetCounts,
    pub euler: EulerCharacteristic,
    pub timestamp: u64,
    pub seed: u64,
    pub overall: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn statuses(&self) -> Vec<(String, Status)> {
        self.checks
            .iter()
            .map(|c| (c.name.clone(), c.status))
            .collect()
    }
}

/// Vertices that stay distinct in the row's collapse case.
pub fn surviving_vertices(case: CollapseCase) -> Vec<usize> {
    (1..=14)
        .filter(|&i| {
            let inner = (3..=5).contains(&i);
            let outer = i >= 6;
            !(inner && case.merges_z345()) && !(outer && case.merges_outer_triples())
        })
        .collect()
}

/// The cone points that merge at each collapsed triple.
const MERGED_CONE_POINTS: [(usize, [ConePoint; 3]); 4] = [
    (3, [ConePoint::C1, ConePoint::C2, ConePoint::C3]),
    (6, [ConePoint::C0, ConePoint::C2, ConePoint::C3]),
    (9, [ConePoint::C0, ConePoint::C1, ConePoint::C2]),
    (12, [ConePoint::C0, ConePoint::C1, ConePoint::C3]),
];

pub fn merged_heads(case: CollapseCase) -> Vec<usize> {
    let mut out = Vec::new();
    if case.merges_z345() {
        out.push(3);
    }
    if case.merges_outer_triples() {
        out.extend([6, 9, 12]);
    }
    out
}

/// Everything built once per row.
pub struct LatticeContext {
    pub gens: GeneratorSet,
    pub lines: Vec<ComplexLine>,
    pub vertices: VertexTable,
    pub bisectors: Vec<BisectorSpec>,
    pub complex: FacetComplex,
}

impl LatticeContext {
    pub fn new(params: &LatticeParams) -> Self {
        let gens = build_generators(params);
        let lines = line_table(&gens);
        let vertices = vertex_table(&gens);
        let bisectors = bisector_table(&gens, &lines);
        let complex = facet_complex(params.collapse_case);
        Self {
            gens,
            lines,
            vertices,
            bisectors,
            complex,
        }
    }

    pub fn params(&self) -> &LatticeParams {
        &self.gens.params
    }

    pub fn full(&self) -> bool {
        self.params().collapse_case == CollapseCase::FullD
    }
}

fn worst<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

pub fn form_checks(ctx: &LatticeContext) -> Vec<Check> {
    let form = ctx.gens.form();
    vec![
        Check::residual("form is Hermitian", form.hermiticity_residual(), 1e-12),
        Check::boolean("form has signature (1,2)", form.signature() == (1, 2)),
        Check::boolean(
            "mu is a ball 5-tuple",
            crate::params::ball_quintuple_check(&ctx.params().mu_ratios()),
        ),
    ]
}

pub fn vertex_checks(ctx: &LatticeContext, tol: f64) -> Vec<Check> {
    let case = ctx.params().collapse_case;
    let live = surviving_vertices(case);
    let gens = &ctx.gens;
    let mut out = Vec::new();
    let res: Vec<_> = live
        .iter()
        .map(|&i| vertex_residuals(gens, &ctx.lines, ctx.vertices.get(i)))
        .collect();
    out.push(Check::residual(
        "vertices satisfy their z-line equations",
        worst(res.iter().map(|r| r.z_lines)),
        tol,
    ));
    out.push(Check::residual(
        "vertices satisfy their w-line equations",
        worst(res.iter().map(|r| r.w_lines)),
        tol,
    ));
    out.push(Check::residual(
        "P^-1 (z-rep) ~ w-rep",
        worst(res.iter().map(|r| r.coordinate_change)),
        tol,
    ));
    let min_norm = res.iter().map(|r| r.norm).fold(f64::INFINITY, f64::min);
    out.push(
        Check::boolean("vertices have positive norm", min_norm > 0.0)
            .with_detail(format!("min <z,z> = {min_norm:.3e}")),
    );
    let iota_res = worst(live.iter().map(|&i| {
        let j = IOTA_PERMUTATION[i - 1];
        proj_residual(&gens.apply_iota(&ctx.vertices.z(i)), &ctx.vertices.z(j))
    }));
    out.push(Check::residual("iota permutes the vertices", iota_res, tol));
    let iota_affine = worst(live.iter().filter_map(|&i| {
        let z = ctx.vertices.z(i);
        gens.iota_formula(&z)
            .map(|v| proj_residual(&v, &gens.apply_iota(&z)))
    }));
    out.push(Check::residual("iota affine formula", iota_affine, tol));
    for head in merged_heads(case) {
        let z = merged_point(gens, head).expect("merged head");
        let norm = gens.form().norm(&z);
        out.push(
            Check::boolean(
                format!("merged vertex z{head} is not negative"),
                norm > -tol,
            )
            .with_detail(format!("<z,z> = {norm:.3e}")),
        );
        let cones = MERGED_CONE_POINTS.iter().find(|m| m.0 == head).unwrap().1;
        let oct = build_octagon(&OctagonConfig::new(&z, gens.trig().theta, gens.trig().phi));
        let gap = oct
            .cone_gap(cones[0], cones[1])
            .max(oct.cone_gap(cones[1], cones[2]));
        out.push(Check::residual(
            format!("merged vertex z{head} coalesces three cone points"),
            gap,
            1e-8,
        ));
    }
    let coal =
        worst(live.iter().map(|&i| {
            coalescence_residual(i, &ctx.vertices.z(i), gens.trig().theta, gens.trig().phi)
        }));
    out.push(Check::residual("vertex cone-point coalescence", coal, 1e-8));
    out
}

pub fn line_checks(ctx: &LatticeContext, tol: f64) -> Vec<Check> {
    vec![
        Check::residual(
            "line z- and w-equations agree",
            worst(ctx.lines.iter().map(|l| equation_consistency(&ctx.gens, l))),
            tol,
        ),
        Check::residual(
            "line polars agree in both charts",
            worst(ctx.lines.iter().map(|l| polar_consistency(&ctx.gens, l))),
            tol,
        ),
    ]
}

/// Incidence and strictness of the bisector table; meaningful on `FullD`.
pub fn bisector_checks(ctx: &LatticeContext, tol: f64) -> Vec<Check> {
    let gens = &ctx.gens;
    let mut cond = 0.0f64;
    let mut equi = 0.0f64;
    let mut count = 0;
    let mut strict = f64::INFINITY;
    for b in &ctx.bisectors {
        for i in 1..=14 {
            let z = ctx.vertices.z(i);
            if b.vertices.contains(&i) {
                cond = cond.max(condition_residual(gens, b.side, &z));
                equi = equi.max(equidistance_residual(gens, b, &z).abs());
                count += 1;
            } else {
                strict = strict.min(condition_residual(gens, b.side, &z));
            }
        }
    }
    let tags_ok = Gen::ALL
        .iter()
        .all(|&g| tagged_vertices(gens, &ctx.vertices, g, tol) == incident_vertices(g).to_vec());
    vec![
        Check::boolean("bisector table lists 64 incidences", count == 64),
        Check::residual("bisector incidences (Im condition)", cond, tol),
        Check::residual("bisector incidences (equidistance)", equi, tol),
        Check::boolean("no unlisted vertex on a bisector", strict > 1e-6)
            .with_detail(format!("min off-table residual {strict:.3e}")),
        Check::boolean("membership tags reproduce the bisector table", tags_ok),
    ]
}

pub fn membership_checks(ctx: &LatticeContext, seed: u64, tol: f64) -> Vec<Check> {
    let gens = &ctx.gens;
    let mut out = Vec::new();
    let on_boundary = ctx.vertices.vertices.iter().all(|v| {
        matches!(
            classify_point(gens, &v.z_rep, tol),
            Ok((Membership::Boundary(_), _))
        )
    });
    out.push(Check::boolean(
        "every vertex is on the boundary of D",
        on_boundary,
    ));
    match interior_witness(gens, seed, tol) {
        Some(w) => {
            out.push(
                Check::boolean("interior witness found", true)
                    .with_detail(format!("seed {seed}, z = ({:.6}, {:.6})", w[0], w[1])),
            );
            for t in Gen::PAIRINGS {
                let img = gens.gen(t.inverse()) * w;
                let m = membership(gens, &img, tol);
                out.push(Check::boolean(
                    format!("{}(witness) is exterior", t.inverse()),
                    matches!(m, Ok(Membership::Exterior)),
                ));
            }
        }
        None => out.push(Check::boolean("interior witness found", false)),
    }
    out
}

pub fn lemma_checks(ctx: &LatticeContext, samples: usize, seed: u64, tol: f64) -> Vec<Check> {
    let gens = &ctx.gens;
    let ineqs = side_inequalities(gens, &ctx.lines);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1e44a);
    let mut disagreements = vec![0usize; ineqs.len()];
    let mut bound_failures = 0usize;
    for _ in 0..samples {
        let z = random_positive_point(gens, &mut rng);
        for (k, q) in ineqs.iter().enumerate() {
            if !side_inequality_check(gens, q, &z).unwrap_or(false) {
                disagreements[k] += 1;
            }
        }
        if !lemma_bounds_check(gens, &z, tol)
            .map(|b| b.all())
            .unwrap_or(false)
        {
            bound_failures += 1;
        }
    }
    let mut out: Vec<Check> = ineqs
        .iter()
        .zip(&disagreements)
        .map(|(q, &bad)| {
            Check::boolean(
                format!(
                    "side inequality {} <=> closer to B({})",
                    q.statement, q.side
                ),
                bad == 0,
            )
            .with_detail(format!("{bad}/{samples} disagreements"))
        })
        .collect();
    out.push(
        Check::boolean("coordinate modulus bounds", bound_failures == 0)
            .with_detail(format!("{bound_failures}/{samples} violations")),
    );
    out
}

pub fn xi_checks(ctx: &LatticeContext, samples: usize, seed: u64) -> Vec<Check> {
    let gens = &ctx.gens;
    let l = ctx.params().l;
    if !l.is_positive_finite() {
        return vec![Check::info(
            "xi rotation",
            "skipped: l is not positive and finite",
        )];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51);
    let umax = xi_u_max(gens);
    let mut w = 0.0f64;
    for _ in 0..samples {
        let u = rng.random_range(0.0..umax);
        let z1 = C64::new(rng.random_range(-0.3..0.3), rng.random_range(-0.3..0.3));
        w = w.max(xi_rotation_defect(gens, z1, u).unwrap_or(f64::INFINITY));
    }
    vec![Check::residual("arg xi1(J R2 z) = -2 pi / l", w, 1e-8)]
}

pub fn facet_checks(ctx: &LatticeContext) -> Vec<Check> {
    let fc = &ctx.complex;
    let counts = fc.counts();
    let expected = match fc.collapse_case {
        CollapseCase::FullD => (14, 26, 20, 8),
        CollapseCase::CollapseZ345 => (12, 23, 19, 8),
        CollapseCase::CollapseThreeTriples => (8, 17, 17, 8),
        CollapseCase::CollapseAllFour => (6, 14, 16, 8),
    };
    let mut out = vec![
        Check::boolean("facet counts", counts.as_tuple() == expected)
            .with_detail(format!("{:?}", counts.as_tuple())),
        Check::boolean("V - E + R - S = 0", counts.alternating_sum() == 0),
        Check::boolean(
            "each ridge lies in exactly two sides",
            fc.sides_per_ridge().values().all(|&n| n == 2),
        ),
        Check::boolean(
            "edge endpoints lie on their ridges",
            fc.inconsistent_edges().is_empty(),
        ),
    ];
    if fc.collapse_case == CollapseCase::FullD {
        out.push(Check::boolean(
            "edge-ridge incidences = 88",
            fc.edge_ridge_incidences() == 88,
        ));
        out.push(Check::boolean(
            "ridge vertex counts by type",
            fc.ridges
                .iter()
                .all(|r| r.vertices.len() == r.kind.generic_vertex_count()),
        ));
    }
    out
}

pub fn giraud_checks(ctx: &LatticeContext, tol: f64) -> Vec<Check> {
    RIDGES
        .iter()
        .filter(|r| r.kind == RidgeType::G)
        .map(|r| {
            let res = giraud_residual(
                &ctx.gens,
                &ctx.bisectors,
                &ctx.vertices,
                (r.id.0, r.id.1),
                r.vertices,
            );
            match res {
                Some(x) => {
                    Check::residual(format!("Giraud equidistance on {}", r.id), x, tol.max(1e-8))
                }
                None => Check::boolean(format!("Giraud ridge {} has a shared focus", r.id), false),
            }
        })
        .collect()
}

pub fn cycle_checks(cycles: &[RidgeCycle], full: bool, tol: f64) -> Vec<Check> {
    let mut out = Vec::new();
    for cy in cycles {
        let name = format!("cycle ({})^{}", cy.word, cy.ell);
        if full {
            out.push(Check::boolean(
                format!("{name} steps through its ridges"),
                cy.closes,
            ));
            out.push(Check::residual(
                format!("{name} fixes its ridge"),
                cy.fixes_ridge,
                tol,
            ));
        }
        match cy.relation_residual {
            Some(r) => out.push(Check::residual(format!("{name}^{} ~ I", cy.m), r, tol)),
            None => out.push(Check::info(
                format!("{name}^{}", cy.m),
                "inactive (m not a positive integer)",
            )),
        }
    }
    out
}

pub fn euler_checks(euler: &EulerCharacteristic, params: &LatticeParams) -> Vec<Check> {
    let mut out = vec![Check::boolean(
        "Euler characteristic: orbit sum = closed form",
        euler.agree(),
    )
    .with_detail(format!("{} vs {}", euler.orbit_sum, euler.closed_form))];
    if params.symmetric {
        let p = params.p_ratio();
        let want = ExtRational::from_ratio((p - 5) * 2 / (p * p));
        out.push(Check::boolean(
            "Euler characteristic = 2(p-5)/p^2",
            euler.orbit_sum == want,
        ));
    }
    out
}

pub fn octagon_checks(ctx: &LatticeContext, opts: &VerifyOptions) -> Vec<Check> {
    let gens = &ctx.gens;
    let t = gens.trig();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x0c7a);
    let mut area = 0.0f64;
    let mut herm = 0.0f64;
    for _ in 0..opts.area_samples {
        let z = random_positive_point(gens, &mut rng);
        let cfg = OctagonConfig::new(&z, t.theta, t.phi);
        let a = signed_area(&build_octagon(&cfg));
        let f = area_form(&cfg);
        area = area.max((a - f).abs() / f.abs().max(1e-300));
        herm = herm.max((f - gens.form().norm(&z)).abs());
    }
    let mut out = vec![
        Check::residual(
            "octagon shoelace area = Hermitian area (relative)",
            area,
            1e-8,
        ),
        Check::residual("area form = <z,z>", herm, 1e-12),
    ];
    let mut moves = vec![(MoveName::R1, gens.frame.r1), (MoveName::R2, gens.frame.r2)];
    if ctx.params().angles_equal() {
        if let Some(sym) = &gens.symmetric {
            moves.push((MoveName::S1, sym.s1));
        }
    }
    for (name, m) in moves {
        let mut w = 0.0f64;
        let mut inv = 0.0f64;
        for _ in 0..opts.move_samples {
            let z = Vec3::from_fn(|_, _| {
                C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            let cfg = OctagonConfig::new(&z, t.theta, t.phi);
            w = w.max(move_vertex_residual(name, &m, &cfg));
            inv = inv.max((area_form(&cfg.transformed(&m)) - area_form(&cfg)).abs());
        }
        out.push(Check::residual(
            format!("{name:?} octagon vertex equations"),
            w,
            1e-8,
        ));
        out.push(Check::residual(
            format!("{name:?} preserves area"),
            inv,
            1e-10,
        ));
    }
    out
}

pub fn presentation_checks(ctx: &LatticeContext, pres: &[Presentation], tol: f64) -> Vec<Check> {
    let mut out = Vec::new();
    for p in pres {
        out.extend(verify_presentation(&ctx.gens, p, tol));
    }
    if let Some(r) = s1_compatibility_residual(&ctx.gens) {
        out.push(Check::residual("K^2 R1 K^-2 S1^-1 ~ I", r, tol).informational());
    }
    out
}

pub fn verify_lattice(params: &LatticeParams, opts: &VerifyOptions) -> VerificationReport {
    let ctx = LatticeContext::new(params);
    let tol = opts.tol;
    let full = ctx.full();
    let mut checks = Vec::new();
    checks.extend(form_checks(&ctx));
    checks.extend(verify_relations(&ctx.gens, tol));
    checks.extend(order_claims(&ctx.gens).iter().map(|c| c.to_check()));
    checks.extend(vertex_checks(&ctx, tol));
    checks.extend(line_checks(&ctx, tol));
    if full {
        checks.extend(bisector_checks(&ctx, tol));
        checks.extend(membership_checks(&ctx, opts.seed, tol));
        checks.extend(giraud_checks(&ctx, tol));
        checks.extend(side_pairing_report(&ctx.gens, &ctx.vertices, tol));
    }
    checks.extend(lemma_checks(&ctx, opts.lemma_samples, opts.seed, tol));
    checks.extend(xi_checks(&ctx, opts.xi_samples, opts.seed));
    checks.extend(facet_checks(&ctx));
    let cycles = cycle_table(&ctx.gens, &ctx.vertices, tol);
    checks.extend(cycle_checks(&cycles, full, tol));
    let euler = euler_characteristic(params);
    checks.extend(euler_checks(&euler, params));
    checks.extend(octagon_checks(&ctx, opts));
    let pres = presentation(params);
    checks.extend(presentation_checks(&ctx, &pres, tol));
    let overall = if checks.iter().any(Check::failed) {
        Status::Fail
    } else {
        Status::Pass
    };
    VerificationReport {
        p: params.p,
        k: params.k,
        collapse_case: params.collapse_case,
        in_table: params.in_table,
        checks,
        presentation: pres.iter().map(|p| p.to_string()).collect(),
        facet_counts: ctx.complex.counts(),
        euler,
        timestamp: now(),
        seed: opts.seed,
        overall,
    }
}

pub fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexExport {
    pub index: usize,
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub z_rep: Vec3,
    #[serde(with = "crate::cxgeom::vec_serde")]
    pub w_rep: Vec3,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportDoc {
    pub params: LatticeParams,
    pub generators: BTreeMap<String, Isometry>,
    pub vertices: Vec<VertexExport>,
    pub lines: Vec<ComplexLine>,
    pub bisectors: Vec<BisectorSpec>,
    pub facet_complex: FacetComplex,
    pub cycles: Vec<RidgeCycle>,
    pub presentation: Vec<Presentation>,
    pub euler: EulerCharacteristic,
    pub checks: Vec<Check>,
}

pub fn export(params: &LatticeParams, opts: &VerifyOptions) -> ExportDoc {
    let ctx = LatticeContext::new(params);
    let report = verify_lattice(params, opts);
    let f = &ctx.gens.frame;
    let mut generators: BTreeMap<String, Isometry> = [
        ("R1", f.r1),
        ("R2", f.r2),
        ("A1", f.a1),
        ("J", f.j),
        ("P", f.p),
    ]
    .into_iter()
    .map(|(n, m)| (n.to_string(), Isometry::holo(m)))
    .collect();
    generators.insert("iota".into(), ctx.gens.iota.clone());
    if let Some(sym) = &ctx.gens.symmetric {
        generators.insert("S1".into(), Isometry::holo(sym.s1));
        generators.insert("S2".into(), Isometry::holo(sym.s2));
        generators.insert("K".into(), Isometry::holo(sym.k));
    }
    ExportDoc {
        params: params.clone(),
        generators,
        vertices: ctx
            .vertices
            .vertices
            .iter()
            .map(|v| VertexExport {
                index: v.index,
                z_rep: v.z_rep,
                w_rep: v.w_rep,
            })
            .collect(),
        lines: ctx.lines.clone(),
        bisectors: ctx.bisectors.clone(),
        facet_complex: ctx.complex.clone(),
        cycles: cycle_table(&ctx.gens, &ctx.vertices, opts.tol),
        presentation: presentation(params),
        euler: report.euler,
        checks: report.checks,
    }
}

/// Largest entry-wise difference between the exported and rebuilt generators.
pub fn generator_drift(doc: &ExportDoc) -> f64 {
    let gens = build_generators(&doc.params);
    let f = &gens.frame;
    let table = [
        ("R1", f.r1),
        ("R2", f.r2),
        ("A1", f.a1),
        ("J", f.j),
        ("P", f.p),
    ];
    worst(table.iter().map(|(n, m)| {
        doc.generators
            .get(*n)
            .map_or(f64::INFINITY, |g| max_abs(&(g.matrix - m)))
    }))
}

/// `z` from two complex affine coordinates with `z3 = 1`.
pub fn octagon_for(params: &LatticeParams, z1: C64, z2: C64) -> (OctagonConfig, f64, f64) {
    let cfg = OctagonConfig {
        z1,
        z2,
        z3: c(1.0),
        theta: params.theta.radians(),
        phi: params.phi.radians(),
    };
    let oct = build_octagon(&cfg);
    (cfg, signed_area(&oct), area_form(&cfg))
}
