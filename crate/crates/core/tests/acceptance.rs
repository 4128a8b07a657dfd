//! One check per acceptance criterion, each printing a single PASS/FAIL line.
//!
//! Runs without the libtest harness so the lines are always shown. A
//! criterion whose only failures are listed in its `errata` is reported as
//! FAIL but does not fail the run; anything else does.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dmlattice::conemetric::{
    area_form, build_octagon, move_vertex_residual, signed_area, MoveName, OctagonConfig,
};
use dmlattice::cxgeom::{proj_residual, scalar_residual, Vec3, C64};
use dmlattice::moves::{build_generators, k_det_trace, order_claims, GeneratorSet};
use dmlattice::params::{
    derive_params_str, table_params, CollapseCase, ExtRational, LatticeParams, Rational,
};
use dmlattice::poincare::{
    coset_presentation, cycle_table, cycle_transformation, euler_characteristic, euler_orbit_sum,
    generic_presentation, presentation, verify_presentation, CYCLES,
};
use dmlattice::polyhedron::lemmas::random_positive_point;
use dmlattice::polyhedron::lemmas::xi_u_max;
use dmlattice::polyhedron::{
    bisector_table, condition_residual, equidistance_residual, facet_complex, lemma_bounds_check,
    line_table, side_inequalities, side_inequality_check, vertex_residuals, vertex_table,
    xi_rotation_defect, IOTA_PERMUTATION,
};
use dmlattice::report::{surviving_vertices, verify_lattice, VerifyOptions};

struct Outcome {
    number: u32,
    title: &'static str,
    failures: Vec<String>,
    errata: &'static [&'static str],
}

impl Outcome {
    fn new(number: u32, title: &'static str) -> Self {
        Self {
            number,
            title,
            failures: Vec::new(),
            errata: &[],
        }
    }

    fn errata(mut self, errata: &'static [&'static str]) -> Self {
        self.errata = errata;
        self
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn finish(self) {
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("criterion {:>2} {}: {}", self.number, status, self.title);
        for f in &self.failures {
            println!("    {f}");
        }
        let unexpected: Vec<&String> = self
            .failures
            .iter()
            .filter(|f| !self.errata.iter().any(|e| f.starts_with(e)))
            .collect();
        assert!(
            unexpected.is_empty(),
            "criterion {} failed: {unexpected:?}",
            self.number
        );
    }
}

fn row(p: &str, k: &str) -> LatticeParams {
    derive_params_str(p, k).unwrap()
}

fn full_rows() -> Vec<LatticeParams> {
    table_params()
        .into_iter()
        .filter(|q| q.collapse_case == CollapseCase::FullD)
        .collect()
}

fn label(q: &LatticeParams) -> String {
    format!("({},{})", q.p, q.k)
}

const TABLE_TEXT: &str = "
3 4 -12 -2 1/3 7/12 1/6 11/12
3 5 -30 -2 7/30 19/30 1/6 13/15
3 6 inf -2 1/6 2/3 1/6 5/6
4 3 -12 -4 5/12 5/12 1/4 5/6
4 4 inf -4 1/4 1/2 1/4 3/4
5 2 -5 -10 7/10 1/5 3/10 9/10
5 5/2 -10 -10 1/2 3/10 3/10 4/5
5 3 -30 -10 11/30 11/30 3/10 11/15
6 2 -6 inf 2/3 1/6 1/3 5/6
6 3 inf inf 1/3 1/3 1/3 2/3
3 7 42 -2 5/42 29/42 1/6 17/21
3 8 24 -2 1/12 17/24 1/6 19/24
3 9 18 -2 1/18 13/18 1/6 7/9
3 10 15 -2 1/30 11/15 1/6 23/30
3 12 12 -2 0 3/4 1/6 3/4
4 5 20 -4 3/20 11/20 1/4 7/10
4 6 12 -4 1/12 7/12 1/4 2/3
4 8 8 -4 0 5/8 1/4 5/8
5 4 20 -10 1/5 9/20 3/10 13/20
5 5 10 -10 1/10 1/2 3/10 3/5
6 4 12 inf 1/6 5/12 1/3 7/12
6 6 6 inf 0 1/2 1/3 1/2
7 2 -7 14 9/14 1/7 5/14 11/14
8 2 -8 8 5/8 1/8 3/8 3/4
9 2 -9 6 11/18 1/9 7/18 13/18
10 2 -10 5 3/5 1/10 2/5 7/10
12 2 -12 4 7/12 1/12 5/12 2/3
18 2 -18 3 5/9 1/18 4/9 11/18
7 3 42 14 13/42 13/42 5/14 13/21
8 3 24 8 7/24 7/24 3/8 7/12
9 3 18 6 5/18 5/18 7/18 5/9
10 3 15 5 4/15 4/15 2/5 8/15
12 3 12 4 1/4 1/4 5/12 1/2
18 3 9 3 2/9 2/9 4/9 4/9
7 7/2 14 14 3/14 5/14 5/14 4/7
8 4 8 8 1/8 3/8 3/8 1/2
9 9/2 6 6 1/18 7/18 7/18 4/9
10 5 5 5 0 2/5 2/5 2/5
12 4 6 4 1/12 1/3 5/12 5/12
";

fn criterion_01_table_reproduction() {
    let mut out = Outcome::new(1, "table reproduction (39 rows, exact)");
    let start = Instant::now();
    let rows: Vec<Vec<&str>> = TABLE_TEXT
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().collect())
        .collect();
    out.require(rows.len() == 39, format!("{} oracle rows", rows.len()));
    let ours = table_params();
    out.require(ours.len() == 39, "39 table entries");
    let x = |s: &str| s.parse::<ExtRational>().unwrap();
    for (cols, q0) in rows.iter().zip(&ours) {
        let q = derive_params_str(cols[0], cols[1]).unwrap();
        let tag = format!("({},{})", cols[0], cols[1]);
        out.require(
            q.p == x(cols[0]) && q.k == x(cols[1]),
            format!("{tag} table order"),
        );
        out.require(q0 == &q, format!("{tag} table entry differs from derived"));
        out.require(q.l == x(cols[2]), format!("{tag} l = {}", q.l));
        out.require(q.d == x(cols[3]), format!("{tag} d = {}", q.d));
        out.require(q.t == x(cols[4]), format!("{tag} t = {}", q.t));
        out.require(q.mu[0] == x(cols[5]), format!("{tag} mu1 = {}", q.mu[0]));
        for i in 1..4 {
            out.require(
                q.mu[i] == x(cols[6]),
                format!("{tag} mu{} = {}", i + 1, q.mu[i]),
            );
        }
        out.require(q.mu[4] == x(cols[7]), format!("{tag} mu5 = {}", q.mu[4]));
        out.require(q.in_table, format!("{tag} flagged in table"));
    }
    let l_inf = ours.iter().filter(|q| q.l.is_infinite()).count();
    let d_inf = ours.iter().filter(|q| q.d.is_infinite()).count();
    out.require(l_inf == 3, format!("{l_inf} rows with l = inf"));
    out.require(d_inf == 4, format!("{d_inf} rows with d = inf"));
    let elapsed = start.elapsed().as_secs_f64();
    out.require(elapsed < 1.0, format!("runtime {elapsed:.3} s"));
    out.finish();
}

fn criterion_02_unitarity() {
    let mut out = Outcome::new(2, "unitarity of every generator < 1e-10");
    let mut worst = 0.0f64;
    for q in table_params() {
        let g = build_generators(&q);
        let f = &g.frame;
        for (name, m) in [
            ("R1", f.r1),
            ("R2", f.r2),
            ("A1", f.a1),
            ("J", f.j),
            ("P", f.p),
        ] {
            let r = g.form().unitarity_residual(&m);
            worst = worst.max(r);
            out.require(r < 1e-10, format!("{} {name}: {r:.3e}", label(&q)));
        }
        if let Some(sym) = &g.symmetric {
            for (name, m) in [("S1", sym.s1), ("S2", sym.s2), ("K", sym.k)] {
                let r = sym.frame.form.unitarity_residual(&m);
                worst = worst.max(r);
                out.require(r < 1e-10, format!("{} {name}: {r:.3e}", label(&q)));
            }
        }
    }
    println!("    worst residual {worst:.3e}");
    out.finish();
}

fn criterion_03_orders() {
    let mut out = Outcome::new(3, "projective orders and det/trace of e^(i.theta) K")
        .errata(&["det/trace of e^(i.theta)K"]);
    let mut symmetric = 0;
    for q in table_params() {
        let g = build_generators(&q);
        let claims = order_claims(&g);
        for c in &claims {
            out.require(
                c.holds(),
                format!(
                    "{} order {}: {:?} vs {:?}",
                    label(&q),
                    c.name,
                    c.measured,
                    c.expected
                ),
            );
        }
        let active = |name: &str| claims.iter().any(|c| c.name == name && c.active);
        out.require(
            active("J") && active("R1") && active("R2"),
            format!("{} J/R1/R2 claims", label(&q)),
        );
        if q.k.positive_integer().is_some() {
            out.require(active("P^-1 J"), format!("{} P^-1 J claim", label(&q)));
        } else {
            out.require(
                active("S1"),
                format!("{} S1 claim on half-integer row", label(&q)),
            );
        }
        out.require(
            active("P") == dmlattice::moves::three_d(&q).positive_integer().is_some(),
            format!("{} P claim active iff 3d positive", label(&q)),
        );
        out.require(
            active("R2 R1 J") == q.l.positive_integer().is_some(),
            format!("{} R2 R1 J claim active iff l positive", label(&q)),
        );
        if let Some(sym) = &g.symmetric {
            symmetric += 1;
            out.require(active("K"), format!("{} K claim", label(&q)));
            let (det, tr) = k_det_trace(sym, 1);
            let lit = (det - 1.0).norm().max((tr - 1.0).norm());
            out.require(
                lit < 1e-10,
                format!(
                    "det/trace of e^(i.theta)K at {}: det {det:.6}, trace {tr:.6}",
                    label(&q)
                ),
            );
            let (det, tr) = k_det_trace(sym, -1);
            let conj = (det - 1.0).norm().max((tr - 1.0).norm());
            out.require(
                conj < 1e-10,
                format!("{} det/trace of e^(-i.theta)K: {conj:.3e}", label(&q)),
            );
        }
    }
    out.require(symmetric == 8, format!("{symmetric} symmetric rows"));
    out.finish();
}

fn vertex_suite(out: &mut Outcome, q: &LatticeParams, live: &[usize]) {
    let g = build_generators(q);
    let lines = line_table(&g);
    let table = vertex_table(&g);
    for &i in live {
        let r = vertex_residuals(&g, &lines, table.get(i));
        let tag = format!("{} z{i}", label(q));
        out.require(r.z_lines < 1e-9, format!("{tag} z-lines {:.3e}", r.z_lines));
        out.require(r.w_lines < 1e-9, format!("{tag} w-lines {:.3e}", r.w_lines));
        out.require(r.norm > 0.0, format!("{tag} <z,z> = {:.3e}", r.norm));
        out.require(
            r.coordinate_change < 1e-9,
            format!("{tag} w ~ P^-1 z {:.3e}", r.coordinate_change),
        );
        let j = IOTA_PERMUTATION[i - 1];
        if live.contains(&j) {
            let res = proj_residual(&g.apply_iota(&table.z(i)), &table.z(j));
            out.require(res < 1e-9, format!("{tag} iota -> z{j}: {res:.3e}"));
        }
    }
}

fn criterion_04_vertex_suite() {
    let mut out = Outcome::new(
        4,
        "vertex suite on FullD rows and surviving vertices elsewhere",
    );
    let listed = [
        ("7", "7/2"),
        ("8", "4"),
        ("9", "9/2"),
        ("10", "5"),
        ("12", "4"),
    ];
    for (p, k) in listed {
        let q = row(p, k);
        out.require(
            q.collapse_case == CollapseCase::FullD,
            format!("({p},{k}) is FullD"),
        );
    }
    let mut perm = IOTA_PERMUTATION.to_vec();
    perm.sort();
    out.require(
        perm == (1..=14).collect::<Vec<_>>(),
        "iota table is a permutation",
    );
    out.require(
        (1..=14).all(|i| IOTA_PERMUTATION[IOTA_PERMUTATION[i - 1] - 1] == i),
        "iota table is an involution",
    );
    out.require(IOTA_PERMUTATION[4] == 5, "iota fixes z5");
    for q in table_params() {
        let live = surviving_vertices(q.collapse_case);
        vertex_suite(&mut out, &q, &live);
    }
    out.finish();
}

fn criterion_05_bisector_incidence() {
    let mut out = Outcome::new(5, "64 bisector incidences on FullD rows < 1e-9");
    for q in full_rows() {
        let g = build_generators(&q);
        let lines = line_table(&g);
        let table = vertex_table(&g);
        let mut count = 0;
        for b in bisector_table(&g, &lines) {
            for &i in b.vertices.iter() {
                let z = table.z(i);
                let c = condition_residual(&g, b.side, &z);
                let e = equidistance_residual(&g, &b, &z).abs();
                out.require(
                    c < 1e-9 && e < 1e-9,
                    format!("{} B({}) z{i}: {c:.3e} {e:.3e}", label(&q), b.side),
                );
                count += 1;
            }
        }
        out.require(
            count == 64,
            format!("{} lists {count} incidences", label(&q)),
        );
    }
    out.finish();
}

fn criterion_06_facet_complex() {
    let mut out = Outcome::new(6, "facet complex counts and incidences");
    let cases = [
        (CollapseCase::FullD, (14, 26, 20, 8)),
        (CollapseCase::CollapseZ345, (12, 23, 19, 8)),
        (CollapseCase::CollapseThreeTriples, (8, 17, 17, 8)),
        (CollapseCase::CollapseAllFour, (6, 14, 16, 8)),
    ];
    for (case, want) in cases {
        let fc = facet_complex(case);
        let counts = fc.counts();
        out.require(
            counts.as_tuple() == want,
            format!("{case}: {:?}", counts.as_tuple()),
        );
        out.require(
            counts.alternating_sum() == 0,
            format!("{case}: V - E + R - S != 0"),
        );
        out.require(
            fc.sides_per_ridge().values().all(|&n| n == 2),
            format!("{case}: a ridge not in exactly two sides"),
        );
    }
    let fc = facet_complex(CollapseCase::FullD);
    out.require(
        fc.edge_ridge_incidences() == 88,
        format!("incidences {}", fc.edge_ridge_incidences()),
    );
    for r in &fc.ridges {
        let n = r.vertices.len();
        out.require(
            n == r.kind.generic_vertex_count() && [3, 5, 6].contains(&n),
            format!("ridge {} has {n} vertices", r.id),
        );
    }
    out.finish();
}

fn criterion_07_euler_characteristic() {
    let mut out = Outcome::new(7, "Euler characteristic, orbit sum = closed form");
    for q in table_params() {
        let chi = euler_characteristic(&q);
        let p = q.p_ratio();
        let t = q.t.finite().unwrap();
        let closed = (p * p + p * 12 - 60) / (p * p * 16) - t * t / 4;
        let sum = euler_orbit_sum(&q);
        out.require(
            chi.agree(),
            format!("{}: {} vs {}", label(&q), chi.orbit_sum, chi.closed_form),
        );
        out.require(sum == closed, format!("{}: {sum} vs {closed}", label(&q)));
        if q.symmetric {
            let sym = (p - 5) * 2 / (p * p);
            out.require(
                sum == sym,
                format!("{}: {sum} vs 2(p-5)/p^2 = {sym}", label(&q)),
            );
        }
    }
    out.require(
        euler_orbit_sum(&row("10", "5")) == Rational::new(1, 10),
        "(10,5) -> 1/10",
    );
    out.require(
        euler_orbit_sum(&row("6", "6")) == Rational::new(1, 12),
        "(6,6) -> 1/12",
    );
    out.finish();
}

fn random_config(rng: &mut ChaCha8Rng, scale: f64) -> Vec3 {
    Vec3::new(
        C64::new(
            rng.random_range(-scale..scale),
            rng.random_range(-scale..scale),
        ),
        C64::new(
            rng.random_range(-scale..scale),
            rng.random_range(-scale..scale),
        ),
        C64::new(1.0, 0.0),
    )
}

fn criterion_08_area_oracle() {
    let mut out = Outcome::new(
        8,
        "octagon shoelace area vs Hermitian area; move-vertex equations",
    );
    let rows = [("7", "3"), ("10", "5"), ("5", "5"), ("8", "2"), ("4", "4")];
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (p, k) in rows {
        let q = row(p, k);
        let g = build_generators(&q);
        let t = g.trig();
        let mut worst = 0.0f64;
        for _ in 0..1000 {
            let z = random_positive_point(&g, &mut rng);
            let cfg = OctagonConfig::new(&z, t.theta, t.phi);
            let a = signed_area(&build_octagon(&cfg));
            let h = area_form(&cfg);
            worst = worst.max((a - h).abs() / h.abs());
        }
        out.require(
            worst < 1e-8,
            format!("({p},{k}) relative area error {worst:.3e}"),
        );
        let mut moves = vec![(MoveName::R1, g.frame.r1), (MoveName::R2, g.frame.r2)];
        if q.angles_equal() {
            moves.push((MoveName::S1, g.symmetric.as_ref().unwrap().s1));
        }
        for (name, m) in moves {
            let mut w = 0.0f64;
            for _ in 0..100 {
                let cfg = OctagonConfig::new(&random_config(&mut rng, 1.0), t.theta, t.phi);
                w = w.max(move_vertex_residual(name, &m, &cfg));
            }
            out.require(
                w < 1e-8,
                format!("({p},{k}) {name:?} vertex equations {w:.3e}"),
            );
        }
    }
    let q = row("10", "5");
    out.require(q.angles_equal(), "(10,5) exercises S1");
    out.finish();
}

fn criterion_09_lemma_suites() {
    let mut out = Outcome::new(
        9,
        "sign equivalences and modulus bounds on 1000 points per row",
    );
    let rows = [
        ("8", "3"),
        ("10", "5"),
        ("5", "5"),
        ("4", "6"),
        ("7", "2"),
        ("12", "2"),
        ("4", "4"),
        ("6", "3"),
    ];
    let mut cases = std::collections::BTreeSet::new();
    for (p, k) in rows {
        let q = row(p, k);
        cases.insert(format!("{}", q.collapse_case));
        let g = build_generators(&q);
        let ineqs = side_inequalities(&g, &line_table(&g));
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut bad = vec![0usize; ineqs.len()];
        let mut bounds = 0usize;
        for _ in 0..1000 {
            let z = random_positive_point(&g, &mut rng);
            for (i, s) in ineqs.iter().enumerate() {
                if !side_inequality_check(&g, s, &z).unwrap() {
                    bad[i] += 1;
                }
            }
            if !lemma_bounds_check(&g, &z, 1e-12).unwrap().all() {
                bounds += 1;
            }
        }
        for (s, n) in ineqs.iter().zip(&bad) {
            out.require(
                *n == 0,
                format!("({p},{k}) {}: {n} disagreements", s.statement),
            );
        }
        out.require(
            bounds == 0,
            format!("({p},{k}) bounds: {bounds} violations"),
        );
    }
    out.require(
        cases.len() == 4,
        format!("collapse cases covered: {cases:?}"),
    );
    let q = row("5", "5");
    let g = build_generators(&q);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let second = (0..1000).all(|_| {
        let z = random_positive_point(&g, &mut rng);
        lemma_bounds_check(&g, &z, 1e-12)
            .unwrap()
            .second_at_most_one
            == Some(true)
    });
    out.require(second, "(5,5): |z2|, |w2| <= 1 on samples");
    out.finish();
}

fn criterion_10_cycles() {
    let mut out = Outcome::new(10, "cycle table on FullD rows");
    for q in full_rows() {
        let g = build_generators(&q);
        let table = vertex_table(&g);
        let cycles = cycle_table(&g, &table, 1e-9);
        out.require(cycles.len() == 9, "nine cycles");
        for (cy, row) in cycles.iter().zip(CYCLES.iter()) {
            let tag = format!("{} ({})^{}", label(&q), cy.word, cy.ell);
            out.require(cy.closes, format!("{tag} does not step through its ridges"));
            out.require(
                cy.ridges.iter().all(Option::is_some),
                format!("{tag} leaves the ridge table"),
            );
            out.require(
                cy.fixes_ridge < 1e-9,
                format!("{tag} moves its ridge: {:.3e}", cy.fixes_ridge),
            );
            if cy.active {
                let r = cy.relation_residual.unwrap();
                out.require(r < 1e-9, format!("{tag}^{}: {r:.3e}", cy.m));
            }
            if cy.ell == 1 && cy.m == ExtRational::ONE {
                let t = cycle_transformation(&g, row);
                let r = scalar_residual(&t);
                out.require(r < 1e-9, format!("{tag} is not the identity: {r:.3e}"));
            }
        }
        let identities = cycles
            .iter()
            .filter(|c| c.ell == 1 && c.m == ExtRational::ONE)
            .count();
        out.require(
            identities == 3,
            format!("{} identity rows: {identities}", label(&q)),
        );
    }
    out.finish();
}

fn criterion_11_xi_rotation() {
    let mut out = Outcome::new(11, "arg xi1(J R2 z) = -2 pi / l within 1e-8");
    for (p, k) in [("10", "5"), ("7", "3")] {
        let q = row(p, k);
        let g: GeneratorSet = build_generators(&q);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let umax = xi_u_max(&g);
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let u = rng.random_range(0.0..umax);
            let z1 = C64::new(rng.random_range(-0.3..0.3), rng.random_range(-0.3..0.3));
            worst = worst.max(xi_rotation_defect(&g, z1, u).unwrap());
        }
        out.require(
            worst < 1e-8,
            format!("({p},{k}) worst angle defect {worst:.3e}"),
        );
    }
    out.finish();
}

fn criterion_12_presentation() {
    let mut out = Outcome::new(
        12,
        "presentations for (7,3), (3,6), (10,5); verify --all < 60 s",
    )
    .errata(&["(10,5) coset relator K^2*S1^-1*R1"]);
    let text = |q: &LatticeParams, coset: bool| -> Vec<String> {
        let pres = if coset {
            coset_presentation(q)
        } else {
            generic_presentation(q)
        };
        pres.active_relators().map(|r| r.to_string()).collect()
    };
    let braids = ["R2^-1*P*R1*P^-1", "R2^-1*J*R1*J^-1", "P^-1*R1*R2"];
    let mut want73 = vec!["J^3", "P^42", "R1^7", "R2^7", "(P^-1*J)^3", "(R2*R1*J)^42"];
    want73.extend(braids);
    out.require(
        text(&row("7", "3"), false) == want73,
        format!("(7,3): {:?}", text(&row("7", "3"), false)),
    );
    let mut want36 = vec!["J^3", "R1^3", "R2^3", "(P^-1*J)^6"];
    want36.extend(braids);
    out.require(
        text(&row("3", "6"), false) == want36,
        format!("(3,6): {:?}", text(&row("3", "6"), false)),
    );
    let want105 = [
        "R1^10",
        "K^4",
        "(K^-1*R1)^15",
        "(K*R1)^3",
        "K^2*S1^-1*R1",
        "K^2*R1*K^2*R1*K^-2*R1^-1*K^-2*R1^-1",
    ];
    out.require(
        text(&row("10", "5"), true) == want105,
        format!("(10,5): {:?}", text(&row("10", "5"), true)),
    );
    for (p, k) in [("7", "3"), ("3", "6"), ("10", "5")] {
        let q = row(p, k);
        let g = build_generators(&q);
        for pres in presentation(&q) {
            for c in verify_presentation(&g, &pres, 1e-9) {
                let name = c.name.trim_end_matches(" ~ I").to_string();
                out.require(!c.failed(), format!("({p},{k}) {name}: {}", c));
            }
        }
    }
    let start = Instant::now();
    let reports: Vec<_> = table_params()
        .iter()
        .map(|q| verify_lattice(q, &VerifyOptions::default()))
        .collect();
    let elapsed = start.elapsed().as_secs_f64();
    out.require(reports.len() == 39, "39 reports");
    out.require(elapsed < 60.0, format!("verify --all took {elapsed:.1} s"));
    println!("    verify --all: {elapsed:.2} s");
    out.finish();
}

fn main() {
    let criteria: [fn(); 12] = [
        criterion_01_table_reproduction,
        criterion_02_unitarity,
        criterion_03_orders,
        criterion_04_vertex_suite,
        criterion_05_bisector_incidence,
        criterion_06_facet_complex,
        criterion_07_euler_characteristic,
        criterion_08_area_oracle,
        criterion_09_lemma_suites,
        criterion_10_cycles,
        criterion_11_xi_rotation,
        criterion_12_presentation,
    ];
    let broken = criteria
        .iter()
        .filter(|f| std::panic::catch_unwind(**f).is_err())
        .count();
    if broken > 0 {
        eprintln!("{broken} acceptance criteria failed unexpectedly");
        std::process::exit(1);
    }
}
