//! One line per acceptance criterion, at the stated tolerances: N = 8,
//! tolerance 1e-8, 100 seeded samples.

use std::time::Instant;

use picard_core::variety::build_f;
use picard_verify::{load_or_generate, run_suite, CacheSource, Report, RunConfig, Status, Suite};

struct Criterion {
    name: &'static str,
    checks: &'static [&'static str],
    /// Upper bound on the summed elapsed time of `checks`, in seconds.
    budget: Option<f64>,
}

const CRITERIA: [Criterion; 16] = [
    Criterion { name: "F has 147 terms and degree 10", checks: &["variety.F.terms", "variety.F.degree"], budget: None },
    Criterion { name: "W(E6) has order 51840", checks: &["weyl.order", "weyl.cache.timing"], budget: Some(60.0) },
    Criterion { name: "27-vector orbit", checks: &["weyl.orbit27"], budget: None },
    Criterion { name: "F = c(...) with c = -2/675", checks: &["variety.F.invariant_identity"], budget: Some(60.0) },
    Criterion { name: "F on Z is q22^2 f22", checks: &["variety.a2.factor"], budget: None },
    Criterion { name: "F on X6 = X7 = 0 is q67 s67", checks: &["variety.a1a1.factor"], budget: None },
    Criterion { name: "Hessian of the Igusa quartic", checks: &["variety.hessian.identity"], budget: Some(120.0) },
    Criterion {
        name: "quadric vanishing counts",
        checks: &[
            "variety.quadrics.cusp",
            "variety.quadrics.boundary_line",
            "variety.quadrics.q22",
            "variety.quadrics.w3",
            "variety.quadrics.q36",
        ],
        budget: None,
    },
    Criterion {
        name: "singular surfaces and degree 320",
        checks: &["variety.sing.q22", "variety.sing.w3", "variety.sing.accounting"],
        budget: None,
    },
    Criterion {
        name: "class C and its centralizer",
        checks: &["weyl.class_c.size", "weyl.class_c.single_class", "weyl.class_c.centralizer"],
        budget: None,
    },
    Criterion {
        name: "boundary lines and cusps",
        checks: &["boundary.incidence", "boundary.cusps_on_l", "boundary.f_vanishes", "boundary.cusps.lambda2"],
        budget: None,
    },
    Criterion {
        name: "symplectic identities",
        checks: &[
            "symplectic.conjugation.t_m",
            "symplectic.m12.order",
            "symplectic.m12.fourth_power",
            "symplectic.hermitian.gram",
            "symplectic.lattice.pr_det",
            "symplectic.lattice.ip_det",
            "symplectic.gamma24.ip_pr",
            "symplectic.gamma24.d_c",
        ],
        budget: Some(1.0),
    },
    Criterion { name: "Hesse-plane invariants", checks: &["weyl.hesse.vanishing", "weyl.hesse.independent"], budget: None },
    Criterion { name: "branch-locus factorization", checks: &["variety.branch_locus"], budget: None },
    Criterion {
        name: "numeric bridge",
        checks: &["theta.bridge.samples", "theta.bridge.mb", "theta.bridge.m12"],
        budget: Some(120.0),
    },
    Criterion {
        name: "property suites",
        checks: &[
            "theta.parity.odd_nulls",
            "variety.F.euler",
            "weyl.reflection.involution",
            "weyl.b_preserved",
            "weyl.orbits.stable",
        ],
        budget: None,
    },
];

fn evaluate(report: &Report, c: &Criterion) -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut elapsed = 0.0;
    for id in c.checks {
        match report.get(id) {
            Some(r) => {
                elapsed += r.elapsed;
                if r.status != Status::Pass {
                    ok = false;
                    notes.push(format!("{id}: expected {} got {}", r.expected, r.actual));
                }
            }
            None => {
                ok = false;
                notes.push(format!("{id}: missing"));
            }
        }
    }
    if let Some(b) = c.budget {
        if elapsed >= b {
            ok = false;
            notes.push(format!("took {elapsed:.2}s, budget {b}s"));
        }
    }
    (ok, notes.join("; "))
}

#[test]
fn acceptance() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("weyl.cache");
    let mut cfg = RunConfig::new([Suite::All]).unwrap().with_theta(8, 1e-8).unwrap().with_samples(100).unwrap();
    cfg.cache = Some(cache.clone());
    let report = run_suite(&cfg);

    let mut results: Vec<(bool, String)> = CRITERIA.iter().map(|c| evaluate(&report, c)).collect();

    // Extra timing conditions not covered by a single record.
    let t = Instant::now();
    let f = build_f();
    let build = t.elapsed().as_secs_f64();
    if f.num_terms() != 147 || build >= 1.0 {
        results[0] = (false, format!("{} terms, built in {build:.3}s", f.num_terms()));
    }
    let warm = load_or_generate(Some(&cache)).unwrap();
    let load = warm.load.map_or(f64::INFINITY, |d| d.as_secs_f64());
    if warm.source != CacheSource::Loaded || load >= 1.0 || warm.group.order() != 51840 {
        results[1] = (false, format!("warm load {:?} in {load:.3}s", warm.source));
    }

    for (k, (c, (ok, notes))) in CRITERIA.iter().zip(&results).enumerate() {
        let tag = if *ok { "PASS" } else { "FAIL" };
        if notes.is_empty() {
            println!("criterion {:>2}: {tag}  {}", k + 1, c.name);
        } else {
            println!("criterion {:>2}: {tag}  {}  ({notes})", k + 1, c.name);
        }
    }
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, r)| !r.0).map(|(k, _)| k + 1).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
