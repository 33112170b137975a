//! The check suites. Shared inputs (the group table, `F`, the restricted
//! quadrics) are built on first use, so a check that needs the group always
//! runs after generation no matter which suites were selected.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::{anyhow, Context as _};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use picard_core::exact::{Cyclotomic, Rational};
use picard_core::poly::{Poly, RatPoly, SubstitutionMap, Vars};
use picard_core::symplectic::{
    classify_normalizer, conjugation_identities, fixed_sublattice_det, hermitian_gram, named, reduce_to_unitary,
    unitary_closure, unitary_generators, SympMatrix,
};
use picard_core::theta::{self, FixedLocusTag, ProfileKind, SiegelPoint, ThetaChar, C64};
use picard_core::variety::{self, QuadricFamily};
use picard_core::weyl::{self, GroupTable, Vec6, WeylElement};

use crate::cache::{load_or_generate, CacheSource, CachedGroup};
use crate::config::{RunConfig, Suite};
use crate::report::{CheckRecord, Report, ReportHeader, Status};

struct Runner {
    records: Vec<CheckRecord>,
}

impl Runner {
    fn record(&mut self, id: &str, citation: &str, expected: Value, f: impl FnOnce() -> anyhow::Result<(Value, bool)>) {
        let t = Instant::now();
        let (actual, pass) = f().unwrap_or_else(|e| (json!({ "error": format!("{e:#}") }), false));
        self.records.push(CheckRecord {
            check_id: id.into(),
            citation: citation.into(),
            expected,
            actual,
            status: if pass { Status::Pass } else { Status::Fail },
            elapsed: t.elapsed().as_secs_f64(),
        });
    }

    fn eq<T: Serialize>(&mut self, id: &str, citation: &str, expected: T, f: impl FnOnce() -> anyhow::Result<T>) {
        let e = serde_json::to_value(expected).expect("serializable");
        let e2 = e.clone();
        self.record(id, citation, e, move || {
            let a = serde_json::to_value(f()?)?;
            let pass = a == e2;
            Ok((a, pass))
        });
    }

    /// Equality of exact values, reported through their text form.
    fn eq_exact<T: PartialEq + ToString>(
        &mut self,
        id: &str,
        citation: &str,
        expected: T,
        f: impl FnOnce() -> anyhow::Result<T>,
    ) {
        let e = Value::String(expected.to_string());
        self.record(id, citation, e, move || {
            let a = f()?;
            let pass = a == expected;
            Ok((Value::String(a.to_string()), pass))
        });
    }

    fn below(&mut self, id: &str, citation: &str, bound: f64, f: impl FnOnce() -> anyhow::Result<f64>) {
        self.record(id, citation, json!(format!("< {bound:e}")), move || {
            let a = f()?;
            Ok((json!(a), a < bound))
        });
    }

    fn skip(&mut self, id: &str, citation: &str, expected: Value, reason: &str) {
        self.records.push(CheckRecord {
            check_id: id.into(),
            citation: citation.into(),
            expected,
            actual: json!({ "skipped": reason }),
            status: Status::Skipped,
            elapsed: 0.0,
        });
    }
}

struct Inputs<'a> {
    cfg: &'a RunConfig,
    group: OnceCell<CachedGroup>,
    f: OnceCell<RatPoly>,
    family: OnceCell<QuadricFamily>,
    orbit27: OnceCell<Vec<Vec6>>,
}

impl<'a> Inputs<'a> {
    fn new(cfg: &'a RunConfig) -> Self {
        Inputs { cfg, group: OnceCell::new(), f: OnceCell::new(), family: OnceCell::new(), orbit27: OnceCell::new() }
    }

    fn cached(&self) -> anyhow::Result<&CachedGroup> {
        if self.group.get().is_none() {
            let g = load_or_generate(self.cfg.cache.as_deref()).context("group table")?;
            let _ = self.group.set(g);
        }
        Ok(self.group.get().expect("set above"))
    }

    fn group(&self) -> anyhow::Result<&GroupTable> {
        Ok(&self.cached()?.group)
    }

    fn f(&self) -> &RatPoly {
        self.f.get_or_init(variety::build_f)
    }

    fn family(&self) -> &QuadricFamily {
        self.family.get_or_init(variety::restrict_quadrics)
    }

    fn orbit27(&self) -> anyhow::Result<&[Vec6]> {
        if self.orbit27.get().is_none() {
            let o = weyl::orbit_vectors_27(self.group()?);
            let _ = self.orbit27.set(o);
        }
        Ok(self.orbit27.get().expect("set above"))
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        r.set_stream(stream);
        r
    }
}

/// Runs the selected suites and assembles the sorted report.
pub fn run_suite(cfg: &RunConfig) -> Report {
    let inputs = Inputs::new(cfg);
    let mut r = Runner { records: Vec::new() };
    for suite in cfg.suites() {
        match suite {
            Suite::Exact => exact_suite(&mut r),
            Suite::Group => group_suite(&mut r, &inputs),
            Suite::Variety => variety_suite(&mut r, &inputs),
            Suite::Boundary => boundary_suite(&mut r, &inputs),
            Suite::Theta => theta_suite(&mut r, &inputs),
            Suite::All => unreachable!("expanded by RunConfig::suites"),
        }
    }
    let header = ReportHeader { version: env!("CARGO_PKG_VERSION").into(), seed: cfg.seed, config: cfg.to_json() };
    Report::new(header, r.records)
}

fn point_label(v: &Vec6) -> String {
    let parts: Vec<String> = weyl::projective_canonical(v).iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(":"))
}

fn exact_suite(r: &mut Runner) {
    let m = || named("M").ok_or_else(|| anyhow!("M"));
    r.eq("symplectic.m.relation", "M^2 + M + 1 = 0", true, || {
        let m = m()?;
        Ok((m * m).add(&m).add(&SympMatrix::IDENTITY) == SympMatrix([[0; 8]; 8]))
    });
    let identities = [
        ("symplectic.conjugation.t_m", "T M T^-1 = M22"),
        ("symplectic.m12.order", "order(M12) = 12"),
        ("symplectic.m12.fourth_power", "M12^4 = M"),
        ("symplectic.m12.cube", "M12^3 = ±MC"),
        ("symplectic.mb_md.commute", "MB MD = MD MB"),
    ];
    for (id, name) in identities {
        r.eq(id, name, true, || {
            let check = conjugation_identities()
                .into_iter()
                .find(|c| c.name == name)
                .ok_or_else(|| anyhow!("identity {name} not computed"))?;
            Ok(check.holds)
        });
    }
    r.record("symplectic.hermitian.gram", "Hermitian form H_M", json!("diag(1, 1, -1, -1)"), || {
        let g = hermitian_gram();
        let pass = (0..4).all(|i| {
            (0..4).all(|j| {
                let e = if i != j { 0 } else if i < 2 { 1 } else { -1 };
                g[i][j] == Cyclotomic::from_ints(e, 0)
            })
        });
        let text: Vec<Vec<String>> = g.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect();
        Ok((json!(text), pass))
    });
    r.eq_exact("symplectic.lattice.pr_det", "principal lattice", Rational::ONE, || {
        Ok(fixed_sublattice_det(&named("Mpr").ok_or_else(|| anyhow!("Mpr"))?)?)
    });
    r.eq_exact("symplectic.lattice.ip_det", "non-principal lattice", Rational::from_int(9), || {
        Ok(fixed_sublattice_det(&named("Mip").ok_or_else(|| anyhow!("Mip"))?)?)
    });
    let congruent = |a: &str, b: &str| -> anyhow::Result<bool> {
        let x = named(a).ok_or_else(|| anyhow!("{a}"))?;
        let y = named(b).ok_or_else(|| anyhow!("{b}"))?;
        Ok((x * y.symplectic_inverse()?).in_gamma_2_4())
    };
    r.eq("symplectic.gamma24.ip_pr", "Mip = Mpr mod level (2,4)", true, || congruent("Mip", "Mpr"));
    r.eq("symplectic.gamma24.d_c", "MD = MC mod level (2,4)", true, || congruent("MD", "MC"));
    let classes = [
        ("MB", "NormalizerOnly"),
        ("Md", "Centralizer"),
        ("Me", "Centralizer"),
        ("Mf", "NormalizerOnly"),
        ("Mpr", "Centralizer"),
        ("Mip", "Centralizer"),
        ("MC", "Centralizer"),
        ("MD", "Centralizer"),
        ("M12", "Centralizer"),
        ("T", "Outside"),
    ];
    let expected: Vec<(String, String)> = classes.iter().map(|(n, c)| (n.to_string(), c.to_string())).collect();
    r.eq("symplectic.normalizer.classes", "normalizer of <M>", expected, || {
        classes
            .iter()
            .map(|(n, _)| {
                let m = named(n).ok_or_else(|| anyhow!("{n}"))?;
                Ok((n.to_string(), format!("{:?}", classify_normalizer(&m)?)))
            })
            .collect::<anyhow::Result<Vec<_>>>()
    });
    r.eq("symplectic.unitary.order", "U(4, F4) of order 77760", 77760usize, || {
        let gens = unitary_generators().iter().map(reduce_to_unitary).collect::<Result<Vec<_>, _>>()?;
        Ok(unitary_closure(&gens).len())
    });
}

/// Arm lengths of a tree with exactly one branch node, sorted.
fn dynkin_arms(edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let nodes: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    if edges.len() + 1 != nodes.len() {
        return None;
    }
    let nbrs = |v: usize| -> Vec<usize> {
        edges.iter().filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None }).collect()
    };
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| nbrs(v).len() == 3).collect();
    let [center] = branch[..] else { return None };
    let mut arms = Vec::new();
    for start in nbrs(center) {
        let (mut prev, mut cur, mut len) = (center, start, 1);
        loop {
            let next: Vec<usize> = nbrs(cur).into_iter().filter(|&v| v != prev).collect();
            match next[..] {
                [] => break,
                [n] => (prev, cur, len) = (cur, n, len + 1),
                _ => return None,
            }
        }
        arms.push(len);
    }
    arms.sort_unstable();
    Some(arms)
}

fn group_suite(r: &mut Runner, inp: &Inputs) {
    r.eq("weyl.order", "finite group of order 51840", 51840usize, || Ok(inp.group()?.order()));
    r.record(
        "weyl.cache.timing",
        "group-table cache",
        json!({ "generateSecs": "< 60", "loadSecs": "< 1" }),
        || {
            let c = inp.cached()?;
            let source = match &c.source {
                CacheSource::Generated => "generated".to_string(),
                CacheSource::Stored => "stored".to_string(),
                CacheSource::Loaded => "loaded".to_string(),
                CacheSource::Regenerated(why) => format!("regenerated ({why})"),
            };
            let gen = c.generate.map(|d| d.as_secs_f64());
            let load = c.load.map(|d| d.as_secs_f64());
            let pass = gen.is_none_or(|s| s < 60.0) && load.is_none_or(|s| s < 1.0);
            Ok((json!({ "source": source, "generateSecs": gen, "loadSecs": load }), pass))
        },
    );
    r.eq("weyl.minus_identity", "-1 is not in W(E6)", false, || {
        let mut m = WeylElement::IDENTITY;
        for i in 0..6 {
            m.0[i][i] = -1;
        }
        Ok(inp.group()?.contains(&m))
    });
    r.eq("weyl.dynkin", "Dynkin diagram from b", vec![1usize, 2, 2], || {
        dynkin_arms(&weyl::gram_matrix().1).ok_or_else(|| anyhow!("not a star with one branch node"))
    });
    r.eq("weyl.b_preserved", "W(E6) preserves b", 0usize, || {
        // In the root basis b-invariance reads Rᵀ C R = C for the Cartan matrix C.
        let (c, _) = weyl::gram_matrix();
        let c: Vec<Vec<i64>> = (0..6)
            .map(|i| (0..6).map(|j| c[(i, j)].to_i64().ok_or_else(|| anyhow!("Cartan entry"))).collect())
            .collect::<anyhow::Result<_>>()?;
        let preserves = |g: &WeylElement| {
            (0..6).all(|i| {
                (0..6).all(|j| {
                    let v: i64 = (0..6)
                        .flat_map(|k| (0..6).map(move |l| (k, l)))
                        .map(|(k, l)| i64::from(g.0[k][i]) * c[k][l] * i64::from(g.0[l][j]))
                        .sum();
                    v == c[i][j]
                })
            })
        };
        Ok(inp.group()?.elements().iter().filter(|g| !preserves(g)).count())
    });
    r.eq("weyl.roots", "72 roots", 72usize, || Ok(inp.group()?.orbit(&weyl::simple_roots()[0], false).len()));
    r.eq("weyl.reflection.involution", "reflections are involutions", true, || {
        let roots = inp.group()?.orbit(&weyl::simple_roots()[0], false);
        let x = weyl::vec6([3, -1, 4, 1, -5, 9]);
        for a in &roots {
            if weyl::reflection(a, &weyl::reflection(a, &x)?)? != x {
                return Ok(false);
            }
            let neg: Vec6 = std::array::from_fn(|i| -a[i].clone());
            if weyl::reflection(a, a)? != neg {
                return Ok(false);
            }
        }
        Ok(true)
    });
    r.eq("weyl.orbit27", "27-vector orbit", json!({ "size": 27, "norm": "1/3" }), || {
        let o = inp.orbit27()?;
        let norms: BTreeSet<String> = o.iter().map(|v| weyl::b_form(v, v).to_string()).collect();
        let norm = if norms.len() == 1 { norms.into_iter().next().expect("one") } else { format!("{norms:?}") };
        Ok(json!({ "size": o.len(), "norm": norm }))
    });
    r.eq("weyl.orbit.lambda2", "27 cusps", 27usize, || {
        Ok(inp.group()?.orbit(&weyl::fundamental_weight(2)?, true).len())
    });
    r.eq("weyl.orbits.stable", "orbits are setwise stable", true, || {
        let g = inp.group()?;
        let roots = g.orbit(&weyl::simple_roots()[0], false);
        let o27: BTreeSet<Vec6> = inp.orbit27()?.iter().cloned().collect();
        let stable = |set: &BTreeSet<Vec6>, h: &WeylElement| set.iter().map(|v| h.apply(v)).collect::<BTreeSet<_>>() == *set;
        Ok(g.generators().iter().chain(g.elements().iter().step_by(97)).all(|h| stable(&roots, h) && stable(&o27, h)))
    });
    r.eq("weyl.class_c.size", "class C", 80usize, || Ok(weyl::conjugacy_class_c(inp.group()?).len()));
    r.eq("weyl.class_c.single_class", "class C", true, || {
        let g = inp.group()?;
        Ok(g.conjugacy_class(&weyl::g3()) == weyl::conjugacy_class_c(g))
    });
    r.eq("weyl.class_c.centralizer", "centralizer of g3", 648usize, || Ok(inp.group()?.centralizer_order(&weyl::g3())?));
    r.eq("weyl.class_c.eigenplanes", "80 Hesse planes", 80usize, || {
        let planes = weyl::conjugacy_class_c(inp.group()?)
            .iter()
            .map(|g| Ok(format!("{:?}", weyl::eigenplane(g, &Cyclotomic::omega())?.matrix())))
            .collect::<anyhow::Result<BTreeSet<_>>>()?;
        Ok(planes.len())
    });
    r.eq(
        "weyl.hesse.vanishing",
        "invariants on the Hesse plane",
        json!({ "I2": true, "I5": true, "I8": true, "I6": false, "I9": false, "I12": false }),
        || {
            let o = inp.orbit27()?;
            let w3 = weyl::w3_basis();
            let mut out = serde_json::Map::new();
            for k in [2, 5, 8, 6, 9, 12] {
                out.insert(format!("I{k}"), json!(weyl::restricted_invariant(o, &w3, k).is_zero()));
            }
            Ok(Value::Object(out))
        },
    );
    r.eq("weyl.hesse.independent", "I6^2 and I12 on the Hesse plane", 2usize, || {
        let o = inp.orbit27()?;
        let w3 = weyl::w3_basis();
        let i6 = weyl::restricted_invariant(o, &w3, 6);
        let i12 = weyl::restricted_invariant(o, &w3, 12);
        Ok(Poly::coefficient_rank(&[i6.pow(2), i12]))
    });
}

fn variety_suite(r: &mut Runner, inp: &Inputs) {
    let slow = inp.cfg.slow;
    r.eq("variety.F.terms", "F has 147 terms", 147usize, || Ok(inp.f().num_terms()));
    r.eq("variety.F.degree", "F has degree 10", json!({ "degree": 10, "homogeneous": true }), || {
        Ok(json!({ "degree": inp.f().total_degree(), "homogeneous": inp.f().is_homogeneous() }))
    });
    r.eq("variety.F.euler", "Euler identity", true, || {
        let f = inp.f();
        let x = RatPoly::gens(f.vars());
        let euler = (0..6).fold(RatPoly::zero(f.vars()), |acc, i| acc + &x[i] * &f.partial(i));
        Ok(euler == f.scale(&Rational::from_int(10)))
    });
    r.eq("variety.F.generator_invariance", "F is W(E6)-invariant", true, || {
        variety::verify_generator_invariance(inp.f())?;
        Ok(true)
    });
    if slow {
        r.eq("variety.F.full_invariance", "F is W(E6)-invariant", 0usize, || {
            Ok(variety::verify_full_group_invariance(inp.f(), inp.group()?, &weyl::vec6([3, -1, 4, 1, -5, 9])))
        });
    } else {
        r.skip("variety.F.full_invariance", "F is W(E6)-invariant", json!(0), "needs --slow");
    }
    r.eq_exact("variety.F.invariant_identity", "F in terms of I2, I5, I6, I8", Rational::new(-2, 675), || {
        Ok(variety::verify_invariant_identity(inp.f(), inp.orbit27()?, [11520, -4160, -4608, 25])?)
    });

    r.eq("variety.quadrics.count", "136 even quadrics", 136usize, || Ok(inp.family().len()));
    r.eq("variety.quadrics.cusp", "vanishing table", 120usize, || {
        Ok(inp.family().vanishing_at(&weyl::vec6([1, 0, 0, 0, 0, 0])).len())
    });
    r.eq("variety.quadrics.boundary_line", "vanishing table", 96usize, || {
        let st = Vars::new(&["s", "t"]);
        let images = (0..6).map(|i| if i < 2 { RatPoly::var(&st, i) } else { RatPoly::zero(&st) }).collect();
        let generic_l = SubstitutionMap::from_images(&weyl::p5_vars(), &st, images)?;
        Ok(variety::quadric_vanishing_count(&generic_l, inp.family()))
    });
    r.eq("variety.quadrics.q22", "vanishing table", 36usize, || {
        Ok(variety::quadric_vanishing_count(&variety::q22_parametrization(), inp.family()))
    });
    r.eq("variety.quadrics.w3", "vanishing table", 28usize, || {
        let p = variety::eigenplane_parametrization(&weyl::w3_basis());
        Ok(variety::quadric_vanishing_count(&p, inp.family()))
    });
    r.eq(
        "variety.quadrics.q36",
        "vanishing table",
        json!({ "vanishing": 6, "identicallyZeroOnW": 0, "degree": 2, "cofactorDegree": 8 }),
        || {
            let q = variety::q36_locate(inp.f(), inp.group()?, inp.family())?;
            Ok(json!({
                "vanishing": q.vanishing_quadrics,
                "identicallyZeroOnW": q.identically_zero_on_w,
                "degree": q.q36.homogeneous_degree(),
                "cofactorDegree": q.cofactor_degree,
            }))
        },
    );

    r.eq("variety.a2.factor", "F on the A2 space", json!({ "q22": "X0*X3 - X1*X2", "f22Degree": 6 }), || {
        let a = variety::factor_on_a2_space(inp.f())?;
        let x = RatPoly::gens(a.q22.vars());
        let q22 = if a.q22 == &x[0] * &x[3] - &x[1] * &x[2] { "X0*X3 - X1*X2".to_string() } else { a.q22.to_string() };
        Ok(json!({ "q22": q22, "f22Degree": a.f22.homogeneous_degree() }))
    });
    r.eq(
        "variety.s22.map",
        "S22 to P4 by (X q22 : r3)",
        json!({ "inverse": true, "lines": 6, "linesOnS22": 6, "linesSingular": 6 }),
        || {
            let c = variety::s22_birational_check(inp.f())?;
            Ok(json!({
                "inverse": c.backward_after_forward && c.forward_after_backward,
                "lines": c.lines,
                "linesOnS22": c.lines_on_s22,
                "linesSingular": c.lines_singular_on_s22,
            }))
        },
    );
    r.record("variety.a1a1.factor", "F on X6 = X7 = 0", json!("q67 * scalar * s67"), || {
        let a = variety::factor_on_a1a1_space(inp.f())?;
        Ok((json!({ "scalar": a.scalar.to_string(), "lineSingular": a.line_singular }), !a.scalar.is_zero()))
    });
    r.record("variety.hessian.identity", "Igusa quartic Hessian", json!({ "terms": 591, "proportional": true }), || {
        let h = variety::igusa_hessian_identity(inp.f())?;
        let pass = h.restricted_terms == 591 && h.hessian_terms == 591 && !h.ratio.is_zero();
        Ok((
            json!({ "terms": h.restricted_terms, "hessianTerms": h.hessian_terms, "ratio": h.ratio.to_string() }),
            pass,
        ))
    });
    r.eq("variety.branch_locus", "branch locus over Q(w)", true, || Ok(variety::branch_locus_factorization()));
    r.eq("variety.conics", "s67 on Q67", json!({ "nonzeroPlanes": 8, "even": true, "ratioNonzero": true }), || {
        let c = variety::q67_s67_conic_check()?;
        Ok(json!({ "nonzeroPlanes": c.nonzero_planes, "even": c.s67_even, "ratioNonzero": !c.ratio.is_zero() }))
    });

    r.eq("variety.sing.q22", "Q22 is singular", true, || {
        Ok(variety::singular_membership(inp.f(), &variety::q22_parametrization()))
    });
    r.eq("variety.sing.w3", "Hesse plane is singular", true, || {
        Ok(variety::singular_membership(inp.f(), &variety::eigenplane_parametrization(&weyl::w3_basis())))
    });
    r.eq(
        "variety.sing.accounting",
        "singular surfaces of total degree 320",
        json!({ "quadricSurfaces": 120, "planes": 80, "totalDegree": 320 }),
        || {
            let a = variety::sing_degree_accounting(inp.f(), inp.group()?)?;
            Ok(json!({ "quadricSurfaces": a.quadric_surfaces, "planes": a.planes, "totalDegree": a.total_degree }))
        },
    );
    r.record("variety.sing.generic_point", "generic points are smooth", json!("|F| < 1e-9, |grad| > 1e-6"), || {
        let (on, grad) = variety::generic_smooth_point_gradient(inp.f(), inp.cfg.seed);
        Ok((json!({ "f": on, "grad": grad }), on < 1e-9 && grad > 1e-6))
    });
}

fn boundary_suite(r: &mut Runner, inp: &Inputs) {
    let report = OnceCell::new();
    let get = || -> anyhow::Result<&variety::BoundaryReport> {
        if report.get().is_none() {
            let b = variety::boundary_incidence(inp.f(), inp.group()?)?;
            let _ = report.set(b);
        }
        Ok(report.get().expect("set above"))
    };
    r.eq(
        "boundary.incidence",
        "45 lines and 27 cusps",
        json!({ "lines": 45, "cusps": 27, "cuspsPerLine": 3, "linesPerCusp": 5 }),
        || {
            let b = get()?;
            Ok(json!({
                "lines": b.lines.len(),
                "cusps": b.cusps.len(),
                "cuspsPerLine": variety::BoundaryReport::uniform(&b.cusps_per_line),
                "linesPerCusp": variety::BoundaryReport::uniform(&b.lines_per_cusp),
            }))
        },
    );
    r.eq("boundary.cusps.lambda2", "cusps form the lambda2 orbit", true, || Ok(get()?.cusps_are_lambda2_orbit));
    r.eq(
        "boundary.cusps_on_l",
        "cusps on the line l",
        ["(1:-1:0:0:0:0)", "(1:0:0:0:0:0)", "(1:1:0:0:0:0)"].map(String::from).to_vec(),
        || {
            let l = variety::boundary_line_l();
            let mut on: Vec<String> = get()?.cusps.iter().filter(|p| l.contains(p)).map(point_label).collect();
            on.sort();
            Ok(on)
        },
    );
    r.eq("boundary.f_vanishes", "F vanishes on the boundary lines", true, || Ok(get()?.f_vanishes_on_lines));
    r.eq("boundary.heisenberg", "boundary line from the Heisenberg action", true, || {
        Ok(variety::heisenberg_boundary_check().holds())
    });
}

fn class_name(c: theta::VanishingClass) -> String {
    format!("{c:?}")
}

fn theta_suite(r: &mut Runner, inp: &Inputs) {
    let cfg = inp.cfg.theta;
    let tol = cfg.tolerance;

    r.record("theta.null_at_i", "theta constant at iI", json!("1.3932 ± 1e-4"), || {
        let t: theta::CMat4 = std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { C64::new(0.0, 1.0) } else { C64::new(0.0, 0.0) })
        });
        let tau = SiegelPoint::new(t)?;
        let v = theta::theta_value(ThetaChar { eps: 0, eps_prime: 0 }, &tau, &[C64::new(0.0, 0.0); 4], &cfg)?;
        let one: f64 = (-20i32..=20).map(|n| (-std::f64::consts::PI * f64::from(n * n)).exp()).sum();
        let pass = (v.re - 1.3932).abs() < 1e-4 && (v.re - one.powi(4)).abs() < 1e-12 && v.im.abs() < 1e-12;
        Ok((json!(v.re), pass))
    });
    r.below("theta.parity.odd_nulls", "odd thetanulls vanish", 1e-14, || {
        let mut rng = inp.rng(1);
        let mut worst = 0.0f64;
        for _ in 0..3 {
            let tau = theta::sample_hermite_point(&theta::random_b(&mut rng))?;
            worst = worst.max(theta::odd_null_max(&tau, &cfg)?);
        }
        Ok(worst)
    });
    r.below("theta.parity.z", "theta parity in z", 1e-10, || {
        let mut rng = inp.rng(2);
        let tau = theta::sample_hermite_point(&theta::random_b(&mut rng))?;
        let z: [C64; 4] = std::array::from_fn(|_| C64::new(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)));
        let mz = z.map(|x| -x);
        let mut worst = 0.0f64;
        for eps in 0..16u8 {
            for eps_prime in [0u8, 5, 15] {
                let ch = ThetaChar { eps, eps_prime };
                let a = theta::theta_value(ch, &tau, &z, &cfg)?;
                let b = theta::theta_value(ch, &tau, &mz, &cfg)?;
                let sign = if ch.is_even() { 1.0 } else { -1.0 };
                worst = worst.max((a - b * sign).norm() / a.norm().max(1.0));
            }
        }
        Ok(worst)
    });

    let n = inp.cfg.samples;
    r.record(
        "theta.bridge.samples",
        "theta map lands on X",
        json!({ "samples": n, "passing": n, "tol": tol }),
        || {
            let f = inp.f();
            let mut rng = inp.rng(3);
            let (mut passing, mut worst_dev, mut worst_f) = (0usize, 0.0f64, 0.0f64);
            for _ in 0..n {
                let tau = theta::sample_hermite_point(&theta::random_b(&mut rng))?;
                let Ok(img) = theta::theta_map_p5(&tau, &cfg) else { continue };
                let res = theta::f_residual(f, &img.coords);
                worst_dev = worst_dev.max(img.deviation);
                worst_f = worst_f.max(res);
                if img.deviation < tol && res < tol {
                    passing += 1;
                }
            }
            let actual = json!({
                "samples": n,
                "passing": passing,
                "worstTripleDeviation": worst_dev,
                "worstFResidual": worst_f,
            });
            Ok((actual, passing == n))
        },
    );
    r.below("theta.bridge.mb", "M_B locus lands on X6 = X7", tol, || {
        let mut rng = inp.rng(4);
        let mut worst = 0.0f64;
        for _ in 0..10 {
            let p = theta::random_locus_params(FixedLocusTag::MMb, &mut rng);
            let img = theta::theta_map_p5(&theta::sample_fixed_locus(FixedLocusTag::MMb, &p)?, &cfg)?;
            worst = worst.max((img.coords[4] - img.coords[5]).norm());
        }
        Ok(worst)
    });
    r.below("theta.bridge.m12", "M12 locus lands on Q36", 1e-6, || {
        let q36 = variety::q36_locate(inp.f(), inp.group()?, inp.family())?.q36;
        let mut rng = inp.rng(5);
        let mut worst = 0.0f64;
        for _ in 0..10 {
            let p = theta::random_locus_params(FixedLocusTag::M12, &mut rng);
            let x = theta::theta_map_p5(&theta::sample_fixed_locus(FixedLocusTag::M12, &p)?, &cfg)?.coords;
            let w = [x[0], x[1], x[3], x[4]];
            worst = worst.max(q36.eval_complex(&w).norm() / q36.eval_abs_complex(&w));
        }
        Ok(worst)
    });
    r.eq("theta.bridge.m12_forced", "MC sign rule on the M12 locus", true, || {
        let forced = theta::mc_forced_vanishing();
        let mut rng = inp.rng(6);
        for _ in 0..3 {
            let p = theta::random_locus_params(FixedLocusTag::M12, &mut rng);
            let tau = theta::sample_fixed_locus(FixedLocusTag::M12, &p)?;
            let zero = theta::vanishing_profile(&tau, &cfg)?.zero;
            if !forced.iter().all(|c| zero.contains(c)) {
                return Ok(false);
            }
        }
        Ok(true)
    });
    r.eq("theta.mc_sign_rule", "MC sign rule", 6usize, || Ok(theta::mc_forced_vanishing().len()));

    let profiles = [
        ("theta.profile.generic", ProfileKind::Generic, 0usize, theta::VanishingClass::Generic),
        ("theta.profile.q22", ProfileKind::Q22, 36, theta::VanishingClass::SurfaceTimesSurface),
        ("theta.profile.w3", ProfileKind::W3, 28, theta::VanishingClass::EllipticTimesThreefold),
        ("theta.profile.boundary_line", ProfileKind::BoundaryLine, 96, theta::VanishingClass::TorusSquaredTimesSurface),
        ("theta.profile.cusp", ProfileKind::Cusp, 120, theta::VanishingClass::TorusBoundary),
    ];
    for (k, (id, kind, count, class)) in profiles.into_iter().enumerate() {
        r.eq(id, "vanishing table", json!({ "zeros": count, "class": class_name(class) }), || {
            let mut rng = inp.rng(10 + k as u64);
            let p = theta::vanishing_profile(&theta::profile_sample(kind, &mut rng)?, &cfg)?;
            Ok(json!({ "zeros": p.zero.len(), "class": class_name(p.class) }))
        });
    }
    r.eq("theta.quadrics_match", "quadric values are squared thetanulls", true, || {
        let fam = inp.family();
        let mut rng = inp.rng(20);
        for kind in [ProfileKind::Q22, ProfileKind::W3] {
            let tau = theta::profile_sample(kind, &mut rng)?;
            let x = theta::theta_map_p5(&tau, &cfg)?.coords;
            let zeros = theta::vanishing_profile(&tau, &cfg)?.zero;
            let quadric_zeros: Vec<ThetaChar> = fam
                .characteristics
                .iter()
                .zip(&fam.quadrics)
                .filter(|(_, q)| q.eval_complex(&x).norm() < tol * q.eval_abs_complex(&x))
                .map(|(c, _)| *c)
                .collect();
            if quadric_zeros != zeros {
                return Ok(false);
            }
        }
        Ok(true)
    });
    r.eq("theta.isogeny", "isogeny diagrams commute", true, || {
        let mut rng = inp.rng(21);
        let p = theta::random_locus_params(FixedLocusTag::MMb, &mut rng);
        Ok(theta::isogeny_diagram_check(&[[p[0], p[1]], [p[1], p[2]]]))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_arms() {
        assert_eq!(dynkin_arms(&weyl::gram_matrix().1), Some(vec![1, 2, 2]));
        assert_eq!(dynkin_arms(&[(1, 2), (2, 3)]), None);
    }

    #[test]
    fn exact_suite_passes() {
        let report = run_suite(&RunConfig::new([Suite::Exact]).unwrap());
        assert!(report.all_passed(), "{}", report.render_text());
        assert!(report.get("symplectic.m12.order").is_some());
    }
}
