use std::sync::OnceLock;

use picard_core::exact::{Cyclotomic, Rational};
use picard_core::poly::{RatPoly, SubstitutionMap, Vars};
use picard_core::variety::*;
use picard_core::weyl::*;

fn group() -> &'static GroupTable {
    static G: OnceLock<GroupTable> = OnceLock::new();
    G.get_or_init(|| generate_group(&generator_matrices()).unwrap())
}

fn f() -> &'static RatPoly {
    static F: OnceLock<RatPoly> = OnceLock::new();
    F.get_or_init(build_f)
}

fn family() -> &'static QuadricFamily {
    static Q: OnceLock<QuadricFamily> = OnceLock::new();
    Q.get_or_init(restrict_quadrics)
}

#[test]
fn invariant_identity_and_control() {
    let orbit = orbit_vectors_27(group());
    let c = verify_invariant_identity(f(), &orbit, [11520, -4160, -4608, 25]).unwrap();
    assert_eq!(c, Rational::new(2, 675));
    assert!(verify_invariant_identity(f(), &orbit, [11520, -4160, -4609, 25]).is_err());
}

#[test]
fn f_is_invariant_under_the_whole_group() {
    let point = vec6([3, -1, 4, 1, -5, 9]);
    assert_eq!(verify_full_group_invariance(f(), group(), &point), 0);
}

#[test]
fn quadric_counts_on_special_loci() {
    let fam = family();
    let r = |v: [i64; 6]| v.map(Rational::from_int);
    assert_eq!(fam.vanishing_at(&r([1, 0, 0, 0, 0, 0])).len(), 120);

    let x1 = Vars::new(&["s", "t"]);
    let generic_l = SubstitutionMap::from_images(
        &p5_vars(),
        &x1,
        (0..6).map(|i| if i < 2 { RatPoly::var(&x1, i) } else { RatPoly::zero(&x1) }).collect(),
    )
    .unwrap();
    assert_eq!(quadric_vanishing_count(&generic_l, fam), 96);
    assert_eq!(quadric_vanishing_count(&q22_parametrization(), fam), 36);
    assert_eq!(quadric_vanishing_count(&eigenplane_parametrization(&w3_basis()), fam), 28);
}

#[test]
fn counts_are_stable_on_translates() {
    let fam = family();
    for (_, param) in quadric_surface_orbit(group()).iter().step_by(17) {
        assert_eq!(quadric_vanishing_count(param, fam), 36);
    }
    for g in conjugacy_class_c(group()).iter().step_by(11) {
        let plane = eigenplane(g, &Cyclotomic::omega()).unwrap();
        assert_eq!(quadric_vanishing_count(&eigenplane_parametrization(&plane), fam), 28);
    }
}

#[test]
fn singular_locus_degree_is_320() {
    let acc = sing_degree_accounting(f(), group()).unwrap();
    assert_eq!(acc.quadric_surfaces, 120);
    assert_eq!(acc.planes, 80);
    assert_eq!(acc.total_degree, 320);
}

#[test]
fn generic_point_is_not_singular() {
    for seed in [1, 2, 3] {
        let (on, grad) = generic_smooth_point_gradient(f(), seed);
        assert!(on < 1e-9 && grad > 1e-6, "seed {seed}: {on} {grad}");
    }
}

#[test]
fn boundary_lines_and_cusps() {
    let r = boundary_incidence(f(), group()).unwrap();
    assert_eq!(r.lines.len(), 45);
    assert_eq!(r.cusps.len(), 27);
    assert_eq!(BoundaryReport::uniform(&r.cusps_per_line), Some(3));
    assert_eq!(BoundaryReport::uniform(&r.lines_per_cusp), Some(5));
    assert!(r.cusps_are_lambda2_orbit);
    assert!(r.f_vanishes_on_lines);
    let l = boundary_line_l();
    let on_l: Vec<Vec6> = r.cusps.iter().filter(|p| l.contains(p)).cloned().collect();
    assert_eq!(on_l, vec![vec6([1, -1, 0, 0, 0, 0]), vec6([1, 0, 0, 0, 0, 0]), vec6([1, 1, 0, 0, 0, 0])]);
}

#[test]
fn q36_on_w_prime() {
    let r = q36_locate(f(), group(), family()).unwrap();
    assert_eq!(r.q36.homogeneous_degree(), Some(2));
    assert_eq!(r.cofactor_degree, 8);
    assert_eq!(r.vanishing_quadrics, 6);
    assert_eq!(r.identically_zero_on_w, 0);
}

#[test]
fn hessian_identity() {
    let h = igusa_hessian_identity(f()).unwrap();
    assert_eq!(h.restricted_terms, 591);
    assert_eq!(h.hessian_terms, 591);
    assert!(!h.ratio.is_zero());
}
