use std::collections::BTreeSet;
use std::sync::OnceLock;

use picard_core::exact::{Cyclotomic, Rational};
use picard_core::poly::{Poly, RatPoly, SubstitutionMap};
use picard_core::weyl::*;

fn group() -> &'static GroupTable {
    static G: OnceLock<GroupTable> = OnceLock::new();
    G.get_or_init(|| generate_group(&generator_matrices()).unwrap())
}

fn orbit27() -> Vec<Vec6> {
    orbit_vectors_27(group())
}

#[test]
fn order_is_51840() {
    assert_eq!(group().order(), 51840);
}

#[test]
fn minus_identity_is_not_in_the_group() {
    let mut m = WeylElement::IDENTITY;
    for i in 0..6 {
        m.0[i][i] = -1;
    }
    assert!(!group().contains(&m));
}

#[test]
fn every_element_preserves_b() {
    // In the root basis, b-invariance reads Rᵀ C R = C for the Cartan matrix C.
    let (c, _) = gram_matrix();
    let c: Vec<Vec<i64>> = (0..6).map(|i| (0..6).map(|j| c[(i, j)].to_i64().unwrap()).collect()).collect();
    for g in group().elements() {
        for i in 0..6 {
            for j in 0..6 {
                let v: i64 = (0..6)
                    .flat_map(|k| (0..6).map(move |l| (k, l)))
                    .map(|(k, l)| i64::from(g.0[k][i]) * c[k][l] * i64::from(g.0[l][j]))
                    .sum();
                assert_eq!(v, c[i][j]);
            }
        }
    }
}

#[test]
fn orbit_sizes() {
    let g = group();
    let v27 = orbit27();
    assert_eq!(v27.len(), 27);
    for v in &v27 {
        assert_eq!(b_form(v, v), Rational::new(1, 3));
    }
    let roots = g.orbit(&simple_roots()[0], false);
    assert_eq!(roots.len(), 72);
    for r in &roots {
        assert_eq!(b_form(r, r), Rational::from_int(2));
    }
    let cusps = g.orbit(&fundamental_weight(2).unwrap(), true);
    assert_eq!(cusps.len(), 27);
}

#[test]
fn orbits_are_setwise_stable() {
    let g = group();
    let roots = g.orbit(&simple_roots()[0], false);
    for h in g.elements().iter().step_by(97) {
        let m = h.coordinates();
        let image: BTreeSet<Vec6> = roots
            .iter()
            .map(|r| {
                let v = m.mul_vec(r).unwrap();
                std::array::from_fn(|i| v[i].clone())
            })
            .collect();
        assert_eq!(image, roots);
    }
}

#[test]
fn class_c() {
    let g = group();
    let c = conjugacy_class_c(g);
    assert_eq!(c.len(), 80);
    assert!(c.contains(&g3()));
    assert_eq!(g.conjugacy_class(&g3()), c);
    for x in &c {
        assert!(c.contains(&x.mul(x)));
    }
    assert_eq!(g.centralizer_order(&g3()), Ok(648));
    assert_eq!(g.centralizer_order(&WeylElement::IDENTITY), Ok(51840));
    assert_eq!(51840 / 648, c.len());
}

#[test]
fn eighty_eigenplanes() {
    let c = conjugacy_class_c(group());
    let planes: BTreeSet<String> = c
        .iter()
        .map(|g| format!("{:?}", eigenplane(g, &Cyclotomic::omega()).unwrap().matrix()))
        .collect();
    assert_eq!(planes.len(), 80);
}

#[test]
fn i2_is_a_multiple_of_b() {
    let i2 = invariant_polynomial(&orbit27(), 2);
    let v = p5_vars();
    let x: Vec<RatPoly> = Poly::gens(&v);
    let mut expected = x[0].pow(2).scale(&Rational::new(1, 2));
    for xi in &x[1..] {
        expected = expected + xi.pow(2).scale(&Rational::new(3, 2));
    }
    assert_eq!(i2, expected);
}

#[test]
fn invariants_are_fixed_by_generators() {
    let v27 = orbit27();
    let vars = p5_vars();
    for k in [2, 5, 6] {
        let ik = invariant_polynomial(&v27, k);
        for g in generator_matrices() {
            let rows: Vec<Vec<Rational>> = (0..6).map(|i| g.row(i).to_vec()).collect();
            let map = SubstitutionMap::linear(&vars, &vars, &rows).unwrap();
            assert_eq!(ik.substitute(&map).unwrap(), ik, "I_{k}");
        }
    }
}

#[test]
fn hesse_plane_restrictions() {
    let v27 = orbit27();
    let w3 = w3_basis();
    for k in [2, 5, 8] {
        assert!(restricted_invariant(&v27, &w3, k).is_zero(), "I_{k}");
    }
    for k in [6, 9, 12] {
        assert!(!restricted_invariant(&v27, &w3, k).is_zero(), "I_{k}");
    }
    let i6 = restricted_invariant(&v27, &w3, 6);
    let i12 = restricted_invariant(&v27, &w3, 12);
    assert_eq!(Poly::coefficient_rank(&[i6.pow(2), i12]), 2);
}
