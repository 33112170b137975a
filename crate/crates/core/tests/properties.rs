use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use picard_core::exact::Rational;
use picard_core::poly::RatPoly;
use picard_core::theta::*;
use picard_core::variety::build_f;
use picard_core::weyl::*;

fn group() -> &'static GroupTable {
    static G: OnceLock<GroupTable> = OnceLock::new();
    G.get_or_init(|| generate_group(&generator_matrices()).unwrap())
}

fn roots() -> &'static Vec<Vec6> {
    static R: OnceLock<Vec<Vec6>> = OnceLock::new();
    R.get_or_init(|| group().orbit(&simple_roots()[0], false).into_iter().collect())
}

fn f() -> &'static RatPoly {
    static F: OnceLock<RatPoly> = OnceLock::new();
    F.get_or_init(build_f)
}

fn vector() -> impl Strategy<Value = Vec6> {
    proptest::array::uniform6((-20i64..=20, 1i64..=4)).prop_map(|v| v.map(|(n, d)| Rational::new(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions(k in 0usize..72, x in vector()) {
        let a = &roots()[k];
        prop_assert_eq!(reflection(a, &reflection(a, &x).unwrap()).unwrap(), x.clone());
        // and preserve b.
        let sx = reflection(a, &x).unwrap();
        prop_assert_eq!(b_form(&sx, &sx), b_form(&x, &x));
    }

    #[test]
    fn group_elements_preserve_b(k in 0usize..51840, x in vector(), y in vector()) {
        let g = &group().elements()[k];
        prop_assert_eq!(b_form(&g.apply(&x), &g.apply(&y)), b_form(&x, &y));
    }

    #[test]
    fn orbits_are_setwise_stable(k in 0usize..51840) {
        let g = &group().elements()[k];
        let set: BTreeSet<Vec6> = roots().iter().cloned().collect();
        let image: BTreeSet<Vec6> = roots().iter().map(|r| g.apply(r)).collect();
        prop_assert_eq!(image, set);
        let o27: BTreeSet<Vec6> = orbit_vectors_27(group()).into_iter().collect();
        let image27: BTreeSet<Vec6> = o27.iter().map(|v| g.apply(v)).collect();
        prop_assert_eq!(image27, o27);
    }

    #[test]
    fn products_stay_in_the_group(i in 0usize..51840, j in 0usize..51840) {
        let g = group();
        let p = g.elements()[i].mul(&g.elements()[j]);
        prop_assert!(g.contains(&p));
        prop_assert_eq!(g.elements()[g.mul_index(i, j)], p);
    }

    #[test]
    fn euler_identity_at_points(x in vector()) {
        let lhs = (0..6).fold(Rational::ZERO, |acc, i| acc + &(x[i].clone() * &f().partial(i).eval(&x)));
        prop_assert_eq!(lhs, Rational::from_int(10) * &f().eval(&x));
    }

    #[test]
    fn f_is_constant_on_orbits(k in 0usize..51840, x in vector()) {
        let g = &group().elements()[k];
        prop_assert_eq!(f().eval(&g.apply(&x)), f().eval(&x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn theta_parity(
        eps in 0u8..16,
        eps_prime in 0u8..16,
        b in proptest::array::uniform4((-0.3f64..0.3, 0.7f64..1.3)),
        z in proptest::array::uniform4((-0.3f64..0.3, -0.3f64..0.3)),
    ) {
        let bm = [[C64::new(b[0].0, b[0].1), C64::new(b[1].0, 0.1 * b[1].1)],
                  [C64::new(b[2].0, -0.1 * b[2].1), C64::new(b[3].0, b[3].1)]];
        let tau = sample_hermite_point(&bm).unwrap();
        let z = z.map(|(a, b)| C64::new(a, b));
        let ch = ThetaChar { eps, eps_prime };
        let cfg = ThetaConfig::default();
        let plus = theta_value(ch, &tau, &z, &cfg).unwrap();
        let minus = theta_value(ch, &tau, &z.map(|w| -w), &cfg).unwrap();
        let sign = if ch.is_even() { 1.0 } else { -1.0 };
        prop_assert!((plus - minus * sign).norm() < 1e-10 * plus.norm().max(1.0));
        if !ch.is_even() {
            let null = theta_value(ch, &tau, &[C64::new(0.0, 0.0); 4], &cfg).unwrap();
            prop_assert!(null.norm() < 1e-14);
        }
    }
}
