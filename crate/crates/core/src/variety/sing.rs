//! Components of the singular locus: the 120 quadric surfaces and the 80 planes.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{Cyclotomic, ExactMatrix, Field, RatMatrix, Rational};
use crate::poly::{RatPoly, SubstitutionMap, Vars};
use crate::weyl::{conjugacy_class_c, eigenplane, p5_vars, plane_vars, EigenplaneBasis, GroupTable};
use crate::VarietyError;

/// True iff every partial derivative of `f` vanishes identically under `param`.
pub fn singular_membership<C: Field>(f: &RatPoly, param: &SubstitutionMap<C>) -> bool {
    (0..f.nvars()).all(|i| f.partial(i).map_coeffs(|c| C::from(c.clone())).substitute(param).expect("P5 ring").is_zero())
}

fn stuv() -> Vars {
    Vars::new(&["s", "t", "u", "v"])
}

/// `(X₀, X₁, X₂, X₃, X₆, X₇) = (su, sv, tu, tv, tv, tv)`, the quadric `Q₂₂`.
pub fn q22_parametrization() -> SubstitutionMap<Rational> {
    let w = stuv();
    let g = RatPoly::gens(&w);
    let (s, t, u, v) = (&g[0], &g[1], &g[2], &g[3]);
    let tv = t * v;
    let images = alloc::vec![s * u, s * v, t * u, tv.clone(), tv.clone(), tv];
    SubstitutionMap::from_images(&p5_vars(), &w, images).expect("six images")
}

/// `X = W t` for a plane with basis columns `W`.
pub fn eigenplane_parametrization(plane: &EigenplaneBasis) -> SubstitutionMap<Cyclotomic> {
    let t = plane_vars();
    let m = plane.matrix();
    let rows: Vec<Vec<Cyclotomic>> = (0..6).map(|i| m.row(i).to_vec()).collect();
    SubstitutionMap::linear(&p5_vars(), &t, &rows).expect("6x3")
}

fn uvars() -> Vars {
    Vars::new(&["u0", "u1", "u2", "u3"])
}

/// A quadric surface inside a `P³ ⊂ P⁵`: the span in reduced column echelon
/// form and the monic quadric in the induced coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadricSurface {
    pub span: RatMatrix,
    pub quadric: RatPoly,
}

impl QuadricSurface {
    /// `Q₂₂ ⊂ Z = {X₃ = X₆ = X₇}`.
    pub fn q22() -> Self {
        let span = ExactMatrix::from_i64_rows(&[
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [0, 0, 0, 1],
            [0, 0, 0, 1],
        ]);
        let u = RatPoly::gens(&uvars());
        let quadric = &u[0] * &u[3] - &u[1] * &u[2];
        QuadricSurface { span, quadric }
    }

    /// Image under a coordinate matrix.
    pub fn transform(&self, g: &RatMatrix) -> Self {
        let moved = g.mul(&self.span).expect("6x6 times 6x4");
        let span = moved.column_echelon();
        // moved = span · T, with T read off at the pivot rows of `span`.
        let pivots: Vec<usize> = (0..4).map(|j| (0..6).find(|&i| !span[(i, j)].is_zero()).expect("rank 4")).collect();
        let t = ExactMatrix::from_fn(4, 4, |i, j| moved[(pivots[i], j)].clone());
        let tinv = t.inverse().expect("invertible");
        let vars = uvars();
        let rows: Vec<Vec<Rational>> = (0..4).map(|i| tinv.row(i).to_vec()).collect();
        let map = SubstitutionMap::linear(&vars, &vars, &rows).expect("4x4");
        let quadric = self.quadric.substitute(&map).expect("u ring").monic();
        QuadricSurface { span, quadric }
    }

    fn key(&self) -> (Vec<Rational>, alloc::string::String) {
        (self.span.entries().to_vec(), alloc::format!("{}", self.quadric))
    }
}

/// The W(E6)-orbit of `(Z, Q₂₂)`, each member with a parametrization by `(s, t, u, v)`.
pub fn quadric_surface_orbit(group: &GroupTable) -> Vec<(QuadricSurface, SubstitutionMap<Rational>)> {
    let gens = group.generator_coordinates();
    let p5 = p5_vars();
    let start = (QuadricSurface::q22(), q22_parametrization());
    let mut seen = BTreeMap::new();
    seen.insert(start.0.key(), 0usize);
    let mut out = alloc::vec![start];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in &gens {
            let surface = out[k].0.transform(g);
            let key = surface.key();
            if seen.contains_key(&key) {
                continue;
            }
            let map = &out[k].1;
            let images: Vec<RatPoly> = (0..6)
                .map(|i| {
                    (0..6).fold(RatPoly::zero(map.target()), |acc, j| {
                        acc + map.image(j).expect("total").scale(&g[(i, j)])
                    })
                })
                .collect();
            let param = SubstitutionMap::from_images(&p5, map.target(), images).expect("six images");
            seen.insert(key, out.len());
            queue.push_back(out.len());
            out.push((surface, param));
        }
    }
    out
}

/// Degree bookkeeping for the known two-dimensional components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingAccounting {
    pub quadric_surfaces: usize,
    pub planes: usize,
    pub total_degree: usize,
    pub quadric_failures: usize,
    pub plane_failures: usize,
}

pub fn sing_degree_accounting(f: &RatPoly, group: &GroupTable) -> Result<SingAccounting, VarietyError> {
    let surfaces = quadric_surface_orbit(group);
    let quadric_failures = surfaces.iter().filter(|(_, p)| !singular_membership(f, p)).count();
    let mut planes: Vec<EigenplaneBasis> = Vec::new();
    for g in conjugacy_class_c(group) {
        let p = eigenplane(&g, &Cyclotomic::omega())?;
        if !planes.contains(&p) {
            planes.push(p);
        }
    }
    let plane_failures = planes.iter().filter(|p| !singular_membership(f, &eigenplane_parametrization(p))).count();
    let acc = SingAccounting {
        quadric_surfaces: surfaces.len(),
        planes: planes.len(),
        total_degree: 2 * surfaces.len() + planes.len(),
        quadric_failures,
        plane_failures,
    };
    if quadric_failures + plane_failures > 0 {
        return Err(VarietyError::CountMismatch {
            what: "components outside Sing(X)",
            expected: 0,
            actual: quadric_failures + plane_failures,
        });
    }
    Ok(acc)
}

/// Roots of a complex polynomial (coefficients from the constant term up)
/// by Durand–Kerner iteration.
fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

/// Finds a point of `X` on a random rational line and returns
/// `(|F|/scale, |∇F|/scale)` there; the second value is far from zero at a
/// smooth point.
pub fn generic_smooth_point_gradient(f: &RatPoly, seed: u64) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = Vars::new(&["t"]);
    let tvar = RatPoly::var(&t, 0);
    let base: Vec<i64> = (0..6).map(|_| rng.gen_range(-5..=5)).collect();
    let dir: Vec<i64> = (0..6).map(|_| rng.gen_range(-5..=5)).collect();
    let images: Vec<RatPoly> = (0..6)
        .map(|i| RatPoly::constant(&t, Rational::from_int(base[i])) + tvar.scale(&Rational::from_int(dir[i])))
        .collect();
    let map = SubstitutionMap::from_images(f.vars(), &t, images).expect("six images");
    let line = f.substitute(&map).expect("P5 ring");
    let deg = line.total_degree().unwrap_or(0) as usize;
    let coeffs: Vec<Complex64> = (0..=deg)
        .map(|k| line.coefficient(&crate::poly::Monomial::from_exponents(&[k as u32])).to_complex())
        .collect();
    let root = polynomial_roots(&coeffs)[0];
    let point: Vec<Complex64> =
        (0..6).map(|i| Complex64::new(base[i] as f64, 0.0) + root * dir[i] as f64).collect();
    let rel = |p: &RatPoly| {
        let s = p.eval_abs_complex(&point);
        if s == 0.0 { 0.0 } else { p.eval_complex(&point).norm() / s }
    };
    let grad = (0..6).map(|i| rel(&f.partial(i))).fold(0.0, f64::max);
    (rel(f), grad)
}
