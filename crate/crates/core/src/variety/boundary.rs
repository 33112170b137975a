//! Boundary lines and cusps, and the Heisenberg actions on `P¹⁵`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::exact::{ExactMatrix, RatMatrix, Rational};
use crate::poly::{RatPoly, SubstitutionMap, Vars};
use crate::weyl::{fundamental_weight, orbit_under, p5_vars, projective_canonical, vec6, GroupTable, Vec6};
use crate::VarietyError;

use super::quadrics::{m_index_permutation, EMBEDDING};

/// A line in `P⁵`, stored as the reduced row echelon form of a 2×6 basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ProjectiveLine {
    rows: [Vec6; 2],
}

impl ProjectiveLine {
    pub fn through(p: &Vec6, q: &Vec6) -> Option<Self> {
        let m = ExactMatrix::from_rows(&[p.to_vec(), q.to_vec()]).expect("2x6");
        let (r, pivots) = m.rref();
        if pivots.len() != 2 {
            return None;
        }
        let row = |i: usize| core::array::from_fn(|j| r[(i, j)].clone());
        Some(ProjectiveLine { rows: [row(0), row(1)] })
    }

    pub fn rows(&self) -> &[Vec6; 2] {
        &self.rows
    }

    pub fn transform(&self, g: &RatMatrix) -> Self {
        let img = |v: &Vec6| -> Vec6 {
            let w = g.mul_vec(v).expect("6x6");
            core::array::from_fn(|i| w[i].clone())
        };
        Self::through(&img(&self.rows[0]), &img(&self.rows[1])).expect("g invertible")
    }

    pub fn contains(&self, p: &Vec6) -> bool {
        let m = ExactMatrix::from_rows(&[self.rows[0].to_vec(), self.rows[1].to_vec(), p.to_vec()]).expect("3x6");
        m.rank() == 2
    }

    /// `X = s·r₀ + t·r₁`.
    pub fn parametrization(&self) -> SubstitutionMap<Rational> {
        let st = Vars::new(&["s", "t"]);
        let rows: Vec<Vec<Rational>> =
            (0..6).map(|i| alloc::vec![self.rows[0][i].clone(), self.rows[1][i].clone()]).collect();
        SubstitutionMap::linear(&p5_vars(), &st, &rows).expect("6x2")
    }
}

/// `l = {X₂ = X₃ = X₆ = X₇ = 0}`.
pub fn boundary_line_l() -> ProjectiveLine {
    ProjectiveLine::through(&vec6([1, 0, 0, 0, 0, 0]), &vec6([0, 1, 0, 0, 0, 0])).expect("independent")
}

/// The intersection point of two distinct lines, in canonical projective form.
pub fn line_intersection(a: &ProjectiveLine, b: &ProjectiveLine) -> Option<Vec6> {
    if a == b {
        return None;
    }
    // Solve x r₀ + y r₁ - z s₀ - w s₁ = 0.
    let cols = [
        a.rows[0].to_vec(),
        a.rows[1].to_vec(),
        b.rows[0].iter().map(|x| -x.clone()).collect(),
        b.rows[1].iter().map(|x| -x.clone()).collect(),
    ];
    let m = ExactMatrix::from_columns(&cols).expect("6x4");
    let ker = m.kernel();
    if ker.len() != 1 {
        return None;
    }
    let k = &ker[0];
    let p: Vec6 = core::array::from_fn(|i| k[0].clone() * &a.rows[0][i] + &(k[1].clone() * &a.rows[1][i]));
    Some(projective_canonical(&p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    pub lines: Vec<ProjectiveLine>,
    pub cusps: Vec<Vec6>,
    /// Number of cusps on each line, in the order of `lines`.
    pub cusps_per_line: Vec<usize>,
    /// Number of lines through each cusp, in the order of `cusps`.
    pub lines_per_cusp: Vec<usize>,
    pub cusps_are_lambda2_orbit: bool,
    pub f_vanishes_on_lines: bool,
}

impl BoundaryReport {
    /// The common value of a list, if all entries agree.
    pub fn uniform(v: &[usize]) -> Option<usize> {
        let first = *v.first()?;
        v.iter().all(|&x| x == first).then_some(first)
    }
}

pub fn boundary_incidence(f: &RatPoly, group: &GroupTable) -> Result<BoundaryReport, VarietyError> {
    let gens = group.generator_coordinates();
    let lines: Vec<ProjectiveLine> = orbit_under(&gens, boundary_line_l(), |g, l| l.transform(g)).into_iter().collect();
    let mut cusps = BTreeSet::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if let Some(p) = line_intersection(a, b) {
                cusps.insert(p);
            }
        }
    }
    let cusps: Vec<Vec6> = cusps.into_iter().collect();
    let cusps_per_line = lines.iter().map(|l| cusps.iter().filter(|p| l.contains(p)).count()).collect();
    let lines_per_cusp = cusps.iter().map(|p| lines.iter().filter(|l| l.contains(p)).count()).collect();
    let lambda2 = group.orbit(&fundamental_weight(2)?, true);
    let cusps_are_lambda2_orbit = cusps.iter().cloned().collect::<BTreeSet<_>>() == lambda2;
    let mut f_vanishes_on_lines = true;
    for l in &lines {
        if !f.substitute(&l.parametrization())?.is_zero() {
            f_vanishes_on_lines = false;
        }
    }
    Ok(BoundaryReport { lines, cusps, cusps_per_line, lines_per_cusp, cusps_are_lambda2_orbit, f_vanishes_on_lines })
}

/// Signs of `X_σ ↦ (-1)^{β·σ} X_σ` for `β` encoded as a 4-bit index.
pub fn heisenberg_sign(beta: usize) -> [i8; 16] {
    core::array::from_fn(|s| if (s & beta).count_ones().is_multiple_of(2) { 1 } else { -1 })
}

/// The permutation `σ ↦ σ + γ` realizing `X_σ ↦ X_{σ+γ}`.
pub fn heisenberg_shift(gamma: usize) -> [usize; 16] {
    core::array::from_fn(|s| s ^ gamma)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergReport {
    /// Coordinates of `P¹⁵` left free by the common `+1` eigenspace.
    pub eigenspace_support: Vec<usize>,
    /// Dimension of the `M`-fixed subspace of `C¹⁶`.
    pub m_fixed_dim: usize,
    /// Projective dimension of `P³ ∩ P⁵`.
    pub intersection_dim: usize,
    pub intersection_line: Option<ProjectiveLine>,
    /// Whether `(1:0:…:0) ∈ P¹⁵` is fixed by all sign actions and is the image of `p ∈ P⁵`.
    pub point_lands_on_p: bool,
    /// Whether the shifts preserve the family of quadrics up to sign.
    pub shifts_permute_quadrics: bool,
}

impl HeisenbergReport {
    pub fn holds(&self) -> bool {
        self.m_fixed_dim == 6
            && self.intersection_dim == 1
            && self.intersection_line == Some(boundary_line_l())
            && self.point_lands_on_p
            && self.shifts_permute_quadrics
    }
}

fn embedding_matrix() -> RatMatrix {
    ExactMatrix::from_fn(16, 6, |s, j| if EMBEDDING[s] == j { Rational::ONE } else { Rational::ZERO })
}

pub fn heisenberg_boundary_check() -> HeisenbergReport {
    let betas = [0b1000, 0b0010];
    let eigenspace_support: Vec<usize> =
        (0..16).filter(|&s| betas.iter().all(|&b| heisenberg_sign(b)[s] == 1)).collect();

    // The image of the embedding is the fixed space of the M permutation.
    let p = m_index_permutation();
    let fix = ExactMatrix::from_fn(16, 16, |r, c| {
        let mut v = Rational::ZERO;
        if c == r {
            v += &Rational::ONE;
        }
        if c == p[r] {
            v -= &Rational::ONE;
        }
        v
    });
    let m_fixed_dim = fix.kernel().len();
    let e = embedding_matrix();
    let embedded_is_fixed = fix.mul(&e).expect("16x6").is_zero();

    // x ∈ C⁶ with (E x)_σ = 0 outside the eigenspace support.
    let outside: Vec<Vec<Rational>> =
        (0..16).filter(|s| !eigenspace_support.contains(s)).map(|s| e.row(s).to_vec()).collect();
    let ker = ExactMatrix::from_rows(&outside).expect("rows").kernel();
    let intersection_dim = ker.len().saturating_sub(1);
    let intersection_line = (ker.len() == 2).then(|| {
        let v = |k: &Vec<Rational>| -> Vec6 { core::array::from_fn(|i| k[i].clone()) };
        ProjectiveLine::through(&v(&ker[0]), &v(&ker[1])).expect("kernel basis")
    });

    let e0 = vec6([1, 0, 0, 0, 0, 0]);
    let image = e.mul_vec(&e0).expect("16x6");
    let is_unit_vector = image.iter().enumerate().all(|(s, x)| x.is_zero() != (s == 0));
    let fixed_by_signs = (0..16).all(|b| heisenberg_sign(b)[0] == 1);
    let point_lands_on_p = embedded_is_fixed && is_unit_vector && fixed_by_signs;

    let shifts_permute_quadrics = (0..16).all(shift_permutes_quadrics);

    HeisenbergReport {
        eigenspace_support,
        m_fixed_dim,
        intersection_dim,
        intersection_line,
        point_lands_on_p,
        shifts_permute_quadrics,
    }
}

fn shift_permutes_quadrics(gamma: usize) -> bool {
    use super::quadrics::{even_characteristics, p15_quadric};
    let perm = heisenberg_shift(gamma);
    let quadrics: Vec<RatPoly> = even_characteristics().into_iter().map(p15_quadric).collect();
    quadrics.iter().all(|q| {
        let moved = q.permute_vars(&perm);
        quadrics.iter().any(|r| moved == *r || moved == -r.clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::build_f;

    #[test]
    fn intersections_on_small_examples() {
        let l = boundary_line_l();
        let m = ProjectiveLine::through(&vec6([1, 0, 0, 0, 0, 0]), &vec6([0, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!(line_intersection(&l, &m), Some(vec6([1, 0, 0, 0, 0, 0])));
        assert_eq!(line_intersection(&l, &l), None);
        let skew = ProjectiveLine::through(&vec6([0, 0, 1, 0, 0, 0]), &vec6([0, 0, 0, 1, 0, 0])).unwrap();
        assert_eq!(line_intersection(&l, &skew), None);
        assert!(l.contains(&vec6([1, -1, 0, 0, 0, 0])));
        assert!(ProjectiveLine::through(&vec6([1, 0, 0, 0, 0, 0]), &vec6([2, 0, 0, 0, 0, 0])).is_none());
    }

    #[test]
    fn f_vanishes_on_l() {
        assert!(build_f().substitute(&boundary_line_l().parametrization()).unwrap().is_zero());
    }

    #[test]
    fn heisenberg() {
        let r = heisenberg_boundary_check();
        assert_eq!(r.eigenspace_support, alloc::vec![0, 1, 4, 5]);
        assert!(r.holds(), "{r:?}");
    }
}
