//! Small dense complex matrices.

use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat4 = [[C64; 4]; 4];
pub type CMat2 = [[C64; 2]; 2];

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

pub fn mul4(a: &CMat4, b: &CMat4) -> CMat4 {
    core::array::from_fn(|i| core::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

pub fn add4(a: &CMat4, b: &CMat4) -> CMat4 {
    core::array::from_fn(|i| core::array::from_fn(|j| a[i][j] + b[i][j]))
}

pub fn transpose4(a: &CMat4) -> CMat4 {
    core::array::from_fn(|i| core::array::from_fn(|j| a[j][i]))
}

pub fn from_int4(a: &[[i64; 4]; 4]) -> CMat4 {
    core::array::from_fn(|i| core::array::from_fn(|j| C64::new(a[i][j] as f64, 0.0)))
}

pub fn max_abs4(a: &CMat4) -> f64 {
    a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entrywise modulus of `a - b`.
pub fn dist4(a: &CMat4, b: &CMat4) -> f64 {
    (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).map(|(i, j)| (a[i][j] - b[i][j]).norm()).fold(0.0, f64::max)
}

/// Inverse by Gauss–Jordan elimination with partial pivoting.
pub fn inverse4(a: &CMat4) -> Option<CMat4> {
    let mut m = *a;
    let mut inv: CMat4 = core::array::from_fn(|i| core::array::from_fn(|j| if i == j { ONE } else { ZERO }));
    let scale = max_abs4(a);
    for col in 0..4 {
        let piv = (col..4).max_by(|&x, &y| m[x][col].norm().total_cmp(&m[y][col].norm()))?;
        if m[piv][col].norm() <= 1e-14 * scale {
            return None;
        }
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].inv();
        for j in 0..4 {
            m[col][j] *= p;
            inv[col][j] *= p;
        }
        for r in 0..4 {
            if r != col {
                let f = m[r][col];
                for j in 0..4 {
                    m[r][j] -= f * m[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    Some(inv)
}

/// Cholesky test for a real symmetric matrix.
pub fn is_positive_definite(a: &[[f64; 4]; 4]) -> bool {
    let mut l = [[0.0f64; 4]; 4];
    for i in 0..4 {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = a[i][i] - s;
                if d <= 0.0 {
                    return false;
                }
                l[i][i] = libm::sqrt(d);
            } else {
                l[i][j] = (a[i][j] - s) / l[j][j];
            }
        }
    }
    true
}

/// Solves the real system `A x = b` for a small square `A` by Gaussian elimination.
pub fn solve_real<const N: usize>(mut a: [[f64; N]; N], mut b: [f64; N]) -> Option<[f64; N]> {
    for col in 0..N {
        let piv = (col..N).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))?;
        if a[piv][col] == 0.0 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..N {
            let f = a[r][col] / a[col][col];
            for j in col..N {
                a[r][j] -= f * a[col][j];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = [0.0; N];
    for i in (0..N).rev() {
        let s: f64 = (i + 1..N).map(|j| a[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let a: CMat4 = core::array::from_fn(|i| {
            core::array::from_fn(|j| C64::new((i * 4 + j) as f64 * 0.1, if i == j { 2.0 } else { 0.3 }))
        });
        let inv = inverse4(&a).unwrap();
        let id = mul4(&a, &inv);
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { ONE } else { ZERO };
                assert!((id[i][j] - e).norm() < 1e-12);
            }
        }
        assert!(inverse4(&[[ZERO; 4]; 4]).is_none());
    }

    #[test]
    fn cholesky() {
        let mut a = [[0.0; 4]; 4];
        for i in 0..4 {
            a[i][i] = 2.0;
        }
        a[0][1] = -1.0;
        a[1][0] = -1.0;
        assert!(is_positive_definite(&a));
        a[0][0] = 0.4;
        assert!(!is_positive_definite(&a));
    }

    #[test]
    fn real_solve() {
        let x = solve_real([[2.0, 1.0], [1.0, 3.0]], [3.0, 5.0]).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-14 && (x[1] - 1.4).abs() < 1e-14);
    }
}
