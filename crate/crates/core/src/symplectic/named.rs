//! The named matrices and their plain-text table.
//!
//! Table format: for each matrix a header line `# NAME`, then eight lines of
//! eight whitespace-separated integers, row-major. Blank lines are ignored.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use super::SympMatrix;

/// Names in table order.
pub const NAMES: [&str; 13] = ["E", "M", "T", "M22", "MB", "Md", "Me", "Mf", "Mpr", "Mip", "MC", "MD", "M12"];

/// Builds an 8×8 matrix from a 4×4 pattern of 2×2 blocks, each given as a
/// multiple of the identity.
fn from_2x2_scalars(s: [[i64; 4]; 4]) -> SympMatrix {
    let mut m = [[0; 8]; 8];
    for (bi, row) in s.iter().enumerate() {
        for (bj, &v) in row.iter().enumerate() {
            m[2 * bi][2 * bj] = v;
            m[2 * bi + 1][2 * bj + 1] = v;
        }
    }
    SympMatrix(m)
}

/// `A = [[-I, -I], [I, 0]]` in 2×2 blocks.
pub fn a_block() -> [[i64; 4]; 4] {
    [[-1, 0, -1, 0], [0, -1, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]
}

pub fn m() -> SympMatrix {
    SympMatrix::block_diagonal(&a_block())
}

pub fn t() -> SympMatrix {
    from_2x2_scalars([[1, 1, 0, -1], [1, 0, -1, 1], [0, 1, 1, -1], [0, -1, 0, 1]])
}

pub fn m22() -> SympMatrix {
    from_2x2_scalars([[0, 0, -1, 0], [0, -1, 0, 1], [1, 0, -1, 0], [0, -1, 0, 0]])
}

pub fn mb() -> SympMatrix {
    let b = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]];
    SympMatrix::from_blocks(&b, &[[0; 4]; 4], &[[0; 4]; 4], &b)
}

pub fn md() -> SympMatrix {
    let c = [[0, 1], [1, 0]];
    block_diag_2x2([c; 4])
}

pub fn mc() -> SympMatrix {
    let c = [[0, 1], [-1, 0]];
    block_diag_2x2([c; 4])
}

fn block_diag_2x2(blocks: [[[i64; 2]; 2]; 4]) -> SympMatrix {
    let mut m = [[0; 8]; 8];
    for (k, b) in blocks.iter().enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                m[2 * k + i][2 * k + j] = b[i][j];
            }
        }
    }
    SympMatrix(m)
}

fn m_d() -> SympMatrix {
    SympMatrix([
        [1, 0, 0, 0, 2, 0, -1, 0],
        [0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, -1, 0, 2, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ])
}

fn m_e() -> SympMatrix {
    SympMatrix([
        [-1, 0, 0, 0, 0, 1, 0, -2],
        [0, 1, 0, 0, -1, 0, -1, 0],
        [0, 0, -1, 0, 0, 1, 0, 1],
        [0, 0, 0, 1, 2, 0, -1, 0],
        [0, 0, 0, 0, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ])
}

fn m_f() -> SympMatrix {
    let b = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]];
    let nb = b.map(|r| r.map(|v: i64| -v));
    SympMatrix::from_blocks(&[[0; 4]; 4], &b, &nb, &[[0; 4]; 4])
}

fn a_pr() -> [[i64; 4]; 4] {
    [[-1, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]]
}

fn m_pr() -> SympMatrix {
    SympMatrix::block_diagonal(&a_pr())
}

fn m_ip() -> SympMatrix {
    let d = m_pr().blocks()[3];
    let b = [[0, -2, 0, 0], [2, 0, 0, 0], [0, 2, 0, -2], [-2, 0, 2, 0]];
    SympMatrix::from_blocks(&a_pr(), &b, &[[0; 4]; 4], &d)
}

pub fn m12() -> SympMatrix {
    m() * mc()
}

/// Looks up a named matrix.
pub fn named(name: &str) -> Option<SympMatrix> {
    Some(match name {
        "E" => super::j_matrix(),
        "I" => SympMatrix::IDENTITY,
        "M" => m(),
        "T" => t(),
        "M22" => m22(),
        "MB" => mb(),
        "Md" => m_d(),
        "Me" => m_e(),
        "Mf" => m_f(),
        "Mpr" => m_pr(),
        "Mip" => m_ip(),
        "MC" => mc(),
        "MD" => md(),
        "M12" => m12(),
        _ => return None,
    })
}

pub fn named_table() -> Vec<(&'static str, SympMatrix)> {
    NAMES.iter().map(|&n| (n, named(n).expect("listed name"))).collect()
}

pub fn write_named_table(table: &[(&str, SympMatrix)]) -> String {
    let mut s = String::new();
    for (name, m) in table {
        let _ = writeln!(s, "# {name}");
        let _ = writeln!(s, "{m}");
    }
    s
}

/// Parses the table format; errors carry the offending line number.
pub fn parse_named_table(text: &str) -> Result<Vec<(String, SympMatrix)>, (usize, String)> {
    let mut out = Vec::new();
    let mut current: Option<(String, Vec<[i64; 8]>)> = None;
    let finish = |cur: Option<(String, Vec<[i64; 8]>)>, out: &mut Vec<(String, SympMatrix)>, line: usize| {
        if let Some((name, rows)) = cur {
            let rows: [[i64; 8]; 8] =
                rows.try_into().map_err(|_| (line, "matrix needs eight rows".to_string()))?;
            out.push((name, SympMatrix(rows)));
        }
        Ok::<_, (usize, String)>(())
    };
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('#') {
            finish(current.take(), &mut out, ln + 1)?;
            current = Some((name.trim().to_string(), Vec::new()));
            continue;
        }
        let Some((_, rows)) = current.as_mut() else {
            return Err((ln + 1, "row before any header".to_string()));
        };
        let vals: Vec<i64> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| (ln + 1, "bad integer".to_string()))?;
        let row: [i64; 8] = vals.try_into().map_err(|_| (ln + 1, "row needs eight entries".to_string()))?;
        rows.push(row);
    }
    finish(current, &mut out, text.lines().count())?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_round_trip() {
        let table = named_table();
        let text = write_named_table(&table);
        let back = parse_named_table(&text).unwrap();
        assert_eq!(back.len(), NAMES.len());
        for ((n1, m1), (n2, m2)) in table.iter().zip(&back) {
            assert_eq!(*n1, n2);
            assert_eq!(m1, m2);
        }
    }

    #[test]
    fn malformed_table_is_rejected() {
        assert!(parse_named_table("1 2 3").is_err());
        assert!(parse_named_table("# X\n1 2 3 4 5 6 7 8").is_err());
    }
}
