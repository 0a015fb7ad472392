//! Exact rank computations over the rationals for small integer matrices.

use num_integer::Integer;

/// Rank over Q of an integer matrix given as rows.
///
/// Fraction-free elimination with every row divided by its content after each
/// update, so entries stay small for the incidence-style matrices used here.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
        .collect();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        let pv = pivot_row[col];
        for r in (rank + 1)..m.len() {
            let f = m[r][col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                m[r][c] = m[r][c] * pv - pivot_row[c] * f;
            }
            normalize_row(&mut m[r]);
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn normalize_row(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
