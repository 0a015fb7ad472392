//! The intersection form on first cohomology, integrally through the cup
//! product and mod 2 in the coordinates given by the homology basis.

use crate::complex::PolygonComplex;
use crate::curve::homology_coordinates;
use crate::error::{Error, Result};

fn fan_sum(c: &PolygonComplex, phi: &[i64], psi: &[i64]) -> i64 {
    let mut total = 0;
    for f in 0..c.face_count() {
        let mut prefix = 0i64;
        for pos in 0..c.face_len(f) {
            let s = c.side_at(f, pos);
            let li = c.label_of(s);
            let sign = if s == c.positive_side(li) { 1 } else { -1 };
            total += prefix * sign * psi[li];
            prefix += sign * phi[li];
        }
    }
    total
}

/// Intersection pairing of two cocycles: the antisymmetrised sum over
/// ordered pairs of sides along each face word.
pub fn cup_product(c: &PolygonComplex, phi: &[i64], psi: &[i64]) -> i64 {
    let twice = fan_sum(c, phi, psi) - fan_sum(c, psi, phi);
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

/// The mod-2 intersection form in homology-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form2 {
    pub dim: usize,
    /// `gram[i]` has bit `j` set when the i-th and j-th dual classes meet oddly.
    gram: Vec<u64>,
}

fn solve_f2(rows: &[Vec<u8>], rhs: &[u8], n: usize) -> Option<Vec<u8>> {
    let mut m: Vec<Vec<u8>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut v = r.clone();
            v.push(b);
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&i| m[i][col] == 1) else {
            continue;
        };
        m.swap(row, p);
        for i in 0..m.len() {
            if i != row && m[i][col] == 1 {
                let (a, b) = if i < row {
                    let (x, y) = m.split_at_mut(row);
                    (&mut x[i], &y[0])
                } else {
                    let (x, y) = m.split_at_mut(i);
                    (&mut y[0], &x[row])
                };
                for k in col..=n {
                    a[k] ^= b[k];
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| r[n] == 1) {
        return None;
    }
    let mut x = vec![0u8; n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][n];
    }
    Some(x)
}

impl Form2 {
    pub fn new(c: &PolygonComplex) -> Result<Self> {
        let basis = c.homology_basis().ok_or(Error::NonOrientable)?;
        let e = c.label_count();
        let dim = basis.len();
        if dim > 64 {
            return Err(Error::Internal("homology too large for bit vectors".into()));
        }
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for f in 0..c.face_count() {
            let mut r = vec![0u8; e];
            for pos in 0..c.face_len(f) {
                let li = c.label_of(c.side_at(f, pos));
                r[li] ^= 1;
            }
            rows.push(r);
        }
        let faces = rows.len();
        for z in basis {
            rows.push(z.iter().map(|&v| (v.rem_euclid(2)) as u8).collect());
        }
        let mut dual = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut rhs = vec![0u8; rows.len()];
            rhs[faces + j] = 1;
            let x = solve_f2(&rows, &rhs, e)
                .ok_or_else(|| Error::Internal("no dual cocycle".into()))?;
            dual.push(x.into_iter().map(i64::from).collect::<Vec<_>>());
        }
        let mut gram = vec![0u64; dim];
        for i in 0..dim {
            for j in 0..dim {
                if cup_product(c, &dual[i], &dual[j]).rem_euclid(2) == 1 {
                    gram[i] |= 1 << j;
                }
            }
        }
        Ok(Form2 { dim, gram })
    }

    pub fn omega(&self, x: u64, y: u64) -> u32 {
        let mut acc = 0u64;
        for i in 0..self.dim {
            if x >> i & 1 == 1 {
                acc ^= self.gram[i];
            }
        }
        (acc & y).count_ones() % 2
    }

    /// Largest set of nonzero classes meeting every class in `chosen` and
    /// each other oddly.
    pub fn max_odd_extension(&self, chosen: &[u64]) -> usize {
        let cand: Vec<u64> = (1..(1u64 << self.dim))
            .filter(|&v| chosen.iter().all(|&w| self.omega(v, w) == 1))
            .collect();
        let mut best = 0;
        self.extend(&cand, 0, &mut best);
        best
    }

    fn extend(&self, cand: &[u64], size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        for (i, &v) in cand.iter().enumerate() {
            if size + cand.len() - i <= *best {
                return;
            }
            let next: Vec<u64> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.omega(v, w) == 1)
                .collect();
            self.extend(&next, size + 1, best);
        }
    }
}

/// Homology coordinates of a cocycle reduced mod 2, as a bit vector.
pub fn class_mod2(cochain: &[i64], c: &PolygonComplex) -> Result<u64> {
    let coords = homology_coordinates(cochain, c)?;
    Ok(coords
        .iter()
        .enumerate()
        .filter(|(_, &v)| v.rem_euclid(2) == 1)
        .fold(0u64, |acc, (i, _)| acc | 1 << i))
}
