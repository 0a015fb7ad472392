//! The square torus `a b a' b'`: slope curves, the determinant formula, and
//! maximal families of slopes pairwise meeting once.

use num_integer::Integer;
use serde::Serialize;

use crate::complex::{EdgeToken, Face, PolygonComplex};
use crate::curve::{simplest_between, ChordCurve, Passage};
use crate::error::{Error, Result};
use crate::Param;

const BOTTOM: usize = 0;
const RIGHT: usize = 1;
const TOP: usize = 2;
const LEFT: usize = 3;

pub fn square_torus() -> PolygonComplex {
    let t = |l: &str, inv| EdgeToken::new(l, inv);
    PolygonComplex::new(
        "torus",
        vec![Face {
            name: "F".into(),
            tokens: vec![t("a", false), t("b", false), t("a", true), t("b", true)],
        }],
    )
    .expect("square torus word is valid")
}

fn check_primitive(p: i64, q: i64) -> Result<()> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotPrimitive(p, q));
    }
    Ok(())
}

/// Minimal intersection number of the slopes `(p, q)` and `(r, s)`.
pub fn torus_oracle(p: i64, q: i64, r: i64, s: i64) -> Result<u64> {
    check_primitive(p, q)?;
    check_primitive(r, s)?;
    Ok((p * s - q * r).unsigned_abs())
}

/// Start point used by [`slope_curve`].
pub const DEFAULT_START: (i64, i64, i64, i64) = (1, 7, 2, 9);

/// Staircase curve of slope `(p, q)`: `|p|` passages through `a`, `|q|` through `b`.
pub fn slope_curve(p: i64, q: i64) -> Result<ChordCurve> {
    let (a, b, c, d) = DEFAULT_START;
    slope_curve_through(p, q, Param::new(a, b), Param::new(c, d))
}

/// Staircase of the straight line through `(x0, y0)` with direction `(q, p)`.
/// Fails if the line runs through the corner of the square.
pub fn slope_curve_through(p: i64, q: i64, x0: Param, y0: Param) -> Result<ChordCurve> {
    check_primitive(p, q)?;
    let zero = Param::from_integer(0);
    let one = Param::from_integer(1);
    if x0 <= zero || x0 >= one || y0 <= zero || y0 >= one {
        return Err(Error::InvalidCurve(
            "start point must lie inside the square".into(),
        ));
    }
    if (x0 * p - y0 * q).is_integer() {
        return Err(Error::NotInGeneralPosition(
            "line passes through the corner".into(),
        ));
    }
    // events (s, passage) for s in (0, 1]
    let mut events: Vec<(Param, Passage)> = Vec::new();
    let frac = |v: Param| v - v.floor();
    if q != 0 {
        for k in 1..=q.abs() {
            let target = if q > 0 {
                Param::from_integer(k)
            } else {
                Param::from_integer(1 - k)
            };
            let s = (target - x0) / q;
            let y = frac(y0 + s * p);
            let passage = if q > 0 {
                Passage::new(RIGHT, y)
            } else {
                Passage::new(LEFT, one - y)
            };
            events.push((s, passage));
        }
    }
    if p != 0 {
        for k in 1..=p.abs() {
            let target = if p > 0 {
                Param::from_integer(k)
            } else {
                Param::from_integer(1 - k)
            };
            let s = (target - y0) / p;
            let x = frac(x0 + s * q);
            let passage = if p > 0 {
                Passage::new(TOP, one - x)
            } else {
                Passage::new(BOTTOM, x)
            };
            events.push((s, passage));
        }
    }
    events.sort();
    Ok(ChordCurve::new(
        events.into_iter().map(|(_, p)| p).collect(),
    ))
}

/// Staircases for two slopes, the second started at the first point of a
/// fixed list that keeps the pair in general position.
pub fn slope_pair(p: i64, q: i64, r: i64, s: i64) -> Result<(ChordCurve, ChordCurve)> {
    let first = slope_curve(p, q)?;
    let c = square_torus();
    let used: std::collections::HashSet<_> =
        first.passages.iter().map(|x| x.surface_point(&c)).collect();
    for d in 11..40 {
        for n in 1..d {
            let (x0, y0) = (Param::new(n, d), Param::new(d - n, d + 2));
            let Ok(second) = slope_curve_through(r, s, x0, y0) else {
                continue;
            };
            if second
                .passages
                .iter()
                .all(|x| !used.contains(&x.surface_point(&c)))
            {
                return Ok((first, second));
            }
        }
    }
    Err(Error::NotInGeneralPosition("no start point found".into()))
}

/// Pushes passage `k` of `c1` across the neighbouring point of `c2` on the
/// same side, adding a finger that crosses `c2` twice. `above` picks the
/// neighbour with the larger parameter.
pub fn wiggle(
    c1: &ChordCurve,
    c2: &ChordCurve,
    k: usize,
    above: bool,
    c: &PolygonComplex,
) -> Option<ChordCurve> {
    let p = &c1.passages[k];
    let mut pts: Vec<(Param, bool)> = c1
        .boundary_points(c)
        .into_iter()
        .map(|q| (q, false))
        .chain(c2.boundary_points(c).into_iter().map(|q| (q, true)))
        .filter(|(q, _)| q.side == p.side)
        .map(|(q, own)| (q.param, own))
        .collect();
    pts.sort();
    let zero = Param::from_integer(0);
    let one = Param::from_integer(1);
    let i = pts.iter().position(|&(t, _)| t == p.param)?;
    let (t1, t2, t3) = if above {
        let &(to, other) = pts.get(i + 1)?;
        if !other {
            return None;
        }
        let next = pts.get(i + 2).map(|x| x.0).unwrap_or(one);
        let t2 = simplest_between(to, next);
        (p.param, t2, simplest_between(t2, next))
    } else {
        if i == 0 {
            return None;
        }
        let (to, other) = pts[i - 1];
        if !other {
            return None;
        }
        let prev = if i >= 2 { pts[i - 2].0 } else { zero };
        let t2 = simplest_between(prev, to);
        (p.param, t2, simplest_between(prev, t2))
    };
    let s = p.side;
    let back = Passage::new(s, t2).mirrored(c);
    let mut ps = c1.passages.clone();
    ps.splice(k..=k, [Passage::new(s, t3), back, Passage::new(s, t1)]);
    let out = ChordCurve::new(ps);
    match out.validate(c) {
        Ok(d) if d.simple => Some(out),
        _ => None,
    }
}

/// Outcome of [`torus_enumerate_max_systems`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusSystems {
    pub max_size: usize,
    pub witness: Vec<(i64, i64)>,
}

/// Primitive slopes with entries bounded by `n`, one per antipodal pair,
/// ordered by `|p| + |q|`.
pub fn primitive_slopes(n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 0..=n {
        for q in -n..=n {
            if (p == 0 && q <= 0) || p.gcd(&q) != 1 {
                continue;
            }
            out.push((p, q));
        }
    }
    out.sort_by_key(|&(p, q)| (p.abs() + q.abs(), -p, -q));
    out
}

/// Largest family of slopes with entries bounded by `n` whose pairwise
/// determinants are all ±1. The witness is the first maximum clique in
/// slope order.
pub fn torus_enumerate_max_systems(n: i64) -> TorusSystems {
    let slopes = primitive_slopes(n);
    let adj: Vec<Vec<bool>> = slopes
        .iter()
        .map(|&(p, q)| {
            slopes
                .iter()
                .map(|&(r, s)| (p * s - q * r).abs() == 1)
                .collect()
        })
        .collect();
    let mut best: Vec<usize> = Vec::new();
    let mut cur = Vec::new();
    let all: Vec<usize> = (0..slopes.len()).collect();
    grow(&adj, &mut cur, &all, &mut best);
    TorusSystems {
        max_size: best.len(),
        witness: best.into_iter().map(|i| slopes[i]).collect(),
    }
}

fn grow(adj: &[Vec<bool>], cur: &mut Vec<usize>, cand: &[usize], best: &mut Vec<usize>) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    for (i, &v) in cand.iter().enumerate() {
        if cur.len() + cand.len() - i <= best.len() {
            return;
        }
        let next: Vec<usize> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&w| adj[v][w])
            .collect();
        cur.push(v);
        grow(adj, cur, &next, best);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{crossing_count, union_map};
    use crate::reduce::reduce_to_minimal;

    #[test]
    fn oracle_values() {
        assert_eq!(torus_oracle(1, 0, 0, 1).unwrap(), 1);
        assert_eq!(torus_oracle(2, 1, 2, 1).unwrap(), 0);
        assert_eq!(torus_oracle(2, 1, 1, 1).unwrap(), 1);
        assert_eq!(torus_oracle(2, 2, 1, 0), Err(Error::NotPrimitive(2, 2)));
        assert!(slope_curve(0, 0).is_err());
    }

    #[test]
    fn slope_curves_are_simple_with_expected_class() {
        let c = square_torus();
        for (p, q) in [(1, 0), (0, 1), (2, 1), (-3, 2), (5, -4), (1, 5)] {
            let cv = slope_curve(p, q).unwrap();
            assert!(cv.validate(&c).unwrap().simple, "({p},{q})");
            assert_eq!(cv.len() as i64, p.abs() + q.abs());
            let h = cv.homology_class(&c).unwrap();
            assert_eq!((h[0].abs(), h[1].abs()), (p.abs(), q.abs()));
        }
    }

    #[test]
    fn wiggle_adds_bigons_that_reduce_away() {
        let c = square_torus();
        let m = slope_curve(1, 0).unwrap();
        let mut found = false;
        for (x0, q) in [(1, 1), (2, 1), (1, -1), (2, -1)]
            .iter()
            .flat_map(|&(n, q)| [(Param::new(n, 3), q), (Param::new(n, 5), q)])
        {
            let l = slope_curve_through(1, q, x0, Param::new(1, 2)).unwrap();
            for k in 0..l.len() {
                for above in [true, false] {
                    let Some(w) = wiggle(&l, &m, k, above, &c) else {
                        continue;
                    };
                    if crossing_count(&w, &m, &c) == 3 {
                        let map = union_map(&[w.clone(), m.clone()], &c).unwrap();
                        assert!(!map.bigon_faces().is_empty());
                        assert_eq!(reduce_to_minimal(&w, &m, &c).unwrap().1, 1);
                        found = true;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn staircase_pairs_match_the_oracle() {
        let c = square_torus();
        for (p, q, r, s) in [
            (1, 0, 0, 1),
            (2, 1, 1, 1),
            (3, -2, 1, 4),
            (2, 1, 2, 1),
            (5, 3, -4, 1),
        ] {
            let (a, b) = slope_pair(p, q, r, s).unwrap();
            let (_, n) = reduce_to_minimal(&a, &b, &c).unwrap();
            assert_eq!(
                n as u64,
                torus_oracle(p, q, r, s).unwrap(),
                "({p},{q}) ({r},{s})"
            );
        }
    }

    #[test]
    fn small_bounds_give_three() {
        let r = torus_enumerate_max_systems(1);
        assert_eq!(r.max_size, 3);
        assert_eq!(r.witness, vec![(1, 0), (0, 1), (1, 1)]);
        assert_eq!(torus_enumerate_max_systems(2).max_size, 3);
    }
}
