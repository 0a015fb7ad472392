//! Removing bigons between two curves until they are in minimal position.

use crate::arrangement::{crossing_count, union_map, Bigon, CurveMap};
use crate::complex::PolygonComplex;
use crate::curve::{simplest_between, ChordCurve, Passage};
use crate::error::{Error, Result};
use crate::Param;

/// Which side of the other curve the rerouted arc follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Offset {
    Left,
    Right,
}

/// Params already used on `side` by either curve, seen from that side.
fn used_on_side(
    side: usize,
    curves: &[&ChordCurve],
    extra: &[Passage],
    c: &PolygonComplex,
) -> Vec<Param> {
    let mut out: Vec<Param> = curves
        .iter()
        .flat_map(|cv| cv.boundary_points(c))
        .chain(extra.iter().flat_map(|p| [p.clone(), p.mirrored(c)]))
        .filter(|p| p.side == side)
        .map(|p| p.param)
        .collect();
    out.sort();
    out
}

/// A parameter next to `p` on its side, in the free gap on the chosen side.
fn offset_passage(
    p: &Passage,
    offset: Offset,
    curves: &[&ChordCurve],
    extra: &[Passage],
    c: &PolygonComplex,
) -> Passage {
    let used = used_on_side(p.side, curves, extra, c);
    let zero = Param::from_integer(0);
    let one = Param::from_integer(1);
    let t = p.param;
    let param = match offset {
        Offset::Left => {
            let hi = used.iter().copied().find(|&u| u > t).unwrap_or(one);
            simplest_between(t, hi)
        }
        Offset::Right => {
            let lo = used.iter().copied().rev().find(|&u| u < t).unwrap_or(zero);
            simplest_between(lo, t)
        }
    };
    Passage::new(p.side, param)
}

/// c1 with the arc of `bigon` pushed across c2's arc, or `None` if the
/// reroute on that side does not remove both crossings.
fn reroute(
    c1: &ChordCurve,
    c2: &ChordCurve,
    m: &CurveMap,
    bigon: &Bigon,
    offset: Offset,
    c: &PolygonComplex,
) -> Option<ChordCurve> {
    let face = &m.faces[bigon.face];
    let (d1, d2) = if face[0] / 2 == bigon.edges[0] {
        (face[0], face[1])
    } else {
        (face[1], face[0])
    };
    let e1 = &m.edges[bigon.edges[0]];
    let e2 = &m.edges[bigon.edges[1]];
    let start = m.crossings[e1.from].owners[0].1;
    let removed = e1.passages.len();
    // c2's passages between the two crossings, in c1's direction
    let along: Vec<Passage> = if (d1 % 2 == 0) != (d2 % 2 == 0) {
        e2.passages
            .iter()
            .map(|&i| c2.passages[i].clone())
            .collect()
    } else {
        e2.passages
            .iter()
            .rev()
            .map(|&i| c2.passages[i].mirrored(c))
            .collect()
    };
    let mut copies: Vec<Passage> = Vec::with_capacity(along.len());
    for q in &along {
        let p = offset_passage(q, offset, &[c1, c2], &copies, c);
        copies.push(p);
    }
    let n = c1.len();
    let mut out = Vec::with_capacity(n - removed + copies.len());
    let mut k = (start + removed) % n;
    for _ in 0..n - removed {
        out.push(c1.passages[k].clone());
        k = (k + 1) % n;
    }
    out.extend(copies);
    if out.is_empty() {
        return None;
    }
    let cand = ChordCurve::new(out);
    match cand.validate(c) {
        Ok(d) if d.simple => {}
        _ => return None,
    }
    let before = crossing_count(c1, c2, c);
    (crossing_count(&cand, c2, c) + 2 == before).then_some(cand)
}

/// Removes bigons from `c1` against `c2` until none remain; returns the
/// rerouted `c1` and the resulting crossing count. `c2` is never changed.
pub fn reduce_to_minimal(
    c1: &ChordCurve,
    c2: &ChordCurve,
    c: &PolygonComplex,
) -> Result<(ChordCurve, usize)> {
    let mut cur = c1.clone();
    let mut iterations = 0usize;
    loop {
        let m = union_map(&[cur.clone(), c2.clone()], c)?;
        let bigons = m.bigon_faces();
        let count = m.crossing_vertex_count();
        if bigons.is_empty() {
            return Ok((cur, count));
        }
        iterations += 1;
        let mut next = None;
        'search: for b in &bigons {
            for offset in [Offset::Left, Offset::Right] {
                if let Some(cand) = reroute(&cur, c2, &m, b, offset, c) {
                    next = Some(cand);
                    break 'search;
                }
            }
        }
        let Some(cand) = next else {
            return Err(Error::IterationLimit(iterations));
        };
        let obstacles = c2.passages.clone();
        let cand = cand.normalize_avoiding(c, &obstacles);
        if crossing_count(&cand, c2, c) >= count {
            return Err(Error::IterationLimit(iterations));
        }
        cur = cand;
    }
}
