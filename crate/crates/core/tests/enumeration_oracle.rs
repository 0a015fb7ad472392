//! Brute-force recount of short simple curves. Every side sequence is tried
//! with every relative order of its points along each edge; the survivors
//! are compared with the search output as combinatorial types.

mod common;

use std::collections::BTreeSet;

use curveforge::format::parse_surface;
use curveforge::search::{enumerate_simple_curves, SearchBudget};
use curveforge::torus::square_torus;
use curveforge::{ChordCurve, Param, Passage, PolygonComplex};

type Key = Vec<(usize, usize)>;

fn rank(points: &[Passage], p: &Passage) -> usize {
    points
        .iter()
        .filter(|q| q.side == p.side && q.param < p.param)
        .count()
}

fn key(cv: &ChordCurve, c: &PolygonComplex) -> Key {
    let pts = cv.boundary_points(c);
    let fwd: Key = cv
        .passages
        .iter()
        .map(|p| (p.side, rank(&pts, p)))
        .collect();
    let back: Key = cv
        .reversed(c)
        .passages
        .iter()
        .map(|p| (p.side, rank(&pts, p)))
        .collect();
    let n = fwd.len();
    [fwd, back]
        .iter()
        .flat_map(|s| (0..n).map(move |r| [&s[r..], &s[..r]].concat()))
        .min()
        .unwrap()
}

/// A passage leaving through the side it just came in by, right next to
/// its entry point.
fn has_trivial_return(cv: &ChordCurve, c: &PolygonComplex) -> bool {
    let pts = cv.boundary_points(c);
    let n = cv.len();
    (0..n).any(|k| {
        let entry = cv.passages[k].mirrored(c);
        let next = &cv.passages[(k + 1) % n];
        if entry.side != next.side {
            return false;
        }
        let (lo, hi) = if entry.param < next.param {
            (entry.param, next.param)
        } else {
            (next.param, entry.param)
        };
        !pts.iter()
            .any(|q| q.side == next.side && q.param > lo && q.param < hi)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Places the passages of `sides` on their edges in every relative order.
fn realisations(sides: &[usize], c: &PolygonComplex) -> Vec<ChordCurve> {
    let labels: Vec<usize> = sides.iter().map(|&s| c.label_of(s)).collect();
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for (k, &l) in labels.iter().enumerate() {
        match groups.iter_mut().find(|(g, _)| *g == l) {
            Some((_, v)) => v.push(k),
            None => groups.push((l, vec![k])),
        }
    }
    let mut out = Vec::new();
    let mut params = vec![Param::from_integer(0); sides.len()];
    fn go(
        gi: usize,
        groups: &[(usize, Vec<usize>)],
        sides: &[usize],
        c: &PolygonComplex,
        params: &mut Vec<Param>,
        out: &mut Vec<ChordCurve>,
    ) {
        if gi == groups.len() {
            let ps = sides
                .iter()
                .zip(params.iter())
                .map(|(&s, &t)| Passage::new(s, t))
                .collect();
            out.push(ChordCurve::new(ps));
            return;
        }
        let members = &groups[gi].1;
        let m = members.len() as i64;
        for perm in permutations(members.len()) {
            for (slot, &k) in perm.iter().zip(members) {
                // position measured on the positive occurrence of the label
                let u = Param::new(*slot as i64 + 1, m + 1);
                let s = sides[k];
                params[k] = if s == c.positive_side(c.label_of(s)) {
                    u
                } else {
                    c.partner_param(c.partner(s), u)
                };
            }
            go(gi + 1, groups, sides, c, params, out);
        }
    }
    go(0, &groups, sides, c, &mut params, &mut out);
    out
}

fn brute_force(c: &PolygonComplex, max: usize) -> BTreeSet<Key> {
    let n = c.side_count();
    let mut found = BTreeSet::new();
    for len in 1..=max {
        let mut seq = vec![0usize; len];
        loop {
            for cv in realisations(&seq, c) {
                let Ok(d) = cv.validate(c) else { continue };
                if d.closed && d.simple && !has_trivial_return(&cv, c) {
                    found.insert(key(&cv, c));
                }
            }
            let mut i = 0;
            while i < len && seq[i] == n - 1 {
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
            seq[i] += 1;
        }
    }
    found
}

fn searched(c: &PolygonComplex, max: usize) -> (BTreeSet<Key>, usize) {
    let e = enumerate_simple_curves(c, SearchBudget::new(max, u64::MAX)).unwrap();
    assert!(!e.truncated);
    let keys: BTreeSet<Key> = e.candidates.iter().map(|k| key(&k.curve, c)).collect();
    (keys, e.candidates.len())
}

#[test]
fn torus_curves_match_brute_force() {
    let c = square_torus();
    let (keys, n) = searched(&c, 4);
    assert_eq!(n, 13);
    assert_eq!(keys.len(), n, "search returned a duplicate");
    assert_eq!(keys, brute_force(&c, 4));
}

#[test]
fn octagon_curves_match_brute_force() {
    let c = common::octagon();
    let (keys, n) = searched(&c, 4);
    assert_eq!(n, 87);
    assert_eq!(keys.len(), n, "search returned a duplicate");
    assert_eq!(keys, brute_force(&c, 4));
}

#[test]
fn two_face_torus_curves_match_brute_force() {
    let c = parse_surface("surface t2\nface P: a b c\nface Q: a' b' c'\n").unwrap();
    assert_eq!(c.genus(), Some(1));
    let (keys, n) = searched(&c, 4);
    assert_eq!(keys.len(), n, "search returned a duplicate");
    assert_eq!(keys, brute_force(&c, 4));
}

#[test]
fn two_face_sphere_curves_match_brute_force() {
    let c = parse_surface("surface s2\nface P: a b c\nface Q: a' c' b'\n").unwrap();
    assert_eq!(c.genus(), Some(0));
    let (keys, n) = searched(&c, 4);
    assert_eq!(keys.len(), n, "search returned a duplicate");
    assert_eq!(keys, brute_force(&c, 4));
}
