//! Closed curves and arcs transverse to the sides of a polygon complex.
//!
//! A curve is recorded by the side occurrences it exits through. Passage `k`
//! leaves the face of its side at `param`, arrives at the partner side at the
//! glued parameter, and the chord following it runs inside the partner's face
//! up to passage `k + 1`.

use std::fmt;

use crate::complex::PolygonComplex;
use crate::error::{Error, Result};
use crate::Param;

/// Exit through side occurrence `side` at parameter `param` in `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passage {
    pub side: usize,
    pub param: Param,
}

impl Passage {
    pub fn new(side: usize, param: Param) -> Self {
        Self { side, param }
    }

    /// The same surface point seen from the partner side.
    pub fn mirrored(&self, c: &PolygonComplex) -> Passage {
        Passage::new(c.partner(self.side), c.partner_param(self.side, self.param))
    }

    /// A representation shared by both sides of the glued edge.
    pub fn surface_point(&self, c: &PolygonComplex) -> (usize, Param) {
        let m = self.mirrored(c);
        if m.side < self.side {
            (m.side, m.param)
        } else {
            (self.side, self.param)
        }
    }
}

/// A point on the boundary of one face, ordered counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryKey {
    pub pos: usize,
    pub param: Param,
}

pub fn boundary_key(c: &PolygonComplex, side: usize, param: Param) -> BoundaryKey {
    BoundaryKey {
        pos: c.side(side).pos,
        param,
    }
}

/// Whether `u` lies strictly inside the counterclockwise interval from `a` to `b`.
pub fn ccw_between(a: &BoundaryKey, b: &BoundaryKey, u: &BoundaryKey) -> bool {
    if a < b {
        a < u && u < b
    } else {
        u > a || u < b
    }
}

/// Two chords in a disk cross iff their endpoints interleave.
pub fn interleaved(a: &BoundaryKey, b: &BoundaryKey, u: &BoundaryKey, v: &BoundaryKey) -> bool {
    ccw_between(a, b, u) != ccw_between(a, b, v)
}

/// A straight segment inside a face between two boundary points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chord {
    pub face: usize,
    pub from: Passage,
    pub to: Passage,
    pub from_key: BoundaryKey,
    pub to_key: BoundaryKey,
}

impl Chord {
    pub fn new(c: &PolygonComplex, from: Passage, to: Passage) -> Self {
        Chord {
            face: c.face_of(to.side),
            from_key: boundary_key(c, from.side, from.param),
            to_key: boundary_key(c, to.side, to.param),
            from,
            to,
        }
    }

    pub fn crosses(&self, other: &Chord) -> bool {
        self.face == other.face
            && interleaved(&self.from_key, &self.to_key, &other.from_key, &other.to_key)
    }

    /// +1 when the pair of directions is counterclockwise.
    pub fn crossing_sign(&self, other: &Chord) -> i32 {
        if ccw_between(&self.from_key, &self.to_key, &other.from_key) {
            1
        } else {
            -1
        }
    }
}

/// A closed transverse curve: cyclic sequence of passages.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChordCurve {
    pub passages: Vec<Passage>,
}

impl ChordCurve {
    pub fn new(passages: Vec<Passage>) -> Self {
        Self { passages }
    }

    pub fn len(&self) -> usize {
        self.passages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passages.is_empty()
    }

    /// Entry point of chord `k`: the arrival of passage `k - 1`.
    pub fn entry(&self, c: &PolygonComplex, k: usize) -> Passage {
        let n = self.passages.len();
        self.passages[(k + n - 1) % n].mirrored(c)
    }

    /// Chord `k` runs from the arrival of passage `k - 1` to passage `k`.
    pub fn chord(&self, c: &PolygonComplex, k: usize) -> Chord {
        Chord::new(c, self.entry(c, k), self.passages[k].clone())
    }

    pub fn chords(&self, c: &PolygonComplex) -> Vec<Chord> {
        (0..self.passages.len()).map(|k| self.chord(c, k)).collect()
    }

    /// Same curve traversed backwards.
    pub fn reversed(&self, c: &PolygonComplex) -> ChordCurve {
        ChordCurve::new(self.passages.iter().rev().map(|p| p.mirrored(c)).collect())
    }

    /// Every boundary point used by the curve, as seen from both sides.
    pub fn boundary_points(&self, c: &PolygonComplex) -> Vec<Passage> {
        self.passages
            .iter()
            .flat_map(|p| [p.clone(), p.mirrored(c)])
            .collect()
    }

    pub fn crossing_vector(&self, c: &PolygonComplex) -> Vec<i64> {
        crossing_vector_of(&self.passages, c)
    }

    /// Coordinates of the homology class in the complex's cycle basis.
    pub fn homology_class(&self, c: &PolygonComplex) -> Result<Vec<i64>> {
        homology_coordinates(&self.crossing_vector(c), c)
    }

    pub fn validate(&self, c: &PolygonComplex) -> Result<Diagnostics> {
        check_passages(&self.passages, c)?;
        let n = self.passages.len();
        if n == 0 {
            return Err(Error::InvalidCurve("curve has no passages".into()));
        }
        let mut defects = Vec::new();
        let mut closed = true;
        for k in 0..n {
            let entry = self.entry(c, k);
            if c.face_of(entry.side) != c.face_of(self.passages[k].side) {
                closed = false;
                defects.push(format!(
                    "passage {} leaves a face other than the one entered by passage {}",
                    k,
                    (k + n - 1) % n
                ));
            }
        }
        if closed {
            defects.extend(self_crossing_defects(&self.chords(c), c));
        }
        let simple = closed && defects.is_empty();
        Ok(Diagnostics {
            closed,
            simple,
            defects,
        })
    }

    /// Cancels immediate returns across a side that enclose no other point.
    pub fn normalize(&self, c: &PolygonComplex) -> ChordCurve {
        self.normalize_avoiding(c, &[])
    }

    /// Like [`normalize`](Self::normalize), but a return is only cancelled if no
    /// point of `obstacles` lies between its two ends either.
    pub fn normalize_avoiding(&self, c: &PolygonComplex, obstacles: &[Passage]) -> ChordCurve {
        let mut ps = self.passages.clone();
        'outer: loop {
            let n = ps.len();
            if n <= 2 {
                break;
            }
            for k in 0..n {
                let a = &ps[k];
                let b = &ps[(k + 1) % n];
                if b.side != c.partner(a.side) {
                    continue;
                }
                let landing = a.mirrored(c);
                let (lo, hi) = if landing.param < b.param {
                    (landing.param, b.param)
                } else {
                    (b.param, landing.param)
                };
                let blocked = ps
                    .iter()
                    .flat_map(|p| [p.clone(), p.mirrored(c)])
                    .chain(obstacles.iter().flat_map(|p| [p.clone(), p.mirrored(c)]))
                    .any(|p| p.side == b.side && p.param > lo && p.param < hi);
                if blocked {
                    continue;
                }
                let j = (k + 1) % n;
                let (first, second) = if k < j { (j, k) } else { (k, j) };
                ps.remove(first);
                ps.remove(second);
                continue 'outer;
            }
            break;
        }
        ChordCurve::new(ps)
    }

    pub fn display(&self, c: &PolygonComplex) -> String {
        passages_to_string(&self.passages, c)
    }
}

/// An arc between two anchor points lying on sides, crossing the sides in
/// between at `passages`. The first chord runs in the face of `start.side`,
/// the last one in the face of `end.side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordArc {
    pub start: Passage,
    pub passages: Vec<Passage>,
    pub end: Passage,
}

impl ChordArc {
    pub fn chords(&self, c: &PolygonComplex) -> Vec<Chord> {
        let mut out = Vec::with_capacity(self.passages.len() + 1);
        let mut from = self.start.clone();
        for p in &self.passages {
            out.push(Chord::new(c, from.clone(), p.clone()));
            from = p.mirrored(c);
        }
        out.push(Chord {
            face: c.face_of(self.end.side),
            from_key: boundary_key(c, from.side, from.param),
            to_key: boundary_key(c, self.end.side, self.end.param),
            from,
            to: self.end.clone(),
        });
        out
    }

    pub fn validate(&self, c: &PolygonComplex) -> Result<Diagnostics> {
        let mut all = self.passages.clone();
        all.push(self.start.clone());
        all.push(self.end.clone());
        check_passages(&all, c)?;
        let chords = self.chords(c);
        let mut defects = Vec::new();
        let mut closed = true;
        let mut face = c.face_of(self.start.side);
        for (k, p) in self.passages.iter().enumerate() {
            if c.face_of(p.side) != face {
                closed = false;
                defects.push(format!("passage {k} leaves a face it never entered"));
            }
            face = c.face_of(c.partner(p.side));
        }
        if face != c.face_of(self.end.side) {
            closed = false;
            defects.push("end anchor is not in the face of the last chord".into());
        }
        if closed {
            defects.extend(self_crossing_defects(&chords, c));
        }
        let simple = closed && defects.is_empty();
        Ok(Diagnostics {
            closed,
            simple,
            defects,
        })
    }

    pub fn boundary_points(&self, c: &PolygonComplex) -> Vec<Passage> {
        let mut out: Vec<Passage> = self
            .passages
            .iter()
            .flat_map(|p| [p.clone(), p.mirrored(c)])
            .collect();
        for a in [&self.start, &self.end] {
            out.push(a.clone());
            out.push(a.mirrored(c));
        }
        out
    }

    pub fn crossing_vector(&self, c: &PolygonComplex) -> Vec<i64> {
        crossing_vector_of(&self.passages, c)
    }
}

/// Outcome of [`ChordCurve::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub closed: bool,
    pub simple: bool,
    pub defects: Vec<String>,
}

fn check_passages(ps: &[Passage], c: &PolygonComplex) -> Result<()> {
    let zero = Param::from_integer(0);
    let one = Param::from_integer(1);
    let mut seen = std::collections::HashSet::new();
    for p in ps {
        if p.side >= c.side_count() {
            return Err(Error::InvalidCurve(format!("side {} out of range", p.side)));
        }
        if p.param <= zero || p.param >= one {
            return Err(Error::InvalidCurve(format!(
                "parameter {} outside (0,1)",
                p.param
            )));
        }
        if !seen.insert(p.surface_point(c)) {
            return Err(Error::DuplicateCrossing(passage_to_string(p, c)));
        }
    }
    Ok(())
}

fn self_crossing_defects(chords: &[Chord], c: &PolygonComplex) -> Vec<String> {
    let mut defects = Vec::new();
    for i in 0..chords.len() {
        for j in (i + 1)..chords.len() {
            if chords[i].crosses(&chords[j]) {
                defects.push(format!(
                    "face {}: chords {} and {} cross",
                    c.faces()[chords[i].face].name,
                    i,
                    j
                ));
            }
        }
    }
    defects
}

pub fn crossing_vector_of(ps: &[Passage], c: &PolygonComplex) -> Vec<i64> {
    let mut v = vec![0i64; c.label_count()];
    for p in ps {
        let li = c.label_of(p.side);
        v[li] += if p.side == c.positive_side(li) { 1 } else { -1 };
    }
    v
}

/// Pairs a cochain with the complex's homology basis.
pub fn homology_coordinates(cochain: &[i64], c: &PolygonComplex) -> Result<Vec<i64>> {
    let basis = c.homology_basis().ok_or(Error::NonOrientable)?;
    if cochain.len() != c.label_count() {
        return Err(Error::DimensionMismatch {
            expected: c.label_count(),
            found: cochain.len(),
        });
    }
    Ok(basis
        .iter()
        .map(|z| crate::linalg::dot(cochain, z))
        .collect())
}

pub fn passage_to_string(p: &Passage, c: &PolygonComplex) -> String {
    format!(
        "{}@{}/{}",
        c.token(p.side),
        p.param.numer(),
        p.param.denom()
    )
}

pub fn passages_to_string(ps: &[Passage], c: &PolygonComplex) -> String {
    ps.iter()
        .map(|p| passage_to_string(p, c))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "#{}@{}", self.side, self.param)
    }
}

/// The rational with the smallest denominator strictly between `lo` and `hi`.
pub fn simplest_between(lo: Param, hi: Param) -> Param {
    assert!(lo < hi && lo >= Param::from_integer(0), "bad interval");
    let (p, q) = (*lo.numer() as i128, *lo.denom() as i128);
    let (r, s) = (*hi.numer() as i128, *hi.denom() as i128);
    // Stern-Brocot descent with run-length steps; bounds a/b and c/d
    let (mut a, mut b, mut c, mut d) = (0i128, 1i128, 1i128, 0i128);
    loop {
        let (mn, md) = (a + c, b + d);
        if mn * q <= p * md {
            let k = (p * b - a * q).div_euclid(c * q - p * d).max(1);
            a += k * c;
            b += k * d;
        } else if mn * s >= r * md {
            let k = (c * s - r * d).div_euclid(r * b - a * s).max(1);
            c += k * a;
            d += k * b;
        } else {
            return Param::new(mn as i64, md as i64);
        }
    }
}
