//! Bounded depth-first searches for simple curves, for curves meeting a fixed
//! family exactly once, for dual arcs and for complete 1-systems.
//!
//! Candidates are built one passage at a time. A new passage goes into a gap
//! between the points already on a side, so every combinatorial position is
//! visited once; its parameter is the simplest rational in the gap. Lengths
//! are explored in increasing order, then sides and gaps in increasing order.

use std::cell::Cell;
use std::collections::HashSet;

use crate::complex::PolygonComplex;
use crate::curve::{
    boundary_key, interleaved, simplest_between, BoundaryKey, ChordArc, ChordCurve, Passage,
};
use crate::error::{Error, Result};
use crate::form::{class_mod2, Form2};
use crate::systems::{intersection_matrix, neighborhood_rank, CurveSystem};
use crate::Param;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_passages: usize,
    /// Every tentative passage counts as one node.
    pub max_nodes: u64,
}

impl SearchBudget {
    pub fn new(max_passages: usize, max_nodes: u64) -> Self {
        Self {
            max_passages,
            max_nodes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub curve: ChordCurve,
    pub null_homologous: bool,
}

/// Output of [`enumerate_simple_curves`]; `truncated` is set when the node
/// budget ran out before the enumeration finished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub candidates: Vec<Candidate>,
    pub truncated: bool,
    pub nodes: u64,
}

struct Meter {
    used: Cell<u64>,
    max: u64,
    hit: Cell<bool>,
}

impl Meter {
    fn new(max: u64) -> Self {
        Meter {
            used: Cell::new(0),
            max,
            hit: Cell::new(false),
        }
    }

    fn tick(&self) -> bool {
        let u = self.used.get();
        if u >= self.max {
            self.hit.set(true);
            return false;
        }
        self.used.set(u + 1);
        true
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Go,
    Stop,
}

type FaceChord = (usize, BoundaryKey, BoundaryKey);

/// Search state relative to a fixed family of obstacle curves.
struct Walker<'a> {
    c: &'a PolygonComplex,
    fixed: Vec<Vec<(usize, BoundaryKey, BoundaryKey)>>,
    points: Vec<Vec<Param>>,
    counts: Vec<usize>,
    /// Exact number of crossings required with every obstacle.
    want: Option<usize>,
    start: Option<Passage>,
    own: Vec<Passage>,
    chords: Vec<FaceChord>,
    seen: HashSet<Vec<(usize, usize)>>,
    meter: &'a Meter,
}

impl<'a> Walker<'a> {
    fn new(
        c: &'a PolygonComplex,
        obstacles: &[ChordCurve],
        want: Option<usize>,
        meter: &'a Meter,
    ) -> Self {
        let mut fixed = vec![Vec::new(); c.face_count()];
        let mut points = vec![Vec::new(); c.side_count()];
        for (i, cv) in obstacles.iter().enumerate() {
            for ch in cv.chords(c) {
                fixed[ch.face].push((i, ch.from_key, ch.to_key));
            }
            for p in cv.boundary_points(c) {
                points[p.side].push(p.param);
            }
        }
        for ps in &mut points {
            ps.sort();
        }
        Walker {
            c,
            fixed,
            points,
            counts: vec![0; obstacles.len()],
            want,
            start: None,
            own: Vec::new(),
            chords: Vec::new(),
            seen: HashSet::new(),
            meter,
        }
    }

    fn reset(&mut self) {
        debug_assert!(self.own.is_empty() && self.start.is_none());
        self.seen.clear();
    }

    fn key(&self, p: &Passage) -> BoundaryKey {
        boundary_key(self.c, p.side, p.param)
    }

    fn insert(&mut self, p: &Passage) {
        for q in [p.clone(), p.mirrored(self.c)] {
            let v = &mut self.points[q.side];
            let i = v.partition_point(|x| *x < q.param);
            v.insert(i, q.param);
        }
    }

    fn remove(&mut self, p: &Passage) {
        for q in [p.clone(), p.mirrored(self.c)] {
            let v = &mut self.points[q.side];
            let i = v.partition_point(|x| *x < q.param);
            v.remove(i);
        }
    }

    /// Gaps on side `s` as `(lo, hi, chosen parameter)`.
    fn slots(&self, s: usize) -> Vec<(Param, Param, Param)> {
        let v = &self.points[s];
        let zero = Param::from_integer(0);
        let one = Param::from_integer(1);
        (0..=v.len())
            .map(|j| {
                let lo = if j == 0 { zero } else { v[j - 1] };
                let hi = if j == v.len() { one } else { v[j] };
                (lo, hi, simplest_between(lo, hi))
            })
            .collect()
    }

    fn rank(&self, p: &Passage) -> usize {
        self.points[p.side].partition_point(|x| *x < p.param)
    }

    /// Obstacles crossed by a new chord, or `None` if it crosses the curve
    /// under construction.
    fn crossings(&self, face: usize, a: &BoundaryKey, b: &BoundaryKey) -> Option<Vec<usize>> {
        if self
            .chords
            .iter()
            .any(|(f, u, v)| *f == face && interleaved(a, b, u, v))
        {
            return None;
        }
        Some(
            self.fixed[face]
                .iter()
                .filter(|(_, u, v)| interleaved(a, b, u, v))
                .map(|(i, _, _)| *i)
                .collect(),
        )
    }

    fn add_counts(&mut self, hit: &[usize]) -> bool {
        for &i in hit {
            self.counts[i] += 1;
        }
        match self.want {
            Some(w) => hit.iter().all(|&i| self.counts[i] <= w),
            None => true,
        }
    }

    fn sub_counts(&mut self, hit: &[usize]) {
        for &i in hit {
            self.counts[i] -= 1;
        }
    }

    fn counts_final(&self) -> bool {
        match self.want {
            Some(w) => self.counts.iter().all(|&x| x == w),
            None => true,
        }
    }

    fn between_empty(&self, side: usize, a: Param, b: Param) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        !self.points[side].iter().any(|x| *x > lo && *x < hi)
    }

    /// Sides a chord starting at `entry` may end on.
    fn face_sides(&self, entry: &Passage) -> Vec<usize> {
        let f = self.c.face_of(entry.side);
        (0..self.c.face_len(f))
            .map(|pos| self.c.side_at(f, pos))
            .collect()
    }

    /// Closed curves of exactly `n` passages. The first passage is the
    /// smallest one, which fixes the starting point of the cycle.
    fn closed(&mut self, n: usize, emit: &mut dyn FnMut(&ChordCurve) -> Flow) -> Flow {
        let k = self.own.len();
        let sides: Vec<usize> = if k == 0 {
            (0..self.c.side_count()).collect()
        } else {
            let entry = self.own[k - 1].mirrored(self.c);
            self.face_sides(&entry)
        };
        for s in sides {
            if k > 0 && s < self.own[0].side {
                continue;
            }
            for (lo, hi, t) in self.slots(s) {
                if k > 0 && s == self.own[0].side && t < self.own[0].param {
                    continue;
                }
                let p = Passage::new(s, t);
                let mut hit = Vec::new();
                let mut chord = None;
                if k > 0 {
                    let entry = self.own[k - 1].mirrored(self.c);
                    if entry.side == s && (entry.param == lo || entry.param == hi) {
                        continue;
                    }
                    if !self.meter.tick() {
                        return Flow::Stop;
                    }
                    let face = self.c.face_of(s);
                    let (a, b) = (self.key(&entry), self.key(&p));
                    match self.crossings(face, &a, &b) {
                        Some(h) => hit = h,
                        None => continue,
                    }
                    chord = Some((face, a, b));
                } else if !self.meter.tick() {
                    return Flow::Stop;
                }
                let ok = self.add_counts(&hit);
                if ok {
                    self.own.push(p.clone());
                    self.insert(&p);
                    let pushed = chord.is_some();
                    if let Some(ch) = chord {
                        self.chords.push(ch);
                    }
                    let flow = if k + 1 == n {
                        self.close(emit)
                    } else {
                        self.closed(n, emit)
                    };
                    if pushed {
                        self.chords.pop();
                    }
                    self.remove(&p);
                    self.own.pop();
                    if flow == Flow::Stop {
                        self.sub_counts(&hit);
                        return Flow::Stop;
                    }
                }
                self.sub_counts(&hit);
            }
        }
        Flow::Go
    }

    fn close(&mut self, emit: &mut dyn FnMut(&ChordCurve) -> Flow) -> Flow {
        let c = self.c;
        let first = self.own[0].clone();
        let entry = self.own[self.own.len() - 1].mirrored(c);
        if c.face_of(entry.side) != c.face_of(first.side) {
            return Flow::Go;
        }
        if entry.side == first.side && self.between_empty(first.side, entry.param, first.param) {
            return Flow::Go;
        }
        let face = c.face_of(first.side);
        let Some(hit) = self.crossings(face, &self.key(&entry), &self.key(&first)) else {
            return Flow::Go;
        };
        self.add_counts(&hit);
        let mut flow = Flow::Go;
        if self.counts_final() {
            let key = self.canonical_key();
            if self.seen.insert(key) {
                flow = emit(&ChordCurve::new(self.own.clone()));
            }
        }
        self.sub_counts(&hit);
        flow
    }

    /// Smallest rotation of the curve in either direction, written as
    /// (side, rank of the point among all points on that side).
    fn canonical_key(&self) -> Vec<(usize, usize)> {
        let fwd: Vec<(usize, usize)> = self.own.iter().map(|p| (p.side, self.rank(p))).collect();
        let back: Vec<(usize, usize)> = self
            .own
            .iter()
            .rev()
            .map(|p| {
                let m = p.mirrored(self.c);
                (m.side, self.rank(&m))
            })
            .collect();
        let n = fwd.len();
        let mut best: Option<Vec<(usize, usize)>> = None;
        for seq in [fwd, back] {
            for r in 0..n {
                let rot: Vec<(usize, usize)> = seq[r..].iter().chain(&seq[..r]).copied().collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Arcs with exactly `n` passages between two anchors.
    fn arcs(&mut self, n: usize, emit: &mut dyn FnMut(&ChordArc) -> Flow) -> Flow {
        let Some(start) = self.start.clone() else {
            for s in 0..self.c.side_count() {
                for (_, _, t) in self.slots(s) {
                    if !self.meter.tick() {
                        return Flow::Stop;
                    }
                    let a = Passage::new(s, t);
                    self.start = Some(a.clone());
                    self.insert(&a);
                    let flow = self.arcs(n, emit);
                    self.remove(&a);
                    self.start = None;
                    if flow == Flow::Stop {
                        return Flow::Stop;
                    }
                }
            }
            return Flow::Go;
        };
        let entry = match self.own.last() {
            Some(p) => p.mirrored(self.c),
            None => start.clone(),
        };
        let last = self.own.len() == n;
        for s in self.face_sides(&entry) {
            for (lo, hi, t) in self.slots(s) {
                if entry.side == s && (entry.param == lo || entry.param == hi) {
                    continue;
                }
                if !self.meter.tick() {
                    return Flow::Stop;
                }
                let p = Passage::new(s, t);
                let face = self.c.face_of(s);
                let (a, b) = (self.key(&entry), self.key(&p));
                let Some(hit) = self.crossings(face, &a, &b) else {
                    continue;
                };
                let ok = self.add_counts(&hit);
                let mut flow = Flow::Go;
                if ok && last {
                    if self.counts_final() {
                        flow = emit(&ChordArc {
                            start: start.clone(),
                            passages: self.own.clone(),
                            end: p,
                        });
                    }
                } else if ok {
                    self.own.push(p.clone());
                    self.insert(&p);
                    self.chords.push((face, a, b));
                    flow = self.arcs(n, emit);
                    self.chords.pop();
                    self.remove(&p);
                    self.own.pop();
                }
                self.sub_counts(&hit);
                if flow == Flow::Stop {
                    return Flow::Stop;
                }
            }
        }
        Flow::Go
    }
}

/// Runs `emit` on every simple closed curve of at most `max_passages`
/// passages meeting each obstacle exactly `want` times (any number if
/// `None`), shortest first.
fn each_curve(
    c: &PolygonComplex,
    obstacles: &[ChordCurve],
    want: Option<usize>,
    max_passages: usize,
    meter: &Meter,
    emit: &mut dyn FnMut(&ChordCurve) -> Flow,
) -> Flow {
    let mut w = Walker::new(c, obstacles, want, meter);
    for n in 1..=max_passages {
        w.reset();
        if w.closed(n, emit) == Flow::Stop {
            return Flow::Stop;
        }
    }
    Flow::Go
}

fn is_null(cv: &ChordCurve, c: &PolygonComplex) -> Result<bool> {
    Ok(cv.homology_class(c)?.iter().all(|&x| x == 0))
}

/// Every simple closed curve with at most `max_passages` passages, one per
/// combinatorial class, shortest first.
pub fn enumerate_simple_curves(c: &PolygonComplex, b: SearchBudget) -> Result<Enumeration> {
    if !c.is_orientable() {
        return Err(Error::NonOrientable);
    }
    let meter = Meter::new(b.max_nodes);
    let mut out = Vec::new();
    each_curve(c, &[], None, b.max_passages, &meter, &mut |cv| {
        out.push(cv.clone());
        Flow::Go
    });
    let candidates = out
        .into_iter()
        .map(|curve| {
            let null_homologous = is_null(&curve, c)?;
            Ok(Candidate {
                curve,
                null_homologous,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Enumeration {
        candidates,
        truncated: meter.hit.get(),
        nodes: meter.used.get(),
    })
}

/// Simple closed curves meeting every curve of `fixed` exactly once.
pub fn curves_meeting_once(
    c: &PolygonComplex,
    fixed: &[ChordCurve],
    b: SearchBudget,
) -> Result<Enumeration> {
    let meter = Meter::new(b.max_nodes);
    let mut out = Vec::new();
    each_curve(c, fixed, Some(1), b.max_passages, &meter, &mut |cv| {
        out.push(Candidate {
            curve: cv.clone(),
            null_homologous: false,
        });
        Flow::Go
    });
    Ok(Enumeration {
        candidates: out,
        truncated: meter.hit.get(),
        nodes: meter.used.get(),
    })
}

fn named(prefix: &str, curves: &[ChordCurve], from: usize) -> Vec<(String, ChordCurve)> {
    curves
        .iter()
        .enumerate()
        .map(|(i, cv)| (format!("{prefix}{}", from + i + 1), cv.clone()))
        .collect()
}

/// First triple of pairwise once-meeting curves whose union has
/// neighbourhood rank 4. The first curve runs over essential curves in
/// enumeration order, the second over curves meeting it once, the third
/// over curves meeting both once.
pub fn search_obstructed_triple(c: &PolygonComplex, b: SearchBudget) -> Result<CurveSystem> {
    if !c.is_orientable() {
        return Err(Error::NonOrientable);
    }
    if c.genus().unwrap_or(0) < 2 {
        // the rank is at most the rank of the surface's homology
        return Err(Error::NotFound);
    }
    let meter = Meter::new(b.max_nodes);
    let mut found: Option<CurveSystem> = None;
    let mut failure: Option<Error> = None;
    each_curve(c, &[], None, b.max_passages, &meter, &mut |c1| {
        match is_null(c1, c) {
            Ok(false) => {}
            Ok(true) => return Flow::Go,
            Err(e) => {
                failure = Some(e);
                return Flow::Stop;
            }
        }
        let first = [c1.clone()];
        each_curve(c, &first, Some(1), b.max_passages, &meter, &mut |c2| {
            let pair = [c1.clone(), c2.clone()];
            each_curve(c, &pair, Some(1), b.max_passages, &meter, &mut |c3| {
                let curves = [c1.clone(), c2.clone(), c3.clone()];
                let sys = match CurveSystem::new(c.clone(), named("w", &curves, 0)) {
                    Ok(s) => s,
                    Err(e) => {
                        failure = Some(e);
                        return Flow::Stop;
                    }
                };
                match neighborhood_rank(&sys) {
                    Ok(4) => {
                        found = Some(sys);
                        Flow::Stop
                    }
                    Ok(_) => Flow::Go,
                    Err(e) => {
                        failure = Some(e);
                        Flow::Stop
                    }
                }
            })
        })
    });
    if let Some(e) = failure {
        return Err(e);
    }
    found.ok_or(Error::NotFound)
}

/// Extends a complete 1-system by curves meeting every chosen curve exactly
/// once until it has `target` members.
///
/// The homology classes mod 2 of a complete 1-system are distinct and meet
/// pairwise oddly under the intersection form, so a branch is cut as soon
/// as the form admits too few such classes. Within one level, a homology
/// class that already failed is not tried again in another position.
pub fn extend_to_complete_system(
    seed: &CurveSystem,
    target: usize,
    b: SearchBudget,
) -> Result<CurveSystem> {
    let c = &seed.complex;
    let report = intersection_matrix(seed)?;
    if !report.complete1 && seed.len() > 1 {
        return Err(Error::NotPairwiseOnce(
            "seed is not a complete 1-system".into(),
        ));
    }
    let form = Form2::new(c)?;
    let classes = seed
        .curves
        .iter()
        .map(|cv| class_mod2(&cv.crossing_vector(c), c))
        .collect::<Result<Vec<_>>>()?;
    if seed.len() < target && form.max_odd_extension(&classes) < target - seed.len() {
        return Err(Error::NotFound);
    }
    let meter = Meter::new(b.max_nodes);
    let mut state = Grow {
        c,
        form: &form,
        target,
        max_passages: b.max_passages,
        meter: &meter,
        curves: seed.curves.clone(),
        classes,
    };
    let Some(curves) = state.grow()? else {
        return Err(if meter.hit.get() {
            Error::BudgetExceeded {
                nodes: meter.used.get(),
            }
        } else {
            Error::NotFound
        });
    };
    let mut all = seed.named();
    all.extend(named("w", &curves[seed.len()..], seed.len()));
    let sys = CurveSystem::new(c.clone(), all)?;
    let r = intersection_matrix(&sys)?;
    if !r.complete1 || sys.len() != target {
        return Err(Error::Internal("extension failed verification".into()));
    }
    Ok(sys)
}

struct Grow<'a> {
    c: &'a PolygonComplex,
    form: &'a Form2,
    target: usize,
    max_passages: usize,
    meter: &'a Meter,
    curves: Vec<ChordCurve>,
    classes: Vec<u64>,
}

impl Grow<'_> {
    fn grow(&mut self) -> Result<Option<Vec<ChordCurve>>> {
        if self.curves.len() >= self.target {
            return Ok(Some(self.curves.clone()));
        }
        let need = self.target - self.curves.len() - 1;
        let fixed = self.curves.clone();
        let c = self.c;
        let mut failed: HashSet<Vec<i64>> = HashSet::new();
        let mut result: Result<Option<Vec<ChordCurve>>> = Ok(None);
        each_curve(
            c,
            &fixed,
            Some(1),
            self.max_passages,
            self.meter,
            &mut |cv| {
                let step = (|| -> Result<Option<Vec<ChordCurve>>> {
                    let mut h = cv.homology_class(c)?;
                    if h.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                        h.iter_mut().for_each(|x| *x = -*x);
                    }
                    if failed.contains(&h) {
                        return Ok(None);
                    }
                    let class = class_mod2(&cv.crossing_vector(c), c)?;
                    let mut classes = self.classes.clone();
                    classes.push(class);
                    if self.form.max_odd_extension(&classes) < need {
                        failed.insert(h);
                        return Ok(None);
                    }
                    self.curves.push(cv.clone());
                    self.classes.push(class);
                    let r = self.grow();
                    self.curves.pop();
                    self.classes.pop();
                    if matches!(r, Ok(None)) && !self.meter.hit.get() {
                        failed.insert(h);
                    }
                    r
                })();
                match step {
                    Ok(None) => {
                        if self.meter.hit.get() {
                            Flow::Stop
                        } else {
                            Flow::Go
                        }
                    }
                    other => {
                        result = other;
                        Flow::Stop
                    }
                }
            },
        );
        result
    }
}

/// First simple arc meeting every curve of the system exactly once, with
/// fewest passages.
pub fn find_dual_arc(sys: &CurveSystem, b: SearchBudget) -> Result<ChordArc> {
    let meter = Meter::new(b.max_nodes);
    let mut w = Walker::new(&sys.complex, &sys.curves, Some(1), &meter);
    let mut found = None;
    for n in 0..=b.max_passages {
        let flow = w.arcs(n, &mut |arc| {
            found = Some(arc.clone());
            Flow::Stop
        });
        if flow == Flow::Stop {
            break;
        }
    }
    found.ok_or(Error::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_surface;
    use crate::torus::{slope_curve, square_torus};

    #[test]
    fn torus_short_curves_cover_the_unit_slopes() {
        let c = square_torus();
        let e = enumerate_simple_curves(&c, SearchBudget::new(2, 1_000_000)).unwrap();
        assert!(!e.truncated);
        let mut classes: Vec<Vec<i64>> = e
            .candidates
            .iter()
            .map(|k| {
                let mut h = k.curve.homology_class(&c).unwrap();
                if h.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    h.iter_mut().for_each(|x| *x = -*x);
                }
                h
            })
            .collect();
        classes.sort();
        classes.dedup();
        for (p, q) in [(1, 0), (0, 1), (1, 1), (1, -1)] {
            let mut h = slope_curve(p, q).unwrap().homology_class(&c).unwrap();
            if h.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                h.iter_mut().for_each(|x| *x = -*x);
            }
            assert!(classes.contains(&h), "({p},{q})");
        }
        for k in &e.candidates {
            let d = k.curve.validate(&c).unwrap();
            assert!(d.closed && d.simple);
        }
        let none = enumerate_simple_curves(&c, SearchBudget::new(0, 1000)).unwrap();
        assert!(none.candidates.is_empty());
    }

    #[test]
    fn enumeration_is_deterministic_and_flags_truncation() {
        let c = parse_surface("face F: a b a' b' c d c' d'").unwrap();
        let b = SearchBudget::new(3, 1_000_000);
        let x = enumerate_simple_curves(&c, b).unwrap();
        assert_eq!(x, enumerate_simple_curves(&c, b).unwrap());
        let cut = enumerate_simple_curves(&c, SearchBudget::new(3, 10)).unwrap();
        assert!(cut.truncated);
        assert!(cut.candidates.len() < x.candidates.len());
    }

    #[test]
    fn torus_has_no_obstructed_triple() {
        let c = square_torus();
        assert_eq!(
            search_obstructed_triple(&c, SearchBudget::new(3, 100_000)),
            Err(Error::NotFound)
        );
        let g2 = parse_surface("face F: a b a' b' c d c' d'").unwrap();
        assert_eq!(
            search_obstructed_triple(&g2, SearchBudget::new(3, 0)),
            Err(Error::NotFound)
        );
    }

    #[test]
    fn torus_meridian_completes_to_three() {
        let c = square_torus();
        let m = slope_curve(1, 0).unwrap();
        let seed = CurveSystem::new(c, vec![("m".into(), m)]).unwrap();
        let sys = extend_to_complete_system(&seed, 3, SearchBudget::new(2, 100_000)).unwrap();
        assert_eq!(sys.len(), 3);
        assert_eq!(
            extend_to_complete_system(&seed, 4, SearchBudget::new(2, 100_000)),
            Err(Error::NotFound)
        );
    }

    #[test]
    fn dual_arc_to_a_torus_curve() {
        let c = square_torus();
        let m = slope_curve(1, 0).unwrap();
        let sys = CurveSystem::new(c.clone(), vec![("m".into(), m.clone())]).unwrap();
        let arc = find_dual_arc(&sys, SearchBudget::new(2, 10_000)).unwrap();
        assert!(arc.validate(&c).unwrap().simple);
        assert!(arc.passages.is_empty());
        let pts: usize = arc
            .chords(&c)
            .iter()
            .map(|a| m.chords(&c).iter().filter(|b| a.crosses(b)).count())
            .sum();
        assert_eq!(pts, 1);
        assert_eq!(
            find_dual_arc(&sys, SearchBudget::new(2, 0)),
            Err(Error::NotFound)
        );
    }
}
