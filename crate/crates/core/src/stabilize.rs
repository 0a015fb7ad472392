//! Handle attachment along a dual arc.
//!
//! A small disk is removed around each endpoint of the arc and an annulus is
//! glued to the two boundary circles. Combinatorially the edge carrying an
//! endpoint is split there, the new vertex is blown up into a circle of two
//! hole edges, and the annulus enters as one rectangular face cut along a
//! new edge `m`. Two new curves follow the arc outside the annulus and close
//! up inside it, the second one winding once around the annulus core.

use std::collections::HashSet;

use crate::arrangement::arc_crossing_count;
use crate::complex::{EdgeToken, Face, PolygonComplex};
use crate::construct::label_name;
use crate::curve::{simplest_between, ChordArc, ChordCurve, Passage};
use crate::error::{Error, Result};
use crate::systems::{intersection_matrix, CurveSystem};
use crate::Param;

#[derive(Clone, Debug)]
struct Loc {
    face: usize,
    pos: usize,
    param: Param,
}

/// Faces under construction, with every point of interest tracked through
/// the edits.
struct Draft {
    faces: Vec<Face>,
    pts: Vec<Loc>,
    used: HashSet<String>,
}

impl Draft {
    fn fresh(&mut self) -> String {
        let name = (0..)
            .map(label_name)
            .find(|l| !self.used.contains(l))
            .expect("labels are unbounded");
        self.used.insert(name.clone());
        name
    }

    fn find(&self, label: &str, inverted: bool) -> (usize, usize) {
        for (f, face) in self.faces.iter().enumerate() {
            for (p, t) in face.tokens.iter().enumerate() {
                if t.label == label && t.inverted == inverted {
                    return (f, p);
                }
            }
        }
        unreachable!("token {label} is present")
    }

    fn insert_after(&mut self, label: &str, inverted: bool, tok: EdgeToken) {
        let (f, p) = self.find(label, inverted);
        self.faces[f].tokens.insert(p + 1, tok);
        for pt in &mut self.pts {
            if pt.face == f && pt.pos > p {
                pt.pos += 1;
            }
        }
    }

    /// Splits the side at `loc` into `x y` and its partner into `y' x'`,
    /// shifting every tracked point onto the piece it lies on.
    fn split(&mut self, loc: &Loc, y: &str) -> EdgeToken {
        let (f, p, t) = (loc.face, loc.pos, loc.param);
        let one = Param::from_integer(1);
        let tok = self.faces[f].tokens[p].clone();
        self.faces[f]
            .tokens
            .insert(p + 1, EdgeToken::new(y, tok.inverted));
        for pt in &mut self.pts {
            if pt.face == f && pt.pos > p {
                pt.pos += 1;
            } else if pt.face == f && pt.pos == p {
                if pt.param > t {
                    pt.pos = p + 1;
                    pt.param = (pt.param - t) / (one - t);
                } else {
                    pt.param /= t;
                }
            }
        }
        let (g, q) = self.find(&tok.label, !tok.inverted);
        self.faces[g].tokens[q] = EdgeToken::new(y, !tok.inverted);
        self.faces[g].tokens.insert(q + 1, tok.inverse());
        let s = one - t;
        for pt in &mut self.pts {
            if pt.face == g && pt.pos > q {
                pt.pos += 1;
            } else if pt.face == g && pt.pos == q {
                if pt.param > s {
                    pt.pos = q + 1;
                    pt.param = (pt.param - s) / t;
                } else {
                    pt.param /= s;
                }
            }
        }
        tok
    }

    /// Blows up the point at `loc` into a hole bounded by two new edges. The
    /// first one lies in the face of `loc`.
    fn hole(&mut self, loc: &Loc) -> (String, String) {
        let y = self.fresh();
        let x = self.split(loc, &y);
        let (h1, h2) = (self.fresh(), self.fresh());
        self.insert_after(&x.label, x.inverted, EdgeToken::new(&h1, false));
        self.insert_after(&y, !x.inverted, EdgeToken::new(&h2, false));
        (h1, h2)
    }
}

fn locate(c: &PolygonComplex, p: &Passage) -> Loc {
    let s = c.side(p.side);
    Loc {
        face: s.face,
        pos: s.pos,
        param: p.param,
    }
}

fn check_dual(sys: &CurveSystem, arc: &ChordArc) -> Result<()> {
    let c = &sys.complex;
    let d = arc.validate(c)?;
    if !d.simple {
        return Err(Error::ArcNotDual(d.defects.join("; ")));
    }
    let mut used = HashSet::new();
    for cv in &sys.curves {
        for p in &cv.passages {
            used.insert(p.surface_point(c));
        }
    }
    for p in arc.passages.iter().chain([&arc.start, &arc.end]) {
        if used.contains(&p.surface_point(c)) {
            return Err(Error::ArcNotDual(format!(
                "arc shares the point {}",
                crate::curve::passage_to_string(p, c)
            )));
        }
    }
    for (name, cv) in sys.names.iter().zip(&sys.curves) {
        let n = arc_crossing_count(arc, cv, c);
        if n != 1 {
            return Err(Error::ArcNotDual(format!("arc meets {name} {n} times")));
        }
    }
    Ok(())
}

/// Parallel copy of a passage sequence, pushed to the left of its direction
/// of travel into the gap below `bound` (or below the next point on the
/// side when `bound` is `None`).
fn push_left(ps: &[Passage], bound: Option<&[Passage]>, points: &[Vec<Param>]) -> Vec<Passage> {
    let one = Param::from_integer(1);
    ps.iter()
        .enumerate()
        .map(|(i, p)| {
            let hi = match bound {
                Some(b) => b[i].param,
                None => points[p.side]
                    .iter()
                    .copied()
                    .filter(|x| *x > p.param)
                    .min()
                    .unwrap_or(one),
            };
            Passage::new(p.side, simplest_between(p.param, hi))
        })
        .collect()
}

fn fresh_name(names: &[String], n: usize) -> String {
    let mut k = n;
    loop {
        let cand = format!("w{k}");
        if !names.contains(&cand) {
            return cand;
        }
        k += 1;
    }
}

/// Attaches a handle along `arc` and extends the system by two curves.
/// Returns the new system, on the new surface, with a dual arc for it.
pub fn stabilize(sys: &CurveSystem, arc: &ChordArc) -> Result<(CurveSystem, ChordArc)> {
    let c = &sys.complex;
    let genus = c.genus().ok_or(Error::NonOrientable)?;
    check_dual(sys, arc)?;

    let mut pts = Vec::new();
    for cv in &sys.curves {
        pts.extend(cv.passages.iter().map(|p| locate(c, p)));
    }
    let arc_at = pts.len();
    pts.extend(arc.passages.iter().map(|p| locate(c, p)));
    let anchors = pts.len();
    pts.push(locate(c, &arc.start));
    pts.push(locate(c, &arc.end));
    let mut draft = Draft {
        faces: c.faces().to_vec(),
        pts,
        used: c.labels().iter().cloned().collect(),
    };
    let a = draft.pts[anchors].clone();
    let (h1, h2) = draft.hole(&a);
    let b = draft.pts[anchors + 1].clone();
    let (k1, k2) = draft.hole(&b);
    let m = draft.fresh();
    let inv = |l: &str| EdgeToken::new(l, true);
    let annulus = Face {
        name: format!("A{}", genus + 1),
        tokens: vec![
            inv(&h2),
            inv(&h1),
            EdgeToken::new(&m, false),
            inv(&k2),
            inv(&k1),
            inv(&m),
        ],
    };
    draft.faces.push(annulus);
    let nc = PolygonComplex::new(format!("{}_g{}", c.name(), genus + 1), draft.faces)?;
    let at = |l: &Loc| Passage::new(nc.side_at(l.face, l.pos), l.param);

    let mut named = Vec::new();
    let mut off = 0;
    for (name, cv) in sys.names.iter().zip(&sys.curves) {
        let ps = draft.pts[off..off + cv.len()].iter().map(at).collect();
        off += cv.len();
        named.push((name.clone(), ChordCurve::new(ps)));
    }
    let gamma: Vec<Passage> = draft.pts[arc_at..anchors].iter().map(at).collect();

    let mut points = vec![Vec::new(); nc.side_count()];
    for p in named
        .iter()
        .flat_map(|(_, cv)| cv.boundary_points(&nc))
        .chain(gamma.iter().flat_map(|p| [p.clone(), p.mirrored(&nc)]))
    {
        points[p.side].push(p.param);
    }
    let gamma2 = push_left(&gamma, None, &points);
    let gamma3 = push_left(&gamma, Some(&gamma2), &points);

    let side = |l: &str| {
        nc.find_side(&EdgeToken::new(l, false))
            .expect("hole edge exists")
    };
    let (h_out, k_out) = (side(&h1), side(&k1));
    let m_side = side(&m);
    let q = |n, d| Param::new(n, d);
    let into = |s: usize, t: Param| Passage::new(s, t).mirrored(&nc);

    let mut psi1 = vec![into(h_out, q(1, 2))];
    psi1.extend(gamma.iter().cloned());
    psi1.push(Passage::new(k_out, q(1, 3)));
    let mut psi2 = vec![into(h_out, q(1, 4))];
    psi2.extend(gamma2);
    psi2.push(Passage::new(k_out, q(2, 3)));
    psi2.push(Passage::new(m_side, q(1, 2)));
    let mut theta = vec![into(h_out, q(1, 3))];
    theta.extend(gamma3);
    let next_arc = ChordArc {
        start: into(k_out, q(1, 4)),
        passages: theta,
        end: Passage::new(k_out, q(1, 2)),
    };

    let names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
    let n1 = fresh_name(&names, sys.len() + 1);
    let n2 = fresh_name(&[names.clone(), vec![n1.clone()]].concat(), sys.len() + 2);
    named.push((n1, ChordCurve::new(psi1)));
    named.push((n2, ChordCurve::new(psi2)));
    let out = CurveSystem::new(nc, named)?;

    if out.complex.genus() != Some(genus + 1) {
        return Err(Error::Internal(
            "handle did not raise the genus by one".into(),
        ));
    }
    let r = intersection_matrix(&out)?;
    let before = intersection_matrix(sys)?;
    let n = sys.len();
    for i in 0..n {
        for j in 0..n {
            if r.matrix[i][j] != before.matrix[i][j] {
                return Err(Error::Internal("old intersection numbers changed".into()));
            }
        }
        if r.matrix[i][n] != 1 || r.matrix[i][n + 1] != 1 {
            return Err(Error::Internal(
                "new curves do not meet every curve once".into(),
            ));
        }
    }
    if r.matrix[n][n + 1] != 1 {
        return Err(Error::Internal(
            "the two new curves do not meet once".into(),
        ));
    }
    check_dual(&out, &next_arc)
        .map_err(|e| Error::Internal(format!("new arc is not dual: {e}")))?;
    Ok((out, next_arc))
}
